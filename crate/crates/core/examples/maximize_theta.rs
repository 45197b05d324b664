//! Global maximum of theta over [0,2]x[0,1]x[0,1], with the per-region table.
//!
//! Usage: cargo run --release --example maximize_theta -- [grid] [refine]
use hankel_core::search::{bound_from_max, grid_maximize, GridSearch, SearchBox};

fn main() -> hankel_core::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let grid = args.next().and_then(|s| s.parse().ok()).unwrap_or(64);
    let refine = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);

    let report = grid_maximize(grid, refine)?;
    println!("{}", report.to_record());
    for (case, max) in report.case_table() {
        println!("  {case:<6} {max:.12}");
    }
    println!("bound = {}", bound_from_max(&report));

    let sub = GridSearch::new(32, 20)?
        .within(SearchBox::new([1.0, 0.0, 0.0], [2.0, 1.0, 1.0])?)
        .run();
    println!("max on u in [1,2]: {:.12} at {:?}", sub.global_max, sub.primary_argmax.coords());
    Ok(())
}
