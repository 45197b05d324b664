//! Empirical check of |H31| <= 1/36 over random Herglotz measures.
//!
//! Usage: cargo run --release --example herglotz_sampling -- [count] [seed]
use hankel_core::cli::herglotz_pipeline;

fn main() -> hankel_core::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);

    let samples = herglotz_pipeline(seed, count, 6)?;
    let best = samples
        .iter()
        .max_by(|a, b| a.h.norm().total_cmp(&b.h.norm()))
        .expect("witnesses are always present");
    println!("{} measures, max |H31| = {:.15} ({})", samples.len(), best.h.norm(), best.label);
    println!("1/36              = {:.15}", 1.0 / 36.0);

    let random_best = samples[3..].iter().map(|s| s.h.norm()).fold(0.0, f64::max);
    println!("best random draw  = {random_best:.15}");
    Ok(())
}
