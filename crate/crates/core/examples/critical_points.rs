//! Newton search for critical points of theta restricted to w = 1.
use hankel_core::critical::{g3, g3_critical_points, NewtonConfig};
use hankel_core::theta::{dtheta_dw_raw, w_root};

fn main() -> hankel_core::error::Result<()> {
    let search = g3_critical_points(&NewtonConfig::default());
    for p in &search.isolated {
        println!("({:+.6}, {:+.6})  g3 = {:.6}  |grad| = {:.1e}  hits = {}", p.u, p.v, g3(p.u, p.v), p.grad_norm, p.hits);
    }
    println!("degenerate (u = ±2): {}, failed seeds: {}", search.degenerate.len(), search.failures.len());
    println!("interior to (0,2)x(0,1): {}", search.interior_to_unit_face().len());

    // The w-stationary point lies outside the box.
    for (u, v) in [(0.5, 0.5), (1.5, 0.2), (1.0, 0.9)] {
        let w = w_root(&u, &v)?;
        println!("w_root({u}, {v}) = {w:.6}, dtheta/dw there = {:.1e}", dtheta_dw_raw(&u, &v, &w));
    }
    Ok(())
}
