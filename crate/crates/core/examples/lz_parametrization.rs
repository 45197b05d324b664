//! c1..c4 from (c1, mu, rho, psi): Toeplitz validity, H31 routes and domination by theta.
use hankel_core::caratheodory::{h31_lz, lz_expand, toeplitz_psd_check, LzParams};
use hankel_core::cli::lz_check_rows;
use hankel_core::coefficients::h31_from_c;
use hankel_core::scalar::{rat, real};
use num_complex::Complex;

fn main() -> hankel_core::error::Result<()> {
    // Exact evaluation at a rational parameter point.
    let p = LzParams::new(
        rat(1, 2),
        Complex::new(rat(1, 3), rat(-1, 4)),
        Complex::new(rat(0, 1), rat(1, 2)),
        real(rat(3, 5)),
    )?;
    let c = lz_expand(&p);
    println!("c = {:?}", c.as_slice().iter().map(|z| format!("{} + {}i", z.re, z.im)).collect::<Vec<_>>());
    println!("parametric H31 = {}", h31_lz(&p));
    println!("from c         = {}", h31_from_c(&c)?);
    println!("psd: {:?}", toeplitz_psd_check(&c));

    let rows = lz_check_rows(0, 10_000, false)?;
    let worst = rows.iter().map(|r| r.domination_margin).fold(f64::INFINITY, f64::min);
    let gap = rows.iter().map(|r| r.route_gap).fold(0.0, f64::max);
    println!("10000 random draws: max route gap {gap:.1e}, min theta - 8640|H| = {worst:.3e}");
    Ok(())
}
