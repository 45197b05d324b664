//! Truncated power series: products, composition and reversion, exact and floating.
use hankel_core::coefficients::{inverse_by_reversion, inverse_from_schlicht, SchlichtCoeffs};
use hankel_core::scalar::{rat, ExactScalar};
use hankel_core::series::TruncatedSeries;

fn main() -> hankel_core::error::Result<()> {
    // f(z) = z + z² + z³ + z⁴ + z⁵
    let f = TruncatedSeries::<ExactScalar>::geometric(5);
    let g = f.revert()?;
    println!("f      = {f}");
    println!("f^-1   = {g}");
    println!("f∘f^-1 = {}", TruncatedSeries::compose(&f, &g)?);

    let sq = f.mul(&f)?;
    println!("f*f    = {sq}");

    // Closed-form inverse coefficients against plain reversion.
    let a = SchlichtCoeffs::new(vec![rat(1, 2), rat(-1, 3), rat(1, 5), rat(2, 7)].into_iter().map(hankel_core::scalar::real).collect());
    let closed = inverse_from_schlicht(&a)?;
    let rev = inverse_by_reversion(&a)?;
    println!("closed-form t = {:?}", closed.tail().iter().map(|z| z.re.to_string()).collect::<Vec<_>>());
    println!("agree with reversion: {}", closed == rev);

    let ff = f.to_f64().revert()?;
    println!("floating f^-1 = {ff}");
    Ok(())
}
