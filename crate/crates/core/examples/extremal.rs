//! The extremal map with p(z) = (1+z^3)/(1-z^3): exact coefficients and H31 = -1/36.
use hankel_core::cli::{extremal_values, T4_SIGN_NOTE};

fn main() -> hankel_core::error::Result<()> {
    let (v, ok) = extremal_values()?;
    println!("c = {:?}", v.c);
    println!("a = {:?}", v.a);
    println!("t = {:?}", v.t);
    println!("H31: determinant {}, t-formula {}, c-formula {}, parametric {}", v.h_determinant, v.h_t_formula, v.h_c_formula, v.h_parametric);
    println!("|H31| = {}, all routes agree: {ok}", v.modulus);
    println!("{T4_SIGN_NOTE}");
    Ok(())
}
