//! Symbolic check that the 3x3 Hankel determinant of the inverse
//! coefficients collapses to the compact bracket in c1..c4.
use hankel_core::identity::{
    h31_bracket, perturbed_bracket, verify_h31_identity, verify_h31_identity_against,
};

fn main() {
    println!("bracket: {}", h31_bracket().to_text());
    let ok = verify_h31_identity();
    println!("{}", ok.to_record());

    // A single changed coefficient leaves a nonzero residual.
    let bad = verify_h31_identity_against(&perturbed_bracket());
    println!("perturbed: {}", bad.to_record());
}
