#![allow(dead_code)]

use hankel_core::coefficients::CaratheodoryCoeffs;
use hankel_core::sampling::stream_rng;
use hankel_core::scalar::{rat, ExactScalar};
use num_complex::Complex;
use proptest::prelude::*;
use rand::Rng;

/// p/q with |p/q| <= 7/5 and q in 1..=12.
pub fn small_rational() -> impl Strategy<Value = ExactScalar> {
    (1i64..=12).prop_flat_map(|q| {
        let bound = 7 * q / 5;
        (-bound..=bound).prop_map(move |p| rat(p, q))
    })
}

/// Complex rational with modulus at most 2.
pub fn bounded_complex() -> impl Strategy<Value = Complex<ExactScalar>> {
    (small_rational(), small_rational()).prop_map(|(re, im)| Complex::new(re, im))
}

pub fn exact_c_vector(len: usize) -> impl Strategy<Value = CaratheodoryCoeffs<ExactScalar>> {
    prop::collection::vec(bounded_complex(), len).prop_map(CaratheodoryCoeffs::new)
}

pub fn seeded_rational(rng: &mut impl Rng) -> ExactScalar {
    let q = rng.random_range(1i64..=24);
    let bound = 7 * q / 5;
    rat(rng.random_range(-bound..=bound), q)
}

/// Deterministic corpus of `count` exact coefficient vectors with |c_t| <= 2.
pub fn seeded_c_vectors(seed: u64, count: usize, len: usize) -> Vec<CaratheodoryCoeffs<ExactScalar>> {
    let mut rng = stream_rng(seed, 99);
    (0..count)
        .map(|_| {
            CaratheodoryCoeffs::new(
                (0..len)
                    .map(|_| Complex::new(seeded_rational(&mut rng), seeded_rational(&mut rng)))
                    .collect(),
            )
        })
        .collect()
}
