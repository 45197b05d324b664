//! Deterministic pseudo-random streams of parameters and measures.
//!
//! Every stream is a ChaCha8 generator keyed by `(seed, stream)`: the seed
//! goes through `seed_from_u64`, the stream index selects an independent
//! ChaCha stream. Stream 0 is the default; parallel consumers take stream
//! indices 1, 2, … so replaying a `(seed, stream)` pair reproduces the
//! values bit for bit regardless of scheduling.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::caratheodory::{HerglotzMeasure, LzParams};
use crate::error::{Error, Result};

/// Probability that a disk parameter is drawn on the unit circle.
pub const DEFAULT_BOUNDARY_MIX: f64 = 0.25;

/// Boundary probability used by boundary-heavy runs.
pub const HEAVY_BOUNDARY_MIX: f64 = 0.75;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Point of the closed unit disk: with probability `boundary_mix` on the
/// circle, otherwise area-uniform (radius `√U`).
fn disk_point(rng: &mut ChaCha8Rng, boundary_mix: f64) -> Complex<f64> {
    let on_circle = rng.random::<f64>() < boundary_mix;
    let r = if on_circle {
        1.0
    } else {
        rng.random::<f64>().sqrt()
    };
    let angle = rng.random::<f64>() * std::f64::consts::TAU;
    Complex::from_polar(r, angle)
}

/// Stream of `(c₁, μ, ρ, ψ)` parameters.
#[derive(Clone, Debug)]
pub struct LzSampler {
    rng: ChaCha8Rng,
    remaining: usize,
    boundary_mix: f64,
}

impl LzSampler {
    pub fn new(seed: u64, count: usize) -> Result<Self> {
        Self::with_stream(seed, 0, count)
    }

    pub fn with_stream(seed: u64, stream: u64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidConfig("sample count must be at least 1".into()));
        }
        Ok(Self {
            rng: stream_rng(seed, stream),
            remaining: count,
            boundary_mix: DEFAULT_BOUNDARY_MIX,
        })
    }

    pub fn boundary_mix(mut self, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidConfig(format!("boundary mix {p} not in [0, 1]")));
        }
        self.boundary_mix = p;
        Ok(self)
    }
}

impl Iterator for LzSampler {
    type Item = LzParams<f64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let c1 = self.rng.random_range(0.0..=2.0);
        let mu = disk_point(&mut self.rng, self.boundary_mix);
        let rho = disk_point(&mut self.rng, self.boundary_mix);
        let psi = disk_point(&mut self.rng, self.boundary_mix);
        Some(LzParams::new(c1, mu, rho, psi).expect("sampler stays inside the constraints"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

/// Stream of atomic measures: atom count uniform on `1..=max_atoms`,
/// flat-Dirichlet weights, uniform positions on the circle.
#[derive(Clone, Debug)]
pub struct HerglotzSampler {
    rng: ChaCha8Rng,
    remaining: usize,
    max_atoms: usize,
}

impl HerglotzSampler {
    pub fn new(seed: u64, count: usize, max_atoms: usize) -> Result<Self> {
        Self::with_stream(seed, 0, count, max_atoms)
    }

    pub fn with_stream(seed: u64, stream: u64, count: usize, max_atoms: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidConfig("sample count must be at least 1".into()));
        }
        if max_atoms == 0 {
            return Err(Error::InvalidConfig("max atoms must be at least 1".into()));
        }
        Ok(Self {
            rng: stream_rng(seed, stream),
            remaining: count,
            max_atoms,
        })
    }
}

impl Iterator for HerglotzSampler {
    type Item = HerglotzMeasure;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let k = self.rng.random_range(1..=self.max_atoms);
        let raw: Vec<f64> = (0..k).map(|_| self.rng.sample::<f64, _>(Exp1)).collect();
        let total: f64 = raw.iter().sum();
        let atoms = raw
            .into_iter()
            .map(|g| {
                let angle = self.rng.random::<f64>() * std::f64::consts::TAU;
                (g / total, Complex::from_polar(1.0, angle))
            })
            .collect();
        Some(HerglotzMeasure::new(atoms).expect("sampled measure is valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

pub fn sample_lz(seed: u64, count: usize) -> Result<LzSampler> {
    LzSampler::new(seed, count)
}

pub fn sample_herglotz(seed: u64, count: usize, max_atoms: usize) -> Result<HerglotzSampler> {
    HerglotzSampler::new(seed, count, max_atoms)
}
