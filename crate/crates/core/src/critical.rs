//! Critical points of `g₃(u, v) = ϑ(u, v, 1)` on ℝ².
//!
//! `g₃` carries the factor `(4 − u²)²`, so both lines `u = ±2` consist of
//! degenerate critical points. Those are collected separately from the
//! isolated ones.

use serde::Serialize;

use crate::poly::{CompiledPoly, MultiPoly};
use crate::scalar::rat;
use crate::theta::{theta_bracket, theta_poly};

pub fn g3(u: f64, v: f64) -> f64 {
    (4.0 - u * u).powi(2) * theta_bracket(&u, &v, &1.0)
}

/// `(∂g₃/∂u, ∂g₃/∂v)` in factored form.
pub fn g3_grad(u: f64, v: f64) -> (f64, f64) {
    let du = 1.5
        * (u * u - 4.0)
        * (8.0 * (v - 1.0) * v * (1.0 + v).powi(2)
            - 10.0 * u * u * (v - 1.0) * v * (1.0 + v).powi(2)
            + u.powi(3) * v * v * (3.0 + 2.0 * v + 3.0 * v * v)
            - 4.0 * u * (-10.0 + 9.0 * v * v - 2.0 * v.powi(3) + 3.0 * v.powi(4)));
    let dv = 1.5
        * (u * u - 4.0).powi(2)
        * (-8.0 * v * (2.0 - v + v * v)
            + u * u * v * (1.0 + v + 2.0 * v * v)
            + u * (2.0 + 4.0 * v - 6.0 * v * v - 8.0 * v.powi(3)));
    (du, dv)
}

/// The common factor `u² − 4` of `∂g₃/∂u`.
pub fn g3_du_prefactor(u: f64) -> f64 {
    u * u - 4.0
}

/// `g₃` as an exact polynomial in `(u, v)`.
pub fn g3_poly() -> MultiPoly {
    let one = MultiPoly::constant(&["u", "v"], rat(1, 1));
    theta_poly()
        .substitute(&[("w", &one)])
        .expect("w is an indeterminate of theta")
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonConfig {
    /// Seeds per axis.
    pub seeds_per_axis: usize,
    /// Seeds cover `[-span, span]²`.
    pub span: f64,
    /// Step multiplier applied while the gradient norm fails to decrease.
    pub damping: f64,
    pub max_iter: usize,
    /// Convergence threshold on the gradient norm.
    pub grad_tol: f64,
    /// Radius under which two converged points are the same.
    pub dedup_radius: f64,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        Self {
            seeds_per_axis: 64,
            span: 4.0,
            damping: 0.5,
            max_iter: 100,
            grad_tol: 1e-12,
            dedup_radius: 1e-6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPoint {
    pub u: f64,
    pub v: f64,
    pub grad_norm: f64,
    /// Number of seeds that converged here.
    pub hits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPointSearch {
    /// Isolated critical points, sorted lexicographically.
    pub isolated: Vec<CriticalPoint>,
    /// Converged points on the degenerate lines `u = ±2`.
    pub degenerate: Vec<CriticalPoint>,
    /// Seeds that did not converge.
    pub failures: Vec<(f64, f64)>,
}

impl CriticalPointSearch {
    /// Points (isolated or degenerate) strictly inside `(0,2)×(0,1)`.
    pub fn interior_to_unit_face(&self) -> Vec<&CriticalPoint> {
        self.isolated
            .iter()
            .chain(&self.degenerate)
            .filter(|p| p.u > 0.0 && p.u < 2.0 && p.v > 0.0 && p.v < 1.0)
            .collect()
    }

    /// Isolated point nearest to `(u, v)` and its distance.
    pub fn nearest(&self, u: f64, v: f64) -> Option<(&CriticalPoint, f64)> {
        self.isolated
            .iter()
            .map(|p| (p, (p.u - u).hypot(p.v - v)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

struct Hessian {
    uu: CompiledPoly,
    uv: CompiledPoly,
    vv: CompiledPoly,
}

impl Hessian {
    fn new() -> Self {
        let g = g3_poly();
        let gu = g.derivative("u").expect("u");
        let gv = g.derivative("v").expect("v");
        Self {
            uu: gu.derivative("u").expect("u").compile(),
            uv: gu.derivative("v").expect("v").compile(),
            vv: gv.derivative("v").expect("v").compile(),
        }
    }

    fn at(&self, u: f64, v: f64) -> [[f64; 2]; 2] {
        let x = [u, v];
        let uv = self.uv.eval(&x);
        [[self.uu.eval(&x), uv], [uv, self.vv.eval(&x)]]
    }
}

fn grad_norm(u: f64, v: f64) -> f64 {
    let (a, b) = g3_grad(u, v);
    a.hypot(b)
}

/// Damped Newton iteration on `∇g₃ = 0` from one seed.
fn newton(seed: (f64, f64), hess: &Hessian, cfg: &NewtonConfig) -> Option<(f64, f64, f64)> {
    let (mut u, mut v) = seed;
    let mut norm = grad_norm(u, v);
    for _ in 0..cfg.max_iter {
        if norm <= cfg.grad_tol {
            return Some((u, v, norm));
        }
        let (gu, gv) = g3_grad(u, v);
        let h = hess.at(u, v);
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let du = -(h[1][1] * gu - h[0][1] * gv) / det;
        let dv = -(-h[1][0] * gu + h[0][0] * gv) / det;
        let mut step = 1.0;
        let mut accepted = None;
        while step > 1e-10 {
            let (nu, nv) = (u + step * du, v + step * dv);
            let n = grad_norm(nu, nv);
            if n < norm {
                accepted = Some((nu, nv, n));
                break;
            }
            step *= cfg.damping;
        }
        match accepted {
            Some((nu, nv, n)) => {
                u = nu;
                v = nv;
                norm = n;
            }
            // No descent: either converged to rounding level or stuck.
            None => break,
        }
    }
    (norm <= cfg.grad_tol).then_some((u, v, norm))
}

fn absorb(points: &mut Vec<CriticalPoint>, u: f64, v: f64, norm: f64, radius: f64) {
    if let Some(p) = points
        .iter_mut()
        .find(|p| (p.u - u).hypot(p.v - v) <= radius)
    {
        p.hits += 1;
        if norm < p.grad_norm {
            p.u = u;
            p.v = v;
            p.grad_norm = norm;
        }
    } else {
        points.push(CriticalPoint {
            u,
            v,
            grad_norm: norm,
            hits: 1,
        });
    }
}

/// Runs Newton from a uniform seed grid over `[-span, span]²`.
pub fn g3_critical_points(cfg: &NewtonConfig) -> CriticalPointSearch {
    let hess = Hessian::new();
    let n = cfg.seeds_per_axis.max(2);
    let coord = |i: usize| -cfg.span + 2.0 * cfg.span * i as f64 / (n - 1) as f64;
    let mut isolated = Vec::new();
    let mut degenerate = Vec::new();
    let mut failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let seed = (coord(i), coord(j));
            match newton(seed, &hess, cfg) {
                Some((u, v, norm)) => {
                    if (u.abs() - 2.0).abs() <= cfg.dedup_radius {
                        // The whole line is critical; snap onto it.
                        absorb(&mut degenerate, 2.0f64.copysign(u), v, norm, cfg.dedup_radius);
                    } else {
                        absorb(&mut isolated, u, v, norm, cfg.dedup_radius);
                    }
                }
                None => failures.push(seed),
            }
        }
    }
    let lex = |a: &CriticalPoint, b: &CriticalPoint| a.u.total_cmp(&b.u).then(a.v.total_cmp(&b.v));
    isolated.sort_by(lex);
    degenerate.sort_by(lex);
    CriticalPointSearch {
        isolated,
        degenerate,
        failures,
    }
}
