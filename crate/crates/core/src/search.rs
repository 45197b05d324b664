//! Global maximization of `ϑ` over `Ω`: a full lattice scan, local grid
//! refinement around the incumbent, and the closed-form region maxima.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::regions::RegionId;
use crate::scalar::{CoeffText, ExactScalar};
use crate::theta::{theta_gradient, theta_raw, BoxPoint, BOX_UPPER};

/// Points within this distance of the global maximum are reported as maximizers.
pub const ARGMAX_TOL: f64 = 1e-9;

/// Denominator relating `ϑ` to `|H₃,₁(f⁻¹)|`.
pub const THETA_SCALE: i64 = 8640;

/// Points per axis of each local refinement grid.
const LOCAL_POINTS: usize = 9;

/// Axis-aligned sub-box of `Ω`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SearchBox {
    pub lower: [f64; 3],
    pub upper: [f64; 3],
}

impl SearchBox {
    pub fn full() -> Self {
        Self {
            lower: [0.0; 3],
            upper: BOX_UPPER,
        }
    }

    pub fn new(lower: [f64; 3], upper: [f64; 3]) -> Result<Self> {
        for i in 0..3 {
            if !(0.0 <= lower[i] && lower[i] <= upper[i] && upper[i] <= BOX_UPPER[i]) {
                return Err(Error::InvalidConfig(format!(
                    "search box {lower:?}..{upper:?} is not a sub-box of the parameter box"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    fn contains(&self, p: &[f64; 3]) -> bool {
        (0..3).all(|i| self.lower[i] <= p[i] && p[i] <= self.upper[i])
    }

    fn lattice_coord(&self, axis: usize, i: usize, res: usize) -> f64 {
        if i == res {
            return self.upper[axis];
        }
        self.lower[axis] + (self.upper[axis] - self.lower[axis]) * i as f64 / res as f64
    }
}

#[derive(Clone, Copy, Debug)]
struct Best {
    value: f64,
    at: [f64; 3],
}

impl Best {
    const NONE: Best = Best {
        value: f64::NEG_INFINITY,
        at: [f64::INFINITY; 3],
    };

    fn offer(&mut self, value: f64, at: [f64; 3]) {
        if better(value, &at, self.value, &self.at) {
            self.value = value;
            self.at = at;
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.offer(other.value, other.at);
        self
    }
}

fn lex(a: &[f64; 3], b: &[f64; 3]) -> Ordering {
    a[0].total_cmp(&b[0])
        .then(a[1].total_cmp(&b[1]))
        .then(a[2].total_cmp(&b[2]))
}

/// Larger value wins; exact ties go to the lexicographically smaller point.
fn better(v: f64, p: &[f64; 3], w: f64, q: &[f64; 3]) -> bool {
    v > w || (v == w && lex(p, q) == Ordering::Less)
}

#[derive(Clone, Copy, Debug)]
struct LatticeStats {
    overall: Best,
    per_region: [Best; 27],
}

impl LatticeStats {
    fn empty() -> Self {
        Self {
            overall: Best::NONE,
            per_region: [Best::NONE; 27],
        }
    }

    fn merge(mut self, other: LatticeStats) -> LatticeStats {
        self.overall = self.overall.merge(other.overall);
        for (a, b) in self.per_region.iter_mut().zip(other.per_region) {
            *a = a.merge(b);
        }
        self
    }
}

fn scan_lattice(bounds: &SearchBox, res: usize) -> LatticeStats {
    (0..=res)
        .into_par_iter()
        .map(|i| {
            let mut stats = LatticeStats::empty();
            let u = bounds.lattice_coord(0, i, res);
            for j in 0..=res {
                let v = bounds.lattice_coord(1, j, res);
                for k in 0..=res {
                    let w = bounds.lattice_coord(2, k, res);
                    let p = [u, v, w];
                    let value = theta_raw(&u, &v, &w);
                    stats.overall.offer(value, p);
                    stats.per_region[RegionId::classify(&p).index()].offer(value, p);
                }
            }
            stats
        })
        .reduce(LatticeStats::empty, LatticeStats::merge)
}

/// Shrinks a 9³ grid around the incumbent, halving its half-width each round.
fn refine(bounds: &SearchBox, res: usize, rounds: usize, start: Best) -> Best {
    let mut best = start;
    let mut half: [f64; 3] =
        std::array::from_fn(|i| (bounds.upper[i] - bounds.lower[i]) / res as f64);
    for _ in 0..rounds {
        let centre = best.at;
        let lo: [f64; 3] = std::array::from_fn(|i| (centre[i] - half[i]).max(bounds.lower[i]));
        let hi: [f64; 3] = std::array::from_fn(|i| (centre[i] + half[i]).min(bounds.upper[i]));
        let at = |axis: usize, i: usize| {
            if i + 1 == LOCAL_POINTS {
                hi[axis]
            } else {
                lo[axis] + (hi[axis] - lo[axis]) * i as f64 / (LOCAL_POINTS - 1) as f64
            }
        };
        for a in 0..LOCAL_POINTS {
            for b in 0..LOCAL_POINTS {
                for c in 0..LOCAL_POINTS {
                    let p = [at(0, a), at(1, b), at(2, c)];
                    best.offer(theta_raw(&p[0], &p[1], &p[2]), p);
                }
            }
        }
        half = half.map(|h| h / 2.0);
    }
    best
}

/// `global_max / 8640`, exact when the maximum is an integer.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(ExactScalar),
    /// Maximum not within `1e-9` of an integer.
    Approximate(f64),
}

impl BoundValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            BoundValue::Approximate(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BoundValue::Exact(_))
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Exact(r) => f.write_str(&r.to_text()),
            BoundValue::Approximate(x) => write!(f, "~{x}"),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Divides a maximum of `ϑ` by 8640, rounding to the nearest integer first
/// when it lies within `1e-9` of one.
pub fn bound_from_value(global_max: f64) -> BoundValue {
    let nearest = global_max.round();
    if global_max.is_finite() && (global_max - nearest).abs() <= ARGMAX_TOL {
        let n = BigInt::from(nearest as i64);
        BoundValue::Exact(ExactScalar::new(n, BigInt::from(THETA_SCALE)))
    } else {
        BoundValue::Approximate(global_max / THETA_SCALE as f64)
    }
}

pub fn bound_from_max(report: &MaxReport) -> BoundValue {
    bound_from_value(report.global_max)
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionSummary {
    pub region: RegionId,
    pub case: &'static str,
    pub restriction: &'static str,
    pub note: &'static str,
    pub closed_form_max: f64,
    pub closed_form_argmax: [f64; 3],
    /// Best lattice point in the region's relative interior.
    pub lattice_max: Option<f64>,
    pub lattice_argmax: Option<[f64; 3]>,
    /// Larger of the two.
    pub region_max: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxReport {
    pub bounds: SearchBox,
    pub resolution: usize,
    pub refine_rounds: usize,
    pub global_max: f64,
    /// Lexicographically smallest maximizer.
    pub primary_argmax: BoxPoint,
    /// Every lattice, refined or closed-form maximizer within `1e-9` of `global_max`.
    pub argmax: Vec<BoxPoint>,
    pub per_region: Vec<RegionSummary>,
    pub bound: BoundValue,
}

impl MaxReport {
    /// Maximum over all regions sharing a case label.
    pub fn case_max(&self, case: &str) -> Option<f64> {
        self.per_region
            .iter()
            .filter(|r| r.case == case)
            .map(|r| r.region_max)
            .reduce(f64::max)
    }

    /// `(case, max)` pairs in enumeration order, one per case label.
    pub fn case_table(&self) -> Vec<(&'static str, f64)> {
        let mut out: Vec<(&'static str, f64)> = Vec::new();
        for r in &self.per_region {
            match out.iter_mut().find(|(c, _)| *c == r.case) {
                Some(entry) => entry.1 = entry.1.max(r.region_max),
                None => out.push((r.case, r.region_max)),
            }
        }
        out
    }

    /// Plain-text record, one `key: value` per line followed by the region table.
    pub fn to_record(&self) -> String {
        let fmt_p = |p: &BoxPoint| format!("({}, {}, {})", p.u(), p.v(), p.w());
        let mut s = String::new();
        let _ = writeln!(s, "global-max: {}", self.global_max);
        let _ = writeln!(s, "primary-argmax: {}", fmt_p(&self.primary_argmax));
        let _ = writeln!(
            s,
            "argmax: [{}]",
            self.argmax.iter().map(fmt_p).collect::<Vec<_>>().join(", ")
        );
        let _ = writeln!(s, "bound: {}", self.bound);
        let _ = writeln!(s, "resolution: {}, refine-rounds: {}", self.resolution, self.refine_rounds);
        let _ = writeln!(s, "regions:");
        for r in &self.per_region {
            let _ = writeln!(
                s,
                "  {:<22} max {:>18.12}  [{}]",
                r.region.to_string(),
                r.region_max,
                r.restriction
            );
        }
        s
    }
}

/// Lattice search configuration.
#[derive(Clone, Debug)]
pub struct GridSearch {
    bounds: SearchBox,
    resolution: usize,
    refine_rounds: usize,
}

impl GridSearch {
    pub fn new(resolution: usize, refine_rounds: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::InvalidConfig(format!(
                "grid resolution {resolution} < 2"
            )));
        }
        Ok(Self {
            bounds: SearchBox::full(),
            resolution,
            refine_rounds,
        })
    }

    pub fn within(mut self, bounds: SearchBox) -> Self {
        self.bounds = bounds;
        self
    }

    /// Scans the `(res+1)³` lattice, refines, and folds in every closed-form
    /// region maximum whose maximizer lies inside the search box.
    pub fn run(&self) -> MaxReport {
        let stats = scan_lattice(&self.bounds, self.resolution);
        let refined = refine(&self.bounds, self.resolution, self.refine_rounds, stats.overall);

        let mut per_region = Vec::new();
        let mut best = refined;
        for region in RegionId::all() {
            let rs = region.restriction();
            if !self.bounds.contains(&rs.argmax) {
                continue;
            }
            let lattice = stats.per_region[region.index()];
            let seen = lattice.value.is_finite();
            best.offer(rs.max, rs.argmax);
            per_region.push(RegionSummary {
                region,
                case: region.case_label(),
                restriction: rs.formula,
                note: rs.note,
                closed_form_max: rs.max,
                closed_form_argmax: rs.argmax,
                lattice_max: seen.then_some(lattice.value),
                lattice_argmax: seen.then_some(lattice.at),
                region_max: if seen { rs.max.max(lattice.value) } else { rs.max },
            });
        }
        let global_max = best.value;

        let mut candidates: Vec<[f64; 3]> = vec![refined.at];
        candidates.extend(
            per_region
                .iter()
                .filter(|r| r.closed_form_max >= global_max - ARGMAX_TOL)
                .map(|r| r.closed_form_argmax),
        );
        candidates.extend(self.lattice_points_near(global_max));
        candidates.retain(|p| theta_raw(&p[0], &p[1], &p[2]) >= global_max - ARGMAX_TOL);
        candidates.sort_by(lex);
        candidates.dedup();
        let argmax: Vec<BoxPoint> = candidates
            .iter()
            .map(|p| BoxPoint::new(p[0], p[1], p[2]).expect("search stays inside the box"))
            .collect();

        MaxReport {
            bounds: self.bounds,
            resolution: self.resolution,
            refine_rounds: self.refine_rounds,
            global_max,
            primary_argmax: argmax[0].clone(),
            argmax,
            per_region,
            bound: bound_from_value(global_max),
        }
    }

    fn lattice_points_near(&self, target: f64) -> Vec<[f64; 3]> {
        let res = self.resolution;
        let b = self.bounds;
        (0..=res)
            .into_par_iter()
            .flat_map_iter(|i| {
                let u = b.lattice_coord(0, i, res);
                (0..=res).flat_map(move |j| {
                    let v = b.lattice_coord(1, j, res);
                    (0..=res).filter_map(move |k| {
                        let w = b.lattice_coord(2, k, res);
                        (theta_raw(&u, &v, &w) >= target - ARGMAX_TOL).then_some([u, v, w])
                    })
                })
            })
            .collect()
    }
}

/// Full search over `Ω`.
pub fn grid_maximize(resolution: usize, refine_rounds: usize) -> Result<MaxReport> {
    Ok(GridSearch::new(resolution, refine_rounds)?.run())
}

/// Smallest gradient norm of `ϑ` over the strictly interior lattice points
/// of a `res³` grid, with its location.
pub fn interior_gradient_floor(res: usize) -> (f64, [f64; 3]) {
    let b = SearchBox::full();
    (1..res)
        .into_par_iter()
        .map(|i| {
            let u = b.lattice_coord(0, i, res);
            let mut best = (f64::INFINITY, [0.0; 3]);
            for j in 1..res {
                let v = b.lattice_coord(1, j, res);
                for k in 1..res {
                    let w = b.lattice_coord(2, k, res);
                    let g = theta_gradient(u, v, w);
                    let n = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
                    if n < best.0 {
                        best = (n, [u, v, w]);
                    }
                }
            }
            best
        })
        .reduce(
            || (f64::INFINITY, [0.0; 3]),
            |a, b| if b.0 < a.0 || (b.0 == a.0 && lex(&b.1, &a.1) == Ordering::Less) { b } else { a },
        )
}

/// Writes `u,v,w,theta` for every lattice point.
pub fn write_lattice_csv<W: Write>(bounds: &SearchBox, res: usize, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["u", "v", "w", "theta"])?;
    for i in 0..=res {
        let u = bounds.lattice_coord(0, i, res);
        for j in 0..=res {
            let v = bounds.lattice_coord(1, j, res);
            for k in 0..=res {
                let x = bounds.lattice_coord(2, k, res);
                w.serialize((u, v, x, theta_raw(&u, &v, &x)))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn bound_examples() {
        assert_eq!(bound_from_value(240.0), BoundValue::Exact(rat(1, 36)));
        assert_eq!(bound_from_value(0.0), BoundValue::Exact(rat(0, 1)));
        assert_eq!(bound_from_value(64.0), BoundValue::Exact(rat(1, 135)));
        assert_eq!(bound_from_value(240.0 - 1e-10), BoundValue::Exact(rat(1, 36)));
        let approx = bound_from_value(125.5);
        assert!(!approx.is_exact());
        assert!((approx.to_f64() - 125.5 / 8640.0).abs() < 1e-18);
        assert_eq!(BoundValue::Exact(rat(1, 36)).to_string(), "1/36");
    }

    #[test]
    fn coarse_lattice_contains_the_vertex() {
        let r = grid_maximize(2, 0).unwrap();
        assert_eq!(r.global_max, 240.0);
        assert_eq!(r.primary_argmax.coords(), [0.0, 0.0, 1.0]);
        assert!(grid_maximize(1, 0).is_err());
    }

    #[test]
    fn sub_box_maximum() {
        // On u ∈ [1, 2] the maximum sits on the top face at u = 1, where
        // d/dv g₃(1, v) = 0 at v ≈ 0.183147506246753; value from a 30-digit
        // root solve of that derivative. θ(1, 0, 1) = 135 is not the maximum.
        const SUB_BOX_MAX: f64 = 137.484_186_490_520_65;
        let sub = SearchBox::new([1.0, 0.0, 0.0], [2.0, 1.0, 1.0]).unwrap();
        let r = GridSearch::new(32, 20).unwrap().within(sub).run();
        assert!((r.global_max - SUB_BOX_MAX).abs() < 1e-9, "{}", r.global_max);
        let [u, v, w] = r.primary_argmax.coords();
        assert_eq!((u, w), (1.0, 1.0));
        assert!((v - 0.183_147_506_246_753).abs() < 1e-4, "{v}");
        assert!(r.global_max > theta_raw(&1.0, &0.0, &1.0));
        assert!(SearchBox::new([1.0, 0.0, 0.0], [2.5, 1.0, 1.0]).is_err());
    }

    #[test]
    fn lattice_csv_has_every_point() {
        let mut buf = Vec::new();
        write_lattice_csv(&SearchBox::full(), 3, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 4 * 4 * 4);
        assert!(text.starts_with("u,v,w,theta\n0.0,0.0,0.0,0.0\n"));
    }
}
