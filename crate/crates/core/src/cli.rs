//! Batch verification commands behind the `hankel-verify` binary.
//!
//! Each command returns an [`Outcome`]: a versioned JSON report, a CSV table
//! and an exit code (0 success, 1 verification failure, 2 usage error).
//! Output depends only on the configuration, never on timing or thread count.

use std::io::Write;
use std::path::PathBuf;

use num_complex::Complex;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::caratheodory::{
    h31_lz, herglotz_coeffs, lz_expand, roots_of_unity_coeffs_exact, toeplitz_psd_check,
    HerglotzMeasure, LzParams,
};
use crate::coefficients::{
    convex_from_caratheodory, h31_from_c, h31_from_t, h31_pipeline, hankel_det,
    inverse_by_reversion, inverse_from_caratheodory, inverse_from_schlicht, CaratheodoryCoeffs,
};
use crate::error::{Error, Result};
use crate::identity::{perturbed_bracket, verify_h31_identity, verify_h31_identity_against};
use crate::sampling::{HerglotzSampler, LzSampler, HEAVY_BOUNDARY_MIX};
use crate::scalar::{rat, CoeffText, ComplexScalar, ExactScalar};
use crate::search::{bound_from_max, grid_maximize, write_lattice_csv, BoundValue, SearchBox};
use crate::theta::theta_raw;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Expected maximum of `ϑ` over the parameter box.
pub const EXPECTED_MAX: f64 = 240.0;
/// Tolerance on the grid maximum.
pub const MAX_TOL: f64 = 1e-9;
/// Slack allowed above `1/36` for floating samples.
pub const SAMPLE_BOUND_TOL: f64 = 1e-12;
/// `|h31_lz − h31_from_c ∘ lz_expand|` limit.
pub const ROUTE_TOL: f64 = 1e-12;
/// Slack in `8640·|H| ≤ ϑ`.
pub const DOMINATION_TOL: f64 = 1e-10;

/// Environment variable holding the worker-thread count (default: all cores).
pub const THREADS_ENV: &str = "HANKEL_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Identity,
    Maximize,
    Sample,
    LzCheck,
    Extremal,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Identity => "identity",
            Command::Maximize => "maximize",
            Command::Sample => "sample",
            Command::LzCheck => "lz-check",
            Command::Extremal => "extremal",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub sample_count: usize,
    pub grid_resolution: usize,
    pub refine_rounds: usize,
    pub max_atoms: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub exact: bool,
    pub boundary_heavy: bool,
    /// Lattice CSV dump for `maximize`.
    pub lattice_path: Option<PathBuf>,
    /// Perturbs the identity check so it must fail (negative-path testing).
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            seed: 0,
            sample_count: 100_000,
            grid_resolution: 64,
            refine_rounds: 6,
            max_atoms: 6,
            output_path: None,
            format: Format::Json,
            exact: false,
            boundary_heavy: false,
            lattice_path: None,
            inject_fault: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_resolution < 2 {
            return Err(Error::InvalidConfig("--grid must be at least 2".into()));
        }
        if self.max_atoms == 0 {
            return Err(Error::InvalidConfig("--max-atoms must be positive".into()));
        }
        if self.command == Command::LzCheck && self.sample_count == 0 {
            return Err(Error::InvalidConfig("--samples must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Top-level JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: RunConfig,
    pub status: Status,
    pub metrics: Value,
    pub artifacts: Value,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn write<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub table: CsvTable,
    pub exit_code: i32,
}

impl Outcome {
    fn new(config: &RunConfig, pass: bool, metrics: Value, artifacts: Value, table: CsvTable) -> Self {
        Self {
            report: Report {
                schema: SCHEMA_VERSION,
                command: config.command.name().to_owned(),
                config: config.clone(),
                status: if pass { Status::Pass } else { Status::Fail },
                metrics,
                artifacts,
            },
            table,
            exit_code: if pass {
                EXIT_SUCCESS
            } else {
                EXIT_VERIFICATION_FAILURE
            },
        }
    }

    /// Renders in the configured format.
    pub fn write<W: Write>(&self, format: Format, mut out: W) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.report)?;
                writeln!(out)?;
            }
            Format::Csv => self.table.write(out)?,
        }
        Ok(())
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    match config.command {
        Command::Identity => cmd_identity(config),
        Command::Maximize => cmd_maximize(config),
        Command::Sample => cmd_sample(config),
        Command::LzCheck => cmd_lz_check(config),
        Command::Extremal => cmd_extremal(config),
    }
}

fn ctext(z: &ComplexScalar<ExactScalar>) -> String {
    z.to_text()
}

fn fnum(x: f64) -> String {
    format!("{x:?}")
}

pub fn cmd_identity(config: &RunConfig) -> Result<Outcome> {
    let report = if config.inject_fault {
        verify_h31_identity_against(&perturbed_bracket())
    } else {
        verify_h31_identity()
    };
    let mut table = CsvTable::new(&["index", "residual_term"]);
    for (i, t) in report.residual_terms.iter().enumerate() {
        table.rows.push(vec![i.to_string(), t.clone()]);
    }
    Ok(Outcome::new(
        config,
        report.is_zero(),
        json!({
            "status": report.status,
            "residual-term-count": report.residual_term_count,
        }),
        json!({
            "record": report.to_record(),
            "identity-report": report,
            "fault-injected": config.inject_fault,
        }),
        table,
    ))
}

pub fn cmd_maximize(config: &RunConfig) -> Result<Outcome> {
    let report = grid_maximize(config.grid_resolution, config.refine_rounds)?;
    let bound = bound_from_max(&report);
    let pass = (report.global_max - EXPECTED_MAX).abs() <= MAX_TOL
        && bound == BoundValue::Exact(rat(1, 36));
    if let Some(path) = &config.lattice_path {
        let file = std::fs::File::create(path)?;
        write_lattice_csv(&SearchBox::full(), config.grid_resolution, std::io::BufWriter::new(file))?;
    }
    let mut table = CsvTable::new(&[
        "region",
        "case",
        "restriction",
        "closed_form_max",
        "lattice_max",
        "region_max",
    ]);
    for r in &report.per_region {
        table.rows.push(vec![
            r.region.to_string(),
            r.case.to_owned(),
            r.restriction.to_owned(),
            fnum(r.closed_form_max),
            r.lattice_max.map(fnum).unwrap_or_default(),
            fnum(r.region_max),
        ]);
    }
    let cases: serde_json::Map<String, Value> = report
        .case_table()
        .into_iter()
        .map(|(c, m)| (c.to_owned(), json!(m)))
        .collect();
    Ok(Outcome::new(
        config,
        pass,
        json!({
            "global-max": report.global_max,
            "primary-argmax": report.primary_argmax.coords(),
            "bound": bound,
            "bound-exact": bound.is_exact(),
        }),
        json!({
            "case-table": cases,
            "per-region": report.per_region,
            "argmax": report.argmax,
            "record": report.to_record(),
        }),
        table,
    ))
}

/// One evaluated sample of the `c → a → t → H₃,₁(f⁻¹)` pipeline.
#[derive(Clone, Debug)]
pub struct PipelineSample {
    pub label: String,
    pub measure: HerglotzMeasure,
    pub c: CaratheodoryCoeffs<f64>,
    pub h: Complex<f64>,
}

/// Single atom at 1, two antipodal atoms, three cube-root atoms.
pub const WITNESS_ORDERS: [usize; 3] = [1, 2, 3];

pub fn evaluate_measure(label: String, measure: HerglotzMeasure) -> Result<PipelineSample> {
    let c = herglotz_coeffs(&measure, 4);
    let h = h31_pipeline(&c)?;
    Ok(PipelineSample { label, measure, c, h })
}

/// Witnesses followed by `count` random measures.
pub fn herglotz_pipeline(seed: u64, count: usize, max_atoms: usize) -> Result<Vec<PipelineSample>> {
    let mut out = Vec::with_capacity(count + WITNESS_ORDERS.len());
    for k in WITNESS_ORDERS {
        out.push(evaluate_measure(format!("witness-{k}"), HerglotzMeasure::roots_of_unity(k)?)?);
    }
    if count > 0 {
        for (i, m) in HerglotzSampler::new(seed, count, max_atoms)?.enumerate() {
            out.push(evaluate_measure(format!("sample-{i}"), m)?);
        }
    }
    Ok(out)
}

pub fn cmd_sample(config: &RunConfig) -> Result<Outcome> {
    let samples = herglotz_pipeline(config.seed, config.sample_count, config.max_atoms)?;
    let ceiling = 1.0 / 36.0 + SAMPLE_BOUND_TOL;
    let (argmax, best) = samples
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.h.norm()))
        .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
    let violations = samples.iter().filter(|s| s.h.norm() > ceiling).count();

    let mut exact_witnesses = Vec::new();
    let mut exact_pass = true;
    if config.exact {
        for k in WITNESS_ORDERS {
            let c = roots_of_unity_coeffs_exact(k, 4)?;
            let h = h31_pipeline(&c)?;
            let modulus_sq = h.norm_sqr();
            exact_pass &= modulus_sq <= rat(1, 1296);
            exact_witnesses.push(json!({
                "label": format!("witness-{k}"),
                "h31": ctext(&h),
                "modulus-squared": modulus_sq.to_text(),
            }));
        }
    }

    let mut table = CsvTable::new(&[
        "index", "label", "atoms", "c1_re", "c1_im", "c2_re", "c2_im", "c3_re", "c3_im", "c4_re",
        "c4_im", "h_re", "h_im", "h_abs",
    ]);
    for (i, s) in samples.iter().enumerate() {
        let atoms: Vec<String> = s
            .measure
            .atoms()
            .iter()
            .map(|(w, x)| format!("{}@{}", fnum(*w), fnum(x.arg())))
            .collect();
        let mut row = vec![i.to_string(), s.label.clone(), atoms.join(";")];
        for z in s.c.as_slice() {
            row.push(fnum(z.re));
            row.push(fnum(z.im));
        }
        row.extend([fnum(s.h.re), fnum(s.h.im), fnum(s.h.norm())]);
        table.rows.push(row);
    }

    let pass = violations == 0 && exact_pass;
    let best_sample = &samples[argmax];
    Ok(Outcome::new(
        config,
        pass,
        json!({
            "samples": samples.len(),
            "max-modulus": best,
            "bound": 1.0 / 36.0,
            "gap-to-bound": 1.0 / 36.0 - best,
            "violations": violations,
            "argmax-index": argmax,
            "argmax-label": best_sample.label,
        }),
        json!({
            "argmax-measure": best_sample.measure,
            "exact-witnesses": exact_witnesses,
            "exact-applied": config.exact,
        }),
        table,
    ))
}

/// Per-sample results of the three parameter checks.
#[derive(Clone, Debug, Serialize)]
pub struct LzCheckRow {
    pub c1: f64,
    pub mu: Complex<f64>,
    pub rho: Complex<f64>,
    pub psi: Complex<f64>,
    pub min_eigenvalue: f64,
    pub route_gap: f64,
    /// `ϑ(c₁, |μ|, |ρ|) − 8640·|H|`; negative beyond tolerance is a violation.
    pub domination_margin: f64,
    pub h: Complex<f64>,
}

impl LzCheckRow {
    pub fn psd_ok(&self) -> bool {
        self.min_eigenvalue >= crate::caratheodory::PSD_TOL
    }

    pub fn route_ok(&self) -> bool {
        self.route_gap <= ROUTE_TOL
    }

    pub fn domination_ok(&self) -> bool {
        self.domination_margin >= -DOMINATION_TOL
    }
}

pub fn lz_check_one(p: &LzParams<f64>) -> Result<LzCheckRow> {
    let c = lz_expand(p);
    let psd = toeplitz_psd_check(&c);
    let h = h31_lz(p);
    let via_c = h31_from_c(&c)?;
    let theta = theta_raw(p.c1(), &p.mu().norm(), &p.rho().norm());
    Ok(LzCheckRow {
        c1: *p.c1(),
        mu: *p.mu(),
        rho: *p.rho(),
        psi: *p.psi(),
        min_eigenvalue: psd.min_eigenvalue,
        route_gap: (h - via_c).norm(),
        domination_margin: theta - 8640.0 * h.norm(),
        h,
    })
}

pub fn lz_check_rows(seed: u64, count: usize, boundary_heavy: bool) -> Result<Vec<LzCheckRow>> {
    let mut sampler = LzSampler::new(seed, count)?;
    if boundary_heavy {
        sampler = sampler.boundary_mix(HEAVY_BOUNDARY_MIX)?;
    }
    sampler.map(|p| lz_check_one(&p)).collect()
}

pub fn cmd_lz_check(config: &RunConfig) -> Result<Outcome> {
    let rows = lz_check_rows(config.seed, config.sample_count, config.boundary_heavy)?;
    let psd_fail = rows.iter().filter(|r| !r.psd_ok()).count();
    let route_fail = rows.iter().filter(|r| !r.route_ok()).count();
    let dom_fail = rows.iter().filter(|r| !r.domination_ok()).count();
    let first_bad = rows
        .iter()
        .position(|r| !(r.psd_ok() && r.route_ok() && r.domination_ok()));
    let min_eig = rows.iter().map(|r| r.min_eigenvalue).fold(f64::INFINITY, f64::min);
    let max_gap = rows.iter().map(|r| r.route_gap).fold(0.0, f64::max);
    let min_margin = rows
        .iter()
        .map(|r| r.domination_margin)
        .fold(f64::INFINITY, f64::min);

    let mut table = CsvTable::new(&[
        "index", "c1", "mu_re", "mu_im", "rho_re", "rho_im", "psi_re", "psi_im", "min_eigenvalue",
        "route_gap", "domination_margin", "h_re", "h_im", "h_abs",
    ]);
    for (i, r) in rows.iter().enumerate() {
        table.rows.push(
            [
                r.c1, r.mu.re, r.mu.im, r.rho.re, r.rho.im, r.psi.re, r.psi.im, r.min_eigenvalue,
                r.route_gap, r.domination_margin, r.h.re, r.h.im,
            ]
            .iter()
            .map(|x| fnum(*x))
            .chain([fnum(r.h.norm())])
            .fold(vec![i.to_string()], |mut acc, s| {
                acc.push(s);
                acc
            }),
        );
    }

    Ok(Outcome::new(
        config,
        first_bad.is_none(),
        json!({
            "samples": rows.len(),
            "psd-violations": psd_fail,
            "route-violations": route_fail,
            "domination-violations": dom_fail,
            "min-eigenvalue": min_eig,
            "max-route-gap": max_gap,
            "min-domination-margin": min_margin,
        }),
        json!({
            "first-counterexample": first_bad.map(|i| json!({"index": i, "row": rows[i]})),
            "boundary-heavy": config.boundary_heavy,
        }),
        table,
    ))
}

/// Exact pipeline on `p₀(z) = (1+z³)/(1−z³)`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalValues {
    pub c: Vec<String>,
    pub a: Vec<String>,
    pub t: Vec<String>,
    pub t_by_reversion: Vec<String>,
    pub h_determinant: String,
    pub h_t_formula: String,
    pub h_c_formula: String,
    pub h_parametric: String,
    pub modulus: String,
}

pub fn extremal_values() -> Result<(ExtremalValues, bool)> {
    let c = roots_of_unity_coeffs_exact(3, 6)?;
    let a = convex_from_caratheodory(&c, 5)?;
    let t = inverse_from_schlicht(&a)?;
    let t_rev = inverse_by_reversion(&a)?;
    let t_direct = inverse_from_caratheodory(&c)?;
    let h_det = hankel_det(3, 1, &t.sequence())?;
    let h_t = h31_from_t(&t)?;
    let h_c = h31_from_c(&c)?;
    let lz = LzParams::real(rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1))?;
    let h_lz = h31_lz(&lz);
    let modulus = h_t.re.abs();

    let texts = |v: &[ComplexScalar<ExactScalar>]| v.iter().map(ctext).collect::<Vec<_>>();
    let expect_c: Vec<_> = [0, 0, 2, 0, 0, 2].iter().map(|&x| crate::scalar::real(rat(x, 1))).collect();
    let expect_a: Vec<_> = [(0, 1), (0, 1), (1, 6), (0, 1)]
        .iter()
        .map(|&(p, q)| crate::scalar::real(rat(p, q)))
        .collect();
    let expect_t: Vec<_> = [(0, 1), (0, 1), (-1, 6), (0, 1)]
        .iter()
        .map(|&(p, q)| crate::scalar::real(rat(p, q)))
        .collect();
    let sharp = crate::scalar::real(rat(-1, 36));
    let ok = c.as_slice() == expect_c.as_slice()
        && a.tail() == expect_a.as_slice()
        && t.tail() == expect_t.as_slice()
        && t_rev == t
        && t_direct == t
        && [&h_det, &h_t, &h_c, &h_lz].iter().all(|h| **h == sharp)
        && h_t.im.is_zero()
        && modulus == rat(1, 36);

    Ok((
        ExtremalValues {
            c: texts(c.as_slice()),
            a: texts(a.tail()),
            t: texts(t.tail()),
            t_by_reversion: texts(t_rev.tail()),
            h_determinant: ctext(&h_det),
            h_t_formula: ctext(&h_t),
            h_c_formula: ctext(&h_c),
            h_parametric: ctext(&h_lz),
            modulus: modulus.to_text(),
        },
        ok,
    ))
}

/// Attached to extremal reports: the sign of `t₄`.
pub const T4_SIGN_NOTE: &str = "t4 = -a4 = -1/6 for the extremal map; it is sometimes quoted \
as +1/6. Only t4^2 enters H31 = -t4^2 here, so the modulus 1/36 is unaffected.";

pub fn cmd_extremal(config: &RunConfig) -> Result<Outcome> {
    let (values, ok) = extremal_values()?;
    let mut table = CsvTable::new(&["quantity", "value"]);
    let mut push = |k: &str, v: &str| table.rows.push(vec![k.to_owned(), v.to_owned()]);
    for (i, x) in values.c.iter().enumerate() {
        push(&format!("c{}", i + 1), x);
    }
    for (i, x) in values.a.iter().enumerate() {
        push(&format!("a{}", i + 2), x);
    }
    for (i, x) in values.t.iter().enumerate() {
        push(&format!("t{}", i + 2), x);
    }
    push("h31", &values.h_t_formula);
    push("modulus", &values.modulus);
    Ok(Outcome::new(
        config,
        ok,
        json!({
            "h31": values.h_t_formula,
            "modulus": values.modulus,
            "routes-agree": ok,
        }),
        json!({
            "values": values,
            "note": T4_SIGN_NOTE,
        }),
        table,
    ))
}

/// Builds the global thread pool from `HANKEL_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{THREADS_ENV}={v} is not a count")))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Error::InvalidConfig(e.to_string()))
        }
        Err(_) => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremal_routes_agree() {
        let (v, ok) = extremal_values().unwrap();
        assert!(ok, "{v:?}");
        assert_eq!(v.modulus, "1/36");
        assert_eq!(v.t[2], "-1/6");
        assert_eq!(v.c, ["0/1", "0/1", "2/1", "0/1", "0/1", "2/1"]);
    }

    #[test]
    fn witness_only_sampling_is_exactly_sharp() {
        let mut cfg = RunConfig::new(Command::Sample);
        cfg.sample_count = 0;
        cfg.exact = true;
        let out = cmd_sample(&cfg).unwrap();
        assert_eq!(out.exit_code, EXIT_SUCCESS);
        assert_eq!(out.table.rows.len(), 3);
        let w = &out.report.artifacts["exact-witnesses"][2];
        assert_eq!(w["h31"], "-1/36");
        assert_eq!(out.report.metrics["argmax-label"], "witness-3");
    }

    #[test]
    fn validation_rejects_bad_configs() {
        let mut cfg = RunConfig::new(Command::Maximize);
        cfg.grid_resolution = 1;
        assert!(run(&cfg).is_err());
        let mut cfg = RunConfig::new(Command::LzCheck);
        cfg.sample_count = 0;
        assert!(run(&cfg).is_err());
    }
}
