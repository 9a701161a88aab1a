//! CLI front-end machinery: run configuration, the deterministic experiment
//! driver, and JSON/CSV reporting.
//!
//! Everything here is reproducible: a `RunConfig` pins (command, gauge, dim,
//! trials, seed) and two runs with the same configuration produce reports
//! that are byte-identical once the per-record wall clock is stripped
//! (see [`json_without_timing`]).

mod rng;

pub use rng::{
    random_hermitian, random_orthonormal_pair, random_trace_zero_hermitian, random_unit_vector,
    random_unitary, random_vector, substream, SplitMix64,
};

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::extraction::{
    dichotomy_report, extract_generator, make_commutator, verify_commutator, GaugeDichotomy,
};
use crate::gauge::{hlp_majorizes, rearrange, SymmetricGauge};
use crate::spectral::{ideal_norm, trace_pair_re, HermitianMatrix};
use crate::support::{is_skew_hermitian, semi_inner, SuperOp, SKEW_TOL};
use crate::{Error, Result};

/// CLI commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Gauge-norm fixtures and norm invariants.
    Norms,
    /// Köthe dual norms and pairing bounds.
    Duals,
    /// Skew-Hermitian certificates for commutators and the identity map.
    Skewcheck,
    /// Generator extraction round trip.
    Extract,
    /// The Frobenius-vs-everything-else dichotomy experiment.
    Dichotomy,
    /// The full acceptance suite.
    All,
}

impl fmt::Display for Command {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Command::Norms => "norms",
            Command::Duals => "duals",
            Command::Skewcheck => "skewcheck",
            Command::Extract => "extract",
            Command::Dichotomy => "dichotomy",
            Command::All => "all",
        };
        write!(out, "{name}")
    }
}

/// One deterministic run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub gauge: String,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: Option<f64>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<SymmetricGauge> {
        if !(2..=32).contains(&self.dim) {
            return Err(Error::Config(format!("dim must be in 2..=32, got {}", self.dim)));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        self.gauge.parse()
    }
}

/// One named check with its verdict and measured value.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: bool,
    pub value: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<HermitianMatrix>,
    pub wall_ms: u64,
}

/// Full run report; serializes with stable field order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dichotomy: Option<Vec<GaugeDichotomy>>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict)
            && self
                .dichotomy
                .as_ref()
                .map(|cells| cells.iter().all(|c| c.all_pass()))
                .unwrap_or(true)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,verdict,value,tolerance,wall_ms\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.name, r.verdict, r.value, r.tolerance, r.wall_ms
            ));
        }
        out
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "command={} gauge={} dim={} trials={} seed={}\n",
            self.config.command, self.config.gauge, self.config.dim, self.config.trials,
            self.config.seed
        ));
        out.push_str(&format!(
            "{:<44} {:<6} {:>13} {:>10} {:>7}\n",
            "check", "result", "value", "tolerance", "ms"
        ));
        for r in &self.records {
            out.push_str(&format!(
                "{:<44} {:<6} {:>13.6e} {:>10.1e} {:>7}\n",
                r.name,
                if r.verdict { "pass" } else { "FAIL" },
                r.value,
                r.tolerance,
                r.wall_ms
            ));
        }
        if let Some(cells) = &self.dichotomy {
            out.push_str("\ndichotomy cells\n");
            for cell in cells {
                let summary: Vec<String> = cell
                    .verdicts
                    .iter()
                    .map(|v| format!("{}={}", v.name, if v.pass { "pass" } else { "FAIL" }))
                    .collect();
                out.push_str(&format!(
                    "  {:<22} residual={:.3e} {}\n",
                    cell.gauge,
                    cell.residuals.first().copied().unwrap_or(f64::NAN),
                    summary.join(" ")
                ));
            }
        }
        out
    }
}

/// Report JSON with every `wall_ms` zeroed out: the byte-comparable form.
pub fn json_without_timing(report: &Report) -> String {
    let mut value = serde_json::to_value(report).expect("report serializes");
    zero_wall_clock(&mut value);
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

fn zero_wall_clock(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            if let Some(w) = map.get_mut("wall_ms") {
                *w = serde_json::Value::from(0u64);
            }
            for (_, v) in map.iter_mut() {
                zero_wall_clock(v);
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                zero_wall_clock(v);
            }
        }
        _ => {}
    }
}

fn push_record(
    records: &mut Vec<CheckRecord>,
    name: impl Into<String>,
    tolerance: f64,
    body: impl FnOnce() -> Result<(bool, f64, Option<HermitianMatrix>)>,
) -> Result<()> {
    let started = Instant::now();
    let (verdict, value, witness) = body()?;
    records.push(CheckRecord {
        name: name.into(),
        verdict,
        value,
        tolerance,
        witness,
        wall_ms: started.elapsed().as_millis() as u64,
    });
    Ok(())
}

/// Execute a run configuration. Deterministic for a fixed config; the exit
/// status contract is `report.all_pass()`.
pub fn run(config: &RunConfig) -> Result<Report> {
    let gauge = config.validate()?;
    let mut records = Vec::new();
    let mut dichotomy = None;
    match config.command {
        Command::Norms => norm_records(&gauge, config, &mut records)?,
        Command::Duals => dual_records(&gauge, config, &mut records)?,
        Command::Skewcheck => skew_records(&gauge, config, &mut records)?,
        Command::Extract => extract_records(&gauge, config, &mut records)?,
        Command::Dichotomy => {
            let cells = dichotomy_report(config.dim, config.trials, config.seed)?;
            dichotomy_records(&cells, &mut records)?;
            dichotomy = Some(cells);
        }
        Command::All => {
            acceptance_records(config, &mut records)?;
            let cells = dichotomy_report(2, config.trials, config.seed)?;
            dichotomy_records(&cells, &mut records)?;
            dichotomy = Some(cells);
        }
    }
    Ok(Report { config: config.clone(), records, dichotomy })
}

fn fixtures(dim: usize, seed: u64, tag: u64) -> Vec<(String, Vec<f64>)> {
    let mut list = vec![
        ("ones".to_string(), vec![1.0; dim]),
        ("basis".to_string(), {
            let mut e = vec![0.0; dim];
            e[0] = 1.0;
            e
        }),
    ];
    for k in 0..3u64 {
        list.push((format!("random{k}"), random_vector(dim, substream(seed, tag, k))));
    }
    list
}

fn signed_shuffle(x: &[f64], seed: u64) -> Vec<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut out = x.to_vec();
    for j in (1..out.len()).rev() {
        let k = (rng.next_u64() % (j as u64 + 1)) as usize;
        out.swap(j, k);
    }
    for v in out.iter_mut() {
        if rng.next_f64() < 0.5 {
            *v = -*v;
        }
    }
    out
}

fn norm_records(
    g: &SymmetricGauge,
    config: &RunConfig,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    let e1 = {
        let mut e = vec![0.0; config.dim];
        e[0] = 1.0;
        e
    };
    let unit = g.norm(&e1)?;
    for (label, x) in fixtures(config.dim, config.seed, 0x6e6f726d) {
        push_record(records, format!("norms/{label}"), 1e-10, || {
            let value = g.norm(&x)?;
            let mut worst = 0.0f64;
            // symmetry under signed permutations and rearrangement
            for k in 0..4 {
                let sigma = signed_shuffle(&x, substream(config.seed, 0x7065726d, k));
                worst = worst.max((g.norm(&sigma)? - value).abs());
            }
            worst = worst.max((g.norm(&rearrange(&x))? - value).abs());
            // absolute homogeneity
            let scaled: Vec<f64> = x.iter().map(|v| -1.75 * v).collect();
            worst = worst.max((g.norm(&scaled)? - 1.75 * value).abs());
            // triangle inequality against a seeded partner
            let y = random_vector(config.dim, substream(config.seed, 0x74726961, 17));
            let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            worst = worst.max((g.norm(&sum)? - g.norm(&x)? - g.norm(&y)?).max(0.0));
            // scale-free sandwich between the sup and sum norms
            let l1: f64 = x.iter().map(|v| v.abs()).sum();
            let linf = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            worst = worst.max((value - l1 * unit).max(0.0));
            worst = worst.max((linf * unit - value).max(0.0));
            Ok((worst <= 1e-10, value, None))
        })?;
    }
    Ok(())
}

fn dual_records(
    g: &SymmetricGauge,
    config: &RunConfig,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    for (label, x) in fixtures(config.dim, config.seed, 0x6475616c) {
        push_record(records, format!("duals/{label}"), 1e-8, || {
            let value = g.dual_norm(&x)?;
            let mut worst = 0.0f64;
            // generalized Hölder pairing bound against seeded vectors; the
            // iterative families may undershoot the sup by ~1e-6, hence the slack
            for k in 0..6 {
                let eta = random_vector(config.dim, substream(config.seed, 0x686f6c64, k));
                let pairing: f64 = x.iter().zip(&eta).map(|(a, b)| a * b).sum();
                let overshoot = pairing.abs() - value * g.norm(&eta)? - 1e-6;
                worst = worst.max(overshoot.max(0.0));
            }
            // the canonical attainer pairs back to the norm with unit dual norm
            let s = rearrange(&x);
            if s[0] > 0.0 {
                let d = g.norming_functional(&s)?;
                let pairing: f64 = s.iter().zip(&d).map(|(a, b)| a * b).sum();
                worst = worst.max((pairing - g.norm(&s)?).abs());
                worst = worst.max(((g.dual_norm(&d)? - 1.0).abs() - 1e-4).max(0.0));
            }
            Ok((worst <= 1e-8, value, None))
        })?;
    }
    Ok(())
}

fn skew_records(
    g: &SymmetricGauge,
    config: &RunConfig,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    let tol = config.tolerance.unwrap_or(SKEW_TOL);
    push_record(records, "skewcheck/commutator", tol, || {
        let b = random_trace_zero_hermitian(config.dim, substream(config.seed, 0x736b6577, 0));
        let h = make_commutator(&b);
        let report = is_skew_hermitian(g, &h, config.trials, substream(config.seed, 0x736b6577, 1))?;
        Ok((report.worst_value < tol, report.worst_value, Some(report.worst_witness)))
    })?;
    push_record(records, "skewcheck/identity_rejected", 0.5, || {
        let h = SuperOp::identity(config.dim);
        let report = is_skew_hermitian(g, &h, config.trials, substream(config.seed, 0x736b6577, 2))?;
        Ok((!report.verdict && report.worst_value >= 0.5, report.worst_value, Some(report.worst_witness)))
    })?;
    Ok(())
}

fn extract_records(
    g: &SymmetricGauge,
    config: &RunConfig,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    let b = random_trace_zero_hermitian(config.dim, substream(config.seed, 0x78747261, 0));
    let h = make_commutator(&b);
    push_record(records, "extract/round_trip", 1e-8, || {
        let gen = extract_generator(&h)?;
        let entry_err = (gen.b.matrix() - b.matrix()).frobenius_norm();
        let gauge_err = verify_commutator(&h, &gen.b, g)?;
        let value = entry_err.max(gen.residual).max(gauge_err);
        Ok((value < 1e-8, value, None))
    })?;
    push_record(records, "extract/shift_invariance", 1e-8, || {
        let shifted = HermitianMatrix::linear_combination(
            &[(1.0, &b), (2.5, &HermitianMatrix::identity(config.dim))],
            config.dim,
        );
        let gen = extract_generator(&make_commutator(&shifted))?;
        let value = (gen.b.matrix() - b.matrix()).frobenius_norm();
        Ok((value < 1e-8, value, None))
    })?;
    Ok(())
}

fn dichotomy_records(cells: &[GaugeDichotomy], records: &mut Vec<CheckRecord>) -> Result<()> {
    for cell in cells {
        let name = format!("dichotomy/{}", cell.gauge);
        let value = cell.residuals.first().copied().unwrap_or(f64::NAN);
        let pass = cell.all_pass();
        push_record(records, name, 0.4, move || Ok((pass, value, None)))?;
    }
    Ok(())
}

/// The gauges every acceptance pass exercises: the round-trip list plus the
/// Frobenius norm.
pub fn acceptance_gauges() -> Vec<SymmetricGauge> {
    let mut list = round_trip_gauges();
    list.push("lp:2".parse().expect("well-formed"));
    list
}

/// The seven gauges of the round-trip criterion.
pub fn round_trip_gauges() -> Vec<SymmetricGauge> {
    [
        "lp:1",
        "lp:1.5",
        "lp:4",
        "lp:inf",
        "orlicz:pow:3",
        "lorentz:pow:0.5",
        "marcinkiewicz:pow:0.5",
    ]
    .iter()
    .map(|t| t.parse().expect("well-formed"))
    .collect()
}

/// Slow reference Köthe dual norm: staged exhaustive grid over the monotone
/// part of the unit sphere; supports n ≤ 3.
pub fn grid_dual_reference(g: &SymmetricGauge, x: &[f64]) -> Result<f64> {
    let c = rearrange(x);
    if c[0] == 0.0 {
        return Ok(0.0);
    }
    let objective = |d: &[f64]| -> Result<f64> {
        let norm = g.norm(d)?;
        if norm == 0.0 {
            return Ok(0.0);
        }
        Ok(c.iter().zip(d).map(|(a, b)| a * b).sum::<f64>() / norm)
    };
    match c.len() {
        1 => objective(&[1.0]),
        2 => {
            let mut lo = 0.0f64;
            let mut hi = 1.0f64;
            let mut best = 0.0f64;
            for _stage in 0..3 {
                let m = 800;
                let mut best_t = lo;
                for k in 0..=m {
                    let t = lo + (hi - lo) * k as f64 / m as f64;
                    let v = objective(&[1.0, t])?;
                    if v > best {
                        best = v;
                        best_t = t;
                    }
                }
                let span = (hi - lo) / m as f64;
                lo = (best_t - 2.0 * span).max(0.0);
                hi = (best_t + 2.0 * span).min(1.0);
            }
            Ok(best)
        }
        3 => {
            let mut t_lo = 0.0f64;
            let mut t_hi = 1.0f64;
            let mut r_lo = 0.0f64;
            let mut r_hi = 1.0f64;
            let mut best = 0.0f64;
            for _stage in 0..3 {
                let m = 120;
                let mut best_t = t_lo;
                let mut best_r = r_lo;
                for i in 0..=m {
                    let t = t_lo + (t_hi - t_lo) * i as f64 / m as f64;
                    for j in 0..=m {
                        let r = r_lo + (r_hi - r_lo) * j as f64 / m as f64;
                        let v = objective(&[1.0, t, t * r])?;
                        if v > best {
                            best = v;
                            best_t = t;
                            best_r = r;
                        }
                    }
                }
                let t_span = (t_hi - t_lo) / m as f64;
                let r_span = (r_hi - r_lo) / m as f64;
                t_lo = (best_t - 2.0 * t_span).max(0.0);
                t_hi = (best_t + 2.0 * t_span).min(1.0);
                r_lo = (best_r - 2.0 * r_span).max(0.0);
                r_hi = (best_r + 2.0 * r_span).min(1.0);
            }
            Ok(best)
        }
        n => Err(Error::Config(format!("grid reference supports n <= 3, got {n}"))),
    }
}

/// Construct a pair with x ≺≺ y: start from y, apply mass transfers toward
/// the tail and shrink a few entries, then hide the order behind a signed
/// shuffle.
pub fn constructed_hlp_pair(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = SplitMix64::new(seed);
    let y: Vec<f64> = (0..n).map(|_| rng.next_symmetric() * 2.0).collect();
    let mut s = rearrange(&y);
    for _ in 0..n {
        let i = (rng.next_u64() % n as u64) as usize;
        let j = (rng.next_u64() % n as u64) as usize;
        let (i, j) = (i.min(j), i.max(j));
        if i == j {
            continue;
        }
        let delta = 0.5 * rng.next_f64() * (s[i] - s[j]);
        s[i] -= delta;
        s[j] += delta;
    }
    for v in s.iter_mut() {
        if rng.next_f64() < 0.3 {
            *v *= rng.next_f64();
        }
        // strict margin so rounding in the transfers cannot tip a prefix sum
        *v *= 1.0 - 1e-12;
    }
    let x = signed_shuffle(&s, rng.next_u64());
    debug_assert!(hlp_majorizes(&x, &y));
    (x, y)
}

fn acceptance_records(config: &RunConfig, records: &mut Vec<CheckRecord>) -> Result<()> {
    let seed = config.seed;

    // Round trip: 50 generators per dimension 2..=8, verified under the
    // seven-round-trip gauges; extraction itself is gauge-free.
    let started = Instant::now();
    let gauges = round_trip_gauges();
    let mut worst_extract = 0.0f64;
    let mut worst_verify = vec![0.0f64; gauges.len()];
    for n in 2..=8usize {
        for k in 0..50u64 {
            let b = random_trace_zero_hermitian(n, substream(seed, 0x72747030 + n as u64, k));
            let h = make_commutator(&b);
            let gen = extract_generator(&h)?;
            let entry_err = (gen.b.matrix() - b.matrix()).frobenius_norm();
            worst_extract = worst_extract.max(entry_err).max(gen.residual);
            for (gi, g) in gauges.iter().enumerate() {
                worst_verify[gi] = worst_verify[gi].max(verify_commutator(&h, &gen.b, g)?);
            }
        }
    }
    let round_trip_secs = started.elapsed().as_secs_f64();
    push_record(records, "round_trip/extract", 1e-8, || {
        Ok((worst_extract < 1e-8, worst_extract, None))
    })?;
    for (gi, g) in gauges.iter().enumerate() {
        let value = worst_verify[gi];
        push_record(records, format!("round_trip/verify/{g}"), 1e-8, move || {
            Ok((value < 1e-8, value, None))
        })?;
    }
    push_record(records, "round_trip/runtime_s", 60.0, move || {
        Ok((round_trip_secs < 60.0, round_trip_secs, None))
    })?;

    // Skew certificates: commutators pass with >= 200 witnesses; the
    // identity operator fails decisively.
    for g in acceptance_gauges() {
        push_record(records, format!("skew_certificates/{g}"), 1e-7, || {
            let mut worst = 0.0f64;
            let mut all_pass = true;
            for n in [2usize, 3, 4] {
                for k in 0..2u64 {
                    let b = random_trace_zero_hermitian(n, substream(seed, 0x73630000 + n as u64, k));
                    let h = make_commutator(&b);
                    let report =
                        is_skew_hermitian(&g, &h, 70, substream(seed, 0x73631111 + n as u64, k))?;
                    worst = worst.max(report.worst_value);
                    all_pass = all_pass && report.verdict;
                }
            }
            Ok((all_pass && worst < 1e-7, worst, None))
        })?;
        push_record(records, format!("skew_identity/{g}"), 0.5, || {
            let h = SuperOp::identity(3);
            let report = is_skew_hermitian(&g, &h, 70, substream(seed, 0x73632222, 0))?;
            Ok((!report.verdict && report.worst_value >= 0.5, report.worst_value, None))
        })?;
    }

    // Rank-one orthogonality for commutators.
    push_record(records, "orthogonality", 1e-9, || {
        let b = random_trace_zero_hermitian(4, substream(seed, 0x6f727468, 0));
        let h = make_commutator(&b);
        let mut worst = 0.0f64;
        for k in 0..100u64 {
            let (eta, xi) = random_orthonormal_pair(4, substream(seed, 0x6f727468, 1 + k));
            let image = h.apply(&HermitianMatrix::dyad(&eta));
            worst = worst.max(trace_pair_re(&image, &HermitianMatrix::dyad(&xi)).abs());
        }
        Ok((worst < 1e-9, worst, None))
    })?;

    // Conjugation closure: unitary conjugates of commutators stay skew.
    for g in acceptance_gauges() {
        push_record(records, format!("conjugation/{g}"), 1e-7, || {
            let b = random_trace_zero_hermitian(3, substream(seed, 0x636f6e6a, 0));
            let h = make_commutator(&b);
            let mut worst = 0.0f64;
            let mut all_pass = true;
            for k in 0..20u64 {
                let u = random_unitary(3, substream(seed, 0x636f6e6a, 1 + k));
                let conj = h.conjugate_by(&u);
                let report = is_skew_hermitian(&g, &conj, 20, substream(seed, 0x636f6e6b, k))?;
                worst = worst.max(report.worst_value);
                all_pass = all_pass && report.verdict;
            }
            Ok((all_pass, worst, None))
        })?;
    }

    // Gauge kernel: closed-form reductions.
    push_record(records, "gauge_kernel/closed_forms", 1e-12, || {
        let lorentz1: SymmetricGauge = "lorentz:pow:1".parse()?;
        let marc1: SymmetricGauge = "marcinkiewicz:pow:1".parse()?;
        let orlicz2: SymmetricGauge = "orlicz:pow:2".parse()?;
        let l1 = SymmetricGauge::lp(1.0)?;
        let l2 = SymmetricGauge::lp(2.0)?;
        let linf = SymmetricGauge::lp(f64::INFINITY)?;
        let mut worst = 0.0f64;
        for n in [2usize, 3, 5, 8] {
            for k in 0..12u64 {
                let x = random_vector(n, substream(seed, 0x636c6f73 + n as u64, k));
                worst = worst.max((lorentz1.norm(&x)? - l1.norm(&x)?).abs());
                worst = worst.max((marc1.norm(&x)? - linf.norm(&x)?).abs());
                worst = worst.max((orlicz2.norm(&x)? - l2.norm(&x)?).abs());
            }
        }
        worst = worst.max((lorentz1.norm(&[3.0, 1.0, 2.0])? - 6.0).abs());
        worst = worst.max((marc1.norm(&[3.0, 1.0, 2.0])? - 3.0).abs());
        worst = worst.max((orlicz2.norm(&[3.0, 4.0])? - 5.0).abs());
        let lhalf: SymmetricGauge = "lorentz:pow:0.5".parse()?;
        worst = worst.max((lhalf.norm(&[1.0, 1.0])? - 2.0f64.sqrt()).abs());
        Ok((worst <= 1e-12, worst, None))
    })?;

    // Gauge kernel: dual norms against the staged grid reference at n <= 3.
    push_record(records, "gauge_kernel/duality_grid", 1e-3, || {
        let mut worst = 0.0f64;
        for g in acceptance_gauges() {
            for n in [2usize, 3] {
                for k in 0..3u64 {
                    let x = random_vector(n, substream(seed, 0x67726964 + n as u64, k));
                    let fast = g.dual_norm(&x)?;
                    let slow = grid_dual_reference(&g, &x)?;
                    worst = worst.max((fast - slow).abs());
                }
            }
        }
        Ok((worst <= 1e-3, worst, None))
    })?;

    // Gauge kernel: submajorization monotonicity, zero violations allowed.
    for g in [
        "lp:1.5",
        "orlicz:exppow:2",
        "lorentz:pow:0.5",
        "marcinkiewicz:pow:0.5",
    ] {
        let gauge: SymmetricGauge = g.parse()?;
        push_record(records, format!("gauge_kernel/hlp_monotone/{g}"), 1e-10, || {
            let mut worst = 0.0f64;
            let mut violations = 0u32;
            for k in 0..1000u64 {
                let n = 2 + (k % 7) as usize;
                let (x, y) = constructed_hlp_pair(n, substream(seed, 0x686c7030, k));
                if !hlp_majorizes(&x, &y) {
                    violations += 1;
                    continue;
                }
                let excess = gauge.norm(&x)? - gauge.norm(&y)?;
                worst = worst.max(excess);
                if excess > 1e-10 {
                    violations += 1;
                }
            }
            Ok((violations == 0, worst, None))
        })?;
    }

    // Semi-inner axioms per gauge on 500 random triples.
    for g in acceptance_gauges() {
        push_record(records, format!("semi_inner_axioms/{g}"), 1e-8, || {
            let mut worst = 0.0f64;
            for k in 0..500u64 {
                let x = random_hermitian(3, substream(seed, 0x73696131, k));
                let y = random_hermitian(3, substream(seed, 0x73696132, k));
                let z = random_hermitian(3, substream(seed, 0x73696133, k));
                let alpha = 2.0 * SplitMix64::new(substream(seed, 0x73696134, k)).next_f64() - 1.0;

                let combo = HermitianMatrix::linear_combination(&[(alpha, &x), (1.0, &y)], 3);
                let additivity = (semi_inner(&g, &combo, &z)?
                    - alpha * semi_inner(&g, &x, &z)?
                    - semi_inner(&g, &y, &z)?)
                .abs();
                worst = worst.max(additivity);

                for a in [1.3, -1.3] {
                    let ay = HermitianMatrix::linear_combination(&[(a, &y)], 3);
                    worst = worst
                        .max((semi_inner(&g, &x, &ay)? - a * semi_inner(&g, &x, &y)?).abs());
                }

                let xx = semi_inner(&g, &x, &x)?;
                let nu = ideal_norm(&g, x.matrix())?;
                worst = worst.max((xx - nu * nu).abs());
                if xx < 0.0 {
                    worst = worst.max(-xx);
                }

                let xy = semi_inner(&g, &x, &y)?;
                let yy = semi_inner(&g, &y, &y)?;
                worst = worst.max((xy * xy - xx * yy).max(0.0));
            }
            Ok((worst < 1e-8, worst, None))
        })?;
    }

    Ok(())
}
