//! Command-line front end.
//!
//! Every subcommand renders to a `String`; the binary only decides where it
//! goes. Exit codes: 0 success, 2 parse error, 3 mathematical inconsistency,
//! 4 enumeration budget exceeded, 1 anything else (I/O).

use crate::bounds::{
    self, bound_sweep, count_lattice_points, n12_lattice, n12_polytope, n7_lattice, n7_polytope, LatticeSpec, Polytope,
    QuantumFilter, SweepTarget,
};
use crate::distill::{self, build_map_with, LogicalSign, NoiseExponent, Threshold};
use crate::enums::{EnumError, Enumerator};
use crate::gf4core::{parse_code, parse_database, Gf4Code, Gf4Error, DEFAULT_MAX_DIMENSION};
use crate::invariants::{self, SignClass};
use crate::oracle::{self, Exact, Float, OracleError};
use crate::rational::{big, parse_rational, rat, to_decimal, to_f64, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::HashSet;
use std::path::PathBuf;
use thiserror::Error;

/// The 5-qubit threshold every search result is compared against.
pub const BASELINE_THRESHOLD: f64 = 0.172673;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent input: {0}")]
    Math(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Math(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<Gf4Error> for CliError {
    fn from(e: Gf4Error) -> Self {
        match e {
            Gf4Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::Malformed(_) => CliError::Parse(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<distill::DistillError> for CliError {
    fn from(e: distill::DistillError) -> Self {
        CliError::Math(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Code(inner) => inner.into(),
            OracleError::TooLarge(_) => CliError::Budget(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "m3enum", version, about = "Weight enumerators, distillation maps and LP bounds for M3-codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Fractional digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: usize,
    /// Render rationals as decimals instead of exact `p/q` strings.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Largest code dimension k enumerated (4^k codewords).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub budget: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { out: None, precision: 12, decimal: false, budget: DEFAULT_MAX_DIMENSION }
    }
}

impl RunConfig {
    fn num(&self, x: &Rational) -> Value {
        Value::String(self.text(x))
    }

    fn text(&self, x: &Rational) -> String {
        if self.decimal {
            to_decimal(x, self.precision)
        } else {
            x.to_string()
        }
    }

    fn coeffs(&self, e: &Enumerator) -> Value {
        Value::Array(e.coeffs().iter().map(|c| self.num(c)).collect())
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct QuantumFlags {
    /// Only the quantum-constrained column.
    #[arg(long, conflicts_with = "classical_only")]
    pub quantum: bool,
    /// Only the classical column.
    #[arg(long)]
    pub classical_only: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerators, distillation map and verdicts for one code file.
    Analyze { path: PathBuf },
    /// Shorten every code of a database at every coordinate and rank the results.
    Search { path: PathBuf },
    /// LP bound sweeps over n.
    Bounds {
        #[arg(long, value_enum, default_value_t = Target::Nu)]
        target: Target,
        #[arg(long, default_value_t = 5)]
        from: usize,
        #[arg(long, default_value_t = 49)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[command(flatten)]
        flags: QuantumFlags,
    },
    /// Extremal enumerators of the distillation or self-dual family.
    Extremal {
        #[arg(long, value_enum, default_value_t = Family::Distill)]
        family: Family,
        n: usize,
    },
    /// `epsilon,epsilon_out` samples of the map of an enumerator JSON file.
    Curve {
        path: PathBuf,
        #[arg(long, default_value_t = 512)]
        grid: usize,
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
    },
    /// Dense-matrix cross-check of a code's enumerator formulas.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Integer points of the built-in planar polytopes or a polytope file.
    Lattice {
        #[arg(long, value_enum, default_value_t = LatticeCase::N7)]
        case: LatticeCase,
        /// Polytope JSON; overrides `--case`.
        #[arg(long)]
        polytope: Option<PathBuf>,
        /// Comma-separated moduli for `--polytope`.
        #[arg(long)]
        moduli: Option<String>,
        /// Apply the quantum filter.
        #[arg(long)]
        quantum: bool,
        /// Filter by `A(1, i/sqrt 3) ≥ 0` only.
        #[arg(long, conflicts_with = "quantum")]
        pure_state: bool,
        /// Print the polytope JSON instead of the points.
        #[arg(long)]
        emit_polytope: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Nu,
    Distance,
    ClassicalDistance,
    /// Extremal self-dual `A(1, i/sqrt 3)` for multiples of 12.
    Selfdual,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Distill,
    Selfdual,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeCase {
    N7,
    N12,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Analyze { path } => {
            let code = parse_code(&read(path)?).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(pretty(&analyze_code(&code, cfg)?))
        }
        Command::Search { path } => search(&read(path)?, cfg),
        Command::Bounds { target, from, to, step, flags } => Ok(bounds_table(*target, *from, *to, *step, *flags, cfg)),
        Command::Extremal { family, n } => Ok(pretty(&extremal(*family, *n, cfg)?)),
        Command::Curve { path, grid, sign } => {
            let value: Value = serde_json::from_str(&read(path)?).map_err(|e| CliError::Parse(e.to_string()))?;
            // a bare enumerator or an `analyze` report
            let a = Enumerator::from_json(value.get("enumerator").unwrap_or(&value))?;
            curve(&a, *grid, sign.map(to_sign), cfg)
        }
        Command::Verify { path, samples } => {
            let code = parse_code(&read(path)?).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(pretty(&verify(&code, *samples, cfg)?))
        }
        Command::Lattice { case, polytope, moduli, quantum, pure_state, emit_polytope } => {
            let filter = if *quantum {
                QuantumFilter::Full
            } else if *pure_state {
                QuantumFilter::PureStateOnly
            } else {
                QuantumFilter::None
            };
            match polytope {
                Some(p) => lattice_file(&read(p)?, moduli.as_deref(), *emit_polytope, cfg),
                None => lattice_case(*case, filter, *emit_polytope, cfg),
            }
        }
    }
}

fn to_sign(s: SignArg) -> LogicalSign {
    match s {
        SignArg::Plus => LogicalSign::Plus,
        SignArg::Minus => LogicalSign::Minus,
    }
}

fn threshold_value(map: &distill::DistillMap, cfg: &RunConfig) -> Value {
    match map.threshold() {
        Threshold::Found(r) => {
            let mut v = r.to_json(cfg.precision);
            if !cfg.decimal {
                v.as_object_mut().unwrap().remove("decimal");
            }
            v
        }
        Threshold::None => Value::Null,
    }
}

fn exponent_value(map: &distill::DistillMap, cfg: &RunConfig) -> Value {
    match map.noise_exponent() {
        NoiseExponent::Defined { nu, leading } => json!({"nu": nu, "leading": cfg.num(&leading)}),
        NoiseExponent::Useless => json!("useless"),
        NoiseExponent::Perfect => json!("perfect"),
    }
}

/// Per-sign map summary for an `[[n, 1]]` enumerator.
fn map_report(a: &Enumerator, cfg: &RunConfig) -> Result<Value, CliError> {
    let class = SignClass::of(a.n()).ok_or(distill::DistillError::WrongClass(a.n()))?;
    let mut maps = serde_json::Map::new();
    let mut best: Option<Rational> = None;
    for sign in [LogicalSign::Plus, LogicalSign::Minus] {
        let map = build_map_with(a, sign)?;
        if let Threshold::Found(r) = map.threshold() {
            if r.stable && best.as_ref().is_none_or(|b| r.estimate() > *b) {
                best = Some(r.estimate());
            }
        }
        maps.insert(
            sign.name().into(),
            json!({
                "lambda_hat": sign.lambda_hat(),
                "exponent": exponent_value(&map, cfg),
                "threshold": threshold_value(&map, cfg),
            }),
        );
    }
    let verdict = distill::quantum_verdict(a)?;
    Ok(json!({
        "class": class.name(),
        "default_sign": LogicalSign::default_for(class).name(),
        "maps": maps,
        "best_threshold": best.map(|b| cfg.num(&b)).unwrap_or(Value::Null),
        "quantum": verdict.to_json(),
    }))
}

pub fn analyze_code(code: &Gf4Code, cfg: &RunConfig) -> Result<Value, CliError> {
    // sign consistency of the stabilizer group
    code.rall_signs(cfg.budget)?;
    let a = code.weight_enumerator(cfg.budget)?;
    let count = big(BigInt::from(4u32).pow(code.k() as u32));
    let b = a.macwilliams(&count)?;
    let c = Enumerator::logical_enumerator(&a, &b)?;
    let qubits = code.n() - 2 * code.k();
    let mut report = json!({
        "n": code.n(),
        "k": code.k(),
        "logical_qubits": qubits,
        "A": cfg.coeffs(&a),
        "B": cfg.coeffs(&b),
        "C": cfg.coeffs(&c),
        "hash": a.hash_key(),
        "enumerator": {"n": a.n(), "coeffs": a.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()},
    });
    let obj = report.as_object_mut().unwrap();
    let pure = a.signed_eval(&rat(1, 3))?;
    obj.insert("pure_state_value".into(), cfg.num(&pure));
    if qubits == 0 {
        let state = distill::check_state_nonneg(&a)?;
        obj.insert("self_dual".into(), json!(true));
        obj.insert(
            "state_nonneg".into(),
            json!({
                "pure": !pure.is_negative(),
                "all_noise": state.nonneg,
                "witness_u": state.witness.map(|u| cfg.num(&u)).unwrap_or(Value::Null),
            }),
        );
    } else if qubits == 1 && SignClass::of(code.n()).is_some() {
        obj.insert("distillation".into(), map_report(&a, cfg)?);
    }
    Ok(report)
}

fn search(text: &str, cfg: &RunConfig) -> Result<String, CliError> {
    let mut seen = HashSet::new();
    let mut rows: Vec<(Enumerator, usize, usize)> = Vec::new();
    let mut notes = String::new();
    for (block, parsed) in parse_database(text).into_iter().enumerate() {
        let code = match parsed {
            Ok(c) => c,
            Err(e) => {
                notes.push_str(&format!("# block {}: {e}\n", block + 1));
                continue;
            }
        };
        for coord in 0..code.n() {
            let short = match code.shorten(coord) {
                Ok(s) => s,
                Err(e) => {
                    notes.push_str(&format!("# block {} coordinate {coord}: {e}\n", block + 1));
                    continue;
                }
            };
            let a = match short.weight_enumerator(cfg.budget) {
                Ok(a) => a,
                Err(e) => {
                    notes.push_str(&format!("# block {} coordinate {coord}: {e}\n", block + 1));
                    continue;
                }
            };
            if seen.insert(a.hash_key()) {
                rows.push((a, block + 1, coord));
            }
        }
    }
    let analyzed: Vec<_> = rows
        .into_par_iter()
        .map(|(a, block, coord)| {
            let n = a.n();
            let mut best: Option<(f64, usize)> = None;
            if SignClass::of(n).is_some() {
                for sign in [LogicalSign::Plus, LogicalSign::Minus] {
                    let Ok(map) = build_map_with(&a, sign) else { continue };
                    let nu = match map.noise_exponent() {
                        NoiseExponent::Defined { nu, .. } => nu,
                        _ => continue,
                    };
                    if let Threshold::Found(r) = map.threshold() {
                        let t = to_f64(&r.estimate());
                        if r.stable && nu > 0 && best.is_none_or(|b| t > b.0) {
                            best = Some((t, nu));
                        }
                    }
                }
            }
            (n, a.hash_key(), best.map(|b| b.0), best.map(|b| b.1), block, coord)
        })
        .collect();
    let mut analyzed = analyzed;
    analyzed.sort_by(|x, y| {
        y.2.unwrap_or(-1.0).partial_cmp(&x.2.unwrap_or(-1.0)).unwrap().then_with(|| (x.4, x.5).cmp(&(y.4, y.5)))
    });
    let mut out = String::from("n,enumerator_hash,threshold,nu,beats_baseline,block,coordinate\n");
    for (n, hash, th, nu, block, coord) in analyzed {
        let t = th.map(|t| format!("{t:.*}", cfg.precision.min(15))).unwrap_or_default();
        let beats = th.is_some_and(|t| t > BASELINE_THRESHOLD + 1e-6);
        let nu = nu.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!("{n},\"{hash}\",{t},{nu},{beats},{block},{coord}\n"));
    }
    out.push_str(&notes);
    Ok(out)
}

fn bounds_table(target: Target, from: usize, to: usize, step: usize, flags: QuantumFlags, cfg: &RunConfig) -> String {
    let step = step.max(1);
    if target == Target::Selfdual {
        let mut out = String::from("n,pure_state_value,sign\n");
        for n in (from..=to).step_by(step).filter(|n| n % 12 == 0 && *n > 0) {
            if let Some(v) = bounds::selfdual_extremal_value(n) {
                out.push_str(&format!("{n},{},{}\n", cfg.text(&v), distill::sign_name(&v)));
            }
        }
        return out;
    }
    let ns: Vec<usize> = (from..=to)
        .step_by(step)
        .filter(|&n| match target {
            Target::Nu => SignClass::of(n).is_some() && n >= 5,
            Target::Distance => n % 2 == 1 && n >= 5,
            _ => n >= 5,
        })
        .collect();
    let sweep = match target {
        Target::Nu => SweepTarget::Nu,
        Target::Distance => SweepTarget::Distance,
        _ => SweepTarget::ClassicalDistance,
    };
    let rows = bound_sweep(&ns, sweep, !flags.quantum, !flags.classical_only);
    let mut out = String::from("n,bound_classical,bound_quantum,witness_classical,witness_quantum\n");
    let cell = |b: &Option<bounds::SweepCell>| b.as_ref().map(|c| c.bound.to_string()).unwrap_or("-".into());
    let wit = |b: &Option<bounds::SweepCell>| {
        b.as_ref().map(|c| c.witness.iter().map(|v| cfg.text(v)).collect::<Vec<_>>().join(" ")).unwrap_or_default()
    };
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            cell(&r.classical),
            cell(&r.quantum),
            wit(&r.classical),
            wit(&r.quantum)
        ));
    }
    out
}

fn negatives(a: &Enumerator, cfg: &RunConfig) -> Value {
    Value::Array(
        a.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(j, c)| json!({"j": j, "value": cfg.num(c)}))
            .collect(),
    )
}

fn extremal(family: Family, n: usize, cfg: &RunConfig) -> Result<Value, CliError> {
    match family {
        Family::Distill => {
            let p = invariants::extremal_distillation_params(n).map_err(|e| CliError::Math(e.to_string()))?;
            let a = invariants::expand_family(&p);
            let mut v = json!({
                "family": "distill",
                "n": n,
                "enumerator": a.to_string(),
                "A": cfg.coeffs(&a),
                "params": p.to_json(),
                "negative": negatives(&a, cfg),
                "a2_closed_form": invariants::extremal_a2(n),
            });
            if a.first_negative().is_none() {
                v.as_object_mut().unwrap().insert("distillation".into(), map_report(&a, cfg)?);
            }
            Ok(v)
        }
        Family::Selfdual => {
            let p = invariants::selfdual_extremal_params(n).map_err(|e| CliError::Math(e.to_string()))?;
            let a = invariants::expand_selfdual(&p);
            let pure = a.signed_eval(&rat(1, 3))?;
            let mut v = json!({
                "family": "selfdual",
                "n": n,
                "enumerator": a.to_string(),
                "A": cfg.coeffs(&a),
                "params": invariants::selfdual_to_json(&p),
                "negative": negatives(&a, cfg),
                "pure_state_value": cfg.num(&pure),
            });
            if n.is_multiple_of(12) && pure.is_negative() {
                v.as_object_mut().unwrap().insert(
                    "nonexistence_witness".into(),
                    json!({"rbar_squared": "1/3", "value": cfg.num(&pure)}),
                );
            }
            Ok(v)
        }
    }
}

fn curve(a: &Enumerator, grid: usize, sign: Option<LogicalSign>, cfg: &RunConfig) -> Result<String, CliError> {
    let class = SignClass::of(a.n()).ok_or(distill::DistillError::WrongClass(a.n()))?;
    if !a.is_even_only() {
        return Err(CliError::Math("enumerator has odd-weight terms".into()));
    }
    let map = build_map_with(a, sign.unwrap_or(LogicalSign::default_for(class)))?;
    Ok(map.curve_csv(grid.max(1), cfg.precision))
}

/// Deterministic sample `r̄ = j / (2(s+1))`, inside the physical range.
fn sample_rbar(j: usize, samples: usize) -> Rational {
    Rational::new((j as i64 + 1).into(), (2 * (samples as i64 + 1)).into())
}

pub fn verify(code: &Gf4Code, samples: usize, cfg: &RunConfig) -> Result<Value, CliError> {
    let n = code.n();
    let k = n - 2 * code.k();
    let a = code.weight_enumerator(cfg.budget)?;
    let scale = Rational::new(BigInt::one(), BigInt::from(1u64) << (n - k));
    let mut report = json!({"n": n, "k": k, "mode": format!("{:?}", oracle::Mode::default_for(n))});
    let obj = report.as_object_mut().unwrap();
    match oracle::Mode::default_for(n) {
        oracle::Mode::Exact => {
            let p = oracle::code_projector::<Exact>(code)?;
            obj.insert("projector".into(), json!(oracle::is_projector(&p, k, 0.0)));
            obj.insert("m3_commutes".into(), json!(oracle::commutes_with_m3(&p, 0.0)));
            let mut agree = true;
            for j in 0..samples {
                let rbar = sample_rbar(j, samples);
                let eta = oracle::projection_prob(&p, &oracle::DensityVector::t_state(rbar.clone()));
                let expected = a.signed_eval(&(&rbar * &rbar))? * &scale;
                agree &= eta.im.is_zero() && eta.re == expected;
            }
            obj.insert("projection_matches".into(), json!(agree));
        }
        oracle::Mode::Float => {
            let p = oracle::code_projector::<Float>(code)?;
            obj.insert("projector".into(), json!(oracle::is_projector(&p, k, 1e-9)));
            obj.insert("m3_commutes".into(), json!(oracle::commutes_with_m3(&p, 1e-9)));
            let mut worst: f64 = 0.0;
            for j in 0..samples {
                let rbar = sample_rbar(j, samples);
                let eta = oracle::projection_prob(&p, &oracle::DensityVector::t_state(rbar.clone()));
                let expected = to_f64(&(a.signed_eval(&(&rbar * &rbar))? * &scale));
                worst = worst.max((eta.re - expected).abs());
            }
            obj.insert("projection_matches".into(), json!(worst < 1e-10));
            obj.insert("projection_max_error".into(), json!(worst));
        }
    }
    if k == 1 {
        if let Some(class) = SignClass::of(n) {
            let sign = LogicalSign::default_for(class);
            let map = build_map_with(&a, sign)?;
            let p = oracle::code_projector::<Float>(code)?;
            let mut worst: f64 = 0.0;
            for j in 0..samples {
                let eps = (j as f64 + 1.0) / (2.0 * (samples as f64 + 1.0));
                let lhs = oracle::oracle_eps_out(&p, sign, eps)?;
                worst = worst.max((lhs - map.eps_out_f64(eps)).abs());
            }
            obj.insert("eps_out_max_error".into(), json!(worst));
            obj.insert("eps_out_matches".into(), json!(worst < 1e-10));
        }
    }
    Ok(report)
}

fn points_csv(names: &[String], points: &[Vec<Rational>], cfg: &RunConfig) -> String {
    let mut out = names.join(",") + "\n";
    for p in points {
        out.push_str(&p.iter().map(|v| cfg.text(v)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out.push_str(&format!("# count {}\n", points.len()));
    out
}

fn lattice_case(case: LatticeCase, filter: QuantumFilter, emit: bool, cfg: &RunConfig) -> Result<String, CliError> {
    let p = match case {
        LatticeCase::N7 => n7_polytope(),
        LatticeCase::N12 => n12_polytope(),
    };
    if emit {
        return Ok(pretty(&p.to_json()));
    }
    let points = match case {
        LatticeCase::N7 => n7_lattice(filter),
        LatticeCase::N12 => n12_lattice(filter),
    }
    .map_err(|e| CliError::Budget(e.to_string()))?;
    Ok(points_csv(&p.names, &points, cfg))
}

fn lattice_file(text: &str, moduli: Option<&str>, emit: bool, cfg: &RunConfig) -> Result<String, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let p = Polytope::from_json(&value).map_err(|e| CliError::Parse(e.to_string()))?;
    if emit {
        return Ok(pretty(&p.to_json()));
    }
    let moduli: Vec<Rational> = match moduli {
        Some(s) => s
            .split(',')
            .map(|m| parse_rational(m.trim()).filter(|v| v.is_positive()).ok_or(CliError::Parse(format!("bad modulus `{m}`"))))
            .collect::<Result<_, _>>()?,
        None => vec![Rational::one(); p.dim],
    };
    if moduli.len() != p.dim {
        return Err(CliError::Parse(format!("{} moduli for {} variables", moduli.len(), p.dim)));
    }
    let spec = LatticeSpec::new(moduli, vec![Rational::zero(); p.dim]);
    let none: Option<fn(&[Rational]) -> bool> = None;
    let points = count_lattice_points(&p, &spec, none).map_err(|e| CliError::Budget(e.to_string()))?;
    Ok(points_csv(&p.names, &points, cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse(String::new()).exit_code(), 2);
        assert_eq!(CliError::from(Gf4Error::BudgetExceeded { k: 20, limit: 18 }).exit_code(), 4);
        assert_eq!(CliError::from(Gf4Error::NotSelfOrthogonal).exit_code(), 3);
    }

    #[test]
    fn five_qubit_report() {
        let v = analyze_code(&Gf4Code::five_qubit(), &RunConfig::default()).unwrap();
        assert_eq!(v["A"], json!(["1", "0", "0", "0", "15", "0"]));
        let minus = &v["distillation"]["maps"]["minus"];
        assert_eq!(minus["exponent"]["nu"], json!(2));
        assert_eq!(minus["exponent"]["leading"], json!("5"));
    }

    #[test]
    fn selfdual_table_rows() {
        let t = bounds_table(Target::Selfdual, 12, 24, 12, QuantumFlags { quantum: false, classical_only: false }, &RunConfig::default());
        assert_eq!(t, "n,pure_state_value,sign\n12,-256/81,negative\n24,-1245184/19683,negative\n");
    }
}
