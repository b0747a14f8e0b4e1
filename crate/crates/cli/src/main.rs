//! `pmtrop`: JSON front-end for the pmtrop library.
//!
//! Exit codes: 0 success, 1 a property verdict failed or an input violates
//! a mathematical hypothesis, 2 malformed input, 3 internal failure.

mod anchors;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pmtrop::inequalities::{
    all_r_symbolic, cone_condition, rank_two_report, hessian_det, minor_inequality_report, quadratic_discriminant,
    sampled_r_check, LimitFamily,
};
use pmtrop::minors::{flag_valuation, gram, is_positive_definite, trop_principal_minors};
use pmtrop::realization::{membership_check, realize_flag_point, Membership};
use pmtrop::series::parse_rational;
use pmtrop::subdivision::{
    characterizations, default_perturbation, extract_matroid_cells, is_layered, subdivision_edges,
    upper_hull_subdivision,
};
use pmtrop::tropfn::{
    flag_dressian_violation, m_natural_violation, strict_submodular_violation, submodular_violation,
};
use pmtrop::{
    Error, IneqMode, IneqTriple, QuadCoeffs, Rational, RationalMatrix, ScalingVector, SeriesMatrix, SetFunction,
    Subset, TropValue,
};

#[derive(Parser, Debug)]
#[command(name = "pmtrop", version, about = "Tropicalized principal minors, discrete convexity and minor inequalities")]
struct Cli {
    /// Seed for generic random choices; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the JSON result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a set function: submodularity, M♮-concavity, flag Dressian.
    Check {
        /// Set function JSON file, or `-` for standard input.
        file: PathBuf,
    },
    /// Tropicalized principal minors of a matrix.
    Minors {
        /// Matrix file, or `-` for standard input.
        file: PathBuf,
        /// Replace the input `B` by its Gram matrix `B^H B` first.
        #[arg(long)]
        gram: bool,
    },
    /// Regular subdivision of the cube induced by a set function.
    Subdivide {
        file: PathBuf,
        /// Perturbation size for matroid cell extraction, or `auto`.
        #[arg(long)]
        perturb: Option<String>,
    },
    /// Realize the flag valuation of an upper triangular matrix as the
    /// tropicalized principal minors of a positive definite matrix.
    Realize {
        file: PathBuf,
        /// Comma-separated layer shifts `λ_0,…,λ_n` with `λ_0 = 0`.
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
        /// Substitute `t -> t^(1/2)` so the minors equal `w` itself.
        #[arg(long)]
        halve: bool,
    },
    /// Decide membership of a normalized set function in the image of
    /// positive definite matrices.
    Membership { file: PathBuf },
    /// Minor and coefficient inequalities.
    Ineq {
        #[command(subcommand)]
        command: IneqCommand,
    },
    /// Recompute the built-in reference values.
    VerifyPaper {
        /// Only run anchors whose id contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum IneqCommand {
    /// Inequality family on the principal minors of a rational PSD matrix.
    Matrix {
        file: PathBuf,
        /// Comma-separated base set `S`.
        #[arg(long, default_value = "")]
        base: String,
        /// Three or four comma-separated indices outside `S`.
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
    /// Decide `(r+1)x + r(r+1)y >= r z` for all real `r`.
    #[command(allow_negative_numbers = true)]
    Triple {
        x: String,
        y: String,
        z: String,
        /// Comma-separated values of `r` for a sampled cross-check.
        #[arg(long, allow_hyphen_values = true)]
        samples: Option<String>,
    },
    /// Hessian test for `q` with coefficients `c12,c13,c14,c23,c24,c34`.
    Quad {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Rank two PSD family on which the quadruple inequality is tight.
    RankTwo {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// 3x3 family whose triple gap tends to zero with `eps`.
    Limit {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        eps: String,
    },
}

enum Failure {
    Input(String),
    Hypothesis(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::Dimension(_)
            | Error::NonFinite
            | Error::EnumerationBound { .. }
            | Error::ZeroValuation
            | Error::ComplexOrder => Failure::Input(msg),
            Error::SingularGram
            | Error::ZeroPrincipalMinor { .. }
            | Error::VanishingPlucker { .. }
            | Error::Hypothesis(_) => Failure::Hypothesis(msg),
            Error::Genericity { .. } | Error::Internal(_) => Failure::Internal(msg),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Hypothesis(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Hypothesis(_) => "hypothesis",
            Failure::Input(_) => "input",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Hypothesis(m) | Failure::Internal(m) => m,
        }
    }
}

/// A command result: the JSON payload, whether every verdict held, the
/// perturbation used if any, and a one-line summary.
struct Outcome {
    result: Value,
    ok: bool,
    eps: Option<Rational>,
    summary: String,
}

impl Outcome {
    fn new(result: Value, ok: bool, summary: impl Into<String>) -> Self {
        Self { result, ok, eps: None, summary: summary.into() }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn read_function(path: &Path) -> Result<SetFunction, Failure> {
    Ok(SetFunction::from_json(&read_input(path)?)?)
}

fn read_matrix(path: &Path) -> Result<SeriesMatrix, Failure> {
    Ok(SeriesMatrix::parse(&read_input(path)?)?)
}

fn rational(s: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(s.trim())?)
}

fn rational_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').map(rational).collect()
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn check(path: &Path) -> Result<Outcome, Failure> {
    let f = read_function(path)?;
    let sq = submodular_violation(&f)?;
    let strict = strict_submodular_violation(&f)?;
    let exch = m_natural_violation(&f)?;
    let flag = flag_dressian_violation(&f);
    let chars = if f.is_finite() { Some(characterizations(&f)?) } else { None };
    if let Some(c) = &chars {
        if !c.agree() {
            return Err(Failure::Internal(format!("characterizations disagree: {c:?}")));
        }
    }
    let ok = sq.is_none() && exch.is_none() && flag.is_none();
    let result = json!({
        "n": f.n(),
        "submodular": sq.is_none(),
        "strictly_submodular": strict.is_none(),
        "m_natural_concave": exch.is_none(),
        "flag_dressian": flag.is_none(),
        "characterizations": chars,
        "witnesses": {
            "submodular": sq,
            "strictly_submodular": strict,
            "m_natural_concave": exch,
            "flag_dressian": flag,
        },
    });
    let summary = format!(
        "submodular={} strict={} m_natural={} flag_dressian={}",
        sq.is_none(),
        strict.is_none(),
        exch.is_none(),
        flag.is_none()
    );
    Ok(Outcome::new(result, ok, summary))
}

fn minors(path: &Path, use_gram: bool) -> Result<Outcome, Failure> {
    let m = read_matrix(path)?;
    let a = if use_gram { gram(&m)? } else { m };
    let pd = if a.is_hermitian() { Some(is_positive_definite(&a)?) } else { None };
    let w = trop_principal_minors(&a)?;
    let result = json!({
        "matrix": a.to_string(),
        "positive_definite": pd,
        "minors": w.to_json_value(),
    });
    let summary = format!("{} minors, positive definite: {}", 1usize << w.n(), pd.map_or("n/a".into(), |b| b.to_string()));
    Ok(Outcome::new(result, pd != Some(false), summary))
}

fn subdivide(path: &Path, perturb: Option<&str>) -> Result<Outcome, Failure> {
    let f = read_function(path)?;
    let sub = upper_hull_subdivision(&f)?;
    let edges = subdivision_edges(&sub);
    let layered = is_layered(&sub);
    let extraction = match perturb {
        None => None,
        Some("auto") => Some(extract_matroid_cells(&f, &default_perturbation(&f)?)?),
        Some(e) => Some(extract_matroid_cells(&f, &rational(e)?)?),
    };
    let summary = format!(
        "{} cells, {} edges, admissible={}, layered={}",
        sub.cells().len(),
        edges.edges.len(),
        edges.admissible,
        layered
    );
    let ok = extraction.as_ref().is_none_or(|x| x.reports.iter().all(|r| r.is_matroid));
    let eps = extraction.as_ref().map(|x| x.eps.clone());
    let result = json!({
        "subdivision": sub.to_json_value(),
        "edges": to_value(&edges),
        "layered": layered,
        "matroid_cells": extraction.as_ref().map(to_value),
    });
    Ok(Outcome { eps, ..Outcome::new(result, ok, summary) })
}

fn realize(path: &Path, lambdas: Option<&str>, halve: bool, seed: u64) -> Result<Outcome, Failure> {
    let b = read_matrix(path)?;
    let n = b.rows();
    let lam = match lambdas {
        Some(s) => ScalingVector::new(rational_list(s)?),
        None => ScalingVector::zeros(n),
    };
    if lam.len() != n + 1 {
        return Err(Failure::Input(format!("expected {} lambdas, got {}", n + 1, lam.len())));
    }
    let fv = flag_valuation(&b)?;
    let w = fv.map(|s, v| v + &TropValue::Finite(-lam.get(s.len()).clone()));
    let cert = realize_flag_point(&w, &b, &lam, halve, seed)?;
    let summary = format!("realized n = {n} with {} mixer draw(s), halved = {halve}", cert.mix_attempts);
    Ok(Outcome::new(to_value(&cert), true, summary))
}

fn membership(path: &Path, seed: u64) -> Result<Outcome, Failure> {
    let w = read_function(path)?;
    let m = membership_check(&w, seed)?;
    let (ok, summary) = match &m {
        Membership::Inside { witness: Some(_) } => (true, "inside, witness found"),
        Membership::Inside { witness: None } => (true, "inside"),
        Membership::Outside { .. } => (false, "outside"),
        Membership::WitnessNeeded => (true, "necessary conditions hold; no witness found"),
    };
    Ok(Outcome::new(to_value(&m), ok, summary))
}

fn triple_json(t: &IneqTriple) -> Value {
    json!({
        "x": t.x.to_string(),
        "y": t.y.to_string(),
        "z": t.z.to_string(),
        "discriminant": t.discriminant().to_string(),
        "cone_condition": cone_condition(t),
        "all_r": all_r_symbolic(t),
        "equality_roots": t.equality_roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn ineq(cmd: &IneqCommand) -> Result<Outcome, Failure> {
    match cmd {
        IneqCommand::Matrix { file, base, indices } => {
            let a = RationalMatrix::parse(&read_input(file)?)?;
            let s = if base.trim().is_empty() {
                Subset::EMPTY
            } else {
                let elems = base
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| Failure::Input(format!("bad base element {p:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                Subset::from_elements(elems)
            };
            let mode = match indices.as_slice() {
                [a, b, c, d] => IneqMode::Quadruple([*a, *b, *c, *d]),
                [a, b, c] => IneqMode::Triple([*a, *b, *c]),
                _ => return Err(Failure::Input("expected three or four indices".into())),
            };
            let rep = minor_inequality_report(&a, s, mode)?;
            let pass = rep.permutations.iter().filter(|p| p.cone_condition && p.all_r).count();
            let summary = format!("{pass} of {} orderings pass", rep.permutations.len());
            Ok(Outcome::new(to_value(&rep), rep.all_pass(), summary))
        }
        IneqCommand::Triple { x, y, z, samples } => {
            let t = IneqTriple::new(rational(x)?, rational(y)?, rational(z)?);
            let mut out = triple_json(&t);
            let mut ok = cone_condition(&t) && all_r_symbolic(&t);
            if let Some(s) = samples {
                let rs = rational_list(s)?;
                let sampled = sampled_r_check(&t, &rs);
                ok &= sampled;
                out["sampled"] = json!(sampled);
            }
            Ok(Outcome::new(out, ok, format!("holds for all r: {}", all_r_symbolic(&t))))
        }
        IneqCommand::Quad { coeffs } => {
            let c = rational_list(coeffs)?;
            let [c12, c13, c14, c23, c24, c34]: [Rational; 6] =
                c.try_into().map_err(|_| Failure::Input("expected six coefficients".into()))?;
            let q = QuadCoeffs { c12, c13, c14, c23, c24, c34 };
            let det = hessian_det(&q);
            let t = q.triple();
            let lorentzian = q.is_lorentzian();
            let result = json!({
                "hessian_det": det.to_string(),
                "discriminant": quadratic_discriminant(&q).to_string(),
                "lorentzian": lorentzian,
                "triple": triple_json(&t),
            });
            let ok = !lorentzian || cone_condition(&t);
            Ok(Outcome::new(result, ok, format!("det Q = {det}, lorentzian = {lorentzian}")))
        }
        IneqCommand::RankTwo { r } => {
            let rep = rank_two_report(&rational(r)?)?;
            let ok = rep.passes();
            Ok(Outcome::new(to_value(&rep), ok, format!("rank {} identity value {}", rep.rank, rep.identity_value)))
        }
        IneqCommand::Limit { r, lam, eps } => {
            let p = LimitFamily::new(rational(r)?, rational(lam)?, rational(eps)?)?;
            let minors: Vec<String> = p.small_minors().iter().map(ToString::to_string).collect();
            let ok = p.gap() == p.closed_form();
            let result = json!({
                "small_minors": minors,
                "small_minors_positive": p.small_minors_positive(),
                "det_positive": p.det_positive(),
                "gap": p.gap().to_string(),
                "closed_form": p.closed_form().to_string(),
                "equal": ok,
            });
            Ok(Outcome::new(result, ok, format!("gap = {}", p.gap())))
        }
    }
}

fn verify(filter: Option<&str>) -> Outcome {
    let results = anchors::run(filter);
    let passed = results.iter().filter(|r| r.passed).count();
    for r in &results {
        eprintln!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.id);
    }
    let summary = format!("{passed} of {} anchors passed", results.len());
    Outcome::new(to_value(&results), passed == results.len(), summary)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Minors { .. } => "minors",
        Command::Subdivide { .. } => "subdivide",
        Command::Realize { .. } => "realize",
        Command::Membership { .. } => "membership",
        Command::Ineq { .. } => "ineq",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Minors { file, gram } => minors(file, *gram),
        Command::Subdivide { file, perturb } => subdivide(file, perturb.as_deref()),
        Command::Realize { file, lambdas, halve } => realize(file, lambdas.as_deref(), *halve, cli.seed),
        Command::Membership { file } => membership(file, cli.seed),
        Command::Ineq { command } => ineq(command),
        Command::VerifyPaper { filter } => Ok(verify(filter.as_deref())),
    }
}

fn emit(cli: &Cli, doc: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(doc).expect("json");
    match &cli.output {
        Some(p) => fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let (doc, code) = match dispatch(&cli) {
        Ok(out) => {
            eprintln!("{name}: {}", out.summary);
            let doc = json!({
                "command": name,
                "seed": cli.seed,
                "eps": out.eps.map(|e| e.to_string()),
                "ok": out.ok,
                "result": out.result,
            });
            (doc, if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("{name}: {} error: {}", f.kind(), f.message());
            let doc = json!({
                "command": name,
                "seed": cli.seed,
                "eps": null,
                "ok": false,
                "error": { "kind": f.kind(), "message": f.message() },
            });
            (doc, f.code())
        }
    };
    if let Err(e) = emit(&cli, &doc) {
        eprintln!("{name}: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
