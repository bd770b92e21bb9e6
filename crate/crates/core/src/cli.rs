//! Command-line front end: argument parsing, text and JSON reports, exit codes.

use crate::error::{Error, Result};
use crate::gcf::{extract_unit, root_extract, run_forward, GcfConfig, GcfRun, UnitCertificate};
use crate::geodesic::{heegner_chi, heegner_rank_one, subfield_generator, FlatGeodesic};
use crate::linalg::{format_imat, format_mat, QMat};
use crate::numberfield::{parse_rational, FieldElement, NumberField, QBasis};
use crate::pcf::{fundamental_p_unit_with, pell_solutions_from, PUnitResult};
use crate::poly::parse_poly;
use crate::realalg::{catch_precision, to_f64};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt::Write as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Parser, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[command(
    name = "geocf",
    version,
    about = "Units of rank-one number fields by geodesic continued fractions, and p-units by {inf,p}-continued fractions",
    after_help = "Environment:\n  GCF_MAX_BITS  precision ceiling of interval sign decisions (default 4096)"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print every step of the expansion.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Norm-one unit of a real quadratic, complex cubic or totally imaginary quartic field.
    Unit(UnitArgs),
    /// Norm-one unit in the χ-component of a quartic field over a real quadratic subfield.
    ChiUnit(ChiArgs),
    /// {∞,p}-continued fraction of the ring generator of Q(√−d) and the fundamental p-unit.
    Pcf(PcfArgs),
    /// Coprime solutions of the Pell-like equation for Q(√−d) and p.
    Pell(PellArgs),
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GcfArgs {
    /// Defining polynomial, e.g. "x^3 - 2".
    #[arg(long)]
    pub field: String,
    /// Comma-separated basis elements as polynomials in x, default x^{n-1},...,x,1.
    #[arg(long)]
    pub basis: Option<String>,
    #[arg(long, default_value = "3/4")]
    pub omega: String,
    #[arg(long, default_value_t = 512)]
    pub max_steps: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub gcf: GcfArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub gcf: GcfArgs,
    /// Defining polynomial of the real quadratic subfield, e.g. "x^2 - 2".
    #[arg(long)]
    pub subfield: String,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcfArgs {
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub p: u64,
    /// Residue of √−d mod p fixing the embedding into Q_p; the smallest root by default.
    #[arg(long)]
    pub root: Option<u64>,
    #[arg(long, default_value_t = 512)]
    pub max_steps: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PellArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub pcf: PcfArgs,
    /// Largest power r of the fundamental solution.
    #[arg(long, default_value_t = 1)]
    pub rmax: u32,
}

/// Exit code and the report to print on stdout.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) | Error::PrecisionExhausted(_) => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn elem_json(a: &FieldElement) -> Value {
    json!({ "coords": a.to_strings(), "display": a.to_string() })
}

fn imat_json(m: &[Vec<num_bigint::BigInt>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect())).collect())
}

fn qmat_json(m: &QMat) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect())).collect())
}

struct Prepared {
    field: std::sync::Arc<NumberField>,
    geod: FlatGeodesic,
    cfg: GcfConfig,
}

fn prepare(a: &GcfArgs, sub: Option<&str>) -> Result<Prepared> {
    let field = NumberField::parse(&a.field)?;
    let w = match &a.basis {
        Some(b) => QBasis::parse(&field, b)?,
        None => field.default_basis(),
    };
    let omega = parse_rational(&a.omega)?;
    let quarter = num_rational::BigRational::new(1.into(), 4.into());
    if omega <= quarter || omega >= num_rational::BigRational::from_integer(1.into()) {
        return Err(Error::Parse(format!("omega must lie in (1/4, 1), got {omega}")));
    }
    let geod = match sub {
        None => heegner_rank_one(&field, &w)?,
        Some(s) => {
            let g = subfield_generator(&field, &parse_poly(s)?)?;
            heegner_chi(&field, &g, &w)?
        }
    };
    let cfg = GcfConfig { omega, max_steps: a.max_steps, ..GcfConfig::default() };
    Ok(Prepared { field, geod, cfg })
}

fn unit_report(cfg: &RunConfig, a: &GcfArgs, sub: Option<&str>) -> Result<String> {
    let pr = prepare(a, sub)?;
    let run = run_forward(&pr.geod, &pr.cfg)?;
    let trace = if cfg.trace { Some(run.trace()) } else { None };
    let period = run.require_period()?.clone();
    let cert = extract_unit(&run, &period)?;
    let post = root_extract(&cert.epsilon);
    Ok(match cfg.format {
        Format::Text => unit_text(&pr, a, sub, &run, &cert, post.as_ref(), trace.as_deref()),
        Format::Json => unit_json(&pr, a, sub, &run, &cert, post.as_ref()).to_string() + "\n",
    })
}

fn unit_text(
    pr: &Prepared,
    a: &GcfArgs,
    sub: Option<&str>,
    run: &GcfRun,
    c: &UnitCertificate,
    post: Option<&(FieldElement, u32, i32)>,
    trace: Option<&str>,
) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "field: {}", pr.field.defining_poly());
    if let Some(s) = sub {
        let _ = writeln!(o, "subfield: {}", parse_poly(s).map(|p| p.to_string()).unwrap_or_default());
    }
    let basis = pr.geod.provenance.as_ref().map(|p| p.basis.elements().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "));
    let _ = writeln!(o, "basis: {}", basis.unwrap_or_default());
    let _ = writeln!(o, "omega: {}", a.omega);
    if let Some(t) = trace {
        o.push_str(t);
    }
    let _ = writeln!(o, "steps: {}", run.steps.len() - 1);
    let _ = writeln!(o, "period: ({}, {})", c.k0, c.k1);
    let _ = writeln!(o, "P: {}", format_imat(&c.p));
    let _ = writeln!(o, "epsilon: {}", c.epsilon);
    let _ = writeln!(o, "norm: {}", c.epsilon.norm());
    if let Some(r) = &c.relative_norm {
        let _ = writeln!(o, "relative norm: {r}");
    }
    let _ = writeln!(o, "|sigma(epsilon)|: {} (display)", crate::gcf::sig6(to_f64(&c.rho.mid())));
    match post {
        Some((eta, m, s)) => {
            let sign = if *s < 0 { "-" } else { "" };
            let _ = writeln!(o, "post-processing: epsilon = {sign}eta^{m}, eta = {eta}");
        }
        None => {
            let _ = writeln!(o, "post-processing: epsilon is not a proper power");
        }
    }
    o
}

fn unit_json(
    pr: &Prepared,
    a: &GcfArgs,
    sub: Option<&str>,
    run: &GcfRun,
    c: &UnitCertificate,
    post: Option<&(FieldElement, u32, i32)>,
) -> Value {
    let basis: Vec<Value> = pr
        .geod
        .provenance
        .as_ref()
        .map(|p| p.basis.elements().iter().map(elem_json).collect())
        .unwrap_or_default();
    let steps: Vec<Value> = run
        .steps
        .iter()
        .enumerate()
        .map(|(k, st)| {
            let (s, t) = run.window_t(k, 30);
            let show = |x: Option<crate::realalg::interval::Interval>| match x {
                Some(i) => json!(crate::gcf::sig6(to_f64(&i.mid()))),
                None => json!("Infinity"),
            };
            json!({
                "k": k,
                "A": imat_json(&st.a),
                "B": imat_json(&st.b),
                "ratios": st.ratios.iter().map(elem_json).collect::<Vec<_>>(),
                "sample_tau": st.u.to_string(),
                "window_display": [show(s), show(t)],
            })
        })
        .collect();
    json!({
        "command": if sub.is_some() { "chi-unit" } else { "unit" },
        "field": pr.field.defining_poly().to_string(),
        "subfield": sub,
        "basis": basis,
        "omega": a.omega,
        "variant": c.variant,
        "period": [c.k0, c.k1],
        "P": imat_json(&c.p),
        "D": imat_json(&c.d),
        "epsilon": elem_json(&c.epsilon),
        "norm": c.epsilon.norm().to_string(),
        "relative_norm": c.relative_norm.as_ref().map(elem_json),
        "abs_sigma_display": { "lo": to_f64(&c.rho.lo), "hi": to_f64(&c.rho.hi) },
        "post_processing": post.map(|(eta, m, s)| json!({ "eta": elem_json(eta), "m": m, "sign": s })),
        "steps": steps,
    })
}

fn default_root(d: u64, p: u64) -> Result<u64> {
    if p < 3 || d % p == 0 {
        return Err(Error::NotSplit(format!("{p} is not an odd unramified prime for d = {d}")));
    }
    (1..p).find(|r| (r * r + d) % p == 0).ok_or_else(|| Error::NotSplit(format!("-{d} is not a square mod {p}")))
}

fn punit(a: &PcfArgs) -> Result<PUnitResult> {
    let root = match a.root {
        Some(r) => r,
        None => default_root(a.d, a.p)?,
    };
    fundamental_p_unit_with(a.d, a.p, root, a.max_steps)
}

fn theta_doc(d: u64) -> String {
    if d % 4 == 3 {
        format!("(-1+sqrt(-{d}))/2")
    } else {
        format!("sqrt(-{d})")
    }
}

fn pcf_text(r: &PUnitResult, trace: bool) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "d: {}  p: {}  root: {}", r.d, r.p, r.root);
    let _ = writeln!(o, "field: Q(θ), θ = sqrt(-{})", r.d);
    let _ = writeln!(o, "expanding: {}", theta_doc(r.d));
    if trace {
        for (k, l) in r.expansion.loops.iter().enumerate() {
            let bs: Vec<String> = l.b_list.iter().map(|b| b.to_string()).collect();
            let _ = writeln!(o, "loop {}: delta={} a={} b=[{}] x={}", k + 1, l.delta, l.a, bs.join(","), l.x_next);
        }
    }
    let _ = writeln!(o, "expansion: {}", r.expansion);
    let _ = writeln!(o, "N: {}", r.n);
    let _ = writeln!(o, "B_N^-1: {}", format_mat(&r.expansion.loops[r.n - 1].b_inv));
    let _ = writeln!(o, "epsilon: {}", r.epsilon);
    let _ = writeln!(o, "u: {}", r.u);
    let _ = writeln!(o, "pell: ({}, {}, {})", r.pell.x, r.pell.y, r.pell.nu);
    let _ = writeln!(o, "ideal order: {}", r.ideal_order);
    o
}

fn pcf_json(r: &PUnitResult) -> Value {
    json!({
        "command": "pcf",
        "d": r.d,
        "p": r.p,
        "root": r.root,
        "digits": r.expansion.digits(),
        "per": r.expansion.period.map(|(k, l)| [k, l]),
        "loops": r.expansion.loops.iter().map(|l| json!({
            "delta": l.delta,
            "a": l.a.to_string(),
            "b": l.b_list.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "A_inv": qmat_json(&l.a_inv),
            "B_inv": qmat_json(&l.b_inv),
            "x_next": elem_json(&l.x_next),
        })).collect::<Vec<_>>(),
        "N": r.n,
        "epsilon": elem_json(&r.epsilon),
        "u": elem_json(&r.u),
        "pell": [r.pell.x.to_string(), r.pell.y.to_string(), r.pell.nu],
        "ideal_order": r.ideal_order,
    })
}

fn pcf_report(cfg: &RunConfig, a: &PcfArgs) -> Result<String> {
    let r = punit(a)?;
    Ok(match cfg.format {
        Format::Text => pcf_text(&r, cfg.trace),
        Format::Json => pcf_json(&r).to_string() + "\n",
    })
}

fn pell_report(cfg: &RunConfig, a: &PellArgs) -> Result<String> {
    let r = punit(&a.pcf)?;
    let sols = pell_solutions_from(&r, a.rmax);
    let eq = if r.d % 4 == 3 {
        format!("4x^2-4xy+{}y^2 = 4*{}^(2nu)", r.d + 1, r.p)
    } else {
        format!("x^2+{}y^2 = {}^(2nu)", r.d, r.p)
    };
    Ok(match cfg.format {
        Format::Text => {
            let mut o = String::new();
            let _ = writeln!(o, "equation: {eq}");
            let _ = writeln!(o, "N: {}", r.n);
            for s in &sols {
                let _ = writeln!(o, "({}, {}, {})", s.x, s.y, s.nu);
            }
            let _ = writeln!(o, "solutions: {}", sols.len());
            o
        }
        Format::Json => {
            json!({
                "command": "pell",
                "d": r.d,
                "p": r.p,
                "equation": eq,
                "N": r.n,
                "solutions": sols.iter().map(|s| [s.x.to_string(), s.y.to_string(), s.nu.to_string()]).collect::<Vec<_>>(),
            })
            .to_string()
                + "\n"
        }
    })
}

fn error_report(cfg: &RunConfig, e: &Error) -> (String, String) {
    match cfg.format {
        Format::Text => (String::new(), format!("error: {e}\n")),
        Format::Json => (json!({ "error": e.to_string(), "exit": exit_code(e) }).to_string() + "\n", String::new()),
    }
}

pub fn execute(cfg: &RunConfig) -> Outcome {
    let r = catch_precision(|| match &cfg.command {
        Command::Unit(a) => unit_report(cfg, &a.gcf, None),
        Command::ChiUnit(a) => unit_report(cfg, &a.gcf, Some(&a.subfield)),
        Command::Pcf(a) => pcf_report(cfg, a),
        Command::Pell(a) => pell_report(cfg, a),
    });
    match r {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(e) => {
            let (stdout, stderr) = error_report(cfg, &e);
            Outcome { code: exit_code(&e), stdout, stderr }
        }
    }
}

/// Parse `args` (program name first) and run.
pub fn main_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => execute(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        main_with(std::iter::once("geocf").chain(args.iter().copied()))
    }

    #[test]
    fn pcf_command() {
        let o = run(&["pcf", "--d", "1", "--p", "5", "--root", "2"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("expansion: [+1;7;0,4,1] per=(1,2)"));
        assert!(o.stdout.contains("epsilon: (4/5)+(3/5)θ"));
        assert_eq!(run(&["pcf", "--d", "3", "--p", "5", "--root", "1"]).code, 1);
    }

    #[test]
    fn pell_command() {
        let o = run(&["pell", "--d", "14", "--p", "3", "--root", "2", "--rmax", "1"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("(5, 2, 2)"));
    }

    #[test]
    fn unit_errors() {
        assert_eq!(run(&["unit", "--field", "x^2+1"]).code, 1);
        assert_eq!(run(&["unit", "--field", "x^2-4"]).code, 1);
        assert_eq!(run(&["unit", "--field", "x^2-2", "--omega", "2"]).code, 1);
        assert_eq!(run(&["unit", "--field", "x^3-3", "--max-steps", "2"]).code, 2);
        assert_eq!(run(&["bogus"]).code, 1);
    }

    #[test]
    fn unit_json_is_exact() {
        let o = run(&["unit", "--field", "x^2-2", "--format", "json"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["period"], json!([0, 6]));
        assert_eq!(v["epsilon"]["coords"], json!(["-3", "-2"]));
    }

    #[test]
    fn config_round_trip() {
        let cfg = RunConfig::try_parse_from(["geocf", "chi-unit", "--field", "x^4-2", "--subfield", "x^2-2", "--trace"]).unwrap();
        let s = serde_json::to_string(&cfg).unwrap();
        let back: RunConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(cfg, back);
    }
}
