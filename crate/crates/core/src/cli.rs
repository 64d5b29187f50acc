//! Command-line front end. Every command produces a [`Report`], printed as
//! text or as deterministic JSON.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::braided::BraidedPoly;
use crate::char0::{degeneration, reduce_supervector};
use crate::comodule::{
    chi_poly, combine_glp, composition_series, format_character, glp_irrep, is_nonzero_class, parse_glp_factors,
    parse_tuple, skew_primitives, steinberg_check, xi_poly, Comodule, Gl1pCalculus, Gl1pLabel, DEFAULT_BOUND,
    DEFAULT_CUTOFF,
};
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec};
use crate::ver4::parse_object_expr;
use crate::verify::{run_suite, Status, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ver4", version, about = "Representations of GL(m+nP) in Ver4+ over F2")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest dimension searched for composition series.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    /// Degree cutoff for Ext computations.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    pub cutoff: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Composition series of a product of simple representations, head first.
    Tensor {
        expr: String,
        #[arg(long, default_value = "GL(P)")]
        group: String,
    },
    /// Run a verification suite against the reference fixtures.
    Verify { suite: String },
    /// Decompose an object of Ver4+ as m+nP.
    Decompose { expr: String },
    /// Skew-primitive classes of O(GL(P)), i.e. Ext^1(1, twist).
    Ext {
        #[arg(long, default_value = "1")]
        twist: String,
    },
    /// Compare L(lambda chi^mu) with L(lambda) tensor the Frobenius twist of L(mu).
    Steinberg {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Reduce a supergroup over Q(sqrt 2) modulo sqrt 2.
    Degenerate { key: String },
    /// Reduce k^{m+n|n} with d = (1 - g)/sqrt 2 modulo sqrt 2.
    ReduceSvec { m: usize, n: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
}

impl Report {
    fn new(command: &str, inputs: Value, outputs: Value, status: Status) -> Report {
        Report {
            command: command.into(),
            inputs,
            outputs,
            status,
            expected: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Match | Status::ExpectedMismatch => EXIT_OK,
            Status::Mismatch => EXIT_MISMATCH,
            Status::Unknown => EXIT_UNKNOWN,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, inline(&self.inputs));
        write_value(&mut out, &self.outputs, 0);
        if let Some(e) = &self.expected {
            let _ = writeln!(out, "expected: {}", inline(e));
        }
        let _ = write!(out, "status: {}", self.status);
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, v, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            let _ = writeln!(out, "{pad}  - {}", inline(item));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(v));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn error_status(e: &Error) -> (i32, Status) {
    match e {
        Error::Unidentified { .. } | Error::Unsupported(_) => (EXIT_UNKNOWN, Status::Unknown),
        Error::Parse(_) | Error::Domain(_) | Error::Contract(_) => (EXIT_USAGE, Status::Mismatch),
        Error::InvalidObject(_) | Error::LatticeNotIntegral(_) => (EXIT_MISMATCH, Status::Mismatch),
    }
}

fn labels<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn cmd_tensor(expr: &str, group: &str, bound: usize) -> Result<Report> {
    let spec = GroupSpec::parse(group)?;
    let inputs = json!({ "expr": expr, "group": spec.to_string() });
    if spec == GroupSpec::GLP {
        let reps = parse_glp_factors(expr)?
            .into_iter()
            .map(glp_irrep)
            .collect::<Result<Vec<_>>>()?;
        let v = Comodule::tensor_all(&reps)?;
        let series = composition_series(&v, bound)?;
        let outputs = json!({ "dim": v.dim(), "series": labels(&series) });
        return Ok(Report::new("tensor", inputs, outputs, Status::Match));
    }
    if spec == GroupSpec::GL1P {
        let factors: Vec<Gl1pLabel> = expr
            .split('*')
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?;
        let [a, b] = factors[..] else {
            return Err(Error::Unsupported("GL(1+P) products of exactly two simple representations".into()));
        };
        let mut calc = Gl1pCalculus::new();
        let c = calc.tensor_cell(a, b)?;
        let dim = crate::comodule::character_dim(&c);
        let factors: Vec<Value> = c
            .iter()
            .map(|(l, k)| json!({ "label": l.to_string(), "multiplicity": k }))
            .collect();
        let outputs = json!({ "dim": dim, "factors": factors, "sum": format_character(&c) });
        return Ok(Report::new("tensor", inputs, outputs, Status::Match));
    }
    Err(Error::Unsupported(format!("tensor products for {spec}; use GL(P) or GL(1+P)")))
}

pub fn cmd_verify(suite: &str, opts: SuiteOptions) -> Result<Report> {
    let r = run_suite(suite, opts)?;
    let inputs = json!({ "suite": suite, "bound": opts.bound, "cutoff": opts.cutoff });
    let outputs = json!({
        "summary": format!("{}/{} match", r.count(Status::Match), r.checks.len()),
        "checks": serde_json::to_value(&r.checks).expect("checks serialize"),
    });
    Ok(Report::new("verify", inputs, outputs, r.status()))
}

pub fn cmd_decompose(expr: &str) -> Result<Report> {
    let x = parse_object_expr(expr)?;
    let (m, n) = x.decompose();
    let outputs = json!({ "dim": x.dim(), "m": m, "n": n, "object": x.label() });
    Ok(Report::new("decompose", json!({ "expr": expr }), outputs, Status::Match))
}

fn twist_poly(twist: &str) -> Result<BraidedPoly> {
    let l = combine_glp(&parse_glp_factors(twist)?)?;
    if l.t != 0 {
        return Err(Error::Domain(format!("twist {l} is not one-dimensional")));
    }
    let c = chi_poly(l.chi);
    Ok(if l.xi { &xi_poly() * &c } else { c })
}

pub fn cmd_ext(twist: &str, cutoff: u32) -> Result<Report> {
    let g = Group::new(GroupSpec::GLP)?;
    let gamma = twist_poly(twist)?;
    let r = skew_primitives(&g, &gamma, cutoff)?;
    let classes: Vec<String> = r.classes.iter().map(|c| c.to_string_with(g.ring())).collect();
    let mut outputs = json!({ "dim": r.dim(), "classes": classes, "candidates": r.candidates });
    if !gamma.is_one() {
        let a = g.parse("A^-1 A'")?;
        outputs["contains_a_inv_a_prime"] = json!(is_nonzero_class(&r, &a));
    }
    let inputs = json!({ "twist": twist, "cutoff": cutoff });
    Ok(Report::new("ext", inputs, outputs, Status::Match))
}

fn parse_mu(mu: &str) -> Result<Vec<i32>> {
    mu.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight {s:?} in mu")))
        })
        .collect()
}

/// `(a, b)` with the comma outside every inner parenthesis.
fn has_top_level_comma(s: &str) -> bool {
    let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        return false;
    };
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return true,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    false
}

pub fn cmd_steinberg(n: Option<usize>, lambda: &str, mu: &str) -> Result<Report> {
    let trimmed = lambda.trim();
    let lambda = if trimmed.starts_with('[') {
        parse_tuple(trimmed)?
    } else if has_top_level_comma(trimmed) {
        parse_tuple(&format!("[{}]", &trimmed[1..trimmed.len() - 1]))?
    } else {
        vec![combine_glp(&parse_glp_factors(lambda)?)?]
    };
    let mu = parse_mu(mu)?;
    if let Some(n) = n {
        if n != lambda.len() || n != mu.len() {
            return Err(Error::Parse(format!("--n {n} does not match the lengths of lambda and mu")));
        }
    }
    let r = steinberg_check(&lambda, &mu)?;
    let inputs = json!({ "n": lambda.len(), "lambda": labels(&lambda), "mu": mu });
    let outputs = serde_json::to_value(&r).expect("check serializes");
    let status = if r.isomorphic { Status::Match } else { Status::Mismatch };
    Ok(Report::new("steinberg", inputs, outputs, status))
}

pub fn cmd_degenerate(key: &str) -> Result<Report> {
    let d = degeneration(key)?;
    let r = d.check()?;
    let status = if r.matches() { Status::Match } else { Status::Mismatch };
    let outputs = serde_json::to_value(&r).expect("report serializes");
    let mut report = Report::new("degenerate", json!({ "key": key }), outputs, status);
    report.expected = Some(json!(format!("O({})", d.target)));
    Ok(report)
}

pub fn cmd_reduce_svec(m: usize, n: usize) -> Result<Report> {
    let x = reduce_supervector(m, n)?;
    let (a, b) = x.decompose();
    let outputs = json!({ "object": x.label(), "m": a, "n": b });
    let mut report = Report::new("reduce-svec", json!({ "m": m, "n": n }), outputs, Status::Match);
    if (a, b) != (m, n) {
        report.status = Status::Mismatch;
    }
    Ok(report)
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let opts = SuiteOptions {
        bound: cli.bound,
        cutoff: cli.cutoff,
    };
    match &cli.command {
        Command::Tensor { expr, group } => cmd_tensor(expr, group, cli.bound),
        Command::Verify { suite } => cmd_verify(suite, opts),
        Command::Decompose { expr } => cmd_decompose(expr),
        Command::Ext { twist } => cmd_ext(twist, cli.cutoff),
        Command::Steinberg { n, lambda, mu } => cmd_steinberg(*n, lambda, mu),
        Command::Degenerate { key } => cmd_degenerate(key),
        Command::ReduceSvec { m, n } => cmd_reduce_svec(*m, *n),
    }
}

/// Parses `args`, runs the command, prints the report and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            println!("{}", if cli.json { r.to_json() } else { r.to_text() });
            r.exit_code()
        }
        Err(e) => {
            let (code, _) = error_status(&e);
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "exit": code }));
            } else {
                eprintln!("error: {e}");
            }
            code
        }
    }
}
