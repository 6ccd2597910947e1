//! Command-line front end: `eval`, `solve`, `check` and `figure`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::Mutation;
use crate::config::EvalConfig;
use crate::elliptic::{
    de_dr, dk_dr, ell_e, ell_e3, ell_ec, ell_k, ell_k3, ell_kc, legendre_m, OrderParam, Radius,
    TriParam,
};
use crate::error::{Error, Result};
use crate::harness::{
    emit_figure, figure_grid, run_suite_with, suite_ids, write_records, GridSpec, OutputFormat,
    RunOptions, SuiteReport, DEFAULT_SLACK,
};
use crate::hypergeometric::{gauss_2f1, HypArgs};
use crate::modular::{
    deta_dk, deta_dx, dmu_dr, dphi_dk, dphi_dr, eta, lambda, mu, mu3, mu_inv, phi, phi3,
    phi3_solution, phi_solution, ModularSolution,
};
use crate::special::{artanh_p, pi_p, PExponent};

#[derive(Debug, Parser)]
#[command(
    name = "gmodular",
    version,
    about = "Generalized elliptic integrals and modular functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function and print its value.
    Eval(EvalArgs),
    /// Solve the modular equation μ_a(s) = p μ_a(r) (or μ_a(s) = μ_a(r)/K).
    Solve(SolveArgs),
    /// Run certification suites.
    Check(CheckArgs),
    /// Emit the data table of a figure.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// One of K, Kc, E, Ec, dK_dr, dE_dr, mu, dmu_dr, mu_inv, phi, dphi_dr,
    /// dphi_dK, eta, deta_dx, deta_dK, lambda, pi_p, artanh_p, 2f1, K3, E3,
    /// mu3, phi3, legendre_m.
    #[arg(long = "fn", value_name = "ID")]
    function: String,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
    #[arg(long = "K", alias = "k", allow_negative_numbers = true)]
    k: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Argument of `mu_inv`; `--x` is accepted as well.
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<f64>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    a: f64,
    /// Degree: solves μ_a(s) = p μ_a(r).
    #[arg(long, conflicts_with = "k", required_unless_present = "k")]
    p: Option<f64>,
    /// Distortion: s = φ_K^a(r).
    #[arg(long = "K", alias = "k")]
    k: Option<f64>,
    #[arg(long)]
    r: f64,
    /// Use the triple (a, c − a, c) instead of (a, 1 − a, 1).
    #[arg(long)]
    c: Option<f64>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Suite ids, or `suite_check` for a single check.
    ids: Vec<String>,
    /// Run every registered suite.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Grid clauses `var=lo:hi:count[:log]`, `var=v1,v2,...` or `margin=m`,
    /// separated by `;` or given repeatedly.
    #[arg(long)]
    grid: Vec<String>,
    /// Tolerated negative margin before a chain counts as violated.
    #[arg(long, default_value_t = DEFAULT_SLACK)]
    slack: f64,
    /// Write every record to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Corrupt one bound constant: pi_p, artanh_exponent=E, holder=F,
    /// lambda_rate=F, mu_lower=F or dk_sign.
    #[arg(long, hide = true)]
    mutation: Option<String>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// 1 or 2.
    id: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    #[arg(long)]
    grid: Vec<String>,
}

/// Parse `argv` (including the program name) and run it. Returns the
/// process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{rendered}")
            } else {
                write!(stderr, "{rendered}")
            };
            return code;
        }
    };
    let cfg = EvalConfig::default();
    let outcome = match cli.command {
        Command::Eval(a) => {
            eval(&a, &cfg).and_then(|v| emit(stdout, format!("{v:.17e}")).map(|_| 0))
        }
        Command::Solve(a) => {
            solve(&a, &cfg).and_then(|s| emit(stdout, solution_text(&s)).map(|_| 0))
        }
        Command::Check(a) => check(&a, &cfg, stdout),
        Command::Figure(a) => figure(&a, &cfg, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: String) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Domain(format!("output error: {e}")))
}

fn need(v: Option<f64>, name: &str, function: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Domain(format!("--fn {function} needs --{name}")))
}

fn eval(args: &EvalArgs, cfg: &EvalConfig) -> Result<f64> {
    let f = args.function.as_str();
    let a = || need(args.a, "a", f).and_then(OrderParam::new);
    let r = || need(args.r, "r", f).and_then(Radius::new);
    let k = || need(args.k, "K", f);
    let x = || need(args.x, "x", f);
    let p = || need(args.p, "p", f).and_then(PExponent::new);
    let tri = || {
        TriParam::for_modulus(
            need(args.a, "a", f)?,
            need(args.b, "b", f)?,
            need(args.c, "c", f)?,
        )
    };
    let tri_integrals = || {
        TriParam::for_integrals(
            need(args.a, "a", f)?,
            need(args.b, "b", f)?,
            need(args.c, "c", f)?,
        )
    };
    match f {
        "K" => ell_k(a()?, r()?, cfg),
        "Kc" | "K'" => ell_kc(a()?, r()?, cfg),
        "E" => ell_e(a()?, r()?, cfg),
        "Ec" | "E'" => ell_ec(a()?, r()?, cfg),
        "dK_dr" => dk_dr(a()?, r()?, cfg),
        "dE_dr" => de_dr(a()?, r()?, cfg),
        "mu" => mu(a()?, r()?, cfg),
        "dmu_dr" => dmu_dr(a()?, r()?, cfg),
        "mu_inv" => {
            let y = args
                .y
                .or(args.x)
                .ok_or_else(|| Error::Domain("--fn mu_inv needs --y".into()))?;
            Ok(mu_inv(a()?, y, cfg, &cfg.solver())?.s)
        }
        "phi" => phi(a()?, k()?, r()?, cfg),
        "dphi_dr" => dphi_dr(a()?, k()?, r()?, cfg),
        "dphi_dK" => dphi_dk(a()?, k()?, r()?, cfg),
        "eta" => eta(a()?, k()?, x()?, cfg),
        "deta_dx" => deta_dx(a()?, k()?, x()?, cfg),
        "deta_dK" => deta_dk(a()?, k()?, x()?, cfg),
        "lambda" => lambda(a()?, k()?, cfg),
        "pi_p" => Ok(pi_p(p()?)),
        "artanh_p" => artanh_p(p()?, x()?, cfg),
        "2f1" | "F" => {
            let z = need(args.z, "z", f)?;
            gauss_2f1(
                &HypArgs::new(
                    need(args.a, "a", f)?,
                    need(args.b, "b", f)?,
                    need(args.c, "c", f)?,
                    z,
                )?,
                cfg,
            )
        }
        "K3" => ell_k3(&tri_integrals()?, r()?, cfg),
        "E3" => ell_e3(&tri_integrals()?, r()?, cfg),
        "legendre_m" => legendre_m(&tri_integrals()?, r()?, cfg),
        "mu3" => mu3(&tri()?, r()?, cfg),
        "phi3" => phi3(&tri()?, k()?, r()?, cfg),
        other => Err(Error::Unknown(format!("function {other}"))),
    }
}

fn solve(args: &SolveArgs, cfg: &EvalConfig) -> Result<ModularSolution> {
    let k = match (args.p, args.k) {
        (Some(p), _) if p > 0.0 => 1.0 / p,
        (Some(p), _) => return Err(Error::Domain(format!("degree p must be positive, got {p}"))),
        (None, Some(k)) => k,
        (None, None) => return Err(Error::Domain("solve needs --p or --K".into())),
    };
    let r = Radius::new(args.r)?;
    match args.c {
        Some(c) => phi3_solution(&TriParam::two_param(args.a, c)?, k, r, cfg),
        None => phi_solution(OrderParam::new(args.a)?, k, r, cfg),
    }
}

fn solution_text(s: &ModularSolution) -> String {
    format!(
        "s = {:.17e}\ns' = {:.17e}\nlog_s = {:.17e}\nlog_s' = {:.17e}\nresidual = {:.3e}\niterations = {}",
        s.s, s.s_complement, s.log_s, s.log_s_complement, s.residual, s.iterations
    )
}

fn parse_mutation(spec: &str) -> Result<Mutation> {
    let (name, value) = match spec.split_once('=') {
        Some((n, v)) => {
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Domain(format!("bad mutation value in `{spec}`")))?;
            (n.trim(), Some(v))
        }
        None => (spec.trim(), None),
    };
    let val = |d: f64| value.unwrap_or(d);
    match name {
        "pi_p" => Ok(Mutation::PiPAsPi),
        "artanh_exponent" => Ok(Mutation::ArtanhExponent(val(1.1))),
        "holder" => Ok(Mutation::HolderConstant(val(0.5))),
        "lambda_rate" => Ok(Mutation::LambdaRate(val(0.9))),
        "mu_lower" => Ok(Mutation::MuLowerScale(val(1.05))),
        "dk_sign" => Ok(Mutation::DkDrSignFlip),
        other => Err(Error::Unknown(format!("mutation {other}"))),
    }
}

fn grid_from(clauses: &[String], base: GridSpec) -> Result<GridSpec> {
    base.with_clauses(
        clauses
            .iter()
            .flat_map(|c| c.split(';'))
            .filter(|c| !c.trim().is_empty()),
    )
}

fn check(args: &CheckArgs, cfg: &EvalConfig, stdout: &mut dyn Write) -> Result<i32> {
    let ids: Vec<String> = if args.all {
        suite_ids().into_iter().map(String::from).collect()
    } else if args.ids.is_empty() {
        return Err(Error::Domain("check needs suite ids or --all".into()));
    } else {
        args.ids.clone()
    };
    let grid = grid_from(&args.grid, GridSpec::default())?;
    let mutation = args
        .mutation
        .as_deref()
        .map(parse_mutation)
        .transpose()?
        .unwrap_or_default();
    let opts = RunOptions {
        slack: args.slack,
        mutation,
        ..RunOptions::default()
    };
    let reports = ids
        .iter()
        .map(|id| run_suite_with(id, &grid, cfg, opts))
        .collect::<Result<Vec<SuiteReport>>>()?;
    for rep in &reports {
        emit(stdout, rep.summary_line())?;
        for n in &rep.notes {
            emit(stdout, format!("  note {n}"))?;
        }
    }
    if let Some(path) = &args.out {
        let f = File::create(path)
            .map_err(|e| Error::Domain(format!("cannot create {}: {e}", path.display())))?;
        write_records(BufWriter::new(f), &reports, args.format)?;
    }
    Ok(reports
        .iter()
        .map(SuiteReport::exit_code)
        .max()
        .unwrap_or(0))
}

fn figure(args: &FigureArgs, cfg: &EvalConfig, stdout: &mut dyn Write) -> Result<i32> {
    let grid = grid_from(&args.grid, figure_grid(&args.id)?)?;
    let text = emit_figure(&args.id, &grid, args.format, cfg)?;
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?,
        None => {
            write!(stdout, "{text}").map_err(|e| Error::Domain(format!("output error: {e}")))?
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("gmodular").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_symmetric_point() {
        let (code, out, _) = run_str(&["eval", "--fn", "mu", "--a", "0.5", "--r", "0.70710678"]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["eval", "--fn", "nope", "--a", "0.5"]).0, 2);
        assert_eq!(
            run_str(&["eval", "--fn", "mu", "--a", "0.9", "--r", "0.5"]).0,
            2
        );
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["check"]).0, 2);
    }

    #[test]
    fn mutation_names() {
        assert_eq!(parse_mutation("pi_p").unwrap(), Mutation::PiPAsPi);
        assert_eq!(
            parse_mutation("holder=0.25").unwrap(),
            Mutation::HolderConstant(0.25)
        );
        assert!(parse_mutation("bogus").is_err());
    }
}
