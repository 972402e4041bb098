//! Command dispatch. [`run_command`] never touches the process: it returns
//! the exit code and both output streams, which keeps it testable.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rrclosure::harness::{run_suite, Envelope, GeneratorConfig};
use rrclosure::monomial::{
    is_l_stable, is_reduction_of, is_stable, rr_closure, ChainReport, OracleVerdict,
};
use rrclosure::valuation::{rr_by_chain, rr_closed_form, rr_hat, v_closure};
use rrclosure::{integral_closure_2v, ClosureConfig, CutIdeal, MonomialIdeal, ValueGroup};
use serde_json::{json, Value};

use crate::parse::{parse_group, parse_poly_ideal, parse_val_ideal, parse_vars};
use crate::svg::staircase_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rrclosure",
    version,
    about = "Ratliff-Rush closures of monomial ideals and of ideals in valuation domains"
)]
struct Cli {
    /// Print the structured JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print the result line only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monomial ideals in a polynomial ring.
    Poly(PolyArgs),
    /// Ideals of a valuation domain, given as cuts of its value group.
    Val(ValArgs),
    /// Run the property suite over both universes.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Comma-separated variable names.
    #[arg(long, default_value = "x,y")]
    vars: String,
    /// Generators, e.g. "x^4, x^3*y, x*y^3, y^4"; `@path` reads a file.
    #[arg(long)]
    ideal: String,
    /// Second ideal for colon, mult and reduction.
    #[arg(long)]
    other: Option<String>,
    /// Exponent for power.
    #[arg(long)]
    exp: Option<u32>,
    /// Number of chain terms (I^{n+1} : I^n) computed.
    #[arg(long, default_value_t = 16)]
    nmax: u32,
    /// Consecutive equal terms that count as stabilized.
    #[arg(long, default_value_t = 3)]
    window: u32,
    /// Write a staircase plot of input and result (two variables only).
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(value_enum)]
    op: PolyOp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolyOp {
    /// Ratliff-Rush closure, certified by the brute-force oracle.
    Rr,
    /// Every chain term with the closure.
    Chain,
    /// Integral closure.
    Ic,
    /// (ideal : other).
    Colon,
    /// ideal * other.
    Mult,
    /// ideal^exp.
    Power,
    /// Invertible in its endomorphism ring.
    Stable,
    /// (I^n : I^n) = (I : I) for n <= nmax.
    Lstable,
    /// Smallest n <= nmax with ideal * other^n = other^{n+1}.
    Reduction,
}

#[derive(Args, Debug)]
struct ValArgs {
    /// Value group, e.g. "lex(Z,Q)".
    #[arg(long)]
    group: String,
    /// Cut, e.g. "gt m=1 rho=1"; `@path` reads a file.
    #[arg(long)]
    ideal: String,
    /// Chain length for the cross-check of rr.
    #[arg(long, default_value_t = 4)]
    nmax: u32,
    #[arg(value_enum)]
    op: ValOp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ValOp {
    /// Ratliff-Rush closure.
    Rr,
    /// Generalized closure in the fraction field.
    Hat,
    /// v-closure (V : (V : I)).
    V,
    /// (V : I).
    Inverse,
    /// I (V : I).
    Trace,
    /// Whether the cut is a prime ideal.
    Prime,
    /// Whether I^2 = I.
    Idempotent,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random cases per sampled check.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    cases: u64,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                CommandOutput::ok(rendered)
            };
        }
    };
    let out = match &cli.command {
        Command::Poly(args) => run_poly(args),
        Command::Val(args) => run_val(args),
        Command::Verify(args) => return run_verify(args, &cli),
    };
    match out {
        Ok(doc) => CommandOutput::ok(render(&doc, &cli)),
        Err(message) => CommandOutput::usage(message),
    }
}

/// Result of a poly or val command before rendering.
struct Outcome {
    envelope: Envelope,
    /// Text lines after the result line; dropped by `--quiet`.
    details: Vec<String>,
    result_line: String,
}

fn render(doc: &Outcome, cli: &Cli) -> String {
    if cli.json {
        return doc.envelope.to_json() + "\n";
    }
    let mut s = doc.result_line.clone();
    s.push('\n');
    if !cli.quiet {
        for line in &doc.details {
            s.push_str(line);
            s.push('\n');
        }
        for w in &doc.envelope.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
    }
    s
}

fn read_arg(flag: &str, text: &str) -> Result<String, String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{flag}: cannot read `{path}`: {e}")),
        None => Ok(text.to_string()),
    }
}

fn run_poly(args: &PolyArgs) -> Result<Outcome, String> {
    let vars = parse_vars(&args.vars).map_err(|e| format!("--vars: {e}"))?;
    let ideal_text = read_arg("--ideal", &args.ideal)?;
    let ideal = parse_poly_ideal(&vars, &ideal_text).map_err(|e| format!("--ideal: {e}"))?;
    let other = match &args.other {
        Some(text) => {
            let text = read_arg("--other", text)?;
            Some(parse_poly_ideal(&vars, &text).map_err(|e| format!("--other: {e}"))?)
        }
        None => None,
    };
    let need_other = || other.clone().ok_or_else(|| format!("{:?} needs --other", args.op).to_lowercase());
    let cfg = ClosureConfig { n_max: args.nmax, window: args.window, ..ClosureConfig::default() };
    cfg.validate().map_err(|e| e.to_string())?;
    let show = |i: &MonomialIdeal| i.display_with(&vars);
    let lib = |e: rrclosure::Error| e.to_string();

    let mut inputs = json!({
        "vars": vars.join(","),
        "ideal": show(&ideal),
        "nmax": args.nmax,
        "window": args.window,
    });
    if let Some(o) = &other {
        inputs["other"] = json!(show(o));
    }
    if let Some(e) = args.exp {
        inputs["exp"] = json!(e);
    }

    let mut certified = None;
    let mut chain = None;
    let mut warnings = Vec::new();
    let mut details = Vec::new();
    let mut result_ideal: Option<MonomialIdeal> = None;
    let result: Value = match args.op {
        PolyOp::Rr | PolyOp::Chain => {
            let (closure, report) = rr_closure(&ideal, &cfg).map_err(lib)?;
            certified = Some(report.certified);
            warnings = report.warnings.clone();
            chain = Some(chain_json(&report, &show));
            if args.op == PolyOp::Chain {
                for (k, t) in report.terms.iter().enumerate() {
                    details.push(format!("n={}: {}", k + 1, show(t)));
                }
                details.push(match report.stabilized_at {
                    Some(n) => format!("stabilized_at={n}"),
                    None => "stabilized_at=none".to_string(),
                });
            }
            details.push(format!("certified={}", report.certified));
            result_ideal = Some(closure);
            json!(show(result_ideal.as_ref().unwrap()))
        }
        PolyOp::Ic => {
            result_ideal = Some(integral_closure_2v(&ideal).map_err(lib)?);
            json!(show(result_ideal.as_ref().unwrap()))
        }
        PolyOp::Colon => {
            result_ideal = Some(ideal.colon(&need_other()?).map_err(lib)?);
            json!(show(result_ideal.as_ref().unwrap()))
        }
        PolyOp::Mult => {
            result_ideal = Some(ideal.multiply(&need_other()?).map_err(lib)?);
            json!(show(result_ideal.as_ref().unwrap()))
        }
        PolyOp::Power => {
            let e = args.exp.ok_or("power needs --exp")?;
            result_ideal = Some(ideal.power(e).map_err(lib)?);
            json!(show(result_ideal.as_ref().unwrap()))
        }
        PolyOp::Stable => json!(is_stable(&ideal)),
        PolyOp::Lstable => {
            let l = is_l_stable(&ideal, &cfg).map_err(lib)?;
            if l.capped {
                warnings.push(format!("verdict checked only for n <= {}", l.checked_up_to));
            }
            serde_json::to_value(l).expect("serializable")
        }
        PolyOp::Reduction => {
            let n = is_reduction_of(&ideal, &need_other()?, &cfg).map_err(lib)?;
            json!(n)
        }
    };

    if let Some(path) = &args.svg {
        let out = result_ideal
            .as_ref()
            .ok_or_else(|| format!("--svg needs an ideal-valued op, not {:?}", args.op).to_lowercase())?;
        let title = format!("{} -> {}", show(&ideal), show(out));
        let svg = staircase_svg(&vars, &ideal, out, &title).map_err(lib)?;
        std::fs::write(path, svg).map_err(|e| format!("--svg: cannot write `{}`: {e}", path.display()))?;
    }

    let result_line = match &result {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    };
    Ok(Outcome {
        envelope: Envelope {
            universe: "poly".into(),
            op: op_name(args.op),
            inputs,
            result,
            certified,
            chain,
            warnings,
        },
        details,
        result_line,
    })
}

fn op_name<T: ValueEnum>(op: T) -> String {
    op.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn chain_json(report: &ChainReport, show: &dyn Fn(&MonomialIdeal) -> String) -> Value {
    let oracle = match &report.oracle {
        OracleVerdict::NotRun => json!("not_run"),
        OracleVerdict::Agrees => json!("agrees"),
        OracleVerdict::BoundaryTouched => json!("boundary_touched"),
        OracleVerdict::Disagrees(i) => json!({ "disagrees": show(i) }),
    };
    json!({
        "terms": report.terms.iter().map(show).collect::<Vec<_>>(),
        "stabilized_at": report.stabilized_at,
        "n_max": report.n_max,
        "window": report.window,
        "oracle": oracle,
    })
}

fn run_val(args: &ValArgs) -> Result<Outcome, String> {
    let group: ValueGroup = parse_group(&args.group).map_err(|e| format!("--group: {e}"))?;
    let text = read_arg("--ideal", &args.ideal)?;
    let cut: CutIdeal = parse_val_ideal(&group, &text).map_err(|e| format!("--ideal: {e}"))?;
    let lib = |e: rrclosure::Error| e.to_string();
    let inputs = json!({ "group": group.to_string(), "ideal": cut.to_string(), "nmax": args.nmax });
    let mut warnings = Vec::new();
    let mut chain = None;
    let result = match args.op {
        ValOp::Rr => {
            let closed = rr_closed_form(&cut).map_err(lib)?;
            let by_chain = rr_by_chain(&cut, args.nmax).map_err(lib)?;
            if by_chain != closed {
                warnings.push(format!("chain union {by_chain} differs from the trace formula"));
            }
            chain = Some(json!({ "n_max": args.nmax, "union": by_chain.to_string() }));
            json!(closed.to_string())
        }
        ValOp::Hat => json!(rr_hat(&cut).to_string()),
        ValOp::V => json!(v_closure(&cut).to_string()),
        ValOp::Inverse => json!(cut.inverse().to_string()),
        ValOp::Trace => json!(cut.trace().to_string()),
        ValOp::Prime => match cut.is_prime() {
            Some(p) => json!({
                "prime": true,
                "j": p.j,
                "idempotent": cut.is_idempotent(),
                "maximal": cut.is_maximal(),
            }),
            None => json!({ "prime": false }),
        },
        ValOp::Idempotent => json!(cut.is_idempotent()),
    };
    let result_line = match &result {
        Value::String(s) => s.clone(),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    };
    Ok(Outcome {
        envelope: Envelope {
            universe: "val".into(),
            op: op_name(args.op),
            inputs,
            result,
            certified: None,
            chain,
            warnings,
        },
        details: Vec::new(),
        result_line,
    })
}

fn run_verify(args: &VerifyArgs, cli: &Cli) -> CommandOutput {
    let cfg = GeneratorConfig::with_seed(args.seed, args.cases as usize);
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => return CommandOutput::usage(e),
    };
    let stdout = if cli.json {
        Envelope::for_suite(&report).to_json() + "\n"
    } else if cli.quiet {
        format!("overall: {}\n", if report.pass { "PASS" } else { "FAIL" })
    } else {
        report.render_text()
    };
    CommandOutput {
        code: if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout,
        stderr: String::new(),
    }
}
