use std::fmt::Display;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dynatomic_core::dynatomic::{curve_info, dynatomic_poly, gen_dynatomic_poly, iterate_poly, MapSpec, PortraitLabel};
use dynatomic_core::exactmath::{bipoly_to_json, gcd_uni, parse_unipoly, rational_roots, QuotientElement, QuotientRing, Rational, Var};
use dynatomic_core::portraits::{orbit_portrait, realizes, FieldPoint, PointValue, RealizabilityResult, DEFAULT_BOUND};
use dynatomic_core::suites::{run_suite, sweep, GridEntry, SUITE_NAMES};
use dynatomic_core::Error;

#[derive(Parser, Debug)]
#[command(name = "dynatomic", version, about = "Exact dynatomic polynomials and portrait realizability for z^d + c")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Report at most this many rational witnesses per realizability query.
    #[arg(long, global = true)]
    witness_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the dynatomic polynomial Phi_N(X, C).
    Dynatomic { d: u32, n: u32 },
    /// Print the generalized dynatomic polynomial Phi_{M,N}(X, C).
    GenDynatomic { d: u32, m: u32, n: u32 },
    /// Print the iterate f^n(X) of X^d + C.
    Iterate { d: u32, n: u32 },
    /// Decide whether some c gives x portrait (M, N) under z^d + c.
    Realizes {
        #[arg(allow_hyphen_values = true)]
        x: String,
        m: u32,
        n: u32,
        d: u32,
        /// Minimal polynomial m(t); x is then read as a polynomial in t.
        #[arg(long)]
        field: Option<String>,
    },
    /// Compute the orbit portrait of x under z^d + c.
    Portrait {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        d: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        /// Minimal polynomial m(t); x and c are then read as polynomials in t.
        #[arg(long)]
        field: Option<String>,
    },
    /// Print degrees and component data of the curve Phi_{M,N} = 0.
    CurveInfo { d: u32, m: u32, n: u32 },
    /// Run the identity suites.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITE_NAMES))]
        suite: Option<String>,
    },
    /// Run realizability queries from a JSON grid file.
    Sweep {
        #[arg(long)]
        grid: std::path::PathBuf,
    },
}

/// Failures, split by exit code.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::NotRootOfUnity(_) | Error::NotSquarefree => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Output {
    stdout: String,
    ok: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, ok: true }
    }
}

fn render(format: Format, text: impl Display, json: impl FnOnce() -> Value) -> String {
    match format {
        Format::Text => text.to_string(),
        Format::Json => json().to_string(),
    }
}

fn field_from(arg: &Option<String>) -> Result<Option<QuotientRing>, Failure> {
    match arg {
        None => Ok(None),
        Some(s) => {
            let modulus = parse_unipoly(s, Var::T)?;
            // cheap necessary conditions for irreducibility; the rest is trusted
            let reducible = modulus.degree() > 1
                && (!rational_roots(&modulus)?.is_empty() || gcd_uni(&modulus, &modulus.derivative())?.degree() > 0);
            if reducible {
                return Err(Error::InvalidArgument(format!("field modulus `{s}` is reducible")).into());
            }
            Ok(Some(QuotientRing::new(modulus, true)?))
        }
    }
}

fn limit<S: dynatomic_core::exactmath::Scalar>(mut r: RealizabilityResult<S>, limit: Option<usize>) -> RealizabilityResult<S> {
    if let Some(k) = limit {
        r.witnesses.truncate(k);
    }
    r
}

fn emit_realizes<S: FieldPoint>(x: &S, label: PortraitLabel, spec: MapSpec, cli: &Cli) -> Result<String, Failure> {
    let r = limit(realizes(x, label, spec)?, cli.witness_limit);
    Ok(render(cli.format, &r, || r.to_json()))
}

fn emit_portrait<S: FieldPoint>(x: &S, c: &S, spec: MapSpec, bound: u32, format: Format) -> Result<String, Failure> {
    let r = orbit_portrait(x, c, spec, bound)?;
    Ok(render(format, &r, || {
        json!({
            "x": x.to_string(),
            "c": c.to_string(),
            "d": spec.d(),
            "orbit": r.orbit_strings(),
            "portrait": r.portrait_json(),
            "bound_used": r.bound_used,
        })
    }))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let spec = |d: u32| MapSpec::new(d).map_err(Failure::from);
    let label = |m: u32, n: u32| PortraitLabel::new(m, n).map_err(Failure::from);
    let format = cli.format;
    let text = match &cli.command {
        Command::Dynatomic { d, n } => {
            let p = dynatomic_poly(spec(*d)?, label(0, *n)?.n())?;
            render(format, &p, || bipoly_to_json(&p))
        }
        Command::GenDynatomic { d, m, n } => {
            let p = gen_dynatomic_poly(spec(*d)?, label(*m, *n)?)?;
            render(format, &p, || bipoly_to_json(&p))
        }
        Command::Iterate { d, n } => {
            let p = iterate_poly(spec(*d)?, *n);
            render(format, &p, || bipoly_to_json(&p))
        }
        Command::Realizes { x, m, n, d, field } => {
            let (spec, label) = (spec(*d)?, label(*m, *n)?);
            let ring = field_from(field)?;
            match PointValue::parse(x, ring.as_ref())? {
                PointValue::Rational(x) => emit_realizes::<Rational>(&x, label, spec, cli)?,
                PointValue::Algebraic(x) => emit_realizes::<QuotientElement>(&x, label, spec, cli)?,
            }
        }
        Command::Portrait { x, c, d, bound, field } => {
            let spec = spec(*d)?;
            if *bound == 0 {
                return Err(Failure::Usage("--bound must be at least 1".into()));
            }
            let ring = field_from(field)?;
            let (x, c) = (PointValue::parse(x, ring.as_ref())?, PointValue::parse(c, ring.as_ref())?);
            match PointValue::common_field(&x, &c)? {
                (PointValue::Rational(x), PointValue::Rational(c)) => emit_portrait(&x, &c, spec, *bound, format)?,
                (PointValue::Algebraic(x), PointValue::Algebraic(c)) => emit_portrait(&x, &c, spec, *bound, format)?,
                _ => unreachable!("common_field returns values of one kind"),
            }
        }
        Command::CurveInfo { d, m, n } => {
            let info = curve_info(spec(*d)?, label(*m, *n)?);
            let text = format!(
                "M = {}, N = {}, d = {}\ndegX = {}\ndegC = {}\ncomponents = {}\nsingular: {}",
                info.label.m(),
                info.label.n(),
                info.d,
                info.deg_x,
                info.deg_c,
                info.components,
                info.singular_note
            );
            render(format, text, || info.to_json())
        }
        Command::Verify { suite } => return Ok(verify(suite.as_deref(), format)),
        Command::Sweep { grid } => return run_sweep(grid, cli),
    };
    Ok(Output::ok(text))
}

fn verify(only: Option<&str>, format: Format) -> Output {
    let names: Vec<&str> = match only {
        Some(n) => vec![n],
        None => SUITE_NAMES.to_vec(),
    };
    let outcomes: Vec<_> = names.iter().map(|n| run_suite(n).expect("suite names are validated by clap")).collect();
    let ok = outcomes.iter().all(|o| o.passed());
    let stdout = match format {
        Format::Text => outcomes.iter().map(|o| o.to_string()).collect::<Vec<_>>().join("\n"),
        Format::Json => Value::Array(
            outcomes
                .iter()
                .map(|o| json!({"suite": o.name, "passed": o.passed(), "checks": o.checks, "failure": o.failure}))
                .collect(),
        )
        .to_string(),
    };
    Output { stdout, ok }
}

fn run_sweep(path: &std::path::Path, cli: &Cli) -> Result<Output, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read grid file {}: {e}", path.display())))?;
    let entries = GridEntry::parse_grid(&text)?;
    let mut lines = Vec::new();
    let mut json_items = Vec::new();
    for (entry, result) in entries.iter().zip(sweep(&entries)) {
        let r = match result {
            Ok(r) => limit(r, cli.witness_limit),
            Err(e) => {
                return Err(Failure::Internal(format!(
                    "x = {}, (M,N) = {}, d = {}: {e}",
                    entry.x,
                    entry.label,
                    entry.spec.d()
                )))
            }
        };
        let witnesses: Vec<String> = r.witnesses.iter().map(|w| w.c.to_string()).collect();
        lines.push(format!(
            "x={} M={} N={} d={} realizable={} deg_Pstar={} witnesses=[{}]",
            r.x,
            r.label.m(),
            r.label.n(),
            r.spec.d(),
            r.realizable,
            r.deg_pstar(),
            witnesses.join(", ")
        ));
        json_items.push(r.to_json());
    }
    let stdout = match cli.format {
        Format::Text => lines.join("\n"),
        Format::Json => Value::Array(json_items).to_string(),
    };
    Ok(Output::ok(stdout))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if !out.stdout.is_empty() {
                println!("{}", out.stdout);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
