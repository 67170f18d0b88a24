use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hml_cli::eval::{format_complex, split_args, EvalRecord, Function};
use hml_cli::literal::parse_complex;
use hml_cli::{plot, run_verify, table, verify_csv, verify_text, CliError, Format};
use hml_core::identities::GridSpec;
use hml_core::modular::ReductionGroup;
use hml_core::{HGParams, IdentityId, SchwarzId};

const LITERALS: &str = "Points are complex literals: a, ai, a+bi or a-bi, where each component is a \
decimal (0.25, 1e-3) or a rational (1/4); i and -i are accepted.";

const EVAL_HELP: &str = "Points are complex literals: a, ai, a+bi or a-bi, where each component is a \
decimal (0.25, 1e-3) or a rational (1/4); i and -i are accepted. Options go before the function \
name, as in `hml eval --format json nu i`, since arguments after it may begin with a minus sign.";

#[derive(Parser)]
#[command(name = "hml", version, about = "Hypergeometric functions, theta constants and modular identities")]
#[command(after_help = LITERALS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at one or more points.
    ///
    /// Functions: F (takes a b c before the points), theta00, theta01,
    /// theta10, theta11, lambda, nu, j, E4, phi0, phi1, phi2.
    #[command(after_help = EVAL_HELP)]
    Eval {
        function: String,
        #[arg(allow_hyphen_values = true, required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check identities; `all` selects every identity.
    #[command(after_help = LITERALS)]
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Explicit tau points for identities in tau (repeatable).
        #[arg(long, allow_hyphen_values = true)]
        tau: Vec<String>,
        /// Explicit z points for identities in z (repeatable).
        #[arg(long, allow_hyphen_values = true)]
        z: Vec<String>,
        /// Grid size per identity when no explicit points are given.
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a CSV table: a function over points, `riemann_scheme` or
    /// `circuit_matrices` (optionally for one triple a b c).
    #[command(after_help = LITERALS)]
    Table {
        what: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
        /// Number of default grid points when a function is given no points.
        #[arg(long, default_value_t = 5)]
        grid: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw an SVG figure.
    Plot {
        #[arg(value_enum)]
        kind: PlotKind,
        /// Schwarz map for `schwarz-triangle`.
        #[arg(long, default_value = "phi1")]
        map: String,
        /// Group for `tessellation`.
        #[arg(long, value_enum, default_value_t = GroupArg::Sl2z)]
        group: GroupArg,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    FundamentalDomains,
    SchwarzTriangle,
    Tessellation,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl2z,
    Gamma2CubeRoot,
}

fn parse_points(raw: &[String]) -> Result<Option<Vec<hml_core::ComplexValue>>, CliError> {
    if raw.is_empty() {
        return Ok(None);
    }
    raw.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>().map(Some)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Io(e.to_string()))
}

fn cmd_eval(function: &str, args: &[String], format: Format) -> Result<(), CliError> {
    let f: Function = function.parse()?;
    let (params, points) = split_args(f, args)?;
    if points.is_empty() {
        return Err(CliError::Parse("no points given".into()));
    }
    let inputs = &args[args.len() - points.len()..];
    let mut records = Vec::new();
    for (p, input) in points.iter().zip(inputs) {
        let v = f.evaluate(params.as_ref(), *p)?;
        records.push(EvalRecord { function: function.to_string(), input: input.clone(), re: v.re, im: v.im });
    }
    let text = match format {
        Format::Json if records.len() == 1 => json(&records[0])?,
        Format::Json => json(&records)?,
        Format::Csv => {
            let mut s = String::from("function,input,re,im\n");
            for r in &records {
                s.push_str(&format!("{},\"{}\",{},{}\n", r.function, r.input, r.re, r.im));
            }
            s
        }
        Format::Text => {
            records.iter().map(|r| format_complex(hml_core::ComplexValue::new(r.re, r.im)) + "\n").collect()
        }
    };
    emit(&text, None)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    ids: &[String],
    tol: f64,
    tau: &[String],
    z: &[String],
    points: usize,
    seed: u64,
    format: Format,
) -> Result<(), CliError> {
    let ids: Vec<IdentityId> = if ids.iter().any(|s| s == "all") {
        IdentityId::ALL.to_vec()
    } else {
        ids.iter()
            .map(|s| s.parse::<IdentityId>().map_err(|e| CliError::Parse(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let grid = GridSpec {
        ids: Vec::new(),
        tau_points: points,
        z_points: points,
        seed,
        tau_override: parse_points(tau)?,
        z_override: parse_points(z)?,
    };
    let out = run_verify(&ids, grid, tol)?;
    let text = match format {
        Format::Text => verify_text(&out),
        Format::Json => json(&out.reports)?,
        Format::Csv => verify_csv(&out)?,
    };
    emit(&text, None)?;
    if out.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn triples(args: &[String]) -> Result<Vec<HGParams>, CliError> {
    match args.len() {
        0 => Ok(HGParams::studied().to_vec()),
        3 => {
            let r = |s: &String| hml_cli::eval::parse_rational(s);
            Ok(vec![HGParams::new(r(&args[0])?, r(&args[1])?, r(&args[2])?)?])
        }
        n => Err(CliError::Parse(format!("expected a b c or nothing, got {n} arguments"))),
    }
}

fn cmd_table(what: &str, args: &[String], grid: usize, output: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match what {
        "riemann_scheme" => table::riemann_table(&triples(args)?)?,
        "circuit_matrices" => table::circuit_table(&triples(args)?)?,
        name => {
            let f: Function = name.parse()?;
            let (params, mut points) = split_args(f, args)?;
            if points.is_empty() {
                points = table::default_points(f, grid);
            }
            table::function_table(f, name, params.as_ref(), &points)?
        }
    };
    emit(&text, output)
}

fn cmd_plot(
    kind: PlotKind,
    map: &str,
    group: GroupArg,
    depth: usize,
    output: Option<&PathBuf>,
) -> Result<(), CliError> {
    let svg = match kind {
        PlotKind::FundamentalDomains => plot::fundamental_domains(),
        PlotKind::SchwarzTriangle => {
            let id: SchwarzId = map.parse().map_err(|e: hml_core::Error| CliError::Parse(e.to_string()))?;
            plot::schwarz_triangle(id)
        }
        PlotKind::Tessellation => {
            let g = match group {
                GroupArg::Sl2z => ReductionGroup::SL2Z,
                GroupArg::Gamma2CubeRoot => ReductionGroup::Gamma2CubeRoot,
            };
            plot::tessellation(g, depth)
        }
    };
    emit(&svg, output)
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("HML_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| CliError::Parse(format!("HML_THREADS={v:?} is not a count")))?;
        // Ignore the error raised when a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Eval { function, args, format } => cmd_eval(&function, &args, format),
        Command::Verify { ids, tol, tau, z, points, seed, format } => {
            cmd_verify(&ids, tol, &tau, &z, points, seed, format)
        }
        Command::Table { what, args, grid, output } => cmd_table(&what, &args, grid, output.as_ref()),
        Command::Plot { kind, map, group, depth, output } => cmd_plot(kind, &map, group, depth, output.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if e != CliError::Failed {
                eprintln!("hml: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
