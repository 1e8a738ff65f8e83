//! Command-line front end for the `munarini` library.
//!
//! Subcommands:
//!
//! - `gen`: build one family member and write it as JSON, DOT, or an edge
//!   list.
//! - `poly`: print counting polynomials (weight, cube, distance-cube,
//!   maximal-cube) or cube numbers, as text or CSV.
//! - `verify`: run self-check suites over a parameter box and report one
//!   line per check.
//! - `census`: enumerate induced subcubes of a built graph and print the
//!   censuses as CSV (or dump the cubes as JSON).
//! - `export`: read a graph JSON document and re-emit it in another format.
//!
//! Instead of flags, a command can be described by a JSON config file
//! passed as `--config file.json`; the file mirrors the flag names.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! usage errors (bad flags, invalid parameters, or a graph above the
//! vertex cap). All output is byte-deterministic for a given invocation.

mod verify;

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use munarini::graphs::{self, Family, LabeledGraph};
use munarini::poly::{self, IntPoly};
use munarini::{embedding, Error};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

/// Environment variable bounding the vertex count of any graph a command
/// will build; graphs above the cap are refused with a usage error.
const VERTEX_CAP_VAR: &str = "MUNARINI_VERTEX_CAP";
/// Default value of the vertex cap when the variable is unset.
const DEFAULT_VERTEX_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "munarini", version, about = "Munarini graph toolkit")]
struct Cli {
    /// JSON config file describing one command (alternative to a
    /// subcommand; mutually exclusive with it).
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family member and write it out.
    Gen(GenArgs),
    /// Print counting polynomials or cube numbers.
    Poly(PolyArgs),
    /// Run verification suites and report one line per check.
    Verify(VerifyArgs),
    /// Enumerate induced subcubes and print censuses.
    Census(CensusArgs),
    /// Re-emit a graph JSON document in another format.
    Export(ExportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Graph family: munarini, genpell, fibonacci, pell, hypercube, or star.
    #[arg(long)]
    family: String,

    /// Order (string length). Defaults to 1 for the star family.
    #[arg(short)]
    n: Option<usize>,

    /// Arity. Required for munarini, genpell, and star; fixed for the rest.
    #[arg(short)]
    k: Option<u8>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,

    /// Output file (standard output when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    /// Which quantity to print.
    #[arg(value_enum)]
    which: PolyKind,

    /// Single order n.
    #[arg(short)]
    n: Option<usize>,

    /// Arity k (at least 1).
    #[arg(short)]
    k: u8,

    /// Series bound: print results for every order 0..=N, one per line.
    #[arg(short = 'N', long = "series")]
    series: Option<usize>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,

    /// Output file (standard output when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    suite: SuiteKind,

    /// Largest order checked (box mode).
    #[arg(long = "n-max", default_value_t = 5)]
    n_max: usize,

    /// Largest arity checked (box mode).
    #[arg(long = "k-max", default_value_t = 3)]
    k_max: u8,

    /// Restrict the suite to a single family instance.
    #[arg(long)]
    family: Option<String>,

    /// Order of the single instance (with --family).
    #[arg(short)]
    n: Option<usize>,

    /// Arity of the single instance (with --family).
    #[arg(short)]
    k: Option<u8>,
}

#[derive(Args)]
struct CensusArgs {
    /// Which census to print.
    #[arg(value_enum)]
    which: CensusKind,

    /// Graph family: munarini, genpell, fibonacci, pell, hypercube, or star.
    #[arg(long)]
    family: String,

    /// Order (string length). Defaults to 1 for the star family.
    #[arg(short)]
    n: Option<usize>,

    /// Arity. Required for munarini, genpell, and star; fixed for the rest.
    #[arg(short)]
    k: Option<u8>,

    /// Dump the underlying cube records as JSON instead of CSV counts
    /// (cubes and maxcubes only).
    #[arg(long)]
    dump: bool,

    /// Output file (standard output when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Graph JSON document to read.
    input: PathBuf,

    /// Output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,

    /// Output file (standard output when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum GraphFormat {
    Json,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PolyKind {
    /// Weight polynomial W(x).
    Weight,
    /// Cube polynomial C(x).
    Cube,
    /// Distance cube polynomial D(x, q).
    Dcube,
    /// Maximal cube polynomial H(x).
    Maxcube,
    /// Cube number q(G) = C(1).
    Qnum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum CensusKind {
    /// Induced cubes by dimension.
    Cubes,
    /// Maximal induced cubes by dimension.
    Maxcubes,
    /// Induced cubes by (dimension, distance of bottom from the zero vertex).
    Dcubes,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    /// Hypercube embeddings preserve distances.
    Isometry,
    /// Label sets are downward closed with the expected maximal vertices.
    Daisy,
    /// Coordinatewise majorities of vertex triples are vertices.
    Median,
    /// Counting identities: orders, sizes, polynomial routes, isomorphisms.
    Identities,
    /// Brute-force censuses against the polynomial formulas.
    Oracle,
    /// All of the above.
    All,
}

/// JSON mirror of the command line, selected by a "command" tag. Field
/// names match the long flag names.
#[derive(Deserialize)]
#[serde(tag = "command", rename_all = "lowercase", deny_unknown_fields)]
enum FileConfig {
    Gen {
        family: String,
        n: Option<usize>,
        k: Option<u8>,
        format: Option<GraphFormat>,
        output: Option<PathBuf>,
    },
    Poly {
        which: PolyKind,
        n: Option<usize>,
        k: u8,
        series: Option<usize>,
        format: Option<TableFormat>,
        output: Option<PathBuf>,
    },
    Verify {
        suite: SuiteKind,
        n_max: Option<usize>,
        k_max: Option<u8>,
        family: Option<String>,
        n: Option<usize>,
        k: Option<u8>,
    },
    Census {
        which: CensusKind,
        family: String,
        n: Option<usize>,
        k: Option<u8>,
        #[serde(default)]
        dump: bool,
        output: Option<PathBuf>,
    },
    Export {
        input: PathBuf,
        format: Option<GraphFormat>,
        output: Option<PathBuf>,
    },
}

impl FileConfig {
    fn into_command(self) -> Command {
        match self {
            FileConfig::Gen { family, n, k, format, output } => Command::Gen(GenArgs {
                family,
                n,
                k,
                format: format.unwrap_or(GraphFormat::Json),
                output,
            }),
            FileConfig::Poly { which, n, k, series, format, output } => Command::Poly(PolyArgs {
                which,
                n,
                k,
                series,
                format: format.unwrap_or(TableFormat::Text),
                output,
            }),
            FileConfig::Verify { suite, n_max, k_max, family, n, k } => {
                Command::Verify(VerifyArgs {
                    suite,
                    n_max: n_max.unwrap_or(5),
                    k_max: k_max.unwrap_or(3),
                    family,
                    n,
                    k,
                })
            }
            FileConfig::Census { which, family, n, k, dump, output } => {
                Command::Census(CensusArgs { which, family, n, k, dump, output })
            }
            FileConfig::Export { input, format, output } => Command::Export(ExportArgs {
                input,
                format: format.unwrap_or(GraphFormat::Json),
                output,
            }),
        }
    }
}

/// Errors surfaced to the user, classified by exit code.
pub enum CliError {
    /// Bad invocation: unknown flags, missing or inconsistent parameters,
    /// unreadable files, or a graph above the vertex cap. Exit code 2.
    Usage(String),
    /// A library error. Input-shaped errors exit 2; failed structural
    /// checks (non-isometric labelings, internal inconsistencies) exit 1.
    Lib(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(err) => match err {
                Error::NotIsometric { .. }
                | Error::MedianNotVertex(..)
                | Error::Internal(_) => 1,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Lib(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    let command = match (cli.config, cli.command) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--config and a subcommand are mutually exclusive".into(),
            ))
        }
        (Some(path), None) => load_config(&path)?,
        (None, Some(command)) => command,
        (None, None) => {
            return Err(CliError::Usage(
                "expected a subcommand or --config <file>; see --help".into(),
            ))
        }
    };
    match command {
        Command::Gen(args) => {
            let text = cmd_gen(&args)?;
            emit(args.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly(args) => {
            let text = cmd_poly(&args)?;
            emit(args.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census(args) => {
            let text = cmd_census(&args)?;
            emit(args.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export(args) => {
            let text = cmd_export(&args)?;
            emit(args.output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify::run(&args),
    }
}

fn load_config(path: &Path) -> Result<Command, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Usage(format!("cannot read {}: {err}", path.display())))?;
    let config: FileConfig = serde_json::from_str(&text)
        .map_err(|err| CliError::Usage(format!("invalid config file: {err}")))?;
    Ok(config.into_command())
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| CliError::Usage(format!("cannot write {}: {err}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|err| CliError::Usage(format!("cannot write standard output: {err}")))
        }
    }
}

/// Resolves a family name plus optional -n/-k into concrete parameters,
/// filling in fixed arities and the star family's implicit order.
pub fn resolve_family(
    name: &str,
    n: Option<usize>,
    k: Option<u8>,
) -> Result<(Family, usize, u8), CliError> {
    let family: Family = name.parse()?;
    let k = match (family.fixed_arity(), k) {
        (Some(fixed), None) => fixed,
        (Some(fixed), Some(given)) if given == fixed => fixed,
        (Some(fixed), Some(given)) => {
            return Err(CliError::Usage(format!(
                "family '{family}' has fixed arity {fixed}, but -k {given} was given"
            )))
        }
        (None, Some(given)) => given,
        (None, None) => {
            return Err(CliError::Usage(format!("family '{family}' requires -k")))
        }
    };
    let n = match n {
        Some(n) => n,
        None if family == Family::Star => 1,
        None => return Err(CliError::Usage(format!("family '{family}' requires -n"))),
    };
    Ok((family, n, k))
}

fn vertex_cap() -> Result<BigInt, CliError> {
    match std::env::var(VERTEX_CAP_VAR) {
        Ok(text) => text.trim().parse::<u64>().map(BigInt::from).map_err(|_| {
            CliError::Usage(format!(
                "{VERTEX_CAP_VAR} must be a nonnegative integer, got '{text}'"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(BigInt::from(DEFAULT_VERTEX_CAP)),
        Err(err) => Err(CliError::Usage(format!("cannot read {VERTEX_CAP_VAR}: {err}"))),
    }
}

/// Refuses parameters whose vertex count exceeds the cap, without
/// building the graph.
pub fn check_cap(family: Family, n: usize, k: u8) -> Result<(), CliError> {
    let cap = vertex_cap()?;
    let count = graphs::vertex_count_formula(family, n, k);
    if count > cap {
        return Err(CliError::Usage(format!(
            "{family} graph with n={n}, k={k} has {count} vertices, above the cap of {cap}; \
             set {VERTEX_CAP_VAR} to raise it"
        )));
    }
    Ok(())
}

fn build_capped(family: Family, n: usize, k: u8) -> Result<LabeledGraph, CliError> {
    check_cap(family, n, k)?;
    Ok(graphs::build_family(family, n, k)?)
}

fn render_graph(graph: &LabeledGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => graph.to_json(),
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Edgelist => graph.to_edge_list(),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<String, CliError> {
    let (family, n, k) = resolve_family(&args.family, args.n, args.k)?;
    let graph = build_capped(family, n, k)?;
    Ok(render_graph(&graph, args.format))
}

fn cmd_export(args: &ExportArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|err| CliError::Usage(format!("cannot read {}: {err}", args.input.display())))?;
    let graph = LabeledGraph::from_json(&text)?;
    Ok(render_graph(&graph, args.format))
}

/// Appends one polynomial to the output, as its text form or as CSV rows
/// `n,k,exponent,coefficient` (nonzero coefficients only).
fn push_poly(out: &mut String, format: TableFormat, n: usize, k: u8, p: &IntPoly) {
    match format {
        TableFormat::Text => {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        TableFormat::Csv => {
            for (exp, coeff) in p.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    out.push_str(&format!("{n},{k},{exp},{coeff}\n"));
                }
            }
        }
    }
}

fn cmd_poly(args: &PolyArgs) -> Result<String, CliError> {
    let k = args.k;
    if k == 0 {
        return Err(CliError::Usage("poly requires -k at least 1".into()));
    }
    let single_or_range = |out: &mut String,
                           compute: &dyn Fn(usize) -> Result<IntPoly, Error>|
     -> Result<(), CliError> {
        match (args.n, args.series) {
            (Some(_), Some(_)) => {
                Err(CliError::Usage("use exactly one of -n and -N".into()))
            }
            (None, None) => Err(CliError::Usage("poly requires -n or -N".into())),
            (Some(n), None) => {
                push_poly(out, args.format, n, k, &compute(n)?);
                Ok(())
            }
            (None, Some(n_max)) => {
                for n in 0..=n_max {
                    push_poly(out, args.format, n, k, &compute(n)?);
                }
                Ok(())
            }
        }
    };

    let mut out = String::new();
    match args.which {
        PolyKind::Weight => single_or_range(&mut out, &|n| Ok(poly::weight_poly(n, k)))?,
        PolyKind::Cube => single_or_range(&mut out, &|n| Ok(poly::cube_poly(n, k)))?,
        PolyKind::Maxcube => single_or_range(&mut out, &|n| poly::maximal_cube_poly(n, k))?,
        PolyKind::Dcube => {
            if args.series.is_some() {
                return Err(CliError::Usage(
                    "poly dcube prints a single order; use -n".into(),
                ));
            }
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("poly dcube requires -n".into()))?;
            let d = poly::distance_cube_poly(n, k);
            match args.format {
                TableFormat::Text => {
                    out.push_str(&d.to_string());
                    out.push('\n');
                }
                TableFormat::Csv => {
                    for ((x_exp, q_exp), coeff) in d.terms() {
                        out.push_str(&format!("{n},{k},{x_exp},{q_exp},{coeff}\n"));
                    }
                }
            }
        }
        PolyKind::Qnum => match (args.n, args.series) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage("use exactly one of -n and -N".into()))
            }
            (None, None) => return Err(CliError::Usage("poly qnum requires -n or -N".into())),
            (Some(n), None) => {
                let value = poly::cube_number(n, k);
                match args.format {
                    TableFormat::Text => out.push_str(&format!("{value}\n")),
                    TableFormat::Csv => out.push_str(&format!("{n},{k},0,{value}\n")),
                }
            }
            (None, Some(n_max)) => {
                let series = poly::cube_number_series(k, n_max)?;
                match args.format {
                    TableFormat::Text => {
                        let terms: Vec<String> =
                            series.iter().map(BigInt::to_string).collect();
                        out.push_str(&terms.join(" "));
                        out.push('\n');
                    }
                    TableFormat::Csv => {
                        for (n, value) in series.iter().enumerate() {
                            out.push_str(&format!("{n},{k},0,{value}\n"));
                        }
                    }
                }
            }
        },
    }
    Ok(out)
}

#[derive(serde::Serialize)]
struct CubeRecord<'a> {
    bottom: usize,
    top: usize,
    support: &'a [usize],
}

fn cmd_census(args: &CensusArgs) -> Result<String, CliError> {
    let (family, n, k) = resolve_family(&args.family, args.n, args.k)?;
    let graph = build_capped(family, n, k)?;
    let embedded = embedding::auto_labeling(graph)?;

    if args.dump {
        let cubes = match args.which {
            CensusKind::Cubes => embedded.enumerate_cubes(),
            CensusKind::Maxcubes => embedded.enumerate_maximal_cubes(),
            CensusKind::Dcubes => {
                return Err(CliError::Usage(
                    "--dump applies to cubes and maxcubes only".into(),
                ))
            }
        };
        let records: Vec<CubeRecord<'_>> = cubes
            .iter()
            .map(|cube| CubeRecord {
                bottom: cube.bottom,
                top: cube.top,
                support: &cube.support,
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&records)
            .map_err(|err| CliError::Lib(Error::Internal(format!("JSON encoding: {err}"))))?;
        text.push('\n');
        return Ok(text);
    }

    let mut out = String::new();
    match args.which {
        CensusKind::Cubes => {
            for (dim, count) in embedded.cube_census().iter().enumerate() {
                if *count != 0 {
                    out.push_str(&format!("{dim},{count}\n"));
                }
            }
        }
        CensusKind::Maxcubes => {
            for (dim, count) in embedded.maximal_cube_census().iter().enumerate() {
                if *count != 0 {
                    out.push_str(&format!("{dim},{count}\n"));
                }
            }
        }
        CensusKind::Dcubes => {
            let origin = embedded.zero_vertex().ok_or_else(|| {
                CliError::Lib(Error::Internal(
                    "labeling has no all-zero vertex".into(),
                ))
            })?;
            for ((dim, dist), count) in embedded.distance_cube_census(origin) {
                out.push_str(&format!("{dim},{dist},{count}\n"));
            }
        }
    }
    Ok(out)
}
