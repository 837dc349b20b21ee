use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quadric_topology::crossval::{run_configuration, run_family, Family};
use quadric_topology::cyclic::CyclicError;
use quadric_topology::input::{parse_input, parse_partition_list, InputError};
use quadric_topology::manifold_homology::{EngineOptions, HomologyError, Space, DEFAULT_MAX_N};
use quadric_topology::report::{self, render, Format};
use quadric_topology::Configuration;

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "qtopo", version, about = "Exact topology of generic intersections of quadrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Refuse configurations with more coordinates than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "ZC")]
    Zc,
    #[value(name = "Zplus")]
    Zplus,
}

#[derive(Args)]
struct Source {
    /// Comma separated cyclic partition, e.g. 1,1,1,1,1.
    #[arg(long, conflicts_with = "config")]
    partition: Option<String>,
    /// JSON input document; `-` reads standard input.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Distinguished coordinate, 1-based.
    #[arg(long)]
    distinguished: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide weak hyperbolicity and report a witness.
    Check(Source),
    /// List the faces of the dual complex.
    DualComplex(Source),
    /// Integral homology with its splitting ledger.
    Homology {
        #[command(flatten)]
        source: Source,
        /// Spaces to compute; repeat for several (default: all).
        #[arg(long, value_enum)]
        space: Vec<SpaceArg>,
    },
    /// Normal form and diffeomorphism type for k = 2.
    Classify(Source),
    /// Open books with binding at the distinguished coordinate.
    OpenBook(Source),
    /// Run the oracle battery on a family or on one input.
    CrossValidate {
        #[command(flatten)]
        source: Source,
        /// Family such as "partitions n<=9".
        #[arg(long)]
        family: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Self {
        let code = match e {
            HomologyError::NotWeaklyHyperbolic { .. } => EXIT_INVALID,
            HomologyError::TooManyCoordinates { .. } => EXIT_CAP,
            HomologyError::ThreadPool(_) => EXIT_PARSE,
        };
        Failure::new(code, e)
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let code = match e {
            InputError::Cyclic(CyclicError::TooManyCoordinates { .. }) => EXIT_CAP,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e)
    }
}

fn load(source: &Source) -> Result<Configuration, Failure> {
    let cfg = match (&source.partition, &source.config) {
        (Some(p), None) => parse_partition_list(p)?.realize(),
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::new(EXIT_PARSE, e))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?
            };
            parse_input(&text)?.config
        }
        _ => return Err(Failure::new(EXIT_PARSE, "give exactly one of --partition or --config")),
    };
    match source.distinguished {
        None => Ok(cfg),
        Some(d) if d >= 1 && d <= cfg.n() => cfg.with_distinguished(d - 1).map_err(|e| Failure::new(EXIT_PARSE, e)),
        Some(d) => Err(Failure::new(EXIT_PARSE, format!("--distinguished {d} out of range 1..={}", cfg.n()))),
    }
}

fn capped(cfg: &Configuration, opts: &EngineOptions) -> Result<(), Failure> {
    if cfg.n() > opts.max_n {
        return Err(HomologyError::TooManyCoordinates {
            n: cfg.n(),
            cap: opts.max_n,
        }
        .into());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let opts = EngineOptions {
        max_n: cli.max_n,
        jobs: cli.jobs,
    };
    match cli.command {
        Command::Check(source) => {
            let cfg = load(&source)?;
            capped(&cfg, &opts)?;
            let r = report::validity_report(&cfg);
            let code = if r.weakly_hyperbolic { 0 } else { EXIT_INVALID };
            Ok((render(&r, format), code))
        }
        Command::DualComplex(source) => {
            let cfg = load(&source)?;
            capped(&cfg, &opts)?;
            Ok((render(&report::dual_complex_report(&cfg)?, format), 0))
        }
        Command::Homology { source, space } => {
            let cfg = load(&source)?;
            let spaces: Vec<Space> = if space.is_empty() {
                Space::ALL.to_vec()
            } else {
                space
                    .iter()
                    .map(|s| match s {
                        SpaceArg::Z => Space::Z,
                        SpaceArg::Zc => Space::ZC,
                        SpaceArg::Zplus => Space::Zplus,
                    })
                    .collect()
            };
            Ok((render(&report::homology_report(&cfg, &spaces, &opts)?, format), 0))
        }
        Command::Classify(source) => {
            let cfg = load(&source)?;
            capped(&cfg, &opts)?;
            let r = report::classify_report(&cfg).map_err(|e| match e {
                CyclicError::TooManyCoordinates { .. } => Failure::new(EXIT_CAP, e),
                _ => Failure::new(EXIT_INVALID, e),
            })?;
            Ok((render(&r, format), 0))
        }
        Command::OpenBook(source) => {
            let cfg = load(&source)?;
            capped(&cfg, &opts)?;
            let validity = report::validity_report(&cfg);
            if !validity.weakly_hyperbolic {
                return Ok((render(&validity, format), EXIT_INVALID));
            }
            let i = cfg.distinguished();
            let r = report::open_book_report(&cfg, i, &opts)?;
            let failed = [&r.real, &r.complex]
                .iter()
                .filter_map(|s| s.book.as_ref())
                .any(|b| !b.checks.passed());
            Ok((render(&r, format), if failed { EXIT_MISMATCH } else { 0 }))
        }
        Command::CrossValidate { source, family } => {
            let battery = match family {
                Some(text) => {
                    if source.partition.is_some() || source.config.is_some() {
                        return Err(Failure::new(EXIT_PARSE, "--family excludes --partition and --config"));
                    }
                    let family = Family::parse(&text)
                        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("unknown family {text:?}")))?;
                    run_family(family, &opts)?
                }
                None => run_configuration(&load(&source)?, &opts)?,
            };
            let code = if battery.passed() { 0 } else { EXIT_MISMATCH };
            Ok((render(&battery, format), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
