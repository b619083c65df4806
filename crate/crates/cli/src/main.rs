use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conclab::representations::Representation;
use conclab::s_calculus::SConstraintSystem;
use conclab_cli::source::{inline_or_file, load_table, parse_batch_line, resolve, KnotSource};
use conclab_cli::{commands, suite, CliError, Report, Settings, DEFAULT_RESOLUTION, DEFAULT_SEARCH_BOUND, DEFAULT_SEED};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "conclab", version, about = "Exact concordance invariants of knots and their Bing doubles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit one compact JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Clone)]
struct Source {
    /// Knot from the table (CONCLAB_TABLE overrides the bundled one).
    #[arg(long, group = "src")]
    name: Option<String>,
    /// JSON file holding {"seifert_matrix": [[...]]} or a bare matrix.
    #[arg(long, group = "src")]
    matrix: Option<PathBuf>,
    /// Braid word whose closure is the knot, e.g. "1 -2 1 -2".
    #[arg(long, group = "src")]
    braid: Option<String>,
    /// File of JSON lines ("-" for stdin), each {"name"}, {"seifert_matrix"} or {"braid"}; output is one JSON line each.
    #[arg(long, group = "src")]
    batch: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scenario {
    Whitehead,
}

#[derive(Subcommand)]
enum Cmd {
    /// Alexander polynomial, signatures, signature integral, Arf, Fox-Milnor and slice verdict.
    Invariants {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: u32,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
    },
    /// Bing double boundary forms and the obstruction panorama for B(K).
    Bing {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: u32,
    },
    /// Run every exact identity check; exit 1 if any fails.
    VerifyPaper {
        /// Additional random Seifert matrices to test.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Module checks for a knot's representation and its hat, or for a representation file.
    RepCheck {
        #[command(flatten)]
        src: Source,
        /// JSON representation {dim, projectors, action, form}.
        #[arg(long, conflicts_with = "src")]
        rep: Option<PathBuf>,
    },
    /// Solve an s-invariant constraint system.
    SCalc {
        /// JSON system {links, constraints}.
        #[arg(long, required_unless_present = "scenario")]
        system: Option<PathBuf>,
        #[arg(long, conflicts_with = "system")]
        scenario: Option<Scenario>,
        /// Extra facts for a scenario, as LINK=VALUE.
        #[arg(long)]
        fact: Vec<String>,
    },
    /// Braid statistics, positive-diagram s, slice-Bennequin bound and Seifert matrix.
    ParseBraid {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Thurston-Bennequin number of a grid diagram "n; X=[...]; O=[...]" (or JSON, or a file).
    TbGrid {
        #[arg(long)]
        grid: String,
        /// Use the mirror image.
        #[arg(long)]
        mirror: bool,
    },
}

fn source_of(src: &Source) -> Option<KnotSource> {
    if let Some(n) = &src.name {
        Some(KnotSource::Name(n.clone()))
    } else if let Some(p) = &src.matrix {
        Some(KnotSource::Matrix(p.clone()))
    } else {
        src.braid.as_ref().map(|b| KnotSource::Braid(b.clone()))
    }
}

type KnotCommand = fn(&str, &conclab::SeifertMatrix, &Settings) -> Result<Report, CliError>;

fn run_knot(src: &KnotSource, f: KnotCommand, cfg: &Settings) -> Result<Report, CliError> {
    let (name, s) = resolve(src, &load_table)?;
    f(&name, &s, cfg)
}

/// Evaluates every line in parallel and prints results in input order.
fn run_batch(path: &str, f: KnotCommand, cfg: &Settings) -> u8 {
    let lines: Vec<String> = if path == "-" {
        std::io::stdin().lock().lines().map_while(Result::ok).collect()
    } else {
        match std::fs::read_to_string(path) {
            Ok(t) => t.lines().map(str::to_string).collect(),
            Err(e) => {
                eprintln!("error: {path}: {e}");
                return conclab_cli::EXIT_PARSE;
            }
        }
    };
    let results: Vec<Result<Report, CliError>> = lines
        .par_iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_batch_line(l).and_then(|src| run_knot(&src, f, cfg)))
        .collect();
    let mut out = std::io::stdout().lock();
    let mut code = 0;
    for r in results {
        let (text, c) = match r {
            Ok(rep) => (rep.render(true), rep.exit_code()),
            Err(e) => (e.to_json().to_string(), e.code),
        };
        let _ = writeln!(out, "{text}");
        code = code.max(c);
    }
    code
}

fn knot_command(src: &Source, f: KnotCommand, cfg: &Settings) -> Result<Option<Report>, CliError> {
    if let Some(b) = &src.batch {
        let code = run_batch(b, f, cfg);
        return if code == 0 { Ok(None) } else { Err(CliError { code, message: String::new() }) };
    }
    let s = source_of(src).ok_or_else(|| CliError::parse("one of --name, --matrix, --braid or --batch is required"))?;
    run_knot(&s, f, cfg).map(Some)
}

fn read_json<T: serde::de::DeserializeOwned>(p: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(p).map_err(|e| CliError::parse(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(CliError::parse)
}

fn run(cli: &Cli) -> Result<Option<Report>, CliError> {
    let base = Settings { seed: cli.seed, ..Settings::default() };
    match &cli.cmd {
        Cmd::Invariants { src, search_bound, resolution } => {
            let cfg = Settings { search_bound: *search_bound, resolution: *resolution, ..base };
            knot_command(src, commands::invariants, &cfg)
        }
        Cmd::Bing { src, search_bound } => {
            let cfg = Settings { search_bound: *search_bound, ..base };
            knot_command(src, commands::bing, &cfg)
        }
        Cmd::VerifyPaper { random } => Ok(Some(suite::verify_paper(&load_table()?, *random, cli.seed))),
        Cmd::RepCheck { src, rep } => match rep {
            Some(p) => commands::rep_check_file(&read_json::<Representation>(p)?).map(Some),
            None => {
                let s = source_of(src).ok_or_else(|| CliError::parse("a knot source or --rep is required"))?;
                let (name, m) = resolve(&s, &load_table)?;
                commands::rep_check(&name, &m).map(Some)
            }
        },
        Cmd::SCalc { system, scenario, fact } => match (system, scenario) {
            (Some(p), _) => commands::s_calc_system(&read_json::<SConstraintSystem>(p)?).map(Some),
            (None, Some(Scenario::Whitehead)) => {
                let facts = fact.iter().map(|f| commands::parse_fact(f)).collect::<Result<Vec<_>, _>>()?;
                commands::s_calc_scenario(&facts).map(Some)
            }
            (None, None) => Err(CliError::parse("--system or --scenario is required")),
        },
        Cmd::ParseBraid { braid, strands } => commands::parse_braid_cmd(&inline_or_file(braid)?, *strands).map(Some),
        Cmd::TbGrid { grid, mirror } => {
            let g = commands::parse_grid(&inline_or_file(grid)?)?;
            commands::tb_grid_cmd(&if *mirror { g.mirror() } else { g }).map(Some)
        }
    }
}

/// Prints a line, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(r)) => {
            emit(&r.render(cli.json));
            ExitCode::from(r.exit_code())
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                if cli.json {
                    emit(&e.to_json().to_string());
                } else {
                    eprintln!("error: {e}");
                }
            }
            ExitCode::from(e.code)
        }
    }
}
