use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use postsel::analytic::{GridSize, Quantity};
use postsel::sweep::{cmd_figure, cmd_point, cmd_sweep, cmd_validate, CsvTable, RunConfig};
use postsel::Error;

const EXIT_CONFIG: u8 = 1;
const EXIT_VALIDATION: u8 = 3;

#[derive(Parser)]
#[command(name = "postsel", version, about = "Postselected measurement on single-mode fields")]
struct Cli {
    /// Worker threads for grid evaluation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full observable report for one parameter point.
    Point {
        #[arg(long)]
        config: PathBuf,
        /// Override a config key, e.g. `--set theta=7pi/9`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One- or two-axis parameter grid.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a figure panel (fig1a … fig9d).
    Figure {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every closed form with the Fock-space pipeline.
    Validate {
        #[arg(long, default_value = "small")]
        grid: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn emit(table: &CsvTable, out: Option<&Path>) -> ExitCode {
    let written = match out {
        Some(path) => std::fs::File::create(path).and_then(|f| table.write_to(std::io::BufWriter::new(f))),
        None => table.write_to(std::io::stdout().lock()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(config: &Path, set: &[String]) -> Result<RunConfig, Error> {
    let text = std::fs::read_to_string(config)
        .map_err(|e| Error::ConfigParse { field: config.display().to_string(), reason: e.to_string() })?;
    let mut rc = RunConfig::parse(&text)?;
    rc.apply_overrides(set)?;
    rc.pointer.validate()?;
    Ok(rc)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    }
    match cli.cmd {
        Cmd::Point { config, set, out } => match load(&config, &set).and_then(|rc| cmd_point(&rc)) {
            Ok(t) => emit(&t, out.as_deref()),
            Err(e) => fail(&e),
        },
        Cmd::Sweep { config, set, out } => match load(&config, &set).and_then(|rc| cmd_sweep(&rc)) {
            Ok(t) => emit(&t, out.as_deref()),
            Err(e) => fail(&e),
        },
        Cmd::Figure { preset, out } => match cmd_figure(&preset) {
            Ok(t) => emit(&t, out.as_deref()),
            Err(e) => fail(&e),
        },
        Cmd::Validate { grid, out, inject_fault } => {
            let size: GridSize = match grid.parse() {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let fault = match inject_fault.as_deref().map(str::parse::<Quantity>).transpose() {
                Ok(f) => f,
                Err(e) => return fail(&e),
            };
            match cmd_validate(size, &out, fault) {
                Ok((summary, paths)) => {
                    eprintln!(
                        "{} closed-form checks: {} match, {} typo_suspected, {} fail",
                        summary.total(),
                        summary.matched,
                        summary.typo_suspected,
                        summary.failed
                    );
                    for p in &paths {
                        eprintln!("wrote {}", p.display());
                    }
                    if summary.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_VALIDATION)
                    }
                }
                Err(e) => {
                    eprintln!("error: writing report: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
