//! The `gav` command line: argument parsing, file loading and dispatch to
//! the library, with reports rendered as text or JSON.

pub mod commands;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gav_algebra::Field;
use gav_core::variety::{base_change, GavPresentation};
use thiserror::Error;

pub use report::{Report, Section, Status};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "gav", version, about = "Exact computations on generalized Asanuma varieties over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Field `p` or `p^d`: used when a file has no field line, otherwise a
    /// base change to this extension.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample count for randomized checks.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Exit 1 on a NonIsomorphic verdict.
    #[arg(long, global = true)]
    pub strict_exit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Phi1,
    Phi2,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the standing hypotheses on a presentation.
    Validate { file: PathBuf },
    /// Build and verify the maps phi1 (moves z) and phi2 (moves t).
    ExpmapConstruct {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
    },
    /// Verify the exponential-map axioms for a map file.
    ExpmapVerify {
        map: PathBuf,
        /// Presentation; defaults to the map's `presentation` line.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Certify the Derksen and Makar-Limanov invariants.
    Invariants { file: PathBuf },
    /// Associated graded presentation at a root of a_i, optionally with the
    /// homogenized maps.
    Gr {
        file: PathBuf,
        /// 1-based index i of X_i.
        #[arg(long)]
        var: usize,
        #[arg(long)]
        root: String,
        #[arg(long, value_enum)]
        phi: Option<Which>,
    },
    /// Sampled checks of the degree function and its filtration.
    FiltrationCheck {
        file: PathBuf,
        #[arg(long, requires = "root")]
        var: Option<usize>,
        #[arg(long, requires = "var")]
        root: Option<String>,
        /// Comma-separated weights of X1..Xm, Y, Z, T; not checked for
        /// admissibility.
        #[arg(long, conflicts_with_all = ["var", "root"])]
        unsafe_weights: Option<String>,
    },
    /// Root-multiplicity profiles and the non-rectangularity chain.
    ClassifyDiscriminant { file: PathBuf },
    /// Decide isomorphism of two presentations where possible.
    ClassifyCompare { a: PathBuf, b: PathBuf },
    /// Generate the family a_1 = g_j(X1)^2 over a non-trivial line.
    Family {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Line file; defaults to the built-in line over `--field` (default 2).
        #[arg(long)]
        line: Option<PathBuf>,
    },
    /// Check a line's parametrization witness.
    LineVerify { file: PathBuf },
    /// Complete an endomorphism of B to an automorphism of A.
    AutoComplete {
        map: PathBuf,
        #[arg(long)]
        presentation: Option<PathBuf>,
        /// Expected phi(alpha)/alpha.
        #[arg(long)]
        gamma: Option<String>,
    },
}

/// Exit code and the text for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let g = cli.global.clone();
    let result = match g.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| commands::dispatch(&cli.command, &g)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} workers: {e}"))),
        },
        None => commands::dispatch(&cli.command, &g),
    };
    match result {
        Ok(report) => {
            let stdout = if g.json { report.to_json() } else { report.to_text() };
            Outcome { code: report.exit_code(g.strict_exit), stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("gav: {e}\n") },
    }
}

pub(crate) fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub(crate) fn data_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Data(format!("{}: {e}", path.display()))
}

pub(crate) fn parse_field_opt(g: &GlobalOpts) -> CliResult<Option<Field>> {
    g.field
        .as_deref()
        .map(|s| gav_algebra::parse_field(s).map_err(|e| CliError::Usage(format!("--field {s}: {e}"))))
        .transpose()
}

/// Reads a presentation; `--field` fills in a missing field line or
/// base-changes to an extension of the file's field.
pub(crate) fn load_presentation(path: &Path, g: &GlobalOpts) -> CliResult<GavPresentation> {
    let field = parse_field_opt(g)?;
    let src = read_file(path)?;
    let pres = gav_core::io::parse_gav(&src, field.as_ref()).map_err(|e| data_err(path, e))?;
    match field {
        Some(f) if &f != pres.field() => {
            let base = pres.field();
            if f.characteristic() != base.characteristic() || f.degree() % base.degree() != 0 {
                return Err(data_err(
                    path,
                    format!("field {} is not an extension of {}", f.spec_string(), base.spec_string()),
                ));
            }
            base_change(&pres, f.degree() / base.degree()).map_err(|e| data_err(path, e))
        }
        _ => Ok(pres),
    }
}

/// Presentation for a map file: `--presentation`, else the path on the
/// map's `presentation` line, relative to the map file.
pub(crate) fn load_map_presentation(
    map: &Path,
    src: &str,
    explicit: Option<&Path>,
    g: &GlobalOpts,
) -> CliResult<GavPresentation> {
    if let Some(p) = explicit {
        return load_presentation(p, g);
    }
    let named = gav_core::io::map_presentation_path(src).map_err(|e| data_err(map, e))?.ok_or_else(|| {
        CliError::Usage(format!("{}: no `presentation` line; pass --presentation", map.display()))
    })?;
    let dir = map.parent().unwrap_or_else(|| Path::new("."));
    load_presentation(&dir.join(named), g)
}
