//! Command line front end: argument types, subcommands and exit codes.

pub mod commands;
pub mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use desitter::C64;

use output::{Format, Table};

/// Default seed of the acceptance run.
pub const DEFAULT_SEED: u64 = 20240521;

#[derive(Debug, Parser)]
#[command(
    name = "desitter",
    version,
    about = "Spherical functions and kernels on de Sitter space"
)]
pub struct Cli {
    /// Tolerance for the `--verify` cross checks.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    /// Output format; tables default to csv, `classify` to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Add a column comparing each row with an independent evaluation.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate 2F1(a, b; c; z) and report the evaluation route.
    Eval2f1 {
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        a: C64,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        b: C64,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        c: C64,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        z: C64,
    },
    /// Spherical function on a grid of rapidities, or its boundary values.
    Spherical {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        lambda: C64,
        #[command(flatten)]
        grid: GridArgs,
        /// Evaluate along the compact direction, at exp(ith).
        #[arg(long, conflicts_with = "boundary")]
        imaginary: bool,
        /// Boundary value D+ or D- at y = sinh(t) e0 + cosh(t) e1.
        #[arg(long, value_enum)]
        boundary: Option<SideArg>,
    },
    /// Kernel Q_lambda(z, w) at two complex points.
    Kernel {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        lambda: C64,
        /// Comma separated complex coordinates z0,...,zd.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Comma separated complex coordinates w0,...,wd.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Jump D+ - D- at x = e1 along a family of points y(r).
    Jump {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        lambda: C64,
        /// Where y(r) lies relative to e1.
        #[arg(long, value_enum, default_value_t = RegionArg::Future)]
        region: RegionArg,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Whether the jump is supported on the light cone, for each (d, lambda).
    HuygensScan {
        /// Comma separated dimensions.
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        /// Comma separated spectral parameters.
        #[arg(long, value_delimiter = ',', value_parser = parse_c64, allow_hyphen_values = true, required = true)]
        lambda: Vec<C64>,
    },
    /// Diagonal entries of the matrix spherical function of SL(2,C).
    MatrixSpherical {
        #[arg(long)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true)]
        lambda: C64,
        #[command(flatten)]
        grid: GridArgs,
        /// Nodes per Euler angle of the SU(2) quadrature used by --verify.
        #[arg(long, default_value_t = 24)]
        quadrature: usize,
    },
    /// Causal class of (x, y) and a wedge separating isometry if spacelike.
    Classify {
        /// Comma separated real coordinates x0,...,xd.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Comma separated real coordinates y0,...,yd.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// The d = 1 model for an atomic spectral measure.
    D1Demo {
        /// Mass of the symmetric two atom measure (delta_m + delta_-m)/2.
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// Explicit atoms p:w,p:w,... instead of the two atom measure.
        #[arg(long, allow_hyphen_values = true)]
        atoms: Option<String>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Run the acceptance criteria.
    Verify {
        /// Comma separated criterion ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Future,
    Past,
    Spacelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

/// A one dimensional evaluation grid.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub start: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub stop: f64,
    #[arg(long, default_value_t = 11)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Scale::Linear)]
    pub scale: Scale,
}

impl GridArgs {
    /// Grid points from `start` to `stop` inclusive.
    pub fn points(&self) -> Result<Vec<f64>, Failure> {
        let (a, b, n) = (self.start, self.stop, self.count);
        if !a.is_finite() || !b.is_finite() {
            return Err(Failure::Usage("grid bounds must be finite".into()));
        }
        if n == 0 {
            return Err(Failure::Usage("grid needs --count >= 1".into()));
        }
        if n == 1 {
            return Ok(vec![a]);
        }
        if !(b > a) {
            return Err(Failure::Usage("grid needs --stop > --start".into()));
        }
        let frac = |k: usize| k as f64 / (n - 1) as f64;
        match self.scale {
            Scale::Linear => Ok((0..n).map(|k| a + (b - a) * frac(k)).collect()),
            Scale::Log => {
                if !(a > 0.0) {
                    return Err(Failure::Usage("log grid needs --start > 0".into()));
                }
                Ok((0..n).map(|k| a * (b / a).powf(frac(k))).collect())
            }
        }
    }
}

/// Reasons for a nonzero exit.
#[derive(Debug)]
pub enum Failure {
    /// Malformed arguments, exit code 2.
    Usage(String),
    /// Parameters outside the domain of the requested function, exit code 3.
    Domain(String),
    /// A cross check exceeded its tolerance, exit code 4.
    Consistency(String),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Consistency(_) => 4,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => format!("usage error: {m}"),
            Failure::Domain(m) => format!("domain error: {m}"),
            Failure::Consistency(m) => format!("consistency check failed: {m}"),
            Failure::Io(e) => format!("i/o error: {e}"),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<desitter::Error> for Failure {
    fn from(e: desitter::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// A table plus the number of rows whose cross check failed.
#[derive(Debug)]
pub struct Report {
    pub table: Table,
    pub inconsistent: usize,
}

/// `a`, `a+bi`, `a-bi`, `bi` or `i`.
pub fn parse_c64(s: &str) -> Result<C64, String> {
    let t = s.trim();
    t.parse::<C64>().map_err(|_| format!("invalid complex number '{s}'"))
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')'])
        .split(',')
        .map(str::trim)
}

/// Comma separated real coordinates.
pub fn parse_real_point(s: &str) -> Result<Vec<f64>, Failure> {
    split_list(s)
        .map(|x| {
            x.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("invalid coordinate '{x}'")))
        })
        .collect()
}

/// Comma separated complex coordinates.
pub fn parse_complex_point(s: &str) -> Result<Vec<C64>, Failure> {
    split_list(s).map(|x| parse_c64(x).map_err(Failure::Usage)).collect()
}

/// Parses `args`, runs the command and writes to `out` and `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match commands::execute(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message());
            f.exit_code()
        }
    }
}

/// Entry point used by the binary.
pub fn main_exit() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
