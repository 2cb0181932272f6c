//! Command-line front end: straighten, enumerate, verify, paper-examples.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::driver::{straighten, Mode, StraightenOptions};
use crate::error::Error;
use crate::golden::{replay, GOLDEN};
use crate::group_oracle::{basis_suite, point_batch, GroupPoint, SuiteConfig};
use crate::scalar::{CoeffDomain, Rational, Scalar};
use crate::tableaux::{enumerate_gl_standard, enumerate_on_standard, Partition, Tableau};
use crate::with_scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "orthostraight", version, about = "Bideterminant straightening for GL(n), O(n) and GO(n)")]
pub struct Cli {
    #[command(flatten)]
    pub job: JobArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct JobArgs {
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// gl, on or go
    #[arg(long, global = true, default_value = "on")]
    pub mode: String,
    /// q, zhalf or f<p>
    #[arg(long, global = true, default_value = "q")]
    pub coeff: String,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Number of group points for evaluation checks (0 disables them).
    #[arg(long, global = true, default_value_t = 0)]
    pub points: usize,
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    #[arg(long, global = true)]
    pub trace: bool,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Straighten [S:T] and print the certificate.
    Straighten {
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// File whose first two non-empty lines are S and T.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// List the standard tableaux of a shape.
    Enumerate {
        /// Row lengths, e.g. `2,1`.
        #[arg(long)]
        shape: String,
    },
    /// Certify the standard basis up to a degree.
    Verify {
        #[arg(long)]
        degree: usize,
    },
    /// Replay the worked examples against their fixtures.
    PaperExamples,
}

/// Validated run settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub n: usize,
    pub mode: Mode,
    pub coeff: CoeffDomain,
    pub seed: u64,
    pub points: usize,
    pub max_terms: Option<usize>,
    pub trace: bool,
}

impl JobConfig {
    pub fn from_args(a: &JobArgs) -> Result<JobConfig, Error> {
        let mode: Mode = a.mode.parse()?;
        let coeff: CoeffDomain = a.coeff.parse()?;
        if mode != Mode::Gl && a.n < 3 {
            return Err(Error::InvalidDimension(a.n, 3));
        }
        if a.n == 0 {
            return Err(Error::InvalidDimension(0, 1));
        }
        Ok(JobConfig {
            n: a.n,
            mode,
            coeff,
            seed: a.seed,
            points: a.points,
            max_terms: a.max_terms,
            trace: a.trace,
        })
    }
}

/// What a run produced: exit code, main output, diagnostics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, stderr: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Outcome {
        Outcome { code, stdout, stderr }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Domain(_) | Error::InvalidDimension(..) | Error::Coefficient(_) => EXIT_CONFIG,
        Error::CapExceeded { .. } | Error::FuelExhausted(_) => EXIT_CAP,
        Error::NotOnGroup(_) | Error::InductionViolation(_) | Error::Seeding(_) => EXIT_VERIFY,
    }
}

fn from_error(e: Error) -> Outcome {
    Outcome::fail(exit_code(&e), String::new(), format!("error: {e}\n"))
}

/// Parse arguments and run; never exits the process.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text, String::new()) } else { Outcome::fail(code, String::new(), text) };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = match JobConfig::from_args(&cli.job) {
        Ok(c) => c,
        Err(e) => return from_error(e),
    };
    let out = match &cli.command {
        Command::Straighten { left, right, file } => match read_pair(left, right, file) {
            Ok((s, t)) => cmd_straighten(&cfg, &s, &t),
            Err(e) => from_error(e),
        },
        Command::Enumerate { shape } => cmd_enumerate(&cfg, shape),
        Command::Verify { degree } => cmd_verify(&cfg, *degree),
        Command::PaperExamples => cmd_paper_examples(&cfg),
    };
    match (&cli.job.out, out.code) {
        (Some(path), _) if !out.stdout.is_empty() => match std::fs::write(path, &out.stdout) {
            Ok(()) => Outcome { stdout: String::new(), ..out },
            Err(e) => Outcome::fail(EXIT_CONFIG, String::new(), format!("error: writing {}: {e}\n", path.display())),
        },
        _ => out,
    }
}

fn read_pair(
    left: &Option<String>,
    right: &Option<String>,
    file: &Option<std::path::PathBuf>,
) -> Result<(String, String), Error> {
    match (left, right, file) {
        (Some(l), Some(r), None) => Ok((l.clone(), r.clone())),
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            match (lines.next(), lines.next()) {
                (Some(l), Some(r)) => Ok((l.into(), r.into())),
                _ => Err(Error::Parse("input file needs two lines: left and right tableau".into())),
            }
        }
        _ => Err(Error::Parse("give either --left and --right, or --file".into())),
    }
}

pub fn cmd_straighten(cfg: &JobConfig, left: &str, right: &str) -> Outcome {
    let parsed = left.parse::<Tableau>().and_then(|s| Ok((s, right.parse::<Tableau>()?)));
    let (s, t) = match parsed {
        Ok(p) => p,
        Err(e) => return from_error(e),
    };
    let mut opts = StraightenOptions::new(cfg.mode, cfg.n);
    opts.max_terms = cfg.max_terms;
    opts.trace = cfg.trace;
    with_scalar!(cfg.coeff, C => straighten_in::<C>(cfg, &opts, &s, &t))
}

fn straighten_in<C: Scalar>(cfg: &JobConfig, opts: &StraightenOptions, s: &Tableau, t: &Tableau) -> Outcome {
    let res = match straighten::<C>(s, t, opts) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let mut err = String::new();
    for line in &res.trace {
        let _ = writeln!(err, "{line}");
    }
    let cert = res.result.certificate();
    if cfg.points > 0 && cfg.mode != Mode::Gl {
        let mut residual = res.result.clone();
        let (sign, ss, tt) = match crate::combination::sort_columns(s, t) {
            Ok(x) => x,
            Err(e) => return from_error(e),
        };
        residual.add(crate::combination::TermKey::new(ss, tt, 0), C::from_i64(-(sign as i64)));
        let points: Vec<GroupPoint<C>> = match point_batch(cfg.n, cfg.mode, cfg.points, cfg.seed, 3) {
            Ok(p) => p.iter().filter_map(|p| p.reduce::<C>()).collect(),
            Err(e) => return from_error(e),
        };
        let zero = points.iter().filter(|p| residual.evaluate(&p.matrix).is_zero()).count();
        let _ = writeln!(err, "residual zero at {zero}/{} points", points.len());
        if zero != points.len() {
            return Outcome::fail(EXIT_VERIFY, cert, err);
        }
    }
    Outcome::ok(cert, err)
}

/// Parse `2,1` (or `2 1`) into a partition.
pub fn parse_shape(text: &str) -> Result<Partition, Error> {
    let parts = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?} in shape"))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}

pub fn cmd_enumerate(cfg: &JobConfig, shape: &str) -> Outcome {
    let shape = match parse_shape(shape) {
        Ok(s) => s,
        Err(e) => return from_error(e),
    };
    let conj = shape.conjugate();
    let mut out = String::new();
    let mut err = String::new();
    let list = match cfg.mode {
        Mode::Gl => {
            if shape.len() > cfg.n {
                let _ = writeln!(err, "note: shape has {} rows > n={}", shape.len(), cfg.n);
            }
            enumerate_gl_standard(&shape, cfg.n)
        }
        Mode::On | Mode::Go => {
            let colsum: usize = conj.parts().iter().take(2).sum();
            if colsum > cfg.n {
                let _ = writeln!(err, "note: column condition fails: first two columns have {colsum} > n={} cells", cfg.n);
            }
            enumerate_on_standard(&shape, cfg.n)
        }
    };
    for t in &list {
        let _ = writeln!(out, "{t}");
    }
    let _ = writeln!(out, "count={}", list.len());
    Outcome::ok(out, err)
}

pub fn cmd_verify(cfg: &JobConfig, degree: usize) -> Outcome {
    if cfg.mode == Mode::Gl {
        return from_error(Error::Parse("verify supports modes on and go".into()));
    }
    let mut suite = SuiteConfig::new(cfg.n, degree, cfg.mode);
    suite.seed = cfg.seed;
    if cfg.points > 0 {
        suite.num_points = Some(cfg.points);
    }
    if let Some(cap) = cfg.max_terms {
        suite.cap = cap;
    }
    let report = with_scalar!(cfg.coeff, C => basis_suite::<C>(&suite));
    match report {
        Ok(r) => {
            let code = if r.pass() { EXIT_OK } else { EXIT_VERIFY };
            Outcome::fail(code, r.to_string(), String::new())
        }
        Err(e @ Error::CapExceeded { .. }) => {
            Outcome::fail(EXIT_CAP, String::new(), format!("refused: {e}\n"))
        }
        Err(e) => from_error(e),
    }
}

pub fn cmd_paper_examples(cfg: &JobConfig) -> Outcome {
    let mut out = String::new();
    let mut failed = false;
    for g in &GOLDEN {
        let points: Option<Vec<GroupPoint<Rational>>> = if cfg.points > 0 {
            match point_batch(g.n, Mode::On, cfg.points, cfg.seed, 3) {
                Ok(p) => Some(p),
                Err(e) => return from_error(e),
            }
        } else {
            None
        };
        let r = match replay(g, points.as_deref()) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        for line in &r.diff {
            let _ = writeln!(out, "{}: diff {line}", g.name);
        }
        if let Some(h) = r.identity_holds {
            let _ = writeln!(out, "{}: identity {} at {} points", g.name, if h { "holds" } else { "FAILS" }, cfg.points);
        }
        if let Some(h) = r.printed_holds {
            let _ = writeln!(out, "{}: display as printed {}", g.name, if h { "holds" } else { "does not hold" });
        }
        for c in g.corrections {
            let _ = writeln!(out, "{}: correction: {c}", g.name);
        }
        failed |= !r.pass();
        let _ = writeln!(out, "{} n={} {}", g.name, g.n, if r.pass() { "PASS" } else { "FAIL" });
    }
    Outcome::fail(if failed { EXIT_VERIFY } else { EXIT_OK }, out, String::new())
}
