//! Command-line front end for the `halflib` crate.
//!
//! [`run`] executes one invocation in process and returns the exit code and
//! the rendered output, so tests never need to spawn the binary.

mod commands;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};

pub use report::{Report, Section, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Approx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "halflib", version, about = "Exact computations in the half-liberated real sphere algebra")]
pub struct Cli {
    /// Number of generators
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Truncation degree for ideal computations
    #[arg(long, global = true, default_value_t = 5)]
    pub degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Tolerance in approximate mode
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eps: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Canonical crossed-product form and its noncommutative lift
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide equality of two expressions in the algebra
    Eq {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Split into even and odd components
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply the grading automorphism
    Nu {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply the gamma automorphism
    Gamma {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Map a projective expression into the even subalgebra
    Phi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Pull an even element back to a projective expression
    PhiInv {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate the 2x2 representation at a sphere point
    Theta {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate the character at a real point
    Phirep {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Trace of the 2x2 representation
    Char {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Classify a sphere point and decompose its representation
    Classify {
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Decide unitary equivalence of two representations
    Orbit {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Truncated two-sided ideal span of generators
    Span {
        #[arg(required = true)]
        gens: Vec<String>,
        /// Use the literal word span instead of the saturated span
        #[arg(long)]
        words: bool,
    },
    /// Ideal membership of an element
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Check gradedness and pass to the even ideal, or back with --even
    Graded {
        #[arg(required = true)]
        gens: Vec<String>,
        /// Treat the generators as generators of an even ideal
        #[arg(long)]
        even: bool,
    },
    /// Zero sets of an ideal among sample points
    Pair {
        #[arg(required = true)]
        gens: Vec<String>,
        /// Sample point, repeatable; a seeded sample is used when absent
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Size of each class in the seeded sample
        #[arg(long, default_value_t = 6)]
        samples: usize,
    },
    /// Truncated vanishing ideal of exact points
    Vanish {
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Check the projector relations in the model
    Projcheck,
    /// Run verification suites
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if cli.n == 0 {
        return usage("--n must be at least 1");
    }
    if !(cli.eps > 0.0 && cli.eps.is_finite()) {
        return usage("--eps must be positive");
    }
    match commands::execute(&cli) {
        Ok((code, report)) => {
            let stdout = match cli.format {
                Format::Text => report.text(),
                Format::Structured => report.structured(),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = match e {
                halflib::Error::Parse { .. } | halflib::Error::MixedAlphabets => EXIT_USAGE,
                _ => EXIT_PRECONDITION,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {}\n", e) }
        }
    }
}

fn usage(msg: &str) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", msg) }
}
