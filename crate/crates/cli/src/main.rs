//! `relbarg`: evaluate kernels and transforms, run verification suites and
//! print spectra.
//!
//! Exit status: 0 success, 1 verification failure, 2 configuration error,
//! 3 domain error, 4 non-convergence, 5 unparseable input.

mod commands;
mod config;
mod error;
mod grid;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{EvalFunction, Format, Kernel};

#[derive(Debug, Parser)]
#[command(name = "relbarg", version, about = "Relativistic Bargmann-type transforms on the Poincaré disk")]
pub struct Cli {
    /// key=value file supplying defaults for the flags; flags win
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Oscillator parameter c > 0 (default 1)
    #[arg(long)]
    pub c: Option<f64>,
    /// Landau level m
    #[arg(long)]
    pub m: Option<usize>,
    /// Tolerance, within [1e-12, 1e-2]
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file; stdout when absent
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// z-grid: `re,im;…`, `rect:re0,re1,n;im0,im1,n` or `polar:rmax,nr,nphi`
    #[arg(long, allow_hyphen_values = true, value_name = "SPEC")]
    pub grid: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a named function on a grid
    Eval {
        #[arg(value_enum)]
        function: EvalFunction,
        /// Basis / eigenfunction index (default 0)
        #[arg(long)]
        k: Option<usize>,
        /// Magnetic parameter; defaults to 2(γ + m)
        #[arg(long)]
        sigma: Option<f64>,
        /// ξ-grid: `x0,x1,…` or `lin:x0,x1,n`
        #[arg(long, allow_hyphen_values = true, value_name = "SPEC")]
        xi: Option<String>,
        /// Second label of the overlap, `re,im` (default 0,0)
        #[arg(long, allow_hyphen_values = true, value_name = "RE,IM")]
        w: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Transform sampled data (CSV with header xi,re,im) onto a z-grid
    Transform {
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        kernel: Option<Kernel>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a verification suite and write a JSON report
    Verify {
        /// Suite name, or `all`
        suite: String,
        #[arg(long)]
        sigma: Option<f64>,
        /// Largest basis index checked
        #[arg(long)]
        kmax: Option<usize>,
        /// Seed of the randomized suites
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Oscillator energies E_k = 2k + 2γ and Landau levels 4m(m + 2γ − 1)
    Spectrum {
        /// Largest k listed (default 3)
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("relbarg: {e}");
            ExitCode::from(e.code())
        }
    }
}
