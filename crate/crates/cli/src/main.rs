//! `qrt`: inspection and verification front end for `qrt-core`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 cutoff too small.

mod commands;
mod literals;
mod report;
mod selftest;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::{Format, Status};

pub const DEFAULT_SEED: u64 = 20240531;

#[derive(Parser, Debug)]
#[command(name = "qrt", version, about = "Quantum groups at roots of unity: exact checks")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub emit: Format,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArg {
    /// Cartan type, e.g. A2, B2, G2
    #[arg(long = "type", short = 't')]
    pub ty: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, positive roots, rho, |W| and |P/Q|
    RootInfo {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// Character of nabla(lambda)
    ///
    /// CSV columns: weight,mult
    Char {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
    },
    /// Dominant weight multiplicities, optionally with Shapovalov data
    ///
    /// CSV columns: weight,mult[,shapovalov_dim,gram_det]
    Freudenthal {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        /// Also build Delta(lambda) and report Gram determinants per weight
        #[arg(long)]
        gram: bool,
    },
    /// Decomposition of nabla(lambda) (x) nabla(mu)
    ///
    /// CSV columns: weight,mult
    Tensor {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Euler characteristic of the line bundle of weight mu
    Euler {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Drinfeld pairing of two words, or the pairing matrix of a grading
    ///
    /// CSV columns (matrix mode): plus,minus,value
    Tau {
        #[command(flatten)]
        ty: TypeArg,
        /// Word in k, e (e.g. "K[2,0] E1")
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Word in k, f
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Grading in simple-root coordinates, e.g. 1,1
        #[arg(long)]
        grading: Option<String>,
    },
    /// Serre vanishing of the pairing up to a total height
    ///
    /// CSV columns: i,j,side,vanishes
    SerreCheck {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 5)]
        max_height: i64,
    },
    /// The form kappa(v, u)
    Kappa {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// The basis element c(lambda) of the dot-invariants
    ///
    /// CSV columns: weight,coeff
    CBasis {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
    },
    /// Harish-Chandra character xi_t(c(lambda))
    XiHar {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        /// Values on fundamental weights: Laurent literals in q and z1, z2, ...
        #[arg(long = "point", allow_hyphen_values = true)]
        point: String,
    },
    /// Whether the dot orbit of a torus point has |W| elements
    Regular {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long = "point", allow_hyphen_values = true)]
        point: String,
    },
    /// Conditions (a1)-(a5) on the level
    CheckLevel {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        ell: u64,
        /// h0 values as polynomials in x = exp(2 pi i / root-order)
        #[arg(long, allow_hyphen_values = true)]
        h0: Option<String>,
        #[arg(long, default_value_t = 1)]
        root_order: u64,
    },
    /// Whether the centralizer of h0 has full rank
    Exceptional {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        h0: String,
        #[arg(long)]
        root_order: u64,
    },
    /// Whether t^ell is W-conjugate to h0
    Compatible {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        ell: u64,
        #[arg(long = "point", allow_hyphen_values = true)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        h0: String,
        #[arg(long)]
        root_order: u64,
    },
    /// Trace formula for c(lambda) against k_mu probes
    ///
    /// CSV columns: probe,trace,pairing,equal
    VerifyTheta {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        /// Probes k_mu for mu in Q^+ - Q^+ with |height| up to this bound
        #[arg(long, default_value_t = 3)]
        probe_height: i64,
    },
    /// Character-level check of the main identity
    ///
    /// CSV columns: weight,lhs,rhs,complete,verdict
    VerifyMain {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        cutoff: i64,
        /// Check only this dominant weight; exits 3 if the cutoff is too small
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Total cohomology dimension of a type A Springer fibre
    SpringerDim {
        /// Jordan type, e.g. 2,1
        #[arg(long)]
        partition: String,
        /// Cartan type; only type A is supported
        #[arg(long = "type", short = 't')]
        ty: Option<String>,
    },
    /// Runs the invariant suite
    ///
    /// CSV columns: check,passed,detail
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random cases per randomized check
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
}

pub enum Failure {
    Usage(String),
    Truncated(String),
}

impl From<qrt::Error> for Failure {
    fn from(e: qrt::Error) -> Self {
        match e {
            qrt::Error::Truncated(m) => Failure::Truncated(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<qrt::ParseError> for Failure {
    fn from(e: qrt::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(&cli.cmd) {
        Ok(rep) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(rep.render(cli.emit).as_bytes());
            match rep.status {
                Status::Ok => ExitCode::from(0),
                Status::Mismatch => ExitCode::from(1),
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Truncated(m)) => {
            eprintln!("truncated: {}", m);
            ExitCode::from(3)
        }
    }
}
