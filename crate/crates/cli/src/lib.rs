//! Command-line front end: argument parsing, field dispatch and rendering.

pub mod commands;
pub mod job;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hopfcyc::{Field, Fp, Rational};

use job::{Control, JobSpec, ModelChoice, Outcome, XiChoice};

/// Primes accepted by `--field`.
pub const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 32003, 2147483647];

#[derive(Parser, Debug)]
#[command(name = "hopfcyc", version, about = "Exact Hopf-cyclic complexes, cohomology and pairings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// `Q` or a prime from the built-in list.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Top degree reported.
    #[arg(long, global = true, default_value_t = 4)]
    pub degree: usize,
    /// Extra cover degrees used to saturate `J`.
    #[arg(long, global = true, default_value_t = 2)]
    pub buffer: usize,
    /// Recompute `J` with one more buffer degree and require the same dimensions.
    #[arg(long, global = true)]
    pub certify: bool,
    #[arg(long, global = true, value_enum, default_value_t = ModelChoice::Both)]
    pub model: ModelChoice,
    /// Disable the thread pool.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Also write the outcome as JSON.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// A modcomodule document used as coefficients.
    #[arg(long, global = true)]
    pub coefficients: Option<PathBuf>,
    #[arg(long = "xi-form", global = true, value_enum, default_value_t = XiChoice::Shifted)]
    pub xi_form: XiChoice,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Verify structures and module axioms; the built-in library when no file is given.
    Check {
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        control: Vec<Control>,
    },
    /// Build covers, quotients and coinvariants and print their dimensions.
    Build { files: Vec<PathBuf> },
    /// Cyclic cohomology dimensions per model.
    Cohomology { files: Vec<PathBuf> },
    /// Compare the bicomplex and mixed models.
    Compare { files: Vec<PathBuf> },
    /// Characteristic map through both routes.
    CharMap { pairing: PathBuf, trace: PathBuf },
    /// Cup products with traces or points.
    Pair { files: Vec<PathBuf> },
    /// Write the fixture library.
    Fixtures { dir: PathBuf },
}

impl Cli {
    pub fn job(&self) -> JobSpec {
        let o = &self.options;
        let (name, inputs, controls) = match &self.command {
            Command::Check { files, control } => ("check", files.clone(), control.clone()),
            Command::Build { files } => ("build", files.clone(), vec![]),
            Command::Cohomology { files } => ("cohomology", files.clone(), vec![]),
            Command::Compare { files } => ("compare", files.clone(), vec![]),
            Command::CharMap { pairing, trace } => ("char-map", vec![pairing.clone(), trace.clone()], vec![]),
            Command::Pair { files } => ("pair", files.clone(), vec![]),
            Command::Fixtures { dir } => ("fixtures", vec![dir.clone()], vec![]),
        };
        JobSpec {
            command: name.into(),
            inputs,
            coefficients: o.coefficients.clone(),
            controls,
            xi_form: o.xi_form,
            field: o.field.clone(),
            degree: o.degree,
            buffer: o.buffer,
            certify: o.certify,
            model: o.model,
            parallel: !o.sequential,
            output: o.output.clone(),
        }
    }
}

/// Errors that mean a computation ran and an identity failed.
pub fn is_identity_error(e: &anyhow::Error) -> bool {
    use hopfcyc::Error::*;
    matches!(
        e.downcast_ref::<hopfcyc::Error>(),
        Some(IdentityFailure(_) | AgreementFailure(_) | NotCocycle(_) | DescentFailure(_) | NotEquivariant(_) | CompatibilityFailure(_))
    )
}

fn run_in<F: Field>(job: &JobSpec) -> anyhow::Result<Outcome> {
    let sections = match job.command.as_str() {
        "check" => commands::check::<F>(job)?,
        "build" => commands::build::<F>(job)?,
        "cohomology" => commands::cohomology::<F>(job)?,
        "compare" => commands::compare::<F>(job)?,
        "char-map" => commands::char_map::<F>(job)?,
        "pair" => commands::pair::<F>(job)?,
        "fixtures" => commands::write_fixtures::<F>(&job.inputs[0])?,
        other => anyhow::bail!("unknown command {other}"),
    };
    Ok(Outcome::new(job.clone(), sections))
}

macro_rules! dispatch {
    ($job:expr, $p:expr, [$($q:literal),*]) => {
        match $p {
            $($q => run_in::<Fp<$q>>($job),)*
            _ => anyhow::bail!("field {} is not in the supported prime list {:?}", $p, PRIMES),
        }
    };
}

/// Runs a job in the field named by `job.field`.
pub fn run(job: &JobSpec) -> anyhow::Result<Outcome> {
    if job.field == "Q" {
        return run_in::<Rational>(job);
    }
    let p: u64 = job.field.parse().map_err(|_| anyhow::anyhow!("field must be Q or a prime, got {:?}", job.field))?;
    dispatch!(job, p, [2, 3, 5, 7, 11, 13, 32003, 2147483647])
}
