//! Command-line front end: family tables, exact evaluation, and the
//! identity verification suite.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors,
//! 3 mathematical domain errors. Rationals cross this boundary as `p/q`
//! strings only — no floating point exists anywhere in the interface.

mod families;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use apbern::exactq::GaussRational;

#[derive(Parser)]
#[command(
    name = "apbern",
    version,
    about = "Exact tables, evaluation, and identity verification for parametric \
             Apostol-Bernoulli polynomial families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a table of family members for n = 0..N
    Table(TableArgs),
    /// Evaluate one family member at an exact rational point
    Eval(EvalArgs),
    /// Run verification suites and emit a JSON verdict document
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
    Latex,
}

/// Flags that pin down one family.
#[derive(Args)]
struct FamilyArgs {
    /// Family name: bernoulli-number, bernoulli-poly,
    /// apostol-bernoulli-closed, apostol-bernoulli, param-plain, param-c,
    /// param-s, apostol-genocchi, c-closed, s-closed
    #[arg(long)]
    family: String,

    /// Kernel order v
    #[arg(long, default_value_t = 1)]
    v: u32,

    /// Kernel parameter lambda, as p/q
    #[arg(long, value_parser = parse_rational, default_value = "1", allow_hyphen_values = true)]
    lambda: GaussRational,

    /// Kernel parameter mu, as p/q
    #[arg(long, value_parser = parse_rational, default_value = "-1", allow_hyphen_values = true)]
    mu: GaussRational,

    /// U factory: one, gould-hopper, hermite-appell, hermite-appell-euler,
    /// miller-lee, miller-lee-reciprocal, trunc-exp
    #[arg(long, default_value = "one")]
    u: String,

    /// Factory parameter m (gould-hopper, miller-lee, trunc-exp)
    #[arg(long = "m-param")]
    m_param: Option<u32>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Highest member index to emit
    #[arg(long, default_value_t = 8)]
    n: usize,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Member index
    #[arg(long)]
    n: usize,

    /// Value for x, as p/q
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: Option<GaussRational>,

    /// Value for y, as p/q
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    y: Option<GaussRational>,

    /// Value for z, as p/q
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    z: Option<GaussRational>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite selector: all, intro, thm3.1..thm3.10, thm4.1..thm4.4, thm4.x,
    /// ode, raising, lowering
    #[arg(long)]
    suite: String,

    /// Highest member index swept
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,

    /// Sample seed
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Cap for secondary kernel orders (alpha/beta sweeps)
    #[arg(long, default_value_t = 2)]
    alpha: u32,

    /// Cap for the order-split delta sweep
    #[arg(long, default_value_t = 2)]
    delta: u32,

    /// Cap for derivative orders in the mixed-derivative sweep
    #[arg(long = "m-param", default_value_t = 2)]
    m_param: usize,
}

/// Parses an exact rational flag value. Rejects a zero denominator and
/// anything non-real.
fn parse_rational(text: &str) -> Result<GaussRational, String> {
    let value = GaussRational::parse(text)
        .ok_or_else(|| format!("`{text}` is not a rational p/q (zero denominators rejected)"))?;
    if !value.is_real() {
        return Err(format!("`{text}` is not a real rational"));
    }
    Ok(value)
}

/// Errors past argument parsing: usage (exit 2) or domain (exit 3).
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn report(&self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("usage error: {msg}");
                ExitCode::from(2)
            }
            CliError::Domain(msg) => {
                eprintln!("domain error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => families::cmd_table(&args),
        Command::Eval(args) => families::cmd_eval(&args),
        Command::Verify(args) => verify::cmd_verify(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}
