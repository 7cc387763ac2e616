//! `unimod`: even unimodular lattices, isometries and knot indices.

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use unimod_cli::commands::{self, CliResult, KnotSource, Outcome, EXIT_OK};
use unimod_cli::corpus;
use unimod_cli::report::to_canonical;
use unimod_core::arith::{DEFAULT_RHO_ROUNDS, DEFAULT_TRIAL_LIMIT};
use unimod_core::obstruction::{FactorLimits, DEFAULT_RATIONAL_BOUND};

/// Writes a line to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "unimod", version, about = "Isometries of even unimodular lattices and knot indices")]
struct Cli {
    /// Print the JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; the exit status carries the verdict.
    #[arg(long, global = true)]
    quiet: bool,
    /// Trial-division bound when factoring resultants.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIAL_LIMIT)]
    trial_limit: u64,
    /// Pollard-Brent iterations per attempt when factoring resultants.
    #[arg(long, global = true, default_value_t = DEFAULT_RHO_ROUNDS)]
    rho_rounds: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether L_{r,s} has a semi-simple isometry with characteristic polynomial F.
    Decide {
        #[arg(long)]
        poly: String,
        /// Signature `R,S`.
        #[arg(long)]
        signature: String,
    },
    /// As `decide`, with a prescribed Milnor index.
    Milnor {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        signature: String,
        /// Negative pairs per factor, `i:N,...` with 1-based factor indices.
        #[arg(long)]
        profile: String,
    },
    /// The obstruction group and its audit.
    Sh {
        #[arg(long)]
        poly: String,
        /// Also run the bounded search for the rational group.
        #[arg(long)]
        rational: bool,
        /// Prime bound for the rational group.
        #[arg(long, default_value_t = DEFAULT_RATIONAL_BOUND)]
        bound: u64,
    },
    /// Knot indices or Milnor indices for an Alexander polynomial.
    Knot(KnotArgs),
    /// Resultant of two polynomials and its prime divisors.
    Resultant {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Factorization modulo a prime.
    #[command(name = "factors-modp")]
    FactorsModp {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
    },
    /// Replay the fixture corpus.
    Selftest,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["torus", "poly"])))]
#[command(group(ArgGroup::new("mode").required(true).args(["indices", "milnor"])))]
struct KnotArgs {
    /// Torus knot `U,V`.
    #[arg(long)]
    torus: Option<String>,
    /// Alexander polynomial.
    #[arg(long)]
    poly: Option<String>,
    /// List realizable knot indices.
    #[arg(long)]
    indices: bool,
    /// Negative pairs per factor, `i:N,...`.
    #[arg(long)]
    milnor: Option<String>,
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let limits = FactorLimits {
        trial_limit: cli.trial_limit,
        rho_rounds: cli.rho_rounds,
    };
    match &cli.command {
        Command::Decide { poly, signature } => commands::decide(poly, signature, limits),
        Command::Milnor {
            poly,
            signature,
            profile,
        } => commands::milnor(poly, signature, profile, limits),
        Command::Sh { poly, rational, bound } => commands::sh(poly, *rational, *bound, limits),
        Command::Knot(k) => {
            let source = match (&k.torus, &k.poly) {
                (Some(t), _) => KnotSource::Torus(t.clone()),
                (None, Some(p)) => KnotSource::Poly(p.clone()),
                (None, None) => unreachable!("clap enforces a source"),
            };
            commands::knot(&source, k.milnor.as_deref())
        }
        Command::Resultant { f, g } => commands::resultant(f, g, limits),
        Command::FactorsModp { poly, prime } => commands::factors_modp(poly, *prime),
        Command::Selftest => unreachable!("handled in main"),
    }
}

fn selftest(quiet: bool) -> ExitCode {
    let results = match corpus::replay(corpus::FIXTURES) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("unimod: {e}");
            return ExitCode::from(commands::EXIT_USAGE as u8);
        }
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    if !quiet {
        for r in &results {
            if r.passed {
                out!("PASS {}", r.id);
            } else {
                out!("FAIL {}: {}", r.id, r.detail);
            }
        }
        out!("{} fixtures, {failed} failed", results.len());
    }
    ExitCode::from(u8::from(failed > 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { commands::EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if matches!(cli.command, Command::Selftest) {
        return selftest(cli.quiet);
    }
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                if cli.json {
                    out!("{}", to_canonical(&out.json));
                } else {
                    out!("{}", out.text);
                }
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("unimod: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
