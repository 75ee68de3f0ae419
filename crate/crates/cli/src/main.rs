use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use trinomial_cli::commands::{
    self, CliError, CliResult, Exit, Format, IdentityRanges, SweepOptions,
};
use trinomial_cli::report::Family;
use trinomial_core::TrinomialSpec;

#[derive(Parser)]
#[command(
    name = "trinomial",
    about = "Exact reducibility of trinomials over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Unit,
    Pk,
}

#[derive(clap::Args)]
struct TrinomialArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, allow_negative_numbers = true, value_parser = ["-1", "1"])]
    eps1: String,
    #[arg(long, allow_negative_numbers = true, value_parser = ["-1", "1"])]
    eps2: String,
}

#[derive(Subcommand)]
enum Command {
    /// Classify x^n + eps1 x^m + eps2.
    Classify(TrinomialArgs),
    /// Classify x^n + eps1 x^m + eps2 p^k.
    ClassifyPk {
        #[command(flatten)]
        t: TrinomialArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Factor a polynomial over the integers, e.g. "x^5 - x^4 + 9".
    Factor { poly: String },
    /// Discriminant of x^n + a x^m + b, closed form and via the resultant.
    #[command(allow_negative_numbers = true)]
    Discriminant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true)]
        a: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        b: BigInt,
    },
    /// Check the cyclotomic product identities over a range.
    VerifyIdentities {
        /// Largest prime for the Phi_n(x^p) identity.
        #[arg(long, default_value_t = 13)]
        p: u64,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        /// Bound on n*m for the Phi_n(x^m) expansion.
        #[arg(long, default_value_t = 120)]
        max_product: usize,
    },
    /// Classify every trinomial up to a degree and compare with factorization.
    Sweep {
        #[arg(long, value_enum, default_value_t = FamilyArg::Unit)]
        family: FamilyArg,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// Restrict the prime-power family to this prime (default 2, 3, 5).
        #[arg(long)]
        p: Option<u64>,
        /// Restrict the prime-power family to this exponent (default 2, 3).
        #[arg(long)]
        k: Option<u32>,
    },
}

fn sign_value(s: &str) -> i64 {
    s.parse().expect("validated by clap")
}

fn spec(t: &TrinomialArgs, c: u64) -> Result<TrinomialSpec, CliError> {
    let u = commands::unit_spec(t.n, t.m, sign_value(&t.eps1), sign_value(&t.eps2))?;
    Ok(TrinomialSpec::new(u.n, u.m, u.eps1, u.eps2, c)?)
}

fn dispatch(cli: &Cli) -> CliResult {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::JsonLines => Format::JsonLines,
    };
    match &cli.command {
        Command::Classify(t) => commands::run_classify(&spec(t, 1)?, format),
        Command::ClassifyPk { t, p, k } => {
            let c = commands::constant_for(Some(*p), Some(*k))?;
            commands::run_classify_pk(&spec(t, c)?, format)
        }
        Command::Factor { poly } => commands::run_factor(poly, format),
        Command::Discriminant { n, m, a, b } => commands::run_discriminant(*n, *m, a, b, format),
        Command::VerifyIdentities {
            p,
            max_n,
            max_product,
        } => commands::run_verify_identities(
            &IdentityRanges {
                max_prime: *p,
                max_n: *max_n,
                max_product: *max_product,
            },
            format,
        ),
        Command::Sweep {
            family,
            max_n,
            p,
            k,
        } => {
            let opts = SweepOptions {
                family: match family {
                    FamilyArg::Unit => Family::Unit,
                    FamilyArg::Pk => Family::PrimePower,
                },
                max_n: *max_n,
                primes: p.map_or_else(|| vec![2, 3, 5], |p| vec![p]),
                exponents: k.map_or_else(|| vec![2, 3], |k| vec![k]),
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Range(e.to_string()))?;
            pool.install(|| commands::run_sweep(&opts, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exit = match dispatch(&cli) {
        Ok((text, exit)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => exit,
                Err(e) => {
                    eprintln!("error: {e}");
                    Exit::Internal
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    };
    ExitCode::from(exit as u8)
}
