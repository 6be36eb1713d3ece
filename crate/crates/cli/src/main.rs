use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use schur_ratio::exact::IdentityRanges;
use schur_ratio::region::sampler::{DEFAULT_CHUNK_SIZE, DEFAULT_SEED};
use schur_ratio::region::SamplerConfig;
use schur_ratio_cli::report::{render_checks, Format};
use schur_ratio_cli::{commands, emit, verify, CliError, Outcome, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Parser)]
#[command(name = "schur-ratio", version, about = "Volumes of coefficient regions of contractive polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact r_d, v_d, v_d^(0), v_d^(1), p_d^(0), p_d^(1) for d = 0..=d_max.
    Table {
        #[arg(long, default_value_t = 20)]
        d_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare r_d across the exact routes; exit 1 on disagreement.
    Ratio {
        #[arg(long)]
        d: u32,
    },
    /// Monte-Carlo estimate of v_d^(s) for all s, as JSON.
    Mc {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Worker threads (does not affect the output).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
        chunk_size: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive checks of the binomial-sum identities.
    Identities {
        #[arg(long, default_value_t = 60)]
        max_a: u64,
        #[arg(long, default_value_t = 40)]
        max_m: u64,
        #[arg(long, default_value_t = 60)]
        max_pfaff: u64,
        #[arg(long, default_value_t = 20)]
        max_convolution: u64,
        #[arg(long, default_value_t = 200)]
        max_rho: u32,
    },
    /// Relative error of the leading asymptotic term and the log-probability residuals.
    Asymptotics {
        #[arg(long, default_value_t = 20)]
        from: u32,
        #[arg(long, default_value_t = 200)]
        to: u32,
        #[arg(long, default_value_t = 128)]
        precision_bits: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coefficients of the generating function of r_d.
    Series {
        #[arg(long, default_value_t = 20)]
        terms: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every exact invariant; exit 0 only if all pass.
    Verify,
}

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    Ok(match cli.command {
        Command::Table { d_max, format, out } => (commands::cmd_table(d_max, format)?, out),
        Command::Ratio { d } => (commands::cmd_ratio(d)?, None),
        Command::Mc { d, samples, seed, threads, chunk_size, out } => {
            let cfg = SamplerConfig { d, samples, seed, chunk_size, threads };
            (commands::cmd_mc(&cfg)?, out)
        }
        Command::Identities { max_a, max_m, max_pfaff, max_convolution, max_rho } => {
            let ranges =
                IdentityRanges { max_a, max_mn: max_m, max_pfaff_m: max_pfaff, max_convolution, max_rho_d: max_rho };
            (commands::cmd_identities(&ranges)?, None)
        }
        Command::Asymptotics { from, to, precision_bits, format, out } => {
            (commands::cmd_asymptotics(from, to, precision_bits, format)?, out)
        }
        Command::Series { terms, format, out } => (commands::cmd_series(terms, format)?, out),
        Command::Verify => {
            let checks = verify::run_all();
            let passed = checks.iter().all(|c| c.passed);
            (Outcome { output: render_checks(&checks), passed }, None)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli).and_then(|(outcome, out)| {
        emit(&outcome.output, out.as_ref())?;
        Ok(outcome.passed)
    }) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
