use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

mod commands;
mod config;

use config::{CliConfig, FileConfig, Overrides};

#[derive(Debug, Parser)]
#[command(
    name = "wreath",
    about = "Exact wreath Macdonald polynomials, Nekrasov factors and identity checks"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

/// Settings accepted by every subcommand.
#[derive(Debug, Args)]
struct GlobalArgs {
    /// TOML file with default settings.
    #[arg(long, global = true, env = "WREATH_CONFIG")]
    config: Option<PathBuf>,
    /// Directory for cached H tables.
    #[arg(long, global = true, env = "WREATH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "WREATH_THREADS")]
    threads: Option<usize>,
    /// Seed for evaluation points.
    #[arg(long, global = true, env = "WREATH_SEED")]
    seed: Option<u64>,
    /// exact | points | series | auto
    #[arg(long, global = true, env = "WREATH_MODE")]
    mode: Option<String>,
    /// Number of evaluation points in points mode.
    #[arg(long, global = true, env = "WREATH_POINTS")]
    points: Option<usize>,
    /// Total (q,t) degree cap for truncated series.
    #[arg(long, global = true, env = "WREATH_QT_CAP")]
    qt_cap: Option<u32>,
    /// Elliptic nome cap.
    #[arg(long, global = true, env = "WREATH_P_CAP")]
    p_cap: Option<u32>,
    /// multi-index | per-base
    #[arg(long, global = true, env = "WREATH_POCHHAMMER")]
    pochhammer: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partition combinatorics.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Table of H_λ for one core and quotient size.
    Hpoly(HpolyArgs),
    /// Nekrasov factor N_{λ,μ}(u).
    Nekrasov(NekrasovArgs),
    /// Run an identity suite; exit code 0 iff every case passes.
    Verify(VerifyArgs),
    /// T-coefficients of both sides of the modular Nekrasov-Okounkov formula.
    NoSeries(NoSeriesArgs),
}

#[derive(Debug, Subcommand)]
enum PartitionCmd {
    /// Size, hooks, colors, Maya diagram, core, quotient and charges.
    Info {
        /// Comma-separated weakly decreasing parts; "" is the empty partition.
        lambda: String,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    Schur,
    Powersum,
}

#[derive(Debug, Args)]
struct HpolyArgs {
    #[arg(long)]
    r: u32,
    #[arg(long, default_value = "")]
    core: String,
    #[arg(long)]
    quot_size: u32,
    #[arg(long, value_enum, default_value_t = BasisKind::Schur)]
    basis: BasisKind,
    /// Write JSON here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct NekrasovArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    lam: String,
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    ExtPairing,
    Norm,
    PieriSkew,
    PieriMult,
    Tesler,
    Delta,
    Trace,
    NoModular,
    NoClassical,
    NoWeak,
    Elliptic,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 3)]
    r: u32,
    /// Core to check; repeat for several. Defaults to the empty core.
    #[arg(long)]
    core: Vec<String>,
    #[arg(long, default_value_t = 2)]
    max_quot: u32,
    /// Highest power of T (suite-specific default).
    #[arg(long = "orderT")]
    order_t: Option<u32>,
    /// Degree cap of the trace suite.
    #[arg(long, default_value_t = 3)]
    cap_degree: u32,
    /// Highest power of S in the weak form.
    #[arg(long, default_value_t = 1)]
    s_cap: u32,
    /// Step n of the Pieri rules.
    #[arg(long, default_value_t = 1)]
    pieri_n: u32,
    /// Write the JSON report here and print only the summary.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Zero the wall-clock field so reports are byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Sum,
    Product,
    Both,
}

#[derive(Debug, Args)]
struct NoSeriesArgs {
    #[arg(long, default_value_t = 3)]
    r: u32,
    #[arg(long, default_value = "")]
    core: String,
    #[arg(long = "orderT", default_value_t = 2)]
    order_t: u32,
    #[arg(long, value_enum, default_value_t = Side::Both)]
    side: Side,
}

fn version() -> &'static str {
    let s = format!(
        "{} (h-table format v{})",
        env!("CARGO_PKG_VERSION"),
        wreath_core::wreath::TABLE_VERSION
    );
    Box::leak(s.into_boxed_str())
}

fn main() -> ExitCode {
    let matches = Cli::command().version(version()).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(commands::CliError::Runtime(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, commands::CliError> {
    let g = cli.global;
    let file = match &g.config {
        Some(p) => FileConfig::load(p).map_err(commands::CliError::Usage)?,
        None => FileConfig::default(),
    };
    let cfg = CliConfig::resolve(
        Overrides {
            cache_dir: g.cache_dir,
            mode: g.mode,
            threads: g.threads,
            seed: g.seed,
            points: g.points,
            qt_cap: g.qt_cap,
            p_cap: g.p_cap,
            pochhammer: g.pochhammer,
        },
        file,
    );
    if let Some(n) = cfg.threads {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match cli.command {
        Command::Partition(PartitionCmd::Info { lambda, r }) => commands::partition_info(&lambda, r),
        Command::Hpoly(a) => commands::hpoly(
            &cfg,
            a.r,
            &a.core,
            a.quot_size,
            a.basis == BasisKind::Powersum,
            a.out.as_deref(),
        ),
        Command::Nekrasov(a) => commands::nekrasov(a.r, &a.lam, &a.mu, a.format == Format::Csv),
        Command::Verify(a) => {
            let suite = a
                .suite
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            commands::verify(
                &cfg,
                &commands::VerifyRequest {
                    suite,
                    r: a.r,
                    cores: a.core,
                    max_quot: a.max_quot,
                    order_t: a.order_t,
                    cap_degree: a.cap_degree,
                    s_cap: a.s_cap,
                    pieri_n: a.pieri_n,
                    report: a.report,
                    no_timing: a.no_timing,
                },
            )
        }
        Command::NoSeries(a) => {
            let side = match a.side {
                Side::Sum => (true, false),
                Side::Product => (false, true),
                Side::Both => (true, true),
            };
            commands::no_series(&cfg, a.r, &a.core, a.order_t, side)
        }
    }
}
