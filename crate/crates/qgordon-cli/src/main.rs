//! Command-line verifier for the Rogers-Ramanujan-Gordon identity family.
//!
//! Exit codes: 0 on success, 1 when a verification check fails (or, under
//! `--strict`, when any check was skipped), 2 on configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qgordon::partitions::{enumerate, GordonConstraint, MultiplicityBound};
use qgordon::verify::{
    render_report, run_verification, series_inspect, summarize, ReportFormat, Suite,
    VerificationConfig,
};
use qgordon::{a_matrix, b_matrix, h_matrix, product_g};

#[derive(Parser)]
#[command(
    name = "qgordon",
    version,
    about = "Exact verification of the Rogers-Ramanujan-Gordon identity family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report
    Verify(VerifyArgs),
    /// Print one series G_s by its two computation routes
    Series {
        #[arg(long)]
        k: usize,
        /// Linear index s >= 1
        #[arg(long)]
        s: usize,
        /// Truncation order
        #[arg(long, default_value_t = 40)]
        order: usize,
    },
    /// Print the h^(j), A_(j) or B_(j) matrix
    Hmatrix {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value_t = WhichMatrix::H)]
        matrix: WhichMatrix,
    },
    /// Count or list the partitions of m under a constraint bundle
    Partitions(PartitionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichMatrix {
    H,
    A,
    B,
}

#[derive(Args)]
struct VerifyArgs {
    /// Modulus parameter k; repeat for several (default: 2 3 4 5)
    #[arg(long = "k", value_name = "K")]
    k: Vec<usize>,
    /// Truncation order N
    #[arg(long, default_value_t = 200)]
    order: usize,
    /// Recursion depth
    #[arg(long, default_value_t = 20)]
    jmax: usize,
    /// Suite to run; repeat for several (default: all). One of: products,
    /// triple_product, closed_form, recursion, empirical, matrices,
    /// partitions, uniqueness
    #[arg(long = "suite", value_name = "SUITE")]
    suite: Vec<String>,
    /// Report format: text or json
    #[arg(long, default_value = "text")]
    format: String,
    /// Exit nonzero when any check was skipped
    #[arg(long)]
    strict: bool,
    /// Worker thread count (default: one per core)
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the seed series G_1..G_k for each configured k into this
    /// directory, one file per k
    #[arg(long)]
    seed_dump_dir: Option<PathBuf>,
}

#[derive(Args)]
struct PartitionArgs {
    /// Weight to partition
    #[arg(long)]
    m: usize,
    /// Modulus parameter k (difference condition at distance k-1)
    #[arg(long)]
    k: usize,
    /// Cap on the number of parts equal to 1
    #[arg(long)]
    max_ones: Option<usize>,
    /// Require every part to exceed this value
    #[arg(long)]
    min_part_exclusive: Option<usize>,
    /// Cap on the largest part
    #[arg(long)]
    max_part: Option<usize>,
    /// Part value carrying a multiplicity condition
    #[arg(long, requires = "bound")]
    part: Option<usize>,
    /// Exact multiplicity for --part
    #[arg(long, group = "bound")]
    exactly: Option<usize>,
    /// Multiplicity cap for --part
    #[arg(long, group = "bound")]
    at_most: Option<usize>,
    /// List the partitions (largest part first) instead of counting them
    #[arg(long)]
    dump: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Series { k, s, order } => {
            let text = series_inspect(k, s, order).map_err(|e| e.to_string())?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Hmatrix { k, j, matrix } => {
            let m = match matrix {
                WhichMatrix::H => h_matrix(k, j),
                WhichMatrix::A => a_matrix(k, j),
                WhichMatrix::B => b_matrix(k, j),
            }
            .map_err(|e| e.to_string())?;
            print!("{m}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Partitions(args) => partitions(args),
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let suites = if args.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suite
            .iter()
            .map(|s| s.parse::<Suite>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?
    };
    let format = args.format.parse::<ReportFormat>().map_err(|e| e.to_string())?;
    let config = VerificationConfig {
        k_values: if args.k.is_empty() {
            vec![2, 3, 4, 5]
        } else {
            args.k.clone()
        },
        order: args.order,
        jmax: args.jmax,
        suites,
        format,
        parallelism: args.jobs,
    };
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    if let Some(dir) = &args.seed_dump_dir {
        dump_seeds(dir, &config).map_err(|e| e.to_string())?;
    }
    let records = run_verification(&config).map_err(|e| e.to_string())?;
    print!("{}", render_report(&config, &records, format));
    let summary = summarize(&records);
    if summary.fail > 0 || (args.strict && summary.skipped > 0) {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn dump_seeds(dir: &PathBuf, config: &VerificationConfig) -> qgordon::Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| {
        qgordon::Error::ParamOutOfRange(format!("cannot create {}: {e}", dir.display()))
    })?;
    for &k in &config.k_values {
        let mut text = String::new();
        for i in 1..=k {
            text.push_str(&format!("G_{i} = {}\n", product_g(k, i, config.order)?));
        }
        let path = dir.join(format!("seeds_k{k}.txt"));
        std::fs::write(&path, text).map_err(|e| {
            qgordon::Error::ParamOutOfRange(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(())
}

fn partitions(args: PartitionArgs) -> Result<ExitCode, String> {
    let mut constraint = GordonConstraint::bare(args.k).map_err(|e| e.to_string())?;
    constraint.max_ones = args.max_ones;
    constraint.min_part_exclusive = args.min_part_exclusive;
    constraint.max_part = args.max_part;
    if let Some(part) = args.part {
        let bound = match (args.exactly, args.at_most) {
            (Some(c), None) => MultiplicityBound::Exactly(c),
            (None, Some(c)) => MultiplicityBound::AtMost(c),
            _ => return Err("--part needs exactly one of --exactly or --at-most".into()),
        };
        constraint.designated = Some((part, bound));
    }
    let listed = enumerate(args.m, &constraint);
    if args.dump {
        for p in &listed {
            println!("{p}");
        }
    } else {
        println!("{}", listed.len());
    }
    Ok(ExitCode::SUCCESS)
}
