use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use qident_core::distributions::{prob, sample, TruncatedSupport};
use qident_core::partitions::{enumerate, summand_weight};
use qident_core::qseries::RandomSuite;
use qident_core::verify::run;
use qident_core::{
    format_rational, parse_rational, BigRational, CLFamily, CLParams, ParityConstraint, Selector,
    VerifyConfig, WeightSign,
};

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "qident", version, about = "Exact checks of q-series identities over partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a group of identity checks and print one report per line.
    Verify(VerifyArgs),
    /// List partitions of n under a parity constraint.
    Partitions(PartitionsArgs),
    /// Evaluate or sample the Sp and O measures.
    Dist(DistArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_selector)]
    selector: Selector,
    #[arg(long, default_value_t = 10)]
    m_max: u32,
    /// Series order in u for marginal and normalization checks.
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Base seed for the random parameter suites.
    #[arg(long, default_value_t = RandomSuite::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct PartitionsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value = "none", value_parser = parse_constraint)]
    constraint: ParityConstraint,
    #[arg(long, value_enum, default_value_t = Weights::None)]
    weights: Weights,
}

#[derive(Args)]
struct DistArgs {
    #[arg(value_enum)]
    action: DistAction,
    #[arg(long, default_value = "sp", value_parser = parse_family)]
    family: CLFamily,
    /// Rational `p` or `p/r`, greater than 1.
    #[arg(long, value_parser = parse_rational_arg)]
    q: BigRational,
    /// Rational `p/r` strictly between 0 and 1.
    #[arg(long, value_parser = parse_rational_arg)]
    u: BigRational,
    #[arg(long, default_value_t = 6)]
    max_size: u32,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Relative error allowed from cutting off the infinite product.
    #[arg(long, default_value = "1/100000000000000000000", value_parser = parse_rational_arg)]
    tail_tolerance: BigRational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Weights {
    None,
    Sp,
    O,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistAction {
    Eval,
    Sample,
}

fn parse_selector(s: &str) -> Result<Selector, String> {
    s.parse()
}

fn parse_constraint(s: &str) -> Result<ParityConstraint, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<CLFamily, String> {
    s.parse()
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args, &mut out),
        Command::Partitions(args) => cmd_partitions(&args, &mut out),
        Command::Dist(args) => cmd_dist(&args, &mut out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn write_line(out: &mut impl Write, line: &str) -> Result<(), String> {
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> CmdResult {
    let config = VerifyConfig {
        m_max: args.m_max,
        order: args.order,
        random: RandomSuite {
            seed: args.seed,
            ..RandomSuite::default()
        },
        ..VerifyConfig::default()
    };
    let reports = run(args.selector, &config);
    for report in &reports {
        let line = match args.format {
            Format::Json => serde_json::to_string(report).map_err(|e| e.to_string())?,
            Format::Text => report.to_text(),
        };
        write_line(out, &line)?;
    }
    Ok(if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_partitions(args: &PartitionsArgs, out: &mut impl Write) -> CmdResult {
    let sign = match args.weights {
        Weights::None => None,
        Weights::Sp => Some(WeightSign::Plus),
        Weights::O => Some(WeightSign::Minus),
    };
    for l in enumerate(args.n, args.constraint) {
        let line = match sign {
            None => serde_json::to_string(&l).map_err(|e| e.to_string())?,
            Some(sign) => {
                let w = summand_weight(&l, sign).map_err(|e| e.to_string())?;
                json!({ "partition": l, "weight": w.to_string() }).to_string()
            }
        };
        write_line(out, &line)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dist(args: &DistArgs, out: &mut impl Write) -> CmdResult {
    let params = CLParams::new(args.q.clone(), args.u.clone(), args.tail_tolerance.clone())
        .map_err(|e| e.to_string())?;
    match args.action {
        DistAction::Eval => {
            let support = TruncatedSupport::new(args.family, &params, args.max_size).map_err(|e| e.to_string())?;
            for l in &support.partitions {
                let p = prob(l, args.family, &params).map_err(|e| e.to_string())?;
                let row = json!({
                    "partition": l,
                    "probability": to_f64(&p.value),
                    "lower": to_f64(&p.lower()),
                });
                write_line(out, &row.to_string())?;
            }
            let summary = json!({
                "family": args.family.name(),
                "q": format_rational(&args.q),
                "u": format_rational(&args.u),
                "max_size": args.max_size,
                "product_cutoff": params.product_cutoff(),
                "relative_error_bound": to_f64(params.tail_bound()),
                "total": to_f64(&support.mass()),
                "truncated_mass_bound": to_f64(&support.truncated_mass_bound()),
            });
            write_line(out, &summary.to_string())?;
        }
        DistAction::Sample => {
            let s = sample(args.family, &params, args.max_size, args.count, args.seed).map_err(|e| e.to_string())?;
            let value: Value = serde_json::to_value(&s).map_err(|e| e.to_string())?;
            write_line(out, &value.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
