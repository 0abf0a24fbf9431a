//! `uqsl2`: run the registry of identity checks, or print elements.
//!
//! Exit status: 0 when every requested check passes, 1 when any fails or
//! errors, 2 on a usage error.

mod query;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use uqsl2_core::checks::{self, CheckReport, CheckSpec, CorpusBound, Status};
use uqsl2_core::render::{render, Format};
use uqsl2_core::{Error, TruncationOrder};

const DEFAULT_ORDER: u32 = 8;

#[derive(Parser)]
#[command(name = "uqsl2", version, about = "Exact checks and element inspection for U_q(sl_2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check, or `all` of them.
    Verify {
        #[arg(long)]
        check: String,
        /// Truncation order of the R-matrix.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
        /// Corpus bound for corpus-driven checks, `a,c<=A,b<=B`.
        #[arg(long, default_value_t = CorpusBound::default())]
        corpus: CorpusBound,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Judge the identities with coefficients specialized at `q=<rational>`.
        #[arg(long, value_parser = parse_eval)]
        eval: Option<BigRational>,
    },
    /// Print an element, e.g. `braided_antipode(E)`.
    Show {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = ShowFormat::Text)]
        format: ShowFormat,
        /// Truncation order for braided operations.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
    },
    /// List the registry checks and their minimum orders.
    List {
        #[arg(long, default_value_t = CorpusBound::default())]
        corpus: CorpusBound,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowFormat {
    Text,
    Latex,
    Json,
}

impl From<ShowFormat> for Format {
    fn from(f: ShowFormat) -> Self {
        match f {
            ShowFormat::Text => Format::Text,
            ShowFormat::Latex => Format::Latex,
            ShowFormat::Json => Format::Json,
        }
    }
}

fn parse_eval(s: &str) -> Result<BigRational, String> {
    let value = s.strip_prefix("q=").ok_or_else(|| format!("expected q=<rational>, got `{s}`"))?;
    value.trim().parse().map_err(|_| format!("`{value}` is not a rational number"))
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { check, order, corpus, format, eval } => verify(&check, order, corpus, format, eval),
        Command::Show { expr, format, order } => match query::evaluate(&expr, TruncationOrder(order)) {
            Ok(x) => {
                println!("{}", render(&x, format.into()));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{expr}");
                eprintln!("{}^", " ".repeat(e.pos));
                usage_error(e)
            }
        },
        Command::List { corpus } => {
            for name in checks::registry() {
                let min = checks::min_order(name, corpus).expect("registry name");
                println!("{name:<20} min order {min}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn verify(check: &str, order: u32, corpus: CorpusBound, format: ReportFormat, eval: Option<BigRational>) -> ExitCode {
    let order_t = TruncationOrder(order);
    if let Some(q0) = &eval {
        if let Err(e) = uqsl2_core::QRat::one().eval(q0) {
            return usage_error(e);
        }
    }
    let reports = if check == "all" {
        checks::run_all_with(order_t, corpus, eval.as_ref())
    } else {
        let spec = CheckSpec { name: check.to_string(), order: order_t, corpus };
        let report = match &eval {
            None => checks::run_check(&spec),
            Some(q0) => checks::numeric_check(&spec, q0),
        };
        match report {
            Ok(r) => vec![r],
            Err(e @ (Error::UnknownCheck(_) | Error::OrderTooSmall { .. })) => return usage_error(e),
            Err(e) => vec![CheckReport {
                name: check.to_string(),
                status: Status::Error,
                order,
                witness: None,
                millis: 0,
                error: Some(e.to_string()),
            }],
        }
    };
    match format {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("serializable")),
        ReportFormat::Text => {
            for r in &reports {
                print_text(r);
            }
        }
    }
    if reports.iter().all(CheckReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_text(r: &CheckReport) {
    let status = r.status.to_string().to_uppercase();
    println!("{status:<5} {:<20} order {:<3} {} ms", r.name, r.order, r.millis);
    if let Some(e) = &r.error {
        println!("      {e}");
    }
    if let Some(w) = &r.witness {
        println!("      {}: term {} with coefficient {}", w.comparison, w.term.join(" ⊗ "), w.coeff);
    }
}
