use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qgw_core::error::{QgwError, Result};
use qgw_core::reps::RepLabel;
use qgw_core::rmatlab::RMatrix;
use qgw_core::suite::{self, Context, Expected, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "qgw", version, about = "Run exact checks on non-standard quantum groups and their q-exterior algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite: `all`, check ids, group names or `criterion-N`, comma-separated.
    Run {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Integer labels `m1,m2[,m1',m2',...]` replacing the default grids.
        #[arg(long)]
        labels: Option<String>,
        /// JSON R-matrix file checked for the (graded) braid relation.
        #[arg(long)]
        rmatrix: Option<PathBuf>,
        /// Extra numeric evaluation point `re,im`.
        #[arg(long = "q-spot")]
        q_spot: Option<String>,
    },
    /// List checks whose id or description contains the filter.
    List {
        #[arg(default_value = "")]
        filter: String,
    },
}

fn parse_labels(s: &str) -> Result<Vec<RepLabel>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.is_empty() || !parts.len().is_multiple_of(2) {
        return Err(QgwError::Format(format!("labels need an even number of integers: `{s}`")));
    }
    parts
        .chunks(2)
        .map(|c| {
            let l: RepLabel = format!("{},{}", c[0], c[1]).parse()?;
            l.validate()?;
            Ok(l)
        })
        .collect()
}

fn parse_spot(s: &str) -> Result<Complex64> {
    let bad = || QgwError::Format(format!("expected `re,im`, got `{s}`"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn load_rmatrix(path: &PathBuf) -> Result<RMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| QgwError::Format(format!("{}: {e}", path.display())))?;
    RMatrix::from_json(&text)
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::List { filter } => {
            for d in suite::list_checks(&filter, &Context::default()) {
                let exp = match d.expected {
                    Expected::Pass => "pass",
                    Expected::FailOfProperty => "fail-of-property",
                };
                println!("{:<42} [{:>2}] {:<17} {}", d.id, d.criterion, exp, d.anchor);
            }
            Ok(0)
        }
        Command::Run { suite: name, format, seed, labels, rmatrix, q_spot } => {
            let ctx = Context {
                seed,
                labels: labels.as_deref().map(parse_labels).transpose()?,
                rmatrix: rmatrix.as_ref().map(load_rmatrix).transpose()?,
                q_spot: q_spot.as_deref().map(parse_spot).transpose()?,
            };
            let name = if ctx.rmatrix.is_some() && name == "all" { "rmatrix".to_string() } else { name };
            let report = suite::run(&name, &ctx)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
