use std::fs;
use std::path::PathBuf;

use clap::Args as ClapArgs;
use setcount::diagonal::{
    array_csv, membership_scan, Alphabet, ArraySpec, DigitString, EventuallyPeriodic,
    ExplicitArray, Family, FamilyKind,
};

use super::{json, Context};
use crate::{CliError, CliResult, Format};

#[derive(ClapArgs, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["family", "explicit"]))]
pub struct Args {
    /// Rule family: lower-tri-22, upper-tri-23, alt-24, alt-25, random-below-26, decimal-29.
    #[arg(long)]
    family: Option<String>,
    /// File with one row of digits per line.
    #[arg(long)]
    explicit: Option<PathBuf>,
    /// Radix of the explicit rows (2 or 10).
    #[arg(long, default_value_t = 2)]
    radix: u32,
    /// Number of rows to scan.
    #[arg(long, default_value_t = 100)]
    depth: usize,
    /// Digits compared per row before falling back to exact comparison; defaults to the depth.
    #[arg(long)]
    prefix: Option<usize>,
    /// Candidate string: digits for an explicit array, `pre(period)` for a family.
    #[arg(long)]
    candidate: Option<String>,
    /// Antidiagonal digits of decimal-29 as `pre(period)`, every digit in 1..=9.
    #[arg(long)]
    digits: Option<String>,
    /// Fill decimal-29 rows past the diagonal with seeded digits instead of zeros.
    #[arg(long)]
    random_tail: bool,
}

fn parse_digit_stream(text: &str) -> Result<EventuallyPeriodic, CliError> {
    match DigitString::parse(Alphabet::Decimal, text).map_err(CliError::usage)? {
        DigitString::Periodic(p) => Ok(p),
        DigitString::Finite(_) => Err(CliError::Usage(format!(
            "--digits needs the form pre(period), got {text:?}"
        ))),
    }
}

pub fn run(ctx: &Context, args: Args) -> CliResult {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Csv, Format::Text])?;
    let spec = match (&args.family, &args.explicit) {
        (Some(name), None) => {
            let kind: FamilyKind = name.parse().map_err(CliError::usage)?;
            let digits = args.digits.as_deref().map(parse_digit_stream).transpose()?;
            ArraySpec::Family(
                Family::from_kind(kind, ctx.seed, digits, args.random_tail)
                    .map_err(CliError::usage)?,
            )
        }
        (None, Some(path)) => {
            let alphabet = Alphabet::from_radix(args.radix).map_err(CliError::usage)?;
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            ArraySpec::Explicit(ExplicitArray::parse(alphabet, &text).map_err(CliError::usage)?)
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --family or --explicit".into(),
            ))
        }
    };
    let prefix = args.prefix.unwrap_or(args.depth);
    if format == Format::Csv {
        return array_csv(&spec, args.depth, prefix).map_err(CliError::usage);
    }
    let candidate = args
        .candidate
        .as_deref()
        .map(|c| DigitString::parse(spec.alphabet(), c))
        .transpose()
        .map_err(CliError::usage)?;
    let report =
        membership_scan(&spec, candidate.as_ref(), args.depth, prefix).map_err(CliError::usage)?;
    match format {
        Format::Text => Ok(format!(
            "antidiagonal: {}\ncover: {}\nscan_depth: {}\nfound_at: {}\n",
            report.antidiagonal,
            setcount::rational::to_ratio_string(&report.cover),
            report.scan_depth,
            report
                .found_at
                .map_or("none".to_string(), |n| n.to_string()),
        )),
        _ => json(&report),
    }
}
