use clap::{Subcommand, ValueEnum};
use num_bigint::BigUint;
use setcount::subsets::{
    complement, decode_subset, dovetail_enumerate, encode_subset, figure1_data, rank,
    table1_values, unrank, FiniteSubset,
};

use super::{json, parse_list, Context};
use crate::{CliError, CliResult, Format};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colex rank of a finite subset.
    Rank {
        /// Comma-separated, strictly increasing elements.
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Subset with the given cardinality and colex rank.
    Unrank {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: BigUint,
    },
    /// First `count` finite subsets in dovetailed order.
    Dovetail {
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Coefficients C(n, p) and ratios q(n, d) for one even n.
    Figure1 {
        #[arg(long, default_value_t = 40)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Series::Binomial)]
        series: Series,
    },
    /// Tabulated closed forms of q checked against exact values.
    Table1 {
        #[arg(long, default_value_t = 2520)]
        n: u64,
    },
    /// The cofinite complement of a finite subset.
    Complement {
        #[arg(long)]
        elements: String,
    },
    /// Bitmask `Σ 2^i` of a finite subset.
    Encode {
        #[arg(long)]
        elements: String,
    },
    /// Finite subset whose bitmask is `mask`.
    Decode {
        #[arg(long)]
        mask: BigUint,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Series {
    Binomial,
    Ratio,
}

fn subset(text: &str) -> Result<FiniteSubset, CliError> {
    FiniteSubset::new(parse_list(text)?).map_err(CliError::usage)
}

fn subset_line(s: &FiniteSubset) -> String {
    s.elements()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(ctx: &Context, command: Command) -> CliResult {
    match command {
        Command::Rank { elements } => {
            let s = subset(&elements)?;
            let r = rank(&s);
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => json(&serde_json::json!({
                    "elements": s,
                    "p": s.cardinality(),
                    "rank": r.to_string(),
                })),
                _ => Ok(format!("{r}\n")),
            }
        }
        Command::Unrank { p, r } => {
            let s = unrank(p, &r).map_err(CliError::usage)?;
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => json(&s),
                _ => Ok(format!("{s}\n")),
            }
        }
        Command::Dovetail { count } => {
            let list = dovetail_enumerate(count).map_err(CliError::usage)?;
            match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Json => json(&list),
                _ => {
                    let mut out = String::from("index,cardinality,rank,elements\n");
                    for (i, s) in list.iter().enumerate() {
                        out.push_str(&format!(
                            "{i},{},{},{}\n",
                            s.cardinality(),
                            rank(s),
                            subset_line(s)
                        ));
                    }
                    Ok(out)
                }
            }
        }
        Command::Figure1 { n, series } => {
            let fig = figure1_data(n).map_err(CliError::usage)?;
            match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Json => json(&fig.to_json()),
                _ => Ok(match series {
                    Series::Binomial => fig.binomial_csv(),
                    Series::Ratio => fig.ratio_csv(),
                }),
            }
        }
        Command::Table1 { n } => {
            let rows = table1_values(n).map_err(CliError::usage)?;
            let text = match ctx.format(Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Json => json(&rows)?,
                _ => {
                    let mut out = String::from("label,d,closed_form,q,match\n");
                    for r in &rows {
                        out.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.label,
                            r.d,
                            setcount::rational::to_ratio_string(&r.closed_form),
                            setcount::rational::to_ratio_string(&r.q),
                            r.matches()
                        ));
                    }
                    out
                }
            };
            match rows.iter().find(|r| !r.matches()) {
                Some(r) => Err(CliError::Internal(format!(
                    "closed form for d = {} disagrees with the exact ratio",
                    r.label
                ))),
                None => Ok(text),
            }
        }
        Command::Complement { elements } => {
            let c = complement(&subset(&elements)?);
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => json(&c),
                _ => Ok(format!("{c}\n")),
            }
        }
        Command::Encode { elements } => Ok(format!("{}\n", encode_subset(&subset(&elements)?))),
        Command::Decode { mask } => {
            let s = decode_subset(&mask);
            match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => json(&s),
                _ => Ok(format!("{s}\n")),
            }
        }
    }
}
