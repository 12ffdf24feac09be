use clap::Subcommand;
use setcount::density::{
    default_tolerance, figure2_csv, figure2_data, figure2_schedule, grid_6_4, rho_limit_with,
    PhiFormula,
};
use setcount::rational::{parse_decimal, DEFAULT_PLACES};

use super::{json, parse_list, Context};
use crate::{CliError, CliResult, Format};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ratio Φ_A(n)/Φ_B(n) along a schedule, with its limit classification.
    Rho {
        /// Numerator formula: nat, even, int, rat-paper, rat-exact, real, complex.
        #[arg(long)]
        a: PhiFormula,
        /// Denominator formula.
        #[arg(long)]
        b: PhiFormula,
        /// Strictly increasing sample points.
        #[arg(long, default_value = "10,100,1000,10000")]
        schedule: String,
        /// Convergence tolerance as a decimal.
        #[arg(long)]
        tol: Option<String>,
    },
    /// Correction factor f(n) at 2..10 and then 20, 50, 100, 200, ... up to max.
    Figure2 {
        #[arg(long, default_value_t = 100_000)]
        max: u64,
        /// Explicit sample points instead of the default ladder.
        #[arg(long)]
        schedule: Option<String>,
    },
    /// The table of fractions a/b for 1 ≤ a, b ≤ n.
    Grid {
        #[arg(long, default_value_t = 9)]
        n: u64,
    },
}

pub fn run(ctx: &Context, command: Command) -> CliResult {
    match command {
        Command::Rho {
            a,
            b,
            schedule,
            tol,
        } => {
            let schedule = parse_list(&schedule)?;
            let tol = match tol {
                Some(t) => parse_decimal(&t)
                    .ok_or_else(|| CliError::Usage(format!("bad tolerance {t:?}")))?,
                None => default_tolerance(),
            };
            let estimate = rho_limit_with(a, b, &schedule, &tol).map_err(CliError::usage)?;
            match ctx.format(Format::Json, &[Format::Json, Format::Csv, Format::Text])? {
                Format::Csv => Ok(estimate.samples_csv(DEFAULT_PLACES)),
                Format::Text => Ok(format!("{}\n", estimate.classification)),
                _ => json(&estimate),
            }
        }
        Command::Figure2 { max, schedule } => {
            let schedule = match schedule {
                Some(s) => parse_list(&s)?,
                None => figure2_schedule(max),
            };
            let points = figure2_data(&schedule).map_err(CliError::usage)?;
            ctx.format(Format::Csv, &[Format::Csv])?;
            Ok(figure2_csv(&points, DEFAULT_PLACES))
        }
        Command::Grid { n } => {
            let grid = grid_6_4(n).map_err(CliError::usage)?;
            match ctx.format(Format::Csv, &[Format::Csv, Format::Json, Format::Text])? {
                Format::Json => json(&serde_json::json!({
                    "n": grid.n,
                    "bold_count": grid.bold_count(),
                    "cells": grid.cells,
                })),
                Format::Text => Ok(format!("{}\n", grid.bold_count())),
                _ => Ok(grid.to_csv()),
            }
        }
    }
}
