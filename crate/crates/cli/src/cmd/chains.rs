use std::fs;
use std::path::PathBuf;

use clap::Subcommand;
use serde::Serialize;
use setcount::chains::{parse_chain, parse_script, preset, verdict, ChainAst, Verdict};

use super::{json, Context};
use crate::{CliError, CliResult, Format};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify one chain, or every chain in a script file.
    Analyze {
        /// A chain such as "~P <=> Q1 => CONTRA".
        #[arg(
            long,
            conflicts_with = "file",
            required_unless_present = "file",
            allow_hyphen_values = true
        )]
        expr: Option<String>,
        /// A script with one chain per line and `#` comments.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Classify a built-in chain.
    Preset {
        /// Preset name; `cda` is the diagonal-argument chain.
        name: String,
        /// Also print the chain and the meaning of each atom.
        #[arg(long)]
        describe: bool,
    },
}

#[derive(Serialize)]
struct Annotation<'a> {
    atom: &'a str,
    meaning: &'a str,
}

#[derive(Serialize)]
struct Analysed<'a> {
    chain: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    annotations: Vec<Annotation<'a>>,
    verdict: Verdict,
}

impl<'a> Analysed<'a> {
    fn new(ast: &'a ChainAst, with_annotations: bool) -> Self {
        let annotations = if with_annotations {
            ast.annotations
                .iter()
                .map(|(a, m)| Annotation {
                    atom: a,
                    meaning: m,
                })
                .collect()
        } else {
            Vec::new()
        };
        Analysed {
            chain: ast.render(),
            annotations,
            verdict: verdict(ast),
        }
    }
}

pub fn run(ctx: &Context, command: Command) -> CliResult {
    ctx.format(Format::Json, &[Format::Json])?;
    match command {
        Command::Analyze {
            expr: Some(expr), ..
        } => json(&verdict(&parse_chain(&expr).map_err(CliError::usage)?)),
        Command::Analyze {
            file: Some(path), ..
        } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let chains = parse_script(&text).map_err(CliError::usage)?;
            json(
                &chains
                    .iter()
                    .map(|c| Analysed::new(c, false))
                    .collect::<Vec<_>>(),
            )
        }
        Command::Analyze { .. } => Err(CliError::Usage("give --expr or --file".into())),
        Command::Preset { name, describe } => {
            let ast = preset(&name).map_err(CliError::usage)?;
            if describe {
                json(&Analysed::new(&ast, true))
            } else {
                json(&verdict(&ast))
            }
        }
    }
}
