//! Proof-by-contradiction chains: parsing, template classification,
//! entailment closure and detection of statements that entail both the
//! target and its negation.
//!
//! Statements are opaque atoms. Only the shape of the chain is analysed.

mod analysis;
mod ast;
mod parse;

use thiserror::Error;

pub use analysis::{
    base_edges, classify, detect_inconceivable, entailment_closure, verdict, ChainPattern, Closure,
    Literal, Verdict,
};
pub use ast::{ChainAst, Connective, Link, Terminal, CONTRA};
pub use parse::{normalize, parse_chain, parse_script};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid chain: {0}")]
    Semantics(String),
    #[error("line {line}: {source}")]
    Script {
        line: usize,
        source: Box<ChainError>,
    },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

/// The diagonal-argument chain: `~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> P`, with
/// plain-language descriptions of each atom.
pub fn cda_preset() -> ChainAst {
    let mut ast = parse_chain("~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> P").expect("preset parses");
    ast.annotations = [
        (
            "P",
            "no list indexed by the naturals covers every infinite binary string",
        ),
        (
            "~P",
            "some list indexed by the naturals covers every infinite binary string",
        ),
        (
            "Q1",
            "the strings can be arranged as a sequence with one entry per natural number",
        ),
        (
            "Q2",
            "stacking that sequence gives a table whose row n holds the digits of string n",
        ),
        (
            "Q3",
            "flipping each diagonal entry builds a string that disagrees with every row",
        ),
        (
            "Q4",
            "at least one infinite binary string is missing from the table",
        ),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect();
    ast
}

/// Named presets available from the command line.
pub fn preset(name: &str) -> Result<ChainAst, ChainError> {
    match name {
        "cda" => Ok(cda_preset()),
        _ => Err(ChainError::UnknownPreset(name.to_string())),
    }
}
