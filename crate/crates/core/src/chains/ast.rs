use std::fmt;

use serde::Serialize;

/// Reserved word for the `R ∧ ¬R` terminal.
pub const CONTRA: &str = "CONTRA";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Connective {
    Implies,
    Iff,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Implies => "=>",
            Connective::Iff => "<=>",
        }
    }
}

/// What the chain ends in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Terminal {
    /// An unrelated contradiction `R ∧ ¬R`.
    Contradiction,
    /// The target itself.
    Target,
    /// The target together with its negation.
    TargetConjNeg,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Link {
    pub connective: Connective,
    pub statement: String,
}

/// A chain `~T c₁ S₁ c₂ S₂ … c_k S_k c terminal` starting from the negated target `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainAst {
    pub target: String,
    pub links: Vec<Link>,
    pub terminal: Terminal,
    pub terminal_connective: Connective,
    /// Free-text descriptions keyed by atom name or `~atom`; never analysed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<(String, String)>,
}

impl ChainAst {
    pub fn statements(&self) -> impl Iterator<Item = &str> {
        self.links.iter().map(|l| l.statement.as_str())
    }

    /// Connectives in order, the terminal one last.
    pub fn connectives(&self) -> Vec<Connective> {
        self.links
            .iter()
            .map(|l| l.connective)
            .chain(std::iter::once(self.terminal_connective))
            .collect()
    }

    /// Number of leading `<=>` links.
    pub fn iff_prefix_len(&self) -> usize {
        self.links
            .iter()
            .take_while(|l| l.connective == Connective::Iff)
            .count()
    }

    /// Canonical text: single spaces between tokens, `~` attached to its atom.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ChainAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{}", self.target)?;
        for link in &self.links {
            write!(f, " {} {}", link.connective.symbol(), link.statement)?;
        }
        write!(f, " {} ", self.terminal_connective.symbol())?;
        match self.terminal {
            Terminal::Contradiction => f.write_str(CONTRA),
            Terminal::Target => f.write_str(&self.target),
            Terminal::TargetConjNeg => write!(f, "{0} & ~{0}", self.target),
        }
    }
}
