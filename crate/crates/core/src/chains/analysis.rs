use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::ast::{ChainAst, Connective, Terminal};

/// A node of the entailment graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Literal {
    Pos(String),
    Neg(String),
    /// `R ∧ ¬R`.
    Contradiction,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Pos(a) => f.write_str(a),
            Literal::Neg(a) => write!(f, "~{a}"),
            Literal::Contradiction => f.write_str("CONTRA"),
        }
    }
}

/// Direct entailments written in the chain.
///
/// `=>` gives one edge, `<=>` gives both directions. A `P & ~P` terminal gives
/// edges to both `P` and `~P` and none back: the conjunction entails each part
/// but neither part entails the conjunction.
pub fn base_edges(ast: &ChainAst) -> BTreeSet<(Literal, Literal)> {
    let mut edges = BTreeSet::new();
    let mut add = |from: &Literal, to: &Literal, c: Connective| {
        edges.insert((from.clone(), to.clone()));
        if c == Connective::Iff {
            edges.insert((to.clone(), from.clone()));
        }
    };
    let mut prev = Literal::Neg(ast.target.clone());
    for link in &ast.links {
        let next = Literal::Pos(link.statement.clone());
        add(&prev, &next, link.connective);
        prev = next;
    }
    let c = ast.terminal_connective;
    match ast.terminal {
        Terminal::Contradiction => add(&prev, &Literal::Contradiction, c),
        Terminal::Target => add(&prev, &Literal::Pos(ast.target.clone()), c),
        Terminal::TargetConjNeg => {
            edges.insert((prev.clone(), Literal::Pos(ast.target.clone())));
            edges.insert((prev, Literal::Neg(ast.target.clone())));
        }
    }
    edges
}

/// Transitive closure of [`base_edges`]: `a → b` whenever a path of one or
/// more edges leads from `a` to `b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Closure {
    reach: BTreeMap<Literal, BTreeSet<Literal>>,
}

impl Closure {
    pub fn reaches(&self, from: &Literal, to: &Literal) -> bool {
        self.reach.get(from).is_some_and(|s| s.contains(to))
    }

    pub fn successors(&self, from: &Literal) -> impl Iterator<Item = &Literal> {
        self.reach.get(from).into_iter().flatten()
    }

    pub fn pairs(&self) -> BTreeSet<(Literal, Literal)> {
        self.reach
            .iter()
            .flat_map(|(a, bs)| bs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

pub fn entailment_closure(ast: &ChainAst) -> Closure {
    let mut adj: BTreeMap<Literal, Vec<Literal>> = BTreeMap::new();
    for (a, b) in base_edges(ast) {
        adj.entry(b.clone()).or_default();
        adj.entry(a).or_default().push(b);
    }
    let mut reach = BTreeMap::new();
    for start in adj.keys() {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<&Literal> = adj[start].iter().collect();
        while let Some(node) = queue.pop_front() {
            if seen.insert(node.clone()) {
                queue.extend(adj[node].iter());
            }
        }
        reach.insert(start.clone(), seen);
    }
    Closure { reach }
}

/// Statements that entail both the target and its negation, in chain order.
///
/// The second clause of the definition (`Q` entails `P ⇒ ¬P` or `¬P ⇒ P`) is
/// read within this graph as `Q` reaching some `X ∈ {P, ¬P}` that itself
/// reaches its complement. Any such `Q` already reaches both literals, so
/// this list is also the union of both clauses.
pub fn detect_inconceivable(ast: &ChainAst) -> Vec<String> {
    let closure = entailment_closure(ast);
    let pos = Literal::Pos(ast.target.clone());
    let neg = Literal::Neg(ast.target.clone());
    ast.statements()
        .filter(|q| {
            let q = Literal::Pos(q.to_string());
            closure.reaches(&q, &pos) && closure.reaches(&q, &neg)
        })
        .map(str::to_string)
        .collect()
}

/// Statements whose truth is tied to the start literal by `<=>` links alone.
fn tied_to_start(ast: &ChainAst) -> BTreeSet<String> {
    ast.links
        .iter()
        .take_while(|l| l.connective == Connective::Iff)
        .map(|l| l.statement.clone())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainPattern {
    /// Conditionals only, ending in an unrelated contradiction.
    #[serde(rename = "VALID_31")]
    Valid31,
    /// Conditionals only, ending in the target.
    #[serde(rename = "VALID_34")]
    Valid34,
    /// Biconditionals only, ending in an unrelated contradiction.
    #[serde(rename = "FLAWED_37")]
    Flawed37,
    /// Biconditionals only, ending in the target.
    #[serde(rename = "FLAWED_38")]
    Flawed38,
    /// Biconditionals then conditionals, ending in an unrelated contradiction.
    #[serde(rename = "HALFWAY_39")]
    Halfway39,
    /// Biconditionals then conditionals, ending in the target.
    #[serde(rename = "HALFWAY_310")]
    Halfway310,
    #[serde(rename = "OTHER")]
    Other,
}

impl ChainPattern {
    pub fn name(self) -> &'static str {
        match self {
            ChainPattern::Valid31 => "VALID_31",
            ChainPattern::Valid34 => "VALID_34",
            ChainPattern::Flawed37 => "FLAWED_37",
            ChainPattern::Flawed38 => "FLAWED_38",
            ChainPattern::Halfway39 => "HALFWAY_39",
            ChainPattern::Halfway310 => "HALFWAY_310",
            ChainPattern::Other => "OTHER",
        }
    }

    pub fn is_valid_form(self) -> bool {
        matches!(self, ChainPattern::Valid31 | ChainPattern::Valid34)
    }

    pub fn is_halfway(self) -> bool {
        matches!(self, ChainPattern::Halfway39 | ChainPattern::Halfway310)
    }
}

impl fmt::Display for ChainPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Link connectives after folding a trailing `<=>` run into a target terminal.
///
/// In `… S ⇒ Qk ⇔ … ⇔ P` the statements after the last `⇒` are equivalent to
/// the target, so the chain has the shape `… S ⇒ P`.
fn effective_links(ast: &ChainAst) -> Vec<Connective> {
    let mut conns: Vec<Connective> = ast.links.iter().map(|l| l.connective).collect();
    if ast.terminal == Terminal::Target && ast.terminal_connective == Connective::Iff {
        let run = conns
            .iter()
            .rev()
            .take_while(|&&c| c == Connective::Iff)
            .count();
        if run < conns.len() {
            // conns[len - run - 1] is the `=>` entering the run; it becomes the
            // terminal connective and the run's statements are absorbed.
            conns.truncate(conns.len() - run - 1);
        }
    }
    conns
}

/// Syntactic template match on the connective sequence and terminal kind.
pub fn classify(ast: &ChainAst) -> ChainPattern {
    let conns = effective_links(ast);
    let to_target = ast.terminal == Terminal::Target;
    let pick = |contra, target| if to_target { target } else { contra };
    let iffs = conns.iter().take_while(|&&c| c == Connective::Iff).count();
    let rest_implies = conns[iffs..].iter().all(|&c| c == Connective::Implies);
    let folded = conns.len() < ast.links.len();
    if conns.is_empty() {
        // No intermediate statements left: the entering connective decides.
        let entering = if folded {
            Connective::Implies
        } else {
            ast.terminal_connective
        };
        return match entering {
            Connective::Implies => pick(ChainPattern::Valid31, ChainPattern::Valid34),
            Connective::Iff => pick(ChainPattern::Flawed37, ChainPattern::Flawed38),
        };
    }
    if !rest_implies {
        ChainPattern::Other
    } else if iffs == 0 {
        pick(ChainPattern::Valid31, ChainPattern::Valid34)
    } else if iffs == conns.len() {
        pick(ChainPattern::Flawed37, ChainPattern::Flawed38)
    } else {
        pick(ChainPattern::Halfway39, ChainPattern::Halfway310)
    }
}

/// Structural judgement on a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pattern: ChainPattern,
    pub iff_prefix_len: usize,
    pub independent: Vec<String>,
    pub inconceivable: Vec<String>,
    pub valid: bool,
    pub rationale: String,
}

pub fn verdict(ast: &ChainAst) -> Verdict {
    let pattern = classify(ast);
    let tied = tied_to_start(ast);
    let independent: Vec<String> = ast
        .statements()
        .filter(|s| !tied.contains(*s))
        .map(str::to_string)
        .collect();
    let inconceivable = detect_inconceivable(ast);
    let valid = pattern.is_valid_form() || (pattern.is_halfway() && !independent.is_empty());
    let rationale = match pattern {
        ChainPattern::Valid31 | ChainPattern::Valid34 => {
            "every link is a one-way conditional, so each intermediate statement must be \
             established on its own and the contradiction refutes the assumption"
                .to_string()
        }
        ChainPattern::Flawed37 | ChainPattern::Flawed38 => format!(
            "every intermediate statement is equivalent to the negated target, so refuting \
             the end of the chain refutes them all and no true statement supports the \
             conclusion{}",
            inconceivable_note(&inconceivable)
        ),
        ChainPattern::Halfway39 | ChainPattern::Halfway310 => format!(
            "the statements after the biconditional prefix ({}) are not tied to the negated \
             target and can carry the proof once shown true{}",
            independent.join(", "),
            inconceivable_note(&inconceivable)
        ),
        ChainPattern::Other => format!(
            "the connective sequence matches no known template{}",
            inconceivable_note(&inconceivable)
        ),
    };
    Verdict {
        pattern,
        iff_prefix_len: ast.iff_prefix_len(),
        independent,
        inconceivable,
        valid,
        rationale,
    }
}

fn inconceivable_note(list: &[String]) -> String {
    if list.is_empty() {
        String::new()
    } else {
        format!(
            "; {} entail both the target and its negation",
            list.join(", ")
        )
    }
}
