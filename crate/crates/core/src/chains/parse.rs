use std::collections::HashSet;

use super::ast::{ChainAst, Connective, Link, Terminal, CONTRA};
use super::ChainError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Not,
    Implies,
    Iff,
    And,
    Atom(String),
}

impl Tok {
    fn text(&self) -> &str {
        match self {
            Tok::Not => "~",
            Tok::Implies => "=>",
            Tok::Iff => "<=>",
            Tok::And => "&",
            Tok::Atom(a) => a,
        }
    }
}

/// Tokens with their 1-based character column.
fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ChainError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let rest: String = chars[i..].iter().take(3).collect();
        if c.is_whitespace() {
            i += 1;
        } else if c == '~' {
            out.push((col, Tok::Not));
            i += 1;
        } else if c == '&' {
            out.push((col, Tok::And));
            i += 1;
        } else if rest.starts_with("<=>") {
            out.push((col, Tok::Iff));
            i += 3;
        } else if rest.starts_with("=>") {
            out.push((col, Tok::Implies));
            i += 2;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Atom(chars[start..i].iter().collect())));
        } else {
            return Err(ChainError::Syntax {
                position: col,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end_col: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.at).map_or(self.end_col, |(c, _)| *c)
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ChainError> {
        let found = match self.peek() {
            Some(t) => format!("{:?}", t.text()),
            None => "end of input".to_string(),
        };
        Err(ChainError::Syntax {
            position: self.col(),
            message: format!("expected {expected}, found {found}"),
        })
    }

    fn atom(&mut self) -> Result<(usize, String), ChainError> {
        match self.peek() {
            Some(Tok::Atom(a)) if a != CONTRA => {
                let out = (self.col(), a.clone());
                self.at += 1;
                Ok(out)
            }
            _ => self.fail("a statement name"),
        }
    }

    fn connective(&mut self) -> Result<Connective, ChainError> {
        let c = match self.peek() {
            Some(Tok::Implies) => Connective::Implies,
            Some(Tok::Iff) => Connective::Iff,
            _ => return self.fail("'=>' or '<=>'"),
        };
        self.at += 1;
        Ok(c)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }
}

enum Item {
    Statement(usize, String),
    Contra,
    ConjNeg(usize, String, String),
}

/// Parses one chain.
///
/// Grammar, whitespace-insensitive:
///
/// ```text
/// chain    := literal (link atom)* link terminal
/// literal  := "~" atom | atom
/// link     := "=>" | "<=>"
/// terminal := "CONTRA" | atom | atom "&" "~" atom
/// ```
pub fn parse_chain(text: &str) -> Result<ChainAst, ChainError> {
    let toks = lex(text)?;
    let mut cur = Cursor {
        toks,
        at: 0,
        end_col: text.chars().count() + 1,
    };
    if cur.peek().is_none() {
        return cur.fail("a chain");
    }
    let negated = cur.eat(&Tok::Not);
    let (start_col, start) = cur.atom()?;

    // Collect (connective, item) pairs; the last one is the terminal.
    let mut items: Vec<(Connective, Item)> = Vec::new();
    loop {
        let conn = cur.connective()?;
        let item = if cur.eat(&Tok::Atom(CONTRA.into())) {
            Item::Contra
        } else {
            let (col, name) = cur.atom()?;
            if cur.eat(&Tok::And) {
                if !cur.eat(&Tok::Not) {
                    return cur.fail("'~'");
                }
                let (_, neg) = cur.atom()?;
                Item::ConjNeg(col, name, neg)
            } else {
                Item::Statement(col, name)
            }
        };
        let last = !matches!(item, Item::Statement(..)) || cur.peek().is_none();
        items.push((conn, item));
        if last {
            break;
        }
    }
    if cur.peek().is_some() {
        return cur.fail("end of input");
    }

    if !negated {
        return Err(ChainError::Semantics(format!(
            "column {start_col}: the chain must start from a negated target, found {start:?}"
        )));
    }
    let target = start;
    let (terminal_connective, terminal_item) = items.pop().expect("at least one link");
    let terminal = match terminal_item {
        Item::Contra => Terminal::Contradiction,
        Item::Statement(col, name) => {
            if name != target {
                return Err(ChainError::Semantics(format!(
                    "column {col}: terminal {name:?} is neither CONTRA nor the target {target:?}"
                )));
            }
            Terminal::Target
        }
        Item::ConjNeg(col, pos, neg) => {
            if pos != target || neg != target {
                return Err(ChainError::Semantics(format!(
                    "column {col}: terminal must be {target} & ~{target}"
                )));
            }
            Terminal::TargetConjNeg
        }
    };

    let mut seen = HashSet::new();
    let mut links = Vec::with_capacity(items.len());
    for (connective, item) in items {
        let Item::Statement(col, name) = item else {
            unreachable!("only the last item can be a terminal")
        };
        if name == target {
            return Err(ChainError::Semantics(format!(
                "column {col}: the target {target:?} cannot appear as an intermediate statement"
            )));
        }
        if !seen.insert(name.clone()) {
            return Err(ChainError::Semantics(format!(
                "column {col}: statement {name:?} appears twice"
            )));
        }
        links.push(Link {
            connective,
            statement: name,
        });
    }
    Ok(ChainAst {
        target,
        links,
        terminal,
        terminal_connective,
        annotations: Vec::new(),
    })
}

/// Token-level normal form of `text`, matching [`ChainAst::render`] for valid chains.
pub fn normalize(text: &str) -> Result<String, ChainError> {
    let mut out = String::new();
    let mut glue = true;
    for (_, tok) in lex(text)? {
        if !glue {
            out.push(' ');
        }
        out.push_str(tok.text());
        glue = tok == Tok::Not;
    }
    Ok(out)
}

/// One chain per nonblank line; `#` starts a comment. Errors carry the line number.
pub fn parse_script(text: &str) -> Result<Vec<ChainAst>, ChainError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let chain = parse_chain(body).map_err(|e| ChainError::Script {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(chain);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_templates() {
        let c = parse_chain("~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> P").unwrap();
        assert_eq!(c.target, "P");
        assert_eq!(c.links.len(), 4);
        assert_eq!(c.terminal, Terminal::Target);
        assert_eq!(c.terminal_connective, Connective::Iff);
        assert_eq!(c.render(), "~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> P");

        let c = parse_chain("~P=>Q1=>CONTRA").unwrap();
        assert_eq!(c.terminal, Terminal::Contradiction);
        assert_eq!(c.render(), "~P => Q1 => CONTRA");

        let c = parse_chain("~ P => P & ~P").unwrap();
        assert!(c.links.is_empty());
        assert_eq!(c.terminal, Terminal::TargetConjNeg);
        assert_eq!(c.render(), "~P => P & ~P");
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse_chain("garbage").unwrap_err();
        assert!(matches!(e, ChainError::Syntax { position: 8, .. }), "{e:?}");
        let e = parse_chain("~P => $").unwrap_err();
        assert!(matches!(e, ChainError::Syntax { position: 7, .. }), "{e:?}");
        assert!(matches!(
            parse_chain(""),
            Err(ChainError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_chain("~P => CONTRA => Q"),
            Err(ChainError::Syntax { .. })
        ));
        assert!(matches!(
            parse_chain("~P => P & P"),
            Err(ChainError::Syntax { .. })
        ));
        assert!(matches!(
            parse_chain("~P =>"),
            Err(ChainError::Syntax { .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse_chain("P => Q1 => P"),
            Err(ChainError::Semantics(_))
        ));
        assert!(matches!(
            parse_chain("~P => Q1 => Q2"),
            Err(ChainError::Semantics(_))
        ));
        assert!(matches!(
            parse_chain("~P => Q1 => Q1 => P"),
            Err(ChainError::Semantics(_))
        ));
        assert!(matches!(
            parse_chain("~P => P => CONTRA"),
            Err(ChainError::Semantics(_))
        ));
        assert!(matches!(
            parse_chain("~P => Q & ~Q"),
            Err(ChainError::Semantics(_))
        ));
    }

    #[test]
    fn normal_form() {
        assert_eq!(
            normalize("  ~ P<=>Q1   =>P&~ P ").unwrap(),
            "~P <=> Q1 => P & ~P"
        );
    }

    #[test]
    fn scripts() {
        let s = "# header\n~P => Q => CONTRA\n\n~A <=> B => A  # trailing\n";
        let chains = parse_script(s).unwrap();
        assert_eq!(chains.len(), 2);
        assert_eq!(chains[1].target, "A");
        let e = parse_script("~P => CONTRA\nbad").unwrap_err();
        assert!(matches!(e, ChainError::Script { line: 2, .. }));
    }
}
