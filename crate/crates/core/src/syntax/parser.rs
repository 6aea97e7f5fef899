//! Recursive-descent parser for the ASCII formula grammar:
//!
//! ```text
//! formula := quant | impl
//! quant   := ("forall" | "exists") var "." formula
//! impl    := disj [ "->" formula ]          (right-associative)
//! disj    := conj { "|" conj }
//! conj    := neg  { "&" neg }
//! neg     := "~" neg | atom
//! atom    := "false" | ident | ident "(" term ")" | "(" formula ")"
//! term    := var | nat-literal
//! ```
//!
//! Precedence `~ > & > | > ->`; quantifier scope extends maximally right.

use super::{Formula, Term};
use std::collections::BTreeMap;
use thiserror::Error;

/// Predicate arities seen so far; shared across parses to keep arity use
/// globally consistent within a file or corpus.
pub type Signature = BTreeMap<String, usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: predicate '{name}' used with arity {got}, previously {want}")]
    Arity {
        line: usize,
        col: usize,
        name: String,
        got: usize,
        want: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Dot,
    Arrow,
    Pipe,
    Amp,
    Tilde,
    Ident(String),
    Nat(u32),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let (line, col) = (self.line, self.col);
            match c {
                b' ' | b'\t' | b'\r' => self.bump(),
                b'\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.col = 1;
                }
                b'(' => {
                    out.push((Tok::LParen, line, col));
                    self.bump();
                }
                b')' => {
                    out.push((Tok::RParen, line, col));
                    self.bump();
                }
                b'.' => {
                    out.push((Tok::Dot, line, col));
                    self.bump();
                }
                b'|' => {
                    out.push((Tok::Pipe, line, col));
                    self.bump();
                }
                b'&' => {
                    out.push((Tok::Amp, line, col));
                    self.bump();
                }
                b'~' => {
                    out.push((Tok::Tilde, line, col));
                    self.bump();
                }
                b'-' => {
                    self.bump();
                    if self.pos < self.src.len() && self.src[self.pos] == b'>' {
                        self.bump();
                        out.push((Tok::Arrow, line, col));
                    } else {
                        return Err(ParseError::Syntax {
                            line,
                            col,
                            msg: "expected '>' after '-'".into(),
                        });
                    }
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.bump();
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n = text.parse::<u32>().map_err(|_| ParseError::Syntax {
                        line,
                        col,
                        msg: format!("constant index '{text}' out of range"),
                    })?;
                    out.push((Tok::Nat(n), line, col));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_'
                            || self.src[self.pos] == b'\'')
                    {
                        self.bump();
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), line, col));
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        msg: format!("unexpected character '{}'", other as char),
                    });
                }
            }
        }
        Ok(out)
    }

    fn bump(&mut self) {
        self.pos += 1;
        self.col += 1;
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    sig: &'a mut Signature,
    bound: Vec<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::Syntax { line, col, msg: msg.into() }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err(format!("expected {what}")))
            }
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Ident(kw)) if kw == "forall" || kw == "exists" => {
                let forall = kw == "forall";
                self.next();
                let var = match self.next() {
                    Some(Tok::Ident(v)) => v,
                    _ => return Err(self.err("expected variable after quantifier")),
                };
                self.expect(Tok::Dot, "'.' after quantified variable")?;
                self.bound.push(var.clone());
                let body = self.formula()?;
                self.bound.pop();
                Ok(if forall {
                    Formula::Forall(var, Box::new(body))
                } else {
                    Formula::Exists(var, Box::new(body))
                })
            }
            _ => self.impl_(),
        }
    }

    fn impl_(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disj()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.next();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conj()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.next();
            let rhs = self.conj()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.neg()?;
        while self.peek() == Some(&Tok::Amp) {
            self.next();
            let rhs = self.neg()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<Formula, ParseError> {
        if self.peek() == Some(&Tok::Tilde) {
            self.next();
            let inner = self.neg()?;
            Ok(Formula::not(inner))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::LParen) => {
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Ident(name)) if name == "false" => Ok(Formula::Bottom),
            Some(Tok::Ident(name)) if name == "forall" || name == "exists" => {
                Err(ParseError::Syntax {
                    line,
                    col,
                    msg: "quantifier must be parenthesized here".into(),
                })
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.next();
                    let arg = self.term()?;
                    self.expect(Tok::RParen, "')' after predicate argument")?;
                    if self.bound.iter().any(|b| *b == name) {
                        return Err(ParseError::Syntax {
                            line,
                            col,
                            msg: format!("bound variable '{name}' used as a predicate"),
                        });
                    }
                    self.check_arity(&name, 1, line, col)?;
                    Ok(Formula::Atom(name, vec![arg]))
                } else {
                    if self.bound.iter().any(|b| *b == name) {
                        return Err(ParseError::Syntax {
                            line,
                            col,
                            msg: format!("bound variable '{name}' used as a proposition"),
                        });
                    }
                    self.check_arity(&name, 0, line, col)?;
                    Ok(Formula::Atom(name, vec![]))
                }
            }
            _ => Err(ParseError::Syntax { line, col, msg: "expected a formula".into() }),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::Ident(v)) => Ok(Term::Var(v)),
            Some(Tok::Nat(n)) => Ok(Term::Const(n)),
            _ => Err(ParseError::Syntax { line, col, msg: "expected a term".into() }),
        }
    }

    fn check_arity(
        &mut self,
        name: &str,
        got: usize,
        line: usize,
        col: usize,
    ) -> Result<(), ParseError> {
        match self.sig.get(name) {
            Some(&want) if want != got => Err(ParseError::Arity {
                line,
                col,
                name: name.to_string(),
                got,
                want,
            }),
            Some(_) => Ok(()),
            None => {
                self.sig.insert(name.to_string(), got);
                Ok(())
            }
        }
    }
}

/// Parse a formula with a private signature.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut sig = Signature::new();
    parse_formula_with(text, &mut sig)
}

/// Parse a formula, checking predicate arities against (and extending) the
/// given signature.
pub fn parse_formula_with(text: &str, sig: &mut Signature) -> Result<Formula, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0, sig, bound: Vec::new() };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

/// Parse a standalone term (a variable name or a constant index).
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut sig = Signature::new();
    let mut p = Parser { toks, pos: 0, sig: &mut sig, bound: Vec::new() };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after term"));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::super::{alpha_equal, Formula, Term};
    use super::*;

    #[test]
    fn parses_dp_template_body() {
        let f = parse_formula("exists y. (P(y) -> forall x. P(x))").unwrap();
        let want = Formula::exists(
            "y",
            Formula::implies(
                Formula::atom1("P", Term::var("y")),
                Formula::forall("x", Formula::atom1("P", Term::var("x"))),
            ),
        );
        assert_eq!(f, want);
    }

    #[test]
    fn parses_tt_dx_conclusion() {
        let f = parse_formula("forall x. (D(x) | ~D(x))").unwrap();
        let want = Formula::forall(
            "x",
            Formula::or(
                Formula::atom1("D", Term::var("x")),
                Formula::not(Formula::atom1("D", Term::var("x"))),
            ),
        );
        assert_eq!(f, want);
    }

    #[test]
    fn precedence_and_quantifier_scope() {
        // ~ > & > | > ->, quantifier maximal right
        let f = parse_formula("~A & B | C -> D").unwrap();
        let want = Formula::implies(
            Formula::or(
                Formula::and(Formula::not(Formula::atom0("A")), Formula::atom0("B")),
                Formula::atom0("C"),
            ),
            Formula::atom0("D"),
        );
        assert_eq!(f, want);

        let g = parse_formula("forall x. P(x) -> A").unwrap();
        assert!(matches!(g, Formula::Forall(..)));
    }

    #[test]
    fn arrow_right_associative() {
        let f = parse_formula("A -> B -> C").unwrap();
        let want = Formula::implies(
            Formula::atom0("A"),
            Formula::implies(Formula::atom0("B"), Formula::atom0("C")),
        );
        assert_eq!(f, want);
    }

    #[test]
    fn arity_mismatch_reported() {
        let mut sig = Signature::new();
        parse_formula_with("P(x)", &mut sig).unwrap();
        let err = parse_formula_with("P & Q", &mut sig).unwrap_err();
        assert!(matches!(err, ParseError::Arity { .. }), "{err}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_formula("A ->\n  )").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bound_variable_not_a_proposition() {
        assert!(parse_formula("forall x. (P(x) | x)").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "exists y. (P(y) -> forall x. P(x))",
            "~~(exists x. P(x)) -> exists x. ~~P(x)",
            "(forall x. (P(x) | (exists x. Q(x)))) -> (forall x. P(x)) | (exists x. Q(x))",
            "(A -> B) | (B -> A)",
            "~A & ~(B | C)",
            "(D(0) -> A) & (~D(1) -> B)",
            "A & (B & C)",
        ] {
            let f = parse_formula(text).unwrap();
            let printed = f.to_string();
            let g = parse_formula(&printed).unwrap();
            assert!(alpha_equal(&f, &g), "{text} -> {printed}");
        }
    }
}
