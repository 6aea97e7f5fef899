//! Canonical ASCII printing (the inverse of the parser, up to alpha) and an
//! optional Unicode rendering for reports.

use super::{Formula, Term};
use std::fmt;

const LVL_IMPL: u8 = 0;
const LVL_OR: u8 = 1;
const LVL_AND: u8 = 2;
const LVL_NEG: u8 = 3;

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ascii(self, LVL_IMPL, f)
    }
}

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Bottom | Formula::Atom(..) => 4,
        _ if f.as_negation().is_some() => LVL_NEG,
        Formula::Implies(..) | Formula::Forall(..) | Formula::Exists(..) => LVL_IMPL,
        Formula::Or(..) => LVL_OR,
        Formula::And(..) => LVL_AND,
    }
}

fn write_ascii(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < min {
        out.write_str("(")?;
        write_ascii(f, LVL_IMPL, out)?;
        return out.write_str(")");
    }
    match f {
        Formula::Bottom => out.write_str("false"),
        Formula::Atom(name, args) => {
            out.write_str(name)?;
            if let Some(arg) = args.first() {
                write!(out, "({arg})")?;
            }
            Ok(())
        }
        _ if f.as_negation().is_some() => {
            out.write_str("~")?;
            write_ascii(f.as_negation().unwrap(), LVL_NEG, out)
        }
        Formula::Implies(a, b) => {
            write_ascii(a, LVL_OR, out)?;
            out.write_str(" -> ")?;
            write_ascii(b, LVL_IMPL, out)
        }
        Formula::Or(a, b) => {
            write_ascii(a, LVL_OR, out)?;
            out.write_str(" | ")?;
            write_ascii(b, LVL_AND, out)
        }
        Formula::And(a, b) => {
            write_ascii(a, LVL_AND, out)?;
            out.write_str(" & ")?;
            write_ascii(b, LVL_NEG, out)
        }
        Formula::Forall(v, body) => {
            write!(out, "forall {v}. ")?;
            write_ascii(body, quant_body_level(body), out)
        }
        Formula::Exists(v, body) => {
            write!(out, "exists {v}. ")?;
            write_ascii(body, quant_body_level(body), out)
        }
    }
}

// Chained quantifiers stay bare; binary bodies get explicit parens, which the
// grammar requires of readers anyway whenever the scope is not maximal.
fn quant_body_level(body: &Formula) -> u8 {
    match body {
        Formula::Forall(..) | Formula::Exists(..) => LVL_IMPL,
        _ => LVL_NEG,
    }
}

/// Unicode rendering of a formula; display-only, never accepted as input.
pub fn unicode(f: &Formula) -> String {
    let mut s = String::new();
    uni(f, LVL_IMPL, &mut s);
    s
}

fn uni(f: &Formula, min: u8, out: &mut String) {
    if level(f) < min {
        out.push('(');
        uni(f, LVL_IMPL, out);
        out.push(')');
        return;
    }
    match f {
        Formula::Bottom => out.push('⊥'),
        Formula::Atom(name, args) => {
            out.push_str(name);
            if let Some(arg) = args.first() {
                out.push_str(&format!("({arg})"));
            }
        }
        _ if f.as_negation().is_some() => {
            out.push('¬');
            uni(f.as_negation().unwrap(), LVL_NEG, out);
        }
        Formula::Implies(a, b) => {
            uni(a, LVL_OR, out);
            out.push_str(" → ");
            uni(b, LVL_IMPL, out);
        }
        Formula::Or(a, b) => {
            uni(a, LVL_OR, out);
            out.push_str(" ∨ ");
            uni(b, LVL_AND, out);
        }
        Formula::And(a, b) => {
            uni(a, LVL_AND, out);
            out.push_str(" ∧ ");
            uni(b, LVL_NEG, out);
        }
        Formula::Forall(v, body) => {
            out.push('∀');
            out.push_str(v);
            out.push_str(". ");
            uni(body, quant_body_level(body), out);
        }
        Formula::Exists(v, body) => {
            out.push('∃');
            out.push_str(v);
            out.push_str(". ");
            uni(body, quant_body_level(body), out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_formula;
    use super::*;

    #[test]
    fn resugars_negation() {
        let f = parse_formula("~~(A | ~A)").unwrap();
        assert_eq!(f.to_string(), "~~(A | ~A)");
    }

    #[test]
    fn parenthesizes_quantifier_operands() {
        let f = parse_formula("(forall x. P(x)) -> A").unwrap();
        assert_eq!(f.to_string(), "(forall x. P(x)) -> A");
    }

    #[test]
    fn unicode_rendering() {
        let f = parse_formula("exists y. (P(y) -> forall x. P(x))").unwrap();
        assert_eq!(unicode(&f), "∃y. (P(y) → ∀x. P(x))");
    }
}
