//! Terms, formulas, schemata, parsing/printing, substitution, and scheme
//! instantiation — the shared language of every other module.
//!
//! Negation is sugar: `~f` is represented as `f -> false`, and `false` is an
//! ordinary atom-like constant with no special proof rule (minimal logic).

mod parser;
mod print;
mod scheme;

pub use parser::{parse_formula, parse_formula_with, parse_term, ParseError, Signature};
pub use print::unicode;
pub use scheme::{
    scheme, scheme_ids, Placeholder, SchemeArg, SchemeDef, SchemeId, SchemeInstance,
};

use std::collections::BTreeSet;

/// A first-order term. There are no function symbols: every term is a
/// variable or one of the countably many constants `0, 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(u32),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }
}

/// A formula of first-order minimal logic. Predicate arity is 0 or 1 and is
/// globally consistent per predicate name. `Formula::not` builds the `~`
/// sugar; there is no primitive negation node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bottom,
    Atom(String, Vec<Term>),
    Implies(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom0(name: &str) -> Formula {
        Formula::Atom(name.to_string(), vec![])
    }

    pub fn atom1(name: &str, t: Term) -> Formula {
        Formula::Atom(name.to_string(), vec![t])
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::implies(f, Formula::Bottom)
    }

    pub fn forall(v: &str, f: Formula) -> Formula {
        Formula::Forall(v.to_string(), Box::new(f))
    }

    pub fn exists(v: &str, f: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(f))
    }

    /// The body of a negation, when this formula is one.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(a, b) if **b == Formula::Bottom => Some(a),
            _ => None,
        }
    }

    /// Free variables of the formula.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(_, args) => {
                for t in args {
                    if let Term::Var(v) = t {
                        if !bound.iter().any(|b| b == v) {
                            out.insert(v.clone());
                        }
                    }
                }
            }
            Formula::Implies(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Constants appearing anywhere in the formula.
    pub fn constants(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.visit_terms(&mut |t| {
            if let Term::Const(c) = t {
                out.insert(*c);
            }
        });
        out
    }

    fn visit_terms(&self, f: &mut impl FnMut(&Term)) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(_, args) => args.iter().for_each(&mut *f),
            Formula::Implies(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.visit_terms(f);
                b.visit_terms(f);
            }
            Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit_terms(f),
        }
    }

    /// Predicate names with their arities, in name order.
    pub fn predicates(&self) -> BTreeSet<(String, usize)> {
        let mut out = BTreeSet::new();
        self.visit_atoms(&mut |name, args| {
            out.insert((name.to_string(), args.len()));
        });
        out
    }

    fn visit_atoms(&self, f: &mut impl FnMut(&str, &[Term])) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(name, args) => f(name, args),
            Formula::Implies(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.visit_atoms(f);
                b.visit_atoms(f);
            }
            Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit_atoms(f),
        }
    }

    /// Number of AST nodes; used to pick the smallest class representative.
    pub fn size(&self) -> usize {
        match self {
            Formula::Bottom | Formula::Atom(..) => 1,
            Formula::Implies(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                1 + a.size() + b.size()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.size(),
        }
    }
}

/// Alpha-equivalence: equality up to renaming of bound variables.
pub fn alpha_equal(f: &Formula, g: &Formula) -> bool {
    fn go(f: &Formula, g: &Formula, env: &mut Vec<(String, String)>) -> bool {
        match (f, g) {
            (Formula::Bottom, Formula::Bottom) => true,
            (Formula::Atom(n1, a1), Formula::Atom(n2, a2)) => {
                n1 == n2
                    && a1.len() == a2.len()
                    && a1.iter().zip(a2).all(|(t1, t2)| term_eq(t1, t2, env))
            }
            (Formula::Implies(a1, b1), Formula::Implies(a2, b2))
            | (Formula::And(a1, b1), Formula::And(a2, b2))
            | (Formula::Or(a1, b1), Formula::Or(a2, b2)) => {
                go(a1, a2, env) && go(b1, b2, env)
            }
            (Formula::Forall(v1, f1), Formula::Forall(v2, f2))
            | (Formula::Exists(v1, f1), Formula::Exists(v2, f2)) => {
                env.push((v1.clone(), v2.clone()));
                let r = go(f1, f2, env);
                env.pop();
                r
            }
            _ => false,
        }
    }

    fn term_eq(t1: &Term, t2: &Term, env: &[(String, String)]) -> bool {
        match (t1, t2) {
            (Term::Const(c1), Term::Const(c2)) => c1 == c2,
            (Term::Var(v1), Term::Var(v2)) => {
                // Innermost binder wins on both sides.
                for (b1, b2) in env.iter().rev() {
                    match (b1 == v1, b2 == v2) {
                        (true, true) => return true,
                        (false, false) => continue,
                        _ => return false,
                    }
                }
                v1 == v2
            }
            _ => false,
        }
    }

    go(f, g, &mut Vec::new())
}

/// Capture-avoiding substitution of term `t` for all free occurrences of the
/// variable `v`. Bound variables are renamed (by priming) as needed so that
/// no free variable of `t` is captured.
pub fn substitute(f: &Formula, v: &str, t: &Term) -> Formula {
    let mut avoid = match t {
        Term::Var(name) => {
            let mut s = BTreeSet::new();
            s.insert(name.clone());
            s
        }
        Term::Const(_) => BTreeSet::new(),
    };
    subst_avoiding(f, v, t, &mut avoid)
}

fn subst_avoiding(f: &Formula, v: &str, t: &Term, avoid: &BTreeSet<String>) -> Formula {
    match f {
        Formula::Bottom => Formula::Bottom,
        Formula::Atom(name, args) => Formula::Atom(
            name.clone(),
            args.iter()
                .map(|a| match a {
                    Term::Var(x) if x == v => t.clone(),
                    other => other.clone(),
                })
                .collect(),
        ),
        Formula::Implies(a, b) => Formula::implies(
            subst_avoiding(a, v, t, avoid),
            subst_avoiding(b, v, t, avoid),
        ),
        Formula::And(a, b) => Formula::and(
            subst_avoiding(a, v, t, avoid),
            subst_avoiding(b, v, t, avoid),
        ),
        Formula::Or(a, b) => Formula::or(
            subst_avoiding(a, v, t, avoid),
            subst_avoiding(b, v, t, avoid),
        ),
        Formula::Forall(x, body) => {
            let (x, body) = subst_under_binder(x, body, v, t, avoid);
            Formula::Forall(x, Box::new(body))
        }
        Formula::Exists(x, body) => {
            let (x, body) = subst_under_binder(x, body, v, t, avoid);
            Formula::Exists(x, Box::new(body))
        }
    }
}

fn subst_under_binder(
    x: &str,
    body: &Formula,
    v: &str,
    t: &Term,
    avoid: &BTreeSet<String>,
) -> (String, Formula) {
    if x == v {
        // v is shadowed; nothing to substitute below.
        return (x.to_string(), body.clone());
    }
    if !avoid.contains(x) || !body.free_vars().contains(v) {
        return (x.to_string(), subst_avoiding(body, v, t, avoid));
    }
    // The binder would capture a free variable of t: rename it first.
    let mut taken = body.free_vars();
    taken.extend(avoid.iter().cloned());
    taken.insert(v.to_string());
    let fresh = fresh_name(x, &taken);
    let renamed = subst_avoiding(body, x, &Term::Var(fresh.clone()), &BTreeSet::new());
    (fresh, subst_avoiding(&renamed, v, t, avoid))
}

/// First primed variant of `base` not in `taken`.
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    let mut name = format!("{base}'");
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn negation_is_sugar() {
        assert_eq!(p("~A"), Formula::not(Formula::atom0("A")));
        assert_eq!(p("~~A"), Formula::not(Formula::not(Formula::atom0("A"))));
    }

    #[test]
    fn substitute_free_occurrences() {
        let f = p("P(x)");
        assert_eq!(substitute(&f, "x", &Term::var("y")), p("P(y)"));
        // x bound under the quantifier stays put
        let g = p("exists x. P(x)");
        assert_eq!(substitute(&g, "x", &Term::Const(0)), g);
    }

    #[test]
    fn substitute_avoids_capture() {
        // (forall y. P(y) -> P(x))[x/y] must rename the binder
        let f = p("forall y. (P(y) -> P(x))");
        let got = substitute(&f, "x", &Term::var("y"));
        let want = p("forall y'. (P(y') -> P(y))");
        assert!(alpha_equal(&got, &want), "got {got:?}");
    }

    #[test]
    fn substitution_noop_when_var_absent() {
        let f = p("forall x. (P(x) | Q(y))");
        assert_eq!(substitute(&f, "z", &Term::Const(3)), f);
    }

    #[test]
    fn alpha_equality_basics() {
        assert!(alpha_equal(
            &p("exists y. (P(y) -> forall x. P(x))"),
            &p("exists z. (P(z) -> forall w. P(w))"),
        ));
        assert!(!alpha_equal(&p("P(x)"), &p("P(y)")));
        // DP vs HE templates are distinct
        assert!(!alpha_equal(
            &p("exists y. (P(y) -> forall x. P(x))"),
            &p("exists y. ((exists x. P(x)) -> P(y))"),
        ));
    }

    #[test]
    fn alpha_respects_shadowing() {
        assert!(alpha_equal(
            &p("forall x. forall x. P(x)"),
            &p("forall y. forall z. P(z)"),
        ));
        assert!(!alpha_equal(
            &p("forall x. forall x. P(x)"),
            &p("forall y. forall z. P(y)"),
        ));
    }
}
