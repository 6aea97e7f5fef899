//! The scheme catalog: named formula templates over placeholder atoms, and
//! capture-avoiding instantiation.
//!
//! Placeholders have arity 0 (a proposition) or arity 1 (a predicate with one
//! designated hole variable). An arity-1 argument need not use its hole; that
//! is how a proposition is plugged into a predicate slot, e.g. CD with
//! `Q := A` yields `forall x. (P(x) | exists x. A) -> ...`.

use super::{fresh_name, parse_formula, substitute, Formula, Term};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Identifiers for the principle schemata, the reconstructed WGMP, and the
/// alternative forms of DP and HE used by the equivalence proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemeId {
    Dne,
    Efq,
    Lem,
    Wlem,
    Dgp,
    Dp,
    He,
    Gmp,
    Wgmp,
    Glpo,
    Glpoa,
    Dnsu,
    Dnse,
    Cd,
    Ip,
    DpAlt,
    HeAlt,
}

impl SchemeId {
    pub const ALL: [SchemeId; 17] = [
        SchemeId::Dne,
        SchemeId::Efq,
        SchemeId::Lem,
        SchemeId::Wlem,
        SchemeId::Dgp,
        SchemeId::Dp,
        SchemeId::He,
        SchemeId::Gmp,
        SchemeId::Wgmp,
        SchemeId::Glpo,
        SchemeId::Glpoa,
        SchemeId::Dnsu,
        SchemeId::Dnse,
        SchemeId::Cd,
        SchemeId::Ip,
        SchemeId::DpAlt,
        SchemeId::HeAlt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchemeId::Dne => "DNE",
            SchemeId::Efq => "EFQ",
            SchemeId::Lem => "LEM",
            SchemeId::Wlem => "WLEM",
            SchemeId::Dgp => "DGP",
            SchemeId::Dp => "DP",
            SchemeId::He => "HE",
            SchemeId::Gmp => "GMP",
            SchemeId::Wgmp => "WGMP",
            SchemeId::Glpo => "GLPO",
            SchemeId::Glpoa => "GLPOA",
            SchemeId::Dnsu => "DNSU",
            SchemeId::Dnse => "DNSE",
            SchemeId::Cd => "CD",
            SchemeId::Ip => "IP",
            SchemeId::DpAlt => "DP-ALT",
            SchemeId::HeAlt => "HE-ALT",
        }
    }

    pub fn parse(text: &str) -> Option<SchemeId> {
        SchemeId::ALL.iter().copied().find(|s| s.name() == text)
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A placeholder of a scheme template: its atom name in the template and its
/// arity (0 or 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placeholder {
    pub name: &'static str,
    pub arity: u8,
}

/// A scheme definition: identifier, placeholders, and the template formula,
/// in which each placeholder occurs as an atom of its arity.
#[derive(Debug, Clone)]
pub struct SchemeDef {
    pub id: SchemeId,
    pub placeholders: Vec<Placeholder>,
    pub template: Formula,
}

fn defs() -> &'static Vec<SchemeDef> {
    static DEFS: OnceLock<Vec<SchemeDef>> = OnceLock::new();
    DEFS.get_or_init(|| {
        let p0 = |name| Placeholder { name, arity: 0 };
        let p1 = |name| Placeholder { name, arity: 1 };
        let def = |id, placeholders: Vec<Placeholder>, text: &str| SchemeDef {
            id,
            placeholders,
            template: parse_formula(text).expect("scheme template"),
        };
        vec![
            def(SchemeId::Dne, vec![p0("A")], "~~A -> A"),
            def(SchemeId::Efq, vec![p0("A")], "false -> A"),
            def(SchemeId::Lem, vec![p0("A")], "A | ~A"),
            def(SchemeId::Wlem, vec![p0("A")], "~A | ~~A"),
            def(SchemeId::Dgp, vec![p0("A"), p0("B")], "(A -> B) | (B -> A)"),
            def(SchemeId::Dp, vec![p1("P")], "exists y. (P(y) -> forall x. P(x))"),
            def(SchemeId::He, vec![p1("P")], "exists y. ((exists x. P(x)) -> P(y))"),
            def(
                SchemeId::Gmp,
                vec![p1("P")],
                "~(forall x. P(x)) -> exists x. ~P(x)",
            ),
            def(
                SchemeId::Wgmp,
                vec![p1("P")],
                "~(forall x. P(x)) -> ~~(exists x. ~P(x))",
            ),
            def(
                SchemeId::Glpo,
                vec![p1("P")],
                "(forall x. ~P(x)) | (exists x. P(x))",
            ),
            def(
                SchemeId::Glpoa,
                vec![p1("P")],
                "(forall x. P(x)) | (exists x. ~P(x))",
            ),
            def(
                SchemeId::Dnsu,
                vec![p1("P")],
                "(forall x. ~~P(x)) -> ~~(forall x. P(x))",
            ),
            def(
                SchemeId::Dnse,
                vec![p1("P")],
                "~~(exists x. P(x)) -> exists x. ~~P(x)",
            ),
            def(
                SchemeId::Cd,
                vec![p1("P"), p1("Q")],
                "(forall x. (P(x) | (exists x. Q(x)))) -> (forall x. P(x)) | (exists x. Q(x))",
            ),
            def(
                SchemeId::Ip,
                vec![p1("P"), p1("Q")],
                "((exists x. Q(x)) -> exists x. P(x)) -> exists x. ((exists x. Q(x)) -> P(x))",
            ),
            def(
                SchemeId::DpAlt,
                vec![p1("P")],
                "exists y. forall x. (P(y) -> P(x))",
            ),
            def(
                SchemeId::HeAlt,
                vec![p1("P")],
                "exists y. forall x. (P(x) -> P(y))",
            ),
        ]
    })
}

/// Look up a scheme definition.
pub fn scheme(id: SchemeId) -> &'static SchemeDef {
    defs().iter().find(|d| d.id == id).expect("scheme in catalog")
}

/// All scheme ids in catalog order.
pub fn scheme_ids() -> impl Iterator<Item = SchemeId> {
    SchemeId::ALL.into_iter()
}

/// An argument for one placeholder: a formula for arity 0, or a formula with
/// one designated hole variable for arity 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemeArg {
    Prop(Formula),
    Pred { hole: String, body: Formula },
}

impl SchemeArg {
    /// Free variables of the argument, the hole excluded.
    fn outer_free_vars(&self) -> BTreeSet<String> {
        match self {
            SchemeArg::Prop(f) => f.free_vars(),
            SchemeArg::Pred { hole, body } => {
                let mut fv = body.free_vars();
                fv.remove(hole);
                fv
            }
        }
    }
}

/// A scheme paired with arguments for each placeholder, in placeholder order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeInstance {
    pub id: SchemeId,
    pub args: Vec<SchemeArg>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstantiateError {
    #[error("scheme {id} takes {want} arguments, got {got}")]
    ArgCount { id: SchemeId, want: usize, got: usize },
    #[error("argument for placeholder '{name}' of {id} has the wrong arity")]
    ArityMismatch { id: SchemeId, name: &'static str },
}

impl SchemeInstance {
    pub fn new(id: SchemeId, args: Vec<SchemeArg>) -> SchemeInstance {
        SchemeInstance { id, args }
    }

    /// The instance for a scheme applied to its own placeholder atoms.
    pub fn generic(id: SchemeId) -> SchemeInstance {
        let def = scheme(id);
        let args = def
            .placeholders
            .iter()
            .map(|p| match p.arity {
                0 => SchemeArg::Prop(Formula::atom0(p.name)),
                _ => SchemeArg::Pred {
                    hole: "x".to_string(),
                    body: Formula::atom1(p.name, Term::var("x")),
                },
            })
            .collect();
        SchemeInstance { id, args }
    }

    /// Replace every placeholder occurrence in the template by its argument.
    /// Bound variables of the template are renamed away from the free
    /// variables of the arguments, so instantiation never captures.
    pub fn instantiate(&self) -> Result<Formula, InstantiateError> {
        let def = scheme(self.id);
        if self.args.len() != def.placeholders.len() {
            return Err(InstantiateError::ArgCount {
                id: self.id,
                want: def.placeholders.len(),
                got: self.args.len(),
            });
        }
        let mut avoid = BTreeSet::new();
        for (ph, arg) in def.placeholders.iter().zip(&self.args) {
            match (ph.arity, arg) {
                (0, SchemeArg::Prop(_)) | (1, SchemeArg::Pred { .. }) => {}
                _ => {
                    return Err(InstantiateError::ArityMismatch {
                        id: self.id,
                        name: ph.name,
                    })
                }
            }
            avoid.extend(arg.outer_free_vars());
        }
        Ok(self.replace(&def.template, &avoid))
    }

    fn replace(&self, template: &Formula, avoid: &BTreeSet<String>) -> Formula {
        let def = scheme(self.id);
        match template {
            Formula::Bottom => Formula::Bottom,
            Formula::Atom(name, args) => {
                match def.placeholders.iter().position(|p| p.name == name) {
                    Some(i) => match (&self.args[i], args.first()) {
                        (SchemeArg::Prop(f), _) => f.clone(),
                        (SchemeArg::Pred { hole, body }, Some(t)) => substitute(body, hole, t),
                        (SchemeArg::Pred { hole, body }, None) => {
                            // Defensive: an arity-1 placeholder always carries
                            // a term in a well-formed template.
                            substitute(body, hole, &Term::Var(hole.clone()))
                        }
                    },
                    None => template.clone(),
                }
            }
            Formula::Implies(a, b) => {
                Formula::implies(self.replace(a, avoid), self.replace(b, avoid))
            }
            Formula::And(a, b) => Formula::and(self.replace(a, avoid), self.replace(b, avoid)),
            Formula::Or(a, b) => Formula::or(self.replace(a, avoid), self.replace(b, avoid)),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let (v2, body2) = if avoid.contains(v) {
                    let mut taken = avoid.clone();
                    taken.extend(body.free_vars());
                    let fresh = fresh_name(v, &taken);
                    let renamed = substitute(body, v, &Term::Var(fresh.clone()));
                    (fresh, renamed)
                } else {
                    (v.clone(), body.as_ref().clone())
                };
                let inner = self.replace(&body2, avoid);
                match template {
                    Formula::Forall(..) => Formula::Forall(v2, Box::new(inner)),
                    _ => Formula::Exists(v2, Box::new(inner)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::alpha_equal;
    use super::*;

    #[test]
    fn templates_match_catalog() {
        assert_eq!(scheme(SchemeId::Wlem).template.to_string(), "~A | ~~A");
        assert_eq!(
            scheme(SchemeId::Dp).template.to_string(),
            "exists y. (P(y) -> forall x. P(x))"
        );
        assert_eq!(
            scheme(SchemeId::Wgmp).template.to_string(),
            "~(forall x. P(x)) -> ~~(exists x. ~P(x))"
        );
    }

    #[test]
    fn generic_instance_is_template() {
        for id in scheme_ids() {
            let inst = SchemeInstance::generic(id).instantiate().unwrap();
            assert!(
                alpha_equal(&inst, &scheme(id).template),
                "{id}: {inst} vs {}",
                scheme(id).template
            );
        }
    }

    #[test]
    fn lem_with_predicate_argument() {
        let inst = SchemeInstance::new(
            SchemeId::Lem,
            vec![SchemeArg::Prop(parse_formula("P(x)").unwrap())],
        );
        let got = inst.instantiate().unwrap();
        assert_eq!(got, parse_formula("P(x) | ~P(x)").unwrap());
    }

    #[test]
    fn dp_with_compound_predicate() {
        let inst = SchemeInstance::new(
            SchemeId::Dp,
            vec![SchemeArg::Pred {
                hole: "z".into(),
                body: parse_formula("(D(z) -> A) & (~D(z) -> B)").unwrap(),
            }],
        );
        let got = inst.instantiate().unwrap();
        let want = parse_formula(
            "exists y. ((D(y) -> A) & (~D(y) -> B) -> forall x. ((D(x) -> A) & (~D(x) -> B)))",
        )
        .unwrap();
        assert!(alpha_equal(&got, &want), "{got}");
    }

    #[test]
    fn cd_with_proposition_argument() {
        // Hole-unused argument plugs a proposition into the predicate slot.
        let inst = SchemeInstance::new(
            SchemeId::Cd,
            vec![
                SchemeArg::Pred { hole: "z".into(), body: parse_formula("P(z)").unwrap() },
                SchemeArg::Pred { hole: "z".into(), body: parse_formula("A").unwrap() },
            ],
        );
        let got = inst.instantiate().unwrap();
        let want =
            parse_formula("(forall x. (P(x) | (exists x. A))) -> (forall x. P(x)) | (exists x. A)")
                .unwrap();
        assert!(alpha_equal(&got, &want), "{got}");
    }

    #[test]
    fn instantiation_renames_captured_binders() {
        // DP over a body with a stray free x: the template's forall x must
        // not capture it.
        let inst = SchemeInstance::new(
            SchemeId::Dp,
            vec![SchemeArg::Pred {
                hole: "z".into(),
                body: parse_formula("Q(z) & R(x)").unwrap(),
            }],
        );
        let got = inst.instantiate().unwrap();
        let want =
            parse_formula("exists y. (Q(y) & R(x) -> forall w. (Q(w) & R(x)))").unwrap();
        assert!(alpha_equal(&got, &want), "{got}");
        assert_eq!(
            got.free_vars().into_iter().collect::<Vec<_>>(),
            vec!["x".to_string()]
        );
    }

    #[test]
    fn closedness_tracks_outer_free_vars() {
        let closed = SchemeInstance::new(
            SchemeId::Lem,
            vec![SchemeArg::Prop(parse_formula("exists x. P(x)").unwrap())],
        );
        assert!(closed.instantiate().unwrap().free_vars().is_empty());
        let open = SchemeInstance::new(
            SchemeId::Lem,
            vec![SchemeArg::Prop(parse_formula("P(x)").unwrap())],
        );
        assert!(!open.instantiate().unwrap().free_vars().is_empty());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let inst = SchemeInstance::new(
            SchemeId::Dp,
            vec![SchemeArg::Prop(parse_formula("A").unwrap())],
        );
        assert!(inst.instantiate().is_err());
    }
}
