//! Natural-deduction proof checking for minimal logic extended by
//! axiom-scheme rules and the two-termed-logic rules D0, ~D1, Dx.
//!
//! Proofs are explicit trees with every node's conclusion written out; the
//! kernel checks, it never searches. Assumptions are discharged by label, in
//! classes: a discharging node closes every open assumption carrying its
//! label, and vacuous discharge is permitted.

mod script;

pub mod corpus;

pub use script::{claim_to_script, parse_claim, ScriptError};

use crate::syntax::{
    alpha_equal, fresh_name, substitute, Formula, SchemeId, SchemeInstance, Term,
};
use std::collections::BTreeSet;
use std::fmt;

/// The two-termed-logic rules of the distinguished predicate D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TtRule {
    /// Concludes `D(0)`.
    D0,
    /// Concludes `~D(1)`.
    NotD1,
    /// Concludes `forall x. (D(x) | ~D(x))`.
    Dx,
}

impl TtRule {
    pub fn conclusion(self) -> Formula {
        let d = |t| Formula::atom1("D", t);
        match self {
            TtRule::D0 => d(Term::Const(0)),
            TtRule::NotD1 => Formula::not(d(Term::Const(1))),
            TtRule::Dx => Formula::forall(
                "x",
                Formula::or(d(Term::var("x")), Formula::not(d(Term::var("x")))),
            ),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TtRule::D0 => "D0",
            TtRule::NotD1 => "~D1",
            TtRule::Dx => "Dx",
        }
    }
}

/// A deduction rule label for one proof-tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Assume { label: String },
    ImpI { discharge: String },
    ImpE,
    AndI,
    AndE { right: bool },
    OrI { right: bool },
    OrE { left: String, right: String },
    ForallI { var: String },
    ForallE { term: Term },
    ExistsI { term: Term },
    ExistsE { discharge: String, var: String },
    Scheme(SchemeInstance),
    Tt(TtRule),
}

/// One node of a natural-deduction derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNode {
    pub rule: Rule,
    pub conclusion: Formula,
    pub premises: Vec<ProofNode>,
}

impl ProofNode {
    pub fn new(rule: Rule, conclusion: Formula, premises: Vec<ProofNode>) -> ProofNode {
        ProofNode { rule, conclusion, premises }
    }
}

/// Which leaf rules a derivation may use.
#[derive(Debug, Clone, Default)]
pub struct Allowed {
    pub schemes: BTreeSet<SchemeId>,
    pub tt: bool,
}

/// A recorded rule failure at one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub msg: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.path, self.msg)
    }
}

/// An assumption left open at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenAssumption {
    pub label: String,
    pub formula: Formula,
    pub path: String,
}

/// Everything the checker found out about a tree. `ok()` means every node's
/// conclusion follows from its premises by its rule, with all discharges and
/// eigenvariable conditions in order and only allowed leaves; open
/// assumptions are reported separately.
#[derive(Debug, Clone, Default)]
pub struct CheckOutcome {
    pub violations: Vec<Violation>,
    pub open_assumptions: Vec<OpenAssumption>,
    pub used_schemes: BTreeSet<SchemeId>,
    pub used_tt: BTreeSet<TtRule>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a proof tree against minimal logic extended by `allowed`.
/// Checking continues past failures so that every violation is reported.
pub fn check_proof(proof: &ProofNode, allowed: &Allowed) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let opens = check_node(proof, &mut Vec::new(), allowed, &mut out);
    out.open_assumptions = opens;
    out
}

fn path_str(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }
}

fn check_node(
    node: &ProofNode,
    path: &mut Vec<usize>,
    allowed: &Allowed,
    out: &mut CheckOutcome,
) -> Vec<OpenAssumption> {
    let mut child_opens: Vec<Vec<OpenAssumption>> = Vec::with_capacity(node.premises.len());
    for (i, premise) in node.premises.iter().enumerate() {
        path.push(i);
        let opens = check_node(premise, path, allowed, out);
        path.pop();
        child_opens.push(opens);
    }

    let here = path_str(path);
    let fail = |msg: String, out: &mut CheckOutcome| {
        out.violations.push(Violation { path: here.clone(), msg });
    };

    let arity_ok = |want: usize, out: &mut CheckOutcome| {
        if node.premises.len() != want {
            out.violations.push(Violation {
                path: here.clone(),
                msg: format!(
                    "rule takes {want} premise(s), found {}",
                    node.premises.len()
                ),
            });
            false
        } else {
            true
        }
    };

    let mut all_opens: Vec<OpenAssumption> = Vec::new();

    match &node.rule {
        Rule::Assume { label } => {
            if !node.premises.is_empty() {
                fail("assumption leaves take no premises".into(), out);
            }
            all_opens.push(OpenAssumption {
                label: label.clone(),
                formula: node.conclusion.clone(),
                path: here.clone(),
            });
        }
        Rule::ImpI { discharge } => {
            if arity_ok(1, out) {
                let mut opens = child_opens.pop().unwrap();
                match &node.conclusion {
                    Formula::Implies(a, b) => {
                        if !alpha_equal(b, &node.premises[0].conclusion) {
                            fail(
                                format!(
                                    "->I consequent mismatch: premise concludes {}",
                                    node.premises[0].conclusion
                                ),
                                out,
                            );
                        }
                        opens.retain(|o| {
                            if o.label == *discharge {
                                if !alpha_equal(&o.formula, a) {
                                    out.violations.push(Violation {
                                        path: here.clone(),
                                        msg: format!(
                                            "discharged assumption '{}' is {} but the antecedent is {}",
                                            o.label, o.formula, a
                                        ),
                                    });
                                }
                                false
                            } else {
                                true
                            }
                        });
                    }
                    other => fail(format!("->I must conclude an implication, got {other}"), out),
                }
                all_opens = opens;
            } else {
                all_opens = child_opens.into_iter().flatten().collect();
            }
        }
        Rule::ImpE => {
            if arity_ok(2, out) {
                match &node.premises[0].conclusion {
                    Formula::Implies(a, b) => {
                        if !alpha_equal(a, &node.premises[1].conclusion) {
                            fail(
                                format!(
                                    "->E antecedent mismatch: wanted {a}, minor premise concludes {}",
                                    node.premises[1].conclusion
                                ),
                                out,
                            );
                        }
                        if !alpha_equal(b, &node.conclusion) {
                            fail(format!("->E should conclude {b}"), out);
                        }
                    }
                    other => fail(format!("->E major premise must be an implication, got {other}"), out),
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::AndI => {
            if arity_ok(2, out) {
                match &node.conclusion {
                    Formula::And(a, b) => {
                        if !alpha_equal(a, &node.premises[0].conclusion)
                            || !alpha_equal(b, &node.premises[1].conclusion)
                        {
                            fail("&I conjunct mismatch".into(), out);
                        }
                    }
                    other => fail(format!("&I must conclude a conjunction, got {other}"), out),
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::AndE { right } => {
            if arity_ok(1, out) {
                match &node.premises[0].conclusion {
                    Formula::And(a, b) => {
                        let want = if *right { b } else { a };
                        if !alpha_equal(want, &node.conclusion) {
                            fail(format!("&E should conclude {want}"), out);
                        }
                    }
                    other => fail(format!("&E premise must be a conjunction, got {other}"), out),
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::OrI { right } => {
            if arity_ok(1, out) {
                match &node.conclusion {
                    Formula::Or(a, b) => {
                        let want = if *right { b } else { a };
                        if !alpha_equal(want, &node.premises[0].conclusion) {
                            fail(
                                format!(
                                    "|I disjunct mismatch: premise concludes {}",
                                    node.premises[0].conclusion
                                ),
                                out,
                            );
                        }
                    }
                    other => fail(format!("|I must conclude a disjunction, got {other}"), out),
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::OrE { left, right } => {
            if arity_ok(3, out) {
                let mut m2 = child_opens.pop().unwrap();
                let mut m1 = child_opens.pop().unwrap();
                let maj = child_opens.pop().unwrap();
                match &node.premises[0].conclusion {
                    Formula::Or(a, b) => {
                        for (minor_ix, (opens, label, case)) in
                            [(&mut m1, left, a), (&mut m2, right, b)].into_iter().enumerate()
                        {
                            let concl = &node.premises[minor_ix + 1].conclusion;
                            if !alpha_equal(concl, &node.conclusion) {
                                out.violations.push(Violation {
                                    path: here.clone(),
                                    msg: format!(
                                        "|E minor premise {} concludes {concl}, expected {}",
                                        minor_ix + 1,
                                        node.conclusion
                                    ),
                                });
                            }
                            opens.retain(|o| {
                                if o.label == *label {
                                    if !alpha_equal(&o.formula, case) {
                                        out.violations.push(Violation {
                                            path: here.clone(),
                                            msg: format!(
                                                "|E discharged assumption '{}' is {} but the case is {}",
                                                o.label, o.formula, case
                                            ),
                                        });
                                    }
                                    false
                                } else {
                                    true
                                }
                            });
                        }
                    }
                    other => {
                        fail(format!("|E major premise must be a disjunction, got {other}"), out)
                    }
                }
                all_opens = maj;
                all_opens.extend(m1);
                all_opens.extend(m2);
            } else {
                all_opens = child_opens.into_iter().flatten().collect();
            }
        }
        Rule::ForallI { var } => {
            if arity_ok(1, out) {
                let opens = child_opens.pop().unwrap();
                match &node.conclusion {
                    Formula::Forall(bound, body) => {
                        let premise = &node.premises[0].conclusion;
                        let mut taken: BTreeSet<String> = premise.free_vars();
                        taken.extend(body.free_vars());
                        taken.insert(var.clone());
                        taken.insert(bound.clone());
                        let z = fresh_name("z", &taken);
                        let lhs = substitute(premise, var, &Term::Var(z.clone()));
                        let rhs = substitute(body, bound, &Term::Var(z));
                        if !alpha_equal(&lhs, &rhs) {
                            fail(
                                format!(
                                    "forall-I: {} does not generalize {premise} over {var}",
                                    node.conclusion
                                ),
                                out,
                            );
                        }
                        for o in &opens {
                            if o.formula.free_vars().contains(var) {
                                out.violations.push(Violation {
                                    path: here.clone(),
                                    msg: format!(
                                        "forall-I eigenvariable '{var}' is free in open assumption '{}' ({})",
                                        o.label, o.formula
                                    ),
                                });
                            }
                        }
                    }
                    other => {
                        fail(format!("forall-I must conclude a universal, got {other}"), out)
                    }
                }
                all_opens = opens;
            } else {
                all_opens = child_opens.into_iter().flatten().collect();
            }
        }
        Rule::ForallE { term } => {
            if arity_ok(1, out) {
                match &node.premises[0].conclusion {
                    Formula::Forall(x, body) => {
                        let want = substitute(body, x, term);
                        if !alpha_equal(&want, &node.conclusion) {
                            fail(format!("forall-E at {term} should conclude {want}"), out);
                        }
                    }
                    other => {
                        fail(format!("forall-E premise must be a universal, got {other}"), out)
                    }
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::ExistsI { term } => {
            if arity_ok(1, out) {
                match &node.conclusion {
                    Formula::Exists(x, body) => {
                        let want = substitute(body, x, term);
                        if !alpha_equal(&want, &node.premises[0].conclusion) {
                            fail(
                                format!(
                                    "exists-I with witness {term} needs premise {want}, found {}",
                                    node.premises[0].conclusion
                                ),
                                out,
                            );
                        }
                    }
                    other => {
                        fail(format!("exists-I must conclude an existential, got {other}"), out)
                    }
                }
            }
            all_opens = child_opens.into_iter().flatten().collect();
        }
        Rule::ExistsE { discharge, var } => {
            if arity_ok(2, out) {
                let mut minor = child_opens.pop().unwrap();
                let maj = child_opens.pop().unwrap();
                match &node.premises[0].conclusion {
                    Formula::Exists(x, phi) => {
                        let expected = substitute(phi, x, &Term::Var(var.clone()));
                        minor.retain(|o| {
                            if o.label == *discharge {
                                if !alpha_equal(&o.formula, &expected) {
                                    out.violations.push(Violation {
                                        path: here.clone(),
                                        msg: format!(
                                            "exists-E discharged assumption '{}' is {} but should be {expected}",
                                            o.label, o.formula
                                        ),
                                    });
                                }
                                false
                            } else {
                                true
                            }
                        });
                        if !alpha_equal(&node.premises[1].conclusion, &node.conclusion) {
                            fail(
                                format!(
                                    "exists-E minor premise concludes {}, expected {}",
                                    node.premises[1].conclusion, node.conclusion
                                ),
                                out,
                            );
                        }
                        if node.conclusion.free_vars().contains(var) {
                            fail(
                                format!("exists-E eigenvariable '{var}' is free in the conclusion"),
                                out,
                            );
                        }
                        if node.premises[0].conclusion.free_vars().contains(var) {
                            fail(
                                format!(
                                    "exists-E eigenvariable '{var}' is free in the major premise"
                                ),
                                out,
                            );
                        }
                        for o in &minor {
                            if o.formula.free_vars().contains(var) {
                                out.violations.push(Violation {
                                    path: here.clone(),
                                    msg: format!(
                                        "exists-E eigenvariable '{var}' is free in open assumption '{}' ({})",
                                        o.label, o.formula
                                    ),
                                });
                            }
                        }
                    }
                    other => fail(
                        format!("exists-E major premise must be an existential, got {other}"),
                        out,
                    ),
                }
                all_opens = maj;
                all_opens.extend(minor);
            } else {
                all_opens = child_opens.into_iter().flatten().collect();
            }
        }
        Rule::Scheme(instance) => {
            if !node.premises.is_empty() {
                fail("scheme rules take no premises".into(), out);
            }
            match instance.instantiate() {
                Ok(f) => {
                    if !alpha_equal(&f, &node.conclusion) {
                        fail(
                            format!(
                                "scheme {} instance is {f}, node concludes {}",
                                instance.id, node.conclusion
                            ),
                            out,
                        );
                    }
                }
                Err(e) => fail(format!("bad scheme instance: {e}"), out),
            }
            if !allowed.schemes.contains(&instance.id) {
                fail(format!("scheme rule {} is not among the premises", instance.id), out);
            }
            out.used_schemes.insert(instance.id);
        }
        Rule::Tt(tt) => {
            if !node.premises.is_empty() {
                fail("TT rules take no premises".into(), out);
            }
            if !alpha_equal(&tt.conclusion(), &node.conclusion) {
                fail(
                    format!("rule {} concludes {}, not {}", tt.name(), tt.conclusion(), node.conclusion),
                    out,
                );
            }
            if !allowed.tt {
                fail(format!("TT rule {} used but TT is not assumed", tt.name()), out);
            }
            out.used_tt.insert(*tt);
        }
    }
    all_opens
}

/// A claim that the target scheme is derivable in minimal logic extended by
/// the premise schemes (and the TT rules when flagged), witnessed by a proof
/// of the target's generic instance.
#[derive(Debug, Clone)]
pub struct ReductionClaim {
    pub id: String,
    pub premises: BTreeSet<SchemeId>,
    pub tt: bool,
    pub target: SchemeId,
    pub proof: ProofNode,
}

/// Result of checking one reduction claim.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub id: String,
    pub premises: BTreeSet<SchemeId>,
    pub tt: bool,
    pub target: SchemeId,
    pub pass: bool,
    pub problems: Vec<String>,
}

impl ClaimReport {
    pub fn headline(&self) -> String {
        let mut lhs: Vec<String> = self.premises.iter().map(|s| s.to_string()).collect();
        if self.tt {
            lhs.push("TT".to_string());
        }
        let lhs = if lhs.is_empty() { "minimal".to_string() } else { lhs.join(", ") };
        format!("{} => {}", lhs, self.target)
    }
}

/// Check a reduction claim: the proof must close, conclude the target's
/// generic instance, and use exactly the claimed premise rules.
pub fn check_reduction(claim: &ReductionClaim) -> ClaimReport {
    let allowed = Allowed { schemes: claim.premises.clone(), tt: claim.tt };
    let outcome = check_proof(&claim.proof, &allowed);
    let mut problems: Vec<String> =
        outcome.violations.iter().map(|v| v.to_string()).collect();
    for open in &outcome.open_assumptions {
        problems.push(format!(
            "open assumption '{}' ({}) at {}",
            open.label, open.formula, open.path
        ));
    }
    let generic = SchemeInstance::generic(claim.target)
        .instantiate()
        .expect("generic instance");
    if !alpha_equal(&claim.proof.conclusion, &generic) {
        problems.push(format!(
            "conclusion {} is not the generic {} instance {generic}",
            claim.proof.conclusion, claim.target
        ));
    }
    for premise in &claim.premises {
        if !outcome.used_schemes.contains(premise) {
            problems.push(format!("claimed premise {premise} is never used"));
        }
    }
    if claim.tt && outcome.used_tt.is_empty() {
        problems.push("TT flagged but no TT rule is used".to_string());
    }
    ClaimReport {
        id: claim.id.clone(),
        premises: claim.premises.clone(),
        tt: claim.tt,
        target: claim.target,
        pass: problems.is_empty(),
        problems,
    }
}

/// Replace the `index`-th scheme leaf (in depth-first order) by an open
/// assumption with the same conclusion. Used by mutation checks: a passing
/// script must stop passing when a scheme leaf is stripped.
pub fn strip_scheme_leaf(proof: &ProofNode, index: usize) -> ProofNode {
    fn go(node: &ProofNode, remaining: &mut isize) -> ProofNode {
        if let Rule::Scheme(_) = node.rule {
            if *remaining == 0 {
                *remaining -= 1;
                return ProofNode::new(
                    Rule::Assume { label: "stripped".to_string() },
                    node.conclusion.clone(),
                    vec![],
                );
            }
            *remaining -= 1;
        }
        ProofNode::new(
            node.rule.clone(),
            node.conclusion.clone(),
            node.premises.iter().map(|p| go(p, remaining)).collect(),
        )
    }
    let mut remaining = index as isize;
    go(proof, &mut remaining)
}

/// Count scheme leaves in depth-first order.
pub fn count_scheme_leaves(proof: &ProofNode) -> usize {
    let own = matches!(proof.rule, Rule::Scheme(_)) as usize;
    own + proof.premises.iter().map(count_scheme_leaves).sum::<usize>()
}

/// Swap the scheme id of the first scheme leaf, keeping its arguments and
/// conclusion. The mutated tree must be rejected.
pub fn swap_first_scheme_leaf(proof: &ProofNode, to: SchemeId) -> ProofNode {
    fn go(node: &ProofNode, to: SchemeId, done: &mut bool) -> ProofNode {
        let rule = match &node.rule {
            Rule::Scheme(inst) if !*done => {
                *done = true;
                Rule::Scheme(SchemeInstance::new(to, inst.args.clone()))
            }
            other => other.clone(),
        };
        ProofNode::new(
            rule,
            node.conclusion.clone(),
            node.premises.iter().map(|p| go(p, to, done)).collect(),
        )
    }
    let mut done = false;
    go(proof, to, &mut done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, SchemeArg};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn assume(label: &str, concl: &str) -> ProofNode {
        ProofNode::new(Rule::Assume { label: label.into() }, f(concl), vec![])
    }

    #[test]
    fn discharge_closes_a_class() {
        // A & A -> A via two assumptions of the same class is not needed;
        // instead check that ->I removes every occurrence of its label.
        let tree = ProofNode::new(
            Rule::ImpI { discharge: "u".into() },
            f("A -> A & A"),
            vec![ProofNode::new(
                Rule::AndI,
                f("A & A"),
                vec![assume("u", "A"), assume("u", "A")],
            )],
        );
        let out = check_proof(&tree, &Allowed::default());
        assert!(out.ok(), "{:?}", out.violations);
        assert!(out.open_assumptions.is_empty());
    }

    #[test]
    fn vacuous_discharge_is_fine() {
        let tree = ProofNode::new(
            Rule::ImpI { discharge: "u".into() },
            f("B -> A"),
            vec![assume("v", "A")],
        );
        let out = check_proof(&tree, &Allowed::default());
        assert!(out.ok());
        assert_eq!(out.open_assumptions.len(), 1);
        assert_eq!(out.open_assumptions[0].label, "v");
    }

    #[test]
    fn fallacious_generalization_from_assumed_lem() {
        // Assuming LEM(Px) and then generalizing violates the eigenvariable
        // condition; using the LEM rule instead is fine.
        let bad = ProofNode::new(
            Rule::ForallI { var: "x".into() },
            f("forall x. (P(x) | ~P(x))"),
            vec![assume("u", "P(x) | ~P(x)")],
        );
        let out = check_proof(&bad, &Allowed::default());
        assert!(!out.ok());
        assert!(out.violations[0].msg.contains("eigenvariable"));

        let lem_leaf = ProofNode::new(
            Rule::Scheme(SchemeInstance::new(
                SchemeId::Lem,
                vec![SchemeArg::Prop(f("P(x)"))],
            )),
            f("P(x) | ~P(x)"),
            vec![],
        );
        let good = ProofNode::new(
            Rule::ForallI { var: "x".into() },
            f("forall x. (P(x) | ~P(x))"),
            vec![lem_leaf],
        );
        let mut allowed = Allowed::default();
        allowed.schemes.insert(SchemeId::Lem);
        let out = check_proof(&good, &allowed);
        assert!(out.ok(), "{:?}", out.violations);
    }

    #[test]
    fn tt_rule_versus_tt_assumption() {
        let dx_leaf = ProofNode::new(Rule::Tt(TtRule::Dx), TtRule::Dx.conclusion(), vec![]);
        let out = check_proof(&dx_leaf, &Allowed { tt: true, ..Default::default() });
        assert!(out.ok());

        // Same conclusion via an assumed Dx-instance under forall-I fails.
        let bad = ProofNode::new(
            Rule::ForallI { var: "x".into() },
            f("forall x. (D(x) | ~D(x))"),
            vec![assume("u", "D(x) | ~D(x)")],
        );
        let out = check_proof(&bad, &Allowed { tt: true, ..Default::default() });
        assert!(!out.ok());
    }

    #[test]
    fn exists_e_eigenvariable_conditions() {
        // Illegal: eigenvariable free in the conclusion.
        let bad = ProofNode::new(
            Rule::ExistsE { discharge: "u".into(), var: "x".into() },
            f("P(x)"),
            vec![assume("e", "exists x. P(x)"), assume("u", "P(x)")],
        );
        let out = check_proof(&bad, &Allowed::default());
        assert!(out
            .violations
            .iter()
            .any(|v| v.msg.contains("free in the conclusion")));
    }

    #[test]
    fn disallowed_scheme_leaf_reported() {
        let leaf = ProofNode::new(
            Rule::Scheme(SchemeInstance::generic(SchemeId::Lem)),
            f("A | ~A"),
            vec![],
        );
        let out = check_proof(&leaf, &Allowed::default());
        assert!(!out.ok());
        assert!(out.violations[0].msg.contains("not among the premises"));
    }

    #[test]
    fn check_reduction_requires_exact_premises() {
        let leaf = ProofNode::new(
            Rule::Scheme(SchemeInstance::new(
                SchemeId::Lem,
                vec![SchemeArg::Prop(f("~A"))],
            )),
            f("~A | ~~A"),
            vec![],
        );
        let claim = ReductionClaim {
            id: "lem-wlem".into(),
            premises: [SchemeId::Lem].into(),
            tt: false,
            target: SchemeId::Wlem,
            proof: leaf.clone(),
        };
        assert!(check_reduction(&claim).pass);

        let unused = ReductionClaim {
            id: "too-many".into(),
            premises: [SchemeId::Lem, SchemeId::Dne].into(),
            tt: false,
            target: SchemeId::Wlem,
            proof: leaf,
        };
        let report = check_reduction(&unused);
        assert!(!report.pass);
        assert!(report.problems.iter().any(|p| p.contains("never used")));
    }
}
