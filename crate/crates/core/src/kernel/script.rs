//! The proof-script format: s-expressions, one claim per file.
//!
//! ```text
//! (claim :id "dne-lem" :premises (DNE) :tt false :target LEM
//!   (proof
//!     (imp-e :concl "A | ~A"
//!       (scheme DNE (A "A | ~A") :concl "~~(A | ~A) -> (A | ~A)")
//!       ...)))
//! ```
//!
//! Node forms: `assume`, `imp-i`, `imp-e`, `and-i`, `and-e-l`, `and-e-r`,
//! `or-i-l`, `or-i-r`, `or-e`, `forall-i`, `forall-e`, `exists-i`,
//! `exists-e`, `scheme`, `tt-d0`, `tt-nd1`, `tt-dx`. Every node carries its
//! conclusion in `:concl`. Lines starting with `;` are comments.

use super::{ProofNode, ReductionClaim, Rule, TtRule};
use crate::syntax::{
    parse_formula_with, parse_term, scheme, ParseError, SchemeArg, SchemeId, SchemeInstance,
    Signature,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScriptError {
    #[error("script syntax: {0}")]
    Sexp(String),
    #[error("formula in script: {0}")]
    Formula(#[from] ParseError),
    #[error("{0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Atom(String),
    Str(String),
    List(Vec<Sexp>),
}

fn tokenize(text: &str) -> Result<Vec<String>, ScriptError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ';' => {
                for d in chars.by_ref() {
                    if d == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' => {
                chars.next();
                toks.push(c.to_string());
            }
            '"' => {
                chars.next();
                let mut s = String::from("\"");
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some(d) => s.push(d),
                        None => return Err(ScriptError::Sexp("unterminated string".into())),
                    }
                }
                toks.push(s);
            }
            _ => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_whitespace() || d == '(' || d == ')' || d == '"' || d == ';' {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                toks.push(s);
            }
        }
    }
    Ok(toks)
}

fn parse_sexp(toks: &[String], pos: &mut usize) -> Result<Sexp, ScriptError> {
    match toks.get(*pos) {
        None => Err(ScriptError::Sexp("unexpected end of input".into())),
        Some(t) if t == "(" => {
            *pos += 1;
            let mut items = Vec::new();
            loop {
                match toks.get(*pos) {
                    Some(t) if t == ")" => {
                        *pos += 1;
                        return Ok(Sexp::List(items));
                    }
                    Some(_) => items.push(parse_sexp(toks, pos)?),
                    None => return Err(ScriptError::Sexp("unclosed '('".into())),
                }
            }
        }
        Some(t) if t == ")" => Err(ScriptError::Sexp("unexpected ')'".into())),
        Some(t) => {
            *pos += 1;
            if let Some(stripped) = t.strip_prefix('"') {
                Ok(Sexp::Str(stripped.to_string()))
            } else {
                Ok(Sexp::Atom(t.clone()))
            }
        }
    }
}

fn scheme_id(text: &str) -> Result<SchemeId, ScriptError> {
    SchemeId::parse(text)
        .ok_or_else(|| ScriptError::Shape(format!("unknown scheme id '{text}'")))
}

/// Parse one claim file. `fallback_id` (usually the file stem) is used when
/// the claim omits `:id`.
pub fn parse_claim(text: &str, fallback_id: &str) -> Result<ReductionClaim, ScriptError> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let sexp = parse_sexp(&toks, &mut pos)?;
    if pos != toks.len() {
        return Err(ScriptError::Sexp("trailing input after claim".into()));
    }
    let items = match sexp {
        Sexp::List(items) => items,
        _ => return Err(ScriptError::Shape("claim must be a list".into())),
    };
    match items.first() {
        Some(Sexp::Atom(head)) if head == "claim" => {}
        _ => return Err(ScriptError::Shape("expected (claim ...)".into())),
    }

    let mut id = fallback_id.to_string();
    let mut premises = std::collections::BTreeSet::new();
    let mut tt = false;
    let mut target = None;
    let mut proof = None;
    let mut sig = Signature::new();

    let mut i = 1;
    while i < items.len() {
        match &items[i] {
            Sexp::Atom(kw) if kw == ":id" => {
                id = expect_str(items.get(i + 1), ":id")?;
                i += 2;
            }
            Sexp::Atom(kw) if kw == ":premises" => {
                match items.get(i + 1) {
                    Some(Sexp::List(names)) => {
                        for n in names {
                            match n {
                                Sexp::Atom(a) => {
                                    premises.insert(scheme_id(a)?);
                                }
                                _ => {
                                    return Err(ScriptError::Shape(
                                        ":premises entries must be scheme ids".into(),
                                    ))
                                }
                            }
                        }
                    }
                    _ => return Err(ScriptError::Shape(":premises needs a list".into())),
                }
                i += 2;
            }
            Sexp::Atom(kw) if kw == ":tt" => {
                tt = match items.get(i + 1) {
                    Some(Sexp::Atom(a)) if a == "true" => true,
                    Some(Sexp::Atom(a)) if a == "false" => false,
                    _ => return Err(ScriptError::Shape(":tt must be true or false".into())),
                };
                i += 2;
            }
            Sexp::Atom(kw) if kw == ":target" => {
                target = Some(match items.get(i + 1) {
                    Some(Sexp::Atom(a)) => scheme_id(a)?,
                    _ => return Err(ScriptError::Shape(":target needs a scheme id".into())),
                });
                i += 2;
            }
            Sexp::List(inner) => {
                match inner.first() {
                    Some(Sexp::Atom(head)) if head == "proof" => {
                        if inner.len() != 2 {
                            return Err(ScriptError::Shape(
                                "(proof ...) takes exactly one node".into(),
                            ));
                        }
                        proof = Some(parse_node(&inner[1], &mut sig)?);
                    }
                    _ => return Err(ScriptError::Shape("unexpected list in claim".into())),
                }
                i += 1;
            }
            other => {
                return Err(ScriptError::Shape(format!("unexpected claim item {other:?}")))
            }
        }
    }

    Ok(ReductionClaim {
        id,
        premises,
        tt,
        target: target.ok_or_else(|| ScriptError::Shape("claim missing :target".into()))?,
        proof: proof.ok_or_else(|| ScriptError::Shape("claim missing (proof ...)".into()))?,
    })
}

fn expect_str(s: Option<&Sexp>, what: &str) -> Result<String, ScriptError> {
    match s {
        Some(Sexp::Str(v)) => Ok(v.clone()),
        _ => Err(ScriptError::Shape(format!("{what} needs a string"))),
    }
}

struct NodeArgs {
    label: Option<String>,
    discharge: Option<String>,
    discharge2: Option<String>,
    var: Option<String>,
    term: Option<String>,
    concl: Option<String>,
    children: Vec<ProofNode>,
}

fn parse_node(sexp: &Sexp, sig: &mut Signature) -> Result<ProofNode, ScriptError> {
    let items = match sexp {
        Sexp::List(items) => items,
        _ => return Err(ScriptError::Shape("proof node must be a list".into())),
    };
    let head = match items.first() {
        Some(Sexp::Atom(a)) => a.as_str(),
        _ => return Err(ScriptError::Shape("proof node missing rule name".into())),
    };

    if head == "scheme" {
        return parse_scheme_node(items, sig);
    }

    let mut args = NodeArgs {
        label: None,
        discharge: None,
        discharge2: None,
        var: None,
        term: None,
        concl: None,
        children: Vec::new(),
    };
    let mut i = 1;
    while i < items.len() {
        match &items[i] {
            Sexp::Atom(kw) if kw.starts_with(':') => {
                let value = expect_str(items.get(i + 1), kw)?;
                match kw.as_str() {
                    ":label" => args.label = Some(value),
                    ":discharge" => args.discharge = Some(value),
                    ":discharge2" => args.discharge2 = Some(value),
                    ":var" => args.var = Some(value),
                    ":term" => args.term = Some(value),
                    ":concl" => args.concl = Some(value),
                    other => {
                        return Err(ScriptError::Shape(format!("unknown keyword {other}")))
                    }
                }
                i += 2;
            }
            child @ Sexp::List(_) => {
                args.children.push(parse_node(child, sig)?);
                i += 1;
            }
            other => return Err(ScriptError::Shape(format!("unexpected node item {other:?}"))),
        }
    }

    let concl_text = args
        .concl
        .ok_or_else(|| ScriptError::Shape(format!("node '{head}' missing :concl")))?;
    let conclusion = parse_formula_with(&concl_text, sig)?;

    let need = |opt: Option<String>, what: &str| {
        opt.ok_or_else(|| ScriptError::Shape(format!("node '{head}' missing {what}")))
    };
    let term_of = |opt: Option<String>| -> Result<crate::syntax::Term, ScriptError> {
        let text = opt.ok_or_else(|| ScriptError::Shape(format!("node '{head}' missing :term")))?;
        Ok(parse_term(&text)?)
    };

    let rule = match head {
        "assume" => Rule::Assume { label: need(args.label, ":label")? },
        "imp-i" => Rule::ImpI { discharge: need(args.discharge, ":discharge")? },
        "imp-e" => Rule::ImpE,
        "and-i" => Rule::AndI,
        "and-e-l" => Rule::AndE { right: false },
        "and-e-r" => Rule::AndE { right: true },
        "or-i-l" => Rule::OrI { right: false },
        "or-i-r" => Rule::OrI { right: true },
        "or-e" => Rule::OrE {
            left: need(args.discharge, ":discharge")?,
            right: need(args.discharge2, ":discharge2")?,
        },
        "forall-i" => Rule::ForallI { var: need(args.var, ":var")? },
        "forall-e" => Rule::ForallE { term: term_of(args.term)? },
        "exists-i" => Rule::ExistsI { term: term_of(args.term)? },
        "exists-e" => Rule::ExistsE {
            discharge: need(args.discharge, ":discharge")?,
            var: need(args.var, ":var")?,
        },
        "tt-d0" => Rule::Tt(TtRule::D0),
        "tt-nd1" => Rule::Tt(TtRule::NotD1),
        "tt-dx" => Rule::Tt(TtRule::Dx),
        other => return Err(ScriptError::Shape(format!("unknown rule '{other}'"))),
    };

    Ok(ProofNode::new(rule, conclusion, args.children))
}

fn parse_scheme_node(items: &[Sexp], sig: &mut Signature) -> Result<ProofNode, ScriptError> {
    let id = match items.get(1) {
        Some(Sexp::Atom(a)) => scheme_id(a)?,
        _ => return Err(ScriptError::Shape("scheme node needs a scheme id".into())),
    };
    let def = scheme(id);
    let mut named: Vec<(String, SchemeArg)> = Vec::new();
    let mut concl = None;

    let mut i = 2;
    while i < items.len() {
        match &items[i] {
            Sexp::Atom(kw) if kw == ":concl" => {
                concl = Some(expect_str(items.get(i + 1), ":concl")?);
                i += 2;
            }
            Sexp::List(arg) => {
                match arg.as_slice() {
                    [Sexp::Atom(name), Sexp::Str(body)] => {
                        named.push((
                            name.clone(),
                            SchemeArg::Prop(parse_formula_with(body, sig)?),
                        ));
                    }
                    [Sexp::Atom(name), Sexp::Atom(hole), Sexp::Str(body)] => {
                        named.push((
                            name.clone(),
                            SchemeArg::Pred {
                                hole: hole.clone(),
                                body: parse_formula_with(body, sig)?,
                            },
                        ));
                    }
                    _ => {
                        return Err(ScriptError::Shape(
                            "scheme argument must be (NAME \"formula\") or (NAME hole \"formula\")"
                                .into(),
                        ))
                    }
                }
                i += 1;
            }
            other => {
                return Err(ScriptError::Shape(format!("unexpected scheme item {other:?}")))
            }
        }
    }

    let mut ordered = Vec::new();
    for ph in &def.placeholders {
        let found = named.iter().find(|(n, _)| n == ph.name).ok_or_else(|| {
            ScriptError::Shape(format!("scheme {id} missing argument for '{}'", ph.name))
        })?;
        ordered.push(found.1.clone());
    }
    if named.len() != def.placeholders.len() {
        return Err(ScriptError::Shape(format!(
            "scheme {id} takes {} argument(s), got {}",
            def.placeholders.len(),
            named.len()
        )));
    }

    let concl_text =
        concl.ok_or_else(|| ScriptError::Shape("scheme node missing :concl".into()))?;
    let conclusion = parse_formula_with(&concl_text, sig)?;
    Ok(ProofNode::new(
        Rule::Scheme(SchemeInstance::new(id, ordered)),
        conclusion,
        vec![],
    ))
}

/// Render a claim back to script text; stable and parseable, used when
/// freezing generated fixtures in tests.
pub fn claim_to_script(claim: &ReductionClaim) -> String {
    let mut out = String::new();
    out.push_str("(claim\n");
    out.push_str(&format!("  :id \"{}\"\n", claim.id));
    let prem: Vec<&str> = claim.premises.iter().map(|p| p.name()).collect();
    out.push_str(&format!("  :premises ({})\n", prem.join(" ")));
    out.push_str(&format!("  :tt {}\n", claim.tt));
    out.push_str(&format!("  :target {}\n", claim.target));
    out.push_str("  (proof\n");
    write_node(&claim.proof, 4, &mut out);
    out.push_str("))\n");
    out
}

fn write_node(node: &ProofNode, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let head = match &node.rule {
        Rule::Assume { label } => format!("assume :label \"{label}\""),
        Rule::ImpI { discharge } => format!("imp-i :discharge \"{discharge}\""),
        Rule::ImpE => "imp-e".to_string(),
        Rule::AndI => "and-i".to_string(),
        Rule::AndE { right } => {
            if *right { "and-e-r".to_string() } else { "and-e-l".to_string() }
        }
        Rule::OrI { right } => {
            if *right { "or-i-r".to_string() } else { "or-i-l".to_string() }
        }
        Rule::OrE { left, right } => {
            format!("or-e :discharge \"{left}\" :discharge2 \"{right}\"")
        }
        Rule::ForallI { var } => format!("forall-i :var \"{var}\""),
        Rule::ForallE { term } => format!("forall-e :term \"{term}\""),
        Rule::ExistsI { term } => format!("exists-i :term \"{term}\""),
        Rule::ExistsE { discharge, var } => {
            format!("exists-e :discharge \"{discharge}\" :var \"{var}\"")
        }
        Rule::Scheme(inst) => {
            let def = scheme(inst.id);
            let mut s = format!("scheme {}", inst.id);
            for (ph, arg) in def.placeholders.iter().zip(&inst.args) {
                match arg {
                    SchemeArg::Prop(f) => s.push_str(&format!(" ({} \"{f}\")", ph.name)),
                    SchemeArg::Pred { hole, body } => {
                        s.push_str(&format!(" ({} {hole} \"{body}\")", ph.name))
                    }
                }
            }
            s
        }
        Rule::Tt(TtRule::D0) => "tt-d0".to_string(),
        Rule::Tt(TtRule::NotD1) => "tt-nd1".to_string(),
        Rule::Tt(TtRule::Dx) => "tt-dx".to_string(),
    };
    out.push_str(&format!("{pad}({head} :concl \"{}\"", node.conclusion));
    if node.premises.is_empty() {
        out.push(')');
    } else {
        out.push('\n');
        for (i, p) in node.premises.iter().enumerate() {
            write_node(p, indent + 2, out);
            if i + 1 < node.premises.len() {
                out.push('\n');
            }
        }
        out.push(')');
    }
    if indent == 4 {
        out.push('\n');
    }
}

#[cfg(test)]
mod tests {
    use super::super::check_reduction;
    use super::*;

    #[test]
    fn parse_and_check_a_small_claim() {
        let text = r#"
; LEM instantiated at ~A is already WLEM.
(claim :id "lem-wlem" :premises (LEM) :tt false :target WLEM
  (proof
    (scheme LEM (A "~A") :concl "~A | ~~A")))
"#;
        let claim = parse_claim(text, "lem-wlem").unwrap();
        assert_eq!(claim.target, SchemeId::Wlem);
        let report = check_reduction(&claim);
        assert!(report.pass, "{:?}", report.problems);
    }

    #[test]
    fn script_round_trip() {
        let text = r#"
(claim :id "rt" :premises (LEM) :tt false :target WLEM
  (proof (scheme LEM (A "~A") :concl "~A | ~~A")))
"#;
        let claim = parse_claim(text, "rt").unwrap();
        let rendered = claim_to_script(&claim);
        let reparsed = parse_claim(&rendered, "rt").unwrap();
        assert_eq!(claim.proof, reparsed.proof);
        assert_eq!(rendered, claim_to_script(&reparsed));
    }
}
