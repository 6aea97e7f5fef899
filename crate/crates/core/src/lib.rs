//! Workbench for first-order minimal logic: a natural-deduction proof kernel
//! with axiom-scheme extension rules, Kripke-semantic evaluators (finite
//! models, symbolic infinite chains, and non-full models), and a verifier for
//! the derivability hierarchy between the Drinker Paradox, the schematic form
//! of Hilbert's Epsilon, and related principles.
//!
//! The crate is organized along the main subsystems:
//!
//! * [`syntax`] — terms, formulas, parsing/printing, substitution, and the
//!   scheme catalog (DNE, EFQ, LEM, ..., CD, IP).
//! * [`kernel`] — checking natural-deduction proof trees extended by scheme
//!   rules and the two-termed-logic rules, plus the proof-script corpus.
//! * [`finite`] — finite Kripke models: forcing, exhaustive full-model scheme
//!   checking, the model catalog, and randomized characterization tests.
//! * [`chain`] — symbolic forcing over infinite chain models via integer
//!   difference zones, predicate closures, and countermodel certification.
//! * [`hierarchy`] — assembling the reduction hierarchy from checked proofs
//!   and certified countermodels, with DOT export.

pub mod chain;
pub mod finite;
pub mod hierarchy;
pub mod kernel;
pub mod report;
pub mod syntax;

pub use syntax::{Formula, Term};
