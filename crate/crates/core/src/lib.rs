//! Proofs by satisfiability for rewriting-based systems.
//!
//! A (conditional) term rewriting system is compiled into a many-sorted
//! first-order theory whose least Herbrand model captures the reachability
//! relations of the system.  Program properties are first-order sentences
//! read in that initial model.  A property is disproved (or, by double
//! negation, proved) by finding a finite sorted model of the theory plus
//! the negated property, provided two semantic preconditions hold:
//!
//! * the interpretation homomorphism is surjective on every sort that is
//!   universally quantified in the refuted sentence, and
//! * every predicate under a negative literal is covered by a theory of
//!   forbidden atoms that the model satisfies.
//!
//! The crate provides the term/formula infrastructure ([`term`], [`fol`]),
//! theory generation ([`theory`], [`surjectivity`], [`closure`]), a finite
//! model finder with exact evaluation ([`model`]), a Presburger backend for
//! structures whose `Nat` sort is the true naturals ([`lia`]), refutation
//! witness synthesis ([`witness`]) and the end-to-end drivers ([`pipeline`]).

pub mod closure;
pub mod error;
pub mod fol;
pub mod lia;
pub mod model;
pub mod parse;
pub mod pipeline;
pub mod surjectivity;
pub mod term;
pub mod theory;
pub mod witness;

pub use closure::{deductive_closure, negative_theory, GroundAtomSet, NegativeTheory};
pub use error::{Error, Result};
pub use fol::{
    negate, quantifier_analysis, relevant_sorts, skolemize, to_prenex, Atom, Formula, Literal,
    PrenexSentence, Quantifier, QuantifierAnalysis, SkolemizedSentence,
};
pub use lia::{decide, evaluate_mixed, grid_search_linear, LinFormula, PresburgerSentence};
pub use model::{
    check_model, evaluate, find_model, NatMode, SearchConfig, SearchOutcome, SortedStructure,
    Valuation,
};
pub use parse::{parse_formula, parse_spec, parse_structure};
pub use pipeline::{
    disprove, prove_by_sat, run_goal_table, Certificate, Goal, Job, Mode, PropertyInput, Verdict,
};
pub use surjectivity::{suh_distinct, suh_ground, suh_terms, SurjKind, SurjectivityTheory};
pub use term::{ground_terms, Rule, RewriteSpec, Signature, Sort, Substitution, Term};
pub use theory::{
    generate_nstep_theory, generate_rewrite_theory, generate_topmost_theory, instantiate_property,
    PropertyTemplate, Theory,
};
pub use witness::{ground_value_map, refutation_witnesses, surjectivity_report, GroundValueMap, WitnessSet};
