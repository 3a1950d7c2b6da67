//! Dempster-Shafer evidence theory on formal concept lattices.
//!
//! Build a [`FormalContext`], enumerate its [`ConceptLattice`], put
//! [`MassFunction`]s on it and read off [`bel`] and [`pl`]; combine
//! independent bodies of evidence with [`combine`]; and check that belief and
//! plausibility are the inner and outer measures of an explicitly constructed
//! probability space with the [`represent`] module.
//!
//! All arithmetic is exact ([`Rational`]).

pub mod cli;
pub mod combine;
pub mod context;
pub mod error;
pub mod evidence;
pub mod golden;
pub mod lattice;
pub mod limits;
pub mod oracle;
pub mod probspace;
pub mod rational;
pub mod report;
pub mod represent;
pub mod sets;

pub use combine::{combine, combine_many, combine_set, CombinationReport};
pub use context::{parse_cxt, parse_json_context, ContextDocument, FormalContext};
pub use error::{Error, Result};
pub use evidence::{bel, belief_table, mass_from_bel_lattice, pl, BeliefTable, MassFunction};
pub use lattice::{ConceptId, ConceptLattice};
pub use limits::Limits;
pub use probspace::ProbabilitySpace;
pub use rational::Rational;
pub use represent::{verify_representation, Construction, VerificationReport};
