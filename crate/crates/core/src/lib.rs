//! Additively graceful labelings of signed stars and signed double stars.
//!
//! A signed graph carries `m` positive and `n` negative edges. A vertex
//! labeling `f` into `{0, ..., m + ceil((n + 1) / 2)}` is additively graceful
//! when the differences `|f(u) - f(v)|` over positive edges are exactly
//! `{1, ..., m}` and the sums `f(u) + f(v)` over negative edges are exactly
//! `{1, ..., n}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`graph`], [`labeling`] and [`verify`] hold the data model and the
//!   verifier.
//! * [`families`] builds the parametric stars and double stars.
//! * [`constructions`] contains every explicit labeling formula, keyed by a
//!   stable [`TheoremTag`].
//! * [`search`] is the exhaustive backtracking oracle with symmetry breaking
//!   and equivalence-class counting.
//! * [`classify`] combines the theorem table and the oracle into verdicts and
//!   grid sweeps.

pub mod classify;
pub mod constructions;
mod error;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod search;
pub mod theorem;
pub mod verify;

pub use classify::{classify, ClassifyOptions, Provenance, Verdict, VerdictStatus};
pub use constructions::{construct, ConstructionOutcome};
pub use error::{Error, Result};
pub use families::{
    make_double_star, make_star, pendant_orbits, Config, DoubleStarConfig, FamilyGraph, Orbits,
    StarConfig, VertexRole,
};
pub use graph::{Edge, Sign, SignedGraph};
pub use labeling::{induced_edge_labels, InducedLabels, Labeling, Orientation};
pub use search::{
    canonical_form, count_classes, exhaustive_search, ClassReport, EquivalenceSpec, SearchBudget,
    SearchOutcome,
};
pub use theorem::TheoremTag;
pub use verify::{verify, VerificationReport, Violation};
