//! A laboratory for pseudo-Boolean VCSP fitness landscapes.
//!
//! The crate builds integer-weighted Boolean valued-constraint-satisfaction
//! instances — most importantly the *controlled doubling* gadget chains whose
//! designated ascents are unique and exponentially long — runs strict local
//! search under several pivot rules, provides brute-force ground truth at
//! desk scale, and validates width evidence (path decompositions, clique
//! minor certificates, exact small-graph pathwidth).
//!
//! Module map:
//! - [`vcsp`] — instances, assignments, fitness evaluation, single-flip deltas.
//! - [`constructions`] — generators for the controlled-doubling chains/gadgets
//!   and the Michel–Scott scope structure.
//! - [`search`] — pivot rules, ascent execution, uniqueness auditing.
//! - [`oracle`] — exhaustive peak enumeration and ascent-graph exploration.
//! - [`graphwidth`] — decomposition/minor validators and exact pathwidth.
//! - [`tables`] — reference peak and delta tables with comparison reports.
//! - [`certificates`] — bundled decomposition and minor certificates.

pub mod certificates;
pub mod constructions;
pub mod error;
pub mod graphwidth;
pub mod oracle;
pub mod random;
pub mod search;
pub mod tables;
pub mod vcsp;

pub use error::{Error, Result};
