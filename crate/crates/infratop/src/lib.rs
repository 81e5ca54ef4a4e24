//! Finite infra-topological spaces and the bimodal logic GIT.
//!
//! An *infra-topology* on a finite set `X` is a family of subsets that
//! contains the empty set and `X` and is closed under finite intersections;
//! unions are not required. Dropping the requirement that `X` itself belongs
//! to the family gives the *generalized* variant. This crate provides:
//!
//! - [`setfam`] — universes, subsets as bit-vectors, validated
//!   (generalized) infra-topologies, and generation from seed families.
//! - [`operators`] — the interior/closure operators `iInt`/`iCl`, the full
//!   subset taxonomy (i-genuine, ps-infra-open, c-genuine, ps-infra-closed,
//!   ps-dense, minimal-infra-open) and the derived set families.
//! - [`algebra`] — meet and union-check of two spaces over one universe.
//! - [`logic`] — formula syntax, parser/printer, the GIT axiom schemes and
//!   a Hilbert-style derivation checker.
//! - [`semantics`] — generalized infra-topological models, the forcing
//!   relation, bounded model enumeration, countermodel search, and the
//!   axiom/rule soundness sweep.
//! - [`oracle`] — independent brute-force reference implementations,
//!   exhaustive space enumeration, and the witness catalog for the
//!   may/must lemmas.
//! - [`files`] — the JSON file formats for spaces, models and derivations.
//! - [`suite`] — the example catalog reproducing every worked example and
//!   counterexample, run by `infra paper-suite`.
//!
//! The `infra` binary is a thin front end; each capability also has a
//! runnable demo under `examples/`.

pub mod algebra;
pub mod files;
pub mod logic;
pub mod operators;
pub mod oracle;
pub mod semantics;
pub mod setfam;
pub mod suite;

pub use setfam::{InfraTopology, Subset, Universe};
