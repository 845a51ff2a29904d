//! Exact-arithmetic path chain complexes for finite digraphs.
//!
//! The crate builds the chain spaces of directed paths two independent ways
//! (a general kernel computation and a short-move class basis), computes
//! path homology dimensions and Euler characteristics over the rationals
//! and prime fields, and detects integral torsion of the cochain quotient
//! via Smith normal form. Everything is deterministic and exact; there is
//! no floating point.

pub mod chain;
pub mod cochain;
pub mod digraph;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linalg;
pub mod random;
pub mod report;
pub mod smoves;
pub mod snf;
pub mod verify;

pub use chain::{
    boundary_entry_report, boundary_matrix, homology_summary, omega_class_basis, omega_general,
    BasisMethod, ChainVector, HomologySummary, OmegaBasis,
};
pub use cochain::{
    cochain_structure_classes, cochain_structure_snf, pairing, relation_set, relation_set_general,
    CochainStructure, RelationSet,
};
pub use digraph::{Digraph, PairKind, Path, VertexPair};
pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use fixtures::{builtin_fixture, FIXTURE_NAMES};
pub use linalg::{intersect_spans, ExactMatrix};
pub use smoves::{build_smoves, classify_components, export_dot, ShortMoveGraph, SmEdge, SnClass};
pub use snf::{cokernel_structure, smith_normal_form, IntegerMatrix, SmithForm};
