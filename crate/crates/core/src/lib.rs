//! Associating hypergraphs of finite loops.
//!
//! Builds the Moufang loop M(D_n,2), collects the ordered triples that associate
//! into a 3-uniform hypergraph, computes its invariants exactly, and checks the
//! closed-form predictions for M(D_n,2) against enumeration.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the CLI, and
//! parallel runs live in the `ahg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod formulas;
pub mod hypergraph;
pub mod invariants;
pub mod verify;

pub use algebra::{
    builtin_order5_loop, dihedral_group, moufang_extension, validate_loop, AlgebraError, Group, GroupPartition, Loop,
    LoopProvenance, MoufangElement,
};
pub use hypergraph::{AssociatingHypergraph, DegreeData, DirectedHyperedge, Hypergraph, HypergraphError};
pub use invariants::{Budget, InvariantError, InvariantKind, InvariantResult, MatchingPolynomial, Witness};
pub use verify::{run_range, run_verification, Verdict, VerificationReport, VerifyError};
