//! Decides Serre's condition (S_r), Cohen–Macaulayness, and their
//! sequential variants for finite simplicial complexes over a chosen
//! coefficient field, with every verdict cross-checkable through
//! independent topological characterizations.
//!
//! The crate is organized around a handful of small layers:
//!
//! * [`complex`] — canonical facet-antichain complexes and the
//!   combinatorial operators (faces, link, pure skeleton, facet closure);
//! * [`linalg`] — exact sparse rank over Q and GF(p), generic over the
//!   scalar through the [`linalg::Field`] trait;
//! * [`homology`] — reduced Betti numbers from augmented boundary matrices;
//! * [`serre`] — the definitional checks;
//! * [`oracle`] — the local-homology and strata characterizations used to
//!   cross-check them;
//! * [`generators`] — deterministic corpus constructors.

pub mod complex;
pub mod error;
pub mod generators;
pub mod homology;
pub mod linalg;
pub mod oracle;
pub mod serre;
pub mod verdict;

pub use complex::{Complex, Dim, Face, VertexId};
pub use error::{Error, Result};
pub use homology::{boundary_matrix, homology_profile, reduced_betti, HomologyProfile};
pub use linalg::{rank, Field, FieldSpec, PrimeField, Rationals, SparseMatrix};
pub use oracle::{
    check_sequential_local_homology, check_sequential_strata_links, check_serre_local_homology,
    d_set_dimension, local_homology_degrees, local_homology_table, LocalHomologyTable,
};
pub use serre::{
    is_cm, is_sequentially_cm, is_sequentially_serre, is_serre, max_serre_r, sequential_serre_failures,
    serre_failures,
};
pub use verdict::{witness_revalidates, FailedCondition, Method, SerreVerdict, Stratum, Witness};

/// Matrix over the rationals with arbitrary-precision entries.
pub type RationalMatrix = SparseMatrix<num_rational::BigRational>;
/// Matrix over GF(p); entries are residues.
pub type PrimeMatrix = SparseMatrix<u64>;
