//! Matroid base packing, deleted joins of matroid complexes, exact
//! simplicial homology and Tverberg witness search.
//!
//! Arithmetic is exact throughout. Linear algebra and the feasibility LP are
//! generic over the scalar through the traits in [`scalar`]; the aliases
//! below fix the types used for certificates.

pub mod complex;
pub mod error;
pub mod generators;
pub mod homology;
pub mod limits;
pub mod linalg;
pub mod lp;
pub mod matroid;
pub mod packing;
pub mod scalar;
pub mod tverberg;

pub use complex::{
    chessboard, colourful_complex, cyclic_shift, deleted_join, is_action_free, is_action_free_on, join,
    matroid_deleted_join, power_deleted_join, FVector, FaceList, JoinLabels, LabeledVertex, SimplicialComplex,
};
pub use error::{Error, Result};
pub use homology::{
    betti_reduced, boundary_matrix, claim_bound, conjecture_batch, conjecture_scan, corollary_bound,
    corollary_sets, homologically_connected, verify_claim, verify_corollary, verify_matroid_connectivity,
    BettiVector, ClaimReport, ConjectureRecord, ConnectivityReport, CorollaryReport, SparseIntMatrix,
};
pub use limits::Limits;
pub use lp::{feasible_point, Feasible};
pub use matroid::{validate_matroid, Element, FaceSet, LinearField, Matroid, MatroidSpec, Validation};
pub use packing::{
    max_disjoint_bases, pack_into_independent, pack_k_bases, partition_almost_equal, BasePacking, Cover,
    MaxPacking, PackOutcome, PackingCertificate,
};
pub use scalar::{is_prime, ExactInteger, Field, Fp, Modulus, OrderedField};
pub use tverberg::{
    choose_prime, dold_inequality, dold_inequality_holds, find_tverberg, hulls_intersect, max_affine_t,
    target_t, verify_theorem, HullIntersection, PointConfig, TheoremReport, TverbergSearch, TverbergWitness,
};

/// Exact rationals: point coordinates, LP certificates, linear matroid entries.
pub type Rational = num_rational::BigRational;
/// Exact integers: boundary matrix entries and determinant-free ranks.
pub type Integer = num_bigint::BigInt;
/// Prime field used to pre-screen homology ranks.
pub type Filter = homology::FilterField;
