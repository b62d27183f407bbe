//! Computing with the monoid `O_n` of order-preserving full transformations
//! of the finite chain `X_n = {1 < … < n}`, centred on the zero-divisor
//! structure of its constant maps.
//!
//! For each point `k` the constant map `π_k` is a right zero of `O_n`. The
//! crate implements the three associated zero-divisor sets
//!
//! * `L_k` — maps `α` with `α∘β = π_k` for some `β ≠ π_k` (left divisors),
//! * `R_k` — maps `α` with `γ∘α = π_k` for some `γ ≠ π_k` (right divisors),
//! * `Z_k = L_k ∩ R_k` — two-sided divisors,
//!
//! together with their structural characterizations, exact big-integer
//! cardinalities, the named generator families of the related subsemigroups
//! (`IO_n`, `O_n(Y)`, `L_k`, `R_1`, `Z_1`, …), and generic machinery over
//! finite transformation sets: composition closure, generating-set tests,
//! undecomposable elements, isomorphism verification and exact minimal
//! generating-set (rank) search.
//!
//! Every structural statement the crate relies on is re-verifiable at desk
//! scale: the [`claims`] module packages one independent brute-force checker
//! per statement and reports structured pass/fail evidence.
//!
//! Conventions, fixed across the whole crate:
//!
//! * points are 1-based;
//! * composition is left-to-right, `x·(a∘b) = (x·a)·b`, so constants are
//!   right zeros;
//! * transformations are immutable values ordered lexicographically by their
//!   image word, and every enumeration or closure result is deterministic.

pub mod chain;
pub mod claims;
pub mod dot;
pub mod engine;
pub mod error;
pub mod families;
pub mod sets;

pub use chain::{equivalence_closure, OrderedPartition, Point, TabularForm, Transformation};
pub use claims::{verify, verify_all, ClaimId, ClaimReport, ClaimStatus, VerifyOptions};
pub use engine::{
    closure, is_generating_set, is_subsemigroup, rank_exact, undecomposables,
    verify_isomorphism, ClosureResult, RankCertificate, SearchBudget,
};
pub use error::{Error, Result};
pub use families::{family, family_g, FamilyName, GeneratorFamily};
pub use sets::{card, enumerate, rank_formula, ElementStore, SemigroupId};
