//! Exact symbolic computation for systems of anticommuting (Grassmann)
//! variables tensored with a Clifford algebra.
//!
//! The library models the module Λ[C^{mp}] ⊗ Cl_p with its monomial basis
//! θ^γ e^η over exact rational coefficients, the vector variables Θ_i and
//! Dirac operators D_i acting on it, the Young tableau combinatorics
//! (partitions, semistandard / row-distinct / restricted tableaux, Kostka
//! counts, graded-lexicographic orders), the tableau-indexed weight basis
//! ω_A of the polynomial module generated by the Θ_i, and exhaustive exact
//! verification suites for the operator identities tying all of this
//! together.

pub mod algebra;
pub mod basis;
pub mod error;
pub mod json;
pub mod tableaux;
pub mod verify;

pub use algebra::{
    AlgebraElement, CliffordExponent, GrassmannExponent, LinearOperator, Monomial, Space,
};
pub use error::{Error, Result};
