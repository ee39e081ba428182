//! Construction of the tableau-indexed weight basis of the polynomial
//! module generated by the vector variables, with its leading monomials,
//! transition diagnostics, and a brute-force rank oracle.

mod leading;
mod omega;
mod span;
mod transition;
mod words;

pub use leading::{d_lambda, gamma_of, leading_monomial, LeadingMonomial};
pub use omega::{factorial_normalizer, omega_via_definition, omega_via_restricted, OmegaVector};
pub use span::{span_rank, SPAN_GUARD_BOXES};
pub use transition::{
    build_basis, transition_matrix, BasisChecks, BasisEntry, BasisReport, TransitionReport,
};
pub use words::{dirac_word, theta_word};

pub(crate) use span::elements_rank;
