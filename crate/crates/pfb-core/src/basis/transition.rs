//! Weight-space bases and their transition-matrix diagnostics.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Space};
use crate::basis::leading::{leading_monomial, LeadingMonomial};
use crate::basis::omega::omega_via_restricted;
use crate::error::{Error, Result};
use crate::tableaux::{enumerate_ssyt, weight_space_dim, Tableau, Weight};

/// Verdicts attached to a constructed basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisChecks {
    /// Every probe of a tableau against its own vector gives 1.
    pub diag_ones: bool,
    /// Every probe of a tableau against the vector of a larger tableau
    /// gives 0.
    pub triangular: bool,
    /// The number of vectors equals the tableau count of the weight space.
    pub dim_match: bool,
}

/// One basis vector with its tableau, weight and leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub tableau: Tableau,
    pub weight: Weight,
    pub leading: LeadingMonomial,
    pub omega: AlgebraElement,
}

/// The ordered basis of one weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub m: usize,
    pub p: usize,
    pub mu: Weight,
    pub entries: Vec<BasisEntry>,
    pub checks: BasisChecks,
}

/// The matrix of probes ⟨θ^{γ_R} e^{λ'_R}, ω_C⟩ over the ordered tableau
/// list (row R probes, column C indexes the vector), with verdict flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport {
    pub m: usize,
    pub p: usize,
    pub mu: Weight,
    pub tableaux: Vec<Tableau>,
    pub matrix: Vec<Vec<BigRational>>,
    /// Unit diagonal.
    pub diag_ones: bool,
    /// Zeros above the diagonal: a probe of a smaller tableau never meets
    /// the vector of a larger one.
    pub triangular: bool,
    /// Every term of every vector has Clifford exponent equal to the column
    /// parity of its Grassmann exponent.
    pub support_ok: bool,
}

fn check_weight_length(m: usize, mu: &Weight) -> Result<()> {
    if mu.len() != m {
        return Err(Error::invalid(format!(
            "weight has length {}, expected m = {}",
            mu.len(),
            m
        )));
    }
    Ok(())
}

fn build_entries(space: Space, mu: &Weight) -> Result<Vec<BasisEntry>> {
    let tableaux = enumerate_ssyt(mu, Some(space.p()));
    tableaux
        .into_iter()
        .map(|tableau| {
            let leading = leading_monomial(&tableau, space.m(), space.p())?;
            let omega = omega_via_restricted(space, &tableau)?;
            Ok(BasisEntry {
                tableau,
                weight: omega.weight,
                leading,
                omega: omega.value,
            })
        })
        .collect()
}

fn probe_matrix(entries: &[BasisEntry]) -> Vec<Vec<BigRational>> {
    entries
        .iter()
        .map(|row_entry| {
            let probe = row_entry.leading.monomial();
            entries
                .iter()
                .map(|col_entry| col_entry.omega.coeff(&probe))
                .collect()
        })
        .collect()
}

fn support_holds(entries: &[BasisEntry]) -> bool {
    entries.iter().all(|entry| {
        entry
            .omega
            .terms()
            .all(|(mono, _)| mono.eta == mono.gamma.column_parity())
    })
}

fn verdicts(matrix: &[Vec<BigRational>]) -> (bool, bool) {
    let n = matrix.len();
    let diag_ones = (0..n).all(|i| matrix[i][i].is_one());
    let triangular = (0..n).all(|r| (r + 1..n).all(|c| matrix[r][c].is_zero()));
    (diag_ones, triangular)
}

/// The ordered basis {ω_A} of the weight-μ space, with its checks.
pub fn build_basis(m: usize, p: usize, mu: &Weight) -> Result<BasisReport> {
    check_weight_length(m, mu)?;
    let space = Space::new(m, p)?;
    let entries = build_entries(space, mu)?;
    let matrix = probe_matrix(&entries);
    let (diag_ones, triangular) = verdicts(&matrix);
    let checks = BasisChecks {
        diag_ones,
        triangular,
        dim_match: entries.len() == weight_space_dim(mu, p),
    };
    Ok(BasisReport {
        m,
        p,
        mu: mu.clone(),
        entries,
        checks,
    })
}

/// The probe matrix over the ordered tableaux of the weight-μ space.
pub fn transition_matrix(m: usize, p: usize, mu: &Weight) -> Result<TransitionReport> {
    check_weight_length(m, mu)?;
    let space = Space::new(m, p)?;
    let entries = build_entries(space, mu)?;
    let matrix = probe_matrix(&entries);
    let (diag_ones, triangular) = verdicts(&matrix);
    let support_ok = support_holds(&entries);
    Ok(TransitionReport {
        m,
        p,
        mu: mu.clone(),
        tableaux: entries.into_iter().map(|e| e.tableau).collect(),
        matrix,
        diag_ones,
        triangular,
        support_ok,
    })
}
