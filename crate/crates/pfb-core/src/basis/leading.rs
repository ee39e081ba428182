//! Leading monomials θ^{γ_A} e^{λ'_A} and the column-labelled filling D_λ.

use crate::algebra::{CliffordExponent, GrassmannExponent, Monomial};
use crate::error::{Error, Result};
use crate::tableaux::{Partition, Tableau};

/// The distinguished monomial of ω_A: γ_A counts each letter per column of
/// A, and the Clifford exponent is the conjugate shape reduced mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeadingMonomial {
    pub gamma: GrassmannExponent,
    pub eta: CliffordExponent,
}

impl LeadingMonomial {
    pub fn monomial(&self) -> Monomial {
        Monomial {
            gamma: self.gamma,
            eta: self.eta,
        }
    }
}

/// The exponent matrix γ_A with (γ_A)_{ij} = #{i's in the j'th column of A}.
/// For a semistandard tableau each count is 0 or 1. Errors with a capacity
/// error when the diagram has more than p columns.
pub fn gamma_of(a: &Tableau, m: usize, p: usize) -> Result<GrassmannExponent> {
    if !a.is_semistandard() {
        return Err(Error::invalid("leading exponents require a semistandard tableau"));
    }
    if a.max_entry() > m {
        return Err(Error::invalid(format!(
            "tableau entry {} exceeds m = {}",
            a.max_entry(),
            m
        )));
    }
    let columns = a.shape().part(1);
    if columns > p {
        return Err(Error::capacity(format!(
            "tableau has {} columns, more than p = {}",
            columns, p
        )));
    }
    let mut gamma = GrassmannExponent::zero(m, p)?;
    for (_, l, entry) in a.boxes() {
        debug_assert!(!gamma.get(entry, l), "column letters repeat");
        gamma = gamma.with_bit(entry, l, true);
    }
    Ok(gamma)
}

/// The leading monomial (γ_A, λ'_A mod 2).
pub fn leading_monomial(a: &Tableau, m: usize, p: usize) -> Result<LeadingMonomial> {
    let gamma = gamma_of(a, m, p)?;
    let conj = a.shape().conjugate();
    let eta = CliffordExponent::from_parts_mod2(conj.parts(), p)?;
    Ok(LeadingMonomial { gamma, eta })
}

/// The filling of the shape whose every box holds its own column index.
pub fn d_lambda(shape: &Partition) -> Tableau {
    Tableau::new(
        shape
            .parts()
            .iter()
            .map(|&len| (1..=len).collect())
            .collect(),
    )
    .expect("column labels of a partition form a tableau")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gamma_of_the_worked_example() {
        let a = t(&[&[1, 1, 3], &[2, 2]]);
        let gamma = gamma_of(&a, 3, 3).unwrap();
        assert_eq!(gamma.to_row_major_bits(), "110110001");
    }

    #[test]
    fn gamma_degenerate_cases() {
        let empty = gamma_of(&Tableau::empty(), 2, 2).unwrap();
        assert_eq!(empty.bits(), 0);
        let column = gamma_of(&t(&[&[1], &[2], &[3]]), 3, 2).unwrap();
        assert!(column.get(1, 1) && column.get(2, 1) && column.get(3, 1));
        assert_eq!(column.degree(), 3);
    }

    #[test]
    fn capacity_error_when_too_wide() {
        let a = t(&[&[1, 1]]);
        assert!(matches!(
            gamma_of(&a, 1, 1),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn empty_tableau_leads_with_the_unit_monomial() {
        let lm = leading_monomial(&Tableau::empty(), 2, 2).unwrap();
        assert_eq!(lm.gamma.bits(), 0);
        assert_eq!(lm.eta.bits(), 0);
        assert_eq!(lm.monomial().to_string(), "1");
    }

    #[test]
    fn leading_monomial_of_the_worked_example() {
        let a = t(&[&[1, 1, 3], &[2, 2]]);
        let lm = leading_monomial(&a, 3, 3).unwrap();
        // λ' = (2,2,1) reduces mod 2 to e_3.
        assert_eq!(lm.eta.to_bit_string(), "001");
        assert_eq!(
            lm.monomial().to_string(),
            "th(1,1) th(2,1) th(1,2) th(2,2) th(3,3) e(3)"
        );
    }

    #[test]
    fn d_lambda_examples() {
        let shape = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(d_lambda(&shape), t(&[&[1, 2, 3], &[1, 2]]));
        assert_eq!(d_lambda(&Partition::empty()), Tableau::empty());
        let column = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(d_lambda(&column), t(&[&[1], &[1], &[1]]));
    }
}
