//! The tableau-indexed vectors ω_A, built two independent ways.
//!
//! The defining route symmetrizes the operator word of A over all row
//! permutations and divides by the factorial normalizer A!. The expansion
//! route sums the signed monomials θ_{AC} e_C over the restricted fillings
//! C of the shape of A. Both must agree exactly; the test suites compare
//! them term by term.

use itertools::Itertools;
use num::{BigInt, BigRational, BigUint, One};

use crate::algebra::{AlgebraElement, CliffordExponent, GrassmannExponent, Monomial, Space};
use crate::basis::words::theta_word;
use crate::error::{Error, Result};
use crate::tableaux::{enumerate_a_restricted, Tableau, Weight};

/// A vector ω_A together with its indexing tableau and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaVector {
    pub tableau: Tableau,
    pub weight: Weight,
    pub value: AlgebraElement,
}

fn validate(space: Space, a: &Tableau) -> Result<Weight> {
    if !a.is_semistandard() {
        return Err(Error::invalid(format!(
            "omega vectors are indexed by semistandard tableaux, got {}",
            a
        )));
    }
    a.weight(space.m())
}

/// The factorial normalizer A!: the product of the row-length factorials
/// with the multiplicity factorials of each letter within each row.
pub fn factorial_normalizer(a: &Tableau) -> BigUint {
    fn factorial(n: usize) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    let mut acc = BigUint::one();
    for row in a.rows() {
        acc *= factorial(row.len());
        let mut sorted = row.clone();
        sorted.sort_unstable();
        for group in sorted.chunk_by(|x, y| x == y) {
            acc *= factorial(group.len());
        }
    }
    acc
}

/// ω_A by the definition: (1/A!) Σ_τ Θ_{A^τ}(1) over the row permutations
/// τ, each applied to the constant 1. Vanishes exactly when the shape of A
/// has more than p columns.
pub fn omega_via_definition(space: Space, a: &Tableau) -> Result<OmegaVector> {
    let weight = validate(space, a)?;
    if a.is_empty() {
        return Ok(OmegaVector {
            tableau: a.clone(),
            weight,
            value: space.one(),
        });
    }

    let row_perms: Vec<Vec<Vec<usize>>> = a
        .rows()
        .iter()
        .map(|row| (0..row.len()).permutations(row.len()).collect())
        .collect();

    let mut sum = space.zero();
    for tau in row_perms.iter().multi_cartesian_product() {
        let rows: Vec<Vec<usize>> = a
            .rows()
            .iter()
            .zip(&tau)
            .map(|(row, perm)| perm.iter().map(|&j| row[j]).collect())
            .collect();
        let permuted = Tableau::new(rows).expect("row permutation preserves the shape");
        let word = theta_word(space, &permuted)?;
        sum = &sum + &word.apply(&space.one());
    }

    let normalizer = BigRational::new(BigInt::one(), factorial_normalizer(a).into());
    Ok(OmegaVector {
        tableau: a.clone(),
        weight,
        value: sum.scale(&normalizer),
    })
}

/// ω_A by the restricted-filling expansion: Σ_C θ_{AC} e_C over the
/// restricted fillings C, where θ_{AC} pairs the letter of each box of A
/// with the letter of the same box of C and e_C multiplies the generators
/// of C, all in row-major box order.
pub fn omega_via_restricted(space: Space, a: &Tableau) -> Result<OmegaVector> {
    let weight = validate(space, a)?;
    let (m, p) = (space.m(), space.p());
    let mut value = space.zero();
    for c in enumerate_a_restricted(a, p)? {
        let theta_factors: Vec<(usize, usize)> = a
            .boxes()
            .zip(c.boxes())
            .map(|((_, _, i), (_, _, alpha))| (i, alpha))
            .collect();
        let Some((gamma, theta_sign)) = GrassmannExponent::normal_order(m, p, &theta_factors)?
        else {
            // A restricted filling never repeats a factor.
            debug_assert!(false, "vanishing term for restricted filling {}", c);
            continue;
        };
        let word: Vec<usize> = c.boxes().map(|(_, _, alpha)| alpha).collect();
        let (eta, e_sign) = CliffordExponent::normal_order(p, &word)?;
        let coeff = BigRational::from_integer((theta_sign * e_sign).into());
        value.accumulate(Monomial { gamma, eta }, coeff);
    }
    Ok(OmegaVector {
        tableau: a.clone(),
        weight,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factorial_normalizer_examples() {
        // Shape (3,2) with letters 1,1,3 / 2,2: 3!·2! · 2!·1!·2! = 48.
        assert_eq!(factorial_normalizer(&t(&[&[1, 1, 3], &[2, 2]])), big(48));
        assert_eq!(factorial_normalizer(&t(&[&[1]])), big(1));
        assert_eq!(factorial_normalizer(&t(&[&[1, 2]])), big(2));
        assert_eq!(factorial_normalizer(&Tableau::empty()), big(1));
    }

    #[test]
    fn empty_tableau_gives_the_unit() {
        let space = Space::new(2, 2).unwrap();
        let by_def = omega_via_definition(space, &Tableau::empty()).unwrap();
        let by_exp = omega_via_restricted(space, &Tableau::empty()).unwrap();
        assert_eq!(by_def.value, space.one());
        assert_eq!(by_exp.value, space.one());
    }

    #[test]
    fn too_many_columns_vanishes() {
        // Shape (2) needs two distinct column letters; p = 1 kills it.
        let space = Space::new(1, 1).unwrap();
        let a = t(&[&[1, 1]]);
        assert!(omega_via_definition(space, &a).unwrap().value.is_zero());
        assert!(omega_via_restricted(space, &a).unwrap().value.is_zero());
    }

    #[test]
    fn single_row_pair_matches_both_ways() {
        let space = Space::new(1, 2).unwrap();
        let a = t(&[&[1, 1]]);
        let by_def = omega_via_definition(space, &a).unwrap();
        let by_exp = omega_via_restricted(space, &a).unwrap();
        assert_eq!(by_def.value, by_exp.value);
        assert_eq!(by_def.value.to_string(), "1 * th(1,1) th(1,2) e(1) e(2)");
    }

    #[test]
    fn non_semistandard_is_rejected() {
        let space = Space::new(2, 2).unwrap();
        assert!(omega_via_definition(space, &t(&[&[2, 1]])).is_err());
        assert!(omega_via_restricted(space, &t(&[&[1], &[1]])).is_err());
    }

    #[test]
    fn weight_records_the_letter_counts() {
        let space = Space::new(3, 3).unwrap();
        let got = omega_via_restricted(space, &t(&[&[1, 1, 3], &[2, 2]])).unwrap();
        assert_eq!(got.weight, Weight::new(vec![2, 2, 1]));
    }
}
