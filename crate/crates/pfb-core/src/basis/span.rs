//! Brute-force dimension oracle: the rank of all operator words of a given
//! content applied to the constant.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::algebra::{AlgebraElement, Monomial, Space};
use crate::error::{Error, Result};
use crate::tableaux::Weight;

/// Largest |μ| accepted by `span_rank`; the word count grows as the
/// multinomial coefficient of μ.
pub const SPAN_GUARD_BOXES: usize = 10;

/// All words over 1..=m using letter i exactly μ_i times, in lexicographic
/// order.
fn content_words(mu: &Weight) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut [usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(acc.clone());
            return;
        }
        for i in 1..=remaining.len() {
            if remaining[i - 1] == 0 {
                continue;
            }
            remaining[i - 1] -= 1;
            acc.push(i);
            rec(remaining, acc, out);
            acc.pop();
            remaining[i - 1] += 1;
        }
    }

    let mut remaining = mu.counts().to_vec();
    let mut out = Vec::new();
    rec(&mut remaining, &mut Vec::new(), &mut out);
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub(crate) fn fraction_free_rank(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pr) = (pivot_row..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, pr);
        for i in pivot_row + 1..rows {
            for j in c + 1..cols {
                let num = &mat[i][j] * &mat[pivot_row][c] - &mat[i][c] * &mat[pivot_row][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free division must be exact");
                mat[i][j] = q;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[pivot_row][c].clone();
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Rank over the rationals of a family of elements, by clearing
/// denominators and running fraction-free elimination.
pub(crate) fn elements_rank(vectors: &[AlgebraElement]) -> usize {
    let mut index = BTreeMap::new();
    for v in vectors {
        for (mono, _) in v.terms() {
            let next = index.len();
            index.entry(*mono).or_insert(next);
        }
    }
    if index.is_empty() {
        return 0;
    }
    let mat: Vec<Vec<BigInt>> = vectors.iter().map(|v| integer_row(v, &index)).collect();
    fraction_free_rank(mat)
}

/// Clears denominators of one expanded vector against a fixed monomial
/// indexing.
fn integer_row(v: &AlgebraElement, index: &BTreeMap<Monomial, usize>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for (_, c) in v.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row = vec![BigInt::zero(); index.len()];
    for (mono, c) in v.terms() {
        let scaled = c * BigRational::from_integer(lcm.clone());
        debug_assert!(scaled.is_integer());
        row[index[mono]] = scaled.to_integer();
    }
    row
}

/// Rank over the rationals of the family of all words with content μ in the
/// vector variables, applied to the constant 1. Guarded at |μ| <=
/// `SPAN_GUARD_BOXES`.
pub fn span_rank(m: usize, p: usize, mu: &Weight) -> Result<usize> {
    if mu.len() != m {
        return Err(Error::invalid(format!(
            "weight has length {}, expected m = {}",
            mu.len(),
            m
        )));
    }
    if mu.total() > SPAN_GUARD_BOXES {
        return Err(Error::capacity(format!(
            "|mu| = {} exceeds the span guard of {} boxes",
            mu.total(),
            SPAN_GUARD_BOXES
        )));
    }
    let space = Space::new(m, p)?;
    let thetas: Vec<_> = (1..=m)
        .map(|i| space.theta_op(i))
        .collect::<Result<Vec<_>>>()?;

    let vectors: Vec<AlgebraElement> = content_words(mu)
        .iter()
        .map(|word| {
            let mut v = space.one();
            for &i in word.iter().rev() {
                v = thetas[i - 1].apply(&v);
            }
            v
        })
        .collect();

    Ok(elements_rank(&vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::weight_space_dim;

    #[test]
    fn words_enumerate_the_multiset_permutations() {
        let words = content_words(&Weight::new(vec![2, 1]));
        assert_eq!(
            words,
            vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]
        );
        assert_eq!(
            content_words(&Weight::new(vec![0, 0])),
            vec![Vec::<usize>::new()]
        );
    }

    #[test]
    fn bareiss_rank_small_cases() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(fraction_free_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(fraction_free_rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(fraction_free_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            fraction_free_rank(m(&[&[2, 3, 5], &[4, 6, 10], &[1, 0, 1]])),
            2
        );
    }

    #[test]
    fn single_box_rank() {
        assert_eq!(span_rank(1, 2, &Weight::new(vec![1])).unwrap(), 1);
    }

    #[test]
    fn oversaturated_letter_has_rank_zero() {
        // One letter applied more often than there are columns.
        assert_eq!(span_rank(1, 2, &Weight::new(vec![3])).unwrap(), 0);
        assert_eq!(span_rank(2, 1, &Weight::new(vec![2, 0])).unwrap(), 0);
    }

    #[test]
    fn rank_matches_the_tableau_count_small() {
        for (m, p) in [(2, 2), (2, 1), (1, 3)] {
            for mu in crate::tableaux::weights_up_to(m, 4) {
                let rank = span_rank(m, p, &mu).unwrap();
                assert_eq!(
                    rank,
                    weight_space_dim(&mu, p),
                    "at m={}, p={}, mu={}",
                    m,
                    p,
                    mu
                );
            }
        }
    }

    #[test]
    fn span_guard_rejects_large_weights() {
        assert!(matches!(
            span_rank(1, 1, &Weight::new(vec![11])),
            Err(Error::Capacity(_))
        ));
    }
}
