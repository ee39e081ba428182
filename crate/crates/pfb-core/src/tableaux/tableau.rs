//! Young tableaux and the total order on semistandard tableaux.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::partition::{weight_cmp_padded, Partition, Weight};

/// A filling of a Young diagram with positive integers, stored row-major.
///
/// The row lengths must form a partition. Nothing else is imposed at
/// construction; the semistandard and row-distinct predicates classify the
/// fillings afterwards.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::invalid("row lengths must be non-increasing"));
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::invalid("empty row inside the diagram"));
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::invalid("tableau entries must be >= 1"));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect::<Vec<_>>())
            .expect("row lengths validated at construction")
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entry in row k, column l (both 1-based). Panics outside the diagram.
    pub fn entry(&self, k: usize, l: usize) -> usize {
        self.rows[k - 1][l - 1]
    }

    /// Boxes (k, l, entry) in row-major order, 1-based coordinates.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(k, row)| {
            row.iter()
                .enumerate()
                .map(move |(l, &e)| (k + 1, l + 1, e))
        })
    }

    /// The weight μ ∈ N₀^m; errors when an entry exceeds m.
    pub fn weight(&self, m: usize) -> Result<Weight> {
        let mut counts = vec![0usize; m];
        for &e in self.rows.iter().flatten() {
            if e > m {
                return Err(Error::invalid(format!(
                    "entry {} exceeds the alphabet bound {}",
                    e, m
                )));
            }
            counts[e - 1] += 1;
        }
        Ok(Weight::new(counts))
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom.
    pub fn is_semistandard(&self) -> bool {
        for (k, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if k > 0 {
                let above = &self.rows[k - 1];
                if row.iter().enumerate().any(|(l, &e)| e <= above[l]) {
                    return false;
                }
            }
        }
        true
    }

    /// All entries within each row are pairwise distinct.
    pub fn is_row_distinct(&self) -> bool {
        self.rows.iter().all(|row| {
            let mut seen = row.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// The subtableau of boxes with entry <= k. Requires a semistandard
    /// tableau, so that those boxes form a diagram; k = 0 yields the empty
    /// tableau and any k >= the maximal entry yields the tableau itself.
    pub fn subtableau(&self, k: usize) -> Result<Tableau> {
        if !self.is_semistandard() {
            return Err(Error::invalid(
                "subtableau is only defined for semistandard tableaux",
            ));
        }
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().take_while(|&e| e <= k).collect())
            .take_while(|row: &Vec<usize>| !row.is_empty())
            .collect();
        Tableau::new(rows)
    }

    /// Shape of the subtableau of entries <= k, without building it.
    pub(crate) fn subtableau_shape(&self, k: usize) -> Partition {
        let lengths: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.iter().take_while(|&&e| e <= k).count())
            .take_while(|&len| len > 0)
            .collect();
        Partition::new(lengths).expect("subtableau rows of a semistandard tableau nest")
    }

    /// One row per line, entries space-separated.
    pub fn ascii(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)".to_string();
        }
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "[")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for (l, e) in row.iter().enumerate() {
                if l > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", e)?;
            }
        }
        write!(f, "]")
    }
}

/// Total order on semistandard tableaux: weights first (graded lex), then
/// the shapes of the subtableaux of entries <= k at the first k where they
/// differ. Two weight-equal semistandard tableaux with identical subtableau
/// shape chains have identical fillings.
pub fn tableau_cmp(a: &Tableau, b: &Tableau) -> Ordering {
    debug_assert!(a.is_semistandard() && b.is_semistandard());
    let bound = a.max_entry().max(b.max_entry());
    let (wa, wb) = (
        a.weight(bound).expect("entries bounded by max"),
        b.weight(bound).expect("entries bounded by max"),
    );
    match weight_cmp_padded(&wa, &wb) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for k in 1..=bound {
        match crate::tableaux::partition_cmp(&a.subtableau_shape(k), &b.subtableau_shape(k)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    debug_assert_eq!(a, b, "order-equal semistandard tableaux must coincide");
    Ordering::Equal
}

/// Sorts semistandard tableaux into the total order.
pub fn sort_tableaux(tableaux: &mut [Tableau]) {
    tableaux.sort_by(tableau_cmp);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn shape_and_weight() {
        let a = t(&[&[2, 4, 3, 1], &[2, 1, 1], &[4]]);
        assert_eq!(a.shape(), Partition::new(vec![4, 3, 1]).unwrap());
        assert_eq!(a.weight(4).unwrap(), Weight::new(vec![3, 2, 1, 2]));
        assert!(a.weight(3).is_err());
    }

    #[test]
    fn semistandard_predicate() {
        assert!(t(&[&[1, 1, 1, 2], &[2, 3, 4], &[4]]).is_semistandard());
        assert!(t(&[&[1, 1, 1, 4], &[2, 2, 3], &[4]]).is_semistandard());
        assert!(!t(&[&[1, 2, 1]]).is_semistandard());
        assert!(!t(&[&[1, 1], &[1]]).is_semistandard());
        assert!(Tableau::empty().is_semistandard());
    }

    #[test]
    fn row_distinct_predicate() {
        assert!(t(&[&[1, 4, 3, 2], &[1, 2, 3], &[3, 1]]).is_row_distinct());
        assert!(!t(&[&[1, 4, 4, 2]]).is_row_distinct());
    }

    #[test]
    fn subtableau_chain_example() {
        let a = t(&[&[1, 1, 2, 4], &[2, 3, 4]]);
        assert_eq!(a.subtableau(4).unwrap(), a);
        assert_eq!(a.subtableau(3).unwrap(), t(&[&[1, 1, 2], &[2, 3]]));
        assert_eq!(a.subtableau(2).unwrap(), t(&[&[1, 1, 2], &[2]]));
        assert_eq!(a.subtableau(1).unwrap(), t(&[&[1, 1]]));
        assert_eq!(a.subtableau(0).unwrap(), Tableau::empty());
    }

    #[test]
    fn subtableau_requires_semistandard() {
        let bad = t(&[&[2, 1]]);
        assert!(bad.subtableau(1).is_err());
    }

    #[test]
    fn invalid_shapes_rejected() {
        assert!(Tableau::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(Tableau::new(vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn order_first_pair_of_the_chain() {
        let a = t(&[&[1, 1], &[2], &[3], &[4]]);
        let b = t(&[&[1, 1], &[2, 4], &[3]]);
        assert_eq!(tableau_cmp(&a, &b), Ordering::Less);
        assert_eq!(tableau_cmp(&a, &a), Ordering::Equal);
        assert_eq!(tableau_cmp(&b, &a), Ordering::Greater);
    }

    #[test]
    fn weight_dominates_the_order() {
        let a = t(&[&[1, 2]]);
        let b = t(&[&[1, 1]]);
        // (1,1) < (2,0) in graded lex.
        assert_eq!(tableau_cmp(&a, &b), Ordering::Less);
    }
}
