//! Partitions, weight vectors, and their graded lexicographic orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive integers. Trailing
/// zeros are stripped on construction, so two inputs differing only in the
/// number of zeros compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be non-increasing, got {:?}",
                parts
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The k'th part, 1-based; zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 || k > self.parts.len() {
            0
        } else {
            self.parts[k - 1]
        }
    }

    /// Number of non-zero parts (rows of the diagram).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: λ'_j = #{k : λ_k >= j}, the column lengths
    /// of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count())
            .collect();
        Partition { parts }
    }

    /// Parts padded with zeros to the given width (display only).
    pub fn padded(&self, width: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        while v.len() < width.max(self.parts.len()) {
            v.push(0);
        }
        v
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", part)?;
        }
        write!(f, ")")
    }
}

/// Graded lexicographic comparison of partitions: smaller size first, ties
/// broken at the first part where the (zero-padded) sequences differ.
pub fn partition_cmp(a: &Partition, b: &Partition) -> Ordering {
    match a.size().cmp(&b.size()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let width = a.length().max(b.length());
    for k in 1..=width {
        match a.part(k).cmp(&b.part(k)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// A weight vector μ ∈ N₀^m: entry i counts the occurrences of the letter i.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(counts: impl Into<Vec<usize>>) -> Self {
        Self {
            counts: counts.into(),
        }
    }

    pub fn zero(m: usize) -> Self {
        Self {
            counts: vec![0; m],
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Multiplicity of the letter i, 1-based; zero beyond the length.
    pub fn count(&self, i: usize) -> usize {
        if i == 0 || i > self.counts.len() {
            0
        } else {
            self.counts[i - 1]
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total |μ|.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Graded lexicographic comparison of weight vectors of equal length.
pub fn weight_cmp(a: &Weight, b: &Weight) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "weights of lengths {} and {} are not comparable",
            a.len(),
            b.len()
        )));
    }
    Ok(weight_cmp_padded(a, b))
}

/// Same order with implicit zero padding; total on all weights.
pub(crate) fn weight_cmp_padded(a: &Weight, b: &Weight) -> Ordering {
    match a.total().cmp(&b.total()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let width = a.len().max(b.len());
    for i in 1..=width {
        match a.count(i).cmp(&b.count(i)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}
