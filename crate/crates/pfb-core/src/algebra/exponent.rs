//! Packed exponents for Grassmann and Clifford monomials.
//!
//! A Grassmann monomial θ^γ is indexed by a matrix γ ∈ M_{m×p}(Z₂); a
//! Clifford monomial e^η by a vector η ∈ Z₂^p. Both are stored as bitsets.
//! All signs in the library are computed against the factor order fixed
//! here, so these two types are the single source of truth for sign
//! conventions.

use std::fmt;

use crate::error::{Error, Result};

/// Hard limit on the number of packed bits (Grassmann generators m·p, or
/// Clifford generators p).
pub const MAX_BITS: usize = 128;

/// Counts set bits strictly above `idx`, avoiding the undefined `>> 128`.
#[inline]
fn ones_above(bits: u128, idx: usize) -> u32 {
    ((bits >> idx) >> 1).count_ones()
}

/// Counts set bits strictly below `idx`.
#[inline]
fn ones_below(bits: u128, idx: usize) -> u32 {
    (bits & ((1u128 << idx) - 1)).count_ones()
}

/// Exponent matrix γ of a Grassmann monomial θ^γ.
///
/// The factor θ_{iα} (row i ∈ 1..=m, column α ∈ 1..=p) occupies position
/// (α−1)·m + i in the reference product
/// θ_{11}…θ_{m1} θ_{12}…θ_{m2} … θ_{1p}…θ_{mp},
/// i.e. columns are traversed left to right and rows top to bottom within a
/// column. Bit (α−1)·m + (i−1) of `bits` is set iff θ_{iα} is present.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannExponent {
    bits: u128,
    rows: u16,
    cols: u16,
}

impl GrassmannExponent {
    /// The empty exponent (the monomial 1) in the m×p ambient.
    pub fn zero(m: usize, p: usize) -> Result<Self> {
        if m == 0 || p == 0 {
            return Err(Error::invalid("ambient dimensions m, p must be >= 1"));
        }
        if m.checked_mul(p).is_none_or(|mp| mp > MAX_BITS) {
            return Err(Error::capacity(format!(
                "m*p = {}*{} exceeds the supported {} Grassmann generators",
                m, p, MAX_BITS
            )));
        }
        Ok(Self {
            bits: 0,
            rows: m as u16,
            cols: p as u16,
        })
    }

    /// Rebuilds an exponent from its raw bits.
    pub fn from_bits(bits: u128, m: usize, p: usize) -> Result<Self> {
        let zero = Self::zero(m, p)?;
        if m * p < MAX_BITS && bits >> (m * p) != 0 {
            return Err(Error::invalid("bits set beyond the m*p ambient"));
        }
        Ok(Self { bits, ..zero })
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    /// Number of Grassmann factors present.
    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Position index of factor (i, α); both are 1-based.
    #[inline]
    fn idx(&self, i: usize, a: usize) -> usize {
        debug_assert!(self.contains_index(i, a));
        (a - 1) * self.rows() + (i - 1)
    }

    #[inline]
    pub fn contains_index(&self, i: usize, a: usize) -> bool {
        (1..=self.rows()).contains(&i) && (1..=self.cols()).contains(&a)
    }

    pub fn get(&self, i: usize, a: usize) -> bool {
        self.bits >> self.idx(i, a) & 1 == 1
    }

    pub fn with_bit(&self, i: usize, a: usize, value: bool) -> Self {
        let mut out = *self;
        if value {
            out.bits |= 1 << self.idx(i, a);
        } else {
            out.bits &= !(1 << self.idx(i, a));
        }
        out
    }

    /// Sign picked up by θ_{iα} moving from the far left to its slot:
    /// parity of the factors occupying earlier positions.
    pub(crate) fn sign_below(&self, i: usize, a: usize) -> i32 {
        if ones_below(self.bits, self.idx(i, a)) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Factors (i, α) in position order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.rows();
        (0..m * self.cols())
            .filter(move |idx| self.bits >> idx & 1 == 1)
            .map(move |idx| (idx % m + 1, idx / m + 1))
    }

    /// Number of factors θ_{iα} with the given row index i.
    pub fn row_count(&self, i: usize) -> usize {
        (1..=self.cols()).filter(|&a| self.get(i, a)).count()
    }

    /// Column sums of γ reduced mod 2, as a Clifford exponent of length p.
    pub fn column_parity(&self) -> CliffordExponent {
        let mut eta = CliffordExponent {
            bits: 0,
            len: self.cols,
        };
        for a in 1..=self.cols() {
            let ones: u32 = (1..=self.rows()).filter(|&i| self.get(i, a)).count() as u32;
            if ones & 1 == 1 {
                eta.bits |= 1 << (a - 1);
            }
        }
        eta
    }

    /// Row-major bit string γ_{11}γ_{12}…γ_{1p}γ_{21}… of length m·p.
    pub fn to_row_major_bits(&self) -> String {
        let mut s = String::with_capacity(self.rows() * self.cols());
        for i in 1..=self.rows() {
            for a in 1..=self.cols() {
                s.push(if self.get(i, a) { '1' } else { '0' });
            }
        }
        s
    }

    pub fn from_row_major_bits(s: &str, m: usize, p: usize) -> Result<Self> {
        if s.len() != m * p {
            return Err(Error::invalid(format!(
                "gamma bit string has length {}, expected m*p = {}",
                s.len(),
                m * p
            )));
        }
        let mut out = Self::zero(m, p)?;
        for (pos, c) in s.chars().enumerate() {
            let (i, a) = (pos / p + 1, pos % p + 1);
            match c {
                '0' => {}
                '1' => out = out.with_bit(i, a, true),
                _ => return Err(Error::invalid("gamma bit string must contain only 0/1")),
            }
        }
        Ok(out)
    }

    /// Reduces the word θ_{f₁}…θ_{fₙ} to canonical position order.
    ///
    /// Returns `None` when a factor repeats (θ² = 0), otherwise the packed
    /// exponent together with the sign ±1 incurred by the reordering. The
    /// sign is accumulated factor by factor: appending θ_{iα} on the right
    /// of an ordered product moves it left past every present factor with a
    /// larger position.
    pub fn normal_order(
        m: usize,
        p: usize,
        factors: &[(usize, usize)],
    ) -> Result<Option<(Self, i32)>> {
        let mut out = Self::zero(m, p)?;
        let mut sign = 1i32;
        for &(i, a) in factors {
            if !out.contains_index(i, a) {
                return Err(Error::invalid(format!(
                    "theta index ({}, {}) outside 1..={} x 1..={}",
                    i, a, m, p
                )));
            }
            let idx = out.idx(i, a);
            if out.bits >> idx & 1 == 1 {
                return Ok(None);
            }
            if ones_above(out.bits, idx) & 1 == 1 {
                sign = -sign;
            }
            out.bits |= 1 << idx;
        }
        Ok(Some((out, sign)))
    }
}

impl fmt::Display for GrassmannExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, a) in self.factors() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "th({},{})", i, a)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for GrassmannExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassmannExponent({}x{}: {})", self.rows, self.cols, self)
    }
}

/// Exponent vector η of a Clifford monomial e^η = e₁^{η₁}…e_p^{η_p}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffordExponent {
    bits: u128,
    len: u16,
}

impl CliffordExponent {
    pub fn zero(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("ambient dimension p must be >= 1"));
        }
        if p > MAX_BITS {
            return Err(Error::capacity(format!(
                "p = {} exceeds the supported {} Clifford generators",
                p, MAX_BITS
            )));
        }
        Ok(Self {
            bits: 0,
            len: p as u16,
        })
    }

    pub fn from_bits(bits: u128, p: usize) -> Result<Self> {
        let zero = Self::zero(p)?;
        if p < MAX_BITS && bits >> p != 0 {
            return Err(Error::invalid("bits set beyond the length-p ambient"));
        }
        Ok(Self { bits, ..zero })
    }

    /// Exponent with η_α = parts[α−1] mod 2; missing entries are zero.
    pub fn from_parts_mod2(parts: &[usize], p: usize) -> Result<Self> {
        if parts.len() > p {
            return Err(Error::invalid(format!(
                "{} exponent entries do not fit in length p = {}",
                parts.len(),
                p
            )));
        }
        let mut out = Self::zero(p)?;
        for (idx, &e) in parts.iter().enumerate() {
            if e & 1 == 1 {
                out.bits |= 1 << idx;
            }
        }
        Ok(out)
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn contains_index(&self, a: usize) -> bool {
        (1..=self.len()).contains(&a)
    }

    pub fn get(&self, a: usize) -> bool {
        debug_assert!(self.contains_index(a));
        self.bits >> (a - 1) & 1 == 1
    }

    pub fn with_toggled(&self, a: usize) -> Self {
        debug_assert!(self.contains_index(a));
        Self {
            bits: self.bits ^ (1 << (a - 1)),
            len: self.len,
        }
    }

    /// Sign picked up by e_α moving from the far left to its slot.
    pub(crate) fn sign_below(&self, a: usize) -> i32 {
        debug_assert!(self.contains_index(a));
        if ones_below(self.bits, a - 1) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Generator indices α in ascending order.
    pub fn factors(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&a| self.get(a))
    }

    pub fn to_bit_string(&self) -> String {
        (1..=self.len())
            .map(|a| if self.get(a) { '1' } else { '0' })
            .collect()
    }

    pub fn from_bit_string(s: &str, p: usize) -> Result<Self> {
        if s.len() != p {
            return Err(Error::invalid(format!(
                "eta bit string has length {}, expected p = {}",
                s.len(),
                p
            )));
        }
        let mut bits = 0u128;
        for (idx, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << idx,
                _ => return Err(Error::invalid("eta bit string must contain only 0/1")),
            }
        }
        Self::from_bits(bits, p)
    }

    /// Reduces the word e_{w₁}…e_{wₙ} using e_α² = 1 and anticommutation.
    ///
    /// Returns the canonical exponent and the sign ±1. Appending e_α on the
    /// right of an ordered product moves it left past every present
    /// generator with a larger index, then cancels or creates e_α.
    pub fn normal_order(p: usize, word: &[usize]) -> Result<(Self, i32)> {
        let mut out = Self::zero(p)?;
        let mut sign = 1i32;
        for &a in word {
            if !out.contains_index(a) {
                return Err(Error::invalid(format!(
                    "clifford index {} outside 1..={}",
                    a, p
                )));
            }
            if ones_above(out.bits, a - 1) & 1 == 1 {
                sign = -sign;
            }
            out.bits ^= 1 << (a - 1);
        }
        Ok((out, sign))
    }
}

impl fmt::Display for CliffordExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for a in self.factors() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "e({})", a)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliffordExponent(len {}: {})", self.len, self)
    }
}
