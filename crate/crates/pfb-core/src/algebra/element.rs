//! Elements of the module on which the Grassmann and Clifford operators act.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::algebra::exponent::{CliffordExponent, GrassmannExponent};
use crate::error::{Error, Result};

/// A basis monomial θ^γ e^η.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub gamma: GrassmannExponent,
    pub eta: CliffordExponent,
}

impl Monomial {
    pub fn new(gamma: GrassmannExponent, eta: CliffordExponent) -> Result<Self> {
        if gamma.cols() != eta.len() {
            return Err(Error::invalid(format!(
                "gamma has {} columns but eta has length {}",
                gamma.cols(),
                eta.len()
            )));
        }
        Ok(Self { gamma, eta })
    }

    /// The monomial 1 in the (m, p) ambient.
    pub fn one(m: usize, p: usize) -> Result<Self> {
        Ok(Self {
            gamma: GrassmannExponent::zero(m, p)?,
            eta: CliffordExponent::zero(p)?,
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.gamma.bits() == 0, self.eta.bits() == 0) {
            (true, true) => write!(f, "1"),
            (false, true) => write!(f, "{}", self.gamma),
            (true, false) => write!(f, "{}", self.eta),
            (false, false) => write!(f, "{} {}", self.gamma, self.eta),
        }
    }
}

/// A finite linear combination of monomials θ^γ e^η with exact rational
/// coefficients.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. All stored monomials are normal-ordered; reordering signs are
/// absorbed into the coefficients by the operations that build elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    m: usize,
    p: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl AlgebraElement {
    pub fn zero(m: usize, p: usize) -> Result<Self> {
        // Constructing the empty exponent validates the ambient.
        GrassmannExponent::zero(m, p)?;
        CliffordExponent::zero(p)?;
        Ok(Self {
            m,
            p,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(m: usize, p: usize) -> Result<Self> {
        let mut out = Self::zero(m, p)?;
        out.terms.insert(Monomial::one(m, p)?, BigRational::one());
        Ok(out)
    }

    /// A single monomial with the given coefficient.
    pub fn from_monomial(mono: Monomial, coeff: BigRational) -> Result<Self> {
        let mut out = Self::zero(mono.gamma.rows(), mono.gamma.cols())?;
        if mono.gamma.cols() != mono.eta.len() {
            return Err(Error::invalid("monomial exponents have mismatched ambients"));
        }
        if !coeff.is_zero() {
            out.terms.insert(mono, coeff);
        }
        Ok(out)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `delta * mono`, dropping the entry if the total cancels.
    pub(crate) fn accumulate(&mut self, mono: Monomial, delta: BigRational) {
        if delta.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(BigRational::zero);
        *entry += delta;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self {
                m: self.m,
                p: self.p,
                terms: BTreeMap::new(),
            };
        }
        Self {
            m: self.m,
            p: self.p,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn assert_same_ambient(&self, other: &Self) {
        assert!(
            self.m == other.m && self.p == other.p,
            "elements live in different ambients: ({}, {}) vs ({}, {})",
            self.m,
            self.p,
            other.m,
            other.p
        );
    }

    /// Left multiplication by θ_{iα}.
    ///
    /// Terms already containing θ_{iα} are annihilated; otherwise the bit is
    /// set and the coefficient picks up the parity of the factors occupying
    /// earlier positions.
    pub fn mul_theta(&self, i: usize, a: usize) -> Result<Self> {
        self.check_theta_index(i, a)?;
        let mut out = Self {
            m: self.m,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for (mono, c) in &self.terms {
            if mono.gamma.get(i, a) {
                continue;
            }
            let sign = mono.gamma.sign_below(i, a);
            let image = Monomial {
                gamma: mono.gamma.with_bit(i, a, true),
                eta: mono.eta,
            };
            out.accumulate(image, apply_sign(c, sign));
        }
        Ok(out)
    }

    /// The Grassmann derivative ∂_{iα}; same parity rule as `mul_theta`,
    /// with the bit cleared instead of set. Satisfies {∂_{iα}, θ_{jβ}} =
    /// δ_{ij}δ_{αβ} as an operator identity.
    pub fn apply_partial(&self, i: usize, a: usize) -> Result<Self> {
        self.check_theta_index(i, a)?;
        let mut out = Self {
            m: self.m,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for (mono, c) in &self.terms {
            if !mono.gamma.get(i, a) {
                continue;
            }
            let sign = mono.gamma.sign_below(i, a);
            let image = Monomial {
                gamma: mono.gamma.with_bit(i, a, false),
                eta: mono.eta,
            };
            out.accumulate(image, apply_sign(c, sign));
        }
        Ok(out)
    }

    /// Left multiplication by e_α on the Clifford factor: the bit η_α is
    /// toggled (e_α² = 1) and the sign is the parity of the generators with
    /// smaller index.
    pub fn clifford_left_mul(&self, a: usize) -> Result<Self> {
        if !(1..=self.p).contains(&a) {
            return Err(Error::invalid(format!(
                "clifford index {} outside 1..={}",
                a, self.p
            )));
        }
        let mut out = Self {
            m: self.m,
            p: self.p,
            terms: BTreeMap::new(),
        };
        for (mono, c) in &self.terms {
            let sign = mono.eta.sign_below(a);
            let image = Monomial {
                gamma: mono.gamma,
                eta: mono.eta.with_toggled(a),
            };
            out.accumulate(image, apply_sign(c, sign));
        }
        Ok(out)
    }

    /// The bilinear pairing with orthonormal monomial basis: the sum of
    /// coefficient products over shared monomials. Coefficients are rational
    /// throughout, so conjugation is the identity.
    pub fn inner_product(&self, other: &Self) -> Result<BigRational> {
        if self.m != other.m || self.p != other.p {
            return Err(Error::invalid(format!(
                "inner product between ambients ({}, {}) and ({}, {})",
                self.m, self.p, other.m, other.p
            )));
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = BigRational::zero();
        for (mono, c) in &small.terms {
            if let Some(d) = large.terms.get(mono) {
                acc += c * d;
            }
        }
        Ok(acc)
    }

    fn check_theta_index(&self, i: usize, a: usize) -> Result<()> {
        if !(1..=self.m).contains(&i) || !(1..=self.p).contains(&a) {
            return Err(Error::invalid(format!(
                "theta index ({}, {}) outside 1..={} x 1..={}",
                i, a, self.m, self.p
            )));
        }
        Ok(())
    }
}

fn apply_sign(c: &BigRational, sign: i32) -> BigRational {
    if sign < 0 {
        -c.clone()
    } else {
        c.clone()
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same_ambient(rhs);
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.accumulate(*mono, c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same_ambient(rhs);
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.accumulate(*mono, -c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            m: self.m,
            p: self.p,
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-{} * {}", c.abs(), mono)?;
                } else {
                    write!(f, "{} * {}", c, mono)?;
                }
            } else if c.is_negative() {
                write!(f, " - {} * {}", c.abs(), mono)?;
            } else {
                write!(f, " + {} * {}", c, mono)?;
            }
        }
        Ok(())
    }
}
