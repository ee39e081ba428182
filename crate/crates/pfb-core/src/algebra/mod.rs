//! Exact representation of the exterior-Clifford module and the operators
//! acting on it.
//!
//! The ambient space is Λ[C^{mp}] ⊗ Cl_p with monomial basis θ^γ e^η. The
//! vector variables Θ_i = Σ_α θ_{iα} e_α and the Dirac operators
//! D_i = Σ_α ∂_{iα} e_α act componentwise on the two tensor factors: θ_{iα}
//! and ∂_{iα} touch only the Grassmann factor, e_α only the Clifford one,
//! with no extra sign between the factors.

mod element;
mod exponent;
mod operator;

pub use element::{AlgebraElement, Monomial};
pub use exponent::{CliffordExponent, GrassmannExponent, MAX_BITS};
pub use operator::LinearOperator;

use num::BigRational;

use crate::error::{Error, Result};

/// The (m, p) ambient: a factory for elements and operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Space {
    m: usize,
    p: usize,
}

impl Space {
    pub fn new(m: usize, p: usize) -> Result<Self> {
        GrassmannExponent::zero(m, p)?;
        CliffordExponent::zero(p)?;
        Ok(Self { m, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// log2 of the monomial basis size: m·p + p.
    pub fn state_bits(&self) -> usize {
        self.m * self.p + self.p
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.m, self.p).expect("ambient validated at construction")
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.m, self.p).expect("ambient validated at construction")
    }

    pub fn basis_element(&self, mono: Monomial) -> AlgebraElement {
        AlgebraElement::from_monomial(mono, BigRational::from_integer(1.into()))
            .expect("monomial from this ambient")
    }

    /// All 2^{mp+p} basis monomials. Only usable for small ambients;
    /// exhaustive verification guards the state space before iterating.
    pub fn basis_monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        let gbits = self.m * self.p;
        assert!(
            self.state_bits() < 64,
            "basis enumeration requires mp+p < 64"
        );
        (0..1u64 << gbits).flat_map(move |g| {
            (0..1u64 << self.p).map(move |e| Monomial {
                gamma: GrassmannExponent::from_bits(g as u128, self.m, self.p)
                    .expect("bits within ambient"),
                eta: CliffordExponent::from_bits(e as u128, self.p).expect("bits within ambient"),
            })
        })
    }

    fn check_row_index(&self, i: usize) -> Result<()> {
        if !(1..=self.m).contains(&i) {
            return Err(Error::invalid(format!(
                "row index {} outside 1..={}",
                i, self.m
            )));
        }
        Ok(())
    }

    /// The vector variable Θ_i = Σ_α θ_{iα} e_α.
    pub fn theta_op(&self, i: usize) -> Result<LinearOperator> {
        self.check_row_index(i)?;
        let p = self.p;
        Ok(LinearOperator::new(self.m, self.p, move |x| {
            let mut acc = AlgebraElement::zero(x.m(), x.p()).expect("same ambient");
            for a in 1..=p {
                let term = x
                    .mul_theta(i, a)
                    .expect("index validated")
                    .clifford_left_mul(a)
                    .expect("index validated");
                acc = &acc + &term;
            }
            acc
        }))
    }

    /// The Dirac operator D_i = Σ_α ∂_{iα} e_α.
    pub fn dirac_op(&self, i: usize) -> Result<LinearOperator> {
        self.check_row_index(i)?;
        let p = self.p;
        Ok(LinearOperator::new(self.m, self.p, move |x| {
            let mut acc = AlgebraElement::zero(x.m(), x.p()).expect("same ambient");
            for a in 1..=p {
                let term = x
                    .apply_partial(i, a)
                    .expect("index validated")
                    .clifford_left_mul(a)
                    .expect("index validated");
                acc = &acc + &term;
            }
            acc
        }))
    }

    /// The Cartan element h_i = −½ [D_i, Θ_i]; diagonal on every monomial.
    pub fn cartan_h(&self, i: usize) -> Result<LinearOperator> {
        let d = self.dirac_op(i)?;
        let t = self.theta_op(i)?;
        Ok(d.commutator(&t).scale(BigRational::new((-1).into(), 2.into())))
    }
}
