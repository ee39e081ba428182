//! Linear operators on the module, represented as shareable closures.

use std::sync::Arc;

use num::BigRational;

use crate::algebra::element::AlgebraElement;

type OpFn = dyn Fn(&AlgebraElement) -> AlgebraElement + Send + Sync;

/// A linear operator on the (m, p) ambient. Linearity is a contract of the
/// wrapped function, not enforced; it is exercised by the property tests.
#[derive(Clone)]
pub struct LinearOperator {
    m: usize,
    p: usize,
    f: Arc<OpFn>,
}

impl LinearOperator {
    pub fn new(
        m: usize,
        p: usize,
        f: impl Fn(&AlgebraElement) -> AlgebraElement + Send + Sync + 'static,
    ) -> Self {
        Self { m, p, f: Arc::new(f) }
    }

    pub fn identity(m: usize, p: usize) -> Self {
        Self::new(m, p, |x| x.clone())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        assert!(
            x.m() == self.m && x.p() == self.p,
            "operator on ambient ({}, {}) applied to element in ({}, {})",
            self.m,
            self.p,
            x.m(),
            x.p()
        );
        (self.f)(x)
    }

    fn assert_same_ambient(&self, other: &Self) {
        assert!(
            self.m == other.m && self.p == other.p,
            "operators live in different ambients"
        );
    }

    /// Operator product: `self.compose(inner)` applies `inner` first.
    pub fn compose(&self, inner: &LinearOperator) -> LinearOperator {
        self.assert_same_ambient(inner);
        let outer = self.clone();
        let inner = inner.clone();
        LinearOperator::new(self.m, self.p, move |x| outer.apply(&inner.apply(x)))
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        self.assert_same_ambient(other);
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.m, self.p, move |x| &a.apply(x) + &b.apply(x))
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        self.assert_same_ambient(other);
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.m, self.p, move |x| &a.apply(x) - &b.apply(x))
    }

    pub fn scale(&self, c: BigRational) -> LinearOperator {
        let a = self.clone();
        LinearOperator::new(self.m, self.p, move |x| a.apply(x).scale(&c))
    }

    /// The commutator [self, other] = self∘other − other∘self.
    pub fn commutator(&self, other: &LinearOperator) -> LinearOperator {
        self.compose(other).sub(&other.compose(self))
    }
}

impl std::fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearOperator({}x{})", self.m, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_inner_first() {
        // X = multiply by th(1,1), Y = multiply by th(2,1); X∘Y maps 1 to
        // th(1,1) * (th(2,1) * 1) = +th(1,1)th(2,1).
        let x = LinearOperator::new(2, 1, |v| v.mul_theta(1, 1).unwrap());
        let y = LinearOperator::new(2, 1, |v| v.mul_theta(2, 1).unwrap());
        let one = AlgebraElement::one(2, 1).unwrap();
        let xy = x.compose(&y).apply(&one);
        let yx = y.compose(&x).apply(&one);
        assert_eq!(xy, one.mul_theta(2, 1).unwrap().mul_theta(1, 1).unwrap());
        assert_eq!(yx, xy.scale(&BigRational::from_integer((-1).into())));
    }

    #[test]
    fn commutator_of_op_with_itself_vanishes() {
        let x = LinearOperator::new(1, 1, |v| v.mul_theta(1, 1).unwrap());
        let one = AlgebraElement::one(1, 1).unwrap();
        assert!(x.commutator(&x).apply(&one).is_zero());
    }
}
