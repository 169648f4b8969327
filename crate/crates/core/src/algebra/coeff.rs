use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::ExactRational;

/// Commutative coefficient ring used by series, multiplicative sequences and
/// genus evaluation.
///
/// Elements carry their own context (ring, truncation order), so the additive
/// and multiplicative units are produced from an existing value.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    /// Whether `self` and `other` may be combined.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &ExactRational) -> Self;
    /// Multiplicative inverse, when it exists.
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for ExactRational {
    fn zero_like(&self) -> Self {
        ExactRational::zero()
    }
    fn one_like(&self) -> Self {
        ExactRational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &ExactRational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
