use super::coeff::Coeff;
use super::rational::ExactRational;
use crate::error::{Error, Result};

/// Truncated univariate power series `Σ_{i ≤ order} c_i t^i` over a [`Coeff`]
/// ring. Used both for q-expansions and for even characteristic series in
/// `y = x²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

/// q-expansion with coefficients indexed by q-power `0..=order`.
pub type QSeries<T> = Series<T>;

impl<T: Coeff> Series<T> {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    /// `coeffs` must be non-empty.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        let zero = coeffs[0].zero_like();
        coeffs.resize(order + 1, zero);
        Series { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c · t^power`, zero if `power > order`.
    pub fn monomial(c: T, power: usize, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        if power <= order {
            coeffs[power] = c;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map<U: Coeff>(&self, f: impl FnMut(&T) -> U) -> Series<U> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.coeffs[0].compatible(&other.coeffs[0]) {
            Ok(())
        } else {
            Err(Error::IncompatibleSeries)
        }
    }

    /// Cauchy product truncated at `t^order`.
    pub fn mul_to(&self, other: &Self, order: usize) -> Result<Self> {
        self.check(other)?;
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.vanishes() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn add_series(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| self.coeffs[i].plus(&other.coeffs[i])).collect();
        Ok(Series { coeffs })
    }

    pub fn scale_by(&self, c: &T) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.times(c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

/// Cauchy product of two q-series truncated at `q^order`.
pub fn series_mul<T: Coeff>(s: &QSeries<T>, t: &QSeries<T>, order: usize) -> Result<QSeries<T>> {
    s.mul_to(t, order)
}

impl<T: Coeff> Coeff for Series<T> {
    fn zero_like(&self) -> Self {
        Series { coeffs: vec![self.coeffs[0].zero_like(); self.coeffs.len()] }
    }
    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like(), self.order())
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Coeff::vanishes)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.coeffs[0].compatible(&other.coeffs[0])
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_series(rhs).expect("incompatible series")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_to(rhs, self.order().min(rhs.order())).expect("incompatible series")
    }
    fn negated(&self) -> Self {
        self.map(Coeff::negated)
    }
    fn scaled(&self, r: &ExactRational) -> Self {
        self.map(|c| c.scaled(r))
    }
    /// Inverse by the usual recursion; needs an invertible constant term.
    fn inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&c0_inv).negated());
        }
        Some(Series { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::algebra::ring::{GradedElement, RingSpec, RuleSpec};

    fn s(v: &[i64], order: usize) -> QSeries<ExactRational> {
        Series::new(v.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn cauchy_product_truncates() {
        assert_eq!(series_mul(&s(&[1, -1], 2), &s(&[1, 1, 1], 2), 2).unwrap(), s(&[1, 0, 0], 2));
        // (1+q)^2 = 1 + 2q + q^2, truncated at order 1
        assert_eq!(series_mul(&s(&[1, 1], 1), &s(&[1, 1], 1), 1).unwrap(), s(&[1, 2], 1));
    }

    #[test]
    fn ring_valued_square() {
        let ring = RingSpec::new(vec![("x".into(), 2)], 8, vec![RuleSpec::nilpotent(0, 5)]).unwrap();
        let one = GradedElement::one(&ring);
        let x = GradedElement::generator(&ring, "x").unwrap();
        let t = Series::new(vec![one.clone(), x.clone()], 2);
        let sq = series_mul(&t, &t, 2).unwrap();
        assert_eq!(sq.coeffs(), &[one, x.scale(&int(2)), &x * &x]);
    }

    #[test]
    fn incompatible_rings_error() {
        let r1 = RingSpec::new(vec![("x".into(), 2)], 4, vec![]).unwrap();
        let r2 = RingSpec::new(vec![("y".into(), 2)], 4, vec![]).unwrap();
        let a = Series::constant(GradedElement::one(&r1), 1);
        let b = Series::constant(GradedElement::one(&r2), 1);
        assert_eq!(series_mul(&a, &b, 1), Err(Error::IncompatibleSeries));
    }

    #[test]
    fn inverse_of_geometric() {
        // 1/(1-q) = 1 + q + q^2 + ...
        let inv = s(&[1, -1], 4).inverse().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1], 4));
        let inv = s(&[2, 1], 2).inverse().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1, 2), rat(-1, 4), rat(1, 8)]);
        assert!(s(&[0, 1], 2).inverse().is_none());
    }

    #[test]
    fn nested_series_inverse() {
        // outer variable y, inner q: (1 - q) + y, invert and check
        let inner = |v: &[i64]| s(v, 3);
        let f = Series::new(vec![inner(&[1, -1]), inner(&[1])], 3);
        let g = f.inverse().unwrap();
        assert_eq!(f.times(&g), f.one_like());
    }
}
