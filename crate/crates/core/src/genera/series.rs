//! Even characteristic power series `f(x) = Σ f_r x^{2r}`, stored in the
//! variable `y = x²`.

use num_traits::One;

use crate::algebra::{int, Coeff, ExactRational, Series};

#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicSeries<C> {
    name: String,
    series: Series<C>,
}

impl<C: Coeff> CharacteristicSeries<C> {
    /// Panics unless the constant term is the multiplicative unit.
    pub fn new(name: impl Into<String>, series: Series<C>) -> Self {
        let c0 = series.coeff(0);
        assert_eq!(*c0, c0.one_like(), "characteristic series must start with 1");
        CharacteristicSeries { name: name.into(), series }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> &Series<C> {
        &self.series
    }

    /// Highest power of `y = x²` carried.
    pub fn order(&self) -> usize {
        self.series.order()
    }
}

fn factorial(n: u64) -> ExactRational {
    (1..=n).fold(ExactRational::one(), |acc, k| acc * int(k as i64))
}

/// `cosh x = Σ y^r / (2r)!`
pub fn cosh_series(order: usize) -> Series<ExactRational> {
    Series::new((0..=order).map(|r| factorial(2 * r as u64).recip()).collect(), order)
}

/// `sinh(x)/x = Σ y^r / (2r+1)!`
fn sinhc_series(order: usize) -> Series<ExactRational> {
    Series::new((0..=order).map(|r| factorial(2 * r as u64 + 1).recip()).collect(), order)
}

/// Hirzebruch's `x / tanh x`, whose genus is the signature.
pub fn l_series(order: usize) -> CharacteristicSeries<ExactRational> {
    let s = cosh_series(order).times(&sinhc_series(order).inverse().expect("unit"));
    CharacteristicSeries::new("L", s)
}

/// `(x/2) / sinh(x/2)`, whose genus is the Â-genus.
pub fn ahat_series(order: usize) -> CharacteristicSeries<ExactRational> {
    // sinh(x/2)/(x/2) in y: coefficients 1/((2r+1)! 4^r)
    let mut pow4 = ExactRational::one();
    let coeffs = (0..=order)
        .map(|r| {
            let c = (factorial(2 * r as u64 + 1) * &pow4).recip();
            pow4 *= int(4);
            c
        })
        .collect();
    let s = Series::new(coeffs, order).inverse().expect("unit");
    CharacteristicSeries::new("Ahat", s)
}

fn lift(s: &Series<ExactRational>, inner_order: usize) -> Series<Series<ExactRational>> {
    s.map(|c| Series::constant(c.clone(), inner_order))
}

/// Â-series twisted by the first-order character `1 + t·(2 cosh x − 2)`,
/// coefficients in `ℚ[t]/(t²)`. The `t`-coefficient of its genus is
/// `Â(M; T_C M) − dim(M)·Â(M)`.
pub fn tangent_twist_series(order: usize) -> CharacteristicSeries<Series<ExactRational>> {
    let ahat = lift(ahat_series(order).series(), 1);
    let cosh = cosh_series(order);
    let twist_coeffs = (0..=order)
        .map(|r| if r == 0 { Series::constant(int(1), 1) } else { Series::monomial(&cosh.coeffs()[r] * int(2), 1, 1) })
        .collect();
    let twist = Series::new(twist_coeffs, order);
    CharacteristicSeries::new("Ahat(-;T)", ahat.times(&twist))
}

/// Per-root factor of the elliptic genus integrand,
/// `F(x, q) = (x/2)/sinh(x/2) · Π_{n odd} (1 − q^n e^x)(1 − q^n e^{−x})
///                            · Π_{n even} [(1 − q^n e^x)(1 − q^n e^{−x})]^{−1}`,
/// expanded to `y`-order `order` and `q`-order `q_order`.
///
/// Returns `(F(x, q) / F(0, q), F(0, q))`: the normalized series has constant
/// term 1 and so defines a multiplicative sequence; the genus of a
/// `4k`-manifold is then `F(0, q)^{2k}` times the normalized genus.
pub fn elliptic_series(
    order: usize,
    q_order: usize,
) -> (CharacteristicSeries<Series<ExactRational>>, Series<ExactRational>) {
    let mut f = lift(ahat_series(order).series(), q_order);
    let cosh = cosh_series(order);
    for n in 1..=q_order {
        // (1 − q^n e^x)(1 − q^n e^{−x}) = 1 − 2 q^n cosh x + q^{2n}
        let coeffs = (0..=order)
            .map(|r| {
                let mut inner = Series::monomial(&cosh.coeffs()[r] * int(-2), n, q_order);
                if r == 0 {
                    inner = inner.plus(&Series::constant(int(1), q_order));
                    inner = inner.plus(&Series::monomial(int(1), 2 * n, q_order));
                }
                inner
            })
            .collect();
        let factor = Series::new(coeffs, order);
        if n % 2 == 1 {
            f = f.times(&factor);
        } else {
            f = f.times(&factor.inverse().expect("unit constant term"));
        }
    }
    let at_zero = f.coeff(0).clone();
    let normalized = f.scale_by(&at_zero.inverse().expect("unit"));
    (CharacteristicSeries::new(format!("elliptic[q^{q_order}]"), normalized), at_zero)
}
