//! Multiplicative genera: signature, Â, the twisted Dirac index
//! `Â(M; T_C M)` and the q-expansion of the elliptic genus.
//!
//! Every genus is computed through the universal K-polynomials applied to the
//! Pontryagin numbers. When the manifold carries Chern roots the genus is also
//! computed directly as `⟨Π f(x_i), [M]⟩` and both values must agree exactly;
//! a mismatch is reported as [`Error::Consistency`].

mod sequence;
mod series;

pub use sequence::{k_polynomials_with_variables, universal_k_polynomials, MultiplicativeSequence};
pub use series::{ahat_series, cosh_series, elliptic_series, l_series, tangent_twist_series, CharacteristicSeries};

use num_traits::Zero;

use crate::algebra::{int, Coeff, ExactRational, GradedElement, Series};
use crate::error::{Error, Result};
use crate::manifolds::ManifoldModel;

/// Coefficient rings a genus can take values in, together with the matching
/// ring of cohomology-valued classes used by the root pipeline.
pub trait GenusCoeff: Coeff {
    type Class: Coeff;
    /// `self · x`
    fn embed(&self, x: &GradedElement) -> Self::Class;
    fn pair_class(m: &ManifoldModel, class: &Self::Class) -> Result<Self>;
}

impl GenusCoeff for ExactRational {
    type Class = GradedElement;
    fn embed(&self, x: &GradedElement) -> GradedElement {
        x.scale(self)
    }
    fn pair_class(m: &ManifoldModel, class: &GradedElement) -> Result<Self> {
        m.pair(class)
    }
}

impl GenusCoeff for Series<ExactRational> {
    type Class = Series<GradedElement>;
    fn embed(&self, x: &GradedElement) -> Series<GradedElement> {
        self.map(|r| x.scale(r))
    }
    fn pair_class(m: &ManifoldModel, class: &Series<GradedElement>) -> Result<Self> {
        let coeffs = class.coeffs().iter().map(|c| m.pair(c)).collect::<Result<Vec<_>>>()?;
        Ok(Series::new(coeffs, class.order()))
    }
}

/// A characteristic series with its K-polynomials up to a fixed weight.
#[derive(Debug, Clone)]
pub struct Genus<C> {
    series: CharacteristicSeries<C>,
    sequence: MultiplicativeSequence<C>,
}

impl<C: GenusCoeff> Genus<C> {
    pub fn new(series: CharacteristicSeries<C>, max_weight: u32) -> Result<Self> {
        let sequence = universal_k_polynomials(&series, max_weight)?;
        Ok(Genus { series, sequence })
    }

    pub fn series(&self) -> &CharacteristicSeries<C> {
        &self.series
    }

    pub fn sequence(&self) -> &MultiplicativeSequence<C> {
        &self.sequence
    }

    /// `K_k(p_1, …, p_k)[M]` for `dim M = 4k`.
    pub fn via_k_polynomials(&self, m: &ManifoldModel) -> Result<C> {
        let k = weight_of(m)?;
        self.sequence.evaluate_on_numbers(k, &m.pontryagin_numbers())
    }

    /// `⟨Π f(x_i), [M]⟩` over the Chern roots; `None` without root data.
    pub fn via_roots(&self, m: &ManifoldModel) -> Result<Option<C>> {
        match root_class(m, &self.series) {
            Some(class) => Ok(Some(C::pair_class(m, &class)?)),
            None => Ok(None),
        }
    }

    /// Both pipelines where available; they must agree.
    pub fn evaluate(&self, m: &ManifoldModel) -> Result<C> {
        let via_k = self.via_k_polynomials(m)?;
        if let Some(direct) = self.via_roots(m)? {
            if direct != via_k {
                return Err(Error::Consistency(format!(
                    "{} genus of {}: root product {direct:?} differs from K-polynomials {via_k:?}",
                    self.series.name(),
                    m.name()
                )));
            }
        }
        Ok(via_k)
    }
}

fn weight_of(m: &ManifoldModel) -> Result<u32> {
    let dim = m.real_dimension();
    if !dim.is_multiple_of(4) {
        return Err(Error::NotMultipleOfFour(dim));
    }
    Ok(dim / 4)
}

/// `Π f(x_i)` as a class, for root-type tangent data.
pub fn root_class<C: GenusCoeff>(m: &ManifoldModel, series: &CharacteristicSeries<C>) -> Option<C::Class> {
    let roots = m.roots()?;
    let ring = m.ring();
    let f = series.series().coeffs();
    let one = GradedElement::one(ring);
    let top = (m.real_dimension() / 4) as usize;
    let mut acc = f[0].embed(&one);
    for x in roots {
        let y = x * x;
        let mut power = one.clone();
        let mut factor = f[0].embed(&one);
        for fr in f.iter().take(top + 1).skip(1) {
            power = &power * &y;
            if power.is_zero() {
                break;
            }
            factor = factor.plus(&fr.embed(&power));
        }
        acc = acc.times(&factor);
    }
    Some(acc)
}

/// Signature (L-genus) valid up to weight `max_weight`.
pub fn signature_genus(max_weight: u32) -> Result<Genus<ExactRational>> {
    Genus::new(l_series(max_weight as usize + 1), max_weight)
}

/// Â-genus valid up to weight `max_weight`.
pub fn ahat_genus(max_weight: u32) -> Result<Genus<ExactRational>> {
    Genus::new(ahat_series(max_weight as usize + 1), max_weight)
}

/// Evaluates a rational genus. Manifolds whose dimension is not a multiple of
/// four get 0 by convention; callers that care check the dimension first.
pub fn evaluate_genus(m: &ManifoldModel, genus: &Genus<ExactRational>) -> Result<ExactRational> {
    if !m.real_dimension().is_multiple_of(4) {
        return Ok(ExactRational::zero());
    }
    genus.evaluate(m)
}

pub fn signature(m: &ManifoldModel) -> Result<ExactRational> {
    evaluate_genus(m, &signature_genus(m.real_dimension() / 4)?)
}

pub fn ahat(m: &ManifoldModel) -> Result<ExactRational> {
    evaluate_genus(m, &ahat_genus(m.real_dimension() / 4)?)
}

/// The elliptic genus as a q-expansion, normalized as `q^{k/2} φ(M)`:
/// coefficients of `q^0 … q^N` of
/// `Â(M; ⊗_{n odd} Λ_{−q^n} T_C M ⊗ ⊗_{n even} S_{q^n} T_C M)`.
#[derive(Debug, Clone)]
pub struct EllipticGenus {
    q_order: usize,
    normalized: Genus<Series<ExactRational>>,
    at_zero: Series<ExactRational>,
}

impl EllipticGenus {
    pub fn new(max_weight: u32, q_order: usize) -> Result<Self> {
        let (series, at_zero) = elliptic_series(max_weight as usize + 1, q_order);
        Ok(EllipticGenus { q_order, normalized: Genus::new(series, max_weight)?, at_zero })
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn genus(&self) -> &Genus<Series<ExactRational>> {
        &self.normalized
    }

    /// Coefficients of `q^0 … q^N`.
    pub fn evaluate(&self, m: &ManifoldModel) -> Result<Vec<ExactRational>> {
        weight_of(m)?;
        let normalized = self.normalized.evaluate(m)?;
        let scale = self.at_zero.pow(m.real_dimension() / 2);
        Ok(normalized.times(&scale).into_coeffs())
    }
}

/// `q^{k/2} φ(M)` to order `q^N`; errors unless `dim M = 4k`.
pub fn elliptic_q_coefficients(m: &ManifoldModel, order: usize) -> Result<Vec<ExactRational>> {
    EllipticGenus::new(weight_of(m)?, order)?.evaluate(m)
}

/// Index of the Dirac operator twisted by the complexified tangent bundle.
#[derive(Debug, Clone)]
pub struct TangentTwistedAhat {
    ahat: Genus<ExactRational>,
    twist: Genus<Series<ExactRational>>,
}

impl TangentTwistedAhat {
    pub fn new(max_weight: u32) -> Result<Self> {
        Ok(TangentTwistedAhat {
            ahat: ahat_genus(max_weight)?,
            twist: Genus::new(tangent_twist_series(max_weight as usize + 1), max_weight)?,
        })
    }

    /// Via universal polynomials: the `t`-coefficient of the genus of
    /// `Â(x)(1 + t(2cosh x − 2))` is `Â(M; T_C M) − dim·Â(M)`.
    pub fn via_k_polynomials(&self, m: &ManifoldModel) -> Result<ExactRational> {
        let ahat = self.ahat.via_k_polynomials(m)?;
        let twisted = self.twist.via_k_polynomials(m)?;
        Ok(twisted.coeff(1) + ahat * int(m.real_dimension() as i64))
    }

    /// Directly as `⟨Â(M) ch(T_C M), [M]⟩` with
    /// `ch(T_C M) = Σ (e^{x_i} + e^{−x_i}) − (2·#roots − dim)`.
    pub fn via_roots(&self, m: &ManifoldModel) -> Result<Option<ExactRational>> {
        let Some(roots) = m.roots() else {
            return Ok(None);
        };
        let ring = m.ring();
        let one = GradedElement::one(ring);
        let top = (m.real_dimension() / 4) as usize;
        let cosh = cosh_series(top);
        let mut ch = one.scale(&int(m.real_dimension() as i64 - 2 * roots.len() as i64));
        for x in roots {
            let y = x * x;
            let mut power = one.clone();
            for c in cosh.coeffs() {
                ch = &ch + &power.scale(&(c * int(2)));
                power = &power * &y;
            }
        }
        let ahat_class = root_class(m, self.ahat.series()).expect("root data");
        Ok(Some(m.pair(&(&ahat_class * &ch))?))
    }

    pub fn evaluate(&self, m: &ManifoldModel) -> Result<ExactRational> {
        weight_of(m)?;
        let via_k = self.via_k_polynomials(m)?;
        if let Some(direct) = self.via_roots(m)? {
            if direct != via_k {
                return Err(Error::Consistency(format!(
                    "Ahat(M;T) of {}: roots give {direct}, K-polynomials give {via_k}",
                    m.name()
                )));
            }
        }
        Ok(via_k)
    }
}

/// `Â(M; T_C M)`; errors unless `dim M = 4k`.
pub fn twisted_ahat_tangent(m: &ManifoldModel) -> Result<ExactRational> {
    TangentTwistedAhat::new(weight_of(m)?)?.evaluate(m)
}
