use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{partitions, ExactRational, Partition};
use crate::error::{Error, Result};
use crate::manifolds::ManifoldModel;

/// Pontryagin numbers `p_I[M]` of a `4k`-manifold for every partition `I` of `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharNumberVector {
    dimension: u32,
    values: BTreeMap<Partition, ExactRational>,
}

impl CharNumberVector {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn values(&self) -> &BTreeMap<Partition, ExactRational> {
        &self.values
    }

    pub fn get(&self, p: &Partition) -> ExactRational {
        self.values.get(p).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }
}

/// All Pontryagin numbers of `m`.
pub fn pontryagin_numbers(m: &ManifoldModel) -> Result<CharNumberVector> {
    let dimension = m.real_dimension();
    if !dimension.is_multiple_of(4) {
        return Err(Error::NotMultipleOfFour(dimension));
    }
    Ok(CharNumberVector { dimension, values: m.pontryagin_numbers() })
}

/// Linear combination `Σ λ_I p_I` of Pontryagin numbers in a fixed dimension.
/// Every partition of `dim/4` is present (possibly with coefficient 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    dimension: u32,
    coefficients: BTreeMap<Partition, ExactRational>,
}

impl Functional {
    pub fn zero(dimension: u32) -> Result<Self> {
        if !dimension.is_multiple_of(4) {
            return Err(Error::NotMultipleOfFour(dimension));
        }
        let coefficients = partitions(dimension / 4).into_iter().map(|p| (p, ExactRational::zero())).collect();
        Ok(Functional { dimension, coefficients })
    }

    /// The single Pontryagin number `p_I`.
    pub fn pontryagin(dimension: u32, index: &Partition) -> Result<Self> {
        let mut f = Self::zero(dimension)?;
        f.set(index, ExactRational::one())?;
        Ok(f)
    }

    /// Coefficients listed in the order of [`partitions`].
    pub fn from_vector(dimension: u32, values: &[ExactRational]) -> Result<Self> {
        let mut f = Self::zero(dimension)?;
        let parts = partitions(dimension / 4);
        if parts.len() != values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} partitions",
                values.len(),
                parts.len()
            )));
        }
        for (p, v) in parts.into_iter().zip(values) {
            f.coefficients.insert(p, v.clone());
        }
        Ok(f)
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, ExactRational> {
        &self.coefficients
    }

    pub fn coefficient(&self, p: &Partition) -> ExactRational {
        self.coefficients.get(p).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn set(&mut self, p: &Partition, value: ExactRational) -> Result<()> {
        if p.weight() * 4 != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "{p} has weight {}, dim {} needs {}",
                p.weight(),
                self.dimension,
                self.dimension / 4
            )));
        }
        self.coefficients.insert(p.clone(), value);
        Ok(())
    }

    /// Coefficients in the order of [`partitions`].
    pub fn to_vector(&self) -> Vec<ExactRational> {
        partitions(self.dimension / 4).iter().map(|p| self.coefficient(p)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.values().all(Zero::is_zero)
    }

    pub fn evaluate(&self, v: &CharNumberVector) -> Result<ExactRational> {
        if v.dimension != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "functional in dim {} applied to a {}-manifold",
                self.dimension, v.dimension
            )));
        }
        Ok(self.coefficients.iter().map(|(p, c)| c * v.get(p)).sum())
    }

    pub fn evaluate_on(&self, m: &ManifoldModel) -> Result<ExactRational> {
        self.evaluate(&pontryagin_numbers(m)?)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch(format!("dims {} and {}", self.dimension, other.dimension)));
        }
        let mut out = self.clone();
        for (p, c) in &other.coefficients {
            *out.coefficients.entry(p.clone()).or_insert_with(ExactRational::zero) += c;
        }
        Ok(out)
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        let coefficients = self.coefficients.iter().map(|(p, c)| (p.clone(), c * r)).collect();
        Functional { dimension: self.dimension, coefficients }
    }
}

/// Prints the nonzero terms as `c*p_I`, largest part first, e.g.
/// `62/945*p3 - 13/945*p1*p2 + 2/945*p1^3`; the zero functional prints `0`.
impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in partitions(self.dimension / 4) {
            let c = self.coefficient(&p);
            if c.is_zero() {
                continue;
            }
            let neg = c < ExactRational::zero();
            let abs = if neg { -c } else { c };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}*{p}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
