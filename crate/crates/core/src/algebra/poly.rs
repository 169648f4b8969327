use std::fmt;

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::{int, ExactRational};
use crate::error::Result;

/// Dense univariate polynomial over ℚ in the family parameter `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Coefficient of `c^i`.
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// Unique polynomial of degree `< points.len()` through the given points,
    /// by an exact Vandermonde solve. Abscissae must be distinct.
    pub fn interpolate(points: &[(ExactRational, ExactRational)]) -> Result<Self> {
        let n = points.len();
        let rows = points
            .iter()
            .map(|(x, _)| {
                let mut row = Vec::with_capacity(n);
                let mut p = ExactRational::one();
                for _ in 0..n {
                    row.push(p.clone());
                    p *= x;
                }
                row
            })
            .collect();
        let vandermonde = RationalMatrix::from_rows(rows)?;
        let ys: Vec<ExactRational> = points.iter().map(|(_, y)| y.clone()).collect();
        Ok(Self::new(vandermonde.solve(&ys)?))
    }
}

/// Prints e.g. `43008*c^5 + 9216*c^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < ExactRational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "c".to_string(),
                _ => format!("c^{i}"),
            };
            match (var.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{var}")?,
                (false, false) => write!(f, "{abs}*{var}")?,
            }
        }
        Ok(())
    }
}
