//! A constructible rational basis of `Ω^SO_{4k} ⊗ ℚ` and the linear algebra
//! that turns genera into Pontryagin-number functionals.

use crate::algebra::{partitions, ExactRational, Partition, RationalMatrix};
use crate::error::{Error, Result};
use crate::genera::{ahat_genus, signature_genus, EllipticGenus, TangentTwistedAhat};
use crate::manifolds::{build_cp, build_point, product, ManifoldModel};

use super::vector::{pontryagin_numbers, Functional};

/// Largest supported `k` (dimension 28).
pub const MAX_WEIGHT: u32 = 7;

/// Products `CP^{2i_1} × ⋯ × CP^{2i_m}` over all partitions `(i_1, …, i_m)`
/// of `k`, together with their Pontryagin-number matrix.
#[derive(Debug, Clone)]
pub struct Basis {
    dimension: u32,
    partitions: Vec<Partition>,
    manifolds: Vec<ManifoldModel>,
    /// Row `b`, column `I`: `p_I[B_b]`.
    numbers: RationalMatrix,
}

impl Basis {
    pub fn new(dimension: u32) -> Result<Self> {
        if !dimension.is_multiple_of(4) {
            return Err(Error::NotMultipleOfFour(dimension));
        }
        let k = dimension / 4;
        if k > MAX_WEIGHT {
            return Err(Error::Unsupported(format!("dimension {dimension} exceeds {}", 4 * MAX_WEIGHT)));
        }
        let parts = partitions(k);
        let manifolds = parts.iter().map(cp_product).collect::<Result<Vec<_>>>()?;
        let rows = manifolds
            .iter()
            .map(|m| {
                let v = pontryagin_numbers(m)?;
                Ok(parts.iter().map(|p| v.get(p)).collect())
            })
            .collect::<Result<Vec<Vec<ExactRational>>>>()?;
        let numbers = RationalMatrix::from_rows(rows)?;
        if numbers.rank() != parts.len() {
            return Err(Error::Consistency(format!("basis in dimension {dimension} is singular")));
        }
        Ok(Basis { dimension, partitions: parts, manifolds, numbers })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn manifolds(&self) -> &[ManifoldModel] {
        &self.manifolds
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn numbers(&self) -> &RationalMatrix {
        &self.numbers
    }

    /// The unique functional taking the given values on the basis manifolds.
    pub fn functional_from_values(&self, values: &[ExactRational]) -> Result<Functional> {
        let lambda = match self.numbers.solve(values) {
            Ok(x) => x,
            Err(Error::Inconsistent) => {
                return Err(Error::Consistency("genus is not a combination of Pontryagin numbers".into()))
            }
            Err(e) => return Err(e),
        };
        let f = Functional::from_vector(self.dimension, &lambda)?;
        // residual check
        for (m, v) in self.manifolds.iter().zip(values) {
            if f.evaluate_on(m)? != *v {
                return Err(Error::Consistency(format!("functional misses basis value on {}", m.name())));
            }
        }
        Ok(f)
    }

    /// Functional of a rational-valued invariant.
    pub fn genus_as_functional(
        &self,
        evaluator: impl Fn(&ManifoldModel) -> Result<ExactRational>,
    ) -> Result<Functional> {
        let values = self.manifolds.iter().map(evaluator).collect::<Result<Vec<_>>>()?;
        self.functional_from_values(&values)
    }

    /// Functionals of a vector-valued invariant, one per component.
    pub fn genera_as_functionals(
        &self,
        evaluator: impl Fn(&ManifoldModel) -> Result<Vec<ExactRational>>,
    ) -> Result<Vec<Functional>> {
        let values = self.manifolds.iter().map(evaluator).collect::<Result<Vec<_>>>()?;
        let width = values.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| {
                let column: Vec<ExactRational> = values.iter().map(|v| v[j].clone()).collect();
                self.functional_from_values(&column)
            })
            .collect()
    }
}

/// `Π CP^{2 i_j}`; the empty partition gives a point.
pub fn cp_product(p: &Partition) -> Result<ManifoldModel> {
    let mut acc = build_point();
    let mut first = true;
    for &i in p.parts() {
        let cp = build_cp(2 * i)?;
        acc = if first { cp } else { product(&acc, &cp)? };
        first = false;
    }
    Ok(acc)
}

pub fn basis_manifolds(dimension: u32) -> Result<Vec<ManifoldModel>> {
    Ok(Basis::new(dimension)?.manifolds)
}

/// Genera that can be named in functional expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGenus {
    Signature,
    AHat,
    /// `Â(M; T_C M)`
    AHatTangent,
    /// Coefficient of `q^j` in `q^{k/2} φ(M)`.
    Elliptic(usize),
}

impl std::fmt::Display for NamedGenus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NamedGenus::Signature => write!(f, "sign"),
            NamedGenus::AHat => write!(f, "ahat"),
            NamedGenus::AHatTangent => write!(f, "ahat_t"),
            NamedGenus::Elliptic(j) => write!(f, "ell[{j}]"),
        }
    }
}

/// A named genus as a functional in the given dimension.
pub fn genus_as_functional(genus: NamedGenus, dimension: u32) -> Result<Functional> {
    genus_as_functional_in(&Basis::new(dimension)?, genus)
}

pub fn genus_as_functional_in(basis: &Basis, genus: NamedGenus) -> Result<Functional> {
    let k = basis.dimension() / 4;
    match genus {
        NamedGenus::Signature => {
            let g = signature_genus(k)?;
            basis.genus_as_functional(|m| g.evaluate(m))
        }
        NamedGenus::AHat => {
            let g = ahat_genus(k)?;
            basis.genus_as_functional(|m| g.evaluate(m))
        }
        NamedGenus::AHatTangent => {
            let g = TangentTwistedAhat::new(k)?;
            basis.genus_as_functional(|m| g.evaluate(m))
        }
        NamedGenus::Elliptic(j) => {
            let g = EllipticGenus::new(k, j)?;
            basis.genus_as_functional(|m| Ok(g.evaluate(m)?[j].clone()))
        }
    }
}

/// Functionals of the q-coefficients `0..=q_order` of `q^{k/2} φ` and the
/// rank of their span.
pub fn elliptic_span(dimension: u32, q_order: usize) -> Result<(Vec<Functional>, usize)> {
    let basis = Basis::new(dimension)?;
    let g = EllipticGenus::new(dimension / 4, q_order)?;
    let functionals = basis.genera_as_functionals(|m| g.evaluate(m))?;
    let rank = span_rank(&functionals)?;
    Ok((functionals, rank))
}

/// `(N, rank)` for `N = 0..=max_order`: how the span of the first `N + 1`
/// q-coefficients grows with the order.
pub fn elliptic_rank_profile(dimension: u32, max_order: usize) -> Result<Vec<(usize, usize)>> {
    let (functionals, _) = elliptic_span(dimension, max_order)?;
    (0..=max_order).map(|n| Ok((n, span_rank(&functionals[..=n])?))).collect()
}

pub fn span_rank(functionals: &[Functional]) -> Result<usize> {
    let Some(first) = functionals.first() else {
        return Ok(0);
    };
    let dim = first.dimension();
    if functionals.iter().any(|f| f.dimension() != dim) {
        return Err(Error::DimensionMismatch("functionals of different dimensions".into()));
    }
    Ok(RationalMatrix::from_rows(functionals.iter().map(Functional::to_vector).collect())?.rank())
}

/// Whether `f` lies in the linear span of `span`.
pub fn span_membership(f: &Functional, span: &[Functional]) -> Result<bool> {
    if span.iter().any(|g| g.dimension() != f.dimension()) {
        return Err(Error::DimensionMismatch(format!("functional in dim {} vs span", f.dimension())));
    }
    let mut with = span.to_vec();
    with.push(f.clone());
    Ok(span_rank(span)? == span_rank(&with)?)
}
