//! One-parameter families of manifolds, exact interpolation of functionals
//! along them, and the boundedness / distinctness engines.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{int, partitions, ExactRational, Partition, Polynomial, RationalMatrix};
use crate::error::{Error, Result};
use crate::manifolds::{build_hp, product, x12, y16, z20, ManifoldModel};

use super::vector::{pontryagin_numbers, CharNumberVector, Functional};

type Constructor = Arc<dyn Fn(i64) -> Result<ManifoldModel> + Send + Sync>;

/// A family `c ↦ M_c` whose Pontryagin numbers are polynomials in `c` of
/// degree at most `max_degree`. Any parity restriction (e.g. spin needs an
/// even bundle degree) is built into the constructor via a substitution such
/// as `c ↦ 2c`, so every integer parameter is admissible.
#[derive(Clone)]
pub struct FamilySpec {
    name: String,
    dimension: u32,
    substitution: String,
    max_degree: usize,
    constructor: Constructor,
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilySpec")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("substitution", &self.substitution)
            .field("max_degree", &self.max_degree)
            .finish()
    }
}

impl FamilySpec {
    pub fn new(
        name: impl Into<String>,
        dimension: u32,
        substitution: impl Into<String>,
        max_degree: usize,
        constructor: impl Fn(i64) -> Result<ManifoldModel> + Send + Sync + 'static,
    ) -> Self {
        FamilySpec {
            name: name.into(),
            dimension,
            substitution: substitution.into(),
            max_degree,
            constructor: Arc::new(constructor),
        }
    }

    /// Spin members `X¹²_{2c}`.
    pub fn x12() -> Self {
        Self::new("X12", 12, "c -> X12_{2c} (spin)", 7, |c| Ok(x12(2 * c)))
    }

    /// All members `X¹²_c`.
    pub fn x12_all() -> Self {
        Self::new("X12-all", 12, "c -> X12_c", 7, |c| Ok(x12(c)))
    }

    /// `Y¹⁶_c`, spin for every `c`.
    pub fn y16() -> Self {
        Self::new("Y16", 16, "c -> Y16_c (spin)", 7, |c| Ok(y16(c)))
    }

    /// Spin members `Z²⁰_{2c}`.
    pub fn z20() -> Self {
        Self::new("Z20", 20, "c -> Z20_{2c} (spin)", 7, |c| Ok(z20(2 * c)))
    }

    /// All members `Z²⁰_c`.
    pub fn z20_all() -> Self {
        Self::new("Z20-all", 20, "c -> Z20_c", 7, |c| Ok(z20(c)))
    }

    /// `X¹²_{2c} × HP^n`.
    pub fn x12_times_hp(n: u32) -> Self {
        Self::new(format!("X12xHP:{n}"), 12 + 4 * n, format!("c -> X12_{{2c}} x HP^{n} (spin)"), 7, move |c| {
            product(&x12(2 * c), &build_hp(n)?)
        })
    }

    /// Looks up `X12`, `X12-all`, `Y16`, `Z20`, `Z20-all` or `X12xHP:<n>`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "X12" => Ok(Self::x12()),
            "X12-all" => Ok(Self::x12_all()),
            "Y16" => Ok(Self::y16()),
            "Z20" => Ok(Self::z20()),
            "Z20-all" => Ok(Self::z20_all()),
            _ => match name.strip_prefix("X12xHP:").map(str::parse::<u32>) {
                Some(Ok(n)) if n >= 1 => Ok(Self::x12_times_hp(n)),
                _ => Err(Error::Unsupported(format!("unknown family `{name}`"))),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// How the parameter maps to the manifold, e.g. `c -> X12_{2c} (spin)`.
    pub fn substitution(&self) -> &str {
        &self.substitution
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn build(&self, c: i64) -> Result<ManifoldModel> {
        (self.constructor)(c)
    }

    /// Interpolation nodes `1..=max_degree+1` followed by the check node.
    fn nodes(&self) -> (Vec<i64>, i64) {
        let n = self.max_degree as i64 + 1;
        ((1..=n).collect(), n + 1)
    }

    fn interpolate(&self, eval: impl Fn(i64) -> Result<ExactRational>) -> Result<Polynomial> {
        let (nodes, check) = self.nodes();
        let points = nodes.iter().map(|&c| Ok((int(c), eval(c)?))).collect::<Result<Vec<_>>>()?;
        let poly = Polynomial::interpolate(&points)?;
        if poly.eval(&int(check)) != eval(check)? {
            return Err(Error::DegreeBound { max_degree: self.max_degree, sample: check });
        }
        Ok(poly)
    }

    /// Every Pontryagin number of the family as a polynomial in `c`.
    pub fn number_polynomials(&self) -> Result<BTreeMap<Partition, Polynomial>> {
        let (nodes, check) = self.nodes();
        let samples: BTreeMap<i64, CharNumberVector> = nodes
            .iter()
            .chain(std::iter::once(&check))
            .map(|&c| Ok((c, pontryagin_numbers(&self.build(c)?)?)))
            .collect::<Result<_>>()?;
        let first = &samples[&1];
        first.values().keys().map(|p| Ok((p.clone(), self.interpolate(|c| Ok(samples[&c].get(p)))?))).collect()
    }
}

/// `f(M_c)` as an exact polynomial in `c`, by interpolation at
/// `max_degree + 1` parameters plus one verification sample.
pub fn family_polynomial(fam: &FamilySpec, f: &Functional) -> Result<Polynomial> {
    if f.dimension() != fam.dimension {
        return Err(Error::DimensionMismatch(format!(
            "functional in dim {} on family {} of dim {}",
            f.dimension(),
            fam.name,
            fam.dimension
        )));
    }
    fam.interpolate(|c| f.evaluate_on(&fam.build(c)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Constant on every family given; the polynomials are listed per family.
    BoundedOnFamilies { polynomials: Vec<(String, Polynomial)> },
    /// Non-constant on `witness`.
    Unbounded { witness: String, substitution: String, polynomial: Polynomial },
}

impl Verdict {
    pub fn is_unbounded(&self) -> bool {
        matches!(self, Verdict::Unbounded { .. })
    }
}

/// `f` is unbounded as soon as its polynomial along one family has a nonzero
/// coefficient in positive degree.
pub fn unbounded_verdict(f: &Functional, fams: &[FamilySpec]) -> Result<Verdict> {
    let mut polynomials = Vec::new();
    for fam in fams {
        let poly = family_polynomial(fam, f)?;
        if !poly.is_constant() {
            return Ok(Verdict::Unbounded {
                witness: fam.name.clone(),
                substitution: fam.substitution.clone(),
                polynomial: poly,
            });
        }
        polynomials.push((fam.name.clone(), poly));
    }
    Ok(Verdict::BoundedOnFamilies { polynomials })
}

/// Families used by the verdict engine in each dimension.
pub fn designated_families(dimension: u32) -> Result<Vec<FamilySpec>> {
    match dimension {
        12 => Ok(vec![FamilySpec::x12()]),
        16 => Ok(vec![FamilySpec::y16()]),
        20 => Ok(vec![FamilySpec::z20(), FamilySpec::x12_times_hp(2)]),
        d if d >= 24 && d % 4 == 0 => Ok(vec![FamilySpec::x12_times_hp((d - 12) / 4)]),
        d => Err(Error::Unsupported(format!("no designated families in dimension {d}"))),
    }
}

/// Kernel of the map `λ ↦ (coefficients of Σ λ_i f_i along every family)`.
/// Empty exactly when no nonzero combination of `functionals` is bounded on
/// all of `fams`.
pub fn joint_kernel(functionals: &[Functional], fams: &[FamilySpec]) -> Result<Vec<Vec<ExactRational>>> {
    let polys: Vec<Vec<Polynomial>> = fams
        .iter()
        .map(|fam| functionals.iter().map(|f| family_polynomial(fam, f)).collect())
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for (fam, per_functional) in fams.iter().zip(&polys) {
        for power in 1..=fam.max_degree {
            rows.push(per_functional.iter().map(|p| p.coeff(power)).collect());
        }
    }
    Ok(RationalMatrix::from_rows(rows)?.nullspace())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctnessReport {
    pub distinct: bool,
    /// For each pair `(c_i, c_j)` with `i < j`, a partition whose Pontryagin
    /// numbers differ (largest part first), or `None` when the two vectors
    /// coincide.
    pub separators: Vec<(i64, i64, Option<Partition>)>,
}

/// Whether the rational cobordism classes `[M_c]`, `c ∈ params`, are pairwise
/// distinct; Pontryagin numbers are a complete rational invariant.
pub fn distinct_cobordism_types(fam: &FamilySpec, params: &[i64]) -> Result<DistinctnessReport> {
    let vectors = params.iter().map(|&c| Ok((c, pontryagin_numbers(&fam.build(c)?)?))).collect::<Result<Vec<_>>>()?;
    let mut separators = Vec::new();
    for (i, (ci, vi)) in vectors.iter().enumerate() {
        for (cj, vj) in &vectors[i + 1..] {
            let sep = partitions(fam.dimension / 4).into_iter().find(|p| vi.get(p) != vj.get(p));
            separators.push((*ci, *cj, sep));
        }
    }
    let distinct = separators.iter().all(|(_, _, s)| s.is_some());
    Ok(DistinctnessReport { distinct, separators })
}
