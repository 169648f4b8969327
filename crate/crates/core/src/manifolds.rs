//! Cohomology models of closed manifolds: complex and quaternionic projective
//! spaces, projectivized sums of line bundles over `CP^l`, and products.
//!
//! A model carries a truncated rational cohomology ring, stable tangent data
//! (Chern roots of a stable complex structure, or explicit Pontryagin classes)
//! and the normal-form monomial that pairs to 1 with the fundamental class.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use num_traits::One;

use crate::algebra::{int, partitions, ExactRational, GradedElement, Monomial, Partition, RingSpec, RuleSpec};
use crate::error::{Error, Result};

/// `E = O(d_1) ⊕ … ⊕ O(d_r)` over `CP^l`, where `O(d)` is the `d`-fold tensor
/// power of the dual Hopf bundle and `O(0)` the trivial line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleSum {
    pub base_l: u32,
    pub degrees: Vec<i64>,
}

impl LineBundleSum {
    pub fn new(base_l: u32, degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Unsupported("a line bundle sum needs rank at least 1".into()));
        }
        Ok(LineBundleSum { base_l, degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TangentData {
    /// Chern roots of a stable complex structure on the tangent bundle; each
    /// root is a degree-2 class. Trivial summands may be omitted or listed as 0.
    ComplexStableRoots(Vec<GradedElement>),
    /// `p_1, …, p_⌊dim/4⌋`, with `p_i` of degree `4i`.
    ExplicitPontryagin(Vec<GradedElement>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metadata {
    pub spin: bool,
    /// Description of a known metric of nonnegative sectional curvature, if any.
    pub curvature_certificate: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ManifoldModel {
    name: String,
    real_dimension: u32,
    ring: Arc<RingSpec>,
    tangent: TangentData,
    pairing_monomial: Monomial,
    metadata: Metadata,
    total_pontryagin: OnceLock<GradedElement>,
}

impl ManifoldModel {
    fn assemble(
        name: String,
        ring: Arc<RingSpec>,
        tangent: TangentData,
        pairing_monomial: Monomial,
        curvature_certificate: Option<String>,
        spin_hint: bool,
    ) -> Self {
        let real_dimension = ring.degree_of(&pairing_monomial);
        debug_assert_eq!(real_dimension, ring.truncation());
        let spin = match &tangent {
            TangentData::ComplexStableRoots(roots) => first_chern_is_even(&ring, roots),
            TangentData::ExplicitPontryagin(_) => spin_hint,
        };
        ManifoldModel {
            name,
            real_dimension,
            ring,
            tangent,
            pairing_monomial,
            metadata: Metadata { spin, curvature_certificate },
            total_pontryagin: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn real_dimension(&self) -> u32 {
        self.real_dimension
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn tangent(&self) -> &TangentData {
        &self.tangent
    }

    pub fn pairing_monomial(&self) -> &Monomial {
        &self.pairing_monomial
    }

    pub fn metadata(&self) -> &Metadata {
        &self.metadata
    }

    /// Chern roots when the tangent data is of root type.
    pub fn roots(&self) -> Option<&[GradedElement]> {
        match &self.tangent {
            TangentData::ComplexStableRoots(r) => Some(r),
            TangentData::ExplicitPontryagin(_) => None,
        }
    }

    pub fn generator(&self, name: &str) -> Result<GradedElement> {
        GradedElement::generator(&self.ring, name)
    }

    /// Evaluation on the fundamental class: the coefficient of the pairing
    /// monomial in the normal form of `x`.
    pub fn pair(&self, x: &GradedElement) -> Result<ExactRational> {
        if !Arc::ptr_eq(x.ring(), &self.ring) && **x.ring() != *self.ring {
            return Err(Error::MixedRings);
        }
        Ok(x.coefficient(&self.pairing_monomial))
    }

    /// Total Pontryagin class `1 + p_1 + p_2 + …`. For root data this is
    /// `Π (1 + x²)` over the roots.
    pub fn total_pontryagin(&self) -> &GradedElement {
        self.total_pontryagin.get_or_init(|| {
            let one = GradedElement::one(&self.ring);
            match &self.tangent {
                TangentData::ComplexStableRoots(roots) => {
                    roots.iter().fold(one.clone(), |acc, x| &acc * &(&one + &(x * x)))
                }
                TangentData::ExplicitPontryagin(ps) => ps.iter().fold(one, |acc, p| &acc + p),
            }
        })
    }

    /// `p_i`; `p_0 = 1`.
    pub fn pontryagin_class(&self, i: u32) -> GradedElement {
        self.total_pontryagin().homogeneous_part(4 * i)
    }

    /// `p_I[M]`: the product of Pontryagin classes indexed by `I`, paired with
    /// the fundamental class.
    pub fn pontryagin_number(&self, index: &Partition) -> ExactRational {
        let class =
            index.parts().iter().fold(GradedElement::one(&self.ring), |acc, &i| &acc * &self.pontryagin_class(i));
        class.coefficient(&self.pairing_monomial)
    }

    /// `p_I[M]` for every partition `I` of `dim/4`; empty unless `4 | dim`.
    pub fn pontryagin_numbers(&self) -> BTreeMap<Partition, ExactRational> {
        if !self.real_dimension.is_multiple_of(4) {
            return BTreeMap::new();
        }
        partitions(self.real_dimension / 4)
            .into_iter()
            .map(|p| {
                let v = self.pontryagin_number(&p);
                (p, v)
            })
            .collect()
    }

    /// First Chern class of the stable complex structure (sum of roots).
    pub fn first_chern_class(&self) -> Option<GradedElement> {
        self.roots().map(|roots| roots.iter().fold(GradedElement::zero(&self.ring), |acc, x| &acc + x))
    }

    /// Spin-ness. For root data: every coefficient of `c_1` is even (`w_2` is
    /// the mod-2 reduction of `c_1`). Otherwise the flag recorded at
    /// construction.
    pub fn is_spin(&self) -> bool {
        self.metadata.spin
    }
}

fn first_chern_is_even(ring: &Arc<RingSpec>, roots: &[GradedElement]) -> bool {
    let c1 = roots.iter().fold(GradedElement::zero(ring), |acc, x| &acc + x);
    c1.homogeneous_part(2).terms().values().all(|c| c.is_integer() && c.numer().is_even())
}

/// The one-point manifold, unit for [`product`].
pub fn build_point() -> ManifoldModel {
    let ring = RingSpec::new(vec![], 0, vec![]).expect("empty ring");
    ManifoldModel::assemble(
        "pt".into(),
        ring,
        TangentData::ComplexStableRoots(vec![]),
        vec![],
        Some("point".into()),
        true,
    )
}

/// `CP^n` with `H* = ℚ[b]/(b^{n+1})` and roots `n+1` copies of `b`
/// (`T ⊕ C ≅ (n+1)H`).
pub fn build_cp(n: u32) -> Result<ManifoldModel> {
    if n == 0 {
        return Err(Error::Unsupported("CP^0; use build_point".into()));
    }
    let ring = RingSpec::new(vec![("b".into(), 2)], 2 * n, vec![RuleSpec::nilpotent(0, n as u16 + 1)])?;
    let b = GradedElement::generator_at(&ring, 0);
    let roots = vec![b; n as usize + 1];
    Ok(ManifoldModel::assemble(
        format!("CP^{n}"),
        ring,
        TangentData::ComplexStableRoots(roots),
        vec![n as u16],
        Some("Fubini-Study metric (symmetric space)".into()),
        false,
    ))
}

/// `HP^n` with `H* = ℚ[u]/(u^{n+1})`, `|u| = 4`, and total Pontryagin class
/// `(1+u)^{2n+2} (1+4u)^{-1}`.
pub fn build_hp(n: u32) -> Result<ManifoldModel> {
    if n == 0 {
        return Err(Error::Unsupported("HP^0; use build_point".into()));
    }
    let ring = RingSpec::new(vec![("u".into(), 4)], 4 * n, vec![RuleSpec::nilpotent(0, n as u16 + 1)])?;
    let one = GradedElement::one(&ring);
    let u = GradedElement::generator_at(&ring, 0);
    let denom = (&one + &u.scale(&int(4))).try_inverse().expect("unit");
    let total = &(&one + &u).pow(2 * n + 2) * &denom;
    let ps = (1..=n).map(|i| total.homogeneous_part(4 * i)).collect();
    Ok(ManifoldModel::assemble(
        format!("HP^{n}"),
        ring,
        TangentData::ExplicitPontryagin(ps),
        vec![n as u16],
        Some("standard metric (symmetric space)".into()),
        true,
    ))
}

/// Projectivization `P(E) → CP^l` of a sum of `r` line bundles.
///
/// `H*(P(E)) = ℚ[a, b] / (b^{l+1}, a^r + c_1(E) a^{r-1} + … + c_r(E))` with
/// `c(E) = Π (1 + d_i b)`. The tangent bundle splits stably as
/// `π*T CP^l ⊕ η_E` with `c(η_E ⊕ C) = Π (1 + a + d_i b)`, so the roots are
/// `l+1` copies of `b` and `a + d_i b`.
pub fn build_proj_bundle(spec: &LineBundleSum) -> Result<ManifoldModel> {
    let l = spec.base_l;
    let r = spec.rank();
    let dim = 2 * l + 2 * (r as u32 - 1);
    // elementary symmetric functions of the degrees: c_i(E) = e_i(d) b^i
    let mut e = vec![int(0); r + 1];
    e[0] = int(1);
    for &d in &spec.degrees {
        for i in (1..=r).rev() {
            let prev = e[i - 1].clone();
            e[i] += prev * int(d);
        }
    }
    let rhs = (1..=r).filter(|&i| i as u32 <= l).map(|i| (vec![(r - i) as u16, i as u16], -e[i].clone())).collect();
    let mut rules = vec![RuleSpec { head: 0, power: r as u16, rhs }];
    if l > 0 {
        rules.push(RuleSpec::nilpotent(1, l as u16 + 1));
    }
    let ring = if l > 0 {
        RingSpec::new(vec![("a".into(), 2), ("b".into(), 2)], dim, rules)?
    } else {
        // over a point: no base generator
        let rules = vec![RuleSpec::nilpotent(0, r as u16)];
        RingSpec::new(vec![("a".into(), 2)], dim, rules)?
    };
    let a = GradedElement::generator_at(&ring, 0);
    let mut roots = Vec::with_capacity(l as usize + 1 + r);
    if l > 0 {
        let b = GradedElement::generator_at(&ring, 1);
        roots.extend(std::iter::repeat_n(b.clone(), l as usize + 1));
        roots.extend(spec.degrees.iter().map(|&d| &a + &b.scale(&int(d))));
    } else {
        roots.extend(std::iter::repeat_n(a.clone(), r));
    }
    let pairing = if l > 0 { vec![(r - 1) as u16, l as u16] } else { vec![(r - 1) as u16] };
    let degrees: Vec<String> = spec.degrees.iter().map(ToString::to_string).collect();
    Ok(ManifoldModel::assemble(
        format!("P(E) over CP^{l}, E degrees [{}]", degrees.join(",")),
        ring,
        TangentData::ComplexStableRoots(roots),
        pairing,
        Some(format!("quotient of S^{}xS^{} by a free isometric T^2-action", 2 * l + 1, 2 * r - 1)),
        false,
    ))
}

/// Cartesian product. Root data concatenates when both factors carry roots;
/// otherwise the total Pontryagin classes are multiplied (Whitney formula).
pub fn product(m1: &ManifoldModel, m2: &ManifoldModel) -> Result<ManifoldModel> {
    let ring = m1.ring.tensor(&m2.ring)?;
    let offset = m1.ring.generators().len();
    let lift1 = |x: &GradedElement| x.embed(&ring, 0);
    let lift2 = |x: &GradedElement| x.embed(&ring, offset);
    let tangent = match (&m1.tangent, &m2.tangent) {
        (TangentData::ComplexStableRoots(r1), TangentData::ComplexStableRoots(r2)) => {
            TangentData::ComplexStableRoots(r1.iter().map(lift1).chain(r2.iter().map(lift2)).collect())
        }
        _ => {
            let total = &lift1(m1.total_pontryagin()) * &lift2(m2.total_pontryagin());
            let k = (m1.real_dimension + m2.real_dimension) / 4;
            TangentData::ExplicitPontryagin((1..=k).map(|i| total.homogeneous_part(4 * i)).collect())
        }
    };
    let mut pairing = m1.pairing_monomial.clone();
    pairing.extend_from_slice(&m2.pairing_monomial);
    let certificate = match (&m1.metadata.curvature_certificate, &m2.metadata.curvature_certificate) {
        (Some(_), Some(_)) => Some("product metric".to_string()),
        _ => None,
    };
    Ok(ManifoldModel::assemble(
        format!("{} x {}", m1.name, m2.name),
        ring,
        tangent,
        pairing,
        certificate,
        m1.metadata.spin && m2.metadata.spin,
    ))
}

/// `X¹²_c = P(O(c) ⊕ 3ε) → CP^3`.
pub fn x12(c: i64) -> ManifoldModel {
    build_proj_bundle(&LineBundleSum { base_l: 3, degrees: vec![c, 0, 0, 0] })
        .expect("valid bundle")
        .with_name(format!("X12[c={c}]"))
}

/// `Y¹⁶_c = P(O(c) ⊕ O(2c) ⊕ O(-3c) ⊕ ε) → CP^5`.
pub fn y16(c: i64) -> ManifoldModel {
    build_proj_bundle(&LineBundleSum { base_l: 5, degrees: vec![c, 2 * c, -3 * c, 0] })
        .expect("valid bundle")
        .with_name(format!("Y16[c={c}]"))
}

/// `Z²⁰_c = P(O(c) ⊕ 3ε) → CP^7`.
pub fn z20(c: i64) -> ManifoldModel {
    build_proj_bundle(&LineBundleSum { base_l: 7, degrees: vec![c, 0, 0, 0] })
        .expect("valid bundle")
        .with_name(format!("Z20[c={c}]"))
}

/// Total Chern class of `E`, as an element of the bundle's ring.
pub fn bundle_chern_class(m: &ManifoldModel, spec: &LineBundleSum) -> Result<GradedElement> {
    let one = GradedElement::one(m.ring());
    let b = m.generator("b")?;
    Ok(spec.degrees.iter().fold(one.clone(), |acc, &d| &acc * &(&one + &b.scale(&int(d)))))
}

impl ManifoldModel {
    /// True when the model is a point.
    pub fn is_point(&self) -> bool {
        self.real_dimension == 0 && self.pair(&GradedElement::one(&self.ring)).is_ok_and(|v| v.is_one())
    }
}
