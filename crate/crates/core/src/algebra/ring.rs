//! Truncated commutative graded rings presented by even-degree generators and
//! single-head rewrite rules `g^n -> rhs`.
//!
//! Monomials are exponent vectors in generator order. The normal-form order is
//! lexicographic with the first generator greatest; every rule for generator
//! `g` may only mention `g` itself (to a lower power) and generators listed
//! after `g`, so each rewrite produces strictly smaller monomials and reduction
//! terminates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::rational::ExactRational;
use crate::error::{Error, Result};

pub type Monomial = Vec<u16>;

type Terms = BTreeMap<Monomial, ExactRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A rewrite rule `generator^power -> rhs` prior to validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSpec {
    pub head: usize,
    pub power: u16,
    pub rhs: Vec<(Monomial, ExactRational)>,
}

impl RuleSpec {
    /// `generator^power = 0`.
    pub fn nilpotent(head: usize, power: u16) -> Self {
        RuleSpec { head, power, rhs: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rule {
    power: u16,
    rhs: Terms,
}

#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    generators: Vec<Generator>,
    truncation: u32,
    rules: Vec<Option<Rule>>,
}

impl RingSpec {
    /// Validates and builds a ring. All malformed-rule errors surface here,
    /// never during reduction.
    pub fn new(generators: Vec<(String, u32)>, truncation: u32, rules: Vec<RuleSpec>) -> Result<Arc<Self>> {
        let generators: Vec<Generator> =
            generators.into_iter().map(|(name, degree)| Generator { name, degree }).collect();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 || g.degree % 2 != 0 {
                return Err(Error::MalformedRing(format!("generator `{}` has degree {}", g.name, g.degree)));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::MalformedRing(format!("duplicate generator `{}`", g.name)));
            }
        }
        if !truncation.is_multiple_of(2) {
            return Err(Error::MalformedRing(format!("odd truncation dimension {truncation}")));
        }
        let n = generators.len();
        let mut slots: Vec<Option<Rule>> = vec![None; n];
        for spec in rules {
            let head = spec.head;
            if head >= n {
                return Err(Error::MalformedRing(format!("rule head {head} out of range")));
            }
            if spec.power == 0 {
                return Err(Error::MalformedRing("rule with power 0".into()));
            }
            if slots[head].is_some() {
                return Err(Error::MalformedRing(format!("two rules for `{}`", generators[head].name)));
            }
            let head_degree = spec.power as u32 * generators[head].degree;
            let mut rhs = Terms::new();
            for (m, c) in spec.rhs {
                if m.len() != n {
                    return Err(Error::MalformedRing("rule monomial has wrong arity".into()));
                }
                let deg: u32 = m.iter().zip(&generators).map(|(&e, g)| e as u32 * g.degree).sum();
                if deg != head_degree {
                    return Err(Error::MalformedRing(format!(
                        "rule for `{}` is not homogeneous: degree {deg} vs {head_degree}",
                        generators[head].name
                    )));
                }
                if m[head] >= spec.power || m[..head].iter().any(|&e| e != 0) {
                    return Err(Error::MalformedRing(format!(
                        "rule for `{}` does not strictly reduce",
                        generators[head].name
                    )));
                }
                if !c.is_zero() {
                    *rhs.entry(m).or_insert_with(ExactRational::zero) += c;
                }
            }
            rhs.retain(|_, c| !c.is_zero());
            slots[head] = Some(Rule { power: spec.power, rhs });
        }
        Ok(Arc::new(RingSpec { generators, truncation, rules: slots }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree_of(&self, m: &[u16]) -> u32 {
        m.iter().zip(&self.generators).map(|(&e, g)| e as u32 * g.degree).sum()
    }

    fn reducible_at(&self, m: &[u16]) -> Option<(usize, &Rule)> {
        self.rules.iter().enumerate().find_map(|(i, r)| match r {
            Some(rule) if m[i] >= rule.power => Some((i, rule)),
            _ => None,
        })
    }

    pub fn is_normal(&self, m: &[u16]) -> bool {
        self.degree_of(m) <= self.truncation && self.reducible_at(m).is_none()
    }

    /// All normal-form monomials (degree at most the truncation dimension).
    pub fn normal_monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.generators.len()];
        self.enumerate_normal(0, 0, &mut cur, &mut out);
        out.sort();
        out
    }

    fn enumerate_normal(&self, idx: usize, deg: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if idx == self.generators.len() {
            out.push(cur.clone());
            return;
        }
        let g = &self.generators[idx];
        let mut e = 0u16;
        loop {
            let d = deg + e as u32 * g.degree;
            if d > self.truncation {
                break;
            }
            if let Some(rule) = &self.rules[idx] {
                if e >= rule.power {
                    break;
                }
            }
            cur[idx] = e;
            self.enumerate_normal(idx + 1, d, cur, out);
            e += 1;
        }
        cur[idx] = 0;
    }

    /// Reduces a finite linear combination of arbitrary monomials to normal form.
    fn reduce(&self, mut work: Terms) -> Terms {
        let mut out = Terms::new();
        while let Some((m, c)) = work.pop_last() {
            if c.is_zero() || self.degree_of(&m) > self.truncation {
                continue;
            }
            match self.reducible_at(&m) {
                None => {
                    out.insert(m, c);
                }
                Some((head, rule)) => {
                    let mut rest = m;
                    rest[head] -= rule.power;
                    for (rm, rc) in &rule.rhs {
                        let prod: Monomial = rest.iter().zip(rm).map(|(a, b)| a + b).collect();
                        if self.degree_of(&prod) > self.truncation {
                            continue;
                        }
                        *work.entry(prod).or_insert_with(ExactRational::zero) += &c * rc;
                    }
                }
            }
        }
        out
    }

    fn format_monomial(&self, m: &[u16]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| if e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Tensor product over ℚ: generators of `self` followed by those of
    /// `other`, truncated at the sum of the truncation dimensions. Colliding
    /// generator names get the factor index (1 or 2) appended.
    pub fn tensor(&self, other: &RingSpec) -> Result<Arc<RingSpec>> {
        let collide = self.generators.iter().any(|g| other.index_of(&g.name).is_some());
        let mut names: Vec<String> = Vec::new();
        for (factor, ring) in [(1, self), (2, other)] {
            for g in &ring.generators {
                let mut name = if collide { format!("{}{}", g.name, factor) } else { g.name.clone() };
                while names.contains(&name) {
                    name.push('\'');
                }
                names.push(name);
            }
        }
        let n1 = self.generators.len();
        let n2 = other.generators.len();
        let degrees = self.generators.iter().chain(&other.generators).map(|g| g.degree);
        let generators = names.into_iter().zip(degrees).collect();
        let mut rules = Vec::new();
        for (offset, ring) in [(0, self), (n1, other)] {
            for (i, rule) in ring.rules.iter().enumerate() {
                if let Some(rule) = rule {
                    let rhs = rule.rhs.iter().map(|(m, c)| (place(m, offset, n1 + n2), c.clone())).collect();
                    rules.push(RuleSpec { head: offset + i, power: rule.power, rhs });
                }
            }
        }
        RingSpec::new(generators, self.truncation + other.truncation, rules)
    }
}

fn place(m: &[u16], offset: usize, len: usize) -> Monomial {
    let mut out = vec![0; len];
    out[offset..offset + m.len()].copy_from_slice(m);
    out
}

/// Element of a [`RingSpec`] stored in normal form with no zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedElement {
    ring: Arc<RingSpec>,
    terms: Terms,
}

impl GradedElement {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        GradedElement { ring: ring.clone(), terms: Terms::new() }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, ExactRational::one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: ExactRational) -> Self {
        Self::from_terms(ring, [(vec![0; ring.generators.len()], c)])
    }

    pub fn generator(ring: &Arc<RingSpec>, name: &str) -> Result<Self> {
        let idx = ring.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
        Ok(Self::generator_at(ring, idx))
    }

    pub fn generator_at(ring: &Arc<RingSpec>, idx: usize) -> Self {
        let mut m = vec![0; ring.generators.len()];
        m[idx] = 1;
        Self::from_terms(ring, [(m, ExactRational::one())])
    }

    /// Builds an element from arbitrary (possibly reducible) terms and
    /// normalizes it.
    pub fn from_terms(ring: &Arc<RingSpec>, terms: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut work = Terms::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.generators.len(), "monomial arity");
            *work.entry(m).or_insert_with(ExactRational::zero) += c;
        }
        GradedElement { ring: ring.clone(), terms: ring.reduce(work) }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &[u16]) -> ExactRational {
        self.terms.get(m).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn constant_term(&self) -> ExactRational {
        self.coefficient(&vec![0; self.ring.generators.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    /// Component of degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.degree_of(m) == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedElement { ring: self.ring.clone(), terms }
    }

    /// Degrees carrying a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| self.ring.degree_of(m)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Re-normalizes; a no-op on stored elements, present for the idempotence
    /// contract.
    pub fn normalize(&self) -> Self {
        GradedElement { ring: self.ring.clone(), terms: self.ring.reduce(self.terms.clone()) }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ring(rhs) {
            return Err(Error::MixedRings);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(m.clone()).or_insert_with(ExactRational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(GradedElement { ring: self.ring.clone(), terms })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ring(rhs) {
            return Err(Error::MixedRings);
        }
        let ring = &self.ring;
        let mut work = Terms::new();
        for (m1, c1) in &self.terms {
            let d1 = ring.degree_of(m1);
            for (m2, c2) in &rhs.terms {
                if d1 + ring.degree_of(m2) > ring.truncation {
                    continue;
                }
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *work.entry(m).or_insert_with(ExactRational::zero) += c1 * c2;
            }
        }
        Ok(GradedElement { ring: ring.clone(), terms: ring.reduce(work) })
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect();
        GradedElement { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of an element with nonzero constant term. The positive-degree
    /// part is nilpotent in a truncated ring, so a finite geometric series
    /// suffices.
    pub fn try_inverse(&self) -> Option<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let c0_inv = c0.recip();
        // self = c0 (1 + n)
        let n = &self.scale(&c0_inv) - &Self::one(&self.ring);
        let mut acc = Self::one(&self.ring);
        let mut power = Self::one(&self.ring);
        let neg_n = -&n;
        for _ in 0..=self.ring.truncation / 2 {
            power = &power * &neg_n;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Some(acc.scale(&c0_inv))
    }

    /// Re-expresses `self` in `target`, whose generators contain those of
    /// `self.ring()` at positions `offset..offset + n`.
    pub fn embed(&self, target: &Arc<RingSpec>, offset: usize) -> Self {
        let len = target.generators.len();
        Self::from_terms(target, self.terms.iter().map(|(m, c)| (place(m, offset, len), c.clone())))
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < ExactRational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.ring.format_monomial(m);
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Normalized product; errors when the factors live in different rings.
pub fn ring_mul(x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
    x.try_mul(y)
}

pub fn ring_pow(x: &GradedElement, n: u32) -> GradedElement {
    x.pow(n)
}

// Operator forms panic on mixed rings; use `try_add` / `try_mul` for the
// checked variants.
impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        self.try_add(rhs).expect("adding elements of different rings")
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self.try_add(&-rhs).expect("subtracting elements of different rings")
    }
}

impl Mul for &GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        self.try_mul(rhs).expect("multiplying elements of different rings")
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        GradedElement { ring: self.ring.clone(), terms }
    }
}

impl Coeff for GradedElement {
    fn zero_like(&self) -> Self {
        GradedElement::zero(&self.ring)
    }
    fn one_like(&self) -> Self {
        GradedElement::one(&self.ring)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.same_ring(other)
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
        self.scale(r)
    }
    fn inverse(&self) -> Option<Self> {
        self.try_inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    /// ℚ[a, b] / (a^4 + c a^3 b, b^4), truncated at 12: the ring of X¹²_c.
    fn x12_ring(c: i64) -> Arc<RingSpec> {
        RingSpec::new(
            vec![("a".into(), 2), ("b".into(), 2)],
            12,
            vec![RuleSpec { head: 0, power: 4, rhs: vec![(vec![3, 1], int(-c))] }, RuleSpec::nilpotent(1, 4)],
        )
        .unwrap()
    }

    fn cp_ring(n: u16) -> Arc<RingSpec> {
        RingSpec::new(vec![("b".into(), 2)], 2 * n as u32, vec![RuleSpec::nilpotent(0, n + 1)]).unwrap()
    }

    fn mono(ring: &Arc<RingSpec>, m: &[u16], c: i64) -> GradedElement {
        GradedElement::from_terms(ring, [(m.to_vec(), int(c))])
    }

    #[test]
    fn normalize_single_rule() {
        let r = x12_ring(5);
        assert_eq!(mono(&r, &[4, 0], 1), mono(&r, &[3, 1], -5));
    }

    #[test]
    fn normalize_two_rewrites() {
        // a^5 = a·a^4 = -c a^4 b = c^2 a^3 b^2
        let r = x12_ring(3);
        assert_eq!(mono(&r, &[5, 0], 1), mono(&r, &[3, 2], 9));
    }

    #[test]
    fn normalize_truncates() {
        let r = x12_ring(2);
        assert!(mono(&r, &[3, 4], 1).is_zero());
    }

    #[test]
    fn a6_reduces_to_minus_c_cubed_top_class() {
        let r = x12_ring(2);
        assert_eq!(mono(&r, &[6, 0], 1), mono(&r, &[3, 3], -8));
    }

    #[test]
    fn ring_mul_examples() {
        let r = cp_ring(3);
        let c = 7;
        let b = GradedElement::generator(&r, "b").unwrap();
        let one = GradedElement::one(&r);
        let lhs = ring_mul(&(&one + &b.scale(&int(c))), &(&one - &b.scale(&int(c)))).unwrap();
        assert_eq!(lhs, &one - &(&b * &b).scale(&int(c * c)));
        let b2 = &b * &b;
        assert!((&b2 * &b2).is_zero());

        let x = x12_ring(4);
        let a = GradedElement::generator(&x, "a").unwrap();
        assert_eq!(ring_mul(&a.pow(3), &a).unwrap(), mono(&x, &[3, 1], -4));
    }

    #[test]
    fn ring_pow_examples() {
        let r = cp_ring(3);
        let b = GradedElement::generator(&r, "b").unwrap();
        let one = GradedElement::one(&r);
        let expected =
            GradedElement::from_terms(&r, [(vec![0], int(1)), (vec![1], int(3)), (vec![2], int(3)), (vec![3], int(1))]);
        assert_eq!(ring_pow(&(&one + &b), 3), expected);
        assert_eq!(ring_pow(&b, 0), one);

        // (1+a)^4 = 1 + 4a + 6a^2 + 4a^3 + a^4, with a^4 -> -c a^3 b
        let c = 3;
        let x = x12_ring(c);
        let one = GradedElement::one(&x);
        let a = GradedElement::generator(&x, "a").unwrap();
        let expected = GradedElement::from_terms(
            &x,
            [
                (vec![0, 0], int(1)),
                (vec![1, 0], int(4)),
                (vec![2, 0], int(6)),
                (vec![3, 0], int(4)),
                (vec![3, 1], int(-c)),
            ],
        );
        assert_eq!(ring_pow(&(&one + &a), 4), expected);
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = GradedElement::one(&cp_ring(2));
        let b = GradedElement::one(&cp_ring(3));
        assert_eq!(ring_mul(&a, &b), Err(Error::MixedRings));
        assert_eq!(a.try_add(&b), Err(Error::MixedRings));
    }

    #[test]
    fn malformed_rules_fail_at_construction() {
        let gens = || vec![("a".to_string(), 2), ("b".to_string(), 2)];
        // inhomogeneous
        let bad = RingSpec::new(gens(), 8, vec![RuleSpec { head: 0, power: 2, rhs: vec![(vec![0, 1], int(1))] }]);
        assert!(matches!(bad, Err(Error::MalformedRing(_))));
        // does not reduce the head
        let bad = RingSpec::new(gens(), 8, vec![RuleSpec { head: 0, power: 2, rhs: vec![(vec![2, 0], int(1))] }]);
        assert!(matches!(bad, Err(Error::MalformedRing(_))));
        // mentions an earlier generator
        let bad = RingSpec::new(gens(), 8, vec![RuleSpec { head: 1, power: 2, rhs: vec![(vec![1, 1], int(1))] }]);
        assert!(matches!(bad, Err(Error::MalformedRing(_))));
        let bad = RingSpec::new(vec![("a".into(), 3)], 8, vec![]);
        assert!(matches!(bad, Err(Error::MalformedRing(_))));
    }

    #[test]
    fn nilpotent_inverse() {
        let r = cp_ring(4);
        let u = GradedElement::generator(&r, "b").unwrap();
        let x = &GradedElement::constant(&r, int(2)) + &u.scale(&int(4));
        let inv = x.try_inverse().unwrap();
        assert_eq!(&x * &inv, GradedElement::one(&r));
        assert!(u.try_inverse().is_none());
    }

    #[test]
    fn tensor_renames_collisions() {
        let t = cp_ring(2).tensor(&cp_ring(2)).unwrap();
        let names: Vec<_> = t.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["b1", "b2"]);
        assert_eq!(t.truncation(), 8);
        assert_eq!(t.normal_monomials().len(), 9);
    }

    #[test]
    fn display() {
        let r = x12_ring(1);
        let e = GradedElement::from_terms(&r, [(vec![1, 0], int(2)), (vec![0, 1], int(-1)), (vec![0, 0], int(1))]);
        assert_eq!(e.to_string(), "2*a - b + 1");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_element(ring: Arc<RingSpec>) -> impl Strategy<Value = GradedElement> {
            prop::collection::vec(((0u16..7, 0u16..6), -5i64..6), 0..6).prop_map(move |ts| {
                GradedElement::from_terms(&ring, ts.into_iter().map(|((i, j), c)| (vec![i, j], int(c))))
            })
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(e in (-3i64..4).prop_flat_map(|c| arb_element(x12_ring(c)))) {
                prop_assert_eq!(e.normalize(), e.clone());
                prop_assert!(e.terms().keys().all(|m| e.ring().is_normal(m)));
            }

            #[test]
            fn mul_assoc_comm(
                (x, y, z) in (-3i64..4).prop_flat_map(|c| {
                    let r = x12_ring(c);
                    (arb_element(r.clone()), arb_element(r.clone()), arb_element(r))
                })
            ) {
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            }

            #[test]
            fn rewrite_then_multiply_is_confluent(c in -3i64..4, r in 0u16..8, j in 0u16..4) {
                let ring = x12_ring(c);
                let a = GradedElement::generator(&ring, "a").unwrap();
                let reduced = mono(&ring, &[r, j], 1);
                let lhs = &reduced * &a;
                let rhs = mono(&ring, &[r + 1, j], 1);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
