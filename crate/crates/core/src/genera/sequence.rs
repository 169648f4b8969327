//! Universal multiplicative sequences `K_j(p_1, …, p_j)`.
//!
//! For `m` formal variables `y_i = x_i²`, the product `Π f(y_i)` is expanded
//! to total weight `k` and each homogeneous part is rewritten in elementary
//! symmetric polynomials `e_j(y) = p_j` by repeatedly cancelling the
//! lexicographically leading monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use super::series::CharacteristicSeries;
use crate::algebra::{int, Coeff, ExactRational, Partition};
use crate::error::{Error, Result};

type Exps = Vec<u8>;

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicativeSequence<C> {
    source: String,
    variables: usize,
    /// `k_polys[j]` maps partitions of `j` to coefficients of `p_I` in `K_j`.
    k_polys: Vec<BTreeMap<Partition, C>>,
}

impl<C: Coeff> MultiplicativeSequence<C> {
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn max_weight(&self) -> u32 {
        (self.k_polys.len() - 1) as u32
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    /// `K_j`; panics if `j` exceeds the computed weight.
    pub fn k_poly(&self, j: u32) -> &BTreeMap<Partition, C> {
        &self.k_polys[j as usize]
    }

    /// Coefficient of `p_I` in `K_{|I|}` (zero if absent).
    pub fn coefficient(&self, p: &Partition) -> Option<C> {
        let poly = self.k_polys.get(p.weight() as usize)?;
        let exemplar = poly.values().next().or_else(|| self.k_polys[0].values().next())?;
        Some(poly.get(p).cloned().unwrap_or_else(|| exemplar.zero_like()))
    }

    /// `K_k` evaluated on the Pontryagin numbers `p_I[M]`, `|I| = k`.
    pub fn evaluate_on_numbers(&self, k: u32, numbers: &BTreeMap<Partition, ExactRational>) -> Result<C> {
        let poly = self
            .k_polys
            .get(k as usize)
            .ok_or(Error::InsufficientOrder { have: self.k_polys.len() - 1, need: k as usize })?;
        let one = self.k_polys[0].values().next().expect("K_0 = 1");
        let mut acc = one.zero_like();
        for (p, c) in poly {
            let n = numbers.get(p).cloned().unwrap_or_else(ExactRational::zero);
            acc = acc.plus(&c.scaled(&n));
        }
        Ok(acc)
    }
}

/// Prints `K_j` as a sum like `7/45*p2 - 1/45*p1^2`.
impl fmt::Display for MultiplicativeSequence<ExactRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, poly) in self.k_polys.iter().enumerate() {
            let terms: Vec<String> = poly.iter().map(|(p, c)| format!("{c}*{p}")).collect();
            writeln!(f, "K_{j} = {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

/// `K_0, …, K_k` for `series`, using exactly `k` formal variables.
pub fn universal_k_polynomials<C: Coeff>(
    series: &CharacteristicSeries<C>,
    max_weight: u32,
) -> Result<MultiplicativeSequence<C>> {
    k_polynomials_with_variables(series, max_weight, max_weight as usize)
}

/// As [`universal_k_polynomials`] with `variables ≥ max_weight` formal
/// variables; the result does not depend on `variables`.
pub fn k_polynomials_with_variables<C: Coeff>(
    series: &CharacteristicSeries<C>,
    max_weight: u32,
    variables: usize,
) -> Result<MultiplicativeSequence<C>> {
    let k = max_weight as usize;
    if series.order() < k {
        return Err(Error::InsufficientOrder { have: 2 * series.order(), need: 2 * k });
    }
    if variables < k {
        return Err(Error::InsufficientVariables(variables, k));
    }
    let f = series.series().coeffs();
    let one = f[0].one_like();

    // Π f(y_i), truncated at total degree k
    let mut product: HashMap<Exps, C> = HashMap::new();
    product.insert(vec![0; variables], one.clone());
    for i in 0..variables {
        let mut next: HashMap<Exps, C> = HashMap::new();
        for (m, c) in &product {
            let d: usize = m.iter().map(|&e| e as usize).sum();
            for (r, fr) in f.iter().enumerate().take(k - d + 1) {
                if fr.vanishes() {
                    continue;
                }
                let mut m2 = m.clone();
                m2[i] = r as u8;
                let term = c.times(fr);
                match next.get_mut(&m2) {
                    Some(v) => *v = v.plus(&term),
                    None => {
                        next.insert(m2, term);
                    }
                }
            }
        }
        product = next;
    }

    let mut by_weight: Vec<BTreeMap<Exps, C>> = vec![BTreeMap::new(); k + 1];
    for (m, c) in product {
        if !c.vanishes() {
            let d: usize = m.iter().map(|&e| e as usize).sum();
            by_weight[d].insert(m, c);
        }
    }

    let mut elementary = ElementaryCache::new(variables);
    let mut k_polys = Vec::with_capacity(k + 1);
    for mut poly in by_weight {
        let mut out = BTreeMap::new();
        while let Some((lead, c)) = poly.pop_last() {
            if c.vanishes() {
                continue;
            }
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Consistency("product of characteristic series is not symmetric".into()));
            }
            let partition = elementary_partition(&lead);
            let expansion = elementary.expansion(&partition);
            for (m, n) in expansion {
                if *m == lead {
                    continue;
                }
                let delta = c.scaled(&int(*n));
                match poly.get_mut(m) {
                    Some(v) => *v = v.minus(&delta),
                    None => {
                        poly.insert(m.clone(), delta.negated());
                    }
                }
            }
            out.insert(partition, c);
        }
        k_polys.push(out);
    }
    // K_0 must be stored so evaluation has a unit to clone from
    k_polys[0].entry(Partition::new(vec![]).expect("empty")).or_insert(one);
    Ok(MultiplicativeSequence { source: series.name().to_string(), variables, k_polys })
}

/// Leading exponent `α` (non-increasing) ↦ partition with `α_i − α_{i+1}`
/// parts equal to `i`, i.e. `e_1^{α_1−α_2} e_2^{α_2−α_3} ⋯`.
fn elementary_partition(lead: &[u8]) -> Partition {
    let mut parts = Vec::new();
    for i in 0..lead.len() {
        let next = lead.get(i + 1).copied().unwrap_or(0);
        for _ in 0..(lead[i] - next) {
            parts.push(i as u32 + 1);
        }
    }
    Partition::new(parts).expect("positive parts")
}

/// Expansions of products of elementary symmetric polynomials in a fixed
/// number of variables, with integer coefficients.
struct ElementaryCache {
    variables: usize,
    cache: HashMap<Partition, Vec<(Exps, i64)>>,
}

impl ElementaryCache {
    fn new(variables: usize) -> Self {
        ElementaryCache { variables, cache: HashMap::new() }
    }

    fn single(&self, j: usize) -> Vec<(Exps, i64)> {
        let n = self.variables;
        (0u64..1 << n)
            .filter(|mask| mask.count_ones() as usize == j)
            .map(|mask| ((0..n).map(|i| ((mask >> i) & 1) as u8).collect(), 1))
            .collect()
    }

    fn expansion(&mut self, p: &Partition) -> &Vec<(Exps, i64)> {
        if !self.cache.contains_key(p) {
            let mut acc: HashMap<Exps, i64> = HashMap::new();
            acc.insert(vec![0; self.variables], 1);
            for &part in p.parts() {
                let e = self.single(part as usize);
                let mut next: HashMap<Exps, i64> = HashMap::new();
                for (m1, c1) in &acc {
                    for (m2, c2) in &e {
                        let m: Exps = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                        *next.entry(m).or_insert(0) += c1 * c2;
                    }
                }
                acc = next;
            }
            let mut v: Vec<(Exps, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
            v.sort();
            self.cache.insert(p.clone(), v);
        }
        &self.cache[p]
    }
}
