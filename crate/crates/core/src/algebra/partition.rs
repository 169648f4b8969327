use std::fmt;

use crate::error::{Error, Result};

/// Integer partition with non-increasing positive parts; indexes the
/// Pontryagin monomial `p_{i_1} ⋯ p_{i_m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Unsupported("partition with a zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, ascending by part.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Prints `p1^2*p3`; the empty partition prints `1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(p, m)| if m == 1 { format!("p{p}") } else { format!("p{p}^{m}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All partitions of `k`, largest part first: `[3], [2, 1], [1, 1, 1]`.
pub fn partitions(k: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=7).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn display() {
        let names: Vec<String> = partitions(3).iter().map(ToString::to_string).collect();
        assert_eq!(names, ["p3", "p1*p2", "p1^3"]);
        assert_eq!(Partition::new(vec![1, 3, 1]).unwrap().to_string(), "p1^2*p3");
    }
}
