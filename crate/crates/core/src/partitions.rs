//! Signatures, dominance order, enumeration and Pochhammer symbols.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Weakly decreasing integer vector; a partition when the last part is
/// non-negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("a signature needs at least one part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "signature parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Signature(parts))
    }

    /// Sorts `parts` into weakly decreasing order: the orbit representative
    /// of an exponent vector.
    pub fn sorted(mut parts: Vec<i64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Signature(parts)
    }

    pub fn zero(n: usize) -> Self {
        Signature(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.last().is_some_and(|&p| p >= 0)
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("non-empty")
    }

    /// Adds `k` to every part.
    pub fn shift(&self, k: i64) -> Self {
        Signature(self.0.iter().map(|p| p + k).collect())
    }

    /// `(-λ_n, ..., -λ_1)`: the signature of `f(x⁻¹)`.
    pub fn dual(&self) -> Self {
        Signature(self.0.iter().rev().map(|p| -p).collect())
    }

    /// Largest absolute part.
    pub fn radius(&self) -> i64 {
        self.0.iter().map(|p| p.abs()).max().unwrap_or(0)
    }

    /// Number of distinct permutations of the parts.
    pub fn orbit_size(&self) -> u64 {
        let n = self.0.len() as u64;
        let mut size: u64 = (1..=n).product();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            size /= (1..=(j - i) as u64).product::<u64>();
            i = j;
        }
        size
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl TryFrom<Vec<i64>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<i64> {
    fn from(s: Signature) -> Self {
        s.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Comma-separated integers, e.g. `3,1,-2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad signature part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Signature::new(parts)
    }
}

/// `μ ≤ λ` in dominance order. Only defined for equal length and weight.
pub fn dominance_leq(mu: &Signature, lambda: &Signature) -> Result<bool> {
    if mu.len() != lambda.len() {
        return Err(Error::InvalidComparison(format!(
            "lengths differ: ({mu}) vs ({lambda})"
        )));
    }
    if mu.weight() != lambda.weight() {
        return Err(Error::InvalidComparison(format!(
            "weights differ: |{mu}| = {} vs |{lambda}| = {}",
            mu.weight(),
            lambda.weight()
        )));
    }
    let (mut a, mut b) = (0, 0);
    for (m, l) in mu.parts().iter().zip(lambda.parts()) {
        a += m;
        b += l;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All signatures of length `n` with parts in `[lo, hi]`, lexicographically
/// increasing.
pub fn signatures_in_box(n: usize, lo: i64, hi: i64) -> Vec<Signature> {
    let mut out = Vec::new();
    if n == 0 || lo > hi {
        return out;
    }
    // enumerate non-decreasing first-part-last sequences, i.e. build from the
    // last part upward so the output comes out in lexicographic order
    let mut parts = vec![lo; n];
    fn rec(pos: usize, lo: i64, hi: i64, parts: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if pos == parts.len() {
            out.push(Signature(parts.clone()));
            return;
        }
        let upper = if pos == 0 { hi } else { parts[pos - 1] };
        for v in lo..=upper {
            parts[pos] = v;
            rec(pos + 1, lo, hi, parts, out);
        }
    }
    rec(0, lo, hi, &mut parts, &mut out);
    out
}

/// Partitions of `weight` with at most `n` parts (padded with zeros to
/// length `n`), in decreasing lexicographic order.
pub fn partitions_of(weight: i64, n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    if weight < 0 || n == 0 {
        return out;
    }
    let mut parts = vec![0; n];
    fn rec(pos: usize, rest: i64, cap: i64, parts: &mut Vec<i64>, out: &mut Vec<Signature>) {
        let n = parts.len();
        if pos == n {
            if rest == 0 {
                out.push(Signature(parts.clone()));
            }
            return;
        }
        let slots = (n - pos) as i64;
        let lo = (rest + slots - 1) / slots;
        let mut v = cap.min(rest);
        while v >= lo {
            parts[pos] = v;
            rec(pos + 1, rest - v, v, parts, out);
            v -= 1;
        }
    }
    rec(0, weight, weight, &mut parts, &mut out);
    out
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer<C: Scalar>(a: &C, k: u32) -> C {
    let mut acc = C::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + C::one();
    }
    acc
}
