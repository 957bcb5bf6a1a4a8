//! Partitions, signatures, and the box constructions used by the Cauchy-type
//! identities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing integer vector.
///
/// Partitions have nonnegative parts and no trailing zeros. Signatures may
/// have negative entries and keep their length, since the length is the
/// number of variables they index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<i64>,
    signature: bool,
}

fn check_decreasing(parts: &[i64]) -> Result<()> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
    }
    Ok(())
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a negative part")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts, signature: false })
    }

    pub fn signature(parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        Ok(Partition { parts, signature: true })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), signature: false }
    }

    /// `(k)`.
    pub fn row(k: i64) -> Self {
        Self::new(vec![k]).expect("row length must be nonnegative")
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k], signature: false }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn is_signature(&self) -> bool {
        self.signature
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// `|λ|`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn depth(&self) -> usize {
        self.parts.iter().filter(|&&p| p != 0).count()
    }

    /// Part `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.parts.len() > n {
            let extra_nonzero = self.parts[n..].iter().any(|&p| p != 0);
            if extra_nonzero || self.signature {
                return Err(Error::InvalidArgument(format!("{self} has more than {n} parts")));
            }
            return Ok(self.parts[..n].to_vec());
        }
        if self.signature && self.parts.last().is_some_and(|&p| p < 0) && self.parts.len() < n {
            return Err(Error::InvalidArgument(format!("cannot pad {self} with zeros")));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    fn require_partition(&self) -> Result<()> {
        if self.signature && self.parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!("{self} is a signature, not a partition")));
        }
        Ok(())
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Result<Self> {
        self.require_partition()?;
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as i64).collect();
        Partition::new(parts)
    }

    /// `μ ⊂ λ` partwise.
    pub fn contains(&self, mu: &Partition) -> bool {
        let n = self.parts.len().max(mu.parts.len());
        (0..n).all(|i| mu.part(i) <= self.part(i))
    }

    /// `(N - λ_M, ..., N - λ_1)'`, the conjugate of the complement in the `M x N` box.
    pub fn dagger(&self, m: usize, n: usize) -> Result<Self> {
        self.require_partition()?;
        if self.depth() > m || self.part(0) > n as i64 {
            return Err(Error::OutOfBox(format!("{self} in {m}x{n}")));
        }
        let padded = self.padded(m)?;
        let comp: Vec<i64> = padded.iter().rev().map(|&p| n as i64 - p).collect();
        Partition::new(comp)?.conjugate()
    }

    /// `(-M - λ_N, ..., -M - λ_1)` as a signature of length `N`.
    pub fn ddagger(&self, m: usize, n: usize) -> Result<Self> {
        self.require_partition()?;
        if self.depth() > m.min(n) {
            return Err(Error::OutOfBox(format!("{self} has depth above min({m},{n})")));
        }
        let padded = self.padded(n)?;
        Partition::signature(padded.iter().rev().map(|&p| -(m as i64) - p).collect())
    }

    /// Parses `(3,1,1)`, `3,1,1`, `∅`, `0` or the empty string.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts)
    }

    /// Like [`parse`](Self::parse) but admits negative entries and keeps zeros.
    pub fn parse_signature(s: &str) -> Result<Self> {
        Partition::signature(parse_parts(s)?)
    }
}

fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() || t == "∅" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}"))))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions with at most `m` parts, each at most `n`.
///
/// Ordered by size, and within one size by decreasing lexicographic order of
/// the parts: `∅, (1), (2), (1,1), (2,1), (2,2)` for the `2 x 2` box.
pub fn enumerate_in_box(m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(m: usize, max: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(current.clone());
        if current.len() == m {
            return;
        }
        for p in 1..=max {
            current.push(p);
            rec(m, p, current, out);
            current.pop();
        }
    }
    rec(m, n as i64, &mut current, &mut out);
    let mut parts: Vec<Partition> = out.into_iter().map(|p| Partition { parts: p, signature: false }).collect();
    parts.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    parts
}

/// All partitions `μ ⊂ λ`, in the same order as [`enumerate_in_box`].
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let m = lambda.depth();
    let n = lambda.part(0).max(0) as usize;
    enumerate_in_box(m, n).into_iter().filter(|mu| lambda.contains(mu)).collect()
}
