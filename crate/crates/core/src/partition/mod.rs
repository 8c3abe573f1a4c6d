//! Partitions in French convention, their box statistics, Maya diagrams and
//! the r-core / r-quotient bijection.
//!
//! A box `(a, b)` sits in column `a` and row `b` (both from zero); it lies in
//! `λ` iff `a < λ_{b+1}`. Its content is `b - a` and its color is the content
//! reduced mod `r`.

mod core_quotient;
mod enumerate;
mod maya;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use core_quotient::{core_quotient, from_core_quotient, is_core, CoreQuotient};
pub use enumerate::{enumerate_with_core, multipartitions, partitions, partitions_up_to, r_cores};
pub use maya::{from_maya, to_maya, MayaDiagram};

/// A box of a Young diagram: column `a`, row `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub a: u32,
    pub b: u32,
}

impl Cell {
    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn content(&self) -> i64 {
        self.b as i64 - self.a as i64
    }

    pub fn color(&self, r: u32) -> u32 {
        self.content().rem_euclid(r as i64) as u32
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; any other violation of weak decrease is
    /// an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{:?} is not a partition", parts)));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Panics on invalid input; for literals in tests and tables.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    /// Parses `"6,4,1"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {:?}", x)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_{i+1}`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let n = self.part(0) as usize;
        let parts = (0..n)
            .map(|a| self.parts.iter().filter(|&&p| p as usize > a).count() as u32)
            .collect();
        Self { parts }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.a < self.part(c.b as usize)
    }

    /// Boxes row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| (0..p).map(move |a| Cell::new(a, b as u32)))
            .collect()
    }

    /// True iff every box of `other` lies in `self`.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Boxes of `self` not in `inner` (which must be contained in `self`).
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        self.cells().into_iter().filter(|c| !inner.contains(*c)).collect()
    }

    pub fn hooks(&self) -> Vec<i64> {
        self.cells().iter().map(|c| hook(self, *c)).collect()
    }

    pub fn add_cell(&self, c: Cell) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let b = c.b as usize;
        if b == parts.len() {
            parts.push(0);
        }
        if b > parts.len() || parts[b] != c.a {
            return Err(Error::InvalidInput(format!("{:?} is not addable", c)));
        }
        parts[b] += 1;
        Partition::new(parts)
    }

    pub fn remove_cell(&self, c: Cell) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let b = c.b as usize;
        if b >= parts.len() || parts[b] != c.a + 1 {
            return Err(Error::InvalidInput(format!("{:?} is not removable", c)));
        }
        parts[b] -= 1;
        Partition::new(parts)
    }

    /// `∑ (i-1) λ_i`.
    pub fn n_stat(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Arm and leg of a box, allowed to lie outside `λ` (values may then be
/// negative).
pub fn arm_leg(lambda: &Partition, c: Cell) -> (i64, i64) {
    let arm = lambda.part(c.b as usize) as i64 - c.a as i64 - 1;
    let leg = lambda.transpose().part(c.a as usize) as i64 - c.b as i64 - 1;
    (arm, leg)
}

pub fn arm(lambda: &Partition, c: Cell) -> i64 {
    lambda.part(c.b as usize) as i64 - c.a as i64 - 1
}

pub fn leg(lambda: &Partition, c: Cell) -> i64 {
    let col = lambda.parts.iter().filter(|&&p| p > c.a).count() as i64;
    col - c.b as i64 - 1
}

/// `a_λ(□) + l_μ(□) + 1`.
pub fn mixed_hook(lambda: &Partition, mu: &Partition, c: Cell) -> i64 {
    arm(lambda, c) + leg(mu, c) + 1
}

pub fn hook(lambda: &Partition, c: Cell) -> i64 {
    mixed_hook(lambda, lambda, c)
}

/// Number of boxes whose hook length is divisible by `r`.
pub fn hook_multiples_count(lambda: &Partition, r: u32) -> usize {
    lambda.hooks().iter().filter(|&&h| h % r as i64 == 0).count()
}

/// Dominance `λ ≤ μ` for partitions of the same size.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::InvalidInput(format!(
            "dominance needs equal sizes, got {} and {}",
            lambda, mu
        )));
    }
    let n = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0u32, 0u32);
    for i in 0..n {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Addable and removable boxes of color `i`.
pub fn addable_removable(lambda: &Partition, r: u32, i: u32) -> (Vec<Cell>, Vec<Cell>) {
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for b in 0..=lambda.len() {
        let row = lambda.part(b);
        let above = if b == 0 { u32::MAX } else { lambda.part(b - 1) };
        if row < above {
            addable.push(Cell::new(row, b as u32));
        }
        if row > 0 && row > lambda.part(b + 1) {
            removable.push(Cell::new(row - 1, b as u32));
        }
    }
    addable.retain(|c| c.color(r) == i);
    removable.retain(|c| c.color(r) == i);
    (addable, removable)
}

/// `μ ⊂_n λ`: `μ ⊆ λ` and `λ/μ` has exactly `n` boxes of each of the `r`
/// colors.
pub fn colored_contains(lambda: &Partition, mu: &Partition, r: u32, n: u32) -> bool {
    if !lambda.contains_partition(mu) {
        return false;
    }
    let mut counts = vec![0u32; r as usize];
    for c in lambda.skew_cells(mu) {
        counts[c.color(r) as usize] += 1;
    }
    counts.iter().all(|&k| k == n)
}

/// An r-tuple of partitions indexed by `Z/rZ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(pub Vec<Partition>);

impl MultiPartition {
    pub fn empty(r: u32) -> Self {
        Self(vec![Partition::empty(); r as usize])
    }

    pub fn r(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(|p| p.size()).sum()
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    /// A single partition placed in color `i`.
    pub fn single(r: u32, i: u32, p: Partition) -> Self {
        let mut out = Self::empty(r);
        out.0[i as usize] = p;
        out
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}
