//! Maya diagrams stored as their finite deviation from the vacuum.
//!
//! The vacuum has white beads at every `n >= 0` and black beads at every
//! `n < 0`. A partition `λ` is sent to the diagram whose white beads sit at
//! `-1 - (λ_i - i)` for `i >= 1`; for `(6,4,1)` the black beads are
//! `{2, 0, -1, -2, -4, -5} ∪ {n <= -7}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MayaDiagram {
    /// Black beads at nonnegative positions.
    black_nonneg: BTreeSet<i64>,
    /// White beads at negative positions.
    white_neg: BTreeSet<i64>,
}

impl MayaDiagram {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Builds a diagram from its deviation sets.
    pub fn from_deviation(
        black_nonneg: impl IntoIterator<Item = i64>,
        white_neg: impl IntoIterator<Item = i64>,
    ) -> Result<Self> {
        let black_nonneg: BTreeSet<i64> = black_nonneg.into_iter().collect();
        let white_neg: BTreeSet<i64> = white_neg.into_iter().collect();
        if black_nonneg.iter().any(|&n| n < 0) || white_neg.iter().any(|&n| n >= 0) {
            return Err(Error::InvalidInput("deviation sets have the wrong sign".into()));
        }
        Ok(Self {
            black_nonneg,
            white_neg,
        })
    }

    pub fn is_black(&self, n: i64) -> bool {
        if n >= 0 {
            self.black_nonneg.contains(&n)
        } else {
            !self.white_neg.contains(&n)
        }
    }

    pub fn charge(&self) -> i64 {
        self.black_nonneg.len() as i64 - self.white_neg.len() as i64
    }

    pub fn black_nonneg(&self) -> &BTreeSet<i64> {
        &self.black_nonneg
    }

    pub fn white_neg(&self) -> &BTreeSet<i64> {
        &self.white_neg
    }

    /// Black beads in `[lo, hi]`, descending.
    pub fn black_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).rev().filter(|&n| self.is_black(n)).collect()
    }

    fn support_bounds(&self) -> (i64, i64) {
        let lo = self.white_neg.iter().next().copied().unwrap_or(0).min(0);
        let hi = self.black_nonneg.iter().next_back().copied().unwrap_or(0).max(0);
        (lo, hi)
    }

    /// The diagram `n ↦ self(n + c)`. A diagram of charge `c` becomes one of
    /// charge zero under `shift(c)`.
    pub fn shift(&self, c: i64) -> Self {
        let (lo, hi) = self.support_bounds();
        let mut out = Self::vacuum();
        for n in (lo - c.abs() - 1)..=(hi + c.abs() + 1) {
            let black = self.is_black(n + c);
            if n >= 0 && black {
                out.black_nonneg.insert(n);
            } else if n < 0 && !black {
                out.white_neg.insert(n);
            }
        }
        out
    }

    /// The sub-diagram `n ↦ self(i + n r)`.
    pub fn subdiagram(&self, i: i64, r: i64) -> Self {
        let black_nonneg = self
            .black_nonneg
            .iter()
            .filter(|&&p| (p - i).rem_euclid(r) == 0)
            .map(|&p| (p - i).div_euclid(r))
            .collect();
        let white_neg = self
            .white_neg
            .iter()
            .filter(|&&p| (p - i).rem_euclid(r) == 0)
            .map(|&p| (p - i).div_euclid(r))
            .collect();
        Self {
            black_nonneg,
            white_neg,
        }
    }

    /// Interleaves `subs[i]` at positions `i + n r`.
    pub fn interleave(subs: &[MayaDiagram]) -> Self {
        let r = subs.len() as i64;
        let mut out = Self::vacuum();
        for (i, s) in subs.iter().enumerate() {
            let i = i as i64;
            out.black_nonneg.extend(s.black_nonneg.iter().map(|n| i + n * r));
            out.white_neg.extend(s.white_neg.iter().map(|n| i + n * r));
        }
        out
    }
}

pub fn to_maya(lambda: &Partition) -> MayaDiagram {
    let l = lambda.len() as i64;
    let whites: Vec<i64> = (1..=l).map(|i| i - 1 - lambda.part(i as usize - 1) as i64).collect();
    let white_neg = whites.iter().copied().filter(|&w| w < 0).collect();
    let black_nonneg = (0..l).filter(|n| !whites.contains(n)).collect();
    MayaDiagram {
        black_nonneg,
        white_neg,
    }
}

/// Inverse of [`to_maya`] on charge-zero diagrams.
pub fn from_maya(m: &MayaDiagram) -> Result<Partition> {
    if m.charge() != 0 {
        return Err(Error::InvalidInput(format!(
            "Maya diagram has charge {}, expected 0",
            m.charge()
        )));
    }
    let n = m.black_nonneg.iter().next_back().map_or(0, |&x| x + 1);
    let whites: Vec<i64> = m
        .white_neg
        .iter()
        .copied()
        .chain((0..n).filter(|x| !m.black_nonneg.contains(x)))
        .collect();
    let parts = whites.iter().enumerate().map(|(k, &w)| (k as i64 - w) as u32).collect();
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_four_one_beads() {
        let m = to_maya(&Partition::from_slice(&[6, 4, 1]));
        assert_eq!(m.black_in(-8, 5), vec![2, 0, -1, -2, -4, -5, -7, -8]);
        assert_eq!(m.charge(), 0);
        assert!(!m.is_black(-3) && !m.is_black(-6) && m.is_black(-100));
    }

    #[test]
    fn small_cases() {
        assert_eq!(to_maya(&Partition::empty()), MayaDiagram::vacuum());
        let m = to_maya(&Partition::from_slice(&[1]));
        assert!(m.is_black(0) && !m.is_black(-1));
        assert_eq!(m.black_nonneg().len() + m.white_neg().len(), 2);
        assert_eq!(from_maya(&MayaDiagram::vacuum()).unwrap(), Partition::empty());
    }

    #[test]
    fn round_trips() {
        for parts in [&[6, 4, 1][..], &[5, 3, 3, 1], &[1, 1, 1, 1], &[7]] {
            let l = Partition::from_slice(parts);
            assert_eq!(from_maya(&to_maya(&l)).unwrap(), l);
        }
    }

    #[test]
    fn nonzero_charge_is_rejected() {
        let m = MayaDiagram::from_deviation([0], []).unwrap();
        assert!(from_maya(&m).is_err());
        assert_eq!(from_maya(&m.shift(1)).unwrap(), Partition::empty());
    }
}
