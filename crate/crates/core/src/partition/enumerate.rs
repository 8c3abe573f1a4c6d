//! Deterministic enumerators.

use super::core_quotient::{from_core_quotient, is_core};
use super::{MultiPartition, Partition};
use crate::error::{Error, Result};

/// Partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)`
/// last.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

/// Size vectors of length `r` summing to `n`, lexicographically decreasing.
fn compositions(n: u32, r: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All r-multipartitions of `n`, graded by the size vector (decreasing
/// lexicographic) and then by the component partitions in reverse
/// lexicographic order.
pub fn multipartitions(r: u32, n: u32) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for sizes in compositions(n, r) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            let choices = partitions(s);
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    choices.iter().map(move |c| {
                        let mut v = pre.clone();
                        v.push(c.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(MultiPartition));
    }
    out
}

/// All `λ` with core `α` and `|quot(λ)| = n`, in the order of
/// [`multipartitions`].
pub fn enumerate_with_core(alpha: &Partition, r: u32, n: u32) -> Result<Vec<Partition>> {
    if !is_core(alpha, r)? {
        return Err(Error::InvalidInput(format!("{} is not a {}-core", alpha, r)));
    }
    multipartitions(r, n)
        .iter()
        .map(|q| from_core_quotient(alpha, q, r))
        .collect()
}

/// All r-cores of size at most `n`, by size and then reverse lexicographic.
pub fn r_cores(r: u32, n: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in partitions_up_to(n) {
        if is_core(&p, r)? {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::core_quotient;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let three_colored: Vec<usize> = (0..5).map(|n| multipartitions(3, n).len()).collect();
        assert_eq!(three_colored, vec![1, 3, 9, 22, 51]);
    }

    #[test]
    fn enumeration_examples() {
        let e = Partition::empty();
        assert_eq!(enumerate_with_core(&e, 3, 0).unwrap(), vec![e.clone()]);
        let one = enumerate_with_core(&e, 3, 1).unwrap();
        assert_eq!(one.len(), 3);
        assert!(one.iter().all(|l| l.size() == 3));
        let four = enumerate_with_core(&Partition::from_slice(&[1]), 3, 1).unwrap();
        assert_eq!(four.len(), 3);
        for l in &four {
            assert_eq!(l.size(), 4);
            assert_eq!(core_quotient(l, 3).unwrap().core, Partition::from_slice(&[1]));
        }
        assert!(enumerate_with_core(&Partition::from_slice(&[3]), 3, 1).is_err());
    }

    #[test]
    fn three_cores() {
        // 3-cores by size: from (T^3;T^3)^3/(T;T): 1, 1, 2, 0, 2, 1, 2
        let cores = r_cores(3, 6).unwrap();
        let mut by_size = vec![0; 7];
        for c in cores {
            by_size[c.size() as usize] += 1;
        }
        assert_eq!(by_size, vec![1, 1, 2, 0, 2, 1, 2]);
    }
}
