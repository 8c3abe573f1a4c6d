//! Symmetric-group characters by the border-strip recursion, and `z_μ`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::partition::{partitions, Partition};

type Key = (Vec<u32>, Vec<u32>);

fn cache() -> &'static RwLock<HashMap<Key, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(μ)`; zero when the sizes differ.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    chi(lambda.parts(), mu.parts())
}

fn chi(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = cache().read().unwrap().get(&key) {
        return v;
    }
    // Beta numbers: removing a k-ribbon moves one bead from b to b - k, with
    // sign given by the number of beads jumped over.
    let l = lambda.len();
    let beta: Vec<i64> = (0..l).map(|i| lambda[i] as i64 + (l - 1 - i) as i64).collect();
    let k = mu[0] as i64;
    let rest = &mu[1..];
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[idx] = nb;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let n = new_beta.len();
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (n - 1 - i) as i64) as u32)
            .filter(|&x| x > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * chi(&parts, rest);
    }
    cache().write().unwrap().insert(key, total);
    total
}

/// `z_μ = ∏_i i^{m_i} m_i!`.
pub fn z(mu: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let m = (j - i) as u32;
        for k in 1..=m {
            out *= BigInt::from(parts[i]) * BigInt::from(k);
        }
        i = j;
    }
    out
}

/// Character table of `S_n`: rows and columns indexed by [`partitions`].
pub fn character_table(n: u32) -> Vec<Vec<i64>> {
    let ps = partitions(n);
    ps.iter()
        .map(|l| ps.iter().map(|m| character(l, m)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn small_tables() {
        assert_eq!(character_table(2), vec![vec![1, 1], vec![-1, 1]]);
        // S_3 with columns (3), (2,1), (1,1,1)
        assert_eq!(character_table(3), vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
        assert_eq!(character(&p(&[2, 2]), &p(&[1, 1, 1, 1])), 2);
        assert_eq!(character(&p(&[3, 1, 1]), &p(&[1, 1, 1, 1, 1])), 6);
    }

    #[test]
    fn column_orthogonality() {
        // Σ_λ χ^λ(μ) χ^λ(ν) = δ z_μ
        for n in 1..=6 {
            let ps = partitions(n);
            for m in &ps {
                for nu in &ps {
                    let s: i64 = ps.iter().map(|l| character(l, m) * character(l, nu)).sum();
                    let expected = if m == nu { z(m) } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expected);
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z(&p(&[2])), BigInt::from(2));
        assert_eq!(z(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z(&p(&[2, 2, 1])), BigInt::from(8));
        assert_eq!(z(&p(&[])), BigInt::from(1));
    }
}
