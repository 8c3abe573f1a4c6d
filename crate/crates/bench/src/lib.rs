//! Shared inputs for the benchmarks.

use num_rational::BigRational;
use wreath_core::partition::{partitions, Partition};
use wreath_core::suites::eval_points;
use wreath_core::{EvalPoint, Result};

/// A dense integer matrix with a kernel of dimension `cols − rank`: the last
/// rows repeat earlier ones.
pub fn rank_deficient(rows: usize, cols: usize, rank: usize) -> Vec<Vec<BigRational>> {
    (0..rows)
        .map(|i| {
            let i = i % rank.max(1);
            (0..cols)
                .map(|j| BigRational::from_integer((((i * 7 + j * 13 + i * j) % 11) as i64 - 5).into()))
                .collect()
        })
        .collect()
}

/// All pairs of partitions of size at most `n`.
pub fn pairs_up_to(n: u32) -> Vec<(Partition, Partition)> {
    let all: Vec<Partition> = (0..=n).flat_map(partitions).collect();
    all.iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

pub fn point(seed: u64) -> Result<EvalPoint> {
    Ok(eval_points(seed, 1, &[])?.remove(0))
}
