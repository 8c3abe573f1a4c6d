//! Kernels and solves of small dense systems: fraction-free Gauss-Jordan over
//! Laurent polynomials, plain elimination over a field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, LaurentPoly, RatFunc};
use crate::error::{Error, Result};

fn check_shape<T>(rows: &[Vec<T>], ncols: usize) -> Result<()> {
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    Ok(())
}

/// Fraction-free reduced echelon form. Every pivot ends up equal to the same
/// minor `d`, so the kernel vector for a free column `f` is `x_f = d`,
/// `x_{p_i} = −a_{i,f}`. Returns a kernel basis with polynomial entries.
pub fn bareiss_kernel(mut a: Vec<Vec<LaurentPoly>>, ncols: usize) -> Result<Vec<Vec<LaurentPoly>>> {
    check_shape(&a, ncols)?;
    let nrows = a.len();
    let mut prev = LaurentPoly::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        // smallest nonzero entry as pivot
        let Some(k) = (rank..nrows)
            .filter(|&k| !a[k][c].is_zero())
            .min_by_key(|&k| a[k][c].len())
        else {
            continue;
        };
        a.swap(rank, k);
        let piv = a[rank][c].clone();
        for i in 0..nrows {
            if i == rank {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..ncols {
                let v = piv.mul(&a[i][j]).sub(&f.mul(&a[rank][j]));
                a[i][j] = v
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Consistency("fraction-free elimination hit an inexact division".into()))?;
            }
        }
        // earlier pivot rows were scaled by piv/prev in the loop above
        prev = piv;
        pivots.push(c);
        rank += 1;
    }
    let d = prev;
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![LaurentPoly::zero(); ncols];
        v[f] = d.clone();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = a[i][f].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Kernel over `Q`: rows are scaled to integers and reduced fraction-free,
/// which keeps entry growth polynomial where rational Gauss-Jordan does not.
pub fn rational_kernel(a: Vec<Vec<BigRational>>, ncols: usize) -> Result<Vec<Vec<BigRational>>> {
    check_shape(&a, ncols)?;
    let mut a: Vec<Vec<BigInt>> = a
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.into_iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(k) = (rank..nrows)
            .filter(|&k| !a[k][c].is_zero())
            .min_by_key(|&k| a[k][c].bits())
        else {
            continue;
        };
        a.swap(rank, k);
        let piv = a[rank][c].clone();
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let f = row[c].clone();
            for j in 0..ncols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        rank += 1;
    }
    let d = BigRational::from_integer(prev);
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[f] = d.clone();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -BigRational::from_integer(a[i][f].clone());
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Kernel basis by Gauss-Jordan elimination over a field.
pub fn field_kernel<C: Coeff>(mut a: Vec<Vec<C>>, ncols: usize, like: &C) -> Result<Vec<Vec<C>>> {
    check_shape(&a, ncols)?;
    let nrows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(k) = (rank..nrows).find(|&k| !a[k][c].is_zero()) else {
            continue;
        };
        a.swap(rank, k);
        let inv = a[rank][c].inv()?;
        for j in 0..ncols {
            a[rank][j] = a[rank][j].mul(&inv);
        }
        for i in 0..nrows {
            if i == rank || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..ncols {
                let v = a[i][j].sub(&f.mul(&a[rank][j]));
                a[i][j] = v;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![like.zero_like(); ncols];
        v[f] = like.one_like();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = a[i][f].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Kernel over `Q(q,t,u,…)`: rows are cleared of denominators and passed to
/// [`bareiss_kernel`].
pub fn ratfunc_kernel(a: Vec<Vec<RatFunc>>, ncols: usize) -> Result<Vec<Vec<RatFunc>>> {
    check_shape(&a, ncols)?;
    let mut polys = Vec::with_capacity(a.len());
    for row in a {
        let mut lcm: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
        for x in &row {
            for (f, m) in x.denominator_factors() {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let l = lcm.iter().fold(LaurentPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)));
        let prow = row
            .iter()
            .map(|x| {
                x.mul_poly(&l)
                    .as_poly()
                    .cloned()
                    .ok_or_else(|| Error::Consistency("denominator clearing left a fraction".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        polys.push(prow);
    }
    Ok(bareiss_kernel(polys, ncols)?
        .into_iter()
        .map(|v| v.into_iter().map(RatFunc::from_poly).collect())
        .collect())
}

/// Solves the square system `A x = b`; the matrix must be nonsingular.
/// Inverse of a square matrix, read off the kernel of `[A | −I]`.
pub fn inverse<C: Coeff>(a: &[Vec<C>], like: &C) -> Result<Vec<Vec<C>>> {
    let n = a.len();
    let aug: Vec<Vec<C>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    like.one_like().neg()
                } else {
                    like.zero_like()
                }
            }));
            r
        })
        .collect();
    let ker = C::kernel(aug, 2 * n, like)?;
    if ker.len() != n || ker.iter().enumerate().any(|(j, v)| v[n + j].is_zero()) {
        return Err(Error::SolverFailure("matrix is singular".into()));
    }
    // kernel vector j is (A⁻¹e_j · s, e_j · s) for some scalar s
    let mut inv = vec![vec![like.zero_like(); n]; n];
    for (j, v) in ker.iter().enumerate() {
        let s = v[n + j].inv()?;
        for i in 0..n {
            inv[i][j] = v[i].mul(&s);
        }
    }
    Ok(inv)
}

pub fn solve<C: Coeff>(a: &[Vec<C>], b: &[C], like: &C) -> Result<Vec<C>> {
    let n = b.len();
    if a.len() != n {
        return Err(Error::InvalidInput("system is not square".into()));
    }
    let aug: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.neg());
            r
        })
        .collect();
    let ker = C::kernel(aug, n + 1, like)?;
    if ker.len() != 1 {
        return Err(Error::SolverFailure(format!(
            "expected a nonsingular system, kernel has dimension {}",
            ker.len()
        )));
    }
    let v = &ker[0];
    let scale = v[n].inv()?;
    Ok(v[..n].iter().map(|x| x.mul(&scale)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Var;
    use num_rational::BigRational;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    fn br(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn bareiss_one_dimensional_kernel() {
        // rows (1, q, 0), (0, 1, -t): kernel spanned by (q t, -t, -1) up to scale
        let t = LaurentPoly::var(Var::T);
        let rows = vec![
            vec![LaurentPoly::one(), q(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::one(), t.neg()],
        ];
        let ker = bareiss_kernel(rows.clone(), 3).unwrap();
        assert_eq!(ker.len(), 1);
        for row in &rows {
            let dot = row
                .iter()
                .zip(&ker[0])
                .fold(LaurentPoly::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn bareiss_rank_deficient() {
        let rows = vec![vec![q(), q().mul(&q())], vec![LaurentPoly::one(), q()]];
        assert_eq!(bareiss_kernel(rows, 2).unwrap().len(), 1);
        let full = vec![vec![q(), LaurentPoly::one()], vec![LaurentPoly::one(), q()]];
        assert!(bareiss_kernel(full, 2).unwrap().is_empty());
    }

    #[test]
    fn field_kernel_and_solve() {
        let a = vec![vec![br(2), br(1)], vec![br(1), br(3)]];
        let x = solve(&a, &[br(5), br(10)], &br(0)).unwrap();
        assert_eq!(x, vec![br(1), br(3)]);
        let sing = vec![vec![br(1), br(2)], vec![br(2), br(4)]];
        assert_eq!(field_kernel(sing, 2, &br(0)).unwrap().len(), 1);
    }

    #[test]
    fn ratfunc_solve() {
        let qf = RatFunc::var(Var::Q);
        let one = RatFunc::one();
        let inv = one.sub(&qf).inv().unwrap();
        let a = vec![vec![inv.clone(), one.clone()], vec![one.clone(), qf.clone()]];
        let b = vec![inv.add(&one), one.add(&qf)];
        let x = solve(&a, &b, &one).unwrap();
        assert_eq!(x, vec![one.clone(), one]);
    }

    #[test]
    fn fraction_free_rational_kernel_matches_field_kernel() {
        let rows: Vec<Vec<BigRational>> = (0..6)
            .map(|i| {
                (0..5)
                    .map(|j| BigRational::new((((i * 3 + j * 5) % 7) as i64 - 3).into(), (1 + (i + j) % 3).into()))
                    .collect()
            })
            .collect();
        // duplicate a row combination so the kernel is nontrivial
        let mut a: Vec<Vec<BigRational>> = rows[..3].to_vec();
        a.push(rows[0].iter().zip(&rows[1]).map(|(x, y)| x + y).collect());
        let ff = rational_kernel(a.clone(), 5).unwrap();
        let gj = field_kernel(a.clone(), 5, &br(1)).unwrap();
        assert_eq!(ff.len(), gj.len());
        for v in &ff {
            for row in &a {
                let dot: BigRational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(Zero::is_zero(&dot));
            }
        }
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = vec![vec![br(2), br(1)], vec![br(1), br(1)]];
        let inv = inverse(&a, &br(1)).unwrap();
        assert_eq!(inv, vec![vec![br(1), br(-1)], vec![br(-1), br(2)]]);
        assert!(inverse(&[vec![br(1), br(2)], vec![br(2), br(4)]], &br(1)).is_err());
    }
}
