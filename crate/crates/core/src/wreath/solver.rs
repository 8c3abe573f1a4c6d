//! `H_λ` from the two triangularity conditions and a normalization.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coeff::{Backend, Coeff, RatFunc, Var};
use crate::error::{Error, Result};
use crate::partition::{core_quotient, dominance_leq, enumerate_with_core, multipartitions, MultiPartition, Partition};
use crate::symfunc::{apply_matrix_plethysm, powersum_to_schur, schur_to_powersum, PlethysmMatrix};

/// How `H_λ[1] = 1` is read for `r ≥ 2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `p_n[X^{(0)}] ↦ 1` and `p_n[X^{(i)}] ↦ 0` for `i ≠ 0`: the coefficient
    /// of `s_{((n), ∅, …)}`.
    #[default]
    Color0,
    /// `p_n[X^{(i)}] ↦ 1` for every color.
    AllColors,
}

/// Schur-to-Schur matrices of the two triangularity plethysms in degree `n`.
/// `up[ρ][ν]` is the coefficient of `s_ρ` in `s_ν[(1−qσ⁻¹)X^•]`; `down` uses
/// `(1−t⁻¹σ⁻¹)`.
#[derive(Debug)]
pub struct Transitions {
    pub basis: Vec<MultiPartition>,
    pub up: Vec<Vec<RatFunc>>,
    pub down: Vec<Vec<RatFunc>>,
}

fn transition(m: &PlethysmMatrix, basis: &[MultiPartition], n: u32) -> Result<Vec<Vec<RatFunc>>> {
    let b = crate::coeff::ExactBackend::new();
    let pos: HashMap<&MultiPartition, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut out = vec![vec![RatFunc::zero(); basis.len()]; basis.len()];
    for (col, nu) in basis.iter().enumerate() {
        let f = schur_to_powersum(nu, n, &b)?;
        let g = apply_matrix_plethysm(m, &f, &b)?;
        for (rho, c) in powersum_to_schur(&g) {
            out[pos[&rho]][col] = c;
        }
    }
    Ok(out)
}

/// Cached transition matrices for `(r, n)`.
pub fn transitions(r: u32, n: u32) -> Result<Arc<Transitions>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Transitions>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(r, n)) {
        return Ok(t.clone());
    }
    let basis = multipartitions(r, n);
    let q = RatFunc::var(Var::Q);
    let tinv = RatFunc::var(Var::T).inv()?;
    let up = transition(&PlethysmMatrix::one_minus_shift(r, &q, -1), &basis, n)?;
    let down = transition(&PlethysmMatrix::one_minus_shift(r, &tinv, -1), &basis, n)?;
    let t = Arc::new(Transitions { basis, up, down });
    cache.lock().unwrap().insert((r, n), t.clone());
    Ok(t)
}

/// Which transition rows constrain `H_λ`: `(k, true)` is `up[k]`, `(k, false)`
/// is `down[k]`.
pub fn constraint_selection(lambda: &Partition, r: u32) -> Result<(Arc<Transitions>, Vec<(usize, bool)>)> {
    let cq = core_quotient(lambda, r)?;
    let n = cq.quotient.size();
    let tr = transitions(r, n)?;
    let mus = enumerate_with_core(&cq.core, r, n)?;
    let mut sel = Vec::new();
    for (k, mu) in mus.iter().enumerate() {
        // enumerate_with_core follows the multipartition order
        debug_assert_eq!(core_quotient(mu, r)?.quotient, tr.basis[k]);
        if !dominance_leq(lambda, mu)? {
            sel.push((k, true));
        }
        if !dominance_leq(mu, lambda)? {
            sel.push((k, false));
        }
    }
    Ok((tr, sel))
}

/// The linear constraints on the multi-Schur coefficients of `H_λ`.
pub fn constraint_rows(lambda: &Partition, r: u32) -> Result<(Arc<Transitions>, Vec<Vec<RatFunc>>)> {
    let (tr, sel) = constraint_selection(lambda, r)?;
    let rows = sel
        .iter()
        .map(|&(k, up)| if up { tr.up[k].clone() } else { tr.down[k].clone() })
        .collect();
    Ok((tr, rows))
}

fn normalization_value<C: Coeff>(basis: &[MultiPartition], v: &[C], norm: Normalization, like: &C) -> C {
    let mut acc = like.zero_like();
    for (nu, c) in basis.iter().zip(v) {
        let hit = match norm {
            Normalization::Color0 => nu.0.iter().skip(1).all(|p| p.is_empty()) && nu.0[0].len() <= 1,
            Normalization::AllColors => nu.0.iter().all(|p| p.len() <= 1),
        };
        if hit {
            acc = acc.add(c);
        }
    }
    acc
}

/// Multi-Schur coefficients of `H_λ` in the order of
/// [`multipartitions`]`(r, |quot λ|)`, solved in the backend's field.
pub fn solve_h<B: Backend>(lambda: &Partition, r: u32, backend: &B, norm: Normalization) -> Result<Vec<B::Elem>> {
    let (tr, rows) = constraint_rows(lambda, r)?;
    let rows: Vec<Vec<B::Elem>> = rows
        .iter()
        .map(|row| row.iter().map(|x| backend.embed(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    solve_from_rows(lambda, r, &tr.basis, rows, norm, &backend.one())
}

/// Like [`solve_h`], with the transition matrices already embedded in the
/// backend (`up`, `down` as in [`Transitions`]).
pub fn solve_h_embedded<C: Coeff>(
    lambda: &Partition,
    r: u32,
    up: &[Vec<C>],
    down: &[Vec<C>],
    norm: Normalization,
    like: &C,
) -> Result<Vec<C>> {
    let (tr, sel) = constraint_selection(lambda, r)?;
    let rows = sel
        .iter()
        .map(|&(k, is_up)| if is_up { up[k].clone() } else { down[k].clone() })
        .collect();
    solve_from_rows(lambda, r, &tr.basis, rows, norm, like)
}

fn solve_from_rows<C: Coeff>(
    lambda: &Partition,
    r: u32,
    basis: &[MultiPartition],
    rows: Vec<Vec<C>>,
    norm: Normalization,
    like: &C,
) -> Result<Vec<C>> {
    let ncols = basis.len();
    if ncols == 1 {
        return Ok(vec![like.one_like()]);
    }
    let nrows = rows.len();
    let ker = C::kernel(rows, ncols, like)?;
    if ker.len() != 1 {
        return Err(Error::SolverFailure(format!(
            "H_{} (r = {}): {} constraints on {} unknowns left a kernel of dimension {}",
            lambda,
            r,
            nrows,
            ncols,
            ker.len()
        )));
    }
    let v = ker.into_iter().next().unwrap();
    let c = normalization_value(basis, &v, norm, like);
    if c.is_zero() {
        return Err(Error::NormalizationFailure(format!(
            "H_{} (r = {}) evaluates to zero at 1",
            lambda, r
        )));
    }
    let inv = c.inv()?;
    Ok(v.iter().map(|x| x.mul(&inv)).collect())
}

/// Exact multi-Schur coefficients, memoized per `(λ, r, normalization)`.
pub fn solve_h_exact(lambda: &Partition, r: u32, norm: Normalization) -> Result<Arc<Vec<RatFunc>>> {
    type Key = (Partition, u32, Normalization);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<RatFunc>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.clone(), r, norm);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(solve_h(lambda, r, &crate::coeff::ExactBackend::new(), norm)?);
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}
