//! Matrix plethysm `p_n[M X^{(i)}] = Σ_j p_n[E_{j,i} X^{(j)}]` and vector
//! plethysm (evaluation at colored data).

use std::collections::HashMap;
use std::fmt;

use super::ColoredSymFunc;
use crate::coeff::{Backend, Coeff, RatFunc, Var};
use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};

/// An `r × r` array of rational expressions; `entries[j][i] = E_{j,i}` is
/// the coefficient of `X^{(j)}` in the image of `X^{(i)}`.
#[derive(Clone, PartialEq)]
pub struct PlethysmMatrix {
    r: u32,
    entries: Vec<Vec<RatFunc>>,
}

fn md(a: i64, r: u32) -> usize {
    a.rem_euclid(r as i64) as usize
}

impl PlethysmMatrix {
    pub fn zero(r: u32) -> Self {
        assert!(r >= 1);
        Self {
            r,
            entries: vec![vec![RatFunc::zero(); r as usize]; r as usize],
        }
    }

    pub fn from_entries(entries: Vec<Vec<RatFunc>>) -> Result<Self> {
        let r = entries.len();
        if r == 0 || entries.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidInput(
                "plethysm matrix must be square and nonempty".into(),
            ));
        }
        Ok(Self { r: r as u32, entries })
    }

    pub fn scalar(r: u32, c: RatFunc) -> Self {
        let mut m = Self::zero(r);
        for i in 0..r as usize {
            m.entries[i][i] = c.clone();
        }
        m
    }

    pub fn identity(r: u32) -> Self {
        Self::scalar(r, RatFunc::one())
    }

    /// `Σ_k c_k σ^k`, so `E_{j,i} = c_{(j-i) mod r}`.
    pub fn circulant(r: u32, coeffs: &[RatFunc]) -> Self {
        assert_eq!(coeffs.len(), r as usize);
        let mut m = Self::zero(r);
        for j in 0..r as usize {
            for i in 0..r as usize {
                m.entries[j][i] = coeffs[md(j as i64 - i as i64, r)].clone();
            }
        }
        m
    }

    /// `s · σ^k`.
    pub fn shift(r: u32, k: i64, s: RatFunc) -> Self {
        let mut c = vec![RatFunc::zero(); r as usize];
        c[md(k, r)] = s;
        Self::circulant(r, &c)
    }

    /// `p_n[σX^{(i)}] = p_n[X^{(i+1)}]`.
    pub fn sigma(r: u32) -> Self {
        Self::shift(r, 1, RatFunc::one())
    }

    pub fn sigma_inv(r: u32) -> Self {
        Self::shift(r, -1, RatFunc::one())
    }

    /// `p_n[ιX^{(i)}] = p_n[X^{(-i)}]`.
    pub fn iota(r: u32) -> Self {
        let mut m = Self::zero(r);
        for i in 0..r as i64 {
            m.entries[md(-i, r)][i as usize] = RatFunc::one();
        }
        m
    }

    /// `1 − s σ^{sign}`.
    pub fn one_minus_shift(r: u32, s: &RatFunc, sign: i64) -> Self {
        Self::identity(r).sub(&Self::shift(r, sign, s.clone()))
    }

    /// `(1−qσ⁻¹)(tσ−1)`, the kernel of the wreath pairing.
    pub fn pairing_kernel(r: u32) -> Self {
        let q = RatFunc::var(Var::Q);
        let t = RatFunc::var(Var::T);
        Self::one_minus_shift(r, &q, -1).mul(&Self::shift(r, 1, t).sub(&Self::identity(r)))
    }

    /// `1/((1−qσ⁻¹)(tσ−1))`.
    pub fn pairing_kernel_inverse(r: u32) -> Result<Self> {
        let q = RatFunc::var(Var::Q);
        let t = RatFunc::var(Var::T);
        Ok(inverse_shift(r, &q, -1)?.mul(&inverse_shift(r, &t, 1)?).neg())
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn entry(&self, j: u32, i: u32) -> &RatFunc {
        &self.entries[j as usize][i as usize]
    }

    /// Column `i`: the colored data `(E_{0,i}, …, E_{r-1,i})`.
    pub fn column(&self, i: u32) -> Vec<RatFunc> {
        self.entries.iter().map(|row| row[i as usize].clone()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        Self { r: self.r, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.mul(c)).collect())
            .collect();
        Self { r: self.r, entries }
    }

    /// Matrix product; `apply(A·B, f) = apply(A, apply(B, f))`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let r = self.r as usize;
        let mut out = Self::zero(self.r);
        for j in 0..r {
            for i in 0..r {
                let mut acc = RatFunc::zero();
                for k in 0..r {
                    let a = &self.entries[j][k];
                    let b = &other.entries[k][i];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.entries[j][i] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let r = self.r as usize;
        let mut out = Self::zero(self.r);
        for j in 0..r {
            for i in 0..r {
                out.entries[i][j] = self.entries[j][i].clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.r)
    }

    /// Image of `p_n[X^{(i)}]` as the list of coefficients of `p_n[X^{(j)}]`.
    pub fn generator_image(&self, i: u32, n: u32) -> Vec<RatFunc> {
        self.column(i).iter().map(|e| e.substitute_powers(n as i32)).collect()
    }
}

impl fmt::Debug for PlethysmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PlethysmMatrix(r={})", self.r)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The inverse of `1 − sσ^{±1}`:
/// `p_n[X^{(i)}/(1−sσ^{±1})] = Σ_j s^{nj} p_n[X^{(i±j)}] / (1−s^{nr})`.
pub fn inverse_shift(r: u32, s: &RatFunc, sign: i64) -> Result<PlethysmMatrix> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidInput("shift sign must be +1 or -1".into()));
    }
    let den = RatFunc::one().sub(&s.pow(r as i32)?);
    let base = den.inv()?;
    let mut coeffs = vec![RatFunc::zero(); r as usize];
    let mut sj = RatFunc::one();
    for j in 0..r as i64 {
        coeffs[md(sign * j, r)] = coeffs[md(sign * j, r)].add(&sj.mul(&base));
        sj = sj.mul(s);
    }
    Ok(PlethysmMatrix::circulant(r, &coeffs))
}

/// `f[MX^•]`, the ring map determined by the generator images.
pub fn apply_matrix_plethysm<B: Backend>(
    m: &PlethysmMatrix,
    f: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    let r = f.r();
    if m.r() != r {
        return Err(Error::InvalidInput(format!(
            "plethysm of size {} applied to r = {}",
            m.r(),
            r
        )));
    }
    let cap = f.cap();
    let mut images: HashMap<(u32, u32), ColoredSymFunc<B::Elem>> = HashMap::new();
    let mut out = ColoredSymFunc::zero(r, cap);
    for (idx, c) in f.terms() {
        let mut acc = ColoredSymFunc::constant(r, cap, c.clone());
        for (i, part) in idx.0.iter().enumerate() {
            for &n in part.parts() {
                let key = (i as u32, n);
                if let std::collections::hash_map::Entry::Vacant(e) = images.entry(key) {
                    let mut img = ColoredSymFunc::zero(r, cap);
                    for (j, e) in m.generator_image(i as u32, n).iter().enumerate() {
                        if !e.is_zero() {
                            let gen = MultiPartition::single(r, j as u32, Partition::from_slice(&[n]));
                            img.add_term(gen, backend.embed(e)?);
                        }
                    }
                    e.insert(img);
                }
                acc = acc.mul(&images[&key]);
                if acc.is_zero() {
                    break;
                }
            }
        }
        for (k, v) in acc.terms() {
            out.add_term(k.clone(), v.clone());
        }
    }
    Ok(out)
}

/// `f[±πX^•]` for a color permutation `π`: `p_μ ↦ (±1)^{ℓ(μ)} p_{πμ}`.
pub fn permute_colors<C: Coeff>(f: &ColoredSymFunc<C>, perm: impl Fn(u32) -> u32, negate: bool) -> ColoredSymFunc<C> {
    let r = f.r();
    let mut out = ColoredSymFunc::zero(r, f.cap());
    for (idx, c) in f.terms() {
        let mut parts = vec![Partition::empty(); r as usize];
        let mut len = 0;
        for (i, p) in idx.0.iter().enumerate() {
            parts[perm(i as u32) as usize] = p.clone();
            len += p.len();
        }
        let c = if negate && len % 2 == 1 { c.neg() } else { c.clone() };
        out.add_term(MultiPartition(parts), c);
    }
    out
}

/// `f[ιX^•]`.
pub fn iota_apply<C: Coeff>(f: &ColoredSymFunc<C>) -> ColoredSymFunc<C> {
    let r = f.r();
    permute_colors(f, |i| md(-(i as i64), r) as u32, false)
}

/// `f[−ιX^•]`.
pub fn neg_iota_apply<C: Coeff>(f: &ColoredSymFunc<C>) -> ColoredSymFunc<C> {
    let r = f.r();
    permute_colors(f, |i| md(-(i as i64), r) as u32, true)
}

/// `f[E^•]` with `p_n[X^{(i)}] ↦ p_n[E^{(i)}]`.
pub fn vector_evaluate<B: Backend>(f: &ColoredSymFunc<B::Elem>, e: &[RatFunc], backend: &B) -> Result<B::Elem> {
    if e.len() != f.r() as usize {
        return Err(Error::InvalidInput("vector plethysm length differs from r".into()));
    }
    let mut cache: HashMap<(usize, u32), B::Elem> = HashMap::new();
    let mut acc = backend.zero();
    for (idx, c) in f.terms() {
        let mut term = c.clone();
        for (i, part) in idx.0.iter().enumerate() {
            for &n in part.parts() {
                let v = match cache.get(&(i, n)) {
                    Some(v) => v.clone(),
                    None => {
                        let v = backend.embed(&e[i].substitute_powers(n as i32))?;
                        cache.insert((i, n), v.clone());
                        v
                    }
                };
                term = term.mul(&v);
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `f[1]` in the color-0 reading: `p_n[X^{(0)}] ↦ 1`, other colors `↦ 0`.
pub fn evaluate_at_one_color0<C: Coeff>(f: &ColoredSymFunc<C>) -> Option<C> {
    let mut acc: Option<C> = None;
    for (idx, c) in f.terms() {
        if idx.0.iter().skip(1).all(|p| p.is_empty()) {
            acc = Some(match acc {
                Some(a) => a.add(c),
                None => c.clone(),
            });
        }
    }
    acc
}

/// `f[1]` in the all-colors reading: every `p_n[X^{(i)}] ↦ 1`.
pub fn evaluate_at_one_all<C: Coeff>(f: &ColoredSymFunc<C>) -> Option<C> {
    f.terms().values().fold(None, |acc, c| {
        Some(match acc {
            Some(a) => a.add(c),
            None => c.clone(),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExactBackend, LaurentPoly};

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition(parts.iter().map(|p| Partition::from_slice(p)).collect())
    }

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    #[test]
    fn sigma_moves_colors() {
        let b = ExactBackend::new();
        let f = ColoredSymFunc::power_sum(3, 3, 0, 1, b.one());
        let g = apply_matrix_plethysm(&PlethysmMatrix::sigma(3), &f, &b).unwrap();
        assert!(g.same(&ColoredSymFunc::power_sum(3, 3, 1, 1, b.one())));
        let id = apply_matrix_plethysm(&PlethysmMatrix::identity(3), &f, &b).unwrap();
        assert!(id.same(&f));
        assert_eq!(PlethysmMatrix::sigma(3).transpose(), PlethysmMatrix::sigma_inv(3));
        assert_eq!(PlethysmMatrix::iota(3).transpose(), PlethysmMatrix::iota(3));
    }

    #[test]
    fn one_minus_q_sigma_inv() {
        let b = ExactBackend::new();
        let m = PlethysmMatrix::one_minus_shift(3, &q(), -1);
        for i in 0..3 {
            for n in 1..=3 {
                let f = ColoredSymFunc::power_sum(3, 3, i, n, b.one());
                let g = apply_matrix_plethysm(&m, &f, &b).unwrap();
                let expected = f.sub(&ColoredSymFunc::power_sum(
                    3,
                    3,
                    (i + 2) % 3,
                    n,
                    RatFunc::from_poly(LaurentPoly::qt(n as i32, 0)),
                ));
                assert!(g.same(&expected));
            }
        }
    }

    #[test]
    fn inverse_shift_example() {
        let b = ExactBackend::new();
        let inv = inverse_shift(3, &q(), -1).unwrap();
        let f = ColoredSymFunc::power_sum(3, 2, 0, 1, b.one());
        let g = apply_matrix_plethysm(&inv, &f, &b).unwrap();
        let den = RatFunc::one().sub(&q().pow(3).unwrap()).inv().unwrap();
        assert_eq!(g.coeff(&mp(&[&[1], &[], &[]])).unwrap(), &den);
        assert_eq!(g.coeff(&mp(&[&[], &[], &[1]])).unwrap(), &q().mul(&den));
        assert_eq!(g.coeff(&mp(&[&[], &[1], &[]])).unwrap(), &q().pow(2).unwrap().mul(&den));
        // r = 1: p_n[X/(1−s)] = p_n/(1−s^n)
        let inv1 = inverse_shift(1, &q(), 1).unwrap();
        let f = ColoredSymFunc::power_sum(1, 3, 0, 2, b.one());
        let g = apply_matrix_plethysm(&inv1, &f, &b).unwrap();
        let expected = RatFunc::one().sub(&q().pow(2).unwrap()).inv().unwrap();
        assert_eq!(g.coeff(&mp(&[&[2]])).unwrap(), &expected);
    }

    #[test]
    fn inverse_pairs_compose_to_identity() {
        let t = RatFunc::var(Var::T);
        let s_list = [q(), t.clone(), q().mul(&t)];
        for r in 1..=5 {
            for s in &s_list {
                for sign in [-1, 1] {
                    let m = PlethysmMatrix::one_minus_shift(r, s, sign);
                    let inv = inverse_shift(r, s, sign).unwrap();
                    assert!(m.mul(&inv).is_identity());
                    assert!(inv.mul(&m).is_identity());
                }
            }
        }
    }

    #[test]
    fn composition_matches_product() {
        let b = ExactBackend::new();
        let a = PlethysmMatrix::one_minus_shift(3, &q(), -1);
        let c = PlethysmMatrix::iota(3).scale(&RatFunc::var(Var::T));
        let f = ColoredSymFunc::power_sum(3, 3, 1, 1, b.one()).mul(&ColoredSymFunc::power_sum(3, 3, 2, 2, b.one()));
        let lhs = apply_matrix_plethysm(&a, &apply_matrix_plethysm(&c, &f, &b).unwrap(), &b).unwrap();
        let rhs = apply_matrix_plethysm(&a.mul(&c), &f, &b).unwrap();
        assert!(lhs.same(&rhs));
    }

    #[test]
    fn vector_examples() {
        use crate::charsum::d_sum;
        let b = ExactBackend::new();
        let d = d_sum(&Partition::from_slice(&[1]), 3).unwrap();
        let e: Vec<RatFunc> = (0..3)
            .map(|i| RatFunc::from_poly(d.color_part(i).poly().clone()))
            .collect();
        let f = ColoredSymFunc::power_sum(3, 2, 0, 1, b.one());
        assert_eq!(
            vector_evaluate(&f, &e, &b).unwrap(),
            RatFunc::from_poly(LaurentPoly::qt(1, 1))
        );
        let one = ColoredSymFunc::constant(3, 2, b.one());
        assert_eq!(vector_evaluate(&one, &e, &b).unwrap(), RatFunc::one());
        let g = iota_apply(&ColoredSymFunc::power_sum(3, 2, 1, 1, b.one()));
        assert_eq!(vector_evaluate(&g, &e, &b).unwrap(), q().neg());
    }

    #[test]
    fn neg_iota_signs() {
        let b = ExactBackend::new();
        let f = ColoredSymFunc::power_sum(3, 3, 1, 1, b.one()).mul(&ColoredSymFunc::power_sum(3, 3, 0, 2, b.one()));
        let g = neg_iota_apply(&f);
        assert_eq!(g.coeff(&mp(&[&[2], &[], &[1]])).unwrap(), &RatFunc::one());
        let h = neg_iota_apply(&ColoredSymFunc::power_sum(3, 3, 1, 1, b.one()));
        assert_eq!(h.coeff(&mp(&[&[], &[], &[1]])).unwrap(), &RatFunc::from_int(-1));
        let m = PlethysmMatrix::iota(3).neg();
        assert!(apply_matrix_plethysm(&m, &f, &b).unwrap().same(&g));
    }
}
