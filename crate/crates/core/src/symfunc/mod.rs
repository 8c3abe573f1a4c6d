//! The colored ring `Λ^{⊗r}` truncated at a degree cap, stored in colored
//! power sums `p_{μ^{(0)}}[X^{(0)}] ⋯ p_{μ^{(r-1)}}[X^{(r-1)}]`.

mod characters;
mod ops;
mod plethysm;

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::coeff::{Backend, Coeff, RatFunc};
use crate::error::{Error, Result};
use crate::partition::{multipartitions, partitions, MultiPartition, Partition};

pub use characters::{character, character_table, z};
pub use ops::{
    omega_multiply, omega_scalar, omega_series, omega_translation_commute_check, skew_apply, translation_apply,
    wreath_pairing,
};
pub use plethysm::{
    apply_matrix_plethysm, evaluate_at_one_all, evaluate_at_one_color0, inverse_shift, iota_apply, neg_iota_apply,
    permute_colors, vector_evaluate, PlethysmMatrix,
};

/// Product of colored power-sum indices: parts merge color by color.
pub fn index_mul(a: &MultiPartition, b: &MultiPartition) -> MultiPartition {
    MultiPartition(
        a.0.iter()
            .zip(&b.0)
            .map(|(x, y)| {
                let mut parts: Vec<u32> = x.parts().iter().chain(y.parts()).copied().collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts).unwrap()
            })
            .collect(),
    )
}

/// `∏_i z_{μ^{(i)}}`.
pub fn z_multi(mu: &MultiPartition) -> BigRational {
    BigRational::from_integer(mu.0.iter().map(z).product())
}

#[derive(Clone, Debug)]
pub struct ColoredSymFunc<C: Coeff> {
    r: u32,
    cap: u32,
    terms: BTreeMap<MultiPartition, C>,
}

impl<C: Coeff> ColoredSymFunc<C> {
    pub fn zero(r: u32, cap: u32) -> Self {
        Self {
            r,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: u32, cap: u32, c: C) -> Self {
        Self::monomial(r, cap, MultiPartition::empty(r), c)
    }

    /// `c · p_μ`, dropped if beyond the cap.
    pub fn monomial(r: u32, cap: u32, index: MultiPartition, c: C) -> Self {
        let mut out = Self::zero(r, cap);
        out.add_term(index, c);
        out
    }

    /// `c · p_n[X^{(i)}]`.
    pub fn power_sum(r: u32, cap: u32, i: u32, n: u32, c: C) -> Self {
        let idx = MultiPartition::single(r, i % r, Partition::from_slice(&[n]));
        Self::monomial(r, cap, idx, c)
    }

    pub fn from_terms(r: u32, cap: u32, terms: impl IntoIterator<Item = (MultiPartition, C)>) -> Self {
        let mut out = Self::zero(r, cap);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<MultiPartition, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &MultiPartition) -> Option<&C> {
        self.terms.get(index)
    }

    /// Adds `c · p_index` in place; beyond-cap and zero terms are dropped.
    pub fn add_term(&mut self, index: MultiPartition, c: C) {
        if c.is_zero() || index.size() > self.cap {
            return;
        }
        debug_assert_eq!(index.r(), self.r);
        match self.terms.get_mut(&index) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&index);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.r, other.r, "colored functions with different r");
    }

    pub fn with_cap(&self, cap: u32) -> Self {
        Self {
            r: self.r,
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() <= cap)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.with_cap(self.cap.min(other.cap));
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs_infallible(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.r, self.cap);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(s));
        }
        out
    }

    fn map_coeffs_infallible<F: Fn(&C) -> C>(&self, f: F) -> Self {
        Self {
            r: self.r,
            cap: self.cap,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), f(c))).collect(),
        }
    }

    /// Coefficientwise map into another coefficient ring.
    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> Result<D>>(&self, f: F) -> Result<ColoredSymFunc<D>> {
        let mut out = ColoredSymFunc::zero(self.r, self.cap);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Product truncated at the smaller cap.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(self.r, cap);
        for (a, ca) in &self.terms {
            let da = a.size();
            for (b, cb) in &other.terms {
                if da + b.size() > cap {
                    continue;
                }
                out.add_term(index_mul(a, b), ca.mul(cb));
            }
        }
        out
    }

    /// Degree-`d` homogeneous component.
    pub fn component(&self, d: u32) -> Self {
        Self {
            r: self.r,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.size()).max()
    }

    /// Equality of represented values; missing terms count as zero.
    pub fn same(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// The first index (in canonical order) where the two differ, with the
    /// canonical forms of both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(MultiPartition, String, String)> {
        let keys: std::collections::BTreeSet<&MultiPartition> = self.terms.keys().chain(other.terms.keys()).collect();
        for k in keys {
            match (self.terms.get(k), other.terms.get(k)) {
                (Some(a), Some(b)) => {
                    if !a.same(b) {
                        return Some((k.clone(), a.canonical(), b.canonical()));
                    }
                }
                (Some(a), None) => {
                    if !a.is_zero() {
                        return Some((k.clone(), a.canonical(), "0".into()));
                    }
                }
                (None, Some(b)) => {
                    if !b.is_zero() {
                        return Some((k.clone(), "0".into(), b.canonical()));
                    }
                }
                (None, None) => {}
            }
        }
        None
    }

    /// `∂/∂p_n[X^{(i)}]` applied `k` times with the factor `n^k`, i.e. `(p_n^⊥)^k`.
    pub(crate) fn perp_monomial(index: &MultiPartition, nu: &MultiPartition) -> Option<(MultiPartition, BigRational)> {
        let mut factor = BigRational::from_integer(1.into());
        let mut rest = Vec::with_capacity(index.0.len());
        for (mu_i, nu_i) in index.0.iter().zip(&nu.0) {
            let mut parts = mu_i.parts().to_vec();
            let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
            for &n in nu_i.parts() {
                *counts.entry(n).or_insert(0) += 1;
            }
            for (&n, &k) in &counts {
                let m = parts.iter().filter(|&&x| x == n).count() as u32;
                if m < k {
                    return None;
                }
                for j in 0..k {
                    factor *= BigRational::from_integer(((m - j) * n).into());
                }
                for _ in 0..k {
                    let pos = parts.iter().position(|&x| x == n).unwrap();
                    parts.remove(pos);
                }
            }
            rest.push(Partition::new(parts).unwrap());
        }
        Some((MultiPartition(rest), factor))
    }

    /// `u^D`: the degree-`d` part is scaled by `marker^d`.
    pub fn grading_scale<B: Backend<Elem = C>>(&self, marker: &RatFunc, backend: &B) -> Result<Self> {
        let mut powers: BTreeMap<u32, C> = BTreeMap::new();
        let mut out = Self::zero(self.r, self.cap);
        for (k, c) in &self.terms {
            let d = k.size();
            if let std::collections::btree_map::Entry::Vacant(e) = powers.entry(d) {
                e.insert(backend.embed(&marker.pow(d as i32)?)?);
            }
            out.add_term(k.clone(), c.mul(&powers[&d]));
        }
        Ok(out)
    }

    /// `{r, cap, basis: "powersum", terms: [{index, coeff}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"index": k, "coeff": c.canonical()}))
            .collect();
        json!({"r": self.r, "cap": self.cap, "basis": "powersum", "terms": terms})
    }

    /// The same data in the multi-Schur basis.
    pub fn to_schur_json(&self) -> Value {
        let terms: Vec<Value> = powersum_to_schur(self)
            .iter()
            .map(|(k, c)| json!({"index": k, "coeff": c.canonical()}))
            .collect();
        json!({"r": self.r, "cap": self.cap, "basis": "schur", "terms": terms})
    }
}

/// `⟨f, g⟩`: diagonal in colored power sums with weight `∏ z_{μ^{(i)}}`.
pub fn hall_pairing<B: Backend>(f: &ColoredSymFunc<B::Elem>, g: &ColoredSymFunc<B::Elem>, backend: &B) -> B::Elem {
    let mut acc = backend.zero();
    for (k, a) in &f.terms {
        if let Some(b) = g.terms.get(k) {
            acc = acc.add(&a.mul(b).mul(&backend.constant(&z_multi(k))));
        }
    }
    acc
}

/// `s_{vec λ}` in colored power sums.
pub fn schur_to_powersum<B: Backend>(
    lambda: &MultiPartition,
    cap: u32,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    if lambda.size() > cap {
        return Err(Error::InvalidInput(format!(
            "{} exceeds the degree cap {}",
            lambda, cap
        )));
    }
    let r = lambda.r();
    // Per color: list of (μ, χ^λ(μ)/z_μ).
    let mut per_color: Vec<Vec<(Partition, BigRational)>> = Vec::new();
    for l in &lambda.0 {
        let list = partitions(l.size())
            .into_iter()
            .filter_map(|m| {
                let c = character(l, &m);
                (c != 0).then(|| {
                    let w = BigRational::new(c.into(), z(&m));
                    (m, w)
                })
            })
            .collect();
        per_color.push(list);
    }
    let mut out = ColoredSymFunc::zero(r, cap);
    let mut stack: Vec<(Vec<Partition>, BigRational)> = vec![(Vec::new(), BigRational::from_integer(1.into()))];
    for list in &per_color {
        let mut next = Vec::new();
        for (pre, w) in &stack {
            for (m, c) in list {
                let mut v = pre.clone();
                v.push(m.clone());
                next.push((v, w * c));
            }
        }
        stack = next;
    }
    for (parts, w) in stack {
        out.add_term(MultiPartition(parts), backend.constant(&w));
    }
    Ok(out)
}

/// Coefficients in the multi-Schur basis, by `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn powersum_to_schur<C: Coeff>(f: &ColoredSymFunc<C>) -> BTreeMap<MultiPartition, C> {
    let mut out: BTreeMap<MultiPartition, C> = BTreeMap::new();
    for (mu, c) in &f.terms {
        let mut stack: Vec<(Vec<Partition>, i64)> = vec![(Vec::new(), 1)];
        for m in &mu.0 {
            let mut next = Vec::new();
            for (pre, w) in &stack {
                for l in partitions(m.size()) {
                    let ch = character(&l, m);
                    if ch != 0 {
                        let mut v = pre.clone();
                        v.push(l);
                        next.push((v, w * ch));
                    }
                }
            }
            stack = next;
        }
        for (parts, w) in stack {
            let key = MultiPartition(parts);
            let add = c.scale_int(w);
            match out.get_mut(&key) {
                Some(old) => *old = old.add(&add),
                None => {
                    out.insert(key, add);
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The multi-Schur basis of degree `n` as colored functions, in the order
/// of [`multipartitions`].
pub fn schur_basis<B: Backend>(
    r: u32,
    n: u32,
    cap: u32,
    backend: &B,
) -> Result<Vec<(MultiPartition, ColoredSymFunc<B::Elem>)>> {
    multipartitions(r, n)
        .into_iter()
        .map(|m| schur_to_powersum(&m, cap, backend).map(|f| (m, f)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ExactBackend;

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition(parts.iter().map(|p| Partition::from_slice(p)).collect())
    }

    fn half() -> RatFunc {
        RatFunc::from_rational(BigRational::new(1.into(), 2.into()))
    }

    #[test]
    fn schur_examples() {
        let b = ExactBackend::new();
        let s1 = schur_to_powersum(&mp(&[&[1], &[], &[]]), 3, &b).unwrap();
        assert_eq!(s1.len(), 1);
        assert!(
            s1.coeff(&mp(&[&[1], &[], &[]])).unwrap().as_constant().unwrap() == BigRational::from_integer(1.into())
        );
        let s2 = schur_to_powersum(&mp(&[&[], &[2], &[]]), 3, &b).unwrap();
        assert_eq!(s2.coeff(&mp(&[&[], &[2], &[]])).unwrap(), &half());
        assert_eq!(s2.coeff(&mp(&[&[], &[1, 1], &[]])).unwrap(), &half());
        let s11 = schur_to_powersum(&mp(&[&[1, 1]]), 3, &b).unwrap();
        assert_eq!(s11.coeff(&mp(&[&[2]])).unwrap(), &half().neg());
        assert!(schur_to_powersum(&mp(&[&[2, 2]]), 3, &b).is_err());
    }

    #[test]
    fn powersum_to_schur_examples() {
        let b = ExactBackend::new();
        let p2 = ColoredSymFunc::power_sum(1, 3, 0, 2, b.one());
        let s = powersum_to_schur(&p2);
        assert_eq!(s.len(), 2);
        assert_eq!(s[&mp(&[&[2]])], RatFunc::one());
        assert_eq!(s[&mp(&[&[1, 1]])], RatFunc::from_int(-1));
        let p1 = ColoredSymFunc::power_sum(3, 3, 0, 1, b.one());
        let s = powersum_to_schur(&p1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[&mp(&[&[1], &[], &[]])], RatFunc::one());
    }

    #[test]
    fn basis_round_trip_and_orthonormality() {
        let b = ExactBackend::new();
        for n in 0..=3 {
            let basis = schur_basis(2, n, 3, &b).unwrap();
            for (m, f) in &basis {
                let back = powersum_to_schur(f);
                assert_eq!(back.len(), 1);
                assert_eq!(back[m], RatFunc::one());
                for (m2, g) in &basis {
                    let v = hall_pairing(f, g, &b);
                    let expected = if m == m2 { RatFunc::one() } else { RatFunc::zero() };
                    assert_eq!(v, expected);
                }
            }
        }
    }

    #[test]
    fn hall_pairing_examples() {
        let b = ExactBackend::new();
        let p2 = ColoredSymFunc::power_sum(3, 3, 0, 2, b.one());
        assert_eq!(hall_pairing(&p2, &p2, &b), RatFunc::from_int(2));
        let a = ColoredSymFunc::power_sum(3, 3, 0, 1, b.one());
        let c = ColoredSymFunc::power_sum(3, 3, 1, 1, b.one());
        assert!(hall_pairing(&a, &c, &b).is_zero());
    }

    #[test]
    fn grading() {
        let b = ExactBackend::new();
        let one = ColoredSymFunc::constant(1, 3, b.one());
        let f = one.add(&ColoredSymFunc::power_sum(1, 3, 0, 1, b.one()));
        let big_t = RatFunc::var(crate::coeff::Var::Grade);
        let g = f.grading_scale(&big_t, &b).unwrap();
        assert_eq!(g.coeff(&mp(&[&[]])).unwrap(), &RatFunc::one());
        assert_eq!(g.coeff(&mp(&[&[1]])).unwrap(), &big_t);
    }
}
