//! Wreath Pieri operators and their predicted expansions.

use std::collections::BTreeMap;

use crate::coeff::{Backend, Coeff, LaurentPoly, RatFunc};
use crate::error::Result;
use crate::partition::{colored_contains, core_quotient, Partition};
use crate::symfunc::{omega_series, translation_apply};

use super::operators::{nekrasov_at, norm_expected};
use super::Wreath;

fn quot_size(lambda: &Partition, r: u32) -> Result<u32> {
    Ok(core_quotient(lambda, r)?.quotient.size())
}

/// `h_n^⊥[(1−qt)X^{(0)}] H_λ` in the `H` basis. The skewing operator is the
/// degree `−n` part of `𝒯[(1−qt)X^{(0)}]`.
pub fn pieri_skew<B: Backend>(w: &Wreath<B>, lambda: &Partition, n: u32) -> Result<BTreeMap<Partition, B::Elem>> {
    let k = quot_size(lambda, w.r())?;
    if n > k {
        return Ok(BTreeMap::new());
    }
    let mut col = vec![RatFunc::zero(); w.r() as usize];
    col[0] = RatFunc::from_poly(LaurentPoly::one().sub(&LaurentPoly::qt(1, 1)));
    let g = translation_apply(&col, &w.h(lambda, k)?, w.backend())?.component(k - n);
    w.expand(&g, false)
}

/// `e_n[(1−qt)X^{(0)}/((1−qσ⁻¹)(1−tσ))] H_λ` in the `H` basis, using
/// `e_n[E] = (−1)^n h_n[−E]` and `−E = (1−qt)X^{(0)}/((1−qσ⁻¹)(tσ−1))`.
pub fn pieri_mult<B: Backend>(w: &Wreath<B>, lambda: &Partition, n: u32) -> Result<BTreeMap<Partition, B::Elem>> {
    let r = w.r();
    let k = quot_size(lambda, r)?;
    let c = RatFunc::from_poly(LaurentPoly::one().sub(&LaurentPoly::qt(1, 1)));
    let kern = crate::symfunc::PlethysmMatrix::pairing_kernel_inverse(r)?;
    let col: Vec<RatFunc> = kern.column(0).iter().map(|x| x.mul(&c)).collect();
    let hn = omega_series(&col, r, n, w.backend())?.component(n);
    let en = if n.is_multiple_of(2) { hn } else { hn.neg() };
    let g = en.with_cap(k + n).mul(&w.h(lambda, k + n)?).component(k + n);
    w.expand(&g, false)
}

/// `N_{λ,μ}(1)/N_{μ,μ}(1)` on `μ ⊂_n λ`.
pub fn pieri_skew_expected(
    core: &Partition,
    lambda: &Partition,
    r: u32,
    n: u32,
) -> Result<BTreeMap<Partition, RatFunc>> {
    let k = quot_size(lambda, r)?;
    let mut out = BTreeMap::new();
    if n > k {
        return Ok(out);
    }
    for mu in crate::partition::enumerate_with_core(core, r, k - n)? {
        if colored_contains(lambda, &mu, r, n) {
            let v = nekrasov_at(lambda, &mu, r, &RatFunc::one())?.div(&norm_expected(&mu, r)?)?;
            out.insert(mu, v);
        }
    }
    Ok(out)
}

/// `(−1)^n (qt)^{|quot μ|} N_{λ,μ}((qt)⁻¹)/N_{μ,μ}(1)` on `λ ⊂_n μ`.
pub fn pieri_mult_expected(
    core: &Partition,
    lambda: &Partition,
    r: u32,
    n: u32,
) -> Result<BTreeMap<Partition, RatFunc>> {
    let k = quot_size(lambda, r)?;
    let qt = RatFunc::from_poly(LaurentPoly::qt(1, 1));
    let u = qt.inv()?;
    let sign = if n.is_multiple_of(2) {
        RatFunc::one()
    } else {
        RatFunc::from_int(-1)
    };
    let mut out = BTreeMap::new();
    for mu in crate::partition::enumerate_with_core(core, r, k + n)? {
        if colored_contains(&mu, lambda, r, n) {
            let v = sign
                .mul(&qt.pow((k + n) as i32)?)
                .mul(&nekrasov_at(lambda, &mu, r, &u)?)
                .div(&norm_expected(&mu, r)?)?;
            out.insert(mu, v);
        }
    }
    Ok(out)
}

/// Outcome of comparing a computed expansion against its prediction.
#[derive(Debug, Clone)]
pub struct PieriCheck {
    pub lambda: Partition,
    pub n: u32,
    pub support_ok: bool,
    pub coefficients_ok: bool,
    pub mismatch: Option<String>,
}

impl PieriCheck {
    pub fn ok(&self) -> bool {
        self.support_ok && self.coefficients_ok
    }

    pub fn compare<B: Backend>(
        backend: &B,
        lambda: &Partition,
        n: u32,
        computed: &BTreeMap<Partition, B::Elem>,
        expected: &BTreeMap<Partition, RatFunc>,
    ) -> Result<Self> {
        let extra = computed.keys().find(|mu| !expected.contains_key(*mu));
        let mut mismatch = extra.map(|mu| format!("{} outside the predicted support", mu));
        let mut coefficients_ok = true;
        for (mu, e) in expected {
            let e = backend.embed(e)?;
            let c = computed.get(mu).cloned().unwrap_or_else(|| backend.zero());
            if !c.same(&e) {
                coefficients_ok = false;
                mismatch
                    .get_or_insert_with(|| format!("{}: computed {}, expected {}", mu, c.canonical(), e.canonical()));
            }
        }
        Ok(Self {
            lambda: lambda.clone(),
            n,
            support_ok: extra.is_none(),
            coefficients_ok,
            mismatch,
        })
    }
}
