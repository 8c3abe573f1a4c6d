//! `Ω`-multiplication, `𝒯`-translation, skewing and the wreath pairing.

use std::collections::HashMap;

use num_rational::BigRational;

use super::plethysm::{apply_matrix_plethysm, iota_apply, PlethysmMatrix};
use super::{hall_pairing, ColoredSymFunc};
use crate::coeff::{Backend, Coeff, RatFunc};
use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};

fn check_len(col: &[RatFunc], r: u32) -> Result<()> {
    if col.len() != r as usize {
        return Err(Error::InvalidInput(format!(
            "colored data of length {} for r = {}",
            col.len(),
            r
        )));
    }
    Ok(())
}

/// `Ω[Σ_j c_j X^{(j)}]` truncated at `cap`, by `nΩ_n = Σ_k P_k Ω_{n-k}` with
/// `P_k = Σ_j c_j(k) p_k[X^{(j)}]`.
pub fn omega_series<B: Backend>(col: &[RatFunc], r: u32, cap: u32, backend: &B) -> Result<ColoredSymFunc<B::Elem>> {
    check_len(col, r)?;
    let mut p: Vec<ColoredSymFunc<B::Elem>> = vec![ColoredSymFunc::zero(r, cap)];
    for k in 1..=cap {
        let mut pk = ColoredSymFunc::zero(r, cap);
        for (j, c) in col.iter().enumerate() {
            if !c.is_zero() {
                let v = backend.embed(&c.substitute_powers(k as i32))?;
                pk.add_term(MultiPartition::single(r, j as u32, Partition::from_slice(&[k])), v);
            }
        }
        p.push(pk);
    }
    let mut h: Vec<ColoredSymFunc<B::Elem>> = vec![ColoredSymFunc::constant(r, cap, backend.one())];
    let mut total = h[0].clone();
    for n in 1..=cap {
        let mut acc = ColoredSymFunc::zero(r, cap);
        for k in 1..=n {
            if p[k as usize].is_zero() {
                continue;
            }
            acc = acc.add(&p[k as usize].mul(&h[(n - k) as usize]));
        }
        let hn = acc.scale(&backend.constant(&BigRational::new(1.into(), n.into())));
        total = total.add(&hn);
        h.push(hn);
    }
    Ok(total)
}

/// `Ω[Σ_j c_j X^{(j)}] · f`, truncated at the cap of `f`.
pub fn omega_multiply<B: Backend>(
    col: &[RatFunc],
    f: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    Ok(omega_series(col, f.r(), f.cap(), backend)?.mul(f))
}

/// `Ω[c]` for scalar data `c`, as `Σ_{n ≤ order} h_n[c]`. Meaningful when `c`
/// carries a marker that the backend truncates.
pub fn omega_scalar<B: Backend>(c: &RatFunc, order: u32, backend: &B) -> Result<B::Elem> {
    let pk: Vec<B::Elem> = (0..=order)
        .map(|k| {
            if k == 0 {
                Ok(backend.zero())
            } else {
                backend.embed(&c.substitute_powers(k as i32))
            }
        })
        .collect::<Result<_>>()?;
    let mut h = vec![backend.one()];
    let mut total = backend.one();
    for n in 1..=order as usize {
        let mut acc = backend.zero();
        for k in 1..=n {
            acc = acc.add(&pk[k].mul(&h[n - k]));
        }
        let hn = acc.mul(&backend.constant(&BigRational::new(1.into(), (n as i64).into())));
        total = total.add(&hn);
        h.push(hn);
    }
    Ok(total)
}

/// `𝒯[Σ_j a_j X^{(j)}] f`: the automorphism `p_n[X^{(j)}] ↦ p_n[X^{(j)}] + a_j(n)`.
pub fn translation_apply<B: Backend>(
    col: &[RatFunc],
    f: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    let r = f.r();
    check_len(col, r)?;
    let mut shifts: HashMap<(usize, u32), Option<B::Elem>> = HashMap::new();
    let mut out = ColoredSymFunc::zero(r, f.cap());
    for (idx, c) in f.terms() {
        // Expand ∏ (p_n + a)^m one distinct generator at a time.
        let mut partial: Vec<(Vec<Vec<u32>>, B::Elem)> = vec![(vec![Vec::new(); r as usize], c.clone())];
        for (j, part) in idx.0.iter().enumerate() {
            let parts = part.parts();
            let mut s = 0;
            while s < parts.len() {
                let n = parts[s];
                let mut e = s;
                while e < parts.len() && parts[e] == n {
                    e += 1;
                }
                let m = (e - s) as u32;
                s = e;
                let a = match shifts.get(&(j, n)) {
                    Some(a) => a.clone(),
                    None => {
                        let v = col[j].substitute_powers(n as i32);
                        let a = if v.is_zero() { None } else { Some(backend.embed(&v)?) };
                        shifts.insert((j, n), a.clone());
                        a
                    }
                };
                let Some(a) = a else {
                    for (ps, _) in partial.iter_mut() {
                        ps[j].extend(std::iter::repeat_n(n, m as usize));
                    }
                    continue;
                };
                // (p + a)^m = Σ_k C(m,k) a^{m-k} p^k
                let mut apow = vec![backend.one()];
                for _ in 0..m {
                    let last = apow.last().unwrap().mul(&a);
                    apow.push(last);
                }
                let mut next = Vec::with_capacity(partial.len() * (m as usize + 1));
                for (ps, w) in &partial {
                    let mut binom: i64 = 1;
                    for k in 0..=m {
                        let mut nps = ps.clone();
                        nps[j].extend(std::iter::repeat_n(n, k as usize));
                        let coeff = w.mul(&apow[(m - k) as usize]).scale_int(binom);
                        next.push((nps, coeff));
                        binom = binom * (m - k) as i64 / (k + 1) as i64;
                    }
                }
                partial = next;
            }
        }
        for (ps, w) in partial {
            let parts: Vec<Partition> = ps.into_iter().map(|v| Partition::new(v).unwrap()).collect();
            out.add_term(MultiPartition(parts), w);
        }
    }
    Ok(out)
}

/// `F^⊥ g`: every `p_n[X^{(i)}]` of `F` acts as `n ∂/∂p_n[X^{(i)}]`.
pub fn skew_apply<B: Backend>(
    f: &ColoredSymFunc<B::Elem>,
    g: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> ColoredSymFunc<B::Elem> {
    let mut out = ColoredSymFunc::zero(g.r(), g.cap());
    for (nu, a) in f.terms() {
        for (mu, b) in g.terms() {
            if nu.size() > mu.size() {
                continue;
            }
            if let Some((rest, factor)) = ColoredSymFunc::<B::Elem>::perp_monomial(mu, nu) {
                out.add_term(rest, a.mul(b).mul(&backend.constant(&factor)));
            }
        }
    }
    out
}

/// `⟨f, g⟩' = ⟨f[ιX^•], g[(1−qσ⁻¹)(tσ−1)X^•]⟩`.
pub fn wreath_pairing<B: Backend>(
    f: &ColoredSymFunc<B::Elem>,
    g: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> Result<B::Elem> {
    if f.r() != g.r() {
        return Err(Error::InvalidInput("pairing of functions with different r".into()));
    }
    let kernel = PlethysmMatrix::pairing_kernel(f.r());
    let gk = apply_matrix_plethysm(&kernel, g, backend)?;
    Ok(hall_pairing(&iota_apply(f), &gk, backend))
}

/// Compares `𝒯[AX^{(j)}z] Ω[BX^{(k)}w]` with
/// `Ω[(AᵀB)_{j,k} zw] Ω[BX^{(k)}w] 𝒯[AX^{(j)}z]` on every power-sum
/// monomial of degree at most `test_degree`. `z` and `w` are folded into the
/// columns by the caller (for instance as a truncated marker); the scalar
/// factor is expanded to `order` terms. Only output degrees that are not
/// affected by the `Ω`-truncation at `cap` are compared.
#[allow(clippy::too_many_arguments)]
pub fn omega_translation_commute_check<B: Backend>(
    a: &PlethysmMatrix,
    b: &PlethysmMatrix,
    z: &RatFunc,
    w: &RatFunc,
    j: u32,
    k: u32,
    cap: u32,
    test_degree: u32,
    order: u32,
    backend: &B,
) -> Result<bool> {
    let r = a.r();
    let acol: Vec<RatFunc> = a.column(j).iter().map(|x| x.mul(z)).collect();
    let bcol: Vec<RatFunc> = b.column(k).iter().map(|x| x.mul(w)).collect();
    let scalar_arg = a.transpose().mul(b).entry(j, k).mul(z).mul(w);
    let scalar = omega_scalar(&scalar_arg, order, backend)?;
    let omega = omega_series(&bcol, r, cap, backend)?;
    let compare_to = cap.saturating_sub(order);
    for d in 0..=test_degree.min(cap) {
        for idx in crate::partition::multipartitions(r, d) {
            let f = ColoredSymFunc::monomial(r, cap, idx, backend.one());
            let lhs = translation_apply(&acol, &omega.mul(&f), backend)?;
            let rhs = omega.mul(&translation_apply(&acol, &f, backend)?).scale(&scalar);
            for e in 0..=compare_to {
                if !lhs.component(e).same(&rhs.component(e)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExactBackend, LaurentPoly, SeriesBackend, SeriesCap, Var};
    use crate::symfunc::{powersum_to_schur, schur_basis};

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition(parts.iter().map(|p| Partition::from_slice(p)).collect())
    }

    fn half() -> RatFunc {
        RatFunc::from_rational(BigRational::new(1.into(), 2.into()))
    }

    #[test]
    fn omega_of_x_is_sum_of_h() {
        let b = ExactBackend::new();
        let om = omega_series(&[RatFunc::one()], 1, 2, &b).unwrap();
        assert_eq!(om.len(), 4);
        assert_eq!(om.coeff(&mp(&[&[]])).unwrap(), &RatFunc::one());
        assert_eq!(om.coeff(&mp(&[&[1]])).unwrap(), &RatFunc::one());
        assert_eq!(om.coeff(&mp(&[&[2]])).unwrap(), &half());
        assert_eq!(om.coeff(&mp(&[&[1, 1]])).unwrap(), &half());
        // Ω[3-colored X^{(0)}]: h_n in color 0 only
        let om3 = omega_series(&[RatFunc::one(), RatFunc::zero(), RatFunc::zero()], 3, 3, &b).unwrap();
        let s = powersum_to_schur(&om3);
        assert_eq!(s.len(), 4);
        assert_eq!(s[&mp(&[&[3], &[], &[]])], RatFunc::one());
    }

    #[test]
    fn omega_inverse_pair() {
        let b = ExactBackend::new();
        let q = RatFunc::var(Var::Q);
        let col = vec![q.clone(), RatFunc::one(), RatFunc::zero()];
        let neg: Vec<RatFunc> = col.iter().map(|c| c.neg()).collect();
        let prod = omega_series(&col, 3, 4, &b)
            .unwrap()
            .mul(&omega_series(&neg, 3, 4, &b).unwrap());
        assert!(prod.same(&ColoredSymFunc::constant(3, 4, RatFunc::one())));
        let zero = omega_series(&vec![RatFunc::zero(); 3], 3, 4, &b).unwrap();
        assert!(zero.same(&ColoredSymFunc::constant(3, 4, RatFunc::one())));
    }

    #[test]
    fn translation_examples() {
        let b = ExactBackend::new();
        let p1 = ColoredSymFunc::power_sum(3, 3, 0, 1, b.one());
        let col = vec![RatFunc::one(), RatFunc::zero(), RatFunc::zero()];
        let g = translation_apply(&col, &p1, &b).unwrap();
        assert!(g.same(&p1.add(&ColoredSymFunc::constant(3, 3, RatFunc::one()))));
        let one = ColoredSymFunc::constant(3, 3, RatFunc::one());
        assert!(translation_apply(&col, &one, &b).unwrap().same(&one));
        // 𝒯[(1−uqt)X^{(0)}] p_2 = p_2 + 1 − u²q²t²
        let uqt = RatFunc::mono([1, 1, 1, 0, 0]);
        let col = vec![RatFunc::one().sub(&uqt), RatFunc::zero(), RatFunc::zero()];
        let p2 = ColoredSymFunc::power_sum(3, 3, 0, 2, b.one());
        let g = translation_apply(&col, &p2, &b).unwrap();
        let c = RatFunc::one().sub(&RatFunc::mono([2, 2, 2, 0, 0]));
        assert!(g.same(&p2.add(&ColoredSymFunc::constant(3, 3, c))));
        // (p_1 + 1)^2 = p_1^2 + 2 p_1 + 1
        let col1 = vec![RatFunc::one()];
        let sq = ColoredSymFunc::power_sum(1, 3, 0, 1, b.one()).mul(&ColoredSymFunc::power_sum(1, 3, 0, 1, b.one()));
        let g = translation_apply(&col1, &sq, &b).unwrap();
        assert_eq!(g.coeff(&mp(&[&[1]])).unwrap(), &RatFunc::from_int(2));
        assert_eq!(g.coeff(&mp(&[&[]])).unwrap(), &RatFunc::one());
    }

    #[test]
    fn translation_is_exp_of_skewing() {
        // 𝒯[cX^{(0)}] = Σ_n h_n^⊥[cX^{(0)}], i.e. skewing by Ω[cX^{(0)}]
        let b = ExactBackend::new();
        let q = RatFunc::var(Var::Q);
        let col = vec![q.clone(), RatFunc::from_int(-2)];
        let om = omega_series(&col, 2, 3, &b).unwrap();
        for (m, f) in schur_basis(2, 3, 3, &b).unwrap() {
            let lhs = translation_apply(&col, &f, &b).unwrap();
            let rhs = skew_apply(&om, &f, &b);
            assert!(lhs.same(&rhs), "mismatch at {}", m);
        }
    }

    #[test]
    fn skew_examples_and_adjointness() {
        let b = ExactBackend::new();
        let p1 = ColoredSymFunc::power_sum(1, 3, 0, 1, b.one());
        let p2 = ColoredSymFunc::power_sum(1, 3, 0, 2, b.one());
        assert!(skew_apply(&p1, &p1, &b).same(&ColoredSymFunc::constant(1, 3, RatFunc::one())));
        assert!(skew_apply(&p2, &p1.mul(&p1), &b).is_zero());
        let basis = schur_basis(2, 2, 3, &b).unwrap();
        let f = ColoredSymFunc::power_sum(2, 3, 1, 1, RatFunc::var(Var::Q)).add(&ColoredSymFunc::power_sum(
            2,
            3,
            0,
            1,
            b.one(),
        ));
        for (_, g) in schur_basis(2, 1, 3, &b).unwrap() {
            for (_, h) in &basis {
                let lhs = hall_pairing(&f.mul(&g), h, &b);
                let rhs = hall_pairing(&g, &skew_apply(&f, h, &b), &b);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let b = ExactBackend::new();
        let p1 = ColoredSymFunc::power_sum(1, 3, 0, 1, b.one());
        let q = LaurentPoly::var(Var::Q);
        let t = LaurentPoly::var(Var::T);
        let expected = LaurentPoly::one().sub(&q).mul(&LaurentPoly::one().sub(&t)).neg();
        assert_eq!(wreath_pairing(&p1, &p1, &b).unwrap(), RatFunc::from_poly(expected));
        let one = ColoredSymFunc::constant(3, 3, RatFunc::one());
        assert_eq!(wreath_pairing(&one, &one, &b).unwrap(), RatFunc::one());
    }

    #[test]
    fn pairing_is_symmetric() {
        let b = ExactBackend::new();
        for r in [1, 3] {
            let basis: Vec<_> = (0..=2).flat_map(|n| schur_basis(r, n, 2, &b).unwrap()).collect();
            for (_, f) in &basis {
                for (_, g) in &basis {
                    assert_eq!(wreath_pairing(f, g, &b).unwrap(), wreath_pairing(g, f, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn adjunction_relation() {
        // ⟨Ω[X^{(i)}]f, g⟩' = ⟨f, 𝒯[(1−qσ)(tσ⁻¹−1)X^{(−i)}]g⟩'
        let b = ExactBackend::new();
        let q = RatFunc::var(Var::Q);
        let t = RatFunc::var(Var::T);
        for r in [1u32, 3] {
            let m = PlethysmMatrix::one_minus_shift(r, &q, 1)
                .mul(&PlethysmMatrix::shift(r, -1, t.clone()).sub(&PlethysmMatrix::identity(r)));
            for i in 0..r {
                let mut ocol = vec![RatFunc::zero(); r as usize];
                ocol[i as usize] = RatFunc::one();
                let tcol = m.column((r - i) % r);
                for df in 0..=1 {
                    for (_, f) in schur_basis(r, df, 3, &b).unwrap() {
                        for dg in df..=(df + 2).min(3) {
                            for (_, g) in schur_basis(r, dg, 3, &b).unwrap() {
                                let lhs = wreath_pairing(&omega_multiply(&ocol, &f, &b).unwrap(), &g, &b).unwrap();
                                let rhs = wreath_pairing(&f, &translation_apply(&tcol, &g, &b).unwrap(), &b).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutation_lemma() {
        let cap = SeriesCap::qt(6).with_big_t(2);
        let sb = SeriesBackend::new(cap);
        let z = RatFunc::var(Var::Grade);
        let one = RatFunc::one();
        let zero = PlethysmMatrix::zero(1);
        assert!(omega_translation_commute_check(&zero, &zero, &z, &one, 0, 0, 4, 2, 2, &sb).unwrap());
        let id = PlethysmMatrix::identity(1);
        assert!(omega_translation_commute_check(&id, &id, &z, &one, 0, 0, 4, 2, 2, &sb).unwrap());
        let q = RatFunc::var(Var::Q);
        let a = PlethysmMatrix::one_minus_shift(3, &q, 1);
        let bm = PlethysmMatrix::pairing_kernel_inverse(3).unwrap();
        assert!(omega_translation_commute_check(&a, &bm, &z, &one, 0, 0, 3, 1, 2, &sb).unwrap());
    }
}
