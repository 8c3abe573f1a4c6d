//! `∇` eigenvalues, delta series, the vertex operators `V`, `V*` and the Ext
//! operator `W(u)`.

use std::collections::BTreeMap;

use crate::charsum::{color_part_rational, d_sum, nekrasov_factor};
use crate::coeff::{Backend, LaurentPoly, RatFunc, Var, NVARS};
use crate::error::{Error, Result};
use crate::partition::{core_quotient, Partition};
use crate::symfunc::{omega_multiply, omega_series, translation_apply, wreath_pairing, ColoredSymFunc, PlethysmMatrix};

use super::Wreath;

/// `∏ (−q^a t^b)` over the color-0 boxes of `λ ∖ α`.
pub fn nabla_eigenvalue(lambda: &Partition, core: &Partition, r: u32) -> Result<RatFunc> {
    if !lambda.contains_partition(core) {
        return Err(Error::InvalidInput(format!("{} does not contain {}", lambda, core)));
    }
    let mut e = LaurentPoly::one();
    for c in lambda.skew_cells(core) {
        if c.color(r) == 0 {
            e = e.mul(&LaurentPoly::qt(c.a as i32, c.b as i32).neg());
        }
    }
    Ok(RatFunc::from_poly(e))
}

fn qt() -> RatFunc {
    RatFunc::from_poly(LaurentPoly::qt(1, 1))
}

fn color0(r: u32, c: RatFunc) -> Vec<RatFunc> {
    let mut v = vec![RatFunc::zero(); r as usize];
    v[0] = c;
    v
}

/// Column of `c · X^{(0)} / ((1−qσ⁻¹)(tσ−1))`.
fn kernel_column(r: u32, c: &RatFunc) -> Result<Vec<RatFunc>> {
    let k = PlethysmMatrix::pairing_kernel_inverse(r)?;
    Ok(k.column(0).iter().map(|x| x.mul(c)).collect())
}

/// `𝔼_λ` (or `𝔼*_λ` when `starred`), truncated at `cap`.
pub fn delta_series<B: Backend>(
    lambda: &Partition,
    r: u32,
    cap: u32,
    starred: bool,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    let d = d_sum(lambda, r)?;
    let qt_mono = LaurentPoly::qt(1, 1);
    // D/((1−q)(t−1)) = −D/((1−q)(1−t)); −D̄/((1−q⁻¹)(t⁻¹−1)) = qt D̄/((1−q)(1−t))
    let num = if starred {
        d.bar().poly().mul(&qt_mono)
    } else {
        d.poly().neg()
    };
    let arg = RatFunc::over_one_minus(num, &[LaurentPoly::var(Var::Q), LaurentPoly::var(Var::T)])?;
    let col = (0..r)
        .map(|i| color_part_rational(&arg, r, i))
        .collect::<Result<Vec<_>>>()?;
    omega_series(&col, r, cap, backend)
}

/// `V_α f = ∇_α Ω[X^{(0)}/((1−qσ⁻¹)(tσ−1))] 𝒯[X^{(0)}] f`, or
/// `V*_α f = (∇_α†)⁻¹ Ω[−qt X^{(0)}/((1−qσ⁻¹)(tσ−1))] 𝒯[−X^{(0)}] f`.
pub fn v_operator<B: Backend>(
    w: &Wreath<B>,
    f: &ColoredSymFunc<B::Elem>,
    starred: bool,
    cap: u32,
) -> Result<ColoredSymFunc<B::Elem>> {
    let r = w.r();
    let b = w.backend();
    let f = f.with_cap(cap);
    if starred {
        let g = translation_apply(&color0(r, RatFunc::from_int(-1)), &f, b)?;
        let g = omega_multiply(&kernel_column(r, &qt().neg())?, &g, b)?;
        w.nabla(&g, true, true)
    } else {
        let g = translation_apply(&color0(r, RatFunc::one()), &f, b)?;
        let g = omega_multiply(&kernel_column(r, &RatFunc::one())?, &g, b)?;
        w.nabla(&g, false, false)
    }
}

/// `W(u) f = Ω[(1−u⁻¹)X^{(0)}/((1−qσ⁻¹)(tσ−1))] 𝒯[(1−uqt)X^{(0)}] f`,
/// truncated at the cap of `f`. `u` may be the symbol or any specialization.
pub fn ext_operator<B: Backend>(
    u: &RatFunc,
    f: &ColoredSymFunc<B::Elem>,
    backend: &B,
) -> Result<ColoredSymFunc<B::Elem>> {
    let r = f.r();
    let g = translation_apply(&color0(r, RatFunc::one().sub(&u.mul(&qt()))), f, backend)?;
    let c = RatFunc::one().sub(&u.inv()?);
    if c.is_zero() {
        return Ok(g);
    }
    omega_multiply(&kernel_column(r, &c)?, &g, backend)
}

/// `⟨H_μ†, W(u) H_λ⟩'`.
pub fn ext_pairing<B: Backend>(w: &Wreath<B>, lambda: &Partition, mu: &Partition, u: &RatFunc) -> Result<B::Elem> {
    let n = core_quotient(lambda, w.r())?.quotient.size();
    let m = core_quotient(mu, w.r())?.quotient.size();
    let h = w.h(lambda, n.max(m))?;
    let g = ext_operator(u, &h, w.backend())?.component(m);
    let d = w.dagger(mu, m)?;
    wreath_pairing(&d, &g, w.backend())
}

fn at_u(p: &LaurentPoly, u: &RatFunc) -> Result<RatFunc> {
    let mut subs: [Option<RatFunc>; NVARS] = Default::default();
    subs[Var::U.index()] = Some(u.clone());
    RatFunc::from_poly(p.clone()).substitute(&subs)
}

/// `N_{λ,μ}` at `u`.
pub fn nekrasov_at(lambda: &Partition, mu: &Partition, r: u32, u: &RatFunc) -> Result<RatFunc> {
    at_u(&nekrasov_factor(lambda, mu, r)?.expand(), u)
}

/// `u^{−|quot μ|} N_{λ,μ}(u)`.
pub fn expected_ext(lambda: &Partition, mu: &Partition, r: u32, u: &RatFunc) -> Result<RatFunc> {
    let m = core_quotient(mu, r)?.quotient.size();
    Ok(u.pow(-(m as i32))?.mul(&nekrasov_at(lambda, mu, r, u)?))
}

/// `N_{λ,λ}(1)`.
pub fn norm_expected(lambda: &Partition, r: u32) -> Result<RatFunc> {
    nekrasov_at(lambda, lambda, r, &RatFunc::one())
}

/// `W(u) H_λ` expanded in the `H` basis, degree `m` part only.
pub fn ext_expansion<B: Backend>(
    w: &Wreath<B>,
    lambda: &Partition,
    m: u32,
    u: &RatFunc,
) -> Result<BTreeMap<Partition, B::Elem>> {
    let n = core_quotient(lambda, w.r())?.quotient.size();
    let h = w.h(lambda, n.max(m))?;
    let g = ext_operator(u, &h, w.backend())?.component(m);
    w.expand(&g, false)
}
