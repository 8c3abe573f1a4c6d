//! Cyclotomic splitting of factors that are univariate in a single monomial.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Exponent, LaurentPoly, NVARS, ZERO_EXP};

type UniPoly = Vec<BigRational>;

fn cache() -> &'static RwLock<HashMap<u32, UniPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, UniPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn trim(p: &mut UniPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Univariate exact division; `None` if not exact.
fn uni_div(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
    if b.is_empty() {
        return None;
    }
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut rem = a.clone();
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] -= &c * bc;
        }
        quot[i] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// The `n`-th cyclotomic polynomial, coefficients from low to high degree.
pub(crate) fn cyclotomic(n: u32) -> UniPoly {
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for the proper divisors d of n.
    let mut p = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = uni_div(&p, &cyclotomic(d)).expect("cyclotomic division is exact");
        }
    }
    cache().write().unwrap().insert(n, p.clone());
    p
}

fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn gcd(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// If every exponent of `f` is a nonnegative multiple of one primitive vector
/// `w`, returns `w` and the univariate coefficient list of `f` in `x^w`.
fn as_univariate(f: &LaurentPoly) -> Option<(Exponent, UniPoly)> {
    let lead = f.leading()?.0;
    if lead == ZERO_EXP {
        return None;
    }
    let g = lead.iter().fold(0, |acc, &x| gcd(acc, x));
    let w = lead.map(|x| x / g);
    let mut coeffs = vec![BigRational::zero(); g as usize + 1];
    for (e, c) in f.terms() {
        let k = (0..NVARS).find(|&v| w[v] != 0).map(|v| e[v] / w[v])?;
        if k < 0 || (0..NVARS).any(|v| e[v] != k * w[v]) {
            return None;
        }
        coeffs[k as usize] = c.clone();
    }
    Some((w, coeffs))
}

fn from_univariate(w: &Exponent, p: &UniPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (w.map(|x| x * k as i32), c.clone())),
    )
}

/// Splits a normalized factor (trailing exponent zero, leading coefficient
/// one) into cyclotomic pieces when it is univariate in a monomial; anything
/// left over is returned as a single factor.
pub(crate) fn split_factor(f: &LaurentPoly) -> Vec<(LaurentPoly, u32)> {
    let Some((w, mut p)) = as_univariate(f) else {
        return vec![(f.clone(), 1)];
    };
    let deg = p.len() as u32 - 1;
    // Integer coefficients are required for a product of cyclotomics.
    if p.iter().any(|c| !c.is_integer()) {
        return vec![(f.clone(), 1)];
    }
    let bound = 6 * deg + 6;
    let mut out = Vec::new();
    let mut m = 1;
    while m <= bound && p.len() > 1 {
        if (euler_phi(m) as usize) < p.len() {
            let phi = cyclotomic(m);
            let mut mult = 0;
            while let Some(q) = uni_div(&p, &phi) {
                p = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((from_univariate(&w, &phi), mult));
            }
        }
        m += 1;
    }
    if p.len() > 1 {
        let lead = p.last().unwrap().clone();
        let rest: UniPoly = p.iter().map(|c| c / &lead).collect();
        out.push((from_univariate(&w, &rest), 1));
    } else {
        // Only a constant remains; it must be one since both the input and
        // the cyclotomic factors are monic.
        debug_assert!(p.first().map(|c| c.to_i64() == Some(1)).unwrap_or(true));
    }
    out
}

/// Recognizes a normalized factor `Φ_n(x^w)` and returns `(w, n)`.
pub(crate) fn cyclotomic_piece(f: &LaurentPoly) -> Option<(Exponent, u32)> {
    let (w, p) = as_univariate(f)?;
    let deg = p.len() as u32 - 1;
    (1..=2 * deg * deg + 2)
        .filter(|&n| euler_phi(n) == deg)
        .find(|&n| cyclotomic(n) == p)
        .map(|n| (w, n))
}
