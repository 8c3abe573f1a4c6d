//! Truncated multivariate power series in `q, t, T, p`, Laurent in `u`.
//!
//! A term survives iff its `q, t, T, p` exponents are nonnegative and it
//! respects every cap that is set: total `q,t`-degree, `T`-degree and
//! `p`-degree. An unset cap means the variable is unbounded.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Exponent, LaurentPoly, RatFunc, Var, NVARS, ZERO_EXP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesCap {
    /// Bound on the total degree in `q` and `t`.
    pub qt: Option<u32>,
    /// Bound on the degree in `T`.
    pub big_t: Option<u32>,
    pub p: Option<u32>,
}

const Q: usize = 0;
const T_: usize = 1;
const BIG_T: usize = 3;
const P: usize = 4;

impl SeriesCap {
    pub fn qt(n: u32) -> Self {
        Self {
            qt: Some(n),
            ..Self::default()
        }
    }

    pub fn with_big_t(mut self, n: u32) -> Self {
        self.big_t = Some(n);
        self
    }

    pub fn with_p(mut self, n: u32) -> Self {
        self.p = Some(n);
        self
    }

    fn expandable(&self, e: &Exponent) -> bool {
        e[Q] >= 0 && e[T_] >= 0 && e[BIG_T] >= 0 && e[P] >= 0
    }

    pub fn admits(&self, e: &Exponent) -> bool {
        self.expandable(e)
            && self.qt.is_none_or(|c| e[Q] + e[T_] <= c as i32)
            && self.big_t.is_none_or(|c| e[BIG_T] <= c as i32)
            && self.p.is_none_or(|c| e[P] <= c as i32)
    }

    /// True iff `e` has positive degree in some capped variable, so that the
    /// powers of `e` eventually leave the cap.
    fn nilpotent(&self, e: &Exponent) -> bool {
        (self.qt.is_some() && e[Q] + e[T_] > 0)
            || (self.big_t.is_some() && e[BIG_T] > 0)
            || (self.p.is_some() && e[P] > 0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    cap: SeriesCap,
    poly: LaurentPoly,
}

impl TruncSeries {
    pub fn zero(cap: SeriesCap) -> Self {
        Self {
            cap,
            poly: LaurentPoly::zero(),
        }
    }

    pub fn one(cap: SeriesCap) -> Self {
        Self::constant(cap, BigRational::one())
    }

    pub fn constant(cap: SeriesCap, c: BigRational) -> Self {
        Self {
            cap,
            poly: LaurentPoly::constant(c),
        }
    }

    /// Truncates a polynomial; fails on negative exponents in `q, t, T, p`.
    pub fn from_poly(cap: SeriesCap, p: &LaurentPoly) -> Result<Self> {
        if let Some((e, _)) = p.terms().iter().find(|(e, _)| !cap.expandable(e)) {
            return Err(Error::NotExpandable(format!("negative exponent in {:?} of {}", e, p)));
        }
        Ok(Self {
            cap,
            poly: p.filter(|e| cap.admits(e)),
        })
    }

    /// Expands a rational function; every denominator factor must be a unit
    /// (nonzero constant term) whose other terms are nilpotent under the cap.
    pub fn from_ratfunc(cap: SeriesCap, x: &RatFunc) -> Result<Self> {
        let mut out = Self::from_poly(cap, x.numerator())?;
        for (f, m) in x.denominator_factors() {
            let inv = Self::from_poly(cap, f)?.inv()?;
            for _ in 0..m {
                out = out.mul(&inv);
            }
        }
        Ok(out)
    }

    pub fn cap(&self) -> SeriesCap {
        self.cap
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn coeff(&self, e: &Exponent) -> BigRational {
        self.poly.coeff(e)
    }

    fn check_cap(&self, other: &Self) {
        assert_eq!(
            self.cap, other.cap,
            "series with different truncations cannot be combined"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_cap(other);
        Self {
            cap: self.cap,
            poly: self.poly.add(&other.poly),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_cap(other);
        Self {
            cap: self.cap,
            poly: self.poly.sub(&other.poly),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            cap: self.cap,
            poly: self.poly.neg(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            cap: self.cap,
            poly: self.poly.scale(c),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_cap(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.cap);
        }
        let mut acc: HashMap<Exponent, BigRational> = HashMap::new();
        for (ea, ca) in self.poly.terms() {
            for (eb, cb) in other.poly.terms() {
                let mut e = *ea;
                for v in 0..NVARS {
                    e[v] += eb[v];
                }
                if !self.cap.admits(&e) {
                    continue;
                }
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self {
            cap: self.cap,
            poly: LaurentPoly::from_terms(acc),
        }
    }

    /// Multiplies by the monomial `c * x^e`, dropping what leaves the cap.
    pub fn mul_term(&self, e: &Exponent, c: &BigRational) -> Self {
        let cap = self.cap;
        Self {
            cap,
            poly: self.poly.mul_term(e, c).filter(|x| cap.admits(x)),
        }
    }

    /// Multiplies by `1 - c x^e`.
    pub fn mul_one_minus(&self, e: &Exponent, c: &BigRational) -> Self {
        self.sub(&self.mul_term(e, c))
    }

    /// Divides by `1 - c x^e` for a nilpotent monomial `x^e`.
    pub fn div_one_minus(&self, e: &Exponent, c: &BigRational) -> Result<Self> {
        if !self.cap.nilpotent(e) || !self.cap.expandable(e) {
            return Err(Error::NotExpandable(format!(
                "1 - c*x^{:?} has no inverse under the cap",
                e
            )));
        }
        let mut out = self.clone();
        let mut cur = self.clone();
        loop {
            cur = cur.mul_term(e, c);
            if cur.is_zero() {
                return Ok(out);
            }
            out = out.add(&cur);
        }
    }

    /// Multiplicative inverse of a series whose degree-zero part (in the
    /// capped variables) is a nonzero rational constant.
    pub fn inv(&self) -> Result<Self> {
        let cap = self.cap;
        let c0 = self.poly.coeff(&ZERO_EXP);
        if c0.is_zero() {
            return Err(Error::NotExpandable(format!(
                "series {} has no invertible constant term",
                self
            )));
        }
        let g = self.poly.filter(|e| *e != ZERO_EXP).scale(&c0.recip());
        if let Some((e, _)) = g.terms().iter().find(|(e, _)| !cap.nilpotent(e)) {
            return Err(Error::NotExpandable(format!(
                "term with exponent {:?} is not small under the cap",
                e
            )));
        }
        if g.len() == 1 {
            let (e, c) = &g.terms()[0];
            return Self::constant(cap, c0.recip()).div_one_minus(e, &-c);
        }
        let g = Self { cap, poly: g };
        // 1/(1+g) = sum (-g)^k, which terminates since g is nilpotent.
        let neg_g = g.neg();
        let mut out = Self::one(cap);
        let mut power = Self::one(cap);
        loop {
            power = power.mul(&neg_g);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out.scale(&c0.recip()))
    }

    /// The coefficient of `v^k` as a series in the remaining variables.
    pub fn coefficient_in(&self, v: Var, k: i32) -> Self {
        let i = v.index();
        let terms = self.poly.terms().iter().filter(|(e, _)| e[i] == k).map(|(e, c)| {
            let mut e = *e;
            e[i] = 0;
            (e, c.clone())
        });
        Self {
            cap: self.cap,
            poly: LaurentPoly::from_terms(terms),
        }
    }

    /// Narrows to a smaller cap.
    pub fn truncate(&self, cap: SeriesCap) -> Self {
        Self {
            cap,
            poly: self.poly.filter(|e| cap.admits(e)),
        }
    }
}

/// Product of series sharing one cap; the result does not depend on the
/// order of the factors.
pub fn series_truncate_product(factors: &[TruncSeries], cap: SeriesCap) -> Result<TruncSeries> {
    let mut out = TruncSeries::one(cap);
    for f in factors {
        if f.cap != cap {
            return Err(Error::InvalidInput(format!(
                "factor truncated at {:?}, expected {:?}",
                f.cap, cap
            )));
        }
        out = out.mul(f);
    }
    Ok(out)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({} ; {:?})", self.poly, self.cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(cap: SeriesCap, v: Var) -> TruncSeries {
        TruncSeries::from_poly(cap, &LaurentPoly::var(v)).unwrap()
    }

    #[test]
    fn product_examples() {
        let cap = SeriesCap::qt(2);
        let one = TruncSeries::one(cap);
        let a = one.add(&var(cap, Var::Q));
        let b = one.add(&var(cap, Var::T));
        let prod = series_truncate_product(&[a, b], cap).unwrap();
        let expected = LaurentPoly::from_terms(
            [(0, 0), (1, 0), (0, 1), (1, 1)]
                .iter()
                .map(|&(a, b)| ([a, b, 0, 0, 0], BigRational::one())),
        );
        assert_eq!(prod.poly(), &expected);

        let cap = SeriesCap::qt(5);
        let one_minus_q = TruncSeries::one(cap).sub(&var(cap, Var::Q));
        let inv = one_minus_q.inv().unwrap();
        assert!(series_truncate_product(&[inv, one_minus_q], cap)
            .unwrap()
            .poly()
            .is_one());

        let cap = SeriesCap::default().with_big_t(2);
        let geo = TruncSeries::one(cap)
            .div_one_minus(&[1, 0, 0, 1, 0], &BigRational::one())
            .unwrap();
        assert_eq!(geo.to_string(), "1 + q*T + q^2*T^2");
    }

    #[test]
    fn mismatched_caps_are_rejected() {
        let a = TruncSeries::one(SeriesCap::qt(2));
        let err = series_truncate_product(&[a], SeriesCap::qt(3)).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn unbounded_inverse_is_refused() {
        let cap = SeriesCap::default().with_big_t(3);
        let one_minus_q = TruncSeries::one(cap).sub(&var(cap, Var::Q));
        assert!(matches!(one_minus_q.inv(), Err(Error::NotExpandable(_))));
    }

    #[test]
    fn laurent_in_u() {
        let cap = SeriesCap::qt(3);
        let x = RatFunc::new(
            LaurentPoly::mono([0, 1, -1, 0, 0]),
            &LaurentPoly::one().sub(&LaurentPoly::var(Var::Q)),
        )
        .unwrap();
        let s = TruncSeries::from_ratfunc(cap, &x).unwrap();
        assert_eq!(s.to_string(), "t*u^-1 + q*t*u^-1 + q^2*t*u^-1");
    }
}
