//! Rational functions with a factored denominator.
//!
//! Denominators are kept as a multiset of normalized factors (trailing
//! exponent zero, leading coefficient one), split into cyclotomic pieces
//! whenever a factor is univariate in a monomial. Sums use the factor-wise
//! lcm, and numerators are reduced by trial division against the stored
//! factors. No multivariate gcd is ever computed, so two representations of
//! the same function may differ; [`ratfunc_equal`] is the authoritative test.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::split_factor;
use super::{Exponent, LaurentPoly, NVARS};
use crate::error::{Error, Result};

#[derive(Clone, Default)]
pub struct RatFunc {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

/// Writes a nonzero polynomial as `scalar * x^mono * prod(factors)`.
fn factorize(p: &LaurentPoly) -> (BigRational, Exponent, Vec<(LaurentPoly, u32)>) {
    let (e0, _) = p.trailing().expect("nonzero polynomial").clone();
    if p.is_monomial() {
        return (p.terms()[0].1.clone(), e0, Vec::new());
    }
    let shifted = p.shift(&e0.map(|x| -x));
    let lead = shifted.leading().unwrap().1.clone();
    let normalized = shifted.scale(&lead.recip());
    (lead, e0, split_factor(&normalized))
}

fn inv_mono(e: &Exponent, c: &BigRational) -> LaurentPoly {
    LaurentPoly::monomial(e.map(|x| -x), c.recip())
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn mono(e: Exponent) -> Self {
        Self::from_poly(LaurentPoly::mono(e))
    }

    pub fn var(v: super::Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    /// `num / den`; fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::from_poly(num).div_poly(den))
    }

    /// `num / prod(1 - m)` over the given monomials.
    pub fn over_one_minus(num: LaurentPoly, monos: &[LaurentPoly]) -> Result<Self> {
        let mut out = Self::from_poly(num);
        for m in monos {
            out = out.div_poly(&LaurentPoly::one().sub(m));
        }
        if out.den.keys().any(|k| k.is_zero()) {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(out)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    /// Expanded denominator.
    pub fn denominator(&self) -> LaurentPoly {
        self.den
            .iter()
            .fold(LaurentPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<LaurentPoly> = self.den.keys().cloned().collect();
        for f in keys {
            let mut m = self.den[&f];
            while m > 0 {
                match self.num.exact_div(&f) {
                    Some(q) => {
                        self.num = q;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, m);
            }
        }
        self
    }

    /// Divides by a nonzero polynomial.
    fn div_poly(mut self, p: &LaurentPoly) -> Self {
        let (c, e, factors) = factorize(p);
        self.num = self.num.mul(&inv_mono(&e, &c));
        for (f, m) in factors {
            *self.den.entry(f).or_insert(0) += m;
        }
        self.reduce()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let out = Self {
            num: self.num.mul(&other.num),
            den,
        };
        if self.den.is_empty() && other.den.is_empty() {
            out
        } else {
            out.reduce()
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    /// Multiplier bringing `den` up to `lcm`.
    fn cofactor(den: &BTreeMap<LaurentPoly, u32>, lcm: &BTreeMap<LaurentPoly, u32>) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for (f, m) in lcm {
            let have = den.get(f).copied().unwrap_or(0);
            if *m > have {
                out = out.mul(&f.pow(m - have));
            }
        }
        out
    }

    fn lcm_den(&self, other: &Self) -> BTreeMap<LaurentPoly, u32> {
        let mut lcm = self.den.clone();
        for (f, m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        lcm
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let out = Self {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
            return if out.den.is_empty() { out } else { out.reduce() };
        }
        let lcm = self.lcm_den(other);
        let a = self.num.mul(&Self::cofactor(&self.den, &lcm));
        let b = other.num.mul(&Self::cofactor(&other.den, &lcm));
        Self {
            num: a.add(&b),
            den: lcm,
        }
        .reduce()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        Ok(Self::from_poly(self.denominator()).div_poly(&self.num))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let mut out = self.mul(&Self::from_poly(other.denominator()));
        out = out.div_poly(&other.num);
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: if c.is_zero() { BTreeMap::new() } else { self.den.clone() },
        }
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn rebuild(num: LaurentPoly, den: impl Iterator<Item = (LaurentPoly, u32)>) -> Self {
        let mut out = Self::from_poly(num);
        for (f, m) in den {
            for _ in 0..m {
                out = out.div_poly(&f);
            }
        }
        out
    }

    /// Replaces every variable `v` by `v^k` (`k >= 1`).
    pub fn substitute_powers(&self, k: i32) -> Self {
        Self::rebuild(
            self.num.substitute_powers(k),
            self.den.iter().map(|(f, m)| (f.substitute_powers(k), *m)),
        )
    }

    /// Replaces each flagged variable `v` by `1/v`.
    pub fn invert_vars(&self, which: [bool; NVARS]) -> Self {
        Self::rebuild(
            self.num.invert_vars(which),
            self.den.iter().map(|(f, m)| (f.invert_vars(which), *m)),
        )
    }

    /// General substitution of variables by rational functions.
    pub fn substitute(&self, subs: &[Option<RatFunc>; NVARS]) -> Result<Self> {
        let poly_subst = |p: &LaurentPoly| -> Result<RatFunc> {
            let mut out = RatFunc::zero();
            for (e, c) in p.terms() {
                let mut keep = [0; NVARS];
                let mut term = RatFunc::from_rational(c.clone());
                for v in 0..NVARS {
                    if e[v] == 0 {
                        continue;
                    }
                    match &subs[v] {
                        Some(s) => term = term.mul(&s.pow(e[v])?),
                        None => keep[v] = e[v],
                    }
                }
                out = out.add(&term.mul(&RatFunc::mono(keep)));
            }
            Ok(out)
        };
        let mut out = poly_subst(&self.num)?;
        for (f, m) in &self.den {
            let d = poly_subst(f)?;
            if d.is_zero() {
                return Err(Error::DegeneratePoint(format!(
                    "denominator factor {} vanishes under substitution",
                    f
                )));
            }
            out = out.div(&d.pow(*m as i32)?)?;
        }
        Ok(out)
    }

    /// Evaluates at rational values; a vanishing denominator is a degenerate
    /// point.
    pub fn eval(&self, values: &[Option<BigRational>; NVARS]) -> Result<BigRational> {
        let mut den = BigRational::one();
        for (f, m) in &self.den {
            let v = f.eval(values)?;
            if v.is_zero() {
                return Err(Error::DegeneratePoint(format!("denominator factor {} vanishes", f)));
            }
            for _ in 0..*m {
                den *= &v;
            }
        }
        Ok(self.num.eval(values)? / den)
    }

    /// True iff the numerator and every denominator factor only involve
    /// variables outside `mask`-negative territory, i.e. the function is a
    /// Laurent polynomial in the variables of `vars` alone.
    pub fn involves(&self, v: super::Var) -> bool {
        let i = v.index();
        self.num.terms().iter().any(|(e, _)| e[i] != 0)
            || self.den.keys().any(|f| f.terms().iter().any(|(e, _)| e[i] != 0))
    }
}

/// Cross-multiplication equality test.
pub fn ratfunc_equal(a: &RatFunc, b: &RatFunc) -> bool {
    if a.den == b.den {
        return a.num == b.num;
    }
    let lcm = a.lcm_den(b);
    a.num.mul(&RatFunc::cofactor(&a.den, &lcm)) == b.num.mul(&RatFunc::cofactor(&b.den, &lcm))
}

/// `x` with every variable `v` replaced by `v^k`.
pub fn substitute_powers(x: &RatFunc, k: u32) -> RatFunc {
    x.substitute_powers(k as i32)
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RatFuncRepr {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: self.num.clone(),
            den: self.den.iter().map(|(f, m)| (f.clone(), *m)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        let mut den = LaurentPoly::one();
        for (f, m) in &r.den {
            if f.is_zero() {
                return Err(serde::de::Error::custom("zero denominator factor"));
            }
            den = den.mul(&f.pow(*m));
        }
        Ok(Self::from_poly(r.num).div_poly(&den))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        ratfunc_equal(self, other)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (i, (p, m)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", p)?;
            if *m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Var;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }
    fn t() -> LaurentPoly {
        LaurentPoly::var(Var::T)
    }
    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn equality_examples() {
        let a = RatFunc::new(q(), &one().sub(&q())).unwrap();
        assert!(ratfunc_equal(&a, &a.clone()));
        let b = RatFunc::new(one().sub(&q().pow(2)), &one().sub(&q())).unwrap();
        assert!(ratfunc_equal(&b, &RatFunc::from_poly(one().add(&q()))));
        assert!(b.is_polynomial());
        assert!(!ratfunc_equal(&RatFunc::from_poly(q()), &RatFunc::from_poly(t())));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(
            RatFunc::new(q(), &LaurentPoly::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn substitute_powers_examples() {
        let x = RatFunc::new(q(), &one().sub(&t())).unwrap();
        let expected = RatFunc::new(q().pow(2), &one().sub(&t().pow(2))).unwrap();
        assert_eq!(substitute_powers(&x, 2), expected);
        assert_eq!(substitute_powers(&RatFunc::one(), 5), RatFunc::one());
        let uqt = RatFunc::mono([1, 1, 1, 0, 0]);
        assert_eq!(substitute_powers(&uqt, 3), RatFunc::mono([3, 3, 3, 0, 0]));
    }

    #[test]
    fn telescoping_sum_cancels() {
        let a = RatFunc::new(one(), &one().sub(&q())).unwrap();
        let b = RatFunc::new(q(), &one().sub(&q())).unwrap();
        let s = a.sub(&b);
        assert!(s.is_polynomial());
        assert_eq!(s, RatFunc::one());
        // 1/(1-q) - 1/(1-q^2) = q/(1-q^2)
        let c = RatFunc::new(one(), &one().sub(&q().pow(2))).unwrap();
        let d = RatFunc::new(q(), &one().sub(&q().pow(2))).unwrap();
        assert_eq!(a.sub(&c), d);
    }

    #[test]
    fn inverse_and_division() {
        let x = RatFunc::new(one().sub(&q().mul(&t())), &one().sub(&q())).unwrap();
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), RatFunc::one());
        assert_eq!(x.div(&x).unwrap(), RatFunc::one());
    }

    #[test]
    fn evaluation_detects_poles() {
        let x = RatFunc::new(one(), &one().sub(&q().mul(&t()))).unwrap();
        let two = BigRational::from_integer(2.into());
        let half = two.recip();
        let vals = [Some(two.clone()), Some(half), None, None, None];
        assert!(matches!(x.eval(&vals), Err(Error::DegeneratePoint(_))));
        let vals = [Some(two.clone()), Some(two), None, None, None];
        assert_eq!(
            x.eval(&vals).unwrap(),
            BigRational::from_integer((-1).into()) / BigRational::from_integer(3.into())
        );
    }
}
