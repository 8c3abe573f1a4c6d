//! Sparse Laurent polynomials over the rationals in the fixed variables
//! `q, t, u, T, p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Exponent, Var, NVARS};
use crate::error::{Error, Result};

/// A finite sum of monomials `c * q^a t^b u^c T^d p^e` with nonzero rational
/// coefficients. Terms are kept sorted by exponent vector (lexicographic in
/// `q, t, u, T, p`), which makes the representation canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exponent, BigRational)>,
}

pub const ZERO_EXP: Exponent = [0; NVARS];

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

fn sub_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o -= x;
    }
    out
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(ZERO_EXP, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// Monomial with coefficient one.
    pub fn mono(exp: Exponent) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::mono(v.unit())
    }

    /// Shorthand for `q^a t^b` with coefficient one.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::mono([a, b, 0, 0, 0])
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(it: I) -> Self {
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in it {
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_map(acc: HashMap<Exponent, BigRational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Self { terms }
    }

    pub fn terms(&self) -> &[(Exponent, BigRational)] {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(e, c)] if *e == ZERO_EXP => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, exp: &Exponent) -> BigRational {
        match self.terms.binary_search_by(|(e, _)| e.cmp(exp)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Exponent, BigRational)> {
        self.terms.last()
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<&(Exponent, BigRational)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_term(e, c);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_term(e, c);
        }
        let mut acc: HashMap<Exponent, BigRational> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = add_exp(ea, eb);
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Multiplies by the single term `c * x^e`.
    pub fn mul_term(&self, e: &Exponent, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(x, d)| (add_exp(x, e), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_term(&ZERO_EXP, c)
    }

    pub fn shift(&self, e: &Exponent) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (add_exp(x, e), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Replaces every variable `v` by `v^k`.
    pub fn substitute_powers(&self, k: i32) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (e.map(|x| x * k), c.clone())).collect();
        if k < 0 {
            terms.sort_unstable_by_key(|a| a.0);
        }
        Self { terms }
    }

    /// Replaces each variable `v` whose flag is set by `1/v`.
    pub fn invert_vars(&self, which: [bool; NVARS]) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = *e;
                for (x, f) in e.iter_mut().zip(which) {
                    if f {
                        *x = -*x;
                    }
                }
                (e, c.clone())
            })
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        Self { terms }
    }

    /// Substitutes a Laurent polynomial for each variable that has one; other
    /// variables are left untouched.
    pub fn substitute(&self, subs: &[Option<LaurentPoly>; NVARS]) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut keep = ZERO_EXP;
            let mut term = Self::constant(c.clone());
            for v in 0..NVARS {
                match (&subs[v], e[v]) {
                    (_, 0) => {}
                    (Some(s), k) if k > 0 => term = term.mul(&s.pow(k as u32)),
                    (Some(s), k) => {
                        if !s.is_monomial() {
                            return Err(Error::InvalidInput(
                                "negative power of a non-monomial substitution".into(),
                            ));
                        }
                        let (se, sc) = &s.terms[0];
                        let inv = Self::monomial(se.map(|x| -x), sc.recip());
                        term = term.mul(&inv.pow((-k) as u32));
                    }
                    (None, k) => keep[v] = k,
                }
            }
            out = out.add(&term.shift(&keep));
        }
        Ok(out)
    }

    /// Per-variable minimum and maximum exponents (zero polynomial gives zeros).
    pub fn degree_box(&self) -> (Exponent, Exponent) {
        let mut lo = ZERO_EXP;
        let mut hi = ZERO_EXP;
        for (k, (e, _)) in self.terms.iter().enumerate() {
            for v in 0..NVARS {
                if k == 0 || e[v] < lo[v] {
                    lo[v] = e[v];
                }
                if k == 0 || e[v] > hi[v] {
                    hi[v] = e[v];
                }
            }
        }
        (lo, hi)
    }

    /// Exact division. Returns `None` when `other` does not divide `self` in
    /// the Laurent polynomial ring.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return Some(self.mul_term(&e.map(|x| -x), &c.recip()));
        }
        let (alo, ahi) = self.degree_box();
        let (blo, bhi) = other.degree_box();
        let qlo = sub_exp(&alo, &blo);
        let qhi = sub_exp(&ahi, &bhi);
        if (0..NVARS).any(|v| qlo[v] > qhi[v]) {
            return None;
        }
        if self.len() < other.len() && self.len() == 1 {
            return None;
        }
        let (be, bc) = other.leading().unwrap().clone();
        let mut rem: BTreeMap<Exponent, BigRational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let qe = sub_exp(&re, &be);
            if (0..NVARS).any(|v| qe[v] < qlo[v] || qe[v] > qhi[v]) {
                return None;
            }
            let qc = &rc / &bc;
            for (oe, oc) in &other.terms {
                let e = add_exp(oe, &qe);
                let delta = oc * &qc;
                let remove = match rem.get_mut(&e) {
                    Some(v) => {
                        *v -= &delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(e, -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&e);
                }
            }
            quot.push((qe, qc));
        }
        quot.sort_unstable_by_key(|a| a.0);
        Some(Self { terms: quot })
    }

    /// Evaluates with a rational value for each variable that occurs.
    pub fn eval(&self, values: &[Option<BigRational>; NVARS]) -> Result<BigRational> {
        let mut pows: [HashMap<i32, BigRational>; NVARS] = Default::default();
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in 0..NVARS {
                if e[v] == 0 {
                    continue;
                }
                let x = values[v]
                    .as_ref()
                    .ok_or_else(|| Error::InvalidInput(format!("variable {} is unassigned", Var::ALL[v])))?;
                if x.is_zero() && e[v] < 0 {
                    return Err(Error::DegeneratePoint(format!(
                        "negative power of {} at zero",
                        Var::ALL[v]
                    )));
                }
                let p = pows[v].entry(e[v]).or_insert_with(|| x.pow(e[v]));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter<F: Fn(&Exponent) -> bool>(&self, keep: F) -> Self {
        Self {
            terms: self.terms.iter().filter(|(e, _)| keep(e)).cloned().collect(),
        }
    }

    /// Multiplies by a common denominator so that all coefficients are
    /// integers with gcd one and a positive leading coefficient; returns the
    /// scalar that was divided out (`self = scalar * result`).
    pub fn primitive_part(&self) -> (BigRational, Self) {
        if self.is_zero() {
            return (BigRational::one(), Self::zero());
        }
        use num_integer::Integer;
        let mut den = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut content = BigRational::new(num_gcd, den);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    /// Total degree in the variables flagged by `mask`.
    pub fn max_degree_in(&self, mask: [bool; NVARS]) -> i32 {
        self.terms
            .iter()
            .map(|(e, _)| (0..NVARS).filter(|&v| mask[v]).map(|v| e[v]).sum())
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, e: &Exponent) -> fmt::Result {
    let mut first = true;
    for (v, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{}", Var::ALL[v])?;
        } else {
            write!(f, "{}^{}", Var::ALL[v], k)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in ascending lexicographic exponent order,
    /// joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if *e == ZERO_EXP {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                fmt_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

/// Serialized as a list of `[exponents, "p/q"]` terms.
impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(Exponent, String)> = serde::Deserialize::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c: BigRational = c.parse().map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}
