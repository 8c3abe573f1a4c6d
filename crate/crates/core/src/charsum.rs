//! Finite character sums in `q, t` with their color grading, and Nekrasov
//! factors computed two ways.
//!
//! The monomial `q^a t^b` has color `(b - a) mod r`; `u` has color 0.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::coeff::{cyclotomic_piece, exp_qtu, Backend, Exponent, LaurentPoly, RatFunc, QT_MASK};
use crate::error::{Error, Result};
use crate::partition::{arm, leg, mixed_hook, Partition};

pub fn color_of(e: &Exponent, r: u32) -> u32 {
    (e[1] as i64 - e[0] as i64).rem_euclid(r as i64) as u32
}

/// Monomials of color `i` in `p`.
pub fn color_part_poly(p: &LaurentPoly, r: u32, i: u32) -> LaurentPoly {
    p.filter(|e| color_of(e, r) == i % r)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterSum {
    poly: LaurentPoly,
    r: u32,
}

impl CharacterSum {
    pub fn new(poly: LaurentPoly, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be at least 1".into()));
        }
        Ok(Self { poly, r })
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `S^{(i)}`; `i` is read modulo `r`.
    pub fn color_part(&self, i: i64) -> CharacterSum {
        let i = i.rem_euclid(self.r as i64) as u32;
        Self {
            poly: color_part_poly(&self.poly, self.r, i),
            r: self.r,
        }
    }

    pub fn parts(&self) -> Vec<CharacterSum> {
        (0..self.r as i64).map(|i| self.color_part(i)).collect()
    }

    /// `(q, t) ↦ (q⁻¹, t⁻¹)`.
    pub fn bar(&self) -> CharacterSum {
        Self {
            poly: self.poly.invert_vars(QT_MASK),
            r: self.r,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            poly: self.poly.add(&other.poly),
            r: self.r,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            poly: self.poly.mul(&other.poly),
            r: self.r,
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            poly: self.poly.mul(p),
            r: self.r,
        }
    }
}

impl fmt::Display for CharacterSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn chi(a: i64, b: i64) -> Exponent {
    exp_qtu(a as i32, b as i32, 0)
}

fn one_minus_q_one_minus_t() -> LaurentPoly {
    LaurentPoly::one()
        .sub(&LaurentPoly::qt(1, 0))
        .mul(&LaurentPoly::one().sub(&LaurentPoly::qt(0, 1)))
}

pub fn b_sum(lambda: &Partition, r: u32) -> Result<CharacterSum> {
    let poly = LaurentPoly::from_terms(
        lambda
            .cells()
            .into_iter()
            .map(|c| (chi(c.a as i64, c.b as i64), BigRational::one())),
    );
    CharacterSum::new(poly, r)
}

/// `D_λ = (1-q)(1-t) B_λ - 1`.
pub fn d_sum(lambda: &Partition, r: u32) -> Result<CharacterSum> {
    let b = b_sum(lambda, r)?;
    CharacterSum::new(b.poly.mul(&one_minus_q_one_minus_t()).sub(&LaurentPoly::one()), r)
}

/// `E_{λ,μ}` summed box by box.
pub fn mixed_e_sum(lambda: &Partition, mu: &Partition, r: u32) -> Result<CharacterSum> {
    let mut terms = Vec::new();
    for c in lambda.cells() {
        terms.push((chi(-arm(mu, c), leg(lambda, c) + 1), BigRational::one()));
    }
    for c in mu.cells() {
        terms.push((chi(arm(lambda, c) + 1, -leg(mu, c)), BigRational::one()));
    }
    CharacterSum::new(LaurentPoly::from_terms(terms), r)
}

/// `E_{λ,μ} = -qt (D_λ D̄_μ - 1) / ((1-q)(1-t))`, by exact division.
pub fn mixed_e_sum_via_d(lambda: &Partition, mu: &Partition, r: u32) -> Result<CharacterSum> {
    let d = d_sum(lambda, r)?;
    let dbar = d_sum(mu, r)?.bar();
    let num = d
        .poly
        .mul(&dbar.poly)
        .sub(&LaurentPoly::one())
        .mul(&LaurentPoly::qt(1, 1))
        .neg();
    let e = num.exact_div(&one_minus_q_one_minus_t()).ok_or_else(|| {
        Error::Consistency(format!(
            "D-route numerator for ({}, {}) is not divisible by (1-q)(1-t)",
            lambda, mu
        ))
    })?;
    CharacterSum::new(e, r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NekrasovFactor {
    pub uexp: i32,
    pub qexp: i32,
    pub texp: i32,
}

impl NekrasovFactor {
    pub fn monomial(&self) -> Exponent {
        exp_qtu(self.qexp, self.texp, self.uexp)
    }

    /// `1 - u^{uexp} q^{qexp} t^{texp}`.
    pub fn poly(&self) -> LaurentPoly {
        LaurentPoly::one().sub(&LaurentPoly::mono(self.monomial()))
    }
}

/// `u^{u_offset} ∏ (1 - u^{uexp} q^{qexp} t^{texp})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NekrasovFactorization {
    pub u_offset: i32,
    pub factors: Vec<NekrasovFactor>,
}

impl NekrasovFactorization {
    pub fn expand(&self) -> LaurentPoly {
        self.factors
            .iter()
            .fold(LaurentPoly::mono(exp_qtu(0, 0, self.u_offset)), |acc, f| {
                acc.mul(&f.poly())
            })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Value at `u = c` as a Laurent polynomial in `q, t`.
    pub fn at_u(&self, c: &BigRational) -> Result<LaurentPoly> {
        let mut vals: [Option<LaurentPoly>; 5] = Default::default();
        vals[2] = Some(LaurentPoly::constant(c.clone()));
        self.expand().substitute(&vals)
    }
}

pub fn nekrasov_factor(lambda: &Partition, mu: &Partition, r: u32) -> Result<NekrasovFactorization> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let r = r as i64;
    let mut factors = Vec::new();
    for c in lambda.cells() {
        if mixed_hook(mu, lambda, c).rem_euclid(r) == 0 {
            factors.push(NekrasovFactor {
                uexp: 1,
                qexp: -arm(mu, c) as i32,
                texp: (leg(lambda, c) + 1) as i32,
            });
        }
    }
    for c in mu.cells() {
        if mixed_hook(lambda, mu, c).rem_euclid(r) == 0 {
            factors.push(NekrasovFactor {
                uexp: 1,
                qexp: (arm(lambda, c) + 1) as i32,
                texp: -leg(mu, c) as i32,
            });
        }
    }
    Ok(NekrasovFactorization { u_offset: 0, factors })
}

/// `Ω[S] = ∏ (1 - m)^{-c_m}` for a finite sum with integer coefficients, as
/// a rational function.
pub fn omega_finite(s: &LaurentPoly) -> Result<RatFunc> {
    let mut out = RatFunc::one();
    for (e, c) in s.terms() {
        if *e == crate::coeff::ZERO_EXP {
            return Err(Error::NotExpandable("Ω of a constant term".into()));
        }
        let n = integer_coefficient(c)?;
        let f = RatFunc::from_poly(LaurentPoly::one().sub(&LaurentPoly::mono(*e)));
        out = out.mul(&f.pow(-n)?);
    }
    Ok(out)
}

fn integer_coefficient(c: &BigRational) -> Result<i32> {
    if !c.is_integer() {
        return Err(Error::NotExpandable(format!("non-integral multiplicity {}", c)));
    }
    let n: &BigInt = c.numer();
    n.to_i32()
        .filter(|n| n.abs() < 1 << 16)
        .ok_or_else(|| Error::NotExpandable(format!("multiplicity {} too large", c)))
}

/// The Ω-argument `(uqt D_λ D̄_μ / ((1-q)(1-t)))^{(0)} - (uqt/((1-q)(1-t)))^{(0)}`,
/// combined into a single finite sum before the color projection.
pub fn nekrasov_omega_argument(lambda: &Partition, mu: &Partition, r: u32) -> Result<LaurentPoly> {
    let d = d_sum(lambda, r)?;
    let dbar = d_sum(mu, r)?.bar();
    let num = d
        .poly
        .mul(&dbar.poly)
        .sub(&LaurentPoly::one())
        .mul(&LaurentPoly::mono(exp_qtu(1, 1, 1)));
    let combined = num
        .exact_div(&one_minus_q_one_minus_t())
        .ok_or_else(|| Error::Consistency(format!("infinite tails do not cancel for ({}, {})", lambda, mu)))?;
    Ok(color_part_poly(&combined, r, 0))
}

/// Nekrasov factor as a polynomial in `q^{±1}, t^{±1}, u`, via Ω.
pub fn nekrasov_via_omega_poly(lambda: &Partition, mu: &Partition, r: u32) -> Result<LaurentPoly> {
    let arg = nekrasov_omega_argument(lambda, mu, r)?;
    let n = omega_finite(&arg)?;
    n.as_poly().cloned().ok_or_else(|| {
        Error::Consistency(format!(
            "Ω-argument for ({}, {}) has a positive multiplicity",
            lambda, mu
        ))
    })
}

pub fn nekrasov_via_omega<B: Backend>(lambda: &Partition, mu: &Partition, r: u32, backend: &B) -> Result<B::Elem> {
    backend.embed_poly(&nekrasov_via_omega_poly(lambda, mu, r)?)
}

/// Color-`i` part of a rational function whose denominator factors all
/// divide some `1 - m^N`, read as a series in `q, t`. Each factor is
/// completed to `1 - m^N` with `m^N` of color 0, after which the projection
/// acts on the numerator alone.
pub fn color_part_rational(x: &RatFunc, r: u32, i: u32) -> Result<RatFunc> {
    let mut num = x.numerator().clone();
    let mut den = LaurentPoly::one();
    for (f, mult) in x.denominator_factors() {
        let (m, n) = cyclotomic_piece(f)
            .ok_or_else(|| Error::NotExpandable(format!("denominator factor {} is not cyclotomic", f)))?;
        let col = color_of(&m, r);
        let period = if col == 0 { 1 } else { r / gcd(r, col) };
        let big_n = n / gcd(n, period) * period;
        let mut mn = m;
        for x in mn.iter_mut() {
            *x *= big_n as i32;
        }
        let full = LaurentPoly::one().sub(&LaurentPoly::mono(mn));
        let cofactor = full
            .exact_div(f)
            .ok_or_else(|| Error::Consistency(format!("{} does not divide {}", f, full)))?;
        for _ in 0..mult {
            num = num.mul(&cofactor);
            den = den.mul(&full);
        }
    }
    RatFunc::new(color_part_poly(&num, r, i), &den)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    fn lp(terms: &[(i32, i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            terms
                .iter()
                .map(|&(a, b, c)| (exp_qtu(a, b, 0), BigRational::from_integer(c.into()))),
        )
    }

    #[test]
    fn b_and_d_examples() {
        assert!(b_sum(&p(&[]), 3).unwrap().poly().is_zero());
        assert_eq!(b_sum(&p(&[1]), 3).unwrap().poly(), &LaurentPoly::one());
        assert_eq!(
            b_sum(&p(&[2, 1]), 3).unwrap().poly(),
            &lp(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(d_sum(&p(&[]), 3).unwrap().poly(), &LaurentPoly::from_int(-1));
        let d = d_sum(&p(&[1]), 3).unwrap();
        assert_eq!(d.poly(), &lp(&[(1, 0, -1), (0, 1, -1), (1, 1, 1)]));
        assert_eq!(d.color_part(1).poly(), &lp(&[(0, 1, -1)]));
        assert_eq!(d.color_part(2).poly(), &lp(&[(1, 0, -1)]));
        assert_eq!(d.color_part(0).poly(), &lp(&[(1, 1, 1)]));
    }

    #[test]
    fn bar_examples() {
        let s = CharacterSum::new(lp(&[(1, 0, 1), (0, 1, 1)]), 3).unwrap();
        assert_eq!(s.bar().poly(), &lp(&[(-1, 0, 1), (0, -1, 1)]));
        assert_eq!(s.bar().bar(), s);
        let d = d_sum(&p(&[1]), 3).unwrap();
        assert_eq!(d.bar().color_part(1).poly(), &lp(&[(-1, 0, -1)]));
    }

    #[test]
    fn mixed_e_examples() {
        assert!(mixed_e_sum(&p(&[]), &p(&[]), 3).unwrap().poly().is_zero());
        assert_eq!(
            mixed_e_sum(&p(&[1]), &p(&[1]), 3).unwrap().poly(),
            &lp(&[(0, 1, 1), (1, 0, 1)])
        );
        let ps = partitions_up_to(4);
        for l in &ps {
            for m in &ps {
                assert_eq!(
                    mixed_e_sum(l, m, 2).unwrap(),
                    mixed_e_sum_via_d(l, m, 2).unwrap(),
                    "{} {}",
                    l,
                    m
                );
            }
        }
    }

    #[test]
    fn nekrasov_examples() {
        let e = p(&[]);
        assert!(nekrasov_factor(&e, &e, 3).unwrap().expand().is_one());
        let core = p(&[3, 1, 1]);
        assert!(nekrasov_factor(&core, &core, 3).unwrap().is_empty());
        let three = p(&[3]);
        let n = nekrasov_factor(&three, &three, 3).unwrap();
        let expected = LaurentPoly::one()
            .sub(&LaurentPoly::mono(exp_qtu(-2, 1, 1)))
            .mul(&LaurentPoly::one().sub(&LaurentPoly::mono(exp_qtu(3, 0, 1))));
        assert_eq!(n.expand(), expected);
        assert_eq!(nekrasov_via_omega_poly(&three, &three, 3).unwrap(), expected);
        assert!(nekrasov_via_omega_poly(&e, &e, 3).unwrap().is_one());
    }

    #[test]
    fn two_routes_agree() {
        let ps = partitions_up_to(4);
        for r in [1, 2, 3, 4] {
            for l in &ps {
                for m in &ps {
                    assert_eq!(
                        nekrasov_factor(l, m, r).unwrap().expand(),
                        nekrasov_via_omega_poly(l, m, r).unwrap(),
                        "r={} {} {}",
                        r,
                        l,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn rational_color_split_sums_back() {
        // uqt / ((1-q)(1-t)) split into colors and summed
        let x = RatFunc::over_one_minus(
            LaurentPoly::mono(exp_qtu(1, 1, 1)),
            &[LaurentPoly::qt(1, 0), LaurentPoly::qt(0, 1)],
        )
        .unwrap();
        let mut total = RatFunc::zero();
        for i in 0..3 {
            total = total.add(&color_part_rational(&x, 3, i).unwrap());
        }
        assert_eq!(total, x);
    }
}
