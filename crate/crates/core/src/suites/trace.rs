//! Graded traces `Tr(Ω[bX] 𝒯[aX] T^D)` computed as explicit matrix traces on
//! the multi-Schur basis, against the closed product form.
//!
//! For matrix plethysms `A` and `B` the operators only see the row sums, so a
//! case is given by the two columns `a` (translation) and `b` (`Ω`); the sum
//! of the entries of `AᵀB` is then `Σ_k a_k b_k`.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::no::{qtu_t, PochhammerReading, PochhammerSpec};
use super::VerificationReport;
use crate::coeff::{Coeff, ExactBackend, LaurentPoly, RatFunc, UniSeries, Var};
use crate::error::{Error, Result};
use crate::symfunc::{omega_multiply, powersum_to_schur, schur_basis, translation_apply, PlethysmMatrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceCase {
    pub name: String,
    pub a: Vec<RatFunc>,
    pub b: Vec<RatFunc>,
}

impl TraceCase {
    /// `A = B = 0`.
    pub fn zero(r: u32) -> Self {
        Self {
            name: "zero".into(),
            a: vec![RatFunc::zero(); r as usize],
            b: vec![RatFunc::zero(); r as usize],
        }
    }

    /// `A = B = I`.
    pub fn identity(r: u32) -> Self {
        Self {
            name: "identity".into(),
            a: vec![RatFunc::one(); r as usize],
            b: vec![RatFunc::one(); r as usize],
        }
    }

    /// The pair making up `W(u)`: `𝒯[(1−uqt)X^{(0)}]` and
    /// `Ω[(1−u⁻¹)X^{(0)}/((1−qσ⁻¹)(tσ−1))]`.
    pub fn ext_operator(r: u32) -> Result<Self> {
        let u = RatFunc::var(Var::U);
        let mut a = vec![RatFunc::zero(); r as usize];
        a[0] = RatFunc::one().sub(&u.mul(&RatFunc::mono(qtu_t(1, 1, 0, 0))));
        let c = RatFunc::one().sub(&u.inv()?);
        let b = PlethysmMatrix::pairing_kernel_inverse(r)?
            .column(0)
            .iter()
            .map(|x| x.mul(&c))
            .collect();
        Ok(Self {
            name: "W(u)".into(),
            a,
            b,
        })
    }

    /// `Σ_k a_k b_k`.
    pub fn pairing(&self) -> RatFunc {
        self.a
            .iter()
            .zip(&self.b)
            .fold(RatFunc::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceConfig {
    pub r: u32,
    pub cap_degree: u32,
    pub order_t: u32,
    pub cases: Vec<TraceCase>,
}

impl TraceConfig {
    /// The zero, identity and `W(u)` cases.
    pub fn standard(r: u32, cap_degree: u32, order_t: u32) -> Result<Self> {
        Ok(Self {
            r,
            cap_degree,
            order_t,
            cases: vec![TraceCase::zero(r), TraceCase::identity(r), TraceCase::ext_operator(r)?],
        })
    }
}

/// Trace of `Ω[bX] 𝒯[aX]` restricted to each degree `d ≤ cap`, summing the
/// diagonal multi-Schur coefficients.
pub fn trace_lhs(r: u32, a: &[RatFunc], b: &[RatFunc], cap: u32) -> Result<Vec<RatFunc>> {
    let be = ExactBackend::new();
    (0..=cap)
        .map(|d| {
            let mut tr = RatFunc::zero();
            for (nu, s) in schur_basis(r, d, d, &be)? {
                let g = omega_multiply(b, &translation_apply(a, &s, &be)?, &be)?.component(d);
                if let Some(c) = powersum_to_schur(&g).get(&nu) {
                    tr = tr.add(c);
                }
            }
            Ok(tr)
        })
        .collect()
}

/// `(1/(T;T)^r_∞) Ω[T/(1−T) · s]` up to `T^order`.
pub fn trace_rhs(r: u32, s: &RatFunc, order: usize) -> Result<UniSeries<RatFunc>> {
    let tt = PochhammerSpec::new(qtu_t(0, 0, 0, 1), vec![qtu_t(0, 0, 0, 1)]);
    let mut log = tt
        .log(PochhammerReading::MultiIndex, order)?
        .scale(&RatFunc::from_int(-(r as i64)));
    // log Ω[T/(1−T) s] = Σ_{n,k ≥ 1} p_n[s] T^{nk} / n
    let mut coeffs = vec![RatFunc::zero(); order + 1];
    for n in 1..=order {
        let pn = s
            .substitute_powers(n as i32)
            .scale(&num_rational::BigRational::new(1.into(), (n as i64).into()));
        let mut m = n;
        while m <= order {
            coeffs[m] = coeffs[m].add(&pn);
            m += n;
        }
    }
    log = log.add(&UniSeries::new(coeffs, order, &RatFunc::zero()));
    log.exp()
}

/// `−(1 + qt − u⁻¹ − uqt) Σ_{i<r} (qt)^i / ((1−q^r)(1−t^r))`.
fn ext_pairing_closed_form(r: u32) -> Result<RatFunc> {
    let m = |a, b, c| LaurentPoly::mono(qtu_t(a, b, c, 0));
    let lead = LaurentPoly::one().add(&m(1, 1, 0)).sub(&m(0, 0, -1)).sub(&m(1, 1, 1));
    let mut sum = LaurentPoly::zero();
    for i in 0..r as i32 {
        sum = sum.add(&m(i, i, 0));
    }
    RatFunc::over_one_minus(lead.mul(&sum).neg(), &[m(r as i32, 0, 0), m(0, r as i32, 0)])
}

pub fn trace_check(cfg: &TraceConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "trace",
        json!({
            "r": cfg.r,
            "cap_degree": cfg.cap_degree,
            "order_t": cfg.order_t,
            "cases": cfg.cases.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
        }),
    );
    let top = cfg.cap_degree.min(cfg.order_t);
    for case in &cfg.cases {
        if case.a.len() != cfg.r as usize || case.b.len() != cfg.r as usize {
            report.error(&case.name, &Error::InvalidInput("columns must have length r".into()));
            continue;
        }
        report.attempt(case.name.clone(), |report| {
            let lhs = trace_lhs(cfg.r, &case.a, &case.b, top)?;
            let rhs = trace_rhs(cfg.r, &case.pairing(), cfg.order_t as usize)?;
            for (d, l) in lhs.iter().enumerate() {
                let r = rhs.coeff(d);
                report.check(
                    format!("{} T^{}", case.name, d),
                    l.same(r),
                    || l.canonical(),
                    || r.canonical(),
                );
            }
            if case.name == "W(u)" {
                let (s, c) = (case.pairing(), ext_pairing_closed_form(cfg.r)?);
                report.check(
                    "W(u) pairing closed form",
                    s.same(&c),
                    || s.canonical(),
                    || c.canonical(),
                );
            }
            Ok(())
        });
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_case_counts_multipartitions() {
        let lhs = trace_lhs(
            2,
            &[RatFunc::zero(), RatFunc::zero()],
            &[RatFunc::zero(), RatFunc::zero()],
            3,
        )
        .unwrap();
        let counts: Vec<RatFunc> = [1, 2, 5, 10].iter().map(|&n| RatFunc::from_int(n)).collect();
        assert_eq!(lhs, counts);
    }

    #[test]
    fn r1_identity_and_ext() {
        let rep = trace_check(&TraceConfig::standard(1, 3, 3).unwrap()).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }
}
