//! The elliptic lift of the modular hook sum: each linear factor `1 − z`
//! becomes `θ(z;p) = (z, p/z; p)_∞`, with `(t_1, t_2) = (q⁻¹, t)`. The sum over
//! partitions with a fixed core is compared across cores as a series in `p`
//! with exact `(q, t, u)` coefficients.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::no::{no_modular_sum_side_exact, qtu_t};
use super::VerificationReport;
use crate::coeff::{Coeff, Exponent, RatFunc, UniSeries};
use crate::error::Result;
use crate::partition::{arm, enumerate_with_core, hook, leg, Partition};

/// `θ(x^e; p)` truncated at `p^{p_cap}`.
pub fn theta(e: &Exponent, p_cap: usize) -> UniSeries<RatFunc> {
    let z = RatFunc::mono(*e);
    let zinv = RatFunc::mono(e.map(|x| -x));
    let linear = |c: &RatFunc, k: usize| {
        let mut v = vec![RatFunc::one()];
        v.resize(p_cap + 1, RatFunc::zero());
        if k <= p_cap {
            v[k] = c.neg();
        }
        UniSeries::new(v, p_cap, &RatFunc::zero())
    };
    let mut out = UniSeries::constant(RatFunc::one().sub(&z), p_cap);
    for k in 1..=p_cap {
        out = out.mul(&linear(&z, k)).mul(&linear(&zinv, k));
    }
    out
}

/// `θ(z;p) = −z θ(1/z;p)` on truncations, for each monomial `z`.
pub fn theta_symmetry_check(zs: &[Exponent], p_cap: usize) -> VerificationReport {
    let mut report = VerificationReport::new("theta-symmetry", json!({ "p_cap": p_cap }));
    for e in zs {
        let lhs = theta(e, p_cap);
        let rhs = theta(&e.map(|x| -x), p_cap).scale(&RatFunc::mono(*e).neg());
        report.flag(format!("z = {:?}", e), lhs.same(&rhs), || {
            format!("differs at p^{}", lhs.first_difference(&rhs).unwrap_or(0))
        });
    }
    report.finish()
}

/// The factor of one box with arm `a` and leg `l`.
fn box_factor(a: i32, l: i32, p_cap: usize) -> Result<UniSeries<RatFunc>> {
    let num = theta(&qtu_t(a + 1, l, 1, 0), p_cap).mul(&theta(&qtu_t(a, l + 1, -1, 0), p_cap));
    let den = theta(&qtu_t(a + 1, l, 0, 0), p_cap).mul(&theta(&qtu_t(a, l + 1, 0, 0), p_cap));
    num.div(&den)
}

/// Coefficients of `T^0, …, T^{order}` of the elliptic sum over `λ` with core
/// `α`, each a series in `p`.
pub fn elliptic_sum_side(alpha: &Partition, r: u32, order: u32, p_cap: usize) -> Result<Vec<UniSeries<RatFunc>>> {
    let mut factors: HashMap<(i32, i32), UniSeries<RatFunc>> = HashMap::new();
    let mut out = Vec::new();
    for n in 0..=order {
        let mut total = UniSeries::new(vec![], p_cap, &RatFunc::zero());
        for lambda in enumerate_with_core(alpha, r, n)? {
            let mut term = UniSeries::constant(RatFunc::one(), p_cap);
            for c in lambda.cells() {
                if hook(&lambda, c) % r as i64 != 0 {
                    continue;
                }
                let key = (arm(&lambda, c) as i32, leg(&lambda, c) as i32);
                if let std::collections::hash_map::Entry::Vacant(e) = factors.entry(key) {
                    e.insert(box_factor(key.0, key.1, p_cap)?);
                }
                term = term.mul(&factors[&key]);
            }
            total = total.add(&term);
        }
        out.push(total);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EllipticConfig {
    pub r: u32,
    pub cores: Vec<Partition>,
    pub order_t: u32,
    pub p_cap: u32,
}

impl EllipticConfig {
    pub fn new(r: u32, cores: Vec<Partition>) -> Self {
        Self {
            r,
            cores,
            order_t: 2,
            p_cap: 4,
        }
    }
}

/// The elliptic sums agree across cores for every `T^n`, their `p^0` part is
/// the modular hook sum, and `θ` has its reflection symmetry.
pub fn elliptic_core_independence(cfg: &EllipticConfig) -> Result<VerificationReport> {
    let p_cap = cfg.p_cap as usize;
    let mut report = VerificationReport::new(
        "elliptic",
        json!({
            "r": cfg.r,
            "cores": cfg.cores.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "order_t": cfg.order_t,
            "p_cap": cfg.p_cap,
        }),
    );
    let mut sides: Vec<(Partition, Vec<UniSeries<RatFunc>>)> = Vec::new();
    for core in &cfg.cores {
        report.attempt(format!("core {}", core), |report| {
            let side = elliptic_sum_side(core, cfg.r, cfg.order_t, p_cap)?;
            let flat = no_modular_sum_side_exact(core, cfg.r, cfg.order_t as usize)?;
            for (n, s) in side.iter().enumerate() {
                let (a, b) = (s.coeff(0), flat.coeff(n));
                report.check(
                    format!("core {} T^{} p→0", core, n),
                    a.same(b),
                    || a.canonical(),
                    || b.canonical(),
                );
            }
            sides.push((core.clone(), side));
            Ok(())
        });
    }
    if let Some((first, s0)) = sides.first() {
        for (core, s) in &sides[1..] {
            for (n, (a, b)) in s0.iter().zip(s).enumerate() {
                report.flag(format!("T^{} core {} vs {}", n, first, core), a.same(b), || {
                    let k = a.first_difference(b).unwrap_or(0);
                    format!("p^{}: {} vs {}", k, a.coeff(k).canonical(), b.coeff(k).canonical())
                });
            }
        }
    }
    let zs = [qtu_t(1, 0, 1, 0), qtu_t(2, 1, -1, 0), qtu_t(0, 1, 0, 0)];
    report.merge(theta_symmetry_check(&zs, p_cap));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_at_p0_is_linear() {
        let th = theta(&qtu_t(1, 0, 0, 0), 3);
        assert_eq!(th.coeff(0), &RatFunc::one().sub(&RatFunc::mono(qtu_t(1, 0, 0, 0))));
        // θ(z;p) = (1−z)(1 − p(z + 1/z) + …): the p^1 coefficient is −(1−z)(z + 1/z)
        let z = RatFunc::mono(qtu_t(1, 0, 0, 0));
        let zi = RatFunc::mono(qtu_t(-1, 0, 0, 0));
        assert_eq!(th.coeff(1), &RatFunc::one().sub(&z).mul(&z.add(&zi)).neg());
    }

    #[test]
    fn symmetry() {
        assert!(theta_symmetry_check(&[qtu_t(1, 2, 1, 0)], 3).passed());
    }

    #[test]
    fn small_independence() {
        let mut cfg = EllipticConfig::new(3, vec![Partition::empty(), Partition::from_slice(&[1])]);
        cfg.order_t = 1;
        cfg.p_cap = 2;
        let rep = elliptic_core_independence(&cfg).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }
}
