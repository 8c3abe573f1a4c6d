//! Random rational evaluation points for probabilistic identity checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Var, NVARS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    /// Largest absolute value of a numerator or denominator.
    pub height: u32,
    pub retries: u32,
}

impl Default for PointConfig {
    fn default() -> Self {
        Self {
            height: 97,
            retries: 64,
        }
    }
}

/// An assignment of rationals to `q, t, u`, together with the polynomials it
/// was checked against.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint {
    values: [Option<BigRational>; NVARS],
    checked: Vec<LaurentPoly>,
}

fn valid_value(x: &BigRational) -> bool {
    x.numer().abs() >= BigInt::from(2) && x.denom() >= &BigInt::from(2)
}

impl EvalPoint {
    /// A point from explicit values for `q, t, u`.
    pub fn new(q: BigRational, t: BigRational, u: BigRational) -> Result<Self> {
        for x in [&q, &t, &u] {
            if !valid_value(x) {
                return Err(Error::InvalidInput(format!("point value {} has height below 2", x)));
            }
        }
        if q == t || q == u || t == u {
            return Err(Error::InvalidInput("point values must be distinct".into()));
        }
        Ok(Self {
            values: [Some(q), Some(t), Some(u), None, None],
            checked: Vec::new(),
        })
    }

    pub fn values(&self) -> &[Option<BigRational>; NVARS] {
        &self.values
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.values[v.index()].as_ref()
    }

    pub fn checked(&self) -> &[LaurentPoly] {
        &self.checked
    }

    /// `q -> 1/q`, `t -> 1/t`.
    pub fn qt_inverted(&self) -> Self {
        let mut values = self.values.clone();
        for v in [Var::Q, Var::T] {
            if let Some(x) = &values[v.index()] {
                values[v.index()] = Some(x.recip());
            }
        }
        Self {
            values,
            checked: self.checked.clone(),
        }
    }

    pub fn avoids(&self, p: &LaurentPoly) -> Result<bool> {
        Ok(!p.eval(&self.values)?.is_zero())
    }
}

fn draw(rng: &mut ChaCha8Rng, height: u32) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(2..=height as i64);
        let d: i64 = rng.gen_range(2..=height as i64);
        if n.gcd(&d) != 1 {
            continue;
        }
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        return BigRational::new((sign * n).into(), d.into());
    }
}

/// Draws a deterministic (under `seed`) point for `q, t, u` at which none of
/// the `forbidden` polynomials vanish.
pub fn random_eval_point(seed: u64, forbidden: &[LaurentPoly], config: &PointConfig) -> Result<EvalPoint> {
    if config.height < 3 {
        return Err(Error::InvalidInput("point height must be at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..=config.retries {
        let q = draw(&mut rng, config.height);
        let t = draw(&mut rng, config.height);
        let u = draw(&mut rng, config.height);
        let Ok(mut pt) = EvalPoint::new(q, t, u) else {
            continue;
        };
        let mut ok = true;
        for f in forbidden {
            if !pt.avoids(f)? {
                ok = false;
                break;
            }
        }
        if ok {
            pt.checked = forbidden.to_vec();
            return Ok(pt);
        }
    }
    Err(Error::DegeneratePoint(format!(
        "no admissible point after {} retries",
        config.retries
    )))
}

impl EvalPoint {
    /// The value of `x^k` for a variable, mostly for diagnostics.
    pub fn power(&self, v: Var, k: i32) -> Option<BigRational> {
        self.get(v).map(|x| if k == 0 { BigRational::one() } else { x.pow(k) })
    }
}
