//! Univariate truncated power series with coefficients in any [`Coeff`].

use num_rational::BigRational;

use super::backend::Coeff;
use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_N x^N` modulo `x^{N+1}`.
#[derive(Clone, Debug)]
pub struct UniSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniSeries<C> {
    /// Pads or truncates `coeffs` to length `order + 1`; `like` supplies the
    /// ambient zero.
    pub fn new(mut coeffs: Vec<C>, order: usize, like: &C) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(like.zero_like());
        }
        Self { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let like = c.clone();
        Self::new(vec![c], order, &like)
    }

    /// `c x^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        let c0inv = self.coeffs[0]
            .inv()
            .map_err(|_| Error::NotExpandable("series with vanishing constant term".into()))?;
        let mut out = vec![c0inv.clone()];
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&c0inv).neg());
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `exp(self)` for a series without constant term, by the recurrence
    /// `k E_k = sum_j j L_j E_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput("exp needs a vanishing constant term".into()));
        }
        let n = self.order();
        let one = self.coeffs[0].one_like();
        let mut out = vec![one];
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].scale_int(j as i64).mul(&out[k - j]));
            }
            let inv_k = acc.constant_like(&BigRational::new(1.into(), (k as i64).into()));
            out.push(acc.mul(&inv_k));
        }
        Ok(Self { coeffs: out })
    }

    pub fn map<D: Coeff, F: Fn(&C) -> Result<D>>(&self, f: F) -> Result<UniSeries<D>> {
        Ok(UniSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn same(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.same(b))
    }

    /// Index of the first coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| !a.same(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn exp_of_x_is_exponential_series() {
        let x = UniSeries::monomial(r(1), 1, 4);
        let e = x.exp().unwrap();
        let expected = [
            r(1),
            r(1),
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 6.into()),
            BigRational::new(1.into(), 24.into()),
        ];
        assert_eq!(e.coeffs(), &expected);
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let s = UniSeries::new(vec![r(1), r(-1)], 5, &r(0));
        let inv = s.inv().unwrap();
        assert!(inv.coeffs().iter().all(|c| c.is_one()));
        assert!(s.mul(&inv).same(&UniSeries::constant(r(1), 5)));
    }
}
