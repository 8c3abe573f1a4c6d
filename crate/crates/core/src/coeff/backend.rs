//! One coefficient-ring interface over three interchangeable backends.
//!
//! Parameter expressions (plethysm matrix entries, character data, markers)
//! are always built as exact [`RatFunc`] values and then pushed into a backend
//! with [`Backend::embed`]. The exact backend keeps them symbolic, the point
//! backend evaluates them at a rational point and the series backend expands
//! them as truncated power series.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::point::EvalPoint;
use super::series::{SeriesCap, TruncSeries};
use super::{LaurentPoly, RatFunc, QT_MASK};
use crate::error::{Error, Result};

/// Arithmetic on backend values.
pub trait Coeff: Clone + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Equality in the sense of the represented value.
    fn same(&self, other: &Self) -> bool;
    /// A constant living in the same ambient ring as `self`.
    fn constant_like(&self, c: &BigRational) -> Self;
    fn canonical(&self) -> String;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
    fn zero_like(&self) -> Self {
        self.constant_like(&BigRational::zero())
    }
    fn one_like(&self) -> Self {
        self.constant_like(&BigRational::one())
    }
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&self.constant_like(&BigRational::from_integer(n.into())))
    }
    /// A basis of the right kernel of `rows`, treating `Self` as a field.
    fn kernel(rows: Vec<Vec<Self>>, ncols: usize, like: &Self) -> Result<Vec<Vec<Self>>> {
        crate::linalg::field_kernel(rows, ncols, like)
    }
}

pub trait Backend: Clone + fmt::Debug + Send + Sync {
    type Elem: Coeff;

    fn name(&self) -> &'static str;
    fn constant(&self, c: &BigRational) -> Self::Elem;
    fn embed(&self, x: &RatFunc) -> Result<Self::Elem>;
    /// The same backend with `q, t` replaced by `1/q, 1/t` in every embedded
    /// expression.
    fn qt_inverted(&self) -> Self;

    fn zero(&self) -> Self::Elem {
        self.constant(&BigRational::zero())
    }
    fn one(&self) -> Self::Elem {
        self.constant(&BigRational::one())
    }
    fn int(&self, n: i64) -> Self::Elem {
        self.constant(&BigRational::from_integer(n.into()))
    }
    fn embed_poly(&self, p: &LaurentPoly) -> Result<Self::Elem> {
        self.embed(&RatFunc::from_poly(p.clone()))
    }
}

impl Coeff for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn div(&self, other: &Self) -> Result<Self> {
        RatFunc::div(self, other)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn constant_like(&self, c: &BigRational) -> Self {
        RatFunc::from_rational(c.clone())
    }
    fn canonical(&self) -> String {
        self.to_string()
    }
    fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }
    fn kernel(rows: Vec<Vec<Self>>, ncols: usize, _like: &Self) -> Result<Vec<Vec<Self>>> {
        crate::linalg::ratfunc_kernel(rows, ncols)
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DegeneratePoint("division by zero value".into()))
        } else {
            Ok(self.recip())
        }
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn constant_like(&self, c: &BigRational) -> Self {
        c.clone()
    }
    fn canonical(&self) -> String {
        self.to_string()
    }
    fn kernel(rows: Vec<Vec<Self>>, ncols: usize, _like: &Self) -> Result<Vec<Vec<Self>>> {
        crate::linalg::rational_kernel(rows, ncols)
    }
}

impl Coeff for TruncSeries {
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TruncSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TruncSeries::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TruncSeries::mul(self, other)
    }
    fn neg(&self) -> Self {
        TruncSeries::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        TruncSeries::inv(self)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn constant_like(&self, c: &BigRational) -> Self {
        TruncSeries::constant(self.cap(), c.clone())
    }
    fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Symbolic rational functions in `q, t, u` (and `T, p` when present).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExactBackend {
    invert_qt: bool,
}

impl ExactBackend {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Backend for ExactBackend {
    type Elem = RatFunc;

    fn name(&self) -> &'static str {
        "exact"
    }
    fn constant(&self, c: &BigRational) -> RatFunc {
        RatFunc::from_rational(c.clone())
    }
    fn embed(&self, x: &RatFunc) -> Result<RatFunc> {
        Ok(if self.invert_qt {
            x.invert_vars(QT_MASK)
        } else {
            x.clone()
        })
    }
    fn qt_inverted(&self) -> Self {
        Self {
            invert_qt: !self.invert_qt,
        }
    }
}

/// Exact rational values at a fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointBackend {
    point: EvalPoint,
}

impl PointBackend {
    pub fn new(point: EvalPoint) -> Self {
        Self { point }
    }

    pub fn point(&self) -> &EvalPoint {
        &self.point
    }
}

impl Backend for PointBackend {
    type Elem = BigRational;

    fn name(&self) -> &'static str {
        "points"
    }
    fn constant(&self, c: &BigRational) -> BigRational {
        c.clone()
    }
    fn embed(&self, x: &RatFunc) -> Result<BigRational> {
        x.eval(self.point.values())
    }
    fn qt_inverted(&self) -> Self {
        Self {
            point: self.point.qt_inverted(),
        }
    }
}

/// Truncated power series in `q, t, T, p`, Laurent in `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesBackend {
    cap: SeriesCap,
    invert_qt: bool,
}

impl SeriesBackend {
    pub fn new(cap: SeriesCap) -> Self {
        Self { cap, invert_qt: false }
    }

    pub fn cap(&self) -> SeriesCap {
        self.cap
    }
}

impl Backend for SeriesBackend {
    type Elem = TruncSeries;

    fn name(&self) -> &'static str {
        "series"
    }
    fn constant(&self, c: &BigRational) -> TruncSeries {
        TruncSeries::constant(self.cap, c.clone())
    }
    fn embed(&self, x: &RatFunc) -> Result<TruncSeries> {
        let x = if self.invert_qt {
            x.invert_vars(QT_MASK)
        } else {
            x.clone()
        };
        TruncSeries::from_ratfunc(self.cap, &x)
    }
    fn qt_inverted(&self) -> Self {
        Self {
            cap: self.cap,
            invert_qt: !self.invert_qt,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{random_eval_point, PointConfig, Var};

    fn sample() -> RatFunc {
        let q = LaurentPoly::var(Var::Q);
        let t = LaurentPoly::var(Var::T);
        RatFunc::new(q.clone(), &LaurentPoly::one().sub(&q.mul(&t))).unwrap()
    }

    #[test]
    fn backends_agree_on_a_sample() {
        let x = sample();
        let exact = ExactBackend::new().embed(&x).unwrap();
        let pt = random_eval_point(3, &[], &PointConfig::default()).unwrap();
        let val = PointBackend::new(pt.clone()).embed(&x).unwrap();
        assert_eq!(exact.eval(pt.values()).unwrap(), val);

        let cap = SeriesCap {
            qt: Some(6),
            ..Default::default()
        };
        let s = SeriesBackend::new(cap).embed(&x).unwrap();
        // q/(1-qt) = q + q^2 t + q^3 t^2 (total degree <= 6)
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn inverted_backends_commute_with_evaluation() {
        let x = sample();
        let pt = random_eval_point(5, &[], &PointConfig::default()).unwrap();
        let inv_exact = ExactBackend::new().qt_inverted().embed(&x).unwrap();
        let inv_point = PointBackend::new(pt.clone()).qt_inverted().embed(&x).unwrap();
        assert_eq!(inv_exact.eval(pt.values()).unwrap(), inv_point);
    }
}
