//! Exact coefficient arithmetic: Laurent polynomials, rational functions,
//! truncated power series and rational evaluation points, unified behind the
//! [`Backend`] interface.

mod backend;
mod cyclotomic;
mod laurent;
mod point;
mod ratfunc;
mod series;
mod uniseries;

pub(crate) use cyclotomic::cyclotomic_piece;

use std::fmt;

pub use backend::{Backend, Coeff, ExactBackend, PointBackend, SeriesBackend};
pub use laurent::{LaurentPoly, ZERO_EXP};
pub use point::{random_eval_point, EvalPoint, PointConfig};
pub use ratfunc::{ratfunc_equal, substitute_powers, RatFunc};
pub use series::{series_truncate_product, SeriesCap, TruncSeries};
pub use uniseries::UniSeries;

pub const NVARS: usize = 5;

/// Exponent vector over `(q, t, u, T, p)`.
pub type Exponent = [i32; NVARS];

/// The fixed variable universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    U,
    /// The grading variable `T` (distinct from `t`).
    Grade,
    P,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::U, Var::Grade, Var::P];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn unit(self) -> Exponent {
        let mut e = ZERO_EXP;
        e[self.index()] = 1;
        e
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
            Var::Grade => "T",
            Var::P => "p",
        })
    }
}

/// Mask selecting `q` and `t`.
pub const QT_MASK: [bool; NVARS] = [true, true, false, false, false];

/// Exponent vector for `q^a t^b u^c`.
pub fn exp_qtu(a: i32, b: i32, c: i32) -> Exponent {
    [a, b, c, 0, 0]
}
