//! Exact computer algebra for wreath Macdonald polynomials.
//!
//! The crate is layered bottom-up: [`coeff`] is the arithmetic kernel,
//! [`partition`] the combinatorics of partitions, Maya diagrams and
//! core/quotient data, [`charsum`] character sums and Nekrasov factors,
//! [`symfunc`] the colored ring of symmetric functions with plethysm,
//! [`wreath`] the triangularity solver and the vertex operators, and
//! [`suites`] the end-to-end identity verifiers.

// elimination loops read better indexed, and the caches are keyed tuples
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod charsum;
pub mod coeff;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod suites;
pub mod symfunc;
pub mod wreath;

pub use coeff::{
    Backend, Coeff, EvalPoint, ExactBackend, LaurentPoly, PointBackend, RatFunc, SeriesBackend, SeriesCap, TruncSeries,
    UniSeries, Var,
};
pub use error::{Error, Result};
