//! Ground-truth root counting.
//!
//! Exact Sturm counts and square-free multiplicities for [`RationalPolynomial`]s, and
//! numeric isolation for real-exponent [`Signomial`]s.
//!
//! [`RationalPolynomial`]: crate::poly::RationalPolynomial
//! [`Signomial`]: crate::poly::Signomial

pub(crate) mod intpoly;
mod isolate;
mod sturm;

pub use intpoly::Bound;
pub use isolate::{
    dominance_window, isolate_signomial_roots, IsolationOptions, IsolationResult, RootBracket,
};
pub use sturm::{
    count_with_multiplicity, distinct_positive_roots, pn_count, square_free_decomposition,
    sturm_count_interval, Axis, SturmChain,
};
