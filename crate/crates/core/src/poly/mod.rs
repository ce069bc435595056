//! Core value types: sign sequences, real-exponent signomials, exact rational
//! polynomials, positive-root multisets and `(P, N)` pairs.

mod rational;
mod roots;
mod sign;
mod signomial;

pub use rational::{
    format_rational, parse_rational, split_even_odd, RationalPolynomial, RationalRecord,
};
pub(crate) use rational::rat;
pub use roots::{PnPair, RootEntry, RootMultiset};
pub use sign::{
    transform_negate_x, transform_negate_y, transform_reverse, variations, Sign, SignSequence,
};
pub use signomial::{evaluate, sign_sequence_of, Signomial, SignomialRecord, Term};
