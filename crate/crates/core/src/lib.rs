//! Sign-sequence root counting for polynomials and real-exponent signomials.
//!
//! The crate covers variation bounds for positive roots, an explicit construction of
//! signomials with a prescribed sign sequence and prescribed positive roots, the
//! positivity test for trinomials, exact Sturm-based root counting, and the
//! feasibility table of `(P, N)` positive/negative root counts for dense polynomials
//! of small degree.
//!
//! ```
//! use descartes_core::{pn_count, RationalPolynomial};
//!
//! let p = RationalPolynomial::from_i64s(&[2, -3, 1]);
//! let pair = pn_count(&p).unwrap();
//! assert_eq!((pair.p, pair.n), (2, 0));
//! ```

pub mod descartes;
pub mod error;
pub mod linalg;
pub mod numeric;
pub mod pn_table;
pub mod poly;
pub mod rootcount;
pub mod trinomial;
pub mod witness;

pub use descartes::{
    admissible_p, descartes_bound, gua_laguerre_step, is_realizable, kill_variation,
    variation_killing_interval, Parity,
};
pub use error::{Error, Result};
pub use poly::*;
pub use rootcount::{
    count_with_multiplicity, distinct_positive_roots, isolate_signomial_roots, pn_count,
    square_free_decomposition, sturm_count_interval, Axis, Bound, IsolationOptions,
    IsolationResult, RootBracket, SturmChain,
};
pub use trinomial::{
    classify_trinomial, discriminant_crosscheck, double_root_location, DiscriminantPattern,
    ExactTrinomial, Trinomial, TrinomialCriterion, TrinomialVerdict,
};
pub use witness::{
    block_decompose, construct_witness, construct_witness_with, verify_witness,
    verify_witness_with, BlockSystem, WitnessCertificate, WitnessOptions, WitnessReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/sign-sequences.md")]
    pub struct SignSequences;
    #[doc = include_str!("../../../book/src/derivative-step.md")]
    pub struct DerivativeStep;
    #[doc = include_str!("../../../book/src/witnesses.md")]
    pub struct Witnesses;
    #[doc = include_str!("../../../book/src/trinomials.md")]
    pub struct Trinomials;
    #[doc = include_str!("../../../book/src/root-counting.md")]
    pub struct RootCounting;
    #[doc = include_str!("../../../book/src/pn-table.md")]
    pub struct PnTable;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
