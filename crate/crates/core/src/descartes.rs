//! Upper bound and parity for positive roots, and the derivative step that removes a
//! chosen sign variation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{SignSequence, Signomial, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The variation count `k` and its parity: any positive-root count `p` satisfies
/// `p <= k` and `p = k (mod 2)`.
pub fn descartes_bound(seq: &SignSequence) -> (usize, Parity) {
    let k = seq.variations();
    (k, Parity::of(k))
}

/// Realizable positive-root counts `k, k - 2, ...` in decreasing order.
pub fn admissible_p(seq: &SignSequence) -> Vec<usize> {
    let k = seq.variations();
    (0..=k).rev().step_by(2).collect()
}

pub fn is_realizable(seq: &SignSequence, p: usize) -> bool {
    let k = seq.variations();
    p <= k && (k - p) % 2 == 0
}

/// `(x^{-alpha} Y)'` term by term: `a_i (alpha_i - alpha) x^{alpha_i - alpha - 1}`.
///
/// Signs of terms with `alpha_i < alpha` flip; the others are kept.
pub fn gua_laguerre_step(y: &Signomial, alpha: f64) -> Result<Signomial> {
    if let Some(t) = y.terms().iter().find(|t| t.exponent == alpha) {
        return Err(Error::DegenerateTerm {
            exponent: t.exponent,
        });
    }
    Signomial::new(
        y.terms()
            .iter()
            .map(|t| Term {
                exponent: t.exponent - alpha - 1.0,
                coefficient: t.coefficient * (t.exponent - alpha),
            })
            .collect(),
    )
}

/// Open interval of choices of `alpha` that delete the variation between terms `i`
/// and `i + 1` and leave every other variation alone.
pub fn variation_killing_interval(y: &Signomial, i: usize) -> Result<(f64, f64)> {
    let terms = y.terms();
    if i + 1 >= terms.len() || (terms[i].coefficient > 0.0) == (terms[i + 1].coefficient > 0.0) {
        return Err(Error::NotAVariation { index: i });
    }
    Ok((terms[i].exponent, terms[i + 1].exponent))
}

/// Applies [`gua_laguerre_step`] at the midpoint of the killing interval.
pub fn kill_variation(y: &Signomial, i: usize) -> Result<Signomial> {
    let (lo, hi) = variation_killing_interval(y, i)?;
    gua_laguerre_step(y, 0.5 * (lo + hi))
}
