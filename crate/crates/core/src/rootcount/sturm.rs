use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::intpoly::{self, Bound};
use crate::error::{Error, Result};
use crate::poly::{PnPair, RationalPolynomial};

/// The classical rational Sturm chain `p, p', -rem(p, p'), ...`.
///
/// Consecutive elements satisfy `s_{i+1} = -rem(s_{i-1}, s_i)` exactly; the last
/// element is a gcd of `p` and `p'`.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    chain: Vec<RationalPolynomial>,
}

impl SturmChain {
    pub fn new(p: &RationalPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        Ok(SturmChain { chain })
    }

    pub fn polynomials(&self) -> &[RationalPolynomial] {
        &self.chain
    }

    fn variations_right_of(&self, at: &Bound) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|q| intpoly::sign_right_of(&q.to_primitive_integers(), at))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations_right_of(lo)
            .saturating_sub(self.variations_right_of(hi))
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`, exact.
pub fn sturm_count_interval(p: &RationalPolynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
        if a >= b {
            return Ok(0);
        }
    }
    let chain = intpoly::sturm_chain(&p.to_primitive_integers());
    Ok(intpoly::count_distinct(&chain, lo, hi))
}

/// Which half-line to count on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Positive,
    Negative,
}

/// `p / x^m` where `x^m` is the largest power of `x` dividing `p`.
fn strip_zero_roots(p: &RationalPolynomial) -> RationalPolynomial {
    let m = p.coefficients().iter().take_while(|c| c.is_zero()).count();
    RationalPolynomial::new(p.coefficients()[m..].to_vec())
}

/// Yun's square-free decomposition: `p = c * prod f_i^i` with each `f_i` monic and
/// square-free. Returns the non-constant factors with their multiplicity.
pub fn square_free_decomposition(p: &RationalPolynomial) -> Result<Vec<(RationalPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let d = p.derivative();
    let a0 = p.gcd(&d);
    let mut b = p.exact_div(&a0)?;
    let mut c = d.exact_div(&a0)?;
    let mut dd = &c - &b.derivative();
    let mut i = 1;
    while b.degree() != Some(0) {
        let a = b.gcd(&dd);
        b = b.exact_div(&a)?;
        c = dd.exact_div(&a)?;
        dd = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Real roots on one half-line counted with multiplicity (a root at 0 is not counted).
pub fn count_with_multiplicity(p: &RationalPolynomial, axis: Axis) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = strip_zero_roots(p);
    let q = match axis {
        Axis::Positive => q,
        Axis::Negative => q.negate_x(),
    };
    let (lo, hi) = (Bound::Finite(BigRational::zero()), Bound::PosInfinity);
    let chain = intpoly::sturm_chain(&q.to_primitive_integers());
    if chain.last().is_some_and(|g| g.len() == 1) {
        return Ok(intpoly::count_distinct(&chain, &lo, &hi));
    }
    let mut total = 0;
    for (factor, mult) in square_free_decomposition(&q)? {
        let chain = intpoly::sturm_chain(&factor.to_primitive_integers());
        total += mult * intpoly::count_distinct(&chain, &lo, &hi);
    }
    Ok(total)
}

/// `(P, N)`: positive and negative real roots with multiplicity.
///
/// The constant term must be non-zero.
pub fn pn_count(p: &RationalPolynomial) -> Result<PnPair> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let chain = intpoly::sturm_chain(&p.to_primitive_integers());
    if chain.last().is_some_and(|g| g.len() == 1) {
        let zero = Bound::Finite(BigRational::zero());
        return Ok(PnPair::new(
            intpoly::count_distinct(&chain, &zero, &Bound::PosInfinity),
            intpoly::count_distinct(&chain, &Bound::NegInfinity, &zero),
        ));
    }
    Ok(PnPair::new(
        count_with_multiplicity(p, Axis::Positive)?,
        count_with_multiplicity(p, Axis::Negative)?,
    ))
}

/// Distinct positive roots, exact.
pub fn distinct_positive_roots(p: &RationalPolynomial) -> Result<usize> {
    sturm_count_interval(p, &Bound::Finite(BigRational::zero()), &Bound::PosInfinity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64s(c)
    }

    fn positive() -> (Bound, Bound) {
        (Bound::Finite(rat(0)), Bound::PosInfinity)
    }

    #[test]
    fn counts_distinct_roots() {
        let (lo, hi) = positive();
        assert_eq!(sturm_count_interval(&p(&[2, -3, 1]), &lo, &hi).unwrap(), 2);
        assert_eq!(
            sturm_count_interval(&p(&[1, 0, 1]), &Bound::NegInfinity, &Bound::PosInfinity).unwrap(),
            0
        );
        assert_eq!(
            sturm_count_interval(&p(&[120, 2, -179, 4, 71, -18]), &lo, &hi).unwrap(),
            3
        );
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let (lo, hi) = positive();
        let z = RationalPolynomial::zero();
        assert_eq!(sturm_count_interval(&z, &lo, &hi), Err(Error::ZeroPolynomial));
        assert_eq!(count_with_multiplicity(&z, Axis::Positive), Err(Error::ZeroPolynomial));
        assert_eq!(SturmChain::new(&z), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn multiplicity_counts() {
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let q = p(&[2, -3, 0, 1]);
        assert_eq!(count_with_multiplicity(&q, Axis::Positive).unwrap(), 2);
        assert_eq!(count_with_multiplicity(&q, Axis::Negative).unwrap(), 1);
        assert_eq!(pn_count(&q).unwrap(), PnPair::new(2, 1));
    }

    #[test]
    fn pn_counts_of_examples() {
        assert_eq!(pn_count(&p(&[2, -3, 1])).unwrap(), PnPair::new(2, 0));
        assert_eq!(pn_count(&p(&[-1, 0, 1])).unwrap(), PnPair::new(1, 1));
        assert_eq!(pn_count(&p(&[216, -258, -37, 90, -1, -12, 2])).unwrap(), PnPair::new(4, 0));
        assert_eq!(pn_count(&p(&[744, -1286, 559, 25, -44, 1, 1])).unwrap(), PnPair::new(4, 0));
        assert_eq!(pn_count(&p(&[0, 1, 1])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn negative_axis_ignores_root_at_zero() {
        // x (x + 1)^2
        let q = p(&[0, 1, 2, 1]);
        assert_eq!(count_with_multiplicity(&q, Axis::Negative).unwrap(), 2);
        assert_eq!(count_with_multiplicity(&q, Axis::Positive).unwrap(), 0);
        // x^2 (x + 3)
        let q = p(&[0, 0, 3, 1]);
        assert_eq!(count_with_multiplicity(&q, Axis::Negative).unwrap(), 1);
    }

    #[test]
    fn rational_chain_satisfies_remainder_relation() {
        let q = p(&[744, -1286, 559, 25, -44, 1, 1]);
        let chain = SturmChain::new(&q).unwrap();
        let polys = chain.polynomials();
        assert_eq!(polys[1], q.derivative());
        for w in polys.windows(3) {
            assert_eq!(w[2], -&w[0].rem(&w[1]).unwrap());
        }
        let (lo, hi) = positive();
        assert_eq!(chain.count(&lo, &hi), 4);
    }

    #[test]
    fn square_free_decomposition_recovers_powers() {
        // (x - 1)^3 (x + 2)^2 (x - 5)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-1, 1]);
        let g = &p(&[2, 1]) * &p(&[2, 1]);
        let q = &(&f * &g) * &p(&[-5, 1]);
        let parts = square_free_decomposition(&q).unwrap();
        assert_eq!(
            parts,
            vec![(p(&[-5, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]
        );
        assert_eq!(pn_count(&q).unwrap(), PnPair::new(4, 2));
    }
}
