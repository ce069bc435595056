//! Primitive integer polynomials and a pseudo-remainder Sturm chain.
//!
//! Every element of the chain is a positive multiple of the corresponding element of
//! the textbook rational Sturm chain, so sign patterns (and hence root counts) are the
//! same while coefficients stay integral and content-free.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Divides by the (positive) gcd of the coefficients.
pub(crate) fn make_primitive(p: IntPoly) -> IntPoly {
    let p = trim(p);
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() || content.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

pub(crate) fn primitive_from_rationals(coefficients: &[BigRational]) -> IntPoly {
    let lcm = coefficients
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    make_primitive(
        coefficients
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect(),
    )
}

pub(crate) fn derivative(p: &[BigInt]) -> IntPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// A positive multiple of the Euclidean remainder of `a` by `b`.
fn positive_pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: IntPoly = a.to_vec();
    let mut steps = 0u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lead * bj;
        }
        steps += 1;
        r = trim(r);
    }
    if lc.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -c.clone();
        }
    }
    r
}

/// `p, p', -rem, ...` with every element primitive; `p` must be non-zero.
pub(crate) fn sturm_chain(p: &[BigInt]) -> Vec<IntPoly> {
    let mut chain = vec![make_primitive(p.to_vec())];
    let d = make_primitive(derivative(p));
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = positive_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(make_primitive(r.into_iter().map(|c| -c).collect()));
    }
    chain
}

/// Sign of `p(num/den)` for `den > 0`.
fn sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> Ordering {
    // Homogenized Horner: sum c_i num^i den^(deg - i).
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    acc.cmp(&BigInt::zero())
}

/// Endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

/// Sign of `p` immediately to the right of the bound (or at the infinite end).
pub(crate) fn sign_right_of(p: &[BigInt], at: &Bound) -> Ordering {
    if p.is_empty() {
        return Ordering::Equal;
    }
    let deg = p.len() - 1;
    let lc_sign = p[deg].cmp(&BigInt::zero());
    match at {
        Bound::PosInfinity => lc_sign,
        Bound::NegInfinity => {
            if deg % 2 == 0 {
                lc_sign
            } else {
                lc_sign.reverse()
            }
        }
        Bound::Finite(x) => {
            let mut q = p.to_vec();
            loop {
                let s = sign_at(&q, x.numer(), x.denom());
                if s != Ordering::Equal || q.len() <= 1 {
                    return s;
                }
                q = derivative(&q);
            }
        }
    }
}

fn variations_right_of(chain: &[IntPoly], at: &Bound) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|q| sign_right_of(q, at))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in `(lo, hi]`.
pub(crate) fn count_distinct(chain: &[IntPoly], lo: &Bound, hi: &Bound) -> usize {
    let a = variations_right_of(chain, lo);
    let b = variations_right_of(chain, hi);
    a.saturating_sub(b)
}
