//! Random instance generators shared by the integration targets.
#![allow(dead_code)]

use descartes_core::{RationalPolynomial, RootEntry, RootMultiset, Sign, SignSequence};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random admissible witness problem.
#[derive(Debug, Clone)]
pub struct WitnessInstance {
    pub signs: SignSequence,
    pub exponents: Vec<f64>,
    pub target: RootMultiset,
}

/// Sorted exponents in `[0, 10]` with pairwise gaps of at least `min_gap`.
pub fn spaced_exponents<R: Rng>(rng: &mut R, count: usize, min_gap: f64) -> Vec<f64> {
    // Place `count` points in a range shortened by the mandatory gaps, then re-insert them.
    let slack = 10.0 - min_gap * (count as f64 - 1.0);
    let mut u: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..=slack)).collect();
    u.sort_by(f64::total_cmp);
    u.iter().enumerate().map(|(i, v)| v + min_gap * i as f64).collect()
}

/// Distinct abscissas in `[0.1, 10]` whose consecutive ratios are at least `1 + min_rel_gap`.
pub fn spaced_abscissas<R: Rng>(rng: &mut R, count: usize, min_rel_gap: f64) -> Vec<f64> {
    let (lo, hi) = (0.1f64.ln(), 10f64.ln());
    let gap = min_rel_gap.ln_1p();
    let slack = hi - lo - gap * (count as f64 - 1.0);
    let mut u: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..=slack)).collect();
    u.sort_by(f64::total_cmp);
    u.iter()
        .enumerate()
        .map(|(i, v)| (lo + v + gap * i as f64).exp())
        .collect()
}

pub fn random_signs<R: Rng>(rng: &mut R, len: usize) -> SignSequence {
    SignSequence::new(
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect(),
    )
    .unwrap()
}

/// `n <= max_n` (term count `n + 1`), exponent gap 0.05, abscissas in `[0.1, 10]`, and a
/// root of multiplicity 2 or 3 in 10% of the instances.
pub fn witness_instance<R: Rng>(rng: &mut R, max_n: usize) -> WitnessInstance {
    let repeated = rng.gen_bool(0.1);
    let (signs, p) = loop {
        let n = rng.gen_range(1..=max_n);
        let signs = random_signs(rng, n + 1);
        let k = signs.variations();
        let min_p = if repeated { 2 } else { 0 };
        let choices: Vec<usize> = (0..=k).rev().step_by(2).filter(|&p| p >= min_p).collect();
        if let Some(&p) = choices.choose(rng) {
            break (signs, p);
        }
    };
    let mut mults = vec![1u32; p];
    if repeated {
        let m = rng.gen_range(2..=3.min(p as u32));
        mults.truncate(p - m as usize + 1);
        let slot = rng.gen_range(0..mults.len());
        mults[slot] = m;
    }
    let xs = spaced_abscissas(rng, mults.len(), 0.05);
    let target = RootMultiset::new(
        xs.iter()
            .zip(&mults)
            .map(|(&x, &multiplicity)| RootEntry { x, multiplicity })
            .collect(),
    )
    .unwrap();
    let exponents = spaced_exponents(rng, signs.len(), 0.05);
    WitnessInstance {
        signs,
        exponents,
        target,
    }
}

/// A random rational in `num / den` form with `|num| <= max_num`, `1 <= den <= max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-max_num..=max_num)),
        BigInt::from(rng.gen_range(1..=max_den)),
    )
}

/// Degree `<= max_degree`, non-zero constant term, other coefficients zero with
/// probability 1/5.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> RationalPolynomial {
    loop {
        let d = rng.gen_range(0..=max_degree);
        let coefficients: Vec<BigRational> = (0..=d)
            .map(|i| {
                if i > 0 && rng.gen_bool(0.2) {
                    BigRational::zero()
                } else {
                    random_rational(rng, 1000, 100)
                }
            })
            .collect();
        let p = RationalPolynomial::new(coefficients);
        if !p.is_zero() && !p.constant_term().is_zero() {
            return p;
        }
    }
}

/// A positive rational `num / den` with `1 <= num <= max_num`, `1 <= den <= max_den`.
pub fn positive_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(1..=max_num)),
        BigInt::from(rng.gen_range(1..=max_den)),
    )
}

/// Coefficients `(a, b, c)` with `a, c > 0 > b` for `a + b x^beta + c x^gamma`.
///
/// One instance in ten sits exactly on the double-root boundary: for a rational
/// `r > 0`, `b = -gamma c r^(gamma - beta) / beta` and `a = c r^gamma (gamma / beta - 1)`
/// make `r` a double root.
pub fn random_trinomial<R: Rng>(
    rng: &mut R,
    beta: i64,
    gamma: i64,
) -> (BigRational, BigRational, BigRational) {
    let c = positive_rational(rng, 50, 10);
    if rng.gen_bool(0.1) {
        let r = positive_rational(rng, 5, 5);
        let (bq, gq) = (BigRational::from_integer(beta.into()), BigRational::from_integer(gamma.into()));
        let b = -(&gq * &c * num_traits::pow(r.clone(), (gamma - beta) as usize)) / &bq;
        let a = &c * num_traits::pow(r, gamma as usize) * (&gq / &bq - BigRational::one());
        (a, b, c)
    } else {
        (positive_rational(rng, 50, 10), -positive_rational(rng, 50, 10), c)
    }
}
