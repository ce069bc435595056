//! Constructed and randomly searched witnesses, each confirmed by exact counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::erased_pair;
use crate::poly::{PnPair, RationalPolynomial, Sign, SignSequence};
use crate::rootcount::pn_count;

/// Largest `s` tried for the scale `T = 2^s` of the erasing construction.
const MAX_LOG2_SCALE: u32 = 48;

fn pow2(e: i64) -> BigRational {
    let one = BigInt::one();
    if e >= 0 {
        BigRational::from_integer(one << e as usize)
    } else {
        BigRational::new(one.clone(), one << (-e) as usize)
    }
}

/// Exponents of `T` for each coefficient: `i (n - i)` on retained indices, and one
/// below the chord through the neighbouring retained indices on erased ones.
fn tropical_heights(n: usize, erased: &[usize]) -> Vec<i64> {
    let h = |i: usize| (i * (n - i)) as i64;
    let retained: Vec<usize> = (0..=n).filter(|i| !erased.contains(i)).collect();
    (0..=n)
        .map(|m| {
            if !erased.contains(&m) {
                return h(m);
            }
            let j = retained.partition_point(|&r| r < m);
            let (lo, hi) = (retained[j - 1], retained[j]);
            // floor of the chord value at m, exact in integers
            let num = h(lo) * (hi - m) as i64 + h(hi) * (m - lo) as i64;
            num.div_euclid((hi - lo) as i64) - 1
        })
        .collect()
}

/// `sum sigma_i T^{h_i} x^i` with `T = 2^s`.
///
/// The heights are strictly concave on the retained indices and put every erased index
/// strictly under the upper hull. For large `T` each hull edge `[i, j]` then carries
/// `j - i` roots close to those of the binomial `sigma_i T^{h_i} + sigma_j T^{h_j} x^{j-i}`,
/// which is exactly the count the erasing rule predicts. The smallest `s` whose exact
/// counts match is returned.
pub fn erasing_witness(seq: &SignSequence, erased: &[usize]) -> Option<(RationalPolynomial, u32)> {
    let n = seq.degree();
    if erased.iter().any(|&i| i == 0 || i >= n) {
        return None;
    }
    let target = erased_pair(seq, erased);
    let heights = tropical_heights(n, erased);
    (1..=MAX_LOG2_SCALE).find_map(|s| {
        let p = RationalPolynomial::new(
            seq.iter()
                .zip(&heights)
                .map(|(sign, &h)| {
                    let c = pow2(h * s as i64);
                    if sign == Sign::Plus {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        );
        (pn_count(&p).ok() == Some(target)).then_some((p, s))
    })
}

/// Which random generator produced a search hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    /// Coefficients with the prescribed signs and log-uniform magnitudes.
    Coefficients,
    /// A product of prescribed real roots and root-free quadratics.
    RootProduct,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub polynomial: RationalPolynomial,
    pub iteration: usize,
    pub sampler: Sampler,
}

/// FNV-1a mix of the table seed with a sequence and a pair; independent of the order
/// in which classifications run.
pub fn derive_seed(seed: u64, seq: &SignSequence, pair: PnPair) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    feed(&seed.to_le_bytes());
    feed(seq.to_string().as_bytes());
    feed(&(pair.p as u64).to_le_bytes());
    feed(&(pair.n as u64).to_le_bytes());
    h
}

/// `10^u` with `u` uniform in `[lo, hi]`, rounded to thousandths and kept non-zero.
fn log_uniform_thousandths<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> BigInt {
    let v = 10f64.powf(rng.gen_range(lo..=hi));
    BigInt::from(((v * 1000.0).round() as i64).max(1))
}

fn sample_coefficients<R: Rng>(rng: &mut R, seq: &SignSequence) -> RationalPolynomial {
    // a common factor 1/1000 does not change any count, so stay in integers
    RationalPolynomial::from_integers(
        seq.iter()
            .map(|s| {
                let m = log_uniform_thousandths(rng, -3.0, 3.0);
                if s == Sign::Plus {
                    m
                } else {
                    -m
                }
            })
            .collect(),
    )
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `prod (1000 x - r_i) prod (1000 x + s_j) prod q_l` with integer `r_i, s_j > 0` and
/// positive definite quadratics `q_l`; aligned with `seq` by an overall sign when
/// possible.
fn sample_root_product<R: Rng>(
    rng: &mut R,
    seq: &SignSequence,
    pair: PnPair,
) -> Option<RationalPolynomial> {
    let n = seq.degree();
    if pair.p + pair.n > n || (n - pair.p - pair.n) % 2 == 1 {
        return None;
    }
    let scale = BigInt::from(1000);
    let mut p = vec![BigInt::one()];
    for _ in 0..pair.p {
        let r = log_uniform_thousandths(rng, -1.5, 1.5);
        p = int_mul(&p, &[-r, scale.clone()]);
    }
    for _ in 0..pair.n {
        let r = log_uniform_thousandths(rng, -1.5, 1.5);
        p = int_mul(&p, &[r, scale.clone()]);
    }
    for _ in 0..(n - pair.p - pair.n) / 2 {
        // 1000 (x^2 - 2 rho cos(theta) x + rho^2), rounded
        let rho = 10f64.powf(rng.gen_range(-1.5..=1.5));
        let theta = rng.gen_range(0.0..std::f64::consts::PI);
        let c = BigInt::from(((rho * rho * 1000.0).round() as i64).max(1));
        let b = BigInt::from((-2.0 * rho * theta.cos() * 1000.0).round() as i64);
        if &b * &b >= BigInt::from(4000) * &c {
            return None;
        }
        p = int_mul(&p, &[c, b, scale.clone()]);
    }
    if p.iter().any(|c| c.is_zero()) {
        return None;
    }
    let positive: Vec<bool> = p.iter().map(|c| c.is_positive()).collect();
    let want: Vec<bool> = seq.iter().map(|s| s == Sign::Plus).collect();
    if positive == want {
        Some(RationalPolynomial::from_integers(p))
    } else if positive.iter().zip(&want).all(|(a, b)| a != b) {
        Some(RationalPolynomial::from_integers(p.into_iter().map(|c| -c).collect()))
    } else {
        None
    }
}

/// Random search for a dense polynomial with sign sequence `seq` and exactly the counts
/// `pair`. Even iterations sample coefficients directly, odd ones multiply out random
/// roots. Every candidate with the right signs is checked with [`pn_count`].
pub fn witness_search(seq: &SignSequence, pair: PnPair, budget: usize, seed: u64) -> Option<SearchHit> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for iteration in 0..budget {
        let (candidate, sampler) = if iteration % 2 == 0 {
            (Some(sample_coefficients(&mut rng, seq)), Sampler::Coefficients)
        } else {
            (sample_root_product(&mut rng, seq, pair), Sampler::RootProduct)
        };
        let Some(p) = candidate else { continue };
        if p.constant_term().is_zero() {
            continue;
        }
        if pn_count(&p).ok() == Some(pair) {
            return Some(SearchHit {
                polynomial: p,
                iteration,
                sampler,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSequence {
        s.parse().unwrap()
    }

    #[test]
    fn heights_sit_under_the_chord() {
        assert_eq!(tropical_heights(4, &[]), vec![0, 3, 4, 3, 0]);
        // chord from (0,0) to (2,4) is 2 at index 1
        assert_eq!(tropical_heights(4, &[1]), vec![0, 1, 4, 3, 0]);
        // chord from (0,0) to (4,0) is 0 everywhere
        assert_eq!(tropical_heights(4, &[1, 2, 3]), vec![0, -1, -1, -1, 0]);
    }

    #[test]
    fn erasing_witnesses_match_the_prediction() {
        let s = seq("+---+");
        for erased in [vec![], vec![1], vec![2], vec![1, 3], vec![1, 2, 3]] {
            let (p, _) = erasing_witness(&s, &erased).unwrap();
            assert_eq!(p.sign_sequence().unwrap(), s);
            assert_eq!(pn_count(&p).unwrap(), erased_pair(&s, &erased));
        }
        assert!(erasing_witness(&s, &[0]).is_none());
    }

    #[test]
    fn search_finds_easy_witnesses() {
        let hit = witness_search(&seq("+-+"), PnPair::new(2, 0), 1000, 7).unwrap();
        assert_eq!(pn_count(&hit.polynomial).unwrap(), PnPair::new(2, 0));
        assert_eq!(hit.polynomial.sign_sequence().unwrap(), seq("+-+"));
        assert!(witness_search(&seq("+---+"), PnPair::new(0, 2), 2000, 7).is_none());
    }

    #[test]
    fn seeds_depend_on_every_input() {
        let s = seq("+-+");
        let base = derive_seed(42, &s, PnPair::new(2, 0));
        assert_eq!(base, derive_seed(42, &s, PnPair::new(2, 0)));
        assert_ne!(base, derive_seed(43, &s, PnPair::new(2, 0)));
        assert_ne!(base, derive_seed(42, &s, PnPair::new(0, 0)));
        assert_ne!(base, derive_seed(42, &seq("++-"), PnPair::new(2, 0)));
    }
}
