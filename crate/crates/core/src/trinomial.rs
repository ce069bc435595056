//! Positivity of trinomials `a x^alpha + b x^beta + c x^gamma` on `(0, inf)`.
//!
//! With `alpha < beta < gamma`, `a, c > 0` and `b < 0`, set
//! `A = a / (gamma - beta)`, `B = b / (alpha - gamma)`, `C = c / (beta - alpha)`
//! (all positive). The trinomial is positive on the whole half-line exactly when
//! `A^(gamma - beta) B^(alpha - gamma) C^(beta - alpha) > 1`, has a double root when
//! the product equals 1, and two simple positive roots otherwise.

use std::cmp::Ordering;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrinomialVerdict {
    PositiveOnAxis,
    DoubleRoot,
    TwoSimpleRoots,
}

impl TrinomialVerdict {
    /// Positive roots counted with multiplicity.
    pub fn positive_roots(self) -> usize {
        match self {
            TrinomialVerdict::PositiveOnAxis => 0,
            _ => 2,
        }
    }

    fn from_ordering(product_vs_one: Ordering) -> Self {
        match product_vs_one {
            Ordering::Greater => TrinomialVerdict::PositiveOnAxis,
            Ordering::Equal => TrinomialVerdict::DoubleRoot,
            Ordering::Less => TrinomialVerdict::TwoSimpleRoots,
        }
    }
}

/// `a x^alpha + b x^beta + c x^gamma` with real data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Trinomial {
    pub a: f64,
    pub alpha: f64,
    pub b: f64,
    pub beta: f64,
    pub c: f64,
    pub gamma: f64,
}

/// The normalized coefficients and the log of the criterion product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrinomialCriterion {
    pub big_a: f64,
    pub big_b: f64,
    pub big_c: f64,
    /// `(gamma - beta) ln A + (alpha - gamma) ln B + (beta - alpha) ln C`.
    pub log_product: f64,
    /// Sum of the absolute values of the three log terms.
    pub log_magnitude: f64,
}

impl TrinomialCriterion {
    /// Half-width of the band around 0 treated as the double-root boundary.
    pub fn boundary_tolerance(&self) -> f64 {
        1e-12 * (1.0 + self.log_magnitude)
    }

    pub fn verdict(&self) -> TrinomialVerdict {
        if self.log_product.abs() <= self.boundary_tolerance() {
            TrinomialVerdict::DoubleRoot
        } else {
            TrinomialVerdict::from_ordering(self.log_product.total_cmp(&0.0))
        }
    }
}

impl Trinomial {
    pub fn new(a: f64, alpha: f64, b: f64, beta: f64, c: f64, gamma: f64) -> Self {
        Trinomial {
            a,
            alpha,
            b,
            beta,
            c,
            gamma,
        }
    }

    fn check(&self) -> Result<()> {
        let all = [self.a, self.alpha, self.b, self.beta, self.c, self.gamma];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("trinomial data must be finite".into()));
        }
        if !(self.alpha < self.beta && self.beta < self.gamma) {
            return Err(Error::Domain("exponents must satisfy alpha < beta < gamma".into()));
        }
        if !(self.a > 0.0 && self.c > 0.0 && self.b < 0.0) {
            return Err(Error::Domain("coefficients must satisfy a > 0, b < 0, c > 0".into()));
        }
        Ok(())
    }

    pub fn criterion(&self) -> Result<TrinomialCriterion> {
        self.check()?;
        let (d1, d2, d3) = (
            self.gamma - self.beta,
            self.alpha - self.gamma,
            self.beta - self.alpha,
        );
        let big_a = self.a / d1;
        let big_b = self.b / d2;
        let big_c = self.c / d3;
        let terms = [d1 * big_a.ln(), d2 * big_b.ln(), d3 * big_c.ln()];
        Ok(TrinomialCriterion {
            big_a,
            big_b,
            big_c,
            log_product: terms[0] + terms[1] + terms[2],
            log_magnitude: terms.iter().map(|t| t.abs()).sum(),
        })
    }

    pub fn classify(&self) -> Result<TrinomialVerdict> {
        Ok(self.criterion()?.verdict())
    }

    /// Location of the double root from each of the three closed forms
    /// `(C/B)^(1/(beta-gamma))`, `(A/C)^(1/(gamma-alpha))`, `(B/A)^(1/(alpha-beta))`.
    pub fn double_root_candidates(&self) -> Result<[f64; 3]> {
        let k = self.criterion()?;
        Ok([
            (k.big_c / k.big_b).powf(1.0 / (self.beta - self.gamma)),
            (k.big_a / k.big_c).powf(1.0 / (self.gamma - self.alpha)),
            (k.big_b / k.big_a).powf(1.0 / (self.alpha - self.beta)),
        ])
    }

    /// The double root; errors unless the criterion sits on the boundary and the three
    /// closed forms agree.
    pub fn double_root_location(&self) -> Result<f64> {
        if self.classify()? != TrinomialVerdict::DoubleRoot {
            return Err(Error::NotDoubleRoot);
        }
        let xs = self.double_root_candidates()?;
        let spread = xs.iter().fold(0.0f64, |m, x| m.max((x - xs[0]).abs()));
        if spread > 1e-9 * xs[0] {
            return Err(Error::Domain(format!("double-root formulas disagree: {xs:?}")));
        }
        Ok(xs[0])
    }
}

pub fn classify_trinomial(a: f64, alpha: f64, b: f64, beta: f64, c: f64, gamma: f64) -> Result<TrinomialVerdict> {
    Trinomial::new(a, alpha, b, beta, c, gamma).classify()
}

pub fn double_root_location(a: f64, alpha: f64, b: f64, beta: f64, c: f64, gamma: f64) -> Result<f64> {
    Trinomial::new(a, alpha, b, beta, c, gamma).double_root_location()
}

/// Trinomial with exact rational data.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactTrinomial {
    pub a: BigRational,
    pub alpha: BigRational,
    pub b: BigRational,
    pub beta: BigRational,
    pub c: BigRational,
    pub gamma: BigRational,
}

/// Largest total integer power the exact comparison is willing to form.
pub const EXACT_POWER_LIMIT: u64 = 4096;

impl ExactTrinomial {
    pub fn from_integers(a: i64, alpha: i64, b: i64, beta: i64, c: i64, gamma: i64) -> Self {
        ExactTrinomial {
            a: rat(a),
            alpha: rat(alpha),
            b: rat(b),
            beta: rat(beta),
            c: rat(c),
            gamma: rat(gamma),
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.alpha < self.beta && self.beta < self.gamma) {
            return Err(Error::Domain("exponents must satisfy alpha < beta < gamma".into()));
        }
        if !(self.a.is_positive() && self.c.is_positive() && self.b.is_negative()) {
            return Err(Error::Domain("coefficients must satisfy a > 0, b < 0, c > 0".into()));
        }
        Ok(())
    }

    pub fn to_f64(&self) -> Trinomial {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        Trinomial::new(f(&self.a), f(&self.alpha), f(&self.b), f(&self.beta), f(&self.c), f(&self.gamma))
    }

    /// Compares `A^(gamma-beta) C^(beta-alpha)` with `B^(gamma-alpha)` using integer
    /// powers after clearing the exponent denominators. `None` when the powers would
    /// exceed [`EXACT_POWER_LIMIT`].
    pub fn classify_exact(&self) -> Result<Option<TrinomialVerdict>> {
        self.check()?;
        let d1 = &self.gamma - &self.beta;
        let d3 = &self.beta - &self.alpha;
        let lcm = d1.denom().lcm(d3.denom());
        let to_power = |d: &BigRational| -> Option<u64> {
            (d.numer() * (&lcm / d.denom())).to_u64()
        };
        let (Some(e1), Some(e3)) = (to_power(&d1), to_power(&d3)) else {
            return Ok(None);
        };
        if e1 + e3 > EXACT_POWER_LIMIT {
            return Ok(None);
        }
        let big_a = &self.a / &d1;
        let big_b = &self.b / (&self.alpha - &self.gamma);
        let big_c = &self.c / &d3;
        let pow = |r: &BigRational, e: u64| num_traits::pow(r.clone(), e as usize);
        let lhs = pow(&big_a, e1) * pow(&big_c, e3);
        let rhs = pow(&big_b, e1 + e3);
        Ok(Some(TrinomialVerdict::from_ordering(lhs.cmp(&rhs))))
    }

    /// Exact verdict when available, floating-point criterion otherwise.
    pub fn classify(&self) -> Result<TrinomialVerdict> {
        match self.classify_exact()? {
            Some(v) => Ok(v),
            None => self.to_f64().classify(),
        }
    }
}

/// Exponent patterns with a classical discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiscriminantPattern {
    /// `(0, 1, 2)`: `b^2 - 4ac`
    P012,
    /// `(0, 1, 3)`: `-c (4 b^3 + 27 c a^2)`
    P013,
    /// `(0, 1, 4)`: `c^2 (-27 b^4 + 256 c a^3)`
    P014,
    /// `(0, 2, 4)`: `16 a c (4 c a - b^2)^2`
    P024,
}

impl DiscriminantPattern {
    pub const ALL: [DiscriminantPattern; 4] = [
        DiscriminantPattern::P012,
        DiscriminantPattern::P013,
        DiscriminantPattern::P014,
        DiscriminantPattern::P024,
    ];

    pub fn exponents(self) -> [i64; 3] {
        match self {
            DiscriminantPattern::P012 => [0, 1, 2],
            DiscriminantPattern::P013 => [0, 1, 3],
            DiscriminantPattern::P014 => [0, 1, 4],
            DiscriminantPattern::P024 => [0, 2, 4],
        }
    }

    pub fn from_exponents(e: &[i64]) -> Result<Self> {
        match e {
            [0, 1, 2] => Ok(DiscriminantPattern::P012),
            [0, 1, 3] => Ok(DiscriminantPattern::P013),
            [0, 1, 4] => Ok(DiscriminantPattern::P014),
            [0, 2, 4] => Ok(DiscriminantPattern::P024),
            other => Err(Error::UnsupportedPattern(other.to_vec())),
        }
    }

    /// The classical discriminant of `a + b x^beta + c x^gamma`.
    pub fn discriminant(self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        match self {
            DiscriminantPattern::P012 => b * b - rat(4) * a * c,
            DiscriminantPattern::P013 => -c * (rat(4) * b * b * b + rat(27) * c * a * a),
            DiscriminantPattern::P014 => {
                c * c * (rat(-27) * b * b * b * b + rat(256) * c * a * a * a)
            }
            DiscriminantPattern::P024 => {
                let f = rat(4) * c * a - b * b;
                rat(16) * a * c * &f * &f
            }
        }
    }

    /// The factor whose sign decides positivity: the discriminant itself, except for
    /// `(0, 2, 4)` where the discriminant is a square times `16ac` and the decisive
    /// factor is `4ca - b^2`.
    pub fn main_factor(self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        match self {
            DiscriminantPattern::P024 => rat(4) * c * a - b * b,
            _ => self.discriminant(a, b, c),
        }
    }

    /// The verdict implied by the sign of the main factor.
    pub fn verdict_from_sign(self, sign: Ordering) -> TrinomialVerdict {
        // For (0,1,2) and (0,1,3), a negative discriminant means a complex pair and
        // no positive root; for (0,1,4) and the (0,2,4) factor the sign is reversed.
        let positive_when = match self {
            DiscriminantPattern::P012 | DiscriminantPattern::P013 => Ordering::Less,
            DiscriminantPattern::P014 | DiscriminantPattern::P024 => Ordering::Greater,
        };
        if sign == Ordering::Equal {
            TrinomialVerdict::DoubleRoot
        } else if sign == positive_when {
            TrinomialVerdict::PositiveOnAxis
        } else {
            TrinomialVerdict::TwoSimpleRoots
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantCrosscheck {
    pub pattern: DiscriminantPattern,
    pub criterion_verdict: TrinomialVerdict,
    pub discriminant: f64,
    pub discriminant_sign: i8,
    pub main_factor_sign: i8,
    pub discriminant_verdict: TrinomialVerdict,
    pub agree: bool,
}

fn sign_i8(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Evaluates the criterion and the classical discriminant side by side.
pub fn discriminant_crosscheck(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    pattern: DiscriminantPattern,
) -> Result<DiscriminantCrosscheck> {
    let [alpha, beta, gamma] = pattern.exponents();
    let t = ExactTrinomial {
        a: a.clone(),
        alpha: rat(alpha),
        b: b.clone(),
        beta: rat(beta),
        c: c.clone(),
        gamma: rat(gamma),
    };
    let criterion_verdict = t.classify()?;
    let disc = pattern.discriminant(a, b, c);
    let main = pattern.main_factor(a, b, c);
    let main_sign = main.cmp(&BigRational::zero());
    let discriminant_verdict = pattern.verdict_from_sign(main_sign);
    Ok(DiscriminantCrosscheck {
        pattern,
        criterion_verdict,
        discriminant: disc.to_f64().unwrap_or(f64::NAN),
        discriminant_sign: sign_i8(disc.cmp(&BigRational::zero())),
        main_factor_sign: sign_i8(main_sign),
        discriminant_verdict,
        agree: criterion_verdict == discriminant_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use TrinomialVerdict::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn classifies_quadratics() {
        assert_eq!(classify_trinomial(1.0, 0.0, -1.0, 1.0, 1.0, 2.0).unwrap(), PositiveOnAxis);
        assert_eq!(classify_trinomial(2.0, 0.0, -3.0, 1.0, 1.0, 2.0).unwrap(), TwoSimpleRoots);
        assert_eq!(classify_trinomial(4.0, 0.0, -4.0, 1.0, 1.0, 2.0).unwrap(), DoubleRoot);
    }

    #[test]
    fn criterion_values() {
        let k = Trinomial::new(1.0, 0.0, -1.0, 1.0, 1.0, 2.0).criterion().unwrap();
        assert_eq!((k.big_a, k.big_b, k.big_c), (1.0, 0.5, 1.0));
        assert!((k.log_product - 4f64.ln()).abs() < 1e-15);
        let k = Trinomial::new(2.0, 0.0, -3.0, 1.0, 1.0, 2.0).criterion().unwrap();
        assert!((k.log_product - (8.0f64 / 9.0).ln()).abs() < 1e-15);
    }

    #[test]
    fn exact_path() {
        assert_eq!(ExactTrinomial::from_integers(1, 0, -1, 1, 1, 2).classify_exact().unwrap(), Some(PositiveOnAxis));
        assert_eq!(ExactTrinomial::from_integers(2, 0, -3, 1, 1, 2).classify_exact().unwrap(), Some(TwoSimpleRoots));
        assert_eq!(ExactTrinomial::from_integers(4, 0, -4, 1, 1, 2).classify_exact().unwrap(), Some(DoubleRoot));
        let half = BigRational::new(int(1), int(2));
        let t = ExactTrinomial {
            a: rat(1),
            alpha: rat(0),
            b: rat(-2),
            beta: half,
            c: rat(1),
            gamma: rat(1),
        };
        assert_eq!(t.classify_exact().unwrap(), Some(DoubleRoot));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(classify_trinomial(1.0, 0.0, 1.0, 1.0, 1.0, 2.0), Err(Error::Domain(_))));
        assert!(matches!(classify_trinomial(1.0, 1.0, -1.0, 0.0, 1.0, 2.0), Err(Error::Domain(_))));
        assert!(matches!(double_root_location(1.0, 0.0, -1.0, 1.0, 1.0, 2.0), Err(Error::NotDoubleRoot)));
    }

    #[test]
    fn double_roots() {
        assert!((double_root_location(4.0, 0.0, -4.0, 1.0, 1.0, 2.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((double_root_location(1.0, 0.0, -2.0, 1.0, 1.0, 2.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((double_root_location(1.0, 0.0, -2.0, 0.5, 1.0, 1.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn discriminant_examples() {
        let r = |n: i64| rat(n);
        let x = discriminant_crosscheck(&r(1), &r(-1), &r(1), DiscriminantPattern::P012).unwrap();
        assert_eq!(x.discriminant, -3.0);
        assert_eq!(x.criterion_verdict, PositiveOnAxis);
        assert!(x.agree);

        let x = discriminant_crosscheck(&r(2), &r(-3), &r(1), DiscriminantPattern::P012).unwrap();
        assert_eq!(x.discriminant, 1.0);
        assert_eq!(x.criterion_verdict, TwoSimpleRoots);
        assert!(x.agree);

        let x = discriminant_crosscheck(&r(1), &r(-1), &r(1), DiscriminantPattern::P013).unwrap();
        assert_eq!(x.discriminant, -23.0);
        assert!(x.agree);

        assert_eq!(
            DiscriminantPattern::from_exponents(&[0, 1, 5]),
            Err(Error::UnsupportedPattern(vec![0, 1, 5]))
        );
    }
}
