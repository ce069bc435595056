use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::sign::{Sign, SignSequence};
use super::signomial::{Signomial, Term};
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coefficients[i]` multiplies `x^i`. Trailing zeros are trimmed, so a non-zero
/// polynomial always has a non-zero leading coefficient; the zero polynomial has
/// no coefficients at all. Interior zeros (gaps) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        RationalPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| rat(c)).collect())
    }

    /// `x^degree * c`.
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); degree];
        coefficients.push(c);
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coefficients.last()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(0)
    }

    /// True when every coefficient from degree 0 to the leading one is non-zero.
    pub fn is_dense(&self) -> bool {
        !self.is_zero() && self.coefficients.iter().all(|c| !c.is_zero())
    }

    /// Signs of the non-zero coefficients, constant term first.
    pub fn sign_sequence(&self) -> Option<SignSequence> {
        let signs: Vec<Sign> = self
            .coefficients
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| if c.is_positive() { Sign::Plus } else { Sign::Minus })
            .collect();
        SignSequence::new(signs).ok()
    }

    /// Exponents carrying non-zero coefficients.
    pub fn support(&self) -> Vec<i64> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i as i64)
            .collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn negate_x(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `x^n p(1/x)` where `n` is the degree; the constant term must be non-zero
    /// for the degree to be preserved.
    pub fn reverse(&self) -> Self {
        Self::new(self.coefficients.iter().rev().cloned().collect())
    }

    /// Splits into even-exponent and odd-exponent parts; `even + odd == self`.
    pub fn split_even_odd(&self) -> (Self, Self) {
        let pick = |parity: usize| {
            Self::new(
                self.coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == parity { c.clone() } else { BigRational::zero() })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading_coefficient().expect("non-zero").clone();
        let mut rem = self.coefficients.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let factor = &rem[i + dd] / &lc;
            if !factor.is_zero() {
                for (j, d) in divisor.coefficients.iter().enumerate() {
                    rem[i + j] -= &factor * d;
                }
            }
            quot[i] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is non-zero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Domain("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    /// `x^{alpha+1} (x^{-alpha} p)'`, the integer-exponent de Gua–Laguerre step.
    ///
    /// Returns `(shift, q)` such that `(x^{-alpha} p)' = x^{shift} q` with
    /// `shift = -alpha - 1`. Coefficient `i` becomes `a_i (i - alpha)`. Errors when
    /// `alpha` lands on a non-zero coefficient, which would cancel that term.
    pub fn gua_laguerre_step(&self, alpha: i64) -> Result<(i64, Self)> {
        if alpha >= 0 && !self.coefficient(alpha as usize).is_zero() {
            return Err(Error::DegenerateTerm {
                exponent: alpha as f64,
            });
        }
        let q = Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 - alpha))
                .collect(),
        );
        Ok((-alpha - 1, q))
    }

    /// Floating-point view with integer exponents; zero coefficients are omitted.
    pub fn to_signomial(&self) -> Result<Signomial> {
        Signomial::new(
            self.coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| Term {
                    exponent: i as f64,
                    coefficient: c.to_f64().unwrap_or(f64::NAN),
                })
                .collect(),
        )
    }

    /// Primitive integer polynomial with the same roots and a positive multiple of `self`.
    pub fn to_primitive_integers(&self) -> Vec<BigInt> {
        crate::rootcount::intpoly::primitive_from_rationals(&self.coefficients)
    }

    pub fn from_integers(coefficients: Vec<BigInt>) -> Self {
        Self::new(coefficients.into_iter().map(BigRational::from_integer).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

pub fn split_even_odd(p: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
    p.split_even_odd()
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// On-disk form: `{"exponents": [...], "coefficients": ["num/den", ...]}`, listing the
/// non-zero terms only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalRecord {
    pub exponents: Vec<u32>,
    pub coefficients: Vec<String>,
}

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"n/d"`, `"n"` and finite decimal literals such as `"-0.125"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(n, d);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

impl From<&RationalPolynomial> for RationalRecord {
    fn from(p: &RationalPolynomial) -> Self {
        let mut exponents = Vec::new();
        let mut coefficients = Vec::new();
        for (i, c) in p.coefficients.iter().enumerate() {
            if !c.is_zero() {
                exponents.push(i as u32);
                coefficients.push(format_rational(c));
            }
        }
        RationalRecord {
            exponents,
            coefficients,
        }
    }
}

impl TryFrom<RationalRecord> for RationalPolynomial {
    type Error = Error;
    fn try_from(r: RationalRecord) -> Result<Self> {
        if r.exponents.len() != r.coefficients.len() {
            return Err(Error::LengthMismatch {
                expected: r.exponents.len(),
                got: r.coefficients.len(),
            });
        }
        let degree = r.exponents.iter().copied().max().unwrap_or(0) as usize;
        let mut coefficients = vec![BigRational::zero(); degree + 1];
        for (e, c) in r.exponents.iter().zip(&r.coefficients) {
            let slot = &mut coefficients[*e as usize];
            if !slot.is_zero() {
                return Err(Error::Parse(format!("exponent {e} listed twice")));
            }
            *slot = parse_rational(c)?;
        }
        Ok(RationalPolynomial::new(coefficients))
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RationalRecord::deserialize(d)?;
        RationalPolynomial::try_from(r).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn splits_even_and_odd_parts() {
        assert_eq!(split_even_odd(&p(&[1, 0, 1, 1])), (p(&[1, 0, 1]), p(&[0, 0, 0, 1])));
        assert_eq!(p(&[2, -3, 1]).split_even_odd(), (p(&[2, 0, 1]), p(&[0, -3])));
        let (even, odd) = p(&[5]).split_even_odd();
        assert_eq!(even, p(&[5]));
        assert!(odd.is_zero());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = p(&[1, -1]);
        let b = p(&[2, -1]);
        assert_eq!(&a * &b, p(&[2, -3, 1]));
        assert_eq!(&(&a * &b) - &p(&[2, -3, 1]), RationalPolynomial::zero());
        let (q, r) = p(&[2, -3, 1]).div_rem(&a).unwrap();
        assert_eq!(q, p(&[2, -1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-2, 1, 1]).gcd(&p(&[-1, 0, 1])), p(&[-1, 1]));
    }

    #[test]
    fn division_by_zero_polynomial_is_an_error() {
        assert_eq!(p(&[1, 1]).div_rem(&RationalPolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn transforms_of_polynomials() {
        assert_eq!(p(&[1, 2, 3]).negate_x(), p(&[1, -2, 3]));
        assert_eq!(p(&[1, 2, 3]).reverse(), p(&[3, 2, 1]));
    }

    #[test]
    fn exact_gua_laguerre_step() {
        // x^{-1}(2 - 3x + x^2) has derivative -2x^{-2} + 1 = x^{-2}(-2 + x^2)
        let (shift, q) = p(&[2, 0, 1]).gua_laguerre_step(1).unwrap();
        assert_eq!(shift, -2);
        assert_eq!(q, p(&[-2, 0, 1]));
        assert!(matches!(
            p(&[2, -3, 1]).gua_laguerre_step(1),
            Err(Error::DegenerateTerm { .. })
        ));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -3, 1]).to_string(), "2 - 3x + x^2");
        assert_eq!(p(&[0, -1, 0, 5]).to_string(), "-x + 5x^3");
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("-0.125").unwrap(), BigRational::new((-1).into(), 8.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn serializes_num_den_strings() {
        let q = RationalPolynomial::new(vec![BigRational::new(1.into(), 2.into()), rat(0), rat(-3)]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"exponents":[0,2],"coefficients":["1/2","-3/1"]}"#);
        assert_eq!(serde_json::from_str::<RationalPolynomial>(&json).unwrap(), q);
    }
}
