use std::fmt;

use serde::{Deserialize, Serialize};

use super::sign::{Sign, SignSequence};
use crate::error::{Error, Result};
use crate::numeric::{falling_factorial, neumaier_sum};

/// A single term `coefficient * x^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: f64,
    pub coefficient: f64,
}

/// A finite sum of terms `a_i x^{alpha_i}` with real exponents, defined on `(0, inf)`.
///
/// Exponents are strictly increasing and every coefficient is a non-zero finite number.
#[derive(Debug, Clone, PartialEq)]
pub struct Signomial {
    terms: Vec<Term>,
}

impl Signomial {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySignomial);
        }
        for (i, t) in terms.iter().enumerate() {
            if !t.exponent.is_finite() {
                return Err(Error::NonIncreasingExponents { index: i });
            }
            if t.coefficient == 0.0 || !t.coefficient.is_finite() {
                return Err(Error::InvalidCoefficient { index: i });
            }
            if i > 0 && terms[i - 1].exponent >= t.exponent {
                return Err(Error::NonIncreasingExponents { index: i });
            }
        }
        Ok(Signomial { terms })
    }

    /// Pairs exponents with coefficients; both slices must have the same length.
    pub fn from_parts(exponents: &[f64], coefficients: &[f64]) -> Result<Self> {
        if exponents.len() != coefficients.len() {
            return Err(Error::LengthMismatch {
                expected: exponents.len(),
                got: coefficients.len(),
            });
        }
        Self::new(
            exponents
                .iter()
                .zip(coefficients)
                .map(|(&exponent, &coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        )
    }

    /// Integer-exponent polynomial from dense coefficients; zero entries are skipped.
    pub fn from_dense(coefficients: &[f64]) -> Result<Self> {
        Self::new(
            coefficients
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0.0)
                .map(|(i, &c)| Term {
                    exponent: i as f64,
                    coefficient: c,
                })
                .collect(),
        )
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponents(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.exponent).collect()
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.coefficient).collect()
    }

    pub fn sign_sequence(&self) -> SignSequence {
        SignSequence::new(
            self.terms
                .iter()
                .map(|t| Sign::of_f64(t.coefficient).expect("coefficients are non-zero"))
                .collect(),
        )
        .expect("signomials are non-empty")
    }

    /// `Y(x)` for `x > 0`, summed with Neumaier compensation.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        self.derivative_at(x, 0)
    }

    /// The `order`-th derivative at `x > 0`, computed term-wise.
    pub fn derivative_at(&self, x: f64, order: u32) -> Result<f64> {
        check_abscissa(x)?;
        Ok(neumaier_sum(self.terms.iter().map(|t| {
            t.coefficient * falling_factorial(t.exponent, order) * x.powf(t.exponent - order as f64)
        })))
    }

    /// `sum |a_i * falling(alpha_i, order) * x^(alpha_i - order)|`: the natural scale
    /// against which a derivative value is judged to be zero.
    pub fn derivative_magnitude(&self, x: f64, order: u32) -> Result<f64> {
        check_abscissa(x)?;
        Ok(neumaier_sum(self.terms.iter().map(|t| {
            (t.coefficient * falling_factorial(t.exponent, order)).abs()
                * x.powf(t.exponent - order as f64)
        })))
    }

    /// Value at `x = e^t`, divided by the largest term magnitude.
    ///
    /// Returns `(scaled, log_scale)` with `Y(e^t) = scaled * e^log_scale`; the sign of
    /// `scaled` is the sign of `Y` and no intermediate overflows for any finite `t`.
    pub fn evaluate_log_scaled(&self, t: f64) -> (f64, f64) {
        let log_scale = self
            .terms
            .iter()
            .map(|term| term.coefficient.abs().ln() + term.exponent * t)
            .fold(f64::NEG_INFINITY, f64::max);
        let scaled = neumaier_sum(self.terms.iter().map(|term| {
            term.coefficient.signum()
                * (term.coefficient.abs().ln() + term.exponent * t - log_scale).exp()
        }));
        (scaled, log_scale)
    }

    /// Multiplies every coefficient by `factor` (non-zero).
    pub fn scale(&self, factor: f64) -> Result<Signomial> {
        Signomial::new(
            self.terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent,
                    coefficient: t.coefficient * factor,
                })
                .collect(),
        )
    }

    /// `(x^{-alpha_0} Y)'`: drops the lowest term and lowers the others by one power.
    ///
    /// Has the same positive critical structure as `Y` up to the factor `x^{-alpha_0}`.
    /// Returns `None` for a single-term signomial.
    pub fn drop_lowest_derivative(&self) -> Option<Signomial> {
        if self.terms.len() < 2 {
            return None;
        }
        let base = self.terms[0].exponent;
        let terms = self.terms[1..]
            .iter()
            .map(|t| Term {
                exponent: t.exponent - base - 1.0,
                coefficient: t.coefficient * (t.exponent - base),
            })
            .collect();
        Some(Signomial::new(terms).expect("lowered terms stay increasing and non-zero"))
    }
}

pub(crate) fn check_abscissa(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("signomials are evaluated on (0, inf); got x = {x}")))
    }
}

/// Sum of the terms at `x > 0`.
pub fn evaluate(y: &Signomial, x: f64) -> Result<f64> {
    y.evaluate(x)
}

pub fn sign_sequence_of(y: &Signomial) -> SignSequence {
    y.sign_sequence()
}

impl fmt::Display for Signomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let c = t.coefficient;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c < 0.0 {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if t.exponent != 0.0 {
                write!(f, "*x^{}", t.exponent)?;
            }
        }
        Ok(())
    }
}

/// On-disk form: `{"exponents": [...], "coefficients": [...]}` with decimal literals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignomialRecord {
    pub exponents: Vec<f64>,
    pub coefficients: Vec<f64>,
}

impl From<&Signomial> for SignomialRecord {
    fn from(y: &Signomial) -> Self {
        SignomialRecord {
            exponents: y.exponents(),
            coefficients: y.coefficients(),
        }
    }
}

impl TryFrom<SignomialRecord> for Signomial {
    type Error = Error;
    fn try_from(r: SignomialRecord) -> Result<Self> {
        Signomial::from_parts(&r.exponents, &r.coefficients)
    }
}

impl Serialize for Signomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignomialRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Signomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SignomialRecord::deserialize(d)?;
        Signomial::try_from(r).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_terms() {
        let y = Signomial::from_dense(&[1.0, -1.0, 1.0]).unwrap();
        assert_eq!(evaluate(&y, 1.0).unwrap(), 1.0);

        let y = Signomial::from_dense(&[120.0, 2.0, -179.0, 4.0, 71.0, -18.0]).unwrap();
        assert_eq!(y.evaluate(2.0).unwrap(), 0.0);

        let y = Signomial::from_parts(&[0.5, 1.5], &[1.0, -1.0]).unwrap();
        assert_eq!(y.evaluate(1.0).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_positive_abscissa() {
        let y = Signomial::from_dense(&[1.0, 1.0]).unwrap();
        assert!(matches!(y.evaluate(0.0), Err(Error::Domain(_))));
        assert!(matches!(y.evaluate(-1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn validates_terms() {
        assert_eq!(Signomial::new(vec![]), Err(Error::EmptySignomial));
        assert_eq!(
            Signomial::from_parts(&[1.0, 1.0], &[1.0, 2.0]),
            Err(Error::NonIncreasingExponents { index: 1 })
        );
        assert_eq!(
            Signomial::from_parts(&[0.0, 1.0], &[1.0, 0.0]),
            Err(Error::InvalidCoefficient { index: 1 })
        );
    }

    #[test]
    fn reads_sign_sequences() {
        let seq = |c: &[f64]| sign_sequence_of(&Signomial::from_dense(c).unwrap()).to_string();
        assert_eq!(seq(&[2.0, -3.0, 1.0]), "+-+");
        assert_eq!(seq(&[744.0, -1286.0, 559.0, 25.0, -44.0, 1.0, 1.0]), "+-++-++");
        assert_eq!(seq(&[216.0, -258.0, -37.0, 90.0, -1.0, -12.0, 2.0]), "+--+--+");
    }

    #[test]
    fn derivatives_are_termwise() {
        // 1 - x + x^2: Y' = -1 + 2x, Y'' = 2
        let y = Signomial::from_dense(&[1.0, -1.0, 1.0]).unwrap();
        assert_eq!(y.derivative_at(3.0, 1).unwrap(), 5.0);
        assert_eq!(y.derivative_at(3.0, 2).unwrap(), 2.0);
        assert_eq!(y.derivative_at(3.0, 3).unwrap(), 0.0);
    }

    #[test]
    fn log_scaled_evaluation_matches_direct() {
        let y = Signomial::from_parts(&[0.0, 1.3, 2.7], &[3.0, -5.0, 1.5]).unwrap();
        for &x in &[0.2, 1.0, 4.5] {
            let (s, l) = y.evaluate_log_scaled(f64::ln(x));
            let direct = y.evaluate(x).unwrap();
            assert!((s * l.exp() - direct).abs() < 1e-12 * (1.0 + direct.abs()));
        }
        let (s, l) = y.evaluate_log_scaled(500.0);
        assert!(s > 0.0 && l.is_finite());
    }

    #[test]
    fn drop_lowest_derivative_removes_a_term() {
        let y = Signomial::from_parts(&[0.5, 1.0, 2.0], &[1.0, -2.0, 1.0]).unwrap();
        let z = y.drop_lowest_derivative().unwrap();
        assert_eq!(z.exponents(), vec![-0.5, 0.5]);
        assert_eq!(z.coefficients(), vec![-1.0, 1.5]);
        let single = Signomial::from_dense(&[0.0, 3.0]).unwrap();
        assert!(single.drop_lowest_derivative().is_none());
    }

    #[test]
    fn serializes_as_record() {
        let y = Signomial::from_parts(&[0.0, 0.5], &[1.0, -2.5]).unwrap();
        let json = serde_json::to_string(&y).unwrap();
        assert_eq!(json, r#"{"exponents":[0.0,0.5],"coefficients":[1.0,-2.5]}"#);
        let back: Signomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, y);
        assert!(serde_json::from_str::<Signomial>(r#"{"exponents":[1,0],"coefficients":[1,1]}"#).is_err());
    }
}
