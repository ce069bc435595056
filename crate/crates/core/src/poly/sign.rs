use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The sign of a non-zero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_f64(value: f64) -> Option<Sign> {
        if value > 0.0 {
            Some(Sign::Plus)
        } else if value < 0.0 {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.to_i8())
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// `(-1)^exponent` applied to this sign.
    pub fn twist(self, exponent: i64) -> Sign {
        if exponent.rem_euclid(2) == 1 {
            -self
        } else {
            self
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Ordered signs of the terms of an expression, lowest exponent first.
///
/// For a dense polynomial the first sign belongs to the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSequence(Vec<Sign>);

impl SignSequence {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(SignSequence(signs))
    }

    /// Builds a sequence from `+1`/`-1` integers.
    pub fn from_ints(values: &[i8]) -> Result<Self> {
        let signs = values
            .iter()
            .map(|&v| match v {
                1 => Ok(Sign::Plus),
                -1 => Ok(Sign::Minus),
                _ => Err(Error::Parse(format!("sign value {v} is not +1 or -1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of the dense polynomial carrying this sequence.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> Sign {
        self.0[0]
    }

    pub fn last(&self) -> Sign {
        self.0[self.0.len() - 1]
    }

    /// Number of adjacent sign changes.
    pub fn variations(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Positions `i` with `signs[i] != signs[i + 1]`.
    pub fn variation_indices(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] != w[1])
            .map(|(i, _)| i)
            .collect()
    }

    /// Substitution `x -> -x` for terms with the given integer exponents.
    pub fn negate_x(&self, exponents: &[i64]) -> Result<SignSequence> {
        if exponents.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: exponents.len(),
            });
        }
        Ok(SignSequence(
            self.0
                .iter()
                .zip(exponents)
                .map(|(&s, &e)| s.twist(e))
                .collect(),
        ))
    }

    /// `x -> -x` for a dense polynomial: odd-index signs flip.
    pub fn negate_x_dense(&self) -> SignSequence {
        SignSequence(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &s)| s.twist(i as i64))
                .collect(),
        )
    }

    /// `x -> 1/x` followed by clearing the denominator.
    pub fn reverse(&self) -> SignSequence {
        SignSequence(self.0.iter().rev().copied().collect())
    }

    /// `Y -> -Y`.
    pub fn negate_y(&self) -> SignSequence {
        SignSequence(self.0.iter().map(|&s| -s).collect())
    }

    /// Removes the entries at `positions`; positions outside the sequence are ignored.
    pub fn erase(&self, positions: &[usize]) -> SignSequence {
        SignSequence(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, &s)| s)
                .collect(),
        )
    }

    /// Flips the whole sequence if needed so the first sign is `+`.
    pub fn canonical(&self) -> SignSequence {
        if self.first() == Sign::Plus {
            self.clone()
        } else {
            self.negate_y()
        }
    }

    /// Every dense sequence of the given degree with a leading `+` constant term,
    /// in lexicographic order with `+` before `-`.
    pub fn all_canonical(degree: usize) -> Vec<SignSequence> {
        (0..1u64 << degree)
            .map(|mask| {
                let mut signs = vec![Sign::Plus];
                for bit in (0..degree).rev() {
                    signs.push(if mask >> bit & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    });
                }
                SignSequence(signs)
            })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().copied()
    }
}

/// Sign variations of a sequence.
pub fn variations(seq: &SignSequence) -> usize {
    seq.variations()
}

pub fn transform_negate_x(seq: &SignSequence, exponents: &[i64]) -> Result<SignSequence> {
    seq.negate_x(exponents)
}

pub fn transform_reverse(seq: &SignSequence) -> SignSequence {
    seq.reverse()
}

pub fn transform_negate_y(seq: &SignSequence) -> SignSequence {
    seq.negate_y()
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    /// Parses a compact string such as `"+-+-"`; commas and spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                other => Err(Error::InvalidSign(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(signs)
    }
}

impl Serialize for SignSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSequence {
        s.parse().unwrap()
    }

    #[test]
    fn counts_variations() {
        assert_eq!(seq("+-++").variations(), 2);
        assert_eq!(seq("+++").variations(), 0);
        assert_eq!(seq("+-+-+").variations(), 4);
        assert_eq!(variations(&seq("+")), 0);
    }

    #[test]
    fn negate_x_dense_sequences() {
        assert_eq!(seq("+---+").negate_x_dense(), seq("++-++"));
        assert_eq!(seq("++-++-").negate_x_dense(), seq("+---++"));
        assert_eq!(seq("+++").negate_x_dense(), seq("+-+"));
        let exps = [0, 1, 2, 3, 4];
        assert_eq!(transform_negate_x(&seq("+---+"), &exps).unwrap(), seq("++-++"));
    }

    #[test]
    fn negate_x_with_gapped_exponents() {
        assert_eq!(seq("++").negate_x(&[0, 2]).unwrap(), seq("++"));
        assert_eq!(seq("++").negate_x(&[1, 4]).unwrap(), seq("-+"));
        assert_eq!(
            seq("++").negate_x(&[0]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn reverse_and_negate_y() {
        assert_eq!(transform_reverse(&seq("+--+")), seq("+--+"));
        assert_eq!(seq("++-+--").reverse(), seq("--+-++"));
        assert_eq!(seq("+-").reverse(), seq("-+"));
        assert_eq!(transform_negate_y(&seq("+-+")), seq("-+-"));
        assert_eq!(seq("--").negate_y(), seq("++"));
        assert_eq!(seq("++----+").negate_y(), seq("--++++-"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<SignSequence>(), Err(Error::EmptySequence));
        assert_eq!("+x".parse::<SignSequence>(), Err(Error::InvalidSign('x')));
        assert_eq!("+, -, +".parse::<SignSequence>().unwrap(), seq("+-+"));
    }

    #[test]
    fn canonical_enumeration() {
        let all = SignSequence::all_canonical(2);
        let strs: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(strs, ["+++", "++-", "+-+", "+--"]);
    }

    #[test]
    fn serde_as_compact_string() {
        let s = seq("+-+-");
        assert_eq!(serde_json::to_string(&s).unwrap(), "\"+-+-\"");
        let back: SignSequence = serde_json::from_str("\"+-+-\"").unwrap();
        assert_eq!(back, s);
    }
}
