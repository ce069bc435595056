//! Explicit witnesses that the erasing rule does not produce, stored as a product of
//! factors together with the claimed expansion.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Transform;
use crate::poly::{PnPair, RationalPolynomial, SignSequence};
use crate::rootcount::pn_count;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    /// Integer coefficients of each factor, constant term first.
    pub factors: Vec<Vec<i64>>,
    pub expansion: Vec<i64>,
    pub pair: PnPair,
}

impl Fixture {
    fn new(name: &str, factors: &[&[i64]], expansion: &[i64], pair: (usize, usize)) -> Self {
        Fixture {
            name: name.to_string(),
            factors: factors.iter().map(|f| f.to_vec()).collect(),
            expansion: expansion.to_vec(),
            pair: PnPair::new(pair.0, pair.1),
        }
    }

    pub fn product(&self) -> RationalPolynomial {
        self.factors
            .iter()
            .fold(RationalPolynomial::one(), |acc, f| &acc * &RationalPolynomial::from_i64s(f))
    }

    pub fn polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::from_i64s(&self.expansion)
    }

    /// The product of the factors equals the stored expansion exactly.
    pub fn expansion_matches(&self) -> bool {
        self.product() == self.polynomial()
    }

    pub fn sign_sequence(&self) -> SignSequence {
        self.polynomial().sign_sequence().expect("fixtures are non-zero")
    }
}

/// The degree-5 witness and the two degree-6 witnesses.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture::new(
            "d5",
            &[&[20, 37, 18], &[1, -1], &[2, -1], &[3, -1]],
            &[120, 2, -179, 4, 71, -18],
            (3, 0),
        ),
        Fixture::new(
            "d6-a",
            &[&[31, 11, 1], &[1, -1], &[2, -1], &[3, -1], &[4, -1]],
            &[744, -1286, 559, 25, -44, 1, 1],
            (4, 0),
        ),
        Fixture::new(
            "d6-b",
            &[&[9, 8, 2], &[1, -1], &[2, -1], &[3, -1], &[4, -1]],
            &[216, -258, -37, 90, -1, -12, 2],
            (4, 0),
        ),
    ]
}

/// Every image of a fixture under the symmetry group, with a shortest transform word.
fn images(fixture: &Fixture) -> BTreeMap<Vec<String>, (RationalPolynomial, Vec<Transform>)> {
    // keyed by the coefficient strings so the map is ordered and deduplicated
    let key = |p: &RationalPolynomial| p.coefficients().iter().map(|c| c.to_string()).collect();
    let start = fixture.polynomial();
    let mut out = BTreeMap::new();
    out.insert(key(&start), (start.clone(), Vec::new()));
    let mut frontier = vec![(start, Vec::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, word) in frontier {
            for t in Transform::ALL {
                let q = t.polynomial(&p);
                let k = key(&q);
                if !out.contains_key(&k) {
                    let mut w: Vec<Transform> = word.clone();
                    w.push(t);
                    out.insert(k, (q.clone(), w.clone()));
                    next.push((q, w));
                }
            }
        }
        frontier = next;
    }
    out
}

/// A transformed fixture with sign sequence `seq` and exactly the counts `pair`.
///
/// Fixtures whose stored expansion does not match the product of their factors are
/// never used.
pub fn fixture_orbit_witness(
    seq: &SignSequence,
    pair: PnPair,
) -> Option<(RationalPolynomial, String, Vec<Transform>)> {
    for fixture in fixtures() {
        if fixture.expansion.len() != seq.len() || !fixture.expansion_matches() {
            continue;
        }
        for (_, (p, word)) in images(&fixture) {
            if p.sign_sequence().as_ref() == Some(seq) && pn_count(&p).ok() == Some(pair) {
                return Some((p, fixture.name.clone(), word));
            }
        }
    }
    None
}
