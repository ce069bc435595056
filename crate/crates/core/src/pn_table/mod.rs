//! Which pairs `(P, N)` of positive and negative root counts occur for dense real
//! polynomials with a given sign sequence.
//!
//! A pair is either ruled out by the variation bounds on both half-lines, ruled out by
//! one of a short list of recorded impossibilities (expanded over the symmetries
//! `x -> -x`, `x -> 1/x`, `Y -> -Y`), or realized by an explicit polynomial whose
//! counts are checked exactly.

mod certificates;
mod fixtures;
mod search;
mod table;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::descartes::admissible_p;
use crate::poly::{PnPair, RationalPolynomial, SignSequence};

pub use certificates::{certificate_for, impossibility_certificates, ImpossibilityCertificate};
pub use fixtures::{fixture_orbit_witness, fixtures, Fixture};
pub use search::{derive_seed, erasing_witness, witness_search, Sampler, SearchHit};
pub use table::{
    classify, classify_any_degree, exploratory_table, full_table, render_csv, render_grid,
    PnClassification, PnTable, PnWitness, TableConfig, TableSummary, Verdict, WitnessMethod,
    CSV_HEADER, MAX_CLASSIFIED_DEGREE,
};

/// The three sign-sequence symmetries, with their action on `(P, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    /// `x -> -x`: odd-index signs flip and `P`, `N` swap.
    NegateX,
    /// `x -> 1/x`: the sequence is reversed.
    Reverse,
    /// `Y -> -Y`: every sign flips.
    NegateY,
}

impl Transform {
    pub const ALL: [Transform; 3] = [Transform::NegateX, Transform::Reverse, Transform::NegateY];

    pub fn sequence(self, seq: &SignSequence) -> SignSequence {
        match self {
            Transform::NegateX => seq.negate_x_dense(),
            Transform::Reverse => seq.reverse(),
            Transform::NegateY => seq.negate_y(),
        }
    }

    pub fn pair(self, pair: PnPair) -> PnPair {
        match self {
            Transform::NegateX => pair.swapped(),
            Transform::Reverse | Transform::NegateY => pair,
        }
    }

    pub fn polynomial(self, p: &RationalPolynomial) -> RationalPolynomial {
        match self {
            Transform::NegateX => p.negate_x(),
            Transform::Reverse => p.reverse(),
            Transform::NegateY => -p,
        }
    }
}

/// A sign sequence together with a root-count pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub sequence: SignSequence,
    pub pair: PnPair,
}

/// Closure of `(seq, pair)` under [`Transform::ALL`], sorted.
pub fn orbit(seq: &SignSequence, pair: PnPair) -> Vec<OrbitEntry> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![OrbitEntry {
        sequence: seq.clone(),
        pair,
    }];
    while let Some(e) = stack.pop() {
        if seen.contains(&e) {
            continue;
        }
        for t in Transform::ALL {
            stack.push(OrbitEntry {
                sequence: t.sequence(&e.sequence),
                pair: t.pair(e.pair),
            });
        }
        seen.insert(e);
    }
    seen.into_iter().collect()
}

/// Pairs allowed by the variation bounds of `seq` and of its `x -> -x` image, with
/// `P + N` at most the degree.
pub fn descartes_pn_candidates(seq: &SignSequence) -> BTreeSet<PnPair> {
    let n = seq.degree();
    let ps = admissible_p(seq);
    let ns = admissible_p(&seq.negate_x_dense());
    ps.iter()
        .flat_map(|&p| ns.iter().map(move |&q| PnPair::new(p, q)))
        .filter(|pair| pair.p + pair.n <= n)
        .collect()
}

/// Interior indices `1..n` selected by `mask` (bit `j` selects index `j + 1`).
fn interior_subset(n: usize, mask: u64) -> Vec<usize> {
    (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

/// The pair predicted after erasing the given interior positions.
pub fn erased_pair(seq: &SignSequence, erased: &[usize]) -> PnPair {
    PnPair::new(
        seq.erase(erased).variations(),
        seq.negate_x_dense().erase(erased).variations(),
    )
}

/// Every pair obtained by erasing a subset of the interior signs and counting the
/// variations left in `seq` and in its `x -> -x` image.
pub fn erasing_rule(seq: &SignSequence) -> BTreeSet<PnPair> {
    let n = seq.degree();
    (0..1u64 << n.saturating_sub(1))
        .map(|mask| erased_pair(seq, &interior_subset(n, mask)))
        .collect()
}

/// An interior subset whose erasure predicts `pair`, preferring the smallest one.
pub fn erasing_subset(seq: &SignSequence, pair: PnPair) -> Option<Vec<usize>> {
    let n = seq.degree();
    (0..1u64 << n.saturating_sub(1))
        .map(|mask| interior_subset(n, mask))
        .filter(|erased| erased_pair(seq, erased) == pair)
        .min_by_key(|erased| erased.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSequence {
        s.parse().unwrap()
    }

    fn pairs(v: &[(usize, usize)]) -> BTreeSet<PnPair> {
        v.iter().map(|&(p, n)| PnPair::new(p, n)).collect()
    }

    #[test]
    fn candidates() {
        assert_eq!(
            descartes_pn_candidates(&seq("+---+")),
            pairs(&[(0, 0), (0, 2), (2, 0), (2, 2)])
        );
        assert_eq!(descartes_pn_candidates(&seq("+++")), pairs(&[(0, 0), (0, 2)]));
        assert_eq!(
            descartes_pn_candidates(&seq("+-+-+-+")),
            pairs(&[(0, 0), (2, 0), (4, 0), (6, 0)])
        );
    }

    #[test]
    fn erasing() {
        assert_eq!(erasing_rule(&seq("+---+")), pairs(&[(2, 2), (2, 0), (0, 0)]));
        assert_eq!(erasing_rule(&seq("++")), pairs(&[(0, 1)]));
        assert!(!erasing_rule(&seq("++-++-")).contains(&PnPair::new(3, 0)));
        assert_eq!(erasing_subset(&seq("+---+"), PnPair::new(2, 2)), Some(vec![]));
        assert_eq!(erasing_subset(&seq("+---+"), PnPair::new(0, 2)), None);
    }

    #[test]
    fn orbits() {
        let o = orbit(&seq("+---+"), PnPair::new(0, 2));
        assert!(o.contains(&OrbitEntry {
            sequence: seq("++-++"),
            pair: PnPair::new(2, 0)
        }));
        assert_eq!(o.len(), 4);
        for e in &o {
            for t in Transform::ALL {
                let image = OrbitEntry {
                    sequence: t.sequence(&e.sequence),
                    pair: t.pair(e.pair),
                };
                assert!(o.contains(&image));
            }
        }
    }
}
