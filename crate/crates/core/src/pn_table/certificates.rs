//! Recorded impossibilities that the variation bounds do not predict.

use serde::{Deserialize, Serialize};

use super::{orbit, OrbitEntry};
use crate::error::{Error, Result};
use crate::poly::{PnPair, SignSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImpossibilityCertificate {
    pub canonical_sequence: SignSequence,
    pub pair: PnPair,
    /// Short identifier of the recorded fact, e.g. `d6-c`.
    pub source: String,
    pub orbit: Vec<OrbitEntry>,
}

impl ImpossibilityCertificate {
    fn new(source: &str, seq: &str, pair: (usize, usize)) -> Self {
        let canonical_sequence: SignSequence = seq.parse().expect("literal sign sequence");
        let pair = PnPair::new(pair.0, pair.1);
        ImpossibilityCertificate {
            orbit: orbit(&canonical_sequence, pair),
            canonical_sequence,
            pair,
            source: source.to_string(),
        }
    }

    pub fn covers(&self, seq: &SignSequence, pair: PnPair) -> bool {
        self.orbit
            .iter()
            .any(|e| e.pair == pair && &e.sequence == seq)
    }
}

/// Impossibilities beyond the variation bounds for dense polynomials of degree `n`,
/// each with its full orbit. Empty below degree 4.
pub fn impossibility_certificates(n: usize) -> Result<Vec<ImpossibilityCertificate>> {
    let c = ImpossibilityCertificate::new;
    Ok(match n {
        0..=3 => Vec::new(),
        4 => vec![c("d4", "+---+", (0, 2))],
        5 => vec![c("d5", "++-+--", (3, 0))],
        6 => vec![
            c("d6-a", "++-+-++", (2, 0)),
            c("d6-b", "++-+-++", (4, 0)),
            c("d6-c", "++++-++", (2, 0)),
            c("d6-d", "++----+", (0, 4)),
        ],
        _ => return Err(Error::UnsupportedDegree(n)),
    })
}

/// The certificate whose orbit contains `(seq, pair)`, if any.
pub fn certificate_for(seq: &SignSequence, pair: PnPair) -> Result<Option<ImpossibilityCertificate>> {
    Ok(impossibility_certificates(seq.degree())?
        .into_iter()
        .find(|c| c.covers(seq, pair)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pn_table::descartes_pn_candidates;

    #[test]
    fn lists_by_degree() {
        assert!(impossibility_certificates(3).unwrap().is_empty());
        let d5 = impossibility_certificates(5).unwrap();
        assert_eq!(d5.len(), 1);
        assert_eq!(d5[0].canonical_sequence.to_string(), "++-+--");
        assert_eq!(d5[0].pair, PnPair::new(3, 0));
        let d6 = impossibility_certificates(6).unwrap();
        assert!(d6
            .iter()
            .any(|c| c.canonical_sequence.to_string() == "++----+" && c.pair == PnPair::new(0, 4)));
        assert_eq!(impossibility_certificates(7), Err(Error::UnsupportedDegree(7)));
    }

    #[test]
    fn degree_four_orbit_contains_the_mirror_image() {
        let seq: SignSequence = "++-++".parse().unwrap();
        let cert = certificate_for(&seq, PnPair::new(2, 0)).unwrap().unwrap();
        assert_eq!(cert.source, "d4");
    }

    #[test]
    fn certified_pairs_pass_the_variation_bounds() {
        for n in 4..=6 {
            for cert in impossibility_certificates(n).unwrap() {
                for e in &cert.orbit {
                    assert!(descartes_pn_candidates(&e.sequence).contains(&e.pair));
                }
            }
        }
    }
}
