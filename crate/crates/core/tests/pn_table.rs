//! Table-level properties of the `(P, N)` classification.

use descartes_core::pn_table::{
    classify, descartes_pn_candidates, erasing_rule, full_table, impossibility_certificates,
    witness_search, TableConfig, Verdict,
};
use descartes_core::{pn_count, PnPair, SignSequence};

fn quick() -> TableConfig {
    TableConfig {
        budget: 10_000,
        ..TableConfig::default()
    }
}

/// Dense sequences of degree `n` with either leading sign.
fn all_sequences(n: usize) -> Vec<SignSequence> {
    SignSequence::all_canonical(n)
        .into_iter()
        .flat_map(|s| [s.negate_y(), s])
        .collect()
}

#[test]
fn erasing_rule_stays_inside_the_variation_bounds() {
    for n in 0..=8 {
        for s in all_sequences(n) {
            let candidates = descartes_pn_candidates(&s);
            assert!(erasing_rule(&s).is_subset(&candidates), "{s}");
        }
    }
}

#[test]
fn tables_are_complete_and_witnesses_are_sound() {
    for n in 0..=6 {
        let t = full_table(n, &quick()).unwrap();
        assert_eq!(t.summary.unknown, 0, "degree {n}");
        assert_eq!(
            t.summary.possible + t.summary.impossible_certificate,
            t.summary.candidates
        );
        for r in t.possible() {
            let Verdict::Possible { witness } = &r.verdict else { unreachable!() };
            assert_eq!(witness.polynomial.sign_sequence().as_ref(), Some(&r.sequence));
            assert!(witness.polynomial.is_dense());
            assert_eq!(pn_count(&witness.polynomial).unwrap(), r.pair);
        }
    }
}

#[test]
fn classification_commutes_with_negating_x() {
    for n in 1..=6 {
        for s in all_sequences(n) {
            for pair in descartes_pn_candidates(&s) {
                let a = classify(&s, pair, &quick()).unwrap();
                let b = classify(&s.negate_x_dense(), pair.swapped(), &quick()).unwrap();
                assert_eq!(a.verdict.label(), b.verdict.label(), "{s} {pair}");
            }
        }
    }
}

#[test]
fn degree_six_possibilities_come_from_erasing_and_fixtures() {
    let t = full_table(6, &quick()).unwrap();
    for r in t.possible() {
        let Verdict::Possible { witness } = &r.verdict else { unreachable!() };
        let reference = witness.method.reference();
        assert!(
            reference.starts_with("erasing") || reference.starts_with("fixture:d6"),
            "{} {}: {reference}",
            r.sequence,
            r.pair
        );
    }
}

/// Falsification harness: random search never realizes a certified impossibility.
#[test]
fn search_finds_nothing_in_certified_orbits() {
    for n in 4..=6 {
        for cert in impossibility_certificates(n).unwrap() {
            for (i, e) in cert.orbit.iter().enumerate() {
                let hit = witness_search(&e.sequence, e.pair, 100_000, 1000 + i as u64);
                assert!(hit.is_none(), "{} {}: {:?}", e.sequence, e.pair, hit);
            }
        }
    }
}

#[test]
fn linear_and_quadratic_tables() {
    let t = full_table(2, &quick()).unwrap();
    let possible: Vec<(String, PnPair)> =
        t.possible().map(|r| (r.sequence.to_string(), r.pair)).collect();
    assert_eq!(
        possible,
        vec![
            ("+++".to_string(), PnPair::new(0, 0)),
            ("+++".to_string(), PnPair::new(0, 2)),
            ("++-".to_string(), PnPair::new(1, 1)),
            ("+-+".to_string(), PnPair::new(0, 0)),
            ("+-+".to_string(), PnPair::new(2, 0)),
            ("+--".to_string(), PnPair::new(1, 1)),
        ]
    );
}
