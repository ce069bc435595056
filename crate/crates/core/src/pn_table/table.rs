//! Classification of single `(sequence, pair)` queries and of whole degrees.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificates::{certificate_for, ImpossibilityCertificate};
use super::fixtures::fixture_orbit_witness;
use super::search::{derive_seed, erasing_witness, witness_search, Sampler};
use super::{descartes_pn_candidates, erasing_subset, Transform};
use crate::error::{Error, Result};
use crate::poly::{PnPair, RationalPolynomial, SignSequence};
use crate::rootcount::pn_count;

/// Highest degree for which the recorded impossibilities are complete.
pub const MAX_CLASSIFIED_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessMethod {
    Erasing { erased: Vec<usize>, log2_scale: u32 },
    Fixture { fixture: String, transforms: Vec<Transform> },
    Search { seed: u64, iteration: usize, sampler: Sampler },
}

impl WitnessMethod {
    pub fn reference(&self) -> String {
        match self {
            WitnessMethod::Erasing { erased, log2_scale } => {
                let e: Vec<String> = erased.iter().map(|i| i.to_string()).collect();
                format!("erasing{{{}}}@2^{}", e.join(" "), log2_scale)
            }
            WitnessMethod::Fixture { fixture, transforms } => {
                let t: Vec<&str> = transforms
                    .iter()
                    .map(|t| match t {
                        Transform::NegateX => "negate_x",
                        Transform::Reverse => "reverse",
                        Transform::NegateY => "negate_y",
                    })
                    .collect();
                if t.is_empty() {
                    format!("fixture:{fixture}")
                } else {
                    format!("fixture:{fixture}[{}]", t.join(" "))
                }
            }
            WitnessMethod::Search { seed, iteration, .. } => {
                format!("search:seed={seed}:iter={iteration}")
            }
        }
    }
}

/// A polynomial with the queried sign sequence and exactly the queried counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PnWitness {
    pub polynomial: RationalPolynomial,
    pub method: WitnessMethod,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Possible { witness: PnWitness },
    ImpossibleDescartes,
    ImpossibleCertificate { certificate: ImpossibilityCertificate },
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Possible { .. } => "possible",
            Verdict::ImpossibleDescartes => "impossible_descartes",
            Verdict::ImpossibleCertificate { .. } => "impossible_certificate",
            Verdict::Unknown => "unknown",
        }
    }

    pub fn reference(&self) -> String {
        match self {
            Verdict::Possible { witness } => witness.method.reference(),
            Verdict::ImpossibleDescartes => "descartes".into(),
            Verdict::ImpossibleCertificate { certificate } => {
                format!("certificate:{}", certificate.source)
            }
            Verdict::Unknown => String::new(),
        }
    }

    pub fn is_possible(&self) -> bool {
        matches!(self, Verdict::Possible { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PnClassification {
    pub sequence: SignSequence,
    pub pair: PnPair,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableConfig {
    pub seed: u64,
    /// Random candidates tried per pair before giving up.
    pub budget: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            seed: 42,
            budget: 100_000,
            jobs: None,
        }
    }
}

fn check_dense(seq: &SignSequence) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(())
}

/// Accepts a witness only if its signs and exact counts are the queried ones.
fn verified(seq: &SignSequence, pair: PnPair, polynomial: RationalPolynomial, method: WitnessMethod) -> Option<Verdict> {
    let ok = polynomial.is_dense()
        && polynomial.sign_sequence().as_ref() == Some(seq)
        && pn_count(&polynomial).ok() == Some(pair);
    ok.then_some(Verdict::Possible {
        witness: PnWitness { polynomial, method },
    })
}

fn find_witness(seq: &SignSequence, pair: PnPair, config: &TableConfig) -> Option<Verdict> {
    if let Some(erased) = erasing_subset(seq, pair) {
        if let Some((p, log2_scale)) = erasing_witness(seq, &erased) {
            let method = WitnessMethod::Erasing { erased, log2_scale };
            if let Some(v) = verified(seq, pair, p, method) {
                return Some(v);
            }
        }
    }
    if let Some((p, fixture, transforms)) = fixture_orbit_witness(seq, pair) {
        if let Some(v) = verified(seq, pair, p, WitnessMethod::Fixture { fixture, transforms }) {
            return Some(v);
        }
    }
    let seed = derive_seed(config.seed, seq, pair);
    let hit = witness_search(seq, pair, config.budget, seed)?;
    let method = WitnessMethod::Search {
        seed,
        iteration: hit.iteration,
        sampler: hit.sampler,
    };
    verified(seq, pair, hit.polynomial, method)
}

fn classify_inner(seq: &SignSequence, pair: PnPair, config: &TableConfig, certified: bool) -> Result<PnClassification> {
    check_dense(seq)?;
    let verdict = if !descartes_pn_candidates(seq).contains(&pair) {
        Verdict::ImpossibleDescartes
    } else if let Some(certificate) = if certified { certificate_for(seq, pair)? } else { None } {
        Verdict::ImpossibleCertificate { certificate }
    } else {
        find_witness(seq, pair, config).unwrap_or(Verdict::Unknown)
    };
    Ok(PnClassification {
        sequence: seq.clone(),
        pair,
        verdict,
    })
}

/// Classifies one pair for a dense sign sequence of degree at most 6.
pub fn classify(seq: &SignSequence, pair: PnPair, config: &TableConfig) -> Result<PnClassification> {
    if seq.degree() > MAX_CLASSIFIED_DEGREE {
        return Err(Error::UnsupportedDegree(seq.degree()));
    }
    classify_inner(seq, pair, config, true)
}

/// Like [`classify`] at any degree; above degree 6 no impossibility beyond the
/// variation bounds is known, so pairs without a witness come back [`Verdict::Unknown`].
pub fn classify_any_degree(seq: &SignSequence, pair: PnPair, config: &TableConfig) -> Result<PnClassification> {
    let certified = seq.degree() <= MAX_CLASSIFIED_DEGREE;
    classify_inner(seq, pair, config, certified)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSummary {
    pub sequences: usize,
    pub pairs: usize,
    pub candidates: usize,
    pub possible: usize,
    pub impossible_descartes: usize,
    pub impossible_certificate: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PnTable {
    pub degree: usize,
    pub seed: u64,
    pub budget: usize,
    pub summary: TableSummary,
    pub rows: Vec<PnClassification>,
}

impl PnTable {
    pub fn possible(&self) -> impl Iterator<Item = &PnClassification> {
        self.rows.iter().filter(|r| r.verdict.is_possible())
    }

    pub fn certified(&self) -> impl Iterator<Item = &PnClassification> {
        self.rows
            .iter()
            .filter(|r| matches!(r.verdict, Verdict::ImpossibleCertificate { .. }))
    }
}

/// Every pair `(P, N)` with `P + N <= n`, ordered by `P` then `N`.
fn all_pairs(n: usize) -> Vec<PnPair> {
    (0..=n)
        .flat_map(|p| (0..=n - p).map(move |q| PnPair::new(p, q)))
        .collect()
}

fn build_table(n: usize, config: &TableConfig, certified: bool) -> Result<PnTable> {
    let sequences = SignSequence::all_canonical(n);
    let pairs = all_pairs(n);
    let run = |seq: &SignSequence| -> Result<Vec<PnClassification>> {
        pairs
            .iter()
            .map(|&pair| classify_inner(seq, pair, config, certified))
            .collect()
    };
    let per_sequence: Vec<Result<Vec<PnClassification>>> = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Domain(e.to_string()))?
            .install(|| sequences.par_iter().map(run).collect()),
        None => sequences.par_iter().map(run).collect(),
    };
    let mut rows = Vec::new();
    for r in per_sequence {
        rows.extend(r?);
    }
    let mut summary = TableSummary {
        sequences: sequences.len(),
        pairs: rows.len(),
        ..TableSummary::default()
    };
    for r in &rows {
        match r.verdict {
            Verdict::Possible { .. } => summary.possible += 1,
            Verdict::ImpossibleDescartes => summary.impossible_descartes += 1,
            Verdict::ImpossibleCertificate { .. } => summary.impossible_certificate += 1,
            Verdict::Unknown => summary.unknown += 1,
        }
    }
    summary.candidates = summary.pairs - summary.impossible_descartes;
    Ok(PnTable {
        degree: n,
        seed: config.seed,
        budget: config.budget,
        summary,
        rows,
    })
}

/// All canonical sequences (leading `+`) of degree `n <= 6` against all pairs with
/// `P + N <= n`. Rows are ordered by sequence, then pair, regardless of `jobs`.
pub fn full_table(n: usize, config: &TableConfig) -> Result<PnTable> {
    if n > MAX_CLASSIFIED_DEGREE {
        return Err(Error::UnsupportedDegree(n));
    }
    build_table(n, config, true)
}

/// [`full_table`] at any degree, with [`Verdict::Unknown`] where nothing is settled.
pub fn exploratory_table(n: usize, config: &TableConfig) -> Result<PnTable> {
    build_table(n, config, n <= MAX_CLASSIFIED_DEGREE)
}

/// Column order of [`render_csv`].
pub const CSV_HEADER: &str = "sequence,P,N,verdict,reference,witness";

/// One row per pair; the witness column lists the coefficients separated by spaces.
pub fn render_csv(table: &PnTable) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &table.rows {
        let witness = match &r.verdict {
            Verdict::Possible { witness } => witness
                .polynomial
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            _ => String::new(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.sequence,
            r.pair.p,
            r.pair.n,
            r.verdict.label(),
            r.verdict.reference(),
            witness
        );
    }
    out
}

/// A sequence-by-pair grid: `W` witness, `C` certificate, `.` ruled out by the
/// variation bounds, `?` unknown.
pub fn render_grid(table: &PnTable) -> String {
    let n = table.degree;
    let pairs: Vec<PnPair> = all_pairs(n)
        .into_iter()
        .filter(|p| (n - p.p - p.n) % 2 == 0)
        .collect();
    let width = (n + 1).max(8);
    let mut out = format!("{:width$}", "");
    for p in &pairs {
        let _ = write!(out, " {:>5}", p.to_string());
    }
    out.push('\n');
    for chunk in table.rows.chunk_by(|a, b| a.sequence == b.sequence) {
        let _ = write!(out, "{:width$}", chunk[0].sequence.to_string());
        for p in &pairs {
            let mark = match chunk.iter().find(|r| r.pair == *p).map(|r| &r.verdict) {
                Some(Verdict::Possible { .. }) => "W",
                Some(Verdict::ImpossibleCertificate { .. }) => "C",
                Some(Verdict::Unknown) => "?",
                _ => ".",
            };
            let _ = write!(out, " {mark:>5}");
        }
        out.push('\n');
    }
    let s = &table.summary;
    let _ = writeln!(
        out,
        "degree {n}: {} sequences, {} candidate pairs, {} possible, {} certified impossible, {} unknown",
        s.sequences, s.candidates, s.possible, s.impossible_certificate, s.unknown
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSequence {
        s.parse().unwrap()
    }

    fn quick() -> TableConfig {
        TableConfig {
            budget: 5_000,
            ..TableConfig::default()
        }
    }

    #[test]
    fn single_queries() {
        let c = classify(&seq("+---+"), PnPair::new(2, 2), &quick()).unwrap();
        assert!(c.verdict.is_possible());
        let c = classify(&seq("++-+--"), PnPair::new(3, 0), &quick()).unwrap();
        assert_eq!(c.verdict.label(), "impossible_certificate");
        let c = classify(&seq("++-++-"), PnPair::new(3, 0), &quick()).unwrap();
        assert!(c.verdict.is_possible());
        let c = classify(&seq("+-+"), PnPair::new(1, 0), &quick()).unwrap();
        assert_eq!(c.verdict, Verdict::ImpossibleDescartes);
        assert_eq!(
            classify(&seq("+-+-+-+-"), PnPair::new(1, 0), &quick()),
            Err(Error::UnsupportedDegree(7))
        );
    }

    #[test]
    fn degree_one() {
        let t = full_table(1, &quick()).unwrap();
        let possible: Vec<(String, PnPair)> =
            t.possible().map(|r| (r.sequence.to_string(), r.pair)).collect();
        assert_eq!(
            possible,
            vec![("++".to_string(), PnPair::new(0, 1)), ("+-".to_string(), PnPair::new(1, 0))]
        );
        assert_eq!(t.summary.unknown, 0);
    }

    #[test]
    fn jobs_do_not_change_the_table() {
        let a = full_table(3, &TableConfig { jobs: Some(1), ..quick() }).unwrap();
        let b = full_table(3, &TableConfig { jobs: Some(4), ..quick() }).unwrap();
        assert_eq!(a, b);
        assert!(render_csv(&a).starts_with(CSV_HEADER));
        assert!(render_grid(&a).contains("degree 3"));
    }
}
