//! Explicit signomials with a prescribed sign sequence, prescribed exponents and a
//! prescribed multiset of positive roots.
//!
//! Terms are grouped into maximal runs of equal sign and every run shares one
//! coefficient, so the unknowns are one coefficient `b_j` per run. With `p` target
//! roots (counted with multiplicity) and `k` variations, the first `p` run
//! coefficients are solved from the root conditions, the last run gets the prescribed
//! sign with unit size, and the remaining runs get alternating coefficients of size
//! `eps`. The whole coefficient vector is affine in `eps`; a small enough `eps` keeps
//! the prescribed signs and introduces no further positive root. `eps` runs through
//! 1/2, 1/4, ... and every candidate is verified.

use serde::{Deserialize, Serialize};

use crate::descartes::is_realizable;
use crate::error::{Error, Result};
use crate::linalg::solve_many;
use crate::numeric::falling_factorial;
use crate::poly::{RootEntry, RootMultiset, Sign, SignSequence, Signomial, Term};
use crate::rootcount::{isolate_signomial_roots, IsolationOptions};

/// Runs of constant sign and the root target they must satisfy.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSystem {
    signs: SignSequence,
    exponents: Vec<f64>,
    starts: Vec<usize>,
    target: RootMultiset,
}

/// Splits a sign sequence into maximal constant-sign runs over the given exponents.
pub fn block_decompose(seq: &SignSequence, exponents: &[f64]) -> Result<BlockSystem> {
    if exponents.len() != seq.len() {
        return Err(Error::LengthMismatch {
            expected: seq.len(),
            got: exponents.len(),
        });
    }
    if let Some(i) = exponents
        .windows(2)
        .position(|w| !(w[0] < w[1]) || !w[1].is_finite())
    {
        return Err(Error::NonIncreasingExponents { index: i + 1 });
    }
    if !exponents[0].is_finite() {
        return Err(Error::NonIncreasingExponents { index: 0 });
    }
    let mut starts = vec![0];
    starts.extend(seq.variation_indices().into_iter().map(|i| i + 1));
    Ok(BlockSystem {
        signs: seq.clone(),
        exponents: exponents.to_vec(),
        starts,
        target: RootMultiset::empty(),
    })
}

impl BlockSystem {
    pub fn with_target(mut self, target: RootMultiset) -> Self {
        self.target = target;
        self
    }

    pub fn target(&self) -> &RootMultiset {
        &self.target
    }

    pub fn signs(&self) -> &SignSequence {
        &self.signs
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    /// First term index of every run.
    pub fn block_starts(&self) -> &[usize] {
        &self.starts
    }

    /// Number of variations; there are `k + 1` runs.
    pub fn k(&self) -> usize {
        self.starts.len() - 1
    }

    pub fn block_range(&self, j: usize) -> std::ops::Range<usize> {
        let end = self.starts.get(j + 1).copied().unwrap_or(self.exponents.len());
        self.starts[j]..end
    }

    pub fn block_sign(&self, j: usize) -> Sign {
        self.signs.signs()[self.starts[j]]
    }

    pub fn sign_of_last(&self) -> Sign {
        self.signs.last()
    }

    /// `order`-th derivative of the run function `sum_{i in run j} x^{alpha_i}`.
    pub fn block_value(&self, j: usize, x: f64, order: u32) -> f64 {
        self.block_range(j)
            .map(|i| {
                let a = self.exponents[i];
                falling_factorial(a, order) * x.powf(a - order as f64)
            })
            .sum()
    }

    /// Expands run coefficients into a signomial (one term per exponent).
    pub fn signomial(&self, block_coefficients: &[f64]) -> Result<Signomial> {
        if block_coefficients.len() != self.k() + 1 {
            return Err(Error::LengthMismatch {
                expected: self.k() + 1,
                got: block_coefficients.len(),
            });
        }
        let mut terms = Vec::with_capacity(self.exponents.len());
        for (j, &b) in block_coefficients.iter().enumerate() {
            for i in self.block_range(j) {
                terms.push(Term {
                    exponent: self.exponents[i],
                    coefficient: b,
                });
            }
        }
        Signomial::new(terms)
    }

    fn has_prescribed_signs(&self, b: &[f64]) -> bool {
        b.iter()
            .enumerate()
            .all(|(j, &v)| v.is_finite() && v * self.block_sign(j).to_f64() > 0.0)
    }
}

/// One row per root condition: for a root of multiplicity `m`, the run functions and
/// their first `m - 1` derivatives evaluated at the root.
pub fn build_matrix(bs: &BlockSystem) -> Result<Vec<Vec<f64>>> {
    let p = bs.target.cardinality();
    let k = bs.k();
    if p > k {
        return Err(Error::Inadmissible { k, p });
    }
    let mut rows = Vec::with_capacity(p);
    for e in bs.target.entries() {
        for order in 0..e.multiplicity {
            rows.push((0..=k).map(|j| bs.block_value(j, e.x, order)).collect());
        }
    }
    Ok(rows)
}

/// Run coefficients as `constant + eps * slope`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineCoefficients {
    pub constant: Vec<f64>,
    pub slope: Vec<f64>,
    /// Condition estimate of the solved block (1 when nothing was solved).
    pub condition: f64,
}

impl AffineCoefficients {
    pub fn at(&self, eps: f64) -> Vec<f64> {
        self.constant
            .iter()
            .zip(&self.slope)
            .map(|(c, s)| c + eps * s)
            .collect()
    }
}

/// Solves for the run coefficients as an affine function of `eps`.
pub fn block_coefficients_affine(bs: &BlockSystem) -> Result<AffineCoefficients> {
    let k = bs.k();
    let p = bs.target.cardinality();
    if !is_realizable(&bs.signs, p) {
        return Err(Error::Inadmissible { k, p });
    }
    let mut constant = vec![0.0; k + 1];
    let mut slope = vec![0.0; k + 1];
    if p == 0 {
        let first = bs.signs.first().to_f64();
        constant[0] = first;
        constant[k] = first;
        for (i, s) in slope.iter_mut().enumerate().take(k).skip(1) {
            *s = if i % 2 == 0 { first } else { -first };
        }
        return Ok(AffineCoefficients {
            constant,
            slope,
            condition: 1.0,
        });
    }
    let last = bs.sign_of_last().to_f64();
    constant[k] = last;
    for (i, s) in slope.iter_mut().enumerate().take(k).skip(p) {
        *s = if (k - i) % 2 == 0 { last } else { -last };
    }
    let phi = build_matrix(bs)?;
    let head: Vec<Vec<f64>> = phi.iter().map(|row| row[..p].to_vec()).collect();
    let rhs_constant: Vec<f64> = phi.iter().map(|row| -row[k] * constant[k]).collect();
    let rhs_slope: Vec<f64> = phi
        .iter()
        .map(|row| -(p..k).map(|i| row[i] * slope[i]).sum::<f64>())
        .collect();
    let (solutions, condition) = solve_many(&head, &[rhs_constant, rhs_slope])?;
    constant[..p].copy_from_slice(&solutions[0]);
    slope[..p].copy_from_slice(&solutions[1]);
    Ok(AffineCoefficients {
        constant,
        slope,
        condition,
    })
}

/// Run coefficients `b_0(eps), ..., b_k(eps)`.
pub fn solve_block_coefficients(bs: &BlockSystem, eps: f64) -> Result<Vec<f64>> {
    Ok(block_coefficients_affine(bs)?.at(eps))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessOptions {
    /// Relative residual below which a derivative value counts as zero.
    pub residual_tol: f64,
    /// Allowed relative distance between a target root and the recovered one.
    pub root_tol: f64,
    pub max_halvings: u32,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            residual_tol: 1e-9,
            root_tol: 1e-6,
            max_halvings: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootCheck {
    pub x: f64,
    pub multiplicity: u32,
    /// `|Y^(j)(x)| / sum |a_i (alpha_i)_j x^(alpha_i - j)|` for `j = 0..=multiplicity`.
    pub residuals: Vec<f64>,
    /// Nearest root of `Y^(m-1)`.
    pub recovered: f64,
    pub relative_error: f64,
    /// Number of isolated roots attributed to this target.
    pub isolated: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub passed: bool,
    pub sign_sequence: SignSequence,
    pub signs_match: Option<bool>,
    pub roots: Vec<RootCheck>,
    pub extra_roots: Vec<f64>,
    pub isolation_complete: bool,
    pub ambiguous: bool,
    /// Targets closer than one part in a million; conditioning suffers.
    pub clustered: bool,
}

impl WitnessReport {
    pub fn max_relative_error(&self) -> f64 {
        self.roots.iter().map(|r| r.relative_error).fold(0.0, f64::max)
    }

    /// Human-readable reasons for a failed verification.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.signs_match == Some(false) {
            out.push(format!("sign sequence is {}", self.sign_sequence));
        }
        for r in self.roots.iter().filter(|r| !r.ok) {
            out.push(format!(
                "root {} (multiplicity {}): residuals {:?}, relative error {:.3e}, {} isolated",
                r.x, r.multiplicity, r.residuals, r.relative_error, r.isolated
            ));
        }
        for x in &self.extra_roots {
            out.push(format!("extra root near {x}"));
        }
        if !self.isolation_complete {
            out.push("root isolation ran out of budget".into());
        }
        out
    }
}

fn relative_residual(y: &Signomial, x: f64, order: u32) -> f64 {
    let v = y.derivative_at(x, order).unwrap_or(f64::NAN);
    let m = y.derivative_magnitude(x, order).unwrap_or(f64::NAN);
    if m == 0.0 {
        0.0
    } else {
        v.abs() / m
    }
}

/// Newton iteration on `Y^(order)` started at `x`.
fn newton_root(y: &Signomial, x: f64, order: u32) -> f64 {
    let mut r = x;
    for _ in 0..60 {
        let (Ok(f), Ok(df)) = (y.derivative_at(r, order), y.derivative_at(r, order + 1)) else {
            break;
        };
        if df == 0.0 || !df.is_finite() {
            break;
        }
        let step = f / df;
        let next = r - step;
        if !(next > 0.0) {
            break;
        }
        r = next;
        if step.abs() <= 1e-16 * r {
            break;
        }
    }
    r
}

/// Checks `y` against a target multiset.
pub fn verify_witness(y: &Signomial, target: &RootMultiset, tol: f64) -> WitnessReport {
    verify_witness_with(
        y,
        target,
        None,
        &WitnessOptions {
            residual_tol: tol,
            ..Default::default()
        },
    )
}

/// Like [`verify_witness`], also comparing the sign sequence when one is given.
pub fn verify_witness_with(
    y: &Signomial,
    target: &RootMultiset,
    expected_signs: Option<&SignSequence>,
    opts: &WitnessOptions,
) -> WitnessReport {
    let sign_sequence = y.sign_sequence();
    let signs_match = expected_signs.map(|s| *s == sign_sequence);

    let isolation = isolate_signomial_roots(
        y,
        &IsolationOptions {
            residual_rel: opts.residual_tol,
            ..Default::default()
        },
    );

    let radius = |m: u32| opts.root_tol.max(opts.residual_tol.powf(1.0 / m as f64));
    let mut attributed = vec![0usize; target.distinct()];
    let mut parity = vec![0u32; target.distinct()];
    let mut centers = vec![Vec::new(); target.distinct()];
    let mut extra_roots = Vec::new();
    for bracket in &isolation.brackets {
        let c = bracket.center();
        let nearest = target
            .entries()
            .iter()
            .enumerate()
            .map(|(i, e)| (i, (c - e.x).abs() / e.x, e.multiplicity))
            .filter(|&(_, d, m)| d <= radius(m))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match nearest {
            Some((i, _, _)) => {
                attributed[i] += 1;
                parity[i] += if bracket.tangential { 0 } else { bracket.multiplicity };
                centers[i].push(c);
            }
            None => extra_roots.push(c),
        }
    }

    let roots = target
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let m = e.multiplicity;
            let residuals: Vec<f64> = (0..=m).map(|j| relative_residual(y, e.x, j)).collect();
            let residuals_ok = residuals[..m as usize].iter().all(|r| *r <= opts.residual_tol)
                && residuals[m as usize] > opts.residual_tol;
            let recovered = newton_root(y, e.x, m - 1);
            let mut relative_error = (recovered - e.x).abs() / e.x;
            if m == 1 {
                if let Some(c) = centers[i].first() {
                    relative_error = relative_error.max((c - e.x).abs() / e.x);
                }
            }
            let isolated_ok = attributed[i] > 0
                && parity[i] % 2 == m % 2
                && (m > 1 || attributed[i] == 1);
            RootCheck {
                x: e.x,
                multiplicity: m,
                residuals,
                recovered,
                relative_error,
                isolated: attributed[i],
                ok: residuals_ok && isolated_ok && relative_error <= opts.root_tol,
            }
        })
        .collect::<Vec<_>>();

    let clustered = target.min_relative_gap().is_some_and(|g| g < 1e-6);
    let passed = signs_match.unwrap_or(true)
        && roots.iter().all(|r| r.ok)
        && extra_roots.is_empty()
        && isolation.complete;
    WitnessReport {
        passed,
        sign_sequence,
        signs_match,
        roots,
        extra_roots,
        isolation_complete: isolation.complete,
        ambiguous: isolation.ambiguous,
        clustered,
    }
}

/// The accepted `eps` together with the verified signomial.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonChoice {
    /// `None` when no free parameter exists (`p = k`).
    pub epsilon: Option<f64>,
    pub block_coefficients: Vec<f64>,
    pub polynomial: Signomial,
    pub report: WitnessReport,
    pub condition: f64,
}

/// Tries `eps = 1/2, 1/4, ...` until the run coefficients carry the prescribed signs and the
/// resulting signomial verifies against the target.
pub fn select_epsilon(bs: &BlockSystem, opts: &WitnessOptions) -> Result<EpsilonChoice> {
    let affine = block_coefficients_affine(bs)?;
    let free = affine.slope.iter().any(|&s| s != 0.0);
    let candidates: Vec<Option<f64>> = if free {
        (1..=opts.max_halvings).map(|h| Some(0.5f64.powi(h as i32))).collect()
    } else {
        vec![None]
    };
    let mut last_failure = String::from("no candidate had the prescribed signs");
    for eps in candidates {
        let b = affine.at(eps.unwrap_or(0.0));
        if !bs.has_prescribed_signs(&b) {
            continue;
        }
        let y = bs.signomial(&b)?;
        let report = verify_witness_with(&y, &bs.target, Some(&bs.signs), opts);
        if report.passed {
            return Ok(EpsilonChoice {
                epsilon: eps,
                block_coefficients: b,
                polynomial: y,
                report,
                condition: affine.condition,
            });
        }
        last_failure = report.failures().join("; ");
    }
    Err(Error::ConstructionFailed(format!(
        "no eps in the halving schedule verified (condition {:.3e}): {last_failure}",
        affine.condition
    )))
}

/// A verified realization of a sign sequence and a positive-root multiset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub sequence: SignSequence,
    pub polynomial: Signomial,
    pub block_coefficients: Vec<f64>,
    pub epsilon: Option<f64>,
    pub target: RootMultiset,
    pub verified_roots: RootMultiset,
    /// `|Y(x)|` relative to the term magnitudes, one entry per target root.
    pub residuals: Vec<f64>,
    pub condition: f64,
    pub report: WitnessReport,
}

pub fn construct_witness(
    seq: &SignSequence,
    exponents: &[f64],
    target: &RootMultiset,
) -> Result<WitnessCertificate> {
    construct_witness_with(seq, exponents, target, &WitnessOptions::default())
}

pub fn construct_witness_with(
    seq: &SignSequence,
    exponents: &[f64],
    target: &RootMultiset,
    opts: &WitnessOptions,
) -> Result<WitnessCertificate> {
    let k = seq.variations();
    let p = target.cardinality();
    if !is_realizable(seq, p) {
        return Err(Error::Inadmissible { k, p });
    }
    let bs = block_decompose(seq, exponents)?.with_target(target.clone());
    let choice = select_epsilon(&bs, opts)?;
    let verified_roots = RootMultiset::new(
        choice
            .report
            .roots
            .iter()
            .map(|r| RootEntry {
                x: r.recovered,
                multiplicity: r.multiplicity,
            })
            .collect(),
    )?;
    let residuals = choice.report.roots.iter().map(|r| r.residuals[0]).collect();
    Ok(WitnessCertificate {
        sequence: seq.clone(),
        polynomial: choice.polynomial,
        block_coefficients: choice.block_coefficients,
        epsilon: choice.epsilon,
        target: target.clone(),
        verified_roots,
        residuals,
        condition: choice.condition,
        report: choice.report,
    })
}
