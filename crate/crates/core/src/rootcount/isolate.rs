//! Numeric root isolation for signomials on `(0, inf)`.
//!
//! Works in `t = ln x`. The roots of `Y` are separated by the roots of
//! `(x^{-alpha_0} Y)'`, a signomial with one term fewer, so the derivative chain is
//! isolated recursively and `Y` (equivalently `x^{-alpha_0} Y`, which is monotone
//! between consecutive critical points) is bracketed on each monotone piece.

use serde::{Deserialize, Serialize};

use crate::numeric::neumaier_sum;
use crate::poly::Signomial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsolationOptions {
    /// Search window in `x`; intersected with the dominance window that provably
    /// contains every positive root. `None` uses the dominance window alone.
    pub domain: Option<(f64, f64)>,
    /// Bracket width, relative to the abscissa.
    pub tol: f64,
    /// A critical point where `|Y|` is within the rounding bound of its evaluation, or
    /// under `residual_rel * sum |a_i x^alpha_i|`, is treated as a tangential contact.
    /// The default of 0 relies on the rounding bound alone, which suits exact data.
    pub residual_rel: f64,
    /// Cap on signomial evaluations before giving up.
    pub max_evaluations: usize,
}

impl Default for IsolationOptions {
    fn default() -> Self {
        IsolationOptions {
            domain: None,
            tol: 1e-13,
            residual_rel: 0.0,
            max_evaluations: 2_000_000,
        }
    }
}

/// An interval holding exactly one distinct root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    /// 1 for a sign change; >= 2 estimated from vanishing derivatives at a
    /// tangential contact.
    pub multiplicity: u32,
    pub tangential: bool,
}

impl RootBracket {
    /// Geometric midpoint; brackets are built in log space.
    pub fn center(&self) -> f64 {
        (self.lo * self.hi).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsolationResult {
    pub brackets: Vec<RootBracket>,
    /// Relative residual under which a critical value counts as zero.
    pub residual_bound: f64,
    /// The window actually searched.
    pub domain: (f64, f64),
    /// False when the evaluation budget ran out.
    pub complete: bool,
    /// Set when a near-zero critical value was seen: a multiple root and a cluster of
    /// close simple roots cannot be told apart at this resolution.
    pub ambiguous: bool,
}

impl IsolationResult {
    pub fn distinct(&self) -> usize {
        self.brackets.len()
    }

    /// Roots counted with their estimated multiplicities.
    pub fn with_multiplicity(&self) -> usize {
        self.brackets.iter().map(|b| b.multiplicity as usize).sum()
    }

    pub fn centers(&self) -> Vec<f64> {
        self.brackets.iter().map(RootBracket::center).collect()
    }
}

/// Safety factor on the first-order rounding bound of [`scaled_eval`].
const ROUNDING_FACTOR: f64 = 8.0;

/// `(scaled value, scaled magnitude, rounding bound)` of `y` at `e^t`, all divided by
/// the largest term magnitude.
///
/// Terms are formed relative to the dominant term `j` as `(a_i / a_j) x^(alpha_i - alpha_j)`,
/// which has relative error about `(|alpha_i - alpha_j| + 3) u`. Ratios that overflow or
/// underflow fall back to the log form, whose error also carries `|ln|a_i|| + |alpha_i t|`.
fn scaled_eval(y: &Signomial, t: f64) -> (f64, f64, f64) {
    let terms = y.terms();
    let logs: Vec<f64> = terms
        .iter()
        .map(|term| term.coefficient.abs().ln() + term.exponent * t)
        .collect();
    let (j, top) = logs
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, l)| if l > best.1 { (i, l) } else { best });
    let x = t.exp();
    let lead = &terms[j];
    let mut scaled = Vec::with_capacity(terms.len());
    let mut errors = Vec::with_capacity(terms.len());
    for (term, l) in terms.iter().zip(&logs) {
        let gap = term.exponent - lead.exponent;
        let direct = (term.coefficient / lead.coefficient).abs() * x.powf(gap);
        let (r, spread) = if direct.is_finite() && direct > 0.0 {
            (direct, gap.abs())
        } else {
            let spread = term.coefficient.abs().ln().abs() + (term.exponent * t).abs() + top.abs();
            ((l - top).exp(), spread)
        };
        scaled.push(term.coefficient.signum() * r);
        errors.push(r * (3.0 + spread));
    }
    let value = neumaier_sum(scaled.iter().copied());
    let magnitude = neumaier_sum(scaled.iter().map(|r| r.abs()));
    let error = neumaier_sum(errors) * f64::EPSILON * ROUNDING_FACTOR;
    (value, magnitude, error)
}

/// Log-space window `(t_lo, t_hi)` outside of which one extreme term dominates
/// the sum of all the others, so no positive root can lie outside it.
pub fn dominance_window(y: &Signomial) -> (f64, f64) {
    let terms = y.terms();
    let n = terms.len();
    if n < 2 {
        return (0.0, 0.0);
    }
    let lead = terms[n - 1].coefficient.abs();
    let rest_hi: f64 = terms[..n - 1].iter().map(|t| t.coefficient.abs()).sum();
    let gap_hi = terms[n - 1].exponent - terms[n - 2].exponent;
    let t_hi = ((2.0 * rest_hi / lead).ln() / gap_hi).max(0.0);

    let low = terms[0].coefficient.abs();
    let rest_lo: f64 = terms[1..].iter().map(|t| t.coefficient.abs()).sum();
    let gap_lo = terms[1].exponent - terms[0].exponent;
    let t_lo = (-(2.0 * rest_lo / low).ln() / gap_lo).min(0.0);
    (t_lo, t_hi)
}

struct Ctx {
    opts: IsolationOptions,
    evaluations: usize,
    exhausted: bool,
    ambiguous: bool,
}

impl Ctx {
    fn eval(&mut self, y: &Signomial, t: f64) -> (f64, f64, f64) {
        self.evaluations += 1;
        if self.evaluations > self.opts.max_evaluations {
            self.exhausted = true;
        }
        scaled_eval(y, t)
    }

    /// Value at `t`, and whether it is indistinguishable from zero.
    fn eval_negligible(&mut self, y: &Signomial, t: f64) -> (f64, bool) {
        let (v, mag, err) = self.eval(y, t);
        (v, v.abs() <= err.max(self.opts.residual_rel * mag))
    }
}

#[derive(Debug, Clone, Copy)]
struct Found {
    t_lo: f64,
    t_hi: f64,
    multiplicity: u32,
    tangential: bool,
}

impl Found {
    fn t(&self) -> f64 {
        0.5 * (self.t_lo + self.t_hi)
    }
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

fn bisect(y: &Signomial, mut lo: f64, mut hi: f64, s_lo: i8, ctx: &mut Ctx) -> (f64, f64) {
    while hi - lo > ctx.opts.tol && !ctx.exhausted {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (v, _, _) = ctx.eval(y, mid);
        let s = sign(v);
        if s == 0 {
            return (mid, mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Estimated multiplicity at a near-zero critical point: one more than the number of
/// leading derivatives that also look like zero, adjusted to the observed parity.
fn estimate_multiplicity(y: &Signomial, t: f64, odd: bool, ctx: &mut Ctx) -> u32 {
    let x = t.exp();
    let (_, mag0, err0) = ctx.eval(y, t);
    let base = (err0 / mag0).max(ctx.opts.residual_rel);
    let mut m = 1;
    for order in 1..y.len() as u32 {
        let (Ok(d), Ok(mag)) = (y.derivative_at(x, order), y.derivative_magnitude(x, order)) else {
            break;
        };
        let threshold = base.powf(1.0 / (order as f64 + 1.0));
        if mag > 0.0 && d.abs() <= threshold * mag {
            m += 1;
        } else {
            break;
        }
    }
    let m = m.max(2);
    if (m % 2 == 1) != odd {
        m + 1
    } else {
        m
    }
}

/// Sign next to the contact at `t0` on the side of `toward`, from the nearest probe
/// whose value clears the contact threshold; `(t0, 0)` when the whole half-piece is
/// within it.
fn probe(y: &Signomial, t0: f64, toward: f64, ctx: &mut Ctx) -> (f64, i8) {
    for frac in [1e-3, 1e-2, 1e-1, 0.5] {
        let t = t0 + frac * (toward - t0);
        let (v, negligible) = ctx.eval_negligible(y, t);
        if !negligible {
            return (t, sign(v));
        }
    }
    (t0, 0)
}

fn find_roots(y: &Signomial, t_lo: f64, t_hi: f64, ctx: &mut Ctx) -> Vec<Found> {
    let Some(z) = y.drop_lowest_derivative() else {
        return Vec::new();
    };
    let critical = find_roots(&z, t_lo, t_hi, ctx);

    let mut points = vec![t_lo];
    points.extend(
        critical
            .iter()
            .map(Found::t)
            .filter(|&t| t > t_lo && t < t_hi),
    );
    points.push(t_hi);
    points.dedup();

    // Sign at each breakpoint; interior breakpoints with a negligible value are
    // contacts and get sign 0.
    let mut signs = Vec::with_capacity(points.len());
    for (i, &t) in points.iter().enumerate() {
        let (v, negligible) = ctx.eval_negligible(y, t);
        let interior = i > 0 && i + 1 < points.len();
        if interior && negligible {
            signs.push(0);
        } else {
            signs.push(sign(v));
        }
    }

    // One-sided probes `(t, sign)` next to every interior contact. A contact whose value
    // merely falls under the threshold may still have a genuine crossing in a neighbouring
    // piece, so pieces are bisected between probes rather than skipped.
    let last = points.len() - 1;
    let mut left_probe: Vec<(f64, i8)> = points.iter().zip(&signs).map(|(&t, &s)| (t, s)).collect();
    let mut right_probe = left_probe.clone();
    let mut found = Vec::new();
    for i in 0..points.len() {
        if signs[i] != 0 {
            continue;
        }
        if i == 0 || i == last {
            found.push(Found {
                t_lo: points[i],
                t_hi: points[i],
                multiplicity: 1,
                tangential: false,
            });
            continue;
        }
        ctx.ambiguous = true;
        left_probe[i] = probe(y, points[i], points[i - 1], ctx);
        right_probe[i] = probe(y, points[i], points[i + 1], ctx);
        let (left, right) = (left_probe[i].1, right_probe[i].1);
        let odd = left != 0 && right != 0 && left != right;
        let multiplicity = estimate_multiplicity(y, points[i], odd, ctx);
        let half = ctx.opts.tol;
        found.push(Found {
            t_lo: points[i] - half,
            t_hi: points[i] + half,
            multiplicity,
            tangential: !odd,
        });
    }
    for i in 0..last {
        let ((lo, a), (hi, b)) = (right_probe[i], left_probe[i + 1]);
        if a != 0 && b != 0 && a != b {
            let (lo, hi) = bisect(y, lo, hi, a, ctx);
            found.push(Found {
                t_lo: lo,
                t_hi: hi,
                multiplicity: 1,
                tangential: false,
            });
        }
    }
    found.sort_by(|a, b| a.t_lo.total_cmp(&b.t_lo));
    found
}

/// Brackets every distinct positive root of `y` inside the search window.
pub fn isolate_signomial_roots(y: &Signomial, opts: &IsolationOptions) -> IsolationResult {
    let (mut t_lo, mut t_hi) = dominance_window(y);
    if let Some((lo, hi)) = opts.domain {
        t_lo = t_lo.max(lo.ln());
        t_hi = t_hi.min(hi.ln());
    }
    let mut ctx = Ctx {
        opts: *opts,
        evaluations: 0,
        exhausted: false,
        ambiguous: false,
    };
    let found = if t_lo < t_hi {
        find_roots(y, t_lo, t_hi, &mut ctx)
    } else {
        Vec::new()
    };
    IsolationResult {
        brackets: found
            .into_iter()
            .map(|f| RootBracket {
                lo: f.t_lo.exp(),
                hi: f.t_hi.exp(),
                multiplicity: f.multiplicity,
                tangential: f.tangential,
            })
            .collect(),
        residual_bound: opts.residual_rel,
        domain: (t_lo.exp(), t_hi.exp()),
        complete: !ctx.exhausted,
        ambiguous: ctx.ambiguous,
    }
}
