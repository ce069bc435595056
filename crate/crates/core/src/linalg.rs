//! Dense solves for the small square systems of the witness construction.

use crate::error::{Error, Result};
use crate::numeric::neumaier_sum;

/// Systems whose equilibrated 1-norm condition exceeds this are rejected.
pub const MAX_CONDITION: f64 = 1e12;

/// Dot product with error-free products, accumulated with compensation.
fn accurate_dot(a: &[f64], b: &[f64]) -> f64 {
    neumaier_sum(a.iter().zip(b).flat_map(|(&x, &y)| {
        let p = x * y;
        let e = x.mul_add(y, -p);
        [p, e]
    }))
}

struct Lu {
    lu: Vec<Vec<f64>>,
    perm: Vec<usize>,
}

impl Lu {
    fn factor(mut a: Vec<Vec<f64>>) -> Option<Lu> {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
            if a[pivot][col] == 0.0 || !a[pivot][col].is_finite() {
                return None;
            }
            a.swap(col, pivot);
            perm.swap(col, pivot);
            for row in col + 1..n {
                let f = a[row][col] / a[col][col];
                a[row][col] = f;
                for k in col + 1..n {
                    a[row][k] -= f * a[col][k];
                }
            }
        }
        Some(Lu { lu: a, perm })
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.lu.len();
        let mut y: Vec<f64> = self.perm.iter().map(|&i| b[i]).collect();
        for i in 0..n {
            for k in 0..i {
                y[i] -= self.lu[i][k] * y[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= self.lu[i][k] * y[k];
            }
            y[i] /= self.lu[i][i];
        }
        y
    }
}

fn norm1(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    (0..n)
        .map(|j| a.iter().map(|row| row[j].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Solves `a x = b_k` for every right-hand side.
///
/// Rows and columns are equilibrated first; the 1-norm condition number of the
/// equilibrated matrix is computed from its explicit inverse, and solutions are
/// polished by iterative refinement with compensated residuals.
pub fn solve_many(a: &[Vec<f64>], rhs: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, f64)> {
    let n = a.len();
    if n == 0 {
        return Ok((rhs.iter().map(|_| Vec::new()).collect(), 1.0));
    }
    let row_scale: Vec<f64> = a
        .iter()
        .map(|row| {
            let m = row.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if m > 0.0 {
                1.0 / m
            } else {
                1.0
            }
        })
        .collect();
    let col_scale: Vec<f64> = (0..n)
        .map(|j| {
            let m = (0..n).fold(0.0f64, |m, i| m.max((a[i][j] * row_scale[i]).abs()));
            if m > 0.0 {
                1.0 / m
            } else {
                1.0
            }
        })
        .collect();
    let scaled: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| a[i][j] * row_scale[i] * col_scale[j]).collect())
        .collect();

    let lu = Lu::factor(scaled.clone()).ok_or(Error::IllConditioned {
        condition: f64::INFINITY,
    })?;
    let inverse_cols: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            lu.solve(&e)
        })
        .collect();
    let inv_norm = inverse_cols
        .iter()
        .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let condition = norm1(&scaled) * inv_norm;
    if !condition.is_finite() || condition > MAX_CONDITION {
        return Err(Error::IllConditioned { condition });
    }

    let mut out = Vec::with_capacity(rhs.len());
    for b in rhs {
        let sb: Vec<f64> = b.iter().zip(&row_scale).map(|(v, s)| v * s).collect();
        let mut y = lu.solve(&sb);
        for _ in 0..3 {
            let residual: Vec<f64> = (0..n)
                .map(|i| {
                    let mut row = scaled[i].clone();
                    row.push(-1.0);
                    let mut v = y.clone();
                    v.push(sb[i]);
                    -accurate_dot(&row, &v)
                })
                .collect();
            let delta = lu.solve(&residual);
            for (yi, d) in y.iter_mut().zip(&delta) {
                *yi += d;
            }
        }
        out.push(y.iter().zip(&col_scale).map(|(v, s)| v * s).collect());
    }
    Ok((out, condition))
}
