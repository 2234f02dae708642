//! The prepotential `F = Σ (α,x)² log (α,x)²` and its WDVV equations.

use serde::{Deserialize, Serialize};

use crate::catalog::restrict_to_span;
use crate::config::{Configuration, Kind};
use crate::error::{Error, Result};
use crate::numeric::{dot, rng, sample_point_with, Matrix, Scalar, Tolerance, Vector};

/// Third derivative of `y² log y²` is `4/y`, so
/// `(F_m)_{pq} = Σ_α K α_m α_p α_q / (α,x)` with this `K`.
pub const THIRD_DERIVATIVE_CONSTANT: f64 = 4.0;

/// A point passes when every relative commutator residual is below this.
pub const WDVV_THRESHOLD: f64 = 1e-8;

pub const SAMPLE_MARGIN: f64 = 0.05;

const RESAMPLE_LIMIT: usize = 16;

pub fn eval_prepotential(config: &Configuration, x: &[Scalar]) -> Result<Scalar> {
    if x.len() != config.dim() {
        return Err(Error::LengthMismatch(config.dim(), x.len()));
    }
    let mut sum = Scalar::new(0.0, 0.0);
    for (i, a) in config.covectors().iter().enumerate() {
        let y = dot(a, x);
        if y.norm() == 0.0 {
            return Err(Error::OnHyperplane(i));
        }
        let y2 = y * y;
        sum += y2 * y2.ln();
    }
    Ok(sum)
}

/// All `F_1 … F_n` at `x` for the given covectors.
pub fn third_derivative_matrices(covectors: &[Vector], x: &[Scalar]) -> Result<Vec<Matrix>> {
    let n = x.len();
    let mut out = vec![Matrix::zeros(n, n); n];
    for (i, a) in covectors.iter().enumerate() {
        let y = dot(a, x);
        if y.norm() == 0.0 {
            return Err(Error::OnHyperplane(i));
        }
        let w = THIRD_DERIVATIVE_CONSTANT / y;
        for (m, f) in out.iter_mut().enumerate() {
            let wm = w * a[m];
            for p in 0..n {
                let wp = wm * a[p];
                for q in 0..n {
                    f[(p, q)] += wp * a[q];
                }
            }
        }
    }
    Ok(out)
}

pub fn third_deriv_matrix(config: &Configuration, x: &[Scalar], m: usize) -> Result<Matrix> {
    if x.len() != config.dim() {
        return Err(Error::LengthMismatch(config.dim(), x.len()));
    }
    if m >= config.dim() {
        return Err(Error::BadParameter(format!("index {m} out of range")));
    }
    Ok(third_derivative_matrices(&config.covectors(), x)?.swap_remove(m))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WdvvResidual {
    pub point: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WdvvReport {
    pub label: String,
    /// Dimension after restricting to the span of the covectors.
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    pub residuals: Vec<WdvvResidual>,
    pub max_residual: f64,
    /// Number of (point, k) pairs skipped because `F_k` was singular.
    pub skipped: usize,
    pub overall: bool,
}

fn commutator_residual(fi: &Matrix, fj: &Matrix, fk_inv: &Matrix) -> f64 {
    let a = &(fi * fk_inv) * fj;
    let b = &(fj * fk_inv) * fi;
    let scale = a.max_abs();
    if scale == 0.0 {
        return (&a - &b).max_abs();
    }
    (&a - &b).max_abs() / scale
}

/// Residuals `‖F_i F_k⁻¹ F_j − F_j F_k⁻¹ F_i‖ / ‖F_i F_k⁻¹ F_j‖` over all
/// `i < j` and every `k` with `F_k` invertible, at `num_points` seeded real
/// sample points.
pub fn check_wdvv(config: &Configuration, num_points: usize, seed: u64, tol: &Tolerance) -> Result<WdvvReport> {
    if config.kind() != Kind::Vee {
        return Err(Error::WrongKind { expected: "vee" });
    }
    let reduced = restrict_to_span(config)?;
    let covectors = reduced.covectors();
    let n = reduced.dim();
    let mut rng = rng(seed);
    let mut points = Vec::with_capacity(num_points);
    let mut residuals = Vec::new();
    let mut skipped = 0;
    for p in 0..num_points {
        let mut attempt = 0;
        let (x, fs, invs) = loop {
            let x = sample_point_with(&mut rng, n, &covectors, SAMPLE_MARGIN)?;
            let fs = third_derivative_matrices(&covectors, &x)?;
            let invs: Vec<Option<Matrix>> = fs.iter().map(|f| f.invert(tol).ok()).collect();
            if invs.iter().any(Option::is_some) {
                break (x, fs, invs);
            }
            attempt += 1;
            if attempt >= RESAMPLE_LIMIT {
                return Err(Error::DegenerateMatrix {
                    column: 0,
                    pivot: 0.0,
                });
            }
        };
        for (k, inv) in invs.iter().enumerate() {
            let Some(inv) = inv else {
                skipped += 1;
                continue;
            };
            for i in 0..n {
                for j in (i + 1)..n {
                    residuals.push(WdvvResidual {
                        point: p,
                        i,
                        j,
                        k,
                        residual: commutator_residual(&fs[i], &fs[j], inv),
                    });
                }
            }
        }
        points.push(x.iter().map(|z| z.re).collect());
    }
    let max_residual = residuals.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(WdvvReport {
        label: config.label().to_string(),
        dim: n,
        points,
        residuals,
        max_residual,
        skipped,
        overall: max_residual < WDVV_THRESHOLD,
    })
}
