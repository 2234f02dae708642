//! Rational locus conditions.
//!
//! For a pivot `α` and `s = 1..m_α` the locus conditions require
//!
//! ```text
//! Σ_{β ≠ α} m_β(m_β+1)(β,β)(α,β)^{2s−1} / (β,x)^{2s+1} ≡ 0   on (α,x) = 0.
//! ```
//!
//! On that hyperplane every member `β` of a plane through `α` satisfies
//! `(β,x) = t_β ℓ(x)` for a common linear form `ℓ`, so the sum splits plane by
//! plane into constants `Σ_β m_β(m_β+1)(β,β)(α,β)^{2s−1} / t_β^{2s+1}`. The
//! verdict comes from those constants; the full-space sum evaluated at sampled
//! points is an independent oracle that must agree.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::config::{Configuration, Kind};
use crate::error::{Error, Result};
use crate::numeric::{approx_zero, axpy, dot, norm, re, rng, Scalar, Tolerance, Vector, MAX_SAMPLE_ATTEMPTS};
use crate::planes::{enumerate_planes, transversal_coefficients, PlaneGroup};

/// Distance from other hyperplanes kept by oracle sample points.
pub const ORACLE_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionResidual {
    pub plane: usize,
    pub pivot: usize,
    pub order: u32,
    pub residual: f64,
    pub scale: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResidual {
    pub pivot: usize,
    pub sample: usize,
    pub order: u32,
    pub residual: f64,
    pub scale: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocusReport {
    pub label: String,
    pub overall: bool,
    pub planes: Vec<PlaneGroup>,
    pub per_condition: Vec<ConditionResidual>,
    pub oracle: Option<Vec<OracleResidual>>,
}

/// `(α,β)`, snapped to zero when it is below the geometric tolerance
/// relative to `|α||β|` (orthogonality decided like collinearity).
fn pairing(alpha: &[Scalar], beta: &[Scalar], tol: &Tolerance) -> Scalar {
    let ab = dot(alpha, beta);
    if ab.norm() <= tol.geometric() * norm(alpha) * norm(beta) {
        re(0.0)
    } else {
        ab
    }
}

#[inline]
fn coupling(m: u32) -> f64 {
    let m = m as f64;
    m * (m + 1.0)
}

fn require_locus(config: &Configuration) -> Result<()> {
    if config.kind() != Kind::Locus {
        return Err(Error::WrongKind { expected: "locus" });
    }
    Ok(())
}

/// Terms `m(m+1)(α,α)/(α,x)²` of the rational potential.
pub fn potential_terms(config: &Configuration, x: &[Scalar], tol: &Tolerance) -> Result<Vec<Scalar>> {
    require_locus(config)?;
    if x.len() != config.dim() {
        return Err(Error::LengthMismatch(x.len(), config.dim()));
    }
    let xn = norm(x);
    config
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let ax = dot(&e.vector, x);
            if ax.norm() <= tol.geometric() * norm(&e.vector) * xn {
                return Err(Error::OnHyperplane(i));
            }
            Ok(coupling(config.multiplicity(i)) * dot(&e.vector, &e.vector) / (ax * ax))
        })
        .collect()
}

/// `u(x) = Σ m_α(m_α+1)(α,α)/(α,x)²`.
pub fn eval_potential(config: &Configuration, x: &[Scalar], tol: &Tolerance) -> Result<Scalar> {
    Ok(potential_terms(config, x, tol)?.into_iter().sum())
}

/// Per-order residuals of the in-plane locus identity for `pivot`.
pub fn check_locus_plane(
    plane: &PlaneGroup,
    plane_id: usize,
    pivot: usize,
    config: &Configuration,
    tol: &Tolerance,
) -> Result<Vec<ConditionResidual>> {
    let vectors = config.vectors();
    let alpha = &vectors[pivot];
    let t = transversal_coefficients(plane, pivot, &vectors, tol)?;
    let m_alpha = config.multiplicity(pivot);
    let mut out = Vec::with_capacity(m_alpha as usize);
    for s in 1..=m_alpha {
        let mut sum = re(0.0);
        let mut scale = 0.0;
        for &(k, tk) in &t {
            let beta = &vectors[k];
            let term = coupling(config.multiplicity(k)) * dot(beta, beta) * pairing(alpha, beta, tol).powu(2 * s - 1)
                / tk.powu(2 * s + 1);
            sum += term;
            scale += term.norm();
        }
        out.push(ConditionResidual {
            plane: plane_id,
            pivot,
            order: s,
            residual: sum.norm(),
            scale,
            pass: approx_zero(sum, scale, tol),
        });
    }
    Ok(out)
}

/// Seeded point on `(α, x) = 0` keeping `|(β,x)| ≥ margin·|β|` for every
/// other entry.
pub fn sample_on_hyperplane<R: Rng>(
    rng: &mut R,
    vectors: &[Vector],
    pivot: usize,
    margin: f64,
) -> Result<Vector> {
    let alpha = &vectors[pivot];
    let aa = dot(alpha, alpha);
    let d = alpha.len();
    for _ in 0..MAX_SAMPLE_ATTEMPTS {
        let x: Vector = (0..d).map(|_| re(rng.gen_range(-1.0..=1.0))).collect();
        let x = axpy(&x, -dot(alpha, &x) / aa, alpha);
        let clear = vectors
            .iter()
            .enumerate()
            .all(|(k, b)| k == pivot || dot(b, &x).norm() >= margin * norm(b));
        if clear {
            return Ok(x);
        }
    }
    Err(Error::SamplingExhausted(MAX_SAMPLE_ATTEMPTS))
}

/// Full-space sums over all `β ≠ α` at a point `x` on `Π_α`, for
/// `s = 1..m_α`. Returns `(order, residual, scale)`.
pub fn oracle_sums(config: &Configuration, pivot: usize, x: &[Scalar], tol: &Tolerance) -> Vec<(u32, Scalar, f64)> {
    let vectors = config.vectors();
    let alpha = &vectors[pivot];
    (1..=config.multiplicity(pivot))
        .map(|s| {
            let mut sum = re(0.0);
            let mut scale = 0.0;
            for (k, beta) in vectors.iter().enumerate() {
                if k == pivot {
                    continue;
                }
                let term = coupling(config.multiplicity(k))
                    * dot(beta, beta)
                    * pairing(alpha, beta, tol).powu(2 * s - 1)
                    / dot(beta, x).powu(2 * s + 1);
                sum += term;
                scale += term.norm();
            }
            (s, sum, scale)
        })
        .collect()
}

/// Runs every (plane, pivot, order) identity and, when `oracle_samples > 0`,
/// the sampling oracle on each hyperplane. Oracle disagreement is an error.
pub fn check_locus(config: &Configuration, oracle_samples: usize, seed: u64, tol: &Tolerance) -> Result<LocusReport> {
    require_locus(config)?;
    let planes = enumerate_planes(config, tol);
    let mut per_condition = Vec::new();
    for (id, plane) in planes.iter().enumerate() {
        for &pivot in &plane.members {
            per_condition.extend(check_locus_plane(plane, id, pivot, config, tol)?);
        }
    }
    let overall = per_condition.iter().all(|c| c.pass);

    let oracle = if oracle_samples > 0 {
        let vectors = config.vectors();
        let mut r = rng(seed);
        let mut out = Vec::new();
        for pivot in 0..config.len() {
            for sample in 0..oracle_samples {
                let x = sample_on_hyperplane(&mut r, &vectors, pivot, ORACLE_MARGIN)?;
                for (order, sum, scale) in oracle_sums(config, pivot, &x, tol) {
                    let pass = approx_zero(sum, scale, tol);
                    let plane_pass = per_condition
                        .iter()
                        .filter(|c| c.pivot == pivot && c.order == order)
                        .all(|c| c.pass);
                    if pass != plane_pass {
                        return Err(Error::OracleDisagreement { pivot, order });
                    }
                    out.push(OracleResidual {
                        pivot,
                        sample,
                        order,
                        residual: sum.norm(),
                        scale,
                        pass,
                    });
                }
            }
        }
        Some(out)
    } else {
        None
    };

    Ok(LocusReport {
        label: config.label().to_string(),
        overall,
        planes,
        per_condition,
        oracle,
    })
}

/// Step sizes for [`decay_profile`]: five log-spaced values from 1e-1 to 1e-3.
pub fn decay_steps() -> [f64; 5] {
    [1e-1, 10f64.powf(-1.5), 1e-2, 10f64.powf(-2.5), 1e-3]
}

/// One point of a decay profile: `|u(x(ε)) − u(s_α x(ε))|` together with the
/// sum of the magnitudes of its terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecaySample {
    pub eps: f64,
    pub value: f64,
    pub scale: f64,
}

impl DecaySample {
    /// Values this close to the term magnitudes are rounding noise.
    pub fn is_resolved(&self) -> bool {
        self.value > DECAY_NOISE * self.scale
    }
}

const DECAY_NOISE: f64 = 1e-13;

/// Decay profile along `x(ε) = x_0 + ε α/(α,α)` with `x_0` a seeded point of
/// `Π_α`, for each `ε` in [`decay_steps`].
///
/// Since `s_α x(ε) = x(−ε)`, each term's odd part is evaluated in the
/// cancellation-free form `−4 c b₀ b₁ ε / (b₀² − ε² b₁²)²` with
/// `b₀ = (β,x_0)`, `b₁ = (β,α)/(α,α)`. The pivot's own term is even and drops.
pub fn decay_profile(config: &Configuration, pivot: usize, seed: u64) -> Result<Vec<DecaySample>> {
    require_locus(config)?;
    let vectors = config.vectors();
    let alpha = &vectors[pivot];
    let aa = dot(alpha, alpha);
    let x0 = sample_on_hyperplane(&mut rng(seed), &vectors, pivot, 0.1)?;
    Ok(decay_steps()
        .iter()
        .map(|&eps| {
            let mut sum = re(0.0);
            let mut scale = 0.0;
            for (k, beta) in vectors.iter().enumerate() {
                if k == pivot {
                    continue;
                }
                let c = coupling(config.multiplicity(k)) * dot(beta, beta);
                let b0 = dot(beta, &x0);
                let b1 = dot(beta, alpha) / aa;
                let den = b0 * b0 - eps * eps * b1 * b1;
                let term = -4.0 * c * b0 * b1 * eps / (den * den);
                sum += term;
                scale += term.norm();
            }
            DecaySample {
                eps,
                value: sum.norm(),
                scale,
            }
        })
        .collect())
}

/// Least-squares slope of `log|Δu|` against `log ε` over the resolved
/// samples of [`decay_profile`]. Returns `+∞` when fewer than two samples rise
/// above rounding noise, i.e. the difference vanishes identically (for
/// instance when the configuration is symmetric under `s_α`).
pub fn decay_slope(config: &Configuration, pivot: usize, seed: u64) -> Result<f64> {
    let pts: Vec<(f64, f64)> = decay_profile(config, pivot, seed)?
        .into_iter()
        .filter(DecaySample::is_resolved)
        .map(|d| (d.eps.ln(), d.value.ln()))
        .collect();
    if pts.len() < 2 {
        return Ok(f64::INFINITY);
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}
