//! The form `G = Σ α⊗α`, dual vectors `α^∨ = G⁻¹α` and the ∨-conditions.
//!
//! A plane passes when, for every member `α`, `Σ_β β(α^∨) β^∨` is parallel to
//! `α^∨` (sum over plane members). Planes with exactly two members reduce to
//! `β(α^∨) = 0`. Planes with three or more members are cross-checked by the
//! proportionality of `G` and `G_Π = Σ_{β∈Π} β⊗β` restricted to
//! `span{α^∨, β^∨}`.

use serde::{Deserialize, Serialize};

use crate::catalog::restrict_to_span;
use crate::config::{Configuration, Kind};
use crate::error::{Error, Result};
use crate::io::ComplexJson;
use crate::numeric::{axpy, dot, herm_dot, norm, re, Matrix, Scalar, Tolerance, Vector};
use crate::planes::{enumerate_planes_of, PlaneGroup};

#[derive(Debug, Clone, PartialEq)]
pub struct VeeContext {
    pub g: Matrix,
    pub g_inv: Matrix,
    pub covectors: Vec<Vector>,
    pub duals: Vec<Vector>,
}

impl VeeContext {
    /// `β(α^∨)`, the covector `β` evaluated on the dual of `α`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> Scalar {
        dot(&self.covectors[beta], &self.duals[alpha])
    }

    /// `‖Σ_α α ⊗ α^∨ − I‖_max`.
    pub fn identity_defect(&self) -> f64 {
        let d = self.g.rows();
        let mut m = Matrix::identity(d);
        for (a, v) in self.covectors.iter().zip(&self.duals) {
            for p in 0..d {
                for q in 0..d {
                    m[(p, q)] -= a[p] * v[q];
                }
            }
        }
        m.max_abs()
    }
}

/// Builds `G`, its inverse and the duals from the (weight-folded) covectors.
pub fn build_context(config: &Configuration, tol: &Tolerance) -> Result<VeeContext> {
    if config.kind() != Kind::Vee {
        return Err(Error::WrongKind { expected: "vee" });
    }
    context_from_covectors(config.dim(), config.covectors(), tol)
}

pub fn context_from_covectors(dim: usize, covectors: Vec<Vector>, tol: &Tolerance) -> Result<VeeContext> {
    let g = Matrix::sum_outer(dim, &covectors);
    let g_inv = g.invert(tol).map_err(|e| match e {
        Error::DegenerateMatrix { column, pivot } => {
            Error::DegenerateForm(format!("pivot {pivot:e} at column {column}"))
        }
        other => other,
    })?;
    let duals = covectors.iter().map(|a| g_inv.mul_vec(a)).collect();
    Ok(VeeContext {
        g,
        g_inv,
        covectors,
        duals,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlaneCase {
    TwoOrthogonal,
    MultiProportional,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneVerdict {
    pub plane: usize,
    pub members: Vec<usize>,
    pub case: PlaneCase,
    /// Worst relative residual of the eigenvector form. Scales include the
    /// rounding bound `|β| |α^∨|` of every pairing.
    pub residual: f64,
    /// Worst relative residual of the restricted-form proportionality (or of
    /// the eigenvector form on two-member planes).
    pub cross_residual: f64,
    pub lambda: Option<ComplexJson>,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VeeReport {
    pub label: String,
    pub field: Field,
    /// Dimension after restricting to the span of the covectors.
    pub dim: usize,
    pub identity_defect: f64,
    pub overall: bool,
    pub per_plane: Vec<PlaneVerdict>,
}

/// Eigenvector-form residuals for every member of the plane:
/// `‖r − λ α^∨‖ / Σ_β |β(α^∨)| ‖β^∨‖` with `r = Σ_β β(α^∨) β^∨`.
fn eigen_residuals(plane: &PlaneGroup, ctx: &VeeContext, tol: &Tolerance) -> (f64, bool, Option<Scalar>) {
    let mut worst = 0.0f64;
    let mut pass = true;
    let mut lambda = None;
    for &a in &plane.members {
        let dual = &ctx.duals[a];
        let mut r = vec![re(0.0); dual.len()];
        let mut scale = 0.0;
        for &b in &plane.members {
            let p = ctx.pairing(b, a);
            r = axpy(&r, p, &ctx.duals[b]);
            scale += (p.norm() + norm(&ctx.covectors[b]) * norm(dual)) * norm(&ctx.duals[b]);
        }
        let lam = herm_dot(dual, &r) / herm_dot(dual, dual);
        let defect = norm(&axpy(&r, -lam, dual));
        let rel = defect / scale.max(tol.zero_scale_floor);
        worst = worst.max(rel);
        pass &= defect <= tol.rel_eps * scale.max(tol.zero_scale_floor);
        lambda.get_or_insert(lam);
    }
    (worst, pass, lambda)
}

/// Proportionality of `G_Π` and `G` on `span{α^∨, β^∨}` for the plane basis.
fn restricted_residual(plane: &PlaneGroup, ctx: &VeeContext, tol: &Tolerance) -> (f64, bool, Scalar) {
    let u = [&ctx.duals[plane.basis[0]], &ctx.duals[plane.basis[1]]];
    let mut g = [[re(0.0); 2]; 2];
    let mut gp = [[re(0.0); 2]; 2];
    let mut g_scale = [[0.0; 2]; 2];
    let mut gp_scale = [[0.0; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            g[a][b] = ctx.g.form(u[a], u[b]);
            for (k, gamma) in ctx.covectors.iter().enumerate() {
                let prod = dot(gamma, u[a]) * dot(gamma, u[b]);
                let bound = norm(gamma).powi(2) * norm(u[a]) * norm(u[b]);
                g_scale[a][b] += bound;
                if plane.contains(k) {
                    gp[a][b] += prod;
                    gp_scale[a][b] += bound;
                }
            }
        }
    }
    let (mut ia, mut ib) = (0, 0);
    for a in 0..2 {
        for b in 0..2 {
            if g[a][b].norm() > g[ia][ib].norm() {
                ia = a;
                ib = b;
            }
        }
    }
    let lambda = gp[ia][ib] / g[ia][ib];
    let mut worst = 0.0f64;
    let mut pass = true;
    for a in 0..2 {
        for b in 0..2 {
            let defect = (gp[a][b] - lambda * g[a][b]).norm();
            let scale = gp_scale[a][b] + lambda.norm() * g_scale[a][b];
            worst = worst.max(defect / scale.max(tol.zero_scale_floor));
            pass &= defect <= tol.rel_eps * scale.max(tol.zero_scale_floor);
        }
    }
    (worst, pass, lambda)
}

pub fn check_vee_plane(plane: &PlaneGroup, plane_id: usize, ctx: &VeeContext, tol: &Tolerance) -> Result<PlaneVerdict> {
    let (eig_res, eig_pass, eig_lambda) = eigen_residuals(plane, ctx, tol);
    if plane.len() == 2 {
        let [a, b] = plane.basis;
        let value = ctx.pairing(b, a);
        let scale = norm(&ctx.covectors[b]) * norm(&ctx.duals[a]);
        let pass = value.norm() <= tol.rel_eps * scale.max(tol.zero_scale_floor);
        if pass != eig_pass {
            return Err(Error::CrossCheckDisagreement {
                plane: plane_id,
                detail: format!("β(α^∨) = {value:e} but eigenvector residual {eig_res:e}"),
            });
        }
        return Ok(PlaneVerdict {
            plane: plane_id,
            members: plane.members.clone(),
            case: PlaneCase::TwoOrthogonal,
            residual: value.norm() / scale.max(tol.zero_scale_floor),
            cross_residual: eig_res,
            lambda: None,
            pass,
        });
    }
    let (restr_res, restr_pass, lambda) = restricted_residual(plane, ctx, tol);
    if restr_pass != eig_pass {
        return Err(Error::CrossCheckDisagreement {
            plane: plane_id,
            detail: format!("eigenvector residual {eig_res:e} vs restricted residual {restr_res:e}"),
        });
    }
    let _ = eig_lambda;
    Ok(PlaneVerdict {
        plane: plane_id,
        members: plane.members.clone(),
        case: PlaneCase::MultiProportional,
        residual: eig_res,
        cross_residual: restr_res,
        lambda: Some(lambda.into()),
        pass: eig_pass,
    })
}

/// Decides the ∨-conditions. The covectors are first re-expressed in a basis
/// of their span, so configurations that do not span the ambient space (e.g.
/// `A_n` roots in `(n+1)`-space) are handled.
pub fn check_vee(config: &Configuration, tol: &Tolerance) -> Result<VeeReport> {
    if config.kind() != Kind::Vee {
        return Err(Error::WrongKind { expected: "vee" });
    }
    let field = if config.is_real(tol) { Field::Real } else { Field::Complex };
    let reduced = restrict_to_span(config)?;
    let ctx = build_context(&reduced, tol)?;
    let planes = enumerate_planes_of(&ctx.covectors, tol);
    let per_plane = planes
        .iter()
        .enumerate()
        .map(|(id, p)| check_vee_plane(p, id, &ctx, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(VeeReport {
        label: config.label().to_string(),
        field,
        dim: reduced.dim(),
        identity_defect: ctx.identity_defect(),
        overall: per_plane.iter().all(|p| p.pass),
        per_plane,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{projected_a_n2, vee_an_c};
    use crate::numeric::unit;

    #[test]
    fn orthonormal_pair_context() {
        let cfg = Configuration::vee(2, "e", vec![unit(2, 0), unit(2, 1)]).unwrap();
        let ctx = build_context(&cfg, &Tolerance::default()).unwrap();
        assert_eq!(ctx.g, Matrix::identity(2));
        assert_eq!(ctx.duals, ctx.covectors);
    }

    #[test]
    fn a2_context_matches_hand_sum() {
        let ctx = build_context(&vee_an_c(&[1.0, 1.0]).unwrap(), &Tolerance::default()).unwrap();
        let expected = Matrix::from_real(&[&[2.0, -1.0], &[-1.0, 2.0]]).unwrap();
        assert!((&ctx.g - &expected).max_abs() < 1e-15);
        assert!(ctx.identity_defect() < 1e-14);
    }

    #[test]
    fn degenerate_form_is_reported() {
        let cfg = Configuration::vee(2, "e", vec![unit(2, 0)]).unwrap();
        assert!(matches!(build_context(&cfg, &Tolerance::default()), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn a_n_c_family_lambda() {
        let c = [0.7, 1.3, 2.1];
        let cfg = vee_an_c(&c).unwrap();
        let rep = check_vee(&cfg, &Tolerance::default()).unwrap();
        assert!(rep.overall);
        // plane <e_1, e_2, e_1 − e_2> is members {0, 3, 4}
        let p = rep.per_plane.iter().find(|p| p.members == vec![0, 3, 4]).unwrap();
        let lam = p.lambda.unwrap();
        let expect = (1.0 + c[0] + c[1]) / (1.0 + c.iter().sum::<f64>());
        assert!((lam.re - expect).abs() < 1e-12 && lam.im.abs() < 1e-12);
    }

    #[test]
    fn projected_new_family_fails_off_m_one() {
        let tol = Tolerance::default();
        assert!(check_vee(&projected_a_n2(3, 1).unwrap(), &tol).unwrap().overall);
        let rep = check_vee(&projected_a_n2(3, 2).unwrap(), &tol).unwrap();
        assert!(!rep.overall);
        // the plane <e_i − √m e_(n+1), e_i, √m e_(n+1)> fails
        let (n, first_mixed) = (3, 3);
        let members = vec![first_mixed, first_mixed + n, 3 * n];
        let p = rep.per_plane.iter().find(|p| p.members == members).unwrap();
        assert!(!p.pass);
    }
}
