//! Maximal two-dimensional subsystems of a configuration.

use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::numeric::{axpy, dot, herm_dot, is_isotropic, norm, scale_vec, Scalar, Tolerance, Vector};

/// A maximal coplanar subset of entries. `basis` holds two member indices
/// whose vectors span the plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGroup {
    pub members: Vec<usize>,
    pub basis: [usize; 2],
}

impl PlaneGroup {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

/// Hermitian-orthonormal basis of `span{a, b}`.
fn span2(a: &[Scalar], b: &[Scalar]) -> (Vector, Vector) {
    let q1 = scale_vec((1.0 / norm(a)).into(), a);
    let mut w = axpy(b, -herm_dot(&q1, b), &q1);
    w = axpy(&w, -herm_dot(&q1, &w), &q1);
    let q2 = scale_vec((1.0 / norm(&w)).into(), &w);
    (q1, q2)
}

/// Least-squares residual of `v` against `span{a, b}`, relative to `|v|`.
pub fn in_plane_residual(a: &[Scalar], b: &[Scalar], v: &[Scalar]) -> f64 {
    let (q1, q2) = span2(a, b);
    let r = axpy(&axpy(v, -herm_dot(&q1, v), &q1), -herm_dot(&q2, v), &q2);
    norm(&r) / norm(v)
}

pub fn enumerate_planes(config: &Configuration, tol: &Tolerance) -> Vec<PlaneGroup> {
    enumerate_planes_of(&config.vectors(), tol)
}

/// Partitions all unordered pairs of (pairwise non-collinear) vectors into
/// maximal planes. Output is sorted lexicographically by member list.
pub fn enumerate_planes_of(vectors: &[Vector], tol: &Tolerance) -> Vec<PlaneGroup> {
    let n = vectors.len();
    let mut covered = vec![false; n * n];
    let mut planes = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if covered[i * n + j] {
                continue;
            }
            let (q1, q2) = span2(&vectors[i], &vectors[j]);
            let members: Vec<usize> = (0..n)
                .filter(|&k| {
                    if k == i || k == j {
                        return true;
                    }
                    let v = &vectors[k];
                    let r = axpy(&axpy(v, -herm_dot(&q1, v), &q1), -herm_dot(&q2, v), &q2);
                    norm(&r) <= tol.geometric() * norm(v)
                })
                .collect();
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x + 1..] {
                    covered[a * n + b] = true;
                }
            }
            planes.push(PlaneGroup { members, basis: [i, j] });
        }
    }
    planes.sort_by(|a, b| a.members.cmp(&b.members));
    planes
}

/// For each non-pivot member `β`, the coefficient `t_β` in
/// `β = a_β α + t_β τ`, where `τ` is the in-plane direction orthogonal to the
/// pivot `α` under the bilinear form. On the hyperplane `(α, x) = 0` this gives
/// `(β, x) = t_β (τ, x)`.
///
/// `τ` is normalized to unit bilinear length when it is non-isotropic and to
/// unit Hermitian length otherwise.
pub fn transversal_coefficients(
    plane: &PlaneGroup,
    pivot: usize,
    vectors: &[Vector],
    tol: &Tolerance,
) -> Result<Vec<(usize, Scalar)>> {
    if !plane.contains(pivot) {
        return Err(Error::BadParameter(format!("pivot {pivot} is not a plane member")));
    }
    let alpha = &vectors[pivot];
    if is_isotropic(alpha, tol) {
        return Err(Error::IsotropicVector(format!("pivot {pivot}")));
    }
    let aa = dot(alpha, alpha);
    let other = plane.members.iter().copied().find(|&k| k != pivot).expect("plane has two members");
    let b = &vectors[other];
    let mut tau = axpy(b, -dot(alpha, b) / aa, alpha);
    if is_isotropic(&tau, tol) {
        tau = scale_vec((1.0 / norm(&tau)).into(), &tau);
    } else {
        tau = scale_vec(1.0 / dot(&tau, &tau).sqrt(), &tau);
    }
    let tt = herm_dot(&tau, &tau);
    Ok(plane
        .members
        .iter()
        .copied()
        .filter(|&k| k != pivot)
        .map(|k| {
            let beta = &vectors[k];
            let rest = axpy(beta, -dot(alpha, beta) / aa, alpha);
            (k, herm_dot(&tau, &rest) / tt)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a_n1, coxeter_positive_roots, RootFamily};
    use crate::numeric::{re, unit};

    #[test]
    fn a2_is_one_plane() {
        let a2 = coxeter_positive_roots(RootFamily::A, 2, &[1]).unwrap();
        let planes = enumerate_planes(&a2, &Tolerance::default());
        assert_eq!(planes, vec![PlaneGroup { members: vec![0, 1, 2], basis: [0, 1] }]);
    }

    #[test]
    fn a3_has_seven_planes() {
        let a3 = coxeter_positive_roots(RootFamily::A, 3, &[1]).unwrap();
        let planes = enumerate_planes(&a3, &Tolerance::default());
        assert_eq!(planes.len(), 7);
        assert_eq!(planes.iter().filter(|p| p.len() == 3).count(), 4);
        assert_eq!(planes.iter().filter(|p| p.len() == 2).count(), 3);
    }

    #[test]
    fn a11_is_one_plane() {
        let cfg = a_n1(2, 3).unwrap();
        assert_eq!(enumerate_planes(&cfg, &Tolerance::default()).len(), 1);
    }

    #[test]
    fn pairs_are_partitioned() {
        let cfg = coxeter_positive_roots(RootFamily::B, 4, &[1, 2]).unwrap();
        let planes = enumerate_planes(&cfg, &Tolerance::default());
        let n = cfg.len();
        let total: usize = planes.iter().map(|p| p.len() * (p.len() - 1) / 2).sum();
        assert_eq!(total, n * (n - 1) / 2);
    }

    #[test]
    fn transversal_examples() {
        let tol = Tolerance::default();
        let vs = vec![unit(2, 0), unit(2, 1), vec![re(1.0), re(-1.0)]];
        let plane = PlaneGroup { members: vec![0, 1, 2], basis: [0, 1] };
        let t = transversal_coefficients(&plane, 0, &vs, &tol).unwrap();
        assert!((t[0].1 - re(1.0)).norm() < 1e-15);
        assert!((t[1].1 - re(-1.0)).norm() < 1e-15);

        let a2 = coxeter_positive_roots(RootFamily::A, 2, &[1]).unwrap();
        let t = transversal_coefficients(&plane, 2, &a2.vectors(), &tol).unwrap();
        assert!((t[0].1.norm() - t[1].1.norm()).abs() < 1e-14);

        let iso = vec![vec![re(1.0), crate::numeric::c(0.0, 1.0)], unit(2, 0)];
        let plane = PlaneGroup { members: vec![0, 1], basis: [0, 1] };
        assert!(matches!(transversal_coefficients(&plane, 0, &iso, &tol), Err(Error::IsotropicVector(_))));
    }

    #[test]
    fn transversal_decomposition_holds() {
        let tol = Tolerance::default();
        let cfg = a_n1(3, -2).unwrap();
        let vs = cfg.vectors();
        for plane in enumerate_planes(&cfg, &tol) {
            for &p in &plane.members {
                let alpha = &vs[p];
                let other = plane.members.iter().copied().find(|&k| k != p).unwrap();
                let b = &vs[other];
                let tau = axpy(b, -dot(alpha, b) / dot(alpha, alpha), alpha);
                let t = transversal_coefficients(&plane, p, &vs, &tol).unwrap();
                let t_other = t.iter().find(|(k, _)| *k == other).unwrap().1;
                let tau_unit = scale_vec(1.0 / t_other, &tau);
                for (k, tk) in t {
                    let rest = axpy(&vs[k], -tk, &tau_unit);
                    assert!(crate::numeric::is_collinear(&rest, alpha, &tol) || norm(&rest) < 1e-12);
                }
            }
        }
    }
}
