//! Complex scalars under the symmetric bilinear form, a small dense matrix
//! type, the tolerance policy and seeded sampling.
//!
//! The inner product everywhere in this crate is `(x, y) = Σ x_i y_i` with no
//! conjugation. Hermitian quantities (`herm_dot`, `norm`) are only used as
//! magnitudes for scale accounting and rank decisions.

use std::ops::{Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = Complex64;
pub type Vector = Vec<Scalar>;

/// Resampling bound for [`sample_point`] and friends.
pub const MAX_SAMPLE_ATTEMPTS: usize = 1000;

#[inline]
pub fn c(re: f64, im: f64) -> Scalar {
    Complex64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> Scalar {
    Complex64::new(x, 0.0)
}

/// Relative tolerance policy shared by every checker.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel_eps: f64,
    pub zero_scale_floor: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel_eps: 1e-9,
            zero_scale_floor: 1e-300,
        }
    }
}

impl Tolerance {
    pub fn new(rel_eps: f64) -> Result<Self> {
        if !rel_eps.is_finite() || rel_eps <= 0.0 {
            return Err(Error::BadParameter(format!("rel_eps must be positive, got {rel_eps}")));
        }
        Ok(Tolerance {
            rel_eps,
            ..Default::default()
        })
    }

    /// Looser threshold for geometric decisions (collinearity, coplanarity,
    /// isotropy), where the data is exact but the test is a rank decision.
    pub fn geometric(&self) -> f64 {
        self.rel_eps * 1e3
    }
}

/// `Σ x_i y_i` without conjugation.
pub fn bilinear(x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(dot(x, y))
}

/// Unchecked [`bilinear`]; callers guarantee equal lengths.
#[inline]
pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `Σ |x_i y_i|`, the magnitude scale of a bilinear product.
pub fn dot_scale(x: &[Scalar], y: &[Scalar]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a * b).norm()).sum()
}

/// Hermitian product `Σ conj(x_i) y_i`.
pub fn herm_dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// Hermitian (Euclidean) norm.
pub fn norm(x: &[Scalar]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(x: &[Scalar]) -> f64 {
    x.iter().map(|a| a.norm()).fold(0.0, f64::max)
}

pub fn scale_vec(k: Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|a| k * a).collect()
}

/// `x + k·y`
pub fn axpy(x: &[Scalar], k: Scalar, y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + k * b).collect()
}

pub fn unit(dim: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::new(0.0, 0.0); dim];
    v[i] = re(1.0);
    v
}

pub fn is_real_vec(x: &[Scalar], tol: &Tolerance) -> bool {
    let s = max_abs(x);
    x.iter().all(|a| a.im.abs() <= tol.geometric() * s.max(tol.zero_scale_floor))
}

/// `|value| ≤ rel_eps · max(scale, zero_scale_floor)`.
pub fn approx_zero(value: Scalar, scale: f64, tol: &Tolerance) -> bool {
    value.norm() <= tol.rel_eps * scale.max(tol.zero_scale_floor)
}

pub fn is_isotropic(v: &[Scalar], tol: &Tolerance) -> bool {
    let n = norm(v);
    dot(v, v).norm() <= tol.geometric() * (n * n).max(tol.zero_scale_floor)
}

/// Two vectors are collinear when every 2×2 minor of the pair is negligible
/// relative to the product of their norms.
pub fn is_collinear(a: &[Scalar], b: &[Scalar], tol: &Tolerance) -> bool {
    let scale = norm(a) * norm(b);
    let mut worst = 0.0f64;
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            worst = worst.max((a[i] * b[j] - a[j] * b[i]).norm());
        }
    }
    worst <= tol.geometric() * scale.max(tol.zero_scale_floor)
}

/// Reflection `x − 2(α,x)/(α,α) α` in the hyperplane `(α, ·) = 0`.
pub fn reflect(alpha: &[Scalar], x: &[Scalar], tol: &Tolerance) -> Result<Vector> {
    if alpha.len() != x.len() {
        return Err(Error::LengthMismatch(alpha.len(), x.len()));
    }
    if is_isotropic(alpha, tol) {
        return Err(Error::IsotropicVector(format!("{alpha:?}")));
    }
    let k = -2.0 * dot(alpha, x) / dot(alpha, alpha);
    Ok(axpy(x, k, alpha))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded real point in `[-1, 1]^dim` keeping `|(β,x)| ≥ margin·|β|` for every
/// `β` in `avoid`.
pub fn sample_point(dim: usize, seed: u64, avoid: &[Vector], margin: f64) -> Result<Vector> {
    if margin.is_nan() || margin <= 0.0 {
        return Err(Error::BadParameter(format!("margin must be positive, got {margin}")));
    }
    let mut rng = rng(seed);
    sample_point_with(&mut rng, dim, avoid, margin)
}

pub fn sample_point_with<R: Rng>(
    rng: &mut R,
    dim: usize,
    avoid: &[Vector],
    margin: f64,
) -> Result<Vector> {
    for _ in 0..MAX_SAMPLE_ATTEMPTS {
        let x: Vector = (0..dim).map(|_| re(rng.gen_range(-1.0..=1.0))).collect();
        if avoid.iter().all(|b| dot(b, &x).norm() >= margin * norm(b)) {
            return Ok(x);
        }
    }
    Err(Error::SamplingExhausted(MAX_SAMPLE_ATTEMPTS))
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::LengthMismatch(row.len(), c));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| re(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// `Σ v ⊗ v` over the given vectors.
    pub fn sum_outer(dim: usize, vectors: &[Vector]) -> Self {
        let mut m = Self::zeros(dim, dim);
        for v in vectors {
            for p in 0..dim {
                for q in 0..dim {
                    m[(p, q)] += v[p] * v[q];
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vector {
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    /// `uᵀ M v`
    pub fn form(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.mul_vec(v))
    }

    pub fn is_symmetric(&self, tol: &Tolerance) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let s = self.max_abs();
        (0..self.rows).all(|i| {
            (0..i).all(|j| approx_zero(self[(i, j)] - self[(j, i)], s, tol))
        })
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    ///
    /// Fails with [`Error::DegenerateMatrix`] when the chosen pivot falls below
    /// `rel_eps` times the largest entry of its original row.
    pub fn invert(&self, tol: &Tolerance) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        let mut row_scale: Vec<f64> = (0..n).map(|i| max_abs(self.row(i))).collect();
        for col in 0..n {
            let (piv_row, piv_mag) = (col..n)
                .map(|r| (r, a[(r, col)].norm()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if piv_mag <= tol.rel_eps * row_scale[piv_row].max(tol.zero_scale_floor) {
                return Err(Error::DegenerateMatrix {
                    column: col,
                    pivot: piv_mag,
                });
            }
            if piv_row != col {
                a.swap_rows(piv_row, col);
                inv.swap_rows(piv_row, col);
                row_scale.swap(piv_row, col);
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == Scalar::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let (av, iv) = (a[(col, j)], inv[(col, j)]);
                    a[(r, j)] -= f * av;
                    inv[(r, j)] -= f * iv;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Principal square root of an integer, `√m = i·√|m|` for negative `m`.
pub fn sqrt_int(m: i64) -> Scalar {
    if m >= 0 {
        re((m as f64).sqrt())
    } else {
        c(0.0, ((-m) as f64).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Scalar, b: Scalar) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn bilinear_has_no_conjugation() {
        assert!(close(bilinear(&[re(1.0), re(0.0)], &[re(0.0), re(1.0)]).unwrap(), re(0.0)));
        let v = [re(1.0), c(0.0, 1.0)];
        assert!(close(bilinear(&v, &v).unwrap(), re(0.0)));
        let s2 = 2f64.sqrt();
        let a = [re(1.0), re(0.0), re(-s2)];
        let b = [re(0.0), re(1.0), re(-s2)];
        assert!(close(bilinear(&a, &b).unwrap(), re(2.0)));
        assert_eq!(bilinear(&a, &v), Err(Error::LengthMismatch(3, 2)));
    }

    #[test]
    fn invert_examples() {
        let tol = Tolerance::default();
        let id = Matrix::identity(3);
        assert_eq!(id.invert(&tol).unwrap(), id);

        let g = Matrix::from_real(&[&[2.0, -1.0], &[-1.0, 2.0]]).unwrap();
        let expected = Matrix::from_real(&[&[2.0 / 3.0, 1.0 / 3.0], &[1.0 / 3.0, 2.0 / 3.0]]).unwrap();
        let inv = g.invert(&tol).unwrap();
        assert!((&inv - &expected).max_abs() < 1e-15);

        let ones = Matrix::from_real(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        assert!(matches!(ones.invert(&tol), Err(Error::DegenerateMatrix { .. })));

        let rect = Matrix::zeros(2, 3);
        assert!(matches!(rect.invert(&tol), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn approx_zero_examples() {
        let tol = Tolerance::default();
        assert!(approx_zero(re(1e-15), 1.0, &tol));
        assert!(!approx_zero(re(0.3), 1.0, &tol));
        assert!(approx_zero(re(1e-4), 1e8, &tol));
        assert!(approx_zero(re(0.0), 0.0, &tol));
    }

    #[test]
    fn reflect_examples() {
        let tol = Tolerance::default();
        let r = reflect(&unit(2, 0), &[re(3.0), re(5.0)], &tol).unwrap();
        assert!(close(r[0], re(-3.0)) && close(r[1], re(5.0)));

        let alpha = [re(1.0), re(-1.0), re(0.0)];
        let x = [re(0.3), re(-1.7), re(2.5)];
        let r = reflect(&alpha, &x, &tol).unwrap();
        assert!(close(r[0], x[1]) && close(r[1], x[0]) && close(r[2], x[2]));

        assert!(matches!(
            reflect(&[re(1.0), c(0.0, 1.0)], &[re(1.0), re(1.0)], &tol),
            Err(Error::IsotropicVector(_))
        ));
    }

    #[test]
    fn sample_point_examples() {
        let a = sample_point(3, 7, &[], 0.05).unwrap();
        let b = sample_point(3, 7, &[], 0.05).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.im == 0.0 && x.re.abs() <= 1.0));

        let p = sample_point(2, 3, &[unit(2, 0)], 0.05).unwrap();
        assert!(p[0].re.abs() >= 0.05);

        assert_eq!(
            sample_point(1, 0, &[unit(1, 0)], 2.0),
            Err(Error::SamplingExhausted(MAX_SAMPLE_ATTEMPTS))
        );
        assert!(sample_point(1, 0, &[], 0.0).is_err());
    }

    #[test]
    fn collinearity_and_isotropy() {
        let tol = Tolerance::default();
        let a = [re(1.0), re(2.0), c(0.0, 1.0)];
        let b = scale_vec(c(-2.0, 0.5), &a);
        assert!(is_collinear(&a, &b, &tol));
        assert!(!is_collinear(&a, &[re(1.0), re(2.0), re(1.0)], &tol));
        assert!(is_isotropic(&[re(1.0), c(0.0, 1.0)], &tol));
        assert!(!is_isotropic(&[re(1.0), c(0.0, 2.0)], &tol));
    }

    #[test]
    fn sqrt_int_branch() {
        assert!(close(sqrt_int(4), re(2.0)));
        assert!(close(sqrt_int(-2), c(0.0, 2f64.sqrt())));
        assert!(close(sqrt_int(-3) * sqrt_int(-3), re(-3.0)));
    }

    fn cvec(n: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| c(a, b)), n)
    }

    proptest! {
        #[test]
        fn bilinear_is_symmetric(x in cvec(5), y in cvec(5)) {
            let a = bilinear(&x, &y).unwrap();
            let b = bilinear(&y, &x).unwrap();
            prop_assert!((a - b).norm() <= 1e-14 * (1.0 + dot_scale(&x, &y)));
        }

        #[test]
        fn reflect_is_involution(alpha in cvec(4), x in cvec(4)) {
            let tol = Tolerance::default();
            prop_assume!(dot(&alpha, &alpha).norm() > 0.1 * norm(&alpha).powi(2));
            let once = reflect(&alpha, &x, &tol).unwrap();
            let twice = reflect(&alpha, &once, &tol).unwrap();
            let err = norm(&axpy(&twice, re(-1.0), &x));
            prop_assert!(err <= 1e-10 * (1.0 + norm(&x)));
            // fixes the hyperplane: (α, s_α x) = −(α, x)
            prop_assert!((dot(&alpha, &once) + dot(&alpha, &x)).norm() <= 1e-10 * (1.0 + dot_scale(&alpha, &x)));
        }

        #[test]
        fn invert_round_trip(entries in proptest::collection::vec(-1.0f64..1.0, 25), shift in 3.0f64..6.0) {
            let tol = Tolerance::default();
            let mut a = Matrix::zeros(5, 5);
            for i in 0..5 {
                for j in 0..5 {
                    a[(i, j)] = re(entries[i * 5 + j]);
                }
                a[(i, i)] += re(shift);
            }
            let inv = a.invert(&tol).unwrap();
            let err = (&(&a * &inv) - &Matrix::identity(5)).max_abs();
            prop_assert!(err <= 10.0 * tol.rel_eps * a.max_abs());
        }

        #[test]
        fn sampling_is_reproducible(seed in any::<u64>(), dim in 1usize..8) {
            let a = sample_point(dim, seed, &[], 0.01).unwrap();
            let b = sample_point(dim, seed, &[], 0.01).unwrap();
            prop_assert_eq!(a.iter().map(|z| z.re.to_bits()).collect::<Vec<_>>(),
                            b.iter().map(|z| z.re.to_bits()).collect::<Vec<_>>());
        }
    }
}
