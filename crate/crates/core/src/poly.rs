//! Dense complex polynomials in one and two variables, with an
//! Aberth–Ehrlich root finder.

use crate::numeric::Scalar;

fn zero() -> Scalar {
    Scalar::new(0.0, 0.0)
}

/// Univariate polynomial, coefficients from degree 0 upward.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn constant(c: Scalar) -> Self {
        Poly(vec![c])
    }

    /// Degree after dropping exactly-zero leading coefficients; `None` for
    /// the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| *c != zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn eval(&self, z: Scalar) -> Scalar {
        self.0.iter().rev().fold(zero(), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, &c)| c * i as f64).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly((0..n)
            .map(|i| self.0.get(i).copied().unwrap_or_default() + other.0.get(i).copied().unwrap_or_default())
            .collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = vec![zero(); self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(Scalar::new(1.0, 0.0)), |acc, _| acc.mul(self))
    }

    /// Roots with multiplicity. Exact roots at zero are split off first; the
    /// rest come from Aberth–Ehrlich iteration followed by clustering of
    /// nearby approximations (multiple roots) and Newton polishing of each
    /// cluster centroid on the appropriate derivative.
    pub fn roots(&self) -> Vec<Scalar> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let low = self.0.iter().position(|c| *c != zero()).unwrap_or(0);
        let reduced = Poly(self.0[low..=deg].to_vec());
        let mut out = vec![zero(); low];
        let approx = aberth(&reduced);
        for (centre, mult) in cluster(&approx) {
            out.extend(std::iter::repeat_n(polish(&reduced, centre, mult), mult));
        }
        out
    }
}

fn aberth(p: &Poly) -> Vec<Scalar> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lead = p.0[n];
    let monic = Poly(p.0[..=n].iter().map(|&c| c / lead).collect());
    let dp = monic.derivative();
    // Cauchy bound on the root moduli
    let radius = 1.0 + monic.0[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let start = radius.min(1e6) * 0.5 + 0.5;
    let mut z: Vec<Scalar> = (0..n)
        .map(|k| Scalar::from_polar(start, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let pz = monic.eval(z[k]);
            if pz == zero() {
                continue;
            }
            let ratio = pz / dp.eval(z[k]);
            let repulsion: Scalar = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if w.re.is_finite() && w.im.is_finite() {
                z[k] -= w;
                moved = moved.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Groups approximations lying within `1e-3` (relative) of each other.
fn cluster(z: &[Scalar]) -> Vec<(Scalar, usize)> {
    let mut used = vec![false; z.len()];
    let mut out = Vec::new();
    for i in 0..z.len() {
        if used[i] {
            continue;
        }
        let mut members = vec![i];
        used[i] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for j in 0..z.len() {
                if !used[j] && members.iter().any(|&k| (z[j] - z[k]).norm() <= 1e-3 * (1.0 + z[k].norm())) {
                    used[j] = true;
                    members.push(j);
                    grew = true;
                }
            }
        }
        let centre = members.iter().map(|&k| z[k]).sum::<Scalar>() / members.len() as f64;
        out.push((centre, members.len()));
    }
    out
}

/// Newton on the `(mult−1)`-th derivative, which has a simple root there.
fn polish(p: &Poly, start: Scalar, mult: usize) -> Scalar {
    let mut q = p.clone();
    for _ in 1..mult {
        q = q.derivative();
    }
    let dq = q.derivative();
    let mut z = start;
    for _ in 0..20 {
        let d = dq.eval(z);
        if d == zero() {
            break;
        }
        let step = q.eval(z) / d;
        let next = z - step;
        if !(next.re.is_finite() && next.im.is_finite()) || p.eval(next).norm() > p.eval(z).norm() * 10.0 {
            break;
        }
        z = next;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Bivariate polynomial `Σ c[i][j] B^i C^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    pub coef: Vec<Vec<Scalar>>,
}

impl Poly2 {
    pub fn from_terms(terms: &[(usize, usize, f64)]) -> Self {
        let db = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let dc = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coef = vec![vec![zero(); dc + 1]; db + 1];
        for &(i, j, v) in terms {
            coef[i][j] += Scalar::new(v, 0.0);
        }
        Poly2 { coef }
    }

    pub fn eval(&self, b: Scalar, c: Scalar) -> Scalar {
        self.coef
            .iter()
            .rev()
            .fold(zero(), |acc, row| acc * b + Poly(row.clone()).eval(c))
    }

    /// Sum of the magnitudes of the terms at `(b, c)`.
    pub fn eval_scale(&self, b: Scalar, c: Scalar) -> f64 {
        let mut s = 0.0;
        for (i, row) in self.coef.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                s += v.norm() * b.norm().powi(i as i32) * c.norm().powi(j as i32);
            }
        }
        s
    }

    pub fn degree_c(&self) -> usize {
        self.coef
            .iter()
            .filter_map(|row| row.iter().rposition(|v| *v != zero()))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `C^j` as a polynomial in `B`.
    pub fn c_coefficient(&self, j: usize) -> Poly {
        Poly(self.coef.iter().map(|row| row.get(j).copied().unwrap_or_default()).collect())
    }

    /// `den(B)^d · P(B, num(B)/den(B))` with `d` the degree in `C`: a
    /// polynomial in `B` vanishing wherever `P` does on the graph `C = num/den`.
    pub fn substitute_c(&self, num: &Poly, den: &Poly) -> Poly {
        let d = self.degree_c();
        let mut out = Poly(Vec::new());
        for j in 0..=d {
            let term = self.c_coefficient(j).mul(&num.pow(j as u32)).mul(&den.pow((d - j) as u32));
            out = out.add(&term);
        }
        out
    }

    /// `P(b, C)` as a polynomial in `C`.
    pub fn at_b(&self, b: Scalar) -> Poly {
        let d = self.degree_c();
        Poly((0..=d).map(|j| self.c_coefficient(j).eval(b)).collect())
    }
}
