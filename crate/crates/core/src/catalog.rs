//! Constructors for the named configuration families, the locus → vee
//! weighting map, coordinate projection and hyperplane restriction.
//!
//! Square roots of integer parameters use the fixed branch `√m = i·√|m|` for
//! negative `m`. Every identity the checkers rely on depends only on squares,
//! so the branch is not observable in any verdict.

use std::fmt;
use std::str::FromStr;

use crate::config::{Configuration, Entry, Kind, Tag};
use crate::error::{Error, Result};
use crate::numeric::{
    axpy, dot, herm_dot, is_collinear, is_isotropic, norm, re, rng, scale_vec, sqrt_int, unit, Scalar,
    Tolerance, Vector,
};
use rand::Rng;

/// `m* = max(m, −1−m)`.
pub fn star(m: i64) -> i64 {
    m.max(-1 - m)
}

fn e_minus(dim: usize, i: usize, j: usize, coef_j: Scalar) -> Vector {
    let mut v = unit(dim, i);
    v[j] -= coef_j;
    v
}

fn to_mult(m: i64, what: &str) -> Result<u32> {
    u32::try_from(m).map_err(|_| Error::BadParameter(format!("{what} multiplicity {m} out of range")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

impl FromStr for RootFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(RootFamily::A),
            "B" => Ok(RootFamily::B),
            "C" => Ok(RootFamily::C),
            "D" => Ok(RootFamily::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootFamily::A => "A",
            RootFamily::B => "B",
            RootFamily::C => "C",
            RootFamily::D => "D",
        };
        f.write_str(s)
    }
}

/// Positive roots of a classical root system with orbit multiplicities.
///
/// `A` and `D` take one multiplicity; `B` and `C` take two, the first for the
/// long orbit `e_i ± e_j` and the second for `e_i` (B) or `2e_i` (C).
pub fn coxeter_positive_roots(family: RootFamily, rank: usize, multiplicities: &[u32]) -> Result<Configuration> {
    if rank < 2 {
        return Err(Error::BadParameter(format!("rank must be at least 2, got {rank}")));
    }
    let needed = match family {
        RootFamily::A | RootFamily::D => 1,
        RootFamily::B | RootFamily::C => 2,
    };
    if multiplicities.len() != needed || multiplicities.contains(&0) {
        return Err(Error::BadParameter(format!(
            "{family}_{rank} needs {needed} positive orbit multiplicities, got {multiplicities:?}"
        )));
    }
    let mut out = Vec::new();
    let dim = match family {
        RootFamily::A => rank + 1,
        _ => rank,
    };
    for i in 0..dim {
        for j in (i + 1)..dim {
            out.push((e_minus(dim, i, j, re(1.0)), multiplicities[0]));
            if family != RootFamily::A {
                out.push((e_minus(dim, i, j, re(-1.0)), multiplicities[0]));
            }
        }
    }
    match family {
        RootFamily::B => (0..dim).for_each(|i| out.push((unit(dim, i), multiplicities[1]))),
        RootFamily::C => (0..dim).for_each(|i| out.push((scale_vec(re(2.0), &unit(dim, i)), multiplicities[1]))),
        _ => {}
    }
    let label = format!("{family}_{rank}{multiplicities:?}");
    Configuration::locus(dim, label, out)
}

/// `A_{n-1,1}(m)` in `(n+1)`-space.
pub fn a_n1(n: usize, m: i64) -> Result<Configuration> {
    if n < 2 {
        return Err(Error::BadParameter(format!("A_(n-1,1) needs n >= 2, got {n}")));
    }
    if m == 0 || m == -1 {
        return Err(Error::BadParameter(format!("A_(n-1,1)(m) needs m not in {{0, -1}}, got {m}")));
    }
    let dim = n + 1;
    let ms = to_mult(star(m), "m*")?;
    let root = sqrt_int(m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((e_minus(dim, i, j, re(1.0)), ms));
        }
    }
    for i in 0..n {
        out.push((e_minus(dim, i, n, root), 1));
    }
    Configuration::locus(dim, format!("A_({},1)({m})", n - 1), out)
}

/// `C_{n,1}(m, l)` in `(n+1)`-space, with `k = (2m+1)/(2l+1)`.
///
/// Orbits whose starred multiplicity is zero are omitted.
pub fn c_n1(n: usize, m: i64, l: i64) -> Result<Configuration> {
    if n < 2 {
        return Err(Error::BadParameter(format!("C_(n,1) needs n >= 2, got {n}")));
    }
    let (num, den) = (2 * m + 1, 2 * l + 1);
    if num % den != 0 {
        return Err(Error::BadParameter(format!("(2l+1) = {den} does not divide (2m+1) = {num}")));
    }
    let k = num / den;
    if k == -1 {
        return Err(Error::BadParameter("k = -1 makes e_i ± √k e_(n+1) isotropic".into()));
    }
    let (ks, ms, ls) = (to_mult(star(k), "k*")?, to_mult(star(m), "m*")?, to_mult(star(l), "l*")?);
    let dim = n + 1;
    let rk = sqrt_int(k);
    let mut out = Vec::new();
    if ks > 0 {
        for i in 0..n {
            for j in (i + 1)..n {
                out.push((e_minus(dim, i, j, re(1.0)), ks));
                out.push((e_minus(dim, i, j, re(-1.0)), ks));
            }
        }
    }
    if ms > 0 {
        (0..n).for_each(|i| out.push((scale_vec(re(2.0), &unit(dim, i)), ms)));
    }
    for i in 0..n {
        out.push((e_minus(dim, i, n, rk), 1));
        out.push((e_minus(dim, i, n, -rk), 1));
    }
    if ls > 0 {
        out.push((scale_vec(2.0 * rk, &unit(dim, n)), ls));
    }
    Configuration::locus(dim, format!("C_({n},1)({m},{l})"), out)
}

/// The family `A_{n-1,2}(m)` in `(n+2)`-space.
pub fn a_n2(n: usize, m: i64) -> Result<Configuration> {
    if n < 2 || m < 1 {
        return Err(Error::BadParameter(format!("A_(n-1,2)(m) needs n >= 2 and m >= 1, got n={n}, m={m}")));
    }
    let dim = n + 2;
    let (p, q) = (sqrt_int(m), sqrt_int(-1 - m));
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((e_minus(dim, i, j, re(1.0)), m as u32));
        }
    }
    (0..n).for_each(|i| out.push((e_minus(dim, i, n, p), 1)));
    (0..n).for_each(|i| out.push((e_minus(dim, i, n + 1, q), 1)));
    let mut cross = scale_vec(p, &unit(dim, n));
    cross[n + 1] = -q;
    out.push((cross, 1));
    Configuration::locus(dim, format!("A_({},2)({m})", n - 1), out)
}

/// Normal of the hyperplane `x_1+…+x_n + x_{n+1}/√m + x_{n+2}/√(−1−m) = 0`
/// containing `A_{n-1,2}(m)`.
pub fn a_n2_hyperplane(n: usize, m: i64) -> Vector {
    let mut nu = vec![re(1.0); n + 2];
    nu[n] = 1.0 / sqrt_int(m);
    nu[n + 1] = 1.0 / sqrt_int(-1 - m);
    nu
}

/// `A_{n-1,2}(m)` restricted to its containing hyperplane, in `(n+1)`-space.
pub fn a_n2_restricted(n: usize, m: i64) -> Result<Configuration> {
    let cfg = a_n2(n, m)?;
    let label = format!("{} restricted", cfg.label());
    Ok(restrict_to_hyperplane(&cfg, &a_n2_hyperplane(n, m))?.with_label(label))
}

/// Vectors `μ_i e_i − μ_j e_j` (i < j) with multiplicity `mult[i][j]`.
pub fn a_type_general(mu: &[Scalar], mult: &[Vec<u32>]) -> Result<Configuration> {
    let n = mu.len();
    if n < 2 || mult.len() != n || mult.iter().any(|r| r.len() != n) {
        return Err(Error::BadParameter("mu and an n×n multiplicity table are required".into()));
    }
    if let Some(i) = mu.iter().position(|x| x.norm() == 0.0) {
        return Err(Error::BadParameter(format!("mu_{} is zero", i + 1)));
    }
    let tol = Tolerance::default();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![re(0.0); n];
            v[i] = mu[i];
            v[j] = -mu[j];
            if is_isotropic(&v, &tol) {
                return Err(Error::IsotropicVector(format!("mu_{}^2 + mu_{}^2 = 0", i + 1, j + 1)));
            }
            if mult[i][j] == 0 || mult[i][j] != mult[j][i] {
                return Err(Error::BadParameter(format!(
                    "multiplicity table must be symmetric and positive at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            out.push((v, mult[i][j]));
        }
    }
    Configuration::locus(n, format!("A-type mu={mu:?}"), out)
}

/// `𝔄_n(c)`: `√(c_i c_j)(e_i − e_j)` and `√c_i e_i` in `n`-space.
pub fn vee_an_c(c: &[f64]) -> Result<Configuration> {
    let n = c.len();
    if n == 0 || c.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        return Err(Error::BadParameter(format!("c must be positive, got {c:?}")));
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(scale_vec(re((c[i] * c[j]).sqrt()), &e_minus(n, i, j, re(1.0))));
        }
    }
    (0..n).for_each(|i| out.push(scale_vec(re(c[i].sqrt()), &unit(n, i))));
    Configuration::vee(n, format!("vee-A_{n}(c={c:?})"), out)
}

/// `𝔅_n(c)`: `√(c_i c_j)(e_i ± e_j)` and `√(2 c_i (c_i + c_0)) e_i`.
pub fn vee_bn_c(c0: f64, c: &[f64]) -> Result<Configuration> {
    let n = c.len();
    if n == 0 || !c0.is_finite() || c.iter().any(|&x| !x.is_finite() || x <= 0.0 || x * (x + c0) <= 0.0) {
        return Err(Error::BadParameter(format!(
            "need c_i > 0 and c_i (c_i + c_0) > 0, got c0={c0}, c={c:?}"
        )));
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let s = re((c[i] * c[j]).sqrt());
            out.push(scale_vec(s, &e_minus(n, i, j, re(1.0))));
            out.push(scale_vec(s, &e_minus(n, i, j, re(-1.0))));
        }
    }
    (0..n).for_each(|i| out.push(scale_vec(re((2.0 * c[i] * (c[i] + c0)).sqrt()), &unit(n, i))));
    Configuration::vee(n, format!("vee-B_{n}(c0={c0},c={c:?})"), out)
}

/// Pair order used by [`vee_a3_general`]: 12, 13, 14, 23, 24, 34.
pub const A3_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Covectors `μ_ij (e_i − e_j)` in 4-space.
pub fn vee_a3_general(mu: &[Scalar; 6]) -> Result<Configuration> {
    if mu.iter().any(|x| x.norm() == 0.0) {
        return Err(Error::BadParameter("all mu_ij must be nonzero".into()));
    }
    let out = A3_PAIRS
        .iter()
        .zip(mu)
        .map(|(&(i, j), &m)| scale_vec(m, &e_minus(4, i, j, re(1.0))))
        .collect();
    Configuration::vee(4, format!("vee-A3(mu={mu:?})"), out)
}

/// `α ↦ √(m_α) α` with unit weights.
pub fn weighted_from_locus(config: &Configuration) -> Result<Configuration> {
    if config.kind() != Kind::Locus {
        return Err(Error::WrongKind { expected: "locus" });
    }
    let entries = config
        .entries()
        .iter()
        .map(|e| {
            let m = match e.tag {
                Tag::Multiplicity(m) => m,
                Tag::Weight(_) => unreachable!("locus kind carries multiplicities"),
            };
            Entry::unit_weight(scale_vec(re((m as f64).sqrt()), &e.vector))
        })
        .collect();
    Configuration::new(
        config.dim(),
        Kind::Vee,
        entries,
        format!("weighted {}", config.label()),
        &Tolerance::default(),
    )
}

/// Drops coordinate `coordinate` from every covector; vanishing covectors are
/// removed and newly collinear pairs are an error.
pub fn project_to_coordinate_zero(config: &Configuration, coordinate: usize) -> Result<Configuration> {
    if config.kind() != Kind::Vee {
        return Err(Error::WrongKind { expected: "vee" });
    }
    if coordinate >= config.dim() || config.dim() < 2 {
        return Err(Error::BadParameter(format!(
            "coordinate {coordinate} out of range for dimension {}",
            config.dim()
        )));
    }
    let tol = Tolerance::default();
    let mut kept: Vec<(usize, Entry)> = Vec::new();
    for (i, e) in config.entries().iter().enumerate() {
        let v: Vector = e
            .vector
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != coordinate)
            .map(|(_, &z)| z)
            .collect();
        if norm(&v) <= tol.geometric() * norm(&e.vector) {
            continue;
        }
        if let Some((j, _)) = kept.iter().find(|(_, k)| is_collinear(&k.vector, &v, &tol)) {
            return Err(Error::CollinearityCollision(*j, i));
        }
        kept.push((i, Entry { vector: v, tag: e.tag.clone() }));
    }
    Configuration::new(
        config.dim() - 1,
        Kind::Vee,
        kept.into_iter().map(|(_, e)| e).collect(),
        format!("{} projected x{}=0", config.label(), coordinate + 1),
        &tol,
    )
}

const BASIS_ATTEMPTS: u64 = 16;

/// A bilinear-orthonormal basis of the hyperplane `(normal, x) = 0`.
///
/// Complex Gram–Schmidt on the projected standard basis; an isotropic
/// intermediate direction triggers a retry with a seeded random basis.
pub fn hyperplane_basis(normal: &[Scalar], tol: &Tolerance) -> Result<Vec<Vector>> {
    let d = normal.len();
    if norm(normal) == 0.0 {
        return Err(Error::BadParameter("hyperplane normal is zero".into()));
    }
    if is_isotropic(normal, tol) {
        return Err(Error::IsotropicVector("hyperplane normal".into()));
    }
    let nn = dot(normal, normal);
    for attempt in 0..BASIS_ATTEMPTS {
        let seeds: Vec<Vector> = if attempt == 0 {
            (0..d).map(|i| unit(d, i)).collect()
        } else {
            let mut r = rng(attempt);
            (0..d).map(|_| (0..d).map(|_| re(r.gen_range(-1.0..1.0))).collect()).collect()
        };
        let mut basis: Vec<Vector> = Vec::with_capacity(d - 1);
        let mut ok = true;
        for s in seeds {
            if basis.len() == d - 1 {
                break;
            }
            let mut v = axpy(&s, -dot(normal, &s) / nn, normal);
            let start = norm(&v);
            for u in &basis {
                v = axpy(&v, -dot(u, &v), u);
            }
            if norm(&v) <= 1e-8 * start.max(tol.zero_scale_floor) {
                continue;
            }
            if is_isotropic(&v, tol) {
                ok = false;
                break;
            }
            let q = dot(&v, &v).sqrt();
            basis.push(scale_vec(1.0 / q, &v));
        }
        if ok && basis.len() == d - 1 {
            return Ok(basis);
        }
    }
    Err(Error::IsotropicDirection)
}

/// Re-expresses a configuration lying in a hyperplane in a bilinear-orthonormal
/// basis of that hyperplane. Pairwise bilinear products are preserved.
pub fn restrict_to_hyperplane(config: &Configuration, normal: &[Scalar]) -> Result<Configuration> {
    let tol = Tolerance::default();
    if normal.len() != config.dim() {
        return Err(Error::LengthMismatch(normal.len(), config.dim()));
    }
    if is_isotropic(normal, &tol) {
        return Err(Error::IsotropicVector("hyperplane normal".into()));
    }
    for (i, v) in config.vectors().iter().enumerate() {
        if dot(normal, v).norm() > tol.geometric() * norm(normal) * norm(v) {
            return Err(Error::VectorOffPlane(i));
        }
    }
    let basis = hyperplane_basis(normal, &tol)?;
    let d = config.dim() - 1;
    config.map_vectors(d, |v| basis.iter().map(|u| dot(u, v)).collect())
}

/// Coordinates of the configuration in a Hermitian-orthonormal basis of the
/// linear span of its vectors (identity when they already span).
pub fn restrict_to_span(config: &Configuration) -> Result<Configuration> {
    let tol = Tolerance::default();
    let mut basis: Vec<Vector> = Vec::new();
    for v in config.vectors() {
        let mut w = v.clone();
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for q in &basis {
                w = axpy(&w, -herm_dot(q, &w), q);
            }
        }
        let n = norm(&w);
        if n > tol.geometric() * norm(&v) {
            basis.push(scale_vec(re(1.0 / n), &w));
        }
    }
    if basis.len() == config.dim() {
        return Ok(config.clone());
    }
    let r = basis.len();
    config
        .map_vectors(r, |v| basis.iter().map(|q| herm_dot(q, v)).collect())
        .map(|c| {
            let label = format!("{} (span, dim {r})", c.label());
            c.with_label(label)
        })
}

// ---------------------------------------------------------------------------
// Catalog names
// ---------------------------------------------------------------------------

fn parse_num<T: FromStr>(key: &str, s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("cannot parse {key}={s}")))
}

fn parse_list<T: FromStr>(key: &str, s: &str) -> Result<Vec<T>> {
    s.split(',').map(|x| parse_num(key, x)).collect()
}

struct Params<'a> {
    name: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn new(name: &'a str, tokens: &[&'a str]) -> Result<Self> {
        let mut pairs = Vec::new();
        for t in tokens {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| Error::UnknownCatalogName(format!("{name}: expected key=value, got {t}")))?;
            pairs.push((k, v));
        }
        Ok(Params { name, pairs })
    }

    fn get(&self, key: &str) -> Result<&'a str> {
        self.pairs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::UnknownCatalogName(format!("{}: missing {key}=", self.name)))
    }

    fn get_or(&self, key: &str, default: &'a str) -> &'a str {
        self.get(key).unwrap_or(default)
    }
}

/// Builds a configuration from its catalog name.
///
/// Grammar (colon-delimited):
/// `A:<rank>[:m=<k>]`, `D:<rank>[:m=<k>]`, `B:<rank>:m=<long>,<short>`,
/// `C:<rank>:m=<long>,<short>`, `An1:n=<n>:m=<m>`, `Cn1:n=<n>:m=<m>:l=<l>`,
/// `An2:n=<n>:m=<m>`, `An2-restricted:n=<n>:m=<m>`, `vee-An:c=<c1,..>`,
/// `vee-Bn:c0=<c0>:c=<c1,..>`, `vee-An2:n=<n>:m=<m>` (the projected real
/// system), `vee-A3:mu=<m12,m13,m14,m23,m24,m34>`, and `weighted:<name>` to
/// apply `α ↦ √m_α α` to a locus entry.
pub fn by_name(name: &str) -> Result<Configuration> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("weighted:") {
        return weighted_from_locus(&by_name(rest)?).map(|c| c.with_label(name));
    }
    let tokens: Vec<&str> = name.split(':').collect();
    let head = tokens[0];
    let cfg = match head {
        "A" | "B" | "C" | "D" => {
            let family: RootFamily = head.parse()?;
            let rank: usize = parse_num("rank", tokens.get(1).ok_or_else(|| Error::UnknownCatalogName(name.into()))?)?;
            let p = Params::new(name, &tokens[2..])?;
            let default = if matches!(family, RootFamily::B | RootFamily::C) { "1,1" } else { "1" };
            let mults: Vec<u32> = parse_list("m", p.get_or("m", default))?;
            coxeter_positive_roots(family, rank, &mults)?
        }
        "An1" => {
            let p = Params::new(name, &tokens[1..])?;
            a_n1(parse_num("n", p.get("n")?)?, parse_num("m", p.get("m")?)?)?
        }
        "Cn1" => {
            let p = Params::new(name, &tokens[1..])?;
            c_n1(
                parse_num("n", p.get("n")?)?,
                parse_num("m", p.get("m")?)?,
                parse_num("l", p.get("l")?)?,
            )?
        }
        "An2" => {
            let p = Params::new(name, &tokens[1..])?;
            a_n2(parse_num("n", p.get("n")?)?, parse_num("m", p.get("m")?)?)?
        }
        "An2-restricted" => {
            let p = Params::new(name, &tokens[1..])?;
            a_n2_restricted(parse_num("n", p.get("n")?)?, parse_num("m", p.get("m")?)?)?
        }
        "vee-An" => {
            let p = Params::new(name, &tokens[1..])?;
            vee_an_c(&parse_list("c", p.get("c")?)?)?
        }
        "vee-Bn" => {
            let p = Params::new(name, &tokens[1..])?;
            vee_bn_c(parse_num("c0", p.get_or("c0", "0"))?, &parse_list("c", p.get("c")?)?)?
        }
        "vee-An2" => {
            let p = Params::new(name, &tokens[1..])?;
            projected_a_n2(parse_num("n", p.get("n")?)?, parse_num("m", p.get("m")?)?)?
        }
        "vee-A3" => {
            let p = Params::new(name, &tokens[1..])?;
            let mu: Vec<f64> = parse_list("mu", p.get("mu")?)?;
            let mu: [Scalar; 6] = mu
                .iter()
                .map(|&x| re(x))
                .collect::<Vec<_>>()
                .try_into()
                .map_err(|_| Error::Parse("vee-A3 needs exactly six mu values".into()))?;
            vee_a3_general(&mu)?
        }
        _ => return Err(Error::UnknownCatalogName(name.to_string())),
    };
    Ok(cfg.with_label(name))
}

/// The real projected system `𝔄_{n-1,2}(m)`: weighted `A_{n-1,2}(m)` with the
/// last coordinate dropped.
pub fn projected_a_n2(n: usize, m: i64) -> Result<Configuration> {
    let w = weighted_from_locus(&a_n2(n, m)?)?;
    let p = project_to_coordinate_zero(&w, n + 1)?;
    Ok(p.with_label(format!("vee-A_({},2)({m}) projected", n - 1)))
}

/// Representative catalog names, one per family and a few parameter choices.
pub const EXAMPLE_NAMES: &[&str] = &[
    "A:2:m=1",
    "A:3:m=1",
    "A:3:m=2",
    "B:2:m=1,2",
    "B:3:m=1,1",
    "C:3:m=2,1",
    "D:3:m=1",
    "D:4:m=1",
    "An1:n=2:m=2",
    "An1:n=3:m=1",
    "An1:n=3:m=2",
    "An1:n=3:m=-2",
    "An1:n=2:m=-3",
    "Cn1:n=2:m=1:l=0",
    "Cn1:n=2:m=1:l=1",
    "Cn1:n=2:m=2:l=0",
    "Cn1:n=3:m=4:l=1",
    "An2:n=2:m=1",
    "An2:n=2:m=2",
    "An2:n=3:m=2",
    "An2-restricted:n=2:m=2",
    "vee-An:c=1,2,3",
    "vee-Bn:c0=1:c=1,2",
    "vee-An2:n=3:m=1",
    "vee-An2:n=3:m=2",
    "vee-A3:mu=1,1,1,1,1,1",
    "weighted:An1:n=3:m=2",
    "weighted:Cn1:n=2:m=1:l=0",
];

pub fn examples() -> Vec<Configuration> {
    EXAMPLE_NAMES
        .iter()
        .map(|n| by_name(n).expect("catalog example names are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::c;

    fn assert_gram_real(cfg: &Configuration) {
        for row in cfg.gram() {
            for g in row {
                assert!(g.im.abs() < 1e-12, "{}: non-real Gram entry {g}", cfg.label());
            }
        }
    }

    #[test]
    fn coxeter_examples() {
        let a2 = coxeter_positive_roots(RootFamily::A, 2, &[1]).unwrap();
        assert_eq!((a2.dim(), a2.len()), (3, 3));
        assert_eq!(a2.vector(0), &[re(1.0), re(-1.0), re(0.0)][..]);
        let b2 = coxeter_positive_roots(RootFamily::B, 2, &[3, 5]).unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!((b2.multiplicity(0), b2.multiplicity(2)), (3, 5));
        let d3 = coxeter_positive_roots(RootFamily::D, 3, &[1]).unwrap();
        assert_eq!(d3.len(), 6);
        assert!(matches!("E".parse::<RootFamily>(), Err(Error::UnknownFamily(_))));
        assert!(coxeter_positive_roots(RootFamily::B, 2, &[1]).is_err());
    }

    #[test]
    fn a_n1_examples() {
        let cfg = a_n1(2, 2).unwrap();
        assert_eq!((cfg.dim(), cfg.len()), (3, 3));
        assert_eq!(cfg.multiplicity(0), 2);
        assert!((cfg.vector(1)[2] - re(-(2f64.sqrt()))).norm() < 1e-15);

        let neg = a_n1(2, -2).unwrap();
        assert_eq!(neg.multiplicity(0), 1);
        assert!((neg.vector(1)[2] - c(0.0, -(2f64.sqrt()))).norm() < 1e-15);

        let a = a_n1(3, 1).unwrap();
        assert_eq!((a.dim(), a.len()), (4, 6));
        assert!((0..6).all(|i| a.multiplicity(i) == 1));

        assert!(a_n1(2, 0).is_err() && a_n1(2, -1).is_err() && a_n1(1, 2).is_err());
        assert_gram_real(&a_n1(3, -3).unwrap());
    }

    #[test]
    fn c_n1_examples() {
        let cfg = c_n1(2, 2, 0).unwrap(); // k = 5, l* = 0
        assert_eq!(cfg.len(), 2 + 2 + 4);
        assert_eq!(cfg.multiplicity(0), 5);
        assert_eq!(cfg.multiplicity(2), 2);
        assert_eq!(cfg.multiplicity(4), 1);
        let k1 = c_n1(2, 1, 1).unwrap();
        assert_eq!(k1.len(), 2 + 2 + 4 + 1);
        assert!((k1.vector(8)[2] - re(2.0)).norm() < 1e-15);
        let k3 = c_n1(2, 1, 0).unwrap();
        assert!((k3.vector(4)[2] - re(-(3f64.sqrt()))).norm() < 1e-15);
        assert!(matches!(c_n1(2, 1, 2), Err(Error::BadParameter(_))));
        assert_gram_real(&c_n1(3, 1, -1).unwrap());
    }

    #[test]
    fn a_n2_examples() {
        let cfg = a_n2(2, 2).unwrap();
        assert_eq!((cfg.dim(), cfg.len()), (4, 6));
        let cross = cfg.vector(5);
        assert!((dot(cross, cross) - re(-1.0)).norm() < 1e-14);
        for n in 2..5 {
            for m in 1..4 {
                let cfg = a_n2(n, m).unwrap();
                assert_eq!(cfg.len(), n * (n - 1) / 2 + 2 * n + 1);
                assert_gram_real(&cfg);
                let nu = a_n2_hyperplane(n, m);
                for v in cfg.vectors() {
                    assert!(dot(&nu, &v).norm() < 1e-14);
                }
            }
        }
        assert!(a_n2(2, 0).is_err());
    }

    #[test]
    fn a_n2_at_one_matches_a_n1_minus_two() {
        for n in 2..5 {
            let x = a_n2(n, 1).unwrap();
            let y = a_n1(n + 1, -2).unwrap();
            assert_eq!(fingerprint(&x), fingerprint(&y));
        }
    }

    fn fingerprint(cfg: &Configuration) -> (Vec<(i64, u32)>, Vec<i64>) {
        let q = |z: Scalar| (z.re * 1e6).round() as i64;
        let mut diag: Vec<(i64, u32)> =
            (0..cfg.len()).map(|i| (q(dot(cfg.vector(i), cfg.vector(i))), cfg.multiplicity(i))).collect();
        let mut off = Vec::new();
        for i in 0..cfg.len() {
            for j in (i + 1)..cfg.len() {
                off.push(q(dot(cfg.vector(i), cfg.vector(j))).abs());
            }
        }
        diag.sort();
        off.sort();
        (diag, off)
    }

    #[test]
    fn a_type_general_examples() {
        let ones = vec![vec![1u32; 3]; 3];
        let cfg = a_type_general(&[re(1.0); 3], &ones).unwrap();
        assert_eq!(cfg.len(), 3);
        let mut m = ones.clone();
        m[0][1] = 2;
        m[1][0] = 2;
        let p1 = a_type_general(&[re(1.0), re(1.0), re(2f64.sqrt())], &m).unwrap();
        assert_eq!(p1.multiplicity(0), 2);
        let iso = a_type_general(&[re(1.0), c(0.0, 1.0)], &[vec![1, 1], vec![1, 1]]);
        assert!(matches!(iso, Err(Error::IsotropicVector(_))));
    }

    #[test]
    fn vee_constructors() {
        let a = vee_an_c(&[1.0, 1.0]).unwrap();
        assert_eq!(a.vectors(), vec![vec![re(1.0), re(-1.0)], vec![re(1.0), re(0.0)], vec![re(0.0), re(1.0)]]);
        assert_eq!(vee_an_c(&[1.0, 2.0, 3.0]).unwrap().len(), 6);
        assert!(vee_an_c(&[1.0, -1.0]).is_err());

        let b = vee_bn_c(0.0, &[1.0, 1.0]).unwrap();
        assert_eq!(b.len(), 4);
        assert!((b.vector(2)[0] - re(2f64.sqrt())).norm() < 1e-15);
        assert_eq!(vee_bn_c(1.0, &[1.0, 2.0]).unwrap().len(), 4);
        assert!(vee_bn_c(-2.0, &[1.0]).is_err());

        let a3 = vee_a3_general(&[re(1.0); 6]).unwrap();
        assert_eq!((a3.dim(), a3.len()), (4, 6));
    }

    #[test]
    fn weighting_preserves_directions() {
        let cfg = a_n1(2, 4).unwrap();
        let w = weighted_from_locus(&cfg).unwrap();
        assert_eq!(w.kind(), Kind::Vee);
        assert_eq!(w.vector(0), &[re(2.0), re(-2.0), re(0.0)][..]);
        for i in 0..cfg.len() {
            let k = (0..3).find(|&k| cfg.vector(i)[k].norm() > 0.0).unwrap();
            let ratio = w.vector(i)[k] / cfg.vector(i)[k];
            assert!(ratio.re > 0.0 && ratio.im.abs() < 1e-15);
        }
        let a2 = coxeter_positive_roots(RootFamily::A, 2, &[1]).unwrap();
        assert_eq!(weighted_from_locus(&a2).unwrap().vectors(), a2.vectors());
        assert!(weighted_from_locus(&w).is_err());
    }

    #[test]
    fn projection_examples() {
        let n = 3;
        for m in 1..4 {
            let p = projected_a_n2(n, m).unwrap();
            let s = (m as f64).sqrt();
            assert_eq!((p.dim(), p.len()), (n + 1, n * (n - 1) / 2 + 2 * n + 1));
            // √m (e_1 − e_2)
            assert!((p.vector(0)[0] - re(s)).norm() < 1e-14);
            // e_1 as the image of e_1 − √(−1−m) e_(n+2)
            let e1 = &p.vectors()[n * (n - 1) / 2 + n];
            assert_eq!(e1, &unit(n + 1, 0));
            assert!(p.is_real(&Tolerance::default()));
        }

        let v = Configuration::vee(3, "v", vec![unit(3, 0), unit(3, 1)]).unwrap();
        let p = project_to_coordinate_zero(&v, 2).unwrap();
        assert_eq!(p.vectors(), vec![unit(2, 0), unit(2, 1)]);

        let bad = Configuration::vee(2, "v", vec![unit(2, 0), vec![re(1.0), re(1.0)]]).unwrap();
        assert_eq!(project_to_coordinate_zero(&bad, 1), Err(Error::CollinearityCollision(0, 1)));
    }

    #[test]
    fn restriction_preserves_gram() {
        let a2 = coxeter_positive_roots(RootFamily::A, 2, &[1]).unwrap();
        let r = restrict_to_hyperplane(&a2, &[re(1.0); 3]).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.is_real(&Tolerance::default()));
        assert_gram_close(&a2, &r);

        for n in 2..5 {
            for m in 1..4 {
                let full = a_n2(n, m).unwrap();
                let r = a_n2_restricted(n, m).unwrap();
                assert_eq!(r.dim(), n + 1);
                assert_gram_close(&full, &r);
            }
        }

        let off = Configuration::locus(2, "o", vec![(unit(2, 0), 1)]).unwrap();
        assert_eq!(restrict_to_hyperplane(&off, &[re(1.0), re(1.0)]), Err(Error::VectorOffPlane(0)));
    }

    fn assert_gram_close(a: &Configuration, b: &Configuration) {
        for (ra, rb) in a.gram().iter().zip(b.gram()) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).norm() <= 1e-10 * (1.0 + x.norm()), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn span_restriction() {
        let a3 = coxeter_positive_roots(RootFamily::A, 3, &[1]).unwrap();
        let s = restrict_to_span(&a3).unwrap();
        assert_eq!(s.dim(), 3);
        assert_gram_close(&a3, &s);
        let v = vee_an_c(&[1.0, 2.0]).unwrap();
        assert_eq!(restrict_to_span(&v).unwrap(), v);
    }

    #[test]
    fn names_resolve() {
        for cfg in examples() {
            assert!(!cfg.is_empty());
        }
        assert!(matches!(by_name("Q:2"), Err(Error::UnknownCatalogName(_))));
        assert!(by_name("An1:n=2").is_err());
        assert!(by_name("E:8").is_err());
        assert_eq!(by_name("weighted:A:2:m=4").unwrap().vector(0)[0], re(2.0));
    }
}
