//! The `Configuration` value type: a finite set of non-collinear,
//! non-isotropic vectors carrying multiplicities or weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{dot, is_collinear, is_isotropic, is_real_vec, norm, scale_vec, Scalar, Tolerance, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Integer multiplicities `m_α` (rational Calogero–Moser potential side).
    Locus,
    /// Covectors with weights (prepotential / ∨-system side).
    Vee,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Locus => "locus",
            Kind::Vee => "vee",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Tag {
    Multiplicity(u32),
    Weight(Scalar),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub vector: Vector,
    pub tag: Tag,
}

impl Entry {
    pub fn with_multiplicity(vector: Vector, m: u32) -> Self {
        Entry {
            vector,
            tag: Tag::Multiplicity(m),
        }
    }

    pub fn unit_weight(vector: Vector) -> Self {
        Entry {
            vector,
            tag: Tag::Weight(Scalar::new(1.0, 0.0)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    dim: usize,
    kind: Kind,
    entries: Vec<Entry>,
    label: String,
}

impl Configuration {
    /// Validates every invariant: dimensions, finiteness, tag/kind agreement,
    /// non-isotropy and pairwise non-collinearity.
    pub fn new(
        dim: usize,
        kind: Kind,
        entries: Vec<Entry>,
        label: impl Into<String>,
        tol: &Tolerance,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvariantViolation("dimension must be positive".into()));
        }
        for (i, e) in entries.iter().enumerate() {
            if e.vector.len() != dim {
                return Err(Error::InvariantViolation(format!(
                    "entry {i} has length {} in dimension {dim}",
                    e.vector.len()
                )));
            }
            if e.vector.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvariantViolation(format!("entry {i} has non-finite coordinates")));
            }
            match (&e.tag, kind) {
                (Tag::Multiplicity(0), Kind::Locus) => {
                    return Err(Error::InvariantViolation(format!("entry {i} has multiplicity 0")))
                }
                (Tag::Multiplicity(_), Kind::Locus) => {}
                (Tag::Weight(w), Kind::Vee) => {
                    if w.norm() == 0.0 || !w.re.is_finite() || !w.im.is_finite() {
                        return Err(Error::InvariantViolation(format!("entry {i} has invalid weight {w}")));
                    }
                }
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "entry {i} tag does not match configuration kind {}",
                        kind.as_str()
                    )))
                }
            }
            if norm(&e.vector) == 0.0 {
                return Err(Error::InvariantViolation(format!("entry {i} is the zero vector")));
            }
            if is_isotropic(&e.vector, tol) {
                return Err(Error::InvariantViolation(format!("entry {i} is isotropic")));
            }
        }
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                if is_collinear(&entries[i].vector, &entries[j].vector, tol) {
                    return Err(Error::InvariantViolation(format!("entries {i} and {j} are collinear")));
                }
            }
        }
        Ok(Configuration {
            dim,
            kind,
            entries,
            label: label.into(),
        })
    }

    pub fn locus(dim: usize, label: impl Into<String>, vectors: Vec<(Vector, u32)>) -> Result<Self> {
        let entries = vectors.into_iter().map(|(v, m)| Entry::with_multiplicity(v, m)).collect();
        Self::new(dim, Kind::Locus, entries, label, &Tolerance::default())
    }

    /// Vee-kind configuration with unit weights.
    pub fn vee(dim: usize, label: impl Into<String>, vectors: Vec<Vector>) -> Result<Self> {
        let entries = vectors.into_iter().map(Entry::unit_weight).collect();
        Self::new(dim, Kind::Vee, entries, label, &Tolerance::default())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        &self.entries[i].vector
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.entries.iter().map(|e| e.vector.clone()).collect()
    }

    /// Multiplicity of entry `i`; vee entries count as 1.
    pub fn multiplicity(&self, i: usize) -> u32 {
        match self.entries[i].tag {
            Tag::Multiplicity(m) => m,
            Tag::Weight(_) => 1,
        }
    }

    /// Covectors with weights folded in: `√w · α` (principal root). For locus
    /// kind the raw vectors are returned.
    pub fn covectors(&self) -> Vec<Vector> {
        self.entries
            .iter()
            .map(|e| match e.tag {
                Tag::Weight(w) if w != Scalar::new(1.0, 0.0) => scale_vec(w.sqrt(), &e.vector),
                _ => e.vector.clone(),
            })
            .collect()
    }

    pub fn is_real(&self, tol: &Tolerance) -> bool {
        self.entries.iter().all(|e| {
            is_real_vec(&e.vector, tol)
                && match e.tag {
                    Tag::Weight(w) => w.im.abs() <= tol.geometric() * w.norm() && w.re > 0.0,
                    Tag::Multiplicity(_) => true,
                }
        })
    }

    /// Gram matrix of the raw vectors under the bilinear form.
    pub fn gram(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .iter()
            .map(|a| self.entries.iter().map(|b| dot(&a.vector, &b.vector)).collect())
            .collect()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Applies `f` to every vector (tags kept) and revalidates.
    pub fn map_vectors<F>(&self, new_dim: usize, mut f: F) -> Result<Configuration>
    where
        F: FnMut(&[Scalar]) -> Vector,
    {
        let entries = self
            .entries
            .iter()
            .map(|e| Entry {
                vector: f(&e.vector),
                tag: e.tag.clone(),
            })
            .collect();
        Configuration::new(new_dim, self.kind, entries, self.label.clone(), &Tolerance::default())
    }
}
