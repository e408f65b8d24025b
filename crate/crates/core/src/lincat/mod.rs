//! Finite k-linear categories given by structure constants, and the
//! constructions on them: additive (matrix) completion, idempotent
//! (Karoubi) completion and the tensor product.
//!
//! A morphism in `hom(p, q)` is a coefficient vector over that hom's basis.
//! Composition is bilinear, so it is determined by the images of basis
//! pairs, which is all a [`PresentedCategory`] stores.

mod algebra;
mod completion;
mod tensor;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{format_rational, Rational};

pub use algebra::{Algebra, AlgebraError, SeparabilityReport, SeparabilityViolation};
pub use completion::{
    default_grid, indecomposable_classes, is_indecomposable, is_isomorphic, karoubi_completion, karoubi_completion_from, mat_completion,
    mat_completion_with_zero, CompletionError, KaroubiCompletion, KaroubiMorphism, KaroubiObject, MatObject,
    DEFAULT_IDEMPOTENT_GRID, MAX_GRID_CANDIDATES,
};
pub use tensor::tensor_product;

pub type ObjectId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("duplicate object '{0}'")]
    DuplicateObject(String),
    #[error("unknown object '{0}'")]
    UnknownObject(String),
    #[error("duplicate basis element '{0}'")]
    DuplicateBasis(String),
    #[error("unknown basis element '{0}'")]
    UnknownBasis(String),
    #[error("cannot compose '{g}' after '{f}': target of {f} is not the source of {g}")]
    NotComposable { g: String, f: String },
    #[error("term '{term}' does not lie in the hom of the composite {g}.{f}")]
    WrongHom { g: String, f: String, term: String },
    #[error("identity of '{object}' uses '{term}' outside its endomorphisms")]
    IdentityOutsideEnd { object: String, term: String },
    #[error("no identity given for object '{0}'")]
    MissingIdentity(String),
    #[error("composition of '{g}' after '{f}' given twice")]
    DuplicateComposition { g: String, f: String },
    #[error("index {index} out of range ({what})")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("table for ({p},{q},{r}) has {found} entries, expected {expected}")]
    TableShape {
        p: ObjectId,
        q: ObjectId,
        r: ObjectId,
        expected: usize,
        found: usize,
    },
}

/// A finite linear category presented by bases and structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct PresentedCategory {
    objects: Vec<String>,
    /// Basis names of `hom(p, q)` at `p * n + q`.
    homs: Vec<Vec<String>>,
    /// Structure constants of `hom(q, r) x hom(p, q) -> hom(p, r)` at
    /// `(p * n + q) * n + r`, laid out as `[(g * dim_pq + f) * dim_pr + h]`.
    tables: Vec<Vec<Rational>>,
    identities: Vec<Vec<Rational>>,
}

impl fmt::Debug for PresentedCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedCategory")
            .field("objects", &self.objects)
            .field("hom_dims", &self.homs.iter().map(Vec::len).collect::<Vec<_>>())
            .finish()
    }
}

impl PresentedCategory {
    /// Assembles a category from dense tables, checking only shapes.
    pub fn from_tables(
        objects: Vec<String>,
        homs: Vec<Vec<String>>,
        tables: Vec<Vec<Rational>>,
        identities: Vec<Vec<Rational>>,
    ) -> Result<Self, LoadError> {
        let n = objects.len();
        if homs.len() != n * n {
            return Err(LoadError::IndexOutOfRange {
                what: "hom count",
                index: homs.len(),
            });
        }
        if tables.len() != n * n * n {
            return Err(LoadError::IndexOutOfRange {
                what: "table count",
                index: tables.len(),
            });
        }
        if identities.len() != n {
            return Err(LoadError::MissingIdentity(
                objects.get(identities.len()).cloned().unwrap_or_default(),
            ));
        }
        let c = Self {
            objects,
            homs,
            tables,
            identities,
        };
        for p in 0..n {
            if c.identities[p].len() != c.hom_dim(p, p) {
                return Err(LoadError::MissingIdentity(c.objects[p].clone()));
            }
            for q in 0..n {
                for r in 0..n {
                    let expected = c.hom_dim(q, r) * c.hom_dim(p, q) * c.hom_dim(p, r);
                    let found = c.tables[(p * n + q) * n + r].len();
                    if expected != found {
                        return Err(LoadError::TableShape {
                            p,
                            q,
                            r,
                            expected,
                            found,
                        });
                    }
                }
            }
        }
        Ok(c)
    }

    /// The category with one object `x` and endomorphisms `k`.
    pub fn ground() -> Self {
        let mut b = CategoryBuilder::new();
        b.object("x").unwrap();
        b.hom("x", "x", "1").unwrap();
        b.compose("1", "1", vec![(Rational::one(), "1".into())]).unwrap();
        b.identity("x", vec![(Rational::one(), "1".into())]).unwrap();
        b.build().expect("static data")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, p: ObjectId) -> &str {
        &self.objects[p]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom_dim(&self, p: ObjectId, q: ObjectId) -> usize {
        self.homs[p * self.objects.len() + q].len()
    }

    pub fn hom_basis(&self, p: ObjectId, q: ObjectId) -> &[String] {
        &self.homs[p * self.objects.len() + q]
    }

    pub fn identity(&self, p: ObjectId) -> &[Rational] {
        &self.identities[p]
    }

    pub fn zero(&self, p: ObjectId, q: ObjectId) -> Vec<Rational> {
        vec![Rational::zero(); self.hom_dim(p, q)]
    }

    pub fn basis_vector(&self, p: ObjectId, q: ObjectId, i: usize) -> Vec<Rational> {
        let mut v = self.zero(p, q);
        v[i] = Rational::one();
        v
    }

    pub(crate) fn table(&self, p: ObjectId, q: ObjectId, r: ObjectId) -> &[Rational] {
        let n = self.objects.len();
        &self.tables[(p * n + q) * n + r]
    }

    /// `g . f` on basis elements: `g` in `hom(q, r)`, `f` in `hom(p, q)`.
    pub fn compose_basis(&self, p: ObjectId, q: ObjectId, r: ObjectId, g: usize, f: usize) -> &[Rational] {
        let dpq = self.hom_dim(p, q);
        let dpr = self.hom_dim(p, r);
        let start = (g * dpq + f) * dpr;
        &self.table(p, q, r)[start..start + dpr]
    }

    /// `g . f` for arbitrary morphisms.
    pub fn compose(&self, p: ObjectId, q: ObjectId, r: ObjectId, g: &[Rational], f: &[Rational]) -> Vec<Rational> {
        let mut out = self.zero(p, r);
        for (gi, gc) in g.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (fi, fc) in f.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = gc * fc;
                for (h, c) in self.compose_basis(p, q, r, gi, fi).iter().enumerate() {
                    if !c.is_zero() {
                        out[h] += &w * c;
                    }
                }
            }
        }
        out
    }

    /// Every failed associativity or identity equation on basis elements.
    pub fn validate(&self) -> CategoryReport {
        let n = self.object_count();
        let mut violations = Vec::new();
        for p in 0..n {
            for q in 0..n {
                for f in 0..self.hom_dim(p, q) {
                    let fv = self.basis_vector(p, q, f);
                    if self.compose(p, q, q, self.identity(q), &fv) != fv {
                        violations.push(CategoryViolation::LeftIdentity { p, q, f });
                    }
                    if self.compose(p, p, q, &fv, self.identity(p)) != fv {
                        violations.push(CategoryViolation::RightIdentity { p, q, f });
                    }
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                let dpq = self.hom_dim(p, q);
                if dpq == 0 {
                    continue;
                }
                for r in 0..n {
                    let dqr = self.hom_dim(q, r);
                    if dqr == 0 {
                        continue;
                    }
                    for s in 0..n {
                        let drs = self.hom_dim(r, s);
                        for h in 0..drs {
                            let hv = self.basis_vector(r, s, h);
                            for g in 0..dqr {
                                let hg = self.compose_basis(q, r, s, h, g).to_vec();
                                for f in 0..dpq {
                                    let gf = self.compose_basis(p, q, r, g, f);
                                    let left = self.compose(p, r, s, &hv, gf);
                                    let right = self.compose(p, q, s, &hg, &self.basis_vector(p, q, f));
                                    if left != right {
                                        violations.push(CategoryViolation::Associativity {
                                            objects: [p, q, r, s],
                                            h,
                                            g,
                                            f,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CategoryReport { violations }
    }

    /// Same objects count, hom dimensions, identities and structure
    /// constants; names are ignored.
    pub fn same_structure(&self, other: &PresentedCategory) -> bool {
        self.objects.len() == other.objects.len()
            && self.homs.iter().map(Vec::len).eq(other.homs.iter().map(Vec::len))
            && self.tables == other.tables
            && self.identities == other.identities
    }

    /// Renders a morphism as `c*name + ...`, or `0`.
    pub fn format_morphism(&self, p: ObjectId, q: ObjectId, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", format_rational(c), self.hom_basis(p, q)[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryViolation {
    /// `(h g) f != h (g f)` for basis elements over objects `p -> q -> r -> s`.
    Associativity { objects: [ObjectId; 4], h: usize, g: usize, f: usize },
    LeftIdentity { p: ObjectId, q: ObjectId, f: usize },
    RightIdentity { p: ObjectId, q: ObjectId, f: usize },
}

impl CategoryViolation {
    pub fn describe(&self, c: &PresentedCategory) -> String {
        match self {
            Self::Associativity {
                objects: [p, q, r, s],
                h,
                g,
                f,
            } => format!(
                "associativity fails on ({}, {}, {})",
                c.hom_basis(*r, *s)[*h],
                c.hom_basis(*q, *r)[*g],
                c.hom_basis(*p, *q)[*f]
            ),
            Self::LeftIdentity { p, q, f } => {
                format!("identity of {} is not a left unit on {}", c.object_name(*q), c.hom_basis(*p, *q)[*f])
            }
            Self::RightIdentity { p, q, f } => {
                format!("identity of {} is not a right unit on {}", c.object_name(*p), c.hom_basis(*p, *q)[*f])
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryReport {
    pub violations: Vec<CategoryViolation>,
}

impl CategoryReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Linear combination of named basis elements.
pub type Expr = Vec<(Rational, String)>;

/// Incremental construction by names, matching the text format: declare
/// objects, then basis elements of homs, then compositions and identities.
/// Compositions that are never given are zero.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    /// basis name -> (p, q, index)
    basis: HashMap<String, (ObjectId, ObjectId, usize)>,
    homs: HashMap<(ObjectId, ObjectId), Vec<String>>,
    compositions: Vec<(String, String, Expr)>,
    identities: HashMap<ObjectId, Expr>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn object_id(&self, name: &str) -> Result<ObjectId, LoadError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| LoadError::UnknownObject(name.into()))
    }

    pub fn object(&mut self, name: &str) -> Result<ObjectId, LoadError> {
        if self.objects.iter().any(|o| o == name) {
            return Err(LoadError::DuplicateObject(name.into()));
        }
        self.objects.push(name.into());
        Ok(self.objects.len() - 1)
    }

    pub fn hom(&mut self, p: &str, q: &str, basis: &str) -> Result<(), LoadError> {
        let (p, q) = (self.object_id(p)?, self.object_id(q)?);
        if self.basis.contains_key(basis) {
            return Err(LoadError::DuplicateBasis(basis.into()));
        }
        let list = self.homs.entry((p, q)).or_default();
        self.basis.insert(basis.into(), (p, q, list.len()));
        list.push(basis.into());
        Ok(())
    }

    pub fn compose(&mut self, g: &str, f: &str, result: Expr) -> Result<(), LoadError> {
        if self.compositions.iter().any(|(g2, f2, _)| g2 == g && f2 == f) {
            return Err(LoadError::DuplicateComposition {
                g: g.into(),
                f: f.into(),
            });
        }
        self.compositions.push((g.into(), f.into(), result));
        Ok(())
    }

    pub fn identity(&mut self, p: &str, expr: Expr) -> Result<(), LoadError> {
        let p = self.object_id(p)?;
        self.identities.insert(p, expr);
        Ok(())
    }

    fn lookup(&self, name: &str) -> Result<(ObjectId, ObjectId, usize), LoadError> {
        self.basis
            .get(name)
            .copied()
            .ok_or_else(|| LoadError::UnknownBasis(name.into()))
    }

    pub fn build(self) -> Result<PresentedCategory, LoadError> {
        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for ((p, q), list) in &self.homs {
            homs[p * n + q] = list.clone();
        }
        let dim = |p: usize, q: usize| homs[p * n + q].len();
        let mut tables: Vec<Vec<Rational>> = Vec::with_capacity(n * n * n);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    tables.push(vec![Rational::zero(); dim(q, r) * dim(p, q) * dim(p, r)]);
                }
            }
        }
        for (g, f, expr) in &self.compositions {
            let (q, r, gi) = self.lookup(g)?;
            let (p, q2, fi) = self.lookup(f)?;
            if q != q2 {
                return Err(LoadError::NotComposable {
                    g: g.clone(),
                    f: f.clone(),
                });
            }
            let dpq = dim(p, q);
            let dpr = dim(p, r);
            for (c, term) in expr {
                let (p3, r3, hi) = self.lookup(term)?;
                if (p3, r3) != (p, r) {
                    return Err(LoadError::WrongHom {
                        g: g.clone(),
                        f: f.clone(),
                        term: term.clone(),
                    });
                }
                tables[(p * n + q) * n + r][(gi * dpq + fi) * dpr + hi] += c;
            }
        }
        let mut identities = Vec::with_capacity(n);
        for p in 0..n {
            let expr = self
                .identities
                .get(&p)
                .ok_or_else(|| LoadError::MissingIdentity(self.objects[p].clone()))?;
            let mut v = vec![Rational::zero(); dim(p, p)];
            for (c, term) in expr {
                let (a, b, i) = self.lookup(term)?;
                if (a, b) != (p, p) {
                    return Err(LoadError::IdentityOutsideEnd {
                        object: self.objects[p].clone(),
                        term: term.clone(),
                    });
                }
                v[i] += c;
            }
            identities.push(v);
        }
        PresentedCategory::from_tables(self.objects, homs, tables, identities)
    }
}
