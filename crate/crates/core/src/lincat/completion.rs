//! Matrix and idempotent completions, plus grid-bounded isomorphism and
//! indecomposability tests on finite categories.

use num_traits::Zero;
use thiserror::Error;

use super::{ObjectId, PresentedCategory};
use crate::exact::{format_rational, q, Matrix, Rational};

/// Largest number of grid points tried for one idempotent or isomorphism
/// search.
pub const MAX_GRID_CANDIDATES: usize = 1 << 20;

/// Objects allowed in a matrix completion.
const MAX_MAT_OBJECTS: usize = 512;

/// The coefficient grid used when none is supplied: {0, 1, -1, 1/2}.
pub const DEFAULT_IDEMPOTENT_GRID: [(i64, i64); 4] = [(0, 1), (1, 1), (-1, 1), (1, 2)];

pub fn default_grid() -> Vec<Rational> {
    DEFAULT_IDEMPOTENT_GRID.iter().map(|&(n, d)| q(n, d)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("sequence bound must be at least 1")]
    ZeroBound,
    #[error("matrix completion would have {0} objects")]
    TooManyObjects(usize),
    #[error("coefficient grid is empty")]
    EmptyGrid,
    #[error("grid search over {objects} needs {candidates} candidates, above the limit")]
    TooManyCandidates { objects: String, candidates: u128 },
    #[error("object index {0} out of range")]
    UnknownObject(ObjectId),
    #[error("element of End({object}) has {found} coefficients, expected {expected}")]
    WrongLength { object: String, expected: usize, found: usize },
    #[error("not idempotent on {object}: e.e - e = {residual}")]
    NotIdempotent { object: String, residual: String },
    #[error("morphism is not absorbed by its idempotents: {0}")]
    NotAbsorbed(String),
    #[error("triple ({later_source}) cannot follow ({earlier_target})")]
    NotComposable { later_source: String, earlier_target: String },
}

/// An object of the matrix completion: a sequence of base objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatObject(pub Vec<ObjectId>);

impl MatObject {
    pub fn name(&self, base: &PresentedCategory) -> String {
        let parts: Vec<&str> = self.0.iter().map(|&p| base.object_name(p)).collect();
        format!("[{}]", parts.join(","))
    }
}

fn sequences(n: usize, bound: usize, with_zero: bool) -> Result<Vec<MatObject>, CompletionError> {
    if bound == 0 {
        return Err(CompletionError::ZeroBound);
    }
    let mut total = usize::from(with_zero);
    let mut layer = 1usize;
    for _ in 0..bound {
        layer = layer.saturating_mul(n);
        total = total.saturating_add(layer);
    }
    if total > MAX_MAT_OBJECTS {
        return Err(CompletionError::TooManyObjects(total));
    }
    let mut out = Vec::with_capacity(total);
    if with_zero {
        out.push(MatObject(Vec::new()));
    }
    let mut current: Vec<Vec<ObjectId>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for seq in &current {
            for p in 0..n {
                let mut s = seq.clone();
                s.push(p);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned().map(MatObject));
        current = next;
    }
    Ok(out)
}

/// Matrix completion on nonempty sequences of length at most `bound`.
pub fn mat_completion(
    base: &PresentedCategory,
    bound: usize,
) -> Result<(PresentedCategory, Vec<MatObject>), CompletionError> {
    build_mat(base, sequences(base.object_count(), bound, false)?)
}

/// As [`mat_completion`], with the empty sequence added first as a zero object.
pub fn mat_completion_with_zero(
    base: &PresentedCategory,
    bound: usize,
) -> Result<(PresentedCategory, Vec<MatObject>), CompletionError> {
    build_mat(base, sequences(base.object_count(), bound, true)?)
}

/// Basis of `hom(P, Q)`: entries `(i, j, b)` with `b` a basis element of
/// `hom(P_j, Q_i)`, in lexicographic order.
fn mat_hom_basis(base: &PresentedCategory, p: &MatObject, q: &MatObject) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, &qi) in q.0.iter().enumerate() {
        for (j, &pj) in p.0.iter().enumerate() {
            for b in 0..base.hom_dim(pj, qi) {
                out.push((i, j, b));
            }
        }
    }
    out
}

fn build_mat(
    base: &PresentedCategory,
    objects: Vec<MatObject>,
) -> Result<(PresentedCategory, Vec<MatObject>), CompletionError> {
    let n = objects.len();
    let names: Vec<String> = objects.iter().map(|o| o.name(base)).collect();
    let bases: Vec<Vec<(usize, usize, usize)>> = objects
        .iter()
        .flat_map(|p| objects.iter().map(move |q| (p, q)))
        .map(|(p, q)| mat_hom_basis(base, p, q))
        .collect();
    let homs: Vec<Vec<String>> = (0..n * n)
        .map(|pq| {
            let (p, q) = (pq / n, pq % n);
            bases[pq]
                .iter()
                .map(|&(i, j, b)| {
                    let (pj, qi) = (objects[p].0[j], objects[q].0[i]);
                    format!("{}>{}:{}@{},{}", names[p], names[q], base.hom_basis(pj, qi)[b], i, j)
                })
                .collect()
        })
        .collect();
    let mut tables = Vec::with_capacity(n * n * n);
    for p in 0..n {
        for qo in 0..n {
            for r in 0..n {
                let (bpq, bqr, bpr) = (&bases[p * n + qo], &bases[qo * n + r], &bases[p * n + r]);
                let mut table = vec![Rational::zero(); bqr.len() * bpq.len() * bpr.len()];
                for (gi, &(i, j, gb)) in bqr.iter().enumerate() {
                    for (fi, &(j2, k, fb)) in bpq.iter().enumerate() {
                        if j != j2 {
                            continue;
                        }
                        let (pk, qj, ri) = (objects[p].0[k], objects[qo].0[j], objects[r].0[i]);
                        let prod = base.compose_basis(pk, qj, ri, gb, fb);
                        for (hb, c) in prod.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let h = bpr
                                .iter()
                                .position(|&e| e == (i, k, hb))
                                .expect("block entry present");
                            table[(gi * bpq.len() + fi) * bpr.len() + h] = c.clone();
                        }
                    }
                }
                tables.push(table);
            }
        }
    }
    let identities = (0..n)
        .map(|p| {
            let b = &bases[p * n + p];
            let mut v = vec![Rational::zero(); b.len()];
            for (idx, &(i, j, bb)) in b.iter().enumerate() {
                if i == j {
                    v[idx] = base.identity(objects[p].0[i])[bb].clone();
                }
            }
            v
        })
        .collect();
    let c = PresentedCategory::from_tables(names, homs, tables, identities).expect("shapes are consistent");
    Ok((c, objects))
}

/// An object `(p, e)` of the idempotent completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaroubiObject {
    pub object: ObjectId,
    pub idempotent: Vec<Rational>,
}

impl KaroubiObject {
    pub fn new(c: &PresentedCategory, object: ObjectId, idempotent: Vec<Rational>) -> Result<Self, CompletionError> {
        if object >= c.object_count() {
            return Err(CompletionError::UnknownObject(object));
        }
        let d = c.hom_dim(object, object);
        if idempotent.len() != d {
            return Err(CompletionError::WrongLength {
                object: c.object_name(object).into(),
                expected: d,
                found: idempotent.len(),
            });
        }
        let square = c.compose(object, object, object, &idempotent, &idempotent);
        if square != idempotent {
            let residual: Vec<Rational> = square.iter().zip(&idempotent).map(|(a, b)| a - b).collect();
            return Err(CompletionError::NotIdempotent {
                object: c.object_name(object).into(),
                residual: c.format_morphism(object, object, &residual),
            });
        }
        Ok(Self { object, idempotent })
    }

    pub fn name(&self, c: &PresentedCategory) -> String {
        let coeffs: Vec<String> = self.idempotent.iter().map(format_rational).collect();
        format!("{}|{}", c.object_name(self.object), coeffs.join(","))
    }

    /// The identity triple `(e, e, e)`.
    pub fn identity(&self) -> KaroubiMorphism {
        KaroubiMorphism {
            target: self.clone(),
            morphism: self.idempotent.clone(),
            source: self.clone(),
        }
    }
}

/// A triple `(e', f, e)` with `e' f = f = f e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaroubiMorphism {
    pub target: KaroubiObject,
    pub morphism: Vec<Rational>,
    pub source: KaroubiObject,
}

impl KaroubiMorphism {
    pub fn new(
        c: &PresentedCategory,
        target: KaroubiObject,
        morphism: Vec<Rational>,
        source: KaroubiObject,
    ) -> Result<Self, CompletionError> {
        let (p, q) = (source.object, target.object);
        if morphism.len() != c.hom_dim(p, q) {
            return Err(CompletionError::WrongLength {
                object: format!("{}->{}", c.object_name(p), c.object_name(q)),
                expected: c.hom_dim(p, q),
                found: morphism.len(),
            });
        }
        let left = c.compose(p, q, q, &target.idempotent, &morphism);
        let right = c.compose(p, p, q, &morphism, &source.idempotent);
        if left != morphism || right != morphism {
            return Err(CompletionError::NotAbsorbed(c.format_morphism(p, q, &morphism)));
        }
        Ok(Self {
            target,
            morphism,
            source,
        })
    }

    /// `(e'', f', e') . (e', f, e) = (e'', f' f, e)`.
    pub fn then_after(&self, c: &PresentedCategory, earlier: &KaroubiMorphism) -> Result<Self, CompletionError> {
        if self.source != earlier.target {
            return Err(CompletionError::NotComposable {
                later_source: self.source.name(c),
                earlier_target: earlier.target.name(c),
            });
        }
        let morphism = c.compose(
            earlier.source.object,
            earlier.target.object,
            self.target.object,
            &self.morphism,
            &earlier.morphism,
        );
        Ok(Self {
            target: self.target.clone(),
            morphism,
            source: earlier.source.clone(),
        })
    }
}

/// The idempotent completion together with the data needed to move
/// morphisms between it and the base category.
#[derive(Debug, Clone)]
pub struct KaroubiCompletion {
    pub category: PresentedCategory,
    pub objects: Vec<KaroubiObject>,
    /// Basis of each hom, as base morphisms, at `p * n + q`.
    basis: Vec<Vec<Vec<Rational>>>,
    /// Rows used to read off coordinates, and the inverse of that minor.
    readers: Vec<(Vec<usize>, Matrix)>,
}

impl KaroubiCompletion {
    /// The base morphism underlying a morphism of the completion.
    pub fn embed(&self, base: &PresentedCategory, p: ObjectId, q: ObjectId, coords: &[Rational]) -> Vec<Rational> {
        let n = self.objects.len();
        let mut out = base.zero(self.objects[p].object, self.objects[q].object);
        for (c, v) in coords.iter().zip(&self.basis[p * n + q]) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out
    }

    /// Coordinates of a base morphism `e' f e = f` in the completion's hom.
    pub fn coordinates(&self, p: ObjectId, q: ObjectId, f: &[Rational]) -> Vec<Rational> {
        let n = self.objects.len();
        read_coordinates(&self.readers[p * n + q], f)
    }

    pub fn object_index(&self, obj: &KaroubiObject) -> Option<ObjectId> {
        self.objects.iter().position(|o| o == obj)
    }
}

fn read_coordinates((rows, inverse): &(Vec<usize>, Matrix), f: &[Rational]) -> Vec<Rational> {
    let picked: Vec<Rational> = rows.iter().map(|&r| f[r].clone()).collect();
    inverse.apply(&picked).expect("minor matches basis size")
}

fn grid_vectors(grid: &[Rational], len: usize, label: &str) -> Result<Vec<Vec<Rational>>, CompletionError> {
    if grid.is_empty() {
        return Err(CompletionError::EmptyGrid);
    }
    let candidates = (grid.len() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if candidates > MAX_GRID_CANDIDATES as u128 {
        return Err(CompletionError::TooManyCandidates {
            objects: label.into(),
            candidates,
        });
    }
    let mut out = Vec::with_capacity(candidates as usize);
    let mut idx = vec![0usize; len];
    loop {
        out.push(idx.iter().map(|&i| grid[i].clone()).collect());
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < grid.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Idempotent completion over every grid idempotent of every object.
pub fn karoubi_completion(c: &PresentedCategory, grid: &[Rational]) -> Result<KaroubiCompletion, CompletionError> {
    let mut objects = Vec::new();
    for p in 0..c.object_count() {
        for e in grid_vectors(grid, c.hom_dim(p, p), c.object_name(p))? {
            if c.compose(p, p, p, &e, &e) == e {
                objects.push(KaroubiObject { object: p, idempotent: e });
            }
        }
    }
    build_karoubi(c, objects)
}

/// Idempotent completion over an explicit list of `(object, idempotent)`.
pub fn karoubi_completion_from(
    c: &PresentedCategory,
    idempotents: &[(ObjectId, Vec<Rational>)],
) -> Result<KaroubiCompletion, CompletionError> {
    let objects = idempotents
        .iter()
        .map(|(p, e)| KaroubiObject::new(c, *p, e.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    build_karoubi(c, objects)
}

fn build_karoubi(c: &PresentedCategory, objects: Vec<KaroubiObject>) -> Result<KaroubiCompletion, CompletionError> {
    let n = objects.len();
    let names: Vec<String> = objects.iter().map(|o| o.name(c)).collect();
    let mut basis = Vec::with_capacity(n * n);
    let mut readers = Vec::with_capacity(n * n);
    for src in &objects {
        for tgt in &objects {
            let (p, pq) = (src.object, tgt.object);
            let d = c.hom_dim(p, pq);
            let images: Vec<Vec<Rational>> = (0..d)
                .map(|i| {
                    let f = c.basis_vector(p, pq, i);
                    let ef = c.compose(p, p, pq, &f, &src.idempotent);
                    c.compose(p, pq, pq, &tgt.idempotent, &ef)
                })
                .collect();
            let chosen: Vec<Vec<Rational>> = if d == 0 {
                Vec::new()
            } else {
                let m = Matrix::new(d, d, (0..d).flat_map(|r| images.iter().map(move |col| col[r].clone())).collect())
                    .expect("square");
                m.independent_columns().into_iter().map(|j| images[j].clone()).collect()
            };
            let k = chosen.len();
            let reader = if k == 0 {
                (Vec::new(), Matrix::zeros(0, 0))
            } else {
                // rows of the d x k basis matrix that form an invertible minor
                let bt = Matrix::new(k, d, chosen.iter().flat_map(|v| v.iter().cloned()).collect()).expect("shape");
                let rows = bt.independent_columns();
                let minor = Matrix::new(k, k, rows.iter().flat_map(|&r| chosen.iter().map(move |v| v[r].clone())).collect())
                    .expect("square");
                (rows, minor.invert().expect("independent rows"))
            };
            basis.push(chosen);
            readers.push(reader);
        }
    }
    let homs: Vec<Vec<String>> = (0..n * n)
        .map(|pq| {
            (0..basis[pq].len())
                .map(|i| format!("{}>{}:{}", names[pq / n], names[pq % n], i))
                .collect()
        })
        .collect();
    let mut tables = Vec::with_capacity(n * n * n);
    for p in 0..n {
        for qo in 0..n {
            for r in 0..n {
                let (bpq, bqr) = (&basis[p * n + qo], &basis[qo * n + r]);
                let dpr = basis[p * n + r].len();
                let mut table = Vec::with_capacity(bqr.len() * bpq.len() * dpr);
                for g in bqr {
                    for f in bpq {
                        let gf = c.compose(objects[p].object, objects[qo].object, objects[r].object, g, f);
                        table.extend(read_coordinates(&readers[p * n + r], &gf));
                    }
                }
                tables.push(table);
            }
        }
    }
    let identities = (0..n)
        .map(|p| read_coordinates(&readers[p * n + p], &objects[p].idempotent))
        .collect();
    let category = PresentedCategory::from_tables(names, homs, tables, identities).expect("shapes are consistent");
    Ok(KaroubiCompletion {
        category,
        objects,
        basis,
        readers,
    })
}

/// Searches `hom(x, y)` over the grid for a morphism with a two-sided
/// inverse. A `false` answer only covers the grid.
pub fn is_isomorphic(c: &PresentedCategory, x: ObjectId, y: ObjectId, grid: &[Rational]) -> Result<bool, CompletionError> {
    let label = format!("{}->{}", c.object_name(x), c.object_name(y));
    let (dxy, dyx) = (c.hom_dim(x, y), c.hom_dim(y, x));
    let (dxx, dyy) = (c.hom_dim(x, x), c.hom_dim(y, y));
    let rhs: Vec<Rational> = c.identity(x).iter().chain(c.identity(y)).cloned().collect();
    for f in grid_vectors(grid, dxy, &label)? {
        // unknown g in hom(y, x): g f = id_x and f g = id_y
        let mut entries = vec![Rational::zero(); (dxx + dyy) * dyx];
        for k in 0..dyx {
            let b = c.basis_vector(y, x, k);
            let gf = c.compose(x, y, x, &b, &f);
            let fg = c.compose(y, x, y, &f, &b);
            for (row, v) in gf.into_iter().chain(fg).enumerate() {
                entries[row * dyx + k] = v;
            }
        }
        if dyx == 0 {
            if rhs.iter().all(Zero::is_zero) {
                return Ok(true);
            }
            continue;
        }
        let system = Matrix::new(dxx + dyy, dyx, entries).expect("shape");
        if system.solve(&rhs).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Nonzero, with no grid idempotent besides 0 and the identity.
pub fn is_indecomposable(c: &PresentedCategory, x: ObjectId, grid: &[Rational]) -> Result<bool, CompletionError> {
    let id = c.identity(x);
    if id.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    for e in grid_vectors(grid, c.hom_dim(x, x), c.object_name(x))? {
        if e.iter().all(Zero::is_zero) || e == id {
            continue;
        }
        if c.compose(x, x, x, &e, &e) == e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indecomposable objects grouped into grid-detected isomorphism classes,
/// each class listed by ascending object index.
pub fn indecomposable_classes(c: &PresentedCategory, grid: &[Rational]) -> Result<Vec<Vec<ObjectId>>, CompletionError> {
    let mut classes: Vec<Vec<ObjectId>> = Vec::new();
    for x in 0..c.object_count() {
        if !is_indecomposable(c, x, grid)? {
            continue;
        }
        let mut placed = false;
        for class in classes.iter_mut() {
            if is_isomorphic(c, class[0], x, grid)? {
                class.push(x);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![x]);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincat::CategoryBuilder;
    use proptest::prelude::*;

    fn k() -> PresentedCategory {
        PresentedCategory::ground()
    }

    fn mat2() -> (PresentedCategory, Vec<MatObject>) {
        mat_completion(&k(), 2).unwrap()
    }

    /// `k x k` as a one-object category with orthogonal idempotents.
    fn k_squared() -> PresentedCategory {
        let mut b = CategoryBuilder::new();
        b.object("p").unwrap();
        b.hom("p", "p", "e1").unwrap();
        b.hom("p", "p", "e2").unwrap();
        b.compose("e1", "e1", vec![(q(1, 1), "e1".into())]).unwrap();
        b.compose("e2", "e2", vec![(q(1, 1), "e2".into())]).unwrap();
        b.identity("p", vec![(q(1, 1), "e1".into()), (q(1, 1), "e2".into())])
            .unwrap();
        b.build().unwrap()
    }

    #[test]
    fn mat_completion_of_ground() {
        let (c, objs) = mat2();
        assert_eq!(objs, vec![MatObject(vec![0]), MatObject(vec![0, 0])]);
        assert_eq!(c.object_names(), &["[x]".to_string(), "[x,x]".to_string()]);
        assert_eq!(c.hom_dim(1, 1), 4);
        assert_eq!(c.hom_dim(0, 1), 2);
        assert!(c.validate().is_empty());
        // End([x,x]) composes like matrix units
        let e = |i: usize, j: usize| {
            let mut v = vec![q(0, 1); 4];
            v[i * 2 + j] = q(1, 1);
            v
        };
        for (i, j, l, m) in [(0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1)] {
            let prod = c.compose(1, 1, 1, &e(i, j), &e(l, m));
            let expected = if j == l { e(i, m) } else { vec![q(0, 1); 4] };
            assert_eq!(prod, expected);
        }
    }

    #[test]
    fn bound_one_is_a_copy() {
        let base = k_squared();
        let (c, _) = mat_completion(&base, 1).unwrap();
        assert!(c.same_structure(&base));
        assert_eq!(mat_completion(&base, 0).unwrap_err(), CompletionError::ZeroBound);
    }

    #[test]
    fn mat_hom_dims_add() {
        let mut b = CategoryBuilder::new();
        for o in ["p", "q"] {
            b.object(o).unwrap();
            b.hom(o, o, &format!("1{o}")).unwrap();
            b.compose(&format!("1{o}"), &format!("1{o}"), vec![(q(1, 1), format!("1{o}"))])
                .unwrap();
            b.identity(o, vec![(q(1, 1), format!("1{o}"))]).unwrap();
        }
        b.hom("p", "q", "f").unwrap();
        b.compose("f", "1p", vec![(q(1, 1), "f".into())]).unwrap();
        b.compose("1q", "f", vec![(q(1, 1), "f".into())]).unwrap();
        let base = b.build().unwrap();
        let (c, objs) = mat_completion(&base, 2).unwrap();
        assert!(c.validate().is_empty());
        let find = |s: &[usize]| objs.iter().position(|o| o.0 == s).unwrap();
        for (s, t) in [(vec![0, 1], vec![1]), (vec![1, 0], vec![0]), (vec![0, 0], vec![1])] {
            let expected: usize = s.iter().map(|&x| base.hom_dim(x, t[0])).sum();
            assert_eq!(c.hom_dim(find(&s), find(&t)), expected);
        }
    }

    #[test]
    fn zero_object_option() {
        let (c, objs) = mat_completion_with_zero(&k(), 2).unwrap();
        assert_eq!(objs[0], MatObject(vec![]));
        assert_eq!(c.hom_dim(0, 0), 0);
        assert_eq!(c.hom_dim(0, 2), 0);
        assert!(c.validate().is_empty());
    }

    #[test]
    fn karoubi_of_ground() {
        let kc = karoubi_completion(&k(), &default_grid()).unwrap();
        let idems: Vec<_> = kc.objects.iter().map(|o| o.idempotent.clone()).collect();
        assert_eq!(idems, vec![vec![q(0, 1)], vec![q(1, 1)]]);
        assert_eq!(kc.category.hom_dim(0, 0), 0);
        assert_eq!(kc.category.hom_dim(1, 1), 1);
        assert!(kc.category.validate().is_empty());
    }

    #[test]
    fn splitting_diag_one_zero() {
        let (c, _) = mat2();
        let diag = vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)];
        let kc = karoubi_completion_from(&c, &[(1, diag.clone()), (1, c.identity(1).to_vec())]).unwrap();
        assert!(kc.category.validate().is_empty());
        assert_eq!(kc.category.hom_dim(0, 0), 1);
        // the split object is a retract of [x,x] via the triples (u,u,id), (id,u,u)
        let split = kc.objects[0].clone();
        let whole = kc.objects[1].clone();
        let r = KaroubiMorphism::new(&c, split.clone(), diag.clone(), whole.clone()).unwrap();
        let s = KaroubiMorphism::new(&c, whole, diag, split.clone()).unwrap();
        assert_eq!(r.then_after(&c, &s).unwrap(), split.identity());
        // and it is isomorphic to [x]
        let (with_point, _) = mat_completion(&k(), 2).unwrap();
        let kc2 = karoubi_completion_from(
            &with_point,
            &[(0, vec![q(1, 1)]), (1, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)])],
        )
        .unwrap();
        assert!(is_isomorphic(&kc2.category, 0, 1, &default_grid()).unwrap());
    }

    #[test]
    fn rejects_non_idempotent_with_residual() {
        let (c, _) = mat2();
        let err = karoubi_completion_from(&c, &[(1, vec![q(1, 1), q(1, 1), q(0, 1), q(1, 1)])]).unwrap_err();
        assert_eq!(
            err,
            CompletionError::NotIdempotent {
                object: "[x,x]".into(),
                residual: "1*[x,x]>[x,x]:1@0,1".into(),
            }
        );
    }

    #[test]
    fn every_grid_idempotent_splits() {
        let (c, _) = mat2();
        let kc = karoubi_completion(&c, &default_grid()).unwrap();
        assert!(kc.category.validate().is_empty());
        let ids: Vec<_> = (0..c.object_count())
            .map(|p| KaroubiObject::new(&c, p, c.identity(p).to_vec()).unwrap())
            .collect();
        for u in &kc.objects {
            let full = &ids[u.object];
            let r = KaroubiMorphism::new(&c, u.clone(), u.idempotent.clone(), full.clone()).unwrap();
            let s = KaroubiMorphism::new(&c, full.clone(), u.idempotent.clone(), u.clone()).unwrap();
            assert_eq!(r.then_after(&c, &s).unwrap(), u.identity());
            assert_eq!(s.then_after(&c, &r).unwrap().morphism, u.idempotent);
        }
    }

    #[test]
    fn indecomposables_of_matrix_algebra() {
        let (c, _) = mat2();
        let kc = karoubi_completion(&c, &[q(0, 1), q(1, 1)]).unwrap();
        let classes = indecomposable_classes(&kc.category, &[q(0, 1), q(1, 1), q(-1, 1)]).unwrap();
        // everything of rank one is isomorphic to [x]
        assert_eq!(classes.len(), 1);
        assert!(classes[0].len() > 1);
    }

    #[test]
    fn completing_twice_keeps_classes() {
        let base = k_squared();
        let grid = [q(0, 1), q(1, 1)];
        let once = karoubi_completion(&base, &grid).unwrap();
        let twice = karoubi_completion(&once.category, &grid).unwrap();
        assert!(twice.category.validate().is_empty());
        let c1 = indecomposable_classes(&once.category, &grid).unwrap();
        let c2 = indecomposable_classes(&twice.category, &grid).unwrap();
        assert_eq!(c1.len(), 2);
        assert_eq!(c2.len(), c1.len());
        let dims = |kc: &PresentedCategory, cl: &[Vec<usize>]| -> Vec<usize> {
            cl.iter()
                .flat_map(|a| cl.iter().map(move |b| (a[0], b[0])))
                .map(|(a, b)| kc.hom_dim(a, b))
                .collect()
        };
        assert_eq!(dims(&once.category, &c1), dims(&twice.category, &c2));
    }

    #[test]
    fn coordinates_round_trip() {
        let (c, _) = mat2();
        let kc = karoubi_completion(&c, &default_grid()).unwrap();
        let n = kc.objects.len();
        for p in 0..n {
            for t in 0..n {
                for i in 0..kc.category.hom_dim(p, t) {
                    let v = kc.category.basis_vector(p, t, i);
                    let f = kc.embed(&c, p, t, &v);
                    assert_eq!(kc.coordinates(p, t, &f), v);
                }
            }
        }
    }

    fn absorbed(c: &PresentedCategory, tgt: &KaroubiObject, f: &[Rational], src: &KaroubiObject) -> Vec<Rational> {
        let (p, t) = (src.object, tgt.object);
        let fe = c.compose(p, p, t, f, &src.idempotent);
        c.compose(p, t, t, &tgt.idempotent, &fe)
    }

    fn grid_completion() -> &'static (PresentedCategory, KaroubiCompletion) {
        static CELL: std::sync::OnceLock<(PresentedCategory, KaroubiCompletion)> = std::sync::OnceLock::new();
        CELL.get_or_init(|| {
            let (c, _) = mat2();
            let kc = karoubi_completion(&c, &default_grid()).unwrap();
            (c, kc)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn triple_law_associative_and_unital(
            picks in proptest::collection::vec(0usize..64, 4),
            coeffs in proptest::collection::vec(-3i64..4, 12),
        ) {
            let (c, kc) = grid_completion();
            let objs: Vec<_> = picks.iter().map(|i| kc.objects[i % kc.objects.len()].clone()).collect();
            let mut morphisms = Vec::new();
            for s in 0..3 {
                let (src, tgt) = (&objs[s], &objs[s + 1]);
                let d = c.hom_dim(src.object, tgt.object);
                let raw: Vec<Rational> = coeffs[s * 4..s * 4 + d].iter().map(|&x| q(x, 1)).collect();
                let f = absorbed(c, tgt, &raw, src);
                morphisms.push(KaroubiMorphism::new(c, tgt.clone(), f, src.clone()).unwrap());
            }
            let (f, g, h) = (&morphisms[0], &morphisms[1], &morphisms[2]);
            let left = h.then_after(c, &g.then_after(c, f).unwrap()).unwrap();
            let right = h.then_after(c, g).unwrap().then_after(c, f).unwrap();
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(&f.target.identity().then_after(c, f).unwrap(), f);
            prop_assert_eq!(&f.then_after(c, &f.source.identity()).unwrap(), f);
        }
    }
}
