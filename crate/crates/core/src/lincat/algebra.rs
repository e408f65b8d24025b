use num_traits::{One, Zero};
use thiserror::Error;

use super::{CategoryBuilder, PresentedCategory};
use crate::exact::{format_rational, q, Matrix, Rational, Tensor3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra needs at least one basis element")]
    Empty,
    #[error("multiplication table has shape {found:?}, expected {expected:?}")]
    Shape {
        expected: (usize, usize, usize),
        found: (usize, usize, usize),
    },
    #[error("unit has {found} coefficients, expected {expected}")]
    UnitLength { expected: usize, found: usize },
    #[error("({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("unit is not two-sided on {0}")]
    NotUnital(String),
    #[error("category has {0} objects, expected one")]
    NotOneObject(usize),
}

/// A finite-dimensional associative unital algebra on a named basis, with
/// `mult[(i, j, k)]` the coefficient of `e_k` in `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    mult: Tensor3<Rational>,
    unit: Vec<Rational>,
}

impl Algebra {
    pub fn new(names: Vec<String>, mult: Tensor3<Rational>, unit: Vec<Rational>) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if mult.dims() != (n, n, n) {
            return Err(AlgebraError::Shape {
                expected: (n, n, n),
                found: mult.dims(),
            });
        }
        if unit.len() != n {
            return Err(AlgebraError::UnitLength {
                expected: n,
                found: unit.len(),
            });
        }
        let a = Self { names, mult, unit };
        for i in 0..n {
            let e = a.basis_vector(i);
            if a.multiply(&a.unit, &e) != e || a.multiply(&e, &a.unit) != e {
                return Err(AlgebraError::NotUnital(a.names[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = a.mult_basis(i, j);
                for k in 0..n {
                    let ek = a.basis_vector(k);
                    let left = a.multiply(&ij, &ek);
                    let right = a.multiply(&a.basis_vector(i), &a.mult_basis(j, k));
                    if left != right {
                        return Err(AlgebraError::NotAssociative {
                            a: a.names[i].clone(),
                            b: a.names[j].clone(),
                            c: a.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(a)
    }

    /// `k^n` with orthogonal idempotents `e1..en`.
    pub fn diagonal(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        let mult = Tensor3::from_fn((n, n, n), |i, j, k| if i == j && j == k { q(1, 1) } else { q(0, 1) });
        Self::new(names, mult, vec![q(1, 1); n]).expect("static data")
    }

    /// The rationals as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::new(vec!["1".into()], Tensor3::filled((1, 1, 1), q(1, 1)), vec![q(1, 1)]).expect("static data")
    }

    /// `k[x]/(x^2)` on the basis `{1, x}`.
    pub fn dual_numbers() -> Self {
        let mult = Tensor3::from_fn((2, 2, 2), |i, j, k| if i + j == k { q(1, 1) } else { q(0, 1) });
        Self::new(vec!["1".into(), "x".into()], mult, vec![q(1, 1), q(0, 1)]).expect("static data")
    }

    /// Group algebra from a multiplication table on `0..n`, with element 0
    /// the identity.
    pub fn group_algebra(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = names.len();
        let mult = Tensor3::from_fn((n, n, n), |i, j, k| if table[i][j] == k { q(1, 1) } else { q(0, 1) });
        let mut unit = vec![q(0, 1); n];
        if n > 0 {
            unit[0] = q(1, 1);
        }
        Self::new(names, mult, unit)
    }

    /// `k[Z/n]` on `1, g, g2, ...`.
    pub fn cyclic_group(n: usize) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::group_algebra(names, &table).expect("static data")
    }

    /// `k[S_n]` on permutations in one-line notation, lexicographic order,
    /// with `(s t)(i) = s(t(i))`.
    pub fn symmetric_group(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for x in (0..n).filter(|x| !p.contains(x)) {
                    let mut p2 = p.clone();
                    p2.push(x);
                    next.push(p2);
                }
            }
            perms = next;
        }
        let names = perms
            .iter()
            .map(|p| format!("p{}", p.iter().map(|d| d.to_string()).collect::<String>()))
            .collect();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        perms.iter().position(|p| *p == st).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::group_algebra(names, &table).expect("static data")
    }

    /// `n x n` matrices on the matrix units `e{i}{j}` (row-major).
    pub fn matrices(n: usize) -> Self {
        let d = n * n;
        let names = (0..d).map(|x| format!("e{}{}", x / n + 1, x % n + 1)).collect();
        let mult = Tensor3::from_fn((d, d, d), |a, b, c| {
            let ((i, j), (k, l), (r, s)) = ((a / n, a % n), (b / n, b % n), (c / n, c % n));
            if j == k && i == r && l == s {
                q(1, 1)
            } else {
                q(0, 1)
            }
        });
        let unit = (0..d).map(|x| if x / n == x % n { q(1, 1) } else { q(0, 1) }).collect();
        Self::new(names, mult, unit).expect("static data")
    }

    /// Reads a one-object category as its endomorphism algebra.
    pub fn from_category(c: &PresentedCategory) -> Result<Self, AlgebraError> {
        if c.object_count() != 1 {
            return Err(AlgebraError::NotOneObject(c.object_count()));
        }
        let n = c.hom_dim(0, 0);
        let mult = Tensor3::from_fn((n, n, n), |i, j, k| c.compose_basis(0, 0, 0, i, j)[k].clone());
        Self::new(c.hom_basis(0, 0).to_vec(), mult, c.identity(0).to_vec())
    }

    pub fn to_category(&self) -> PresentedCategory {
        let mut b = CategoryBuilder::new();
        b.object("x").expect("fresh");
        for name in &self.names {
            b.hom("x", "x", name).expect("distinct names");
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let expr = (0..self.dim())
                    .filter(|&k| !self.mult[(i, j, k)].is_zero())
                    .map(|k| (self.mult[(i, j, k)].clone(), self.names[k].clone()))
                    .collect();
                b.compose(&self.names[i], &self.names[j], expr).expect("fresh pair");
            }
        }
        let unit = (0..self.dim())
            .filter(|&k| !self.unit[k].is_zero())
            .map(|k| (self.unit[k].clone(), self.names[k].clone()))
            .collect();
        b.identity("x", unit).expect("object exists");
        b.build().expect("consistent")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constants(&self) -> &Tensor3<Rational> {
        &self.mult
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    fn mult_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.mult[(i, j, k)].clone()).collect()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.mult[(i, j, k)];
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x -> e_i x`; column `j` holds `e_i e_j`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::new(n, n, (0..n).flat_map(|k| (0..n).map(move |j| (j, k))).map(|(j, k)| self.mult[(i, j, k)].clone()).collect())
            .expect("square")
    }

    /// Gram matrix of `(x, y) -> tr(L_x L_y)` and whether it is
    /// nondegenerate, which in characteristic zero is semisimplicity.
    pub fn trace_form_semisimple(&self) -> (bool, Matrix) {
        let n = self.dim();
        let ls: Vec<Matrix> = (0..n).map(|i| self.left_multiplication(i)).collect();
        let gram = Matrix::new(
            n,
            n,
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| ls[i].mat_mul(&ls[j]).expect("square").trace())
                .collect(),
        )
        .expect("square");
        (gram.rank() == n, gram)
    }

    /// Checks `e = sum E[i][j] e_i (x) e_j` against `mu(e) = 1` and
    /// `r e = e r` for every basis element `r`, where `r` acts on the left
    /// factor from the left and on the right factor from the right.
    pub fn verify_separability_idempotent(&self, e: &Matrix) -> SeparabilityReport {
        let n = self.dim();
        let mut violations = Vec::new();
        if e.rows() != n || e.cols() != n {
            violations.push(SeparabilityViolation::Shape {
                rows: e.rows(),
                cols: e.cols(),
            });
            return SeparabilityReport { violations };
        }
        let mut mu = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if e[(i, j)].is_zero() {
                    continue;
                }
                for (k, m) in mu.iter_mut().enumerate() {
                    *m += &e[(i, j)] * &self.mult[(i, j, k)];
                }
            }
        }
        if mu != self.unit {
            let residual = mu.iter().zip(&self.unit).map(|(a, b)| a - b).collect();
            violations.push(SeparabilityViolation::MultiplicationNotUnit { residual });
        }
        for r in 0..n {
            let mut diff = vec![Rational::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let c = &e[(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let left = &self.mult[(r, i, k)];
                        if !left.is_zero() {
                            diff[k * n + j] += c * left;
                        }
                        let right = &self.mult[(j, r, k)];
                        if !right.is_zero() {
                            diff[i * n + k] -= c * right;
                        }
                    }
                }
            }
            if diff.iter().any(|x| !x.is_zero()) {
                violations.push(SeparabilityViolation::NotCentral {
                    r,
                    difference: Matrix::new(n, n, diff).expect("square"),
                });
            }
        }
        SeparabilityReport { violations }
    }

    pub fn format_element(&self, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", format_rational(c), self.names[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparabilityViolation {
    Shape { rows: usize, cols: usize },
    MultiplicationNotUnit { residual: Vec<Rational> },
    /// `r e - e r`, as a coefficient matrix over basis pairs.
    NotCentral { r: usize, difference: Matrix },
}

impl SeparabilityViolation {
    pub fn describe(&self, a: &Algebra) -> String {
        match self {
            Self::Shape { rows, cols } => {
                format!("coefficient matrix is {rows}x{cols}, expected {0}x{0}", a.dim())
            }
            Self::MultiplicationNotUnit { residual } => {
                format!("mu(e) - 1 = {}", a.format_element(residual))
            }
            Self::NotCentral { r, difference } => {
                format!("{0} e - e {0} = {1}", a.names()[*r], difference)
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeparabilityReport {
    pub violations: Vec<SeparabilityViolation>,
}

impl SeparabilityReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}
