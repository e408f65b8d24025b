//! Commutative-or-not Frobenius algebras and the closed 2d TQFT they
//! define: genus invariants, layered cobordism words and their exact
//! evaluation.

mod invariance;
mod word;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{format_rational, Matrix, Rational, Tensor3};
use crate::fusion::FusionRing;

pub use invariance::{
    frobenius_identity_report, invariance_suite, random_invertible, IdentityReport, IdentityViolation,
    InvarianceReport, InvarianceViolation,
};
pub use word::{alternative_words, canonical_word, CobordismWord, Evaluation, Generator, MultilinearMap, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("algebra needs at least one basis element")]
    Empty,
    #[error("{what} has the wrong shape for dimension {dim}")]
    Shape { what: &'static str, dim: usize },
    #[error("pairing is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("fusion ring fails its axioms")]
    InvalidRing,
    #[error("basis change is not invertible")]
    SingularBasisChange,
}

/// A finite-dimensional algebra with a counit; the pairing
/// `g_ij = eps(e_i e_j)` is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    names: Vec<String>,
    mult: Tensor3<Rational>,
    unit: Vec<Rational>,
    counit: Vec<Rational>,
    pairing: Matrix,
    copairing: Option<Matrix>,
}

impl FrobeniusAlgebra {
    /// Checks shapes only; see [`FrobeniusAlgebra::validate`] for the axioms.
    pub fn new(
        names: Vec<String>,
        mult: Tensor3<Rational>,
        unit: Vec<Rational>,
        counit: Vec<Rational>,
    ) -> Result<Self, FrobeniusError> {
        let n = names.len();
        if n == 0 {
            return Err(FrobeniusError::Empty);
        }
        if mult.dims() != (n, n, n) {
            return Err(FrobeniusError::Shape {
                what: "multiplication",
                dim: n,
            });
        }
        if unit.len() != n {
            return Err(FrobeniusError::Shape { what: "unit", dim: n });
        }
        if counit.len() != n {
            return Err(FrobeniusError::Shape { what: "counit", dim: n });
        }
        let pairing = Matrix::new(
            n,
            n,
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| (0..n).map(|k| &mult[(i, j, k)] * &counit[k]).sum())
                .collect(),
        )
        .expect("square");
        let copairing = pairing.invert().ok();
        Ok(Self {
            names,
            mult,
            unit,
            counit,
            pairing,
            copairing,
        })
    }

    /// `k^n` with orthogonal idempotents and the given counit values.
    pub fn diagonal(counit: Vec<Rational>) -> Self {
        let n = counit.len();
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        let mult = Tensor3::from_fn((n, n, n), |i, j, k| {
            if i == j && j == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        Self::new(names, mult, vec![Rational::one(); n], counit).expect("shapes")
    }

    /// The group algebra of `Z/n` with the counit picking the identity.
    pub fn cyclic_group(n: usize) -> Self {
        let a = crate::lincat::Algebra::cyclic_group(n);
        Self::from_algebra(&a, (0..n).map(|i| Rational::from_integer((i == 0).into())).collect())
            .expect("shapes")
    }

    pub fn from_algebra(a: &crate::lincat::Algebra, counit: Vec<Rational>) -> Result<Self, FrobeniusError> {
        Self::new(a.names().to_vec(), a.structure_constants().clone(), a.unit().to_vec(), counit)
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

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    /// `g_ij = eps(e_i e_j)`.
    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    /// `g^{-1}`, when the pairing is nondegenerate.
    pub fn copairing(&self) -> Result<&Matrix, FrobeniusError> {
        self.copairing.as_ref().ok_or(FrobeniusError::Degenerate {
            rank: self.pairing.rank(),
            dim: self.dim(),
        })
    }

    /// Replaces one structure constant, keeping everything else.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let mut mult = self.mult.clone();
        mult[(i, j, k)] = value;
        Self::new(self.names.clone(), mult, self.unit.clone(), self.counit.clone()).expect("same shapes")
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
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

    pub fn apply_counit(&self, x: &[Rational]) -> Rational {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    /// `omega = sum g^{ij} e_i e_j`.
    pub fn handle_element(&self) -> Result<Vec<Rational>, FrobeniusError> {
        let ginv = self.copairing()?;
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let c = &ginv[(i, j)];
                if c.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * &self.mult[(i, j, k)];
                }
            }
        }
        Ok(out)
    }

    /// `Z(closed genus g surface) = eps(omega^g)`.
    pub fn genus_invariant(&self, genus: u32) -> Result<Rational, FrobeniusError> {
        let omega = self.handle_element()?;
        let mut x = self.unit.clone();
        for _ in 0..genus {
            x = self.multiply(&x, &omega);
        }
        Ok(self.apply_counit(&x))
    }

    pub fn validate(&self) -> FrobeniusReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for a in 0..n {
            let e = self.basis_vector(a);
            if self.multiply(&self.unit, &e) != e {
                violations.push(FrobeniusViolation::LeftUnit { a });
            }
            if self.multiply(&e, &self.unit) != e {
                violations.push(FrobeniusViolation::RightUnit { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.multiply(&self.basis_vector(a), &self.basis_vector(b));
                for c in 0..n {
                    let left = self.multiply(&ab, &self.basis_vector(c));
                    let bc = self.multiply(&self.basis_vector(b), &self.basis_vector(c));
                    let right = self.multiply(&self.basis_vector(a), &bc);
                    if left != right {
                        violations.push(FrobeniusViolation::Associativity { a, b, c });
                    }
                    if self.apply_counit(&left) != self.apply_counit(&right) {
                        violations.push(FrobeniusViolation::PairingInvariance { a, b, c });
                    }
                }
            }
        }
        let rank = self.pairing.rank();
        if rank < n {
            violations.push(FrobeniusViolation::Degenerate { rank, dim: n });
        }
        FrobeniusReport { violations }
    }

    /// Rewrites every structure tensor in the basis `f_a = sum_i P[i][a] e_i`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self, FrobeniusError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(FrobeniusError::Shape {
                what: "basis change",
                dim: n,
            });
        }
        let pinv = p.invert().map_err(|_| FrobeniusError::SingularBasisChange)?;
        let col = |a: usize| p.column(a);
        let mut mult = Tensor3::filled((n, n, n), Rational::zero());
        for a in 0..n {
            for b in 0..n {
                let prod = self.multiply(&col(a), &col(b));
                let coords = pinv.apply(&prod).expect("shape");
                for (c, v) in coords.into_iter().enumerate() {
                    mult[(a, b, c)] = v;
                }
            }
        }
        let unit = pinv.apply(&self.unit).expect("shape");
        let counit = (0..n).map(|a| self.apply_counit(&col(a))).collect();
        let names = (0..n).map(|a| format!("f{}", a + 1)).collect();
        Self::new(names, mult, unit, counit)
    }

    /// Block-diagonal sum; names of the second summand get a `'` suffix
    /// when they clash.
    pub fn direct_sum(&self, other: &FrobeniusAlgebra) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut names = self.names.clone();
        for name in &other.names {
            let mut name = name.clone();
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        let mult = Tensor3::from_fn((n + m, n + m, n + m), |i, j, k| {
            if i < n && j < n && k < n {
                self.mult[(i, j, k)].clone()
            } else if i >= n && j >= n && k >= n {
                other.mult[(i - n, j - n, k - n)].clone()
            } else {
                Rational::zero()
            }
        });
        let unit = self.unit.iter().chain(&other.unit).cloned().collect();
        let counit = self.counit.iter().chain(&other.counit).cloned().collect();
        Self::new(names, mult, unit, counit).expect("shapes")
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

/// The fusion ring as an algebra on `{Q_a}`, unit the sum of unit
/// components and counit their indicator.
pub fn frobenius_from_fusion(ring: &FusionRing) -> Result<FrobeniusAlgebra, FrobeniusError> {
    if !ring.satisfies_axioms() {
        return Err(FrobeniusError::InvalidRing);
    }
    let n = ring.rank();
    let mult = Tensor3::from_fn((n, n, n), |a, b, c| Rational::from_integer(ring.coefficient(a, b, c).into()));
    let indicator: Vec<Rational> = (0..n)
        .map(|a| Rational::from_integer(i64::from(ring.is_unit_component(a)).into()))
        .collect();
    let a = FrobeniusAlgebra::new(ring.names().to_vec(), mult, indicator.clone(), indicator)?;
    a.copairing()?;
    Ok(a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobeniusViolation {
    Associativity { a: usize, b: usize, c: usize },
    LeftUnit { a: usize },
    RightUnit { a: usize },
    PairingInvariance { a: usize, b: usize, c: usize },
    Degenerate { rank: usize, dim: usize },
}

impl FrobeniusViolation {
    pub fn describe(&self, alg: &FrobeniusAlgebra) -> String {
        let n = |i: &usize| alg.names()[*i].as_str();
        match self {
            Self::Associativity { a, b, c } => format!("({0} {1}) {2} != {0} ({1} {2})", n(a), n(b), n(c)),
            Self::LeftUnit { a } => format!("unit is not a left unit on {}", n(a)),
            Self::RightUnit { a } => format!("unit is not a right unit on {}", n(a)),
            Self::PairingInvariance { a, b, c } => {
                format!("eps(({0} {1}) {2}) != eps({0} ({1} {2}))", n(a), n(b), n(c))
            }
            Self::Degenerate { rank, dim } => format!("pairing has rank {rank}, dimension is {dim}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub violations: Vec<FrobeniusViolation>,
}

impl FrobeniusReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}
