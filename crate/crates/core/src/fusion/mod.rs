//! Fusion rings with involution and a possibly reducible unit.
//!
//! Labels are the integers `0..rank`; `coefficient(a, b, c)` is the
//! multiplicity of `c` in the product of `a` and `b`. The unit is the sum
//! of the unit components, each with multiplicity one.

mod axioms;
mod blocks;
mod enumerate;

use std::fmt;

use thiserror::Error;

use crate::exact::{Matrix, Rational, Tensor3};

pub use axioms::{AxiomReport, AxiomViolation, PairingReport, PairingViolation};
pub use blocks::{Block, BlockDecomposition, BlockError};
pub use enumerate::{enumerate_fusion_rings, EnumerationError, MAX_ENUMERATION_COEFF, MAX_ENUMERATION_RANK};

pub type Label = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("rank must be positive")]
    EmptyRing,
    #[error("expected {expected} label names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("dual table has {found} entries for rank {rank}")]
    DualLength { rank: usize, found: usize },
    #[error("label {0} out of range")]
    LabelOutOfRange(Label),
    #[error("at least one unit component is required")]
    NoUnit,
    #[error("unit component {0} listed twice")]
    DuplicateUnit(Label),
    #[error("coefficient tensor has dims {found:?}, expected rank {rank} cube")]
    CoefficientShape { rank: usize, found: (usize, usize, usize) },
}

/// A based ring with nonnegative integer structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionRing {
    names: Vec<String>,
    dual: Vec<Label>,
    unit: Vec<Label>,
    coefficients: Tensor3<u32>,
}

impl FusionRing {
    /// Checks shapes and ranges only. Ring axioms are checked by
    /// [`FusionRing::verify_axioms`], so broken rings can still be built and
    /// inspected.
    pub fn new(
        names: Vec<String>,
        dual: Vec<Label>,
        unit: Vec<Label>,
        coefficients: Tensor3<u32>,
    ) -> Result<Self, FusionError> {
        let rank = dual.len();
        if rank == 0 {
            return Err(FusionError::EmptyRing);
        }
        if names.len() != rank {
            return Err(FusionError::NameCount {
                expected: rank,
                found: names.len(),
            });
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= rank) {
            return Err(FusionError::LabelOutOfRange(bad));
        }
        if unit.is_empty() {
            return Err(FusionError::NoUnit);
        }
        let mut sorted_unit = unit;
        sorted_unit.sort_unstable();
        for w in sorted_unit.windows(2) {
            if w[0] == w[1] {
                return Err(FusionError::DuplicateUnit(w[0]));
            }
        }
        if let Some(&bad) = sorted_unit.iter().find(|&&u| u >= rank) {
            return Err(FusionError::LabelOutOfRange(bad));
        }
        if coefficients.dims() != (rank, rank, rank) {
            return Err(FusionError::CoefficientShape {
                rank,
                found: coefficients.dims(),
            });
        }
        Ok(Self {
            names,
            dual,
            unit: sorted_unit,
            coefficients,
        })
    }

    /// Builds a ring from a sparse rule list `(a, b, c, n^c_ab)`.
    pub fn from_rules(
        names: &[&str],
        dual: &[Label],
        unit: &[Label],
        rules: &[(Label, Label, Label, u32)],
    ) -> Result<Self, FusionError> {
        let rank = dual.len();
        let mut t = Tensor3::filled((rank, rank, rank), 0u32);
        for &(a, b, c, m) in rules {
            if let Some(bad) = [a, b, c].into_iter().find(|&x| x >= rank) {
                return Err(FusionError::LabelOutOfRange(bad));
            }
            t[(a, b, c)] = m;
        }
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            dual.to_vec(),
            unit.to_vec(),
            t,
        )
    }

    /// The one-label ring.
    pub fn trivial() -> Self {
        Self::from_rules(&["0"], &[0], &[0], &[(0, 0, 0, 1)]).expect("static data")
    }

    /// Group ring of the cyclic group of order `n`, dual = inverse.
    pub fn cyclic(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let dual = (0..n).map(|i| (n - i) % n).collect();
        let coefficients = Tensor3::from_fn((n, n, n), |a, b, c| u32::from((a + b) % n == c));
        Self::new(names, dual, vec![0], coefficients).expect("static data")
    }

    /// Labels `{0, tau}` with `tau * tau = 0 + tau`.
    pub fn fibonacci() -> Self {
        Self::from_rules(
            &["0", "tau"],
            &[0, 1],
            &[0],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        )
        .expect("static data")
    }

    /// Block-diagonal direct product: labels of `self` followed by labels of
    /// `other`, unit components from both.
    pub fn direct_product(&self, other: &FusionRing) -> FusionRing {
        let (n, m) = (self.rank(), other.rank());
        let names = self
            .names
            .iter()
            .map(|s| format!("{s}.a"))
            .chain(other.names.iter().map(|s| format!("{s}.b")))
            .collect();
        let dual = self
            .dual
            .iter()
            .copied()
            .chain(other.dual.iter().map(|d| d + n))
            .collect();
        let unit = self
            .unit
            .iter()
            .copied()
            .chain(other.unit.iter().map(|u| u + n))
            .collect();
        let coefficients = Tensor3::from_fn((n + m, n + m, n + m), |a, b, c| {
            if a < n && b < n && c < n {
                self.coefficient(a, b, c)
            } else if a >= n && b >= n && c >= n {
                other.coefficient(a - n, b - n, c - n)
            } else {
                0
            }
        });
        FusionRing::new(names, dual, unit, coefficients).expect("product of valid shapes")
    }

    /// Returns a copy with a different involution, for negative controls.
    pub fn with_dual(&self, dual: Vec<Label>) -> Result<Self, FusionError> {
        Self::new(self.names.clone(), dual, self.unit.clone(), self.coefficients.clone())
    }

    /// Returns a copy with one coefficient replaced.
    pub fn with_coefficient(&self, a: Label, b: Label, c: Label, value: u32) -> Self {
        let mut r = self.clone();
        r.coefficients[(a, b, c)] = value;
        r
    }

    /// Restricts to a subset of labels, relabelled in the given order.
    pub fn restrict(&self, labels: &[Label]) -> Result<Self, FusionError> {
        let position = |x: Label| labels.iter().position(|&l| l == x);
        let dual = labels
            .iter()
            .map(|&l| position(self.dual[l]).ok_or(FusionError::LabelOutOfRange(self.dual[l])))
            .collect::<Result<Vec<_>, _>>()?;
        let unit: Vec<Label> = self.unit.iter().filter_map(|&u| position(u)).collect();
        let k = labels.len();
        let coefficients = Tensor3::from_fn((k, k, k), |a, b, c| {
            self.coefficient(labels[a], labels[b], labels[c])
        });
        Self::new(
            labels.iter().map(|&l| self.names[l].clone()).collect(),
            dual,
            unit,
            coefficients,
        )
    }

    pub fn rank(&self) -> usize {
        self.dual.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, label: Label) -> &str {
        &self.names[label]
    }

    pub fn label_by_name(&self, name: &str) -> Option<Label> {
        self.names.iter().position(|n| n == name)
    }

    pub fn dual(&self, label: Label) -> Label {
        self.dual[label]
    }

    pub fn dual_table(&self) -> &[Label] {
        &self.dual
    }

    pub fn unit_components(&self) -> &[Label] {
        &self.unit
    }

    pub fn is_unit_component(&self, label: Label) -> bool {
        self.unit.binary_search(&label).is_ok()
    }

    pub fn coefficients(&self) -> &Tensor3<u32> {
        &self.coefficients
    }

    /// `n^c_{ab}`.
    pub fn coefficient(&self, a: Label, b: Label, c: Label) -> u32 {
        self.coefficients[(a, b, c)]
    }

    pub fn basis_vector(&self, label: Label) -> ObjectVector {
        let mut m = vec![0; self.rank()];
        m[label] = 1;
        ObjectVector(m)
    }

    pub fn unit_vector(&self) -> ObjectVector {
        let mut m = vec![0; self.rank()];
        for &u in &self.unit {
            m[u] = 1;
        }
        ObjectVector(m)
    }

    pub fn multiply(&self, x: &ObjectVector, y: &ObjectVector) -> ObjectVector {
        let n = self.rank();
        let mut z = vec![0u64; n];
        for a in (0..n).filter(|&a| x.0[a] != 0) {
            for b in (0..n).filter(|&b| y.0[b] != 0) {
                let w = x.0[a] * y.0[b];
                for (c, zc) in z.iter_mut().enumerate() {
                    *zc += w * u64::from(self.coefficient(a, b, c));
                }
            }
        }
        ObjectVector(z)
    }

    /// Left fold of the product over a sequence of labels; the empty product
    /// is the unit.
    pub fn product_of(&self, labels: &[Label]) -> ObjectVector {
        labels
            .iter()
            .fold(self.unit_vector(), |acc, &l| self.multiply(&acc, &self.basis_vector(l)))
    }

    pub fn dual_object(&self, x: &ObjectVector) -> ObjectVector {
        ObjectVector((0..self.rank()).map(|a| x.0[self.dual[a]]).collect())
    }

    /// `<x, y> = sum_a x(dual a) y(a)`.
    pub fn inner_product(&self, x: &ObjectVector, y: &ObjectVector) -> u64 {
        (0..self.rank()).map(|a| x.0[self.dual[a]] * y.0[a]).sum()
    }

    /// Matrix of `<Q_a, Q_b>` over the label basis.
    pub fn pairing_matrix(&self) -> Matrix {
        let n = self.rank();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let v = self.inner_product(&self.basis_vector(a), &self.basis_vector(b));
                m[(a, b)] = Rational::from_integer(v.into());
            }
        }
        m
    }

    /// Total multiplicity of unit components in `x`.
    pub fn unit_multiplicity(&self, x: &ObjectVector) -> u64 {
        self.unit.iter().map(|&u| x.0[u]).sum()
    }
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fusion ring of rank {} [{}]", self.rank(), self.names.join(", "))
    }
}

/// Multiplicities of simple objects in a (semisimple) object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectVector(pub Vec<u64>);

impl ObjectVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn add(&self, other: &ObjectVector) -> ObjectVector {
        ObjectVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}
