//! Dimensions of spaces attached to coloured surfaces.
//!
//! A connected surface of genus `g` whose boundary circles carry the labels
//! `sigma` (all read as incoming) gets the dimension
//!
//! ```text
//! dim V(g, sigma) = sum_a dim V(g - 1, sigma + [dual a, a])      (g > 0)
//! dim V(0, sigma) = multiplicity of the unit in Q_s1 * ... * Q_sm
//! ```
//!
//! evaluated separately on every block of the ring and summed. Alternative
//! evaluation orders live in [`gluing`] and are used to check that the
//! gluing law actually holds for a given ring.

pub mod gluing;
mod report;
mod twist;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use thiserror::Error;

use crate::fusion::{BlockError, FusionRing, Label};

pub use gluing::{verify_gluing_consistency, GluingReport, GluingViolation, Schedule};
pub use report::{modular_report, BlockSummary, ModularReport, NamedSurface, SurfaceRow};
pub use twist::{validate_twists, TwistData, TwistError, TwistReport, TwistValue, TwistViolation};

pub type Dim = u128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("fusion ring fails {0} axiom check(s)")]
    InvalidRing(usize),
    #[error(transparent)]
    Blocks(#[from] BlockError),
    #[error("boundary label {label} out of range for rank {rank}")]
    LabelOutOfRange { label: Label, rank: usize },
}

/// Genus plus boundary colouring; an empty colouring is a closed surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColouredSurface {
    pub genus: u32,
    pub boundary: Vec<Label>,
}

impl ColouredSurface {
    pub fn new(genus: u32, boundary: Vec<Label>) -> Self {
        Self { genus, boundary }
    }

    pub fn closed(genus: u32) -> Self {
        Self::new(genus, Vec::new())
    }

    /// The same surface with every colour replaced by its dual.
    pub fn conjugate(&self, ring: &FusionRing) -> Self {
        Self::new(self.genus, self.boundary.iter().map(|&l| ring.dual(l)).collect())
    }
}

impl fmt::Display for ColouredSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "genus {} boundary [", self.genus)?;
        for (i, l) in self.boundary.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// One block of a ring, relabelled so that its labels are `0..len`.
#[derive(Debug, Clone)]
pub(crate) struct BlockRing {
    pub ring: FusionRing,
    /// Global label of each local label.
    pub global: Vec<Label>,
    /// Local index of the block's (irreducible) unit.
    pub unit: Label,
}

impl BlockRing {
    pub fn local(&self, global: Label) -> Option<Label> {
        self.global.iter().position(|&g| g == global)
    }

    pub fn is_self_dual_unit(&self) -> bool {
        self.ring.dual(self.unit) == self.unit
    }
}

/// Evaluates `dim V` on a fixed ring, caching genus reductions by
/// `(genus, sorted colours)` per block.
#[derive(Debug)]
pub struct DimensionEngine {
    ring: FusionRing,
    pub(crate) blocks: Vec<BlockRing>,
    cache: RwLock<HashMap<(usize, u32, Vec<Label>), Dim>>,
}

impl DimensionEngine {
    /// Requires the ring to pass every axiom.
    pub fn new(ring: &FusionRing) -> Result<Self, ModularError> {
        let report = ring.verify_axioms();
        if !report.is_empty() {
            return Err(ModularError::InvalidRing(report.violations.len()));
        }
        Self::without_axiom_check(ring)
    }

    /// Only requires a block decomposition; used to probe broken rings.
    pub fn without_axiom_check(ring: &FusionRing) -> Result<Self, ModularError> {
        let decomposition = ring.block_decomposition()?;
        let subs = decomposition.sub_rings(ring)?;
        let blocks = decomposition
            .blocks
            .iter()
            .zip(subs)
            .map(|(b, sub)| BlockRing {
                unit: b.labels.iter().position(|&l| l == b.unit).expect("unit in own block"),
                global: b.labels.clone(),
                ring: sub,
            })
            .collect();
        Ok(Self {
            ring: ring.clone(),
            blocks,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Global labels and unit of each block.
    pub fn block_labels(&self, block: usize) -> (&[Label], Label) {
        let b = &self.blocks[block];
        (&b.global, b.global[b.unit])
    }

    fn check_labels(&self, surface: &ColouredSurface) -> Result<(), ModularError> {
        let rank = self.ring.rank();
        match surface.boundary.iter().find(|&&l| l >= rank) {
            Some(&label) => Err(ModularError::LabelOutOfRange { label, rank }),
            None => Ok(()),
        }
    }

    /// Sum of the per-block dimensions.
    pub fn dim(&self, surface: &ColouredSurface) -> Result<Dim, ModularError> {
        Ok(self.dims_per_block(surface)?.into_iter().sum())
    }

    /// Dimension contributed by each block; zero for blocks that do not
    /// contain every boundary colour.
    pub fn dims_per_block(&self, surface: &ColouredSurface) -> Result<Vec<Dim>, ModularError> {
        self.check_labels(surface)?;
        Ok((0..self.blocks.len())
            .map(|i| self.block_dim(i, surface))
            .collect())
    }

    fn block_dim(&self, block: usize, surface: &ColouredSurface) -> Dim {
        let b = &self.blocks[block];
        let local: Option<Vec<Label>> = surface.boundary.iter().map(|&l| b.local(l)).collect();
        match local {
            Some(sigma) => self.cached(block, surface.genus, sigma),
            None => 0,
        }
    }

    fn cached(&self, block: usize, genus: u32, mut sigma: Vec<Label>) -> Dim {
        sigma.sort_unstable();
        let key = (block, genus, sigma);
        if let Some(&v) = self.cache.read().expect("cache lock").get(&key) {
            return v;
        }
        let (_, genus, sigma) = &key;
        let b = &self.blocks[block];
        let value = if *genus == 0 {
            Dim::from(b.ring.unit_multiplicity(&b.ring.product_of(sigma)))
        } else {
            (0..b.ring.rank())
                .map(|a| {
                    let mut next = sigma.clone();
                    next.push(b.ring.dual(a));
                    next.push(a);
                    self.cached(block, genus - 1, next)
                })
                .sum()
        };
        self.cache.write().expect("cache lock").insert(key, value);
        value
    }
}

/// `dim V(surface)` for a ring that passes all axioms.
pub fn dim_v(ring: &FusionRing, surface: &ColouredSurface) -> Result<Dim, ModularError> {
    DimensionEngine::new(ring)?.dim(surface)
}

/// Whether the sphere space is nonzero: some unit component is dual to a
/// unit component.
pub fn check_nontriviality(ring: &FusionRing) -> bool {
    let units = ring.unit_components();
    units
        .iter()
        .any(|&b| units.iter().any(|&c| ring.dual(b) == c))
}
