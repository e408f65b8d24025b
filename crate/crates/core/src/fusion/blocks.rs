use thiserror::Error;

use super::{FusionError, FusionRing, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("label {0} lies in no block (no unit component acts as identity on it)")]
    Unassigned(Label),
    #[error("label {0} lies in more than one block")]
    MultiplyAssigned(Label),
    #[error("block of unit {unit} is not closed under duality: {label} has dual {dual}")]
    DualEscapes { unit: Label, label: Label, dual: Label },
    #[error("product of {a} and {b} from different blocks contains {c}")]
    CrossBlockProduct { a: Label, b: Label, c: Label },
    #[error(transparent)]
    Restriction(#[from] FusionError),
}

/// The labels acting on which a given unit component is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub unit: Label,
    pub labels: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `label`.
    pub fn block_of(&self, label: Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.labels.contains(&label))
    }

    /// Each block as a ring in its own right, labels in increasing order.
    pub fn sub_rings(&self, ring: &FusionRing) -> Result<Vec<FusionRing>, BlockError> {
        self.blocks
            .iter()
            .map(|b| ring.restrict(&b.labels).map_err(BlockError::from))
            .collect()
    }
}

impl FusionRing {
    /// Partitions the labels by which unit component acts as the identity
    /// on them, then checks that every block is closed under duality and
    /// that products across blocks vanish.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition, BlockError> {
        let n = self.rank();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (i, &u) in self.unit_components().iter().enumerate() {
            for (a, slot) in owner.iter_mut().enumerate() {
                if self.coefficient(a, u, a) == 1 {
                    if slot.is_some() {
                        return Err(BlockError::MultiplyAssigned(a));
                    }
                    *slot = Some(i);
                }
            }
        }
        let mut blocks: Vec<Block> = self
            .unit_components()
            .iter()
            .map(|&unit| Block {
                unit,
                labels: Vec::new(),
            })
            .collect();
        for (a, slot) in owner.iter().enumerate() {
            match slot {
                Some(i) => blocks[*i].labels.push(a),
                None => return Err(BlockError::Unassigned(a)),
            }
        }
        for (a, slot) in owner.iter().enumerate() {
            let d = self.dual(a);
            if owner[d] != *slot {
                return Err(BlockError::DualEscapes {
                    unit: blocks[slot.expect("assigned")].unit,
                    label: a,
                    dual: d,
                });
            }
        }
        for a in 0..n {
            for b in (0..n).filter(|&b| owner[b] != owner[a]) {
                if let Some(c) = (0..n).find(|&c| self.coefficient(a, b, c) != 0) {
                    return Err(BlockError::CrossBlockProduct { a, b, c });
                }
            }
        }
        Ok(BlockDecomposition { blocks })
    }
}
