//! Independent evaluation orders for `dim V`, and the gluing checks built
//! from them.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BlockRing, ColouredSurface, Dim, DimensionEngine, ModularError};
use crate::fusion::{FusionRing, Label};

/// How to genus-reduce, and how to evaluate the genus-zero leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub name: String,
    /// Where the new pair `[dual a, a]` is inserted at successive genus
    /// reductions, taken modulo `len + 1` and cycled; `usize::MAX` appends.
    pub insert_at: Vec<usize>,
    pub base: Base,
    /// Permutation applied to the boundary before anything else.
    pub permutation: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Base {
    /// `((Q1 Q2) Q3) ...`
    LeftFold,
    /// `Q1 (Q2 (Q3 ...))`
    RightFold,
    /// Cut a sphere with `m >= 4` boundary circles along a separating curve
    /// after position `k`, summing over the label on the cut. The offsets
    /// are added to `m / 2` (cycled); spheres with fewer circles are folded.
    Cut(Vec<isize>),
}

impl Schedule {
    pub fn back_left() -> Self {
        Self {
            name: "append pair, left fold".into(),
            insert_at: vec![usize::MAX],
            base: Base::LeftFold,
            permutation: None,
        }
    }

    pub fn front_right() -> Self {
        Self {
            name: "prepend pair, right fold".into(),
            insert_at: vec![0],
            base: Base::RightFold,
            permutation: None,
        }
    }

    pub fn middle_cut() -> Self {
        Self {
            name: "middle insertion, separating cuts".into(),
            insert_at: vec![1],
            base: Base::Cut(vec![0]),
            permutation: None,
        }
    }

    pub fn random(rng: &mut impl Rng, boundary_len: usize, index: usize) -> Self {
        let insert_at = (0..4).map(|_| rng.gen_range(0..=boundary_len + 8)).collect();
        let base = match rng.gen_range(0..3) {
            0 => Base::LeftFold,
            1 => Base::RightFold,
            _ => Base::Cut((0..4).map(|_| rng.gen_range(-1..=1)).collect()),
        };
        let mut perm: Vec<usize> = (0..boundary_len).collect();
        perm.shuffle(rng);
        Self {
            name: format!("random schedule #{index}"),
            insert_at,
            base,
            permutation: Some(perm),
        }
    }

    /// Evaluates one block with no caching across calls.
    pub(crate) fn evaluate(&self, block: &BlockRing, genus: u32, sigma: &[Label]) -> Dim {
        let sigma: Vec<Label> = match &self.permutation {
            Some(p) if p.len() == sigma.len() => p.iter().map(|&i| sigma[i]).collect(),
            _ => sigma.to_vec(),
        };
        let mut memo = HashMap::new();
        self.reduce(block, genus, sigma, 0, &mut memo)
    }

    fn reduce(
        &self,
        block: &BlockRing,
        genus: u32,
        sigma: Vec<Label>,
        step: usize,
        memo: &mut HashMap<Vec<Label>, Dim>,
    ) -> Dim {
        if genus == 0 {
            return self.sphere(block, &sigma, 0, memo);
        }
        let raw = self.insert_at[step % self.insert_at.len()];
        let pos = if raw == usize::MAX {
            sigma.len()
        } else {
            raw % (sigma.len() + 1)
        };
        (0..block.ring.rank())
            .map(|a| {
                let mut next = sigma.clone();
                next.splice(pos..pos, [block.ring.dual(a), a]);
                self.reduce(block, genus - 1, next, step + 1, memo)
            })
            .sum()
    }

    fn sphere(&self, block: &BlockRing, sigma: &[Label], depth: usize, memo: &mut HashMap<Vec<Label>, Dim>) -> Dim {
        if let Some(&v) = memo.get(sigma) {
            return v;
        }
        let ring = &block.ring;
        let value = match &self.base {
            Base::Cut(offsets) if sigma.len() >= 4 => {
                let m = sigma.len() as isize;
                let k = (m / 2 + offsets[depth % offsets.len()]).clamp(2, m - 2) as usize;
                (0..ring.rank())
                    .map(|a| {
                        let mut left = sigma[..k].to_vec();
                        left.push(a);
                        let mut right = sigma[k..].to_vec();
                        right.push(ring.dual(a));
                        let l = self.sphere(block, &left, depth + 1, memo);
                        if l == 0 {
                            return 0;
                        }
                        l * self.sphere(block, &right, depth + 1, memo)
                    })
                    .sum()
            }
            Base::RightFold => {
                let product = sigma.iter().rev().fold(ring.unit_vector(), |acc, &l| {
                    ring.multiply(&ring.basis_vector(l), &acc)
                });
                Dim::from(ring.unit_multiplicity(&product))
            }
            _ => Dim::from(ring.unit_multiplicity(&ring.product_of(sigma))),
        };
        memo.insert(sigma.to_vec(), value);
        value
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GluingViolation {
    /// Two evaluation orders disagree.
    OrderDisagreement {
        block: usize,
        first: (String, Dim),
        second: (String, Dim),
    },
    /// `dim V(g, s)` differs from the sum over the label on a separating
    /// curve splitting it into `(g1, s1 + [a])` and `(g2, s2 + [dual a])`.
    SeparatingCut {
        block: usize,
        left: ColouredSurface,
        right: ColouredSurface,
        whole: Dim,
        glued: Dim,
    },
    /// `dim V(S1) dim V(S2)` differs from the vacuum channel of the
    /// separating decomposition, i.e. from the disjoint union obtained by
    /// cutting the neck.
    DisjointUnion {
        block: usize,
        left: ColouredSurface,
        right: ColouredSurface,
        product: Dim,
        vacuum: Dim,
    },
}

impl fmt::Display for GluingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderDisagreement { block, first, second } => write!(
                f,
                "block {block}: '{}' gives {} but '{}' gives {}",
                first.0, first.1, second.0, second.1
            ),
            Self::SeparatingCut {
                block,
                left,
                right,
                whole,
                glued,
            } => write!(
                f,
                "block {block}: separating cut into ({left}) and ({right}) gives {glued}, whole surface {whole}"
            ),
            Self::DisjointUnion {
                block,
                left,
                right,
                product,
                vacuum,
            } => write!(
                f,
                "block {block}: disjoint union of ({left}) and ({right}) has product {product}, vacuum channel {vacuum}"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GluingReport {
    /// Number of (block, schedule) evaluations that were compared.
    pub evaluations: usize,
    pub violations: Vec<GluingViolation>,
}

impl GluingReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `surface` along the fixed schedules plus `trials` random ones
/// and checks `trials` random separating splits, per block. Needs only a
/// block decomposition, so rings that break other axioms can be probed.
pub fn verify_gluing_consistency(
    ring: &FusionRing,
    surface: &ColouredSurface,
    trials: usize,
    seed: u64,
) -> Result<GluingReport, ModularError> {
    let engine = DimensionEngine::without_axiom_check(ring)?;
    engine.check_labels(surface)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GluingReport::default();

    for (bi, block) in engine.blocks.iter().enumerate() {
        let Some(sigma) = surface
            .boundary
            .iter()
            .map(|&l| block.local(l))
            .collect::<Option<Vec<Label>>>()
        else {
            continue;
        };
        let g = surface.genus;

        let mut schedules = vec![Schedule::back_left(), Schedule::front_right(), Schedule::middle_cut()];
        schedules.extend((0..trials).map(|i| Schedule::random(&mut rng, sigma.len(), i)));
        let reference = schedules[0].evaluate(block, g, &sigma);
        report.evaluations += 1;
        for s in &schedules[1..] {
            let v = s.evaluate(block, g, &sigma);
            report.evaluations += 1;
            if v != reference {
                report.violations.push(GluingViolation::OrderDisagreement {
                    block: bi,
                    first: (schedules[0].name.clone(), reference),
                    second: (s.name.clone(), v),
                });
            }
        }

        let base = Schedule::back_left();
        let eval = |genus: u32, colours: &[Label]| base.evaluate(block, genus, colours);
        for _ in 0..trials {
            let g1 = rng.gen_range(0..=g);
            let mut shuffled = sigma.clone();
            shuffled.shuffle(&mut rng);
            let split = rng.gen_range(0..=shuffled.len());
            let (s1, s2) = shuffled.split_at(split);

            let mut glued = 0;
            for a in 0..block.ring.rank() {
                let mut l = s1.to_vec();
                l.push(a);
                let mut r = s2.to_vec();
                r.push(block.ring.dual(a));
                glued += eval(g1, &l) * eval(g - g1, &r);
            }
            let whole = eval(g, &shuffled);
            let to_global = |genus: u32, colours: &[Label]| {
                ColouredSurface::new(genus, colours.iter().map(|&l| block.global[l]).collect())
            };
            if glued != whole {
                report.violations.push(GluingViolation::SeparatingCut {
                    block: bi,
                    left: to_global(g1, s1),
                    right: to_global(g - g1, s2),
                    whole,
                    glued,
                });
            }

            let mut l = s1.to_vec();
            l.push(block.unit);
            let mut r = s2.to_vec();
            r.push(block.ring.dual(block.unit));
            let vacuum = eval(g1, &l) * eval(g - g1, &r);
            let product = eval(g1, s1) * eval(g - g1, s2);
            if vacuum != product {
                report.violations.push(GluingViolation::DisjointUnion {
                    block: bi,
                    left: to_global(g1, s1),
                    right: to_global(g - g1, s2),
                    product,
                    vacuum,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_genus_two_agrees() {
        let r = FusionRing::fibonacci();
        let report = verify_gluing_consistency(&r, &ColouredSurface::closed(2), 10, 7).unwrap();
        assert!(report.is_empty(), "{:?}", report.violations);
        assert!(report.evaluations >= 13);
    }

    #[test]
    fn broken_frobenius_symmetry_is_detected() {
        // Z/3 with the identity involution breaks the Frobenius symmetry.
        let broken = FusionRing::cyclic(3).with_dual(vec![0, 1, 2]).unwrap();
        let report =
            verify_gluing_consistency(&broken, &ColouredSurface::new(0, vec![1, 1, 1, 0]), 10, 1).unwrap();
        assert!(!report.is_empty());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, GluingViolation::OrderDisagreement { .. })));
    }

    #[test]
    fn two_tori_over_z2() {
        let r = FusionRing::cyclic(2);
        let engine = DimensionEngine::new(&r).unwrap();
        let torus = engine.dim(&ColouredSurface::closed(1)).unwrap();
        assert_eq!(torus * torus, 4);
        let report = verify_gluing_consistency(&r, &ColouredSurface::closed(2), 20, 3).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn schedules_agree_on_product_ring() {
        let r = FusionRing::fibonacci().direct_product(&FusionRing::cyclic(3));
        for s in [vec![1, 1, 1, 1], vec![0, 3, 4, 2], vec![3, 3]] {
            let report = verify_gluing_consistency(&r, &ColouredSurface::new(1, s), 5, 11).unwrap();
            assert!(report.is_empty(), "{:?}", report.violations);
        }
    }
}
