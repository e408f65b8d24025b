use std::fmt::Write;

use super::{check_nontriviality, validate_twists, ColouredSurface, Dim, DimensionEngine, ModularError, TwistData, TwistReport};
use crate::fusion::{FusionRing, Label};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSurface {
    pub name: String,
    pub surface: ColouredSurface,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSummary {
    pub unit: Label,
    pub labels: Vec<Label>,
    /// The block's unit is self-dual, so its sphere space is nonzero.
    pub nontrivial: bool,
    pub torus_dim: Dim,
    /// One entry per requested surface, in request order.
    pub dims: Vec<Dim>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRow {
    pub name: String,
    pub surface: ColouredSurface,
    /// Sum over blocks.
    pub total: Dim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularReport {
    pub ring: FusionRing,
    pub nontrivial: bool,
    pub blocks: Vec<BlockSummary>,
    /// Number of nontrivial blocks.
    pub modular_functors: usize,
    pub torus_dim: Dim,
    pub surfaces: Vec<SurfaceRow>,
    pub twists: Option<TwistReport>,
}

impl ModularReport {
    /// Number of unit components, `dim Hom(1, 1)`.
    pub fn unit_count(&self) -> usize {
        self.ring.unit_components().len()
    }

    pub fn is_clean(&self) -> bool {
        self.twists.as_ref().is_none_or(TwistReport::is_empty)
    }

    pub fn render_text(&self) -> String {
        let r = &self.ring;
        let names = |ls: &[Label]| ls.iter().map(|&l| r.name(l)).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        writeln!(out, "rank: {}", r.rank()).unwrap();
        writeln!(out, "unit components: {} ({})", self.unit_count(), names(r.unit_components())).unwrap();
        writeln!(out, "nontrivial: {}", if self.nontrivial { "yes" } else { "no" }).unwrap();
        writeln!(out, "modular functors: {}", self.modular_functors).unwrap();
        writeln!(out, "torus dimension: {}", self.torus_dim).unwrap();
        for (i, b) in self.blocks.iter().enumerate() {
            writeln!(
                out,
                "block {i}: unit {} labels [{}] {} torus {}",
                r.name(b.unit),
                names(&b.labels),
                if b.nontrivial { "nontrivial" } else { "trivial" },
                b.torus_dim
            )
            .unwrap();
        }
        if !self.surfaces.is_empty() {
            writeln!(out, "surfaces (total = sum over blocks):").unwrap();
            for (k, row) in self.surfaces.iter().enumerate() {
                let per_block = self
                    .blocks
                    .iter()
                    .map(|b| b.dims[k].to_string())
                    .collect::<Vec<_>>()
                    .join(" + ");
                writeln!(
                    out,
                    "  {}: genus {} boundary [{}] -> {} ({per_block})",
                    row.name,
                    row.surface.genus,
                    names(&row.surface.boundary),
                    row.total
                )
                .unwrap();
            }
        }
        if let Some(t) = &self.twists {
            if t.is_empty() {
                writeln!(out, "twists: ok").unwrap();
            } else {
                for v in &t.violations {
                    writeln!(out, "{}", v.describe(r)).unwrap();
                }
            }
        }
        out
    }

    /// Flat `key = value` lines in a fixed order.
    pub fn render_machine(&self) -> String {
        let r = &self.ring;
        let mut out = String::new();
        let mut kv = |k: String, v: String| writeln!(out, "{k} = {v}").unwrap();
        kv("rank".into(), r.rank().to_string());
        kv("unit_components".into(), self.unit_count().to_string());
        kv("nontrivial".into(), self.nontrivial.to_string());
        kv("modular_functors".into(), self.modular_functors.to_string());
        kv("torus_dim".into(), self.torus_dim.to_string());
        for (i, b) in self.blocks.iter().enumerate() {
            kv(format!("block.{i}.unit"), r.name(b.unit).into());
            kv(
                format!("block.{i}.labels"),
                b.labels.iter().map(|&l| r.name(l)).collect::<Vec<_>>().join(","),
            );
            kv(format!("block.{i}.nontrivial"), b.nontrivial.to_string());
            kv(format!("block.{i}.torus_dim"), b.torus_dim.to_string());
            for (k, row) in self.surfaces.iter().enumerate() {
                kv(format!("block.{i}.dim.{}", row.name), b.dims[k].to_string());
            }
        }
        for row in &self.surfaces {
            kv(format!("dim.{}", row.name), row.total.to_string());
        }
        if let Some(t) = &self.twists {
            kv("twist_violations".into(), t.violations.len().to_string());
        }
        out
    }
}

/// Block structure, nontriviality, a dimension table and (optionally) twist
/// validation for one ring.
pub fn modular_report(
    ring: &FusionRing,
    twists: Option<&TwistData>,
    surfaces: &[NamedSurface],
) -> Result<ModularReport, ModularError> {
    let engine = DimensionEngine::new(ring)?;
    let torus = ColouredSurface::closed(1);
    let per_surface = surfaces
        .iter()
        .map(|s| engine.dims_per_block(&s.surface))
        .collect::<Result<Vec<_>, _>>()?;
    let torus_blocks = engine.dims_per_block(&torus)?;
    let blocks: Vec<BlockSummary> = engine
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| BlockSummary {
            unit: b.global[b.unit],
            labels: b.global.clone(),
            nontrivial: b.is_self_dual_unit(),
            torus_dim: torus_blocks[i],
            dims: per_surface.iter().map(|d| d[i]).collect(),
        })
        .collect();
    Ok(ModularReport {
        ring: ring.clone(),
        nontrivial: check_nontriviality(ring),
        modular_functors: blocks.iter().filter(|b| b.nontrivial).count(),
        torus_dim: torus_blocks.iter().sum(),
        surfaces: surfaces
            .iter()
            .zip(&per_surface)
            .map(|(s, d)| SurfaceRow {
                name: s.name.clone(),
                surface: s.surface.clone(),
                total: d.iter().sum(),
            })
            .collect(),
        blocks,
        twists: twists.map(|t| validate_twists(ring, t)),
    })
}
