//! Browser bindings: a few operations on pasted input text, returning text.
//! The plain functions are what the tests exercise; the `#[wasm_bindgen]`
//! wrappers only convert errors into exceptions.

use std::fmt::Write;

use verlinde_core::app::{corpus, render_enumeration};
use verlinde_core::exact::format_rational;
use verlinde_core::fusion::enumerate_fusion_rings;
use verlinde_core::io::{parse_algebra, parse_fusion, SurfaceSpec};
use verlinde_core::modular::DimensionEngine;
use verlinde_core::tqft::frobenius_identity_report;
use wasm_bindgen::prelude::*;

/// Largest rank offered for enumeration; rank 4 already takes a while.
pub const MAX_ENUMERATION_RANK: usize = 4;

/// Dimensions for genus 0..=max_genus with the given comma-separated
/// boundary labels, one line per genus, split over blocks when there are
/// several.
pub fn dimension_table(fusion: &str, max_genus: u32, boundary: &str) -> Result<String, String> {
    let ring = parse_fusion(fusion).map_err(|e| e.to_string())?;
    let engine = DimensionEngine::new(&ring).map_err(|e| e.to_string())?;
    let labels: Vec<String> = boundary
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    let mut out = String::new();
    for genus in 0..=max_genus {
        let spec = SurfaceSpec {
            name: format!("genus {genus}"),
            genus,
            boundary: labels.clone(),
        };
        let surface = spec.resolve(&ring)?.surface;
        let per_block = engine.dims_per_block(&surface).map_err(|e| e.to_string())?;
        let total: u128 = per_block.iter().sum();
        if per_block.len() > 1 {
            let parts: Vec<String> = per_block.iter().map(|d| d.to_string()).collect();
            writeln!(out, "genus {genus}: {total} = {}", parts.join(" + ")).unwrap();
        } else {
            writeln!(out, "genus {genus}: {total}").unwrap();
        }
    }
    Ok(out)
}

/// Closed-surface invariants of a Frobenius algebra, after checking its
/// axioms and the snake and Frobenius identities.
pub fn tqft_invariants(algebra: &str, max_genus: u32) -> Result<String, String> {
    let data = parse_algebra(algebra).map_err(|e| e.to_string())?;
    if data.counit.is_none() {
        return Err("a counit line is needed for the TQFT".into());
    }
    let a = data.frobenius().map_err(|e| e.to_string())?;
    let report = a.validate();
    if let Some(v) = report.violations.first() {
        return Err(v.describe(&a));
    }
    let identities = frobenius_identity_report(&a).map_err(|e| e.to_string())?;
    let mut out = String::new();
    match identities.violations.first() {
        None => writeln!(out, "identities: ok").unwrap(),
        Some(v) => writeln!(out, "identities: {v}").unwrap(),
    }
    for g in 0..=max_genus {
        let z = a.genus_invariant(g).map_err(|e| e.to_string())?;
        writeln!(out, "genus {g}: {}", format_rational(&z)).unwrap();
    }
    Ok(out)
}

pub fn enumeration(rank: usize, max_coeff: u32) -> Result<String, String> {
    if rank == 0 || rank > MAX_ENUMERATION_RANK {
        return Err(format!("rank must be between 1 and {MAX_ENUMERATION_RANK}"));
    }
    let rings = enumerate_fusion_rings(rank, max_coeff).map_err(|e| e.to_string())?;
    if rings.is_empty() {
        return Ok("# no rings\n".into());
    }
    Ok(render_enumeration(&rings))
}

#[wasm_bindgen(js_name = dimensionTable)]
pub fn dimension_table_js(fusion: &str, max_genus: u32, boundary: &str) -> Result<String, JsError> {
    dimension_table(fusion, max_genus, boundary).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = tqftInvariants)]
pub fn tqft_invariants_js(algebra: &str, max_genus: u32) -> Result<String, JsError> {
    tqft_invariants(algebra, max_genus).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = enumerate)]
pub fn enumeration_js(rank: usize, max_coeff: u32) -> Result<String, JsError> {
    enumeration(rank, max_coeff).map_err(|e| JsError::new(&e))
}

/// A shipped example file by name, e.g. `fib.fusion`.
#[wasm_bindgen]
pub fn example(name: &str) -> Option<String> {
    corpus::lookup(name).map(String::from)
}
