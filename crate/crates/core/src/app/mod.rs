//! The command-line surface as a library: a [`RunConfig`] goes in, exit
//! status and output text come out. Nothing here touches the process
//! environment, so every subcommand can be exercised from tests.

pub mod corpus;

use std::fmt::Write;
use std::path::{Path, PathBuf};

use crate::exact::{format_rational, Rational};
use crate::fusion::{enumerate_fusion_rings, FusionRing};
use crate::io::{parse, AlgebraData, Document, ElementTerm, Kind, SurfaceSpec, TwistSpec};
use crate::lincat::{
    default_grid, karoubi_completion, karoubi_completion_from, mat_completion, mat_completion_with_zero,
    PresentedCategory,
};
use crate::modular::{modular_report, verify_gluing_consistency, ColouredSurface, DimensionEngine};
use crate::tqft::{frobenius_identity_report, invariance_suite, Evaluation};

/// Environment variable naming a directory searched for inputs that are
/// not found relative to the working directory.
pub const CORPUS_ENV: &str = "VERLINDE_CORPUS";

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BOUND: usize = 3;
pub const DEFAULT_MAX_GENUS: u32 = 3;
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    Mat,
    Karoubi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Blocks,
    Dim,
    Invariant,
    EvalWord,
    Enumerate,
    Complete(Completion),
    CheckSeparable,
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub genus: Option<u32>,
    pub boundary: Vec<String>,
    pub max_genus: Option<u32>,
    pub bound: usize,
    pub with_zero: bool,
    pub grid: Option<Vec<Rational>>,
    pub rank: usize,
    pub max_coeff: u32,
    pub seed: u64,
    pub trials: usize,
    pub machine: bool,
    pub corpus_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            inputs: Vec::new(),
            genus: None,
            boundary: Vec::new(),
            max_genus: None,
            bound: DEFAULT_BOUND,
            with_zero: false,
            grid: None,
            rank: 2,
            max_coeff: 1,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            machine: false,
            corpus_dir: None,
        }
    }

    pub fn input(mut self, path: impl Into<PathBuf>) -> Self {
        self.inputs.push(path.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    /// 0 when every check passed, 1 when some check failed, 2 on bad input.
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Collects output, in text or `key = value` form.
struct Out {
    machine: bool,
    text: String,
    failed: bool,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        if !self.machine {
            self.text.push_str(s.as_ref());
            self.text.push('\n');
        }
    }

    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.machine {
            writeln!(self.text, "{key} = {value}").unwrap();
        }
    }

    /// A titled section of findings; any finding marks the run failed.
    fn section(&mut self, title: &str, findings: &[String], detail: &str) {
        if findings.is_empty() {
            if detail.is_empty() {
                self.line(format!("{title}: ok"));
            } else {
                self.line(format!("{title}: ok ({detail})"));
            }
        } else {
            self.failed = true;
            let noun = if findings.len() == 1 { "violation" } else { "violations" };
            self.line(format!("{title}: {} {noun}", findings.len()));
            for f in findings {
                self.line(format!("  {f}"));
            }
        }
        self.kv(&format!("{}.violations", title.replace(' ', "_")), findings.len());
    }
}

pub fn run(config: &RunConfig) -> RunOutput {
    let mut out = Out {
        machine: config.machine,
        text: String::new(),
        failed: false,
    };
    match dispatch(config, &mut out) {
        Ok(()) => RunOutput {
            status: i32::from(out.failed),
            stdout: out.text,
            stderr: String::new(),
        },
        Err(Failure(msg)) => RunOutput {
            status: 2,
            stdout: out.text,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read_input(path: &Path, corpus_dir: Option<&Path>) -> Result<String, Failure> {
    if let Ok(text) = std::fs::read_to_string(path) {
        return Ok(text);
    }
    if let Some(dir) = corpus_dir {
        if let Ok(text) = std::fs::read_to_string(dir.join(path)) {
            return Ok(text);
        }
    }
    if path.components().count() == 1 {
        if let Some(text) = path.to_str().and_then(corpus::lookup) {
            return Ok(text.to_string());
        }
    }
    Err(Failure(format!("cannot read '{}'", path.display())))
}

fn load(path: &Path, config: &RunConfig) -> Result<Document, Failure> {
    let kind = Kind::from_path(path).ok_or_else(|| Failure(format!("'{}': unknown file extension", path.display())))?;
    let text = read_input(path, config.corpus_dir.as_deref())?;
    parse(kind, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn input(config: &RunConfig, index: usize, what: &str) -> Result<Document, Failure> {
    let path = config
        .inputs
        .get(index)
        .ok_or_else(|| Failure(format!("missing {what} input")))?;
    load(path, config)
}

fn expect_fusion(doc: Document, path: &Path) -> Result<FusionRing, Failure> {
    match doc {
        Document::Fusion(r) => Ok(r),
        other => Err(Failure(format!("'{}' is a {} file, expected fusion", path.display(), other.kind()))),
    }
}

fn expect_algebra(doc: Document, path: &Path) -> Result<AlgebraData, Failure> {
    match doc {
        Document::Algebra(a) => Ok(a),
        other => Err(Failure(format!("'{}' is a {} file, expected algebra", path.display(), other.kind()))),
    }
}

fn expect_category(doc: Document, path: &Path) -> Result<PresentedCategory, Failure> {
    match doc {
        Document::Category(c) => Ok(c),
        other => Err(Failure(format!("'{}' is a {} file, expected category", path.display(), other.kind()))),
    }
}

fn first_fusion(config: &RunConfig) -> Result<FusionRing, Failure> {
    expect_fusion(input(config, 0, "fusion")?, &config.inputs[0])
}

fn first_algebra(config: &RunConfig) -> Result<AlgebraData, Failure> {
    expect_algebra(input(config, 0, "algebra")?, &config.inputs[0])
}

fn dispatch(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    match config.command {
        Command::Validate => validate(config, out),
        Command::Blocks => blocks(config, out),
        Command::Dim => dim(config, out),
        Command::Invariant => invariant(config, out),
        Command::EvalWord => eval_word(config, out),
        Command::Enumerate => enumerate(config, out),
        Command::Complete(kind) => complete(config, kind, out),
        Command::CheckSeparable => check_separable(config, out),
        Command::Report => report(config, out),
    }
}

fn validate(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    match input(config, 0, "validate")? {
        Document::Fusion(ring) => validate_fusion(config, &ring, out),
        Document::Algebra(a) => validate_algebra(config, &a, out),
        Document::Category(c) => {
            out.line(format!("category: {} objects", c.object_count()));
            out.kv("kind", "category");
            out.kv("objects", c.object_count());
            let findings: Vec<String> = c.validate().violations.iter().map(|v| v.describe(&c)).collect();
            out.section("axioms", &findings, "");
            out.kv("valid", !out.failed);
            Ok(())
        }
        other => Err(Failure(format!("cannot validate a {} file", other.kind()))),
    }
}

fn validate_fusion(config: &RunConfig, ring: &FusionRing, out: &mut Out) -> Result<(), Failure> {
    out.line(format!(
        "fusion ring: rank {}, {} unit component(s)",
        ring.rank(),
        ring.unit_components().len()
    ));
    out.kv("kind", "fusion");
    out.kv("rank", ring.rank());
    let axioms: Vec<String> = ring.verify_axioms().violations.iter().map(|v| v.describe(ring)).collect();
    out.section("axioms", &axioms, "");
    let pairing: Vec<String> = ring
        .verify_frobenius_pairing()
        .violations
        .iter()
        .map(|v| v.describe(ring))
        .collect();
    out.section("pairing", &pairing, "");

    // closed surfaces and two-holed spheres and tori coloured by (a, dual a)
    let max_genus = config.max_genus.unwrap_or(2);
    let mut surfaces: Vec<ColouredSurface> = (0..=max_genus).map(ColouredSurface::closed).collect();
    for a in 0..ring.rank() {
        surfaces.push(ColouredSurface::new(0, vec![a, ring.dual(a)]));
        surfaces.push(ColouredSurface::new(1, vec![a, ring.dual(a)]));
    }
    let mut gluing = Vec::new();
    let mut evaluations = 0;
    for (i, s) in surfaces.iter().enumerate() {
        match verify_gluing_consistency(ring, s, 4, config.seed.wrapping_add(i as u64)) {
            Ok(rep) => {
                evaluations += rep.evaluations;
                gluing.extend(rep.violations.iter().map(|v| format!("({s}) {v}")));
            }
            Err(e) => {
                gluing.push(format!("not run: {e}"));
                break;
            }
        }
    }
    out.section("gluing", &gluing, &format!("{evaluations} evaluations"));
    out.kv("valid", !out.failed);
    Ok(())
}

fn validate_algebra(config: &RunConfig, data: &AlgebraData, out: &mut Out) -> Result<(), Failure> {
    if data.counit.is_none() {
        out.line(format!("algebra: dimension {}", data.names.len()));
        out.kv("kind", "algebra");
        out.kv("dim", data.names.len());
        let findings = match data.algebra() {
            Ok(_) => Vec::new(),
            Err(e) => vec![e.to_string()],
        };
        out.section("axioms", &findings, "");
        out.kv("valid", !out.failed);
        return Ok(());
    }
    let a = data.frobenius()?;
    out.line(format!("frobenius algebra: dimension {}", a.dim()));
    out.kv("kind", "frobenius");
    out.kv("dim", a.dim());
    let findings: Vec<String> = a.validate().violations.iter().map(|v| v.describe(&a)).collect();
    let valid = findings.is_empty();
    out.section("axioms", &findings, "");
    if !valid {
        out.kv("valid", false);
        return Ok(());
    }
    let identities: Vec<String> = frobenius_identity_report(&a)?
        .violations
        .iter()
        .map(|v| v.to_string())
        .collect();
    out.section("identities", &identities, "");
    let max_genus = config.max_genus.unwrap_or(DEFAULT_MAX_GENUS);
    let rep = invariance_suite(&a, config.trials, max_genus, config.seed)?;
    let findings: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
    out.section(
        "invariance",
        &findings,
        &format!("{} basis changes, genus <= {max_genus}", config.trials),
    );
    out.kv("valid", !out.failed);
    Ok(())
}

fn blocks(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let ring = first_fusion(config)?;
    let d = ring.block_decomposition()?;
    out.line(format!("blocks: {}", d.len()));
    out.kv("blocks", d.len());
    for (i, b) in d.blocks.iter().enumerate() {
        let labels: Vec<&str> = b.labels.iter().map(|&l| ring.name(l)).collect();
        out.line(format!("block {i}: unit {}, labels {}", ring.name(b.unit), labels.join(" ")));
        out.kv(&format!("block.{i}.unit"), ring.name(b.unit));
        out.kv(&format!("block.{i}.labels"), labels.join(","));
    }
    Ok(())
}

fn dim(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let ring = first_fusion(config)?;
    let engine = DimensionEngine::new(&ring)?;
    if config.inputs.len() > 1 {
        let specs = surfaces_input(config, 1)?;
        for s in &specs {
            let named = s.resolve(&ring).map_err(Failure)?;
            let d = engine.dim(&named.surface)?;
            out.line(format!("{}: {d}", s.name));
            out.kv(&format!("dim.{}", s.name), d);
        }
        return Ok(());
    }
    let spec = SurfaceSpec {
        name: "surface".into(),
        genus: config.genus.unwrap_or(0),
        boundary: config.boundary.clone(),
    };
    let named = spec.resolve(&ring).map_err(Failure)?;
    let d = engine.dim(&named.surface)?;
    out.line(d.to_string());
    out.kv("dim", d);
    Ok(())
}

fn surfaces_input(config: &RunConfig, index: usize) -> Result<Vec<SurfaceSpec>, Failure> {
    match input(config, index, "surfaces")? {
        Document::Surfaces(s) => Ok(s),
        other => Err(Failure(format!("expected a surfaces file, found {}", other.kind()))),
    }
}

fn invariant(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let a = first_algebra(config)?.frobenius()?;
    let findings: Vec<String> = a.validate().violations.iter().map(|v| v.describe(&a)).collect();
    if !findings.is_empty() {
        out.section("axioms", &findings, "");
        return Ok(());
    }
    match (config.genus, config.max_genus) {
        (Some(g), _) => {
            let z = a.genus_invariant(g)?;
            out.line(format_rational(&z));
            out.kv("invariant", format_rational(&z));
        }
        (None, m) => {
            for g in 0..=m.unwrap_or(DEFAULT_MAX_GENUS) {
                let z = format_rational(&a.genus_invariant(g)?);
                out.line(format!("genus {g}: {z}"));
                out.kv(&format!("invariant.genus{g}"), z);
            }
        }
    }
    Ok(())
}

fn eval_word(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let a = first_algebra(config)?.frobenius()?;
    let word = match input(config, 1, "word")? {
        Document::Word(w) => w,
        other => return Err(Failure(format!("expected a word file, found {}", other.kind()))),
    };
    let value = a.evaluate_word(&word)?;
    out.line(value.to_string());
    match &value {
        Evaluation::Scalar(x) => out.kv("value", format_rational(x)),
        Evaluation::Map(m) => {
            out.kv("inputs", m.inputs);
            out.kv("outputs", m.outputs);
            out.kv("value", m);
        }
    }
    Ok(())
}

/// The enumeration as concatenated fusion documents, each preceded by a
/// `# ring i of n` comment so every block parses on its own.
pub fn render_enumeration(rings: &[FusionRing]) -> String {
    let mut text = String::new();
    for (i, r) in rings.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        writeln!(text, "# ring {} of {}", i + 1, rings.len()).unwrap();
        text.push_str(&Document::Fusion(r.clone()).serialize());
    }
    text
}

fn enumerate(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let rings = enumerate_fusion_rings(config.rank, config.max_coeff)?;
    if config.machine {
        out.kv("count", rings.len());
        for (i, r) in rings.iter().enumerate() {
            let rules: Vec<String> = r
                .coefficients()
                .iter()
                .filter(|(_, &m)| m != 0)
                .map(|((a, b, c), m)| format!("{a} {b} {c} {m}"))
                .collect();
            out.kv(&format!("ring.{}.dual", i + 1), r.dual_table().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
            out.kv(&format!("ring.{}.rules", i + 1), rules.join("; "));
        }
    } else {
        out.text.push_str(&render_enumeration(&rings));
    }
    Ok(())
}

fn complete(config: &RunConfig, kind: Completion, out: &mut Out) -> Result<(), Failure> {
    let base = expect_category(input(config, 0, "category")?, &config.inputs[0])?;
    let findings: Vec<String> = base.validate().violations.iter().map(|v| v.describe(&base)).collect();
    if !findings.is_empty() {
        out.section("input", &findings, "");
        return Ok(());
    }
    let (category, title) = match kind {
        Completion::Mat => {
            let (c, _) = if config.with_zero {
                mat_completion_with_zero(&base, config.bound)?
            } else {
                mat_completion(&base, config.bound)?
            };
            (c, format!("matrix completion, sequences up to length {}", config.bound))
        }
        Completion::Karoubi => {
            if config.inputs.len() > 1 {
                let specs = match input(config, 1, "idempotents")? {
                    Document::Idempotents(s) => s,
                    other => return Err(Failure(format!("expected an idempotents file, found {}", other.kind()))),
                };
                let list = specs
                    .iter()
                    .map(|s| s.resolve(&base))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(Failure)?;
                let kc = karoubi_completion_from(&base, &list)?;
                (kc.category, format!("idempotent completion, {} listed idempotents", list.len()))
            } else {
                let grid = config.grid.clone().unwrap_or_else(default_grid);
                let kc = karoubi_completion(&base, &grid)?;
                let g: Vec<String> = grid.iter().map(format_rational).collect();
                (kc.category, format!("idempotent completion, grid {{{}}}", g.join(", ")))
            }
        }
    };
    let findings: Vec<String> = category
        .validate()
        .violations
        .iter()
        .map(|v| v.describe(&category))
        .collect();
    if config.machine {
        out.kv("objects", category.object_count());
        let total: usize = (0..category.object_count())
            .flat_map(|p| (0..category.object_count()).map(move |q| (p, q)))
            .map(|(p, q)| category.hom_dim(p, q))
            .sum();
        out.kv("hom_dim_total", total);
        out.section("axioms", &findings, "");
    } else {
        out.line(format!("# {title}: {} objects", category.object_count()));
        if findings.is_empty() {
            out.text.push_str(&Document::Category(category).serialize());
        } else {
            out.section("axioms", &findings, "");
        }
    }
    out.failed |= !findings.is_empty();
    Ok(())
}

fn check_separable(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let data = first_algebra(config)?;
    let a = data.algebra()?;
    let (semisimple, gram) = a.trace_form_semisimple();
    out.line(format!("trace form: {gram}"));
    out.line(format!("semisimple: {}", if semisimple { "yes" } else { "no" }));
    out.kv("trace_form", &gram);
    out.kv("semisimple", semisimple);
    out.failed |= !semisimple;
    if config.inputs.len() > 1 {
        let terms = match input(config, 1, "element")? {
            Document::Element(t) => t,
            other => return Err(Failure(format!("expected an element file, found {}", other.kind()))),
        };
        let e = ElementTerm::to_matrix(&terms, a.dim()).map_err(Failure)?;
        let findings: Vec<String> = a
            .verify_separability_idempotent(&e)
            .violations
            .iter()
            .map(|v| v.describe(&a))
            .collect();
        out.section("separability idempotent", &findings, "");
    }
    Ok(())
}

fn report(config: &RunConfig, out: &mut Out) -> Result<(), Failure> {
    let ring = first_fusion(config)?;
    let mut surfaces = Vec::new();
    let mut twists = None;
    for (i, path) in config.inputs.iter().enumerate().skip(1) {
        match load(path, config)? {
            Document::Surfaces(specs) => {
                for s in &specs {
                    surfaces.push(s.resolve(&ring).map_err(Failure)?);
                }
            }
            Document::Twists(t) => twists = Some(TwistSpec::resolve_all(&t, &ring).map_err(Failure)?),
            other => return Err(Failure(format!("input {}: cannot use a {} file in a report", i + 1, other.kind()))),
        }
    }
    let rep = modular_report(&ring, twists.as_ref(), &surfaces)?;
    if config.machine {
        out.text.push_str(&rep.render_machine());
    } else {
        out.text.push_str(&rep.render_text());
    }
    out.failed |= !rep.is_clean();
    Ok(())
}

#[cfg(test)]
mod tests;
