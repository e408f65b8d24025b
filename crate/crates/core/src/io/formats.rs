use std::collections::{BTreeMap, HashSet};
use std::fmt::Write;

use num_traits::Zero;

use super::{expect_args, unknown_directive, ParseError, Token};
use crate::exact::{format_rational, Matrix, Rational, Tensor3};
use crate::fusion::{FusionRing, Label};
use crate::lincat::{Algebra, AlgebraError};
use crate::modular::{ColouredSurface, NamedSurface, TwistData, TwistValue};
use crate::tqft::{CobordismWord, FrobeniusAlgebra, FrobeniusError, Generator};

fn rank_bound(token: &Token<'_>, value: usize, rank: usize) -> Result<usize, ParseError> {
    if value >= rank {
        Err(ParseError::at(token, format!("index {value} out of range for rank {rank}")))
    } else {
        Ok(value)
    }
}

pub(crate) fn read_fusion(lines: &[Vec<Token<'_>>], end: usize) -> Result<FusionRing, ParseError> {
    let Some(first) = lines.first() else {
        return Err(ParseError::at_line(1, "missing rank"));
    };
    if first[0].text != "rank" {
        return Err(ParseError::at(&first[0], "missing rank"));
    }
    let rank = expect_args(first, 1)?[0].usize("a rank")?;
    if rank == 0 {
        return Err(ParseError::at(&first[1], "rank must be positive"));
    }
    let mut names: Vec<Option<String>> = vec![None; rank];
    let mut dual: Vec<Option<Label>> = vec![None; rank];
    let mut unit: Option<Vec<Label>> = None;
    let mut coeffs = Tensor3::filled((rank, rank, rank), 0u32);
    let mut seen = HashSet::new();
    for line in &lines[1..] {
        let head = &line[0];
        match head.text {
            "rank" => return Err(ParseError::at(head, "rank given twice")),
            "label" => {
                let args = expect_args(line, 2)?;
                let i = rank_bound(&args[0], args[0].usize("a label index")?, rank)?;
                if names[i].is_some() {
                    return Err(ParseError::at(&args[0], format!("label {i} named twice")));
                }
                if names.iter().flatten().any(|n| n == args[1].text) {
                    return Err(ParseError::at(&args[1], format!("duplicate label name '{}'", args[1].text)));
                }
                names[i] = Some(args[1].text.to_string());
            }
            "dual" => {
                let args = expect_args(line, 2)?;
                let i = rank_bound(&args[0], args[0].usize("a label index")?, rank)?;
                let j = rank_bound(&args[1], args[1].usize("a label index")?, rank)?;
                for (tok, x) in [(&args[0], i), (&args[1], j)] {
                    if dual[x].is_some() {
                        return Err(ParseError::at(tok, format!("duplicate dual entry for {x}")));
                    }
                }
                dual[i] = Some(j);
                dual[j] = Some(i);
            }
            "unit" => {
                if unit.is_some() {
                    return Err(ParseError::at(head, "unit given twice"));
                }
                if line.len() < 2 {
                    return Err(ParseError::at(head, "unit needs at least one label"));
                }
                let mut us = Vec::new();
                for tok in &line[1..] {
                    let u = rank_bound(tok, tok.usize("a label index")?, rank)?;
                    if us.contains(&u) {
                        return Err(ParseError::at(tok, format!("unit component {u} listed twice")));
                    }
                    us.push(u);
                }
                unit = Some(us);
            }
            "N" => {
                let args = expect_args(line, 4)?;
                let mut idx = [0usize; 3];
                for (slot, tok) in idx.iter_mut().zip(args) {
                    *slot = rank_bound(tok, tok.usize("a label index")?, rank)?;
                }
                let m: i64 = args[3]
                    .text
                    .parse()
                    .map_err(|_| ParseError::at(&args[3], format!("expected an integer, found '{}'", args[3].text)))?;
                if m < 0 {
                    return Err(ParseError::at(&args[3], "negative coefficient"));
                }
                let m = u32::try_from(m).map_err(|_| ParseError::at(&args[3], "coefficient too large"))?;
                if !seen.insert(idx) {
                    return Err(ParseError::at(head, format!("duplicate coefficient N {} {} {}", idx[0], idx[1], idx[2])));
                }
                coeffs[(idx[0], idx[1], idx[2])] = m;
            }
            _ => return Err(unknown_directive(head)),
        }
    }
    let unit = unit.ok_or_else(|| ParseError::at_line(end, "missing unit"))?;
    let names = names
        .into_iter()
        .enumerate()
        .map(|(i, n)| n.unwrap_or_else(|| i.to_string()))
        .collect();
    let dual = dual.into_iter().enumerate().map(|(i, d)| d.unwrap_or(i)).collect();
    FusionRing::new(names, dual, unit, coeffs).map_err(|e| ParseError::at_line(end, e.to_string()))
}

pub(crate) fn write_fusion(r: &FusionRing) -> String {
    let mut out = String::new();
    let n = r.rank();
    writeln!(out, "rank {n}").unwrap();
    for i in 0..n {
        writeln!(out, "label {i} {}", r.name(i)).unwrap();
    }
    for i in 0..n {
        let d = r.dual(i);
        if i < d {
            writeln!(out, "dual {i} {d}").unwrap();
        }
    }
    let units: Vec<String> = r.unit_components().iter().map(|u| u.to_string()).collect();
    writeln!(out, "unit {}", units.join(" ")).unwrap();
    for ((a, b, c), &m) in r.coefficients().iter() {
        if m != 0 {
            writeln!(out, "N {a} {b} {c} {m}").unwrap();
        }
    }
    out
}

/// An algebra as read from a file; the counit is optional so the same
/// format serves plain algebras and Frobenius algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub names: Vec<String>,
    pub mult: Tensor3<Rational>,
    pub unit: Vec<Rational>,
    pub counit: Option<Vec<Rational>>,
}

impl AlgebraData {
    pub fn from_frobenius(a: &FrobeniusAlgebra) -> Self {
        Self {
            names: a.names().to_vec(),
            mult: a.structure_constants().clone(),
            unit: a.unit().to_vec(),
            counit: Some(a.counit().to_vec()),
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        Self {
            names: a.names().to_vec(),
            mult: a.structure_constants().clone(),
            unit: a.unit().to_vec(),
            counit: None,
        }
    }

    pub fn algebra(&self) -> Result<Algebra, AlgebraError> {
        Algebra::new(self.names.clone(), self.mult.clone(), self.unit.clone())
    }

    /// Requires a counit.
    pub fn frobenius(&self) -> Result<FrobeniusAlgebra, FrobeniusError> {
        let counit = self.counit.clone().ok_or(FrobeniusError::Shape {
            what: "counit",
            dim: self.names.len(),
        })?;
        FrobeniusAlgebra::new(self.names.clone(), self.mult.clone(), self.unit.clone(), counit)
    }
}

pub(crate) fn read_algebra(lines: &[Vec<Token<'_>>], end: usize) -> Result<AlgebraData, ParseError> {
    let Some(first) = lines.first() else {
        return Err(ParseError::at_line(1, "missing dim"));
    };
    if first[0].text != "dim" {
        return Err(ParseError::at(&first[0], "missing dim"));
    }
    let n = expect_args(first, 1)?[0].usize("a dimension")?;
    if n == 0 {
        return Err(ParseError::at(&first[1], "dimension must be positive"));
    }
    let mut names: Vec<Option<String>> = vec![None; n];
    let mut mult = Tensor3::filled((n, n, n), Rational::zero());
    let mut unit: Option<Vec<Rational>> = None;
    let mut counit: Option<Vec<Rational>> = None;
    let mut seen = HashSet::new();
    for line in &lines[1..] {
        let head = &line[0];
        match head.text {
            "dim" => return Err(ParseError::at(head, "dim given twice")),
            "basis" => {
                let args = expect_args(line, 2)?;
                let i = rank_bound(&args[0], args[0].usize("a basis index")?, n)?;
                if names[i].is_some() {
                    return Err(ParseError::at(&args[0], format!("basis element {i} named twice")));
                }
                if names.iter().flatten().any(|x| x == args[1].text) {
                    return Err(ParseError::at(&args[1], format!("duplicate basis name '{}'", args[1].text)));
                }
                names[i] = Some(args[1].text.to_string());
            }
            "mult" => {
                let args = expect_args(line, 4)?;
                let mut idx = [0usize; 3];
                for (slot, tok) in idx.iter_mut().zip(args) {
                    *slot = rank_bound(tok, tok.usize("a basis index")?, n)?;
                }
                if !seen.insert(idx) {
                    return Err(ParseError::at(head, format!("duplicate mult {} {} {}", idx[0], idx[1], idx[2])));
                }
                mult[(idx[0], idx[1], idx[2])] = args[3].rational()?;
            }
            "unit" | "counit" => {
                let args = expect_args(line, 2)?;
                let i = rank_bound(&args[0], args[0].usize("a basis index")?, n)?;
                let slot = if head.text == "unit" { &mut unit } else { &mut counit };
                let v = slot.get_or_insert_with(|| vec![Rational::zero(); n]);
                v[i] += args[1].rational()?;
            }
            _ => return Err(unknown_directive(head)),
        }
    }
    let unit = unit.ok_or_else(|| ParseError::at_line(end, "missing unit"))?;
    let names = names
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.unwrap_or_else(|| format!("e{i}")))
        .collect();
    Ok(AlgebraData {
        names,
        mult,
        unit,
        counit,
    })
}

fn write_vector(out: &mut String, directive: &str, v: &[Rational]) {
    let mut any = false;
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            writeln!(out, "{directive} {i} {}", format_rational(c)).unwrap();
            any = true;
        }
    }
    if !any {
        writeln!(out, "{directive} 0 0").unwrap();
    }
}

pub(crate) fn write_algebra(a: &AlgebraData) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", a.names.len()).unwrap();
    for (i, name) in a.names.iter().enumerate() {
        writeln!(out, "basis {i} {name}").unwrap();
    }
    for ((i, j, k), c) in a.mult.iter() {
        if !c.is_zero() {
            writeln!(out, "mult {i} {j} {k} {}", format_rational(c)).unwrap();
        }
    }
    write_vector(&mut out, "unit", &a.unit);
    if let Some(counit) = &a.counit {
        write_vector(&mut out, "counit", counit);
    }
    out
}

/// A surface with boundary labels not yet resolved against a ring; labels
/// may be names or indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub name: String,
    pub genus: u32,
    pub boundary: Vec<String>,
}

fn resolve_label(ring: &FusionRing, label: &str) -> Result<Label, String> {
    ring.label_by_name(label)
        .or_else(|| label.parse().ok().filter(|&i: &usize| i < ring.rank()))
        .ok_or_else(|| format!("unknown label '{label}'"))
}

impl SurfaceSpec {
    pub fn resolve(&self, ring: &FusionRing) -> Result<NamedSurface, String> {
        let boundary = self
            .boundary
            .iter()
            .map(|l| resolve_label(ring, l))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("surface {}: {e}", self.name))?;
        Ok(NamedSurface {
            name: self.name.clone(),
            surface: ColouredSurface::new(self.genus, boundary),
        })
    }
}

pub(crate) fn read_surfaces(lines: &[Vec<Token<'_>>]) -> Result<Vec<SurfaceSpec>, ParseError> {
    let mut out: Vec<SurfaceSpec> = Vec::new();
    for line in lines {
        let head = &line[0];
        if head.text != "surface" {
            return Err(unknown_directive(head));
        }
        let shape = "expected 'surface <name>: genus <g> boundary <labels...>'";
        if line.len() < 5 {
            return Err(ParseError::at(line.last().unwrap(), shape));
        }
        let Some(name) = line[1].text.strip_suffix(':').filter(|n| !n.is_empty()) else {
            return Err(ParseError::at(&line[1], "surface name must end with ':'"));
        };
        if line[2].text != "genus" {
            return Err(ParseError::at(&line[2], shape));
        }
        let genus = line[3]
            .text
            .parse()
            .map_err(|_| ParseError::at(&line[3], format!("expected a genus, found '{}'", line[3].text)))?;
        if line[4].text != "boundary" {
            return Err(ParseError::at(&line[4], shape));
        }
        if out.iter().any(|s| s.name == name) {
            return Err(ParseError::at(&line[1], format!("duplicate surface '{name}'")));
        }
        out.push(SurfaceSpec {
            name: name.to_string(),
            genus,
            boundary: line[5..].iter().map(|t| t.text.to_string()).collect(),
        });
    }
    Ok(out)
}

pub(crate) fn write_surfaces(s: &[SurfaceSpec]) -> String {
    let mut out = String::new();
    for spec in s {
        write!(out, "surface {}: genus {} boundary", spec.name, spec.genus).unwrap();
        for l in &spec.boundary {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpec {
    pub label: String,
    pub value: TwistValue,
}

impl TwistSpec {
    pub fn resolve_all(specs: &[TwistSpec], ring: &FusionRing) -> Result<TwistData, String> {
        let mut data = TwistData::default();
        for s in specs {
            data.set(resolve_label(ring, &s.label)?, s.value.clone());
        }
        Ok(data)
    }
}

fn parse_twist_value(tok: &Token<'_>) -> Result<TwistValue, ParseError> {
    if let Some(inner) = tok.text.strip_prefix("zeta(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(',').collect();
        let bad = || ParseError::at(tok, format!("expected zeta(<order>,<exponent>), found '{}'", tok.text));
        if parts.len() != 2 {
            return Err(bad());
        }
        let order = parts[0].trim().parse().map_err(|_| bad())?;
        let exponent = parts[1].trim().parse().map_err(|_| bad())?;
        return TwistValue::root_of_unity(order, exponent).map_err(|e| ParseError::at(tok, e.to_string()));
    }
    TwistValue::rational(tok.rational()?).map_err(|e| ParseError::at(tok, e.to_string()))
}

pub(crate) fn read_twists(lines: &[Vec<Token<'_>>]) -> Result<Vec<TwistSpec>, ParseError> {
    let mut out: Vec<TwistSpec> = Vec::new();
    for line in lines {
        let head = &line[0];
        if head.text != "twist" {
            return Err(unknown_directive(head));
        }
        let args = expect_args(line, 3)?;
        if args[1].text != "=" {
            return Err(ParseError::at(&args[1], "expected '='"));
        }
        if out.iter().any(|t| t.label == args[0].text) {
            return Err(ParseError::at(&args[0], format!("twist of '{}' given twice", args[0].text)));
        }
        out.push(TwistSpec {
            label: args[0].text.to_string(),
            value: parse_twist_value(&args[2])?,
        });
    }
    Ok(out)
}

pub(crate) fn write_twists(t: &[TwistSpec]) -> String {
    t.iter().map(|s| format!("twist {} = {}\n", s.label, s.value)).collect()
}

pub(crate) fn read_word(lines: &[Vec<Token<'_>>], end: usize) -> Result<CobordismWord, ParseError> {
    if lines.is_empty() {
        return Err(ParseError::at_line(end.max(1), "empty word"));
    }
    let layers = lines
        .iter()
        .map(|line| {
            line.iter()
                .map(|t| t.text.parse::<Generator>().map_err(|e| ParseError::at(t, e.to_string())))
                .collect()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CobordismWord::new(layers))
}

/// Coefficient of `e_left (x) e_right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementTerm {
    pub left: usize,
    pub right: usize,
    pub coefficient: Rational,
}

impl ElementTerm {
    /// Coefficient matrix for an algebra of dimension `n`.
    pub fn to_matrix(terms: &[ElementTerm], n: usize) -> Result<Matrix, String> {
        let mut m = vec![Rational::zero(); n * n];
        for t in terms {
            if t.left >= n || t.right >= n {
                return Err(format!("term {} {} out of range for dimension {n}", t.left, t.right));
            }
            m[t.left * n + t.right] += &t.coefficient;
        }
        Ok(Matrix::new(n, n, m).expect("square"))
    }
}

pub(crate) fn read_element(lines: &[Vec<Token<'_>>]) -> Result<Vec<ElementTerm>, ParseError> {
    let mut out: Vec<ElementTerm> = Vec::new();
    for line in lines {
        let head = &line[0];
        if head.text != "term" {
            return Err(unknown_directive(head));
        }
        let args = expect_args(line, 3)?;
        let (left, right) = (args[0].usize("a basis index")?, args[1].usize("a basis index")?);
        if out.iter().any(|t| (t.left, t.right) == (left, right)) {
            return Err(ParseError::at(head, format!("duplicate term {left} {right}")));
        }
        out.push(ElementTerm {
            left,
            right,
            coefficient: args[2].rational()?,
        });
    }
    Ok(out)
}

pub(crate) fn write_element(terms: &[ElementTerm]) -> String {
    let sorted: BTreeMap<(usize, usize), &Rational> = terms.iter().map(|t| ((t.left, t.right), &t.coefficient)).collect();
    sorted
        .into_iter()
        .map(|((l, r), c)| format!("term {l} {r} {}\n", format_rational(c)))
        .collect()
}
