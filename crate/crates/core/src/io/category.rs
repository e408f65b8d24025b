use std::collections::HashMap;
use std::fmt::Write;

use num_traits::Zero;

use super::{expect_args, unknown_directive, ParseError, Token};
use crate::exact::{format_rational, Rational};
use crate::lincat::{CategoryBuilder, Expr, LoadError, ObjectId, PresentedCategory};

/// Reads `c*name + c*name ...`, `name` (coefficient 1) or `0`.
fn read_expr(tokens: &[Token<'_>], anchor: &Token<'_>) -> Result<Vec<(Rational, String, usize)>, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::at(anchor, "missing expression after '='"));
    }
    if tokens.len() == 1 && tokens[0].text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (i, tok) in tokens.iter().enumerate() {
        if i % 2 == 1 {
            if tok.text != "+" {
                return Err(ParseError::at(tok, format!("expected '+', found '{}'", tok.text)));
            }
            continue;
        }
        let (coeff, name) = match tok
            .text
            .split_once('*')
            .and_then(|(c, n)| crate::exact::parse_rational(c).map(|c| (c, n)))
        {
            Some(pair) => pair,
            None => (Rational::from_integer(1.into()), tok.text),
        };
        if name.is_empty() {
            return Err(ParseError::at(tok, "missing basis name"));
        }
        out.push((coeff, name.to_string(), i));
    }
    if tokens.len() % 2 == 0 {
        return Err(ParseError::at(tokens.last().unwrap(), "expression ends with '+'"));
    }
    Ok(out)
}

fn split_at_equals<'a>(line: &'a [Token<'a>], before: usize) -> Result<(&'a [Token<'a>], &'a [Token<'a>]), ParseError> {
    let head = &line[0];
    if line.len() < before + 2 || line[before + 1].text != "=" {
        let at = line.get(before + 1).unwrap_or(line.last().unwrap());
        return Err(ParseError::at(
            at,
            format!("expected '{}' followed by {before} names and '='", head.text),
        ));
    }
    Ok((&line[1..=before], &line[before + 2..]))
}

pub(crate) fn read_category(lines: &[Vec<Token<'_>>], end: usize) -> Result<PresentedCategory, ParseError> {
    let mut b = CategoryBuilder::new();
    let mut objects: HashMap<String, usize> = HashMap::new();
    let mut basis: HashMap<String, (ObjectId, ObjectId)> = HashMap::new();
    let mut object_lines: Vec<usize> = Vec::new();
    for line in lines {
        let head = &line[0];
        match head.text {
            "object" => {
                let args = expect_args(line, 1)?;
                let id = b
                    .object(args[0].text)
                    .map_err(|e| ParseError::at(&args[0], e.to_string()))?;
                objects.insert(args[0].text.to_string(), id);
                object_lines.push(head.line);
            }
            "hom" => {
                let args = expect_args(line, 3)?;
                let mut ids = [0; 2];
                for (slot, tok) in ids.iter_mut().zip(&args[..2]) {
                    *slot = *objects
                        .get(tok.text)
                        .ok_or_else(|| ParseError::at(tok, format!("unknown object '{}'", tok.text)))?;
                }
                b.hom(args[0].text, args[1].text, args[2].text)
                    .map_err(|e| ParseError::at(&args[2], e.to_string()))?;
                basis.insert(args[2].text.to_string(), (ids[0], ids[1]));
            }
            "compose" => {
                let (names, rhs) = split_at_equals(line, 2)?;
                let lookup = |t: &Token<'_>| {
                    basis
                        .get(t.text)
                        .copied()
                        .ok_or_else(|| ParseError::at(t, format!("unknown basis element '{}'", t.text)))
                };
                let ((q, r), (p, q2)) = (lookup(&names[0])?, lookup(&names[1])?);
                if q != q2 {
                    return Err(ParseError::at(
                        &names[0],
                        format!("cannot compose '{}' after '{}'", names[0].text, names[1].text),
                    ));
                }
                let terms = read_expr(rhs, &line[3])?;
                for (_, name, i) in &terms {
                    let known = basis
                        .get(name)
                        .ok_or_else(|| ParseError::at(&rhs[*i], format!("unknown basis element '{name}'")))?;
                    if *known != (p, r) {
                        return Err(ParseError::at(&rhs[*i], format!("'{name}' is not in the hom of the composite")));
                    }
                }
                let expr: Expr = terms.into_iter().map(|(c, n, _)| (c, n)).collect();
                b.compose(names[0].text, names[1].text, expr)
                    .map_err(|e| ParseError::at(head, e.to_string()))?;
            }
            "identity" => {
                let (names, rhs) = split_at_equals(line, 1)?;
                let p = *objects
                    .get(names[0].text)
                    .ok_or_else(|| ParseError::at(&names[0], format!("unknown object '{}'", names[0].text)))?;
                let terms = read_expr(rhs, &line[2])?;
                for (name, i) in terms.iter().map(|(_, n, i)| (n, *i)) {
                    if basis.get(name) != Some(&(p, p)) {
                        return Err(ParseError::at(&rhs[i], format!("'{name}' is not an endomorphism of '{}'", names[0].text)));
                    }
                }
                b.identity(names[0].text, terms.into_iter().map(|(c, n, _)| (c, n)).collect())
                    .map_err(|e| ParseError::at(head, e.to_string()))?;
            }
            _ => return Err(unknown_directive(head)),
        }
    }
    b.build().map_err(|e| match &e {
        LoadError::MissingIdentity(name) => {
            let line = objects.get(name).map(|&i| object_lines[i]).unwrap_or(end);
            ParseError::at_line(line, e.to_string())
        }
        _ => ParseError::at_line(end, e.to_string()),
    })
}

fn write_expr(out: &mut String, names: &[String], v: &[Rational]) {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{}*{}", format_rational(c), names[i]))
        .collect();
    if terms.is_empty() {
        out.push('0');
    } else {
        out.push_str(&terms.join(" + "));
    }
}

pub(crate) fn write_category(c: &PresentedCategory) -> String {
    let n = c.object_count();
    let mut out = String::new();
    for name in c.object_names() {
        writeln!(out, "object {name}").unwrap();
    }
    for p in 0..n {
        for q in 0..n {
            for b in c.hom_basis(p, q) {
                writeln!(out, "hom {} {} {b}", c.object_name(p), c.object_name(q)).unwrap();
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for g in 0..c.hom_dim(q, r) {
                    for f in 0..c.hom_dim(p, q) {
                        let v = c.compose_basis(p, q, r, g, f);
                        if v.iter().all(Zero::is_zero) {
                            continue;
                        }
                        write!(out, "compose {} {} = ", c.hom_basis(q, r)[g], c.hom_basis(p, q)[f]).unwrap();
                        write_expr(&mut out, c.hom_basis(p, r), v);
                        out.push('\n');
                    }
                }
            }
        }
    }
    for p in 0..n {
        write!(out, "identity {} = ", c.object_name(p)).unwrap();
        write_expr(&mut out, c.hom_basis(p, p), c.identity(p));
        out.push('\n');
    }
    out
}

/// `idempotent <object> = <expr>`, resolved against a category later.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSpec {
    pub object: String,
    pub terms: Expr,
}

impl IdempotentSpec {
    pub fn resolve(&self, c: &PresentedCategory) -> Result<(ObjectId, Vec<Rational>), String> {
        let p = c
            .object_by_name(&self.object)
            .ok_or_else(|| format!("unknown object '{}'", self.object))?;
        let mut v = c.zero(p, p);
        for (coeff, name) in &self.terms {
            let i = c
                .hom_basis(p, p)
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| format!("'{name}' is not an endomorphism of '{}'", self.object))?;
            v[i] += coeff;
        }
        Ok((p, v))
    }
}

pub(crate) fn read_idempotents(lines: &[Vec<Token<'_>>]) -> Result<Vec<IdempotentSpec>, ParseError> {
    let mut out = Vec::new();
    for line in lines {
        let head = &line[0];
        if head.text != "idempotent" {
            return Err(unknown_directive(head));
        }
        let (names, rhs) = split_at_equals(line, 1)?;
        let terms = read_expr(rhs, &line[2])?;
        out.push(IdempotentSpec {
            object: names[0].text.to_string(),
            terms: terms.into_iter().map(|(c, n, _)| (c, n)).collect(),
        });
    }
    Ok(out)
}

pub(crate) fn write_idempotents(specs: &[IdempotentSpec]) -> String {
    let mut out = String::new();
    for s in specs {
        write!(out, "idempotent {} = ", s.object).unwrap();
        if s.terms.is_empty() {
            out.push('0');
        } else {
            let terms: Vec<String> = s.terms.iter().map(|(c, n)| format!("{}*{n}", format_rational(c))).collect();
            out.push_str(&terms.join(" + "));
        }
        out.push('\n');
    }
    out
}
