//! Line-oriented text formats for every input the tools read, with
//! canonical serializers: `serialize(parse(text)) == text` whenever `text`
//! is itself serializer output.
//!
//! All formats ignore blank lines and `#` comments and reject unknown
//! directives. Errors carry a 1-based line and column.

mod category;
mod formats;

use std::fmt;
use std::path::Path;

use crate::exact::{parse_rational, Rational};
use crate::fusion::FusionRing;
use crate::lincat::PresentedCategory;
use crate::tqft::CobordismWord;

pub use category::IdempotentSpec;
pub use formats::{AlgebraData, ElementTerm, SurfaceSpec, TwistSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Fusion,
    Algebra,
    Category,
    Surfaces,
    Twists,
    Word,
    /// Coefficients of an element of `A (x) A`, for separability checks.
    Element,
    Idempotents,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Fusion,
        Kind::Algebra,
        Kind::Category,
        Kind::Surfaces,
        Kind::Twists,
        Kind::Word,
        Kind::Element,
        Kind::Idempotents,
    ];

    pub fn extension(self) -> &'static str {
        match self {
            Kind::Fusion => "fusion",
            Kind::Algebra => "algebra",
            Kind::Category => "category",
            Kind::Surfaces => "surfaces",
            Kind::Twists => "twists",
            Kind::Word => "word",
            Kind::Element => "element",
            Kind::Idempotents => "idempotents",
        }
    }

    pub fn from_path(path: &Path) -> Option<Kind> {
        let ext = path.extension()?.to_str()?;
        Self::ALL.into_iter().find(|k| k.extension() == ext)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(token: &Token<'_>, message: impl Into<String>) -> Self {
        Self {
            line: token.line,
            column: token.column,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column: 1,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Fusion(FusionRing),
    Algebra(AlgebraData),
    Category(PresentedCategory),
    Surfaces(Vec<SurfaceSpec>),
    Twists(Vec<TwistSpec>),
    Word(CobordismWord),
    Element(Vec<ElementTerm>),
    Idempotents(Vec<IdempotentSpec>),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Fusion(_) => Kind::Fusion,
            Document::Algebra(_) => Kind::Algebra,
            Document::Category(_) => Kind::Category,
            Document::Surfaces(_) => Kind::Surfaces,
            Document::Twists(_) => Kind::Twists,
            Document::Word(_) => Kind::Word,
            Document::Element(_) => Kind::Element,
            Document::Idempotents(_) => Kind::Idempotents,
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            Document::Fusion(r) => formats::write_fusion(r),
            Document::Algebra(a) => formats::write_algebra(a),
            Document::Category(c) => category::write_category(c),
            Document::Surfaces(s) => formats::write_surfaces(s),
            Document::Twists(t) => formats::write_twists(t),
            Document::Word(w) => w.to_string(),
            Document::Element(e) => formats::write_element(e),
            Document::Idempotents(i) => category::write_idempotents(i),
        }
    }
}

pub fn parse(kind: Kind, text: &str) -> Result<Document, ParseError> {
    let lines = tokenize(text);
    let end = text.lines().count() + 1;
    Ok(match kind {
        Kind::Fusion => Document::Fusion(formats::read_fusion(&lines, end)?),
        Kind::Algebra => Document::Algebra(formats::read_algebra(&lines, end)?),
        Kind::Category => Document::Category(category::read_category(&lines, end)?),
        Kind::Surfaces => Document::Surfaces(formats::read_surfaces(&lines)?),
        Kind::Twists => Document::Twists(formats::read_twists(&lines)?),
        Kind::Word => Document::Word(formats::read_word(&lines, end)?),
        Kind::Element => Document::Element(formats::read_element(&lines)?),
        Kind::Idempotents => Document::Idempotents(category::read_idempotents(&lines)?),
    })
}

/// Shorthands that parse and unwrap one kind.
pub fn parse_fusion(text: &str) -> Result<FusionRing, ParseError> {
    match parse(Kind::Fusion, text)? {
        Document::Fusion(r) => Ok(r),
        _ => unreachable!(),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraData, ParseError> {
    match parse(Kind::Algebra, text)? {
        Document::Algebra(a) => Ok(a),
        _ => unreachable!(),
    }
}

pub fn parse_category(text: &str) -> Result<PresentedCategory, ParseError> {
    match parse(Kind::Category, text)? {
        Document::Category(c) => Ok(c),
        _ => unreachable!(),
    }
}

pub fn parse_word(text: &str) -> Result<CobordismWord, ParseError> {
    match parse(Kind::Word, text)? {
        Document::Word(w) => Ok(w),
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl<'a> Token<'a> {
    pub(crate) fn usize(&self, what: &str) -> Result<usize, ParseError> {
        self.text
            .parse()
            .map_err(|_| ParseError::at(self, format!("expected {what}, found '{}'", self.text)))
    }

    pub(crate) fn rational(&self) -> Result<Rational, ParseError> {
        parse_rational(self.text)
            .ok_or_else(|| ParseError::at(self, format!("expected a rational p/q, found '{}'", self.text)))
    }
}

/// Non-empty lines as tokens, comments removed.
pub(crate) fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: &content[s..pos],
                        line: i + 1,
                        column: content[..s].chars().count() + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

/// Requires exactly `n` tokens after the directive.
pub(crate) fn expect_args<'a>(line: &'a [Token<'a>], n: usize) -> Result<&'a [Token<'a>], ParseError> {
    let args = &line[1..];
    if args.len() != n {
        let at = args.get(n).unwrap_or(&line[0]);
        return Err(ParseError::at(
            at,
            format!("'{}' takes {n} arguments, found {}", line[0].text, args.len()),
        ));
    }
    Ok(args)
}

pub(crate) fn unknown_directive(token: &Token<'_>) -> ParseError {
    ParseError::at(token, format!("unknown directive '{}'", token.text))
}

#[cfg(test)]
mod tests;
