use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use super::{FrobeniusAlgebra, FrobeniusError};
use crate::exact::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Id,
    Swap,
    Mult,
    Comult,
    Unit,
    Counit,
    Cup,
    Cap,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Self::Id,
        Self::Swap,
        Self::Mult,
        Self::Comult,
        Self::Unit,
        Self::Counit,
        Self::Cup,
        Self::Cap,
    ];

    /// `(inputs, outputs)`.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Self::Id => (1, 1),
            Self::Swap => (2, 2),
            Self::Mult => (2, 1),
            Self::Comult => (1, 2),
            Self::Unit => (0, 1),
            Self::Counit => (1, 0),
            Self::Cup => (0, 2),
            Self::Cap => (2, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Id => "id",
            Self::Swap => "swap",
            Self::Mult => "mult",
            Self::Comult => "comult",
            Self::Unit => "unit",
            Self::Counit => "counit",
            Self::Cup => "cup",
            Self::Cap => "cap",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| WordError::UnknownGenerator(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("layer {layer} takes {expected} strands but {found} arrive")]
    Arity { layer: usize, expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] FrobeniusError),
}

/// Layers of generators read top to bottom; within a layer generators sit
/// side by side and consume consecutive strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CobordismWord {
    layers: Vec<Vec<Generator>>,
}

impl CobordismWord {
    pub fn new(layers: Vec<Vec<Generator>>) -> Self {
        Self { layers }
    }

    pub fn layers(&self) -> &[Vec<Generator>] {
        &self.layers
    }

    fn layer_arity(layer: &[Generator]) -> (usize, usize) {
        layer
            .iter()
            .fold((0, 0), |(i, o), g| (i + g.arity().0, o + g.arity().1))
    }

    /// `(inputs, outputs)` of the whole word, or the first layer (counted
    /// from 1) whose inputs do not match the strands arriving.
    pub fn arity(&self) -> Result<(usize, usize), WordError> {
        let Some(first) = self.layers.first() else {
            return Ok((0, 0));
        };
        let input = Self::layer_arity(first).0;
        let mut strands = input;
        for (t, layer) in self.layers.iter().enumerate() {
            let (i, o) = Self::layer_arity(layer);
            if i != strands {
                return Err(WordError::Arity {
                    layer: t + 1,
                    expected: i,
                    found: strands,
                });
            }
            strands = o;
        }
        Ok((input, strands))
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.arity(), Ok((0, 0)))
    }
}

impl fmt::Display for CobordismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for layer in &self.layers {
            let names: Vec<&str> = layer.iter().map(|g| g.name()).collect();
            writeln!(f, "{}", names.join(" "))?;
        }
        Ok(())
    }
}

/// `[unit; (comult; mult) x g; counit]`.
pub fn canonical_word(genus: u32) -> CobordismWord {
    let mut layers = vec![vec![Generator::Unit]];
    for _ in 0..genus {
        layers.push(vec![Generator::Comult]);
        layers.push(vec![Generator::Mult]);
    }
    layers.push(vec![Generator::Counit]);
    CobordismWord::new(layers)
}

/// Other presentations of the closed genus-`g` surface, by name. The
/// `swapped` word is only equal to the canonical one for commutative
/// algebras and is returned only when `commutative` is set.
pub fn alternative_words(genus: u32, commutative: bool) -> Vec<(String, CobordismWord)> {
    use Generator::*;
    let mut out = Vec::new();
    // handles created from cups and absorbed by multiplication
    let mut layers = Vec::new();
    if genus == 0 {
        layers.push(vec![Unit]);
    } else {
        layers.push(vec![Cup]);
        layers.push(vec![Mult]);
        for _ in 1..genus {
            layers.push(vec![Cup, Id]);
            layers.push(vec![Mult, Id]);
            layers.push(vec![Mult]);
        }
    }
    layers.push(vec![Counit]);
    out.push(("cups".to_string(), CobordismWord::new(layers)));

    // comultiply first, then multiply back from the right
    let mut layers = vec![vec![Unit]];
    for h in 0..genus {
        let mut comult = vec![Id; h as usize];
        comult.push(Comult);
        layers.push(comult);
    }
    for h in (0..genus).rev() {
        let mut mult = vec![Id; h as usize];
        mult.push(Mult);
        layers.push(mult);
    }
    layers.push(vec![Counit]);
    out.push(("nested".to_string(), CobordismWord::new(layers)));

    if genus == 1 {
        out.push(("cup-cap".to_string(), CobordismWord::new(vec![vec![Cup], vec![Cap]])));
    }
    if commutative {
        let mut layers = vec![vec![Unit]];
        for _ in 0..genus {
            layers.push(vec![Comult]);
            layers.push(vec![Swap]);
            layers.push(vec![Mult]);
        }
        layers.push(vec![Counit]);
        out.push(("swapped".to_string(), CobordismWord::new(layers)));
    }
    out
}

/// A linear map `V^(x inputs) -> V^(x outputs)`. Entry
/// `[out * dim^inputs + in]`, multi-indices read with the first strand
/// most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    pub dim: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub entries: Vec<Rational>,
}

impl MultilinearMap {
    pub fn entry(&self, out: usize, inp: usize) -> &Rational {
        &self.entries[out * self.dim.pow(self.inputs as u32) + inp]
    }

    pub fn identity(dim: usize, strands: usize) -> Self {
        let size = dim.pow(strands as u32);
        let entries = (0..size * size)
            .map(|x| {
                if x / size == x % size {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self {
            dim,
            inputs: strands,
            outputs: strands,
            entries,
        }
    }
}

impl fmt::Display for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.dim.pow(self.inputs as u32);
        let rows: Vec<String> = self
            .entries
            .chunks(cols.max(1))
            .map(|r| format!("[{}]", r.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Scalar(Rational),
    Map(MultilinearMap),
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Scalar(x) => f.write_str(&format_rational(x)),
            Self::Map(m) => m.fmt(f),
        }
    }
}

type State = BTreeMap<Vec<usize>, Rational>;

/// Generator tensors for one algebra, as sparse lists of outputs per input.
struct Tensors<'a> {
    alg: &'a FrobeniusAlgebra,
    copairing: Vec<(usize, usize, Rational)>,
    /// `comult[k]`: terms `(a, b, c)` of `Delta(e_k)`.
    comult: Vec<Vec<(usize, usize, Rational)>>,
}

impl<'a> Tensors<'a> {
    fn new(alg: &'a FrobeniusAlgebra) -> Result<Self, FrobeniusError> {
        let n = alg.dim();
        let ginv = alg.copairing()?;
        let mut copairing = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !ginv[(i, j)].is_zero() {
                    copairing.push((i, j, ginv[(i, j)].clone()));
                }
            }
        }
        // Delta = (id (x) mult) . (cup (x) id): Delta(e_k) = sum g^{aj} e_a (x) e_j e_k
        let c = alg.structure_constants();
        let comult = (0..n)
            .map(|k| {
                let mut terms = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        let v: Rational = (0..n).map(|j| &ginv[(a, j)] * &c[(j, k, b)]).sum();
                        if !v.is_zero() {
                            terms.push((a, b, v));
                        }
                    }
                }
                terms
            })
            .collect();
        Ok(Self {
            alg,
            copairing,
            comult,
        })
    }

    fn apply(&self, g: Generator, input: &[usize]) -> Vec<(Vec<usize>, Rational)> {
        let alg = self.alg;
        let n = alg.dim();
        match g {
            Generator::Id => vec![(input.to_vec(), Rational::one())],
            Generator::Swap => vec![(vec![input[1], input[0]], Rational::one())],
            Generator::Mult => (0..n)
                .filter_map(|k| {
                    let c = &alg.structure_constants()[(input[0], input[1], k)];
                    (!c.is_zero()).then(|| (vec![k], c.clone()))
                })
                .collect(),
            Generator::Comult => self.comult[input[0]]
                .iter()
                .map(|(a, b, v)| (vec![*a, *b], v.clone()))
                .collect(),
            Generator::Unit => alg
                .unit()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (vec![k], c.clone()))
                .collect(),
            Generator::Counit => {
                let c = &alg.counit()[input[0]];
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(Vec::new(), c.clone())]
                }
            }
            Generator::Cup => self
                .copairing
                .iter()
                .map(|(i, j, v)| (vec![*i, *j], v.clone()))
                .collect(),
            Generator::Cap => {
                let c = &alg.pairing()[(input[0], input[1])];
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(Vec::new(), c.clone())]
                }
            }
        }
    }

    fn apply_layer(&self, layer: &[Generator], state: &State) -> State {
        let mut next = State::new();
        for (indices, coeff) in state {
            // partial outputs built generator by generator
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), coeff.clone())];
            let mut pos = 0;
            for &g in layer {
                let (arity, _) = g.arity();
                let outs = self.apply(g, &indices[pos..pos + arity]);
                pos += arity;
                let mut grown = Vec::with_capacity(partial.len() * outs.len());
                for (prefix, c) in &partial {
                    for (o, v) in &outs {
                        let mut idx = prefix.clone();
                        idx.extend_from_slice(o);
                        grown.push((idx, c * v));
                    }
                }
                partial = grown;
                if partial.is_empty() {
                    break;
                }
            }
            for (idx, c) in partial {
                *next.entry(idx).or_insert_with(Rational::zero) += c;
            }
        }
        next.retain(|_, v| !v.is_zero());
        next
    }
}

fn multi_index(mut x: usize, dim: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = x % dim;
        x /= dim;
    }
    out
}

fn flat_index(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

impl FrobeniusAlgebra {
    /// The word as a linear map; closed words give a 1x1 map.
    pub fn evaluate_map(&self, word: &CobordismWord) -> Result<MultilinearMap, WordError> {
        let (inputs, outputs) = word.arity()?;
        let tensors = Tensors::new(self)?;
        let d = self.dim();
        let (cols, rows) = (d.pow(inputs as u32), d.pow(outputs as u32));
        let mut entries = vec![Rational::zero(); rows * cols];
        for col in 0..cols {
            let mut state = State::new();
            state.insert(multi_index(col, d, inputs), Rational::one());
            for layer in word.layers() {
                state = tensors.apply_layer(layer, &state);
            }
            for (idx, v) in state {
                entries[flat_index(&idx, d) * cols + col] = v;
            }
        }
        Ok(MultilinearMap {
            dim: d,
            inputs,
            outputs,
            entries,
        })
    }

    /// Closed words give a scalar, open words their linear map.
    pub fn evaluate_word(&self, word: &CobordismWord) -> Result<Evaluation, WordError> {
        let map = self.evaluate_map(word)?;
        if map.inputs == 0 && map.outputs == 0 {
            Ok(Evaluation::Scalar(map.entries[0].clone()))
        } else {
            Ok(Evaluation::Map(map))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use Generator::*;

    fn word(text: &str) -> CobordismWord {
        CobordismWord::new(
            text.split(';')
                .map(|l| l.split_whitespace().map(|g| g.parse().unwrap()).collect())
                .collect(),
        )
    }

    fn scalar(a: &FrobeniusAlgebra, w: &CobordismWord) -> Rational {
        match a.evaluate_word(w).unwrap() {
            Evaluation::Scalar(x) => x,
            other => panic!("open result {other}"),
        }
    }

    #[test]
    fn sphere_and_torus() {
        let k2 = FrobeniusAlgebra::diagonal(vec![q(1, 1), q(1, 1)]);
        let k3 = FrobeniusAlgebra::diagonal(vec![q(1, 3), q(2, 1), q(5, 1)]);
        assert_eq!(scalar(&k3, &word("unit; counit")), q(1, 3) + q(2, 1) + q(5, 1));
        assert_eq!(scalar(&k2, &word("unit; comult; mult; counit")), q(2, 1));
        assert_eq!(scalar(&k2, &word("unit; comult; swap; mult; counit")), q(2, 1));
        assert_eq!(scalar(&k3, &word("cup; cap")), q(3, 1));
    }

    #[test]
    fn arity_errors_name_the_layer() {
        assert_eq!(word("unit; mult; counit").arity(), Err(WordError::Arity {
            layer: 2,
            expected: 2,
            found: 1
        }));
        assert_eq!(word("cup; counit").arity(), Err(WordError::Arity {
            layer: 2,
            expected: 1,
            found: 2
        }));
        assert_eq!(word("id cup; cap id").arity(), Ok((1, 1)));
        assert_eq!("handle".parse::<Generator>(), Err(WordError::UnknownGenerator("handle".into())));
    }

    #[test]
    fn canonical_matches_genus_invariant() {
        let algs = [
            FrobeniusAlgebra::cyclic_group(2),
            FrobeniusAlgebra::cyclic_group(3),
            FrobeniusAlgebra::diagonal(vec![q(1, 2), q(-3, 1)]),
        ];
        for a in &algs {
            for g in 0..5 {
                let expected = a.genus_invariant(g).unwrap();
                assert_eq!(scalar(a, &canonical_word(g)), expected);
                for (name, w) in alternative_words(g, true) {
                    assert!(w.is_closed(), "{name}");
                    assert_eq!(scalar(a, &w), expected, "{name} genus {g}");
                }
            }
        }
    }

    #[test]
    fn open_words_are_maps() {
        let a = FrobeniusAlgebra::cyclic_group(3);
        let snake = a.evaluate_map(&word("id cup; cap id")).unwrap();
        assert_eq!(snake, MultilinearMap::identity(3, 1));
        let swap = a.evaluate_map(&word("swap")).unwrap();
        // e_0 (x) e_1 -> e_1 (x) e_0
        assert_eq!(swap.entry(3, 1), &q(1, 1));
        assert_eq!(swap.entry(1, 1), &q(0, 1));
        assert_eq!(
            a.evaluate_word(&word("mult")).unwrap().to_string(),
            "[[1, 0, 0, 0, 0, 1, 0, 1, 0], [0, 1, 0, 1, 0, 0, 0, 0, 1], [0, 0, 1, 0, 1, 0, 1, 0, 0]]"
        );
    }

    #[test]
    fn display_round_trips_layers() {
        let w = CobordismWord::new(vec![vec![Cup, Id], vec![Mult, Id], vec![Mult]]);
        assert_eq!(w.to_string(), "cup id\nmult id\nmult\n");
        assert_eq!(word("cup id; mult id; mult"), w);
    }
}
