use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::word::{alternative_words, canonical_word, CobordismWord, Evaluation, Generator, MultilinearMap};
use super::{FrobeniusAlgebra, FrobeniusError};
use crate::exact::{format_rational, q, Matrix, Rational};

/// A random invertible matrix with entries `a/b`, `|a| <= 3`, `1 <= b <= 3`.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let entries = (0..n * n)
            .map(|_| q(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
            .collect();
        let m = Matrix::new(n, n, entries).expect("square");
        if m.rank() == n {
            return m;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvarianceViolation {
    BasisChange {
        trial: usize,
        genus: u32,
        expected: Rational,
        found: Rational,
    },
    WordPresentation {
        genus: u32,
        word: String,
        expected: Rational,
        found: Rational,
    },
    /// Evaluation itself failed, e.g. the pairing went singular.
    Evaluation { genus: u32, word: String, error: String },
}

impl std::fmt::Display for InvarianceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::BasisChange {
                trial,
                genus,
                expected,
                found,
            } => write!(
                f,
                "basis change {trial}: genus {genus} gives {} instead of {}",
                format_rational(found),
                format_rational(expected)
            ),
            Self::WordPresentation {
                genus,
                word,
                expected,
                found,
            } => write!(
                f,
                "genus {genus} word '{word}' gives {} instead of {}",
                format_rational(found),
                format_rational(expected)
            ),
            Self::Evaluation { genus, word, error } => write!(f, "genus {genus} word '{word}': {error}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvarianceReport {
    /// Genus invariants of the algebra as given, from genus 0.
    pub invariants: Vec<Rational>,
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_commutative(a: &FrobeniusAlgebra) -> bool {
    let c = a.structure_constants();
    let n = a.dim();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| c[(i, j, k)] == c[(j, i, k)])))
}

fn closed_value(a: &FrobeniusAlgebra, w: &CobordismWord) -> Result<Rational, String> {
    match a.evaluate_word(w) {
        Ok(Evaluation::Scalar(x)) => Ok(x),
        Ok(Evaluation::Map(_)) => Err("word is not closed".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Compares genus invariants up to `max_genus` across `trials` seeded
/// random basis changes, and across several words per genus.
pub fn invariance_suite(
    a: &FrobeniusAlgebra,
    trials: usize,
    max_genus: u32,
    seed: u64,
) -> Result<InvarianceReport, FrobeniusError> {
    let invariants = (0..=max_genus)
        .map(|g| a.genus_invariant(g))
        .collect::<Result<Vec<_>, _>>()?;
    let mut violations = Vec::new();
    let commutative = is_commutative(a);
    for genus in 0..=max_genus {
        let expected = &invariants[genus as usize];
        let mut words = vec![("canonical".to_string(), canonical_word(genus))];
        words.extend(alternative_words(genus, commutative));
        for (name, w) in words {
            match closed_value(a, &w) {
                Ok(found) if &found != expected => violations.push(InvarianceViolation::WordPresentation {
                    genus,
                    word: name,
                    expected: expected.clone(),
                    found,
                }),
                Ok(_) => {}
                Err(error) => violations.push(InvarianceViolation::Evaluation {
                    genus,
                    word: name,
                    error,
                }),
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let p = random_invertible(&mut rng, a.dim());
        let b = a.change_basis(&p)?;
        for genus in 0..=max_genus {
            let found = b.genus_invariant(genus)?;
            if found != invariants[genus as usize] {
                violations.push(InvarianceViolation::BasisChange {
                    trial,
                    genus,
                    expected: invariants[genus as usize].clone(),
                    found,
                });
            }
        }
    }
    Ok(InvarianceReport {
        invariants,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityViolation {
    /// Two words that should give the same map do not.
    Unequal { left: String, right: String },
    /// `cap . cup` is not the dimension.
    ZigZagTrace { found: Rational },
}

impl std::fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Unequal { left, right } => write!(f, "'{left}' != '{right}'"),
            Self::ZigZagTrace { found } => write!(f, "cap . cup = {}", format_rational(found)),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

fn one_line(w: &CobordismWord) -> String {
    w.to_string().trim_end().replace('\n', "; ")
}

/// Frobenius identity, both snake identities and `cap . cup = dim`, as
/// exact tensor equations.
pub fn frobenius_identity_report(a: &FrobeniusAlgebra) -> Result<IdentityReport, FrobeniusError> {
    use Generator::*;
    a.copairing()?;
    let eval = |w: &CobordismWord| -> MultilinearMap { a.evaluate_map(w).expect("arity-correct words") };
    let mut violations = Vec::new();
    let groups = [
        vec![
            CobordismWord::new(vec![vec![Mult], vec![Comult]]),
            CobordismWord::new(vec![vec![Id, Comult], vec![Mult, Id]]),
            CobordismWord::new(vec![vec![Comult, Id], vec![Id, Mult]]),
        ],
        vec![
            CobordismWord::new(vec![vec![Id]]),
            CobordismWord::new(vec![vec![Id, Cup], vec![Cap, Id]]),
            CobordismWord::new(vec![vec![Cup, Id], vec![Id, Cap]]),
        ],
    ];
    for group in &groups {
        let reference = eval(&group[0]);
        for w in &group[1..] {
            if eval(w) != reference {
                violations.push(IdentityViolation::Unequal {
                    left: one_line(&group[0]),
                    right: one_line(w),
                });
            }
        }
    }
    let trace = eval(&CobordismWord::new(vec![vec![Cup], vec![Cap]])).entries[0].clone();
    if trace != q(a.dim() as i64, 1) {
        violations.push(IdentityViolation::ZigZagTrace { found: trace });
    }
    Ok(IdentityReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincat::Algebra;

    fn corpus_like() -> Vec<FrobeniusAlgebra> {
        let mut s3_counit = vec![q(0, 1); 6];
        s3_counit[0] = q(1, 1);
        vec![
            FrobeniusAlgebra::diagonal(vec![q(1, 1)]),
            FrobeniusAlgebra::diagonal(vec![q(1, 1), q(1, 1)]),
            FrobeniusAlgebra::cyclic_group(2),
            FrobeniusAlgebra::cyclic_group(3),
            FrobeniusAlgebra::from_algebra(&Algebra::dual_numbers(), vec![q(0, 1), q(1, 1)]).unwrap(),
            FrobeniusAlgebra::from_algebra(&Algebra::matrices(2), vec![q(1, 1), q(0, 1), q(0, 1), q(1, 1)]).unwrap(),
            FrobeniusAlgebra::from_algebra(&Algebra::symmetric_group(3), s3_counit).unwrap(),
        ]
    }

    #[test]
    fn identities_hold() {
        for a in corpus_like() {
            let report = frobenius_identity_report(&a).unwrap();
            assert!(report.is_empty(), "{:?}: {:?}", a.names(), report);
        }
    }

    #[test]
    fn suite_passes_on_valid_algebras() {
        for a in corpus_like() {
            let report = invariance_suite(&a, 3, 3, 7).unwrap();
            assert!(report.is_empty(), "{:?}: {:?}", a.names(), report.violations);
        }
    }

    #[test]
    fn perturbed_multiplication_is_caught() {
        // Z/3 with g.g = 2 g^2 instead of g^2
        let a = FrobeniusAlgebra::cyclic_group(3).with_structure_constant(1, 1, 2, q(2, 1));
        assert!(!a.validate().is_empty());
        let report = invariance_suite(&a, 0, 3, 7).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, InvarianceViolation::WordPresentation { .. })));
        assert!(!frobenius_identity_report(&a).unwrap().is_empty());
    }

    #[test]
    fn seeded_runs_repeat() {
        let mut r1 = ChaCha8Rng::seed_from_u64(11);
        let mut r2 = ChaCha8Rng::seed_from_u64(11);
        assert_eq!(random_invertible(&mut r1, 4), random_invertible(&mut r2, 4));
    }
}
