use std::fmt;

use super::{FusionRing, Label};

/// One failed instance of a ring axiom, with the indices involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `dual(dual(a)) != a`.
    NotInvolution { label: Label, image: Label },
    /// `sum_d n^d_ab n^e_dc != sum_d n^d_bc n^e_ad`.
    Associativity {
        a: Label,
        b: Label,
        c: Label,
        e: Label,
        left: u64,
        right: u64,
    },
    /// `n^c_ab != n^c_ba`.
    Commutativity { a: Label, b: Label, c: Label },
    /// `n^c_ab != n^{dual b}_{dual c, a}`.
    Frobenius { a: Label, b: Label, c: Label },
    /// `sum_i n^g_{a, unit_i}` must be 1 when `g = a` and 0 otherwise.
    UnitLaw { a: Label, g: Label, total: u64 },
}

impl AxiomViolation {
    pub fn describe(&self, ring: &FusionRing) -> String {
        let n = |l: &Label| ring.name(*l);
        match self {
            Self::NotInvolution { label, image } => format!(
                "involution: dual(dual({})) = {} != {}",
                n(label),
                n(image),
                n(label)
            ),
            Self::Associativity {
                a,
                b,
                c,
                e,
                left,
                right,
            } => format!(
                "associativity at ({},{},{},{}): (ab)c gives {left}, a(bc) gives {right}",
                n(a),
                n(b),
                n(c),
                n(e)
            ),
            Self::Commutativity { a, b, c } => format!(
                "commutativity: N[{},{}->{}] = {} but N[{},{}->{}] = {}",
                n(a),
                n(b),
                n(c),
                ring.coefficient(*a, *b, *c),
                n(b),
                n(a),
                n(c),
                ring.coefficient(*b, *a, *c)
            ),
            Self::Frobenius { a, b, c } => {
                let (a2, b2, c2) = frobenius_image(ring, *a, *b, *c);
                format!(
                    "frobenius symmetry: N[{},{}->{}] = {} but N[{},{}->{}] = {}",
                    n(a),
                    n(b),
                    n(c),
                    ring.coefficient(*a, *b, *c),
                    n(&a2),
                    n(&b2),
                    n(&c2),
                    ring.coefficient(a2, b2, c2)
                )
            }
            Self::UnitLaw { a, g, total } => format!(
                "unit law: {} times unit has multiplicity {total} of {} (expected {})",
                n(a),
                n(g),
                u8::from(a == g)
            ),
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotInvolution { label, image } => {
                write!(f, "involution fails at {label} (dual of dual is {image})")
            }
            Self::Associativity {
                a,
                b,
                c,
                e,
                left,
                right,
            } => write!(f, "associativity fails at ({a},{b},{c},{e}): {left} != {right}"),
            Self::Commutativity { a, b, c } => write!(f, "commutativity fails at ({a},{b},{c})"),
            Self::Frobenius { a, b, c } => write!(f, "frobenius symmetry fails at ({a},{b},{c})"),
            Self::UnitLaw { a, g, total } => {
                write!(f, "unit law fails at ({a},{g}): multiplicity {total}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `(a, b, c) -> (dual c, a, dual b)`: the index map under which the
/// structure constants are invariant, `n^c_ab = n^{dual b}_{dual c, a}`.
pub(crate) fn frobenius_image(ring: &FusionRing, a: Label, b: Label, c: Label) -> (Label, Label, Label) {
    (ring.dual(c), a, ring.dual(b))
}

/// A failed instance of `<Q_a, Q_b Q_c> = <Q_a Q_b, Q_c>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingViolation {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    /// `<Q_a, Q_b Q_c>`, equal to `n^{dual a}_{bc}`.
    pub left: u64,
    /// `<Q_a Q_b, Q_c>`, equal to `n^{dual c}_{ab}`.
    pub right: u64,
}

impl PairingViolation {
    pub fn describe(&self, ring: &FusionRing) -> String {
        let n = |l: Label| ring.name(l);
        format!(
            "pairing adjunction at ({},{},{}): <a, b*c> = {} but <a*b, c> = {} \
             (coefficient form N[{},{}->{}] vs N[{},{}->{}])",
            n(self.a),
            n(self.b),
            n(self.c),
            self.left,
            self.right,
            n(self.b),
            n(self.c),
            n(ring.dual(self.a)),
            n(self.a),
            n(self.b),
            n(ring.dual(self.c)),
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub violations: Vec<PairingViolation>,
}

impl PairingReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FusionRing {
    /// Checks, exactly and exhaustively: involution, associativity,
    /// commutativity, the Frobenius index symmetry and the unit law.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.rank();
        let mut violations = Vec::new();

        for a in 0..n {
            let image = self.dual(self.dual(a));
            if image != a {
                violations.push(AxiomViolation::NotInvolution { label: a, image });
            }
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let left: u64 = (0..n)
                            .map(|d| {
                                u64::from(self.coefficient(a, b, d)) * u64::from(self.coefficient(d, c, e))
                            })
                            .sum();
                        let right: u64 = (0..n)
                            .map(|d| {
                                u64::from(self.coefficient(b, c, d)) * u64::from(self.coefficient(a, d, e))
                            })
                            .sum();
                        if left != right {
                            violations.push(AxiomViolation::Associativity {
                                a,
                                b,
                                c,
                                e,
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if b > a && self.coefficient(a, b, c) != self.coefficient(b, a, c) {
                        violations.push(AxiomViolation::Commutativity { a, b, c });
                    }
                    let (a2, b2, c2) = frobenius_image(self, a, b, c);
                    if self.coefficient(a, b, c) != self.coefficient(a2, b2, c2) {
                        violations.push(AxiomViolation::Frobenius { a, b, c });
                    }
                }
            }
        }

        for a in 0..n {
            for g in 0..n {
                let total: u64 = self
                    .unit_components()
                    .iter()
                    .map(|&u| u64::from(self.coefficient(a, u, g)))
                    .sum();
                if total != u64::from(a == g) {
                    violations.push(AxiomViolation::UnitLaw { a, g, total });
                }
            }
        }

        AxiomReport { violations }
    }

    /// Same verdict as [`FusionRing::verify_axioms`] but stops at the first
    /// failure.
    pub fn satisfies_axioms(&self) -> bool {
        let n = self.rank();
        let c = |a, b, g| u64::from(self.coefficient(a, b, g));
        if (0..n).any(|a| self.dual(self.dual(a)) != a) {
            return false;
        }
        for a in 0..n {
            for g in 0..n {
                let total: u64 = self.unit_components().iter().map(|&u| c(a, u, g)).sum();
                if total != u64::from(a == g) {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    let (a2, b2, g2) = frobenius_image(self, a, b, g);
                    if c(a, b, g) != c(b, a, g) || c(a, b, g) != c(a2, b2, g2) {
                        return false;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    for e in 0..n {
                        let l: u64 = (0..n).map(|d| c(a, b, d) * c(d, g, e)).sum();
                        let r: u64 = (0..n).map(|d| c(b, g, d) * c(a, d, e)).sum();
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Checks `<Q_a, Q_b Q_c> = <Q_a Q_b, Q_c>` for all label triples.
    pub fn verify_frobenius_pairing(&self) -> PairingReport {
        let n = self.rank();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (qa, qb, qc) = (self.basis_vector(a), self.basis_vector(b), self.basis_vector(c));
                    let left = self.inner_product(&qa, &self.multiply(&qb, &qc));
                    let right = self.inner_product(&self.multiply(&qa, &qb), &qc);
                    if left != right {
                        violations.push(PairingViolation { a, b, c, left, right });
                    }
                }
            }
        }
        PairingReport { violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_rings_pass() {
        for r in [
            FusionRing::trivial(),
            FusionRing::cyclic(2),
            FusionRing::cyclic(3),
            FusionRing::fibonacci(),
            FusionRing::fibonacci().direct_product(&FusionRing::cyclic(2)),
        ] {
            assert!(r.verify_axioms().is_empty(), "{r}: {:?}", r.verify_axioms());
            assert!(r.satisfies_axioms());
            assert!(r.verify_frobenius_pairing().is_empty());
        }
    }

    #[test]
    fn fibonacci_with_doubled_tau_channel_is_still_a_ring() {
        // x*x = 1 + 2x: every commutative rank-2 table is associative.
        let r = FusionRing::fibonacci().with_coefficient(1, 1, 1, 2);
        assert!(r.verify_axioms().is_empty());
    }

    #[test]
    fn associativity_failure_is_located() {
        // a*a = 1, b*b = 1, a*b = 0: (aa)b = b but a(ab) = 0.
        let r = FusionRing::from_rules(
            &["0", "a", "b"],
            &[0, 1, 2],
            &[0],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 0, 1, 1), (2, 0, 2, 1), (1, 1, 0, 1), (2, 2, 0, 1)],
        )
        .unwrap();
        let report = r.verify_axioms();
        assert!(report.violations.iter().all(|v| matches!(v, AxiomViolation::Associativity { .. })));
        assert!(report.violations.contains(&AxiomViolation::Associativity {
            a: 1,
            b: 1,
            c: 2,
            e: 2,
            left: 1,
            right: 0
        }));
        assert!(!r.satisfies_axioms());
    }

    #[test]
    fn frobenius_failure_is_located() {
        let r = FusionRing::fibonacci().with_coefficient(1, 1, 0, 2);
        let report = r.verify_axioms();
        assert!(report.violations.contains(&AxiomViolation::Frobenius { a: 1, b: 1, c: 0 }));
    }

    #[test]
    fn non_involutive_dual_is_named() {
        let z3 = FusionRing::cyclic(3).with_dual(vec![0, 2, 0]).unwrap();
        let report = z3.verify_axioms();
        assert_eq!(
            report.violations[..2],
            [
                AxiomViolation::NotInvolution { label: 1, image: 0 },
                AxiomViolation::NotInvolution { label: 2, image: 0 },
            ]
        );
        let msg = report.violations[0].describe(&z3);
        assert!(msg.starts_with("involution"), "{msg}");
    }

    #[test]
    fn z3_with_identity_dual_breaks_pairing() {
        let z3 = FusionRing::cyclic(3).with_dual(vec![0, 1, 2]).unwrap();
        let pairing = z3.verify_frobenius_pairing();
        assert!(!pairing.is_empty());
        // <e1, e1*e2> = <e1, e0> = 0 but <e1*e1, e2> = <e2, e2> = 1 when dual is trivial.
        assert!(pairing
            .violations
            .contains(&PairingViolation { a: 1, b: 1, c: 2, left: 0, right: 1 }));
        assert!(z3
            .verify_axioms()
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Frobenius { .. })));
    }

    #[test]
    fn frobenius_index_map_closes() {
        let r = FusionRing::cyclic(3);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let mut t = (a, b, c);
                    for _ in 0..3 {
                        t = frobenius_image(&r, t.0, t.1, t.2);
                    }
                    assert_eq!(t, (a, b, c));
                }
            }
        }
    }
}
