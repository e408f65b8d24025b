use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{format_rational, Rational};
use crate::fusion::{FusionRing, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("twist value must be nonzero")]
    Zero,
    #[error("root of unity needs a positive order")]
    ZeroOrder,
}

/// A nonzero scalar kept symbolically: either an exact rational or
/// `exp(2 pi i exponent / order)`. Values are normalised so that equal
/// numbers have equal representations (`-1` is `zeta(2,1)`, `zeta(n,0)` is 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TwistValue {
    Rational(Rational),
    RootOfUnity { order: u32, exponent: u32 },
}

impl TwistValue {
    pub fn one() -> Self {
        Self::Rational(Rational::one())
    }

    pub fn rational(value: Rational) -> Result<Self, TwistError> {
        if value.is_zero() {
            Err(TwistError::Zero)
        } else if value == -Rational::one() {
            Ok(Self::RootOfUnity { order: 2, exponent: 1 })
        } else {
            Ok(Self::Rational(value))
        }
    }

    pub fn root_of_unity(order: u32, exponent: u32) -> Result<Self, TwistError> {
        if order == 0 {
            return Err(TwistError::ZeroOrder);
        }
        let exponent = exponent % order;
        if exponent == 0 {
            return Ok(Self::one());
        }
        let g = order.gcd(&exponent);
        Ok(Self::RootOfUnity {
            order: order / g,
            exponent: exponent / g,
        })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Self::Rational(r) if r.is_one())
    }
}

impl fmt::Display for TwistValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => write!(f, "{}", format_rational(r)),
            Self::RootOfUnity { order, exponent } => write!(f, "zeta({order},{exponent})"),
        }
    }
}

/// Twist scalar per label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwistData {
    pub values: BTreeMap<Label, TwistValue>,
}

impl TwistData {
    pub fn trivial(rank: usize) -> Self {
        Self {
            values: (0..rank).map(|l| (l, TwistValue::one())).collect(),
        }
    }

    pub fn set(&mut self, label: Label, value: TwistValue) {
        self.values.insert(label, value);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistViolation {
    Missing(Label),
    UnknownLabel(Label),
    UnitNotOne { label: Label, value: TwistValue },
    DualMismatch {
        label: Label,
        dual: Label,
        value: TwistValue,
        dual_value: TwistValue,
    },
}

impl TwistViolation {
    pub fn describe(&self, ring: &FusionRing) -> String {
        let name = |l: &Label| ring.names().get(*l).cloned().unwrap_or_else(|| l.to_string());
        match self {
            Self::Missing(l) => format!("twist: no value for {}", name(l)),
            Self::UnknownLabel(l) => format!("twist: label {l} out of range"),
            Self::UnitNotOne { label, value } => {
                format!("twist: unit component {} has twist {value}, expected 1", name(label))
            }
            Self::DualMismatch {
                label,
                dual,
                value,
                dual_value,
            } => format!(
                "twist: h({}) = {value} but h({}) = {dual_value}",
                name(label),
                name(dual)
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwistReport {
    pub violations: Vec<TwistViolation>,
}

impl TwistReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Twists must be 1 on unit components and agree on dual labels.
pub fn validate_twists(ring: &FusionRing, twists: &TwistData) -> TwistReport {
    let mut violations = Vec::new();
    for &l in twists.values.keys() {
        if l >= ring.rank() {
            violations.push(TwistViolation::UnknownLabel(l));
        }
    }
    for l in 0..ring.rank() {
        let Some(value) = twists.values.get(&l) else {
            violations.push(TwistViolation::Missing(l));
            continue;
        };
        if ring.is_unit_component(l) && !value.is_one() {
            violations.push(TwistViolation::UnitNotOne {
                label: l,
                value: value.clone(),
            });
        }
        let d = ring.dual(l);
        if d > l {
            if let Some(dual_value) = twists.values.get(&d) {
                if dual_value != value {
                    violations.push(TwistViolation::DualMismatch {
                        label: l,
                        dual: d,
                        value: value.clone(),
                        dual_value: dual_value.clone(),
                    });
                }
            }
        }
    }
    TwistReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn normalisation() {
        assert_eq!(TwistValue::root_of_unity(10, 4).unwrap(), TwistValue::root_of_unity(5, 2).unwrap());
        assert_eq!(TwistValue::root_of_unity(3, 3).unwrap(), TwistValue::one());
        assert_eq!(TwistValue::rational(q(-1, 1)).unwrap(), TwistValue::root_of_unity(2, 1).unwrap());
        assert_eq!(TwistValue::root_of_unity(0, 1), Err(TwistError::ZeroOrder));
        assert_eq!(TwistValue::rational(q(0, 1)), Err(TwistError::Zero));
    }

    #[test]
    fn all_ones_pass() {
        let r = FusionRing::cyclic(3);
        assert!(validate_twists(&r, &TwistData::trivial(3)).is_empty());
    }

    #[test]
    fn fibonacci_tau_is_unconstrained() {
        let r = FusionRing::fibonacci();
        let mut t = TwistData::trivial(2);
        t.set(1, TwistValue::root_of_unity(5, 2).unwrap());
        assert!(validate_twists(&r, &t).is_empty());
    }

    #[test]
    fn unit_must_be_one() {
        let r = FusionRing::fibonacci();
        let mut t = TwistData::trivial(2);
        t.set(0, TwistValue::root_of_unity(4, 1).unwrap());
        assert_eq!(
            validate_twists(&r, &t).violations,
            vec![TwistViolation::UnitNotOne {
                label: 0,
                value: TwistValue::RootOfUnity { order: 4, exponent: 1 }
            }]
        );
    }

    #[test]
    fn dual_labels_share_twist() {
        let r = FusionRing::cyclic(3);
        let mut t = TwistData::trivial(3);
        t.set(1, TwistValue::root_of_unity(3, 1).unwrap());
        let v = validate_twists(&r, &t).violations;
        assert!(matches!(v[..], [TwistViolation::DualMismatch { label: 1, dual: 2, .. }]));
        t.set(2, TwistValue::root_of_unity(3, 1).unwrap());
        assert!(validate_twists(&r, &t).is_empty());
        t.values.remove(&2);
        assert_eq!(validate_twists(&r, &t).violations, vec![TwistViolation::Missing(2)]);
    }
}
