//! Whether a homomorphism lifts to the semi-holonomic setting, i.e. whether
//! the corresponding operator is strongly invariant.
//!
//! The status is data, keyed by template position: every regular character
//! has the same three exceptional classes, and every singular character lifts
//! completely.

use alloc::boxed::Box;
use core::fmt;

use thiserror::Error;

use crate::pattern::{pattern_of, selector_positions, Arrow};
use crate::weight::{InfChar, Singularity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftVerdict {
    Lifts,
    NoLift,
    Unknown,
}

impl LiftVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftVerdict::Lifts => "lifts",
            LiftVerdict::NoLift => "no-lift",
            LiftVerdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for LiftVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftReason {
    OrderAtMostTwo,
    SingularCharacter,
    RegularCovered,
    ProvenObstruction,
    ConjecturedNo,
}

impl LiftReason {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftReason::OrderAtMostTwo => "order-at-most-two",
            LiftReason::SingularCharacter => "singular-character",
            LiftReason::RegularCovered => "regular-covered",
            LiftReason::ProvenObstruction => "proven-obstruction",
            LiftReason::ConjecturedNo => "conjectured-no",
        }
    }
}

impl fmt::Display for LiftReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict, its reason and a short human-readable justification.
///
/// `NoLift` always carries `ProvenObstruction` and `Unknown` always carries
/// `ConjecturedNo`; the constructor is private so no other pairing exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LiftStatus {
    verdict: LiftVerdict,
    reason: LiftReason,
    provenance: &'static str,
}

impl LiftStatus {
    const fn lifts(reason: LiftReason, provenance: &'static str) -> Self {
        LiftStatus {
            verdict: LiftVerdict::Lifts,
            reason,
            provenance,
        }
    }

    pub fn verdict(&self) -> LiftVerdict {
        self.verdict
    }

    pub fn reason(&self) -> LiftReason {
        self.reason
    }

    pub fn provenance(&self) -> &'static str {
        self.provenance
    }
}

impl fmt::Display for LiftStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}): {}", self.verdict, self.reason, self.provenance)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("{arrow} is not an arrow of the pattern of {character}")]
    ArrowNotInPattern { arrow: Box<Arrow>, character: InfChar },
}

/// The regular exceptions as `(source positions, target positions, status)`,
/// positions into the character values `a > b > … > f`.
const EXCEPTIONS: [([usize; 3], [usize; 3], LiftStatus); 3] = [
    (
        [3, 4, 5],
        [0, 1, 2],
        LiftStatus {
            verdict: LiftVerdict::Unknown,
            reason: LiftReason::ConjecturedNo,
            provenance: "class def -> abc: believed not to lift, unresolved",
        },
    ),
    (
        [0, 3, 4],
        [0, 1, 2],
        LiftStatus {
            verdict: LiftVerdict::NoLift,
            reason: LiftReason::ProvenObstruction,
            provenance: "class ade -> abc: no semi-holonomic lift",
        },
    ),
    (
        [3, 4, 5],
        [1, 2, 5],
        LiftStatus {
            verdict: LiftVerdict::NoLift,
            reason: LiftReason::ProvenObstruction,
            provenance: "class def -> bcf: no semi-holonomic lift",
        },
    ),
];

pub fn lift_status(arrow: &Arrow, character: &InfChar) -> Result<LiftStatus, LiftError> {
    let pattern = pattern_of(character);
    let found = pattern
        .find_arrow(&arrow.src, &arrow.tgt)
        .filter(|a| a.kind == arrow.kind)
        .ok_or_else(|| LiftError::ArrowNotInPattern {
            arrow: Box::new(*arrow),
            character: *character,
        })?;
    if found.order <= 2 {
        return Ok(LiftStatus::lifts(LiftReason::OrderAtMostTwo, "order at most two always lifts"));
    }
    if character.singularity() != Singularity::Regular {
        return Ok(LiftStatus::lifts(
            LiftReason::SingularCharacter,
            "every homomorphism with singular character lifts",
        ));
    }
    let values = character.values();
    let src = selector_positions(&values, &found.src);
    let tgt = selector_positions(&values, &found.tgt);
    for (s, t, status) in EXCEPTIONS {
        if src == Some(s) && tgt == Some(t) {
            return Ok(status);
        }
    }
    Ok(LiftStatus::lifts(
        LiftReason::RegularCovered,
        "regular character, outside the three exceptional classes",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::PDomWeight;

    fn arrow_at(ic: &InfChar, src: &str, tgt: &str) -> Arrow {
        let (s, t): (PDomWeight, PDomWeight) = (src.parse().unwrap(), tgt.parse().unwrap());
        *pattern_of(ic).find_arrow(&s, &t).unwrap()
    }

    #[test]
    fn named_arrows() {
        let ic: InfChar = "(543210)".parse().unwrap();
        let a = arrow_at(&ic, "(210|543)", "(430|521)");
        assert_eq!(lift_status(&a, &ic).unwrap().verdict(), LiftVerdict::NoLift);
        let a = arrow_at(&ic, "(521|430)", "(543|210)");
        assert_eq!(lift_status(&a, &ic).unwrap().reason(), LiftReason::ProvenObstruction);
        let a = arrow_at(&ic, "(310|542)", "(542|310)");
        assert_eq!(a.order, 7);
        assert_eq!(lift_status(&a, &ic).unwrap().reason(), LiftReason::RegularCovered);
        let a = arrow_at(&ic, "(210|543)", "(543|210)");
        let s = lift_status(&a, &ic).unwrap();
        assert_eq!((s.verdict(), s.reason()), (LiftVerdict::Unknown, LiftReason::ConjecturedNo));
    }

    #[test]
    fn short_and_singular() {
        let ic: InfChar = "(543210)".parse().unwrap();
        let a = arrow_at(&ic, "(210|543)", "(310|542)");
        assert_eq!(lift_status(&a, &ic).unwrap().reason(), LiftReason::OrderAtMostTwo);
        let ic: InfChar = "(322110)".parse().unwrap();
        let a = arrow_at(&ic, "(210|321)", "(321|210)");
        assert_eq!(a.order, 3);
        assert_eq!(lift_status(&a, &ic).unwrap().reason(), LiftReason::SingularCharacter);
    }

    #[test]
    fn foreign_arrow() {
        let ic: InfChar = "(543210)".parse().unwrap();
        let other: InfChar = "(643210)".parse().unwrap();
        let a = arrow_at(&other, "(210|643)", "(310|642)");
        assert!(matches!(lift_status(&a, &ic), Err(LiftError::ArrowNotInPattern { .. })));
    }
}
