//! Translation (twisting) of homomorphisms between infinitesimal characters.
//!
//! `V(E ⊗ W) = V(E) ⊗ W*`, so tensoring a homomorphism with a fundamental
//! module and projecting onto a single character transports it, provided the
//! relevant factors are isolated by their characters. The two checkers below
//! evaluate those hypotheses and return every condition with its witnesses
//! instead of stopping at the first failure.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::pattern::{pattern_of, Arrow, Node, Pattern};
use crate::tensor::{decompose, FundamentalModule, PieceLabel, TensorError};
use crate::weight::{hom_order, HalfInt, InfChar, PDomWeight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("{from} and {to} are not adjacent equisingular characters")]
    NotAdjacentCharacters { from: InfChar, to: InfChar },
    #[error("{weight} has {count} factors in character {target}; expected exactly one")]
    NonUniqueFactor {
        weight: PDomWeight,
        target: InfChar,
        count: usize,
    },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// One irreducible factor of `V(α ⊗ W)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompositionFactor {
    pub weight: PDomWeight,
    pub character: InfChar,
    pub phi: HalfInt,
    pub piece: PieceLabel,
}

/// Factors of `α ⊗ Λ^k`, or of `α ⊗ (Λ^k)^* = α ⊗ Λ^{6−k}` when `dual`.
pub fn factors(alpha: &PDomWeight, k: i64, dual: bool) -> Result<Vec<CompositionFactor>, TensorError> {
    let mut module = FundamentalModule::new(k)?;
    if dual {
        module = module.dual();
    }
    Ok(factors_of(alpha, module))
}

fn factors_of(alpha: &PDomWeight, module: FundamentalModule) -> Vec<CompositionFactor> {
    decompose(alpha, module)
        .summands
        .into_iter()
        .map(|s| CompositionFactor {
            weight: s.weight,
            character: s.weight.inf_char(),
            phi: s.phi,
            piece: s.piece,
        })
        .collect()
}

/// A labelled factor list, e.g. `F⊗W`, kept as evidence on a condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    pub label: String,
    pub base: PDomWeight,
    pub module: FundamentalModule,
    pub factors: Vec<CompositionFactor>,
}

impl FactorList {
    fn new(label: &str, base: PDomWeight, module: FundamentalModule) -> Self {
        FactorList {
            label: label.into(),
            base,
            module,
            factors: factors_of(&base, module),
        }
    }

    pub fn weights(&self) -> Vec<PDomWeight> {
        self.factors.iter().map(|f| f.weight).collect()
    }

    fn find(&self, w: &PDomWeight) -> Option<&CompositionFactor> {
        self.factors.iter().find(|f| f.weight.equivalent(w))
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.label)?;
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{:#}", fac.weight)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witnesses: Vec<FactorList>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationDirection {
    /// Both-way translation between equisingular characters.
    Equisingular,
    /// One-way translation into a less singular character.
    OneWay,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationCertificate {
    pub direction: TranslationDirection,
    pub module: FundamentalModule,
    pub conditions: Vec<Condition>,
}

impl TranslationCertificate {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    /// Every factor list attached to any condition, without repeats.
    pub fn factor_lists(&self) -> Vec<&FactorList> {
        let mut out: Vec<&FactorList> = Vec::new();
        for c in &self.conditions {
            for w in &c.witnesses {
                if !out.iter().any(|o| o.label == w.label) {
                    out.push(w);
                }
            }
        }
        out
    }
}

impl fmt::Display for TranslationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            TranslationDirection::Equisingular => "equisingular",
            TranslationDirection::OneWay => "one-way",
        };
        writeln!(f, "{dir} translation with W = {}", self.module)?;
        for c in &self.conditions {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

pub mod names {
    pub const SOURCE_SAME_CHARACTER: &str = "source_pair_same_character";
    pub const TARGET_SAME_CHARACTER: &str = "target_pair_same_character";
    pub const F_PRIME_IN_F_W: &str = "f_prime_unique_in_f_tensor_w";
    pub const E_PRIME_IN_E_W: &str = "e_prime_unique_in_e_tensor_w";
    pub const F_IN_F_PRIME_W_DUAL: &str = "f_unique_in_f_prime_tensor_w_dual";
    pub const E_IN_E_PRIME_W_DUAL: &str = "e_unique_in_e_prime_tensor_w_dual";
    pub const SPLITTING_ORDER: &str = "splitting_order_at_most_two";
    pub const HOM_E_TO_F: &str = "hom_e_to_f_exists";
    pub const DIRECT_SUM_SHAPE: &str = "i_direct_sum_shape";
    pub const EQUAL_CHARACTER: &str = "ii_equal_character";
    pub const REMAINING_DISTINCT: &str = "iii_remaining_characters_distinct";
    pub const GRADING_ORDER: &str = "iv_grading_order";
    pub const F_SPLITS_FROM_F1: &str = "iv_f_splits_from_f1_tensor_w_dual";
    pub const NO_HOM_E2_TO_F1: &str = "no_hom_e2_to_f1";
}

/// Checks that `target` occurs in `list` and no other factor shares its
/// character.
fn occurs_uniquely(target: &PDomWeight, list: &FactorList) -> Result<(), String> {
    let hits = list.factors.iter().filter(|f| f.weight.equivalent(target)).count();
    if hits == 0 {
        return Err(format!("{target:#} does not occur in {}", list.label));
    }
    let ch = target.inf_char();
    let clashes: Vec<String> = list
        .factors
        .iter()
        .filter(|f| !f.weight.equivalent(target) && f.character == ch)
        .map(|f| format!("{:#}", f.weight))
        .collect();
    if clashes.is_empty() {
        Ok(())
    } else {
        Err(format!(
            "{target:#} shares its character in {} with {}",
            list.label,
            clashes.join(", ")
        ))
    }
}

fn uniqueness_condition(name: &'static str, target: &PDomWeight, list: FactorList) -> Condition {
    let outcome = occurs_uniquely(target, &list);
    Condition {
        name,
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_else(|| format!("{target:#} is isolated in {}", list.label)),
        witnesses: alloc::vec![list],
    }
}

fn same_character_condition(name: &'static str, x: &PDomWeight, y: &PDomWeight) -> Condition {
    let (cx, cy) = (x.inf_char(), y.inf_char());
    Condition {
        name,
        passed: cx == cy,
        detail: format!("{x:#} has {cx:#}, {y:#} has {cy:#}"),
        witnesses: Vec::new(),
    }
}

/// Orders of the injection and projection that isolate `piece` in the
/// composition series of `module`: its distances from the two ends.
pub fn splitting_orders(module: FundamentalModule, piece: PieceLabel) -> (usize, usize) {
    let series = module.comp_series();
    let pos = series.iter().position(|p| *p == piece).expect("piece belongs to the module");
    (pos, series.len() - 1 - pos)
}

fn splitting_condition(selected: &[(&PDomWeight, &FactorList)]) -> Condition {
    let mut worst = 0;
    let mut detail = String::new();
    for (w, list) in selected {
        if let Some(f) = list.find(w) {
            let (up, down) = splitting_orders(list.module, f.piece);
            worst = worst.max(up).max(down);
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&format!("{w:#} in {}: piece {} orders ({up},{down})", list.label, f.piece));
        }
    }
    Condition {
        name: names::SPLITTING_ORDER,
        passed: worst <= 2,
        detail,
        witnesses: Vec::new(),
    }
}

/// Hypotheses for translating `Hom(V(F), V(E))` to `Hom(V(F'), V(E'))` by
/// `W = Λ^k` with inverse given by `W*`.
pub fn check_equisingular(
    f: &PDomWeight,
    e: &PDomWeight,
    f_prime: &PDomWeight,
    e_prime: &PDomWeight,
    k: i64,
) -> Result<TranslationCertificate, TensorError> {
    let module = FundamentalModule::new(k)?;
    let f_w = FactorList::new("F⊗W", *f, module);
    let e_w = FactorList::new("E⊗W", *e, module);
    let fp_wd = FactorList::new("F'⊗W*", *f_prime, module.dual());
    let ep_wd = FactorList::new("E'⊗W*", *e_prime, module.dual());
    let splitting = splitting_condition(&[
        (f_prime, &f_w),
        (e_prime, &e_w),
        (f, &fp_wd),
        (e, &ep_wd),
    ]);
    let conditions = alloc::vec![
        same_character_condition(names::SOURCE_SAME_CHARACTER, f, e),
        same_character_condition(names::TARGET_SAME_CHARACTER, f_prime, e_prime),
        uniqueness_condition(names::F_PRIME_IN_F_W, f_prime, f_w),
        uniqueness_condition(names::E_PRIME_IN_E_W, e_prime, e_w),
        uniqueness_condition(names::F_IN_F_PRIME_W_DUAL, f, fp_wd),
        uniqueness_condition(names::E_IN_E_PRIME_W_DUAL, e, ep_wd),
        splitting,
    ];
    Ok(TranslationCertificate {
        direction: TranslationDirection::Equisingular,
        module,
        conditions,
    })
}

/// Hypotheses for the one-way translation of `V(E) → V(F)` by `W = Λ^k` into
/// `V(E1) → V(F1)`.
pub fn check_oneway(
    e: &PDomWeight,
    f: &PDomWeight,
    e1: &PDomWeight,
    e2: &PDomWeight,
    f1: &PDomWeight,
    f2: &PDomWeight,
    k: i64,
) -> Result<TranslationCertificate, TensorError> {
    let module = FundamentalModule::new(k)?;
    let e_w = FactorList::new("E⊗W", *e, module);
    let f_w = FactorList::new("F⊗W", *f, module);
    let f1_wd = FactorList::new("F1⊗W*", *f1, module.dual());
    let mut conditions = Vec::new();

    let source = pattern_of(&e.inf_char());
    let has_source = e.inf_char() == f.inf_char() && source.find_arrow(e, f).is_some();
    conditions.push(Condition {
        name: names::HOM_E_TO_F,
        passed: has_source,
        detail: format!("{e:#} -> {f:#} in the pattern of {:#}", e.inf_char()),
        witnesses: Vec::new(),
    });

    let mut missing = Vec::new();
    for (w, list) in [(e1, &e_w), (e2, &e_w), (f1, &f_w), (f2, &f_w)] {
        if list.find(w).is_none() {
            missing.push(format!("{w:#} not in {}", list.label));
        }
    }
    if e1.equivalent(e2) || f1.equivalent(f2) {
        missing.push("E1/E2 or F1/F2 coincide".into());
    }
    conditions.push(Condition {
        name: names::DIRECT_SUM_SHAPE,
        passed: missing.is_empty(),
        detail: if missing.is_empty() {
            "E1, E2 split off E⊗W and F1, F2 split off F⊗W".into()
        } else {
            missing.join("; ")
        },
        witnesses: alloc::vec![e_w.clone(), f_w.clone()],
    });

    let ch = e1.inf_char();
    let all_equal = [e2, f1, f2].iter().all(|w| w.inf_char() == ch);
    conditions.push(Condition {
        name: names::EQUAL_CHARACTER,
        passed: all_equal,
        detail: format!("character of E1 is {ch:#}"),
        witnesses: Vec::new(),
    });

    let clashes: Vec<String> = e_w
        .factors
        .iter()
        .filter(|x| !x.weight.equivalent(e1) && !x.weight.equivalent(e2))
        .chain(
            f_w.factors
                .iter()
                .filter(|x| !x.weight.equivalent(f1) && !x.weight.equivalent(f2)),
        )
        .filter(|x| x.character == ch)
        .map(|x| format!("{:#}", x.weight))
        .collect();
    conditions.push(Condition {
        name: names::REMAINING_DISTINCT,
        passed: clashes.is_empty(),
        detail: if clashes.is_empty() {
            "no remaining factor has the character of (ii)".into()
        } else {
            format!("remaining factors in the character of (ii): {}", clashes.join(", "))
        },
        witnesses: Vec::new(),
    });

    let grading = e1.phi() < e2.phi() && f1.phi() > f2.phi();
    conditions.push(Condition {
        name: names::GRADING_ORDER,
        passed: grading,
        detail: format!(
            "phi(E1)={} phi(E2)={} phi(F1)={} phi(F2)={}",
            e1.phi(),
            e2.phi(),
            f1.phi(),
            f2.phi()
        ),
        witnesses: Vec::new(),
    });

    conditions.push(uniqueness_condition(names::F_SPLITS_FROM_F1, f, f1_wd.clone()));

    let target = pattern_of(&ch);
    let blocked = e2.inf_char() == f1.inf_char() && target.find_arrow(e2, f1).is_some();
    conditions.push(Condition {
        name: names::NO_HOM_E2_TO_F1,
        passed: !blocked,
        detail: format!("{e2:#} -> {f1:#} in the pattern of {ch:#}: {}", if blocked { "present" } else { "absent" }),
        witnesses: Vec::new(),
    });

    conditions.push(splitting_condition(&[(e1, &e_w), (f1, &f_w), (f, &f1_wd)]));

    Ok(TranslationCertificate {
        direction: TranslationDirection::OneWay,
        module,
        conditions,
    })
}

/// Which fundamental module moves `from` to the equisingular character `to`:
/// one simple value up (`Λ^1`) or down (`Λ^5`), or one repeated pair up
/// (`Λ^2`) or down (`Λ^4`).
pub fn character_move(from: &InfChar, to: &InfChar) -> Option<FundamentalModule> {
    if from.singularity() != to.singularity() {
        return None;
    }
    let values = from.values();
    for v in from.distinct_values() {
        let paired = from.multiplicity(v) == 2;
        for (delta, k) in [(1, if paired { 2 } else { 1 }), (-1, if paired { 4 } else { 5 })] {
            let moved = values.map(|x| if x == v { x + delta } else { x });
            if InfChar::new(moved).ok().as_ref() == Some(to) {
                return FundamentalModule::new(k).ok();
            }
        }
    }
    None
}

/// The unique factor of `α ⊗ W` lying in `target`, normalized.
pub fn translate_node(alpha: &PDomWeight, target: &InfChar) -> Result<PDomWeight, TranslationError> {
    let from = alpha.inf_char();
    let module = character_move(&from, target).ok_or(TranslationError::NotAdjacentCharacters {
        from,
        to: *target,
    })?;
    let hits: Vec<PDomWeight> = factors_of(alpha, module)
        .into_iter()
        .filter(|f| f.character == *target)
        .map(|f| f.weight.normalized())
        .collect();
    match hits.as_slice() {
        [only] => Ok(*only),
        _ => Err(TranslationError::NonUniqueFactor {
            weight: *alpha,
            target: *target,
            count: hits.len(),
        }),
    }
}

/// Moves every node and arrow of `pattern` to `target`, keeping arrow kinds
/// and recomputing orders.
pub fn transport_pattern(pattern: &Pattern, target: &InfChar) -> Result<Pattern, TranslationError> {
    let mut nodes = Vec::with_capacity(pattern.nodes.len());
    for n in &pattern.nodes {
        nodes.push(Node {
            weight: translate_node(&n.weight, target)?,
        });
    }
    let image = |w: &PDomWeight| {
        let i = pattern.nodes.iter().position(|n| n.weight == *w).expect("arrow endpoints are nodes");
        nodes[i].weight
    };
    let arrows = pattern
        .arrows
        .iter()
        .map(|a| {
            let (src, tgt) = (image(&a.src), image(&a.tgt));
            Arrow {
                src,
                tgt,
                kind: a.kind,
                order: hom_order(&src, &tgt).expect("images share the target character"),
            }
        })
        .collect();
    let mut sorted = nodes.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != nodes.len() {
        return Err(TranslationError::NonUniqueFactor {
            weight: pattern.nodes[0].weight,
            target: *target,
            count: nodes.len() - sorted.len(),
        });
    }
    Ok(Pattern {
        character: *target,
        nodes: sorted,
        arrows,
        cube_diagonal_nontrivial: pattern.cube_diagonal_nontrivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> PDomWeight {
        s.parse().unwrap()
    }

    fn ch(v: [i64; 6]) -> InfChar {
        InfChar::new(v).unwrap()
    }

    #[test]
    fn factor_lists() {
        let fs: Vec<PDomWeight> = factors(&w("(310|210)"), 2, false).unwrap().iter().map(|f| f.weight).collect();
        assert_eq!(fs, vec![w("(420|210)"), w("(321|210)"), w("(410|310)"), w("(320|310)"), w("(310|320)")]);
        let fs: Vec<PDomWeight> = factors(&w("(321|210)"), 2, true).unwrap().iter().map(|f| f.weight).collect();
        assert_eq!(fs, vec![w("(432|310)"), w("(431|320)"), w("(421|321)")]);
        let fs = factors(&w("(543|210)"), 1, false).unwrap();
        assert!(fs.len() <= 6);
        assert!(fs.iter().all(|f| f.piece.i + f.piece.j == 1));
        assert_eq!(factors(&w("(543|210)"), 7, false), Err(TensorError::BadK(7)));
    }

    #[test]
    fn equisingular_certificates() {
        let c = check_equisingular(&w("(310|210)"), &w("(210|310)"), &w("(321|210)"), &w("(210|321)"), 2).unwrap();
        assert!(c.is_valid(), "{c}");
        let c = check_equisingular(&w("(430|210)"), &w("(210|430)"), &w("(431|210)"), &w("(210|431)"), 1).unwrap();
        assert!(c.is_valid(), "{c}");
        let c = check_equisingular(&w("(430|210)"), &w("(210|430)"), &w("(431|210)"), &w("(210|431)"), 3).unwrap();
        assert!(!c.is_valid());
        assert!(!c.condition(names::F_PRIME_IN_F_W).unwrap().passed);
        assert!(!c.condition(names::SPLITTING_ORDER).unwrap().passed || c.failed().count() > 0);
    }

    #[test]
    fn mismatched_pairs_fail_as_conditions() {
        let c = check_equisingular(&w("(310|210)"), &w("(543|210)"), &w("(321|210)"), &w("(210|321)"), 2).unwrap();
        assert!(!c.condition(names::SOURCE_SAME_CHARACTER).unwrap().passed);
        assert!(!c.is_valid());
    }

    #[test]
    fn oneway_certificates() {
        let c = check_oneway(
            &w("(210|321)"),
            &w("(321|210)"),
            &w("(210|431)"),
            &w("(310|421)"),
            &w("(431|210)"),
            &w("(421|310)"),
            2,
        )
        .unwrap();
        assert!(c.is_valid(), "{c}");
        let c = check_oneway(
            &w("(410|321)"),
            &w("(421|310)"),
            &w("(510|432)"),
            &w("(520|431)"),
            &w("(532|410)"),
            &w("(531|420)"),
            4,
        )
        .unwrap();
        assert!(c.is_valid(), "{c}");
        let swapped = check_oneway(
            &w("(410|321)"),
            &w("(421|310)"),
            &w("(520|431)"),
            &w("(510|432)"),
            &w("(532|410)"),
            &w("(531|420)"),
            4,
        )
        .unwrap();
        // (510|432) -> (532|410) is a dotted arrow, so the swap also meets
        // an existing homomorphism E2 -> F1
        let failed: Vec<&str> = swapped.failed().map(|c| c.name).collect();
        assert_eq!(failed, vec![names::GRADING_ORDER, names::NO_HOM_E2_TO_F1]);
    }

    #[test]
    fn oneway_rejects_existing_blocking_arrow() {
        // E2 -> F1 is a standard arrow here
        let c = check_oneway(
            &w("(210|321)"),
            &w("(321|210)"),
            &w("(210|431)"),
            &w("(310|421)"),
            &w("(310|421)"),
            &w("(421|310)"),
            2,
        )
        .unwrap();
        assert!(!c.is_valid());
    }

    #[test]
    fn single_nodes() {
        assert_eq!(translate_node(&w("(543|210)"), &ch([6, 4, 3, 2, 1, 0])).unwrap(), w("(643|210)"));
        // raise the repeated pair 2,2 of (4,2,2,1,1,0)
        let t = translate_node(&w("(210|421)"), &ch([4, 3, 3, 1, 1, 0])).unwrap();
        assert_eq!(t, w("(310|431)"));
        assert!(matches!(
            translate_node(&w("(543|210)"), &ch([7, 4, 3, 2, 1, 0])),
            Err(TranslationError::NotAdjacentCharacters { .. })
        ));
        // lowering 5 would collide with 4
        assert!(translate_node(&w("(543|210)"), &ch([4, 4, 3, 2, 1, 0])).is_err());
    }

    #[test]
    fn lowering_moves() {
        let from = ch([6, 4, 3, 2, 1, 0]);
        let to = ch([5, 4, 3, 2, 1, 0]);
        assert_eq!(character_move(&from, &to), FundamentalModule::new(5).ok());
        assert_eq!(translate_node(&w("(643|210)"), &to).unwrap(), w("(543|210)"));
        // lowering the minimum: (5,4,3,2,1,-1) normalizes to (6,5,4,3,2,0)
        assert_eq!(
            character_move(&to, &ch([6, 5, 4, 3, 2, 0])),
            FundamentalModule::new(5).ok()
        );
    }

    #[test]
    fn whole_pattern_transport() {
        let p = pattern_of(&ch([5, 4, 3, 2, 1, 0]));
        let target = ch([6, 4, 3, 2, 1, 0]);
        let moved = transport_pattern(&p, &target).unwrap();
        let direct = pattern_of(&target);
        assert_eq!(moved.nodes, direct.nodes);
        for a in &moved.arrows {
            let d = direct.find_arrow(&a.src, &a.tgt).unwrap();
            assert_eq!((d.kind, d.order), (a.kind, a.order));
        }
        assert_eq!(moved.arrows.len(), direct.arrows.len());
    }
}
