//! Homomorphism patterns for a fixed infinitesimal character.
//!
//! Standard arrows are Bruhat covers among the p-dominant weights of a
//! character: in terms of the first triple (the *selector*) a cover replaces
//! one value by the next larger character value that is not already selected.
//! Nonstandard arrows come from a fixed template keyed by value positions, so
//! one table serves every character of a given singularity class.
//!
//! Singular characters are handled through the Enright–Shelton reduction:
//! deleting the repeated values gives a regular weight of `Gr(2,2)` (one
//! repeated pair) or `Gr(1,1)` (two pairs).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::combinatorics::k_subsets;
use crate::weight::{hom_order, p_dominant_weights_of, InfChar, PDomWeight, Singularity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("expected a {expected} character, got {found}")]
    WrongSingularity {
        expected: Singularity,
        found: Singularity,
    },
    #[error("the Enright-Shelton reduction needs a Sing1 or Sing2 character, got {0}")]
    NotSingular(Singularity),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    Standard,
    NonstandardDotted,
    NonstandardDashed,
}

impl ArrowKind {
    pub fn is_standard(self) -> bool {
        self == ArrowKind::Standard
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ArrowKind::Standard => "standard",
            ArrowKind::NonstandardDotted => "dotted",
            ArrowKind::NonstandardDashed => "dashed",
        }
    }
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A Verma module in a pattern. Its selector is the set of character values
/// forming the first triple; given the character, either determines the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub weight: PDomWeight,
}

impl Node {
    pub fn selector(&self) -> [i64; 3] {
        self.weight.first()
    }
}

/// A homomorphism `V(src) → V(tgt)`; `order = φ(tgt) − φ(src) > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub src: PDomWeight,
    pub tgt: PDomWeight,
    pub kind: ArrowKind,
    pub order: i64,
}

impl Arrow {
    fn new(src: PDomWeight, tgt: PDomWeight, kind: ArrowKind) -> Self {
        let order = hom_order(&src, &tgt).expect("arrow endpoints share a character");
        assert!(order > 0, "arrow {src} -> {tgt} has non-positive order {order}");
        Arrow {
            src,
            tgt,
            kind,
            order,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#} -> {:#} [{}, order {}]", self.src, self.tgt, self.kind, self.order)
    }
}

/// Two-step paths `bottom → left → top` and `bottom → right → top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Diamond {
    pub bottom: PDomWeight,
    pub left: PDomWeight,
    pub right: PDomWeight,
    pub top: PDomWeight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub character: InfChar,
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
    /// Whether the composition along the diagonal of the central cube is a
    /// nontrivial homomorphism. Recorded for regular characters, not derived.
    pub cube_diagonal_nontrivial: bool,
}

impl Pattern {
    pub fn standard_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.kind.is_standard()).count()
    }

    pub fn nonstandard_count(&self) -> usize {
        self.arrows.len() - self.standard_count()
    }

    pub fn find_arrow(&self, src: &PDomWeight, tgt: &PDomWeight) -> Option<&Arrow> {
        let (s, t) = (src.normalized(), tgt.normalized());
        self.arrows.iter().find(|a| a.src == s && a.tgt == t)
    }

    pub fn contains_node(&self, w: &PDomWeight) -> bool {
        let w = w.normalized();
        self.nodes.iter().any(|n| n.weight == w)
    }

    /// Nodes with no incoming arrow.
    pub fn sources(&self) -> Vec<PDomWeight> {
        self.nodes
            .iter()
            .map(|n| n.weight)
            .filter(|w| !self.arrows.iter().any(|a| a.tgt == *w))
            .collect()
    }

    /// Nodes with no outgoing arrow.
    pub fn sinks(&self) -> Vec<PDomWeight> {
        self.nodes
            .iter()
            .map(|n| n.weight)
            .filter(|w| !self.arrows.iter().any(|a| a.src == *w))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        // every arrow raises φ strictly
        self.arrows.iter().all(|a| a.tgt.phi() > a.src.phi())
    }

    /// All diamonds, over standard arrows only or over every arrow.
    pub fn diamonds(&self, standard_only: bool) -> Vec<Diamond> {
        let arrows: Vec<&Arrow> = self
            .arrows
            .iter()
            .filter(|a| !standard_only || a.kind.is_standard())
            .collect();
        let mut out = BTreeSet::new();
        for a in &arrows {
            for b in &arrows {
                if b.src != a.tgt {
                    continue;
                }
                for c in &arrows {
                    if c.src != a.src || c.tgt == a.tgt {
                        continue;
                    }
                    for d in &arrows {
                        if d.src == c.tgt && d.tgt == b.tgt && a.tgt < c.tgt {
                            out.insert(Diamond {
                                bottom: a.src,
                                left: a.tgt,
                                right: c.tgt,
                                top: b.tgt,
                            });
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "character {:#} {} nodes={} standard={} nonstandard={}",
            self.character,
            self.character.singularity(),
            self.nodes.len(),
            self.standard_count(),
            self.nonstandard_count()
        )?;
        for a in &self.arrows {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Bruhat covers of `selector` inside `universe` (distinct values): replace a
/// selected value by its successor in the universe when that successor is not
/// selected. Each result is sorted descending.
pub fn gale_covers(selector: &[i64], universe: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted_sel = selector.to_vec();
    sorted_sel.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for &v in &sorted_sel {
        let Some(next) = universe.iter().copied().filter(|&u| u > v).min() else {
            continue;
        };
        if sorted_sel.contains(&next) {
            continue;
        }
        let mut cover: Vec<i64> = sorted_sel.iter().map(|&x| if x == v { next } else { x }).collect();
        cover.sort_unstable_by(|a, b| b.cmp(a));
        out.push(cover);
    }
    out
}

/// One nonstandard arrow of the regular pattern, as positions `0..6` into the
/// descending character values `a > b > c > d > e > f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonstandardTemplate {
    pub src: [usize; 3],
    pub tgt: [usize; 3],
    pub kind: ArrowKind,
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;

pub const REGULAR_NONSTANDARD: [NonstandardTemplate; 8] = [
    tmpl([D, E, F], [B, C, F], ArrowKind::NonstandardDotted),
    tmpl([C, D, E], [A, B, E], ArrowKind::NonstandardDotted),
    tmpl([C, D, F], [A, B, F], ArrowKind::NonstandardDotted),
    tmpl([B, E, F], [B, C, D], ArrowKind::NonstandardDotted),
    tmpl([A, D, E], [A, B, C], ArrowKind::NonstandardDotted),
    tmpl([A, E, F], [A, C, D], ArrowKind::NonstandardDotted),
    tmpl([C, E, F], [A, B, D], ArrowKind::NonstandardDashed),
    tmpl([D, E, F], [A, B, C], ArrowKind::NonstandardDashed),
];

const fn tmpl(src: [usize; 3], tgt: [usize; 3], kind: ArrowKind) -> NonstandardTemplate {
    NonstandardTemplate { src, tgt, kind }
}

/// Letter name of a set of value positions, e.g. `[3,4,5]` → `"def"`.
pub fn position_letters(positions: &[usize]) -> alloc::string::String {
    positions.iter().map(|&p| (b'a' + p as u8) as char).collect()
}

/// Positions of the first-triple values of `w` inside the regular character
/// `values` (descending). `None` if some value is missing.
pub fn selector_positions(values: &[i64], w: &PDomWeight) -> Option<[usize; 3]> {
    let first = w.first();
    let mut out = [0; 3];
    for (o, v) in out.iter_mut().zip(first) {
        *o = values.iter().position(|&x| x == v)?;
    }
    out.sort_unstable();
    Some(out)
}

/// The weight whose first triple is `first` and whose second triple is the
/// rest of `values` (as multisets).
fn weight_with_first(values: &[i64], first: &[i64]) -> PDomWeight {
    let mut rest = values.to_vec();
    for v in first {
        let i = rest.iter().position(|x| x == v).expect("selector drawn from character");
        rest.remove(i);
    }
    let mut f = first.to_vec();
    f.sort_unstable_by(|a, b| b.cmp(a));
    rest.sort_unstable_by(|a, b| b.cmp(a));
    PDomWeight::new([f[0], f[1], f[2]], [rest[0], rest[1], rest[2]])
        .expect("selector and complement are strictly decreasing")
}

fn require(ic: &InfChar, expected: Singularity) -> Result<(), PatternError> {
    if ic.singularity() == expected {
        Ok(())
    } else {
        Err(PatternError::WrongSingularity {
            expected,
            found: ic.singularity(),
        })
    }
}

fn sort_arrows(arrows: &mut [Arrow]) {
    arrows.sort_by_key(|a| (a.kind, a.src, a.tgt));
}

pub fn regular_pattern(ic: &InfChar) -> Result<Pattern, PatternError> {
    require(ic, Singularity::Regular)?;
    let values = ic.values();
    let nodes: Vec<Node> = p_dominant_weights_of(ic).into_iter().map(|weight| Node { weight }).collect();
    let mut standard = Vec::new();
    for n in &nodes {
        for cover in gale_covers(&n.selector(), &values) {
            standard.push(Arrow::new(n.weight, weight_with_first(&values, &cover), ArrowKind::Standard));
        }
    }
    sort_arrows(&mut standard);
    let pick = |pos: [usize; 3]| pos.map(|p| values[p]);
    let nonstandard = REGULAR_NONSTANDARD.iter().map(|t| {
        Arrow::new(
            weight_with_first(&values, &pick(t.src)),
            weight_with_first(&values, &pick(t.tgt)),
            t.kind,
        )
    });
    let mut arrows = standard;
    arrows.extend(nonstandard);
    Ok(Pattern {
        character: *ic,
        nodes,
        arrows,
        cube_diagonal_nontrivial: true,
    })
}

/// One repeated value `r`; nodes are indexed by 2-subsets `P` of the four
/// simple values `w1 > w2 > w3 > w4`, with first triple `{r} ∪ P`.
pub fn sing1_pattern(ic: &InfChar) -> Result<Pattern, PatternError> {
    require(ic, Singularity::Sing1)?;
    let r = ic.repeated_values()[0];
    let w = ic.simple_values();
    let node_for = |p: &[i64]| {
        let mut first = alloc::vec![r, p[0], p[1]];
        first.sort_unstable_by(|a, b| b.cmp(a));
        weight_with_first(&ic.values(), &first)
    };
    let mut nodes = Vec::new();
    let mut arrows = Vec::new();
    for sel in k_subsets(4, 2) {
        let p = [w[sel[0]], w[sel[1]]];
        nodes.push(Node { weight: node_for(&p) });
        for cover in gale_covers(&p, &w) {
            arrows.push(Arrow::new(node_for(&p), node_for(&cover), ArrowKind::Standard));
        }
    }
    nodes.sort();
    sort_arrows(&mut arrows);
    arrows.push(Arrow::new(
        node_for(&[w[2], w[3]]),
        node_for(&[w[0], w[1]]),
        ArrowKind::NonstandardDotted,
    ));
    Ok(Pattern {
        character: *ic,
        nodes,
        arrows,
        cube_diagonal_nontrivial: false,
    })
}

/// Two repeated values `r1 > r2` and simple values `x > y`: a single arrow
/// `(r1 r2 y | r1 r2 x) → (r1 r2 x | r1 r2 y)` of order `x − y`.
pub fn sing2_pattern(ic: &InfChar) -> Result<Pattern, PatternError> {
    require(ic, Singularity::Sing2)?;
    let rep = ic.repeated_values();
    let simple = ic.simple_values();
    let values = ic.values();
    let low = weight_with_first(&values, &[rep[0], rep[1], simple[1]]);
    let high = weight_with_first(&values, &[rep[0], rep[1], simple[0]]);
    let mut nodes = alloc::vec![Node { weight: low }, Node { weight: high }];
    nodes.sort();
    Ok(Pattern {
        character: *ic,
        nodes,
        arrows: alloc::vec![Arrow::new(low, high, ArrowKind::Standard)],
        cube_diagonal_nontrivial: false,
    })
}

pub fn pattern_of(ic: &InfChar) -> Pattern {
    match ic.singularity() {
        Singularity::Regular => regular_pattern(ic),
        Singularity::Sing1 => sing1_pattern(ic),
        Singularity::Sing2 => sing2_pattern(ic),
        Singularity::Sing3Plus => Ok(Pattern {
            character: *ic,
            nodes: p_dominant_weights_of(ic).into_iter().map(|weight| Node { weight }).collect(),
            arrows: Vec::new(),
            cube_diagonal_nontrivial: false,
        }),
    }
    .expect("dispatch matches the singularity")
}

/// The arrow with symbol `det^n`: from `(2,1,0 | n+2,n+1,n)` to
/// `(n+2,n+1,n | 2,1,0)` in the character `(n+2,n+1,n,2,1,0)`.
pub fn det_family_arrow(n: i64) -> Option<Arrow> {
    if n < 1 {
        return None;
    }
    let ic = InfChar::new([n + 2, n + 1, n, 2, 1, 0]).ok()?;
    let src = PDomWeight::new([2, 1, 0], [n + 2, n + 1, n]).ok()?;
    let tgt = PDomWeight::new([n + 2, n + 1, n], [2, 1, 0]).ok()?;
    pattern_of(&ic).find_arrow(&src, &tgt).copied()
}

/// A weight of a smaller Grassmannian `Gr(m,m)`, `m ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWeight {
    pub first: Vec<i64>,
    pub second: Vec<i64>,
}

impl ReducedWeight {
    /// Inverse of the reduction: put each of `repeated` back on both sides.
    pub fn insert(&self, repeated: &[i64]) -> PDomWeight {
        let side = |part: &[i64]| {
            let mut v: Vec<i64> = part.iter().chain(repeated).copied().collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            [v[0], v[1], v[2]]
        };
        PDomWeight::new(side(&self.first), side(&self.second)).expect("inserted weight is p-dominant")
    }
}

impl fmt::Display for ReducedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.first.iter().chain(&self.second).all(|v| (0..=9).contains(v)) {
            ""
        } else {
            ","
        };
        let join = |f: &mut fmt::Formatter<'_>, vs: &[i64]| -> fmt::Result {
            for (i, v) in vs.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        };
        f.write_str("(")?;
        join(f, &self.first)?;
        f.write_str("|")?;
        join(f, &self.second)?;
        f.write_str(")")
    }
}

/// Deletes every repeated character value from both triples of `alpha`.
pub fn enright_shelton_reduce(alpha: &PDomWeight) -> Result<ReducedWeight, PatternError> {
    let ic = alpha.inf_char();
    match ic.singularity() {
        Singularity::Sing1 | Singularity::Sing2 => {}
        s => return Err(PatternError::NotSingular(s)),
    }
    let w = alpha.normalized();
    let rep = ic.repeated_values();
    let keep = |t: [i64; 3]| t.into_iter().filter(|v| !rep.contains(v)).collect::<Vec<_>>();
    Ok(ReducedWeight {
        first: keep(w.first()),
        second: keep(w.second()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedArrow {
    pub src: ReducedWeight,
    pub tgt: ReducedWeight,
    pub kind: ArrowKind,
}

/// The regular pattern of `Gr(m,m)` for `m = values.len() / 2 ∈ {1, 2}`:
/// Bruhat covers plus, for `m = 2`, the long arrow `{w3,w4} → {w1,w2}`.
pub fn small_grassmannian_pattern(values: &[i64]) -> (Vec<ReducedWeight>, Vec<ReducedArrow>) {
    let mut v = values.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    let m = v.len() / 2;
    assert!(m == 1 || m == 2, "only Gr(1,1) and Gr(2,2) are needed");
    let node = |first: &[i64]| {
        let mut f = first.to_vec();
        f.sort_unstable_by(|a, b| b.cmp(a));
        let second = v.iter().copied().filter(|x| !f.contains(x)).collect();
        ReducedWeight { first: f, second }
    };
    let mut nodes = Vec::new();
    let mut arrows = Vec::new();
    for sel in k_subsets(v.len(), m) {
        let first: Vec<i64> = sel.iter().map(|&i| v[i]).collect();
        nodes.push(node(&first));
        for cover in gale_covers(&first, &v) {
            arrows.push(ReducedArrow {
                src: node(&first),
                tgt: node(&cover),
                kind: ArrowKind::Standard,
            });
        }
    }
    if m == 2 {
        arrows.push(ReducedArrow {
            src: node(&[v[2], v[3]]),
            tgt: node(&[v[0], v[1]]),
            kind: ArrowKind::NonstandardDotted,
        });
    }
    nodes.sort();
    (nodes, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> PDomWeight {
        s.parse().unwrap()
    }

    fn ch(values: [i64; 6]) -> InfChar {
        InfChar::new(values).unwrap()
    }

    #[test]
    fn covers() {
        let u = [5, 4, 3, 2, 1, 0];
        assert_eq!(gale_covers(&[2, 1, 0], &u), vec![vec![3, 1, 0]]);
        assert!(gale_covers(&[5, 4, 3], &u).is_empty());
        let total: usize = k_subsets(6, 3)
            .iter()
            .map(|s| gale_covers(&s.iter().map(|&i| u[i]).collect::<Vec<_>>(), &u).len())
            .sum();
        assert_eq!(total, 30);
        let u4 = [3, 2, 1, 0];
        let total: usize = k_subsets(4, 2)
            .iter()
            .map(|s| gale_covers(&s.iter().map(|&i| u4[i]).collect::<Vec<_>>(), &u4).len())
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn lowest_regular_pattern() {
        let p = regular_pattern(&ch([5, 4, 3, 2, 1, 0])).unwrap();
        assert_eq!(p.nodes.len(), 20);
        assert_eq!(p.standard_count(), 30);
        assert_eq!(p.nonstandard_count(), 8);
        assert!(p.arrows.iter().filter(|a| a.kind.is_standard()).all(|a| a.order == 1));
        let dotted: Vec<i64> = p
            .arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::NonstandardDotted)
            .map(|a| a.order)
            .collect();
        assert_eq!(dotted, vec![4; 6]);
        let dashed: Vec<i64> = p
            .arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::NonstandardDashed)
            .map(|a| a.order)
            .collect();
        assert_eq!(dashed, vec![7, 9]);
        let a = p.find_arrow(&w("(210|543)"), &w("(430|521)")).unwrap();
        assert_eq!(a.kind, ArrowKind::NonstandardDotted);
        assert_eq!(p.sinks(), vec![w("(543|210)")]);
        assert_eq!(p.sources(), vec![w("(210|543)")]);
        assert!(p.is_acyclic());
        assert!(p.cube_diagonal_nontrivial);
    }

    #[test]
    fn wrong_singularity_is_rejected() {
        assert!(matches!(
            regular_pattern(&ch([4, 3, 2, 2, 1, 0])),
            Err(PatternError::WrongSingularity { .. })
        ));
        assert!(sing1_pattern(&ch([5, 4, 3, 2, 1, 0])).is_err());
        assert!(sing2_pattern(&ch([4, 3, 2, 2, 1, 0])).is_err());
    }

    #[test]
    fn paneitz_pattern() {
        let p = sing1_pattern(&ch([4, 3, 2, 2, 1, 0])).unwrap();
        assert_eq!((p.nodes.len(), p.standard_count(), p.nonstandard_count()), (6, 6, 1));
        assert!(p.contains_node(&w("(210|432)")));
        assert!(p.contains_node(&w("(432|210)")));
        let a = p.find_arrow(&w("(210|432)"), &w("(432|210)")).unwrap();
        assert_eq!((a.kind, a.order), (ArrowKind::NonstandardDotted, 6));
        // the central diamond
        assert_eq!(p.diamonds(true).len(), 1);
    }

    #[test]
    fn sing2_arrows() {
        let p = sing2_pattern(&ch([3, 2, 2, 1, 1, 0])).unwrap();
        assert_eq!(p.arrows.len(), 1);
        assert_eq!((p.arrows[0].src, p.arrows[0].tgt, p.arrows[0].order), (w("(210|321)"), w("(321|210)"), 3));
        let p = sing2_pattern(&ch([3, 3, 2, 2, 1, 0])).unwrap();
        assert_eq!((p.arrows[0].src, p.arrows[0].tgt, p.arrows[0].order), (w("(320|321)"), w("(321|320)"), 1));
    }

    #[test]
    fn dispatch() {
        assert_eq!(pattern_of(&ch([5, 4, 3, 2, 1, 0])).nodes.len(), 20);
        let p = pattern_of(&ch([2, 2, 1, 1, 0, 0]));
        assert_eq!(p.nodes, vec![Node { weight: w("(210|210)") }]);
        assert!(p.arrows.is_empty());
        assert_eq!(pattern_of(&ch([4, 3, 2, 2, 1, 0])).nodes.len(), 6);
    }

    #[test]
    fn det_family() {
        for n in 1..=10 {
            let a = det_family_arrow(n).unwrap();
            assert_eq!(a.order, 3 * n);
        }
        assert_eq!(det_family_arrow(3).unwrap().kind, ArrowKind::NonstandardDashed);
        assert!(det_family_arrow(0).is_none());
    }

    #[test]
    fn reduction() {
        assert_eq!(enright_shelton_reduce(&w("(321|210)")).unwrap().to_string(), "(3|0)");
        assert_eq!(enright_shelton_reduce(&w("(210|432)")).unwrap().to_string(), "(10|43)");
        assert_eq!(
            enright_shelton_reduce(&w("(543|210)")),
            Err(PatternError::NotSingular(Singularity::Regular))
        );
        let r = enright_shelton_reduce(&w("(210|432)")).unwrap();
        assert_eq!(r.insert(&[2]), w("(210|432)"));
    }

    #[test]
    fn small_grassmannians() {
        let (nodes, arrows) = small_grassmannian_pattern(&[3, 0]);
        assert_eq!(nodes.len(), 2);
        assert_eq!(arrows.len(), 1);
        let (nodes, arrows) = small_grassmannian_pattern(&[4, 3, 1, 0]);
        assert_eq!(nodes.len(), 6);
        assert_eq!(arrows.len(), 7);
    }

    #[test]
    fn template_letters() {
        assert_eq!(position_letters(&REGULAR_NONSTANDARD[0].src), "def");
        assert_eq!(position_letters(&REGULAR_NONSTANDARD[0].tgt), "bcf");
        assert_eq!(selector_positions(&[5, 4, 3, 2, 1, 0], &w("(521|430)")), Some([0, 3, 4]));
    }
}
