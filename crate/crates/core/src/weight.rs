//! Weights, p-dominance, grading values and infinitesimal characters.
//!
//! All weights are in the ρ-shifted convention `α = λ + ρ` unless a type says
//! otherwise. Two weights differing by a multiple of `(1,1,1,1,1,1)` describe
//! the same module; the canonical representative has minimum component `0`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::combinatorics::k_subsets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("{0} is not p-dominant (both triples must be strictly decreasing)")]
    NotPDominant(Weight6),
    #[error("{0:?} is not weakly decreasing")]
    NotWeaklyDecreasing([i64; 6]),
    #[error("infinitesimal characters differ: {src} vs {tgt}")]
    CharMismatch { src: InfChar, tgt: InfChar },
    #[error("value {0} occurs more than twice; no p-dominant weight has this character")]
    MultiplicityTooHigh(i64),
}

/// Six integer components of an sl(6) weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight6(pub [i64; 6]);

impl Weight6 {
    pub const fn new(components: [i64; 6]) -> Self {
        Weight6(components)
    }

    pub fn components(&self) -> [i64; 6] {
        self.0
    }

    pub fn first(&self) -> [i64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn second(&self) -> [i64; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    /// Adds `c` to every component.
    pub fn shifted(&self, c: i64) -> Self {
        Weight6(self.0.map(|x| x + c))
    }

    pub fn normalized(&self) -> Self {
        normalize(*self)
    }

    pub fn is_p_dominant(&self) -> bool {
        is_p_dominant(*self)
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_p_dominant(self) -> Result<PDomWeight, WeightError> {
        PDomWeight::from_weight(self)
    }
}

impl Add for Weight6 {
    type Output = Weight6;
    fn add(self, rhs: Weight6) -> Weight6 {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        Weight6(out)
    }
}

impl fmt::Display for Weight6 {
    /// `(c1,c2,c3,c4,c5,c6)`; the alternate flag prints `(c1c2c3c4c5c6)` when
    /// every component is a single digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() && self.0.iter().all(|c| (0..=9).contains(c)) {
            f.write_str("(")?;
            for c in self.0 {
                write!(f, "{c}")?;
            }
            return f.write_str(")");
        }
        write!(
            f,
            "({},{},{},{},{},{})",
            self.0[0], self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]
        )
    }
}

/// A p-dominant weight `(a1 a2 a3 | a4 a5 a6)`: both triples strictly
/// decreasing. Ordered lexicographically by `(first, second)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PDomWeight {
    first: [i64; 3],
    second: [i64; 3],
}

fn strictly_decreasing3(t: &[i64; 3]) -> bool {
    t[0] > t[1] && t[1] > t[2]
}

impl PDomWeight {
    pub fn new(first: [i64; 3], second: [i64; 3]) -> Result<Self, WeightError> {
        if strictly_decreasing3(&first) && strictly_decreasing3(&second) {
            Ok(PDomWeight { first, second })
        } else {
            let w = Weight6([first[0], first[1], first[2], second[0], second[1], second[2]]);
            Err(WeightError::NotPDominant(w))
        }
    }

    pub fn from_weight(w: Weight6) -> Result<Self, WeightError> {
        Self::new(w.first(), w.second())
    }

    pub fn first(&self) -> [i64; 3] {
        self.first
    }

    pub fn second(&self) -> [i64; 3] {
        self.second
    }

    pub fn as_weight6(&self) -> Weight6 {
        let (a, b) = (self.first, self.second);
        Weight6([a[0], a[1], a[2], b[0], b[1], b[2]])
    }

    pub fn shifted(&self, c: i64) -> Self {
        PDomWeight {
            first: self.first.map(|x| x + c),
            second: self.second.map(|x| x + c),
        }
    }

    pub fn normalized(&self) -> Self {
        let min = self.first[2].min(self.second[2]);
        self.shifted(-min)
    }

    /// Equality modulo `(1,1,1,1,1,1)`.
    pub fn equivalent(&self, other: &PDomWeight) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn phi(&self) -> HalfInt {
        phi(self)
    }

    pub fn inf_char(&self) -> InfChar {
        inf_char(self)
    }

    /// Shorthand for the alternate (compact) rendering.
    pub fn compact(&self) -> alloc::string::String {
        alloc::format!("{self:#}")
    }
}

impl fmt::Display for PDomWeight {
    /// `(a1,a2,a3|a4,a5,a6)`; the alternate flag prints `(a1a2a3|a4a5a6)` when
    /// every component is a single digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_barred(f, &self.as_weight6())
    }
}

pub(crate) fn write_barred(f: &mut fmt::Formatter<'_>, w: &Weight6) -> fmt::Result {
    let compact = f.alternate();
    write_barred_to(f, w, compact)
}

pub(crate) fn write_barred_to(out: &mut impl fmt::Write, w: &Weight6, compact: bool) -> fmt::Result {
    let c = w.0;
    if compact && c.iter().all(|x| (0..=9).contains(x)) {
        write!(out, "({}{}{}|{}{}{})", c[0], c[1], c[2], c[3], c[4], c[5])
    } else {
        write!(out, "({},{},{}|{},{},{})", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

/// A g-dominant highest weight `λ` (weakly decreasing), the label of an
/// irreducible sl(6)-module before the ρ-shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GDomLambda([i64; 6]);

impl GDomLambda {
    pub fn new(components: [i64; 6]) -> Result<Self, WeightError> {
        if components.windows(2).all(|w| w[0] >= w[1]) {
            Ok(GDomLambda(components))
        } else {
            Err(WeightError::NotWeaklyDecreasing(components))
        }
    }

    pub fn components(&self) -> [i64; 6] {
        self.0
    }

    pub fn alpha(&self) -> Weight6 {
        alpha_from_lambda(Weight6(self.0))
    }
}

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.doubled),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Singularity {
    Regular,
    Sing1,
    Sing2,
    Sing3Plus,
}

impl Singularity {
    fn from_pairs(pairs: usize) -> Self {
        match pairs {
            0 => Singularity::Regular,
            1 => Singularity::Sing1,
            2 => Singularity::Sing2,
            _ => Singularity::Sing3Plus,
        }
    }

    pub fn is_singular(self) -> bool {
        self != Singularity::Regular
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Singularity::Regular => "Regular",
            Singularity::Sing1 => "Sing1",
            Singularity::Sing2 => "Sing2",
            Singularity::Sing3Plus => "Sing3Plus",
        }
    }
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Infinitesimal character: the multiset of the six components, sorted
/// descending and shifted so the minimum is `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfChar {
    values: [i64; 6],
    singularity: Singularity,
}

impl InfChar {
    /// Builds the character of an arbitrary 6-tuple. Values may repeat at most
    /// twice (anything else is not the character of a p-dominant weight).
    pub fn new(values: [i64; 6]) -> Result<Self, WeightError> {
        let mut v = values;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let min = v[5];
        let v = v.map(|x| x - min);
        let mut pairs = 0;
        let mut i = 0;
        while i < 6 {
            let mut j = i;
            while j + 1 < 6 && v[j + 1] == v[i] {
                j += 1;
            }
            match j - i {
                0 => {}
                1 => pairs += 1,
                _ => return Err(WeightError::MultiplicityTooHigh(v[i])),
            }
            i = j + 1;
        }
        Ok(InfChar {
            values: v,
            singularity: Singularity::from_pairs(pairs),
        })
    }

    pub fn values(&self) -> [i64; 6] {
        self.values
    }

    pub fn singularity(&self) -> Singularity {
        self.singularity
    }

    /// Distinct values, descending.
    pub fn distinct_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.values.to_vec();
        v.dedup();
        v
    }

    /// Values occurring twice, descending.
    pub fn repeated_values(&self) -> Vec<i64> {
        self.values
            .windows(2)
            .filter(|w| w[0] == w[1])
            .map(|w| w[0])
            .collect()
    }

    /// Values occurring once, descending.
    pub fn simple_values(&self) -> Vec<i64> {
        let rep = self.repeated_values();
        self.distinct_values()
            .into_iter()
            .filter(|v| !rep.contains(v))
            .collect()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.values.iter().filter(|&&v| v == value).count()
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&Weight6(self.values), f)
    }
}

/// Dynkin (fundamental-weight) coefficients `[μ1,…,μ5]` of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dynkin(pub [i64; 5]);

impl fmt::Display for Dynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        write!(f, "[{},{},{},{},{}]", m[0], m[1], m[2], m[3], m[4])
    }
}

/// `ρ = (5,4,3,2,1,0)`.
pub const fn rho() -> Weight6 {
    Weight6([5, 4, 3, 2, 1, 0])
}

pub fn alpha_from_lambda(lambda: Weight6) -> Weight6 {
    lambda + rho()
}

/// Shifts `w` by a multiple of `(1,…,1)` so that its minimum component is 0.
pub fn normalize(w: Weight6) -> Weight6 {
    let min = w.0.iter().copied().min().unwrap_or(0);
    w.shifted(-min)
}

pub fn is_p_dominant(w: Weight6) -> bool {
    strictly_decreasing3(&w.first()) && strictly_decreasing3(&w.second())
}

/// Grading value `½(a1+a2+a3−a4−a5−a6) − 9/2` of a p-dominant weight.
pub fn phi(alpha: &PDomWeight) -> HalfInt {
    let s1: i64 = alpha.first.iter().sum();
    let s2: i64 = alpha.second.iter().sum();
    HalfInt::from_doubled(s1 - s2 - 9)
}

pub fn inf_char(alpha: &PDomWeight) -> InfChar {
    InfChar::new(alpha.as_weight6().0).expect("a p-dominant weight has multiplicities at most two")
}

/// Order of a homomorphism `V(src) → V(tgt)`: `φ(tgt) − φ(src)`.
///
/// Always an integer when the characters agree; may be zero or negative for a
/// pair that carries no homomorphism in this direction.
pub fn hom_order(src: &PDomWeight, tgt: &PDomWeight) -> Result<i64, WeightError> {
    let (cs, ct) = (inf_char(src), inf_char(tgt));
    if cs != ct {
        return Err(WeightError::CharMismatch { src: cs, tgt: ct });
    }
    let diff = phi(tgt) - phi(src);
    match diff.to_integer() {
        Some(n) => Ok(n),
        None => panic!("grading difference {diff} between {src} and {tgt} is not an integer"),
    }
}

/// `α1 = 5+μ1+…+μ5, …, α5 = 1+μ5, α6 = 0`.
pub fn dynkin_to_alpha(mu: Dynkin) -> Weight6 {
    let mut alpha = [0i64; 6];
    let mut acc = 0;
    for i in (0..5).rev() {
        acc += mu.0[i] + 1;
        alpha[i] = acc;
    }
    Weight6(alpha)
}

pub fn alpha_to_dynkin(alpha: Weight6) -> Dynkin {
    let a = alpha.0;
    Dynkin(core::array::from_fn(|i| a[i] - a[i + 1] - 1))
}

/// All p-dominant weights with the given character, in ascending
/// lexicographic order of `(first, second)`.
pub fn p_dominant_weights_of(ic: &InfChar) -> Vec<PDomWeight> {
    let v = ic.values;
    let mut out: Vec<PDomWeight> = Vec::new();
    for sel in k_subsets(6, 3) {
        let first = [v[sel[0]], v[sel[1]], v[sel[2]]];
        let mut rest = (0..6).filter(|i| !sel.contains(i)).map(|i| v[i]);
        let second = [rest.next().unwrap(), rest.next().unwrap(), rest.next().unwrap()];
        if let Ok(w) = PDomWeight::new(first, second) {
            out.push(w);
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pw(first: [i64; 3], second: [i64; 3]) -> PDomWeight {
        PDomWeight::new(first, second).unwrap()
    }

    #[test]
    fn rho_and_lambda_shift() {
        assert_eq!(rho(), Weight6([5, 4, 3, 2, 1, 0]));
        assert!(rho().is_strictly_decreasing());
        assert_eq!(alpha_from_lambda(Weight6([0; 6])), rho());
        assert_eq!(
            alpha_from_lambda(Weight6([0, -2, -2, 2, 2, 0])),
            Weight6([5, 2, 1, 4, 3, 0])
        );
        assert_eq!(
            alpha_from_lambda(Weight6([-3, -3, -3, 3, 3, 3])),
            Weight6([2, 1, 0, 5, 4, 3])
        );
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize(Weight6([1, 0, -1, 2, 1, 0])), Weight6([2, 1, 0, 3, 2, 1]));
        assert_eq!(normalize(rho()), rho());
        let w = Weight6([7, -3, 2, 2, 9, -3]);
        assert_eq!(normalize(normalize(w)), normalize(w));
    }

    #[test]
    fn p_dominance() {
        assert!(is_p_dominant(Weight6([5, 2, 1, 4, 3, 0])));
        assert!(!is_p_dominant(Weight6([5, 2, 1, 4, 4, 0])));
        assert!(!is_p_dominant(Weight6([1, 2, 5, 4, 3, 0])));
        assert!(matches!(
            PDomWeight::new([1, 2, 5], [4, 3, 0]),
            Err(WeightError::NotPDominant(_))
        ));
    }

    #[test]
    fn grading_values() {
        assert_eq!(phi(&pw([5, 4, 3], [2, 1, 0])), HalfInt::ZERO);
        assert_eq!(phi(&pw([2, 1, 0], [5, 4, 3])), HalfInt::from_int(-9));
        assert_eq!(phi(&pw([2, 1, 0], [3, 2, 1])), HalfInt::from_int(-6));
        assert_eq!(phi(&pw([4, 1, 0], [2, 1, 0])).to_string(), "-7/2");
    }

    #[test]
    fn orders() {
        let a = pw([2, 1, 0], [3, 2, 1]);
        let b = pw([3, 2, 1], [2, 1, 0]);
        assert_eq!(hom_order(&a, &b), Ok(3));
        assert_eq!(hom_order(&pw([2, 1, 0], [5, 4, 3]), &pw([5, 4, 3], [2, 1, 0])), Ok(9));
        assert_eq!(hom_order(&pw([5, 4, 3], [2, 1, 0]), &pw([5, 4, 3], [2, 1, 0])), Ok(0));
        assert!(matches!(
            hom_order(&a, &pw([5, 4, 3], [2, 1, 0])),
            Err(WeightError::CharMismatch { .. })
        ));
    }

    #[test]
    fn characters() {
        let c = inf_char(&pw([5, 2, 1], [4, 3, 0]));
        assert_eq!(c.values(), [5, 4, 3, 2, 1, 0]);
        assert_eq!(c.singularity(), Singularity::Regular);
        let c = inf_char(&pw([2, 1, 0], [3, 2, 1]));
        assert_eq!(c.values(), [3, 2, 2, 1, 1, 0]);
        assert_eq!(c.singularity(), Singularity::Sing2);
        let c = inf_char(&pw([2, 1, 0], [4, 3, 2]));
        assert_eq!(c.values(), [4, 3, 2, 2, 1, 0]);
        assert_eq!(c.singularity(), Singularity::Sing1);
        assert_eq!(c.repeated_values(), alloc::vec![2]);
        assert_eq!(c.simple_values(), alloc::vec![4, 3, 1, 0]);
        assert_eq!(
            InfChar::new([2, 2, 1, 1, 0, 0]).unwrap().singularity(),
            Singularity::Sing3Plus
        );
        assert_eq!(InfChar::new([3, 3, 3, 1, 1, 0]), Err(WeightError::MultiplicityTooHigh(3)));
    }

    #[test]
    fn dynkin_conversion() {
        let a = dynkin_to_alpha(Dynkin([0, 0, -4, 0, 0]));
        assert_eq!(a, Weight6([1, 0, -1, 2, 1, 0]));
        assert_eq!(normalize(a), Weight6([2, 1, 0, 3, 2, 1]));
        let a = dynkin_to_alpha(Dynkin([0, 1, -4, 0, 0]));
        assert_eq!(a, Weight6([2, 1, -1, 2, 1, 0]));
        assert_eq!(normalize(a), Weight6([3, 2, 0, 3, 2, 1]));
        assert_eq!(dynkin_to_alpha(Dynkin([0; 5])), rho());
        assert_eq!(alpha_to_dynkin(Weight6([3, 2, 0, 3, 2, 1])), Dynkin([0, 1, -4, 0, 0]));
    }

    #[test]
    fn p_dominant_enumeration() {
        let reg = InfChar::new([5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(p_dominant_weights_of(&reg).len(), 20);
        let s2 = InfChar::new([3, 2, 2, 1, 1, 0]).unwrap();
        assert_eq!(
            p_dominant_weights_of(&s2),
            alloc::vec![pw([2, 1, 0], [3, 2, 1]), pw([3, 2, 1], [2, 1, 0])]
        );
        let s1 = InfChar::new([4, 3, 2, 2, 1, 0]).unwrap();
        assert_eq!(p_dominant_weights_of(&s1).len(), 6);
        let s3 = InfChar::new([2, 2, 1, 1, 0, 0]).unwrap();
        assert_eq!(p_dominant_weights_of(&s3), alloc::vec![pw([2, 1, 0], [2, 1, 0])]);
    }

    #[test]
    fn display_forms() {
        let w = pw([5, 2, 1], [4, 3, 0]);
        assert_eq!(w.to_string(), "(5,2,1|4,3,0)");
        assert_eq!(alloc::format!("{w:#}"), "(521|430)");
        let w = pw([12, 2, -1], [4, 3, 0]);
        assert_eq!(alloc::format!("{w:#}"), "(12,2,-1|4,3,0)");
        assert_eq!(HalfInt::from_doubled(-9).to_string(), "-9/2");
        assert_eq!(Dynkin([0, 1, -4, 0, 0]).to_string(), "[0,1,-4,0,0]");
    }
}
