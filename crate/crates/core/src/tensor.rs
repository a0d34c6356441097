//! Tensor products of irreducible p-modules with the fundamental modules
//! `Λ^k C^6`.
//!
//! Restricted to the parabolic, `Λ^k` has the composition series
//! `⊕_{i+j=k} Λ^i ⊠ Λ^j`. Each piece `(i,j)` acts on `(abc|def)` by adding one
//! to `i` entries of the first triple and `j` entries of the second (the sl(3)
//! Pieri rule in ρ-shifted coordinates); results with a tie are dropped.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::combinatorics::{binomial, k_subsets};
use crate::weight::{phi, HalfInt, PDomWeight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("fundamental module index {0} is outside 1..=5")]
    BadK(i64),
}

/// `Λ^k` of the defining representation, `1 ≤ k ≤ 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalModule(u8);

impl FundamentalModule {
    pub fn new(k: i64) -> Result<Self, TensorError> {
        if (1..=5).contains(&k) {
            Ok(FundamentalModule(k as u8))
        } else {
            Err(TensorError::BadK(k))
        }
    }

    pub fn k(self) -> usize {
        usize::from(self.0)
    }

    pub fn dual(self) -> Self {
        FundamentalModule(6 - self.0)
    }

    pub fn dimension(self) -> u64 {
        binomial(6, u64::from(self.0))
    }

    /// Highest weight `(1^k 0^{6-k})`.
    pub fn lambda(self) -> crate::weight::GDomLambda {
        let k = self.k();
        crate::weight::GDomLambda::new(core::array::from_fn(|i| i64::from(i < k)))
            .expect("(1^k 0^(6-k)) is weakly decreasing")
    }

    pub fn comp_series(self) -> Vec<PieceLabel> {
        let k = self.0;
        (0..=3u8)
            .rev()
            .filter(|&i| k >= i && k - i <= 3)
            .map(|i| PieceLabel { i, j: k - i })
            .collect()
    }
}

impl fmt::Display for FundamentalModule {
    /// The highest weight, e.g. `(110000)` for `Λ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..6 {
            f.write_str(if i < self.k() { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// The g0-irreducible piece `Λ^i ⊠ Λ^j` of a fundamental module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceLabel {
    pub i: u8,
    pub j: u8,
}

impl PieceLabel {
    /// Change of the grading value, `(i − j)/2`.
    pub fn phi_shift(self) -> HalfInt {
        HalfInt::from_doubled(i64::from(self.i) - i64::from(self.j))
    }

    pub fn dimension(self) -> u64 {
        binomial(3, u64::from(self.i)) * binomial(3, u64::from(self.j))
    }
}

impl fmt::Display for PieceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Composition series of `Λ^k`, ordered by descending `i`.
pub fn comp_series(k: i64) -> Result<Vec<PieceLabel>, TensorError> {
    Ok(FundamentalModule::new(k)?.comp_series())
}

/// `t ⊗ Λ^j` for sl(3) in ρ-shifted coordinates: add one to each `j`-subset of
/// positions and keep strictly decreasing results. Descending lexicographic.
pub fn pieri_sl3(t: [i64; 3], j: usize) -> Vec<[i64; 3]> {
    let mut out: Vec<[i64; 3]> = k_subsets(3, j)
        .into_iter()
        .map(|sel| core::array::from_fn(|p| t[p] + i64::from(sel.contains(&p))))
        .filter(|n: &[i64; 3]| n[0] > n[1] && n[1] > n[2])
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Weyl dimension of the sl(3)-module with ρ-shifted weight `t`; zero when
/// `t` is not strictly decreasing.
pub fn dim_sl3(t: [i64; 3]) -> i64 {
    if !(t[0] > t[1] && t[1] > t[2]) {
        return 0;
    }
    (t[0] - t[1]) * (t[1] - t[2]) * (t[0] - t[2]) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Summand {
    pub weight: PDomWeight,
    pub piece: PieceLabel,
    pub phi: HalfInt,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:#} piece={} phi={}/2",
            self.weight,
            self.piece,
            self.phi.doubled()
        )
    }
}

/// `base ⊗ module` as a list of irreducible p-modules, grouped by piece
/// (descending `i`) and descending lexicographic within a piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub base: PDomWeight,
    pub module: FundamentalModule,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn weights(&self) -> impl Iterator<Item = PDomWeight> + '_ {
        self.summands.iter().map(|s| s.weight)
    }

    /// The summands shifted by `−(1,…,1)`. For a dual module `Λ^{6−k}` this
    /// reads each summand as a decrement of `base`.
    pub fn shifted_summands(&self) -> Vec<Summand> {
        self.summands
            .iter()
            .map(|s| Summand {
                weight: s.weight.shifted(-1),
                ..*s
            })
            .collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.summands {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn tensor_with_fundamental(alpha: &PDomWeight, k: i64) -> Result<Decomposition, TensorError> {
    let module = FundamentalModule::new(k)?;
    Ok(decompose(alpha, module))
}

/// `α ⊗ (Λ^k)^* = α ⊗ Λ^{6−k}`, in raw coordinates.
pub fn tensor_with_dual(alpha: &PDomWeight, k: i64) -> Result<Decomposition, TensorError> {
    let module = FundamentalModule::new(k)?.dual();
    Ok(decompose(alpha, module))
}

pub(crate) fn decompose(alpha: &PDomWeight, module: FundamentalModule) -> Decomposition {
    let base_phi = phi(alpha);
    let mut summands = Vec::new();
    for piece in module.comp_series() {
        let firsts = pieri_sl3(alpha.first(), usize::from(piece.i));
        let seconds = pieri_sl3(alpha.second(), usize::from(piece.j));
        for a in &firsts {
            for b in &seconds {
                let weight = PDomWeight::new(*a, *b).expect("Pieri results are strictly decreasing");
                summands.push(Summand {
                    weight,
                    piece,
                    phi: base_phi + piece.phi_shift(),
                });
            }
        }
    }
    for (n, s) in summands.iter().enumerate() {
        assert!(
            summands[n + 1..].iter().all(|t| t.weight != s.weight),
            "{alpha} ⊗ {module} is not multiplicity free"
        );
    }
    Decomposition {
        base: *alpha,
        module,
        summands,
    }
}
