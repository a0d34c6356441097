//! Exact combinatorics of homomorphisms between generalized Verma modules for
//! the parabolic geometry modelled on the Grassmannian `Gr(3,3)`.
//!
//! Weights live in the ρ-shifted convention throughout: a module of the
//! parabolic subalgebra is labelled by `(a1 a2 a3 | a4 a5 a6)` with both triples
//! strictly decreasing, and the Weyl group acts by permuting the six entries.
//! Everything is integer arithmetic; half-integral grading values are stored
//! doubled.
//!
//! The crate is `no_std` (it needs `alloc`). Parsing and printing of the text
//! formats live here too since they need no IO.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod combinatorics;
pub mod lift;
pub mod pattern;
pub mod replay;
pub mod tables;
pub mod tensor;
pub mod text;
pub mod translation;
pub mod weight;

pub use lift::{lift_status, LiftError, LiftReason, LiftStatus, LiftVerdict};
pub use pattern::{
    det_family_arrow, enright_shelton_reduce, gale_covers, pattern_of, regular_pattern,
    sing1_pattern, sing2_pattern, Arrow, ArrowKind, Node, Pattern, PatternError, ReducedWeight,
};
pub use replay::{replay_th6, replay_th7, verify_paper, PaperVerification, ReplayReport, ReplayStep};
pub use tensor::{
    comp_series, dim_sl3, pieri_sl3, tensor_with_dual, tensor_with_fundamental, Decomposition,
    FundamentalModule, PieceLabel, Summand, TensorError,
};
pub use text::ParseError;
pub use translation::{
    check_equisingular, check_oneway, factors, translate_node, transport_pattern,
    CompositionFactor, Condition, TranslationCertificate, TranslationDirection, TranslationError,
};
pub use weight::{
    alpha_from_lambda, alpha_to_dynkin, dynkin_to_alpha, hom_order, inf_char, is_p_dominant,
    normalize, p_dominant_weights_of, phi, rho, Dynkin, GDomLambda, HalfInt, InfChar, PDomWeight,
    Singularity, Weight6, WeightError,
};
