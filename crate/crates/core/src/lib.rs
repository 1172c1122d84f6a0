//! Exact p-adic digit codecs and single-function superposition representations.
//!
//! Any level-K cylinder function of `n` p-adic variables factors through one function of a
//! single variable:
//!
//! - real-valued `f(x₁,…,xₙ) = g(Σ_k q^(−k)·phi_full(x_k))` with `q = n(p−1)+1` and `g`
//!   continuous on `[0,1]` ([`superposition::build_g`]);
//! - p-adic-valued `f(x₁,…,xₙ) = h(Σ_k p^k·ω(x_k))` with `h` continuous on ℤₚ
//!   ([`superposition::build_h`]).
//!
//! Every map is exact on digit strings. The [`verify`] module checks the identities and
//! continuity bounds exhaustively (or by seeded sampling above one million cases).
//!
//! The results for ℤₚ carry over to any ball `B_r` by a shift of `r` digits; only ℤₚ is
//! implemented.

pub mod cantor;
pub mod cli;
pub mod emit;
pub mod error;
pub mod interleave;
pub mod padic;
pub mod superposition;
pub mod verify;

pub use cantor::{
    cantor_decode, cantor_encode, cantor_to_rational, combine, extract, gap_intervals, phi_full,
    spread, CantorValue,
};
pub use error::{Error, Result};
pub use interleave::{deinterleave, deinterleave_k, interleave, omega, InterleavedPadic};
pub use padic::{
    make_padic, padic_add, padic_norm, padic_sub, point_distance, PadicPoint, PadicScalar,
    TruncatedPadicInt,
};
pub use superposition::{
    build_g, build_h, eval_g, superpose1, superpose2, CylinderFunction, GFunction, HFunction,
};
