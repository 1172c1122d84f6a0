//! Single-function representations of cylinder functions on ℤₚⁿ.
//!
//! A real-valued `f` factors as `g(Σ_k q^(−k)·phi_full(x_k))` with `g` continuous on `[0,1]`;
//! a p-adic-valued `f` factors as `h(Σ_k p^k·ω(x_k))` with `h` continuous on ℤₚ.

mod cylinder;
mod g;
mod h;

pub use cylinder::{Builtin, Codomain, CylinderFunction, Value, MAX_TABLE_ENTRIES};
pub use g::{build_g, eval_g, superpose1, superposition_argument, GFunction, GapSegment, Location};
pub use h::{build_h, superpose2, superpose2_with, HFunction, WeightConvention};
