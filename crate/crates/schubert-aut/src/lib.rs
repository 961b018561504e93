//! Exact combinatorial verification that every parabolic subgroup P ⊋ B of
//! a simple adjoint group is the connected automorphism group of a Schubert
//! variety X(w), by constructing an explicit witness word w and checking
//! three certifying conditions:
//!
//! 1. the stabilizer of X(w) is P (left descents of w),
//! 2. w⁻¹ sends the highest root to a negative root, and
//! 3. in three exceptional families, H⁰(w, 𝔤/𝔟) = 𝔤 as T-modules,
//!    computed by iterated single-reflection cohomology on atom multisets.
//!
//! All arithmetic is exact (rational coordinates in the simple-root basis);
//! there is no floating point anywhere.

pub mod cli;
pub mod demazure;
pub mod gmod;
pub mod pipeline;
pub mod rootsys;
pub mod weyl;

pub use rootsys::{RootSystem, RootSystemError, Weight};
pub use weyl::{WeylWord, WeylError};
