//! Braided-commutative coordinate rings over F2.
//!
//! Elements satisfy `ab = ba + a'b'` where `'` is the derivation `d`. Primed
//! generators are central and square to zero.

mod gens;
mod matrix;
mod parse;
mod poly;

pub use gens::{Gen, GenInfo, GeneratorSet};
pub use matrix::PolyMatrix;
pub use parse::parse_poly;
pub use poly::{mul_monomials, split_by_tag, BraidedPoly, Monomial, Substitution};

#[cfg(test)]
mod tests;
