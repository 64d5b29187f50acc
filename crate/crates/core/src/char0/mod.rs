//! Exact `ℚ(√2)` arithmetic, super Hopf presentations and their reduction
//! modulo `√2` to Hopf algebras in Ver4+.

mod degenerations;
mod presentation;
mod qsqrt2;
mod superpoly;

pub use degenerations::{
    aff01, degeneration, ga11, reduce_supervector, s11, Degeneration, DegenerationReport, DEGENERATION_KEYS,
};
pub use presentation::{
    change_basis_and_reduce, compare_presentations, Comparison, Lattice, LatticeMonomial, ReducedPoly,
    ReducedPresentation, SuperGen, SuperHopfPresentation, SERIES_PRECISION,
};
pub use qsqrt2::QSqrt2;
pub use superpoly::{SGen, SuperMonomial, SuperPoly};

#[cfg(test)]
mod tests;
