//! Objects of Ver4+: finite-dimensional modules over `k[d]/d^2`.

mod object;
mod powers;

pub use object::{braiding, parse_object_expr, CatMorphism, Ver4Object};
pub use powers::{ext_power, frobenius, sym_power, sym_power_direct, symmetrizer_image};

#[cfg(test)]
mod tests;
