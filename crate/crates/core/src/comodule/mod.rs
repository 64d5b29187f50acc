//! Comodules over the braided coordinate rings: coaction matrices, catalogs
//! of irreducibles, composition series and weight decompositions.

mod blocks;
mod core;
mod ext;
mod gl1p;
mod glnp;
mod glp;
mod label;
mod regular;
mod series;

pub use self::core::{intertwiner_space, Comodule, Validation};
pub use blocks::{block_check, block_generators, complement, subcomodules, BlockCheck, ExtensionCheck};
pub use ext::{ext1, ext1_from_trivial, Cohomology, degree_zero_monomials, is_nonzero_class, skew_primitives, SkewPrimitives, DEFAULT_CUTOFF};
pub use gl1p::{
    b_semi_invariants, base_irrep, character_dim, character_of, derive_xi_chi_invariant, format_character,
    gl1p, gl1p_highest_weight, gl1p_invariant, gl1p_irrep, levi_to_glp, levi_weights, printed_xi_chi_invariant,
    twist_a2, twist_chi, twist_xi_chi, weight_candidates, weight_decomposition, Character, Gl1pCalculus,
    WeightSpace, LEVI,
};
pub use glnp::{
    glnp_highest_weight, glnp_highest_weight_module, glnp_irrep, glnp_leading_term, highest_weight, p_poly,
    steinberg_check, torus_weights, HighestWeight, SteinbergCheck, GENERATED_LIMIT,
};
pub use glp::{chi, chi_poly, ga_irreps, glp_irrep, h1_irrep, m1_irrep, sym_matrix, sym_power_rep, xi, xi_poly};
pub use label::{combine_glp, parse_glp_factors, parse_tuple, Gl1pLabel, GlpLabel, IrrepLabel};
pub use regular::{regular_subcomodule, PolySpan};
pub use series::{
    composition_factors, composition_series, fingerprint, identify, identify_glp, identify_levi,
    minimal_subcomodule, simple_subcomodules, admits_series, torus_degree, Fingerprint, DEFAULT_BOUND,
};

#[cfg(test)]
mod tests;
