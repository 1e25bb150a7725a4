//! Code constructions: products, permutation codes, polynomial codes,
//! classical codes, codes in Johnson, Kneser and geometric graphs, and
//! projection.

mod classical;
mod geometry;
mod groups;
mod johnson;
mod permcode;
mod polynomial;
mod product;
mod projection;
pub mod wreath;

pub use classical::{catalog, classical_code, cyclic_generator, hadamard12_matrix, repetition, CatalogEntry, CLASSICAL_NAMES};
pub use geometry::{
    find_sharply_transitive_sl2, gabidulin, incidence_perm, incidence_perm_semilinear, is_sharply_transitive_sl2, mat2_closure, partial_ovoid_group,
    regular_spread_code, shipped_sl2_subgroup, spread_group, w3_partial_ovoid, w3_partial_ovoid_with, Mat2,
};
pub use groups::{builtin_group, golay23_aut, golay24_aut, mathieu23, mathieu24, rep_full, rep_top_only, BUILTIN_GROUPS};
pub use permcode::{
    check_permcode_identities, coset_representation, find_inequivalent_action, holomorph_autos, shipped_twisted_pair, TWISTED_GROUPS,
    is_equivalent_to_natural, perm_word, permutation_code, sigma, twisted_permutation_code, x_diag, Representation,
};
pub use polynomial::{affine_code_group, affine_index, affine_point, agl, gl_generators, grm, hamming_code, is_cyclic, prm, projective_code_group};
pub use johnson::{codeword_sets, cycle_code, cycle_code_group, is_tetrahedron, johnson_subset_code, kneser_int, odd_imp, split_symmetric, tetrahedron_code, tetrahedron_group, SubsetMode};
pub use product::{prod_code, prod_tkh, rep_code, rep_nq};
pub use projection::{project_code, project_group};
pub use wreath::{diag_subgroup, hamming_automorphisms, top_subgroup, translation_group, wreath_group, OnHamming, WreathElement};
