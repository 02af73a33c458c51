//! Density matrices on qubit (x) qudit systems, their block form, and the
//! concrete state families used throughout the crate.

mod density;
mod families;
mod named;

pub use density::{from_block_form, to_block_form, BlochVector, BlockForm, DensityMatrix};
pub use families::{
    build_family23, build_isotropic, build_pps, build_product_p, build_zero_discord,
    family23_admissible, family23_weights, maximally_mixed, pps_singlet_spectrum, singlet,
};
pub use named::{
    build_named, ha24_matrix, ha24_published_spectrum, sigma1, sigma24, varsigma24, FamilySpec,
    FamilyTag, NamedState, NonNormalState,
};
