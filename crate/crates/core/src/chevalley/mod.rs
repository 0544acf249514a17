//! Matrix realizations of the groups, elements, endomorphisms and modules
//! that the verdicts operate on.

pub mod constructions;
pub mod endo;
pub mod group;
pub mod lie;
pub mod module;
pub mod realization;

pub use constructions::{sl2_torus_normalizer, sl2_wreath, twisted_diagonal_contains, twisted_diagonal_subgroup};
pub use endo::{apply_endo, compose_endo, fixed_point_subgroup, Endomorphism};
pub use group::{block_diag, block_swap, default_cap, group_closure, Closure, MatrixGroup};
pub use lie::LieElement;
pub use module::{a5_generators, a5_permutation_module, adjoint_sl2_image, adjoint_sl2_module, GModule};
pub use realization::{Block, BlockKind, Realization};

use crate::error::Result;
use crate::exactalg::{Fe, Field, Mat};
use crate::rootdata::RootDatum;

/// `x_alpha(s)` for root index `alpha` of the realization's datum.
pub fn root_group_element(datum: &RootDatum, real: &Realization, alpha: usize, s: Fe, f: &Field) -> Result<Mat> {
    if real.datum().as_ref() != datum || alpha >= datum.num_roots() {
        return Err(crate::Error::UnsupportedRealization(format!("{} does not realize {}", real, datum.label())));
    }
    Ok(real.root_element(alpha, s, f))
}

/// `prod_{alpha simple} x_alpha(1)`.
pub fn standard_regular_unipotent(real: &Realization, f: &Field) -> Mat {
    real.standard_regular_unipotent(f)
}
