//! Finite-level verification of reductive subgroups that contain regular
//! unipotent elements.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: finite fields, dense matrices, Laurent matrices.
//! * [`rootdata`]: root systems from Cartan matrices, cocharacters.
//! * [`chevalley`]: matrix realizations, group closures, endomorphisms, modules.
//! * [`parabolics`]: Borel and parabolic subgroups as flag configurations, limits.
//! * [`verdicts`]: regularity, irreducibility and complete reducibility checks.
//! * [`harness`]: the scenario registry and machine-readable reports.

pub mod chevalley;
pub mod error;
pub mod exactalg;
pub mod harness;
pub mod parabolics;
pub mod rootdata;
pub mod verdicts;

pub use chevalley::{Endomorphism, GModule, LieElement, MatrixGroup, Realization};
pub use error::{Error, Result};
pub use exactalg::{Fe, Field, LaurentMatrix, Limit, Mat, Subspace};
pub use harness::{Aggregate, Config, Report, Scenario};
pub use parabolics::{LimitClass, ParabolicDescriptor};
pub use rootdata::{CartanType, Cocharacter, RootDatum};
pub use verdicts::{Exactness, Question, Verdict, Witness};

/// Default cap on the number of elements in a group closure.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;
/// Largest module dimension accepted by the submodule enumeration.
pub const MAX_MODULE_DIM: usize = 6;
/// Largest matrix dimension used by the scenarios.
pub const MAX_DIM: usize = 8;
