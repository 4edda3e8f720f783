//! Seifert-fibered homology spheres: data, derived constants and rotation
//! numbers.

pub mod constants;
pub mod data;
pub mod rotation;

pub use constants::{derive_constants, SeifertConstants};
pub use data::{BrieskornFamily, SeifertData};
pub use rotation::{
    brieskorn_components, csd_from_rotation, rotation_number, rotation_table_value, LineBundleData,
    SeifertFibration,
};
