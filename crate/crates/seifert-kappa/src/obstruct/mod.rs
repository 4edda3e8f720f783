//! Equivariant fixed-point data, signature-defect vectors, the relative
//! 10/8-type inequalities and the smoothability verdicts built on them.

pub mod bounds;
pub mod catalog;
pub mod defect;
pub mod fixed_points;
pub mod inequality;

pub use bounds::{
    action_manifold, comparing_identity, expected_comparing_offset, h_cobordism_check, min_free_stabilizations,
    stabilized_verdict, ActionFamily, ComparingIdentity, HCobordismReport, StabilizationBound,
};
pub use catalog::{
    cobordism_sharpness, cobordism_verdict, manolescu_kappa, nonextension_verdict, sharpness, Boundary, CatalogKind,
    CobordismEntry, ManifoldCatalogEntry, VerdictReport,
};
pub use defect::{sigma0_via_cosecant, sigma_vector};
pub use fixed_points::{
    canonical_point, e8_construction, e8_fixed_point_data, free_stabilize, ht_stabilize, ht_stabilize_manifold,
    nucleus_fixed_point_data, p_family_fixed_point_data, E8Construction, EquivariantManifoldData, FixedPointData,
};
pub use inequality::{
    check_cobordism, check_filling, cobordism_constant, filling_constant, filling_verdict, ElementCheck, FillingReport,
    Verdict,
};
