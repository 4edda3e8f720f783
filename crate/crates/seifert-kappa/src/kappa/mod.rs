//! Graded poset vectors, the doubling maps and projections, and the kappa
//! sets of the Brieskorn families.

pub mod poset;
pub mod sets;

pub use poset::{doubling_index, doubling_map, LiftParity, PosetVector};
pub use sets::{
    count_a, count_b, has_multiple_elements, kappa_offsets, kappa_set, n_vector, n_vector_reversed, KappaOffsets,
    KappaSet, Orientation,
};
