//! Equivariant eta invariants: the odd signature operator, α-invariants of
//! homology lens spaces, and the Dirac correction terms n_L.

pub mod correction;
pub mod signature;

pub use correction::{
    admissible_l, correction_from_dirac_eta, correction_term, correction_vector, dirac_eta_from_corrections,
    plain_correction_term, CorrectionVector, DiracEta,
};
pub use signature::{alpha_invariant_lens, alpha_invariant_seifert, eta_sign, LensSpaceData};
