//! Norms on finitely supported sequences and on `R^d`.

pub mod phi;
pub mod polyhedral;
pub mod sequence;
pub mod spec;

pub use phi::{phi, phi1, phi2, psi, theta, PhiBreakdown};
pub use sequence::{
    dw_norm, dw_norm_with, lorentz_norm, marcinkiewicz_norm, signedsup_norm, DwEvaluation,
    DwStrategy, SignedSupValue,
};
pub use polyhedral::{dual_norm, family_for, polyhedral_norm, DualNorm, FamilyPreset, FunctionalFamily};
pub use spec::NormSpec;
