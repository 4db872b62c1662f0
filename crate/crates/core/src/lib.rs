//! Exact-arithmetic tools for weighted sequence norms, the thresholding
//! greedy algorithm and greedy-type constants.
//!
//! Values are [`rational::Rational`]s throughout. Quantities involving
//! square roots are dyadic approximations, see [`rational::precision_bits`].

pub mod certify;
pub mod constructions;
pub mod error;
pub mod greedy;
pub mod lp;
pub mod norms;
#[doc(hidden)]
pub mod oracle;
pub mod rational;
pub mod repro;
pub mod sample;
pub mod vectors;
pub mod weights;

pub use error::{Error, Result};
pub use norms::NormSpec;
pub use rational::Rational;
pub use vectors::{IndexSet, Sign, SignedSet, SparseVector};
pub use weights::Weight;
