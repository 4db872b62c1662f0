use serde::{Deserialize, Deserializer, Serialize};

use crate::error::Result;
use crate::norms::polyhedral::{FamilyPreset, FunctionalFamily};
use crate::norms::sequence::{dw_norm, lorentz_norm, marcinkiewicz_norm, signedsup_norm};
use crate::rational::Rational;
use crate::vectors::SparseVector;
use crate::weights::Weight;

/// Which norm to evaluate.
///
/// JSON uses a `kind` tag, e.g. `{"kind":"dw","weight":{"prefix":["1"],"tail":"1/3"}}`.
/// A polyhedral family is either spelled out as `{"d":..,"functionals":..}`
/// or named by a preset such as `{"preset":"bad_dual","d":3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormSpec {
    Dw { weight: Weight },
    Lorentz { weight: Weight },
    Marcinkiewicz { weight: Weight },
    SignedSup { weight: Weight },
    Polyhedral {
        #[serde(deserialize_with = "family_or_preset")]
        family: FunctionalFamily,
    },
}

impl NormSpec {
    pub fn dw(weight: Weight) -> Self {
        NormSpec::Dw { weight }
    }

    pub fn lorentz(weight: Weight) -> Self {
        NormSpec::Lorentz { weight }
    }

    pub fn marcinkiewicz(weight: Weight) -> Self {
        NormSpec::Marcinkiewicz { weight }
    }

    pub fn signed_sup(weight: Weight) -> Self {
        NormSpec::SignedSup { weight }
    }

    pub fn polyhedral(family: FunctionalFamily) -> Self {
        NormSpec::Polyhedral { family }
    }

    pub fn preset(preset: &FamilyPreset) -> Result<Self> {
        Ok(NormSpec::Polyhedral {
            family: FunctionalFamily::from_preset(preset)?,
        })
    }

    /// Fails only for polyhedral norms, when `f` leaves `R^d`.
    pub fn norm(&self, f: &SparseVector) -> Result<Rational> {
        Ok(match self {
            NormSpec::Dw { weight } => dw_norm(weight, f),
            NormSpec::Lorentz { weight } => lorentz_norm(weight, f),
            NormSpec::Marcinkiewicz { weight } => marcinkiewicz_norm(weight, f),
            NormSpec::SignedSup { weight } => signedsup_norm(weight, f).value,
            NormSpec::Polyhedral { family } => family.norm_sparse(f)?,
        })
    }

    pub fn weight(&self) -> Option<&Weight> {
        match self {
            NormSpec::Dw { weight }
            | NormSpec::Lorentz { weight }
            | NormSpec::Marcinkiewicz { weight }
            | NormSpec::SignedSup { weight } => Some(weight),
            NormSpec::Polyhedral { .. } => None,
        }
    }

    pub fn family(&self) -> Option<&FunctionalFamily> {
        match self {
            NormSpec::Polyhedral { family } => Some(family),
            _ => None,
        }
    }

    /// `Some(d)` for norms living on `R^d`.
    pub fn dimension(&self) -> Option<usize> {
        self.family().map(FunctionalFamily::dim)
    }

    /// False when the weight carries dyadic approximations.
    pub fn is_exact(&self) -> bool {
        self.weight().is_none_or(Weight::is_exact)
    }

    /// Every norm here except the polyhedral ones is invariant under
    /// permutations of the coordinates.
    pub fn is_symmetric(&self) -> bool {
        self.weight().is_some()
    }

    pub fn label(&self) -> String {
        match self {
            NormSpec::Dw { weight } => format!("D_w[{weight}]"),
            NormSpec::Lorentz { weight } => format!("lorentz[{weight}]"),
            NormSpec::Marcinkiewicz { weight } => format!("marcinkiewicz[{weight}]"),
            NormSpec::SignedSup { weight } => format!("signed-sup[{weight}]"),
            NormSpec::Polyhedral { family } => {
                format!("polyhedral[d={}, {} functionals]", family.dim(), family.len())
            }
        }
    }
}

fn family_or_preset<'de, D: Deserializer<'de>>(d: D) -> Result<FunctionalFamily, D::Error> {
    let raw = serde_json::Value::deserialize(d)?;
    if raw.get("preset").is_some() {
        let preset: FamilyPreset = serde_json::from_value(raw).map_err(serde::de::Error::custom)?;
        FunctionalFamily::from_preset(&preset).map_err(serde::de::Error::custom)
    } else {
        serde_json::from_value(raw).map_err(serde::de::Error::custom)
    }
}
