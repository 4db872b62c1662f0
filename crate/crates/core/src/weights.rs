//! Nonincreasing weights `w = (w_j)` with `w_1 = 1`, their primitive sums
//! `s_n = w_1 + ... + w_n` and the tail limit `w_inf = lim w_j`.
//!
//! Two representations are supported. Eventually-constant weights
//! (a finite prefix followed by a constant rational tail) are exact.
//! Generator weights are given by a closed-form primitive such as
//! `s_n = sqrt(n)`; their values are dyadic approximations and every
//! quantity derived from them is flagged approximate.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Horizon up to which generator weights are checked for positivity and
/// monotonicity at construction.
pub const DEFAULT_VALIDATION_HORIZON: usize = 10_000;

/// Closed-form primitive weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorRule {
    /// `s_n = sqrt(n)`, the primitive weight of the `l_{2,1}` Lorentz space.
    SqrtPrimitive,
}

impl GeneratorRule {
    fn primitive(self, n: usize, bits: u32) -> Rational {
        match self {
            GeneratorRule::SqrtPrimitive => rational::sqrt_dyadic(&rational::int(n as i64), bits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    EventuallyConstant { prefix: Vec<Rational>, tail: Rational },
    Generator { rule: GeneratorRule, limit: Rational, bits: u32 },
}

/// A weight sequence. Immutable once constructed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WeightJson", into = "WeightJson")]
pub struct Weight {
    repr: Repr,
}

impl Weight {
    /// `(prefix..., tail, tail, ...)`. Trailing prefix entries equal to the
    /// tail are dropped so the stored prefix is minimal.
    pub fn eventually_constant(prefix: Vec<Rational>, tail: Rational) -> Result<Self> {
        if !tail.is_positive() {
            return Err(Error::InvalidWeight(format!(
                "tail must be positive, got {}",
                rational::format(&tail)
            )));
        }
        let mut prefix = prefix;
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        let first = prefix.first().unwrap_or(&tail);
        if !first.is_one() {
            return Err(Error::InvalidWeight(format!(
                "w_1 must be 1, got {}",
                rational::format(first)
            )));
        }
        for (j, pair) in prefix.windows(2).enumerate() {
            if pair[1] > pair[0] {
                return Err(Error::InvalidWeight(format!(
                    "not nonincreasing at j = {}",
                    j + 1
                )));
            }
        }
        if let Some(last) = prefix.last() {
            if *last < tail {
                return Err(Error::InvalidWeight("prefix ends below the tail".into()));
            }
        }
        Ok(Weight {
            repr: Repr::EventuallyConstant { prefix, tail },
        })
    }

    /// `(1, omega, omega, ...)` for `0 < omega <= 1`.
    pub fn one_then(omega: Rational) -> Result<Self> {
        Self::eventually_constant(vec![Rational::one()], omega)
    }

    /// The constant weight `(1, 1, 1, ...)`.
    pub fn constant() -> Self {
        Self::eventually_constant(Vec::new(), Rational::one()).expect("constant weight is valid")
    }

    /// Generator weight validated up to [`DEFAULT_VALIDATION_HORIZON`].
    pub fn generator(rule: GeneratorRule, limit: Rational, bits: u32) -> Result<Self> {
        Self::generator_checked(rule, limit, bits, DEFAULT_VALIDATION_HORIZON)
    }

    /// `s_n = sqrt(n)` at the configured precision.
    pub fn sqrt_primitive() -> Self {
        Self::generator(GeneratorRule::SqrtPrimitive, Rational::zero(), rational::precision_bits())
            .expect("sqrt primitive weight is valid")
    }

    pub fn generator_checked(
        rule: GeneratorRule,
        limit: Rational,
        bits: u32,
        horizon: usize,
    ) -> Result<Self> {
        if limit.is_negative() {
            return Err(Error::InvalidWeight("declared limit is negative".into()));
        }
        let weight = Weight {
            repr: Repr::Generator { rule, limit, bits },
        };
        if !weight.value(1).is_one() {
            return Err(Error::InvalidWeight("w_1 must be 1".into()));
        }
        let mut prev = weight.value(1);
        for j in 2..=horizon.max(2) {
            let w = weight.value(j);
            if !w.is_positive() {
                return Err(Error::InvalidWeight(format!("w_{j} is not positive")));
            }
            if w > prev {
                return Err(Error::InvalidWeight(format!("not nonincreasing at j = {}", j - 1)));
            }
            if w < *weight.tail_limit() {
                return Err(Error::InvalidWeight(format!("w_{j} lies below the declared limit")));
            }
            prev = w;
        }
        Ok(weight)
    }

    /// `w_j` for `j >= 1`.
    pub fn value(&self, j: usize) -> Rational {
        assert!(j >= 1, "weights are indexed from 1");
        match &self.repr {
            Repr::EventuallyConstant { prefix, tail } => prefix.get(j - 1).unwrap_or(tail).clone(),
            Repr::Generator { rule, bits, .. } => {
                rule.primitive(j, *bits) - rule.primitive(j - 1, *bits)
            }
        }
    }

    /// The primitive weight `s_n`; `s_0 = 0`.
    pub fn primitive(&self, n: usize) -> Rational {
        match &self.repr {
            Repr::EventuallyConstant { prefix, tail } => {
                let p = prefix.len();
                if n <= p {
                    prefix[..n].iter().sum()
                } else {
                    prefix.iter().sum::<Rational>() + tail * rational::int((n - p) as i64)
                }
            }
            Repr::Generator { rule, bits, .. } => rule.primitive(n, *bits),
        }
    }

    /// `s_n / n`, the concentration factor; `n >= 1`.
    pub fn average(&self, n: usize) -> Rational {
        assert!(n >= 1, "s_n / n needs n >= 1");
        self.primitive(n) / rational::int(n as i64)
    }

    /// The declared limit `w_inf`.
    pub fn tail_limit(&self) -> &Rational {
        match &self.repr {
            Repr::EventuallyConstant { tail, .. } => tail,
            Repr::Generator { limit, .. } => limit,
        }
    }

    /// Length of the stored prefix for eventually-constant weights.
    pub fn prefix_len(&self) -> Option<usize> {
        match &self.repr {
            Repr::EventuallyConstant { prefix, .. } => Some(prefix.len()),
            Repr::Generator { .. } => None,
        }
    }

    /// Whether values are exact (eventually-constant) rather than dyadic approximations.
    pub fn is_exact(&self) -> bool {
        matches!(self.repr, Repr::EventuallyConstant { .. })
    }

    /// `(1, 1, 1, ...)`.
    pub fn is_constant(&self) -> bool {
        matches!(&self.repr, Repr::EventuallyConstant { prefix, tail } if prefix.is_empty() && tail.is_one())
    }

    /// `sum_k values[k] * w_{start + k}`.
    pub fn weighted_sum_from(&self, start: usize, values: &[Rational]) -> Rational {
        assert!(start >= 1);
        match &self.repr {
            Repr::EventuallyConstant { prefix, tail } => {
                let p = prefix.len();
                let mut head = Rational::zero();
                let mut rest = Rational::zero();
                for (k, v) in values.iter().enumerate() {
                    let slot = start + k;
                    if slot <= p {
                        head += v * &prefix[slot - 1];
                    } else {
                        rest += v;
                    }
                }
                head + rest * tail
            }
            Repr::Generator { .. } => values
                .iter()
                .enumerate()
                .map(|(k, v)| v * self.value(start + k))
                .sum(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::EventuallyConstant { prefix, tail } => {
                write!(f, "(")?;
                for q in prefix {
                    write!(f, "{}, ", rational::format(q))?;
                }
                write!(f, "{}, ...)", rational::format(tail))
            }
            Repr::Generator { rule, limit, bits } => write!(
                f,
                "generator {:?} (limit {}, {} bits)",
                rule,
                rational::format(limit),
                bits
            ),
        }
    }
}

/// Wire format: `{"prefix": ["1","1/3"], "tail": "1/3"}` or
/// `{"generator": "sqrt_primitive", "limit": "0"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    EventuallyConstant {
        prefix: Vec<String>,
        tail: String,
    },
    Generator {
        generator: GeneratorRule,
        limit: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        precision_bits: Option<u32>,
    },
}

impl TryFrom<WeightJson> for Weight {
    type Error = Error;

    fn try_from(json: WeightJson) -> Result<Self> {
        match json {
            WeightJson::EventuallyConstant { prefix, tail } => {
                let prefix = prefix.iter().map(|s| rational::parse(s)).collect::<Result<_>>()?;
                Weight::eventually_constant(prefix, rational::parse(&tail)?)
            }
            WeightJson::Generator {
                generator,
                limit,
                precision_bits,
            } => Weight::generator(
                generator,
                rational::parse(&limit)?,
                precision_bits.unwrap_or_else(rational::precision_bits),
            ),
        }
    }
}

impl From<Weight> for WeightJson {
    fn from(w: Weight) -> Self {
        match w.repr {
            Repr::EventuallyConstant { prefix, tail } => {
                let mut prefix: Vec<String> = prefix.iter().map(rational::format).collect();
                if prefix.is_empty() {
                    prefix.push(rational::format(&tail));
                }
                WeightJson::EventuallyConstant {
                    prefix,
                    tail: rational::format(&tail),
                }
            }
            Repr::Generator { rule, limit, bits } => WeightJson::Generator {
                generator: rule,
                limit: rational::format(&limit),
                precision_bits: Some(bits),
            },
        }
    }
}
