//! Brute-force references for the closed forms in [`crate::norms`].
//!
//! Nothing here calls into the norm implementations; weights are read
//! value by value and every supremum is taken by explicit enumeration.
//! These are gates for the test suite (and the hidden `--oracle` CLI flag),
//! not part of the supported API.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::vectors::{IndexSet, SparseVector};
use crate::weights::Weight;

/// Largest off-`E` support for the injection enumeration.
pub const MAX_ORACLE_SUPPORT: usize = 8;
/// Largest index window for the `E` enumeration.
pub const MAX_E_WINDOW: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Last weight slot available to injections.
    pub horizon: usize,
    /// `E` ranges over all subsets of `{1..e_window}`.
    pub e_window: usize,
    /// Slots past the weight prefix all carry the tail value; when set, only
    /// the lowest unused one is tried. The supremum is unchanged.
    pub collapse_tail: bool,
}

impl OracleConfig {
    pub fn new(horizon: usize, e_window: usize) -> Self {
        Self {
            horizon,
            e_window,
            collapse_tail: false,
        }
    }

    /// The smallest horizon at which the supremum is attained for an
    /// eventually-constant weight: `|E| + |supp f| + prefix`.
    pub fn minimal_horizon(w: &Weight, set_len: usize, f: &SparseVector) -> usize {
        set_len + f.len() + w.prefix_len().unwrap_or(0)
    }

    pub fn collapsed(mut self) -> Self {
        self.collapse_tail = true;
        self
    }
}

/// `sup |sum_j a_{phi(j)} w_j|` over injective placements of the entries of
/// `f` outside `set` into the slots `|set|+1 ..= horizon`.
pub fn phi2_bruteforce(w: &Weight, set: &IndexSet, f: &SparseVector, cfg: &OracleConfig) -> Result<Rational> {
    let entries: Vec<Rational> = f
        .iter()
        .filter(|(j, _)| !set.contains(j))
        .map(|(_, a)| a.clone())
        .collect();
    injection_sup(w, set.len(), &entries, cfg)
}

fn injection_sup(w: &Weight, n: usize, entries: &[Rational], cfg: &OracleConfig) -> Result<Rational> {
    if entries.is_empty() {
        return Ok(Rational::zero());
    }
    if entries.len() > MAX_ORACLE_SUPPORT {
        return Err(Error::TooLarge(format!(
            "{} entries to place; the oracle handles at most {MAX_ORACLE_SUPPORT}",
            entries.len()
        )));
    }
    if cfg.horizon < n + entries.len() {
        return Err(Error::InvalidParameter(format!(
            "horizon {} leaves fewer than {} slots after {n}",
            cfg.horizon,
            entries.len()
        )));
    }
    let slot_weights: Vec<Rational> = (n + 1..=cfg.horizon).map(|j| w.value(j)).collect();
    // slots with index >= first_tail are interchangeable
    let first_tail = match (cfg.collapse_tail, w.prefix_len()) {
        (true, Some(p)) => p.saturating_sub(n),
        _ => slot_weights.len(),
    };

    let da = rational::common_denominator(entries);
    let dw = rational::common_denominator(&slot_weights);
    let scale = |q: &Rational, d: &BigInt| -> BigInt { q.numer() * (d / q.denom()) };
    let a: Vec<BigInt> = entries.iter().map(|q| scale(q, &da)).collect();
    let s: Vec<BigInt> = slot_weights.iter().map(|q| scale(q, &dw)).collect();

    let (hi, lo) = match (to_small(&a), to_small(&s)) {
        (Some(a), Some(s)) if fits(&a, &s) => {
            let (hi, lo) = search(&a, &s, first_tail, 0i128);
            (BigInt::from(hi), BigInt::from(lo))
        }
        _ => search(&a, &s, first_tail, BigInt::zero()),
    };
    let best = hi.abs().max(lo.abs());
    Ok(Rational::new(best, da * dw))
}

fn to_small(values: &[BigInt]) -> Option<Vec<i128>> {
    values.iter().map(ToPrimitive::to_i128).collect()
}

fn fits(a: &[i128], s: &[i128]) -> bool {
    let bits = |v: &[i128]| v.iter().map(|x| 128 - x.unsigned_abs().leading_zeros()).max().unwrap_or(0);
    bits(a) + bits(s) + 4 < 126
}

/// Max and min of the placement sums.
fn search<T>(a: &[T], s: &[T], first_tail: usize, zero: T) -> (T, T)
where
    T: Clone + Ord + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    let mut used = vec![false; s.len()];
    let mut best: Option<(T, T)> = None;
    place(a, s, first_tail, 0, zero, &mut used, &mut best);
    best.expect("at least one placement exists")
}

fn place<T>(
    a: &[T],
    s: &[T],
    first_tail: usize,
    k: usize,
    acc: T,
    used: &mut [bool],
    best: &mut Option<(T, T)>,
) where
    T: Clone + Ord + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    if k == a.len() {
        *best = Some(match best.take() {
            None => (acc.clone(), acc),
            Some((hi, lo)) => (hi.max(acc.clone()), lo.min(acc)),
        });
        return;
    }
    let mut tail_tried = false;
    for slot in 0..s.len() {
        if used[slot] {
            continue;
        }
        if slot >= first_tail {
            if tail_tried {
                break;
            }
            tail_tried = true;
        }
        used[slot] = true;
        let next = acc.clone() + a[k].clone() * s[slot].clone();
        place(a, s, first_tail, k + 1, next, used, best);
        used[slot] = false;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleNorm {
    pub value: Rational,
    /// First maximizing `E` in bitmask order.
    pub argmax: IndexSet,
}

/// `sup_E Phi_1(E; f) + Phi_2(E; f)` over every `E` contained in
/// `{1..e_window}`, with `Phi_2` taken from [`phi2_bruteforce`].
///
/// Each `E` needs a horizon of at least `|E| + |supp f|` slots; the
/// configured horizon is raised to the minimal one where necessary.
pub fn dw_norm_bruteforce(w: &Weight, f: &SparseVector, cfg: &OracleConfig) -> Result<OracleNorm> {
    let window = cfg.e_window;
    if window > MAX_E_WINDOW {
        return Err(Error::TooLarge(format!("e_window {window} exceeds {MAX_E_WINDOW}")));
    }
    if f.max_index() > window {
        return Err(Error::InvalidParameter(format!(
            "e_window {window} does not cover index {}",
            f.max_index()
        )));
    }
    let averages: Vec<Rational> = (0..=window)
        .map(|n| if n == 0 { Rational::zero() } else { w.primitive(n) / rational::int(n as i64) })
        .collect();

    let support_mask = f.support().iter().fold(0u32, |m, &j| m | 1 << (j - 1));
    let moduli: Vec<Rational> = (1..=window).map(|j| f.get(j).abs()).collect();

    let mut cache: HashMap<(usize, u32), Rational> = HashMap::new();
    let mut best: Option<(Rational, u32)> = None;
    for mask in 0u32..(1u32 << window) {
        let n = mask.count_ones() as usize;
        let on_support = mask & support_mask;
        let phi2 = match cache.get(&(n, on_support)) {
            Some(v) => v.clone(),
            None => {
                let local = OracleConfig {
                    horizon: cfg.horizon.max(OracleConfig::minimal_horizon(w, n, f)),
                    ..*cfg
                };
                let inside: IndexSet = (1..=window).filter(|j| mask >> (j - 1) & 1 == 1).collect();
                let v = phi2_bruteforce(w, &inside, f, &local)?;
                cache.insert((n, on_support), v.clone());
                v
            }
        };
        let mass: Rational = (0..window)
            .filter(|k| on_support >> k & 1 == 1)
            .map(|k| &moduli[k])
            .sum();
        let value = &averages[n] * mass + phi2;
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, mask));
        }
    }
    let (value, mask) = best.expect("the empty set is enumerated");
    Ok(OracleNorm {
        value,
        argmax: (1..=window).filter(|j| mask >> (j - 1) & 1 == 1).collect(),
    })
}

/// `sup_pi |a_{pi(1)} + a_{pi(d)}/3| + sum_{1<j<d} |a_{pi(j)}|`, read
/// directly off the definition of the bad-dual norm.
pub fn bad_dual_direct(x: &[Rational]) -> Rational {
    let d = x.len();
    let total: Rational = x.iter().map(Signed::abs).sum();
    let third = rational::ratio(1, 3);
    let mut best = Rational::zero();
    for first in 0..d {
        for last in 0..d {
            if first == last {
                continue;
            }
            let middle = &total - x[first].abs() - x[last].abs();
            let value = (&x[first] + &x[last] * &third).abs() + middle;
            best = best.max(value);
        }
    }
    best
}

/// `max { alpha |a_1|, alpha |a_2|, |a_1 + a_2| }`.
pub fn hexagon_direct(alpha: &Rational, x: &[Rational; 2]) -> Rational {
    let a = alpha * x[0].abs();
    let b = alpha * x[1].abs();
    let c = (&x[0] + &x[1]).abs();
    a.max(b).max(c)
}

/// The `R^d` restriction of the `D_w` norm for `w = (1, 1/3, 1/3, ...)`,
/// by the explicit formula
/// `max_{n >= 1, pi} (n+2)/(3n) sum_{j<=n} |a_{pi(j)}| + (1/3)|sum_{j>n} a_{pi(j)}|`.
pub fn pafinite_third_direct(x: &[Rational]) -> Rational {
    let d = x.len();
    let mut best = Rational::zero();
    for mask in 1u32..(1u32 << d) {
        let n = mask.count_ones() as i64;
        let mut inside = Rational::zero();
        let mut outside = Rational::zero();
        for (j, a) in x.iter().enumerate() {
            if mask >> j & 1 == 1 {
                inside += a.abs();
            } else {
                outside += a;
            }
        }
        let value = rational::ratio(n + 2, 3 * n) * inside + outside.abs() / rational::int(3);
        best = best.max(value);
    }
    best
}

/// Number of placements [`phi2_bruteforce`] visits without tail collapse:
/// `slots! / (slots - k)!`. Saturates.
pub fn placement_count(slots: usize, k: usize) -> u128 {
    if k > slots {
        return 0;
    }
    (slots - k + 1..=slots).fold(1u128, |acc, s| acc.saturating_mul(s as u128))
}
