//! Weighted sequence norms on `c_00`: `D_w`, Lorentz `d_1(w)`,
//! Marcinkiewicz `m(w)` and the signed-sup norm `Phi_2(empty; .)`.

use num_traits::{Signed, Zero};

use crate::norms::phi::{self, PhiBreakdown};
use crate::rational::Rational;
use crate::vectors::{IndexSet, SparseVector};
use crate::weights::Weight;

/// Window enumeration is used by [`DwStrategy::Auto`] while
/// `|supp(f) \ E_f|` stays at or below this.
pub const ENUMERATION_LIMIT: usize = 12;

/// How `dw_norm` searches over the sets `E`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DwStrategy {
    /// Enumerate for small windows, reduced search otherwise.
    #[default]
    Auto,
    /// Every `E` with `E_f ⊆ E ⊆ supp(f)`.
    Enumerate,
    /// For each size `n` and sign branch, only sets made of the `t` largest
    /// losses and the `n - t` largest gains. Polynomial in `|supp(f)|`.
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DwEvaluation {
    pub value: Rational,
    /// A maximizing set together with its `Phi` values.
    pub argmax: PhiBreakdown,
}

pub fn dw_norm(w: &Weight, f: &SparseVector) -> Rational {
    dw_norm_with(w, f, DwStrategy::Auto).value
}

pub fn dw_norm_with(w: &Weight, f: &SparseVector, strategy: DwStrategy) -> DwEvaluation {
    if f.is_zero() {
        return DwEvaluation {
            value: Rational::zero(),
            argmax: phi::phi(w, &IndexSet::new(), f),
        };
    }
    let strategy = match strategy {
        DwStrategy::Auto => {
            let top = f.max_modulus_set().expect("f is nonzero");
            if f.len() - top.len() <= ENUMERATION_LIMIT {
                DwStrategy::Enumerate
            } else {
                DwStrategy::Reduced
            }
        }
        s => s,
    };
    match strategy {
        DwStrategy::Enumerate => enumerate_window(w, f),
        _ => reduced_search(w, f),
    }
}

fn enumerate_window(w: &Weight, f: &SparseVector) -> DwEvaluation {
    let top = f.max_modulus_set().expect("f is nonzero");
    let free: Vec<usize> = f.support().difference(&top).copied().collect();
    assert!(free.len() < usize::BITS as usize - 1, "window too large to enumerate");
    let mut best: Option<PhiBreakdown> = None;
    for mask in 0usize..(1 << free.len()) {
        let mut set = top.clone();
        set.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j));
        let candidate = phi::phi(w, &set, f);
        if best.as_ref().is_none_or(|b| candidate.phi > b.phi) {
            best = Some(candidate);
        }
    }
    let argmax = best.expect("window is nonempty");
    DwEvaluation {
        value: argmax.phi.clone(),
        argmax,
    }
}

/// Exchange argument: for fixed `|E| = n` and sign branch `sigma`, moving
/// a larger loss into `E` in place of a smaller one gains
/// `(s_n/n + w_inf) * difference`, and doing the same with gains gains at
/// least `(s_n/n - w_{n+1}) * difference >= 0`. So some optimal `E`
/// consists of the top `t` losses and the top `n - t` gains by modulus.
fn reduced_search(w: &Weight, f: &SparseVector) -> DwEvaluation {
    let k = f.len();
    let tail = w.tail_limit().clone();
    let averages: Vec<Rational> = (0..=k)
        .map(|n| if n == 0 { Rational::zero() } else { w.average(n) })
        .collect();
    let mut best_value: Option<Rational> = None;
    let mut best_set = IndexSet::new();

    for sigma in [Rational::from_integer(1.into()), Rational::from_integer((-1).into())] {
        let mut gains: Vec<(usize, Rational)> = Vec::new();
        let mut losses: Vec<(usize, Rational)> = Vec::new();
        for (j, a) in f.iter() {
            let s = a * &sigma;
            if s.is_positive() {
                gains.push((j, s));
            } else {
                losses.push((j, -s));
            }
        }
        let by_modulus = |x: &(usize, Rational), y: &(usize, Rational)| y.1.cmp(&x.1).then(x.0.cmp(&y.0));
        gains.sort_by(by_modulus);
        losses.sort_by(by_modulus);
        let gain_mod: Vec<Rational> = gains.iter().map(|(_, a)| a.clone()).collect();
        let gain_prefix = prefix_sums(&gain_mod);
        let loss_prefix = prefix_sums(&losses.iter().map(|(_, a)| a.clone()).collect::<Vec<_>>());
        let loss_total = loss_prefix.last().cloned().unwrap_or_default();

        for (n, avg) in averages.iter().enumerate() {
            let t_lo = n.saturating_sub(gains.len());
            let t_hi = n.min(losses.len());
            for t in t_lo..=t_hi {
                let g_in = n - t;
                let inside = avg * (&loss_prefix[t] + &gain_prefix[g_in]);
                let placed = placed_gains(w, n, &gain_mod[g_in..], &gain_prefix, g_in);
                let value = inside + placed - &tail * (&loss_total - &loss_prefix[t]);
                if best_value.as_ref().is_none_or(|b| value > *b) {
                    best_set = losses[..t].iter().chain(&gains[..g_in]).map(|(j, _)| *j).collect();
                    best_value = Some(value);
                }
            }
        }
    }

    let argmax = phi::phi(w, &best_set, f);
    let value = best_value.expect("at least one candidate");
    debug_assert_eq!(argmax.phi, value);
    DwEvaluation { value, argmax }
}

/// `sum_k gains[k] * w_{n+1+k}` for the gains left outside `E`.
fn placed_gains(w: &Weight, n: usize, gains: &[Rational], prefix: &[Rational], offset: usize) -> Rational {
    match w.prefix_len() {
        Some(p) => {
            let tail = w.tail_limit();
            let total_rest = prefix.last().cloned().unwrap_or_default() - &prefix[offset];
            let mut sum = tail * total_rest;
            for (k, g) in gains.iter().enumerate() {
                let slot = n + 1 + k;
                if slot > p {
                    break;
                }
                sum += g * (w.value(slot) - tail);
            }
            sum
        }
        None => w.weighted_sum_from(n + 1, gains),
    }
}

fn prefix_sums(values: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(values.len() + 1);
    out.push(Rational::zero());
    for v in values {
        let next = out.last().expect("nonempty") + v;
        out.push(next);
    }
    out
}

/// `||f||_{1,w} = sum_j b_j w_j`.
pub fn lorentz_norm(w: &Weight, f: &SparseVector) -> Rational {
    w.weighted_sum_from(1, &f.nonincreasing_rearrangement())
}

/// `||f||_{m,w} = max_n (s_n / n) sum_{j <= n} b_j`.
pub fn marcinkiewicz_norm(w: &Weight, f: &SparseVector) -> Rational {
    let b = f.nonincreasing_rearrangement();
    let mut partial = Rational::zero();
    let mut best = Rational::zero();
    for (k, bk) in b.iter().enumerate() {
        partial += bk;
        let candidate = w.average(k + 1) * &partial;
        if candidate > best {
            best = candidate;
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedSupValue {
    pub value: Rational,
    /// Set for the constant weight, where the functional vanishes on every
    /// vector with zero coordinate sum.
    pub seminorm: bool,
}

/// `sup_pi |sum_j a_{pi(j)} w_j| = max{Psi(f), Psi(-f)}`.
pub fn signedsup_norm(w: &Weight, f: &SparseVector) -> SignedSupValue {
    SignedSupValue {
        value: phi::phi2(w, &IndexSet::new(), f),
        seminorm: w.is_constant(),
    }
}
