//! The building blocks of the `D_w` norm.
//!
//! For a finite `E` with `|E| = n`:
//!
//! * `Phi_1(E; f) = (s_n / n) * sum_{j in E} |a_j|`, zero for `E` empty;
//! * `Phi_2(E; f)` is the supremum, over injective placements of the
//!   coordinates outside `E` into the weight slots `n+1, n+2, ...`, of the
//!   absolute weighted sum.
//!
//! `Phi_2` is evaluated in closed form. For a global sign `sigma`, the
//! entries with `sigma * a_j > 0` (gains) take the largest available slots
//! in nonincreasing order, and the entries with `sigma * a_j < 0` (losses)
//! are pushed out to the tail, where each costs `w_inf * |a_j|`. The
//! supremum of the absolute value is the larger of the two branches.

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::vectors::{IndexSet, SparseVector};
use crate::weights::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiBreakdown {
    pub set: IndexSet,
    pub phi1: Rational,
    pub phi2: Rational,
    pub phi: Rational,
}

pub fn phi1(w: &Weight, set: &IndexSet, f: &SparseVector) -> Rational {
    if set.is_empty() {
        return Rational::zero();
    }
    let mass: Rational = set.iter().map(|&j| f.get(j).abs()).sum();
    w.average(set.len()) * mass
}

pub fn phi2(w: &Weight, set: &IndexSet, f: &SparseVector) -> Rational {
    let outside: Vec<Rational> = f
        .iter()
        .filter(|(j, _)| !set.contains(j))
        .map(|(_, a)| a.clone())
        .collect();
    phi2_of_values(w, set.len(), &outside)
}

pub fn phi(w: &Weight, set: &IndexSet, f: &SparseVector) -> PhiBreakdown {
    let phi1 = phi1(w, set, f);
    let phi2 = phi2(w, set, f);
    PhiBreakdown {
        set: set.clone(),
        phi: &phi1 + &phi2,
        phi1,
        phi2,
    }
}

/// `Phi_2` for the entries `outside` placed after `n` occupied slots.
pub(crate) fn phi2_of_values(w: &Weight, n: usize, outside: &[Rational]) -> Rational {
    let (plus, minus) = branch_values(w, n, outside);
    plus.max(minus).max(Rational::zero())
}

/// The two signed branch suprema `(sigma = +1, sigma = -1)`.
pub(crate) fn branch_values(w: &Weight, n: usize, outside: &[Rational]) -> (Rational, Rational) {
    let mut pos: Vec<Rational> = outside.iter().filter(|a| a.is_positive()).cloned().collect();
    let mut neg: Vec<Rational> = outside.iter().filter(|a| a.is_negative()).map(|a| -a).collect();
    pos.sort_unstable_by(|x, y| y.cmp(x));
    neg.sort_unstable_by(|x, y| y.cmp(x));
    let pos_mass: Rational = pos.iter().sum();
    let neg_mass: Rational = neg.iter().sum();
    let tail = w.tail_limit();
    let plus = w.weighted_sum_from(n + 1, &pos) - tail * &neg_mass;
    let minus = w.weighted_sum_from(n + 1, &neg) - tail * &pos_mass;
    (plus, minus)
}

/// `Psi(f) = sum b+_j w_j - w_inf sum b-_j`, the `sigma = +1` branch at `E` empty.
pub fn psi(w: &Weight, f: &SparseVector) -> Rational {
    let values: Vec<Rational> = f.iter().map(|(_, a)| a.clone()).collect();
    branch_values(w, 0, &values).0
}

/// `Theta(f) = Psi(f) + Psi(-f) = sum (b+_j + b-_j)(w_j - w_inf)`.
pub fn theta(w: &Weight, f: &SparseVector) -> Rational {
    psi(w, f) + psi(w, &-f)
}
