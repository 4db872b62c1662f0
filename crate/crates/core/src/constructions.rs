//! The explicit vectors and parameters behind the renorming examples.
//!
//! With `A_n = {2..n+1}` and `B_n = {n+2..2n+1}`:
//! `f_{n,w} = e_1 + w 1_{A_n}`, `g_{n,w} = f_{n,w} - w 1_{B_n}` and
//! `h_{n,w} = f_{n,w} + w 1_{B_n}`.

use num_traits::One;

use crate::rational::{self, Rational};
use crate::vectors::SparseVector;
use crate::weights::Weight;

fn build(n: usize, omega: &Rational, tail_sign: i64) -> SparseVector {
    let mut pairs = vec![(1, Rational::one())];
    pairs.extend((2..=n + 1).map(|j| (j, omega.clone())));
    if tail_sign != 0 {
        let b = omega * rational::int(tail_sign);
        pairs.extend((n + 2..=2 * n + 1).map(|j| (j, b.clone())));
    }
    SparseVector::from_pairs(pairs).expect("distinct positive indices")
}

pub fn f_vector(n: usize, omega: &Rational) -> SparseVector {
    build(n, omega, 0)
}

pub fn g_vector(n: usize, omega: &Rational) -> SparseVector {
    build(n, omega, -1)
}

pub fn h_vector(n: usize, omega: &Rational) -> SparseVector {
    build(n, omega, 1)
}

/// `1_{A_n}` as an index list.
pub fn a_block(n: usize) -> Vec<usize> {
    (2..=n + 1).collect()
}

/// `{1} ∪ A_n`, the set that suppresses `g_{n,w}` to `f_{n,w}`.
pub fn head_block(n: usize) -> Vec<usize> {
    (1..=n + 1).collect()
}

/// `w_n = 1/(1 + sqrt(2n+2))` as a dyadic rational with `bits` fractional bits.
pub fn omega_n(n: usize, bits: u32) -> Rational {
    let root = rational::sqrt_dyadic(&rational::int(2 * n as i64 + 2), bits);
    let exact = (Rational::one() + root).recip();
    truncate(&exact, bits)
}

/// `1 + n w^2`.
pub fn f_norm_closed_form(n: usize, omega: &Rational) -> Rational {
    Rational::one() + rational::int(n as i64) * omega * omega
}

/// `max{1, (1 + n w)^2/(n+1) + n w^2}`.
pub fn g_norm_closed_form(n: usize, omega: &Rational) -> Rational {
    let nn = rational::int(n as i64);
    let lead = Rational::one() + &nn * omega;
    let value = &lead * &lead / rational::int(n as i64 + 1) + &nn * omega * omega;
    value.max(Rational::one())
}

/// `1 + (1 - 2w) n/(2n+1)`.
pub fn k_n_closed_form(n: usize, omega: &Rational) -> Rational {
    let nn = rational::int(n as i64);
    Rational::one() + (Rational::one() - rational::int(2) * omega) * &nn / rational::int(2 * n as i64 + 1)
}

/// `1 + 2 n w^2`.
pub fn lattice_closed_form(n: usize, omega: &Rational) -> Rational {
    Rational::one() + rational::int(2 * n as i64) * omega * omega
}

/// `(1, w, w, ...)` used with the pair `(f_{n,w}, g_{n,w})`.
pub fn flat_weight(omega: &Rational) -> Weight {
    Weight::one_then(omega.clone()).expect("omega lies in (0, 1]")
}

/// `e_1 + a e_2` and `e_1 + a e_2 - a e_3`.
pub fn two_point_pair(a: &Rational) -> (SparseVector, SparseVector) {
    let f = SparseVector::from_dense(&[Rational::one(), a.clone()]);
    let g = SparseVector::from_dense(&[Rational::one(), a.clone(), -a]);
    (f, g)
}

fn truncate(q: &Rational, bits: u32) -> Rational {
    let scale = num_bigint::BigInt::one() << bits;
    let scaled = (q * Rational::from_integer(scale.clone())).floor();
    scaled / Rational::from_integer(scale)
}
