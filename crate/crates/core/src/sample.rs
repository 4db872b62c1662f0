//! Seeded random instances for property suites and scenarios.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::PropertyAInstance;
use crate::rational::{self, Rational};
use crate::vectors::{Sign, SignedSet, SparseVector};
use crate::weights::Weight;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero `p/q` with `|p| <= max_num` and `1 <= q <= max_den`.
pub fn rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let p = rng.random_range(1..=max_num);
    let q = rng.random_range(1..=max_den);
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    rational::ratio(sign * p, q)
}

/// `p/q` in `(0, 1]` with `q <= max_den`.
pub fn unit_fraction<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let q = rng.random_range(1..=max_den);
    let p = rng.random_range(1..=q);
    rational::ratio(p, q)
}

/// An eventually-constant weight with a prefix of at most `max_prefix`
/// entries after `w_1 = 1`; each entry is the previous one times a ratio
/// in `(0, 1]` with denominator at most 4.
pub fn weight<R: Rng>(rng: &mut R, max_prefix: usize) -> Weight {
    let extra = rng.random_range(0..=max_prefix);
    let mut prefix = vec![rational::int(1)];
    for _ in 0..extra {
        let next = prefix.last().expect("nonempty") * unit_fraction(rng, 4);
        prefix.push(next);
    }
    let tail = prefix.last().expect("nonempty") * unit_fraction(rng, 4);
    Weight::eventually_constant(prefix, tail).expect("construction keeps the invariants")
}

/// `(1, omega, omega, ...)`.
pub fn one_then<R: Rng>(rng: &mut R, max_den: i64) -> Weight {
    Weight::one_then(unit_fraction(rng, max_den)).expect("omega lies in (0, 1]")
}

/// At most `max_support` nonzero entries at indices `1..=max_index`, values
/// `p/q` with `|p| <= max_num`, `q <= max_den`.
pub fn vector<R: Rng>(rng: &mut R, max_index: usize, max_support: usize, max_num: i64, max_den: i64) -> SparseVector {
    let size = rng.random_range(1..=max_support.min(max_index));
    let mut indices: Vec<usize> = (1..=max_index).collect();
    indices.shuffle(rng);
    let pairs: Vec<(usize, Rational)> = indices[..size]
        .iter()
        .map(|&j| (j, rational(rng, max_num, max_den)))
        .collect();
    SparseVector::from_pairs(pairs).expect("indices are positive and distinct")
}

/// Like [`vector`] but with pairwise distinct moduli, so every greedy set
/// is unique.
pub fn tie_free_vector<R: Rng>(rng: &mut R, max_index: usize, max_support: usize, max_num: i64, max_den: i64) -> SparseVector {
    loop {
        let f = vector(rng, max_index, max_support, max_num, max_den);
        let mut moduli = f.nonincreasing_rearrangement();
        moduli.dedup();
        if moduli.len() == f.len() {
            return f;
        }
    }
}

/// A vector with nonnegative entries.
pub fn nonnegative_vector<R: Rng>(rng: &mut R, max_index: usize, max_support: usize, max_num: i64, max_den: i64) -> SparseVector {
    vector(rng, max_index, max_support, max_num, max_den).abs()
}

/// A permutation of `1..=n` as a map `j -> pi(j)`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> BTreeMap<usize, usize> {
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(rng);
    (1..=n).zip(image).collect()
}

pub fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A valid Property (A) instance inside `1..=max_index`: `f` with entries
/// of modulus at most 1, then disjoint `A`, `B` off its support with
/// `|A| <= |B|`.
pub fn property_a_instance<R: Rng>(rng: &mut R, max_index: usize, max_den: i64) -> PropertyAInstance {
    let mut indices: Vec<usize> = (1..=max_index).collect();
    indices.shuffle(rng);
    let f_size = rng.random_range(0..=max_index / 2);
    let f = SparseVector::from_pairs(
        indices[..f_size]
            .iter()
            .map(|&j| {
                let modulus = unit_fraction(rng, max_den);
                (j, if rng.random_bool(0.5) { modulus } else { -modulus })
            })
            .collect::<Vec<_>>(),
    )
    .expect("distinct positive indices");
    let rest = &indices[f_size..];
    let b_size = rng.random_range(0..=rest.len() / 2);
    let a_size = rng.random_range(0..=b_size);
    let b = SignedSet::new(rest[..b_size].iter().map(|&j| (j, sign(rng)))).expect("distinct indices");
    let a = SignedSet::new(rest[b_size..b_size + a_size].iter().map(|&j| (j, sign(rng)))).expect("distinct indices");
    PropertyAInstance { f, a, b }
}
