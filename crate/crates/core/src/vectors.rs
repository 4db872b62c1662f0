//! Finitely supported real vectors with exact coordinates, indexed from 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub type IndexSet = BTreeSet<usize>;

/// Element of `c_00`: an index -> nonzero rational map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SparseVectorJson", into = "SparseVectorJson")]
pub struct SparseVector {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `(index, value)` pairs; zero values are dropped and
    /// repeated indices are summed.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut entries: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, a) in pairs {
            if j == 0 {
                return Err(Error::InvalidVector("indices start at 1".into()));
            }
            *entries.entry(j).or_insert_with(Rational::zero) += a;
        }
        entries.retain(|_, a| !a.is_zero());
        Ok(SparseVector { entries })
    }

    /// `values[0]` goes to index 1.
    pub fn from_dense(values: &[Rational]) -> Self {
        Self::from_pairs(values.iter().cloned().enumerate().map(|(k, a)| (k + 1, a)))
            .expect("dense indices are positive")
    }

    /// The unit vector `e_j`.
    pub fn unit(j: usize) -> Self {
        Self::from_pairs([(j, rational::int(1))]).expect("unit index must be positive")
    }

    /// `sum_{j in A} e_j`.
    pub fn indicator<'a>(set: impl IntoIterator<Item = &'a usize>) -> Self {
        Self::from_pairs(set.into_iter().map(|&j| (j, rational::int(1)))).expect("positive indices")
    }

    pub fn get(&self, j: usize) -> Rational {
        self.entries.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(&j, a)| (j, a))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|supp(f)|`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> IndexSet {
        self.entries.keys().copied().collect()
    }

    pub fn max_index(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    /// `max_j |a_j|`.
    pub fn sup_norm(&self) -> Rational {
        self.entries
            .values()
            .map(|a| a.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// `sum_j |a_j|`.
    pub fn l1_norm(&self) -> Rational {
        self.entries.values().map(|a| a.abs()).sum()
    }

    /// `E_f`, the indices whose coefficient attains `max |a_j|`.
    pub fn max_modulus_set(&self) -> Result<IndexSet> {
        if self.is_zero() {
            return Err(Error::ZeroVector("the max-modulus set"));
        }
        let top = self.sup_norm();
        Ok(self
            .entries
            .iter()
            .filter(|(_, a)| a.abs() == top)
            .map(|(&j, _)| j)
            .collect())
    }

    /// Moduli of the nonzero entries in nonincreasing order.
    pub fn nonincreasing_rearrangement(&self) -> Vec<Rational> {
        let mut b: Vec<Rational> = self.entries.values().map(|a| a.abs()).collect();
        b.sort_unstable_by(|x, y| y.cmp(x));
        b
    }

    /// `S_A f`: keeps the coordinates in `set`.
    pub fn project(&self, set: &IndexSet) -> Self {
        SparseVector {
            entries: self
                .entries
                .iter()
                .filter(|(j, _)| set.contains(j))
                .map(|(&j, a)| (j, a.clone()))
                .collect(),
        }
    }

    /// `f - S_A f`.
    pub fn project_complement(&self, set: &IndexSet) -> Self {
        SparseVector {
            entries: self
                .entries
                .iter()
                .filter(|(j, _)| !set.contains(j))
                .map(|(&j, a)| (j, a.clone()))
                .collect(),
        }
    }

    /// Every coordinate in `set` replaced by the mean of `f` over `set`,
    /// zero elsewhere.
    pub fn average_project(&self, set: &IndexSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        let total: Rational = set.iter().map(|&j| self.get(j)).sum();
        let mean = total / rational::int(set.len() as i64);
        Self::from_pairs(set.iter().map(|&j| (j, mean.clone())))
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        Self::from_pairs(self.entries.iter().map(|(&j, a)| (j, a * lambda))).expect("indices unchanged")
    }

    /// Coordinatewise absolute value.
    pub fn abs(&self) -> Self {
        SparseVector {
            entries: self.entries.iter().map(|(&j, a)| (j, a.abs())).collect(),
        }
    }

    /// `f_pi = (a_{pi(j)})_j` for a finitely supported permutation given as
    /// `j -> pi(j)`; indices absent from the map are fixed.
    pub fn permute(&self, pi: &BTreeMap<usize, usize>) -> Result<Self> {
        let mut inverse = BTreeMap::new();
        for (&j, &pj) in pi {
            if inverse.insert(pj, j).is_some() {
                return Err(Error::InvalidParameter("map is not injective".into()));
            }
        }
        // f_pi(j) = a_{pi(j)}, so the entry at index k lands on pi^{-1}(k)
        Self::from_pairs(self.entries.iter().map(|(&k, a)| {
            let target = inverse.get(&k).copied().unwrap_or(k);
            (target, a.clone())
        }))
    }

    /// Whether every coefficient is `>= 0` or every coefficient is `<= 0`.
    pub fn has_constant_sign(&self) -> bool {
        self.entries.values().all(|a| a.is_positive()) || self.entries.values().all(|a| a.is_negative())
    }
}

impl Add for &SparseVector {
    type Output = SparseVector;

    fn add(self, rhs: &SparseVector) -> SparseVector {
        SparseVector::from_pairs(self.iter().chain(rhs.iter()).map(|(j, a)| (j, a.clone())))
            .expect("indices unchanged")
    }
}

impl Sub for &SparseVector {
    type Output = SparseVector;

    fn sub(self, rhs: &SparseVector) -> SparseVector {
        self + &(-rhs)
    }
}

impl Neg for &SparseVector {
    type Output = SparseVector;

    fn neg(self) -> SparseVector {
        SparseVector {
            entries: self.entries.iter().map(|(&j, a)| (j, -a)).collect(),
        }
    }
}

impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .entries
            .iter()
            .map(|(j, a)| format!("{}·e{}", rational::format(a), j))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `{"entries": {"1": "1", "2": "1/3"}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SparseVectorJson {
    pub entries: BTreeMap<String, String>,
}

impl TryFrom<SparseVectorJson> for SparseVector {
    type Error = Error;

    fn try_from(json: SparseVectorJson) -> Result<Self> {
        let pairs = json
            .entries
            .iter()
            .map(|(k, v)| {
                let j: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidVector(format!("bad index `{k}`")))?;
                Ok((j, rational::parse(v)?))
            })
            .collect::<Result<Vec<_>>>()?;
        SparseVector::from_pairs(pairs)
    }
}

impl From<SparseVector> for SparseVectorJson {
    fn from(f: SparseVector) -> Self {
        SparseVectorJson {
            entries: f
                .entries
                .iter()
                .map(|(j, a)| (j.to_string(), rational::format(a)))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> Rational {
        match self {
            Sign::Plus => rational::int(1),
            Sign::Minus => rational::int(-1),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A finite set `A` with a sign pattern `eps`, denoting `1_{eps,A} = sum eps_n e_n`.
///
/// JSON maps indices to signs: `{"2": "+", "5": "-"}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, Sign>", into = "BTreeMap<String, Sign>")]
pub struct SignedSet {
    indices: Vec<usize>,
    signs: Vec<Sign>,
}

impl SignedSet {
    /// Pairs may come in any order; indices must be distinct and positive.
    pub fn new(pairs: impl IntoIterator<Item = (usize, Sign)>) -> Result<Self> {
        let mut pairs: Vec<(usize, Sign)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        if pairs.iter().any(|&(j, _)| j == 0) {
            return Err(Error::InvalidVector("indices start at 1".into()));
        }
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidVector("repeated index in signed set".into()));
        }
        let (indices, signs) = pairs.into_iter().unzip();
        Ok(SignedSet { indices, signs })
    }

    pub fn empty() -> Self {
        SignedSet {
            indices: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// All signs positive.
    pub fn positive<'a>(set: impl IntoIterator<Item = &'a usize>) -> Result<Self> {
        Self::new(set.into_iter().map(|&j| (j, Sign::Plus)))
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn index_set(&self) -> IndexSet {
        self.indices.iter().copied().collect()
    }

    pub fn indicator(&self) -> SparseVector {
        SparseVector::from_pairs(self.indices.iter().zip(&self.signs).map(|(&j, s)| (j, s.value())))
            .expect("validated indices")
    }

    /// The coefficient vector of the dual indicator `1*_{eps,A}` as a
    /// functional: `f -> sum eps_n a_n`.
    pub fn pair(&self, f: &SparseVector) -> Rational {
        self.indices
            .iter()
            .zip(&self.signs)
            .map(|(&j, s)| s.value() * f.get(j))
            .sum()
    }
}

impl TryFrom<BTreeMap<String, Sign>> for SignedSet {
    type Error = Error;

    fn try_from(map: BTreeMap<String, Sign>) -> Result<Self> {
        let pairs = map
            .into_iter()
            .map(|(k, sign)| {
                let j: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidVector(format!("bad index `{k}`")))?;
                Ok((j, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedSet::new(pairs)
    }
}

impl From<SignedSet> for BTreeMap<String, Sign> {
    fn from(set: SignedSet) -> Self {
        set.indices
            .iter()
            .zip(&set.signs)
            .map(|(j, s)| (j.to_string(), *s))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(pairs: &[(usize, Rational)]) -> SparseVector {
        SparseVector::from_pairs(pairs.iter().cloned()).unwrap()
    }

    fn set(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    fn g_third() -> SparseVector {
        v(&[(1, int(1)), (2, ratio(1, 3)), (3, ratio(-1, 3))])
    }

    #[test]
    fn support_examples() {
        assert_eq!(v(&[(1, int(1)), (2, ratio(1, 3))]).support(), set(&[1, 2]));
        assert_eq!(SparseVector::zero().support(), set(&[]));
        assert_eq!(g_third().support(), set(&[1, 2, 3]));
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let f = v(&[(1, int(1)), (2, int(0)), (1, int(-1)), (3, int(2))]);
        assert_eq!(f.support(), set(&[3]));
        assert!(SparseVector::from_pairs([(0, int(1))]).is_err());
    }

    #[test]
    fn max_modulus_examples() {
        assert_eq!(v(&[(1, int(1)), (2, ratio(1, 3))]).max_modulus_set().unwrap(), set(&[1]));
        assert_eq!(v(&[(1, int(1)), (2, int(-1))]).max_modulus_set().unwrap(), set(&[1, 2]));
        assert_eq!(
            v(&[(2, ratio(1, 3)), (3, ratio(-1, 3))]).max_modulus_set().unwrap(),
            set(&[2, 3])
        );
        assert_eq!(SparseVector::zero().max_modulus_set(), Err(Error::ZeroVector("the max-modulus set")));
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(g_third().nonincreasing_rearrangement(), vec![int(1), ratio(1, 3), ratio(1, 3)]);
        assert!(SparseVector::zero().nonincreasing_rearrangement().is_empty());
        assert_eq!(v(&[(5, int(-2)), (7, int(1))]).nonincreasing_rearrangement(), vec![int(2), int(1)]);
    }

    #[test]
    fn projection_examples() {
        let f = v(&[(1, int(1)), (2, int(1))]);
        assert_eq!(f.project(&set(&[1])), SparseVector::unit(1));
        assert_eq!(f.project(&f.support()), f);
        assert_eq!(
            g_third().project(&set(&[1, 2])),
            v(&[(1, int(1)), (2, ratio(1, 3))])
        );
        assert_eq!(g_third().project_complement(&set(&[1, 2])), v(&[(3, ratio(-1, 3))]));
    }

    #[test]
    fn average_projection_examples() {
        assert!(v(&[(1, int(1)), (2, int(-1))]).average_project(&set(&[1, 2])).unwrap().is_zero());
        assert_eq!(SparseVector::unit(1).average_project(&set(&[1])).unwrap(), SparseVector::unit(1));
        assert_eq!(
            v(&[(1, int(1)), (2, int(3))]).average_project(&set(&[1, 2, 3])).unwrap(),
            SparseVector::indicator(&set(&[1, 2, 3])).scale(&ratio(4, 3))
        );
        assert_eq!(SparseVector::unit(1).average_project(&set(&[])), Err(Error::EmptyIndexSet));
    }

    #[test]
    fn permutation_moves_entries() {
        // pi swaps 1 and 3: f_pi(1) = a_3
        let pi: BTreeMap<usize, usize> = [(1, 3), (3, 1)].into_iter().collect();
        let f = v(&[(1, int(5)), (2, int(7))]);
        assert_eq!(f.permute(&pi).unwrap(), v(&[(3, int(5)), (2, int(7))]));
        let bad: BTreeMap<usize, usize> = [(1, 3), (2, 3)].into_iter().collect();
        assert!(f.permute(&bad).is_err());
    }

    #[test]
    fn signed_sets() {
        let a = SignedSet::new([(3, Sign::Minus), (1, Sign::Plus)]).unwrap();
        assert_eq!(a.indices(), &[1, 3]);
        assert_eq!(a.indicator(), v(&[(1, int(1)), (3, int(-1))]));
        assert_eq!(a.pair(&g_third()), ratio(4, 3));
        assert!(SignedSet::new([(1, Sign::Plus), (1, Sign::Minus)]).is_err());
    }

    #[test]
    fn json_format() {
        let f: SparseVector =
            serde_json::from_str(r#"{"entries": {"1": "1", "2": "1/3", "3": "-1/3"}}"#).unwrap();
        assert_eq!(f, g_third());
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"entries":{"1":"1","2":"1/3","3":"-1/3"}}"#);
    }
}
