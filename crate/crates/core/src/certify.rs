//! Greedy-type constants as self-verifying certificates.
//!
//! Constants defined as suprema over the whole sphere are only ever
//! reported as lower bounds realised by an explicit witness. Upper bounds
//! come from theorems, exposed as [`NamedBound`]s.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greedy::{greedy_approx, sigma_tilde, subsets_up_to, threshold_ties};
use crate::norms::{signedsup_norm, NormSpec};
use crate::rational::{self, Rational};
use crate::vectors::{IndexSet, Sign, SignedSet, SparseVector};
use crate::weights::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantKind {
    Suppression,
    Lattice,
    Superdemocracy,
    DualSuperdemocracy,
    QuasiGreedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    LowerBound,
    ExactOverFamily,
}

/// What a certificate's value is the ratio of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// `||S_A f|| / ||f||`.
    Suppression { f: SparseVector, set: IndexSet },
    /// `||f|| / ||g||` with `|f| = |g|`.
    Lattice { f: SparseVector, g: SparseVector },
    /// `||1_{eps,A}|| / ||1_{delta,B}||`.
    Indicators { numerator: SignedSet, denominator: SignedSet },
    /// Same ratio for the dual norm of a polyhedral norm.
    DualIndicators { numerator: SignedSet, denominator: SignedSet },
    /// `||G_m x|| / ||x||`.
    QuasiGreedy { x: SparseVector, m: usize },
}

impl Witness {
    pub fn evaluate(&self, norm: &NormSpec) -> Result<Rational> {
        match self {
            Witness::Suppression { f, set } => suppression_ratio(norm, f, set),
            Witness::Lattice { f, g } => lattice_ratio(norm, f, g),
            Witness::Indicators { numerator, denominator } => {
                ratio_of(norm.norm(&numerator.indicator())?, norm.norm(&denominator.indicator())?)
            }
            Witness::DualIndicators { numerator, denominator } => {
                let family = norm.family().ok_or_else(|| {
                    Error::InvalidParameter("dual indicators need a polyhedral norm".into())
                })?;
                let top = family.dual_norm(&family.densify(&numerator.indicator())?)?.value;
                let bottom = family.dual_norm(&family.densify(&denominator.indicator())?)?.value;
                ratio_of(top, bottom)
            }
            Witness::QuasiGreedy { x, m } => ratio_of(norm.norm(&greedy_approx(x, *m))?, norm.norm(x)?),
        }
    }
}

fn ratio_of(top: Rational, bottom: Rational) -> Result<Rational> {
    if bottom.is_zero() {
        return Err(Error::ZeroVector("ratio denominator"));
    }
    Ok(top / bottom)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: ConstantKind,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    pub decimal: String,
    pub witness: Witness,
    pub family: String,
    pub exact: bool,
    pub bound_kind: BoundKind,
    pub citations: Vec<String>,
}

impl Certificate {
    /// Builds a certificate for a value found by a search, re-deriving it
    /// from the witness first.
    pub fn checked(
        norm: &NormSpec,
        kind: ConstantKind,
        claimed: Rational,
        witness: Witness,
        family: impl Into<String>,
        bound_kind: BoundKind,
        citations: &[&str],
    ) -> Result<Self> {
        let value = witness.evaluate(norm)?;
        if value != claimed {
            return Err(Error::CertificateMismatch {
                claimed: rational::format(&claimed),
                recomputed: rational::format(&value),
            });
        }
        Ok(Self {
            kind,
            decimal: rational::to_decimal(&value, 20),
            value,
            witness,
            family: family.into(),
            exact: norm.is_exact(),
            bound_kind,
            citations: citations.iter().map(|c| c.to_string()).collect(),
        })
    }

    /// Re-evaluates the witness against `norm`.
    pub fn verify(&self, norm: &NormSpec) -> Result<()> {
        let value = self.witness.evaluate(norm)?;
        if value != self.value {
            return Err(Error::CertificateMismatch {
                claimed: rational::format(&self.value),
                recomputed: rational::format(&value),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self)?)
    }
}

const CITE_SUPPRESSION: &str = "K_s >= ||S_A f|| / ||f|| for every f != 0 and every finite A";
const CITE_LATTICE: &str = "K_l >= ||f|| / ||g|| whenever |f| <= |g| coordinatewise";
const CITE_DEMOCRACY: &str =
    "a 1-superdemocratic basis has ||1_{eps,A}|| = ||1_{delta,B}|| whenever |A| = |B|";
const CITE_DUAL: &str = "Property (A) forces 1-superdemocracy, so a ratio above 1 in the dual basis rules it out there";
const CITE_QUASI: &str = "the quasi-greedy constant is at least ||G_m x|| / ||x||";

/// `||S_A f|| / ||f||`.
pub fn suppression_ratio(norm: &NormSpec, f: &SparseVector, set: &IndexSet) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroVector("suppression ratio"));
    }
    ratio_of(norm.norm(&f.project(set))?, norm.norm(f)?)
}

/// Instance families for the suppression search.
#[derive(Clone, Debug, PartialEq)]
pub enum KsFamily {
    Explicit(Vec<(SparseVector, IndexSet)>),
    Grid(GridFamily),
}

/// Every vector supported in `indices` with at most `max_support` nonzero
/// entries drawn from `values`, paired with every subset of its support.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFamily {
    pub indices: Vec<usize>,
    pub max_support: usize,
    pub values: Vec<Rational>,
}

impl GridFamily {
    /// Values `{+-1, +-2/3, +-1/2, +-1/3, +-1/4}` on supports inside
    /// `{1, 2, 3}`. For symmetric norms the position of the support is
    /// irrelevant, so this covers every support of size at most 3.
    pub fn default_grid() -> Self {
        Self::with_indices((1..=3).collect())
    }

    /// The default values on supports inside `indices`, up to size 3.
    pub fn with_indices(indices: Vec<usize>) -> Self {
        let mut values = Vec::new();
        for (p, q) in [(1, 1), (2, 3), (1, 2), (1, 3), (1, 4)] {
            values.push(rational::ratio(p, q));
            values.push(rational::ratio(-p, q));
        }
        Self {
            max_support: indices.len().min(3),
            indices,
            values,
        }
    }

    pub fn describe(&self) -> String {
        let values: Vec<String> = self.values.iter().map(rational::format).collect();
        format!(
            "grid: supports inside {:?} of size <= {}, values {{{}}}, all projection sets",
            self.indices,
            self.max_support,
            values.join(", ")
        )
    }

    /// The nonzero vectors of the grid, in a fixed order.
    pub fn vectors(&self) -> Result<Vec<SparseVector>> {
        let supports = subsets_up_to(&self.indices, self.max_support)?;
        let mut out = Vec::new();
        for support in supports.into_iter().filter(|s| !s.is_empty()) {
            let k = support.len();
            let total = self
                .values
                .len()
                .checked_pow(k as u32)
                .filter(|&t| t <= 1 << 24)
                .ok_or_else(|| Error::TooLarge(format!("{} values on {k} coordinates", self.values.len())))?;
            for code in 0..total {
                let mut rest = code;
                let pairs = support.iter().map(|&j| {
                    let v = self.values[rest % self.values.len()].clone();
                    rest /= self.values.len();
                    (j, v)
                });
                let f = SparseVector::from_pairs(pairs.collect::<Vec<_>>())?;
                if f.len() == k {
                    out.push(f);
                }
            }
        }
        Ok(out)
    }
}

/// Largest suppression ratio over the family; ties go to the earliest
/// instance in enumeration order.
pub fn ks_lower_bound(norm: &NormSpec, family: &KsFamily) -> Result<Certificate> {
    let (vectors, description): (Vec<(SparseVector, Vec<IndexSet>)>, String) = match family {
        KsFamily::Explicit(pairs) => (
            pairs.iter().map(|(f, a)| (f.clone(), vec![a.clone()])).collect(),
            format!("{} explicit (f, A) pairs", pairs.len()),
        ),
        KsFamily::Grid(grid) => {
            let vectors = grid
                .vectors()?
                .into_iter()
                .map(|f| {
                    let support: Vec<usize> = f.support().into_iter().collect();
                    let sets = subsets_up_to(&support, support.len())
                        .map(|all| all.into_iter().map(|s| s.into_iter().collect()).collect());
                    sets.map(|sets| (f, sets))
                })
                .collect::<Result<Vec<_>>>()?;
            (vectors, grid.describe())
        }
    };
    if vectors.is_empty() {
        return Err(Error::InvalidParameter("empty instance family".into()));
    }

    let scored: Vec<Result<(Rational, usize, usize)>> = vectors
        .par_iter()
        .enumerate()
        .map(|(i, (f, sets))| {
            if f.is_zero() {
                return Err(Error::ZeroVector("suppression ratio"));
            }
            let whole = norm.norm(f)?;
            let mut best: Option<(Rational, usize)> = None;
            for (k, set) in sets.iter().enumerate() {
                let value = norm.norm(&f.project(set))? / &whole;
                if best.as_ref().is_none_or(|(v, _)| value > *v) {
                    best = Some((value, k));
                }
            }
            let (value, k) = best.ok_or(Error::EmptyIndexSet)?;
            Ok((value, i, k))
        })
        .collect();
    let mut best: Option<(Rational, usize, usize)> = None;
    for item in scored {
        let (value, i, k) = item?;
        if best.as_ref().is_none_or(|(v, _, _)| value > *v) {
            best = Some((value, i, k));
        }
    }
    let (value, i, k) = best.expect("nonempty family");
    let (f, sets) = &vectors[i];
    Certificate::checked(
        norm,
        ConstantKind::Suppression,
        value,
        Witness::Suppression {
            f: f.clone(),
            set: sets[k].clone(),
        },
        description,
        BoundKind::LowerBound,
        &[CITE_SUPPRESSION],
    )
}

/// `||f|| / ||g||` for vectors with the same modulus pattern.
pub fn lattice_ratio(norm: &NormSpec, f: &SparseVector, g: &SparseVector) -> Result<Rational> {
    if f.abs() != g.abs() {
        return Err(Error::InvalidInstance(
            "lattice ratio needs |f_j| = |g_j| for every j".into(),
        ));
    }
    if g.is_zero() {
        return Err(Error::ZeroVector("lattice ratio"));
    }
    ratio_of(norm.norm(f)?, norm.norm(g)?)
}

pub fn lattice_certificate(norm: &NormSpec, f: &SparseVector, g: &SparseVector) -> Result<Certificate> {
    let value = lattice_ratio(norm, f, g)?;
    Certificate::checked(
        norm,
        ConstantKind::Lattice,
        value,
        Witness::Lattice { f: f.clone(), g: g.clone() },
        "single (f, g) pair",
        BoundKind::LowerBound,
        &[CITE_LATTICE],
    )
}

/// Data for one Property (A) comparison `||1_{eps,A} + f|| <= ||1_{delta,B} + f||`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyAInstance {
    pub f: SparseVector,
    pub a: SignedSet,
    pub b: SignedSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyAOutcome {
    pub holds: bool,
    #[serde(serialize_with = "rational::serialize")]
    pub lhs: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub rhs: Rational,
    /// `rhs - lhs`.
    #[serde(serialize_with = "rational::serialize")]
    pub margin: Rational,
}

impl PropertyAInstance {
    pub fn validate(&self) -> Result<()> {
        if self.f.sup_norm() > Rational::one() {
            return Err(Error::InvalidInstance("max |f_j| must not exceed 1".into()));
        }
        if self.a.len() > self.b.len() {
            return Err(Error::InvalidInstance("|A| must not exceed |B|".into()));
        }
        let a = self.a.index_set();
        let b = self.b.index_set();
        let support = self.f.support();
        if !a.is_disjoint(&b) || !a.is_disjoint(&support) || !b.is_disjoint(&support) {
            return Err(Error::InvalidInstance("A, B and supp(f) must be pairwise disjoint".into()));
        }
        Ok(())
    }
}

pub fn property_a_check(norm: &NormSpec, instance: &PropertyAInstance) -> Result<PropertyAOutcome> {
    instance.validate()?;
    let lhs = norm.norm(&(&instance.a.indicator() + &instance.f))?;
    let rhs = norm.norm(&(&instance.b.indicator() + &instance.f))?;
    let margin = &rhs - &lhs;
    Ok(PropertyAOutcome {
        holds: !margin.is_negative(),
        lhs,
        rhs,
        margin,
    })
}

/// Largest superdemocracy ratios found.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuperdemocracyReport {
    pub primal: Certificate,
    /// Polyhedral norms only.
    pub dual: Option<Certificate>,
}

/// Default cap on `m` for [`superdemocracy_report`].
pub const SUPERDEMOCRACY_LIMIT: usize = 12;

/// `max ||1_{eps,A}|| / ||1_{delta,B}||` over `|A| = |B| = m <= m_max` and all
/// signs. Symmetric norms are searched on `A = B = {1..m}`, which covers
/// every pair of sets by permutation invariance; polyhedral norms on all
/// subsets of `{1..d}`, together with the dual-basis ratio.
pub fn superdemocracy_report(norm: &NormSpec, m_max: usize) -> Result<SuperdemocracyReport> {
    if m_max == 0 {
        return Err(Error::InvalidParameter("m_max must be positive".into()));
    }
    if m_max > SUPERDEMOCRACY_LIMIT {
        return Err(Error::TooLarge(format!("m_max {m_max} exceeds {SUPERDEMOCRACY_LIMIT}")));
    }
    let sets: Vec<Vec<usize>> = match norm.dimension() {
        None => (1..=m_max).map(|m| (1..=m).collect()).collect(),
        Some(d) => subsets_up_to(&(1..=d).collect::<Vec<_>>(), m_max.min(d))?
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect(),
    };
    let mut by_size: Vec<Vec<SignedSet>> = vec![Vec::new(); m_max + 1];
    for set in &sets {
        by_size[set.len()].extend(sign_patterns(set)?);
    }

    let primal_values = by_size
        .iter()
        .map(|group| group.iter().map(|s| norm.norm(&s.indicator())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let (value, numerator, denominator) = widest_ratio(&by_size, &primal_values)?;
    let family = match norm.dimension() {
        None => format!("A = B = {{1..m}}, m <= {m_max}, all signs (all sets by symmetry)"),
        Some(d) => format!("all A, B in {{1..{d}}} with |A| = |B| <= {m_max}, all signs"),
    };
    let primal = Certificate::checked(
        norm,
        ConstantKind::Superdemocracy,
        value,
        Witness::Indicators { numerator, denominator },
        family.clone(),
        BoundKind::ExactOverFamily,
        &[CITE_DEMOCRACY],
    )?;

    let dual = match norm.family() {
        None => None,
        Some(fam) => {
            let dual_values = by_size
                .iter()
                .map(|group| {
                    group
                        .par_iter()
                        .map(|s| Ok(fam.dual_norm(&fam.densify(&s.indicator())?)?.value))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let (value, numerator, denominator) = widest_ratio(&by_size, &dual_values)?;
            Some(Certificate::checked(
                norm,
                ConstantKind::DualSuperdemocracy,
                value,
                Witness::DualIndicators { numerator, denominator },
                format!("dual basis, {family}"),
                BoundKind::ExactOverFamily,
                &[CITE_DEMOCRACY, CITE_DUAL],
            )?)
        }
    };
    Ok(SuperdemocracyReport { primal, dual })
}

/// Sign patterns on `set` with the first sign fixed to `+`; norms are even.
fn sign_patterns(set: &[usize]) -> Result<Vec<SignedSet>> {
    let k = set.len();
    (0u32..(1 << k.saturating_sub(1)))
        .map(|mask| {
            SignedSet::new(set.iter().enumerate().map(|(i, &j)| {
                let minus = i > 0 && mask >> (i - 1) & 1 == 1;
                (j, if minus { Sign::Minus } else { Sign::Plus })
            }))
        })
        .collect()
}

fn widest_ratio(groups: &[Vec<SignedSet>], values: &[Vec<Rational>]) -> Result<(Rational, SignedSet, SignedSet)> {
    let mut best: Option<(Rational, SignedSet, SignedSet)> = None;
    for (group, vals) in groups.iter().zip(values) {
        let Some(hi) = (0..vals.len()).reduce(|a, b| if vals[b] > vals[a] { b } else { a }) else {
            continue;
        };
        let lo = (0..vals.len())
            .reduce(|a, b| if vals[b] < vals[a] { b } else { a })
            .expect("nonempty group");
        let ratio = ratio_of(vals[hi].clone(), vals[lo].clone())?;
        if best.as_ref().is_none_or(|(v, _, _)| ratio > *v) {
            best = Some((ratio, group[hi].clone(), group[lo].clone()));
        }
    }
    best.ok_or(Error::EmptyIndexSet)
}

/// `r_m = ||1_{A_m}|| / ||1_{eps,A_m}||` under the signed-sup norm, with
/// `A_m = {1..2m}` and alternating signs `eps_j = (-1)^j`. In closed form
/// `r_m = s_{2m} / (s_m - m w_inf)`.
pub fn ucc_growth(w: &Weight, m_max: usize) -> Result<Vec<Rational>> {
    if w.is_constant() {
        return Err(Error::InvalidParameter(
            "the constant weight makes the alternating indicator vanish".into(),
        ));
    }
    if !w.tail_limit().is_positive() {
        return Err(Error::InvalidParameter("UCC growth needs w_inf > 0".into()));
    }
    (1..=m_max)
        .map(|m| {
            let plain = SparseVector::indicator(&(1..=2 * m).collect::<Vec<_>>());
            let alternating = SignedSet::new((1..=2 * m).map(|j| (j, if j % 2 == 1 { Sign::Minus } else { Sign::Plus })))?;
            ratio_of(signedsup_norm(w, &plain).value, signedsup_norm(w, &alternating.indicator()).value)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiGreedyRatio {
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    /// Smallest `m` attaining the maximum.
    pub m: usize,
    /// Levels with a threshold tie, where the natural tie-break decided `G_m`.
    pub ties: Vec<usize>,
}

/// `max_m ||G_m x|| / ||x||`.
pub fn quasi_greedy_ratio(norm: &NormSpec, x: &SparseVector) -> Result<QuasiGreedyRatio> {
    if x.is_zero() {
        return Err(Error::ZeroVector("quasi-greedy ratio"));
    }
    let whole = norm.norm(x)?;
    let mut best = (Rational::zero(), 0);
    for m in 1..=x.len() {
        let value = norm.norm(&greedy_approx(x, m))? / &whole;
        if value > best.0 {
            best = (value, m);
        }
    }
    Ok(QuasiGreedyRatio {
        value: best.0,
        m: best.1,
        ties: threshold_ties(x),
    })
}

pub fn quasi_greedy_certificate(norm: &NormSpec, x: &SparseVector) -> Result<Certificate> {
    let q = quasi_greedy_ratio(norm, x)?;
    Certificate::checked(
        norm,
        ConstantKind::QuasiGreedy,
        q.value,
        Witness::QuasiGreedy { x: x.clone(), m: q.m },
        "greedy approximations of one vector",
        BoundKind::LowerBound,
        &[CITE_QUASI],
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlmostGreedyMargins {
    /// `sigma~_m(x) - ||x - G_m x||` for `m = 0..=|supp x|`.
    #[serde(serialize_with = "rational::serialize_vec")]
    pub margins: Vec<Rational>,
    pub ties: Vec<usize>,
}

impl AlmostGreedyMargins {
    pub fn all_nonnegative(&self) -> bool {
        self.margins.iter().all(|m| !m.is_negative())
    }
}

pub fn almost_greedy_margin(norm: &NormSpec, x: &SparseVector) -> Result<AlmostGreedyMargins> {
    if x.is_zero() {
        return Err(Error::ZeroVector("almost-greedy margin"));
    }
    let margins = (0..=x.len())
        .map(|m| {
            let residual = norm.norm(&(x - &greedy_approx(x, m)))?;
            Ok(sigma_tilde(x, m, norm)? - residual)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlmostGreedyMargins {
        margins,
        ties: threshold_ties(x),
    })
}

/// A constant known from a theorem rather than from search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedBound {
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    pub statement: &'static str,
}

/// Upper bound for the suppression constant of `D_w`: `min{2, 1/w_inf}`,
/// and `1` when `w_inf = 0`.
pub fn dw_suppression_bound(w: &Weight) -> NamedBound {
    let tail = w.tail_limit();
    if tail.is_zero() {
        return NamedBound {
            value: Rational::one(),
            statement: "D_w is 1-suppression unconditional when w_inf = 0",
        };
    }
    NamedBound {
        value: rational::int(2).min(tail.recip()),
        statement: "the suppression constant of D_w is at most min{2, 1/w_inf}",
    }
}

/// `C` in `||f||_{1,w} <= C ||f||_{D,w}` for real scalars.
pub fn comparison_constant(w: &Weight) -> NamedBound {
    if w.tail_limit().is_zero() {
        NamedBound {
            value: rational::int(2),
            statement: "||f||_{1,w} <= 2 ||f||_{D,w} for real f when w_inf = 0",
        }
    } else {
        NamedBound {
            value: rational::int(4),
            statement: "||f||_{1,w} <= 4 ||f||_{D,w} for real f",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::FamilyPreset;
    use crate::rational::{int, ratio};

    fn third() -> Weight {
        Weight::one_then(ratio(1, 3)).unwrap()
    }

    fn g_third() -> SparseVector {
        SparseVector::from_dense(&[int(1), ratio(1, 3), ratio(-1, 3)])
    }

    fn set(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn suppression_examples() {
        let n = NormSpec::dw(third());
        assert_eq!(suppression_ratio(&n, &g_third(), &set(&[1, 2])).unwrap(), ratio(10, 9));
        assert_eq!(suppression_ratio(&n, &g_third(), &set(&[1, 2, 3, 9])).unwrap(), int(1));
        assert!(suppression_ratio(&n, &SparseVector::zero(), &set(&[1])).is_err());
        let hex = NormSpec::preset(&FamilyPreset::Hexagon { alpha: ratio(1, 2) }).unwrap();
        let f = SparseVector::from_dense(&[int(2), int(-2)]);
        assert_eq!(suppression_ratio(&hex, &f, &set(&[1])).unwrap(), int(2));
    }

    #[test]
    fn ks_examples() {
        let n = NormSpec::dw(third());
        let explicit = KsFamily::Explicit(vec![(g_third(), set(&[1, 2])), (g_third(), set(&[1]))]);
        let cert = ks_lower_bound(&n, &explicit).unwrap();
        assert_eq!(cert.value, ratio(10, 9));
        assert_eq!(cert.bound_kind, BoundKind::LowerBound);
        cert.verify(&n).unwrap();

        let lorentz = NormSpec::lorentz(third());
        let grid = ks_lower_bound(&lorentz, &KsFamily::Grid(GridFamily::default_grid())).unwrap();
        assert_eq!(grid.value, int(1));
        assert!(ks_lower_bound(&n, &KsFamily::Explicit(vec![])).is_err());
    }

    #[test]
    fn certificate_rejects_wrong_claims() {
        let n = NormSpec::dw(third());
        let err = Certificate::checked(
            &n,
            ConstantKind::Suppression,
            int(2),
            Witness::Suppression { f: g_third(), set: set(&[1, 2]) },
            "test",
            BoundKind::LowerBound,
            &[],
        );
        assert!(matches!(err, Err(Error::CertificateMismatch { .. })));
    }

    #[test]
    fn lattice_examples() {
        let n = NormSpec::dw(third());
        let h = SparseVector::from_dense(&[int(1), ratio(1, 3), ratio(1, 3)]);
        assert_eq!(lattice_ratio(&n, &h, &g_third()).unwrap(), ratio(11, 9));
        assert_eq!(lattice_ratio(&n, &h, &h).unwrap(), int(1));
        assert_eq!(lattice_ratio(&NormSpec::lorentz(third()), &h, &g_third()).unwrap(), int(1));
        assert!(lattice_ratio(&n, &h, &SparseVector::unit(1)).is_err());
    }

    #[test]
    fn property_a_examples() {
        let n = NormSpec::dw(third());
        let empty = PropertyAInstance {
            f: SparseVector::from_dense(&[ratio(1, 2)]),
            a: SignedSet::empty(),
            b: SignedSet::empty(),
        };
        let out = property_a_check(&n, &empty).unwrap();
        assert!(out.holds);
        assert_eq!(out.margin, int(0));

        let inst = PropertyAInstance {
            f: SparseVector::from_dense(&[ratio(1, 2), ratio(-1, 3)]),
            a: SignedSet::new([(3, Sign::Plus)]).unwrap(),
            b: SignedSet::new([(4, Sign::Minus), (5, Sign::Plus)]).unwrap(),
        };
        assert!(property_a_check(&n, &inst).unwrap().holds);

        let overlapping = PropertyAInstance { a: SignedSet::new([(1, Sign::Plus)]).unwrap(), ..inst.clone() };
        assert!(matches!(property_a_check(&n, &overlapping), Err(Error::InvalidInstance(_))));
        let too_big = PropertyAInstance { f: SparseVector::from_dense(&[int(2)]), ..inst };
        assert!(matches!(property_a_check(&n, &too_big), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn superdemocracy_examples() {
        let dw = superdemocracy_report(&NormSpec::dw(third()), 5).unwrap();
        assert_eq!(dw.primal.value, int(1));
        assert!(dw.dual.is_none());

        let signed = superdemocracy_report(&NormSpec::signed_sup(third()), 2).unwrap();
        assert_eq!(signed.primal.value, int(2));

        let bad = NormSpec::preset(&FamilyPreset::BadDual { d: 3 }).unwrap();
        let report = superdemocracy_report(&bad, 3).unwrap();
        let dual = report.dual.unwrap();
        assert!(dual.value >= ratio(12, 11));
        dual.verify(&bad).unwrap();
        assert!(superdemocracy_report(&bad, 13).is_err());
    }

    #[test]
    fn ucc_examples() {
        let r = ucc_growth(&third(), 6).unwrap();
        assert_eq!(r[0], int(2));
        for (m, value) in r.iter().enumerate() {
            assert_eq!(*value, int(m as i64 + 2));
        }
        let half = ucc_growth(&Weight::one_then(ratio(1, 2)).unwrap(), 1).unwrap();
        assert_eq!(half[0], int(3));
        assert!(ucc_growth(&Weight::constant(), 3).is_err());
    }

    #[test]
    fn quasi_and_almost_greedy_examples() {
        let n = NormSpec::dw(third());
        assert_eq!(quasi_greedy_ratio(&n, &SparseVector::unit(4)).unwrap().value, int(1));
        let q = quasi_greedy_ratio(&n, &g_third()).unwrap();
        assert_eq!((q.value.clone(), q.m), (ratio(10, 9), 2));
        assert_eq!(q.ties, vec![2]);
        assert_eq!(quasi_greedy_certificate(&n, &g_third()).unwrap().value, ratio(10, 9));

        let f = SparseVector::from_dense(&[int(1), ratio(1, 3)]);
        let margins = almost_greedy_margin(&n, &f).unwrap();
        assert_eq!(margins.margins, vec![int(0), int(0), int(0)]);
        assert!(margins.all_nonnegative());
        assert!(almost_greedy_margin(&n, &SparseVector::zero()).is_err());
    }

    #[test]
    fn named_bounds() {
        assert_eq!(dw_suppression_bound(&third()).value, int(2));
        assert_eq!(dw_suppression_bound(&Weight::one_then(ratio(2, 3)).unwrap()).value, ratio(3, 2));
        assert_eq!(dw_suppression_bound(&Weight::sqrt_primitive()).value, int(1));
        assert_eq!(comparison_constant(&third()).value, int(4));
        assert_eq!(comparison_constant(&Weight::sqrt_primitive()).value, int(2));
    }

    #[test]
    fn certificate_json_shape() {
        let n = NormSpec::dw(third());
        let cert = ks_lower_bound(&n, &KsFamily::Explicit(vec![(g_third(), set(&[1, 2]))])).unwrap();
        let json = cert.to_json().unwrap();
        for key in ["kind", "value", "witness", "family", "exact", "bound_kind", "citations"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["value"], "10/9");
        assert_eq!(json["bound_kind"], "lower_bound");
    }
}
