//! The thresholding greedy algorithm and the best `m`-term errors it is
//! measured against.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::NormSpec;
use crate::rational::{self, Rational};
use crate::vectors::{IndexSet, SparseVector};

/// Upper limit on the number of candidate supports enumerated by
/// `sigma_tilde` and `sigma`.
pub const MAX_CANDIDATES: usize = 1 << 20;

/// Natural greedy ordering of `supp(x)`: decreasing modulus, ties by index.
pub fn greedy_ordering(x: &SparseVector) -> Vec<usize> {
    let mut order: Vec<(usize, Rational)> = x.iter().map(|(j, a)| (j, a.abs())).collect();
    order.sort_by(|(i, a), (j, b)| b.cmp(a).then(i.cmp(j)));
    order.into_iter().map(|(j, _)| j).collect()
}

/// The greedy set of size `min(m, |supp x|)`.
pub fn greedy_set(x: &SparseVector, m: usize) -> IndexSet {
    greedy_ordering(x).into_iter().take(m).collect()
}

/// `G_m(x)`.
pub fn greedy_approx(x: &SparseVector, m: usize) -> SparseVector {
    x.project(&greedy_set(x, m))
}

/// Levels `m` (with `1 <= m < |supp x|`) at which the `m`-th and
/// `(m+1)`-th greedy coefficients tie in modulus, so the greedy set of
/// size `m` is not unique.
pub fn threshold_ties(x: &SparseVector) -> Vec<usize> {
    let order = greedy_ordering(x);
    order
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| x.get(pair[0]).abs() == x.get(pair[1]).abs())
        .map(|(k, _)| k + 1)
        .collect()
}

/// `sigma~_m(x) = min { ||x - S_A x|| : |A| <= m }`.
pub fn sigma_tilde(x: &SparseVector, m: usize, norm: &NormSpec) -> Result<Rational> {
    Ok(sigma_tilde_witness(x, m, norm)?.0)
}

/// `sigma~_m(x)` with its minimizing set; ties go to the lexicographically
/// smallest set.
pub fn sigma_tilde_witness(
    x: &SparseVector,
    m: usize,
    norm: &NormSpec,
) -> Result<(Rational, IndexSet)> {
    let support: Vec<usize> = x.support().into_iter().collect();
    if m >= support.len() {
        return Ok((Rational::zero(), support.into_iter().collect()));
    }
    let candidates = subsets_up_to(&support, m)?;
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for set in candidates {
        let kept: IndexSet = set.iter().copied().collect();
        let value = norm.norm(&x.project_complement(&kept))?;
        if best.as_ref().is_none_or(|(v, s)| value < *v || (value == *v && set < *s)) {
            best = Some((value, set));
        }
    }
    let (value, set) = best.expect("the empty set is always a candidate");
    Ok((value, set.into_iter().collect()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SigmaOptions {
    /// Stop once a full coordinate cycle improves by less than this.
    pub tol: f64,
    /// Extra indices allowed in candidate supports besides `supp(x)`.
    pub window: Option<IndexSet>,
    pub max_cycles: usize,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            window: None,
            max_cycles: 200,
        }
    }
}

impl SigmaOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

/// An upper bound for `sigma_m(x)`: the norm of `x - witness` evaluated at
/// the best coefficients found.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SigmaEstimate {
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: Rational,
    pub support: IndexSet,
    pub witness: SparseVector,
    pub tol: f64,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub sigma_tilde: Rational,
}

/// Best `m`-term error with free coefficients, by cyclic coordinate descent
/// with golden-section line searches. Every candidate support starts at the
/// projection coefficients and only strict improvements are accepted, so the
/// result never exceeds `sigma~_m(x)`.
pub fn sigma(
    x: &SparseVector,
    m: usize,
    norm: &NormSpec,
    options: &SigmaOptions,
) -> Result<SigmaEstimate> {
    if options.tol.is_nan() || options.tol <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let (tilde, _) = sigma_tilde_witness(x, m, norm)?;
    let support = x.support();
    if m >= support.len() {
        return Ok(SigmaEstimate {
            value: Rational::zero(),
            support,
            witness: x.clone(),
            tol: options.tol,
            sigma_tilde: tilde,
        });
    }
    let mut pool = support.clone();
    if let Some(window) = &options.window {
        pool.extend(window.iter().copied());
    }
    let pool: Vec<usize> = pool.into_iter().collect();
    let candidates = subsets_up_to(&pool, m)?;
    let radius = 2.0 * rational::to_f64(&norm.norm(x)?).max(rational::to_f64(&x.sup_norm()));

    let results: Vec<Result<(Rational, Vec<usize>, SparseVector)>> = candidates
        .into_par_iter()
        .map(|set| descend(x, &set, norm, options, radius).map(|(v, w)| (v, set, w)))
        .collect();
    let mut best: Option<(Rational, Vec<usize>, SparseVector)> = None;
    for result in results {
        let (value, set, witness) = result?;
        if best.as_ref().is_none_or(|(v, s, _)| value < *v || (value == *v && set < *s)) {
            best = Some((value, set, witness));
        }
    }
    let (value, set, witness) = best.expect("the empty set is always a candidate");
    Ok(SigmaEstimate {
        value,
        support: set.into_iter().collect(),
        witness,
        tol: options.tol,
        sigma_tilde: tilde,
    })
}

fn descend(
    x: &SparseVector,
    set: &[usize],
    norm: &NormSpec,
    options: &SigmaOptions,
    radius: f64,
) -> Result<(Rational, SparseVector)> {
    let mut coeffs: Vec<Rational> = set.iter().map(|&j| x.get(j)).collect();
    let residual = |coeffs: &[Rational]| -> Result<Rational> {
        let approx = SparseVector::from_pairs(set.iter().copied().zip(coeffs.iter().cloned()))?;
        norm.norm(&(x - &approx))
    };
    let mut current = residual(&coeffs)?;
    if set.is_empty() {
        return Ok((current, SparseVector::zero()));
    }
    let line_tol = options.tol / 10.0;
    for _ in 0..options.max_cycles {
        let start = current.clone();
        for k in 0..set.len() {
            let centre = rational::to_f64(&coeffs[k]);
            let reach = radius.max(centre.abs());
            let mut trial = coeffs.clone();
            let mut eval = |t: f64| -> Result<f64> {
                trial[k] = rational::from_f64(t).unwrap_or_else(Rational::zero);
                Ok(rational::to_f64(&residual(&trial)?))
            };
            let t = golden_section(&mut eval, -reach, reach, line_tol)?;
            let Some(candidate) = rational::from_f64(t) else { continue };
            let mut next = coeffs.clone();
            next[k] = candidate;
            let value = residual(&next)?;
            if value < current {
                current = value;
                coeffs = next;
            }
        }
        if rational::to_f64(&(&start - &current)) < options.tol {
            break;
        }
    }
    let witness = SparseVector::from_pairs(set.iter().copied().zip(coeffs))?;
    Ok((current, witness))
}

fn golden_section<F>(f: &mut F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc <= fd { c } else { d })
}

/// Residual curve `||x - G_m(x)||` for `m = 0..=|supp x|`.
#[derive(Clone, Debug, PartialEq)]
pub struct GreedyTrace {
    pub x: SparseVector,
    pub ordering: Vec<usize>,
    pub residual_norms: Vec<Rational>,
    pub exact: bool,
}

impl GreedyTrace {
    /// `[{"m": 0, "residual": "10/9", "support": [..]}, ...]`, where
    /// `support` is the greedy set kept at step `m`. Approximate residuals
    /// are rendered as decimals.
    pub fn to_json(&self) -> serde_json::Value {
        let rows = self
            .residual_norms
            .iter()
            .enumerate()
            .map(|(m, r)| {
                let residual = if self.exact {
                    rational::format(r)
                } else {
                    rational::to_decimal(r, 20)
                };
                serde_json::json!({
                    "m": m,
                    "residual": residual,
                    "support": &self.ordering[..m],
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

pub fn trace(x: &SparseVector, norm: &NormSpec) -> Result<GreedyTrace> {
    let ordering = greedy_ordering(x);
    let residual_norms = (0..=ordering.len())
        .map(|m| {
            let kept: IndexSet = ordering[..m].iter().copied().collect();
            norm.norm(&x.project_complement(&kept))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GreedyTrace {
        x: x.clone(),
        ordering,
        residual_norms,
        exact: norm.is_exact(),
    })
}

/// All subsets of `pool` with at most `m` elements, each sorted, in
/// lexicographic order.
pub(crate) fn subsets_up_to(pool: &[usize], m: usize) -> Result<Vec<Vec<usize>>> {
    let mut count: usize = 0;
    let mut binom: usize = 1;
    count = count.saturating_add(binom);
    for k in 1..=m.min(pool.len()) {
        binom = binom.saturating_mul(pool.len() - k + 1) / k;
        count = count.saturating_add(binom);
    }
    if count > MAX_CANDIDATES {
        return Err(Error::TooLarge(format!(
            "{count} candidate sets of size <= {m} from {} indices",
            pool.len()
        )));
    }
    let mut out = Vec::with_capacity(count);
    let mut current = Vec::new();
    collect_subsets(pool, 0, m, &mut current, &mut out);
    Ok(out)
}

fn collect_subsets(
    pool: &[usize],
    from: usize,
    m: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(current.clone());
    if current.len() == m {
        return;
    }
    for i in from..pool.len() {
        current.push(pool[i]);
        collect_subsets(pool, i + 1, m, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::weights::Weight;

    fn dw_third() -> NormSpec {
        NormSpec::dw(Weight::one_then(ratio(1, 3)).unwrap())
    }

    fn f_third() -> SparseVector {
        SparseVector::from_dense(&[int(1), ratio(1, 3)])
    }

    #[test]
    fn ordering_examples() {
        let x = SparseVector::from_dense(&[ratio(1, 2), int(-1), ratio(1, 2)]);
        assert_eq!(greedy_ordering(&x), vec![2, 1, 3]);
        let ones = SparseVector::indicator(&[3, 1, 2]);
        assert_eq!(greedy_ordering(&ones), vec![1, 2, 3]);
        assert_eq!(greedy_ordering(&SparseVector::unit(5)), vec![5]);
        assert_eq!(threshold_ties(&x), vec![2]);
    }

    #[test]
    fn approx_examples() {
        let x = SparseVector::from_dense(&[ratio(1, 2), int(-1), ratio(1, 2)]);
        assert!(greedy_approx(&x, 0).is_zero());
        assert_eq!(greedy_approx(&x, 3), x);
        assert_eq!(greedy_approx(&x, 1), SparseVector::unit(2).scale(&int(-1)));
    }

    #[test]
    fn sigma_tilde_examples() {
        let n = dw_third();
        let (value, set) = sigma_tilde_witness(&f_third(), 1, &n).unwrap();
        assert_eq!(value, ratio(1, 3));
        assert_eq!(set, [1].into_iter().collect());
        assert_eq!(sigma_tilde(&f_third(), 2, &n).unwrap(), int(0));
        assert_eq!(sigma_tilde(&f_third(), 0, &n).unwrap(), ratio(10, 9));
    }

    #[test]
    fn sigma_examples() {
        let n = dw_third();
        let opts = SigmaOptions::default();
        let est = sigma(&f_third(), 1, &n, &opts).unwrap();
        assert!(est.value <= ratio(1, 3));
        assert_eq!(est.sigma_tilde, ratio(1, 3));
        let full = sigma(&f_third(), 2, &n, &opts).unwrap();
        assert_eq!(full.value, int(0));
        assert_eq!(full.witness, f_third());
        assert_eq!(sigma(&f_third(), 0, &n, &opts).unwrap().value, ratio(10, 9));
        assert!(sigma(&f_third(), 1, &n, &SigmaOptions::with_tol(0.0)).is_err());
    }

    #[test]
    fn sigma_can_beat_projection() {
        // In the hexagon norm, e_1 + e_2 is best approximated from span{e_1}
        // by moving past the projection coefficient.
        let fam = crate::norms::family_for(&crate::norms::FamilyPreset::Hexagon { alpha: ratio(1, 2) }).unwrap();
        let n = NormSpec::polyhedral(fam);
        let x = SparseVector::from_dense(&[int(1), int(1)]);
        let est = sigma(&x, 1, &n, &SigmaOptions::default()).unwrap();
        assert!(est.value <= est.sigma_tilde);
        assert!(rational::to_f64(&est.value) < 0.5 + 1e-6);
    }

    #[test]
    fn trace_examples() {
        let n = dw_third();
        let t = trace(&f_third(), &n).unwrap();
        assert_eq!(t.residual_norms, vec![ratio(10, 9), ratio(1, 3), int(0)]);
        assert_eq!(t.to_json()[1]["residual"], "1/3");
        assert_eq!(t.to_json()[1]["support"], serde_json::json!([1]));
        let e1 = trace(&SparseVector::unit(1), &n).unwrap();
        assert_eq!(e1.residual_norms, vec![int(1), int(0)]);
        let zero = trace(&SparseVector::zero(), &n).unwrap();
        assert_eq!(zero.residual_norms, vec![int(0)]);
    }

    #[test]
    fn subsets_are_lexicographic() {
        let all = subsets_up_to(&[1, 2, 3], 2).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(all[0], Vec::<usize>::new());
        assert!(subsets_up_to(&(1..=64).collect::<Vec<_>>(), 32).is_err());
    }
}
