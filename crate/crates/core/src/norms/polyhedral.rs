//! Polyhedral norms `||x||_F = max_{u in F} |<u, x>|` on `R^d`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp;
use crate::rational::{self, Rational};
use crate::vectors::SparseVector;
use crate::weights::Weight;

/// A finite family of functionals spanning `(R^d)^*`, stored up to sign and
/// without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub struct FunctionalFamily {
    dim: usize,
    functionals: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNorm {
    pub value: Rational,
    /// A point with `||x||_F <= 1` attaining `<x*, x> = value`.
    pub maximizer: Vec<Rational>,
    /// Signed coefficients `c_u` with `x* = sum c_u u` and
    /// `sum |c_u| = value`, indexed into the family.
    pub combination: Vec<(usize, Rational)>,
}

impl FunctionalFamily {
    pub fn new(dim: usize, functionals: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidFamily("dimension must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        let mut kept = Vec::new();
        for u in functionals {
            if u.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: u.len() });
            }
            let Some(lead) = u.iter().find(|v| !v.is_zero()) else {
                continue;
            };
            let normalized: Vec<Rational> = if lead.is_negative() {
                u.iter().map(|v| -v).collect()
            } else {
                u
            };
            if seen.insert(normalized.clone()) {
                kept.push(normalized);
            }
        }
        if rank(&kept, dim) < dim {
            return Err(Error::InvalidFamily(format!(
                "functionals do not span the dual of R^{dim}"
            )));
        }
        Ok(Self { dim, functionals: kept })
    }

    pub fn from_preset(preset: &FamilyPreset) -> Result<Self> {
        Self::new(preset.dim(), preset.raw_functionals()?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn functionals(&self) -> &[Vec<Rational>] {
        &self.functionals
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn norm(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(self
            .functionals
            .iter()
            .map(|u| dot(u, x).abs())
            .max()
            .unwrap_or_else(Rational::zero))
    }

    pub fn norm_sparse(&self, f: &SparseVector) -> Result<Rational> {
        self.norm(&self.densify(f)?)
    }

    pub fn densify(&self, f: &SparseVector) -> Result<Vec<Rational>> {
        if f.max_index() > self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.max_index() });
        }
        Ok((1..=self.dim).map(|j| f.get(j)).collect())
    }

    /// `||x*||_* = max { <x*, x> : ||x||_F <= 1 }`, solved exactly.
    pub fn dual_norm(&self, xstar: &[Rational]) -> Result<DualNorm> {
        let d = self.dim;
        if xstar.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: xstar.len() });
        }
        // x = y - z with y, z >= 0; rows are +u and -u.
        let mut c = xstar.to_vec();
        c.extend(xstar.iter().map(|v| -v));
        let mut a = Vec::with_capacity(2 * self.len());
        for u in &self.functionals {
            let mut row = u.clone();
            row.extend(u.iter().map(|v| -v));
            a.push(row);
        }
        for u in &self.functionals {
            let mut row: Vec<Rational> = u.iter().map(|v| -v).collect();
            row.extend(u.iter().cloned());
            a.push(row);
        }
        let b = vec![Rational::one(); a.len()];
        let sol = lp::maximize(&c, &a, &b)?;
        let maximizer: Vec<Rational> = (0..d).map(|j| &sol.point[j] - &sol.point[d + j]).collect();
        let m = self.len();
        let combination = (0..m)
            .filter_map(|i| {
                let coef = &sol.duals[i] - &sol.duals[m + i];
                (!coef.is_zero()).then_some((i, coef))
            })
            .collect();
        Ok(DualNorm {
            value: sol.value,
            maximizer,
            combination,
        })
    }
}

pub fn polyhedral_norm(family: &FunctionalFamily, x: &[Rational]) -> Result<Rational> {
    family.norm(x)
}

pub fn dual_norm(family: &FunctionalFamily, xstar: &[Rational]) -> Result<DualNorm> {
    family.dual_norm(xstar)
}

/// Named families built from parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case")]
pub enum FamilyPreset {
    /// `eps_1 (e*_{p1} + e*_{pd} / 3) + sum_{1<j<d} eps_j e*_{pj}` over
    /// permutations `p` and signs `eps`.
    BadDual { d: usize },
    /// `(alpha, 0)`, `(0, alpha)` and `(1, 1)` in the plane.
    Hexagon {
        #[serde(with = "crate::rational::serde_str")]
        alpha: Rational,
    },
    /// The `D_w` norm restricted to `R^d`, spelled out as the functionals
    /// behind each `Phi_1 + Phi_2` configuration.
    PaFiniteDw { d: usize, weight: Weight },
}

impl FamilyPreset {
    pub fn dim(&self) -> usize {
        match self {
            FamilyPreset::BadDual { d } | FamilyPreset::PaFiniteDw { d, .. } => *d,
            FamilyPreset::Hexagon { .. } => 2,
        }
    }

    pub fn raw_functionals(&self) -> Result<Vec<Vec<Rational>>> {
        match self {
            FamilyPreset::BadDual { d } => bad_dual_functionals(*d),
            FamilyPreset::Hexagon { alpha } => hexagon_functionals(alpha),
            FamilyPreset::PaFiniteDw { d, weight } => pa_finite_functionals(*d, weight),
        }
    }
}

pub fn family_for(preset: &FamilyPreset) -> Result<FunctionalFamily> {
    FunctionalFamily::from_preset(preset)
}

fn bad_dual_functionals(d: usize) -> Result<Vec<Vec<Rational>>> {
    if !(3..=10).contains(&d) {
        return Err(Error::InvalidParameter(format!("bad-dual dimension {d} outside 3..=10")));
    }
    let third = rational::ratio(1, 3);
    let mut out = Vec::new();
    for first in 0..d {
        for last in 0..d {
            if first == last {
                continue;
            }
            let middle: Vec<usize> = (0..d).filter(|&j| j != first && j != last).collect();
            for mask in 0u32..(1 << (d - 1)) {
                let sign = |bit: usize| {
                    if mask >> bit & 1 == 1 {
                        -Rational::one()
                    } else {
                        Rational::one()
                    }
                };
                let mut u = vec![Rational::zero(); d];
                let eps1 = sign(0);
                u[last] = &eps1 * &third;
                u[first] = eps1;
                for (k, &j) in middle.iter().enumerate() {
                    u[j] = sign(k + 1);
                }
                out.push(u);
            }
        }
    }
    Ok(out)
}

fn hexagon_functionals(alpha: &Rational) -> Result<Vec<Vec<Rational>>> {
    if !alpha.is_positive() || *alpha >= Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "hexagon parameter {} must lie in (0, 1)",
            rational::format(alpha)
        )));
    }
    let z = Rational::zero();
    let one = Rational::one();
    Ok(vec![
        vec![alpha.clone(), z.clone()],
        vec![z, alpha.clone()],
        vec![one.clone(), one],
    ])
}

fn pa_finite_functionals(d: usize, w: &Weight) -> Result<Vec<Vec<Rational>>> {
    if d == 0 || d > 8 {
        return Err(Error::InvalidParameter(format!("finite D_w dimension {d} outside 1..=8")));
    }
    let Some(prefix) = w.prefix_len() else {
        return Err(Error::InvalidParameter(
            "finite D_w family needs an eventually constant weight".into(),
        ));
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let inside: Vec<usize> = (0..d).filter(|&j| mask >> j & 1 == 1).collect();
        let outside: Vec<usize> = (0..d).filter(|&j| mask >> j & 1 == 0).collect();
        let n = inside.len();
        let avg = if n == 0 { Rational::zero() } else { w.average(n) };
        // distinct prefix slots past n; every other outside coordinate sits in the tail
        let slots: Vec<usize> = (n + 1..=prefix.max(n)).collect();
        let mut placements = Vec::new();
        place(&outside, 0, &slots, &mut vec![None; outside.len()], &mut placements);
        for signs in 0u32..(1 << n) {
            for sigma in [Rational::one(), -Rational::one()] {
                for placement in &placements {
                    let mut u = vec![Rational::zero(); d];
                    for (k, &j) in inside.iter().enumerate() {
                        u[j] = if signs >> k & 1 == 1 { -&avg } else { avg.clone() };
                    }
                    for (k, &j) in outside.iter().enumerate() {
                        let weight = match placement[k] {
                            Some(slot) => w.value(slot),
                            None => w.tail_limit().clone(),
                        };
                        u[j] = &sigma * weight;
                    }
                    out.push(u);
                }
            }
        }
    }
    Ok(out)
}

fn place(
    outside: &[usize],
    k: usize,
    slots: &[usize],
    current: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if k == outside.len() {
        out.push(current.clone());
        return;
    }
    current[k] = None;
    place(outside, k + 1, slots, current, out);
    for &slot in slots {
        if current[..k].contains(&Some(slot)) {
            continue;
        }
        current[k] = Some(slot);
        place(outside, k + 1, slots, current, out);
    }
    current[k] = None;
}

fn dot(u: &[Rational], x: &[Rational]) -> Rational {
    u.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn rank(rows: &[Vec<Rational>], dim: usize) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            let (head, tail) = m.split_at_mut(i);
            for (target, source) in tail[0][col..dim].iter_mut().zip(&head[r][col..dim]) {
                *target -= &factor * source;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    d: usize,
    functionals: Vec<Vec<String>>,
}

impl TryFrom<FamilyJson> for FunctionalFamily {
    type Error = Error;

    fn try_from(raw: FamilyJson) -> Result<Self> {
        let functionals = raw
            .functionals
            .iter()
            .map(|u| u.iter().map(|v| rational::parse(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FunctionalFamily::new(raw.d, functionals)
    }
}

impl From<FunctionalFamily> for FamilyJson {
    fn from(family: FunctionalFamily) -> Self {
        FamilyJson {
            d: family.dim,
            functionals: family
                .functionals
                .iter()
                .map(|u| u.iter().map(rational::format).collect())
                .collect(),
        }
    }
}
