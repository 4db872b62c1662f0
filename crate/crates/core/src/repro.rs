//! Built-in reproduction scenarios.
//!
//! Each scenario recomputes a family of concrete values and checks them
//! against their closed forms or stated bounds. Rational paths compare
//! exactly; paths through `w_n` compare within [`DEFAULT_TOLERANCE`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{self, KsFamily};
use crate::constructions as cons;
use crate::error::{Error, Result};
use crate::greedy::subsets_up_to;
use crate::norms::{dw_norm, lorentz_norm, marcinkiewicz_norm, FamilyPreset, FunctionalFamily, NormSpec};
use crate::oracle;
use crate::rational::{self, Rational};
use crate::sample;
use crate::vectors::{IndexSet, SparseVector};
use crate::weights::Weight;

/// Name and one-line description of every built-in scenario.
pub const SCENARIOS: &[(&str, &str)] = &[
    ("k1-witness", "norms of f_{1,1/3} and g_{1,1/3} and their suppression ratio"),
    ("kn-curve", "suppression ratios K_n of the (f_n, g_n) pairs for n = 1..64"),
    ("bad-dual", "bad-dual polyhedral norms for d = 3..6 and their dual norms"),
    ("hexagon", "hexagon norms for alpha in {1/2, 1/3, 2/3}"),
    ("pafinite", "finite D_w polyhedral norms and a suppression lower bound"),
    ("lattice-ratio", "lattice ratios ||h_n|| / ||g_n|| for n = 1..32"),
    ("ucc-growth", "sign-flip ratios r_m under the signed-sup norm"),
    ("remark-10-9", "grid search of ||f_a|| / ||g_a|| over a and the tail value"),
    ("sandwich+compare", "marcinkiewicz <= D_w <= lorentz <= C D_w on random instances"),
];

/// `10^-12`.
pub fn default_tolerance() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12))
}

/// Same value as [`default_tolerance`], as text.
pub const DEFAULT_TOLERANCE: &str = "1e-12";

/// Optional overrides; unset fields take each scenario's defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScenarioParams {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub alpha: Option<Rational>,
    pub weight: Option<Weight>,
    pub grid: Option<usize>,
    pub count: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Within,
    AtMost,
    AtLeast,
    LessThan,
    GreaterThan,
    Holds,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::Within => "~",
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::LessThan => "<",
            Relation::GreaterThan => ">",
            Relation::Holds => "",
        }
    }
}

/// One checked value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub label: String,
    pub relation: Relation,
    /// `p/q` for exact values, a decimal otherwise.
    pub computed: String,
    pub expected: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    pub pass: bool,
    pub citation: String,
}

fn show(q: &Rational, exact: bool) -> String {
    if exact {
        rational::format(q)
    } else {
        rational::to_decimal(q, 20)
    }
}

impl Expectation {
    fn compare(
        label: impl Into<String>,
        relation: Relation,
        computed: &Rational,
        expected: &Rational,
        exact: bool,
        citation: &str,
    ) -> Self {
        let pass = match relation {
            Relation::Equal => computed == expected,
            Relation::AtMost => computed <= expected,
            Relation::AtLeast => computed >= expected,
            Relation::LessThan => computed < expected,
            Relation::GreaterThan => computed > expected,
            Relation::Within | Relation::Holds => unreachable!("built by dedicated constructors"),
        };
        Self {
            label: label.into(),
            relation,
            computed: show(computed, exact),
            expected: show(expected, exact),
            tolerance: None,
            pass,
            citation: citation.to_string(),
        }
    }

    pub fn equal(label: impl Into<String>, computed: &Rational, expected: &Rational, citation: &str) -> Self {
        Self::compare(label, Relation::Equal, computed, expected, true, citation)
    }

    pub fn at_most(label: impl Into<String>, computed: &Rational, bound: &Rational, citation: &str) -> Self {
        Self::compare(label, Relation::AtMost, computed, bound, true, citation)
    }

    pub fn at_least(label: impl Into<String>, computed: &Rational, bound: &Rational, citation: &str) -> Self {
        Self::compare(label, Relation::AtLeast, computed, bound, true, citation)
    }

    pub fn less_than(label: impl Into<String>, computed: &Rational, bound: &Rational, exact: bool, citation: &str) -> Self {
        Self::compare(label, Relation::LessThan, computed, bound, exact, citation)
    }

    pub fn greater_than(label: impl Into<String>, computed: &Rational, bound: &Rational, citation: &str) -> Self {
        Self::compare(label, Relation::GreaterThan, computed, bound, true, citation)
    }

    /// `|computed - expected| <= tol`.
    pub fn within(
        label: impl Into<String>,
        computed: &Rational,
        expected: &Rational,
        tol: &Rational,
        citation: &str,
    ) -> Self {
        Self {
            label: label.into(),
            relation: Relation::Within,
            computed: rational::to_decimal(computed, 20),
            expected: rational::to_decimal(expected, 20),
            tolerance: Some(format!("{:e}", rational::to_f64(tol))),
            pass: (computed - expected).abs() <= *tol,
            citation: citation.to_string(),
        }
    }

    pub fn holds(label: impl Into<String>, pass: bool, detail: impl Into<String>, citation: &str) -> Self {
        Self {
            label: label.into(),
            relation: Relation::Holds,
            computed: detail.into(),
            expected: "true".into(),
            tolerance: None,
            pass,
            citation: citation.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnKind {
    Integer,
    /// Rendered as a decimal plus a `<name>_pq` column.
    Exact,
    /// Rendered as a decimal only.
    Approx,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Column {
    pub name: String,
    pub kind: ColumnKind,
}

/// Plot-ready rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Table {
    pub columns: Vec<Column>,
    #[serde(skip)]
    pub rows: Vec<Vec<Rational>>,
}

/// Significant digits in CSV decimals.
pub const CSV_DIGITS: usize = 15;

impl Table {
    pub fn new(columns: &[(&str, ColumnKind)]) -> Self {
        Self {
            columns: columns
                .iter()
                .map(|(name, kind)| Column {
                    name: name.to_string(),
                    kind: *kind,
                })
                .collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn header(&self) -> Vec<String> {
        let mut out: Vec<String> = self.columns.iter().map(|c| c.name.clone()).collect();
        out.extend(
            self.columns
                .iter()
                .filter(|c| c.kind == ColumnKind::Exact)
                .map(|c| format!("{}_pq", c.name)),
        );
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(self.header())?;
        for row in &self.rows {
            let mut record: Vec<String> = row
                .iter()
                .zip(&self.columns)
                .map(|(v, c)| match c.kind {
                    ColumnKind::Integer => rational::format(v),
                    _ => rational::to_decimal(v, CSV_DIGITS),
                })
                .collect();
            record.extend(
                row.iter()
                    .zip(&self.columns)
                    .filter(|(_, c)| c.kind == ColumnKind::Exact)
                    .map(|(v, _)| rational::format(v)),
            );
            writer.write_record(record)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv()?).map_err(|e| Error::Output(format!("{}: {e}", path.display())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub parameters: BTreeMap<String, String>,
    pub expectations: Vec<Expectation>,
    pub table: Table,
}

impl Report {
    fn new(scenario: &str) -> Self {
        Self {
            scenario: scenario.to_string(),
            parameters: BTreeMap::new(),
            expectations: Vec::new(),
            table: Table::default(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    fn expect(&mut self, e: Expectation) {
        self.expectations.push(e);
    }

    pub fn passed(&self) -> bool {
        self.expectations.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Expectation> {
        self.expectations.iter().filter(|e| !e.pass)
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self)?)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "scenario {} ({})", self.scenario, params.join(", "));
        for e in &self.expectations {
            let status = if e.pass { "PASS" } else { "FAIL" };
            let rhs = match (&e.relation, &e.tolerance) {
                (Relation::Holds, _) => format!("[{}]", e.computed),
                (_, Some(tol)) => format!("{} ~ {} (tol {tol})", e.computed, e.expected),
                (r, None) => format!("{} {} {}", e.computed, r.symbol(), e.expected),
            };
            let _ = writeln!(out, "  {status} {}: {rhs}", e.label);
            if !e.pass {
                let _ = writeln!(out, "       claim: {}", e.citation);
            }
        }
        let passed = self.expectations.iter().filter(|e| e.pass).count();
        let _ = writeln!(out, "  {passed}/{} expectations hold", self.expectations.len());
        out
    }
}

pub fn scenario_names() -> impl Iterator<Item = &'static str> {
    SCENARIOS.iter().map(|(name, _)| *name)
}

pub fn run_scenario(name: &str, params: &ScenarioParams) -> Result<Report> {
    match name {
        "k1-witness" => k1_witness(),
        "kn-curve" => kn_curve(params),
        "bad-dual" => bad_dual(params),
        "hexagon" => hexagon(params),
        "pafinite" => pafinite(params),
        "lattice-ratio" => lattice_ratio(params),
        "ucc-growth" => ucc_growth(params),
        "remark-10-9" => remark_grid(params),
        "sandwich+compare" | "sandwich-compare" => sandwich(params),
        _ => Err(Error::UnknownScenario(name.to_string())),
    }
}

/// Every scenario with default parameters, in registry order.
pub fn run_all(parallel: bool) -> Result<Vec<Report>> {
    let defaults = ScenarioParams::default();
    if parallel {
        scenario_names()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|name| run_scenario(name, &defaults))
            .collect()
    } else {
        scenario_names().map(|name| run_scenario(name, &defaults)).collect()
    }
}

const CITE_K1: &str = "with w = (1, 1/3, 1/3, ...), ||f_{1,1/3}|| = 10/9 and ||g_{1,1/3}|| = 1, so K_1 = 10/9";
const CITE_KN: &str = "K_n = 1 + (1 - 2 w_n) n/(2n+1) with w_n = 1/(1 + sqrt(2n+2)), increasing from 10/9 towards 3/2";
const CITE_BAD_NORM: &str = "in the bad-dual space ||g|| = d - 7/6 < d - 1";
const CITE_BAD_DUAL: &str = "in the bad-dual space ||h*|| <= 1 < ||g*||";
const CITE_HEX: &str = "in the hexagon space ||alpha^-1 (e_1 - e_2)|| = 1 and ||alpha^-1 e_1|| = alpha^-1";
const CITE_PAFINITE: &str = "the finite D_w polyhedral norm has suppression constant at least 10/9";
const CITE_LATTICE: &str = "||h_n|| / ||g_n|| = 1 + 2n w_n^2, increasing towards 2";
const CITE_UCC: &str = "r_m = s_{2m} / (s_m - m w_inf) grows without bound for eventually constant w";
const CITE_REMARK: &str = "||f_a|| / ||g_a|| is largest, equal to 10/9, at a = 1/3 and w = (1, 1/3, 1/3, ...)";
const CITE_SMALL: &str = "a D_w norm is 1-suppression unconditional on vectors with at most two nonzero coordinates";
const CITE_SANDWICH: &str = "||f||_{m,w} <= ||f||_{D,w} <= ||f||_{1,w}";
const CITE_COMPARE: &str = "||f||_{1,w} <= 4 ||f||_{D,w} for real f, and 2 ||f||_{D,w} for constant-sign f";

fn set(items: impl IntoIterator<Item = usize>) -> IndexSet {
    items.into_iter().collect()
}

fn third_weight() -> Weight {
    cons::flat_weight(&rational::ratio(1, 3))
}

fn k1_witness() -> Result<Report> {
    let mut report = Report::new("k1-witness");
    report.param("weight", third_weight());
    let third = rational::ratio(1, 3);
    let spec = NormSpec::dw(third_weight());
    let f = cons::f_vector(1, &third);
    let g = cons::g_vector(1, &third);
    let nf = spec.norm(&f)?;
    let ng = spec.norm(&g)?;
    report.expect(Expectation::equal("||f_{1,1/3}||", &nf, &rational::ratio(10, 9), CITE_K1));
    report.expect(Expectation::equal("||g_{1,1/3}||", &ng, &Rational::one(), CITE_K1));
    let cert = certify::ks_lower_bound(&spec, &KsFamily::Explicit(vec![(g.clone(), set([1, 2]))]))?;
    report.expect(Expectation::equal(
        "suppression ratio ||S_{1,2} g|| / ||g||",
        &cert.value,
        &rational::ratio(10, 9),
        CITE_K1,
    ));
    report.table = Table::new(&[("norm_f", ColumnKind::Exact), ("norm_g", ColumnKind::Exact), ("ratio", ColumnKind::Exact)]);
    report.table.push(vec![nf, ng, cert.value]);
    Ok(report)
}

fn kn_curve(params: &ScenarioParams) -> Result<Report> {
    let n_max = params.n.unwrap_or(64);
    if n_max == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let bits = rational::precision_bits();
    let mut report = Report::new("kn-curve");
    report.param("n", n_max);
    report.param("precision_bits", bits);

    let rows: Vec<(Rational, Rational, Rational)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let omega = cons::omega_n(n, bits);
            let spec = NormSpec::dw(cons::flat_weight(&omega));
            let g = cons::g_vector(n, &omega);
            let ratio = certify::suppression_ratio(&spec, &g, &set(cons::head_block(n)))?;
            let closed = cons::k_n_closed_form(n, &omega);
            Ok((omega, ratio, closed))
        })
        .collect::<Result<_>>()?;

    let tol = default_tolerance();
    report.table = Table::new(&[("n", ColumnKind::Integer), ("omega_n", ColumnKind::Approx), ("K_n", ColumnKind::Approx)]);
    let mut worst = (Rational::zero(), 1);
    for (i, (omega, ratio, closed)) in rows.iter().enumerate() {
        let dev = (ratio - closed).abs();
        if dev > worst.0 {
            worst = (dev, i + 1);
        }
        report.table.push(vec![rational::int(i as i64 + 1), omega.clone(), ratio.clone()]);
    }
    report.expect(Expectation::within(
        "K_1",
        &rows[0].1,
        &rational::ratio(10, 9),
        &tol,
        CITE_KN,
    ));
    report.expect(Expectation::within(
        format!("K_n against 1 + (1 - 2 w_n) n/(2n+1), worst n = {}", worst.1),
        &rows[worst.1 - 1].1,
        &rows[worst.1 - 1].2,
        &tol,
        CITE_KN,
    ));
    let increasing = rows.windows(2).all(|p| p[1].1 > p[0].1);
    report.expect(Expectation::holds("K_n strictly increasing", increasing, format!("n = 1..{n_max}"), CITE_KN));
    let top = &rows.last().expect("n_max >= 1").1;
    report.expect(Expectation::less_than(
        "max K_n",
        top,
        &rational::ratio(3, 2),
        false,
        CITE_KN,
    ));
    Ok(report)
}

/// `g = sum_{j<d} e_j - e_d/2`, `h* = e_1* - sum_{1<j<d} e_j*`, `g* = sum_{j<d} e_j*`.
pub fn bad_dual_vectors(d: usize) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut g = vec![Rational::one(); d];
    g[d - 1] = rational::ratio(-1, 2);
    let mut h_star = vec![-Rational::one(); d];
    h_star[0] = Rational::one();
    h_star[d - 1] = Rational::zero();
    let mut g_star = vec![Rational::one(); d];
    g_star[d - 1] = Rational::zero();
    (g, h_star, g_star)
}

fn bad_dual(params: &ScenarioParams) -> Result<Report> {
    let dims: Vec<usize> = match params.d {
        Some(d) => vec![d],
        None => (3..=6).collect(),
    };
    let mut report = Report::new("bad-dual");
    report.param("d", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
    report.table = Table::new(&[
        ("d", ColumnKind::Integer),
        ("norm_g", ColumnKind::Exact),
        ("dual_h_star", ColumnKind::Exact),
        ("dual_g_star", ColumnKind::Exact),
        ("bound", ColumnKind::Exact),
    ]);
    for d in dims {
        let family = FunctionalFamily::from_preset(&FamilyPreset::BadDual { d })?;
        let (g, h_star, g_star) = bad_dual_vectors(d);
        let dd = rational::int(d as i64);
        let target = &dd - rational::ratio(7, 6);
        let norm_g = family.norm(&g)?;
        report.expect(Expectation::equal(format!("d={d}: ||g||"), &norm_g, &target, CITE_BAD_NORM));
        report.expect(Expectation::equal(
            format!("d={d}: ||g|| read off the definition"),
            &oracle::bad_dual_direct(&g),
            &target,
            CITE_BAD_NORM,
        ));
        let h = family.dual_norm(&h_star)?.value;
        report.expect(Expectation::at_most(format!("d={d}: ||h*||"), &h, &Rational::one(), CITE_BAD_DUAL));
        let gs = family.dual_norm(&g_star)?.value;
        let bound = (&dd - Rational::one()) / &target;
        report.expect(Expectation::at_least(format!("d={d}: ||g*||"), &gs, &bound, CITE_BAD_DUAL));
        report.expect(Expectation::greater_than(format!("d={d}: ||g*|| exceeds 1"), &gs, &Rational::one(), CITE_BAD_DUAL));
        report.table.push(vec![dd, norm_g, h, gs, bound]);
    }
    Ok(report)
}

fn hexagon(params: &ScenarioParams) -> Result<Report> {
    let alphas: Vec<Rational> = match &params.alpha {
        Some(a) => vec![a.clone()],
        None => vec![rational::ratio(1, 2), rational::ratio(1, 3), rational::ratio(2, 3)],
    };
    let mut report = Report::new("hexagon");
    report.param("alpha", alphas.iter().map(rational::format).collect::<Vec<_>>().join(","));
    report.table = Table::new(&[
        ("alpha", ColumnKind::Exact),
        ("suppression_ratio", ColumnKind::Exact),
        ("dual_e1_star", ColumnKind::Exact),
    ]);
    for alpha in alphas {
        let spec = NormSpec::preset(&FamilyPreset::Hexagon { alpha: alpha.clone() })?;
        let family = spec.family().expect("polyhedral");
        let inv = alpha.recip();
        let a = rational::format(&alpha);
        let diff = SparseVector::from_dense(&[inv.clone(), -&inv]);
        let top = SparseVector::from_dense(std::slice::from_ref(&inv));
        report.expect(Expectation::equal(format!("alpha={a}: ||alpha^-1 (e_1 - e_2)||"), &spec.norm(&diff)?, &Rational::one(), CITE_HEX));
        report.expect(Expectation::equal(format!("alpha={a}: ||alpha^-1 e_1||"), &spec.norm(&top)?, &inv, CITE_HEX));
        let x = [Rational::one(), Rational::one()];
        report.expect(Expectation::equal(
            format!("alpha={a}: ||e_1 + e_2|| read off the definition"),
            &spec.norm(&SparseVector::from_dense(&x))?,
            &oracle::hexagon_direct(&alpha, &x),
            CITE_HEX,
        ));
        let two = rational::int(2);
        let f = SparseVector::from_dense(&[two.clone(), -two]);
        let ratio = certify::suppression_ratio(&spec, &f, &set([1]))?;
        report.expect(Expectation::equal(format!("alpha={a}: suppression ratio of 2(e_1 - e_2) at {{1}}"), &ratio, &inv, CITE_HEX));
        let dual = family.dual_norm(&[Rational::one(), Rational::zero()])?.value;
        report.expect(Expectation::equal(format!("alpha={a}: ||e_1*||"), &dual, &inv, CITE_HEX));
        report.table.push(vec![alpha, ratio, dual]);
    }
    Ok(report)
}

fn pafinite(params: &ScenarioParams) -> Result<Report> {
    let dims: Vec<usize> = match params.d {
        Some(d) => vec![d],
        None => (3..=5).collect(),
    };
    let weight = params.weight.clone().unwrap_or_else(third_weight);
    let mut report = Report::new("pafinite");
    report.param("d", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
    report.param("weight", &weight);
    report.table = Table::new(&[
        ("d", ColumnKind::Integer),
        ("functionals", ColumnKind::Integer),
        ("ks_lower_bound", ColumnKind::Exact),
    ]);
    let third = rational::ratio(1, 3);
    for d in dims {
        if d < 3 {
            return Err(Error::InvalidParameter(format!("the witness needs d >= 3, got {d}")));
        }
        let spec = NormSpec::preset(&FamilyPreset::PaFiniteDw { d, weight: weight.clone() })?;
        let functionals = spec.family().expect("polyhedral").len();
        let (_, g) = cons::two_point_pair(&third);
        let cert = certify::ks_lower_bound(&spec, &KsFamily::Explicit(vec![(g.clone(), set([1, 2]))]))?;
        report.expect(Expectation::at_least(
            format!("d={d}: K_s lower bound"),
            &cert.value,
            &rational::ratio(10, 9),
            CITE_PAFINITE,
        ));
        let poly = spec.norm(&g)?;
        report.expect(Expectation::equal(
            format!("d={d}: polyhedral ||g|| against D_w"),
            &poly,
            &dw_norm(&weight, &g),
            CITE_PAFINITE,
        ));
        if weight == third_weight() {
            let dense = spec.family().expect("polyhedral").densify(&g)?;
            report.expect(Expectation::equal(
                format!("d={d}: polyhedral ||g|| against the explicit formula"),
                &poly,
                &oracle::pafinite_third_direct(&dense),
                CITE_PAFINITE,
            ));
        }
        report.table.push(vec![rational::int(d as i64), rational::int(functionals as i64), cert.value]);
    }
    Ok(report)
}

fn lattice_ratio(params: &ScenarioParams) -> Result<Report> {
    let n_max = params.n.unwrap_or(32);
    if n_max == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let bits = rational::precision_bits();
    let mut report = Report::new("lattice-ratio");
    report.param("n", n_max);
    report.param("precision_bits", bits);
    let rows: Vec<(Rational, Rational, Rational)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let omega = cons::omega_n(n, bits);
            let spec = NormSpec::dw(cons::flat_weight(&omega));
            let ratio = certify::lattice_ratio(&spec, &cons::h_vector(n, &omega), &cons::g_vector(n, &omega))?;
            let closed = cons::lattice_closed_form(n, &omega);
            Ok((omega, ratio, closed))
        })
        .collect::<Result<_>>()?;
    let tol = default_tolerance();
    report.table = Table::new(&[("n", ColumnKind::Integer), ("omega_n", ColumnKind::Approx), ("ratio", ColumnKind::Approx)]);
    let mut worst = (Rational::zero(), 1);
    for (i, (omega, ratio, closed)) in rows.iter().enumerate() {
        let dev = (ratio - closed).abs();
        if dev > worst.0 {
            worst = (dev, i + 1);
        }
        report.table.push(vec![rational::int(i as i64 + 1), omega.clone(), ratio.clone()]);
    }
    report.expect(Expectation::within(
        format!("||h_n|| / ||g_n|| against 1 + 2n w_n^2, worst n = {}", worst.1),
        &rows[worst.1 - 1].1,
        &rows[worst.1 - 1].2,
        &tol,
        CITE_LATTICE,
    ));
    let increasing = rows.windows(2).all(|p| p[1].1 > p[0].1);
    report.expect(Expectation::holds("ratio strictly increasing", increasing, format!("n = 1..{n_max}"), CITE_LATTICE));
    let top = &rows.last().expect("n_max >= 1").1;
    report.expect(Expectation::less_than("max ratio", top, &rational::int(2), false, CITE_LATTICE));
    Ok(report)
}

fn ucc_growth(params: &ScenarioParams) -> Result<Report> {
    let m_max = params.n.unwrap_or(16);
    let weight = match &params.weight {
        Some(w) => w.clone(),
        None => Weight::eventually_constant(vec![Rational::one(), rational::ratio(2, 3)], rational::ratio(1, 3))?,
    };
    let mut report = Report::new("ucc-growth");
    report.param("m", m_max);
    report.param("weight", &weight);
    let r = certify::ucc_growth(&weight, m_max)?;
    let tail = weight.tail_limit();
    report.table = Table::new(&[("m", ColumnKind::Integer), ("r_m", ColumnKind::Exact)]);
    let mut mismatches = Vec::new();
    for (i, value) in r.iter().enumerate() {
        let m = i + 1;
        let closed = weight.primitive(2 * m) / (weight.primitive(m) - rational::int(m as i64) * tail);
        if *value != closed {
            mismatches.push(m);
        }
        report.table.push(vec![rational::int(m as i64), value.clone()]);
    }
    report.expect(Expectation::holds(
        "r_m = s_{2m} / (s_m - m w_inf)",
        mismatches.is_empty(),
        format!("m = 1..{m_max}, mismatches {mismatches:?}"),
        CITE_UCC,
    ));
    let start = weight.prefix_len().unwrap_or(1).max(1);
    report.expect(Expectation::holds(
        "r_m strictly increasing once m reaches the prefix",
        r.iter().skip(start - 1).collect::<Vec<_>>().windows(2).all(|p| p[1] > p[0]),
        format!("m = {start}..{m_max}"),
        CITE_UCC,
    ));
    if let Some(p) = weight.prefix_len() {
        let p = p.max(1);
        if m_max > p {
            let step = rational::int(2) * tail / (weight.primitive(p) - rational::int(p as i64) * tail);
            let constant = (p..m_max).all(|m| &r[m] - &r[m - 1] == step);
            report.expect(Expectation::holds(
                "r_{m+1} - r_m constant once m reaches the prefix",
                constant,
                format!("increment {} for m >= {p}", rational::format(&step)),
                CITE_UCC,
            ));
        }
    }
    if let Some(last) = r.last() {
        report.expect(Expectation::greater_than(
            format!("r_{m_max} exceeds r_1"),
            last,
            &r[0],
            CITE_UCC,
        ));
    }
    Ok(report)
}

/// Largest `||f_a|| / ||g_a||` over `a = i/grid`, `w = (1, k/grid, ...)`
/// with `1 <= i, k < grid`; returns the value and every maximiser `(a, w)`.
pub fn remark_grid_search(grid: usize) -> Result<(Rational, Vec<(Rational, Rational)>)> {
    if grid < 2 {
        return Err(Error::InvalidParameter("grid must be at least 2".into()));
    }
    let g = grid as i64;
    let points: Vec<(i64, i64)> = (1..g).flat_map(|i| (1..g).map(move |k| (i, k))).collect();
    let values: Vec<Rational> = points
        .par_iter()
        .map(|&(i, k)| {
            let a = rational::ratio(i, g);
            let w = cons::flat_weight(&rational::ratio(k, g));
            let (f, gv) = cons::two_point_pair(&a);
            dw_norm(&w, &f) / dw_norm(&w, &gv)
        })
        .collect();
    let best = rational::max_of(&values).expect("nonempty grid");
    let argmax = points
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == best)
        .map(|(&(i, k), _)| (rational::ratio(i, g), rational::ratio(k, g)))
        .collect();
    Ok((best, argmax))
}

/// Largest suppression ratio over `count` random vectors with at most two
/// nonzero coordinates, each under its own random weight, and every subset
/// of the support.
pub fn small_support_max(count: usize, seed: u64) -> Result<Rational> {
    let mut rng = sample::rng(seed);
    let instances: Vec<(Weight, SparseVector)> = (0..count)
        .map(|_| (sample::weight(&mut rng, 3), sample::vector(&mut rng, 6, 2, 5, 6)))
        .collect();
    let ratios: Vec<Rational> = instances
        .par_iter()
        .map(|(w, f)| {
            let spec = NormSpec::dw(w.clone());
            let support: Vec<usize> = f.support().into_iter().collect();
            let mut best = Rational::zero();
            for a in subsets_up_to(&support, support.len())? {
                best = best.max(certify::suppression_ratio(&spec, f, &set(a))?);
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    Ok(rational::max_of(&ratios).unwrap_or_else(Rational::zero))
}

fn remark_grid(params: &ScenarioParams) -> Result<Report> {
    let grid = params.grid.unwrap_or(60);
    let count = params.count.unwrap_or(1000);
    let seed = params.seed.unwrap_or(0);
    let mut report = Report::new("remark-10-9");
    report.param("grid", grid);
    report.param("count", count);
    report.param("seed", seed);
    let (best, argmax) = remark_grid_search(grid)?;
    report.expect(Expectation::equal("max ||f_a|| / ||g_a|| over the grid", &best, &rational::ratio(10, 9), CITE_REMARK));
    let third = rational::ratio(1, 3);
    let points: Vec<String> = argmax
        .iter()
        .map(|(a, w)| format!("({}, {})", rational::format(a), rational::format(w)))
        .collect();
    report.expect(Expectation::holds(
        "maximum attained only at a = 1/3, w = 1/3",
        argmax == vec![(third.clone(), third)],
        points.join(" "),
        CITE_REMARK,
    ));
    let small = small_support_max(count, seed)?;
    report.expect(Expectation::at_most("max suppression ratio with |supp f| <= 2", &small, &Rational::one(), CITE_SMALL));
    report.table = Table::new(&[("a", ColumnKind::Exact), ("omega", ColumnKind::Exact), ("ratio", ColumnKind::Exact)]);
    for (a, w) in argmax {
        report.table.push(vec![a, w, best.clone()]);
    }
    Ok(report)
}

/// Counts of violations over random instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SandwichTally {
    pub instances: usize,
    pub marcinkiewicz_above_dw: usize,
    pub dw_above_lorentz: usize,
    pub lorentz_above_c_dw: usize,
    pub constant_sign_above_2_dw: usize,
    /// Largest `||f||_{1,w} / ||f||_{D,w}` observed.
    #[serde(serialize_with = "rational::serialize")]
    pub worst_ratio: Rational,
}

/// Checks the sandwich and comparison inequalities on `count` random
/// weights and vectors; every fourth instance is made nonnegative for the
/// constant-sign bound.
pub fn sandwich_tally(count: usize, seed: u64) -> Result<SandwichTally> {
    let mut rng = sample::rng(seed);
    let instances: Vec<(Weight, SparseVector)> = (0..count)
        .map(|i| {
            let w = sample::weight(&mut rng, 3);
            let f = sample::vector(&mut rng, 8, 6, 4, 4);
            (w, if i % 4 == 3 { f.abs() } else { f })
        })
        .collect();
    let rows: Vec<[bool; 4]> = instances
        .par_iter()
        .map(|(w, f)| {
            let d = dw_norm(w, f);
            let m = marcinkiewicz_norm(w, f);
            let l = lorentz_norm(w, f);
            let c = certify::comparison_constant(w).value;
            let two_bound = f.has_constant_sign() && l > rational::int(2) * &d;
            [m > d, d > l, l > c * &d, two_bound]
        })
        .collect();
    let worst_ratio = instances
        .par_iter()
        .map(|(w, f)| lorentz_norm(w, f) / dw_norm(w, f))
        .reduce(Rational::zero, |a, b| a.max(b));
    let count_of = |k: usize| rows.iter().filter(|r| r[k]).count();
    Ok(SandwichTally {
        instances: count,
        marcinkiewicz_above_dw: count_of(0),
        dw_above_lorentz: count_of(1),
        lorentz_above_c_dw: count_of(2),
        constant_sign_above_2_dw: count_of(3),
        worst_ratio,
    })
}

fn sandwich(params: &ScenarioParams) -> Result<Report> {
    let count = params.count.unwrap_or(10_000);
    let seed = params.seed.unwrap_or(0);
    let mut report = Report::new("sandwich+compare");
    report.param("count", count);
    report.param("seed", seed);
    let t = sandwich_tally(count, seed)?;
    let zero = Rational::zero();
    let n = |k: usize| rational::int(k as i64);
    report.expect(Expectation::equal("instances with marcinkiewicz > D_w", &n(t.marcinkiewicz_above_dw), &zero, CITE_SANDWICH));
    report.expect(Expectation::equal("instances with D_w > lorentz", &n(t.dw_above_lorentz), &zero, CITE_SANDWICH));
    report.expect(Expectation::equal("instances with lorentz > C D_w", &n(t.lorentz_above_c_dw), &zero, CITE_COMPARE));
    report.expect(Expectation::equal(
        "constant-sign instances with lorentz > 2 D_w",
        &n(t.constant_sign_above_2_dw),
        &zero,
        CITE_COMPARE,
    ));
    report.expect(Expectation::at_most("largest lorentz / D_w", &t.worst_ratio, &rational::int(4), CITE_COMPARE));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        for name in scenario_names() {
            assert!(run_scenario(name, &ScenarioParams { n: Some(4), count: Some(50), grid: Some(12), ..Default::default() }).is_ok(), "{name}");
        }
        assert_eq!(
            run_scenario("nope", &ScenarioParams::default()),
            Err(Error::UnknownScenario("nope".into()))
        );
    }

    #[test]
    fn k1_report() {
        let report = run_scenario("k1-witness", &ScenarioParams::default()).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.expectations[0].computed, "10/9");
        let csv = report.table.to_csv().unwrap();
        assert!(csv.starts_with("norm_f,norm_g,ratio,norm_f_pq,norm_g_pq,ratio_pq\n"));
        assert!(csv.contains("1.11111111111111,1,1.11111111111111,10/9,1,10/9"));
    }

    #[test]
    fn kn_curve_columns() {
        let report = run_scenario("kn-curve", &ScenarioParams { n: Some(6), ..Default::default() }).unwrap();
        assert!(report.passed(), "{}", report.render());
        let csv = report.table.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,omega_n,K_n"));
        assert!(lines.next().unwrap().starts_with("1,0.333333333333333,1.11111111111111"));
    }

    #[test]
    fn exact_scenarios_pass() {
        for name in ["bad-dual", "hexagon", "pafinite", "ucc-growth"] {
            let report = run_scenario(name, &ScenarioParams::default()).unwrap();
            assert!(report.passed(), "{}", report.render());
        }
    }

    #[test]
    fn failing_expectation_is_reported() {
        let report = run_scenario("remark-10-9", &ScenarioParams { grid: Some(10), count: Some(20), ..Default::default() }).unwrap();
        assert!(!report.passed());
        assert!(report.render().contains("FAIL"));
    }
}
