//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so that every line is printed. The
//! process fails when a criterion fails, unless it is listed in
//! `KNOWN_UNATTAINABLE`; those still run at full strength and print FAIL.
//! Pass substrings as arguments to run a subset.

use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use greedybench::certify::{
    almost_greedy_margin, comparison_constant, dw_suppression_bound, ks_lower_bound, lattice_ratio,
    property_a_check, suppression_ratio, GridFamily, KsFamily,
};
use greedybench::constructions::{f_vector, flat_weight, g_vector, h_vector, head_block, omega_n};
use greedybench::norms::{dw_norm, lorentz_norm, marcinkiewicz_norm, phi2, FamilyPreset, FunctionalFamily};
use greedybench::oracle::{self, dw_norm_bruteforce, phi2_bruteforce, OracleConfig};
use greedybench::rational::{self, int, ratio, Rational};
use greedybench::repro::{bad_dual_vectors, remark_grid_search, small_support_max};
use greedybench::{sample, IndexSet, NormSpec, SparseVector, Weight};

/// Criteria that cannot hold as stated; see the decisions ledger.
const KNOWN_UNATTAINABLE: &[&str] = &["11b"];

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

type Criterion = (&'static str, &'static str, fn() -> Verdict);

const CRITERIA: &[Criterion] = &[
    ("1", "K_1 witness", c1_k1_witness),
    ("2", "closed-form norms of f_{n,w}, g_{n,w}", c2_closed_forms),
    ("3", "K_n curve", c3_kn_curve),
    ("4", "bad-dual reproduction", c4_bad_dual),
    ("5", "hexagon suppression ratios", c5_hexagon),
    ("6", "oracle gates", c6_oracle_gates),
    ("7", "Property (A) suite", c7_property_a),
    ("8", "norm sandwich and comparison", c8_sandwich),
    ("9", "uniform suppression bounds", c9_uniform_bounds),
    ("10", "almost-greedy margins", c10_almost_greedy),
    ("11a", "lattice ratio closed form", c11a_lattice_closed_form),
    ("11b", "lattice ratio above 1.9 from n = 24", c11b_lattice_threshold),
    ("12", "small-support rigidity", c12_small_support),
];

fn main() {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut unexpected = Vec::new();
    let mut ran = 0;
    for (id, name, check) in CRITERIA {
        let tag = format!("criterion {id} {name}");
        if !filters.is_empty() && !filters.iter().any(|f| tag.contains(f.as_str())) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed().as_secs_f64();
        let known = KNOWN_UNATTAINABLE.contains(id);
        let status = if verdict.pass { "PASS" } else { "FAIL" };
        let note = if !verdict.pass && known { " (known unattainable)" } else { "" };
        println!("{status} criterion {id} [{name}] {}{note} ({elapsed:.2}s)", verdict.detail);
        if !verdict.pass && !known {
            unexpected.push(*id);
        }
    }
    println!("{ran} criteria run, unexpected failures: {unexpected:?}");
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> (T, bool, Duration) {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    (out, elapsed <= limit, elapsed)
}

fn set(items: impl IntoIterator<Item = usize>) -> IndexSet {
    items.into_iter().collect()
}

fn c1_k1_witness() -> Verdict {
    let ((nf, ng, ratio_fg), fast, elapsed) = timed(Duration::from_secs(1), || {
        let third = ratio(1, 3);
        let w = Weight::one_then(third.clone()).unwrap();
        let g = g_vector(1, &third);
        let nf = dw_norm(&w, &f_vector(1, &third));
        let ng = dw_norm(&w, &g);
        let r = suppression_ratio(&NormSpec::dw(w), &g, &set([1, 2])).unwrap();
        (nf, ng, r)
    });
    let ok = nf == ratio(10, 9) && ng == int(1) && ratio_fg == ratio(10, 9) && fast;
    Verdict::new(
        ok,
        format!(
            "||f|| = {}, ||g|| = {}, ratio = {} in {:?}",
            rational::format(&nf),
            rational::format(&ng),
            rational::format(&ratio_fg),
            elapsed
        ),
    )
}

fn c2_closed_forms() -> Verdict {
    let ((checked, bad), fast, elapsed) = timed(Duration::from_secs(10), || {
        let mut bad = Vec::new();
        let mut checked = 0;
        for omega in [ratio(1, 3), ratio(1, 4), ratio(1, 5)] {
            let w = flat_weight(&omega);
            for n in 1..=20usize {
                let nn = int(n as i64);
                let f_expected = Rational::one() + &nn * &omega * &omega;
                let lead = Rational::one() + &nn * &omega;
                let g_expected = (&lead * &lead / int(n as i64 + 1) + &nn * &omega * &omega).max(Rational::one());
                if dw_norm(&w, &f_vector(n, &omega)) != f_expected || dw_norm(&w, &g_vector(n, &omega)) != g_expected {
                    bad.push((n, rational::format(&omega)));
                }
                checked += 2;
            }
        }
        (checked, bad)
    });
    Verdict::new(
        bad.is_empty() && fast,
        format!("{checked} norms exact, mismatches {bad:?}, {elapsed:?}"),
    )
}

/// `1 + (1 - 2w) n/(2n+1)` with `w = 1/(1 + sqrt(2n+2))`, in floating point.
fn k_n_float(n: usize) -> f64 {
    let w = 1.0 / (1.0 + ((2 * n + 2) as f64).sqrt());
    1.0 + (1.0 - 2.0 * w) * n as f64 / (2 * n + 1) as f64
}

fn c3_kn_curve() -> Verdict {
    let bits = rational::precision_bits();
    let values: Vec<Rational> = (1..=64usize)
        .into_par_iter()
        .map(|n| {
            let omega = omega_n(n, bits);
            let g = g_vector(n, &omega);
            suppression_ratio(&NormSpec::dw(flat_weight(&omega)), &g, &set(head_block(n))).unwrap()
        })
        .collect();
    let worst = values
        .iter()
        .enumerate()
        .map(|(i, v)| (rational::to_f64(v) - k_n_float(i + 1)).abs())
        .fold(0.0, f64::max);
    let increasing = values.windows(2).all(|p| p[1] > p[0]);
    let below = values.iter().all(|v| *v < ratio(3, 2));
    Verdict::new(
        bits >= 256 && worst <= 1e-12 && increasing && below,
        format!(
            "bits {bits}, max deviation {worst:.2e}, increasing {increasing}, K_64 = {}",
            rational::to_decimal(values.last().unwrap(), 15)
        ),
    )
}

fn c4_bad_dual() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for d in 3..=6usize {
        let family = FunctionalFamily::from_preset(&FamilyPreset::BadDual { d }).unwrap();
        let (g, h_star, g_star) = bad_dual_vectors(d);
        let target = int(d as i64) - ratio(7, 6);
        let norm_g = family.norm(&g).unwrap();
        let h = family.dual_norm(&h_star).unwrap().value;
        let gs = family.dual_norm(&g_star).unwrap().value;
        let bound = int(d as i64 - 1) / &target;
        ok &= norm_g == target && oracle::bad_dual_direct(&g) == target;
        ok &= h <= Rational::one() && gs >= bound && gs > Rational::one();
        notes.push(format!(
            "d={d}: {} {} {}",
            rational::format(&norm_g),
            rational::format(&h),
            rational::format(&gs)
        ));
    }
    Verdict::new(ok, format!("(||g||, ||h*||, ||g*||) {}", notes.join("; ")))
}

fn c5_hexagon() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    for alpha in [ratio(1, 2), ratio(1, 3), ratio(2, 3)] {
        let norm = NormSpec::preset(&FamilyPreset::Hexagon { alpha: alpha.clone() }).unwrap();
        let f = SparseVector::from_dense(&[int(2), int(-2)]);
        let r = suppression_ratio(&norm, &f, &set([1])).unwrap();
        let direct = oracle::hexagon_direct(&alpha, &[int(2), int(0)]) / oracle::hexagon_direct(&alpha, &[int(2), int(-2)]);
        ok &= r == alpha.recip() && r == direct;
        notes.push(format!("alpha={}: {}", rational::format(&alpha), rational::format(&r)));
    }
    Verdict::new(ok, notes.join(", "))
}

fn c6_oracle_gates() -> Verdict {
    let ((phi_checked, phi_bad, dw_bad), fast, elapsed) = timed(Duration::from_secs(60), || {
        let mut rng = sample::rng(6);
        let mut phi_instances = Vec::new();
        for _ in 0..1000 {
            let w = sample::weight(&mut rng, 3);
            let f = sample::vector(&mut rng, 10, 5, 4, 5);
            let e = sample::vector(&mut rng, 10, 4, 1, 1).support();
            phi_instances.push((w, f, e));
        }
        let sweeps: Vec<(usize, bool)> = phi_instances
            .par_iter()
            .map(|(w, f, e)| {
                let closed = phi2(w, e, f);
                let base = OracleConfig::minimal_horizon(w, e.len(), f);
                let mut agree = true;
                let mut count = 0;
                for extra in 0..3 {
                    let cfg = OracleConfig::new(base + extra, 10);
                    agree &= phi2_bruteforce(w, e, f, &cfg).unwrap() == closed;
                    count += 1;
                }
                let wide = OracleConfig::new(base + 40, 10).collapsed();
                agree &= phi2_bruteforce(w, e, f, &wide).unwrap() == closed;
                (count + 1, agree)
            })
            .collect();
        let phi_checked: usize = sweeps.iter().map(|s| s.0).sum();
        let phi_bad = sweeps.iter().filter(|s| !s.1).count();

        let dw_instances: Vec<(Weight, SparseVector)> = (0..1000)
            .map(|_| (sample::weight(&mut rng, 3), sample::vector(&mut rng, 12, 6, 4, 5)))
            .collect();
        let dw_bad = dw_instances
            .par_iter()
            .filter(|(w, f)| {
                let cfg = OracleConfig::new(0, 12).collapsed();
                dw_norm_bruteforce(w, f, &cfg).unwrap().value != dw_norm(w, f)
            })
            .count();
        (phi_checked, phi_bad, dw_bad)
    });
    Verdict::new(
        phi_bad == 0 && dw_bad == 0 && fast,
        format!(
            "phi2: 1000 instances, {phi_checked} horizon evaluations, {phi_bad} mismatches; D_w: 1000 instances (window 12), {dw_bad} mismatches; {elapsed:?}"
        ),
    )
}

fn c7_property_a() -> Verdict {
    let weights = [
        Weight::one_then(ratio(1, 3)).unwrap(),
        Weight::one_then(ratio(1, 2)).unwrap(),
        Weight::eventually_constant(vec![int(1), ratio(2, 3)], ratio(1, 3)).unwrap(),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, w) in weights.iter().enumerate() {
        let mut rng = sample::rng(70 + k as u64);
        let instances: Vec<_> = (0..10_000).map(|_| sample::property_a_instance(&mut rng, 10, 6)).collect();
        let norm = NormSpec::dw(w.clone());
        let failures = instances
            .par_iter()
            .filter(|inst| !property_a_check(&norm, inst).unwrap().holds)
            .count();
        ok &= failures == 0;
        notes.push(format!("{w}: {failures} failures"));
    }
    Verdict::new(ok, format!("10000 instances per weight; {}", notes.join(", ")))
}

fn c8_sandwich() -> Verdict {
    let mut rng = sample::rng(8);
    let instances: Vec<(Weight, SparseVector)> = (0..10_000)
        .map(|_| (sample::weight(&mut rng, 4), sample::vector(&mut rng, 9, 7, 5, 6)))
        .collect();
    let signed: Vec<(Weight, SparseVector)> = (0..2_000)
        .map(|_| (sample::weight(&mut rng, 4), sample::nonnegative_vector(&mut rng, 9, 7, 5, 6)))
        .collect();
    let violations = instances
        .par_iter()
        .filter(|(w, f)| {
            let d = dw_norm(w, f);
            let c = comparison_constant(w).value;
            !(marcinkiewicz_norm(w, f) <= d && d <= lorentz_norm(w, f) && lorentz_norm(w, f) <= &c * &d && c <= int(4))
        })
        .count();
    let signed_violations = signed
        .par_iter()
        .filter(|(w, f)| lorentz_norm(w, f) > int(2) * dw_norm(w, f))
        .count();
    Verdict::new(
        violations == 0 && signed_violations == 0,
        format!("10000 instances, {violations} violations; 2000 constant-sign instances, {signed_violations} above 2 D_w"),
    )
}

fn c9_uniform_bounds() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for omega in [ratio(1, 5), ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(3, 4)] {
        let w = Weight::one_then(omega.clone()).unwrap();
        let found = ks_lower_bound(&NormSpec::dw(w.clone()), &KsFamily::Grid(GridFamily::default_grid()))
            .unwrap()
            .value;
        let bound = int(2).min(omega.recip());
        ok &= found <= bound && dw_suppression_bound(&w).value == bound;
        notes.push(format!("w={}: {}", rational::format(&omega), rational::format(&found)));
    }

    let w = Weight::sqrt_primitive();
    let mut rng = sample::rng(9);
    let instances: Vec<(SparseVector, IndexSet)> = (0..1000)
        .map(|_| {
            let f = sample::vector(&mut rng, 8, 5, 4, 5);
            let a = f.support().into_iter().filter(|_| sample::sign(&mut rng) == greedybench::Sign::Plus).collect();
            (f, a)
        })
        .collect();
    let tol = rational::from_f64(1e-10).unwrap();
    let worst = instances
        .par_iter()
        .map(|(f, a)| dw_norm(&w, &f.project(a)) / dw_norm(&w, f))
        .reduce(Rational::zero, |x, y| x.max(y));
    ok &= worst <= Rational::one() + tol;
    Verdict::new(
        ok,
        format!(
            "grid maxima {}; s_n = sqrt(n): largest of 1000 ratios {}",
            notes.join(", "),
            rational::to_decimal(&worst, 15)
        ),
    )
}

fn c10_almost_greedy() -> Verdict {
    let mut rng = sample::rng(10);
    let instances: Vec<(Weight, SparseVector)> = (0..1000)
        .map(|_| (sample::weight(&mut rng, 3), sample::tie_free_vector(&mut rng, 8, 6, 6, 6)))
        .collect();
    let failures = instances
        .par_iter()
        .filter(|(w, x)| !almost_greedy_margin(&NormSpec::dw(w.clone()), x).unwrap().all_nonnegative())
        .count();
    Verdict::new(failures == 0, format!("1000 tie-free vectors, {failures} with a negative margin"))
}

fn lattice_values(n_max: usize) -> Vec<Rational> {
    let bits = rational::precision_bits();
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let omega = omega_n(n, bits);
            lattice_ratio(&NormSpec::dw(flat_weight(&omega)), &h_vector(n, &omega), &g_vector(n, &omega)).unwrap()
        })
        .collect()
}

/// `1 + 2n w_n^2` in floating point.
fn lattice_float(n: usize) -> f64 {
    let w = 1.0 / (1.0 + ((2 * n + 2) as f64).sqrt());
    1.0 + 2.0 * n as f64 * w * w
}

fn c11a_lattice_closed_form() -> Verdict {
    let values = lattice_values(32);
    let worst = values
        .iter()
        .enumerate()
        .map(|(i, v)| (rational::to_f64(v) - lattice_float(i + 1)).abs())
        .fold(0.0, f64::max);
    let below_two = values.iter().all(|v| *v < int(2));
    Verdict::new(
        worst <= 1e-12 && below_two,
        format!("n <= 32, max deviation {worst:.2e}, all below 2 {below_two}"),
    )
}

fn c11b_lattice_threshold() -> Verdict {
    let values = lattice_values(32);
    let threshold = ratio(19, 10);
    let below: Vec<String> = values
        .iter()
        .enumerate()
        .skip(23)
        .filter(|(_, v)| **v <= threshold)
        .map(|(i, v)| format!("n={}: {}", i + 1, rational::to_decimal(v, 6)))
        .collect();
    let detail = if below.is_empty() {
        "all values for 24 <= n <= 32 exceed 1.9".to_string()
    } else {
        format!("{} values at most 1.9, first {}", below.len(), below[0])
    };
    Verdict::new(below.is_empty(), detail)
}

fn c12_small_support() -> Verdict {
    let small = small_support_max(1000, 12).unwrap();
    let (best, argmax) = remark_grid_search(60).unwrap();
    let third = ratio(1, 3);
    let ok = small <= Rational::one() && best == ratio(10, 9) && argmax == vec![(third.clone(), third)];
    let points: Vec<String> = argmax
        .iter()
        .map(|(a, w)| format!("({}, {})", rational::format(a), rational::format(w)))
        .collect();
    Verdict::new(
        ok && !small.is_negative(),
        format!(
            "1000 vectors, largest ratio {}; grid maximum {} at {}",
            rational::format(&small),
            rational::format(&best),
            points.join(" ")
        ),
    )
}
