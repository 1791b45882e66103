//! Seeded invariant suites, shared by the CLI `props` subcommand and the
//! acceptance tests.
//!
//! Each suite runs a batch of named checks over deterministic samples and
//! reports the worst observed violation per check. Everything is `f64`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{
    blaschke_pointwise, blaschke_series, disk_automorphism, extremal_harmonic, monomial_extremal,
    pair_with_dilatation, random_blaschke_params, HarmonicPair,
};
use crate::families::squared_blaschke_extremal;
use crate::harmonic::{
    plain_head_quantity, radius_equation_per_a, radius_factor_per_a, refined_remainder,
};
use crate::oracle::{dft_coefficients, dilatation_scan};
use crate::powerseries::{TruncatedSeries, DEFAULT_ORDER};
use crate::quasisub::{
    bohr_head_sum, comparison_radius, majorant_compare, quasi_compose, scan_crossover,
    sharpness_scan, verdict_le_one,
};
use crate::radii::{
    alpha_minus, alpha_plus, c_p, r_1, r_p, radius_closed_per_a, radius_per_a, radius_uniform,
    radius_uniform_closed, t_p, RadiusParams,
};
use crate::report::Verdict;
use crate::Series64;

/// One named check with its worst observed deviation.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A batch of checks under one suite name.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Run a suite by its CLI name with default sizes.
pub fn suite_by_name(name: &str, seed: u64) -> Option<SuiteReport> {
    match name {
        "lemmas" => Some(lemmas_suite(seed, 40)),
        "radii" => Some(radii_suite(10_000)),
        "quasisub" => Some(quasisub_suite(seed, 500, 200)),
        "harmonic" => Some(harmonic_suite(seed)),
        "oracle" => Some(oracle_suite(seed)),
        _ => None,
    }
}

fn sample_blaschke(meta: &mut ChaCha8Rng, max_degree: usize, order: usize) -> Series64 {
    let degree = meta.gen_range(0..=max_degree);
    let (c, zeros) = random_blaschke_params::<f64>(degree, meta.gen());
    blaschke_series(c, &zeros, order)
}

fn sample_blaschke_nonconstant(
    meta: &mut ChaCha8Rng,
    max_degree: usize,
    order: usize,
) -> Series64 {
    let degree = meta.gen_range(1..=max_degree);
    let (c, zeros) = random_blaschke_params::<f64>(degree, meta.gen());
    blaschke_series(c, &zeros, order)
}

/// Sampled checks of the three coefficient lemmas the radius bounds rest on.
pub fn lemmas_suite(seed: u64, samples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("lemmas");
    let mut meta = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_tail: f64 = f64::NEG_INFINITY;
    let mut worst_refined: f64 = f64::NEG_INFINITY;
    let mut worst_modulus: f64 = f64::NEG_INFINITY;
    for _ in 0..samples {
        let f = sample_blaschke(&mut meta, 8, DEFAULT_ORDER);
        let a0 = f.coeff(0).unwrap().norm();
        for i in 1..=8 {
            let r = i as f64 / 10.0;
            let tail = f.majorant_sum(r, 1).unwrap().hi();
            // tail majorant bound, split at |a_0| = r
            let bound = if a0 >= r {
                r * (1.0 - a0 * a0) / (1.0 - r * a0)
            } else {
                r * (1.0 - a0 * a0).sqrt() / (1.0 - r * r).sqrt()
            };
            worst_tail = worst_tail.max(tail - bound);
            // refined bound including the weighted square norm
            let weight = (1.0 + a0 * r) / ((1.0 + a0) * (1.0 - r));
            let refined = tail + weight * f.weighted_norm_sq(r).unwrap().hi();
            worst_refined = worst_refined.max(refined - (1.0 - a0 * a0) * r / (1.0 - r));
        }
        // pointwise modulus against the Möbius majorant
        for i in 0..100 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 100.0;
            let r = 0.3 + 0.6 * ((i * 7) % 100) as f64 / 100.0;
            let z = Complex64::new(r * theta.cos(), r * theta.sin());
            let bound = (r + a0) / (1.0 + a0 * r);
            worst_modulus = worst_modulus.max(f.eval(z).norm() - bound);
        }
    }
    report.push(
        "tail_majorant_bound",
        worst_tail <= 1e-10,
        format!("worst excess {worst_tail:.3e}"),
    );
    report.push(
        "refined_majorant_bound",
        worst_refined <= 1e-10,
        format!("worst excess {worst_refined:.3e}"),
    );
    report.push(
        "pointwise_modulus_bound",
        worst_modulus <= 1e-10,
        format!("worst excess {worst_modulus:.3e}"),
    );
    report
}

/// Grid checks of the scalar radius functions: continuity at the branch
/// points, monotonicity, ranges, and the residual of every bisection.
pub fn radii_suite(grid: usize) -> SuiteReport {
    let mut report = SuiteReport::new("radii");
    let ps: [f64; 6] = [0.5, 1.0, 1.5, 2.0, 3.0, 4.0];

    // branch agreement at the splitting point and near one
    let mut worst_seam: f64 = 0.0;
    let mut worst_limit: f64 = 0.0;
    for &p in &ps {
        let cp = c_p(p).unwrap();
        let xp = 1.0 - cp.powf(p);
        let low_branch = xp / (1.0 - cp * cp + xp * xp).sqrt();
        let high_branch = xp / (1.0 - cp * cp + cp * xp);
        worst_seam = worst_seam.max((low_branch - high_branch).abs());
        let x = 1.0 - 1e-8;
        worst_limit = worst_limit.max((r_p(p, x).unwrap() - p / (2.0 + p)).abs());
        worst_limit = worst_limit.max((t_p(p, x).unwrap() - 2.0 / p).abs());
    }
    report.push(
        "branch_agreement",
        worst_seam <= 1e-10,
        format!("worst seam gap {worst_seam:.3e}"),
    );
    report.push(
        "endpoint_limits",
        worst_limit <= 1e-6,
        format!("worst limit gap {worst_limit:.3e}"),
    );

    // grid continuity: jumps stay at the modulus-of-continuity scale of the
    // step (t_p has a square-root slope at zero for p < 1, so the bound is
    // sqrt(step), not step)
    let mut worst_jump: f64 = 0.0;
    for &p in &ps {
        let mut prev_t = t_p(p, 0.0).unwrap();
        let mut prev_r = r_p(p, 0.0).unwrap();
        for i in 1..=grid {
            let x = i as f64 / grid as f64;
            let t = t_p(p, x).unwrap();
            let r = r_p(p, x).unwrap();
            worst_jump = worst_jump.max((t - prev_t).abs()).max((r - prev_r).abs());
            prev_t = t;
            prev_r = r;
        }
    }
    let jump_bound = 3.0 * (1.0 / grid as f64).sqrt();
    report.push(
        "grid_continuity",
        worst_jump <= jump_bound,
        format!("worst grid jump {worst_jump:.3e} (bound {jump_bound:.3e})"),
    );

    // monotonicity and range of t_p at 1e-10 slack
    let mut t_ok = true;
    let mut t_detail = String::from("all within slack");
    for &p in &ps {
        let mut prev = f64::NAN;
        for i in 0..grid {
            let x = i as f64 / grid as f64;
            let t = t_p(p, x).unwrap();
            let in_range = if p < 2.0 {
                t >= 1.0 - 1e-10 && t <= 2.0 / p + 1e-10
            } else if p == 2.0 {
                (t - 1.0).abs() <= 1e-10
            } else {
                t >= 2.0 / p - 1e-10 && t <= 1.0 + 1e-10
            };
            let monotone = if i == 0 || p == 2.0 {
                true
            } else if p < 2.0 {
                t >= prev - 1e-10
            } else {
                t <= prev + 1e-10
            };
            if !(in_range && monotone) {
                t_ok = false;
                t_detail = format!("violation at p = {p}, x = {x}");
            }
            prev = t;
        }
    }
    report.push("t_monotonicity_and_range", t_ok, t_detail);

    // r_p: below one everywhere; decreasing from 1/√2 to p/(2+p) for p <= 2
    let mut r_ok = true;
    let mut r_detail = String::from("all within slack");
    for &p in &ps {
        let mut prev = f64::NAN;
        for i in 0..=grid {
            let x = i as f64 / grid as f64;
            let r = r_p(p, x).unwrap();
            if r >= 1.0 {
                r_ok = false;
                r_detail = format!("r_p not below one at p = {p}, x = {x}");
            }
            if p <= 2.0 {
                if i > 0 && r > prev + 1e-10 {
                    r_ok = false;
                    r_detail = format!("not decreasing at p = {p}, x = {x}");
                }
                prev = r;
            }
        }
        if p <= 2.0 {
            let start = r_p(p, 0.0).unwrap();
            let end = r_p(p, 1.0).unwrap();
            if (start - 1.0 / 2f64.sqrt()).abs() > 1e-12 || (end - p / (2.0 + p)).abs() > 1e-12 {
                r_ok = false;
                r_detail = format!("endpoint mismatch at p = {p}");
            }
        }
    }
    report.push("r_monotonicity_and_endpoints", r_ok, r_detail);

    // residual of every bisection root
    let mut worst_res: f64 = 0.0;
    for &p in &ps {
        let x = c_p(p).unwrap();
        worst_res = worst_res.max((1.0 - x - x.powf(p)).abs());
    }
    for &p in &[0.5f64, 1.0, 1.7, 2.0] {
        for &k in &[0.0, 0.5, 1.0] {
            for &m in &[1u32, 2, 3] {
                for &a in &[0.0, 0.4, 0.8] {
                    let params = RadiusParams::new(p, k, m, a).unwrap();
                    let root = radius_per_a(&params).unwrap();
                    worst_res = worst_res.max(radius_equation_per_a(&params, root).abs());
                    let root = radius_uniform(&params).unwrap();
                    worst_res = worst_res
                        .max(crate::harmonic::radius_equation_uniform(&params, root).abs());
                }
            }
        }
    }
    report.push(
        "bisection_residuals",
        worst_res <= 1e-10,
        format!("worst residual {worst_res:.3e}"),
    );

    // the a-free root respects its closed bound chain and moves the right
    // way in k and p
    let mut chain_ok = true;
    let mut chain_detail = String::from("bound chain and monotone dependence hold");
    for &m in &[1u32, 2, 4] {
        let mut prev_k = f64::INFINITY;
        for &k in &[0.0f64, 0.25, 0.5, 0.75, 1.0] {
            let params = RadiusParams::new(1.0, k, m, 0.0).unwrap();
            let root = radius_uniform(&params).unwrap();
            let bound = radius_uniform_closed(1.0, k).unwrap();
            if root > bound + 1e-12 || bound > 1.0 / (2.0 + k) + 1e-15 || root > prev_k + 1e-12 {
                chain_ok = false;
                chain_detail = format!("violation at m = {m}, k = {k}");
            }
            prev_k = root;
        }
        let mut prev_p = 0.0;
        for &p in &[0.25f64, 0.5, 1.0, 1.5, 2.0] {
            let params = RadiusParams::new(p, 0.5, m, 0.0).unwrap();
            let root = radius_uniform(&params).unwrap();
            if root < prev_p - 1e-12 {
                chain_ok = false;
                chain_detail = format!("p-monotonicity violation at m = {m}, p = {p}");
            }
            prev_p = root;
        }
    }
    report.push("uniform_root_bound_chain", chain_ok, chain_detail);
    report
}

/// Property suites for the majorant-comparison machinery.
pub fn quasisub_suite(seed: u64, bohr_samples: usize, quasi_triples: usize) -> SuiteReport {
    let mut report = SuiteReport::new("quasisub");

    // the head-powered quantity stays at most one at its radius
    let mut meta = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = f64::NEG_INFINITY;
    let mut violations = 0usize;
    for _ in 0..bohr_samples {
        let f = sample_blaschke(&mut meta, 8, DEFAULT_ORDER);
        let a0 = f.coeff(0).unwrap().norm();
        for &p in &[0.5f64, 1.0, 2.0, 3.0] {
            let r = r_p(p, a0).unwrap();
            let d = bohr_head_sum(&f, p, r).unwrap().hi();
            worst = worst.max(d - 1.0);
            if d > 1.0 + 1e-9 {
                violations += 1;
            }
        }
    }
    report.push(
        "powered_head_at_radius",
        violations == 0,
        format!("{bohr_samples} samples x 4 exponents, worst excess {worst:.3e}"),
    );

    // quasi-subordinated triples compare below the guaranteed radius
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0x51AB_372D);
    let mut failures = 0usize;
    let mut worst_margin = f64::INFINITY;
    for _ in 0..quasi_triples {
        let phi = sample_blaschke_nonconstant(&mut meta, 6, DEFAULT_ORDER);
        let g = sample_blaschke(&mut meta, 6, DEFAULT_ORDER);
        let w = TruncatedSeries::identity(DEFAULT_ORDER)
            .cauchy_product(&sample_blaschke_nonconstant(&mut meta, 5, DEFAULT_ORDER));
        let f = quasi_compose(&phi, &g, &w).unwrap();
        let radius =
            comparison_radius(phi.coeff(0).unwrap().norm(), w.coeff(1).unwrap().norm()).unwrap();
        let rep = majorant_compare(&f, &g, radius - 1e-6).unwrap();
        worst_margin = worst_margin.min(rep.rhs.lo() - rep.lhs.hi());
        if rep.verdict != Verdict::Holds {
            failures += 1;
        }
    }
    report.push(
        "quasi_subordination_comparison",
        failures == 0,
        format!("{quasi_triples} triples, smallest margin {worst_margin:.3e}"),
    );

    // majorized pairs f = Φ·g compare below r_1(|Φ(0)|)
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0x00C0_FFEE);
    let pairs = quasi_triples.min(100);
    let mut failures = 0usize;
    for _ in 0..pairs {
        let phi = sample_blaschke_nonconstant(&mut meta, 6, DEFAULT_ORDER);
        let q = meta.gen_range(0..=3);
        let angle: f64 = meta.gen_range(0.0..(2.0 * std::f64::consts::PI));
        let b = Complex64::new(angle.cos(), angle.sin()) * meta.gen_range(0.3..1.0);
        let g = TruncatedSeries::monomial(q, b, DEFAULT_ORDER)
            .cauchy_product(&sample_blaschke(&mut meta, 5, DEFAULT_ORDER));
        let f = phi.cauchy_product(&g);
        let radius = r_1(phi.coeff(0).unwrap().norm());
        if majorant_compare(&f, &g, radius - 1e-6).unwrap().verdict != Verdict::Holds {
            failures += 1;
        }
    }
    report.push(
        "majorization_comparison",
        failures == 0,
        format!("{pairs} pairs"),
    );

    // closed majorant of the squared-Blaschke extremal: at most one exactly
    // outside the root window
    let mut iff_ok = true;
    for &a in &[0.75f64, 0.8, 0.9, 0.95] {
        let ap = alpha_plus(a).unwrap();
        let am = alpha_minus(a).unwrap();
        for i in 0..1000 {
            let r = i as f64 / 1000.0;
            let s = crate::quasisub::extremal_majorant_closed(a, r).unwrap();
            if (s <= 1.0 + 1e-12) != (r <= ap || r >= am) {
                iff_ok = false;
            }
        }
    }
    report.push(
        "closed_majorant_window",
        iff_ok,
        "unit bound iff outside the root window".into(),
    );

    // per-a crossover of the squared-Blaschke extremal sits in its window
    let mut window_ok = true;
    let mut detail = String::new();
    for &a in &[0.75f64, 0.8, 0.9, 0.95, 0.99] {
        let f = squared_blaschke_extremal(a, DEFAULT_ORDER).unwrap();
        let g = TruncatedSeries::monomial(2, Complex64::new(1.0, 0.0), DEFAULT_ORDER);
        let scan = sharpness_scan(&f, &g, 0.2, 0.7).unwrap();
        let cross = scan.estimate();
        let lo = r_1(a * a) - 1e-7;
        let hi = alpha_plus(a).unwrap() + 1e-7;
        if !(lo <= cross && cross <= hi) {
            window_ok = false;
        }
        detail.push_str(&format!("a={a}: {cross:.7}; "));
    }
    report.push("squared_blaschke_crossover_window", window_ok, detail);

    report
}

/// Grid and sampled checks for the harmonic-pair machinery.
pub fn harmonic_suite(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("harmonic");

    // factorization of the radius equation through its increasing factor
    let mut worst_fact: f64 = 0.0;
    for &(p, k, m, a) in &[
        (0.5f64, 0.3, 1u32, 0.2),
        (1.0, 0.0, 2, 0.5),
        (2.0, 1.0, 3, 0.8),
        (1.5, 0.7, 1, 0.6),
    ] {
        let params = RadiusParams::new(p, k, m, a).unwrap();
        for i in 0..1000 {
            let r = i as f64 / 1001.0;
            let rm = r.powi(m as i32);
            let product = (1.0 + a * rm).powf(p) * (1.0 - r) * radius_factor_per_a(&params, r);
            worst_fact = worst_fact.max((radius_equation_per_a(&params, r) - product).abs());
        }
    }
    report.push(
        "radius_equation_factorization",
        worst_fact <= 1e-12,
        format!("worst residual {worst_fact:.3e}"),
    );

    // increasing factor: monotone in r, zero at a = 1, nondecreasing in a
    // up to the a-free root
    let mut mono_ok = true;
    for &(p, k, m) in &[(1.0f64, 0.5, 1u32), (2.0, 1.0, 2), (0.7, 0.2, 3)] {
        let params = RadiusParams::new(p, k, m, 0.4).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for i in 0..500 {
            let r = i as f64 / 501.0;
            let v = radius_factor_per_a(&params, r);
            if v <= prev {
                mono_ok = false;
            }
            prev = v;
        }
        let root = radius_uniform(&RadiusParams::new(p.min(2.0), k, m, 0.0).unwrap()).unwrap();
        for &r in &[root * 0.3, root * 0.8, root] {
            let mut prev = f64::NEG_INFINITY;
            for j in 0..=40 {
                let a = j as f64 / 40.0;
                let v = radius_factor_per_a(&RadiusParams::new(p, k, m, a).unwrap(), r);
                if v < prev - 1e-12 {
                    mono_ok = false;
                }
                prev = v;
            }
            let at_one = radius_factor_per_a(&RadiusParams::new(p, k, m, 1.0).unwrap(), r);
            if at_one.abs() > 1e-12 {
                mono_ok = false;
            }
        }
    }
    report.push(
        "increasing_factor_monotonicity",
        mono_ok,
        "monotone in r, nondecreasing in a, zero at a = 1".into(),
    );

    // closed per-a radius dominates the uniform closed radius; for p > 2
    // and k = 0 its infimum is one half
    let mut chain_ok = true;
    for &(p, k) in &[(0.5f64, 0.0), (1.0, 1.0), (2.0, 0.5)] {
        let uniform = radius_uniform_closed(p, k).unwrap();
        for i in 0..500 {
            let a = i as f64 / 500.0;
            let v = radius_closed_per_a(&RadiusParams::new(p, k, 1, a).unwrap()).unwrap();
            if v < uniform - 1e-9 {
                chain_ok = false;
            }
        }
    }
    let mut inf: f64 = f64::INFINITY;
    for &p in &[2.5f64, 3.0, 4.0] {
        for i in 0..2000 {
            let a = i as f64 / 2000.0;
            inf = inf.min(radius_closed_per_a(&RadiusParams::new(p, 0.0, 1, a).unwrap()).unwrap());
        }
    }
    report.push(
        "closed_radius_chain",
        chain_ok && (inf - 0.5).abs() <= 1e-3,
        format!("large-p infimum {inf:.6}"),
    );

    // equality of the remainder bound on the extremal family
    let mut worst_eq: f64 = 0.0;
    let mut count = 0usize;
    for &a in &[0.0f64, 0.2, 0.4, 0.6, 0.8] {
        for &k in &[0.0f64, 0.5, 1.0] {
            let pair = extremal_harmonic(a, k, DEFAULT_ORDER).unwrap();
            for &r in &[0.1, 0.3, 0.5, 0.7] {
                let e = refined_remainder(&pair, k, r).unwrap().midpoint();
                let closed = (1.0 - a * a) * (1.0 + k) * r / (1.0 - r);
                worst_eq = worst_eq.max((e - closed).abs());
                count += 1;
            }
        }
    }
    report.push(
        "remainder_equality_on_extremal_family",
        worst_eq <= 1e-9,
        format!("{count} grid points, worst gap {worst_eq:.3e}"),
    );

    // coefficient and norm domination on sampled bounded-dilatation pairs
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0x0DD5_EED5);
    let mut dom_ok = true;
    for _ in 0..12 {
        let h = sample_blaschke_nonconstant(&mut meta, 5, DEFAULT_ORDER);
        let w = sample_blaschke(&mut meta, 4, DEFAULT_ORDER);
        let k = meta.gen_range(0.05..1.0);
        let pair = match pair_with_dilatation(h, &w, k) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let q = match pair.zero_order() {
            Ok(q) => q,
            Err(_) => continue,
        };
        let aq = pair.h.coeff(q).unwrap().norm();
        let bq = pair.g.coeff(q).unwrap().norm();
        let limit = r_1(bq / (k * aq));
        for &r in &[0.1, 0.2, 0.3] {
            if r > limit {
                continue;
            }
            let c = crate::harmonic::coeff_domination_check(&pair, k, r).unwrap();
            let n = crate::harmonic::norm_domination_check(&pair, k, r).unwrap();
            if c.verdict != Verdict::Holds || n.verdict != Verdict::Holds {
                dom_ok = false;
            }
        }
    }
    report.push(
        "domination_on_sampled_pairs",
        dom_ok,
        "coefficient and square-norm domination".into(),
    );

    // the plain-head quantity of z + conj(z) is 2r/(1-r), crossing one at 1/3
    let pair = HarmonicPair::new(
        TruncatedSeries::identity(DEFAULT_ORDER),
        TruncatedSeries::identity(DEFAULT_ORDER),
        1.0,
    )
    .unwrap();
    let mut worst_id: f64 = 0.0;
    for i in 1..=5 {
        let r = i as f64 / 10.0;
        for &p in &[1.0f64, 2.0, 3.0] {
            let q = plain_head_quantity(&pair, p, 1.0, r).unwrap().midpoint();
            worst_id = worst_id.max((q - 2.0 * r / (1.0 - r)).abs());
        }
    }
    let scan = scan_crossover(
        |r| plain_head_quantity(&pair, 1.0, 1.0, r).map(verdict_le_one),
        0.05,
        0.9,
    )
    .unwrap();
    let cross_gap = (scan.estimate() - 1.0 / 3.0).abs();
    report.push(
        "conjugate_pair_identity",
        worst_id <= 1e-10 && cross_gap <= 1e-9,
        format!("worst identity gap {worst_id:.3e}, crossover gap {cross_gap:.3e}"),
    );

    report
}

/// Cross-validation of every constructor against the coefficient oracle,
/// plus the oracle's own self-consistency. Agreement is measured in the
/// scaled metric `|Δc_n| ρ^n`, which stays at sample precision at every
/// index (recovering `c_n` itself amplifies rounding by `ρ^{-n}`).
pub fn oracle_suite(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    let rho = 0.6f64;
    let deg = 64usize;

    let scaled_gap = |series: &Series64, dft: &Series64| -> f64 {
        let mut worst: f64 = 0.0;
        for n in 0..=deg.min(series.order()).min(dft.order()) {
            let gap =
                (series.coeff(n).unwrap() - dft.coeff(n).unwrap()).norm() * rho.powi(n as i32);
            worst = worst.max(gap);
        }
        worst
    };

    // disk automorphism
    let mut worst: f64 = 0.0;
    for &a in &[0.2f64, 0.5, 0.7] {
        let series = disk_automorphism(a, DEFAULT_ORDER).unwrap();
        let dft = dft_coefficients(move |z: Complex64| (z + a) / (1.0 + a * z), rho, deg).unwrap();
        worst = worst.max(scaled_gap(&series, &dft));
    }
    report.push(
        "automorphism_vs_oracle",
        worst <= 1e-9,
        format!("worst scaled gap {worst:.3e}"),
    );

    // squared-Blaschke extremal
    let mut worst: f64 = 0.0;
    for &a in &[0.6f64, 0.75, 0.9] {
        let series = squared_blaschke_extremal(a, DEFAULT_ORDER).unwrap();
        let dft = dft_coefficients(
            move |z: Complex64| {
                let b = z * (z - a) / (1.0 - a * z);
                b * b
            },
            rho,
            deg,
        )
        .unwrap();
        worst = worst.max(scaled_gap(&series, &dft));
    }
    report.push(
        "squared_blaschke_vs_oracle",
        worst <= 1e-9,
        format!("worst scaled gap {worst:.3e}"),
    );

    // monomial majorization extremal
    let b = Complex64::new(0.6, 0.5);
    let series = monomial_extremal(2, b, 0.45, DEFAULT_ORDER).unwrap();
    let dft = dft_coefficients(
        move |z: Complex64| b * z * z * (z + 0.45) / (1.0 + 0.45 * z),
        rho,
        deg,
    )
    .unwrap();
    let worst = scaled_gap(&series, &dft);
    report.push(
        "monomial_extremal_vs_oracle",
        worst <= 1e-9,
        format!("worst scaled gap {worst:.3e}"),
    );

    // both parts of the extremal harmonic pair
    let mut worst: f64 = 0.0;
    for &(a, k) in &[(0.4f64, 0.3), (0.7, 1.0)] {
        let pair = extremal_harmonic(a, k, DEFAULT_ORDER).unwrap();
        let dft_h = dft_coefficients(move |z: Complex64| (z + a) / (1.0 + a * z), rho, deg).unwrap();
        let dft_g = dft_coefficients(
            move |z: Complex64| ((z + a) / (1.0 + a * z) - a) * k,
            rho,
            deg,
        )
        .unwrap();
        worst = worst.max(scaled_gap(&pair.h, &dft_h)).max(scaled_gap(&pair.g, &dft_g));
    }
    report.push(
        "extremal_pair_vs_oracle",
        worst <= 1e-9,
        format!("worst scaled gap {worst:.3e}"),
    );

    // dilatation-pair construction: g' must be k·w·h' pointwise
    let mut worst: f64 = 0.0;
    {
        let a = 0.55f64;
        let k = 0.8f64;
        let (cw, zw) = random_blaschke_params::<f64>(3, seed ^ 0x6D11);
        let h = disk_automorphism(a, DEFAULT_ORDER).unwrap();
        let w = blaschke_series(cw, &zw, DEFAULT_ORDER);
        let pair = pair_with_dilatation(h, &w, k).unwrap();
        let gprime = pair.g.derivative();
        let dft = dft_coefficients(
            move |z: Complex64| {
                let hp = (1.0 - a * a) / ((1.0 + a * z) * (1.0 + a * z));
                blaschke_pointwise(cw, &zw, z) * hp * k
            },
            rho,
            deg,
        )
        .unwrap();
        worst = worst.max(scaled_gap(&gprime, &dft));
    }
    report.push(
        "dilatation_pair_vs_oracle",
        worst <= 1e-9,
        format!("worst scaled gap {worst:.3e}"),
    );

    // random Blaschke expansions
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0xB1A5);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let degree = meta.gen_range(0..=8);
        let (c, zeros) = random_blaschke_params::<f64>(degree, meta.gen());
        let series = blaschke_series(c, &zeros, DEFAULT_ORDER);
        let zs = zeros.clone();
        let dft = dft_coefficients(move |z| blaschke_pointwise(c, &zs, z), rho, deg).unwrap();
        worst = worst.max(scaled_gap(&series, &dft));
    }
    report.push(
        "blaschke_vs_oracle",
        worst <= 1e-9,
        format!("10 samples, worst scaled gap {worst:.3e}"),
    );

    // quasi-composed triples
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0xC0DE);
    let mut worst: f64 = 0.0;
    for _ in 0..6 {
        let (cp, zp) = random_blaschke_params::<f64>(meta.gen_range(1..=4), meta.gen());
        let (cg, zg) = random_blaschke_params::<f64>(meta.gen_range(0..=4), meta.gen());
        let (cw, zw) = random_blaschke_params::<f64>(meta.gen_range(1..=3), meta.gen());
        let phi = blaschke_series(cp, &zp, DEFAULT_ORDER);
        let g = blaschke_series(cg, &zg, DEFAULT_ORDER);
        let w = TruncatedSeries::identity(DEFAULT_ORDER)
            .cauchy_product(&blaschke_series(cw, &zw, DEFAULT_ORDER));
        let f = quasi_compose(&phi, &g, &w).unwrap();
        let (zp2, zg2, zw2) = (zp.clone(), zg.clone(), zw.clone());
        let dft = dft_coefficients(
            move |z| {
                let wz = z * blaschke_pointwise(cw, &zw2, z);
                blaschke_pointwise(cp, &zp2, z) * blaschke_pointwise(cg, &zg2, wz)
            },
            rho,
            deg,
        )
        .unwrap();
        worst = worst.max(scaled_gap(&f, &dft));
    }
    report.push(
        "quasi_composition_vs_oracle",
        worst <= 1e-9,
        format!("6 triples, worst scaled gap {worst:.3e}"),
    );

    // self-consistency: extracted heads reproduce the sampled values
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0x5E1F);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let (c, zeros) = random_blaschke_params::<f64>(meta.gen_range(0..=6), meta.gen());
        let zs = zeros.clone();
        let dft = dft_coefficients(move |z| blaschke_pointwise(c, &zs, z), 0.7, deg).unwrap();
        for j in 0..64 {
            let th = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
            let z = Complex64::new(0.7 * th.cos(), 0.7 * th.sin());
            worst = worst.max((dft.eval(z) - blaschke_pointwise(c, &zeros, z)).norm());
        }
    }
    report.push(
        "oracle_self_consistency",
        worst <= 1e-9,
        format!("worst re-evaluation gap {worst:.3e}"),
    );

    // dilatation scans
    let pair = extremal_harmonic(0.5f64, 0.35, DEFAULT_ORDER).unwrap();
    let scan = dilatation_scan(&pair, 0.6, 256);
    let exact = (scan.max_ratio - 0.35).abs();
    let mut meta = ChaCha8Rng::seed_from_u64(seed ^ 0xD11A);
    let mut bound_ok = true;
    for _ in 0..4 {
        let h = sample_blaschke_nonconstant(&mut meta, 4, DEFAULT_ORDER);
        let w = sample_blaschke(&mut meta, 4, DEFAULT_ORDER);
        let k = meta.gen_range(0.1..1.0);
        if let Ok(pair) = pair_with_dilatation(h, &w, k) {
            let scan = dilatation_scan(&pair, 0.5, 256);
            if scan.max_ratio > k + 1e-10 || scan.skipped > 0 {
                bound_ok = false;
            }
        }
    }
    report.push(
        "dilatation_scans",
        exact <= 1e-10 && bound_ok,
        format!("extremal ratio gap {exact:.3e}"),
    );

    report
}
