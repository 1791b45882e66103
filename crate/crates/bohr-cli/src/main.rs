//! `bohr-lab`: radius tables, certified inequality checks, sharpness scans,
//! and invariant suites, with CSV/JSON output for figures.

mod output;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use bohr_core::num_complex::{Complex, Complex64};
use rayon::prelude::*;
use serde::Deserialize;

use bohr_core::families::{
    blaschke_series, disk_automorphism, extremal_harmonic, monomial_extremal,
    pair_with_dilatation, random_blaschke, random_blaschke_params, squared_blaschke_extremal,
};
use bohr_core::harmonic::{
    powered_head_quantity, remainder_bound_check, verify_bohr, HarmonicBohrKind,
};
use bohr_core::quasisub::{
    bohr_head_crossover, bohr_head_sum, comparison_radius, extremal_majorant_closed,
    majorant_compare, quasi_compose, scan_crossover, sharpness_scan, verdict_le_one,
};
use bohr_core::radii::{
    alpha_plus, c_p, r_1, r_p, radius_closed_per_a, radius_per_a, radius_uniform,
    radius_uniform_closed,
};
use bohr_core::suites::{
    harmonic_suite, lemmas_suite, oracle_suite, quasisub_suite, radii_suite, SuiteReport,
};
use bohr_core::{
    HarmonicPair, Interval64, Pair64, Params64, Report64, Series64, TruncatedSeries, Verdict,
    DEFAULT_ORDER,
};

use output::{emit, emit_json, num, Format, ReportJson, Table};

#[derive(Parser)]
#[command(
    name = "bohr-lab",
    version,
    about = "Bohr-radius formulas, certified majorant checks, and sharpness scans \
             for bounded analytic functions and harmonic mappings"
)]
struct Cli {
    /// Optional key=value config file (keys: seed, order, samples); flags win
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for every randomized sampler
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Series truncation order
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a radius formula, optionally over a parameter grid
    Radius {
        /// r_p | r_1 | C_p | eq7 | eq10 | eq12 | eq13 | alpha_plus
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Head modulus; doubles as the x argument of r_p/r_1/alpha_plus
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        /// Sweep one parameter: "a=0:0.99:100" (param=lo:hi:count)
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
    /// Verify an inequality at its predicted radius
    Verify {
        /// 1 | 2 | 3 | c4 | c5 | c6 | lemma5
        #[arg(long)]
        theorem: String,
        /// extremal | omega_a | z_omega_b | blaschke | z_plus_conj | dilatation
        #[arg(long, default_value = "extremal")]
        family: String,
        /// Inline JSON family spec, e.g. {"family":"omega_a","a":0.5}
        #[arg(long)]
        family_json: Option<String>,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        /// Blaschke degree for sampled families
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Evaluation radius override (defaults just below the predicted radius)
        #[arg(long)]
        r: Option<f64>,
        /// Also bracket the crossover radius
        #[arg(long)]
        scan: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
    },
    /// Bracket the crossover radius of an extremal family
    Sharpness {
        /// omega_a | z_omega_b | corollary2 | monomial | extremal_harmonic
        #[arg(long, default_value = "extremal_harmonic")]
        family: String,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        #[arg(long, default_value_t = 1)]
        q: usize,
        /// Modulus of the monomial coefficient
        #[arg(long, default_value_t = 1.0)]
        b_mod: f64,
        #[arg(long, default_value_t = 0.05)]
        r_lo: f64,
        #[arg(long, default_value_t = 0.95)]
        r_hi: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
    /// Reference comparison tables
    Table {
        /// r4 | radius_grid | bounds | all
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
    /// Run a named invariant suite
    Props {
        /// lemmas | radii | quasisub | harmonic | oracle
        #[arg(long)]
        suite: String,
        /// Sample count override (suite-specific meaning)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
    /// Emit x,y curve data for figures
    Plotdata {
        /// r_p | r_1 | t_p | s_a | eq7 | eq10 | eq12
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 0.9)]
        a: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
}

/// Effective run configuration after merging config file and flags.
struct Settings {
    seed: u64,
    order: usize,
}

fn load_config(path: &PathBuf) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
    let mut map = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("config line without '=': {line}"))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn settings(cli: &Cli) -> Result<(Settings, Option<usize>)> {
    let mut seed = 0u64;
    let mut order = DEFAULT_ORDER;
    let mut samples: Option<usize> = None;
    if let Some(path) = &cli.config {
        let map = load_config(path)?;
        if let Some(v) = map.get("seed") {
            seed = v.parse().context("config seed")?;
        }
        if let Some(v) = map.get("order") {
            order = v.parse().context("config order")?;
        }
        if let Some(v) = map.get("samples") {
            samples = Some(v.parse().context("config samples")?);
        }
    }
    if let Some(s) = cli.seed {
        seed = s;
    }
    if let Some(o) = cli.order {
        order = o;
    }
    Ok((Settings { seed, order }, samples))
}

/// Families selectable from the command line or as inline JSON.
#[derive(Debug, Deserialize)]
struct FamilySpec {
    family: String,
    a: Option<f64>,
    k: Option<f64>,
    q: Option<usize>,
    b: Option<f64>,
    degree: Option<usize>,
    seed: Option<u64>,
}

impl FamilySpec {
    fn from_flags(family: &str, a: f64, k: f64, degree: usize, seed: u64) -> Self {
        FamilySpec {
            family: family.to_string(),
            a: Some(a),
            k: Some(k),
            q: None,
            b: None,
            degree: Some(degree),
            seed: Some(seed),
        }
    }
}

fn usage_error(message: String) -> anyhow::Error {
    anyhow!(UsageError(message))
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("BOHR_LAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = if err.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                match err.downcast_ref::<bohr_core::Error>() {
                    Some(bohr_core::Error::ParamOutOfRange { .. })
                    | Some(bohr_core::Error::RadiusOutOfRange(_)) => 3,
                    _ => 2,
                }
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let (settings, config_samples) = settings(&cli)?;
    let out_file = cli.out_file.clone();
    match cli.command {
        Command::Radius {
            formula,
            p,
            k,
            m,
            a,
            grid,
            out,
        } => cmd_radius(&formula, p, k, m, a, grid.as_deref(), out, &out_file),
        Command::Verify {
            theorem,
            family,
            family_json,
            p,
            k,
            m,
            a,
            degree,
            r,
            scan,
            out,
        } => {
            let spec = match family_json {
                Some(text) => serde_json::from_str(&text).context("parsing --family-json")?,
                None => FamilySpec::from_flags(&family, a, k, degree, settings.seed),
            };
            cmd_verify(&theorem, &spec, p, m, r, scan, out, &settings, &out_file)
        }
        Command::Sharpness {
            family,
            p,
            k,
            m,
            a,
            q,
            b_mod,
            r_lo,
            r_hi,
            out,
        } => cmd_sharpness(
            &family, p, k, m, a, q, b_mod, r_lo, r_hi, out, &settings, &out_file,
        ),
        Command::Table { which, out } => cmd_table(&which, out, &out_file),
        Command::Props { suite, samples, out } => {
            cmd_props(&suite, samples.or(config_samples), out, &settings, &out_file)
        }
        Command::Plotdata {
            curve,
            p,
            k,
            m,
            a,
            samples,
            out,
        } => cmd_plotdata(&curve, p, k, m, a, samples, out, &out_file),
    }
}

fn radius_value(formula: &str, p: f64, k: f64, m: u32, a: f64) -> Result<f64> {
    let params = || Params64::new(p, k, m, a).map_err(anyhow::Error::new);
    let value = match formula {
        "r_p" => r_p(p, a)?,
        "r_1" => {
            if !(0.0..=1.0).contains(&a) {
                return Err(bohr_core::Error::ParamOutOfRange { name: "a", value: a }.into());
            }
            r_1(a)
        }
        "C_p" | "c_p" => c_p(p)?,
        "eq7" => radius_per_a(&params()?)?,
        "eq10" => radius_uniform(&params()?)?,
        "eq12" => radius_closed_per_a(&params()?)?,
        "eq13" => radius_uniform_closed(p, k)?,
        "alpha_plus" => alpha_plus(a)?,
        other => return Err(usage_error(format!("unknown formula `{other}`"))),
    };
    Ok(value)
}

#[allow(clippy::too_many_arguments)]
fn cmd_radius(
    formula: &str,
    p: f64,
    k: f64,
    m: u32,
    a: f64,
    grid: Option<&str>,
    out: Format,
    out_file: &Option<PathBuf>,
) -> Result<u8> {
    let mut table = Table::new(&["formula", "p", "k", "m", "a", "radius"]);
    let mut points: Vec<(f64, f64, u32, f64)> = Vec::new();
    match grid {
        None => points.push((p, k, m, a)),
        Some(spec) => {
            let (name, range) = spec
                .split_once('=')
                .ok_or_else(|| usage_error(format!("bad grid spec `{spec}`")))?;
            let parts: Vec<&str> = range.split(':').collect();
            if parts.len() != 3 {
                return Err(usage_error(format!("bad grid range `{range}`")));
            }
            let lo: f64 = parts[0].parse().context("grid lo")?;
            let hi: f64 = parts[1].parse().context("grid hi")?;
            let n: usize = parts[2].parse().context("grid count")?;
            if n < 2 || hi < lo {
                return Err(usage_error("grid needs count >= 2 and hi >= lo".into()));
            }
            for i in 0..n {
                let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                match name {
                    "a" => points.push((p, k, m, x)),
                    "p" => points.push((x, k, m, a)),
                    "k" => points.push((p, x, m, a)),
                    other => {
                        return Err(usage_error(format!("cannot sweep parameter `{other}`")))
                    }
                }
            }
        }
    }
    type RadiusRow = (f64, f64, u32, f64, f64);
    let rows: Vec<Result<RadiusRow>> = points
        .par_iter()
        .map(|&(p, k, m, a)| radius_value(formula, p, k, m, a).map(|v| (p, k, m, a, v)))
        .collect();
    for row in rows {
        let (p, k, m, a, value) = row?;
        table.push(vec![
            formula.to_string(),
            num(p),
            num(k),
            m.to_string(),
            num(a),
            num(value),
        ]);
    }
    emit(&table.render(out), out_file)?;
    Ok(0)
}

fn build_pair(spec: &FamilySpec, k: f64, order: usize) -> Result<Pair64> {
    let a = spec.a.unwrap_or(0.5);
    let seed = spec.seed.unwrap_or(0);
    let degree = spec.degree.unwrap_or(4);
    let pair = match spec.family.as_str() {
        "extremal" | "extremal_harmonic" => extremal_harmonic(a, k, order)?,
        "blaschke" => {
            let h: Series64 = random_blaschke(degree, seed, order);
            HarmonicPair::new(h, TruncatedSeries::zero(order), 0.0)?
        }
        "z_plus_conj" => HarmonicPair::new(
            TruncatedSeries::identity(order),
            TruncatedSeries::identity(order),
            1.0,
        )?,
        "dilatation" => {
            let h = disk_automorphism(a, order)?;
            let w: Series64 = random_blaschke(degree, seed.wrapping_add(1), order);
            pair_with_dilatation(h, &w, k)?
        }
        other => return Err(usage_error(format!("unknown harmonic family `{other}`"))),
    };
    Ok(pair)
}

fn build_bounded_function(spec: &FamilySpec, order: usize) -> Result<Series64> {
    let a = spec.a.unwrap_or(0.5);
    match spec.family.as_str() {
        "omega_a" | "extremal" => Ok(disk_automorphism(a, order)?),
        "z_omega_b" => Ok(TruncatedSeries::identity(order)
            .cauchy_product(&disk_automorphism(a, order)?)),
        "blaschke" => Ok(random_blaschke(
            spec.degree.unwrap_or(4),
            spec.seed.unwrap_or(0),
            order,
        )),
        "monomial" => Ok(monomial_extremal(
            spec.q.unwrap_or(1),
            Complex64::new(spec.b.unwrap_or(1.0), 0.0),
            a,
            order,
        )?),
        other => Err(usage_error(format!("unknown bounded family `{other}`"))),
    }
}

fn verdict_exit(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Inconclusive => 4,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    spec: &FamilySpec,
    p: f64,
    m: u32,
    r_override: Option<f64>,
    scan: bool,
    out: Format,
    settings: &Settings,
    out_file: &Option<PathBuf>,
) -> Result<u8> {
    let order = settings.order;
    let k = spec.k.unwrap_or(0.0);
    let report: Report64 = match theorem {
        "1" => {
            let f = build_bounded_function(spec, order)?;
            let a0 = f.coeff(0).unwrap().norm();
            let predicted = r_p(p, a0)?;
            let r = r_override.unwrap_or(predicted - 1e-9).max(0.0);
            let lhs = bohr_head_sum(&f, p, r)?;
            let crossover = if scan {
                bohr_head_crossover(&f, p, (predicted / 10.0).max(1e-3), 0.99).ok()
            } else {
                None
            };
            Report64 {
                params: Some(Params64::new(p, 0.0, 1, a0)?),
                predicted_radius: Some(predicted),
                eval_radius: r,
                lhs,
                rhs: Interval64::point(1.0),
                verdict: verdict_le_one(lhs),
                crossover,
                side_condition: None,
            }
        }
        "2" => {
            let seed = spec.seed.unwrap_or(settings.seed);
            let degree = spec.degree.unwrap_or(4).max(1);
            let (cp, zp) = random_blaschke_params::<f64>(degree, seed);
            let (cg, zg) = random_blaschke_params::<f64>(degree, seed.wrapping_add(1));
            let (cw, zw) = random_blaschke_params::<f64>(degree.max(2) - 1, seed.wrapping_add(2));
            let phi = blaschke_series(cp, &zp, order);
            let g = blaschke_series(cg, &zg, order);
            let w = TruncatedSeries::identity(order).cauchy_product(&blaschke_series(cw, &zw, order));
            let f = quasi_compose(&phi, &g, &w)?;
            let predicted = comparison_radius(
                phi.coeff(0).unwrap().norm(),
                w.coeff(1).unwrap().norm(),
            )?;
            let r = r_override.unwrap_or(predicted - 1e-6).max(0.0);
            let mut report = majorant_compare(&f, &g, r)?;
            report.predicted_radius = Some(predicted);
            if scan {
                report.crossover = sharpness_scan(&f, &g, (predicted / 10.0).max(1e-3), 0.99).ok();
            }
            report
        }
        "3" | "c4" | "c5" | "c6" => {
            let kind = match theorem {
                "3" => HarmonicBohrKind::PowerHeadPerA,
                "c4" => HarmonicBohrKind::PowerHeadUniform,
                "c5" => HarmonicBohrKind::PlainHeadPerA,
                _ => HarmonicBohrKind::PlainHeadUniform,
            };
            let pair = build_pair(spec, k, order)?;
            let params = Params64::new(p, pair.k, m, pair.head_modulus())?;
            verify_bohr(kind, &params, &pair, scan)?
        }
        "lemma5" => {
            let pair = build_pair(spec, k, order)?;
            let r = r_override.unwrap_or(0.3);
            remainder_bound_check(&pair, pair.k, r)?
        }
        other => return Err(usage_error(format!("unknown check `{other}`"))),
    };
    let json = ReportJson::from_report(&format!("theorem-{theorem}"), &report);
    match out {
        Format::Json => emit_json(&json, out_file)?,
        Format::Csv => {
            let mut table = Table::new(&ReportJson::csv_header());
            table.push(json.csv_row());
            emit(&table.render(Format::Csv), out_file)?;
        }
    }
    Ok(verdict_exit(report.verdict))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sharpness(
    family: &str,
    p: f64,
    k: f64,
    m: u32,
    a: f64,
    q: usize,
    b_mod: f64,
    r_lo: f64,
    r_hi: f64,
    out: Format,
    settings: &Settings,
    out_file: &Option<PathBuf>,
) -> Result<u8> {
    let order = settings.order;
    let scan = match family {
        "omega_a" => {
            let f = disk_automorphism(a, order)?;
            bohr_head_crossover(&f, p, r_lo, r_hi)?
        }
        "z_omega_b" => {
            let f = TruncatedSeries::identity(order).cauchy_product(&disk_automorphism(a, order)?);
            bohr_head_crossover(&f, p, r_lo, r_hi)?
        }
        "corollary2" => {
            let f = squared_blaschke_extremal(a, order)?;
            let g = TruncatedSeries::monomial(2, Complex::new(1.0, 0.0), order);
            sharpness_scan(&f, &g, r_lo, r_hi)?
        }
        "monomial" => {
            let b = Complex64::new(b_mod, 0.0);
            let f = monomial_extremal(q, b, a, order)?;
            let g = TruncatedSeries::monomial(q, b, order);
            sharpness_scan(&f, &g, r_lo, r_hi)?
        }
        "extremal_harmonic" | "extremal" => {
            let params = Params64::new(p, k, m, a)?;
            let pair = extremal_harmonic(a, k, order)?;
            scan_crossover(
                |r| powered_head_quantity(&params, &pair, r).map(verdict_le_one),
                r_lo,
                r_hi,
            )?
        }
        other => return Err(usage_error(format!("unknown sharpness family `{other}`"))),
    };
    let mut table = Table::new(&[
        "family",
        "p",
        "k",
        "m",
        "a",
        "holds_up_to",
        "fails_from",
        "estimate",
    ]);
    table.push(vec![
        family.to_string(),
        num(p),
        num(k),
        m.to_string(),
        num(a),
        num(scan.holds_up_to),
        num(scan.fails_from),
        num(scan.estimate()),
    ]);
    emit(&table.render(out), out_file)?;
    Ok(0)
}

fn cmd_table(which: &str, out: Format, out_file: &Option<PathBuf>) -> Result<u8> {
    let mut text = String::new();
    if which == "r4" || which == "all" {
        let mut table = Table::new(&["p", "x", "radius"]);
        for &x in &[0.5, 1.0 / 3.0, 0.0, 1.0] {
            table.push(vec![num(4.0), num(x), num(r_p(4.0, x)?)]);
        }
        text.push_str(&table.render(out));
    }
    if which == "radius_grid" || which == "all" {
        let mut table = Table::new(&["p", "x", "radius"]);
        let ps = [0.5, 1.0, 2.0, 3.0, 4.0];
        let rows: Vec<Result<(f64, f64, f64)>> = ps
            .par_iter()
            .flat_map(|&p| {
                (0..=20)
                    .into_par_iter()
                    .map(move |i| {
                        let x = i as f64 / 20.0;
                        r_p(p, x).map(|v| (p, x, v)).map_err(anyhow::Error::new)
                    })
            })
            .collect();
        for row in rows {
            let (p, x, v) = row?;
            table.push(vec![num(p), num(x), num(v)]);
        }
        text.push_str(&table.render(out));
    }
    if which == "bounds" || which == "all" {
        let mut table = Table::new(&["p", "k", "m", "root", "closed_bound", "coarse_bound"]);
        for &m in &[1u32, 2, 3] {
            for &k in &[0.0, 0.5, 1.0] {
                for &p in &[0.5, 1.0, 2.0] {
                    let params = Params64::new(p, k, m, 0.0)?;
                    table.push(vec![
                        num(p),
                        num(k),
                        m.to_string(),
                        num(radius_uniform(&params)?),
                        num(radius_uniform_closed(p, k)?),
                        num(1.0 / (2.0 + k)),
                    ]);
                }
            }
        }
        text.push_str(&table.render(out));
    }
    if text.is_empty() {
        return Err(usage_error(format!("unknown table `{which}`")));
    }
    emit(&text, out_file)?;
    Ok(0)
}

fn cmd_props(
    suite: &str,
    samples: Option<usize>,
    out: Format,
    settings: &Settings,
    out_file: &Option<PathBuf>,
) -> Result<u8> {
    let report: SuiteReport = match suite {
        "lemmas" => lemmas_suite(settings.seed, samples.unwrap_or(40)),
        "radii" => radii_suite(samples.unwrap_or(10_000)),
        "quasisub" => {
            let bohr = samples.unwrap_or(500);
            let triples = (bohr * 2 / 5).max(1);
            quasisub_suite(settings.seed, bohr, triples)
        }
        "harmonic" => harmonic_suite(settings.seed),
        "oracle" => oracle_suite(settings.seed),
        other => return Err(usage_error(format!("unknown suite `{other}`"))),
    };
    let mut table = Table::new(&["suite", "check", "passed", "detail"]);
    for check in &report.checks {
        table.push(vec![
            report.suite.clone(),
            check.name.clone(),
            check.passed.to_string(),
            check.detail.replace(',', ";"),
        ]);
    }
    emit(&table.render(out), out_file)?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_plotdata(
    curve: &str,
    p: f64,
    k: f64,
    m: u32,
    a: f64,
    samples: usize,
    out: Format,
    out_file: &Option<PathBuf>,
) -> Result<u8> {
    if samples < 2 {
        return Err(usage_error("need at least two samples".into()));
    }
    let mut table = Table::new(&["curve", "p", "k", "m", "a", "x", "y"]);
    let mut push = |x: f64, y: f64| {
        table.push(vec![
            curve.to_string(),
            num(p),
            num(k),
            m.to_string(),
            num(a),
            num(x),
            num(y),
        ]);
    };
    let steps = samples - 1;
    match curve {
        "r_p" => {
            for i in 0..=steps {
                let x = i as f64 / steps as f64;
                push(x, r_p(p, x)?);
            }
        }
        "r_1" => {
            for i in 0..=steps {
                let x = i as f64 / steps as f64;
                push(x, r_1(x));
            }
        }
        "t_p" => {
            for i in 0..=steps {
                let x = i as f64 / steps as f64;
                push(x, bohr_core::radii::t_p(p, x)?);
            }
        }
        "s_a" => {
            for i in 0..=steps {
                let r = 0.98 * i as f64 / steps as f64;
                push(r, extremal_majorant_closed(a, r)?);
            }
        }
        "eq7" => {
            for i in 0..=steps {
                let x = 0.99 * i as f64 / steps as f64;
                push(x, radius_per_a(&Params64::new(p, k, m, x)?)?);
            }
        }
        "eq10" => {
            for i in 0..=steps {
                let x = i as f64 / steps as f64;
                push(x, radius_uniform(&Params64::new(p, x, m, 0.0)?)?);
            }
        }
        "eq12" => {
            for i in 0..=steps {
                let x = 0.99 * i as f64 / steps as f64;
                push(x, radius_closed_per_a(&Params64::new(p, k, m, x)?)?);
            }
        }
        other => return Err(usage_error(format!("unknown curve `{other}`"))),
    }
    emit(&table.render(out), out_file)?;
    Ok(0)
}
