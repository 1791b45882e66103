//! Constructors for the named extremal functions and seeded random samplers.
//!
//! Everything here certifies class membership by construction: disk
//! automorphisms, Blaschke products and their products map the disk into the
//! closed unit disk, so the returned series carry a sup-norm certificate of
//! one, which in turn caps every truncated coefficient.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::powerseries::{coeff_zero_tol, TruncatedSeries};
use crate::scalar::{as_f64, real, Real};

/// Harmonic pair `f = h + conj(g)`: bounded analytic part `h`, co-analytic
/// part `g` with `g(0) = 0`, dilatation bound `k` for `|g'| <= k |h'|`.
#[derive(Debug, Clone)]
pub struct HarmonicPair<T: Real> {
    pub h: TruncatedSeries<T>,
    pub g: TruncatedSeries<T>,
    pub k: T,
}

impl<T: Real> HarmonicPair<T> {
    pub fn new(h: TruncatedSeries<T>, g: TruncatedSeries<T>, k: T) -> Result<Self> {
        if !(k >= T::zero() && k <= T::one()) {
            return Err(Error::ParamOutOfRange {
                name: "k",
                value: as_f64(k),
            });
        }
        let g0 = g.coeff(0).map(|c| c.norm()).unwrap_or(T::zero());
        if g0 > coeff_zero_tol::<T>() {
            return Err(Error::InvalidInput(format!(
                "co-analytic part must vanish at the origin, |g(0)| = {}",
                as_f64(g0)
            )));
        }
        Ok(HarmonicPair { h, g, k })
    }

    /// `|h(0)|`.
    pub fn head_modulus(&self) -> T {
        self.h.coeff(0).unwrap().norm()
    }

    /// Order of the zero of `h - h(0)` at the origin: the smallest `n >= 1`
    /// with a coefficient above the working zero threshold.
    pub fn zero_order(&self) -> Result<usize> {
        let scale = self
            .h
            .coeffs()
            .iter()
            .fold(T::one(), |m, c| m.max(c.norm()));
        let tol = coeff_zero_tol::<T>() * scale;
        for n in 1..=self.h.order() {
            if self.h.coeff(n).unwrap().norm() > tol {
                return Ok(n);
            }
        }
        Err(Error::ConstantAnalyticPart)
    }
}

/// Series of the Möbius self-map `(z + a)/(1 + a z)` for real `a` in
/// `(-1, 1)`: constant term `a`, then `(1 - a²)(-a)^{k-1}`.
pub(crate) fn mobius_series<T: Real>(a: T, order: usize) -> TruncatedSeries<T> {
    debug_assert!(a.abs() < T::one());
    let zero = T::zero();
    let head = T::one() - a * a;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex::new(a, zero));
    let mut pow = T::one();
    for _ in 1..=order {
        coeffs.push(Complex::new(head * pow, zero));
        pow *= -a;
    }
    let cap = head * a.abs().powi(order as i32);
    TruncatedSeries::new(coeffs, cap).with_sup_bound(T::one())
}

/// The disk automorphism `ω_a(z) = (z + a)/(1 + a z)`, `0 <= a < 1`.
pub fn disk_automorphism<T: Real>(a: T, order: usize) -> Result<TruncatedSeries<T>> {
    if !(a >= T::zero() && a < T::one()) {
        return Err(Error::ParamOutOfRange {
            name: "a",
            value: as_f64(a),
        });
    }
    Ok(mobius_series(a, order))
}

/// The equality pair of the refined remainder bound: `h = ω_a`,
/// `g = k (ω_a - a)`.
pub fn extremal_harmonic<T: Real>(a: T, k: T, order: usize) -> Result<HarmonicPair<T>> {
    let h = disk_automorphism(a, order)?;
    let g = h
        .clone()
        .plus_constant(Complex::new(-a, T::zero()))
        .scale_real(k);
    HarmonicPair::new(h, g, k)
}

/// `z²((z - a)/(1 - a z))²`, the subordination-to-`z²` extremal, built
/// through the series pipeline (square of `z · ω_{-a}`).
pub fn squared_blaschke_extremal<T: Real>(a: T, order: usize) -> Result<TruncatedSeries<T>> {
    if !(a > T::zero() && a < T::one()) {
        return Err(Error::ParamOutOfRange {
            name: "a",
            value: as_f64(a),
        });
    }
    let inner = TruncatedSeries::identity(order).cauchy_product(&mobius_series(-a, order));
    Ok(inner.cauchy_product(&inner))
}

/// `b · z^q · ω_a(z)`, the majorization extremal.
pub fn monomial_extremal<T: Real>(
    q: usize,
    b: Complex<T>,
    a: T,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    if b.norm() > T::one() + coeff_zero_tol::<T>() {
        return Err(Error::ParamOutOfRange {
            name: "b",
            value: as_f64(b.norm()),
        });
    }
    if q > order {
        return Err(Error::ParamOutOfRange {
            name: "q",
            value: q as f64,
        });
    }
    Ok(TruncatedSeries::monomial(q, b, order).cauchy_product(&disk_automorphism(a, order)?))
}

/// Parameters of a seeded random finite Blaschke product: a unimodular
/// front factor and `degree` zeros drawn uniformly from the disk of radius
/// 0.9 (small zeros keep truncation tails small).
pub fn random_blaschke_params<T: Real>(
    degree: usize,
    seed: u64,
) -> (Complex<T>, Vec<Complex<T>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two_pi = 2.0 * std::f64::consts::PI;
    let phase: f64 = two_pi * rng.gen::<f64>();
    let c = Complex::new(real(phase.cos()), real(phase.sin()));
    let zeros = (0..degree)
        .map(|_| {
            let rad = 0.9 * rng.gen::<f64>().sqrt();
            let theta = two_pi * rng.gen::<f64>();
            Complex::new(real(rad * theta.cos()), real(rad * theta.sin()))
        })
        .collect();
    (c, zeros)
}

/// Pointwise value `c · Π (z - z_j)/(1 - conj(z_j) z)`; the independent
/// evaluator the DFT oracle samples.
pub fn blaschke_pointwise<T: Real>(
    c: Complex<T>,
    zeros: &[Complex<T>],
    z: Complex<T>,
) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    zeros
        .iter()
        .fold(c, |acc, &zj| acc * (z - zj) / (one - zj.conj() * z))
}

/// Expand a Blaschke product to a series: each degree-one factor is a
/// geometric series, factors are combined by Cauchy products (never by the
/// DFT, so the oracle stays independent).
pub fn blaschke_series<T: Real>(
    c: Complex<T>,
    zeros: &[Complex<T>],
    order: usize,
) -> TruncatedSeries<T> {
    let mut acc = TruncatedSeries::constant(c, order).with_sup_bound(T::one());
    for &zj in zeros {
        acc = acc.cauchy_product(&blaschke_factor(zj, order));
    }
    acc.with_sup_bound(T::one())
}

/// Seeded random member of the class of functions bounded by one:
/// `degree = 0` gives a unimodular constant.
pub fn random_blaschke<T: Real>(degree: usize, seed: u64, order: usize) -> TruncatedSeries<T> {
    let (c, zeros) = random_blaschke_params(degree, seed);
    blaschke_series(c, &zeros, order)
}

/// `(z - z₀)/(1 - conj(z₀) z) = -z₀ + (1 - |z₀|²) Σ conj(z₀)^{n-1} z^n`.
fn blaschke_factor<T: Real>(z0: Complex<T>, order: usize) -> TruncatedSeries<T> {
    let head = T::one() - z0.norm_sqr();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(-z0);
    let mut pow = Complex::new(T::one(), T::zero());
    for _ in 1..=order {
        coeffs.push(pow * head);
        pow *= z0.conj();
    }
    let cap = head * z0.norm().powi(order as i32);
    TruncatedSeries::new(coeffs, cap).with_sup_bound(T::one())
}

/// Harmonic pair with dilatation exactly `k·w`: `g' = k · w · h'`, `g(0)=0`.
/// With `w` a Blaschke product this samples the bounded-dilatation class
/// away from its equality configuration.
pub fn pair_with_dilatation<T: Real>(
    h: TruncatedSeries<T>,
    w: &TruncatedSeries<T>,
    k: T,
) -> Result<HarmonicPair<T>> {
    let g = h
        .derivative()
        .cauchy_product(w)
        .scale_real(k)
        .antiderivative();
    HarmonicPair::new(h, g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn automorphism_coefficients() {
        let f = disk_automorphism(0.5f64, 10).unwrap();
        let expect = [0.5, 0.75, -0.375, 0.1875];
        for (n, &e) in expect.iter().enumerate() {
            assert!((f.coeff(n).unwrap().re - e).abs() < 1e-15);
            assert!(f.coeff(n).unwrap().im.abs() < 1e-15);
        }
    }

    #[test]
    fn automorphism_at_zero_is_identity() {
        let f = disk_automorphism(0.0f64, 8).unwrap();
        for n in 0..=8 {
            let expect = if n == 1 { 1.0 } else { 0.0 };
            assert!((f.coeff(n).unwrap().re - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn automorphism_pointwise_matches_rational_form() {
        let f = disk_automorphism(0.5, crate::DEFAULT_ORDER).unwrap();
        let z = c64(0.3, 0.0);
        let rational = (z + 0.5) / (1.0 + 0.5 * z);
        assert!((f.eval(z) - rational).norm() < 1e-10);
    }

    #[test]
    fn automorphism_modulus_on_grid() {
        let f = disk_automorphism(0.73, crate::DEFAULT_ORDER).unwrap();
        for j in 0..200 {
            let th = 2.0 * std::f64::consts::PI * j as f64 / 200.0;
            let z = c64(0.9 * th.cos(), 0.9 * th.sin());
            assert!(f.eval(z).norm() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn automorphism_rejects_bad_param() {
        assert!(disk_automorphism(1.0, 10).is_err());
        assert!(disk_automorphism(-0.1, 10).is_err());
    }

    #[test]
    fn extremal_pair_with_zero_dilatation() {
        let p = extremal_harmonic(0.4, 0.0, 20).unwrap();
        for n in 0..=20 {
            assert_eq!(p.g.coeff(n).unwrap(), c64(0.0, 0.0));
        }
    }

    #[test]
    fn extremal_pair_at_origin_is_z_plus_conj_z() {
        let p = extremal_harmonic(0.0f64, 1.0, 10).unwrap();
        for n in 0..=10 {
            let expect = if n == 1 { 1.0 } else { 0.0 };
            assert!((p.h.coeff(n).unwrap().re - expect).abs() < 1e-15);
            assert!((p.g.coeff(n).unwrap().re - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn extremal_pair_has_exact_dilatation_ratio() {
        let p = extremal_harmonic(0.6, 0.35, 60).unwrap();
        let hp = p.h.derivative();
        let gp = p.g.derivative();
        for j in 0..64 {
            let th = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
            let z = c64(0.5 * th.cos(), 0.5 * th.sin());
            let ratio = gp.eval(z).norm() / hp.eval(z).norm();
            assert!((ratio - 0.35).abs() < 1e-10);
        }
    }

    #[test]
    fn squared_blaschke_leading_coefficients() {
        let a = 0.8f64;
        let f = squared_blaschke_extremal(a, 40).unwrap();
        assert!(f.coeff(0).unwrap().norm() < 1e-15);
        assert!(f.coeff(1).unwrap().norm() < 1e-15);
        assert!((f.coeff(2).unwrap().re - 0.64).abs() < 1e-14);
        // A_1 = (1-a²) a^{-1} (0 - 2a²)
        assert!((f.coeff(3).unwrap().re - (-0.576)).abs() < 1e-13);
    }

    #[test]
    fn squared_blaschke_is_dominated_by_z_squared() {
        let f = squared_blaschke_extremal(0.55, crate::DEFAULT_ORDER).unwrap();
        for &r in &[0.3, 0.7, 0.95, 0.99] {
            for j in 0..32 {
                let th = 2.0 * std::f64::consts::PI * j as f64 / 32.0;
                let z = c64(r * th.cos(), r * th.sin());
                assert!(f.eval(z).norm() <= r * r + 1e-9);
            }
        }
    }

    #[test]
    fn squared_blaschke_sign_pattern() {
        // with (N-1)/(N+1) <= a² < N/(N+2): A_k <= 0 for k <= N, > 0 after
        for &(a, n_switch) in &[(0.75f64, 3usize), (0.9, 9)] {
            let asq = a * a;
            assert!((n_switch as f64 - 1.0) / (n_switch as f64 + 1.0) <= asq);
            assert!(asq < n_switch as f64 / (n_switch as f64 + 2.0));
            let f = squared_blaschke_extremal(a, 80).unwrap();
            for k in 1..=60usize {
                let ak = f.coeff(2 + k).unwrap().re;
                if k <= n_switch {
                    assert!(ak <= 1e-12, "A_{k} should be <= 0 at a = {a}");
                } else {
                    assert!(ak > 0.0, "A_{k} should be > 0 at a = {a}");
                }
            }
        }
    }

    #[test]
    fn monomial_extremal_cases() {
        // q = 0, b = 1, a = 0 reduces to the identity map
        let f = monomial_extremal(0, c64(1.0, 0.0), 0.0, 6).unwrap();
        for n in 0..=6 {
            let expect = if n == 1 { 1.0 } else { 0.0 };
            assert!((f.coeff(n).unwrap().re - expect).abs() < 1e-15);
        }
        // q = 1, b = 1: first coefficient of z·ω_a is a
        let b = 1.0 / 2f64.sqrt();
        let g = monomial_extremal(1, c64(1.0, 0.0), b, 30).unwrap();
        assert!((g.coeff(1).unwrap().re - b).abs() < 1e-15);
        // q = 2, b = 0.9, a = 0.5: coefficient at z³ is b(1-a²)
        let h = monomial_extremal(2, c64(0.9, 0.0), 0.5, 30).unwrap();
        assert!((h.coeff(3).unwrap().re - 0.675).abs() < 1e-15);
        assert!(monomial_extremal(1, c64(1.2, 0.0), 0.5, 30).is_err());
    }

    #[test]
    fn random_blaschke_degree_zero_is_unimodular_constant() {
        let f = random_blaschke::<f64>(0, 7, 10);
        assert!((f.coeff(0).unwrap().norm() - 1.0).abs() < 1e-14);
        for n in 1..=10 {
            assert_eq!(f.coeff(n).unwrap(), c64(0.0, 0.0));
        }
    }

    #[test]
    fn random_blaschke_is_bounded_on_grid() {
        for seed in 0..6u64 {
            let (c, zeros) = random_blaschke_params::<f64>(5, seed);
            let f = blaschke_series(c, &zeros, crate::DEFAULT_ORDER);
            for j in 0..64 {
                let th = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
                let z = c64(0.95 * th.cos(), 0.95 * th.sin());
                assert!(f.eval(z).norm() <= 1.0 + 1e-10);
            }
        }
    }

    #[test]
    fn random_blaschke_coefficient_bound() {
        // classical bound |a_n| <= 1 - |a_0|² for bounded-by-one functions
        for seed in 0..8u64 {
            let f = random_blaschke::<f64>(4, seed, 120);
            let a0 = f.coeff(0).unwrap().norm();
            for n in 1..=120 {
                assert!(f.coeff(n).unwrap().norm() <= 1.0 - a0 * a0 + 1e-10);
            }
        }
    }

    #[test]
    fn random_blaschke_is_deterministic_in_seed() {
        let a = random_blaschke::<f64>(6, 42, 50);
        let b = random_blaschke::<f64>(6, 42, 50);
        assert_eq!(a, b);
    }

    #[test]
    fn dilatation_pair_construction() {
        let h = disk_automorphism(0.5, 80).unwrap();
        let w = random_blaschke::<f64>(3, 11, 79);
        let pair = pair_with_dilatation(h, &w, 0.7).unwrap();
        assert!(pair.g.coeff(0).unwrap().norm() < 1e-15);
        assert_eq!(pair.zero_order().unwrap(), 1);
        // ratio |g'|/|h'| = 0.7 |w| <= 0.7 on the sampling circle
        let hp = pair.h.derivative();
        let gp = pair.g.derivative();
        for j in 0..64 {
            let th = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
            let z = c64(0.4 * th.cos(), 0.4 * th.sin());
            assert!(gp.eval(z).norm() <= 0.7 * hp.eval(z).norm() + 1e-10);
        }
    }

    #[test]
    fn zero_order_detects_constant_part() {
        let h = TruncatedSeries::constant(c64(0.5, 0.0), 12);
        let g = TruncatedSeries::zero(12);
        let pair = HarmonicPair::new(h, g, 0.0).unwrap();
        assert!(matches!(
            pair.zero_order(),
            Err(crate::Error::ConstantAnalyticPart)
        ));
    }
}
