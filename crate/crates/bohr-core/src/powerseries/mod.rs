//! Truncated power-series arithmetic with certified tail bounds.
//!
//! A [`TruncatedSeries`] keeps the first `N + 1` Taylor coefficients of a
//! function analytic on the unit disk, together with a `tail_cap` `M`
//! bounding the discarded coefficients. Evaluations that involve the tail
//! ([`TruncatedSeries::majorant_sum`], [`TruncatedSeries::weighted_norm_sq`])
//! return an [`Interval`]: the head contributes exactly, the tail widens the
//! upper end by at most `M · r^{N+1} / (1 - r)`.
//!
//! # Tail model
//!
//! For series built directly from a closed form (disk automorphisms,
//! Blaschke factors) the cap is a genuine uniform coefficient bound,
//! `|c_n| <= M` for all `n > N`, valid at every radius `r < 1`.
//!
//! Uniform caps are not closed under Cauchy products (coefficients of a
//! product can pile up linearly in `n`), so caps attached to *derived*
//! series (products, compositions, derivatives) certify the weaker
//! sum-level statement
//!
//! ```text
//! sum_{n>N} |c_n| r^n  <=  M · r^{N+1} / (1 - r)     for r <= 0.9,
//! ```
//!
//! which is exactly what the interval evaluations consume. The crate only
//! compares majorants at radii well below `0.9`; nearer to `1` the widths
//! grow past any useful threshold and verdicts degrade to inconclusive
//! anyway.
//!
//! Series whose sup-norm on the disk is known by construction (for example
//! any function bounded by one) carry that bound in `sup_bound`; a sup-norm
//! `s` caps every coefficient by `s`, which keeps tails certifiable through
//! long composition pipelines where the ℓ¹ propagation alone would blow up.

mod interval;
mod io;

pub use interval::Interval;
pub use io::SeriesJson;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Real};

/// Default truncation order used by constructors and the CLI.
pub const DEFAULT_ORDER: usize = 200;

/// Moduli below this count as numerically zero (constant terms, zero-order
/// detection).
pub(crate) fn coeff_zero_tol<T: Real>() -> T {
    real(1e-12)
}

/// Radius up to which tail caps on derived series are certified.
fn cert_radius<T: Real>() -> T {
    real(0.9)
}

/// `R^n / (1 - R)` at the certification radius; dominates `r^n / (1 - r)`
/// for `r <= R`.
fn tail_value_factor<T: Real>(n: usize) -> T {
    let r0 = cert_radius::<T>();
    r0.powi(n as i32) / (T::one() - r0)
}

fn check_radius<T: Real>(r: T) -> Result<()> {
    if r >= T::zero() && r < T::one() {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(as_f64(r)))
    }
}

/// Finite complex coefficient sequence `c_0..c_N` with a certified tail cap.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T: Real> {
    coeffs: Vec<Complex<T>>,
    tail_cap: T,
    sup_bound: Option<T>,
}

impl<T: Real> TruncatedSeries<T> {
    /// Build from raw coefficients and a uniform tail cap.
    pub fn new(coeffs: Vec<Complex<T>>, tail_cap: T) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        assert!(
            tail_cap >= T::zero() && tail_cap.is_finite(),
            "tail cap must be finite and nonnegative"
        );
        TruncatedSeries {
            coeffs,
            tail_cap,
            sup_bound: None,
        }
    }

    fn assemble(coeffs: Vec<Complex<T>>, tail_cap: T, sup_bound: Option<T>) -> Self {
        let mut cap = tail_cap.max(T::zero());
        if !cap.is_finite() {
            cap = T::max_value();
        }
        if let Some(s) = sup_bound {
            // a disk-wide sup bounds every Taylor coefficient
            cap = cap.min(s);
        }
        TruncatedSeries {
            coeffs,
            tail_cap: cap,
            sup_bound,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Complex::new(T::zero(), T::zero()), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex::new(T::one(), T::zero()), order)
    }

    pub fn constant(c: Complex<T>, order: usize) -> Self {
        Self::monomial(0, c, order)
    }

    /// The identity map `z`, padded to `order`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, Complex::new(T::one(), T::zero()), order)
    }

    /// `c · z^degree`, exact, padded to `order`.
    pub fn monomial(degree: usize, c: Complex<T>, order: usize) -> Self {
        assert!(degree <= order, "monomial degree exceeds order");
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); order + 1];
        coeffs[degree] = c;
        Self::assemble(coeffs, T::zero(), Some(c.norm()))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Stored coefficient, `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<Complex<T>> {
        self.coeffs.get(n).copied()
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn tail_cap(&self) -> T {
        self.tail_cap
    }

    pub fn sup_bound(&self) -> Option<T> {
        self.sup_bound
    }

    /// Attach a certified sup-norm bound on the disk (for example `1` for a
    /// function known to map into the closed unit disk). The tail cap is
    /// tightened accordingly.
    pub fn with_sup_bound(self, sup: T) -> Self {
        assert!(sup >= T::zero(), "sup bound must be nonnegative");
        Self::assemble(self.coeffs, self.tail_cap, Some(sup))
    }

    /// ℓ¹ norm of the stored head.
    pub fn head_l1(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm())
    }

    fn l1_beyond(&self, n: usize) -> T {
        self.coeffs[(n + 1).min(self.coeffs.len())..]
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm())
    }

    /// Head evaluation by Horner; the truncated tail is ignored, so this is
    /// a diagnostic, not a certified value.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub(crate) fn plus_constant(mut self, c: Complex<T>) -> Self {
        self.coeffs[0] += c;
        let sup = self.sup_bound.map(|s| s + c.norm());
        // the cap is untouched: tail coefficients do not change
        TruncatedSeries {
            coeffs: self.coeffs,
            tail_cap: self.tail_cap,
            sup_bound: sup,
        }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        TruncatedSeries {
            coeffs,
            tail_cap: self.tail_cap,
            sup_bound: self.sup_bound,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i] + other.coeffs[i]).collect();
        let cap = self.tail_cap + other.tail_cap + self.l1_beyond(n) + other.l1_beyond(n);
        let sup = match (self.sup_bound, other.sup_bound) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Self::assemble(coeffs, cap, sup)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Self::assemble(
            coeffs,
            self.tail_cap * c.norm(),
            self.sup_bound.map(|s| s * c.norm()),
        )
    }

    pub fn scale_real(&self, t: T) -> Self {
        self.scale(Complex::new(t, T::zero()))
    }

    /// Coefficient convolution, truncated to `min` of the input orders.
    ///
    /// The discarded exactly-known part of the convolution and the
    /// tail-crossing terms are folded into the output cap; see the module
    /// docs for the certified statement.
    pub fn cauchy_product(&self, other: &Self) -> Self {
        let nf = self.order();
        let ng = other.order();
        let n = nf.min(ng);
        let zero = Complex::new(T::zero(), T::zero());
        let mut full = vec![zero; nf + ng + 1];
        for i in 0..=nf {
            let ci = self.coeffs[i];
            if ci == zero {
                continue;
            }
            for j in 0..=ng {
                full[i + j] += ci * other.coeffs[j];
            }
        }
        let overflow = full[n + 1..]
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm());
        full.truncate(n + 1);
        let tt = self.tail_cap * other.tail_cap * tail_value_factor::<T>(nf.max(ng) + 1);
        let cap = overflow
            + self.head_l1() * other.tail_cap
            + other.head_l1() * self.tail_cap
            + tt;
        let sup = match (self.sup_bound, other.sup_bound) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        Self::assemble(full, cap, sup)
    }

    /// Composition `g ∘ w` for an inner function fixing the origin, to order
    /// `min(g.order, w.order)`, via Horner iteration of Cauchy products.
    pub fn compose(g: &Self, w: &Self) -> Result<Self> {
        let w0 = w.coeffs[0].norm();
        if w0 > coeff_zero_tol::<T>() {
            return Err(Error::NonVanishingInnerConstant(as_f64(w0)));
        }
        let n = g.order().min(w.order());
        let mut acc = Self::constant(g.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.cauchy_product(w).plus_constant(g.coeffs[k]);
        }
        // Coefficients of g beyond the working order only reach the tail:
        // w(0) = 0 makes w^k = O(z^k). `u` dominates the majorant slope
        // W(r)/r for r up to the certification radius.
        let u = w.head_l1() + w.tail_cap * tail_value_factor::<T>(w.order());
        let mut drop = T::zero();
        for k in (n + 1)..=g.order() {
            drop += g.coeffs[k].norm() * u.powi(k as i32);
        }
        if g.tail_cap > T::zero() {
            // geometric drop bound; for u > 1 the factor 20 covers
            // 1/(1 - r u) on r <= 0.95/u (a slope above one saturates the
            // power anyway, and the sup channel takes over in assemble)
            let geo = g.tail_cap * u.powi(g.order() as i32 + 1);
            drop += if u <= T::one() { geo } else { geo * real::<T>(20.0) };
        }
        let sup = match (g.sup_bound, w.sup_bound) {
            (Some(sg), Some(sw)) if sw <= T::one() + coeff_zero_tol::<T>() => Some(sg),
            _ => None,
        };
        Ok(Self::assemble(acc.coeffs, acc.tail_cap + drop, sup))
    }

    /// Term-wise derivative, order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            let cap = if self.tail_cap == T::zero() {
                T::zero()
            } else {
                // nothing exact is known about c_1; saturate
                T::max_value()
            };
            return Self::assemble(vec![Complex::new(T::zero(), T::zero())], cap, None);
        }
        let coeffs = (1..=self.order())
            .map(|k| self.coeffs[k] * Complex::new(T::from_usize(k).unwrap(), T::zero()))
            .collect();
        // tail picks up a factor n; n r^{n-1} sums against r^N/(1-r) with a
        // slack of (N + 1) + r/(1-r) <= N + 10 at the certification radius
        let cap = self.tail_cap * T::from_usize(self.order() + 10).unwrap();
        Self::assemble(coeffs, cap, None)
    }

    /// Term-wise antiderivative with zero constant term, order grows by one.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 2);
        coeffs.push(Complex::new(T::zero(), T::zero()));
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Complex::new(T::from_usize(k + 1).unwrap(), T::zero()));
        }
        let cap = self.tail_cap / T::from_usize(self.order() + 2).unwrap();
        Self::assemble(coeffs, cap, self.sup_bound)
    }

    /// Certified enclosure of `Σ_{n ≥ from_index} |c_n| r^n`.
    pub fn majorant_sum(&self, r: T, from_index: usize) -> Result<Interval<T>> {
        check_radius(r)?;
        let mut head = T::zero();
        if from_index <= self.order() {
            let mut rp = r.powi(from_index as i32);
            for n in from_index..=self.order() {
                head += self.coeffs[n].norm() * rp;
                rp *= r;
            }
        }
        let tail_start = from_index.max(self.order() + 1);
        let width = self.tail_width(r, tail_start);
        Ok(Interval::new(head, head + width))
    }

    /// Certified enclosure of `Σ_{n ≥ 1} |c_n|² r^{2n}`.
    pub fn weighted_norm_sq(&self, r: T) -> Result<Interval<T>> {
        check_radius(r)?;
        let r2 = r * r;
        let mut head = T::zero();
        let mut rp = r2;
        for n in 1..=self.order() {
            head += self.coeffs[n].norm_sqr() * rp;
            rp *= r2;
        }
        let width = if self.tail_cap == T::zero() || r == T::zero() {
            T::zero()
        } else {
            let w = self.tail_cap * self.tail_cap * r2.powi(self.order() as i32 + 1)
                / (T::one() - r2);
            if w.is_finite() {
                w
            } else {
                T::max_value()
            }
        };
        Ok(Interval::new(head, head + width))
    }

    fn tail_width(&self, r: T, start: usize) -> T {
        if self.tail_cap == T::zero() || r == T::zero() {
            return T::zero();
        }
        let w = self.tail_cap * r.powi(start as i32) / (T::one() - r);
        if w.is_finite() {
            w
        } else {
            T::max_value()
        }
    }

    /// Extend an exact polynomial with zero coefficients.
    pub fn pad_to(mut self, order: usize) -> Self {
        assert!(
            self.tail_cap == T::zero(),
            "only series with zero tail cap can be padded"
        );
        while self.coeffs.len() <= order {
            self.coeffs.push(Complex::new(T::zero(), T::zero()));
        }
        self
    }

    /// Drop coefficients above `order`, folding their mass into the cap.
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        let cap = self.tail_cap + self.l1_beyond(order);
        Self::assemble(self.coeffs[..=order].to_vec(), cap, self.sup_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// ω_a head with its exact cap, for product/majorant checks.
    fn omega(a: f64, order: usize) -> TruncatedSeries<f64> {
        families::disk_automorphism(a, order).unwrap()
    }

    #[test]
    fn product_with_one_is_identity() {
        let f = omega(0.37, 40);
        let p = TruncatedSeries::one(40).cauchy_product(&f);
        for n in 0..=40 {
            assert!((p.coeff(n).unwrap() - f.coeff(n).unwrap()).norm() < 1e-15);
        }
        assert!((p.tail_cap() - f.tail_cap()).abs() <= 1e-15);
    }

    #[test]
    fn z_omega_b_majorant_closed_form() {
        // majorant of z·ω_b at r collapses to br/(1-br)
        let b = 1.0 / 2f64.sqrt();
        let f = TruncatedSeries::identity(50).cauchy_product(&omega(b, 50));
        for &r in &[0.1, 0.3, 0.5, 0.65] {
            let s = f.majorant_sum(r, 0).unwrap();
            let closed = b * r / (1.0 - b * r);
            assert!(s.lo() <= closed + 1e-12 && closed <= s.hi() + 1e-12);
            assert!(s.width() < 1e-10);
        }
    }

    #[test]
    fn majorant_of_disk_automorphism() {
        let f = omega(0.5, DEFAULT_ORDER);
        let s = f.majorant_sum(0.25, 1).unwrap();
        let closed = 0.75 * 0.25 / (1.0 - 0.5 * 0.25);
        assert!((s.midpoint() - closed).abs() < 1e-12);
        assert!(s.contains(closed));
    }

    #[test]
    fn majorant_of_zero_series() {
        let z = TruncatedSeries::<f64>::zero(10);
        let s = z.majorant_sum(0.9, 0).unwrap();
        assert_eq!((s.lo(), s.hi()), (0.0, 0.0));
    }

    #[test]
    fn majorant_rejects_bad_radius() {
        let f = omega(0.5, 10);
        assert!(matches!(
            f.majorant_sum(1.0, 0),
            Err(Error::RadiusOutOfRange(_))
        ));
        assert!(matches!(
            f.majorant_sum(-0.1, 0),
            Err(Error::RadiusOutOfRange(_))
        ));
    }

    #[test]
    fn weighted_norm_closed_form() {
        // Σ (1-a²)² a^{2(k-1)} r^{2k} = (1-a²)² r² / (1 - a² r²)
        let f = omega(0.5, DEFAULT_ORDER);
        let s = f.weighted_norm_sq(0.5).unwrap();
        assert!((s.midpoint() - 0.15).abs() < 1e-12);
        let z = TruncatedSeries::<f64>::zero(10).weighted_norm_sq(0.5).unwrap();
        assert_eq!((z.lo(), z.hi()), (0.0, 0.0));
    }

    #[test]
    fn weighted_norm_is_homogeneous() {
        let base = omega(0.6, 80).plus_constant(c(-0.6, 0.0));
        let scaled = base.scale_real(0.7);
        for &r in &[0.2, 0.5, 0.8] {
            let a = base.weighted_norm_sq(r).unwrap().midpoint();
            let b = scaled.weighted_norm_sq(r).unwrap().midpoint();
            assert!((b - 0.49 * a).abs() < 1e-14);
        }
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let f = TruncatedSeries::constant(c(2.5, -1.0), 0);
        let d = f.derivative();
        assert_eq!(d.order(), 0);
        assert_eq!(d.coeff(0).unwrap(), c(0.0, 0.0));
        assert_eq!(d.tail_cap(), 0.0);
    }

    #[test]
    fn antiderivative_round_trip() {
        let f = omega(0.31, 60);
        let g = f.derivative().antiderivative();
        // recovers f - f(0) coefficient-wise
        assert!((g.coeff(0).unwrap()).norm() < 1e-15);
        for n in 1..=59 {
            assert!((g.coeff(n).unwrap() - f.coeff(n).unwrap()).norm() < 1e-14);
        }
    }

    #[test]
    fn compose_with_identity_is_identity() {
        let g = omega(0.44, 30);
        let w = TruncatedSeries::identity(30);
        let h = TruncatedSeries::compose(&g, &w).unwrap();
        for n in 0..=30 {
            assert!((h.coeff(n).unwrap() - g.coeff(n).unwrap()).norm() < 1e-14);
        }
        // and the other way: composing the identity with w returns w
        let id = TruncatedSeries::identity(30);
        let w2 = TruncatedSeries::identity(30)
            .cauchy_product(&omega(0.44, 30).plus_constant(c(-0.44, 0.0)));
        // w2(0) != 0 is false by construction; compose must accept it
        let back = TruncatedSeries::compose(&id, &w2).unwrap();
        for n in 0..=30 {
            assert!((back.coeff(n).unwrap() - w2.coeff(n).unwrap()).norm() < 1e-14);
        }
    }

    #[test]
    fn compose_rejects_nonvanishing_inner() {
        let g = omega(0.3, 10);
        let w = omega(0.3, 10); // w(0) = 0.3
        assert!(matches!(
            TruncatedSeries::compose(&g, &w),
            Err(Error::NonVanishingInnerConstant(_))
        ));
    }

    #[test]
    fn compose_reproduces_squared_blaschke_coefficients() {
        // z²((z-a)/(1-az))² as z² composed with z·ω_{-a}
        let a = 0.8;
        let order = 80;
        let inner = TruncatedSeries::identity(order)
            .cauchy_product(&families::mobius_series(-a, order));
        let square = TruncatedSeries::monomial(2, c(1.0, 0.0), order);
        let f = TruncatedSeries::compose(&square, &inner).unwrap();
        // A_0 = a², A_k = (1-a²) a^{k-2} (k-1-(k+1)a²), stored shifted by z²
        assert!((f.coeff(2).unwrap().re - a * a).abs() < 1e-12);
        for k in 1..=10usize {
            let kk = k as f64;
            let expect = (1.0 - a * a) * a.powi(k as i32 - 2) * (kk - 1.0 - (kk + 1.0) * a * a);
            assert!(
                (f.coeff(2 + k).unwrap().re - expect).abs() < 1e-10,
                "A_{k} mismatch"
            );
        }
    }

    #[test]
    fn polynomial_majorant_is_degenerate() {
        let p = TruncatedSeries::new(vec![c(0.3, 0.1), c(-0.2, 0.0), c(0.0, 0.7)], 0.0);
        let s = p.majorant_sum(0.77, 0).unwrap();
        assert!(s.width() <= 1e-15 * s.hi().max(1.0));
    }

    #[test]
    fn json_wire_format_round_trip() {
        let f = omega(0.52, 12);
        let dto = SeriesJson::from_series(&f);
        let text = serde_json::to_string(&dto).unwrap();
        assert!(text.contains("coeffs_re") && text.contains("tail_cap"));
        let back: SeriesJson = serde_json::from_str(&text).unwrap();
        let g: TruncatedSeries<f64> = back.to_series().unwrap();
        assert_eq!(g.order(), f.order());
        for n in 0..=12 {
            assert!((g.coeff(n).unwrap() - f.coeff(n).unwrap()).norm() < 1e-15);
        }
        assert!((g.tail_cap() - f.tail_cap()).abs() < 1e-15);
    }

    #[test]
    fn enlarging_tail_cap_never_shrinks_bounds() {
        let coeffs: Vec<_> = (0..20).map(|k| c(0.9f64.powi(k), 0.0)).collect();
        let small = TruncatedSeries::new(coeffs.clone(), 0.1);
        let big = TruncatedSeries::new(coeffs, 0.4);
        for &r in &[0.0, 0.3, 0.6, 0.85] {
            assert!(
                big.majorant_sum(r, 0).unwrap().hi() >= small.majorant_sum(r, 0).unwrap().hi()
            );
            assert!(
                big.weighted_norm_sq(r).unwrap().hi() >= small.weighted_norm_sq(r).unwrap().hi()
            );
        }
    }

    #[test]
    fn series_engine_works_in_single_precision() {
        let f: TruncatedSeries<f32> = families::disk_automorphism(0.5f32, 60).unwrap();
        let s = f.majorant_sum(0.25, 1).unwrap();
        let closed = 0.75 * 0.25 / (1.0 - 0.5 * 0.25);
        assert!((s.midpoint() - closed).abs() < 1e-6);
        let p = f.cauchy_product(&TruncatedSeries::identity(60));
        assert!((p.coeff(1).unwrap().re - 0.5).abs() < 1e-7);
    }

    proptest! {
        #[test]
        fn majorant_monotone_in_radius(
            coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..24),
            cap in 0.0f64..1.0,
            r1 in 0.0f64..0.89,
            dr in 0.0f64..0.1,
        ) {
            let f = TruncatedSeries::new(
                coeffs.iter().map(|&(re, im)| c(re, im)).collect(),
                cap,
            );
            let lo = f.majorant_sum(r1, 0).unwrap();
            let hi = f.majorant_sum(r1 + dr, 0).unwrap();
            prop_assert!(lo.hi() <= hi.hi() + 1e-12);
        }

        #[test]
        fn majorant_triangle_inequality(
            pairs in prop::collection::vec(
                ((-1.0f64..1.0, -1.0f64..1.0), (-1.0f64..1.0, -1.0f64..1.0)),
                4..16,
            ),
            capa in 0.0f64..0.5,
            capb in 0.0f64..0.5,
            r in 0.0f64..0.85,
        ) {
            // equal orders: order truncation adds no slack of its own
            let f = TruncatedSeries::new(
                pairs.iter().map(|&((re, im), _)| c(re, im)).collect(),
                capa,
            );
            let g = TruncatedSeries::new(
                pairs.iter().map(|&(_, (re, im))| c(re, im)).collect(),
                capb,
            );
            let sum = f.add(&g);
            let lhs = sum.majorant_sum(r, 0).unwrap().hi();
            let rhs = f.majorant_sum(r, 0).unwrap().hi() + g.majorant_sum(r, 0).unwrap().hi();
            prop_assert!(lhs <= rhs + 1e-10);
        }

        #[test]
        fn json_round_trip_preserves_data(
            coeffs in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..12),
            cap in 0.0f64..2.0,
        ) {
            let f = TruncatedSeries::new(coeffs.iter().map(|&(re, im)| c(re, im)).collect(), cap);
            let g: TruncatedSeries<f64> =
                SeriesJson::from_series(&f).to_series().unwrap();
            prop_assert_eq!(g.order(), f.order());
            for n in 0..=f.order() {
                prop_assert!((g.coeff(n).unwrap() - f.coeff(n).unwrap()).norm() == 0.0);
            }
            prop_assert_eq!(g.tail_cap(), f.tail_cap());
        }
    }
}
