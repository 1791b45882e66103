//! Closed-form radius functions and certified root-finders for the radius
//! equations.
//!
//! Every root is found by bisection on a factor that is provably monotone,
//! with a fixed iteration count (`2^{-60}` bracket width, below 1e-12), and
//! the bracket endpoints are checked to straddle zero before iterating.
//! Endpoint values at `x = 1` come from the stated limits, never from a
//! `0/0` formula evaluation.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Real};

const BISECT_ITERS: usize = 60;

/// Scalar parameters entering the radius formulas: head exponent `p > 0`,
/// dilatation bound `k` in `[0, 1]`, symmetry power `m >= 1` of the
/// composed head `h(z^m)`, and head modulus `a = |h(0)|` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusParams<T> {
    pub p: T,
    pub k: T,
    pub m: u32,
    pub a: T,
}

impl<T: Real> RadiusParams<T> {
    pub fn new(p: T, k: T, m: u32, a: T) -> Result<Self> {
        if !(p > T::zero() && p.is_finite()) {
            return Err(Error::ParamOutOfRange { name: "p", value: as_f64(p) });
        }
        if !(k >= T::zero() && k <= T::one()) {
            return Err(Error::ParamOutOfRange { name: "k", value: as_f64(k) });
        }
        if m < 1 {
            return Err(Error::ParamOutOfRange { name: "m", value: m as f64 });
        }
        if !(a >= T::zero() && a <= T::one()) {
            return Err(Error::ParamOutOfRange { name: "a", value: as_f64(a) });
        }
        Ok(RadiusParams { p, k, m, a })
    }

    fn require_p_le_2(&self) -> Result<()> {
        if self.p <= real(2.0) {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange { name: "p", value: as_f64(self.p) })
        }
    }

    fn require_a_lt_1(&self) -> Result<()> {
        if self.a < T::one() {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange { name: "a", value: as_f64(self.a) })
        }
    }
}

/// Bisection for `f` with `f(lo) <= 0 <= f(hi)`.
pub(crate) fn bisect<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T) -> Result<T> {
    if !(f(lo) <= T::zero() && f(hi) >= T::zero()) {
        return Err(Error::BadBracket { lo: as_f64(lo), hi: as_f64(hi) });
    }
    let two = real::<T>(2.0);
    for _ in 0..BISECT_ITERS {
        let mid = (lo + hi) / two;
        if f(mid) <= T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / two)
}

fn check_unit<T: Real>(name: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange { name, value: as_f64(x) })
    }
}

fn check_positive<T: Real>(name: &'static str, x: T) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange { name, value: as_f64(x) })
    }
}

/// `t_p(x) = (1 - x²)/(1 - x^p)` on `[0, 1]`, with the continuity value
/// `2/p` at `x = 1`.
pub fn t_p<T: Real>(p: T, x: T) -> Result<T> {
    check_positive("p", p)?;
    check_unit("x", x)?;
    if x == T::one() {
        return Ok(real::<T>(2.0) / p);
    }
    Ok((T::one() - x * x) / (T::one() - x.powf(p)))
}

/// Unique root of `1 - x - x^p` in `(0, 1)`.
pub fn c_p<T: Real>(p: T) -> Result<T> {
    check_positive("p", p)?;
    // x + x^p - 1 is strictly increasing with a sign change on [0, 1]
    bisect(|x: T| x + x.powf(p) - T::one(), T::zero(), T::one())
}

/// The powered-head Bohr radius as a function of the head modulus:
/// piecewise in `x` with the branch point at `C(p)` and the limit
/// `p/(2 + p)` at `x = 1`.
pub fn r_p<T: Real>(p: T, x: T) -> Result<T> {
    check_positive("p", p)?;
    check_unit("x", x)?;
    if x == T::one() {
        return Ok(p / (real::<T>(2.0) + p));
    }
    let xp = T::one() - x.powf(p);
    if x < c_p(p)? {
        Ok(xp / (T::one() - x * x + xp * xp).sqrt())
    } else {
        Ok(xp / (T::one() - x * x + x * xp))
    }
}

/// Closed form of the `p = 1` radius: `sqrt((1 - x)/2)` below `1/2`,
/// `1/(1 + 2x)` from `1/2` on. The second branch extends monotonically past
/// `x = 1`, which the harmonic checks use for coefficient ratios produced
/// by inputs outside the bounded-dilatation class.
pub fn r_1<T: Real>(x: T) -> T {
    debug_assert!(x >= T::zero());
    let half = real::<T>(0.5);
    if x < half {
        ((T::one() - x) * half).sqrt()
    } else {
        T::one() / (T::one() + real::<T>(2.0) * x)
    }
}

/// `α_+ = 1/(2a + sqrt(2a² - 1))`; needs `a >= 1/√2`.
pub fn alpha_plus<T: Real>(a: T) -> Result<T> {
    alpha_pair(a).map(|(plus, _)| plus)
}

/// `α_- = 1/(2a - sqrt(2a² - 1))`; needs `a >= 1/√2`.
pub fn alpha_minus<T: Real>(a: T) -> Result<T> {
    alpha_pair(a).map(|(_, minus)| minus)
}

fn alpha_pair<T: Real>(a: T) -> Result<(T, T)> {
    check_unit("a", a)?;
    let disc = real::<T>(2.0) * a * a - T::one();
    if disc < -crate::powerseries::coeff_zero_tol::<T>() {
        return Err(Error::ParamOutOfRange { name: "a", value: as_f64(a) });
    }
    let root = disc.max(T::zero()).sqrt();
    let two_a = real::<T>(2.0) * a;
    Ok((T::one() / (two_a + root), T::one() / (two_a - root)))
}

/// Radius-equation polynomial for the composed-head quantity, per head
/// modulus `a`:
/// `{[(1+k)(1-a²)+1] r - 1}(1 + a r^m)^p + (1 - r)(r^m + a)^p`.
pub fn radius_equation_per_a<T: Real>(params: &RadiusParams<T>, r: T) -> T {
    let RadiusParams { p, k, m, a } = *params;
    let rm = r.powi(m as i32);
    let lead = ((T::one() + k) * (T::one() - a * a) + T::one()) * r - T::one();
    lead * (T::one() + a * rm).powf(p) + (T::one() - r) * (rm + a).powf(p)
}

/// Strictly increasing factor of the same equation:
/// `((r^m + a)/(1 + a r^m))^p + (1+k)(1-a²) r/(1-r) - 1`.
pub fn radius_factor_per_a<T: Real>(params: &RadiusParams<T>, r: T) -> T {
    let RadiusParams { p, k, m, a } = *params;
    let rm = r.powi(m as i32);
    ((rm + a) / (T::one() + a * rm)).powf(p)
        + (T::one() + k) * (T::one() - a * a) * r / (T::one() - r)
        - T::one()
}

/// `a`-free radius-equation polynomial:
/// `2(1+k) r (1 + r^m) - p (1 - r)(1 - r^m)`.
pub fn radius_equation_uniform<T: Real>(params: &RadiusParams<T>, r: T) -> T {
    let RadiusParams { p, k, m, .. } = *params;
    let rm = r.powi(m as i32);
    real::<T>(2.0) * (T::one() + k) * r * (T::one() + rm) - p * (T::one() - r) * (T::one() - rm)
}

/// Root in `(0, 1)` of the per-`a` radius equation, found on its strictly
/// increasing factor. Sharpness holds for `p` in `(0, 2]`; larger `p` is
/// evaluated as a formula without a sharpness claim.
pub fn radius_per_a<T: Real>(params: &RadiusParams<T>) -> Result<T> {
    params.require_a_lt_1()?;
    let hi = T::one() - real::<T>(1e-12);
    bisect(|r| radius_factor_per_a(params, r), T::zero(), hi)
}

/// Root in `(0, 1)` of the `a`-free radius equation; `p` in `(0, 2]`.
pub fn radius_uniform<T: Real>(params: &RadiusParams<T>) -> Result<T> {
    params.require_p_le_2()?;
    bisect(|r| radius_equation_uniform(params, r), T::zero(), T::one())
}

/// Closed-form per-`a` radius of the head-only quantity:
/// `(1 - a^p) / (1 - a^p + (1+k)(1 - a²))`.
pub fn radius_closed_per_a<T: Real>(params: &RadiusParams<T>) -> Result<T> {
    params.require_a_lt_1()?;
    let RadiusParams { p, k, a, .. } = *params;
    let num = T::one() - a.powf(p);
    Ok(num / (num + (T::one() + k) * (T::one() - a * a)))
}

/// Uniform-in-`a` radius of the head-only quantity: `p / (2(1+k) + p)`,
/// the infimum of the closed per-`a` form for `p <= 2`.
pub fn radius_uniform_closed<T: Real>(p: T, k: T) -> Result<T> {
    check_positive("p", p)?;
    check_unit("k", k)?;
    Ok(p / (real::<T>(2.0) * (T::one() + k) + p))
}

/// `1/((1+k)(1+a) + 1)`, an upper bound for the per-`a` root at `p = 1`.
pub fn radius_upper_bound<T: Real>(a: T, k: T) -> T {
    T::one() / ((T::one() + k) * (T::one() + a) + T::one())
}
