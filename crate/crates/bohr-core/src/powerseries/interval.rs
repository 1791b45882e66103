use crate::scalar::Real;

/// Closed real enclosure `[lo, hi]`.
///
/// Every evaluation that touches a truncated tail returns one of these: the
/// stored head contributes exactly, the unknown tail widens the upper end.
/// Rounding of the head itself is not tracked; the enclosure certifies the
/// truncation error only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Real> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi }
    }

    pub fn point(x: T) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> T {
        (self.lo + self.hi) / crate::scalar::real(2.0)
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn add_scalar(self, x: T) -> Self {
        Interval {
            lo: self.lo + x,
            hi: self.hi + x,
        }
    }

    /// Scale by a nonnegative factor.
    pub fn scale(self, c: T) -> Self {
        assert!(c >= T::zero(), "interval scale factor must be nonnegative");
        Interval {
            lo: self.lo * c,
            hi: self.hi * c,
        }
    }
}

impl<T: Real> std::ops::Add for Interval<T> {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        Interval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }
}
