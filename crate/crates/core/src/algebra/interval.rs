//! Closed intervals with exact rational endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::text::format_rational;
use super::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// `2^-bits` as a rational.
pub fn dyadic_eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn floor_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let n = (x.numer() << bits).div_floor(x.denom());
    BigRational::new(n, BigInt::one() << bits)
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn ceil_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let n = (x.numer() << bits).div_ceil(x.denom());
    BigRational::new(n, BigInt::one() << bits)
}

pub fn rat_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn rat_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// `floor(sqrt(x))` and `ceil(sqrt(x))` at `2^-bits` resolution, for `x >= 0`.
pub fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    assert!(!x.is_negative(), "square root of a negative number");
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits.
    let scaled = (x.numer() * x.denom()) << (2 * bits);
    let s = scaled.sqrt();
    let den = x.denom() << bits;
    let lo = BigRational::new(s.clone(), den.clone());
    let hi = if &s * &s == scaled { lo.clone() } else { BigRational::new(s + 1, den) };
    (lo, hi)
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(rat_int(lo), rat_int(hi))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn mid_f64(&self) -> f64 {
        rat_to_f64(&self.mid())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn overlaps(&self, o: &RationalInterval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn subset_of(&self, o: &RationalInterval) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    pub fn hull(&self, o: &RationalInterval) -> RationalInterval {
        Self::new(self.lo.clone().min(o.lo.clone()), self.hi.clone().max(o.hi.clone()))
    }

    /// Certain ordering of every point of `self` against every point of `o`.
    pub fn cmp_certain(&self, o: &RationalInterval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.is_point() && o.is_point() && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn cmp_rational(&self, x: &BigRational) -> Option<Ordering> {
        self.cmp_certain(&Self::point(x.clone()))
    }

    /// Widen outward to endpoints on the `2^-bits` grid.
    pub fn round_outward(&self, bits: u32) -> RationalInterval {
        Self::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn square(&self) -> RationalInterval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Self::new(BigRational::zero(), a.max(b))
        } else if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn pow(&self, e: u32) -> RationalInterval {
        let mut acc = Self::point(BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Result<RationalInterval> {
        if self.contains_zero() {
            return Err(Error::PoleInInterval);
        }
        Ok(Self::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn scale(&self, c: &BigRational) -> RationalInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn sqrt(&self, bits: u32) -> RationalInterval {
        let (lo, _) = sqrt_bounds(&self.lo, bits);
        let (_, hi) = sqrt_bounds(&self.hi, bits);
        Self::new(lo, hi)
    }

    /// Enclosure of `p` over the interval. Exact endpoint values when `p` is
    /// monotone there, otherwise a mean-value form around the midpoint. Large
    /// denominators are rounded outward to a dyadic grid finer than the width.
    pub fn eval_poly(&self, p: &IntPoly) -> RationalInterval {
        if self.is_point() || p.deg() == 0 {
            return Self::point(p.eval(&self.lo));
        }
        let r = (&self.hi - &self.lo) / BigInt::from(2);
        let k = (r.denom().bits() + 8).saturating_sub(r.numer().bits()).max(8);
        let slope = self.mean_value(&p.derivative(), k);
        if !slope.contains_zero() {
            let (a, b) = (p.eval(&self.lo), p.eval(&self.hi));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            return Self::new(round_dyadic(&lo, k, false), round_dyadic(&hi, k, true));
        }
        self.mean_value(p, k)
    }

    /// `p(m) ± r · Σ j|c_j| u^(j-1)` with `m` the midpoint, `r` the radius, `u ≥ max |x|`.
    fn mean_value(&self, p: &IntPoly, k: u64) -> RationalInterval {
        let m = self.mid();
        let r = &self.hi - &m;
        let center = p.eval(&m);
        let u = ceil_dyadic(&(m.abs() + &r), 16);
        let abs_deriv = IntPoly::new(p.coeffs().iter().enumerate().skip(1).map(|(j, c)| c.abs() * BigInt::from(j)).collect());
        let bound = abs_deriv.eval(&u) * r;
        Self::new(round_dyadic(&(&center - &bound), k, false), round_dyadic(&(center + bound), k, true))
    }
}

/// `x` itself when its denominator is short, else the neighbouring multiple of `2^-k`.
fn round_dyadic(x: &BigRational, k: u64, up: bool) -> BigRational {
    if x.denom().bits() <= 64 {
        return x.clone();
    }
    let scaled = x.numer() << k;
    let q = if up { scaled.div_ceil(x.denom()) } else { scaled.div_floor(x.denom()) };
    BigRational::new(q, BigInt::one() << k)
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, o: &RationalInterval) -> RationalInterval {
        RationalInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, o: &RationalInterval) -> RationalInterval {
        RationalInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, o: &RationalInterval) -> RationalInterval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RationalInterval::new(lo, hi)
    }
}

impl Div for &RationalInterval {
    type Output = Result<RationalInterval>;
    fn div(self, o: &RationalInterval) -> Result<RationalInterval> {
        Ok(self * &o.recip()?)
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval::new(-&self.hi, -&self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_interval() {
        let x = RationalInterval::from_ints(1, 2);
        let p = IntPoly::from_i64(&[0, 0, 1]);
        let y = x.eval_poly(&p);
        assert!(y.lo <= rat_int(1) && y.hi >= rat_int(4));
        assert_eq!(x.square(), RationalInterval::from_ints(1, 4));
    }

    #[test]
    fn reciprocal_of_shifted() {
        let x = RationalInterval::new(rat(31, 10), rat(32, 10));
        let d = &x - &RationalInterval::point(rat_int(3));
        assert_eq!(d.recip().unwrap(), RationalInterval::from_ints(5, 10));
    }

    #[test]
    fn sqrt_two_bounds() {
        let (lo, hi) = sqrt_bounds(&rat_int(2), 30);
        assert!(&lo * &lo <= rat_int(2) && &hi * &hi >= rat_int(2));
        assert!(&hi - &lo <= dyadic_eps(29));
        let (a, b) = sqrt_bounds(&rat(9, 4), 10);
        assert_eq!(a, rat(3, 2));
        assert_eq!(b, rat(3, 2));
    }
}
