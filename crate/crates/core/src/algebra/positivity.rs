//! Certified sign verdicts for polynomials on rays and rational functions on intervals.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::interval::{rat_int, RationalInterval};
use super::ratfunc::RationalFunction;
use super::roots::AlgebraicReal;
use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Outcome of a nonnegativity check on `[a, +inf)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness")]
pub enum RayVerdict {
    ProvedByCoefficients,
    ProvedBySturm,
    DisprovedWithWitness(#[serde(serialize_with = "crate::report::ser_rational")] BigRational),
}

impl RayVerdict {
    pub fn is_proved(&self) -> bool {
        !matches!(self, RayVerdict::DisprovedWithWitness(_))
    }
}

/// Nonnegativity of `p` on `[a, +inf)`: coefficients of `p(x + a)` first, Sturm second.
pub fn nonneg_on_ray(p: &RatPoly, a: &BigRational) -> RayVerdict {
    let (q, _) = p.clear_denominators();
    nonneg_on_ray_int(&q, a)
}

pub fn nonneg_on_ray_int(q: &IntPoly, a: &BigRational) -> RayVerdict {
    if q.shift_signs(a).coeffs().iter().all(|c| !c.is_negative()) {
        return RayVerdict::ProvedByCoefficients;
    }
    match first_negative_sample(q, &AlgebraicReal::rational(a.clone())) {
        Some(w) => RayVerdict::DisprovedWithWitness(w),
        None => RayVerdict::ProvedBySturm,
    }
}

/// Nonnegativity of `q` on `[x0, +inf)` for an algebraic `x0`.
///
/// The coefficient test uses the rational lower end of the isolating interval,
/// which only makes it more conservative. Witnesses are rationals above `x0`.
pub fn nonneg_above(q: &IntPoly, x0: &AlgebraicReal) -> RayVerdict {
    if q.shift_signs(x0.lo()).coeffs().iter().all(|c| !c.is_negative()) {
        return RayVerdict::ProvedByCoefficients;
    }
    match first_negative_sample(q, x0) {
        Some(w) => RayVerdict::DisprovedWithWitness(w),
        None => RayVerdict::ProvedBySturm,
    }
}

/// A rational `w >= x0` with `q(w) < 0`, or `None` if `q >= 0` on `[x0, +inf)`.
fn first_negative_sample(q: &IntPoly, x0: &AlgebraicReal) -> Option<BigRational> {
    if q.is_zero() {
        return None;
    }
    if let Some(r) = x0.as_rational() {
        if q.sign_at(r) < 0 {
            return Some(r.clone());
        }
    }
    let bound = BigRational::from(q.cauchy_bound());
    if x0.cmp_rational(&bound) != Ordering::Less {
        // No roots beyond the Cauchy bound: the sign is that of the leading coefficient.
        return q.lead().is_negative().then(|| x0.hi().clone());
    }
    let mut roots: Vec<AlgebraicReal> = AlgebraicReal::roots_in(q, x0.lo(), &bound)
        .into_iter()
        .filter(|r| r.cmp_exact(x0) == Ordering::Greater)
        .collect();
    roots.sort_by(|a, b| a.cmp_exact(b));
    // Gap samples: (x0, r1), (r1, r2), ..., (rk, inf).
    let mut left = x0.clone();
    for r in roots.iter().chain(std::iter::once(&AlgebraicReal::rational(bound.clone() + rat_int(1)))) {
        let s = point_between(&left, r);
        if q.sign_at(&s) < 0 {
            return Some(s);
        }
        left = r.clone();
    }
    let tail = bound + rat_int(2);
    if q.sign_at(&tail) < 0 {
        return Some(tail);
    }
    None
}

/// A rational strictly between `a < b`.
pub fn point_between(a: &AlgebraicReal, b: &AlgebraicReal) -> BigRational {
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if a.hi() < b.lo() {
            return (a.hi() + b.lo()) / rat_int(2);
        }
        if a.hi() == b.lo() {
            let c = a.hi().clone();
            if a.cmp_rational(&c) == Ordering::Less && b.cmp_rational(&c) == Ordering::Greater {
                return c;
            }
        }
        a.bisect();
        b.bisect();
    }
}

/// Certified sign of a rational function on an interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness")]
pub enum SignVerdict {
    Positive,
    Negative,
    /// A point inside the interval where the numerator vanishes.
    Indeterminate(#[serde(serialize_with = "crate::report::ser_rational")] BigRational),
}

impl SignVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, SignVerdict::Positive)
    }
}

/// Sign of `f` on the closed interval `[lo, hi]`.
pub fn sign_on_interval(f: &RationalFunction, interval: &RationalInterval) -> Result<SignVerdict> {
    let a = AlgebraicReal::rational(interval.lo.clone());
    let b = AlgebraicReal::rational(interval.hi.clone());
    sign_between(f, &a, &b, true)
}

/// Sign of `f` on the open interval `(lo, hi)` with algebraic endpoints.
pub fn sign_on_open(f: &RationalFunction, lo: &AlgebraicReal, hi: &AlgebraicReal) -> Result<SignVerdict> {
    sign_between(f, lo, hi, false)
}

fn sign_between(f: &RationalFunction, lo: &AlgebraicReal, hi: &AlgebraicReal, closed: bool) -> Result<SignVerdict> {
    if lo.cmp_exact(hi) == Ordering::Greater {
        return Err(Error::InvalidArgument("interval endpoints out of order".into()));
    }
    let inside = |r: &AlgebraicReal| -> bool {
        let a = r.cmp_exact(lo);
        let b = r.cmp_exact(hi);
        if closed {
            a != Ordering::Less && b != Ordering::Greater
        } else {
            a == Ordering::Greater && b == Ordering::Less
        }
    };
    let hull_lo = lo.lo().clone() - rat_int(1);
    let hull_hi = hi.hi().clone();
    if f.den().deg() > 0 && AlgebraicReal::roots_in(f.den(), &hull_lo, &hull_hi).iter().any(inside) {
        return Err(Error::PoleInInterval);
    }
    if f.num().is_zero() {
        return Ok(SignVerdict::Indeterminate(lo.lo().clone()));
    }
    if f.num().deg() > 0 {
        if let Some(r) = AlgebraicReal::roots_in(f.num(), &hull_lo, &hull_hi).into_iter().find(|r| inside(r)) {
            let w = r.clone().refined(&(rat_int(1) / rat_int(1 << 20))).enclosure().mid();
            return Ok(SignVerdict::Indeterminate(w));
        }
    }
    if lo.cmp_exact(hi) == Ordering::Equal {
        if !closed {
            // Empty open interval: vacuous.
            return Ok(SignVerdict::Positive);
        }
        let s = sign_at_algebraic(f, lo);
        return Ok(if s > 0 { SignVerdict::Positive } else { SignVerdict::Negative });
    }
    let s = point_between(lo, hi);
    let v = f.eval(&s)?;
    Ok(if v.is_positive() {
        SignVerdict::Positive
    } else if v.is_zero() {
        SignVerdict::Indeterminate(s)
    } else {
        SignVerdict::Negative
    })
}

fn sign_at_algebraic(f: &RationalFunction, x: &AlgebraicReal) -> i8 {
    x.sign_of(f.num()) * x.sign_of(f.den())
}

/// Number of distinct roots of `p` in `(lo, hi)` for algebraic endpoints.
pub fn roots_strictly_between(p: &IntPoly, lo: &AlgebraicReal, hi: &AlgebraicReal) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    AlgebraicReal::roots_in(p, &(lo.lo().clone() - rat_int(1)), hi.hi())
        .iter()
        .filter(|r| r.cmp_exact(lo) == Ordering::Greater && r.cmp_exact(hi) == Ordering::Less)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::rat;
    use crate::algebra::ratfunc::Var;
    use crate::algebra::roots::sqrt_rational;

    #[test]
    fn square_is_nonneg_by_coefficients() {
        assert_eq!(
            nonneg_on_ray(&RatPoly::from_i64(&[0, 0, 1]), &rat_int(0)),
            RayVerdict::ProvedByCoefficients
        );
    }

    #[test]
    fn sturm_fallback_proves() {
        // (x-2)^2 + 1/10 on [0, inf): shifted coefficients have mixed signs
        let p: RatPoly = "41/10 - 4*x + x^2".parse().unwrap();
        assert_eq!(nonneg_on_ray(&p, &rat_int(0)), RayVerdict::ProvedBySturm);
    }

    #[test]
    fn witness_is_negative() {
        let p = RatPoly::from_i64(&[6, -5, 1]); // (x-2)(x-3)
        match nonneg_on_ray(&p, &rat_int(0)) {
            RayVerdict::DisprovedWithWitness(w) => assert!(p.eval(&w).is_negative()),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn sign_of_simple_functions() {
        let f = RationalFunction::new(IntPoly::from_i64(&[1]), IntPoly::from_i64(&[-3, 1]), Var::Lambda).unwrap();
        assert_eq!(
            sign_on_interval(&f, &RationalInterval::new(rat(311, 100), rat(318, 100))).unwrap(),
            SignVerdict::Positive
        );
        let g = RationalFunction::poly(IntPoly::from_i64(&[-3, 1]), Var::Lambda);
        match sign_on_interval(&g, &RationalInterval::from_ints(2, 4)).unwrap() {
            SignVerdict::Indeterminate(w) => assert_eq!(w, rat_int(3)),
            v => panic!("unexpected {v:?}"),
        }
        assert!(sign_on_interval(&f, &RationalInterval::from_ints(2, 4)).is_err());
    }

    #[test]
    fn open_interval_excludes_algebraic_endpoint_root() {
        // 3 - t^2 is zero exactly at sqrt(3) and positive on (1, sqrt(3)).
        let f = RationalFunction::poly(IntPoly::from_i64(&[3, 0, -1]), Var::T);
        let one = AlgebraicReal::rational(rat_int(1));
        let s3 = sqrt_rational(&rat_int(3));
        assert_eq!(sign_on_open(&f, &one, &s3).unwrap(), SignVerdict::Positive);
    }
}
