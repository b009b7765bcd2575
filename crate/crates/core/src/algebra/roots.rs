//! Real algebraic numbers as (square-free polynomial, isolating interval) pairs.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{dyadic_eps, rat_int, RationalInterval};
use super::sturm::SturmSequence;
use super::IntPoly;
use crate::error::{Error, Result};

/// Default isolation width, `2^-40`.
pub const DEFAULT_EPS_BITS: u32 = 40;

/// A real root of `poly`, isolated in the open interval `(lo, hi)`.
///
/// Either `lo == hi` and the root is that rational, or `poly` is nonzero at
/// both endpoints with opposite signs and has exactly one root in between.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicReal {
    pub fn rational(r: BigRational) -> Self {
        let poly = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicReal { poly, lo: r.clone(), hi: r }
    }

    /// From a polynomial with exactly one root in `(lo, hi]`.
    pub fn from_isolating(p: &IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        let poly = p.squarefree();
        let seq = SturmSequence::new(&poly);
        if seq.count(&lo, &hi) != 1 {
            return Err(Error::Precondition(format!(
                "interval ({lo}, {hi}] does not isolate a single root"
            )));
        }
        Ok(Self::normalize(poly, &seq, lo, hi))
    }

    fn normalize(poly: IntPoly, seq: &SturmSequence, lo: BigRational, hi: BigRational) -> Self {
        let a = Self::normalize_endpoints(poly, seq, lo, hi);
        a.detect_rational()
    }

    /// Snap to an exact rational root when one with a small denominator is isolated here.
    fn detect_rational(mut self) -> Self {
        if self.is_rational() {
            return self;
        }
        let lead = self.poly.lead().abs();
        if lead.bits() > 24 {
            return self;
        }
        let limit = BigRational::new(BigInt::one(), &lead * &lead * 2);
        while &self.hi - &self.lo > limit {
            self.bisect();
            if self.is_rational() {
                return self;
            }
        }
        let r = simplest_rational(&self.lo, &self.hi);
        if r.denom() <= &lead && self.poly.sign_at(&r) == 0 {
            self.lo = r.clone();
            self.hi = r;
        }
        self
    }

    fn normalize_endpoints(poly: IntPoly, seq: &SturmSequence, mut lo: BigRational, mut hi: BigRational) -> Self {
        if poly.sign_at(&hi) == 0 {
            return AlgebraicReal { poly, lo: hi.clone(), hi };
        }
        while poly.sign_at(&lo) == 0 {
            let m = (&lo + &hi) / rat_int(2);
            if poly.sign_at(&m) == 0 {
                return AlgebraicReal { poly, lo: m.clone(), hi: m };
            }
            if seq.count(&m, &hi) == 1 {
                lo = m;
            } else {
                hi = m;
            }
        }
        AlgebraicReal { poly, lo, hi }
    }

    /// Largest real root of `p`.
    pub fn largest_root(p: &IntPoly) -> Result<Self> {
        let poly = p.squarefree();
        if poly.deg() == 0 {
            return Err(Error::NoRealRoots);
        }
        let seq = SturmSequence::new(&poly);
        let b = BigRational::from(poly.cauchy_bound());
        let mut lo = -b.clone();
        let mut hi = b;
        if seq.count(&lo, &hi) == 0 {
            return Err(Error::NoRealRoots);
        }
        if let Some(r) = float_hint(&poly, &seq, &hi) {
            return Ok(Self::normalize(poly, &seq, r.0, r.1));
        }
        while seq.count(&lo, &hi) > 1 {
            let m = (&lo + &hi) / rat_int(2);
            if seq.count(&m, &hi) >= 1 {
                lo = m;
            } else {
                hi = m;
            }
        }
        Ok(Self::normalize(poly, &seq, lo, hi))
    }

    /// All distinct real roots of `p` in `(lo, hi]`, ascending.
    pub fn roots_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Vec<Self> {
        let poly = p.squarefree();
        if poly.deg() == 0 {
            return Vec::new();
        }
        let seq = SturmSequence::new(&poly);
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            match seq.count(&a, &b) {
                0 => {}
                1 => out.push(Self::normalize(poly.clone(), &seq, a, b)),
                _ => {
                    let m = (&a + &b) / rat_int(2);
                    stack.push((m.clone(), b));
                    stack.push((a, m));
                }
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// All distinct real roots of `p`, ascending.
    pub fn real_roots(p: &IntPoly) -> Vec<Self> {
        if p.deg() == 0 {
            return Vec::new();
        }
        let b = BigRational::from(p.cauchy_bound());
        Self::roots_in(p, &-b.clone(), &b)
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.lo)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn enclosure(&self) -> RationalInterval {
        RationalInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn to_f64(&self) -> f64 {
        super::interval::rat_to_f64(&((&self.lo + &self.hi) / rat_int(2)))
    }

    /// Halve the isolating interval once.
    pub fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let m = (&self.lo + &self.hi) / rat_int(2);
        let sm = self.poly.sign_at(&m);
        if sm == 0 {
            self.lo = m.clone();
            self.hi = m;
        } else if sm == self.poly.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    /// Refine until the width is at most `eps`.
    pub fn refine(&mut self, eps: &BigRational) {
        if self.is_rational() || &self.hi - &self.lo <= *eps {
            return;
        }
        let s_lo = self.poly.sign_at(&self.lo);
        while &self.hi - &self.lo > *eps {
            let m = (&self.lo + &self.hi) / rat_int(2);
            let sm = self.poly.sign_at(&m);
            if sm == 0 {
                self.lo = m.clone();
                self.hi = m;
                return;
            }
            if sm == s_lo {
                self.lo = m;
            } else {
                self.hi = m;
            }
        }
    }

    pub fn refine_bits(&mut self, bits: u32) {
        self.refine(&dyadic_eps(bits));
    }

    pub fn refined(mut self, eps: &BigRational) -> Self {
        self.refine(eps);
        self
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if self.is_rational() {
            return self.lo.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s == 0 {
            Ordering::Equal
        } else if s == self.poly.sign_at(&self.lo) {
            // root lies to the right of r
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let g = self.poly.gcd(&other.poly);
        let gseq = (g.deg() > 0).then(|| SturmSequence::new(&g));
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if let Some(r) = b.as_rational() {
                return a.cmp_rational(r);
            }
            if let Some(r) = a.as_rational() {
                return b.cmp_rational(r).reverse();
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(seq) = &gseq {
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                let at_hi = usize::from(g.sign_at(&hi) == 0);
                if seq.count(&lo, &hi) > at_hi {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
        }
    }

    /// Exact sign of `q` at this number.
    pub fn sign_of(&self, q: &IntPoly) -> i8 {
        if let Some(r) = self.as_rational() {
            return q.sign_at(r);
        }
        let mut a = self.clone();
        for _ in 0..3 {
            let v = a.enclosure().eval_poly(q);
            if v.is_positive() {
                return 1;
            }
            if v.is_negative() {
                return -1;
            }
            let w = (&a.hi - &a.lo) / rat_int(1 << 20);
            a.refine(&w);
            if a.is_rational() {
                return q.sign_at(&a.lo);
            }
        }
        let g = self.poly.gcd(q);
        if g.deg() > 0 && SturmSequence::new(&g).count(&a.lo, &a.hi) > 0 {
            return 0;
        }
        loop {
            let v = a.enclosure().eval_poly(q);
            if v.is_positive() {
                return 1;
            }
            if v.is_negative() {
                return -1;
            }
            a.bisect();
            if a.is_rational() {
                return q.sign_at(&a.lo);
            }
        }
    }

    /// Interval image of `q` at this number, refined until its width is at most `eps`.
    pub fn eval_poly(&self, q: &IntPoly, eps: &BigRational) -> RationalInterval {
        let mut a = self.clone();
        loop {
            let v = a.enclosure().eval_poly(q);
            if v.width() <= *eps || a.is_rational() {
                return v;
            }
            a.bisect();
        }
    }
}

impl AlgebraicReal {
    /// Enclosure of `num(x)/den(x)` at this number with width at most `eps`.
    /// Fails if `den` vanishes here.
    pub fn eval_ratio(&self, num: &IntPoly, den: &IntPoly, eps: &BigRational) -> Result<RationalInterval> {
        let mut a = self.clone();
        let mut w = eps / rat_int(256);
        for round in 0.. {
            a.refine(&w);
            let x = a.enclosure();
            let d = x.eval_poly(den);
            if !d.contains_zero() {
                let q = &x.eval_poly(num) * &d.recip()?;
                if q.width() <= *eps || a.is_rational() {
                    return Ok(q);
                }
            } else if round == 2 && self.sign_of(den) == 0 {
                return Err(Error::PoleInInterval);
            }
            w /= rat_int(1 << 16);
        }
        unreachable!()
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in {}", self.poly, self.enclosure())
    }
}

/// Rational with the smallest denominator in `[a, b]`.
pub fn simplest_rational(a: &BigRational, b: &BigRational) -> BigRational {
    let c = a.ceil();
    if &c <= b {
        return c;
    }
    let n = a.floor();
    let inner = simplest_rational(&(b - &n).recip(), &(a - &n).recip());
    n + inner.recip()
}

/// Try to certify a float estimate of the largest root before falling back to bisection.
fn float_hint(poly: &IntPoly, seq: &SturmSequence, bound: &BigRational) -> Option<(BigRational, BigRational)> {
    let h = largest_root_f64(poly, super::interval::rat_to_f64(bound))?;
    let delta = 1e-9 * h.abs().max(1.0);
    let lo = super::interval::floor_dyadic(&super::interval::rat_from_f64(h - delta), 48);
    let hi = super::interval::ceil_dyadic(&super::interval::rat_from_f64(h + delta), 48);
    if seq.count_above(&hi) == 0 && seq.count(&lo, &hi) == 1 {
        Some((lo, hi))
    } else {
        None
    }
}

/// Newton iteration from above the Cauchy bound; converges monotonically for real-rooted
/// polynomials and often otherwise. The answer is only a hint.
pub fn largest_root_f64(p: &IntPoly, start: f64) -> Option<f64> {
    let dp = p.derivative();
    let mut x = start;
    let sign = if p.lead().is_positive() { 1.0 } else { -1.0 };
    for _ in 0..2000 {
        let fx = sign * p.eval_f64(x);
        let dfx = sign * dp.eval_f64(x);
        if !fx.is_finite() || !dfx.is_finite() || dfx == 0.0 {
            return None;
        }
        let nx = x - fx / dfx;
        if (nx - x).abs() <= 1e-15 * x.abs().max(1.0) {
            return Some(nx);
        }
        x = nx;
    }
    Some(x)
}

/// Enclosure of the largest real root with width at most `eps`, isolating it from all others.
pub fn isolate_largest_root(p: &IntPoly, eps: &BigRational) -> Result<RationalInterval> {
    let mut a = AlgebraicReal::largest_root(p)?;
    a.refine(eps);
    if let Some(r) = a.as_rational() {
        // Return a nondegenerate interval (lo, r] holding only this root.
        let seq = SturmSequence::new(&a.poly);
        let mut d = eps.clone();
        while seq.count(&(r - &d), r) != 1 {
            d /= rat_int(2);
        }
        return Ok(RationalInterval::new(r - d, r.clone()));
    }
    Ok(a.enclosure())
}

/// Roots of `x^2 - b x + 1` style quadratics: larger root of `a2 x^2 + a1 x + a0`.
pub fn larger_quadratic_root(a2: &BigInt, a1: &BigInt, a0: &BigInt) -> Result<AlgebraicReal> {
    AlgebraicReal::largest_root(&IntPoly::new(vec![a0.clone(), a1.clone(), a2.clone()]))
}

/// `sqrt(r)` for a nonnegative rational as an algebraic number.
pub fn sqrt_rational(r: &BigRational) -> AlgebraicReal {
    if r.is_zero() {
        return AlgebraicReal::rational(BigRational::zero());
    }
    let p = IntPoly::new(vec![-r.numer().clone(), BigInt::zero(), r.denom().clone()]);
    AlgebraicReal::largest_root(&p).expect("positive rational has a square root")
}

impl AlgebraicReal {
    /// Convenience: largest root refined to `2^-bits`.
    pub fn largest_root_bits(p: &IntPoly, bits: u32) -> Result<Self> {
        let mut a = Self::largest_root(p)?;
        a.refine_bits(bits);
        Ok(a)
    }

    /// Whether this number is strictly greater than one.
    pub fn gt_one(&self) -> bool {
        self.cmp_rational(&BigRational::one()) == Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::rat;

    #[test]
    fn sqrt_two() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let iv = isolate_largest_root(&p, &dyadic_eps(30)).unwrap();
        assert!(iv.contains(&rat(141421356, 100000000)) || iv.lo > rat(1414213, 1000000));
        assert!(iv.width() <= dyadic_eps(30));
        assert!((iv.mid_f64() - 2f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn rational_root_detected() {
        let p = &IntPoly::from_i64(&[-3, 1]) * &IntPoly::from_i64(&[1, 1]);
        let a = AlgebraicReal::largest_root(&p).unwrap();
        assert_eq!(a.as_rational(), Some(&rat_int(3)));
    }

    #[test]
    fn no_real_roots() {
        assert!(matches!(
            AlgebraicReal::largest_root(&IntPoly::from_i64(&[1, 0, 1])),
            Err(Error::NoRealRoots)
        ));
    }

    #[test]
    fn compare_equal_roots_from_different_polys() {
        let a = AlgebraicReal::largest_root(&IntPoly::from_i64(&[-3, 0, 1])).unwrap();
        let b = AlgebraicReal::largest_root(&(&IntPoly::from_i64(&[-3, 0, 1]) * &IntPoly::from_i64(&[-1, 1]))).unwrap();
        assert_eq!(a.cmp_exact(&b), Ordering::Equal);
        let c = sqrt_rational(&rat_int(2));
        assert_eq!(c.cmp_exact(&a), Ordering::Less);
    }

    #[test]
    fn sign_at_root_is_zero() {
        let a = sqrt_rational(&rat_int(3));
        assert_eq!(a.sign_of(&IntPoly::from_i64(&[-3, 0, 1])), 0);
        assert_eq!(a.sign_of(&IntPoly::from_i64(&[-2, 1])), -1);
        assert_eq!(a.cmp_rational(&rat(17, 10)), Ordering::Greater);
    }

    #[test]
    fn roots_in_window() {
        let p = &IntPoly::from_i64(&[-2, 0, 1]) * &IntPoly::from_i64(&[-1, 1]);
        let rs: Vec<_> = AlgebraicReal::real_roots(&p).into_iter().map(|r| r.refined(&dyadic_eps(20))).collect();
        assert_eq!(rs.len(), 3);
        assert_eq!(rs[1].as_rational(), Some(&rat_int(1)));
        assert!(rs[0].to_f64() < -1.4 && rs[2].to_f64() > 1.4);
    }
}
