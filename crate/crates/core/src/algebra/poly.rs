//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - a` for integer `a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let (n, d) = (x.numer(), x.denom());
        let hom = self.eval_homogeneous(n, d);
        BigRational::new(hom, d.pow(self.deg() as u32))
    }

    /// `d^deg * p(n/d)`, an integer with the sign of `p(n/d)` when `d > 0`.
    pub fn eval_homogeneous(&self, n: &BigInt, d: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of(&self.eval_homogeneous(x.numer(), x.denom()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-remainder by zero polynomial");
        let db = b.deg();
        let lb = b.lead();
        let mut r = self.clone();
        if r.is_zero() || r.deg() < db {
            return r;
        }
        let delta = r.deg() - db;
        let mut steps = 0;
        while !r.is_zero() && r.deg() >= db {
            let k = r.deg() - db;
            let lr = r.lead();
            r = &r.scale(&lb) - &b.scale(&lr).shift_up(k);
            steps += 1;
        }
        for _ in steps..=delta {
            r = r.scale(&lb);
        }
        r
    }

    /// Exact division over the integers, `None` when `b` does not divide `self`.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let db = b.deg();
        if self.deg() < db {
            return None;
        }
        let lb = b.lead();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        while !r.is_zero() && r.deg() >= db {
            let k = r.deg() - db;
            let (qc, rem) = r.lead().div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &b.scale(&qc).shift_up(k);
            q[k] = qc;
        }
        if r.is_zero() {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Square-free part, primitive.
    pub fn squarefree(&self) -> IntPoly {
        if self.deg() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive()
    }

    /// `p(x + a)` for integer `a`.
    pub fn taylor_shift_int(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// Integer polynomial whose coefficients share signs with those of `p(x + a)`.
    ///
    /// With `a = m/q`, coefficient `j` of the result equals `q^(d-j)` times
    /// coefficient `j` of `p(x + a)`.
    pub fn shift_signs(&self, a: &BigRational) -> IntPoly {
        let d = self.deg();
        let q = a.denom();
        let mut scaled = Vec::with_capacity(d + 1);
        let mut pows = Vec::with_capacity(d + 1);
        let mut qp = BigInt::one();
        for _ in 0..=d {
            pows.push(qp.clone());
            qp *= q;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            scaled.push(c * &pows[d - i]);
        }
        IntPoly::new(scaled).taylor_shift_int(a.numer())
    }

    /// Number of sign changes in the coefficient list, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        sign_variations(&self.coeffs)
    }

    /// `t^d p((t^2 + 1)/t)` where `d = deg p`.
    pub fn compose_t(&self) -> IntPoly {
        let d = self.deg();
        let t2p1 = IntPoly::from_i64(&[1, 0, 1]);
        let mut acc = IntPoly::zero();
        let mut pw = IntPoly::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &pw.scale(c).shift_up(d - i);
            pw = &pw * &t2p1;
        }
        acc
    }

    /// `t^deg p(1/t)`, the reversed coefficient list.
    pub fn reverse(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Upper bound on the absolute value of every complex root (Cauchy).
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.lead().abs();
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        BigInt::one() + m.div_ceil(&lead)
    }

    pub fn to_rat(&self) -> super::RatPoly {
        super::RatPoly::new(self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn sign_variations<T: Signed>(cs: &[T]) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for c in cs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(IntPoly, Add, add);
forward_owned!(IntPoly, Sub, sub);
forward_owned!(IntPoly, Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_poly(f, self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let terms = super::text::parse_terms(s)?;
        let mut v: Vec<BigInt> = Vec::new();
        for (coef, k) in terms {
            if !coef.is_integer() {
                return Err(Error::Parse(format!("non-integer coefficient {coef}")));
            }
            if v.len() <= k {
                v.resize(k + 1, BigInt::zero());
            }
            v[k] += coef.to_integer();
        }
        Ok(IntPoly::new(v))
    }
}
