//! Quotients of integer polynomials, kept reduced with a positive leading denominator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::interval::RationalInterval;
use super::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Var {
    Lambda,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Lambda => "lambda",
            Var::T => "t",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
    var: Var,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly, var: Var) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::reduce(num, den, var))
    }

    fn reduce(num: IntPoly, den: IntPoly, var: Var) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: IntPoly::one(), var };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.deg() > 0 {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        let c = n.content().gcd(&d.content());
        let c = if d.lead().is_negative() { -c } else { c };
        if !c.is_one() {
            n = n.div_exact(&IntPoly::constant(c.clone())).expect("content divides");
            d = d.div_exact(&IntPoly::constant(c)).expect("content divides");
        }
        RationalFunction { num: n, den: d, var }
    }

    pub fn poly(p: IntPoly, var: Var) -> Self {
        RationalFunction { num: p, den: IntPoly::one(), var }
    }

    pub fn constant(c: i64, var: Var) -> Self {
        Self::poly(IntPoly::from_i64(&[c]), var)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.var
    }

    fn check_var(&self, o: &Self) {
        assert_eq!(self.var, o.var, "mixing rational functions in different variables");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_var(o);
        Self::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den, self.var)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_var(o);
        Self::reduce(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den, self.var)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_var(o);
        Self::reduce(&self.num * &o.num, &self.den * &o.den, self.var)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.check_var(o);
        Self::new(&self.num * &o.den, &self.den * &o.num, self.var)
    }

    pub fn scale(&self, num: &BigInt, den: &BigInt) -> Self {
        Self::reduce(self.num.scale(num), self.den.scale(den), self.var)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Numerator of the derivative: `N'D - ND'`, over `D^2`.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den, self.var)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleInInterval);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Enclosure of the image of `x`; the denominator must keep one sign on `x`.
    pub fn eval_interval(&self, x: &RationalInterval) -> Result<RationalInterval> {
        let n = x.eval_poly(&self.num);
        let d = x.eval_poly(&self.den);
        if d.contains_zero() {
            return Err(Error::PoleInInterval);
        }
        &n / &d
    }

    /// `g(t) = f(t + 1/t)`, cleared to integer polynomials in `t`.
    pub fn substitute_t(&self) -> Self {
        assert_eq!(self.var, Var::Lambda, "substitute_t expects a function of lambda");
        let dn = self.num.deg();
        let dd = self.den.deg();
        // num(t+1/t) = Ñ(t)/t^dn, den(t+1/t) = D̃(t)/t^dd
        let nt = self.num.compose_t().shift_up(dd);
        let dt = self.den.compose_t().shift_up(dn);
        Self::reduce(nt, dt, Var::T)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl IntPoly {
    pub(crate) fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.lead().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::{rat, rat_int};

    fn lam(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPoly::from_i64(num), IntPoly::from_i64(den), Var::Lambda).unwrap()
    }

    #[test]
    fn substitute_identity() {
        let g = lam(&[0, 1], &[1]).substitute_t();
        assert_eq!(g.num(), &IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(g.den(), &IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn substitute_k4_s() {
        let g = lam(&[1], &[-3, 1]).substitute_t();
        assert_eq!(g.num(), &IntPoly::from_i64(&[0, 1]));
        assert_eq!(g.den(), &IntPoly::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn substitute_agrees_at_two() {
        let f = lam(&[7, -2, 0, 1], &[1, 4, 1]);
        let g = f.substitute_t();
        assert_eq!(g.eval(&rat_int(2)).unwrap(), f.eval(&rat(5, 2)).unwrap());
    }

    #[test]
    fn interval_reciprocal() {
        let f = lam(&[1], &[-3, 1]);
        let v = f.eval_interval(&RationalInterval::new(rat(31, 10), rat(32, 10))).unwrap();
        assert_eq!(v, RationalInterval::from_ints(5, 10));
        assert!(f.eval_interval(&RationalInterval::from_ints(2, 4)).is_err());
    }

    #[test]
    fn reduces_common_factor() {
        let f = lam(&[-1, 0, 1], &[2, 2]);
        assert_eq!(f.num(), &IntPoly::from_i64(&[-1, 1]));
        assert_eq!(f.den(), &IntPoly::from_i64(&[2]));
    }
}
