//! Target ratios: exact fractions or algebraic constants given by root data.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::interval::{dyadic_eps, rat_to_f64};
use crate::algebra::text::{format_rational, parse_rational};
use crate::algebra::{AlgebraicReal, IntPoly};
use crate::error::{Error, Result};

/// A threshold `β`. Named constants are never replaced by decimals.
#[derive(Clone, Debug)]
pub enum Beta {
    Rational(BigRational),
    Algebraic { name: &'static str, value: AlgebraicReal },
}

impl Beta {
    pub fn rational(r: BigRational) -> Self {
        Beta::Rational(r)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Beta::Rational(BigRational::new(n.into(), d.into()))
    }

    /// `(5 + 3√3)/2`, the larger root of `2x² − 10x − 1`.
    pub fn beta_star() -> Self {
        let value = AlgebraicReal::largest_root(&IntPoly::from_i64(&[-1, -10, 2])).expect("real roots");
        Beta::Algebraic { name: "beta-star", value }
    }

    /// `4 + 2√3`, the larger root of `x² − 8x + 4`.
    pub fn beta_tr() -> Self {
        let value = AlgebraicReal::largest_root(&IntPoly::from_i64(&[4, -8, 1])).expect("real roots");
        Beta::Algebraic { name: "beta-tr", value }
    }

    /// Accepts `beta-star`, `beta-tr`, fractions `a/b`, integers, and decimals.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "beta-star" | "beta_star" => Ok(Self::beta_star()),
            "beta-tr" | "beta_tr" => Ok(Self::beta_tr()),
            s => {
                let r = parse_rational(s)?;
                if !r.is_positive() {
                    return Err(Error::InvalidArgument(format!("beta must be positive, got {s}")));
                }
                Ok(Beta::Rational(r))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Beta::Rational(r) => format_rational(r),
            Beta::Algebraic { name, .. } => (*name).to_string(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Beta::Rational(r) => Some(r),
            Beta::Algebraic { value, .. } => value.as_rational(),
        }
    }

    pub fn as_algebraic(&self) -> AlgebraicReal {
        match self {
            Beta::Rational(r) => AlgebraicReal::rational(r.clone()),
            Beta::Algebraic { value, .. } => value.clone(),
        }
    }

    /// Integer polynomial vanishing at `β`.
    pub fn defining_poly(&self) -> IntPoly {
        match self {
            Beta::Rational(r) => IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]),
            Beta::Algebraic { value, .. } => value.poly().clone(),
        }
    }

    /// A rational `≥ β` within `2^-bits` of it; `β` itself when rational.
    pub fn upper_rational(&self, bits: u32) -> BigRational {
        match self {
            Beta::Rational(r) => r.clone(),
            Beta::Algebraic { value, .. } => value.clone().refined(&dyadic_eps(bits)).hi().clone(),
        }
    }

    /// A rational `≤ β` within `2^-bits` of it.
    pub fn lower_rational(&self, bits: u32) -> BigRational {
        match self {
            Beta::Rational(r) => r.clone(),
            Beta::Algebraic { value, .. } => value.clone().refined(&dyadic_eps(bits)).lo().clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Beta::Rational(r) => rat_to_f64(r),
            Beta::Algebraic { value, .. } => value.to_f64(),
        }
    }

    /// Exact comparison `β` vs `r`.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            Beta::Rational(b) => b.cmp(r),
            Beta::Algebraic { value, .. } => value.cmp_rational(r),
        }
    }

    /// Exact comparison `x` vs `β`.
    pub fn cmp_value(&self, x: &AlgebraicReal) -> Ordering {
        x.cmp_exact(&self.as_algebraic())
    }

    /// Exact comparison of `num(λ)/den(λ)` with `β`, assuming `den(λ) > 0`.
    pub fn cmp_ratio_at(&self, lambda: &AlgebraicReal, num: &IntPoly, den: &IntPoly) -> Ordering {
        if let Beta::Rational(r) = self {
            let m = &num.scale(r.denom()) - &den.scale(r.numer());
            return lambda.sign_of(&m).cmp(&0);
        }
        let beta = self.as_algebraic();
        let mut lam = lambda.clone();
        let mut b = beta.clone();
        let mut on_root = None;
        let mut bits = 32;
        loop {
            let r = lam
                .eval_ratio(num, den, &dyadic_eps(bits))
                .expect("denominator positive at lambda");
            let bi = b.enclosure();
            if r.hi < bi.lo {
                return Ordering::Less;
            }
            if r.lo > bi.hi {
                return Ordering::Greater;
            }
            if bits >= 64 {
                // Is the ratio a root of β's defining polynomial? Then containment
                // in β's isolating interval identifies it as β.
                let is_root = *on_root.get_or_insert_with(|| lambda.sign_of(&homogenized(&beta, num, den)) == 0);
                if is_root && r.lo > bi.lo && r.hi <= bi.hi {
                    return Ordering::Equal;
                }
            }
            bits += 16;
            lam.refine_bits(bits);
            b.refine_bits(bits);
        }
    }

    /// Numerator and denominator of the rational upper bound, for polynomial scaling.
    pub fn upper_parts(&self, bits: u32) -> (BigInt, BigInt) {
        let r = self.upper_rational(bits);
        (r.numer().clone(), r.denom().clone())
    }
}

/// `den^k · m(num/den)` for the defining polynomial `m` of `β`, degree `k`.
fn homogenized(beta: &AlgebraicReal, num: &IntPoly, den: &IntPoly) -> IntPoly {
    let m = beta.poly();
    let k = m.deg() as u32;
    let mut out = IntPoly::zero();
    for (i, c) in m.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &(&num.pow(i as u32) * &den.pow(k - i as u32)).scale(c);
        }
    }
    out
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Beta::Rational(r) => write!(f, "{}", format_rational(r)),
            Beta::Algebraic { name, value } => write!(f, "{name} ≈ {:.9}", value.to_f64()),
        }
    }
}

/// Serialized form: label, exact definition, and a float for readers.
#[derive(Serialize)]
struct BetaRepr {
    label: String,
    exact: String,
    approx: f64,
}

impl Serialize for Beta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let exact = match self {
            Beta::Rational(r) => format_rational(r),
            Beta::Algebraic { value, .. } => format!("largest root of {}", value.poly()),
        };
        BetaRepr { label: self.label(), exact, approx: self.to_f64() }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::rat;

    #[test]
    fn named_constants() {
        let bs = Beta::beta_star();
        assert!((bs.to_f64() - (5.0 + 3.0 * 3f64.sqrt()) / 2.0).abs() < 1e-12);
        let bt = Beta::beta_tr();
        assert!((bt.to_f64() - (4.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
        assert_eq!(bt.cmp_rational(&rat(23, 3)), Ordering::Less);
        assert!(bs.upper_rational(60) > bs.lower_rational(60));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Beta::parse("21/4").unwrap().as_rational(), Some(&rat(21, 4)));
        assert_eq!(Beta::parse("5.25").unwrap().as_rational(), Some(&rat(21, 4)));
        assert_eq!(Beta::parse("beta-tr").unwrap().label(), "beta-tr");
        assert!(Beta::parse("-1").is_err());
        assert!(Beta::parse("x").is_err());
    }

    #[test]
    fn ratio_comparisons() {
        // At λ = √3: (λ² + 1)/1 = 4.
        let lam = AlgebraicReal::largest_root(&IntPoly::from_i64(&[-3, 0, 1])).unwrap();
        let num = IntPoly::from_i64(&[1, 0, 1]);
        let one = IntPoly::one();
        assert_eq!(Beta::ratio(4, 1).cmp_ratio_at(&lam, &num, &one), Ordering::Equal);
        assert_eq!(Beta::ratio(41, 10).cmp_ratio_at(&lam, &num, &one), Ordering::Less);
        // 4 + 2√3 = (λ + 1)² at λ = √3.
        let sq = IntPoly::from_i64(&[1, 2, 1]);
        assert_eq!(Beta::beta_tr().cmp_ratio_at(&lam, &sq, &one), Ordering::Equal);
        assert_eq!(Beta::beta_tr().cmp_ratio_at(&lam, &num, &one), Ordering::Less);
    }
}
