//! Degree-based lower bounds `β_d = (3λ_d + 1)/2`.
//!
//! `λ_d` is the root in `(√d, d)` of `(1+λ)³ − (d+1)(3λ+1)`. Substituting
//! `λ = (2β − 1)/3` gives `4(β+1)³ − 27(d+1)β`, whose largest root is `β_d`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{AlgebraicReal, IntPoly, RationalInterval};
use crate::error::{Error, Result};

/// `β_d` as an exact algebraic number.
pub fn beta_d_algebraic(d: usize) -> Result<AlgebraicReal> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("beta_d needs d >= 3, got {d}")));
    }
    let c = 27 * (d as i64 + 1);
    // 4(β³ + 3β² + 3β + 1) − cβ
    let p = IntPoly::new(vec![BigInt::from(4), BigInt::from(12 - c), BigInt::from(12), BigInt::from(4)]);
    AlgebraicReal::largest_root(&p)
}

pub fn beta_d(d: usize, eps: &BigRational) -> Result<RationalInterval> {
    Ok(beta_d_algebraic(d)?.refined(eps).enclosure())
}

/// `λ_d` as an exact algebraic number.
pub fn lambda_d(d: usize) -> Result<AlgebraicReal> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("lambda_d needs d >= 3, got {d}")));
    }
    let d1 = d as i64 + 1;
    // λ³ + 3λ² + 3λ + 1 − (d+1)(3λ + 1)
    AlgebraicReal::largest_root(&IntPoly::from_i64(&[1 - d1, 3 - 3 * d1, 3, 1]))
}
