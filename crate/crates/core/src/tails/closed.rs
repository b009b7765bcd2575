//! Closed forms for `K_p + P∞` and `S_p + P∞`.

use num_integer::Roots;
use num_rational::BigRational;

use crate::error::{Error, Result};

fn check_p(p: usize, min: usize) -> Result<f64> {
    if p < min {
        return Err(Error::InvalidArgument(format!("p = {p} is below {min}")));
    }
    Ok(p as f64)
}

/// `λ_{K_p+P∞} = (p−3)/2 + (p−1)/(2(p−2))·√(p²−4)`.
pub fn lambda_clique_tail(p: usize) -> Result<f64> {
    let p = check_p(p, 3)?;
    Ok((p - 3.0) / 2.0 + (p - 1.0) / (2.0 * (p - 2.0)) * (p * p - 4.0).sqrt())
}

/// `Γ_{K_p+P∞} = (p−1)(2p−3)/(2(2p−5)) + (p−1)(2p+1)/(2(p+2)(2p−5))·√(p²−4)`.
pub fn gamma_clique_tail(p: usize) -> Result<f64> {
    let p = check_p(p, 3)?;
    let d = 2.0 * p - 5.0;
    Ok((p - 1.0) * (2.0 * p - 3.0) / (2.0 * d) + (p - 1.0) * (2.0 * p + 1.0) / (2.0 * (p + 2.0) * d) * (p * p - 4.0).sqrt())
}

/// `λ_{S_p+P∞} = (p−1)/√(p−2)`.
pub fn lambda_star_tail(p: usize) -> Result<f64> {
    let p = check_p(p, 4)?;
    Ok((p - 1.0) / (p - 2.0).sqrt())
}

/// `Γ_{S_p+P∞} = (p−1)/(2(p−3))·(√(p−2)+1)²`.
pub fn gamma_star_tail(p: usize) -> Result<f64> {
    let p = check_p(p, 4)?;
    Ok((p - 1.0) / (2.0 * (p - 3.0)) * ((p - 2.0).sqrt() + 1.0).powi(2))
}

/// `Γ_{S_p+P∞}` exactly when `p − 2` is a perfect square.
pub fn gamma_star_tail_exact(p: usize) -> Option<BigRational> {
    if p < 4 {
        return None;
    }
    let s = (p - 2).sqrt();
    (s * s == p - 2).then(|| BigRational::new(((p - 1) * (s + 1) * (s + 1)).into(), (2 * (p - 3)).into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_limits() {
        assert!((gamma_clique_tail(4).unwrap() - (5.0 + 3.0 * 3f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((lambda_clique_tail(4).unwrap() - (1.0 + 3.0 * 3f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((gamma_star_tail(5).unwrap() - (4.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!((lambda_star_tail(5).unwrap() - 4.0 / 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(gamma_star_tail_exact(6), Some(BigRational::new(15.into(), 2.into())));
        assert_eq!(gamma_star_tail_exact(5), None);
    }
}
