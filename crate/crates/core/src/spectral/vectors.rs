//! Exact helpers for the elementary `Γ` inequalities on positive vectors.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gamma_of;

/// `Γ(αx + (1−α)y)`.
pub fn gamma_of_mix(x: &[BigRational], y: &[BigRational], alpha: &BigRational) -> BigRational {
    let one_minus = BigRational::from(BigInt::from(1)) - alpha;
    let z: Vec<BigRational> = x.iter().zip(y).map(|(a, b)| alpha * a + &one_minus * b).collect();
    gamma_of(&z)
}

/// Lower bound `S²/((m+M)S − kmM)` for entries in `[m, M]`.
pub fn reverse_am_qm_bound(x: &[BigRational], m: &BigRational, big_m: &BigRational) -> BigRational {
    let s: BigRational = x.iter().sum();
    let k = BigRational::from(BigInt::from(x.len()));
    let den = (m + big_m) * &s - k * m * big_m;
    &s * &s / den
}

/// Threshold `Σx²/Σx` below which shrinking one entry lowers `Γ`.
pub fn perturbation_threshold(x: &[BigRational]) -> BigRational {
    let s: BigRational = x.iter().sum();
    let t: BigRational = x.iter().map(|v| v * v).sum();
    t / s
}

/// `x` with entry `i` lowered by `eps`.
pub fn perturb(x: &[BigRational], i: usize, eps: &BigRational) -> Vec<BigRational> {
    let mut y = x.to_vec();
    y[i] -= eps;
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::{rat, rat_int};

    #[test]
    fn reverse_am_qm_is_tight_at_two_values() {
        // Half the entries at m, half at M makes the bound exact.
        let x = vec![rat_int(1), rat_int(1), rat_int(3), rat_int(3)];
        assert_eq!(reverse_am_qm_bound(&x, &rat_int(1), &rat_int(3)), gamma_of(&x));
    }

    #[test]
    fn perturbation_example() {
        let x = vec![rat_int(1), rat_int(4), rat_int(4)];
        assert!(x[0] < perturbation_threshold(&x));
        assert!(gamma_of(&perturb(&x, 0, &rat(1, 2))) < gamma_of(&x));
    }
}
