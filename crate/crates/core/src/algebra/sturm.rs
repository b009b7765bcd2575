//! Sturm sequences over the integers and exact real-root counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::interval::RationalInterval;
use super::poly::sign_of;
use super::IntPoly;

/// Signed remainder chain of a square-free polynomial, kept primitive.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<IntPoly>,
}

impl SturmSequence {
    /// Builds the chain for the square-free part of `p`.
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let p0 = p.squarefree();
        let mut polys = vec![p0.clone()];
        if p0.deg() == 0 {
            return SturmSequence { polys };
        }
        polys.push(p0.derivative().primitive());
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let delta = a.deg() - b.deg();
            let prem = a.pseudo_rem(b);
            if prem.is_zero() {
                break;
            }
            // rem = prem / lc(b)^(delta+1); keep the sign of -rem.
            let flip = b.lead().is_negative() && (delta + 1) % 2 == 1;
            let r = prem.primitive();
            // primitive() forces a positive leading coefficient; restore the true sign.
            let true_sign_positive = prem.lead().is_positive() != flip;
            let next = if true_sign_positive { -&r } else { r };
            polys.push(next);
        }
        SturmSequence { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Sign variations at a rational point.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let signs: Vec<BigInt> = self
            .polys
            .iter()
            .map(|p| BigInt::from(p.sign_at(x)))
            .collect();
        super::poly::sign_variations(&signs)
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        let signs: Vec<BigInt> = self.polys.iter().map(|p| BigInt::from(sign_of(&p.lead()))).collect();
        super::poly::sign_variations(&signs)
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        let signs: Vec<BigInt> = self
            .polys
            .iter()
            .map(|p| {
                let s = sign_of(&p.lead());
                BigInt::from(if p.deg() % 2 == 1 { -s } else { s })
            })
            .collect();
        super::poly::sign_variations(&signs)
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        a.saturating_sub(b)
    }

    /// Distinct roots in `(lo, +inf)`.
    pub fn count_above(&self, lo: &BigRational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at_pos_inf())
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, interval: &RationalInterval) -> usize {
    SturmSequence::new(p).count(&interval.lo, &interval.hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::{rat, rat_int};

    #[test]
    fn sqrt_two_counts() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &RationalInterval::from_ints(1, 2)), 1);
        assert_eq!(sturm_count(&p, &RationalInterval::from_ints(2, 3)), 0);
        assert_eq!(SturmSequence::new(&p).count_real(), 2);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = &(&IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[-1, 1])) * &IntPoly::from_i64(&[2, 1]);
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_real(), 2);
        assert_eq!(s.count(&rat_int(0), &rat_int(1)), 1);
        assert_eq!(s.count(&rat(1, 2), &rat(3, 4)), 0);
    }

    #[test]
    fn negative_leading_chain() {
        // roots -3, -1, 2, 5
        let p = &(&IntPoly::from_i64(&[3, 1]) * &IntPoly::from_i64(&[1, 1]))
            * &(&IntPoly::from_i64(&[-2, 1]) * &IntPoly::from_i64(&[-5, 1]));
        let p = -&p;
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_real(), 4);
        assert_eq!(s.count(&rat_int(-4), &rat_int(0)), 2);
        assert_eq!(s.count_above(&rat_int(2)), 1);
    }
}
