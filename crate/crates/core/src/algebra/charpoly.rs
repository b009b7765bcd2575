//! Characteristic polynomial and adjugate `adj(λI - A)` of integer matrices.
//!
//! Faddeev–LeVerrier produces both at once; a fraction-free Bareiss
//! determinant over `Z[λ]` provides an independent check of `P`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::IntPoly;
use crate::error::{Error, Result};

/// `P(λ) = det(λI - A)` and `adj(λI - A)`, entrywise integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolventData {
    #[serde(serialize_with = "ser_poly")]
    pub char_poly: IntPoly,
    #[serde(serialize_with = "ser_matrix")]
    pub adjugate: Vec<Vec<IntPoly>>,
}

fn ser_poly<S: serde::Serializer>(p: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<IntPoly>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

impl ResolventData {
    pub fn n(&self) -> usize {
        self.adjugate.len()
    }

    /// Checks `(λI - A)·adj = P·I` coefficient by coefficient, and symmetry when `A` is symmetric.
    pub fn verify(&self, a: &[Vec<i64>]) -> bool {
        let n = self.n();
        let lam = IntPoly::x();
        for i in 0..n {
            for j in 0..n {
                let mut acc = IntPoly::zero();
                for (k, &aik) in a[i].iter().enumerate() {
                    let entry = if i == k { &lam - &IntPoly::from_i64(&[aik]) } else { IntPoly::from_i64(&[-aik]) };
                    if entry.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&entry * &self.adjugate[k][j]);
                }
                let want = if i == j { self.char_poly.clone() } else { IntPoly::zero() };
                if acc != want {
                    return false;
                }
            }
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i]));
        if symmetric {
            for i in 0..n {
                for j in 0..i {
                    if self.adjugate[i][j] != self.adjugate[j][i] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Exact `P` and `adj(λI - A)` for a square integer matrix.
pub fn char_and_adjugate(a: &[Vec<i64>]) -> Result<ResolventData> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n == 0 {
        return Ok(ResolventData { char_poly: IntPoly::one(), adjugate: Vec::new() });
    }
    if let Some(r) = faddeev_i128(a) {
        return Ok(r);
    }
    Ok(faddeev_big(a))
}

/// Adjugate matrices `M_1..M_n` and coefficients `c_0..c_n` assembled into polynomials.
fn assemble<T: Clone + Into<BigInt>>(n: usize, ms: Vec<Vec<Vec<T>>>, cs: Vec<T>) -> ResolventData {
    let char_poly = IntPoly::new(cs.into_iter().map(Into::into).collect());
    let mut adjugate = vec![vec![IntPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // adj = sum_k M_k λ^(n-k), ms[k-1] = M_k
            let mut coeffs = vec![BigInt::zero(); n];
            for (k, m) in ms.iter().enumerate() {
                coeffs[n - 1 - k] = m[i][j].clone().into();
            }
            adjugate[i][j] = IntPoly::new(coeffs);
        }
    }
    ResolventData { char_poly, adjugate }
}

fn faddeev_i128(a: &[Vec<i64>]) -> Option<ResolventData> {
    let n = a.len();
    let mut cs = vec![0i128; n + 1];
    cs[n] = 1;
    let mut ms: Vec<Vec<Vec<i128>>> = Vec::with_capacity(n);
    let mut prev = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut m = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in 0..n {
                let ail = a[i][l] as i128;
                if ail == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i][j] = m[i][j].checked_add(ail.checked_mul(prev[l][j])?)?;
                }
            }
            m[i][i] = m[i][i].checked_add(cs[n - k + 1])?;
        }
        // c_{n-k} = -tr(A M_k)/k
        let mut tr = 0i128;
        for i in 0..n {
            for l in 0..n {
                let ail = a[i][l] as i128;
                if ail != 0 {
                    tr = tr.checked_add(ail.checked_mul(m[l][i])?)?;
                }
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        cs[n - k] = -(tr / k as i128);
        ms.push(m.clone());
        prev = m;
    }
    Some(assemble(n, ms, cs))
}

fn faddeev_big(a: &[Vec<i64>]) -> ResolventData {
    let n = a.len();
    let mut cs = vec![BigInt::zero(); n + 1];
    cs[n] = BigInt::one();
    let mut ms: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n);
    let mut prev = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                let ail = BigInt::from(a[i][l]);
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    m[i][j] += &ail * &prev[l][j];
                }
            }
            let c = cs[n - k + 1].clone();
            m[i][i] += c;
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if a[i][l] != 0 {
                    tr += BigInt::from(a[i][l]) * &m[l][i];
                }
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        cs[n - k] = -q;
        ms.push(m.clone());
        prev = m;
    }
    assemble(n, ms, cs)
}

/// `det(λI - A)` by fraction-free Bareiss elimination over `Z[λ]`.
pub fn bareiss_char_poly(a: &[Vec<i64>]) -> Result<IntPoly> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let mut m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPoly::from_i64(&[-a[i][j], 1])
                    } else {
                        IntPoly::from_i64(&[-a[i][j]])
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1i64;
    let mut prev_pivot = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // λ on the diagonal keeps pivots nonzero as polynomials, but swap defensively.
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(IntPoly::zero());
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev_pivot).expect("Bareiss division is exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}
