//! Certified `λ_G`, Perron vectors and `Γ_G`.
//!
//! At the simple Perron root the adjugate `adj(λI − A)` is a positive rank-one
//! matrix, so one of its columns is a Perron vector whose entries are integer
//! polynomials in `λ`. `Γ` becomes `N(λ)/D(λ)` with `N = (Σ a_u)²`, `D = Σ a_u²`,
//! and every comparison reduces to the sign of an integer polynomial at an
//! algebraic number.

pub mod degree;
pub mod families;
pub mod tables;
pub mod vectors;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::interval::{dyadic_eps, rat_int};
use crate::algebra::roots::simplest_rational;
use crate::algebra::{char_and_adjugate, AlgebraicReal, IntPoly, RationalInterval, ResolventData};
use crate::beta::Beta;
use crate::error::Result;
use crate::graphs::{to_graph6, Graph};
use crate::report::{ser_interval, ser_opt_rational};

pub use degree::{beta_d, beta_d_algebraic};
pub use families::{family_graph, gamma_family_closed_form, Family};
pub use tables::{min_gamma_table, GammaRow, GammaTable};

/// Exact spectral data of a connected graph.
#[derive(Clone, Debug)]
pub struct Perron {
    graph: Graph,
    resolvent: ResolventData,
    lambda: AlgebraicReal,
    column: usize,
    weights: Vec<IntPoly>,
    gamma_num: IntPoly,
    gamma_den: IntPoly,
}

impl Perron {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let resolvent = char_and_adjugate(&g.adjacency_matrix())?;
        let lambda = AlgebraicReal::largest_root(&resolvent.char_poly)?;
        let column = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
        let weights: Vec<IntPoly> = (0..g.n()).map(|u| resolvent.adjugate[u][column].clone()).collect();
        let sum = weights.iter().fold(IntPoly::zero(), |acc, w| &acc + w);
        let gamma_num = &sum * &sum;
        let gamma_den = weights.iter().fold(IntPoly::zero(), |acc, w| &acc + &(w * w));
        Ok(Perron { graph: g.clone(), resolvent, lambda, column, weights, gamma_num, gamma_den })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn resolvent(&self) -> &ResolventData {
        &self.resolvent
    }

    pub fn lambda(&self) -> &AlgebraicReal {
        &self.lambda
    }

    /// Vertex whose adjugate column supplies the weights.
    pub fn column(&self) -> usize {
        self.column
    }

    /// Perron weights as polynomials in `λ`, unnormalized.
    pub fn weight_polys(&self) -> &[IntPoly] {
        &self.weights
    }

    /// `(N, D)` with `Γ = N(λ)/D(λ)`.
    pub fn gamma_polys(&self) -> (&IntPoly, &IntPoly) {
        (&self.gamma_num, &self.gamma_den)
    }

    pub fn lambda_enclosure(&self, eps: &BigRational) -> RationalInterval {
        self.lambda.clone().refined(eps).enclosure()
    }

    pub fn gamma_enclosure(&self, eps: &BigRational) -> RationalInterval {
        self.lambda
            .eval_ratio(&self.gamma_num, &self.gamma_den, eps)
            .expect("Perron weights are positive")
    }

    /// `Γ` as an exact rational when it is one.
    pub fn gamma_exact(&self) -> Option<BigRational> {
        self.exact_in(&self.gamma_enclosure(&dyadic_eps(48)))
    }

    fn exact_in(&self, iv: &RationalInterval) -> Option<BigRational> {
        let q = simplest_rational(&iv.lo, &iv.hi);
        // A rational Γ has a small denominator; anything else in a 2^-40 window is noise.
        if q.denom().bits() > 12 {
            return None;
        }
        let test = &self.gamma_num.scale(q.denom()) - &self.gamma_den.scale(q.numer());
        (self.lambda.sign_of(&test) == 0).then_some(q)
    }

    pub fn gamma_value(&self, eps: &BigRational) -> GammaValue {
        let eps = eps.clone().min(dyadic_eps(40));
        let lambda = self.lambda_enclosure(&eps);
        let value = self.gamma_enclosure(&eps);
        let exact = self.exact_in(&value);
        GammaValue {
            graph: to_graph6(&self.graph),
            value: exact.clone().map_or(value, RationalInterval::point),
            lambda,
            method: if exact.is_some() { GammaMethod::Exact } else { GammaMethod::Certified },
            exact,
        }
    }

    /// Exact comparison with `β`, using `known` (an enclosure of `Γ`) first.
    pub fn cmp_gamma_with(&self, beta: &Beta, known: &RationalInterval) -> Ordering {
        let b = beta.as_algebraic();
        if known.hi < *b.lo() {
            return Ordering::Less;
        }
        if known.lo > *b.hi() {
            return Ordering::Greater;
        }
        self.cmp_gamma(beta)
    }

    /// Exact comparison `Γ_G` vs `β`.
    pub fn cmp_gamma(&self, beta: &Beta) -> Ordering {
        beta.cmp_ratio_at(&self.lambda, &self.gamma_num, &self.gamma_den)
    }

    /// Exact comparison of Perron weights `x_u` vs `x_v`.
    pub fn cmp_weights(&self, u: usize, v: usize) -> Ordering {
        self.lambda.sign_of(&(&self.weights[u] - &self.weights[v])).cmp(&0)
    }

    /// All vertices of maximal Perron weight, ascending.
    pub fn masters(&self) -> Vec<usize> {
        let mut best = vec![0];
        for v in 1..self.graph.n() {
            match self.cmp_weights(v, best[0]) {
                Ordering::Greater => best = vec![v],
                Ordering::Equal => best.push(v),
                Ordering::Less => {}
            }
        }
        best
    }

    /// Certified `Γ_G − 1 ≥ λ_G`.
    pub fn gamma_minus_one_ge_lambda(&self) -> bool {
        // N − (1 + λ)·D ≥ 0 at λ.
        let shifted = &self.gamma_den + &self.gamma_den.shift_up(1);
        self.lambda.sign_of(&(&self.gamma_num - &shifted)) >= 0
    }

    /// Certified `x_o ≥ ‖x‖₂ / √Γ_G`, i.e. `x_o² N ≥ D²`.
    pub fn master_weight_bound(&self, o: usize) -> bool {
        let xo2 = &self.weights[o] * &self.weights[o];
        let lhs = &xo2 * &self.gamma_num;
        let rhs = &self.gamma_den * &self.gamma_den;
        self.lambda.sign_of(&(&lhs - &rhs)) >= 0
    }

    /// Certified `√d ≤ λ_G ≤ d` for `d = deg(v)`.
    pub fn degree_sandwich(&self, v: usize) -> bool {
        let d = self.graph.degree(v) as i64;
        let sq = IntPoly::from_i64(&[-d, 0, 1]);
        self.lambda.sign_of(&sq) >= 0 && self.lambda.cmp_rational(&rat_int(d)) != Ordering::Greater
    }

    /// Weight enclosures with relative width at most `eps`.
    pub fn perron_data(&self, eps: &BigRational) -> PerronData {
        let mut lam = self.lambda.clone();
        let mut bits = 32;
        loop {
            lam.refine_bits(bits);
            let x = lam.enclosure();
            let weights: Vec<RationalInterval> = self.weights.iter().map(|w| x.eval_poly(w)).collect();
            let tight = weights.iter().all(|w| w.is_positive() && w.width() <= &w.lo * eps);
            if tight || lam.is_rational() {
                return PerronData { lambda: x, weights, column: self.column };
            }
            bits += 16;
        }
    }
}

/// Interval enclosures of `λ` and of the adjugate column of `column` at `λ`.
#[derive(Clone, Debug, Serialize)]
pub struct PerronData {
    #[serde(serialize_with = "ser_interval")]
    pub lambda: RationalInterval,
    #[serde(serialize_with = "ser_intervals")]
    pub weights: Vec<RationalInterval>,
    /// Weights are column `column` of `adj(λI − A)`, unscaled.
    pub column: usize,
}

fn ser_intervals<S: serde::Serializer>(v: &[RationalInterval], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct W<'a>(#[serde(serialize_with = "ser_interval")] &'a RationalInterval);
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for iv in v {
        seq.serialize_element(&W(iv))?;
    }
    seq.end()
}

impl PerronData {
    /// `x_u / x_v` enclosures.
    pub fn normalized_at(&self, v: usize) -> Vec<RationalInterval> {
        let inv = self.weights[v].recip().expect("positive weight");
        self.weights.iter().map(|w| w * &inv).collect()
    }

    /// `(A x)_u − λ x_u` enclosures; each contains zero.
    pub fn residuals(&self, g: &Graph) -> Vec<RationalInterval> {
        (0..g.n())
            .map(|u| {
                let s = g
                    .neighbors(u)
                    .fold(RationalInterval::point(rat_int(0)), |acc, w| &acc + &self.weights[w]);
                &s - &(&self.lambda * &self.weights[u])
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaMethod {
    /// Interval enclosure from exact root data.
    Certified,
    /// Exact rational value confirmed symbolically.
    Exact,
    ClosedForm,
    FloatHint,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaValue {
    pub graph: String,
    #[serde(serialize_with = "ser_interval")]
    pub value: RationalInterval,
    #[serde(serialize_with = "ser_interval")]
    pub lambda: RationalInterval,
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<BigRational>,
    pub method: GammaMethod,
}

impl GammaValue {
    pub fn mid_f64(&self) -> f64 {
        self.value.mid_f64()
    }
}

pub fn lambda_enclosure(g: &Graph, eps: &BigRational) -> Result<RationalInterval> {
    g.require_connected()?;
    crate::algebra::isolate_largest_root(&crate::algebra::bareiss_char_poly(&g.adjacency_matrix())?, eps)
}

pub fn perron_enclosure(g: &Graph, eps: &BigRational) -> Result<PerronData> {
    Ok(Perron::new(g)?.perron_data(eps))
}

pub fn gamma_enclosure(g: &Graph, eps: &BigRational) -> Result<GammaValue> {
    Ok(Perron::new(g)?.gamma_value(eps))
}

/// `Γ` of a positive vector, exactly.
pub fn gamma_of(x: &[BigRational]) -> BigRational {
    let s: BigRational = x.iter().sum();
    let q: BigRational = x.iter().map(|v| v * v).sum();
    &s * &s / q
}

/// `Γ` of an integer vector, exactly.
pub fn gamma_of_ints(x: &[i64]) -> BigRational {
    let s: i64 = x.iter().sum();
    let q: i64 = x.iter().map(|v| v * v).sum();
    BigRational::new(BigInt::from(s) * BigInt::from(s), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::rat;
    use crate::graphs::build;

    fn eps() -> BigRational {
        dyadic_eps(40)
    }

    #[test]
    fn regular_graphs_are_exact() {
        for n in 3..=10 {
            let p = Perron::new(&build::cycle(n)).unwrap();
            assert_eq!(p.gamma_exact(), Some(rat_int(n as i64)));
        }
        let k4 = Perron::new(&build::complete(4)).unwrap();
        assert_eq!(k4.lambda().as_rational(), Some(&rat_int(3)));
        assert_eq!(k4.masters(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn small_graph_values() {
        let k3p3 = build::attach_path(&build::complete(3), 0, 3).unwrap();
        let l = lambda_enclosure(&k3p3, &eps()).unwrap();
        assert!((l.mid_f64() - 2.2283).abs() < 1e-4);
        let k4p2 = build::attach_path(&build::complete(4), 0, 2).unwrap();
        let g = gamma_enclosure(&k4p2, &eps()).unwrap();
        assert!((g.mid_f64() - 4.8777978).abs() < 1e-6);
        let dsp3 = build::attach_path(&build::diamond(), build::DIAMOND_S, 3).unwrap();
        let g = gamma_enclosure(&dsp3, &eps()).unwrap();
        assert!((g.mid_f64() - 5.180545).abs() < 1e-5);
        assert_eq!(Perron::new(&dsp3).unwrap().cmp_gamma(&Beta::ratio(21, 4)), Ordering::Less);
    }

    #[test]
    fn star_ratio() {
        let p = Perron::new(&build::star(5)).unwrap();
        assert_eq!(p.gamma_exact(), Some(rat(9, 2)));
        assert_eq!(p.masters(), vec![0]);
        assert_eq!(p.cmp_gamma(&Beta::ratio(9, 2)), Ordering::Equal);
    }

    #[test]
    fn perron_data_path() {
        let d = perron_enclosure(&build::path(3), &dyadic_eps(30)).unwrap();
        let r = d.normalized_at(0);
        assert!((r[1].mid_f64() - 2f64.sqrt()).abs() < 1e-8);
        for res in d.residuals(&build::path(3)) {
            assert!(res.contains_zero());
        }
    }

    #[test]
    fn lemma_checks() {
        let g = build::attach_path(&build::complete(4), 0, 3).unwrap();
        let p = Perron::new(&g).unwrap();
        assert!(p.gamma_minus_one_ge_lambda());
        let o = p.masters()[0];
        assert_eq!(o, 0);
        assert!(p.master_weight_bound(o));
        assert!(p.degree_sandwich(o));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(gamma_enclosure(&g, &eps()).is_err());
    }
}
