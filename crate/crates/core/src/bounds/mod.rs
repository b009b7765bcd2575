//! The resolvent bounding engine.
//!
//! For a rooted kernel `(H, o)` with `P = det(λI − A_H)` and adjugate `P·B`,
//! every quantity below is an integer polynomial in `λ`:
//! `P·B̃_{u,U}`, `P·s_U`, `P²·c_{U,V}`, and the certificate polynomial
//!
//! `Q = (P s_U + P)(P s_V + P) − β (P² c_{U,V} + P² B̃_{o,U}/2 + P² B̃_{o,V}/2)`.
//!
//! `Q ≥ 0` on `[max(λ_U, λ_V), ∞)` for all pairs of `𝒰` gives `Γ(x̃) ≥ β` for
//! every `𝒰`-extension.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::interval::{dyadic_eps, rat, rat_to_f64};
use crate::algebra::positivity::nonneg_above;
use crate::algebra::{bareiss_char_poly, char_and_adjugate, AlgebraicReal, IntPoly, RatPoly, RationalInterval, RayVerdict, ResolventData};
use crate::beta::Beta;
use crate::error::{Error, Result};
use crate::graphs::{Graph, RootedKernel};
use crate::report::ser_rational;

/// A vertex subset of a kernel as a bitmask.
pub type VertexSet = u64;

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn members(set: VertexSet) -> Vec<usize> {
    (0..64).filter(|&v| set >> v & 1 == 1).collect()
}

/// `P₊(S)`: all nonempty subsets, ordered by (size, bitmask).
pub fn nonempty_subsets(vertices: &[usize]) -> Vec<VertexSet> {
    let k = vertices.len();
    let mut out: Vec<VertexSet> = (1u64..1 << k)
        .map(|bits| (0..k).filter(|i| bits >> i & 1 == 1).fold(0, |m, i| m | 1 << vertices[i]))
        .collect();
    sort_family(&mut out);
    out
}

/// `{{v} : v ∈ S}`.
pub fn singletons(vertices: &[usize]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = vertices.iter().map(|&v| 1 << v).collect();
    sort_family(&mut out);
    out
}

pub fn sort_family(f: &mut Vec<VertexSet>) {
    f.sort_by_key(|&s| (s.count_ones(), s));
    f.dedup();
}

#[derive(Debug)]
struct SubsetData {
    /// `P·B̃_{u,U}` for every `u`.
    column: Vec<IntPoly>,
    /// `P·s_U`.
    s: IntPoly,
    lambda_u: AlgebraicReal,
}

/// Resolvent data of a kernel with a write-once cache keyed by vertex subsets.
#[derive(Debug)]
pub struct KernelContext {
    kernel: RootedKernel,
    resolvent: ResolventData,
    lambda_h: AlgebraicReal,
    cache: Mutex<HashMap<VertexSet, Arc<SubsetData>>>,
}

impl KernelContext {
    pub fn new(kernel: RootedKernel) -> Result<Self> {
        kernel.graph.require_connected()?;
        let resolvent = char_and_adjugate(&kernel.graph.adjacency_matrix())?;
        let lambda_h = AlgebraicReal::largest_root(&resolvent.char_poly)?;
        Ok(KernelContext { kernel, resolvent, lambda_h, cache: Mutex::new(HashMap::new()) })
    }

    pub fn kernel(&self) -> &RootedKernel {
        &self.kernel
    }

    pub fn graph(&self) -> &Graph {
        &self.kernel.graph
    }

    pub fn root(&self) -> usize {
        self.kernel.root
    }

    pub fn resolvent(&self) -> &ResolventData {
        &self.resolvent
    }

    /// `P(λ)`.
    pub fn p(&self) -> &IntPoly {
        &self.resolvent.char_poly
    }

    pub fn lambda_h(&self) -> &AlgebraicReal {
        &self.lambda_h
    }

    fn check_set(&self, set: VertexSet) -> Result<()> {
        if set == 0 {
            return Err(Error::InvalidArgument("empty vertex set".into()));
        }
        if set >> self.graph().n() != 0 {
            return Err(Error::InvalidArgument(format!("vertex set {:?} outside the kernel", members(set))));
        }
        Ok(())
    }

    fn subset(&self, set: VertexSet) -> Result<Arc<SubsetData>> {
        self.check_set(set)?;
        if let Some(d) = self.cache.lock().expect("cache lock").get(&set) {
            return Ok(d.clone());
        }
        let n = self.graph().n();
        let vs = members(set);
        let column: Vec<IntPoly> = (0..n)
            .map(|u| vs.iter().fold(IntPoly::zero(), |acc, &v| &acc + &self.resolvent.adjugate[u][v]))
            .collect();
        let s = column.iter().fold(IntPoly::zero(), |acc, c| &acc + c);
        let mut h = self.graph().clone();
        let w = h.add_vertex()?;
        for &v in &vs {
            h.add_edge(v, w)?;
        }
        let lambda_u = AlgebraicReal::largest_root(&bareiss_char_poly(&h.adjacency_matrix())?)?;
        let data = Arc::new(SubsetData { column, s, lambda_u });
        // First writer wins; values are identical anyway.
        Ok(self.cache.lock().expect("cache lock").entry(set).or_insert(data).clone())
    }
}

/// Column `v` of the adjugate, `P·B e_v`.
pub fn pb_column(ctx: &KernelContext, v: usize) -> Result<Vec<IntPoly>> {
    Ok(ctx.subset(1 << v)?.column.clone())
}

/// `P·B̃_{·,U}`.
pub fn pb_tilde_column(ctx: &KernelContext, u: VertexSet) -> Result<Vec<IntPoly>> {
    Ok(ctx.subset(u)?.column.clone())
}

/// `P·s_U`.
pub fn s_poly(ctx: &KernelContext, u: VertexSet) -> Result<IntPoly> {
    Ok(ctx.subset(u)?.s.clone())
}

/// `P²·c_{U,V}`.
pub fn c_poly(ctx: &KernelContext, u: VertexSet, v: VertexSet) -> Result<IntPoly> {
    let a = ctx.subset(u)?;
    let b = ctx.subset(v)?;
    Ok(a.column.iter().zip(&b.column).fold(IntPoly::zero(), |acc, (x, y)| &acc + &(x * y)))
}

/// `λ_U`, the largest eigenvalue of `H` plus a vertex joined to `U`.
pub fn lambda_u(ctx: &KernelContext, u: VertexSet) -> Result<AlgebraicReal> {
    Ok(ctx.subset(u)?.lambda_u.clone())
}

pub fn lambda_u_enclosure(ctx: &KernelContext, u: VertexSet, eps: &BigRational) -> Result<RationalInterval> {
    Ok(lambda_u(ctx, u)?.refined(eps).enclosure())
}

/// `2d·Q` for `β = n/d`, an integer polynomial.
pub fn q_poly(ctx: &KernelContext, u: VertexSet, v: VertexSet, beta: &BigRational) -> Result<IntPoly> {
    let su = ctx.subset(u)?;
    let sv = ctx.subset(v)?;
    let p = ctx.p();
    let o = ctx.root();
    let a = &(&su.s + p) * &(&sv.s + p);
    let c2 = c_poly(ctx, u, v)?;
    let b = &(&c2 + &c2) + &(p * &(&su.column[o] + &sv.column[o]));
    let d2 = BigInt::from(2) * beta.denom();
    Ok(&a.scale(&d2) - &b.scale(beta.numer()))
}

/// `Q` itself with rational coefficients.
pub fn q_poly_rational(ctx: &KernelContext, u: VertexSet, v: VertexSet, beta: &BigRational) -> Result<RatPoly> {
    let q = q_poly(ctx, u, v, beta)?;
    let d2 = BigRational::from(BigInt::from(2) * beta.denom());
    Ok(RatPoly::new(q.coeffs().iter().map(|c| BigRational::from(c.clone()) / &d2).collect()))
}

/// Verdict for one pair `(U, V)`.
#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    /// The rational `β` used in `Q` (an upper bound when `β` is irrational).
    #[serde(serialize_with = "ser_rational")]
    pub beta: BigRational,
    /// Rational lower bound of `max(λ_U, λ_V)` at which `Q` was shifted.
    #[serde(serialize_with = "ser_rational")]
    pub shift: BigRational,
    pub verdict: RayVerdict,
}

impl PairVerdict {
    pub fn passed(&self) -> bool {
        self.verdict.is_proved()
    }
}

/// Bits used for rational upper bounds of irrational `β`.
pub const BETA_BITS: u32 = 64;

/// Check `Q_{U,V} ≥ 0` on `[max(λ_U, λ_V), ∞)`.
///
/// For irrational `β` the check runs at a rational `β' ≥ β`. The subtracted
/// term is positive beyond `λ_H`, so a pass at `β'` implies a pass at `β`.
pub fn check_pair(ctx: &KernelContext, u: VertexSet, v: VertexSet, beta: &Beta) -> Result<PairVerdict> {
    let b = beta.upper_rational(BETA_BITS);
    let q = q_poly(ctx, u, v, &b)?;
    let lu = lambda_u(ctx, u)?;
    let lv = lambda_u(ctx, v)?;
    let mut top = if lu.cmp_exact(&lv) == Ordering::Less { lv } else { lu };
    top.refine(&dyadic_eps(40));
    let verdict = nonneg_above(&q, &top);
    Ok(PairVerdict { u: members(u), v: members(v), beta: b, shift: top.lo().clone(), verdict })
}

/// Upper limit on `β` under which `Γ(x̃) ≥ β` transfers to `Γ_G ≥ β` when `λ_G > 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guard {
    /// `2λ_G + 3 > 7`.
    Basic,
    /// `N_G[H]` reaches distance 2 from `o`: `2λ_G + 2/(λ_G² − 1) + 3 > 7 + 2/3`.
    DistanceTwo,
}

impl Guard {
    pub fn limit(self) -> BigRational {
        match self {
            Guard::Basic => rat(7, 1),
            Guard::DistanceTwo => rat(23, 3),
        }
    }

    pub fn check(self, beta: &Beta) -> Result<()> {
        if beta.cmp_rational(&self.limit()) == Ordering::Less {
            Ok(())
        } else {
            Err(Error::BetaGuard {
                beta: beta.label(),
                reason: format!(
                    "the bound on Γ(x̃) only transfers to Γ_G for β < {}",
                    crate::algebra::text::format_rational(&self.limit())
                ),
            })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub kernel: String,
    pub family: Vec<Vec<usize>>,
    pub beta: Beta,
    pub guard: Guard,
    pub pairs: Vec<PairVerdict>,
    pub pass: bool,
    pub empty_family: bool,
}

impl ExtensionReport {
    pub fn failures(&self) -> impl Iterator<Item = &PairVerdict> {
        self.pairs.iter().filter(|p| !p.passed())
    }
}

/// Check every unordered pair of `family` (row-major over the sorted family).
pub fn verify_extension(ctx: &KernelContext, family: &[VertexSet], beta: &Beta, guard: Guard) -> Result<ExtensionReport> {
    guard.check(beta)?;
    let mut fam = family.to_vec();
    sort_family(&mut fam);
    if let Some(&bad) = fam.iter().find(|&&s| s == 0) {
        return Err(Error::InvalidArgument(format!("empty set {bad} in family")));
    }
    let mut pairs = Vec::with_capacity(fam.len() * (fam.len() + 1) / 2);
    for i in 0..fam.len() {
        for j in i..fam.len() {
            pairs.push(check_pair(ctx, fam[i], fam[j], beta)?);
        }
    }
    Ok(ExtensionReport {
        kernel: ctx.kernel().id(),
        family: fam.iter().map(|&s| members(s)).collect(),
        beta: beta.clone(),
        guard,
        pass: pairs.iter().all(PairVerdict::passed),
        empty_family: fam.is_empty(),
        pairs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvePoint {
    pub lambda: f64,
    /// `a_{U,U} / b⁽¹⁾_{U,U}`.
    pub bound_1: f64,
    /// `a_{U,U} / b⁽³⁾_{U,U}` with `γ̃ = 1`.
    pub bound_3: f64,
}

/// `(P s + P)²`, `P² c + P²`, `P² c + P·(P B̃_{o,U})`.
fn curve_polys(ctx: &KernelContext, u: VertexSet) -> Result<(IntPoly, IntPoly, IntPoly)> {
    let d = ctx.subset(u)?;
    let p = ctx.p();
    let a = (&d.s + p).pow(2);
    let c = c_poly(ctx, u, u)?;
    let b1 = &c + &(p * p);
    let b3 = &c + &(p * &d.column[ctx.root()]);
    Ok((a, b1, b3))
}

/// Both bound curves sampled at `samples` evenly spaced points of `[lo, hi]`.
pub fn bound_curves(ctx: &KernelContext, u: VertexSet, lo: &BigRational, hi: &BigRational, samples: usize) -> Result<Vec<CurvePoint>> {
    if ctx.lambda_h().cmp_rational(lo) != Ordering::Less {
        return Err(Error::InvalidArgument("curve range must lie above λ_H".into()));
    }
    if hi < lo || samples < 2 {
        return Err(Error::InvalidArgument("need lo <= hi and at least two samples".into()));
    }
    let (a, b1, b3) = curve_polys(ctx, u)?;
    let step = (hi - lo) / BigRational::from(BigInt::from(samples - 1));
    Ok((0..samples)
        .map(|i| {
            let x = lo + &step * BigRational::from(BigInt::from(i));
            let av = a.eval(&x);
            CurvePoint {
                lambda: rat_to_f64(&x),
                bound_1: rat_to_f64(&(&av / b1.eval(&x))),
                bound_3: rat_to_f64(&(&av / b3.eval(&x))),
            }
        })
        .collect())
}

/// `a/b⁽¹⁾` and `a/b⁽³⁾` at `λ_U`, as enclosures.
pub fn bounds_at_lambda_u(ctx: &KernelContext, u: VertexSet, eps: &BigRational) -> Result<(RationalInterval, RationalInterval)> {
    let (a, b1, b3) = curve_polys(ctx, u)?;
    let l = lambda_u(ctx, u)?;
    Ok((l.eval_ratio(&a, &b1, eps)?, l.eval_ratio(&a, &b3, eps)?))
}
