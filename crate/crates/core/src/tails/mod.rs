//! Pendant-path analytics: the substitution `t = r(λ)`, infinite-tail eigendata,
//! and the finite-versus-infinite and branching-tail certificates.
//!
//! Every sign condition is checked in the `t` coordinate, where `λ = t + 1/t`
//! turns all quantities into quotients of integer polynomials.

pub mod closed;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::interval::{ceil_dyadic, dyadic_eps, rat_int, rat_to_f64};
use crate::algebra::positivity::{point_between, sign_on_interval, sign_on_open, SignVerdict};
use crate::algebra::roots::{larger_quadratic_root, simplest_rational};
use crate::algebra::{bareiss_char_poly, char_and_adjugate, AlgebraicReal, IntPoly, RationalFunction, RationalInterval, ResolventData, Var};
use crate::error::{Error, Result};
use crate::graphs::{build, to_graph6, Graph};
use crate::report::ser_rational;

/// Precision of enclosures used in certificates.
const BITS: u32 = 64;

fn rf_const(r: &BigRational, var: Var) -> RationalFunction {
    RationalFunction::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()), var).expect("nonzero denominator")
}

fn rf_int(c: i64) -> RationalFunction {
    RationalFunction::constant(c, Var::T)
}

fn rf_poly(c: &[i64]) -> RationalFunction {
    RationalFunction::poly(IntPoly::from_i64(c), Var::T)
}

/// `t/(t−1)`.
fn geometric_sum() -> RationalFunction {
    RationalFunction::new(IntPoly::from_i64(&[0, 1]), IntPoly::from_i64(&[-1, 1]), Var::T).expect("nonzero")
}

/// `t²/(t²−1)`.
fn geometric_square_sum() -> RationalFunction {
    RationalFunction::new(IntPoly::from_i64(&[0, 0, 1]), IntPoly::from_i64(&[-1, 0, 1]), Var::T).expect("nonzero")
}

/// `t^{-k}`.
fn t_pow_neg(k: usize) -> RationalFunction {
    RationalFunction::new(IntPoly::one(), IntPoly::monomial(BigInt::one(), k), Var::T).expect("nonzero")
}

/// `r(λ)` as an algebraic number: larger root of `t² − λt + 1`.
pub fn r_of(lambda: &BigRational) -> Result<AlgebraicReal> {
    if lambda <= &rat_int(2) {
        return Err(Error::InvalidArgument("r(λ) needs λ > 2".into()));
    }
    larger_quadratic_root(lambda.denom(), &-lambda.numer().clone(), lambda.denom())
}

/// `r(λ_G)` for a graph with `λ_G ≥ 2`: the largest root of `t^d χ(t + 1/t)`.
pub fn r_of_graph(g: &Graph) -> Result<AlgebraicReal> {
    AlgebraicReal::largest_root(&bareiss_char_poly(&g.adjacency_matrix())?.compose_t())
}

/// Resolvent data of `H` at a vertex `v`, with everything the tail arguments need.
#[derive(Clone, Debug)]
pub struct TailContext {
    pub base: Graph,
    pub v: usize,
    pub o: Option<usize>,
    pub resolvent: ResolventData,
    pub lambda_h: AlgebraicReal,
    /// `S(λ) = Σ_u B_{u,v}`.
    pub s: RationalFunction,
    /// `T(λ) = Σ_u B_{u,v}²`.
    pub t: RationalFunction,
    pub s_hat: RationalFunction,
    pub t_hat: RationalFunction,
    pub j_hat: RationalFunction,
    pub f_hat: RationalFunction,
    /// `B_{v,v}(t + 1/t)`.
    pub bvv_hat: RationalFunction,
    pub t_inf: AlgebraicReal,
    pub lambda_inf: AlgebraicReal,
}

/// Build the context. Requires `λ_H ≥ 2`; `λ_H = 2` is accepted.
pub fn build_tail_context(h: &Graph, v: usize, o: Option<usize>) -> Result<TailContext> {
    h.require_connected()?;
    for x in std::iter::once(v).chain(o) {
        if x >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: h.n() });
        }
    }
    let resolvent = char_and_adjugate(&h.adjacency_matrix())?;
    let p = &resolvent.char_poly;
    let lambda_h = AlgebraicReal::largest_root(p)?;
    if lambda_h.cmp_rational(&rat_int(2)) == Ordering::Less {
        return Err(Error::Precondition(format!(
            "λ_H = {:.6} < 2; attach a path segment first",
            lambda_h.to_f64()
        )));
    }
    let col: Vec<&IntPoly> = (0..h.n()).map(|u| &resolvent.adjugate[u][v]).collect();
    let sum = col.iter().fold(IntPoly::zero(), |a, c| &a + *c);
    let sq = col.iter().fold(IntPoly::zero(), |a, c| &a + &(*c * *c));
    let s = RationalFunction::new(sum, p.clone(), Var::Lambda)?;
    let t = RationalFunction::new(sq, p * p, Var::Lambda)?;
    let s_hat = s.substitute_t();
    let t_hat = t.substitute_t();
    let j_hat = s_hat.add(&geometric_sum()).square().div(&t_hat.add(&geometric_square_sum()))?;
    let f_hat = t_hat.add(&rf_int(1)).mul(&rf_poly(&[0, 1])).sub(&s_hat).sub(&geometric_sum());
    let bvv = RationalFunction::new(resolvent.adjugate[v][v].clone(), p.clone(), Var::Lambda)?;
    let bvv_hat = bvv.substitute_t();

    // B_vv(t+1/t) = t has a unique root above r(λ_H), and it is the largest real root.
    let eq = bvv_hat.num() - &(bvv_hat.den() * &IntPoly::x());
    let t_inf = AlgebraicReal::largest_root(&eq)?;
    // λ∞ solves adj_vv² − λ·adj_vv·P + P² = 0 (that is, b² − λb + 1 = 0 with b = B_vv).
    let adj = &resolvent.adjugate[v][v];
    let e = &(&(adj * adj) - &(&(adj * p) * &IntPoly::x())) + &(p * p);
    let lambda_inf = lambda_from_t(&t_inf, &e)?;
    Ok(TailContext { base: h.clone(), v, o, resolvent, lambda_h, s, t, s_hat, t_hat, j_hat, f_hat, bvv_hat, t_inf, lambda_inf })
}

/// The root of `e` inside the image of `t ↦ t + 1/t` over the enclosure of `t`.
fn lambda_from_t(t: &AlgebraicReal, e: &IntPoly) -> Result<AlgebraicReal> {
    if let Some(q) = t.as_rational() {
        return Ok(AlgebraicReal::rational(q + q.recip()));
    }
    let mut t = t.clone();
    for bits in (24..=192).step_by(24) {
        t.refine_bits(bits);
        let lo = t.lo() + t.lo().recip();
        let hi = t.hi() + t.hi().recip();
        let roots = AlgebraicReal::roots_in(e, &lo, &hi);
        if roots.len() == 1 {
            return Ok(roots.into_iter().next().expect("one root"));
        }
    }
    Err(Error::NoRealRoots)
}

impl TailContext {
    pub fn graph6(&self) -> String {
        to_graph6(&self.base)
    }

    /// `r∞ = t∞`.
    pub fn r_inf(&self) -> &AlgebraicReal {
        &self.t_inf
    }

    /// Enclosure of `Γ∞ = Ĵ(t∞)`.
    pub fn gamma_inf(&self, eps: &BigRational) -> Result<RationalInterval> {
        self.t_inf.eval_ratio(self.j_hat.num(), self.j_hat.den(), eps)
    }

    /// `Γ∞` exactly when `t∞` is rational.
    pub fn gamma_inf_exact(&self) -> Option<BigRational> {
        let mut t = self.t_inf.clone();
        t.refine_bits(64);
        let q = simplest_rational(t.lo(), t.hi());
        (t.poly().eval(&q).is_zero() && t.enclosure().contains(&q)).then(|| self.j_hat.eval(&q).ok()).flatten()
    }

    /// A rational `β' ≥ Γ∞` within `2^-bits`.
    pub fn gamma_inf_upper(&self, bits: u32) -> Result<BigRational> {
        if let Some(g) = self.gamma_inf_exact() {
            return Ok(g);
        }
        Ok(ceil_dyadic(&self.gamma_inf(&dyadic_eps(bits + 4))?.hi, bits))
    }

    /// `B_{a,b}(λ)` as a rational function of `λ`.
    pub fn b_entry(&self, a: usize, b: usize) -> Result<RationalFunction> {
        RationalFunction::new(self.resolvent.adjugate[a][b].clone(), self.resolvent.char_poly.clone(), Var::Lambda)
    }
}

/// `Ĵ(t)`.
pub fn j_hat(ctx: &TailContext) -> &RationalFunction {
    &ctx.j_hat
}

/// `f̂(t)`.
pub fn f_hat(ctx: &TailContext) -> &RationalFunction {
    &ctx.f_hat
}

/// `Ĵ(t)` back in terms of `λ`: `J(λ) = Ĵ(r(λ))`, evaluated on an enclosure of `λ`.
pub fn j_at_lambda(ctx: &TailContext, lambda: &BigRational, eps: &BigRational) -> Result<RationalInterval> {
    r_of(lambda)?.eval_ratio(ctx.j_hat.num(), ctx.j_hat.den(), eps)
}

#[derive(Clone, Debug, Serialize)]
pub struct TailEigendata {
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub t_inf: RationalInterval,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub lambda_inf: RationalInterval,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub gamma_inf: RationalInterval,
}

/// `(t∞, λ∞, Γ∞)`, each within `eps`.
pub fn infinite_tail_eigendata(ctx: &TailContext, eps: &BigRational) -> Result<TailEigendata> {
    Ok(TailEigendata {
        t_inf: ctx.t_inf.clone().refined(eps).enclosure(),
        lambda_inf: ctx.lambda_inf.clone().refined(eps).enclosure(),
        gamma_inf: ctx.gamma_inf(eps)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub name: String,
    pub statement: String,
    pub pass: bool,
    pub evidence: String,
}

impl Condition {
    fn new(name: &str, statement: &str, pass: bool, evidence: String) -> Self {
        Condition { name: name.into(), statement: statement.into(), pass, evidence }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TailParams {
    pub k: usize,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub lambda1: Option<BigRational>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub lambda2: Option<BigRational>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub c: Option<BigRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TailCertificate {
    pub check: String,
    pub base: String,
    pub v: usize,
    pub o: Option<usize>,
    pub params: TailParams,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub lambda_inf: RationalInterval,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub gamma_inf: RationalInterval,
    /// The rational upper bound of `Γ∞` used in strict comparisons.
    #[serde(serialize_with = "ser_rational")]
    pub gamma_inf_upper: BigRational,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
    pub pass: bool,
}

fn verdict_text(v: &SignVerdict) -> String {
    match v {
        SignVerdict::Positive => "positive (no numerator or denominator root inside; sampled sign +)".into(),
        SignVerdict::Negative => "negative".into(),
        SignVerdict::Indeterminate(w) => format!("numerator vanishes near {}", rat_to_f64(w)),
    }
}

fn positive_on_open(f: &RationalFunction, lo: &AlgebraicReal, hi: &AlgebraicReal) -> (bool, String) {
    match sign_on_open(f, lo, hi) {
        Ok(v) => (v.is_positive(), verdict_text(&v)),
        Err(e) => (false, e.to_string()),
    }
}

/// Strict `a < b` between two enclosures, refining up to a fixed budget.
fn certainly_less(a: impl Fn(u32) -> Result<RationalInterval>, b: impl Fn(u32) -> Result<RationalInterval>) -> Result<Option<bool>> {
    for bits in [32, 64, 128, 256] {
        let (x, y) = (a(bits)?, b(bits)?);
        match x.cmp_certain(&y) {
            Some(Ordering::Less) => return Ok(Some(true)),
            Some(_) => return Ok(Some(false)),
            None => {}
        }
    }
    Ok(None)
}

/// Finite-versus-infinite comparison: `Γ_{H+P_k} < Γ_{H+P∞}` for all `k ≥ k₀`.
pub fn check_gamma_lower(ctx: &TailContext, k0: usize) -> Result<TailCertificate> {
    if k0 == 0 {
        return Err(Error::InvalidArgument("k0 must be at least 1".into()));
    }
    let hk = build::attach_path(&ctx.base, ctx.v, k0)?;
    let t_k0 = r_of_graph(&hk)?;
    let dj = ctx.j_hat.derivative();
    let (p1, e1) = positive_on_open(&dj, &t_k0, &ctx.t_inf);
    let (p2, e2) = positive_on_open(&ctx.f_hat, &t_k0, &ctx.t_inf);
    let range = format!("t ∈ (r(λ_{{H+P_{k0}}}), t∞) ≈ ({:.6}, {:.6})", t_k0.to_f64(), ctx.t_inf.to_f64());
    let conditions = vec![
        Condition::new("(i)", "Ĵ'(t) > 0, so J is increasing", p1, format!("{range}: Ĵ' {e1}")),
        Condition::new("(ii)", "f̂(t) ≥ 0", p2, format!("{range}: f̂ {e2}")),
    ];
    let eps = dyadic_eps(BITS);
    Ok(TailCertificate {
        check: "gamma-lower".into(),
        base: ctx.graph6(),
        v: ctx.v,
        o: ctx.o,
        params: TailParams { k: k0, lambda1: None, lambda2: None, c: None },
        lambda_inf: ctx.lambda_inf.clone().refined(&eps).enclosure().round_outward(BITS),
        gamma_inf: ctx.gamma_inf(&eps)?.round_outward(BITS),
        gamma_inf_upper: ctx.gamma_inf_upper(BITS)?,
        pass: conditions.iter().all(|c| c.pass),
        conditions,
        notes: vec![],
    })
}

/// Branching-tail certificate: conditions (i)–(viii) for `H`, `o`, `v`, `k`, `λ'`, `λ''`, `c`.
pub fn check_gamma_upper(ctx: &TailContext, k: usize, lambda1: &BigRational, lambda2: &BigRational, c: &BigRational) -> Result<TailCertificate> {
    let o = ctx.o.ok_or_else(|| Error::InvalidArgument("the branching-tail certificate needs a master vertex o".into()))?;
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    if lambda1 >= lambda2 {
        return Err(Error::InvalidArgument("need λ' < λ''".into()));
    }
    if ctx.lambda_inf.cmp_rational(lambda1) != Ordering::Less {
        return Err(Error::InvalidArgument("need λ∞ < λ'".into()));
    }
    if c < &BigRational::one() {
        return Err(Error::InvalidArgument("need c ≥ 1".into()));
    }
    let mut notes = Vec::new();
    if c.is_one() {
        notes.push("c = 1 used; the hypothesis line asks for c > 1, the argument only uses c ≥ 1".into());
    }
    let eps = dyadic_eps(BITS);
    let beta_up = ctx.gamma_inf_upper(BITS)?;
    let beta_c = rf_const(&beta_up, Var::T);
    let beta_c_lambda = rf_const(&beta_up, Var::Lambda);
    let r1 = r_of(lambda1)?;
    let t_inf = &ctx.t_inf;
    let mut conds = Vec::new();

    // (i) 2λ∞ + 3 > β∞
    let lam = ctx.lambda_inf.clone();
    let ok = certainly_less(
        |b| ctx.gamma_inf(&dyadic_eps(b)),
        |b| {
            let l = lam.clone().refined(&dyadic_eps(b)).enclosure();
            Ok(&l.scale(&rat_int(2)) + &RationalInterval::point(rat_int(3)))
        },
    )?;
    conds.push(Condition::new(
        "(i)",
        "2λ∞ + 3 > β∞",
        ok == Some(true),
        format!("2λ∞+3 ≈ {:.6}, β∞ ≈ {:.6}", 2.0 * lam.to_f64() + 3.0, ctx.gamma_inf(&eps)?.mid_f64()),
    ));

    // (ii) B_{o,v}(λ'') ≤ 1
    let bov = ctx.b_entry(o, ctx.v)?.eval(lambda2)?;
    conds.push(Condition::new("(ii)", "B_{o,v}(λ'') ≤ 1", bov <= BigRational::one(), format!("B_{{o,v}}(λ'') = {:.6}", rat_to_f64(&bov))));

    // (iii) B_{v,v}(λ') ≥ 1/r∞, i.e. B_{v,v}(λ')·t∞ ≥ 1
    let bvv = ctx.b_entry(ctx.v, ctx.v)?.eval(lambda1)?;
    let recip = |b: u32| -> Result<RationalInterval> { t_inf.clone().refined(&dyadic_eps(b)).enclosure().recip() };
    let ok = certainly_less(recip, |_| Ok(RationalInterval::point(bvv.clone())))?;
    conds.push(Condition::new(
        "(iii)",
        "B_{v,v}(λ') ≥ 1/r(λ∞)",
        ok == Some(true),
        format!("B_{{v,v}}(λ') = {:.6}, 1/r∞ ≈ {:.6}", rat_to_f64(&bvv), 1.0 / t_inf.to_f64()),
    ));

    // (iv) (S+1)²/(T+1) > β∞ on [λ', λ'']
    let one_l = RationalFunction::constant(1, Var::Lambda);
    let f4 = ctx.s.add(&one_l).square().div(&ctx.t.add(&one_l))?.sub(&beta_c_lambda);
    let v4 = sign_on_interval(&f4, &RationalInterval::new(lambda1.clone(), lambda2.clone()))?;
    conds.push(Condition::new("(iv)", "(S+1)²/(T+1) > β∞ on [λ', λ'']", v4.is_positive(), format!("(S+1)²/(T+1) − β' {}", verdict_text(&v4))));

    // (v) J increasing on (λ∞, λ'), or J > β∞ there
    let (p5, e5) = condition_v(ctx, &r1, &beta_c)?;
    conds.push(Condition::new("(v)", "J increasing on (λ∞, λ'), or J > β∞ there", p5, e5));

    // (vi), (vii)
    let cc = rf_const(c, Var::T);
    let base_num = ctx.s_hat.add(&rf_int(1));
    let base_den = ctx.t_hat.add(&rf_int(1));
    let f6 = base_num.add(&cc).square().div(&base_den.add(&cc.square()))?.sub(&beta_c);
    let (p6, e6) = positive_on_open(&f6, t_inf, &r1);
    conds.push(Condition::new("(vi)", "(Ŝ+1+c)²/(T̂+1+c²) > β∞ on (r∞, r')", p6, format!("minus β' {e6}")));
    let ct = cc.mul(&rf_poly(&[0, 1]));
    let f7 = base_num.add(&ct).square().div(&base_den.add(&ct.square()))?.sub(&beta_c);
    let (p7, e7) = positive_on_open(&f7, t_inf, &r1);
    conds.push(Condition::new("(vii)", "(Ŝ+1+ct)²/(T̂+1+c²t²) > β∞ on (r∞, r')", p7, format!("minus β' {e7}")));

    // (viii)
    let (p8, e8) = condition_viii(ctx, k, c, &beta_up, &r1)?;
    let floor = BigRational::from_integer(2.into()) + BigRational::new(1.into(), BigInt::from(k * (k + 1)));
    let extends = ctx.lambda_inf.cmp_rational(&floor) != Ordering::Less;
    if extends {
        notes.push(format!("λ∞ ≥ 2 + 1/({k}·{}), so (viii) at k = {k} covers every larger k", k + 1));
    }
    conds.push(Condition::new("(viii)", "tail-branching inequality ≥ c on (r∞, r')", p8, e8));

    Ok(TailCertificate {
        check: "gamma-upper".into(),
        base: ctx.graph6(),
        v: ctx.v,
        o: Some(o),
        params: TailParams { k, lambda1: Some(lambda1.clone()), lambda2: Some(lambda2.clone()), c: Some(c.clone()) },
        lambda_inf: ctx.lambda_inf.clone().refined(&eps).enclosure().round_outward(BITS),
        gamma_inf: ctx.gamma_inf(&eps)?.round_outward(BITS),
        gamma_inf_upper: beta_up,
        pass: conds.iter().all(|c| c.pass),
        conditions: conds,
        notes,
    })
}

/// Derivative sign first; otherwise `Ĵ' > 0` on `(t∞, a)` plus `Ĵ > β'` on `(a, r')`.
fn condition_v(ctx: &TailContext, r1: &AlgebraicReal, beta_c: &RationalFunction) -> Result<(bool, String)> {
    let dj = ctx.j_hat.derivative();
    let (ok, e) = positive_on_open(&dj, &ctx.t_inf, r1);
    if ok {
        return Ok((true, format!("derivative branch: Ĵ' {e}")));
    }
    let diff = ctx.j_hat.sub(beta_c);
    let mut a = point_between(&ctx.t_inf, r1);
    for _ in 0..16 {
        let aa = AlgebraicReal::rational(a.clone());
        let (inc, _) = positive_on_open(&dj, &ctx.t_inf, &aa);
        let (above, _) = positive_on_open(&diff, &aa, r1);
        if inc && above {
            return Ok((true, format!("value branch: Ĵ increasing up to t = {:.6}, above β' beyond", rat_to_f64(&a))));
        }
        a = (&a + ctx.t_inf.hi()) / rat_int(2);
    }
    Ok((false, format!("both branches failed; derivative: {e}")))
}

/// `[(2/β)(Ŝ + t/(t−1))(1 − (t+1)/(t−1)·t^{-k}) − 2k t^{-k}] / (t³/(t²−1)) ≥ c`.
///
/// Run with `β' ≥ β∞`. The factor multiplying `2/β` is certified positive,
/// so the left side only shrinks when `β∞` is replaced by `β'`.
fn condition_viii(ctx: &TailContext, k: usize, c: &BigRational, beta_up: &BigRational, r1: &AlgebraicReal) -> Result<(bool, String)> {
    let tk = t_pow_neg(k);
    let ratio = RationalFunction::new(IntPoly::from_i64(&[1, 1]), IntPoly::from_i64(&[-1, 1]), Var::T)?;
    let second = rf_int(1).sub(&ratio.mul(&tk));
    let first = ctx.s_hat.add(&geometric_sum());
    let product = first.mul(&second);
    let (prod_pos, ep) = positive_on_open(&product, &ctx.t_inf, r1);
    let two_over_beta = rf_const(&(rat_int(2) / beta_up), Var::T);
    let numer = two_over_beta.mul(&product).sub(&rf_const(&rat_int(2 * k as i64), Var::T).mul(&tk));
    let denom = RationalFunction::new(IntPoly::from_i64(&[0, 0, 0, 1]), IntPoly::from_i64(&[-1, 0, 1]), Var::T)?;
    let lhs = numer.div(&denom)?.sub(&rf_const(c, Var::T));
    let (ok, e) = positive_on_open(&lhs, &ctx.t_inf, r1);
    Ok((ok && prod_pos, format!("factor {ep}; left side minus c {e}")))
}

/// `λ_{H+P_k} < λ∞ < λ_{H+F_{k,2}}`, decided exactly.
pub fn lambda_sandwich_audit(h: &Graph, v: usize, k: usize) -> Result<bool> {
    let ctx = build_tail_context(h, v, None)?;
    let lp = AlgebraicReal::largest_root(&bareiss_char_poly(&build::attach_path(h, v, k)?.adjacency_matrix())?)?;
    let lf = AlgebraicReal::largest_root(&bareiss_char_poly(&build::attach_fork(h, v, k, 2)?.adjacency_matrix())?)?;
    Ok(lp.cmp_exact(&ctx.lambda_inf) == Ordering::Less && ctx.lambda_inf.cmp_exact(&lf) == Ordering::Less)
}

/// Sampled `Ĵ(t)` for plotting.
pub fn j_hat_curve(ctx: &TailContext, lo: f64, hi: f64, samples: usize) -> Vec<(f64, f64)> {
    let n = samples.max(2);
    (0..n)
        .map(|i| {
            let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            (t, ctx.j_hat.eval_f64(t))
        })
        .collect()
}

/// The vector of `H + P_m` built from the infinite-tail eigenvector:
/// `B_{u,v}(λ∞)` on `H`, then `r∞^{-i}` along the path.
pub fn infinite_tail_vector(ctx: &TailContext, m: usize, eps: &BigRational) -> Result<Vec<RationalInterval>> {
    let lam = ctx.lambda_inf.clone().refined(eps);
    let mut x = Vec::with_capacity(ctx.base.n() + m);
    for u in 0..ctx.base.n() {
        x.push(lam.eval_ratio(&ctx.resolvent.adjugate[u][ctx.v], &ctx.resolvent.char_poly, eps)?);
    }
    let rinv = ctx.t_inf.clone().refined(eps).enclosure().recip()?;
    let mut w = RationalInterval::point(BigRational::one());
    for _ in 0..m {
        x.push(w.clone());
        w = &w * &rinv;
    }
    Ok(x)
}

/// The Perron vector of `H + P_k` from the pendant-path recurrence with
/// `α = −r^{-k}/(r^k − r^{-k})`, normalized to `x_{w₀} = 1`.
pub fn finite_tail_vector(ctx: &TailContext, k: usize, eps: &BigRational) -> Result<Vec<RationalInterval>> {
    let hk = build::attach_path(&ctx.base, ctx.v, k)?;
    let mut lam = AlgebraicReal::largest_root(&bareiss_char_poly(&hk.adjacency_matrix())?)?;
    lam.refine(eps);
    let r = r_of_graph(&hk)?.refined(eps).enclosure();
    let rk = r.pow(k as u32);
    let rmk = rk.recip()?;
    let alpha = (&(-&rmk) / &(&rk - &rmk))?;
    let one = RationalInterval::point(BigRational::one());
    let mut x = Vec::with_capacity(hk.n());
    for u in 0..ctx.base.n() {
        x.push(lam.eval_ratio(&ctx.resolvent.adjugate[u][ctx.v], &ctx.resolvent.char_poly, eps)?);
    }
    for i in 0..k {
        let ri = r.pow(i as u32);
        let rmi = ri.recip()?;
        x.push(&(&alpha * &ri) + &(&(&one - &alpha) * &rmi));
    }
    Ok(x)
}
