//! Kernel-stage drivers: the 6-vertex graph stage, the 10-vertex tree stage,
//! two-step verification, active-vertex-elimination and branch-point checks.

pub mod prove;

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::interval::dyadic_eps;
use crate::beta::Beta;
use crate::bounds::{members, nonempty_subsets, set_of, singletons, verify_extension, ExtensionReport, Guard, KernelContext, PairVerdict, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::{active_vertices, canonical_graph, build, enumerate_graph_kernels, enumerate_tree_kernels, to_graph6, Graph, KernelKind, RootedKernel};
use crate::spectral::{GammaValue, Perron};

/// Largest kernel reached by extending along a single remaining endpoint.
pub const CHAIN_MAX: usize = 13;

/// Failing pairs kept verbatim in a report.
const KEEP_FAILURES: usize = 8;

/// Pass/fail summary of one `𝒰`-extension check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub kernel: String,
    pub family: Vec<Vec<usize>>,
    pub pairs: usize,
    pub failure_count: usize,
    pub failures: Vec<PairVerdict>,
    pub pass: bool,
}

impl From<&ExtensionReport> for CheckSummary {
    fn from(r: &ExtensionReport) -> Self {
        let fails: Vec<&PairVerdict> = r.failures().collect();
        CheckSummary {
            kernel: r.kernel.clone(),
            family: r.family.clone(),
            pairs: r.pairs.len(),
            failure_count: fails.len(),
            failures: fails.into_iter().take(KEEP_FAILURES).cloned().collect(),
            pass: r.pass,
        }
    }
}

/// A single graph left over by a stage, with `Γ` decided against `β`.
#[derive(Clone, Debug, Serialize)]
pub struct Leftover {
    pub graph6: String,
    pub n: usize,
    pub from_kernel: String,
    pub gamma: GammaValue,
    pub below: bool,
}

fn leftover(g: &Graph, from: &RootedKernel, beta: &Beta) -> Result<Leftover> {
    let p = Perron::new(g)?;
    let gamma = p.gamma_value(&dyadic_eps(40));
    let below = p.cmp_gamma_with(beta, &gamma.value) == Ordering::Less;
    Ok(Leftover { graph6: to_graph6(&canonical_graph(g, None)), n: g.n(), from_kernel: from.id(), gamma, below })
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoStep {
    pub leaf: usize,
    pub step1: CheckSummary,
    pub step2: CheckSummary,
    pub leftover: Leftover,
}

impl TwoStep {
    pub fn pass(&self) -> bool {
        self.step1.pass && self.step2.pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationStep {
    pub kernel: String,
    pub removed: Vec<usize>,
    pub remaining: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    DirectPass,
    /// Failures were exactly `({v},{v})` for a leaf `v`, and both steps passed.
    ExceptionalHandled { two_step: TwoStep },
    /// Active-vertex-elimination emptied `V_act`, possibly after extending
    /// through a single remaining endpoint.
    Eliminated { steps: Vec<EliminationStep> },
    Survivor { steps: Vec<EliminationStep> },
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelResult {
    pub kernel: String,
    pub active: Vec<usize>,
    pub direct: CheckSummary,
    pub outcome: Outcome,
}

impl KernelResult {
    pub fn is_survivor(&self) -> bool {
        matches!(self.outcome, Outcome::Survivor { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageReport {
    pub kind: KernelKind,
    pub beta: Beta,
    pub kernel_count: usize,
    pub direct_pass: usize,
    pub handled: usize,
    pub survivors: Vec<String>,
    pub pairs_checked: usize,
    pub kernels: Vec<KernelResult>,
    /// Single graphs met along the way, each with a certified `Γ` verdict.
    pub leftovers: Vec<Leftover>,
    pub elapsed_ms: u64,
}

impl StageReport {
    pub fn result(&self, kernel: &RootedKernel) -> Option<&KernelResult> {
        let cf = kernel.canonical().id();
        self.kernels.iter().find(|r| r.kernel == cf)
    }

    /// Leftovers with `Γ < β`.
    pub fn below(&self) -> impl Iterator<Item = &Leftover> {
        self.leftovers.iter().filter(|l| l.below)
    }

    /// Counts, then one table row per kernel that did not pass directly.
    pub fn to_markdown(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} kernels at β = {}: {} direct passes, {} handled, {} survivors, {} pairs checked.\n",
            self.kernel_count,
            self.beta.label(),
            self.direct_pass,
            self.handled,
            self.survivors.len(),
            self.pairs_checked
        );
        let _ = writeln!(s, "| kernel | V_act | pairs | failures | outcome |\n|---|---|---|---|---|");
        for k in self.kernels.iter().filter(|k| !matches!(k.outcome, Outcome::DirectPass)) {
            let outcome = match &k.outcome {
                Outcome::DirectPass => "direct",
                Outcome::ExceptionalHandled { .. } => "two-step",
                Outcome::Eliminated { .. } => "eliminated",
                Outcome::Survivor { .. } => "survivor",
            };
            let _ = writeln!(s, "| `{}` | {:?} | {} | {} | {} |", k.kernel, k.active, k.direct.pairs, k.direct.failure_count, outcome);
        }
        let _ = writeln!(s);
        for l in &self.leftovers {
            let _ = writeln!(s, "- leftover `{}` (n = {}): Γ ≈ {:.7}{}", l.graph6, l.n, l.gamma.mid_f64(), if l.below { ", below β" } else { "" });
        }
        s
    }
}

fn check(kernel: &RootedKernel, family: &[VertexSet], beta: &Beta, guard: Guard) -> Result<ExtensionReport> {
    let ctx = KernelContext::new(kernel.clone())?;
    verify_extension(&ctx, family, beta, guard)
}

/// The leaf `v` if every failure is the pair `({v},{v})`.
fn exceptional_leaf(kernel: &RootedKernel, report: &ExtensionReport) -> Option<usize> {
    let mut leaf = None;
    for f in report.failures() {
        if f.u.len() != 1 || f.u != f.v {
            return None;
        }
        let v = f.u[0];
        if kernel.graph.degree(v) != 1 || leaf.is_some_and(|l| l != v) {
            return None;
        }
        leaf = Some(v);
    }
    leaf
}

/// Step 1 checks `P₊(V_act) ∖ {{v}}` on the kernel. Step 2 checks
/// `P₊(V_act ∪ {w})` on `H⁺ = H +_v P₁`, whose own `Γ` is left for the caller.
pub fn two_step_verify(kernel: &RootedKernel, v: usize, beta: &Beta) -> Result<TwoStep> {
    if kernel.graph.degree(v) != 1 {
        return Err(Error::Precondition(format!("vertex {v} is not a leaf")));
    }
    let active = active_vertices(kernel, KernelKind::Graph)?.vertices;
    if !active.contains(&v) {
        return Err(Error::Precondition(format!("vertex {v} is not active")));
    }
    let fam1: Vec<VertexSet> = nonempty_subsets(&active).into_iter().filter(|&s| s != 1 << v).collect();
    let step1 = check(kernel, &fam1, beta, Guard::Basic)?;

    let plus = build::attach_path(&kernel.graph, v, 1)?;
    let w = plus.n() - 1;
    let mut active2 = active.clone();
    active2.push(w);
    let k2 = RootedKernel::new(plus.clone(), kernel.root)?;
    let step2 = check(&k2, &nonempty_subsets(&active2), beta, Guard::Basic)?;
    Ok(TwoStep { leaf: v, step1: (&step1).into(), step2: (&step2).into(), leftover: leftover(&plus, kernel, beta)? })
}

fn run_parallel<F>(kernels: Vec<RootedKernel>, f: F) -> Result<Vec<(KernelResult, Vec<Leftover>)>>
where
    F: Fn(&RootedKernel) -> Result<(KernelResult, Vec<Leftover>)> + Sync + Send,
{
    let mut out = kernels.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.0.kernel.cmp(&b.0.kernel));
    Ok(out)
}

fn assemble(kind: KernelKind, beta: &Beta, results: Vec<(KernelResult, Vec<Leftover>)>, start: Instant) -> StageReport {
    let mut kernels = Vec::with_capacity(results.len());
    let mut leftovers = Vec::new();
    for (r, l) in results {
        kernels.push(r);
        leftovers.extend(l);
    }
    leftovers.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    leftovers.dedup_by(|a, b| a.graph6 == b.graph6);
    StageReport {
        kind,
        beta: beta.clone(),
        kernel_count: kernels.len(),
        direct_pass: kernels.iter().filter(|r| matches!(r.outcome, Outcome::DirectPass)).count(),
        handled: kernels.iter().filter(|r| matches!(r.outcome, Outcome::ExceptionalHandled { .. } | Outcome::Eliminated { .. })).count(),
        survivors: kernels.iter().filter(|r| r.is_survivor()).map(|r| r.kernel.clone()).collect(),
        pairs_checked: kernels.iter().map(|r| r.direct.pairs).sum(),
        kernels,
        leftovers,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Every 6-vertex graph kernel checked with `𝒰 = P₊(V_act)`.
pub fn graph_kernel_stage(beta: &Beta) -> Result<StageReport> {
    graph_kernel_stage_on(enumerate_graph_kernels(), beta)
}

pub fn graph_kernel_stage_on(kernels: Vec<RootedKernel>, beta: &Beta) -> Result<StageReport> {
    Guard::Basic.check(beta)?;
    let start = Instant::now();
    let results = run_parallel(kernels, |k| {
        let k = k.canonical();
        let active = active_vertices(&k, KernelKind::Graph)?.vertices;
        let direct = check(&k, &nonempty_subsets(&active), beta, Guard::Basic)?;
        let (outcome, left) = if direct.pass {
            (Outcome::DirectPass, vec![])
        } else if let Some(v) = exceptional_leaf(&k, &direct) {
            let two = two_step_verify(&k, v, beta)?;
            let left = vec![two.leftover.clone()];
            if two.pass() {
                (Outcome::ExceptionalHandled { two_step: two }, left)
            } else {
                (Outcome::Survivor { steps: vec![] }, left)
            }
        } else {
            (Outcome::Survivor { steps: vec![] }, vec![])
        };
        Ok((KernelResult { kernel: k.id(), active, direct: (&direct).into(), outcome }, left))
    })?;
    Ok(assemble(KernelKind::Graph, beta, results, start))
}

/// Result of active-vertex-elimination on one tree kernel.
#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    pub removed: Vec<usize>,
    pub remaining: Vec<usize>,
    /// The trees `H +_u P₁` for every removed `u`.
    #[serde(skip)]
    pub examined: Vec<Graph>,
}

/// Repeatedly try each active `u`: if `H' = H +_u P₁` passes the singleton
/// check over `V_act ∪ {w}`, drop `u`. Stops when a full sweep removes nothing.
pub fn active_vertex_elimination(kernel: &RootedKernel, active: &[usize], beta: &Beta) -> Result<Elimination> {
    Guard::DistanceTwo.check(beta)?;
    let mut current: Vec<usize> = active.to_vec();
    current.sort_unstable();
    let mut removed = Vec::new();
    let mut examined = Vec::new();
    loop {
        let mut progress = false;
        for u in current.clone() {
            let h = build::attach_path(&kernel.graph, u, 1)?;
            let w = h.n() - 1;
            let mut fam: Vec<usize> = current.clone();
            fam.push(w);
            let k2 = RootedKernel::new(h.clone(), kernel.root)?;
            if check(&k2, &singletons(&fam), beta, Guard::DistanceTwo)?.pass {
                current.retain(|&x| x != u);
                removed.push(u);
                examined.push(h);
                progress = true;
            }
        }
        if !progress || current.is_empty() {
            break;
        }
    }
    Ok(Elimination { removed, remaining: current, examined })
}

/// Elimination, extended through a lone remaining leaf up to `CHAIN_MAX` vertices.
/// Returns the outcome and every single tree met on the way.
fn eliminate_with_chain(kernel: &RootedKernel, active: &[usize], beta: &Beta) -> Result<(Outcome, Vec<Graph>)> {
    let mut k = kernel.clone();
    let mut act = active.to_vec();
    let mut steps = Vec::new();
    let mut singles = Vec::new();
    loop {
        let e = active_vertex_elimination(&k, &act, beta)?;
        singles.extend(e.examined);
        steps.push(EliminationStep { kernel: k.id(), removed: e.removed.clone(), remaining: e.remaining.clone() });
        if e.remaining.is_empty() {
            return Ok((Outcome::Eliminated { steps }, singles));
        }
        let end = e.remaining[0];
        let extendable = e.remaining.len() == 1 && !e.removed.is_empty() && k.graph.degree(end) == 1 && k.graph.n() < CHAIN_MAX;
        if !extendable {
            return Ok((Outcome::Survivor { steps }, singles));
        }
        let next = build::attach_path(&k.graph, end, 1)?;
        act = vec![end, next.n() - 1];
        singles.push(next.clone());
        k = RootedKernel::new(next, k.root)?;
    }
}

/// Every 10-vertex tree kernel checked with the singletons of `V_act`.
pub fn tree_kernel_stage(beta: &Beta) -> Result<StageReport> {
    tree_kernel_stage_on(enumerate_tree_kernels(), beta)
}

pub fn tree_kernel_stage_on(kernels: Vec<RootedKernel>, beta: &Beta) -> Result<StageReport> {
    Guard::DistanceTwo.check(beta)?;
    let start = Instant::now();
    let results = run_parallel(kernels, |k| {
        let k = k.canonical();
        let active = active_vertices(&k, KernelKind::Tree)?.vertices;
        let direct = check(&k, &singletons(&active), beta, Guard::DistanceTwo)?;
        let (outcome, left) = if direct.pass {
            (Outcome::DirectPass, vec![])
        } else {
            let (outcome, singles) = eliminate_with_chain(&k, &active, beta)?;
            // A surviving kernel is carried forward whole, so its single trees need no separate check.
            let left = match outcome {
                Outcome::Eliminated { .. } => singles.iter().map(|g| leftover(g, &k, beta)).collect::<Result<Vec<_>>>()?,
                _ => vec![],
            };
            (outcome, left)
        };
        Ok((KernelResult { kernel: k.id(), active, direct: (&direct).into(), outcome }, left))
    })?;
    Ok(assemble(KernelKind::Tree, beta, results, start))
}

/// Whether some 4-clique through `o` has at least two edges leaving it.
pub fn has_loaded_four_clique(k: &RootedKernel) -> bool {
    let g = &k.graph;
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != k.root).collect();
    let n = others.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let clique = [k.root, others[a], others[b], others[c]];
                let is_clique = clique.iter().enumerate().all(|(i, &x)| clique[i + 1..].iter().all(|&y| g.has_edge(x, y)));
                if !is_clique {
                    continue;
                }
                let mask = set_of(&clique);
                let boundary: u32 = clique.iter().map(|&x| (g.row(x) & !mask).count_ones()).sum();
                if boundary >= 2 {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralLemma {
    /// Kernels with a 4-clique at `o` carrying two or more boundary edges.
    pub loaded_kernels: Vec<String>,
    pub survivors_among_them: Vec<String>,
    pub pass: bool,
}

/// No graph kernel with a 4-clique at `o` and a second clique-boundary edge survives.
pub fn structural_lemma(stage: &StageReport) -> Result<StructuralLemma> {
    let mut loaded = Vec::new();
    let mut bad = Vec::new();
    for r in &stage.kernels {
        let (g6, root) = r.kernel.rsplit_once(':').ok_or_else(|| Error::Parse(r.kernel.clone()))?;
        let root: usize = root.parse().map_err(|_| Error::Parse(r.kernel.clone()))?;
        let k = RootedKernel::new(crate::graphs::parse_graph6(g6)?, root)?;
        if has_loaded_four_clique(&k) {
            loaded.push(r.kernel.clone());
            if r.is_survivor() {
                bad.push(r.kernel.clone());
            }
        }
    }
    Ok(StructuralLemma { pass: bad.is_empty() && !loaded.is_empty(), loaded_kernels: loaded, survivors_among_them: bad })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchBase {
    K4,
    S5,
}

/// `H` for the branch-point argument: base rooted at `o = 0`, a path of
/// length `ℓ` to `v`, and two further neighbors `v', v''` (adjacent if `triangle`).
/// Returns the graph and `[v, v', v'']`.
pub fn branch_kernel(base: BranchBase, ell: usize, triangle: bool) -> Result<(Graph, [usize; 3])> {
    let h = match base {
        BranchBase::K4 => build::complete(4),
        BranchBase::S5 => build::star(5),
    };
    let mut g = build::attach_path(&h, 0, ell)?;
    let v = g.n() - 1;
    let v1 = g.add_vertex()?;
    let v2 = g.add_vertex()?;
    g.add_edge(v, v1)?;
    g.add_edge(v, v2)?;
    if triangle {
        g.add_edge(v1, v2)?;
    }
    Ok((g, [v, v1, v2]))
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchCheck {
    pub base: BranchBase,
    pub ell: usize,
    pub triangle: bool,
    pub check: CheckSummary,
}

/// `K₄`: `ℓ ∈ {1, 2}`, cherry and triangle, `𝒰 = P₊({v, v', v''})`.
/// `S₅`: `ℓ ∈ 4..=7`, cherry only, singletons.
pub fn branch_point_check(base: BranchBase, ell: usize, beta: &Beta) -> Result<Vec<BranchCheck>> {
    let (range, variants, guard): (std::ops::RangeInclusive<usize>, &[bool], Guard) = match base {
        BranchBase::K4 => (1..=2, &[false, true], Guard::Basic),
        BranchBase::S5 => (4..=7, &[false], Guard::DistanceTwo),
    };
    if !range.contains(&ell) {
        return Err(Error::InvalidArgument(format!(
            "branch distance {ell} is outside {}..={} for {base:?}; longer paths are covered by the branching-tail certificate",
            range.start(),
            range.end()
        )));
    }
    variants
        .iter()
        .map(|&triangle| {
            let (g, act) = branch_kernel(base, ell, triangle)?;
            let fam = match base {
                BranchBase::K4 => nonempty_subsets(&act),
                BranchBase::S5 => singletons(&act),
            };
            let r = check(&RootedKernel::new(g, 0)?, &fam, beta, guard)?;
            Ok(BranchCheck { base, ell, triangle, check: (&r).into() })
        })
        .collect()
}

/// Vertex sets of a family in member form, for reports.
pub fn family_members(f: &[VertexSet]) -> Vec<Vec<usize>> {
    f.iter().map(|&s| members(s)).collect()
}
