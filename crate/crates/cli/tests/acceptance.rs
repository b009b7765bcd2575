//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL` line, then fails if any check in it failed.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use gammacert::algebra::interval::{dyadic_eps, rat, RationalInterval};
use gammacert::algebra::{IntPoly, RationalFunction};
use gammacert::bounds::{c_poly, check_pair, lambda_u, nonempty_subsets, pb_column, pb_tilde_column, q_poly_rational, s_poly, set_of, KernelContext};
use gammacert::graphs::{build, canonical_graph, enumerate_connected_graphs, enumerate_graph_kernels, enumerate_tree_kernels, enumerate_trees, parse_graph6, to_graph6, Graph, KernelKind, RootedKernel};
use gammacert::kernels::{graph_kernel_stage, tree_kernel_stage, Outcome};
use gammacert::spectral::vectors::{gamma_of_mix, perturb, perturbation_threshold, reverse_am_qm_bound};
use gammacert::spectral::{beta_d, gamma_of, min_gamma_table, perron_enclosure, Perron};
use gammacert::tails::{build_tail_context, check_gamma_lower, check_gamma_upper, lambda_sandwich_audit};
use gammacert::Beta;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

struct Criterion {
    id: u8,
    title: &'static str,
    start: Instant,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion { id, title, start: Instant::now(), failures: vec![], notes: vec![] }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, format!("{what}: expected {want:?}, got {got:?}"));
    }

    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        self.check((got - want).abs() <= tol, format!("{what}: expected {want} ± {tol}, got {got}"));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, limit: Duration) {
        let t = self.start.elapsed();
        self.note(format!("{:.1} s", t.as_secs_f64()));
        self.check(t <= limit, format!("runtime {:.1} s exceeds {} s", t.as_secs_f64(), limit.as_secs()));
    }

    fn finish(self) {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut detail = self.notes.join("; ");
        if !self.failures.is_empty() {
            detail = format!("{}{}", self.failures.join("; "), if detail.is_empty() { String::new() } else { format!(" ({detail})") });
        }
        // Written to the raw handle so the line shows without --nocapture.
        let sep = if detail.is_empty() { "" } else { ": " };
        let _ = writeln!(std::io::stdout().lock(), "criterion {:>2}: {verdict} {}{sep}{detail}", self.id, self.title);
        assert!(self.failures.is_empty(), "criterion {} failed: {:?}", self.id, self.failures);
    }
}

/// Coefficients (ascending) of a printed polynomial such as
/// `\lambda^{12} + 2 \lambda^{11} - \frac{57}{4} \lambda^{10} - 116 \lambda - \frac{269}{4}`.
fn parse_printed(text: &str, var: &str) -> Vec<BigRational> {
    let s = text.replace(var, "x").replace(' ', "").replace('{', "").replace('}', "");
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        let (coef, power) = match body.split_once('x') {
            None => (body, 0),
            Some((c, p)) => (c, p.strip_prefix('^').map_or(1, |e| e.parse().unwrap())),
        };
        let c = if coef.is_empty() {
            rat(1, 1)
        } else {
            gammacert::algebra::text::parse_rational(coef).unwrap()
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, rat(0, 1));
        }
        coeffs[power] += if neg { -c } else { c };
    }
    coeffs
}

/// `\frac{a}{b}` to `a/b` before the generic parser strips braces.
fn printed(text: &str, var: &str) -> Vec<BigRational> {
    let mut s = text.to_string();
    while let Some(i) = s.find("\\frac{") {
        let rest = &s[i + 6..];
        let a_end = rest.find('}').unwrap();
        let a = rest[..a_end].to_string();
        let rest2 = &rest[a_end + 2..];
        let b_end = rest2.find('}').unwrap();
        let b = rest2[..b_end].to_string();
        let tail = rest2[b_end + 1..].to_string();
        s = format!("{}{a}/{b}{tail}", &s[..i]);
    }
    parse_printed(&s, var)
}

fn int_coeffs(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()
}

/// `num/den` in lowest terms with a monic denominator.
fn normalized(num: Vec<BigRational>, den: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let lead = den.last().unwrap().clone();
    (num.into_iter().map(|c| c / &lead).collect(), den.into_iter().map(|c| c / &lead).collect())
}

fn reduced(f: &RationalFunction) -> (Vec<BigRational>, Vec<BigRational>) {
    let g = f.num().gcd(f.den());
    let n = f.num().div_exact(&g).unwrap();
    let d = f.den().div_exact(&g).unwrap();
    normalized(int_coeffs(&n), int_coeffs(&d))
}

fn rooted_iso(id: &str, want: &Graph, root: usize) -> bool {
    let (g6, r) = id.rsplit_once(':').unwrap();
    let k = RootedKernel::new(parse_graph6(g6).unwrap(), r.parse().unwrap()).unwrap();
    k.canonical_form() == RootedKernel::new(want.clone(), root).unwrap().canonical_form()
}

fn canonical_g6(g: &Graph) -> String {
    to_graph6(&canonical_graph(g, None))
}

/// `lo ≤ a + b√s ≤ hi` decided exactly, for `b > 0` and `a ≤ lo`.
fn contains_surd(iv: &RationalInterval, a: BigRational, b: BigRational, s: i64) -> bool {
    let lo = (&iv.lo - &a) / &b;
    let hi = (&iv.hi - &a) / &b;
    let s = rat(s, 1);
    lo >= rat(0, 1) && &lo * &lo <= s && s <= &hi * &hi
}

#[test]
fn criterion_01_enumeration_counts() {
    let mut c = Criterion::new(1, "enumeration counts");
    for (n, want) in (3..=7).zip([2, 6, 21, 112, 853]) {
        c.eq(&format!("connected graphs n={n}"), enumerate_connected_graphs(n).unwrap().len(), want);
    }
    for (n, want) in (3..=14).zip([1, 2, 3, 6, 11, 23, 47, 105, 235, 551, 1301, 3159]) {
        c.eq(&format!("trees n={n}"), enumerate_trees(n).unwrap().len(), want);
    }
    c.eq("graph kernels", enumerate_graph_kernels().len(), 155);
    c.eq("tree kernels", enumerate_tree_kernels().len(), 194);
    c.within(Duration::from_secs(60));
    c.finish();
}

#[test]
fn criterion_02_worked_example() {
    let mut c = Criterion::new(2, "worked example K3+P3");
    let lam = "\\lambda";
    let ctx = KernelContext::new(RootedKernel::new(build::attach_path(&build::complete(3), 0, 3).unwrap(), 0).unwrap()).unwrap();
    // Vertices 0..5 are o, v1, v2, u1, u2, u3.
    let u3 = set_of(&[5]);
    c.eq("P", int_coeffs(ctx.p()), printed("\\lambda^{6} - 6\\lambda^{4} - 2\\lambda^{3} + 8\\lambda^{2} + 4\\lambda - 1", lam));
    let column = [
        "\\lambda^{2} - 1",
        "\\lambda + 1",
        "\\lambda + 1",
        "\\lambda^{3} - 3\\lambda - 2",
        "\\lambda^{4} - 4\\lambda^{2} - 2\\lambda + 1",
        "\\lambda^{5} - 5\\lambda^{3} - 2\\lambda^{2} + 4\\lambda + 2",
    ];
    let ours = pb_column(&ctx, 5).unwrap();
    for (i, text) in column.iter().enumerate() {
        c.eq(&format!("adj[{i}][u3]"), int_coeffs(&ours[i]), printed(text, lam));
    }
    c.eq("P·B̃_(o,U)", int_coeffs(&pb_tilde_column(&ctx, u3).unwrap()[0]), printed("\\lambda^2-1", lam));
    c.eq("P·s_U", int_coeffs(&s_poly(&ctx, u3).unwrap()), printed("\\lambda^5+\\lambda^4-4\\lambda^3-5\\lambda^2+\\lambda+2", lam));
    c.eq(
        "P²·c_(U,U)",
        int_coeffs(&c_poly(&ctx, u3, u3).unwrap()),
        printed("\\lambda^{10} - 9\\lambda^{8} - 4\\lambda^{7} + 26\\lambda^{6} + 20\\lambda^{5} - 23\\lambda^{4} - 24\\lambda^{3} + 13\\lambda^{2} + 28\\lambda + 12", lam),
    );
    let q_text = "\\lambda^{12} + 2 \\lambda^{11} - \\frac{57}{4} \\lambda^{10} - 22 \\lambda^{9} + 61 \\lambda^{8} + 97 \\lambda^{7} - \\frac{327}{4} \\lambda^{6} - \\frac{357}{2} \\lambda^{5} - \\frac{55}{4} \\lambda^{4} + \\frac{225}{2} \\lambda^{3} + 10 \\lambda^{2} - 116 \\lambda - \\frac{269}{4}";
    let q = q_poly_rational(&ctx, u3, u3, &rat(21, 4)).unwrap();
    c.eq("Q at 21/4", q.coeffs().to_vec(), printed(q_text, lam));

    // Shift by λ_U: the constant term is Q(λ_U).
    let lu = lambda_u(&ctx, u3).unwrap().refined(&dyadic_eps(60)).enclosure();
    c.near("λ_{u3}", lu.mid_f64(), 2.2332, 5e-5);
    let shifted = q.taylor_shift(&lu.lo);
    let k0 = shifted.coeff(0);
    let k0_f = gammacert::algebra::interval::rat_to_f64(&k0);
    c.near("shifted constant", k0_f, -5.54, 0.01);
    let at_enclosure = lu.eval_poly(&q_poly_int(&ctx, u3));
    c.check(at_enclosure.is_negative(), "Q(λ_U) not certified negative");
    let printed_shift = [-5.54, 2162.81, 14485.75, 52219.63, 99776.84, 112535.68, 80880.76, 38599.44, 12408.0, 2658.62, 364.04, 28.8, 1.0];
    for (i, want) in printed_shift.iter().enumerate() {
        let got = gammacert::algebra::interval::rat_to_f64(&shifted.coeff(i));
        c.near(&format!("shifted κ^{i}"), got, *want, 0.01_f64.max(want.abs() * 1e-4));
    }
    c.note(format!("Q(λ_U) ≈ {k0_f:.4}"));

    let at_5_25 = check_pair(&ctx, u3, u3, &Beta::ratio(21, 4)).unwrap();
    c.check(!at_5_25.passed(), "pair ({u3},{u3}) passes at 21/4");
    let at_41_8 = check_pair(&ctx, u3, u3, &Beta::ratio(41, 8)).unwrap();
    c.check(matches!(at_41_8.verdict, gammacert::algebra::RayVerdict::ProvedByCoefficients), format!("41/8 verdict {:?}", at_41_8.verdict));
    let fails: Vec<_> = nonempty_subsets(&[4, 5])
        .iter()
        .flat_map(|&u| nonempty_subsets(&[4, 5]).into_iter().map(move |v| (u, v)))
        .filter(|&(u, v)| u <= v && !check_pair(&ctx, u, v, &Beta::ratio(21, 4)).unwrap().passed())
        .collect();
    c.eq("failing pairs at 21/4", fails, vec![(u3, u3)]);
    c.finish();
}

/// `2·4·Q` as an integer polynomial for enclosure evaluation.
fn q_poly_int(ctx: &KernelContext, u: u64) -> IntPoly {
    gammacert::bounds::q_poly(ctx, u, u, &rat(21, 4)).unwrap()
}

#[test]
fn criterion_03_graph_stage() {
    let mut c = Criterion::new(3, "graph kernel stage at 21/4");
    let r = graph_kernel_stage(&Beta::ratio(21, 4)).unwrap();
    let handled = r.kernels.iter().filter(|k| matches!(k.outcome, Outcome::ExceptionalHandled { .. })).count();
    c.eq("kernels", r.kernel_count, 155);
    c.eq("direct pass", r.direct_pass, 150);
    c.eq("two-step handled", handled, 4);
    c.eq("survivors", r.survivors.len(), 1);
    let k4p2 = build::attach_path(&build::complete(4), 0, 2).unwrap();
    c.check(r.survivors.first().is_some_and(|s| rooted_iso(s, &k4p2, 0)), format!("survivor {:?} is not (K4+P2, o)", r.survivors));
    for want in [5.28092, 5.180545, 5.287096] {
        match r.leftovers.iter().find(|l| (l.gamma.mid_f64() - want).abs() <= 1e-4) {
            None => c.check(false, format!("no leftover with Γ ≈ {want}")),
            Some(l) => {
                c.eq(&format!("{} below 5.25", l.graph6), l.below, want < 5.25);
                c.check(!l.gamma.value.contains(&rat(21, 4)), format!("{} not separated from 5.25", l.graph6));
            }
        }
    }
    c.note(format!("{} leftovers", r.leftovers.len()));
    c.within(Duration::from_secs(180));
    c.finish();
}

#[test]
fn criterion_04_tree_stage() {
    let mut c = Criterion::new(4, "tree kernel stage at 4+2√3");
    let r = tree_kernel_stage(&Beta::beta_tr()).unwrap();
    c.eq("kernels", r.kernel_count, 194);
    c.eq("direct pass", r.direct_pass, 191);
    let s5p5 = build::attach_path(&build::star(5), 0, 5).unwrap();
    c.eq("survivors", r.survivors.len(), 1);
    c.check(r.survivors.first().is_some_and(|s| rooted_iso(s, &s5p5, 0)), format!("survivor {:?} is not (S5+P5, o)", r.survivors));

    // The chain extends a kernel through its lone remaining leaf. It stops at
    // the 12-vertex S6+P6, whose extension at the leaf is S6+P7.
    let s6p6 = canonical_g6(&build::attach_path(&build::star(6), 0, 6).unwrap());
    let s6p7 = canonical_g6(&build::attach_path(&build::star(6), 0, 7).unwrap());
    let chains: Vec<(&str, &str)> = r
        .kernels
        .iter()
        .filter_map(|k| match &k.outcome {
            Outcome::Eliminated { steps } if steps.len() > 1 => Some((k.kernel.as_str(), steps.last().unwrap().kernel.as_str())),
            _ => None,
        })
        .collect();
    c.eq("chained eliminations", chains.len(), 1);
    for (from, last) in chains {
        let g = parse_graph6(last.rsplit_once(':').unwrap().0).unwrap();
        c.eq("last chain kernel", canonical_g6(&g), s6p6.clone());
        let trees: Vec<_> = r.leftovers.iter().filter(|l| l.from_kernel == from).collect();
        c.check(trees.iter().any(|l| l.graph6 == s6p7), "S6+P7 not met by the chain");
        c.eq("largest chain tree", trees.iter().map(|l| l.n).max(), Some(13));
    }

    let below: Vec<_> = r.leftovers.iter().filter(|l| l.below).collect();
    let mut got: Vec<String> = below.iter().map(|l| l.graph6.clone()).collect();
    let mut want: Vec<String> = (5..=7).map(|k| canonical_g6(&build::attach_path(&build::star(6), 0, k).unwrap())).collect();
    got.sort();
    want.sort();
    c.eq("exceptions", got, want);
    for (k, value) in (5..=7).zip([7.3371, 7.4158, 7.4571]) {
        let g6 = canonical_g6(&build::attach_path(&build::star(6), 0, k).unwrap());
        match below.iter().find(|l| l.graph6 == g6) {
            Some(l) => c.near(&format!("Γ(S6+P{k})"), l.gamma.mid_f64(), value, 1e-4),
            None => c.check(false, format!("S6+P{k} missing")),
        }
    }
    c.within(Duration::from_secs(180));
    c.finish();
}

#[test]
fn criterion_05_limiting_constants() {
    let mut c = Criterion::new(5, "limiting constants");
    let eps = dyadic_eps(34);
    let tol = rat(1, 1_000_000_000);
    let k4 = build_tail_context(&build::complete(4), 0, None).unwrap();
    let s5 = build_tail_context(&build::star(5), 0, None).unwrap();
    let cases = [
        ("Γ(K4+P∞)", k4.gamma_inf(&eps).unwrap(), rat(5, 2), rat(3, 2)),
        ("Γ(S5+P∞)", s5.gamma_inf(&eps).unwrap(), rat(4, 1), rat(2, 1)),
        ("λ(K4+P∞)", k4.lambda_inf.clone().refined(&eps).enclosure(), rat(1, 2), rat(3, 2)),
        ("λ(S5+P∞)", s5.lambda_inf.clone().refined(&eps).enclosure(), rat(0, 1), rat(4, 3)),
    ];
    for (name, iv, a, b) in cases {
        c.check(iv.width() <= tol, format!("{name} width {}", gammacert::algebra::interval::rat_to_f64(&iv.width())));
        c.check(contains_surd(&iv, a, b, 3), format!("{name} enclosure misses the closed form"));
    }
    let s6 = build_tail_context(&build::star(6), 0, None).unwrap();
    c.eq("Γ(S6+P∞)", s6.gamma_inf_exact(), Some(rat(15, 2)));
    c.check(Beta::beta_star().cmp_rational(&k4.gamma_inf(&eps).unwrap().hi).is_le(), "β★ constant disagrees");
    c.finish();
}

#[test]
fn criterion_06_tail_certificates() {
    let mut c = Criterion::new(6, "tail certificates");
    let k4 = build_tail_context(&build::complete(4), 0, None).unwrap();
    let s5 = build_tail_context(&build::star(5), 0, None).unwrap();
    c.check(check_gamma_lower(&k4, 1).unwrap().pass, "gamma-lower K4, k0 = 1");
    c.check(check_gamma_lower(&s5, 1).unwrap().pass, "gamma-lower S5, k0 = 1");
    let h = build::attach_path(&build::complete(4), 0, 1).unwrap();
    let up = check_gamma_upper(&build_tail_context(&h, 4, Some(0)).unwrap(), 2, &rat(311, 100), &rat(318, 100), &rat(1, 1)).unwrap();
    c.check(up.pass, "gamma-upper K4+P1");
    let h = build::attach_path(&build::star(5), 0, 4).unwrap();
    let up = check_gamma_upper(&build_tail_context(&h, h.n() - 1, Some(0)).unwrap(), 4, &rat(2312, 1000), &rat(234, 100), &rat(3, 2)).unwrap();
    c.check(up.pass, "gamma-upper S5+P4");
    let t = "t";
    let want_k4 = normalized(
        printed("t^7 - t^6 - 3t^5 - 3t^4 + 3t^3 + 9t^2 + 8t + 4", t),
        printed("t^7 - 5t^6 + 7t^5 - 7t^4 + 23t^3 - 19t^2 - 6t + 6", t),
    );
    let want_s5 = normalized(printed("t^{4} + 4t^{3} + 10t^{2} + 12t + 9", t), printed("t^{4} - 2t^{2} + 9", t));
    c.eq("Ĵ for K4", reduced(&k4.j_hat), want_k4);
    c.eq("Ĵ for S5", reduced(&s5.j_hat), want_s5);
    c.finish();
}

#[test]
fn criterion_07_tables() {
    let mut c = Criterion::new(7, "extremal tables and counts");
    let eps = dyadic_eps(40);
    let printed_rows: [(usize, &[f64]); 4] = [
        (3, &[2.91421, 3.0]),
        (4, &[3.73205, 3.75939, 3.78885, 3.940285, 4.0, 4.0]),
        (5, &[4.38971, 4.459684, 4.5, 4.51824, 4.5411, 4.5597, 4.5768, 4.60949, 4.64273, 4.76494]),
        (6, &[4.8777978, 4.895005, 4.955687, 5.02388867, 5.04214, 5.09963, 5.12132, 5.1367496]),
    ];
    let mut rows = 0;
    for (n, values) in printed_rows {
        let t = min_gamma_table(n, KernelKind::Graph, &Beta::beta_star(), &eps).unwrap();
        for (i, want) in values.iter().enumerate() {
            c.near(&format!("n={n} rank {}", i + 1), t.rows[i].gamma.mid_f64(), *want, 1e-4);
            rows += 1;
        }
    }
    c.note(format!("{rows} rows"));
    let p3 = Perron::new(&build::path(3)).unwrap().gamma_enclosure(&eps);
    c.near("Γ(P3)", p3.mid_f64(), 2.91421, 1e-4);
    c.eq("Γ(S5)", Perron::new(&build::star(5)).unwrap().gamma_exact(), Some(rat(9, 2)));
    let k4p2 = build::attach_path(&build::complete(4), 0, 2).unwrap();
    c.near("Γ(K4+P2)", Perron::new(&k4p2).unwrap().gamma_enclosure(&eps).mid_f64(), 4.8777978, 1e-4);
    let t6 = min_gamma_table(6, KernelKind::Graph, &Beta::beta_star(), &eps).unwrap();
    c.eq("n=6 minimizer", t6.rows[0].graph6.clone(), canonical_g6(&k4p2));

    for (n, want) in (3..=7).zip([2, 6, 21, 5, 1]) {
        c.eq(&format!("graphs below β★ n={n}"), min_gamma_table(n, KernelKind::Graph, &Beta::beta_star(), &eps).unwrap().count_below, want);
    }
    for (n, want) in (3..=14).zip([1, 2, 3, 6, 11, 23, 32, 6, 2, 2, 2, 1]) {
        c.eq(&format!("trees below β_tr n={n}"), min_gamma_table(n, KernelKind::Tree, &Beta::beta_tr(), &eps).unwrap().count_below, want);
    }
    c.finish();
}

#[test]
fn criterion_08_degree_bound_table() {
    let mut c = Criterion::new(8, "β_d table");
    let table = [3.596, 4.223, 4.788, 5.305, 5.785, 6.235, 6.660, 7.064, 7.450, 7.820];
    for (d, want) in (3..=12).zip(table) {
        c.near(&format!("β_{d}"), beta_d(d, &dyadic_eps(40)).unwrap().mid_f64(), want, 1e-3);
    }
    c.finish();
}

fn run_prove(args: &[&str]) -> (Option<i32>, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gammacert")).args(args).output().expect("binary runs");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), v, String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn criterion_09_end_to_end() {
    let mut c = Criterion::new(9, "end-to-end proofs");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/certificate.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let schema = jsonschema::JSONSchema::compile(&schema).unwrap();
    let valid = |c: &mut Criterion, name: &str, v: &Value| {
        let errors: Vec<String> = match schema.validate(v) {
            Ok(()) => vec![],
            Err(e) => e.map(|e| format!("{e} at {}", e.instance_path)).collect(),
        };
        c.check(errors.is_empty(), format!("{name} certificate violates schema: {errors:?}"));
    };
    for kind in ["graphs", "trees"] {
        let (code, v, err) = run_prove(&["prove", kind]);
        c.eq(&format!("prove {kind} exit"), code, Some(0));
        c.eq(&format!("prove {kind} pass"), v["pass"].as_bool(), Some(true));
        c.check(err.contains("PASS"), format!("prove {kind} stderr: {err}"));
        valid(&mut c, kind, &v);
    }
    let (code, v, err) = run_prove(&["prove", "graphs", "--tamper", "beta=6"]);
    c.eq("tamper exit", code, Some(1));
    c.eq("tamper pass", v["pass"].as_bool(), Some(false));
    c.check(v["first_failure"].as_str().is_some_and(|f| f.contains("kernel-stage")), format!("tamper first failure {}", v["first_failure"]));
    c.check(err.contains("FAIL"), format!("tamper stderr: {err}"));
    valid(&mut c, "tamper", &v);
    c.within(Duration::from_secs(600));
    c.finish();
}

#[test]
fn criterion_10_property_audit() {
    let mut c = Criterion::new(10, "property audit");
    let mut rng = StdRng::seed_from_u64(2024);
    let eps = dyadic_eps(60);

    // (λI − A)·adj(λI − A) = P(λ)·I on every graph kernel.
    let lam = rat(10, 3);
    for k in enumerate_graph_kernels() {
        let ctx = KernelContext::new(k.clone()).unwrap();
        let g = &k.graph;
        let p = ctx.p().eval(&lam);
        for v in 0..g.n() {
            let col: Vec<BigRational> = pb_column(&ctx, v).unwrap().iter().map(|e| e.eval(&lam)).collect();
            for u in 0..g.n() {
                let row: BigRational = (0..g.n()).map(|w| (if u == w { lam.clone() } else { rat(0, 1) } - rat(g.has_edge(u, w) as i64, 1)) * &col[w]).sum();
                let want = if u == v { p.clone() } else { rat(0, 1) };
                c.check(row == want, format!("resolvent identity {} ({u},{v})", k.id()));
            }
        }
    }

    // x|_H = B(λ_G)·y on BFS kernels of 7-vertex graphs.
    let graphs7 = enumerate_connected_graphs(7).unwrap();
    for _ in 0..100 {
        let g = &graphs7[rng.gen_range(0..graphs7.len())];
        let o = Perron::new(g).unwrap().masters()[0];
        let inside: Vec<usize> = g.bfs_layers(o).unwrap().concat().into_iter().take(rng.gen_range(2..=6)).collect();
        let ctx = KernelContext::new(RootedKernel::new(g.induced(&inside), 0).unwrap()).unwrap();
        let data = perron_enclosure(g, &eps).unwrap();
        let pl = data.lambda.eval_poly(ctx.p());
        let y: Vec<RationalInterval> = inside
            .iter()
            .map(|&v| g.neighbors(v).filter(|w| !inside.contains(w)).fold(RationalInterval::point(rat(0, 1)), |a, w| &a + &data.weights[w]))
            .collect();
        for (i, &u) in inside.iter().enumerate() {
            let mut acc = RationalInterval::point(rat(0, 1));
            for (j, yj) in y.iter().enumerate() {
                let b = (&data.lambda.eval_poly(&pb_column(&ctx, j).unwrap()[i]) / &pl).unwrap();
                acc = &acc + &(&b * yj);
            }
            c.check((&acc - &data.weights[u]).contains_zero(), format!("reconstruction on {} at {u}", to_graph6(g)));
        }
    }

    // Γ − 1 ≥ λ, master weight bound and degree sandwich on every connected graph up to 7 vertices.
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let p = Perron::new(&g).unwrap();
            c.check(p.gamma_minus_one_ge_lambda(), format!("Γ−1 ≥ λ fails on {}", to_graph6(&g)));
            for o in p.masters() {
                c.check(p.master_weight_bound(o), format!("master weight bound fails on {}", to_graph6(&g)));
                c.check(p.degree_sandwich(o), format!("degree sandwich fails on {}", to_graph6(&g)));
            }
        }
    }
    for n in 3..=20 {
        c.eq(&format!("Γ(C{n})"), Perron::new(&build::cycle(n)).unwrap().gamma_exact(), Some(rat(n as i64, 1)));
    }

    // Vector lemmas on random positive rationals.
    for _ in 0..300 {
        let len = rng.gen_range(2..9);
        let x: Vec<BigRational> = (0..len).map(|_| rat(rng.gen_range(1..200), rng.gen_range(1..20))).collect();
        let y: Vec<BigRational> = (0..len).map(|_| rat(rng.gen_range(1..200), rng.gen_range(1..20))).collect();
        let alpha = rat(rng.gen_range(0..=10), 10);
        let (gx, gy) = (gamma_of(&x), gamma_of(&y));
        let lo = if gx < gy { gx.clone() } else { gy };
        c.check(gamma_of_mix(&x, &y, &alpha) >= lo, "quasiconcavity");
        let m = x.iter().min().unwrap().clone();
        let big_m = x.iter().max().unwrap().clone();
        c.check(reverse_am_qm_bound(&x, &m, &big_m) <= gx, "reverse AM-QM");
        let th = perturbation_threshold(&x);
        if let Some(i) = (0..len).find(|&i| x[i] < th) {
            let e = &x[i] * rat(rng.gen_range(1..10), 10);
            c.check(gamma_of(&perturb(&x, i, &e)) < gx, "perturbation");
        }
    }

    for (name, h) in [("K4", build::complete(4)), ("S5", build::star(5))] {
        for k in 1..=6 {
            c.check(lambda_sandwich_audit(&h, 0, k).unwrap(), format!("λ sandwich {name}, k = {k}"));
        }
    }
    c.finish();
}
