//! `gammacert`: certified Γ values, kernel stages, full proof runs, and table exports.
//!
//! Exit status: 0 on success or PASS, 1 when a proof or `--expect` check fails,
//! 2 on input errors.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gammacert::algebra::text::parse_rational;
use gammacert::graphs::KernelKind;
use gammacert::Beta;
use num_rational::BigRational;

use render::Format;

#[derive(Parser)]
#[command(name = "gammacert", version, about = "Certified Perron-vector balance ratios for small graphs and trees")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for kernel stages and tables.
    #[arg(long, global = true, env = "GAMMACERT_JOBS")]
    jobs: Option<usize>,
    /// Write the output here instead of stdout. Markdown transcripts go next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Graphs,
    Trees,
}

impl From<Kind> for KernelKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Graphs => KernelKind::Graph,
            Kind::Trees => KernelKind::Tree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Graphs,
    Trees,
    Counts,
    BetaD,
}

#[derive(Subcommand)]
enum Command {
    /// Certified λ and Γ of graphs given as graph6, `n; u-v, ...` edge lists, or files of either.
    Gamma {
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Enclosure width: `p/q`, a decimal, or `1e-12`.
        #[arg(long, default_value = "1e-12")]
        eps: String,
    },
    /// Run the graph or tree kernel stage.
    KernelStage {
        kind: Kind,
        /// `beta-star`, `beta-tr`, or an exact fraction. Defaults to 21/4 (graphs) and beta-tr (trees).
        #[arg(long)]
        beta: Option<String>,
        /// Comma-separated `key=value` checks over kernels, direct, handled, survivors, below.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run the full certificate chain.
    Prove {
        kind: Kind,
        /// Demonstration override of the kernel-stage threshold, `beta=<value>`.
        #[arg(long)]
        tamper: Option<String>,
    },
    /// Exhaustive Γ tables, counts below the limits, and β_d.
    Tables {
        which: TableKind,
        /// Order for the graph and tree tables.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Rows to print; 0 prints all.
        #[arg(long, default_value_t = 0)]
        top: usize,
        /// Threshold for the `below` column; defaults to the limit of the kind.
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, default_value_t = 3)]
        d_min: usize,
        #[arg(long, default_value_t = 12)]
        d_max: usize,
    },
    /// Sample the two resolvent bound curves of a rooted kernel for one vertex set.
    Curves {
        /// Kernel graph; defaults to K3+P3.
        #[arg(long, default_value = "6; 0-1, 0-2, 1-2, 0-3, 3-4, 4-5")]
        graph: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Comma-separated vertices of U.
        #[arg(long, default_value = "5")]
        set: String,
        /// Lower end, must exceed λ_H; defaults to λ_H + 1/100.
        #[arg(long)]
        lo: Option<String>,
        #[arg(long, default_value = "3")]
        hi: String,
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
}

/// Input errors exit with 2, everything the run itself rejects with 1.
enum Failure {
    Input(anyhow::Error),
    Proof(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<gammacert::Error> for Failure {
    fn from(e: gammacert::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Proof(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Gamma { graphs, eps } => {
            let eps = parse_eps(eps)?;
            let mut values = Vec::new();
            for g in read_graphs(graphs)? {
                values.push(gammacert::spectral::gamma_enclosure(&g, &eps)?);
            }
            emit(out, &render::gamma(&values, cli.format)?, None)?;
        }
        Command::KernelStage { kind, beta, expect } => {
            let r = match kind {
                Kind::Graphs => gammacert::kernels::graph_kernel_stage(&beta_or(beta, Beta::ratio(21, 4))?)?,
                Kind::Trees => gammacert::kernels::tree_kernel_stage(&beta_or(beta, Beta::beta_tr())?)?,
            };
            let md = format!("# Kernel stage\n\n{}", r.to_markdown());
            emit(out, &render::stage(&r, cli.format)?, Some(&md))?;
            if let Some(e) = expect {
                check_expectations(&r, e)?;
            }
        }
        Command::Prove { kind, tamper } => {
            let mut opts = gammacert::kernels::prove::ProveOptions::default();
            if let Some(t) = tamper {
                let v = t.strip_prefix("beta=").ok_or_else(|| anyhow!("--tamper expects beta=<value>, got {t:?}"))?;
                opts.stage_beta = Some(Beta::parse(v)?);
            }
            let c = gammacert::kernels::prove::prove_conjecture_with((*kind).into(), &opts)?;
            emit(out, &render::certificate(&c, cli.format)?, Some(&c.to_markdown()))?;
            eprintln!("{}: {}", if c.pass { "PASS" } else { "FAIL" }, c.statement);
            if let Some(f) = c.first_failure {
                return Err(Failure::Proof(f));
            }
        }
        Command::Tables { which, n, top, beta, d_min, d_max } => {
            let text = match which {
                TableKind::Graphs | TableKind::Trees => {
                    let kind = if matches!(which, TableKind::Graphs) { KernelKind::Graph } else { KernelKind::Tree };
                    let b = beta_or(beta, default_limit(kind))?;
                    let t = gammacert::spectral::min_gamma_table(*n, kind, &b, &gammacert::algebra::interval::dyadic_eps(40))?;
                    render::gamma_table(&t, *top, cli.format)?
                }
                TableKind::Counts => {
                    let mut rows = Vec::new();
                    for (kind, range) in [(KernelKind::Graph, 3..=7), (KernelKind::Tree, 3..=14)] {
                        let b = beta_or(beta, default_limit(kind))?;
                        for n in range {
                            let t = gammacert::spectral::min_gamma_table(n, kind, &b, &gammacert::algebra::interval::dyadic_eps(40))?;
                            rows.push(render::CountRow { kind, n, total: t.rows.len(), below: t.count_below, beta: b.label() });
                        }
                    }
                    render::counts(&rows, cli.format)?
                }
                TableKind::BetaD => {
                    if d_min > d_max || *d_min < 3 {
                        return Err(Failure::Input(anyhow!("need 3 <= d-min <= d-max, got {d_min}..{d_max}")));
                    }
                    let mut rows = Vec::new();
                    for d in *d_min..=*d_max {
                        let b = gammacert::spectral::beta_d(d, &gammacert::algebra::interval::dyadic_eps(40))?;
                        let l = gammacert::spectral::degree::lambda_d(d)?.refined(&gammacert::algebra::interval::dyadic_eps(40)).enclosure();
                        rows.push(render::BetaDRow { d, lambda_d: l.mid_f64(), beta_d: b.mid_f64() });
                    }
                    render::beta_d(&rows, cli.format)?
                }
            };
            emit(out, &text, None)?;
        }
        Command::Curves { graph, root, set, lo, hi, samples } => {
            use gammacert::bounds::{bound_curves, set_of, KernelContext};
            let g = gammacert::graphs::graph6::parse_graph(graph)?;
            let ctx = KernelContext::new(gammacert::graphs::RootedKernel::new(g, *root)?)?;
            let verts: Vec<usize> = set
                .split(',')
                .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad vertex {s:?}")))
                .collect::<anyhow::Result<_>>()?;
            let lo = match lo {
                Some(l) => parse_rational(l)?,
                None => {
                    let l = ctx.lambda_h().clone().refined(&gammacert::algebra::interval::dyadic_eps(30)).enclosure();
                    l.hi + gammacert::algebra::interval::rat(1, 100)
                }
            };
            let pts = bound_curves(&ctx, set_of(&verts), &lo, &parse_rational(hi)?, *samples)?;
            emit(out, &render::curves(&pts, cli.format)?, None)?;
        }
    }
    Ok(())
}

fn default_limit(kind: KernelKind) -> Beta {
    match kind {
        KernelKind::Graph => Beta::beta_star(),
        KernelKind::Tree => Beta::beta_tr(),
    }
}

fn beta_or(text: &Option<String>, default: Beta) -> anyhow::Result<Beta> {
    Ok(match text {
        Some(t) => Beta::parse(t)?,
        None => default,
    })
}

/// `p/q`, decimals, and `1e-k` style values, all exact.
fn parse_eps(text: &str) -> anyhow::Result<BigRational> {
    let r = match text.split_once(['e', 'E']) {
        Some((m, e)) => {
            let m = parse_rational(m)?;
            let e: i32 = e.parse().with_context(|| format!("bad exponent in {text:?}"))?;
            let ten = gammacert::algebra::interval::rat(10, 1);
            let p = (0..e.unsigned_abs()).fold(gammacert::algebra::interval::rat(1, 1), |acc, _| acc * &ten);
            if e < 0 {
                m / p
            } else {
                m * p
            }
        }
        None => parse_rational(text)?,
    };
    if r <= gammacert::algebra::interval::rat(0, 1) {
        bail!("eps must be positive, got {text}");
    }
    Ok(r)
}

/// Each argument is a graph6 string, an edge list, or a file with one of either per line.
fn read_graphs(args: &[String]) -> anyhow::Result<Vec<gammacert::graphs::Graph>> {
    let mut out = Vec::new();
    for a in args {
        let path = Path::new(a);
        if path.is_file() {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {a}"))?;
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                out.push(parse_connected(line)?);
            }
        } else {
            out.push(parse_connected(a)?);
        }
    }
    Ok(out)
}

fn parse_connected(text: &str) -> anyhow::Result<gammacert::graphs::Graph> {
    let g = gammacert::graphs::graph6::parse_graph(text).with_context(|| format!("parsing {text:?}"))?;
    g.require_connected().with_context(|| format!("{text:?}"))?;
    Ok(g)
}

fn check_expectations(r: &gammacert::kernels::StageReport, checks: &str) -> Result<(), Failure> {
    let mut bad = Vec::new();
    for item in checks.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| anyhow!("bad --expect item {item:?}"))?;
        let want: usize = v.trim().parse().with_context(|| format!("bad count in {item:?}"))?;
        let got = match k.trim() {
            "kernels" => r.kernel_count,
            "direct" => r.direct_pass,
            "handled" => r.handled,
            "survivors" => r.survivors.len(),
            "below" => r.below().count(),
            other => return Err(Failure::Input(anyhow!("unknown --expect key {other:?}"))),
        };
        if got != want {
            bad.push(format!("{k}: expected {want}, got {got}"));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Proof(bad.join("; ")))
    }
}

fn emit(out: Option<&Path>, text: &str, markdown: Option<&str>) -> anyhow::Result<()> {
    match out {
        Some(p) => {
            std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            if let Some(md) = markdown {
                if p.extension().is_none_or(|e| e != "md") {
                    let mp = p.with_extension("md");
                    std::fs::write(&mp, md).with_context(|| format!("writing {}", mp.display()))?;
                }
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}
