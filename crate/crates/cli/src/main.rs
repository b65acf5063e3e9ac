//! `rainbow3`: generate graphs, build and verify 3-rainbow colorings, solve
//! small instances exactly and report bounds.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
//! usage, input or limit errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rainbow3::bounds::bounds_report_with;
use rainbow3::coloring::{spanning_tree_coloring, theorem3_coloring_with, theorem4_coloring, Theorem3Options};
use rainbow3::domination::{
    connected_k_dominating_heuristic, min_connected_k_dominating_set_with, three_way_dominating_set_with, DomKind,
    DominatingSet, DEFAULT_EXACT_LIMIT,
};
use rainbow3::generators::{self, LabeledGraph};
use rainbow3::io::{parse_coloring, parse_edge_list, parse_intervals, write_coloring, write_edge_list, ColoringHeader};
use rainbow3::steiner::{sdiam3, steiner_distance3};
use rainbow3::verify::exact::{exact_rx3_with, ExactConfig, DEFAULT_MAX_EDGES};
use rainbow3::verify::{certificate_problem, is_3_rainbow_with, VerifyConfig, VerifyReport, Witness, DEFAULT_COLOR_LIMIT};
use rainbow3::Graph;

#[derive(Parser)]
#[command(name = "rainbow3", version, about = "3-rainbow edge-colorings from connected dominating sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Color a graph and write the coloring with its header.
    Color(ColorArgs),
    /// Check that a coloring is 3-rainbow; prints a JSON report.
    Verify(VerifyArgs),
    /// Compute rx3 exactly by exhaustive search.
    Exact(ExactArgs),
    /// Print every upper bound the library can certify, as JSON.
    Bounds(BoundsArgs),
    /// Print the Steiner 3-diameter and an extremal triple, as JSON.
    Steiner(SteinerArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Gstar,
    ThresholdExample,
    ChainExample,
    FrenchWindmill,
    Threshold,
    Interval,
    Random,
}

#[derive(clap::Args)]
struct GenArgs {
    family: Family,
    /// Vertex count (complete, path, cycle, random) or leaf count (star).
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter t (threshold-example, chain-example, french-windmill,
    /// second side of complete-bipartite).
    #[arg(long)]
    t: Option<usize>,
    /// First side of complete-bipartite, or k of chain-example.
    #[arg(long)]
    k: Option<usize>,
    /// Number of middle blocks of gstar.
    #[arg(long)]
    m: Option<usize>,
    /// Minimum degree (gstar, random).
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated vertex weights (threshold).
    #[arg(long, value_delimiter = ',')]
    weights: Vec<f64>,
    /// Edge threshold on weight sums (threshold).
    #[arg(long)]
    threshold: Option<f64>,
    /// File of "lo hi" lines (interval).
    #[arg(long)]
    intervals: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// JSON label map; defaults to `<output>.labels.json` when writing a file.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem3,
    Theorem4,
    Spanning,
}

#[derive(clap::Args)]
struct ColorArgs {
    /// Edge-list file; stdin when absent or "-".
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "theorem3")]
    method: Method,
    /// "auto", or a file of vertex ids forming the dominating set.
    #[arg(long, default_value = "auto")]
    dom: String,
    /// Re-check every certificate after each stage-2 step (theorem3).
    #[arg(long)]
    check: bool,
    /// Largest graph for exact dominating-set search.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the construction report here as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Coloring file; stdin when absent or "-".
    coloring: Option<PathBuf>,
    /// Edge-list file; by default the graph is read from the coloring itself.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_COLOR_LIMIT)]
    color_limit: usize,
}

#[derive(clap::Args)]
struct ExactArgs {
    graph: Option<PathBuf>,
    #[arg(long)]
    kmax: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
    #[arg(long, default_value_t = ExactConfig::default().node_budget)]
    node_budget: u64,
    /// Write an optimal coloring here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BoundsArgs {
    graph: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
}

#[derive(clap::Args)]
struct SteinerArgs {
    graph: Option<PathBuf>,
    /// Report the Steiner distance of this triple instead, as "a,b,c".
    #[arg(long, value_delimiter = ',')]
    triple: Option<Vec<usize>>,
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let name = path.map_or("stdin".into(), |p| p.display().to_string());
    parse_edge_list(&read_input(path)?).with_context(|| format!("in graph {name}"))
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("{family} needs --{flag}"))
}

fn generate(a: &GenArgs) -> Result<LabeledGraph> {
    let plain = |g: Graph, family: String| LabeledGraph {
        graph: g,
        family,
        labels: Default::default(),
    };
    Ok(match a.family {
        Family::Complete => {
            let n = need(a.n, "n", "complete")?;
            plain(generators::complete(n), format!("complete(n={n})"))
        }
        Family::CompleteBipartite => {
            let (s, t) = (need(a.k, "k", "complete-bipartite")?, need(a.t, "t", "complete-bipartite")?);
            plain(generators::complete_bipartite(s, t), format!("complete_bipartite(s={s}, t={t})"))
        }
        Family::Path => {
            let n = need(a.n, "n", "path")?;
            plain(generators::path(n), format!("path(n={n})"))
        }
        Family::Cycle => {
            let n = need(a.n, "n", "cycle")?;
            plain(generators::cycle(n)?, format!("cycle(n={n})"))
        }
        Family::Star => {
            let n = need(a.n, "n", "star")?;
            plain(generators::star(n), format!("star(leaves={n})"))
        }
        Family::Gstar => generators::gstar(need(a.delta, "delta", "gstar")?, need(a.m, "m", "gstar")?)?,
        Family::ThresholdExample => generators::threshold_example(need(a.t, "t", "threshold-example")?)?,
        Family::ChainExample => {
            generators::chain_example(need(a.k, "k", "chain-example")?, need(a.t, "t", "chain-example")?)?
        }
        Family::FrenchWindmill => generators::french_windmill(need(a.t, "t", "french-windmill")?)?,
        Family::Threshold => {
            if a.weights.is_empty() {
                bail!("threshold needs --weights");
            }
            let th = need(a.threshold, "threshold", "threshold")?;
            plain(generators::threshold_from_weights(&a.weights, th), "threshold".into())
        }
        Family::Interval => {
            let path = need(a.intervals.as_deref(), "intervals", "interval")?;
            let iv = parse_intervals(&read_input(Some(path))?).with_context(|| format!("in {}", path.display()))?;
            plain(generators::interval_graph(&iv), "interval".into())
        }
        Family::Random => {
            let (n, d) = (need(a.n, "n", "random")?, need(a.delta, "delta", "random")?);
            let g = generators::random_min_degree(n, d, a.seed)?;
            plain(g, format!("random_min_degree(n={n}, delta={d}, seed={})", a.seed))
        }
    })
}

fn cmd_gen(a: &GenArgs) -> Result<u8> {
    let lg = generate(a)?;
    write_output(a.output.as_deref(), &write_edge_list(&lg.graph))?;
    let labels = a.labels.clone().or_else(|| {
        a.output
            .as_ref()
            .filter(|p| p.as_path() != Path::new("-"))
            .map(|p| PathBuf::from(format!("{}.labels.json", p.display())))
    });
    if let Some(path) = labels {
        let text = serde_json::to_string_pretty(&json!({"family": lg.family, "labels": lg.labels}))?;
        fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(0)
}

fn read_dom(source: &str) -> Result<Vec<usize>> {
    let text = read_input(Some(Path::new(source)))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for tok in line.split('#').next().unwrap_or("").split_whitespace() {
            out.push(
                tok.parse()
                    .map_err(|_| anyhow!("{source} line {}: expected a vertex id, got {tok:?}", i + 1))?,
            );
        }
    }
    Ok(out)
}

fn choose_dom(g: &Graph, source: &str, kind: DomKind, limit: usize) -> Result<DominatingSet> {
    if source != "auto" {
        let d = read_dom(source)?;
        return DominatingSet::user_supplied(g, &d, kind).with_context(|| format!("dominating set from {source}"));
    }
    Ok(match kind {
        DomKind::ConnectedKWay(3) => three_way_dominating_set_with(g, limit)?,
        _ if g.n() <= limit => match min_connected_k_dominating_set_with(g, 3, limit)? {
            Some(d) => d,
            None => bail!("graph has no {kind}"),
        },
        _ => connected_k_dominating_heuristic(g, 3)?,
    })
}

fn cmd_color(a: &ColorArgs) -> Result<u8> {
    let g = read_graph(a.graph.as_deref())?;
    let mut header = ColoringHeader {
        n: Some(g.n()),
        ..Default::default()
    };
    let (coloring, report) = match a.method {
        Method::Spanning => {
            header.method = Some("spanning".into());
            let c = spanning_tree_coloring(&g)?;
            (c, json!({"method": "spanning"}))
        }
        Method::Theorem4 => {
            header.method = Some("theorem4".into());
            let d = choose_dom(&g, &a.dom, DomKind::ConnectedKDominating(3), a.exact_limit)?;
            let (c, r) = theorem4_coloring(&g, &d)?;
            header.dom = Some(d.vertices().to_vec());
            header.inner = Some(r.d);
            (c, serde_json::to_value(&r)?)
        }
        Method::Theorem3 => {
            header.method = Some("theorem3".into());
            let d = choose_dom(&g, &a.dom, DomKind::ConnectedKWay(3), a.exact_limit)?;
            let out = theorem3_coloring_with(&g, &d, Theorem3Options { check_each_step: a.check })?;
            header.dom = Some(d.vertices().to_vec());
            header.inner = Some(out.report.d);
            header.certificates = out.certificates.iter().map(|c| (c.vertex, c.paths.clone())).collect();
            (out.coloring, serde_json::to_value(&out.report)?)
        }
    };
    header.colors = Some(coloring.num_colors());
    write_output(a.output.as_deref(), &write_coloring(&g, &coloring, &header))?;
    if let Some(path) = &a.report {
        fs::write(path, serde_json::to_string_pretty(&report)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8> {
    let file = parse_coloring(&read_input(a.coloring.as_deref())?).context("in coloring")?;
    let g = match &a.graph {
        Some(p) => read_graph(Some(p))?,
        None => file.graph()?,
    };
    let c = file.to_coloring(&g)?;
    let mut report: Option<VerifyReport> = None;
    if let Some(d) = &file.header.dom {
        for cert in file.certificates(&g, &c)? {
            if let Some(reason) = certificate_problem(&g, &c, d, &cert) {
                report = Some(VerifyReport {
                    verdict: false,
                    witness: Some(Witness::Certificate {
                        vertex: cert.vertex,
                        reason,
                    }),
                    triples_checked: 0,
                    colors: c.num_colors(),
                });
                break;
            }
        }
    }
    let report = match report {
        Some(r) => r,
        None => is_3_rainbow_with(
            &g,
            &c,
            &VerifyConfig {
                color_limit: a.color_limit,
            },
        )?,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.verdict { 0 } else { 1 })
}

fn cmd_exact(a: &ExactArgs) -> Result<u8> {
    let g = read_graph(a.graph.as_deref())?;
    let config = ExactConfig {
        max_edges: a.max_edges,
        node_budget: a.node_budget,
    };
    let r = exact_rx3_with(&g, a.kmax, &config)?;
    if let (Some(path), Some(c)) = (&a.output, &r.coloring) {
        let header = ColoringHeader {
            method: Some("exact".into()),
            n: Some(g.n()),
            colors: Some(c.num_colors()),
            ..Default::default()
        };
        fs::write(path, write_coloring(&g, c, &header)).with_context(|| format!("writing {}", path.display()))?;
    }
    let out = json!({"rx3": r.rx3, "kmax": a.kmax, "lower_bound": r.lower_bound, "nodes": r.nodes});
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

fn cmd_bounds(a: &BoundsArgs) -> Result<u8> {
    let g = read_graph(a.graph.as_deref())?;
    let r = bounds_report_with(&g, a.exact_limit)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(0)
}

fn cmd_steiner(a: &SteinerArgs) -> Result<u8> {
    let g = read_graph(a.graph.as_deref())?;
    let out = match &a.triple {
        Some(t) => {
            let &[a, b, c] = t.as_slice() else {
                bail!("--triple needs exactly three vertices, got {}", t.len());
            };
            let s = [a, b, c];
            json!({"triple": s, "distance": steiner_distance3(&g, s)?})
        }
        None => {
            let (sd, s) = sdiam3(&g)?;
            json!({"sdiam3": sd, "triple": s})
        }
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Steiner(a) => cmd_steiner(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
