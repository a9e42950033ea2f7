use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use mwkit::build::{chromatic_decomposition, product_decomposition, reduce_to_clique_bags};
use mwkit::decomp::{
    check_gated_decomposition, check_theta_smooth, check_weak_theta_smooth, validate,
    Decomposition, Violation,
};
use mwkit::dot::{decomposition_to_dot, embedding_to_dot, graph_to_dot, DotOptions};
use mwkit::generate::{generate, Family};
use mwkit::median::{
    embed_tree_product, is_median, random_median_graph, tree_dimension, EmbeddingDocument,
};
use mwkit::oracle::{
    kw_exact, medianwidth_exact, mw_i_exact, treewidth_exact, OracleConfig, WidthResult, Witness,
};
use mwkit::{chromatic_number, clique_number, Error, Graph};

use crate::input::{
    read_decomposition, read_document, read_graph, same_graph, write_output, Document,
};
use crate::{
    AnalyzeArgs, BuildArgs, BuildKind, CheckArgs, Cli, Command, EmbedArgs, ExportDotArgs, GenArgs,
};

const SEMANTIC: u8 = 1;
const INPUT: u8 = 2;
const BOUND: u8 = 3;

/// Input errors are 2, resource bounds 3, everything else 1.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.chain().any(|c| c.is::<std::io::Error>()) {
        return INPUT;
    }
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } | Error::TooLarge(_)) => {
            BOUND
        }
        Some(
            Error::Parse { .. }
            | Error::InvalidName(_)
            | Error::DuplicateVertex(_)
            | Error::UnknownVertex(_)
            | Error::VertexOutOfRange(_)
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::InvalidParams(_)
            | Error::Format(_)
            | Error::Json(_),
        ) => INPUT,
        Some(_) => SEMANTIC,
        None if e.is::<InputError>() => INPUT,
        None => SEMANTIC,
    }
}

/// Malformed command input detected by the CLI itself.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(InputError(msg.into()))
}

fn oracle_config(threads: usize) -> Result<OracleConfig> {
    let cfg = OracleConfig::default().with_threads(threads);
    match std::env::var("MWKIT_MAX_N") {
        Ok(v) => {
            let n = v
                .trim()
                .parse()
                .map_err(|_| input_error(format!("MWKIT_MAX_N must be an integer, got {v:?}")))?;
            Ok(cfg.with_max_n(n))
        }
        Err(_) => Ok(cfg),
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze(args) => analyze(args, &oracle_config(cli.threads)?),
        Command::Build(args) => build(args),
        Command::Check(args) => check(args),
        Command::Embed(args) => embed(args),
        Command::Gen(args) => gen(args),
        Command::ExportDot(args) => export_dot(args),
    }
}

struct Reported {
    name: String,
    value: Value,
    method: Option<&'static str>,
    witness: Option<Value>,
}

impl Reported {
    fn from_width(r: WidthResult, g: &Graph) -> Self {
        Reported {
            name: r.parameter.clone(),
            value: r.value.into(),
            method: Some(r.method),
            witness: Some(r.witness.to_value(g)),
        }
    }
}

fn analyze(args: &AnalyzeArgs, cfg: &OracleConfig) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let none_chosen =
        !(args.omega || args.chi || args.tw || args.mw || args.dim || args.median || args.kw)
            && args.mwi.is_empty();
    let mut out = Vec::new();
    if args.omega || none_chosen {
        let (w, clique) = clique_number(&g);
        out.push(Reported {
            name: "omega".into(),
            value: w.into(),
            method: Some("branch-and-bound"),
            witness: Some(Witness::Clique(clique).to_value(&g)),
        });
    }
    if args.chi || none_chosen {
        let (k, coloring) = chromatic_number(&g);
        out.push(Reported {
            name: "chi".into(),
            value: k.into(),
            method: Some("branch-and-bound"),
            witness: Some(Witness::Coloring(coloring).to_value(&g)),
        });
    }
    if args.tw {
        out.push(Reported::from_width(treewidth_exact(&g, cfg)?, &g));
    }
    if args.mw {
        out.push(Reported::from_width(medianwidth_exact(&g, cfg)?, &g));
    }
    for &i in &args.mwi {
        if i == 0 {
            return Err(input_error("--mwi needs K >= 1"));
        }
        out.push(Reported::from_width(mw_i_exact(&g, i, cfg)?, &g));
    }
    if args.dim {
        let emb = embed_tree_product(&g)?;
        out.push(Reported {
            name: "dim".into(),
            value: emb.dimension().into(),
            method: Some("crossing-graph-colouring"),
            witness: Some(EmbeddingDocument::from_embedding(&g, &emb).to_value()),
        });
    }
    if args.median || none_chosen {
        out.push(Reported {
            name: "median".into(),
            value: is_median(&g).is_median().into(),
            method: None,
            witness: None,
        });
    }
    if args.kw {
        out.push(Reported::from_width(kw_exact(&g, cfg)?, &g));
    }

    let mut paths = Vec::new();
    for r in &out {
        let path = match (&args.witness, &r.witness) {
            (Some(dir), Some(w)) => {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                let path = dir.join(format!("{}.json", r.name));
                let mut text = serde_json::to_string_pretty(w)?;
                text.push('\n');
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                Some(path.display().to_string())
            }
            _ => None,
        };
        paths.push(path);
    }

    if args.json {
        let results: Vec<Value> = out
            .iter()
            .zip(&paths)
            .map(|(r, p)| {
                let mut m = Map::new();
                m.insert("parameter".into(), r.name.clone().into());
                m.insert("value".into(), r.value.clone());
                if let Some(method) = r.method {
                    m.insert("method".into(), method.into());
                }
                if let Some(p) = p {
                    m.insert("witness".into(), p.clone().into());
                }
                Value::Object(m)
            })
            .collect();
        let doc = json!({ "graph": args.graph.display().to_string(), "results": results });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for (r, p) in out.iter().zip(&paths) {
            match p {
                Some(p) => println!("{} {} {p}", r.name, r.value),
                None => println!("{} {}", r.name, r.value),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn require_subject(g: &Graph, d: &Decomposition, path: &Path) -> Result<()> {
    if !same_graph(g, &d.subject) {
        return Err(input_error(format!(
            "{} decomposes a different graph",
            path.display()
        )));
    }
    Ok(())
}

fn build(args: &BuildArgs) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let d = match args.kind {
        BuildKind::Chromatic => {
            if !args.inputs.is_empty() {
                return Err(input_error("chromatic takes only a graph"));
            }
            chromatic_decomposition(&g, &chromatic_number(&g).1)?
        }
        BuildKind::CliqueBags => {
            let start = match args.inputs.as_slice() {
                [] => Decomposition::trivial(&g),
                [path] => {
                    let d = read_decomposition(path)?;
                    require_subject(&g, &d, path)?;
                    d
                }
                _ => return Err(input_error("clique-bags takes at most one decomposition")),
            };
            if !validate(&start).is_valid() {
                bail!(Error::Precondition(
                    "the starting decomposition is not valid".into()
                ));
            }
            reduce_to_clique_bags(&start, args.budget)?
        }
        BuildKind::Product => {
            if args.inputs.is_empty() {
                return Err(input_error("product needs at least one tree decomposition"));
            }
            let tds = args
                .inputs
                .iter()
                .map(|p| {
                    let d = read_decomposition(p)?;
                    require_subject(&g, &d, p)?;
                    Ok(d)
                })
                .collect::<Result<Vec<_>>>()?;
            product_decomposition(&tds)?
        }
    };
    let report = validate(&d);
    if !report.is_valid() {
        eprint!("{}", report.summary(&d));
        bail!(Error::Internal(
            "built decomposition failed validation".into()
        ));
    }
    let dim = report
        .host_tree_dimension
        .ok_or_else(|| anyhow!("host without tree dimension"))?;
    write_output(args.output.as_ref(), &d.to_json())?;
    let summary = format!("width={} dim={dim}", report.width);
    if args.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

enum Level {
    M1M2,
    Smooth,
    WeakSmooth,
    IMedian(usize),
    Gated,
}

fn parse_level(words: &[String]) -> Result<Level> {
    let text = words.join(" ");
    let level = match text.as_str() {
        "m1m2" => Level::M1M2,
        "smooth" => Level::Smooth,
        "weak-smooth" => Level::WeakSmooth,
        "gated" => Level::Gated,
        other => {
            let k = other
                .strip_prefix('i')
                .map(|rest| rest.trim_start_matches([' ', '=']))
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| input_error(format!("unknown level {other:?}")))?;
            Level::IMedian(k)
        }
    };
    Ok(level)
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    println!("INVALID {msg}");
    ExitCode::from(SEMANTIC)
}

fn check(args: &CheckArgs) -> Result<ExitCode> {
    let level = parse_level(&args.level)?;
    let g = read_graph(&args.graph)?;
    let d = read_decomposition(&args.decomposition)?;
    require_subject(&g, &d, &args.decomposition)?;
    let names = |set: &mwkit::VertexSet| format!("{{{}}}", d.subject.names_of(set).join(","));

    if let Level::Gated = level {
        let r = check_gated_decomposition(&d);
        let first = r
            .violations
            .iter()
            .find(|v| matches!(v, Violation::EmptySupport(_)))
            .or(r.violations.first());
        if let Some(v) = first {
            return Ok(invalid(format!("{}: {}", v.axiom(), v.describe(&d))));
        }
        let dim = tree_dimension(&d.host)
            .map(|k| k.to_string())
            .unwrap_or_else(|_| "-".into());
        println!("VALID width={} dim={dim}", d.width());
        return Ok(ExitCode::SUCCESS);
    }

    let report = validate(&d);
    let first = report
        .violations
        .iter()
        .find(|v| matches!(v, Violation::EmptySupport(_)))
        .or(report.violations.first());
    if let Some(v) = first {
        return Ok(invalid(format!("{}: {}", v.axiom(), v.describe(&d))));
    }
    let Some(dim) = report.host_tree_dimension else {
        return Ok(invalid("host: not a median graph"));
    };
    match level {
        Level::Smooth => {
            if let Some(c) = check_theta_smooth(&d)?.first_failure() {
                return Ok(invalid(format!(
                    "M3: class {} has Z-differences {} and {}",
                    c.class.label(&d.host),
                    names(&c.diff_ab),
                    names(&c.diff_ba)
                )));
            }
        }
        Level::WeakSmooth => {
            if let Some(c) = check_weak_theta_smooth(&d)?.first_failure() {
                return Ok(invalid(format!(
                    "M3': class {} has no admissible matching between {} and {}",
                    c.class.label(&d.host),
                    names(&c.diff_ab),
                    names(&c.diff_ba)
                )));
            }
        }
        Level::IMedian(k) if dim > k => {
            return Ok(invalid(format!("host has tree dimension {dim} > {k}")));
        }
        _ => {}
    }
    println!("VALID width={} dim={dim}", report.width);
    Ok(ExitCode::SUCCESS)
}

fn embed(args: &EmbedArgs) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let emb = embed_tree_product(&g)?;
    if !emb.verify_isometry(&g) || !emb.verify_economy(&g) {
        bail!(Error::Internal("embedding failed verification".into()));
    }
    let doc = EmbeddingDocument::from_embedding(&g, &emb);
    write_output(args.output.as_ref(), &doc.to_json())?;
    if args.output.is_some() {
        println!("dim {}", emb.dimension());
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(args: &GenArgs) -> Result<ExitCode> {
    let params = args
        .params
        .iter()
        .flat_map(|p| p.split([',', 'x']))
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| input_error(format!("bad parameter {p:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let need_seed = || {
        args.seed
            .ok_or_else(|| input_error(format!("{} is random and needs --seed", args.family)))
    };
    let g = if args.family == "random_median" {
        let [steps] = params[..] else {
            return Err(input_error("random_median takes one parameter"));
        };
        random_median_graph(steps, need_seed()?)
    } else {
        let family = Family::from_parts(&args.family, &params)?;
        let seed = if family.is_randomized() {
            need_seed()?
        } else {
            0
        };
        generate(&family, seed)?
    };
    write_output(args.output.as_ref(), &g.to_edge_list())?;
    Ok(ExitCode::SUCCESS)
}

fn export_dot(args: &ExportDotArgs) -> Result<ExitCode> {
    let opts = DotOptions {
        theta: args.theta,
        separator: args.separator.clone(),
    };
    let dot = match read_document(&args.input)? {
        Document::Graph(g) => graph_to_dot(&g, &opts)?,
        Document::Decomposition(d) => decomposition_to_dot(&d, &opts)?,
        Document::Embedding(doc) => embedding_to_dot(&doc),
    };
    write_output(args.output.as_ref(), &dot)?;
    Ok(ExitCode::SUCCESS)
}
