//! `slopeforge`: generate graphs, draw them with few slopes, verify drawings
//! and evaluate slope-number bounds.
//!
//! Exit codes: 0 verified, 1 usage or parse error, 2 invalid drawing or
//! certificate violation.

mod draw;
mod report;
mod source;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use slopeforge::constructions::verify;
use slopeforge::geometry::{AnyDrawing, DrawingDocument};
use slopeforge::graph::serialize_graph;
use slopeforge::Graph;

use draw::{Extras, Method};

#[derive(Parser)]
#[command(name = "slopeforge", version, about = "Straight-line and 1-bend graph drawings with few edge slopes")]
struct Cli {
    /// Seed for random generators.
    #[arg(long, global = true, env = "SLOPEFORGE_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph in edge-list format.
    Gen {
        /// complete, multipartite, path, cycle, tree-random, grid or petersen.
        family: String,
        /// Values or key=value pairs, e.g. `4,4` or `n=20 Δ=4 seed=7`.
        params: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw a graph and verify the result against its certificate.
    Draw(DrawArgs),
    /// Measure a drawing and check it against the graph and its certificate.
    Verify {
        /// Edge-list file, `-`, or a shorthand such as K_8 or P_9.
        graph: String,
        drawing: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Degree lower bounds of a graph, or the counting-gap table.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct DrawArgs {
    /// Edge-list file, `-`, or a shorthand such as K_8, K_3,4, P_9, petersen.
    graph: Option<String>,
    /// Generator spec instead of a file, e.g. "tree-random n=20 Δ=4".
    #[arg(long)]
    gen: Option<String>,
    #[arg(short, long, value_enum)]
    method: Method,
    /// Vertex ordering for `bandwidth`: whitespace-separated ids.
    #[arg(long)]
    ordering: Option<PathBuf>,
    /// H-partition JSON for `blowup` and `tree-partition`.
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Host drawing JSON for `blowup`.
    #[arg(long)]
    host_drawing: Option<PathBuf>,
    /// Largest graph for which `bandwidth` searches an optimal ordering.
    #[arg(long, default_value_t = 24)]
    exact_bandwidth_limit: usize,
    /// Drawing JSON output; stdout when absent.
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Draw every `*.txt` edge list in a directory.
    #[arg(long, conflicts_with_all = ["graph", "gen", "out", "svg", "ordering", "partition", "host_drawing"])]
    batch: Option<PathBuf>,
    /// Output directory for --batch; defaults to the batch directory.
    #[arg(long, requires = "batch")]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// A graph, or with --counting a list of key=value parameters
    /// (`Δ=5 ε=1 c=50 n=10,100`).
    args: Vec<String>,
    #[arg(long)]
    gen: Option<String>,
    #[arg(long)]
    counting: bool,
    /// First and last decade of the counting grid: n = 10^from..10^to.
    #[arg(long, default_value_t = 1)]
    from: u32,
    #[arg(long, default_value_t = 8)]
    to: u32,
    #[arg(long)]
    json: bool,
}

/// The drawing was produced or read but failed verification.
#[derive(Debug)]
struct Unverified(String);

impl fmt::Display for Unverified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Unverified {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.downcast_ref::<Unverified>().is_some() => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family, params, out } => {
            let g = source::generate(&family, &params, cli.seed)?;
            write_out(out.as_deref(), &serialize_graph(&g))
        }
        Command::Draw(args) => match &args.batch {
            Some(dir) => batch(dir, args.out_dir.as_deref().unwrap_or(dir), &args),
            None => draw_single(&args, cli.seed),
        },
        Command::Verify { graph, drawing, json } => {
            let g = source::resolve(Some(&graph), None, cli.seed)?;
            let doc = draw::read_drawing(&drawing)?;
            let d = AnyDrawing::from_document(&doc).context("drawing document")?;
            let cert = doc.certificate.as_ref();
            let v = verify(&g, &d, cert).map_err(|e| Unverified(format!("{e}")))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                print!("{}", report::verification(&d, &v, cert));
            }
            if !v.ok() {
                return Err(Unverified(report::failure(&v)).into());
            }
            Ok(())
        }
        Command::Bounds(args) => bounds(&args, cli.seed),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Draw, verify and serialize. A verification failure still returns the
/// document so it can be inspected.
fn draw_and_verify(g: &Graph, method: Method, extras: &Extras) -> Result<(DrawingDocument, AnyDrawing, Result<String>)> {
    let (d, cert) = draw::run(g, method, extras)?;
    let outcome = match verify(g, &d, Some(&cert)) {
        Ok(v) if v.ok() => Ok(report::summary(&v, &cert)),
        Ok(v) => Err(Unverified(report::failure(&v)).into()),
        Err(e) => Err(Unverified(format!("verification failed: {e}")).into()),
    };
    Ok((d.to_document(Some(cert)), d, outcome))
}

fn extras_from(args: &DrawArgs) -> Result<Extras> {
    let host_drawing = match &args.host_drawing {
        Some(p) => Some(AnyDrawing::from_document(&draw::read_drawing(p)?).context("host drawing")?),
        None => None,
    };
    Ok(Extras {
        ordering: args.ordering.as_deref().map(draw::read_ordering).transpose()?,
        partition: args.partition.as_deref().map(draw::read_partition).transpose()?,
        host_drawing,
        exact_bandwidth_limit: args.exact_bandwidth_limit,
    })
}

fn draw_single(args: &DrawArgs, seed: u64) -> Result<()> {
    let g = source::resolve(args.graph.as_deref(), args.gen.as_deref(), seed)?;
    let extras = extras_from(args)?;
    let (doc, d, outcome) = draw_and_verify(&g, args.method, &extras)?;
    write_out(args.out.as_deref(), &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    if let Some(p) = &args.svg {
        std::fs::write(p, d.to_svg()).with_context(|| format!("writing {}", p.display()))?;
    }
    eprintln!("{}", outcome?);
    Ok(())
}

/// Per-graph side inputs in batch mode: `<stem>.ordering` and
/// `<stem>.partition.json` next to the edge list.
fn batch_extras(path: &Path, limit: usize) -> Result<Extras> {
    let ordering = path.with_extension("ordering");
    let partition = path.with_extension("partition.json");
    Ok(Extras {
        ordering: ordering.exists().then(|| draw::read_ordering(&ordering)).transpose()?,
        partition: partition.exists().then(|| draw::read_partition(&partition)).transpose()?,
        host_drawing: None,
        exact_bandwidth_limit: limit,
    })
}

fn batch(dir: &Path, out_dir: &Path, args: &DrawArgs) -> Result<()> {
    let mut inputs: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    inputs.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "txt"));
    inputs.sort();
    if inputs.is_empty() {
        bail!("no *.txt edge lists in {}", dir.display());
    }
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let results: Vec<(String, Result<String>)> = inputs
        .par_iter()
        .map(|path| {
            let stem = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let job = || -> Result<String> {
                let g = source::read_graph_file(path)?;
                let extras = batch_extras(path, args.exact_bandwidth_limit)?;
                let (doc, _, outcome) = draw_and_verify(&g, args.method, &extras)?;
                let target = out_dir.join(format!("{stem}.json"));
                std::fs::write(&target, serde_json::to_string_pretty(&doc)? + "\n")
                    .with_context(|| format!("writing {}", target.display()))?;
                outcome
            };
            let result = job();
            (stem, result)
        })
        .collect();
    let (mut usage, mut unverified) = (0, 0);
    for (stem, r) in &results {
        match r {
            Ok(s) => println!("{stem}: {s}"),
            Err(e) => {
                if e.downcast_ref::<Unverified>().is_some() {
                    unverified += 1;
                } else {
                    usage += 1;
                }
                println!("{stem}: error: {e:#}");
            }
        }
    }
    if usage > 0 {
        bail!("{usage} of {} inputs could not be drawn", results.len());
    }
    if unverified > 0 {
        return Err(Unverified(format!("{unverified} of {} drawings failed verification", results.len())).into());
    }
    Ok(())
}

fn bounds(args: &BoundsArgs, seed: u64) -> Result<()> {
    if args.counting {
        if args.gen.is_some() {
            bail!("--counting takes parameters, not a graph");
        }
        let table = report::counting(&args.args, args.from, args.to)?;
        if args.json {
            println!("{}", serde_json::to_string_pretty(&table)?);
        } else {
            print!("{}", report::counting_text(&table));
        }
        return Ok(());
    }
    let graph = match args.args.as_slice() {
        [] => None,
        [g] => Some(g.as_str()),
        _ => bail!("bounds takes one graph (or --counting with parameters)"),
    };
    let g = source::resolve(graph, args.gen.as_deref(), seed)?;
    let b = report::graph_bounds(&g)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&b)?);
    } else {
        print!("{}", report::graph_bounds_text(&b));
    }
    Ok(())
}
