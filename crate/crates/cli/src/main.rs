use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use matchforce::bounds::{self, verify_bounds};
use matchforce::forcing::{self, DEFAULT_MAX_EDGES, DEFAULT_NODE_LIMIT};
use matchforce::ilp::{self, IlpModel};
use matchforce::matchings;
use matchforce::{corona_product, Graph, GraphFamily, SearchLimits, DEFAULT_BUDGET};

/// Global forcing sets for maximal matchings.
///
/// Graph arguments take either an edge-list file or a family spec such as
/// `path:4`, `cycle:5`, `complete:3`, `complete_bipartite:2,3`, `star:3`,
/// `empty:2`.
#[derive(Parser)]
#[command(name = "matchforce", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph as an edge list.
    Gen {
        family: GraphFamily,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build G∘H; writes the edge list and a partition sidecar.
    Corona {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Edge list output; the sidecar goes to `<stem>.partition.json`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Sidecar path, overriding the default next to `--output`.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Number of maximal matchings Ψ.
    Psi(CountArgs),
    /// Matching number ν.
    Nu(CountArgs),
    /// Saturation number s.
    Sat(CountArgs),
    /// Global forcing number φ_gm.
    Phi {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
    },
    /// Check whether an edge set is a global forcing set.
    VerifyForcing {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 0-based edge indices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        edges: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Export the 0/1 program in LP format.
    ExportLp {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Read a solver solution (`x<i> <value>` lines) back as an edge set.
    ImportSolution {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every corona bound against exact values (JSON report).
    Bounds {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// Bounds report for every factor pair from the listed families (CSV).
    Sweep {
        /// Comma-separated family names.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        /// Largest vertex count per factor.
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        limits: Limits,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether every maximal matching is perfect.
    RandomlyMatchable {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file or family spec.
    #[arg(long = "in", value_name = "GRAPH")]
    graph: String,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Emit a JSON report including every maximal matching.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Limits {
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
}

impl From<&Limits> for SearchLimits {
    fn from(l: &Limits) -> Self {
        SearchLimits {
            budget: l.budget,
            node_limit: l.node_limit,
            max_edges: l.max_edges,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Greedy,
}

fn load_graph(source: &str) -> Result<Graph> {
    if let Ok(family) = source.parse::<GraphFamily>() {
        return Ok(family.generate()?);
    }
    let text = fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {source}"))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn sidecar_path(edge_list: &Path) -> PathBuf {
    let stem = edge_list
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    edge_list.with_file_name(format!("{stem}.partition.json"))
}

fn families_up_to(name: &str, max_n: usize) -> Result<Vec<GraphFamily>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        match name {
            "path" => out.push(GraphFamily::Path(n)),
            "complete" => out.push(GraphFamily::Complete(n)),
            "empty" => out.push(GraphFamily::Empty(n)),
            "cycle" if n >= 3 => out.push(GraphFamily::Cycle(n)),
            "star" if n >= 2 => out.push(GraphFamily::Star(n - 1)),
            "complete_bipartite" => out.extend(
                (1..n)
                    .filter(|&a| a <= n - a)
                    .map(|a| GraphFamily::CompleteBipartite(a, n - a)),
            ),
            "cycle" | "star" => {}
            other => bail!("unknown family `{other}`"),
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { family, output } => {
            emit(output.as_deref(), &family.generate()?.to_edge_list())?;
        }
        Command::Corona {
            g,
            h,
            output,
            partition,
        } => {
            let c = corona_product(&load_graph(&g)?, &load_graph(&h)?)?;
            emit(output.as_deref(), &c.graph().to_edge_list())?;
            let sidecar = partition.or_else(|| output.as_deref().map(sidecar_path));
            if let Some(path) = sidecar {
                let mut text = c.partition().to_json();
                text.push('\n');
                emit(Some(&path), &text)?;
            }
        }
        Command::Psi(args) => count(args, |s| s.psi)?,
        Command::Nu(args) => count(args, |s| s.nu)?,
        Command::Sat(args) => count(args, |s| s.sat)?,
        Command::Phi {
            input,
            method,
            limits,
            json,
        } => {
            let g = load_graph(&input.graph)?;
            let r = match method {
                Method::Exact => forcing::phi_exact(&g, (&limits).into())?,
                Method::Greedy => forcing::phi_greedy(&g, limits.budget)?,
            };
            if matches!(method, Method::Exact) && !r.optimal {
                eprintln!("warning: node limit reached, result is an upper bound");
            }
            if json {
                println!("{}", r.to_json());
            } else {
                println!("{}", r.size);
            }
        }
        Command::VerifyForcing {
            input,
            edges,
            budget,
        } => {
            let g = load_graph(&input.graph)?;
            println!("{}", forcing::is_global_forcing_set(&g, &edges, budget)?);
        }
        Command::ExportLp {
            input,
            no_dedup,
            budget,
            output,
        } => {
            let g = load_graph(&input.graph)?;
            let model = IlpModel::build(&g, budget, !no_dedup)?;
            emit(output.as_deref(), &ilp::export_lp(&model))?;
        }
        Command::ImportSolution {
            input,
            solution,
            budget,
            json,
        } => {
            let g = load_graph(&input.graph)?;
            let text = fs::read_to_string(&solution)
                .with_context(|| format!("reading {}", solution.display()))?;
            let sol = ilp::import_solution(&text, &g)?;
            let is_forcing = forcing::is_global_forcing_set(&g, &sol.edges, budget)?;
            if json {
                println!(
                    "{}",
                    json!({"objective": sol.objective, "set": sol.edges, "forcing": is_forcing})
                );
            } else {
                if !is_forcing {
                    eprintln!("warning: imported set is not a global forcing set");
                }
                println!("{}", sol.objective);
            }
        }
        Command::Bounds { g, h, limits } => {
            let report = verify_bounds(&load_graph(&g)?, &load_graph(&h)?, (&limits).into())?;
            println!("{}", report.to_json());
            if !report.all_pass() {
                eprintln!("bound verdict failed");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sweep {
            families,
            max_n,
            limits,
            output,
        } => {
            let mut all = Vec::new();
            for name in &families {
                all.extend(families_up_to(name.trim(), max_n)?);
            }
            let rows = bounds::sweep(&all, (&limits).into())?;
            emit(output.as_deref(), &bounds::sweep_csv(&rows))?;
            let failed: Vec<String> = rows
                .iter()
                .filter(|r| !r.report.all_pass())
                .map(|r| format!("{} o {}", r.g, r.h))
                .collect();
            if !failed.is_empty() {
                eprintln!("bound verdicts failed for: {}", failed.join(", "));
                return Ok(ExitCode::from(1));
            }
        }
        Command::RandomlyMatchable {
            input,
            budget,
            json,
        } => {
            let g = load_graph(&input.graph)?;
            let r = matchings::is_randomly_matchable(&g, budget)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "definitional": r.definitional,
                        "structural": r.structural,
                        "components": g.recognize_structure(),
                    })
                );
            } else {
                println!("{}", r.definitional);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count(args: CountArgs, pick: fn(&matchings::MatchingSummary) -> usize) -> Result<()> {
    let g = load_graph(&args.input.graph)?;
    if args.json {
        let all = matchings::enumerate_maximal_matchings(&g, args.budget)?;
        let summary = matchings::summarize(&g, args.budget)?;
        let lists: Vec<Vec<usize>> = all.iter().map(|m| m.edge_indices()).collect();
        println!(
            "{}",
            json!({
                "psi": summary.psi,
                "nu": summary.nu,
                "sat": summary.sat,
                "has_perfect": summary.has_perfect,
                "matchings": lists,
            })
        );
    } else {
        println!("{}", pick(&matchings::summarize(&g, args.budget)?));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
