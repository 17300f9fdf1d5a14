//! The `bdg` command line: every subcommand reads a `.bdg` document from a
//! file (or stdin when the path is `-` or absent) and writes data to stdout,
//! diagnostics to stderr.
//!
//! Exit codes: 0 success or affirmative answer, 1 negative answer where one
//! is meaningful, 2 usage error, 3 input error, 4 enumeration cap or guard
//! breach. The `BIDIGRAPH_CAP` environment variable overrides the default
//! enumeration caps; an explicit `--cap` beats both.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::format::{export_dot, parse_bdg, serialize_bdg, DotAnnotations};
use crate::graph::{BidirectedGraph, EdgeId, Sign, SignedVertex};
use crate::matroid;
use crate::oracle::{self, OracleConfig};
use crate::reduction::{self, ReductionError};
use crate::state::{find_bcircuit, BWalk, StateDigraph};
use crate::{closure, graph::VertexId};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INPUT: i32 = 3;
const EXIT_CAP: i32 = 4;

const DEFAULT_CAP: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "bdg",
    about = "Transitive closure, reduction and matroid analysis of bidirected graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counts, sources/sinks, positivity and balance of a graph.
    Info { file: Option<PathBuf> },
    /// Transitive closure; emits the closed graph as .bdg or DOT.
    Closure {
        file: Option<PathBuf>,
        /// Emit DOT with added edges styled instead of .bdg text.
        #[arg(long)]
        dot: bool,
        /// Also list a witness b-path per added edge.
        #[arg(long)]
        witnesses: bool,
    },
    /// Transitive reduction by ordered elimination.
    Reduce {
        file: Option<PathBuf>,
        /// Elimination order as comma-separated edge names.
        #[arg(long)]
        order: Option<String>,
        /// Enumerate the reductions of every elimination order.
        #[arg(long)]
        all_orders: bool,
        /// Emit DOT with removed edges styled instead of .bdg text.
        #[arg(long)]
        dot: bool,
    },
    /// Shortest b-path between two signed vertices (`vertex:sign`).
    Bpath {
        file: Option<PathBuf>,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Edge names to exclude from the search.
        #[arg(long)]
        exclude: Vec<String>,
    },
    /// Detect a b-circuit; prints one witness when present.
    Bcircuit { file: Option<PathBuf> },
    /// Balance test.
    Balance {
        file: Option<PathBuf>,
        /// Also print the vertex set whose switching makes all edges positive.
        #[arg(long)]
        switch_set: bool,
    },
    /// Switch a vertex set and emit the resulting graph.
    Switch {
        file: Option<PathBuf>,
        /// Comma-separated vertex names.
        #[arg(long)]
        set: String,
    },
    /// Frame-matroid rank and balanced component count.
    Rank { file: Option<PathBuf> },
    /// Enumerate matroid circuits with their type tags.
    Circuits {
        file: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Quasibalance test; prints a handcuff witness when it fails.
    Quasibalance { file: Option<PathBuf> },
    /// Matroid connectivity test.
    MatroidConnected { file: Option<PathBuf> },
    /// Engine/oracle equivalence on seeded random graphs.
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// Run the CLI on the given arguments and return the process exit code.
pub fn cli_main(args: Vec<OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            }
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("bdg: {message}");
            code
        }
    }
}

type Failure = (i32, String);

fn read_graph(file: &Option<PathBuf>) -> Result<BidirectedGraph, Failure> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| (EXIT_INPUT, format!("stdin: {e}")))?;
            buf
        }
    };
    parse_bdg(&text).map_err(|e| (EXIT_INPUT, e.to_string()))
}

fn env_cap() -> Option<usize> {
    std::env::var("BIDIGRAPH_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
}

fn default_cap() -> usize {
    env_cap().unwrap_or(DEFAULT_CAP)
}

fn parse_signed_vertex(g: &BidirectedGraph, text: &str) -> Result<SignedVertex, Failure> {
    let err = || {
        (
            EXIT_USAGE,
            format!("`{text}` is not of the form vertex:sign"),
        )
    };
    let (name, sign) = text.rsplit_once(':').ok_or_else(err)?;
    let sign = match sign {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        _ => return Err(err()),
    };
    let v = g
        .vertex_id(name)
        .ok_or((EXIT_INPUT, format!("unknown vertex `{name}`")))?;
    Ok(SignedVertex::new(v, sign))
}

fn render_walk(g: &BidirectedGraph, walk: &BWalk) -> String {
    let mut out = format!(
        "{}:{}",
        g.vertex_name(walk.start().vertex),
        walk.start().sign
    );
    let verts = walk.vertices();
    for (i, step) in walk.steps().iter().enumerate() {
        let v = verts[i + 1];
        if i + 1 == walk.len() {
            out.push_str(&format!(
                " {} {}:{}",
                g.edge(step.edge).id,
                g.vertex_name(v),
                walk.end().sign
            ));
        } else {
            out.push_str(&format!(" {} {}", g.edge(step.edge).id, g.vertex_name(v)));
        }
    }
    out
}

fn names(g: &BidirectedGraph, set: &BTreeSet<EdgeId>) -> String {
    let mut v: Vec<&str> = set.iter().map(|e| g.edge(*e).id.as_str()).collect();
    v.sort_unstable();
    v.join(" ")
}

fn vertex_set_names(g: &BidirectedGraph, set: &BTreeSet<VertexId>) -> String {
    if set.is_empty() {
        return "(none)".into();
    }
    set.iter()
        .map(|v| g.vertex_name(*v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cmd: Cmd) -> Result<i32, Failure> {
    match cmd {
        Cmd::Info { file } => {
            let g = read_graph(&file)?;
            let (sources, sinks) = g.sources_and_sinks();
            println!("vertices: {}", g.vertex_count());
            println!("edges: {}", g.edge_count());
            println!("sources: {}", vertex_set_names(&g, &sources));
            println!("sinks: {}", vertex_set_names(&g, &sinks));
            println!("all-positive: {}", yesno(g.is_all_positive()));
            println!("all-negative: {}", yesno(g.is_all_negative()));
            println!("balanced: {}", yesno(g.is_balanced()));
            println!("antibalanced: {}", yesno(g.is_antibalanced()));
            Ok(EXIT_OK)
        }
        Cmd::Closure {
            file,
            dot,
            witnesses,
        } => {
            let g = read_graph(&file)?;
            let result = closure::transitive_closure(&g);
            if dot {
                // Added edges sit after the originals in the closed graph.
                let mut ann = DotAnnotations::default();
                for e in result.graph.edge_ids().skip(g.edge_count()) {
                    ann.added.insert(e);
                }
                print!("{}", export_dot(&result.graph, &ann));
            } else {
                print!("{}", serialize_bdg(&result.graph));
                println!("# added {} edge(s)", result.added.len());
                if witnesses {
                    for (key, witness) in &result.added {
                        println!(
                            "# witness {} via {}",
                            g.display_key(*key),
                            render_walk(&g, witness)
                        );
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Reduce {
            file,
            order,
            all_orders,
            dot,
        } => {
            let g = read_graph(&file)?;
            if all_orders {
                // The exhaustive-order scan keeps its own small edge bound;
                // BIDIGRAPH_CAP raises it explicitly.
                let sets = reduction::all_reductions(&g, env_cap()).map_err(|e| match e {
                    ReductionError::TooLarge { .. } => (EXIT_CAP, e.to_string()),
                    other => (EXIT_INPUT, other.to_string()),
                })?;
                println!("distinct reductions: {}", sets.len());
                let mut lines: Vec<String> =
                    sets.iter().map(|s| format!("reduction: {}", names(&g, s))).collect();
                lines.sort();
                for line in lines {
                    println!("{line}");
                }
                return Ok(EXIT_OK);
            }
            let order_ids: Option<Vec<EdgeId>> = match &order {
                None => None,
                Some(text) => {
                    let mut ids = Vec::new();
                    for name in text.split(',').filter(|s| !s.is_empty()) {
                        ids.push(
                            g.edge_id(name)
                                .ok_or((EXIT_INPUT, format!("unknown edge `{name}`")))?,
                        );
                    }
                    Some(ids)
                }
            };
            let result = reduction::transitive_reduction(&g, order_ids.as_deref())
                .map_err(|e| (EXIT_INPUT, e.to_string()))?;
            if dot {
                let mut ann = DotAnnotations::default();
                for (e, _) in &result.removed {
                    ann.removed.insert(*e);
                }
                print!("{}", export_dot(&g, &ann));
            } else {
                print!("{}", serialize_bdg(&result.graph));
                for (e, witness) in &result.removed {
                    println!(
                        "# removed {} via {}",
                        g.edge(*e).id,
                        render_walk(&g, witness)
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Bpath {
            file,
            from,
            to,
            exclude,
        } => {
            let g = read_graph(&file)?;
            let from = parse_signed_vertex(&g, &from)?;
            let to = parse_signed_vertex(&g, &to)?;
            let mut excluded = BTreeSet::new();
            for name in &exclude {
                excluded.insert(
                    g.edge_id(name)
                        .ok_or((EXIT_INPUT, format!("unknown edge `{name}`")))?,
                );
            }
            let sd = StateDigraph::without_edges(&g, &excluded);
            match sd.find_bpath(from, to) {
                Some(p) => {
                    println!("bpath: {}", render_walk(&g, &p));
                    Ok(EXIT_OK)
                }
                None => {
                    println!("none");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Bcircuit { file } => {
            let g = read_graph(&file)?;
            match find_bcircuit(&g) {
                None => {
                    println!("none");
                    Ok(EXIT_OK)
                }
                Some(p) => {
                    println!("bcircuit: {}", render_walk(&g, &p));
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Balance { file, switch_set } => {
            let g = read_graph(&file)?;
            match g.balancing_switch_set() {
                Some(set) => {
                    println!("balanced");
                    if switch_set {
                        println!("switch-set: {}", vertex_set_names(&g, &set));
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    println!("unbalanced");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Switch { file, set } => {
            let g = read_graph(&file)?;
            let names: Vec<&str> = set.split(',').filter(|s| !s.is_empty()).collect();
            let switched = g
                .switch_by_names(&names)
                .map_err(|e| (EXIT_INPUT, e.to_string()))?;
            print!("{}", serialize_bdg(&switched));
            Ok(EXIT_OK)
        }
        Cmd::Rank { file } => {
            let g = read_graph(&file)?;
            println!("rank: {}", matroid::rank(&g));
            println!(
                "balanced-components: {}",
                matroid::balanced_component_count(&g)
            );
            Ok(EXIT_OK)
        }
        Cmd::Circuits { file, cap } => {
            let g = read_graph(&file)?;
            let cap = cap.unwrap_or_else(default_cap);
            let list = matroid::enumerate_circuits(&g, cap);
            for (set, ty) in &list.circuits {
                println!("circuit {}: {}", ty.tag(), names(&g, set));
            }
            if list.truncated {
                eprintln!("bdg: circuit enumeration truncated at cap {cap}");
                return Ok(EXIT_CAP);
            }
            Ok(EXIT_OK)
        }
        Cmd::Quasibalance { file } => {
            let g = read_graph(&file)?;
            match matroid::find_handcuff(&g, default_cap()) {
                Ok(None) => {
                    println!("yes");
                    Ok(EXIT_OK)
                }
                Ok(Some((set, ty))) => {
                    println!("no");
                    println!("witness {}: {}", ty.tag(), names(&g, &set));
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err((EXIT_CAP, e.to_string())),
            }
        }
        Cmd::MatroidConnected { file } => {
            let g = read_graph(&file)?;
            match matroid::is_matroid_connected(&g, default_cap()) {
                Ok(true) => {
                    println!("yes");
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    println!("no");
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err((EXIT_CAP, e.to_string())),
            }
        }
        Cmd::OracleCheck { seed, cases } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cfg = OracleConfig {
                max_vertices: 6,
                max_edges: 9,
                max_chain_length: None,
            };
            for case in 0..cases {
                let g = oracle::random_graph(&mut rng, cfg.max_vertices, cfg.max_edges);
                if let Err(msg) = oracle::check_engine_oracle_agreement(&g, &cfg) {
                    eprintln!("bdg: case {case} disagrees: {msg}");
                    eprintln!("{}", serialize_bdg(&g));
                    return Ok(EXIT_NEGATIVE);
                }
            }
            println!("oracle-check: {cases} cases, seed {seed}: ok");
            Ok(EXIT_OK)
        }
    }
}
