//! Command-line front end: analysis reports, circuit/chain/S-graph
//! listings, chordality checks and the exhaustive catalog sweep.
//!
//! Exit codes: 0 success, 1 negative verdict on a check, 2 input error,
//! 3 enumeration cap exceeded.

use clap::{Parser, Subcommand};
use matroidal::catalog::{analyze, enumerate_simple_binary, CatalogEntry};
use matroidal::chordality::{delta_closure, find_chord, find_chordless_circuit};
use matroidal::graphs::{
    cocycle_matroid, cone, cycle_matroid, derived_sgraph, graphs_isomorphic, is_chordal_graph,
    s_labelings, sgraph_of, subgraph_embedding_check, LabeledGraph, SimpleGraph,
};
use matroidal::supersolvable::{all_mchains, find_mchain, mpartition};
use matroidal::{BinaryMatroid, Error, GeneralMatroid, Matroid};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "matroidal",
    version,
    about = "Chordality and supersolvability of binary matroids and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full analysis report for a matroid
    Analyze {
        input: PathBuf,
        /// Interpret a graph input as its cycle matroid (the default)
        #[arg(long)]
        cycle: bool,
        /// Interpret a graph input as its cocycle matroid
        #[arg(long)]
        cocycle: bool,
        /// Machine-readable flat key-value output
        #[arg(long)]
        kv: bool,
    },
    /// List all circuits, one sorted circuit per line
    Circuits {
        input: PathBuf,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Print the first M-chain, or all of them
    Mchain {
        input: PathBuf,
        /// Print every M-chain instead of the first
        #[arg(long)]
        all: bool,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Print the M-partition of the first M-chain
    Partition {
        input: PathBuf,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Print the S-graph of the first M-chain's partition
    Sgraph {
        input: PathBuf,
        /// Also write the S-graph in DOT format to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Check ell-chordality, with witnesses or a counterexample
    Chordal {
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Delta-closure of the circuits with at most ell+1 elements,
    /// compared against the full circuit set
    DeltaClosure {
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        cocycle: bool,
    },
    /// Print one S-labeling of a graph, or count them all
    Slabel {
        input: PathBuf,
        /// Print the number of S-labelings instead
        #[arg(long)]
        count: bool,
    },
    /// Print the cone over a graph; with --check, verify that the cone's
    /// derived S-graph is isomorphic to the original graph
    Cone {
        input: PathBuf,
        #[arg(long)]
        check: bool,
    },
    /// Sweep all simple binary matroids within the given bounds
    Catalog {
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Print one verdict line per catalog entry
        #[arg(long)]
        report: bool,
    },
}

enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::EnumerationCapExceeded { .. }) => 3,
            CliError::Lib(Error::PropertyViolation(_)) => 1,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum Loaded {
    Binary(BinaryMatroid),
    General(GeneralMatroid),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path) -> Result<LabeledGraph, CliError> {
    Ok(LabeledGraph::parse_graph(&read(path)?)?)
}

/// Loads a matroid by file extension: `.gf2` matrices, `.circ` circuit
/// lists, `.graph` graphs converted via cycle or cocycle matroid.
fn load_matroid(path: &Path, cycle: bool, cocycle: bool) -> Result<Loaded, CliError> {
    if cycle && cocycle {
        return Err(CliError::Usage(
            "--cycle and --cocycle are mutually exclusive".into(),
        ));
    }
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or_default();
    match ext {
        "gf2" => Ok(Loaded::Binary(BinaryMatroid::parse_gf2(&read(path)?)?)),
        "circ" => Ok(Loaded::General(GeneralMatroid::parse_circ(&read(path)?)?)),
        "graph" => {
            let g = load_graph(path)?;
            let m = if cocycle {
                cocycle_matroid(&g)?
            } else {
                cycle_matroid(&g)?
            };
            Ok(Loaded::Binary(m))
        }
        other => Err(CliError::Usage(format!(
            "unsupported input extension {other:?} (expected .gf2, .circ or .graph)"
        ))),
    }
}

fn load_binary(path: &Path, cycle: bool, cocycle: bool) -> Result<BinaryMatroid, CliError> {
    match load_matroid(path, cycle, cocycle)? {
        Loaded::Binary(m) => Ok(m),
        Loaded::General(_) => Err(CliError::Usage(
            "this command needs a binary matroid; circuit-list inputs are not supported here"
                .into(),
        )),
    }
}

fn entry_for(path: &Path, loaded: Loaded) -> CatalogEntry {
    let provenance = path.display().to_string();
    match loaded {
        Loaded::Binary(m) => CatalogEntry::from_binary(provenance, m),
        Loaded::General(m) => CatalogEntry::from_general(provenance, m),
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Analyze {
            input,
            cycle,
            cocycle,
            kv,
        } => {
            let entry = entry_for(&input, load_matroid(&input, cycle, cocycle)?);
            let report = analyze(&entry)?;
            if kv {
                print!("{}", report.to_kv());
            } else {
                print!("{report}");
            }
            Ok(0)
        }

        Command::Circuits {
            input,
            cycle,
            cocycle,
        } => {
            let loaded = load_matroid(&input, cycle, cocycle)?;
            let m = match &loaded {
                Loaded::Binary(m) => m as &dyn Matroid,
                Loaded::General(m) => m as &dyn Matroid,
            };
            for c in m.circuits()?.iter() {
                println!(
                    "{}",
                    c.labels()
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(0)
        }

        Command::Mchain {
            input,
            all,
            cycle,
            cocycle,
        } => {
            let m = load_binary(&input, cycle, cocycle)?;
            if all {
                let chains = all_mchains(&m)?;
                if chains.is_empty() {
                    println!("not supersolvable: no M-chain exists");
                    return Ok(1);
                }
                for c in &chains {
                    println!("{c}");
                }
            } else {
                match find_mchain(&m)? {
                    Some(c) => println!("{c}"),
                    None => {
                        println!("not supersolvable: no M-chain exists");
                        return Ok(1);
                    }
                }
            }
            Ok(0)
        }

        Command::Partition {
            input,
            cycle,
            cocycle,
        } => {
            let m = load_binary(&input, cycle, cocycle)?;
            match find_mchain(&m)? {
                Some(c) => {
                    println!("{}", mpartition(&c));
                    Ok(0)
                }
                None => {
                    println!("not supersolvable: no M-chain exists");
                    Ok(1)
                }
            }
        }

        Command::Sgraph {
            input,
            dot,
            cycle,
            cocycle,
        } => {
            let m = load_binary(&input, cycle, cocycle)?;
            let Some(chain) = find_mchain(&m)? else {
                println!("not supersolvable: no M-chain exists");
                return Ok(1);
            };
            let p = mpartition(&chain);
            let sg = sgraph_of(&m, &p)?;
            for (i, b) in sg.blocks().iter().enumerate() {
                println!("P{} = {}", i + 1, b);
            }
            for (i, j) in sg.edges() {
                println!("P{} -- P{}", i + 1, j + 1);
            }
            if let Some(out) = dot {
                std::fs::write(&out, sg.to_dot()).map_err(|e| CliError::Io(out.clone(), e))?;
            }
            Ok(0)
        }

        Command::Chordal {
            input,
            ell,
            cycle,
            cocycle,
        } => {
            if ell < 2 {
                return Err(CliError::Usage("--ell must be at least 2".into()));
            }
            let loaded = load_matroid(&input, cycle, cocycle)?;
            let m = match &loaded {
                Loaded::Binary(m) => m as &dyn Matroid,
                Loaded::General(m) => m as &dyn Matroid,
            };
            match find_chordless_circuit(m, ell)? {
                None => {
                    println!("{ell}-chordal: true");
                    for c in m.circuits()?.iter() {
                        if c.len() >= ell {
                            let w = find_chord(m, c)?.expect("chord exists for every circuit");
                            println!("circuit {c}: {w}");
                        }
                    }
                    Ok(0)
                }
                Some(c) => {
                    println!("{ell}-chordal: false");
                    println!("chordless circuit: {c}");
                    Ok(1)
                }
            }
        }

        Command::DeltaClosure {
            input,
            ell,
            cycle,
            cocycle,
        } => {
            if ell < 2 {
                return Err(CliError::Usage("--ell must be at least 2".into()));
            }
            let loaded = load_matroid(&input, cycle, cocycle)?;
            let m = match &loaded {
                Loaded::Binary(m) => m as &dyn Matroid,
                Loaded::General(m) => m as &dyn Matroid,
            };
            let full = m.circuits()?;
            let seed = full.at_most(ell + 1);
            let closed = delta_closure(m, &seed)?;
            for c in closed.iter() {
                println!("{c}");
            }
            let complete = closed == *full;
            println!(
                "generates all circuits: {complete} ({} of {})",
                closed.len(),
                full.len()
            );
            Ok(if complete { 0 } else { 1 })
        }

        Command::Slabel { input, count } => {
            let g = load_graph(&input)?;
            if count {
                println!("{}", s_labelings(&g)?.len());
                return Ok(0);
            }
            match is_chordal_graph(&g)? {
                Some(order) => {
                    println!(
                        "{}",
                        order
                            .iter()
                            .map(|&v| g.vertex_name(v).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    Ok(0)
                }
                None => {
                    println!("not chordal: no S-labeling exists");
                    Ok(1)
                }
            }
        }

        Command::Cone { input, check } => {
            let g = load_graph(&input)?;
            let coned = cone(&g)?;
            if !check {
                print!("{}", coned.to_graph_format());
                return Ok(0);
            }
            let Some(order) = is_chordal_graph(&g)? else {
                println!("not chordal: the construction needs an S-labeling");
                return Ok(1);
            };
            let apex = g.n_vertices();
            let mut cone_order = Vec::with_capacity(apex + 1);
            cone_order.push(apex);
            cone_order.extend(&order);
            let sg = derived_sgraph(&coned, &cone_order)?;
            let isomorphic =
                graphs_isomorphic(&sg.to_simple_graph(), &SimpleGraph::from_labeled(&g)?)?;
            let embeds = subgraph_embedding_check(&coned, &cone_order, &sg);
            println!("derived S-graph isomorphic to input: {isomorphic}");
            println!("derived S-graph embeds in the cone: {embeds}");
            Ok(if isomorphic && embeds { 0 } else { 1 })
        }

        Command::Catalog {
            max_r,
            max_n,
            report,
        } => {
            let mut entries = 0usize;
            let mut chordal = 0usize;
            let mut supersolvable = 0usize;
            let mut chordal_not_supersolvable = 0usize;
            for entry in enumerate_simple_binary(max_r, max_n)? {
                let r = analyze(&entry)?;
                entries += 1;
                let is_chordal = r.chordal == Some(true);
                let is_ss = r.supersolvable == Some(true);
                chordal += usize::from(is_chordal);
                supersolvable += usize::from(is_ss);
                chordal_not_supersolvable += usize::from(is_chordal && !is_ss);
                if report {
                    println!(
                        "{} n={} rank={} circuits={} chordal={} supersolvable={}",
                        r.id, r.n, r.rank, r.circuit_count, is_chordal, is_ss
                    );
                }
            }
            println!("entries: {entries}");
            println!("chordal: {chordal}");
            println!("supersolvable: {supersolvable}");
            println!("chordal-not-supersolvable: {chordal_not_supersolvable}");
            Ok(0)
        }
    }
}
