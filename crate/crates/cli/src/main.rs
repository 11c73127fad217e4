mod cycles;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use vtham::corpus::fixture;
use vtham::exec::Exec;
use vtham::explicit::{catalog, CATALOG_NAMES};
use vtham::gf2k::{eq2_table, quad_irreducible_m, quadratic_is_irreducible, Field, GfError};
use vtham::graph::{Graph, GraphJson};
use vtham::hamilton::{find_hamilton_cycle, find_hamilton_path, verify_hamilton, HamiltonCertificate, Search, SolverConfig, DEFAULT_BUDGET};
use vtham::orbital::{orbital_graph_with, suborbits, SuborbitTable};
use vtham::perm::{GroupJson, PermGroup, Permutation, SemiregularSearch};
use vtham::pipeline::{analyze, AnalyzeOptions};

/// Exit status for unreadable or inconsistent input.
const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "vtham", version, about = "Hamilton cycles in vertex-transitive graphs")]
struct Cli {
    /// Search-node limit for the exact solver.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for the semiregular element search.
    #[arg(long, global = true, default_value_t = SemiregularSearch::DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Use the data-parallel paths where available.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the strategy cascade and print an analysis report.
    Analyze {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        group: GroupSource,
        /// Ignore the automorphisms that come with a catalog graph.
        #[arg(long)]
        no_group: bool,
    },
    /// Suborbits of a transitive group and the orbital graph of a selection.
    Orbital {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long, default_value_t = 0)]
        point: usize,
        /// Suborbit indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        select: Vec<usize>,
    },
    /// Solution counts of a^2 + c theta^m a y^3 + c^2 y^6 + 1 = 0 over GF(2^k).
    Field {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Print a catalog graph with its automorphism generators.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Exact Hamilton cycle (or path) search.
    Solve {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        path: bool,
    },
    /// Check a certificate against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Args)]
struct GraphSource {
    /// Graph JSON file `{"n": .., "edges": [[u, v], ..]}`.
    #[arg(long, conflicts_with = "catalog")]
    graph: Option<PathBuf>,
    /// Catalog name, e.g. `petersen` or `circulant:30:1,6`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args)]
struct GroupSource {
    /// Group JSON file `{"degree": n, "generators": [[..], ..]}`.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Bundled group fixture, e.g. `psl2_16_gens`.
    #[arg(long)]
    fixture: Option<String>,
    /// Generator in cycle notation; repeatable, needs `--degree`.
    #[arg(long = "gen")]
    gens: Vec<String>,
    #[arg(long)]
    degree: Option<usize>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

impl GraphSource {
    /// The graph and, for catalog graphs, its automorphism generators.
    fn load(&self) -> Result<(Graph, Option<Vec<Permutation>>)> {
        match (&self.graph, &self.catalog) {
            (Some(path), _) => {
                let j: GraphJson = serde_json::from_str(&read(path)?).context("graph JSON")?;
                Ok((Graph::try_from(j)?, None))
            }
            (None, Some(name)) => {
                let e = catalog(name)?;
                Ok((e.graph, Some(e.automorphisms)))
            }
            (None, None) => bail!("one of --graph or --catalog is required"),
        }
    }
}

impl GroupSource {
    fn given(&self) -> bool {
        self.group.is_some() || self.fixture.is_some() || !self.gens.is_empty()
    }

    fn load(&self, default_degree: Option<usize>) -> Result<Option<PermGroup>> {
        if let Some(path) = &self.group {
            let j: GroupJson = serde_json::from_str(&read(path)?).context("group JSON")?;
            return Ok(Some(PermGroup::try_from(j)?));
        }
        if let Some(name) = &self.fixture {
            let f = fixture(name)?;
            let g = f.group().with_context(|| format!("fixture `{name}` is not a group"))?;
            return Ok(Some(g.clone()));
        }
        if self.gens.is_empty() {
            return Ok(None);
        }
        let n = self
            .degree
            .or(default_degree)
            .context("--gen needs --degree")?;
        let gens = self
            .gens
            .iter()
            .map(|s| cycles::parse_cycles(s, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(PermGroup::new(n, gens)?))
    }
}

fn emit<T: serde::Serialize>(out: &Option<PathBuf>, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn suborbit_summary(t: &SuborbitTable) {
    for (i, s) in t.suborbits.iter().enumerate() {
        let pair = if t.pairing[i] == i {
            "self-paired".to_string()
        } else {
            format!("paired with {}", t.pairing[i])
        };
        eprintln!("suborbit {i}: length {}, least point {}, {pair}", s.len(), s[0]);
    }
}

fn search_json(s: &Search) -> (Value, u8) {
    match s {
        Search::Found(c) => (serde_json::to_value(c).unwrap(), 0),
        Search::None => (json!({"status": "none"}), 1),
        Search::Unknown => (json!({"status": "unknown"}), 2),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let exec = if cli.parallel { Exec::available() } else { Exec::Sequential };
    match &cli.command {
        Command::Analyze { graph, group, no_group } => {
            let (g, auts) = graph.load()?;
            let grp = if group.given() {
                group.load(Some(g.n()))?
            } else if *no_group {
                None
            } else {
                auts.map(|a| PermGroup::new(g.n(), a)).transpose()?
            };
            let opts = AnalyzeOptions {
                budget: cli.budget,
                seed: cli.seed,
                exec,
            };
            let report = analyze(&g, grp.as_ref(), &opts)?;
            emit(&cli.json_out, &report)?;
            Ok(report.exit_code() as u8)
        }
        Command::Orbital { group, point, select } => {
            let grp = group.load(None)?.context("a group is required")?;
            let table = suborbits(&grp, *point)?;
            suborbit_summary(&table);
            let mut out = json!({ "suborbits": table });
            if !select.is_empty() {
                let og = orbital_graph_with(&grp, &table, select)?;
                if og.symmetrized {
                    eprintln!("warning: selection closed under pairing to {:?}", og.selection);
                }
                eprintln!(
                    "orbital graph: {} vertices, valency {:?}, connected {}",
                    og.graph.n(),
                    og.graph.regular_degree(),
                    og.connected
                );
                out["graph"] = serde_json::to_value(GraphJson::from(&og.graph))?;
                out["connected"] = json!(og.connected);
                out["symmetrized"] = json!(og.symmetrized);
                out["selection"] = json!(og.selection);
            }
            emit(&cli.json_out, &out)?;
            Ok(0)
        }
        Command::Field { k, m } => {
            if *k < 2 {
                bail!("extension degree {k} too small: the field command needs k in 2..=16");
            }
            let f = Field::new(*k)?;
            let m = match m {
                Some(m) if !quadratic_is_irreducible(&f, *m) => return Err(GfError::ReducibleQuadratic(*m).into()),
                Some(m) => *m,
                None => quad_irreducible_m(&f)?,
            };
            let rows = eq2_table(&f, m, exec);
            let min = rows.iter().map(|r| r.count).min();
            let min_nz = rows.iter().map(|r| r.count_y_nonzero).min();
            let all_pass = rows.iter().all(|r| r.weil_pass);
            eprintln!("GF(2^{k}) modulus {:#x}, m = {m}: {} rows, min count {min:?}, min with y != 0 {min_nz:?}, Weil bound {}",
                f.modulus(), rows.len(), if all_pass { "holds" } else { "FAILS" });
            emit(
                &cli.json_out,
                &json!({
                    "k": k, "q": f.q(), "modulus": f.modulus(), "m": m,
                    "rows": rows, "min_count": min, "min_count_y_nonzero": min_nz, "weil_pass": all_pass,
                }),
            )?;
            Ok(0)
        }
        Command::Catalog { name, list } => {
            if *list || name.is_none() {
                for n in CATALOG_NAMES {
                    println!("{n}");
                }
                return Ok(0);
            }
            let e = catalog(name.as_deref().unwrap())?;
            let gens: Vec<&[usize]> = e.automorphisms.iter().map(Permutation::images).collect();
            emit(
                &cli.json_out,
                &json!({
                    "name": e.name,
                    "graph": GraphJson::from(&e.graph),
                    "automorphisms": gens,
                    "vertex_transitive": e.vertex_transitive,
                }),
            )?;
            Ok(0)
        }
        Command::Solve { graph, path } => {
            let (g, _) = graph.load()?;
            let cfg = SolverConfig {
                budget: cli.budget,
                exec,
                use_dp: true,
            };
            let s = if *path {
                find_hamilton_path(&g, &cfg)
            } else {
                find_hamilton_cycle(&g, &cfg)
            };
            let (v, code) = search_json(&s);
            emit(&cli.json_out, &v)?;
            Ok(code)
        }
        Command::Verify { graph, cert } => {
            let (g, _) = graph.load()?;
            let c: HamiltonCertificate = serde_json::from_str(&read(cert)?).context("certificate JSON")?;
            let ok = verify_hamilton(&g, &c);
            emit(&cli.json_out, &json!({ "valid": ok }))?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
