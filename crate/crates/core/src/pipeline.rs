//! The analysis cascade: group checks, block systems, lifting through
//! semiregular elements, the Jackson condition, then exhaustive search.

use crate::explicit::catalog;
use crate::graph::{Graph, GraphJson};
use crate::hamilton::{
    find_hamilton_cycle, jackson_condition, verify_hamilton, HamiltonCertificate, Search, SolverConfig, DEFAULT_BUDGET,
};
use crate::lift::{lift_hamilton_with, LiftConfig};
use crate::perm::{block_systems, find_semiregular, is_prime, prime_divisors, GroupJson, PermGroup, SemiregularSearch};
use crate::exec::Exec;
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("group degree {group} does not match graph order {graph}")]
    GroupDegreeMismatch { group: usize, graph: usize },
    #[error("generator {0} is not an automorphism of the graph")]
    GroupNotAutomorphisms(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub budget: u64,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            budget: DEFAULT_BUDGET,
            seed: SemiregularSearch::DEFAULT_SEED,
            exec: Exec::Sequential,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub vertices: usize,
    pub edges: usize,
    pub regular: Option<usize>,
    pub connected: bool,
    pub group_generators: Option<usize>,
    pub group_order: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub strategy: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AnalysisResult {
    Certificate { certificate: HamiltonCertificate, strategy: String },
    NoHamiltonCycle { reason: String },
    Unknown { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input: InputSummary,
    pub vertex_transitive: bool,
    pub block_systems: Vec<usize>,
    pub case_labels: Vec<String>,
    pub trace: Vec<TraceStep>,
    pub result: AnalysisResult,
    pub exception_flag: bool,
}

impl AnalysisReport {
    /// 0 certificate, 1 proven none, 2 unknown.
    pub fn exit_code(&self) -> i32 {
        match self.result {
            AnalysisResult::Certificate { .. } => 0,
            AnalysisResult::NoHamiltonCycle { .. } => 1,
            AnalysisResult::Unknown { .. } => 2,
        }
    }
}

struct Trace(Vec<TraceStep>);

impl Trace {
    fn push(&mut self, strategy: &str, outcome: &str, detail: Option<String>) {
        self.0.push(TraceStep {
            strategy: strategy.to_string(),
            outcome: outcome.to_string(),
            detail,
        });
    }
}

/// Labels for the block sizes `p, 2p, 3p, 2, 3, 6` when `n = 6p`.
fn case_labels(n: usize, sizes: &[usize]) -> Vec<String> {
    if n % 6 != 0 || !is_prime((n / 6) as u64) {
        return Vec::new();
    }
    let p = n / 6;
    let named = [(p, "p"), (2 * p, "2p"), (3 * p, "3p"), (2, "2"), (3, "3"), (6, "6")];
    let mut out = Vec::new();
    for (size, label) in named {
        let l = format!("block size {label}");
        if sizes.contains(&size) && !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// True when the edge set is exactly that of the catalog truncated
/// Petersen graph.
pub fn is_truncated_petersen(g: &Graph) -> bool {
    g.n() == 30 && catalog("truncated_petersen").is_ok_and(|e| e.graph == *g)
}

pub fn analyze(graph: &Graph, group: Option<&PermGroup>, opts: &AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let n = graph.n();
    if let Some(g) = group {
        if g.degree() != n {
            return Err(AnalyzeError::GroupDegreeMismatch { group: g.degree(), graph: n });
        }
        if let Some(i) = g.generators().iter().position(|s| !graph.is_automorphism(s)) {
            return Err(AnalyzeError::GroupNotAutomorphisms(i));
        }
    }
    let connected = graph.is_connected();
    let input = InputSummary {
        vertices: n,
        edges: graph.edge_count(),
        regular: graph.regular_degree(),
        connected,
        group_generators: group.map(|g| g.generators().len()),
        group_order: group.map(|g| g.order().to_string()),
    };
    let mut trace = Trace(Vec::new());
    let vertex_transitive = group.is_some_and(|g| n > 0 && g.is_transitive());
    trace.push(
        "verify_group",
        match (group, vertex_transitive) {
            (None, _) => "skipped",
            (Some(_), true) => "transitive",
            (Some(_), false) => "intransitive",
        },
        group.map(|g| format!("{} generators, order {}", g.generators().len(), g.order())),
    );

    let mut sizes = Vec::new();
    if let (Some(g), true) = (group, vertex_transitive) {
        let systems = block_systems(g).expect("group is transitive");
        sizes = systems.iter().map(|b| b.cell_size).collect();
        trace.push("block_systems", &format!("{} found", systems.len()), Some(format!("cell sizes {sizes:?}")));
    }
    let labels = case_labels(n, &sizes);
    let exception_flag = is_truncated_petersen(graph);

    let report = |trace: Trace, result| AnalysisReport {
        input: input.clone(),
        vertex_transitive,
        block_systems: sizes.clone(),
        case_labels: labels.clone(),
        trace: trace.0,
        result,
        exception_flag,
    };

    if !connected {
        trace.push("connectivity", "disconnected", None);
        return Ok(report(
            trace,
            AnalysisResult::NoHamiltonCycle {
                reason: "disconnected".into(),
            },
        ));
    }

    let found = |trace: Trace, certificate: HamiltonCertificate, strategy: &str| {
        debug_assert!(verify_hamilton(graph, &certificate));
        report(
            trace,
            AnalysisResult::Certificate {
                certificate,
                strategy: strategy.to_string(),
            },
        )
    };

    match group {
        Some(g) if n >= 3 => {
            let mut primes = prime_divisors(n as u64);
            primes.reverse();
            let search = SemiregularSearch {
                seed: opts.seed,
                ..Default::default()
            };
            let lift_cfg = LiftConfig {
                quotient_budget: opts.budget,
                ..Default::default()
            };
            for p in primes {
                let name = format!("lift p={p}");
                let Some(rho) = find_semiregular(g, p, &search) else {
                    trace.push(&name, "no semiregular element", None);
                    continue;
                };
                let attempt = lift_hamilton_with(graph, &rho, p as usize, &lift_cfg)
                    .expect("semiregular automorphism from the group");
                let detail = Some(format!("m={}, quotient cycles tried {}", attempt.m, attempt.quotient_cycles_tried));
                match attempt.certificate {
                    Some(cert) => {
                        trace.push(&name, "found", detail);
                        return Ok(found(trace, cert, &name));
                    }
                    None => {
                        let note = attempt.note.unwrap_or_default();
                        trace.push(&name, "failed", detail.map(|d| format!("{d}; {note}")));
                    }
                }
            }
        }
        _ => trace.push("lift", "skipped", Some("no group supplied".into())),
    }

    let solver = SolverConfig {
        budget: opts.budget,
        exec: opts.exec,
        use_dp: true,
    };
    if jackson_condition(graph) {
        match find_hamilton_cycle(graph, &solver) {
            Search::Found(c) => {
                trace.push("jackson", "found", None);
                return Ok(found(trace, c, "jackson"));
            }
            other => trace.push("jackson", "condition holds but solver did not return a cycle", Some(format!("{other:?}"))),
        }
    } else {
        trace.push("jackson", "condition fails", None);
    }

    let result = match find_hamilton_cycle(graph, &solver) {
        Search::Found(c) => {
            trace.push("exact_search", "found", None);
            return Ok(found(trace, c, "exact_search"));
        }
        Search::None => {
            trace.push("exact_search", "exhausted", None);
            AnalysisResult::NoHamiltonCycle {
                reason: "exhaustive search".into(),
            }
        }
        Search::Unknown => {
            trace.push("exact_search", "budget exhausted", Some(format!("budget {}", opts.budget)));
            AnalysisResult::Unknown {
                reason: "search budget exhausted".into(),
            }
        }
    };
    Ok(report(trace, result))
}

/// Parses graph and optional group JSON, then runs [`analyze`].
pub fn analyze_json(graph: &str, group: Option<&str>, opts: &AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let malformed = |e: &dyn std::fmt::Display| AnalyzeError::MalformedInput(e.to_string());
    let gj: GraphJson = serde_json::from_str(graph).map_err(|e| malformed(&e))?;
    let graph = Graph::try_from(gj).map_err(|e| malformed(&e))?;
    let group = match group {
        Some(s) => {
            let j: GroupJson = serde_json::from_str(s).map_err(|e| malformed(&e))?;
            Some(PermGroup::try_from(j).map_err(|e| malformed(&e))?)
        }
        None => None,
    };
    analyze(&graph, group.as_ref(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    fn entry(name: &str) -> (Graph, PermGroup) {
        let e = catalog(name).unwrap();
        let g = PermGroup::new(e.graph.n(), e.automorphisms).unwrap();
        (e.graph, g)
    }

    #[test]
    fn circulant_lifts() {
        let (x, g) = entry("circulant:30:{1,6}");
        let r = analyze(&x, Some(&g), &AnalyzeOptions::default()).unwrap();
        match &r.result {
            AnalysisResult::Certificate { certificate, strategy } => {
                assert!(strategy.starts_with("lift"));
                assert!(verify_hamilton(&x, certificate));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(r.exit_code(), 0);
        assert!(r.case_labels.iter().any(|l| l == "block size p"));
    }

    #[test]
    fn disconnected_reported() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let r = analyze(&two, None, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.result, AnalysisResult::NoHamiltonCycle { reason: "disconnected".into() });
    }

    #[test]
    fn group_checks() {
        let (_, g) = entry("petersen");
        assert!(matches!(
            analyze(&cycle(9), Some(&g), &AnalyzeOptions::default()),
            Err(AnalyzeError::GroupDegreeMismatch { .. })
        ));
        let (x, _) = entry("petersen");
        let rot = crate::corpus::cyclic(10);
        assert!(matches!(
            analyze(&x, Some(&rot), &AnalyzeOptions::default()),
            Err(AnalyzeError::GroupNotAutomorphisms(0))
        ));
    }

    #[test]
    fn petersen_no_cycle() {
        let (x, g) = entry("petersen");
        let r = analyze(&x, Some(&g), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.exit_code(), 1);
        assert!(!r.exception_flag);
        let names: Vec<&str> = r.trace.iter().map(|s| s.strategy.as_str()).collect();
        assert_eq!(names, ["verify_group", "block_systems", "lift p=5", "lift p=2", "jackson", "exact_search"]);
    }
}
