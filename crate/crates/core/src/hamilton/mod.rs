//! Exact Hamilton cycle and path search, certificate checking, and the
//! Jackson sufficient condition.
//!
//! Every search returns one of three verdicts. [`Search::None`] is only
//! produced by a completed exhaustive search (or a structural obstruction
//! such as a cut vertex); running out of budget gives [`Search::Unknown`].

mod backtrack;
mod dp;

pub use dp::DP_MAX_VERTICES;

use crate::exec::Exec;
use crate::graph::Graph;
use backtrack::{Backtracker, Budget, Outcome};
use dp::DpResult;
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;
use std::sync::Mutex;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Cycle,
    Path,
}

/// JSON shape `{"kind": "cycle", "sequence": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonCertificate {
    pub kind: CertificateKind,
    pub sequence: Vec<usize>,
}

impl HamiltonCertificate {
    pub fn cycle(sequence: Vec<usize>) -> Self {
        HamiltonCertificate {
            kind: CertificateKind::Cycle,
            sequence,
        }
    }

    pub fn path(sequence: Vec<usize>) -> Self {
        HamiltonCertificate {
            kind: CertificateKind::Path,
            sequence,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(HamiltonCertificate),
    None,
    Unknown,
}

impl Search {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn certificate(&self) -> Option<&HamiltonCertificate> {
        match self {
            Search::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Maximum number of search nodes (DP states count as nodes).
    pub budget: u64,
    /// Parallel mode splits the root branching across threads. Verdicts
    /// are the same as in sequential mode; the certificate may differ.
    pub exec: Exec,
    /// Use subset DP when the graph has at most [`DP_MAX_VERTICES`] vertices.
    pub use_dp: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            exec: Exec::Sequential,
            use_dp: true,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: u64) -> Self {
        SolverConfig {
            budget,
            ..Default::default()
        }
    }
}

/// Linear-time check of a claimed Hamilton cycle or path.
pub fn verify_hamilton(g: &Graph, cert: &HamiltonCertificate) -> bool {
    let n = g.n();
    let seq = &cert.sequence;
    if seq.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in seq {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if !seq.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    match cert.kind {
        CertificateKind::Path => true,
        CertificateKind::Cycle => n >= 3 && g.has_edge(seq[n - 1], seq[0]),
    }
}

/// 2-connected, regular, and `3 * valency >= n`.
pub fn jackson_condition(g: &Graph) -> bool {
    let r = g.structure_report();
    match r.regular {
        Some(d) => r.two_connected && 3 * d >= g.n(),
        None => false,
    }
}

/// Structural reasons a graph cannot have a Hamilton cycle.
fn obviously_no_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return true;
    }
    if !g.articulation_points().is_empty() {
        return true;
    }
    if let Some(side) = g.bipartition() {
        let ones = side.iter().filter(|&&b| b).count();
        if 2 * ones != n {
            return true;
        }
    }
    false
}

fn start_vertex(g: &Graph) -> usize {
    (0..g.n()).min_by_key(|&v| (g.degree(v), v)).unwrap_or(0)
}

pub fn find_hamilton_cycle(g: &Graph, cfg: &SolverConfig) -> Search {
    if obviously_no_cycle(g) {
        return Search::None;
    }
    let budget = Budget::new(cfg.budget);
    let start = start_vertex(g);
    if cfg.use_dp && g.n() <= DP_MAX_VERTICES {
        return match dp::dp_cycle(g, start, &budget) {
            DpResult::Cycle(seq) => Search::Found(HamiltonCertificate::cycle(seq)),
            DpResult::NoCycle => Search::None,
            DpResult::OutOfBudget => Search::Unknown,
        };
    }
    let (outcome, found) = if cfg.exec.is_parallel() {
        search_parallel(g, start, &budget)
    } else {
        let mut found = None;
        let outcome = Backtracker::new(g, start).run(&budget, &mut |c| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        });
        (outcome, found)
    };
    match (found, outcome) {
        (Some(seq), _) => Search::Found(HamiltonCertificate::cycle(seq)),
        (None, Outcome::Exhausted) => Search::None,
        _ => Search::Unknown,
    }
}

fn search_parallel(g: &Graph, start: usize, budget: &Budget) -> (Outcome, Option<Vec<usize>>) {
    let root = Backtracker::new(g, start);
    let Some(firsts) = root.candidates() else {
        return (Outcome::Exhausted, None);
    };
    let found: Mutex<Option<Vec<usize>>> = Mutex::new(None);
    let outcomes = Exec::Parallel.map(&firsts, |&w| {
        let mut bt = root.clone();
        bt.push(w);
        bt.run(budget, &mut |c| {
            let mut slot = found.lock().unwrap();
            if slot.is_none() {
                *slot = Some(c.to_vec());
            }
            ControlFlow::Break(())
        })
    });
    let found = found.into_inner().unwrap();
    let outcome = if outcomes.iter().all(|&o| o == Outcome::Exhausted) {
        Outcome::Exhausted
    } else if outcomes.contains(&Outcome::OutOfBudget) && found.is_none() {
        Outcome::OutOfBudget
    } else {
        Outcome::Stopped
    };
    (outcome, found)
}

/// Hamilton path via a Hamilton cycle of the graph plus one universal vertex.
pub fn find_hamilton_path(g: &Graph, cfg: &SolverConfig) -> Search {
    let n = g.n();
    match n {
        0 => return Search::None,
        1 => return Search::Found(HamiltonCertificate::path(vec![0])),
        2 => {
            return if g.has_edge(0, 1) {
                Search::Found(HamiltonCertificate::path(vec![0, 1]))
            } else {
                Search::None
            }
        }
        _ => {}
    }
    if !g.is_connected() {
        return Search::None;
    }
    let apex = n;
    let edges = g.edges().into_iter().chain((0..n).map(|v| (v, apex)));
    let extended = Graph::from_edges_dedup(n + 1, edges);
    match find_hamilton_cycle(&extended, cfg) {
        Search::Found(c) => {
            let pos = c.sequence.iter().position(|&v| v == apex).unwrap();
            let mut seq = c.sequence[pos + 1..].to_vec();
            seq.extend_from_slice(&c.sequence[..pos]);
            Search::Found(HamiltonCertificate::path(seq))
        }
        other => other,
    }
}

/// How an enumeration ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    Complete,
    Stopped,
    BudgetExhausted,
}

/// Calls `visit` for Hamilton cycles in deterministic backtracking order.
///
/// Each cycle is reported at least once (in some direction, starting at the
/// lowest-degree vertex); cycles may appear in both directions.
pub fn for_each_hamilton_cycle(
    g: &Graph,
    budget: u64,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Enumeration {
    if obviously_no_cycle(g) {
        return Enumeration::Complete;
    }
    let b = Budget::new(budget);
    match Backtracker::new(g, start_vertex(g)).run(&b, &mut visit) {
        Outcome::Exhausted => Enumeration::Complete,
        Outcome::Stopped => Enumeration::Stopped,
        Outcome::OutOfBudget => Enumeration::BudgetExhausted,
    }
}
