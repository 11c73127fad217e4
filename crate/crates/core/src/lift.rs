//! Lifting quotient cycles through a semiregular automorphism `rho` of
//! prime order `p`, with voltages in `Z_p`.
//!
//! Cell `i` is the `rho`-orbit of its least vertex `rep(i)`, and position
//! `(i, j)` is `rep(i)^(rho^j)`. A directed quotient edge `A -> B` carries
//! voltage `j` when `rep(A) ~ rep(B)^(rho^j)`; the reverse edge `B -> A`
//! then carries `-j`.

use crate::graph::{quotient_multigraph, Graph};
use crate::hamilton::{for_each_hamilton_cycle, verify_hamilton, Enumeration, HamiltonCertificate, DEFAULT_BUDGET};
use crate::perm::{is_semiregular, Permutation};
use serde::Serialize;
use std::ops::ControlFlow;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("permutation is not semiregular with cycles of length {0}")]
    NotSemiregular(usize),
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("invalid voltage choice: {0}")]
    InvalidChoice(String),
}

#[derive(Debug, Clone)]
pub struct SemiregularDecomposition {
    pub rho: Permutation,
    pub p: usize,
    pub m: usize,
    /// `cells[i][j] = rep(i)^(rho^j)`; `cells[i][0]` is the least vertex.
    pub cells: Vec<Vec<usize>>,
    /// `position[v] = (i, j)` with `v = cells[i][j]`.
    pub position: Vec<(usize, usize)>,
}

impl SemiregularDecomposition {
    pub fn rep(&self, i: usize) -> usize {
        self.cells[i][0]
    }

    pub fn vertex(&self, cell: usize, exp: usize) -> usize {
        self.cells[cell][exp % self.p]
    }
}

pub fn decompose(graph: &Graph, rho: &Permutation, p: usize) -> Result<SemiregularDecomposition, LiftError> {
    if rho.degree() != graph.n() || !is_semiregular(rho, p) {
        return Err(LiftError::NotSemiregular(p));
    }
    if !graph.is_automorphism(rho) {
        return Err(LiftError::NotAutomorphism);
    }
    let n = graph.n();
    let mut position = vec![(usize::MAX, 0); n];
    let mut cells = Vec::new();
    for v in 0..n {
        if position[v].0 != usize::MAX {
            continue;
        }
        let i = cells.len();
        let mut cell = Vec::with_capacity(p);
        let mut x = v;
        for j in 0..p {
            position[x] = (i, j);
            cell.push(x);
            x = rho.apply(x);
        }
        cells.push(cell);
    }
    Ok(SemiregularDecomposition {
        rho: rho.clone(),
        p,
        m: cells.len(),
        cells,
        position,
    })
}

/// Directed voltage sets for every ordered cell pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VoltageAssignment {
    pub p: usize,
    /// `directed[a][b]`: sorted `j` with `rep(a) ~ rep(b)^(rho^j)`.
    /// The diagonal holds the voltages of edges inside a cell.
    pub directed: Vec<Vec<Vec<usize>>>,
}

impl VoltageAssignment {
    pub fn of(graph: &Graph, dec: &SemiregularDecomposition) -> VoltageAssignment {
        let mut directed = vec![vec![Vec::new(); dec.m]; dec.m];
        for (a, row) in directed.iter_mut().enumerate() {
            for &w in graph.neighbors(dec.rep(a)) {
                let (b, j) = dec.position[w];
                row[b].push(j);
            }
            for list in row.iter_mut() {
                list.sort_unstable();
            }
        }
        VoltageAssignment { p: dec.p, directed }
    }

    pub fn voltages(&self, a: usize, b: usize) -> &[usize] {
        &self.directed[a][b]
    }
}

fn check_choice(volt: &VoltageAssignment, cycle: &[usize], choice: &[usize]) -> Result<(), LiftError> {
    let k = cycle.len();
    if k < 2 {
        return Err(LiftError::InvalidChoice("quotient cycle needs at least two cells".into()));
    }
    if choice.len() != k {
        return Err(LiftError::InvalidChoice(format!("{} choices for {} edges", choice.len(), k)));
    }
    let mut seen = vec![false; volt.directed.len()];
    for &c in cycle {
        if c >= seen.len() || std::mem::replace(&mut seen[c], true) {
            return Err(LiftError::InvalidChoice(format!("cell {c} repeated or out of range")));
        }
    }
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        if volt.voltages(a, b).binary_search(&choice[i]).is_err() {
            return Err(LiftError::InvalidChoice(format!("voltage {} not on edge {a} -> {b}", choice[i])));
        }
    }
    if k == 2 && (choice[0] + choice[1]) % volt.p == 0 {
        return Err(LiftError::InvalidChoice("both steps use the same parallel edge".into()));
    }
    Ok(())
}

/// Net voltage of a closed walk through the cells, mod `p`.
pub fn cycle_voltage(volt: &VoltageAssignment, cycle: &[usize], choice: &[usize]) -> Result<usize, LiftError> {
    check_choice(volt, cycle, choice)?;
    Ok(choice.iter().sum::<usize>() % volt.p)
}

/// Every lifted edge `(A_i, e) - (A_(i+1), e + j_i)`, as a graph on the
/// lifted vertices, split into its components (each returned as a cycle
/// in traversal order). Panics if the lifted edge set is not 2-regular.
pub fn lifted_cycles(
    dec: &SemiregularDecomposition,
    volt: &VoltageAssignment,
    cycle: &[usize],
    choice: &[usize],
) -> Result<Vec<Vec<usize>>, LiftError> {
    check_choice(volt, cycle, choice)?;
    let k = cycle.len();
    let p = dec.p;
    let mut edges = Vec::with_capacity(k * p);
    for i in 0..k {
        for e in 0..p {
            let u = dec.vertex(cycle[i], e);
            let v = dec.vertex(cycle[(i + 1) % k], e + choice[i]);
            edges.push((u, v));
        }
    }
    let lifted = Graph::from_edges(dec.rho.degree(), &edges)
        .expect("lifted edges are distinct graph edges");
    let mut out = Vec::new();
    let mut seen = vec![false; lifted.n()];
    for &start in cycle.iter().flat_map(|&c| dec.cells[c].iter()) {
        if seen[start] {
            continue;
        }
        assert_eq!(lifted.degree(start), 2);
        let mut walk = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = lifted.neighbors(start)[0];
        while cur != start {
            assert_eq!(lifted.degree(cur), 2);
            seen[cur] = true;
            walk.push(cur);
            let nb = lifted.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        out.push(walk);
    }
    Ok(out)
}

/// The walk `(A_0, 0), (A_1, j_0), ...` followed for `k p` steps.
fn lifted_sequence(dec: &SemiregularDecomposition, cycle: &[usize], choice: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let mut seq = Vec::with_capacity(k * dec.p);
    let mut e = 0;
    for step in 0..k * dec.p {
        let i = step % k;
        seq.push(dec.vertex(cycle[i], e));
        e = (e + choice[i]) % dec.p;
    }
    seq
}

#[derive(Debug, Clone, Copy)]
pub struct LiftConfig {
    /// Node budget for enumerating Hamilton cycles of the quotient.
    pub quotient_budget: u64,
    /// Voltage choices tried per quotient cycle.
    pub choice_cap: u64,
}

impl Default for LiftConfig {
    fn default() -> Self {
        LiftConfig {
            quotient_budget: DEFAULT_BUDGET,
            choice_cap: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LiftAttempt {
    pub certificate: Option<HamiltonCertificate>,
    pub m: usize,
    pub quotient_cycles_tried: usize,
    /// Why nothing was found, when nothing was found.
    pub note: Option<String>,
}

pub fn lift_hamilton(graph: &Graph, rho: &Permutation, p: usize) -> Result<Option<HamiltonCertificate>, LiftError> {
    Ok(lift_hamilton_with(graph, rho, p, &LiftConfig::default())?.certificate)
}

pub fn lift_hamilton_with(
    graph: &Graph,
    rho: &Permutation,
    p: usize,
    cfg: &LiftConfig,
) -> Result<LiftAttempt, LiftError> {
    let dec = decompose(graph, rho, p)?;
    let volt = VoltageAssignment::of(graph, &dec);
    let m = dec.m;
    let mut attempt = LiftAttempt {
        certificate: None,
        m,
        quotient_cycles_tried: 0,
        note: None,
    };
    let finish = |mut attempt: LiftAttempt, seq: Vec<usize>| {
        let cert = HamiltonCertificate::cycle(seq);
        assert!(verify_hamilton(graph, &cert), "lifted sequence is a Hamilton cycle");
        attempt.certificate = Some(cert);
        attempt
    };

    match m {
        1 => {
            let step = volt.voltages(0, 0).iter().copied().find(|&j| j != 0);
            match step {
                Some(j) if p >= 3 => {
                    let seq = (0..p).map(|i| dec.vertex(0, i * j)).collect();
                    Ok(finish(attempt, seq))
                }
                _ => {
                    attempt.note = Some("single cell without a usable internal voltage".into());
                    Ok(attempt)
                }
            }
        }
        2 => {
            let js = volt.voltages(0, 1);
            attempt.quotient_cycles_tried = 1;
            if js.len() < 2 {
                attempt.note = Some(format!("two cells joined by d(A,B) = {}", js.len()));
                return Ok(attempt);
            }
            let choice = [js[0], (p - js[1]) % p];
            debug_assert_ne!(cycle_voltage(&volt, &[0, 1], &choice)?, 0);
            let seq = lifted_sequence(&dec, &[0, 1], &choice);
            Ok(finish(attempt, seq))
        }
        _ => {
            let q = quotient_multigraph(graph, &dec.cells).expect("orbits of an automorphism are equitable");
            let simple = q.simple_graph();
            let mut found = None;
            let mut tried = 0;
            let status = for_each_hamilton_cycle(&simple, cfg.quotient_budget, |cyc| {
                tried += 1;
                match nonzero_choice(&volt, cyc, cfg.choice_cap) {
                    Some(choice) => {
                        found = Some(lifted_sequence(&dec, cyc, &choice));
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                }
            });
            attempt.quotient_cycles_tried = tried;
            if let Some(seq) = found {
                return Ok(finish(attempt, seq));
            }
            attempt.note = Some(match status {
                Enumeration::BudgetExhausted => "quotient cycle enumeration ran out of budget".into(),
                _ if tried == 0 => "quotient has no Hamilton cycle".into(),
                _ => "every quotient Hamilton cycle lifts to disjoint cycles".into(),
            });
            Ok(attempt)
        }
    }
}

/// First voltage choice, in lexicographic order, with nonzero net voltage.
fn nonzero_choice(volt: &VoltageAssignment, cycle: &[usize], cap: u64) -> Option<Vec<usize>> {
    let k = cycle.len();
    let sets: Vec<&[usize]> = (0..k)
        .map(|i| volt.voltages(cycle[i], cycle[(i + 1) % k]))
        .collect();
    let mut idx = vec![0usize; k];
    for _ in 0..cap {
        let choice: Vec<usize> = (0..k).map(|i| sets[i][idx[i]]).collect();
        if choice.iter().sum::<usize>() % volt.p != 0 {
            return Some(choice);
        }
        // odometer, last position fastest
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < sets[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
    None
}
