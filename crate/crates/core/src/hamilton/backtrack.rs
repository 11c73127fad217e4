//! Depth-first Hamilton cycle search.
//!
//! The path grows from a fixed start vertex. A vertex is *dead* once it is
//! an interior vertex of the current path; every unvisited vertex needs two
//! live neighbours. Pruning at each node:
//!
//! * an unvisited vertex with fewer than two live neighbours kills the node;
//! * an unvisited neighbour of the path end with exactly two live neighbours
//!   must be the next vertex (two such neighbours kill the node), and the
//!   same holds for the start vertex and the closing edge;
//! * the remaining graph (unvisited vertices plus both path ends) must admit
//!   a spanning path between the ends, which rules out certain cut vertices.

use crate::graph::Graph;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Node budget shared by all workers of one search.
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
    stop: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    /// Charges `k` nodes; false once the limit is exceeded.
    #[inline]
    pub fn charge(&self, k: u64) -> bool {
        self.used.fetch_add(k, Ordering::Relaxed) + k <= self.limit
    }

    pub fn request_stop(&self) {
        self.stop.store(true, Ordering::Relaxed);
    }

    #[inline]
    pub fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Every branch explored.
    Exhausted,
    /// The visitor asked to stop, or another worker did.
    Stopped,
    OutOfBudget,
}

#[derive(Clone)]
pub(crate) struct Backtracker<'g> {
    g: &'g Graph,
    start: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    /// Live neighbours of each vertex.
    live: Vec<u32>,
    // scratch for the cut-vertex test
    disc: Vec<u32>,
    low: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'g> Backtracker<'g> {
    pub fn new(g: &'g Graph, start: usize) -> Self {
        let n = g.n();
        let mut on_path = vec![false; n];
        on_path[start] = true;
        Backtracker {
            g,
            start,
            path: vec![start],
            on_path,
            live: (0..n).map(|v| g.degree(v) as u32).collect(),
            disc: vec![0; n],
            low: vec![0; n],
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    pub fn end(&self) -> usize {
        *self.path.last().unwrap()
    }

    /// Appends `x`; returns the previous end if it became interior.
    pub fn push(&mut self, x: usize) -> Option<usize> {
        let e = self.end();
        self.path.push(x);
        self.on_path[x] = true;
        if e != self.start {
            for &y in self.g.neighbors(e) {
                self.live[y] -= 1;
            }
            Some(e)
        } else {
            None
        }
    }

    pub fn pop(&mut self) {
        let x = self.path.pop().unwrap();
        self.on_path[x] = false;
        let e = self.end();
        if e != self.start {
            for &y in self.g.neighbors(e) {
                self.live[y] += 1;
            }
        }
    }

    /// Cheap local test after `push` turned `dead` interior.
    fn locally_feasible(&self, dead: Option<usize>) -> bool {
        match dead {
            None => true,
            Some(e) => self
                .g
                .neighbors(e)
                .iter()
                .all(|&y| self.on_path[y] || self.live[y] >= 2),
        }
    }

    /// Whether the unvisited vertices plus both ends can still carry a
    /// spanning path from the end back to the start.
    fn spanning_path_possible(&mut self) -> bool {
        let n = self.g.n();
        let s = self.start;
        let t = self.end();
        let remaining = n - self.path.len();
        if remaining < 2 {
            return true;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|x| *x = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        let in_h = |bt: &Self, v: usize| !bt.on_path[v] || v == s || v == t;

        let mut timer = 0u32;
        self.stamp[s] = epoch;
        self.disc[s] = timer;
        self.low[s] = timer;
        timer += 1;
        let mut root_children = 0;
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, usize::MAX, 0)];
        let mut visited = 1usize;
        while let Some(&(v, parent, idx)) = stack.last() {
            let nbrs = self.g.neighbors(v);
            if idx < nbrs.len() {
                stack.last_mut().unwrap().2 += 1;
                let w = nbrs[idx];
                if !in_h(self, w) || (v == s && w == t) || (v == t && w == s) {
                    continue;
                }
                if self.stamp[w] != epoch {
                    self.stamp[w] = epoch;
                    self.disc[w] = timer;
                    self.low[w] = timer;
                    timer += 1;
                    visited += 1;
                    if v == s {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                self.low[parent] = self.low[parent].min(self.low[v]);
                if parent != s && self.low[v] >= self.disc[parent] {
                    // H - parent separates the subtree of v from the root.
                    let t_inside = self.stamp[t] == epoch
                        && self.disc[t] >= self.disc[v]
                        && self.disc[t] < timer;
                    if parent == t || !t_inside || s == t {
                        return false;
                    }
                }
            }
        }
        let h_size = remaining + if s == t { 1 } else { 2 };
        visited == h_size && root_children <= 1
    }

    /// Explores all completions of the current path, calling `visit` on
    /// every Hamilton cycle (as a vertex sequence starting at the start).
    pub fn run(
        &mut self,
        budget: &Budget,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Outcome {
        if budget.stopped() {
            return Outcome::Stopped;
        }
        if !budget.charge(1) {
            return Outcome::OutOfBudget;
        }
        let n = self.g.n();
        let s = self.start;
        let x = self.end();
        let remaining = n - self.path.len();
        if remaining == 0 {
            if n >= 3 && self.g.has_edge(x, s) && visit(&self.path).is_break() {
                budget.request_stop();
                return Outcome::Stopped;
            }
            return Outcome::Exhausted;
        }
        if !self.spanning_path_possible() {
            return Outcome::Exhausted;
        }

        let Some(candidates) = self.candidates() else {
            return Outcome::Exhausted;
        };

        let mut outcome = Outcome::Exhausted;
        for w in candidates {
            let dead = self.push(w);
            let result = if self.locally_feasible(dead) {
                self.run(budget, visit)
            } else {
                Outcome::Exhausted
            };
            self.pop();
            match result {
                Outcome::Exhausted => {}
                other => {
                    outcome = other;
                    break;
                }
            }
        }
        outcome
    }

    /// Next vertices worth trying from the current end, in search order;
    /// `None` when forcing already proves the node dead.
    pub fn candidates(&self) -> Option<Vec<usize>> {
        let s = self.start;
        let x = self.end();
        let remaining = self.g.n() - self.path.len();
        let mut forced_by_end: Vec<usize> = Vec::new();
        let mut all: Vec<(u32, usize)> = Vec::with_capacity(self.g.degree(x));
        for &w in self.g.neighbors(x) {
            if self.on_path[w] {
                continue;
            }
            if self.live[w] == 2 && remaining > 1 {
                forced_by_end.push(w);
            }
            all.push((self.live[w], w));
        }
        all.sort_unstable();
        if self.path.len() == 1 {
            // At the start both cycle neighbours are still open: up to two
            // forced neighbours are fine, and by reversing the cycle the
            // first of them can be taken as the next vertex.
            return match forced_by_end.len() {
                0 => Some(all.into_iter().map(|(_, w)| w).collect()),
                1 | 2 => Some(vec![*forced_by_end.iter().min_by_key(|&&w| (self.live[w], w)).unwrap()]),
                _ => None,
            };
        }
        if forced_by_end.len() > 1 {
            return None;
        }
        let mut forced_last = None;
        if remaining > 1 {
            for &w in self.g.neighbors(s) {
                if !self.on_path[w] && self.live[w] == 2 {
                    if forced_last.is_some() {
                        return None;
                    }
                    forced_last = Some(w);
                }
            }
        }
        if let Some(&f) = forced_by_end.first() {
            return (forced_last != Some(f)).then(|| vec![f]);
        }
        Some(
            all.into_iter()
                .map(|(_, w)| w)
                .filter(|&w| Some(w) != forced_last)
                .collect(),
        )
    }
}
