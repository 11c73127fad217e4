//! Subset dynamic programming for Hamilton cycles on at most
//! [`DP_MAX_VERTICES`] vertices.

use super::backtrack::Budget;
use crate::graph::Graph;

pub const DP_MAX_VERTICES: usize = 24;

pub(crate) enum DpResult {
    Cycle(Vec<usize>),
    NoCycle,
    OutOfBudget,
}

/// `reach[mask]` holds the possible last vertices of paths that start at
/// `start` and visit exactly the vertices in `mask` (which excludes `start`).
pub(crate) fn dp_cycle(g: &Graph, start: usize, budget: &Budget) -> DpResult {
    let n = g.n();
    assert!((3..=DP_MAX_VERTICES).contains(&n));
    let others: Vec<usize> = (0..n).filter(|&v| v != start).collect();
    let mut bit = vec![usize::MAX; n];
    for (i, &v) in others.iter().enumerate() {
        bit[v] = i;
    }
    let k = n - 1;
    let states = 1u64 << k;
    if !budget.charge(states) {
        return DpResult::OutOfBudget;
    }
    let nbr: Vec<u32> = others
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| w != start)
                .fold(0u32, |m, &w| m | 1 << bit[w])
        })
        .collect();
    let start_nbr = g.neighbors(start).iter().fold(0u32, |m, &w| m | 1 << bit[w]);

    let mut reach = vec![0u32; states as usize];
    let mut s = start_nbr;
    while s != 0 {
        let i = s.trailing_zeros();
        reach[1 << i] |= 1 << i;
        s &= s - 1;
    }
    let full: u32 = ((1u64 << k) - 1) as u32;
    for mask in 1..full {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut next = 0u32;
        let mut e = ends;
        while e != 0 {
            next |= nbr[e.trailing_zeros() as usize];
            e &= e - 1;
        }
        next &= !mask;
        while next != 0 {
            let w = next.trailing_zeros();
            reach[(mask | 1 << w) as usize] |= 1 << w;
            next &= next - 1;
        }
    }

    let closing = reach[full as usize] & start_nbr;
    if closing == 0 {
        return DpResult::NoCycle;
    }
    // Walk back, always taking the lowest admissible predecessor.
    let mut v = closing.trailing_zeros() as usize;
    let mut mask = full;
    let mut rev = vec![others[v]];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let options = reach[prev as usize] & nbr[v];
        let u = options.trailing_zeros() as usize;
        rev.push(others[u]);
        mask = prev;
        v = u;
    }
    let mut seq = vec![start];
    seq.extend(rev.into_iter().rev());
    DpResult::Cycle(seq)
}
