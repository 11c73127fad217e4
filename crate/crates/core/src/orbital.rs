//! Suborbits, their pairing, generalized orbital graphs and block quotients.

use crate::graph::Graph;
use crate::perm::{BlockSystem, PermGroup, Permutation};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OrbitalError {
    #[error("group is not transitive")]
    NotTransitive,
    #[error("selection is empty")]
    EmptySelection,
    #[error("selection contains the trivial suborbit")]
    TrivialSuborbit,
    #[error("no suborbit with index {0}")]
    BadIndex(usize),
    #[error("point {0} out of range")]
    BadPoint(usize),
}

/// Orbits of the stabilizer of `base`, sorted by (length, least point).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuborbitTable {
    pub base: usize,
    pub suborbits: Vec<Vec<usize>>,
    /// `pairing[i]` is the suborbit of the reversed orbital.
    pub pairing: Vec<usize>,
}

impl SuborbitTable {
    pub fn lengths(&self) -> Vec<usize> {
        self.suborbits.iter().map(Vec::len).collect()
    }

    pub fn trivial_index(&self) -> usize {
        self.suborbits
            .iter()
            .position(|s| s == &[self.base])
            .expect("base point is its own suborbit")
    }

    pub fn is_self_paired(&self, i: usize) -> bool {
        self.pairing[i] == i
    }

    pub fn index_of(&self, w: usize) -> Option<usize> {
        self.suborbits.iter().position(|s| s.binary_search(&w).is_ok())
    }
}

/// For every point `u`, some `g` with `base^g = u`, from a breadth-first
/// tree over the generators in their given order.
pub fn transversal(group: &PermGroup, base: usize) -> Vec<Option<Permutation>> {
    let n = group.degree();
    let mut out: Vec<Option<Permutation>> = vec![None; n];
    out[base] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for s in group.generators() {
            let y = s.apply(x);
            if out[y].is_none() {
                out[y] = Some(out[x].as_ref().unwrap().then(s));
                queue.push_back(y);
            }
        }
    }
    out
}

fn full_transversal(group: &PermGroup, base: usize) -> Result<Vec<Permutation>, OrbitalError> {
    if base >= group.degree() {
        return Err(OrbitalError::BadPoint(base));
    }
    transversal(group, base)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(OrbitalError::NotTransitive)
}

pub fn suborbits(group: &PermGroup, base: usize) -> Result<SuborbitTable, OrbitalError> {
    let trans = full_transversal(group, base)?;
    let mut subs = group.point_stabilizer(base).orbits();
    subs.sort_by_key(|s| (s.len(), s[0]));
    let mut which = vec![0; group.degree()];
    for (i, s) in subs.iter().enumerate() {
        for &w in s {
            which[w] = i;
        }
    }
    let pairing = subs
        .iter()
        .map(|s| which[trans[s[0]].inverse().apply(base)])
        .collect();
    Ok(SuborbitTable {
        base,
        suborbits: subs,
        pairing,
    })
}

/// An orbital graph with the selection actually used.
#[derive(Debug, Clone)]
pub struct OrbitalGraph {
    pub graph: Graph,
    pub connected: bool,
    /// Suborbit indices after closing under pairing, sorted.
    pub selection: Vec<usize>,
    /// Set when pairing added suborbits the caller did not ask for.
    pub symmetrized: bool,
}

/// `u ~ w` iff `w` lies in the selected suborbits transported from `base`
/// to `u`.
pub fn orbital_graph(group: &PermGroup, base: usize, selection: &[usize]) -> Result<OrbitalGraph, OrbitalError> {
    let table = suborbits(group, base)?;
    orbital_graph_with(group, &table, selection)
}

pub fn orbital_graph_with(
    group: &PermGroup,
    table: &SuborbitTable,
    selection: &[usize],
) -> Result<OrbitalGraph, OrbitalError> {
    if selection.is_empty() {
        return Err(OrbitalError::EmptySelection);
    }
    if let Some(&bad) = selection.iter().find(|&&i| i >= table.suborbits.len()) {
        return Err(OrbitalError::BadIndex(bad));
    }
    let trivial = table.trivial_index();
    if selection.contains(&trivial) {
        return Err(OrbitalError::TrivialSuborbit);
    }
    let mut closed: Vec<usize> = selection
        .iter()
        .flat_map(|&i| [i, table.pairing[i]])
        .collect();
    closed.sort_unstable();
    closed.dedup();
    let mut asked = selection.to_vec();
    asked.sort_unstable();
    asked.dedup();
    let symmetrized = closed != asked;

    let trans = full_transversal(group, table.base)?;
    let targets: Vec<usize> = closed
        .iter()
        .flat_map(|&i| table.suborbits[i].iter().copied())
        .collect();
    let mut edges = Vec::new();
    for (u, g) in trans.iter().enumerate() {
        for &w in &targets {
            let x = g.apply(w);
            if u < x {
                edges.push((u, x));
            }
        }
    }
    let graph = Graph::from_edges_dedup(group.degree(), edges);
    Ok(OrbitalGraph {
        connected: graph.is_connected(),
        graph,
        selection: closed,
        symmetrized,
    })
}

/// Every selection closed under pairing, built from the non-trivial
/// suborbits, in increasing bitmask order over pairing classes.
pub fn paired_closed_selections(table: &SuborbitTable) -> Vec<Vec<usize>> {
    let trivial = table.trivial_index();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..table.suborbits.len() {
        let j = table.pairing[i];
        if i != trivial && i <= j {
            classes.push(if i == j { vec![i] } else { vec![i, j] });
        }
    }
    assert!(classes.len() < 32, "too many suborbit classes to enumerate");
    (1u32..1 << classes.len())
        .map(|mask| {
            let mut sel: Vec<usize> = (0..classes.len())
                .filter(|b| mask >> b & 1 == 1)
                .flat_map(|b| classes[b].iter().copied())
                .collect();
            sel.sort_unstable();
            sel
        })
        .collect()
}

/// Simple graph on the cells: `A ~ B` iff some edge joins them.
pub fn block_quotient(graph: &Graph, blocks: &BlockSystem) -> Graph {
    let cell = blocks.cell_of();
    let edges = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (cell[u], cell[v]))
        .filter(|(a, b)| a != b);
    Graph::from_edges_dedup(blocks.cells.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn d5() -> PermGroup {
        PermGroup::new(5, vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 4], &[2, 3]])]).unwrap()
    }

    fn z6() -> PermGroup {
        PermGroup::new(6, vec![perm(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap()
    }

    #[test]
    fn d5_suborbits() {
        let t = suborbits(&d5(), 0).unwrap();
        assert_eq!(t.suborbits, vec![vec![0], vec![1, 4], vec![2, 3]]);
        assert_eq!(t.pairing, vec![0, 1, 2]);
    }

    #[test]
    fn regular_z6_pairs_inverse_shifts() {
        let t = suborbits(&z6(), 0).unwrap();
        assert_eq!(t.lengths(), vec![1; 6]);
        for i in 0..6 {
            let w = t.suborbits[i][0];
            assert_eq!(t.suborbits[t.pairing[i]][0], (6 - w) % 6);
        }
    }

    #[test]
    fn z6_circulant_is_symmetrized() {
        let g = z6();
        let t = suborbits(&g, 0).unwrap();
        let one = t.index_of(1).unwrap();
        let og = orbital_graph(&g, 0, &[one]).unwrap();
        assert!(og.symmetrized && og.connected);
        assert_eq!(og.graph, crate::graph::tests::cycle(6));
    }

    #[test]
    fn d5_orbital_is_c5() {
        let g = d5();
        let og = orbital_graph(&g, 0, &[1]).unwrap();
        assert!(!og.symmetrized);
        assert_eq!(og.graph, crate::graph::tests::cycle(5));
        for s in g.generators() {
            assert!(og.graph.is_automorphism(s));
        }
    }

    #[test]
    fn orbital_errors() {
        let g = d5();
        assert_eq!(orbital_graph(&g, 0, &[]).unwrap_err(), OrbitalError::EmptySelection);
        assert_eq!(orbital_graph(&g, 0, &[0]).unwrap_err(), OrbitalError::TrivialSuborbit);
        assert_eq!(orbital_graph(&g, 0, &[7]).unwrap_err(), OrbitalError::BadIndex(7));
        let intrans = PermGroup::new(4, vec![perm(4, &[&[0, 1]])]).unwrap();
        assert_eq!(suborbits(&intrans, 0).unwrap_err(), OrbitalError::NotTransitive);
    }

    #[test]
    fn block_quotients() {
        let c6 = crate::graph::tests::cycle(6);
        let b = BlockSystem {
            cells: vec![vec![0, 3], vec![1, 4], vec![2, 5]],
            cell_size: 2,
        };
        assert_eq!(block_quotient(&c6, &b), crate::graph::tests::complete(3));
        let singletons = BlockSystem {
            cells: (0..6).map(|v| vec![v]).collect(),
            cell_size: 1,
        };
        assert_eq!(block_quotient(&c6, &singletons), c6);
    }

    #[test]
    fn closed_selections_of_d5() {
        let t = suborbits(&d5(), 0).unwrap();
        assert_eq!(paired_closed_selections(&t), vec![vec![1], vec![2], vec![1, 2]]);
    }
}
