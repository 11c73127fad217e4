//! Finite simple undirected graphs on dense vertex labels `0..n`.

mod quotient;

pub use quotient::{quotient_multigraph, QuotientMulti};

use crate::perm::Permutation;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex sets overlap")]
    OverlappingParts,
    #[error("cells do not partition the vertex set")]
    NotPartition,
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently drops repeats.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v})");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.n()
            && self
                .edges()
                .into_iter()
                .all(|(u, v)| self.has_edge(g.apply(u), g.apply(v)))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Cut vertices, ascending.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Two-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                let c = colour[v].unwrap();
                for &w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn structure_report(&self) -> StructureReport {
        let connected = self.is_connected();
        StructureReport {
            connected,
            two_connected: connected && self.n() >= 3 && self.articulation_points().is_empty(),
            regular: self.regular_degree(),
            bipartite: self.bipartition().is_some(),
        }
    }

    /// `X(U)` when `other` is `None`, else the bipartite `X[U, W]`.
    ///
    /// The returned map sends new labels to old ones: `U` first, then `W`.
    pub fn subgraph(&self, part: &[usize], other: Option<&[usize]>) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        let mut side = vec![0u8; n];
        let mut map = Vec::new();
        for &u in part {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if side[u] != 0 {
                return Err(GraphError::OverlappingParts);
            }
            side[u] = 1;
            map.push(u);
        }
        if let Some(w) = other {
            for &u in w {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange(u));
                }
                if side[u] != 0 {
                    return Err(GraphError::OverlappingParts);
                }
                side[u] = 2;
                map.push(u);
            }
        }
        let mut new_label = vec![usize::MAX; n];
        for (i, &u) in map.iter().enumerate() {
            new_label[u] = i;
        }
        let bipartite = other.is_some();
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if side[u] == 0 || side[v] == 0 {
                continue;
            }
            if bipartite == (side[u] != side[v]) {
                edges.push((new_label[u], new_label[v]));
            }
        }
        Ok((Graph::from_edges_dedup(map.len(), edges), map))
    }

    /// Relabels vertices: vertex `v` becomes `g(v)`.
    pub fn relabel(&self, g: &Permutation) -> Graph {
        Graph::from_edges_dedup(self.n(), self.edges().into_iter().map(|(u, v)| (g.apply(u), g.apply(v))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub connected: bool,
    pub two_connected: bool,
    pub regular: Option<usize>,
    pub bipartite: bool,
}

/// JSON shape `{"n": int, "edges": [[u, v], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = j
            .edges
            .into_iter()
            .map(|[u, v]| (u.min(v), u.max(v)))
            .collect();
        Graph::from_edges(j.n, &edges)
    }
}
