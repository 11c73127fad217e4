use super::{Graph, GraphError};
use serde::Serialize;

/// Quotient of a graph by a vertex partition whose induced and bipartite
/// pieces are all (bi)regular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientMulti {
    pub cells: Vec<Vec<usize>>,
    /// `internal[a]`: valency of the subgraph induced on cell `a`.
    pub internal: Vec<usize>,
    /// `cross[a][b]`: number of neighbours a vertex of `a` has in `b`.
    /// Equals `cross[b][a]` when the two cells have the same size.
    pub cross: Vec<Vec<usize>>,
}

impl QuotientMulti {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Underlying simple graph on the cells.
    pub fn simple_graph(&self) -> Graph {
        let m = self.cells.len();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.cross[a][b] > 0 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges_dedup(m, edges)
    }
}

/// Checks `cells` partitions `0..n` and returns the cell index per vertex.
pub(crate) fn cell_index(n: usize, cells: &[Vec<usize>]) -> Result<Vec<usize>, GraphError> {
    let mut cell_of = vec![usize::MAX; n];
    for (i, c) in cells.iter().enumerate() {
        if c.is_empty() {
            return Err(GraphError::NotPartition);
        }
        for &v in c {
            if v >= n || cell_of[v] != usize::MAX {
                return Err(GraphError::NotPartition);
            }
            cell_of[v] = i;
        }
    }
    if cell_of.contains(&usize::MAX) {
        return Err(GraphError::NotPartition);
    }
    Ok(cell_of)
}

/// Computes `d(A)` and `d(A, B)` for every cell pair, failing when some
/// vertex count differs inside a cell.
pub fn quotient_multigraph(graph: &Graph, cells: &[Vec<usize>]) -> Result<QuotientMulti, GraphError> {
    let n = graph.n();
    let m = cells.len();
    let cell_of = cell_index(n, cells)?;
    let mut counts: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    let mut row = vec![0usize; m];
    for (a, cell) in cells.iter().enumerate() {
        for &v in cell {
            row.iter_mut().for_each(|x| *x = 0);
            for &w in graph.neighbors(v) {
                row[cell_of[w]] += 1;
            }
            for b in 0..m {
                match counts[a][b] {
                    None => counts[a][b] = Some(row[b]),
                    Some(c) if c != row[b] => {
                        let what = if a == b {
                            format!("subgraph induced on cell {a} is not regular")
                        } else {
                            format!("cells {a} and {b} are not joined biregularly")
                        };
                        return Err(GraphError::NotEquitable(what));
                    }
                    _ => {}
                }
            }
        }
    }
    let cross: Vec<Vec<usize>> = counts
        .into_iter()
        .map(|r| r.into_iter().map(Option::unwrap).collect())
        .collect();
    let internal = (0..m).map(|a| cross[a][a]).collect();
    Ok(QuotientMulti {
        cells: cells.to_vec(),
        internal,
        cross,
    })
}
