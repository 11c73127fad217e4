//! Blocks of imprimitivity.

use super::{PermError, PermGroup};
use serde::Serialize;

/// A partition of the points into equal cells permuted by the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    /// Each cell sorted; cells ordered by least point.
    pub cells: Vec<Vec<usize>>,
    pub cell_size: usize,
}

impl BlockSystem {
    /// Checks the partition is a block system for `group`.
    pub fn is_invariant(&self, group: &PermGroup) -> bool {
        let n = group.degree();
        let mut cell_of = vec![usize::MAX; n];
        for (i, c) in self.cells.iter().enumerate() {
            if c.len() != self.cell_size {
                return false;
            }
            for &x in c {
                if x >= n || cell_of[x] != usize::MAX {
                    return false;
                }
                cell_of[x] = i;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return false;
        }
        group.generators().iter().all(|g| {
            self.cells.iter().all(|c| {
                let target = cell_of[g.apply(c[0])];
                c.iter().all(|&x| cell_of[g.apply(x)] == target)
            })
        })
    }

    /// Index of the cell containing each point.
    pub fn cell_of(&self) -> Vec<usize> {
        let n = self.cells.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &x in c {
                out[x] = i;
            }
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of two roots, keeping the smaller root.
    fn union_roots(&mut self, a: usize, b: usize) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        lo
    }
}

/// Finest G-invariant partition in which `a` and `b` share a class
/// (Atkinson's merging procedure).
fn finest_partition_joining(group: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    let n = group.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(a, b)];
    let (ra, rb) = (uf.find(a), uf.find(b));
    uf.union_roots(ra, rb);
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let rx = uf.find(g.apply(x));
            let ry = uf.find(g.apply(y));
            if rx != ry {
                uf.union_roots(rx, ry);
                queue.push((rx, ry));
            }
        }
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// Smallest block containing `a` and `b`.
pub fn minimal_block(group: &PermGroup, a: usize, b: usize) -> Result<Vec<usize>, PermError> {
    let n = group.degree();
    if a >= n || b >= n || a == b {
        return Err(PermError::BadPoints);
    }
    if !group.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let roots = finest_partition_joining(group, a, b);
    let ra = roots[a];
    Ok((0..n).filter(|&x| roots[x] == ra).collect())
}

/// Block systems generated by the minimal blocks `minimal_block(0, b)`,
/// nontrivial ones only, deduplicated, sorted by cell size.
pub fn block_systems(group: &PermGroup) -> Result<Vec<BlockSystem>, PermError> {
    let n = group.degree();
    if !group.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let mut out: Vec<BlockSystem> = Vec::new();
    for b in 1..n {
        let roots = finest_partition_joining(group, 0, b);
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for x in 0..n {
            let r = roots[x];
            if index[r] == usize::MAX {
                index[r] = cells.len();
                cells.push(Vec::new());
            }
            cells[index[r]].push(x);
        }
        if cells.len() == 1 {
            continue;
        }
        let cell_size = cells[0].len();
        let sys = BlockSystem { cells, cell_size };
        debug_assert!(sys.is_invariant(group));
        if !out.contains(&sys) {
            out.push(sys);
        }
    }
    out.sort_by(|x, y| x.cell_size.cmp(&y.cell_size).then_with(|| x.cells.cmp(&y.cells)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![Permutation::from_cycles(n, &[&c]).unwrap()]).unwrap()
    }

    #[test]
    fn minimal_block_examples() {
        let c6 = cyclic(6);
        assert_eq!(minimal_block(&c6, 0, 3).unwrap(), vec![0, 3]);
        assert_eq!(minimal_block(&c6, 0, 2).unwrap(), vec![0, 2, 4]);
        assert_eq!(minimal_block(&cyclic(5), 0, 1).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn block_system_examples() {
        let sizes: Vec<usize> = block_systems(&cyclic(6))
            .unwrap()
            .iter()
            .map(|s| s.cell_size)
            .collect();
        assert_eq!(sizes, vec![2, 3]);
        assert!(block_systems(&cyclic(5)).unwrap().is_empty());
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(block_systems(&s4).unwrap().is_empty());
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::trivial(4);
        assert_eq!(minimal_block(&g, 0, 1), Err(PermError::NotTransitive));
        assert_eq!(block_systems(&g), Err(PermError::NotTransitive));
    }
}
