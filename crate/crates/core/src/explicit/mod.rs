//! Explicit Hamilton cycles on cyclic products, triangle truncation of cubic
//! graphs, and a catalog of named graphs.

mod catalog;

pub use catalog::{catalog, CatalogEntry, CatalogError, CATALOG_NAMES};

use crate::graph::Graph;
use crate::hamilton::{verify_hamilton, HamiltonCertificate};
use crate::perm::{gcd, Permutation};
use serde::Serialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExplicitError {
    #[error("gcd(t, p) = {0}, expected 1")]
    GcdNotOne(u64),
    #[error("base cycle is not a Hamilton cycle of the base graph")]
    BadBaseCycle,
    #[error("graph is not 3-regular")]
    NotCubic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    /// `(u, j) ~ (v, j +- 1)` for every edge `uv` of the base.
    Y1,
    /// `(u, j) ~ (v, j)` for every edge `uv`, and `(u, j) ~ (u, j +- 1)`.
    Y2,
}

/// A base graph `X` on `t` vertices times `Z_p`. Vertex `(u, j)` has index
/// `u * p + j`.
#[derive(Debug, Clone)]
pub struct ProductModel {
    pub base: Graph,
    pub p: usize,
    pub kind: ProductKind,
    pub base_cycle: Vec<usize>,
}

impl ProductModel {
    pub fn new(base: Graph, p: usize, kind: ProductKind, base_cycle: Vec<usize>) -> ProductModel {
        ProductModel {
            base,
            p,
            kind,
            base_cycle,
        }
    }

    /// The model over the cycle `C_t` with its natural Hamilton cycle.
    pub fn over_cycle(t: usize, p: usize, kind: ProductKind) -> ProductModel {
        let base = Graph::from_edges_dedup(t, (0..t).map(|i| (i, (i + 1) % t)));
        ProductModel::new(base, p, kind, (0..t).collect())
    }

    pub fn t(&self) -> usize {
        self.base.n()
    }

    pub fn index(&self, u: usize, j: usize) -> usize {
        u * self.p + j % self.p
    }

    pub fn graph(&self) -> Graph {
        let p = self.p;
        let mut edges = Vec::new();
        for (u, v) in self.base.edges() {
            for j in 0..p {
                match self.kind {
                    ProductKind::Y1 => {
                        edges.push((self.index(u, j), self.index(v, j + 1)));
                        edges.push((self.index(v, j), self.index(u, j + 1)));
                    }
                    ProductKind::Y2 => edges.push((self.index(u, j), self.index(v, j))),
                }
            }
        }
        if self.kind == ProductKind::Y2 && p > 1 {
            for u in 0..self.t() {
                for j in 0..p {
                    edges.push((self.index(u, j), self.index(u, j + 1)));
                }
            }
        }
        Graph::from_edges_dedup(self.t() * p, edges)
    }

    fn check_base(&self) -> Result<(), ExplicitError> {
        let ok = self.t() >= 3 && verify_hamilton(&self.base, &HamiltonCertificate::cycle(self.base_cycle.clone()));
        if ok {
            Ok(())
        } else {
            Err(ExplicitError::BadBaseCycle)
        }
    }

    fn certify(&self, cells: impl IntoIterator<Item = (usize, usize)>) -> HamiltonCertificate {
        let seq = cells
            .into_iter()
            .map(|(i, j)| self.index(self.base_cycle[i], j))
            .collect();
        let cert = HamiltonCertificate::cycle(seq);
        assert!(verify_hamilton(&self.graph(), &cert), "constructed cycle is Hamiltonian");
        cert
    }
}

/// The diagonal walk `(c_(i mod t), i mod p)` on a `Y1` model.
pub fn y1_cycle(model: &ProductModel) -> Result<HamiltonCertificate, ExplicitError> {
    let (t, p) = (model.t(), model.p);
    let g = gcd(t as u64, p as u64);
    if g != 1 {
        return Err(ExplicitError::GcdNotOne(g));
    }
    model.check_base()?;
    Ok(model.certify((0..t * p).map(|i| (i % t, i % p))))
}

/// A Hamilton cycle of a `Y2` model, by the parity of `t` and `p`.
pub fn y2_cycle(model: &ProductModel) -> Result<HamiltonCertificate, ExplicitError> {
    model.check_base()?;
    let (t, p) = (model.t(), model.p);
    let mut cells = Vec::with_capacity(t * p);
    if p == 2 {
        // along level 0, back along level 1
        cells.extend((0..t).map(|i| (i, 0)));
        cells.extend((0..t).rev().map(|i| (i, 1)));
    } else if t % 2 == 0 {
        // snake up and down the columns
        for i in 0..t {
            if i % 2 == 0 {
                cells.extend((0..p).map(|j| (i, j)));
            } else {
                cells.extend((0..p).rev().map(|j| (i, j)));
            }
        }
    } else {
        // snake along the levels over columns 1..t, then down column 0
        for j in 0..p {
            if j % 2 == 0 {
                cells.extend((1..t).map(|i| (i, j)));
            } else {
                cells.extend((1..t).rev().map(|i| (i, j)));
            }
        }
        cells.extend((0..p).rev().map(|j| (0, j)));
    }
    Ok(model.certify(cells))
}

/// Replaces each vertex `v` by the triangle `3v, 3v+1, 3v+2`. Corner `i`
/// of `v` takes the edge to its `i`-th neighbour in sorted order.
pub fn truncate_cubic(graph: &Graph) -> Result<Graph, ExplicitError> {
    if graph.regular_degree() != Some(3) {
        return Err(ExplicitError::NotCubic);
    }
    let corner = |u: usize, v: usize| 3 * u + graph.neighbors(u).binary_search(&v).unwrap();
    let mut edges = Vec::with_capacity(3 * graph.n() + graph.edge_count());
    for v in 0..graph.n() {
        edges.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]);
    }
    for (u, v) in graph.edges() {
        edges.push((corner(u, v), corner(v, u)));
    }
    Ok(Graph::from_edges(3 * graph.n(), &edges).expect("truncation is simple"))
}

/// The automorphism of the truncation induced by an automorphism of a
/// cubic graph.
pub fn truncation_automorphism(graph: &Graph, g: &Permutation) -> Permutation {
    let mut images = vec![0; 3 * graph.n()];
    for v in 0..graph.n() {
        let gv = g.apply(v);
        for (i, &w) in graph.neighbors(v).iter().enumerate() {
            let k = graph.neighbors(gv).binary_search(&g.apply(w)).expect("g preserves edges");
            images[3 * v + i] = 3 * gv + k;
        }
    }
    Permutation::from_images(images).expect("corner map is a bijection")
}

/// The triangles of a truncation, as cells.
pub fn triangle_cells(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|v| vec![3 * v, 3 * v + 1, 3 * v + 2]).collect()
}
