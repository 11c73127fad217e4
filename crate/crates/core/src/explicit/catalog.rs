//! Named graphs under fixed labelings, each with automorphism generators.
//!
//! | name | labeling |
//! |---|---|
//! | `petersen` | outer `i ~ i+1`, spokes `i ~ 5+i`, inner `5+i ~ 5+(i+2)` (mod 5) |
//! | `coxeter` | `a_i = i`, `b_i = 7+i`, `c_i = 14+i`, `d_i = 21+i`; `a_i ~ a_(i+1)`, `b_i ~ b_(i+2)`, `c_i ~ c_(i+3)`, `d_i ~ a_i, b_i, c_i` |
//! | `truncated_*` | vertex `v` becomes `3v, 3v+1, 3v+2` (see [`truncate_cubic`](super::truncate_cubic)) |
//! | `heawood` | points `0..7`, line `L_i = {i, i+1, i+3}` is vertex `7+i`, incidence |
//! | `non_incidence_pg22` | same labels, point ~ line when not incident |
//! | `crown:p` | `i ~ p+j` for `i != j` |
//! | `circulant:n:S` | `i ~ i+s` for `s` in `S` |
//! | `prism:t` | `i ~ i+1`, `t+i ~ t+i+1`, `i ~ t+i` |
//! | `complete:n`, `complete_bipartite:a:b` | parts `0..a` and `a..a+b` |

use super::{truncate_cubic, truncation_automorphism};
use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{0}`")]
    BadParams(String),
}

pub const CATALOG_NAMES: &[&str] = &[
    "petersen",
    "coxeter",
    "truncated_petersen",
    "truncated_coxeter",
    "heawood",
    "non_incidence_pg22",
    "crown:p",
    "circulant:n:S",
    "prism:t",
    "complete:n",
    "complete_bipartite:a:b",
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    /// Generators of a group of automorphisms, transitive on vertices
    /// whenever `vertex_transitive` is set.
    pub automorphisms: Vec<Permutation>,
    pub vertex_transitive: bool,
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("catalog generator is a bijection")
}

fn entry(name: &str, graph: Graph, automorphisms: Vec<Permutation>) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        graph,
        automorphisms,
        vertex_transitive: true,
    }
}

fn petersen() -> CatalogEntry {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, 5 + i));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    let g = Graph::from_edges(10, &e).unwrap();
    let gens = vec![
        perm(vec![1, 2, 3, 4, 0, 6, 7, 8, 9, 5]),
        perm(vec![5, 7, 9, 6, 8, 0, 2, 4, 1, 3]),
        perm(vec![0, 1, 2, 7, 5, 4, 6, 3, 9, 8]),
    ];
    entry("petersen", g, gens)
}

fn coxeter() -> CatalogEntry {
    let mut e = Vec::new();
    for i in 0..7 {
        e.push((i, (i + 1) % 7));
        e.push((7 + i, 7 + (i + 2) % 7));
        e.push((14 + i, 14 + (i + 3) % 7));
        e.extend([(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]);
    }
    let g = Graph::from_edges(28, &e).unwrap();
    let rot = perm((0..28).map(|v| v / 7 * 7 + (v % 7 + 1) % 7).collect());
    let other = perm(vec![
        0, 1, 2, 23, 9, 7, 21, 5, 15, 4, 19, 25, 26, 18, 27, 8, 24, 20, 13, 10, 17, 6, 22, 3, 16, 11, 12, 14,
    ]);
    entry("coxeter", g, vec![rot, other])
}

fn truncated(base: CatalogEntry, name: &str) -> CatalogEntry {
    let g = truncate_cubic(&base.graph).expect("base is cubic");
    let gens = base
        .automorphisms
        .iter()
        .map(|a| truncation_automorphism(&base.graph, a))
        .collect();
    entry(name, g, gens)
}

/// Point/line symmetries of the Fano plane under the `L_i = {i, i+1, i+3}`
/// labeling: translation, `x -> 2x` (sending `L_i` to `L_(2i-1)`), and the
/// polarity `x <-> L_(-x)`.
fn fano_symmetries() -> Vec<Permutation> {
    let shift = perm((0..14).map(|v| v / 7 * 7 + (v % 7 + 1) % 7).collect());
    let double = perm(
        (0..7)
            .map(|x| 2 * x % 7)
            .chain((0..7).map(|i| 7 + (2 * i + 6) % 7))
            .collect(),
    );
    let polarity = perm(
        (0..7)
            .map(|x| 7 + (7 - x) % 7)
            .chain((0..7).map(|i| (7 - i) % 7))
            .collect(),
    );
    vec![shift, double, polarity]
}

fn fano(incident: bool, name: &str) -> CatalogEntry {
    let mut e = Vec::new();
    for x in 0..7 {
        for i in 0..7 {
            let on = [0, 1, 3].contains(&((x + 7 - i) % 7));
            if on == incident {
                e.push((x, 7 + i));
            }
        }
    }
    entry(name, Graph::from_edges(14, &e).unwrap(), fano_symmetries())
}

fn crown(p: usize) -> CatalogEntry {
    let e: Vec<_> = (0..p)
        .flat_map(|i| (0..p).filter(move |&j| j != i).map(move |j| (i, p + j)))
        .filter(|&(u, v)| u < v)
        .collect();
    let both = |f: &dyn Fn(usize) -> usize| perm((0..2 * p).map(|v| v / p * p + f(v % p)).collect());
    let mut gens = vec![
        both(&|i| (i + 1) % p),
        perm((0..2 * p).map(|v| (v + p) % (2 * p)).collect()),
    ];
    if p > 2 {
        gens.push(both(&|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }));
    }
    entry(&format!("crown:{p}"), Graph::from_edges(2 * p, &e).unwrap(), gens)
}

fn circulant(n: usize, jumps: &[usize]) -> CatalogEntry {
    let g = Graph::from_edges_dedup(n, (0..n).flat_map(|i| jumps.iter().map(move |&s| (i, (i + s) % n))));
    let rot = perm((0..n).map(|i| (i + 1) % n).collect());
    let flip = perm((0..n).map(|i| (n - i) % n).collect());
    let set: Vec<String> = jumps.iter().map(usize::to_string).collect();
    entry(&format!("circulant:{n}:{{{}}}", set.join(",")), g, vec![rot, flip])
}

fn prism(t: usize) -> CatalogEntry {
    let mut e = Vec::new();
    for i in 0..t {
        e.extend([(i, (i + 1) % t), (t + i, t + (i + 1) % t), (i, t + i)]);
    }
    let g = Graph::from_edges_dedup(2 * t, e);
    let rot = perm((0..2 * t).map(|v| v / t * t + (v % t + 1) % t).collect());
    let flip = perm((0..2 * t).map(|v| v / t * t + (t - v % t) % t).collect());
    let swap = perm((0..2 * t).map(|v| (v + t) % (2 * t)).collect());
    entry(&format!("prism:{t}"), g, vec![rot, flip, swap])
}

fn complete(n: usize) -> CatalogEntry {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut gens = vec![perm((0..n).map(|i| (i + 1) % n).collect())];
    if n > 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
    }
    entry(&format!("complete:{n}"), Graph::from_edges(n, &e).unwrap(), gens)
}

fn complete_bipartite(a: usize, b: usize) -> CatalogEntry {
    let e: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    let n = a + b;
    let cyc = |lo: usize, len: usize| {
        perm((0..n).map(|v| if v >= lo && v < lo + len { lo + (v - lo + 1) % len } else { v }).collect())
    };
    let mut gens = vec![cyc(0, a), cyc(a, b)];
    if a > 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
    }
    if b > 2 {
        gens.push(Permutation::from_cycles(n, &[&[a, a + 1]]).unwrap());
    }
    if a == b {
        gens.push(perm((0..n).map(|v| (v + a) % n).collect()));
    }
    let mut out = entry(&format!("complete_bipartite:{a}:{b}"), Graph::from_edges(n, &e).unwrap(), gens);
    out.vertex_transitive = a == b;
    out
}

fn parse_jumps(s: &str) -> Option<Vec<usize>> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out: Vec<usize> = inner
        .split(',')
        .map(|x| x.trim().parse().ok())
        .collect::<Option<_>>()?;
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// Looks up a graph by `name[:param[:param]]`.
pub fn catalog(spec: &str) -> Result<CatalogEntry, CatalogError> {
    let parts: Vec<&str> = spec.trim().splitn(3, ':').collect();
    let bad = || CatalogError::BadParams(spec.to_string());
    let num = |i: usize| -> Result<usize, CatalogError> {
        parts.get(i).and_then(|s| s.trim().parse().ok()).ok_or_else(bad)
    };
    let arity = |k: usize| if parts.len() == k + 1 { Ok(()) } else { Err(bad()) };
    match parts[0] {
        "petersen" => arity(0).map(|_| petersen()),
        "coxeter" => arity(0).map(|_| coxeter()),
        "truncated_petersen" => arity(0).map(|_| truncated(petersen(), "truncated_petersen")),
        "truncated_coxeter" => arity(0).map(|_| truncated(coxeter(), "truncated_coxeter")),
        "heawood" => arity(0).map(|_| fano(true, "heawood")),
        "non_incidence_pg22" => arity(0).map(|_| fano(false, "non_incidence_pg22")),
        "crown" => {
            arity(1)?;
            let p = num(1)?;
            if p < 2 {
                return Err(bad());
            }
            Ok(crown(p))
        }
        "circulant" => {
            arity(2)?;
            let n = num(1)?;
            let jumps = parse_jumps(parts[2]).ok_or_else(bad)?;
            if n < 2 || jumps.is_empty() || jumps.iter().any(|&s| s == 0 || s >= n) {
                return Err(bad());
            }
            Ok(circulant(n, &jumps))
        }
        "prism" => {
            arity(1)?;
            let t = num(1)?;
            if t < 3 {
                return Err(bad());
            }
            Ok(prism(t))
        }
        "complete" => {
            arity(1)?;
            let n = num(1)?;
            if n < 1 {
                return Err(bad());
            }
            Ok(complete(n))
        }
        "complete_bipartite" => {
            arity(2)?;
            let (a, b) = (num(1)?, num(2)?);
            if a < 1 || b < 1 {
                return Err(bad());
            }
            Ok(complete_bipartite(a, b))
        }
        _ => Err(CatalogError::UnknownName(spec.to_string())),
    }
}
