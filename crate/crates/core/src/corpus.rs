//! Bundled fixtures: permutation groups and graphs with a short note on how
//! each was built.

use crate::explicit::catalog;
use crate::gf2k::{Field, FieldElem, Mat2};
use crate::graph::Graph;
use crate::perm::{coset_action, PermGroup, Permutation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

#[derive(Debug, Clone)]
pub enum Payload {
    Group(PermGroup),
    Graph { graph: Graph, automorphisms: Vec<Permutation> },
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub payload: Payload,
    pub provenance: &'static str,
}

impl Fixture {
    pub fn group(&self) -> Option<&PermGroup> {
        match &self.payload {
            Payload::Group(g) => Some(g),
            Payload::Graph { .. } => None,
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.payload {
            Payload::Graph { graph, .. } => Some(graph),
            Payload::Group(_) => None,
        }
    }
}

pub const FIXTURE_NAMES: &[&str] = &[
    "psl2_16_gens",
    "psl2_16_h_gens",
    "s6_gens",
    "s6_s4_gens",
    "s6_on_s4_cosets",
    "cyclic:n",
    "dihedral:n",
    "petersen",
    "coxeter",
    "truncated_petersen",
    "truncated_coxeter",
];

/// Images of `l`, `t`, `u` on the projective line over GF(16): field
/// element `x` is point `x`, infinity is point 16.
const PSL2_16_L: [usize; 17] = [16, 1, 9, 14, 13, 11, 7, 6, 15, 2, 12, 5, 10, 4, 3, 8, 0];
const PSL2_16_T: [usize; 17] = [0, 4, 8, 12, 3, 7, 11, 15, 6, 2, 14, 10, 5, 1, 13, 9, 16];
const PSL2_16_U: [usize; 17] = [0, 16, 15, 8, 10, 12, 7, 6, 3, 14, 4, 13, 5, 11, 9, 2, 1];

/// `l = [[0,1],[1,0]]`, `t = diag(theta, theta^-1)`, `u = [[1,1],[0,1]]`.
pub fn psl2_matrices(f: &Field) -> [Mat2; 3] {
    let (z, o) = (FieldElem::ZERO, FieldElem::ONE);
    let th = f.theta();
    let inv = f.inv(th).expect("theta is nonzero");
    [Mat2([[z, o], [o, z]]), Mat2([[th, z], [z, inv]]), Mat2([[o, o], [z, o]])]
}

/// Permutation of the `q + 1` projective points induced by `(x : 1) M`.
pub fn projective_permutation(f: &Field, m: &Mat2) -> Permutation {
    let q = f.q() as usize;
    let label = |x: Option<FieldElem>| x.map_or(q, |e| e.0 as usize);
    let images = (0..=q)
        .map(|i| {
            let x = (i < q).then_some(FieldElem(i as u32));
            label(m.act_projective(f, x))
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrix permutes the line")
}

/// `[l, t, u]` over GF(2^k) as permutations of degree `2^k + 1`.
pub fn psl2_generators(k: u32) -> [Permutation; 3] {
    let f = Field::new(k).expect("supported degree");
    psl2_matrices(&f).map(|m| projective_permutation(&f, &m))
}

pub fn psl2_16() -> PermGroup {
    let gens = [PSL2_16_L, PSL2_16_T, PSL2_16_U]
        .iter()
        .map(|a| Permutation::from_images(a.to_vec()).unwrap())
        .collect();
    PermGroup::new(17, gens).unwrap()
}

/// `u` and `t^3` inside [`psl2_16`].
pub fn psl2_16_h_generators() -> Vec<Permutation> {
    let g = psl2_16();
    let [_, t, u] = [&g.generators()[0], &g.generators()[1], &g.generators()[2]];
    vec![u.clone(), t.pow(3)]
}

pub fn s6() -> PermGroup {
    PermGroup::new(
        6,
        vec![
            Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
            Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
        ],
    )
    .unwrap()
}

/// Symmetric group on `{2, 3, 4, 5}` inside [`s6`].
pub fn s6_s4_generators() -> Vec<Permutation> {
    vec![
        Permutation::from_cycles(6, &[&[2, 3, 4, 5]]).unwrap(),
        Permutation::from_cycles(6, &[&[2, 3]]).unwrap(),
    ]
}

pub fn s6_on_s4_cosets() -> PermGroup {
    coset_action(&s6(), &s6_s4_generators())
        .expect("S4 lies in S6")
        .group()
        .clone()
}

pub fn cyclic(n: usize) -> PermGroup {
    PermGroup::new(n, vec![Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()]).unwrap()
}

pub fn dihedral(n: usize) -> PermGroup {
    let flip = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    let mut g = cyclic(n).generators().to_vec();
    g.push(flip);
    PermGroup::new(n, g).unwrap()
}

pub fn fixture(name: &str) -> Result<Fixture, CorpusError> {
    let unknown = || CorpusError::UnknownFixture(name.to_string());
    let group = |g: PermGroup, provenance| Fixture {
        name: name.to_string(),
        payload: Payload::Group(g),
        provenance,
    };
    if let Some((family, n)) = name.split_once(':') {
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        return match family {
            "cyclic" => Ok(group(cyclic(n), "rotation i -> i+1 mod n")),
            "dihedral" if n >= 3 => Ok(group(dihedral(n), "rotation i -> i+1 and reflection i -> -i mod n")),
            _ => Err(unknown()),
        };
    }
    match name {
        "psl2_16_gens" => Ok(group(
            psl2_16(),
            "l, t, u acting on row vectors of PG(1,16); order 16*17*15 = 4080; rebuilt by psl2_generators(4)",
        )),
        "psl2_16_h_gens" => Ok(group(
            PermGroup::new(17, psl2_16_h_generators()).unwrap(),
            "subgroup <u, t^3> of psl2_16_gens, order 80, index 51",
        )),
        "s6_gens" => Ok(group(s6(), "6-cycle and a transposition")),
        "s6_s4_gens" => Ok(group(
            PermGroup::new(6, s6_s4_generators()).unwrap(),
            "symmetric group on {2,3,4,5}",
        )),
        "s6_on_s4_cosets" => Ok(group(
            s6_on_s4_cosets(),
            "s6_gens on right cosets of s6_s4_gens; degree 30, order 720",
        )),
        "petersen" | "coxeter" | "truncated_petersen" | "truncated_coxeter" => {
            let e = catalog(name).expect("catalog name");
            Ok(Fixture {
                name: name.to_string(),
                payload: Payload::Graph {
                    graph: e.graph,
                    automorphisms: e.automorphisms,
                },
                provenance: match name {
                    "petersen" => "outer 5-cycle, spokes, inner pentagram; automorphism group order 120",
                    "coxeter" => "cycles of steps 1, 2, 3 on three heptagons joined through 7 centres; order 336",
                    "truncated_petersen" => "each Petersen vertex replaced by a triangle; 30 vertices, cubic",
                    _ => "each Coxeter vertex replaced by a triangle; 84 vertices, cubic",
                },
            })
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl_tables_match_derivation() {
        assert_eq!(psl2_16().order(), 4080);
        let derived = psl2_generators(4);
        let g = psl2_16();
        for (a, b) in derived.iter().zip(g.generators()) {
            assert_eq!(a, b);
        }
    }
}
