use super::{PermError, Permutation, StabChain};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// A permutation group given by generators, with a lazily built
/// stabiliser chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Orbit partition; each orbit sorted, orbits ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[start] = id;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit(&self, v: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|o| o.binary_search(&v).is_ok())
            .unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Generators of `G_v`.
    pub fn point_stabilizer(&self, v: usize) -> PermGroup {
        let chain = StabChain::with_base_prefix(self.degree, &self.generators, &[v]);
        PermGroup::new(self.degree, chain.stabilizer_generators(1)).unwrap()
    }

    pub fn is_subgroup_generated_by(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| self.contains(g))
    }

    /// Every element, in chain order. Intended for small groups only.
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements()
    }
}

/// JSON shape `{"degree": n, "generators": [[..],..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl From<&PermGroup> for GroupJson {
    fn from(g: &PermGroup) -> Self {
        GroupJson {
            degree: g.degree,
            generators: g.generators.iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

impl TryFrom<GroupJson> for PermGroup {
    type Error = PermError;

    fn try_from(j: GroupJson) -> Result<Self, PermError> {
        let gens = j
            .generators
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(j.degree, gens)
    }
}
