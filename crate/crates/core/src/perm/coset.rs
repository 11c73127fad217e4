//! Action of a group on the right cosets of a subgroup.

use super::{PermError, PermGroup, Permutation};
use std::collections::HashMap;

/// Subgroups up to this order are enumerated once and cosets are keyed by
/// their least element; larger ones fall back to chain membership.
const ENUMERATE_CAP: u128 = 100_000;

enum CosetIndex {
    Enumerated {
        subgroup: Vec<Permutation>,
        keys: HashMap<Permutation, usize>,
    },
    Membership(PermGroup),
}

/// `G` acting on `[G:H]` by right multiplication. Coset 0 is `H` itself.
pub struct CosetAction {
    action: PermGroup,
    reps: Vec<Permutation>,
    index: CosetIndex,
    subgroup_order: u128,
}

impl CosetAction {
    /// The induced permutation group on cosets.
    pub fn group(&self) -> &PermGroup {
        &self.action
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    pub fn subgroup_order(&self) -> u128 {
        self.subgroup_order
    }

    /// Representative `g` of coset `i`, i.e. coset `Hg`.
    pub fn representative(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    /// Index of the coset `Hg`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        match &self.index {
            CosetIndex::Enumerated { subgroup, keys } => keys[&canonical(subgroup, g)],
            CosetIndex::Membership(h) => self
                .reps
                .iter()
                .position(|r| h.contains(&g.then(&r.inverse())))
                .expect("element outside the acting group"),
        }
    }

    /// Permutation of the cosets induced by an arbitrary element of `G`.
    pub fn act(&self, g: &Permutation) -> Permutation {
        let images = self.reps.iter().map(|r| self.coset_of(&r.then(g))).collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    }
}

fn canonical(subgroup: &[Permutation], g: &Permutation) -> Permutation {
    subgroup
        .iter()
        .map(|h| h.then(g))
        .min()
        .expect("subgroup contains the identity")
}

/// Builds the action of `group` on right cosets of `<subgroup_gens>`.
pub fn coset_action(group: &PermGroup, subgroup_gens: &[Permutation]) -> Result<CosetAction, PermError> {
    let n = group.degree();
    if subgroup_gens.iter().any(|h| h.degree() != n || !group.contains(h)) {
        return Err(PermError::SubgroupNotContained);
    }
    let sub = PermGroup::new(n, subgroup_gens.to_vec())?;
    let subgroup_order = sub.order();
    let mut index = if subgroup_order <= ENUMERATE_CAP {
        CosetIndex::Enumerated {
            subgroup: sub.elements(),
            keys: HashMap::new(),
        }
    } else {
        CosetIndex::Membership(sub)
    };

    let mut reps = vec![Permutation::identity(n)];
    if let CosetIndex::Enumerated { subgroup, keys } = &mut index {
        keys.insert(canonical(subgroup, &reps[0]), 0);
    }
    let gens = group.generators();
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < reps.len() {
        let mut row = Vec::with_capacity(gens.len());
        for s in gens {
            let g = reps[i].then(s);
            let j = match &mut index {
                CosetIndex::Enumerated { subgroup, keys } => {
                    let key = canonical(subgroup, &g);
                    let next = reps.len();
                    let j = *keys.entry(key).or_insert(next);
                    if j == next {
                        reps.push(g);
                    }
                    j
                }
                CosetIndex::Membership(h) => {
                    match reps.iter().position(|r| h.contains(&g.then(&r.inverse()))) {
                        Some(j) => j,
                        None => {
                            reps.push(g);
                            reps.len() - 1
                        }
                    }
                }
            };
            row.push(j);
        }
        table.push(row);
        i += 1;
    }

    let degree = reps.len();
    let action_gens = (0..gens.len())
        .map(|s| Permutation::from_images(table.iter().map(|row| row[s]).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    let action = PermGroup::new(degree, action_gens)?;
    debug_assert_eq!(degree as u128 * subgroup_order, group.order());
    Ok(CosetAction {
        action,
        reps,
        index,
        subgroup_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s4_on_point_stabilizer_cosets() {
        let s4 = PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let h = s4.point_stabilizer(0);
        let act = coset_action(&s4, h.generators()).unwrap();
        assert_eq!(act.degree(), 4);
        assert!(act.group().is_transitive());
        assert_eq!(act.group().order(), 24);
        assert_eq!(act.group().point_stabilizer(0).order(), 6);
    }

    #[test]
    fn s6_on_s4_cosets() {
        let s6 = PermGroup::new(6, vec![p(6, &[&[0, 1]]), p(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let h = [p(6, &[&[2, 3]]), p(6, &[&[2, 3, 4, 5]])];
        let act = coset_action(&s6, &h).unwrap();
        assert_eq!(act.degree(), 30);
        assert_eq!(act.group().order(), 720);
        assert_eq!(act.group().point_stabilizer(0).order(), 24);
        // act() agrees with the generator images
        for (s, img) in s6.generators().iter().zip(act.group().generators()) {
            assert_eq!(&act.act(s), img);
        }
    }

    #[test]
    fn subgroup_must_be_contained() {
        let c6 = PermGroup::new(6, vec![p(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let r = coset_action(&c6, &[p(6, &[&[0, 1]])]);
        assert!(matches!(r, Err(PermError::SubgroupNotContained)));
    }
}
