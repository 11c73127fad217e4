//! Deterministic Schreier-Sims.
//!
//! Base points come from an optional caller-supplied prefix, then from the
//! least point moved by the first strong generator that needs a new level.
//! No randomisation anywhere, so the chain for a given generator list is
//! always the same.

use super::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    /// Orbit of `base` under `gens`, in discovery order.
    orbit: Vec<usize>,
    /// `transversal[x] = Some(u)` with `base^u = x` for every orbit point.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    /// Extends orbit and transversal after generators were added.
    fn grow_orbit(&mut self) {
        let mut i = 0;
        // Re-scan from the start: new generators can reach from old points.
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for s in 0..self.gens.len() {
                let y = self.gens[s].apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(&self.gens[s]);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set with full transversals.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    prefix: Vec<usize>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Chain whose first base points are `prefix`, in order.
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            prefix: prefix.to_vec(),
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        let base = chain.next_base(0, &gens[0]);
        let mut level = Level::new(base, degree);
        level.gens = gens;
        level.grow_orbit();
        chain.levels.push(level);
        chain.complete(0);
        chain
    }

    fn next_base(&self, depth: usize, witness: &Permutation) -> usize {
        match self.prefix.get(depth) {
            Some(&b) => b,
            None => witness.first_moved().expect("non-identity witness"),
        }
    }

    /// Makes level `i` a base-and-strong-generating set for `<gens_i>`,
    /// assuming nothing about deeper levels.
    fn complete(&mut self, i: usize) {
        let mut oi = 0;
        while oi < self.levels[i].orbit.len() {
            let x = self.levels[i].orbit[oi];
            let mut si = 0;
            while si < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let s = &level.gens[si];
                let ux = level.transversal[x].as_ref().unwrap();
                let y = s.apply(x);
                let uy = level.transversal[y].as_ref().unwrap();
                let schreier = ux.then(s).then(&uy.inverse());
                let (residue, _) = self.sift(schreier, i + 1);
                if !residue.is_identity() {
                    if self.levels.len() == i + 1 {
                        let base = self.next_base(i + 1, &residue);
                        self.levels.push(Level::new(base, self.degree));
                    }
                    self.levels[i + 1].gens.push(residue);
                    self.levels[i + 1].grow_orbit();
                    self.complete(i + 1);
                }
                si += 1;
            }
            oi += 1;
        }
    }

    /// Strips `g` through levels `from..`. Returns the residue and the level
    /// at which stripping stopped (`levels.len()` if it passed all of them).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match &level.transversal[b] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Orbit of the first base point (empty chain: just the prefix point).
    pub fn base_orbit(&self) -> Vec<usize> {
        match self.levels.first() {
            Some(l) => l.orbit.clone(),
            None => self.prefix.first().map(|&b| vec![b]).unwrap_or_default(),
        }
    }

    /// Element carrying the first base point to `x`, if any.
    pub fn transversal_element(&self, x: usize) -> Option<Permutation> {
        match self.levels.first() {
            Some(l) => l.transversal[x].clone(),
            None if self.prefix.first() == Some(&x) => Some(Permutation::identity(self.degree)),
            None => None,
        }
    }

    /// Strong generators of the stabiliser of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Calls `f` on every group element exactly once.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        fn rec(levels: &[Level], acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            match levels.split_last() {
                None => f(acc),
                Some((last, rest)) => {
                    // g = h * u with h in the deeper stabiliser: build from the
                    // deepest level outwards.
                    for &x in &last.orbit {
                        let u = last.transversal[x].as_ref().unwrap();
                        rec(rest, &acc.then(u), f);
                    }
                }
            }
        }
        rec(&self.levels, &Permutation::identity(self.degree), &mut f);
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order().min(1 << 20) as usize);
        self.for_each_element(|g| out.push(g.clone()));
        out
    }
}
