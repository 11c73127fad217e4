use super::{PermGroup, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Knobs for [`find_semiregular`].
#[derive(Debug, Clone, Copy)]
pub struct SemiregularSearch {
    pub seed: u64,
    /// Number of random words tried before the exhaustive fallback.
    pub words: usize,
    pub max_word_len: usize,
    /// Exhaustive element scan only when the group order is at most this.
    pub exhaustive_cap: u128,
}

impl SemiregularSearch {
    pub const DEFAULT_SEED: u64 = 0x6b70_6d72_5eed;
}

impl Default for SemiregularSearch {
    fn default() -> Self {
        SemiregularSearch {
            seed: Self::DEFAULT_SEED,
            words: 10_000,
            max_word_len: 20,
            exhaustive_cap: 1_000_000,
        }
    }
}

/// True when every cycle of `g` has length exactly `p`.
pub fn is_semiregular(g: &Permutation, p: usize) -> bool {
    g.degree() > 0 && g.degree() % p == 0 && g.cycle_type().iter().all(|&l| l == p)
}

/// Looks for an element of order `p` with all cycles of length `p`.
///
/// Random products of generators are powered down to order `p`; if that
/// fails and the group is small enough every element is scanned. `None`
/// after an exhaustive scan (or when `p` does not divide the group order)
/// means no such element exists.
pub fn find_semiregular(group: &PermGroup, p: u64, cfg: &SemiregularSearch) -> Option<Permutation> {
    let n = group.degree();
    let pu = p as usize;
    if p < 2 || n == 0 || n % pu != 0 {
        return None;
    }
    let order = group.order();
    if order % p as u128 != 0 {
        return None;
    }
    let gens = group.generators();
    let check = |g: &Permutation| -> Option<Permutation> {
        let o = g.order();
        if o % p != 0 {
            return None;
        }
        let h = g.pow(o / p);
        is_semiregular(&h, pu).then_some(h)
    };
    for g in gens {
        if let Some(h) = check(g) {
            return Some(h);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let inverses: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    for _ in 0..cfg.words {
        let len = rng.gen_range(1..=cfg.max_word_len.max(1));
        let mut w = Permutation::identity(n);
        for _ in 0..len {
            let i = rng.gen_range(0..gens.len());
            w = if rng.gen_bool(0.5) {
                w.then(&gens[i])
            } else {
                w.then(&inverses[i])
            };
        }
        if let Some(h) = check(&w) {
            return Some(h);
        }
    }
    if order <= cfg.exhaustive_cap {
        let mut found = None;
        group.chain().for_each_element(|g| {
            if found.is_none() && is_semiregular(g, pu) {
                found = Some(g.clone());
            }
        });
        return found;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_cycle_square() {
        let c: Vec<usize> = (0..10).collect();
        let g = PermGroup::new(10, vec![Permutation::from_cycles(10, &[&c]).unwrap()]).unwrap();
        let h = find_semiregular(&g, 5, &SemiregularSearch::default()).unwrap();
        assert!(is_semiregular(&h, 5));
        assert_eq!(h.cycles().len(), 2);
    }

    #[test]
    fn absent_when_p_does_not_divide_order() {
        let s3 = PermGroup::new(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(find_semiregular(&s3, 5, &SemiregularSearch::default()).is_none());
    }

    #[test]
    fn exhaustive_fallback_used_without_random_words() {
        // S_4 by transpositions: no generator power is fixed-point-free,
        // and with no random words only the scan can find (0 1)(2 3).
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[&[2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let cfg = SemiregularSearch {
            words: 0,
            ..Default::default()
        };
        let h = find_semiregular(&s4, 2, &cfg).unwrap();
        assert!(is_semiregular(&h, 2));
    }
}
