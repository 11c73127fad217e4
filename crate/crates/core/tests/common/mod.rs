//! Brute-force oracles and corpus builders shared by the integration tests.
//! Nothing here uses stabilizer chains, union-find blocks or the solver.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashSet, VecDeque};
use vtham::corpus;
use vtham::explicit::catalog;
use vtham::graph::Graph;
use vtham::perm::{PermGroup, Permutation};

/// Every element of `<gens>` by breadth-first closure.
pub fn naive_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// All set partitions of `0..n` via restricted growth strings.
pub fn set_partitions(n: usize, mut f: impl FnMut(&[Vec<usize>])) {
    fn rec(i: usize, n: usize, cells: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
        if i == n {
            f(cells);
            return;
        }
        for c in 0..cells.len() {
            cells[c].push(i);
            rec(i + 1, n, cells, f);
            cells[c].pop();
        }
        cells.push(vec![i]);
        rec(i + 1, n, cells, f);
        cells.pop();
    }
    rec(0, n, &mut Vec::new(), &mut f);
}

fn invariant(cells: &[Vec<usize>], gens: &[Permutation], n: usize) -> bool {
    let mut cell = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &x in c {
            cell[x] = i;
        }
    }
    gens.iter().all(|g| {
        cells.iter().all(|c| {
            let t = cell[g.apply(c[0])];
            c.iter().all(|&x| cell[g.apply(x)] == t)
        })
    })
}

/// Every invariant partition with equal cells, trivial ones included.
pub fn brute_block_systems(group: &PermGroup) -> Vec<Vec<Vec<usize>>> {
    let n = group.degree();
    let mut out = Vec::new();
    set_partitions(n, |cells| {
        let size = cells[0].len();
        if cells.iter().all(|c| c.len() == size) && invariant(cells, group.generators(), n) {
            out.push(cells.to_vec());
        }
    });
    out
}

/// Smallest block containing `a` and `b` among all invariant partitions.
pub fn brute_minimal_block(group: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    brute_block_systems(group)
        .into_iter()
        .flat_map(|p| p.into_iter())
        .filter(|c| c.contains(&a) && c.contains(&b))
        .min_by_key(Vec::len)
        .unwrap()
}

/// Hamilton cycle by trying every ordering of `1..n` after vertex 0.
pub fn naive_has_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let closes = |order: &[usize]| {
        g.has_edge(0, order[0])
            && order.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.has_edge(order[order.len() - 1], 0)
    };
    for_each_permutation(&mut rest, closes)
}

/// Hamilton path by trying every ordering of all vertices.
pub fn naive_has_path(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut all: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut all, |o| o.windows(2).all(|w| g.has_edge(w[0], w[1])))
}

/// Heap's algorithm; stops as soon as `pred` holds.
fn for_each_permutation(a: &mut [usize], pred: impl Fn(&[usize]) -> bool) -> bool {
    let n = a.len();
    if pred(a) {
        return true;
    }
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if pred(a) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(v).unwrap()
}

pub fn random_group(rng: &mut ChaCha8Rng, max_degree: usize) -> PermGroup {
    let n = rng.gen_range(2..=max_degree);
    let k = rng.gen_range(1..=3);
    let gens = (0..k).map(|_| random_permutation(rng, n)).collect();
    PermGroup::new(n, gens).unwrap()
}

pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    Graph::from_edges_dedup(n, (0..n).flat_map(|i| jumps.iter().map(move |&s| (i, (i + s) % n))))
}

pub fn cycle(n: usize) -> Graph {
    circulant(n, &[1])
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

pub fn shift(n: usize, s: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + s) % n).collect()).unwrap()
}

/// Graphs with at most 10 vertices used for oracle comparisons.
pub fn small_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for name in [
        "petersen",
        "crown:3",
        "crown:4",
        "crown:5",
        "prism:3",
        "prism:4",
        "prism:5",
        "complete:3",
        "complete:4",
        "complete:7",
        "complete:10",
        "complete_bipartite:3:3",
        "complete_bipartite:2:3",
        "complete_bipartite:4:5",
        "complete_bipartite:5:5",
        "circulant:8:{1,4}",
        "circulant:9:{3}",
        "circulant:10:{2,5}",
        "circulant:10:{4}",
        "circulant:10:{1,5}",
    ] {
        out.push((name.to_string(), catalog(name).unwrap().graph));
    }
    out.push(("path:4".into(), path(4)));
    out.push(("cycle:7".into(), cycle(7)));
    out.push(("star:3".into(), Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()));
    out.push((
        "two_triangles".into(),
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
    ));
    out.push((
        "bowtie".into(),
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
    ));
    out.push((
        "theta".into(),
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 3), (0, 6), (6, 3)]).unwrap(),
    ));
    let mut r = rng(99);
    for i in 0..12 {
        let n = r.gen_range(4..=9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| r.gen_bool(0.45))
            .collect();
        out.push((format!("random:{i}"), Graph::from_edges(n, &edges).unwrap()));
    }
    out
}

/// Transitive groups of degree at most 10.
pub fn small_transitive_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for n in 2..=10 {
        out.push((format!("cyclic:{n}"), corpus::cyclic(n)));
        if n >= 3 {
            out.push((format!("dihedral:{n}"), corpus::dihedral(n)));
        }
    }
    out.push(("s6".into(), corpus::s6()));
    for name in ["petersen", "prism:4", "prism:5", "crown:4", "crown:5", "complete_bipartite:4:4", "circulant:9:{3}"] {
        let e = catalog(name).unwrap();
        out.push((name.to_string(), PermGroup::new(e.graph.n(), e.automorphisms).unwrap()));
    }
    let s4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    out.push(("s4".into(), s4));
    // Z_2 x Z_4 regular, and the wreath-like 2 x 2 x 2 on 8 points
    out.push((
        "z2xz4".into(),
        PermGroup::new(
            8,
            vec![
                Permutation::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).unwrap(),
                Permutation::from_cycles(8, &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    out
}

/// A graph with a semiregular automorphism of prime order `p`.
pub struct LiftInstance {
    pub name: String,
    pub graph: Graph,
    pub rho: Permutation,
    pub p: usize,
}

/// Seeded random circulants (shift powers) followed by catalog graphs with
/// semiregular elements from their automorphism groups; at least two cells.
pub fn lift_instances(count: usize, seed: u64) -> Vec<LiftInstance> {
    use vtham::perm::{find_semiregular, prime_divisors, SemiregularSearch};
    let mut out = Vec::new();
    for name in ["petersen", "coxeter", "heawood", "prism:5", "prism:6", "crown:5", "crown:6", "truncated_petersen", "non_incidence_pg22"] {
        let e = catalog(name).unwrap();
        let n = e.graph.n();
        let g = PermGroup::new(n, e.automorphisms).unwrap();
        for p in prime_divisors(n as u64) {
            if p as usize == n {
                continue;
            }
            if let Some(rho) = find_semiregular(&g, p, &SemiregularSearch::default()) {
                out.push(LiftInstance {
                    name: format!("{name} p={p}"),
                    graph: e.graph.clone(),
                    rho,
                    p: p as usize,
                });
            }
        }
    }
    let mut r = rng(seed);
    while out.len() < count {
        let n = r.gen_range(6..=36);
        let primes = prime_divisors(n as u64);
        let p = primes[r.gen_range(0..primes.len())] as usize;
        if p == n {
            continue;
        }
        let k = r.gen_range(1..=3);
        let jumps: Vec<usize> = (0..k).map(|_| r.gen_range(1..=n / 2)).collect();
        out.push(LiftInstance {
            name: format!("circulant:{n}:{jumps:?} p={p}"),
            graph: circulant(n, &jumps),
            rho: shift(n, n / p),
            p,
        });
    }
    out.truncate(count);
    out
}

/// Every simple cycle of length at least 3 in `g`, each once, capped.
pub fn simple_cycles(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, start: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>, cap: usize) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if out.len() >= cap {
                return;
            }
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                dfs(g, start, path, on, out, cap);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        dfs(g, s, &mut vec![s], &mut on, &mut out, cap);
        on[s] = false;
    }
    out
}

#[derive(Debug, Default)]
pub struct DichotomyTally {
    pub cycles: usize,
    pub choices: usize,
    pub single: usize,
    pub split: usize,
    pub violations: Vec<String>,
}

/// Lifts every quotient cycle (plus the two-cell multi-edge cycles) under
/// every voltage choice and checks the one-long-cycle / p-short-cycles
/// dichotomy against the net voltage.
pub fn check_dichotomy(inst: &LiftInstance, tally: &mut DichotomyTally) {
    use vtham::lift::{cycle_voltage, decompose, lifted_cycles, VoltageAssignment};
    let dec = decompose(&inst.graph, &inst.rho, inst.p).unwrap();
    let volt = VoltageAssignment::of(&inst.graph, &dec);
    let p = inst.p;
    let mut fail = |msg: String| tally.violations.push(format!("{}: {msg}", inst.name));

    // reversal symmetry of the voltage convention
    for a in 0..dec.m {
        for b in 0..dec.m {
            let mut rev: Vec<usize> = volt.voltages(b, a).iter().map(|&j| (p - j) % p).collect();
            rev.sort_unstable();
            if rev != volt.voltages(a, b) {
                fail(format!("voltages {a}->{b} are not the negatives of {b}->{a}"));
            }
        }
    }

    let q = vtham::graph::quotient_multigraph(&inst.graph, &dec.cells).unwrap();
    let mut cycles = simple_cycles(&q.simple_graph(), 200);
    for a in 0..dec.m {
        for b in a + 1..dec.m {
            if volt.voltages(a, b).len() >= 2 {
                cycles.push(vec![a, b]);
            }
        }
    }
    for cyc in cycles {
        tally.cycles += 1;
        let k = cyc.len();
        let sets: Vec<&[usize]> = (0..k).map(|i| volt.voltages(cyc[i], cyc[(i + 1) % k])).collect();
        let mut idx = vec![0usize; k];
        let mut budget = 512;
        loop {
            let choice: Vec<usize> = (0..k).map(|i| sets[i][idx[i]]).collect();
            let ok_pair = k != 2 || (choice[0] + choice[1]) % p != 0;
            if ok_pair {
                tally.choices += 1;
                let net = cycle_voltage(&volt, &cyc, &choice).unwrap();
                let lifted = lifted_cycles(&dec, &volt, &cyc, &choice).unwrap();
                for c in &lifted {
                    let closed = (0..c.len()).all(|i| inst.graph.has_edge(c[i], c[(i + 1) % c.len()]));
                    if !closed {
                        fail(format!("lifted walk {c:?} is not a cycle of the graph"));
                    }
                }
                let lens: Vec<usize> = lifted.iter().map(Vec::len).collect();
                if lens == [k * p] {
                    tally.single += 1;
                    if net == 0 {
                        fail(format!("cycle {cyc:?} choice {choice:?}: single lift with net voltage 0"));
                    }
                } else if lens.len() == p && lens.iter().all(|&l| l == k) {
                    tally.split += 1;
                    if net != 0 {
                        fail(format!("cycle {cyc:?} choice {choice:?}: split lift with net voltage {net}"));
                    }
                } else {
                    fail(format!("cycle {cyc:?} choice {choice:?}: lift has cycle lengths {lens:?}"));
                }
            }
            budget -= 1;
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < sets[i].len() {
                    break;
                }
                idx[i] = 0;
            }
            if budget == 0 || idx.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
}

/// One bipartite valency measurement on `Y(i)` next to both solution counts.
#[derive(Debug, Clone)]
pub struct PslRow {
    pub m: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub valency: usize,
    pub count_y_nonzero: u64,
    pub count_free: u64,
}

#[derive(Debug, Clone)]
pub struct PslReport {
    pub degree: usize,
    pub lengths: Vec<usize>,
    pub long_suborbits_self_paired: bool,
    /// Per valid `m`: cycle type of the order-17 element of `S` on the 51 cosets.
    pub s_cycle_types: Vec<(u32, Vec<usize>)>,
    /// Per valid `m`: cell sizes on each side of the 102-vertex double.
    pub double_cells: Vec<(u32, Vec<usize>, Vec<usize>)>,
    pub rows: Vec<PslRow>,
}

/// Builds the degree-51 action of PSL(2,16) on cosets of `<u, t^3>`, the
/// graphs `Y(i)` on the suborbits of `t^i l H`, their bipartite doubles,
/// and measures valencies between `S`-orbit cells.
pub fn psl_crosscheck() -> PslReport {
    use vtham::exec::Exec;
    use vtham::gf2k::{count_eq2, irreducible_ms, s_group, Field};
    use vtham::orbital::{orbital_graph_with, suborbits};
    use vtham::perm::coset_action;

    let k = corpus::psl2_16();
    let (l, t) = (&k.generators()[0], &k.generators()[1]);
    let ca = coset_action(&k, &corpus::psl2_16_h_generators()).unwrap();
    let g = ca.group().clone();
    let table = suborbits(&g, 0).unwrap();
    let lengths = table.lengths();
    let long_suborbits_self_paired = (0..lengths.len()).filter(|&i| lengths[i] == 16).all(|i| table.is_self_paired(i));

    let f = Field::new(4).unwrap();
    let mut report = PslReport {
        degree: ca.degree(),
        lengths,
        long_suborbits_self_paired,
        s_cycle_types: Vec::new(),
        double_cells: Vec::new(),
        rows: Vec::new(),
    };
    let n = ca.degree();
    for m in irreducible_ms(&f) {
        let s = s_group(&f, m).unwrap();
        let sp = corpus::projective_permutation(&f, &s.generator.to_mat(&f, m));
        assert!(k.contains(&sp));
        let sa = ca.act(&sp);
        report.s_cycle_types.push((m, sa.cycle_type()));
        let doubled = Permutation::from_images((0..2 * n).map(|x| sa.apply(x % n) + n * (x / n)).collect()).unwrap();
        let cells = doubled.cycles();
        let side = |s: usize| cells.iter().filter(|c| c[0] / n == s).map(Vec::len).collect::<Vec<_>>();
        report.double_cells.push((m, side(0), side(1)));
        let cell_of = |x: usize| cells.iter().position(|c| c.contains(&x)).unwrap();

        for i in 0..3u32 {
            let idx = table.index_of(ca.coset_of(&t.pow(i as u64).then(l))).unwrap();
            let y = orbital_graph_with(&g, &table, &[idx]).unwrap().graph;
            let double = Graph::from_edges_dedup(
                2 * n,
                y.edges().into_iter().flat_map(|(a, b)| [(a, b + n), (b, a + n)]),
            );
            for j in 0..3u32 {
                let a = ca.coset_of(&t.pow(j as u64));
                for kk in 0..3u32 {
                    let target = cell_of(ca.coset_of(&t.pow(kk as u64)) + n);
                    let valency = double.neighbors(a).iter().filter(|&&w| cell_of(w) == target).count();
                    let c = f.theta_pow(-(i as i64 - j as i64 - kk as i64));
                    report.rows.push(PslRow {
                        m,
                        i,
                        j,
                        k: kk,
                        valency,
                        count_y_nonzero: count_eq2(&f, m, c, true, Exec::Sequential).unwrap(),
                        count_free: count_eq2(&f, m, c, false, Exec::Sequential).unwrap(),
                    });
                }
            }
        }
    }
    report
}
