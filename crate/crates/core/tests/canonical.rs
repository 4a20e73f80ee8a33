use std::collections::{BTreeSet, HashSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use specred_core::graph6::{parse_graph6, to_graph6};
use specred_core::subgraphs::enumerate_connected_induced;
use specred_core::{canonical_code, Graph};

fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism-class key by exhaustive search: the smallest edge list over
/// all relabelings.
fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e = g.relabel(p).edges();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap()
}

#[test]
fn code_is_invariant_under_relabeling() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
    }
}

#[test]
fn code_separates_exactly_the_isomorphism_classes() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=7 {
        let perms = permutations(n);
        let graphs: Vec<Graph> = (0..120)
            .map(|_| {
                let density = rng.gen_range(0.2..0.8);
                random_graph(&mut rng, n, density)
            })
            .collect();
        let codes: Vec<_> = graphs.iter().map(canonical_code).collect();
        let keys: Vec<_> = graphs.iter().map(|g| brute_key(g, &perms)).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert_eq!(codes[i] == codes[j], keys[i] == keys[j], "n={n}");
            }
        }
    }
}

#[test]
fn decoded_code_is_isomorphic() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let code = canonical_code(&g);
        assert_eq!(canonical_code(&code.to_graph()), code);
        assert_eq!(code.order(), n);
    }
}

#[test]
fn symmetric_graphs_with_many_twins() {
    // complete bipartite and complete multipartite graphs have huge twin classes
    let kmn = |m: usize, n: usize| {
        let mut g = Graph::empty(m + n).unwrap();
        for i in 0..m {
            for j in m..m + n {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    };
    let a = kmn(20, 30);
    let mut perm: Vec<usize> = (0..50).collect();
    perm.reverse();
    assert_eq!(canonical_code(&a), canonical_code(&a.relabel(&perm)));
    assert_ne!(canonical_code(&kmn(20, 30)), canonical_code(&kmn(21, 29)));
    let c = Graph::cycle(40).unwrap();
    let mut perm: Vec<usize> = (0..40).collect();
    perm.rotate_left(13);
    assert_eq!(canonical_code(&c), canonical_code(&c.relabel(&perm)));
    assert_ne!(
        canonical_code(&c),
        canonical_code(&Graph::path(40).unwrap())
    );
}

/// Connected graphs on n vertices up to isomorphism: 1, 1, 2, 6, 21, 112.
#[test]
fn counts_connected_graphs_by_order() {
    for (n, expected) in [(1usize, 1usize), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                classes.insert(canonical_code(&g));
            }
        }
        assert_eq!(classes.len(), expected, "n={n}");
    }
}

#[test]
fn enumeration_matches_brute_force_classes() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let perms: Vec<Vec<Vec<usize>>> = (0..=n).map(permutations).collect();
        let mut expected = BTreeSet::new();
        for mask in 1u64..(1 << n) {
            if g.is_connected_subset(mask) {
                let h = g.induced(mask);
                expected.insert((h.order(), brute_key(&h, &perms[h.order()])));
            }
        }
        assert_eq!(
            enumerate_connected_induced(&g).unwrap().len(),
            expected.len()
        );
    }
}

#[test]
fn graph6_round_trip() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(0..=64);
        let g = random_graph(&mut rng, n, 0.3);
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
