//! Shared oracles for the integration suites: exhaustive labeled graph
//! enumeration, a label-list LexBFS simulator independent of the partition
//! refinement implementation, and naive clique/coloring references.

#![allow(dead_code)]

use lexelim::graph::{Graph, WeightedGraph};
use lexelim::lexbfs::VertexOrdering;

use rand::rngs::ChaCha20Rng;
use rand::{RngExt, SeedableRng};

pub fn vertex_pairs(n: usize) -> Vec<(u32, u32)> {
    (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect()
}

/// The labeled graph on `n` vertices whose edge set is selected by `mask`
/// over the lexicographic pair list.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = vertex_pairs(n);
    let edges: Vec<(u32, u32)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).expect("mask edges are simple")
}

pub fn mask_count(n: usize) -> u64 {
    1u64 << (n.saturating_sub(1) * n / 2)
}

/// Connectivity straight off the edge mask, cheaper than building a graph.
pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut classes = n;
    for (i, (u, v)) in vertex_pairs(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ru, rv) = (
                find(&mut parent, u as usize),
                find(&mut parent, v as usize),
            );
            if ru != rv {
                parent[ru] = rv;
                classes -= 1;
            }
        }
    }
    classes == 1
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((n as u32 - 1, 0));
    Graph::new(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, &vertex_pairs(n)).unwrap()
}

pub fn petersen() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap()
}

/// Literal LexBFS: label every unvisited vertex with the list of visit
/// times of its visited neighbors and repeatedly take a vertex with the
/// lexicographically greatest label. `priority` breaks ties (lower value
/// wins); identity priority reproduces the smallest-id rule.
pub fn reference_lexbfs(g: &Graph, start: u32, priority: &[u32]) -> VertexOrdering {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let pick = if step == 0 {
            start
        } else {
            let mut best: Option<u32> = None;
            for v in 0..n as u32 {
                if visited[v as usize] {
                    continue;
                }
                best = match best {
                    None => Some(v),
                    Some(b) => {
                        let lv = &labels[v as usize];
                        let lb = &labels[b as usize];
                        // Greater label wins; ties resolved by priority.
                        if lv > lb
                            || (lv == lb
                                && priority[v as usize] < priority[b as usize])
                        {
                            Some(v)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            best.expect("unvisited vertex exists")
        };
        visited[pick as usize] = true;
        order.push(pick);
        for &w in g.neighbors(pick) {
            if !visited[w as usize] {
                // Earlier steps sort greater: store the negated time so the
                // natural Vec ordering compares labels correctly.
                labels[w as usize].push(n - step);
            }
        }
    }
    VertexOrdering::new(order).expect("simulator emits a permutation")
}

/// Identity priority used for the deterministic smallest-id tie-break.
pub fn id_priority(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// All permutations of 0..n as orderings (n small).
pub fn all_orderings(n: usize) -> Vec<VertexOrdering> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    heap_permutations(&mut perm, n, &mut out);
    out
}

fn heap_permutations(perm: &mut Vec<u32>, k: usize, out: &mut Vec<VertexOrdering>) {
    if k <= 1 {
        out.push(VertexOrdering::new(perm.clone()).unwrap());
        return;
    }
    for i in 0..k {
        heap_permutations(perm, k - 1, out);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

/// Exhaustive maximum weighted clique over all subsets, independent of the
/// library's branch and bound.
pub fn naive_max_weight_clique(wg: &WeightedGraph) -> u64 {
    let g = wg.graph();
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0u64;
    for mask in 0u32..1 << n {
        let set: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_clique(&set) {
            best = best.max(wg.set_weight_sum(&set));
        }
    }
    best
}

/// All maximal cliques by subset enumeration.
pub fn naive_maximal_cliques(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    assert!(n <= 16);
    let mut cliques: Vec<u32> = Vec::new();
    for mask in 1u32..1 << n {
        let set: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_clique(&set) {
            cliques.push(mask);
        }
    }
    let mut out = Vec::new();
    for &mask in &cliques {
        let maximal = !cliques
            .iter()
            .any(|&other| other != mask && other & mask == mask);
        if maximal {
            out.push((0..n as u32).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// Clique number via the subset scan.
pub fn clique_number(g: &Graph) -> usize {
    naive_max_weight_clique(&WeightedGraph::unit(g.clone())) as usize
}

pub fn seeded_rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniform random graph with the given edge probability (numerator over
/// denominator), used where the suite needs its own stream.
pub fn random_graph_with(rng: &mut ChaCha20Rng, n: usize, num: u32, den: u32) -> Graph {
    let edges: Vec<(u32, u32)> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.random_ratio(num, den))
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// Random weights in 0..=max.
pub fn random_weights(rng: &mut ChaCha20Rng, n: usize, max: u64) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(0..=max)).collect()
}
