//! Maximum weighted clique algorithms: an exact branch-and-bound oracle for
//! desk-scale graphs and the ordering-based schemes for chordal graphs,
//! 4-hole-free odd-signable graphs, and the classes with structured
//! neighborhoods.

use crate::configurations::find_hole;
use crate::decomposability::{find_family_copy, PatternFamily};
use crate::elimination::{
    is_elimination_ordering, perfect_elimination_ordering, EliminationCertificate,
    EliminationCheck, EliminationResult,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::lexbfs::lexbfs;

/// Vertex cap for the exponential brute-force search.
pub const BRUTE_CLIQUE_CAP: usize = 20;

/// A clique with its total weight. Nonempty graphs always yield a nonempty
/// clique (a heaviest single vertex is a lower bound); ties are broken
/// toward the lexicographically smallest vertex set among the candidates an
/// algorithm considers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub clique: Vec<u32>,
    pub weight: u64,
}

/// A certificate that the input lies outside the class an algorithm
/// targets. Every variant is checkable against the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueCertificate {
    /// The LexBFS ordering failed verification against the family.
    Elimination {
        certificate: EliminationCertificate,
        family: PatternFamily,
    },
    /// The open neighborhood of `vertex` contains a hole (so the graph has
    /// a universal wheel).
    NeighborhoodNotChordal { vertex: u32, hole: Vec<u32> },
    /// A prefix-neighborhood vertex adjacent to neither labeled clique.
    NotTwoCliques {
        position: usize,
        vertex: u32,
        offender: u32,
    },
    /// A prefix neighborhood with both an edge and a non-edge.
    NotCliqueOrStable {
        position: usize,
        vertex: u32,
        witness: Vec<u32>,
    },
    /// A prefix neighborhood that is not complete multipartite.
    NotCompleteMultipartite {
        position: usize,
        vertex: u32,
        witness: Vec<u32>,
    },
}

/// Result of a robust clique computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueOutcome {
    Clique(CliqueResult),
    Certificate(CliqueCertificate),
}

impl CliqueOutcome {
    pub fn clique(&self) -> Option<&CliqueResult> {
        match self {
            CliqueOutcome::Clique(c) => Some(c),
            CliqueOutcome::Certificate(_) => None,
        }
    }

    pub fn into_clique(self) -> Option<CliqueResult> {
        match self {
            CliqueOutcome::Clique(c) => Some(c),
            CliqueOutcome::Certificate(_) => None,
        }
    }
}

/// Keeps the best candidate under (weight descending, vertex set ascending).
struct Best {
    inner: Option<CliqueResult>,
}

impl Best {
    fn new() -> Best {
        Best { inner: None }
    }

    fn offer(&mut self, mut clique: Vec<u32>, weight: u64) {
        clique.sort_unstable();
        let better = match &self.inner {
            None => true,
            Some(cur) => weight > cur.weight || (weight == cur.weight && clique < cur.clique),
        };
        if better {
            self.inner = Some(CliqueResult { clique, weight });
        }
    }

    fn take(self) -> CliqueResult {
        self.inner.unwrap_or(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        })
    }
}

/// Exact maximum weighted clique by branch and bound over vertex subsets in
/// lexicographic order. Strict-improvement recording makes the winner the
/// lexicographically first among the maximum-weight cliques.
pub fn max_clique_bruteforce(wg: &WeightedGraph) -> Result<CliqueResult> {
    let g = wg.graph();
    let n = g.n();
    if n > BRUTE_CLIQUE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTE_CLIQUE_CAP,
        });
    }
    if n == 0 {
        return Ok(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        });
    }
    let masks: Vec<u32> = g
        .vertices()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0u32, |acc, &v| acc | 1 << v)
        })
        .collect();
    let weights = wg.weights();

    struct Search<'a> {
        masks: &'a [u32],
        weights: &'a [u64],
        n: usize,
        best: Option<(u64, Vec<u32>)>,
    }
    impl Search<'_> {
        fn run(&mut self, cand: u32, cur: &mut Vec<u32>, cur_w: u64) {
            let potential: u64 = (0..self.n)
                .filter(|&v| cand >> v & 1 == 1)
                .map(|v| self.weights[v])
                .sum();
            if let Some((bw, _)) = &self.best {
                if !cur.is_empty() && cur_w + potential <= *bw {
                    return;
                }
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                cur.push(v);
                let w = cur_w + self.weights[v as usize];
                let record = match &self.best {
                    None => true,
                    Some((bw, _)) => w > *bw,
                };
                if record {
                    self.best = Some((w, cur.clone()));
                }
                self.run(cand & self.masks[v as usize] & !((1u32 << (v + 1)) - 1), cur, w);
                cur.pop();
            }
        }
    }

    let mut search = Search {
        masks: &masks,
        weights,
        n,
        best: None,
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    search.run(full, &mut Vec::new(), 0);
    let (weight, clique) = search.best.expect("nonempty graph has a singleton clique");
    Ok(CliqueResult { clique, weight })
}

/// Maximum weighted clique of a chordal graph via the perfect elimination
/// ordering: each vertex plus its prefix neighbors is a clique, and some
/// position realizes the maximum. O(n + m) after the ordering.
pub fn max_clique_chordal(wg: &WeightedGraph) -> CliqueOutcome {
    let g = wg.graph();
    let result = perfect_elimination_ordering(g).expect("no preconditions to violate");
    let o = match result {
        EliminationResult::Certificate { certificate, .. } => {
            return CliqueOutcome::Certificate(CliqueCertificate::Elimination {
                certificate,
                family: PatternFamily::S2,
            });
        }
        EliminationResult::Ordering { ordering, .. } => ordering,
    };
    let mut best = Best::new();
    for i in 0..g.n() {
        let v = o.vertex_at(i);
        let mut cand: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        cand.push(v);
        let weight = wg.set_weight_sum(&cand);
        best.offer(cand, weight);
    }
    let result = best.take();
    if g.n() > 0 && result.clique.is_empty() {
        unreachable!("every position offers a nonempty candidate");
    }
    CliqueOutcome::Clique(result)
}

/// Maximum weighted clique for 4-hole-free odd-signable inputs, O(nm):
/// verify that the LexBFS ordering eliminates holes (each prefix
/// neighborhood chordal) while solving each chordal prefix neighborhood
/// exactly. Robust: any input yields either a correct maximum clique or a
/// hole certificate.
pub fn max_clique_ehf(wg: &WeightedGraph) -> CliqueOutcome {
    let g = wg.graph();
    let n = g.n();
    if n == 0 {
        return CliqueOutcome::Clique(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        });
    }
    let o = lexbfs(g, 0).expect("vertex 0 exists");
    let mut best = Best::new();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        let (sub, map) = wg.induced(&prefix).expect("prefix ids are valid");
        if let Some(hole) = find_hole(sub.graph()) {
            let mut witness: Vec<u32> = hole.into_iter().map(|x| map[x as usize]).collect();
            witness.sort_unstable();
            return CliqueOutcome::Certificate(CliqueCertificate::Elimination {
                certificate: EliminationCertificate {
                    position: i + 1,
                    vertex: v,
                    witness,
                },
                family: PatternFamily::Holes,
            });
        }
        let inner = max_clique_chordal(&sub)
            .into_clique()
            .expect("prefix neighborhood verified chordal");
        let mut cand: Vec<u32> = inner.clique.into_iter().map(|x| map[x as usize]).collect();
        cand.push(v);
        best.offer(cand, inner.weight + wg.weight(v));
    }
    CliqueOutcome::Clique(best.take())
}

/// Clique through neighborhoods: every open neighborhood of a
/// universal-wheel-free graph is chordal, so solve each one and add the
/// center. O(nm). A non-chordal neighborhood certifies a universal wheel.
pub fn max_clique_c2(wg: &WeightedGraph) -> CliqueOutcome {
    let g = wg.graph();
    let mut best = Best::new();
    for v in g.vertices() {
        let (sub, map) = wg.induced(g.neighbors(v)).expect("neighbor ids are valid");
        if let Some(hole) = find_hole(sub.graph()) {
            let hole: Vec<u32> = hole.into_iter().map(|x| map[x as usize]).collect();
            return CliqueOutcome::Certificate(CliqueCertificate::NeighborhoodNotChordal {
                vertex: v,
                hole,
            });
        }
        let inner = max_clique_chordal(&sub)
            .into_clique()
            .expect("neighborhood verified chordal");
        let mut cand: Vec<u32> = inner.clique.into_iter().map(|x| map[x as usize]).collect();
        cand.push(v);
        best.offer(cand, inner.weight + wg.weight(v));
    }
    CliqueOutcome::Clique(best.take())
}

/// Components of the complement of `g`, without materializing the
/// complement: BFS moving non-neighbors out of an unvisited pool.
fn complement_components(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut next = vec![0u32; n + 1];
    let mut prev = vec![0u32; n + 1];
    // Sentinel list over 0..n with head at index n.
    for i in 0..=n {
        next[i] = ((i + 1) % (n + 1)) as u32;
        prev[(i + 1) % (n + 1)] = i as u32;
    }
    let sentinel = n as u32;
    let remove = |next: &mut Vec<u32>, prev: &mut Vec<u32>, v: u32| {
        let (p, nx) = (prev[v as usize], next[v as usize]);
        next[p as usize] = nx;
        prev[nx as usize] = p;
    };
    let mut parts = Vec::new();
    let mut queue = Vec::new();
    while next[sentinel as usize] != sentinel {
        let start = next[sentinel as usize];
        remove(&mut next, &mut prev, start);
        queue.clear();
        queue.push(start);
        let mut part = vec![start];
        while let Some(u) = queue.pop() {
            let mut v = next[sentinel as usize];
            while v != sentinel {
                let nx = next[v as usize];
                if !g.has_edge(u, v) {
                    remove(&mut next, &mut prev, v);
                    part.push(v);
                    queue.push(v);
                }
                v = nx;
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// Clique via a complete-multipartite prefix structure: each position's
/// prefix neighborhood splits into complement components (the parts), and a
/// maximum clique there takes the heaviest vertex of each part. O(nm).
///
/// With `verify`, the ordering is checked against the family first and each
/// part is checked to be stable; violations return certificates. Without it
/// the result is always a clique, but maximality is only guaranteed for
/// class members.
pub fn max_clique_c3(wg: &WeightedGraph, verify: bool) -> CliqueOutcome {
    let g = wg.graph();
    let n = g.n();
    if n == 0 {
        return CliqueOutcome::Clique(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        });
    }
    let o = lexbfs(g, 0).expect("vertex 0 exists");
    if verify {
        match is_elimination_ordering(g, &o, &PatternFamily::P3bar).expect("lengths match") {
            EliminationCheck::Valid => {}
            EliminationCheck::Violation(certificate) => {
                return CliqueOutcome::Certificate(CliqueCertificate::Elimination {
                    certificate,
                    family: PatternFamily::P3bar,
                });
            }
        }
    }
    let mut best = Best::new();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        let (sub, map) = wg.induced(&prefix).expect("prefix ids are valid");
        let parts = complement_components(sub.graph());
        if verify {
            for part in &parts {
                if !sub.graph().is_stable(part) {
                    let witness = find_family_copy(sub.graph(), &PatternFamily::P3bar)
                        .expect("finite family")
                        .expect("a non-stable part implies a P3bar copy");
                    return CliqueOutcome::Certificate(
                        CliqueCertificate::NotCompleteMultipartite {
                            position: i + 1,
                            vertex: v,
                            witness: witness.into_iter().map(|x| map[x as usize]).collect(),
                        },
                    );
                }
            }
        }
        let mut cand = vec![v];
        let mut weight = wg.weight(v);
        for part in &parts {
            let pick = *part
                .iter()
                .max_by_key(|&&x| (sub.weight(x), std::cmp::Reverse(x)))
                .expect("parts are nonempty");
            cand.push(map[pick as usize]);
            weight += sub.weight(pick);
        }
        best.offer(cand, weight);
    }
    CliqueOutcome::Clique(best.take())
}

/// Clique via prefix neighborhoods that split into at most two cliques,
/// identified by the single labeling pass of the X/Y scheme. O(n + m) with
/// the adjacency matrix. Not robust: off-class inputs may get a
/// non-maximum clique, unless the labeling itself breaks (NotTwoCliques).
pub fn max_clique_c4(wg: &WeightedGraph, verify: bool) -> CliqueOutcome {
    let g = wg.graph();
    let n = g.n();
    if n == 0 {
        return CliqueOutcome::Clique(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        });
    }
    let o = lexbfs(g, 0).expect("vertex 0 exists");
    if verify {
        match is_elimination_ordering(g, &o, &PatternFamily::S3P3).expect("lengths match") {
            EliminationCheck::Valid => {}
            EliminationCheck::Violation(certificate) => {
                return CliqueOutcome::Certificate(CliqueCertificate::Elimination {
                    certificate,
                    family: PatternFamily::S3P3,
                });
            }
        }
    }
    let mut best = Best::new();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        if prefix.is_empty() {
            best.offer(vec![v], wg.weight(v));
            continue;
        }
        let x = prefix[0];
        let mut x_side = vec![x];
        let mut x_weight = wg.weight(x);
        let mut y: Option<u32> = None;
        let mut y_side = Vec::new();
        let mut y_weight = 0;
        let mut offender = None;
        for &w in &prefix[1..] {
            if g.has_edge(w, x) {
                x_side.push(w);
                x_weight += wg.weight(w);
            } else if let Some(yv) = y {
                if g.has_edge(w, yv) {
                    y_side.push(w);
                    y_weight += wg.weight(w);
                } else {
                    offender = Some(w);
                    break;
                }
            } else {
                y = Some(w);
                y_side.push(w);
                y_weight += wg.weight(w);
            }
        }
        if let Some(w) = offender {
            return CliqueOutcome::Certificate(CliqueCertificate::NotTwoCliques {
                position: i + 1,
                vertex: v,
                offender: w,
            });
        }
        let vw = wg.weight(v);
        for (side, weight) in [(x_side, x_weight), (y_side, y_weight)] {
            let mut cand = side;
            cand.push(v);
            best.offer(cand, weight + vw);
        }
    }
    CliqueOutcome::Clique(best.take())
}

/// Clique via prefix neighborhoods that are cliques or stable sets: take
/// everything, or the heaviest neighbor. The mode is decided by the first
/// pair; the scan cheaply reports mixed structure as NotCliqueOrStable.
/// O(n + m) with the adjacency matrix.
pub fn max_clique_c6(wg: &WeightedGraph, verify: bool) -> CliqueOutcome {
    let g = wg.graph();
    let n = g.n();
    if n == 0 {
        return CliqueOutcome::Clique(CliqueResult {
            clique: Vec::new(),
            weight: 0,
        });
    }
    let o = lexbfs(g, 0).expect("vertex 0 exists");
    if verify {
        match is_elimination_ordering(g, &o, &PatternFamily::P3P3bar).expect("lengths match") {
            EliminationCheck::Valid => {}
            EliminationCheck::Violation(certificate) => {
                return CliqueOutcome::Certificate(CliqueCertificate::Elimination {
                    certificate,
                    family: PatternFamily::P3P3bar,
                });
            }
        }
    }
    let mut best = Best::new();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        match prefix.len() {
            0 => best.offer(vec![v], wg.weight(v)),
            1 => best.offer(vec![prefix[0], v], wg.weight(prefix[0]) + wg.weight(v)),
            _ => {
                let clique_mode = g.has_edge(prefix[0], prefix[1]);
                // One linear pass against the anchor catches mixed
                // structure; `verify` upgrades to the full pairwise check.
                let anchor = prefix[0];
                for &w in &prefix[2..] {
                    if g.has_edge(w, anchor) != clique_mode {
                        let mut witness = vec![prefix[0], prefix[1], w];
                        witness.sort_unstable();
                        return CliqueOutcome::Certificate(
                            CliqueCertificate::NotCliqueOrStable {
                                position: i + 1,
                                vertex: v,
                                witness,
                            },
                        );
                    }
                }
                if verify {
                    if let Some(witness) = mixed_pair_witness(g, &prefix, clique_mode) {
                        return CliqueOutcome::Certificate(
                            CliqueCertificate::NotCliqueOrStable {
                                position: i + 1,
                                vertex: v,
                                witness,
                            },
                        );
                    }
                }
                if clique_mode {
                    let mut cand = prefix.clone();
                    cand.push(v);
                    let weight = wg.set_weight_sum(&cand);
                    best.offer(cand, weight);
                } else {
                    let pick = *prefix
                        .iter()
                        .max_by_key(|&&x| (wg.weight(x), std::cmp::Reverse(x)))
                        .expect("prefix is nonempty");
                    best.offer(vec![pick, v], wg.weight(pick) + wg.weight(v));
                }
            }
        }
    }
    CliqueOutcome::Clique(best.take())
}

/// Full pairwise validation for c6's verify mode: returns a small vertex
/// set carrying both an edge and a non-edge when the prefix neighborhood is
/// neither a clique nor a stable set.
fn mixed_pair_witness(g: &Graph, prefix: &[u32], clique_mode: bool) -> Option<Vec<u32>> {
    for (i, &a) in prefix.iter().enumerate() {
        for &b in &prefix[i + 1..] {
            if g.has_edge(a, b) != clique_mode {
                let mut witness = vec![prefix[0], prefix[1], a, b];
                witness.sort_unstable();
                witness.dedup();
                return Some(witness);
            }
        }
    }
    None
}
