//! Immutable simple undirected graphs with sorted adjacency lists and an
//! optional dense adjacency matrix for O(1) edge tests.

use std::sync::OnceLock;

use crate::error::{EdgeFault, Error, Result};

/// Vertex count above which the dense adjacency matrix is not materialized.
pub const DEFAULT_MATRIX_CAP: usize = 20_000;

/// Row-major bit matrix for constant-time adjacency tests.
#[derive(Clone, Debug)]
struct AdjMatrix {
    stride: usize,
    words: Vec<u64>,
}

impl AdjMatrix {
    fn build(g: &Graph, cap: usize) -> Option<AdjMatrix> {
        let n = g.n();
        if n > cap {
            return None;
        }
        let stride = n.div_ceil(64);
        let mut words = vec![0u64; n * stride];
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                words[u as usize * stride + (v as usize) / 64] |= 1 << (v % 64);
            }
        }
        Some(AdjMatrix { stride, words })
    }

    #[inline]
    fn get(&self, u: u32, v: u32) -> bool {
        let idx = u as usize * self.stride + v as usize / 64;
        self.words[idx] >> (v % 64) & 1 != 0
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lives in one flat sorted array indexed by per-vertex offsets.
/// The dense matrix is built lazily on the first edge test when `n` is at
/// most the configured cap; sharing a `Graph` across threads is safe
/// because construction never mutates it afterwards.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    flat: Vec<u32>,
    matrix_cap: usize,
    matrix: OnceLock<Option<AdjMatrix>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets && self.flat == other.flat
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints. Edge order is irrelevant.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::with_matrix_cap(n, edges, DEFAULT_MATRIX_CAP)
    }

    pub fn with_matrix_cap(n: usize, edges: &[(u32, u32)], matrix_cap: usize) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    fault: EdgeFault::SelfLoop,
                });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        for (u, nbrs) in adj.iter().enumerate() {
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    u: u as u32,
                    v: w[0],
                    fault: EdgeFault::Duplicate,
                });
            }
        }
        Ok(Graph::from_sorted_adjacency(adj, matrix_cap))
    }

    /// Fast path for internal constructions that already guarantee a valid
    /// sorted symmetric adjacency structure.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>, matrix_cap: usize) -> Graph {
        debug_assert!(adj
            .iter()
            .all(|nbrs| nbrs.windows(2).all(|w| w[0] < w[1])));
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0);
        let total = adj.iter().map(Vec::len).sum();
        let mut flat = Vec::with_capacity(total);
        for nbrs in &adj {
            flat.extend_from_slice(nbrs);
            offsets.push(flat.len());
        }
        Graph {
            offsets,
            flat,
            matrix_cap,
            matrix: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.flat.len() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Neighbors of `v` in increasing order.
    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.flat[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n() as u32
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Constant-time once the matrix is built; falls back to binary search
    /// for graphs over the matrix cap.
    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        debug_assert!((u as usize) < self.n() && (v as usize) < self.n());
        match self
            .matrix
            .get_or_init(|| AdjMatrix::build(self, self.matrix_cap))
        {
            Some(mx) => mx.get(u, v),
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|`, together with the map
    /// from new ids back to the original ones. Input order and duplicates in
    /// `s` are normalized away.
    pub fn induced_subgraph(&self, s: &[u32]) -> Result<(Graph, Vec<u32>)> {
        let n = self.n();
        let mut keep: Vec<u32> = s.to_vec();
        for &v in &keep {
            if v as usize >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
        }
        keep.sort_unstable();
        keep.dedup();

        let mut new_id = vec![u32::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v as usize] = i as u32;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|&w| {
                        let w = new_id[w as usize];
                        (w != u32::MAX).then_some(w)
                    })
                    .collect()
            })
            .collect();
        Ok((Graph::from_sorted_adjacency(adj, self.matrix_cap), keep))
    }

    /// Connected components as sorted vertex blocks, ordered by their
    /// smallest contained id.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.clear();
            queue.push(start as u32);
            let mut block = vec![start as u32];
            while let Some(u) = queue.pop() {
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        block.push(v);
                        queue.push(v);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n() * self.n().saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n as u32)
            .map(|u| {
                let mut nbrs = Vec::with_capacity(n - 1 - self.degree(u));
                let mut it = self.neighbors(u).iter().copied().peekable();
                for v in 0..n as u32 {
                    if it.peek() == Some(&v) {
                        it.next();
                    } else if v != u {
                        nbrs.push(v);
                    }
                }
                nbrs
            })
            .collect();
        Graph::from_sorted_adjacency(adj, self.matrix_cap)
    }

    /// True iff every pair in `s` is adjacent. Vacuously true for |s| <= 1.
    pub fn is_clique(&self, s: &[u32]) -> bool {
        s.iter().enumerate().all(|(i, &u)| {
            s[i + 1..]
                .iter()
                .all(|&v| u == v || self.has_edge(u, v))
        })
    }

    /// True iff no pair in `s` is adjacent.
    pub fn is_stable(&self, s: &[u32]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| u == v || !self.has_edge(u, v)))
    }

    /// N[v] as a sorted list.
    pub fn closed_neighborhood(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let mut inserted = false;
        for &w in self.neighbors(v) {
            if !inserted && w > v {
                out.push(v);
                inserted = true;
            }
            out.push(w);
        }
        if !inserted {
            out.push(v);
        }
        out
    }
}

/// A graph with non-negative integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<WeightedGraph> {
        if weights.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} weights supplied for a graph on {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Unit weights on every vertex.
    pub fn unit(graph: Graph) -> WeightedGraph {
        let weights = vec![1; graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: u32) -> u64 {
        self.weights[v as usize]
    }

    pub fn set_weight_sum(&self, s: &[u32]) -> u64 {
        s.iter().map(|&v| self.weights[v as usize]).sum()
    }

    /// Induced weighted subgraph plus the id map back to this graph.
    pub fn induced(&self, s: &[u32]) -> Result<(WeightedGraph, Vec<u32>)> {
        let (graph, map) = self.graph.induced_subgraph(s)?;
        let weights = map.iter().map(|&v| self.weights[v as usize]).collect();
        Ok((WeightedGraph { graph, weights }, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        edges.push((n as u32 - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_path_and_cycle() {
        let p3 = path(3);
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.m(), 2);
        assert_eq!(
            (0..3).map(|v| p3.degree(v)).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );

        let c4 = cycle(4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        assert_eq!(c4.m(), 4);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(Error::InvalidEdge {
                u: 0,
                v: 0,
                fault: EdgeFault::SelfLoop
            })
        );
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidEdge {
                fault: EdgeFault::Duplicate,
                ..
            })
        ));
        assert_eq!(
            Graph::new(2, &[(0, 5)]),
            Err(Error::InvalidVertex { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn degree_sum_is_twice_m() {
        let g = cycle(5);
        assert_eq!(g.vertices().map(|v| g.degree(v)).sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        let (sub, map) = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub, path(4));
        assert_eq!(map, vec![0, 1, 2, 3]);

        let k4 = complete(4);
        let (sub, _) = k4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(sub, complete(3));

        let (sub, map) = c5.induced_subgraph(&[]).unwrap();
        assert_eq!(sub.n(), 0);
        assert!(map.is_empty());

        assert!(c5.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn components_order_and_content() {
        // K3 on {0,1,2} plus K2 on {3,4}
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);

        assert_eq!(cycle(4).components().len(), 1);
        assert_eq!(Graph::new(3, &[]).unwrap().components().len(), 3);
    }

    #[test]
    fn complement_involution_and_c5() {
        let k3 = complete(3);
        assert_eq!(k3.complement().m(), 0);

        let c5 = cycle(5);
        let cc5 = c5.complement();
        assert_eq!(cc5.m(), 5);
        assert!(cc5.vertices().all(|v| cc5.degree(v) == 2));
        assert!(cc5.is_connected());

        let g = Graph::new(6, &[(0, 3), (1, 4), (2, 5), (0, 1)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn clique_and_stable_checks() {
        let k4 = complete(4);
        assert!(k4.is_clique(&[0, 1, 2, 3]));
        let c4 = cycle(4);
        assert!(c4.is_stable(&[0, 2]));
        assert!(!c4.is_clique(&[0, 2]));
        assert!(c4.is_clique(&[]));
        assert!(c4.is_stable(&[]));
        assert!(c4.is_clique(&[1]));
    }

    #[test]
    fn closed_neighborhood_sorted() {
        let g = path(4);
        assert_eq!(g.closed_neighborhood(1), vec![0, 1, 2]);
        assert_eq!(g.closed_neighborhood(0), vec![0, 1]);
        assert_eq!(g.closed_neighborhood(3), vec![2, 3]);
    }

    #[test]
    fn weighted_graph_validation() {
        let g = path(3);
        assert!(WeightedGraph::new(g.clone(), vec![1, 2]).is_err());
        let wg = WeightedGraph::new(g, vec![5, 1, 5]).unwrap();
        assert_eq!(wg.set_weight_sum(&[0, 2]), 10);
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<WeightedGraph>();
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert!(g.components().is_empty());
        assert!(g.is_connected());
        assert!(g.is_complete());
        assert_eq!(g.complement(), g);
    }
}
