//! Greedy coloring, the linear coloring scheme for universally signable
//! graphs, the simplicial-or-degree-2 finder, and maximal clique
//! enumeration for 3-wheel-free graphs.

use std::collections::BTreeSet;

use crate::decomposability::{find_family_copy, PatternFamily};
use crate::elimination::EliminationCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lexbfs::{lexbfs, VertexOrdering};

/// A proper coloring with colors 1..=count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    count: usize,
}

impl Coloring {
    fn new(colors: Vec<u32>) -> Coloring {
        let count = colors.iter().copied().max().unwrap_or(0) as usize;
        Coloring { colors, count }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: u32) -> u32 {
        self.colors[v as usize]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Adjacent vertices carry different colors and every color in
    /// 1..=count is used.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        let mut used = vec![false; self.count + 1];
        for &c in &self.colors {
            if c == 0 || c as usize > self.count {
                return false;
            }
            used[c as usize] = true;
        }
        used[1..].iter().all(|&b| b)
            && g.edges().all(|(u, v)| self.colors[u as usize] != self.colors[v as usize])
    }
}

/// Colors vertices in order; each receives the smallest color absent among
/// its already-colored neighbors.
pub fn greedy_color(g: &Graph, o: &VertexOrdering) -> Result<Coloring> {
    let n = g.n();
    if o.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering length {} does not match n = {}",
            o.len(),
            n
        )));
    }
    let mut colors = vec![0u32; n];
    let mut blocked = vec![usize::MAX; n + 2];
    for i in 0..n {
        let v = o.vertex_at(i);
        for &u in g.neighbors(v) {
            if o.pos(u) < i {
                let c = colors[u as usize] as usize;
                blocked[c] = i;
            }
        }
        let mut c = 1;
        while blocked[c] == i {
            c += 1;
        }
        colors[v as usize] = c as u32;
    }
    Ok(Coloring::new(colors))
}

/// Result of a coloring that may instead certify off-class structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    Coloring(Coloring),
    /// A prefix neighborhood violating the clique-or-pair structure,
    /// witnessed by an {S3, P3, P3bar} member.
    Certificate(EliminationCertificate),
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ColoringOutcome::Coloring(c) => Some(c),
            ColoringOutcome::Certificate(_) => None,
        }
    }
}

/// BFS 2-coloring; `None` when some component is odd.
fn bipartite_coloring(g: &Graph) -> Option<Coloring> {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n as u32 {
        if colors[s as usize] != 0 {
            continue;
        }
        colors[s as usize] = 1;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if colors[v as usize] == 0 {
                    colors[v as usize] = 3 - colors[u as usize];
                    queue.push_back(v);
                } else if colors[v as usize] == colors[u as usize] {
                    return None;
                }
            }
        }
    }
    Some(Coloring::new(colors))
}

/// Coloring for universally signable graphs: a BFS 2-coloring when the
/// graph is bipartite, otherwise greedy along the LexBFS ordering. Each
/// prefix neighborhood is a clique or a nonadjacent pair, so at most
/// max(3, omega) colors appear; a violating neighborhood certifies the
/// graph off-class.
pub fn color_universally_signable(g: &Graph) -> ColoringOutcome {
    if let Some(c) = bipartite_coloring(g) {
        return ColoringOutcome::Coloring(c);
    }
    let o = lexbfs(g, 0).expect("non-bipartite graphs are nonempty");
    let n = g.n();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        if prefix.len() < 3 {
            continue;
        }
        // Three or more earlier neighbors must form a clique.
        if let Some((a, b)) = first_nonadjacent_pair(g, &prefix) {
            let third = prefix
                .iter()
                .copied()
                .find(|&w| w != a && w != b)
                .expect("at least three vertices");
            let mut witness = vec![a, b, third];
            witness.sort_unstable();
            return ColoringOutcome::Certificate(EliminationCertificate {
                position: i + 1,
                vertex: v,
                witness,
            });
        }
    }
    let coloring = greedy_color(g, &o).expect("ordering matches the graph");
    ColoringOutcome::Coloring(coloring)
}

fn first_nonadjacent_pair(g: &Graph, set: &[u32]) -> Option<(u32, u32)> {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Outcome of the last-vertex simplicial/degree-2 analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicialSearch {
    /// The vertex's full neighborhood is a clique.
    Simplicial(u32),
    /// The vertex has exactly two nonadjacent neighbors.
    Degree2(u32),
    /// Neither holds; the witness is an {S3, P3, P3bar} member inside the
    /// neighborhood, certifying the graph off-class.
    NotFound { vertex: u32, witness: Vec<u32> },
}

/// Inspects the last vertex of a LexBFS sweep. For universally signable
/// inputs the answer is always Simplicial or Degree2.
pub fn find_simplicial_or_degree2(g: &Graph) -> Result<SimplicialSearch> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "the graph is empty; no vertex to return".into(),
        ));
    }
    let o = lexbfs(g, 0)?;
    let z = o.last().expect("nonempty");
    let nbrs = g.neighbors(z);
    match first_nonadjacent_pair(g, nbrs) {
        None => Ok(SimplicialSearch::Simplicial(z)),
        Some(_) if nbrs.len() == 2 => Ok(SimplicialSearch::Degree2(z)),
        Some((a, b)) => {
            let third = nbrs
                .iter()
                .copied()
                .find(|&w| w != a && w != b)
                .expect("at least three neighbors");
            let mut witness = vec![a, b, third];
            witness.sort_unstable();
            Ok(SimplicialSearch::NotFound { vertex: z, witness })
        }
    }
}

/// Outcome of maximal clique enumeration for 3-wheel-free graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalCliquesOutcome {
    /// All maximal cliques, sorted lexicographically; at most m of them for
    /// class members.
    Cliques(Vec<Vec<u32>>),
    /// A prefix neighborhood that is not a disjoint union of cliques (a P3
    /// copy), certifying the graph outside the 3-wheel-free class.
    Certificate(EliminationCertificate),
}

impl MaximalCliquesOutcome {
    pub fn cliques(&self) -> Option<&Vec<Vec<u32>>> {
        match self {
            MaximalCliquesOutcome::Cliques(c) => Some(c),
            MaximalCliquesOutcome::Certificate(_) => None,
        }
    }
}

/// Enumerates maximal cliques through a {P3}-elimination ordering: each
/// prefix neighborhood is a disjoint union of cliques, every maximal clique
/// arises as a vertex plus one of its prefix components, and an extension
/// test filters the non-maximal candidates.
pub fn enumerate_maximal_cliques_3wf(g: &Graph) -> MaximalCliquesOutcome {
    let n = g.n();
    if n == 0 {
        return MaximalCliquesOutcome::Cliques(Vec::new());
    }
    let o = lexbfs(g, 0).expect("vertex 0 exists");
    let mut candidates: BTreeSet<Vec<u32>> = BTreeSet::new();
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        if prefix.is_empty() {
            candidates.insert(vec![v]);
            continue;
        }
        let (sub, map) = g.induced_subgraph(&prefix).expect("prefix ids valid");
        let comps = sub.components();
        if comps.iter().any(|c| !sub.is_clique(c)) {
            let witness = find_family_copy(&sub, &PatternFamily::P3)
                .expect("finite family")
                .expect("a non-complete component contains a P3");
            return MaximalCliquesOutcome::Certificate(EliminationCertificate {
                position: i + 1,
                vertex: v,
                witness: witness.into_iter().map(|x| map[x as usize]).collect(),
            });
        }
        for comp in comps {
            let mut cand: Vec<u32> = comp.into_iter().map(|x| map[x as usize]).collect();
            cand.push(v);
            cand.sort_unstable();
            candidates.insert(cand);
        }
    }
    let cliques: Vec<Vec<u32>> = candidates
        .into_iter()
        .filter(|k| is_maximal_clique(g, k))
        .collect();
    MaximalCliquesOutcome::Cliques(cliques)
}

fn is_maximal_clique(g: &Graph, k: &[u32]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in k {
        member[v as usize] = true;
    }
    !g.vertices()
        .any(|w| !member[w as usize] && k.iter().all(|&v| g.has_edge(w, v)))
}
