//! Pattern families, the local decomposability check (for every vertex v,
//! every family copy inside N(v) and every component C of G - N[v], some
//! copy vertex with a non-neighbor in the copy has no neighbor in C), and
//! the neighborhood-structure predicates equivalent to family-freeness.

use std::collections::BTreeSet;

use crate::configurations::{enumerate_holes, find_hole};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::DEFAULT_BRUTE_CAP;

/// A family of forbidden neighborhood patterns. The named variants are the
/// non-complete graphs on two or three vertices and their unions; `Holes`
/// and `LongHoles` are the infinite families handled by dedicated searches;
/// `Patterns` holds explicit pattern graphs on at most four vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternFamily {
    S2,
    S3,
    P3,
    P3bar,
    S3P3,
    S3P3bar,
    P3P3bar,
    S3P3P3bar,
    Holes,
    LongHoles,
    Patterns(Vec<Graph>),
}

impl PatternFamily {
    pub fn name(&self) -> &'static str {
        match self {
            PatternFamily::S2 => "{S2}",
            PatternFamily::S3 => "{S3}",
            PatternFamily::P3 => "{P3}",
            PatternFamily::P3bar => "{P3bar}",
            PatternFamily::S3P3 => "{S3,P3}",
            PatternFamily::S3P3bar => "{S3,P3bar}",
            PatternFamily::P3P3bar => "{P3,P3bar}",
            PatternFamily::S3P3P3bar => "{S3,P3,P3bar}",
            PatternFamily::Holes => "Holes",
            PatternFamily::LongHoles => "LongHoles",
            PatternFamily::Patterns(_) => "custom",
        }
    }

    /// Edge counts accepted for a 3-vertex subset, for the named families.
    fn triple_edge_counts(&self) -> &'static [usize] {
        match self {
            PatternFamily::S3 => &[0],
            PatternFamily::P3 => &[2],
            PatternFamily::P3bar => &[1],
            PatternFamily::S3P3 => &[0, 2],
            PatternFamily::S3P3bar => &[0, 1],
            PatternFamily::P3P3bar => &[1, 2],
            PatternFamily::S3P3P3bar => &[0, 1, 2],
            _ => &[],
        }
    }

    fn is_triple_family(&self) -> bool {
        !self.triple_edge_counts().is_empty()
    }
}

impl std::fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn count_edges_among(g: &Graph, s: &[u32]) -> usize {
    let mut m = 0;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) {
                m += 1;
            }
        }
    }
    m
}

/// True iff `g[subset]` is isomorphic to `pattern` (both tiny).
fn induced_matches(g: &Graph, subset: &[u32], pattern: &Graph) -> bool {
    let k = subset.len();
    if k != pattern.n() || count_edges_among(g, subset) != pattern.m() {
        return false;
    }
    if k <= 3 {
        // Graphs on at most three vertices are determined by their size.
        return true;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                g.has_edge(subset[p[i]], subset[p[j]]) == pattern.has_edge(i as u32, j as u32)
            })
        })
    })
}

fn permutations(
    perm: &mut Vec<usize>,
    at: usize,
    check: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if at == perm.len() {
        return check(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permutations(perm, at + 1, check) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// All induced copies of family members in `g`, as sorted vertex sets in
/// lexicographic subset order.
pub fn family_copies(g: &Graph, fam: &PatternFamily) -> Result<Vec<Vec<u32>>> {
    family_copies_with_cap(g, fam, DEFAULT_BRUTE_CAP)
}

pub fn family_copies_with_cap(
    g: &Graph,
    fam: &PatternFamily,
    cap: usize,
) -> Result<Vec<Vec<u32>>> {
    let n = g.n() as u32;
    let mut out: Vec<Vec<u32>> = Vec::new();
    match fam {
        PatternFamily::S2 => {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        out.push(vec![u, v]);
                    }
                }
            }
        }
        f if f.is_triple_family() => {
            let accept = f.triple_edge_counts();
            for u in 0..n {
                for v in u + 1..n {
                    for w in v + 1..n {
                        let m = g.has_edge(u, v) as usize
                            + g.has_edge(u, w) as usize
                            + g.has_edge(v, w) as usize;
                        if accept.contains(&m) {
                            out.push(vec![u, v, w]);
                        }
                    }
                }
            }
        }
        PatternFamily::Holes | PatternFamily::LongHoles => {
            if g.n() > cap {
                return Err(Error::TooLarge { n: g.n(), cap });
            }
            let long_only = matches!(fam, PatternFamily::LongHoles);
            let mut holes: Vec<Vec<u32>> = enumerate_holes(g)
                .into_iter()
                .filter(|h| !long_only || h.len() >= 5)
                .map(|mut h| {
                    h.sort_unstable();
                    h
                })
                .collect();
            holes.sort();
            holes.dedup();
            out = holes;
        }
        PatternFamily::Patterns(patterns) => {
            for p in patterns {
                if p.n() > 4 {
                    return Err(Error::InvalidParameter(
                        "explicit patterns are limited to four vertices".into(),
                    ));
                }
            }
            let sizes: BTreeSet<usize> = patterns.iter().map(Graph::n).collect();
            let max_size = sizes.iter().max().copied().unwrap_or(0);
            let mut current = Vec::new();
            enumerate_subsets(g, max_size, &mut current, 0, &mut |s| {
                if sizes.contains(&s.len()) && patterns.iter().any(|p| induced_matches(g, s, p)) {
                    out.push(s.to_vec());
                }
            });
        }
        _ => unreachable!("named families are covered above"),
    }
    Ok(out)
}

fn enumerate_subsets(
    g: &Graph,
    max_size: usize,
    current: &mut Vec<u32>,
    next: u32,
    visit: &mut impl FnMut(&[u32]),
) {
    if !current.is_empty() {
        visit(current);
    }
    if current.len() == max_size {
        return;
    }
    for v in next..g.n() as u32 {
        current.push(v);
        enumerate_subsets(g, max_size, current, v + 1, visit);
        current.pop();
    }
}

/// First induced family copy, or `None` when `g` is family-free.
///
/// `Holes` uses chordal recognition and is unbounded; `LongHoles` and
/// explicit patterns respect the brute-force cap.
pub fn find_family_copy(g: &Graph, fam: &PatternFamily) -> Result<Option<Vec<u32>>> {
    find_family_copy_with_cap(g, fam, DEFAULT_BRUTE_CAP)
}

pub fn find_family_copy_with_cap(
    g: &Graph,
    fam: &PatternFamily,
    cap: usize,
) -> Result<Option<Vec<u32>>> {
    let n = g.n() as u32;
    match fam {
        PatternFamily::S2 => {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        return Ok(Some(vec![u, v]));
                    }
                }
            }
            Ok(None)
        }
        f if f.is_triple_family() => {
            let accept = f.triple_edge_counts();
            for u in 0..n {
                for v in u + 1..n {
                    for w in v + 1..n {
                        let m = g.has_edge(u, v) as usize
                            + g.has_edge(u, w) as usize
                            + g.has_edge(v, w) as usize;
                        if accept.contains(&m) {
                            return Ok(Some(vec![u, v, w]));
                        }
                    }
                }
            }
            Ok(None)
        }
        PatternFamily::Holes => Ok(find_hole(g).map(|mut h| {
            h.sort_unstable();
            h
        })),
        PatternFamily::LongHoles => {
            if g.n() > cap {
                return Err(Error::TooLarge { n: g.n(), cap });
            }
            Ok(enumerate_holes(g)
                .into_iter()
                .find(|h| h.len() >= 5)
                .map(|mut h| {
                    h.sort_unstable();
                    h
                }))
        }
        PatternFamily::Patterns(_) => {
            let copies = family_copies_with_cap(g, fam, cap)?;
            Ok(copies.into_iter().next())
        }
        _ => unreachable!(),
    }
}

/// True iff `g` contains no induced copy of any family member.
pub fn is_family_free(g: &Graph, fam: &PatternFamily) -> Result<bool> {
    Ok(find_family_copy(g, fam)?.is_none())
}

/// True iff the set itself induces a family member (used to verify
/// certificates).
pub(crate) fn is_family_member_set(g: &Graph, set: &[u32], fam: &PatternFamily) -> bool {
    match fam {
        PatternFamily::S2 => set.len() == 2 && !g.has_edge(set[0], set[1]),
        f if f.is_triple_family() => {
            set.len() == 3 && f.triple_edge_counts().contains(&count_edges_among(g, set))
        }
        PatternFamily::Holes => crate::configurations::is_hole_set(g, set),
        PatternFamily::LongHoles => set.len() >= 5 && crate::configurations::is_hole_set(g, set),
        PatternFamily::Patterns(patterns) => {
            patterns.iter().any(|p| induced_matches(g, set, p))
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Neighborhood structure
// ---------------------------------------------------------------------------

/// The eight structural descriptions of a neighborhood, each equivalent to
/// freeness from the corresponding pattern family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum NeighborhoodClass {
    /// No stable set of size 3 ({S3}-free).
    NoStableTriple,
    /// Disjoint union of cliques ({P3}-free).
    DisjointCliques,
    /// Complete multipartite ({P3bar}-free).
    CompleteMultipartite,
    /// Disjoint union of at most two cliques ({S3,P3}-free).
    AtMostTwoCliques,
    /// Complete multipartite with parts of size at most 2 ({S3,P3bar}-free).
    MultipartiteSmallParts,
    /// A clique or a stable set ({P3,P3bar}-free).
    CliqueOrStable,
    /// A clique or a single nonadjacent pair ({S3,P3,P3bar}-free).
    CliqueOrPair,
    /// A clique ({S2}-free).
    Clique,
}

impl NeighborhoodClass {
    pub const ALL: [NeighborhoodClass; 8] = [
        NeighborhoodClass::NoStableTriple,
        NeighborhoodClass::DisjointCliques,
        NeighborhoodClass::CompleteMultipartite,
        NeighborhoodClass::AtMostTwoCliques,
        NeighborhoodClass::MultipartiteSmallParts,
        NeighborhoodClass::CliqueOrStable,
        NeighborhoodClass::CliqueOrPair,
        NeighborhoodClass::Clique,
    ];

    /// The pattern family whose exclusion this description is equivalent to.
    pub fn family(self) -> PatternFamily {
        match self {
            NeighborhoodClass::NoStableTriple => PatternFamily::S3,
            NeighborhoodClass::DisjointCliques => PatternFamily::P3,
            NeighborhoodClass::CompleteMultipartite => PatternFamily::P3bar,
            NeighborhoodClass::AtMostTwoCliques => PatternFamily::S3P3,
            NeighborhoodClass::MultipartiteSmallParts => PatternFamily::S3P3bar,
            NeighborhoodClass::CliqueOrStable => PatternFamily::P3P3bar,
            NeighborhoodClass::CliqueOrPair => PatternFamily::S3P3P3bar,
            NeighborhoodClass::Clique => PatternFamily::S2,
        }
    }
}

/// Evaluates every structural description on the standalone graph `h`.
pub fn structure_of(h: &Graph) -> BTreeSet<NeighborhoodClass> {
    let mut out = BTreeSet::new();
    let comps = h.components();
    let disjoint_cliques = comps.iter().all(|b| h.is_clique(b));
    let clique = comps.len() <= 1 && disjoint_cliques;
    let stable = h.m() == 0;
    let compl = h.complement();
    let parts = compl.components();
    let multipartite = parts.iter().all(|p| h.is_stable(p));

    let mut no_stable_triple = true;
    let n = h.n() as u32;
    'outer: for u in 0..n {
        for v in u + 1..n {
            if h.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if !h.has_edge(u, w) && !h.has_edge(v, w) {
                    no_stable_triple = false;
                    break 'outer;
                }
            }
        }
    }

    if no_stable_triple {
        out.insert(NeighborhoodClass::NoStableTriple);
    }
    if disjoint_cliques {
        out.insert(NeighborhoodClass::DisjointCliques);
        if comps.len() <= 2 {
            out.insert(NeighborhoodClass::AtMostTwoCliques);
        }
    }
    if multipartite {
        out.insert(NeighborhoodClass::CompleteMultipartite);
        if parts.iter().all(|p| p.len() <= 2) {
            out.insert(NeighborhoodClass::MultipartiteSmallParts);
        }
    }
    if clique || stable {
        out.insert(NeighborhoodClass::CliqueOrStable);
    }
    if clique || (h.n() == 2 && h.m() == 0) {
        out.insert(NeighborhoodClass::CliqueOrPair);
    }
    if clique {
        out.insert(NeighborhoodClass::Clique);
    }
    out
}

/// Evaluates all eight descriptions on `G[N(v)]`.
pub fn neighborhood_structure(g: &Graph, v: u32) -> Result<BTreeSet<NeighborhoodClass>> {
    if v as usize >= g.n() {
        return Err(Error::InvalidVertex {
            vertex: v,
            n: g.n(),
        });
    }
    let (h, _) = g.induced_subgraph(g.neighbors(v))?;
    Ok(structure_of(&h))
}

// ---------------------------------------------------------------------------
// Local decomposability
// ---------------------------------------------------------------------------

/// A triple (v, F, C) violating local decomposability: every copy vertex
/// with a non-neighbor inside the copy has a neighbor in the component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposabilityCounterexample {
    pub vertex: u32,
    /// Induced family copy inside N(vertex), as a sorted vertex set.
    pub pattern: Vec<u32>,
    /// Component of G - N[vertex].
    pub component: Vec<u32>,
    /// For each pattern vertex that has a non-neighbor in the pattern, one
    /// neighbor of it inside the component.
    pub attachments: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalCheck {
    Decomposable,
    Counterexample(DecomposabilityCounterexample),
}

impl LocalCheck {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, LocalCheck::Decomposable)
    }
}

/// Checks the local decomposability definition directly. The returned
/// counterexample is lexicographically minimal in (v, F, C).
pub fn is_locally_f_decomposable(g: &Graph, fam: &PatternFamily) -> Result<LocalCheck> {
    is_locally_f_decomposable_with_cap(g, fam, DEFAULT_BRUTE_CAP)
}

pub fn is_locally_f_decomposable_with_cap(
    g: &Graph,
    fam: &PatternFamily,
    cap: usize,
) -> Result<LocalCheck> {
    if matches!(fam, PatternFamily::Holes | PatternFamily::LongHoles) && g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    let n = g.n();
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        if nbrs.len() < 2 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(nbrs)?;
        let copies = family_copies_with_cap(&sub, fam, cap)?;
        if copies.is_empty() {
            continue;
        }
        let mut blocked = vec![false; n];
        blocked[v as usize] = true;
        for &x in nbrs {
            blocked[x as usize] = true;
        }
        let comps = components_avoiding(g, &blocked);
        if comps.is_empty() {
            continue;
        }
        for copy in &copies {
            let pattern: Vec<u32> = copy.iter().map(|&i| map[i as usize]).collect();
            let needs_attachment: Vec<u32> = pattern
                .iter()
                .copied()
                .filter(|&y| pattern.iter().any(|&z| z != y && !g.has_edge(y, z)))
                .collect();
            for comp in &comps {
                let mut attachments = Vec::new();
                let mut all_attached = true;
                for &y in &needs_attachment {
                    match comp.iter().copied().find(|&w| g.has_edge(y, w)) {
                        Some(w) => attachments.push((y, w)),
                        None => {
                            all_attached = false;
                            break;
                        }
                    }
                }
                if all_attached {
                    return Ok(LocalCheck::Counterexample(DecomposabilityCounterexample {
                        vertex: v,
                        pattern,
                        component: comp.clone(),
                        attachments,
                    }));
                }
            }
        }
    }
    Ok(LocalCheck::Decomposable)
}

fn components_avoiding(g: &Graph, blocked: &[bool]) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut seen = blocked.to_vec();
    let mut out = Vec::new();
    for s in 0..n as u32 {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
