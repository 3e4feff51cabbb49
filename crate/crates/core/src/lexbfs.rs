//! Lexicographic breadth-first search, the exact characterization of its
//! orderings, and the structural properties of the last visited vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: u32 = u32::MAX;

/// A permutation of the vertices together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<u32>,
    pos: Vec<u32>,
}

impl VertexOrdering {
    /// Validates that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<u32>) -> Result<VertexOrdering> {
        let n = order.len();
        let mut pos = vec![NONE; n];
        for (i, &v) in order.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {v} out of range for length {n}"
                )));
            }
            if pos[v as usize] != NONE {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            pos[v as usize] = i as u32;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Position of vertex `v` in the ordering.
    pub fn pos(&self, v: u32) -> usize {
        self.pos[v as usize] as usize
    }

    /// The `i`-th visited vertex.
    pub fn vertex_at(&self, i: usize) -> u32 {
        self.order[i]
    }

    pub fn last(&self) -> Option<u32> {
        self.order.last().copied()
    }

    /// True iff `a` is visited strictly before `b`.
    pub fn precedes(&self, a: u32, b: u32) -> bool {
        self.pos[a as usize] < self.pos[b as usize]
    }
}

#[derive(Clone, Copy)]
struct VertexLinks {
    prev: u32,
    next: u32,
    cell: u32,
}

#[derive(Clone, Copy)]
struct Cell {
    head: u32,
    tail: u32,
    prev: u32,
    next: u32,
    /// Pivot index of the most recent split touching this cell.
    stamp: u32,
    /// Twin created for that split, placed just before this cell.
    twin: u32,
}

const EMPTY_CELL: Cell = Cell {
    head: NONE,
    tail: NONE,
    prev: NONE,
    next: NONE,
    stamp: NONE,
    twin: NONE,
};

/// LexBFS by partition refinement in O(n + m).
///
/// Ties between vertices with equal labels are broken toward the smallest
/// id, which makes the output deterministic. When a component is exhausted
/// the sweep restarts at the smallest unvisited id.
pub fn lexbfs(g: &Graph, start: u32) -> Result<VertexOrdering> {
    let n = g.n();
    if start as usize >= n {
        return Err(Error::InvalidVertex { vertex: start, n });
    }

    // Cells form a doubly linked list of doubly linked vertex lists. Every
    // cell keeps its vertices sorted by id: initial cells are sorted and a
    // split moves neighbors in increasing id order. Emptied cells go to a
    // free list, so at most n + 1 are ever live.
    let mut verts = vec![
        VertexLinks {
            prev: NONE,
            next: NONE,
            cell: NONE,
        };
        n
    ];
    let mut visited = vec![false; n];
    let mut cells: Vec<Cell> = Vec::with_capacity(n + 2);
    let mut free: Vec<u32> = Vec::new();
    let mut first_cell;

    macro_rules! new_cell {
        () => {
            match free.pop() {
                Some(c) => {
                    cells[c as usize] = EMPTY_CELL;
                    c
                }
                None => {
                    cells.push(EMPTY_CELL);
                    (cells.len() - 1) as u32
                }
            }
        };
    }

    // Initial partition: {start}, then everything else in id order.
    let c0 = new_cell!();
    cells[c0 as usize].head = start;
    cells[c0 as usize].tail = start;
    verts[start as usize].cell = c0;
    first_cell = c0;
    if n > 1 {
        let c1 = new_cell!();
        cells[c0 as usize].next = c1;
        cells[c1 as usize].prev = c0;
        let mut last = NONE;
        for v in 0..n as u32 {
            if v == start {
                continue;
            }
            verts[v as usize].cell = c1;
            verts[v as usize].prev = last;
            if last == NONE {
                cells[c1 as usize].head = v;
            } else {
                verts[last as usize].next = v;
            }
            last = v;
        }
        cells[c1 as usize].tail = last;
    }

    let mut order = Vec::with_capacity(n);
    for i in 0..n {
        let u = cells[first_cell as usize].head;
        debug_assert_ne!(u, NONE);
        // Pop the pivot off the front cell.
        let nx = verts[u as usize].next;
        cells[first_cell as usize].head = nx;
        if nx == NONE {
            let fc = cells[first_cell as usize].next;
            if fc != NONE {
                cells[fc as usize].prev = NONE;
            }
            free.push(first_cell);
            first_cell = fc;
        } else {
            verts[nx as usize].prev = NONE;
        }
        visited[u as usize] = true;
        order.push(u);

        for &v in g.neighbors(u) {
            if visited[v as usize] {
                continue;
            }
            let c = verts[v as usize].cell;
            // One twin cell per split cell per pivot, placed just before it.
            let target = if cells[c as usize].stamp == i as u32 {
                cells[c as usize].twin
            } else {
                let t = new_cell!();
                cells[c as usize].stamp = i as u32;
                cells[c as usize].twin = t;
                let pc = cells[c as usize].prev;
                cells[t as usize].prev = pc;
                cells[t as usize].next = c;
                cells[c as usize].prev = t;
                if pc == NONE {
                    first_cell = t;
                } else {
                    cells[pc as usize].next = t;
                }
                t
            };

            // Detach v from c.
            let VertexLinks { prev: pv, next: nv, .. } = verts[v as usize];
            if pv == NONE {
                cells[c as usize].head = nv;
            } else {
                verts[pv as usize].next = nv;
            }
            if nv == NONE {
                cells[c as usize].tail = pv;
            } else {
                verts[nv as usize].prev = pv;
            }
            // Append v to the twin, preserving the sorted invariant.
            let t = cells[target as usize].tail;
            verts[v as usize].prev = t;
            verts[v as usize].next = NONE;
            if t == NONE {
                cells[target as usize].head = v;
            } else {
                verts[t as usize].next = v;
            }
            cells[target as usize].tail = v;
            verts[v as usize].cell = target;

            if cells[c as usize].head == NONE {
                let Cell { prev: pc, next: nc, .. } = cells[c as usize];
                if pc == NONE {
                    first_cell = nc;
                } else {
                    cells[pc as usize].next = nc;
                }
                if nc != NONE {
                    cells[nc as usize].prev = pc;
                }
                free.push(c);
            }
        }
    }

    VertexOrdering::new(order)
}

/// Membership test for LexBFS orderings via the three-vertex
/// characterization: whenever `c < b < a`, `ca` is an edge and `cb` is not,
/// some `d < c` must satisfy `db` edge, `da` non-edge. Runs in O(n^3) with
/// constant-time adjacency and is intended as a verifier, not a search.
pub fn is_lexbfs_ordering(g: &Graph, o: &VertexOrdering) -> Result<bool> {
    let n = g.n();
    if o.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering length {} does not match n = {}",
            o.len(),
            n
        )));
    }
    for ia in 1..n {
        let a = o.vertex_at(ia);
        for ib in 1..ia {
            let b = o.vertex_at(ib);
            let mut found_d = false;
            for w in o.order()[..ib].iter().copied() {
                let wa = g.has_edge(w, a);
                let wb = g.has_edge(w, b);
                if wa && !wb && !found_d {
                    return Ok(false);
                }
                if wb && !wa {
                    found_d = true;
                }
            }
        }
    }
    Ok(true)
}

/// Evidence that one neighbor of the last vertex satisfies the
/// moplex-component property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NeighborEvidence {
    /// N[x] = N[z].
    EqualClosedNeighborhood,
    /// x is adjacent to this vertex of the component.
    AttachedAt(u32),
}

/// Outcome of the last-vertex analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoplexWitness {
    /// The graph is complete; the property is vacuous.
    Complete,
    /// A component `C` of `G - N[z]` such that every neighbor `x` of the
    /// last vertex `z` has `N[x] = N[z]` or a neighbor inside `C`.
    Component {
        component: Vec<u32>,
        /// One entry per neighbor of `z`, in increasing id order.
        evidence: Vec<(u32, NeighborEvidence)>,
    },
}

/// For a LexBFS ordering of a connected graph, produces the component of
/// `G - N[z]` promised for the last vertex `z`, with per-neighbor evidence.
pub fn last_vertex_moplex_witness(g: &Graph, o: &VertexOrdering) -> Result<MoplexWitness> {
    if !is_lexbfs_ordering(g, o)? {
        return Err(Error::NotLexBfs);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(MoplexWitness::Complete);
    }
    let n = g.n();
    let z = o.last().expect("non-complete graphs are nonempty");
    let mut in_closed = vec![false; n];
    in_closed[z as usize] = true;
    for &x in g.neighbors(z) {
        in_closed[x as usize] = true;
    }

    let closed_z = g.closed_neighborhood(z);
    for component in masked_components(g, &in_closed) {
        let mut in_component = vec![false; n];
        for &v in &component {
            in_component[v as usize] = true;
        }
        let mut evidence = Vec::with_capacity(g.degree(z));
        let mut ok = true;
        for &x in g.neighbors(z) {
            if g.closed_neighborhood(x) == closed_z {
                evidence.push((x, NeighborEvidence::EqualClosedNeighborhood));
                continue;
            }
            match g
                .neighbors(x)
                .iter()
                .copied()
                .find(|&w| in_component[w as usize])
            {
                Some(w) => evidence.push((x, NeighborEvidence::AttachedAt(w))),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(MoplexWitness::Component {
                component,
                evidence,
            });
        }
    }
    Err(Error::TheoremViolation(
        "no component of G - N[z] satisfies the last-vertex property",
    ))
}

/// Components of the subgraph induced by vertices with `excluded[v] = false`,
/// reported in original ids, ordered by smallest member.
fn masked_components(g: &Graph, excluded: &[bool]) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut seen = excluded.to_vec();
    let mut blocks = Vec::new();
    let mut queue = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.clear();
        queue.push(s as u32);
        let mut block = vec![s as u32];
        while let Some(u) = queue.pop() {
            for &v in g.neighbors(u) {
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

/// For `c < b < a` with `ca` an edge in a LexBFS ordering, returns a `b`-`c`
/// path whose internal vertices avoid `N[z]`, found by BFS restricted to
/// `(V - N[z]) + {b, c}`. The returned list runs from `b` to `c` inclusive.
pub fn connecting_path(
    g: &Graph,
    o: &VertexOrdering,
    a: u32,
    b: u32,
    c: u32,
) -> Result<Vec<u32>> {
    let n = g.n();
    if o.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering length {} does not match n = {}",
            o.len(),
            n
        )));
    }
    for v in [a, b, c] {
        if v as usize >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
    }
    if !(o.precedes(c, b) && o.precedes(b, a)) {
        return Err(Error::InvalidParameter(
            "expected c before b before a in the ordering".into(),
        ));
    }
    // The edge ca and the LexBFS property are the caller's obligations; a
    // violated precondition surfaces as LemmaViolation when the BFS fails.

    let z = o.last().expect("n >= 3 here");
    let mut blocked = vec![false; n];
    blocked[z as usize] = true;
    for &x in g.neighbors(z) {
        blocked[x as usize] = true;
    }
    blocked[b as usize] = false;
    blocked[c as usize] = false;

    let mut parent = vec![NONE; n];
    let mut queue = std::collections::VecDeque::new();
    parent[b as usize] = b;
    queue.push_back(b);
    while let Some(u) = queue.pop_front() {
        if u == c {
            let mut path = vec![c];
            let mut v = c;
            while v != b {
                v = parent[v as usize];
                path.push(v);
            }
            path.reverse();
            return Ok(path);
        }
        for &v in g.neighbors(u) {
            if !blocked[v as usize] && parent[v as usize] == NONE {
                parent[v as usize] = u;
                queue.push_back(v);
            }
        }
    }
    Err(Error::LemmaViolation(
        "no b-c path avoiding N[z]; the triple violates the lemma preconditions",
    ))
}
