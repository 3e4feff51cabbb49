//! Verifying and computing F-elimination orderings: orderings in which every
//! vertex's neighborhood inside the preceding prefix is family-free.

use crate::configurations::ClassId;
use crate::decomposability::{find_family_copy_with_cap, is_family_member_set, PatternFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lexbfs::{lexbfs, VertexOrdering};
use crate::DEFAULT_BRUTE_CAP;

/// A failed elimination check: at `position` (1-based), the witness set
/// inside the prefix neighborhood of `vertex` induces a family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationCertificate {
    pub position: usize,
    pub vertex: u32,
    pub witness: Vec<u32>,
}

impl EliminationCertificate {
    /// Soundness check: the witness really lies inside the prefix
    /// neighborhood at the claimed position and induces a family member.
    pub fn verify(&self, g: &Graph, o: &VertexOrdering, fam: &PatternFamily) -> bool {
        if self.position == 0 || self.position > o.len() || o.len() != g.n() {
            return false;
        }
        let i = self.position - 1;
        if o.vertex_at(i) != self.vertex {
            return false;
        }
        let in_prefix_nbhd = |w: u32| o.pos(w) < i && g.has_edge(self.vertex, w);
        self.witness.iter().all(|&w| in_prefix_nbhd(w))
            && is_family_member_set(g, &self.witness, fam)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EliminationCheck {
    Valid,
    Violation(EliminationCertificate),
}

impl EliminationCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, EliminationCheck::Valid)
    }
}

/// Checks every position's prefix neighborhood for family-freeness and
/// reports the first violation (smallest position). For the `Holes` family
/// the per-position check is chordal recognition of the prefix
/// neighborhood, O(nm) in total.
pub fn is_elimination_ordering(
    g: &Graph,
    o: &VertexOrdering,
    fam: &PatternFamily,
) -> Result<EliminationCheck> {
    let n = g.n();
    if o.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering length {} does not match n = {}",
            o.len(),
            n
        )));
    }
    for i in 0..n {
        let v = o.vertex_at(i);
        let prefix_nbrs: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .collect();
        if prefix_nbrs.len() < 2 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&prefix_nbrs)?;
        if let Some(copy) = find_family_copy_with_cap(&sub, fam, DEFAULT_BRUTE_CAP)? {
            return Ok(EliminationCheck::Violation(EliminationCertificate {
                position: i + 1,
                vertex: v,
                witness: copy.into_iter().map(|x| map[x as usize]).collect(),
            }));
        }
    }
    Ok(EliminationCheck::Valid)
}

/// The Table-1 family associated with a class, when one exists. The
/// even-hole-free surrogate maps to `Holes`; wheel-free graphs sit inside
/// the 3-wheel-free class and reuse `{P3}`. The signability classes have no
/// associated elimination family.
pub fn elimination_family(c: ClassId) -> Option<PatternFamily> {
    match c {
        ClassId::C1 => Some(PatternFamily::S3),
        ClassId::C2 | ClassId::WheelFree => Some(PatternFamily::P3),
        ClassId::C3 => Some(PatternFamily::P3bar),
        ClassId::C4 => Some(PatternFamily::S3P3),
        ClassId::C5 => Some(PatternFamily::S3P3bar),
        ClassId::C6 => Some(PatternFamily::P3P3bar),
        ClassId::C7 | ClassId::UniversallySignable => Some(PatternFamily::S3P3P3bar),
        ClassId::C8 | ClassId::Chordal => Some(PatternFamily::S2),
        ClassId::EvenHoleFree => Some(PatternFamily::Holes),
        ClassId::OddSignable | ClassId::EvenSignable => None,
    }
}

/// Outcome of an elimination-ordering computation: the verified ordering, or
/// a certificate that (by the contrapositive of the class theorem) the input
/// lies outside the class. Success never claims class membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EliminationResult {
    Ordering {
        ordering: VertexOrdering,
        family: PatternFamily,
    },
    Certificate {
        /// The LexBFS ordering that failed verification.
        ordering: VertexOrdering,
        certificate: EliminationCertificate,
        family: PatternFamily,
    },
}

impl EliminationResult {
    /// The verified elimination ordering, when the check passed.
    pub fn ordering(&self) -> Option<&VertexOrdering> {
        match self {
            EliminationResult::Ordering { ordering, .. } => Some(ordering),
            EliminationResult::Certificate { .. } => None,
        }
    }

    /// The LexBFS ordering regardless of outcome.
    pub fn lexbfs_ordering(&self) -> &VertexOrdering {
        match self {
            EliminationResult::Ordering { ordering, .. }
            | EliminationResult::Certificate { ordering, .. } => ordering,
        }
    }

    pub fn is_ordering(&self) -> bool {
        matches!(self, EliminationResult::Ordering { .. })
    }
}

/// Runs LexBFS from vertex 0 and verifies the result against the family.
pub fn elimination_ordering_for_family(
    g: &Graph,
    fam: &PatternFamily,
) -> Result<EliminationResult> {
    let o = if g.n() == 0 {
        VertexOrdering::new(Vec::new())?
    } else {
        lexbfs(g, 0)?
    };
    match is_elimination_ordering(g, &o, fam)? {
        EliminationCheck::Valid => Ok(EliminationResult::Ordering {
            ordering: o,
            family: fam.clone(),
        }),
        EliminationCheck::Violation(certificate) => Ok(EliminationResult::Certificate {
            ordering: o,
            certificate,
            family: fam.clone(),
        }),
    }
}

/// Class-level entry point: verifies the LexBFS ordering against the class's
/// family. A certificate proves non-membership; a returned ordering proves
/// only that this ordering eliminates the family.
pub fn elimination_ordering(g: &Graph, c: ClassId) -> Result<EliminationResult> {
    let fam = elimination_family(c).ok_or_else(|| {
        Error::InvalidParameter(format!("class {c} has no associated elimination family"))
    })?;
    elimination_ordering_for_family(g, &fam)
}

/// `{S2}` specialization with a linear-time verification pass: each prefix
/// neighborhood must be a clique, checked through the latest earlier
/// neighbor (the parent) rather than by pairwise enumeration.
pub fn perfect_elimination_ordering(g: &Graph) -> Result<EliminationResult> {
    let o = if g.n() == 0 {
        VertexOrdering::new(Vec::new())?
    } else {
        lexbfs(g, 0)?
    };
    match check_prefix_cliques(g, &o) {
        None => Ok(EliminationResult::Ordering {
            ordering: o,
            family: PatternFamily::S2,
        }),
        Some(certificate) => Ok(EliminationResult::Certificate {
            ordering: o,
            certificate,
            family: PatternFamily::S2,
        }),
    }
}

/// Linear scan for the earliest prefix neighborhood that is not a clique.
/// Violations always show up against the parent, and the earliest
/// parent-violation position equals the earliest non-clique position.
fn check_prefix_cliques(g: &Graph, o: &VertexOrdering) -> Option<EliminationCertificate> {
    let n = g.n();
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n {
        let v = o.vertex_at(i);
        let parent = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| o.pos(u) < i)
            .max_by_key(|&u| o.pos(u));
        if let Some(p) = parent {
            children[p as usize].push(v);
        }
    }
    let mut best: Option<EliminationCertificate> = None;
    let mut marked = vec![u32::MAX; n];
    for p in g.vertices() {
        if children[p as usize].is_empty() {
            continue;
        }
        for &u in g.neighbors(p) {
            marked[u as usize] = p;
        }
        for &child in &children[p as usize] {
            let i = o.pos(child);
            let missing = g
                .neighbors(child)
                .iter()
                .copied()
                .filter(|&u| u != p && o.pos(u) < i && marked[u as usize] != p)
                .min();
            if let Some(u) = missing {
                let mut witness = vec![u, p];
                witness.sort_unstable();
                let cand = EliminationCertificate {
                    position: i + 1,
                    vertex: child,
                    witness,
                };
                let better = match &best {
                    None => true,
                    Some(b) => (cand.position, &cand.witness) < (b.position, &b.witness),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    best
}
