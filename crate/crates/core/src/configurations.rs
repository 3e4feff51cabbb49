//! Structural recognition of Truemper configurations (theta, prism, pyramid,
//! wheel) and their subtypes, brute-force containment search, and membership
//! predicates for the graph classes defined by excluding them.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lexbfs::lexbfs;
use crate::DEFAULT_BRUTE_CAP;

/// Configuration kinds a graph (as a whole) can realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigKind {
    Hole,
    FourHole,
    LongHole,
    EvenHole,
    Theta,
    SquareTheta,
    Prism,
    Pyramid,
    Wheel,
    OneWheel,
    TwoWheel,
    ThreeWheel,
    UniversalWheel,
    EvenWheel,
    OddWheel,
    DHole,
    Cap,
    Diamond,
    Claw,
    S2,
    S3,
    P3,
    P3bar,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 23] = [
        ConfigKind::Hole,
        ConfigKind::FourHole,
        ConfigKind::LongHole,
        ConfigKind::EvenHole,
        ConfigKind::Theta,
        ConfigKind::SquareTheta,
        ConfigKind::Prism,
        ConfigKind::Pyramid,
        ConfigKind::Wheel,
        ConfigKind::OneWheel,
        ConfigKind::TwoWheel,
        ConfigKind::ThreeWheel,
        ConfigKind::UniversalWheel,
        ConfigKind::EvenWheel,
        ConfigKind::OddWheel,
        ConfigKind::DHole,
        ConfigKind::Cap,
        ConfigKind::Diamond,
        ConfigKind::Claw,
        ConfigKind::S2,
        ConfigKind::S3,
        ConfigKind::P3,
        ConfigKind::P3bar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Hole => "Hole",
            ConfigKind::FourHole => "FourHole",
            ConfigKind::LongHole => "LongHole",
            ConfigKind::EvenHole => "EvenHole",
            ConfigKind::Theta => "Theta",
            ConfigKind::SquareTheta => "SquareTheta",
            ConfigKind::Prism => "Prism",
            ConfigKind::Pyramid => "Pyramid",
            ConfigKind::Wheel => "Wheel",
            ConfigKind::OneWheel => "OneWheel",
            ConfigKind::TwoWheel => "TwoWheel",
            ConfigKind::ThreeWheel => "ThreeWheel",
            ConfigKind::UniversalWheel => "UniversalWheel",
            ConfigKind::EvenWheel => "EvenWheel",
            ConfigKind::OddWheel => "OddWheel",
            ConfigKind::DHole => "DHole",
            ConfigKind::Cap => "Cap",
            ConfigKind::Diamond => "Diamond",
            ConfigKind::Claw => "Claw",
            ConfigKind::S2 => "S2",
            ConfigKind::S3 => "S3",
            ConfigKind::P3 => "P3",
            ConfigKind::P3bar => "P3bar",
        }
    }

    /// Minimum number of vertices a realization of this kind can have.
    pub fn min_order(self) -> usize {
        match self {
            ConfigKind::S2 => 2,
            ConfigKind::S3 | ConfigKind::P3 | ConfigKind::P3bar => 3,
            ConfigKind::Hole | ConfigKind::FourHole | ConfigKind::EvenHole => 4,
            ConfigKind::Diamond | ConfigKind::Claw => 4,
            // The smallest theta is K_{2,3} on five vertices.
            ConfigKind::Theta | ConfigKind::SquareTheta => 5,
            ConfigKind::LongHole | ConfigKind::Cap => 5,
            ConfigKind::Wheel
            | ConfigKind::OneWheel
            | ConfigKind::TwoWheel
            | ConfigKind::ThreeWheel
            | ConfigKind::UniversalWheel
            | ConfigKind::EvenWheel
            | ConfigKind::OddWheel
            | ConfigKind::DHole => 5,
            ConfigKind::Prism | ConfigKind::Pyramid => 6,
        }
    }
}

impl std::fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Role of a vertex inside a recognized configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Wheel center (also the apex of a pyramid).
    Center,
    /// Position along the rim or cycle.
    Rim(usize),
    /// Hub side of a 3-path configuration: 0 for the x side, 1 for the y side.
    Hub(u8),
    /// Position `index` along path `path` (0 at the x side).
    Path { path: u8, index: usize },
    /// Anonymous member of a small pattern.
    Member,
}

/// A configuration found inside a host graph: the kind, the vertex set in
/// host ids, and a role for every participating vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationWitness {
    pub kind: ConfigKind,
    pub vertices: Vec<u32>,
    pub roles: BTreeMap<u32, Role>,
}

/// The eight classes plus the signability and familiar-name variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    OddSignable,
    EvenSignable,
    EvenHoleFree,
    WheelFree,
    /// Alias of `C7`.
    UniversallySignable,
    /// Alias of `C8`.
    Chordal,
}

impl ClassId {
    pub const ALL: [ClassId; 14] = [
        ClassId::C1,
        ClassId::C2,
        ClassId::C3,
        ClassId::C4,
        ClassId::C5,
        ClassId::C6,
        ClassId::C7,
        ClassId::C8,
        ClassId::OddSignable,
        ClassId::EvenSignable,
        ClassId::EvenHoleFree,
        ClassId::WheelFree,
        ClassId::UniversallySignable,
        ClassId::Chordal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::C1 => "C1",
            ClassId::C2 => "C2",
            ClassId::C3 => "C3",
            ClassId::C4 => "C4",
            ClassId::C5 => "C5",
            ClassId::C6 => "C6",
            ClassId::C7 => "C7",
            ClassId::C8 => "C8",
            ClassId::OddSignable => "OddSignable",
            ClassId::EvenSignable => "EvenSignable",
            ClassId::EvenHoleFree => "EvenHoleFree",
            ClassId::WheelFree => "WheelFree",
            ClassId::UniversallySignable => "UniversallySignable",
            ClassId::Chordal => "Chordal",
        }
    }

    /// The configurations whose exclusion defines the class.
    pub fn forbidden(self) -> &'static [ConfigKind] {
        use ConfigKind::*;
        match self {
            ClassId::C1 => &[OneWheel, Theta, Pyramid],
            ClassId::C2 => &[ThreeWheel],
            ClassId::C3 => &[TwoWheel, Prism, Pyramid],
            ClassId::C4 => &[OneWheel, ThreeWheel, Theta, Pyramid],
            ClassId::C5 => &[OneWheel, TwoWheel, Prism, Theta, Pyramid],
            ClassId::C6 => &[TwoWheel, ThreeWheel, Prism, Pyramid],
            ClassId::C7 | ClassId::UniversallySignable => &[Wheel, Prism, Theta, Pyramid],
            ClassId::C8 | ClassId::Chordal => &[Hole],
            ClassId::OddSignable => &[Theta, Prism, EvenWheel],
            ClassId::EvenSignable => &[Pyramid, OddWheel],
            ClassId::EvenHoleFree => &[EvenHole],
            ClassId::WheelFree => &[Wheel],
        }
    }
}

impl std::fmt::Display for ClassId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Whole-graph recognition
// ---------------------------------------------------------------------------

/// Every kind realized by `g` itself (not by a proper subgraph).
pub fn classify_configuration(g: &Graph) -> BTreeSet<ConfigKind> {
    let mut kinds = BTreeSet::new();
    let n = g.n();
    let m = g.m();

    match (n, m) {
        (2, 0) => {
            kinds.insert(ConfigKind::S2);
        }
        (3, 0) => {
            kinds.insert(ConfigKind::S3);
        }
        (3, 1) => {
            kinds.insert(ConfigKind::P3bar);
        }
        (3, 2) => {
            kinds.insert(ConfigKind::P3);
        }
        (4, 3) => {
            let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
            degs.sort_unstable();
            if degs == [1, 1, 1, 3] {
                kinds.insert(ConfigKind::Claw);
            }
        }
        (4, 5) => {
            kinds.insert(ConfigKind::Diamond);
        }
        _ => {}
    }

    if let Some(rim) = whole_graph_hole(g) {
        kinds.insert(ConfigKind::Hole);
        match rim.len() {
            4 => {
                kinds.insert(ConfigKind::FourHole);
            }
            _ => {
                kinds.insert(ConfigKind::LongHole);
            }
        }
        if rim.len() % 2 == 0 {
            kinds.insert(ConfigKind::EvenHole);
        }
    }

    if let Some(shape) = as_theta(g) {
        kinds.insert(ConfigKind::Theta);
        // A theta contains a 4-hole exactly when two of its paths have
        // length 2 (the pairwise unions are its only holes).
        let twos = shape
            .paths
            .iter()
            .filter(|p| p.len() == 3) // hub, midpoint, hub
            .count();
        if twos >= 2 {
            kinds.insert(ConfigKind::SquareTheta);
        }
    }
    if as_prism(g).is_some() {
        kinds.insert(ConfigKind::Prism);
    }
    if as_pyramid(g).is_some() {
        kinds.insert(ConfigKind::Pyramid);
    }
    if as_cap(g).is_some() {
        kinds.insert(ConfigKind::Cap);
    }

    for shape in wheel_decompositions(g) {
        kinds.insert(ConfigKind::Wheel);
        let r = shape.rim.len();
        let spoke: Vec<bool> = shape
            .rim
            .iter()
            .map(|&v| g.has_edge(shape.center, v))
            .collect();
        let k = spoke.iter().filter(|&&b| b).count();
        let mut three_wheel = false;
        for i in 0..r {
            let (x, y, z) = (spoke[i], spoke[(i + 1) % r], spoke[(i + 2) % r]);
            if y && !x && !z {
                kinds.insert(ConfigKind::OneWheel);
            }
            if (x && y && !z) || (!x && y && z) {
                kinds.insert(ConfigKind::TwoWheel);
            }
            if x && y && z {
                three_wheel = true;
            }
        }
        if three_wheel {
            kinds.insert(ConfigKind::ThreeWheel);
            if g.degree(shape.center) == 3 {
                kinds.insert(ConfigKind::DHole);
            }
        }
        if k == r {
            kinds.insert(ConfigKind::UniversalWheel);
        }
        if k % 2 == 0 {
            kinds.insert(ConfigKind::EvenWheel);
        }
        let lengths = sector_lengths(&spoke);
        if lengths.iter().filter(|&&l| l == 1).count() % 2 == 1 {
            kinds.insert(ConfigKind::OddWheel);
        }
    }

    kinds
}

/// Cyclic sector lengths of the wheel centered at `center`: the gaps between
/// consecutive center neighbors along the rim. The list starts at the first
/// neighbor in canonical rim order; its sum is the rim length and its length
/// is the number of spokes.
pub fn wheel_sectors(g: &Graph, center: u32) -> Result<Vec<usize>> {
    if (center as usize) >= g.n() {
        return Err(Error::InvalidVertex {
            vertex: center,
            n: g.n(),
        });
    }
    let rest: Vec<u32> = g.vertices().filter(|&v| v != center).collect();
    let rim = match hole_order(g, &rest) {
        Some(r) => r,
        None => return Err(Error::NotAWheel { center }),
    };
    let spoke: Vec<bool> = rim.iter().map(|&v| g.has_edge(center, v)).collect();
    if spoke.iter().filter(|&&b| b).count() < 3 {
        return Err(Error::NotAWheel { center });
    }
    Ok(sector_lengths(&spoke))
}

fn sector_lengths(spoke: &[bool]) -> Vec<usize> {
    let r = spoke.len();
    let positions: Vec<usize> = (0..r).filter(|&i| spoke[i]).collect();
    let k = positions.len();
    (0..k)
        .map(|j| {
            let here = positions[j];
            let next = positions[(j + 1) % k];
            if next > here {
                next - here
            } else {
                next + r - here
            }
        })
        .collect()
}

/// If the whole graph is a hole, returns the rim in canonical cyclic order:
/// starting at vertex 0, moving toward its smaller neighbor.
fn whole_graph_hole(g: &Graph) -> Option<Vec<u32>> {
    let n = g.n();
    if n < 4 || g.m() != n || g.vertices().any(|v| g.degree(v) != 2) {
        return None;
    }
    let all: Vec<u32> = g.vertices().collect();
    hole_order(g, &all)
}

/// If `g[set]` is a hole, returns its vertices in canonical cyclic order.
fn hole_order(g: &Graph, set: &[u32]) -> Option<Vec<u32>> {
    let len = set.len();
    if len < 4 {
        return None;
    }
    let mut in_set = vec![false; g.n()];
    for &v in set {
        in_set[v as usize] = true;
    }
    let deg_in = |v: u32| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| in_set[w as usize])
            .count()
    };
    if set.iter().any(|&v| deg_in(v) != 2) {
        return None;
    }
    let start = *set.iter().min().unwrap();
    let first = g
        .neighbors(start)
        .iter()
        .copied()
        .filter(|&w| in_set[w as usize])
        .min()
        .unwrap();
    let mut order = vec![start, first];
    loop {
        let cur = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && in_set[w as usize])?;
        if next == start {
            break;
        }
        order.push(next);
        if order.len() > len {
            return None;
        }
    }
    (order.len() == len).then_some(order)
}

/// True iff `g[set]` induces a hole (connected, 2-regular, at least 4
/// vertices). Checked literally wherever the definitions require the union
/// of two paths to induce a hole.
pub(crate) fn is_hole_set(g: &Graph, set: &[u32]) -> bool {
    hole_order(g, set).is_some()
}

struct ThreePathShape {
    /// Full paths including both endpoints, oriented from the x side.
    paths: [Vec<u32>; 3],
}

struct WheelShape {
    center: u32,
    rim: Vec<u32>,
}

/// Decomposes `g - hubs` into induced paths. Returns the path vertex orders
/// or `None` if some component is not a path.
fn path_components(g: &Graph, hubs: &[u32]) -> Option<Vec<Vec<u32>>> {
    let rest: Vec<u32> = g.vertices().filter(|v| !hubs.contains(v)).collect();
    let mut in_rest = vec![false; g.n()];
    for &v in &rest {
        in_rest[v as usize] = true;
    }
    let deg_in = |v: u32| -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| in_rest[w as usize])
            .count()
    };
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in &rest {
        if seen[s as usize] {
            continue;
        }
        // Walk the component starting from an endpoint.
        let mut comp = vec![s];
        seen[s as usize] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if in_rest[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        let degs: Vec<usize> = comp.iter().map(|&v| deg_in(v)).collect();
        let order = if comp.len() == 1 {
            if degs[0] != 0 {
                return None;
            }
            comp.clone()
        } else {
            if degs.iter().filter(|&&d| d == 1).count() != 2
                || degs.iter().any(|&d| d > 2)
                || comp.len() != degs.iter().sum::<usize>() / 2 + 1
            {
                return None;
            }
            let end = *comp
                .iter()
                .find(|&&v| deg_in(v) == 1)
                .expect("two endpoints exist");
            let mut order = vec![end];
            let mut prev = u32::MAX;
            let mut cur = end;
            loop {
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| in_rest[w as usize] && w != prev);
                match next {
                    Some(w) => {
                        order.push(w);
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            if order.len() != comp.len() {
                return None;
            }
            order
        };
        out.push(order);
    }
    Some(out)
}

/// The unique hub neighbor of an interior path, or `None` if the count is
/// not exactly one.
fn sole_neighbor_of(g: &Graph, hub: u32, candidates: &[u32]) -> Option<u32> {
    let mut found = None;
    for &v in candidates {
        if g.has_edge(hub, v) {
            if found.is_some() {
                return None;
            }
            found = Some(v);
        }
    }
    found
}

fn as_theta(g: &Graph) -> Option<ThreePathShape> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let mut hubs = Vec::new();
    for v in g.vertices() {
        match g.degree(v) {
            2 => {}
            3 => hubs.push(v),
            _ => return None,
        }
    }
    if hubs.len() != 2 || g.has_edge(hubs[0], hubs[1]) {
        return None;
    }
    let (u, v) = (hubs[0], hubs[1]);
    let comps = path_components(g, &hubs)?;
    if comps.len() != 3 {
        return None;
    }
    let mut paths: Vec<Vec<u32>> = Vec::with_capacity(3);
    for comp in &comps {
        let (a, b) = (comp[0], *comp.last().unwrap());
        // The path must run from u to v via this component; the hubs attach
        // at opposite ends (or both to the single interior vertex).
        let ua = sole_neighbor_of(g, u, comp)?;
        let vb = sole_neighbor_of(g, v, comp)?;
        if comp.len() == 1 {
            if ua != a || vb != a {
                return None;
            }
        } else if !((ua == a && vb == b) || (ua == b && vb == a)) {
            return None;
        }
        let mut full = vec![u];
        if ua == a {
            full.extend(comp.iter().copied());
        } else {
            full.extend(comp.iter().rev().copied());
        }
        full.push(v);
        paths.push(full);
    }
    let paths: [Vec<u32>; 3] = paths.try_into().unwrap();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut union: Vec<u32> = paths[i].iter().chain(&paths[j]).copied().collect();
            union.sort_unstable();
            union.dedup();
            if !is_hole_set(g, &union) {
                return None;
            }
        }
    }
    Some(ThreePathShape { paths })
}

fn triangle(g: &Graph, a: u32, b: u32, c: u32) -> bool {
    g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)
}

fn as_prism(g: &Graph) -> Option<ThreePathShape> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    let mut t = Vec::new();
    for v in g.vertices() {
        match g.degree(v) {
            2 => {}
            3 => t.push(v),
            _ => return None,
        }
    }
    if t.len() != 6 {
        return None;
    }
    // Try every split of the six degree-3 vertices into two triangles; the
    // triangle containing the smallest one goes first.
    for i in 1..5 {
        for j in i + 1..6 {
            let xs = [t[0], t[i], t[j]];
            let ys: Vec<u32> = (1..6).filter(|&k| k != i && k != j).map(|k| t[k]).collect();
            if !triangle(g, xs[0], xs[1], xs[2]) || !triangle(g, ys[0], ys[1], ys[2]) {
                continue;
            }
            if let Some(shape) = assemble_prism(g, xs, [ys[0], ys[1], ys[2]]) {
                return Some(shape);
            }
        }
    }
    None
}

fn assemble_prism(g: &Graph, xs: [u32; 3], ys: [u32; 3]) -> Option<ThreePathShape> {
    let hubs = [xs[0], xs[1], xs[2], ys[0], ys[1], ys[2]];
    let comps = path_components(g, &hubs)?;
    let mut paths: Vec<Vec<u32>> = Vec::new();
    let mut x_used = [false; 3];
    let mut y_used = [false; 3];
    // Length-1 paths are the direct edges between the triangles.
    for (xi, &x) in xs.iter().enumerate() {
        for (yi, &y) in ys.iter().enumerate() {
            if g.has_edge(x, y) {
                if x_used[xi] || y_used[yi] {
                    return None;
                }
                x_used[xi] = true;
                y_used[yi] = true;
                paths.push(vec![x, y]);
            }
        }
    }
    for comp in &comps {
        let x = sole_neighbor_of_set(g, &xs, comp)?;
        let y = sole_neighbor_of_set(g, &ys, comp)?;
        let (a, b) = (comp[0], *comp.last().unwrap());
        let xv = xs[x];
        let yv = ys[y];
        let xa = sole_neighbor_of(g, xv, comp)?;
        let ya = sole_neighbor_of(g, yv, comp)?;
        if comp.len() == 1 {
            if xa != a || ya != a {
                return None;
            }
        } else if !((xa == a && ya == b) || (xa == b && ya == a)) {
            return None;
        }
        if x_used[x] || y_used[y] {
            return None;
        }
        x_used[x] = true;
        y_used[y] = true;
        let mut full = vec![xv];
        if xa == a {
            full.extend(comp.iter().copied());
        } else {
            full.extend(comp.iter().rev().copied());
        }
        full.push(yv);
        paths.push(full);
    }
    if paths.len() != 3 || !x_used.iter().all(|&b| b) || !y_used.iter().all(|&b| b) {
        return None;
    }
    paths.sort_by_key(|p| p[0]);
    let paths: [Vec<u32>; 3] = paths.try_into().unwrap();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut union: Vec<u32> = paths[i].iter().chain(&paths[j]).copied().collect();
            union.sort_unstable();
            union.dedup();
            if !is_hole_set(g, &union) {
                return None;
            }
        }
    }
    Some(ThreePathShape { paths })
}

/// Index of the unique member of `hubs` adjacent to the component.
fn sole_neighbor_of_set(g: &Graph, hubs: &[u32; 3], comp: &[u32]) -> Option<usize> {
    let mut found = None;
    for (i, &h) in hubs.iter().enumerate() {
        if comp.iter().any(|&v| g.has_edge(h, v)) {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

struct PyramidShape {
    apex: u32,
    /// Paths from the apex to each triangle vertex, endpoints included.
    paths: [Vec<u32>; 3],
}

fn as_pyramid(g: &Graph) -> Option<PyramidShape> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    let mut t = Vec::new();
    for v in g.vertices() {
        match g.degree(v) {
            2 => {}
            3 => t.push(v),
            _ => return None,
        }
    }
    if t.len() != 4 {
        return None;
    }
    for ai in 0..4 {
        let apex = t[ai];
        let tri: Vec<u32> = (0..4).filter(|&k| k != ai).map(|k| t[k]).collect();
        if !triangle(g, tri[0], tri[1], tri[2]) {
            continue;
        }
        if let Some(shape) = assemble_pyramid(g, apex, [tri[0], tri[1], tri[2]]) {
            return Some(shape);
        }
    }
    None
}

fn assemble_pyramid(g: &Graph, apex: u32, tri: [u32; 3]) -> Option<PyramidShape> {
    let hubs = [apex, tri[0], tri[1], tri[2]];
    let comps = path_components(g, &hubs)?;
    let mut paths: Vec<Vec<u32>> = Vec::new();
    let mut used = [false; 3];
    for (i, &y) in tri.iter().enumerate() {
        if g.has_edge(apex, y) {
            used[i] = true;
            paths.push(vec![apex, y]);
        }
    }
    for comp in &comps {
        let a = sole_neighbor_of(g, apex, comp)?;
        let yi = sole_neighbor_of_set(g, &tri, comp)?;
        let ya = sole_neighbor_of(g, tri[yi], comp)?;
        let (first, last) = (comp[0], *comp.last().unwrap());
        if comp.len() == 1 {
            if a != first || ya != first {
                return None;
            }
        } else if !((a == first && ya == last) || (a == last && ya == first)) {
            return None;
        }
        if used[yi] {
            return None;
        }
        used[yi] = true;
        let mut full = vec![apex];
        if a == first {
            full.extend(comp.iter().copied());
        } else {
            full.extend(comp.iter().rev().copied());
        }
        full.push(tri[yi]);
        paths.push(full);
    }
    if paths.len() != 3 || !used.iter().all(|&b| b) {
        return None;
    }
    paths.sort_by_key(|p| *p.last().unwrap());
    let paths: [Vec<u32>; 3] = paths.try_into().unwrap();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut union: Vec<u32> = paths[i].iter().chain(&paths[j]).copied().collect();
            union.sort_unstable();
            union.dedup();
            if !is_hole_set(g, &union) {
                return None;
            }
        }
    }
    Some(PyramidShape { apex, paths })
}

struct CapShape {
    /// The full cycle in canonical order.
    cycle: Vec<u32>,
}

fn as_cap(g: &Graph) -> Option<CapShape> {
    let n = g.n();
    if n < 5 || g.m() != n + 1 {
        return None;
    }
    let mut t = Vec::new();
    for v in g.vertices() {
        match g.degree(v) {
            2 => {}
            3 => t.push(v),
            _ => return None,
        }
    }
    if t.len() != 2 || !g.has_edge(t[0], t[1]) {
        return None;
    }
    let (u, w) = (t[0], t[1]);
    let commons: Vec<u32> = g
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&x| x != w && g.has_edge(x, w) && g.degree(x) == 2)
        .collect();
    if commons.len() != 1 {
        return None;
    }
    let x = commons[0];
    let rest: Vec<u32> = g.vertices().filter(|&v| v != x).collect();
    let rim = hole_order(g, &rest)?;
    // Splice x back between u and w to recover the full cycle.
    let iu = rim.iter().position(|&v| v == u).unwrap();
    let iw = rim.iter().position(|&v| v == w).unwrap();
    let len = rim.len();
    let mut cycle = Vec::with_capacity(n);
    if (iu + 1) % len == iw {
        cycle.extend_from_slice(&rim[..=iu]);
        cycle.push(x);
        cycle.extend_from_slice(&rim[iw..]);
    } else if (iw + 1) % len == iu {
        cycle.extend_from_slice(&rim[..=iw]);
        cycle.push(x);
        cycle.extend_from_slice(&rim[iu..]);
    } else {
        return None;
    }
    Some(CapShape { cycle })
}

fn wheel_decompositions(g: &Graph) -> Vec<WheelShape> {
    let mut shapes = Vec::new();
    for center in g.vertices() {
        if g.degree(center) < 3 {
            continue;
        }
        let rest: Vec<u32> = g.vertices().filter(|&v| v != center).collect();
        if let Some(rim) = hole_order(g, &rest) {
            shapes.push(WheelShape { center, rim });
        }
    }
    shapes
}

// ---------------------------------------------------------------------------
// Roles
// ---------------------------------------------------------------------------

/// Role assignment for a graph that realizes `kind`, on the graph's own ids.
fn roles_for(g: &Graph, kind: ConfigKind) -> Option<BTreeMap<u32, Role>> {
    let mut roles = BTreeMap::new();
    match kind {
        ConfigKind::S2 | ConfigKind::S3 | ConfigKind::P3 | ConfigKind::P3bar
        | ConfigKind::Claw | ConfigKind::Diamond => {
            for v in g.vertices() {
                roles.insert(v, Role::Member);
            }
        }
        ConfigKind::Hole | ConfigKind::FourHole | ConfigKind::LongHole | ConfigKind::EvenHole => {
            let rim = whole_graph_hole(g)?;
            for (i, v) in rim.into_iter().enumerate() {
                roles.insert(v, Role::Rim(i));
            }
        }
        ConfigKind::Cap => {
            let shape = as_cap(g)?;
            for (i, v) in shape.cycle.into_iter().enumerate() {
                roles.insert(v, Role::Rim(i));
            }
        }
        ConfigKind::Theta | ConfigKind::SquareTheta => {
            let shape = as_theta(g)?;
            for (p, path) in shape.paths.iter().enumerate() {
                roles.insert(path[0], Role::Hub(0));
                roles.insert(*path.last().unwrap(), Role::Hub(1));
                for (i, &v) in path[1..path.len() - 1].iter().enumerate() {
                    roles.insert(
                        v,
                        Role::Path {
                            path: p as u8,
                            index: i + 1,
                        },
                    );
                }
            }
        }
        ConfigKind::Prism => {
            let shape = as_prism(g)?;
            for (p, path) in shape.paths.iter().enumerate() {
                roles.insert(path[0], Role::Hub(0));
                roles.insert(*path.last().unwrap(), Role::Hub(1));
                for (i, &v) in path[1..path.len() - 1].iter().enumerate() {
                    roles.insert(
                        v,
                        Role::Path {
                            path: p as u8,
                            index: i + 1,
                        },
                    );
                }
            }
        }
        ConfigKind::Pyramid => {
            let shape = as_pyramid(g)?;
            roles.insert(shape.apex, Role::Center);
            for (p, path) in shape.paths.iter().enumerate() {
                roles.insert(*path.last().unwrap(), Role::Hub(1));
                for (i, &v) in path[1..path.len() - 1].iter().enumerate() {
                    roles.insert(
                        v,
                        Role::Path {
                            path: p as u8,
                            index: i + 1,
                        },
                    );
                }
            }
        }
        ConfigKind::Wheel
        | ConfigKind::OneWheel
        | ConfigKind::TwoWheel
        | ConfigKind::ThreeWheel
        | ConfigKind::UniversalWheel
        | ConfigKind::EvenWheel
        | ConfigKind::OddWheel
        | ConfigKind::DHole => {
            let shape = wheel_decompositions(g).into_iter().next()?;
            roles.insert(shape.center, Role::Center);
            for (i, v) in shape.rim.into_iter().enumerate() {
                roles.insert(v, Role::Rim(i));
            }
        }
    }
    Some(roles)
}

// ---------------------------------------------------------------------------
// Containment and class membership
// ---------------------------------------------------------------------------

/// First vertex subset, in lexicographic subset order, whose induced
/// subgraph realizes any of `kinds`. Returns the subset together with the
/// matching kind (the first match in `kinds` order).
fn find_first_realization(
    g: &Graph,
    kinds: &[ConfigKind],
    cap: usize,
) -> Result<Option<(Vec<u32>, ConfigKind)>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let min_order = kinds.iter().map(|k| k.min_order()).min().unwrap_or(0);
    let mut current: Vec<u32> = Vec::new();
    fn recurse(
        g: &Graph,
        kinds: &[ConfigKind],
        min_order: usize,
        current: &mut Vec<u32>,
        next: u32,
    ) -> Option<(Vec<u32>, ConfigKind)> {
        if current.len() >= min_order {
            let (sub, _) = g
                .induced_subgraph(current)
                .expect("subset vertices are in range");
            let found = classify_configuration(&sub);
            if let Some(&kind) = kinds.iter().find(|k| found.contains(k)) {
                return Some((current.clone(), kind));
            }
        }
        for v in next..g.n() as u32 {
            current.push(v);
            if let Some(hit) = recurse(g, kinds, min_order, current, v + 1) {
                return Some(hit);
            }
            current.pop();
        }
        None
    }
    Ok(recurse(g, kinds, min_order, &mut current, 0))
}

fn witness_from_subset(g: &Graph, subset: Vec<u32>, kind: ConfigKind) -> ConfigurationWitness {
    let (sub, map) = g
        .induced_subgraph(&subset)
        .expect("witness vertices are in range");
    let roles = roles_for(&sub, kind)
        .expect("subset classified as kind")
        .into_iter()
        .map(|(v, r)| (map[v as usize], r))
        .collect();
    ConfigurationWitness {
        kind,
        vertices: subset,
        roles,
    }
}

/// Searches `g` for an induced copy of `kind`, using the default cap.
pub fn contains_configuration(g: &Graph, kind: ConfigKind) -> Result<Option<ConfigurationWitness>> {
    contains_configuration_with_cap(g, kind, DEFAULT_BRUTE_CAP)
}

pub fn contains_configuration_with_cap(
    g: &Graph,
    kind: ConfigKind,
    cap: usize,
) -> Result<Option<ConfigurationWitness>> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    // Hole kinds get a targeted cycle search instead of the subset sweep;
    // agreement between the two routes is asserted in tests.
    let subset = match kind {
        ConfigKind::Hole => find_hole(g).map(|mut h| {
            h.sort_unstable();
            h
        }),
        ConfigKind::FourHole => find_four_hole(g),
        ConfigKind::LongHole | ConfigKind::EvenHole => {
            let want_long = kind == ConfigKind::LongHole;
            enumerate_holes(g)
                .into_iter()
                .find(|h| {
                    if want_long {
                        h.len() >= 5
                    } else {
                        h.len() % 2 == 0
                    }
                })
                .map(|mut h| {
                    h.sort_unstable();
                    h
                })
        }
        _ => find_first_realization(g, &[kind], cap)?.map(|(s, _)| s),
    };
    Ok(subset.map(|s| witness_from_subset(g, s, kind)))
}

/// One subset sweep collecting the lexicographically first witness of every
/// kind the graph contains. Used by the CLI's recognize command so class
/// membership for all classes costs a single enumeration.
pub fn survey_configurations(
    g: &Graph,
    cap: usize,
) -> Result<BTreeMap<ConfigKind, ConfigurationWitness>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let mut found: BTreeMap<ConfigKind, Vec<u32>> = BTreeMap::new();
    let mut current: Vec<u32> = Vec::new();
    fn recurse(
        g: &Graph,
        current: &mut Vec<u32>,
        next: u32,
        found: &mut BTreeMap<ConfigKind, Vec<u32>>,
    ) {
        if current.len() >= 2 {
            let (sub, _) = g
                .induced_subgraph(current)
                .expect("subset vertices are in range");
            for kind in classify_configuration(&sub) {
                found.entry(kind).or_insert_with(|| current.clone());
            }
        }
        for v in next..g.n() as u32 {
            current.push(v);
            recurse(g, current, v + 1, found);
            current.pop();
        }
    }
    recurse(g, &mut current, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|(kind, subset)| (kind, witness_from_subset(g, subset, kind)))
        .collect())
}

/// Membership verdict for a class, with the excluding witness when negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassMembership {
    Member,
    Excluded(ConfigurationWitness),
}

impl ClassMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ClassMembership::Member)
    }
}

/// Tests `g` against the class's forbidden configurations by brute force.
pub fn in_class(g: &Graph, c: ClassId) -> Result<ClassMembership> {
    in_class_with_cap(g, c, DEFAULT_BRUTE_CAP)
}

pub fn in_class_with_cap(g: &Graph, c: ClassId, cap: usize) -> Result<ClassMembership> {
    match find_first_realization(g, c.forbidden(), cap)? {
        None => Ok(ClassMembership::Member),
        Some((subset, kind)) => Ok(ClassMembership::Excluded(witness_from_subset(
            g, subset, kind,
        ))),
    }
}

// ---------------------------------------------------------------------------
// Hole searches
// ---------------------------------------------------------------------------

fn is_chordal_quick(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let o = lexbfs(g, 0).expect("start 0 valid for nonempty graph");
    // Prefix neighborhoods must be cliques: the earlier neighbors of each
    // vertex, minus the latest of them (the parent), must all neighbor the
    // parent.
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
    let mut marked = vec![u32::MAX; n];
    for p in g.vertices() {
        if children[p as usize].is_empty() {
            continue;
        }
        for &u in g.neighbors(p) {
            marked[u as usize] = p;
        }
        for &child in &children[p as usize] {
            for &u in g.neighbors(child) {
                if u != p && o.pos(u) < o.pos(child) && marked[u as usize] != p {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds one hole in cyclic order, or `None` when the graph is chordal.
/// Unbounded: the chordality test is linear; extraction only runs on
/// non-chordal inputs.
pub fn find_hole(g: &Graph) -> Option<Vec<u32>> {
    if is_chordal_quick(g) {
        return None;
    }
    // A non-chordal graph has a vertex v, a nonadjacent pair {x, y} in N(v),
    // and a component C of G - N[v] attaching both; the shortest x-y path
    // through C closes a hole with v.
    let n = g.n();
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        if nbrs.len() < 2 {
            continue;
        }
        let mut blocked = vec![false; n];
        blocked[v as usize] = true;
        for &x in nbrs {
            blocked[x as usize] = true;
        }
        let comps = components_avoiding(g, &blocked);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                for comp in &comps {
                    let touches = |a: u32| comp.iter().any(|&w| g.has_edge(a, w));
                    if touches(x) && touches(y) {
                        let path = shortest_path_inside(g, x, y, comp)
                            .expect("both endpoints attach to the component");
                        let mut hole = vec![v];
                        hole.extend(path);
                        return Some(hole);
                    }
                }
            }
        }
    }
    unreachable!("non-chordal graphs always yield a hole")
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

/// Shortest x-y path whose interior stays inside `comp`, as a vertex list
/// from x to y.
fn shortest_path_inside(g: &Graph, x: u32, y: u32, comp: &[u32]) -> Option<Vec<u32>> {
    let n = g.n();
    let mut allowed = vec![false; n];
    for &v in comp {
        allowed[v as usize] = true;
    }
    allowed[y as usize] = true;
    let mut parent = vec![u32::MAX; n];
    parent[x as usize] = x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            let mut path = vec![y];
            let mut v = y;
            while v != x {
                v = parent[v as usize];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed[w as usize] && parent[w as usize] == u32::MAX {
                parent[w as usize] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Direct 4-hole search: a nonadjacent pair plus a nonadjacent pair of
/// their common neighbors. Returns the sorted vertex set.
fn find_four_hole(g: &Graph) -> Option<Vec<u32>> {
    let n = g.n() as u32;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let commons: Vec<u32> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| g.has_edge(w, v))
                .collect();
            for (i, &x) in commons.iter().enumerate() {
                for &y in &commons[i + 1..] {
                    if !g.has_edge(x, y) {
                        let mut hole = vec![u, v, x, y];
                        hole.sort_unstable();
                        return Some(hole);
                    }
                }
            }
        }
    }
    None
}

/// All holes of `g`, each in cyclic order starting at its smallest vertex.
/// Exponential in the worst case; callers cap the graph size.
pub fn enumerate_holes(g: &Graph) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let n = g.n() as u32;
    let mut path: Vec<u32> = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        extend_hole_search(g, s, &mut path, &mut out);
    }
    out
}

fn extend_hole_search(g: &Graph, s: u32, path: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let last = *path.last().unwrap();
    for &x in g.neighbors(last) {
        if x <= s || path.contains(&x) {
            continue;
        }
        // Chordless extension: x may touch only the path's last vertex,
        // except for s which closes a cycle.
        if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&w| g.has_edge(x, w)) {
            continue;
        }
        if path.len() == 1 {
            path.push(x);
            extend_hole_search(g, s, path, out);
            path.pop();
        } else if g.has_edge(x, s) {
            // Closing edge; longer extensions would keep the chord xs.
            if path.len() >= 3 && path[1] < x {
                let mut hole = path.clone();
                hole.push(x);
                out.push(hole);
            }
        } else {
            path.push(x);
            extend_hole_search(g, s, path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        edges.push((n as u32 - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn k23() -> Graph {
        // Hubs 0, 1; midpoints 2, 3, 4.
        Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn triangular_prism() -> Graph {
        Graph::new(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn wheel(rim: usize, spokes: &[usize]) -> Graph {
        let mut edges: Vec<_> = (1..rim as u32).map(|v| (v - 1, v)).collect();
        edges.push((rim as u32 - 1, 0));
        for &s in spokes {
            edges.push((rim as u32, s as u32));
        }
        Graph::new(rim + 1, &edges).unwrap()
    }

    fn petersen() -> Graph {
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

    #[test]
    fn small_patterns() {
        use ConfigKind::*;
        let set = |g: &Graph| classify_configuration(g);
        assert!(set(&Graph::new(2, &[]).unwrap()).contains(&S2));
        assert!(set(&Graph::new(3, &[]).unwrap()).contains(&S3));
        assert!(set(&Graph::new(3, &[(0, 1), (1, 2)]).unwrap()).contains(&P3));
        assert!(set(&Graph::new(3, &[(0, 1)]).unwrap()).contains(&P3bar));
        assert!(set(&Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()).contains(&Claw));
        assert!(
            set(&Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap())
                .contains(&Diamond)
        );
        assert!(set(&complete(3)).is_empty());
    }

    #[test]
    fn hole_kinds() {
        use ConfigKind::*;
        let c4 = classify_configuration(&cycle(4));
        assert_eq!(c4, BTreeSet::from([Hole, FourHole, EvenHole]));
        let c5 = classify_configuration(&cycle(5));
        assert_eq!(c5, BTreeSet::from([Hole, LongHole]));
        let c6 = classify_configuration(&cycle(6));
        assert_eq!(c6, BTreeSet::from([Hole, LongHole, EvenHole]));
    }

    #[test]
    fn theta_examples() {
        use ConfigKind::*;
        assert_eq!(
            classify_configuration(&k23()),
            BTreeSet::from([Theta, SquareTheta])
        );
        // Theta(2,2,3): one path stretched to length 3; still square.
        let g = Graph::new(
            6,
            &[(0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 5), (5, 1)],
        )
        .unwrap();
        assert_eq!(
            classify_configuration(&g),
            BTreeSet::from([Theta, SquareTheta])
        );
        // Theta(3,3,3) on 8 vertices: no 4-hole, so not square.
        let g = Graph::new(
            8,
            &[
                (0, 2), (2, 3), (3, 1),
                (0, 4), (4, 5), (5, 1),
                (0, 6), (6, 7), (7, 1),
            ],
        )
        .unwrap();
        assert_eq!(classify_configuration(&g), BTreeSet::from([Theta]));
    }

    #[test]
    fn prism_and_pyramid() {
        use ConfigKind::*;
        assert_eq!(
            classify_configuration(&triangular_prism()),
            BTreeSet::from([Prism])
        );
        // Pyramid with path lengths (1, 2, 2): apex 0, triangle {1, 2, 3},
        // midpoints 4, 5. The unit path also makes it a wheel: the two long
        // paths close a 5-hole and vertex 1 has three neighbors on it.
        let g = Graph::new(
            6,
            &[(1, 2), (1, 3), (2, 3), (0, 1), (0, 4), (4, 2), (0, 5), (5, 3)],
        )
        .unwrap();
        assert_eq!(
            classify_configuration(&g),
            BTreeSet::from([Pyramid, Wheel, OneWheel, TwoWheel, OddWheel])
        );
        // All paths of length 2: a pure pyramid.
        let g = Graph::new(
            7,
            &[(1, 2), (1, 3), (2, 3), (0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3)],
        )
        .unwrap();
        assert_eq!(classify_configuration(&g), BTreeSet::from([Pyramid]));
        // Two length-1 paths would close a triangle through the apex; the
        // closest such graph is not a pyramid.
        let g = Graph::new(
            5,
            &[(1, 2), (1, 3), (2, 3), (0, 1), (0, 2), (0, 4), (4, 3)],
        )
        .unwrap();
        assert!(!classify_configuration(&g).contains(&Pyramid));
    }

    #[test]
    fn wheel_subtypes() {
        use ConfigKind::*;
        let w4 = wheel(4, &[0, 1, 2, 3]);
        assert_eq!(
            classify_configuration(&w4),
            BTreeSet::from([Wheel, ThreeWheel, UniversalWheel, EvenWheel])
        );
        let w5 = wheel(5, &[0, 1, 2, 3, 4]);
        assert_eq!(
            classify_configuration(&w5),
            BTreeSet::from([Wheel, ThreeWheel, UniversalWheel, OddWheel])
        );
        let one = wheel(6, &[0, 2, 4]);
        assert_eq!(classify_configuration(&one), BTreeSet::from([Wheel, OneWheel]));
        let universal6 = wheel(6, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(
            classify_configuration(&universal6),
            BTreeSet::from([Wheel, ThreeWheel, UniversalWheel, EvenWheel])
        );
        // Center over three consecutive rim vertices: a d-hole, also a
        // 2-wheel and 3-wheel.
        let dhole = wheel(5, &[0, 1, 2]);
        let kinds = classify_configuration(&dhole);
        assert!(kinds.contains(&DHole));
        assert!(kinds.contains(&ThreeWheel));
        assert!(kinds.contains(&TwoWheel));
    }

    #[test]
    fn cap_recognition() {
        // C5 plus one short chord.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(classify_configuration(&g).contains(&ConfigKind::Cap));
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]).unwrap();
        assert!(classify_configuration(&g).contains(&ConfigKind::Cap));
        // A long chord does not make a cap.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert!(!classify_configuration(&g).contains(&ConfigKind::Cap));
    }

    #[test]
    fn sector_examples() {
        let g = wheel(6, &[0, 2, 4]);
        assert_eq!(wheel_sectors(&g, 6).unwrap(), vec![2, 2, 2]);
        let g = wheel(5, &[0, 1, 2, 3, 4]);
        assert_eq!(wheel_sectors(&g, 5).unwrap(), vec![1, 1, 1, 1, 1]);
        let g = wheel(4, &[0, 1, 2, 3]);
        assert_eq!(wheel_sectors(&g, 4).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(
            wheel_sectors(&cycle(5), 0),
            Err(Error::NotAWheel { center: 0 })
        );
    }

    #[test]
    fn containment_basics() {
        let c5 = cycle(5);
        let w = contains_configuration(&c5, ConfigKind::Hole).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);

        let k4 = complete(4);
        for kind in [
            ConfigKind::Hole,
            ConfigKind::Theta,
            ConfigKind::Prism,
            ConfigKind::Pyramid,
            ConfigKind::Wheel,
        ] {
            assert!(contains_configuration(&k4, kind).unwrap().is_none());
        }

        let w = contains_configuration(&petersen(), ConfigKind::Theta)
            .unwrap()
            .expect("Petersen contains a theta");
        let (sub, _) = petersen().induced_subgraph(&w.vertices).unwrap();
        assert!(classify_configuration(&sub).contains(&ConfigKind::Theta));
    }

    #[test]
    fn containment_respects_cap() {
        let g = cycle(6);
        assert!(matches!(
            contains_configuration_with_cap(&g, ConfigKind::Hole, 4),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn hole_search_agrees_with_enumeration() {
        // Mixed graphs: holes of both parities, chordal graphs, cliques,
        // plus a seeded random sweep.
        let mut graphs = vec![
            cycle(4),
            cycle(5),
            cycle(6),
            cycle(7),
            complete(5),
            triangular_prism(),
            k23(),
            petersen(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let n = 4 + (next() % 5) as usize;
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
                .collect();
            let mask = next();
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            graphs.push(Graph::new(n, &edges).unwrap());
        }
        for g in &graphs {
            let all = enumerate_holes(g);
            assert_eq!(find_hole(g).is_some(), !all.is_empty());
            for kind in [
                ConfigKind::Hole,
                ConfigKind::FourHole,
                ConfigKind::LongHole,
                ConfigKind::EvenHole,
            ] {
                let fast = contains_configuration_with_cap(g, kind, 16).unwrap();
                let slow = find_first_realization(g, &[kind], 16).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{kind} on {g:?}");
                if let Some(w) = fast {
                    let (sub, _) = g.induced_subgraph(&w.vertices).unwrap();
                    assert!(classify_configuration(&sub).contains(&kind));
                }
            }
        }
    }

    #[test]
    fn class_membership_examples() {
        // Chordal graphs are in every class.
        let tree = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        for c in ClassId::ALL {
            assert!(in_class(&tree, c).unwrap().is_member(), "{c}");
        }

        let one_wheel = wheel(6, &[0, 2, 4]);
        match in_class(&one_wheel, ClassId::C1).unwrap() {
            ClassMembership::Excluded(w) => assert_eq!(w.kind, ConfigKind::OneWheel),
            ClassMembership::Member => panic!("1-wheel accepted into C1"),
        }

        // Triangle-free graphs are in C3.
        assert!(in_class(&petersen(), ClassId::C3).unwrap().is_member());
        assert!(in_class(&cycle(7), ClassId::C3).unwrap().is_member());

        let k23 = k23();
        for c in [ClassId::C1, ClassId::C5, ClassId::C7, ClassId::C8, ClassId::OddSignable] {
            assert!(!in_class(&k23, c).unwrap().is_member(), "{c}");
        }
        for c in [ClassId::C2, ClassId::C3, ClassId::C6, ClassId::EvenSignable] {
            assert!(in_class(&k23, c).unwrap().is_member(), "{c}");
        }
    }

    #[test]
    fn witness_roles_are_consistent() {
        let w = contains_configuration(&k23(), ConfigKind::Theta).unwrap().unwrap();
        let hubs: Vec<u32> = w
            .roles
            .iter()
            .filter(|(_, r)| matches!(r, Role::Hub(_)))
            .map(|(&v, _)| v)
            .collect();
        assert_eq!(hubs, vec![0, 1]);

        let g = wheel(4, &[0, 1, 2, 3]);
        let w = contains_configuration(&g, ConfigKind::UniversalWheel).unwrap().unwrap();
        assert_eq!(w.roles.get(&4), Some(&Role::Center));
    }
}
