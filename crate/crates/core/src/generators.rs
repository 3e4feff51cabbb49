//! Seeded graph generators: G(n, p) with exact rational edge probability,
//! chordal graphs by simplicial construction, parameterized Truemper
//! configurations, and rejection sampling into the eight classes.
//!
//! All randomness comes from ChaCha20 keyed with the caller's 64-bit seed,
//! so identical parameters reproduce identical graphs.

use rand::rngs::ChaCha20Rng;
use rand::{RngExt, SeedableRng};

use crate::configurations::{in_class_with_cap, ClassId, ConfigKind, ConfigurationWitness, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::DEFAULT_BRUTE_CAP;

/// Default attempts before `sample_class` gives up.
pub const DEFAULT_SAMPLE_ATTEMPTS: usize = 10_000;

/// An exact rational probability num/den in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    num: u32,
    den: u32,
}

impl Probability {
    pub fn new(num: u32, den: u32) -> Result<Probability> {
        if den == 0 || num > den {
            return Err(Error::InvalidParameter(format!(
                "probability {num}/{den} is not in [0, 1]"
            )));
        }
        Ok(Probability { num, den })
    }

    pub const ZERO: Probability = Probability { num: 0, den: 1 };
    pub const ONE: Probability = Probability { num: 1, den: 1 };
    pub const HALF: Probability = Probability { num: 1, den: 2 };

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    fn sample(&self, rng: &mut ChaCha20Rng) -> bool {
        rng.random_ratio(self.num, self.den)
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn random_graph(rng: &mut ChaCha20Rng, n: usize, p: Probability) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if p.sample(rng) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are simple")
}

/// G(n, p): every unordered pair becomes an edge independently with
/// probability `p`.
pub fn gen_random(n: usize, p: Probability, seed: u64) -> Graph {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    random_graph(&mut rng, n, p)
}

/// Chordal graph by simplicial construction: each new vertex attaches to a
/// random subset of an existing clique (each member kept with probability
/// `density`), so it is simplicial at insertion time.
pub fn gen_chordal(n: usize, density: Probability, seed: u64) -> Graph {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut cliques: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n as u32 {
        if i == 0 {
            cliques.push(vec![0]);
            continue;
        }
        let base = &cliques[rng.random_range(0..i as usize)];
        let kept: Vec<u32> = base
            .iter()
            .copied()
            .filter(|_| density.sample(&mut rng))
            .collect();
        for &u in &kept {
            edges.push((u, i));
        }
        let mut clique = kept;
        clique.push(i);
        cliques.push(clique);
    }
    Graph::new(n, &edges).expect("simplicial construction yields simple edges")
}

/// Parameters for building a Truemper configuration directly. Path lengths
/// are edge counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigParams {
    /// Three internally disjoint paths between two nonadjacent hubs; every
    /// length at least 2 (a unit path would chord the other two).
    Theta { lengths: [usize; 3] },
    /// Two disjoint triangles joined by three disjoint paths of length at
    /// least 1.
    Prism { lengths: [usize; 3] },
    /// An apex joined to a triangle by three paths, at most one of length 1.
    Pyramid { lengths: [usize; 3] },
    /// A rim cycle of length at least 4 plus a center adjacent to the rim
    /// at the given positions (at least 3 of them).
    Wheel { rim: usize, spokes: Vec<usize> },
}

/// Builds the configuration exactly, returning the graph and the role map.
pub fn gen_configuration(params: &ConfigParams) -> Result<(Graph, ConfigurationWitness)> {
    match params {
        ConfigParams::Theta { lengths } => {
            if lengths.iter().any(|&l| l < 2) {
                return Err(Error::InvalidParameter(
                    "theta paths must have length at least 2".into(),
                ));
            }
            let mut edges = Vec::new();
            let mut roles = std::collections::BTreeMap::new();
            roles.insert(0, Role::Hub(0));
            roles.insert(1, Role::Hub(1));
            let mut next = 2u32;
            for (p, &len) in lengths.iter().enumerate() {
                let mut prev = 0u32;
                for idx in 1..len {
                    edges.push((prev, next));
                    roles.insert(next, Role::Path { path: p as u8, index: idx });
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            finish_config(ConfigKind::Theta, next as usize, edges, roles)
        }
        ConfigParams::Prism { lengths } => {
            if lengths.iter().any(|&l| l < 1) {
                return Err(Error::InvalidParameter(
                    "prism paths must have length at least 1".into(),
                ));
            }
            let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
            let mut roles = std::collections::BTreeMap::new();
            for x in 0..3u32 {
                roles.insert(x, Role::Hub(0));
                roles.insert(x + 3, Role::Hub(1));
            }
            let mut next = 6u32;
            for (p, &len) in lengths.iter().enumerate() {
                let mut prev = p as u32;
                for idx in 1..len {
                    edges.push((prev, next));
                    roles.insert(next, Role::Path { path: p as u8, index: idx });
                    prev = next;
                    next += 1;
                }
                edges.push((prev, p as u32 + 3));
            }
            finish_config(ConfigKind::Prism, next as usize, edges, roles)
        }
        ConfigParams::Pyramid { lengths } => {
            let units = lengths.iter().filter(|&&l| l == 1).count();
            if lengths.iter().any(|&l| l < 1) || units > 1 {
                return Err(Error::InvalidParameter(
                    "pyramid paths need length at least 1 with at most one unit path".into(),
                ));
            }
            let mut edges = vec![(1, 2), (1, 3), (2, 3)];
            let mut roles = std::collections::BTreeMap::new();
            roles.insert(0, Role::Center);
            for y in 1..4u32 {
                roles.insert(y, Role::Hub(1));
            }
            let mut next = 4u32;
            for (p, &len) in lengths.iter().enumerate() {
                let mut prev = 0u32;
                for idx in 1..len {
                    edges.push((prev, next));
                    roles.insert(next, Role::Path { path: p as u8, index: idx });
                    prev = next;
                    next += 1;
                }
                edges.push((prev, p as u32 + 1));
            }
            finish_config(ConfigKind::Pyramid, next as usize, edges, roles)
        }
        ConfigParams::Wheel { rim, spokes } => {
            let mut sorted = spokes.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if *rim < 4 || sorted.len() < 3 || sorted.iter().any(|&s| s >= *rim) {
                return Err(Error::InvalidParameter(
                    "wheel needs rim length at least 4 and at least 3 distinct spoke positions"
                        .into(),
                ));
            }
            let center = *rim as u32;
            let mut edges: Vec<(u32, u32)> = (0..*rim as u32)
                .map(|i| (i, (i + 1) % *rim as u32))
                .collect();
            let mut roles = std::collections::BTreeMap::new();
            for i in 0..*rim as u32 {
                roles.insert(i, Role::Rim(i as usize));
            }
            roles.insert(center, Role::Center);
            for &s in &sorted {
                edges.push((center, s as u32));
            }
            finish_config(ConfigKind::Wheel, rim + 1, edges, roles)
        }
    }
}

fn finish_config(
    kind: ConfigKind,
    n: usize,
    edges: Vec<(u32, u32)>,
    roles: std::collections::BTreeMap<u32, Role>,
) -> Result<(Graph, ConfigurationWitness)> {
    let graph = Graph::new(n, &edges)?;
    let witness = ConfigurationWitness {
        kind,
        vertices: (0..n as u32).collect(),
        roles,
    };
    Ok((graph, witness))
}

/// Rejection-samples G(n, p) until the class accepts, reading successive
/// graphs off one seeded stream.
pub fn sample_class(
    c: ClassId,
    n: usize,
    p: Probability,
    seed: u64,
    attempts: usize,
) -> Result<Graph> {
    sample_class_with_cap(c, n, p, seed, attempts, DEFAULT_BRUTE_CAP)
}

pub fn sample_class_with_cap(
    c: ClassId,
    n: usize,
    p: Probability,
    seed: u64,
    attempts: usize,
    cap: usize,
) -> Result<Graph> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let g = random_graph(&mut rng, n, p);
        if in_class_with_cap(&g, c, cap)?.is_member() {
            return Ok(g);
        }
    }
    Err(Error::Exhausted { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configurations::classify_configuration;
    use crate::elimination::perfect_elimination_ordering;

    #[test]
    fn random_extremes_and_determinism() {
        let g = gen_random(5, Probability::ZERO, 7);
        assert_eq!(g.m(), 0);
        let g = gen_random(5, Probability::ONE, 7);
        assert_eq!(g.m(), 10);
        let a = gen_random(8, Probability::HALF, 1234);
        let b = gen_random(8, Probability::HALF, 1234);
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_probability() {
        assert!(Probability::new(3, 2).is_err());
        assert!(Probability::new(1, 0).is_err());
    }

    #[test]
    fn chordal_outputs_are_chordal() {
        for seed in 0..20 {
            let g = gen_chordal(30, Probability::new(2, 3).unwrap(), seed);
            assert!(perfect_elimination_ordering(&g).unwrap().is_ordering());
        }
        let g = gen_chordal(1, Probability::HALF, 0);
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn theta_222_is_k23() {
        let (g, w) = gen_configuration(&ConfigParams::Theta { lengths: [2, 2, 2] }).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        let kinds = classify_configuration(&g);
        assert!(kinds.contains(&ConfigKind::Theta));
        assert!(kinds.contains(&ConfigKind::SquareTheta));
        assert_eq!(w.roles.get(&0), Some(&Role::Hub(0)));
    }

    #[test]
    fn prism_111_is_triangular_prism() {
        let (g, _) = gen_configuration(&ConfigParams::Prism { lengths: [1, 1, 1] }).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!(classify_configuration(&g).contains(&ConfigKind::Prism));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(gen_configuration(&ConfigParams::Theta { lengths: [1, 2, 2] }).is_err());
        assert!(gen_configuration(&ConfigParams::Pyramid { lengths: [1, 1, 2] }).is_err());
        assert!(
            gen_configuration(&ConfigParams::Wheel { rim: 3, spokes: vec![0, 1, 2] }).is_err()
        );
        assert!(gen_configuration(&ConfigParams::Wheel { rim: 5, spokes: vec![0, 1] }).is_err());
    }

    #[test]
    fn config_roundtrip_small() {
        for a in 2..=4usize {
            for b in a..=4 {
                for c in b..=4 {
                    if a + b + c - 1 > 10 {
                        continue;
                    }
                    let (g, _) =
                        gen_configuration(&ConfigParams::Theta { lengths: [a, b, c] }).unwrap();
                    assert!(classify_configuration(&g).contains(&ConfigKind::Theta));
                }
            }
        }
        for rim in 4..=7usize {
            for mask in 0u32..1 << rim {
                let spokes: Vec<usize> = (0..rim).filter(|&i| mask >> i & 1 == 1).collect();
                if spokes.len() < 3 {
                    continue;
                }
                let (g, _) = gen_configuration(&ConfigParams::Wheel {
                    rim,
                    spokes: spokes.clone(),
                })
                .unwrap();
                assert!(
                    classify_configuration(&g).contains(&ConfigKind::Wheel),
                    "rim {rim} spokes {spokes:?}"
                );
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_respects_class() {
        let p = Probability::new(1, 3).unwrap();
        let a = sample_class(ClassId::C7, 6, p, 99, 1000).unwrap();
        let b = sample_class(ClassId::C7, 6, p, 99, 1000).unwrap();
        assert_eq!(a, b);
        assert!(crate::configurations::in_class(&a, ClassId::C7)
            .unwrap()
            .is_member());

        // p = 0 accepts immediately for any class.
        let g = sample_class(ClassId::C5, 8, Probability::ZERO, 5, 10).unwrap();
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn sampling_exhaustion() {
        let err = sample_class(ClassId::C8, 6, Probability::HALF, 3, 0);
        assert_eq!(err, Err(Error::Exhausted { attempts: 0 }));
    }
}
