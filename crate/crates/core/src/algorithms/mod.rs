//! Optimization algorithms driven by elimination orderings: maximum weighted
//! clique for the tractable classes, colorings, the simplicial-or-degree-2
//! finder, and maximal clique enumeration for 3-wheel-free graphs.

mod clique;
mod structure;

pub use clique::{
    max_clique_bruteforce, max_clique_c2, max_clique_c3, max_clique_c4, max_clique_c6,
    max_clique_chordal, max_clique_ehf, CliqueCertificate, CliqueOutcome, CliqueResult,
    BRUTE_CLIQUE_CAP,
};
pub use structure::{
    color_universally_signable, enumerate_maximal_cliques_3wf, find_simplicial_or_degree2,
    greedy_color, Coloring, ColoringOutcome, MaximalCliquesOutcome, SimplicialSearch,
};
