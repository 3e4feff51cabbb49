//! C ABI for the lexelim library.
//!
//! Graphs are opaque handles created by `lexelim_graph_new` or
//! `lexelim_graph_parse` and released with `lexelim_graph_free`. Every
//! fallible call returns a status code; `LEXELIM_CERTIFICATE` is the
//! documented "input is outside the target class" outcome, not an error.
//! Output arrays are caller-allocated with capacity `n` (the vertex count)
//! unless stated otherwise.

// C-style names for the exported surface.
#![allow(non_camel_case_types)]

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lexelim::algorithms::{
    color_universally_signable, greedy_color, max_clique_bruteforce, max_clique_c2,
    max_clique_c3, max_clique_c4, max_clique_c6, max_clique_chordal, max_clique_ehf,
    CliqueOutcome, ColoringOutcome,
};
use lexelim::configurations::{in_class_with_cap, ClassId};
use lexelim::elimination::{elimination_ordering, EliminationResult};
use lexelim::graph::{Graph, WeightedGraph};
use lexelim::lexbfs::{is_lexbfs_ordering, lexbfs, VertexOrdering};
use lexelim::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum lexelim_status {
    LEXELIM_OK = 0,
    /// The robust algorithms answered with a non-membership certificate.
    LEXELIM_CERTIFICATE = 1,
    LEXELIM_ERR_NULL_POINTER = 2,
    LEXELIM_ERR_INVALID_ARGUMENT = 3,
    LEXELIM_ERR_INVALID_EDGE = 4,
    LEXELIM_ERR_INVALID_VERTEX = 5,
    LEXELIM_ERR_TOO_LARGE = 6,
    LEXELIM_ERR_PARSE = 7,
    LEXELIM_ERR_BUFFER_TOO_SMALL = 8,
    LEXELIM_ERR_PANIC = 9,
}

use lexelim_status::*;

/// Graph classes addressable through the ABI.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum lexelim_class {
    LEXELIM_CLASS_C1 = 1,
    LEXELIM_CLASS_C2 = 2,
    LEXELIM_CLASS_C3 = 3,
    LEXELIM_CLASS_C4 = 4,
    LEXELIM_CLASS_C5 = 5,
    LEXELIM_CLASS_C6 = 6,
    LEXELIM_CLASS_C7 = 7,
    LEXELIM_CLASS_C8 = 8,
    LEXELIM_CLASS_CHORDAL = 9,
    LEXELIM_CLASS_UNIVERSALLY_SIGNABLE = 10,
    LEXELIM_CLASS_EVEN_HOLE_FREE = 11,
    LEXELIM_CLASS_WHEEL_FREE = 12,
    LEXELIM_CLASS_ODD_SIGNABLE = 13,
    LEXELIM_CLASS_EVEN_SIGNABLE = 14,
}

impl lexelim_class {
    fn id(self) -> ClassId {
        match self {
            lexelim_class::LEXELIM_CLASS_C1 => ClassId::C1,
            lexelim_class::LEXELIM_CLASS_C2 => ClassId::C2,
            lexelim_class::LEXELIM_CLASS_C3 => ClassId::C3,
            lexelim_class::LEXELIM_CLASS_C4 => ClassId::C4,
            lexelim_class::LEXELIM_CLASS_C5 => ClassId::C5,
            lexelim_class::LEXELIM_CLASS_C6 => ClassId::C6,
            lexelim_class::LEXELIM_CLASS_C7 => ClassId::C7,
            lexelim_class::LEXELIM_CLASS_C8 => ClassId::C8,
            lexelim_class::LEXELIM_CLASS_CHORDAL => ClassId::Chordal,
            lexelim_class::LEXELIM_CLASS_UNIVERSALLY_SIGNABLE => ClassId::UniversallySignable,
            lexelim_class::LEXELIM_CLASS_EVEN_HOLE_FREE => ClassId::EvenHoleFree,
            lexelim_class::LEXELIM_CLASS_WHEEL_FREE => ClassId::WheelFree,
            lexelim_class::LEXELIM_CLASS_ODD_SIGNABLE => ClassId::OddSignable,
            lexelim_class::LEXELIM_CLASS_EVEN_SIGNABLE => ClassId::EvenSignable,
        }
    }
}

/// Clique algorithms addressable through the ABI.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum lexelim_clique_algo {
    LEXELIM_CLIQUE_BRUTE = 0,
    LEXELIM_CLIQUE_CHORDAL = 1,
    LEXELIM_CLIQUE_EHF = 2,
    LEXELIM_CLIQUE_C2 = 3,
    LEXELIM_CLIQUE_C3 = 4,
    LEXELIM_CLIQUE_C4 = 5,
    LEXELIM_CLIQUE_C6 = 6,
}

/// Opaque graph handle.
pub struct lexelim_graph {
    inner: Graph,
}

fn status_of(e: &Error) -> lexelim_status {
    match e {
        Error::InvalidEdge { .. } => LEXELIM_ERR_INVALID_EDGE,
        Error::InvalidVertex { .. } => LEXELIM_ERR_INVALID_VERTEX,
        Error::TooLarge { .. } => LEXELIM_ERR_TOO_LARGE,
        _ => LEXELIM_ERR_INVALID_ARGUMENT,
    }
}

fn guarded(f: impl FnOnce() -> lexelim_status) -> lexelim_status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => LEXELIM_ERR_PANIC,
    }
}

unsafe fn graph_ref<'a>(g: *const lexelim_graph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

/// Builds a graph on `n` vertices from `edge_count` pairs laid out as
/// `u0 v0 u1 v1 ...`. On success stores a handle in `out`.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable u32 values (or be
/// null when `edge_count` is 0) and `out` must be a valid location.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_new(
    n: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut lexelim_graph,
) -> lexelim_status {
    if out.is_null() || (endpoints.is_null() && edge_count > 0) {
        return LEXELIM_ERR_NULL_POINTER;
    }
    let pairs: Vec<(u32, u32)> = if edge_count == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(endpoints, 2 * edge_count)
            .chunks_exact(2)
            .map(|c| (c[0], c[1]))
            .collect()
    };
    guarded(|| match Graph::new(n as usize, &pairs) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(lexelim_graph { inner }));
            LEXELIM_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Parses either text dialect (plain or DIMACS); explicit weights in the
/// file are ignored here, use the weights argument of the clique call.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_parse(
    text: *const c_char,
    out: *mut *mut lexelim_graph,
) -> lexelim_status {
    if text.is_null() || out.is_null() {
        return LEXELIM_ERR_NULL_POINTER;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return LEXELIM_ERR_PARSE;
    };
    guarded(|| match lexelim::io::parse(text) {
        Ok(parsed) => {
            *out = Box::into_raw(Box::new(lexelim_graph {
                inner: parsed.graph,
            }));
            LEXELIM_OK
        }
        Err(_) => LEXELIM_ERR_PARSE,
    })
}

/// Releases a handle returned by the constructors. Null is a no-op.
///
/// # Safety
/// `g` must be a pointer previously returned by a constructor and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_free(g: *mut lexelim_graph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_vertex_count(g: *const lexelim_graph) -> u32 {
    graph_ref(g).map_or(0, |g| g.n() as u32)
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_edge_count(g: *const lexelim_graph) -> u64 {
    graph_ref(g).map_or(0, |g| g.m() as u64)
}

/// # Safety
/// `g` must be a live handle; `u` and `v` must be valid vertex ids.
#[no_mangle]
pub unsafe extern "C" fn lexelim_graph_has_edge(
    g: *const lexelim_graph,
    u: u32,
    v: u32,
) -> bool {
    match graph_ref(g) {
        Some(g) if (u as usize) < g.n() && (v as usize) < g.n() => g.has_edge(u, v),
        _ => false,
    }
}

/// Writes the LexBFS ordering from `start` into `order_out`.
///
/// # Safety
/// `g` must be a live handle and `order_out` must have room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn lexelim_lexbfs(
    g: *const lexelim_graph,
    start: u32,
    order_out: *mut u32,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if order_out.is_null() && g.n() > 0 {
        return LEXELIM_ERR_NULL_POINTER;
    }
    guarded(|| match lexbfs(g, start) {
        Ok(o) => {
            if g.n() > 0 {
                std::ptr::copy_nonoverlapping(o.order().as_ptr(), order_out, g.n());
            }
            LEXELIM_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Tests the three-vertex characterization of LexBFS orderings.
///
/// # Safety
/// `order` must point to `len` values; `result_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexelim_is_lexbfs_ordering(
    g: *const lexelim_graph,
    order: *const u32,
    len: usize,
    result_out: *mut bool,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if (order.is_null() && len > 0) || result_out.is_null() {
        return LEXELIM_ERR_NULL_POINTER;
    }
    let order = std::slice::from_raw_parts(order, len).to_vec();
    guarded(|| {
        let Ok(o) = VertexOrdering::new(order) else {
            return LEXELIM_ERR_INVALID_ARGUMENT;
        };
        match is_lexbfs_ordering(g, &o) {
            Ok(b) => {
                *result_out = b;
                LEXELIM_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Computes the LexBFS ordering from vertex 0 and verifies it against the
/// class family. `order_out` always receives the ordering. On
/// `LEXELIM_CERTIFICATE`, `cert_position_out` receives the 1-based failing
/// position and `cert_witness_out`/`cert_witness_len` receive the violating
/// set (capacity `n` suffices).
///
/// # Safety
/// `g` must be a live handle; output buffers must have capacity `n`.
#[no_mangle]
pub unsafe extern "C" fn lexelim_elimination_ordering(
    g: *const lexelim_graph,
    class: lexelim_class,
    order_out: *mut u32,
    cert_position_out: *mut u32,
    cert_witness_out: *mut u32,
    cert_witness_len: *mut usize,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if g.n() > 0 && (order_out.is_null() || cert_position_out.is_null() || cert_witness_out.is_null() || cert_witness_len.is_null()) {
        return LEXELIM_ERR_NULL_POINTER;
    }
    guarded(|| match elimination_ordering(g, class.id()) {
        Ok(EliminationResult::Ordering { ordering, .. }) => {
            if g.n() > 0 {
                std::ptr::copy_nonoverlapping(ordering.order().as_ptr(), order_out, g.n());
            }
            LEXELIM_OK
        }
        Ok(EliminationResult::Certificate {
            ordering,
            certificate,
            ..
        }) => {
            if g.n() > 0 {
                std::ptr::copy_nonoverlapping(ordering.order().as_ptr(), order_out, g.n());
            }
            *cert_position_out = certificate.position as u32;
            *cert_witness_len = certificate.witness.len();
            std::ptr::copy_nonoverlapping(
                certificate.witness.as_ptr(),
                cert_witness_out,
                certificate.witness.len(),
            );
            LEXELIM_CERTIFICATE
        }
        Err(e) => status_of(&e),
    })
}

/// Maximum weighted clique. `weights` may be null for unit weights. The
/// members buffer needs capacity `n`; `members_len` receives the size and
/// `weight_out` the total weight. Certificate outcomes return
/// `LEXELIM_CERTIFICATE` without filling the clique outputs.
///
/// # Safety
/// `g` must be a live handle; `weights` must be null or point to `n`
/// values; output buffers must have capacity `n`.
#[no_mangle]
pub unsafe extern "C" fn lexelim_max_clique(
    g: *const lexelim_graph,
    weights: *const u64,
    algo: lexelim_clique_algo,
    verify: bool,
    members_out: *mut u32,
    members_len: *mut usize,
    weight_out: *mut u64,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if members_len.is_null() || weight_out.is_null() || (members_out.is_null() && g.n() > 0) {
        return LEXELIM_ERR_NULL_POINTER;
    }
    let wg = if weights.is_null() {
        WeightedGraph::unit(g.clone())
    } else {
        let w = std::slice::from_raw_parts(weights, g.n()).to_vec();
        match WeightedGraph::new(g.clone(), w) {
            Ok(wg) => wg,
            Err(e) => return status_of(&e),
        }
    };
    guarded(|| {
        let outcome = match algo {
            lexelim_clique_algo::LEXELIM_CLIQUE_BRUTE => match max_clique_bruteforce(&wg) {
                Ok(r) => CliqueOutcome::Clique(r),
                Err(e) => return status_of(&e),
            },
            lexelim_clique_algo::LEXELIM_CLIQUE_CHORDAL => max_clique_chordal(&wg),
            lexelim_clique_algo::LEXELIM_CLIQUE_EHF => max_clique_ehf(&wg),
            lexelim_clique_algo::LEXELIM_CLIQUE_C2 => max_clique_c2(&wg),
            lexelim_clique_algo::LEXELIM_CLIQUE_C3 => max_clique_c3(&wg, verify),
            lexelim_clique_algo::LEXELIM_CLIQUE_C4 => max_clique_c4(&wg, verify),
            lexelim_clique_algo::LEXELIM_CLIQUE_C6 => max_clique_c6(&wg, verify),
        };
        match outcome {
            CliqueOutcome::Clique(r) => {
                *members_len = r.clique.len();
                *weight_out = r.weight;
                if !r.clique.is_empty() {
                    std::ptr::copy_nonoverlapping(r.clique.as_ptr(), members_out, r.clique.len());
                }
                LEXELIM_OK
            }
            CliqueOutcome::Certificate(_) => LEXELIM_CERTIFICATE,
        }
    })
}

/// Brute-force class membership with the given subset-enumeration cap.
///
/// # Safety
/// `g` must be a live handle; `member_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexelim_in_class(
    g: *const lexelim_graph,
    class: lexelim_class,
    cap: usize,
    member_out: *mut bool,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if member_out.is_null() {
        return LEXELIM_ERR_NULL_POINTER;
    }
    guarded(|| match in_class_with_cap(g, class.id(), cap) {
        Ok(m) => {
            *member_out = m.is_member();
            LEXELIM_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Greedy coloring along a caller-supplied ordering. Colors are 1-based;
/// `count_out` receives the number of colors used.
///
/// # Safety
/// `order` must point to `len` values; `colors_out` needs capacity `n`.
#[no_mangle]
pub unsafe extern "C" fn lexelim_greedy_color(
    g: *const lexelim_graph,
    order: *const u32,
    len: usize,
    colors_out: *mut u32,
    count_out: *mut usize,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if (order.is_null() && len > 0) || count_out.is_null() || (colors_out.is_null() && g.n() > 0) {
        return LEXELIM_ERR_NULL_POINTER;
    }
    let order = std::slice::from_raw_parts(order, len).to_vec();
    guarded(|| {
        let Ok(o) = VertexOrdering::new(order) else {
            return LEXELIM_ERR_INVALID_ARGUMENT;
        };
        match greedy_color(g, &o) {
            Ok(c) => {
                *count_out = c.count();
                if g.n() > 0 {
                    std::ptr::copy_nonoverlapping(c.colors().as_ptr(), colors_out, g.n());
                }
                LEXELIM_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Coloring for universally signable graphs: at most max(3, omega) colors.
/// Off-class structure yields `LEXELIM_CERTIFICATE`.
///
/// # Safety
/// `g` must be a live handle; `colors_out` needs capacity `n`.
#[no_mangle]
pub unsafe extern "C" fn lexelim_color_universally_signable(
    g: *const lexelim_graph,
    colors_out: *mut u32,
    count_out: *mut usize,
) -> lexelim_status {
    let Some(g) = graph_ref(g) else {
        return LEXELIM_ERR_NULL_POINTER;
    };
    if count_out.is_null() || (colors_out.is_null() && g.n() > 0) {
        return LEXELIM_ERR_NULL_POINTER;
    }
    guarded(|| match color_universally_signable(g) {
        ColoringOutcome::Coloring(c) => {
            *count_out = c.count();
            if g.n() > 0 {
                std::ptr::copy_nonoverlapping(c.colors().as_ptr(), colors_out, g.n());
            }
            LEXELIM_OK
        }
        ColoringOutcome::Certificate(_) => LEXELIM_CERTIFICATE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: u32, edges: &[u32]) -> *mut lexelim_graph {
        let mut out = std::ptr::null_mut();
        let status =
            unsafe { lexelim_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut out) };
        assert_eq!(status, LEXELIM_OK);
        out
    }

    #[test]
    fn graph_lifecycle_and_queries() {
        let g = build(4, &[0, 1, 1, 2, 2, 3, 3, 0]);
        unsafe {
            assert_eq!(lexelim_graph_vertex_count(g), 4);
            assert_eq!(lexelim_graph_edge_count(g), 4);
            assert!(lexelim_graph_has_edge(g, 0, 1));
            assert!(!lexelim_graph_has_edge(g, 0, 2));
            assert!(!lexelim_graph_has_edge(g, 0, 9));
            lexelim_graph_free(g);
        }
    }

    #[test]
    fn rejects_bad_edges() {
        let mut out = std::ptr::null_mut();
        let edges = [0u32, 0];
        let status = unsafe { lexelim_graph_new(2, edges.as_ptr(), 1, &mut out) };
        assert_eq!(status, LEXELIM_ERR_INVALID_EDGE);
        let edges = [0u32, 9];
        let status = unsafe { lexelim_graph_new(2, edges.as_ptr(), 1, &mut out) };
        assert_eq!(status, LEXELIM_ERR_INVALID_VERTEX);
    }

    #[test]
    fn parse_and_lexbfs() {
        let text = std::ffi::CString::new("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        let mut g = std::ptr::null_mut();
        assert_eq!(
            unsafe { lexelim_graph_parse(text.as_ptr(), &mut g) },
            LEXELIM_OK
        );
        let mut order = [0u32; 4];
        assert_eq!(
            unsafe { lexelim_lexbfs(g, 0, order.as_mut_ptr()) },
            LEXELIM_OK
        );
        assert_eq!(order, [0, 1, 3, 2]);

        let mut ok = false;
        assert_eq!(
            unsafe { lexelim_is_lexbfs_ordering(g, order.as_ptr(), 4, &mut ok) },
            LEXELIM_OK
        );
        assert!(ok);
        let bad = [0u32, 2, 1, 3];
        assert_eq!(
            unsafe { lexelim_is_lexbfs_ordering(g, bad.as_ptr(), 4, &mut ok) },
            LEXELIM_OK
        );
        assert!(!ok);
        unsafe { lexelim_graph_free(g) };
    }

    #[test]
    fn elimination_certificate_surface() {
        let g = build(4, &[0, 1, 1, 2, 2, 3, 3, 0]);
        let mut order = [0u32; 4];
        let mut pos = 0u32;
        let mut wit = [0u32; 4];
        let mut wit_len = 0usize;
        let status = unsafe {
            lexelim_elimination_ordering(
                g,
                lexelim_class::LEXELIM_CLASS_C8,
                order.as_mut_ptr(),
                &mut pos,
                wit.as_mut_ptr(),
                &mut wit_len,
            )
        };
        assert_eq!(status, LEXELIM_CERTIFICATE);
        assert_eq!(order, [0, 1, 3, 2]);
        assert_eq!(pos, 4);
        assert_eq!(&wit[..wit_len], &[1, 3]);
        unsafe { lexelim_graph_free(g) };
    }

    #[test]
    fn clique_and_coloring() {
        let g = build(4, &[0, 1, 1, 2, 2, 3, 3, 0]);
        let mut members = [0u32; 4];
        let mut len = 0usize;
        let mut weight = 0u64;
        let status = unsafe {
            lexelim_max_clique(
                g,
                std::ptr::null(),
                lexelim_clique_algo::LEXELIM_CLIQUE_EHF,
                false,
                members.as_mut_ptr(),
                &mut len,
                &mut weight,
            )
        };
        assert_eq!(status, LEXELIM_OK);
        assert_eq!(weight, 2);
        assert_eq!(len, 2);

        let weights = [5u64, 1, 5, 1];
        let status = unsafe {
            lexelim_max_clique(
                g,
                weights.as_ptr(),
                lexelim_clique_algo::LEXELIM_CLIQUE_BRUTE,
                false,
                members.as_mut_ptr(),
                &mut len,
                &mut weight,
            )
        };
        assert_eq!(status, LEXELIM_OK);
        assert_eq!(weight, 6);

        let mut colors = [0u32; 4];
        let mut count = 0usize;
        let status = unsafe {
            lexelim_color_universally_signable(g, colors.as_mut_ptr(), &mut count)
        };
        assert_eq!(status, LEXELIM_OK);
        assert_eq!(count, 2);
        unsafe { lexelim_graph_free(g) };
    }

    #[test]
    fn class_membership() {
        let g = build(5, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 0]);
        let mut member = false;
        // C5 is a bare hole: not chordal, but it contains no Truemper
        // configuration, so it sits in C7 and the signable classes.
        for (class, expect) in [
            (lexelim_class::LEXELIM_CLASS_C8, false),
            (lexelim_class::LEXELIM_CLASS_C7, true),
            (lexelim_class::LEXELIM_CLASS_C4, true),
            (lexelim_class::LEXELIM_CLASS_ODD_SIGNABLE, true),
        ] {
            let status = unsafe { lexelim_in_class(g, class, 16, &mut member) };
            assert_eq!(status, LEXELIM_OK);
            assert_eq!(member, expect, "{class:?}");
        }
        let status =
            unsafe { lexelim_in_class(g, lexelim_class::LEXELIM_CLASS_C8, 3, &mut member) };
        assert_eq!(status, LEXELIM_ERR_TOO_LARGE);
        unsafe { lexelim_graph_free(g) };
    }

    #[test]
    fn elimination_ok_path_and_greedy_color() {
        let g = build(4, &[0, 1, 1, 2, 2, 3]);
        let mut order = [0u32; 4];
        let mut pos = 0u32;
        let mut wit = [0u32; 4];
        let mut wit_len = 0usize;
        let status = unsafe {
            lexelim_elimination_ordering(
                g,
                lexelim_class::LEXELIM_CLASS_CHORDAL,
                order.as_mut_ptr(),
                &mut pos,
                wit.as_mut_ptr(),
                &mut wit_len,
            )
        };
        assert_eq!(status, LEXELIM_OK);
        assert_eq!(order, [0, 1, 2, 3]);

        let mut colors = [0u32; 4];
        let mut count = 0usize;
        let status = unsafe {
            lexelim_greedy_color(g, order.as_ptr(), 4, colors.as_mut_ptr(), &mut count)
        };
        assert_eq!(status, LEXELIM_OK);
        assert_eq!(count, 2);
        let bad = [0u32, 0, 1, 2];
        let status = unsafe {
            lexelim_greedy_color(g, bad.as_ptr(), 4, colors.as_mut_ptr(), &mut count)
        };
        assert_eq!(status, LEXELIM_ERR_INVALID_ARGUMENT);
        unsafe { lexelim_graph_free(g) };
    }

    #[test]
    fn null_handling() {
        unsafe {
            lexelim_graph_free(std::ptr::null_mut());
            assert_eq!(lexelim_graph_vertex_count(std::ptr::null()), 0);
            let mut order = [0u32; 1];
            assert_eq!(
                lexelim_lexbfs(std::ptr::null(), 0, order.as_mut_ptr()),
                LEXELIM_ERR_NULL_POINTER
            );
        }
    }
}
