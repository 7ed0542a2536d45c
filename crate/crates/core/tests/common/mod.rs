#![allow(dead_code)]

use kve_core::tree_solver::{Label, StLabeling};
use kve_core::{Graph, VertexSet};

pub fn mask_set(n: usize, mask: u32) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn covers(g: &Graph, mask: u32, demand: impl Fn(usize) -> usize) -> bool {
    g.edges().iter().enumerate().all(|(id, &(u, v))| {
        let cover = g.edge_cover_set(u, v).unwrap();
        cover.iter().filter(|&&x| mask >> x & 1 == 1).count() >= demand(id)
    })
}

/// Smallest k-ve dominating set size by exhaustive search.
pub fn brute_kve(g: &Graph, k: usize) -> Option<usize> {
    brute_min(g.n(), |mask| covers(g, mask, |_| k))
}

pub fn brute_st(g: &Graph, lab: &StLabeling) -> Option<usize> {
    let required: u32 = (0..g.n())
        .filter(|&v| lab.label(v) == Label::Required)
        .map(|v| 1 << v)
        .sum();
    brute_min(g.n(), |mask| {
        mask & required == required && covers(g, mask, |id| lab.demands()[id] as usize)
    })
}

pub fn brute_ktuple(g: &Graph, k: usize) -> Option<usize> {
    brute_min(g.n(), |mask| {
        g.vertices()
            .all(|v| g.closed_iter(v).filter(|&x| mask >> x & 1 == 1).count() >= k)
    })
}

fn brute_min(n: usize, ok: impl Fn(u32) -> bool) -> Option<usize> {
    (0u32..1 << n).filter(|&m| ok(m)).map(|m| m.count_ones() as usize).min()
}

/// Whether some vertex subset of size >= 4 induces a cycle.
pub fn has_chordless_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).filter(|m| m.count_ones() >= 4).any(|mask| {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, _) = g.induced(&verts);
        h.is_connected() && h.vertices().all(|v| h.degree(v) == 2)
    })
}
