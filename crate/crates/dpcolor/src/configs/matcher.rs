//! Induced-subgraph matching of catalog patterns in a host.
//!
//! Core vertices map injectively onto host vertices; adjacency is induced
//! (pattern non-edges must be host non-edges). Exact degree requirements,
//! internality, facial requirements and cycle-sign constraints are checked,
//! and each attachment resolves to the unique host neighbor of its anchor
//! outside the core image. Occurrences are reported up to pattern
//! automorphism: one per core image set.

use super::{ConfigPattern, Occurrence, Sign, Theta};
use crate::signing::SignedPlaneGraph;
use std::collections::BTreeSet;

/// Finds all occurrences of `p` in `host`, one per orbit.
pub fn find_occurrences(p: &ConfigPattern, host: &SignedPlaneGraph) -> Vec<Occurrence> {
    let core = p.core();
    if core.is_empty() {
        return Vec::new();
    }
    // Search order: start anywhere, then always extend along a pattern edge
    // (all catalog cores are connected).
    let mut order: Vec<usize> = vec![core[0]];
    let mut seen: BTreeSet<usize> = BTreeSet::from([core[0]]);
    while order.len() < core.len() {
        let next = core
            .iter()
            .copied()
            .filter(|v| !seen.contains(v))
            .find(|&v| {
                p.pattern_neighbors(v)
                    .iter()
                    .any(|u| seen.contains(u) && p.vertices[*u].attachment_of.is_none())
            })
            .unwrap_or_else(|| {
                core.iter().copied().find(|v| !seen.contains(v)).unwrap()
            });
        seen.insert(next);
        order.push(next);
    }

    let g = &host.graph;
    let n = g.n();
    let mut map = vec![usize::MAX; p.vertices.len()];
    let mut used = vec![false; n];
    let mut out: Vec<Occurrence> = Vec::new();
    let mut orbits: BTreeSet<Vec<usize>> = BTreeSet::new();

    fn candidate_ok(p: &ConfigPattern, host: &SignedPlaneGraph, pv: usize, hv: usize) -> bool {
        let vert = &p.vertices[pv];
        match vert.theta {
            Theta::Exact(k) => {
                if host.graph.degree(hv) != k {
                    return false;
                }
            }
            Theta::Star => {
                if host.graph.degree(hv) < p.pattern_degree(pv) {
                    return false;
                }
            }
        }
        !(vert.internal && host.graph.is_external(hv))
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        p: &ConfigPattern,
        host: &SignedPlaneGraph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        orbits: &mut BTreeSet<Vec<usize>>,
        out: &mut Vec<Occurrence>,
    ) {
        if depth == order.len() {
            finish(p, host, map, orbits, out);
            return;
        }
        let pv = order[depth];
        // Candidates: neighbors of an already-mapped pattern neighbor when
        // available, otherwise all host vertices.
        let anchor = p
            .pattern_neighbors(pv)
            .into_iter()
            .find(|&u| map[u] != usize::MAX);
        let cands: Vec<usize> = match anchor {
            Some(u) => host.graph.neighbors(map[u]).to_vec(),
            None => (0..host.graph.n()).collect(),
        };
        'cand: for hv in cands {
            if used[hv] || !candidate_ok(p, host, pv, hv) {
                continue;
            }
            // Induced adjacency against every mapped core vertex.
            for q in p.core() {
                if map[q] == usize::MAX || q == pv {
                    continue;
                }
                let want = p.has_edge(pv, q);
                if host.graph.has_edge(hv, map[q]) != want {
                    continue 'cand;
                }
            }
            map[pv] = hv;
            used[hv] = true;
            search(p, host, order, depth + 1, map, used, orbits, out);
            used[hv] = false;
            map[pv] = usize::MAX;
        }
    }

    fn finish(
        p: &ConfigPattern,
        host: &SignedPlaneGraph,
        full: &[usize],
        orbits: &mut BTreeSet<Vec<usize>>,
        out: &mut Vec<Occurrence>,
    ) {
        let mut map = full.to_vec();
        // Resolve attachments: the unique outside neighbor of each anchor.
        let core_image: BTreeSet<usize> = p.core().iter().map(|&v| map[v]).collect();
        for (att, anchor) in p.attachments() {
            let outside: Vec<usize> = host
                .graph
                .neighbors(map[anchor])
                .iter()
                .copied()
                .filter(|h| !core_image.contains(h))
                .collect();
            if outside.len() != 1 {
                return;
            }
            map[att] = outside[0];
        }
        // Cycle signs.
        for c in &p.cycles {
            if c.sign == Sign::Any {
                continue;
            }
            let walk: Vec<usize> = c.cycle.iter().map(|&v| map[v]).collect();
            let pos = host.is_positive(&walk);
            if pos != (c.sign == Sign::Positive) {
                return;
            }
        }
        // Facial requirements.
        for f in &p.facial {
            let seq: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            if !sequence_on_a_face(host, &seq) {
                return;
            }
        }
        let mut key: Vec<usize> = core_image.into_iter().collect();
        key.sort_unstable();
        if orbits.insert(key) {
            out.push(Occurrence {
                pattern: p.name.clone(),
                map,
            });
        }
    }

    search(p, host, &order, 0, &mut map, &mut used, &mut orbits, &mut out);
    out
}

/// Whether the vertex sequence appears consecutively (in either direction)
/// on the walk of some face of the host. A closed sequence (`first ==
/// last`) additionally requires the face length to match, so that a
/// triangle requirement really names a triangular face.
fn sequence_on_a_face(host: &SignedPlaneGraph, seq: &[usize]) -> bool {
    let closed = seq.len() >= 2 && seq.first() == seq.last();
    let g = &host.graph;
    for f in 0..g.faces().len() {
        let walk = g.faces()[f].walk();
        if closed && walk.len() != seq.len() - 1 {
            continue;
        }
        if walk_contains(&walk, seq) {
            return true;
        }
        let rev: Vec<usize> = walk.iter().rev().copied().collect();
        if walk_contains(&rev, seq) {
            return true;
        }
    }
    false
}

fn walk_contains(walk: &[usize], seq: &[usize]) -> bool {
    let l = walk.len();
    if seq.len() > l + 1 {
        return false;
    }
    'start: for s in 0..l {
        for (i, &v) in seq.iter().enumerate() {
            if walk[(s + i) % l] != v {
                continue 'start;
            }
        }
        return true;
    }
    false
}

/// Occurrences of every default catalog instance in the host.
pub fn scan_all(
    catalog: &super::catalog::Catalog,
    host: &SignedPlaneGraph,
) -> Vec<(String, Vec<Occurrence>)> {
    catalog
        .default_instances()
        .iter()
        .map(|p| (p.name.clone(), find_occurrences(p, host)))
        .collect()
}
