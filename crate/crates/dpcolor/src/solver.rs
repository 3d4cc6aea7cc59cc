//! Exact solver for proper colorings of S3-signed plane graphs.
//!
//! The search is plain backtracking over 3-color domains with forward
//! checking and the minimum-remaining-values heuristic; ties are broken by
//! smallest vertex id and colors are tried in ascending order, so results
//! (including enumeration order) are fully deterministic.

use crate::signing::SignedPlaneGraph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Domain bitmask over colors `{0, 1, 2}`.
type Mask = u8;

const FULL: Mask = 0b111;

fn mask_count(m: Mask) -> u32 {
    m.count_ones()
}

fn mask_colors(m: Mask) -> impl Iterator<Item = u8> {
    (0..3u8).filter(move |c| m & (1 << c) != 0)
}

struct Search<'a> {
    sg: &'a SignedPlaneGraph,
    domains: Vec<Mask>,
    assigned: Vec<Option<u8>>,
}

impl<'a> Search<'a> {
    fn new(sg: &'a SignedPlaneGraph, fixed: &BTreeMap<usize, u8>) -> Option<Search<'a>> {
        let n = sg.graph.n();
        let mut s = Search {
            sg,
            domains: vec![FULL; n],
            assigned: vec![None; n],
        };
        for (&v, &c) in sg.precolor.iter().chain(fixed.iter()) {
            if c > 2 || v >= n {
                return None;
            }
            if !s.assign(v, c) {
                return None;
            }
        }
        Some(s)
    }

    /// Assigns a color and forward-checks neighbors. Returns false on wipeout
    /// or contradiction with an existing assignment.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        if let Some(prev) = self.assigned[v] {
            return prev == c;
        }
        if self.domains[v] & (1 << c) == 0 {
            return false;
        }
        self.assigned[v] = Some(c);
        self.domains[v] = 1 << c;
        for &u in self.sg.graph.neighbors(v) {
            let forbidden = self.sg.sigma(v, u).apply(c);
            if self.assigned[u] == Some(forbidden) {
                return false;
            }
            self.domains[u] &= !(1 << forbidden);
            if self.assigned[u].is_none() && self.domains[u] == 0 {
                return false;
            }
        }
        true
    }

    /// The unassigned vertex with the fewest remaining colors (smallest id
    /// breaks ties), or `None` if everything is assigned.
    fn pick(&self) -> Option<usize> {
        (0..self.domains.len())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (mask_count(self.domains[v]), v))
    }

    /// Depth-first search; `limit` bounds the number of solutions counted and
    /// `store` the number of solutions materialized.
    fn run(&mut self, limit: u64, store: usize, out: &mut Vec<Vec<u8>>, counter: &mut u64) {
        if *counter >= limit {
            return;
        }
        let v = match self.pick() {
            Some(v) => v,
            None => {
                *counter += 1;
                if out.len() < store {
                    out.push(
                        self.assigned
                            .iter()
                            .map(|a| a.expect("complete assignment"))
                            .collect(),
                    );
                }
                return;
            }
        };
        let saved_domains = self.domains.clone();
        for c in mask_colors(self.domains[v]) {
            if self.assign(v, c) {
                self.run(limit, store, out, counter);
            }
            self.domains = saved_domains.clone();
            self.assigned[v] = None;
            if *counter >= limit {
                return;
            }
        }
    }
}

/// Finds one proper coloring honoring the precoloring, if any.
pub fn solve(sg: &SignedPlaneGraph) -> Option<Vec<u8>> {
    solve_with(sg, &BTreeMap::new())
}

/// Finds one proper coloring honoring the precoloring and `fixed`.
pub fn solve_with(sg: &SignedPlaneGraph, fixed: &BTreeMap<usize, u8>) -> Option<Vec<u8>> {
    let mut search = Search::new(sg, fixed)?;
    let mut out = Vec::new();
    let mut counter = 0;
    search.run(1, 1, &mut out, &mut counter);
    out.into_iter().next()
}

/// Counts all proper colorings honoring the precoloring and `fixed`.
pub fn count_with(sg: &SignedPlaneGraph, fixed: &BTreeMap<usize, u8>) -> u64 {
    let mut search = match Search::new(sg, fixed) {
        Some(s) => s,
        None => return 0,
    };
    let mut out = Vec::new();
    let mut counter = 0;
    search.run(u64::MAX, 0, &mut out, &mut counter);
    counter
}

/// Counts all proper colorings honoring the precoloring.
pub fn count(sg: &SignedPlaneGraph) -> u64 {
    count_with(sg, &BTreeMap::new())
}

/// The colors of `v` compatible with the partially colored neighborhood.
pub fn free_colors(sg: &SignedPlaneGraph, fixed: &BTreeMap<usize, u8>, v: usize) -> Vec<u8> {
    let mut mask = FULL;
    for &u in sg.graph.neighbors(v) {
        if let Some(&c) = fixed.get(&u) {
            mask &= !(1 << sg.sigma(u, v).apply(c));
        }
    }
    mask_colors(mask).collect()
}

/// Outcome of a boundary-extension check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExtendReport {
    /// Number of boundary colorings tested.
    pub tried: usize,
    /// Boundary colorings (as `vertex -> color` maps) that failed to extend.
    pub failures: Vec<BTreeMap<usize, u8>>,
}

impl ExtendReport {
    /// Whether every tested boundary coloring extended.
    pub fn all_extended(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates proper colorings of the induced subgraph on the outer boundary
/// vertices (chords included), in deterministic order.
pub fn boundary_colorings(sg: &SignedPlaneGraph) -> Vec<BTreeMap<usize, u8>> {
    let boundary: Vec<usize> = {
        let mut b = sg.graph.boundary_walk();
        b.sort_unstable();
        b.dedup();
        b
    };
    let mut out = Vec::new();
    let mut current: BTreeMap<usize, u8> = BTreeMap::new();
    enumerate_boundary(sg, &boundary, 0, &mut current, &mut out);
    out
}

fn enumerate_boundary(
    sg: &SignedPlaneGraph,
    boundary: &[usize],
    i: usize,
    current: &mut BTreeMap<usize, u8>,
    out: &mut Vec<BTreeMap<usize, u8>>,
) {
    if i == boundary.len() {
        out.push(current.clone());
        return;
    }
    let v = boundary[i];
    if let Some(&c) = sg.precolor.get(&v) {
        if free_colors(sg, current, v).contains(&c) {
            current.insert(v, c);
            enumerate_boundary(sg, boundary, i + 1, current, out);
            current.remove(&v);
        }
        return;
    }
    for c in free_colors(sg, current, v) {
        current.insert(v, c);
        enumerate_boundary(sg, boundary, i + 1, current, out);
        current.remove(&v);
    }
}

/// Checks that proper colorings of the boundary extend to the whole graph.
///
/// With `sample = None` every proper boundary coloring is tested; with
/// `sample = Some((k, seed))` a deterministic pseudo-random subset of at most
/// `k` of them is tested. If the signed graph carries a precoloring, only
/// boundary colorings agreeing with it are considered.
pub fn extend_boundary(sg: &SignedPlaneGraph, sample: Option<(usize, u64)>) -> ExtendReport {
    let mut colorings = boundary_colorings(sg);
    if let Some((k, seed)) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        colorings.shuffle(&mut rng);
        colorings.truncate(k);
    }
    let mut failures = Vec::new();
    let tried = colorings.len();
    for phi0 in colorings {
        if solve_with(sg, &phi0).is_none() {
            failures.push(phi0);
        }
    }
    ExtendReport { tried, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::planegraph::cycle_graph;
    use crate::signing::SignedPlaneGraph;

    /// Counts colorings by enumerating all 3^n assignments.
    fn brute_count(sg: &SignedPlaneGraph) -> u64 {
        let n = sg.graph.n();
        let mut phi = vec![0u8; n];
        let mut count = 0;
        loop {
            if sg.is_proper(&phi) {
                count += 1;
            }
            let mut i = 0;
            while i < n {
                phi[i] += 1;
                if phi[i] < 3 {
                    break;
                }
                phi[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        count
    }

    #[test]
    fn straight_odd_cycle_count_matches_chromatic_polynomial() {
        // P(C_n, 3) = 2^n + 2 * (-1)^n.
        let sg = SignedPlaneGraph::straight(cycle_graph(5));
        assert_eq!(count(&sg), 30);
        assert_eq!(count(&sg), brute_count(&sg));
    }

    #[test]
    fn negative_cycle_count_differs() {
        let mut sg = SignedPlaneGraph::straight(cycle_graph(5));
        sg.sig.set(0, 1, Perm::Swap01);
        assert_eq!(count(&sg), brute_count(&sg));
    }

    #[test]
    fn precoloring_is_honored() {
        let mut sg = SignedPlaneGraph::straight(cycle_graph(5));
        sg.precolor.insert(0, 2);
        let phi = solve(&sg).unwrap();
        assert_eq!(phi[0], 2);
        assert!(sg.is_proper(&phi));
        assert_eq!(count(&sg), 10); // 30 colorings / 3 by symmetry
    }

    #[test]
    fn solver_is_deterministic() {
        let mut sg = SignedPlaneGraph::straight(cycle_graph(7));
        sg.sig.set(2, 3, Perm::Rot1);
        assert_eq!(solve(&sg), solve(&sg));
    }

    #[test]
    fn boundary_extension_on_a_cycle_is_trivial() {
        // The whole graph is its boundary: every proper boundary coloring
        // extends to itself.
        let sg = SignedPlaneGraph::straight(cycle_graph(9));
        let report = extend_boundary(&sg, None);
        assert_eq!(report.tried as u64, count(&sg));
        assert!(report.all_extended());
    }

    #[test]
    fn free_colors_shrink_with_neighbors() {
        let sg = SignedPlaneGraph::straight(cycle_graph(5));
        let mut fixed = BTreeMap::new();
        assert_eq!(free_colors(&sg, &fixed, 0).len(), 3);
        fixed.insert(1, 0);
        fixed.insert(4, 1);
        assert_eq!(free_colors(&sg, &fixed, 0), vec![2]);
    }
}
