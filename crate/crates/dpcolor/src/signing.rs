//! S3-signed plane graphs: signatures, switching and covers.
//!
//! A signature assigns to every arc `(u, v)` a permutation of the three
//! colors, with `sigma(v, u) = sigma(u, v)^-1`. Only the `min -> max`
//! direction of each edge is stored; the reverse is derived on access, so the
//! involution invariant holds by construction. A coloring `phi` is proper
//! when `phi(v) != sigma(u, v)(phi(u))` on every edge. Switching at a vertex
//! composes all arcs into it with a fixed permutation; it preserves proper
//! colorability and the conjugacy class (in particular positivity) of every
//! cycle product.

use crate::perm::Perm;
use crate::planegraph::PlaneGraph;
use std::collections::BTreeMap;

/// A signature on the edges of a plane graph.
///
/// Arcs are stored in the `min -> max` direction only.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    arcs: BTreeMap<(usize, usize), Perm>,
}

impl Signature {
    /// The all-identity ("straight") signature.
    pub fn straight() -> Signature {
        Signature::default()
    }

    /// The permutation on the arc `(u, v)`.
    pub fn get(&self, u: usize, v: usize) -> Perm {
        debug_assert_ne!(u, v);
        if u < v {
            self.arcs.get(&(u, v)).copied().unwrap_or(Perm::Id)
        } else {
            self.arcs
                .get(&(v, u))
                .copied()
                .unwrap_or(Perm::Id)
                .inverse()
        }
    }

    /// Sets the permutation on the arc `(u, v)` (and its inverse on `(v, u)`).
    pub fn set(&mut self, u: usize, v: usize, p: Perm) {
        debug_assert_ne!(u, v);
        let (key, val) = if u < v { ((u, v), p) } else { ((v, u), p.inverse()) };
        if val == Perm::Id {
            self.arcs.remove(&key);
        } else {
            self.arcs.insert(key, val);
        }
    }

    /// The stored non-identity arcs, in `min -> max` direction.
    pub fn arcs(&self) -> impl Iterator<Item = (&(usize, usize), &Perm)> {
        self.arcs.iter()
    }
}

/// A plane graph with an S3-signature and an optional boundary precoloring.
#[derive(Debug, Clone)]
pub struct SignedPlaneGraph {
    /// The underlying embedded graph.
    pub graph: PlaneGraph,
    /// The signature.
    pub sig: Signature,
    /// Precolored vertices (colors in `{0, 1, 2}`).
    pub precolor: BTreeMap<usize, u8>,
}

impl SignedPlaneGraph {
    /// Wraps a plane graph with the straight signature and no precoloring.
    pub fn straight(graph: PlaneGraph) -> SignedPlaneGraph {
        SignedPlaneGraph {
            graph,
            sig: Signature::straight(),
            precolor: BTreeMap::new(),
        }
    }

    /// The permutation on the arc `(u, v)`.
    pub fn sigma(&self, u: usize, v: usize) -> Perm {
        self.sig.get(u, v)
    }

    /// Switches at `v` by `tau`: every arc into `v` becomes `tau . sigma`.
    pub fn switch(&mut self, v: usize, tau: Perm) {
        for u in self.graph.neighbors(v).to_vec() {
            let into = self.sig.get(u, v);
            self.sig.set(u, v, tau.compose(into));
        }
    }

    /// The ordered product of arc permutations along a closed walk
    /// `c[0] -> c[1] -> ... -> c[0]`.
    pub fn cycle_product(&self, cycle: &[usize]) -> Perm {
        let mut p = Perm::Id;
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            p = self.sigma(u, v).compose(p);
        }
        p
    }

    /// Whether the cycle is positive (its product is the identity).
    ///
    /// Positivity is invariant under switching and under the choice of
    /// starting vertex and direction.
    pub fn is_positive(&self, cycle: &[usize]) -> bool {
        self.cycle_product(cycle).is_identity()
    }

    /// Switches vertices so that every edge of the given acyclic edge set
    /// becomes straight. Edges must form a forest; the roots (smallest vertex
    /// of each tree) are left unswitched.
    ///
    /// Returns the switching permutation applied at each vertex.
    pub fn normalize_forest(&mut self, forest: &[(usize, usize)]) -> BTreeMap<usize, Perm> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in forest {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let mut applied: BTreeMap<usize, Perm> = BTreeMap::new();
        let mut seen: BTreeMap<usize, bool> = adj.keys().map(|&v| (v, false)).collect();
        let roots: Vec<usize> = adj.keys().copied().collect();
        for root in roots {
            if seen[&root] {
                continue;
            }
            seen.insert(root, true);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(p) = queue.pop_front() {
                for &v in adj[&p].clone().iter() {
                    if seen[&v] {
                        continue;
                    }
                    seen.insert(v, true);
                    let tau = self.sig.get(p, v).inverse();
                    self.switch(v, tau);
                    applied
                        .entry(v)
                        .and_modify(|t| *t = tau.compose(*t))
                        .or_insert(tau);
                    debug_assert!(self.sig.get(p, v).is_identity());
                    queue.push_back(v);
                }
            }
        }
        applied
    }

    /// Checks a full coloring for properness; returns the violated edges.
    pub fn properness_violations(&self, phi: &[u8]) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for u in 0..self.graph.n() {
            for &v in self.graph.neighbors(u) {
                if u < v && phi[v] == self.sigma(u, v).apply(phi[u]) {
                    bad.push((u, v));
                }
            }
        }
        bad
    }

    /// Whether `phi` is a proper coloring (also honoring the precoloring).
    pub fn is_proper(&self, phi: &[u8]) -> bool {
        if phi.len() != self.graph.n() || phi.iter().any(|&c| c > 2) {
            return false;
        }
        if self.precolor.iter().any(|(&v, &c)| phi[v] != c) {
            return false;
        }
        self.properness_violations(phi).is_empty()
    }

    /// The cover (L, M) of the signed graph: for each edge `uv` and color
    /// `c`, the cover has a matching edge `((u, c), (v, sigma(u, v)(c)))`.
    ///
    /// Proper colorings correspond exactly to independent transversals of
    /// the cover.
    pub fn cover_edges(&self) -> Vec<((usize, u8), (usize, u8))> {
        let mut edges = Vec::new();
        for u in 0..self.graph.n() {
            for &v in self.graph.neighbors(u) {
                if u < v {
                    for c in 0..3u8 {
                        edges.push(((u, c), (v, self.sigma(u, v).apply(c))));
                    }
                }
            }
        }
        edges
    }

    /// Whether the transversal picking `phi[v]` in each fiber is independent
    /// in the cover (no matching edge inside the transversal).
    pub fn transversal_is_independent(&self, phi: &[u8]) -> bool {
        self.cover_edges()
            .iter()
            .all(|&((u, cu), (v, cv))| !(phi[u] == cu && phi[v] == cv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::ALL_PERMS;
    use crate::planegraph::cycle_graph;

    fn signed_c5() -> SignedPlaneGraph {
        let mut sg = SignedPlaneGraph::straight(cycle_graph(5));
        sg.sig.set(0, 1, Perm::Swap01);
        sg.sig.set(3, 2, Perm::Rot1);
        sg
    }

    #[test]
    fn sigma_is_involutive_on_reversal() {
        let sg = signed_c5();
        for u in 0..5 {
            for &v in sg.graph.neighbors(u) {
                assert_eq!(sg.sigma(u, v), sg.sigma(v, u).inverse());
            }
        }
    }

    #[test]
    fn switching_preserves_cycle_positivity() {
        let cycle = vec![0, 1, 2, 3, 4];
        for &p in &ALL_PERMS {
            let mut sg = signed_c5();
            let before = sg.is_positive(&cycle);
            sg.switch(2, p);
            sg.switch(0, p.inverse());
            assert_eq!(sg.is_positive(&cycle), before);
        }
    }

    #[test]
    fn normalize_forest_straightens_a_spanning_tree() {
        let mut sg = signed_c5();
        let tree = vec![(0, 1), (1, 2), (2, 3), (3, 4)];
        let product_before = sg.cycle_product(&[0, 1, 2, 3, 4]);
        sg.normalize_forest(&tree);
        for &(u, v) in &tree {
            assert!(sg.sigma(u, v).is_identity());
        }
        // Positivity of the unique cycle is preserved.
        assert_eq!(
            sg.cycle_product(&[0, 1, 2, 3, 4]).is_identity(),
            product_before.is_identity()
        );
    }

    #[test]
    fn proper_colorings_match_cover_transversals() {
        let sg = signed_c5();
        let n = sg.graph.n();
        let mut phi = vec![0u8; n];
        loop {
            assert_eq!(sg.is_proper(&phi), sg.transversal_is_independent(&phi));
            // Next assignment in base 3.
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
    }

    #[test]
    fn cycle_product_direction_gives_inverse() {
        let sg = signed_c5();
        let forward = sg.cycle_product(&[0, 1, 2, 3, 4]);
        let backward = sg.cycle_product(&[0, 4, 3, 2, 1]);
        assert_eq!(forward.inverse(), backward);
    }
}
