//! Plane graphs given by rotation systems, with a designated outer face.
//!
//! A plane graph is stored as a simple graph together with, for each vertex,
//! the clockwise cyclic order of its neighbors. Faces are recovered by the
//! standard dart-tracing rule: after arriving at `v` along the dart `(u, v)`,
//! the walk continues along `(v, w)` where `w` is the successor of `u` in the
//! rotation at `v`. The constructor checks that the rotation system is
//! consistent, the graph is connected, and Euler's formula
//! `n - m + |F| = 2` holds, so every value of this type is a genuine sphere
//! embedding. One face, given by a dart on its boundary, is designated as the
//! outer face `f0`.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

/// Errors raised while building or editing a plane graph.
#[derive(Debug, Error)]
pub enum GraphError {
    /// A rotation list mentions a vertex id out of range.
    #[error("vertex {0} mentions neighbor {1}, which is out of range")]
    BadNeighbor(usize, usize),
    /// A rotation list contains a self-loop or a repeated neighbor.
    #[error("rotation of vertex {0} has a self-loop or repeated neighbor")]
    BadRotation(usize),
    /// Adjacency is not symmetric.
    #[error("edge ({0}, {1}) is present in one rotation only")]
    Asymmetric(usize, usize),
    /// The graph is not connected.
    #[error("graph is not connected")]
    Disconnected,
    /// The rotation system does not describe a sphere embedding.
    #[error("Euler check failed: n={n}, m={m}, faces={f} (n - m + f != 2)")]
    NotPlanar {
        /// Number of vertices.
        n: usize,
        /// Number of edges.
        m: usize,
        /// Number of traced faces.
        f: usize,
    },
    /// The dart designating the outer face does not exist.
    #[error("outer dart ({0}, {1}) is not a dart of the graph")]
    BadOuterDart(usize, usize),
    /// The graph has no vertices.
    #[error("graph is empty")]
    Empty,
}

/// A face of the embedding.
#[derive(Debug, Clone)]
pub struct Face {
    /// The boundary walk as a dart sequence; `darts[i].1 == darts[i+1].0`.
    pub darts: Vec<Dart>,
}

impl Face {
    /// The boundary walk as a vertex sequence (one entry per dart tail).
    pub fn walk(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.0).collect()
    }

    /// Face degree: the number of darts on the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    /// Whether the boundary walk is empty (never true for traced faces).
    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The distinct vertices on the boundary.
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.darts.iter().map(|d| d.0).collect()
    }

    /// Whether the boundary walk is a simple cycle (no repeated vertices).
    pub fn is_simple_cycle(&self) -> bool {
        self.vertex_set().len() == self.darts.len()
    }

    /// The undirected edge set of the boundary, as `min <= max` pairs.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.darts
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }
}

/// A maximal path of 2-vertices, together with its attachment data.
#[derive(Debug, Clone)]
pub struct StringRecord {
    /// The 2-vertices of the string, in path order.
    pub vertices: Vec<usize>,
    /// The (at most two) non-2-vertices adjacent to the string ends.
    pub ends: Vec<usize>,
    /// Faces other than the outer face whose boundary contains the string.
    pub faces: Vec<usize>,
}

/// A cycle together with the side of the embedding it encloses.
#[derive(Debug, Clone)]
pub struct SeparatingCycle {
    /// The cycle as a vertex sequence.
    pub cycle: Vec<usize>,
    /// Faces strictly inside (on the side not containing the outer face).
    pub interior_faces: Vec<usize>,
    /// Vertices strictly inside the cycle.
    pub interior_vertices: Vec<usize>,
    /// Vertices strictly outside the cycle.
    pub exterior_vertices: Vec<usize>,
}

/// Findings of [`PlaneGraph::boundary_audit`].
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct BoundaryAudit {
    /// Length of the outer boundary walk.
    pub boundary_len: usize,
    /// Whether the outer walk is a simple cycle.
    pub boundary_is_cycle: bool,
    /// Whether the boundary walk is longer than 12.
    pub over_twelve: bool,
    /// Chords of the boundary: edges joining two external vertices that are
    /// not edges of the boundary walk.
    pub chords: Vec<(usize, usize)>,
    /// Cut vertices of the graph.
    pub cut_vertices: Vec<usize>,
    /// Internal vertices of degree at most 2.
    pub internal_low_degree: Vec<usize>,
}

impl BoundaryAudit {
    /// Whether the instance is in scope for the boundary-extension theorem.
    pub fn is_clean(&self) -> bool {
        self.boundary_is_cycle
            && !self.over_twelve
            && self.chords.is_empty()
            && self.cut_vertices.is_empty()
            && self.internal_low_degree.is_empty()
    }
}

/// A connected simple plane graph with clockwise rotations and an outer face.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rot: Vec<Vec<usize>>,
    faces: Vec<Face>,
    face_of: BTreeMap<Dart, usize>,
    outer: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise rotations and an outer-face dart.
    ///
    /// `rot[v]` lists the neighbors of `v` in clockwise order. The outer face
    /// is the face whose boundary walk contains the dart `outer_dart`.
    pub fn new(rot: Vec<Vec<usize>>, outer_dart: Dart) -> Result<PlaneGraph, GraphError> {
        let n = rot.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (v, nbrs) in rot.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::BadNeighbor(v, u));
                }
                if u == v || !seen.insert(u) {
                    return Err(GraphError::BadRotation(v));
                }
            }
        }
        for v in 0..n {
            for &u in &rot[v] {
                if !rot[u].contains(&v) {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        // Connectivity.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::Disconnected);
        }
        let m: usize = rot.iter().map(|r| r.len()).sum::<usize>() / 2;

        // Trace faces.
        let mut face_of: BTreeMap<Dart, usize> = BTreeMap::new();
        let mut faces: Vec<Face> = Vec::new();
        for v in 0..n {
            for &u in &rot[v] {
                let start = (v, u);
                if face_of.contains_key(&start) {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut dart = start;
                loop {
                    walk.push(dart);
                    face_of.insert(dart, id);
                    let (a, b) = dart;
                    let i = rot[b].iter().position(|&x| x == a).expect("symmetric");
                    let w = rot[b][(i + 1) % rot[b].len()];
                    dart = (b, w);
                    if dart == start {
                        break;
                    }
                }
                faces.push(Face { darts: walk });
            }
        }
        if m > 0 && n as i64 - m as i64 + faces.len() as i64 != 2 {
            return Err(GraphError::NotPlanar {
                n,
                m,
                f: faces.len(),
            });
        }
        let outer = *face_of
            .get(&outer_dart)
            .ok_or(GraphError::BadOuterDart(outer_dart.0, outer_dart.1))?;
        Ok(PlaneGraph {
            rot,
            faces,
            face_of,
            outer,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.rot.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// The full rotation system.
    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    /// Whether `uv` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    /// All faces of the embedding.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The index of the outer face.
    pub fn outer_face(&self) -> usize {
        self.outer
    }

    /// The face containing the dart `(u, v)` on its boundary walk.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.face_of.get(&(u, v)).copied()
    }

    /// Faces incident with `v`, one per dart out of `v` (with multiplicity).
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        self.rot[v].iter().map(|&u| self.face_of[&(v, u)]).collect()
    }

    /// Whether `v` lies on the outer face boundary.
    pub fn is_external(&self, v: usize) -> bool {
        self.faces_at(v).contains(&self.outer)
    }

    /// Whether `v` is an internal vertex (not on the outer boundary).
    pub fn is_internal(&self, v: usize) -> bool {
        !self.is_external(v)
    }

    /// The vertices on the outer boundary, in walk order.
    pub fn boundary_walk(&self) -> Vec<usize> {
        self.faces[self.outer].walk()
    }

    /// All cycles of length at most `max_len`, as canonical vertex sequences.
    ///
    /// Each cycle is reported once: it starts at its smallest vertex and its
    /// second entry is smaller than its last.
    pub fn cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            path.push(s);
            on_path[s] = true;
            self.cycle_dfs(s, s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out
    }

    fn cycle_dfs(
        &self,
        s: usize,
        v: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for &u in &self.rot[v] {
            if u == s && path.len() >= 3 {
                if path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
                continue;
            }
            if u <= s || on_path[u] || path.len() >= max_len {
                continue;
            }
            path.push(u);
            on_path[u] = true;
            self.cycle_dfs(s, u, max_len, path, on_path, out);
            on_path[u] = false;
            path.pop();
        }
    }

    /// Cycles of forbidden length 4, 6 or 8 (empty iff the graph is in scope).
    pub fn forbidden_cycles(&self) -> Vec<Vec<usize>> {
        self.cycles(8)
            .into_iter()
            .filter(|c| matches!(c.len(), 4 | 6 | 8))
            .collect()
    }

    /// Whether the cycle (as a vertex sequence) bounds a face.
    pub fn is_facial(&self, cycle: &[usize]) -> bool {
        let edges: BTreeSet<(usize, usize)> = cycle_edges(cycle).into_iter().collect();
        self.faces
            .iter()
            .any(|f| f.len() == cycle.len() && f.edge_set() == edges)
    }

    /// Cycles of length 3, 5, 7 or 9 that do not bound a face.
    ///
    /// In a minimal counterexample all such cycles are facial; non-facial
    /// ones witness a separating short cycle.
    pub fn facial_cycle_violations(&self) -> Vec<Vec<usize>> {
        self.cycles(9)
            .into_iter()
            .filter(|c| matches!(c.len(), 3 | 5 | 7 | 9) && !self.is_facial(c))
            .collect()
    }

    /// Splits the faces along `cycle` and reports both sides.
    ///
    /// Returns `None` if the walk is not a cycle of this graph. The interior
    /// is the side not containing the outer face.
    pub fn sides_of_cycle(&self, cycle: &[usize]) -> Option<SeparatingCycle> {
        if cycle.len() < 3 {
            return None;
        }
        let edges: BTreeSet<(usize, usize)> = cycle_edges(cycle).into_iter().collect();
        for &(u, v) in &edges {
            if !self.has_edge(u, v) {
                return None;
            }
        }
        let start = self.face_of[&(cycle[0], cycle[1])];
        let region_a = self.grow_region(start, &edges);
        let other = self.face_of[&(cycle[1], cycle[0])];
        if region_a.contains(&other) {
            // The walk does not separate the embedding (not a simple cycle).
            return None;
        }
        let region_b = self.grow_region(other, &edges);
        let (interior, _exterior) = if region_a.contains(&self.outer) {
            (region_b, region_a)
        } else {
            (region_a, region_b)
        };
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let mut interior_vertices: BTreeSet<usize> = BTreeSet::new();
        for &f in &interior {
            for v in self.faces[f].vertex_set() {
                if !on_cycle.contains(&v) {
                    interior_vertices.insert(v);
                }
            }
        }
        let exterior_vertices: Vec<usize> = (0..self.n())
            .filter(|v| !on_cycle.contains(v) && !interior_vertices.contains(v))
            .collect();
        Some(SeparatingCycle {
            cycle: cycle.to_vec(),
            interior_faces: interior.into_iter().collect(),
            interior_vertices: interior_vertices.into_iter().collect(),
            exterior_vertices,
        })
    }

    fn grow_region(&self, start: usize, barrier: &BTreeSet<(usize, usize)>) -> BTreeSet<usize> {
        let mut region = BTreeSet::new();
        let mut stack = vec![start];
        region.insert(start);
        while let Some(f) = stack.pop() {
            for &(u, v) in &self.faces[f].darts {
                let key = (u.min(v), u.max(v));
                if barrier.contains(&key) {
                    continue;
                }
                let g = self.face_of[&(v, u)];
                if region.insert(g) {
                    stack.push(g);
                }
            }
        }
        region
    }

    /// Cycles of length at most `max_len` with vertices on both sides.
    pub fn separating_cycles(&self, max_len: usize) -> Vec<SeparatingCycle> {
        self.cycles(max_len)
            .into_iter()
            .filter_map(|c| self.sides_of_cycle(&c))
            .filter(|s| !s.interior_vertices.is_empty() && !s.exterior_vertices.is_empty())
            .collect()
    }

    /// Maximal strings of 2-vertices.
    pub fn strings(&self) -> Vec<StringRecord> {
        let n = self.n();
        let is_two = |v: usize| self.degree(v) == 2;
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if !is_two(v) || visited[v] {
                continue;
            }
            // Walk to one end of the run of 2-vertices.
            let mut chain = vec![v];
            visited[v] = true;
            for &dir in &self.rot[v].clone() {
                let mut prev = v;
                let mut cur = dir;
                while is_two(cur) && !visited[cur] {
                    visited[cur] = true;
                    if dir == self.rot[v][0] {
                        chain.insert(0, cur);
                    } else {
                        chain.push(cur);
                    }
                    let next = *self.rot[cur].iter().find(|&&x| x != prev).expect("deg 2");
                    prev = cur;
                    cur = next;
                }
            }
            let mut ends = Vec::new();
            for end_side in [chain[0], chain[chain.len() - 1]] {
                for &u in &self.rot[end_side] {
                    if !is_two(u) {
                        ends.push(u);
                    }
                }
            }
            ends.sort_unstable();
            ends.dedup();
            // Faces (other than the outer face) containing every string vertex.
            let mut common: Option<BTreeSet<usize>> = None;
            for &x in &chain {
                let fs: BTreeSet<usize> = self.faces_at(x).into_iter().collect();
                common = Some(match common {
                    None => fs,
                    Some(c) => c.intersection(&fs).copied().collect(),
                });
            }
            let faces: Vec<usize> = common
                .unwrap_or_default()
                .into_iter()
                .filter(|&f| f != self.outer)
                .collect();
            out.push(StringRecord {
                vertices: chain,
                ends,
                faces,
            });
        }
        out
    }

    /// Strings that are too long for a face they lie on (violating the
    /// structural bound `t < floor((k-1)/2)` for `k`-faces other than `f0`).
    pub fn string_length_violations(&self) -> Vec<(StringRecord, usize)> {
        let mut out = Vec::new();
        for s in self.strings() {
            if s.ends.len() < 2 {
                // A run of 2-vertices wrapping the whole graph (or ending in
                // a single vertex) is not a string in the structural sense.
                continue;
            }
            for &f in &s.faces {
                let k = self.faces[f].len();
                if s.vertices.len() >= (k.saturating_sub(1)) / 2 {
                    out.push((s.clone(), f));
                }
            }
        }
        out
    }

    /// Cut vertices (articulation points).
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = vec![false; n];
        let mut timer = 0usize;
        // Iterative DFS to avoid recursion limits on long paths.
        let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (v, parent, next index)
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.rot[v].len() {
                    let u = self.rot[v][*idx];
                    *idx += 1;
                    if u == parent {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root] = true;
            }
        }
        (0..n).filter(|&v| cut[v]).collect()
    }

    /// Audits the designated boundary against the scope assumptions.
    pub fn boundary_audit(&self) -> BoundaryAudit {
        let walk = self.boundary_walk();
        let boundary_is_cycle = self.faces[self.outer].is_simple_cycle();
        let boundary_edges = self.faces[self.outer].edge_set();
        let external: BTreeSet<usize> = walk.iter().copied().collect();
        let mut chords = Vec::new();
        for &u in &external {
            for &v in &self.rot[u] {
                if u < v && external.contains(&v) && !boundary_edges.contains(&(u, v)) {
                    chords.push((u, v));
                }
            }
        }
        let internal_low_degree: Vec<usize> = (0..self.n())
            .filter(|&v| self.is_internal(v) && self.degree(v) <= 2)
            .collect();
        BoundaryAudit {
            boundary_len: walk.len(),
            boundary_is_cycle,
            over_twelve: walk.len() > 12,
            chords,
            cut_vertices: self.cut_vertices(),
            internal_low_degree,
        }
    }
}

/// The undirected edges of a cyclic vertex sequence.
pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|i| {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            (u.min(v), u.max(v))
        })
        .collect()
}

/// Convenience constructor: a plane cycle `0-1-...-(n-1)-0`.
///
/// The outer face is the one traced from the dart `(0, n-1)`, so the cycle
/// `0,1,...,n-1` reads clockwise on the outer boundary.
pub fn cycle_graph(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let rot: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect();
    PlaneGraph::new(rot, (0, n - 1)).expect("cycle is planar")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        // Rotations from the module contract: faces [0,1,2] and [1,0,2].
        PlaneGraph::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], (1, 0)).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert_eq!(g.boundary_walk().len(), 3);
    }

    #[test]
    fn k4_embedding_has_four_triangles() {
        // Planar K4: vertex 3 in the middle of triangle 0,1,2.
        let rot = vec![
            vec![2, 3, 1],
            vec![0, 3, 2],
            vec![1, 3, 0],
            vec![2, 1, 0],
        ];
        let g = PlaneGraph::new(rot, (1, 0)).unwrap();
        assert_eq!(g.faces().len(), 4);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!(g.is_internal(3));
        assert!(g.is_external(0));
        // K4 has 4 triangles and 3 four-cycles.
        assert_eq!(g.cycles(3).len(), 4);
        assert_eq!(g.forbidden_cycles().len(), 3);
    }

    #[test]
    fn path_traces_one_face() {
        let g = PlaneGraph::new(vec![vec![1], vec![0, 2], vec![1]], (0, 1)).unwrap();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.faces()[0].len(), 4);
    }

    #[test]
    fn rejects_asymmetric_rotation() {
        let err = PlaneGraph::new(vec![vec![1], vec![]], (0, 1));
        assert!(matches!(err, Err(GraphError::Asymmetric(0, 1))));
    }

    #[test]
    fn rejects_disconnected() {
        let err = PlaneGraph::new(vec![vec![1], vec![0], vec![3], vec![2]], (0, 1));
        assert!(matches!(err, Err(GraphError::Disconnected)));
    }

    #[test]
    fn rejects_nonplanar_rotation() {
        // K4 with one rotation flipped, which raises the genus.
        let rot = vec![
            vec![1, 3, 2],
            vec![0, 3, 2],
            vec![1, 3, 0],
            vec![2, 1, 0],
        ];
        let res = PlaneGraph::new(rot, (0, 1));
        assert!(matches!(res, Err(GraphError::NotPlanar { .. })));
    }

    #[test]
    fn cycle_enumeration_counts_c5() {
        let g = cycle_graph(5);
        assert_eq!(g.cycles(12).len(), 1);
        assert_eq!(g.cycles(4).len(), 0);
        assert!(g.forbidden_cycles().is_empty());
    }

    #[test]
    fn separating_triangle_is_detected() {
        // Triangle 0,1,2 with an internal vertex 3 (K4) has no separating
        // 3-cycle with both sides nonempty... the outer triangle separates 3
        // from nothing external. Add a pendant outside to create one.
        let rot = vec![
            vec![1, 3, 2, 4],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
            vec![0],
        ];
        let g = PlaneGraph::new(rot, (4, 0)).unwrap();
        let seps = g.separating_cycles(12);
        assert!(seps
            .iter()
            .any(|s| s.cycle.len() == 3 && s.interior_vertices == vec![3]));
    }

    #[test]
    fn strings_on_a_theta_like_graph() {
        // A 9-cycle with one chordal path: vertices 0..9, cycle 0-..-8-0,
        // plus a path 0-9-4 through the middle.
        let mut rot: Vec<Vec<usize>> = (0..9)
            .map(|v| vec![(v + 1) % 9, (v + 8) % 9])
            .collect();
        rot[0] = vec![1, 9, 8];
        rot[4] = vec![5, 9, 3];
        rot.push(vec![0, 4]);
        let g = PlaneGraph::new(rot, (0, 8)).unwrap();
        let strings = g.strings();
        // Runs of 2-vertices: 1-2-3, 5-6-7-8, and 9.
        assert_eq!(strings.len(), 3);
        let lens: BTreeSet<usize> = strings.iter().map(|s| s.vertices.len()).collect();
        assert_eq!(lens, BTreeSet::from([1, 3, 4]));
        for s in &strings {
            assert_eq!(s.ends, vec![0, 4]);
        }
    }

    #[test]
    fn boundary_audit_flags_chords_and_cuts() {
        // Square with a chord 0-2 drawn inside.
        let rot = vec![vec![3, 2, 1], vec![0, 2], vec![3, 1, 0], vec![2, 0]];
        let g = PlaneGraph::new(rot, (1, 0)).unwrap();
        let audit = g.boundary_audit();
        assert_eq!(audit.chords, vec![(0, 2)]);
        assert!(audit.cut_vertices.is_empty());
        assert!(!audit.is_clean());
    }
}
