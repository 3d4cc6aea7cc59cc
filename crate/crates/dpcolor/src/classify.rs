//! Structural classification: vertex roles, snowflakes and nice 9-faces.
//!
//! Terminology (everything is relative to the designated outer face `f0`):
//! a `3Δ`-vertex is an internal 3-vertex on a 3-face, refined into `3Δ+`
//! (positive face with at least two `3Δ`-vertices), `3Δ-` (negative face,
//! at least two), and `3Δ°` (the only one on its face); a `3Δ*`-vertex is a
//! `3Δ°`-vertex whose outer neighbor is not bad; a bad vertex lies on a
//! positive face whose three vertices are all internal 3-vertices; a
//! `4⋈`-vertex is an internal 4-vertex on two 3-faces sharing no edge; a
//! C-vertex is anything else of degree at least 3.
//!
//! A snowflake is a union of internal 3-faces closed under `4⋈`-vertices in
//! which any two nonadjacent vertices are joined by a path whose interior
//! vertices are all `4⋈`-vertices. Components that fail the conditions (or
//! contain a 2-vertex, which the charge bookkeeping cannot model) are kept
//! and reported as rejected rather than silently dropped.

use crate::signing::SignedPlaneGraph;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Refinement of the `3Δ` role by the sign of the unique 3-face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriKind {
    /// `3Δ+`: positive face with at least two `3Δ`-vertices.
    Plus,
    /// `3Δ-`: negative face with at least two `3Δ`-vertices.
    Minus,
    /// `3Δ°`: the only `3Δ`-vertex on its face.
    Lone,
}

/// The primary role of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Role {
    /// A 2-vertex (or a vertex of degree below 2 in degenerate input).
    Two,
    /// A `3Δ`-vertex with its sign refinement.
    TriDelta(TriKind),
    /// A `4⋈`-vertex.
    FourBowtie,
    /// A C-vertex: none of the above.
    C,
}

/// Everything the classifier knows about one vertex.
#[derive(Debug, Clone, Serialize)]
pub struct VertexInfo {
    /// Primary role.
    pub role: Role,
    /// Whether the vertex lies on the outer boundary.
    pub external: bool,
    /// Whether the vertex is on a positive face of three internal 3-vertices.
    pub bad: bool,
    /// Whether the vertex is a `3Δ*`-vertex (lone, outer neighbor not bad).
    pub star: bool,
    /// The 3-faces (other than the outer face) containing this vertex.
    pub tri_faces: Vec<usize>,
    /// For a `3Δ`-vertex, the neighbor off its 3-face.
    pub outer_neighbor: Option<usize>,
}

/// Why a candidate union of 3-faces is not a snowflake.
#[derive(Debug, Clone, Serialize)]
pub enum RejectReason {
    /// Two nonadjacent vertices that are not `⋈`-connected.
    NotBowtieConnected(usize, usize),
    /// A `4⋈`-vertex with a 3-face outside the component.
    OpenBowtie(usize),
    /// The component contains a 2-vertex, which the stats cannot model.
    ContainsTwoVertex(usize),
}

/// A maximal union of internal 3-faces that failed the snowflake conditions.
#[derive(Debug, Clone, Serialize)]
pub struct RejectedComponent {
    /// The faces of the component.
    pub faces: Vec<usize>,
    /// The vertices of the component.
    pub vertices: Vec<usize>,
    /// The first violated condition found.
    pub reason: RejectReason,
}

/// An accepted snowflake together with its charge statistics.
#[derive(Debug, Clone, Serialize)]
pub struct Snowflake {
    /// The 3-faces `T(S)`.
    pub faces: Vec<usize>,
    /// All vertices of the snowflake.
    pub vertices: Vec<usize>,
    /// The `3Δ`-vertices of `S`.
    pub tri_delta: Vec<usize>,
    /// The `3Δ+`-vertices of `S`.
    pub tri_plus: Vec<usize>,
    /// The `3Δ-`-vertices of `S`.
    pub tri_minus: Vec<usize>,
    /// The `3Δ°`-vertices of `S`.
    pub tri_lone: Vec<usize>,
    /// The `3Δ*`-vertices of `S`.
    pub tri_star: Vec<usize>,
    /// The `4⋈`-vertices of `S`.
    pub bowtie: Vec<usize>,
    /// The C-vertices of `S`.
    pub c_vertices: Vec<usize>,
    /// `C1(S)`: external 3-vertices and external 4-vertices on two
    /// non-adjacent 3-faces.
    pub c1: Vec<usize>,
    /// `C2(S) = C(S) \ C1(S)`.
    pub c2: Vec<usize>,
    /// For each C-vertex, the number of 3-faces of `S` containing it.
    pub t_of: BTreeMap<usize, usize>,
    /// Sum of `t(S, u)` over `C1(S)`.
    pub t1: usize,
    /// Sum of `t(S, u)` over `C2(S)`.
    pub t2: usize,
}

impl Snowflake {
    /// The face-intersection graph `H`: vertices are the faces of `S`, and
    /// two faces are joined when they share a `4⋈`-vertex. Returned as an
    /// edge list over positions in `self.faces`.
    pub fn h_graph_edges(&self, cls: &Classification) -> Vec<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for &w in &self.bowtie {
            let fs = &cls.vertices[w].tri_faces;
            for i in 0..fs.len() {
                for j in i + 1..fs.len() {
                    let a = self.faces.iter().position(|&f| f == fs[i]);
                    let b = self.faces.iter().position(|&f| f == fs[j]);
                    if let (Some(a), Some(b)) = (a, b) {
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        edges.into_iter().collect()
    }

    /// The counting identity `3|T| = |3Δ| + 2|4⋈| + t1 + t2`.
    pub fn eq3_holds(&self) -> bool {
        3 * self.faces.len() == self.tri_delta.len() + 2 * self.bowtie.len() + self.t1 + self.t2
    }

    /// The connectivity inequality `|4⋈| >= |T| - 1`.
    pub fn eq4_holds(&self) -> bool {
        self.bowtie.len() + 1 >= self.faces.len()
    }

    /// Both sign-refined `3Δ` classes have even cardinality. A snowflake
    /// that is a single (3,3,3)-face is out of scope: its face contributes
    /// three same-sign vertices and is treated as its own case.
    pub fn evenness_holds(&self) -> bool {
        if self.faces.len() == 1 && self.tri_delta.len() == 3 {
            return true;
        }
        self.tri_plus.len() % 2 == 0 && self.tri_minus.len() % 2 == 0
    }
}

/// One nice vertex of a nice 9-face.
#[derive(Debug, Clone, Serialize)]
pub struct NiceVertex {
    /// The nice vertex.
    pub vertex: usize,
    /// `true` for 2-nice (clause (1)), `false` for 1-nice.
    pub two_nice: bool,
}

/// A 9-face matching one of the nice-face clauses.
#[derive(Debug, Clone, Serialize)]
pub struct NiceFace {
    /// The face id.
    pub face: usize,
    /// Nice vertices, deduplicated per vertex (2-nice wins over 1-nice).
    pub nice_vertices: Vec<NiceVertex>,
    /// Index into `Classification::snowflakes` of the related snowflake,
    /// if the anchor vertex lies in an accepted snowflake.
    pub related: Option<usize>,
    /// Whether different clause matches disagreed on the related snowflake,
    /// or the anchor's component was rejected.
    pub unmodeled: bool,
}

/// The full classification of a signed plane graph.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    /// Per-vertex information, indexed by vertex id.
    pub vertices: Vec<VertexInfo>,
    /// Accepted snowflakes.
    pub snowflakes: Vec<Snowflake>,
    /// Rejected components of linked internal 3-faces.
    pub rejected: Vec<RejectedComponent>,
    /// Nice 9-faces.
    pub nice_faces: Vec<NiceFace>,
}

impl Classification {
    /// Whether `v` is a `3Δ`-vertex.
    pub fn is_tri_delta(&self, v: usize) -> bool {
        matches!(self.vertices[v].role, Role::TriDelta(_))
    }

    /// The accepted snowflake containing vertex `v` as a face member, if any.
    pub fn snowflake_of_vertex(&self, v: usize) -> Option<usize> {
        self.snowflakes.iter().position(|s| s.vertices.contains(&v))
    }

    /// The accepted snowflake containing face `f`, if any.
    pub fn snowflake_of_face(&self, f: usize) -> Option<usize> {
        self.snowflakes.iter().position(|s| s.faces.contains(&f))
    }
}

/// Classifies all vertices, snowflakes and nice faces of `sg`.
pub fn classify(sg: &SignedPlaneGraph) -> Classification {
    let g = &sg.graph;
    let n = g.n();
    let outer = g.outer_face();

    // 3-faces other than the outer face, with their positivity.
    let tri_faces: Vec<usize> = (0..g.faces().len())
        .filter(|&f| f != outer && g.faces()[f].len() == 3 && g.faces()[f].is_simple_cycle())
        .collect();
    let positive: BTreeMap<usize, bool> = tri_faces
        .iter()
        .map(|&f| (f, sg.is_positive(&g.faces()[f].walk())))
        .collect();

    let external: Vec<bool> = (0..n).map(|v| g.is_external(v)).collect();
    let tri_faces_of: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut fs: Vec<usize> = g
                .faces_at(v)
                .into_iter()
                .filter(|f| tri_faces.contains(f))
                .collect();
            fs.sort_unstable();
            fs.dedup();
            fs
        })
        .collect();

    // Bad vertices: on a positive face of three internal 3-vertices.
    let is_333 = |f: usize| {
        g.faces()[f]
            .walk()
            .iter()
            .all(|&v| !external[v] && g.degree(v) == 3)
    };
    let bad: Vec<bool> = (0..n)
        .map(|v| {
            tri_faces_of[v]
                .iter()
                .any(|&f| positive[&f] && is_333(f))
        })
        .collect();

    // First pass: raw roles (3Δ membership needed before sign refinement).
    let is_tri = |v: usize| !external[v] && g.degree(v) == 3 && !tri_faces_of[v].is_empty();
    let non_adjacent = |f1: usize, f2: usize| {
        g.faces()[f1]
            .edge_set()
            .intersection(&g.faces()[f2].edge_set())
            .next()
            .is_none()
    };
    let is_bowtie = |v: usize| {
        if external[v] || g.degree(v) != 4 {
            return false;
        }
        let fs = &tri_faces_of[v];
        (0..fs.len()).any(|i| (i + 1..fs.len()).any(|j| non_adjacent(fs[i], fs[j])))
    };

    let mut vertices: Vec<VertexInfo> = (0..n)
        .map(|v| {
            let role = if g.degree(v) <= 2 {
                Role::Two
            } else if is_tri(v) {
                // Refined below once all 3Δ-vertices are known.
                Role::TriDelta(TriKind::Lone)
            } else if is_bowtie(v) {
                Role::FourBowtie
            } else {
                Role::C
            };
            VertexInfo {
                role,
                external: external[v],
                bad: bad[v],
                star: false,
                tri_faces: tri_faces_of[v].clone(),
                outer_neighbor: None,
            }
        })
        .collect();

    // Second pass: sign refinement and outer neighbors for 3Δ-vertices.
    for v in 0..n {
        if !matches!(vertices[v].role, Role::TriDelta(_)) {
            continue;
        }
        let f = vertices[v].tri_faces[0];
        let walk = g.faces()[f].walk();
        let mates = walk
            .iter()
            .filter(|&&u| matches!(vertices[u].role, Role::TriDelta(_)))
            .count();
        let kind = if mates < 2 {
            TriKind::Lone
        } else if positive[&f] {
            TriKind::Plus
        } else {
            TriKind::Minus
        };
        vertices[v].role = Role::TriDelta(kind);
        let on_face: BTreeSet<usize> = walk.iter().copied().collect();
        vertices[v].outer_neighbor = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|u| !on_face.contains(u));
    }
    for v in 0..n {
        if let Role::TriDelta(TriKind::Lone) = vertices[v].role {
            if let Some(u) = vertices[v].outer_neighbor {
                vertices[v].star = !vertices[u].bad;
            }
        }
    }

    // Link internal 3-faces sharing a ⋈-vertex and split into components.
    let mut face_pos: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &f) in tri_faces.iter().enumerate() {
        face_pos.insert(f, i);
    }
    let mut dsu: Vec<usize> = (0..tri_faces.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for v in 0..n {
        if vertices[v].role == Role::FourBowtie {
            let fs = &vertices[v].tri_faces;
            for w in fs.windows(2) {
                let a = find(&mut dsu, face_pos[&w[0]]);
                let b = find(&mut dsu, face_pos[&w[1]]);
                dsu[a] = b;
            }
        }
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..tri_faces.len() {
        let r = find(&mut dsu, i);
        components.entry(r).or_default().push(tri_faces[i]);
    }

    let mut snowflakes = Vec::new();
    let mut rejected = Vec::new();
    for faces in components.into_values() {
        let mut vset: BTreeSet<usize> = BTreeSet::new();
        for &f in &faces {
            vset.extend(g.faces()[f].vertex_set());
        }
        let verts: Vec<usize> = vset.iter().copied().collect();
        match check_snowflake(sg, &vertices, &faces, &vset) {
            Err(reason) => rejected.push(RejectedComponent {
                faces,
                vertices: verts,
                reason,
            }),
            Ok(()) => {
                snowflakes.push(build_snowflake(&vertices, faces, verts));
            }
        }
    }

    let nice_faces = find_nice_faces(sg, &vertices, &snowflakes, &rejected);

    Classification {
        vertices,
        snowflakes,
        rejected,
        nice_faces,
    }
}

fn check_snowflake(
    sg: &SignedPlaneGraph,
    vertices: &[VertexInfo],
    faces: &[usize],
    vset: &BTreeSet<usize>,
) -> Result<(), RejectReason> {
    let g = &sg.graph;
    for &v in vset {
        if vertices[v].role == Role::Two {
            return Err(RejectReason::ContainsTwoVertex(v));
        }
        if vertices[v].role == Role::FourBowtie
            && vertices[v].tri_faces.iter().any(|f| !faces.contains(f))
        {
            return Err(RejectReason::OpenBowtie(v));
        }
    }
    // ⋈-connectivity of all nonadjacent vertex pairs: BFS where interior
    // vertices must be 4⋈-vertices.
    let verts: Vec<usize> = vset.iter().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        let mut reach: BTreeSet<usize> = BTreeSet::new();
        let mut queue = VecDeque::from([u]);
        reach.insert(u);
        while let Some(x) = queue.pop_front() {
            if x != u && vertices[x].role != Role::FourBowtie {
                continue; // reached, but cannot pass through
            }
            for &y in g.neighbors(x) {
                if reach.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        for &v in &verts[i + 1..] {
            if !g.has_edge(u, v) && !reach.contains(&v) {
                return Err(RejectReason::NotBowtieConnected(u, v));
            }
        }
    }
    Ok(())
}

fn build_snowflake(vertices: &[VertexInfo], faces: Vec<usize>, verts: Vec<usize>) -> Snowflake {
    let mut s = Snowflake {
        faces,
        vertices: verts.clone(),
        tri_delta: vec![],
        tri_plus: vec![],
        tri_minus: vec![],
        tri_lone: vec![],
        tri_star: vec![],
        bowtie: vec![],
        c_vertices: vec![],
        c1: vec![],
        c2: vec![],
        t_of: BTreeMap::new(),
        t1: 0,
        t2: 0,
    };
    for &v in &verts {
        match vertices[v].role {
            Role::TriDelta(kind) => {
                s.tri_delta.push(v);
                match kind {
                    TriKind::Plus => s.tri_plus.push(v),
                    TriKind::Minus => s.tri_minus.push(v),
                    TriKind::Lone => {
                        s.tri_lone.push(v);
                        if vertices[v].star {
                            s.tri_star.push(v);
                        }
                    }
                }
            }
            Role::FourBowtie => s.bowtie.push(v),
            Role::C => {
                s.c_vertices.push(v);
                let t = vertices[v]
                    .tri_faces
                    .iter()
                    .filter(|f| s.faces.contains(f))
                    .count();
                s.t_of.insert(v, t);
                // C1/C2 split is refined by `refine_c_classes`.
                s.c2.push(v);
                s.t2 += t;
            }
            Role::Two => {}
        }
    }
    s
}

/// Refines `C1`/`C2` membership, which needs host degrees.
fn refine_c_classes(sg: &SignedPlaneGraph, s: &mut Snowflake, vertices: &[VertexInfo]) {
    let g = &sg.graph;
    let non_adjacent = |f1: usize, f2: usize| {
        g.faces()[f1]
            .edge_set()
            .intersection(&g.faces()[f2].edge_set())
            .next()
            .is_none()
    };
    s.c1.clear();
    s.c2.clear();
    s.t1 = 0;
    s.t2 = 0;
    for &v in &s.c_vertices.clone() {
        let info = &vertices[v];
        let fs = &info.tri_faces;
        let two_nonadj = (0..fs.len())
            .any(|i| (i + 1..fs.len()).any(|j| non_adjacent(fs[i], fs[j])));
        let in_c1 = info.external
            && (g.degree(v) == 3 || (g.degree(v) == 4 && two_nonadj));
        let t = s.t_of[&v];
        if in_c1 {
            s.c1.push(v);
            s.t1 += t;
        } else {
            s.c2.push(v);
            s.t2 += t;
        }
    }
}

fn find_nice_faces(
    sg: &SignedPlaneGraph,
    vertices: &[VertexInfo],
    snowflakes: &[Snowflake],
    rejected: &[RejectedComponent],
) -> Vec<NiceFace> {
    let g = &sg.graph;
    let mut out = Vec::new();
    for (fid, face) in g.faces().iter().enumerate() {
        if fid == g.outer_face() || face.len() != 9 || !face.is_simple_cycle() {
            continue;
        }
        let walk = face.walk();
        // (vertex, two_nice, anchor) for every clause match over all
        // rotations and both directions.
        let mut hits: Vec<(usize, bool, usize)> = Vec::new();
        for rev in [false, true] {
            let mut w = walk.clone();
            if rev {
                w.reverse();
            }
            for r in 0..9 {
                let v = |i: usize| w[(r + i - 1) % 9]; // 1-based access
                let bow = |i: usize| vertices[v(i)].role == Role::FourBowtie;
                let tri = |i: usize| matches!(vertices[v(i)].role, Role::TriDelta(_));
                let bad = |i: usize| vertices[v(i)].bad;
                let four_plus_or_ext3 = |i: usize| {
                    g.degree(v(i)) >= 4
                        || (g.degree(v(i)) == 3 && vertices[v(i)].external)
                };
                // Clause (1).
                if bow(2) && bow(3) && bow(4) && bow(5) && tri(1) && tri(6) {
                    if g.degree(v(8)) >= 5 {
                        hits.push((v(8), true, v(4)));
                    }
                    for i in [7, 9] {
                        if four_plus_or_ext3(i) {
                            hits.push((v(i), true, v(4)));
                        }
                    }
                }
                // Clause (2).
                if bow(4) && tri(3) && tri(5) && bad(1) && bad(2) && bad(6) && bad(7) {
                    for i in [8, 9] {
                        if four_plus_or_ext3(i) {
                            hits.push((v(i), false, v(4)));
                        }
                    }
                }
                // Clause (3).
                if bow(4) && bow(5) && tri(3) && tri(6) && bad(1) && bad(2) && bad(7) && bad(8)
                    && four_plus_or_ext3(9)
                {
                    hits.push((v(9), false, v(4)));
                }
            }
        }
        if hits.is_empty() {
            continue;
        }
        // Deduplicate per vertex; 2-nice wins.
        let mut by_vertex: BTreeMap<usize, bool> = BTreeMap::new();
        for &(v, two, _) in &hits {
            let e = by_vertex.entry(v).or_insert(false);
            *e = *e || two;
        }
        // Related snowflake from anchors; flag disagreement or rejects.
        let mut related: BTreeSet<Option<usize>> = BTreeSet::new();
        let mut unmodeled = false;
        for &(_, _, anchor) in &hits {
            let s = snowflakes.iter().position(|s| s.vertices.contains(&anchor));
            if s.is_none()
                && rejected
                    .iter()
                    .any(|r| r.vertices.contains(&anchor))
            {
                unmodeled = true;
            }
            related.insert(s);
        }
        if related.len() > 1 {
            unmodeled = true;
        }
        let related = related.into_iter().next().flatten();
        out.push(NiceFace {
            face: fid,
            nice_vertices: by_vertex
                .into_iter()
                .map(|(vertex, two_nice)| NiceVertex { vertex, two_nice })
                .collect(),
            related,
            unmodeled,
        });
    }
    out
}

/// Checks the two J-face lemmas against located occurrences.
///
/// For a `J_2` occurrence, the unique non-port 4-vertex must be incident with
/// two 9-faces; for a `J_k` occurrence with `k >= 4`, at least `k - 2` nice
/// 9-faces must contain one of its non-port 4-vertices. Occurrences are
/// supplied as (k, middle 4-vertices) pairs to keep this module independent
/// of the configuration matcher.
pub fn check_j_face_lemmas(
    sg: &SignedPlaneGraph,
    cls: &Classification,
    occurrences: &[(usize, Vec<usize>)],
) -> Vec<String> {
    let g = &sg.graph;
    let mut violations = Vec::new();
    for (k, middles) in occurrences {
        match k {
            2 => {
                for &u in middles {
                    let nine = g
                        .faces_at(u)
                        .into_iter()
                        .filter(|&f| g.faces()[f].len() == 9)
                        .count();
                    if nine < 2 {
                        violations.push(format!(
                            "J_2 middle vertex {u} lies on {nine} nine-faces, expected 2"
                        ));
                    }
                }
            }
            k if *k >= 4 => {
                let middle_set: BTreeSet<usize> = middles.iter().copied().collect();
                let nice = cls
                    .nice_faces
                    .iter()
                    .filter(|nf| {
                        g.faces()[nf.face]
                            .vertex_set()
                            .intersection(&middle_set)
                            .next()
                            .is_some()
                    })
                    .count();
                if nice + 2 < *k {
                    violations.push(format!(
                        "J_{k} occurrence touches {nice} nice 9-faces, expected at least {}",
                        k - 2
                    ));
                }
            }
            _ => {}
        }
    }
    violations
}

/// Classifies and refines the C1/C2 split (main entry point).
pub fn classify_full(sg: &SignedPlaneGraph) -> Classification {
    let mut cls = classify(sg);
    let vertices = cls.vertices.clone();
    for s in &mut cls.snowflakes {
        refine_c_classes(sg, s, &vertices);
    }
    cls
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hosts::{bowtie_ring, cycle_host, triangle_ring};

    #[test]
    fn triangle_ring_roles() {
        let sg = triangle_ring([6, 6, 6], true);
        let cls = classify_full(&sg);
        // Gadget vertices: internal 3-vertices on a negative face with three
        // such vertices.
        for v in [18, 19, 20] {
            assert_eq!(cls.vertices[v].role, Role::TriDelta(TriKind::Minus));
            assert!(!cls.vertices[v].external);
            assert!(!cls.vertices[v].bad);
        }
        // Spoke-attached ring vertices are external C-vertices; the rest of
        // the ring is 2-vertices.
        for v in [0, 6, 12] {
            assert_eq!(cls.vertices[v].role, Role::C);
            assert!(cls.vertices[v].external);
        }
        assert_eq!(cls.vertices[1].role, Role::Two);
        // Outer neighbors are the spoke ring vertices.
        assert_eq!(cls.vertices[18].outer_neighbor, Some(0));
    }

    #[test]
    fn positive_triangle_ring_is_bad() {
        let sg = triangle_ring([6, 6, 6], false);
        let cls = classify_full(&sg);
        for v in [18, 19, 20] {
            assert_eq!(cls.vertices[v].role, Role::TriDelta(TriKind::Plus));
            assert!(cls.vertices[v].bad);
        }
    }

    #[test]
    fn bowtie_snowflake_stats() {
        let sg = bowtie_ring([6, 5, 6, 5], true, false);
        let cls = classify_full(&sg);
        assert!(cls.rejected.is_empty());
        assert_eq!(cls.snowflakes.len(), 1);
        let s = &cls.snowflakes[0];
        assert_eq!(s.faces.len(), 2);
        assert_eq!(s.tri_delta.len(), 4);
        assert_eq!(s.bowtie, vec![24]);
        assert_eq!(s.tri_minus.len(), 2);
        assert_eq!(s.tri_plus.len(), 2);
        assert!(s.c_vertices.is_empty());
        assert_eq!((s.t1, s.t2), (0, 0));
        assert!(s.eq3_holds());
        assert!(s.eq4_holds());
        assert!(s.evenness_holds());
        assert_eq!(s.h_graph_edges(&cls), vec![(0, 1)]);
    }

    #[test]
    fn bare_cycle_has_no_structure() {
        let cls = classify_full(&cycle_host(12));
        assert!(cls.snowflakes.is_empty());
        assert!(cls.nice_faces.is_empty());
        assert!(cls.vertices.iter().all(|v| v.role == Role::Two && v.external));
    }
}
