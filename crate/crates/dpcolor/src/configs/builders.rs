//! Programmatic construction of the parametric catalog entries and of the
//! chain extensions.
//!
//! The fixed entries live in the catalog text file; everything with a free
//! chain length `k` (the `I`/`J` chains, `a-1`, `c-1`) and every chain
//! extension of a fixed entry is built here.

use super::{
    ConfigError, ConfigPattern, CycleConstraint, PatternVertex, ReductionScript, Sign, Theta,
};
use std::collections::BTreeSet;

/// Incremental [`ConfigPattern`] builder shared by the parametric entries.
pub struct PatternBuilder {
    name: String,
    vertices: Vec<PatternVertex>,
    edges: Vec<(usize, usize)>,
    cycles: Vec<CycleConstraint>,
    facial: Vec<Vec<usize>>,
    script: ReductionScript,
    notes: Vec<String>,
}

impl PatternBuilder {
    /// Starts an empty pattern with the given catalog name.
    pub fn new(name: impl Into<String>) -> Self {
        PatternBuilder {
            name: name.into(),
            vertices: Vec::new(),
            edges: Vec::new(),
            cycles: Vec::new(),
            facial: Vec::new(),
            script: ReductionScript::default(),
            notes: Vec::new(),
        }
    }

    /// Adds a core vertex and returns its index.
    pub fn vertex(&mut self, name: impl Into<String>, theta: Theta, internal: bool) -> usize {
        self.vertices.push(PatternVertex {
            name: name.into(),
            theta,
            internal,
            attachment_of: None,
        });
        self.vertices.len() - 1
    }

    /// Adds the attachment vertex of `anchor` (its unique outside neighbor)
    /// and the connecting edge; returns the attachment index.
    pub fn attach(&mut self, name: impl Into<String>, anchor: usize) -> usize {
        self.vertices.push(PatternVertex {
            name: name.into(),
            theta: Theta::Star,
            internal: false,
            attachment_of: Some(anchor),
        });
        let v = self.vertices.len() - 1;
        self.edges.push((anchor, v));
        v
    }

    /// Adds an edge.
    pub fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Adds a triangle: its three edges (missing ones only), a sign
    /// constraint and a facial-triangle requirement.
    pub fn triangle(&mut self, a: usize, b: usize, c: usize, sign: Sign) {
        for (x, y) in [(a, b), (b, c), (c, a)] {
            if !self
                .edges
                .iter()
                .any(|&(p, q)| (p, q) == (x, y) || (p, q) == (y, x))
            {
                self.edges.push((x, y));
            }
        }
        self.cycles.push(CycleConstraint {
            cycle: vec![a, b, c],
            sign,
        });
        self.facial.push(vec![a, b, c, a]);
    }

    /// Declares a straightening path.
    pub fn path(&mut self, p: Vec<usize>) {
        self.script.paths.push(p);
    }

    /// Marks vertices as removed by the surgery.
    pub fn remove(&mut self, vs: impl IntoIterator<Item = usize>) {
        self.script.remove.extend(vs);
    }

    /// Records an identification.
    pub fn identify(&mut self, a: usize, b: usize) {
        self.script.identify.push((a, b));
    }

    /// Records a straight-edge insertion.
    pub fn insert(&mut self, a: usize, b: usize) {
        self.script.insert.push((a, b));
    }

    /// Sets the port-retention kernel form.
    pub fn retain(&mut self, v: usize, colors: usize) {
        self.script.retain = Some((v, colors));
    }

    /// Appends a provenance note.
    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Finishes the pattern, computing the frontier as all unremoved core
    /// vertices plus all attachments (minus the retention vertex).
    pub fn build(mut self) -> ConfigPattern {
        let removed: BTreeSet<usize> = self.script.remove.iter().copied().collect();
        let retain = self.script.retain.map(|(v, _)| v);
        self.script.frontier = (0..self.vertices.len())
            .filter(|v| !removed.contains(v) && Some(*v) != retain)
            .collect();
        ConfigPattern {
            name: self.name,
            vertices: self.vertices,
            edges: self.edges,
            cycles: self.cycles,
            facial: self.facial,
            script: self.script,
            notes: self.notes,
        }
    }
}

/// Recomputes the frontier of a pattern with the rule of
/// [`PatternBuilder::build`].
pub fn recompute_frontier(p: &mut ConfigPattern) {
    let removed: BTreeSet<usize> = p.script.remove.iter().copied().collect();
    let retain = p.script.retain.map(|(v, _)| v);
    p.script.frontier = (0..p.vertices.len())
        .filter(|v| !removed.contains(v) && Some(*v) != retain)
        .collect();
}

/// The chain `I_k`: `k` negative triangles `[u_{i-1} u_i w_i]` sharing the
/// path `u_0 .. u_k`, with every `w_i` and `u_k` an internal 3-vertex and
/// `u_1 .. u_{k-1}` internal 4-vertices. `u_0` is the port.
///
/// The kernel claim is port retention: for every signature and every
/// coloring of the attachments, at least two colors of `u_0` extend to the
/// whole chain. `2k+1` core vertices and `3k` core edges.
pub fn build_i(k: usize) -> ConfigPattern {
    assert!(k >= 1);
    let mut b = PatternBuilder::new(format!("I_{k}"));
    let mut u = vec![b.vertex("u0", Theta::Star, false)];
    for i in 1..=k {
        let theta = if i == k { Theta::Exact(3) } else { Theta::Exact(4) };
        u.push(b.vertex(format!("u{i}"), theta, true));
    }
    for i in 1..=k {
        let w = b.vertex(format!("w{i}"), Theta::Exact(3), true);
        b.triangle(u[i - 1], u[i], w, Sign::Negative);
        b.attach(format!("w{i}'"), w);
    }
    b.attach(format!("u{k}'"), u[k]);
    b.remove((1..=k).map(|i| u[i]));
    b.remove((0..k).map(|i| k + 1 + 2 * i)); // the w_i, interleaved with their attachments
    b.retain(u[0], 2);
    let p = b.build();
    debug_assert_eq!(p.core().len(), 2 * k + 1);
    debug_assert_eq!(
        p.edges.len() - p.attachments().len(),
        3 * k,
        "core edge count of I_k"
    );
    p
}

/// The chain `J_k`: triangles `T_i = [u_{i-1} u_i w_i]` (free sign) along the
/// path `u_0 .. u_k` plus a positive pendant triangle `T'_i = [x_i y_i z_i]`
/// joined by the edge `w_i z_i`; `w_i, x_i, y_i, z_i` are internal
/// 3-vertices, `u_1 .. u_{k-1}` internal 4-vertices, `u_0` and `u_k` the two
/// ports. `5k+1` core vertices and `7k` core edges; no reduction script of
/// its own (it only appears through extensions).
pub fn build_j(k: usize) -> ConfigPattern {
    assert!(k >= 1);
    let mut b = PatternBuilder::new(format!("J_{k}"));
    let mut u = vec![b.vertex("u0", Theta::Star, false)];
    for i in 1..=k {
        let theta = if i == k { Theta::Star } else { Theta::Exact(4) };
        u.push(b.vertex(format!("u{i}"), theta, i != k));
    }
    for i in 1..=k {
        let w = b.vertex(format!("w{i}"), Theta::Exact(3), true);
        b.triangle(u[i - 1], u[i], w, Sign::Any);
        let x = b.vertex(format!("x{i}"), Theta::Exact(3), true);
        let y = b.vertex(format!("y{i}"), Theta::Exact(3), true);
        let z = b.vertex(format!("z{i}"), Theta::Exact(3), true);
        b.triangle(x, y, z, Sign::Positive);
        b.edge(w, z);
        b.attach(format!("x{i}'"), x);
        b.attach(format!("y{i}'"), y);
    }
    let p = b.build();
    debug_assert_eq!(p.core().len(), 5 * k + 1);
    debug_assert_eq!(p.edges.len() - p.attachments().len(), 7 * k);
    p
}

/// Entry `a-1`: the chain `I_k` whose port is a 3-vertex. The surgery
/// removes the whole chain; re-extension colors the port after its single
/// outside neighbor.
pub fn build_a1(k: usize) -> ConfigPattern {
    let mut p = build_i(k);
    p.name = format!("a-1(k={k})");
    p.vertices[0].theta = Theta::Exact(3);
    p.vertices[0].internal = true;
    let port_att = p.vertices.len();
    p.vertices.push(PatternVertex {
        name: "u0'".into(),
        theta: Theta::Star,
        internal: false,
        attachment_of: Some(0),
    });
    p.edges.push((0, port_att));
    p.script.retain = None;
    p.script.remove.push(0);
    recompute_frontier(&mut p);
    p.notes.push("port forced to degree 3".into());
    p
}

/// Entry `c-1` for chain length `k <= 5`: a fan of `k` middle triangles
/// `[w_i z_i w_{i+1}]` along the path `w_1 .. w_{k+1}`, a positive pendant
/// triangle `[r_i s_i t_i]` hung from each apex `z_i` by the edge `z_i t_i`,
/// and positive end triangles `[u v w_1]` and `[w_{k+1} x y]`.
///
/// The surgery keeps the middle fan `Q`, removes everything else,
/// identifies `u' ~ w_1` and `x' ~ w_{k+1}`, and inserts a straight edge
/// `r_i' z_i` for each pendant.
pub fn build_c1(k: usize) -> Result<ConfigPattern, ConfigError> {
    if !(1..=5).contains(&k) {
        return Err(ConfigError::Unknown(format!(
            "c-1 requires 1 <= k <= 5, got {k}"
        )));
    }
    let mut b = PatternBuilder::new(format!("c-1(k={k})"));
    let w: Vec<usize> = (1..=k + 1)
        .map(|i| b.vertex(format!("w{i}"), Theta::Exact(4), true))
        .collect();
    let z: Vec<usize> = (1..=k)
        .map(|i| b.vertex(format!("z{i}"), Theta::Exact(3), true))
        .collect();
    for i in 0..k {
        b.triangle(w[i], z[i], w[i + 1], Sign::Any);
    }
    let u = b.vertex("u", Theta::Exact(3), true);
    let v = b.vertex("v", Theta::Exact(3), true);
    b.triangle(u, v, w[0], Sign::Positive);
    let x = b.vertex("x", Theta::Exact(3), true);
    let y = b.vertex("y", Theta::Exact(3), true);
    b.triangle(w[k], x, y, Sign::Positive);
    let u_att = b.attach("u'", u);
    b.attach("v'", v);
    let x_att = b.attach("x'", x);
    b.attach("y'", y);
    b.path(vec![u_att, u, w[0]]);
    b.path(vec![w[k], x, x_att]);
    b.remove([u, v, x, y]);
    b.identify(u_att, w[0]);
    b.identify(x_att, w[k]);
    for i in 0..k {
        let r = b.vertex(format!("r{}", i + 1), Theta::Exact(3), true);
        let s = b.vertex(format!("s{}", i + 1), Theta::Exact(3), true);
        let t = b.vertex(format!("t{}", i + 1), Theta::Exact(3), true);
        b.triangle(r, s, t, Sign::Positive);
        b.edge(z[i], t);
        let r_att = b.attach(format!("r{}'", i + 1), r);
        b.attach(format!("s{}'", i + 1), s);
        b.path(vec![z[i], t, r, r_att]);
        b.remove([r, s, t]);
        b.insert(r_att, z[i]);
    }
    let mut p = b.build();
    p.notes
        .push("pendant orientation from the figure is not enforced".into());
    Ok(p)
}

/// `I_k`-extension of `base` at the named vertex: the vertex (which must
/// have exactly one attachment) swallows its attachment and becomes the
/// port of a fresh `I_k`; its degree requirement grows by one and the chain
/// is added to the removal set.
pub fn extend_at_i(base: &ConfigPattern, at: &str, k: usize) -> Result<ConfigPattern, ConfigError> {
    let v = base
        .vertex(at)
        .ok_or_else(|| ConfigError::Unknown(format!("{}: no vertex {at}", base.name)))?;
    let atts: Vec<usize> = base
        .attachments()
        .iter()
        .filter(|&&(_, anchor)| anchor == v)
        .map(|&(a, _)| a)
        .collect();
    if atts.len() != 1 {
        return Err(ConfigError::Invalid(
            base.name.clone(),
            format!("{at} does not have exactly one outside neighbor"),
        ));
    }
    let dropped = atts[0];
    for path in &base.script.paths {
        if path.contains(&dropped) {
            return Err(ConfigError::Invalid(
                base.name.clone(),
                format!("attachment of {at} lies on a straightening path"),
            ));
        }
    }
    let mut p = base.clone();
    p.name = format!("{}+I{}@{}", base.name, k, at);
    // Drop the attachment vertex (it is the last-added reference to v);
    // shift indices above it.
    p.vertices.remove(dropped);
    let shift = |i: usize| if i > dropped { i - 1 } else { i };
    for pv in p.vertices.iter_mut() {
        if let Some(a) = pv.attachment_of.as_mut() {
            *a = shift(*a);
        }
    }
    p.edges.retain(|&(a, b)| a != dropped && b != dropped);
    for e in p.edges.iter_mut() {
        *e = (shift(e.0), shift(e.1));
    }
    for c in p.cycles.iter_mut() {
        for x in c.cycle.iter_mut() {
            *x = shift(*x);
        }
    }
    for f in p.facial.iter_mut() {
        for x in f.iter_mut() {
            *x = shift(*x);
        }
    }
    let s = &mut p.script;
    s.remove.iter_mut().for_each(|x| *x = shift(*x));
    for pair in s.identify.iter_mut().chain(s.equal.iter_mut()) {
        if pair.0 == dropped || pair.1 == dropped {
            return Err(ConfigError::Invalid(
                base.name.clone(),
                format!("attachment of {at} occurs in an identification"),
            ));
        }
        *pair = (shift(pair.0), shift(pair.1));
    }
    for pair in s.insert.iter_mut() {
        *pair = (shift(pair.0), shift(pair.1));
    }
    for path in s.paths.iter_mut() {
        for x in path.iter_mut() {
            *x = shift(*x);
        }
    }
    if let Some((r, _)) = s.retain.as_mut() {
        *r = shift(*r);
    }
    let v = shift(v);
    match p.vertices[v].theta {
        Theta::Exact(d) => p.vertices[v].theta = Theta::Exact(d + 1),
        Theta::Star => {
            return Err(ConfigError::Invalid(base.name.clone(), "*-port".into()));
        }
    }

    // Graft the chain, port first.
    let chain = build_i(k);
    let base_len = p.vertices.len();
    let map = |i: usize| if i == 0 { v } else { base_len + i - 1 };
    for (i, cv) in chain.vertices.iter().enumerate().skip(1) {
        p.vertices.push(PatternVertex {
            name: format!("{at}.{}", cv.name),
            theta: cv.theta,
            internal: cv.internal,
            attachment_of: cv.attachment_of.map(map),
        });
        debug_assert_eq!(p.vertices.len() - 1, map(i));
    }
    for &(a, b) in &chain.edges {
        p.edges.push((map(a), map(b)));
    }
    for c in &chain.cycles {
        p.cycles.push(CycleConstraint {
            cycle: c.cycle.iter().map(|&x| map(x)).collect(),
            sign: c.sign,
        });
    }
    for f in &chain.facial {
        p.facial.push(f.iter().map(|&x| map(x)).collect());
    }
    for &r in &chain.script.remove {
        p.script.remove.push(map(r));
    }
    recompute_frontier(&mut p);
    Ok(p)
}

/// `J_k`-extension of `base` at the named vertex: a 4-vertex incident with
/// two triangles sharing no edge is split in two, the halves becoming the
/// ports of a fresh `J_k`. Mirroring the reduction of the fan entries, the
/// surgery keeps both halves and the fan `Q` of chain triangles, removes
/// the pendant triangles and inserts the straight edges `r_i' z_i`.
pub fn extend_at_j(base: &ConfigPattern, at: &str, k: usize) -> Result<ConfigPattern, ConfigError> {
    let v = base
        .vertex(at)
        .ok_or_else(|| ConfigError::Unknown(format!("{}: no vertex {at}", base.name)))?;
    if base.vertices[v].theta != Theta::Exact(4) || base.pattern_degree(v) != 4 {
        return Err(ConfigError::Invalid(
            base.name.clone(),
            format!("{at} is not a closed 4-vertex"),
        ));
    }
    let tris: Vec<&CycleConstraint> = base
        .cycles
        .iter()
        .filter(|c| c.cycle.len() == 3 && c.cycle.contains(&v))
        .collect();
    if tris.len() != 2 {
        return Err(ConfigError::Invalid(
            base.name.clone(),
            format!("{at} is not on exactly two constrained triangles"),
        ));
    }
    let side1: BTreeSet<usize> = tris[0].cycle.iter().copied().filter(|&x| x != v).collect();
    let side2: BTreeSet<usize> = tris[1].cycle.iter().copied().filter(|&x| x != v).collect();
    if !side1.is_disjoint(&side2) {
        return Err(ConfigError::Invalid(
            base.name.clone(),
            format!("the two triangles at {at} share an edge or a second vertex"),
        ));
    }
    let mut p = base.clone();
    p.name = format!("{}+J{}@{}", base.name, k, at);
    // v keeps the side-1 role; v2 is appended and takes over the side-2
    // incidences.
    let v2 = p.vertices.len();
    p.vertices.push(PatternVertex {
        name: format!("{at}*"),
        theta: Theta::Exact(4),
        internal: p.vertices[v].internal,
        attachment_of: None,
    });
    let reroute = |x: usize, other: usize| if x == v && side2.contains(&other) { v2 } else { x };
    for e in p.edges.iter_mut() {
        *e = (reroute(e.0, e.1), reroute(e.1, e.0));
    }
    let on_side2 = |cyc: &[usize]| cyc.iter().any(|x| side2.contains(x));
    for c in p.cycles.iter_mut() {
        if c.cycle.contains(&v) && on_side2(&c.cycle) {
            for x in c.cycle.iter_mut() {
                if *x == v {
                    *x = v2;
                }
            }
        }
    }
    for f in p.facial.iter_mut() {
        if f.contains(&v) && on_side2(f) {
            for x in f.iter_mut() {
                if *x == v {
                    *x = v2;
                }
            }
        }
    }
    for path in p.script.paths.iter_mut() {
        if path.contains(&v) && on_side2(path) {
            for x in path.iter_mut() {
                if *x == v {
                    *x = v2;
                }
            }
        }
    }
    // Attachments point at anchors; v had none (closed 4-vertex), and the
    // identifications follow their straightening paths.
    let forest_has = |paths: &[Vec<usize>], x: usize| paths.iter().any(|q| q.contains(&x));
    for pair in p
        .script
        .identify
        .iter_mut()
        .chain(p.script.equal.iter_mut())
    {
        for end in [&mut pair.0, &mut pair.1] {
            if *end == v && !forest_has(&p.script.paths, v) && forest_has(&p.script.paths, v2) {
                *end = v2;
            }
        }
    }

    // The two triangles at the split vertex join the kept fan, so any base
    // removals among their vertices are undone (their attachments stay and
    // keep feeding the identifications).
    p.script
        .remove
        .retain(|r| !side1.contains(r) && !side2.contains(r));

    // Graft the fan: chain vertices q_i (apexes) and path vertices p_i,
    // pendant triangles [r_i s_i t_i].
    let mut path_v = vec![v];
    for i in 1..k {
        let id = p.vertices.len();
        p.vertices.push(PatternVertex {
            name: format!("{at}.p{i}"),
            theta: Theta::Exact(4),
            internal: true,
            attachment_of: None,
        });
        path_v.push(id);
    }
    path_v.push(v2);
    for i in 0..k {
        let q = p.vertices.len();
        p.vertices.push(PatternVertex {
            name: format!("{at}.q{}", i + 1),
            theta: Theta::Exact(3),
            internal: true,
            attachment_of: None,
        });
        for (x, y) in [(path_v[i], path_v[i + 1]), (path_v[i], q), (q, path_v[i + 1])] {
            if !p.has_edge(x, y) {
                p.edges.push((x, y));
            }
        }
        p.cycles.push(CycleConstraint {
            cycle: vec![path_v[i], path_v[i + 1], q],
            sign: Sign::Any,
        });
        p.facial.push(vec![path_v[i], path_v[i + 1], q, path_v[i]]);
        let r = p.vertices.len();
        for (suffix, theta) in [("r", 3), ("s", 3), ("t", 3)] {
            p.vertices.push(PatternVertex {
                name: format!("{at}.{suffix}{}", i + 1),
                theta: Theta::Exact(theta),
                internal: true,
                attachment_of: None,
            });
        }
        let (s, t) = (r + 1, r + 2);
        p.edges.extend([(r, s), (s, t), (t, r), (q, t)]);
        p.cycles.push(CycleConstraint {
            cycle: vec![r, s, t],
            sign: Sign::Positive,
        });
        p.facial.push(vec![r, s, t, r]);
        let r_att = p.vertices.len();
        p.vertices.push(PatternVertex {
            name: format!("{at}.r{}'", i + 1),
            theta: Theta::Star,
            internal: false,
            attachment_of: Some(r),
        });
        p.edges.push((r, r_att));
        let s_att = p.vertices.len();
        p.vertices.push(PatternVertex {
            name: format!("{at}.s{}'", i + 1),
            theta: Theta::Star,
            internal: false,
            attachment_of: Some(s),
        });
        p.edges.push((s, s_att));
        p.script.paths.push(vec![q, t, r, r_att]);
        p.script.remove.extend([r, s, t]);
        p.script.insert.push((r_att, q));
    }
    recompute_frontier(&mut p);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_chain_counts() {
        for k in 1..=4 {
            let p = build_i(k);
            assert_eq!(p.core().len(), 2 * k + 1);
            assert_eq!(p.attachments().len(), k + 1);
            assert_eq!(p.edges.len(), 3 * k + k + 1);
            assert_eq!(p.cycles.len(), k);
            p.validate().unwrap();
        }
    }

    #[test]
    fn j_chain_counts() {
        for k in 1..=4 {
            let p = build_j(k);
            assert_eq!(p.core().len(), 5 * k + 1);
            assert_eq!(p.edges.len() - p.attachments().len(), 7 * k);
            assert_eq!(p.cycles.len(), 2 * k);
            p.validate().unwrap();
        }
    }

    #[test]
    fn a1_closes_the_port() {
        let p = build_a1(2);
        p.validate().unwrap();
        assert_eq!(p.script.remove.len(), 5);
        assert!(p.script.retain.is_none());
        let port = p.vertex("u0").unwrap();
        assert_eq!(p.vertices[port].theta, Theta::Exact(3));
    }

    #[test]
    fn c1_structure() {
        let p = build_c1(3).unwrap();
        p.validate().unwrap();
        // 4 fan path + 3 apexes + 4 end + 9 pendant cores.
        assert_eq!(p.core().len(), 4 + 3 + 4 + 9);
        assert_eq!(p.script.identify.len(), 2);
        assert_eq!(p.script.insert.len(), 3);
        assert!(build_c1(6).is_err());
    }
}
