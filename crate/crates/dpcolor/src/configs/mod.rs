//! Reducible configurations: patterns, catalog, matching, kernels, surgery.
//!
//! A configuration is an S3-signed plane graph `H` with a degree map `theta`
//! (exact host degree, or `*` for unconstrained) and a set `Z` of vertices
//! required to be internal in the host. Signs are recorded per cycle
//! (positive / negative / free) because the signature on any acyclic edge set
//! can be switched straight. Each catalog entry additionally carries a
//! reduction script: which vertices the surgery removes, which outer
//! neighbors get identified, which straight edges get inserted, and the color
//! equalities the identifications induce on the re-extension frontier.
//!
//! Equalities are interpreted in the gauge where the entry's designated
//! straightening paths (an acyclic edge set, per the switching remark) are
//! straight; both the kernel verifier and the surgery normalize those paths
//! first, so "equal colors" is literal.

pub mod builders;
pub mod catalog;
pub mod kernel;
pub mod matcher;
pub mod surgery;

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Degree requirement of a pattern vertex in the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theta {
    /// The host degree must equal this value.
    Exact(usize),
    /// No restriction (`*`).
    Star,
}

/// Required sign of a constrained cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    /// The cycle product must be the identity.
    Positive,
    /// The cycle product must not be the identity.
    Negative,
    /// Unconstrained.
    Any,
}

/// One vertex of a configuration pattern.
#[derive(Debug, Clone, Serialize)]
pub struct PatternVertex {
    /// Human-readable name from the catalog (e.g. `u`, `w1`, `u'`).
    pub name: String,
    /// Host-degree requirement.
    pub theta: Theta,
    /// Whether the vertex must be internal in the host (the set `Z`).
    pub internal: bool,
    /// `Some(i)`: this vertex is not part of `H` but names the unique host
    /// neighbor of core vertex `i` outside the pattern image.
    pub attachment_of: Option<usize>,
}

/// A cycle with a sign requirement.
#[derive(Debug, Clone, Serialize)]
pub struct CycleConstraint {
    /// The cycle as a pattern vertex sequence.
    pub cycle: Vec<usize>,
    /// The required sign.
    pub sign: Sign,
}

/// The reduction surgery of a catalog entry.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReductionScript {
    /// Pattern vertices removed from the host.
    pub remove: Vec<usize>,
    /// Pairs of pattern vertices identified after removal.
    pub identify: Vec<(usize, usize)>,
    /// Straight edges inserted after removal (in the normalized gauge).
    pub insert: Vec<(usize, usize)>,
    /// Color equalities on the frontier (beyond those implied by
    /// `identify`), in the normalized gauge.
    pub equal: Vec<(usize, usize)>,
    /// Vertices whose colors are given when re-extending the removed ones.
    pub frontier: Vec<usize>,
    /// Designated straightening paths: an acyclic edge set that is switched
    /// straight before identification/insertion, fixing the gauge in which
    /// the equalities hold.
    pub paths: Vec<Vec<usize>>,
    /// `Some((v, m))`: instead of requiring every frontier tuple to extend,
    /// require that at least `m` colors of `v` admit an extension of the
    /// removed set (the port-retention form of the chain kernels).
    pub retain: Option<(usize, usize)>,
}

/// A configuration pattern with its reduction script.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigPattern {
    /// Catalog name (e.g. `b-1`, `I_3`).
    pub name: String,
    /// Vertices; core vertices are those with `attachment_of == None`.
    pub vertices: Vec<PatternVertex>,
    /// Core edges, including the edge from each attachment to its core
    /// vertex.
    pub edges: Vec<(usize, usize)>,
    /// Sign-constrained cycles.
    pub cycles: Vec<CycleConstraint>,
    /// Vertex sequences required to lie consecutively on one host face (a
    /// closed sequence, first = last, requires a facial cycle).
    pub facial: Vec<Vec<usize>>,
    /// The reduction script.
    pub script: ReductionScript,
    /// Free-form provenance notes from the catalog file.
    pub notes: Vec<String>,
}

/// Errors in catalog data or pattern construction.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// Malformed catalog text.
    #[error("catalog line {0}: {1}")]
    Parse(usize, String),
    /// Reference to an unknown entry or vertex.
    #[error("{0}")]
    Unknown(String),
    /// A structural validation of the pattern failed.
    #[error("pattern {0}: {1}")]
    Invalid(String, String),
}

impl ConfigPattern {
    /// Index of the vertex with the given name.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Indices of the core (non-attachment) vertices.
    pub fn core(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.vertices[v].attachment_of.is_none())
            .collect()
    }

    /// Degree of a vertex inside the pattern (attachment edges included).
    pub fn pattern_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbors of `v` inside the pattern.
    pub fn pattern_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Whether `uv` is a pattern edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Attachments (and their anchors) of the pattern.
    pub fn attachments(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .filter_map(|v| self.vertices[v].attachment_of.map(|a| (v, a)))
            .collect()
    }

    /// Structural sanity checks used by the kernel verifier and the matcher.
    ///
    /// Every removed vertex must have its whole host neighborhood inside the
    /// pattern (exact theta equal to its pattern degree); equal/identified
    /// pairs must be joined by the designated straightening forest; every
    /// core vertex must be either removed or on the frontier.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let fail = |msg: String| Err(ConfigError::Invalid(self.name.clone(), msg));
        for (v, pv) in self.vertices.iter().enumerate() {
            if let Some(anchor) = pv.attachment_of {
                if !self.has_edge(v, anchor) {
                    return fail(format!("attachment {} misses its anchor edge", pv.name));
                }
                let anchor = &self.vertices[anchor];
                if anchor.theta == Theta::Star {
                    return fail(format!(
                        "attachment {} anchored at a *-vertex (not unique)",
                        pv.name
                    ));
                }
            }
        }
        for (v, a) in self.attachments() {
            let anchor_deg = self.pattern_degree(a);
            if self.vertices[a].theta != Theta::Exact(anchor_deg) {
                return fail(format!(
                    "anchor {} of attachment {} has theta not matching pattern degree {}",
                    self.vertices[a].name, self.vertices[v].name, anchor_deg
                ));
            }
        }
        for &r in &self.script.remove {
            if self.vertices[r].attachment_of.is_some() {
                return fail(format!("removed vertex {} is an attachment", self.vertices[r].name));
            }
            match self.vertices[r].theta {
                Theta::Exact(k) if k == self.pattern_degree(r) => {}
                _ => {
                    return fail(format!(
                        "removed vertex {} has open neighborhood (theta != pattern degree)",
                        self.vertices[r].name
                    ))
                }
            }
        }
        // Straightening paths must be acyclic and edges of the pattern.
        let mut forest_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut forest_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for path in &self.script.paths {
            for w in path.windows(2) {
                if !self.has_edge(w[0], w[1]) {
                    return fail("straightening path uses a non-edge".into());
                }
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                if forest_edges.insert(key) {
                    forest_adj.entry(w[0]).or_default().push(w[1]);
                    forest_adj.entry(w[1]).or_default().push(w[0]);
                }
            }
        }
        if has_cycle(&forest_adj) {
            return fail("straightening paths are not acyclic".into());
        }
        for &(a, b) in self
            .script
            .identify
            .iter()
            .chain(self.script.equal.iter())
            .chain(self.script.insert.iter())
        {
            if !forest_connected(&forest_adj, a, b) {
                return fail(format!(
                    "equality {}~{} not joined by a straightening path",
                    self.vertices[a].name, self.vertices[b].name
                ));
            }
        }
        let frontier: BTreeSet<usize> = self.script.frontier.iter().copied().collect();
        if !self.script.remove.is_empty() {
            for v in self.core() {
                if Some(v) == self.script.retain.map(|(r, _)| r) {
                    continue;
                }
                if !self.script.remove.contains(&v) && !frontier.contains(&v) {
                    return fail(format!(
                        "core vertex {} neither removed nor on the frontier",
                        self.vertices[v].name
                    ));
                }
            }
        }
        Ok(())
    }
}

fn has_cycle(adj: &BTreeMap<usize, Vec<usize>>) -> bool {
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        // BFS counting edges vs vertices in the component.
        let mut verts = BTreeSet::new();
        let mut edges = 0;
        let mut stack = vec![start];
        verts.insert(start);
        while let Some(v) = stack.pop() {
            for &u in adj.get(&v).into_iter().flatten() {
                edges += 1;
                if verts.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.extend(verts.iter());
        if edges / 2 >= verts.len() {
            return true;
        }
    }
    false
}

fn forest_connected(adj: &BTreeMap<usize, Vec<usize>>, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let mut seen = BTreeSet::from([a]);
    let mut stack = vec![a];
    while let Some(v) = stack.pop() {
        for &u in adj.get(&v).into_iter().flatten() {
            if u == b {
                return true;
            }
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    false
}

/// An embedding of a pattern into a host.
#[derive(Debug, Clone, Serialize)]
pub struct Occurrence {
    /// Entry name the occurrence belongs to.
    pub pattern: String,
    /// Pattern vertex index -> host vertex.
    pub map: Vec<usize>,
}

impl Occurrence {
    /// Host image of a pattern vertex.
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// The host vertices covered by the core of the pattern.
    pub fn core_image(&self, pattern: &ConfigPattern) -> BTreeSet<usize> {
        pattern.core().iter().map(|&v| self.map[v]).collect()
    }
}
