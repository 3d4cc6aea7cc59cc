//! Applying a reduction script to an occurrence in a host.
//!
//! The host is first switched so that the images of the entry's designated
//! straightening paths are straight (a colorability-preserving operation),
//! then the removal, identifications and straight-edge insertions are
//! performed on the rotation system. The result is rebuilt and audited:
//! Euler formula, connectivity, forbidden cycle lengths and consistency of
//! the boundary precoloring are all re-checked, and any defect is reported
//! rather than silently accepted.

use super::{ConfigPattern, Occurrence};
use crate::perm::Perm;
use crate::planegraph::PlaneGraph;
use crate::signing::{Signature, SignedPlaneGraph};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of a surgery.
#[derive(Debug, Serialize)]
pub struct SurgeryReport {
    /// Entry applied.
    pub pattern: String,
    /// Number of host vertices removed.
    pub removed: usize,
    /// Number of identifications performed (no-op self-identifications are
    /// counted separately in `violations`).
    pub identified: usize,
    /// Number of edges inserted.
    pub inserted: usize,
    /// Vertex counts before and after.
    pub host_vertices: usize,
    /// Vertices in the reduced graph.
    pub result_vertices: usize,
    /// Forbidden (4/6/8) cycles created by the surgery, as vertex lists of
    /// the reduced graph.
    pub forbidden_cycles: Vec<Vec<usize>>,
    /// Structural or coloring defects; empty when the surgery is clean.
    pub violations: Vec<String>,
    /// The reduced signed graph, if it could be built at all.
    #[serde(skip)]
    pub result: Option<SignedPlaneGraph>,
}

impl SurgeryReport {
    /// A clean surgery: well-formed result, no forbidden cycles, strictly
    /// fewer vertices.
    pub fn is_clean(&self) -> bool {
        self.result.is_some()
            && self.violations.is_empty()
            && self.forbidden_cycles.is_empty()
            && self.result_vertices < self.host_vertices
    }
}

/// Applies the reduction script of `p` at `occ` in `host`.
pub fn apply_surgery(
    p: &ConfigPattern,
    occ: &Occurrence,
    host: &SignedPlaneGraph,
) -> SurgeryReport {
    let mut report = SurgeryReport {
        pattern: p.name.clone(),
        removed: 0,
        identified: 0,
        inserted: 0,
        host_vertices: host.graph.n(),
        result_vertices: host.graph.n(),
        forbidden_cycles: Vec::new(),
        violations: Vec::new(),
        result: None,
    };

    // Switch the designated straightening paths straight.
    let mut sg = host.clone();
    let forest: Vec<(usize, usize)> = p
        .script
        .paths
        .iter()
        .flat_map(|path| path.windows(2).map(|w| (occ.image(w[0]), occ.image(w[1]))))
        .collect();
    sg.normalize_forest(&forest);

    let removed: BTreeSet<usize> = p.script.remove.iter().map(|&v| occ.image(v)).collect();
    report.removed = removed.len();
    let n = sg.graph.n();

    // Mutable rotations, then identifications by splicing.
    let mut rot: Vec<Vec<usize>> = sg.graph.rotations().to_vec();
    let mut alive: Vec<bool> = (0..n).map(|v| !removed.contains(&v)).collect();
    // merged[v] = representative v currently stands for.
    let mut merged: Vec<usize> = (0..n).collect();

    let mut arcs: BTreeMap<(usize, usize), Perm> = BTreeMap::new();
    for v in 0..n {
        for &u in sg.graph.neighbors(v) {
            arcs.insert((v, u), sg.sigma(v, u));
        }
    }

    for &(pa, pb) in &p.script.identify {
        let (mut ha, mut hb) = (occ.image(pa), occ.image(pb));
        ha = merged[ha];
        hb = merged[hb];
        if ha == hb {
            report
                .violations
                .push(format!("identification of a vertex with itself ({ha})"));
            continue;
        }
        if !alive[ha] || !alive[hb] {
            report
                .violations
                .push("identification endpoint was removed".into());
            continue;
        }
        let keep_a: Vec<usize> = rot[ha].iter().copied().filter(|&u| alive[u]).collect();
        let keep_b: Vec<usize> = rot[hb].iter().copied().filter(|&u| alive[u]).collect();
        if keep_a.contains(&hb) {
            report
                .violations
                .push(format!("identifying adjacent vertices {ha} and {hb}"));
            continue;
        }
        if keep_a.iter().any(|u| keep_b.contains(u)) {
            report.violations.push(format!(
                "identifying {ha} and {hb} would create a multi-edge"
            ));
            continue;
        }
        // Splice b's surviving corner into a's rotation where a's removed
        // block sits, preserving the cyclic order on both sides.
        let pos_a = rot[ha].iter().position(|&u| !alive[u]);
        let start_b = rot[hb].iter().position(|&u| !alive[u]);
        let b_seq: Vec<usize> = match start_b {
            Some(s) => {
                let len = rot[hb].len();
                (0..len)
                    .map(|i| rot[hb][(s + i) % len])
                    .filter(|&u| alive[u])
                    .collect()
            }
            None => keep_b.clone(),
        };
        let mut new_rot = Vec::with_capacity(keep_a.len() + b_seq.len());
        match pos_a {
            Some(s) => {
                let len = rot[ha].len();
                let rotated: Vec<usize> = (0..len).map(|i| rot[ha][(s + i) % len]).collect();
                new_rot.extend(b_seq.iter().copied());
                new_rot.extend(rotated.into_iter().filter(|&u| alive[u]));
            }
            None => {
                new_rot.extend(keep_a.iter().copied());
                new_rot.extend(b_seq.iter().copied());
            }
        }
        // Redirect b's neighbors and arcs.
        for &u in &b_seq {
            for r in rot[u].iter_mut() {
                if *r == hb {
                    *r = ha;
                }
            }
            let s = arcs[&(hb, u)];
            arcs.insert((ha, u), s);
            arcs.insert((u, ha), s.inverse());
        }
        rot[ha] = new_rot;
        alive[hb] = false;
        for m in merged.iter_mut() {
            if *m == hb {
                *m = ha;
            }
        }
        // Precoloring consistency.
        match (sg.precolor.get(&ha).copied(), sg.precolor.get(&hb).copied()) {
            (Some(x), Some(y)) if x != y => {
                report.violations.push(format!(
                    "identified vertices {ha} and {hb} carry different boundary colors"
                ));
            }
            (None, Some(y)) => {
                sg.precolor.insert(ha, y);
            }
            _ => {}
        }
        report.identified += 1;
    }

    // Compact to a new vertex numbering.
    let survivors: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let new_id: BTreeMap<usize, usize> = survivors
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut new_rot: Vec<Vec<usize>> = survivors
        .iter()
        .map(|&v| {
            rot[v]
                .iter()
                .filter(|&&u| alive[u])
                .map(|&u| new_id[&u])
                .collect()
        })
        .collect();

    // Outer face: first surviving dart of the old boundary walk.
    let old_walk = sg.graph.boundary_walk();
    let mut outer_dart = None;
    for i in 0..old_walk.len() {
        let (a, b) = (old_walk[i], old_walk[(i + 1) % old_walk.len()]);
        if alive[a] && alive[b] && rot[a].contains(&b) {
            outer_dart = Some((new_id[&a], new_id[&b]));
            break;
        }
    }
    let Some(outer_dart) = outer_dart else {
        report
            .violations
            .push("surgery destroyed the designated boundary".into());
        return report;
    };

    let build = |rot: Vec<Vec<usize>>, report: &mut SurgeryReport| -> Option<PlaneGraph> {
        match PlaneGraph::new(rot, outer_dart) {
            Ok(g) => Some(g),
            Err(e) => {
                report.violations.push(format!("reduced graph invalid: {e}"));
                None
            }
        }
    };

    // Insertions need faces, so build an intermediate graph first.
    if !p.script.insert.is_empty() {
        let Some(mid) = build(new_rot.clone(), &mut report) else {
            return report;
        };
        for &(pa, pb) in &p.script.insert {
            let (ha, hb) = (merged[occ.image(pa)], merged[occ.image(pb)]);
            if !alive[ha] || !alive[hb] {
                report.violations.push("insertion endpoint removed".into());
                return report;
            }
            let (a, b) = (new_id[&ha], new_id[&hb]);
            if mid.has_edge(a, b) {
                report
                    .violations
                    .push(format!("inserted edge {a}-{b} already present"));
                return report;
            }
            // Find a common face and the walk corners of both endpoints.
            let mut placed = false;
            for f in 0..mid.faces().len() {
                let walk = mid.faces()[f].walk();
                let ia = walk.iter().position(|&v| v == a);
                let ib = walk.iter().position(|&v| v == b);
                if let (Some(ia), Some(ib)) = (ia, ib) {
                    let l = walk.len();
                    let prev_a = walk[(ia + l - 1) % l];
                    let prev_b = walk[(ib + l - 1) % l];
                    let pa_pos = new_rot[a].iter().position(|&u| u == prev_a).unwrap();
                    new_rot[a].insert(pa_pos + 1, b);
                    let pb_pos = new_rot[b].iter().position(|&u| u == prev_b).unwrap();
                    new_rot[b].insert(pb_pos + 1, a);
                    placed = true;
                    break;
                }
            }
            if !placed {
                report
                    .violations
                    .push(format!("insertion endpoints {a} and {b} share no face"));
                return report;
            }
        }
    }

    let Some(graph) = build(new_rot, &mut report) else {
        return report;
    };

    // Reassemble the signature and precoloring.
    let mut sig = Signature::straight();
    for v in 0..graph.n() {
        for &u in graph.neighbors(v) {
            if v < u {
                let (ov, ou) = (survivors[v], survivors[u]);
                let s = arcs.get(&(ov, ou)).copied().unwrap_or(Perm::Id);
                sig.set(v, u, s);
            }
        }
    }
    let precolor: BTreeMap<usize, u8> = sg
        .precolor
        .iter()
        .filter(|(v, _)| alive[**v])
        .map(|(v, c)| (new_id[v], *c))
        .collect();

    let result = SignedPlaneGraph {
        graph,
        sig,
        precolor,
    };
    report.result_vertices = result.graph.n();
    report.forbidden_cycles = result.graph.forbidden_cycles();
    if report.result_vertices >= report.host_vertices {
        report
            .violations
            .push("surgery did not shrink the host".into());
    }
    report.result = Some(result);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::catalog::Catalog;
    use crate::configs::matcher::find_occurrences;
    use crate::hosts::{bowtie_ring, triangle_ring};

    #[test]
    fn bowtie_reduction_shrinks_the_host() {
        let catalog = Catalog::embedded();
        let pat = catalog.instantiate("b-1", &[]).unwrap();
        let host = bowtie_ring([6, 5, 6, 5], true, true);
        let occs = find_occurrences(&pat, &host);
        assert_eq!(occs.len(), 1, "the bowtie should match exactly once");
        let report = apply_surgery(&pat, &occs[0], &host);
        assert!(report.is_clean(), "violations: {:?}", report.violations);
        let out = report.result.unwrap();
        // Five gadget vertices removed, two spoke endpoints merged.
        assert_eq!(out.graph.n(), host.graph.n() - 6);
        assert!(out.graph.forbidden_cycles().is_empty());
    }

    #[test]
    fn negative_face_reduction_shrinks_the_host() {
        let catalog = Catalog::embedded();
        let pat = catalog.instantiate("a-1", &[1]).unwrap();
        let host = triangle_ring([6, 6, 6], true);
        let occs = find_occurrences(&pat, &host);
        assert!(!occs.is_empty());
        let report = apply_surgery(&pat, &occs[0], &host);
        assert!(report.is_clean(), "violations: {:?}", report.violations);
        let out = report.result.unwrap();
        assert!(out.graph.n() < host.graph.n());
        assert!(out.graph.forbidden_cycles().is_empty());
    }

    #[test]
    fn surgery_result_stays_colorable() {
        let catalog = Catalog::embedded();
        let pat = catalog.instantiate("b-1", &[]).unwrap();
        let host = bowtie_ring([6, 5, 6, 5], false, true);
        let occ = &find_occurrences(&pat, &host)[0];
        let out = apply_surgery(&pat, occ, &host).result.unwrap();
        assert!(crate::solver::solve(&out).is_some());
        assert!(crate::solver::solve(&host).is_some());
    }
}
