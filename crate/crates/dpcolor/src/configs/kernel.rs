//! Exhaustive kernel verification of a catalog entry.
//!
//! A kernel check asks: for every admissible signature of the pattern and
//! every coloring of the re-extension frontier that can arise from a proper
//! coloring of the reduced host, can the removed vertices always be properly
//! colored?
//!
//! Signatures are enumerated up to switching: the designated straightening
//! paths are extended to a spanning tree which is held straight, and each
//! co-tree edge ranges over the six permutations, filtered by the entry's
//! cycle-sign constraints. Because every equality pair is joined inside the
//! straightened tree, "equal colors" is literal in this gauge. Frontier
//! tuples are filtered by properness on frontier-frontier pattern edges and
//! by the inserted straight edges.

use super::{ConfigError, ConfigPattern, Sign};
use crate::perm::{Perm, ALL_PERMS};
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

/// One counterexample found by the verifier.
#[derive(Debug, Clone, Serialize)]
pub struct KernelFailure {
    /// Co-tree edge assignment, as `(u, v, permutation word)` triples.
    pub signature: Vec<(String, String, String)>,
    /// Frontier coloring, as `(vertex, color in 1..=3)` pairs.
    pub tuple: Vec<(String, u8)>,
    /// For retention kernels, how many port colors extended.
    pub retained: Option<usize>,
}

/// Outcome of a kernel verification.
#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    /// Entry name.
    pub name: String,
    /// Number of signature classes enumerated.
    pub signature_classes: u64,
    /// Number of admissible frontier tuples checked (summed over classes).
    pub tuples_checked: u64,
    /// Total number of failing (signature, tuple) pairs.
    pub failure_count: u64,
    /// First few failures, for reporting.
    pub failures: Vec<KernelFailure>,
    /// Whether the kernel holds.
    pub ok: bool,
    /// Wall-clock time in milliseconds.
    pub elapsed_ms: u128,
}

const MAX_STORED_FAILURES: usize = 25;

/// Verifies the kernel of a pattern. Fails early (with `Err`) on structural
/// problems; a failing kernel is reported through the `ok` flag.
pub fn verify_kernel(p: &ConfigPattern) -> Result<KernelReport, ConfigError> {
    p.validate()?;
    let start = Instant::now();
    let n = p.vertices.len();

    // Adjacency with edge indices.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge idx)
    for (e, &(a, b)) in p.edges.iter().enumerate() {
        adj[a].push((b, e));
        adj[b].push((a, e));
    }

    // Spanning tree: straightening paths first, then BFS.
    let mut in_tree = vec![false; p.edges.len()];
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    let add_tree = |dsu: &mut Vec<usize>, in_tree: &mut Vec<bool>, e: usize| {
        let (a, b) = p.edges[e];
        let (ra, rb) = (find(dsu, a), find(dsu, b));
        if ra != rb {
            dsu[ra] = rb;
            in_tree[e] = true;
        }
    };
    for path in &p.script.paths {
        for w in path.windows(2) {
            let e = edge_index(p, w[0], w[1]).expect("validated path edge");
            add_tree(&mut dsu, &mut in_tree, e);
        }
    }
    for e in 0..p.edges.len() {
        add_tree(&mut dsu, &mut in_tree, e);
    }
    let root = find(&mut dsu, 0);
    if (0..n).any(|v| find(&mut dsu, v) != root) {
        return Err(ConfigError::Invalid(
            p.name.clone(),
            "pattern is not connected".into(),
        ));
    }
    let cotree: Vec<usize> = (0..p.edges.len()).filter(|&e| !in_tree[e]).collect();
    let cotree_pos: Vec<Option<usize>> = {
        let mut v = vec![None; p.edges.len()];
        for (i, &e) in cotree.iter().enumerate() {
            v[e] = Some(i);
        }
        v
    };

    // Cycle constraints as arc lists: (edge idx, forward?) per step.
    struct Cyc {
        arcs: Vec<(usize, bool)>,
        sign: Sign,
        last_cotree: usize, // position in `cotree` after which it is decidable
    }
    let mut cycles = Vec::new();
    for c in &p.cycles {
        if c.sign == Sign::Any {
            continue;
        }
        let m = c.cycle.len();
        let mut arcs = Vec::with_capacity(m);
        let mut last = 0usize;
        for i in 0..m {
            let (a, b) = (c.cycle[i], c.cycle[(i + 1) % m]);
            let e = edge_index(p, a, b).ok_or_else(|| {
                ConfigError::Invalid(p.name.clone(), "constrained cycle uses a non-edge".into())
            })?;
            arcs.push((e, p.edges[e] == (a, b)));
            if let Some(pos) = cotree_pos[e] {
                last = last.max(pos);
            }
        }
        cycles.push(Cyc {
            arcs,
            sign: c.sign,
            last_cotree: last,
        });
    }
    // Constraints with no co-tree edge must hold for the all-straight tree.
    for c in &cycles {
        if c.arcs.iter().all(|&(e, _)| in_tree[e]) && c.sign == Sign::Negative {
            return Err(ConfigError::Invalid(
                p.name.clone(),
                "negative cycle lies entirely in the straightened tree".into(),
            ));
        }
    }

    // Frontier classes via union-find over the equality pairs.
    let frontier: Vec<usize> = p.script.frontier.clone();
    let is_frontier: Vec<bool> = {
        let mut v = vec![false; n];
        for &f in &frontier {
            v[f] = true;
        }
        v
    };
    let mut cls: Vec<usize> = (0..n).collect();
    for &(a, b) in p.script.identify.iter().chain(p.script.equal.iter()) {
        if !is_frontier[a] || !is_frontier[b] {
            return Err(ConfigError::Invalid(
                p.name.clone(),
                "equality pair off the frontier".into(),
            ));
        }
        let (ra, rb) = (find(&mut cls, a), find(&mut cls, b));
        if ra != rb {
            cls[ra] = rb;
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &f in &frontier {
        let r = find(&mut cls, f);
        if let Some(&g) = frontier
            .iter()
            .find(|&&g| class_of[g] != usize::MAX && find(&mut cls, g) == r)
        {
            class_of[f] = class_of[g];
            classes[class_of[g]].push(f);
        } else {
            class_of[f] = classes.len();
            classes.push(vec![f]);
        }
    }

    // Removed-vertex components (for early pruning during tuple search).
    let removed: BTreeSet<usize> = p.script.remove.iter().copied().collect();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &r in &removed {
        if comp_of[r] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![r];
        let mut members = Vec::new();
        comp_of[r] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &(u, _) in &adj[v] {
                if removed.contains(&u) && comp_of[u] == usize::MAX {
                    comp_of[u] = id;
                    stack.push(u);
                }
            }
        }
        comps.push(members);
    }
    // Boundary classes per component.
    let comp_boundary: Vec<BTreeSet<usize>> = comps
        .iter()
        .map(|members| {
            members
                .iter()
                .flat_map(|&v| adj[v].iter().map(|&(u, _)| u))
                .filter(|&u| is_frontier[u])
                .map(|u| class_of[u])
                .collect()
        })
        .collect();

    // Class assignment order: complete components as early as possible.
    let mut order: Vec<usize> = Vec::new();
    let mut placed = vec![false; classes.len()];
    for b in &comp_boundary {
        for &c in b {
            if !placed[c] {
                placed[c] = true;
                order.push(c);
            }
        }
    }
    for c in 0..classes.len() {
        if !placed[c] {
            order.push(c);
        }
    }
    let pos_in_order: Vec<usize> = {
        let mut v = vec![0; classes.len()];
        for (i, &c) in order.iter().enumerate() {
            v[c] = i;
        }
        v
    };
    // Component i is checkable once all its boundary classes are assigned.
    let comp_ready_at: Vec<usize> = comp_boundary
        .iter()
        .map(|b| b.iter().map(|&c| pos_in_order[c]).max().map_or(0, |m| m + 1))
        .collect();
    let retain = p.script.retain;
    // Frontier-frontier edges and insert pairs, checkable at a given depth.
    let mut edge_checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); order.len() + 1];
    for (e, &(a, b)) in p.edges.iter().enumerate() {
        if is_frontier[a] && is_frontier[b] {
            let d = pos_in_order[class_of[a]].max(pos_in_order[class_of[b]]) + 1;
            edge_checks[d].push((a, b, e));
        }
    }
    let mut insert_checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order.len() + 1];
    for &(a, b) in &p.script.insert {
        let d = pos_in_order[class_of[a]].max(pos_in_order[class_of[b]]) + 1;
        insert_checks[d].push((a, b));
    }

    // Target elimination order: most-constrained-first within components.
    let target_order = {
        let mut placed: Vec<bool> = (0..n).map(|v| !removed.contains(&v)).collect();
        let mut ord = Vec::new();
        for _ in 0..removed.len() {
            let best = removed
                .iter()
                .copied()
                .filter(|&v| !placed[v])
                .max_by_key(|&v| adj[v].iter().filter(|&&(u, _)| placed[u]).count())
                .unwrap();
            placed[best] = true;
            ord.push(best);
        }
        ord
    };

    let mut sig = vec![Perm::Id; p.edges.len()];
    let mut report = KernelReport {
        name: p.name.clone(),
        signature_classes: 0,
        tuples_checked: 0,
        failure_count: 0,
        failures: Vec::new(),
        ok: true,
        elapsed_ms: 0,
    };

    // Enumerate co-tree assignments with sign filtering.
    fn cyc_value(sig: &[Perm], arcs: &[(usize, bool)]) -> Perm {
        // Ordered product along the walk: the permutation mapping the color
        // of the first vertex around the cycle.
        let mut acc = Perm::Id;
        for &(e, fwd) in arcs {
            let s = if fwd { sig[e] } else { sig[e].inverse() };
            acc = s.compose(acc);
        }
        acc
    }
    struct Ctx<'a> {
        p: &'a ConfigPattern,
        adj: &'a [Vec<(usize, usize)>],
        classes: &'a [Vec<usize>],
        order: &'a [usize],
        comps: &'a [Vec<usize>],
        comp_ready_at: &'a [usize],
        edge_checks: &'a [Vec<(usize, usize, usize)>],
        insert_checks: &'a [Vec<(usize, usize)>],
        target_order: &'a [usize],
        cotree: &'a [usize],
        retain: Option<(usize, usize)>,
    }
    let ctx = Ctx {
        p,
        adj: &adj,
        classes: &classes,
        order: &order,
        comps: &comps,
        comp_ready_at: &comp_ready_at,
        edge_checks: &edge_checks,
        insert_checks: &insert_checks,
        target_order: &target_order,
        cotree: &cotree,
        retain,
    };

    fn arc_perm(p: &ConfigPattern, sig: &[Perm], e: usize, from: usize) -> Perm {
        if p.edges[e].0 == from {
            sig[e]
        } else {
            sig[e].inverse()
        }
    }

    /// Extends `colors` over `targets[ti..]`; colors uses 0..=2, 3 = unset.
    fn extend(ctx: &Ctx, sig: &[Perm], colors: &mut [u8], ti: usize, targets: &[usize]) -> bool {
        if ti == targets.len() {
            return true;
        }
        let v = targets[ti];
        'col: for c in 0..3u8 {
            for &(u, e) in &ctx.adj[v] {
                if colors[u] < 3 && arc_perm(ctx.p, sig, e, u).apply(colors[u]) == c {
                    continue 'col;
                }
            }
            colors[v] = c;
            if extend(ctx, sig, colors, ti + 1, targets) {
                colors[v] = 3;
                return true;
            }
            colors[v] = 3;
        }
        false
    }

    /// Solves one component by restricting the target order to it.
    fn component_ok(ctx: &Ctx, sig: &[Perm], colors: &mut [u8], comp: usize) -> bool {
        let targets: Vec<usize> = ctx
            .target_order
            .iter()
            .copied()
            .filter(|&v| ctx.comps[comp].contains(&v))
            .collect();
        extend(ctx, sig, colors, 0, &targets)
    }

    #[allow(clippy::too_many_arguments)]
    fn tuples(
        ctx: &Ctx,
        sig: &[Perm],
        colors: &mut [u8],
        depth: usize,
        report: &mut KernelReport,
    ) {
        // Constraint checks enabled at this depth.
        for &(a, b, e) in &ctx.edge_checks[depth] {
            if arc_perm(ctx.p, sig, e, a).apply(colors[a]) == colors[b] {
                return;
            }
        }
        for &(a, b) in &ctx.insert_checks[depth] {
            if colors[a] == colors[b] {
                return;
            }
        }
        if ctx.retain.is_none() {
            for (ci, ready) in ctx.comp_ready_at.iter().enumerate() {
                if *ready == depth && !component_ok(ctx, sig, colors, ci) {
                    // Count the failing subtree as one failure per leaf
                    // would be noisy; record one failure at this tuple
                    // prefix and prune.
                    report.failure_count += 1;
                    report.ok = false;
                    if report.failures.len() < MAX_STORED_FAILURES {
                        report.failures.push(describe_failure(ctx, sig, colors, None));
                    }
                    return;
                }
            }
        }
        if depth == ctx.order.len() {
            report.tuples_checked += 1;
            if let Some((v, need)) = ctx.retain {
                let mut got = 0;
                for c in 0..3u8 {
                    colors[v] = c;
                    if extend(ctx, sig, colors, 0, ctx.target_order) {
                        got += 1;
                    }
                    colors[v] = 3;
                }
                if got < need {
                    report.failure_count += 1;
                    report.ok = false;
                    if report.failures.len() < MAX_STORED_FAILURES {
                        report
                            .failures
                            .push(describe_failure(ctx, sig, colors, Some(got)));
                    }
                }
            }
            return;
        }
        let class = ctx.order[depth];
        for c in 0..3u8 {
            for &v in &ctx.classes[class] {
                colors[v] = c;
            }
            tuples(ctx, sig, colors, depth + 1, report);
            for &v in &ctx.classes[class] {
                colors[v] = 3;
            }
        }
    }

    fn describe_failure(
        ctx: &Ctx,
        sig: &[Perm],
        colors: &[u8],
        retained: Option<usize>,
    ) -> KernelFailure {
        KernelFailure {
            signature: ctx
                .cotree
                .iter()
                .map(|&e| {
                    let (a, b) = ctx.p.edges[e];
                    (
                        ctx.p.vertices[a].name.clone(),
                        ctx.p.vertices[b].name.clone(),
                        sig[e].word().to_string(),
                    )
                })
                .collect(),
            tuple: (0..colors.len())
                .filter(|&v| colors[v] < 3)
                .map(|v| (ctx.p.vertices[v].name.clone(), colors[v] + 1))
                .collect(),
            retained,
        }
    }

    fn enumerate_sigs(
        ctx: &Ctx,
        cycles: &[Cyc],
        sig: &mut Vec<Perm>,
        i: usize,
        report: &mut KernelReport,
    ) {
        if i == ctx.cotree.len() {
            report.signature_classes += 1;
            let mut colors = vec![3u8; ctx.p.vertices.len()];
            tuples(ctx, sig, &mut colors, 0, report);
            return;
        }
        let e = ctx.cotree[i];
        'perm: for &s in ALL_PERMS.iter() {
            sig[e] = s;
            for c in cycles {
                if c.last_cotree == i {
                    let val = cyc_value(sig, &c.arcs);
                    let pos = val.is_identity();
                    let want = c.sign == Sign::Positive;
                    if pos != want {
                        continue 'perm;
                    }
                }
            }
            enumerate_sigs(ctx, cycles, sig, i + 1, report);
        }
        sig[e] = Perm::Id;
    }

    if cotree.is_empty() {
        report.signature_classes = 1;
        let mut colors = vec![3u8; n];
        tuples(&ctx, &sig, &mut colors, 0, &mut report);
    } else {
        enumerate_sigs(&ctx, &cycles, &mut sig, 0, &mut report);
    }

    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn edge_index(p: &ConfigPattern, a: usize, b: usize) -> Option<usize> {
    p.edges
        .iter()
        .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
}

#[cfg(test)]
mod tests {
    use super::super::builders::build_i;
    use super::super::catalog::Catalog;
    use super::*;

    #[test]
    fn i1_retains_two_port_colors() {
        let rep = verify_kernel(&build_i(1)).unwrap();
        assert!(rep.ok, "failures: {:?}", rep.failures);
        assert_eq!(rep.signature_classes, 5);
        assert_eq!(rep.tuples_checked, 5 * 9);
    }

    #[test]
    fn i2_counts() {
        let rep = verify_kernel(&build_i(2)).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.signature_classes, 25);
        assert_eq!(rep.tuples_checked, 25 * 27);
    }

    #[test]
    fn b1_kernel_holds() {
        let cat = Catalog::embedded();
        let rep = verify_kernel(&cat.instantiate("b-1", &[]).unwrap()).unwrap();
        assert!(rep.ok, "failures: {:?}", rep.failures);
        assert_eq!(rep.signature_classes, 36);
    }

    #[test]
    fn a_positive_triangle_with_free_frontier_fails() {
        // Sanity: the machinery does find counterexamples. A single
        // positive triangle of internal 3-vertices cannot always be
        // extended: color all three outside neighbors alike.
        let mut b = super::super::builders::PatternBuilder::new("bad");
        let u = b.vertex("u", crate::configs::Theta::Exact(3), true);
        let v = b.vertex("v", crate::configs::Theta::Exact(3), true);
        let w = b.vertex("w", crate::configs::Theta::Exact(3), true);
        b.triangle(u, v, w, crate::configs::Sign::Positive);
        b.attach("u'", u);
        b.attach("v'", v);
        b.attach("w'", w);
        b.remove([u, v, w]);
        let rep = verify_kernel(&b.build()).unwrap();
        assert!(!rep.ok);
        assert!(rep.failure_count > 0);
    }
}
