//! The discharging engine: exact charge bookkeeping over a signed plane
//! graph, claim-by-claim auditing, and a witness search for negative charges.
//!
//! Every vertex and every face starts with charge `d(x) - 4`, except the
//! outer face `f0` which starts with `d(f0) + 4`; the grand total is 0 on any
//! connected plane graph. Charge then moves by six rules:
//!
//! * R1: `f0` sends `4/3` to each incident vertex (per incidence of the
//!   boundary walk).
//! * R2: a C-vertex `u` sends to each incident 3-face `f != f0` charge `5/9`
//!   if `u` is an external 3-vertex or an external 4-vertex incident with two
//!   3-faces, and charge `1` otherwise.
//! * R3: every 5⁺-face `f != f0` sends `(d(f)-4)/d(f)` to each incident
//!   vertex (per incidence), so its final charge is exactly 0.
//! * R4: for a `3Δ`-vertex `u` of a snowflake `S` whose outer neighbor `u'`
//!   lies outside `S`, `u'` sends to `u`: `2/9` when `u` is bad and `u'` is a
//!   `3Δ°`- or C-vertex; `2/27` when `u` is `3Δ+` but not bad and `u'` is a
//!   `3Δ-`-, `3Δ°`- or C-vertex; `2/27` when `u` is `3Δ-` and `u'` is a
//!   `3Δ°`- or C-vertex.
//! * R5: a nice vertex of a nice 9-face sends `2/27` (1-nice) or `4/27`
//!   (2-nice) to the related snowflake's account.
//! * R6: if a string `L` lies on the boundary of an `11⁻`-face `f != f0`,
//!   each vertex adjacent to `L` sends `(12 - d(f)) / (6 d(f))` to every
//!   vertex of `L`.
//!
//! A snowflake's account aggregates the final charges of its `3Δ`- and
//! `4⋈`-vertices and its 3-faces, plus the R5 receipts. The audit checks:
//! each snowflake account is nonnegative; each internal C-vertex is
//! nonnegative; each external C-vertex is strictly positive; each 2-vertex on
//! a flanked string is nonnegative (a run of 2-vertices with fewer than two
//! distinct non-2-neighbors has no R6 income and is outside the argument's
//! model, e.g. a bare cycle); `f0` ends at exactly `4 - d(f0)/3`; every
//! 5⁺-face other than `f0` ends at exactly 0; and the grand total over all
//! accounts is still 0.

use crate::classify::{classify_full, Classification, Role, TriKind};
use crate::configs::catalog::Catalog;
use crate::configs::matcher::find_occurrences;
use crate::rat::{Overflow, Rat};
use crate::signing::SignedPlaneGraph;
use serde::Serialize;
use std::collections::BTreeMap;

/// A charge-bearing account: a vertex, a face, or a snowflake (which only
/// ever receives R5 transfers; its structural members keep their own
/// accounts and are aggregated when the snowflake is audited).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Account {
    /// A vertex by id.
    Vertex(usize),
    /// A face by id.
    Face(usize),
    /// An accepted snowflake by index into `Classification::snowflakes`.
    Snowflake(usize),
}

/// The rule responsible for a transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// Outer face to incident vertices.
    R1,
    /// C-vertices to incident 3-faces.
    R2,
    /// 5⁺-faces to incident vertices.
    R3,
    /// Outer neighbor to a bad vertex.
    R4a,
    /// Outer neighbor to a non-bad `3Δ+`-vertex.
    R4b,
    /// Outer neighbor to a `3Δ-`-vertex.
    R4c,
    /// Nice vertices to related snowflakes.
    R5,
    /// Vertices adjacent to a string, to the string's 2-vertices.
    R6,
}

/// One booked movement of charge.
#[derive(Debug, Clone, Serialize)]
pub struct Transfer {
    /// The rule that fired.
    pub rule: Rule,
    /// The paying account.
    pub from: Account,
    /// The receiving account.
    pub to: Account,
    /// The (positive) amount moved.
    pub amount: Rat,
}

/// Outcome of one audited claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    /// Short identifier, e.g. `"snowflake-nonnegative"`.
    pub name: String,
    /// Whether every instance satisfied the claim.
    pub ok: bool,
    /// Human-readable descriptions of the failing instances.
    pub violations: Vec<String>,
}

/// Full output of the discharging procedure on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct DischargeReport {
    /// Final charge per vertex.
    pub vertex_final: Vec<Rat>,
    /// Final charge per face.
    pub face_final: Vec<Rat>,
    /// R5 receipts per accepted snowflake.
    pub snowflake_received: Vec<Rat>,
    /// Aggregated final charge per accepted snowflake: member `3Δ`- and
    /// `4⋈`-vertices, member 3-faces, and R5 receipts.
    pub snowflake_final: Vec<Rat>,
    /// Every transfer, in rule order.
    pub transfers: Vec<Transfer>,
    /// Total amount moved per rule.
    pub rule_totals: BTreeMap<String, Rat>,
    /// Whether the initial charges sum to zero.
    pub initial_zero: bool,
    /// Whether the final charges (vertices, faces and snowflake accounts)
    /// still sum to zero.
    pub final_zero: bool,
    /// The audited claims.
    pub claims: Vec<ClaimResult>,
    /// Structure the charge argument does not model: rejected 3-face
    /// components, ambiguous nice faces, degenerate strings.
    pub unmodeled: Vec<String>,
    /// For each (sender, string) pair touched by R6, the total sent; the
    /// structural bound caps each at `1/4`.
    pub string_totals: Vec<StringTotal>,
    /// Whether every claim passed and nothing was unmodeled.
    pub ok: bool,
}

/// Total R6 charge from one sender to one string.
#[derive(Debug, Clone, Serialize)]
pub struct StringTotal {
    /// The sending vertex.
    pub sender: usize,
    /// The 2-vertices of the string.
    pub string: Vec<usize>,
    /// The total across all faces of the string.
    pub total: Rat,
    /// Whether the total respects the `1/4` cap.
    pub within_cap: bool,
    /// Whether the string satisfies the structural length bound
    /// (`t < floor((d(f)-1)/2)` for each of its faces); the cap is only a
    /// theorem for strings that do.
    pub modeled: bool,
}

/// A ledger of account balances with overflow-checked arithmetic.
struct Ledger {
    balance: BTreeMap<Account, Rat>,
    transfers: Vec<Transfer>,
}

impl Ledger {
    fn new() -> Ledger {
        Ledger {
            balance: BTreeMap::new(),
            transfers: Vec::new(),
        }
    }

    fn seed(&mut self, acct: Account, amount: Rat) {
        self.balance.insert(acct, amount);
    }

    fn get(&self, acct: Account) -> Rat {
        self.balance.get(&acct).copied().unwrap_or(Rat::ZERO)
    }

    fn transfer(
        &mut self,
        rule: Rule,
        from: Account,
        to: Account,
        amount: Rat,
    ) -> Result<(), Overflow> {
        let fb = self.get(from).sub(amount)?;
        self.balance.insert(from, fb);
        let tb = self.get(to).add(amount)?;
        self.balance.insert(to, tb);
        self.transfers.push(Transfer {
            rule,
            from,
            to,
            amount,
        });
        Ok(())
    }
}

/// Runs the discharging procedure using a precomputed classification.
pub fn discharge_with(
    sg: &SignedPlaneGraph,
    cls: &Classification,
) -> Result<DischargeReport, Overflow> {
    let g = &sg.graph;
    let n = g.n();
    let outer = g.outer_face();
    let mut ledger = Ledger::new();
    let mut unmodeled: Vec<String> = Vec::new();

    // Initial charges.
    let mut initial_sum = Rat::ZERO;
    for v in 0..n {
        let c = Rat::int(g.degree(v) as i64 - 4);
        ledger.seed(Account::Vertex(v), c);
        initial_sum = initial_sum.add(c)?;
    }
    for f in 0..g.faces().len() {
        let d = g.faces()[f].len() as i64;
        let c = if f == outer {
            Rat::int(d + 4)
        } else {
            Rat::int(d - 4)
        };
        ledger.seed(Account::Face(f), c);
        initial_sum = initial_sum.add(c)?;
    }
    let initial_zero = initial_sum.is_zero();

    // R1: the outer face pays each incidence of its boundary walk.
    let third_of_four = Rat::new(4, 3);
    for &v in &g.faces()[outer].walk() {
        ledger.transfer(Rule::R1, Account::Face(outer), Account::Vertex(v), third_of_four)?;
    }

    // R2: C-vertices pay their incident 3-faces.
    for v in 0..n {
        let info = &cls.vertices[v];
        if info.role != Role::C {
            continue;
        }
        let reduced_rate = info.external
            && (g.degree(v) == 3 || (g.degree(v) == 4 && info.tri_faces.len() >= 2));
        let amount = if reduced_rate { Rat::new(5, 9) } else { Rat::int(1) };
        for &f in &info.tri_faces {
            ledger.transfer(Rule::R2, Account::Vertex(v), Account::Face(f), amount)?;
        }
    }

    // R3: 5⁺-faces pay each incidence of their walk.
    for f in 0..g.faces().len() {
        let d = g.faces()[f].len();
        if f == outer || d < 5 {
            continue;
        }
        let amount = Rat::new(d as i64 - 4, d as i64);
        for &v in &g.faces()[f].walk() {
            ledger.transfer(Rule::R3, Account::Face(f), Account::Vertex(v), amount)?;
        }
    }

    // R4: outer neighbors pay 3Δ-vertices of snowflakes.
    for s in &cls.snowflakes {
        for &u in &s.tri_delta {
            let info = &cls.vertices[u];
            let Some(up) = info.outer_neighbor else {
                unmodeled.push(format!("vertex {u} has no outer neighbor"));
                continue;
            };
            if s.vertices.contains(&up) {
                continue;
            }
            let up_role = cls.vertices[up].role;
            let up_lone_or_c = matches!(up_role, Role::TriDelta(TriKind::Lone)) || up_role == Role::C;
            let (rule, amount) = if info.bad {
                if !up_lone_or_c {
                    continue;
                }
                (Rule::R4a, Rat::new(2, 9))
            } else if info.role == Role::TriDelta(TriKind::Plus) {
                if !(up_lone_or_c || up_role == Role::TriDelta(TriKind::Minus)) {
                    continue;
                }
                (Rule::R4b, Rat::new(2, 27))
            } else if info.role == Role::TriDelta(TriKind::Minus) {
                if !up_lone_or_c {
                    continue;
                }
                (Rule::R4c, Rat::new(2, 27))
            } else {
                continue;
            };
            ledger.transfer(rule, Account::Vertex(up), Account::Vertex(u), amount)?;
        }
    }

    // R5: nice vertices pay the related snowflake's account.
    for nf in &cls.nice_faces {
        if nf.unmodeled {
            unmodeled.push(format!("nice 9-face {} has ambiguous related snowflake", nf.face));
            continue;
        }
        let Some(s) = nf.related else {
            unmodeled.push(format!(
                "nice 9-face {} relates to a rejected 3-face component",
                nf.face
            ));
            continue;
        };
        for nv in &nf.nice_vertices {
            let amount = if nv.two_nice {
                Rat::new(4, 27)
            } else {
                Rat::new(2, 27)
            };
            ledger.transfer(Rule::R5, Account::Vertex(nv.vertex), Account::Snowflake(s), amount)?;
        }
    }

    // R6: vertices adjacent to strings pay the string's 2-vertices, once per
    // internal 11⁻-face carrying the string.
    let mut string_totals: Vec<StringTotal> = Vec::new();
    let mut modeled_two: Vec<bool> = vec![false; n];
    for rec in g.strings() {
        if rec.ends.len() == 2 {
            for &w in &rec.vertices {
                modeled_two[w] = true;
            }
        }
        if rec.ends.len() == 1 {
            unmodeled.push(format!(
                "string {:?} has fewer than two distinct neighbors",
                rec.vertices
            ));
        }
        // The 1/4 cap is only a theorem for strings that satisfy the
        // structural length bound on every face carrying them; longer runs
        // are surfaced as out-of-model structure instead.
        let modeled = rec.ends.len() == 2
            && rec
                .faces
                .iter()
                .all(|&f| rec.vertices.len() < (g.faces()[f].len().saturating_sub(1)) / 2);
        if rec.ends.len() == 2 && !modeled {
            unmodeled.push(format!(
                "string {:?} exceeds the length bound for one of its faces",
                rec.vertices
            ));
        }
        let mut per_sender: BTreeMap<usize, Rat> = BTreeMap::new();
        for &f in &rec.faces {
            let d = g.faces()[f].len() as i64;
            if d > 11 {
                continue;
            }
            let amount = Rat::new(12 - d, 6 * d);
            for &u in &rec.ends {
                for &w in &rec.vertices {
                    ledger.transfer(Rule::R6, Account::Vertex(u), Account::Vertex(w), amount)?;
                }
                let total = per_sender.entry(u).or_insert(Rat::ZERO);
                *total = total.add(amount.mul(Rat::int(rec.vertices.len() as i64))?)?;
            }
        }
        let cap = Rat::new(1, 4);
        for (sender, total) in per_sender {
            string_totals.push(StringTotal {
                sender,
                string: rec.vertices.clone(),
                total,
                within_cap: total <= cap,
                modeled,
            });
        }
    }

    // Rejected components are structure the claims cannot vouch for.
    for r in &cls.rejected {
        unmodeled.push(format!(
            "3-face component {:?} is not a snowflake: {:?}",
            r.faces, r.reason
        ));
    }

    // Snapshot final charges and aggregate the snowflake accounts.
    let vertex_final: Vec<Rat> = (0..n).map(|v| ledger.get(Account::Vertex(v))).collect();
    let face_final: Vec<Rat> = (0..g.faces().len())
        .map(|f| ledger.get(Account::Face(f)))
        .collect();
    let snowflake_received: Vec<Rat> = (0..cls.snowflakes.len())
        .map(|s| ledger.get(Account::Snowflake(s)))
        .collect();
    let mut snowflake_final = Vec::new();
    for (i, s) in cls.snowflakes.iter().enumerate() {
        let mut total = snowflake_received[i];
        for &v in s.tri_delta.iter().chain(&s.bowtie) {
            total = total.add(vertex_final[v])?;
        }
        for &f in &s.faces {
            total = total.add(face_final[f])?;
        }
        snowflake_final.push(total);
    }

    let mut final_sum = Rat::ZERO;
    for b in ledger.balance.values() {
        final_sum = final_sum.add(*b)?;
    }
    let final_zero = final_sum.is_zero();

    // Claims.
    let mut claims = Vec::new();
    let mut claim = |name: &str, violations: Vec<String>| {
        claims.push(ClaimResult {
            name: name.to_string(),
            ok: violations.is_empty(),
            violations,
        });
    };

    claim(
        "snowflake-nonnegative",
        snowflake_final
            .iter()
            .enumerate()
            .filter(|(_, c)| c.signum() < 0)
            .map(|(i, c)| format!("snowflake {i} ({:?}) has charge {c}", cls.snowflakes[i].faces))
            .collect(),
    );
    claim(
        "internal-c-vertex-nonnegative",
        (0..n)
            .filter(|&v| cls.vertices[v].role == Role::C && !cls.vertices[v].external)
            .filter(|&v| vertex_final[v].signum() < 0)
            .map(|v| format!("internal C-vertex {v} has charge {}", vertex_final[v]))
            .collect(),
    );
    claim(
        "external-c-vertex-positive",
        (0..n)
            .filter(|&v| cls.vertices[v].role == Role::C && cls.vertices[v].external)
            .filter(|&v| vertex_final[v].signum() <= 0)
            .map(|v| format!("external C-vertex {v} has charge {}", vertex_final[v]))
            .collect(),
    );
    claim(
        "two-vertex-nonnegative",
        (0..n)
            .filter(|&v| cls.vertices[v].role == Role::Two && modeled_two[v])
            .filter(|&v| vertex_final[v].signum() < 0)
            .map(|v| format!("2-vertex {v} has charge {}", vertex_final[v]))
            .collect(),
    );
    let d0 = g.faces()[outer].len() as i64;
    let expected_outer = Rat::int(4).sub(Rat::new(d0, 3))?;
    claim(
        "outer-face-exact",
        if face_final[outer] == expected_outer {
            vec![]
        } else {
            vec![format!(
                "outer face has charge {}, expected {expected_outer}",
                face_final[outer]
            )]
        },
    );
    claim(
        "big-face-zero",
        (0..g.faces().len())
            .filter(|&f| f != outer && g.faces()[f].len() >= 5)
            .filter(|&f| !face_final[f].is_zero())
            .map(|f| format!("{}-face {f} has charge {}", g.faces()[f].len(), face_final[f]))
            .collect(),
    );
    claim(
        "string-cap",
        string_totals
            .iter()
            .filter(|t| t.modeled && !t.within_cap)
            .map(|t| {
                format!(
                    "vertex {} sends {} to string {:?}, above 1/4",
                    t.sender, t.total, t.string
                )
            })
            .collect(),
    );
    claim(
        "conservation",
        match (initial_zero, final_zero) {
            (true, true) => vec![],
            (i, f) => vec![format!("initial sum zero: {i}, final sum zero: {f}")],
        },
    );

    let mut rule_totals: BTreeMap<String, Rat> = BTreeMap::new();
    for t in &ledger.transfers {
        let e = rule_totals.entry(format!("{:?}", t.rule)).or_insert(Rat::ZERO);
        *e = e.add(t.amount)?;
    }

    let ok = claims.iter().all(|c| c.ok) && unmodeled.is_empty();
    Ok(DischargeReport {
        vertex_final,
        face_final,
        snowflake_received,
        snowflake_final,
        transfers: ledger.transfers,
        rule_totals,
        initial_zero,
        final_zero,
        claims,
        unmodeled,
        string_totals,
        ok,
    })
}

/// Classifies and discharges in one call.
pub fn discharge(sg: &SignedPlaneGraph) -> Result<DischargeReport, Overflow> {
    let cls = classify_full(sg);
    discharge_with(sg, &cls)
}

/// One negative account together with the evidence explaining it.
#[derive(Debug, Clone, Serialize)]
pub struct NegativeCharge {
    /// The failing account.
    pub account: Account,
    /// Its final charge.
    pub charge: Rat,
    /// The vertices involved (snowflake members, the vertex itself, or the
    /// face walk).
    pub vertices: Vec<usize>,
    /// Explanations found: configuration occurrences touching the account or
    /// structural defects of the host.
    pub explanations: Vec<String>,
}

/// Output of [`witness`]: every claim violation, each tied to evidence.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    /// The negative (or claim-violating) accounts.
    pub negatives: Vec<NegativeCharge>,
    /// How many of them have no explanation.
    pub unexplained: usize,
    /// Whether the host fails the structural audit outright.
    pub structural_defects: Vec<String>,
    /// Whether every negative account is explained.
    pub ok: bool,
}

/// Explains every claim violation of the discharging audit by locating a
/// reducible configuration from `catalog` that touches the violating account,
/// or by a structural defect of the host (forbidden cycles, boundary
/// problems, oversized strings, rejected 3-face components).
pub fn witness(sg: &SignedPlaneGraph, catalog: &Catalog) -> Result<WitnessReport, Overflow> {
    let cls = classify_full(sg);
    let report = discharge_with(sg, &cls)?;
    let g = &sg.graph;

    let mut structural_defects: Vec<String> = Vec::new();
    for c in g.forbidden_cycles() {
        structural_defects.push(format!("forbidden cycle of length {}: {c:?}", c.len()));
    }
    let audit = g.boundary_audit();
    if !audit.is_clean() {
        structural_defects.push(format!(
            "boundary audit failed: cycle={}, over12={}, chords={:?}, cuts={:?}, low-degree={:?}",
            audit.boundary_is_cycle,
            audit.over_twelve,
            audit.chords,
            audit.cut_vertices,
            audit.internal_low_degree
        ));
    }
    for (rec, f) in g.string_length_violations() {
        structural_defects.push(format!(
            "string {:?} too long for {}-face {f}",
            rec.vertices,
            g.faces()[f].len()
        ));
    }
    for note in &report.unmodeled {
        structural_defects.push(note.clone());
    }

    // Occurrences of every default catalog instance, precomputed once.
    let mut occurrences: Vec<(String, Vec<usize>)> = Vec::new();
    for pat in catalog.default_instances() {
        for occ in find_occurrences(&pat, sg) {
            let verts: Vec<usize> = occ.core_image(&pat).into_iter().collect();
            occurrences.push((pat.name.clone(), verts));
        }
    }

    // Collect violating accounts from the claim results.
    let mut negatives: Vec<NegativeCharge> = Vec::new();
    let mut push = |account: Account, charge: Rat, vertices: Vec<usize>| {
        negatives.push(NegativeCharge {
            account,
            charge,
            vertices,
            explanations: Vec::new(),
        });
    };
    for (i, s) in cls.snowflakes.iter().enumerate() {
        if report.snowflake_final[i].signum() < 0 {
            push(Account::Snowflake(i), report.snowflake_final[i], s.vertices.clone());
        }
    }
    let mut modeled_two = vec![false; g.n()];
    for rec in g.strings() {
        if rec.ends.len() == 2 {
            for &w in &rec.vertices {
                modeled_two[w] = true;
            }
        }
    }
    for v in 0..g.n() {
        let info = &cls.vertices[v];
        let c = report.vertex_final[v];
        let bad = match info.role {
            Role::C if info.external => c.signum() <= 0,
            Role::C => c.signum() < 0,
            Role::Two => modeled_two[v] && c.signum() < 0,
            _ => false,
        };
        if bad {
            push(Account::Vertex(v), c, vec![v]);
        }
    }
    for f in 0..g.faces().len() {
        if f == g.outer_face() {
            continue;
        }
        let d = g.faces()[f].len();
        let c = report.face_final[f];
        let violating = if d >= 5 { !c.is_zero() } else { false };
        if violating {
            push(Account::Face(f), c, g.faces()[f].walk());
        }
    }

    // Attach explanations.
    for neg in &mut negatives {
        for (name, verts) in &occurrences {
            if neg.vertices.iter().any(|v| verts.contains(v)) {
                neg.explanations
                    .push(format!("configuration {name} on vertices {verts:?}"));
            }
        }
        if neg.explanations.is_empty() && !structural_defects.is_empty() {
            neg.explanations.extend(structural_defects.iter().cloned());
        }
    }

    let unexplained = negatives.iter().filter(|n| n.explanations.is_empty()).count();
    Ok(WitnessReport {
        negatives,
        unexplained,
        structural_defects,
        ok: unexplained == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hosts::{adversarial_suite, bowtie_ring, cycle_host, triangle_ring};

    #[test]
    fn conservation_holds_on_ring_hosts() {
        for sg in [
            cycle_host(5),
            cycle_host(12),
            triangle_ring([6, 7, 9], true),
            bowtie_ring([7, 5, 6, 6], true, true),
        ] {
            let r = discharge(&sg).unwrap();
            assert!(r.initial_zero && r.final_zero);
        }
    }

    #[test]
    fn big_faces_end_at_zero_and_outer_is_exact() {
        let sg = triangle_ring([6, 6, 6], true);
        let r = discharge(&sg).unwrap();
        let claims: BTreeMap<&str, &ClaimResult> =
            r.claims.iter().map(|c| (c.name.as_str(), c)).collect();
        assert!(claims["big-face-zero"].ok);
        assert!(claims["outer-face-exact"].ok);
        // d(f0) = 18, so the exact value is 4 - 18/3 = -2.
        let outer = sg.graph.outer_face();
        assert_eq!(r.face_final[outer], Rat::int(-2));
    }

    #[test]
    fn two_vertices_end_at_zero_on_ring_hosts() {
        let sg = bowtie_ring([6, 5, 6, 5], false, true);
        let r = discharge(&sg).unwrap();
        let cls = classify_full(&sg);
        for v in 0..sg.graph.n() {
            if cls.vertices[v].role == Role::Two {
                assert!(r.vertex_final[v].is_zero(), "vertex {v}: {}", r.vertex_final[v]);
            }
        }
    }

    #[test]
    fn r2_rates_depend_on_the_sender() {
        // Spoke ring vertices are external 3-vertices but lie on no 3-face;
        // the gadget has no C-vertices, so no R2 transfer fires at all.
        let sg = triangle_ring([6, 6, 6], true);
        let r = discharge(&sg).unwrap();
        assert!(r.transfers.iter().all(|t| t.rule != Rule::R2));
    }

    #[test]
    fn witness_explains_adversarial_hosts() {
        let catalog = Catalog::embedded();
        for (i, sg) in adversarial_suite(6, 11).iter().enumerate() {
            let w = witness(sg, &catalog).unwrap();
            assert!(!w.negatives.is_empty(), "host {i} should have a negative account");
            assert_eq!(w.unexplained, 0, "host {i}: {:?}", w.negatives);
            assert!(w
                .negatives
                .iter()
                .all(|n| n.explanations.iter().any(|e| e.starts_with("configuration"))));
        }
    }
}
