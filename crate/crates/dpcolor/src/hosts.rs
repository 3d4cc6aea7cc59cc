//! Hand-built host graphs: ring gadgets used by the matcher, surgery and
//! discharging tests, and an adversarial suite for the witness search.
//!
//! The two ring families embed a small 3-face gadget inside a long chordless
//! outer cycle, with one spoke from each degree-deficient gadget vertex to
//! the ring so that every internal vertex reaches its prescribed degree and
//! every internal face other than the gadget's own 3-faces has size at least
//! 9. The gap sizes (ring edges between consecutive spokes) are chosen so
//! that no 4-, 6- or 8-cycle appears.

use crate::perm::{Perm, ALL_PERMS};
use crate::planegraph::{cycle_graph, PlaneGraph};
use crate::signing::SignedPlaneGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A bare cycle of length `l` with the all-straight signature.
pub fn cycle_host(l: usize) -> SignedPlaneGraph {
    SignedPlaneGraph::straight(cycle_graph(l))
}

/// A transposition, used to flip a cycle product to a non-identity value.
fn transposition() -> Perm {
    *ALL_PERMS
        .iter()
        .find(|p| !p.is_identity() && p.compose(**p) == Perm::parse("123").unwrap())
        .expect("S3 contains transpositions")
}

/// A 3-face `[a b c]` of internal 3-vertices inside a ring, each gadget
/// vertex joined by one spoke to the ring. `gaps[i]` is the number of ring
/// edges between spoke `i` and spoke `i + 1`; each gap must be at least 6,
/// which makes all three ring faces 9⁺-faces and rules out 4-, 6- and
/// 8-cycles. With `negative` the 3-face's sign product is a transposition.
pub fn triangle_ring(gaps: [usize; 3], negative: bool) -> SignedPlaneGraph {
    assert!(gaps.iter().all(|&g| g >= 6), "gaps below 6 create short cycles");
    let r: usize = gaps.iter().sum();
    let (a, b, c) = (r, r + 1, r + 2);
    let spokes = [0, gaps[0], gaps[0] + gaps[1]];
    let mut rot: Vec<Vec<usize>> = (0..r).map(|i| vec![(i + 1) % r, (i + r - 1) % r]).collect();
    for (i, &s) in spokes.iter().enumerate() {
        rot[s] = vec![(s + 1) % r, r + i, (s + r - 1) % r];
    }
    rot.push(vec![spokes[0], b, c]); // a
    rot.push(vec![a, spokes[1], c]); // b
    rot.push(vec![b, spokes[2], a]); // c
    let g = PlaneGraph::new(rot, (r - 1, 0)).expect("triangle ring is planar");
    let mut sg = SignedPlaneGraph::straight(g);
    if negative {
        sg.sig.set(a, b, transposition());
    }
    sg
}

/// Two 3-faces `[u v w]` and `[w x y]` sharing the internal 4-vertex `w`
/// inside a ring; `u, v, x, y` are internal 3-vertices with one ring spoke
/// each. Gaps follow the spokes of `u, v, x, y` in ring order; the gaps
/// behind `v` and `y` border the two faces containing `w` and must be at
/// least 5, the other two at least 6. `neg1`/`neg2` control the two 3-face
/// signs.
pub fn bowtie_ring(gaps: [usize; 4], neg1: bool, neg2: bool) -> SignedPlaneGraph {
    assert!(gaps[0] >= 6 && gaps[2] >= 6, "side gaps below 6 create short cycles");
    assert!(gaps[1] >= 5 && gaps[3] >= 5, "middle gaps below 5 create short cycles");
    let r: usize = gaps.iter().sum();
    let (u, v, w, x, y) = (r, r + 1, r + 2, r + 3, r + 4);
    let spokes = [
        0,
        gaps[0],
        gaps[0] + gaps[1],
        gaps[0] + gaps[1] + gaps[2],
    ];
    let inner = [u, v, x, y];
    let mut rot: Vec<Vec<usize>> = (0..r).map(|i| vec![(i + 1) % r, (i + r - 1) % r]).collect();
    for (i, &s) in spokes.iter().enumerate() {
        rot[s] = vec![(s + 1) % r, inner[i], (s + r - 1) % r];
    }
    rot.push(vec![spokes[0], v, w]); // u
    rot.push(vec![u, spokes[1], w]); // v
    rot.push(vec![v, x, y, u]); // w
    rot.push(vec![w, spokes[2], y]); // x
    rot.push(vec![x, spokes[3], w]); // y
    let g = PlaneGraph::new(rot, (r - 1, 0)).expect("bowtie ring is planar");
    let mut sg = SignedPlaneGraph::straight(g);
    if neg1 {
        sg.sig.set(u, v, transposition());
    }
    if neg2 {
        sg.sig.set(x, y, transposition());
    }
    sg
}

/// The recoloring gadget: a 3-face `[u v w]` with pendant neighbors `u'` of
/// `u` and `v'` of `v`. Vertices are `u=0, v=1, w=2, u'=3, v'=4`; all edges
/// are straight except `uv`, which carries `sigma_uv`. The pendants are
/// precolored with `cu` and `cv` (colors `0..3`).
pub fn recolor_gadget(sigma_uv: Perm, cu: u8, cv: u8) -> SignedPlaneGraph {
    let rot = vec![vec![3, 2, 1], vec![0, 2, 4], vec![1, 0], vec![0], vec![1]];
    let g = PlaneGraph::new(rot, (1, 0)).expect("gadget is planar");
    let mut sg = SignedPlaneGraph::straight(g);
    sg.sig.set(0, 1, sigma_uv);
    sg.precolor.insert(3, cu);
    sg.precolor.insert(4, cv);
    sg
}

/// Applies a random switching at each vertex (identity half of the time).
pub fn randomize_switching(sg: &mut SignedPlaneGraph, rng: &mut ChaCha8Rng) {
    for v in 0..sg.graph.n() {
        if rng.gen_bool(0.5) {
            let tau = ALL_PERMS[rng.gen_range(0..ALL_PERMS.len())];
            sg.switch(v, tau);
        }
    }
}

/// At least `count` hosts, each containing a reducible gadget that drives
/// one snowflake's final charge negative: negative-3-face rings (final
/// charge `-12/27`) and bowtie rings (`-4/27` for every sign combination),
/// over varying gap sizes and random switchings.
pub fn adversarial_suite(count: usize, seed: u64) -> Vec<SignedPlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tri_gaps = [[6, 6, 6], [6, 6, 7], [6, 7, 7], [7, 7, 7], [6, 6, 9]];
    // Only gap sets whose final charge stays negative: bigger ring faces pay
    // the gadget more, and the deficit disappears.
    let bow_gaps = [[6, 5, 6, 5], [6, 5, 7, 5], [7, 5, 6, 5], [6, 5, 6, 6]];
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        let mut sg = if i % 2 == 0 {
            triangle_ring(tri_gaps[(i / 2) % tri_gaps.len()], true)
        } else {
            let signs = (i / 2) % 4;
            bowtie_ring(
                bow_gaps[(i / 8) % bow_gaps.len()],
                signs & 1 != 0,
                signs & 2 != 0,
            )
        };
        randomize_switching(&mut sg, &mut rng);
        out.push(sg);
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    #[test]
    fn triangle_ring_has_expected_faces() {
        let sg = triangle_ring([6, 6, 6], true);
        let g = &sg.graph;
        assert_eq!(g.n(), 21);
        let mut sizes: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 9, 9, 9, 18]);
        assert_eq!(g.faces()[g.outer_face()].len(), 18);
        assert!(g.forbidden_cycles().is_empty());
        let tri: Vec<usize> = vec![18, 19, 20];
        assert!(!sg.is_positive(&tri));
    }

    #[test]
    fn bowtie_ring_has_expected_faces() {
        let sg = bowtie_ring([6, 5, 6, 5], true, true);
        let g = &sg.graph;
        assert_eq!(g.n(), 27);
        let mut sizes: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 9, 9, 9, 9, 22]);
        assert!(g.forbidden_cycles().is_empty());
        assert_eq!(g.degree(24), 4);
        assert!(g.is_internal(24));
    }

    #[test]
    fn negative_triangle_ring_charge_is_minus_twelve_twentysevenths() {
        let sg = triangle_ring([6, 6, 6], true);
        let report = crate::discharge::discharge(&sg).unwrap();
        assert_eq!(report.snowflake_final, vec![Rat::new(-12, 27)]);
    }

    #[test]
    fn bowtie_ring_charge_is_minus_four_twentysevenths_for_all_signs() {
        for (n1, n2) in [(false, false), (true, false), (false, true), (true, true)] {
            let sg = bowtie_ring([6, 5, 6, 5], n1, n2);
            let report = crate::discharge::discharge(&sg).unwrap();
            assert_eq!(report.snowflake_final, vec![Rat::new(-4, 27)], "signs {n1}/{n2}");
        }
    }

    #[test]
    fn positive_triangle_ring_charge_is_zero() {
        let sg = triangle_ring([6, 6, 6], false);
        let report = crate::discharge::discharge(&sg).unwrap();
        assert_eq!(report.snowflake_final, vec![Rat::ZERO]);
    }

    #[test]
    fn twelve_cycle_discharge_is_clean() {
        let report = crate::discharge::discharge(&cycle_host(12)).unwrap();
        assert!(report.ok, "claims: {:?}", report.claims);
    }
}
