//! The `.spg` file format for signed plane graphs.
//!
//! Line-oriented text; `#` starts a comment (full-line or trailing) and blank
//! lines are ignored. Colors are written `1..=3`, permutations as image words
//! over `1..=3` (`123` is the identity). Directives:
//!
//! ```text
//! spg 1                 # header, format version
//! n 4                   # number of vertices (ids 0..n-1)
//! rot 0 1 3 2           # "rot v u1 u2 ...": clockwise neighbors of v
//! outer 0 2             # dart (u, v) on the outer face boundary walk
//! sign 0 1 213          # sigma on arc (0, 1); default everywhere is 123
//! precolor 0 2          # vertex 0 is precolored with color 2
//! ```
//!
//! Every vertex needs a `rot` line (possibly with no neighbors only for the
//! one-vertex graph); `outer` is required. Parsing and emission round-trip.

use crate::perm::Perm;
use crate::planegraph::{GraphError, PlaneGraph};
use crate::signing::{Signature, SignedPlaneGraph};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors raised while reading a `.spg` file.
#[derive(Debug, Error)]
pub enum SpgError {
    /// Malformed line.
    #[error("line {0}: {1}")]
    Parse(usize, String),
    /// The described graph is not a valid plane graph.
    #[error("invalid plane graph: {0}")]
    Graph(#[from] GraphError),
    /// Required directives are missing.
    #[error("{0}")]
    Missing(String),
}

fn parse_usize(line_no: usize, tok: Option<&str>, what: &str) -> Result<usize, SpgError> {
    tok.ok_or_else(|| SpgError::Parse(line_no, format!("missing {what}")))?
        .parse::<usize>()
        .map_err(|_| SpgError::Parse(line_no, format!("bad {what}")))
}

/// Parses a `.spg` document.
pub fn parse(text: &str) -> Result<SignedPlaneGraph, SpgError> {
    let mut n: Option<usize> = None;
    let mut rot: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut outer: Option<(usize, usize)> = None;
    let mut signs: Vec<(usize, usize, Perm)> = Vec::new();
    let mut precolor: BTreeMap<usize, u8> = BTreeMap::new();
    let mut saw_header = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let key = toks.next().expect("nonempty");
        match key {
            "spg" => {
                let version = parse_usize(line_no, toks.next(), "version")?;
                if version != 1 {
                    return Err(SpgError::Parse(line_no, format!("unsupported version {version}")));
                }
                saw_header = true;
            }
            "n" => {
                n = Some(parse_usize(line_no, toks.next(), "vertex count")?);
            }
            "rot" => {
                let v = parse_usize(line_no, toks.next(), "vertex id")?;
                let mut nbrs = Vec::new();
                for t in toks {
                    nbrs.push(
                        t.parse::<usize>()
                            .map_err(|_| SpgError::Parse(line_no, "bad neighbor id".into()))?,
                    );
                }
                if rot.insert(v, nbrs).is_some() {
                    return Err(SpgError::Parse(line_no, format!("duplicate rot for {v}")));
                }
            }
            "outer" => {
                let u = parse_usize(line_no, toks.next(), "dart tail")?;
                let v = parse_usize(line_no, toks.next(), "dart head")?;
                outer = Some((u, v));
            }
            "sign" => {
                let u = parse_usize(line_no, toks.next(), "arc tail")?;
                let v = parse_usize(line_no, toks.next(), "arc head")?;
                let word = toks
                    .next()
                    .ok_or_else(|| SpgError::Parse(line_no, "missing permutation".into()))?;
                let p = Perm::parse(word)
                    .ok_or_else(|| SpgError::Parse(line_no, format!("bad permutation {word}")))?;
                signs.push((u, v, p));
            }
            "precolor" => {
                let v = parse_usize(line_no, toks.next(), "vertex id")?;
                let c = parse_usize(line_no, toks.next(), "color")?;
                if !(1..=3).contains(&c) {
                    return Err(SpgError::Parse(line_no, format!("color {c} out of range")));
                }
                precolor.insert(v, (c - 1) as u8);
            }
            other => {
                return Err(SpgError::Parse(line_no, format!("unknown directive {other}")));
            }
        }
    }

    if !saw_header {
        return Err(SpgError::Missing("missing 'spg 1' header".into()));
    }
    let n = n.ok_or_else(|| SpgError::Missing("missing 'n' directive".into()))?;
    let outer = outer.ok_or_else(|| SpgError::Missing("missing 'outer' directive".into()))?;
    let mut rot_vec: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        match rot.remove(&v) {
            Some(r) => rot_vec.push(r),
            None => return Err(SpgError::Missing(format!("missing rot line for vertex {v}"))),
        }
    }
    if let Some((&v, _)) = rot.iter().next() {
        return Err(SpgError::Missing(format!("rot line for out-of-range vertex {v}")));
    }
    let graph = PlaneGraph::new(rot_vec, outer)?;
    let mut sig = Signature::straight();
    for (u, v, p) in signs {
        if !graph.has_edge(u, v) {
            return Err(SpgError::Missing(format!("sign on non-edge ({u}, {v})")));
        }
        sig.set(u, v, p);
    }
    for &v in precolor.keys() {
        if v >= n {
            return Err(SpgError::Missing(format!("precolor on unknown vertex {v}")));
        }
    }
    Ok(SignedPlaneGraph {
        graph,
        sig,
        precolor,
    })
}

/// Emits a `.spg` document (inverse of [`parse`], canonical layout).
pub fn emit(sg: &SignedPlaneGraph) -> String {
    let mut out = String::from("spg 1\n");
    out.push_str(&format!("n {}\n", sg.graph.n()));
    for v in 0..sg.graph.n() {
        out.push_str("rot ");
        out.push_str(&v.to_string());
        for &u in sg.graph.neighbors(v) {
            out.push(' ');
            out.push_str(&u.to_string());
        }
        out.push('\n');
    }
    let outer_dart = sg.graph.faces()[sg.graph.outer_face()].darts[0];
    out.push_str(&format!("outer {} {}\n", outer_dart.0, outer_dart.1));
    for (&(u, v), &p) in sg.sig.arcs() {
        out.push_str(&format!("sign {} {} {}\n", u, v, p.word()));
    }
    for (&v, &c) in &sg.precolor {
        out.push_str(&format!("precolor {} {}\n", v, c + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# a signed 5-cycle
spg 1
n 5
rot 0 1 4
rot 1 2 0
rot 2 3 1
rot 3 4 2
rot 4 0 3
outer 0 4
sign 0 1 213
precolor 2 3
";

    #[test]
    fn parse_then_emit_round_trips() {
        let sg = parse(SAMPLE).unwrap();
        assert_eq!(sg.graph.n(), 5);
        assert_eq!(sg.sigma(0, 1), Perm::Swap01);
        assert_eq!(sg.sigma(1, 0), Perm::Swap01);
        assert_eq!(sg.precolor.get(&2), Some(&2));
        let text = emit(&sg);
        let sg2 = parse(&text).unwrap();
        assert_eq!(emit(&sg2), text);
        assert_eq!(sg2.sig, sg.sig);
        assert_eq!(sg2.graph.rotations(), sg.graph.rotations());
        assert_eq!(sg2.graph.outer_face(), sg.graph.outer_face());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("n 3\n").is_err());
        assert!(parse("spg 2\nn 1\nrot 0\nouter 0 0\n").is_err());
        assert!(matches!(
            parse("spg 1\nn 2\nrot 0 1\nrot 1 0\nouter 0 1\nsign 0 1 999\n"),
            Err(SpgError::Parse(6, _))
        ));
    }
}
