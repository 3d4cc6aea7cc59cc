//! The configuration catalog: a small text format for the fixed entries,
//! plus registry lines that name the parametric chain entries and the chain
//! extensions built in code.
//!
//! Grammar (one directive per line, `#` starts a comment):
//!
//! ```text
//! config NAME          start a fixed entry
//!   note TEXT          free-form provenance note
//!   v NAME THETA [Z]   core vertex; THETA is an integer or `*`
//!   att NAME ANCHOR    attachment vertex (unique outside neighbor)
//!   e A B              edge
//!   tri A B C SIGN     triangle: edges, sign constraint, facial face
//!   cyc A B .. SIGN    sign-constrained cycle (no facial requirement)
//!   facial A B .. [A]  consecutive on one host face (closed if A repeats)
//!   path A B ..        designated straightening path
//!   remove A B ..      vertices removed by the surgery
//!   identify A B       identification (implies equal colors)
//!   insert A B         straight edge inserted by the surgery
//!   equal A B          extra frontier color equality
//!   retain V M         port-retention kernel: >= M colors of V extend
//!   hidden             exclude the entry from default scans
//! end                  finish the entry
//!
//! builtin NAME KIND MIN[..MAX]     parametric entry built in code
//! extend NAME = BASE STEP[, STEP] [matchonly]
//!                                  chain extension; STEP is
//!                                  `I at V`, `I[k] at V`, or `J[..max] at V`;
//!                                  `matchonly` strips the composed reduction
//!                                  script (occurrence scans only)
//! ```
//!
//! SIGN is `P`, `N` or `any`.

use super::builders;
use super::{
    ConfigError, ConfigPattern, CycleConstraint, PatternVertex, ReductionScript, Sign, Theta,
};
use std::collections::{BTreeMap, BTreeSet};

/// Which code builder a `builtin` line refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    /// The chain `I_k` (port-retention kernel).
    ChainI,
    /// The chain `J_k` (no script of its own).
    ChainJ,
    /// `a-1`: `I_k` with a degree-3 port.
    A1,
    /// `c-1`: the pendant fan.
    C1,
}

/// Registry data of a parametric entry.
#[derive(Debug, Clone)]
pub struct BuiltinSpec {
    /// The builder.
    pub kind: BuiltinKind,
    /// Smallest admissible chain length.
    pub min_k: usize,
    /// Largest admissible chain length, if bounded.
    pub max_k: Option<usize>,
}

/// One step of an `extend` line.
#[derive(Debug, Clone)]
pub struct ExtensionStep {
    /// `true` for an `I`-extension, `false` for a `J`-extension.
    pub chain_i: bool,
    /// Vertex name in the base pattern.
    pub at: String,
    /// Pinned chain length (`I[1]`), if any.
    pub fixed_k: Option<usize>,
    /// Upper bound on a free chain length (`J[..4]`), if any.
    pub max_k: Option<usize>,
}

/// Registry data of an extension entry.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    /// Name of the base entry (fixed, builtin, or another extension).
    pub base: String,
    /// Extension steps, applied in order.
    pub steps: Vec<ExtensionStep>,
    /// The entry is only used for occurrence scans; the composed reduction
    /// script is not sound, so it is stripped at instantiation.
    pub match_only: bool,
}

/// The parsed catalog.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    fixed: BTreeMap<String, ConfigPattern>,
    builtins: BTreeMap<String, BuiltinSpec>,
    extensions: BTreeMap<String, ExtensionSpec>,
    hidden: BTreeSet<String>,
    order: Vec<String>,
}

/// The catalog shipped with the crate.
pub const EMBEDDED: &str = include_str!("../../catalog/configs.cat");

impl Catalog {
    /// Parses the embedded catalog.
    pub fn embedded() -> Catalog {
        Catalog::parse(EMBEDDED).expect("embedded catalog must parse")
    }

    /// Parses catalog text.
    pub fn parse(text: &str) -> Result<Catalog, ConfigError> {
        let mut cat = Catalog::default();
        let mut cur: Option<EntryBuilder> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: String| ConfigError::Parse(lineno, msg);
            match (toks[0], &mut cur) {
                ("config", slot @ None) => {
                    if toks.len() != 2 {
                        return Err(err("config needs a name".into()));
                    }
                    *slot = Some(EntryBuilder::new(toks[1]));
                }
                ("end", slot @ Some(_)) => {
                    let eb = slot.take().unwrap();
                    let name = eb.name.clone();
                    let (pattern, hidden) = eb.finish(lineno)?;
                    pattern.validate()?;
                    if hidden {
                        cat.hidden.insert(name.clone());
                    }
                    cat.register(&name, lineno)?;
                    cat.fixed.insert(name, pattern);
                }
                (_, Some(eb)) => eb.directive(&toks, lineno)?,
                ("builtin", None) => {
                    if toks.len() != 4 {
                        return Err(err("builtin NAME KIND RANGE".into()));
                    }
                    let kind = match toks[2] {
                        "I" => BuiltinKind::ChainI,
                        "J" => BuiltinKind::ChainJ,
                        "A1" => BuiltinKind::A1,
                        "C1" => BuiltinKind::C1,
                        other => return Err(err(format!("unknown builtin kind {other}"))),
                    };
                    let (min_k, max_k) = parse_range(toks[3])
                        .ok_or_else(|| err(format!("bad range {}", toks[3])))?;
                    cat.register(toks[1], lineno)?;
                    cat.builtins
                        .insert(toks[1].to_string(), BuiltinSpec { kind, min_k, max_k });
                }
                ("extend", None) => {
                    // extend NAME = BASE STEP[, STEP ...]
                    if toks.len() < 6 || toks[2] != "=" {
                        return Err(err("extend NAME = BASE STEPS".into()));
                    }
                    let mut tail = &toks[4..];
                    let match_only = tail.last() == Some(&"matchonly");
                    if match_only {
                        tail = &tail[..tail.len() - 1];
                    }
                    let rest = tail.join(" ");
                    let mut steps = Vec::new();
                    for part in rest.split(',') {
                        let p: Vec<&str> = part.split_whitespace().collect();
                        if p.len() != 3 || p[1] != "at" {
                            return Err(err(format!("bad extension step `{part}`")));
                        }
                        let (chain, fixed_k, max_k) = parse_chain_spec(p[0])
                            .ok_or_else(|| err(format!("bad chain spec {}", p[0])))?;
                        steps.push(ExtensionStep {
                            chain_i: chain,
                            at: p[2].to_string(),
                            fixed_k,
                            max_k,
                        });
                    }
                    cat.register(toks[1], lineno)?;
                    cat.extensions.insert(
                        toks[1].to_string(),
                        ExtensionSpec {
                            base: toks[3].to_string(),
                            steps,
                            match_only,
                        },
                    );
                }
                (other, None) => {
                    return Err(err(format!("unexpected directive {other}")));
                }
            }
        }
        if cur.is_some() {
            return Err(ConfigError::Parse(0, "unterminated config block".into()));
        }
        // Extensions must reference known bases (cycles caught at instantiation).
        for (name, ext) in &cat.extensions {
            if !cat.fixed.contains_key(&ext.base)
                && !cat.builtins.contains_key(&ext.base)
                && !cat.extensions.contains_key(&ext.base)
            {
                return Err(ConfigError::Unknown(format!(
                    "extension {name} references unknown base {}",
                    ext.base
                )));
            }
        }
        Ok(cat)
    }

    fn register(&mut self, name: &str, lineno: usize) -> Result<(), ConfigError> {
        if self.order.iter().any(|n| n == name) {
            return Err(ConfigError::Parse(lineno, format!("duplicate entry {name}")));
        }
        self.order.push(name.to_string());
        Ok(())
    }

    /// Entry names in declaration order (hidden ones included).
    pub fn names(&self) -> &[String] {
        &self.order
    }

    /// Whether the entry is excluded from default scans.
    pub fn is_hidden(&self, name: &str) -> bool {
        self.hidden.contains(name)
    }

    /// Number of free chain-length parameters `instantiate` expects.
    pub fn free_params(&self, name: &str) -> Result<usize, ConfigError> {
        if self.fixed.contains_key(name) {
            Ok(0)
        } else if self.builtins.contains_key(name) {
            Ok(1)
        } else if let Some(ext) = self.extensions.get(name) {
            Ok(self.free_params(&ext.base)?
                + ext.steps.iter().filter(|s| s.fixed_k.is_none()).count())
        } else {
            Err(ConfigError::Unknown(format!("no catalog entry {name}")))
        }
    }

    /// Builds the named entry; `params` supplies one chain length per free
    /// slot, in base-first order.
    pub fn instantiate(&self, name: &str, params: &[usize]) -> Result<ConfigPattern, ConfigError> {
        let want = self.free_params(name)?;
        if params.len() != want {
            return Err(ConfigError::Unknown(format!(
                "entry {name} takes {want} chain parameter(s), got {}",
                params.len()
            )));
        }
        self.instantiate_inner(name, params)
    }

    fn instantiate_inner(
        &self,
        name: &str,
        params: &[usize],
    ) -> Result<ConfigPattern, ConfigError> {
        if let Some(p) = self.fixed.get(name) {
            return Ok(p.clone());
        }
        if let Some(spec) = self.builtins.get(name) {
            let k = params[0];
            if k < spec.min_k || spec.max_k.is_some_and(|m| k > m) {
                return Err(ConfigError::Unknown(format!(
                    "entry {name}: chain length {k} out of range"
                )));
            }
            let mut p = match spec.kind {
                BuiltinKind::ChainI => builders::build_i(k),
                BuiltinKind::ChainJ => builders::build_j(k),
                BuiltinKind::A1 => builders::build_a1(k),
                BuiltinKind::C1 => builders::build_c1(k)?,
            };
            p.name = format!("{name}(k={k})");
            return Ok(p);
        }
        let spec = self
            .extensions
            .get(name)
            .ok_or_else(|| ConfigError::Unknown(format!("no catalog entry {name}")))?;
        let base_free = self.free_params(&spec.base)?;
        let mut base = self.instantiate_inner(&spec.base, &params[..base_free])?;
        let mut used = base_free;
        for step in &spec.steps {
            let k = match step.fixed_k {
                Some(k) => k,
                None => {
                    let k = params[used];
                    used += 1;
                    k
                }
            };
            if step.max_k.is_some_and(|m| k > m) {
                return Err(ConfigError::Unknown(format!(
                    "entry {name}: chain length {k} exceeds bound at {}",
                    step.at
                )));
            }
            base = if step.chain_i {
                builders::extend_at_i(&base, &step.at, k)?
            } else {
                builders::extend_at_j(&base, &step.at, k)?
            };
        }
        base.name = if params.is_empty() {
            name.to_string()
        } else {
            format!(
                "{name}(k={})",
                params
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        if spec.match_only {
            base.script.remove.clear();
            base.script.identify.clear();
            base.script.equal.clear();
            base.script.insert.clear();
            base.script.retain = None;
            base.notes.push("match-only entry; no reduction script".into());
            builders::recompute_frontier(&mut base);
        }
        base.validate()?;
        Ok(base)
    }

    /// Whether an entry is match-only (its reduction script is stripped).
    pub fn is_match_only(&self, name: &str) -> bool {
        self.extensions.get(name).is_some_and(|e| e.match_only)
    }

    /// Default instances used by whole-host scans: every visible fixed
    /// entry, and the parametric entries over small chain lengths.
    pub fn default_instances(&self) -> Vec<ConfigPattern> {
        let mut out = Vec::new();
        for name in &self.order {
            if self.hidden.contains(name) {
                continue;
            }
            if self.fixed.contains_key(name) {
                out.push(self.fixed[name].clone());
                continue;
            }
            let free = self.free_params(name).expect("registered entry");
            let choices: Vec<usize> = if self.builtins.contains_key(name) {
                let spec = &self.builtins[name];
                let hi = spec.max_k.unwrap_or(spec.min_k + 2).min(spec.min_k + 2);
                (spec.min_k..=hi).collect()
            } else {
                vec![1]
            };
            if free == 0 {
                if let Ok(p) = self.instantiate(name, &[]) {
                    out.push(p);
                }
            } else {
                for &k in &choices {
                    if let Ok(p) = self.instantiate(name, &vec![k; free]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

fn parse_range(s: &str) -> Option<(usize, Option<usize>)> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.parse().ok()?;
        let hi = if hi.is_empty() {
            None
        } else {
            Some(hi.parse().ok()?)
        };
        Some((lo, hi))
    } else {
        let k = s.parse().ok()?;
        Some((k, Some(k)))
    }
}

/// Parses `I`, `I[2]`, `J[..4]` -> (is_I, fixed_k, max_k).
fn parse_chain_spec(s: &str) -> Option<(bool, Option<usize>, Option<usize>)> {
    let (head, rest) = if let Some(r) = s.strip_prefix('I') {
        (true, r)
    } else if let Some(r) = s.strip_prefix('J') {
        (false, r)
    } else {
        return None;
    };
    if rest.is_empty() {
        return Some((head, None, None));
    }
    let inner = rest.strip_prefix('[')?.strip_suffix(']')?;
    if let Some(b) = inner.strip_prefix("..") {
        Some((head, None, Some(b.parse().ok()?)))
    } else {
        Some((head, Some(inner.parse().ok()?), None))
    }
}

/// Accumulates directives of one `config` block.
struct EntryBuilder {
    name: String,
    vertices: Vec<PatternVertex>,
    index: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
    cycles: Vec<CycleConstraint>,
    facial: Vec<Vec<usize>>,
    script: ReductionScript,
    notes: Vec<String>,
    hidden: bool,
}

impl EntryBuilder {
    fn new(name: &str) -> Self {
        EntryBuilder {
            name: name.to_string(),
            vertices: Vec::new(),
            index: BTreeMap::new(),
            edges: Vec::new(),
            cycles: Vec::new(),
            facial: Vec::new(),
            script: ReductionScript::default(),
            notes: Vec::new(),
            hidden: false,
        }
    }

    fn lookup(&self, name: &str, lineno: usize) -> Result<usize, ConfigError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ConfigError::Parse(lineno, format!("unknown vertex {name}")))
    }

    fn lookup_all(&self, names: &[&str], lineno: usize) -> Result<Vec<usize>, ConfigError> {
        names.iter().map(|n| self.lookup(n, lineno)).collect()
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        if !self
            .edges
            .iter()
            .any(|&(p, q)| (p, q) == (a, b) || (p, q) == (b, a))
        {
            self.edges.push((a, b));
        }
    }

    fn directive(&mut self, toks: &[&str], lineno: usize) -> Result<(), ConfigError> {
        let err = |msg: String| ConfigError::Parse(lineno, msg);
        match toks[0] {
            "note" => self.notes.push(toks[1..].join(" ")),
            "v" => {
                if toks.len() < 3 || toks.len() > 4 {
                    return Err(err("v NAME THETA [Z]".into()));
                }
                let theta = if toks[2] == "*" {
                    Theta::Star
                } else {
                    Theta::Exact(
                        toks[2]
                            .parse()
                            .map_err(|_| err(format!("bad theta {}", toks[2])))?,
                    )
                };
                let internal = match toks.get(3) {
                    None => false,
                    Some(&"Z") => true,
                    Some(other) => return Err(err(format!("expected Z, got {other}"))),
                };
                if self.index.contains_key(toks[1]) {
                    return Err(err(format!("duplicate vertex {}", toks[1])));
                }
                self.index.insert(toks[1].to_string(), self.vertices.len());
                self.vertices.push(PatternVertex {
                    name: toks[1].to_string(),
                    theta,
                    internal,
                    attachment_of: None,
                });
            }
            "att" => {
                if toks.len() != 3 {
                    return Err(err("att NAME ANCHOR".into()));
                }
                let anchor = self.lookup(toks[2], lineno)?;
                if self.index.contains_key(toks[1]) {
                    return Err(err(format!("duplicate vertex {}", toks[1])));
                }
                let v = self.vertices.len();
                self.index.insert(toks[1].to_string(), v);
                self.vertices.push(PatternVertex {
                    name: toks[1].to_string(),
                    theta: Theta::Star,
                    internal: false,
                    attachment_of: Some(anchor),
                });
                self.edges.push((anchor, v));
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(err("e A B".into()));
                }
                let (a, b) = (self.lookup(toks[1], lineno)?, self.lookup(toks[2], lineno)?);
                self.add_edge(a, b);
            }
            "tri" => {
                if toks.len() != 5 {
                    return Err(err("tri A B C SIGN".into()));
                }
                let vs = self.lookup_all(&toks[1..4], lineno)?;
                let sign = parse_sign(toks[4]).ok_or_else(|| err("bad sign".into()))?;
                for (x, y) in [(vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0])] {
                    self.add_edge(x, y);
                }
                self.cycles.push(CycleConstraint {
                    cycle: vs.clone(),
                    sign,
                });
                self.facial.push(vec![vs[0], vs[1], vs[2], vs[0]]);
            }
            "cyc" => {
                if toks.len() < 5 {
                    return Err(err("cyc A B C .. SIGN".into()));
                }
                let sign =
                    parse_sign(toks[toks.len() - 1]).ok_or_else(|| err("bad sign".into()))?;
                let vs = self.lookup_all(&toks[1..toks.len() - 1], lineno)?;
                self.cycles.push(CycleConstraint { cycle: vs, sign });
            }
            "facial" => {
                let vs = self.lookup_all(&toks[1..], lineno)?;
                if vs.len() < 2 {
                    return Err(err("facial needs at least two vertices".into()));
                }
                self.facial.push(vs);
            }
            "path" => {
                let vs = self.lookup_all(&toks[1..], lineno)?;
                if vs.len() < 2 {
                    return Err(err("path needs at least two vertices".into()));
                }
                self.script.paths.push(vs);
            }
            "remove" => {
                let vs = self.lookup_all(&toks[1..], lineno)?;
                self.script.remove.extend(vs);
            }
            "identify" | "equal" | "insert" => {
                if toks.len() != 3 {
                    return Err(err(format!("{} A B", toks[0])));
                }
                let pair = (self.lookup(toks[1], lineno)?, self.lookup(toks[2], lineno)?);
                match toks[0] {
                    "identify" => self.script.identify.push(pair),
                    "equal" => self.script.equal.push(pair),
                    _ => self.script.insert.push(pair),
                }
            }
            "retain" => {
                if toks.len() != 3 {
                    return Err(err("retain V M".into()));
                }
                let v = self.lookup(toks[1], lineno)?;
                let m = toks[2].parse().map_err(|_| err("bad count".into()))?;
                self.script.retain = Some((v, m));
            }
            "hidden" => self.hidden = true,
            other => return Err(err(format!("unknown directive {other}"))),
        }
        Ok(())
    }

    fn finish(mut self, _lineno: usize) -> Result<(ConfigPattern, bool), ConfigError> {
        let mut p = ConfigPattern {
            name: self.name,
            vertices: std::mem::take(&mut self.vertices),
            edges: self.edges,
            cycles: self.cycles,
            facial: self.facial,
            script: self.script,
            notes: self.notes,
        };
        if p.script.frontier.is_empty() {
            builders::recompute_frontier(&mut p);
        }
        Ok((p, self.hidden))
    }
}

fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "P" => Some(Sign::Positive),
        "N" => Some(Sign::Negative),
        "any" => Some(Sign::Any),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_catalog_parses_and_validates() {
        let cat = Catalog::embedded();
        for name in ["a-1", "b-1", "c-1", "d-1", "e-1", "f-1", "g-1", "h-1"] {
            assert!(cat.names().iter().any(|n| n == name), "missing {name}");
        }
        // Every entry instantiates at a small chain length.
        for name in cat.names().to_vec() {
            let free = cat.free_params(&name).unwrap();
            let p = cat.instantiate(&name, &vec![1; free]).unwrap();
            p.validate().unwrap();
        }
    }

    #[test]
    fn extension_entries_grow_the_removal_set() {
        let cat = Catalog::embedded();
        let b1 = cat.instantiate("b-1", &[]).unwrap();
        let b2 = cat.instantiate("b-2", &[2]).unwrap();
        assert_eq!(b2.script.remove.len(), b1.script.remove.len() + 4);
        let b3 = cat.instantiate("b-3", &[1, 1]).unwrap();
        assert!(b3.script.remove.len() > b2.script.remove.len() - 2);
        assert!(cat.instantiate("c-1", &[6]).is_err());
    }

    #[test]
    fn j_extension_keeps_the_side_triangles() {
        let cat = Catalog::embedded();
        let g4 = cat.instantiate("g-4", &[2]).unwrap();
        // The old arm vertices stay (the fan keeps both end triangles).
        for name in ["w1", "w2"] {
            let v = g4.vertex(name).unwrap();
            assert!(!g4.script.remove.contains(&v), "{name} must be kept");
        }
        // Pendant triangles of both fan links are removed: 6 vertices, plus
        // the four central-arm vertices of the base.
        assert_eq!(g4.script.remove.len(), 4 + 6);
        assert_eq!(g4.script.insert.len(), 2);
    }
}
