//! Command-line surface: structural checks, solving, classification,
//! configuration matching, discharging and kernel verification over `.spg`
//! files, plus a seeded instance generator.
//!
//! Exit codes: 0 when all checks pass, 1 when violations are found, 2 on
//! input or usage errors.

use clap::{Parser, Subcommand};
use dpcolor::configs::catalog::Catalog;
use dpcolor::configs::kernel::verify_kernel;
use dpcolor::configs::matcher::find_occurrences;
use dpcolor::perm::ALL_PERMS;
use dpcolor::signing::SignedPlaneGraph;
use dpcolor::{classify, discharge, gen, hosts, solver, spg};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dpcolor", version, about = "Signed plane graph verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural audit: boundary, forbidden cycles, facial cycles, strings.
    Check { file: PathBuf },
    /// Find a proper 3-coloring, count them, or test boundary extension.
    Solve {
        file: PathBuf,
        /// Print the number of proper colorings instead of one coloring.
        #[arg(long)]
        count: bool,
        /// Check that sampled proper boundary colorings extend.
        #[arg(long)]
        extend_boundary: bool,
        /// Boundary colorings to sample for --extend-boundary.
        #[arg(long, default_value_t = 200)]
        sample: usize,
    },
    /// Vertex roles, snowflakes and nice 9-faces.
    Classify {
        file: PathBuf,
        /// Emit the full classification as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Scan for configuration occurrences.
    Match {
        file: PathBuf,
        /// Catalog file overriding the embedded catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Upper bound for parametrized entries.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Full charge ledger, claim audit and witness search.
    Discharge {
        file: PathBuf,
        /// Write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Catalog file for the witness search.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Verify reducibility kernels for a catalog entry, `all`, or `lemma7`.
    VerifyKernel {
        entry: String,
        /// Upper bound for parametrized entries.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        /// Catalog file overriding the embedded catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Generate a seeded instance.
    Gen {
        /// Maximum number of vertices.
        #[arg(long)]
        n: usize,
        /// Random seed.
        #[arg(long)]
        seed: u64,
        /// Cap the outer boundary length (at most 12).
        #[arg(long)]
        boundary: Option<usize>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(file: &PathBuf) -> Result<SignedPlaneGraph, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    spg::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, String> {
    match path {
        None => Ok(Catalog::embedded()),
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Catalog::parse(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

/// Instantiates every visible entry, parametrized ones for all k up to
/// `max_k` (at least the minimum).
fn instances(catalog: &Catalog, max_k: usize) -> Result<Vec<dpcolor::configs::ConfigPattern>, String> {
    let mut out = Vec::new();
    for name in catalog.names().to_vec() {
        if catalog.is_hidden(&name) {
            continue;
        }
        let params = catalog.free_params(&name).map_err(|e| e.to_string())?;
        if params == 0 {
            out.push(catalog.instantiate(&name, &[]).map_err(|e| e.to_string())?);
        } else {
            for k in 1..=max_k.max(1) {
                match catalog.instantiate(&name, &vec![k; params]) {
                    Ok(p) => out.push(p),
                    Err(_) => continue, // outside the entry's range
                }
            }
        }
    }
    Ok(out)
}

/// Exhaustive check of the recoloring gadget: for every sign on `uv` and
/// every precoloring of the pendants, the 3-face apex keeps 3 free colors
/// when `uv` is straight and the pendant colors differ, and at least 2 free
/// colors when `uv` is not straight.
fn lemma7_check() -> Result<(), String> {
    for sigma in ALL_PERMS {
        for cu in 0..3u8 {
            for cv in 0..3u8 {
                let sg = hosts::recolor_gadget(sigma, cu, cv);
                let fixed = sg.precolor.clone();
                let free = solver::free_colors(&sg, &fixed, 2).len();
                if sigma.is_identity() && cu != cv && free != 3 {
                    return Err(format!("straight uv, {cu} vs {cv}: {free} colors"));
                }
                if !sigma.is_identity() && free < 2 {
                    return Err(format!("uv={}, {cu}/{cv}: {free} colors", sigma.word()));
                }
            }
        }
    }
    Ok(())
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Check { file } => {
            let sg = load(&file)?;
            let audit = sg.graph.boundary_audit();
            let forbidden = sg.graph.forbidden_cycles();
            let facial = sg.graph.facial_cycle_violations();
            let strings = sg.graph.string_length_violations();
            println!("boundary: len={} cycle={} chords={:?} cuts={:?} low-degree={:?}",
                audit.boundary_len, audit.boundary_is_cycle, audit.chords,
                audit.cut_vertices, audit.internal_low_degree);
            for c in &forbidden {
                println!("forbidden {}-cycle: {c:?}", c.len());
            }
            for c in &facial {
                println!("non-facial short cycle: {c:?}");
            }
            for (s, f) in &strings {
                println!("string {:?} too long for face {f}", s.vertices);
            }
            let ok = audit.is_clean() && forbidden.is_empty() && facial.is_empty()
                && strings.is_empty();
            println!("{}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Solve { file, count, extend_boundary, sample } => {
            let sg = load(&file)?;
            if extend_boundary {
                let report = solver::extend_boundary(&sg, Some((sample, 1)));
                println!("tried {} boundary colorings, {} failures",
                    report.tried, report.failures.len());
                return Ok(if report.all_extended() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                });
            }
            if count {
                println!("{}", solver::count(&sg));
                return Ok(ExitCode::SUCCESS);
            }
            match solver::solve(&sg) {
                Some(phi) => {
                    let words: Vec<String> =
                        phi.iter().map(|c| (c + 1).to_string()).collect();
                    println!("SAT {}", words.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("UNSAT");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Classify { file, json } => {
            let sg = load(&file)?;
            let cls = classify::classify_full(&sg);
            if json {
                println!("{}", serde_json::to_string_pretty(&cls).map_err(|e| e.to_string())?);
            } else {
                println!("snowflakes: {}", cls.snowflakes.len());
                for (i, s) in cls.snowflakes.iter().enumerate() {
                    println!(
                        "  {i}: |T|={} |3Δ|={} (+{} -{} °{} *{}) |4⋈|={} t1={} t2={}",
                        s.faces.len(), s.tri_delta.len(), s.tri_plus.len(),
                        s.tri_minus.len(), s.tri_lone.len(), s.tri_star.len(),
                        s.bowtie.len(), s.t1, s.t2
                    );
                }
                println!("rejected components: {}", cls.rejected.len());
                println!("nice 9-faces: {}", cls.nice_faces.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Match { file, catalog, max_k } => {
            let sg = load(&file)?;
            let catalog = load_catalog(&catalog)?;
            let mut any = false;
            for pat in instances(&catalog, max_k)? {
                let occs = find_occurrences(&pat, &sg);
                if !occs.is_empty() {
                    any = true;
                    for occ in &occs {
                        let core: Vec<usize> = occ.core_image(&pat).into_iter().collect();
                        println!("{}: {core:?}", pat.name);
                    }
                }
            }
            if !any {
                println!("no occurrences");
            }
            Ok(if any { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Discharge { file, report, catalog } => {
            let sg = load(&file)?;
            let catalog = load_catalog(&catalog)?;
            let dr = discharge::discharge(&sg).map_err(|e| e.to_string())?;
            let wr = discharge::witness(&sg, &catalog).map_err(|e| e.to_string())?;
            for c in &dr.claims {
                println!("{}: {}", c.name, if c.ok { "PASS" } else { "FAIL" });
                for v in &c.violations {
                    println!("  {v}");
                }
            }
            for note in &dr.unmodeled {
                println!("unmodeled: {note}");
            }
            for neg in &wr.negatives {
                println!("negative {:?} = {}", neg.account, neg.charge);
                for e in &neg.explanations {
                    println!("  explained by {e}");
                }
            }
            if let Some(path) = report {
                let combined = serde_json::json!({ "discharge": dr, "witness": wr });
                std::fs::write(&path, serde_json::to_string_pretty(&combined)
                    .map_err(|e| e.to_string())?)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let ok = dr.ok && wr.unexplained == 0;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::VerifyKernel { entry, max_k, catalog } => {
            if entry == "lemma7" {
                return match lemma7_check() {
                    Ok(()) => {
                        println!("lemma7: PASS");
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(e) => {
                        println!("lemma7: FAIL ({e})");
                        Ok(ExitCode::from(1))
                    }
                };
            }
            let catalog = load_catalog(&catalog)?;
            let pats = if entry == "all" {
                for name in catalog.names() {
                    if catalog.is_match_only(name) {
                        println!("{name}: SKIP (match-only entry, no reduction script)");
                    }
                }
                let mut pats = instances(&catalog, max_k)?;
                pats.retain(|p| {
                    let base = p.name.split('(').next().unwrap_or(&p.name);
                    !catalog.is_match_only(base)
                });
                pats
            } else if catalog.is_match_only(&entry) {
                println!("{entry}: SKIP (match-only entry, no reduction script)");
                return Ok(ExitCode::SUCCESS);
            } else {
                let params = catalog.free_params(&entry).map_err(|e| e.to_string())?;
                if params == 0 {
                    vec![catalog.instantiate(&entry, &[]).map_err(|e| e.to_string())?]
                } else {
                    (1..=max_k.max(1))
                        .filter_map(|k| catalog.instantiate(&entry, &vec![k; params]).ok())
                        .collect()
                }
            };
            let mut all_ok = true;
            for pat in &pats {
                let report = verify_kernel(pat).map_err(|e| e.to_string())?;
                println!(
                    "{}: {} (classes={} tuples={} {}ms)",
                    report.name,
                    if report.ok { "PASS" } else { "FAIL" },
                    report.signature_classes,
                    report.tuples_checked,
                    report.elapsed_ms
                );
                all_ok &= report.ok;
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen { n, seed, boundary, out } => {
            let sg = gen::generate(n, seed, boundary).map_err(|e| e.to_string())?;
            let text = spg::emit(&sg);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
