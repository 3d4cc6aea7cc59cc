//! Verification toolkit for DP-3-coloring of plane graphs that have no cycle
//! of length 4, 6 or 8.
//!
//! The library models such graphs as S3-signed plane graphs (rotation-system
//! embeddings with a designated outer face), provides an exact coloring
//! solver, a structural classifier (vertex roles, snowflakes, nice faces), a
//! catalog of reducible configurations with kernel re-extension checks and
//! reduction surgery, and a discharging engine with exact rational arithmetic
//! that audits the global charge argument claim by claim.

pub mod classify;
pub mod configs;
pub mod discharge;
pub mod gen;
pub mod hosts;
pub mod perm;
pub mod planegraph;
pub mod rat;
pub mod signing;
pub mod solver;
pub mod spg;
