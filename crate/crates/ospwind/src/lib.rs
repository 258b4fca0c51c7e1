//! Exact enumeration of decorated ordered set partitions graded by winding
//! number, together with independent Ehrhart h*-vector computations for
//! hypersimplices, dilated simplices, and diagonal cross-sections of cubes.
//!
//! The crate has three layers:
//!
//! - [`partitions`]: the combinatorial side — decorated ordered set
//!   partitions, per-family admissibility, exhaustive canonical
//!   enumeration, and the winding machinery (position labels, winding
//!   vectors, levels, the inverse unwinding map).
//! - [`ehrhart`]: the geometric side — exact big-integer lattice-point
//!   counts of dilated slices and h*-vector extraction, plus Eulerian
//!   numbers and a Worpitzky identity check.
//! - [`verify`]: the harness comparing both sides instance by instance,
//!   with deterministic parallel parameter sweeps.
//!
//! The `examples/` directory contains one runnable walkthrough per major
//! capability; the `ospwind` binary exposes the same operations as
//! `enumerate`, `hstar`, and `verify` subcommands.

pub mod cli;
pub mod ehrhart;
pub mod partitions;
pub mod verify;

pub use ehrhart::HStarVector;
pub use partitions::{Block, DecoratedOsp, FamilySpec, WindingData};
pub use verify::VerificationReport;
