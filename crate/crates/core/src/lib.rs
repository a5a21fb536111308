//! Ideal structure of the groupoid C*-algebra of a one-sided edge shift.
//!
//! Start from a [`GraphPresentation`], [`validate`] it into an
//! [`EdgeShift`], then ask the [`lattice`], [`catalog`] and [`af`] modules.
//! The [`oracle`] module recomputes the same answers by brute force on
//! finite word tables.

pub mod af;
pub mod catalog;
pub mod census;
pub mod counting;
pub mod crosscheck;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod reach;
pub mod report;
pub mod vertex_set;
pub mod word;

pub use error::{Result, ShiftError};
pub use graph::{validate, EdgeShift, EdgeSpec, GraphPresentation};
pub use vertex_set::VertexSet;
pub use word::{CylinderWord, EventuallyPeriodicPoint};
