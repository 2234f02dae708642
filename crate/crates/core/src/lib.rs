//! Verification toolkit for locus configurations, ∨-systems and the
//! generalized WDVV equations of `Σ (α,x)² log (α,x)²`.
//!
//! The crate is organised bottom-up: [`numeric`] (complex linear algebra and
//! tolerances), [`config`] and [`catalog`] (configurations and named
//! families), [`planes`] (two-dimensional subsystems), the checkers
//! [`locus`], [`vee`] and [`wdvv`], and [`scan`] for parameter-space scans.

pub mod catalog;
pub mod config;
pub mod error;
pub mod io;
pub mod locus;
pub mod numeric;
pub mod planes;
pub mod poly;
pub mod report;
pub mod scan;
pub mod vee;
pub mod wdvv;

pub use config::{Configuration, Entry, Kind, Tag};
pub use error::{Error, Result};
pub use io::ComplexJson;
pub use locus::{check_locus, LocusReport};
pub use numeric::{Matrix, Scalar, Tolerance, Vector};
pub use planes::{enumerate_planes, PlaneGroup};
pub use report::{Command, OutputFormat, RunSpec, SerializedReport};
pub use vee::{check_vee, VeeReport};
pub use wdvv::{check_wdvv, WdvvReport};
