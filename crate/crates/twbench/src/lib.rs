//! twbench: a workbench for Terwilliger algebras of quasi-thin association
//! schemes over exact fields.
//!
//! The crate builds association schemes (from tables, group multiplication
//! tables, permutation-group orbitals, and cycle constructions), constructs
//! the Terwilliger algebra at a base point over GF(p) or the rationals, and
//! machine-verifies its structure: the labelled basis and its multiplication
//! table, cellularity and quasi-heredity, the characteristic-2 radical, the
//! basic algebra and its presentation as a dual-extension star algebra, and
//! the resulting global and dominant dimensions.
//!
//! Entry points:
//! - [`catalog::catalog`] for the built-in scheme collection,
//! - [`terwilliger::generate`] for the algebra itself,
//! - [`report::analyze`] for the full verification pipeline,
//! - the `twbench` binary for the command-line interface.

pub mod catalog;
pub mod cellular;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod presentation;
pub mod report;
pub mod scheme;
pub mod subspace;
pub mod terwilliger;
pub mod verify;
