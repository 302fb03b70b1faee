//! Finite group subgroup lattices and their posets of isomorphism classes.
//!
//! The crate materializes small finite groups as multiplication tables,
//! enumerates their full subgroup lattices, collapses subgroups into
//! isomorphism classes to get the poset Iso(G), and decides order-theoretic
//! properties (lattice, chain, modular, distributive, complemented) with
//! explicit witnesses. Analytic counterparts (divisor counts, bounded
//! partition posets, dihedral counting formulas) serve as independent checks.

pub mod analytic;
pub mod bitset;
pub mod cache;
pub mod catalog;
pub mod dot;
pub mod error;
pub mod expr;
pub mod group;
pub mod grpiso;
pub mod iso;
pub mod names;
pub mod perm;
pub mod poset;
pub mod serialize;
pub mod subgrp;
pub mod suites;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Resource limits for group construction and subgroup enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order that may be materialized as a table.
    pub table_cap: usize,
    /// Orders up to this get a full associativity check; larger tables are
    /// spot-checked on deterministic pseudo-random triples.
    pub check_cap: usize,
    /// Abort subgroup enumeration past this many subgroups.
    pub subgroup_cap: usize,
}

use serde::{Deserialize, Serialize};

impl Default for Caps {
    fn default() -> Self {
        Caps {
            table_cap: 5000,
            check_cap: 512,
            subgroup_cap: 200_000,
        }
    }
}
