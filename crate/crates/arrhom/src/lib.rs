//! Exact-arithmetic invariants of central hyperplane arrangements.
//!
//! A central hyperplane arrangement is presented by its normal vectors
//! ν₁,…,νₙ in ℚ^k (a *vector arrangement*; zero vectors give degenerate
//! hyperplanes).  This crate computes, over ℚ:
//!
//! * the classical state-sum polynomials (characteristic, Poincaré, Tutte,
//!   and a framed Jones polynomial for signed arrangements),
//! * the hypercube chain complexes categorifying them, their bigraded or
//!   trigraded homology, dg-algebra products and deletion–restriction
//!   short exact sequences,
//! * the signed cube `T(V)` with its four edge-map types and solved edge
//!   scalars — framed odd Khovanov homology of signed arrangements — and
//!   the arrangement Reidemeister moves it is invariant under,
//! * ingestion of planar link diagrams (PD codes) through Tait graphs,
//!   so that framed odd Khovanov homology of links comes out of the same
//!   machinery.
//!
//! All arithmetic is exact (`BigRational`); every result is deterministic.
//! The crate is `no_std` + `alloc`; IO, JSON schemas and the command line
//! front end live in the companion crate `arrhom-cli`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod khovanov;
pub mod linalg;
pub mod links;
pub mod poly;

pub use arrangement::{Sign, SignedVectorArrangement, SubsetSpaces, VectorArrangement};
pub use error::ArrError;

pub use linalg::{Rational, RationalMatrix, Subspace};


