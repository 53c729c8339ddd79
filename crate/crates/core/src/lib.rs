//! Core engine for experiments on k-planar topological graph drawings.
//!
//! The crate is pure computation: combinatorial drawings with explicit
//! crossing data, their planarizations and face structure, the lower-bound
//! construction families, a charge-redistribution (discharging) replay
//! engine, an exact branch-and-bound integer solver with the H-block charge
//! certificate built on top, and exact-rational verification of the density
//! and Crossing Lemma constants.
//!
//! Everything is exact: coordinates and charges are arbitrary-precision
//! rationals, orderings are deterministic (`BTreeMap` throughout), and no
//! floating point enters any decision.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod chords;
pub mod constructions;
pub mod convex;
pub mod corpus;
pub mod discharge;
pub mod drawing;
pub mod geometry;
pub mod hblock;
pub mod planar;
pub mod rat;
pub mod skeleton;
pub mod solver;

pub use drawing::{Drawing, DrawingError, EdgeId, End, VertexId};
pub use planar::{Face, Planarization};
pub use rat::Q;
