//! Binary matroids over GF(2) and the machinery connecting chordality
//! with supersolvability: closures, circuits, chords, Δ-closure, modular
//! flats, M-chains and M-partitions, S-labelings and S-graphs, plus an
//! exhaustive small-instance catalog used as a verification engine.
//!
//! Ground-set elements carry 1-based labels in all textual formats and
//! 0-based indices in the API; see [`elements::ElementSet`].

pub mod catalog;
pub mod chordality;
pub mod elements;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod matroid;
pub mod supersolvable;

pub use elements::ElementSet;
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use matroid::{BinaryMatroid, CircuitFamily, Flat, FlatLattice, GeneralMatroid, Matroid};
pub use supersolvable::{MChain, MPartition};
