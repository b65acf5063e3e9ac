//! Constructive 3-rainbow edge-colorings from connected dominating sets, with
//! independent exhaustive verification.
//!
//! The two constructions are [`coloring::theorem4_coloring`] (a connected
//! 3-dominating set plus three extra colors) and [`coloring::theorem3_coloring`]
//! (a connected three-way dominating set plus six extra colors). Every coloring
//! can be checked with [`verify::is_3_rainbow`], which does not share code with
//! the constructions.

pub mod bfs;
pub mod bounds;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod steiner;
pub mod verify;

pub use coloring::{EdgeColoring, SafetyCertificate};
pub use domination::{DomKind, DominatingSet, Provenance};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
