//! Embeddings of 2-regular digraphs as alternating rotation systems.
//!
//! The crate covers directed face tracing and Euler genus, equivalence of
//! embeddings by their facial walks, planarity testing that returns either a
//! spherical embedding or an immersed doubled triangle, peripheral cycles, and
//! synthesis of Whitney-flip sequences between spherical embeddings.

pub mod cli;
pub mod connectivity;
pub mod digraph;
pub mod embedding;
pub mod error;
pub mod format;
pub mod generate;
pub mod immersion;
pub mod peripheral;
pub mod whitney;

pub use connectivity::EdgeCut2;
pub use digraph::{Arc, ArcEnd, Digraph, EndSide, Pairing, SplitChoice};
pub use embedding::{FaceSet, FacialWalk, RotationSystem};
pub use error::{Error, Result};
pub use immersion::{ImmersionCertificate, PlanarityVerdict};
pub use peripheral::{DirectedCycle, DirectedPath, PeripheralPair};
pub use whitney::{ContractionPair, FlipMove};
