//! Arc complexes of bicoloured convex and once-punctured polygons.
//!
//! The crate enumerates arcs and triangulations, builds the full and
//! permitted arc complexes as finite simplicial complexes, checks and
//! constructs shelling orders, and certifies the complexes as PL balls or
//! spheres. [`bridge`] relates decorated ideal polygons to alternately
//! coloured Euclidean ones.

pub mod arc;
pub mod bridge;
pub mod complex;
pub mod error;
pub mod face;
pub mod polygon;
pub mod shelling;
pub mod sweep;
pub mod triangulation;

pub use arc::{arcs_cross, enumerate_arcs, is_permitted, Arc, ArcTable, ChordLift};
pub use complex::{build_complex, ArcComplex, Codim1Classification, DualGraph, FlipGraphStats};
pub use error::{Error, Result};
pub use face::Face;
pub use polygon::{Colour, PolygonSpec};
pub use shelling::{
    certify, check_wilson_property, flip_path_to_fan, greedy_shelling, join_shelling,
    shell_coloured_convex, shell_coloured_punctured, verify_shelling, BallCertificate,
    GreedyConfig, Provenance, ShellingOrder, Verdict,
};
pub use triangulation::{
    cut_along_loop, enumerate_triangulations, extend_to_triangulation, fan_triangulation, flip,
    LoopCut, Triangulation,
};
