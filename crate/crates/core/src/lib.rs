//! Exact connectivity toolkit for the disjointness graph of segments
//! spanned by a planar point set in general position.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod generators;
pub mod geometry;
pub mod graph;
