//! Colour-biased Hamilton cycles in dense and random graphs.
//!
//! The crate is `no_std` (with `alloc`). It contains the graph primitives, the
//! three extremal colourings, maximum and monochromatic matchings with
//! Tutte–Berge certificates, linear-forest growth and clean-up, M-respecting
//! rotation–extension, random graph generators and the end-to-end pipeline.
//! File formats, the CLI and parallel batch runs live in the `colourbias` crate.

#![no_std]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod forest;
pub mod graph;
pub mod matching;
pub mod pipeline;
pub mod posa;
pub mod random;

pub use error::{Error, Result};
pub use graph::{
    Colour, Edge, EdgeColouring, Graph, GraphBuilder, HamiltonCycle, LinearForest, Matching,
    Vertex, VertexSet,
};

/// Exact rational used for degree ratios and bias targets.
pub type Rational = num_rational::Ratio<i64>;
