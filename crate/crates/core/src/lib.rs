//! Certified bounds on maximum-weight directed cuts.
//!
//! The crate bundles exact rational arithmetic over weighted digraphs, an exact
//! max-dicut oracle, one derandomized cut constructor per lower bound (each
//! returning a [`BoundCertificate`]), generators for the extremal instance
//! families, and an exact linear-programming solver for the best constant
//! `c_ν` attainable on acyclic digraphs whose longest path has `ν` vertices.

pub mod certificate;
pub mod cuts;
pub mod error;
pub mod exact;
pub mod game;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lp;
pub mod measures;
pub mod rational;
pub mod scheme;

pub use certificate::{Algorithm, BoundCertificate, CertifiedCut};
pub use error::{Error, Result};
pub use graph::{Arc, Dicut, WeightedDigraph};
pub use rational::Rational;
