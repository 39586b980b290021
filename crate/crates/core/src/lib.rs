//! Graph smoothing in three norms.
//!
//! - l2: the algebraic connectivity `a(G)` and a Fiedler vector ([`spectral`]);
//! - l1: `b(G)`, computed exactly as `(n/2)` times the sparsest-cut density
//!   over cuts with two connected sides ([`l1`], [`trees`]);
//! - l-infinity: `γ(G)`, the minimum of one linear program per vertex
//!   ([`linf`], solved by [`lp`]).
//!
//! [`bounds`] checks the inequalities between these quantities, and
//! [`families`] generates the standard graph families together with their
//! closed-form values.

pub mod bounds;
pub mod cut;
pub mod error;
pub mod families;
pub mod graph;
pub mod l1;
pub mod linf;
pub mod lp;
pub mod rational;
pub mod smoothing;
pub mod spectral;
pub mod trees;
pub mod vertex_set;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{parse_edge_list, Graph};
pub use rational::{Rational, RationalValue};
pub use vertex_set::VertexSet;
