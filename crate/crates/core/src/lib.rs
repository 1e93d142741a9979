//! Local maximum stable sets of small graphs and the greedoid question.
//!
//! A stable set `S` of a graph `G` is a *local maximum stable set* when it is
//! a maximum stable set of the subgraph induced by its closed neighborhood
//! `N[S]`. This crate enumerates the family `Ψ(G)` of such sets, decides
//! whether it forms a greedoid, and carries the matching machinery that makes
//! the decision fast on very well-covered graphs: there, `Ψ(G)` is a greedoid
//! exactly when `G` has a unique perfect matching.
//!
//! Everything works on graphs with at most [`MAX_VERTICES`] vertices so that a
//! vertex set is a single `u16` bitmask and exhaustive oracles stay cheap.

pub mod canon;
pub mod classifiers;
mod error;
pub mod generators;
pub mod graph;
pub mod greedoid;
pub mod io;
pub mod matching;
pub mod stability;

pub use classifiers::VeryWellCovered;
pub use error::{Error, ParseError, Result};
pub use graph::{Edge, Graph, VertexSet, MAX_VERTICES};
pub use greedoid::{AccessibilityChain, Certificate, GreedoidDecision, GreedoidMode, SetSystem};
pub use matching::{AlternatingCycle, Matching};
pub use stability::{PsiMode, StableSetFamily};
