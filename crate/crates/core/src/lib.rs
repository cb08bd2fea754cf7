//! Injective colouring of sparse and planar graphs of large girth: exact
//! invariants and solvers, a constructive colourer built from reducible
//! configurations, and discharging audits in exact arithmetic.

pub mod discharging;
pub mod exact;
pub mod factory;
pub mod families;
pub mod graph;
pub mod listcolor;
pub mod rational;
pub mod reduction;
pub mod structure;

pub use graph::{parse_graph, Graph, GraphError};
pub use rational::Rational;
pub use structure::PlaneEmbedding;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/list-coloring.md")]
    mod list_coloring {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/discharging.md")]
    mod discharging {}
    #[doc = include_str!("../../../book/src/factory.md")]
    mod factory {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
