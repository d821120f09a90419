//! Threshold spreading on graphs and exact budgeted partial immunization of
//! trees.
//!
//! A vertex `u` with threshold `tau(u)` becomes infected once at least
//! `tau(u)` of its neighbours are infected. A *dynamic monopoly* is a seed set
//! whose infection eventually reaches every vertex, and `dyn(G, tau)` is the
//! least size of one. Raising thresholds by an increment `iota` with
//! `0 <= iota <= iota_max` and total `b` can only make monopolies larger;
//! `vacc(G, tau, iota_max, b)` is the best achievable `dyn(G, tau + iota)`.
//!
//! [`dp`] computes `vacc` on trees exactly together with an optimal increment.
//! [`spread`] and [`oracle`] provide the exhaustive reference values it is
//! checked against, and [`matching`] the matching-based bounds.

pub mod dp;
pub mod error;
pub mod ext;
pub mod format;
pub mod gen;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod par;
pub mod spread;

pub use dp::{dyn_tree, run_dp, solve_vacc, DpCell, DpTable, VaccSolution};
pub use error::{Error, Result};
pub use ext::ExtInt;
pub use graph::{Graph, RootedTree, VertexFn};
pub use matching::{BoundReport, Matching};
pub use par::Exec;
pub use spread::{compute_hull, dyn_bruteforce, is_dynamic_monopoly, VertexSet};
