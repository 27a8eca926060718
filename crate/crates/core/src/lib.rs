//! Exact total domination toolkit for small graphs.
//!
//! A set `D` of vertices is a *total dominating set* (TDS) when every vertex,
//! including the members of `D`, has a neighbor in `D`. For a graph without
//! isolated vertices this crate computes
//!
//! * `γ_t`, the size of a smallest TDS,
//! * every smallest TDS (the γ_t-sets) in lexicographic order,
//! * `τ`, the number of γ_t-sets,
//! * `TDV(v)`, the number of γ_t-sets containing `v`,
//!
//! together with closed forms for paths, cycles and complete multipartite
//! graphs ([`formulas`]) and machine-checked bounds ([`properties`]).
//!
//! ```
//! use tdv_core::{solve, FamilySpec};
//!
//! let g = "path:6".parse::<FamilySpec>().unwrap().generate().unwrap();
//! let report = solve(&g, false).unwrap();
//! assert_eq!((report.gamma_t, report.tau), (4, 4));
//! assert_eq!(report.tdv, vec![2, 4, 2, 2, 4, 2]);
//! ```

pub mod corpus;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod properties;
pub mod solver;

pub use error::{Result, TdvError};
pub use family::{random_connected_graph, FamilySpec};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use properties::{run_all, CheckReport, Verdict, Witness};
pub use solver::{enumerate_min_tds, gamma_t, is_tds, solve, tau, tdv_all, TdvReport};
