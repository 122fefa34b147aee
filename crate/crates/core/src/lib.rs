//! Vertex deletions that make at least `k` vertices share the maximum
//! degree of what remains.
//!
//! `f_k(G)` is the least number of vertices whose deletion leaves an
//! induced subgraph `H` with `k` vertices of degree `Δ(H)`, or with fewer
//! than `k` vertices. The crate provides
//!
//! * [`exactf`]: `f_2` exactly in `O(n^2)` with a deletion trace,
//! * [`oracle`]: exhaustive `f_k` and k-feasibility for small graphs,
//! * [`forest`] and [`lowdeg`]: constructive upper bounds for forests and
//!   graphs of maximum degree 2,
//! * [`families`]: the extremal constructions that make the bounds sharp,
//! * [`bounds`]: the closed-form bounds themselves,
//! * [`harness`]: verification suites tying all of the above together.
//!
//! Every procedure returns a [`Certificate`] that
//! [`verify_certificate`] re-checks from scratch.

pub mod bench;
pub mod bounds;
pub mod certificate;
pub mod error;
pub mod exactf;
pub mod families;
pub mod forest;
pub mod graph;
pub mod harness;
pub mod io;
pub mod lowdeg;
pub mod oracle;
pub mod random;

pub use certificate::{verify_certificate, Certificate};
pub use error::{Error, Result};
pub use exactf::{diff_upper_bound, exact_f};
pub use graph::{degree_view, DegreeView, Graph, Vertex};
pub use oracle::{brute_feasible, brute_fk};
