//! Independence complexes of finite simple graphs: construction,
//! shellability, vertex decomposability, unmixedness, and a
//! Cohen-Macaulay verdict, with closed-form answers for complete
//! multipartite graphs and a cross-validation harness tying the two
//! routes together.
//!
//! The central objects are [`Graph`], a simple graph on `0..n`, and
//! [`Complex`], a simplicial complex stored by its facets in canonical
//! order. The facets of [`independence_complex`] are the maximal
//! independent sets of the graph.
//!
//! ```
//! use indecomp::{independence_complex, Graph, Partition};
//! use indecomp::checkers::{find_shelling, multipartite_is_shellable};
//!
//! // K_{2,2} has two independent classes of size two: not shellable.
//! let p = Partition::new([2, 2])?;
//! let complex = independence_complex(&Graph::complete_multipartite(&p)?)?;
//! assert!(find_shelling(&complex)?.is_none());
//! assert!(!multipartite_is_shellable(&p));
//! # Ok::<(), indecomp::Error>(())
//! ```

pub mod checkers;
pub mod complex;
pub mod error;
pub mod graph;
pub mod harness;
pub mod limits;
pub mod partition;
pub mod vertex_set;

pub use complex::{count_mis, independence_complex, maximal_independent_sets, Complex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::Partition;
pub use vertex_set::VertexSet;
