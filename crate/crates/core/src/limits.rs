//! Size limits guarding the exponential decision procedures.
//!
//! Each limit bounds the input size of one search; callers that need more
//! than these defaults are asking for runtimes the brute-force machinery is
//! not meant to provide.

/// Largest vertex count accepted by the exact chromatic number search.
pub const CHROMATIC_MAX_N: usize = 16;

/// Largest vertex count accepted by maximal-independent-set enumeration.
pub const MIS_MAX_N: usize = 28;

/// Largest facet count accepted by the subset-DP shelling search.
pub const SHELLING_MAX_FACETS: usize = 20;

/// Largest facet count accepted by the vertex-decomposability recursion.
pub const VD_MAX_FACETS: usize = 20;

/// Largest support size accepted by the vertex-decomposability recursion.
pub const VD_MAX_N: usize = 28;

/// Largest vertex count accepted by the seeded random-graph generator.
pub const RANDOM_GRAPH_MAX_N: usize = 16;

/// Hard cap on graph order imposed by the bitset vertex representation.
pub const MAX_VERTICES: usize = 128;
