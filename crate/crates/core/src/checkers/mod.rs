//! Decision procedures: shelling search, vertex decomposability,
//! unmixedness, and the Cohen-Macaulay verdict, plus the closed-form
//! answers for complete multipartite graphs.

pub mod shelling;
pub mod vertex_decomposition;

use serde::Serialize;

use crate::complex::{canonical_sort, independence_complex, maximal_independent_sets};
use crate::error::Result;
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

pub use shelling::{
    canonical_shelling_multipartite, find_shelling, is_shelling_order, ShellingCertificate,
    ShellingWitness,
};
pub use vertex_decomposition::{is_vertex_decomposable, VdNode, VdTree};

/// Truth state of a Cohen-Macaulay verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmState {
    Yes,
    No,
    Unknown,
}

/// Why a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CmReason {
    MultipartiteAllSingleton,
    MultipartiteBigPart,
    NotUnmixed,
    PureAndShellable,
    Inconclusive,
}

/// The outcome of [`cohen_macaulay_verdict`].
///
/// `Yes` carries `MultipartiteAllSingleton` or `PureAndShellable`, `No`
/// carries `MultipartiteBigPart` or `NotUnmixed`, and `Unknown` carries
/// `Inconclusive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub state: CmState,
    pub reason: CmReason,
}

impl std::fmt::Display for CmState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CmState::Yes => "yes",
            CmState::No => "no",
            CmState::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

impl std::fmt::Display for CmReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CmReason::MultipartiteAllSingleton => "MULTIPARTITE_ALL_SINGLETON",
            CmReason::MultipartiteBigPart => "MULTIPARTITE_BIG_PART",
            CmReason::NotUnmixed => "NOT_UNMIXED",
            CmReason::PureAndShellable => "PURE_AND_SHELLABLE",
            CmReason::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

/// All minimal vertex covers of a graph, in canonical order.
///
/// A vertex set is a minimal vertex cover exactly when its complement is
/// a maximal independent set, so these are the complements of the sets
/// from [`maximal_independent_sets`].
pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    let full = VertexSet::full(g.n());
    let mut covers: Vec<VertexSet> = maximal_independent_sets(g)?
        .into_iter()
        .map(|s| full - s)
        .collect();
    canonical_sort(&mut covers);
    Ok(covers)
}

/// Whether all minimal vertex covers of a graph share one cardinality;
/// equivalently, whether the independence complex is pure.
pub fn is_unmixed(g: &Graph) -> Result<bool> {
    let sets = maximal_independent_sets(g)?;
    Ok(sets.iter().all(|s| s.len() == sets[0].len()))
}

fn at_most_one_big_class(p: &Partition) -> bool {
    p.parts().get(1).is_none_or(|&k| k == 1)
}

/// Closed form: the independence complex of a complete multipartite graph
/// is shellable iff at most one class has more than one vertex.
pub fn multipartite_is_shellable(p: &Partition) -> bool {
    at_most_one_big_class(p)
}

/// Closed form: vertex decomposable iff at most one class has more than
/// one vertex, the same condition as shellability.
pub fn multipartite_is_vertex_decomposable(p: &Partition) -> bool {
    at_most_one_big_class(p)
}

/// Closed form: unmixed iff all classes have the same size.
pub fn multipartite_is_unmixed(p: &Partition) -> bool {
    let parts = p.parts();
    parts.iter().all(|&k| k == parts[0])
}

/// Closed form: Cohen-Macaulay iff every class is a single vertex.
pub fn multipartite_is_cm(p: &Partition) -> bool {
    p.parts()[0] == 1
}

/// Decides Cohen-Macaulayness of a graph's edge ring as far as the
/// implemented toolbox reaches.
///
/// The cascade: a complete multipartite graph is answered by the closed
/// form; otherwise a graph that is not unmixed is a `No`; otherwise a
/// pure complex with a shelling found by search is a `Yes`; everything
/// else is `Unknown`. Yes and No answers are independent of the
/// coefficient field.
pub fn cohen_macaulay_verdict(g: &Graph) -> Result<CmVerdict> {
    if let Some(p) = g.detect_multipartite()? {
        return Ok(if multipartite_is_cm(&p) {
            CmVerdict {
                state: CmState::Yes,
                reason: CmReason::MultipartiteAllSingleton,
            }
        } else {
            CmVerdict {
                state: CmState::No,
                reason: CmReason::MultipartiteBigPart,
            }
        });
    }
    if !is_unmixed(g)? {
        return Ok(CmVerdict {
            state: CmState::No,
            reason: CmReason::NotUnmixed,
        });
    }
    let complex = independence_complex(g)?;
    if find_shelling(&complex)?.is_some() {
        return Ok(CmVerdict {
            state: CmState::Yes,
            reason: CmReason::PureAndShellable,
        });
    }
    Ok(CmVerdict {
        state: CmState::Unknown,
        reason: CmReason::Inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(elems: &[usize]) -> VertexSet {
        elems.iter().copied().collect()
    }

    fn multipartite(parts: &[usize]) -> Graph {
        Graph::complete_multipartite(&Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn covers_of_k23() {
        let covers = minimal_vertex_covers(&multipartite(&[2, 3])).unwrap();
        assert_eq!(covers, vec![vs(&[0, 1, 2]), vs(&[3, 4])]);
    }

    #[test]
    fn covers_of_k3_are_all_pairs() {
        let covers = minimal_vertex_covers(&multipartite(&[1, 1, 1])).unwrap();
        assert_eq!(covers, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
    }

    #[test]
    fn cover_of_edgeless_graph_is_empty() {
        let covers = minimal_vertex_covers(&Graph::edgeless(2).unwrap()).unwrap();
        assert_eq!(covers, vec![VertexSet::EMPTY]);
    }

    #[test]
    fn unmixed_examples() {
        assert!(is_unmixed(&multipartite(&[2, 2])).unwrap());
        assert!(!is_unmixed(&multipartite(&[2, 3])).unwrap());
        let c5: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        assert!(is_unmixed(&Graph::from_edges(5, &c5).unwrap()).unwrap());
        assert!(!is_unmixed(&path(5)).unwrap());
    }

    #[test]
    fn fast_path_tables() {
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        assert!(multipartite_is_shellable(&p(&[3, 1, 1])));
        assert!(!multipartite_is_shellable(&p(&[2, 2])));
        assert!(multipartite_is_shellable(&p(&[7])));
        assert!(multipartite_is_shellable(&p(&[1, 1, 1, 1])));
        assert!(!multipartite_is_vertex_decomposable(&p(&[2, 2])));
        assert!(multipartite_is_vertex_decomposable(&p(&[4, 1])));
        assert!(multipartite_is_unmixed(&p(&[2, 2])));
        assert!(!multipartite_is_unmixed(&p(&[3, 2])));
        assert!(multipartite_is_cm(&p(&[1, 1, 1])));
        assert!(!multipartite_is_cm(&p(&[2, 1])));
    }

    #[test]
    fn verdict_on_multipartite_graphs() {
        let v = cohen_macaulay_verdict(&multipartite(&[1, 1, 1])).unwrap();
        assert_eq!(v.state, CmState::Yes);
        assert_eq!(v.reason, CmReason::MultipartiteAllSingleton);

        let v = cohen_macaulay_verdict(&multipartite(&[2, 3])).unwrap();
        assert_eq!(v.state, CmState::No);
        assert_eq!(v.reason, CmReason::MultipartiteBigPart);
    }

    #[test]
    fn verdict_on_p4_is_pure_and_shellable() {
        let v = cohen_macaulay_verdict(&path(4)).unwrap();
        assert_eq!(v.state, CmState::Yes);
        assert_eq!(v.reason, CmReason::PureAndShellable);
    }

    #[test]
    fn verdict_on_p5_is_not_unmixed() {
        let v = cohen_macaulay_verdict(&path(5)).unwrap();
        assert_eq!(v.state, CmState::No);
        assert_eq!(v.reason, CmReason::NotUnmixed);
    }

    #[test]
    fn verdict_unknown_on_joined_paths() {
        // two P4s with every cross edge: Δ is two disjoint P4 complexes,
        // pure but disconnected, and the graph is not multipartite
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)];
        for u in 0..4 {
            for v in 4..8 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(g.detect_multipartite().unwrap(), None);
        let v = cohen_macaulay_verdict(&g).unwrap();
        assert_eq!(v.state, CmState::Unknown);
        assert_eq!(v.reason, CmReason::Inconclusive);
    }

    #[test]
    fn verdict_serialization() {
        let v = cohen_macaulay_verdict(&multipartite(&[2, 3])).unwrap();
        let json = serde_json::to_value(v).unwrap();
        assert_eq!(json["state"], "no");
        assert_eq!(json["reason"], "MULTIPARTITE_BIG_PART");
    }
}
