//! Vertex decomposability of simplicial complexes.
//!
//! A complex is vertex decomposable if it is a simplex, or some shedding
//! vertex `v` exists: the deletion and the link of `v` are both vertex
//! decomposable, and no facet of the link is a facet of the deletion.
//! Checking facets of the link suffices: a face of the link that is a
//! facet of the deletion is maximal there, hence maximal in the link.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::limits;
use crate::vertex_set::VertexSet;

/// One node of a decomposition tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VdNode {
    /// A simplex; the recursion bottoms out.
    Simplex,
    /// A shedding vertex with the node ids of the two sub-decompositions.
    Shed {
        vertex: usize,
        deletion: usize,
        link: usize,
    },
}

/// A decomposition tree certifying vertex decomposability.
///
/// Nodes are stored child-first, so both branch ids of a `Shed` node are
/// smaller than the node's own id; identical sub-complexes share a node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VdTree {
    pub root: usize,
    pub nodes: Vec<VdNode>,
}

#[derive(Clone, Copy, PartialEq)]
enum Decision {
    NotVd,
    Simplex,
    Shed(usize),
}

fn decide(c: &Complex, memo: &mut HashMap<Vec<u128>, Decision>) -> Decision {
    let key = c.encoding();
    if let Some(&d) = memo.get(&key) {
        return d;
    }
    let decision = if c.is_simplex() {
        Decision::Simplex
    } else {
        let mut found = Decision::NotVd;
        for v in c.support().iter() {
            let link = c.link(&VertexSet::singleton(v)).expect("v is a vertex");
            let deletion = c.delete_vertex(v).expect("non-simplex deletion");
            if link.facets().iter().any(|f| deletion.facets().contains(f)) {
                continue;
            }
            if decide(&deletion, memo) != Decision::NotVd && decide(&link, memo) != Decision::NotVd
            {
                found = Decision::Shed(v);
                break;
            }
        }
        found
    };
    memo.insert(key, decision);
    decision
}

fn build(
    c: &Complex,
    memo: &mut HashMap<Vec<u128>, Decision>,
    index: &mut HashMap<Vec<u128>, usize>,
    nodes: &mut Vec<VdNode>,
) -> usize {
    let key = c.encoding();
    if let Some(&id) = index.get(&key) {
        return id;
    }
    let node = match memo[&key] {
        Decision::Simplex => VdNode::Simplex,
        Decision::Shed(v) => {
            let link = c.link(&VertexSet::singleton(v)).expect("v is a vertex");
            let deletion = c.delete_vertex(v).expect("non-simplex deletion");
            let deletion_id = build(&deletion, memo, index, nodes);
            let link_id = build(&link, memo, index, nodes);
            VdNode::Shed {
                vertex: v,
                deletion: deletion_id,
                link: link_id,
            }
        }
        Decision::NotVd => unreachable!("tree is only built for decomposable complexes"),
    };
    nodes.push(node);
    let id = nodes.len() - 1;
    index.insert(key, id);
    id
}

/// Decides vertex decomposability, returning a decomposition tree when
/// the complex is decomposable.
///
/// Candidates for the shedding vertex are tried in ascending id order and
/// sub-results are memoized on the canonical facet encoding. Complexes
/// over more than [`limits::VD_MAX_N`] ambient vertices or with more than
/// [`limits::VD_MAX_FACETS`] facets are rejected.
pub fn is_vertex_decomposable(c: &Complex) -> Result<Option<VdTree>> {
    if c.n() > limits::VD_MAX_N {
        return Err(Error::limit(format!(
            "vertex decomposition limited to {} vertices, got {}",
            limits::VD_MAX_N,
            c.n()
        )));
    }
    if c.facet_count() > limits::VD_MAX_FACETS {
        return Err(Error::limit(format!(
            "vertex decomposition limited to {} facets, got {}",
            limits::VD_MAX_FACETS,
            c.facet_count()
        )));
    }
    let mut memo = HashMap::new();
    if decide(c, &mut memo) == Decision::NotVd {
        return Ok(None);
    }
    let mut index = HashMap::new();
    let mut nodes = Vec::new();
    let root = build(c, &mut memo, &mut index, &mut nodes);
    Ok(Some(VdTree { root, nodes }))
}
