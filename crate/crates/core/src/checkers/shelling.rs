//! Shelling orders: verification, search, and the closed-form order for
//! complete multipartite independence complexes.
//!
//! An order `F_1, …, F_s` of the facets is a shelling if for all
//! `i < j` there is a vertex `v ∈ F_j \ F_i` and an `l < j` with
//! `F_j \ F_l = {v}`. Single-facet complexes are vacuously shellable.

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::limits;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// One witness per appended facet: the earlier position `prior` whose
/// facet differs from the appended one in exactly the vertex `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShellingWitness {
    pub prior: usize,
    pub vertex: usize,
}

/// A shelling order together with its witnesses.
///
/// `order` is a permutation of facet indices into the canonical facet
/// list; `witnesses[k]` belongs to position `k + 1` of the order. The
/// certificate is replayable: [`is_shelling_order`] accepts `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    pub order: Vec<usize>,
    pub witnesses: Vec<ShellingWitness>,
}

fn check_permutation(order: &[usize], s: usize) -> Result<()> {
    if order.len() != s {
        return Err(Error::input(format!(
            "order has {} entries for {s} facets",
            order.len()
        )));
    }
    let mut seen = vec![false; s];
    for &idx in order {
        if idx >= s || seen[idx] {
            return Err(Error::input(format!(
                "order is not a permutation of 0..{s}"
            )));
        }
        seen[idx] = true;
    }
    Ok(())
}

/// Verifies a facet order against the shelling condition.
///
/// Returns the witness list when the order is a shelling and `None` when
/// it is not; a non-permutation argument is an input error. The witness
/// for position `j` is the earliest position `l < j` whose facet differs
/// from facet `j` in a single vertex.
pub fn is_shelling_order(c: &Complex, order: &[usize]) -> Result<Option<Vec<ShellingWitness>>> {
    let facets = c.facets();
    check_permutation(order, facets.len())?;
    let mut witnesses = Vec::with_capacity(order.len().saturating_sub(1));
    for j in 1..order.len() {
        let fj = facets[order[j]];
        // vertices v admitting some l < j with F_j \ F_l = {v}
        let mut covered = VertexSet::EMPTY;
        let mut first_single = None;
        for (l, &ol) in order[..j].iter().enumerate() {
            let diff = fj - facets[ol];
            if let Some(v) = diff.single_vertex() {
                covered.insert(v);
                if first_single.is_none() {
                    first_single = Some(ShellingWitness {
                        prior: l,
                        vertex: v,
                    });
                }
            }
        }
        for &oi in &order[..j] {
            if ((fj - facets[oi]) & covered).is_empty() {
                return Ok(None);
            }
        }
        // the loop above ran at least once, so a single difference exists
        witnesses.push(first_single.expect("covered is non-empty"));
    }
    Ok(Some(witnesses))
}

/// Searches for a shelling order by dynamic programming over subsets of
/// placed facets.
///
/// Whether a facet can be appended depends only on the set of facets
/// already placed, not their order, so completability over the `2^s`
/// subsets decides shellability. Returns the lexicographically first
/// shelling order, as a certificate accepted by [`is_shelling_order`],
/// iff any shelling exists; complexes with more than
/// [`limits::SHELLING_MAX_FACETS`] facets are rejected.
pub fn find_shelling(c: &Complex) -> Result<Option<ShellingCertificate>> {
    let facets = c.facets();
    let s = facets.len();
    if s > limits::SHELLING_MAX_FACETS {
        return Err(Error::limit(format!(
            "shelling search limited to {} facets, got {s}",
            limits::SHELLING_MAX_FACETS
        )));
    }
    if s == 1 {
        return Ok(Some(ShellingCertificate {
            order: vec![0],
            witnesses: Vec::new(),
        }));
    }
    let diff: Vec<Vec<VertexSet>> = (0..s)
        .map(|j| (0..s).map(|l| facets[j] - facets[l]).collect())
        .collect();
    let single: Vec<Vec<Option<usize>>> = (0..s)
        .map(|j| (0..s).map(|l| diff[j][l].single_vertex()).collect())
        .collect();

    let can_append = |j: usize, placed: u32| -> bool {
        let mut covered = VertexSet::EMPTY;
        let mut l = placed;
        while l != 0 {
            let i = l.trailing_zeros() as usize;
            l &= l - 1;
            if let Some(v) = single[j][i] {
                covered.insert(v);
            }
        }
        let mut rest = placed;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (diff[j][i] & covered).is_empty() {
                return false;
            }
        }
        true
    };

    let full: u32 = (1 << s) - 1;
    let mut completable = vec![false; full as usize + 1];
    completable[full as usize] = true;
    for mask in (0..full).rev() {
        for j in 0..s {
            let bit = 1u32 << j;
            if mask & bit == 0 && completable[(mask | bit) as usize] && can_append(j, mask) {
                completable[mask as usize] = true;
                break;
            }
        }
    }
    if !completable[0] {
        return Ok(None);
    }

    // walk forward, always appending the smallest facet that keeps the
    // placed set completable; this is the lexicographically first shelling
    let mut order = Vec::with_capacity(s);
    let mut mask = 0u32;
    while mask != full {
        let j = (0..s)
            .find(|&j| {
                let bit = 1u32 << j;
                mask & bit == 0 && completable[(mask | bit) as usize] && can_append(j, mask)
            })
            .expect("completable mask has a feasible next facet");
        order.push(j);
        mask |= 1 << j;
    }
    let witnesses =
        is_shelling_order(c, &order)?.expect("reconstructed order replays as a shelling");
    Ok(Some(ShellingCertificate { order, witnesses }))
}

/// The closed-form shelling of a complete multipartite independence
/// complex with at most one class larger than a singleton: the big class
/// first, then each singleton class, witnessed against position 0.
///
/// Partitions with two classes larger than one vertex are rejected, since
/// their complexes are not shellable at all.
pub fn canonical_shelling_multipartite(p: &Partition) -> Result<ShellingCertificate> {
    let parts = p.parts();
    if parts.iter().filter(|&&k| k > 1).count() > 1 {
        return Err(Error::input(format!(
            "partition {p} has two classes above size one, so no shelling exists"
        )));
    }
    let t = p.class_count();
    let m = parts[0];
    let order = (0..t).collect();
    let witnesses = (1..t)
        .map(|j| ShellingWitness {
            prior: 0,
            vertex: m + j - 1,
        })
        .collect();
    Ok(ShellingCertificate { order, witnesses })
}
