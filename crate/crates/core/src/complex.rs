//! Simplicial complexes given by their facet lists, and independence
//! complexes of graphs.
//!
//! A complex is stored by its facets in canonical order: descending
//! cardinality, ties broken lexicographically on the ascending vertex
//! lists. The facet list is always a non-empty antichain; the complex
//! `{∅}` is represented by the single empty facet, and the void complex
//! is not representable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;
use crate::vertex_set::VertexSet;

/// A simplicial complex on ground set `0..n`, stored by facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Complex {
    n: usize,
    facets: Vec<VertexSet>,
}

pub(crate) fn canonical_sort(facets: &mut [VertexSet]) {
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| VertexSet::lex_cmp(a, b)));
}

impl Complex {
    /// Builds a complex from an explicit facet list.
    ///
    /// The list must be non-empty, every facet must lie in `0..n`, and no
    /// facet may contain another; the facets are stored in canonical order.
    pub fn from_facets<I>(n: usize, facets: I) -> Result<Complex>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > limits::MAX_VERTICES {
            return Err(Error::limit(format!(
                "ground set {n} exceeds the supported maximum {}",
                limits::MAX_VERTICES
            )));
        }
        let mut facets: Vec<VertexSet> = facets.into_iter().collect();
        if facets.is_empty() {
            return Err(Error::input("a complex needs at least one facet"));
        }
        let ground = VertexSet::full(n);
        for f in &facets {
            if !f.is_subset_of(&ground) {
                return Err(Error::input(format!(
                    "facet {f} is not contained in the ground set 0..{n}"
                )));
            }
        }
        canonical_sort(&mut facets);
        facets.dedup();
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if i != j && facets[i].is_subset_of(&facets[j]) {
                    return Err(Error::input(format!(
                        "facet {} is contained in facet {}",
                        facets[i], facets[j]
                    )));
                }
            }
        }
        Ok(Complex { n, facets })
    }

    /// Builds a complex from arbitrary generating faces by discarding the
    /// non-maximal ones.
    pub(crate) fn from_generators(n: usize, faces: Vec<VertexSet>) -> Result<Complex> {
        let mut faces = faces;
        canonical_sort(&mut faces);
        faces.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        // canonical order lists supersets first, so one pass suffices
        for f in faces {
            if !facets.iter().any(|g| f.is_subset_of(g)) {
                facets.push(f);
            }
        }
        Complex::from_facets(n, facets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension of the complex: one less than the largest facet size.
    /// The complex `{∅}` has dimension -1, reported as `None`.
    pub fn dimension(&self) -> Option<usize> {
        self.facets[0].len().checked_sub(1)
    }

    /// Vertices appearing in at least one facet.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f)
    }

    pub fn is_face(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// All facets have equal cardinality.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// A single facet; every face lies in it.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// The link of a face: all faces disjoint from it whose union with it
    /// is a face. Errors if the argument is not a face.
    pub fn link(&self, face: &VertexSet) -> Result<Complex> {
        if !self.is_face(face) {
            return Err(Error::input(format!("{face} is not a face")));
        }
        let generators = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(f))
            .map(|f| *f - *face)
            .collect();
        Complex::from_generators(self.n, generators)
    }

    /// The deletion of a vertex: all faces avoiding it. A vertex in no
    /// facet leaves the complex unchanged.
    pub fn delete_vertex(&self, v: usize) -> Result<Complex> {
        if v >= self.n {
            return Err(Error::input(format!(
                "vertex {v} out of range for ground set 0..{}",
                self.n
            )));
        }
        let generators: Vec<VertexSet> = self.facets.iter().map(|f| f.without(v)).collect();
        Complex::from_generators(self.n, generators)
    }

    /// A compact canonical encoding of the facet list, usable as a memo key.
    pub(crate) fn encoding(&self) -> Vec<u128> {
        self.facets.iter().map(|f| f.mask()).collect()
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "⟩")
    }
}

/// Enumerates all maximal independent sets of a graph in canonical order.
///
/// Maximal independent sets are the maximal cliques of the complement, so
/// this runs Bron–Kerbosch with pivoting on the complement graph.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > limits::MIS_MAX_N {
        return Err(Error::limit(format!(
            "maximal independent set enumeration limited to {} vertices, got {}",
            limits::MIS_MAX_N,
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(vec![VertexSet::EMPTY]);
    }
    let co = g.complement();
    let mut out = Vec::new();
    bron_kerbosch(
        &co,
        VertexSet::EMPTY,
        VertexSet::full(g.n()),
        VertexSet::EMPTY,
        &mut out,
    );
    canonical_sort(&mut out);
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // pivot on the candidate or excluded vertex covering most of P
    let pivot = (p | x)
        .iter()
        .max_by_key(|&v| (g.neighbors(v) & p).len())
        .expect("P ∪ X is non-empty");
    for v in (p - g.neighbors(pivot)).to_vec() {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

/// The number of maximal independent sets of a graph.
pub fn count_mis(g: &Graph) -> Result<usize> {
    Ok(maximal_independent_sets(g)?.len())
}

/// The independence complex of a graph: faces are the independent vertex
/// sets, so facets are the maximal independent sets.
pub fn independence_complex(g: &Graph) -> Result<Complex> {
    let facets = maximal_independent_sets(g)?;
    Complex::from_facets(g.n().max(1), facets)
}
