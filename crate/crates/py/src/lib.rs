//! Python extension module for the `indecomp` crate.
//!
//! Exposes `Graph` and `Complex` as classes plus the checkers, the
//! multipartite closed forms, and the cross-validation harness as module
//! functions. Partitions are plain `list[int]` values on the Python side;
//! structured results (certificates, decomposition trees, verdicts,
//! validation reports) are returned as the same dict shapes the CLI
//! prints as JSON. Input errors raise `ValueError` and resource-limit
//! errors raise `RuntimeError`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use indecomp::harness::Budgets;
use indecomp::{Complex as CoreComplex, Error, Graph as CoreGraph, Partition, VertexSet};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Input(_) => PyValueError::new_err(e.to_string()),
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn partition_from(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py_err)
}

/// Converts any serializable result into the matching Python structure
/// by round-tripping through the `json` module.
fn serialize_to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value)
        .map_err(|e| PyRuntimeError::new_err(format!("serialization failed: {e}")))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn face_from(vertices: Vec<usize>, n: usize) -> PyResult<VertexSet> {
    for &v in &vertices {
        if v >= n {
            return Err(PyValueError::new_err(format!(
                "input error: vertex {v} is outside the ground set 0..{n}"
            )));
        }
    }
    Ok(vertices.into_iter().collect())
}

fn sets_to_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(VertexSet::to_vec).collect()
}

/// A finite simple graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = CoreGraph::from_edges(n, &edges).map_err(to_py_err)?;
        Ok(Graph { inner })
    }

    /// The graph on `n` vertices with no edges.
    #[staticmethod]
    fn edgeless(n: usize) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::edgeless(n).map_err(to_py_err)?,
        })
    }

    /// The complete graph on `n` vertices.
    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::complete(n).map_err(to_py_err)?,
        })
    }

    /// The complete multipartite graph whose classes have the given sizes.
    #[staticmethod]
    fn complete_multipartite(parts: Vec<usize>) -> PyResult<Self> {
        let p = partition_from(parts)?;
        Ok(Graph {
            inner: CoreGraph::complete_multipartite(&p).map_err(to_py_err)?,
        })
    }

    /// Parses the plain text format: a vertex count line followed by one
    /// `u v` line per edge, with `#` comments and blank lines ignored.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::from_text(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, ascending.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if u >= n || v >= n {
            return Err(PyValueError::new_err(format!(
                "input error: edge ({u}, {v}) is outside the ground set 0..{n}"
            )));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!(
                "input error: vertex {v} is outside the ground set 0..{}",
                self.inner.n()
            )));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    /// Class sizes (descending) when the graph is complete multipartite,
    /// `None` otherwise.
    fn detect_multipartite(&self) -> PyResult<Option<Vec<usize>>> {
        let found = self.inner.detect_multipartite().map_err(to_py_err)?;
        Ok(found.map(|p| p.parts().to_vec()))
    }

    fn chromatic_number(&self) -> PyResult<usize> {
        self.inner.chromatic_number().map_err(to_py_err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={:?})",
            self.inner.n(),
            self.inner.edges()
        )
    }
}

/// A simplicial complex on vertices `0..n`, stored by its facets.
#[pyclass(frozen, skip_from_py_object)]
struct Complex {
    inner: CoreComplex,
}

#[pymethods]
impl Complex {
    /// Builds a complex from an explicit facet list; facets must form an
    /// antichain inside `0..n`.
    #[new]
    fn new(n: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let ground = n.max(1);
        let facets = facets
            .into_iter()
            .map(|f| face_from(f, ground))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Complex {
            inner: CoreComplex::from_facets(n, facets).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn facet_count(&self) -> usize {
        self.inner.facet_count()
    }

    /// Facets in canonical order (size descending, then lexicographic).
    fn facets(&self) -> Vec<Vec<usize>> {
        sets_to_lists(self.inner.facets())
    }

    /// `None` for the complex whose only facet is empty.
    fn dimension(&self) -> Option<usize> {
        self.inner.dimension()
    }

    fn support(&self) -> Vec<usize> {
        self.inner.support().to_vec()
    }

    fn is_face(&self, face: Vec<usize>) -> bool {
        match face_from(face, self.inner.n().max(1)) {
            Ok(f) => self.inner.is_face(&f),
            Err(_) => false,
        }
    }

    fn is_pure(&self) -> bool {
        self.inner.is_pure()
    }

    fn is_simplex(&self) -> bool {
        self.inner.is_simplex()
    }

    fn link(&self, face: Vec<usize>) -> PyResult<Complex> {
        let f = face_from(face, self.inner.n().max(1))?;
        Ok(Complex {
            inner: self.inner.link(&f).map_err(to_py_err)?,
        })
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Complex> {
        Ok(Complex {
            inner: self.inner.delete_vertex(v).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Complex(n={}, facets={:?})", self.inner.n(), self.facets())
    }
}

/// The independence complex of `g`: faces are the independent sets.
#[pyfunction]
fn independence_complex(g: &Graph) -> PyResult<Complex> {
    Ok(Complex {
        inner: indecomp::independence_complex(&g.inner).map_err(to_py_err)?,
    })
}

/// All maximal independent sets of `g` in canonical order.
#[pyfunction]
fn maximal_independent_sets(g: &Graph) -> PyResult<Vec<Vec<usize>>> {
    let sets = indecomp::maximal_independent_sets(&g.inner).map_err(to_py_err)?;
    Ok(sets_to_lists(&sets))
}

/// The number of maximal independent sets of `g`.
#[pyfunction]
fn count_mis(g: &Graph) -> PyResult<usize> {
    indecomp::count_mis(&g.inner).map_err(to_py_err)
}

/// A shelling certificate dict `{"order", "witnesses"}` when the complex
/// is shellable, `None` otherwise.
#[pyfunction]
fn find_shelling(py: Python<'_>, c: &Complex) -> PyResult<Option<Py<PyAny>>> {
    match indecomp::checkers::find_shelling(&c.inner).map_err(to_py_err)? {
        Some(cert) => Ok(Some(serialize_to_py(py, &cert)?)),
        None => Ok(None),
    }
}

/// The witness list when `order` is a shelling order of `c`, `None` when
/// it is not; a non-permutation order raises `ValueError`.
#[pyfunction]
fn is_shelling_order(
    py: Python<'_>,
    c: &Complex,
    order: Vec<usize>,
) -> PyResult<Option<Py<PyAny>>> {
    match indecomp::checkers::is_shelling_order(&c.inner, &order).map_err(to_py_err)? {
        Some(witnesses) => Ok(Some(serialize_to_py(py, &witnesses)?)),
        None => Ok(None),
    }
}

/// A decomposition tree dict `{"root", "nodes"}` when the complex is
/// vertex decomposable, `None` otherwise.
#[pyfunction]
fn is_vertex_decomposable(py: Python<'_>, c: &Complex) -> PyResult<Option<Py<PyAny>>> {
    match indecomp::checkers::is_vertex_decomposable(&c.inner).map_err(to_py_err)? {
        Some(tree) => Ok(Some(serialize_to_py(py, &tree)?)),
        None => Ok(None),
    }
}

/// All minimal vertex covers of `g` in canonical order.
#[pyfunction]
fn minimal_vertex_covers(g: &Graph) -> PyResult<Vec<Vec<usize>>> {
    let covers = indecomp::checkers::minimal_vertex_covers(&g.inner).map_err(to_py_err)?;
    Ok(sets_to_lists(&covers))
}

/// Whether every minimal vertex cover of `g` has the same size.
#[pyfunction]
fn is_unmixed(g: &Graph) -> PyResult<bool> {
    indecomp::checkers::is_unmixed(&g.inner).map_err(to_py_err)
}

/// The Cohen-Macaulay verdict for `g` as a dict `{"state", "reason"}`.
#[pyfunction]
fn cohen_macaulay_verdict(py: Python<'_>, g: &Graph) -> PyResult<Py<PyAny>> {
    let verdict = indecomp::checkers::cohen_macaulay_verdict(&g.inner).map_err(to_py_err)?;
    serialize_to_py(py, &verdict)
}

/// Closed form: the complete multipartite graph with these class sizes
/// has a shellable independence complex iff at most one class has two or
/// more vertices.
#[pyfunction]
fn multipartite_is_shellable(parts: Vec<usize>) -> PyResult<bool> {
    Ok(indecomp::checkers::multipartite_is_shellable(
        &partition_from(parts)?,
    ))
}

/// Closed form: vertex decomposable iff at most one class has two or
/// more vertices.
#[pyfunction]
fn multipartite_is_vertex_decomposable(parts: Vec<usize>) -> PyResult<bool> {
    Ok(indecomp::checkers::multipartite_is_vertex_decomposable(
        &partition_from(parts)?,
    ))
}

/// Closed form: unmixed iff all class sizes are equal.
#[pyfunction]
fn multipartite_is_unmixed(parts: Vec<usize>) -> PyResult<bool> {
    Ok(indecomp::checkers::multipartite_is_unmixed(
        &partition_from(parts)?,
    ))
}

/// Closed form: Cohen-Macaulay iff every class is a single vertex.
#[pyfunction]
fn multipartite_is_cm(parts: Vec<usize>) -> PyResult<bool> {
    Ok(indecomp::checkers::multipartite_is_cm(&partition_from(
        parts,
    )?))
}

/// The canonical shelling certificate for an eligible partition (at most
/// one class of size two or more) as a dict `{"order", "witnesses"}`.
#[pyfunction]
fn canonical_shelling_multipartite(py: Python<'_>, parts: Vec<usize>) -> PyResult<Py<PyAny>> {
    let cert = indecomp::checkers::canonical_shelling_multipartite(&partition_from(parts)?)
        .map_err(to_py_err)?;
    serialize_to_py(py, &cert)
}

/// A seeded Erdos-Renyi graph; identical arguments give identical graphs.
#[pyfunction]
fn random_graph(n: usize, edge_probability: f64, seed: u64) -> PyResult<Graph> {
    let inner = indecomp::harness::random_graph(n, edge_probability, seed).map_err(to_py_err)?;
    Ok(Graph { inner })
}

/// All partitions with total at most `max_total`, as descending class
/// size lists, ordered by total then lexicographically descending.
#[pyfunction]
fn enumerate_partitions(max_total: usize) -> Vec<Vec<usize>> {
    indecomp::harness::enumerate_partitions(max_total)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Runs the cross-validation harness and returns the report as a dict
/// with `scope`, per-check results, and an overall `passed` flag.
#[pyfunction]
#[pyo3(signature = (max_partition_total = 8, max_random_n = 8, samples = 200, seed = 42))]
fn cross_validate(
    py: Python<'_>,
    max_partition_total: usize,
    max_random_n: usize,
    samples: usize,
    seed: u64,
) -> PyResult<Py<PyAny>> {
    let budgets = Budgets {
        max_partition_total,
        max_random_n,
        samples,
        seed,
    };
    serialize_to_py(py, &indecomp::harness::cross_validate(&budgets))
}

#[pymodule]
fn indecomp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Complex>()?;
    m.add_function(wrap_pyfunction!(independence_complex, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_independent_sets, m)?)?;
    m.add_function(wrap_pyfunction!(count_mis, m)?)?;
    m.add_function(wrap_pyfunction!(find_shelling, m)?)?;
    m.add_function(wrap_pyfunction!(is_shelling_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_vertex_decomposable, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_vertex_covers, m)?)?;
    m.add_function(wrap_pyfunction!(is_unmixed, m)?)?;
    m.add_function(wrap_pyfunction!(cohen_macaulay_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(multipartite_is_shellable, m)?)?;
    m.add_function(wrap_pyfunction!(multipartite_is_vertex_decomposable, m)?)?;
    m.add_function(wrap_pyfunction!(multipartite_is_unmixed, m)?)?;
    m.add_function(wrap_pyfunction!(multipartite_is_cm, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_shelling_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(cross_validate, m)?)?;
    Ok(())
}
