//! Finite simple undirected graphs with bitset adjacency.

use crate::error::{Error, Result};
use crate::limits;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no loops, symmetric adjacency, all neighbor ids below `n`.
/// Every constructor enforces them, so a `Graph` value is always valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds the simple graph with exactly the given edges; duplicate
    /// pairs (in either orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > limits::MAX_VERTICES {
            return Err(Error::limit(format!(
                "graph order {n} exceeds the supported maximum {}",
                limits::MAX_VERTICES
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::from_edges(n, &[])
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        let full = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = full.without(v);
        }
        Ok(g)
    }

    /// The complete multipartite graph of a partition: vertices are blocked
    /// consecutively by class, largest class first, and `(u, v)` is an edge
    /// exactly when `u` and `v` lie in different classes.
    pub fn complete_multipartite(p: &Partition) -> Result<Graph> {
        let n = p.total();
        if n > limits::MAX_VERTICES {
            return Err(Error::limit(format!(
                "graph order {n} exceeds the supported maximum {}",
                limits::MAX_VERTICES
            )));
        }
        let full = VertexSet::full(n);
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut start = 0;
        for &size in p.parts() {
            let block: VertexSet = (start..start + size).collect();
            for v in block.iter() {
                adj[v] = full - block;
            }
            start += size;
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as ascending `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complement graph: `(u, v)` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| (full - self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Recognizes complete multipartite graphs.
    ///
    /// Returns the class-size partition iff the graph is complete
    /// multipartite; the rule is that every connected component of the
    /// complement must be a clique, and the classes are the components.
    /// The class count is automatically the smallest possible `t`, since
    /// each class is a maximal independent set.
    pub fn detect_multipartite(&self) -> Result<Option<Partition>> {
        if self.n == 0 {
            return Err(Error::input(
                "multipartite detection needs at least one vertex",
            ));
        }
        let co = self.complement();
        let mut seen = VertexSet::EMPTY;
        let mut sizes = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            // flood-fill the component of v in the complement
            let mut component = VertexSet::singleton(v);
            let mut frontier = vec![v];
            while let Some(u) = frontier.pop() {
                for w in (co.adj[u] - component).iter() {
                    component.insert(w);
                    frontier.push(w);
                }
            }
            // the component must be a clique of the complement
            for u in component.iter() {
                if co.adj[u] & component != component.without(u) {
                    return Ok(None);
                }
            }
            seen = seen | component;
            sizes.push(component.len());
        }
        Ok(Some(Partition::new(sizes)?))
    }

    /// Exact chromatic number by backtracking: a greedy clique gives the
    /// lower bound, greedy coloring the upper bound, and each `k` between
    /// them is attempted in turn. Colors are assigned lowest-color-first on
    /// the lowest-index uncolored vertex.
    pub fn chromatic_number(&self) -> Result<usize> {
        self.chromatic_number_with_limit(limits::CHROMATIC_MAX_N)
    }

    /// [`chromatic_number`](Graph::chromatic_number) with an explicit
    /// vertex-count limit.
    pub fn chromatic_number_with_limit(&self, max_n: usize) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::input(
                "chromatic number is undefined on zero vertices",
            ));
        }
        if self.n > max_n {
            return Err(Error::limit(format!(
                "chromatic number limited to {max_n} vertices, got {}",
                self.n
            )));
        }
        let lower = self.greedy_clique_size();
        let upper = self.greedy_coloring_size();
        for k in lower..upper {
            if self.colorable(k) {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    /// Size of a clique grown greedily over vertices in descending degree
    /// order (ties by index); a lower bound for the chromatic number.
    fn greedy_clique_size(&self) -> usize {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut clique = VertexSet::EMPTY;
        for v in order {
            if clique.is_subset_of(&self.adj[v]) {
                clique.insert(v);
            }
        }
        clique.len()
    }

    /// Colors used by first-fit greedy coloring in vertex order; an upper
    /// bound for the chromatic number.
    fn greedy_coloring_size(&self) -> usize {
        let mut colors = vec![usize::MAX; self.n];
        let mut used = 0;
        for v in 0..self.n {
            let mut taken = 0u32;
            for u in self.adj[v].iter() {
                if u < v {
                    taken |= 1 << colors[u];
                }
            }
            let c = taken.trailing_ones() as usize;
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn colorable(&self, k: usize) -> bool {
        if k == 0 {
            return self.n == 0;
        }
        let mut colors = vec![usize::MAX; self.n];
        self.color_rec(&mut colors, k, 0, 0)
    }

    fn color_rec(&self, colors: &mut [usize], k: usize, v: usize, used: usize) -> bool {
        if v == self.n {
            return true;
        }
        // allowing at most one brand-new color prunes color permutations
        let cap = k.min(used + 1);
        for c in 0..cap {
            if self.adj[v].iter().any(|u| u < v && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if self.color_rec(colors, k, v + 1, used.max(c + 1)) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Parses the graph text format: `#` starts a comment, blank lines are
    /// ignored, the first data line is the vertex count, and every further
    /// data line is an edge `u v` of 0-based ids.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            if n.is_none() {
                n = Some(line.parse().map_err(|_| {
                    Error::input(format!(
                        "line {lineno}: expected a vertex count, got {line:?}"
                    ))
                })?);
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => {
                    let u = a
                        .parse()
                        .map_err(|_| Error::input(format!("line {lineno}: bad vertex id {a:?}")))?;
                    let v = b
                        .parse()
                        .map_err(|_| Error::input(format!("line {lineno}: bad vertex id {b:?}")))?;
                    (u, v)
                }
                _ => {
                    return Err(Error::input(format!(
                        "line {lineno}: expected \"u v\", got {line:?}"
                    )))
                }
            };
            edges.push((u, v));
        }
        match n {
            Some(n) => Graph::from_edges(n, &edges),
            None => Err(Error::input("graph text has no data lines")),
        }
    }

    /// Renders the graph text format with edges in ascending order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_builds_c4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn from_edges_accepts_empty_and_collapses_duplicates() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        let k2 = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
        assert!(Graph::from_edges(0, &[]).is_ok());
    }

    #[test]
    fn complete_multipartite_edge_counts() {
        let k23 = Graph::complete_multipartite(&Partition::new([2, 3]).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        let k311 = Graph::complete_multipartite(&Partition::new([3, 1, 1]).unwrap()).unwrap();
        assert_eq!(k311.edge_count(), 7);
        let k3 = Graph::complete_multipartite(&Partition::new([1, 1, 1]).unwrap()).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());
    }

    #[test]
    fn complete_multipartite_blocks_descend() {
        // K_{2,3}: stored as [3,2], so vertices 0..3 form the large class
        let g = Graph::complete_multipartite(&Partition::new([2, 3]).unwrap()).unwrap();
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(3, 4));
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::edgeless(3).unwrap());
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let c4 = cycle(4);
        assert_eq!(
            c4.complement(),
            Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap()
        );
    }

    #[test]
    fn detect_multipartite_examples() {
        let c4 = cycle(4);
        assert_eq!(
            c4.detect_multipartite().unwrap(),
            Some(Partition::new([2, 2]).unwrap())
        );
        let p3 = path(3);
        assert_eq!(
            p3.detect_multipartite().unwrap(),
            Some(Partition::new([2, 1]).unwrap())
        );
        let p4 = path(4);
        assert_eq!(p4.detect_multipartite().unwrap(), None);
        assert!(matches!(
            Graph::edgeless(0).unwrap().detect_multipartite(),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn detect_multipartite_edgeless_is_single_class() {
        let g = Graph::edgeless(4).unwrap();
        assert_eq!(
            g.detect_multipartite().unwrap(),
            Some(Partition::new([4]).unwrap())
        );
    }

    #[test]
    fn chromatic_number_examples() {
        let k23 = Graph::complete_multipartite(&Partition::new([2, 3]).unwrap()).unwrap();
        assert_eq!(k23.chromatic_number().unwrap(), 2);
        assert_eq!(cycle(5).chromatic_number().unwrap(), 3);
        assert_eq!(Graph::edgeless(4).unwrap().chromatic_number().unwrap(), 1);
    }

    #[test]
    fn chromatic_number_rejects_out_of_bounds() {
        assert!(matches!(
            Graph::edgeless(0).unwrap().chromatic_number(),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::edgeless(17).unwrap().chromatic_number(),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn chromatic_number_of_complete_graphs() {
        for n in 1..=8 {
            assert_eq!(Graph::complete(n).unwrap().chromatic_number().unwrap(), n);
        }
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a square\n4\n0 1\n1 2\n2 3\n3 0  # closing edge\n\n";
        let g = Graph::from_text(text).unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(g.to_text(), "4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn text_format_rejects_garbage() {
        assert!(Graph::from_text("").is_err());
        assert!(Graph::from_text("# only comments\n").is_err());
        assert!(Graph::from_text("three\n").is_err());
        assert!(Graph::from_text("3\n0 1 2\n").is_err());
        assert!(Graph::from_text("3\n0\n").is_err());
        assert!(Graph::from_text("2\n0 2\n").is_err());
    }
}
