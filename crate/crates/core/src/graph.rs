//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Vertex identifier.
pub type Vertex = usize;

/// A simple undirected graph with sorted neighbor lists.
///
/// Values are immutable once built; every constructor checks the
/// no-loop / no-duplicate / symmetric invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Graph { adj, edges: m })
    }

    /// Edge-list constructor for generators whose output is known to be
    /// simple. Panics on malformed input.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges(n, edges).expect("generator produced a non-simple graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Maximum degree, `None` for the graph with no vertices.
    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Checks symmetry, absence of loops and sortedness of every list.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut half = 0;
        for (v, list) in self.adj.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(Error::SelfLoop(v));
                }
                if i > 0 && list[i - 1] >= u {
                    return Err(Error::DuplicateEdge(v.min(u), v.max(u)));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::Asymmetric(v, u));
                }
            }
            half += list.len();
        }
        debug_assert_eq!(half, 2 * self.edges);
        Ok(())
    }

    /// Induced subgraph on `V \ removed`, relabeled densely.
    pub fn delete_vertices(&self, removed: &[Vertex]) -> Result<Induced> {
        let n = self.n();
        let mut keep = vec![true; n];
        for &v in removed {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            keep[v] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// Induced subgraph on the vertices flagged in `keep`.
    pub fn induced_by_mask(&self, keep: &[bool]) -> Induced {
        let mut new_id = vec![usize::MAX; self.n()];
        let mut original = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            new_id[v] = original.len();
            original.push(v);
        }
        let mut edges = 0;
        let adj: Vec<Vec<Vertex>> = original
            .iter()
            .map(|&v| {
                let list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter(|&&u| keep[u])
                    .map(|&u| new_id[u])
                    .collect();
                edges += list.len();
                list
            })
            .collect();
        Induced {
            graph: Graph {
                adj,
                edges: edges / 2,
            },
            original,
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph is a forest iff `e = n - c`.
    pub fn is_forest(&self) -> bool {
        self.edges + self.components().len() == self.n()
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect()),
        );
        Graph {
            adj,
            edges: self.edges + other.edges,
        }
    }
}

/// An induced subgraph with a map back to the parent's vertex ids.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `original[i]` is the parent id of vertex `i`.
    pub original: Vec<Vertex>,
}

/// Degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeView {
    pub degrees: Vec<usize>,
    /// Non-increasing degree sequence.
    pub sorted: Vec<usize>,
    /// Largest degree; `None` when the graph has no vertices.
    pub d1: Option<usize>,
    /// Second largest degree; `None` when the graph has fewer than two vertices.
    pub d2: Option<usize>,
}

impl DegreeView {
    pub fn new(g: &Graph) -> Self {
        let degrees = g.degrees();
        let mut sorted = degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let d1 = sorted.first().copied();
        let d2 = sorted.get(1).copied();
        DegreeView {
            degrees,
            sorted,
            d1,
            d2,
        }
    }

    /// `d1 - d2`, defined for graphs with at least two vertices.
    pub fn diff(&self) -> Option<usize> {
        Some(self.d1? - self.d2?)
    }

    /// Vertices attaining the maximum degree, ascending.
    pub fn max_vertices(&self) -> Vec<Vertex> {
        match self.d1 {
            None => Vec::new(),
            Some(d1) => (0..self.degrees.len())
                .filter(|&v| self.degrees[v] == d1)
                .collect(),
        }
    }
}

/// Shorthand for [`DegreeView::new`].
pub fn degree_view(g: &Graph) -> DegreeView {
    DegreeView::new(g)
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::{Graph, Vertex};

    pub fn path(n: usize) -> Graph {
        Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges_unchecked(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges_unchecked(n, edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges_unchecked(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Double star: adjacent centers 0 and 1 of degrees `a` and `b`.
    pub fn double_star(a: usize, b: usize) -> Graph {
        assert!(a >= 1 && b >= 1);
        let n = a + b;
        let mut edges = vec![(0, 1)];
        edges.extend((0..a - 1).map(|i| (0, 2 + i)));
        edges.extend((0..b - 1).map(|i| (1, 1 + a + i)));
        Graph::from_edges_unchecked(n, edges)
    }

    /// `copies` disjoint copies of `g`.
    pub fn copies(g: &Graph, copies: usize) -> Graph {
        (0..copies).fold(Graph::empty(0), |acc, _| acc.disjoint_union(g))
    }

    /// Disjoint union of several graphs, in order.
    pub fn union<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Graph {
        parts
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }
}
