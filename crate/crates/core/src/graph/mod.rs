//! Simple undirected graphs with bitset adjacency, the two cozero-divisor
//! graph builders, and the structural algorithms used by the genus engine.

mod blocks;
mod build;
mod iso;
mod search;
mod witness;

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use blocks::{blocks, blocks_with_vertices, Block};
pub use build::{cozero_divisor_graph, quotient_by_principal_ideal, reduced_cozero_divisor_graph};
pub use iso::graph_isomorphic;
pub use search::{find_biclique, find_clique, girth, is_complete_bipartite, max_clique, BicliqueSearch};
pub use witness::{find_biclique_subdivision, verify_subdivision_witness, Pattern, SubdivisionWitness};

/// Vertex index into a [`SimpleGraph`].
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("cannot parse graph: {0}")]
    Parse(String),
}

/// Labelled simple graph. Adjacency rows are bitsets; the matrix is kept
/// symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimpleGraph(v={}, e={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    labels: Vec<String>,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Edgeless graph with the given labels.
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Edgeless graph labelled `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// `K_{m,n}` with the `m` side first.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = Self::with_vertices(m + n);
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`, in the given order; labels are kept.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph, GraphError> {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check(v)?;
            if pos[v] != usize::MAX {
                return Err(GraphError::InvalidVertex(v));
            }
            pos[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].ones() {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.add_edge(i, pos[w]).unwrap();
                }
            }
        }
        Ok(g)
    }

    /// Graphviz rendering, vertices in index order.
    pub fn export_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  {i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    /// `{"labels": [...], "edges": [[u, v], ...]}`.
    pub fn export_json(&self) -> String {
        let doc = GraphJson {
            labels: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serialises")
    }

    pub fn parse_json(text: &str) -> Result<SimpleGraph, GraphError> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        let mut g = SimpleGraph::new(doc.labels);
        for [u, v] in doc.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(SimpleGraph::cycle(5).edge_count(), 5);
        assert_eq!(SimpleGraph::path(4).edge_count(), 3);
        let mut g = SimpleGraph::with_vertices(2);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 2), Err(GraphError::InvalidVertex(2)));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), k4);
        assert_eq!(k4.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        let k3 = k4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.labels(), &["1", "2", "3"]);
        assert!(k4.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn exports() {
        let k2 = SimpleGraph::complete(2);
        let dot = k2.export_dot();
        assert!(dot.contains("0 -- 1;"));
        assert_eq!(dot.matches("label=").count(), 2);
        assert_eq!(SimpleGraph::with_vertices(0).export_dot(), "graph G {\n}\n");
        let json = k2.export_json();
        let back = SimpleGraph::parse_json(&json).unwrap();
        assert_eq!(back, k2);
        assert!(SimpleGraph::parse_json("{\"labels\":[\"a\"],\"edges\":[[0,0]]}").is_err());
        assert!(SimpleGraph::parse_json("nope").is_err());
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
    }
}
