//! Finite simple undirected graphs.

mod constructions;
mod quotient;
mod search;

use std::fmt;

pub use constructions::{
    complete_graph, cycle_graph, generalized_petersen, kneser_petersen, path_graph, petersen_pair_labels,
};
pub use quotient::{antipodal_blocks_gp10_2, quotient, BlockSystem};
pub use search::{automorphism_group, automorphism_group_with, isomorphism, isomorphism_with, SearchLimits};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// An unordered edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Canonical edge on two distinct endpoints.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::input(format!("loop at vertex {a}"))),
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// Image under a vertex permutation.
    pub fn map(self, p: &Permutation) -> Edge {
        let (x, y) = (p.apply(self.0), p.apply(self.1));
        if x < y {
            Edge(x, y)
        } else {
            Edge(y, x)
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A simple graph on vertices `0..n`.
///
/// Edges are kept sorted; labels are for display only and do not take part
/// in equality.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::input(format!("edge ({a},{b}) has an endpoint outside 0..{n}")));
            }
            list.push(Edge::new(a, b)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate edge {}", w[0])));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be canonical, in range, sorted and distinct.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for e in &edges {
            neighbors[e.0].push(e.1);
            neighbors[e.1].push(e.0);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::input(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.neighbors[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// First edge whose image under `p` is not an edge.
    pub fn broken_edge(&self, p: &Permutation) -> Result<Option<Edge>> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: p.degree(),
            });
        }
        Ok(self.edges.iter().copied().find(|e| !self.contains_edge(e.map(p))))
    }

    /// True iff `p` maps every edge onto an edge.
    pub fn is_automorphism(&self, p: &Permutation) -> Result<bool> {
        Ok(self.broken_edge(p)?.is_none())
    }

    /// Renders the graph in DOT, with an optional colour per edge.
    pub fn to_dot<F>(&self, mut edge_color: F) -> String
    where
        F: FnMut(Edge) -> Option<String>,
    {
        use std::fmt::Write;
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            match &self.labels {
                Some(labels) => writeln!(out, "  {v} [label=\"{}\"];", labels[v].replace('"', "\\\"")).unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for &e in &self.edges {
            match edge_color(e) {
                Some(c) => writeln!(out, "  {} -- {} [color=\"{c}\"];", e.0, e.1).unwrap(),
                None => writeln!(out, "  {} -- {};", e.0, e.1).unwrap(),
            }
        }
        out.push_str("}\n");
        out
    }
}
