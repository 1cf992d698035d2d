//! Edge partitions and transitive decompositions.

mod lift;
mod petersen;
mod verify;

use std::collections::BTreeSet;

pub use lift::{lift, lift_with_origins};
pub use petersen::{a5_on_five_points, a5_on_kneser_petersen, petersen_qa_part, petersen_qa_partition};
pub use verify::{part_action, verify, PartActionWitness, PartImage, VerificationReport, Witness};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::permgroup::{Action, Permutation};

/// A partition of a graph's edge set into nonempty, optionally named parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    graph: Graph,
    parts: Vec<Vec<Edge>>,
    names: Vec<Option<String>>,
    /// Part index of each edge, indexed like `graph.edges()`.
    part_of: Vec<usize>,
}

impl EdgePartition {
    /// Validates that `parts` cover every edge of `graph` exactly once.
    pub fn new(graph: Graph, parts: Vec<Vec<Edge>>) -> Result<Self> {
        let names = vec![None; parts.len()];
        Self::with_names(graph, parts, names)
    }

    pub fn with_names(graph: Graph, parts: Vec<Vec<Edge>>, names: Vec<Option<String>>) -> Result<Self> {
        if names.len() != parts.len() {
            return Err(Error::input(format!("{} names for {} parts", names.len(), parts.len())));
        }
        let mut part_of = vec![usize::MAX; graph.edge_count()];
        let mut sorted_parts = Vec::with_capacity(parts.len());
        for (pi, mut part) in parts.into_iter().enumerate() {
            if part.is_empty() {
                return Err(Error::input(format!("part {pi} is empty")));
            }
            part.sort_unstable();
            for &e in &part {
                let idx = graph
                    .edge_index(e)
                    .ok_or_else(|| Error::input(format!("part {pi} contains {e}, which is not an edge of the graph")))?;
                if part_of[idx] != usize::MAX {
                    return Err(Error::input(format!("edge {e} lies in parts {} and {pi}", part_of[idx])));
                }
                part_of[idx] = pi;
            }
            sorted_parts.push(part);
        }
        if let Some(idx) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::input(format!("edge {} lies in no part", graph.edges()[idx])));
        }
        Ok(EdgePartition {
            graph,
            parts: sorted_parts,
            names,
            part_of,
        })
    }

    /// Convenience constructor from raw vertex pairs.
    pub fn from_pairs(graph: Graph, parts: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let parts = parts
            .into_iter()
            .map(|p| p.into_iter().map(|(a, b)| Edge::new(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, parts)
    }

    /// The single-part partition; `None` for an edgeless graph.
    pub fn single_part(graph: Graph) -> Option<Self> {
        let edges = graph.edges().to_vec();
        (!edges.is_empty()).then(|| Self::new(graph, vec![edges]).expect("all edges form one part"))
    }

    /// Reorders parts by their least edge. Returns the new partition and, for
    /// each new position, the old index.
    pub fn canonicalized(self) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_by_key(|&i| self.parts[i][0]);
        let parts = order.iter().map(|&i| self.parts[i].clone()).collect();
        let names = order.iter().map(|&i| self.names[i].clone()).collect();
        let partition = EdgePartition::with_names(self.graph, parts, names).expect("reordering keeps a partition");
        (partition, order)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parts(&self) -> &[Vec<Edge>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[Edge] {
        &self.parts[i]
    }

    pub fn name(&self, i: usize) -> Option<&str> {
        self.names[i].as_deref()
    }

    pub fn names(&self) -> &[Option<String>] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of the part containing `e`, if `e` is an edge.
    pub fn part_of(&self, e: Edge) -> Option<usize> {
        self.graph.edge_index(e).map(|i| self.part_of[i])
    }

    /// Vertices incident with some edge of part `i`, sorted.
    pub fn part_vertices(&self, i: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.parts[i].iter().flat_map(|e| e.endpoints()).collect();
        set.into_iter().collect()
    }

    /// Largest vertex degree in the subgraph formed by part `i`.
    pub fn part_valency(&self, i: usize) -> usize {
        let mut deg = vec![0usize; self.graph.n()];
        for e in &self.parts[i] {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn max_valency(&self) -> usize {
        (0..self.parts.len()).map(|i| self.part_valency(i)).max().unwrap_or(0)
    }

    /// Index of the part `g(P_i)` when that is exactly a part.
    pub fn image_of_part(&self, i: usize, g: &Permutation) -> Option<usize> {
        let part = &self.parts[i];
        let target = self.part_of(part[0].map(g))?;
        let whole =
            self.parts[target].len() == part.len() && part.iter().all(|e| self.part_of(e.map(g)) == Some(target));
        whole.then_some(target)
    }

    /// First missing edge of part `i`'s vertex set, when its subgraph is not complete.
    pub fn missing_clique_edge(&self, i: usize) -> Option<Edge> {
        let vertices = self.part_vertices(i);
        let part = &self.parts[i];
        for (k, &a) in vertices.iter().enumerate() {
            for &b in &vertices[k + 1..] {
                let e = Edge::new(a, b).expect("distinct vertices");
                if part.binary_search(&e).is_err() {
                    return Some(e);
                }
            }
        }
        None
    }
}

/// True iff every part is a matching.
pub fn is_one_decomposition(partition: &EdgePartition) -> bool {
    (0..partition.len()).all(|i| partition.part_valency(i) <= 1)
}

/// Action on the part indices of a partition; undefined where a part is split.
#[derive(Clone, Copy, Debug)]
pub struct OnParts<'a>(pub &'a EdgePartition);

impl Action for OnParts<'_> {
    type Item = usize;

    fn degree(&self) -> usize {
        self.0.graph().n()
    }

    fn contains(&self, item: &usize) -> bool {
        *item < self.0.len()
    }

    fn act(&self, item: &usize, g: &Permutation) -> Option<usize> {
        self.0.image_of_part(*item, g)
    }
}
