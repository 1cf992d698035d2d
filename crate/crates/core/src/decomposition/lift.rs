use crate::error::{Error, Result};
use crate::graph::{quotient, BlockSystem, Edge, Graph};
use crate::permgroup::{block_image, PermGroup};

use super::EdgePartition;

/// Lifts a decomposition of the imprimitive quotient `Γ_ℬ` back to `Γ`.
///
/// Each quotient part `Q` becomes `P_Q`, the set of edges of `graph` running
/// between blocks `B_i`, `B_j` with `{B_i, B_j} ∈ Q`. Requires every block
/// to be an independent set and invariant under `group`; the resulting
/// partition property is re-checked rather than assumed. Parts come back
/// ordered by least edge and keep the names of their quotient parts.
pub fn lift(
    graph: &Graph,
    blocks: &BlockSystem,
    quotient_partition: &EdgePartition,
    group: &PermGroup,
) -> Result<EdgePartition> {
    lift_with_origins(graph, blocks, quotient_partition, group).map(|(p, _)| p)
}

/// [`lift`], also returning for each lifted part the index of the quotient
/// part it came from.
pub fn lift_with_origins(
    graph: &Graph,
    blocks: &BlockSystem,
    quotient_partition: &EdgePartition,
    group: &PermGroup,
) -> Result<(EdgePartition, Vec<usize>)> {
    if blocks.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            left: graph.n(),
            right: blocks.degree(),
        });
    }
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            left: graph.n(),
            right: group.degree(),
        });
    }
    if let Some((block, edge)) = blocks.first_internal_edge(graph) {
        return Err(Error::AdjacentInBlock { block, edge });
    }
    for (gi, g) in group.generators().iter().enumerate() {
        if let Some(edge) = graph.broken_edge(g)? {
            return Err(Error::NotAutomorphism { generator: gi, edge });
        }
        block_image(blocks, g).map_err(|block| Error::NotInvariant { generator: gi, block })?;
    }
    let q = quotient(graph, blocks)?;
    if quotient_partition.graph() != &q {
        return Err(Error::input(
            "the quotient partition is not a partition of the quotient graph's edges",
        ));
    }

    let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); quotient_partition.len()];
    for &e in graph.edges() {
        let qe = Edge::new(blocks.block_of(e.u()), blocks.block_of(e.v()))
            .map_err(|_| Error::Internal(format!("edge {e} lies inside a block after the independence check")))?;
        let qi = quotient_partition
            .part_of(qe)
            .ok_or_else(|| Error::Internal(format!("crossing edge {e} projects to a non-edge {qe}")))?;
        parts[qi].push(e);
    }
    let lifted = EdgePartition::with_names(graph.clone(), parts, quotient_partition.names().to_vec())
        .map_err(|e| Error::Internal(format!("lifted parts do not partition the edges: {e}")))?;
    Ok(lifted.canonicalized())
}
