use crate::error::{Error, Result};
use crate::permgroup::Permutation;

use super::{Edge, Graph};

/// A partition of `{0..n-1}` into nonempty blocks. Block order is kept as
/// given; points inside a block are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockSystem {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (bi, mut block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::input(format!("block {bi} is empty")));
            }
            block.sort_unstable();
            for &v in &block {
                if v >= n {
                    return Err(Error::input(format!(
                        "block {bi} contains {v}, but the blocks cover only {n} points"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::input(format!("point {v} lies in blocks {} and {bi}", block_of[v])));
                }
                block_of[v] = bi;
            }
            sorted.push(block);
        }
        Ok(BlockSystem {
            blocks: sorted,
            block_of,
        })
    }

    pub fn singletons(n: usize) -> Self {
        BlockSystem {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// Number of points partitioned.
    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// Index of the block `g(B)` when it is one, `None` otherwise.
    pub fn image_of_block(&self, b: usize, g: &Permutation) -> Option<usize> {
        let block = &self.blocks[b];
        let target = self.block_of[g.apply(block[0])];
        let whole = self.blocks[target].len() == block.len()
            && block.iter().all(|&v| self.block_of[g.apply(v)] == target);
        whole.then_some(target)
    }

    /// Checks that every block is an independent set of `graph`.
    pub fn first_internal_edge(&self, graph: &Graph) -> Option<(usize, Edge)> {
        graph
            .edges()
            .iter()
            .find(|e| self.block_of[e.u()] == self.block_of[e.v()])
            .map(|&e| (self.block_of[e.u()], e))
    }
}

/// The imprimitive quotient: block `i` becomes vertex `i`, and blocks are
/// adjacent when some edge crosses between them. Edges inside a block are
/// dropped.
pub fn quotient(graph: &Graph, blocks: &BlockSystem) -> Result<Graph> {
    if blocks.degree() != graph.n() {
        return Err(Error::input(format!(
            "block system covers {} points but the graph has {} vertices",
            blocks.degree(),
            graph.n()
        )));
    }
    let mut edges: Vec<Edge> = graph
        .edges()
        .iter()
        .filter_map(|e| Edge::new(blocks.block_of(e.u()), blocks.block_of(e.v())).ok())
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_sorted(blocks.len(), edges))
}

/// Antipodal pairs of `GP(10,2)`: blocks `{a_i, a_{i+5}}` for `i < 5`, then
/// `{b_i, b_{i+5}}`.
pub fn antipodal_blocks_gp10_2() -> BlockSystem {
    let outer = (0..5).map(|i| vec![i, i + 5]);
    let inner = (0..5).map(|i| vec![10 + i, 15 + i]);
    BlockSystem::new(outer.chain(inner).collect()).expect("antipodal pairs partition 0..20")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_group, complete_graph, cycle_graph, generalized_petersen, isomorphism};

    #[test]
    fn block_system_validation() {
        assert!(BlockSystem::new(vec![vec![0, 1], vec![]]).is_err());
        assert!(BlockSystem::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(BlockSystem::new(vec![vec![0, 3], vec![1]]).is_err());
        let b = BlockSystem::new(vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(b.block(0), &[0, 2]);
        assert_eq!(b.block_of(1), 1);
    }

    #[test]
    fn hexagon_mod_antipodes_is_triangle() {
        let c6 = cycle_graph(6).unwrap();
        let blocks = BlockSystem::new(vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(quotient(&c6, &blocks).unwrap(), complete_graph(3).unwrap());
    }

    #[test]
    fn singleton_quotient_is_identity() {
        let g = generalized_petersen(5, 2).unwrap();
        assert_eq!(quotient(&g, &BlockSystem::singletons(10)).unwrap(), g);
    }

    #[test]
    fn within_block_edges_vanish() {
        let k3 = complete_graph(3).unwrap();
        let blocks = BlockSystem::new(vec![vec![0, 1], vec![2]]).unwrap();
        let q = quotient(&k3, &blocks).unwrap();
        assert_eq!(q.edge_count(), 1);
        assert_eq!(blocks.first_internal_edge(&k3), Some((0, Edge::new(0, 1).unwrap())));
    }

    #[test]
    fn quotient_rejects_mismatched_blocks() {
        assert!(quotient(&complete_graph(4).unwrap(), &BlockSystem::singletons(3)).is_err());
    }

    #[test]
    fn antipodal_blocks_shape() {
        let blocks = antipodal_blocks_gp10_2();
        assert_eq!(blocks.len(), 10);
        assert!(blocks.blocks().iter().all(|b| b.len() == 2));
        assert_eq!(blocks.block(blocks.block_of(0)), &[0, 5]);
        let g = generalized_petersen(10, 2).unwrap();
        assert_eq!(blocks.first_internal_edge(&g), None);
    }

    #[test]
    fn antipodal_map_is_a_central_fixed_point_free_automorphism() {
        let g = generalized_petersen(10, 2).unwrap();
        let images = (0..20).map(|v| if v < 10 { (v + 5) % 10 } else { 10 + (v + 5) % 10 }).collect();
        let antipode = Permutation::new(images).unwrap();
        assert!(g.is_automorphism(&antipode).unwrap());
        assert!((0..20).all(|v| antipode.apply(v) != v));
        let aut = automorphism_group(&g).unwrap();
        for p in aut.elements().unwrap() {
            assert_eq!(p.then(&antipode).unwrap(), antipode.then(p).unwrap());
        }
        let blocks = antipodal_blocks_gp10_2();
        for p in aut.elements().unwrap() {
            assert!((0..10).all(|b| blocks.image_of_block(b, p).is_some()));
        }
    }

    #[test]
    fn dodecahedron_quotient_is_petersen() {
        let g = generalized_petersen(10, 2).unwrap();
        let q = quotient(&g, &antipodal_blocks_gp10_2()).unwrap();
        assert_eq!((q.n(), q.edge_count()), (10, 15));
        assert!(isomorphism(&q, &crate::graph::kneser_petersen()).unwrap().is_some());
    }
}
