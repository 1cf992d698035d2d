//! Backtracking automorphism and isomorphism search.
//!
//! Vertices are assigned one at a time; a candidate image must be unused,
//! have the same degree, and agree on adjacency with every vertex assigned
//! before it. That is all the pruning there is, which is plenty for graphs of
//! a few dozen vertices with small automorphism groups.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::permgroup::{greedy_generators, PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub max_elements: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 32,
            max_elements: DEFAULT_CLOSURE_CAP,
        }
    }
}

struct AdjMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjMatrix {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut bits = vec![false; n * n];
        for e in g.edges() {
            bits[e.u() * n + e.v()] = true;
            bits[e.v() * n + e.u()] = true;
        }
        AdjMatrix { n, bits }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }
}

fn check_bound(g: &Graph, limits: &SearchLimits) -> Result<()> {
    if g.n() > limits.max_vertices {
        return Err(Error::Resource {
            what: "vertex count for backtracking search",
            limit: limits.max_vertices,
        });
    }
    Ok(())
}

/// Breadth-first vertex order, component by component, so that most vertices
/// are adjacent to one already placed.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    source: &'a Graph,
    target: &'a Graph,
    adj_s: AdjMatrix,
    adj_t: AdjMatrix,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(source: &'a Graph, target: &'a Graph, order: Vec<usize>) -> Self {
        Matcher {
            source,
            target,
            adj_s: AdjMatrix::new(source),
            adj_t: AdjMatrix::new(target),
            order,
            image: vec![usize::MAX; source.n()],
            used: vec![false; target.n()],
        }
    }

    fn feasible(&self, depth: usize, v: usize, w: usize) -> bool {
        if self.used[w] || self.source.degree(v) != self.target.degree(w) {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&u| self.adj_s.get(v, u) == self.adj_t.get(w, self.image[u]))
    }

    /// Calls `visit` on each complete map; stops early when it returns `false`.
    fn search<F>(&mut self, depth: usize, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> Result<bool>,
    {
        if depth == self.order.len() {
            return visit(&self.image);
        }
        let v = self.order[depth];
        for w in 0..self.target.n() {
            if !self.feasible(depth, v, w) {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let keep_going = self.search(depth + 1, visit)?;
            self.used[w] = false;
            self.image[v] = usize::MAX;
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Full automorphism group with default limits.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, &SearchLimits::default())
}

/// Enumerates every automorphism, re-checks each one, and attaches a small
/// generating set picked greedily from the sorted element list.
pub fn automorphism_group_with(g: &Graph, limits: &SearchLimits) -> Result<PermGroup> {
    check_bound(g, limits)?;
    let mut found = Vec::new();
    let mut matcher = Matcher::new(g, g, bfs_order(g));
    matcher.search(0, &mut |image| {
        if found.len() >= limits.max_elements {
            return Err(Error::Resource {
                what: "automorphism count",
                limit: limits.max_elements,
            });
        }
        found.push(Permutation::new(image.to_vec()).expect("search yields bijections"));
        Ok(true)
    })?;
    found.sort_unstable();
    for p in &found {
        if !g.is_automorphism(p)? {
            return Err(Error::Internal(format!("search produced non-automorphism {p}")));
        }
    }
    let generators = greedy_generators(&found, g.n(), limits.max_elements)?;
    PermGroup::from_parts(generators, found)
}

/// Lexicographically least isomorphism with default limits.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    isomorphism_with(g1, g2, &SearchLimits::default())
}

/// The lexicographically least vertex bijection `φ` (as an image array) with
/// `{u,v} ∈ E(g1) ⇔ {φ(u),φ(v)} ∈ E(g2)`, if any.
pub fn isomorphism_with(g1: &Graph, g2: &Graph, limits: &SearchLimits) -> Result<Option<Permutation>> {
    check_bound(g1, limits)?;
    check_bound(g2, limits)?;
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g1) != degrees(g2) {
        return Ok(None);
    }
    let mut result = None;
    let mut matcher = Matcher::new(g1, g2, (0..g1.n()).collect());
    matcher.search(0, &mut |image| {
        result = Some(Permutation::new(image.to_vec()).expect("search yields bijections"));
        Ok(false)
    })?;
    Ok(result)
}
