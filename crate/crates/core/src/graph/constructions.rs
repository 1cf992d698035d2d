use crate::error::{Error, Result};

use super::{Edge, Graph};

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("complete graph needs at least one vertex"));
    }
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge(a, b))).collect();
    Ok(Graph::from_sorted(n, edges))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("path needs at least one vertex"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `GP(n, k)`: outer vertices `a_i = i`, inner vertices `b_i = n + i`, with
/// edges `a_i a_{i+1}`, `a_i b_i` and `b_i b_{i+k}` (indices mod `n`).
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::input(format!(
            "GP(n,k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::new(2 * n, edges)
}

/// The 2-subsets of `{1..5}` in lexicographic order.
pub fn petersen_pair_labels() -> Vec<(usize, usize)> {
    (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect()
}

/// Petersen graph on the 2-subsets of `{1..5}`, adjacent when disjoint.
/// Vertex `i` carries the `i`-th pair of [`petersen_pair_labels`].
pub fn kneser_petersen() -> Graph {
    let pairs = petersen_pair_labels();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push(Edge(i, j));
            }
        }
    }
    let labels = pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
    Graph::from_sorted(pairs.len(), edges)
        .with_labels(labels)
        .expect("one label per pair")
}
