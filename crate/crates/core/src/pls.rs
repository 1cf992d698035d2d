//! Partial linear spaces and their correspondence with transitive
//! decompositions into complete subgraphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::decomposition::{verify, EdgePartition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::permgroup::{orbit, OnPoints, PermGroup, Permutation};

/// Points `0..points` and a list of lines, each a sorted set of at least two
/// points, with no pair of points on two lines. Lines are kept in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialLinearSpace {
    points: usize,
    lines: Vec<Vec<usize>>,
}

/// Why a point/line configuration is not a partial linear space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlsViolation {
    TooFewLines { count: usize },
    ShortLine { line: usize },
    PointOutOfRange { line: usize, point: usize },
    SharedPair { pair: [usize; 2], lines: [usize; 2] },
}

impl std::fmt::Display for PlsViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlsViolation::TooFewLines { count } => write!(f, "{count} line(s); at least two are required"),
            PlsViolation::ShortLine { line } => write!(f, "line {line} has fewer than two points"),
            PlsViolation::PointOutOfRange { line, point } => write!(f, "line {line} contains out-of-range point {point}"),
            PlsViolation::SharedPair { pair, lines } => write!(
                f,
                "points {} and {} lie on lines {} and {}",
                pair[0], pair[1], lines[0], lines[1]
            ),
        }
    }
}

/// Checks the partial-linear-space axioms; lines are read as sets.
pub fn is_partial_linear_space(points: usize, lines: &[Vec<usize>]) -> Result<(), PlsViolation> {
    if lines.len() < 2 {
        return Err(PlsViolation::TooFewLines { count: lines.len() });
    }
    let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (li, line) in lines.iter().enumerate() {
        let set: BTreeSet<usize> = line.iter().copied().collect();
        if let Some(&point) = set.iter().find(|&&p| p >= points) {
            return Err(PlsViolation::PointOutOfRange { line: li, point });
        }
        if set.len() < 2 {
            return Err(PlsViolation::ShortLine { line: li });
        }
        let pts: Vec<usize> = set.into_iter().collect();
        for (k, &a) in pts.iter().enumerate() {
            for &b in &pts[k + 1..] {
                if let Some(&other) = owner.get(&(a, b)) {
                    return Err(PlsViolation::SharedPair {
                        pair: [a, b],
                        lines: [other, li],
                    });
                }
                owner.insert((a, b), li);
            }
        }
    }
    Ok(())
}

impl PartialLinearSpace {
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        is_partial_linear_space(points, &lines).map_err(|v| Error::input(format!("not a partial linear space: {v}")))?;
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|l| l.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        lines.sort();
        Ok(PartialLinearSpace { points, lines })
    }

    /// The Fano plane: lines `{i, i+1, i+3} mod 7`.
    pub fn fano_plane() -> Self {
        let lines = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        Self::new(7, lines).expect("the Fano plane is a partial linear space")
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    fn line_index(&self, line: &[usize]) -> Option<usize> {
        self.lines.binary_search_by(|l| l.as_slice().cmp(line)).ok()
    }

    fn image_of_line(&self, li: usize, g: &Permutation) -> Option<usize> {
        let mut image: Vec<usize> = self.lines[li].iter().map(|&p| g.apply(p)).collect();
        image.sort_unstable();
        self.line_index(&image)
    }
}

/// `x ↦ x+1` and `x ↦ 2x` on `Z/7`, a line-transitive group of the Fano plane.
pub fn fano_group() -> PermGroup {
    let shift = Permutation::new((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
    let double = Permutation::new((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
    PermGroup::new(vec![shift, double]).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineTransitivity {
    Transitive,
    /// Generator `generator` maps line `line` onto a non-line.
    NotPreserved { generator: usize, line: usize },
    /// Line `line` is not in the orbit of line 0.
    NotTransitive { line: usize },
}

impl LineTransitivity {
    pub fn holds(&self) -> bool {
        matches!(self, LineTransitivity::Transitive)
    }
}

/// Whether `group` preserves the lines and permutes them transitively.
pub fn is_line_transitive(space: &PartialLinearSpace, group: &PermGroup) -> Result<LineTransitivity> {
    if group.degree() != space.points {
        return Err(Error::DegreeMismatch {
            left: space.points,
            right: group.degree(),
        });
    }
    let mut induced = Vec::new();
    for (gi, g) in group.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(space.lines.len());
        for li in 0..space.lines.len() {
            match space.image_of_line(li, g) {
                Some(t) => images.push(t),
                None => return Ok(LineTransitivity::NotPreserved { generator: gi, line: li }),
            }
        }
        induced.push(Permutation::new(images).map_err(|e| Error::Internal(e.to_string()))?);
    }
    let reached = orbit(&PermGroup::new(induced)?, &OnPoints(space.lines.len()), 0)?;
    Ok(match (0..space.lines.len()).find(|l| !reached.contains(l)) {
        Some(line) => LineTransitivity::NotTransitive { line },
        None => LineTransitivity::Transitive,
    })
}

/// The graph of collinear pairs with one complete part per line.
pub fn to_decomposition(space: &PartialLinearSpace) -> Result<(Graph, EdgePartition)> {
    let mut edges = Vec::new();
    let mut parts = Vec::with_capacity(space.lines.len());
    for line in &space.lines {
        let mut part = Vec::new();
        for (k, &a) in line.iter().enumerate() {
            for &b in &line[k + 1..] {
                part.push(Edge::new(a, b)?);
                edges.push((a, b));
            }
        }
        parts.push(part);
    }
    let graph = Graph::new(space.points, edges)
        .map_err(|e| Error::Internal(format!("lines of a partial linear space share a pair: {e}")))?;
    let partition = EdgePartition::new(graph.clone(), parts)
        .map_err(|e| Error::Internal(format!("line parts do not partition the edges: {e}")))?;
    if let Some(i) = (0..partition.len()).find(|&i| partition.missing_clique_edge(i).is_some()) {
        return Err(Error::Internal(format!("line part {i} is not complete")));
    }
    Ok((graph, partition))
}

/// Reads a partial linear space off a `G`-transitive decomposition whose
/// parts are complete subgraphs; lines are the parts' vertex sets.
pub fn from_decomposition(partition: &EdgePartition, group: &PermGroup) -> Result<PartialLinearSpace> {
    let report = verify(partition, group)?;
    if !report.passes() {
        return Err(Error::Hypothesis(format!(
            "the partition is not a G-transitive decomposition for the given group:\n{report}"
        )));
    }
    for i in 0..partition.len() {
        if let Some(missing) = partition.missing_clique_edge(i) {
            return Err(Error::IncompletePart { part: i, missing });
        }
    }
    let lines = (0..partition.len()).map(|i| partition.part_vertices(i)).collect();
    let space = PartialLinearSpace::new(partition.graph().n(), lines)?;
    if !is_line_transitive(&space, group)?.holds() {
        return Err(Error::Internal("transitive decomposition gave a space that is not line transitive".into()));
    }
    Ok(space)
}
