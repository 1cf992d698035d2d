//! JSON file formats for graphs, block systems, groups, partitions and
//! partial linear spaces.

use serde::{Deserialize, Serialize};

use crate::decomposition::EdgePartition;
use crate::error::{Error, Result};
use crate::graph::{BlockSystem, Edge, Graph};
use crate::permgroup::{PermGroup, Permutation};
use crate::pls::PartialLinearSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksFile {
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    pub parts: Vec<PartFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|e| e.endpoints()).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Graph> {
        let g = Graph::new(f.n, f.edges.into_iter().map(|[a, b]| (a, b)))?;
        match f.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl From<&BlockSystem> for BlocksFile {
    fn from(b: &BlockSystem) -> Self {
        BlocksFile {
            blocks: b.blocks().to_vec(),
        }
    }
}

impl TryFrom<BlocksFile> for BlockSystem {
    type Error = Error;

    fn try_from(f: BlocksFile) -> Result<BlockSystem> {
        BlockSystem::new(f.blocks)
    }
}

impl From<&PermGroup> for GroupFile {
    fn from(g: &PermGroup) -> Self {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

impl TryFrom<GroupFile> for PermGroup {
    type Error = Error;

    fn try_from(f: GroupFile) -> Result<PermGroup> {
        let gens = f
            .generators
            .into_iter()
            .enumerate()
            .map(|(i, images)| {
                if images.len() != f.degree {
                    return Err(Error::input(format!(
                        "generator {i} has {} images but the degree is {}",
                        images.len(),
                        f.degree
                    )));
                }
                Permutation::new(images)
            })
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Ok(PermGroup::trivial(f.degree));
        }
        PermGroup::new(gens)
    }
}

impl From<&EdgePartition> for PartitionFile {
    fn from(p: &EdgePartition) -> Self {
        PartitionFile {
            parts: p
                .parts()
                .iter()
                .zip(p.names())
                .map(|(edges, name)| PartFile {
                    name: name.clone(),
                    edges: edges.iter().map(|e| e.endpoints()).collect(),
                })
                .collect(),
        }
    }
}

impl PartitionFile {
    /// Validates the parts against `graph`.
    pub fn into_partition(self, graph: Graph) -> Result<EdgePartition> {
        let mut parts = Vec::with_capacity(self.parts.len());
        let mut names = Vec::with_capacity(self.parts.len());
        for part in self.parts {
            parts.push(
                part.edges
                    .into_iter()
                    .map(|[a, b]| Edge::new(a, b))
                    .collect::<Result<Vec<_>>>()?,
            );
            names.push(part.name);
        }
        EdgePartition::with_names(graph, parts, names)
    }
}

impl From<&PartialLinearSpace> for SpaceFile {
    fn from(s: &PartialLinearSpace) -> Self {
        SpaceFile {
            points: s.points(),
            lines: s.lines().to_vec(),
        }
    }
}

impl TryFrom<SpaceFile> for PartialLinearSpace {
    type Error = Error;

    fn try_from(f: SpaceFile) -> Result<PartialLinearSpace> {
        PartialLinearSpace::new(f.points, f.lines)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::petersen_qa_partition;
    use crate::graph::kneser_petersen;

    #[test]
    fn graph_file_round_trip_keeps_labels() {
        let g = kneser_petersen();
        let text = to_json(&GraphFile::from(&g)).unwrap();
        let back: Graph = from_json::<GraphFile>(&text).unwrap().try_into().unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn partition_file_validates_against_graph() {
        let p = petersen_qa_partition();
        let file = PartitionFile::from(&p);
        assert_eq!(file.clone().into_partition(kneser_petersen()).unwrap(), p);
        let mut broken = file;
        broken.parts[0].edges.push([0, 1]);
        assert!(broken.into_partition(kneser_petersen()).is_err());
    }

    #[test]
    fn group_file_checks_degrees() {
        let f = GroupFile {
            degree: 3,
            generators: vec![vec![1, 0]],
        };
        assert!(PermGroup::try_from(f).is_err());
        let f = GroupFile {
            degree: 3,
            generators: vec![],
        };
        assert_eq!(PermGroup::try_from(f).unwrap().order(), Some(1));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(from_json::<BlocksFile>(r#"{"blocks": [[0]], "extra": 1}"#).is_err());
        assert!(from_json::<GraphFile>("{not json").is_err());
    }
}
