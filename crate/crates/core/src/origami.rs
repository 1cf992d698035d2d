//! Five-colour transitive 1-decomposition of the dodecahedron.
//!
//! The dodecahedron is `GP(10,2)`. Its antipodal pairs form a block system
//! whose quotient is the Petersen graph; the `Q_a` partition of the
//! Kneser-labelled Petersen graph is pulled back through a quotient-to-Kneser
//! isomorphism and lifted to the dodecahedron. Each lifted part is a perfect
//! matching of six edges, and the rotation group permutes the five parts
//! transitively.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decomposition::{
    is_one_decomposition, lift_with_origins, petersen_qa_part, verify, EdgePartition, VerificationReport,
};
use crate::error::{Error, Result};
use crate::graph::{
    antipodal_blocks_gp10_2, automorphism_group, generalized_petersen, isomorphism, kneser_petersen, quotient,
    BlockSystem, Edge, Graph,
};
use crate::permgroup::{induced_action_on_blocks, PermGroup, Permutation};

pub const DEFAULT_COLOR_NAMES: [&str; 5] = ["red", "yellow", "green", "blue", "purple"];

/// An edge colouring in which no two edges of one colour share a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    graph: Graph,
    color_of: BTreeMap<Edge, usize>,
    color_names: Vec<String>,
}

impl Coloring {
    pub fn new(graph: Graph, color_of: BTreeMap<Edge, usize>, color_names: Vec<String>) -> Result<Self> {
        if color_of.len() != graph.edge_count() || graph.edges().iter().any(|e| !color_of.contains_key(e)) {
            return Err(Error::input("every edge of the graph needs exactly one colour"));
        }
        if let Some((e, c)) = color_of.iter().find(|(_, &c)| c >= color_names.len()) {
            return Err(Error::input(format!("edge {e} has colour {c} but only {} names", color_names.len())));
        }
        let mut seen: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
        for (&e, &c) in &color_of {
            for v in e.endpoints() {
                if let Some(other) = seen.insert((v, c), e) {
                    return Err(Error::input(format!("edges {other} and {e} share vertex {v} and colour {c}")));
                }
            }
        }
        Ok(Coloring {
            graph,
            color_of,
            color_names,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.color_of.get(&e).copied()
    }

    pub fn colors(&self) -> &BTreeMap<Edge, usize> {
        &self.color_of
    }

    pub fn color_names(&self) -> &[String] {
        &self.color_names
    }

    /// Edges of each colour, sorted.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.color_names.len()];
        for (&e, &c) in &self.color_of {
            classes[c].push(e);
        }
        classes
    }
}

/// Every intermediate object of the dodecahedron construction.
#[derive(Clone, Debug)]
pub struct OrigamiPipeline {
    pub graph: Graph,
    pub blocks: BlockSystem,
    pub quotient: Graph,
    /// Lexicographically least isomorphism from the quotient to the Kneser graph.
    pub kneser_isomorphism: Permutation,
    /// `Q_a` pulled back to the quotient; part `i` came from `Q_{qa_label[i]}`.
    pub quotient_partition: EdgePartition,
    pub qa_label: Vec<usize>,
    pub automorphisms: PermGroup,
    /// The derived subgroup of the automorphism group (the rotations), or the
    /// full group if that subgroup did not have order 60.
    pub rotation_group: PermGroup,
    pub used_fallback_group: bool,
    pub lifted: EdgePartition,
    pub report: VerificationReport,
    pub coloring: Coloring,
}

fn stage<T>(name: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Pipeline {
        stage: name,
        source: Box::new(e),
    })
}

fn check(name: &'static str, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        stage(name, Err(Error::Internal(what.to_string())))
    }
}

/// Runs every stage of the dodecahedron construction.
pub fn run_pipeline() -> Result<OrigamiPipeline> {
    let graph = stage("generalized_petersen", generalized_petersen(10, 2))?;
    let blocks = antipodal_blocks_gp10_2();
    check(
        "antipodal_blocks",
        blocks.first_internal_edge(&graph).is_none(),
        "an antipodal pair is adjacent",
    )?;
    let quotient = stage("quotient", quotient(&graph, &blocks))?;
    let kneser = kneser_petersen();
    let Some(phi) = stage("isomorphism", isomorphism(&quotient, &kneser))? else {
        return stage(
            "isomorphism",
            Err(Error::Internal("the quotient is not the Petersen graph".into())),
        );
    };
    let phi_inv = phi.inverse();

    // pull back each Q_a along phi
    let mut pulled = Vec::with_capacity(5);
    let mut names = Vec::with_capacity(5);
    for a in 1..=5 {
        let part: Vec<Edge> = petersen_qa_part(a).into_iter().map(|e| e.map(&phi_inv)).collect();
        pulled.push(part);
        names.push(Some(format!("Q{a}")));
    }
    let (quotient_partition, order) =
        stage("pullback", EdgePartition::with_names(quotient.clone(), pulled, names))?.canonicalized();
    let qa_label: Vec<usize> = order.iter().map(|&i| i + 1).collect();

    let automorphisms = stage("automorphism_group", automorphism_group(&graph))?;
    let derived = stage("derived_subgroup", automorphisms.derived_subgroup())?;
    let used_fallback_group = derived.order() != Some(60);
    let rotation_group = if used_fallback_group { automorphisms.clone() } else { derived };

    let induced = stage("induced_action", induced_action_on_blocks(&rotation_group, &blocks))?;
    check(
        "induced_action",
        induced.group.order() == Some(60),
        "the rotation group does not act on the antipodal pairs as a group of order 60",
    )?;
    let quotient_report = stage("quotient_verify", verify(&quotient_partition, &induced.group))?;
    check(
        "quotient_verify",
        quotient_report.passes() && quotient_report.max_subgraph_valency == 1,
        "the pulled-back partition is not a transitive 1-decomposition of the quotient",
    )?;

    let (lifted, origins) = stage(
        "lift",
        lift_with_origins(&graph, &blocks, &quotient_partition, &rotation_group),
    )?;
    let report = stage("verify", verify(&lifted, &rotation_group))?;
    check(
        "verify",
        report.passes() && report.max_subgraph_valency == 1 && is_one_decomposition(&lifted),
        "the lifted partition is not a transitive 1-decomposition",
    )?;
    check(
        "verify",
        lifted.len() == 5 && lifted.parts().iter().all(|p| p.len() == 6),
        "the lifted partition does not have five parts of six edges",
    )?;

    let mut color_of = BTreeMap::new();
    for (pi, part) in lifted.parts().iter().enumerate() {
        let color = qa_label[origins[pi]] - 1;
        for &e in part {
            color_of.insert(e, color);
        }
    }
    let names = DEFAULT_COLOR_NAMES.iter().map(|s| s.to_string()).collect();
    let coloring = stage("coloring", Coloring::new(graph.clone(), color_of, names))?;

    Ok(OrigamiPipeline {
        graph,
        blocks,
        quotient,
        kneser_isomorphism: phi,
        quotient_partition,
        qa_label,
        automorphisms,
        rotation_group,
        used_fallback_group,
        lifted,
        report,
        coloring,
    })
}

/// The five-colour scheme and the verification report of its parts.
pub fn build_dodecahedron_coloring() -> Result<(Coloring, VerificationReport)> {
    let p = run_pipeline()?;
    Ok((p.coloring, p.report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::input(format!("unknown export format `{other}` (expected json or dot)"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringFile {
    pub n: usize,
    pub edges: Vec<ColoredEdge>,
}

pub fn export_coloring(c: &Coloring, format: ExportFormat) -> Result<Vec<u8>> {
    match format {
        ExportFormat::Json => {
            let file = ColoringFile {
                n: c.graph.n(),
                edges: c
                    .color_of
                    .iter()
                    .map(|(e, &color)| ColoredEdge {
                        u: e.u(),
                        v: e.v(),
                        color,
                    })
                    .collect(),
            };
            let mut out = serde_json::to_vec_pretty(&file)?;
            out.push(b'\n');
            Ok(out)
        }
        ExportFormat::Dot => {
            let dot = c.graph.to_dot(|e| c.color(e).map(|k| c.color_names[k].clone()));
            Ok(dot.into_bytes())
        }
    }
}
