use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use transdecomp::decomposition::{a5_on_kneser_petersen, lift, petersen_qa_partition, verify};
use transdecomp::graph::{
    antipodal_blocks_gp10_2, automorphism_group, complete_graph, generalized_petersen, kneser_petersen, quotient,
};
use transdecomp::io::{to_json, BlocksFile, GraphFile, GroupFile, PartitionFile, SpaceFile};
use transdecomp::origami::{export_coloring, run_pipeline, ExportFormat};
use transdecomp::pls::{fano_group, from_decomposition, is_line_transitive, to_decomposition};
use transdecomp::{BlockSystem, Error, Graph, PartialLinearSpace, PermGroup};

/// Construct and verify transitive decompositions of graphs.
#[derive(Parser)]
#[command(name = "transdecomp", version, about)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a partition is a G-transitive decomposition.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        group: PathBuf,
    },
    /// Write the imprimitive quotient of a graph by a block system.
    Quotient {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        blocks: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Lift a decomposition of the quotient back to the graph.
    Lift {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        blocks: PathBuf,
        #[arg(long)]
        quotient_partition: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Build the five-colour dodecahedron scheme.
    Origami {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Convert between partial linear spaces and decompositions.
    Pls {
        #[command(subcommand)]
        direction: PlsCommand,
    },
    /// Compute the automorphism group of a graph.
    Aut {
        #[arg(long)]
        graph: PathBuf,
        /// Also write the group file here.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write one of the built-in graphs, block systems, partitions or groups.
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Destination file; standard output when omitted.
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PlsCommand {
    /// Space file to graph + partition files.
    ToDecomp {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        graph_out: PathBuf,
        #[arg(long)]
        partition_out: PathBuf,
    },
    /// Graph + partition + group files to a space file.
    FromDecomp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Complete graph K_n.
    Complete { n: usize },
    /// Generalized Petersen graph GP(n,k).
    Gp { n: usize, k: usize },
    /// Petersen graph on the 2-subsets of {1..5}.
    KneserPetersen,
    /// The Q_1..Q_5 partition of the Kneser-labelled Petersen graph.
    PetersenQa,
    /// A5 acting on the Kneser-labelled Petersen graph.
    A5Petersen,
    /// Antipodal pairs of GP(10,2).
    AntipodalBlocks,
    /// Rotation group of GP(10,2) (derived subgroup of its automorphisms).
    RotationGroup,
    /// The Fano plane.
    Fano,
    /// A line-transitive group of the Fano plane.
    FanoGroup,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// Failure modes, each with a fixed exit code.
enum Failure {
    /// Valid input, but the checked property does not hold.
    Verification(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CmdResult {
    write_text(path, &to_json(value)?)
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::try_from(read_json::<GraphFile>(path)?)?)
}

fn load_blocks(path: &Path) -> Result<BlockSystem, Failure> {
    Ok(BlockSystem::try_from(read_json::<BlocksFile>(path)?)?)
}

fn load_group(path: &Path, degree: usize) -> Result<PermGroup, Failure> {
    let group = PermGroup::try_from(read_json::<GroupFile>(path)?)?;
    if group.degree() != degree {
        return Err(Failure::Input(format!(
            "{}: group degree {} does not match {} vertices",
            path.display(),
            group.degree(),
            degree
        )));
    }
    Ok(group)
}

fn load_partition(path: &Path, graph: Graph) -> Result<transdecomp::EdgePartition, Failure> {
    read_json::<PartitionFile>(path)?
        .into_partition(graph)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) -> CmdResult {
    print!("{}", to_json(value)?);
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Verify { graph, partition, group } => {
            let g = load_graph(&graph)?;
            let grp = load_group(&group, g.n())?;
            let part = load_partition(&partition, g)?;
            let report = verify(&part, &grp)?;
            if json {
                print_json(&report)?;
            } else {
                println!("{report}");
            }
            if report.passes() {
                Ok(())
            } else {
                Err(Failure::Verification("not a G-transitive decomposition".into()))
            }
        }
        Command::Quotient { graph, blocks, output } => {
            let g = load_graph(&graph)?;
            let b = load_blocks(&blocks)?;
            let q = quotient(&g, &b)?;
            write_json(&output, &GraphFile::from(&q))?;
            if json {
                print_json(&json!({ "vertices": q.n(), "edges": q.edge_count() }))?;
            } else {
                println!("quotient: {} vertices, {} edges", q.n(), q.edge_count());
            }
            Ok(())
        }
        Command::Lift {
            graph,
            blocks,
            quotient_partition,
            group,
            output,
        } => {
            let g = load_graph(&graph)?;
            let b = load_blocks(&blocks)?;
            let grp = load_group(&group, g.n())?;
            let q = quotient(&g, &b)?;
            let qp = load_partition(&quotient_partition, q)?;
            let lifted = lift(&g, &b, &qp, &grp)?;
            let report = verify(&lifted, &grp)?;
            write_json(&output, &PartitionFile::from(&lifted))?;
            let sizes: Vec<usize> = lifted.parts().iter().map(Vec::len).collect();
            if json {
                print_json(&json!({ "part_sizes": sizes, "report": report }))?;
            } else {
                println!("lifted parts: {}  sizes: {:?}", lifted.len(), sizes);
                println!("{report}");
            }
            if report.passes() {
                Ok(())
            } else {
                Err(Failure::Verification("lifted partition failed verification".into()))
            }
        }
        Command::Origami { format, output } => {
            let p = run_pipeline()?;
            let fmt = match format {
                Format::Json => ExportFormat::Json,
                Format::Dot => ExportFormat::Dot,
            };
            let bytes = export_coloring(&p.coloring, fmt)?;
            fs::write(&output, bytes).map_err(|e| Failure::Input(format!("{}: {e}", output.display())))?;
            let sizes: Vec<usize> = p.coloring.classes().iter().map(Vec::len).collect();
            if json {
                print_json(&json!({
                    "edges": p.coloring.colors().len(),
                    "class_sizes": sizes,
                    "group_order": p.rotation_group.order(),
                    "report": p.report,
                }))?;
            } else {
                println!(
                    "dodecahedron: {} edges in {} colour classes of sizes {:?}",
                    p.coloring.colors().len(),
                    sizes.len(),
                    sizes
                );
                println!("rotation group order: {}", p.rotation_group.order().unwrap_or(0));
                println!("{}", p.report);
            }
            if p.report.is_one_decomposition() {
                Ok(())
            } else {
                Err(Failure::Internal("the colouring failed verification".into()))
            }
        }
        Command::Pls { direction } => match direction {
            PlsCommand::ToDecomp {
                space,
                graph_out,
                partition_out,
            } => {
                let s = PartialLinearSpace::try_from(read_json::<SpaceFile>(&space)?)?;
                let (g, part) = to_decomposition(&s)?;
                write_json(&graph_out, &GraphFile::from(&g))?;
                write_json(&partition_out, &PartitionFile::from(&part))?;
                if json {
                    print_json(&json!({ "vertices": g.n(), "edges": g.edge_count(), "parts": part.len() }))?;
                } else {
                    println!(
                        "graph: {} vertices, {} edges; {} complete parts",
                        g.n(),
                        g.edge_count(),
                        part.len()
                    );
                }
                Ok(())
            }
            PlsCommand::FromDecomp {
                graph,
                partition,
                group,
                output,
            } => {
                let g = load_graph(&graph)?;
                let grp = load_group(&group, g.n())?;
                let part = load_partition(&partition, g)?;
                let space = from_decomposition(&part, &grp)?;
                let transitive = is_line_transitive(&space, &grp)?;
                write_json(&output, &SpaceFile::from(&space))?;
                if json {
                    print_json(&json!({
                        "points": space.points(),
                        "lines": space.lines().len(),
                        "line_transitivity": transitive,
                    }))?;
                } else {
                    println!(
                        "partial linear space: {} points, {} lines, line transitive: {}",
                        space.points(),
                        space.lines().len(),
                        transitive.holds()
                    );
                }
                Ok(())
            }
        },
        Command::Aut { graph, output } => {
            let g = load_graph(&graph)?;
            let aut = automorphism_group(&g)?;
            let order = aut.order().unwrap_or(0);
            let file = GroupFile::from(&aut);
            if let Some(path) = output {
                write_json(&path, &file)?;
            }
            if json {
                print_json(&json!({ "order": order, "degree": file.degree, "generators": file.generators }))?;
            } else {
                println!("order: {order}");
                print!("{}", to_json(&file)?);
            }
            Ok(())
        }
        Command::Construct { what, output } => {
            let text = construct(what)?;
            match output {
                Some(path) => write_text(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn construct(what: Construct) -> Result<String, Failure> {
    Ok(match what {
        Construct::Complete { n } => to_json(&GraphFile::from(&complete_graph(n)?))?,
        Construct::Gp { n, k } => to_json(&GraphFile::from(&generalized_petersen(n, k)?))?,
        Construct::KneserPetersen => to_json(&GraphFile::from(&kneser_petersen()))?,
        Construct::PetersenQa => to_json(&PartitionFile::from(&petersen_qa_partition()))?,
        Construct::A5Petersen => to_json(&GroupFile::from(&a5_on_kneser_petersen()))?,
        Construct::AntipodalBlocks => to_json(&BlocksFile::from(&antipodal_blocks_gp10_2()))?,
        Construct::RotationGroup => {
            let g = generalized_petersen(10, 2)?;
            let rotations = automorphism_group(&g)?.derived_subgroup()?;
            to_json(&GroupFile::from(&rotations))?
        }
        Construct::Fano => to_json(&SpaceFile::from(&PartialLinearSpace::fano_plane()))?,
        Construct::FanoGroup => to_json(&GroupFile::from(&fano_group()))?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if json && !matches!(f, Failure::Verification(_)) {
                println!("{}", json!({ "error": f.message(), "exit_code": f.code() }));
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
