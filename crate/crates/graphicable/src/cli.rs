//! Command-line surface.
//!
//! Subcommands: `generate`, `law`, `verify`, `check`, `embed`, `mul`,
//! `chain`. Results go to stdout, diagnostics to stderr. Exit codes:
//! 0 success / property holds, 1 property fails, 2 usage or input error,
//! 3 resource bound exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraElement, EvolutionAlgebra};
use crate::analysis::{check_snark, find_hamiltonian_cycle, has_friendship_property};
use crate::embeddings::{law_embedding, law_term_diff, theorem_chain, LawDiff};
use crate::error::{Error, Result};
use crate::families::{family_law, generate_graph, verification_grid, verify_family, FamilySpec};
use crate::graph::{GeneratorMap, Graph};
use crate::io::{
    deserialize_document, export_dot, parse_rational, render_element, render_law,
    serialize_document, AlgebraDocument, GraphDocument,
};

#[derive(Debug, Parser)]
#[command(
    name = "graphicable",
    version,
    about = "Exact-arithmetic graphicable algebras from graph families: laws, audits, and searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family graph (JSON by default, DOT or text on request)
    Generate {
        /// Family spec such as star:5, npartite:2,3,4, gp:12,5, j5
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the closed-form law of a family algebra
    Law {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Audit one family (or the whole grid) and emit the report as JSON
    Verify {
        spec: Option<String>,
        /// Audit every spec in the built-in grid, in parallel
        #[arg(long)]
        all: bool,
    },
    /// Run a structural check on an algebra or graph document
    Check {
        /// JSON file: an algebra document or {"n": .., "edges": [..]}
        file: PathBuf,
        /// Structure matrix is 0/1, symmetric, zero diagonal
        #[arg(long)]
        s_graphicable: bool,
        /// Snark certificate (cubic, bridgeless, girth, 3-edge-coloring)
        #[arg(long)]
        snark: bool,
        /// Search for a Hamiltonian cycle
        #[arg(long)]
        hamiltonian: bool,
        /// Every vertex pair has exactly one common neighbor
        #[arg(long)]
        friendship: bool,
        /// Girth threshold recorded in the snark certificate
        #[arg(long, default_value_t = 5)]
        girth_threshold: usize,
    },
    /// Check whether one family law embeds into another
    Embed {
        sub: String,
        sup: String,
        /// JSON file holding the generator images (1-based array);
        /// defaults to the identity map
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Multiply two elements of an algebra document (comma-separated
    /// rational coefficients)
    Mul {
        file: PathBuf,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Audit the star-friendship-wheel chain at size n
    Chain { n: usize },
}

/// Entry point used by the binary: reads `std::env::args`.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    dispatch(&args, &mut out, &mut err)
}

/// Parses `args` (without the binary name) and executes, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn dispatch(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let argv = std::iter::once("graphicable".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_bound() {
                3
            } else {
                2
            }
        }
    }
}

fn print_json(out: &mut impl Write, value: &impl Serialize) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    let _ = writeln!(out, "{text}");
}

fn execute(command: Command, out: &mut impl Write) -> Result<i32> {
    match command {
        Command::Generate { spec, format } => {
            let spec = FamilySpec::parse(&spec)?;
            let graph = generate_graph(&spec)?;
            match format {
                Format::Json => print_json(out, &GraphDocument::from_graph(&graph)),
                Format::Dot => {
                    let _ = write!(out, "{}", export_dot(&graph));
                }
                Format::Text => {
                    let _ = writeln!(
                        out,
                        "{spec}: {} vertices, {} edges",
                        graph.vertex_count(),
                        graph.edge_count()
                    );
                    for (u, v) in graph.edges() {
                        let _ = writeln!(out, "{u} -- {v}");
                    }
                }
            }
            Ok(0)
        }
        Command::Law { spec, format } => {
            let spec = FamilySpec::parse(&spec)?;
            let law = family_law(&spec)?;
            match format {
                Format::Text => {
                    let _ = write!(out, "{}", render_law(&law));
                }
                Format::Json => {
                    let document = AlgebraDocument::from_algebra(&law, Some(spec.to_string()));
                    let _ = write!(out, "{}", serialize_document(&document));
                }
                Format::Dot => {
                    return Err(Error::Usage("law has no DOT form; use generate --format dot".into()))
                }
            }
            Ok(0)
        }
        Command::Verify { spec, all } => match (spec, all) {
            (Some(spec), false) => {
                let spec = FamilySpec::parse(&spec)?;
                let report = verify_family(&spec)?;
                print_json(out, &report);
                Ok(if report.passed_all { 0 } else { 1 })
            }
            (None, true) => {
                let grid = verification_grid();
                let reports = grid
                    .par_iter()
                    .map(verify_family)
                    .collect::<Result<Vec<_>>>()?;
                #[derive(Serialize)]
                struct Failure {
                    spec: String,
                    failed_checks: Vec<&'static str>,
                }
                #[derive(Serialize)]
                struct Summary {
                    total: usize,
                    passed: usize,
                    failed: usize,
                    failures: Vec<Failure>,
                }
                let failures: Vec<Failure> = reports
                    .iter()
                    .filter(|r| !r.passed_all)
                    .map(|r| Failure {
                        spec: r.spec.clone(),
                        failed_checks: r
                            .checks
                            .iter()
                            .filter(|c| !c.passed)
                            .map(|c| c.name)
                            .collect(),
                    })
                    .collect();
                let summary = Summary {
                    total: reports.len(),
                    passed: reports.len() - failures.len(),
                    failed: failures.len(),
                    failures,
                };
                print_json(out, &summary);
                Ok(if summary.failed == 0 { 0 } else { 1 })
            }
            _ => Err(Error::Usage("pass exactly one of a family spec or --all".into())),
        },
        Command::Check { file, s_graphicable, snark, hamiltonian, friendship, girth_threshold } => {
            let selected = [s_graphicable, snark, hamiltonian, friendship]
                .iter()
                .filter(|&&f| f)
                .count();
            if selected != 1 {
                return Err(Error::Usage(
                    "pass exactly one of --s-graphicable, --snark, --hamiltonian, --friendship"
                        .into(),
                ));
            }
            let input = read_input(&file)?;
            if s_graphicable {
                let algebra = input.algebra();
                let violation = algebra.s_graphicability_violation();
                #[derive(Serialize)]
                struct Outcome {
                    check: &'static str,
                    passed: bool,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    violation: Option<String>,
                }
                let outcome = Outcome {
                    check: "s-graphicable",
                    passed: violation.is_none(),
                    violation: violation.map(|v| v.to_string()),
                };
                print_json(out, &outcome);
                return Ok(if outcome.passed { 0 } else { 1 });
            }
            let graph = input.graph()?;
            if snark {
                let certificate = check_snark(&graph, girth_threshold)?;
                print_json(out, &certificate);
                Ok(if certificate.verdict { 0 } else { 1 })
            } else if hamiltonian {
                let cycle = find_hamiltonian_cycle(&graph)?;
                #[derive(Serialize)]
                struct Outcome {
                    check: &'static str,
                    found: bool,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    cycle: Option<Vec<usize>>,
                }
                let outcome = Outcome { check: "hamiltonian-cycle", found: cycle.is_some(), cycle };
                print_json(out, &outcome);
                Ok(if outcome.found { 0 } else { 1 })
            } else {
                let verdict = has_friendship_property(&graph);
                print_json(out, &verdict);
                Ok(if verdict.holds() { 0 } else { 1 })
            }
        }
        Command::Embed { sub, sup, map } => {
            let sub_spec = FamilySpec::parse(&sub)?;
            let sup_spec = FamilySpec::parse(&sup)?;
            let sub_law = family_law(&sub_spec)?;
            let sup_law = family_law(&sup_spec)?;
            let map = match map {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    let images: Vec<usize> = serde_json::from_str(&text)
                        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
                    GeneratorMap::new(images)?
                }
                None => GeneratorMap::identity(sub_law.dimension()),
            };
            let embeds = law_embedding(&sub_law, &sup_law, &map)?;
            let diffs = law_term_diff(&sub_law, &sup_law, &map)?;
            #[derive(Serialize)]
            struct Outcome {
                sub: String,
                sup: String,
                embeds: bool,
                diffs: Vec<LawDiff>,
            }
            let outcome = Outcome {
                sub: sub_spec.to_string(),
                sup: sup_spec.to_string(),
                embeds,
                diffs,
            };
            print_json(out, &outcome);
            Ok(if embeds { 0 } else { 1 })
        }
        Command::Mul { file, x, y, format } => {
            let input = read_input(&file)?;
            let algebra = input.algebra();
            let x = parse_element(&x, algebra.dimension())?;
            let y = parse_element(&y, algebra.dimension())?;
            let product = algebra.multiply(&x, &y)?;
            match format {
                Format::Json => {
                    let coefficients: Vec<String> =
                        product.coefficients().iter().map(|c| c.to_string()).collect();
                    print_json(out, &coefficients);
                }
                _ => {
                    let _ = writeln!(out, "{}", render_element(&product));
                }
            }
            Ok(0)
        }
        Command::Chain { n } => {
            let report = theorem_chain(n)?;
            print_json(out, &report);
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

enum CheckInput {
    Algebra(EvolutionAlgebra),
    Graph(Graph),
}

impl CheckInput {
    fn algebra(&self) -> EvolutionAlgebra {
        match self {
            CheckInput::Algebra(a) => a.clone(),
            CheckInput::Graph(g) => EvolutionAlgebra::from_graph(g),
        }
    }

    fn graph(&self) -> Result<Graph> {
        match self {
            CheckInput::Algebra(a) => a.to_graph(),
            CheckInput::Graph(g) => Ok(g.clone()),
        }
    }
}

fn read_input(path: &Path) -> Result<CheckInput> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::MalformedDocument("expected a JSON object".into()))?;
    if object.contains_key("schema_version") {
        let document = deserialize_document(&text)?;
        Ok(CheckInput::Algebra(document.to_algebra()?))
    } else if object.contains_key("edges") {
        let document: GraphDocument =
            serde_json::from_str(&text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        Ok(CheckInput::Graph(document.to_graph()?))
    } else {
        Err(Error::MalformedDocument(
            "object is neither an algebra document (schema_version) nor a graph (n, edges)".into(),
        ))
    }
}

fn parse_element(text: &str, dimension: usize) -> Result<AlgebraElement> {
    let tokens: Vec<&str> = text.split(',').collect();
    if tokens.len() != dimension {
        return Err(Error::DimensionMismatch { left: dimension, right: tokens.len() });
    }
    let mut coefficients = Vec::with_capacity(dimension);
    for (index, token) in tokens.iter().enumerate() {
        let value = parse_rational(token)
            .ok_or_else(|| Error::InvalidRational { index, value: token.trim().to_string() })?;
        coefficients.push(value);
    }
    Ok(AlgebraElement::new(coefficients))
}
