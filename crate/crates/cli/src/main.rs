//! Command-line front end for circle-graph recognition.
//!
//! Exit codes: 0 = circle graph / check passed, 1 = not a circle graph /
//! check failed, 2 = usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use circle_core::{
    build_diagram, build_system, check_certificate, find_obstruction, oracle_find_with_cap,
    recognize, verify, BuildOutcome, ChordDiagram, Graph, GraphFormat, NajiAssignment,
    SolveOutcome, Verdict,
};

#[derive(Parser)]
#[command(
    name = "circlegraph",
    version,
    about = "Circle-graph recognition with checkable certificates"
)]
struct RunConfig {
    #[command(subcommand)]
    command: Command,
    /// Print progress details on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> GraphFormat {
        match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is a circle graph; emit a checkable certificate.
    Recognize {
        /// Graph file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Write the certificate JSON to this path.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Render a positive certificate's diagram as SVG to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve the graph's system: print an assignment, or the infeasibility
    /// witness as JSON.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Check an assignment file against the graph's system.
    Verify {
        graph: PathBuf,
        /// Assignment file: one `u v 0|1` line per ordered pair.
        beta: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Report a claw- or K4-obstruction for a non-chordal solution.
    Obstruct {
        graph: PathBuf,
        beta: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Brute-force verdict by searching every chord diagram (small graphs).
    Oracle {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Largest vertex count the search will attempt.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Render a double occurrence word as an SVG chord diagram.
    Render {
        /// File holding the word, e.g. `1 5 2 1 3 2 4 3 5 4`.
        input: PathBuf,
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &PathBuf, format: Format, verbose: bool) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = Graph::parse(&text, format.into())
        .with_context(|| format!("parsing {}", path.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    if verbose {
        eprintln!(
            "loaded {} vertices, {} edges from {}",
            parsed.graph.vertex_count(),
            parsed.graph.edge_count(),
            path.display()
        );
    }
    Ok(parsed.graph)
}

fn load_beta(g: &Graph, path: &PathBuf) -> Result<NajiAssignment> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    NajiAssignment::parse(g, &text).with_context(|| format!("parsing {}", path.display()))
}

fn run(config: &RunConfig) -> Result<u8> {
    match &config.command {
        Command::Recognize {
            input,
            format,
            certificate,
            svg,
        } => {
            let g = load_graph(input, *format, config.verbose)?;
            let cert = recognize(&g).context("recognition failed")?;
            debug_assert!(check_certificate(&g, &cert));
            if let Some(path) = certificate {
                fs::write(path, cert.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            match cert.verdict {
                Verdict::CircleGraph => {
                    let d = cert
                        .diagram
                        .as_ref()
                        .expect("positive certificate has a diagram");
                    println!("circle graph");
                    println!("diagram: {}", d.to_text());
                    if let Some(path) = svg {
                        fs::write(path, render_svg(d))
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    Ok(0)
                }
                Verdict::NotCircleGraph => {
                    let rows = cert
                        .infeasible_rows
                        .as_ref()
                        .expect("negative certificate has rows");
                    println!("not a circle graph");
                    println!("infeasible rows: {}", rows.len());
                    if config.verbose {
                        for tag in rows {
                            eprintln!("  {tag}");
                        }
                    }
                    if svg.is_some() {
                        eprintln!("warning: no diagram to render for a negative verdict");
                    }
                    Ok(1)
                }
            }
        }
        Command::Solve { input, format } => {
            let g = load_graph(input, *format, config.verbose)?;
            match build_system(&g).solve() {
                SolveOutcome::Solution(beta) => {
                    print!("{}", beta.to_text());
                    Ok(0)
                }
                SolveOutcome::Infeasible(w) => {
                    println!("{}", serde_json::to_string(&w.rows)?);
                    Ok(1)
                }
            }
        }
        Command::Verify {
            graph,
            beta,
            format,
        } => {
            let g = load_graph(graph, *format, config.verbose)?;
            let assignment = load_beta(&g, beta)?;
            let violated = verify(&g, &assignment)?;
            for tag in &violated {
                println!("{tag}");
            }
            println!("{} violations", violated.len());
            Ok(if violated.is_empty() { 0 } else { 1 })
        }
        Command::Obstruct {
            graph,
            beta,
            format,
        } => {
            let g = load_graph(graph, *format, config.verbose)?;
            let assignment = load_beta(&g, beta)?;
            let violated = verify(&g, &assignment)?;
            if !violated.is_empty() {
                bail!(
                    "assignment is not a solution; first violated row {}",
                    violated[0]
                );
            }
            if !g.is_connected() {
                bail!("obstruction search needs a connected graph");
            }
            match build_diagram(&g, &assignment)? {
                BuildOutcome::Diagram(_) => {
                    println!("chordal solution; no obstruction");
                    Ok(1)
                }
                BuildOutcome::NonChordal { .. } => {
                    let obs = find_obstruction(&g, &assignment)?;
                    println!("{}", serde_json::to_string(&obs)?);
                    Ok(0)
                }
            }
        }
        Command::Oracle {
            input,
            format,
            max_n,
        } => {
            let g = load_graph(input, *format, config.verbose)?;
            match oracle_find_with_cap(&g, *max_n)? {
                Some(d) => {
                    println!("{}", d.to_text());
                    Ok(0)
                }
                None => {
                    println!("not a circle graph");
                    Ok(1)
                }
            }
        }
        Command::Render { input, output } => {
            let text = fs::read_to_string(input)
                .with_context(|| format!("reading {}", input.display()))?;
            let d = ChordDiagram::parse(&text)
                .with_context(|| format!("parsing {}", input.display()))?;
            fs::write(output, render_svg(&d))
                .with_context(|| format!("writing {}", output.display()))?;
            Ok(0)
        }
    }
}

/// Deterministic rendering: the canonical word's 2m endpoints evenly spaced
/// clockwise from 12 o'clock, chords as straight segments.
fn render_svg(d: &ChordDiagram) -> String {
    let d = d.canonical();
    let word = d.word();
    let n = word.len();
    let (cx, cy, r) = (200.0_f64, 200.0_f64, 170.0_f64);
    let point = |i: usize| {
        let angle = 2.0 * std::f64::consts::PI * (i as f64) / (n.max(1) as f64);
        (cx + r * angle.sin(), cy - r * angle.cos())
    };
    let mut svg = String::new();
    svg.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n");
    svg.push_str(&format!(
        "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r:.2}\" fill=\"none\" stroke=\"black\"/>\n"
    ));
    let mut seen: std::collections::HashMap<&str, usize> = Default::default();
    for (i, v) in word.iter().enumerate() {
        if let Some(&j) = seen.get(v.as_str()) {
            let (x1, y1) = point(j);
            let (x2, y2) = point(i);
            svg.push_str(&format!(
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"steelblue\"/>\n"
            ));
        } else {
            seen.insert(v, i);
        }
    }
    for (i, v) in word.iter().enumerate() {
        let angle = 2.0 * std::f64::consts::PI * (i as f64) / (n.max(1) as f64);
        let (tx, ty) = (cx + (r + 14.0) * angle.sin(), cy - (r + 14.0) * angle.cos());
        svg.push_str(&format!(
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">{v}</text>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
