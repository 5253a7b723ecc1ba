use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use signed_corona::census::{
    corona_balance_criterion_with, edge_census_direct, edge_census_formula_with, mark_degree_summary,
    printed_balance_criterion, total_triads_formula, triad_census_direct, triad_census_formula_with,
};
use signed_corona::coronal::{closed_form, coronal_shape, graph_coronal};
use signed_corona::eigen::eig_symmetric;
use signed_corona::io::{parse_graph, parse_unsigned_edge_list, render_graph, InputDigest, SpectrumDocument};
use signed_corona::spectra::{corona_spectrum, cospectral_deviation, Method, SpectrumReport, COSPECTRAL_TOL};
use signed_corona::verify::{run_verify, VerifyConfig};
use signed_corona::{neighbourhood_corona_with, CrossSign, Error, MatrixKind, SignedGraph};

/// Neighbourhood coronas of signed graphs.
#[derive(Parser)]
#[command(name = "signed-corona", version)]
struct Cli {
    /// Sign rule for edges between the first factor and the copies.
    #[arg(long, global = true, default_value_t = CrossSign::CentreEdge)]
    cross_sign: CrossSign,
    /// Read inputs as unsigned `u v` edge lists (all edges positive).
    #[arg(long, global = true)]
    unsigned: bool,
    /// Print human-readable tables to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the corona of two graphs and write it as a graph file.
    Corona {
        in1: PathBuf,
        in2: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spectrum of the corona.
    Spectrum {
        #[arg(long, value_parser = parse_spectral_kind)]
        matrix: MatrixKind,
        #[arg(long, default_value = "numeric")]
        method: Method,
        in1: PathBuf,
        in2: PathBuf,
    },
    /// Balance of the corona by criterion and by direct check.
    Balance { in1: PathBuf, in2: PathBuf },
    /// Edge (and optionally triad) statistics of the corona.
    Stats {
        #[arg(long)]
        triads: bool,
        in1: PathBuf,
        in2: PathBuf,
    },
    /// Signed coronal of a graph.
    Coronal {
        #[arg(long, value_parser = parse_spectral_kind)]
        matrix: MatrixKind,
        input: PathBuf,
    },
    /// Whether two graphs have the same spectrum.
    Cospectral {
        #[arg(long, value_parser = parse_spectral_kind)]
        matrix: MatrixKind,
        in_a: PathBuf,
        in_b: PathBuf,
    },
    /// Check every identity on seeded random instances.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

fn parse_spectral_kind(s: &str) -> Result<MatrixKind, String> {
    match s.parse::<MatrixKind>()? {
        MatrixKind::D => Err("expected one of a, l, q".into()),
        k => Ok(k),
    }
}

enum Failure {
    Usage(String),
    Discrepancies,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Input {
    graph: SignedGraph,
    digest: InputDigest,
}

fn read(path: &Path, unsigned: bool) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let graph = if unsigned { parse_unsigned_edge_list(text) } else { parse_graph(text) }
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(Input { graph, digest: InputDigest::of(path.display().to_string(), &bytes) })
}

fn run(cli: Cli) -> Result<Value, Failure> {
    let rule = cli.cross_sign;
    let load = |p: &Path| read(p, cli.unsigned);
    match cli.command {
        Command::Corona { in1, in2, output } => {
            let (a, b) = (load(&in1)?, load(&in2)?);
            let c = neighbourhood_corona_with(&a.graph, &b.graph, rule)?;
            let text = render_graph(&c.graph);
            let mut doc = json!({
                "cross_sign": rule,
                "layout": c.layout,
                "nodes": c.graph.order(),
                "edges": c.graph.edge_count(),
                "inputs": [a.digest, b.digest],
            });
            match output {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    doc["output"] = json!(path.display().to_string());
                }
                None => doc["graph"] = json!(text),
            }
            Ok(doc)
        }
        Command::Spectrum { matrix, method, in1, in2 } => {
            let (a, b) = (load(&in1)?, load(&in2)?);
            let report = if rule == CrossSign::default() {
                corona_spectrum(&a.graph, &b.graph, matrix, method)?
            } else if method == Method::Numeric {
                let c = neighbourhood_corona_with(&a.graph, &b.graph, rule)?;
                SpectrumReport { method, spectrum: eig_symmetric(&c.graph.matrix(matrix))?, discrepancies: vec![] }
            } else {
                return Err(Failure::Usage(format!("the {method} method requires --cross-sign centre-edge")));
            };
            if cli.verbose {
                eprintln!("{matrix}-spectrum ({method}): {}", report.spectrum);
                for d in &report.discrepancies {
                    eprintln!("  {:?} {}: {}", d.kind, d.id, d.detail);
                }
            }
            let doc = SpectrumDocument::new(matrix, &report, vec![a.digest, b.digest]);
            Ok(serde_json::to_value(doc).expect("document serializes"))
        }
        Command::Balance { in1, in2 } => {
            let (a, b) = (load(&in1)?, load(&in2)?);
            let c = neighbourhood_corona_with(&a.graph, &b.graph, rule)?;
            let oracle = c.graph.is_balanced();
            let criterion = corona_balance_criterion_with(&a.graph, &b.graph, rule);
            let edge_types = printed_balance_criterion(&a.graph, &b.graph);
            let verdict = if oracle { "balanced" } else { "unbalanced" };
            if cli.verbose {
                eprintln!("first factor:  {}", if a.graph.is_balanced() { "balanced" } else { "unbalanced" });
                eprintln!("second factor: {}", if b.graph.is_balanced() { "balanced" } else { "unbalanced" });
                eprintln!("corona: {verdict} (criterion {criterion}, edge-type criterion {edge_types})");
            }
            Ok(json!({
                "cross_sign": rule,
                "first_balanced": a.graph.is_balanced(),
                "second_balanced": b.graph.is_balanced(),
                "corona": verdict,
                "oracle": oracle,
                "criterion": criterion,
                "criterion_agrees": criterion == oracle,
                "edge_type_criterion": edge_types,
                "edge_type_criterion_agrees": edge_types == oracle,
            }))
        }
        Command::Stats { triads, in1, in2 } => {
            let (a, b) = (load(&in1)?, load(&in2)?);
            let c = neighbourhood_corona_with(&a.graph, &b.graph, rule)?;
            let edges = edge_census_direct(&c.graph);
            let formula = edge_census_formula_with(&a.graph, &b.graph, rule);
            if cli.verbose {
                eprintln!("{:<10} {:>8} {:>8} {:>8}", "edges", "total", "positive", "negative");
                eprintln!("{:<10} {:>8} {:>8} {:>8}", "direct", edges.total, edges.positive, edges.negative);
                eprintln!("{:<10} {:>8} {:>8} {:>8}", "formula", formula.total, formula.positive, formula.negative);
            }
            let mut doc = json!({
                "cross_sign": rule,
                "nodes": c.graph.order(),
                "marks": [mark_degree_summary(&a.graph), mark_degree_summary(&b.graph)],
                "edges": { "direct": edges, "formula": formula },
            });
            if triads {
                let direct = triad_census_direct(&c.graph);
                let formula = triad_census_formula_with(&a.graph, &b.graph, rule);
                let total = total_triads_formula(&a.graph, &b.graph);
                if cli.verbose {
                    eprintln!("{:<10} {:>6} {:>6} {:>6} {:>6}", "triads", "T0", "T1", "T2", "T3");
                    for (name, t) in [("direct", direct), ("formula", formula)] {
                        eprintln!("{name:<10} {:>6} {:>6} {:>6} {:>6}", t.t0, t.t1, t.t2, t.t3);
                    }
                }
                doc["triads"] = json!({ "direct": direct, "formula": formula, "total_formula": total });
            }
            Ok(doc)
        }
        Command::Coronal { matrix, input } => {
            let g = load(&input)?;
            let chi = graph_coronal(&g.graph, matrix)?;
            let closed = closed_form(&g.graph, matrix);
            if cli.verbose {
                eprintln!("chi_{matrix} = {chi}");
            }
            let coeffs = |p: &signed_corona::IntPolynomial| -> Vec<String> {
                p.coeffs().iter().map(|c| c.to_string()).collect()
            };
            Ok(json!({
                "matrix": matrix,
                "coronal": chi.to_string(),
                "numerator": coeffs(chi.numerator()),
                "denominator": coeffs(chi.denominator()),
                "shape": coronal_shape(&g.graph).map(|s| format!("{s:?}")),
                "closed_form_agrees": closed.map(|c| c == chi),
                "inputs": [g.digest],
            }))
        }
        Command::Cospectral { matrix, in_a, in_b } => {
            let (a, b) = (load(&in_a)?, load(&in_b)?);
            let deviation = cospectral_deviation(&a.graph.matrix(matrix), &b.graph.matrix(matrix));
            let cospectral = deviation.is_some_and(|d| d <= COSPECTRAL_TOL);
            if cli.verbose {
                match deviation {
                    Some(d) => eprintln!("max eigenvalue gap {d:.3e}: {}", if cospectral { "cospectral" } else { "not cospectral" }),
                    None => eprintln!("orders differ: {} vs {}", a.graph.order(), b.graph.order()),
                }
            }
            Ok(json!({
                "matrix": matrix,
                "cospectral": cospectral,
                "tolerance": COSPECTRAL_TOL,
                "max_deviation": deviation,
                "inputs": [a.digest, b.digest],
            }))
        }
        Command::Verify { trials, seed, max_n } => {
            let report = run_verify(VerifyConfig { trials, seed, max_n })?;
            if cli.verbose {
                eprintln!("{} checks over {trials} trials, {} failures", report.checks, report.failures.len());
                for (check, n) in &report.errata_summary {
                    eprintln!("  printed-formula deviation {check}: {n}");
                }
                for f in &report.failures {
                    eprintln!("  FAIL trial {} {}: {}", f.trial, f.check, f.detail);
                }
            }
            let doc = serde_json::to_value(&report).expect("report serializes");
            if report.passed() {
                Ok(doc)
            } else {
                emit(&doc);
                Err(Failure::Discrepancies)
            }
        }
    }
}

/// Writes the output document; a closed stdout (e.g. piped into `head`) is not an error.
fn emit(doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("document serializes");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(doc) => {
            emit(&doc);
            ExitCode::SUCCESS
        }
        Err(Failure::Discrepancies) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
