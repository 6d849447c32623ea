//! Command-line front end: constructions, quotients, spectra, zeta functions,
//! tableau multiplicities, honeycomb quotients, and verification suites as
//! reproducible batch commands.
//!
//! Exit codes: 0 success, 1 a verification suite found a failing identity,
//! 2 usage or input error.

mod report;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use starcover::cover::star_cover;
use starcover::graph::{isomorphic, Graph};
use starcover::honeycomb::{
    honeycomb_quotient, label_vertices_s4, LatticeSpec, TranslationQuotient,
};
use starcover::perm::{Permutation, PermutationGroup};
use starcover::spectra::{charpoly, integral_spectrum};
use starcover::syt::{multiplicity, multiplicity_table};
use starcover::zeta::{ihara_zeta_reciprocal, zeta_from_charpoly};

use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "starcover",
    version,
    about = "Star-graph Galois covers of complete graphs: exact spectra, quotients, and Ihara zeta identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format; `dot` applies to the --out artifact only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the constructed graph to this file (JSON, or DOT with --format dot).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Suppress the report body (exit code still reflects the outcome).
    #[arg(long, global = true)]
    quiet: bool,
    /// Omit the timestamp field from JSON reports (byte-identical reruns).
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the star cover: Cay(S_{n+1}, star transpositions) over K_{n+1}.
    Star {
        #[arg(long)]
        n: usize,
    },
    /// Quotient the star cover by a subgroup of the deck group.
    Quotient {
        #[arg(long)]
        n: usize,
        /// Generators separated by ';', e.g. "(1,2)" or "(1,2);(1,3)".
        #[arg(long)]
        subgroup: String,
        /// Require a normal subgroup and report the quotient Galois cover.
        #[arg(long)]
        galois: bool,
    },
    /// Exact characteristic polynomial of a graph (JSON input).
    Charpoly {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Integer eigenvalues with multiplicities, plus the residual factor.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Reciprocal of the Ihara zeta function.
    Zeta {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Bass)]
        method: ZetaMethod,
    },
    /// Star-graph eigenvalue multiplicities via standard Young tableaux.
    Mult {
        #[arg(long)]
        n: usize,
        /// Single eigenvalue to report.
        #[arg(long)]
        k: Option<i64>,
        /// Print the full I_lambda(k) / f^lambda table.
        #[arg(long)]
        table: bool,
    },
    /// Finite honeycomb-lattice quotient.
    Honeycomb {
        /// Lattice basis "a,b;c,d" in (v1, v2) coordinates.
        #[arg(long, conflicts_with = "preset")]
        lattice: Option<String>,
        /// Named lattice: Lambda_Q, Lambda_X3, G_K4, G_T.
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        half_turn: bool,
        /// Label vertices with permutations (Lambda_X3 only).
        #[arg(long)]
        label: bool,
    },
    /// Graph isomorphism test between two JSON graphs.
    Iso {
        #[arg(long = "in1")]
        first: PathBuf,
        #[arg(long = "in2")]
        second: PathBuf,
    },
    /// Run a verification suite: s3, s4v, zeta3, honeycomb, fourier, syt, all.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaMethod {
    /// Bass determinant (1-u^2)^(r-1) det(I - uA + u^2 Q).
    Bass,
    /// Spectral route for regular graphs, via the characteristic polynomial.
    Charpoly,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {:?}: {}", path, e))?;
    Graph::from_json(&text).map_err(|e| format!("cannot parse {:?}: {}", path, e))
}

fn write_artifact(out: &Option<PathBuf>, format: Format, g: &Graph) -> Result<(), String> {
    if let Some(path) = out {
        let body = match format {
            Format::Dot => g.to_dot(),
            _ => g.to_json(),
        };
        fs::write(path, body).map_err(|e| format!("cannot write {:?}: {}", path, e))?;
    }
    Ok(())
}

fn parse_subgroup(text: &str, degree: usize) -> Result<PermutationGroup, String> {
    let gens: Result<Vec<Permutation>, String> = text
        .split(';')
        .map(|s| Permutation::parse(s.trim(), degree).map_err(|e| e.to_string()))
        .collect();
    PermutationGroup::generate(&gens?).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut report = Report::new(cli.format, cli.quiet, cli.no_timestamp);
    let code = match &cli.command {
        Command::Star { n } => {
            let cover = star_cover(*n).map_err(|e| e.to_string())?;
            report.command("star");
            report.line(format!(
                "star cover X_{}: {} vertices, {} edges, {}-regular over K_{}",
                n,
                cover.total().vertex_count(),
                cover.total().edge_count(),
                n,
                n + 1
            ));
            report.line(format!("deck group order {}", cover.deck.order()));
            report.data(json!({
                "n": n,
                "vertices": cover.total().vertex_count(),
                "edges": cover.total().edge_count(),
                "deck_order": cover.deck.order(),
            }));
            write_artifact(&cli.out, cli.format, cover.total())?;
            ExitCode::SUCCESS
        }
        Command::Quotient {
            n,
            subgroup,
            galois,
        } => {
            let cover = star_cover(*n).map_err(|e| e.to_string())?;
            let sub = parse_subgroup(subgroup, n + 1)?;
            let indices = cover
                .deck
                .subgroup_indices(&sub)
                .map_err(|e| e.to_string())?;
            report.command("quotient");
            let graph = if *galois {
                let q = cover.quotient_galois(&indices).map_err(|e| e.to_string())?;
                report.line(format!(
                    "Galois quotient: {} vertices, deck group order {}",
                    q.total().vertex_count(),
                    q.deck.order()
                ));
                q.total().clone()
            } else {
                let q = cover.quotient(&indices).map_err(|e| e.to_string())?;
                q.graph
            };
            let p = charpoly(&graph);
            let factored = p.factored_string("x");
            report.line(format!(
                "quotient graph: {} vertices, {} edges",
                graph.vertex_count(),
                graph.edge_count()
            ));
            report.line(format!("charpoly: {}", factored));
            if let Some(hint) = classify_by_charpoly(&factored) {
                report.line(format!("isomorphism-class hint: {}", hint));
            }
            report.data(json!({
                "n": n,
                "subgroup_order": sub.order(),
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "charpoly_factored": factored,
                "charpoly_coefficients": p,
                "hint": classify_by_charpoly(&factored),
            }));
            write_artifact(&cli.out, cli.format, &graph)?;
            ExitCode::SUCCESS
        }
        Command::Charpoly { input } => {
            let g = load_graph(input)?;
            let p = charpoly(&g);
            report.command("charpoly");
            report.line(p.factored_string("x"));
            report.data(json!({
                "vertices": g.vertex_count(),
                "factored": p.factored_string("x"),
                "coefficients": p,
            }));
            ExitCode::SUCCESS
        }
        Command::Spectrum { input } => {
            let g = load_graph(input)?;
            let s = integral_spectrum(&charpoly(&g)).map_err(|e| e.to_string())?;
            report.command("spectrum");
            report.line(s.to_string());
            report.data(json!({ "spectrum": s }));
            ExitCode::SUCCESS
        }
        Command::Zeta { input, method } => {
            let g = load_graph(input)?;
            let z = match method {
                ZetaMethod::Bass => ihara_zeta_reciprocal(&g).map_err(|e| e.to_string())?,
                ZetaMethod::Charpoly => {
                    let p = charpoly(&g);
                    zeta_from_charpoly(&g, &p).map_err(|e| e.to_string())?
                }
            };
            report.command("zeta");
            report.line(format!("1/zeta = {}", z.poly.factored_string("u")));
            report.line(format!(
                "degree {} = 2|E|; r-1 = {}",
                z.poly.degree().unwrap_or(0),
                z.r_minus_1
            ));
            report.data(json!({
                "reciprocal_factored": z.poly.factored_string("u"),
                "reciprocal_coefficients": z.poly,
                "r_minus_1": z.r_minus_1,
            }));
            ExitCode::SUCCESS
        }
        Command::Mult { n, k, table } => {
            report.command("mult");
            let t = multiplicity_table(*n).map_err(|e| e.to_string())?;
            if *table {
                for line in t.render_text().lines() {
                    report.line(line.to_string());
                }
            }
            match k {
                Some(k) => {
                    let m = multiplicity(*n, *k).map_err(|e| e.to_string())?;
                    report.line(format!("mult_X{}({}) = {}", n, k, m));
                    report.data(json!({ "n": n, "k": k, "multiplicity": m, "table": t }));
                }
                None => {
                    let all: Vec<(i64, usize)> = (-(*n as i64)..=*n as i64)
                        .map(|k| (k, t.multiplicity(k)))
                        .collect();
                    if !*table {
                        for (k, m) in &all {
                            report.line(format!("mult_X{}({}) = {}", n, k, m));
                        }
                    }
                    report.data(json!({ "n": n, "multiplicities": all, "table": t }));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Honeycomb {
            lattice,
            preset,
            half_turn,
            label,
        } => {
            let spec = match (lattice, preset) {
                (Some(text), None) => LatticeSpec::parse(text, *half_turn).ok_or_else(|| {
                    format!("cannot parse lattice {:?} (expected \"a,b;c,d\")", text)
                })?,
                (None, Some(name)) => {
                    LatticeSpec::preset(name).ok_or_else(|| format!("unknown preset {:?}", name))?
                }
                _ => return Err("provide exactly one of --lattice or --preset".into()),
            };
            report.command("honeycomb");
            let graph = honeycomb_quotient(&spec).map_err(|e| e.to_string())?;
            report.line(format!(
                "honeycomb quotient: {} vertices, {} edges{}",
                graph.vertex_count(),
                graph.edge_count(),
                if spec.half_turn {
                    " (half-turn folded)"
                } else {
                    ""
                }
            ));
            let mut labels_json = serde_json::Value::Null;
            if *label {
                let tq =
                    TranslationQuotient::build(spec.gen1, spec.gen2).map_err(|e| e.to_string())?;
                if spec.half_turn {
                    return Err("--label requires a translation-only lattice".into());
                }
                let labels = label_vertices_s4(&tq).map_err(|e| e.to_string())?;
                let pairs: Vec<(String, String)> = (0..tq.graph.vertex_count())
                    .map(|v| (tq.graph.display_label(v), labels[v].one_line()))
                    .collect();
                for (vertex, perm) in &pairs {
                    report.line(format!("{} -> {}", vertex, perm));
                }
                labels_json = json!(pairs);
            }
            report.data(json!({
                "gen1": [spec.gen1.0, spec.gen1.1],
                "gen2": [spec.gen2.0, spec.gen2.1],
                "half_turn": spec.half_turn,
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "labels": labels_json,
            }));
            write_artifact(&cli.out, cli.format, &graph)?;
            ExitCode::SUCCESS
        }
        Command::Iso { first, second } => {
            let g1 = load_graph(first)?;
            let g2 = load_graph(second)?;
            let map = isomorphic(&g1, &g2).map_err(|e| e.to_string())?;
            report.command("iso");
            match &map {
                Some(m) => report.line(format!("isomorphic: map {:?}", m)),
                None => report.line("not isomorphic".to_string()),
            }
            report.data(json!({ "isomorphic": map.is_some(), "map": map }));
            ExitCode::SUCCESS
        }
        Command::Verify { suite } => {
            let checks = suites::run_suite(suite)?;
            report.command("verify");
            let mut all_ok = true;
            for check in &checks {
                all_ok &= check.pass;
                report.line(format!(
                    "{} {}{}",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    if check.certificate.is_empty() {
                        String::new()
                    } else {
                        format!(": {}", check.certificate)
                    }
                ));
            }
            report.line(format!(
                "suite {}: {}/{} checks passed",
                suite,
                checks.iter().filter(|c| c.pass).count(),
                checks.len()
            ));
            report.data(json!({
                "suite": suite,
                "pass": all_ok,
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "certificate": c.certificate,
                })).collect::<Vec<_>>(),
            }));
            report.set_status(all_ok);
            if let Some(path) = &cli.out {
                fs::write(path, report.to_json_string())
                    .map_err(|e| format!("cannot write {:?}: {}", path, e))?;
            }
            if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    };
    report.print();
    Ok(code)
}

/// Known quotient classes of X₃ by their characteristic polynomials.
fn classify_by_charpoly(factored: &str) -> Option<&'static str> {
    match factored {
        "(x+3)(x+1)^3(x-1)^3(x-3)" => Some("cube graph"),
        "(x+2)^3(x+1)^3x^2(x-2)^3(x-3)" => Some("truncated tetrahedron"),
        "(x+1)^3(x-3)" => Some("K4"),
        "(x+3)(x+2)^6(x+1)^3x^4(x-1)^3(x-2)^6(x-3)" => Some("star graph X3"),
        _ => None,
    }
}
