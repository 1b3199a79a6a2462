use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use crystallograph::arrange::{
    classify_restricted_arrangement, projectify, restricted_arrangement,
};
use crystallograph::crystal::{
    classify_components, classify_projective_components, enumerate_crystallographs,
    is_crystallograph, is_projective_crystallograph, is_quasi_crystallograph, EnumerationMode,
    Report, Tag, WeylWord,
};
use crystallograph::graphs::{arrangement_from_graph, graph_from_roots, roots_from_graph};
use crystallograph::oracle::{verify_all, DEFAULT_SAMPLES, DEFAULT_SEED};
use crystallograph::quotient::{
    kernel_basis, normalize_pair, orthogonal_projection, quotient_graph, restricted_system,
    verify_quotient_theorem,
};
use crystallograph::{io as cio, ColouredGraph, Error, Limits, Palette, RootSet};

#[derive(Parser)]
#[command(name = "crystallograph", version, about = "Coloured graphs for root subsystems of BC_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Report which predicates hold.
    Check { graph: PathBuf },
    /// Decompose a (quasi-)crystallograph, or a projective one, into typed components.
    Classify {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Root set of a bichromatic graph.
    ToRoots {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graph of a symmetric root set given in the text form.
    FromRoots {
        #[arg(long)]
        roots: PathBuf,
        /// Ambient dimension, needed when the file holds no roots.
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Kernel basis and orthogonal projection.
    Kernel { graph: PathBuf },
    /// Quotient graph of a nested pair.
    Quotient {
        graph: PathBuf,
        sub: PathBuf,
        /// Move both graphs into classical normal form first.
        #[arg(long)]
        normalize: bool,
        /// Check the quotient against the restricted root system.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Restricted root system of a nested pair.
    Restrict {
        graph: PathBuf,
        sub: PathBuf,
        #[arg(long)]
        normalize: bool,
    },
    /// Fuse loops into blue loops.
    Projectify {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hyperplanes and arrangement types, of a graph or of a restricted pair.
    Arrangement {
        graph: PathBuf,
        sub: Option<PathBuf>,
        #[arg(long)]
        normalize: bool,
    },
    /// List crystallographs on n nodes.
    Enumerate {
        #[arg(long)]
        nodes: usize,
        #[arg(long, conflicts_with = "up_to_weyl")]
        quasi: bool,
        #[arg(long)]
        up_to_weyl: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Run every invariant suite at n nodes.
    Verify {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include the runtime in the summary (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Graphviz output.
    Dot { graph: PathBuf },
}

/// A domain failure: message on stderr, optional payload on stdout.
struct Failure {
    message: String,
    payload: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            message: e.to_string(),
            payload: None,
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let r = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    r.map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        payload: None,
    })?;
    Ok(text)
}

fn read_graph(path: &Path) -> Result<ColouredGraph, Failure> {
    let text = read_input(path)?;
    cio::graph_from_json(&text).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        payload: None,
    })
}

fn render_graph(g: &ColouredGraph, format: Format) -> String {
    match format {
        Format::Dot => cio::graph_to_dot(g),
        _ => cio::graph_to_json(g) + "\n",
    }
}

fn render_report<T: Tag>(r: &Report<T>, format: Format) -> String {
    match format {
        Format::Text => r
            .parts
            .iter()
            .map(|c| {
                let params: Vec<String> = c.kind.params().iter().map(|p| p.to_string()).collect();
                let nodes: Vec<String> = c.nodes.iter().map(|v| (v + 1).to_string()).collect();
                format!("{}({}) on {}\n", c.kind.name(), params.join(","), nodes.join(" "))
            })
            .collect(),
        _ => cio::report_to_json(r) + "\n",
    }
}

fn announce(word: &WeylWord) {
    if !word.is_empty() {
        let gens: Vec<String> = word.word().iter().map(|g| g.to_string()).collect();
        eprintln!("normalized by {}", gens.join(" "));
    }
}

fn load_pair(graph: &Path, sub: &Path, normalize: bool) -> Result<(ColouredGraph, ColouredGraph), Failure> {
    let (g, gp) = (read_graph(graph)?, read_graph(sub)?);
    if !normalize {
        return Ok((g, gp));
    }
    let (g, gp, w) = normalize_pair(&g, &gp)?;
    announce(&w);
    Ok((g, gp))
}

fn run(command: Command, limits: &Limits, out: &mut dyn Write) -> Outcome {
    Ok(match command {
        Command::Check { graph } => {
            let g = read_graph(&graph)?;
            let v = serde_json::json!({
                "crystallograph": is_crystallograph(&g),
                "quasi_crystallograph": is_quasi_crystallograph(&g),
                "projective_crystallograph": is_projective_crystallograph(&g),
            });
            v.to_string() + "\n"
        }
        Command::Classify { graph, format } => {
            let g = read_graph(&graph)?;
            match g.palette() {
                Palette::Bichromatic => render_report(&classify_components(&g)?, format),
                Palette::Trichromatic => render_report(&classify_projective_components(&g)?, format),
            }
        }
        Command::ToRoots { graph, format } => {
            let phi = roots_from_graph(&read_graph(&graph)?)?;
            match format {
                Format::Json => {
                    let roots: Vec<Vec<i64>> = phi.iter().map(|r| r.to_vec()).collect();
                    serde_json::json!({ "n": phi.n(), "roots": roots }).to_string() + "\n"
                }
                _ => phi.to_text(),
            }
        }
        Command::FromRoots { roots, nodes, format } => {
            let mut phi = RootSet::parse_text(&read_input(&roots)?)?;
            if let Some(n) = nodes {
                if phi.is_empty() {
                    phi = RootSet::new(n);
                } else if phi.n() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: phi.n(),
                    }
                    .into());
                }
            }
            render_graph(&graph_from_roots(&phi)?, format)
        }
        Command::Kernel { graph } => {
            let g = read_graph(&graph)?;
            cio::kernel_to_json(&kernel_basis(&g)?, &orthogonal_projection(&g)?) + "\n"
        }
        Command::Quotient {
            graph,
            sub,
            normalize,
            verify,
            format,
        } => {
            let (g, gp) = load_pair(&graph, &sub, normalize)?;
            let q = quotient_graph(&g, &gp)?;
            if verify && !verify_quotient_theorem(&g, &gp)? {
                let restricted = restricted_system(&g, &gp)?;
                return Err(Failure {
                    message: "quotient graph disagrees with the restricted system".into(),
                    payload: Some(format!(
                        "{}\n{}\n",
                        cio::graph_to_json(&q),
                        cio::restricted_to_json(&restricted)
                    )),
                });
            }
            render_graph(&q, format)
        }
        Command::Restrict { graph, sub, normalize } => {
            let (g, gp) = load_pair(&graph, &sub, normalize)?;
            cio::restricted_to_json(&restricted_system(&g, &gp)?) + "\n"
        }
        Command::Projectify { graph, format } => {
            let g = read_graph(&graph)?;
            if g.palette() != Palette::Bichromatic {
                return Err(Error::Palette("projectify needs a bichromatic graph".into()).into());
            }
            render_graph(&projectify(&g), format)
        }
        Command::Arrangement { graph, sub, normalize } => match sub {
            Some(sub) => {
                let (g, gp) = load_pair(&graph, &sub, normalize)?;
                let h = restricted_arrangement(&g, &gp)?;
                cio::arrangement_to_json(&h, &classify_restricted_arrangement(&g, &gp)?) + "\n"
            }
            None => {
                let g = read_graph(&graph)?;
                let p = match g.palette() {
                    Palette::Bichromatic => projectify(&g),
                    Palette::Trichromatic => g,
                };
                let h = arrangement_from_graph(&p)?;
                cio::arrangement_to_json(&h, &classify_projective_components(&p)?) + "\n"
            }
        },
        Command::Enumerate {
            nodes,
            quasi,
            up_to_weyl,
            count_only,
        } => {
            let mode = if up_to_weyl {
                EnumerationMode::UpToWeyl
            } else if quasi {
                EnumerationMode::Quasi
            } else {
                EnumerationMode::All
            };
            let graphs = enumerate_crystallographs(nodes, mode, limits)?;
            if count_only {
                format!("{}\n", graphs.len())
            } else {
                for g in &graphs {
                    writeln!(out, "{}", cio::graph_to_json(g)).map_err(io_failure)?;
                }
                String::new()
            }
        }
        Command::Verify {
            nodes,
            samples,
            seed,
            timings,
        } => {
            let v = verify_all(nodes, samples, seed, limits)?;
            for (suite, count) in &v.checks {
                eprintln!("{suite}: {count} checks");
            }
            eprintln!(
                "n={} crystallographs={} quasi={} orbits={} failures={} ({:.2}s)",
                v.summary.n,
                v.summary.crystallographs,
                v.summary.quasi_crystallographs,
                v.summary.orbits,
                v.failure_count,
                v.summary.runtime_seconds
            );
            let mut json = serde_json::to_value(&v).expect("summary serializes");
            if timings {
                json["summary"]["runtime_seconds"] = serde_json::json!(v.summary.runtime_seconds);
            }
            let text = json.to_string() + "\n";
            if !v.passed() {
                return Err(Failure {
                    message: format!("{} invariant checks failed", v.failure_count),
                    payload: Some(text),
                });
            }
            text
        }
        Command::Dot { graph } => cio::graph_to_dot(&read_graph(&graph)?),
    })
}

fn io_failure(e: io::Error) -> Failure {
    Failure {
        message: e.to_string(),
        payload: None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &limits, &mut out) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(p) = f.payload {
                let _ = out.write_all(p.as_bytes());
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(1)
        }
    }
}
