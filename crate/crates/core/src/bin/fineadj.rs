use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fine_adjunction::adjunction::{
    classical_adjoint, classical_core, mu_classical, FineAdjunction,
};
use fine_adjunction::cayley::{find_cayley_structure, verify_decomposition_theorem, DecompositionOutcome};
use fine_adjunction::exactla::{parse_rational, Rational};
use fine_adjunction::harness::io::{polytope_json, rational_json, PolytopeDocument};
use fine_adjunction::harness::report::{decomposition_json, full_report, hull, nef_json, structure_json};
use fine_adjunction::harness::survey::{spectrum_survey, Dedup};
use fine_adjunction::harness::svg::{emit_svg, Mode};
use fine_adjunction::nef::nef_value_with;
use fine_adjunction::polytope::Polytope;
use fine_adjunction::{Error, Result};

/// Exact Fine adjunction of rational polytopes given as JSON documents.
#[derive(Parser)]
#[command(name = "fineadj", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Everything: cores, codegrees, vertex cones, nef value, Cayley findings.
    Report { file: PathBuf },
    /// The Fine (or classical) adjoint polytope at level s.
    Adjoint {
        file: PathBuf,
        #[arg(long = "s", value_parser = rational_arg, allow_hyphen_values = true)]
        s: Rational,
        #[arg(long)]
        classical: bool,
    },
    /// The Fine (or classical) Q-codegree.
    Mu {
        file: PathBuf,
        #[arg(long)]
        classical: bool,
    },
    /// The Fine (or classical) core.
    Core {
        file: PathBuf,
        #[arg(long)]
        classical: bool,
    },
    /// The Fine nef value.
    Tau { file: PathBuf },
    /// A Cayley structure of length t, or the decomposition check when t is omitted.
    Cayley {
        file: PathBuf,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Fine Q-codegree values of all lattice polytopes in [-B,B]^n.
    Spectrum {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        bound: i64,
        #[arg(long, value_parser = rational_arg)]
        eps: Rational,
        #[arg(long, value_enum, default_value_t = DedupArg::VertexSet)]
        dedup: DedupArg,
    },
    /// SVG of a polygon with nested adjoints.
    Plot {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', value_parser = rational_arg)]
        levels: Vec<Rational>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Fine)]
        mode: ModeArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    VertexSet,
    Translation,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fine,
    Classical,
    Both,
}

fn rational_arg(text: &str) -> std::result::Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn load(path: &PathBuf) -> Result<(Polytope, Option<String>)> {
    let doc = PolytopeDocument::load(path)?;
    Ok((doc.to_polytope()?, doc.name))
}

/// 1 for unreadable input, 3 for a failed internal check, 2 otherwise.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Document(_) | Error::InvalidRational(_) | Error::Json(_) | Error::Io(_) => 1,
        Error::Invariant(_) => 3,
        _ => 2,
    }
}

enum Output {
    Text(String),
    Json(Value),
}

fn polytope_output(p: &Polytope, json: bool) -> Output {
    if json {
        Output::Json(polytope_json(p))
    } else {
        Output::Text(hull(p))
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let json = cli.json;
    Ok(match &cli.command {
        Command::Report { file } => {
            let (p, name) = load(file)?;
            let r = full_report(&p, name)?;
            if json {
                Output::Json(r.to_json())
            } else {
                Output::Text(r.to_text())
            }
        }
        Command::Adjoint { file, s, classical } => {
            let (p, _) = load(file)?;
            let q = if *classical { classical_adjoint(&p, s)? } else { FineAdjunction::compute(&p)?.adjoint(s)? };
            if q.is_empty() {
                if json {
                    Output::Json(json!({ "empty": true }))
                } else {
                    Output::Text("empty".into())
                }
            } else {
                polytope_output(&q, json)
            }
        }
        Command::Mu { file, classical } => {
            let (p, _) = load(file)?;
            let mu = if *classical { mu_classical(&p)? } else { FineAdjunction::compute(&p)?.mu_fine() };
            if json {
                Output::Json(json!({ "mu": rational_json(&mu), "fine": !classical }))
            } else {
                Output::Text(mu.to_string())
            }
        }
        Command::Core { file, classical } => {
            let (p, _) = load(file)?;
            let core = if *classical { classical_core(&p)? } else { FineAdjunction::compute(&p)?.core };
            polytope_output(&core, json)
        }
        Command::Tau { file } => {
            let (p, _) = load(file)?;
            let nef = nef_value_with(&FineAdjunction::compute(&p)?)?;
            if json {
                Output::Json(nef_json(&nef))
            } else {
                Output::Text(nef.to_string())
            }
        }
        Command::Cayley { file, t: Some(t) } => {
            let (p, _) = load(file)?;
            match find_cayley_structure(&p, *t)? {
                Some(s) if json => Output::Json(structure_json(&s)),
                Some(s) => {
                    let parts: Vec<String> = s.summands.iter().map(hull).collect();
                    Output::Text(format!("Cayley sum of {} polytopes: {}", s.t + 1, parts.join(" * ")))
                }
                None if json => Output::Json(Value::Null),
                None => Output::Text(format!("no Cayley structure of length {}", t + 1)),
            }
        }
        Command::Cayley { file, t: None } => {
            let (p, _) = load(file)?;
            let d = verify_decomposition_theorem(&p)?;
            if json {
                Output::Json(decomposition_json(&d))
            } else {
                let line = match &d.outcome {
                    DecompositionOutcome::HypothesisNotMet => format!("n = {} <= d^F = {}, no claim", d.n, d.d_f),
                    DecompositionOutcome::UnimodularSimplex => "unimodular simplex".into(),
                    DecompositionOutcome::NotFound => format!("no Cayley structure with fibers of dimension <= {}", d.d_f),
                    DecompositionOutcome::Verified { structure, .. } => {
                        let parts: Vec<String> = structure.summands.iter().map(hull).collect();
                        format!("Cayley sum of {} polytopes: {}", structure.t + 1, parts.join(" * "))
                    }
                };
                Output::Text(format!("mu^F = {}, d^F = {}\n{line}", d.mu_fine, d.d_f))
            }
        }
        Command::Spectrum { dim, bound, eps, dedup } => {
            let dedup = match dedup {
                DedupArg::VertexSet => Dedup::VertexSet,
                DedupArg::Translation => Dedup::Translation,
            };
            let survey = spectrum_survey(*dim, *bound, eps, dedup)?;
            if json {
                Output::Json(survey.to_json())
            } else {
                Output::Text(survey.to_text())
            }
        }
        Command::Plot { file, levels, out, mode } => {
            let (p, _) = load(file)?;
            let mode = match mode {
                ModeArg::Fine => Mode::Fine,
                ModeArg::Classical => Mode::Classical,
                ModeArg::Both => Mode::Both,
            };
            std::fs::write(out, emit_svg(&p, levels, mode)?)?;
            if json {
                Output::Json(json!({ "written": out.display().to_string() }))
            } else {
                Output::Text(format!("wrote {}", out.display()))
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // bad arguments count as unreadable input
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Output::Text(text)) => {
            println!("{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Ok(Output::Json(value)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
