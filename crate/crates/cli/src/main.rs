use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use jordanlab::algebra::{Algebra, AlgebraElement};
use jordanlab::centers;
use jordanlab::io;
use jordanlab::linalg::{Field, Subspace};
use jordanlab::maps::{self, LinearMap, MapError, MapKind, Verdict};
use jordanlab::{catalog, verify};

const DEFAULT_MAX_DIM: usize = 32;

/// Exact centralizer and derivation spaces of finite-dimensional algebras.
#[derive(Parser)]
#[command(name = "jordanlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions (and bases) of the eight map spaces
    Spaces {
        #[command(flatten)]
        source: Source,
        /// Print a basis of each space
        #[arg(long)]
        bases: bool,
        #[arg(long)]
        json: bool,
    },
    /// Z, Z_J and Z_Q, plus a semiprimeness verdict over Q
    Centers {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        bases: bool,
        #[arg(long)]
        json: bool,
    },
    /// Split a generalized Jordan derivation as f1 + f2
    Decompose {
        #[command(flatten)]
        source: Source,
        /// Map document (JSON)
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a quasi Jordan derivation lies in JCent + JDer
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run named checks (or `all`) on the catalog
    Verify {
        /// Check id, repeatable; `all` runs the whole suite
        #[arg(long = "check", default_value = "all")]
        checks: Vec<String>,
        /// `rational` or `prime:<p>`
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        json: bool,
        /// List the check ids and exit
        #[arg(long)]
        list: bool,
    },
    /// Print an algebra as a JSON document
    Export {
        #[command(flatten)]
        source: Source,
    },
    /// List the catalog algebras
    Catalog,
}

#[derive(Args)]
struct Source {
    /// A JSON algebra document, or `catalog:<name>`
    #[arg(long)]
    algebra: String,
    /// Field for catalog algebras: `rational` or `prime:<p>`
    #[arg(long)]
    field: Option<String>,
}

enum Failure {
    /// Bad input: exit code 2.
    Input(String),
    /// A check or membership test failed: exit code 1.
    Check(String),
}

type Outcome = Result<String, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_field(text: &str) -> Result<Field, Failure> {
    match text {
        "rational" | "Q" => Ok(Field::Rational),
        _ => {
            let p = text
                .strip_prefix("prime:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| Failure::Input(format!("invalid field {text:?}: expected rational or prime:<p>")))?;
            Field::prime(p).map_err(input)
        }
    }
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("JORDANLAB_MAX_DIM") {
        Ok(v) => v.parse().map_err(|_| Failure::Input(format!("JORDANLAB_MAX_DIM must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn load_algebra(source: &Source) -> Result<Algebra, Failure> {
    let algebra = if let Some(name) = source.algebra.strip_prefix("catalog:") {
        let field = parse_field(source.field.as_deref().unwrap_or("rational"))?;
        catalog::by_name(name, field).map_err(input)?.algebra
    } else {
        let path = Path::new(&source.algebra);
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let algebra = io::algebra_from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        if let Some(field) = &source.field {
            if parse_field(field)? != algebra.field() {
                return Err(Failure::Input(format!("--field {field} disagrees with the file's field {}", algebra.field())));
            }
        }
        algebra
    };
    let limit = max_dim()?;
    if algebra.dim() > limit {
        return Err(Failure::Input(format!(
            "algebra has dimension {} above the limit {limit} (set JORDANLAB_MAX_DIM to raise it)",
            algebra.dim()
        )));
    }
    Ok(algebra)
}

fn load_map(path: &Path, algebra: &Algebra) -> Result<LinearMap, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::map_from_json(&text, algebra).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

fn map_json(algebra: &Algebra, map: &LinearMap) -> Value {
    json!(io::MapDocument::from_map(algebra, map).matrix)
}

fn element_strings(algebra: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|b| algebra.format(&AlgebraElement::new(b.clone()))).collect()
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

fn membership_failure(algebra: &Algebra, error: MapError) -> Failure {
    match error {
        MapError::NotMember { kind, violation } => {
            Failure::Check(format!("map is not in {kind}: {}", violation.describe(algebra)))
        }
        MapError::Shape { .. } | MapError::Linalg(_) => Failure::Input(error.to_string()),
        MapError::Inconsistent(_) => Failure::Check(error.to_string()),
    }
}

fn cmd_spaces(algebra: &Algebra, bases: bool, as_json: bool) -> Outcome {
    let spaces: Vec<_> = MapKind::ALL.iter().map(|&k| maps::space(algebra, k)).collect();
    if as_json {
        let list: Vec<Value> = spaces
            .iter()
            .map(|s| {
                let mut v = json!({ "kind": s.kind().name(), "dim": s.dim() });
                if bases {
                    v["basis"] = s.basis_maps().iter().map(|f| map_json(algebra, f)).collect();
                }
                v
            })
            .collect();
        return Ok(pretty(&json!({ "algebra": algebra.name(), "field": algebra.field().to_string(), "spaces": list })));
    }
    let mut out = format!("{} over {} (dim {})\n", algebra.name(), algebra.field(), algebra.dim());
    for s in &spaces {
        out += &format!("{:<7} {}\n", s.kind().name(), s.dim());
        if bases {
            for (k, f) in s.basis_maps().iter().enumerate() {
                out += &format!("  basis map {}:\n{}", k + 1, indent(&f.describe(algebra)));
            }
        }
    }
    Ok(out)
}

fn cmd_centers(algebra: &Algebra, bases: bool, as_json: bool) -> Outcome {
    let chain = centers::center_chain(algebra).map_err(|e| Failure::Check(e.to_string()))?;
    let semiprime = centers::is_semiprime_char0(algebra).ok();
    let named = [("Z", &chain.z), ("Z_J", &chain.z_j), ("Z_Q", &chain.z_q)];
    if as_json {
        let list: Vec<Value> = named
            .iter()
            .map(|(name, s)| {
                let mut v = json!({ "name": name, "dim": s.dim() });
                if bases {
                    v["basis"] = json!(element_strings(algebra, s));
                }
                v
            })
            .collect();
        return Ok(pretty(&json!({
            "algebra": algebra.name(),
            "field": algebra.field().to_string(),
            "centers": list,
            "semiprime": semiprime,
        })));
    }
    let mut out = format!("{} over {} (dim {})\n", algebra.name(), algebra.field(), algebra.dim());
    for (name, s) in named {
        out += &format!("{name:<4} {}\n", s.dim());
        if bases {
            for b in element_strings(algebra, s) {
                out += &format!("  {b}\n");
            }
        }
    }
    out += &match semiprime {
        Some(true) => "semiprime: yes\n".to_string(),
        Some(false) => "semiprime: no\n".to_string(),
        None => "semiprime: undecided (needs characteristic 0)\n".to_string(),
    };
    Ok(out)
}

fn cmd_decompose(algebra: &Algebra, f: &LinearMap, as_json: bool) -> Outcome {
    let d = maps::decompose_gjder(algebra, f).map_err(|e| membership_failure(algebra, e))?;
    let parts = [("f1", &d.f1), ("f2", &d.f2), ("g", &d.g), ("h", &d.h)];
    if as_json {
        let mut v = json!({ "algebra": algebra.name() });
        for (name, m) in parts {
            v[name] = map_json(algebra, m);
        }
        return Ok(pretty(&v));
    }
    let mut out = String::from("f = f1 + f2 with f1 in QJDer and f2 in QJCent\n");
    for (name, m) in parts {
        out += &format!("{name}:\n{}", indent(&m.describe(algebra)));
    }
    Ok(out)
}

fn cmd_classify(algebra: &Algebra, f: &LinearMap, as_json: bool) -> Outcome {
    let c = maps::classify_qjder(algebra, f).map_err(|e| membership_failure(algebra, e))?;
    let alpha = algebra.format(&c.alpha);
    match &c.verdict {
        Verdict::Split { jcent_part, jder_part } => {
            if as_json {
                return Ok(pretty(&json!({
                    "algebra": algebra.name(),
                    "alpha": alpha,
                    "verdict": "split",
                    "jcent_part": map_json(algebra, jcent_part),
                    "jder_part": map_json(algebra, jder_part),
                })));
            }
            Ok(format!(
                "α = f(1)/2 = {alpha} lies in Z_J\nsplit: f = (x ↦ α∘x) + d\nd:\n{}",
                indent(&jder_part.describe(algebra))
            ))
        }
        Verdict::Obstructed { pair: (i, j), value } => {
            let (x, y) = (&algebra.labels()[*i], &algebra.labels()[*j]);
            let value = algebra.format(value);
            if as_json {
                return Ok(pretty(&json!({
                    "algebra": algebra.name(),
                    "alpha": alpha,
                    "verdict": "obstructed",
                    "pair": [x, y],
                    "value": value,
                })));
            }
            Ok(format!("α = f(1)/2 = {alpha} is not in Z_J\nobstructed: [[α, {x}], {y}] = {value}\nf is not in JCent + JDer\n"))
        }
    }
}

fn cmd_verify(checks: &[String], field: &str, as_json: bool, list: bool) -> Outcome {
    if list {
        return Ok(verify::CHECKS.iter().map(|c| format!("{:<7} {}\n", c.id, c.statement)).collect());
    }
    let field = parse_field(field)?;
    let ctx = verify::Context::new(field).map_err(input)?;
    let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
    let report = verify::run(&ctx, &ids).map_err(input)?;
    let text = if as_json { report.to_json() + "\n" } else { report.to_table() };
    if report.passed {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spaces { source, bases, json } => cmd_spaces(&load_algebra(&source)?, bases, json),
        Command::Centers { source, bases, json } => cmd_centers(&load_algebra(&source)?, bases, json),
        Command::Decompose { source, map, json } => {
            let algebra = load_algebra(&source)?;
            cmd_decompose(&algebra, &load_map(&map, &algebra)?, json)
        }
        Command::Classify { source, map, json } => {
            let algebra = load_algebra(&source)?;
            cmd_classify(&algebra, &load_map(&map, &algebra)?, json)
        }
        Command::Verify { checks, field, json, list } => cmd_verify(&checks, &field, json, list),
        Command::Export { source } => Ok(io::algebra_to_json(&load_algebra(&source)?) + "\n"),
        Command::Catalog => Ok(catalog::NAMES.iter().map(|n| format!("{n}\n")).collect()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
