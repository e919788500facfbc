use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kronjord_core::cover::push_down;
use kronjord_core::kronecker::{classify_root, coxeter_apply, is_in_ijt, xi_inverse};
use kronjord_core::pipeline::{classify, realize};
use kronjord_core::verify::Mode;
use kronjord_core::{DimVector, Error, Result};
use kronjord::json::{self, RepJson, TreeJson, WitnessJson};
use kronjord::report::{verify_rep, verify_witness};
use serde_json::json;

#[derive(Parser)]
#[command(name = "kronjord", version, about = "Constant Jordan type representations of Kronecker quivers")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether [1]^c[2]^d is realizable and by which construction.
    Classify {
        #[arg(long)]
        r: usize,
        /// Jordan type as C,D.
        #[arg(long, value_parser = pair)]
        jordan: (usize, usize),
    },
    /// Build and certify a witness.
    Realize {
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = pair)]
        jordan: (usize, usize),
        #[arg(long, value_enum, default_value = "ekp")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a representation or witness file.
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "ekp,cjt,indec,restriction")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Root table for dimension vectors with entries up to MAX.
    Roots {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max: usize,
    },
    /// Apply a power of the Coxeter matrix to a dimension vector.
    Coxeter {
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = signed_pair)]
        dim: (i128, i128),
        #[arg(long, allow_hyphen_values = true)]
        power: i64,
    },
    /// Push a tree representation down to the Kronecker quiver.
    Pushdown {
        treefile: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ekp,
    Eip,
}

fn pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected two comma-separated numbers")?;
    Ok((x.trim().parse().map_err(|e| format!("{e}"))?, y.trim().parse().map_err(|e| format!("{e}"))?))
}

fn signed_pair(s: &str) -> std::result::Result<(i128, i128), String> {
    let (x, y) = s.split_once(',').ok_or("expected two comma-separated numbers")?;
    Ok((x.trim().parse().map_err(|e| format!("{e}"))?, y.trim().parse().map_err(|e| format!("{e}"))?))
}

/// Result of a command: text to print and whether the input was rejected.
struct Outcome {
    text: String,
    rejected: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, rejected: false }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn emit(text: String, out: Option<&Path>) -> Result<String> {
    match out {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {}", path.display()))
        }
        None => Ok(text),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Classify { r, jordan: (c, d) } => {
            let v = classify(r, c, d)?;
            let route = v.route.map(|x| x.name());
            let failed = v.failed.map(|x| x.to_string());
            let text = if cli.json {
                json::to_string(&json!({
                    "r": r, "jordan": {"c": c, "d": d}, "dim": [v.dim.a, v.dim.b],
                    "form_value": v.form_value.to_string(), "accepted": v.accepted,
                    "route": route, "failed_clause": failed,
                }))
            } else if v.accepted {
                format!("[1]^{c}[2]^{d} r={r}: accepted, dim {}, q = {}, route {}", v.dim, v.form_value, route.unwrap_or("-"))
            } else {
                format!("[1]^{c}[2]^{d} r={r}: rejected, clause {} fails", failed.unwrap_or_default())
            };
            Ok(Outcome { text, rejected: !v.accepted })
        }
        Command::Realize { r, jordan: (c, d), mode, seed, out } => {
            let mode = match mode {
                ModeArg::Ekp => Mode::Ekp,
                ModeArg::Eip => Mode::Eip,
            };
            match realize(r, c, d, mode, seed) {
                Ok(w) => Ok(Outcome::ok(emit(json::to_string(&WitnessJson::from(&w)), out.as_deref())?)),
                Err(Error::Rejected(msg)) => Ok(Outcome { text: msg, rejected: true }),
                Err(e) => Err(e),
            }
        }
        Command::Verify { file, checks, samples, seed } => {
            let text = read(&file)?;
            let value: serde_json::Value = json::from_str(&text)?;
            let report = if value.get("rep").is_some() {
                let w: WitnessJson = json::from_str(&text)?;
                verify_witness(&w.to_witness()?, &checks, samples, seed)?
            } else {
                let m: RepJson = json::from_str(&text)?;
                verify_rep(&m.to_rep()?, &checks, samples, seed)?
            };
            if !report.passed() {
                let failed: Vec<&str> = report.checks.iter().filter(|c| !c.verdict).map(|c| c.name.as_str()).collect();
                eprintln!("failed checks: {}", failed.join(", "));
                let _ = writeln!(std::io::stdout(), "{}", json::to_string(&report));
                return Err(Error::Certificate("verification failed".into()));
            }
            Ok(Outcome::ok(json::to_string(&report)))
        }
        Command::Roots { r, max } => {
            let mut rows = Vec::new();
            for a in 0..=max {
                for b in 0..=max {
                    let v = DimVector::new(a, b);
                    if v.is_zero() {
                        continue;
                    }
                    let class = classify_root(r, v)?;
                    let ijt = xi_inverse(v).ok().map(|t| is_in_ijt(r, t).member);
                    rows.push((v, class, ijt));
                }
            }
            let text = if cli.json {
                let table: Vec<_> = rows
                    .iter()
                    .map(|(v, class, ijt)| {
                        json!({"dim": [v.a, v.b], "kind": class.kind.to_string(),
                               "position": class.position.to_string(), "ijt": ijt})
                    })
                    .collect();
                json::to_string(&table)
            } else {
                let mut lines = vec![format!("{:>9}  {:<11} {:<14} ijt", "dim", "kind", "position")];
                for (v, class, ijt) in &rows {
                    let ijt = ijt.map_or("-", |m| if m { "yes" } else { "no" });
                    lines.push(format!("{:>9}  {:<11} {:<14} {ijt}", v.to_string(), class.kind.to_string(), class.position.to_string()));
                }
                lines.join("\n")
            };
            Ok(Outcome::ok(text))
        }
        Command::Coxeter { r, dim: (a, b), power } => {
            let [x, y] = coxeter_apply(r, [a, b], power)?;
            let text = if cli.json {
                json::to_string(&json!({"r": r, "power": power, "input": [a.to_string(), b.to_string()], "output": [x.to_string(), y.to_string()]}))
            } else {
                format!("({x},{y})")
            };
            Ok(Outcome::ok(text))
        }
        Command::Pushdown { treefile, out } => {
            let tree: TreeJson = json::from_str(&read(&treefile)?)?;
            let m = push_down(&tree.to_tree()?)?;
            Ok(Outcome::ok(emit(json::to_string(&RepJson::from(&m)), out.as_deref())?))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome { text, rejected }) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(if rejected { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
