use std::io::{Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use syllogistic::countermodel::{countermodel, CountermodelError};
use syllogistic::modelbuild::{build_model, BuildError};
use syllogistic::oracle::{cross_check, OracleBounds, OracleVerdict};
use syllogistic::partition::{refined_partition, standard_partition};
use syllogistic::prover::{self, Saturation};
use syllogistic::{atoms_of, parse, render, Noun, Sentence, TheoryFile};

/// Syllogistic logic with cardinality comparisons over infinite sets.
#[derive(Parser)]
#[command(name = "syl", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Syntax check and normalized echo.
    Parse { theory: PathBuf },
    /// Decide whether the theory derives the goal.
    Prove { theory: PathBuf, goal: String },
    /// Decide whether the theory is consistent.
    Consistent { theory: PathBuf },
    /// Build a model of a consistent theory.
    Model {
        theory: PathBuf,
        /// Print the construction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Build a model of the theory in which the goal is false.
    Countermodel { theory: PathBuf, goal: String },
    /// Print the derived comparison relations.
    Relations { theory: PathBuf },
    /// Print the small/half/large partition.
    Partition {
        theory: PathBuf,
        /// Refine toward this noun.
        #[arg(long)]
        refine: Option<String>,
    },
    /// Bounded semantic check of the goal, cross-checked with the prover.
    Oracle {
        theory: PathBuf,
        goal: String,
        #[arg(long, default_value_t = 2)]
        max_aleph: u32,
        /// Comma-separated finite block sizes.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        finite: Vec<u64>,
    },
}

/// A failed run: exit code 2 for bad input, 3 for internal failures.
struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn internal(msg: impl Into<String>) -> Failure {
    Failure { code: 3, msg: msg.into() }
}

struct Output {
    json: bool,
}

impl Output {
    /// Write errors (a closed pipe, say) are ignored.
    fn emit(&self, text: &str, value: Value) {
        let mut body = if self.json {
            serde_json::to_string_pretty(&value).expect("json value")
        } else {
            text.to_string()
        };
        if !body.ends_with('\n') {
            body.push('\n');
        }
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn load(path: &Path) -> Result<TheoryFile, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    let file = parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    for w in &file.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(file)
}

fn goal(text: &str) -> Result<Sentence, Failure> {
    Sentence::parse(text).map_err(|e| usage(format!("goal: {e}")))
}

fn build_failure(e: BuildError) -> Failure {
    match e {
        BuildError::Inconsistent | BuildError::Partition(_) | BuildError::Listing(_) => {
            Failure { code: 1, msg: e.to_string() }
        }
        other => internal(other.to_string()),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let out = Output { json: cli.json };
    match cli.cmd {
        Cmd::Parse { theory } => {
            let file = load(&theory)?;
            out.emit(
                &render(&file),
                json!({ "sentences": file.sentences, "warnings": file.warnings }),
            );
            Ok(0)
        }
        Cmd::Prove { theory, goal: g } => {
            let gamma = load(&theory)?.sentences;
            let phi = goal(&g)?;
            if let Some(tree) = prover::proof_of(&gamma, &phi) {
                out.emit(
                    &format!("YES\n{}", tree.render()),
                    json!({ "verdict": "yes", "goal": phi, "proof": tree }),
                );
                return Ok(0);
            }
            match countermodel(&gamma, &phi) {
                Ok(cm) => out.emit(
                    &format!("NO\ncase: {}\n{}", cm.case.describe(), cm.model.pretty()),
                    json!({
                        "verdict": "no",
                        "goal": phi,
                        "case": cm.case,
                        "countermodel": cm.model.to_record(),
                    }),
                ),
                Err(CountermodelError::Failed(why)) => out.emit(
                    &format!("NO\nno countermodel constructed: {why}\n"),
                    json!({ "verdict": "no", "goal": phi, "countermodel": null, "note": why }),
                ),
                Err(e) => return Err(internal(e.to_string())),
            }
            Ok(1)
        }
        Cmd::Consistent { theory } => {
            let gamma = load(&theory)?.sentences;
            let sat = Saturation::new(&gamma, []);
            match sat.contradiction() {
                None => {
                    out.emit("CONSISTENT\n", json!({ "consistent": true }));
                    Ok(0)
                }
                Some(tree) => {
                    out.emit(
                        &format!("INCONSISTENT\n{}", tree.render()),
                        json!({ "consistent": false, "proof": tree }),
                    );
                    Ok(1)
                }
            }
        }
        Cmd::Model { theory, trace } => {
            let gamma = load(&theory)?.sentences;
            let built = build_model(&gamma, []).map_err(build_failure)?;
            let mut text = String::new();
            if trace {
                text.push_str(&built.render_trace());
            }
            text.push_str(&built.model.pretty());
            let mut value = json!({
                "model": built.model.to_record(),
                "partition": built.plan.partition.record(),
                "q": built.q,
                "ladder": built.ladder,
                "doubled": built.doubled,
            });
            if trace {
                value["trace"] = to_value(&built.trace);
            }
            out.emit(&text, value);
            Ok(0)
        }
        Cmd::Countermodel { theory, goal: g } => {
            let gamma = load(&theory)?.sentences;
            let phi = goal(&g)?;
            match countermodel(&gamma, &phi) {
                Ok(cm) => {
                    let mut text = format!("case: {}\n", cm.case.describe());
                    if let Some(note) = &cm.note {
                        text.push_str(&format!("note: {note}\n"));
                    }
                    text.push_str(&format!("check: {}\n", cm.report.render()));
                    text.push_str(&cm.model.pretty());
                    out.emit(
                        &text,
                        json!({
                            "goal": phi,
                            "case": cm.case,
                            "note": cm.note,
                            "report": cm.report,
                            "model": cm.model.to_record(),
                        }),
                    );
                    Ok(0)
                }
                Err(e @ (CountermodelError::Inconsistent
                | CountermodelError::Entailed(_)
                | CountermodelError::Failed(_))) => {
                    out.emit(
                        &format!("NONE\n{e}\n"),
                        json!({ "goal": phi, "model": null, "reason": e.to_string() }),
                    );
                    Ok(1)
                }
                Err(e) => Err(internal(e.to_string())),
            }
        }
        Cmd::Relations { theory } => {
            let gamma = load(&theory)?.sentences;
            match prover::relations(&gamma, []) {
                Ok(rels) => {
                    let tables = rels.tables();
                    out.emit(&tables.render(), to_value(&tables));
                    Ok(0)
                }
                Err(_) => {
                    out.emit("INCONSISTENT\n", json!({ "consistent": false }));
                    Ok(1)
                }
            }
        }
        Cmd::Partition { theory, refine } => {
            let gamma = load(&theory)?.sentences;
            let target = refine
                .as_deref()
                .map(Noun::parse)
                .transpose()
                .map_err(|e| usage(format!("--refine: {e}")))?;
            let rels = match prover::relations(&gamma, target.clone()) {
                Ok(r) => r,
                Err(_) => {
                    out.emit("INCONSISTENT\n", json!({ "consistent": false }));
                    return Ok(1);
                }
            };
            let part = match &target {
                Some(t) => refined_partition(&rels, t),
                None => standard_partition(&rels),
            };
            match part {
                Ok(p) => {
                    out.emit(&p.render(), to_value(&p.record()));
                    Ok(0)
                }
                Err(e) => {
                    out.emit(&format!("NONE\n{e}\n"), json!({ "partition": null, "reason": e.to_string() }));
                    Ok(1)
                }
            }
        }
        Cmd::Oracle { theory, goal: g, max_aleph, finite } => {
            let gamma = load(&theory)?.sentences;
            let phi = goal(&g)?;
            let bounds = OracleBounds::covering(&gamma, Some(&phi))
                .with_max_aleph(max_aleph)
                .with_finite_sizes(finite);
            let check = cross_check(&gamma, &phi, &bounds).map_err(|e| usage(e.to_string()))?;
            let mut text = format!("{}\n", check.render());
            let model = check.oracle_verdict.countermodel();
            if let Some(m) = model {
                text.push_str(&m.pretty());
            }
            let atoms: Vec<String> = atoms_of(&gamma, Some(&phi)).iter().map(Noun::to_string).collect();
            out.emit(
                &text,
                json!({
                    "goal": phi,
                    "atoms": atoms,
                    "bounds": bounds,
                    "prover": check.prover_verdict,
                    "oracle": if check.oracle_verdict.is_entailed() { "entailed-up-to-bound" } else { "countermodel" },
                    "agreement": check.agreement,
                    "countermodel": model.map(|m| m.to_record()),
                }),
            );
            Ok(match check.oracle_verdict {
                OracleVerdict::EntailedUpToBound => 0,
                OracleVerdict::Countermodel(_) => 1,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
