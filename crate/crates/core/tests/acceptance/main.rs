//! One line per acceptance criterion.

#[path = "../common/mod.rs"]
mod common;

mod builds;
mod chains;
mod examples;
mod fig3;
mod fig7;
mod perf;
mod sweep;

use std::time::Instant;

fn criterion4() -> Result<String, String> {
    let start = Instant::now();
    let r = sweep::run();
    let took = start.elapsed();
    let summary = format!(
        "{} theories, {} questions, {} disagreements, {} unverified, {:.1?}",
        r.theories,
        r.questions,
        r.disagreements.len(),
        r.unverified.len(),
        took
    );
    if r.disagreements.is_empty() && r.unverified.is_empty() && took.as_secs() < 300 {
        return Ok(summary);
    }
    let mut lines = vec![summary];
    lines.extend(r.disagreements.iter().map(|d| format!("    disagreement: {d}")));
    lines.extend(r.unverified.iter().map(|d| format!("    no countermodel: {d}")));
    Err(lines.join("\n"))
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 7] = [
        ("worked derivations", examples::run),
        ("running example", fig7::run),
        ("finite-only rules", fig3::run),
        ("bounded sweep", criterion4),
        ("random model builds", builds::run),
        ("chains", chains::run),
        ("performance", perf::run),
    ];
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => {
                passed += 1;
                println!("PASS {} {name}: {detail}", i + 1);
            }
            Err(detail) => println!("FAIL {} {name}: {detail}", i + 1),
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
}
