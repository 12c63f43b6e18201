//! Criterion 7: saturation cost.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syllogistic::prover::Saturation;
use syllogistic::semantics::Block;
use syllogistic::{BlockSet, Cardinal, Mode, Noun, Sentence, SymbolicModel};

use crate::common::random_sentence;

/// `count` random sentences true in a random model, so the theory is consistent.
fn theory(rng: &mut ChaCha8Rng, bases: usize, count: usize) -> (Vec<String>, Vec<Sentence>) {
    let names: Vec<String> = (0..bases).map(|i| format!("n{i}")).collect();
    let sizes = [Cardinal::ONE, Cardinal::ALEPH_0, Cardinal::Aleph(1), Cardinal::Aleph(2)];
    let blocks: Vec<Block> = (0..12)
        .map(|i| Block::new(format!("b{i}"), sizes[rng.gen_range(0..sizes.len())]))
        .collect();
    let ext = names
        .iter()
        .map(|b| {
            let set: BlockSet = (0..blocks.len()).filter(|_| rng.gen_bool(0.4)).collect();
            (Noun::pos(b), set)
        })
        .collect();
    let m = SymbolicModel::from_positive(blocks, ext, Mode::Infinite).expect("random model");
    let mut out = Vec::new();
    while out.len() < count {
        let s = random_sentence(rng, &names);
        if m.satisfies(&s).expect("nouns are interpreted") {
            out.push(s);
        }
    }
    (names, out)
}

/// Saturates and answers 100 random goals; returns the time taken.
fn measure(rng: &mut ChaCha8Rng, bases: usize, sentences: usize) -> Duration {
    let (names, gamma) = theory(rng, bases, sentences);
    let goals: Vec<Sentence> = (0..100).map(|_| random_sentence(rng, &names)).collect();
    let atoms = names.iter().flat_map(|b| [Noun::pos(b), Noun::neg(b)]);
    let start = Instant::now();
    let sat = Saturation::new(&gamma, atoms);
    let yes = goals.iter().filter(|g| sat.entails(g)).count();
    let took = start.elapsed();
    assert!(sat.is_consistent() && yes <= goals.len());
    took
}

fn median(rng: &mut ChaCha8Rng, bases: usize, sentences: usize) -> Duration {
    let mut v: Vec<Duration> = (0..5).map(|_| measure(rng, bases, sentences)).collect();
    v.sort();
    v[2]
}

/// Least-squares slope of log(time) against log(atoms).
fn exponent(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x.ln(), b + y.ln()));
    let (mx, my) = (sx / k, sy / k);
    let num: f64 = points.iter().map(|(x, y)| (x.ln() - mx) * (y.ln() - my)).sum();
    let den: f64 = points.iter().map(|(x, _)| (x.ln() - mx).powi(2)).sum();
    num / den
}

pub fn run() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let headline = median(&mut rng, 20, 100);
    let mut points = Vec::new();
    let mut shown = Vec::new();
    for bases in [5usize, 10, 20, 40] {
        let t = median(&mut rng, bases, 5 * bases);
        shown.push(format!("{bases}:{t:.1?}"));
        points.push(((2 * bases) as f64, t.as_secs_f64().max(1e-7)));
    }
    let e = exponent(&points);
    let detail = format!("20 bases/100 sentences in {headline:.1?}; exponent {e:.2} ({})", shown.join(", "));
    if headline < Duration::from_secs(1) && e < 4.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}
