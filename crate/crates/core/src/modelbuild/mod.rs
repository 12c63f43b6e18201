//! Builds a model of a consistent theory from its partition and listing.
//!
//! Each listed class gets a canonical finite structure blown up to its cardinal
//! κ_i. The half nouns get one more such structure at κ_{n+1}. Every ∃ sentence of
//! the theory contributes a one-element witness block. Half pairs are then completed
//! to complements, and large nouns are complements of small ones.

mod base;
mod claims;
mod complete;
mod ladder;

pub use base::{canonical_base_model, inflate};
pub use complete::{half_completion, CompletionError};
pub use ladder::{demands_larger, KappaLadder};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::partition::{
    classes_of, compute_q, proper_listing, standard_partition, Class, Listing, ListingError,
    Partition, PartitionError,
};
use crate::prover::{relations_of, DerivedRelations, Saturation};
use crate::semantics::{BlockSet, Cardinal, Mode, SemanticsError, Structure, SymbolicModel};
use crate::syntax::{Form, Noun, Sentence};

use claims::View;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("the theory is inconsistent")]
    Inconsistent,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Listing(#[from] ListingError),
    #[error("invalid build plan: {0}")]
    Plan(String),
    #[error("construction property `{claim}` fails: {detail}")]
    Claim { claim: &'static str, detail: String },
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error("the built model falsifies {}", list(.0))]
    Unsatisfied(Vec<Sentence>),
    #[error("cannot inflate to the finite size {0}")]
    FiniteKappa(Cardinal),
}

fn list(v: &[Sentence]) -> String {
    v.iter().map(|s| s.symbolic()).collect::<Vec<_>>().join(", ")
}

impl BuildError {
    pub(crate) fn claim(claim: &'static str, detail: String) -> BuildError {
        BuildError::Claim { claim, detail }
    }
}

/// The free choices of a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildPlan {
    pub partition: Partition,
    pub listing: Listing,
    /// 1-based listing positions forced to demand a larger size; `n+1` is the half step.
    pub overrides: BTreeSet<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStage {
    pub stage: String,
    pub lines: Vec<String>,
}

/// A built model together with the data that produced it.
#[derive(Clone, Debug)]
pub struct BuildOutput {
    pub model: SymbolicModel,
    pub plan: BuildPlan,
    pub ladder: KappaLadder,
    pub q: Vec<Noun>,
    pub doubled: bool,
    pub trace: Vec<TraceStage>,
}

impl BuildOutput {
    pub fn render_trace(&self) -> String {
        let mut out = String::new();
        for st in &self.trace {
            let _ = writeln!(out, "== {} ==", st.stage);
            for l in &st.lines {
                let _ = writeln!(out, "  {l}");
            }
        }
        out
    }
}

/// A consistent theory with its saturation and derived relations.
#[derive(Clone, Debug)]
pub struct Context {
    gamma: Vec<Sentence>,
    sat: Saturation,
    rels: DerivedRelations,
}

impl Context {
    /// Saturates `gamma` over its atoms plus `extra`.
    pub fn new<E: IntoIterator<Item = Noun>>(
        gamma: &[Sentence],
        extra: E,
    ) -> Result<Context, BuildError> {
        let mut seen = BTreeSet::new();
        let gamma: Vec<Sentence> = gamma.iter().filter(|s| seen.insert(*s)).cloned().collect();
        let sat = Saturation::new(&gamma, extra);
        let rels = relations_of(&sat).map_err(|_| BuildError::Inconsistent)?;
        Ok(Context { gamma, sat, rels })
    }

    pub fn gamma(&self) -> &[Sentence] {
        &self.gamma
    }

    pub fn saturation(&self) -> &Saturation {
        &self.sat
    }

    pub fn relations(&self) -> &DerivedRelations {
        &self.rels
    }

    /// The ≡c-classes of Q under `partition`.
    pub fn q_classes(&self, partition: &Partition) -> Vec<Vec<usize>> {
        classes_of(&self.rels, &compute_q(&self.sat, partition))
    }

    pub fn standard_plan(&self) -> Result<BuildPlan, BuildError> {
        let partition = standard_partition(&self.rels)?;
        self.plan_for(partition)
    }

    /// A plan with the default listing of Q for `partition` and no overrides.
    pub fn plan_for(&self, partition: Partition) -> Result<BuildPlan, BuildError> {
        let listing = proper_listing(self.q_classes(&partition), &self.rels)?;
        Ok(BuildPlan {
            partition,
            listing,
            overrides: BTreeSet::new(),
        })
    }

    fn check_plan(&self, plan: &BuildPlan) -> Result<(), BuildError> {
        if plan.partition.atoms() != self.rels.atoms() {
            return Err(BuildError::Plan("partition is over different atoms".into()));
        }
        let mut want = self.q_classes(&plan.partition);
        want.sort();
        let mut got = plan.listing.classes.clone();
        got.iter_mut().for_each(|c| c.sort_unstable());
        got.sort();
        if want != got {
            return Err(BuildError::Plan("listing does not cover the classes of Q".into()));
        }
        if !plan.listing.is_proper(&self.rels) {
            return Err(BuildError::Plan("listing is not proper".into()));
        }
        let n = plan.listing.len();
        if let Some(&p) = plan.overrides.iter().find(|&&p| p == 0 || p > n + 1) {
            return Err(BuildError::Plan(format!("override position {p} out of range")));
        }
        Ok(())
    }

    /// Runs the construction under `plan` and checks the result.
    pub fn build(&self, plan: BuildPlan) -> Result<BuildOutput, BuildError> {
        self.check_plan(&plan)?;
        let rels = &self.rels;
        let atoms = rels.atoms();
        let n_atoms = atoms.len();
        let name = |i: usize| atoms.noun(i).to_string();
        let names = |v: &[usize]| v.iter().map(|&i| name(i)).collect::<Vec<_>>().join(",");
        let part = &plan.partition;
        let listing = &plan.listing;
        let mut trace = vec![
            TraceStage {
                stage: "partition".into(),
                lines: part.render().lines().map(str::to_string).collect(),
            },
            TraceStage {
                stage: "listing".into(),
                lines: vec![listing.render(rels)],
            },
        ];

        let ladder = KappaLadder::compute(rels, part, listing, &plan.overrides);
        claims::ladder_monotone(&ladder)?;
        trace.push(TraceStage {
            stage: "ladder".into(),
            lines: ladder.render().lines().map(str::to_string).collect(),
        });

        let half = part.indices(Class::Half);
        let small_half: Vec<usize> = (0..n_atoms)
            .filter(|&i| part.class_i(i) != Class::Large)
            .collect();
        let q = compute_q(&self.sat, part);

        // Half nouns are made nonempty even when Γ does not force it.
        let plus = if half.is_empty() {
            self.sat.clone()
        } else {
            let extra: Vec<Sentence> = half
                .iter()
                .map(|&h| Sentence::some(atoms.noun(h).clone(), atoms.noun(h).clone()))
                .collect();
            let s = Saturation::new(self.gamma.iter().chain(&extra), atoms.nouns().iter().cloned());
            if !s.is_consistent() {
                return Err(BuildError::claim(
                    "half nouns can be nonempty",
                    names(&half),
                ));
            }
            s
        };
        let some = |p: usize, q: usize| plus.has(Form::Some, p, q);
        let leq = |p: usize, x: usize| rels.leq_i(p, x);

        let mut s = Structure::new();
        let mut ext: Vec<BlockSet> = vec![BlockSet::new(); n_atoms];
        let mut parts: Vec<(String, &[usize], Cardinal)> = listing
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("s{}", i + 1), c.as_slice(), ladder.kappa(i + 1)))
            .collect();
        parts.push(("h".into(), half.as_slice(), ladder.top()));
        for (label, class, kappa) in parts {
            let points = base::canonical_points(class, &small_half, some, leq);
            let mut lines = vec![format!("class {{{}}}, κ = {kappa}", names(class))];
            for (k, profile) in points.iter().enumerate() {
                let id = format!("{label}.{}", k + 1);
                let b = s.add_block(id.clone(), kappa);
                for &x in profile {
                    ext[x].insert(b);
                }
                let inside: Vec<usize> = profile.iter().copied().filter(|x| class.contains(x)).collect();
                lines.push(format!("{id} ∈ {{{}}}", names(&inside)));
            }
            trace.push(TraceStage {
                stage: format!("base {label}"),
                lines,
            });
        }

        let mut lines = Vec::new();
        let witnesses = self.gamma.iter().filter(|phi| phi.form == Form::Some);
        for (k, phi) in witnesses.enumerate() {
            let (a, b) = (self.index(&phi.left), self.index(&phi.right));
            let id = format!("w{}", k + 1);
            let blk = s.add_block(id.clone(), Cardinal::ONE);
            for &x in &small_half {
                if leq(a, x) || leq(b, x) {
                    ext[x].insert(blk);
                }
            }
            lines.push(format!("{id} = {}", phi.symbolic()));
        }
        if s.universe_size() < ladder.top() {
            s.add_block("pad", ladder.top());
            lines.push(format!("pad = {}", ladder.top()));
        }
        trace.push(TraceStage {
            stage: "combine".into(),
            lines,
        });

        {
            let v = View {
                rels,
                partition: part,
                listing,
                ladder: &ladder,
                structure: &s,
                ext: &ext,
            };
            claims::empty_outside_q(&v, &q)?;
            claims::intersections_derivable(&v, &plus, &small_half)?;
        }

        self.complete_half(&s, &half, &mut ext)?;
        let top = s.universe_size();
        let needs_copy = small_half.iter().any(|&y| {
            let rest: BlockSet = s.all_blocks().difference(&ext[y]).copied().collect();
            s.size_of(&rest) < top
                || (part.class_i(y) == Class::Small && s.size_of(&ext[y]) == top)
        });
        if needs_copy {
            let count = s.blocks.len();
            for k in 0..count {
                let b = s.blocks[k].clone();
                s.add_block(format!("copy.{}", b.id), b.size);
            }
            self.complete_half(&s, &half, &mut ext)?;
        }
        trace.push(TraceStage {
            stage: "half completion".into(),
            lines: half
                .iter()
                .map(|&h| format!("{} = {}", name(h), self.block_names(&s, &ext[h])))
                .chain(needs_copy.then(|| "universe doubled".to_string()))
                .collect(),
        });

        let all = s.all_blocks();
        for x in part.indices(Class::Large) {
            ext[x] = all.difference(&ext[atoms_comp(x)]).copied().collect();
        }
        for (i, set) in ext.iter().enumerate() {
            s.interp.insert(atoms.noun(i).clone(), set.clone());
        }

        {
            let v = View {
                rels,
                partition: part,
                listing,
                ladder: &ladder,
                structure: &s,
                ext: &ext,
            };
            claims::empty_outside_q(&v, &q)?;
            claims::subsets_preserved(&v)?;
            claims::class_cardinalities(&v)?;
            claims::intersections_derivable(&v, &self.sat, &part.indices(Class::Small))?;
            claims::large_cardinalities(&v)?;
            claims::aleph_bound(&v)?;
        }

        let model = SymbolicModel::new(s, Mode::Infinite)?;
        let failures = model.failures(&self.gamma)?;
        if !failures.is_empty() {
            return Err(BuildError::Unsatisfied(failures));
        }
        if model.nouns().any(|p| {
            let c = model.card_of(p).unwrap();
            !c.is_zero() && !c.is_infinite()
        }) {
            return Err(BuildError::claim("nonempty means infinite", String::new()));
        }
        Ok(BuildOutput {
            model,
            q: q.iter().map(|&i| atoms.noun(i).clone()).collect(),
            plan,
            ladder,
            doubled: needs_copy,
            trace,
        })
    }

    fn index(&self, p: &Noun) -> usize {
        self.rels.atoms().index_of(p).expect("nouns of Γ are atoms")
    }

    fn block_names(&self, s: &Structure, set: &BlockSet) -> String {
        let v: Vec<&str> = set.iter().map(|&b| s.blocks[b].id.as_str()).collect();
        format!("{{{}}}", v.join(", "))
    }

    fn complete_half(
        &self,
        s: &Structure,
        half: &[usize],
        ext: &mut [BlockSet],
    ) -> Result<(), BuildError> {
        if half.is_empty() {
            return Ok(());
        }
        let atoms = self.rels.atoms();
        let nouns: Vec<Noun> = half.iter().map(|&h| atoms.noun(h).clone()).collect();
        let seeds: BTreeMap<Noun, BlockSet> = half
            .iter()
            .map(|&h| (atoms.noun(h).clone(), ext[h].clone()))
            .collect();
        let done = half_completion(&s.all_blocks(), &nouns, &seeds, |a, b| self.rels.leq(a, b))?;
        for &h in half {
            ext[h] = done[atoms.noun(h)].clone();
        }
        Ok(())
    }
}

fn atoms_comp(i: usize) -> usize {
    crate::prover::Atoms::comp(i)
}

/// Builds the standard model of `gamma`, interpreting also the nouns in `extra`.
pub fn build_model<E: IntoIterator<Item = Noun>>(
    gamma: &[Sentence],
    extra: E,
) -> Result<BuildOutput, BuildError> {
    let ctx = Context::new(gamma, extra)?;
    let plan = ctx.standard_plan()?;
    ctx.build(plan)
}
