//! Models of a theory that falsify a given non-consequence.
//!
//! Each sentence form has its own way of steering the model construction. Every
//! result passes [`verify_countermodel`] before it is returned. If the steered
//! construction does not verify, the model of Γ ∪ {φ̄} is built instead and the
//! case is reported as a fallback.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::modelbuild::{BuildError, BuildOutput, Context};
use crate::partition::{
    compute_q, listing_placing_late, refined_partition, reorder_for_equal_size, standard_partition,
    Class, Partition,
};
use crate::prover::Atoms;
use crate::semantics::{BlockSet, Cardinal, SemanticsError, SymbolicModel};
use crate::syntax::{Form, Noun, Sentence};

/// Which construction produced a countermodel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    AtLeastEmptySource,
    AtLeastLateTarget,
    AtLeastHalfStep,
    MoreStandard,
    MoreEmptySource,
    MoreSameClass,
    MoreSourceFirst,
    MoreReordered,
    AllStandard,
    AllPointBelow,
    AllPointAbove,
    AllPointMixed,
    SomeStandard,
    SomeModified,
    Fallback,
}

impl Case {
    pub fn describe(self) -> &'static str {
        match self {
            Case::AtLeastEmptySource => "at-least: source refined into small and left empty",
            Case::AtLeastLateTarget => {
                "at-least: source refined into small; target class listed late and forced larger"
            }
            Case::AtLeastHalfStep => "at-least: source refined into small; half step forced larger",
            Case::MoreStandard => "more: standard model, target has full size",
            Case::MoreEmptySource => "more: source is small and empty",
            Case::MoreSameClass => "more: source and target share a class",
            Case::MoreSourceFirst => "more: source class listed before target class",
            Case::MoreReordered => "more: listing reordered so source and target get equal size",
            Case::AllStandard => "all: standard model already falsifies the goal",
            Case::AllPointBelow => "all: one point added above the subject",
            Case::AllPointAbove => "all: one point added above the complement of the predicate",
            Case::AllPointMixed => "all: one point added above the subject and the complement of the predicate",
            Case::SomeStandard => "some: standard model keeps the two nouns apart",
            Case::SomeModified => "some: small noun folded into the complement of the large one",
            Case::Fallback => "fallback: model of the theory plus the negated goal",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountermodelError {
    #[error("the theory is inconsistent")]
    Inconsistent,
    #[error("{0} follows from the theory")]
    Entailed(Sentence),
    #[error("no countermodel: {0}")]
    Failed(String),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Outcome of checking a candidate countermodel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub gamma_failures: Vec<Sentence>,
    pub phi_true: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.gamma_failures.is_empty() && !self.phi_true
    }

    pub fn render(&self) -> String {
        if self.passed() {
            return "pass".into();
        }
        let mut parts = Vec::new();
        if self.phi_true {
            parts.push("φ is true".to_string());
        }
        if !self.gamma_failures.is_empty() {
            let v: Vec<String> = self.gamma_failures.iter().map(|s| s.symbolic()).collect();
            parts.push(format!("false in Γ: {}", v.join(", ")));
        }
        format!("fail: {}", parts.join("; "))
    }
}

pub fn verify_countermodel(
    m: &SymbolicModel,
    gamma: &[Sentence],
    phi: &Sentence,
) -> Result<VerifyReport, SemanticsError> {
    Ok(VerifyReport {
        gamma_failures: m.failures(gamma)?,
        phi_true: m.satisfies(phi)?,
    })
}

#[derive(Clone, Debug)]
pub struct Countermodel {
    pub model: SymbolicModel,
    pub case: Case,
    pub report: VerifyReport,
    /// Why the steered construction was abandoned, for fallbacks.
    pub note: Option<String>,
}

/// A verified model of `gamma` in which `phi` is false.
pub fn countermodel(gamma: &[Sentence], phi: &Sentence) -> Result<Countermodel, CountermodelError> {
    let ctx = Context::new(gamma, [phi.left.clone(), phi.right.clone()]).map_err(|e| match e {
        BuildError::Inconsistent => CountermodelError::Inconsistent,
        other => CountermodelError::Failed(other.to_string()),
    })?;
    if ctx.saturation().entails(phi) {
        return Err(CountermodelError::Entailed(phi.clone()));
    }
    let note = match steer(&ctx, phi) {
        Ok((model, case)) => {
            let report = verify_countermodel(&model, gamma, phi)?;
            if report.passed() {
                return Ok(Countermodel {
                    model,
                    case,
                    report,
                    note: None,
                });
            }
            format!("{case}: {}", report.render())
        }
        Err(why) => why,
    };
    let mut with_neg = gamma.to_vec();
    with_neg.push(phi.negate());
    let out = crate::modelbuild::build_model(&with_neg, [])
        .map_err(|e| CountermodelError::Failed(format!("{note}; fallback: {e}")))?;
    let report = verify_countermodel(&out.model, gamma, phi)?;
    if !report.passed() {
        return Err(CountermodelError::Failed(format!(
            "{note}; fallback: {}",
            report.render()
        )));
    }
    Ok(Countermodel {
        model: out.model,
        case: Case::Fallback,
        report,
        note: Some(note),
    })
}

/// A model of Γ ∪ {φ̄}, obtained from a countermodel of φ.
pub fn negation_model(gamma: &[Sentence], phi: &Sentence) -> Result<SymbolicModel, CountermodelError> {
    let cm = countermodel(gamma, phi)?;
    if !cm.model.satisfies(&phi.negate())? {
        return Err(CountermodelError::Failed("negated goal is false".into()));
    }
    Ok(cm.model)
}

fn steer(ctx: &Context, phi: &Sentence) -> Result<(SymbolicModel, Case), String> {
    let atoms = ctx.relations().atoms();
    let x = atoms.index_of(&phi.left).expect("goal nouns are atoms");
    let y = atoms.index_of(&phi.right).expect("goal nouns are atoms");
    match phi.form {
        Form::AtLeast => at_least(ctx, x, y).map(|(o, c)| (o.model, c)),
        Form::More => more(ctx, x, y).map(|(o, c)| (o.model, c)),
        Form::All => all(ctx, x, y),
        Form::Some => some(ctx, x, y),
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn noun(ctx: &Context, i: usize) -> Noun {
    ctx.relations().atoms().noun(i).clone()
}

/// |x| < |y|: refine so x is small, then make y's class strictly larger.
fn at_least(ctx: &Context, x: usize, y: usize) -> Result<(BuildOutput, Case), String> {
    let rels = ctx.relations();
    let part = refined_partition(rels, &noun(ctx, x)).map_err(err)?;
    let q = compute_q(ctx.saturation(), &part);
    let y_class = part.class_i(y);
    let mut plan = ctx.plan_for(part).map_err(err)?;
    let case = if !q.contains(&x) {
        Case::AtLeastEmptySource
    } else if y_class == Class::Small {
        if !q.contains(&y) {
            return Err("at-least: target is small and empty".into());
        }
        let classes = ctx.q_classes(&plan.partition);
        plan.listing = listing_placing_late(classes, rels, y).map_err(err)?;
        let pos = plan.listing.position_of(y).expect("y is listed");
        plan.overrides.insert(pos + 1);
        Case::AtLeastLateTarget
    } else {
        plan.overrides.insert(plan.listing.len() + 1);
        Case::AtLeastHalfStep
    };
    Ok((ctx.build(plan).map_err(err)?, case))
}

/// |x| ≤ |y|.
fn more(ctx: &Context, x: usize, y: usize) -> Result<(BuildOutput, Case), String> {
    let rels = ctx.relations();
    let std = standard_partition(rels).map_err(err)?;
    let part = match (std.class_i(x), std.class_i(y)) {
        (Class::Small, Class::Small) => std,
        (Class::Half, Class::Small) => refined_partition(rels, &noun(ctx, x)).map_err(err)?,
        (Class::Large, Class::Small) => {
            return Err("more: large source over small target".into());
        }
        _ => {
            let plan = ctx.plan_for(std).map_err(err)?;
            return Ok((ctx.build(plan).map_err(err)?, Case::MoreStandard));
        }
    };
    let q = compute_q(ctx.saturation(), &part);
    let mut plan = ctx.plan_for(part).map_err(err)?;
    let case = if !q.contains(&x) {
        Case::MoreEmptySource
    } else if !q.contains(&y) {
        return Err("more: target is small and empty".into());
    } else if rels.equivc_i(x, y) {
        Case::MoreSameClass
    } else if !rels.leqc_i(y, x) {
        let classes = ctx.q_classes(&plan.partition);
        plan.listing = listing_placing_late(classes, rels, y).map_err(err)?;
        Case::MoreSourceFirst
    } else {
        let (listing, pos) = reorder_for_equal_size(&plan.listing, rels, x, y).map_err(err)?;
        plan.listing = listing;
        plan.overrides.insert(pos + 1);
        Case::MoreReordered
    };
    Ok((ctx.build(plan).map_err(err)?, case))
}

/// x ⊄ y: add one point that lies in x and not in y.
fn all(ctx: &Context, x: usize, y: usize) -> Result<(SymbolicModel, Case), String> {
    let rels = ctx.relations();
    let out = ctx.build(ctx.standard_plan().map_err(err)?).map_err(err)?;
    let m = &out.model;
    let phi = Sentence::all(noun(ctx, x), noun(ctx, y));
    if !m.satisfies(&phi).map_err(err)? {
        return Ok((out.model, Case::AllStandard));
    }
    let part = &out.plan.partition;
    let yc = Atoms::comp(y);
    let (case, seeds) = match (part.class_i(x), part.class_i(y)) {
        (Class::Small | Class::Half, Class::Small | Class::Half) => (Case::AllPointBelow, vec![x]),
        (Class::Half | Class::Large, Class::Half | Class::Large) => (Case::AllPointAbove, vec![yc]),
        (Class::Small, Class::Large) => (Case::AllPointMixed, vec![x, yc]),
        _ => return Err("all: unexpected classes".into()),
    };
    let n = rels.len();
    let mut has = vec![false; n];
    let add_up = |has: &mut Vec<bool>, p: usize| -> Result<(), String> {
        for z in (0..n).filter(|&z| rels.leq_i(p, z)) {
            if has[Atoms::comp(z)] {
                return Err(format!("all: point would enter both {} and its complement", noun(ctx, z)));
            }
            has[z] = true;
        }
        Ok(())
    };
    for p in seeds {
        add_up(&mut has, p)?;
    }
    if !has[y] && !has[yc] {
        add_up(&mut has, yc)?;
    }
    let empty = |p: usize| m.card_of(&noun(ctx, p)).map(|c| c.is_zero()).unwrap_or(true);
    for p in (0..n).step_by(2) {
        if has[p] || has[p + 1] {
            continue;
        }
        let pick = if empty(p) || rels.leq_i(p, p + 1) { p + 1 } else { p };
        add_up(&mut has, pick)?;
    }
    let mut s = m.structure().clone();
    let star = s.add_block("*", Cardinal::ONE);
    for (z, &inside) in has.iter().enumerate() {
        if inside {
            s.interp.get_mut(&noun(ctx, z)).expect("atom interpreted").insert(star);
        }
    }
    let grown = SymbolicModel::new(s, m.mode()).map_err(err)?;
    for a in 0..n {
        for b in 0..n {
            for form in [Form::AtLeast, Form::More] {
                let s = Sentence::new(form, noun(ctx, a), noun(ctx, b));
                if m.satisfies(&s).map_err(err)? != grown.satisfies(&s).map_err(err)? {
                    return Err(format!("all: the added point changes {}", s.symbolic()));
                }
            }
        }
    }
    Ok((grown, case))
}

/// x ∩ y = ∅.
fn some(ctx: &Context, x: usize, y: usize) -> Result<(SymbolicModel, Case), String> {
    let rels = ctx.relations();
    let std = standard_partition(rels).map_err(err)?;
    let (cx, cy) = (std.class_i(x), std.class_i(y));
    if cx != Class::Large && cy != Class::Large {
        let out = ctx.build(ctx.plan_for(std).map_err(err)?).map_err(err)?;
        return Ok((out.model, Case::SomeStandard));
    }
    let (x, y) = match (cx, cy) {
        (Class::Small, Class::Large) => (x, y),
        (Class::Large, Class::Small) => (y, x),
        _ => return Err("some: both nouns are half or large".into()),
    };
    let yc = Atoms::comp(y);
    let (out, _) = more(ctx, x, yc)?;
    let m = &out.model;
    let part: &Partition = &out.plan.partition;
    let xs: BlockSet = m.extension(&noun(ctx, x)).map_err(err)?.clone();
    let mut s = m.structure().clone();
    let n = rels.len();
    for z in (0..n).filter(|&z| part.class_i(z) != Class::Large && rels.leq_i(yc, z)) {
        let zc = Atoms::comp(z);
        if part.class_i(zc) != Class::Large && rels.leq_i(yc, zc) {
            return Err(format!("some: {} lies below both sides of a pair", noun(ctx, yc)));
        }
        let up = s.interp.get_mut(&noun(ctx, z)).expect("atom interpreted");
        up.extend(xs.iter().copied());
        let down = s.interp.get_mut(&noun(ctx, zc)).expect("atom interpreted");
        down.retain(|b| !xs.contains(b));
    }
    let modified = SymbolicModel::new(s, m.mode()).map_err(err)?;
    for p in m.nouns() {
        if m.card_of(p).map_err(err)? != modified.card_of(p).map_err(err)? {
            return Err(format!("some: the size of {p} changed"));
        }
    }
    Ok((modified, Case::SomeModified))
}
