use crate::prover::{Atoms, Saturation};
use crate::semantics::{Cardinal, Structure};
use crate::syntax::{Form, Noun, Sentence};

use super::BuildError;

/// Membership profiles of the canonical points of a class.
///
/// There is one point per derivable ∃(p,q) with p,q in `class`; the point lies in
/// every x of `profile_over` with p ≤ x or q ≤ x. Points with equal profiles are merged.
pub(crate) fn canonical_points(
    class: &[usize],
    profile_over: &[usize],
    some: impl Fn(usize, usize) -> bool,
    leq: impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (k, &p) in class.iter().enumerate() {
        for &q in &class[k..] {
            if !some(p, q) {
                continue;
            }
            let profile: Vec<usize> = profile_over
                .iter()
                .copied()
                .filter(|&x| leq(p, x) || leq(q, x))
                .collect();
            if !out.contains(&profile) {
                out.push(profile);
            }
        }
    }
    out
}

/// A finite structure over `class` for the ∀/∃ sentences in `delta`.
///
/// Every point has size 1. Two nouns of the class intersect exactly when their ∃
/// sentence follows from `delta`.
pub fn canonical_base_model(delta: &[Sentence], class: &[Noun]) -> Result<Structure, BuildError> {
    let sat = Saturation::new(delta, class.iter().flat_map(|p| [p.clone(), p.complement()]));
    if !sat.is_consistent() {
        return Err(BuildError::Inconsistent);
    }
    let atoms: &Atoms = sat.atoms();
    let mut idx: Vec<usize> = class
        .iter()
        .map(|p| atoms.index_of(p).expect("class nouns are atoms"))
        .collect();
    idx.sort_unstable();
    idx.dedup();
    let points = canonical_points(
        &idx,
        &idx,
        |p, q| sat.has(Form::Some, p, q),
        |p, x| sat.has(Form::All, p, x),
    );
    let mut s = Structure::new();
    for &x in &idx {
        s.interp.insert(atoms.noun(x).clone(), Default::default());
    }
    for (k, profile) in points.iter().enumerate() {
        let b = s.add_block((k + 1).to_string(), Cardinal::ONE);
        for &x in profile {
            s.interp.get_mut(atoms.noun(x)).unwrap().insert(b);
        }
    }
    for &p in &idx {
        for &q in &idx {
            let (a, b) = (atoms.noun(p), atoms.noun(q));
            let meet = !s.interp[a].is_disjoint(&s.interp[b]);
            if meet != sat.has(Form::Some, p, q) {
                return Err(BuildError::claim(
                    "base model exactness",
                    format!("{a} and {b}"),
                ));
            }
        }
    }
    for phi in delta {
        if phi.form == Form::All && s.interp.contains_key(&phi.left) && s.interp.contains_key(&phi.right)
        {
            if !s.satisfies(phi)? {
                return Err(BuildError::claim("base model", phi.to_string()));
            }
        }
    }
    Ok(s)
}

/// Replaces every point by a block of size `kappa`.
pub fn inflate(base: &Structure, kappa: Cardinal) -> Result<Structure, BuildError> {
    if !kappa.is_infinite() {
        return Err(BuildError::FiniteKappa(kappa));
    }
    let mut out = base.clone();
    for b in &mut out.blocks {
        b.size = kappa;
    }
    Ok(out)
}
