use serde::Serialize;

use super::atoms::Atoms;
use super::saturate::Saturation;
use crate::syntax::{Form, Noun};

/// The order-like relations read off a consistent saturation.
///
/// `leq(x,y)`: ∀(x,y) derived. `leqc(x,y)`: ∃≥(y,x) derived.
/// `ltmore(x,y)`: ∃>(y,x) derived.
#[derive(Clone, Debug)]
pub struct DerivedRelations {
    atoms: Atoms,
    leq: Vec<bool>,
    leqc: Vec<bool>,
    ltmore: Vec<bool>,
}

/// Pairwise listing of every relation, for display and JSON.
#[derive(Clone, Debug, Serialize)]
pub struct RelationTables {
    pub leq: Vec<(Noun, Noun)>,
    pub leqc: Vec<(Noun, Noun)>,
    pub ltc: Vec<(Noun, Noun)>,
    pub ltmore: Vec<(Noun, Noun)>,
    pub equiv: Vec<(Noun, Noun)>,
    pub equivc_classes: Vec<Vec<Noun>>,
}

impl DerivedRelations {
    pub(crate) fn from_saturation(sat: &Saturation) -> DerivedRelations {
        let atoms = sat.atoms().clone();
        let n = atoms.len();
        let mut leq = vec![false; n * n];
        let mut leqc = vec![false; n * n];
        let mut ltmore = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = sat.has(Form::All, x, y);
                leqc[x * n + y] = sat.has(Form::AtLeast, y, x);
                ltmore[x * n + y] = sat.has(Form::More, y, x);
            }
        }
        DerivedRelations {
            atoms,
            leq,
            leqc,
            ltmore,
        }
    }

    pub fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn leq_i(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn leqc_i(&self, x: usize, y: usize) -> bool {
        self.leqc[x * self.len() + y]
    }

    pub fn ltmore_i(&self, x: usize, y: usize) -> bool {
        self.ltmore[x * self.len() + y]
    }

    pub fn equiv_i(&self, x: usize, y: usize) -> bool {
        self.leq_i(x, y) && self.leq_i(y, x)
    }

    pub fn equivc_i(&self, x: usize, y: usize) -> bool {
        self.leqc_i(x, y) && self.leqc_i(y, x)
    }

    pub fn ltc_i(&self, x: usize, y: usize) -> bool {
        self.leqc_i(x, y) && !self.leqc_i(y, x)
    }

    fn pair(&self, x: &Noun, y: &Noun) -> Option<(usize, usize)> {
        Some((self.atoms.index_of(x)?, self.atoms.index_of(y)?))
    }

    pub fn leq(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.leq_i(a, b))
    }

    pub fn leqc(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.leqc_i(a, b))
    }

    pub fn ltc(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.ltc_i(a, b))
    }

    pub fn ltmore(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.ltmore_i(a, b))
    }

    pub fn equiv(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.equiv_i(a, b))
    }

    pub fn equivc(&self, x: &Noun, y: &Noun) -> bool {
        self.pair(x, y).is_some_and(|(a, b)| self.equivc_i(a, b))
    }

    /// The ≡c-class of every atom, as sorted index lists in order of least member.
    pub fn equivc_classes(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: Vec<usize> = (x..n).filter(|&y| self.equivc_i(x, y)).collect();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn tables(&self) -> RelationTables {
        let n = self.len();
        let pairs = |f: &dyn Fn(usize, usize) -> bool| {
            let mut v = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if f(x, y) {
                        v.push((self.atoms.noun(x).clone(), self.atoms.noun(y).clone()));
                    }
                }
            }
            v
        };
        RelationTables {
            leq: pairs(&|x, y| self.leq_i(x, y)),
            leqc: pairs(&|x, y| self.leqc_i(x, y)),
            ltc: pairs(&|x, y| self.ltc_i(x, y)),
            ltmore: pairs(&|x, y| self.ltmore_i(x, y)),
            equiv: pairs(&|x, y| x != y && self.equiv_i(x, y)),
            equivc_classes: self
                .equivc_classes()
                .into_iter()
                .map(|c| c.into_iter().map(|i| self.atoms.noun(i).clone()).collect())
                .collect(),
        }
    }
}

impl RelationTables {
    /// Text tables: one line per relation listing its non-reflexive pairs.
    pub fn render(&self) -> String {
        let fmt_pairs = |v: &[(Noun, Noun)], sym: &str| {
            v.iter()
                .filter(|(x, y)| x != y)
                .map(|(x, y)| format!("{x} {sym} {y}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let classes = self
            .equivc_classes
            .iter()
            .map(|c| {
                let names: Vec<String> = c.iter().map(Noun::to_string).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "≤     : {}\n≤c    : {}\n<c    : {}\n<more : {}\n≡     : {}\n≡c    : {}\n",
            fmt_pairs(&self.leq, "≤"),
            fmt_pairs(&self.leqc, "≤c"),
            fmt_pairs(&self.ltc, "<c"),
            fmt_pairs(&self.ltmore, "<more"),
            fmt_pairs(&self.equiv, "≡"),
            classes
        )
    }
}
