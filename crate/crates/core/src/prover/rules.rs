use std::fmt;
use std::str::FromStr;

use crate::syntax::{Form, Noun, Sentence};

/// The inference rules of the proof system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Axiom,
    Barbara,
    Some,
    Conversion,
    Darii,
    Anti,
    Zero,
    One,
    SubsetSize,
    CardTrans,
    CardExists,
    MoreAtLeast,
    MoreLeft,
    MoreRight,
    MoreSome,
    X,
    XCard,
    NonEmpty,
    NonEmptyMore,
    WeakMoreAnti,
    Up,
}

impl Rule {
    pub const TABLE: [Rule; 21] = [
        Rule::Axiom,
        Rule::Barbara,
        Rule::Some,
        Rule::Conversion,
        Rule::Darii,
        Rule::Anti,
        Rule::Zero,
        Rule::One,
        Rule::SubsetSize,
        Rule::CardTrans,
        Rule::CardExists,
        Rule::MoreAtLeast,
        Rule::MoreLeft,
        Rule::MoreRight,
        Rule::MoreSome,
        Rule::X,
        Rule::XCard,
        Rule::NonEmpty,
        Rule::NonEmptyMore,
        Rule::WeakMoreAnti,
        Rule::Up,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Axiom => "axiom",
            Rule::Barbara => "barbara",
            Rule::Some => "some",
            Rule::Conversion => "conversion",
            Rule::Darii => "darii",
            Rule::Anti => "anti",
            Rule::Zero => "zero",
            Rule::One => "one",
            Rule::SubsetSize => "subset-size",
            Rule::CardTrans => "card-trans",
            Rule::CardExists => "card-∃",
            Rule::MoreAtLeast => "more-at-least",
            Rule::MoreLeft => "more-left",
            Rule::MoreRight => "more-right",
            Rule::MoreSome => "more-some",
            Rule::X => "x",
            Rule::XCard => "x-card",
            Rule::NonEmpty => "non-empty",
            Rule::NonEmptyMore => "non-empty-more",
            Rule::WeakMoreAnti => "weak-more-anti",
            Rule::Up => "up",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::Axiom => 0,
            Rule::Barbara
            | Rule::Darii
            | Rule::CardTrans
            | Rule::CardExists
            | Rule::MoreLeft
            | Rule::MoreRight
            | Rule::X
            | Rule::XCard
            | Rule::Up => 2,
            _ => 1,
        }
    }

    /// Whether the rule concludes an arbitrary sentence (ex falso).
    pub fn is_ex_falso(self) -> bool {
        matches!(self, Rule::X | Rule::XCard)
    }

    /// Checks that `premises ⊢ conclusion` is an instance of this rule.
    ///
    /// For the ex falso rules the conclusion is unconstrained and may be absent.
    pub fn is_instance(self, premises: &[&Sentence], conclusion: Option<&Sentence>) -> bool {
        if premises.len() != self.arity() {
            return false;
        }
        if self.is_ex_falso() {
            return self.ex_falso_premises_match(premises[0], premises[1]);
        }
        let Option::Some(c) = conclusion else {
            return false;
        };
        use Form::*;
        let shape = |s: &Sentence, f: Form| s.form == f;
        let bar = Noun::complement;
        match self {
            Rule::Axiom => shape(c, All) && c.left == c.right,
            Rule::Barbara => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, All)
                    && shape(b, All)
                    && shape(c, All)
                    && a.right == b.left
                    && c.left == a.left
                    && c.right == b.right
            }
            Rule::Some => {
                let a = premises[0];
                shape(a, Some) && shape(c, Some) && c.left == a.left && c.right == a.left
            }
            Rule::Conversion => {
                let a = premises[0];
                shape(a, Some) && shape(c, Some) && c.left == a.right && c.right == a.left
            }
            Rule::Darii => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, Some)
                    && shape(b, All)
                    && shape(c, Some)
                    && a.right == b.left
                    && c.left == a.left
                    && c.right == b.right
            }
            Rule::Anti => {
                let a = premises[0];
                shape(a, All) && shape(c, All) && c.left == bar(&a.right) && c.right == bar(&a.left)
            }
            Rule::Zero => {
                let a = premises[0];
                shape(a, All) && shape(c, All) && a.right == bar(&a.left) && c.left == a.left
            }
            Rule::One => {
                let a = premises[0];
                shape(a, All) && shape(c, All) && a.left == bar(&a.right) && c.right == a.right
            }
            Rule::SubsetSize => {
                let a = premises[0];
                shape(a, All) && shape(c, AtLeast) && c.left == a.right && c.right == a.left
            }
            Rule::CardTrans => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, AtLeast)
                    && shape(b, AtLeast)
                    && shape(c, AtLeast)
                    && a.right == b.left
                    && c.left == a.left
                    && c.right == b.right
            }
            Rule::CardExists => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, Some)
                    && a.left == a.right
                    && shape(b, AtLeast)
                    && b.right == a.left
                    && shape(c, Some)
                    && c.left == b.left
                    && c.right == b.left
            }
            Rule::MoreAtLeast => {
                let a = premises[0];
                shape(a, More) && shape(c, AtLeast) && c.left == a.left && c.right == a.right
            }
            Rule::MoreLeft => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, More)
                    && shape(b, AtLeast)
                    && shape(c, More)
                    && a.right == b.left
                    && c.left == a.left
                    && c.right == b.right
            }
            Rule::MoreRight => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, AtLeast)
                    && shape(b, More)
                    && shape(c, More)
                    && a.right == b.left
                    && c.left == a.left
                    && c.right == b.right
            }
            Rule::MoreSome => {
                let a = premises[0];
                shape(a, More) && shape(c, Some) && c.left == a.left && c.right == bar(&a.right)
            }
            Rule::NonEmpty => {
                let a = premises[0];
                shape(a, AtLeast)
                    && a.right == bar(&a.left)
                    && shape(c, Some)
                    && c.left == a.left
                    && c.right == a.left
            }
            Rule::NonEmptyMore => {
                let a = premises[0];
                shape(a, All)
                    && a.left == bar(&a.right)
                    && shape(c, More)
                    && c.left == a.right
                    && c.right == a.left
            }
            Rule::WeakMoreAnti => {
                let a = premises[0];
                shape(a, More) && shape(c, AtLeast) && c.left == bar(&a.right)
            }
            Rule::Up => {
                let (a, b) = (premises[0], premises[1]);
                shape(a, AtLeast)
                    && shape(b, AtLeast)
                    && shape(c, AtLeast)
                    && a.left == b.left
                    && b.right == bar(&a.right)
                    && c.left == a.left
            }
            Rule::X | Rule::XCard => unreachable!(),
        }
    }

    fn ex_falso_premises_match(self, a: &Sentence, b: &Sentence) -> bool {
        match self {
            // ∃(p,q), ∀(q,p̄)
            Rule::X => {
                a.form == Form::Some
                    && b.form == Form::All
                    && b.left == a.right
                    && b.right == a.left.complement()
            }
            // ∃>(p,q), ∃≥(q,p)
            Rule::XCard => {
                a.form == Form::More
                    && b.form == Form::AtLeast
                    && b.left == a.right
                    && b.right == a.left
            }
            _ => false,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for Rule {
    type Err = UnknownRule;
    fn from_str(s: &str) -> Result<Rule, UnknownRule> {
        let alias = match s {
            "card-exists" | "card-E" => "card-∃",
            "more-at least" => "more-at-least",
            other => other,
        };
        Rule::TABLE
            .into_iter()
            .find(|r| r.name() == alias)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}
