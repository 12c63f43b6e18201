//! Nouns, sentences, semantic negation, and the theory file format.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Words that may never be used as noun names.
pub const RESERVED: [&str; 4] = ["all", "some", "atleast", "more"];

/// A noun: a base name together with a polarity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Noun {
    base: String,
    neg: bool,
}

impl Noun {
    /// Builds a noun, rejecting empty, malformed, or reserved base names.
    pub fn new(base: &str, neg: bool) -> Result<Noun, NounError> {
        validate_base(base)?;
        Ok(Noun {
            base: base.to_string(),
            neg,
        })
    }

    /// Positive noun with the given base. Panics on an invalid name; meant for literals.
    pub fn pos(base: &str) -> Noun {
        Noun::new(base, false).unwrap_or_else(|e| panic!("invalid noun {base:?}: {e}"))
    }

    /// Complemented noun with the given base. Panics on an invalid name.
    pub fn neg(base: &str) -> Noun {
        Noun::new(base, true).unwrap_or_else(|e| panic!("invalid noun {base:?}: {e}"))
    }

    /// Parses a noun token such as `p`, `~p` or `~~p`.
    pub fn parse(token: &str) -> Result<Noun, NounError> {
        let stripped = token.trim_start_matches('~');
        let tildes = token.len() - stripped.len();
        Noun::new(stripped, tildes % 2 == 1)
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn is_negated(&self) -> bool {
        self.neg
    }

    pub fn complement(&self) -> Noun {
        Noun {
            base: self.base.clone(),
            neg: !self.neg,
        }
    }

    /// The positive noun with the same base.
    pub fn positive(&self) -> Noun {
        Noun {
            base: self.base.clone(),
            neg: false,
        }
    }

    /// Symbolic rendering with a combining overline for complements, e.g. `p̄`.
    pub fn symbolic(&self) -> String {
        if self.neg {
            let mut s = String::new();
            for c in self.base.chars() {
                s.push(c);
                s.push('\u{0304}');
            }
            s
        } else {
            self.base.clone()
        }
    }
}

impl fmt::Display for Noun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg {
            write!(f, "~{}", self.base)
        } else {
            f.write_str(&self.base)
        }
    }
}

/// Free-standing form of [`Noun::complement`].
pub fn complement(x: &Noun) -> Noun {
    x.complement()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NounError {
    #[error("empty noun token")]
    Empty,
    #[error("reserved word `{0}` cannot be used as a noun")]
    Reserved(String),
    #[error("invalid character {1:?} in noun `{0}`")]
    BadChar(String, char),
}

fn validate_base(base: &str) -> Result<(), NounError> {
    if base.is_empty() {
        return Err(NounError::Empty);
    }
    if let Some(c) = base
        .chars()
        .find(|c| !(c.is_alphanumeric() || *c == '_' || *c == '-' || *c == '\''))
    {
        return Err(NounError::BadChar(base.to_string(), c));
    }
    if RESERVED.iter().any(|r| r.eq_ignore_ascii_case(base)) {
        return Err(NounError::Reserved(base.to_string()));
    }
    Ok(())
}

/// The four sentence forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    All,
    Some,
    AtLeast,
    More,
}

impl Form {
    pub const ALL_FORMS: [Form; 4] = [Form::All, Form::Some, Form::AtLeast, Form::More];

    pub fn keyword(self) -> &'static str {
        match self {
            Form::All => "all",
            Form::Some => "some",
            Form::AtLeast => "atleast",
            Form::More => "more",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Form> {
        Form::ALL_FORMS
            .into_iter()
            .find(|f| f.keyword().eq_ignore_ascii_case(word))
    }

    fn symbol(self) -> &'static str {
        match self {
            Form::All => "∀",
            Form::Some => "∃",
            Form::AtLeast => "∃≥",
            Form::More => "∃>",
        }
    }
}

/// A sentence `form(left, right)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sentence {
    pub form: Form,
    pub left: Noun,
    pub right: Noun,
}

impl Sentence {
    pub fn new(form: Form, left: Noun, right: Noun) -> Sentence {
        Sentence { form, left, right }
    }

    pub fn all(p: Noun, q: Noun) -> Sentence {
        Sentence::new(Form::All, p, q)
    }

    pub fn some(p: Noun, q: Noun) -> Sentence {
        Sentence::new(Form::Some, p, q)
    }

    pub fn at_least(p: Noun, q: Noun) -> Sentence {
        Sentence::new(Form::AtLeast, p, q)
    }

    pub fn more(p: Noun, q: Noun) -> Sentence {
        Sentence::new(Form::More, p, q)
    }

    /// Parses a single sentence in either the keyword or the English syntax.
    pub fn parse(text: &str) -> Result<Sentence, ParseError> {
        let theory = parse(text)?;
        match theory.sentences.as_slice() {
            [s] => Ok(s.clone()),
            _ => Err(ParseError {
                line: 1,
                column: 1,
                kind: ParseErrorKind::NotSingleSentence(theory.sentences.len()),
            }),
        }
    }

    /// The semantic negation: the sentence true in exactly the models where `self` is false.
    pub fn negate(&self) -> Sentence {
        negate(self)
    }

    pub fn nouns(&self) -> [&Noun; 2] {
        [&self.left, &self.right]
    }

    /// Symbolic rendering such as `∃>(p,q̄)`.
    pub fn symbolic(&self) -> String {
        format!(
            "{}({},{})",
            self.form.symbol(),
            self.left.symbolic(),
            self.right.symbolic()
        )
    }

    /// Controlled-English rendering.
    pub fn english(&self) -> String {
        let (p, q) = (&self.left, &self.right);
        match self.form {
            Form::All => format!("All {p} are {q}"),
            Form::Some => format!("Some {p} are {q}"),
            Form::AtLeast => format!("There are at least as many {p} as {q}"),
            Form::More => format!("There are more {p} than {q}"),
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.form.keyword(), self.left, self.right)
    }
}

/// Semantic negation table.
pub fn negate(phi: &Sentence) -> Sentence {
    let (p, q) = (phi.left.clone(), phi.right.clone());
    match phi.form {
        Form::All => Sentence::some(p, q.complement()),
        Form::Some => Sentence::all(p, q.complement()),
        Form::AtLeast => Sentence::more(q, p),
        Form::More => Sentence::at_least(q, p),
    }
}

/// 1-based line and column of a sentence in its source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

/// A finite list of sentences read from a theory file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoryFile {
    pub sentences: Vec<Sentence>,
    pub spans: Vec<Span>,
    pub warnings: Vec<String>,
}

impl TheoryFile {
    /// Builds a theory from sentences, dropping duplicates.
    pub fn from_sentences<I: IntoIterator<Item = Sentence>>(sentences: I) -> TheoryFile {
        let mut t = TheoryFile::default();
        for (i, s) in sentences.into_iter().enumerate() {
            t.push(s, Span { line: i + 1, column: 1 });
        }
        t
    }

    fn push(&mut self, s: Sentence, span: Span) {
        if let Some(k) = self.sentences.iter().position(|t| *t == s) {
            self.warnings.push(format!(
                "line {}: duplicate of line {} ({s}) ignored",
                span.line, self.spans[k].line
            ));
            return;
        }
        self.sentences.push(s);
        self.spans.push(span);
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sentence> {
        self.sentences.iter()
    }
}

impl<'a> IntoIterator for &'a TheoryFile {
    type Item = &'a Sentence;
    type IntoIter = std::slice::Iter<'a, Sentence>;
    fn into_iter(self) -> Self::IntoIter {
        self.sentences.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown sentence keyword `{0}`")]
    UnknownKeyword(String),
    #[error("expected {expected} but found {found}")]
    Malformed { expected: String, found: String },
    #[error("bad noun: {0}")]
    Noun(NounError),
    #[error("hypothesis sets must be finite; an elided (`...`) pattern describes an infinite theory, which is not supported")]
    InfiniteTheory,
    #[error("expected exactly one sentence, found {0}")]
    NotSingleSentence(usize),
}

/// Parses a theory file: one sentence per line, `#` starts a comment.
pub fn parse(text: &str) -> Result<TheoryFile, ParseError> {
    let mut theory = TheoryFile::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let line_no = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(col) = line.find("...").or_else(|| line.find('…')) {
            return Err(ParseError {
                line: line_no,
                column: line[..col].chars().count() + 1,
                kind: ParseErrorKind::InfiniteTheory,
            });
        }
        let tokens = tokenize(line);
        let (sentence, column) = parse_tokens(&tokens).map_err(|(column, kind)| ParseError {
            line: line_no,
            column,
            kind,
        })?;
        theory.push(
            sentence,
            Span {
                line: line_no,
                column,
            },
        );
    }
    Ok(theory)
}

/// Renders a theory in the keyword syntax; `parse` is its inverse.
pub fn render(theory: &TheoryFile) -> String {
    let mut out = String::new();
    for s in &theory.sentences {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

/// Whitespace tokens with their 1-based character column. A trailing period is dropped.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (bi, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, bi));
            }
        } else if start.is_none() {
            start = Some(bi);
        }
    }
    if let Some(s) = start {
        out.push((s, line.len()));
    }
    let mut tokens: Vec<(usize, &str)> = out
        .into_iter()
        .map(|(s, e)| (line[..s].chars().count() + 1, &line[s..e]))
        .collect();
    if let Some(last) = tokens.last_mut() {
        if last.1.len() > 1 && last.1.ends_with('.') {
            last.1 = &last.1[..last.1.len() - 1];
        }
    }
    tokens
}

type TokenResult<T> = Result<T, (usize, ParseErrorKind)>;

fn noun_at(tokens: &[(usize, &str)], i: usize) -> TokenResult<Noun> {
    let (col, tok) = tokens[i];
    Noun::parse(tok).map_err(|e| (col, ParseErrorKind::Noun(e)))
}

fn word_is(tokens: &[(usize, &str)], i: usize, word: &str) -> bool {
    tokens
        .get(i)
        .is_some_and(|(_, t)| t.eq_ignore_ascii_case(word))
}

fn malformed(tokens: &[(usize, &str)], expected: &str) -> (usize, ParseErrorKind) {
    let col = tokens.first().map_or(1, |t| t.0);
    (
        col,
        ParseErrorKind::Malformed {
            expected: expected.to_string(),
            found: format!("{} token(s)", tokens.len()),
        },
    )
}

fn parse_tokens(tokens: &[(usize, &str)]) -> TokenResult<(Sentence, usize)> {
    let col = tokens[0].0;
    let first = tokens[0].1;
    // English aliases first; they are recognized by their fixed words.
    if first.eq_ignore_ascii_case("there") {
        if tokens.len() == 9
            && word_is(tokens, 1, "are")
            && word_is(tokens, 2, "at")
            && word_is(tokens, 3, "least")
            && word_is(tokens, 4, "as")
            && word_is(tokens, 5, "many")
            && word_is(tokens, 7, "as")
        {
            let s = Sentence::at_least(noun_at(tokens, 6)?, noun_at(tokens, 8)?);
            return Ok((s, col));
        }
        if tokens.len() == 6
            && word_is(tokens, 1, "are")
            && word_is(tokens, 2, "more")
            && word_is(tokens, 4, "than")
        {
            let s = Sentence::more(noun_at(tokens, 3)?, noun_at(tokens, 5)?);
            return Ok((s, col));
        }
        return Err(malformed(
            tokens,
            "`There are at least as many P as Q` or `There are more P than Q`",
        ));
    }
    let form = Form::from_keyword(first)
        .ok_or_else(|| (col, ParseErrorKind::UnknownKeyword(first.to_string())))?;
    if matches!(form, Form::All | Form::Some) && tokens.len() == 4 && word_is(tokens, 2, "are") {
        let s = Sentence::new(form, noun_at(tokens, 1)?, noun_at(tokens, 3)?);
        return Ok((s, col));
    }
    if tokens.len() != 3 {
        return Err(malformed(
            tokens,
            &format!("`{} <noun> <noun>`", form.keyword()),
        ));
    }
    let s = Sentence::new(form, noun_at(tokens, 1)?, noun_at(tokens, 2)?);
    Ok((s, col))
}

/// Every noun occurring in `gamma` or `phi`, closed under complement.
pub fn atoms_of<'a, I>(gamma: I, phi: Option<&'a Sentence>) -> BTreeSet<Noun>
where
    I: IntoIterator<Item = &'a Sentence>,
{
    let mut out = BTreeSet::new();
    for s in gamma.into_iter().chain(phi) {
        for n in s.nouns() {
            out.insert(n.positive());
            out.insert(n.positive().complement());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Noun {
        Noun::pos("p")
    }
    fn q() -> Noun {
        Noun::pos("q")
    }

    #[test]
    fn complement_is_involution() {
        assert_eq!(p().complement(), Noun::neg("p"));
        assert_eq!(Noun::neg("p").complement(), p());
        assert_eq!(q().complement().complement(), q());
    }

    #[test]
    fn negation_table() {
        assert_eq!(
            Sentence::all(p(), q()).negate(),
            Sentence::some(p(), q().complement())
        );
        assert_eq!(
            Sentence::some(p(), q()).negate(),
            Sentence::all(p(), q().complement())
        );
        assert_eq!(
            Sentence::at_least(p(), q()).negate(),
            Sentence::more(q(), p())
        );
        assert_eq!(
            Sentence::more(p(), q()).negate(),
            Sentence::at_least(q(), p())
        );
        let s = Sentence::some(p(), q());
        assert_eq!(s.negate().negate(), s);
    }

    #[test]
    fn keyword_syntax() {
        let t = parse("more ~p q").unwrap();
        assert_eq!(t.sentences, vec![Sentence::more(Noun::neg("p"), q())]);
        let t = parse("all ~~p q  # comment").unwrap();
        assert_eq!(t.sentences, vec![Sentence::all(p(), q())]);
    }

    #[test]
    fn english_syntax() {
        let t = parse("All x are ~y").unwrap();
        assert_eq!(
            t.sentences,
            vec![Sentence::all(Noun::pos("x"), Noun::neg("y"))]
        );
        let t = parse(
            "Some p are q\nThere are at least as many p as q.\nThere are more p than ~q\n",
        )
        .unwrap();
        assert_eq!(
            t.sentences,
            vec![
                Sentence::some(p(), q()),
                Sentence::at_least(p(), q()),
                Sentence::more(p(), q().complement()),
            ]
        );
    }

    #[test]
    fn unknown_keyword_reports_position() {
        let e = parse("most p q").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(matches!(e.kind, ParseErrorKind::UnknownKeyword(_)));
        let e = parse("all p q\n\n  some p").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
    }

    #[test]
    fn empty_and_reserved_nouns_rejected() {
        let e = parse("all ~ q").unwrap_err();
        assert_eq!(e.column, 5);
        assert_eq!(e.kind, ParseErrorKind::Noun(NounError::Empty));
        let e = parse("some p more").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Noun(NounError::Reserved(_))
        ));
    }

    #[test]
    fn infinite_theory_rejected() {
        let e = parse("more x0 x1\nmore x1 x2\n...\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::InfiniteTheory);
        assert!(e.to_string().contains("finite"));
    }

    #[test]
    fn duplicates_dropped_with_warning() {
        let t = parse("all p q\nAll p are q\nsome p q\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.warnings.len(), 1);
        assert!(t.warnings[0].contains("line 2"));
        assert_eq!(t.spans[1].line, 3);
    }

    #[test]
    fn atoms_closed_under_complement() {
        let g = [Sentence::all(p(), q())];
        let a = atoms_of(&g, None);
        assert_eq!(a.len(), 4);
        let x = Noun::pos("x");
        let phi = Sentence::more(x.clone(), x.complement());
        let a = atoms_of(&[], Some(&phi));
        assert_eq!(a.into_iter().collect::<Vec<_>>(), vec![x.clone(), x.complement()]);
    }

    #[test]
    fn json_record_shape() {
        let s = Sentence::at_least(Noun::neg("p"), q());
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"form":"atleast","left":{"base":"p","neg":true},"right":{"base":"q","neg":false}})
        );
        let back: Sentence = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn renderings() {
        let s = Sentence::more(p(), Noun::neg("q"));
        assert_eq!(s.to_string(), "more p ~q");
        assert_eq!(s.symbolic(), "∃>(p,q\u{304})");
        assert_eq!(Sentence::parse(&s.english()).unwrap(), s);
    }
}
