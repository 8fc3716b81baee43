//! Infinite semigroups with decidable normal forms, explored through
//! bounded balls.
//!
//! Every family carries a confluent, terminating reduction to a canonical
//! word, a length function, and deterministic ball enumeration. Bounded
//! congruence search never answers "no": pairs not yet connected inside the
//! ball stay `Unknown`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::congruence::Direction;
use crate::semigroup::{ElementId, FiniteSemigroup};

/// Default cap on the number of words a ball may contain.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("bad family spec: {0}")]
    BadSpec(String),
    #[error("ball would exceed the cap of {cap} words")]
    BallTooLarge { cap: usize },
    #[error("pair entry {word} lies outside ball({bound})")]
    PairOutsideBall { word: String, bound: usize },
    #[error("bound {given} is too small to decide: {required} required")]
    BoundTooSmall { required: usize, given: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("word {0} is not canonical for this family")]
    NotCanonical(String),
    #[error("cannot parse word {0:?}")]
    ParseError(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordReplayError {
    #[error("step {step}: pair index {pair} out of range")]
    PairIndexOutOfRange { step: usize, pair: usize },
    #[error("step {step}: expected {expected}, found {found}")]
    Mismatch { step: usize, expected: String, found: String },
}

/// Which free-product factor a syllable comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FactorSide {
    First,
    Second,
}

/// One syllable of a free-product word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub side: FactorSide,
    pub elem: ElementId,
}

/// A canonical word; the variant in use is fixed by the owning family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Word {
    /// Exponent vector (free commutative; never all zero).
    Vector(Vec<u32>),
    /// `a^n` (free monogenic; `n = 0` only with an identity).
    Power(u64),
    /// Alternating letter string; empty only with an identity.
    Letters(String),
    /// Reduced alternating factor sequence; empty only with an identity.
    Product(Vec<Factor>),
}

impl Word {
    fn sort_key(&self) -> (usize, Vec<u64>) {
        let tokens = match self {
            Word::Vector(v) => v.iter().map(|&x| x as u64).collect(),
            Word::Power(n) => vec![*n],
            Word::Letters(s) => s.bytes().map(|b| b as u64).collect(),
            Word::Product(f) => f
                .iter()
                .flat_map(|fac| [if fac.side == FactorSide::First { 0 } else { 1 }, fac.elem.0 as u64])
                .collect(),
        };
        (word_len(self), tokens)
    }
}

fn word_len(w: &Word) -> usize {
    match w {
        Word::Vector(v) => v.iter().map(|&x| x as usize).sum(),
        Word::Power(n) => *n as usize,
        Word::Letters(s) => s.len(),
        Word::Product(f) => f.len(),
    }
}

/// The supported presentation families.
#[derive(Debug, Clone)]
pub enum Family {
    /// Free commutative semigroup on `k` generators.
    FreeCommutative(usize),
    /// Free semigroup on one generator.
    FreeMonogenic,
    /// Free monoid on one generator.
    FreeMonogenicWithIdentity,
    /// Two free idempotents: `e² = e`, `f² = f`.
    IdempotentPair,
    /// One involution and one idempotent: `a² = 1`, `b² = b`.
    FlipIdem,
    /// Semigroup free product of two finite semigroups.
    FreeProduct(Box<FiniteSemigroup>, Box<FiniteSemigroup>),
    /// Monoid free product of two finite monoids.
    MonoidFreeProduct(Box<FiniteSemigroup>, Box<FiniteSemigroup>),
}

/// A semigroup presented by canonical words, with computable multiplication
/// and ball enumeration.
#[derive(Debug, Clone)]
pub struct NormalFormSemigroup {
    pub family: Family,
    ball_cap: usize,
}

impl NormalFormSemigroup {
    pub fn new(family: Family) -> Result<Self, FpError> {
        match &family {
            Family::FreeCommutative(k) => {
                if *k == 0 || *k > 26 {
                    return Err(FpError::BadSpec(format!(
                        "free commutative rank must be in 1..=26, got {k}"
                    )));
                }
            }
            Family::MonoidFreeProduct(m, n) => {
                if m.identity().is_none() || n.identity().is_none() {
                    return Err(FpError::BadSpec(
                        "monoid free product requires two monoids".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(NormalFormSemigroup { family, ball_cap: DEFAULT_BALL_CAP })
    }

    pub fn with_ball_cap(mut self, cap: usize) -> Self {
        self.ball_cap = cap;
        self
    }

    /// The identity word, for families that have one.
    pub fn one(&self) -> Option<Word> {
        match &self.family {
            Family::FreeMonogenicWithIdentity => Some(Word::Power(0)),
            Family::FlipIdem => Some(Word::Letters(String::new())),
            Family::MonoidFreeProduct(_, _) => Some(Word::Product(Vec::new())),
            _ => None,
        }
    }

    pub fn len(&self, w: &Word) -> usize {
        word_len(w)
    }

    /// Checks that a word is a canonical form of this family.
    pub fn is_canonical(&self, w: &Word) -> bool {
        match (&self.family, w) {
            (Family::FreeCommutative(k), Word::Vector(v)) => {
                v.len() == *k && v.iter().any(|&x| x > 0)
            }
            (Family::FreeMonogenic, Word::Power(n)) => *n >= 1,
            (Family::FreeMonogenicWithIdentity, Word::Power(_)) => true,
            (Family::IdempotentPair, Word::Letters(s)) => {
                !s.is_empty() && alternating(s, &['e', 'f'])
            }
            (Family::FlipIdem, Word::Letters(s)) => alternating(s, &['a', 'b']),
            (Family::FreeProduct(a, b), Word::Product(f)) => {
                !f.is_empty() && product_canonical(f, a, b, false)
            }
            (Family::MonoidFreeProduct(a, b), Word::Product(f)) => {
                product_canonical(f, a, b, true)
            }
            _ => false,
        }
    }

    /// Canonical product of two canonical words.
    pub fn mul(&self, x: &Word, y: &Word) -> Word {
        debug_assert!(self.is_canonical(x), "left operand not canonical");
        debug_assert!(self.is_canonical(y), "right operand not canonical");
        match (&self.family, x, y) {
            (Family::FreeCommutative(_), Word::Vector(a), Word::Vector(b)) => {
                Word::Vector(a.iter().zip(b).map(|(u, v)| u + v).collect())
            }
            (
                Family::FreeMonogenic | Family::FreeMonogenicWithIdentity,
                Word::Power(a),
                Word::Power(b),
            ) => Word::Power(a + b),
            (Family::IdempotentPair, Word::Letters(a), Word::Letters(b)) => {
                Word::Letters(reduce_letters(&format!("{a}{b}"), LetterRules::IdempotentPair))
            }
            (Family::FlipIdem, Word::Letters(a), Word::Letters(b)) => {
                Word::Letters(reduce_letters(&format!("{a}{b}"), LetterRules::FlipIdem))
            }
            (Family::FreeProduct(s, t), Word::Product(a), Word::Product(b)) => {
                let mut raw = a.clone();
                raw.extend(b.iter().copied());
                Word::Product(reduce_product(&raw, s, t, false))
            }
            (Family::MonoidFreeProduct(s, t), Word::Product(a), Word::Product(b)) => {
                let mut raw = a.clone();
                raw.extend(b.iter().copied());
                Word::Product(reduce_product(&raw, s, t, true))
            }
            _ => panic!("word variant does not match family"),
        }
    }

    /// Reduces an arbitrary (possibly non-canonical) word of the right
    /// variant to canonical form.
    pub fn reduce(&self, w: &Word) -> Word {
        match (&self.family, w) {
            (Family::IdempotentPair, Word::Letters(s)) => {
                Word::Letters(reduce_letters(s, LetterRules::IdempotentPair))
            }
            (Family::FlipIdem, Word::Letters(s)) => {
                Word::Letters(reduce_letters(s, LetterRules::FlipIdem))
            }
            (Family::FreeProduct(s, t), Word::Product(f)) => {
                Word::Product(reduce_product(f, s, t, false))
            }
            (Family::MonoidFreeProduct(s, t), Word::Product(f)) => {
                Word::Product(reduce_product(f, s, t, true))
            }
            _ => w.clone(),
        }
    }

    /// All canonical words of length at most `k`, ordered by length then
    /// lexicographically.
    pub fn ball(&self, k: usize) -> Result<Vec<Word>, FpError> {
        let mut out: Vec<Word> = Vec::new();
        let cap = self.ball_cap;
        let push = |w: Word, out: &mut Vec<Word>| -> Result<(), FpError> {
            if out.len() >= cap {
                return Err(FpError::BallTooLarge { cap });
            }
            out.push(w);
            Ok(())
        };
        match &self.family {
            Family::FreeCommutative(rank) => {
                // By total degree, then lexicographic exponent tuples.
                for degree in 1..=k {
                    let mut v = vec![0u32; *rank];
                    gen_compositions(&mut v, 0, degree as u32, &mut |vv| {
                        push(Word::Vector(vv.to_vec()), &mut out)
                    })?;
                }
            }
            Family::FreeMonogenic => {
                for n in 1..=k as u64 {
                    push(Word::Power(n), &mut out)?;
                }
            }
            Family::FreeMonogenicWithIdentity => {
                for n in 0..=k as u64 {
                    push(Word::Power(n), &mut out)?;
                }
            }
            Family::IdempotentPair => {
                for len in 1..=k {
                    for start in ['e', 'f'] {
                        push(Word::Letters(alternating_string(start, 'e', 'f', len)), &mut out)?;
                    }
                }
            }
            Family::FlipIdem => {
                push(Word::Letters(String::new()), &mut out)?;
                for len in 1..=k {
                    for start in ['a', 'b'] {
                        push(Word::Letters(alternating_string(start, 'a', 'b', len)), &mut out)?;
                    }
                }
            }
            Family::FreeProduct(s, t) => {
                let choices = [
                    s.elements().collect::<Vec<_>>(),
                    t.elements().collect::<Vec<_>>(),
                ];
                gen_product_ball(&choices, k, false, cap, &mut out)?;
            }
            Family::MonoidFreeProduct(s, t) => {
                let nontrivial = |f: &FiniteSemigroup| {
                    let e = f.identity().expect("validated as monoid");
                    f.elements().filter(|&x| x != e).collect::<Vec<_>>()
                };
                let choices = [nontrivial(s), nontrivial(t)];
                gen_product_ball(&choices, k, true, cap, &mut out)?;
            }
        }
        debug_assert!(out.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        Ok(out)
    }

    /// Family-tagged display form.
    pub fn format_word(&self, w: &Word) -> String {
        match (&self.family, w) {
            (Family::FreeCommutative(_), Word::Vector(v)) => {
                let parts: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let letter = (b'a' + i as u8) as char;
                        if e == 1 {
                            letter.to_string()
                        } else {
                            format!("{letter}^{e}")
                        }
                    })
                    .collect();
                parts.join(" ")
            }
            (_, Word::Power(0)) => "1".into(),
            (_, Word::Power(1)) => "a".into(),
            (_, Word::Power(n)) => format!("a^{n}"),
            (_, Word::Letters(s)) if s.is_empty() => "1".into(),
            (_, Word::Letters(s)) => s.clone(),
            (_, Word::Product(f)) if f.is_empty() => "1".into(),
            (_, Word::Product(f)) => f
                .iter()
                .map(|fac| {
                    format!(
                        "{}:{}",
                        if fac.side == FactorSide::First { 0 } else { 1 },
                        fac.elem.0
                    )
                })
                .collect::<Vec<_>>()
                .join(";"),
            (_, Word::Vector(_)) => panic!("word variant does not match family"),
        }
    }

    /// Inverse of [`format_word`].
    pub fn parse_word(&self, text: &str) -> Result<Word, FpError> {
        let text = text.trim();
        let word = match &self.family {
            Family::FreeCommutative(rank) => {
                let mut v = vec![0u32; *rank];
                if text != "1" && !text.is_empty() {
                    for part in text.split_whitespace() {
                        let (letter, exp) = match part.split_once('^') {
                            Some((l, e)) => (
                                l,
                                e.parse::<u32>().map_err(|_| FpError::ParseError(text.into()))?,
                            ),
                            None => (part, 1),
                        };
                        let bytes = letter.as_bytes();
                        if bytes.len() != 1 || !(b'a'..b'a' + *rank as u8).contains(&bytes[0]) {
                            return Err(FpError::ParseError(text.into()));
                        }
                        v[(bytes[0] - b'a') as usize] += exp;
                    }
                }
                Word::Vector(v)
            }
            Family::FreeMonogenic | Family::FreeMonogenicWithIdentity => {
                if text == "1" {
                    Word::Power(0)
                } else if text == "a" {
                    Word::Power(1)
                } else {
                    let rest = text
                        .strip_prefix("a^")
                        .ok_or_else(|| FpError::ParseError(text.into()))?;
                    Word::Power(rest.parse().map_err(|_| FpError::ParseError(text.into()))?)
                }
            }
            Family::IdempotentPair | Family::FlipIdem => {
                if text == "1" {
                    Word::Letters(String::new())
                } else {
                    Word::Letters(text.to_string())
                }
            }
            Family::FreeProduct(_, _) | Family::MonoidFreeProduct(_, _) => {
                if text == "1" {
                    Word::Product(Vec::new())
                } else {
                    let factors = text
                        .split(';')
                        .map(|tok| {
                            let (side, idx) =
                                tok.split_once(':').ok_or_else(|| FpError::ParseError(text.into()))?;
                            let side = match side {
                                "0" => FactorSide::First,
                                "1" => FactorSide::Second,
                                _ => return Err(FpError::ParseError(text.into())),
                            };
                            let elem = idx
                                .parse::<usize>()
                                .map_err(|_| FpError::ParseError(text.into()))?;
                            Ok(Factor { side, elem: ElementId(elem) })
                        })
                        .collect::<Result<Vec<_>, FpError>>()?;
                    Word::Product(factors)
                }
            }
        };
        if !self.is_canonical(&word) {
            return Err(FpError::NotCanonical(text.into()));
        }
        Ok(word)
    }
}

fn alternating(s: &str, letters: &[char; 2]) -> bool {
    let chars: Vec<char> = s.chars().collect();
    chars.iter().all(|c| letters.contains(c)) && chars.windows(2).all(|w| w[0] != w[1])
}

fn alternating_string(start: char, a: char, b: char, len: usize) -> String {
    let other = if start == a { b } else { a };
    (0..len).map(|i| if i % 2 == 0 { start } else { other }).collect()
}

enum LetterRules {
    /// `ee → e`, `ff → f`.
    IdempotentPair,
    /// `aa → ε`, `bb → b`.
    FlipIdem,
}

fn reduce_letters(s: &str, rules: LetterRules) -> String {
    let mut stack: Vec<char> = Vec::with_capacity(s.len());
    for c in s.chars() {
        match (&rules, stack.last()) {
            (LetterRules::IdempotentPair, Some(&top)) if top == c => {}
            (LetterRules::FlipIdem, Some('a')) if c == 'a' => {
                stack.pop();
            }
            (LetterRules::FlipIdem, Some('b')) if c == 'b' => {}
            _ => stack.push(c),
        }
    }
    stack.into_iter().collect()
}

fn product_canonical(
    factors: &[Factor],
    first: &FiniteSemigroup,
    second: &FiniteSemigroup,
    monoid: bool,
) -> bool {
    let in_range = factors.iter().all(|f| match f.side {
        FactorSide::First => first.contains(f.elem),
        FactorSide::Second => second.contains(f.elem),
    });
    let alternates = factors.windows(2).all(|w| w[0].side != w[1].side);
    let no_identities = !monoid
        || factors.iter().all(|f| match f.side {
            FactorSide::First => Some(f.elem) != first.identity(),
            FactorSide::Second => Some(f.elem) != second.identity(),
        });
    in_range && alternates && no_identities
}

fn reduce_product(
    factors: &[Factor],
    first: &FiniteSemigroup,
    second: &FiniteSemigroup,
    monoid: bool,
) -> Vec<Factor> {
    let mut stack: Vec<Factor> = Vec::with_capacity(factors.len());
    for &f in factors {
        let owner = match f.side {
            FactorSide::First => first,
            FactorSide::Second => second,
        };
        if monoid && Some(f.elem) == owner.identity() {
            continue;
        }
        let mut pending = Some(f);
        while let Some(p) = pending.take() {
            match stack.last() {
                Some(&top) if top.side == p.side => {
                    let owner = match p.side {
                        FactorSide::First => first,
                        FactorSide::Second => second,
                    };
                    let merged = owner.mul(top.elem, p.elem);
                    stack.pop();
                    if monoid && Some(merged) == owner.identity() {
                        // Deleted syllable: nothing to push; the next input
                        // factor may now merge with the exposed top.
                    } else {
                        pending = Some(Factor { side: p.side, elem: merged });
                        // Re-examine: the exposed top has the opposite side
                        // unless deletions happened, so this loops at most
                        // until sides differ.
                        if stack.last().map(|t| t.side) != Some(p.side) {
                            stack.push(pending.take().unwrap());
                        }
                    }
                }
                _ => stack.push(p),
            }
        }
    }
    stack
}

fn gen_compositions<F>(v: &mut Vec<u32>, pos: usize, remaining: u32, emit: &mut F) -> Result<(), FpError>
where
    F: FnMut(&[u32]) -> Result<(), FpError>,
{
    if pos + 1 == v.len() {
        v[pos] = remaining;
        emit(v)?;
        v[pos] = 0;
        return Ok(());
    }
    for take in 0..=remaining {
        v[pos] = take;
        gen_compositions(v, pos + 1, remaining - take, emit)?;
    }
    v[pos] = 0;
    Ok(())
}

fn gen_product_ball(
    choices: &[Vec<ElementId>; 2],
    k: usize,
    monoid: bool,
    cap: usize,
    out: &mut Vec<Word>,
) -> Result<(), FpError> {
    if monoid {
        if out.len() >= cap {
            return Err(FpError::BallTooLarge { cap });
        }
        out.push(Word::Product(Vec::new()));
    }
    for len in 1..=k {
        for start in [FactorSide::First, FactorSide::Second] {
            let mut prefix: Vec<Factor> = Vec::with_capacity(len);
            gen_product_words(choices, start, len, &mut prefix, cap, out)?;
        }
    }
    Ok(())
}

fn gen_product_words(
    choices: &[Vec<ElementId>; 2],
    start: FactorSide,
    len: usize,
    prefix: &mut Vec<Factor>,
    cap: usize,
    out: &mut Vec<Word>,
) -> Result<(), FpError> {
    if prefix.len() == len {
        if out.len() >= cap {
            return Err(FpError::BallTooLarge { cap });
        }
        out.push(Word::Product(prefix.clone()));
        return Ok(());
    }
    let side = if prefix.len() % 2 == 0 {
        start
    } else if start == FactorSide::First {
        FactorSide::Second
    } else {
        FactorSide::First
    };
    let pool = match side {
        FactorSide::First => &choices[0],
        FactorSide::Second => &choices[1],
    };
    for &e in pool {
        prefix.push(Factor { side, elem: e });
        gen_product_words(choices, start, len, prefix, cap, out)?;
        prefix.pop();
    }
    Ok(())
}

/// One step of a bounded derivation: generating pair index, direction, and
/// an optional right multiplier from the ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordStep {
    pub pair: usize,
    pub dir: Direction,
    pub mul: Option<Word>,
}

/// A replayable derivation over words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSequence {
    pub steps: Vec<WordStep>,
}

impl WordSequence {
    pub fn replay(
        &self,
        f: &NormalFormSemigroup,
        pairs: &[(Word, Word)],
        from: &Word,
    ) -> Result<Word, WordReplayError> {
        let mut current = from.clone();
        for (idx, step) in self.steps.iter().enumerate() {
            let (x, y) = pairs
                .get(step.pair)
                .ok_or(WordReplayError::PairIndexOutOfRange { step: idx, pair: step.pair })?;
            let (x, y) = match step.dir {
                Direction::Forward => (x, y),
                Direction::Backward => (y, x),
            };
            let expected = match &step.mul {
                Some(u) => f.mul(x, u),
                None => x.clone(),
            };
            if expected != current {
                return Err(WordReplayError::Mismatch {
                    step: idx,
                    expected: f.format_word(&expected),
                    found: f.format_word(&current),
                });
            }
            current = match &step.mul {
                Some(u) => f.mul(y, u),
                None => y.clone(),
            };
        }
        Ok(current)
    }
}

/// Verdict of a bounded membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedVerdict {
    Proven(WordSequence),
    /// Not connected within the ball; never a refutation.
    Unknown,
}

#[derive(Debug, Clone, Copy)]
struct EdgeLabel {
    pair: usize,
    dir: Direction,
    /// Index into the ball; `None` is the formal identity.
    mul: Option<usize>,
}

/// Connected components of the derivation graph over a ball.
#[derive(Debug, Clone)]
pub struct PartialCongruence {
    pub bound: usize,
    pub words: Vec<Word>,
    pub class_of: Vec<usize>,
    pub num_classes: usize,
    pairs: Vec<(Word, Word)>,
    index: HashMap<Word, usize>,
    adjacency: Vec<Vec<(usize, EdgeLabel)>>,
}

impl PartialCongruence {
    pub fn position_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Proven iff both words lie in the ball and are connected; otherwise
    /// Unknown. Proven verdicts carry a certificate replayed before return.
    pub fn query(&self, f: &NormalFormSemigroup, a: &Word, b: &Word) -> BoundedVerdict {
        if a == b {
            return BoundedVerdict::Proven(WordSequence { steps: Vec::new() });
        }
        let (Some(ia), Some(ib)) = (self.position_of(a), self.position_of(b)) else {
            return BoundedVerdict::Unknown;
        };
        if self.class_of[ia] != self.class_of[ib] {
            return BoundedVerdict::Unknown;
        }
        let mut parent: Vec<Option<(usize, EdgeLabel)>> = vec![None; self.words.len()];
        let mut seen = vec![false; self.words.len()];
        let mut queue = VecDeque::new();
        seen[ia] = true;
        queue.push_back(ia);
        while let Some(v) = queue.pop_front() {
            if v == ib {
                let mut steps = Vec::new();
                let mut cur = v;
                while cur != ia {
                    let (prev, label) = parent[cur].expect("path back to start");
                    steps.push(WordStep {
                        pair: label.pair,
                        dir: label.dir,
                        mul: label.mul.map(|i| self.words[i].clone()),
                    });
                    cur = prev;
                }
                steps.reverse();
                let seq = WordSequence { steps };
                debug_assert_eq!(seq.replay(f, &self.pairs, a).as_ref(), Ok(b));
                return BoundedVerdict::Proven(seq);
            }
            for &(w, label) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, label));
                    queue.push_back(w);
                }
            }
        }
        unreachable!("same component implies a path");
    }
}

/// Builds the derivation graph on `ball(k)`: edges `(x·u, y·u)` for every
/// symmetrised generating pair and every multiplier `u` in the ball (or the
/// formal identity), with both endpoints inside the ball.
pub fn bounded_rc_closure(
    f: &NormalFormSemigroup,
    pairs: &[(Word, Word)],
    k: usize,
) -> Result<PartialCongruence, FpError> {
    let words = f.ball(k)?;
    let index: HashMap<Word, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    for (x, y) in pairs {
        for w in [x, y] {
            if !index.contains_key(w) {
                return Err(FpError::PairOutsideBall { word: f.format_word(w), bound: k });
            }
        }
    }
    let n = words.len();
    let mut adjacency: Vec<Vec<(usize, EdgeLabel)>> = vec![Vec::new(); n];
    let mut class: Vec<usize> = (0..n).collect();
    fn find(class: &mut Vec<usize>, i: usize) -> usize {
        if class[i] != i {
            class[i] = find(class, class[i]);
        }
        class[i]
    }
    let mut multipliers: Vec<Option<usize>> = vec![None];
    multipliers.extend((0..n).map(Some));
    for (p, (x, y)) in pairs.iter().enumerate() {
        for &m in &multipliers {
            let (xm, ym) = match m {
                None => (x.clone(), y.clone()),
                Some(u) => (f.mul(x, &words[u]), f.mul(y, &words[u])),
            };
            let (Some(&ix), Some(&iy)) = (index.get(&xm), index.get(&ym)) else {
                continue;
            };
            adjacency[ix].push((iy, EdgeLabel { pair: p, dir: Direction::Forward, mul: m }));
            adjacency[iy].push((ix, EdgeLabel { pair: p, dir: Direction::Backward, mul: m }));
            let (rx, ry) = (find(&mut class, ix), find(&mut class, iy));
            if rx != ry {
                let (lo, hi) = (rx.min(ry), rx.max(ry));
                class[hi] = lo;
            }
        }
    }
    let mut canonical: HashMap<usize, usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(n);
    for i in 0..n {
        let root = find(&mut class, i);
        let next = canonical.len();
        class_of.push(*canonical.entry(root).or_insert(next));
    }
    let num_classes = canonical.len();
    Ok(PartialCongruence {
        bound: k,
        words,
        class_of,
        num_classes,
        pairs: pairs.to_vec(),
        index,
        adjacency,
    })
}

/// Elements of the principal ideal of the first generator that are not
/// products of two ideal members, within total degree `k`.
#[derive(Debug, Clone)]
pub struct IndecomposablesReport {
    pub elements: Vec<Word>,
    pub count: usize,
}

pub fn witness_indecomposables(
    f: &NormalFormSemigroup,
    k: usize,
) -> Result<IndecomposablesReport, FpError> {
    let Family::FreeCommutative(2) = f.family else {
        return Err(FpError::BadSpec(
            "indecomposables witness runs on the free commutative semigroup of rank 2".into(),
        ));
    };
    if k < 2 {
        return Err(FpError::BoundTooSmall { required: 2, given: k });
    }
    let ball = f.ball(k)?;
    let ideal: Vec<&Word> = ball
        .iter()
        .filter(|w| matches!(w, Word::Vector(v) if v[0] >= 1))
        .collect();
    let mut out = Vec::new();
    for &u in &ideal {
        let decomposable = ideal.iter().any(|&v| {
            ideal.iter().any(|&w| &f.mul(v, w) == u)
        });
        if !decomposable {
            out.push(u.clone());
        }
    }
    let count = out.len();
    Ok(IndecomposablesReport { elements: out, count })
}

/// Which free-product theorem family an incomparability witness targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// Semigroup free product: generators `(ab)^i aca`.
    Sfp,
    /// Monoid free product: generators `(ba)^i cabac`.
    Mfp,
}

#[derive(Debug, Clone)]
pub struct IncomparabilityReport {
    pub kind: ProductKind,
    pub generators: Vec<Word>,
    /// Ordered pairs `(i, j)`, `i ≠ j`, with `u_i ∉ u_j · (ball ∪ {1})`
    /// certified.
    pub refuted: Vec<(usize, usize)>,
    pub pass: bool,
}

/// Verifies that the ideal generators `u_1..u_m` are pairwise incomparable:
/// no `u_i` is a right multiple of any `u_j`.
///
/// Completeness of the bounded check: for the semigroup free product a
/// product never shrinks below the left operand's length, so only
/// multipliers up to `len(u_m) - len(u_1) + 1` matter; for the monoid free
/// product cancellation can shorten words, and any multiplier longer than
/// `len(u_i) + len(u_j)` yields a product strictly longer than `u_i`.
pub fn witness_incomparable_ideals(
    f: &NormalFormSemigroup,
    kind: ProductKind,
    m: usize,
    k: usize,
) -> Result<IncomparabilityReport, FpError> {
    if m == 0 {
        return Err(FpError::BadSpec("need at least one generator".into()));
    }
    let generators: Vec<Word> = match (kind, &f.family) {
        (ProductKind::Sfp, Family::FreeProduct(s, t)) => {
            if t.order() < 2 {
                return Err(FpError::HypothesisViolated(
                    "second factor must be non-trivial".into(),
                ));
            }
            let a = Factor { side: FactorSide::First, elem: ElementId(0) };
            let b = Factor { side: FactorSide::Second, elem: ElementId(0) };
            let c = Factor { side: FactorSide::Second, elem: ElementId(1) };
            let _ = s;
            (1..=m)
                .map(|i| {
                    let mut w = Vec::new();
                    for _ in 0..i {
                        w.push(a);
                        w.push(b);
                    }
                    w.extend([a, c, a]);
                    Word::Product(w)
                })
                .collect()
        }
        (ProductKind::Mfp, Family::MonoidFreeProduct(s, t)) => {
            let (a, b, c) = choose_case2_letters(s, t)?;
            (1..=m)
                .map(|i| {
                    let mut w = Vec::new();
                    for _ in 0..i {
                        w.push(b);
                        w.push(a);
                    }
                    w.extend([c, a, b, a, c]);
                    Word::Product(w)
                })
                .collect()
        }
        _ => {
            return Err(FpError::BadSpec(
                "witness requires the matching free-product family".into(),
            ))
        }
    };
    debug_assert!(generators.iter().all(|g| f.is_canonical(g)));
    let max_len = generators.iter().map(word_len).max().unwrap();
    let min_len = generators.iter().map(word_len).min().unwrap();
    let required = match kind {
        ProductKind::Sfp => max_len - min_len + 1,
        ProductKind::Mfp => {
            let second = {
                let mut lens: Vec<usize> = generators.iter().map(word_len).collect();
                lens.sort();
                if lens.len() >= 2 {
                    lens[lens.len() - 2]
                } else {
                    0
                }
            };
            max_len + second
        }
    };
    if m > 1 && k < required {
        return Err(FpError::BoundTooSmall { required, given: k });
    }
    let ball = f.ball(k)?;
    let mut refuted = Vec::new();
    let mut pass = true;
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let target = &generators[i];
            let base = &generators[j];
            let mut hit = base == target;
            if !hit {
                for w in &ball {
                    // A multiple can differ in length from len(base)+len(w)
                    // only through boundary reduction; skip impossible
                    // lengths.
                    let (lb, lw, lt) = (word_len(base), word_len(w), word_len(target));
                    let feasible = match kind {
                        ProductKind::Sfp => lb + lw == lt || lb + lw == lt + 1,
                        ProductKind::Mfp => lb + lw >= lt,
                    };
                    if feasible && &f.mul(base, w) == target {
                        hit = true;
                        break;
                    }
                }
            }
            if hit {
                pass = false;
            } else {
                refuted.push((i + 1, j + 1));
            }
        }
    }
    Ok(IncomparabilityReport { kind, generators, refuted, pass })
}

/// Picks non-identity letters `a` (first factor) and `b ≠ c` (second
/// factor) such that at least one is not a right unit, scanning
/// lexicographically by index.
fn choose_case2_letters(
    m: &FiniteSemigroup,
    n: &FiniteSemigroup,
) -> Result<(Factor, Factor, Factor), FpError> {
    let em = m.identity().expect("monoid");
    let en = n.identity().expect("monoid");
    if n.order() < 3 {
        return Err(FpError::HypothesisViolated(
            "second factor needs two distinct non-identity elements".into(),
        ));
    }
    let is_right_unit = |s: &FiniteSemigroup, x: ElementId, e: ElementId| {
        s.elements().any(|y| s.mul(x, y) == e)
    };
    let ms: Vec<ElementId> = m.elements().filter(|&x| x != em).collect();
    let ns: Vec<ElementId> = n.elements().filter(|&x| x != en).collect();
    for &a in &ms {
        for &b in &ns {
            for &c in &ns {
                if b == c {
                    continue;
                }
                let all_units = is_right_unit(m, a, em)
                    && is_right_unit(n, b, en)
                    && is_right_unit(n, c, en);
                if !all_units {
                    return Ok((
                        Factor { side: FactorSide::First, elem: a },
                        Factor { side: FactorSide::Second, elem: b },
                        Factor { side: FactorSide::Second, elem: c },
                    ));
                }
            }
        }
    }
    Err(FpError::HypothesisViolated(
        "every choice of letters consists of right units".into(),
    ))
}

/// Decomposition of an alternating word over the two-generator
/// presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// A single generator left untouched by the power decomposition.
    Atom(char),
    /// `base_index`-th period word raised to `exponent`.
    PowerOf { base: usize, exponent: usize },
    Identity,
    /// `(ab)^i a` for `i ≥ 1`.
    U4 { exponent: usize },
    /// Covered by no period family (the plain letters `a` and `b`).
    Residual,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Atom(c) => write!(f, "atom({c})"),
            Classification::PowerOf { base, exponent } => write!(f, "u{base}^{exponent}"),
            Classification::Identity => write!(f, "identity"),
            Classification::U4 { exponent } => write!(f, "u1^{exponent}·a"),
            Classification::Residual => write!(f, "residual"),
        }
    }
}

/// Classifies a canonical word of `IdempotentPair` or `FlipIdem` by its
/// period decomposition.
pub fn classify_alternating(
    f: &NormalFormSemigroup,
    w: &Word,
) -> Result<Classification, FpError> {
    let Word::Letters(s) = w else {
        return Err(FpError::BadSpec("classification needs a letter word".into()));
    };
    if !f.is_canonical(w) {
        return Err(FpError::NotCanonical(s.clone()));
    }
    let len = s.len();
    let first = s.chars().next();
    match (&f.family, first) {
        (Family::IdempotentPair, Some(c)) => Ok(match (len, c, len % 2) {
            (1, c, _) => Classification::Atom(c),
            (_, 'e', 0) => Classification::PowerOf { base: 1, exponent: len / 2 },
            (_, 'f', 0) => Classification::PowerOf { base: 2, exponent: len / 2 },
            (_, 'e', _) => Classification::PowerOf { base: 3, exponent: (len - 1) / 2 },
            (_, 'f', _) => Classification::PowerOf { base: 4, exponent: (len - 1) / 2 },
            _ => unreachable!("canonical words use only e and f"),
        }),
        (Family::IdempotentPair, None) => {
            Err(FpError::NotCanonical("empty word has no meaning here".into()))
        }
        (Family::FlipIdem, None) => Ok(Classification::Identity),
        (Family::FlipIdem, Some(c)) => Ok(match (len % 2, c) {
            (0, 'a') => Classification::PowerOf { base: 1, exponent: len / 2 },
            (0, 'b') => Classification::PowerOf { base: 2, exponent: len / 2 },
            (1, 'b') if len >= 3 => Classification::PowerOf { base: 3, exponent: (len - 1) / 2 },
            (1, 'a') if len >= 3 => Classification::U4 { exponent: (len - 1) / 2 },
            // The bare letters a and b fall outside every period family.
            _ => Classification::Residual,
        }),
        _ => Err(FpError::BadSpec("classification applies to the letter families".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn flip() -> NormalFormSemigroup {
        NormalFormSemigroup::new(Family::FlipIdem).unwrap()
    }

    fn idem_pair() -> NormalFormSemigroup {
        NormalFormSemigroup::new(Family::IdempotentPair).unwrap()
    }

    fn letters(s: &str) -> Word {
        Word::Letters(s.into())
    }

    #[test]
    fn free_commutative_words_are_nonzero_vectors() {
        let f = NormalFormSemigroup::new(Family::FreeCommutative(2)).unwrap();
        assert!(f.is_canonical(&Word::Vector(vec![1, 0])));
        assert!(!f.is_canonical(&Word::Vector(vec![0, 0])));
        let ab = f.mul(&Word::Vector(vec![1, 1]), &Word::Vector(vec![0, 1]));
        assert_eq!(ab, Word::Vector(vec![1, 2]));
    }

    #[test]
    fn flip_idem_relations() {
        let f = flip();
        assert_eq!(f.mul(&letters("a"), &letters("a")), letters(""));
        assert_eq!(f.mul(&letters("b"), &letters("b")), letters("b"));
        assert_eq!(f.mul(&letters("ab"), &letters("ab")), letters("abab"));
        // aba · ab = ab(aa)b = ab·b = ab
        assert_eq!(f.mul(&letters("aba"), &letters("ab")), letters("ab"));
    }

    #[test]
    fn idempotent_pair_junction_merge() {
        let f = idem_pair();
        assert_eq!(f.mul(&letters("efe"), &letters("ef")), letters("efef"));
        assert_eq!(f.mul(&letters("e"), &letters("e")), letters("e"));
    }

    #[test]
    fn ball_counts_for_letter_families() {
        assert_eq!(idem_pair().ball(4).unwrap().len(), 8);
        let b2 = flip().ball(2).unwrap();
        let shown: Vec<String> = b2.iter().map(|w| flip().format_word(w)).collect();
        assert_eq!(shown, vec!["1", "a", "b", "ab", "ba"]);
    }

    #[test]
    fn free_commutative_ball_by_degree() {
        let f = NormalFormSemigroup::new(Family::FreeCommutative(2)).unwrap();
        let b = f.ball(2).unwrap();
        let shown: Vec<String> = b.iter().map(|w| f.format_word(w)).collect();
        assert_eq!(shown, vec!["b", "a", "b^2", "a b", "a^2"]);
    }

    #[test]
    fn monogenic_balls() {
        let f = NormalFormSemigroup::new(Family::FreeMonogenic).unwrap();
        assert_eq!(f.ball(3).unwrap().len(), 3);
        let g = NormalFormSemigroup::new(Family::FreeMonogenicWithIdentity).unwrap();
        assert_eq!(g.ball(3).unwrap().len(), 4);
    }

    #[test]
    fn ball_cap_is_enforced() {
        let f = NormalFormSemigroup::new(Family::IdempotentPair).unwrap().with_ball_cap(5);
        assert!(matches!(f.ball(4), Err(FpError::BallTooLarge { .. })));
    }

    #[test]
    fn free_product_boundary_merge() {
        let s = gallery::cyclic(2);
        let t = gallery::right_zero(2);
        let f = NormalFormSemigroup::new(Family::FreeProduct(Box::new(s), Box::new(t)))
            .unwrap();
        let x = Word::Product(vec![
            Factor { side: FactorSide::First, elem: ElementId(1) },
            Factor { side: FactorSide::Second, elem: ElementId(0) },
        ]);
        let y = Word::Product(vec![
            Factor { side: FactorSide::Second, elem: ElementId(1) },
            Factor { side: FactorSide::First, elem: ElementId(1) },
        ]);
        // ...t0 | t1... merges in the right-zero factor to t1.
        let p = f.mul(&x, &y);
        assert_eq!(
            p,
            Word::Product(vec![
                Factor { side: FactorSide::First, elem: ElementId(1) },
                Factor { side: FactorSide::Second, elem: ElementId(1) },
                Factor { side: FactorSide::First, elem: ElementId(1) },
            ])
        );
    }

    #[test]
    fn monoid_free_product_cascades_identities() {
        let m = gallery::cyclic(2);
        let n = gallery::chain_semilattice(2);
        let f = NormalFormSemigroup::new(Family::MonoidFreeProduct(
            Box::new(m),
            Box::new(n),
        ))
        .unwrap();
        let a = Factor { side: FactorSide::First, elem: ElementId(1) };
        let b = Factor { side: FactorSide::Second, elem: ElementId(0) };
        // (a b a) · (a b a): the inner aa cancels to the identity, the two
        // exposed b's merge (bb = b), and nothing else collapses.
        let w = Word::Product(vec![a, b, a]);
        let p = f.mul(&w, &w);
        assert_eq!(p, Word::Product(vec![a, b, a]));
    }

    #[test]
    fn monoid_free_product_matches_flip_idem_on_a_ball() {
        let f = NormalFormSemigroup::new(Family::MonoidFreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::chain_semilattice(2)),
        ))
        .unwrap();
        let g = flip();
        let to_letters = |w: &Word| -> Word {
            let Word::Product(factors) = w else { panic!("product word") };
            Word::Letters(
                factors
                    .iter()
                    .map(|fac| if fac.side == FactorSide::First { 'a' } else { 'b' })
                    .collect(),
            )
        };
        let ball_f = f.ball(6).unwrap();
        let ball_g = g.ball(6).unwrap();
        assert_eq!(ball_f.len(), ball_g.len());
        // The translation is a bijection on the ball and preserves products.
        for x in &ball_f {
            assert!(ball_g.contains(&to_letters(x)));
            for y in &ball_f {
                assert_eq!(to_letters(&f.mul(x, y)), g.mul(&to_letters(x), &to_letters(y)));
            }
        }
    }

    #[test]
    fn associativity_on_ball_samples() {
        let families: Vec<NormalFormSemigroup> = vec![
            NormalFormSemigroup::new(Family::FreeCommutative(2)).unwrap(),
            idem_pair(),
            flip(),
            NormalFormSemigroup::new(Family::FreeProduct(
                Box::new(gallery::cyclic(2)),
                Box::new(gallery::right_zero(2)),
            ))
            .unwrap(),
            NormalFormSemigroup::new(Family::MonoidFreeProduct(
                Box::new(gallery::cyclic(2)),
                Box::new(gallery::chain_semilattice(2)),
            ))
            .unwrap(),
        ];
        for f in &families {
            let ball = f.ball(3).unwrap();
            for x in &ball {
                for y in &ball {
                    for z in &ball {
                        let left = f.mul(&f.mul(x, y), z);
                        let right = f.mul(x, &f.mul(y, z));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_on_scrambled_words() {
        let f = flip();
        for raw in ["aabb", "abba", "aaaa", "babab", "bbaa"] {
            let once = f.reduce(&letters(raw));
            let twice = f.reduce(&once);
            assert_eq!(once, twice);
            assert!(f.is_canonical(&once));
        }
    }

    #[test]
    fn bounded_closure_with_no_pairs_is_discrete() {
        let f = flip();
        let pc = bounded_rc_closure(&f, &[], 3).unwrap();
        assert_eq!(pc.num_classes, pc.words.len());
        assert_eq!(pc.query(&f, &letters("a"), &letters("b")), BoundedVerdict::Unknown);
    }

    #[test]
    fn bounded_closure_replays_the_flip_idem_derivation() {
        // From the single pair (u1², u1·a) = (abab, aba), right
        // multiplication by u1 connects u1³ with u1.
        let f = flip();
        let pairs = vec![(letters("abab"), letters("aba"))];
        let pc = bounded_rc_closure(&f, &pairs, 8).unwrap();
        match pc.query(&f, &letters("ababab"), &letters("ab")) {
            BoundedVerdict::Proven(seq) => {
                let end = seq.replay(&f, &pairs, &letters("ababab")).unwrap();
                assert_eq!(end, letters("ab"));
            }
            BoundedVerdict::Unknown => panic!("derivation exists inside ball(8)"),
        }
    }

    #[test]
    fn bounded_closure_is_monotone_in_the_bound() {
        let f = flip();
        let pairs = vec![(letters("abab"), letters("aba"))];
        let small = bounded_rc_closure(&f, &pairs, 6).unwrap();
        let large = bounded_rc_closure(&f, &pairs, 8).unwrap();
        for (i, w) in small.words.iter().enumerate() {
            for (j, v) in small.words.iter().enumerate() {
                if small.class_of[i] == small.class_of[j] {
                    let (li, lj) =
                        (large.position_of(w).unwrap(), large.position_of(v).unwrap());
                    assert_eq!(large.class_of[li], large.class_of[lj]);
                }
            }
        }
    }

    #[test]
    fn bounded_closure_rejects_pairs_outside_the_ball() {
        let f = flip();
        let pairs = vec![(letters("ababab"), letters("a"))];
        assert!(matches!(
            bounded_rc_closure(&f, &pairs, 3),
            Err(FpError::PairOutsideBall { .. })
        ));
    }

    #[test]
    fn indecomposables_of_the_generator_ideal() {
        let f = NormalFormSemigroup::new(Family::FreeCommutative(2)).unwrap();
        let report = witness_indecomposables(&f, 3).unwrap();
        let shown: Vec<String> = report.elements.iter().map(|w| f.format_word(w)).collect();
        assert_eq!(shown, vec!["a", "a b", "a b^2"]);
        assert_eq!(report.count, 3);
        for k in [2, 6, 10] {
            assert_eq!(witness_indecomposables(&f, k).unwrap().count, k);
        }
    }

    #[test]
    fn sfp_incomparability_refutes_all_pairs() {
        let f = NormalFormSemigroup::new(Family::FreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::right_zero(2)),
        ))
        .unwrap();
        let report = witness_incomparable_ideals(&f, ProductKind::Sfp, 3, 16).unwrap();
        assert!(report.pass);
        assert_eq!(report.refuted.len(), 6);
    }

    #[test]
    fn sfp_single_generator_is_vacuous() {
        let f = NormalFormSemigroup::new(Family::FreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::right_zero(2)),
        ))
        .unwrap();
        let report = witness_incomparable_ideals(&f, ProductKind::Sfp, 1, 16).unwrap();
        assert!(report.pass);
        assert!(report.refuted.is_empty());
    }

    #[test]
    fn mfp_incomparability_on_flip_like_product() {
        let three = gallery::chain_semilattice(3);
        let f = NormalFormSemigroup::new(Family::MonoidFreeProduct(
            Box::new(gallery::chain_semilattice(2)),
            Box::new(three),
        ))
        .unwrap();
        let report = witness_incomparable_ideals(&f, ProductKind::Mfp, 3, 22).unwrap();
        assert!(report.pass);
        assert_eq!(report.refuted.len(), 6);
    }

    #[test]
    fn mfp_with_all_units_violates_the_hypothesis() {
        let f = NormalFormSemigroup::new(Family::MonoidFreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::cyclic(3)),
        ))
        .unwrap();
        assert!(matches!(
            witness_incomparable_ideals(&f, ProductKind::Mfp, 3, 22),
            Err(FpError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn too_small_bound_is_reported() {
        let f = NormalFormSemigroup::new(Family::FreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::right_zero(2)),
        ))
        .unwrap();
        assert!(matches!(
            witness_incomparable_ideals(&f, ProductKind::Sfp, 3, 2),
            Err(FpError::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn idempotent_pair_classification() {
        let f = idem_pair();
        assert_eq!(
            classify_alternating(&f, &letters("efef")).unwrap(),
            Classification::PowerOf { base: 1, exponent: 2 }
        );
        assert_eq!(classify_alternating(&f, &letters("e")).unwrap(), Classification::Atom('e'));
        assert_eq!(
            classify_alternating(&f, &letters("fef")).unwrap(),
            Classification::PowerOf { base: 4, exponent: 1 }
        );
    }

    #[test]
    fn idempotent_pair_coverage_on_a_ball() {
        let f = idem_pair();
        for w in f.ball(12).unwrap() {
            let class = classify_alternating(&f, &w).unwrap();
            if word_len(&w) >= 2 {
                assert!(matches!(class, Classification::PowerOf { .. }));
            } else {
                assert!(matches!(class, Classification::Atom(_)));
            }
        }
    }

    #[test]
    fn flip_idem_classification_including_residuals() {
        let f = flip();
        assert_eq!(classify_alternating(&f, &letters("")).unwrap(), Classification::Identity);
        assert_eq!(
            classify_alternating(&f, &letters("aba")).unwrap(),
            Classification::U4 { exponent: 1 }
        );
        assert_eq!(
            classify_alternating(&f, &letters("bab")).unwrap(),
            Classification::PowerOf { base: 3, exponent: 1 }
        );
        assert_eq!(classify_alternating(&f, &letters("a")).unwrap(), Classification::Residual);
        assert_eq!(classify_alternating(&f, &letters("b")).unwrap(), Classification::Residual);
    }

    #[test]
    fn word_formatting_round_trips() {
        let fc = NormalFormSemigroup::new(Family::FreeCommutative(2)).unwrap();
        for w in fc.ball(3).unwrap() {
            assert_eq!(fc.parse_word(&fc.format_word(&w)).unwrap(), w);
        }
        let fp = NormalFormSemigroup::new(Family::FreeProduct(
            Box::new(gallery::cyclic(2)),
            Box::new(gallery::right_zero(2)),
        ))
        .unwrap();
        for w in fp.ball(3).unwrap() {
            assert_eq!(fp.parse_word(&fp.format_word(&w)).unwrap(), w);
        }
        let f = flip();
        for w in f.ball(3).unwrap() {
            assert_eq!(f.parse_word(&f.format_word(&w)).unwrap(), w);
        }
    }
}
