//! Ultimate periodicity of words `f(g^ω(a))` for a prolongable morphism
//! `g` and a coding `f`, through an abstract numeration system in which
//! the word is automatic.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::ans::{decide_ans_with, AbstractSystem};
use crate::automata::{Dfa, Dfao};
use crate::error::{Error, Result};
use crate::search::{search_candidates, SearchOptions};
use crate::upset::{DecisionVerdict, UpSet};

/// Number of letters compared against direct iteration.
pub const VALIDATION_LENGTH: usize = 500;

/// Periods tried when the system misses the hypotheses of the decision
/// procedure; a hit is still certified exactly.
pub const FALLBACK_PERIODS: u64 = 64;

/// A morphism on single-character letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    images: BTreeMap<char, Vec<char>>,
}

impl Morphism {
    pub fn new(images: BTreeMap<char, Vec<char>>) -> Self {
        Morphism { images }
    }

    /// Parses pairs such as `("a", "ab")`.
    pub fn parse<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut images = BTreeMap::new();
        for (letter, image) in pairs {
            let mut chars = letter.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::InvalidMorphism(format!("`{letter}` is not a single letter")));
            };
            images.insert(c, image.chars().collect());
        }
        Ok(Morphism { images })
    }

    /// The identity on `letters`.
    pub fn identity(letters: impl IntoIterator<Item = char>) -> Self {
        Morphism { images: letters.into_iter().map(|c| (c, vec![c])).collect() }
    }

    pub fn image(&self, letter: char) -> Option<&[char]> {
        self.images.get(&letter).map(Vec::as_slice)
    }

    /// Domain letters in increasing order.
    pub fn domain(&self) -> impl Iterator<Item = char> + '_ {
        self.images.keys().copied()
    }

    pub fn apply(&self, word: &[char]) -> Result<Vec<char>> {
        let mut out = Vec::new();
        for &c in word {
            out.extend_from_slice(
                self.image(c).ok_or_else(|| Error::InvalidMorphism(format!("no image for `{c}`")))?,
            );
        }
        Ok(out)
    }

    /// Prefix of length `n` of the fixed point `g^ω(a)`.
    pub fn fixed_point_prefix(&self, a: char, n: usize) -> Result<Vec<char>> {
        let mut word = vec![a];
        while word.len() < n {
            let next = self.apply(&word)?;
            if next.len() <= word.len() {
                return Err(Error::InvalidMorphism(format!("the iterates of `{a}` stop growing")));
            }
            word = next;
        }
        word.truncate(n);
        Ok(word)
    }
}

/// An abstract numeration system and an automaton with output reading
/// `rep_S(n)` and producing the `n`-th letter.
#[derive(Clone, Debug)]
pub struct AutomaticPresentation {
    pub system: AbstractSystem,
    pub output_machine: Dfao,
    /// The letters of the coding's image, sorted.
    pub letters: Vec<String>,
}

impl AutomaticPresentation {
    /// The `n`-th letter, for a word of the language.
    pub fn letter(&self, word: &[usize]) -> Option<&str> {
        self.output_machine.evaluate(word)
    }
}

/// Builds the presentation of `f(g^ω(a))`.
///
/// Digits are `0..M` with `M` the longest image of `g`; the automaton has
/// one state per letter and reads digit `j` from `b` to the `j`-th letter
/// of `g(b)`. The language is the empty word together with the words
/// starting with a nonzero digit whose path from `a` is defined. The
/// result is checked against the first [`VALIDATION_LENGTH`] letters.
pub fn build_presentation(f: &Morphism, g: &Morphism, a: char) -> Result<AutomaticPresentation> {
    let letters: Vec<char> = g.domain().collect();
    let index = |c: char| letters.iter().position(|&x| x == c);
    let start = g.image(a).ok_or_else(|| Error::InvalidMorphism(format!("`{a}` has no image under g")))?;
    if start.len() < 2 || start[0] != a {
        return Err(Error::InvalidMorphism(format!("g is not prolongable on `{a}`")));
    }
    let mut outputs = Vec::with_capacity(letters.len());
    for &b in &letters {
        let image = g.image(b).expect("domain letter");
        if image.is_empty() {
            return Err(Error::InvalidMorphism(format!("g erases `{b}`")));
        }
        if let Some(&c) = image.iter().find(|&&c| index(c).is_none()) {
            return Err(Error::InvalidMorphism(format!("g maps `{b}` to `{c}` outside its domain")));
        }
        match f.image(b) {
            Some([c]) => outputs.push(c.to_string()),
            Some(_) => return Err(Error::InvalidMorphism(format!("f maps `{b}` to a word that is not a letter"))),
            None => return Err(Error::InvalidMorphism(format!("f has no image for `{b}`"))),
        }
    }
    let width = letters.iter().map(|&b| g.image(b).expect("domain letter").len()).max().unwrap_or(0);
    let alphabet = Dfa::digit_alphabet(width);
    let mut machine = Vec::new();
    for (p, &b) in letters.iter().enumerate() {
        for (j, &c) in g.image(b).expect("domain letter").iter().enumerate() {
            machine.push((p, j, index(c).expect("checked")));
        }
    }
    let n = letters.len();
    let a_index = index(a).expect("checked");
    let dfao = Dfao::new(Dfa::new(alphabet.clone(), n, a_index, 0..n, machine.iter().copied())?, outputs.clone())?;
    // language: fresh initial state `n` without the zero digit
    let mut transitions = machine.clone();
    transitions.extend(machine.iter().filter(|&&(p, j, _)| p == a_index && j > 0).map(|&(_, j, q)| (n, j, q)));
    let language = Dfa::new(alphabet, n + 1, n, 0..=n, transitions)?;
    let system = AbstractSystem::new(&language)?;

    let expected = g.fixed_point_prefix(a, VALIDATION_LENGTH)?;
    for (i, word) in system.language().words().take(VALIDATION_LENGTH).enumerate() {
        let got = dfao.evaluate(&word);
        let want = f.image(expected[i]).map(|c| c[0].to_string());
        if got.map(str::to_string) != want {
            return Err(Error::PresentationMismatch(format!(
                "letter {i}: automaton gives {got:?}, iteration gives {want:?}"
            )));
        }
    }
    let mut letters: Vec<String> = outputs;
    letters.sort();
    letters.dedup();
    Ok(AutomaticPresentation { system, output_machine: dfao, letters })
}

/// Automaton for `rep_S(X_b)` with `X_b = { n : w_n = b }`; empty when
/// `b` never occurs.
pub fn fiber_dfa(pres: &AutomaticPresentation, b: &str) -> Result<Dfa> {
    if b.chars().count() != 1 {
        return Err(Error::UnknownSymbol(b.to_string()));
    }
    pres.output_machine.fiber(b).intersect(pres.system.language())
}

/// Word-level outcome of [`decide_hd0l`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordVerdict {
    UltimatelyPeriodic { preperiod: usize, period: usize },
    NotUltimatelyPeriodic,
    Inapplicable { reason: String },
}

/// Per-letter verdicts and the verdict on the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hd0lVerdict {
    pub letters: Vec<(String, DecisionVerdict)>,
    pub overall: WordVerdict,
}

impl fmt::Display for Hd0lVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, v) in &self.letters {
            writeln!(f, "{b}: {v}")?;
        }
        match &self.overall {
            WordVerdict::UltimatelyPeriodic { preperiod, period } => {
                write!(f, "word: ultimately periodic (preperiod {preperiod}, period {period})")
            }
            WordVerdict::NotUltimatelyPeriodic => write!(f, "word: not ultimately periodic"),
            WordVerdict::Inapplicable { reason } => write!(f, "word: inapplicable: {reason}"),
        }
    }
}

/// Decides whether `f(g^ω(a))` is ultimately periodic, letter by letter.
///
/// When the induced system misses the hypotheses of the decision
/// procedure, periods up to [`FALLBACK_PERIODS`] are still tried; a set
/// found this way is certified by automaton equivalence, and otherwise the
/// letter is reported inapplicable.
pub fn decide_hd0l(f: &Morphism, g: &Morphism, a: char, opts: SearchOptions) -> Result<Hd0lVerdict> {
    let pres = build_presentation(f, g, a)?;
    let hypotheses = pres.system.hypothesis_check()?;
    let mut letters = Vec::new();
    for b in &pres.letters {
        let x = fiber_dfa(&pres, b)?;
        let verdict = if hypotheses.passed() {
            decide_ans_with(&pres.system, &x, opts)?
        } else {
            let periods: Vec<u64> = (1..=FALLBACK_PERIODS.min(opts.max_period)).collect();
            match search_candidates(&pres.system, &x.minimize(), &periods, |_| true, opts.parallel)? {
                Some(up) => DecisionVerdict::UltimatelyPeriodic { up },
                None => DecisionVerdict::Inapplicable {
                    reason: format!(
                        "{}; no period up to {} fits",
                        hypotheses.problems.join("; "),
                        periods.len()
                    ),
                },
            }
        };
        letters.push((b.clone(), verdict));
    }
    let overall = overall(&letters);
    Ok(Hd0lVerdict { letters, overall })
}

fn overall(letters: &[(String, DecisionVerdict)]) -> WordVerdict {
    let mut preperiod = 0;
    let mut period = 1;
    let mut pending = None;
    for (b, v) in letters {
        match v {
            DecisionVerdict::UltimatelyPeriodic { up } => {
                preperiod = preperiod.max(up.preperiod_len());
                period = period.lcm(&up.period_len());
            }
            DecisionVerdict::NotUltimatelyPeriodic { .. } => return WordVerdict::NotUltimatelyPeriodic,
            DecisionVerdict::Inapplicable { reason } => {
                pending.get_or_insert_with(|| format!("letter {b}: {reason}"));
            }
        }
    }
    match pending {
        Some(reason) => WordVerdict::Inapplicable { reason },
        None => WordVerdict::UltimatelyPeriodic { preperiod, period },
    }
}

/// The set `X_b` read off a periodic word, for tests and tools.
pub fn letter_set(word: &[char], b: char, preperiod: usize, period: usize) -> Result<UpSet> {
    let bits = |range: std::ops::Range<usize>| range.map(|i| word[i] == b).collect::<Vec<_>>();
    UpSet::new(bits(0..preperiod), bits(preperiod..preperiod + period))
}
