//! Deterministic automata over an ordered alphabet.
//!
//! Transition functions are partial: a missing transition leads to an
//! implicit dead sink that is never materialized. Symbols are strings and
//! the order of the alphabet vector is the total order used by every
//! genealogical (radix) operation in the crate. Words are handled as
//! vectors of symbol indices.

mod enumerate;
mod io;
mod minimize;
mod ops;

pub use enumerate::{count_from, nth_word, word_index, LengthCounts, Words};
pub use io::DfaJson;
pub use ops::{boolean_op, equivalent, BoolOp, Equivalence};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A word, as a sequence of indices into an alphabet.
pub type Word = Vec<usize>;

/// Deterministic finite automaton with a partial transition function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    initial: usize,
    finals: Vec<bool>,
    delta: Vec<Vec<Option<usize>>>,
}

impl Dfa {
    /// Builds an automaton from indexed transitions `(from, symbol, to)`.
    pub fn new(
        alphabet: Vec<String>,
        state_count: usize,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        check_alphabet(&alphabet)?;
        if state_count == 0 {
            return Err(Error::InvalidAutomaton("an automaton needs at least one state".into()));
        }
        if initial >= state_count {
            return Err(Error::InvalidAutomaton(format!("initial state {initial} out of range")));
        }
        let mut is_final = vec![false; state_count];
        for f in finals {
            if f >= state_count {
                return Err(Error::InvalidAutomaton(format!("final state {f} out of range")));
            }
            is_final[f] = true;
        }
        let mut delta = vec![vec![None; alphabet.len()]; state_count];
        for (from, sym, to) in transitions {
            if from >= state_count || to >= state_count {
                return Err(Error::InvalidAutomaton(format!(
                    "transition ({from}, {sym}, {to}) references a missing state"
                )));
            }
            if sym >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!("symbol index {sym} out of range")));
            }
            match delta[from][sym] {
                Some(existing) if existing != to => {
                    return Err(Error::InvalidAutomaton(format!(
                        "state {from} has two transitions on `{}`",
                        alphabet[sym]
                    )))
                }
                _ => delta[from][sym] = Some(to),
            }
        }
        Ok(Dfa { alphabet, initial, finals: is_final, delta })
    }

    /// Same as [`Dfa::new`] with transitions labelled by symbol names.
    pub fn with_symbols<S: AsRef<str>>(
        alphabet: Vec<String>,
        state_count: usize,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, S, usize)>,
    ) -> Result<Self> {
        let mut indexed = Vec::new();
        for (from, sym, to) in transitions {
            let sym = sym.as_ref();
            let idx = alphabet
                .iter()
                .position(|a| a == sym)
                .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))?;
            indexed.push((from, idx, to));
        }
        Dfa::new(alphabet, state_count, initial, finals, indexed)
    }

    /// Accepts every word over `alphabet`.
    pub fn universal(alphabet: Vec<String>) -> Result<Self> {
        let n = alphabet.len();
        Dfa::new(alphabet, 1, 0, [0], (0..n).map(|a| (0, a, 0)))
    }

    /// Accepts nothing.
    pub fn empty(alphabet: Vec<String>) -> Result<Self> {
        Dfa::new(alphabet, 1, 0, [], [])
    }

    /// Trie automaton for a finite set of words, minimized.
    pub fn from_words<'a>(alphabet: Vec<String>, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        let sigma = alphabet.len();
        let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; sigma]];
        let mut finals = vec![false];
        for w in words {
            let mut q = 0;
            for &a in w {
                if a >= sigma {
                    return Err(Error::InvalidAutomaton(format!("symbol index {a} out of range")));
                }
                q = match delta[q][a] {
                    Some(next) => next,
                    None => {
                        delta.push(vec![None; sigma]);
                        finals.push(false);
                        let next = delta.len() - 1;
                        delta[q][a] = Some(next);
                        next
                    }
                };
            }
            finals[q] = true;
        }
        Ok(Dfa { alphabet, initial: 0, finals, delta }.minimize())
    }

    /// Digit alphabet `0, 1, ..., base-1`.
    pub fn digit_alphabet(base: usize) -> Vec<String> {
        (0..base).map(|d| d.to_string()).collect()
    }

    pub(crate) fn from_parts(
        alphabet: Vec<String>,
        initial: usize,
        finals: Vec<bool>,
        delta: Vec<Vec<Option<usize>>>,
    ) -> Self {
        debug_assert_eq!(finals.len(), delta.len());
        Dfa { alphabet, initial, finals, delta }
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, f)| **f).map(|(q, _)| q)
    }

    pub fn next(&self, q: usize, symbol: usize) -> Option<usize> {
        self.delta[q][symbol]
    }

    /// All defined transitions, ordered by source state then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(q, row)| row.iter().enumerate().filter_map(move |(a, t)| t.map(|t| (q, a, t))))
    }

    /// Follows `word` from `from`; `None` once the path falls into the dead sink.
    pub fn run_from(&self, from: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(from, |q, &a| self.delta[q].get(a).copied().flatten())
    }

    pub fn run(&self, word: &[usize]) -> Option<usize> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.run(word).is_some_and(|q| self.finals[q])
    }

    /// Same automaton with a different set of final states.
    pub fn with_finals(&self, finals: impl IntoIterator<Item = usize>) -> Self {
        let mut is_final = vec![false; self.state_count()];
        for f in finals {
            is_final[f] = true;
        }
        Dfa { finals: is_final, ..self.clone() }
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|a| a == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    /// Parses a word. With single-character symbols the text is read
    /// character by character, otherwise symbols are whitespace separated.
    /// The strings `""` and `ε` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Vec::new());
        }
        if self.alphabet.iter().all(|a| a.chars().count() == 1) && !text.contains(char::is_whitespace) {
            text.chars().map(|c| self.symbol_index(&c.to_string())).collect()
        } else {
            text.split_whitespace().map(|s| self.symbol_index(s)).collect()
        }
    }

    /// Inverse of [`Dfa::parse_word`]; the empty word prints as `""`.
    pub fn format_word(&self, word: &[usize]) -> String {
        format_word(&self.alphabet, word)
    }

    /// States reachable from the initial state.
    pub fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for t in self.delta[q].iter().flatten() {
                if !seen[*t] {
                    seen[*t] = true;
                    stack.push(*t);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds = vec![Vec::new(); n];
        for (q, _, t) in self.transitions() {
            preds[t].push(q);
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<usize> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// True when no word is accepted.
    pub fn is_empty_language(&self) -> bool {
        !self.coaccessible()[self.initial]
    }

    /// Number of live (accessible and co-accessible) states.
    pub fn live_state_count(&self) -> usize {
        let acc = self.accessible();
        let co = self.coaccessible();
        acc.iter().zip(&co).filter(|(a, c)| **a && **c).count()
    }

    /// Size of the complete minimal automaton: live states plus the dead
    /// sink when some transition is missing.
    pub fn complete_state_count(&self) -> usize {
        let m = self.minimize();
        if m.is_empty_language() {
            return 1;
        }
        let partial = m.delta.iter().any(|row| row.iter().any(Option::is_none));
        m.state_count() + usize::from(partial)
    }

    /// True when the accepted language is infinite.
    pub fn is_infinite(&self) -> bool {
        let trimmed = self.minimize();
        if trimmed.is_empty_language() {
            return false;
        }
        // every state of the minimized automaton is live: look for a cycle
        let mut color = vec![0u8; trimmed.state_count()];
        let mut stack = vec![(trimmed.initial, 0usize)];
        color[trimmed.initial] = 1;
        while let Some(&mut (q, ref mut next)) = stack.last_mut() {
            let row = &trimmed.delta[q];
            if *next == row.len() {
                color[q] = 2;
                stack.pop();
                continue;
            }
            let a = *next;
            *next += 1;
            if let Some(t) = row[a] {
                match color[t] {
                    1 => return true,
                    0 => {
                        color[t] = 1;
                        stack.push((t, 0));
                    }
                    _ => {}
                }
            }
        }
        false
    }

    /// Nondeterministic automaton for the reversed language.
    pub fn reverse(&self) -> Nfa {
        let n = self.state_count();
        let mut delta = vec![vec![Vec::new(); self.alphabet.len()]; n];
        for (q, a, t) in self.transitions() {
            delta[t][a].push(q);
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            initials: self.finals().collect(),
            finals: [self.initial].into_iter().collect(),
            delta,
        }
    }

    /// Deterministic automaton for `{ reverse(w) : w ∈ L }`, minimized.
    pub fn reverse_determinize(&self) -> Dfa {
        self.reverse().determinize().minimize()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        io::to_dot(self)
    }
}

pub(crate) fn check_alphabet(alphabet: &[String]) -> Result<()> {
    let distinct: BTreeSet<&String> = alphabet.iter().collect();
    if distinct.len() != alphabet.len() {
        return Err(Error::InvalidAutomaton("duplicate symbol in alphabet".into()));
    }
    if alphabet.iter().any(String::is_empty) {
        return Err(Error::InvalidAutomaton("empty symbol in alphabet".into()));
    }
    Ok(())
}

pub(crate) fn format_word(alphabet: &[String], word: &[usize]) -> String {
    if word.is_empty() {
        return String::new();
    }
    let sep = if alphabet.iter().all(|a| a.chars().count() == 1) { "" } else { " " };
    word.iter().map(|&a| alphabet[a].as_str()).collect::<Vec<_>>().join(sep)
}

/// Genealogical (radix) comparison: shorter words first, then
/// lexicographic by symbol index.
pub fn genealogical_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Nondeterministic automaton, used as an intermediate for reversal.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Vec<String>,
    initials: BTreeSet<usize>,
    finals: BTreeSet<usize>,
    delta: Vec<Vec<Vec<usize>>>,
}

impl Nfa {
    pub fn new(
        alphabet: Vec<String>,
        state_count: usize,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        check_alphabet(&alphabet)?;
        let initials: BTreeSet<usize> = initials.into_iter().collect();
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        if initials.iter().chain(&finals).any(|&q| q >= state_count) {
            return Err(Error::InvalidAutomaton("state index out of range".into()));
        }
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; state_count];
        for (from, a, to) in transitions {
            if from >= state_count || to >= state_count || a >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!("bad transition ({from}, {a}, {to})")));
            }
            delta[from][a].push(to);
        }
        Ok(Nfa { alphabet, initials, finals, delta })
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    /// Subset construction over the ordered alphabet. The empty subset is
    /// the implicit dead sink and is not materialized.
    pub fn determinize(&self) -> Dfa {
        use std::collections::HashMap;
        let sigma = self.alphabet.len();
        let start: Vec<usize> = self.initials.iter().copied().collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<Option<usize>>> = Vec::new();
        let mut finals = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let current = subsets[i].clone();
            finals.push(current.iter().any(|q| self.finals.contains(q)));
            let mut row = vec![None; sigma];
            for (a, slot) in row.iter_mut().enumerate() {
                let mut target: Vec<usize> =
                    current.iter().flat_map(|&q| self.delta[q][a].iter().copied()).collect();
                if target.is_empty() {
                    continue;
                }
                target.sort_unstable();
                target.dedup();
                let next = match index.get(&target) {
                    Some(&j) => j,
                    None => {
                        subsets.push(target.clone());
                        index.insert(target, subsets.len() - 1);
                        subsets.len() - 1
                    }
                };
                *slot = Some(next);
            }
            delta.push(row);
            i += 1;
        }
        Dfa::from_parts(self.alphabet.clone(), 0, finals, delta)
    }
}

/// Deterministic automaton with output: every state is final and carries
/// an output symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfao {
    automaton: Dfa,
    outputs: Vec<String>,
}

impl Dfao {
    pub fn new(automaton: Dfa, outputs: Vec<String>) -> Result<Self> {
        if outputs.len() != automaton.state_count() {
            return Err(Error::InvalidAutomaton(format!(
                "{} outputs for {} states",
                outputs.len(),
                automaton.state_count()
            )));
        }
        let all = automaton.with_finals(0..automaton.state_count());
        Ok(Dfao { automaton: all, outputs })
    }

    pub fn automaton(&self) -> &Dfa {
        &self.automaton
    }

    pub fn output(&self, q: usize) -> &str {
        &self.outputs[q]
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    /// Output reached after reading `word`, if the path is defined.
    pub fn evaluate(&self, word: &[usize]) -> Option<&str> {
        self.automaton.run(word).map(|q| self.outputs[q].as_str())
    }

    /// Automaton accepting the words whose output is `symbol`.
    pub fn fiber(&self, symbol: &str) -> Dfa {
        let finals: Vec<usize> = (0..self.outputs.len()).filter(|&q| self.outputs[q] == symbol).collect();
        self.automaton.with_finals(finals)
    }
}
