//! Path counting and genealogical enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Dfa, Word};
use crate::error::{Error, Result};

/// Lazily extended table of `u_i(q)`, the number of words of length `i`
/// accepted from state `q`.
#[derive(Clone, Debug)]
pub struct LengthCounts<'a> {
    dfa: &'a Dfa,
    table: Vec<Vec<BigUint>>,
}

impl<'a> LengthCounts<'a> {
    pub fn new(dfa: &'a Dfa) -> Self {
        let base = (0..dfa.state_count())
            .map(|q| if dfa.is_final(q) { BigUint::one() } else { BigUint::zero() })
            .collect();
        LengthCounts { dfa, table: vec![base] }
    }

    pub fn ensure(&mut self, len: usize) {
        while self.table.len() <= len {
            let last = self.table.last().expect("table starts non-empty");
            let row = (0..self.dfa.state_count())
                .map(|q| {
                    self.dfa.delta[q]
                        .iter()
                        .flatten()
                        .fold(BigUint::zero(), |acc, &t| acc + &last[t])
                })
                .collect();
            self.table.push(row);
        }
    }

    /// `u_len(q)`.
    pub fn get(&mut self, len: usize, q: usize) -> &BigUint {
        self.ensure(len);
        &self.table[len][q]
    }

    /// `v_len(q)`: words of length at most `len` accepted from `q`.
    pub fn up_to(&mut self, len: usize, q: usize) -> BigUint {
        self.ensure(len);
        self.table[..=len].iter().map(|row| &row[q]).sum()
    }
}

/// `(u_i(q), v_i(q))`.
pub fn count_from(dfa: &Dfa, q: usize, i: usize) -> (BigUint, BigUint) {
    let mut counts = LengthCounts::new(dfa);
    let u = counts.get(i, q).clone();
    (u, counts.up_to(i, q))
}

/// The `n`-th accepted word (0-indexed) in genealogical order.
pub fn nth_word(dfa: &Dfa, n: &BigUint) -> Result<Word> {
    let infinite = dfa.is_infinite();
    let mut counts = LengthCounts::new(dfa);
    let mut rest = n.clone();
    let mut len = 0usize;
    loop {
        if !infinite && len > dfa.state_count() {
            let size = n - &rest;
            return Err(Error::IndexOutOfRange { index: n.clone(), size });
        }
        let here = counts.get(len, dfa.initial).clone();
        if rest < here {
            break;
        }
        rest -= here;
        len += 1;
    }
    let mut word = Vec::with_capacity(len);
    let mut q = dfa.initial;
    for remaining in (0..len).rev() {
        for a in 0..dfa.alphabet.len() {
            let Some(t) = dfa.delta[q][a] else { continue };
            let c = counts.get(remaining, t);
            if rest < *c {
                word.push(a);
                q = t;
                break;
            }
            rest -= c.clone();
        }
    }
    Ok(word)
}

/// Position of an accepted word in the genealogical enumeration.
pub fn word_index(dfa: &Dfa, word: &[usize]) -> Result<BigUint> {
    if word.iter().any(|&a| a >= dfa.alphabet.len()) || !dfa.accepts(word) {
        return Err(Error::NotAccepted(dfa.format_word(word)));
    }
    let mut counts = LengthCounts::new(dfa);
    let mut index = BigUint::zero();
    for len in 0..word.len() {
        index += counts.get(len, dfa.initial);
    }
    let mut q = dfa.initial;
    for (i, &sym) in word.iter().enumerate() {
        let remaining = word.len() - i - 1;
        for a in 0..sym {
            if let Some(t) = dfa.delta[q][a] {
                index += counts.get(remaining, t);
            }
        }
        q = dfa.delta[q][sym].expect("accepted word has a defined path");
    }
    Ok(index)
}

/// Iterator over the accepted words in genealogical order.
pub struct Words<'a> {
    dfa: &'a Dfa,
    reach: Vec<Vec<bool>>,
    word: Word,
    states: Vec<usize>,
    started: bool,
    done: bool,
    max_len: Option<usize>,
}

impl<'a> Words<'a> {
    pub fn new(dfa: &'a Dfa) -> Self {
        let max_len = (!dfa.is_infinite()).then(|| dfa.state_count());
        let base = (0..dfa.state_count()).map(|q| dfa.is_final(q)).collect();
        Words { dfa, reach: vec![base], word: Vec::new(), states: vec![dfa.initial], started: false, done: false, max_len }
    }

    fn reach(&mut self, len: usize, q: usize) -> bool {
        while self.reach.len() <= len {
            let last = self.reach.last().expect("non-empty");
            let row = (0..self.dfa.state_count())
                .map(|p| self.dfa.delta[p].iter().flatten().any(|&t| last[t]))
                .collect();
            self.reach.push(row);
        }
        self.reach[len][q]
    }

    /// Fills positions `from..len` with the smallest completion.
    fn complete(&mut self, from: usize) {
        let len = self.word.len();
        for i in from..len {
            let q = self.states[i];
            let remaining = len - i - 1;
            let (a, t) = (0..self.dfa.alphabet.len())
                .find_map(|a| {
                    let t = self.dfa.delta[q][a]?;
                    self.reach(remaining, t).then_some((a, t))
                })
                .expect("completion exists when reach holds");
            self.word[i] = a;
            self.states[i + 1] = t;
        }
    }

    fn first_of_length(&mut self, mut len: usize) -> bool {
        loop {
            if self.max_len.is_some_and(|m| len > m) {
                return false;
            }
            if self.reach(len, self.dfa.initial) {
                self.word = vec![0; len];
                self.states = vec![self.dfa.initial; len + 1];
                self.complete(0);
                return true;
            }
            len += 1;
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.word.len();
        for pos in (0..len).rev() {
            let q = self.states[pos];
            let remaining = len - pos - 1;
            for a in self.word[pos] + 1..self.dfa.alphabet.len() {
                let Some(t) = self.dfa.delta[q][a] else { continue };
                if self.reach(remaining, t) {
                    self.word[pos] = a;
                    self.states[pos + 1] = t;
                    self.complete(pos + 1);
                    return true;
                }
            }
        }
        self.first_of_length(len + 1)
    }
}

impl Iterator for Words<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.advance()
        } else {
            self.started = true;
            self.first_of_length(0)
        };
        if found {
            Some(self.word.clone())
        } else {
            self.done = true;
            None
        }
    }
}

impl Dfa {
    /// Accepted words in genealogical order.
    pub fn words(&self) -> Words<'_> {
        Words::new(self)
    }
}
