use std::collections::{HashMap, VecDeque};

use super::{Dfa, Word};
use crate::error::{Error, Result};

/// Outcome of a language equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// Genealogically smallest word accepted by exactly one automaton.
    Differ(Word),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoolOp {
    Intersect,
    Union,
    Difference,
}

fn same_alphabet(a: &Dfa, b: &Dfa) -> Result<()> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch { left: a.alphabet.clone(), right: b.alphabet.clone() });
    }
    Ok(())
}

type Pair = (Option<usize>, Option<usize>);

/// Decides `L(a) = L(b)`, producing the genealogically smallest word of
/// the symmetric difference when they differ.
///
/// The pair automaton is explored breadth first with successors taken in
/// alphabet order, so every pair is first reached by its genealogically
/// smallest access word.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<Equivalence> {
    same_alphabet(a, b)?;
    let accepts = |d: &Dfa, q: Option<usize>| q.is_some_and(|q| d.finals[q]);
    let start: Pair = (Some(a.initial), Some(b.initial));
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if accepts(a, pair.0) != accepts(b, pair.1) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some((prev, sym)) = parent[&cur] {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Ok(Equivalence::Differ(word));
        }
        for sym in 0..a.alphabet.len() {
            let next = (pair.0.and_then(|q| a.delta[q][sym]), pair.1.and_then(|q| b.delta[q][sym]));
            if next == (None, None) || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, Some((pair, sym)));
            queue.push_back(next);
        }
    }
    Ok(Equivalence::Equal)
}

/// Product construction for intersection, union or difference; the
/// result is minimized.
pub fn boolean_op(a: &Dfa, b: &Dfa, op: BoolOp) -> Result<Dfa> {
    same_alphabet(a, b)?;
    let sigma = a.alphabet.len();
    let keep = |p: Pair| match op {
        BoolOp::Intersect => p.0.is_some() && p.1.is_some(),
        BoolOp::Union => p.0.is_some() || p.1.is_some(),
        BoolOp::Difference => p.0.is_some(),
    };
    let accept = |p: Pair| {
        let fa = p.0.is_some_and(|q| a.finals[q]);
        let fb = p.1.is_some_and(|q| b.finals[q]);
        match op {
            BoolOp::Intersect => fa && fb,
            BoolOp::Union => fa || fb,
            BoolOp::Difference => fa && !fb,
        }
    };
    let start: Pair = (Some(a.initial), Some(b.initial));
    let mut index: HashMap<Pair, usize> = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut delta = Vec::new();
    let mut finals = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let pair = states[i];
        finals.push(accept(pair));
        let mut row = vec![None; sigma];
        for (sym, slot) in row.iter_mut().enumerate() {
            let next = (pair.0.and_then(|q| a.delta[q][sym]), pair.1.and_then(|q| b.delta[q][sym]));
            if !keep(next) {
                continue;
            }
            let j = *index.entry(next).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            *slot = Some(j);
        }
        delta.push(row);
        i += 1;
    }
    Ok(Dfa::from_parts(a.alphabet.clone(), 0, finals, delta).minimize())
}

impl Dfa {
    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        boolean_op(self, other, BoolOp::Intersect)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        boolean_op(self, other, BoolOp::Union)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        boolean_op(self, other, BoolOp::Difference)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits() -> Vec<String> {
        vec!["0".into(), "1".into()]
    }

    // 1 0*
    fn one_zeros() -> Dfa {
        Dfa::new(bits(), 2, 0, [1], [(0, 1, 1), (1, 0, 1)]).unwrap()
    }

    #[test]
    fn reflexive_equality() {
        let d = one_zeros();
        assert_eq!(equivalent(&d, &d).unwrap(), Equivalence::Equal);
    }

    #[test]
    fn witness_is_smallest_difference() {
        // 1 0* ∪ {11}
        let e = Dfa::new(bits(), 3, 0, [1, 2], [(0, 1, 1), (1, 0, 1), (1, 1, 2)]).unwrap();
        let e = e.union(&one_zeros()).unwrap();
        assert_eq!(equivalent(&one_zeros(), &e).unwrap(), Equivalence::Differ(vec![1, 1]));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let other = Dfa::universal(vec!["a".into(), "b".into()]).unwrap();
        assert!(matches!(equivalent(&one_zeros(), &other), Err(Error::AlphabetMismatch { .. })));
        assert!(boolean_op(&one_zeros(), &other, BoolOp::Union).is_err());
    }

    #[test]
    fn difference_with_itself_is_empty() {
        let d = one_zeros();
        let e = d.difference(&d).unwrap();
        assert!(e.is_empty_language());
    }

    #[test]
    fn intersect_with_universal_is_identity() {
        let d = one_zeros();
        let u = Dfa::universal(bits()).unwrap();
        assert_eq!(d.intersect(&u).unwrap(), d.minimize());
    }
}
