#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigUint;
use numsys::ans::AbstractSystem;
use numsys::automata::{Dfa, Word};
use numsys::io::{read_json, System, SystemJson};
use numsys::positional::{bertrand_from_dbeta, BertrandSpec, PositionalSystem};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fibonacci() -> PositionalSystem {
    match read_json::<SystemJson>(&fixture("fib.json")).unwrap().to_system().unwrap() {
        System::Positional(s) => s,
        System::Abstract(_) => panic!("fib.json is positional"),
    }
}

pub fn two_blocks() -> AbstractSystem {
    match read_json::<SystemJson>(&fixture("two-blocks.json")).unwrap().to_system().unwrap() {
        System::Abstract(s) => s,
        System::Positional(_) => panic!("two-blocks.json is abstract"),
    }
}

pub fn bertrand(preperiod: &[u32], period: &[u32]) -> PositionalSystem {
    bertrand_from_dbeta(&BertrandSpec::new(preperiod.to_vec(), period.to_vec()).unwrap(), 40).unwrap()
}

/// Positional systems used by the brute-force comparisons.
pub fn positional_fixtures() -> Vec<(&'static str, PositionalSystem)> {
    vec![
        ("fibonacci", fibonacci()),
        ("bertrand 21", bertrand(&[], &[2, 1])),
        ("tribonacci", bertrand(&[], &[1, 1, 0])),
        ("binary", bertrand(&[], &[1])),
    ]
}

fn ans(alphabet: &[&str], states: usize, finals: &[usize], transitions: &[(usize, &str, usize)]) -> AbstractSystem {
    let dfa = Dfa::with_symbols(
        alphabet.iter().map(|s| s.to_string()).collect(),
        states,
        0,
        finals.iter().copied(),
        transitions.iter().copied(),
    )
    .unwrap();
    AbstractSystem::new(&dfa).unwrap()
}

/// Abstract systems used by the brute-force comparisons.
pub fn ans_fixtures() -> Vec<(&'static str, AbstractSystem)> {
    vec![
        ("two blocks", two_blocks()),
        ("a*b*", ans(&["a", "b"], 2, &[0, 1], &[(0, "a", 0), (0, "b", 1), (1, "b", 1)])),
        ("no bb", ans(&["a", "b"], 2, &[0, 1], &[(0, "a", 0), (0, "b", 1), (1, "a", 0)])),
    ]
}

/// Value of a digit word computed from the scale alone.
pub fn value(scale: &[BigUint], word: &[usize]) -> BigUint {
    word.iter().rev().zip(scale).map(|(&d, u)| u * BigUint::from(d)).sum()
}

/// All words over `base` digits of length at most `len`.
pub fn all_words(base: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for d in 0..base {
                let mut v: Word = w.clone();
                v.push(d);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Words of `dfa` up to length `len` in genealogical order, by filtering
/// all words of each length in lexicographic order.
pub fn language_words(dfa: &Dfa, len: usize) -> Vec<Word> {
    let k = dfa.alphabet().len();
    let mut out = Vec::new();
    for l in 0..=len {
        let mut w = vec![0; l];
        loop {
            if dfa.accepts(&w) {
                out.push(w.clone());
            }
            let Some(i) = (0..l).rev().find(|&i| w[i] + 1 < k) else { break };
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 0;
            }
        }
    }
    out
}
