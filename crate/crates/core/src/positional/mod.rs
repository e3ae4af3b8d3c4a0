//! Positional numeration systems built on a linear recurrence.
//!
//! Words are written most significant digit first: the digit word
//! `w_ℓ ... w_0` has value `Σ w_i U_i`, so the last symbol of a word is
//! multiplied by `U_0`. Leading zeros are accepted by [`PositionalSystem::val`]
//! and never produced by [`PositionalSystem::greedy_rep`]. The empty word
//! represents zero.

mod bertrand;
mod decide;

pub use bertrand::{bertrand_from_dbeta, BertrandSpec};
pub use decide::{compute_bounds, decide, decide_with, PositionalBounds};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::automata::{Dfa, Word};
use crate::error::{Error, Result};
use crate::linrec::{residue_profile, LinearRecurrence};
use crate::search::{NumerationSystem, ValueTracker};
use crate::upset::UpSet;

/// A linear numeration system `U` together with an automaton for the
/// language of greedy representations.
#[derive(Clone, Debug)]
pub struct PositionalSystem {
    recurrence: LinearRecurrence,
    digit_bound: usize,
    language: Dfa,
}

impl PositionalSystem {
    /// Checks the cheap invariants (`U_0 = 1`, alphabet `0..C-1`, `ε`
    /// accepted, infinite language) and minimizes the language automaton.
    /// The expensive greediness checks live in [`PositionalSystem::validate`].
    pub fn new(recurrence: LinearRecurrence, digit_bound: usize, language: &Dfa) -> Result<Self> {
        if recurrence.initial()[0] != BigInt::one() {
            return Err(Error::InvalidSystem("U_0 must be 1".into()));
        }
        if digit_bound == 0 {
            return Err(Error::InvalidSystem("the digit bound must be positive".into()));
        }
        if language.alphabet() != Dfa::digit_alphabet(digit_bound).as_slice() {
            return Err(Error::InvalidSystem(format!(
                "the language alphabet must be the digits 0..{}",
                digit_bound - 1
            )));
        }
        if !language.accepts(&[]) {
            return Err(Error::InvalidSystem("the empty word must represent 0".into()));
        }
        if !language.is_infinite() {
            return Err(Error::InvalidSystem("the representation language is finite".into()));
        }
        Ok(PositionalSystem { recurrence, digit_bound, language: language.minimize() })
    }

    pub fn recurrence(&self) -> &LinearRecurrence {
        &self.recurrence
    }

    /// `C_U`: digits range over `0..C_U`.
    pub fn digit_bound(&self) -> usize {
        self.digit_bound
    }

    /// Minimal automaton of `rep_U(ℕ)`.
    pub fn language(&self) -> &Dfa {
        &self.language
    }

    /// `U_0, ..., U_{n-1}` as naturals.
    pub fn scale(&self, n: usize) -> Vec<BigUint> {
        self.recurrence.terms().take(n).map(|t| t.to_biguint().unwrap_or_default()).collect()
    }

    /// Greedy representation of `n`; may contain digits `>= C_U` when the
    /// system is misconfigured.
    pub fn greedy_rep(&self, n: &BigUint) -> Word {
        if n.is_zero() {
            return Vec::new();
        }
        let mut scale: Vec<BigUint> = Vec::new();
        for t in self.recurrence.terms() {
            let t = t.to_biguint().unwrap_or_default();
            if &t > n {
                break;
            }
            if scale.last().is_some_and(|last| &t <= last) {
                // not increasing: fall back to the terms seen so far
                break;
            }
            scale.push(t);
        }
        let mut rest = n.clone();
        let mut word = Vec::with_capacity(scale.len());
        for u in scale.iter().rev() {
            let digit = &rest / u;
            rest -= &digit * u;
            word.push(digit.to_usize().unwrap_or(usize::MAX));
        }
        word
    }

    /// `val_U(w) = Σ w_i U_i`, leading zeros allowed.
    pub fn val(&self, word: &[usize]) -> Result<BigUint> {
        if let Some(&d) = word.iter().find(|&&d| d >= self.digit_bound) {
            return Err(Error::DigitOutOfRange(d));
        }
        let scale = self.scale(word.len());
        Ok(word.iter().rev().zip(&scale).map(|(&d, u)| u * BigUint::from(d)).sum())
    }

    /// Parses a digit string such as `"100010"`.
    pub fn parse_digits(&self, text: &str) -> Result<Word> {
        self.language.parse_word(text)
    }

    pub fn format_digits(&self, word: &[usize]) -> String {
        self.language.format_word(word)
    }

    /// Desk-scale check of the system: `U` increasing up to `depth`, every
    /// greedy representation of `n < U_depth` accepted, and every accepted
    /// word of length at most `min(depth, 14)` greedy.
    pub fn validate(&self, depth: usize) -> ValidationReport {
        const LIMIT: usize = 10;
        const MAX_N: u64 = 200_000;
        let mut problems = Vec::new();
        let terms = self.recurrence.prefix(depth + 1);
        if let Some(i) = terms.windows(2).position(|w| w[0] >= w[1]) {
            problems.push(Problem::NotIncreasing { index: i + 1 });
        }
        if problems.is_empty() {
            let top = terms[depth].to_u64().unwrap_or(MAX_N).min(MAX_N);
            for n in 0..top {
                let word = self.greedy_rep(&BigUint::from(n));
                if word.iter().any(|&d| d >= self.digit_bound) {
                    problems.push(Problem::DigitTooLarge { n });
                } else if !self.language.accepts(&word) {
                    problems.push(Problem::Rejected { n, word: self.format_digits(&word) });
                }
                if problems.len() >= LIMIT {
                    break;
                }
            }
        }
        let max_len = depth.min(14);
        for word in self.language.words() {
            if word.len() > max_len || problems.len() >= LIMIT {
                break;
            }
            let n = self.val(&word).expect("language words use valid digits");
            if self.greedy_rep(&n) != word {
                problems.push(Problem::NotGreedy { word: self.format_digits(&word) });
            }
        }
        ValidationReport { depth, problems }
    }

    /// Automaton over the digits accepting `{ w : val_U(w) ≡ b (mod a) }`,
    /// leading zeros included and greediness ignored.
    pub fn congruence_dfa(&self, a: u64, b: u64) -> Result<Dfa> {
        if a == 0 || b >= a {
            return Err(Error::Precondition(format!("need 0 <= b < a, got a = {a}, b = {b}")));
        }
        Ok(self.congruence_dfa_set(a, &BTreeSet::from([b as usize])))
    }

    /// Like [`PositionalSystem::congruence_dfa`] for a set of residues.
    ///
    /// Reads the reversed word with states `(r, s)`: `r` is the value read
    /// so far mod `a` and `s` the position, folded onto the periodic part
    /// of `(U_i mod a)`. The reversal is then determinized.
    fn congruence_dfa_set(&self, a: u64, residues: &BTreeSet<usize>) -> Dfa {
        let profile = residue_profile(&self.recurrence, a);
        let span = profile.preperiod + profile.period;
        let m = a as usize;
        let id = |r: usize, s: usize| s * m + r;
        let mut transitions = Vec::with_capacity(span * m * self.digit_bound);
        for s in 0..span {
            let next = if s + 1 < span { s + 1 } else { profile.preperiod };
            let u = profile.value_at(s) as u128;
            for r in 0..m {
                for j in 0..self.digit_bound {
                    let r2 = ((r as u128 + j as u128 * u) % a as u128) as usize;
                    transitions.push((id(r, s), j, id(r2, next)));
                }
            }
        }
        let finals: Vec<usize> =
            (0..span).flat_map(|s| residues.iter().filter(|&&r| r < m).map(move |&r| id(r, s))).collect();
        let reversed = Dfa::new(Dfa::digit_alphabet(self.digit_bound), span * m, 0, finals, transitions)
            .expect("states and symbols are in range");
        reversed.reverse_determinize().minimize()
    }

    /// Automaton for `rep_U(X)`.
    pub fn up_set_dfa(&self, x: &UpSet) -> Result<Dfa> {
        NumerationSystem::up_set_dfa(self, x)
    }
}

impl NumerationSystem for PositionalSystem {
    fn language(&self) -> &Dfa {
        &self.language
    }

    fn rep(&self, n: &BigUint) -> Result<Word> {
        let word = self.greedy_rep(n);
        match word.iter().find(|&&d| d >= self.digit_bound) {
            Some(&d) => Err(Error::DigitOutOfRange(d)),
            None => Ok(word),
        }
    }

    fn index_of(&self, word: &[usize]) -> Result<BigUint> {
        self.val(word)
    }

    /// Window `(val(x 0^j) mod m)_{j<k}`; appending digit `a` maps
    /// `G(j)` to `G(j+1) + a U_j`.
    fn value_tracker(&self, modulus: u64) -> ValueTracker {
        let k = self.recurrence.order();
        let scale = self.recurrence.prefix(k);
        let increments: Vec<Vec<BigInt>> =
            (0..self.digit_bound).map(|a| scale.iter().map(|u| u * BigInt::from(a)).collect()).collect();
        let rows = vec![increments; self.language.state_count()];
        ValueTracker::new(modulus, self.recurrence.coeffs(), &vec![BigInt::zero(); k], &rows)
    }

    fn periodic_dfa(&self, modulus: u64, residues: &BTreeSet<usize>) -> Result<Dfa> {
        self.congruence_dfa_set(modulus, residues).intersect(&self.language)
    }
}

/// A failed check reported by [`PositionalSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    NotIncreasing { index: usize },
    DigitTooLarge { n: u64 },
    Rejected { n: u64, word: String },
    NotGreedy { word: String },
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::NotIncreasing { index } => write!(f, "U_{index} <= U_{}", index - 1),
            Problem::DigitTooLarge { n } => write!(f, "the greedy representation of {n} needs a digit >= C"),
            Problem::Rejected { n, word } => write!(f, "rep({n}) = {word} is rejected by the language"),
            Problem::NotGreedy { word } => write!(f, "{word} is accepted but not greedy"),
        }
    }
}

/// Outcome of [`PositionalSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub depth: usize,
    /// At most ten counterexamples.
    pub problems: Vec<Problem>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "valid up to depth {}", self.depth);
        }
        write!(f, "invalid:")?;
        for p in &self.problems {
            write!(f, "\n  {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::equivalent;

    pub(crate) fn fibonacci() -> PositionalSystem {
        let lang = Dfa::new(Dfa::digit_alphabet(2), 3, 0, [0, 1, 2], [(0, 1, 1), (1, 0, 2), (2, 0, 2), (2, 1, 1)])
            .unwrap();
        PositionalSystem::new(LinearRecurrence::from_i64(&[1, 1], &[1, 2]).unwrap(), 2, &lang).unwrap()
    }

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn fibonacci_rep_and_val() {
        let fib = fibonacci();
        assert_eq!(fib.format_digits(&fib.greedy_rep(&n(15))), "100010");
        assert_eq!(fib.val(&fib.parse_digits("101001").unwrap()).unwrap(), n(19));
        assert_eq!(fib.val(&fib.parse_digits("0100").unwrap()).unwrap(), n(3));
        assert_eq!(fib.greedy_rep(&n(0)), Vec::<usize>::new());
        assert!(matches!(fib.val(&[2]), Err(Error::DigitOutOfRange(2))));
    }

    #[test]
    fn triangular_numbers() {
        let lang = Dfa::universal(Dfa::digit_alphabet(3)).unwrap();
        let r = LinearRecurrence::from_i64(&[3, -3, 1], &[1, 3, 6]).unwrap();
        let sys = PositionalSystem { recurrence: r, digit_bound: 3, language: lang };
        assert_eq!(sys.format_digits(&sys.greedy_rep(&n(9))), "110");
    }

    #[test]
    fn validation() {
        assert!(fibonacci().validate(12).passed());
        let all = Dfa::universal(Dfa::digit_alphabet(2)).unwrap();
        let sys = PositionalSystem::new(fibonacci().recurrence.clone(), 2, &all).unwrap();
        let report = sys.validate(12);
        assert!(report.problems.contains(&Problem::NotGreedy { word: "11".into() }));
    }

    #[test]
    fn congruences() {
        let fib = fibonacci();
        let everything = fib.congruence_dfa(1, 0).unwrap();
        assert!(equivalent(&everything, &Dfa::universal(Dfa::digit_alphabet(2)).unwrap()).unwrap().is_equal());
        let d = fib.congruence_dfa(4, 3).unwrap();
        assert!(d.accepts(&fib.parse_digits("1010").unwrap()));
        assert!(fib.congruence_dfa(4, 4).is_err());
    }

    #[test]
    fn even_numbers() {
        let fib = fibonacci();
        let even = fib.up_set_dfa(&UpSet::parse("", "10").unwrap()).unwrap();
        for k in 0..3000u64 {
            assert_eq!(even.accepts(&fib.greedy_rep(&n(k))), k % 2 == 0, "{k}");
        }
        let zero = fib.up_set_dfa(&UpSet::parse("1", "0").unwrap()).unwrap();
        assert_eq!(zero.words().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
