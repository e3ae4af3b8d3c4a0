//! Ultimately periodic sets of natural numbers and decision verdicts.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// The set whose characteristic word is `u·v^ω`, kept in least form: `v`
/// is primitive and, when `u` is nonempty, the last bits of `u` and `v`
/// differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpSet {
    preperiod: Vec<bool>,
    period: Vec<bool>,
}

impl UpSet {
    /// Normalizes `(u, v)` to least form.
    pub fn new(preperiod: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Precondition("the period word must be nonempty".into()));
        }
        let mut u = preperiod;
        let mut v = primitive_root(period);
        while let (Some(&a), Some(&b)) = (u.last(), v.last()) {
            if a != b {
                break;
            }
            u.pop();
            v.rotate_right(1);
        }
        Ok(UpSet { preperiod: u, period: v })
    }

    /// Parses bit strings such as `"01"`; `""` or `"ε"` is the empty word.
    pub fn parse(preperiod: &str, period: &str) -> Result<Self> {
        UpSet::new(parse_bits(preperiod)?, parse_bits(period)?)
    }

    /// `{ n : n ≡ r (mod m) }` for `r ∈ residues`.
    pub fn from_residues(modulus: usize, residues: &BTreeSet<usize>) -> Result<Self> {
        UpSet::new(Vec::new(), (0..modulus).map(|r| residues.contains(&r)).collect())
    }

    /// The set agreeing with the rule "`n mod p ∈ residues`" except at the
    /// listed exceptions.
    pub fn from_rule(modulus: usize, residues: &BTreeSet<usize>, exceptions: &BTreeSet<BigUint>) -> Result<Self> {
        let len = match exceptions.iter().next_back() {
            None => 0,
            Some(max) => {
                max.to_usize().ok_or_else(|| Error::Precondition(format!("exception {max} is too large")))? + 1
            }
        };
        let rule = |n: usize| residues.contains(&(n % modulus));
        let u = (0..len).map(|n| rule(n) != exceptions.contains(&BigUint::from(n))).collect();
        let v = (len..len + modulus).map(rule).collect();
        UpSet::new(u, v)
    }

    pub fn preperiod(&self) -> &[bool] {
        &self.preperiod
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    /// Minimal preperiod `a_X`.
    pub fn preperiod_len(&self) -> usize {
        self.preperiod.len()
    }

    /// Minimal period `p_X`.
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        if let Some(i) = n.to_usize().filter(|&i| i < self.preperiod.len()) {
            return self.preperiod[i];
        }
        let offset = (n - BigUint::from(self.preperiod.len())) % BigUint::from(self.period.len());
        self.period[offset.to_usize().expect("below the period length")]
    }

    pub fn contains_u64(&self, n: u64) -> bool {
        self.contains(&BigUint::from(n))
    }

    /// Residues `r` modulo the period such that all large `n ≡ r` belong to
    /// the set.
    pub fn residues(&self) -> BTreeSet<usize> {
        let p = self.period.len();
        let a = self.preperiod.len();
        (0..p).filter(|&i| self.period[i]).map(|i| (a + i) % p).collect()
    }

    /// `n < a_X` on which the set disagrees with its periodic rule.
    pub fn flips(&self) -> Vec<usize> {
        let residues = self.residues();
        let p = self.period.len();
        (0..self.preperiod.len()).filter(|&n| self.preperiod[n] != residues.contains(&(n % p))).collect()
    }

    /// `u` and `v` as `0`/`1` strings, `ε` for an empty `u`.
    pub fn bit_strings(&self) -> (String, String) {
        (format_bits(&self.preperiod), format_bits(&self.period))
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = self.bit_strings();
        write!(f, "u={u} v={v}")
    }
}

fn primitive_root(v: Vec<bool>) -> Vec<bool> {
    let n = v.len();
    let q = (1..=n).find(|&q| n.is_multiple_of(q) && (q..n).all(|i| v[i] == v[i - q])).expect("q = n always works");
    v[..q].to_vec()
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    if text == "ε" {
        return Ok(Vec::new());
    }
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Precondition(format!("`{c}` is not a bit"))),
        })
        .collect()
}

fn format_bits(bits: &[bool]) -> String {
    if bits.is_empty() {
        return "ε".into();
    }
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Answer of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecisionVerdict {
    UltimatelyPeriodic { up: UpSet },
    /// No ultimately periodic set with period at most `period_bound` and
    /// preperiod at most `preperiod_bound` matches, and the bounds cover
    /// every ultimately periodic set the automaton could accept.
    NotUltimatelyPeriodic { period_bound: BigUint, preperiod_bound: BigUint },
    Inapplicable { reason: String },
}

impl DecisionVerdict {
    pub fn is_ultimately_periodic(&self) -> bool {
        matches!(self, DecisionVerdict::UltimatelyPeriodic { .. })
    }

    pub fn up_set(&self) -> Option<&UpSet> {
        match self {
            DecisionVerdict::UltimatelyPeriodic { up } => Some(up),
            _ => None,
        }
    }
}

impl fmt::Display for DecisionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionVerdict::UltimatelyPeriodic { up } => {
                write!(f, "ultimately periodic: {up} (preperiod {}, period {})", up.preperiod_len(), up.period_len())
            }
            DecisionVerdict::NotUltimatelyPeriodic { period_bound, preperiod_bound } => write!(
                f,
                "not ultimately periodic (checked every period <= {period_bound} with preperiod <= {preperiod_bound})"
            ),
            DecisionVerdict::Inapplicable { reason } => write!(f, "inapplicable: {reason}"),
        }
    }
}
