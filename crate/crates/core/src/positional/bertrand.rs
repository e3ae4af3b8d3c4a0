use num_bigint::BigInt;

use super::PositionalSystem;
use crate::algebra::minimal_recurrence;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::linrec::LinearRecurrence;

/// `d*_β(1) = t_1 t_2 ...` given as a preperiod followed by a repeated
/// block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BertrandSpec {
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

impl BertrandSpec {
    pub fn new(preperiod: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        if period.iter().all(|&t| t == 0) {
            return Err(Error::InvalidSystem("the digit stream must not end in zeros".into()));
        }
        Ok(BertrandSpec { preperiod, period })
    }

    /// `t_i` for `i >= 1`.
    pub fn digit(&self, i: usize) -> u32 {
        let m = self.preperiod.len();
        if i <= m {
            self.preperiod[i - 1]
        } else {
            self.period[(i - 1 - m) % self.period.len()]
        }
    }
}

/// Bertrand system of `spec`: `U_0 = 1`, `U_i = t_1 U_{i-1} + ... + t_i U_0 + 1`,
/// with the recurrence fitted on `depth` terms (at least enough for the
/// order bound `m + p + 1`).
pub fn bertrand_from_dbeta(spec: &BertrandSpec, depth: usize) -> Result<PositionalSystem> {
    let m = spec.preperiod.len();
    let p = spec.period.len();
    let max_order = m + p + 1;
    let count = depth.max(2 * max_order + 4);
    let mut terms: Vec<BigInt> = vec![BigInt::from(1)];
    for i in 1..count {
        let next: BigInt = (1..=i).map(|j| BigInt::from(spec.digit(j)) * &terms[i - j]).sum::<BigInt>() + 1;
        terms.push(next);
    }
    if terms.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSystem("the scale is not strictly increasing".into()));
    }
    let fit = minimal_recurrence(&terms, max_order)?
        .ok_or_else(|| Error::InvalidSystem("no linear recurrence fits the scale".into()))?;
    let coeffs = fit
        .integer_coeffs()
        .ok_or_else(|| Error::InvalidSystem("the fitted recurrence is not integral".into()))?;
    let k = coeffs.len();
    let recurrence = LinearRecurrence::new(coeffs, terms[..k].to_vec())?;

    let digits = spec.preperiod.iter().chain(&spec.period).copied().max().unwrap_or(0) as usize;
    let base = digits + 1;
    // state j < m + p: the last j digits equal t_1..t_j; state m + p is the
    // initial state, which forbids a leading zero
    let start = m + p;
    let mut transitions = Vec::new();
    for j in 0..=start {
        let matched = if j == start { 0 } else { j };
        let t = spec.digit(matched + 1) as usize;
        for a in 0..base {
            if j == start && a == 0 {
                continue;
            }
            if a < t {
                transitions.push((j, a, 0));
            } else if a == t {
                let next = if matched + 1 == m + p { m } else { matched + 1 };
                transitions.push((j, a, next));
            }
        }
    }
    let lang = Dfa::new(Dfa::digit_alphabet(base), start + 1, start, 0..=start, transitions)?;
    PositionalSystem::new(recurrence, base, &lang)
}
