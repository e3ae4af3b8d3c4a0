use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::AbstractSystem;
use crate::algebra::prime_factors;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::linrec::{residue_profile, smallest_v_exceeding, LinearRecurrence, DEFAULT_V_MAX};
use crate::search::{search_candidates, PeriodSpace, SearchOptions};
use crate::upset::DecisionVerdict;

/// Largest `T` for which `v_{T+1}(q_0)` is evaluated.
const MAX_INDEX: u64 = 100_000;

/// Period and preperiod bounds for sets accepted by a `d`-state automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsBounds {
    pub states: usize,
    pub language_states: usize,
    /// Order `k` of the minimal recurrence of `v(q_0)`.
    pub order: usize,
    /// `T = (d #Q_L)^k`.
    pub t: BigUint,
    /// Bound `v_{T+1}(q_0)` on the part of the period prime to `a_k`.
    pub coprime_bound: BigUint,
    /// `(p_j, s_j)`: least `s` with `N_v(p_j^s) > T`.
    pub exponents: Vec<(u64, u32)>,
    pub period_bound: BigUint,
    /// Upper bound on `max_{m <= P} I(m)`.
    pub max_preperiod_index: usize,
    /// `v_{d #Q_L + I}(q_0) + 1`: every admissible preperiod is below it.
    pub preperiod_bound: BigUint,
}

fn checked_system(sys: &AbstractSystem) -> Result<(LinearRecurrence, usize)> {
    let report = sys.hypothesis_check()?;
    if !report.passed() {
        return Err(Error::Precondition(report.problems.join("; ")));
    }
    let shift = report.table.v_shift;
    Ok((report.table.v_recurrence.expect("checked above"), shift))
}

/// `v_i(q_0)`.
fn v_term(sys: &AbstractSystem, i: usize) -> BigUint {
    let mut counts = crate::automata::LengthCounts::new(sys.language());
    counts.up_to(i, sys.language().initial())
}

/// Upper bound on `I(m)` over all `m <= bound`: zero roots of the count
/// recurrence delay periodicity for every modulus, and otherwise only
/// powers of primes dividing its last nonzero coefficient matter.
fn max_count_preperiod(sys: &AbstractSystem, bound: &BigUint) -> Result<usize> {
    let coeffs = &sys.count_recurrence;
    let zeros = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let mut best = zeros;
    if let Some(last) = coeffs[..coeffs.len() - zeros].last() {
        for p in prime_factors(last) {
            let mut m = p;
            if BigUint::from(p) > *bound {
                continue;
            }
            while BigUint::from(m) * BigUint::from(p) <= *bound {
                m = m
                    .checked_mul(p)
                    .ok_or_else(|| Error::BoundTooLarge(format!("powers of {p} up to {bound}")))?;
            }
            best = best.max(sys.count_profile(m).0);
        }
    }
    Ok(best)
}

/// Bounds for a `d`-state automaton: `T = (d #Q_L)^k`, the part of the
/// period prime to `a_k` is at most `v_{T+1}(q_0)`, the exponent of each
/// `p | a_k` is below the least `s` with `N_v(p^s) > T`, and the preperiod
/// is below `v_{d #Q_L + I}(q_0) + 1` with `I` bounding the preperiods of
/// the `u(q)` modulo any admissible period.
pub fn compute_bounds_ans(sys: &AbstractSystem, d: usize) -> Result<AnsBounds> {
    let (r, _) = checked_system(sys)?;
    let d = d.max(1);
    let n = sys.state_count();
    let k = r.order();
    let t = BigUint::from(d * n).pow(k as u32);
    let t_small = t
        .to_u64()
        .filter(|&x| x <= MAX_INDEX)
        .ok_or_else(|| Error::BoundTooLarge(format!("T = {t} exceeds {MAX_INDEX}")))?;
    let coprime_bound = v_term(sys, t_small as usize + 1);
    let mut period_bound = coprime_bound.clone();
    let mut exponents = Vec::new();
    for p in prime_factors(r.last_coeff()) {
        let s = smallest_v_exceeding(&r, p, t_small, DEFAULT_V_MAX)?;
        period_bound *= BigUint::from(p).pow(s);
        exponents.push((p, s));
    }
    let max_preperiod_index = max_count_preperiod(sys, &period_bound)?;
    let preperiod_bound = v_term(sys, d * n + max_preperiod_index) + 1u32;
    Ok(AnsBounds {
        states: d,
        language_states: n,
        order: k,
        t,
        coprime_bound,
        exponents,
        period_bound,
        max_preperiod_index,
        preperiod_bound,
    })
}

/// [`decide_ans_with`] using default options.
pub fn decide_ans(sys: &AbstractSystem, x: &Dfa) -> Result<DecisionVerdict> {
    decide_ans_with(sys, x, SearchOptions::default())
}

/// Decides whether `{ n : rep_S(n) ∈ L(x) }` is ultimately periodic.
///
/// With `D = d #Q_L`, an admissible period satisfies `N_v(p_X) <= D`; hence
/// the exponent of each `p | a_k` is below the least `s` with
/// `N_v(p^s) > D`, the part `c` prime to `a_k` has `α(c) < D` and so
/// `c <= v_{D + shift}(q_0)`, and candidates with `N_v(m) > D` are skipped.
/// Each candidate is settled exactly and a positive answer is certified by
/// automaton equivalence.
pub fn decide_ans_with(sys: &AbstractSystem, x: &Dfa, opts: SearchOptions) -> Result<DecisionVerdict> {
    if x.alphabet() != sys.language().alphabet() {
        return Err(Error::AlphabetMismatch { left: sys.language().alphabet().to_vec(), right: x.alphabet().to_vec() });
    }
    if !x.difference(sys.language())?.is_empty_language() {
        return Ok(DecisionVerdict::Inapplicable { reason: "the automaton accepts words outside the language".into() });
    }
    let (r, shift) = match checked_system(sys) {
        Ok(found) => found,
        Err(Error::Precondition(reason)) => return Ok(DecisionVerdict::Inapplicable { reason }),
        Err(e) => return Err(e),
    };
    let x = x.minimize();
    let big_d = x.complete_state_count() * sys.state_count();
    let mut primes = Vec::new();
    for p in prime_factors(r.last_coeff()) {
        let s = smallest_v_exceeding(&r, p, big_d as u64, DEFAULT_V_MAX)?;
        primes.push((p, s - 1));
    }
    let space = PeriodSpace { primes, coprime_max: v_term(sys, big_d + shift) };
    let (listed, complete) = space.enumerate(opts.max_period);
    let admissible = |m: u64| residue_profile(&r, m).recurring_count <= big_d;
    if let Some(up) = search_candidates(sys, &x, &listed, admissible, opts.parallel)? {
        return Ok(DecisionVerdict::UltimatelyPeriodic { up });
    }
    if !complete {
        return Ok(DecisionVerdict::Inapplicable {
            reason: format!("the period bound {} exceeds the search cap {}", space.bound(), opts.max_period),
        });
    }
    let index = listed.iter().filter(|&&m| admissible(m)).map(|&m| sys.count_profile(m).0).max().unwrap_or(0);
    let preperiod_bound = v_term(sys, big_d + index) + 1u32;
    Ok(DecisionVerdict::NotUltimatelyPeriodic { period_bound: space.bound(), preperiod_bound })
}
