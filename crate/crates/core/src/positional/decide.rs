use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::PositionalSystem;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::linrec::{
    max_preperiod_up_to, n_growth_criterion, residue_profile, smallest_v_exceeding, LinearRecurrence, DEFAULT_V_MAX,
};
use crate::search::{search_candidates, PeriodSpace, SearchOptions};
use crate::upset::DecisionVerdict;

/// Period and preperiod bounds for sets accepted by a `d`-state automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionalBounds {
    pub states: usize,
    /// `(p_j, s_j)` for every prime `p_j | a_k`.
    pub exponents: Vec<(u64, u32)>,
    /// `P = p_1^{s_1} ... p_r^{s_r} d`.
    pub period_bound: BigUint,
    /// `ℓ = d + max_{m <= P} ι_U(m)`.
    pub length_bound: usize,
    /// `A = U_ℓ`: every admissible preperiod is below it.
    pub preperiod_bound: BigUint,
}

fn divergent_recurrence(sys: &PositionalSystem) -> Result<LinearRecurrence> {
    let r = sys.recurrence().minimized()?;
    let verdict = n_growth_criterion(&r)?;
    if !verdict.diverges_for_all_m {
        return Err(Error::Precondition(format!("N_U(m) does not tend to infinity: {verdict}")));
    }
    Ok(r)
}

/// Bounds for a `d`-state automaton: the exponent of each prime `p | a_k`
/// is below the least `s` with `N_U(p^s) > d^k`, the part of the period
/// prime to `a_k` is at most `d`, and the preperiod is below
/// `U_{d + max ι_U(m)}`.
pub fn compute_bounds(sys: &PositionalSystem, d: usize) -> Result<PositionalBounds> {
    let r = divergent_recurrence(sys)?;
    let d = d.max(1);
    let threshold = (d as u64).checked_pow(r.order() as u32).unwrap_or(u64::MAX);
    let mut exponents = Vec::new();
    let mut period_bound = BigUint::from(d);
    for p in crate::algebra::prime_factors(r.last_coeff()) {
        let s = smallest_v_exceeding(&r, p, threshold, DEFAULT_V_MAX)?;
        period_bound *= BigUint::from(p).pow(s);
        exponents.push((p, s));
    }
    let bound = period_bound
        .to_u64()
        .ok_or_else(|| Error::ModulusTooLarge(format!("period bound {period_bound} exceeds 64 bits")))?;
    let length_bound = d + max_preperiod_up_to(&r, bound);
    let preperiod_bound = sys.scale(length_bound + 1).pop().expect("nonempty prefix");
    Ok(PositionalBounds { states: d, exponents, period_bound, length_bound, preperiod_bound })
}

/// [`decide_with`] using default options.
pub fn decide(sys: &PositionalSystem, x: &Dfa) -> Result<DecisionVerdict> {
    decide_with(sys, x, SearchOptions::default())
}

/// Decides whether the set of integers whose greedy representations `x`
/// accepts is ultimately periodic.
///
/// Candidate periods are those allowed by the counting arguments behind
/// [`compute_bounds`], sharpened: with `d` states, `N_U(p_X) <= d`, so the
/// exponent of each `p | a_k` stays below the least `s` with
/// `N_U(p^s) > d`, and candidates with `N_U(p) > d` are skipped. Each
/// candidate is settled exactly, whatever the preperiod, and a positive
/// answer is certified by comparing `x` with the automaton built for the
/// resulting set.
pub fn decide_with(sys: &PositionalSystem, x: &Dfa, opts: SearchOptions) -> Result<DecisionVerdict> {
    if x.alphabet() != sys.language().alphabet() {
        return Err(Error::AlphabetMismatch {
            left: sys.language().alphabet().to_vec(),
            right: x.alphabet().to_vec(),
        });
    }
    if !x.difference(sys.language())?.is_empty_language() {
        return Ok(DecisionVerdict::Inapplicable {
            reason: "the automaton accepts words that are not greedy representations".into(),
        });
    }
    let r = match divergent_recurrence(sys) {
        Ok(r) => r,
        Err(Error::Precondition(reason)) => return Ok(DecisionVerdict::Inapplicable { reason }),
        Err(e) => return Err(e),
    };
    let x = x.minimize();
    let d = x.complete_state_count();
    let mut primes = Vec::new();
    for p in crate::algebra::prime_factors(r.last_coeff()) {
        let s = smallest_v_exceeding(&r, p, d as u64, DEFAULT_V_MAX)?;
        primes.push((p, s - 1));
    }
    let space = PeriodSpace { primes, coprime_max: BigUint::from(d) };
    let (listed, complete) = space.enumerate(opts.max_period);
    let admissible = |p: u64| residue_profile(&r, p).recurring_count <= d;
    if let Some(up) = search_candidates(sys, &x, &listed, admissible, opts.parallel)? {
        return Ok(DecisionVerdict::UltimatelyPeriodic { up });
    }
    if !complete {
        return Ok(DecisionVerdict::Inapplicable {
            reason: format!("the period bound {} exceeds the search cap {}", space.bound(), opts.max_period),
        });
    }
    let bound = space.bound().to_u64().expect("covered by the cap");
    let length = d + max_preperiod_up_to(&r, bound);
    let preperiod_bound = sys.scale(length + 1).pop().expect("nonempty prefix");
    Ok(DecisionVerdict::NotUltimatelyPeriodic { period_bound: space.bound(), preperiod_bound })
}
