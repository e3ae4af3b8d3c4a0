//! Abstract numeration systems: an infinite regular language whose words,
//! listed in genealogical order, represent `0, 1, 2, ...`.

mod decide;

pub use decide::{compute_bounds_ans, decide_ans, decide_ans_with, AnsBounds};

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{common_recurrence, minimal_recurrence, IntMatrix, IntPoly, RecurrenceFit};
use crate::automata::{nth_word, Dfa, LengthCounts, Word};
use crate::error::{Error, Result};
use crate::linrec::{n_growth_criterion, GrowthVerdict, LinearRecurrence};
use crate::search::{strongly_connected_components, NumerationSystem, ValueTracker};
use crate::upset::UpSet;

/// `S = (L, Σ, <)`, with `L` stored as its trim minimal automaton.
#[derive(Clone, Debug)]
pub struct AbstractSystem {
    language: Dfa,
    /// Recurrence shared by every `u(q)` and by `(0, v_0, v_1, ...)`.
    window_recurrence: Vec<BigInt>,
    window_initial: Vec<BigInt>,
    /// Recurrence shared by the `u(q)` alone, with their first terms.
    count_recurrence: Vec<BigInt>,
    count_initial: Vec<Vec<BigInt>>,
}

impl AbstractSystem {
    pub fn new(language: &Dfa) -> Result<Self> {
        if !language.is_infinite() {
            return Err(Error::InvalidSystem("the language must be infinite".into()));
        }
        let language = language.minimize();
        let n = language.state_count();
        let len = 4 * (n + 2) + 8;
        let u = count_table(&language, len);
        let q0 = language.initial();
        let shifted: Vec<BigInt> = std::iter::once(BigInt::zero())
            .chain(running_sum(&u[q0]).into_iter().take(len - 1))
            .collect();
        let mut all: Vec<Vec<BigInt>> = u.clone();
        all.push(shifted.clone());
        let window_recurrence = integral(common_recurrence(&all, n + 2))?;
        let count_recurrence = integral(common_recurrence(&u, n + 1))?;
        let window_initial = shifted[..window_recurrence.len()].to_vec();
        let count_initial = u.iter().map(|s| s[..count_recurrence.len()].to_vec()).collect();
        Ok(AbstractSystem { language, window_recurrence, window_initial, count_recurrence, count_initial })
    }

    /// Minimal trim automaton of `L`.
    pub fn language(&self) -> &Dfa {
        &self.language
    }

    /// `#Q_L`.
    pub fn state_count(&self) -> usize {
        self.language.state_count()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.language.parse_word(text)
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        self.language.format_word(word)
    }

    /// `rep_S(n)`: the `n`-th word of `L`.
    pub fn rep_s(&self, n: &BigUint) -> Result<Word> {
        nth_word(&self.language, n)
    }

    /// The coefficients `β_{q,i}(w)` of `w ∈ L`.
    pub fn val_expansion(&self, word: &[usize]) -> Result<ValExpansion> {
        if !self.language.accepts(word) {
            return Err(Error::NotAccepted(self.format_word(word)));
        }
        let n = self.state_count();
        let q0 = self.language.initial();
        let mut beta = Vec::with_capacity(word.len());
        let mut p = q0;
        for &letter in word {
            let mut row = vec![0u32; n];
            row[q0] += 1;
            for smaller in 0..letter {
                if let Some(q) = self.language.next(p, smaller) {
                    row[q] += 1;
                }
            }
            beta.push(row);
            p = self.language.next(p, letter).expect("accepted words stay live");
        }
        Ok(ValExpansion { beta })
    }

    /// `val_S(w) = Σ_q Σ_i β_{q,i}(w) u_{|w|-i}(q)`.
    pub fn val_s(&self, word: &[usize]) -> Result<BigUint> {
        let expansion = self.val_expansion(word)?;
        let mut counts = LengthCounts::new(&self.language);
        Ok(expansion.value(&mut counts))
    }

    /// Automaton for `rep_S(X)`.
    pub fn up_set_dfa(&self, x: &UpSet) -> Result<Dfa> {
        NumerationSystem::up_set_dfa(self, x)
    }

    /// `(u_i(q))_{i < len}` for every state.
    pub fn counts(&self, len: usize) -> Vec<Vec<BigUint>> {
        let mut counts = LengthCounts::new(&self.language);
        (0..self.state_count()).map(|q| (0..len).map(|i| counts.get(i, q).clone()).collect()).collect()
    }

    /// Preperiod and period of the vector `(u_i(q) mod m)_q`: the
    /// preperiod is `I(m) = max_q ι_{u(q)}(m)` and the period is
    /// `lcm_q π_{u(q)}(m)`.
    pub fn count_profile(&self, m: u64) -> (usize, usize) {
        let k = self.count_recurrence.len();
        let modulus = BigInt::from(m);
        let reduce = |x: &BigInt| x.mod_floor(&modulus).to_u64().expect("reduced");
        let coeffs: Vec<u64> = self.count_recurrence.iter().map(reduce).collect();
        let mut windows: Vec<Vec<u64>> = self.count_initial.iter().map(|w| w.iter().map(reduce).collect()).collect();
        if k == 0 {
            return (0, 1);
        }
        let mut seen: HashMap<Vec<Vec<u64>>, usize> = HashMap::new();
        let mut index = 0;
        loop {
            if let Some(&first) = seen.get(&windows) {
                return (first, index - first);
            }
            seen.insert(windows.clone(), index);
            for w in windows.iter_mut() {
                let next = coeffs
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (j, &c)| (acc + u128::from(c) * u128::from(w[k - 1 - j])) % u128::from(m));
                w.remove(0);
                w.push(next as u64);
            }
            index += 1;
        }
    }

    /// `(u, v)` tables and the recurrence of `v(q_0)`.
    pub fn count_recurrence(&self, depth: usize) -> Result<CountTable> {
        let n = self.state_count();
        let depth = depth.max(2 * (n + 2));
        let u = self.counts(depth);
        let v: Vec<Vec<BigUint>> = u.iter().map(|s| running_sum_nat(s)).collect();
        let q0 = self.language.initial();
        let terms: Vec<BigInt> = v[q0].iter().map(|t| BigInt::from(t.clone())).collect();
        let fit = minimal_recurrence(&terms, n + 1)?
            .ok_or_else(|| Error::InvalidSystem("no recurrence of order <= #Q + 1 fits v".into()))?;
        let coeffs = integral(Some(fit.clone()))?;
        let adjacency = self.adjacency().char_poly();
        let bound = &adjacency * &IntPoly::from_i64(&[-1, 1]);
        if bound.div_exact(&monic(&coeffs))?.is_none() {
            return Err(Error::InvalidSystem(
                "the recurrence of v does not divide (x - 1) times the adjacency polynomial".into(),
            ));
        }
        let shift = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let tail = &coeffs[..coeffs.len() - shift];
        let v_recurrence = if tail.is_empty() {
            None
        } else {
            let initial = terms[shift..shift + tail.len()].to_vec();
            Some(LinearRecurrence::new(tail.to_vec(), initial)?.minimized()?)
        };
        Ok(CountTable { u, v, v_fit: fit, v_shift: shift, v_recurrence })
    }

    /// Adjacency matrix of the automaton, counting parallel edges.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.state_count();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (p, _, q) in self.language.transitions() {
            rows[p][q] += 1;
        }
        IntMatrix::from_rows(rows).expect("square")
    }

    /// Checks the hypotheses of the decision procedure: `u_i(q_0) > 0`,
    /// `u_i(q) → ∞` for every state, and `N_v(m) → ∞`.
    ///
    /// Divergence of `u(q)` is tested on a window: with `L` the lcm of the
    /// periods of the strongly connected components, `u_{i+L}(q) > u_i(q)`
    /// is required for `#Q <= i < #Q + 4 #Q L`.
    pub fn hypothesis_check(&self) -> Result<HypothesisReport> {
        let n = self.state_count();
        let step = self.cycle_period();
        let start = n;
        let end = start + 4 * n * step;
        let table = self.count_recurrence(end + step + 1)?;
        let q0 = self.language.initial();
        let mut problems = Vec::new();
        if let Some(i) = table.u[q0].iter().position(Zero::is_zero) {
            problems.push(format!("u_{i}(q0) = 0"));
        }
        let stalled: Vec<usize> =
            (0..n).filter(|&q| (start..end).any(|i| table.u[q][i + step] <= table.u[q][i])).collect();
        for &q in &stalled {
            problems.push(format!("u_i({q}) does not grow"));
        }
        let criterion = match &table.v_recurrence {
            Some(r) => {
                let verdict = n_growth_criterion(r)?;
                if !verdict.diverges_for_all_m {
                    problems.push(format!("N_v(m) does not tend to infinity ({verdict})"));
                }
                Some(verdict)
            }
            None => {
                problems.push("v is eventually zero".into());
                None
            }
        };
        Ok(HypothesisReport { stalled_states: stalled, criterion, table, problems })
    }

    /// lcm of the periods (gcd of cycle lengths) of the cyclic components.
    fn cycle_period(&self) -> usize {
        let delta: Vec<Vec<Option<usize>>> = (0..self.state_count())
            .map(|q| (0..self.language.alphabet().len()).map(|a| self.language.next(q, a)).collect())
            .collect();
        let comp = strongly_connected_components(&delta);
        let mut level: Vec<Option<usize>> = vec![None; delta.len()];
        let mut period: HashMap<usize, usize> = HashMap::new();
        for root in 0..delta.len() {
            if level[root].is_some() {
                continue;
            }
            level[root] = Some(0);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(p) = queue.pop_front() {
                for &q in delta[p].iter().flatten() {
                    if comp[q] != comp[p] {
                        continue;
                    }
                    let lp = level[p].expect("visited");
                    match level[q] {
                        None => {
                            level[q] = Some(lp + 1);
                            queue.push_back(q);
                        }
                        Some(lq) => {
                            let g = period.entry(comp[p]).or_insert(0);
                            *g = g.gcd(&(lp + 1).abs_diff(lq));
                        }
                    }
                }
            }
        }
        period.values().filter(|&&g| g > 0).fold(1, |acc, &g| acc.lcm(&g))
    }
}

impl NumerationSystem for AbstractSystem {
    fn language(&self) -> &Dfa {
        &self.language
    }

    fn rep(&self, n: &BigUint) -> Result<Word> {
        self.rep_s(n)
    }

    fn index_of(&self, word: &[usize]) -> Result<BigUint> {
        self.val_s(word)
    }

    /// `G_x(j)` is the value of `xz` counted from the words shorter than
    /// `xz` and the words of length `|xz|` below it that branch off inside
    /// `x`; reading `σ` from state `q` adds `Σ_{σ' < σ} u_j(δ(q, σ'))`.
    fn value_tracker(&self, modulus: u64) -> ValueTracker {
        let k = self.window_recurrence.len();
        let u = self.counts(k);
        let sigma = self.language.alphabet().len();
        let rows: Vec<Vec<Vec<BigInt>>> = (0..self.state_count())
            .map(|q| {
                (0..sigma)
                    .map(|a| {
                        (0..k)
                            .map(|j| {
                                (0..a)
                                    .filter_map(|b| self.language.next(q, b))
                                    .map(|t| BigInt::from(u[t][j].clone()))
                                    .sum()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ValueTracker::new(modulus, &self.window_recurrence, &self.window_initial, &rows)
    }
}

/// `β_{q,i}(w)`, stored as `beta[i-1][q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValExpansion {
    pub beta: Vec<Vec<u32>>,
}

impl ValExpansion {
    pub fn value(&self, counts: &mut LengthCounts<'_>) -> BigUint {
        let len = self.beta.len();
        let mut total = BigUint::zero();
        for (i, row) in self.beta.iter().enumerate() {
            for (q, &b) in row.iter().enumerate() {
                if b > 0 {
                    total += counts.get(len - 1 - i, q) * BigUint::from(b);
                }
            }
        }
        total
    }
}

/// `u_i(q)` and `v_i(q)` for `i < depth`, with the recurrence of
/// `v(q_0)`.
#[derive(Clone, Debug)]
pub struct CountTable {
    /// `u[q][i]`.
    pub u: Vec<Vec<BigUint>>,
    /// `v[q][i]`.
    pub v: Vec<Vec<BigUint>>,
    /// Shortest recurrence of `v(q_0)` from index 0.
    pub v_fit: RecurrenceFit,
    /// Number of zero roots split off `v_fit`.
    pub v_shift: usize,
    /// Minimal recurrence of `(v_{i + v_shift}(q_0))_i`, nonzero last
    /// coefficient.
    pub v_recurrence: Option<LinearRecurrence>,
}

/// Outcome of [`AbstractSystem::hypothesis_check`].
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub stalled_states: Vec<usize>,
    pub criterion: Option<GrowthVerdict>,
    pub table: CountTable,
    pub problems: Vec<String>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.table.v_recurrence {
            writeln!(f, "v recurrence: {r}")?;
        }
        if let Some(c) = &self.criterion {
            writeln!(f, "criterion: {c}")?;
        }
        if self.passed() {
            write!(f, "hypotheses hold")
        } else {
            write!(f, "hypotheses fail: {}", self.problems.join("; "))
        }
    }
}

fn count_table(dfa: &Dfa, len: usize) -> Vec<Vec<BigInt>> {
    let mut counts = LengthCounts::new(dfa);
    (0..dfa.state_count()).map(|q| (0..len).map(|i| BigInt::from(counts.get(i, q).clone())).collect()).collect()
}

fn running_sum(xs: &[BigInt]) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    xs.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

fn running_sum_nat(xs: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    xs.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

fn integral(fit: Option<RecurrenceFit>) -> Result<Vec<BigInt>> {
    fit.and_then(|f| f.integer_coeffs())
        .ok_or_else(|| Error::InvalidSystem("the counting sequences have no integral recurrence".into()))
}

/// `x^k - c_1 x^{k-1} - ... - c_k`.
fn monic(coeffs: &[BigInt]) -> IntPoly {
    let k = coeffs.len();
    let mut poly = vec![BigInt::zero(); k + 1];
    poly[k] = BigInt::from(1);
    for (j, c) in coeffs.iter().enumerate() {
        poly[k - 1 - j] = -c;
    }
    IntPoly::new(poly)
}
