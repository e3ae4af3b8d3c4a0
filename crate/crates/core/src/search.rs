//! Machinery shared by the positional and abstract decision procedures:
//! residue-tracking automata, ultimately periodic set automata, and the
//! candidate-period search.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::automata::{equivalent, Dfa, Word};
use crate::error::Result;
use crate::upset::UpSet;

/// Residues modulo `m` of the value of the word read so far, for every
/// future continuation length.
///
/// The state after reading `x` is the window `(G_x(0), ..., G_x(K-1))`
/// where `G_x(j)` is the value (mod `m`) that `x` contributes to any word
/// `xz` with `|z| = j`. Every `G_x` satisfies the same linear recurrence, so
/// the window determines all of it; `G_x(0)` is the value of `x` itself.
#[derive(Clone, Debug)]
pub struct ValueTracker {
    pub(crate) modulus: u64,
    /// `c_1..c_K` with `G(j+K) = c_1 G(j+K-1) + ... + c_K G(j)`, reduced.
    pub(crate) recurrence: Vec<u64>,
    /// Window of the empty word.
    pub(crate) initial: Vec<u64>,
    /// `increments[q][a]`: window added when reading `a` from language
    /// state `q`.
    pub(crate) increments: Vec<Vec<Vec<u64>>>,
}

impl ValueTracker {
    /// Reduces integer data modulo `modulus`.
    pub(crate) fn new(
        modulus: u64,
        recurrence: &[BigInt],
        initial: &[BigInt],
        increments: &[Vec<Vec<BigInt>>],
    ) -> ValueTracker {
        let m = BigInt::from(modulus);
        let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().expect("reduced below the modulus");
        let reduce_all = |xs: &[BigInt]| xs.iter().map(reduce).collect::<Vec<u64>>();
        ValueTracker {
            modulus,
            recurrence: reduce_all(recurrence),
            initial: reduce_all(initial),
            increments: increments.iter().map(|row| row.iter().map(|w| reduce_all(w)).collect()).collect(),
        }
    }

    pub(crate) fn step(&self, q: usize, window: &[u64], a: usize) -> Vec<u64> {
        let k = window.len();
        let m = u128::from(self.modulus);
        let next = self
            .recurrence
            .iter()
            .enumerate()
            .fold(0u128, |acc, (j, &c)| (acc + u128::from(c) * u128::from(window[k - 1 - j])) % m);
        let inc = &self.increments[q][a];
        (0..k)
            .map(|t| {
                let shifted = if t + 1 < k { u128::from(window[t + 1]) } else { next };
                ((shifted + u128::from(inc[t])) % m) as u64
            })
            .collect()
    }
}

/// A numeration system whose representation language enumerates the
/// integers in genealogical order.
pub trait NumerationSystem: Sync {
    /// Minimal trim automaton for `rep(ℕ)`.
    fn language(&self) -> &Dfa;

    /// `rep(n)`.
    fn rep(&self, n: &BigUint) -> Result<Word>;

    /// `val(w)` for `w` in the language.
    fn index_of(&self, word: &[usize]) -> Result<BigUint>;

    fn value_tracker(&self, modulus: u64) -> ValueTracker;

    /// Words of the language whose value mod `modulus` lies in `residues`.
    fn periodic_dfa(&self, modulus: u64, residues: &BTreeSet<usize>) -> Result<Dfa> {
        let tracker = self.value_tracker(modulus);
        let product = Product::build(self.language(), &tracker, None);
        let finals = (0..product.len())
            .map(|s| {
                self.language().is_final(product.lang[s]) && residues.contains(&(product.residue[s] as usize))
            })
            .collect();
        Ok(product.to_dfa(self.language().alphabet().to_vec(), finals).minimize())
    }

    /// Automaton for `rep(X)`: the periodic rule, then the finitely many
    /// flips below the preperiod.
    fn up_set_dfa(&self, x: &UpSet) -> Result<Dfa> {
        let periodic = self.periodic_dfa(x.period_len() as u64, &x.residues())?;
        patch(self, periodic, x)
    }
}

/// Adds or removes `rep(n)` for every flip `n` of `x`.
pub(crate) fn patch<S: NumerationSystem + ?Sized>(sys: &S, periodic: Dfa, x: &UpSet) -> Result<Dfa> {
    let flips = x.flips();
    if flips.is_empty() {
        return Ok(periodic);
    }
    let alphabet = sys.language().alphabet().to_vec();
    let mut add = Vec::new();
    let mut remove = Vec::new();
    for n in flips {
        let word = sys.rep(&BigUint::from(n))?;
        if x.preperiod()[n] {
            add.push(word);
        } else {
            remove.push(word);
        }
    }
    let mut out = periodic;
    if !add.is_empty() {
        out = out.union(&Dfa::from_words(alphabet.clone(), &add)?)?;
    }
    if !remove.is_empty() {
        out = out.difference(&Dfa::from_words(alphabet, &remove)?)?;
    }
    Ok(out)
}

/// Reachable part of language × value tracker × optional second automaton.
pub(crate) struct Product {
    pub(crate) lang: Vec<usize>,
    pub(crate) residue: Vec<u64>,
    pub(crate) other: Vec<Option<usize>>,
    pub(crate) delta: Vec<Vec<Option<usize>>>,
}

impl Product {
    pub(crate) fn build(lang: &Dfa, tracker: &ValueTracker, other: Option<&Dfa>) -> Product {
        let sigma = lang.alphabet().len();
        type Key = (usize, Vec<u64>, Option<usize>);
        let start: Key = (lang.initial(), tracker.initial.clone(), other.map(Dfa::initial));
        let mut index: HashMap<Key, usize> = HashMap::new();
        let mut keys = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let (q, window, o) = keys[i].clone();
            let mut row = vec![None; sigma];
            for (a, slot) in row.iter_mut().enumerate() {
                let Some(q2) = lang.next(q, a) else { continue };
                let key = (q2, tracker.step(q, &window, a), o.and_then(|s| other.and_then(|d| d.next(s, a))));
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        keys.push(key.clone());
                        index.insert(key, keys.len() - 1);
                        keys.len() - 1
                    }
                };
                *slot = Some(j);
            }
            delta.push(row);
            i += 1;
        }
        Product {
            lang: keys.iter().map(|k| k.0).collect(),
            residue: keys.iter().map(|k| k.1[0]).collect(),
            other: keys.iter().map(|k| k.2).collect(),
            delta,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.delta.len()
    }

    pub(crate) fn to_dfa(&self, alphabet: Vec<String>, finals: Vec<bool>) -> Dfa {
        Dfa::from_parts(alphabet, 0, finals, self.delta.clone())
    }

    /// States reached by infinitely many words: those reachable from a
    /// state lying on a cycle.
    pub(crate) fn pumpable(&self) -> Vec<bool> {
        let n = self.len();
        let comp = strongly_connected_components(&self.delta);
        let mut size = vec![0usize; n];
        for &c in &comp {
            size[c] += 1;
        }
        let mut on_cycle: Vec<bool> = (0..n)
            .map(|s| size[comp[s]] > 1 || self.delta[s].iter().flatten().any(|&t| t == s))
            .collect();
        let mut stack: Vec<usize> = (0..n).filter(|&s| on_cycle[s]).collect();
        while let Some(s) = stack.pop() {
            for &t in self.delta[s].iter().flatten() {
                if !on_cycle[t] {
                    on_cycle[t] = true;
                    stack.push(t);
                }
            }
        }
        on_cycle
    }
}

/// Tarjan's algorithm, iterative; returns a component id per node.
pub(crate) fn strongly_connected_components(delta: &[Vec<Option<usize>>]) -> Vec<usize> {
    let n = delta.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut comps = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(slot) = delta[v].get(*edge) {
                *edge += 1;
                let Some(w) = *slot else { continue };
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component members are stacked");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
        }
    }
    comp
}

/// Tests whether the set accepted by `x` is ultimately periodic with
/// period `p` (not necessarily minimal) and, if so, returns it.
///
/// In the product of the language, the value tracker mod `p` and `x`, the
/// residues met infinitely often by accepted words form the periodic rule;
/// the set has period `p` exactly when only finitely many words disagree
/// with that rule, and those words are the exceptions below the preperiod.
pub fn periodic_with<S: NumerationSystem + ?Sized>(sys: &S, x: &Dfa, p: u64) -> Result<Option<UpSet>> {
    let lang = sys.language();
    let tracker = sys.value_tracker(p);
    let product = Product::build(lang, &tracker, Some(x));
    let pump = product.pumpable();
    let in_x = |s: usize| product.other[s].is_some_and(|o| x.is_final(o));
    let counted = |s: usize| lang.is_final(product.lang[s]);
    let residues: BTreeSet<usize> =
        (0..product.len()).filter(|&s| pump[s] && counted(s) && in_x(s)).map(|s| product.residue[s] as usize).collect();
    let mismatch: Vec<bool> = (0..product.len())
        .map(|s| counted(s) && residues.contains(&(product.residue[s] as usize)) != in_x(s))
        .collect();
    if (0..product.len()).any(|s| mismatch[s] && pump[s]) {
        return Ok(None);
    }
    let exceptions_dfa = product.to_dfa(lang.alphabet().to_vec(), mismatch).minimize();
    let mut exceptions = BTreeSet::new();
    for w in exceptions_dfa.words() {
        exceptions.insert(sys.index_of(&w)?);
    }
    Ok(Some(UpSet::from_rule(p as usize, &residues, &exceptions)?))
}

/// Options for the candidate-period loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest candidate period examined; a bound beyond it makes a
    /// negative answer impossible.
    pub max_period: u64,
    /// Examine candidates on the rayon pool.
    pub parallel: bool,
}

/// Default for [`SearchOptions::max_period`].
pub const DEFAULT_MAX_PERIOD: u64 = 5000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_period: DEFAULT_MAX_PERIOD, parallel: false }
    }
}

/// Periods admitted by the bounds: `p = Π p_j^{f_j} · c` with `f_j` at most
/// the listed exponent and `c` prime to every `p_j` and at most
/// `coprime_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodSpace {
    pub primes: Vec<(u64, u32)>,
    pub coprime_max: BigUint,
}

impl PeriodSpace {
    /// Largest admissible period.
    pub fn bound(&self) -> BigUint {
        self.primes.iter().fold(self.coprime_max.clone(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    pub fn admits(&self, n: u64) -> bool {
        let mut c = n;
        for &(p, e) in &self.primes {
            let mut f = 0;
            while c.is_multiple_of(p) {
                c /= p;
                f += 1;
            }
            if f > e {
                return false;
            }
        }
        BigUint::from(c) <= self.coprime_max
    }

    /// Admissible periods up to `cap`, ascending, and whether that covers
    /// the whole space.
    pub fn enumerate(&self, cap: u64) -> (Vec<u64>, bool) {
        let bound = self.bound();
        let limit = bound.to_u64().map_or(cap, |b| b.min(cap));
        let list = (1..=limit).filter(|&n| self.admits(n)).collect();
        (list, BigUint::from(limit) >= bound)
    }
}

/// First candidate (in ascending order) passing `admissible` for which
/// `x` is ultimately periodic, certified by an equivalence check against
/// the automaton built for the resulting set.
pub fn search_candidates<S, F>(
    sys: &S,
    x: &Dfa,
    candidates: &[u64],
    admissible: F,
    parallel: bool,
) -> Result<Option<UpSet>>
where
    S: NumerationSystem + ?Sized,
    F: Fn(u64) -> bool + Sync,
{
    let check = |&p: &u64| -> Option<Result<UpSet>> {
        if !admissible(p) {
            return None;
        }
        let attempt = || -> Result<Option<UpSet>> {
            let Some(up) = periodic_with(sys, x, p)? else { return Ok(None) };
            let certificate = sys.up_set_dfa(&up)?;
            Ok(equivalent(&certificate, x)?.is_equal().then_some(up))
        };
        attempt().transpose()
    };
    let found = if parallel {
        candidates.par_iter().find_map_first(check)
    } else {
        candidates.iter().find_map(check)
    };
    found.transpose()
}
