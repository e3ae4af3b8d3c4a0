//! Integer linear recurrences, their residues modulo `m`, and the growth
//! criterion for `N_U(p^v)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{self, cyclotomic_part, hankel_determinant, minimal_recurrence, IntPoly, Multiplicity};
use crate::error::{Error, Result};

/// `U_{i+k} = a_1 U_{i+k-1} + ... + a_k U_i` with initial terms
/// `U_0..U_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    coeffs: Vec<BigInt>,
    initial: Vec<BigInt>,
}

impl LinearRecurrence {
    pub fn new(coeffs: Vec<BigInt>, initial: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRecurrence("order must be at least 1".into()));
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidRecurrence("last coefficient a_k is zero".into()));
        }
        if initial.len() != coeffs.len() {
            return Err(Error::InvalidRecurrence(format!(
                "{} coefficients but {} initial terms",
                coeffs.len(),
                initial.len()
            )));
        }
        Ok(LinearRecurrence { coeffs, initial })
    }

    pub fn from_i64(coeffs: &[i64], initial: &[i64]) -> Result<Self> {
        LinearRecurrence::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            initial.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1..a_k`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    pub fn last_coeff(&self) -> &BigInt {
        self.coeffs.last().expect("order >= 1")
    }

    /// Exact `U_i`.
    pub fn term(&self, i: usize) -> BigInt {
        self.terms().nth(i).expect("the term iterator is infinite")
    }

    /// `U_0, U_1, ...` without end.
    pub fn terms(&self) -> Terms<'_> {
        Terms { rec: self, window: self.initial.clone(), pos: 0 }
    }

    /// First `n` terms.
    pub fn prefix(&self, n: usize) -> Vec<BigInt> {
        self.terms().take(n).collect()
    }

    /// `χ_U(x) = x^k - a_1 x^{k-1} - ... - a_k`.
    pub fn char_poly(&self) -> IntPoly {
        let k = self.order();
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(1);
        for (j, a) in self.coeffs.iter().enumerate() {
            coeffs[k - 1 - j] = -a;
        }
        IntPoly::new(coeffs)
    }

    /// `P_U(x) = x^k χ_U(1/x) = 1 - a_1 x - ... - a_k x^k`.
    pub fn reciprocal_poly(&self) -> IntPoly {
        self.char_poly().reciprocal(self.order())
    }

    /// Determinant of the `k × k` Hankel matrix of `U_0..U_{2k-2}`.
    pub fn hankel_determinant(&self) -> BigInt {
        let k = self.order();
        hankel_determinant(&self.prefix(2 * k - 1), k).expect("enough terms were generated")
    }

    /// Whether no recurrence of smaller order generates the sequence.
    pub fn is_minimal(&self) -> bool {
        !self.hankel_determinant().is_zero()
    }

    /// The same sequence under its minimal-order recurrence.
    pub fn minimized(&self) -> Result<LinearRecurrence> {
        let k = self.order();
        let terms = self.prefix(2 * k);
        let fit = minimal_recurrence(&terms, k)?.expect("the recurrence itself fits");
        if fit.order() == 0 {
            return Err(Error::InvalidRecurrence("the sequence is identically zero".into()));
        }
        let coeffs = fit
            .integer_coeffs()
            .ok_or_else(|| Error::InvalidRecurrence("minimal recurrence has non-integer coefficients".into()))?;
        let order = coeffs.len();
        LinearRecurrence::new(coeffs, terms[..order].to_vec())
    }

    /// `U_i mod m` for all `i`.
    pub fn residues(&self, m: u64) -> Residues {
        assert!(m >= 1, "modulus must be positive");
        let reduce = |x: &BigInt| x.mod_floor(&BigInt::from(m)).to_u64().expect("residue below m");
        Residues {
            coeffs: self.coeffs.iter().map(reduce).collect(),
            window: self.initial.iter().map(reduce).collect(),
            m,
        }
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[BigInt]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "coeffs ({}), initial ({})", join(&self.coeffs), join(&self.initial))
    }
}

/// Infinite iterator over the terms of a recurrence.
pub struct Terms<'a> {
    rec: &'a LinearRecurrence,
    window: Vec<BigInt>,
    pos: usize,
}

impl Iterator for Terms<'_> {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let k = self.rec.order();
        let out = self.window[self.pos].clone();
        self.pos += 1;
        if self.pos == k {
            let next: BigInt =
                self.rec.coeffs.iter().enumerate().map(|(j, a)| a * &self.window[k - 1 - j]).sum();
            self.window.remove(0);
            self.window.push(next);
            self.pos = k - 1;
        }
        Some(out)
    }
}

/// Infinite iterator over `U_i mod m`.
pub struct Residues {
    coeffs: Vec<u64>,
    window: Vec<u64>,
    m: u64,
}

impl Residues {
    fn step(&mut self) {
        let k = self.coeffs.len();
        let m = u128::from(self.m);
        let next = self
            .coeffs
            .iter()
            .enumerate()
            .fold(0u128, |acc, (j, &a)| (acc + u128::from(a) * u128::from(self.window[k - 1 - j])) % m);
        self.window.rotate_left(1);
        self.window[k - 1] = next as u64;
    }
}

impl Iterator for Residues {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let out = self.window[0];
        self.step();
        Some(out)
    }
}

/// Preperiod, period and recurring values of `(U_i mod m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    pub modulus: u64,
    pub preperiod: usize,
    pub period: usize,
    pub preperiod_values: Vec<u64>,
    pub period_values: Vec<u64>,
    /// `N_U(m)`: the number of distinct values in the period.
    pub recurring_count: usize,
}

impl ResidueProfile {
    /// `U_i mod m`.
    pub fn value_at(&self, i: usize) -> u64 {
        if i < self.preperiod {
            self.preperiod_values[i]
        } else {
            self.period_values[(i - self.preperiod) % self.period]
        }
    }

    /// The values taken infinitely often.
    pub fn recurring_values(&self) -> BTreeSet<u64> {
        self.period_values.iter().copied().collect()
    }
}

/// Minimal preperiod and period of `(U_i mod m)`, found from the first
/// repeated window of `k` consecutive residues.
pub fn residue_profile(r: &LinearRecurrence, m: u64) -> ResidueProfile {
    let mut it = r.residues(m);
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut values = Vec::new();
    let (preperiod, period) = loop {
        let index = values.len();
        if let Some(&first) = seen.get(&it.window) {
            break (first, index - first);
        }
        seen.insert(it.window.clone(), index);
        values.push(it.next().expect("infinite"));
    };
    values.truncate(preperiod + period);
    let period_values = values.split_off(preperiod);
    let recurring_count = period_values.iter().collect::<BTreeSet<_>>().len();
    ResidueProfile { modulus: m, preperiod, period, preperiod_values: values, period_values, recurring_count }
}

/// Outcome of the growth test for one prime divisor of `a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// `N_U(p^v) → ∞`.
    Divergent,
    /// `N_U(p^v)` stays bounded; `P_U = A·B`.
    Bounded { a: IntPoly, b: IntPoly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthVerdict {
    pub reciprocal_poly: IntPoly,
    pub primes: Vec<(u64, PrimeVerdict)>,
    /// `N_U(m) → ∞` as `m → ∞`.
    pub diverges_for_all_m: bool,
}

impl fmt::Display for GrowthVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, verdict) in &self.primes {
            match verdict {
                PrimeVerdict::Divergent => write!(f, "p={p}: Divergent; ")?,
                PrimeVerdict::Bounded { a, b } => write!(f, "p={p}: Bounded (A = {a}, B = {b}); ")?,
            }
        }
        if self.primes.is_empty() {
            write!(f, "a_k = ±1; ")?;
        }
        let overall = if self.diverges_for_all_m { "criterion satisfied" } else { "criterion not satisfied" };
        write!(f, "overall: {overall}")
    }
}

/// Decides whether `N_U(p^v) → ∞` for every prime `p | a_k`.
///
/// For each prime, `P_U` is split into its cyclotomic part `A` and the
/// cofactor `B`; the count stays bounded exactly when `A` is squarefree
/// and `B ≡ 1 (mod p)`. The recurrence must be of minimal order.
pub fn n_growth_criterion(r: &LinearRecurrence) -> Result<GrowthVerdict> {
    if !r.is_minimal() {
        return Err(Error::NonMinimalRecurrence(format!("Hankel determinant of {r} is zero")));
    }
    let f = r.reciprocal_poly();
    let part = cyclotomic_part(&f, r.order());
    let mut primes = Vec::new();
    for p in algebra::prime_factors(r.last_coeff()) {
        let bounded = part.multiplicity == Multiplicity::Squarefree && part.b.is_one_mod(&BigInt::from(p));
        let verdict = if bounded {
            PrimeVerdict::Bounded { a: part.a.clone(), b: part.b.clone() }
        } else {
            PrimeVerdict::Divergent
        };
        primes.push((p, verdict));
    }
    let diverges_for_all_m = primes.iter().all(|(_, v)| *v == PrimeVerdict::Divergent);
    Ok(GrowthVerdict { reciprocal_poly: f, primes, diverges_for_all_m })
}

/// Engstrom index `s(p)`: the number of trailing coefficients
/// `a_k, a_{k-1}, ...` divisible by `p`, or `None` when all are.
pub fn engstrom_index(r: &LinearRecurrence, p: u64) -> Result<Option<usize>> {
    let bp = BigInt::from(p);
    if !r.last_coeff().is_multiple_of(&bp) {
        return Err(Error::NotADivisor { p, last: r.last_coeff().to_string() });
    }
    let s = r.coeffs.iter().rev().take_while(|a| a.is_multiple_of(&bp)).count();
    Ok((s < r.order()).then_some(s))
}

/// Default cap on the exponent scanned by [`smallest_v_exceeding`].
pub const DEFAULT_V_MAX: u32 = 64;

/// Least `v` with `N_U(p^v) > threshold`, scanning `v = 1..=v_max`.
pub fn smallest_v_exceeding(r: &LinearRecurrence, p: u64, threshold: u64, v_max: u32) -> Result<u32> {
    let mut m: u64 = 1;
    for v in 1..=v_max {
        m = m.checked_mul(p).ok_or_else(|| Error::ModulusTooLarge(format!("{p}^{v} exceeds 64 bits")))?;
        if residue_profile(r, m).recurring_count as u64 > threshold {
            return Ok(v);
        }
    }
    Err(Error::CapExceeded { p, threshold, cap: v_max })
}

/// `max ι_U(m)` over all `1 <= m <= bound`.
///
/// Moduli prime to `a_k` give pure periodicity, and `ι_U` of a product of
/// coprime factors is the maximum over the factors, so only the largest
/// power `p^e <= bound` of each prime `p | a_k` needs a scan.
pub fn max_preperiod_up_to(r: &LinearRecurrence, bound: u64) -> usize {
    algebra::prime_factors(r.last_coeff())
        .into_iter()
        .filter(|&p| p <= bound)
        .map(|p| {
            let mut m = p;
            while let Some(next) = m.checked_mul(p).filter(|&x| x <= bound) {
                m = next;
            }
            residue_profile(r, m).preperiod
        })
        .max()
        .unwrap_or(0)
}

/// Whether `U` is strictly increasing over its first `n` terms.
pub fn is_increasing(r: &LinearRecurrence, n: usize) -> bool {
    let terms = r.prefix(n);
    terms.windows(2).all(|w| w[0] < w[1]) && terms.first().is_none_or(|t| !t.is_negative())
}
