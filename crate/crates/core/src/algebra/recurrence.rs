use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Coefficients `a_1..a_k` of `s_{i+k} = a_1 s_{i+k-1} + ... + a_k s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceFit {
    pub coeffs: Vec<BigRational>,
}

impl RecurrenceFit {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficients when they are all integers.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

/// Shortest homogeneous linear recurrence (order at most `max_order`)
/// satisfied by every supplied term, with exact rational coefficients.
///
/// For each order `k` the `k × k` system built from the first `2k` terms
/// is solved by Gaussian elimination over the rationals (free unknowns set
/// to zero when singular) and the candidate is then checked against all
/// terms. An all-zero sequence yields the empty recurrence.
pub fn minimal_recurrence(terms: &[BigInt], max_order: usize) -> Result<Option<RecurrenceFit>> {
    if terms.len() < 2 * max_order {
        return Err(Error::InsufficientTerms { needed: 2 * max_order, got: terms.len() });
    }
    if terms.iter().all(Zero::is_zero) {
        return Ok(Some(RecurrenceFit { coeffs: Vec::new() }));
    }
    let seq: Vec<BigRational> = terms.iter().map(|t| BigRational::from_integer(t.clone())).collect();
    for k in 1..=max_order {
        // row i: sum_j a_j s_{i+k-j} = s_{i+k}
        let system: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                let mut row: Vec<BigRational> = (1..=k).map(|j| seq[i + k - j].clone()).collect();
                row.push(seq[i + k].clone());
                row
            })
            .collect();
        let Some(coeffs) = solve(system, k) else { continue };
        let fits = (k..seq.len()).all(|n| {
            let predicted: BigRational = (1..=k).map(|j| &coeffs[j - 1] * &seq[n - j]).sum();
            predicted == seq[n]
        });
        if fits {
            return Ok(Some(RecurrenceFit { coeffs }));
        }
    }
    Ok(None)
}

/// Shortest recurrence (order at most `max_order`) satisfied from index 0
/// by every one of the given sequences simultaneously.
///
/// Every available equation of every sequence is imposed, so the result is
/// exact for sequences long enough to pin the recurrence down.
pub fn common_recurrence(seqs: &[Vec<BigInt>], max_order: usize) -> Option<RecurrenceFit> {
    let seqs: Vec<Vec<BigRational>> =
        seqs.iter().map(|s| s.iter().map(|t| BigRational::from_integer(t.clone())).collect()).collect();
    (0..=max_order).find_map(|k| {
        let system: Vec<Vec<BigRational>> = seqs
            .iter()
            .flat_map(|seq| {
                (k..seq.len()).map(move |n| {
                    let mut row: Vec<BigRational> = (1..=k).map(|j| seq[n - j].clone()).collect();
                    row.push(seq[n].clone());
                    row
                })
            })
            .collect();
        if system.is_empty() {
            return Some(RecurrenceFit { coeffs: vec![BigRational::zero(); k] });
        }
        solve(system, k).map(|coeffs| RecurrenceFit { coeffs })
    })
}

/// Gaussian elimination on an augmented system with `n` unknowns and any
/// number of rows; `None` when inconsistent.
fn solve(mut rows: Vec<Vec<BigRational>>, n: usize) -> Option<Vec<BigRational>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row[c..=n].iter_mut().zip(&pivot[c..=n]) {
                    *x -= &factor * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut solution = vec![BigRational::zero(); n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        solution[c] = rows[i][n].clone();
    }
    Some(solution)
}

/// Determinant of the `k × k` Hankel matrix `(terms[i+j])`; nonzero
/// exactly when no recurrence of order below `k` fits (for `a_k ≠ 0`).
pub fn hankel_determinant(terms: &[BigInt], k: usize) -> Result<BigInt> {
    Ok(IntMatrix::hankel(terms, k)?.det())
}
