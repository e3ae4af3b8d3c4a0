use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `d`-th cyclotomic polynomial, as the quotient of `x^d - 1` by the
/// product of `Φ_e` over the proper divisors `e` of `d`.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    cyclotomic_table(d).pop().expect("d >= 1")
}

/// `Φ_1, ..., Φ_d`.
pub fn cyclotomic_table(d: u64) -> Vec<IntPoly> {
    let mut table: Vec<IntPoly> = Vec::with_capacity(d as usize);
    for n in 1..=d {
        let mut q = IntPoly::x_pow_minus_one(n as usize);
        for e in 1..n {
            if n % e == 0 {
                q = q
                    .div_exact(&table[(e - 1) as usize])
                    .expect("cyclotomic divisor is nonzero")
                    .expect("x^n - 1 is divisible by Φ_e for e | n");
            }
        }
        table.push(q);
    }
    table
}

/// Whether the extracted cyclotomic factor has a repeated irreducible factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Squarefree,
    Repeated,
}

/// Factorization `f = A·B` with `A` the full cyclotomic part of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPart {
    pub a: IntPoly,
    pub multiplicity: Multiplicity,
    pub b: IntPoly,
    /// `(d, m_d)` for every `Φ_d` dividing `f`.
    pub factors: Vec<(u64, u32)>,
}

impl CyclotomicPart {
    /// Least `D` such that `A` divides `x^D - 1` (lcm of the orders).
    pub fn order(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &(d, _)| num_integer::lcm(acc, d))
    }
}

/// Splits off every `Φ_d` with `φ(d) <= degree_bound` from `f`.
///
/// Since `φ(d) >= sqrt(d/2)`, only `d <= 2·k²` need testing. `A` is
/// normalized so that `A(0) = 1`.
pub fn cyclotomic_part(f: &IntPoly, degree_bound: usize) -> CyclotomicPart {
    let k = degree_bound as u64;
    let mut rest = f.clone();
    let mut a = IntPoly::one();
    let mut factors = Vec::new();
    if !f.is_zero() {
        let bound = (2 * k * k).max(1);
        let table = cyclotomic_table(bound);
        for d in 1..=bound {
            if euler_phi(d) > k {
                continue;
            }
            let phi = &table[(d - 1) as usize];
            let mut m = 0;
            while let Some(q) = rest.div_exact(phi).expect("cyclotomic polynomials are nonzero") {
                rest = q;
                a = &a * phi;
                m += 1;
            }
            if m > 0 {
                factors.push((d, m));
            }
        }
    }
    if a.coeff(0) == -BigInt::one() {
        a = -&a;
        rest = -&rest;
    }
    let multiplicity =
        if factors.iter().all(|&(_, m)| m <= 1) { Multiplicity::Squarefree } else { Multiplicity::Repeated };
    CyclotomicPart { a, multiplicity, b: rest, factors }
}
