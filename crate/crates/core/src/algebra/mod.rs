//! Exact integer polynomial and matrix algebra.

mod cyclotomic;
mod matrix;
mod poly;
mod recurrence;

pub use cyclotomic::{cyclotomic, cyclotomic_part, cyclotomic_table, euler_phi, CyclotomicPart, Multiplicity};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use recurrence::{common_recurrence, hankel_determinant, minimal_recurrence, RecurrenceFit};

use num_bigint::BigInt;

use crate::error::Result;

/// Quotient `f / g` when `g` divides `f` over the integers.
pub fn poly_div_exact(f: &IntPoly, g: &IntPoly) -> Result<Option<IntPoly>> {
    f.div_exact(g)
}

/// Distinct prime factors of `|n|`, ascending. Zero has none.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    use num_traits::{Signed, ToPrimitive, Zero};
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::from(1) {
        out.push(n.to_u64().expect("prime factors beyond u64 are not supported"));
    }
    out
}
