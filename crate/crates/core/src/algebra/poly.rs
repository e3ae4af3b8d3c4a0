use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends with a zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `c·x^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x^deg · f(1/x)` for the given formal degree.
    pub fn reciprocal(&self, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[deg - i] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// Exact quotient `f / g` over the integers, `None` when `g` does not
    /// divide `f` in `Z[x]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<Option<IntPoly>> {
        let Some(dg) = divisor.degree() else {
            return Err(Error::ZeroDivisor);
        };
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let Some(df) = self.degree() else {
            return Ok(Some(IntPoly::zero()));
        };
        if df < dg {
            return Ok(None);
        }
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for i in (0..=df - dg).rev() {
            let top = &rem[i + dg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(quot)))
    }

    /// True when every coefficient is divisible by `p` except a constant
    /// term equal to 1, i.e. `self ≡ 1 (mod p Z[x])` with `self(0) = 1`.
    pub fn is_one_mod(&self, p: &BigInt) -> bool {
        self.coeff(0).is_one() && self.coeffs.iter().skip(1).all(|c| c.is_multiple_of(p))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers of `x`, e.g. `-3x^2 - 6x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !magnitude.is_one() || i == 0 {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displays_descending() {
        assert_eq!(IntPoly::from_i64(&[1, -6, -3]).to_string(), "-3x^2 - 6x + 1");
        assert_eq!(IntPoly::from_i64(&[1, 0, 0, 1]).to_string(), "x^3 + 1");
        assert_eq!(IntPoly::from_i64(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division_of_the_five_term_polynomial() {
        let f = IntPoly::from_i64(&[1, -6, -3, 1, -6, -3]);
        let g = IntPoly::from_i64(&[1, 0, 0, 1]);
        assert_eq!(f.div_exact(&g).unwrap(), Some(IntPoly::from_i64(&[1, -6, -3])));
        assert_eq!(f.div_exact(&IntPoly::one()).unwrap(), Some(f.clone()));
    }

    #[test]
    fn detects_non_divisibility() {
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let g = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(f.div_exact(&g).unwrap(), None);
        // leading coefficient not divisible
        assert_eq!(IntPoly::from_i64(&[0, 1]).div_exact(&IntPoly::from_i64(&[0, 2])).unwrap(), None);
        assert!(matches!(f.div_exact(&IntPoly::zero()), Err(Error::ZeroDivisor)));
    }

    #[test]
    fn one_mod_p() {
        assert!(IntPoly::from_i64(&[1, -6, -3]).is_one_mod(&BigInt::from(3)));
        assert!(!IntPoly::from_i64(&[1, -3, -2, 0, -3]).is_one_mod(&BigInt::from(3)));
        assert!(IntPoly::one().is_one_mod(&BigInt::from(7)));
    }
}
