//! Dense univariate polynomials with `i64` coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::combinat::binomial;

/// Coefficient `i` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `(x + c)^e`, expanded by a row of Pascal's triangle.
    pub fn binomial_power(c: i64, e: usize) -> Self {
        let e_i = e as i64;
        Self::from_coeffs(
            (0..=e_i)
                .map(|i| binomial(e_i, i) * c.pow((e_i - i) as u32))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficients `0..len`, padded with zeros.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// `p(x + c)`, by Horner's rule over polynomials.
    pub fn translate(&self, c: i64) -> Self {
        let shift = Self::from_coeffs(vec![c, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, &a| &(&acc * &shift) + &Self::constant(a))
    }

    /// Keeps the coefficients of degree `<= deg`.
    pub fn truncate(&self, deg: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(deg + 1).copied().collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a != 1 => write!(f, "{a}x")?,
                _ => f.write_str("x")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pascal_rows() {
        assert_eq!(IntPolynomial::binomial_power(-1, 3).coeffs(), [-1, 3, -3, 1]);
        assert_eq!(IntPolynomial::binomial_power(1, 0), IntPolynomial::one());
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_coeffs(vec![1, 2, 0, -1]);
        assert_eq!(alloc::format!("{p}"), "1 + 2x - x^3");
        assert_eq!(alloc::format!("{}", IntPolynomial::zero()), "0");
    }

    #[test]
    fn trailing_zeros_dropped() {
        let p = IntPolynomial::from_coeffs(vec![3, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(IntPolynomial::from_coeffs(vec![0]).degree(), None);
    }

    proptest! {
        #[test]
        fn translate_agrees_with_evaluation(
            c in proptest::collection::vec(-20i64..20, 0..7),
            shift in -3i64..4,
            x in -4i64..5,
        ) {
            let p = IntPolynomial::from_coeffs(c);
            prop_assert_eq!(p.translate(shift).eval(x), p.eval(x + shift));
            prop_assert_eq!(p.translate(shift).translate(-shift), p);
        }

        #[test]
        fn product_evaluates_pointwise(
            a in proptest::collection::vec(-9i64..9, 0..6),
            b in proptest::collection::vec(-9i64..9, 0..6),
            x in -3i64..4,
        ) {
            let (p, q) = (IntPolynomial::from_coeffs(a), IntPolynomial::from_coeffs(b));
            prop_assert_eq!((&p * &q).eval(x), p.eval(x) * q.eval(x));
            prop_assert_eq!((&p + &q).eval(x), p.eval(x) + q.eval(x));
        }
    }
}
