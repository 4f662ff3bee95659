//! Polynomials with arbitrary-precision nonnegative integer coefficients.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `sum_k N_k x^k`. Trailing zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RankPolynomial {
    coeffs: Vec<BigUint>,
}

impl RankPolynomial {
    pub fn zero() -> Self {
        RankPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = alloc::vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        RankPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = RankPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `(1 + x)^n`.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut row = alloc::vec![BigUint::one()];
        for i in 0..n {
            // C(n, i+1) = C(n, i) * (n - i) / (i + 1)
            let next = &row[i] * BigUint::from(n - i) / BigUint::from(i + 1);
            row.push(next);
        }
        RankPolynomial { coeffs: row }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficients `0..len`, zero-padded.
    pub fn padded(&self, len: usize) -> Vec<BigUint> {
        (0..len).map(|k| self.coeff(k)).collect()
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `x^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RankPolynomial { coeffs }
    }

    /// Space-separated coefficients `N_0 .. N_{len-1}`.
    pub fn coefficient_line(&self, len: usize) -> String {
        let mut out = String::new();
        for (k, c) in self.padded(len).iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{c}");
        }
        out
    }
}

impl AddAssign<&RankPolynomial> for RankPolynomial {
    fn add_assign(&mut self, rhs: &RankPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add for &RankPolynomial {
    type Output = RankPolynomial;
    fn add(self, rhs: &RankPolynomial) -> RankPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RankPolynomial {
    type Output = RankPolynomial;
    fn add(mut self, rhs: RankPolynomial) -> RankPolynomial {
        self += &rhs;
        self
    }
}

/// Schoolbook convolution.
impl Mul for &RankPolynomial {
    type Output = RankPolynomial;
    fn mul(self, rhs: &RankPolynomial) -> RankPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RankPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RankPolynomial { coeffs }
    }
}

impl Mul for RankPolynomial {
    type Output = RankPolynomial;
    fn mul(self, rhs: RankPolynomial) -> RankPolynomial {
        &self * &rhs
    }
}

impl<'a> core::iter::Sum<&'a RankPolynomial> for RankPolynomial {
    fn sum<I: Iterator<Item = &'a RankPolynomial>>(iter: I) -> Self {
        let mut acc = RankPolynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl fmt::Display for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
