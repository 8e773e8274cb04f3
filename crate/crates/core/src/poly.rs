//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending degree order and kept canonical: the
//! highest stored coefficient is never zero, and the zero polynomial is the
//! empty vector. All arithmetic is schoolbook.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError<T: fmt::Debug> {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// The divisor does not divide the dividend. The witness is the nonzero
    /// remainder left when long division stopped.
    #[error("not divisible, remainder {remainder:?}")]
    NotDivisible { remainder: Poly<T> },
    #[error("modulus must have leading coefficient 1")]
    NonMonicModulus,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_small(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(T::one(), k)
    }

    /// `1 + q^k`.
    pub fn one_plus_q_pow(k: usize) -> Self {
        Self::one() + Self::q_pow(k)
    }

    /// `q^k - 1`.
    pub fn q_pow_minus_one(k: usize) -> Self {
        Self::q_pow(k) - Self::one()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `a(q^k)`.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc.mul_ref(x) + c.clone())
    }

    /// Coefficient-wise ring map, e.g. `BigInt -> BigRational`.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Long division returning `(quotient, remainder)`.
    ///
    /// Each step needs the divisor's leading coefficient to divide the
    /// current leading coefficient exactly. When that fails (possible over
    /// the integers) the partial result is returned with a remainder whose
    /// degree may still be at least the divisor's.
    fn long_division(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("caller checked nonzero divisor");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            if c.is_zero() {
                rem.pop();
                continue;
            }
            let Some(factor) = c.try_div_exact(lead) else {
                break;
            };
            let offset = top - dd;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[offset + j] -= &factor.mul_ref(b);
            }
            quot[offset] = factor;
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient `self / divisor`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError<T>> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (q, r) = self.long_division(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible { remainder: r })
        }
    }

    /// Remainder modulo a monic polynomial; the result has degree below the modulus.
    pub fn rem_monic(&self, modulus: &Self) -> Result<Self, PolyError<T>> {
        if !modulus.is_monic() {
            return Err(PolyError::NonMonicModulus);
        }
        if self.coeffs.len() < modulus.coeffs.len() {
            return Ok(self.clone());
        }
        Ok(self.long_division(modulus).1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_coeffs<T: Scalar>(a: &[T], b: &[T], subtract: bool) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(a.len().max(b.len()));
    out.extend(a.iter().cloned());
    out.resize(a.len().max(b.len()), T::zero());
    for (o, c) in out.iter_mut().zip(b) {
        if subtract {
            *o -= c;
        } else {
            *o += c;
        }
    }
    out
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Scalar> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| a + b)
    }
}

impl<T: Scalar> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |a, b| a * b)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    /// Ascending order, e.g. `q + 2q^2 - q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => f.write_str(&mag)?,
                _ => {
                    if !unit {
                        f.write_str(&mag)?;
                    }
                    if i == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}
