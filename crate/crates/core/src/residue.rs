//! Exact arithmetic in `Z[q] / Phi_m(q)`.
//!
//! The class of `q` in this ring is a primitive `m`-th root of unity, so two
//! integer polynomials agree at every primitive `m`-th root exactly when
//! their residues are equal.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::cyclotomic::cyclotomic;
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("residues modulo Phi_{left} and Phi_{right} cannot be combined")]
    ModulusMismatch { left: usize, right: usize },
}

/// An integer polynomial reduced modulo `Phi_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueElem {
    modulus_index: usize,
    rep: IntPoly,
}

impl ResidueElem {
    /// Reduces `p` modulo `Phi_m`.
    pub fn inject(p: &IntPoly, m: usize) -> Self {
        assert!(m >= 1, "modulus index must be positive");
        let rep = p
            .rem_monic(&cyclotomic(m))
            .expect("cyclotomic polynomials are monic");
        ResidueElem {
            modulus_index: m,
            rep,
        }
    }

    pub fn from_int(c: i64, m: usize) -> Self {
        Self::inject(&IntPoly::constant(BigInt::from(c)), m)
    }

    pub fn one(m: usize) -> Self {
        Self::from_int(1, m)
    }

    pub fn zero(m: usize) -> Self {
        Self::from_int(0, m)
    }

    /// The class of `q^j`, with `j` taken modulo `m` since `q^m = 1` here.
    pub fn root_power(m: usize, j: i64) -> Self {
        assert!(m >= 1, "modulus index must be positive");
        let e = j.rem_euclid(m as i64) as usize;
        Self::inject(&IntPoly::q_pow(e), m)
    }

    pub fn modulus_index(&self) -> usize {
        self.modulus_index
    }

    pub fn rep(&self) -> &IntPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ResidueError> {
        if self.modulus_index == other.modulus_index {
            Ok(())
        } else {
            Err(ResidueError::ModulusMismatch {
                left: self.modulus_index,
                right: other.modulus_index,
            })
        }
    }

    fn wrap(&self, p: IntPoly) -> Self {
        Self::inject(&p, self.modulus_index)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ResidueError> {
        self.check(other)?;
        // sum of reduced reps is already reduced
        Ok(ResidueElem {
            modulus_index: self.modulus_index,
            rep: &self.rep + &other.rep,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ResidueError> {
        self.check(other)?;
        Ok(ResidueElem {
            modulus_index: self.modulus_index,
            rep: &self.rep - &other.rep,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ResidueError> {
        self.check(other)?;
        Ok(self.wrap(&self.rep * &other.rep))
    }

    pub fn neg(&self) -> Self {
        ResidueElem {
            modulus_index: self.modulus_index,
            rep: -&self.rep,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ResidueElem {
            modulus_index: self.modulus_index,
            rep: self.rep.scale(c),
        }
    }

    /// Equality that refuses to compare residues from different rings.
    pub fn try_eq(&self, other: &Self) -> Result<bool, ResidueError> {
        self.check(other)?;
        Ok(self.rep == other.rep)
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Phi_{}", self.rep, self.modulus_index)
    }
}
