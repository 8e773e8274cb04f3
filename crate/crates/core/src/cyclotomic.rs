//! Cyclotomic polynomials and products of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::arith::divisors;
use crate::IntPoly;

/// Memo table for `Phi_n`, filled by exact division of `q^n - 1` by the
/// lower-index factors. Safe to share between threads.
#[derive(Default)]
pub struct CycloCache {
    table: RwLock<HashMap<usize, IntPoly>>,
}

impl CycloCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static CycloCache {
        static GLOBAL: OnceLock<CycloCache> = OnceLock::new();
        GLOBAL.get_or_init(CycloCache::new)
    }

    pub fn get(&self, n: usize) -> IntPoly {
        assert!(n >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.table.read().unwrap().get(&n) {
            return p.clone();
        }
        let lower: IntPoly = divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .map(|d| self.get(d))
            .product();
        let phi = IntPoly::q_pow_minus_one(n)
            .exact_div(&lower)
            .expect("q^n - 1 is divisible by its proper cyclotomic factors");
        // concurrent fills compute the same value, so either insert wins
        self.table.write().unwrap().entry(n).or_insert(phi).clone()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> IntPoly {
    CycloCache::global().get(n)
}

/// A product `prod_d Phi_d^{e_d}` kept as its exponent map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredPoly {
    factors: BTreeMap<usize, u32>,
}

impl FactoredPoly {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut f = Self::one();
        for (d, e) in pairs {
            f.add_factor(d, e);
        }
        f
    }

    /// A single `Phi_d`.
    pub fn phi(d: usize) -> Self {
        Self::from_pairs([(d, 1)])
    }

    pub fn add_factor(&mut self, d: usize, e: u32) {
        assert!(d >= 1, "cyclotomic index must be positive");
        if e > 0 {
            *self.factors.entry(d).or_insert(0) += e;
        }
    }

    pub fn exponent(&self, d: usize) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().map(|(&d, &e)| (d, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            out.add_factor(d, e);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_pairs(self.factors().map(|(d, e)| (d, e * k)))
    }

    /// Exponentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            let slot = out.factors.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// Exponentwise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_pairs(self.factors().map(|(d, e)| (d, e.min(other.exponent(d)))))
    }

    /// Divisibility between two factored products, decided on exponents.
    pub fn divides_factored(&self, other: &Self) -> bool {
        self.factors().all(|(d, e)| other.exponent(d) >= e)
    }

    pub fn degree(&self) -> usize {
        self.factors()
            .map(|(d, e)| e as usize * cyclotomic(d).degree().unwrap())
            .sum()
    }

    pub fn expand(&self) -> IntPoly {
        self.factors().map(|(d, e)| cyclotomic(d).pow(e)).product()
    }

    /// Tests whether the expansion divides `p` exactly.
    pub fn divides(&self, p: &IntPoly) -> Divisibility {
        assert!(!p.is_zero(), "divisibility test needs a nonzero polynomial");
        match p.exact_div(&self.expand()) {
            Ok(quotient) => Divisibility::Divides { quotient },
            Err(crate::PolyError::NotDivisible { remainder }) => Divisibility::Fails { remainder },
            Err(e) => unreachable!("expanded product is monic and nonzero: {e}"),
        }
    }
}

/// Outcome of an exact divisibility test, with the evidence either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divisibility {
    Divides { quotient: IntPoly },
    Fails { remainder: IntPoly },
}

impl Divisibility {
    pub fn holds(&self) -> bool {
        matches!(self, Divisibility::Divides { .. })
    }

    pub fn witness(&self) -> &IntPoly {
        match self {
            Divisibility::Divides { quotient } => quotient,
            Divisibility::Fails { remainder } => remainder,
        }
    }
}

impl fmt::Debug for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FactoredPoly {
    /// `Phi_2^2 Phi_6`; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(d, e)| {
                if e == 1 {
                    format!("Phi_{d}")
                } else {
                    format!("Phi_{d}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `1 + q^d = prod { Phi_{2k} : k | d, 2k does not divide d }`.
pub fn factor_one_plus_qd(d: usize) -> FactoredPoly {
    assert!(d >= 1);
    FactoredPoly::from_pairs(
        divisors(d)
            .into_iter()
            .filter(|&k| !d.is_multiple_of(2 * k))
            .map(|k| (2 * k, 1)),
    )
}

/// `q^n - 1 = prod_{d | n} Phi_d`.
pub fn factor_q_pow_minus_one(n: usize) -> FactoredPoly {
    FactoredPoly::from_pairs(divisors(n).into_iter().map(|d| (d, 1)))
}
