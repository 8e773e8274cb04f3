//! The q-Euler, q-tangent, q-Salié and related polynomial families.
//!
//! Each family is the coefficient sequence of a quotient of two series in
//! `x^j / (q;q)_j`. Multiplying through by the denominator and comparing
//! coefficients turns every definition into a convolution recurrence
//!
//! ```text
//! value(n) = rhs(n) - sum_{j<n} weight(n, j) * value(j)
//! ```
//!
//! with a Gaussian polynomial inside `weight`. Values are memoized as
//! growing prefixes.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::qbinom::gauss;
use crate::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// `E_{2n}(q)`, reciprocal of the q-cosine-like series.
    Euler,
    /// `T_{2n+1}(q)`.
    Tangent,
    /// `S_{2n}(q)`.
    Salie,
    /// `E^{(k)}_{kn}(q)`.
    GenEuler(usize),
    /// `S̄_{2n}(q)`, numerator `sum x^{2n}/(q;q)_{2n}`.
    SalieBar,
    /// `Ŝ_{2n}(q)`, numerator `sum q^{2n} x^{2n}/(q;q)_{2n}`.
    SalieHat,
    /// `S̃_{2n}(q)`, numerator `sum q^{n^2} x^{2n}/(q;q)_{2n}`.
    SalieTilde,
}

impl SequenceId {
    /// Entry `n` of the family is the coefficient attached to `x^{index(n)}`.
    pub fn series_index(&self, n: usize) -> usize {
        match self {
            SequenceId::Tangent => 2 * n + 1,
            SequenceId::GenEuler(k) => k * n,
            _ => 2 * n,
        }
    }

    fn rhs(&self, n: usize) -> IntPoly {
        let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
        match self {
            SequenceId::Euler | SequenceId::GenEuler(_) => {
                if n == 0 {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            }
            SequenceId::Tangent => IntPoly::from_i64s(&[sign(n)]),
            SequenceId::Salie => IntPoly::q_pow(n),
            SequenceId::SalieBar => IntPoly::one(),
            SequenceId::SalieHat => IntPoly::q_pow(2 * n),
            SequenceId::SalieTilde => IntPoly::q_pow(n * n),
        }
    }

    /// `weight(n, j)` for `j < n`.
    fn weight(&self, n: usize, j: usize) -> IntPoly {
        let g = gauss(self.series_index(n), self.series_index(j) as i64);
        match self {
            SequenceId::Euler | SequenceId::GenEuler(_) => g,
            _ if (n - j) % 2 == 1 => -g,
            _ => g,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Euler => f.write_str("euler"),
            SequenceId::Tangent => f.write_str("tangent"),
            SequenceId::Salie => f.write_str("salie"),
            SequenceId::GenEuler(k) => write!(f, "gen-euler({k})"),
            SequenceId::SalieBar => f.write_str("salie-bar"),
            SequenceId::SalieHat => f.write_str("salie-hat"),
            SequenceId::SalieTilde => f.write_str("salie-tilde"),
        }
    }
}

/// Memoized prefixes of every family. Extending a prefix holds the write
/// lock, so concurrent callers never compute or store an entry twice.
#[derive(Default)]
pub struct SequenceStore {
    prefixes: RwLock<HashMap<SequenceId, Vec<IntPoly>>>,
}

impl SequenceStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static SequenceStore {
        static GLOBAL: OnceLock<SequenceStore> = OnceLock::new();
        GLOBAL.get_or_init(SequenceStore::new)
    }

    pub fn get(&self, id: SequenceId, n: usize) -> IntPoly {
        if let SequenceId::GenEuler(k) = id {
            assert!(k >= 1, "generalized Euler family needs k >= 1");
        }
        if let Some(v) = self
            .prefixes
            .read()
            .unwrap()
            .get(&id)
            .and_then(|p| p.get(n))
        {
            return v.clone();
        }
        let mut guard = self.prefixes.write().unwrap();
        let prefix = guard.entry(id).or_default();
        while prefix.len() <= n {
            let m = prefix.len();
            let mut value = id.rhs(m);
            for (j, prev) in prefix.iter().enumerate() {
                value = value - id.weight(m, j) * prev;
            }
            prefix.push(value);
        }
        prefix[n].clone()
    }

    /// Entries `0..=n`.
    pub fn prefix(&self, id: SequenceId, n: usize) -> Vec<IntPoly> {
        self.get(id, n);
        self.prefixes.read().unwrap()[&id][..=n].to_vec()
    }

    pub fn cached_len(&self, id: SequenceId) -> usize {
        self.prefixes.read().unwrap().get(&id).map_or(0, Vec::len)
    }
}

pub fn sequence(id: SequenceId, n: usize) -> IntPoly {
    SequenceStore::global().get(id, n)
}

/// `E_{2n}(q)`.
pub fn euler(n: usize) -> IntPoly {
    sequence(SequenceId::Euler, n)
}

/// `T_{2n+1}(q)`.
pub fn tangent(n: usize) -> IntPoly {
    sequence(SequenceId::Tangent, n)
}

/// `S_{2n}(q)`.
pub fn salie(n: usize) -> IntPoly {
    sequence(SequenceId::Salie, n)
}

/// `E^{(k)}_{kn}(q)`.
pub fn gen_euler(k: usize, n: usize) -> IntPoly {
    sequence(SequenceId::GenEuler(k), n)
}

pub fn salie_bar(n: usize) -> IntPoly {
    sequence(SequenceId::SalieBar, n)
}

pub fn salie_hat(n: usize) -> IntPoly {
    sequence(SequenceId::SalieHat, n)
}

pub fn salie_tilde(n: usize) -> IntPoly {
    sequence(SequenceId::SalieTilde, n)
}

/// `E^{(k)}_{kn}(1)` from the integer recurrence
/// `E_{kn} = -sum_{j<n} C(kn, kj) E_{kj}`, which is the `q = 1` image of the
/// polynomial recurrence. Cheap enough for indices far beyond the
/// polynomial path.
pub fn gen_euler_at_one(k: usize, n: usize) -> BigInt {
    assert!(k >= 1);
    let mut values: Vec<BigInt> = Vec::with_capacity(n + 1);
    values.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for (j, v) in values.iter().enumerate() {
            acc += binomial((k * m) as i64, (k * j) as i64) * v;
        }
        values.push(-acc);
    }
    values.swap_remove(n)
}
