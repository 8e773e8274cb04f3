//! q-Pochhammer symbols `(q;q)_n` and Gaussian polynomials.
//!
//! The main path for `[M, N]_q` is the q-Pascal recurrence, which never
//! divides. The product formula and the cyclotomic factorization are kept as
//! independent routes for cross-checking.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::cyclotomic::FactoredPoly;
use crate::IntPoly;

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn qpoch(n: usize) -> IntPoly {
    (1..=n)
        .map(|j| IntPoly::one() - IntPoly::q_pow(j))
        .product()
}

/// Memo for Gaussian polynomials keyed by `(M, min(N, M-N))`.
#[derive(Default)]
pub struct GaussTable {
    memo: RwLock<HashMap<(usize, usize), IntPoly>>,
}

impl GaussTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static GaussTable {
        static GLOBAL: OnceLock<GaussTable> = OnceLock::new();
        GLOBAL.get_or_init(GaussTable::new)
    }

    /// `[m, n]_q`, zero when `n` is outside `0..=m`.
    pub fn get(&self, m: usize, n: i64) -> IntPoly {
        if n < 0 || n as usize > m {
            return IntPoly::zero();
        }
        let n = (n as usize).min(m - n as usize);
        if n == 0 {
            return IntPoly::one();
        }
        if let Some(p) = self.memo.read().unwrap().get(&(m, n)) {
            return p.clone();
        }
        // [m, n] = [m-1, n-1] + q^n [m-1, n]
        let value = self.get(m - 1, n as i64 - 1) + self.get(m - 1, n as i64).shift(n);
        self.memo
            .write()
            .unwrap()
            .entry((m, n))
            .or_insert(value)
            .clone()
    }
}

pub fn gauss(m: usize, n: i64) -> IntPoly {
    GaussTable::global().get(m, n)
}

/// `[m, n]_q` through `(q;q)_m / ((q;q)_n (q;q)_{m-n})` and exact division.
pub fn gauss_by_product(m: usize, n: i64) -> IntPoly {
    if n < 0 || n as usize > m {
        return IntPoly::zero();
    }
    let n = n as usize;
    let denom = qpoch(n) * qpoch(m - n);
    qpoch(m)
        .exact_div(&denom)
        .expect("q-Pochhammer quotient is a polynomial")
}

/// Cyclotomic factorization of `[m, k]_q`: every `Phi_d`, `d <= m`, with
/// `floor(k/d) + floor((m-k)/d) < floor(m/d)`, each to the first power.
///
/// # Panics
/// If `k > m`.
pub fn gauss_factored(m: usize, k: usize) -> FactoredPoly {
    assert!(k <= m, "gauss_factored needs 0 <= k <= m");
    FactoredPoly::from_pairs(
        (1..=m)
            .filter(|&d| k / d + (m - k) / d < m / d)
            .map(|d| (d, 1)),
    )
}

/// `(q;q)_m = sign * prod_{d=1}^{m} Phi_d^{floor(m/d)}` with `sign = (-1)^m`.
pub fn pochhammer_cyclo_exponents(m: usize) -> (FactoredPoly, i32) {
    let f = FactoredPoly::from_pairs((1..=m).map(|d| (d, (m / d) as u32)));
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    (f, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(qpoch(0), IntPoly::one());
        assert_eq!(qpoch(1), p(&[1, -1]));
        assert_eq!(qpoch(3), p(&[1, -1, -1, 0, 1, 1, -1]));
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gauss(2, 1), p(&[1, 1]));
        assert_eq!(gauss(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(gauss(3, 5).is_zero());
        assert!(gauss(3, -1).is_zero());
        assert_eq!(gauss(7, 0), IntPoly::one());
        assert_eq!(gauss(7, 7), IntPoly::one());
        assert_eq!(gauss_by_product(4, 2), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn gaussian_degree_and_positivity() {
        for m in 0..=16usize {
            for n in 0..=m {
                let g = gauss(m, n as i64);
                assert_eq!(g.degree(), Some(n * (m - n)));
                assert!(g.coeffs().iter().all(|c| c >= &BigInt::from(0)));
                assert_eq!(g.eval(&BigInt::from(1)), binomial(m as i64, n as i64));
            }
        }
    }

    #[test]
    fn factored_forms() {
        assert_eq!(
            gauss_factored(4, 2),
            FactoredPoly::from_pairs([(3, 1), (4, 1)])
        );
        assert_eq!(gauss_factored(2, 1), FactoredPoly::phi(2));
        assert_eq!(gauss_factored(9, 0), FactoredPoly::one());
        assert_eq!(pochhammer_cyclo_exponents(0), (FactoredPoly::one(), 1));
        assert_eq!(
            pochhammer_cyclo_exponents(2),
            (FactoredPoly::from_pairs([(1, 2), (2, 1)]), 1)
        );
        assert_eq!(
            pochhammer_cyclo_exponents(3),
            (FactoredPoly::from_pairs([(1, 3), (2, 1), (3, 1)]), -1)
        );
    }

    #[test]
    fn pochhammer_factorization_matches_product() {
        for m in 0..=50usize {
            let (f, sign) = pochhammer_cyclo_exponents(m);
            assert_eq!(f.expand().scale(&BigInt::from(sign)), qpoch(m), "m = {m}");
        }
    }
}
