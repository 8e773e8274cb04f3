//! Divisor polynomials of the families, all in cyclotomic-exponent form.

use crate::arith::two_adic_split;
use crate::cyclotomic::{factor_one_plus_qd, FactoredPoly};

/// `n = 2^s (2r + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddPartDecomposition {
    pub n: usize,
    pub s: u32,
    pub r: usize,
}

impl OddPartDecomposition {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "decomposition needs n >= 1");
        let (s, odd) = two_adic_split(n);
        OddPartDecomposition {
            n,
            s,
            r: (odd - 1) / 2,
        }
    }

    pub fn odd_part(&self) -> usize {
        2 * self.r + 1
    }
}

/// `p_n = 1 + q^{2r+1}` where `2r+1` is the odd part of `n`.
pub fn little_p(n: usize) -> FactoredPoly {
    factor_one_plus_qd(OddPartDecomposition::new(n).odd_part())
}

/// Number of `s >= 0` with `2^s (2r+1) <= n`.
pub fn a_exponent(n: usize, r: usize) -> u32 {
    let mut count = 0;
    let mut v = 2 * r + 1;
    while v <= n {
        count += 1;
        v *= 2;
    }
    count
}

/// `P_n = prod_{r>=0} Phi_{4r+2}^{floor(n/(2r+1))}`.
pub fn big_p(n: usize) -> FactoredPoly {
    assert!(n >= 1);
    FactoredPoly::from_pairs(
        (0..)
            .map(|r| 2 * r + 1)
            .take_while(|&odd| odd <= n)
            .map(|odd| (2 * odd, (n / odd) as u32)),
    )
}

/// `P_n` built the other way, as `prod_r (1 + q^{2r+1})^{a_{n,r}}`.
pub fn big_p_from_exponents(n: usize) -> FactoredPoly {
    (0..=n / 2)
        .filter(|r| 2 * r < n)
        .fold(FactoredPoly::one(), |acc, r| {
            acc.mul(&factor_one_plus_qd(2 * r + 1).pow(a_exponent(n, r)))
        })
}

/// `Ev_n = prod_{j=0}^{s} (1 + q^{2^j r})` for `n = 2^s r`, `r` odd.
pub fn ev(n: usize) -> FactoredPoly {
    let (s, odd) = two_adic_split(n);
    (0..=s).fold(FactoredPoly::one(), |acc, j| {
        acc.mul(&factor_one_plus_qd(odd << j))
    })
}

/// Foata's `D_n`: `prod_{k<=n} Ev_k`, times `1 + q^2` when `n` is even.
pub fn big_d(n: usize) -> FactoredPoly {
    assert!(n >= 1);
    let base = (1..=n).fold(FactoredPoly::one(), |acc, k| acc.mul(&ev(k)));
    if n.is_multiple_of(2) {
        base.mul(&factor_one_plus_qd(2))
    } else {
        base
    }
}

/// `Q̄_n = prod_{r>=1} Phi_{4r}^{floor(n/(2r))}`.
pub fn q_bar(n: usize) -> FactoredPoly {
    assert!(n >= 1);
    FactoredPoly::from_pairs(
        (1..)
            .map(|r| 2 * r)
            .take_while(|&even| even <= n)
            .map(|even| (2 * even, (n / even) as u32)),
    )
}

/// `Q̂_n`: `Q̄_n`, times `1 + q^2` when `n` is odd.
pub fn q_hat(n: usize) -> FactoredPoly {
    if n.is_multiple_of(2) {
        q_bar(n)
    } else {
        q_bar(n).mul(&factor_one_plus_qd(2))
    }
}

/// `Q̃_n = (1+q)(1+q^2)...(1+q^n)`.
pub fn q_tilde(n: usize) -> FactoredPoly {
    assert!(n >= 1);
    (1..=n).fold(FactoredPoly::one(), |acc, d| {
        acc.mul(&factor_one_plus_qd(d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::tangent;
    use crate::IntPoly;

    fn one_plus(d: usize) -> FactoredPoly {
        factor_one_plus_qd(d)
    }

    /// Product of `(1 + q^d)^e` over the listed pairs.
    fn chunks(pairs: &[(usize, u32)]) -> FactoredPoly {
        pairs.iter().fold(FactoredPoly::one(), |acc, &(d, e)| {
            acc.mul(&one_plus(d).pow(e))
        })
    }

    #[test]
    fn decomposition() {
        assert_eq!(
            OddPartDecomposition::new(12),
            OddPartDecomposition { n: 12, s: 2, r: 1 }
        );
        assert_eq!(OddPartDecomposition::new(7).s, 0);
    }

    #[test]
    fn little_p_values() {
        assert_eq!(little_p(4), one_plus(1));
        assert_eq!(little_p(6), one_plus(3));
        assert_eq!(little_p(5), one_plus(5));
    }

    #[test]
    fn a_exponents() {
        assert_eq!(a_exponent(7, 0), 3);
        assert_eq!(a_exponent(3, 1), 1);
        assert_eq!(a_exponent(4, 2), 0);
        assert_eq!(a_exponent(12, 1), 3);
    }

    #[test]
    fn big_p_values() {
        assert_eq!(big_p(1), FactoredPoly::phi(2));
        assert_eq!(big_p(5), chunks(&[(1, 3), (3, 1), (5, 1)]));
        for n in 1..=20u32 {
            let at_one = big_p(n as usize).expand().eval(&1.into());
            assert_eq!(at_one, num_bigint::BigInt::from(2).pow(n));
        }
    }

    #[test]
    fn ev_values() {
        assert_eq!(ev(1), one_plus(1));
        assert_eq!(ev(6), chunks(&[(3, 1), (6, 1)]));
        assert_eq!(ev(4), chunks(&[(1, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn big_d_values() {
        assert_eq!(big_d(1), one_plus(1));
        assert_eq!(big_d(2), chunks(&[(1, 2), (2, 2)]));
        assert!(big_d(1).divides(&tangent(1)).holds());
    }

    #[test]
    fn q_families() {
        assert_eq!(q_bar(1), FactoredPoly::one());
        // lcm of (1+q^2)^3, (1+q^4), (1+q^6)
        assert_eq!(q_bar(6), chunks(&[(2, 2), (4, 1), (6, 1)]));
        assert_eq!(q_hat(3), chunks(&[(2, 2)]));
        assert_eq!(
            q_tilde(3).expand(),
            IntPoly::from_i64s(&[1, 1]) * IntPoly::one_plus_q_pow(2) * IntPoly::one_plus_q_pow(3)
        );
    }
}
