//! Brute-force inversion generating functions over permutations of `[2n]`.
//!
//! Deliberately naive: depth-first generation in lexicographic order with the
//! inversion count tracked incrementally. Only the alternating pattern is
//! used for pruning.

use num_bigint::BigInt;
use thiserror::Error;

use crate::IntPoly;

/// Hard ceiling for alternating enumeration, `(12)!` permutations before pruning.
pub const ALTERNATING_MAX_N: usize = 6;
pub const ALTERNATING_DEFAULT_CAP: usize = 5;
pub const SALIE_MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("half-size {n} exceeds the enumeration limit {max}")]
    SizeLimitExceeded { n: usize, max: usize },
    #[error("half-size must be at least 1")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermClass {
    Alternating,
    Salie,
}

/// Generating function of a permutation class by inversion number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStatistic {
    pub n: usize,
    pub class: PermClass,
    pub gf: IntPoly,
}

impl PermStatistic {
    pub fn cardinality(&self) -> BigInt {
        self.gf.eval(&BigInt::from(1))
    }
}

pub fn inversions(x: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i] > x[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// `x_1 < x_2 > x_3 < ... `, checked on the whole slice.
pub fn is_alternating(x: &[usize]) -> bool {
    x.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
}

/// Values `k` in `0..=n` such that `x_1..x_{2k}` is alternating and
/// `x_{2k+1} < ... < x_{2n}`.
pub fn salie_decompositions(x: &[usize]) -> Vec<usize> {
    let n = x.len() / 2;
    (0..=n)
        .filter(|&k| is_alternating(&x[..2 * k]) && x[2 * k..].windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// Salié: some `k >= 1` has an alternating prefix of length `2k` followed by
/// `x_{2k} < x_{2k+1} < ... < x_{2n}`.
pub fn is_salie(x: &[usize]) -> bool {
    let n = x.len() / 2;
    (1..=n).any(|k| is_alternating(&x[..2 * k]) && x[2 * k - 1..].windows(2).all(|w| w[0] < w[1]))
}

struct Walker<'a> {
    len: usize,
    prefix: Vec<usize>,
    used: Vec<bool>,
    counts: Vec<i64>,
    prune: &'a dyn Fn(&[usize]) -> bool,
    accept: &'a dyn Fn(&[usize]) -> bool,
}

impl Walker<'_> {
    fn run(&mut self, inv: usize) {
        if self.prefix.len() == self.len {
            if (self.accept)(&self.prefix) {
                if self.counts.len() <= inv {
                    self.counts.resize(inv + 1, 0);
                }
                self.counts[inv] += 1;
            }
            return;
        }
        for v in 1..=self.len {
            if self.used[v] {
                continue;
            }
            let added = (v + 1..=self.len).filter(|&u| self.used[u]).count();
            self.prefix.push(v);
            if (self.prune)(&self.prefix) {
                self.used[v] = true;
                self.run(inv + added);
                self.used[v] = false;
            }
            self.prefix.pop();
        }
    }
}

/// Sum of `q^inv(x)` over permutations of `[len]` that pass `accept`,
/// exploring only prefixes that pass `prune`.
pub fn inversion_gf(
    len: usize,
    prune: &dyn Fn(&[usize]) -> bool,
    accept: &dyn Fn(&[usize]) -> bool,
) -> IntPoly {
    let mut walker = Walker {
        len,
        prefix: Vec::with_capacity(len),
        used: vec![false; len + 1],
        counts: Vec::new(),
        prune,
        accept,
    };
    walker.run(0);
    IntPoly::new(walker.counts.into_iter().map(BigInt::from).collect())
}

fn check_size(n: usize, max: usize) -> Result<(), PermError> {
    if n == 0 {
        Err(PermError::Empty)
    } else if n > max {
        Err(PermError::SizeLimitExceeded { n, max })
    } else {
        Ok(())
    }
}

/// Alternating permutations of `[2n]` by inversions, with the default cap.
pub fn alternating_gf(n: usize) -> Result<PermStatistic, PermError> {
    alternating_gf_capped(n, ALTERNATING_DEFAULT_CAP)
}

pub fn alternating_gf_capped(n: usize, cap: usize) -> Result<PermStatistic, PermError> {
    check_size(n, cap.min(ALTERNATING_MAX_N))?;
    let gf = inversion_gf(2 * n, &is_alternating, &|_| true);
    Ok(PermStatistic {
        n,
        class: PermClass::Alternating,
        gf,
    })
}

/// Salié permutations of `[2n]` by inversions, each counted once.
pub fn salie_perm_gf(n: usize) -> Result<PermStatistic, PermError> {
    check_size(n, SALIE_MAX_N)?;
    let gf = inversion_gf(2 * n, &|p| p.len() < 2 || p[0] < p[1], &is_salie);
    Ok(PermStatistic {
        n,
        class: PermClass::Salie,
        gf,
    })
}

/// Permutations of `[2n]` whose first `2k` entries alternate and whose
/// remaining entries increase, with no condition where the two parts meet.
pub fn prefix_tail_gf(n: usize, k: usize) -> Result<IntPoly, PermError> {
    check_size(n, SALIE_MAX_N)?;
    assert!(k <= n);
    let cut = 2 * k;
    let prune = move |p: &[usize]| {
        let i = p.len() - 1;
        match i {
            0 => true,
            _ if i == cut => true,
            _ if i < cut && i.is_multiple_of(2) => p[i - 1] > p[i],
            _ => p[i - 1] < p[i],
        }
    };
    Ok(inversion_gf(2 * n, &prune, &|_| true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{euler, salie_bar};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[1, 2, 3]), 0);
        assert_eq!(inversions(&[3, 2, 1]), 3);
        assert_eq!(inversions(&[2, 4, 1, 3]), 3);
    }

    #[test]
    fn predicates() {
        assert!(is_alternating(&[1, 3, 2, 4]));
        assert!(!is_alternating(&[2, 1, 3, 4]));
        assert!(is_salie(&[1, 2, 3, 4]));
        assert!(is_salie(&[1, 3, 2, 4]));
        assert!(!is_salie(&[2, 1, 3, 4]));
        assert!(!is_salie(&[1, 4, 3, 2]));
    }

    #[test]
    fn small_alternating() {
        assert_eq!(alternating_gf(1).unwrap().gf, IntPoly::one());
        let s2 = alternating_gf(2).unwrap();
        assert_eq!(s2.gf, p(&[0, 1, 2, 1, 1]));
        assert_eq!(s2.cardinality(), BigInt::from(5));
        assert_eq!(alternating_gf(3).unwrap().gf, -euler(3));
        assert_eq!(alternating_gf(3).unwrap().cardinality(), BigInt::from(61));
    }

    #[test]
    fn small_salie() {
        assert_eq!(salie_perm_gf(1).unwrap().gf, IntPoly::one());
        let s2 = salie_perm_gf(2).unwrap();
        assert_eq!(s2.gf, p(&[1, 0, 1]) * p(&[1, 1, 1]));
        assert_eq!(s2.cardinality(), BigInt::from(6));
        let half_bar6 = p(&[1, 0, 1]) * p(&[1, 1, 2, 4, 6, 6, 6, 5, 4, 2, 1]);
        assert_eq!(salie_perm_gf(3).unwrap().gf, half_bar6);
        assert_eq!(
            salie_perm_gf(3).unwrap().gf.scale(&BigInt::from(2)),
            salie_bar(3)
        );
    }

    #[test]
    fn limits() {
        assert_eq!(
            alternating_gf(6),
            Err(PermError::SizeLimitExceeded { n: 6, max: 5 })
        );
        assert_eq!(
            salie_perm_gf(6),
            Err(PermError::SizeLimitExceeded { n: 6, max: 5 })
        );
        assert_eq!(alternating_gf(0), Err(PermError::Empty));
        assert!(alternating_gf_capped(7, 9).is_err());
    }

    #[test]
    fn salie_permutations_have_two_decompositions() {
        let check = |x: &[usize]| {
            let dec = salie_decompositions(x);
            if is_salie(x) {
                assert_eq!(dec.len(), 2, "{x:?}");
                assert_eq!(dec[1], dec[0] + 1);
            } else {
                assert!(dec.is_empty(), "{x:?}");
            }
            true
        };
        let all = inversion_gf(6, &|_| true, &check);
        assert_eq!(all.eval(&BigInt::from(1)), BigInt::from(720));
    }
}
