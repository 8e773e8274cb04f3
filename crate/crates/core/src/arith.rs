//! Small integer helpers.

use num_bigint::BigInt;
use num_traits::One;

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1, "divisors of zero are not defined here");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Splits `n >= 1` as `2^s * odd`, returning `(s, odd)`.
pub fn two_adic_split(n: usize) -> (u32, usize) {
    assert!(n >= 1);
    let s = n.trailing_zeros();
    (s, n >> s)
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Zigzag (up/down) numbers `A_0..A_{len-1}` from the Entringer triangle
/// `e(n, k) = e(n, k-1) + e(n-1, n-k)`, `A_n = e(n, n)`:
/// `1, 1, 1, 2, 5, 16, 61, 272, ...`. Even indices are the secant numbers,
/// odd indices the tangent numbers.
pub fn zigzag_numbers(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut row = vec![BigInt::one()];
    for n in 0..len {
        if n > 0 {
            let mut next = vec![BigInt::from(0)];
            for k in 1..=n {
                let v = &next[k - 1] + &row[n - k];
                next.push(v);
            }
            row = next;
        }
        out.push(row[n].clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn two_adic() {
        assert_eq!(two_adic_split(1), (0, 1));
        assert_eq!(two_adic_split(12), (2, 3));
        assert_eq!(two_adic_split(8), (3, 1));
    }

    #[test]
    fn zigzag() {
        let expect = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
        assert_eq!(zigzag_numbers(11), expect.map(BigInt::from));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
