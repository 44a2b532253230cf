//! Embedded reference sequences.
//!
//! The checks in [`crate::verify`] compare table entries against these
//! independently computed values. Prefixes are frozen literals; the closed
//! forms and recurrences below must reproduce them (tested).

use num::{BigInt, Zero};

use crate::rational::{binomial, int};

/// First terms of A000108 (Catalan numbers).
pub const CATALAN_PREFIX: [i64; 15] = [
    1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440,
];

/// First terms of A001006 (Motzkin numbers).
pub const MOTZKIN_PREFIX: [i64; 15] = [
    1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
];

/// First terms of A001764 (ternary-tree counts `binom(3n,n)/(2n+1)`).
pub const TERNARY_PREFIX: [i64; 12] = [
    1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715, 8414640,
];

/// `n`th Catalan number `binom(2n, n) / (n + 1)`; the division is exact.
pub fn catalan(n: i64) -> BigInt {
    binomial(2 * n, n) / int(n + 1)
}

/// `n`th term of A001764: `binom(3n, n) / (2n + 1)`; the division is exact.
pub fn ternary(n: i64) -> BigInt {
    binomial(3 * n, n) / int(2 * n + 1)
}

/// First `count` Motzkin numbers by the standard recurrence
/// `M_{n+1} = M_n + sum_{k=0}^{n-1} M_k * M_{n-1-k}`.
pub fn motzkin(count: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        if n == 0 {
            m.push(int(1));
            continue;
        }
        let mut next = m[n - 1].clone();
        let mut conv = BigInt::zero();
        for k in 0..n.saturating_sub(1) {
            conv += &m[k] * &m[n - 2 - k];
        }
        next += conv;
        m.push(next);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_closed_form_matches_prefix() {
        for (n, &expected) in CATALAN_PREFIX.iter().enumerate() {
            assert_eq!(catalan(n as i64), int(expected));
        }
    }

    #[test]
    fn motzkin_recurrence_matches_prefix() {
        let m = motzkin(MOTZKIN_PREFIX.len());
        for (n, &expected) in MOTZKIN_PREFIX.iter().enumerate() {
            assert_eq!(m[n], int(expected), "M_{n}");
        }
    }

    #[test]
    fn ternary_closed_form_matches_prefix() {
        for (n, &expected) in TERNARY_PREFIX.iter().enumerate() {
            assert_eq!(ternary(n as i64), int(expected));
        }
    }
}
