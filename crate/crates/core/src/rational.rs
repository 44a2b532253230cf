//! Helpers for the concrete exact scalar: construction, parsing, binomials.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

/// `n` as a big integer.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `n` as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(int(n))
}

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(int(num), int(den))
}

/// Parse `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Binomial coefficient `C(n, k)` with the usual conventions:
/// zero for `k < 0`, `k > n`, or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * int(n - k + i) / int(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(8, 5), int(56));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(-2, 0), int(0));
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 1..30 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal rule at ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-5/2").unwrap(), ratio(-5, 2));
        assert_eq!(parse_rational(" 1/3 ").unwrap(), ratio(1, 3));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rationals_reduce_to_lowest_terms() {
        assert_eq!(ratio(4, 8), ratio(1, 2));
        assert_eq!(ratio(-6, -3), rat(2));
        assert_eq!(ratio(6, -4), ratio(-3, 2));
    }
}
