//! Exact combinatorics over unbounded rationals.
//!
//! Every Gamma value needed here sits at an integer or half-integer point.
//! Half-integer values are carried as `coefficient × √π` ([`HalfGamma`]) and
//! only ratios of them are ever exposed, so `√π` cancels and all results stay
//! in [`BigRational`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

pub use num_rational::BigRational;

/// `n!` as a big integer.
pub fn factorial_int(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` exactly. Negative arguments are a domain error.
pub fn factorial(n: i64) -> Result<BigRational> {
    if n < 0 {
        return Err(domain(format!("factorial of negative integer {n}")));
    }
    Ok(BigRational::from_integer(factorial_int(n as u64)))
}

/// `C(n, k)` for nonnegative `n`; zero when `k < 0` or `k > n`.
pub fn binom_int(n: i64, k: i64) -> Result<BigRational> {
    if n < 0 {
        return Err(domain(format!("binomial with negative upper index {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigRational::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // Multiplicative form; each partial product is itself a binomial so the
    // division is exact.
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    Ok(BigRational::from_integer(acc))
}

/// `C(n + 1/2, k) = (n+1/2)(n-1/2)···(n+1/2-k+1) / k!`.
pub fn binom_half(n: u64, k: u64) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        // (n + 1/2 - j) = (2n + 1 - 2j) / 2
        num *= BigInt::from(2 * n as i64 + 1 - 2 * j as i64);
        den *= BigInt::from(2 * (j + 1));
    }
    BigRational::new(num, den)
}

/// `Γ(k + 1/2)` stored as an exact rational multiple of `√π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfGamma {
    k: u64,
    coefficient: BigRational,
}

impl HalfGamma {
    pub fn new(k: u64) -> Self {
        // Γ(k + 1/2) / √π = (2k)! / (4^k k!)
        let num = factorial_int(2 * k);
        let den = (BigInt::one() << (2 * k)) * factorial_int(k);
        HalfGamma {
            k,
            coefficient: BigRational::new(num, den),
        }
    }

    /// The `k` in `Γ(k + 1/2)`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Rational coefficient of `√π`.
    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    /// `self / other`, with `√π` cancelled.
    pub fn ratio(&self, other: &HalfGamma) -> BigRational {
        &self.coefficient / &other.coefficient
    }
}

/// Product `Π_{k=lo}^{hi} (k + 1/2)`; empty product is one.
fn half_rising(lo: u64, hi: u64) -> BigRational {
    if hi < lo {
        return BigRational::one();
    }
    let mut num = BigInt::one();
    for k in lo..=hi {
        num *= 2 * k + 1;
    }
    BigRational::new(num, BigInt::one() << (hi - lo + 1))
}

/// `Γ(a + 3/2) / Γ(b + 3/2)`.
pub fn gamma_half_ratio(a: u64, b: u64) -> BigRational {
    if a >= b {
        half_rising(b + 1, a)
    } else {
        half_rising(a + 1, b).recip()
    }
}

/// `∫₀¹ x^a (1-x)^(l-1/2) dx = Γ(l+1/2) Γ(a+1) / Γ(a+l+3/2)`.
pub fn beta_int(a: u64, l: u64) -> BigRational {
    BigRational::from_integer(factorial_int(a)) / half_rising(l, a + l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), r(1, 1));
        assert_eq!(factorial(5).unwrap(), r(120, 1));
        assert_eq!(factorial(12).unwrap(), r(479001600, 1));
        assert!(factorial(-1).is_err());
    }

    #[test]
    fn factorial_does_not_wrap() {
        let f = factorial_int(40);
        assert_eq!(
            f.to_string(),
            "815915283247897734345611269596115894272000000000"
        );
    }

    #[test]
    fn binom_int_values() {
        assert_eq!(binom_int(5, 2).unwrap(), r(10, 1));
        assert_eq!(binom_int(5, 7).unwrap(), r(0, 1));
        assert_eq!(binom_int(5, -1).unwrap(), r(0, 1));
        assert_eq!(binom_int(0, 0).unwrap(), r(1, 1));
        assert!(binom_int(-2, 1).is_err());
    }

    #[test]
    fn binom_half_values() {
        assert_eq!(binom_half(1, 0), r(1, 1));
        assert_eq!(binom_half(1, 1), r(3, 2));
        assert_eq!(binom_half(1, 2), r(3, 8));
        // (3/2)(1/2)(-1/2)/3! = -1/16
        assert_eq!(binom_half(1, 3), r(-1, 16));
    }

    #[test]
    fn half_gamma_coefficients() {
        assert_eq!(HalfGamma::new(0).coefficient(), &r(1, 1));
        assert_eq!(HalfGamma::new(1).coefficient(), &r(1, 2));
        assert_eq!(HalfGamma::new(3).coefficient(), &r(15, 8));
        assert_eq!(HalfGamma::new(3).ratio(&HalfGamma::new(1)), r(15, 4));
    }

    #[test]
    fn gamma_half_ratio_values() {
        assert_eq!(gamma_half_ratio(4, 4), r(1, 1));
        assert_eq!(gamma_half_ratio(1, 0), r(3, 2));
        assert_eq!(gamma_half_ratio(3, 1), r(35, 4));
        assert_eq!(gamma_half_ratio(1, 3), r(4, 35));
    }

    #[test]
    fn gamma_half_ratio_matches_half_gamma() {
        for a in 0..10 {
            for b in 0..10 {
                let via = HalfGamma::new(a + 1).ratio(&HalfGamma::new(b + 1));
                assert_eq!(gamma_half_ratio(a, b), via);
            }
        }
    }

    #[test]
    fn beta_int_values() {
        assert_eq!(beta_int(0, 0), r(2, 1));
        assert_eq!(beta_int(1, 0), r(4, 3));
        assert_eq!(beta_int(0, 1), r(2, 3));
    }

    #[test]
    fn binom_int_matches_factorials() {
        for n in 0..=30i64 {
            for k in 0..=n {
                let expect = factorial(n).unwrap()
                    / (factorial(k).unwrap() * factorial(n - k).unwrap());
                assert_eq!(binom_int(n, k).unwrap(), expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn gamma_half_ratio_reciprocal() {
        for a in 0..=40 {
            for b in 0..=40 {
                assert!((gamma_half_ratio(a, b) * gamma_half_ratio(b, a)).is_one());
            }
        }
    }

    #[test]
    fn beta_int_contiguous_relation() {
        for a in 0..=20u64 {
            for l in 0..=20u64 {
                let lhs = BigRational::from_integer((2 * (a + 1)).into()) * beta_int(a, l);
                let rhs = BigRational::from_integer((2 * a + 2 * l + 3).into()) * beta_int(a + 1, l);
                assert_eq!(lhs, rhs, "a={a} l={l}");
            }
        }
    }

    proptest! {
        #[test]
        fn binom_half_pascal(n in 0u64..25, k in 1u64..25) {
            // C(n+1/2, k) = C(n-1/2, k) + C(n-1/2, k-1), shifted to stay at n >= 1
            let n = n + 1;
            prop_assert_eq!(binom_half(n, k), binom_half(n - 1, k) + binom_half(n - 1, k - 1));
        }
    }
}
