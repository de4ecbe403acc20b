//! Jacobi polynomials in the `β = 1/2` family, Gegenbauer and associated
//! Legendre polynomials, and the two relations expressing the former through
//! the latter two.
//!
//! The exact forms take the variable `x = |ζ|²` directly and evaluate
//! `P_n^(α,1/2)(1 - 2x)`; the floating-point routines take the Jacobi
//! argument `y` itself.
//!
//! # Associated Legendre convention
//!
//! [`assoc_legendre`] returns `P_l^μ(x) = (1-x²)^(μ/2) d^μ/dx^μ P_l(x)`,
//! **without** the Condon–Shortley phase `(-1)^μ`. With that phase included
//! the Legendre relation picks up a spurious `(-1)^α` for odd `α`; see
//! [`assoc_legendre_condon_shortley`] for the phased variant.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::exact::{binom_half, binom_int, factorial_int, gamma_half_ratio, BigRational, HalfGamma};
use crate::poly::PolyExact;

/// Degree and first index of `P_n^(α, 1/2)`, with `α = p - n` in the
/// completeness integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    pub n: u64,
    pub alpha: u64,
}

impl JacobiParams {
    pub fn try_new(n: i64, alpha: i64) -> Result<Self> {
        if n < 0 || alpha < 0 {
            return Err(domain(format!(
                "Jacobi parameters must be nonnegative (n={n}, alpha={alpha})"
            )));
        }
        Ok(JacobiParams {
            n: n as u64,
            alpha: alpha as u64,
        })
    }

    /// The upper binomial index `p = α + n`.
    pub fn p(&self) -> u64 {
        self.alpha + self.n
    }

    /// Monomial expansion in `x` built from the binomial-sum form
    /// `Σ_l C(p,l) C(n+1/2, n-l) (-1)^(n-l) x^(n-l) (1-x)^l`.
    pub fn poly_binomial_form(&self) -> PolyExact {
        let (n, p) = (self.n, self.p());
        let mut acc = PolyExact::zero();
        for l in 0..=n {
            let mut c = binom_int(p as i64, l as i64).expect("p >= 0") * binom_half(n, n - l);
            if (n - l) % 2 == 1 {
                c = -c;
            }
            let term = &PolyExact::monomial(c, (n - l) as usize) * &PolyExact::one_minus_x_pow(l as usize);
            acc = &acc + &term;
        }
        acc
    }

    /// Monomial expansion from the Gamma-ratio form
    /// `p!/(n! Γ(p+3/2)) Σ_m (-1)^m C(n,m) Γ(p+m+3/2)/(p-n+m)! x^m`.
    pub fn poly_gamma_form(&self) -> PolyExact {
        PolyExact::new((0..=self.n).map(|m| self.gamma_form_coefficient(m)).collect())
    }

    fn gamma_form_coefficient(&self, m: u64) -> BigRational {
        let (n, p) = (self.n, self.p());
        let lead = BigRational::new(factorial_int(p), factorial_int(n));
        let mut c = lead
            * binom_int(n as i64, m as i64).expect("n >= 0")
            * gamma_half_ratio(p + m, p)
            / BigRational::from_integer(factorial_int(p - n + m));
        if m % 2 == 1 {
            c = -c;
        }
        c
    }
}

/// `P_n^(α,1/2)(1 - 2x)` through the binomial-sum form, evaluated exactly.
pub fn jacobi_sum_a(n: i64, alpha: i64, x: &BigRational) -> Result<BigRational> {
    let jp = JacobiParams::try_new(n, alpha)?;
    let (n, p) = (jp.n, jp.p());
    let one_minus_x = BigRational::one() - x;
    let mut acc = BigRational::zero();
    for l in 0..=n {
        let mut term = binom_int(p as i64, l as i64)?
            * binom_half(n, n - l)
            * pow(x, n - l)
            * pow(&one_minus_x, l);
        if (n - l) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    Ok(acc)
}

/// `P_n^(α,1/2)(1 - 2x)` through the Gamma-ratio form, evaluated exactly.
pub fn jacobi_sum_b(n: i64, alpha: i64, x: &BigRational) -> Result<BigRational> {
    let jp = JacobiParams::try_new(n, alpha)?;
    let mut acc = BigRational::zero();
    for m in 0..=jp.n {
        acc += jp.gamma_form_coefficient(m) * pow(x, m);
    }
    Ok(acc)
}

fn pow(x: &BigRational, k: u64) -> BigRational {
    if x.is_zero() && k == 0 {
        return BigRational::one();
    }
    num_traits::pow(x.clone(), k as usize)
}

/// `P_n^(α,β)(y)` by the standard three-term recurrence.
pub fn jacobi_recurrence(n: u64, alpha: f64, beta: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut prev = 1.0;
    let mut cur = (alpha - beta) / 2.0 + (ab + 2.0) / 2.0 * y;
    for k in 1..n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let a1 = 2.0 * (k + 1.0) * (k + ab + 1.0) * c;
        let a2 = (c + 1.0) * (alpha * alpha - beta * beta);
        let a3 = c * (c + 1.0) * (c + 2.0);
        let a4 = 2.0 * (k + alpha) * (k + beta) * (c + 2.0);
        let next = ((a2 + a3 * y) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dy P_n^(α,β)(y) = (n+α+β+1)/2 · P_{n-1}^(α+1,β+1)(y)`.
pub fn jacobi_derivative(n: u64, alpha: f64, beta: f64, y: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    0.5 * (n as f64 + alpha + beta + 1.0) * jacobi_recurrence(n - 1, alpha + 1.0, beta + 1.0, y)
}

/// Gegenbauer `C_ν^(λ)(t)` by recurrence.
pub fn gegenbauer(nu: u64, lambda: f64, t: f64) -> f64 {
    if nu == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * t;
    for k in 1..nu {
        let k = k as f64;
        let next = (2.0 * t * (k + lambda) * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Legendre `P_l^μ(x)` without the Condon–Shortley phase.
pub fn assoc_legendre(l: u64, mu: u64, x: f64) -> Result<f64> {
    if mu > l {
        return Err(domain(format!("associated Legendre order {mu} exceeds degree {l}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(domain(format!("associated Legendre argument {x} outside [-1, 1]")));
    }
    let s2 = (1.0 - x) * (1.0 + x);
    // P_μ^μ = (2μ-1)!! (1-x²)^(μ/2)
    let mut pmm = 1.0;
    for k in 1..=mu {
        pmm *= (2 * k - 1) as f64;
    }
    pmm *= s2.powf(mu as f64 / 2.0);
    if l == mu {
        return Ok(pmm);
    }
    let mut prev = pmm;
    let mut cur = x * (2 * mu + 1) as f64 * pmm;
    for k in (mu + 2)..=l {
        let next = ((2 * k - 1) as f64 * x * cur - (k + mu - 1) as f64 * prev) / (k - mu) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `(-1)^μ P_l^μ(x)`, the Condon–Shortley phased variant.
pub fn assoc_legendre_condon_shortley(l: u64, mu: u64, x: f64) -> Result<f64> {
    let v = assoc_legendre(l, mu, x)?;
    Ok(if mu % 2 == 1 { -v } else { v })
}

/// `Γ(n+3/2) Γ(α+1/2) / (Γ(1/2) Γ(α+n+3/2))`, exact.
pub fn gegenbauer_relation_factor(n: u64, alpha: u64) -> BigRational {
    gamma_half_ratio(n, alpha + n) * HalfGamma::new(alpha).coefficient()
}

/// Both sides of
/// `P_n^(α,1/2)(x) = c · C_{2n+1}^(α+1/2)(t) / t`, `t = √((1+x)/2)`.
pub fn relation_gegenbauer(n: u64, alpha: u64, x: f64) -> Result<(f64, f64)> {
    if !(x > -1.0 && x <= 1.0) {
        return Err(domain(format!("Gegenbauer relation needs x in (-1, 1], got {x}")));
    }
    let lhs = jacobi_recurrence(n, alpha as f64, 0.5, x);
    let t = ((1.0 + x) / 2.0).sqrt();
    let c = gegenbauer_relation_factor(n, alpha).to_f64().unwrap_or(f64::NAN);
    let rhs = c * gegenbauer(2 * n + 1, alpha as f64 + 0.5, t) / t;
    Ok((lhs, rhs))
}

/// Both sides of
/// `P_n^(α,1/2)(x) = 2^(-α) Γ(n+3/2)/Γ(α+n+3/2) · ((1-x)/2)^(-α/2) / t · P_{2n+α+1}^α(t)`.
pub fn relation_legendre(n: u64, alpha: u64, x: f64) -> Result<(f64, f64)> {
    if !(x > -1.0 && x <= 1.0) {
        return Err(domain(format!("Legendre relation needs x in (-1, 1], got {x}")));
    }
    if alpha > 0 && x >= 1.0 {
        return Err(domain("Legendre relation is singular at x = 1 for alpha > 0"));
    }
    let lhs = jacobi_recurrence(n, alpha as f64, 0.5, x);
    let t = ((1.0 + x) / 2.0).sqrt();
    let c = BigRational::new(BigInt::one(), BigInt::one() << alpha) * gamma_half_ratio(n, alpha + n);
    let c = c.to_f64().unwrap_or(f64::NAN);
    let singular = ((1.0 - x) / 2.0).powf(-(alpha as f64) / 2.0);
    let rhs = c * singular / t * assoc_legendre(2 * n + alpha + 1, alpha, t)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sum_a_examples() {
        for x in [r(0, 1), r(1, 3), r(1, 1)] {
            assert_eq!(jacobi_sum_a(0, 5, &x).unwrap(), r(1, 1));
        }
        assert_eq!(jacobi_sum_a(1, 1, &r(0, 1)).unwrap(), r(2, 1));
        assert_eq!(jacobi_sum_a(1, 1, &r(1, 1)).unwrap(), r(-3, 2));
        assert!(jacobi_sum_a(-1, 0, &r(0, 1)).is_err());
        assert!(jacobi_sum_a(0, -1, &r(0, 1)).is_err());
    }

    #[test]
    fn sum_b_examples() {
        assert_eq!(jacobi_sum_b(0, 0, &r(1, 2)).unwrap(), r(1, 1));
        assert_eq!(jacobi_sum_b(1, 1, &r(0, 1)).unwrap(), r(2, 1));
        assert_eq!(jacobi_sum_b(1, 1, &r(1, 2)).unwrap(), r(1, 4));
        assert!(jacobi_sum_b(2, -3, &r(0, 1)).is_err());
    }

    #[test]
    fn expanded_linear_case() {
        // P_1^(1,1/2)(1-2x) = 2 - (7/2) x
        let jp = JacobiParams::try_new(1, 1).unwrap();
        let expect = PolyExact::new(vec![r(2, 1), r(-7, 2)]);
        assert_eq!(jp.poly_binomial_form(), expect);
        assert_eq!(jp.poly_gamma_form(), expect);
    }

    #[test]
    fn value_at_argument_one_is_binomial() {
        // P_n^(α,β)(1) = C(n+α, n)
        for n in 0..8i64 {
            for alpha in 0..8i64 {
                let v = jacobi_sum_a(n, alpha, &r(0, 1)).unwrap();
                assert_eq!(v, binom_int(n + alpha, n).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(jacobi_recurrence(0, 3.0, 0.5, 0.2), 1.0);
        assert!((jacobi_recurrence(1, 1.0, 0.5, 1.0) - 2.0).abs() < 1e-15);
        assert!((jacobi_recurrence(1, 1.0, 0.5, -1.0) + 1.5).abs() < 1e-15);
    }

    #[test]
    fn recurrence_matches_legendre() {
        // P_n^(0,0) = P_n; P_3(y) = (5y³ - 3y)/2
        let y: f64 = 0.37;
        let p3 = (5.0 * y.powi(3) - 3.0 * y) / 2.0;
        assert!((jacobi_recurrence(3, 0.0, 0.0, y) - p3).abs() < 1e-15);
    }

    #[test]
    fn derivative_by_finite_difference() {
        let (n, a, b, y) = (6, 2.0, 0.5, 0.3);
        let h = 1e-5;
        let fd = (jacobi_recurrence(n, a, b, y + h) - jacobi_recurrence(n, a, b, y - h)) / (2.0 * h);
        assert!((jacobi_derivative(n, a, b, y) - fd).abs() < 1e-6 * fd.abs().max(1.0));
    }

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer(0, 2.5, 0.3), 1.0);
        assert!((gegenbauer(1, 1.5, 0.5) - 1.5).abs() < 1e-15);
        assert!((gegenbauer(3, 0.5, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gegenbauer_odd_parity() {
        for n in 0..10u64 {
            for lambda in [0.5, 1.5, 4.5, 8.5] {
                for t in [0.1, 0.33, 0.7, 0.95] {
                    let a = gegenbauer(2 * n + 1, lambda, t);
                    let b = gegenbauer(2 * n + 1, lambda, -t);
                    assert!((a + b).abs() <= 1e-12 * a.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn assoc_legendre_examples() {
        for x in [0.0, 0.4, 1.0] {
            assert_eq!(assoc_legendre(1, 0, x).unwrap(), x);
        }
        let expect = 3.0 * 0.5 * (1.0f64 - 0.25).sqrt();
        assert!((assoc_legendre(2, 1, 0.5).unwrap() - expect).abs() < 1e-15);
        assert!((assoc_legendre_condon_shortley(2, 1, 0.5).unwrap() + 1.299038105676658).abs() < 1e-12);
        assert!((assoc_legendre(2, 2, 0.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(assoc_legendre(1, 2, 0.5).is_err());
    }

    #[test]
    fn relation_gegenbauer_examples() {
        let (l, r_) = relation_gegenbauer(0, 0, 1.0).unwrap();
        assert!((l - 1.0).abs() < 1e-15 && (r_ - 1.0).abs() < 1e-15);
        let (l, r_) = relation_gegenbauer(1, 1, 0.0).unwrap();
        assert!((l - 0.25).abs() < 1e-15 && (r_ - 0.25).abs() < 1e-14);
        let (l, r_) = relation_gegenbauer(2, 3, 0.3).unwrap();
        assert!((l - r_).abs() <= 1e-12);
        assert!(relation_gegenbauer(1, 1, -1.0).is_err());
    }

    #[test]
    fn relation_legendre_examples() {
        let (l, r_) = relation_legendre(0, 0, 0.0).unwrap();
        assert!((l - 1.0).abs() < 1e-15 && (r_ - 1.0).abs() < 1e-14);
        for (n, alpha) in [(1, 0), (1, 2), (1, 1), (3, 5)] {
            let (l, r_) = relation_legendre(n, alpha, 0.5).unwrap();
            assert!((l - r_).abs() <= 1e-12 * l.abs().max(1.0), "n={n} alpha={alpha}");
        }
        assert!(relation_legendre(1, 1, 1.0).is_err());
        assert!(relation_legendre(1, 0, 1.0).is_ok());
    }

    #[test]
    fn condon_shortley_breaks_legendre_relation_for_odd_order() {
        let (n, alpha, x) = (1u64, 1u64, 0.5);
        let (lhs, rhs) = relation_legendre(n, alpha, x).unwrap();
        let flipped = -rhs;
        assert!((lhs - rhs).abs() < 1e-12);
        assert!((lhs - flipped).abs() > 0.1);
    }
}
