//! Dense univariate polynomials with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::BigRational;

/// Polynomial in the monomial basis; `coefficients[i]` multiplies `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyExact {
    coefficients: Vec<BigRational>,
}

impl PolyExact {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        let mut p = PolyExact { coefficients };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        PolyExact::default()
    }

    pub fn one() -> Self {
        PolyExact::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        PolyExact::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); k + 1];
        coefficients[k] = c;
        PolyExact::new(coefficients)
    }

    /// `(1 - x)^k` expanded.
    pub fn one_minus_x_pow(k: usize) -> Self {
        let base = PolyExact::new(vec![BigRational::one(), -BigRational::one()]);
        base.pow(k)
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation after rounding every coefficient to `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PolyExact::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(PolyExact::one(), |acc, _| &acc * self)
    }

    /// Largest absolute coefficient; zero for the zero polynomial.
    pub fn max_abs_coefficient(&self) -> BigRational {
        self.coefficients
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl Add for &PolyExact {
    type Output = PolyExact;
    fn add(self, rhs: &PolyExact) -> PolyExact {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        PolyExact::new((0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &PolyExact {
    type Output = PolyExact;
    fn sub(self, rhs: &PolyExact) -> PolyExact {
        self + &(-rhs)
    }
}

impl Neg for &PolyExact {
    type Output = PolyExact;
    fn neg(self) -> PolyExact {
        PolyExact::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyExact {
    type Output = PolyExact;
    fn mul(self, rhs: &PolyExact) -> PolyExact {
        if self.is_zero() || rhs.is_zero() {
            return PolyExact::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyExact::new(out)
    }
}
