//! The `ξ ↔ ζ` parameter map and closed-form squeeze-operator matrix elements
//! between odd Fock states.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::One;

use crate::error::{domain, Result};
use crate::exact::{factorial_int, gamma_half_ratio, BigRational};
use crate::ortho::{jacobi_recurrence, JacobiParams};
use crate::poly::PolyExact;

fn normalize_phase(phase: f64) -> f64 {
    let p = phase.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if p >= TAU {
        0.0
    } else {
        p
    }
}

/// `ξ = |ξ| e^{-iφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParam {
    xi_modulus: f64,
    phase: f64,
}

impl SqueezeParam {
    pub fn new(xi_modulus: f64, phase: f64) -> Result<Self> {
        if !(xi_modulus >= 0.0 && xi_modulus.is_finite()) || !phase.is_finite() {
            return Err(domain(format!("invalid squeeze parameter |xi|={xi_modulus}, phi={phase}")));
        }
        Ok(SqueezeParam {
            xi_modulus,
            phase: normalize_phase(phase),
        })
    }

    pub fn xi_modulus(&self) -> f64 {
        self.xi_modulus
    }

    /// `φ` in `[0, 2π)`.
    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// `ξ` as a complex number.
    pub fn xi(&self) -> Complex64 {
        Complex64::from_polar(self.xi_modulus, -self.phase)
    }
}

/// A point `ζ = |ζ| e^{-iφ}` of the open unit disc.
///
/// The complements `1 - |ζ|` and `1 - |ζ|²` are stored separately so that
/// points squeezed far enough for `|ζ|` to round to one keep an accurate
/// distance to the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPoint {
    zeta_modulus: f64,
    phase: f64,
    x: f64,
    one_minus_modulus: f64,
    one_minus_x: f64,
}

impl ZetaPoint {
    pub fn new(zeta_modulus: f64, phase: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&zeta_modulus) || !phase.is_finite() {
            return Err(domain(format!(
                "zeta point must lie in the open unit disc, got |zeta|={zeta_modulus}"
            )));
        }
        let one_minus_modulus = 1.0 - zeta_modulus;
        Ok(ZetaPoint {
            zeta_modulus,
            phase: normalize_phase(phase),
            x: zeta_modulus * zeta_modulus,
            one_minus_modulus,
            one_minus_x: one_minus_modulus * (1.0 + zeta_modulus),
        })
    }

    /// Point with `|ζ|² = x`.
    pub fn from_x(x: f64, phase: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&x) {
            return Err(domain(format!("x = |zeta|^2 must lie in [0, 1), got {x}")));
        }
        let mut z = ZetaPoint::new(x.sqrt(), phase)?;
        z.x = x;
        z.one_minus_x = 1.0 - x;
        Ok(z)
    }

    pub fn zeta_modulus(&self) -> f64 {
        self.zeta_modulus
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// `x = |ζ|²`.
    pub fn x(&self) -> f64 {
        self.x
    }

    /// `1 - |ζ|`, accurate even when `|ζ|` rounds to one.
    pub fn one_minus_modulus(&self) -> f64 {
        self.one_minus_modulus
    }

    /// `1 - |ζ|²`.
    pub fn one_minus_x(&self) -> f64 {
        self.one_minus_x
    }
}

/// `|ζ| = tanh|ξ|`, phase carried over unchanged.
pub fn zeta_from_xi(p: &SqueezeParam) -> ZetaPoint {
    let r = p.xi_modulus;
    // 1 - tanh r = 2e^{-2r} / (1 + e^{-2r}); 1 - tanh² r = sech² r
    let e = (-2.0 * r).exp();
    let one_minus_modulus = 2.0 * e / (1.0 + e);
    let sech = 2.0 * (-r).exp() / (1.0 + e);
    let modulus = r.tanh().min(1.0 - f64::EPSILON / 2.0);
    ZetaPoint {
        zeta_modulus: modulus,
        phase: p.phase,
        x: modulus * modulus,
        one_minus_modulus,
        one_minus_x: sech * sech,
    }
}

/// `Π_{k=lo+1}^{hi} (k + 1/2)/k = Γ(lo+1) Γ(hi+3/2) / (Γ(hi+1) Γ(lo+3/2))`.
fn gamma_prefactor_f64(lo: u64, hi: u64) -> f64 {
    (lo + 1..=hi).fold(1.0, |acc, k| acc * (k as f64 + 0.5) / k as f64)
}

/// The `m ≥ n` closed form:
/// `e^{-i(m-n)φ} √(Γ(n+1)Γ(m+3/2)/(Γ(m+1)Γ(n+3/2))) |ζ|^{m-n} (1-|ζ|²)^{3/4} P_n^(m-n,1/2)(1-2|ζ|²)`.
pub fn overlap_upper_branch(m: u64, n: u64, z: &ZetaPoint) -> Complex64 {
    debug_assert!(m >= n);
    let d = m - n;
    let magnitude = gamma_prefactor_f64(n, m).sqrt()
        * z.zeta_modulus.powi(d as i32)
        * z.one_minus_x.powf(0.75)
        * jacobi_recurrence(n, d as f64, 0.5, 1.0 - 2.0 * z.x);
    Complex64::from_polar(1.0, -(d as f64) * z.phase) * magnitude
}

/// The `m ≤ n` closed form:
/// `e^{+i(n-m)φ} √(Γ(m+1)Γ(n+3/2)/(Γ(n+1)Γ(m+3/2))) (-|ζ|)^{n-m} (1-|ζ|²)^{3/4} P_m^(n-m,1/2)(1-2|ζ|²)`.
///
/// The phase exponent is `+i(n-m)φ`, i.e. the same `e^{-i(m-n)φ}` as the
/// upper branch; this is what `D(ξ)† = D(-ξ)` and the operator oracle give.
pub fn overlap_lower_branch(m: u64, n: u64, z: &ZetaPoint) -> Complex64 {
    debug_assert!(m <= n);
    let d = n - m;
    let sign = if d % 2 == 1 { -1.0 } else { 1.0 };
    let magnitude = sign
        * gamma_prefactor_f64(m, n).sqrt()
        * z.zeta_modulus.powi(d as i32)
        * z.one_minus_x.powf(0.75)
        * jacobi_recurrence(m, d as f64, 0.5, 1.0 - 2.0 * z.x);
    Complex64::from_polar(1.0, d as f64 * z.phase) * magnitude
}

/// `⟨2m+1 | D(ξ) | 2n+1⟩` at the disc point `ζ`.
pub fn overlap_value(m: u64, n: u64, z: &ZetaPoint) -> Complex64 {
    if z.zeta_modulus == 0.0 {
        return if m == n { Complex64::one() } else { Complex64::new(0.0, 0.0) };
    }
    if m >= n {
        overlap_upper_branch(m, n, z)
    } else {
        overlap_lower_branch(m, n, z)
    }
}

/// `|⟨2m+1|ζ;2n+1⟩|² = prefactor · x^{x_power} · (1-x)^{3/2} · poly(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquaredOverlapForm {
    pub prefactor: BigRational,
    pub x_power: u64,
    /// `[P_min(m,n)^(|m-n|,1/2)(1-2x)]²` expanded in powers of `x`.
    pub poly: PolyExact,
}

impl SquaredOverlapForm {
    /// Evaluate the full squared magnitude, including `(1-x)^{3/2}`.
    ///
    /// The polynomial part is evaluated exactly at the rational value of `x`
    /// (its expanded coefficients alternate in sign) and rounded once.
    pub fn eval(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let poly = match BigRational::from_float(x) {
            Some(q) => (&self.prefactor * self.poly.eval(&q)).to_f64().unwrap_or(f64::NAN),
            None => f64::NAN,
        };
        poly * x.powi(self.x_power as i32) * (1.0 - x).powf(1.5)
    }
}

pub fn overlap_sq_form(m: u64, n: u64) -> SquaredOverlapForm {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    let prefactor = BigRational::new(factorial_int(lo), factorial_int(hi)) * gamma_half_ratio(hi, lo);
    let jacobi = JacobiParams { n: lo, alpha: hi - lo }.poly_gamma_form();
    SquaredOverlapForm {
        prefactor,
        x_power: hi - lo,
        poly: &jacobi * &jacobi,
    }
}

/// `Σ_{m=0}^{m_max} |⟨2m+1|ζ;2n+1⟩|²`.
pub fn unitarity_column_sum(n: u64, z: &ZetaPoint, m_max: u64) -> Result<f64> {
    if m_max < n {
        return Err(domain(format!("m_max = {m_max} must be at least n = {n}")));
    }
    Ok((0..=m_max).map(|m| overlap_value(m, n, z).norm_sqr()).sum())
}

/// Column sum with `m_max` doubled from `⌈4(n+1)/(1-|ζ|²)⌉` until the
/// partial sum moves by less than `tol/10`. Returns the sum and final `m_max`.
pub fn unitarity_column_sum_adaptive(n: u64, z: &ZetaPoint, tol: f64) -> Result<(f64, u64)> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    const M_MAX_CEILING: u64 = 1 << 22;
    let mut m_max = ((4.0 * (n + 1) as f64 / z.one_minus_x).ceil() as u64).max(n);
    let mut sum = unitarity_column_sum(n, z, m_max)?;
    loop {
        let next_max = 2 * m_max;
        let tail: f64 = (m_max + 1..=next_max).map(|m| overlap_value(m, n, z).norm_sqr()).sum();
        let next = sum + tail;
        if (next - sum).abs() < tol / 10.0 {
            return Ok((next, next_max));
        }
        if next_max > M_MAX_CEILING {
            return Err(crate::Error::Numerical(format!(
                "unitarity sum for n={n} did not settle below m_max={next_max}"
            )));
        }
        sum = next;
        m_max = next_max;
    }
}
