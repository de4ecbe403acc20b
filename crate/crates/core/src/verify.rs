//! The radial integral
//!
//! ```text
//! I(p,n) = ½ · Γ(n+1)Γ(p+3/2)/(Γ(p+1)Γ(n+3/2)) · ∫₀¹ x^{p-n} [P_n^(p-n,1/2)(1-2x)]² (1-x)^{-1/2} dx,   p ≥ n
//! ```
//!
//! whose value being one for every `p ≥ n` is exactly the statement that the
//! squeezed odd-number states resolve the identity on the odd sector.
//!
//! Two exact routes are provided: the double sum whose inner alternating
//! factorial sum collapses to `δ_{l0}` ([`ExactPath::Racah`]), and direct
//! term-by-term Beta integration of the expanded squared overlap
//! ([`ExactPath::BetaExpansion`]). [`i_pn_quadrature`] is the floating-point
//! companion.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{beta_int, binom_int, factorial_int, gamma_half_ratio, BigRational, HalfGamma};
use crate::operator::{squeeze_matrix, truncation_dim};
use crate::ortho::{assoc_legendre, gegenbauer, jacobi_recurrence};
use crate::poly::PolyExact;
use crate::overlaps::{overlap_sq_form, zeta_from_xi, SqueezeParam};
use crate::quadrature::{tanh_sinh, GaussRule, QuadratureKind, QuadratureSpec};
use crate::record::{params, Value, VerificationRecord};

fn check_order(p: i64, n: i64) -> Result<(u64, u64)> {
    if n < 0 || n > p {
        return Err(domain(format!("need 0 <= n <= p, got p={p}, n={n}")));
    }
    Ok((p as u64, n as u64))
}

/// `Σ_{m=0}^{n} (-1)^m (p+n-l-m)! / (m! (n-m)! (p-m)!)`.
///
/// Equals one for `l = 0` and vanishes for `1 <= l <= n`; the value is
/// computed, not assumed.
pub fn racah_inner_sum(p: i64, n: i64, l: i64) -> Result<BigRational> {
    if l < 0 || l > n || n > p {
        return Err(domain(format!("need 0 <= l <= n <= p, got p={p}, n={n}, l={l}")));
    }
    let (p, n, l) = (p as u64, n as u64, l as u64);
    let mut acc = BigRational::zero();
    for m in 0..=n {
        let den = factorial_int(m) * factorial_int(n - m) * factorial_int(p - m);
        let term = BigRational::new(factorial_int(p + n - l - m), den);
        if m % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactPath {
    /// `½ n! p! Σ_l (-1)^l Γ(l+1/2) / (l!(p-l)!(n-l)!Γ(l+3/2)) · racah_inner_sum(p,n,l)`.
    Racah,
    /// `½ · prefactor · Σ_i c_i · B(x_power + i, 1/2)` over the expanded squared overlap.
    BetaExpansion,
}

/// `I(p,n)` exactly, along the Racah route.
pub fn i_pn_exact(p: i64, n: i64) -> Result<BigRational> {
    i_pn_exact_via(p, n, ExactPath::Racah)
}

pub fn i_pn_exact_via(p: i64, n: i64, path: ExactPath) -> Result<BigRational> {
    let (pu, nu) = check_order(p, n)?;
    match path {
        ExactPath::Racah => {
            let mut sum = BigRational::zero();
            for l in 0..=nu {
                let gamma = HalfGamma::new(l).ratio(&HalfGamma::new(l + 1));
                let den = factorial_int(l) * factorial_int(pu - l) * factorial_int(nu - l);
                let mut term = gamma / BigRational::from_integer(den) * racah_inner_sum(p, n, l as i64)?;
                if l % 2 == 1 {
                    term = -term;
                }
                sum += term;
            }
            let outer = BigRational::new(factorial_int(nu) * factorial_int(pu), BigInt::from(2));
            Ok(outer * sum)
        }
        ExactPath::BetaExpansion => {
            let form = overlap_sq_form(pu, nu);
            let integral = form
                .poly
                .coefficients()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, c)| acc + c * beta_int(form.x_power + i as u64, 0));
            Ok(form.prefactor * integral / BigRational::from_integer(BigInt::from(2)))
        }
    }
}

/// `Γ(n+1)Γ(p+3/2) / (Γ(p+1)Γ(n+3/2))`.
fn overlap_prefactor(p: u64, n: u64) -> BigRational {
    BigRational::new(factorial_int(n), factorial_int(p)) * gamma_half_ratio(p, n)
}

/// Minimum Gauss–Jacobi node count that integrates `I(p,n)` exactly.
pub fn exact_gauss_jacobi_nodes(p: u64, n: u64) -> usize {
    ((p + n) / 2 + 1) as usize
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureValue {
    pub value: f64,
    /// Set when the rule is known not to be exact (too few Gauss nodes) or
    /// tanh-sinh refinement stopped before reaching its tolerance.
    pub underresolved: bool,
    pub nodes: usize,
}

/// `I(p,n)` by quadrature. Gauss–Legendre is rejected because of the
/// `(1-x)^{-1/2}` endpoint singularity.
pub fn i_pn_quadrature(p: i64, n: i64, spec: &QuadratureSpec) -> Result<QuadratureValue> {
    let (pu, nu) = check_order(p, n)?;
    spec.validate()?;
    let alpha = (pu - nu) as f64;
    let polynomial_part = |x: f64| {
        let j = jacobi_recurrence(nu, alpha, 0.5, 1.0 - 2.0 * x);
        x.powi((pu - nu) as i32) * j * j
    };
    let half_prefactor = overlap_prefactor(pu, nu).to_f64().unwrap_or(f64::NAN) / 2.0;
    match spec.kind {
        QuadratureKind::GaussJacobi => {
            let rule = GaussRule::unit_inverse_sqrt(spec.node_count)?;
            Ok(QuadratureValue {
                value: half_prefactor * rule.integrate(polynomial_part),
                underresolved: spec.node_count < exact_gauss_jacobi_nodes(pu, nu),
                nodes: spec.node_count,
            })
        }
        QuadratureKind::TanhSinh => {
            let r = tanh_sinh(|x, xc| polynomial_part(x) / xc.sqrt(), spec.target_tol)?;
            Ok(QuadratureValue {
                value: half_prefactor * r.value,
                underresolved: !r.converged,
                nodes: 0,
            })
        }
        QuadratureKind::GaussLegendre => Err(Error::InvalidSpec(
            "Gauss-Legendre cannot resolve the (1-x)^(-1/2) endpoint singularity; use gauss-jacobi or tanh-sinh"
                .into(),
        )),
    }
}

/// `p!Γ(p+3/2) / (n!Γ(n+3/2)) · [Γ(1/2)/Γ(p-n+1/2)]²`.
pub fn gegenbauer_identity_rhs(p: u64, n: u64) -> BigRational {
    let inv = HalfGamma::new(0).ratio(&HalfGamma::new(p - n));
    BigRational::new(factorial_int(p), factorial_int(n)) * gamma_half_ratio(p, n) * &inv * &inv
}

/// `(2p+1)! / (2n+1)!`.
pub fn legendre_identity_rhs(p: u64, n: u64) -> BigRational {
    BigRational::new(factorial_int(2 * p + 1), factorial_int(2 * n + 1))
}

fn integrate_even_polynomial(spec: &QuadratureSpec, f: impl Fn(f64) -> f64) -> Result<(f64, bool, usize)> {
    spec.validate()?;
    match spec.kind {
        QuadratureKind::GaussLegendre => {
            let rule = GaussRule::unit_legendre(spec.node_count)?;
            Ok((rule.integrate(f), false, spec.node_count))
        }
        QuadratureKind::TanhSinh => {
            let r = tanh_sinh(|x, _| f(x), spec.target_tol)?;
            Ok((r.value, !r.converged, 0))
        }
        QuadratureKind::GaussJacobi => Err(Error::InvalidSpec(
            "identity integrands carry no (1-x)^(-1/2) weight; use gauss-legendre or tanh-sinh".into(),
        )),
    }
}

fn identity_record(
    check_id: &str,
    p: u64,
    n: u64,
    spec: &QuadratureSpec,
    lhs: (f64, bool, usize),
    rhs: BigRational,
) -> VerificationRecord {
    let (value, flagged, nodes) = lhs;
    let underresolved = flagged || (spec.kind == QuadratureKind::GaussLegendre && nodes < (p + n + 1) as usize);
    let rec = VerificationRecord::float_vs_exact(
        check_id,
        params([("p", p.into()), ("n", n.into()), ("nodes", nodes.into())]),
        value,
        rhs,
        spec.target_tol,
    );
    if underresolved {
        rec.with_note("quadrature under-resolved for the integrand degree")
    } else {
        rec
    }
}

/// `∫₀¹ x^{-2} (1-x²)^{p-n} [C_{2n+1}^(p-n+1/2)(x)]² dx` against its closed form.
pub fn identity_gegenbauer(p: i64, n: i64, spec: &QuadratureSpec) -> Result<VerificationRecord> {
    let (pu, nu) = check_order(p, n)?;
    let lambda = (pu - nu) as f64 + 0.5;
    let lhs = integrate_even_polynomial(spec, |x| {
        let c = gegenbauer(2 * nu + 1, lambda, x) / x;
        ((1.0 - x) * (1.0 + x)).powi((pu - nu) as i32) * c * c
    })?;
    Ok(identity_record("identity.gegenbauer", pu, nu, spec, lhs, gegenbauer_identity_rhs(pu, nu)))
}

/// `∫₀¹ x^{-2} [P_{p+n+1}^{p-n}(x)]² dx` against `(2p+1)!/(2n+1)!`.
pub fn identity_legendre(p: i64, n: i64, spec: &QuadratureSpec) -> Result<VerificationRecord> {
    let (pu, nu) = check_order(p, n)?;
    let lhs = integrate_even_polynomial(spec, |x| {
        let v = assoc_legendre(pu + nu + 1, pu - nu, x).unwrap_or(f64::NAN) / x;
        v * v
    })?;
    Ok(identity_record("identity.legendre", pu, nu, spec, lhs, legendre_identity_rhs(pu, nu)))
}

/// `(2k-1)!! = 1·3·…·(2k-1)`, with `(-1)!! = 1`.
fn odd_double_factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(2 * j - 1))
}

/// The two identity right-hand sides compared as rationals.
///
/// Without the Condon–Shortley phase,
/// `P_l^m(x) = (2m-1)!! (1-x²)^{m/2} C_{l-m}^(m+1/2)(x)`, so the Legendre
/// integral is `[(2m-1)!!]²` times the Gegenbauer one with `m = p - n`.
/// The bare right-hand sides agree only for `p - n <= 1`.
pub fn identity_rhs_cross(p: i64, n: i64) -> Result<VerificationRecord> {
    let (pu, nu) = check_order(p, n)?;
    let norm = BigRational::from_integer(odd_double_factorial(pu - nu).pow(2));
    Ok(VerificationRecord::exact(
        "identity.rhs_cross",
        params([("p", pu.into()), ("n", nu.into())]),
        gegenbauer_identity_rhs(pu, nu) * norm,
        legendre_identity_rhs(pu, nu),
    ))
}

/// `C_k^(a+1/2)(x)` with exact coefficients.
fn gegenbauer_poly(k: u64, a: u64) -> PolyExact {
    let half = BigRational::new(1.into(), 2.into());
    let lambda = BigRational::from_integer(a.into()) + &half;
    let mut coefficients = vec![BigRational::zero(); k as usize + 1];
    for j in 0..=k / 2 {
        let rising = (0..k - j).fold(BigRational::one(), |acc, i| acc * (&lambda + BigRational::from_integer(i.into())));
        let power = k - 2 * j;
        let denom = factorial_int(j) * factorial_int(power);
        let mut c = rising * BigRational::new(BigInt::one() << power, denom);
        if j % 2 == 1 {
            c = -c;
        }
        coefficients[power as usize] = c;
    }
    PolyExact::new(coefficients)
}

/// `d^m/dx^m P_l(x)` with exact coefficients.
fn legendre_derivative_poly(l: u64, m: u64) -> Result<PolyExact> {
    let mut coefficients = vec![BigRational::zero(); l as usize + 1];
    for k in 0..=l / 2 {
        let c = binom_int(l as i64, k as i64)? * binom_int((2 * l - 2 * k) as i64, l as i64)?;
        let c = c / BigRational::from_integer(BigInt::one() << l);
        coefficients[(l - 2 * k) as usize] = if k % 2 == 1 { -c } else { c };
    }
    let derived = coefficients
        .iter()
        .enumerate()
        .skip(m as usize)
        .map(|(i, c)| c * BigRational::new(factorial_int(i as u64), factorial_int(i as u64 - m)))
        .collect();
    Ok(PolyExact::new(derived))
}

fn divide_by_x(poly: &PolyExact) -> Result<PolyExact> {
    if !poly.coefficient(0).is_zero() {
        return Err(Error::Numerical("polynomial does not vanish at the origin".into()));
    }
    Ok(PolyExact::new(poly.coefficients().iter().skip(1).cloned().collect()))
}

/// `(1 - x²)^k`.
fn one_minus_x_sq_pow(k: u64) -> PolyExact {
    PolyExact::new(vec![BigRational::one(), BigRational::zero(), -BigRational::one()]).pow(k as usize)
}

/// `∫₀¹ poly(x) dx`.
fn integrate_unit(poly: &PolyExact) -> BigRational {
    poly.coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| c / BigRational::from_integer((i as i64 + 1).into()))
        .sum()
}

/// `∫₀¹ x^{-2} (1-x²)^{p-n} [C_{2n+1}^(p-n+1/2)(x)]² dx` evaluated exactly.
pub fn gegenbauer_identity_integral(p: i64, n: i64) -> Result<BigRational> {
    let (pu, nu) = check_order(p, n)?;
    let c = divide_by_x(&gegenbauer_poly(2 * nu + 1, pu - nu))?;
    Ok(integrate_unit(&(&one_minus_x_sq_pow(pu - nu) * &(&c * &c))))
}

/// `∫₀¹ x^{-2} [P_{p+n+1}^{p-n}(x)]² dx` evaluated exactly.
pub fn legendre_identity_integral(p: i64, n: i64) -> Result<BigRational> {
    let (pu, nu) = check_order(p, n)?;
    let d = divide_by_x(&legendre_derivative_poly(pu + nu + 1, pu - nu)?)?;
    Ok(integrate_unit(&(&one_minus_x_sq_pow(pu - nu) * &(&d * &d))))
}

/// Exact integral against the closed-form right-hand side, for both identities.
pub fn identity_exact(p: i64, n: i64) -> Result<[VerificationRecord; 2]> {
    let (pu, nu) = check_order(p, n)?;
    let ps = params([("p", pu.into()), ("n", nu.into())]);
    Ok([
        VerificationRecord::exact(
            "identity.gegenbauer_exact",
            ps.clone(),
            gegenbauer_identity_integral(p, n)?,
            gegenbauer_identity_rhs(pu, nu),
        ),
        VerificationRecord::exact(
            "identity.legendre_exact",
            ps,
            legendre_identity_integral(p, n)?,
            legendre_identity_rhs(pu, nu),
        ),
    ])
}

/// `|⟨0|ζ;0⟩|² = (1 - x)^{1/2}`.
pub fn vacuum_overlap_sq(x: f64) -> f64 {
    (1.0 - x).sqrt()
}

/// `ε^{-1/2} - 1`, the closed form of the truncated even-sector integral.
pub fn even_divergence_analytic(eps: f64) -> f64 {
    eps.powf(-0.5) - 1.0
}

/// Squeeze strengths at which the vacuum overlap is cross-checked against
/// the matrix exponential before the probe integrates it.
const VACUUM_CHECK_XI: [f64; 4] = [0.2, 0.5, 0.8, 1.2];

/// Truncated even-sector integral
/// `J(ε) = ½ ∫₀^{1-ε} |⟨0|ζ;0⟩|² / (1-x)² dx` for each `ε`.
///
/// The integrand uses the squeezed-vacuum overlap in closed form, which is
/// first checked against `⟨0|D(ξ)|0⟩` from [`squeeze_matrix`] at every
/// strength in a fixed set that `dim` can resolve. Near `ε → 0` the required
/// truncation grows like `1/ε`, so the operator itself cannot be used there.
pub fn even_divergence_probe(epsilons: &[f64], dim: usize) -> Result<Vec<(f64, f64)>> {
    if let Some(bad) = epsilons.iter().find(|e| !(**e > 0.0 && **e < 1.0)) {
        return Err(domain(format!("epsilon must lie in (0, 1), got {bad}")));
    }
    let mut checked = 0;
    for xi in VACUUM_CHECK_XI {
        if truncation_dim(0, xi) > dim {
            continue;
        }
        let param = SqueezeParam::new(xi, 0.0)?;
        let d = squeeze_matrix(&param, dim)?;
        let numeric = d.entry(0, 0).norm_sqr();
        let z = zeta_from_xi(&param);
        let closed = vacuum_overlap_sq(z.x());
        if ((numeric - closed) / closed).abs() > 1e-8 {
            return Err(Error::Numerical(format!(
                "squeezed-vacuum overlap mismatch at |xi|={xi}: operator {numeric}, closed form {closed}"
            )));
        }
        checked += 1;
    }
    if checked == 0 {
        return Err(domain(format!("dim = {dim} too small to cross-check the squeezed vacuum")));
    }

    let rule = GaussRule::unit_legendre(20)?;
    Ok(epsilons
        .iter()
        .map(|&eps| {
            // u = 1 - x = e^s, s ∈ [ln ε, 0]
            let lo = eps.ln();
            let panels = (2.0 * lo.abs()).ceil().max(1.0) as usize;
            let j = 0.5
                * rule.integrate_composite(lo, 0.0, panels, |s| {
                    let u = s.exp();
                    vacuum_overlap_sq(1.0 - u) / u
                });
            (eps, j)
        })
        .collect())
}

/// Least-squares slope of `ln J` against `ln ε`.
pub fn divergence_slope(samples: &[(f64, f64)]) -> Result<f64> {
    if samples.len() < 2 {
        return Err(domain("slope fit needs at least two samples"));
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(e, j)| (e.ln(), j.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return Err(domain("slope fit needs distinct epsilons"));
    }
    Ok(sxy / sxx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XDiagMode {
    Exact,
    Quadrature,
}

/// Diagonal of `X` in the odd basis: entry `p` is `I(max(p,n), min(p,n))`.
pub fn x_diagonal(n: u64, p_max: u64, mode: XDiagMode) -> Result<Vec<Value>> {
    (0..=p_max)
        .map(|p| {
            let (hi, lo) = if p >= n { (p, n) } else { (n, p) };
            match mode {
                XDiagMode::Exact => Ok(Value::Exact(i_pn_exact(hi as i64, lo as i64)?)),
                XDiagMode::Quadrature => {
                    let spec = QuadratureSpec::gauss_jacobi(exact_gauss_jacobi_nodes(hi, lo));
                    Ok(Value::Float(i_pn_quadrature(hi as i64, lo as i64, &spec)?.value))
                }
            }
        })
        .collect()
}

/// Whether a rational is exactly one.
pub fn is_one(q: &BigRational) -> bool {
    q.is_one()
}
