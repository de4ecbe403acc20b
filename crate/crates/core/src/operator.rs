//! Truncated-Fock-space oracle: ladder operators, the squeeze matrix
//! `D(ξ) = exp(½(ξ a†² - ξ* a²))`, and numerical checks of the closed forms
//! and of the resolution of identity over the disc.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::overlaps::{overlap_value, zeta_from_xi, SqueezeParam, ZetaPoint};
use crate::quadrature::{GaussRule, QuadratureKind, QuadratureSpec};
use crate::record::{params, VerificationRecord};

/// Smallest Fock index fed to [`truncation_dim`].
pub const MIN_TRUNCATION_INDEX: usize = 17;

/// Tolerance used by [`overlap_crosscheck`].
pub const CROSSCHECK_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// `|2k⟩` or `|2k+1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockLabel {
    pub k: usize,
    pub parity: Parity,
}

impl FockLabel {
    pub fn odd(k: usize) -> Self {
        FockLabel { k, parity: Parity::Odd }
    }

    pub fn even(k: usize) -> Self {
        FockLabel { k, parity: Parity::Even }
    }

    pub fn index(&self) -> usize {
        match self.parity {
            Parity::Even => 2 * self.k,
            Parity::Odd => 2 * self.k + 1,
        }
    }
}

/// Dense operator on Fock levels `0..dim`; `entries[(r, c)] = ⟨r|Ô|c⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    entries: DMatrix<Complex64>,
}

impl TruncatedOperator {
    pub fn from_matrix(entries: DMatrix<Complex64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() || entries.nrows() < 2 {
            return Err(domain(format!(
                "operator must be square with dim >= 2, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Numerical("operator has non-finite entries".into()));
        }
        Ok(TruncatedOperator { entries })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        TruncatedOperator::from_matrix(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn at(&self, row: FockLabel, col: FockLabel) -> Complex64 {
        self.entry(row.index(), col.index())
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        TruncatedOperator {
            entries: self.entries.adjoint(),
        }
    }

    pub fn compose(&self, rhs: &TruncatedOperator) -> Self {
        TruncatedOperator {
            entries: &self.entries * &rhs.entries,
        }
    }

    /// `max |(O†O - I)_{rc}|` over `r, c < block`.
    pub fn unitarity_defect(&self, block: usize) -> f64 {
        let block = block.min(self.dim());
        let prod = self.entries.adjoint() * &self.entries;
        let mut worst = 0.0f64;
        for r in 0..block {
            for c in 0..block {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((prod[(r, c)] - target).norm());
            }
        }
        worst
    }

    /// Largest entry connecting an even level to an odd one.
    pub fn parity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in 0..n {
                if (r + c) % 2 == 1 {
                    worst = worst.max(self.entries[(r, c)].norm());
                }
            }
        }
        worst
    }
}

/// Annihilation and creation operators on `dim` levels.
pub fn ladder_ops(dim: usize) -> Result<(TruncatedOperator, TruncatedOperator)> {
    if dim < 2 {
        return Err(domain(format!("ladder operators need dim >= 2, got {dim}")));
    }
    let mut a = DMatrix::<Complex64>::zeros(dim, dim);
    for c in 1..dim {
        a[(c - 1, c)] = Complex64::new((c as f64).sqrt(), 0.0);
    }
    let a_dag = a.adjoint();
    Ok((TruncatedOperator { entries: a }, TruncatedOperator { entries: a_dag }))
}

/// Dimension needed to trust matrix elements up to absolute Fock index
/// `max_index` at squeeze strength `|ξ|`: `max(4M, ⌈(2M+8)/(1-tanh²|ξ|)⌉)`.
/// Only indices below `dim/2` should be trusted. `M` is clamped to at
/// least [`MIN_TRUNCATION_INDEX`]: for smaller `M` the formula can leave too
/// few levels for the boundary to decouple at the `1e-8` level (about `1e-7`
/// at `M = 9`, `|ξ| = 0.8`).
pub fn truncation_dim(max_index: usize, xi_modulus: f64) -> usize {
    let max_index = max_index.max(MIN_TRUNCATION_INDEX);
    let sech = 1.0 / xi_modulus.cosh();
    let by_squeeze = ((2 * max_index + 8) as f64 / (sech * sech)).ceil() as usize;
    (4 * max_index).max(by_squeeze).max(2)
}

/// `exp(G)` by scaling and squaring with a Taylor core.
pub fn expm(g: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let n = g.nrows();
    let norm1 = (0..n)
        .map(|c| g.column(c).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    if !norm1.is_finite() {
        return Err(Error::Numerical("generator has non-finite norm".into()));
    }
    let squarings = if norm1 > 0.25 {
        (norm1 / 0.25).log2().ceil() as i32
    } else {
        0
    };
    let scaled = g * Complex64::new(2f64.powi(-squarings), 0.0);

    let mut result = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut converged = false;
    for k in 1..=40 {
        term = &term * &scaled * Complex64::new(1.0 / k as f64, 0.0);
        result += &term;
        let tnorm = term.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if tnorm <= 1e-18 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "Taylor series did not converge (|G|_1 = {norm1}, squarings = {squarings})"
        )));
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}

/// `D(ξ)` on `dim` levels.
pub fn squeeze_matrix(param: &SqueezeParam, dim: usize) -> Result<TruncatedOperator> {
    let (a, a_dag) = ladder_ops(dim)?;
    let xi = param.xi();
    let a2 = a.matrix() * a.matrix();
    let a_dag2 = a_dag.matrix() * a_dag.matrix();
    let generator = (a_dag2 * xi - a2 * xi.conj()) * Complex64::new(0.5, 0.0);
    if generator.iter().all(Zero::is_zero) {
        return TruncatedOperator::identity(dim);
    }
    TruncatedOperator::from_matrix(expm(&generator)?)
}

/// Compare `⟨2m+1|D(ξ)|2n+1⟩` from a precomputed squeeze matrix with the
/// closed form.
pub fn overlap_crosscheck_with(
    d: &TruncatedOperator,
    m: u64,
    n: u64,
    param: &SqueezeParam,
) -> Result<VerificationRecord> {
    let top = 2 * m.max(n) as usize + 1;
    if top >= d.dim() / 2 {
        return Err(domain(format!(
            "dim {} too small: index {top} is outside the retained block",
            d.dim()
        )));
    }
    let numeric = d.at(FockLabel::odd(m as usize), FockLabel::odd(n as usize));
    let closed = overlap_value(m, n, &zeta_from_xi(param));
    let abs_err = (numeric - closed).norm();
    let reference = closed.norm();
    let rel_err = if reference > 0.0 { abs_err / reference } else { abs_err };
    let mut rec = VerificationRecord::float(
        "operator.overlap",
        params([
            ("m", m.into()),
            ("n", n.into()),
            ("xi", param.xi_modulus().into()),
            ("phi", param.phase().into()),
            ("dim", d.dim().into()),
        ]),
        numeric.norm(),
        closed.norm(),
        CROSSCHECK_TOL,
    );
    rec.abs_err = abs_err;
    rec.rel_err = rel_err;
    rec.pass = rel_err <= CROSSCHECK_TOL;
    Ok(rec)
}

/// Build `D(ξ)` on `dim` levels and compare one odd-odd matrix element with
/// the closed form, phase included.
pub fn overlap_crosscheck(m: u64, n: u64, param: &SqueezeParam, dim: usize) -> Result<VerificationRecord> {
    let top = 2 * m.max(n) as usize + 1;
    if top >= dim / 2 {
        return Err(domain(format!("dim {dim} too small: index {top} is outside the retained block")));
    }
    let d = squeeze_matrix(param, dim)?;
    overlap_crosscheck_with(&d, m, n, param)
}

/// Assemble
/// `X_{pq} = (1/2π) ∫ d²ζ/(1-|ζ|²)² ⟨2p+1|ζ;2n+1⟩⟨ζ;2n+1|2q+1⟩`, `p, q <= p_max`,
/// with a uniform phase grid and the Gauss–Jacobi radial rule.
pub fn disc_resolution_check(
    n: u64,
    p_max: u64,
    radial_spec: &QuadratureSpec,
    phase_nodes: usize,
) -> Result<DMatrix<Complex64>> {
    radial_spec.validate()?;
    if radial_spec.kind != QuadratureKind::GaussJacobi {
        return Err(Error::InvalidSpec(
            "disc resolution check needs the gauss-jacobi radial rule".into(),
        ));
    }
    let min_phase = 4 * (p_max + n) as usize + 4;
    if phase_nodes < min_phase {
        return Err(Error::InvalidSpec(format!(
            "phase_nodes = {phase_nodes} below the exactness bound {min_phase}"
        )));
    }
    let rule = GaussRule::unit_inverse_sqrt(radial_spec.node_count)?;
    let size = p_max as usize + 1;
    let mut x = DMatrix::<Complex64>::zeros(size, size);
    let mut column = vec![Complex64::zero(); size];
    for (&xr, &w) in rule.nodes().iter().zip(rule.weights()) {
        // d²ζ = ½ dx dφ; (1-x)^{-2} = weight (1-x)^{-1/2} × (1-x)^{-3/2}
        let radial = 0.5 * w * (1.0 - xr).powf(-1.5) / phase_nodes as f64;
        for k in 0..phase_nodes {
            let phi = TAU * k as f64 / phase_nodes as f64;
            let z = ZetaPoint::from_x(xr, phi)?;
            for (p, slot) in column.iter_mut().enumerate() {
                *slot = overlap_value(p as u64, n, &z);
            }
            for p in 0..size {
                for q in 0..size {
                    x[(p, q)] += column[p] * column[q].conj() * radial;
                }
            }
        }
    }
    Ok(x)
}

/// `max |X_{pq} - δ_{pq}|`.
pub fn identity_deviation(x: &DMatrix<Complex64>) -> f64 {
    let mut worst = 0.0f64;
    for p in 0..x.nrows() {
        for q in 0..x.ncols() {
            let target = if p == q { 1.0 } else { 0.0 };
            worst = worst.max((x[(p, q)] - target).norm());
        }
    }
    worst
}

/// Minimum radial Gauss–Jacobi nodes that make every diagonal entry exact.
pub fn disc_radial_nodes(n: u64, p_max: u64) -> usize {
    ((p_max + n) / 2 + 1) as usize
}
