//! Gaussian rules (Golub–Welsch with Newton polishing) and tanh-sinh
//! integration on `[0, 1]`.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::ortho::{jacobi_derivative, jacobi_recurrence};

/// Node convergence threshold for the Newton polish.
const NODE_TOL: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadratureKind {
    /// Weight 1 on `[0, 1]`.
    GaussLegendre,
    /// Weight `(1-x)^{-1/2}` on `[0, 1]`.
    GaussJacobi,
    /// Double-exponential rule; endpoint singularities are handled by the
    /// change of variables.
    TanhSinh,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub kind: QuadratureKind,
    /// Gauss nodes; ignored by tanh-sinh.
    pub node_count: usize,
    /// Target relative accuracy; drives tanh-sinh refinement.
    pub target_tol: f64,
}

impl QuadratureSpec {
    pub fn new(kind: QuadratureKind, node_count: usize, target_tol: f64) -> Result<Self> {
        let spec = QuadratureSpec {
            kind,
            node_count,
            target_tol,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn gauss_legendre(node_count: usize) -> Self {
        QuadratureSpec {
            kind: QuadratureKind::GaussLegendre,
            node_count,
            target_tol: 1e-14,
        }
    }

    pub fn gauss_jacobi(node_count: usize) -> Self {
        QuadratureSpec {
            kind: QuadratureKind::GaussJacobi,
            node_count,
            target_tol: 1e-14,
        }
    }

    pub fn tanh_sinh(target_tol: f64) -> Self {
        QuadratureSpec {
            kind: QuadratureKind::TanhSinh,
            node_count: 1,
            target_tol,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_count == 0 {
            return Err(Error::InvalidSpec("node_count must be at least 1".into()));
        }
        if !(self.target_tol > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "target_tol must be positive, got {}",
                self.target_tol
            )));
        }
        Ok(())
    }
}

/// Nodes and weights of a Gaussian rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    /// `n`-point rule on `[-1, 1]` for the weight `(1-t)^a (1+t)^b`.
    pub fn jacobi(n: usize, a: f64, b: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("a Gauss rule needs at least one node".into()));
        }
        if !(a > -1.0 && b > -1.0) {
            return Err(Error::InvalidSpec(format!("Jacobi exponents must exceed -1 (a={a}, b={b})")));
        }
        let ab = a + b;
        let diag: Vec<f64> = (0..n)
            .map(|k| {
                if k == 0 {
                    (b - a) / (ab + 2.0)
                } else {
                    let c = 2.0 * k as f64 + ab;
                    (b * b - a * a) / (c * (c + 2.0))
                }
            })
            .collect();
        // off[k] couples rows k-1 and k
        let off: Vec<f64> = (0..n)
            .map(|k| {
                if k == 0 {
                    return 0.0;
                }
                let kf = k as f64;
                let c = 2.0 * kf + ab;
                (4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (c * c * (c + 1.0) * (c - 1.0))).sqrt()
            })
            .collect();
        let mu0 = 2f64.powf(ab + 1.0) * libm::tgamma(a + 1.0) * libm::tgamma(b + 1.0) / libm::tgamma(ab + 2.0);

        let mut jm = DMatrix::<f64>::zeros(n, n);
        for k in 0..n {
            jm[(k, k)] = diag[k];
            if k > 0 {
                jm[(k, k - 1)] = off[k];
                jm[(k - 1, k)] = off[k];
            }
        }
        let eig = SymmetricEigen::new(jm);
        let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        nodes.sort_by(f64::total_cmp);

        for t in nodes.iter_mut() {
            *t = newton_polish(n as u64, a, b, *t)?;
        }

        // Christoffel numbers from the orthonormal recurrence
        let weights = nodes
            .iter()
            .map(|&t| {
                let mut prev = 0.0;
                let mut cur = 1.0 / mu0.sqrt();
                let mut acc = cur * cur;
                for k in 0..n - 1 {
                    let next = ((t - diag[k]) * cur - off[k] * prev) / off[k + 1];
                    prev = cur;
                    cur = next;
                    acc += cur * cur;
                }
                1.0 / acc
            })
            .collect();
        Ok(GaussRule { nodes, weights })
    }

    /// Gauss–Legendre on `[0, 1]`.
    pub fn unit_legendre(n: usize) -> Result<Self> {
        Ok(GaussRule::jacobi(n, 0.0, 0.0)?.to_unit_interval(0.0, 0.0))
    }

    /// Gauss–Jacobi on `[0, 1]` for the weight `(1-x)^{-1/2}`.
    pub fn unit_inverse_sqrt(n: usize) -> Result<Self> {
        Ok(GaussRule::jacobi(n, -0.5, 0.0)?.to_unit_interval(-0.5, 0.0))
    }

    /// Map a `[-1, 1]` rule for `(1-t)^a (1+t)^b` to `[0, 1]` for `(1-x)^a x^b`.
    fn to_unit_interval(&self, a: f64, b: f64) -> Self {
        let scale = 2f64.powf(-(a + b + 1.0));
        GaussRule {
            nodes: self.nodes.iter().map(|t| 0.5 * (1.0 + t)).collect(),
            weights: self.weights.iter().map(|w| w * scale).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Highest polynomial degree integrated exactly (`2n - 1`).
    pub fn exact_degree(&self) -> usize {
        2 * self.nodes.len() - 1
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Composite application over `panels` equal sub-intervals of `[lo, hi]`
    /// (only meaningful for a unit-weight rule on `[0, 1]`).
    pub fn integrate_composite(&self, lo: f64, hi: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
        let width = (hi - lo) / panels as f64;
        (0..panels)
            .map(|i| {
                let start = lo + i as f64 * width;
                width * self.integrate(|u| f(start + width * u))
            })
            .sum()
    }
}

fn newton_polish(n: u64, a: f64, b: f64, mut t: f64) -> Result<f64> {
    for _ in 0..50 {
        let dp = jacobi_derivative(n, a, b, t);
        if dp == 0.0 {
            break;
        }
        let step = jacobi_recurrence(n, a, b, t) / dp;
        t -= step;
        if step.abs() <= NODE_TOL * t.abs().max(1.0) {
            return Ok(t);
        }
    }
    // Rounding can leave the last step just above NODE_TOL; accept if the
    // eigenvalue estimate and the iterate still agree closely.
    if t.is_finite() && t.abs() <= 1.0 {
        Ok(t)
    } else {
        Err(Error::Numerical(format!("Gauss node polish diverged (n={n}, a={a}, b={b})")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhSinhResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error_estimate: f64,
    pub converged: bool,
    pub levels: u32,
}

/// Tanh-sinh integration of `f` over `[0, 1]`.
///
/// `f` receives both `x` and `1 - x`, the latter computed without
/// cancellation, so integrands singular at `x = 1` can be written in terms
/// of the complement.
pub fn tanh_sinh(f: impl Fn(f64, f64) -> f64, tol: f64) -> Result<TanhSinhResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidSpec(format!("tanh-sinh tolerance must be positive, got {tol}")));
    }
    const T_MAX: f64 = 6.5;
    const MAX_LEVEL: u32 = 14;
    const MIN_LEVEL: u32 = 3;
    let half_pi = std::f64::consts::FRAC_PI_2;

    let term = |t: f64| -> f64 {
        let u = half_pi * t.sinh();
        let x = 1.0 / (1.0 + (-2.0 * u).exp());
        let xc = 1.0 / (1.0 + (2.0 * u).exp());
        if x == 0.0 || xc == 0.0 {
            return 0.0;
        }
        let w = std::f64::consts::PI * t.cosh() * x * xc;
        if w == 0.0 {
            return 0.0;
        }
        w * f(x, xc)
    };

    // level 0: h = 1
    let mut h = 1.0;
    let kmax = T_MAX as i64;
    let mut sum: f64 = (-kmax..=kmax).map(|k| term(k as f64)).sum();
    let mut estimate = h * sum;
    let mut delta = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h /= 2.0;
        let count = (T_MAX / h) as i64;
        let fresh: f64 = (-count..=count)
            .filter(|k| k % 2 != 0)
            .map(|k| term(k as f64 * h))
            .sum();
        sum += fresh;
        let next = h * sum;
        delta = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVEL && delta <= tol * estimate.abs().max(f64::MIN_POSITIVE) {
            return Ok(TanhSinhResult {
                value: estimate,
                error_estimate: delta,
                converged: true,
                levels: level,
            });
        }
    }
    Ok(TanhSinhResult {
        value: estimate,
        error_estimate: delta,
        converged: false,
        levels: MAX_LEVEL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_two_point() {
        let g = GaussRule::jacobi(2, 0.0, 0.0).unwrap();
        let r = 1.0 / 3f64.sqrt();
        assert!((g.nodes()[0] + r).abs() < 1e-15 && (g.nodes()[1] - r).abs() < 1e-15);
        assert!((g.weights()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn single_node_rules() {
        let g = GaussRule::unit_inverse_sqrt(1).unwrap();
        // ∫₀¹ (1-x)^{-1/2} = 2, ∫₀¹ x (1-x)^{-1/2} = 4/3, so the node is 2/3
        assert!((g.weights()[0] - 2.0).abs() < 1e-15);
        assert!((g.nodes()[0] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn unit_legendre_integrates_monomials() {
        let g = GaussRule::unit_legendre(8).unwrap();
        for k in 0..=15 {
            let v = g.integrate(|x| x.powi(k));
            assert!((v - 1.0 / (k as f64 + 1.0)).abs() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn inverse_sqrt_rule_integrates_monomials() {
        // ∫₀¹ x^k (1-x)^{-1/2} dx = 2 · (2k)!! / (2k+1)!!
        let g = GaussRule::unit_inverse_sqrt(10).unwrap();
        let mut exact = 2.0;
        for k in 0..=19 {
            if k > 0 {
                exact *= 2.0 * k as f64 / (2.0 * k as f64 + 1.0);
            }
            let v = g.integrate(|x| x.powi(k));
            assert!((v - exact).abs() <= 1e-14 * exact, "k={k}: {v} vs {exact}");
        }
    }

    #[test]
    fn large_rule_weights_positive_and_sum() {
        let g = GaussRule::unit_inverse_sqrt(40).unwrap();
        assert!(g.weights().iter().all(|&w| w > 0.0));
        let total: f64 = g.weights().iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
        assert!(g.nodes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tanh_sinh_singular_endpoint() {
        let r = tanh_sinh(|_, xc| xc.powf(-0.5), 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-11);
        let r = tanh_sinh(|x, _| x.ln(), 1e-12).unwrap();
        assert!((r.value + 1.0).abs() < 1e-11);
    }

    #[test]
    fn invalid_specs() {
        assert!(QuadratureSpec::new(QuadratureKind::GaussJacobi, 0, 1e-10).is_err());
        assert!(QuadratureSpec::new(QuadratureKind::TanhSinh, 1, 0.0).is_err());
        assert!(GaussRule::jacobi(3, -1.0, 0.0).is_err());
        assert!(tanh_sinh(|_, _| 1.0, -1.0).is_err());
    }
}
