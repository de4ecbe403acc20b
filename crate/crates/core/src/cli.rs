//! Command-line parsing and suite orchestration.
//!
//! Every check family walks the grid `0 <= n <= p <= p_max` (with
//! `n <= n_max`) unless it says otherwise. Records come back sorted by
//! `(check_id, params)`, and an internal error in one check becomes a failed
//! record rather than aborting the run.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::operator::{
    disc_radial_nodes, disc_resolution_check, identity_deviation, overlap_crosscheck_with, squeeze_matrix,
    truncation_dim,
};
use crate::ortho::{jacobi_recurrence, jacobi_sum_a, jacobi_sum_b, relation_gegenbauer, relation_legendre};
use crate::overlaps::{unitarity_column_sum_adaptive, SqueezeParam, ZetaPoint};
use crate::quadrature::{QuadratureKind, QuadratureSpec};
use crate::record::{params, Params, VerificationRecord};
use crate::report::{ReportDocument, ReportFormat};
use crate::verify::{
    divergence_slope, even_divergence_analytic, even_divergence_probe, exact_gauss_jacobi_nodes, i_pn_exact_via,
    i_pn_quadrature, identity_exact, identity_gegenbauer, identity_legendre, identity_rhs_cross, racah_inner_sum, ExactPath,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Jacobi,
    Racah,
    Ipn,
    Identities,
    Operator,
    Completeness,
    EvenDivergence,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Suite as ValueEnum>::from_str(s, false).map_err(|_| Error::Usage(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Mode as ValueEnum>::from_str(s, false).map_err(|_| Error::Usage(format!("unknown mode '{s}'")))
    }
}

impl Mode {
    fn exact(self) -> bool {
        matches!(self, Mode::Exact | Mode::Both)
    }

    fn float(self) -> bool {
        matches!(self, Mode::Float | Mode::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub p_max: u64,
    pub n_max: u64,
    pub mode: Mode,
    pub tol: f64,
    pub format: ReportFormat,
    pub output_path: Option<PathBuf>,
    /// Truncation override for the operator and even-divergence checks.
    pub dim: Option<usize>,
    /// Single squeeze modulus replacing the operator grid.
    pub xi: Option<f64>,
    /// Single squeeze phase replacing the operator grid.
    pub phi: Option<f64>,
}

impl SuiteConfig {
    pub fn new(suite: Suite, p_max: u64) -> Self {
        SuiteConfig {
            suite,
            p_max,
            n_max: p_max,
            mode: Mode::Both,
            tol: DEFAULT_TOL,
            format: ReportFormat::Json,
            output_path: None,
            dim: None,
            xi: None,
            phi: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max > self.p_max {
            return Err(Error::Usage(format!(
                "--n-max ({}) must not exceed --p-max ({})",
                self.n_max, self.p_max
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Usage(format!("--tol must be a positive number, got {}", self.tol)));
        }
        if let Some(xi) = self.xi {
            if !(xi >= 0.0 && xi.is_finite()) {
                return Err(Error::Usage(format!("--xi must be finite and non-negative, got {xi}")));
            }
        }
        if let Some(phi) = self.phi {
            if !phi.is_finite() {
                return Err(Error::Usage(format!("--phi must be finite, got {phi}")));
            }
        }
        if let Some(dim) = self.dim {
            if dim < 2 {
                return Err(Error::Usage(format!("--dim must be at least 2, got {dim}")));
            }
        }
        Ok(())
    }
}

pub const DEFAULT_P_MAX: u64 = 10;
pub const DEFAULT_TOL: f64 = 1e-10;

/// Absolute-tolerance bound on the fitted even-sector slope.
pub const SLOPE_TOL: f64 = 0.05;

/// Default truncation used to validate the squeezed vacuum in the
/// even-divergence probe.
pub const DEFAULT_DIVERGENCE_DIM: usize = 160;

pub const OPERATOR_XI_GRID: [f64; 3] = [0.2, 0.5, 0.8];
pub const OPERATOR_PHI_GRID: [f64; 3] = [0.0, 1.1, std::f64::consts::PI];
pub const UNITARITY_ZETA_GRID: [f64; 3] = [0.3, 0.6, 0.9];

/// Rational points at which the two explicit Jacobi sums are compared.
pub fn jacobi_exact_points() -> Vec<BigRational> {
    [(0, 1), (1, 7), (1, 3), (1, 2), (2, 3), (1, 1)]
        .into_iter()
        .map(|(a, b)| BigRational::new(a.into(), b.into()))
        .collect()
}

/// `x = k/20`, `k = 0..=20`.
pub fn recurrence_grid() -> Vec<BigRational> {
    (0..=20).map(|k| BigRational::new(k.into(), 20.into())).collect()
}

/// `points` equally spaced values in `(lo, hi]`.
pub fn half_open_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (1..=points)
        .map(|k| if k == points { hi } else { lo + (hi - lo) * k as f64 / points as f64 })
        .collect()
}

pub fn gegenbauer_relation_grid() -> Vec<f64> {
    half_open_grid(-0.9, 1.0, 19)
}

pub fn legendre_relation_grid() -> Vec<f64> {
    half_open_grid(-0.9, 0.99, 21)
}

/// Epsilons for the even-sector probe, log-spaced over `[1e-6, 1e-2]`.
pub fn divergence_epsilons() -> Vec<f64> {
    (0..=16).map(|k| 10f64.powf(-6.0 + 0.25 * k as f64)).collect()
}

#[derive(Debug, Parser)]
#[command(name = "oddsqueeze", version, about = "Verify the odd-sector resolution of identity for squeezed number states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long, default_value_t = DEFAULT_P_MAX)]
    p_max: u64,
    /// Defaults to --p-max.
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fock-space truncation for operator and even-divergence checks
    #[arg(long)]
    dim: Option<usize>,
    /// Squeeze modulus; replaces the built-in grid
    #[arg(long, allow_negative_numbers = true)]
    xi: Option<f64>,
    /// Squeeze phase; replaces the built-in grid
    #[arg(long, allow_negative_numbers = true)]
    phi: Option<f64>,
}

/// Outcome of argument parsing that does not yield a configuration.
#[derive(Debug)]
pub enum CliExit {
    /// `--help` or `--version`: print and exit successfully.
    Info(String),
    Usage(String),
}

impl fmt::Display for CliExit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliExit::Info(s) | CliExit::Usage(s) => f.write_str(s),
        }
    }
}

/// Parse arguments without the program name, e.g. `["verify", "ipn"]`.
pub fn parse_cli<I, T>(argv: I) -> std::result::Result<SuiteConfig, CliExit>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("oddsqueeze")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliExit::Info(e.to_string()),
            _ => CliExit::Usage(e.to_string()),
        }
    })?;
    let Command::Verify(a) = cli.command;
    let config = SuiteConfig {
        suite: a.suite,
        p_max: a.p_max,
        n_max: a.n_max.unwrap_or(a.p_max),
        mode: a.mode,
        tol: a.tol,
        format: a.format,
        output_path: a.out,
        dim: a.dim,
        xi: a.xi,
        phi: a.phi,
    };
    config.validate().map_err(|e| CliExit::Usage(e.to_string()))?;
    Ok(config)
}

/// Run the configured suite. Never panics on numerical trouble: failures
/// are reported as records.
pub fn run_suite(config: &SuiteConfig) -> Result<ReportDocument> {
    config.validate()?;
    let start = Instant::now();
    let mut doc = ReportDocument::new(config.clone());
    let mut run = Runner {
        cfg: config,
        records: Vec::new(),
        skipped: Vec::new(),
    };
    let suites: &[Suite] = match config.suite {
        Suite::All => &[
            Suite::Jacobi,
            Suite::Racah,
            Suite::Ipn,
            Suite::Identities,
            Suite::Operator,
            Suite::Completeness,
            Suite::EvenDivergence,
        ],
        ref one => std::slice::from_ref(one),
    };
    for suite in suites {
        match suite {
            Suite::Jacobi => run.jacobi(),
            Suite::Racah => run.racah(),
            Suite::Ipn => run.ipn(),
            Suite::Identities => run.identities(),
            Suite::Operator => run.operator(),
            Suite::Completeness => run.completeness(),
            Suite::EvenDivergence => run.even_divergence(),
            Suite::All => unreachable!(),
        }
    }
    run.records.sort_by(VerificationRecord::sort_key_cmp);
    run.skipped.sort();
    doc.records = run.records;
    doc.skipped_checks = run.skipped;
    doc.duration = start.elapsed();
    Ok(doc)
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    records: Vec<VerificationRecord>,
    skipped: Vec<String>,
}

impl Runner<'_> {
    fn push(&mut self, id: &str, params: Params, outcome: Result<VerificationRecord>) {
        self.records.push(outcome.unwrap_or_else(|e| VerificationRecord::failed(id, params, e.to_string())));
    }

    fn skip(&mut self, id: &str) {
        self.skipped.push(id.to_string());
    }

    /// `(p, n)` with `0 <= n <= min(p, n_max)`, `p <= p_max`.
    fn pn_grid(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for p in 0..=self.cfg.p_max {
            for n in 0..=p.min(self.cfg.n_max) {
                out.push((p, n));
            }
        }
        out
    }

    fn jacobi(&mut self) {
        let tol = self.cfg.tol;
        if self.cfg.mode.exact() {
            for (p, n) in self.pn_grid() {
                let alpha = p - n;
                for x in jacobi_exact_points() {
                    let ps = params([
                        ("n", n.into()),
                        ("alpha", alpha.into()),
                        ("x", x.to_f64().unwrap_or(f64::NAN).into()),
                    ]);
                    let outcome = jacobi_sum_a(n as i64, alpha as i64, &x).and_then(|a| {
                        let b = jacobi_sum_b(n as i64, alpha as i64, &x)?;
                        Ok(VerificationRecord::exact("jacobi.forms", ps.clone(), a, b))
                    });
                    self.push("jacobi.forms", ps, outcome);
                }
            }
        } else {
            self.skip("jacobi.forms");
        }
        if !self.cfg.mode.float() {
            self.skip("jacobi.recurrence");
            self.skip("jacobi.relation_gegenbauer");
            self.skip("jacobi.relation_legendre");
            return;
        }
        for (p, n) in self.pn_grid() {
            let alpha = p - n;
            let ps = params([("n", n.into()), ("alpha", alpha.into())]);

            let outcome = worst_of(recurrence_grid(), |x| {
                let exact = jacobi_sum_a(n as i64, alpha as i64, &x)?.to_f64().unwrap_or(f64::NAN);
                let y = 1.0 - 2.0 * x.to_f64().unwrap_or(f64::NAN);
                Ok((jacobi_recurrence(n, alpha as f64, 0.5, y), exact))
            })
            .map(|(l, r)| VerificationRecord::float_scaled("jacobi.recurrence", ps.clone(), l, r, tol));
            self.push("jacobi.recurrence", ps.clone(), outcome);

            let outcome = worst_of(gegenbauer_relation_grid(), |x| relation_gegenbauer(n, alpha, x))
                .map(|(l, r)| VerificationRecord::float_scaled("jacobi.relation_gegenbauer", ps.clone(), l, r, tol));
            self.push("jacobi.relation_gegenbauer", ps.clone(), outcome);

            let outcome = worst_of(legendre_relation_grid(), |x| relation_legendre(n, alpha, x))
                .map(|(l, r)| VerificationRecord::float_scaled("jacobi.relation_legendre", ps.clone(), l, r, tol));
            self.push("jacobi.relation_legendre", ps, outcome);
        }
    }

    fn racah(&mut self) {
        if !self.cfg.mode.exact() {
            self.skip("racah.inner_sum");
            return;
        }
        for (p, n) in self.pn_grid() {
            for l in 0..=n {
                let ps = params([("p", p.into()), ("n", n.into()), ("l", l.into())]);
                let target = BigRational::from_integer(if l == 0 { 1.into() } else { 0.into() });
                let outcome = racah_inner_sum(p as i64, n as i64, l as i64)
                    .map(|s| VerificationRecord::exact("racah.inner_sum", ps.clone(), s, target));
                self.push("racah.inner_sum", ps, outcome);
            }
        }
    }

    fn ipn(&mut self) {
        let one = BigRational::from_integer(1.into());
        if self.cfg.mode.exact() {
            for (p, n) in self.pn_grid() {
                let ps = params([("p", p.into()), ("n", n.into())]);
                let outcome = exact_ipn_record(p, n, &one);
                self.push("ipn.exact", ps, outcome);
            }
        } else {
            self.skip("ipn.exact");
        }
        if !self.cfg.mode.float() {
            self.skip("ipn.gauss_jacobi");
            self.skip("ipn.tanh_sinh");
            return;
        }
        let tol = self.cfg.tol;
        for (p, n) in self.pn_grid() {
            let nodes = exact_gauss_jacobi_nodes(p, n);
            let ps = params([("p", p.into()), ("n", n.into()), ("nodes", nodes.into())]);
            let outcome = QuadratureSpec::new(QuadratureKind::GaussJacobi, nodes, tol)
                .and_then(|spec| i_pn_quadrature(p as i64, n as i64, &spec))
                .map(|q| VerificationRecord::float_vs_exact("ipn.gauss_jacobi", ps.clone(), q.value, one.clone(), tol));
            self.push("ipn.gauss_jacobi", ps, outcome);

            let ps = params([("p", p.into()), ("n", n.into())]);
            let outcome = i_pn_quadrature(p as i64, n as i64, &QuadratureSpec::tanh_sinh(tol))
                .map(|q| {
                    let rec = VerificationRecord::float_vs_exact("ipn.tanh_sinh", ps.clone(), q.value, one.clone(), tol);
                    if q.underresolved {
                        rec.with_note("tanh-sinh refinement stopped before reaching its tolerance")
                    } else {
                        rec
                    }
                });
            self.push("ipn.tanh_sinh", ps, outcome);
        }
    }

    fn identities(&mut self) {
        if self.cfg.mode.exact() {
            for (p, n) in self.pn_grid() {
                let ps = params([("p", p.into()), ("n", n.into())]);
                self.push("identity.rhs_cross", ps.clone(), identity_rhs_cross(p as i64, n as i64));
                match identity_exact(p as i64, n as i64) {
                    Ok(recs) => self.records.extend(recs),
                    Err(e) => self.push("identity.gegenbauer_exact", ps, Err(e)),
                }
            }
        } else {
            self.skip("identity.rhs_cross");
            self.skip("identity.gegenbauer_exact");
            self.skip("identity.legendre_exact");
        }
        if !self.cfg.mode.float() {
            self.skip("identity.gegenbauer");
            self.skip("identity.legendre");
            return;
        }
        for (p, n) in self.pn_grid() {
            let nodes = (p + n + 1) as usize;
            let ps = params([("p", p.into()), ("n", n.into()), ("nodes", nodes.into())]);
            let spec = match QuadratureSpec::new(QuadratureKind::GaussLegendre, nodes, self.cfg.tol) {
                Ok(s) => s,
                Err(e) => {
                    self.push("identity.gegenbauer", ps, Err(e));
                    continue;
                }
            };
            self.push("identity.gegenbauer", ps.clone(), identity_gegenbauer(p as i64, n as i64, &spec));
            self.push("identity.legendre", ps, identity_legendre(p as i64, n as i64, &spec));
        }
    }

    fn operator(&mut self) {
        if !self.cfg.mode.float() {
            self.skip("operator.overlap");
            self.skip("operator.parity");
            self.skip("operator.unitarity");
            return;
        }
        let xis = self.cfg.xi.map_or(OPERATOR_XI_GRID.to_vec(), |x| vec![x]);
        let phis = self.cfg.phi.map_or(OPERATOR_PHI_GRID.to_vec(), |x| vec![x]);
        let (m_max, n_max) = (self.cfg.p_max, self.cfg.n_max);
        let top = 2 * m_max.max(n_max) as usize + 1;
        for &xi in &xis {
            for &phi in &phis {
                let dim = self.cfg.dim.unwrap_or_else(|| truncation_dim(top, xi));
                let grid = params([("xi", xi.into()), ("phi", phi.into()), ("dim", dim.into())]);
                let matrix = SqueezeParam::new(xi, phi).and_then(|param| Ok((squeeze_matrix(&param, dim)?, param)));
                let (d, param) = match matrix {
                    Ok(v) => v,
                    Err(e) => {
                        self.push("operator.unitarity", grid, Err(e));
                        continue;
                    }
                };
                let parity = d.parity_defect();
                self.records
                    .push(VerificationRecord::float("operator.parity", grid.clone(), parity, 0.0, 1e-12));
                let block = dim / 2;
                let defect = d.unitarity_defect(block);
                let mut ps = grid.clone();
                ps.push(("block".into(), block.into()));
                self.records
                    .push(VerificationRecord::float("operator.unitarity", ps, defect, 0.0, self.cfg.tol));
                for m in 0..=m_max {
                    for n in 0..=n_max {
                        let ps = params([
                            ("m", m.into()),
                            ("n", n.into()),
                            ("xi", param.xi_modulus().into()),
                            ("phi", param.phase().into()),
                            ("dim", dim.into()),
                        ]);
                        self.push("operator.overlap", ps, overlap_crosscheck_with(&d, m, n, &param));
                    }
                }
            }
        }
    }

    fn completeness(&mut self) {
        let p_max = self.cfg.p_max;
        let tol = self.cfg.tol;
        let one = BigRational::from_integer(1.into());
        if self.cfg.mode.exact() {
            for n in 0..=self.cfg.n_max {
                for p in 0..=p_max {
                    let (hi, lo) = if p >= n { (p, n) } else { (n, p) };
                    let ps = params([("n", n.into()), ("p", p.into())]);
                    let outcome = i_pn_exact_via(hi as i64, lo as i64, ExactPath::Racah)
                        .map(|v| VerificationRecord::exact("completeness.diagonal", ps.clone(), v, one.clone()));
                    self.push("completeness.diagonal", ps, outcome);
                }
            }
        } else {
            self.skip("completeness.diagonal");
        }
        if !self.cfg.mode.float() {
            self.skip("completeness.disc");
            self.skip("completeness.unitarity");
            return;
        }
        for n in 0..=self.cfg.n_max {
            let radial = disc_radial_nodes(n, p_max);
            let phase = 4 * (p_max + n) as usize + 4;
            let ps = params([
                ("n", n.into()),
                ("p_max", p_max.into()),
                ("radial_nodes", radial.into()),
                ("phase_nodes", phase.into()),
            ]);
            let outcome = QuadratureSpec::new(QuadratureKind::GaussJacobi, radial, tol)
                .and_then(|spec| disc_resolution_check(n, p_max, &spec, phase))
                .map(|x| VerificationRecord::float("completeness.disc", ps.clone(), identity_deviation(&x), 0.0, tol));
            self.push("completeness.disc", ps, outcome);

            for zeta in UNITARITY_ZETA_GRID {
                let ps = params([("n", n.into()), ("zeta", zeta.into())]);
                let outcome = ZetaPoint::new(zeta, 0.0)
                    .and_then(|z| unitarity_column_sum_adaptive(n, &z, tol))
                    .map(|(sum, m_max)| {
                        let mut ps = ps.clone();
                        ps.push(("m_max".into(), m_max.into()));
                        VerificationRecord::float("completeness.unitarity", ps, sum, 1.0, tol)
                    });
                self.push("completeness.unitarity", ps, outcome);
            }
        }
    }

    fn even_divergence(&mut self) {
        if !self.cfg.mode.float() {
            self.skip("even.sample");
            self.skip("even.slope");
            return;
        }
        let dim = self.cfg.dim.unwrap_or(DEFAULT_DIVERGENCE_DIM);
        let eps = divergence_epsilons();
        let samples = match even_divergence_probe(&eps, dim) {
            Ok(s) => s,
            Err(e) => {
                self.push("even.slope", params([("dim", dim.into())]), Err(e));
                return;
            }
        };
        for &(e, j) in &samples {
            let ps = params([("eps", e.into())]);
            self.records
                .push(VerificationRecord::float("even.sample", ps, j, even_divergence_analytic(e), self.cfg.tol));
        }
        let ps = params([("eps_min", eps[0].into()), ("eps_max", eps[eps.len() - 1].into())]);
        let monotone = samples.windows(2).all(|w| w[1].1 < w[0].1);
        let outcome = divergence_slope(&samples).map(|slope| {
            // relative error against -1/2 with tolerance 0.1 is |Δ| <= 0.05
            let rec = VerificationRecord::float("even.slope", ps.clone(), slope, -0.5, SLOPE_TOL / 0.5);
            if monotone {
                rec
            } else {
                rec.fail_with("truncated integral is not monotone in epsilon")
            }
        });
        self.push("even.slope", ps, outcome);
    }
}

fn exact_ipn_record(p: u64, n: u64, one: &BigRational) -> Result<VerificationRecord> {
    let racah = i_pn_exact_via(p as i64, n as i64, ExactPath::Racah)?;
    let beta = i_pn_exact_via(p as i64, n as i64, ExactPath::BetaExpansion)?;
    let ps = params([("p", p.into()), ("n", n.into())]);
    let rec = VerificationRecord::exact("ipn.exact", ps, racah.clone(), one.clone());
    if racah != beta {
        Ok(rec.fail_with(format!("exact paths disagree: beta expansion gives {beta}")))
    } else {
        Ok(rec)
    }
}

/// The `(lhs, rhs)` pair with the largest `|lhs - rhs| / max(1, |rhs|)`
/// over the grid.
fn worst_of<X>(grid: Vec<X>, mut f: impl FnMut(X) -> Result<(f64, f64)>) -> Result<(f64, f64)> {
    let mut worst: Option<(f64, (f64, f64))> = None;
    for x in grid {
        let (l, r) = f(x)?;
        let e = (l - r).abs() / r.abs().max(1.0);
        let e = if e.is_nan() { f64::INFINITY } else { e };
        if worst.is_none_or(|(w, _)| e > w) {
            worst = Some((e, (l, r)));
        }
    }
    worst.map(|(_, pair)| pair).ok_or_else(|| Error::InvalidSpec("empty grid".into()))
}
