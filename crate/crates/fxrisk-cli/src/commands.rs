//! The four subcommands, as pure functions from parsed arguments to an
//! output string or a [`Failure`].
//!
//! Exit-code policy (see the `Failure` mapping here and in
//! [`crate::portfolio`]): 0 success, 1 consistency violation, 2 parse or
//! input validation, 3 model validity (non-PSD matrix, degenerate latent
//! variance), 4 domain violation (arguments outside an operation's
//! mathematical domain). Library errors carry their category, so the
//! mapping is mechanical: model-validity errors become 3, everything
//! else a library call rejects becomes 4.

use std::path::{Path, PathBuf};

use fxrisk::model::{
    adjust_pair, consistency_check, fx_drift_for_unit_mean, homogeneous_adjusted_correlation,
    joint_default_probability, threshold_from_process,
};
use fxrisk::numerics::normal::std_normal_cdf;
use fxrisk::simulation::{simulate_gbm_paths, simulate_reduced, standard_error, SimConfig};
use fxrisk::{BorrowerParams64, Correlation64, FxParams64, PairParams64, Probability64};

use crate::numfmt::format_sig12;
use crate::portfolio::{parse_adjusted, parse_curve_spec, parse_portfolio, read_file, Portfolio};
use crate::{Failure, FxFlags, Mode};

/// Maps a library error to its exit code, prefixed with the failing
/// row or field.
fn model_failure(prefix: &str, e: fxrisk::Error) -> Failure {
    let code = match e {
        fxrisk::Error::ModelValidity(_) => 3,
        _ => 4,
    };
    Failure::new(code, format!("{prefix}: {e}"))
}

/// Writes `content` to `path`, or to stdout when no path was given.
fn write_output(path: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Failure::new(2, format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Resolves FX parameters from the `[fx]` section and the flags. Flags
/// override the file; `nu` defaults to 0; `--unit-mean-fx` pins
/// `nu = -tau^2/2` so the FX rate has unit expectation in levels.
fn resolve_fx(pf: &Portfolio, flags: &FxFlags) -> Result<FxParams64, Failure> {
    let tau = flags.tau.or(pf.file_tau).ok_or_else(|| {
        Failure::new(
            2,
            "fx: tau is required (set it in the [fx] section or with --tau)".to_string(),
        )
    })?;
    let nu = if flags.unit_mean_fx {
        fx_drift_for_unit_mean(tau).map_err(|e| Failure::new(2, format!("fx: {e}")))?
    } else {
        flags.nu.or(pf.file_nu).unwrap_or(0.0)
    };
    FxParams64::new(nu, tau).map_err(|e| Failure::new(2, format!("fx: {e}")))
}

/// `adjust`: one output row per pair with original and FX-adjusted
/// parameters.
pub fn cmd_adjust(
    portfolio: &Path,
    output: Option<&PathBuf>,
    flags: &FxFlags,
) -> Result<(), Failure> {
    let pf = parse_portfolio(&read_file(portfolio)?)?;
    let fx = resolve_fx(&pf, flags)?;
    let mut out = String::from("id1,id2,p1,p2,rho,p1_star,p2_star,rho_star\n");
    for pair in &pf.pairs {
        let b1 = &pf.borrowers[pair.i1];
        let b2 = &pf.borrowers[pair.i2];
        let prefix = format!("line {}: pair {},{}", pair.line, pair.id1, pair.id2);
        let pp = PairParams64::new(b1.params, b2.params, pair.rho, fx)
            .map_err(|e| model_failure(&prefix, e))?;
        let adj = adjust_pair(&pp).map_err(|e| model_failure(&prefix, e))?;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            pair.id1,
            pair.id2,
            format_sig12(b1.params.pd().get()),
            format_sig12(b2.params.pd().get()),
            format_sig12(pair.rho.get()),
            format_sig12(adj.pd1_star.get()),
            format_sig12(adj.pd2_star.get()),
            format_sig12(adj.rho_star.get()),
        ));
    }
    write_output(output, &out)
}

/// `check`: per-row consistency residuals; exit 1 when any |residual|
/// exceeds the tolerance.
pub fn cmd_check(
    adjusted: &Path,
    tolerance: f64,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Failure::new(
            2,
            format!("check: tolerance must be a positive number, got {tolerance}"),
        ));
    }
    let rows = parse_adjusted(&read_file(adjusted)?)?;
    let mut out = String::from("id1,id2,residual,implied_rho_star_gap\n");
    let mut violation: Option<Failure> = None;
    for row in &rows {
        let prefix = format!("line {}: pair {},{}", row.line, row.id1, row.id2);
        let report = consistency_check(
            row.p1,
            row.p2,
            row.p1_star,
            row.p2_star,
            row.rho,
            row.rho_star,
        )
        .map_err(|e| model_failure(&prefix, e))?;
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.id1,
            row.id2,
            format_sig12(report.residual),
            format_sig12(report.implied_rho_star_gap),
        ));
        if violation.is_none() && report.residual.abs() > tolerance {
            violation = Some(Failure::new(
                1,
                format!(
                    "{prefix}: residual {} exceeds tolerance {tolerance}",
                    format_sig12(report.residual),
                ),
            ));
        }
    }
    write_output(output, &out)?;
    match violation {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

/// Arguments of `curve` after clap parsing.
pub struct CurveInputs<'a> {
    pub spec: Option<&'a PathBuf>,
    pub p: Option<f64>,
    pub rho: Option<f64>,
    pub grid: Option<&'a [f64]>,
    pub points: Option<usize>,
    pub max: f64,
}

/// `curve`: homogeneous adjusted-correlation curve over a grid of
/// adjusted PDs.
pub fn cmd_curve(inputs: &CurveInputs, output: Option<&PathBuf>) -> Result<(), Failure> {
    let (p_raw, rho_raw, grid) = match inputs.spec {
        Some(path) => parse_curve_spec(&read_file(path)?)?,
        None => {
            let need = |flag: &str| {
                Failure::new(
                    2,
                    format!("curve: {flag} is required when no spec file is given"),
                )
            };
            let p = inputs.p.ok_or_else(|| need("--p"))?;
            let rho = inputs.rho.ok_or_else(|| need("--rho"))?;
            let grid = if let Some(g) = inputs.grid {
                g.to_vec()
            } else if let Some(n) = inputs.points {
                if n == 0 {
                    return Err(Failure::new(2, "curve: --points must be at least 1".into()));
                }
                if !(inputs.max > p && inputs.max < 0.5) {
                    return Err(Failure::new(
                        2,
                        format!("curve: --max must lie in (p, 0.5), got {}", inputs.max),
                    ));
                }
                (1..=n)
                    .map(|i| p + (inputs.max - p) * i as f64 / n as f64)
                    .collect()
            } else {
                return Err(Failure::new(2, "curve: provide --grid or --points".into()));
            };
            (p, rho, grid)
        }
    };
    let p = Probability64::new(p_raw).map_err(|e| Failure::new(2, format!("curve: p: {e}")))?;
    if p.get() >= 0.5 {
        return Err(Failure::new(
            2,
            format!("curve: p must lie below 0.5, got {p_raw}"),
        ));
    }
    let rho =
        Correlation64::new(rho_raw).map_err(|e| Failure::new(2, format!("curve: rho: {e}")))?;
    if rho.get() >= 1.0 {
        return Err(Failure::new(2, "curve: rho must lie below 1".into()));
    }
    let mut prev = p_raw;
    for (i, &g) in grid.iter().enumerate() {
        // `ascending` is false for NaN entries too, which `g <= prev`
        // would let through.
        let ascending = g > prev;
        if !ascending || g >= 0.5 {
            return Err(Failure::new(
                2,
                format!(
                    "curve: grid[{i}] = {g}: grid must be strictly increasing inside (p, 0.5)"
                ),
            ));
        }
        prev = g;
    }
    let mut out = String::from("p_star,rho_star\n");
    for &g in &grid {
        let p_star =
            Probability64::new(g).map_err(|e| Failure::new(2, format!("curve: grid: {e}")))?;
        let rho_star = homogeneous_adjusted_correlation(p, rho, p_star)
            .map_err(|e| model_failure(&format!("grid point {g}"), e))?;
        out.push_str(&format!(
            "{},{}\n",
            format_sig12(g),
            format_sig12(rho_star.get())
        ));
    }
    write_output(output, &out)
}

/// Arguments of `simulate` after clap parsing.
pub struct SimulateInputs<'a> {
    pub portfolio: &'a PathBuf,
    pub n: usize,
    pub seed: u64,
    pub mode: Mode,
    pub steps: usize,
}

/// `simulate`: per pair, closed forms next to Monte Carlo estimates
/// with a PASS/FAIL flag at three standard errors. The flag reports
/// statistical agreement only; it never changes the exit code.
pub fn cmd_simulate(
    inputs: &SimulateInputs,
    output: Option<&PathBuf>,
    flags: &FxFlags,
) -> Result<(), Failure> {
    if inputs.n == 0 {
        return Err(Failure::new(2, "simulate: --n must be at least 1".into()));
    }
    if inputs.steps == 0 {
        return Err(Failure::new(2, "simulate: --steps must be at least 1".into()));
    }
    let pf = parse_portfolio(&read_file(inputs.portfolio)?)?;
    let fx = resolve_fx(&pf, flags)?;
    let mut out = String::from("id1,id2,quantity,closed_form,estimate,std_error,flag\n");
    for (k, pair) in pf.pairs.iter().enumerate() {
        let b1 = &pf.borrowers[pair.i1];
        let b2 = &pf.borrowers[pair.i2];
        let prefix = format!("line {}: pair {},{}", pair.line, pair.id1, pair.id2);
        // Each pair draws from its own deterministic seed so output is
        // reproducible and pairs with identical parameters still get
        // independent noise.
        let seed = inputs.seed.wrapping_add(k as u64);
        let (adj, est) = match inputs.mode {
            Mode::Reduced => {
                let pp = PairParams64::new(b1.params, b2.params, pair.rho, fx)
                    .map_err(|e| model_failure(&prefix, e))?;
                let adj = adjust_pair(&pp).map_err(|e| model_failure(&prefix, e))?;
                let cfg = SimConfig::reduced(inputs.n, seed)
                    .map_err(|e| model_failure(&prefix, e))?;
                let est = simulate_reduced(&pp, &cfg).map_err(|e| model_failure(&prefix, e))?;
                (adj, est)
            }
            Mode::GbmPath => {
                let process = |b: &crate::portfolio::Borrower| {
                    b.process.as_ref().copied().ok_or_else(|| {
                        Failure::new(
                            2,
                            format!(
                                "line {}: borrower '{}' lacks the process columns \
                                 (a0,mu,debt,f0) required by gbm_path mode",
                                b.line, b.id
                            ),
                        )
                    })
                };
                let (asset1, debt1) = process(b1)?;
                let (asset2, debt2) = process(b2)?;
                // Closed forms come from the equivalent one-period
                // borrowers implied by the processes.
                let equivalent = |asset, debt, b: &crate::portfolio::Borrower| {
                    let c = threshold_from_process(asset, debt);
                    let pd = std_normal_cdf(c).map_err(|e| model_failure(&prefix, e))?;
                    let pd = Probability64::new(pd).map_err(|e| {
                        Failure::new(3, format!("{prefix}: process-implied pd: {e}"))
                    })?;
                    BorrowerParams64::new(pd, b.params.sigma(), b.params.r())
                        .map_err(|e| model_failure(&prefix, e))
                };
                let eq1 = equivalent(&asset1, &debt1, b1)?;
                let eq2 = equivalent(&asset2, &debt2, b2)?;
                let pp = PairParams64::new(eq1, eq2, pair.rho, fx)
                    .map_err(|e| model_failure(&prefix, e))?;
                let adj = adjust_pair(&pp).map_err(|e| model_failure(&prefix, e))?;
                let cfg = SimConfig::gbm(inputs.n, seed, inputs.steps)
                    .map_err(|e| model_failure(&prefix, e))?;
                let est = simulate_gbm_paths(
                    &asset1,
                    &asset2,
                    &debt1,
                    &debt2,
                    &fx,
                    pp.corr_matrix(),
                    &cfg,
                )
                .map_err(|e| model_failure(&prefix, e))?;
                (adj, est)
            }
        };
        let joint = joint_default_probability(&adj);
        // The PASS band uses the standard error implied by the closed
        // form (the null hypothesis), not by the estimate: a small run
        // that happens to see zero defaults has an estimated SE of zero,
        // which would turn sampling noise into a spurious FAIL.
        let n = inputs.n;
        let se = |rate: f64| standard_error(rate, n);
        let se_rho = (1.0 - adj.rho_star.get().powi(2)) / (n as f64).sqrt();
        sim_row(&mut out, pair, "pd1", adj.pd1_star.get(), est.pd1_hat, se(adj.pd1_star.get()));
        sim_row(&mut out, pair, "pd2", adj.pd2_star.get(), est.pd2_hat, se(adj.pd2_star.get()));
        sim_row(&mut out, pair, "rho", adj.rho_star.get(), est.rho_hat, se_rho);
        sim_row(&mut out, pair, "joint", joint, est.joint_default_hat, se(joint));
    }
    write_output(output, &out)
}

fn sim_row(
    out: &mut String,
    pair: &crate::portfolio::PairRow,
    name: &str,
    closed_form: f64,
    estimate: f64,
    se: f64,
) {
    let flag = if (estimate - closed_form).abs() <= 3.0 * se {
        "PASS"
    } else {
        "FAIL"
    };
    out.push_str(&format!(
        "{},{},{name},{},{},{},{flag}\n",
        pair.id1,
        pair.id2,
        format_sig12(closed_form),
        format_sig12(estimate),
        format_sig12(se),
    ));
}
