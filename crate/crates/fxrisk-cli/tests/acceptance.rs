//! Acceptance gate: the nine headline checks of the whole artifact, one
//! test per check, each printing a single `[PASS]`/`[FAIL]` line (visible
//! with `--nocapture`) before asserting.
//!
//! Check 6 is expected to stay red on its first sub-property: the curve
//! offset at one ulp-of-probability above the original PD is of order
//! `1e-8` for every cell (it equals the curve's finite slope times the
//! `1e-9` probability offset), so no correct implementation can land
//! within the demanded `1e-9` of the limiting value. The test measures
//! the offsets, shows that they match an independently computed
//! reference to twelve digits, and then applies the stated bound
//! faithfully.

// Frozen oracle values keep their full 17-significant-digit printout so
// they can be diffed verbatim against the reference generator.
#![allow(clippy::excessive_precision)]

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fxrisk::model::{
    adjust_pair, adjusted_correlation, adjusted_pd, consistency_residual,
    homogeneous_adjusted_correlation, joint_default_probability, threshold_from_process,
};
use fxrisk::numerics::bivariate::bivariate_normal_cdf;
use fxrisk::numerics::cholesky::CorrMatrix3;
use fxrisk::numerics::normal::{std_normal_cdf, std_normal_quantile};
use fxrisk::simulation::{
    simulate_gbm_paths, simulate_reduced, standard_error, SimConfig,
};
use fxrisk::{
    AssetProcess64, BorrowerParams64, Correlation64, DebtSpec64, FxParams64, PairParams64,
    Probability64,
};

fn report(name: &str, pass: bool, detail: &str) -> bool {
    println!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn prob(p: f64) -> Probability64 {
    Probability64::new(p).unwrap()
}

fn corr(c: f64) -> Correlation64 {
    Correlation64::new(c).unwrap()
}

#[test]
fn a1_consistency_identity_holds_for_random_parameters() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1101);
    let mut max_residual = 0.0f64;
    for _ in 0..10_000 {
        let p1 = prob(rng.gen_range(0.001..0.45));
        let p2 = prob(rng.gen_range(0.001..0.45));
        let s1 = rng.gen_range(0.05..1.0);
        let s2 = rng.gen_range(0.05..1.0);
        let tau = rng.gen_range(1e-6..0.5);
        let rho = corr(rng.gen_range(-0.5..0.95));
        let b1 = BorrowerParams64::new(p1, s1, corr(0.0)).unwrap();
        let b2 = BorrowerParams64::new(p2, s2, corr(0.0)).unwrap();
        let pair =
            PairParams64::new(b1, b2, rho, FxParams64::new(0.0, tau).unwrap()).unwrap();
        let adj = adjust_pair(&pair).unwrap();
        let residual = consistency_residual(
            p1,
            p2,
            adj.pd1_star,
            adj.pd2_star,
            rho,
            adj.rho_star,
        )
        .unwrap();
        max_residual = max_residual.max(residual.abs());
    }
    let elapsed = start.elapsed();
    let pass = max_residual <= 1e-10 && elapsed.as_secs_f64() < 5.0;
    assert!(
        report(
            "consistency identity, 10^4 random parameter sets",
            pass,
            &format!("max |residual| = {max_residual:.3e}, {elapsed:.2?}"),
        ),
        "max residual {max_residual:.3e} (tolerance 1e-10), elapsed {elapsed:.2?}"
    );
}

#[test]
fn a2_homogeneous_and_general_adjustments_agree() {
    let start = Instant::now();
    let rho = corr(0.3);
    let sigma = 0.2;
    let mut max_diff = 0.0f64;
    for i in 0..100 {
        let p = prob(0.001 + 0.448 * i as f64 / 99.0);
        for j in 0..100 {
            let t = 0.01 + (3.0 - 0.01) * j as f64 / 99.0;
            let fx = FxParams64::new(0.0, t * sigma).unwrap();
            let b = BorrowerParams64::new(p, sigma, corr(0.0)).unwrap();
            let pair = PairParams64::new(b, b, rho, fx).unwrap();
            let adj = adjust_pair(&pair).unwrap();
            let homog = homogeneous_adjusted_correlation(p, rho, adj.pd1_star).unwrap();
            max_diff = max_diff.max((adj.rho_star.get() - homog.get()).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = max_diff <= 1e-12 && elapsed.as_secs_f64() < 5.0;
    assert!(
        report(
            "homogeneous vs general adjusted correlation, 100x100 grid",
            pass,
            &format!("max discrepancy = {max_diff:.3e}, {elapsed:.2?}"),
        ),
        "max discrepancy {max_diff:.3e} (tolerance 1e-12)"
    );
}

#[test]
fn a3_worked_example_reproduces() {
    let b = BorrowerParams64::new(prob(0.01), 0.2, corr(0.0)).unwrap();
    let fx = FxParams64::new(0.0, 0.1).unwrap();
    let p_star = adjusted_pd(&b, &fx).unwrap().get();
    let pair = PairParams64::new(b, b, corr(0.2), fx).unwrap();
    let rho_star = adjusted_correlation(&pair).unwrap().get();
    // Independent hand computation of the correlation target:
    // (0.2 + 0.5^2) / (0.5^2 + 1) = 0.45 / 1.25 = 0.36 exactly.
    let pd_ok = (p_star - 0.018727).abs() <= 1e-5;
    let rho_ok = (rho_star - 0.36).abs() <= 1e-12;
    let pass = pd_ok && rho_ok;
    assert!(
        report(
            "worked example",
            pass,
            &format!("p* = {p_star:.12}, rho* = {rho_star:.12}"),
        ),
        "p* = {p_star} (0.018727 ± 1e-5), rho* = {rho_star} (0.36 ± 1e-12)"
    );
}

/// Draws a random pair with nonzero FX-asset correlations, resampling
/// until the three-factor matrix is PSD.
fn random_pair(rng: &mut ChaCha8Rng) -> PairParams64 {
    loop {
        let p1 = prob(rng.gen_range(0.005..0.45));
        let p2 = prob(rng.gen_range(0.005..0.45));
        let s1 = rng.gen_range(0.05..1.0);
        let s2 = rng.gen_range(0.05..1.0);
        let tau = rng.gen_range(0.05..0.5);
        let nu = rng.gen_range(-0.1..0.1);
        let r1 = corr(rng.gen_range(-0.3..0.6));
        let r2 = corr(rng.gen_range(-0.3..0.6));
        let rho = corr(rng.gen_range(-0.5..0.95));
        let b1 = BorrowerParams64::new(p1, s1, r1).unwrap();
        let b2 = BorrowerParams64::new(p2, s2, r2).unwrap();
        let fx = FxParams64::new(nu, tau).unwrap();
        if let Ok(pair) = PairParams64::new(b1, b2, rho, fx) {
            return pair;
        }
    }
}

#[test]
fn a4_reduced_monte_carlo_matches_closed_forms() {
    let start = Instant::now();
    let n = 10_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(440);
    let mut passed = 0;
    let mut details = Vec::new();
    for k in 0..20u64 {
        let pair = random_pair(&mut rng);
        let adj = adjust_pair(&pair).unwrap();
        let joint = joint_default_probability(&adj);
        let cfg = SimConfig::reduced(n, 9000 + k).unwrap();
        let est = simulate_reduced(&pair, &cfg).unwrap();
        let nf = n as f64;
        let rho_star = adj.rho_star.get();
        let checks = [
            ("pd1", adj.pd1_star.get(), est.pd1_hat, standard_error(adj.pd1_star.get(), n)),
            ("pd2", adj.pd2_star.get(), est.pd2_hat, standard_error(adj.pd2_star.get(), n)),
            ("rho", rho_star, est.rho_hat, (1.0 - rho_star * rho_star) / nf.sqrt()),
            ("joint", joint, est.joint_default_hat, standard_error(joint, n)),
        ];
        let bad: Vec<String> = checks
            .iter()
            .filter(|(_, cf, hat, se)| (hat - cf).abs() > 3.0 * se)
            .map(|(what, cf, hat, se)| {
                format!("set {k} {what}: |{hat:.6e} - {cf:.6e}| > 3*{se:.2e}")
            })
            .collect();
        if bad.is_empty() {
            passed += 1;
        } else {
            details.extend(bad);
        }
    }
    let elapsed = start.elapsed();
    let pass = passed >= 19 && elapsed.as_secs_f64() < 120.0;
    let misses = if details.is_empty() {
        String::new()
    } else {
        format!("; misses: {details:?}")
    };
    assert!(
        report(
            "reduced-mode Monte Carlo vs closed forms, 20 sets at n=10^7",
            pass,
            &format!("{passed}/20 sets within 3 SE, {elapsed:.2?}{misses}"),
        ),
        "{passed}/20 sets within 3 SE (need >= 19), elapsed {elapsed:.2?}{misses}"
    );
}

#[test]
fn a5_path_and_reduced_modes_agree() {
    let start = Instant::now();
    let n = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(550);
    let mut all_ok = true;
    let mut details = Vec::new();
    for (k, &steps) in [1usize, 2, 4, 12, 52].iter().enumerate() {
        // Draw a process pair whose implied default probabilities are
        // large enough to estimate at this sample size.
        let (asset1, debt1, b1) = random_process(&mut rng);
        let (asset2, debt2, b2) = random_process(&mut rng);
        let tau = rng.gen_range(0.05..0.3);
        let fx = FxParams64::new(0.0, tau).unwrap();
        let rho = corr(rng.gen_range(0.0..0.8));
        let matrix = CorrMatrix3::new(b1.r(), b2.r(), rho).unwrap();

        let gbm_cfg = SimConfig::gbm(n, 7700 + k as u64, steps).unwrap();
        let gbm =
            simulate_gbm_paths(&asset1, &asset2, &debt1, &debt2, &fx, &matrix, &gbm_cfg)
                .unwrap();

        // The equivalent one-period pair is linked through the process
        // threshold: its PD is the no-FX default probability.
        let pair = PairParams64::new(b1, b2, rho, fx).unwrap();
        let red_cfg = SimConfig::reduced(n, 8800 + k as u64).unwrap();
        let red = simulate_reduced(&pair, &red_cfg).unwrap();

        for (what, g, r, se_g, se_r) in [
            ("pd1", gbm.pd1_hat, red.pd1_hat, gbm.se_pd1, red.se_pd1),
            ("pd2", gbm.pd2_hat, red.pd2_hat, gbm.se_pd2, red.se_pd2),
            ("rho", gbm.rho_hat, red.rho_hat, gbm.se_rho, red.se_rho),
            (
                "joint",
                gbm.joint_default_hat,
                red.joint_default_hat,
                gbm.se_joint,
                red.se_joint,
            ),
        ] {
            let combined = (se_g * se_g + se_r * se_r).sqrt();
            if (g - r).abs() > 3.0 * combined {
                all_ok = false;
                details.push(format!(
                    "set {k} ({steps} steps) {what}: |{g:.6e} - {r:.6e}| > 3*{combined:.2e}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = all_ok && elapsed.as_secs_f64() < 60.0;
    assert!(
        report(
            "GBM-path vs reduced mode, 5 linked sets at n=10^6",
            pass,
            &format!("all quantities within 3 combined SE, {elapsed:.2?}; {details:?}"),
        ),
        "elapsed {elapsed:.2?}: {details:?}"
    );
}

/// Draws a GBM process plus debt whose implied one-period borrower has a
/// default probability in (1e-4, 0.2), so Monte Carlo rates at n = 10^6
/// carry meaningful standard errors.
fn random_process(rng: &mut ChaCha8Rng) -> (AssetProcess64, DebtSpec64, BorrowerParams64) {
    loop {
        let a0 = rng.gen_range(50.0..200.0);
        let mu = rng.gen_range(-0.05..0.15);
        let sigma = rng.gen_range(0.1..0.5);
        let f0 = rng.gen_range(0.5..2.0);
        let ratio = rng.gen_range(0.3..0.8);
        let asset = AssetProcess64::new(a0, mu, sigma).unwrap();
        let debt = DebtSpec64::new(ratio * a0 * f0, f0).unwrap();
        let c = threshold_from_process(&asset, &debt);
        let pd = std_normal_cdf(c).unwrap();
        if pd > 1e-4 && pd < 0.2 {
            let r = corr(rng.gen_range(-0.2..0.5));
            let b = BorrowerParams64::new(prob(pd), sigma, r).unwrap();
            return (asset, debt, b);
        }
    }
}

#[test]
fn a6_curve_limit_saturation_and_concavity() {
    // Reference offsets |rho*(p + 1e-9) - rho|, computed independently
    // with high-precision arithmetic before the build. Each equals the
    // curve's (finite, nonzero) right-hand slope at p times 1e-9.
    let reference: [(f64, f64, f64); 9] = [
        (0.005, 0.1, 4.83276e-8),
        (0.005, 0.2, 4.29578e-8),
        (0.005, 0.4, 3.22184e-8),
        (0.01, 0.1, 2.90312e-8),
        (0.01, 0.2, 2.58056e-8),
        (0.01, 0.4, 1.93542e-8),
        (0.05, 0.1, 1.06105e-8),
        (0.05, 0.2, 9.43157e-9),
        (0.05, 0.4, 7.07368e-9),
    ];
    let mut max_offset = 0.0f64;
    let mut saturation_ok = true;
    let mut concave_ok = true;
    for &(p_raw, rho_raw, expected_offset) in &reference {
        let p = prob(p_raw);
        let rho = corr(rho_raw);

        // (a) limiting value: rho*(p + 1e-9) should be within 1e-9 of rho.
        let near = homogeneous_adjusted_correlation(p, rho, prob(p_raw + 1e-9))
            .unwrap()
            .get();
        let offset = (near - rho_raw).abs();
        // The measurement itself must match the independent reference —
        // the red bound below indicts the demanded tolerance, not the
        // implementation.
        assert!(
            (offset - expected_offset).abs() <= 1e-12,
            "cell (p={p_raw}, rho={rho_raw}): measured offset {offset:.6e} \
             deviates from the independent reference {expected_offset:.6e}"
        );
        max_offset = max_offset.max(offset);

        // (b) saturation: the curve exceeds 0.999 at p* = 0.4999.
        let high = homogeneous_adjusted_correlation(p, rho, prob(0.4999))
            .unwrap()
            .get();
        saturation_ok &= high > 0.999;

        // (c) concavity: second differences on a 1000-point grid.
        let lo = p_raw + 1e-4;
        let hi = 0.4999;
        let values: Vec<f64> = (0..1000)
            .map(|i| {
                let ps = lo + (hi - lo) * i as f64 / 999.0;
                homogeneous_adjusted_correlation(p, rho, prob(ps))
                    .unwrap()
                    .get()
            })
            .collect();
        concave_ok &= values
            .windows(3)
            .all(|w| w[2] - 2.0 * w[1] + w[0] <= 0.0);
    }
    let limit_ok = max_offset <= 1e-9;
    let pass = limit_ok && saturation_ok && concave_ok;
    assert!(
        report(
            "curve limit / saturation / concavity, 9 cells",
            pass,
            &format!(
                "limit offsets at p+1e-9: max {max_offset:.3e} vs bound 1e-9 ({}); \
                 saturation > 0.999 ({}); concave second differences ({})",
                ok(limit_ok),
                ok(saturation_ok),
                ok(concave_ok),
            ),
        ),
        "limit offsets reach {max_offset:.3e} > 1e-9 on every cell: the curve's \
         right-hand slope at p is finite and of order 10 to 50 per unit of \
         probability, so the value 1e-9 above p sits about slope * 1e-9 — i.e. \
         1e-8 to 5e-8 — above rho for all nine (p, rho) cells, and no correct \
         implementation can meet a 1e-9 bound there; saturation {} and \
         concavity {} hold",
        ok(saturation_ok),
        ok(concave_ok),
    );
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "violated"
    }
}

#[test]
fn a7_adjustment_is_strictly_increasing_below_the_median() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(770);
    let mut monotone = true;
    for _ in 0..100_000 {
        let p = rng.gen_range(1e-6..0.5);
        let sigma = rng.gen_range(0.05..1.0);
        let tau = rng.gen_range(1e-6..0.5);
        let b = BorrowerParams64::new(prob(p), sigma, corr(0.0)).unwrap();
        let fx = FxParams64::new(0.0, tau).unwrap();
        let p_star = adjusted_pd(&b, &fx).unwrap().get();
        if p_star <= p {
            monotone = false;
            break;
        }
    }
    // Boundary converse: at p = 0.5 the adjustment is the identity.
    let b = BorrowerParams64::new(prob(0.5), 0.3, corr(0.0)).unwrap();
    let fx = FxParams64::new(0.0, 0.2).unwrap();
    let at_half = adjusted_pd(&b, &fx).unwrap().get();
    let boundary = at_half == 0.5;
    let elapsed = start.elapsed();
    let pass = monotone && boundary;
    assert!(
        report(
            "p* > p below the median, 10^5 draws; p* = p at the median",
            pass,
            &format!(
                "strictly increasing ({}), p*(0.5) = {at_half} exactly ({}), {elapsed:.2?}",
                ok(monotone),
                ok(boundary),
            ),
        ),
        "monotone: {monotone}, boundary: {boundary}"
    );
}

/// Thirty-point quantile reference computed by an independent
/// high-precision oracle before the build.
const QUANTILE_REFERENCE: &[(f64, f64)] = &[
    (1e-9, -5.9978070150076869),
    (1e-8, -5.6120012441747887),
    (1e-7, -5.1993375821928169),
    (1e-6, -4.7534243088228989),
    (1e-5, -4.2648907939228246),
    (1e-4, -3.7190164854556806),
    (0.001, -3.0902323061678135),
    (0.0025, -2.8070337683438041),
    (0.005, -2.5758293035489008),
    (0.01, -2.3263478740408411),
    (0.018727, -2.0807805198308737),
    (0.025, -1.9599639845400542),
    (0.05, -1.6448536269514727),
    (0.1, -1.2815515655446005),
    (0.15, -1.0364333894937896),
    (0.2, -0.84162123357291421),
    (0.25, -0.67448975019608174),
    (0.3, -0.52440051270804078),
    (0.4, -0.25334710313579980),
    (0.45, -0.12566134685507403),
    (0.5, 0.0),
    (0.55, 0.12566134685507403),
    (0.6, 0.25334710313579980),
    (0.7, 0.52440051270804078),
    (0.8, 0.84162123357291421),
    (0.9, 1.2815515655446005),
    (0.95, 1.6448536269514727),
    (0.975, 1.9599639845400542),
    (0.99, 2.3263478740408411),
    (0.999, 3.0902323061678135),
];

#[test]
fn a8_normal_quantile_and_bivariate_accuracy() {
    // Quantile against the frozen reference table.
    let mut max_q = 0.0f64;
    for &(p, expected) in QUANTILE_REFERENCE {
        let got = std_normal_quantile(prob(p));
        max_q = max_q.max((got - expected).abs());
    }
    let quantile_ok = max_q <= 1e-8;

    // Round trip p -> quantile -> CDF over a wide probability range, and
    // x -> CDF -> quantile over |x| <= 5 (beyond ~5.6 the CDF rounds to
    // within a few ulp of 1 and no f64 implementation can return).
    let mut max_p = 0.0f64;
    for i in 1..2000 {
        let p = i as f64 / 2000.0;
        max_p = max_p.max((std_normal_cdf(std_normal_quantile(prob(p))).unwrap() - p).abs());
    }
    for &p in &[1e-12, 1e-9, 1e-6, 1e-4, 1.0 - 1e-6, 1.0 - 1e-9] {
        max_p = max_p.max((std_normal_cdf(std_normal_quantile(prob(p))).unwrap() - p).abs());
    }
    let mut max_x = 0.0f64;
    for i in 0..=1000 {
        let x = -5.0 + 10.0 * i as f64 / 1000.0;
        let q = std_normal_quantile(Probability64::new(std_normal_cdf(x).unwrap()).unwrap());
        max_x = max_x.max((q - x).abs());
    }
    let roundtrip_ok = max_p <= 1e-9 && max_x <= 1e-9;

    // Bivariate CDF at the origin against the arcsine closed form.
    let mut max_b = 0.0f64;
    for i in -9..=9 {
        let r = i as f64 / 10.0;
        let got = bivariate_normal_cdf(0.0, 0.0, corr(r)).unwrap();
        let exact = 0.25 + r.asin() / (2.0 * std::f64::consts::PI);
        max_b = max_b.max((got - exact).abs());
    }
    let bivariate_ok = max_b <= 5e-9;

    let pass = quantile_ok && roundtrip_ok && bivariate_ok;
    assert!(
        report(
            "normal quantile, round trips, bivariate CDF",
            pass,
            &format!(
                "quantile table max {max_q:.2e} ({}); round trips max p {max_p:.2e} / \
                 x {max_x:.2e} ({}); bivariate arcsine max {max_b:.2e} ({})",
                ok(quantile_ok),
                ok(roundtrip_ok),
                ok(bivariate_ok),
            ),
        ),
        "quantile {max_q:.2e}, round trip p {max_p:.2e} x {max_x:.2e}, bivariate {max_b:.2e}"
    );
}

// ---------------------------------------------------------------------
// CLI pipeline golden test.

fn fxrisk_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fxrisk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write fixture");
    path.to_string_lossy().into_owned()
}

/// Ten borrowers with a spread of PDs and volatilities, twelve pairs,
/// zero FX-asset correlations so the adjusted file must check clean.
const TEN_BORROWERS: &str = "\
# ten-borrower acceptance portfolio
[fx]
nu = 0.0
tau = 0.12

[borrowers]
id,pd,sigma,r
b01,0.001,0.15,0.0
b02,0.003,0.20,0.0
b03,0.005,0.25,0.0
b04,0.010,0.20,0.0
b05,0.020,0.30,0.0
b06,0.030,0.35,0.0
b07,0.050,0.40,0.0
b08,0.080,0.50,0.0
b09,0.120,0.60,0.0
b10,0.200,0.80,0.0

[pairs]
id1,id2,rho
b01,b02,0.10
b01,b10,0.35
b02,b03,0.15
b03,b04,0.20
b04,b05,0.25
b05,b06,0.30
b06,b07,0.12
b07,b08,0.18
b08,b09,0.40
b09,b10,0.22
b02,b09,-0.15
b04,b08,0.05
";

#[test]
fn a9_cli_pipeline_golden() {
    let dir = tempfile::tempdir().unwrap();
    let book = write(dir.path(), "book.txt", TEN_BORROWERS);
    let adjusted = dir.path().join("adjusted.csv");
    let adjusted_str = adjusted.to_string_lossy().into_owned();

    // adjust twice: identical bytes, then check exits 0.
    let first = fxrisk_bin(&["adjust", &book, "--output", &adjusted_str]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let bytes_one = std::fs::read(&adjusted).unwrap();
    let second = fxrisk_bin(&["adjust", &book, "--output", &adjusted_str]);
    assert!(second.status.success());
    let bytes_two = std::fs::read(&adjusted).unwrap();
    let stable = bytes_one == bytes_two;

    let check = fxrisk_bin(&["check", &adjusted_str]);
    let clean = check.status.code() == Some(0);

    // Corrupt one adjusted correlation and check again.
    let text = String::from_utf8(bytes_one.clone()).unwrap();
    let target_row = text.lines().nth(5).unwrap();
    let rho_star = target_row.rsplit(',').next().unwrap();
    let corrupted_row = target_row.replace(rho_star, "0.990000000000");
    let corrupted_text = text.replace(target_row, &corrupted_row);
    assert_ne!(text, corrupted_text, "corruption must change the file");
    let corrupted = write(dir.path(), "corrupted.csv", &corrupted_text);
    let check_bad = fxrisk_bin(&["check", &corrupted]);
    let flagged = check_bad.status.code() == Some(1);

    let pass = stable && clean && flagged;
    assert!(
        report(
            "CLI pipeline golden, 10 borrowers / 12 pairs",
            pass,
            &format!(
                "byte-identical reruns ({}); adjust|check exits 0 ({}); \
                 corrupted rho_star exits 1 ({})",
                ok(stable),
                ok(clean),
                ok(flagged),
            ),
        ),
        "stable: {stable}, clean: {clean} ({}), flagged: {flagged} ({})",
        String::from_utf8_lossy(&check.stderr),
        String::from_utf8_lossy(&check_bad.stderr),
    );
}
