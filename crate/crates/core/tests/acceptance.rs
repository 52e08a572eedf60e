//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lambdamin::beta2::{alpha2_cross_term, alpha2_factored_term, laguerre_poly, q_alpha2_sum, Beta2Series};
use lambdamin::exact::{moment, q_oracle_n2, ExactSeries};
use lambdamin::jack::{enumerate_partitions, jack_c_one};
use lambdamin::limit::{density_discrepancy, p_limit, q_limit, q_limit_closed, LimitParams};
use lambdamin::numerics::Rational;
use lambdamin::sampler::{ks_two_sample, ks_validate, run_batch};
use lambdamin::{par, EnsembleParams, SeriesAccuracy};

type Criterion = (&'static str, fn() -> Verdict, Duration);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn acc() -> SeriesAccuracy {
    SeriesAccuracy::default()
}

fn params(beta: f64, n: usize, m: usize) -> EnsembleParams {
    EnsembleParams::new(beta, n, m).expect("valid parameters")
}

/// `points` evenly spaced values on `[0, 1/N]`, both ends included.
fn support_grid(n: usize, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| i as f64 / ((points - 1) as f64 * n as f64))
        .collect()
}

fn mean_of_complex_square() -> Verdict {
    let mut worst = 0.0f64;
    for n in 2..=8usize {
        match moment(&params(2.0, n, n), 1, &acc()) {
            Ok(mu) => worst = worst.max((mu * (n * n * n) as f64 - 1.0).abs()),
            Err(e) => return verdict(false, format!("N = {n}: {e}")),
        }
    }
    verdict(worst <= 1e-12, format!("max relative error {worst:.2e} (tol 1e-12)"))
}

fn oracle_equivalence_two_eigenvalues() -> Verdict {
    let cases = [(2.0, 2), (2.0, 3), (2.0, 4), (1.0, 4), (1.0, 6), (4.0, 3), (4.0, 4)];
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for &(beta, m) in &cases {
        let p = params(beta, 2, m);
        let series = match ExactSeries::new(&p, &acc()) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("(β={beta}, M={m}): {e}"));
                continue;
            }
        };
        let errs = par::map_slice(&support_grid(2, 50), |&x| -> lambdamin::Result<f64> {
            Ok((series.q(x)? - q_oracle_n2(&p, x, 1e-12)?).abs())
        });
        for e in errs {
            match e {
                Ok(d) => worst = worst.max(d),
                Err(e) => failures.push(format!("(β={beta}, M={m}): {e}")),
            }
        }
    }
    let mut detail = format!("max |series − quadrature| {worst:.2e} over evaluable cases (tol 1e-8)");
    if !failures.is_empty() {
        detail.push_str(&format!("; not evaluable: {}", failures.join("; ")));
    }
    verdict(failures.is_empty() && worst <= 1e-8, detail)
}

fn route_agreement_complex() -> Verdict {
    let mut worst_routes = 0.0f64;
    let mut worst_sum = 0.0f64;
    for n in 1..=6usize {
        for alpha in 0..=3usize {
            let jack = match ExactSeries::new(&params(2.0, n, n + alpha), &acc()) {
                Ok(s) => s,
                Err(e) => return verdict(false, format!("N={n} α={alpha}: {e}")),
            };
            let det = match Beta2Series::new(n, n + alpha) {
                Ok(s) => s,
                Err(e) => return verdict(false, format!("N={n} α={alpha}: {e}")),
            };
            for x in support_grid(n, 50) {
                let (a, b) = match (jack.q(x), det.q(x)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return verdict(false, format!("N={n} α={alpha} x={x}: {e}")),
                };
                worst_routes = worst_routes.max((a - b).abs());
                if alpha == 2 {
                    match q_alpha2_sum(n, x) {
                        Ok(s) => worst_sum = worst_sum.max((s - b).abs()),
                        Err(e) => return verdict(false, format!("double sum N={n} x={x}: {e}")),
                    }
                }
            }
        }
    }
    verdict(
        worst_routes <= 1e-10 && worst_sum <= 1e-12,
        format!("determinant vs Jack {worst_routes:.2e} (tol 1e-10), double sum vs determinant {worst_sum:.2e} (tol 1e-12)"),
    )
}

const LIMIT_YS: [f64; 8] = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0];

fn closed_form_limits() -> Verdict {
    let cases = [(1.0, 0), (2.0, 0), (4.0, 0), (1.0, 1), (2.0, 1), (4.0, 1), (2.0, 2)];
    let mut worst = 0.0f64;
    for &(beta, m) in &cases {
        let lp = LimitParams::new(beta, m).expect("valid");
        for &y in &LIMIT_YS {
            let closed = match q_limit_closed(&lp, y) {
                Ok(Some(c)) => c,
                Ok(None) => return verdict(false, format!("no closed form for β={beta} m={m}")),
                Err(e) => return verdict(false, e.to_string()),
            };
            match q_limit(&lp, y, &acc()) {
                Ok(s) => worst = worst.max((s - closed).abs()),
                Err(e) => return verdict(false, format!("β={beta} m={m} y={y}: {e}")),
            }
        }
    }
    verdict(worst <= 1e-10, format!("max |series − closed form| {worst:.2e} (tol 1e-10)"))
}

fn finite_n_convergence() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for m in 0..=2usize {
        let lp = LimitParams::new(2.0, m).expect("valid");
        let mut errs = Vec::new();
        for &n in &[10usize, 20, 40] {
            let s = match ExactSeries::new(&params(2.0, n, n + m), &acc()) {
                Ok(s) => s,
                Err(e) => return verdict(false, format!("m={m} N={n}: {e}")),
            };
            let scale = 4.0 * (n * n * n) as f64;
            let mut worst = 0.0f64;
            for &y in &[1.0, 4.0, 9.0] {
                match (s.q(y / scale), q_limit(&lp, y, &acc())) {
                    (Ok(a), Ok(b)) => worst = worst.max((a - b).abs()),
                    (Err(e), _) | (_, Err(e)) => return verdict(false, format!("m={m} N={n} y={y}: {e}")),
                }
            }
            errs.push(worst);
        }
        let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
        let small = errs[2] <= 0.02;
        pass &= decreasing && small;
        parts.push(format!(
            "m={m}: {:.4} → {:.4} → {:.4}{}",
            errs[0],
            errs[1],
            errs[2],
            if small { "" } else { " (exceeds 0.02 at N=40)" }
        ));
    }
    verdict(pass, parts.join("; "))
}

fn jack_normalization() -> Verdict {
    let mut worst = 0.0f64;
    for &nu in &[0.5, 1.0, 2.0] {
        for m in 1..=4usize {
            for k in 0..=8usize {
                let mut sum = 0.0;
                for kappa in enumerate_partitions(k, m, None) {
                    match jack_c_one(&kappa, nu, m) {
                        Ok(c) => sum += c,
                        Err(e) => return verdict(false, e.to_string()),
                    }
                }
                worst = worst.max((sum - (m as f64).powi(k as i32)).abs());
            }
        }
    }
    verdict(worst <= 1e-10, format!("max |Σ C_κ(1^m) − m^k| {worst:.2e} (tol 1e-10)"))
}

fn monte_carlo_agreement() -> Verdict {
    let workers = par::available_workers();
    let count = 20_000;
    let mut pass = true;
    let mut parts = Vec::new();
    for (i, &(beta, n, m)) in [(2.0, 3, 3), (2.0, 3, 5), (1.0, 4, 7), (4.0, 2, 3)].iter().enumerate() {
        let p = params(beta, n, m);
        let series = match ExactSeries::new(&p, &acc()) {
            Ok(s) => s,
            Err(e) => return verdict(false, format!("({beta},{n},{m}): {e}")),
        };
        let batch = match run_batch(&p, count, 1000 + i as u64, workers) {
            Ok(b) => b,
            Err(e) => return verdict(false, e.to_string()),
        };
        let r = ks_validate(&batch, |x| 1.0 - series.q(x).unwrap_or(f64::NAN), 0.01).expect("nonempty");
        pass &= r.pass;
        parts.push(format!("({beta},{n},{m}) p={:.3}", r.p_value));
    }
    let p = params(0.7, 3, 5);
    let batch = run_batch(&p, count, 1004, workers).expect("valid batch");
    let (a, b) = batch.values().split_at(count / 2);
    let r = ks_two_sample(a, b, 0.01).expect("nonempty");
    pass &= r.pass;
    parts.push(format!("(0.7,3,5) split-half p={:.3}", r.p_value));
    verdict(pass, format!("{} (level 0.01)", parts.join(", ")))
}

fn rational_identities() -> Verdict {
    let mut bad = Vec::new();
    for n in 1..=12usize {
        for rho in 0..=4usize {
            if laguerre_poly(n, rho).derivative() != -&laguerre_poly(n - 1, rho + 1) {
                bad.push(format!("derivative n={n} ρ={rho}"));
            }
        }
    }
    for n in 1..=10usize {
        for i in 0..=10 {
            for j in 0..=10 {
                if Rational::from_integer(alpha2_cross_term(n, i, j)) != alpha2_factored_term(n, i, j) {
                    bad.push(format!("cross term N={n} i={i} j={j}"));
                }
            }
        }
    }
    let detail = if bad.is_empty() {
        "all 60 derivative relations and 1210 cross-term identities exact".to_string()
    } else {
        format!("mismatches: {}", bad.join(", "))
    };
    verdict(bad.is_empty(), detail)
}

fn prefactor_density_diagnostics() -> Verdict {
    let h = 1e-5;
    let mut worst = 0.0f64;
    // limiting law in y
    for &(beta, m) in &[(1.0, 0), (2.0, 0), (4.0, 0), (1.0, 1), (2.0, 1), (4.0, 1), (2.0, 2), (1.0, 2), (4.0, 3)] {
        let lp = LimitParams::new(beta, m).expect("valid");
        for &y in &LIMIT_YS[1..] {
            let fd = match (q_limit(&lp, y + h, &acc()), q_limit(&lp, y - h, &acc())) {
                (Ok(a), Ok(b)) => -(a - b) / (2.0 * h),
                (Err(e), _) | (_, Err(e)) => return verdict(false, e.to_string()),
            };
            match p_limit(&lp, y, &acc()) {
                Ok(p) => worst = worst.max((p - fd).abs()),
                Err(e) => return verdict(false, e.to_string()),
            }
        }
    }
    // finite N, in the support-normalized variable u = N x
    for &(beta, n, m) in &[(2.0, 2, 3), (2.0, 3, 3), (1.0, 3, 4), (4.0, 2, 3), (2.0, 4, 5)] {
        let s = ExactSeries::new(&params(beta, n, m), &acc()).expect("integer m");
        let nf = n as f64;
        for i in 1..20 {
            let u = i as f64 / 20.0;
            let fd = -(s.q((u + h) / nf).unwrap() - s.q((u - h) / nf).unwrap()) / (2.0 * h);
            worst = worst.max((s.p(u / nf).unwrap() / nf - fd).abs());
        }
    }
    let m0 = density_discrepancy(&LimitParams::new(2.0, 0).expect("valid"), &[0.0], &acc());
    let m1 = density_discrepancy(&LimitParams::new(2.0, 1).expect("valid"), &[1e-3], &acc());
    let (m0, m1) = match (m0, m1) {
        (Ok(a), Ok(b)) => (a[0], b[0]),
        (Err(e), _) | (_, Err(e)) => return verdict(false, e.to_string()),
    };
    let reported = (m0.ratio - 1.0).abs() > 1e-6 && (m1.ratio - 1.0).abs() > 1e-6;
    verdict(
        worst <= 1e-7 && reported,
        format!(
            "max |P + Q′| {worst:.2e} (tol 1e-7); prefactor-form/derived density ratio {:.4} at (β=2, m=0, y=0) and {:.1} at (β=2, m=1, y=1e-3)",
            m0.ratio, m1.ratio
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("mean of the complex square ensemble", mean_of_complex_square, Duration::from_secs(1)),
        ("two-eigenvalue quadrature oracle", oracle_equivalence_two_eigenvalues, Duration::from_secs(30)),
        ("determinant and Jack routes at β = 2", route_agreement_complex, Duration::from_secs(60)),
        ("closed-form hard-edge limits", closed_form_limits, Duration::from_secs(5)),
        ("finite N approaches the limit", finite_n_convergence, Duration::from_secs(120)),
        ("Jack normalization identity", jack_normalization, Duration::from_secs(1)),
        ("Monte Carlo KS agreement", monte_carlo_agreement, Duration::from_secs(180)),
        ("exact rational identities", rational_identities, Duration::from_secs(1)),
        ("density consistency and closed-prefactor diagnostics", prefactor_density_diagnostics, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        let elapsed = start.elapsed();
        let status = if v.pass { "PASS" } else { "FAIL" };
        let over = if elapsed > *budget {
            format!(" [over runtime budget {budget:?}]")
        } else {
            String::new()
        };
        println!("criterion {}: {status}  {name}: {} ({:.2?}){over}", i + 1, v.detail, elapsed);
        if !v.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
