//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p xop-core --test acceptance`.

use std::collections::HashMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rug::Float;
use xop::algebra::scalar::{abs_f64, rational_to_complex};
use xop::asymptotics::{assign_limits, electrostatic_residual, interlacing_check, limit_formula, limit_points, nearest_limit, ratio_asymptotics_check};
use xop::classical::{hermite, jacobi, laguerre};
use xop::construct::{exceptional_polynomial, generalized_polynomial, ode_residual, support_free, FamilySpec};
use xop::roots::{all_roots, classify_zeros, default_classification_tol, zero_set, RootOptions, RootReport, ZeroSet};
use xop::{MpComplex, Partition, RatPoly, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn q(p: i64, d: i64) -> Rational {
    Rational::from((p, d))
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn c(re: f64, im: f64) -> MpComplex {
    MpComplex::with_val(256, (re, im))
}

fn dist(a: &MpComplex, b: &MpComplex) -> f64 {
    abs_f64(&MpComplex::with_val(a.prec().0.max(b.prec().0), a - b))
}

fn type_three() -> FamilySpec {
    FamilySpec::LaguerreTypeIII { m: 5, alpha: q(-2, 5) }
}

fn hermite22() -> FamilySpec {
    FamilySpec::Hermite { lambda: part(&[2, 2]) }
}

fn hermite11() -> FamilySpec {
    FamilySpec::Hermite { lambda: part(&[1, 1]) }
}

fn type_one(alpha: Rational) -> FamilySpec {
    FamilySpec::LaguerreTypeI { m: 2, alpha }
}

/// The X_2 Jacobi example with (α, β) = (1/2, 3), built at the shifted
/// parameters (α-2, β+2).
fn jacobi_x2() -> FamilySpec {
    FamilySpec::Jacobi { alpha: q(-3, 2), beta: q(5, 1), lambda: Partition::empty(), mu: part(&[1, 1]) }
}

/// Zeros per (family, degree), shared between criteria.
struct Suite {
    cache: HashMap<(String, u64), (ZeroSet, RootReport)>,
}

struct Gap {
    zeta: MpComplex,
    scaled: MpComplex,
}

impl Suite {
    fn zeros(&mut self, spec: &FamilySpec, n: u64, options: &RootOptions) -> Result<(ZeroSet, RootReport), String> {
        let key = (spec.to_string(), n);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let p = exceptional_polynomial(spec, n).map_err(|e| e.to_string())?;
        let value = zero_set(&p, spec.support(), options).map_err(|e| e.to_string())?;
        self.cache.insert(key, value.clone());
        Ok(value)
    }

    fn gap(&mut self, spec: &FamilySpec, n: u64, limits: &[MpComplex], k: usize, options: &RootOptions) -> Result<Gap, String> {
        let (zeros, _) = self.zeros(spec, n, options)?;
        let assignment = assign_limits(&zeros, limits).map_err(|e| e.to_string())?;
        let zeta = assignment.pair(k).ok_or("unmatched limit point")?.zero.clone();
        let prec = zeta.prec().0;
        let factor = match spec {
            FamilySpec::Jacobi { .. } => Float::with_val(prec, n),
            _ => Float::with_val(prec, n).sqrt(),
        };
        let scaled = MpComplex::with_val(prec, &zeta - &limits[k]) * factor;
        Ok(Gap { zeta, scaled })
    }
}

fn limits_and_k(spec: &FamilySpec, anchor: &MpComplex) -> Result<(Vec<MpComplex>, usize), String> {
    let (points, _) = limit_points(spec, &RootOptions::default()).map_err(|e| e.to_string())?;
    let k = nearest_limit(&points, anchor).ok_or("no limit points")?;
    Ok((points, k))
}

fn criterion_1(s: &mut Suite) -> Outcome {
    let start = Instant::now();
    let spec = type_three();
    // independent: the root of L_5^{(-3/5)}(-x) near -1
    let g = laguerre(5, &q(-3, 5)).reflect();
    let roots = all_roots(&g, &RootOptions::default()).map_err(|e| e.to_string())?.roots;
    let target = c(-1.00772514594748, 0.0);
    let zeta = roots.iter().min_by(|a, b| dist(a, &target).total_cmp(&dist(b, &target))).unwrap().clone();
    ensure!(dist(&zeta, &target) < 1e-10, "zeta_inf = {} off by {:e}", zeta.real().to_f64(), dist(&zeta, &target));
    let (limits, k) = limits_and_k(&spec, &target)?;
    ensure!(dist(&limits[k], &zeta) < 1e-60, "generalized polynomial disagrees with L_5^(-3/5)(-x)");
    let limit = limit_formula(spec.kind(), &limits[k]).map_err(|e| e.to_string())?;
    ensure!(dist(&limit, &c(-1.00386, 0.0)) < 1e-4, "limit {}", limit.real().to_f64());
    let expected = [(100, -1.0377), (150, -1.03007), (175, -1.0277), (200, -1.02584)];
    let mut shown = Vec::new();
    for (n, value) in expected {
        let gap = s.gap(&spec, n, &limits, k, &RootOptions::default())?;
        let err = dist(&gap.scaled, &c(value, 0.0));
        shown.push(format!("s_{n}={:.6}", gap.scaled.real().to_f64()));
        ensure!(err < 1e-3, "s_{n} = {} differs from {value} by {err:e}", gap.scaled.real().to_f64());
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}, target 2 min");
    Ok(format!("zeta_inf={:.14} limit={:.6} {} ({:.1?})", zeta.real().to_f64(), limit.real().to_f64(), shown.join(" "), elapsed))
}

fn criterion_2(s: &mut Suite) -> Outcome {
    let start = Instant::now();
    let spec = hermite22();
    let r = 0.75f64.powf(0.25) * std::f64::consts::FRAC_1_SQRT_2;
    let (limits, k) = limits_and_k(&spec, &c(r, r))?;
    let limit = limit_formula(spec.kind(), &limits[k]).map_err(|e| e.to_string())?;
    ensure!(dist(&limit, &c(0.0, 0.707107)) < 1e-5, "limit {:?}", (limit.real().to_f64(), limit.imag().to_f64()));
    let expected = [
        (100, -0.000538702, 0.719837),
        (200, -0.000262063, 0.713381),
        (400, -0.00012928, 0.710222),
        (500, -0.000103149, 0.709596),
    ];
    let options = RootOptions::with_precision(512);
    let mut shown = Vec::new();
    for (n, re, im) in expected {
        let gap = s.gap(&spec, n, &limits, k, &options)?;
        let (gr, gi) = (gap.scaled.real().to_f64(), gap.scaled.imag().to_f64());
        shown.push(format!("s_{n}={gr:.9}{gi:+.6}i"));
        ensure!((gr - re).abs() < 1e-5 && (gi - im).abs() < 1e-5, "s_{n} = {gr}{gi:+}i, expected {re}{im:+}i");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}, target 10 min");
    Ok(format!("limit={:.6}i {} ({:.1?})", limit.imag().to_f64(), shown.join(" "), elapsed))
}

fn proportional(a: &RatPoly, b: &RatPoly) -> bool {
    a.proportionality(b).is_some()
}

fn criterion_3(_: &mut Suite) -> Outcome {
    // Hermite λ=(1,1): 16(n-1)(-2x H_{n-1} + (n(2x²+1)-2) H_{n-2})
    let spec = hermite11();
    let mut checked = 0;
    for n in 3..=50u64 {
        if !spec.index_set_contains(n) {
            continue;
        }
        let p = exceptional_polynomial(&spec, n).map_err(|e| e.to_string())?;
        let x = RatPoly::x();
        let quad = RatPoly::from_ints(&[n as i64 - 2, 0, 2 * n as i64]);
        let inner = x.scale(&Rational::from(-2)).mul(&hermite(n - 1)).add(&quad.mul(&hermite(n - 2)));
        let closed = inner.scale(&Rational::from(16 * (n as i64 - 1)));
        ensure!(proportional(&p, &closed), "Hermite (1,1) closed form fails at n = {n}");
        checked += 1;
    }
    // Type-I m=2, α=3/2
    let alpha = q(3, 2);
    let am1 = Rational::from(&alpha - 1u32);
    let spec = type_one(alpha.clone());
    let mut checked_one = 0;
    for n in 3..=30u64 {
        if !spec.index_set_contains(n) {
            continue;
        }
        let p = exceptional_polynomial(&spec, n).map_err(|e| e.to_string())?;
        let closed = laguerre(2, &alpha)
            .reflect()
            .mul(&laguerre(n - 2, &am1))
            .add(&laguerre(2, &am1).reflect().mul(&laguerre(n - 3, &alpha)));
        ensure!(proportional(&p, &closed), "Type-I closed form fails at n = {n}");
        checked_one += 1;
    }
    // Jacobi Ω_{∅,(1,1)}^{(α-2,β+2)} ∝ P_2^{(-α-1,β-1)}
    for (a, b) in [(q(1, 2), q(3, 1)), (q(1, 3), q(4, 1))] {
        let spec = FamilySpec::Jacobi {
            alpha: Rational::from(&a - 2u32),
            beta: Rational::from(&b + 2u32),
            lambda: Partition::empty(),
            mu: part(&[1, 1]),
        };
        let omega = generalized_polynomial(&spec).map_err(|e| e.to_string())?;
        let target = jacobi(2, &(Rational::from(-&a) - 1u32), &Rational::from(&b - 1u32));
        ensure!(proportional(&omega, &target), "Jacobi Omega not proportional for ({a}, {b})");
    }
    Ok(format!("Hermite n<=50 ({checked} degrees), Type-I n<=30 ({checked_one} degrees), Jacobi 2 parameter pairs"))
}

fn criterion_4(s: &mut Suite) -> Outcome {
    let mut shown = Vec::new();
    for alpha in [q(1, 2), q(3, 2), q(5, 2)] {
        let a = alpha.to_f64();
        let spec = type_one(alpha.clone());
        let prec = 256;
        let a_f = Float::with_val(prec, &alpha);
        let sq = Float::with_val(prec, &a_f + 1u32).sqrt();
        let closed = Float::with_val(prec, &sq - &a_f) - 1u32;
        let closed_c = MpComplex::with_val(prec, (&closed, 0));
        let (limits, k) = limits_and_k(&spec, &closed_c)?;
        let err = dist(&limits[k], &closed_c);
        ensure!(err < 1e-20, "alpha={a}: limit point off by {err:e}");
        let predicted = -(a + 1.0 - (a + 1.0).sqrt()).sqrt();
        let limit = limit_formula(spec.kind(), &limits[k]).map_err(|e| e.to_string())?;
        ensure!(dist(&limit, &c(predicted, 0.0)) < 1e-12, "alpha={a}: limit formula {}", limit.real().to_f64());
        let g100 = s.gap(&spec, 100, &limits, k, &RootOptions::default())?;
        let g400 = s.gap(&spec, 400, &limits, k, &RootOptions::default())?;
        let (d100, d400) = (dist(&g100.scaled, &limit), dist(&g400.scaled, &limit));
        ensure!(d400 < d100 && d400 < 0.05, "alpha={a}: |s_100-L|={d100:.4} |s_400-L|={d400:.4}");
        shown.push(format!("alpha={a}: |s_100-L|={d100:.4} |s_400-L|={d400:.4}"));
    }
    Ok(shown.join("; "))
}

fn criterion_5(_: &mut Suite) -> Outcome {
    let (alpha, beta) = (q(1, 2), q(3, 1));
    let options = RootOptions::default();
    let y = all_roots(&jacobi(2, &(Rational::from(-&alpha) - 2u32), &beta), &options)
        .map_err(|e| e.to_string())?
        .roots;
    let zeta = all_roots(&jacobi(2, &(Rational::from(-&alpha) - 1u32), &Rational::from(&beta - 1u32)), &options)
        .map_err(|e| e.to_string())?
        .roots;
    // ζ_1 is the zero outside [-1, 1]
    let (z1, z2) = if zeta[0].real().clone().abs() > 1 { (&zeta[0], &zeta[1]) } else { (&zeta[1], &zeta[0]) };
    let prec = 256;
    let num = MpComplex::with_val(prec, z1 - &y[0]) * MpComplex::with_val(prec, z1 - &y[1]);
    let den = MpComplex::with_val(prec, z1 - 1u32) * MpComplex::with_val(prec, z1 - z2);
    let ratio = num / den;
    let expected = rational_to_complex(&(Rational::from(1) / (Rational::from(1) - &alpha)), prec);
    let err = dist(&ratio, &expected);
    ensure!(err < 1e-25, "ratio {} differs from 1/(1-alpha) by {err:e}", ratio.real().to_f64());
    Ok(format!("zeta_1={:.12} ratio=2 error={err:.1e}", z1.real().to_f64()))
}

fn criterion_6(s: &mut Suite) -> Outcome {
    let options = RootOptions::default();
    let prec = options.precision_bits;
    let mut worst = 0f64;
    for (spec, n) in [(hermite11(), 15u64), (hermite22(), 40), (type_three(), 50)] {
        let (limits, _) = limit_points(&spec, &options).map_err(|e| e.to_string())?;
        let (zeros, _) = s.zeros(&spec, n, &options)?;
        let assignment = assign_limits(&zeros, &limits).map_err(|e| e.to_string())?;
        let bound = 2f64.powi(-(prec as i32 - 60)) * n as f64;
        for k in 0..limits.len() {
            let res = abs_f64(&electrostatic_residual(&spec, n, k, &zeros, &assignment).map_err(|e| e.to_string())?);
            ensure!(res < bound, "{spec} n={n} k={k}: residual {res:e} above {bound:e}");
            worst = worst.max(res / n as f64);
        }
        // negative control: move the regular zero closest to any limit point
        let mut perturbed = zeros.clone();
        let (k, j) = (0..limits.len())
            .flat_map(|k| (0..zeros.regular.len()).map(move |j| (k, j)))
            .min_by(|a, b| dist(&zeros.regular[a.1], &limits[a.0]).total_cmp(&dist(&zeros.regular[b.1], &limits[b.0])))
            .unwrap();
        perturbed.regular[j] += 1e-3;
        let res = abs_f64(&electrostatic_residual(&spec, n, k, &perturbed, &assignment).map_err(|e| e.to_string())?);
        ensure!(res > 1e-4, "{spec} n={n}: perturbed residual only {res:e}");
    }
    Ok(format!("max residual/n = {worst:.1e}; perturbation controls > 1e-4"))
}

fn criterion_7(_: &mut Suite) -> Outcome {
    let options = RootOptions::default();
    let specs = [hermite11(), hermite22(), type_three(), type_one(q(1, 2)), type_one(q(3, 2)), type_one(q(5, 2)), jacobi_x2()];
    for spec in &specs {
        let expected_missing = spec.exceptional_count();
        let missing: Vec<u64> = (0..=50).filter(|&n| !spec.index_set_contains(n)).collect();
        ensure!(missing.len() == expected_missing, "{spec}: {} excluded degrees, expected {expected_missing}", missing.len());
        for n in (0..=50).filter(|&n| spec.index_set_contains(n)) {
            let p = exceptional_polynomial(spec, n).map_err(|e| e.to_string())?;
            ensure!(p.degree() == Some(n as usize), "{spec}: degree {:?} at n = {n}", p.degree());
        }
        let omega = generalized_polynomial(spec).map_err(|e| e.to_string())?;
        ensure!(omega.degree() == Some(expected_missing), "{spec}: generalized degree {:?}", omega.degree());
        // the Jacobi example has α-2 < -1 and an interior zero of Ω, outside the even-partition hypotheses
        if !matches!(spec, FamilySpec::Jacobi { .. }) {
            ensure!(support_free(&omega, spec.support(), &options), "{spec}: generalized polynomial vanishes on the support");
        }
    }
    let h = interlacing_check(&hermite11(), 40, &options).map_err(|e| e.to_string())?;
    ensure!(h.bound == 36 && h.pass(), "Hermite interlacing {h:?}");
    let generic = FamilySpec::Laguerre { alpha: q(1, 2), lambda: Partition::empty(), mu: part(&[2]) };
    let l = interlacing_check(&generic, 40, &options).map_err(|e| e.to_string())?;
    ensure!(l.bound == 35 && l.pass(), "Laguerre interlacing {l:?}");
    let tol = 2f64.powi(-(256 - 64));
    for (spec, n) in [(type_three(), 20u64), (hermite22(), 20)] {
        for z in [c(0.37, 0.21), c(1.3, -0.45)] {
            let r = ode_residual(&spec, n, &z).map_err(|e| e.to_string())?.relative();
            ensure!(r < tol, "{spec}: ODE residual {r:e}");
        }
    }
    Ok(format!("7 families; interlacing {}>= {} and {}>={}; ODE residuals below 2^-192", h.count, h.bound, l.count, l.bound))
}

fn criterion_8(s: &mut Suite) -> Outcome {
    let spec = jacobi_x2();
    let (limits, k) = limits_and_k(&spec, &c(1.11, 0.0))?;
    let limit = limit_formula(spec.kind(), &limits[k]).map_err(|e| e.to_string())?;
    let g100 = s.gap(&spec, 100, &limits, k, &RootOptions::default())?;
    let g400 = s.gap(&spec, 400, &limits, k, &RootOptions::default())?;
    let (d100, d400) = (dist(&g100.scaled, &limit), dist(&g400.scaled, &limit));
    let rel = d400 / abs_f64(&limit);
    ensure!(d400 < d100 && rel < 0.05, "|s_100-L|={d100:.4} |s_400-L|={d400:.4} rel={rel:.4}");
    Ok(format!(
        "zeta_inf={:.12} L={:.6} s_100={:.6} s_400={:.6} rel={rel:.4}",
        limits[k].real().to_f64(),
        limit.real().to_f64(),
        g100.scaled.real().to_f64(),
        g400.scaled.real().to_f64()
    ))
}

fn criterion_9(_: &mut Suite) -> Outcome {
    let rows = ratio_asymptotics_check(&q(3, 2), &q(1, 2), 0, &c(-1.0, 0.0), &[100, 200, 400]).map_err(|e| e.to_string())?;
    let scaled: Vec<f64> = rows.iter().map(|r| r.error * (r.n as f64).sqrt()).collect();
    ensure!(scaled.iter().all(|v| *v <= 3.0 * scaled[0]), "error*sqrt(n) = {scaled:?}");
    Ok(format!("error*sqrt(n) = {:.4} {:.4} {:.4}", scaled[0], scaled[1], scaled[2]))
}

/// |s_n - limit| strictly decreases along {100, 200, 400} for every family.
fn property_rate_sharpness(s: &mut Suite) -> Outcome {
    let cases = [
        (type_three(), c(-1.0077, 0.0)),
        (hermite22(), c(0.66, 0.69)),
        (hermite11(), c(0.0, 0.7)),
        (type_one(q(3, 2)), c(-0.92, 0.0)),
        (jacobi_x2(), c(1.11, 0.0)),
    ];
    let mut shown = Vec::new();
    for (spec, anchor) in cases {
        let (limits, k) = limits_and_k(&spec, &anchor)?;
        let limit = limit_formula(spec.kind(), &limits[k]).map_err(|e| e.to_string())?;
        let mut d = Vec::new();
        for n in [100u64, 200, 400] {
            let gap = s.gap(&spec, n, &limits, k, &RootOptions::default())?;
            d.push(dist(&gap.scaled, &limit));
        }
        ensure!(d[1] < d[0] && d[2] < d[1], "{spec}: {d:?}");
        shown.push(format!("{spec}: {:.2e}", d[2]));
    }
    Ok(shown.join(", "))
}

/// 1/s_n tracks the scaled zero-counting sum, and halving the classification
/// tolerance leaves every split unchanged.
fn property_reciprocal_and_stability(s: &mut Suite) -> Outcome {
    let keys: Vec<(String, u64)> = s.cache.keys().cloned().collect();
    for (name, n) in &keys {
        let (zeros, report) = s.cache[&(name.clone(), *n)].clone();
        let tol = default_classification_tol(report.precision_bits);
        let floor = Float::with_val(64, Float::i_exp(1, (report.max_forward_error_log2 + 8.0).ceil() as i32));
        let tol = tol.max(&floor);
        let half = Float::with_val(64, &tol / 2u32);
        let again = classify_zeros(&report.roots, zeros.support, &half);
        ensure!(
            again.regular.len() == zeros.regular.len(),
            "{name} n={n}: split changes when halving the tolerance"
        );
    }
    let spec = type_three();
    let (limits, k) = limits_and_k(&spec, &c(-1.0077, 0.0))?;
    let mut diffs = Vec::new();
    for n in [100u64, 200] {
        let gap = s.gap(&spec, n, &limits, k, &RootOptions::default())?;
        let (zeros, _) = s.zeros(&spec, n, &RootOptions::default())?;
        let prec = gap.zeta.prec().0;
        let mut sum = MpComplex::new(prec);
        for z in &zeros.regular {
            sum += MpComplex::with_val(prec, &limits[k] - z).recip();
        }
        let value = sum / Float::with_val(prec, n).sqrt();
        let inv = MpComplex::with_val(prec, gap.scaled.clone().recip());
        diffs.push(dist(&inv, &value));
    }
    ensure!(diffs[1] < diffs[0], "|1/s_n - sum| does not shrink: {diffs:?}");
    Ok(format!("{} cached degrees stable; |1/s_n - sum| = {:.3e}, {:.3e}", keys.len(), diffs[0], diffs[1]))
}

/// Writes past the test harness capture so the report shows up in plain `cargo test` output.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let mut suite = Suite { cache: HashMap::new() };
    let criteria: [(&str, fn(&mut Suite) -> Outcome); 11] = [
        ("1 Type-III table", criterion_1),
        ("2 Hermite (2,2) table", criterion_2),
        ("3 closed forms", criterion_3),
        ("4 Type-I analytic limit", criterion_4),
        ("5 Jacobi constant identity", criterion_5),
        ("6 electrostatic identities", criterion_6),
        ("7 structural properties", criterion_7),
        ("8 Jacobi rate", criterion_8),
        ("9 ratio asymptotics", criterion_9),
        ("P rate sharpness", property_rate_sharpness),
        ("P reciprocal sums, classification stability", property_reciprocal_and_stability),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&mut suite)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => report(format!("PASS criterion {name}: {detail} [{:.1?}]", start.elapsed())),
            Err(why) => {
                report(format!("FAIL criterion {name}: {why} [{:.1?}]", start.elapsed()));
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
