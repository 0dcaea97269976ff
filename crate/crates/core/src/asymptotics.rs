//! Limit formulas for exceptional zeros, scaled-gap studies and the exact
//! identities satisfied by the zeros at finite degree.

use rug::ops::Pow;
use rug::{Assign, Float};
use serde::Serialize;

use crate::algebra::scalar::{abs_f64, rational_to_complex, MpComplex, Rational};
use crate::classical::{hermite, laguerre, laguerre_by_recurrence};
use crate::construct::{
    check_admissibility, exceptional_polynomial, generalized_polynomial, AdmissibilityReport, FamilyKind,
    FamilySpec,
};
use crate::error::VerifyError;
use crate::roots::{
    all_roots, default_classification_tol, interlacing_count, match_nearest, match_to_limits, sort_roots, zero_set, LimitAssignment,
    RootOptions, RootReport, ZeroSet,
};

fn is_zero(z: &MpComplex) -> bool {
    z.real().is_zero() && z.imag().is_zero()
}

/// `|Im z| ≤ tol·max(1,|z|)`.
fn nearly_real(z: &MpComplex) -> bool {
    let prec = z.prec().0;
    let tol = default_classification_tol(prec).to_f64();
    let mag = abs_f64(z).max(1.0);
    Float::with_val(64, z.imag().abs_ref()).to_f64() <= tol * mag
}

/// Limit of the scaled gap `n^ρ (ζ_{k,n} - ζ_{k,∞})` as a function of `ζ_{k,∞}`.
///
/// * Jacobi: `√(ζ²-1)`, computed as `ζ·√(1-ζ⁻²)` so the cut is `[-1,1]` and
///   the value is positive on `(1,∞)`.
/// * Laguerre (both kinds): `-√(-ζ)` with the principal root, cut `[0,∞)`.
/// * Hermite: `ζ/√(-2ζ²)` with the principal root, cut `ℝ`.
pub fn limit_formula(kind: FamilyKind, zeta: &MpComplex) -> Result<MpComplex, VerifyError> {
    let prec = zeta.prec().0;
    let on_cut = |what: &str| {
        VerifyError::OnBranchCut(format!(
            "{what}: zeta = {:.17}{:+.17}i",
            zeta.real().to_f64(),
            zeta.imag().to_f64()
        ))
    };
    match kind {
        FamilyKind::Jacobi => {
            if nearly_real(zeta) && zeta.real().clone().abs() <= 1 {
                return Err(on_cut("Jacobi cut [-1,1]"));
            }
            let inv_sq = MpComplex::with_val(prec, zeta * zeta).recip();
            let w = MpComplex::with_val(prec, 1 - inv_sq).sqrt();
            Ok(MpComplex::with_val(prec, zeta * &w))
        }
        FamilyKind::Laguerre | FamilyKind::LaguerreTypeIII => {
            if nearly_real(zeta) && *zeta.real() >= 0 {
                return Err(on_cut("Laguerre cut [0,inf)"));
            }
            let w = MpComplex::with_val(prec, -zeta).sqrt();
            Ok(-w)
        }
        FamilyKind::Hermite => {
            if nearly_real(zeta) {
                return Err(on_cut("Hermite cut R"));
            }
            let w = MpComplex::with_val(prec, zeta * zeta) * -2i32;
            let root = w.sqrt();
            Ok(MpComplex::with_val(prec, zeta / &root))
        }
    }
}

/// Zeros of the generalized polynomial, sorted by real then imaginary part.
pub fn limit_points(spec: &FamilySpec, options: &RootOptions) -> Result<(Vec<MpComplex>, RootReport), VerifyError> {
    let omega = generalized_polynomial(spec)?;
    if omega.degree() == Some(0) {
        return Ok((
            Vec::new(),
            RootReport {
                roots: Vec::new(),
                precision_bits: options.precision_bits,
                iterations: 0,
                max_backward_error_log2: f64::NEG_INFINITY,
                max_forward_error_log2: f64::NEG_INFINITY,
                clusters_suspected: false,
            },
        ));
    }
    let report = all_roots(&omega, options)?;
    let mut points = report.roots.clone();
    sort_roots(&mut points);
    Ok((points, report))
}

/// Index of the limit point nearest to `anchor`.
pub fn nearest_limit(points: &[MpComplex], anchor: &MpComplex) -> Option<usize> {
    let prec = anchor.prec().0;
    points
        .iter()
        .enumerate()
        .map(|(k, z)| (k, abs_f64(&MpComplex::with_val(prec, z - anchor))))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(k, _)| k)
}

/// Zeros of one exceptional polynomial, classified and paired with the limit points.
#[derive(Debug, Clone)]
pub struct DegreeSnapshot {
    pub n: u64,
    pub zeros: ZeroSet,
    pub report: RootReport,
    pub assignment: LimitAssignment,
}

/// Pairs zeros with limit points.
///
/// The exceptional zeros are matched one-to-one when their count equals the
/// number of limit points. Otherwise (a limit point inside the support pulls
/// in nearly real zeros) each limit point takes its own nearest zero among all
/// zeros.
pub fn assign_limits(zeros: &ZeroSet, limits: &[MpComplex]) -> Result<LimitAssignment, VerifyError> {
    if zeros.exceptional.len() == limits.len() {
        return Ok(match_to_limits(&zeros.exceptional, limits)?);
    }
    let all: Vec<MpComplex> = zeros.regular.iter().chain(&zeros.exceptional).cloned().collect();
    Ok(match_nearest(&all, limits)?)
}

pub fn snapshot(
    spec: &FamilySpec,
    n: u64,
    limits: &[MpComplex],
    options: &RootOptions,
) -> Result<DegreeSnapshot, VerifyError> {
    let p = exceptional_polynomial(spec, n)?;
    let (zeros, report) = zero_set(&p, spec.support(), options)?;
    let assignment = assign_limits(&zeros, limits)?;
    Ok(DegreeSnapshot { n, zeros, report, assignment })
}

/// One degree of a scaled-gap study.
#[derive(Debug, Clone)]
pub struct GapRow {
    pub n: u64,
    pub outcome: Result<GapValue, VerifyError>,
}

#[derive(Debug, Clone)]
pub struct GapValue {
    /// `ζ_{k,n}`.
    pub zeta: MpComplex,
    /// `n^ρ (ζ_{k,n} - ζ_{k,∞})`.
    pub scaled_gap: MpComplex,
    /// `|s_n - limit|`.
    pub gap_to_limit: f64,
    pub precision_bits: u32,
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub family: FamilySpec,
    /// 0-based index into the sorted limit points.
    pub k: usize,
    pub rate_exponent: Rational,
    pub limit_point: MpComplex,
    pub limit_points: Vec<MpComplex>,
    pub limits_simple: bool,
    pub rows: Vec<GapRow>,
    pub theoretical_limit: MpComplex,
    pub hypotheses: AdmissibilityReport,
    /// Least-squares slope of `log|s_n - limit|` against `log n`; diagnostic only.
    pub slope: Option<f64>,
}

impl ConvergenceReport {
    pub fn successful(&self) -> impl Iterator<Item = (u64, &GapValue)> {
        self.rows.iter().filter_map(|r| r.outcome.as_ref().ok().map(|v| (r.n, v)))
    }

    pub fn all_rows_ok(&self) -> bool {
        self.rows.iter().all(|r| r.outcome.is_ok())
    }
}

/// `n^ρ` for `ρ ∈ {1, 1/2}`.
fn rate_factor(kind: FamilyKind, n: u64, prec: u32) -> Float {
    let n = Float::with_val(prec, n);
    match kind {
        FamilyKind::Jacobi => n,
        _ => n.sqrt(),
    }
}

fn check_grid(spec: &FamilySpec, n_grid: &[u64]) -> Result<(), VerifyError> {
    if n_grid.is_empty() {
        return Err(VerifyError::Precondition("empty n-grid".into()));
    }
    if let Some(n) = n_grid.iter().find(|&&n| !spec.index_set_contains(n)) {
        return Err(VerifyError::Precondition(format!("n = {n} is not in the index set of {spec}")));
    }
    Ok(())
}

fn slope_fit(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Scaled gaps `n^ρ (ζ_{k,n} - ζ_{k,∞})` along `n_grid`.
///
/// A failing degree is recorded in its row; the study continues.
pub fn scaled_gap_study(
    spec: &FamilySpec,
    k: usize,
    n_grid: &[u64],
    options: &RootOptions,
) -> Result<ConvergenceReport, VerifyError> {
    spec.validate()?;
    check_grid(spec, n_grid)?;
    let mut grid = n_grid.to_vec();
    grid.sort_unstable();
    grid.dedup();
    let (points, limit_report) = limit_points(spec, options)?;
    let limit_point = points
        .get(k)
        .cloned()
        .ok_or_else(|| VerifyError::Precondition(format!("k = {k} but there are {} limit points", points.len())))?;
    let kind = spec.kind();
    let theoretical_limit = limit_formula(kind, &limit_point)?;
    let hypotheses = check_admissibility(spec, grid[0]);
    let mut rows = Vec::with_capacity(grid.len());
    for &n in &grid {
        let outcome = snapshot(spec, n, &points, options).and_then(|snap| {
            let pair = snap.assignment.pair(k).ok_or_else(|| VerifyError::Precondition("no zero matched".into()))?;
            let prec = snap.report.precision_bits;
            let gap = MpComplex::with_val(prec, &pair.zero - &limit_point);
            let scaled_gap = gap * rate_factor(kind, n, prec);
            let gap_to_limit = abs_f64(&MpComplex::with_val(prec, &scaled_gap - &theoretical_limit));
            Ok(GapValue { zeta: pair.zero.clone(), scaled_gap, gap_to_limit, precision_bits: prec })
        });
        rows.push(GapRow { n, outcome });
    }
    let fit: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.outcome.as_ref().ok().map(|v| (r.n, v.gap_to_limit)))
        .filter(|(_, g)| *g > 0.0)
        .map(|(n, g)| ((n as f64).ln(), g.ln()))
        .collect();
    Ok(ConvergenceReport {
        family: spec.clone(),
        k,
        rate_exponent: kind.rate_exponent(),
        limit_point,
        limit_points: points,
        limits_simple: !limit_report.clusters_suspected,
        rows,
        theoretical_limit,
        hypotheses,
        slope: slope_fit(&fit),
    })
}

/// Compensated sum of `weight/(at - z)` over `zs`, largest terms first.
fn reciprocal_sum(at: &MpComplex, zs: &[&MpComplex], weight: u32, prec: u32) -> Result<MpComplex, VerifyError> {
    let mut terms: Vec<(f64, MpComplex)> = Vec::with_capacity(zs.len());
    for z in zs {
        let diff = MpComplex::with_val(prec, at - *z);
        if is_zero(&diff) {
            return Err(VerifyError::Pole(format!(
                "evaluation point coincides with a summed zero at {:.17}{:+.17}i",
                at.real().to_f64(),
                at.imag().to_f64()
            )));
        }
        terms.push((abs_f64(&diff), MpComplex::with_val(prec, weight / diff)));
    }
    terms.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(kahan(terms.into_iter().map(|t| t.1), prec))
}

fn kahan(terms: impl Iterator<Item = MpComplex>, prec: u32) -> MpComplex {
    let mut sum = MpComplex::new(prec);
    let mut carry = MpComplex::new(prec);
    for t in terms {
        let y = MpComplex::with_val(prec, &t - &carry);
        let next = MpComplex::with_val(prec, &sum + &y);
        carry.assign(&next - &sum);
        carry -= &y;
        sum = next;
    }
    sum
}

/// Index of the zero closest to `target` in `zs`.
fn closest(zs: &[&MpComplex], target: &MpComplex) -> Option<usize> {
    let prec = target.prec().0;
    zs.iter()
        .enumerate()
        .map(|(i, z)| (i, abs_f64(&MpComplex::with_val(prec, *z - target))))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(i, _)| i)
}

/// LHS minus RHS of the identity tying the zeros of the degree-`n` polynomial
/// to the limit points.
///
/// Jacobi and Laguerre (generic and Type-I) identities hold at `ζ_{k,∞}` and
/// sum over every zero; the Type-III and Hermite identities hold at
/// `ζ_{k,n}` and sum over the other zeros.
pub fn electrostatic_residual(
    spec: &FamilySpec,
    n: u64,
    k: usize,
    zeros: &ZeroSet,
    limits: &LimitAssignment,
) -> Result<MpComplex, VerifyError> {
    let pair = limits
        .pair(k)
        .ok_or_else(|| VerifyError::Precondition(format!("no limit point with index {k}")))?;
    if zeros.len() as u64 != n {
        return Err(VerifyError::Precondition(format!("expected {n} zeros, got {}", zeros.len())));
    }
    let all: Vec<&MpComplex> = zeros.regular.iter().chain(&zeros.exceptional).collect();
    let prec = all.iter().map(|z| z.prec().0).chain([pair.limit.prec().0]).max().unwrap_or(64);
    let others_inf: Vec<&MpComplex> =
        limits.limit_points.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, z)| z).collect();
    let every_inf: Vec<&MpComplex> = limits.limit_points.iter().collect();
    let (lambda, mu) = spec.partitions();
    let r = (lambda.len() + mu.len()) as u32;
    match spec {
        FamilySpec::Jacobi { alpha, beta, .. } => {
            let zeta = &pair.limit;
            let lhs = reciprocal_sum(zeta, &all, 1, prec)?;
            let one_minus = MpComplex::with_val(prec, 1 - zeta);
            let one_plus = MpComplex::with_val(prec, 1 + zeta);
            let a = rational_to_complex(&Rational::from(alpha + r), prec);
            // the β coefficient carries r_1 - r_2, not r
            let shift = lambda.len() as i64 - mu.len() as i64;
            let b = rational_to_complex(&Rational::from(beta + shift), prec);
            let mut rhs = MpComplex::with_val(prec, &a / (one_minus * 2u32));
            rhs -= MpComplex::with_val(prec, &b / (one_plus * 2u32));
            rhs += reciprocal_sum(zeta, &others_inf, 1, prec)?;
            Ok(lhs - rhs)
        }
        FamilySpec::Laguerre { .. } | FamilySpec::LaguerreTypeI { .. } => {
            let zeta = &pair.limit;
            let alpha = generic_laguerre_alpha(spec);
            let lhs = reciprocal_sum(zeta, &all, 1, prec)?;
            let a = rational_to_complex(&Rational::from(&alpha + r), prec);
            let mut rhs = MpComplex::with_val(prec, 0.5);
            rhs -= MpComplex::with_val(prec, &a / MpComplex::with_val(prec, zeta * 2u32));
            rhs += reciprocal_sum(zeta, &others_inf, 1, prec)?;
            Ok(lhs - rhs)
        }
        FamilySpec::LaguerreTypeIII { alpha, .. } => {
            let (zeta, rest) = split_at_zero(&all, &pair.zero)?;
            let mut value = reciprocal_sum(zeta, &rest, 2, prec)?;
            let a1 = rational_to_complex(&Rational::from(alpha + 1u32), prec);
            value += MpComplex::with_val(prec, MpComplex::with_val(prec, &a1 - zeta) / zeta);
            value -= reciprocal_sum(zeta, &every_inf, 2, prec)?;
            Ok(value)
        }
        FamilySpec::Hermite { .. } => {
            let (zeta, rest) = split_at_zero(&all, &pair.zero)?;
            let mut value = reciprocal_sum(zeta, &rest, 2, prec)?;
            value -= MpComplex::with_val(prec, zeta * 2u32);
            value -= reciprocal_sum(zeta, &every_inf, 2, prec)?;
            Ok(value)
        }
    }
}

fn split_at_zero<'a>(
    all: &[&'a MpComplex],
    target: &MpComplex,
) -> Result<(&'a MpComplex, Vec<&'a MpComplex>), VerifyError> {
    let i = closest(all, target).ok_or_else(|| VerifyError::Precondition("no zeros".into()))?;
    let rest = all.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, z)| *z).collect();
    Ok((all[i], rest))
}

fn generic_laguerre_alpha(spec: &FamilySpec) -> Rational {
    match spec {
        FamilySpec::Laguerre { alpha, .. } => alpha.clone(),
        FamilySpec::LaguerreTypeI { alpha, .. } => Rational::from(alpha - 1u32),
        FamilySpec::LaguerreTypeIII { alpha, m } => Rational::from(alpha - *m),
        _ => unreachable!("Laguerre family"),
    }
}

/// Scaled zero-counting sum next to its predicted limit `1/limit_formula`.
#[derive(Debug, Clone)]
pub struct SumLimitRow {
    pub n: u64,
    pub outcome: Result<SumLimitValue, VerifyError>,
}

#[derive(Debug, Clone)]
pub struct SumLimitValue {
    pub value: MpComplex,
    pub target: MpComplex,
    /// The scaled gap at the same degree, for the reciprocal check.
    pub scaled_gap: MpComplex,
}

impl SumLimitValue {
    pub fn distance(&self) -> f64 {
        let prec = self.value.prec().0;
        abs_f64(&MpComplex::with_val(prec, &self.value - &self.target))
    }
}

/// `n^{-ρ} Σ_j 1/(ζ - z_{j,n})` over the regular zeros, with `ζ = ζ_{k,∞}`
/// (Jacobi, Laguerre) or `ζ = ζ_{k,n}` (Hermite).
pub fn sum_limit_check(
    spec: &FamilySpec,
    k: usize,
    n_grid: &[u64],
    options: &RootOptions,
) -> Result<Vec<SumLimitRow>, VerifyError> {
    spec.validate()?;
    check_grid(spec, n_grid)?;
    let (points, _) = limit_points(spec, options)?;
    let zeta_inf = points
        .get(k)
        .cloned()
        .ok_or_else(|| VerifyError::Precondition(format!("k = {k} but there are {} limit points", points.len())))?;
    let kind = spec.kind();
    if spec.support().contains_closed(&zeta_inf, zeta_inf.prec().0) {
        return Err(VerifyError::Precondition("limit point lies on the support".into()));
    }
    let limit = limit_formula(kind, &zeta_inf)?;
    let mut grid = n_grid.to_vec();
    grid.sort_unstable();
    grid.dedup();
    let mut rows = Vec::new();
    for &n in &grid {
        let outcome = snapshot(spec, n, &points, options).and_then(|snap| {
            let prec = snap.report.precision_bits;
            let pair = snap.assignment.pair(k).ok_or_else(|| VerifyError::Precondition("no zero matched".into()))?;
            let at = if kind == FamilyKind::Hermite { &pair.zero } else { &pair.limit };
            let regular: Vec<&MpComplex> = snap.zeros.regular.iter().collect();
            let sum = reciprocal_sum(at, &regular, 1, prec)?;
            let value = sum / rate_factor(kind, n, prec);
            let target = MpComplex::with_val(prec, limit.clone().recip());
            let gap = MpComplex::with_val(prec, &pair.zero - &zeta_inf);
            let scaled_gap = gap * rate_factor(kind, n, prec);
            Ok(SumLimitValue { value, target, scaled_gap })
        });
        rows.push(SumLimitRow { n, outcome });
    }
    Ok(rows)
}

/// Regular zeros against the zeros of a classical polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct InterlacingReport {
    /// Degree of the classical polynomial whose zeros bound the intervals.
    pub reference_degree: u64,
    pub regular_zeros: usize,
    /// Intervals between consecutive reference zeros containing a regular zero.
    pub count: usize,
    /// The guaranteed lower bound.
    pub bound: i64,
}

impl InterlacingReport {
    pub fn pass(&self) -> bool {
        self.count as i64 >= self.bound
    }
}

/// Counts intervals between consecutive zeros of the reference classical
/// polynomial that contain a regular zero.
///
/// * Hermite: `H_n`, bound `n - |λ| - r`.
/// * Laguerre (generic and Type-I): `L_n^{(α+r)}`, bound `n - 2|λ| - 2|μ| - r_2`.
/// * Type-III: `L_{n-m-1}^{(α+1)}`, whose `n-m-2` intervals each hold a zero.
pub fn interlacing_check(spec: &FamilySpec, n: u64, options: &RootOptions) -> Result<InterlacingReport, VerifyError> {
    let p = exceptional_polynomial(spec, n)?;
    let (zeros, _) = zero_set(&p, spec.support(), options)?;
    let (lambda, mu) = spec.partitions();
    let (reference, bound) = match spec {
        FamilySpec::Hermite { .. } => {
            (hermite(n), n as i64 - lambda.weight() as i64 - lambda.len() as i64)
        }
        FamilySpec::Laguerre { .. } | FamilySpec::LaguerreTypeI { .. } => {
            let r = (lambda.len() + mu.len()) as u32;
            let alpha = Rational::from(generic_laguerre_alpha(spec) + r);
            let bound = n as i64 - 2 * (lambda.weight() + mu.weight()) as i64 - mu.len() as i64;
            (laguerre(n, &alpha), bound)
        }
        FamilySpec::LaguerreTypeIII { m, alpha } => {
            let degree = n.checked_sub(u64::from(*m) + 1).filter(|d| *d >= 2).ok_or_else(|| {
                VerifyError::Precondition(format!("Type-III interlacing needs n >= m + 3, got n = {n}"))
            })?;
            (laguerre(degree, &Rational::from(alpha + 1u32)), degree as i64 - 1)
        }
        FamilySpec::Jacobi { .. } => {
            return Err(VerifyError::Precondition("no interlacing statement for the Jacobi family".into()))
        }
    };
    let reference_degree = reference.degree().unwrap_or(0) as u64;
    let outer_report = all_roots(&reference, options)?;
    let mut outer: Vec<Float> = outer_report.roots.iter().map(|z| z.real().clone()).collect();
    outer.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let inner = zeros.regular_real();
    Ok(InterlacingReport {
        reference_degree,
        regular_zeros: inner.len(),
        count: interlacing_count(&inner, &outer),
        bound,
    })
}

#[derive(Debug, Clone)]
pub struct RatioRow {
    pub n: u64,
    pub lhs: MpComplex,
    pub rhs: MpComplex,
    pub error: f64,
}

/// `L_{n+j}^{(α)}(z) / L_n^{(β)}(z)` against `(-z/n)^{(β-α)/2}`.
pub fn ratio_asymptotics_check(
    alpha: &Rational,
    beta: &Rational,
    j: i64,
    z: &MpComplex,
    n_grid: &[u64],
) -> Result<Vec<RatioRow>, VerifyError> {
    if !(*alpha > -1 && *beta > -1) {
        return Err(VerifyError::Precondition("alpha and beta must exceed -1".into()));
    }
    if nearly_real(z) && *z.real() >= 0 {
        return Err(VerifyError::OnBranchCut(format!("z = {:.17} lies on [0,inf)", z.real().to_f64())));
    }
    if n_grid.is_empty() {
        return Err(VerifyError::Precondition("empty n-grid".into()));
    }
    let prec = z.prec().0;
    let exponent = rational_to_complex(&(Rational::from(beta - alpha) / 2u32), prec);
    let mut rows = Vec::new();
    for &n in n_grid {
        let shifted = i64::try_from(n)
            .ok()
            .and_then(|n| n.checked_add(j))
            .filter(|m| *m >= 0)
            .ok_or_else(|| VerifyError::Precondition(format!("n + j < 0 at n = {n}")))? as u64;
        if n == 0 {
            return Err(VerifyError::Precondition("n must be positive".into()));
        }
        let num = laguerre_by_recurrence(shifted, alpha, z);
        let den = laguerre_by_recurrence(n, beta, z);
        if is_zero(&den) {
            return Err(VerifyError::Pole(format!("L_n^(beta)(z) vanishes at n = {n}")));
        }
        let lhs = MpComplex::with_val(prec, &num / &den);
        let base = MpComplex::with_val(prec, -z) / n;
        let rhs = MpComplex::with_val(prec, (&base).pow(&exponent));
        let error = abs_f64(&MpComplex::with_val(prec, &lhs - &rhs));
        rows.push(RatioRow { n, lhs, rhs, error });
    }
    Ok(rows)
}

/// Serializable complex value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl From<&MpComplex> for C64 {
    fn from(z: &MpComplex) -> Self {
        C64 { re: z.real().to_f64(), im: z.imag().to_f64() }
    }
}
