//! Generalized and exceptional Jacobi, Laguerre and Hermite polynomials built
//! from Wronskians of classical polynomials.

use std::fmt;

use rug::Float;
use serde::Serialize;

use crate::algebra::partition::Partition;
use crate::algebra::poly::RatPoly;
use crate::algebra::quasi::{extract_polynomial, wronskian_det, Carrier, QuasiFunction};
use crate::algebra::scalar::{abs_f64, format_rational, MpComplex, Rational};
use crate::classical::{hermite, jacobi, laguerre};
use crate::error::ConstructionError;
use crate::roots::{all_roots, RootOptions, Support};

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Jacobi { alpha: Rational, beta: Rational, lambda: Partition, mu: Partition },
    Laguerre { alpha: Rational, lambda: Partition, mu: Partition },
    /// `-L^{(α-1)}_{∅,(m),n}`.
    LaguerreTypeI { m: u32, alpha: Rational },
    /// `-n L^{(α-m)}_{(1^m),∅,n}`, with `α ∈ (-1, 0)`.
    LaguerreTypeIII { m: u32, alpha: Rational },
    Hermite { lambda: Partition },
}

/// Which limit formula and rate exponent apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    Jacobi,
    Laguerre,
    LaguerreTypeIII,
    Hermite,
}

impl FamilyKind {
    /// `ρ` in `n^ρ (ζ_{k,n} - ζ_{k,∞})`.
    pub fn rate_exponent(self) -> Rational {
        match self {
            FamilyKind::Jacobi => Rational::from(1),
            _ => Rational::from((1, 2)),
        }
    }

    pub fn support(self) -> Support {
        match self {
            FamilyKind::Jacobi => Support::Interval,
            FamilyKind::Laguerre | FamilyKind::LaguerreTypeIII => Support::HalfLine,
            FamilyKind::Hermite => Support::RealLine,
        }
    }
}

/// A generic Laguerre `(α, λ, μ)` triple plus the sign convention of a sugar constructor.
struct LaguerreForm {
    alpha: Rational,
    lambda: Partition,
    mu: Partition,
    type_iii: bool,
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Jacobi { .. } => FamilyKind::Jacobi,
            FamilySpec::Laguerre { .. } | FamilySpec::LaguerreTypeI { .. } => FamilyKind::Laguerre,
            FamilySpec::LaguerreTypeIII { .. } => FamilyKind::LaguerreTypeIII,
            FamilySpec::Hermite { .. } => FamilyKind::Hermite,
        }
    }

    pub fn support(&self) -> Support {
        self.kind().support()
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Jacobi { .. } => "jacobi",
            FamilySpec::Laguerre { .. } => "laguerre",
            FamilySpec::LaguerreTypeI { .. } => "laguerre1",
            FamilySpec::LaguerreTypeIII { .. } => "laguerre3",
            FamilySpec::Hermite { .. } => "hermite",
        }
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        match self {
            FamilySpec::LaguerreTypeIII { m, alpha } => {
                if *m == 0 {
                    return Err(ConstructionError::InvalidSpec("Type-III needs m >= 1".into()));
                }
                if !(*alpha > -1 && *alpha < 0) {
                    return Err(ConstructionError::InvalidSpec(format!(
                        "Type-III needs alpha in (-1, 0), got {}",
                        format_rational(alpha)
                    )));
                }
                Ok(())
            }
            FamilySpec::LaguerreTypeI { m, .. } if *m == 0 => {
                Err(ConstructionError::InvalidSpec("Type-I needs m >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    fn laguerre_form(&self) -> Option<LaguerreForm> {
        match self {
            FamilySpec::Laguerre { alpha, lambda, mu } => Some(LaguerreForm {
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                mu: mu.clone(),
                type_iii: false,
            }),
            FamilySpec::LaguerreTypeI { m, alpha } => Some(LaguerreForm {
                alpha: Rational::from(alpha - 1u32),
                lambda: Partition::empty(),
                mu: Partition::new(vec![*m]).expect("m >= 1"),
                type_iii: false,
            }),
            FamilySpec::LaguerreTypeIII { m, alpha } => Some(LaguerreForm {
                alpha: Rational::from(alpha - *m),
                lambda: Partition::ones(*m),
                mu: Partition::empty(),
                type_iii: true,
            }),
            _ => None,
        }
    }

    /// The `(λ, μ)` pair of the underlying Wronskian; `μ = ∅` for Hermite.
    pub fn partitions(&self) -> (Partition, Partition) {
        match self {
            FamilySpec::Jacobi { lambda, mu, .. } => (lambda.clone(), mu.clone()),
            FamilySpec::Hermite { lambda } => (lambda.clone(), Partition::empty()),
            other => {
                let form = other.laguerre_form().expect("Laguerre family");
                (form.lambda, form.mu)
            }
        }
    }

    /// Number of exceptional zeros: `|λ| + |μ|`, or `|λ|` for Hermite.
    pub fn exceptional_count(&self) -> usize {
        let (lambda, mu) = self.partitions();
        (lambda.weight() + mu.weight()) as usize
    }

    pub fn index_set_contains(&self, n: u64) -> bool {
        match self {
            FamilySpec::Hermite { lambda } => index_set_contains_hermite(lambda, n),
            _ => {
                let (lambda, mu) = self.partitions();
                index_set_contains(&lambda, &mu, n)
            }
        }
    }

    /// `s = n - |λ| - |μ| + r_1`, the degree of the appended classical column.
    pub fn s_index(&self, n: u64) -> Option<u64> {
        let (lambda, mu) = self.partitions();
        match self {
            FamilySpec::Hermite { .. } => {
                (n + lambda.len() as u64).checked_sub(lambda.weight())
            }
            _ => (n + lambda.len() as u64).checked_sub(lambda.weight() + mu.weight()),
        }
    }

    /// Smallest `n` at or above `from` inside the index set.
    pub fn next_index(&self, from: u64) -> u64 {
        (from..).find(|&n| self.index_set_contains(n)).expect("index set is cofinite")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Jacobi { alpha, beta, lambda, mu } => write!(
                f,
                "jacobi(alpha={}, beta={}, lambda={lambda}, mu={mu})",
                format_rational(alpha),
                format_rational(beta)
            ),
            FamilySpec::Laguerre { alpha, lambda, mu } => {
                write!(f, "laguerre(alpha={}, lambda={lambda}, mu={mu})", format_rational(alpha))
            }
            FamilySpec::LaguerreTypeI { m, alpha } => {
                write!(f, "laguerre1(m={m}, alpha={})", format_rational(alpha))
            }
            FamilySpec::LaguerreTypeIII { m, alpha } => {
                write!(f, "laguerre3(m={m}, alpha={})", format_rational(alpha))
            }
            FamilySpec::Hermite { lambda } => write!(f, "hermite(lambda={lambda})"),
        }
    }
}

/// `n ≥ |λ|+|μ|-r_1` and `n-|λ|-|μ| ≠ λ_j - j` for all `j`.
pub fn index_set_contains(lambda: &Partition, mu: &Partition, n: u64) -> bool {
    let n = n as i64;
    let total = (lambda.weight() + mu.weight()) as i64;
    let r1 = lambda.len() as i64;
    if n < total - r1 {
        return false;
    }
    let shift = n - total;
    (1..=lambda.len()).all(|j| shift != i64::from(lambda.part(j)) - j as i64)
}

/// `n ≥ m-r` and `n ≠ m - j + λ_j` for all `j`, with `m = |λ|`.
pub fn index_set_contains_hermite(lambda: &Partition, n: u64) -> bool {
    let n = n as i64;
    let m = lambda.weight() as i64;
    let r = lambda.len() as i64;
    if n < m - r {
        return false;
    }
    (1..=lambda.len()).all(|j| n != m - j as i64 + i64::from(lambda.part(j)))
}

/// Exact admissibility facts for one spec and degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdmissibilityReport {
    pub c1_ok: bool,
    pub c2_ok: bool,
    pub c3_ok: bool,
    pub in_index_set: bool,
    pub degree_conditions_ok: bool,
    /// Set only after the zeros of the generalized polynomial are computed.
    pub support_free: Option<bool>,
    pub lambda_even: bool,
    pub alpha_gt_minus_one: bool,
    /// Jacobi: `β > μ_1 + r_2 - 1`.
    pub beta_gt_mu_bound: Option<bool>,
    /// Jacobi: `β > 0`.
    pub beta_positive: Option<bool>,
    pub messages: Vec<String>,
}

impl AdmissibilityReport {
    /// Hypotheses of the matching rate theorem, excluding simplicity of the limit points.
    pub fn rate_hypotheses_ok(&self) -> bool {
        self.c1_ok
            && self.c2_ok
            && self.c3_ok
            && self.lambda_even
            && self.alpha_gt_minus_one
            && self.beta_gt_mu_bound.unwrap_or(true)
    }
}

fn is_negative_integer_in(v: &Rational, d: u64) -> bool {
    // v ∈ {-1, ..., -d}
    *v.denom() == 1 && *v <= -1 && *v >= -(d as i64)
}

/// Computes C1–C3, degree conditions and hypothesis flags exactly.
pub fn check_admissibility(spec: &FamilySpec, n: u64) -> AdmissibilityReport {
    let mut messages = Vec::new();
    let (lambda, mu) = spec.partitions();
    let in_index_set = spec.index_set_contains(n);
    if !in_index_set {
        messages.push(format!("n = {n} is not in the index set"));
    }
    let mut report = AdmissibilityReport {
        c1_ok: true,
        c2_ok: true,
        c3_ok: true,
        in_index_set,
        degree_conditions_ok: in_index_set,
        support_free: None,
        lambda_even: lambda.is_even(),
        alpha_gt_minus_one: true,
        beta_gt_mu_bound: None,
        beta_positive: None,
        messages: Vec::new(),
    };
    if !report.lambda_even {
        messages.push(format!("lambda = {lambda} is not even"));
    }
    match spec {
        FamilySpec::Jacobi { alpha, beta, .. } => {
            let (r1, r2) = (lambda.len(), mu.len());
            let ab = Rational::from(alpha + beta);
            let a_minus_b = Rational::from(alpha - beta);
            let d_lambda: Vec<u64> = (1..=r1).map(|j| u64::from(lambda.part(j)) + (r1 - j) as u64).collect();
            let d_mu: Vec<u64> = (1..=r2).map(|j| u64::from(mu.part(j)) + (r2 - j) as u64).collect();
            for (j, &d) in d_lambda.iter().enumerate() {
                if is_negative_integer_in(&Rational::from(&ab + d), d) {
                    report.c1_ok = false;
                    messages.push(format!("C1 fails at j = {}", j + 1));
                }
            }
            for (j, &d) in d_mu.iter().enumerate() {
                if is_negative_integer_in(&Rational::from(&a_minus_b + d), d) {
                    report.c2_ok = false;
                    messages.push(format!("C2 fails at j = {}", j + 1));
                }
            }
            for (i, &dl) in d_lambda.iter().enumerate() {
                for (j, &dm) in d_mu.iter().enumerate() {
                    if *beta == dm as i64 - dl as i64 {
                        report.c3_ok = false;
                        messages.push(format!("C3 fails at i = {}, j = {}", i + 1, j + 1));
                    }
                }
            }
            if let Some(s) = spec.s_index(n).filter(|_| in_index_set) {
                if is_negative_integer_in(&Rational::from(&ab + s), s) {
                    report.degree_conditions_ok = false;
                    messages.push(format!("alpha+beta+s hits a negative integer at s = {s}"));
                }
                for (j, &dm) in d_mu.iter().enumerate() {
                    if *beta == dm as i64 - s as i64 {
                        report.degree_conditions_ok = false;
                        messages.push(format!("beta = mu-degree minus s at j = {}", j + 1));
                    }
                }
            }
            report.degree_conditions_ok &= report.c1_ok && report.c2_ok && report.c3_ok;
            report.alpha_gt_minus_one = *alpha > -1;
            let bound = i64::from(mu.largest()) + r2 as i64 - 1;
            report.beta_gt_mu_bound = Some(*beta > bound);
            report.beta_positive = Some(*beta > 0);
            if !report.alpha_gt_minus_one {
                messages.push("alpha <= -1".into());
            }
            if *beta <= bound {
                messages.push(format!("beta <= mu_1 + r_2 - 1 = {bound}"));
            }
            if *beta <= 0 {
                messages.push("beta <= 0".into());
            }
        }
        FamilySpec::Laguerre { alpha, .. } | FamilySpec::LaguerreTypeI { alpha, .. } => {
            let form = spec.laguerre_form().expect("Laguerre family");
            let _ = alpha;
            report.alpha_gt_minus_one = form.alpha > -1;
            if !report.alpha_gt_minus_one {
                messages.push(format!("generic alpha = {} <= -1", format_rational(&form.alpha)));
            }
        }
        FamilySpec::LaguerreTypeIII { alpha, .. } => {
            // the Type-III theorem has its own hypothesis α ∈ (-1, 0) instead of evenness
            report.alpha_gt_minus_one = *alpha > -1 && *alpha < 0;
            report.lambda_even = true;
            messages.retain(|m| !m.starts_with("lambda"));
            if !report.alpha_gt_minus_one {
                messages.push("Type-III needs alpha in (-1, 0)".into());
            }
        }
        FamilySpec::Hermite { .. } => {}
    }
    report.messages = messages;
    report
}

/// Adds the support-freeness fact to a report by computing the zeros of the
/// generalized polynomial.
pub fn with_support_check(
    spec: &FamilySpec,
    mut report: AdmissibilityReport,
    options: &RootOptions,
) -> Result<AdmissibilityReport, ConstructionError> {
    let omega = generalized_polynomial(spec)?;
    report.support_free = Some(support_free(&omega, spec.support(), options));
    if report.support_free == Some(false) {
        report.messages.push("generalized polynomial has zeros on the support".into());
    }
    Ok(report)
}

/// True when `p` has no zeros on the closed support.
pub fn support_free(p: &RatPoly, support: Support, options: &RootOptions) -> bool {
    if p.degree().unwrap_or(0) == 0 {
        return !p.is_zero();
    }
    let Ok(report) = all_roots(p, options) else { return false };
    let prec = report.precision_bits;
    report.roots.iter().all(|z| !support.contains_closed(z, prec))
}

/// `Ω_{λ,μ}^{(α,β)}`, `Ω_{λ,μ}^{(α)}` or `H_λ` (exact).
pub fn generalized_polynomial(spec: &FamilySpec) -> Result<RatPoly, ConstructionError> {
    spec.validate()?;
    let expected = spec.exceptional_count();
    let p = match spec {
        FamilySpec::Jacobi { alpha, beta, lambda, mu } => jacobi_wronskian(alpha, beta, lambda, mu, None)?,
        FamilySpec::Hermite { lambda } => hermite_wronskian(lambda, None)?,
        _ => {
            let form = spec.laguerre_form().expect("Laguerre family");
            laguerre_wronskian(&form.alpha, &form.lambda, &form.mu, None)?
        }
    };
    if p.degree() != Some(expected) {
        return Err(ConstructionError::DegreeMismatch { expected, actual: p.degree() });
    }
    Ok(p)
}

/// The degree-`n` exceptional polynomial of the family (exact).
pub fn exceptional_polynomial(spec: &FamilySpec, n: u64) -> Result<RatPoly, ConstructionError> {
    spec.validate()?;
    if !spec.index_set_contains(n) {
        return Err(ConstructionError::NotInIndexSet { family: spec.to_string(), n });
    }
    let s = spec.s_index(n).expect("index set implies s >= 0");
    let p = match spec {
        FamilySpec::Jacobi { alpha, beta, lambda, mu } => jacobi_wronskian(alpha, beta, lambda, mu, Some(s))?,
        FamilySpec::Hermite { lambda } => hermite_wronskian(lambda, Some(s))?,
        FamilySpec::LaguerreTypeIII { .. } if n == 0 => RatPoly::one(),
        _ => {
            let form = spec.laguerre_form().expect("Laguerre family");
            let w = laguerre_wronskian(&form.alpha, &form.lambda, &form.mu, Some(s))?;
            if form.type_iii {
                w.scale(&-Rational::from(n))
            } else if matches!(spec, FamilySpec::LaguerreTypeI { .. }) {
                w.neg()
            } else {
                w
            }
        }
    };
    if p.degree() != Some(n as usize) {
        return Err(ConstructionError::DegreeMismatch { expected: n as usize, actual: p.degree() });
    }
    Ok(p)
}

fn jacobi_wronskian(
    alpha: &Rational,
    beta: &Rational,
    lambda: &Partition,
    mu: &Partition,
    extra: Option<u64>,
) -> Result<RatPoly, ConstructionError> {
    let (r1, r2) = (lambda.len(), mu.len());
    let carrier = Carrier::OnePlusX;
    let neg_beta = Rational::from(-beta);
    let mut columns = Vec::with_capacity(r1 + r2 + 1);
    for j in 1..=r1 {
        let deg = u64::from(lambda.part(j)) + (r1 - j) as u64;
        columns.push(QuasiFunction::polynomial(carrier.clone(), jacobi(deg, alpha, beta)));
    }
    for j in 1..=r2 {
        let deg = u64::from(mu.part(j)) + (r2 - j) as u64;
        columns.push(QuasiFunction::tagged(carrier.clone(), neg_beta.clone(), jacobi(deg, alpha, &neg_beta)));
    }
    let shift = if let Some(s) = extra {
        columns.push(QuasiFunction::polynomial(carrier, jacobi(s, alpha, beta)));
        Rational::from(beta + (r1 as u64 + 1)) * r2 as u64
    } else {
        Rational::from(beta + r1 as u64) * r2 as u64
    };
    let w = wronskian_det(&columns)?;
    Ok(extract_polynomial(&w, &shift)?)
}

fn laguerre_wronskian(
    alpha: &Rational,
    lambda: &Partition,
    mu: &Partition,
    extra: Option<u64>,
) -> Result<RatPoly, ConstructionError> {
    let (r1, r2) = (lambda.len(), mu.len());
    let carrier = Carrier::Exp(Rational::from(1));
    let mut columns = Vec::with_capacity(r1 + r2 + 1);
    for j in 1..=r1 {
        let deg = u64::from(lambda.part(j)) + (r1 - j) as u64;
        columns.push(QuasiFunction::polynomial(carrier.clone(), laguerre(deg, alpha)));
    }
    for j in 1..=r2 {
        let deg = u64::from(mu.part(j)) + (r2 - j) as u64;
        columns.push(QuasiFunction::tagged(carrier.clone(), Rational::from(1), laguerre(deg, alpha).reflect()));
    }
    if let Some(s) = extra {
        columns.push(QuasiFunction::polynomial(carrier, laguerre(s, alpha)));
    }
    let w = wronskian_det(&columns)?;
    Ok(extract_polynomial(&w, &Rational::from(-(r2 as i64)))?)
}

fn hermite_wronskian(lambda: &Partition, extra: Option<u64>) -> Result<RatPoly, ConstructionError> {
    let r = lambda.len();
    let carrier = Carrier::OnePlusX;
    let mut columns: Vec<QuasiFunction> = (0..r)
        .map(|i| QuasiFunction::polynomial(carrier.clone(), hermite(u64::from(lambda.part(r - i)) + i as u64)))
        .collect();
    if let Some(s) = extra {
        columns.push(QuasiFunction::polynomial(carrier, hermite(s)));
    }
    let w = wronskian_det(&columns)?;
    Ok(extract_polynomial(&w, &Rational::new())?)
}

/// Value and magnitude scale of an ODE residual `y'' + R y' + S y`.
#[derive(Debug, Clone)]
pub struct OdeResidual {
    pub value: MpComplex,
    /// `|y''| + |R y'| + |S y|` at the point.
    pub scale: Float,
}

impl OdeResidual {
    /// `|value| / scale`.
    pub fn relative(&self) -> f64 {
        let s = self.scale.to_f64();
        if s == 0.0 {
            abs_f64(&self.value)
        } else {
            abs_f64(&self.value) / s
        }
    }
}

/// Evaluates the second-order ODE satisfied by the exceptional polynomial at `point`.
///
/// Supported for Type-III Laguerre and Hermite families.
pub fn ode_residual(spec: &FamilySpec, n: u64, point: &MpComplex) -> Result<OdeResidual, ConstructionError> {
    if !matches!(spec, FamilySpec::LaguerreTypeIII { .. } | FamilySpec::Hermite { .. }) {
        return Err(ConstructionError::Unsupported(
            "ODE residuals are available for Type-III Laguerre and Hermite families".into(),
        ));
    }
    let y = exceptional_polynomial(spec, n)?;
    let prec = point.prec().0;
    let z = point;
    let (y0, y1, y2) = eval012(&y, z);
    let pole_tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2));
    let (r, s) = match spec {
        FamilySpec::LaguerreTypeIII { m, alpha } => {
            if Float::with_val(prec, z.abs_ref()) < pole_tol {
                return Err(ConstructionError::Pole("x = 0".into()));
            }
            // g(x) = L_m^{(-α-1)}(-x)
            let g = laguerre(u64::from(*m), &(Rational::from(-alpha) - 1u32)).reflect();
            let (g0, g1, _) = eval012(&g, z);
            if Float::with_val(prec, g0.abs_ref()) < pole_tol {
                return Err(ConstructionError::Pole("zero of L_m^{(-alpha-1)}(-x)".into()));
            }
            let a1 = crate::algebra::scalar::rational_to_complex(&Rational::from(alpha + 1u32), prec);
            let r = MpComplex::with_val(prec, &a1 - z) / z - MpComplex::with_val(prec, &g1 * 2u32) / &g0;
            let s = MpComplex::with_val(prec, n) / z;
            (r, s)
        }
        FamilySpec::Hermite { lambda } => {
            let h = hermite_wronskian(lambda, None)?;
            let (h0, h1, h2) = eval012(&h, z);
            if Float::with_val(prec, h0.abs_ref()) < pole_tol {
                return Err(ConstructionError::Pole("zero of H_lambda".into()));
            }
            let ratio1 = MpComplex::with_val(prec, &h1 / &h0);
            let ratio2 = MpComplex::with_val(prec, &h2 / &h0);
            let r = MpComplex::with_val(prec, z + &ratio1) * (-2i32);
            let m = lambda.weight();
            let constant = 2 * n as i64 - 2 * m as i64;
            let s = ratio2 + MpComplex::with_val(prec, z * &ratio1) * 2u32 + constant;
            (r, s)
        }
        _ => unreachable!("checked above"),
    };
    let t1 = MpComplex::with_val(prec, &r * &y1);
    let t2 = MpComplex::with_val(prec, &s * &y0);
    let scale = Float::with_val(prec, y2.abs_ref())
        + Float::with_val(prec, t1.abs_ref())
        + Float::with_val(prec, t2.abs_ref());
    let value = y2 + t1 + t2;
    Ok(OdeResidual { value, scale })
}

fn eval012(p: &RatPoly, z: &MpComplex) -> (MpComplex, MpComplex, MpComplex) {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    (p.eval_complex(z), d1.eval_complex(z), d2.eval_complex(z))
}
