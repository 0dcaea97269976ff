//! Multiprecision polynomial roots, zero classification and limit matching.

use std::f64::consts::PI;

use rug::{Assign, Float};
use serde::Serialize;

use crate::algebra::poly::{ComplexPoly, RatPoly};
use crate::algebra::scalar::{abs_f64, float_log2, MpComplex, Rational, MIN_PRECISION_BITS};
use crate::error::RootError;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Orthogonality support of the classical family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Support {
    /// `[-1, 1]`
    Interval,
    /// `[0, ∞)`
    HalfLine,
    /// `ℝ`
    RealLine,
}

impl Support {
    pub fn name(self) -> &'static str {
        match self {
            Support::Interval => "[-1,1]",
            Support::HalfLine => "[0,inf)",
            Support::RealLine => "R",
        }
    }

    /// Membership in the open support, with `|Im z| ≤ tol·max(1,|z|)` and the
    /// endpoints inflated by the same amount.
    pub fn contains_open(self, z: &MpComplex, tol: &Float) -> bool {
        let prec = tol.prec();
        let mag = Float::with_val(prec, z.abs_ref()).max(&Float::with_val(prec, 1));
        let slack = Float::with_val(prec, tol * &mag);
        if Float::with_val(prec, z.imag().abs_ref()) > slack {
            return false;
        }
        let re = z.real();
        match self {
            Support::Interval => {
                *re > Float::with_val(prec, -1 - Float::with_val(prec, &slack))
                    && *re < Float::with_val(prec, 1 + Float::with_val(prec, &slack))
            }
            Support::HalfLine => *re > Float::with_val(prec, -&slack),
            Support::RealLine => true,
        }
    }

    /// Membership in the closed support at the default tolerance for `prec`.
    pub fn contains_closed(self, z: &MpComplex, prec: u32) -> bool {
        self.contains_open(z, &default_classification_tol(prec))
    }
}

/// `2^{-prec/2}`, relative to the root magnitude.
pub fn default_classification_tol(prec: u32) -> Float {
    Float::with_val(64, Float::i_exp(1, -((prec / 2) as i32)))
}

#[derive(Debug, Clone)]
pub struct RootOptions {
    /// Starting working precision.
    pub precision_bits: u32,
    /// Aberth sweeps per precision level.
    pub max_iters: usize,
    /// Highest precision the escalation ladder may reach.
    pub max_precision_bits: u32,
    /// Relative forward accuracy (bits) that stops the escalation ladder,
    /// capped at half the working precision.
    pub accuracy_bits: u32,
    /// Overrides the precision-derived classification tolerance.
    pub classification_tol: Option<f64>,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            precision_bits: 256,
            max_iters: 200,
            max_precision_bits: 8192,
            accuracy_bits: 128,
            classification_tol: None,
        }
    }
}

impl RootOptions {
    pub fn with_precision(precision_bits: u32) -> Self {
        RootOptions { precision_bits, ..Self::default() }
    }
}

#[derive(Debug, Clone)]
pub struct RootReport {
    pub roots: Vec<MpComplex>,
    /// Precision at which the returned roots were polished.
    pub precision_bits: u32,
    /// Total Aberth sweeps over all precision levels.
    pub iterations: usize,
    /// Largest relative backward error `|p(z)| / Σ|c_k||z|^k` (log2).
    pub max_backward_error_log2: f64,
    /// Largest Newton correction relative to `max(1, |z|)` (log2).
    pub max_forward_error_log2: f64,
    /// Two roots closer than `2^{-prec/4}`.
    pub clusters_suspected: bool,
}

/// All complex roots of an exact polynomial, each listed once per multiplicity.
///
/// Roots are refined by Aberth–Ehrlich sweeps; when the a-posteriori error of
/// any root exceeds `2^{-min(prec/2, accuracy_bits)}` the precision is doubled
/// and the sweep restarts from the current approximations.
pub fn all_roots(p: &RatPoly, options: &RootOptions) -> Result<RootReport, RootError> {
    let degree = p.degree().ok_or(RootError::Degenerate)?;
    if degree == 0 {
        return Err(RootError::Degenerate);
    }
    let mut prec = options.precision_bits.max(MIN_PRECISION_BITS);
    let zero_roots = p.coeffs().iter().take_while(|c| c.cmp0().is_eq()).count();
    let reduced = RatPoly::new(p.coeffs()[zero_roots..].to_vec());
    let d = degree - zero_roots;

    let mut roots: Vec<MpComplex> = Vec::new();
    let mut iterations = 0;
    let mut backward = f64::NEG_INFINITY;
    let mut forward = f64::NEG_INFINITY;
    if d > 0 {
        let mut current: Option<Vec<MpComplex>> = None;
        loop {
            let work = Workspace::new(&reduced, prec);
            let mut z = match current.take() {
                Some(prev) => prev.into_iter().map(|r| MpComplex::with_val(prec, r)).collect(),
                None => initial_points(&reduced, prec),
            };
            let outcome = work.aberth(&mut z, options.max_iters);
            iterations += outcome.sweeps;
            let errors = work.errors(&z);
            backward = errors.backward_log2;
            forward = errors.forward_log2;
            let accurate = errors.forward_log2 <= -f64::from((prec / 2 + 8).min(options.accuracy_bits));
            if outcome.converged && accurate {
                roots = z;
                break;
            }
            if prec >= options.max_precision_bits {
                if outcome.converged {
                    // backward-stable but ill-conditioned, e.g. a multiple root
                    roots = z;
                    break;
                }
                return Err(RootError::NonConvergence { iterations, precision_bits: prec, partial: z });
            }
            // a level that converged with almost no correct bits says the
            // conditioning exceeds the working precision, so skip a rung
            let factor = if outcome.converged && forward > -f64::from(prec / 8) { 4 } else { 2 };
            prec = (prec * factor).min(options.max_precision_bits);
            current = Some(z);
        }
    }
    // real coefficients: imaginary parts below the achieved accuracy are noise
    let snap = forward + 8.0;
    for r in roots.iter_mut() {
        r.set_prec(prec);
        let mag = float_log2(&Float::with_val(64, r.abs_ref())).max(0.0);
        if float_log2(&Float::with_val(64, r.imag().abs_ref())) - mag <= snap {
            r.mut_imag().assign(0);
        }
    }
    roots.extend((0..zero_roots).map(|_| MpComplex::new(prec)));
    sort_roots(&mut roots);
    let clusters_suspected = has_clusters(&roots, prec) || zero_roots > 1;
    Ok(RootReport {
        roots,
        precision_bits: prec,
        iterations,
        max_backward_error_log2: backward,
        max_forward_error_log2: forward,
        clusters_suspected,
    })
}

/// Sorts by real part, then imaginary part.
pub fn sort_roots(roots: &mut [MpComplex]) {
    roots.sort_by(|a, b| {
        a.real()
            .partial_cmp(b.real())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.imag().partial_cmp(b.imag()).unwrap_or(std::cmp::Ordering::Equal))
    });
}

fn has_clusters(roots: &[MpComplex], prec: u32) -> bool {
    let threshold = -f64::from(prec / 4);
    let approx: Vec<(f64, f64)> = roots
        .iter()
        .map(|z| (z.real().to_f64(), z.imag().to_f64()))
        .collect();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let (a, b) = (approx[i], approx[j]);
            let coarse = (a.0 - b.0).hypot(a.1 - b.1);
            let scale = 1f64.max(a.0.hypot(a.1));
            if coarse > 1e-8 * scale {
                continue;
            }
            let diff = MpComplex::with_val(prec, &roots[i] - &roots[j]);
            let rel = float_log2(&Float::with_val(64, diff.abs_ref())) - scale.log2();
            if rel < threshold {
                return true;
            }
        }
    }
    false
}

/// Starting points on circles given by the Newton polygon of `log|c_k|`,
/// with golden-angle offsets between circles. Deterministic.
fn initial_points(p: &RatPoly, prec: u32) -> Vec<MpComplex> {
    let d = p.degree().expect("nonzero");
    let logs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.cmp0().is_eq() {
                f64::NEG_INFINITY
            } else {
                float_log2(&Float::with_val(64, Rational::from(c.abs_ref())))
            }
        })
        .collect();
    // upper convex hull of (k, log|c_k|)
    let mut hull: Vec<usize> = Vec::new();
    for k in 0..=d {
        if logs[k] == f64::NEG_INFINITY {
            continue;
        }
        while hull.len() >= 2 {
            let (i, j) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (j - i) as f64 * (logs[k] - logs[i]) - (k - i) as f64 * (logs[j] - logs[i]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }
    let mut points = Vec::with_capacity(d);
    let mut offset = 0.3;
    for w in hull.windows(2) {
        let (i, j) = (w[0], w[1]);
        let count = j - i;
        let log_radius = (logs[i] - logs[j]) / count as f64;
        let radius = Float::with_val(prec, log_radius).exp2();
        for t in 0..count {
            let angle = offset + 2.0 * PI * t as f64 / count as f64;
            let mut z = MpComplex::new(prec);
            z.mut_real().assign(Float::with_val(prec, &radius * angle.cos()));
            z.mut_imag().assign(Float::with_val(prec, &radius * angle.sin()));
            points.push(z);
        }
        offset += GOLDEN_ANGLE;
    }
    points
}

fn to_pair(z: &MpComplex) -> (f64, f64) {
    (z.real().to_f64(), z.imag().to_f64())
}

struct Workspace {
    poly: ComplexPoly,
    abs_coeffs: Vec<Float>,
    prec: u32,
    degree: usize,
}

struct SweepOutcome {
    converged: bool,
    sweeps: usize,
}

struct ErrorEstimates {
    backward_log2: f64,
    forward_log2: f64,
}

impl Workspace {
    fn new(p: &RatPoly, prec: u32) -> Self {
        let poly = p.to_complex(prec);
        let abs_coeffs = p.coeffs().iter().map(|c| Float::with_val(prec, Rational::from(c.abs_ref()))).collect();
        Workspace { poly, abs_coeffs, prec, degree: p.degree().expect("nonzero") }
    }

    /// `Σ |c_k| r^k`.
    fn abs_eval(&self, r: &Float) -> Float {
        let mut acc = Float::new(self.prec);
        for c in self.abs_coeffs.iter().rev() {
            acc *= r;
            acc += c;
        }
        acc
    }

    fn backward_ok(&self, value: &MpComplex, z: &MpComplex) -> bool {
        let r = Float::with_val(self.prec, z.abs_ref());
        let scale = self.abs_eval(&r) * (self.degree as u32 + 1);
        let bound = Float::with_val(self.prec, scale >> (self.prec as i32 - 8));
        Float::with_val(self.prec, value.abs_ref()) <= bound
    }

    fn aberth(&self, z: &mut [MpComplex], max_iters: usize) -> SweepOutcome {
        let n = z.len();
        let prec = self.prec;
        let mut frozen = vec![false; n];
        let mut approx: Vec<(f64, f64)> = z.iter().map(to_pair).collect();
        let mut diff = MpComplex::new(prec);
        let tiny_step = -f64::from(prec) + 4.0;
        for sweep in 1..=max_iters {
            let mut active = 0;
            for i in 0..n {
                if frozen[i] {
                    continue;
                }
                let (value, deriv) = self.poly.eval_with_derivative(&z[i]);
                if self.backward_ok(&value, &z[i]) {
                    frozen[i] = true;
                    continue;
                }
                active += 1;
                let newton = MpComplex::with_val(prec, &value / &deriv);
                // the repulsion sum enters the step at second order, so double
                // precision suffices except for nearly coincident pairs
                let (zr, zi) = approx[i];
                let mut sum = MpComplex::new(prec);
                let (mut sr, mut si) = (0.0f64, 0.0f64);
                let scale = zr.hypot(zi).max(f64::MIN_POSITIVE);
                for (j, &(wr, wi)) in approx.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let (dr, di) = (zr - wr, zi - wi);
                    let m2 = dr * dr + di * di;
                    if m2.is_finite() && m2 > (1e-12 * scale).powi(2) {
                        sr += dr / m2;
                        si -= di / m2;
                    } else {
                        diff.assign(&z[i] - &z[j]);
                        if !(diff.real().is_zero() && diff.imag().is_zero()) {
                            diff.recip_mut();
                            sum += &diff;
                        }
                    }
                }
                sum += MpComplex::with_val(prec, (sr, si));
                // w = N / (1 - N Σ 1/(z_i - z_j))
                let mut denom = MpComplex::with_val(prec, &newton * &sum);
                denom = MpComplex::with_val(prec, 1 - denom);
                let step = if denom.real().is_zero() && denom.imag().is_zero() {
                    newton
                } else {
                    MpComplex::with_val(prec, &newton / &denom)
                };
                let step_log = float_log2(&Float::with_val(64, step.abs_ref()));
                let mag_log = float_log2(&Float::with_val(64, z[i].abs_ref())).max(0.0);
                z[i] -= &step;
                approx[i] = to_pair(&z[i]);
                if step_log - mag_log < tiny_step {
                    frozen[i] = true;
                }
            }
            if active == 0 {
                return SweepOutcome { converged: true, sweeps: sweep };
            }
        }
        let converged = (0..n).all(|i| {
            let (value, _) = self.poly.eval_with_derivative(&z[i]);
            self.backward_ok(&value, &z[i])
        });
        SweepOutcome { converged, sweeps: max_iters }
    }

    /// A-posteriori errors: relative backward error and the larger of the
    /// Newton correction and the rounding-limited accuracy, relative to `max(1,|z|)`.
    fn errors(&self, z: &[MpComplex]) -> ErrorEstimates {
        let prec = self.prec;
        let mut backward = f64::NEG_INFINITY;
        let mut forward = f64::NEG_INFINITY;
        for zi in z {
            let (value, deriv) = self.poly.eval_with_derivative(zi);
            let r = Float::with_val(prec, zi.abs_ref());
            let scale = self.abs_eval(&r);
            let v_log = float_log2(&Float::with_val(64, value.abs_ref()));
            let s_log = float_log2(&scale);
            let d_log = float_log2(&Float::with_val(64, deriv.abs_ref()));
            backward = backward.max(v_log - s_log);
            let mag = float_log2(&r).max(0.0);
            let newton = v_log - d_log + (self.degree as f64).log2();
            let rounding = s_log - d_log - f64::from(prec);
            forward = forward.max(newton.max(rounding) - mag);
        }
        ErrorEstimates { backward_log2: backward, forward_log2: forward }
    }
}

/// Zeros split by membership in the family's support.
#[derive(Debug, Clone)]
pub struct ZeroSet {
    pub support: Support,
    /// Real parts of regular zeros lie in the open support; sorted ascending.
    pub regular: Vec<MpComplex>,
    pub exceptional: Vec<MpComplex>,
    pub certified_simple: bool,
    /// Largest relative backward error of the underlying roots (log2).
    pub residual_bound_log2: f64,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.regular.len() + self.exceptional.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Real parts of the regular zeros.
    pub fn regular_real(&self) -> Vec<Float> {
        self.regular.iter().map(|z| z.real().clone()).collect()
    }
}

/// Splits roots into regular (in the open support) and exceptional zeros.
pub fn classify_zeros(roots: &[MpComplex], support: Support, classification_tol: &Float) -> ZeroSet {
    let mut regular = Vec::new();
    let mut exceptional = Vec::new();
    for z in roots {
        if support.contains_open(z, classification_tol) {
            let mut real = z.clone();
            real.mut_imag().assign(0);
            regular.push(real);
        } else {
            exceptional.push(z.clone());
        }
    }
    sort_roots(&mut regular);
    sort_roots(&mut exceptional);
    ZeroSet {
        support,
        regular,
        exceptional,
        certified_simple: true,
        residual_bound_log2: f64::NEG_INFINITY,
    }
}

/// Roots plus classification in one call, carrying the root report's flags.
pub fn zero_set(p: &RatPoly, support: Support, options: &RootOptions) -> Result<(ZeroSet, RootReport), RootError> {
    let report = all_roots(p, options)?;
    let tol = match options.classification_tol {
        Some(t) => Float::with_val(64, t),
        None => {
            // never tighter than what the roots are known to
            let floor = Float::with_val(64, Float::i_exp(1, (report.max_forward_error_log2 + 8.0).ceil().max(-1e6) as i32));
            default_classification_tol(report.precision_bits).max(&floor)
        }
    };
    let mut set = classify_zeros(&report.roots, support, &tol);
    set.certified_simple = !report.clusters_suspected;
    set.residual_bound_log2 = report.max_backward_error_log2;
    Ok((set, report))
}

#[derive(Debug, Clone)]
pub struct MatchedPair {
    /// Index into the limit-point list.
    pub k: usize,
    pub zero: MpComplex,
    pub limit: MpComplex,
    pub distance: f64,
}

#[derive(Debug, Clone)]
pub struct LimitAssignment {
    /// One pair per limit point, ordered by `k`.
    pub pairs: Vec<MatchedPair>,
    /// All limit points (zeros of the generalized polynomial) in input order.
    pub limit_points: Vec<MpComplex>,
    /// Another assignment has the same total distance within tolerance.
    pub ambiguous: bool,
}

impl LimitAssignment {
    pub fn pair(&self, k: usize) -> Option<&MatchedPair> {
        self.pairs.iter().find(|p| p.k == k)
    }
}

fn distance(a: &MpComplex, b: &MpComplex) -> f64 {
    let prec = a.prec().0.max(b.prec().0);
    abs_f64(&MpComplex::with_val(prec, a - b))
}

/// Minimum-total-distance bijection between exceptional zeros and limit points.
pub fn match_to_limits(exceptional: &[MpComplex], limit_points: &[MpComplex]) -> Result<LimitAssignment, RootError> {
    if exceptional.len() != limit_points.len() {
        return Err(RootError::LengthMismatch { zeros: exceptional.len(), limits: limit_points.len() });
    }
    let mut assignment = match_nearest(exceptional, limit_points)?;
    let n = limit_points.len();
    if (2..=8).contains(&n) {
        let cost: Vec<Vec<f64>> = limit_points
            .iter()
            .map(|l| exceptional.iter().map(|z| distance(z, l)).collect())
            .collect();
        assignment.ambiguous = permutation_costs_tie(&cost);
    }
    Ok(assignment)
}

/// Assigns each limit point its own candidate zero, minimizing the total
/// distance; candidates may outnumber limit points.
pub fn match_nearest(candidates: &[MpComplex], limit_points: &[MpComplex]) -> Result<LimitAssignment, RootError> {
    if candidates.len() < limit_points.len() {
        return Err(RootError::LengthMismatch { zeros: candidates.len(), limits: limit_points.len() });
    }
    let cost: Vec<Vec<f64>> = limit_points
        .iter()
        .map(|l| candidates.iter().map(|z| distance(z, l)).collect())
        .collect();
    let chosen = hungarian(&cost);
    let pairs = chosen
        .into_iter()
        .enumerate()
        .map(|(k, j)| MatchedPair {
            k,
            zero: candidates[j].clone(),
            limit: limit_points[k].clone(),
            distance: cost[k][j],
        })
        .collect();
    Ok(LimitAssignment { pairs, limit_points: limit_points.to_vec(), ambiguous: false })
}

/// Rectangular assignment (rows ≤ columns) minimizing the total cost.
fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    let m = cost[0].len();
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; m + 1];
    let mut p = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=m {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut out = vec![0usize; n];
    for j in 1..=m {
        if p[j] != 0 {
            out[p[j] - 1] = j - 1;
        }
    }
    out
}

/// True when the two cheapest permutations have equal cost within tolerance.
fn permutation_costs_tie(cost: &[Vec<f64>]) -> bool {
    let n = cost.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    let mut second = f64::INFINITY;
    permute(&mut perm, 0, cost, &mut best, &mut second);
    second - best <= 1e-12 * (1.0 + best)
}

fn permute(perm: &mut Vec<usize>, start: usize, cost: &[Vec<f64>], best: &mut f64, second: &mut f64) {
    if start == perm.len() {
        let total: f64 = perm.iter().enumerate().map(|(k, &j)| cost[k][j]).sum();
        if total < *best {
            *second = *best;
            *best = total;
        } else if total < *second {
            *second = total;
        }
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permute(perm, start + 1, cost, best, second);
        perm.swap(start, i);
    }
}

/// Number of open intervals between consecutive `outer` points that contain
/// at least one `inner` point. Both lists sorted ascending.
pub fn interlacing_count(inner: &[Float], outer: &[Float]) -> usize {
    let mut count = 0;
    let mut idx = 0;
    for w in outer.windows(2) {
        while idx < inner.len() && inner[idx] <= w[0] {
            idx += 1;
        }
        if idx < inner.len() && inner[idx] < w[1] {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{hermite, laguerre};

    fn opts() -> RootOptions {
        RootOptions::default()
    }

    fn f(z: &MpComplex) -> (f64, f64) {
        (z.real().to_f64(), z.imag().to_f64())
    }

    #[test]
    fn difference_of_squares() {
        let r = all_roots(&RatPoly::from_ints(&[-1, 0, 1]), &opts()).unwrap();
        assert_eq!(r.roots.len(), 2);
        let (a, b) = (f(&r.roots[0]), f(&r.roots[1]));
        assert!((a.0 + 1.0).abs() < 1e-70 && a.1.abs() < 1e-70);
        assert!((b.0 - 1.0).abs() < 1e-70 && b.1.abs() < 1e-70);
    }

    #[test]
    fn laguerre_two_roots() {
        let a = Rational::from((1, 2));
        let r = all_roots(&laguerre(2, &a), &opts()).unwrap();
        let prec = r.precision_bits;
        let c = Float::with_val(prec, 5) / 2u32;
        let s = Float::with_val(prec, c.sqrt_ref());
        let expect = [Float::with_val(prec, &c - &s), Float::with_val(prec, &c + &s)];
        for (z, e) in r.roots.iter().zip(expect.iter()) {
            let err = Float::with_val(prec, z.real() - e).abs();
            assert!(float_log2(&err) < -240.0);
            assert!(z.imag().is_zero() || float_log2(&Float::with_val(64, z.imag().abs_ref())) < -240.0);
        }
    }

    #[test]
    fn fourth_roots_of_minus_three_quarters() {
        let r = all_roots(&RatPoly::from_ints(&[24, 0, 0, 0, 32]), &opts()).unwrap();
        let target = (0.75f64).powf(0.25) * std::f64::consts::FRAC_1_SQRT_2;
        for z in &r.roots {
            let (re, im) = f(z);
            assert!((re.abs() - target).abs() < 1e-15 && (im.abs() - target).abs() < 1e-15);
        }
    }

    #[test]
    fn zero_roots_are_exact() {
        let r = all_roots(&RatPoly::from_ints(&[0, 0, -4, 1]), &opts()).unwrap();
        assert_eq!(r.roots.len(), 3);
        assert!(r.clusters_suspected);
        assert!(r.roots.iter().filter(|z| z.real().is_zero() && z.imag().is_zero()).count() == 2);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(all_roots(&RatPoly::zero(), &opts()), Err(RootError::Degenerate)));
        assert!(matches!(all_roots(&RatPoly::one(), &opts()), Err(RootError::Degenerate)));
    }

    #[test]
    fn vieta_for_hermite() {
        let p = hermite(60);
        let r = all_roots(&p, &opts()).unwrap();
        let prec = r.precision_bits;
        let mut sum = MpComplex::new(prec);
        for z in &r.roots {
            sum += z;
        }
        assert!(abs_f64(&sum) < 1e-60);
        let tol = default_classification_tol(prec);
        let set = classify_zeros(&r.roots, Support::RealLine, &tol);
        assert_eq!(set.regular.len(), 60);
    }

    #[test]
    fn classification_by_support() {
        let prec = 128;
        let tol = default_classification_tol(prec);
        let pair = [MpComplex::with_val(prec, (-1, -1)), MpComplex::with_val(prec, (-1, 1))];
        let set = classify_zeros(&pair, Support::HalfLine, &tol);
        assert!(set.regular.is_empty() && set.exceptional.len() == 2);
        let pts = [MpComplex::with_val(prec, (0.5, 0)), MpComplex::with_val(prec, (1.5, 0))];
        let set = classify_zeros(&pts, Support::Interval, &tol);
        assert_eq!((set.regular.len(), set.exceptional.len()), (1, 1));
    }

    #[test]
    fn matching() {
        let prec = 64;
        let z = [MpComplex::with_val(prec, (0.1, 0.69)), MpComplex::with_val(prec, (0.1, -0.72))];
        let l = [MpComplex::with_val(prec, (0, -0.7071)), MpComplex::with_val(prec, (0, 0.7071))];
        let a = match_to_limits(&z, &l).unwrap();
        assert!(a.pair(0).unwrap().zero.imag().is_sign_negative());
        assert!(a.pair(1).unwrap().zero.imag().is_sign_positive());
        assert!(!a.ambiguous);
        assert!(matches!(match_to_limits(&z, &l[..1]), Err(RootError::LengthMismatch { .. })));
        let single = match_to_limits(&z[..1], &l[..1]).unwrap();
        assert_eq!(single.pairs.len(), 1);
        let tie = [MpComplex::with_val(prec, (1, 0)), MpComplex::with_val(prec, (-1, 0))];
        let centre = [MpComplex::with_val(prec, (0, 1)), MpComplex::with_val(prec, (0, -1))];
        assert!(match_to_limits(&tie, &centre).unwrap().ambiguous);
    }

    #[test]
    fn interlacing() {
        let fl = |v: &[f64]| v.iter().map(|&x| Float::with_val(64, x)).collect::<Vec<_>>();
        assert_eq!(interlacing_count(&fl(&[0.0]), &fl(&[-1.0, 1.0])), 1);
        assert_eq!(interlacing_count(&fl(&[0.5, 0.6, 2.5]), &fl(&[0.0, 1.0, 2.0, 3.0])), 2);
        assert_eq!(interlacing_count(&fl(&[1.0]), &fl(&[0.0, 1.0, 2.0])), 0);
    }
}
