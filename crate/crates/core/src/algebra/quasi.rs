//! Quasi-functions: finite sums `Σ p_k(x) · c(x)^{γ_k}` for a fixed carrier `c`.
//!
//! The carriers are `(1+x)`, `x`, and `e^{rate·x}`. The set of such sums is a
//! ring closed under differentiation, which is what Wronskian matrices with
//! dressed columns need.

use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::Integer;

use super::poly::RatPoly;
use super::scalar::{format_rational, rational_to_complex, MpComplex, Rational};
use crate::error::AlgebraError;

/// Largest number of functions accepted by [`wronskian_det`].
pub const MAX_WRONSKIAN_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Carrier {
    /// `(1+x)`
    OnePlusX,
    /// `x`
    X,
    /// `e^{rate·x}`
    Exp(Rational),
}

impl Carrier {
    fn is_affine(&self) -> bool {
        !matches!(self, Carrier::Exp(_))
    }

    /// Root of the affine base polynomial.
    fn affine_root(&self) -> Rational {
        match self {
            Carrier::OnePlusX => Rational::from(-1),
            _ => Rational::new(),
        }
    }

    fn affine_base(&self) -> RatPoly {
        match self {
            Carrier::OnePlusX => RatPoly::from_ints(&[1, 1]),
            _ => RatPoly::x(),
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::OnePlusX => write!(f, "(1+x)"),
            Carrier::X => write!(f, "x"),
            Carrier::Exp(rate) => write!(f, "exp({}x)", format_rational(rate)),
        }
    }
}

/// `Σ poly_k · carrier^{exponent_k}` in canonical form.
///
/// For affine carriers there is one term per exponent class modulo 1, stored
/// at the largest exponent for which the polynomial is still a polynomial (the
/// base factor is divided out). For exponential carriers exponents are kept
/// distinct. Terms are sorted by exponent and never carry a zero polynomial.
#[derive(Clone, PartialEq)]
pub struct QuasiFunction {
    carrier: Carrier,
    terms: Vec<(Rational, RatPoly)>,
}

impl QuasiFunction {
    pub fn zero(carrier: Carrier) -> Self {
        QuasiFunction { carrier, terms: Vec::new() }
    }

    /// `p · carrier^0`.
    pub fn polynomial(carrier: Carrier, p: RatPoly) -> Self {
        Self::tagged(carrier, Rational::new(), p)
    }

    /// `p · carrier^exponent`.
    pub fn tagged(carrier: Carrier, exponent: Rational, p: RatPoly) -> Self {
        Self::from_terms(carrier, vec![(exponent, p)])
    }

    pub fn from_terms(carrier: Carrier, terms: Vec<(Rational, RatPoly)>) -> Self {
        let mut f = QuasiFunction { carrier, terms };
        f.canonicalize();
        f
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn terms(&self) -> &[(Rational, RatPoly)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn canonicalize(&mut self) {
        let terms = std::mem::take(&mut self.terms);
        if self.carrier.is_affine() {
            self.terms = merge_affine(&self.carrier, terms);
        } else {
            let mut by_exp: BTreeMap<Rational, RatPoly> = BTreeMap::new();
            for (e, p) in terms {
                let slot = by_exp.entry(e).or_insert_with(RatPoly::zero);
                *slot = slot.add(&p);
            }
            self.terms = by_exp.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        }
    }

    fn check_carrier(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.carrier == other.carrier {
            Ok(())
        } else {
            Err(AlgebraError::MixedCarriers(format!("{} vs {}", self.carrier, other.carrier)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_carrier(other)?;
        let terms = self.terms.iter().chain(other.terms.iter()).cloned().collect();
        Ok(Self::from_terms(self.carrier.clone(), terms))
    }

    pub fn neg(&self) -> Self {
        QuasiFunction {
            carrier: self.carrier.clone(),
            terms: self.terms.iter().map(|(e, p)| (e.clone(), p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_carrier(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, p1) in &self.terms {
            for (e2, p2) in &other.terms {
                terms.push((Rational::from(e1 + e2), p1.mul(p2)));
            }
        }
        Ok(Self::from_terms(self.carrier.clone(), terms))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.carrier.clone(),
            self.terms.iter().map(|(e, p)| (e.clone(), p.scale(c))).collect(),
        )
    }

    /// Multiplies by `carrier^gamma`.
    pub fn shift_exponent(&self, gamma: &Rational) -> Self {
        Self::from_terms(
            self.carrier.clone(),
            self.terms
                .iter()
                .map(|(e, p)| (Rational::from(e + gamma), p.clone()))
                .collect(),
        )
    }

    /// Rounded evaluation at a complex point, principal branch for fractional powers.
    pub fn eval_complex(&self, z: &MpComplex) -> MpComplex {
        let prec = z.prec().0;
        let mut acc = MpComplex::new(prec);
        for (e, p) in &self.terms {
            let base = match &self.carrier {
                Carrier::OnePlusX => MpComplex::with_val(prec, z + 1u32),
                Carrier::X => z.clone(),
                Carrier::Exp(rate) => {
                    let r = rational_to_complex(rate, prec);
                    MpComplex::with_val(prec, &r * z).exp()
                }
            };
            let power = rational_to_complex(e, prec);
            let factor = MpComplex::with_val(prec, base.pow(&power));
            acc += p.eval_complex(z) * factor;
        }
        acc
    }
}

/// Groups terms by exponent class, merges at the minimal exponent, then
/// divides out the base as far as possible.
fn merge_affine(carrier: &Carrier, terms: Vec<(Rational, RatPoly)>) -> Vec<(Rational, RatPoly)> {
    let mut classes: BTreeMap<Rational, Vec<(Rational, RatPoly)>> = BTreeMap::new();
    for (e, p) in terms {
        if p.is_zero() {
            continue;
        }
        let floor = Integer::from(e.floor_ref());
        let class = Rational::from(&e - &floor);
        classes.entry(class).or_default().push((e, p));
    }
    let base = carrier.affine_base();
    let root = carrier.affine_root();
    let mut out = Vec::new();
    for (_, group) in classes {
        let min = group.iter().map(|(e, _)| e.clone()).min().expect("non-empty group");
        let mut sum = RatPoly::zero();
        for (e, p) in group {
            let k = Rational::from(&e - &min);
            let k = k.numer().to_usize().expect("integer exponent gap");
            let mut q = p;
            for _ in 0..k {
                q = q.mul(&base);
            }
            sum = sum.add(&q);
        }
        if sum.is_zero() {
            continue;
        }
        let mut exponent = min;
        while sum.degree().unwrap_or(0) > 0 {
            match sum.div_linear_exact(&root) {
                Ok(q) => {
                    sum = q;
                    exponent += 1;
                }
                Err(_) => break,
            }
        }
        out.push((exponent, sum));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// `d/dx` of a quasi-function, exact over the rationals.
pub fn quasi_derivative(f: &QuasiFunction) -> QuasiFunction {
    let mut terms = Vec::with_capacity(f.terms.len() * 2);
    for (gamma, p) in &f.terms {
        match &f.carrier {
            Carrier::OnePlusX | Carrier::X => {
                if gamma.cmp0().is_eq() {
                    terms.push((Rational::new(), p.derivative()));
                } else {
                    // ((base) p' + γ base' p) base^{γ-1}; base' = 1
                    let lifted = f.carrier.affine_base().mul(&p.derivative());
                    let new_poly = lifted.add(&p.scale(gamma));
                    terms.push((Rational::from(gamma - 1u32), new_poly));
                }
            }
            Carrier::Exp(rate) => {
                let c = Rational::from(gamma * rate);
                terms.push((gamma.clone(), p.derivative().add(&p.scale(&c))));
            }
        }
    }
    QuasiFunction::from_terms(f.carrier.clone(), terms)
}

/// Successive derivatives `f, f', ..., f^{(k-1)}`.
pub fn derivatives(f: &QuasiFunction, k: usize) -> Vec<QuasiFunction> {
    let mut out = Vec::with_capacity(k);
    let mut current = f.clone();
    for i in 0..k {
        if i + 1 < k {
            let next = quasi_derivative(&current);
            out.push(current);
            current = next;
        } else {
            out.push(current.clone());
        }
    }
    out
}

/// Wronskian determinant `det[f_j^{(i)}]` by column-wise Laplace expansion.
///
/// Partial determinants are indexed by the set of rows already used, so every
/// column is multiplied into at most `r · 2^{r-1}` minors and the result is
/// exact. Put the largest function last: it is only touched in the final pass.
pub fn wronskian_det(fs: &[QuasiFunction]) -> Result<QuasiFunction, AlgebraError> {
    let r = fs.len();
    let Some(first) = fs.first() else {
        return Ok(QuasiFunction::polynomial(Carrier::OnePlusX, RatPoly::one()));
    };
    if r > MAX_WRONSKIAN_SIZE {
        return Err(AlgebraError::TooManyFunctions(r));
    }
    let carrier = first.carrier.clone();
    if let Some(bad) = fs.iter().find(|f| f.carrier != carrier) {
        return Err(AlgebraError::MixedCarriers(format!("{} vs {}", carrier, bad.carrier)));
    }

    let mut minors: Vec<Option<QuasiFunction>> = vec![None; 1 << r];
    minors[0] = Some(QuasiFunction::polynomial(carrier.clone(), RatPoly::one()));
    for (j, f) in fs.iter().enumerate() {
        let rows = derivatives(f, r);
        let mut next: Vec<Option<QuasiFunction>> = vec![None; 1 << r];
        for (mask, minor) in minors.iter().enumerate() {
            let Some(minor) = minor else { continue };
            if mask.count_ones() as usize != j || minor.is_zero() {
                continue;
            }
            for (i, entry) in rows.iter().enumerate() {
                if mask & (1 << i) != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (i + 1)).count_ones();
                let mut term = minor.mul(entry)?;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let slot = &mut next[mask | (1 << i)];
                *slot = Some(match slot.take() {
                    Some(acc) => acc.add(&term)?,
                    None => term,
                });
            }
        }
        minors = next;
    }
    Ok(minors
        .pop()
        .flatten()
        .unwrap_or_else(|| QuasiFunction::zero(carrier)))
}

/// Multiplies `f` by `carrier^prefactor` and returns the resulting polynomial.
///
/// After the shift every term must sit at a non-negative integer exponent of
/// an affine carrier, or at exponent zero of an exponential carrier.
pub fn extract_polynomial(f: &QuasiFunction, prefactor: &Rational) -> Result<RatPoly, AlgebraError> {
    let shifted = f.shift_exponent(prefactor);
    match shifted.terms.as_slice() {
        [] => Ok(RatPoly::zero()),
        [(e, p)] => {
            if shifted.carrier.is_affine() {
                if *e.denom() != 1 || e.cmp0().is_lt() {
                    return Err(AlgebraError::NonPolynomial(format!(
                        "residual factor {}^{}",
                        shifted.carrier,
                        format_rational(e)
                    )));
                }
                let k = e.numer().to_usize().ok_or_else(|| {
                    AlgebraError::NonPolynomial(format!("exponent {} too large", format_rational(e)))
                })?;
                let base = shifted.carrier.affine_base();
                let mut out = p.clone();
                for _ in 0..k {
                    out = out.mul(&base);
                }
                Ok(out)
            } else if e.cmp0().is_eq() {
                Ok(p.clone())
            } else {
                Err(AlgebraError::NonPolynomial(format!(
                    "residual factor {}^{}",
                    shifted.carrier,
                    format_rational(e)
                )))
            }
        }
        many => Err(AlgebraError::NonPolynomial(format!(
            "{} carrier exponent classes remain",
            many.len()
        ))),
    }
}

impl fmt::Debug for QuasiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuasiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{p}]·{}^{}", self.carrier, format_rational(e))?;
        }
        Ok(())
    }
}
