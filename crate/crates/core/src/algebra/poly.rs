//! Dense univariate polynomials over a [`Ring`].

use std::fmt;

use rug::{Float, Integer};

use super::scalar::{rational_to_complex, MpComplex, Rational, Ring};
use crate::error::AlgebraError;

/// Dense polynomial `c_0 + c_1 x + ... + c_d x^d` with a nonzero leading
/// coefficient. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq)]
pub struct DensePoly<S> {
    coeffs: Vec<S>,
}

/// Exact polynomial over big rationals.
pub type RatPoly = DensePoly<Rational>;
/// Numerical polynomial over multiprecision complex numbers.
pub type ComplexPoly = DensePoly<MpComplex>;

impl<S: Ring> DensePoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&S> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, Ring::plus, |b| b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, Ring::minus, Ring::negated)
    }

    fn zip_with(&self, rhs: &Self, both: impl Fn(&S, &S) -> S, only_rhs: impl Fn(&S) -> S) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => both(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => only_rhs(b),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j].add_product(a, b);
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times_int(i as i64))
                .collect(),
        )
    }

    /// `p(-x)`: sign flip at odd powers.
    pub fn reflect(&self) -> Self {
        DensePoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        Self::new(out)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl<S: Ring> DensePoly<S> {
    pub fn arith(&self, rhs: &Self, op: PolyOp) -> Self {
        match op {
            PolyOp::Add => self.add(rhs),
            PolyOp::Sub => self.sub(rhs),
            PolyOp::Mul => self.mul(rhs),
        }
    }
}

/// A polynomial tagged with its scalar domain, for call sites (CLI, C ABI)
/// that only learn the domain at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarPoly {
    Exact(RatPoly),
    Float(ComplexPoly),
}

impl ScalarPoly {
    pub fn domain_name(&self) -> &'static str {
        match self {
            ScalarPoly::Exact(_) => "rational",
            ScalarPoly::Float(_) => "complex",
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            ScalarPoly::Exact(p) => p.degree(),
            ScalarPoly::Float(p) => p.degree(),
        }
    }
}

/// Exact ring arithmetic on two polynomials of the same scalar domain.
pub fn poly_arith(a: &ScalarPoly, b: &ScalarPoly, op: PolyOp) -> Result<ScalarPoly, AlgebraError> {
    match (a, b) {
        (ScalarPoly::Exact(p), ScalarPoly::Exact(q)) => Ok(ScalarPoly::Exact(p.arith(q, op))),
        (ScalarPoly::Float(p), ScalarPoly::Float(q)) => Ok(ScalarPoly::Float(p.arith(q, op))),
        _ => Err(AlgebraError::DomainMismatch(format!(
            "{} {:?} {}",
            a.domain_name(),
            op,
            b.domain_name()
        ))),
    }
}

impl RatPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `(a + b x)^k`.
    pub fn linear_power(a: &Rational, b: &Rational, k: usize) -> Self {
        let base = Self::new(vec![a.clone(), b.clone()]);
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(&base);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(c)
    }

    /// Divides by `(x - root)` exactly; `Err` when the remainder is nonzero.
    pub fn div_linear_exact(&self, root: &Rational) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![Rational::new(); d];
        let mut carry = Rational::new();
        for i in (0..=d).rev() {
            let value = Rational::from(&self.coeffs[i] + &carry * root.clone());
            if i == 0 {
                if value.cmp0() != std::cmp::Ordering::Equal {
                    return Err(AlgebraError::NonPolynomial(format!(
                        "division by (x - {root}) leaves a nonzero remainder"
                    )));
                }
            } else {
                quotient[i - 1] = value.clone();
            }
            carry = value;
        }
        Ok(Self::new(quotient))
    }

    /// Multiplicity of `root` as a zero, capped at the degree.
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        let mut k = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            match p.div_linear_exact(root) {
                Ok(q) => {
                    p = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        k
    }

    /// `Some(c)` with `self = c * other` for a nonzero rational `c`.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.degree() != other.degree() {
            return None;
        }
        let c = Rational::from(self.leading()? / other.leading()?);
        if other.scale(&c) == *self {
            Some(c)
        } else {
            None
        }
    }

    /// Rounds every coefficient to a complex number at `prec` bits.
    pub fn to_complex(&self, prec: u32) -> ComplexPoly {
        DensePoly::new(self.coeffs.iter().map(|c| rational_to_complex(c, prec)).collect())
    }

    /// Rounded evaluation at a complex point.
    pub fn eval_complex(&self, z: &MpComplex) -> MpComplex {
        let prec = z.prec().0.max(z.prec().1);
        let mut acc = MpComplex::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= z;
            *acc.mut_real() += c;
        }
        acc
    }

    /// Evaluates `Σ |c_i| r^i`, the magnitude scale of cancellation-free evaluation.
    pub fn abs_eval(&self, r: &Float) -> Float {
        let prec = r.prec();
        let mut acc = Float::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= r;
            acc += Float::with_val(prec, Rational::from(c.abs_ref()));
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> Integer {
        self.coeffs
            .iter()
            .fold(Integer::from(1), |acc, c| acc.lcm(c.denom()))
    }
}

impl ComplexPoly {
    /// Evaluates `p(z)` and `p'(z)` in one Horner pass.
    pub fn eval_with_derivative(&self, z: &MpComplex) -> (MpComplex, MpComplex) {
        let prec = z.prec().0;
        let mut p = MpComplex::new(prec);
        let mut dp = MpComplex::new(prec);
        for c in self.coeffs.iter().rev() {
            dp *= z;
            dp += &p;
            p *= z;
            p += c;
        }
        (p, dp)
    }
}

impl<S: Ring + fmt::Display> fmt::Display for DensePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<S: Ring> fmt::Debug for DensePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
