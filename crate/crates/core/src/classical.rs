//! Classical Jacobi, Laguerre and Hermite polynomials at concrete rational parameters.
//!
//! Gamma-function ratios are written as rising factorials so every
//! coefficient is an exact rational for all parameter values.

use rug::Integer;

use crate::algebra::poly::RatPoly;
use crate::algebra::scalar::{rational_to_complex, MpComplex, Rational};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut out = Rational::from(1);
    let mut term = a.clone();
    for _ in 0..k {
        out *= &term;
        term += 1u32;
    }
    out
}

fn factorial(k: u64) -> Integer {
    Integer::from(Integer::factorial(k as u32))
}

/// `P_n^{(α,β)}(x) = Σ_m (n choose m)/n! (α+m+1)_{n-m} (α+β+n+1)_m ((x-1)/2)^m`.
pub fn jacobi(n: u64, alpha: &Rational, beta: &Rational) -> RatPoly {
    let ab = Rational::from(alpha + beta);
    let nf = Rational::from(factorial(n));
    // a_m = C(n,m) (α+m+1)_{n-m} (α+β+n+1)_m / n!
    let base_ab = Rational::from(&ab + (n + 1));
    let mut weights = Vec::with_capacity(n as usize + 1);
    let mut binom = Integer::from(1);
    for m in 0..=n {
        let a_m = Rational::from(pochhammer(&Rational::from(alpha + (m + 1)), n - m) * &binom)
            * pochhammer(&base_ab, m)
            / &nf;
        weights.push(a_m);
        binom *= n - m;
        binom /= m + 1;
    }
    let half_shift = RatPoly::new(vec![Rational::from((-1, 2)), Rational::from((1, 2))]);
    let mut out = RatPoly::zero();
    for a_m in weights.into_iter().rev() {
        out = out.mul(&half_shift).add(&RatPoly::constant(a_m));
    }
    out
}

/// `L_n^{(α)}(x) = Σ_j binom(n+α, n-j) (-x)^j / j!`.
pub fn laguerre(n: u64, alpha: &Rational) -> RatPoly {
    let mut coeffs = vec![Rational::new(); n as usize + 1];
    // c_n = (-1)^n / n!, c_{j-1} = c_j (α+j)/(n-j+1) (-j)
    let mut c = Rational::from((1, factorial(n)));
    if n % 2 == 1 {
        c = -c;
    }
    coeffs[n as usize] = c.clone();
    for j in (1..=n).rev() {
        c *= Rational::from(alpha + j);
        c /= n - j + 1;
        c *= -Rational::from(j);
        coeffs[j as usize - 1] = c.clone();
    }
    RatPoly::new(coeffs)
}

/// Hermite polynomials normalized by `H_{2k} = (-4)^k k! L_k^{(-1/2)}(x²)` and
/// `H_{2k+1} = 2(-4)^k k! x L_k^{(1/2)}(x²)`.
pub fn hermite(n: u64) -> RatPoly {
    let k = n / 2;
    let mut scale = Rational::from(factorial(k)) * Rational::from(Integer::u_pow_u(4, k as u32));
    if k % 2 == 1 {
        scale = -scale;
    }
    if n % 2 == 0 {
        laguerre(k, &Rational::from((-1, 2))).compose_square().scale(&scale)
    } else {
        let odd = laguerre(k, &Rational::from((1, 2))).compose_square().shift_up(1);
        odd.scale(&(scale * 2u32))
    }
}

/// `p(-x)`.
pub fn reflect(p: &RatPoly) -> RatPoly {
    p.reflect()
}

/// `P_n^{(α,β)}(x)` from the three-term recurrence, exact at a rational point.
///
/// `None` when a recurrence denominator `2k(k+α+β)(2k+α+β-2)` vanishes.
pub fn jacobi_by_recurrence(n: u64, alpha: &Rational, beta: &Rational, x: &Rational) -> Option<Rational> {
    let ab = Rational::from(alpha + beta);
    let mut prev = Rational::from(1);
    if n == 0 {
        return Some(prev);
    }
    let mut cur = Rational::from(&ab + 2u32) * x / 2u32 + Rational::from(alpha - beta) / 2u32;
    let a2_b2 = Rational::from(alpha * alpha) - Rational::from(beta * beta);
    for k in 2..=n {
        let two_k_ab = Rational::from(&ab + 2 * k);
        let denom = Rational::from(2 * k) * Rational::from(&ab + k) * Rational::from(&two_k_ab - 2u32);
        if denom.cmp0().is_eq() {
            return None;
        }
        let lin = Rational::from(&two_k_ab - 1u32)
            * (Rational::from(&two_k_ab * Rational::from(&two_k_ab - 2u32)) * x + &a2_b2);
        let back = Rational::from(2u32)
            * Rational::from(alpha + (k - 1))
            * Rational::from(beta + (k - 1))
            * &two_k_ab;
        let next = (lin * &cur - back * &prev) / denom;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// `L_n^{(α)}(z)` from `(k+1)L_{k+1} = (2k+1+α-z)L_k - (k+α)L_{k-1}`.
pub fn laguerre_by_recurrence(n: u64, alpha: &Rational, z: &MpComplex) -> MpComplex {
    let prec = z.prec().0;
    let a = rational_to_complex(alpha, prec);
    let mut prev = MpComplex::with_val(prec, 1);
    if n == 0 {
        return prev;
    }
    let mut cur = MpComplex::with_val(prec, &a + 1u32) - z;
    for k in 1..n {
        let lin = MpComplex::with_val(prec, &a + (2 * k + 1)) - z;
        let back = MpComplex::with_val(prec, &a + k);
        let next = (lin * &cur - back * &prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n(z)` from `H_{k+1} = 2z H_k - 2k H_{k-1}`.
pub fn hermite_by_recurrence(n: u64, z: &MpComplex) -> MpComplex {
    let prec = z.prec().0;
    let mut prev = MpComplex::with_val(prec, 1);
    if n == 0 {
        return prev;
    }
    let mut cur = MpComplex::with_val(prec, z * 2u32);
    for k in 1..n {
        let next = MpComplex::with_val(prec, z * &cur) * 2u32 - MpComplex::with_val(prec, &prev * (2 * k));
        prev = cur;
        cur = next;
    }
    cur
}
