//! C ABI for the `xop` library.
//!
//! Objects are opaque handles created by `xop_*` constructors and released by
//! the matching `*_free` function. Every fallible call returns an
//! [`XopStatus`]; on failure a message is available from
//! [`xop_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, c_int};
use xop::algebra::{parse_complex, parse_rational};
use xop::asymptotics::{limit_formula, limit_points, nearest_limit, scaled_gap_study};
use xop::cli::CliError;
use xop::construct::{exceptional_polynomial, generalized_polynomial, FamilySpec};
use xop::roots::{zero_set, RootOptions, ZeroSet};
use xop::{MpComplex, Partition, RatPoly};

/// Status codes; the numeric values match the `xop` exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XopStatus {
    Ok = 0,
    CheckFailed = 1,
    BadInput = 2,
    Construction = 3,
    NonConvergence = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A family of exceptional polynomials with fixed parameters.
pub struct XopFamily {
    spec: FamilySpec,
}

/// An exact polynomial with rational coefficients.
pub struct XopPoly {
    poly: RatPoly,
}

/// Zeros of a polynomial split into regular and exceptional ones.
pub struct XopZeros {
    set: ZeroSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(code: i32) -> XopStatus {
    match code {
        0 => XopStatus::Ok,
        1 => XopStatus::CheckFailed,
        2 => XopStatus::BadInput,
        3 => XopStatus::Construction,
        _ => XopStatus::NonConvergence,
    }
}

fn fail(e: impl Into<CliError>) -> XopStatus {
    let e = e.into();
    set_error(&e.message);
    status_of(e.code)
}

/// Runs `body`, converting panics and errors into a status.
fn guard(body: impl FnOnce() -> Result<(), XopStatus>) -> XopStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => XopStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            XopStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, XopStatus> {
    if s.is_null() {
        set_error(&format!("{what} is null"));
        return Err(XopStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        XopStatus::BadInput
    })
}

unsafe fn read_partition(s: *const c_char, what: &str) -> Result<Partition, XopStatus> {
    if s.is_null() {
        return Ok(Partition::empty());
    }
    read_str(s, what)?.parse::<Partition>().map_err(fail)
}

unsafe fn read_rational(s: *const c_char, what: &str) -> Result<xop::Rational, XopStatus> {
    parse_rational(read_str(s, what)?).map_err(fail)
}

fn check_out<T>(out: *mut T) -> Result<(), XopStatus> {
    if out.is_null() {
        set_error("output pointer is null");
        Err(XopStatus::NullPointer)
    } else {
        Ok(())
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, XopStatus> {
    p.as_ref().ok_or_else(|| {
        set_error(&format!("{what} is null"));
        XopStatus::NullPointer
    })
}

unsafe fn finish_family(spec: FamilySpec, out: *mut *mut XopFamily) -> Result<(), XopStatus> {
    spec.validate().map_err(fail)?;
    *out = Box::into_raw(Box::new(XopFamily { spec }));
    Ok(())
}

/// Message of the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next `xop_*` call on this thread.
#[no_mangle]
pub extern "C" fn xop_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Exceptional Hermite family for a partition such as `"2,2"`.
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn xop_family_hermite(partition: *const c_char, out: *mut *mut XopFamily) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let lambda = read_str(partition, "partition")?.parse::<Partition>().map_err(fail)?;
        finish_family(FamilySpec::Hermite { lambda }, out)
    })
}

/// Type-III Laguerre family; `alpha` is an exact rational such as `"-2/5"`.
///
/// # Safety
/// `alpha` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn xop_family_laguerre3(m: u32, alpha: *const c_char, out: *mut *mut XopFamily) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let alpha = read_rational(alpha, "alpha")?;
        finish_family(FamilySpec::LaguerreTypeIII { m, alpha }, out)
    })
}

/// Type-I Laguerre family.
///
/// # Safety
/// `alpha` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn xop_family_laguerre1(m: u32, alpha: *const c_char, out: *mut *mut XopFamily) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let alpha = read_rational(alpha, "alpha")?;
        finish_family(FamilySpec::LaguerreTypeI { m, alpha }, out)
    })
}

/// Generic Laguerre family; NULL partitions mean empty.
///
/// # Safety
/// String arguments must be NUL-terminated or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xop_family_laguerre(
    alpha: *const c_char,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut XopFamily,
) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let spec = FamilySpec::Laguerre {
            alpha: read_rational(alpha, "alpha")?,
            lambda: read_partition(lambda, "lambda")?,
            mu: read_partition(mu, "mu")?,
        };
        finish_family(spec, out)
    })
}

/// Jacobi family; NULL partitions mean empty.
///
/// # Safety
/// String arguments must be NUL-terminated or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn xop_family_jacobi(
    alpha: *const c_char,
    beta: *const c_char,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut XopFamily,
) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let spec = FamilySpec::Jacobi {
            alpha: read_rational(alpha, "alpha")?,
            beta: read_rational(beta, "beta")?,
            lambda: read_partition(lambda, "lambda")?,
            mu: read_partition(mu, "mu")?,
        };
        finish_family(spec, out)
    })
}

/// Releases a family; NULL is ignored.
///
/// # Safety
/// `family` must come from an `xop_family_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xop_family_free(family: *mut XopFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// 1 when `n` is a degree of the family, 0 otherwise (also for NULL).
///
/// # Safety
/// `family` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn xop_family_contains(family: *const XopFamily, n: u64) -> c_int {
    family.as_ref().map_or(0, |f| c_int::from(f.spec.index_set_contains(n)))
}

/// The degree-`n` exceptional polynomial.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xop_exceptional_polynomial(
    family: *const XopFamily,
    n: u64,
    out: *mut *mut XopPoly,
) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let family = deref(family, "family")?;
        let poly = exceptional_polynomial(&family.spec, n).map_err(fail)?;
        *out = Box::into_raw(Box::new(XopPoly { poly }));
        Ok(())
    })
}

/// The generalized polynomial whose zeros are the limit points.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xop_generalized_polynomial(family: *const XopFamily, out: *mut *mut XopPoly) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let family = deref(family, "family")?;
        let poly = generalized_polynomial(&family.spec).map_err(fail)?;
        *out = Box::into_raw(Box::new(XopPoly { poly }));
        Ok(())
    })
}

/// Degree, or -1 for the zero polynomial or NULL.
///
/// # Safety
/// `poly` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn xop_poly_degree(poly: *const XopPoly) -> i64 {
    poly.as_ref().and_then(|p| p.poly.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of `x^i` as an exact `"p/q"` string; free it with [`xop_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xop_poly_coefficient(poly: *const XopPoly, i: usize, out: *mut *mut c_char) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let poly = deref(poly, "poly")?;
        let text = poly
            .poly
            .coeff(i)
            .map_or_else(|| "0".to_string(), xop::algebra::scalar::format_rational);
        *out = CString::new(text).expect("no NUL in digits").into_raw();
        Ok(())
    })
}

/// Releases a polynomial; NULL is ignored.
///
/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xop_poly_free(poly: *mut XopPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// All zeros of `poly`, classified against the support of `family`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xop_zeros(
    family: *const XopFamily,
    poly: *const XopPoly,
    precision_bits: u32,
    out: *mut *mut XopZeros,
) -> XopStatus {
    guard(|| {
        check_out(out)?;
        let family = deref(family, "family")?;
        let poly = deref(poly, "poly")?;
        let options = RootOptions::with_precision(precision_bits.max(64));
        let (set, _) = zero_set(&poly.poly, family.spec.support(), &options).map_err(fail)?;
        *out = Box::into_raw(Box::new(XopZeros { set }));
        Ok(())
    })
}

/// Number of regular zeros (0 for NULL).
///
/// # Safety
/// `zeros` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn xop_zeros_regular_count(zeros: *const XopZeros) -> usize {
    zeros.as_ref().map_or(0, |z| z.set.regular.len())
}

/// Number of exceptional zeros (0 for NULL).
///
/// # Safety
/// `zeros` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn xop_zeros_exceptional_count(zeros: *const XopZeros) -> usize {
    zeros.as_ref().map_or(0, |z| z.set.exceptional.len())
}

/// The `i`-th zero, regular ones first, rounded to double precision.
///
/// # Safety
/// `zeros` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn xop_zeros_get(
    zeros: *const XopZeros,
    i: usize,
    re: *mut f64,
    im: *mut f64,
    exceptional: *mut c_int,
) -> XopStatus {
    guard(|| {
        check_out(re)?;
        check_out(im)?;
        check_out(exceptional)?;
        let zeros = deref(zeros, "zeros")?;
        let regular = zeros.set.regular.len();
        let (z, flag) = if i < regular {
            (&zeros.set.regular[i], 0)
        } else if let Some(z) = zeros.set.exceptional.get(i - regular) {
            (z, 1)
        } else {
            set_error(&format!("index {i} out of range"));
            return Err(XopStatus::BadInput);
        };
        *re = z.real().to_f64();
        *im = z.imag().to_f64();
        *exceptional = flag;
        Ok(())
    })
}

/// Releases a zero set; NULL is ignored.
///
/// # Safety
/// `zeros` must come from [`xop_zeros`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xop_zeros_free(zeros: *mut XopZeros) {
    if !zeros.is_null() {
        drop(Box::from_raw(zeros));
    }
}

/// Predicted limit of the scaled gap for a limit point `zeta` of `family`.
///
/// # Safety
/// `family` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn xop_limit_formula(
    family: *const XopFamily,
    zeta_re: f64,
    zeta_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> XopStatus {
    guard(|| {
        check_out(out_re)?;
        check_out(out_im)?;
        let family = deref(family, "family")?;
        let zeta = MpComplex::with_val(128, (zeta_re, zeta_im));
        let value = limit_formula(family.spec.kind(), &zeta).map_err(fail)?;
        *out_re = value.real().to_f64();
        *out_im = value.imag().to_f64();
        Ok(())
    })
}

/// Scaled gap `n^ρ (ζ_{k,n} - ζ_{k,∞})` for the limit point nearest to `anchor`
/// (a string such as `"0.66+0.69i"`).
///
/// # Safety
/// `family` must be a live handle, `anchor` NUL-terminated, outputs writable.
#[no_mangle]
pub unsafe extern "C" fn xop_scaled_gap(
    family: *const XopFamily,
    anchor: *const c_char,
    n: u64,
    precision_bits: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> XopStatus {
    guard(|| {
        check_out(out_re)?;
        check_out(out_im)?;
        let family = deref(family, "family")?;
        let prec = precision_bits.max(64);
        let anchor = parse_complex(read_str(anchor, "anchor")?, prec).map_err(fail)?;
        let options = RootOptions::with_precision(prec);
        let (points, _) = limit_points(&family.spec, &options).map_err(fail)?;
        let Some(k) = nearest_limit(&points, &anchor) else {
            set_error("the family has no limit points");
            return Err(XopStatus::BadInput);
        };
        let report = scaled_gap_study(&family.spec, k, &[n], &options).map_err(fail)?;
        let value = report.rows[0].outcome.clone().map_err(fail)?;
        *out_re = value.scaled_gap.real().to_f64();
        *out_im = value.scaled_gap.imag().to_f64();
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_values_match_exit_codes() {
        assert_eq!(XopStatus::BadInput as i32, xop::cli::EXIT_BAD_INPUT);
        assert_eq!(XopStatus::NonConvergence as i32, xop::cli::EXIT_NONCONVERGENCE);
        assert_eq!(status_of(3), XopStatus::Construction);
    }

    #[test]
    fn error_slot_is_per_call() {
        unsafe {
            let mut fam = ptr::null_mut();
            assert_eq!(xop_family_hermite(c"1,x".as_ptr(), &mut fam), XopStatus::BadInput);
            assert!(!xop_last_error().is_null());
            assert_eq!(xop_family_hermite(c"1,1".as_ptr(), &mut fam), XopStatus::Ok);
            assert!(xop_last_error().is_null());
            xop_family_free(fam);
        }
    }
}
