//! C ABI for `skewdouble`.
//!
//! Objects cross the boundary as opaque handles created by `sd_*` constructors
//! and released with the matching `*_free`. Fallible calls return an
//! [`SdStatus`]; on failure a message is available from
//! [`sd_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! [`sd_string_free`]. Points are 1-based, as in the text formats.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use skewdouble::autgroup::{automorphism_group, PermutationGroup};
use skewdouble::hadamard::{paley_skew_hadamard, SignMatrix};
use skewdouble::scheme::{doubled_scheme, scheme_from_skew_hadamard, verify_class2_products, AssociationScheme};
use skewdouble::schurian::{is_schurian, verify_main_theorem};
use skewdouble::triples::{check_extremal_characterization, nu, nu_extremes, require_doubled_scale, NuMode};
use skewdouble::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Input is well-formed but not of the required kind.
    InvalidInput = 4,
    /// Relations violate the association scheme axioms.
    Axiom = 5,
    /// A size cap was exceeded.
    Limit = 6,
    /// The result does not fit the C type.
    Overflow = 7,
    /// A checked property turned out false.
    CheckFailed = 8,
    Panic = 9,
}

/// Opaque skew-Hadamard (or any ±1) matrix.
pub struct SdSignMatrix(SignMatrix);

/// Opaque association scheme.
pub struct SdScheme(AssociationScheme);

/// Opaque permutation group.
pub struct SdGroup(PermutationGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(SdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => SdStatus::Parse,
            Error::Axiom(_) => SdStatus::Axiom,
            Error::OrderOutOfRange { .. } | Error::DegreeCap { .. } => SdStatus::Limit,
            Error::ExtremalTriplesViolated(_) => SdStatus::CheckFailed,
            _ => SdStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn fail<T>(status: SdStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("internal panic: {msg}"));
            SdStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    match p.as_ref() {
        Some(r) => Ok(r),
        None => fail(SdStatus::NullPointer, format!("{what} is null")),
    }
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    match p.as_mut() {
        Some(r) => Ok(r),
        None => fail(SdStatus::NullPointer, format!("{what} is null")),
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return fail(SdStatus::NullPointer, "text is null");
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|e| fail(SdStatus::InvalidUtf8, e.to_string()))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    match CString::new(s) {
        Ok(c) => Ok(c.into_raw()),
        Err(_) => fail(SdStatus::InvalidInput, "output contains a NUL byte"),
    }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message of the last failed call on this thread, or NULL if none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- sign matrices ----

/// Paley skew-Hadamard matrix of order `q + 1` for a prime `q ≡ 3 (mod 4)`.
///
/// # Safety
/// `out_matrix` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_paley(q: u64, out_matrix: *mut *mut SdSignMatrix) -> SdStatus {
    guard(|| {
        let slot = out(out_matrix, "out_matrix")?;
        *slot = boxed(SdSignMatrix(paley_skew_hadamard(q)?));
        Ok(())
    })
}

/// Parses the `.shm` text format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out_matrix` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_parse(src: *const c_char, out_matrix: *mut *mut SdSignMatrix) -> SdStatus {
    guard(|| {
        let slot = out(out_matrix, "out_matrix")?;
        let h: SignMatrix = text(src)?.parse()?;
        *slot = boxed(SdSignMatrix(h));
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle; `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_to_text(m: *const SdSignMatrix, out_text: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let slot = out(out_text, "out_text")?;
        *slot = to_c_string(m.0.to_string())?;
        Ok(())
    })
}

/// Order of the matrix, 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_order(m: *const SdSignMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.order())
}

/// Entry at 0-based `(row, col)`: +1 or -1, or 0 when out of range or NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_entry(m: *const SdSignMatrix, row: usize, col: usize) -> i8 {
    match m.as_ref() {
        Some(m) if row < m.0.order() && col < m.0.order() => m.0.entry(row, col),
        _ => 0,
    }
}

/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_is_skew_hadamard(m: *const SdSignMatrix) -> bool {
    m.as_ref().is_some_and(|m| m.0.is_skew_hadamard())
}

/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_is_normalized(m: *const SdSignMatrix) -> bool {
    m.as_ref().is_some_and(|m| m.0.is_normalized())
}

/// # Safety
/// `m` must be a live handle; `out_matrix` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_normalize(
    m: *const SdSignMatrix,
    out_matrix: *mut *mut SdSignMatrix,
) -> SdStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let slot = out(out_matrix, "out_matrix")?;
        *slot = boxed(SdSignMatrix(m.0.normalize()?));
        Ok(())
    })
}

/// Skew-Hadamard matrix of twice the order.
///
/// # Safety
/// `m` must be a live handle; `out_matrix` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_double(m: *const SdSignMatrix, out_matrix: *mut *mut SdSignMatrix) -> SdStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let slot = out(out_matrix, "out_matrix")?;
        *slot = boxed(SdSignMatrix(m.0.double()?));
        Ok(())
    })
}

/// # Safety
/// `m` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_sign_matrix_free(m: *mut SdSignMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

// ---- schemes ----

/// Class-2 scheme of a normalized skew-Hadamard matrix.
///
/// # Safety
/// `m` must be a live handle; `out_scheme` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_from_skew_hadamard(
    m: *const SdSignMatrix,
    out_scheme: *mut *mut SdScheme,
) -> SdStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let slot = out(out_scheme, "out_scheme")?;
        *slot = boxed(SdScheme(scheme_from_skew_hadamard(&m.0)?));
        Ok(())
    })
}

/// Parses the `.asc` text format and checks the scheme axioms.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out_scheme` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_parse(src: *const c_char, out_scheme: *mut *mut SdScheme) -> SdStatus {
    guard(|| {
        let slot = out(out_scheme, "out_scheme")?;
        let x: AssociationScheme = text(src)?.parse()?;
        *slot = boxed(SdScheme(x));
        Ok(())
    })
}

/// # Safety
/// `x` must be a live handle; `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_to_text(x: *const SdScheme, out_text: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_text, "out_text")?;
        *slot = to_c_string(x.0.to_string())?;
        Ok(())
    })
}

/// Doubled scheme of order `2m + 1`.
///
/// # Safety
/// `x` must be a live handle; `out_scheme` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_doubled(x: *const SdScheme, out_scheme: *mut *mut SdScheme) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_scheme, "out_scheme")?;
        *slot = boxed(SdScheme(doubled_scheme(&x.0)?));
        Ok(())
    })
}

/// Number of points, 0 for NULL.
///
/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_order(x: *const SdScheme) -> usize {
    x.as_ref().map_or(0, |x| x.0.order())
}

/// Number of non-identity relations, 0 for NULL.
///
/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_class(x: *const SdScheme) -> usize {
    x.as_ref().map_or(0, |x| x.0.class())
}

/// Index of the relation containing the 1-based pair `(p, q)`.
///
/// # Safety
/// `x` must be a live handle; `out_relation` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_relation_of(
    x: *const SdScheme,
    p: usize,
    q: usize,
    out_relation: *mut usize,
) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_relation, "out_relation")?;
        *slot = x.0.relation_of(p, q)?;
        Ok(())
    })
}

/// Checks the class-2 product identities.
///
/// # Safety
/// `x` must be a live handle; `out_holds` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_verify_class2_products(x: *const SdScheme, out_holds: *mut bool) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_holds, "out_holds")?;
        *slot = verify_class2_products(&x.0)?;
        Ok(())
    })
}

/// # Safety
/// `x` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_scheme_free(x: *mut SdScheme) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

// ---- triple intersections ----

/// `|R(i) ∩ R(j) ∩ R(k)|` for 1-based points `i < j < k`, with `R(p)` the
/// out-neighbourhood of `p` in relation 1.
///
/// # Safety
/// `x` must be a live handle; `out_nu` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_nu(x: *const SdScheme, i: usize, j: usize, k: usize, out_nu: *mut usize) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_nu, "out_nu")?;
        *slot = nu(&x.0, i, j, k)?;
        Ok(())
    })
}

/// Text report of the maximum of `nu`, its maximizers and the histogram.
///
/// With `assert_extremal` set, the scheme must be a doubled scheme of order
/// at least 15, and [`SdStatus::CheckFailed`] is returned (with the report
/// still written) when the extremal triples are not the expected ones.
///
/// # Safety
/// `x` must be a live handle; `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_nu_report(
    x: *const SdScheme,
    assert_extremal: bool,
    out_text: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_text, "out_text")?;
        if assert_extremal {
            require_doubled_scale(x.0.order())?;
        }
        let report = nu_extremes(&x.0, NuMode::Survey)?;
        *slot = to_c_string(report.to_string())?;
        if assert_extremal {
            check_extremal_characterization(&report)?;
        }
        Ok(())
    })
}

// ---- automorphism groups ----

/// # Safety
/// `x` must be a live handle; `out_group` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_automorphism_group(x: *const SdScheme, out_group: *mut *mut SdGroup) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_group, "out_group")?;
        *slot = boxed(SdGroup(automorphism_group(&x.0)?));
        Ok(())
    })
}

/// Degree of the group, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_group_degree(g: *const SdGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.degree())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_group_generator_count(g: *const SdGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.generators().len())
}

/// Writes the 1-based images of generator `index` into `images`, which must
/// hold `sd_group_degree(g)` entries.
///
/// # Safety
/// `g` must be a live handle; `images` must point to `degree` writable slots.
#[no_mangle]
pub unsafe extern "C" fn sd_group_generator(g: *const SdGroup, index: usize, images: *mut usize) -> SdStatus {
    guard(|| {
        let g = deref(g, "group")?;
        if images.is_null() {
            return fail(SdStatus::NullPointer, "images is null");
        }
        let Some(s) = g.0.generators().get(index) else {
            return fail(
                SdStatus::InvalidInput,
                format!("generator index {index} out of range 0..{}", g.0.generators().len()),
            );
        };
        let dst = std::slice::from_raw_parts_mut(images, g.0.degree());
        dst.copy_from_slice(&s.images());
        Ok(())
    })
}

/// Exact group order; [`SdStatus::Overflow`] if it exceeds `uint64_t`.
///
/// # Safety
/// `g` must be a live handle; `out_order` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_group_order(g: *const SdGroup, out_order: *mut u64) -> SdStatus {
    guard(|| {
        let g = deref(g, "group")?;
        let slot = out(out_order, "out_order")?;
        let order = g.0.order();
        match u64::try_from(&order) {
            Ok(v) => *slot = v,
            Err(_) => return fail(SdStatus::Overflow, format!("group order {order} exceeds 64 bits")),
        }
        Ok(())
    })
}

/// Group order in decimal.
///
/// # Safety
/// `g` must be a live handle; `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_group_order_text(g: *const SdGroup, out_text: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let g = deref(g, "group")?;
        let slot = out(out_text, "out_text")?;
        *slot = to_c_string(g.0.order().to_string())?;
        Ok(())
    })
}

/// Number of orbits on points, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_group_orbit_count(g: *const SdGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.orbits().len())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_group_is_transitive(g: *const SdGroup) -> bool {
    g.as_ref().is_some_and(|g| g.0.is_transitive())
}

/// Generator list in the group text format.
///
/// # Safety
/// `g` must be a live handle; `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_group_to_text(g: *const SdGroup, out_text: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let g = deref(g, "group")?;
        let slot = out(out_text, "out_text")?;
        *slot = to_c_string(g.0.to_string())?;
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_group_free(g: *mut SdGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---- verdicts ----

/// Whether the scheme is the orbital scheme of its automorphism group.
/// `out_text` may be NULL; otherwise it receives the verdict text.
///
/// # Safety
/// `x` must be a live handle; `out_schurian` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_is_schurian(
    x: *const SdScheme,
    out_schurian: *mut bool,
    out_text: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_schurian, "out_schurian")?;
        let verdict = is_schurian(&x.0)?;
        if let Some(t) = out_text.as_mut() {
            *t = to_c_string(verdict.to_string())?;
        }
        *slot = verdict.is_schurian;
        Ok(())
    })
}

/// Runs the doubling pipeline on a class-2 scheme of order at least 7.
/// `out_text` may be NULL; otherwise it receives the stage report.
///
/// # Safety
/// `x` must be a live handle; `out_verified` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_verify_doubling_theorem(
    x: *const SdScheme,
    out_verified: *mut bool,
    out_text: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let x = deref(x, "scheme")?;
        let slot = out(out_verified, "out_verified")?;
        let report = verify_main_theorem(&x.0)?;
        if let Some(t) = out_text.as_mut() {
            *t = to_c_string(report.to_string())?;
        }
        *slot = report.verified();
        Ok(())
    })
}
