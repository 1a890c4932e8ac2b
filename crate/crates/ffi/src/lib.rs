//! C ABI over `stanley-core`.
//!
//! Objects cross the boundary as opaque heap handles released with their
//! `*_free` function. Every fallible call returns a [`StanleyStatus`]; on
//! failure [`stanley_last_error`] describes the cause for the calling thread.
//! Strings returned by the library are released with [`stanley_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use stanley_core::decomposition::describe;
use stanley_core::StanleyDecomposition as Decomposition;
use stanley_core::{text, Error, MonomialIdeal, SearchLimits, Verdict};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StanleyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    VerificationFailed = 5,
    ResourceLimit = 6,
    Panic = 7,
}

/// Outcome of decomposition verification.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StanleyVerdict {
    Valid = 0,
    Overlap = 1,
    Gap = 2,
    Leak = 3,
}

/// Search budgets for sdepth and fdepth.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StanleyLimits {
    pub max_poset_points: usize,
    pub max_nodes: u64,
}

impl From<StanleyLimits> for SearchLimits {
    fn from(l: StanleyLimits) -> Self {
        SearchLimits {
            max_poset_points: l.max_poset_points,
            max_nodes: l.max_nodes,
        }
    }
}

/// Opaque monomial ideal.
pub struct StanleyIdeal(MonomialIdeal);

/// Opaque Stanley decomposition.
pub struct StanleyDecomposition(Decomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> StanleyStatus {
    match err {
        Error::Parse { .. } | Error::Json(_) => StanleyStatus::Parse,
        e if e.is_resource_limit() => StanleyStatus::ResourceLimit,
        e if e.is_verification_failure() => StanleyStatus::VerificationFailed,
        _ => StanleyStatus::Domain,
    }
}

struct Failure(StanleyStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> StanleyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            StanleyStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            StanleyStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(StanleyStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(StanleyStatus::InvalidUtf8, "string is not UTF-8".into()))
}

/// # Safety
/// `p` is null or points to a live `T`.
unsafe fn read_ref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

/// # Safety
/// `out` is null or writable.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn stanley_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Default budgets: 5000 poset points, 10^7 search nodes.
#[no_mangle]
pub extern "C" fn stanley_limits_default() -> StanleyLimits {
    let d = SearchLimits::default();
    StanleyLimits {
        max_poset_points: d.max_poset_points,
        max_nodes: d.max_nodes,
    }
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stanley_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an ideal in the line format (`vars x y`, `gen x*y`).
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_parse(text: *const c_char, out: *mut *mut StanleyIdeal) -> StanleyStatus {
    guard(|| {
        let ideal = text::parse_ideal(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(StanleyIdeal(ideal))))
    })
}

/// # Safety
/// `ideal` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_free(ideal: *mut StanleyIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of variables, 0 for a null handle.
///
/// # Safety
/// `ideal` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_num_vars(ideal: *const StanleyIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.0.num_vars())
}

/// Renders the minimal generators, e.g. `(x^2, x*y)`.
///
/// # Safety
/// `ideal` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_to_string(ideal: *const StanleyIdeal, out: *mut *mut c_char) -> StanleyStatus {
    guard(|| {
        let ideal = read_ref(ideal)?;
        write_out(out, into_c_string(ideal.0.display().to_string()))
    })
}

/// Writes whether the monomial `mono` (e.g. `x^2*y`) lies in the ideal.
///
/// # Safety
/// `ideal` is a live handle, `mono` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_contains(
    ideal: *const StanleyIdeal,
    mono: *const c_char,
    out: *mut bool,
) -> StanleyStatus {
    guard(|| {
        let ideal = &read_ref(ideal)?.0;
        let m = text::parse_monomial(ideal.vars(), read_str(mono)?)?;
        write_out(out, ideal.contains(&m)?)
    })
}

/// The colon ideal `I : mono` as a new handle.
///
/// # Safety
/// `ideal` is a live handle, `mono` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_colon(
    ideal: *const StanleyIdeal,
    mono: *const c_char,
    out: *mut *mut StanleyIdeal,
) -> StanleyStatus {
    guard(|| {
        let ideal = &read_ref(ideal)?.0;
        let m = text::parse_monomial(ideal.vars(), read_str(mono)?)?;
        let colon = ideal.colon(&m)?;
        write_out(out, Box::into_raw(Box::new(StanleyIdeal(colon))))
    })
}

/// The image of the ideal under `var -> 1`, over the remaining variables.
///
/// # Safety
/// `ideal` is a live handle, `var` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_ideal_localize(
    ideal: *const StanleyIdeal,
    var: *const c_char,
    out: *mut *mut StanleyIdeal,
) -> StanleyStatus {
    guard(|| {
        let ideal = &read_ref(ideal)?.0;
        let local = ideal.localize_var(read_str(var)?)?;
        write_out(out, Box::into_raw(Box::new(StanleyIdeal(local))))
    })
}

/// sdepth of `S/I`. When `decomposition` is non-null it receives an optimal
/// decomposition.
///
/// # Safety
/// `ideal` is a live handle; `out` writable; `decomposition` null or writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_sdepth(
    ideal: *const StanleyIdeal,
    limits: StanleyLimits,
    out: *mut usize,
    decomposition: *mut *mut StanleyDecomposition,
) -> StanleyStatus {
    guard(|| {
        let ideal = &read_ref(ideal)?.0;
        let limits = SearchLimits::from(limits);
        let poset = stanley_core::CharacteristicPoset::new(ideal, &limits)?;
        let result = poset.sdepth(&limits)?;
        if !decomposition.is_null() {
            let d = poset.partition_to_decomposition(&result.partition)?;
            decomposition.write(Box::into_raw(Box::new(StanleyDecomposition(d))));
        }
        write_out(out, result.value)
    })
}

/// fdepth of `S/I`, searching filtration offsets up to the lcm exponent plus `slack`.
///
/// # Safety
/// `ideal` is a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_fdepth(
    ideal: *const StanleyIdeal,
    slack: u32,
    limits: StanleyLimits,
    out: *mut usize,
) -> StanleyStatus {
    guard(|| {
        let ideal = &read_ref(ideal)?.0;
        let result = stanley_core::fdepth(ideal, slack, &limits.into())?;
        write_out(out, result.value)
    })
}

/// Parses a decomposition (`vars`, `gen` and `space u | vars` lines).
/// `base_dir` resolves `ideal <file>` lines and may be null.
///
/// # Safety
/// `text` is a NUL-terminated string; `base_dir` null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_parse(
    text: *const c_char,
    base_dir: *const c_char,
    out: *mut *mut StanleyDecomposition,
) -> StanleyStatus {
    guard(|| {
        let base = if base_dir.is_null() {
            None
        } else {
            Some(Path::new(read_str(base_dir)?))
        };
        let d = text::parse_decomposition(read_str(text)?, base)?;
        write_out(out, Box::into_raw(Box::new(StanleyDecomposition(d))))
    })
}

/// # Safety
/// `d` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_free(d: *mut StanleyDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Renders the decomposition in the line format.
///
/// # Safety
/// `d` is a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_to_string(
    d: *const StanleyDecomposition,
    out: *mut *mut c_char,
) -> StanleyStatus {
    guard(|| {
        let d = &read_ref(d)?.0;
        write_out(out, into_c_string(text::format_decomposition(d)))
    })
}

/// Checks the decomposition. `witness`, when non-null, receives a
/// description of the first offending monomial (or `Valid`).
///
/// # Safety
/// `d` is a live handle; `out` writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_verify(
    d: *const StanleyDecomposition,
    out: *mut StanleyVerdict,
    witness: *mut *mut c_char,
) -> StanleyStatus {
    guard(|| {
        let d = &read_ref(d)?.0;
        let verdict = d.verify()?;
        let code = match verdict {
            Verdict::Valid => StanleyVerdict::Valid,
            Verdict::Overlap(_) => StanleyVerdict::Overlap,
            Verdict::Gap(_) => StanleyVerdict::Gap,
            Verdict::Leak(_) => StanleyVerdict::Leak,
        };
        if !witness.is_null() {
            witness.write(into_c_string(describe(&verdict, d.ideal())));
        }
        write_out(out, code)
    })
}

/// Minimum space dimension of a decomposition.
///
/// # Safety
/// `d` is a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_sdepth(d: *const StanleyDecomposition, out: *mut usize) -> StanleyStatus {
    guard(|| {
        let d = &read_ref(d)?.0;
        write_out(out, d.sdepth()?)
    })
}

/// Localizes a decomposition at `var -> 1`. Fails with
/// `VerificationFailed` when the input or the result is not valid.
///
/// # Safety
/// `d` is a live handle, `var` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stanley_decomposition_localize(
    d: *const StanleyDecomposition,
    var: *const c_char,
    out: *mut *mut StanleyDecomposition,
) -> StanleyStatus {
    guard(|| {
        let d = &read_ref(d)?.0;
        let index = d.ideal().vars().index_of(read_str(var)?)?;
        let image = d.localize(index)?;
        write_out(out, Box::into_raw(Box::new(StanleyDecomposition(image))))
    })
}
