//! C interface to the descent algebra library.
//!
//! Objects are opaque handles released with their `*_free` function. Every
//! fallible call returns a [`DescentStatus`]; after a failure,
//! [`descent_last_error`] describes it until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use descent::algebra::DescentAlgebra;
use descent::classifier::lookup_verdict;
use descent::coxeter::{BuildOptions, CoxeterType, Family};
use descent::field::Characteristic;
use descent::quiver::{certify, CertificateRoute, Quiver, RepType};
use descent::rep::summarize;
use descent::Error;

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DescentStatus {
    Ok = 0,
    OutOfScope = 2,
    BudgetExceeded = 3,
    InvalidArgument = 64,
    Inconsistency = 1,
    Io = 74,
    NullPointer = 100,
    Panic = 101,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DescentRepType {
    Finite = 0,
    Tame = 1,
    Wild = 2,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DescentRoute {
    SeparatedQuiverExact = 0,
    PathAlgebra = 1,
    WildQuotient = 2,
    /// No certificate; the verdict is the lookup value.
    Lookup = 3,
}

/// Opaque descent algebra.
pub struct DescentAlgebraHandle(DescentAlgebra);

/// Opaque quiver.
pub struct DescentQuiverHandle(Quiver);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> DescentStatus {
    match err {
        Error::OutOfScope(_) => DescentStatus::OutOfScope,
        Error::BudgetExceeded { .. } => DescentStatus::BudgetExceeded,
        Error::InvalidArgument(_) | Error::HypothesisViolated(_) | Error::Parse { .. } => {
            DescentStatus::InvalidArgument
        }
        Error::Io(_) | Error::Json(_) | Error::CorruptCache { .. } => DescentStatus::Io,
        _ => DescentStatus::Inconsistency,
    }
}

/// Run `body`, converting errors and panics into status codes.
fn guarded(body: impl FnOnce() -> Result<(), Error>) -> DescentStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DescentStatus::Ok,
        Ok(Err(e)) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic");
            DescentStatus::Panic
        }
    }
}

/// Message for the most recent failure on this thread; empty after success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn descent_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build the descent algebra of the group with family letter `family`
/// (`'A'`, `'B'`, `'D'`, `'E'`, `'F'`, `'H'`, `'I'`) and parameter `param`
/// (the rank, or the bond label for `'I'`).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle pointer.
#[no_mangle]
pub unsafe extern "C" fn descent_algebra_new(
    family: c_char,
    param: u32,
    allow_large: bool,
    out: *mut *mut DescentAlgebraHandle,
) -> DescentStatus {
    if out.is_null() {
        set_last_error("out is null");
        return DescentStatus::NullPointer;
    }
    guarded(|| {
        let letter = char::from(family as u8).to_string();
        let family: Family = letter.parse()?;
        let ty = CoxeterType::new(family, param as usize)?;
        let opts = BuildOptions { allow_large, ..BuildOptions::default() };
        let alg = DescentAlgebra::load(ty, &opts)?;
        // SAFETY: checked non-null above; the caller guarantees validity.
        unsafe { *out = Box::into_raw(Box::new(DescentAlgebraHandle(alg))) };
        Ok(())
    })
}

/// # Safety
/// `handle` must come from [`descent_algebra_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn descent_algebra_free(handle: *mut DescentAlgebraHandle) {
    if !handle.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Dimension of the algebra (number of subsets of the generators), 0 for null.
///
/// # Safety
/// `handle` must be null or a live algebra handle.
#[no_mangle]
pub unsafe extern "C" fn descent_algebra_dim(handle: *const DescentAlgebraHandle) -> usize {
    // SAFETY: caller guarantees the handle is null or live.
    unsafe { handle.as_ref() }.map_or(0, |h| h.0.dim())
}

/// Number of conjugacy classes of parabolic subgroups, 0 for null.
///
/// # Safety
/// `handle` must be null or a live algebra handle.
#[no_mangle]
pub unsafe extern "C" fn descent_algebra_class_count(handle: *const DescentAlgebraHandle) -> usize {
    // SAFETY: caller guarantees the handle is null or live.
    unsafe { handle.as_ref() }.map_or(0, |h| h.0.listing().len())
}

/// Ext-quiver in characteristic `p` (0 or a prime).
///
/// # Safety
/// `handle` must be a live algebra handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn descent_ext_quiver(
    handle: *const DescentAlgebraHandle,
    p: u64,
    out: *mut *mut DescentQuiverHandle,
) -> DescentStatus {
    if handle.is_null() || out.is_null() {
        set_last_error("null argument");
        return DescentStatus::NullPointer;
    }
    guarded(|| {
        // SAFETY: checked non-null; caller guarantees liveness.
        let alg = unsafe { &(*handle).0 };
        let q = descent::rep::ext_quiver(alg, Characteristic::new(p)?)?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(DescentQuiverHandle(q))) };
        Ok(())
    })
}

/// # Safety
/// `handle` must come from [`descent_ext_quiver`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn descent_quiver_free(handle: *mut DescentQuiverHandle) {
    if !handle.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of vertices, 0 for null.
///
/// # Safety
/// `handle` must be null or a live quiver handle.
#[no_mangle]
pub unsafe extern "C" fn descent_quiver_vertex_count(handle: *const DescentQuiverHandle) -> usize {
    // SAFETY: caller guarantees the handle is null or live.
    unsafe { handle.as_ref() }.map_or(0, |h| h.0.vertex_count())
}

/// Total number of arrows, 0 for null.
///
/// # Safety
/// `handle` must be null or a live quiver handle.
#[no_mangle]
pub unsafe extern "C" fn descent_quiver_arrow_count(handle: *const DescentQuiverHandle) -> u64 {
    // SAFETY: caller guarantees the handle is null or live.
    unsafe { handle.as_ref() }.map_or(0, |h| h.0.arrow_count())
}

/// Number of arrows from vertex `from` to vertex `to` (0-based).
///
/// # Safety
/// `handle` must be a live quiver handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn descent_quiver_arrows(
    handle: *const DescentQuiverHandle,
    from: usize,
    to: usize,
    out: *mut u32,
) -> DescentStatus {
    if handle.is_null() || out.is_null() {
        set_last_error("null argument");
        return DescentStatus::NullPointer;
    }
    guarded(|| {
        // SAFETY: checked non-null; caller guarantees liveness.
        let q = unsafe { &(*handle).0 };
        let n = q.vertex_count();
        if from >= n || to >= n {
            return Err(Error::InvalidArgument(format!("vertex out of range 0..{n}")));
        }
        // SAFETY: checked non-null above.
        unsafe { *out = q.arrows(from, to) };
        Ok(())
    })
}

/// Representation type in characteristic `p`, with the route that certifies
/// it or [`DescentRoute::Lookup`] when none applies. A certificate that
/// contradicts the lookup is reported as an inconsistency.
///
/// # Safety
/// `handle` must be a live algebra handle; `verdict` and `route` writable.
#[no_mangle]
pub unsafe extern "C" fn descent_classify(
    handle: *const DescentAlgebraHandle,
    p: u64,
    verdict: *mut DescentRepType,
    route: *mut DescentRoute,
) -> DescentStatus {
    if handle.is_null() || verdict.is_null() || route.is_null() {
        set_last_error("null argument");
        return DescentStatus::NullPointer;
    }
    guarded(|| {
        // SAFETY: checked non-null; caller guarantees liveness.
        let alg = unsafe { &(*handle).0 };
        let p = Characteristic::new(p)?;
        let lookup = lookup_verdict(alg.coxeter_type(), p);
        let s = summarize(alg, p)?;
        let cert = certify(&s.quiver, s.radical_square_zero, alg.dim() as u128);
        let r = match &cert {
            Some(c) if c.verdict != lookup => {
                return Err(Error::Inconsistency(format!("certificate says {} but lookup says {lookup}", c.verdict)))
            }
            Some(c) => match c.route {
                CertificateRoute::SeparatedQuiverExact => DescentRoute::SeparatedQuiverExact,
                CertificateRoute::PathAlgebra => DescentRoute::PathAlgebra,
                CertificateRoute::WildQuotient => DescentRoute::WildQuotient,
                CertificateRoute::Lookup => DescentRoute::Lookup,
            },
            None => DescentRoute::Lookup,
        };
        let v = match lookup {
            RepType::Finite => DescentRepType::Finite,
            RepType::Tame => DescentRepType::Tame,
            RepType::Wild => DescentRepType::Wild,
        };
        // SAFETY: checked non-null above.
        unsafe {
            *verdict = v;
            *route = r;
        }
        Ok(())
    })
}
