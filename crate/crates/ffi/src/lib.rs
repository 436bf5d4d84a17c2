//! C ABI for spectramin.
//!
//! Graphs cross the boundary as opaque `SmGraph` handles. Every fallible call
//! returns an `SmStatus`; on failure a message is available from
//! `sm_last_error_message` on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and must be released with
//! `sm_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spectramin::constructions::FamilySpec;
use spectramin::search;
use spectramin::spectral::spectral_radius_any;
use spectramin::transforms::TransformSpec;
use spectramin::{Error, Graph};

/// Opaque graph handle.
pub struct SmGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Infeasible = 4,
    NoConvergence = 5,
    Budget = 6,
    Inconsistent = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let mut s: String = msg.into();
    s.retain(|c| c != '\0');
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(s).expect("no nul")));
}

fn status_of(err: &Error) -> SmStatus {
    match err {
        Error::Graph6(_) | Error::Parse(_) => SmStatus::Parse,
        Error::NoConvergence { .. } | Error::NoRoot => SmStatus::NoConvergence,
        Error::Budget(_) => SmStatus::Budget,
        Error::Inconsistent(_) => SmStatus::Inconsistent,
        Error::Infeasible(_) | Error::Disconnected | Error::CanonicalTooLarge { .. } => SmStatus::Infeasible,
        _ => SmStatus::InvalidArgument,
    }
}

struct Fail(SmStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SmStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SmStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SmStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn graph_ref<'a>(g: *const SmGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn put_graph(out: *mut *mut SmGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SmGraph(g)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|_| Fail(SmStatus::InvalidArgument, "interior nul".into()))?.into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_graph_from_graph6(text: *const c_char, out: *mut *mut SmGraph) -> SmStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        put_graph(out, Graph::from_graph6(s.trim())?)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sm_graph_free(g: *mut SmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_graph_to_graph6(g: *const SmGraph, out: *mut *mut c_char) -> SmStatus {
    guard(|| put_string(out, graph_ref(g)?.to_graph6()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Order and size of a graph. Either out-pointer may be NULL.
///
/// # Safety
/// `g` must be a live handle; non-null out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sm_graph_counts(g: *const SmGraph, n: *mut usize, e: *mut usize) -> SmStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if !n.is_null() {
            *n = g.order();
        }
        if !e.is_null() {
            *e = g.edge_count();
        }
        Ok(())
    })
}

/// Spectral radius with a certified error bound. `error_bound` may be NULL.
///
/// # Safety
/// `g` must be a live handle; `rho` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sm_spectral_radius(
    g: *const SmGraph,
    tol: f64,
    rho: *mut f64,
    error_bound: *mut f64,
) -> SmStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if rho.is_null() {
            return Err(null("rho"));
        }
        if !(tol > 0.0) {
            return Err(Fail(SmStatus::InvalidArgument, format!("tolerance must be positive, got {tol}")));
        }
        let r = spectral_radius_any(g, tol)?;
        *rho = r.rho;
        if !error_bound.is_null() {
            *error_bound = r.error_bound;
        }
        Ok(())
    })
}

/// Builds a graph from a family spec such as `"cycle:n=5"`.
///
/// # Safety
/// `spec` must be a valid string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_construct(spec: *const c_char, out: *mut *mut SmGraph) -> SmStatus {
    guard(|| {
        let spec: FamilySpec = read_str(spec, "spec")?.parse()?;
        put_graph(out, spec.build()?)
    })
}

/// Applies a transform such as `"kelmans:u=0,v=3"` and returns a new handle.
///
/// # Safety
/// `g` must be a live handle, `spec` a valid string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_transform(g: *const SmGraph, spec: *const c_char, out: *mut *mut SmGraph) -> SmStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let spec: TransformSpec = read_str(spec, "spec")?.parse()?;
        put_graph(out, spec.apply(g)?)
    })
}

/// Exhaustive minimizer report for one (n, e) as a single JSON object.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_minimize_json(n: usize, e: usize, out: *mut *mut c_char) -> SmStatus {
    guard(|| {
        let report = search::minimizers(n, e)?;
        put_string(out, report.to_json_line())
    })
}
