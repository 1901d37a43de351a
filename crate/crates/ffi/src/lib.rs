//! C ABI over `pg_core`.
//!
//! Every fallible call returns a [`PgStatus`]; on failure the message is
//! available from [`pg_last_error`] on the same thread. Handles are opaque
//! and must be released with their `_free` function. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`pg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pg_core::constructors::{build_group_with_cap, parse_group_spec};
use pg_core::group::group_cap;
use pg_core::harness::{analyze_group, default_corpus, run_all, run_theorem_case, AnalyzeOptions, HarnessOptions};
use pg_core::patterns::{find_induced_pattern, pattern};
use pg_core::power_graph::build_power_graph;
use pg_core::{Error, Graph, Group};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    InvalidParameter = 4,
    CapExceeded = 5,
    UnknownPattern = 6,
    UnknownTheorem = 7,
    OutOfRange = 8,
    Internal = 9,
}

/// A finite group.
pub struct PgGroup(Group);

/// A power graph.
pub struct PgGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PgStatus {
    match e {
        Error::Build { source, .. } => status_of(source),
        Error::Syntax { .. } | Error::UnknownFamily(_) => PgStatus::Syntax,
        Error::CapExceeded { .. } => PgStatus::CapExceeded,
        Error::UnknownPattern(_) => PgStatus::UnknownPattern,
        Error::UnknownTheorem(_) => PgStatus::UnknownTheorem,
        _ => PgStatus::InvalidParameter,
    }
}

struct Fail(PgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PgStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(PgStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(PgStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(PgStatus::NullPointer, "null output pointer".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(PgStatus::NullPointer, "null handle".into()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no nul").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the group named by `spec`, e.g. `"S4"` or `"C3 x SD(7,3,2)"`.
///
/// # Safety
/// `spec` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_group_build(spec: *const c_char, out: *mut *mut PgGroup) -> PgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let spec = parse_group_spec(str_arg(spec)?)?;
        let g = build_group_with_cap(&spec, group_cap())?;
        *out = Box::into_raw(Box::new(PgGroup(g)));
        Ok(())
    })
}

/// Order of the group, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from [`pg_group_build`].
#[no_mangle]
pub unsafe extern "C" fn pg_group_order(g: *const PgGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be null or a handle from [`pg_group_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_group_free(g: *mut PgGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Power graph of `g`; `proper` removes the identity.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_build(g: *const PgGroup, proper: bool, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let g = handle(g)?;
        *out = Box::into_raw(Box::new(PgGraph(build_power_graph(&g.0, proper))));
        Ok(())
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_vertex_count(graph: *const PgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// Adjacency of `u` and `v`. Out-of-range vertices are not adjacent.
///
/// # Safety
/// `graph` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_has_edge(graph: *const PgGraph, u: usize, v: usize) -> bool {
    graph.as_ref().is_some_and(|g| u < g.0.n() && v < g.0.n() && g.0.has_edge(u, v))
}

/// # Safety
/// `graph` must be null or a handle from [`pg_graph_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_free(graph: *mut PgGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Searches `graph` for the named induced pattern. On success `*found` is
/// set; when true, `vertices[..*len]` holds the image of each pattern
/// vertex. `capacity` must be at least 5.
///
/// # Safety
/// `graph` must be a live handle, `name` a valid C string, `vertices` valid
/// for `capacity` writes, and `len`, `found` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_find_pattern(
    graph: *const PgGraph,
    name: *const c_char,
    vertices: *mut usize,
    capacity: usize,
    len: *mut usize,
    found: *mut bool,
) -> PgStatus {
    guard(|| {
        let graph = handle(graph)?;
        let p = pattern(str_arg(name)?)?;
        let (len, found) = (out_arg(len)?, out_arg(found)?);
        if vertices.is_null() {
            return Err(Fail(PgStatus::NullPointer, "null vertex buffer".into()));
        }
        if capacity < p.k() {
            return Err(Fail(PgStatus::OutOfRange, format!("buffer holds {capacity}, pattern has {}", p.k())));
        }
        match find_induced_pattern(&graph.0, &p) {
            Some(w) => {
                std::slice::from_raw_parts_mut(vertices, capacity)[..w.vertices.len()].copy_from_slice(&w.vertices);
                *len = w.vertices.len();
                *found = true;
            }
            None => {
                *len = 0;
                *found = false;
            }
        }
        Ok(())
    })
}

/// Full analysis report of `spec` as JSON.
///
/// # Safety
/// `spec` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_analyze_json(spec: *const c_char, proper: bool, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let options = AnalyzeOptions { proper, ..AnalyzeOptions::default() };
        let report = analyze_group(str_arg(spec)?, &options)?;
        *out = into_c_string(serde_json::to_string(&report).expect("report serializes"));
        Ok(())
    })
}

/// Verification report of one theorem id, or an array for `"all"`, over the
/// default corpus, as JSON.
///
/// # Safety
/// `theorem` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_verify_json(theorem: *const c_char, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let id = str_arg(theorem)?;
        let corpus = default_corpus();
        let options = HarnessOptions::default();
        let json = if id == "all" {
            serde_json::to_string(&run_all(&corpus, &options)?)
        } else {
            serde_json::to_string(&run_theorem_case(id, &corpus, &options)?)
        };
        *out = into_c_string(json.expect("report serializes"));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
