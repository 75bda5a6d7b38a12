//! C interface to the drawing toolkit.
//!
//! Graphs and drawings are opaque handles owned by the caller and released with the
//! matching `*_free` function. Every fallible call returns an [`AprStatus`]; on failure
//! a message for the calling thread is available from [`apr_last_error`]. Strings
//! returned through out-parameters are released with [`apr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use aprac::drawing::{parse_drawing, serialize_drawing, Drawing};
use aprac::generators::Family;
use aprac::graph::{parse_graph, serialize_graph, Graph};
use aprac::layout::{draw_with, DrawOptions};
use aprac::render::{to_svg, RenderOptions};
use aprac::validate::{validate, Mode, SlopeSet, ValidateOptions};

/// Opaque graph handle.
pub struct AprGraph(Graph);

/// Opaque drawing handle.
pub struct AprDrawing(Drawing);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AprStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    LayoutFailed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AprMode {
    Rac = 0,
    Aprac = 1,
    SlopeRac = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AprFamily {
    Aprac0 = 0,
    Aprac1 = 1,
    Aprac2 = 2,
}

/// Summary of a validation run.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct AprValidation {
    pub passed: bool,
    pub violations: u64,
    /// Saturates at `UINT64_MAX`.
    pub crossings: u64,
    pub density_exceeded: bool,
}

pub const APR_RENDER_MARK_CROSSINGS: u32 = 1;
pub const APR_RENDER_COLOR_BY_FACTOR: u32 = 2;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn fail(status: AprStatus, msg: impl ToString) -> AprStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into [`AprStatus::Panic`].
fn guard(f: impl FnOnce() -> AprStatus) -> AprStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(AprStatus::Panic, msg)
        }
    }
}

unsafe fn input_str<'a>(text: *const c_char) -> Result<&'a str, AprStatus> {
    if text.is_null() {
        return Err(fail(AprStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(AprStatus::InvalidUtf8, e))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> AprStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            AprStatus::Ok
        }
        Err(e) => fail(AprStatus::InvalidArgument, e),
    }
}

macro_rules! check_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(AprStatus::NullPointer, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

/// Message describing the last failure on this thread. Valid until the next call
/// into the library from the same thread; never null.
#[no_mangle]
pub extern "C" fn apr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn apr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates an edgeless graph on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_new(n: usize, out: *mut *mut AprGraph) -> AprStatus {
    check_null!(out);
    guard(|| {
        *out = Box::into_raw(Box::new(AprGraph(Graph::new(n))));
        AprStatus::Ok
    })
}

/// # Safety
/// `g` must be a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_add_edge(g: *mut AprGraph, u: usize, v: usize) -> AprStatus {
    check_null!(g);
    guard(|| match (*g).0.add_edge(u, v) {
        Ok(_) => AprStatus::Ok,
        Err(e) => fail(AprStatus::InvalidArgument, e),
    })
}

/// Parses the text graph format (`n <count>` then `e <u> <v>` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_parse(text: *const c_char, out: *mut *mut AprGraph) -> AprStatus {
    check_null!(out);
    guard(|| {
        let text = match input_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(AprGraph(g)));
                AprStatus::Ok
            }
            Err(e) => fail(AprStatus::ParseError, e),
        }
    })
}

/// # Safety
/// `g` must be a valid graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_serialize(g: *const AprGraph, out: *mut *mut c_char) -> AprStatus {
    check_null!(g, out);
    guard(|| put_string(out, serialize_graph(&(*g).0)))
}

/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_vertex_count(g: *const AprGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_edge_count(g: *const AprGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn apr_graph_free(g: *mut AprGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Draws a graph of maximum degree 8 with at most two bends per edge.
///
/// # Safety
/// `g` must be a valid graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_draw(g: *const AprGraph, keep_augmented: bool, out: *mut *mut AprDrawing) -> AprStatus {
    check_null!(g, out);
    guard(|| match draw_with(&(*g).0, DrawOptions { keep_augmented }) {
        Ok(d) => {
            *out = Box::into_raw(Box::new(AprDrawing(d)));
            AprStatus::Ok
        }
        Err(e) => fail(AprStatus::LayoutFailed, e),
    })
}

/// Parses the text drawing format (`v <id> <x> <y>` and `e <u> <v> [b <x> <y>]...`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_drawing_parse(text: *const c_char, out: *mut *mut AprDrawing) -> AprStatus {
    check_null!(out);
    guard(|| {
        let text = match input_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_drawing(text) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(AprDrawing(d)));
                AprStatus::Ok
            }
            Err(e) => fail(AprStatus::ParseError, e),
        }
    })
}

/// # Safety
/// `d` must be a valid drawing handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_drawing_serialize(d: *const AprDrawing, out: *mut *mut c_char) -> AprStatus {
    check_null!(d, out);
    guard(|| put_string(out, serialize_drawing(&(*d).0)))
}

/// # Safety
/// `d` must be null or a valid drawing handle.
#[no_mangle]
pub unsafe extern "C" fn apr_drawing_vertex_count(d: *const AprDrawing) -> usize {
    d.as_ref().map_or(0, |d| d.0.n())
}

/// # Safety
/// `d` must be null or a valid drawing handle.
#[no_mangle]
pub unsafe extern "C" fn apr_drawing_edge_count(d: *const AprDrawing) -> usize {
    d.as_ref().map_or(0, |d| d.0.m())
}

/// # Safety
/// `d` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn apr_drawing_free(d: *mut AprDrawing) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Validates a drawing. `slopes` is only read in slope-rac mode, where it is required
/// (e.g. `"0;1;-2/3"`). When `report` is non-null it receives the text report.
///
/// # Safety
/// `d` must be a valid drawing handle, `out` a valid pointer, `slopes` null or a
/// NUL-terminated string and `report` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_validate(
    d: *const AprDrawing,
    bends: usize,
    mode: AprMode,
    slopes: *const c_char,
    strict_simple: bool,
    out: *mut AprValidation,
    report: *mut *mut c_char,
) -> AprStatus {
    check_null!(d, out);
    guard(|| {
        let mode = match mode {
            AprMode::Rac => Mode::Rac,
            AprMode::Aprac => Mode::Aprac,
            AprMode::SlopeRac => Mode::SlopeRac,
        };
        let mut opts = ValidateOptions::new(bends, mode);
        if mode == Mode::SlopeRac {
            let text = match input_str(slopes) {
                Ok(t) => t,
                Err(s) => return s,
            };
            match SlopeSet::parse(text) {
                Ok(set) => opts = opts.with_slopes(set),
                Err(e) => return fail(AprStatus::ParseError, e),
            }
        }
        opts.strict_simple = strict_simple;
        let r = validate(&(*d).0, &opts);
        *out = AprValidation {
            passed: r.passed,
            violations: r.violations.len() as u64,
            crossings: u64::try_from(r.crossing_count).unwrap_or(u64::MAX),
            density_exceeded: r.density_exceeded(),
        };
        if report.is_null() {
            AprStatus::Ok
        } else {
            put_string(report, r.to_text())
        }
    })
}

/// Generates a member of a dense family together with its drawing.
///
/// # Safety
/// `graph` and `drawing` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn apr_generate(
    family: AprFamily,
    param: usize,
    graph: *mut *mut AprGraph,
    drawing: *mut *mut AprDrawing,
) -> AprStatus {
    check_null!(graph, drawing);
    guard(|| {
        let family = match family {
            AprFamily::Aprac0 => Family::Aprac0,
            AprFamily::Aprac1 => Family::Aprac1,
            AprFamily::Aprac2 => Family::Aprac2,
        };
        match family.generate(param) {
            Ok((g, d)) => {
                *graph = Box::into_raw(Box::new(AprGraph(g)));
                *drawing = Box::into_raw(Box::new(AprDrawing(d)));
                AprStatus::Ok
            }
            Err(e) => fail(AprStatus::InvalidArgument, e),
        }
    })
}

/// Renders a drawing as SVG. `flags` is a combination of the `APR_RENDER_*` bits.
///
/// # Safety
/// `d` must be a valid drawing handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apr_render_svg(
    d: *const AprDrawing,
    scale: u32,
    flags: u32,
    out: *mut *mut c_char,
) -> AprStatus {
    check_null!(d, out);
    guard(|| {
        let opts = RenderOptions {
            scale,
            mark_crossings: flags & APR_RENDER_MARK_CROSSINGS != 0,
            color_by_factor: flags & APR_RENDER_COLOR_BY_FACTOR != 0,
        };
        put_string(out, to_svg(&(*d).0, &opts))
    })
}
