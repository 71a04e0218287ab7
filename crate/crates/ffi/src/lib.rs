//! C ABI over `trd-core`.
//!
//! Graphs are opaque `TrdGraph` handles created by the `trd_graph_from_*`
//! functions and released with `trd_graph_free`. Every fallible call
//! returns a `TrdStatus`; on failure `trd_last_error_message` describes the
//! most recent error on the calling thread. Strings handed out by the
//! library must be released with `trd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use trd_core::bounds::{factor_profile, pair_bounds};
use trd_core::classify::classify_small_product;
use trd_core::solve::{
    gamma_t_exact, gamma_tr_exact, gamma_tr_max_v2, rho_exact, rho_o_exact, Budget,
};
use trd_core::{direct_product, emit_graph6, parse_graph6, FamilySpec, Graph, TrdError};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Input = 3,
    Parse = 4,
    Hypothesis = 5,
    Precondition = 6,
    Size = 7,
    Timeout = 8,
    Internal = 9,
    Panic = 10,
}

/// Opaque graph handle.
pub struct TrdGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &TrdError) -> TrdStatus {
    match e {
        TrdError::Input(_) => TrdStatus::Input,
        TrdError::Parse { .. } => TrdStatus::Parse,
        TrdError::Hypothesis(_) => TrdStatus::Hypothesis,
        TrdError::Precondition(_) => TrdStatus::Precondition,
        TrdError::Size { .. } => TrdStatus::Size,
        TrdError::Timeout { .. } => TrdStatus::Timeout,
        TrdError::Internal(_) => TrdStatus::Internal,
    }
}

/// Runs `body`, turning errors and panics into a status plus message.
fn guard(body: impl FnOnce() -> Result<(), (TrdStatus, String)>) -> TrdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TrdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside trd");
            TrdStatus::Panic
        }
    }
}

fn core(e: TrdError) -> (TrdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TrdStatus, String) {
    (TrdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const TrdGraph, what: &str) -> Result<&'a Graph, (TrdStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null(what))
}

unsafe fn text_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, (TrdStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (TrdStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (TrdStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn string_out(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("interior nul removed")
        .into_raw()
}

fn budget(secs: f64) -> Budget {
    if secs.is_finite() && secs > 0.0 {
        Budget(Some(Duration::from_secs_f64(secs)))
    } else {
        Budget::UNLIMITED
    }
}

unsafe fn emit_graph(out: *mut *mut TrdGraph, g: Graph) -> Result<(), (TrdStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(TrdGraph(g))));
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn trd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut TrdGraph,
) -> TrdStatus {
    guard(|| {
        let text = text_arg(text, "text")?;
        emit_graph(out, parse_graph6(text).map_err(core)?)
    })
}

/// Builds a graph from family shorthand such as `K3`, `C4`, `K2,3` or
/// `prismC3`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_from_family(
    text: *const c_char,
    out: *mut *mut TrdGraph,
) -> TrdStatus {
    guard(|| {
        let text = text_arg(text, "text")?;
        let spec = FamilySpec::parse_shorthand(text)
            .ok_or_else(|| {
                (
                    TrdStatus::Input,
                    format!("{text:?} is not family shorthand"),
                )
            })?
            .map_err(core)?;
        emit_graph(out, spec.generate().map_err(core)?)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut TrdGraph,
) -> TrdStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        emit_graph(out, Graph::from_edge_list(n, &pairs).map_err(core)?)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_free(g: *mut TrdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_order(g: *const TrdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// graph6 encoding; release the result with `trd_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_graph_to_graph6(
    g: *const TrdGraph,
    out: *mut *mut c_char,
) -> TrdStatus {
    guard(|| {
        let g = graph_ref(g, "g")?;
        write_out(out, string_out(emit_graph6(g)), "out")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Direct product `G × H`; vertex `(g, h)` gets id `g * |H| + h`.
///
/// # Safety
/// `g`, `h` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_direct_product(
    g: *const TrdGraph,
    h: *const TrdGraph,
    out: *mut *mut TrdGraph,
) -> TrdStatus {
    guard(|| {
        let pg = direct_product(graph_ref(g, "g")?, graph_ref(h, "h")?).map_err(core)?;
        emit_graph(out, pg.into_graph())
    })
}

/// Exact `γ_tR`. A non-positive `budget_secs` means no time limit. When
/// `labels` is non-null it receives the witness (one byte per vertex).
/// With `max_v2` the witness maximises the number of 2-labels.
///
/// # Safety
/// `g` must be a live handle, `value` writable, and `labels` null or
/// writable for `trd_graph_order(g)` bytes.
#[no_mangle]
pub unsafe extern "C" fn trd_gamma_tr(
    g: *const TrdGraph,
    budget_secs: f64,
    max_v2: bool,
    value: *mut u32,
    labels: *mut u8,
) -> TrdStatus {
    guard(|| {
        let g = graph_ref(g, "g")?;
        let r = if max_v2 {
            gamma_tr_max_v2(g, budget(budget_secs))
        } else {
            gamma_tr_exact(g, budget(budget_secs))
        }
        .map_err(core)?;
        write_out(value, r.value, "value")?;
        if !labels.is_null() {
            let f = r.labeling().expect("labeling witness");
            ptr::copy_nonoverlapping(f.labels().as_ptr(), labels, f.len());
        }
        Ok(())
    })
}

unsafe fn set_invariant(
    g: *const TrdGraph,
    value: *mut u32,
    solve: fn(&Graph) -> trd_core::Result<trd_core::solve::SolveResult>,
) -> TrdStatus {
    guard(|| {
        let r = solve(graph_ref(g, "g")?).map_err(core)?;
        write_out(value, r.value, "value")
    })
}

/// Total domination number `γ_t`.
///
/// # Safety
/// `g` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_gamma_t(g: *const TrdGraph, value: *mut u32) -> TrdStatus {
    set_invariant(g, value, gamma_t_exact)
}

/// Packing number `ρ`.
///
/// # Safety
/// `g` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_rho(g: *const TrdGraph, value: *mut u32) -> TrdStatus {
    set_invariant(g, value, rho_exact)
}

/// Open packing number `ρ_o`.
///
/// # Safety
/// `g` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_rho_o(g: *const TrdGraph, value: *mut u32) -> TrdStatus {
    set_invariant(g, value, rho_o_exact)
}

/// Small-value classification of `G × H`. `value` receives the decided
/// value, or 0 when the product is not among the small cases. When `json`
/// is non-null it receives the full verdict (free with `trd_string_free`).
///
/// # Safety
/// `g`, `h` must be live handles, `value` writable, `json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn trd_classify(
    g: *const TrdGraph,
    h: *const TrdGraph,
    value: *mut u32,
    json: *mut *mut c_char,
) -> TrdStatus {
    guard(|| {
        let v = classify_small_product(graph_ref(g, "g")?, graph_ref(h, "h")?).map_err(core)?;
        write_out(value, v.value.unwrap_or(0), "value")?;
        if !json.is_null() {
            json.write(string_out(v.to_json().to_string()));
        }
        Ok(())
    })
}

/// Every bound on `γ_tR(G × H)` as JSON, optionally with the exact value.
///
/// # Safety
/// `g`, `h` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trd_pair_report_json(
    g: *const TrdGraph,
    h: *const TrdGraph,
    exact: bool,
    budget_secs: f64,
    out: *mut *mut c_char,
) -> TrdStatus {
    guard(|| {
        let (g, h) = (graph_ref(g, "g")?, graph_ref(h, "h")?);
        let b = budget(budget_secs);
        let pg = factor_profile(g, b).map_err(core)?;
        let ph = factor_profile(h, b).map_err(core)?;
        let mut report = pair_bounds(&pg, &ph).map_err(core)?;
        if exact {
            let product = direct_product(g, h).map_err(core)?;
            report.exact = Some(gamma_tr_max_v2(product.graph(), b).map_err(core)?);
        }
        write_out(out, string_out(report.to_json().to_string()), "out")
    })
}
