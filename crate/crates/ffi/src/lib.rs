//! C ABI over `cozero-core`.
//!
//! Rings and graphs cross the boundary as opaque handles. Every fallible
//! call returns a [`CzStatus`]; on failure the message is kept per thread and
//! read with [`cz_last_error_message`]. Strings handed out by this library
//! are freed with [`cz_string_free`]. Panics never unwind into C; they are
//! reported as [`CzStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cozero_core::classify::{Classifier, GraphKind};
use cozero_core::genus::{exact_genus, verify_certificate};
use cozero_core::ring::parse_ring_notation;
use cozero_core::{Budget, EmbeddingCertificate, FiniteRing, SimpleGraph};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzStatus {
    Ok = 0,
    /// A pointer was null or a string was not UTF-8.
    InvalidArgument = 1,
    /// Ring notation or graph/certificate JSON could not be parsed or built.
    ParseError = 2,
    /// A certificate does not match the graph or its claimed genus.
    CertificateRejected = 3,
    /// A panic was caught at the boundary.
    Panic = 4,
}

/// Which graph to build from a ring.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzGraphKind {
    /// Cozero-divisor graph on nonzero non-units.
    Cozero = 0,
    /// Reduced cozero-divisor graph on nontrivial principal ideals.
    Reduced = 1,
}

/// Budget presets.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzBudget {
    Quick = 0,
    Standard = 1,
    Slow = 2,
}

/// Genus bounds of a graph. `upper` is -1 when no embedding was found.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CzGenus {
    pub lower: u32,
    pub upper: i64,
    pub exact: bool,
}

/// Opaque ring handle.
pub struct CzRing(FiniteRing);

/// Opaque graph handle.
pub struct CzGraph(SimpleGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(CzStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CzStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CzStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("panic: {msg}"));
            CzStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(CzStatus::InvalidArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(CzStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(CzStatus::InvalidArgument, format!("{what} is null")))
}

fn check_out<T>(p: *mut T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(CzStatus::InvalidArgument, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(CzStatus::Panic, "string contains NUL".into()))
}

fn budget(preset: CzBudget, seed: u64) -> Budget {
    let b = match preset {
        CzBudget::Quick => Budget::quick(),
        CzBudget::Standard => Budget::standard(),
        CzBudget::Slow => Budget::slow(),
    };
    b.with_seed(seed)
}

fn kind(k: CzGraphKind) -> GraphKind {
    match k {
        CzGraphKind::Cozero => GraphKind::Cozero,
        CzGraphKind::Reduced => GraphKind::Reduced,
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses ring notation such as `Z4xF8` and builds the ring.
///
/// # Safety
/// `notation` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_ring_parse(notation: *const c_char, out: *mut *mut CzRing) -> CzStatus {
    guard(|| {
        check_out(out, "out")?;
        let text = read_str(notation, "notation")?;
        let ring = parse_ring_notation(text)
            .and_then(|spec| spec.build())
            .map_err(|e| Fail(CzStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(CzRing(ring)));
        Ok(())
    })
}

/// Frees a ring. Null is ignored.
///
/// # Safety
/// `ring` must come from [`cz_ring_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cz_ring_free(ring: *mut CzRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements and number of units of a ring.
///
/// # Safety
/// `ring` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_ring_order(ring: *const CzRing, order: *mut usize, units: *mut usize) -> CzStatus {
    guard(|| {
        let r = &deref(ring, "ring")?.0;
        check_out(order, "order")?;
        check_out(units, "units")?;
        *order = r.size();
        *units = r.units().len();
        Ok(())
    })
}

/// Display name of a ring. Free with [`cz_string_free`].
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_ring_name(ring: *const CzRing, out: *mut *mut c_char) -> CzStatus {
    guard(|| {
        let r = &deref(ring, "ring")?.0;
        check_out(out, "out")?;
        *out = to_c_string(r.name().to_string())?;
        Ok(())
    })
}

/// Builds the graph of the given kind from a ring.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_build(
    ring: *const CzRing,
    graph_kind: CzGraphKind,
    out: *mut *mut CzGraph,
) -> CzStatus {
    guard(|| {
        let r = &deref(ring, "ring")?.0;
        check_out(out, "out")?;
        *out = Box::into_raw(Box::new(CzGraph(kind(graph_kind).build(r))));
        Ok(())
    })
}

/// Reads a graph from JSON `{"labels": [...], "edges": [[u, v], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_from_json(json: *const c_char, out: *mut *mut CzGraph) -> CzStatus {
    guard(|| {
        check_out(out, "out")?;
        let text = read_str(json, "json")?;
        let g = SimpleGraph::parse_json(text).map_err(|e| Fail(CzStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(CzGraph(g)));
        Ok(())
    })
}

/// Frees a graph. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_free(graph: *mut CzGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex and edge counts of a graph.
///
/// # Safety
/// `graph` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_size(graph: *const CzGraph, vertices: *mut usize, edges: *mut usize) -> CzStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        check_out(vertices, "vertices")?;
        check_out(edges, "edges")?;
        *vertices = g.vertex_count();
        *edges = g.edge_count();
        Ok(())
    })
}

/// Serialises a graph as JSON. Free with [`cz_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_to_json(graph: *const CzGraph, out: *mut *mut c_char) -> CzStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        check_out(out, "out")?;
        *out = to_c_string(g.export_json())?;
        Ok(())
    })
}

/// Genus bounds of a graph under a budget preset.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_graph_genus(
    graph: *const CzGraph,
    preset: CzBudget,
    seed: u64,
    out: *mut CzGenus,
) -> CzStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        check_out(out, "out")?;
        let b = exact_genus(g, &budget(preset, seed));
        *out = CzGenus {
            lower: b.lower,
            upper: b.upper.map_or(-1, i64::from),
            exact: b.exact,
        };
        Ok(())
    })
}

/// Checks an embedding certificate (JSON) against a graph. Returns
/// [`CzStatus::Ok`] only when the rotation is valid and gives the claimed
/// genus.
///
/// # Safety
/// `graph` must be a live handle; `certificate_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn cz_certificate_verify(graph: *const CzGraph, certificate_json: *const c_char) -> CzStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let text = read_str(certificate_json, "certificate_json")?;
        let cert = EmbeddingCertificate::from_json(text).map_err(|e| Fail(CzStatus::ParseError, e.to_string()))?;
        match verify_certificate(g, &cert) {
            Ok(true) => Ok(()),
            Ok(false) => Err(Fail(
                CzStatus::CertificateRejected,
                format!("rotation does not give genus {}", cert.genus),
            )),
            Err(e) => Err(Fail(CzStatus::CertificateRejected, e.to_string())),
        }
    })
}

/// Classifies the graph of a ring and returns the record as JSON. Free
/// with [`cz_string_free`].
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_classify(
    ring: *const CzRing,
    graph_kind: CzGraphKind,
    preset: CzBudget,
    seed: u64,
    out: *mut *mut c_char,
) -> CzStatus {
    guard(|| {
        let r = &deref(ring, "ring")?.0;
        check_out(out, "out")?;
        let rec = Classifier::new(budget(preset, seed)).classify(r, kind(graph_kind));
        let json = serde_json::to_string(&rec).map_err(|e| Fail(CzStatus::Panic, e.to_string()))?;
        *out = to_c_string(json)?;
        Ok(())
    })
}
