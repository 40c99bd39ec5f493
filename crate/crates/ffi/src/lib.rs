//! C ABI for slice-lab.
//!
//! Slices are exposed as opaque `SlSlice` handles created by `sl_slice_new`
//! and released with `sl_slice_free`. Every fallible function returns an
//! `SlStatus`; on failure a description is available from
//! `sl_last_error_message` on the same thread. Strings handed out by the
//! library must be released with `sl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use slice_lab::analytic::{self, QuadratureOptions, QuadratureResult};
use slice_lab::arith::Rational;
use slice_lab::error::{AnalyticError, GeometryError};
use slice_lab::faces::{self, Verdict};
use slice_lab::measure;
use slice_lab::report::{self, ReportError};
use slice_lab::slice::{CubeSlice, Hyperplane};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    GeometryError = 3,
    QuadratureError = 4,
    BufferTooSmall = 5,
    Unsupported = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlVerdict {
    Zonotope = 0,
    NotZonoid = 1,
    DegenerateCube = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SlQuadrature {
    pub value: f64,
    pub error_bound: f64,
    pub truncation_t: f64,
    pub panel_count: usize,
}

impl From<QuadratureResult> for SlQuadrature {
    fn from(q: QuadratureResult) -> Self {
        SlQuadrature {
            value: q.value,
            error_bound: q.error_bound,
            truncation_t: q.truncation_t,
            panel_count: q.panel_count,
        }
    }
}

/// Opaque handle to a central slice of the cube.
pub struct SlSlice {
    slice: CubeSlice,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn geometry_status(e: GeometryError) -> SlStatus {
    let status = match e {
        GeometryError::DimensionUnsupported(_) | GeometryError::VolumeDimensionUnsupported(_) => {
            SlStatus::Unsupported
        }
        GeometryError::ZeroNormal
        | GeometryError::DimensionTooSmall(_)
        | GeometryError::DimensionTooLarge { .. }
        | GeometryError::DimensionMismatch { .. }
        | GeometryError::AxisOutOfRange { .. } => SlStatus::InvalidArgument,
        _ => SlStatus::GeometryError,
    };
    set_error(e.to_string());
    status
}

fn analytic_status(e: AnalyticError) -> SlStatus {
    let status = match e {
        AnalyticError::ToleranceUnreachable { .. } => SlStatus::QuadratureError,
        _ => SlStatus::InvalidArgument,
    };
    set_error(e.to_string());
    status
}

fn report_status(e: ReportError) -> SlStatus {
    match e {
        ReportError::Geometry(g) => geometry_status(g),
        ReportError::Analytic(a) => analytic_status(a),
    }
}

/// Runs `f`, converting panics into `SlStatus::Panic`.
fn guard(f: impl FnOnce() -> SlStatus) -> SlStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SlStatus::Panic
        }
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return SlStatus::NullPointer;
        })+
    };
}

unsafe fn integers<'a>(normal: *const i64, len: usize) -> &'a [i64] {
    if len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(normal, len)
    }
}

/// Copies `text` plus a terminating NUL into `buf`. `needed` (optional)
/// receives the required buffer size including the NUL.
unsafe fn write_string(text: &str, buf: *mut c_char, capacity: usize, needed: *mut usize) -> SlStatus {
    let bytes = text.as_bytes();
    if !needed.is_null() {
        *needed = bytes.len() + 1;
    }
    if buf.is_null() || capacity < bytes.len() + 1 {
        set_error(format!("buffer of {capacity} bytes is too small, need {}", bytes.len() + 1));
        return SlStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
    *buf.add(bytes.len()) = 0;
    SlStatus::Ok
}

/// Creates the slice of `[-1/2, 1/2]^len` by the hyperplane with integer
/// normal `normal[0..len]`. The normal is canonicalized (primitive, first
/// nonzero entry positive).
///
/// # Safety
/// `normal` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_new(normal: *const i64, len: usize, out: *mut *mut SlSlice) -> SlStatus {
    guard(|| {
        non_null!(normal, out);
        *out = ptr::null_mut();
        let slice = match Hyperplane::from_ints(integers(normal, len)).and_then(|h| CubeSlice::new(&h)) {
            Ok(s) => s,
            Err(e) => return geometry_status(e),
        };
        *out = Box::into_raw(Box::new(SlSlice { slice }));
        SlStatus::Ok
    })
}

/// Releases a handle from `sl_slice_new`; null is ignored.
///
/// # Safety
/// `slice` must be null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_free(slice: *mut SlSlice) {
    if !slice.is_null() {
        drop(Box::from_raw(slice));
    }
}

/// Ambient dimension n.
///
/// # Safety
/// `slice` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_dimension(slice: *const SlSlice, out: *mut usize) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        *out = (*slice).slice.dimension();
        SlStatus::Ok
    })
}

/// Canonical normal written to `out[0..n]`.
///
/// # Safety
/// `slice` must be a live handle and `out` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_normal(slice: *const SlSlice, out: *mut i64, capacity: usize) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        let Some(normal) = (*slice).slice.hyperplane().normal_i64() else {
            set_error("normal entries do not fit in 64 bits");
            return SlStatus::Unsupported;
        };
        if capacity < normal.len() {
            set_error(format!("need room for {} entries", normal.len()));
            return SlStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(normal.as_ptr(), out, normal.len());
        SlStatus::Ok
    })
}

/// Number of vertices of the slice.
///
/// # Safety
/// `slice` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_vertex_count(slice: *const SlSlice, out: *mut usize) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        *out = (*slice).slice.vertices().len();
        SlStatus::Ok
    })
}

/// Vertex coordinates as doubles, row-major (`vertex_count × n` values), in
/// lexicographic vertex order.
///
/// # Safety
/// `slice` must be a live handle and `out` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_vertices_f64(slice: *const SlSlice, out: *mut f64, capacity: usize) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        let s = &(*slice).slice;
        let total = s.vertices().len() * s.dimension();
        if capacity < total {
            set_error(format!("need room for {total} values"));
            return SlStatus::BufferTooSmall;
        }
        let coords = s.vertices().iter().flatten().map(slice_lab::arith::rational_to_f64);
        for (i, x) in coords.enumerate() {
            *out.add(i) = x;
        }
        SlStatus::Ok
    })
}

/// Zonotope verdict of a slice of affine dimension at most 3.
///
/// # Safety
/// `slice` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_verdict(slice: *const SlSlice, out: *mut SlVerdict) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        match faces::zonotope_verdict(&(*slice).slice) {
            Ok(v) => {
                *out = match v.verdict {
                    Verdict::Zonotope => SlVerdict::Zonotope,
                    Verdict::NotZonoid => SlVerdict::NotZonoid,
                    Verdict::DegenerateCube => SlVerdict::DegenerateCube,
                };
                SlStatus::Ok
            }
            Err(e) => geometry_status(e),
        }
    })
}

/// Exact volume as the NUL-terminated text `q` or `q*sqrt(r)`.
///
/// # Safety
/// `slice` must be a live handle; `buf` must hold `capacity` bytes; `needed`
/// may be null.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_volume_exact(
    slice: *const SlSlice,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> SlStatus {
    guard(|| {
        non_null!(slice);
        match measure::slice_volume_exact(&(*slice).slice) {
            Ok(v) => write_string(&v.to_string(), buf, capacity, needed),
            Err(e) => geometry_status(e),
        }
    })
}

/// Exact volume rounded to a double.
///
/// # Safety
/// `slice` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_volume_f64(slice: *const SlSlice, out: *mut f64) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        match measure::slice_volume_exact(&(*slice).slice) {
            Ok(v) => {
                *out = v.to_f64();
                SlStatus::Ok
            }
            Err(e) => geometry_status(e),
        }
    })
}

/// Full JSON report (the `slice --json` output) as a newly allocated string
/// to be released with `sl_string_free`.
///
/// # Safety
/// `slice` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_report_json(slice: *const SlSlice, tolerance: f64, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        non_null!(slice, out);
        *out = ptr::null_mut();
        let normal = (*slice).slice.hyperplane().normal_rational();
        let r = match report::slice_report(&normal, &[], None, tolerance) {
            Ok(r) => r,
            Err(e) => return report_status(e),
        };
        let text = serde_json::to_string(&r).expect("reports serialize");
        *out = CString::new(text).expect("JSON has no NUL").into_raw();
        SlStatus::Ok
    })
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `text` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// `I_p = (1/π)∫ |sin t / t|^p dt` for `2 ≤ p ≤ 64`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_sinc_power_integral(p: u32, tolerance: f64, out: *mut SlQuadrature) -> SlStatus {
    guard(|| {
        non_null!(out);
        match analytic::sinc_power_integral_with(p, &QuadratureOptions::with_tolerance(tolerance)) {
            Ok(q) => {
                *out = q.into();
                SlStatus::Ok
            }
            Err(e) => analytic_status(e),
        }
    })
}

/// Slice volume by quadrature of the sinc product, for any dimension.
///
/// # Safety
/// `normal` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slice_volume_quadrature(
    normal: *const i64,
    len: usize,
    tolerance: f64,
    out: *mut SlQuadrature,
) -> SlStatus {
    guard(|| {
        non_null!(normal, out);
        let normal: Vec<Rational> = integers(normal, len).iter().map(|&x| Rational::from_integer(x.into())).collect();
        match analytic::slice_volume_quadrature(&normal, tolerance) {
            Ok(q) => {
                *out = q.into();
                SlStatus::Ok
            }
            Err(e) => analytic_status(e),
        }
    })
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
