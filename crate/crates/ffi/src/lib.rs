//! C ABI for `compactum`.
//!
//! Groups and scenes are opaque handles created by `cm_*_from_*` or
//! `cm_scene_build` and released with the matching `*_free`. Every fallible
//! call returns a [`CmStatus`]; on failure [`cm_last_error`] describes the
//! problem. Strings returned through `char **` outputs are owned by the
//! caller and released with [`cm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use compactum::cli::{build_component, Component};
use compactum::geometry::rational::parse_q;
use compactum::geometry::{project_scene, slice_scene, Axis, GeometryError, Scene4};
use compactum::io::{
    parse_group_text, parse_scene_json, presentation_to_text, render_svg, scene_to_json, spec_hash, IoError,
    LoadedGroup, RenderStyle,
};
use compactum::presentation::{build_presentation, PresentationError};
use compactum::verify::{verify_finite_iso, Budget, Verdict, VerifyError};
use compactum::Order;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGroup = 4,
    InvalidArgument = 5,
    InfiniteGroup = 6,
    BudgetExhausted = 7,
    GeometryError = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmVerdict {
    Pass = 0,
    Fail = 1,
    Inconclusive = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmAxis {
    X1 = 1,
    X2 = 2,
    X3 = 3,
    X4 = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmComponent {
    V = 0,
    W = 1,
    M = 2,
    K = 3,
}

/// Outcome of [`cm_verify_finite`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmCertificate {
    /// Order of the presented group; meaningful when `closed` is true.
    pub order_presented: u64,
    pub closed: bool,
    pub order_target: u64,
    pub surjective: bool,
    pub relators_trivial: bool,
    pub verdict: CmVerdict,
    pub rounds: u64,
    pub generators: u64,
    pub relators: u64,
    pub cosets_defined: u64,
}

/// Opaque group handle.
pub struct CmGroup {
    inner: LoadedGroup,
}

/// Opaque scene handle.
pub struct CmScene {
    inner: Scene4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(CmStatus, String);

type Outcome<T> = Result<T, Failure>;

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

/// Runs `f`, records its error message and converts panics to a status.
fn guard(f: impl FnOnce() -> Outcome<()>) -> CmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CmStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CmStatus::Panic
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let status = match &e {
            IoError::Parse { .. } | IoError::Scene(_) | IoError::Presentation(_) => CmStatus::ParseError,
            IoError::Validation(_) => CmStatus::InvalidGroup,
            IoError::Geometry(_) | IoError::OutOfRange(_) => CmStatus::GeometryError,
            IoError::File { .. } => CmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        let status = match e {
            GeometryError::UncertifiedM(_) => CmStatus::BudgetExhausted,
            _ => CmStatus::GeometryError,
        };
        Failure(status, e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let status = match e {
            VerifyError::InfiniteGroup => CmStatus::InfiniteGroup,
            _ => CmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<PresentationError> for Failure {
    fn from(e: PresentationError) -> Self {
        Failure(CmStatus::InvalidArgument, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CmStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(CmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, text: String) -> Outcome<()> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(text).map_err(|_| Failure(CmStatus::InvalidArgument, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `p` must be null or a live handle.
unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

fn axis(a: CmAxis) -> Axis {
    match a {
        CmAxis::X1 => Axis::X1,
        CmAxis::X2 => Axis::X2,
        CmAxis::X3 => Axis::X3,
        CmAxis::X4 => Axis::X4,
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static version string.
#[no_mangle]
pub extern "C" fn cm_version() -> *const c_char {
    concat!("compactum ", env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a group spec in JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_group_from_json(json: *const c_char, out: *mut *mut CmGroup) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let loaded = parse_group_text(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(CmGroup { inner: loaded }));
        Ok(())
    })
}

/// # Safety
/// `group` must be null or a handle from [`cm_group_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_group_free(group: *mut CmGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Writes the order of a finite group; `*finite` is false for infinite
/// groups and `*order` is then 0.
///
/// # Safety
/// `group` must be a live handle; `order` and `finite` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_group_order(group: *const CmGroup, order: *mut u64, finite: *mut bool) -> CmStatus {
    guard(|| {
        let g = borrow(group, "group")?;
        if order.is_null() || finite.is_null() {
            return Err(null("output pointer"));
        }
        match g.inner.group.order() {
            Order::Finite(n) => {
                *order = n as u64;
                *finite = true;
            }
            Order::Infinite => {
                *order = 0;
                *finite = false;
            }
        }
        Ok(())
    })
}

/// Hex SHA-256 of the canonical spec JSON.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_group_hash(group: *const CmGroup, out: *mut *mut c_char) -> CmStatus {
    guard(|| write_string(out, spec_hash(&borrow(group, "group")?.inner.spec)))
}

/// Presentation text after `rounds` rounds of the relation stream.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_presentation_text(group: *const CmGroup, rounds: usize, out: *mut *mut c_char) -> CmStatus {
    guard(|| {
        let g = &borrow(group, "group")?.inner.group;
        let p = build_presentation(g, rounds)?;
        write_string(out, presentation_to_text(&p, g))
    })
}

/// Certifies that a finite truncation of the presentation presents the
/// group. A completed run returns `CM_STATUS_OK` whatever the verdict.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_verify_finite(
    group: *const CmGroup,
    max_cosets: usize,
    max_rounds: usize,
    out: *mut CmCertificate,
) -> CmStatus {
    guard(|| {
        let g = borrow(group, "group")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let cert = verify_finite_iso(&g.inner.group, Budget { max_cosets, max_rounds })?;
        *out = CmCertificate {
            order_presented: cert.order_presented.unwrap_or(0) as u64,
            closed: cert.order_presented.is_some(),
            order_target: cert.order_target as u64,
            surjective: cert.surjective,
            relators_trivial: cert.relators_trivial,
            verdict: match cert.verdict {
                Verdict::Pass => CmVerdict::Pass,
                Verdict::Fail => CmVerdict::Fail,
                Verdict::Inconclusive => CmVerdict::Inconclusive,
            },
            rounds: cert.rounds as u64,
            generators: cert.generators as u64,
            relators: cert.relators as u64,
            cosets_defined: cert.cosets_defined as u64,
        };
        Ok(())
    })
}

/// Certified `m(n)`: the last relation containing generator `n`.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_m_of(group: *const CmGroup, n: usize, horizon: usize, out: *mut usize) -> CmStatus {
    guard(|| {
        let g = borrow(group, "group")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = compactum::m_of(&g.inner.group, n, horizon).map_err(|e| match e {
            PresentationError::HorizonExceeded(_) => Failure(CmStatus::BudgetExhausted, e.to_string()),
            other => other.into(),
        })?;
        Ok(())
    })
}

/// Builds `V`, `W`, `M` or `K` from the first `relations` relations.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_build(
    group: *const CmGroup,
    relations: usize,
    component: CmComponent,
    horizon: usize,
    out: *mut *mut CmScene,
) -> CmStatus {
    guard(|| {
        let g = borrow(group, "group")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let component = match component {
            CmComponent::V => Component::V,
            CmComponent::W => Component::W,
            CmComponent::M => Component::M,
            CmComponent::K => Component::K,
        };
        let mut scene = build_component(&g.inner.group, relations, component, horizon)?;
        scene.meta.group = Some(spec_hash(&g.inner.spec));
        *out = Box::into_raw(Box::new(CmScene { inner: scene }));
        Ok(())
    })
}

/// Parses scene JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_from_json(json: *const c_char, out: *mut *mut CmScene) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let scene = parse_scene_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(CmScene { inner: scene }));
        Ok(())
    })
}

/// # Safety
/// `scene` must be null or a scene handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_free(scene: *mut CmScene) {
    if !scene.is_null() {
        drop(Box::from_raw(scene));
    }
}

/// Number of primitives, 0 for a null handle.
///
/// # Safety
/// `scene` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_len(scene: *const CmScene) -> usize {
    scene.as_ref().map_or(0, |s| s.inner.len())
}

/// Whether every defining point lies in the unit 4-cube.
///
/// # Safety
/// `scene` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_contained(scene: *const CmScene, out: *mut bool) -> CmStatus {
    guard(|| {
        let s = borrow(scene, "scene")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = s.inner.containment_check().passed();
        Ok(())
    })
}

/// # Safety
/// `scene` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_to_json(scene: *const CmScene, out: *mut *mut c_char) -> CmStatus {
    guard(|| write_string(out, scene_to_json(&borrow(scene, "scene")?.inner)))
}

/// SVG of the section fixing `axis_a = value_a` and `axis_b = value_b`,
/// values given as `p/q` text.
///
/// # Safety
/// `scene` must be a live handle, the values NUL-terminated strings and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_slice_svg(
    scene: *const CmScene,
    axis_a: CmAxis,
    value_a: *const c_char,
    axis_b: CmAxis,
    value_b: *const c_char,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        let s = borrow(scene, "scene")?;
        let mut values = Vec::new();
        for v in [read_str(value_a, "value_a")?, read_str(value_b, "value_b")?] {
            values.push(parse_q(v).ok_or_else(|| Failure(CmStatus::InvalidArgument, format!("bad rational {v:?}")))?);
        }
        let [va, vb]: [_; 2] = values.try_into().unwrap_or_else(|_| unreachable!());
        let result = slice_scene(&s.inner, [(axis(axis_a), va), (axis(axis_b), vb)])?;
        write_string(out, render_svg(&result, &RenderStyle::default())?)
    })
}

/// SVG of the projection onto `(axis_u, axis_v)`.
///
/// # Safety
/// `scene` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cm_scene_project_svg(
    scene: *const CmScene,
    axis_u: CmAxis,
    axis_v: CmAxis,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        let s = borrow(scene, "scene")?;
        let result = project_scene(&s.inner, [axis(axis_u), axis(axis_v)])?;
        write_string(out, render_svg(&result, &RenderStyle::default())?)
    })
}
