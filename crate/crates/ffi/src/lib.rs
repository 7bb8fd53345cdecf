//! C ABI over `recpoly`.
//!
//! Specs and polynomials cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns an [`RpStatus`]; on failure a message is available from
//! [`rp_last_error`] until the next call on the same thread. Strings
//! returned through out-parameters are released with [`rp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use recpoly::cli::{compute_term, parse_point, Engine};
use recpoly::families::identities::check_identity;
use recpoly::families::Order2Family;
use recpoly::parse::parse_poly;
use recpoly::spec_doc::{load_spec_str, preset_spec, FamilyTag};
use recpoly::{Error, MultiPoly, RecurrenceSpec, TermBudget, VarList};

/// Opaque recurrence handle.
pub struct RpSpec(RecurrenceSpec);

/// Opaque polynomial handle.
pub struct RpPoly(MultiPoly);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    NeedsDeltaInitials = 5,
    Resource = 6,
    NoConvergence = 7,
    UnknownIdentity = 8,
    Verification = 9,
    Io = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpEngine {
    Iterate = 0,
    Multinomial = 1,
    Determinant = 2,
    Companion = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpFamily {
    Generic = 0,
    Classical = 1,
    Numbers = 2,
    Dickson = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

enum Fail {
    Null(&'static str),
    Utf8(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn status_of(e: &Error) -> RpStatus {
    match e {
        Error::Syntax { .. } | Error::UnknownVariable { .. } | Error::Document { .. } => RpStatus::Parse,
        Error::NeedsDeltaInitials { .. } => RpStatus::NeedsDeltaInitials,
        Error::BudgetExceeded { .. } | Error::DegreeOverflow(_) => RpStatus::Resource,
        Error::NoConvergence { .. } => RpStatus::NoConvergence,
        Error::UnknownIdentity(_) => RpStatus::UnknownIdentity,
        Error::EngineDisagreement { .. } => RpStatus::Verification,
        Error::Io(_) => RpStatus::Io,
        _ => RpStatus::InvalidArgument,
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> RpStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RpStatus::Ok,
        Ok(Err(Fail::Null(name))) => {
            set_last_error(format!("`{name}` is null"));
            RpStatus::NullArgument
        }
        Ok(Err(Fail::Utf8(name))) => {
            set_last_error(format!("`{name}` is not valid UTF-8"));
            RpStatus::InvalidUtf8
        }
        Ok(Err(Fail::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            RpStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8(name))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(name))
}

fn out_arg<T>(p: *mut T, name: &'static str) -> Result<*mut T, Fail> {
    if p.is_null() {
        Err(Fail::Null(name))
    } else {
        Ok(p)
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no nul").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn rp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn rp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a TOML recurrence document.
///
/// # Safety
/// `toml` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_spec_from_toml(toml: *const c_char, out: *mut *mut RpSpec) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec = load_spec_str(str_arg(toml, "toml")?)?;
        *out = Box::into_raw(Box::new(RpSpec(spec)));
        Ok(())
    })
}

/// Builds a named preset (`fibonacci2`, `lucas2`, `dickson-d`, `dickson-e`,
/// `generalized-lucas`). `order` is read only by `generalized-lucas`; pass
/// 0 otherwise.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_spec_from_preset(name: *const c_char, order: i64, out: *mut *mut RpSpec) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let name = str_arg(name, "name")?;
        let tag = FamilyTag::from_name(name)
            .filter(|t| *t != FamilyTag::Custom)
            .ok_or_else(|| Error::Usage(format!("unknown preset `{name}`")))?;
        let spec = preset_spec(tag, (order != 0).then_some(order))?;
        *out = Box::into_raw(Box::new(RpSpec(spec)));
        Ok(())
    })
}

/// Order `k` of the recurrence, or 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn rp_spec_order(spec: *const RpSpec) -> usize {
    spec.as_ref().map_or(0, |s| s.0.order())
}

/// # Safety
/// `spec` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_spec_free(spec: *mut RpSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// `P_n` by one engine. `budget` caps intermediate term counts; 0 means
/// unlimited. The closed-form engines need delta initials at `k−1` unless
/// `compose` is true.
///
/// # Safety
/// `spec` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_term(
    spec: *const RpSpec,
    n: u64,
    engine: RpEngine,
    compose: bool,
    budget: usize,
    out: *mut *mut RpPoly,
) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec = ref_arg(spec, "spec")?;
        let engine = match engine {
            RpEngine::Iterate => Engine::Iterate,
            RpEngine::Multinomial => Engine::Multinomial,
            RpEngine::Determinant => Engine::Determinant,
            RpEngine::Companion => Engine::Companion,
        };
        let budget = if budget == 0 { TermBudget::UNLIMITED } else { TermBudget::limit(budget) };
        let p = compute_term(&spec.0, n as usize, engine, compose, budget)?;
        *out = Box::into_raw(Box::new(RpPoly(p)));
        Ok(())
    })
}

/// Parses an expression over comma-separated variable names, e.g.
/// `rp_poly_parse("x^2 - 2*a", "x,a", &p)`.
///
/// # Safety
/// `text` and `vars` must be nul-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_parse(text: *const c_char, vars: *const c_char, out: *mut *mut RpPoly) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let names: Vec<&str> = str_arg(vars, "vars")?.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let p = parse_poly(str_arg(text, "text")?, &VarList::new(names))?;
        *out = Box::into_raw(Box::new(RpPoly(p)));
        Ok(())
    })
}

/// Canonical text form of a polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_to_string(poly: *const RpPoly, out: *mut *mut c_char) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = into_c_string(ref_arg(poly, "poly")?.0.canonical_string());
        Ok(())
    })
}

/// Exact value at an integer point such as `"x=1,a=-1"`, as a decimal string.
///
/// # Safety
/// `poly` must be a live handle, `point` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_eval(poly: *const RpPoly, point: *const c_char, out: *mut *mut c_char) -> RpStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let pt = parse_point(str_arg(point, "point")?, poly.0.vars())?;
        *out = into_c_string(poly.0.eval_int(&pt)?.to_string());
        Ok(())
    })
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_num_terms(poly: *const RpPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.0.num_terms())
}

/// Exact equality; false if either handle is null.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_equal(a: *const RpPoly, b: *const RpPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `poly` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_free(poly: *mut RpPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs one catalog identity; `*passed` receives the verdict. A failing
/// identity is a successful call with `*passed == false`; the witness is
/// then available from [`rp_last_error`].
///
/// # Safety
/// `id` must be nul-terminated and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn rp_identity_check(
    id: *const c_char,
    family: RpFamily,
    n_max: u64,
    p_max: u64,
    m_max: u64,
    passed: *mut bool,
) -> RpStatus {
    let mut witness = None;
    let status = guard(|| {
        let passed = out_arg(passed, "passed")?;
        let family = match family {
            RpFamily::Generic => Order2Family::generic(),
            RpFamily::Classical => Order2Family::classical(),
            RpFamily::Numbers => Order2Family::numbers(),
            RpFamily::Dickson => Order2Family::dickson(),
        };
        let report = check_identity(str_arg(id, "id")?, &family, n_max, p_max, m_max)?;
        *passed = report.passed();
        witness = report.witness.map(|w| w.to_string());
        Ok(())
    });
    if let Some(w) = witness {
        set_last_error(w);
    }
    status
}
