//! C ABI over the k3orders engine.
//!
//! Every function returns a [`K3Status`]. Handles are opaque and released by
//! their `_free` function; strings returned through `char **` are released
//! with [`k3_string_free`]. After a non-zero status, [`k3_last_error`]
//! describes the failure on the calling thread.
//!
//! # Safety
//!
//! Pointer arguments are either NULL, which is reported as
//! `K3_NULL_POINTER`, or valid for the access the function documents.
//! Strings are NUL-terminated. Handles and strings are freed at most once,
//! and only by the matching `_free` function.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use k3orders::surface_models::{verify_entry, ModelError};
use k3orders::tame_engine::classify_order;
use k3orders::tame_engine::sets::{beta, ord_set};
use k3orders::wild_replay::{classify_wild, replay_all, replay_lemma, LemmaId, ReplayReport, WildStatus};

#[allow(non_camel_case_types)]
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3Status {
    K3_OK = 0,
    K3_NULL_POINTER = 1,
    K3_INVALID_ARGUMENT = 2,
    K3_UNSUPPORTED = 3,
    K3_INTERNAL = 4,
}

use K3Status::*;

/// Finite automorphism orders in one characteristic.
pub struct K3OrderSet {
    orders: Vec<u64>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: K3Status, msg: impl Into<String>) -> K3Status {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn guarded(body: impl FnOnce() -> K3Status) -> K3Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(K3_INTERNAL, "internal panic"))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, K3Status> {
    if s.is_null() {
        return Err(fail(K3_NULL_POINTER, "string argument is NULL"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(K3_INVALID_ARGUMENT, "string is not UTF-8"))
}

/// Library version, a static string that must not be freed.
#[no_mangle]
pub extern "C" fn k3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Writes whether an automorphism of order `order` exists in `characteristic`.
///
/// Wild orders are answered for characteristics 5, 7 and 11 only.
#[no_mangle]
pub unsafe extern "C" fn k3_classify_order(order: u64, characteristic: u64, out_feasible: *mut bool) -> K3Status {
    guarded(|| {
        if out_feasible.is_null() {
            return fail(K3_NULL_POINTER, "out_feasible is NULL");
        }
        if order == 0 || (characteristic != 0 && !is_prime(characteristic)) {
            return fail(
                K3_INVALID_ARGUMENT,
                "order must be positive and the characteristic 0 or a prime",
            );
        }
        let p = characteristic;
        let feasible = if p != 0 && order.is_multiple_of(p) {
            if !matches!(p, 5 | 7 | 11) {
                return fail(
                    K3_UNSUPPORTED,
                    format!("wild orders are not classified in characteristic {p}"),
                );
            }
            let w = match classify_wild(p) {
                Ok(w) => w,
                Err(e) => return fail(K3_INTERNAL, e.to_string()),
            };
            match w.entries.get(&(order / p)) {
                Some(e) => matches!(e.status, WildStatus::Realized { .. }),
                None => false,
            }
        } else {
            match classify_order(order, p) {
                Ok(r) => r.is_feasible(),
                Err(e) => return fail(K3_INVALID_ARGUMENT, e.to_string()),
            }
        };
        *out_feasible = feasible;
        K3_OK
    })
}

/// Allocates the set of orders in `characteristic`; free with [`k3_order_set_free`].
#[no_mangle]
pub unsafe extern "C" fn k3_order_set_new(characteristic: u64, out: *mut *mut K3OrderSet) -> K3Status {
    guarded(|| {
        if out.is_null() {
            return fail(K3_NULL_POINTER, "out is NULL");
        }
        *out = ptr::null_mut();
        match ord_set(characteristic) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(K3OrderSet {
                    orders: s.orders.into_iter().collect(),
                }));
                K3_OK
            }
            Err(e) => fail(K3_INVALID_ARGUMENT, e.to_string()),
        }
    })
}

/// Number of orders in the set; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn k3_order_set_len(set: *const K3OrderSet) -> usize {
    set.as_ref().map_or(0, |s| s.orders.len())
}

/// The `index`-th order in increasing order.
#[no_mangle]
pub unsafe extern "C" fn k3_order_set_get(set: *const K3OrderSet, index: usize, out: *mut u64) -> K3Status {
    guarded(|| {
        let (Some(s), false) = (set.as_ref(), out.is_null()) else {
            return fail(K3_NULL_POINTER, "set or out is NULL");
        };
        match s.orders.get(index) {
            Some(&n) => {
                *out = n;
                K3_OK
            }
            None => fail(K3_INVALID_ARGUMENT, format!("index {index} out of range")),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn k3_order_set_free(set: *mut K3OrderSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// `β_p`, the largest divisor `N` of `p + 1` with `N != 60` and `φ(N) <= 20`.
#[no_mangle]
pub unsafe extern "C" fn k3_beta(p: u64, out: *mut u64) -> K3Status {
    guarded(|| {
        if out.is_null() {
            return fail(K3_NULL_POINTER, "out is NULL");
        }
        if !is_prime(p) {
            return fail(K3_INVALID_ARGUMENT, format!("{p} is not a prime"));
        }
        *out = beta(p);
        K3_OK
    })
}

/// Runs one replay script, or all of them when `lemma` is NULL, and writes
/// the JSON report to `out_json` and whether every assertion passed.
#[no_mangle]
pub unsafe extern "C" fn k3_replay_json(
    lemma: *const c_char,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> K3Status {
    guarded(|| {
        if out_json.is_null() || out_passed.is_null() {
            return fail(K3_NULL_POINTER, "out_json or out_passed is NULL");
        }
        *out_json = ptr::null_mut();
        let reports: Vec<ReplayReport> = if lemma.is_null() {
            replay_all()
        } else {
            let id = match read_str(lemma) {
                Ok(s) => s,
                Err(st) => return st,
            };
            match id.parse::<LemmaId>() {
                Ok(l) => vec![replay_lemma(l)],
                Err(e) => return fail(K3_INVALID_ARGUMENT, e.to_string()),
            }
        };
        let json = serde_json::to_string(&reports).expect("reports serialize");
        *out_passed = reports.iter().all(ReplayReport::passed);
        *out_json = CString::new(json).expect("json has no nul").into_raw();
        K3_OK
    })
}

/// Verifies one catalog entry; `out_as_designed` is true when a positive
/// entry passes or a negative control fails where intended.
#[no_mangle]
pub unsafe extern "C" fn k3_verify_entry(
    id: *const c_char,
    characteristic: u64,
    out_as_designed: *mut bool,
) -> K3Status {
    guarded(|| {
        if out_as_designed.is_null() {
            return fail(K3_NULL_POINTER, "out_as_designed is NULL");
        }
        let id = match read_str(id) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match verify_entry(id, characteristic) {
            Ok(r) => {
                *out_as_designed = r.as_designed;
                K3_OK
            }
            Err(e @ (ModelError::UnknownEntry(_) | ModelError::CharacteristicNotAdmissible { .. })) => {
                fail(K3_INVALID_ARGUMENT, e.to_string())
            }
            Err(e) => fail(K3_INTERNAL, e.to_string()),
        }
    })
}

/// Copy of the last error message on this thread, or NULL; free with [`k3_string_free`].
#[no_mangle]
pub extern "C" fn k3_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

#[no_mangle]
pub unsafe extern "C" fn k3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
