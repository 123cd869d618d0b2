//! C ABI for the wdist library.
//!
//! Weight distributions are opaque handles; counts cross the boundary as
//! decimal strings because they are arbitrary-precision integers. Every
//! function returns a `WdistStatus` and writes results through out
//! pointers. Handles must be released with `wdist_distribution_free`.

use std::collections::BTreeMap;
use std::ffi::{c_char, CStr};
use std::ptr;

use num_traits::Zero;

use wdist::analysis::{gap_report, mds_verdict, nonzero, VerdictStatus};
use wdist::code::WeightDistribution;
use wdist::families::{Family, FamilySpec};
use wdist::macwilliams::macwilliams;

/// Error codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WdistStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownFamily = 3,
    BadParams = 4,
    IndexOutOfRange = 5,
    BufferTooSmall = 6,
    TransformInexact = 7,
}

/// Opaque weight-distribution handle.
pub struct WdistDistribution {
    inner: WeightDistribution,
}

/// Log-concavity report with plain scalar fields.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WdistGapReport {
    /// Number of strict log-concavity failures among the nonzero counts.
    pub gap_count: u64,
    /// 1 when gap_count is 0.
    pub log_concave: i32,
    pub unimodal: i32,
    /// Index of the first maximum within the nonzero subsequence.
    pub peak_index: u64,
}

fn family_spec(
    name: *const c_char,
    n: i64,
    k: i64,
    m: i64,
    q: i64,
) -> Result<FamilySpec, WdistStatus> {
    if name.is_null() {
        return Err(WdistStatus::NullArgument);
    }
    let name = unsafe { CStr::from_ptr(name) }
        .to_str()
        .map_err(|_| WdistStatus::InvalidUtf8)?;
    let family = Family::parse(name).map_err(|_| WdistStatus::UnknownFamily)?;
    let mut params = BTreeMap::new();
    for (key, value) in [("n", n), ("k", k), ("m", m), ("q", q)] {
        if value > 0 {
            params.insert(key.to_string(), value as u64);
        } else if value != -1 {
            return Err(WdistStatus::BadParams);
        }
    }
    Ok(FamilySpec::new(family, params))
}

/// Closed-form weight distribution of a named family. Unused parameters
/// must be passed as -1. On success writes a new handle to `out`.
#[no_mangle]
pub extern "C" fn wdist_family(
    name: *const c_char,
    n: i64,
    k: i64,
    m: i64,
    q: i64,
    out: *mut *mut WdistDistribution,
) -> WdistStatus {
    if out.is_null() {
        return WdistStatus::NullArgument;
    }
    let spec = match family_spec(name, n, k, m, q) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match spec.weight_distribution() {
        Ok(wd) => {
            let handle = Box::new(WdistDistribution { inner: wd });
            unsafe { *out = Box::into_raw(handle) };
            WdistStatus::Ok
        }
        Err(_) => WdistStatus::BadParams,
    }
}

#[no_mangle]
pub extern "C" fn wdist_distribution_free(dist: *mut WdistDistribution) {
    if !dist.is_null() {
        drop(unsafe { Box::from_raw(dist) });
    }
}

/// Code length n; the distribution has n + 1 counts, indexed 0..=n.
#[no_mangle]
pub extern "C" fn wdist_distribution_length(
    dist: *const WdistDistribution,
    out: *mut u64,
) -> WdistStatus {
    if dist.is_null() || out.is_null() {
        return WdistStatus::NullArgument;
    }
    unsafe { *out = (*dist).inner.n as u64 };
    WdistStatus::Ok
}

#[no_mangle]
pub extern "C" fn wdist_distribution_dimension(
    dist: *const WdistDistribution,
    out: *mut u64,
) -> WdistStatus {
    if dist.is_null() || out.is_null() {
        return WdistStatus::NullArgument;
    }
    unsafe { *out = (*dist).inner.k as u64 };
    WdistStatus::Ok
}

#[no_mangle]
pub extern "C" fn wdist_distribution_field_size(
    dist: *const WdistDistribution,
    out: *mut u64,
) -> WdistStatus {
    if dist.is_null() || out.is_null() {
        return WdistStatus::NullArgument;
    }
    unsafe { *out = (*dist).inner.q as u64 };
    WdistStatus::Ok
}

/// Writes the count A_weight as a NUL-terminated decimal string into the
/// caller's buffer. `buf_len` is the buffer capacity in bytes. Returns
/// BufferTooSmall without writing when the string (plus NUL) does not fit.
#[no_mangle]
pub extern "C" fn wdist_distribution_count(
    dist: *const WdistDistribution,
    weight: u64,
    buf: *mut c_char,
    buf_len: usize,
) -> WdistStatus {
    if dist.is_null() || buf.is_null() {
        return WdistStatus::NullArgument;
    }
    let inner = unsafe { &(*dist).inner };
    let Some(count) = inner.counts.get(weight as usize) else {
        return WdistStatus::IndexOutOfRange;
    };
    let text = count.to_string();
    if text.len() + 1 > buf_len {
        return WdistStatus::BufferTooSmall;
    }
    unsafe {
        ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
        *buf.add(text.len()) = 0;
    }
    WdistStatus::Ok
}

/// MacWilliams transform; writes a new handle holding the dual
/// distribution. Fails with TransformInexact when the input is not a
/// valid weight distribution over its stated field.
#[no_mangle]
pub extern "C" fn wdist_macwilliams(
    dist: *const WdistDistribution,
    out: *mut *mut WdistDistribution,
) -> WdistStatus {
    if dist.is_null() || out.is_null() {
        return WdistStatus::NullArgument;
    }
    let inner = unsafe { &(*dist).inner };
    match macwilliams(inner) {
        Ok(dual) => {
            let handle = Box::new(WdistDistribution { inner: dual });
            unsafe { *out = Box::into_raw(handle) };
            WdistStatus::Ok
        }
        Err(_) => WdistStatus::TransformInexact,
    }
}

/// Log-concavity report over the nonzero subsequence.
#[no_mangle]
pub extern "C" fn wdist_gap_report(
    dist: *const WdistDistribution,
    out: *mut WdistGapReport,
) -> WdistStatus {
    if dist.is_null() || out.is_null() {
        return WdistStatus::NullArgument;
    }
    let inner = unsafe { &(*dist).inner };
    if inner.counts.iter().all(Zero::is_zero) {
        return WdistStatus::BadParams;
    }
    let report = gap_report(&nonzero(inner));
    unsafe {
        *out = WdistGapReport {
            gap_count: report.gap_count as u64,
            log_concave: report.log_concave as i32,
            unimodal: report.unimodal as i32,
            peak_index: report.peak_index as u64,
        };
    }
    WdistStatus::Ok
}

/// Log-concavity verdict for the [n, k] MDS distribution over GF(q):
/// writes 1 for log-concave, 0 otherwise.
#[no_mangle]
pub extern "C" fn wdist_mds_log_concave(
    n: u64,
    k: u64,
    q: u64,
    out: *mut i32,
) -> WdistStatus {
    if out.is_null() {
        return WdistStatus::NullArgument;
    }
    match mds_verdict(n as usize, k as usize, q) {
        Ok(v) => {
            unsafe { *out = (v.status == VerdictStatus::LogConcave) as i32 };
            WdistStatus::Ok
        }
        Err(_) => WdistStatus::BadParams,
    }
}
