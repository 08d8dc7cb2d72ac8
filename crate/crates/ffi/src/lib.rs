//! C ABI for the abra library.
//!
//! Conventions:
//! - every constructor returns an [`AbraStatus`] and writes its result
//!   through an out-pointer; results are opaque handles freed by the
//!   matching `*_free` function;
//! - strings returned to the caller are NUL-terminated, heap-allocated, and
//!   freed with [`abra_string_free`];
//! - positions and entries are `uintptr_t`-sized, 1-based like the library.
//!
//! The header `include/abra.h` is generated from this file by cbindgen at
//! build time.

use std::ffi::{c_char, CStr, CString};

use abra::{
    bell_number, count_valid, extensions, ternary_upper_bound, verify_with, BinaryWord,
    BorderArray, Engine, VerifyOutcome,
};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum AbraStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A word or array failed to parse.
    ParseError = 3,
    /// The operation rejects empty input.
    EmptyInput = 4,
    /// The input parsed but violates the operation's precondition
    /// (for example, an invalid border array passed to extensions).
    InvalidArgument = 5,
}

/// Which border-array engine to run.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum AbraEngine {
    Auto = 0,
    Naive = 1,
    Incremental = 2,
    Packed = 3,
}

impl From<AbraEngine> for Engine {
    fn from(e: AbraEngine) -> Engine {
        match e {
            AbraEngine::Auto => Engine::Auto,
            AbraEngine::Naive => Engine::Naive,
            AbraEngine::Incremental => Engine::Incremental,
            AbraEngine::Packed => Engine::Packed,
        }
    }
}

/// Opaque computed border array.
pub struct AbraBorderArray {
    inner: BorderArray,
}

/// Opaque verification outcome.
pub struct AbraVerifyResult {
    inner: VerifyOutcome,
}

unsafe fn parse_word(word: *const c_char) -> Result<BinaryWord, AbraStatus> {
    if word.is_null() {
        return Err(AbraStatus::NullPointer);
    }
    let text = CStr::from_ptr(word)
        .to_str()
        .map_err(|_| AbraStatus::InvalidUtf8)?;
    let w = BinaryWord::parse(text).map_err(|_| AbraStatus::ParseError)?;
    if w.is_empty() {
        return Err(AbraStatus::EmptyInput);
    }
    Ok(w)
}

unsafe fn candidate_from_raw(
    entries: *const usize,
    len: usize,
) -> Result<BorderArray, AbraStatus> {
    if entries.is_null() {
        return Err(AbraStatus::NullPointer);
    }
    if len == 0 {
        return Err(AbraStatus::EmptyInput);
    }
    let slice = std::slice::from_raw_parts(entries, len);
    BorderArray::from_entries(slice.to_vec()).map_err(|_| AbraStatus::EmptyInput)
}

fn string_out(s: String, out: *mut *mut c_char) -> AbraStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            AbraStatus::Ok
        }
        Err(_) => AbraStatus::InvalidArgument,
    }
}

/// Computes the abelian border array of a '0'/'1' word.
///
/// On success writes a handle to `out`; free it with
/// [`abra_border_array_free`].
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abra_border_array_compute(
    word: *const c_char,
    engine: AbraEngine,
    out: *mut *mut AbraBorderArray,
) -> AbraStatus {
    if out.is_null() {
        return AbraStatus::NullPointer;
    }
    let w = match parse_word(word) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let inner = Engine::from(engine).compute(&w).expect("word is nonempty");
    *out = Box::into_raw(Box::new(AbraBorderArray { inner }));
    AbraStatus::Ok
}

/// Number of entries in a computed border array.
///
/// # Safety
/// `ba` must be a live handle from [`abra_border_array_compute`].
#[no_mangle]
pub unsafe extern "C" fn abra_border_array_len(ba: *const AbraBorderArray) -> usize {
    if ba.is_null() {
        return 0;
    }
    (*ba).inner.len()
}

/// Pointer to the entries of a computed border array (`len` values, entry
/// `i` of the array at offset `i - 1`). Valid until the handle is freed.
///
/// # Safety
/// `ba` must be a live handle from [`abra_border_array_compute`].
#[no_mangle]
pub unsafe extern "C" fn abra_border_array_data(ba: *const AbraBorderArray) -> *const usize {
    if ba.is_null() {
        return std::ptr::null();
    }
    (*ba).inner.entries().as_ptr()
}

/// Frees a border-array handle. NULL is ignored.
///
/// # Safety
/// `ba` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abra_border_array_free(ba: *mut AbraBorderArray) {
    if !ba.is_null() {
        drop(Box::from_raw(ba));
    }
}

/// Decides whether `entries[0..len]` is a valid abelian border array.
///
/// On success writes a handle to `out`; free it with
/// [`abra_verify_result_free`]. Verification itself never fails: invalid
/// arrays produce a handle whose `is_valid` is false.
///
/// # Safety
/// `entries` must point to `len` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn abra_verify(
    entries: *const usize,
    len: usize,
    engine: AbraEngine,
    out: *mut *mut AbraVerifyResult,
) -> AbraStatus {
    if out.is_null() {
        return AbraStatus::NullPointer;
    }
    let pi = match candidate_from_raw(entries, len) {
        Ok(pi) => pi,
        Err(status) => return status,
    };
    let inner = verify_with(&pi, engine.into());
    *out = Box::into_raw(Box::new(AbraVerifyResult { inner }));
    AbraStatus::Ok
}

/// Whether the verified candidate is a valid abelian border array.
///
/// # Safety
/// `result` must be a live handle from [`abra_verify`].
#[no_mangle]
pub unsafe extern "C" fn abra_verify_result_is_valid(result: *const AbraVerifyResult) -> bool {
    !result.is_null() && (*result).inner.is_valid()
}

/// 1-based index of the first failure for an invalid candidate; 0 when the
/// candidate is valid.
///
/// # Safety
/// `result` must be a live handle from [`abra_verify`].
#[no_mangle]
pub unsafe extern "C" fn abra_verify_result_mismatch_index(
    result: *const AbraVerifyResult,
) -> usize {
    if result.is_null() {
        return 0;
    }
    (*result).inner.mismatch_index().unwrap_or(0)
}

/// The canonical generating word of a valid candidate as a fresh string;
/// NULL when the candidate is invalid. Free with [`abra_string_free`].
///
/// # Safety
/// `result` must be a live handle from [`abra_verify`].
#[no_mangle]
pub unsafe extern "C" fn abra_verify_result_word(
    result: *const AbraVerifyResult,
) -> *mut c_char {
    if result.is_null() {
        return std::ptr::null_mut();
    }
    match (*result).inner.word() {
        Some(word) => CString::new(word.to_string())
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        None => std::ptr::null_mut(),
    }
}

/// Frees a verification handle. NULL is ignored.
///
/// # Safety
/// `result` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abra_verify_result_free(result: *mut AbraVerifyResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// The two values that extend a valid array of length `len` to length
/// `len + 1`. Fails with `InvalidArgument` when the input array is not
/// valid.
///
/// # Safety
/// `entries` must point to `len` readable values; the out-pointers must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn abra_extensions(
    entries: *const usize,
    len: usize,
    out_with_zero: *mut usize,
    out_with_one: *mut usize,
) -> AbraStatus {
    if out_with_zero.is_null() || out_with_one.is_null() {
        return AbraStatus::NullPointer;
    }
    let pi = match candidate_from_raw(entries, len) {
        Ok(pi) => pi,
        Err(status) => return status,
    };
    match extensions(&pi) {
        Ok(ext) => {
            *out_with_zero = ext.with_zero;
            *out_with_one = ext.with_one;
            AbraStatus::Ok
        }
        Err(_) => AbraStatus::InvalidArgument,
    }
}

/// Number of valid abelian border arrays of length `n` (`2^(n-1)`), written
/// as a decimal string. Free with [`abra_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abra_count_valid(n: usize, out: *mut *mut c_char) -> AbraStatus {
    if out.is_null() {
        return AbraStatus::NullPointer;
    }
    match count_valid(n) {
        Ok(count) => string_out(count.to_string(), out),
        Err(_) => AbraStatus::InvalidArgument,
    }
}

/// `(3^(n-1) + 1) / 2` as a decimal string, the ternary upper bound.
/// Free with [`abra_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abra_ternary_upper_bound(
    n: usize,
    out: *mut *mut c_char,
) -> AbraStatus {
    if out.is_null() {
        return AbraStatus::NullPointer;
    }
    if n == 0 {
        return AbraStatus::InvalidArgument;
    }
    string_out(ternary_upper_bound(n).to_string(), out)
}

/// The `n`-th Bell number as a decimal string. Free with
/// [`abra_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn abra_bell_number(n: usize, out: *mut *mut c_char) -> AbraStatus {
    if out.is_null() {
        return AbraStatus::NullPointer;
    }
    if n == 0 {
        return AbraStatus::InvalidArgument;
    }
    string_out(bell_number(n).to_string(), out)
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abra_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn compute(word: &str, engine: AbraEngine) -> (AbraStatus, *mut AbraBorderArray) {
        let cword = CString::new(word).unwrap();
        let mut handle: *mut AbraBorderArray = ptr::null_mut();
        let status = abra_border_array_compute(cword.as_ptr(), engine, &mut handle);
        (status, handle)
    }

    #[test]
    fn border_array_roundtrip() {
        unsafe {
            for engine in [
                AbraEngine::Auto,
                AbraEngine::Naive,
                AbraEngine::Incremental,
                AbraEngine::Packed,
            ] {
                let (status, handle) = compute("0001001", engine);
                assert_eq!(status, AbraStatus::Ok);
                assert_eq!(abra_border_array_len(handle), 7);
                let data = abra_border_array_data(handle);
                let entries = std::slice::from_raw_parts(data, 7);
                assert_eq!(entries, &[0, 1, 2, 0, 4, 5, 0]);
                abra_border_array_free(handle);
            }
        }
    }

    #[test]
    fn border_array_error_paths() {
        unsafe {
            let (status, _) = compute("012", AbraEngine::Auto);
            assert_eq!(status, AbraStatus::ParseError);
            let (status, _) = compute("", AbraEngine::Auto);
            assert_eq!(status, AbraStatus::EmptyInput);

            let mut handle: *mut AbraBorderArray = ptr::null_mut();
            assert_eq!(
                abra_border_array_compute(ptr::null(), AbraEngine::Auto, &mut handle),
                AbraStatus::NullPointer
            );
            let cword = CString::new("01").unwrap();
            assert_eq!(
                abra_border_array_compute(cword.as_ptr(), AbraEngine::Auto, ptr::null_mut()),
                AbraStatus::NullPointer
            );
            let bad = CString::new(vec![0xFFu8, 0xFE]).unwrap();
            assert_eq!(
                abra_border_array_compute(bad.as_ptr(), AbraEngine::Auto, &mut handle),
                AbraStatus::InvalidUtf8
            );
        }
    }

    #[test]
    fn verify_valid_and_invalid() {
        unsafe {
            let entries: [usize; 5] = [0, 0, 0, 3, 3];
            let mut handle: *mut AbraVerifyResult = ptr::null_mut();
            let status =
                abra_verify(entries.as_ptr(), entries.len(), AbraEngine::Auto, &mut handle);
            assert_eq!(status, AbraStatus::Ok);
            assert!(abra_verify_result_is_valid(handle));
            assert_eq!(abra_verify_result_mismatch_index(handle), 0);
            let word = abra_verify_result_word(handle);
            assert!(!word.is_null());
            assert_eq!(CStr::from_ptr(word).to_str().unwrap(), "01101");
            abra_string_free(word);
            abra_verify_result_free(handle);

            let entries: [usize; 6] = [0, 1, 2, 0, 4, 4];
            let mut handle: *mut AbraVerifyResult = ptr::null_mut();
            let status =
                abra_verify(entries.as_ptr(), entries.len(), AbraEngine::Auto, &mut handle);
            assert_eq!(status, AbraStatus::Ok);
            assert!(!abra_verify_result_is_valid(handle));
            assert_eq!(abra_verify_result_mismatch_index(handle), 6);
            assert!(abra_verify_result_word(handle).is_null());
            abra_verify_result_free(handle);

            assert_eq!(
                abra_verify(entries.as_ptr(), 0, AbraEngine::Auto, &mut handle),
                AbraStatus::EmptyInput
            );
            assert_eq!(
                abra_verify(ptr::null(), 3, AbraEngine::Auto, &mut handle),
                AbraStatus::NullPointer
            );
        }
    }

    #[test]
    fn extensions_values() {
        unsafe {
            let entries: [usize; 5] = [0, 0, 0, 3, 3];
            let (mut zero, mut one) = (0usize, 0usize);
            let status = abra_extensions(entries.as_ptr(), entries.len(), &mut zero, &mut one);
            assert_eq!(status, AbraStatus::Ok);
            assert_eq!((zero, one), (5, 3));

            let invalid: [usize; 6] = [0, 1, 2, 0, 4, 4];
            let status = abra_extensions(invalid.as_ptr(), invalid.len(), &mut zero, &mut one);
            assert_eq!(status, AbraStatus::InvalidArgument);
        }
    }

    #[test]
    fn counting_strings() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(abra_count_valid(7, &mut s), AbraStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "64");
            abra_string_free(s);

            assert_eq!(abra_count_valid(0, &mut s), AbraStatus::InvalidArgument);

            assert_eq!(abra_ternary_upper_bound(5, &mut s), AbraStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "41");
            abra_string_free(s);

            assert_eq!(abra_bell_number(5, &mut s), AbraStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "52");
            abra_string_free(s);

            // big enough to overflow any machine word
            assert_eq!(abra_count_valid(200, &mut s), AbraStatus::Ok);
            let decimal = CStr::from_ptr(s).to_str().unwrap();
            assert_eq!(decimal.len(), 60);
            assert!(decimal.starts_with("8034690221"));
            abra_string_free(s);
        }
    }

    #[test]
    fn frees_tolerate_null() {
        unsafe {
            abra_border_array_free(ptr::null_mut());
            abra_verify_result_free(ptr::null_mut());
            abra_string_free(ptr::null_mut());
        }
    }
}
