//! C ABI for the bellcomp library.
//!
//! Polynomials cross the boundary as opaque [`BellcompPoly`] handles that
//! must be released with [`bellcomp_poly_free`]. Scalar results and
//! serialized forms cross as NUL-terminated strings allocated by Rust and
//! released with [`bellcomp_string_free`]. Every fallible entry point
//! returns a [`BellcompStatus`]; outputs are written through out-pointers
//! only on `Ok`.

use std::ffi::{c_char, CStr, CString};

use bellcomp::bell::BellStrategy;
use bellcomp::compositions::{
    weight_by_convolution, weight_by_depril, weight_by_enumeration, weight_by_part_removal,
    weight_by_partitions, weight_by_weighted_conv, WeightFunction,
};
use bellcomp::{Assignment, BigRational, MultiPoly};

/// Result of a call across the C boundary.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BellcompStatus {
    /// The call succeeded and any out-pointer was written.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument could not be parsed (strategy name, rational).
    InvalidArgument = 2,
    /// The inputs are outside the chosen strategy's domain.
    DomainError = 3,
}

/// Opaque handle to a sparse multivariate polynomial with exact rational
/// coefficients.
pub struct BellcompPoly {
    inner: MultiPoly,
}

fn leak_poly(p: MultiPoly) -> *mut BellcompPoly {
    Box::into_raw(Box::new(BellcompPoly { inner: p }))
}

fn leak_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Parse a NUL-terminated UTF-8 string, or fail with `InvalidArgument`.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, BellcompStatus> {
    if ptr.is_null() {
        return Err(BellcompStatus::NullArgument);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| BellcompStatus::InvalidArgument)
}

unsafe fn read_rational(ptr: *const c_char) -> Result<BigRational, BellcompStatus> {
    read_str(ptr)?
        .trim()
        .parse()
        .map_err(|_| BellcompStatus::InvalidArgument)
}

/// Compute the partial Bell polynomial `B(n, k)` by the named strategy and
/// hand back an owned handle.
///
/// `strategy` is one of `direct`, `compositions`, `enumeration`, `id1`,
/// `id2`, `id3`, `id4`, `id5`, `id6`.
///
/// # Safety
/// `strategy` must be NULL or a valid NUL-terminated string; `out` must be a
/// valid pointer. A NULL `strategy` selects `direct`. On `Ok` the caller
/// owns `*out` and must free it with [`bellcomp_poly_free`].
#[no_mangle]
pub unsafe extern "C" fn bellcomp_bell(
    n: u32,
    k: u32,
    strategy: *const c_char,
    out: *mut *mut BellcompPoly,
) -> BellcompStatus {
    if out.is_null() {
        return BellcompStatus::NullArgument;
    }
    let strategy = if strategy.is_null() {
        BellStrategy::Direct
    } else {
        match read_str(strategy).map(str::parse) {
            Ok(Ok(s)) => s,
            Ok(Err(_)) => return BellcompStatus::InvalidArgument,
            Err(status) => return status,
        }
    };
    if !strategy.applies(n, k) {
        return BellcompStatus::DomainError;
    }
    match strategy.compute(n, k) {
        Ok(poly) => {
            *out = leak_poly(poly);
            BellcompStatus::Ok
        }
        Err(_) => BellcompStatus::DomainError,
    }
}

/// Release a polynomial handle. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a pointer previously returned through this API and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bellcomp_poly_free(p: *mut BellcompPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of monomials with nonzero coefficient; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle from this API.
#[no_mangle]
pub unsafe extern "C" fn bellcomp_poly_term_count(p: *const BellcompPoly) -> usize {
    p.as_ref().map_or(0, |p| p.inner.term_count())
}

/// Deterministic text form (`c*x<i>^<e>` factors, terms joined by ` + `),
/// or NULL for a NULL handle. Free with [`bellcomp_string_free`].
///
/// # Safety
/// `p` must be NULL or a live handle from this API.
#[no_mangle]
pub unsafe extern "C" fn bellcomp_poly_to_text(p: *const BellcompPoly) -> *mut c_char {
    p.as_ref()
        .map_or(std::ptr::null_mut(), |p| leak_string(p.inner.to_string()))
}

/// JSON form: an array of `{"coeff": "p/q", "monomial": {"i": e}}` objects
/// in graded lexicographic order. Free with [`bellcomp_string_free`].
///
/// # Safety
/// `p` must be NULL or a live handle from this API.
#[no_mangle]
pub unsafe extern "C" fn bellcomp_poly_to_json(p: *const BellcompPoly) -> *mut c_char {
    p.as_ref()
        .map_or(std::ptr::null_mut(), |p| leak_string(p.inner.to_json().to_string()))
}

/// Evaluate the polynomial at `x_{i+1} = values[i]`, each value a rational
/// string like `"3"` or `"1/2"`. The result is written as a rational string.
///
/// # Safety
/// `p` must be a live handle; `values` must point to `len` valid
/// NUL-terminated strings; `out` must be valid. On `Ok` the caller owns
/// `*out` and must free it with [`bellcomp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bellcomp_poly_eval(
    p: *const BellcompPoly,
    values: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> BellcompStatus {
    let Some(p) = p.as_ref() else {
        return BellcompStatus::NullArgument;
    };
    if out.is_null() || (len > 0 && values.is_null()) {
        return BellcompStatus::NullArgument;
    }
    let mut assignment = Assignment::new();
    for i in 0..len {
        let value = match read_rational(*values.add(i)) {
            Ok(v) => v,
            Err(status) => return status,
        };
        assignment.insert(i as u32 + 1, value);
    }
    match p.inner.eval(&assignment) {
        Ok(v) => {
            *out = leak_string(v.to_string());
            BellcompStatus::Ok
        }
        Err(_) => BellcompStatus::DomainError,
    }
}

/// Stirling number of the second kind `S(n, k)` as a decimal string.
///
/// # Safety
/// `out` must be valid; on `Ok` the caller owns `*out` and must free it
/// with [`bellcomp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bellcomp_stirling2(
    n: u32,
    k: u32,
    out: *mut *mut c_char,
) -> BellcompStatus {
    if out.is_null() {
        return BellcompStatus::NullArgument;
    }
    *out = leak_string(bellcomp::bell::stirling2(n, k).to_string());
    BellcompStatus::Ok
}

/// Total weight of the `k`-part compositions of `n` under the weight
/// function `f(part_sizes[i]) = weights[i]`, by the named strategy.
///
/// `strategy` is one of `enumerate`, `partitions`, `convolution`, `depril`,
/// `weighted-conv`, `part-removal`; `removed_part` is only read by
/// `part-removal`. The result is written as a rational string.
///
/// # Safety
/// `part_sizes` and `weights` must point to `len` elements (`weights` to
/// valid NUL-terminated strings); `strategy` must be NULL (meaning
/// `convolution`) or a valid string; `out` must be valid. On `Ok` the caller
/// owns `*out` and must free it with [`bellcomp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bellcomp_composition_weight(
    k: u32,
    n: u32,
    part_sizes: *const u32,
    weights: *const *const c_char,
    len: usize,
    strategy: *const c_char,
    removed_part: u32,
    out: *mut *mut c_char,
) -> BellcompStatus {
    if out.is_null() || (len > 0 && (part_sizes.is_null() || weights.is_null())) {
        return BellcompStatus::NullArgument;
    }
    let mut pairs = Vec::with_capacity(len);
    for i in 0..len {
        let value = match read_rational(*weights.add(i)) {
            Ok(v) => v,
            Err(status) => return status,
        };
        pairs.push((*part_sizes.add(i), value));
    }
    let f: WeightFunction<BigRational> = WeightFunction::from_pairs(pairs);
    let strategy = if strategy.is_null() {
        "convolution"
    } else {
        match read_str(strategy) {
            Ok(s) => s,
            Err(status) => return status,
        }
    };
    let value = match strategy {
        "enumerate" => weight_by_enumeration(&f, k, n),
        "partitions" => weight_by_partitions(&f, k, n),
        "convolution" => weight_by_convolution(&f, k, n),
        "depril" => match weight_by_depril(&f, k, n) {
            Ok(v) => v,
            Err(_) => return BellcompStatus::DomainError,
        },
        "weighted-conv" => match weight_by_weighted_conv(&f, k, n) {
            Ok(v) => v,
            Err(_) => return BellcompStatus::DomainError,
        },
        "part-removal" => weight_by_part_removal(&f, removed_part, k, n),
        _ => return BellcompStatus::InvalidArgument,
    };
    *out = leak_string(value.to_string());
    BellcompStatus::Ok
}

/// Release a string returned by this API. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string previously returned by this API and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn bellcomp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
