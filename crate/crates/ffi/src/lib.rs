//! C ABI over the `diagconj` library.
//!
//! Matrices and subgroups are opaque heap handles released with their
//! `*_free` function. Every fallible call returns a [`DcStatus`]; on failure
//! a description is available from [`dc_last_error_message`] on the same
//! thread. Strings returned through `char **` out-parameters are owned by
//! the caller and released with [`dc_string_free`].
//!
//! Weight vectors and matrix entries cross the boundary as `int64_t`.
//! Results that may not fit (Smith witnesses, conjugators) stay inside
//! handles and are read back with [`dc_matrix_get`], which reports
//! [`DcStatus::Overflow`], or serialized with [`dc_matrix_to_json`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use diagconj::action::{self, WeightVector, ZeroPattern};
use diagconj::diag::{self, DiagSubgroup};
use diagconj::exactmat::{hermite_normal_form, smith_normal_form};
use diagconj::lattice::{self, lattice_of};
use diagconj::normalizer::{classify_case, NormalizerCase};
use diagconj::{Error, IntMatrix};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    Malformed = 2,
    DimensionMismatch = 3,
    RankDeficient = 4,
    NotUnimodular = 5,
    ZeroVector = 6,
    NotPrimitive = 7,
    NotInGroup = 8,
    CodimensionTooLarge = 9,
    TooLarge = 10,
    /// A value does not fit in `int64_t`.
    Overflow = 11,
    /// Internal error; the library caught a panic.
    Panic = 12,
}

impl From<&Error> for DcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } => DcStatus::DimensionMismatch,
            Error::RankDeficient { .. } => DcStatus::RankDeficient,
            Error::NotUnimodular => DcStatus::NotUnimodular,
            Error::ZeroVector => DcStatus::ZeroVector,
            Error::NotPrimitive => DcStatus::NotPrimitive,
            Error::NotInGroup(_) => DcStatus::NotInGroup,
            Error::CodimensionTooLarge { .. } => DcStatus::CodimensionTooLarge,
            Error::TooLarge(_) => DcStatus::TooLarge,
            Error::Malformed(_) => DcStatus::Malformed,
        }
    }
}

/// Normalizer case of `D_n(l)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcNormalizerCase {
    FullTorus = 0,
    AxisCase = 1,
    SameSignAllNonzero = 2,
    NoUnitWeights = 3,
    ZeroAndUnitSameSign = 4,
    MixedSigns = 5,
}

/// Opaque integer matrix.
pub struct DcMatrix(IntMatrix);

/// Opaque diagonalizable subgroup `D_n(A)`.
pub struct DcSubgroup(DiagSubgroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(DcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(DcStatus::from(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn null_pointer(name: &str) -> Failure {
    Failure(DcStatus::NullPointer, format!("{name} is NULL"))
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            DcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            DcStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| null_pointer(name))
}

unsafe fn out_ref<'a, T>(p: *mut T, name: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| null_pointer(name))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, name: &str) -> FfiResult<&'a [T]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null_pointer(name));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn weights(p: *const i64, n: usize) -> FfiResult<Vec<BigInt>> {
    if n == 0 {
        return Err(Failure(
            DcStatus::Malformed,
            "weight vector must be nonempty".into(),
        ));
    }
    Ok(slice(p, n, "weights")?
        .iter()
        .map(|&x| BigInt::from(x))
        .collect())
}

unsafe fn c_str<'a>(p: *const c_char, name: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null_pointer(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DcStatus::Malformed, format!("{name} is not UTF-8")))
}

fn to_i64(x: &BigInt) -> FfiResult<i64> {
    i64::try_from(x)
        .map_err(|_| Failure(DcStatus::Overflow, format!("{x} does not fit in int64_t")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON output has no NUL bytes")
        .into_raw()
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn int_json(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal integer is valid JSON")
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.row_iter()
            .map(|r| r.iter().map(int_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn dc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Matrices

/// Builds a `rows × cols` matrix from row-major `entries`.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_new(
    rows: usize,
    cols: usize,
    entries: *const i64,
    out: *mut *mut DcMatrix,
) -> DcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Failure(DcStatus::TooLarge, "rows * cols overflows".into()))?;
        let data = slice(entries, len, "entries")?;
        let m = IntMatrix::new(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())?;
        *out = boxed(DcMatrix(m));
        Ok(())
    })
}

/// Parses a matrix literal (`"2 4; 6 8"`) or JSON (`{"rows":..,"cols":..,"entries":..}`
/// or an array of rows).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_parse(text: *const c_char, out: *mut *mut DcMatrix) -> DcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let text = c_str(text, "text")?;
        let m = parse_matrix(text)?;
        *out = boxed(DcMatrix(m));
        Ok(())
    })
}

fn parse_matrix(text: &str) -> diagconj::Result<IntMatrix> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))?;
        let rows = match &v {
            Value::Object(o) => o.get("entries").cloned().unwrap_or(Value::Null),
            _ => v.clone(),
        };
        let rows = match rows {
            Value::Array(rs) if rs.iter().all(Value::is_array) => rs,
            Value::Array(flat) => vec![Value::Array(flat)],
            _ => return Err(Error::Malformed("expected an array of rows".into())),
        };
        let parsed: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .expect("rows are arrays")
                    .iter()
                    .map(|x| {
                        x.to_string()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Malformed(format!("not an integer: {x}")))
                    })
                    .collect()
            })
            .collect::<diagconj::Result<_>>()?;
        let cols = v.get("cols").and_then(Value::as_u64).unwrap_or(0) as usize;
        if parsed.is_empty() && cols == 0 {
            return Err(Error::Malformed("empty matrix needs \"cols\"".into()));
        }
        IntMatrix::from_rows(parsed, cols)
    } else {
        let rows: Vec<Vec<BigInt>> = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|t| {
                        t.parse::<BigInt>()
                            .map_err(|_| Error::Malformed(format!("not an integer: {t:?}")))
                    })
                    .collect()
            })
            .collect::<diagconj::Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::Malformed("empty matrix literal".into()));
        }
        IntMatrix::from_rows(rows, 0)
    }
}

/// # Safety
/// `m` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_free(m: *mut DcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_rows(m: *const DcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_cols(m: *const DcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Reads entry `(i, j)` (0-based).
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_get(
    m: *const DcMatrix,
    i: usize,
    j: usize,
    out: *mut i64,
) -> DcStatus {
    guard(|| {
        let m = &deref(m, "m")?.0;
        let out = out_ref(out, "out")?;
        if i >= m.rows() || j >= m.cols() {
            return Err(Failure(
                DcStatus::DimensionMismatch,
                format!("index ({i}, {j}) outside {}x{}", m.rows(), m.cols()),
            ));
        }
        *out = to_i64(&m[(i, j)])?;
        Ok(())
    })
}

/// Serializes as `{"cols":..,"entries":[[..]],"rows":..}` with exact integers.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_matrix_to_json(m: *const DcMatrix, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let m = &deref(m, "m")?.0;
        let out = out_ref(out, "out")?;
        *out = into_c_string(matrix_json(m).to_string());
        Ok(())
    })
}

/// Smith normal form `S = U·A·V`. Any of the three out-pointers may be NULL.
///
/// # Safety
/// `a` must be a live handle; non-NULL out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_smith(
    a: *const DcMatrix,
    u: *mut *mut DcMatrix,
    s: *mut *mut DcMatrix,
    v: *mut *mut DcMatrix,
) -> DcStatus {
    guard(|| {
        let d = smith_normal_form(&deref(a, "a")?.0);
        for (slot, m) in [(u, d.u), (s, d.s), (v, d.v)] {
            if let Some(slot) = slot.as_mut() {
                *slot = boxed(DcMatrix(m));
            }
        }
        Ok(())
    })
}

/// Hermite basis of the row lattice (zero rows removed).
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_hermite(a: *const DcMatrix, out: *mut *mut DcMatrix) -> DcStatus {
    guard(|| {
        let h = hermite_normal_form(&deref(a, "a")?.0);
        *out_ref(out, "out")? = boxed(DcMatrix(h));
        Ok(())
    })
}

/// Whether `A` and `B` generate the same row lattice.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_lattice_equal(
    a: *const DcMatrix,
    b: *const DcMatrix,
    out: *mut bool,
) -> DcStatus {
    guard(|| {
        let (a, b) = (&deref(a, "a")?.0, &deref(b, "b")?.0);
        let out = out_ref(out, "out")?;
        *out = lattice::equal(&lattice_of(a), &lattice_of(b))?;
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Subgroups

/// `D_n(A)` for the defining matrix `a`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_subgroup_new(
    a: *const DcMatrix,
    out: *mut *mut DcSubgroup,
) -> DcStatus {
    guard(|| {
        let g = DiagSubgroup::from_matrix(&deref(a, "a")?.0);
        *out_ref(out, "out")? = boxed(DcSubgroup(g));
        Ok(())
    })
}

/// `D_n(l_1, …, l_n)`.
///
/// # Safety
/// `l` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_subgroup_from_weights(
    l: *const i64,
    n: usize,
    out: *mut *mut DcSubgroup,
) -> DcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let g = DiagSubgroup::from_weights(&weights(l, n)?)?;
        *out = boxed(DcSubgroup(g));
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn dc_subgroup_free(g: *mut DcSubgroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Dimension `n − rk A`, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_subgroup_dimension(g: *const DcSubgroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.dimension())
}

/// Isomorphism type as `{"factors":[..],"torus_rank":r}`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_subgroup_isotype_json(
    g: *const DcSubgroup,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let iso = deref(g, "g")?.0.iso_type();
        let out = out_ref(out, "out")?;
        let v = json!({
            "torus_rank": iso.torus_rank,
            "factors": iso.factors.iter().map(int_json).collect::<Vec<_>>(),
        });
        *out = into_c_string(v.to_string());
        Ok(())
    })
}

/// `GL_n`-conjugacy. When conjugate and `perm` is non-NULL, writes the
/// 0-based images of a permutation `σ` with `D_n(A) = D_n(B∘σ)` to `perm[0..n]`.
///
/// # Safety
/// `g1`, `g2` must be live handles; `out` must be writable; `perm` must be
/// NULL or have room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn dc_conjugate_gl(
    g1: *const DcSubgroup,
    g2: *const DcSubgroup,
    out: *mut bool,
    perm: *mut usize,
) -> DcStatus {
    guard(|| {
        let (g1, g2) = (&deref(g1, "g1")?.0, &deref(g2, "g2")?.0);
        let out = out_ref(out, "out")?;
        let sigma = diag::conjugate_in_gl(g1, g2)?;
        *out = sigma.is_some();
        if let (Some(s), false) = (sigma, perm.is_null()) {
            std::slice::from_raw_parts_mut(perm, s.len()).copy_from_slice(s.images());
        }
        Ok(())
    })
}

/// `Cr_n`-conjugacy. When conjugate and `witness` is non-NULL, stores a
/// unimodular `M` with `transform(G1, M⁻¹) = G2`; otherwise `*witness` is NULL.
///
/// # Safety
/// `g1`, `g2` must be live handles; `out` must be writable; `witness` must be
/// NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn dc_conjugate_crn(
    g1: *const DcSubgroup,
    g2: *const DcSubgroup,
    out: *mut bool,
    witness: *mut *mut DcMatrix,
) -> DcStatus {
    guard(|| {
        let (g1, g2) = (&deref(g1, "g1")?.0, &deref(g2, "g2")?.0);
        let out = out_ref(out, "out")?;
        let m = diag::crn_conjugator(g1, g2)?;
        *out = m.is_some();
        if let Some(w) = witness.as_mut() {
            *w = m.map_or(ptr::null_mut(), |m| boxed(DcMatrix(m)));
        }
        Ok(())
    })
}

/// Canonical representative in `L_n` of `l` up to coordinate permutation and sign.
///
/// # Safety
/// `l` must point to `n` readable values and `out` to `n` writable ones.
#[no_mangle]
pub unsafe extern "C" fn dc_codim1_canonical(l: *const i64, n: usize, out: *mut i64) -> DcStatus {
    guard(|| {
        let l = weights(l, n)?;
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        let c = diag::codim1_canonical(&l)?;
        let c: Vec<i64> = c.iter().map(to_i64).collect::<FfiResult<_>>()?;
        std::slice::from_raw_parts_mut(out, n).copy_from_slice(&c);
        Ok(())
    })
}

/// Whether the action of `D_n(l)` on affine `n`-space is stable.
///
/// # Safety
/// `l` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_is_stable(l: *const i64, n: usize, out: *mut bool) -> DcStatus {
    guard(|| {
        let w = WeightVector::new(weights(l, n)?)?;
        *out_ref(out, "out")? = action::is_stable(&w);
        Ok(())
    })
}

/// Orbit report for points whose zero coordinates are `zeros[0..nzeros]` (0-based).
///
/// # Safety
/// `l` must point to `n` readable values, `zeros` to `nzeros`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_orbit_report_json(
    l: *const i64,
    n: usize,
    zeros: *const usize,
    nzeros: usize,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let w = WeightVector::new(weights(l, n)?)?;
        let s = ZeroPattern::from_indices(n, slice(zeros, nzeros, "zeros")?)?;
        let out = out_ref(out, "out")?;
        let r = action::orbit_report(&w, &s)?;
        let v = json!({
            "stabilizer": {
                "torus_rank": r.stabilizer.torus_rank,
                "factors": r.stabilizer.factors.iter().map(int_json).collect::<Vec<_>>(),
            },
            "stabilizer_dim": r.stabilizer_dim,
            "stabilizer_order": r.stabilizer_order.as_ref().map(int_json),
            "orbit_dim": r.orbit_dim,
            "closed": r.closed,
            "origin_in_closure": r.origin_in_closure,
        });
        *out = into_c_string(v.to_string());
        Ok(())
    })
}

/// Normalizer case of `D_n(l)`. For `AxisCase`, `axis` (if non-NULL)
/// receives the 0-based axis.
///
/// # Safety
/// `l` must point to `n` readable values; `out` must be writable; `axis`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn dc_normalizer_case(
    l: *const i64,
    n: usize,
    out: *mut DcNormalizerCase,
    axis: *mut usize,
) -> DcStatus {
    guard(|| {
        let l = weights(l, n)?;
        let out = out_ref(out, "out")?;
        *out = match classify_case(&l) {
            NormalizerCase::FullTorus => DcNormalizerCase::FullTorus,
            NormalizerCase::AxisCase(i) => {
                if let Some(a) = axis.as_mut() {
                    *a = i;
                }
                DcNormalizerCase::AxisCase
            }
            NormalizerCase::SameSignAllNonzero => DcNormalizerCase::SameSignAllNonzero,
            NormalizerCase::NoUnitWeights => DcNormalizerCase::NoUnitWeights,
            NormalizerCase::ZeroAndUnitSameSign => DcNormalizerCase::ZeroAndUnitSameSign,
            NormalizerCase::MixedSigns => DcNormalizerCase::MixedSigns,
        };
        Ok(())
    })
}

/// Runs a command-line invocation (`argv` excludes the program name) and
/// returns its JSON output through `out`. Standard input is empty.
///
/// The return value is the command's exit code (0, 1 or 2), or -1 when an
/// argument pointer is NULL or not UTF-8.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_run(
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut c_char,
) -> i32 {
    let mut code = -1;
    let status = guard(|| {
        let out = out_ref(out, "out")?;
        let mut args = vec!["diagconj".to_string()];
        for (k, &p) in slice(argv, argc, "argv")?.iter().enumerate() {
            args.push(c_str(p, &format!("argv[{k}]"))?.to_string());
        }
        let outcome = diagconj::cli::execute(args, &mut std::io::empty());
        code = outcome.code;
        *out = into_c_string(outcome.stdout);
        Ok(())
    });
    if status == DcStatus::Ok {
        code
    } else {
        -1
    }
}
