use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use diagconj_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { dc_string_free(p) };
    s
}

fn last_error() -> String {
    let p = dc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> *mut DcMatrix {
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { dc_matrix_new(rows, cols, entries.as_ptr(), &mut m) },
        DcStatus::Ok
    );
    m
}

fn entries(m: *const DcMatrix) -> Vec<Vec<i64>> {
    let (r, c) = unsafe { (dc_matrix_rows(m), dc_matrix_cols(m)) };
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut x = 0;
                    assert_eq!(unsafe { dc_matrix_get(m, i, j, &mut x) }, DcStatus::Ok);
                    x
                })
                .collect()
        })
        .collect()
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|r| {
            (0..b[0].len())
                .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                .collect()
        })
        .collect()
}

#[test]
fn smith_through_handles() {
    let a = matrix(2, 2, &[2, 4, 6, 8]);
    let (mut u, mut s, mut v) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { dc_smith(a, &mut u, &mut s, &mut v) }, DcStatus::Ok);
    let (ue, se, ve, ae) = (entries(u), entries(s), entries(v), entries(a));
    assert_eq!(se, vec![vec![2, 0], vec![0, 4]]);
    assert_eq!(mul(&mul(&ue, &ae), &ve), se);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { dc_matrix_to_json(s, &mut json) }, DcStatus::Ok);
    assert_eq!(
        take_string(json),
        r#"{"cols":2,"entries":[[2,0],[0,4]],"rows":2}"#
    );
    unsafe {
        dc_matrix_free(a);
        dc_matrix_free(u);
        dc_matrix_free(s);
        dc_matrix_free(v);
    }
}

#[test]
fn parse_and_hermite() {
    let text = CString::new("1 2; 3 4").unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { dc_matrix_parse(text.as_ptr(), &mut a) },
        DcStatus::Ok
    );
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { dc_hermite(a, &mut h) }, DcStatus::Ok);
    assert_eq!(entries(h), vec![vec![1, 0], vec![0, 2]]);
    let json = CString::new(r#"{"rows":2,"cols":2,"entries":[[1,0],[0,2]]}"#).unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(
        unsafe { dc_matrix_parse(json.as_ptr(), &mut b) },
        DcStatus::Ok
    );
    let mut eq = false;
    assert_eq!(unsafe { dc_lattice_equal(a, b, &mut eq) }, DcStatus::Ok);
    assert!(eq);
    unsafe {
        dc_matrix_free(a);
        dc_matrix_free(b);
        dc_matrix_free(h);
    }
}

#[test]
fn malformed_and_null_inputs() {
    let bad = CString::new("1 2; 3").unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { dc_matrix_parse(bad.as_ptr(), &mut a) },
        DcStatus::Malformed
    );
    assert!(a.is_null());
    assert!(last_error().contains("rows have different lengths"));
    assert_eq!(
        unsafe { dc_matrix_parse(ptr::null(), &mut a) },
        DcStatus::NullPointer
    );
    assert_eq!(
        unsafe { dc_matrix_new(1, 0, ptr::null(), &mut a) },
        DcStatus::Malformed
    );
    let m = matrix(1, 1, &[1]);
    let mut x = 0;
    assert_eq!(
        unsafe { dc_matrix_get(m, 1, 0, &mut x) },
        DcStatus::DimensionMismatch
    );
    unsafe { dc_matrix_free(m) };
    // A successful call clears the message.
    assert_eq!(
        unsafe { dc_matrix_new(1, 1, [5i64].as_ptr(), &mut a) },
        DcStatus::Ok
    );
    assert!(dc_last_error_message().is_null());
    unsafe {
        dc_matrix_free(a);
        dc_matrix_free(ptr::null_mut());
        dc_subgroup_free(ptr::null_mut());
        dc_string_free(ptr::null_mut());
    }
}

#[test]
fn overflow_is_reported() {
    let text = CString::new("123456789012345678901234567890").unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { dc_matrix_parse(text.as_ptr(), &mut a) },
        DcStatus::Ok
    );
    let mut x = 0;
    assert_eq!(
        unsafe { dc_matrix_get(a, 0, 0, &mut x) },
        DcStatus::Overflow
    );
    unsafe { dc_matrix_free(a) };
}

#[test]
fn subgroups_and_conjugacy() {
    let mut g1 = ptr::null_mut();
    let mut g2 = ptr::null_mut();
    assert_eq!(
        unsafe { dc_subgroup_from_weights([1, 2, 3].as_ptr(), 3, &mut g1) },
        DcStatus::Ok
    );
    assert_eq!(
        unsafe { dc_subgroup_from_weights([3, 2, 1].as_ptr(), 3, &mut g2) },
        DcStatus::Ok
    );
    assert_eq!(unsafe { dc_subgroup_dimension(g1) }, 2);
    let mut conj = false;
    let mut perm = [0usize; 3];
    assert_eq!(
        unsafe { dc_conjugate_gl(g1, g2, &mut conj, perm.as_mut_ptr()) },
        DcStatus::Ok
    );
    assert!(conj);
    assert_eq!(perm, [2, 1, 0]);
    let mut iso = ptr::null_mut();
    assert_eq!(
        unsafe { dc_subgroup_isotype_json(g1, &mut iso) },
        DcStatus::Ok
    );
    assert_eq!(take_string(iso), r#"{"factors":[],"torus_rank":2}"#);
    unsafe {
        dc_subgroup_free(g1);
        dc_subgroup_free(g2);
    }

    let a = matrix(1, 2, &[2, 0]);
    let b = matrix(1, 2, &[0, 2]);
    let (mut h1, mut h2) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(dc_subgroup_new(a, &mut h1), DcStatus::Ok);
        assert_eq!(dc_subgroup_new(b, &mut h2), DcStatus::Ok);
    }
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { dc_conjugate_crn(h1, h2, &mut conj, &mut w) },
        DcStatus::Ok
    );
    assert!(conj);
    let m = entries(w);
    // (2, 0)·M⁻¹ must generate the lattice of (0, 2); M is a permutation here.
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    assert_eq!(det.abs(), 1);
    let inv = vec![
        vec![m[1][1] * det, -m[0][1] * det],
        vec![-m[1][0] * det, m[0][0] * det],
    ];
    let image = mul(&[vec![2, 0]], &inv);
    assert_eq!(image[0][0], 0);
    assert_eq!(image[0][1].abs(), 2);
    unsafe {
        dc_matrix_free(w);
        dc_matrix_free(a);
        dc_matrix_free(b);
        dc_subgroup_free(h1);
        dc_subgroup_free(h2);
    }
}

#[test]
fn weight_vector_queries() {
    let mut out = [0i64; 2];
    assert_eq!(
        unsafe { dc_codim1_canonical([1, 0].as_ptr(), 2, out.as_mut_ptr()) },
        DcStatus::Ok
    );
    assert_eq!(out, [-1, 0]);
    assert_eq!(
        unsafe { dc_codim1_canonical([0, 0].as_ptr(), 2, out.as_mut_ptr()) },
        DcStatus::ZeroVector
    );

    let mut stable = false;
    assert_eq!(
        unsafe { dc_is_stable([1, 2, 3].as_ptr(), 3, &mut stable) },
        DcStatus::Ok
    );
    assert!(stable);
    assert_eq!(
        unsafe { dc_is_stable([1, -1, 2].as_ptr(), 3, &mut stable) },
        DcStatus::Ok
    );
    assert!(!stable);

    let mut report = ptr::null_mut();
    let zeros = [2usize];
    assert_eq!(
        unsafe { dc_orbit_report_json([1, 2, 0].as_ptr(), 3, zeros.as_ptr(), 1, &mut report) },
        DcStatus::Ok
    );
    let r: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(r["orbit_dim"], 1);
    assert_eq!(r["closed"], true);

    let mut case = DcNormalizerCase::FullTorus;
    let mut axis = usize::MAX;
    assert_eq!(
        unsafe { dc_normalizer_case([0, 1, 0].as_ptr(), 3, &mut case, &mut axis) },
        DcStatus::Ok
    );
    assert_eq!(case, DcNormalizerCase::AxisCase);
    assert_eq!(axis, 1);
    assert_eq!(
        unsafe { dc_normalizer_case([1, -1].as_ptr(), 2, &mut case, ptr::null_mut()) },
        DcStatus::Ok
    );
    assert_eq!(case, DcNormalizerCase::MixedSigns);
}

#[test]
fn cli_passthrough() {
    let args: Vec<CString> = ["snf", "--matrix", "2 4; 6 8"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let code = unsafe { dc_run(ptrs.as_ptr(), ptrs.len(), &mut out) };
    assert_eq!(code, 0);
    assert!(take_string(out).contains(r#""factors":[2,4]"#));

    let args: Vec<CString> = ["canonical", "--context", "aut3-torus", "--weights", "2 4 6"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
    let code = unsafe { dc_run(ptrs.as_ptr(), ptrs.len(), &mut out) };
    assert_eq!(code, 2);
    assert!(take_string(out).contains("NotPrimitive"));
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(dc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_entry_point() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/diagconj.h"))
            .unwrap();
    for name in [
        "typedef struct DcMatrix DcMatrix;",
        "typedef struct DcSubgroup DcSubgroup;",
        "DC_STATUS_OK = 0",
        "DC_STATUS_PANIC = 12",
        "dc_matrix_new(",
        "dc_matrix_parse(",
        "dc_smith(",
        "dc_hermite(",
        "dc_lattice_equal(",
        "dc_subgroup_from_weights(",
        "dc_conjugate_gl(",
        "dc_conjugate_crn(",
        "dc_codim1_canonical(",
        "dc_orbit_report_json(",
        "dc_normalizer_case(",
        "dc_run(",
        "dc_string_free(",
        "dc_last_error_message(",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles a small C program against the header when a C compiler is available.
#[test]
fn header_compiles_as_c() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| {
        std::process::Command::new(c)
            .arg("--version")
            .output()
            .is_ok()
    }) else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("diagconj-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        r#"#include "diagconj.h"
int probe(void) {
    DcMatrix *m = NULL;
    int64_t e[4] = {2, 4, 6, 8};
    DcStatus s = dc_matrix_new(2, 2, e, &m);
    dc_matrix_free(m);
    return s == DC_STATUS_OK ? 0 : 1;
}
"#,
    )
    .unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert!(status.success());
}
