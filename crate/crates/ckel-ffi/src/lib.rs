//! C ABI over the invariant computations.
//!
//! The binding surface is deliberately narrow: parse a JSON document into
//! an opaque handle, run an operation, get the report back as a JSON
//! string (the same schema the command-line `--format json` prints), and
//! free what you were given.  Every function returns a [`CkelStatus`];
//! out-parameters are written only on `Ok`.
//!
//! Levels are passed as `int64_t` with any negative value meaning "use the
//! certified default".  Strings returned through `char **` must be
//! released with [`ckel_string_free`], documents with
//! [`ckel_document_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ckel::document::{DocumentError, InputDocument};
use ckel::report::{self, CommandError, Report};
use ckel::zomat::SeedError;

/// Opaque handle to a parsed input document.
pub struct CkelDocument {
    doc: InputDocument,
}

/// Result of every binding call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CkelStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    HypothesisNotCertified = 5,
    LevelNotCovered = 6,
    WrongKind = 7,
    LevelRequired = 8,
    Internal = 9,
}

fn status_of(err: &CommandError) -> CkelStatus {
    match err {
        CommandError::Document(DocumentError::Malformed(_)) => CkelStatus::ParseError,
        CommandError::Document(DocumentError::WrongKind { .. }) => CkelStatus::WrongKind,
        CommandError::Document(_) => CkelStatus::InvalidInput,
        CommandError::Invariant(ckel::invariants::InvariantError::HypothesisNotCertified) => {
            CkelStatus::HypothesisNotCertified
        }
        CommandError::Invariant(ckel::invariants::InvariantError::Seed(
            SeedError::TailNotCovered(_),
        ))
        | CommandError::Seed(SeedError::TailNotCovered(_)) => CkelStatus::LevelNotCovered,
        CommandError::LevelRequired => CkelStatus::LevelRequired,
        _ => CkelStatus::InvalidInput,
    }
}

/// Caller has already null-checked the handle.
unsafe fn doc_ref<'a>(handle: *const CkelDocument) -> &'a InputDocument {
    &(*handle).doc
}

fn emit_report(result: Result<Report, CommandError>, out_report: *mut *mut c_char) -> CkelStatus {
    match result {
        Ok(report) => {
            let json = report.to_json().to_string();
            let cstring = match CString::new(json) {
                Ok(s) => s,
                Err(_) => return CkelStatus::Internal,
            };
            unsafe {
                *out_report = cstring.into_raw();
            }
            CkelStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

fn guarded(body: impl FnOnce() -> CkelStatus) -> CkelStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(CkelStatus::Internal)
}

fn level_arg(level: i64) -> Option<usize> {
    usize::try_from(level).ok()
}

/// Parses a JSON input document (the `{"kind": "ck" | "seed", ...}` schema)
/// into an opaque handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out_document` a valid
/// pointer; the returned handle must be freed with `ckel_document_free`.
#[no_mangle]
pub unsafe extern "C" fn ckel_document_parse(
    json: *const c_char,
    out_document: *mut *mut CkelDocument,
) -> CkelStatus {
    if json.is_null() || out_document.is_null() {
        return CkelStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return CkelStatus::InvalidUtf8;
    };
    guarded(|| match InputDocument::from_json(text) {
        Ok(doc) => {
            // surface structural problems at parse time
            match doc.clone().into_input() {
                Ok(_) => {
                    *out_document = Box::into_raw(Box::new(CkelDocument { doc }));
                    CkelStatus::Ok
                }
                Err(DocumentError::Malformed(_)) => CkelStatus::ParseError,
                Err(_) => CkelStatus::InvalidInput,
            }
        }
        Err(_) => CkelStatus::ParseError,
    })
}

/// Releases a document handle. Accepts NULL.
///
/// # Safety
/// `document` must come from `ckel_document_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ckel_document_free(document: *mut CkelDocument) {
    if !document.is_null() {
        drop(Box::from_raw(document));
    }
}

/// Releases a string returned by any report call. Accepts NULL.
///
/// # Safety
/// `s` must come from a ckel report call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ckel_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

macro_rules! require {
    ($($ptr:expr),+) => {
        if $($ptr.is_null())||+ {
            return CkelStatus::NullArgument;
        }
    };
}

/// Structural validation report: Cuntz-Krieger validity of a matrix, or
/// the stability/irreducibility report of a seed.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_validate(
    document: *const CkelDocument,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| emit_report(report::validate_report(doc), out_report))
}

/// K_0 with the unit class and K_1. Negative `level` means the certified
/// default; `assume_drs_li` asserts the hypothesis of an explicit tail.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_k_groups(
    document: *const CkelDocument,
    level: i64,
    assume_drs_li: bool,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| {
        emit_report(
            report::kgroups_report(doc, level_arg(level), assume_drs_li),
            out_report,
        )
    })
}

/// Strong and weak extension groups of a seed document.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_ext_groups(
    document: *const CkelDocument,
    level: i64,
    assume_drs_li: bool,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| {
        emit_report(
            report::ext_report(doc, level_arg(level), assume_drs_li),
            out_report,
        )
    })
}

/// Six-term exactness report at a level (negative for the certified
/// default).
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_six_term(
    document: *const CkelDocument,
    level: i64,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| emit_report(report::sixterm_report(doc, level_arg(level)), out_report))
}

/// Level-to-level stabilization map report.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_stabilization(
    document: *const CkelDocument,
    level: i64,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| {
        emit_report(
            report::stabilization_report_cmd(doc, level_arg(level)),
            out_report,
        )
    })
}

/// Reciprocal dual matrix of a seed and the duality verification.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_dual(
    document: *const CkelDocument,
    assume_drs_li: bool,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| emit_report(report::dual_report(doc, assume_drs_li), out_report))
}

/// Double-dual checks for a Cuntz-Krieger matrix document.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_double_dual(
    document: *const CkelDocument,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| emit_report(report::double_dual_report(doc), out_report))
}

/// Complete invariant (G1, G2, G3) of a Cuntz-Krieger matrix document.
///
/// # Safety
/// `document` must be a live handle and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_ck_invariant(
    document: *const CkelDocument,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(document, out_report);
    let doc = doc_ref(document);
    guarded(|| emit_report(report::ck_invariant_report(doc), out_report))
}

/// Decides isomorphism of the simple Cuntz-Krieger algebras of two matrix
/// documents.  Writes the verdict to `out_isomorphic` when non-NULL.
///
/// # Safety
/// `first` and `second` must be live handles and `out_report` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ckel_compare(
    first: *const CkelDocument,
    second: *const CkelDocument,
    out_isomorphic: *mut bool,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(first, second, out_report);
    let a = doc_ref(first);
    let b = doc_ref(second);
    guarded(|| match report::compare_report(a, b) {
        Ok(report) => {
            if !out_isomorphic.is_null() {
                *out_isomorphic = report.verdict == Some(true);
            }
            emit_report(Ok(report), out_report)
        }
        Err(e) => status_of(&e),
    })
}

/// Runs the bundled worked-example corpus; the report is a JSON object
/// with one entry per example and an overall verdict.
///
/// # Safety
/// `out_report` and `out_all_pass` (when non-NULL) must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ckel_run_examples(
    out_all_pass: *mut bool,
    out_report: *mut *mut c_char,
) -> CkelStatus {
    require!(out_report);
    guarded(|| {
        let outcomes = ckel::corpus::run_corpus();
        let all_pass = outcomes.iter().all(|o| o.pass);
        if !out_all_pass.is_null() {
            *out_all_pass = all_pass;
        }
        let items: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| serde_json::json!({ "name": o.name, "pass": o.pass, "detail": o.detail }))
            .collect();
        let json = serde_json::json!({ "examples": items, "verdict": all_pass }).to_string();
        match CString::new(json) {
            Ok(s) => {
                *out_report = s.into_raw();
                CkelStatus::Ok
            }
            Err(_) => CkelStatus::Internal,
        }
    })
}

/// Version of the underlying library, a static string that must not be
/// freed.
#[no_mangle]
pub extern "C" fn ckel_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
