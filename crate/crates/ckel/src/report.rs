//! Report model for the command-line front end and the C bindings: every
//! operation produces a [`Report`] that renders identically as text or
//! JSON (group strings and verdicts agree between the two formats).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::abelian::MarkedGroup;
use crate::document::{DocumentError, Input, InputDocument};
use crate::intmat::KernelBasis;
use crate::invariants::{
    self, six_term_check, stabilization_check, InvariantError, SixTermReport, StabilizationReport,
};
use crate::reciprocal::{
    ck_complete_invariant, ck_isomorphic, double_hat_check, dual_swap_matrix, verify_duality,
};
use crate::zomat::{validate_ck, PropertyReport, StableSeed};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Seed(#[from] crate::zomat::SeedError),
    #[error(transparent)]
    Matrix(#[from] crate::zomat::MatrixError),
    #[error("a level is required for this seed (no certified stabilization level); pass --level")]
    LevelRequired,
}

/// Output of one command: echoed input, named groups as canonical strings,
/// marked elements as coordinate lists, an optional verdict, recorded
/// assumptions, and command-specific details.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<Value>,
    pub groups: BTreeMap<String, String>,
    pub marked: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    pub assumptions: Vec<String>,
    pub details: BTreeMap<String, Value>,
}

impl Report {
    fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            properties: None,
            groups: BTreeMap::new(),
            marked: BTreeMap::new(),
            verdict: None,
            assumptions: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    fn add_marked_group(&mut self, name: &str, g: &MarkedGroup) {
        self.groups.insert(name.to_string(), g.group().to_string());
        self.marked
            .insert(name.to_string(), coords_to_strings(g.element()));
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        if let Some(props) = &self.properties {
            line("properties:".to_string());
            line(render_value_block(props, "  "));
        }
        if !self.groups.is_empty() {
            line("groups:".to_string());
            for (name, g) in &self.groups {
                line(format!("  {name} = {g}"));
            }
        }
        if !self.marked.is_empty() {
            line("marked:".to_string());
            for (name, coords) in &self.marked {
                line(format!("  {name} = ({})", coords.join(", ")));
            }
        }
        for (name, value) in &self.details {
            line(format!("{name}: {}", compact(value)));
        }
        if !self.assumptions.is_empty() {
            line("assumptions:".to_string());
            for a in &self.assumptions {
                line(format!("  - {a}"));
            }
        }
        if let Some(v) = self.verdict {
            line(format!("verdict: {v}"));
        }
        out
    }
}

fn compact(value: &Value) -> String {
    serde_json::to_string(value).expect("value rendering cannot fail")
}

fn render_value_block(value: &Value, indent: &str) -> String {
    match value.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{indent}{k} = {}", compact(v)))
            .collect::<Vec<_>>()
            .join("\n"),
        None => format!("{indent}{}", compact(value)),
    }
}

fn coords_to_strings(coords: &[BigInt]) -> Vec<String> {
    coords.iter().map(BigInt::to_string).collect()
}

fn basis_to_json(basis: &KernelBasis) -> Value {
    let vectors: Vec<Vec<String>> = basis
        .vectors()
        .iter()
        .map(|v| coords_to_strings(v))
        .collect();
    json!({ "rank": basis.rank(), "vectors": vectors })
}

fn properties_json(p: &PropertyReport) -> Value {
    let levels: Vec<Value> = p
        .levels
        .iter()
        .map(|l| json!({ "level": l.level, "irreducible": l.irreducible, "dc": l.dc }))
        .collect();
    json!({
        "K": p.k,
        "rsf": p.rsf,
        "rs": p.rs,
        "dc": p.dc,
        "drs": p.drs,
        "li_up_to": p.li_up_to,
        "li_from": p.li_from,
        "certificate": p.certificate.to_string(),
        "levels": levels,
    })
}

/// Applies the user assumption flag to a parsed seed, recording it.
fn assume_if_requested(
    seed: &StableSeed,
    assume: bool,
    assumptions: &mut Vec<String>,
) -> StableSeed {
    let mut seed = seed.clone();
    if assume && seed.assume_drs_li() {
        assumptions
            .push("user asserted diagonal right stability and local irreducibility beyond the covered depth".to_string());
    }
    if let crate::zomat::TailRule::Explicit(tail) = seed.tail() {
        if tail.assumed_drs && !assume {
            assumptions.push(
                "document declares diagonal right stability beyond the covered depth".to_string(),
            );
        }
    }
    seed
}

const DEPTH: usize = 4;

pub fn validate_report(doc: &InputDocument) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("validate", doc.to_json());
    match &input {
        Input::Ck(matrix) => match validate_ck(matrix) {
            Ok(_) => {
                report.verdict = Some(true);
                report.details.insert(
                    "ck".to_string(),
                    json!({ "irreducible": true, "permutation": false }),
                );
            }
            Err(e) => {
                report.verdict = Some(false);
                report.details.insert(
                    "ck".to_string(),
                    json!({
                        "irreducible": matrix.is_irreducible(),
                        "permutation": matrix.is_permutation(),
                        "error": e.to_string(),
                    }),
                );
            }
        },
        Input::Seed(seed) => {
            let props = seed.check_properties(DEPTH)?;
            report.verdict = Some(true);
            report.properties = Some(properties_json(&props));
        }
    }
    Ok(report)
}

pub fn kgroups_report(
    doc: &InputDocument,
    level: Option<usize>,
    assume: bool,
) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("kgroups", doc.to_json());
    match &input {
        Input::Ck(matrix) => {
            let ck = validate_ck(matrix)?;
            let (k0, k1) = invariants::ck_k_theory(&ck);
            report.add_marked_group("K0", &k0);
            report.groups.insert(
                "K0 mod unit".to_string(),
                k0.quotient_by_element().to_string(),
            );
            report.details.insert("K1".to_string(), basis_to_json(&k1));
        }
        Input::Seed(seed) => {
            let seed = assume_if_requested(seed, assume, &mut report.assumptions);
            let (k0, k1) = match level {
                Some(n) => invariants::k_groups_level(&seed, n)?,
                None => invariants::k_groups_el(&seed)?,
            };
            let at = level.unwrap_or_else(|| seed.k());
            report.details.insert("level".to_string(), json!(at));
            report.add_marked_group("K0", &k0);
            report.groups.insert(
                "K0 mod unit".to_string(),
                k0.quotient_by_element().to_string(),
            );
            report.details.insert("K1".to_string(), basis_to_json(&k1));
        }
    }
    Ok(report)
}

pub fn ext_report(
    doc: &InputDocument,
    level: Option<usize>,
    assume: bool,
) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("ext", doc.to_json());
    let seed = input.expect_seed()?;
    let seed = assume_if_requested(seed, assume, &mut report.assumptions);
    let (strong, zero, weak, at) = match level {
        Some(n) => {
            let (s, z) = invariants::ext_strong_level(&seed, n)?;
            (s, z, invariants::ext_weak_level(&seed, n)?, n)
        }
        None => {
            let (s, z, w) = invariants::ext_groups_el(&seed)?;
            (s, z, w, seed.k())
        }
    };
    report.details.insert("level".to_string(), json!(at));
    report.add_marked_group("Ext_s^1", &strong);
    report
        .groups
        .insert("Ext_w^1".to_string(), weak.to_string());
    report
        .details
        .insert("Ext_s^0".to_string(), basis_to_json(&zero));
    Ok(report)
}

fn sixterm_json(r: &SixTermReport) -> Value {
    json!({
        "level": r.level,
        "j_injective": r.j_injective,
        "exact_at_weak_kernel": r.exact_at_weak_kernel,
        "exact_at_z": r.exact_at_z,
        "exact_at_strong_cokernel": r.exact_at_strong_cokernel,
        "q_surjective": r.q_surjective,
        "factorization_identity": r.factorization_identity,
        "strong_kernel_rank": r.strong_kernel_rank,
        "weak_kernel_rank": r.weak_kernel_rank,
        "index_image_generator": r.index_image_generator.to_string(),
        "mark_order": r.mark_order.to_string(),
    })
}

pub fn sixterm_report(doc: &InputDocument, level: Option<usize>) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("sixterm", doc.to_json());
    let seed = input.expect_seed()?;
    let n = match level {
        Some(n) => n,
        None if seed.certification().certified_or_asserted() => seed.k(),
        None => return Err(CommandError::LevelRequired),
    };
    let r = six_term_check(seed, n)?;
    report
        .groups
        .insert("Ext_s^1".to_string(), r.strong_cokernel.to_string());
    report
        .groups
        .insert("Ext_w^1".to_string(), r.weak_cokernel.to_string());
    report
        .details
        .insert("sixterm".to_string(), sixterm_json(&r));
    report.verdict = Some(r.exact() && r.factorization_identity);
    Ok(report)
}

fn stabilization_json(r: &StabilizationReport) -> Value {
    let maps: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "map": c.map.to_string(),
                "well_defined": c.well_defined,
                "square_commutes": c.square_commutes,
                "isomorphism": c.isomorphism,
            })
        })
        .collect();
    json!({ "level": r.level, "dc_at_level": r.dc_at_level, "maps": maps })
}

pub fn stabilization_report_cmd(
    doc: &InputDocument,
    level: Option<usize>,
) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("stabilization", doc.to_json());
    let seed = input.expect_seed()?;
    let n = match level {
        Some(n) => n,
        None if seed.certification().certified_or_asserted() => seed.k(),
        None => return Err(CommandError::LevelRequired),
    };
    let r = stabilization_check(seed, n)?;
    let verdict = if r.dc_at_level {
        r.all_well_defined() && r.all_isomorphisms()
    } else {
        r.all_well_defined()
    };
    report
        .details
        .insert("stabilization".to_string(), stabilization_json(&r));
    report.verdict = Some(verdict);
    Ok(report)
}

pub fn dual_report(doc: &InputDocument, assume: bool) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("dual", doc.to_json());
    let seed = input.expect_seed()?;
    let seed = assume_if_requested(seed, assume, &mut report.assumptions);
    let duality = verify_duality(&seed)?;
    let swap = dual_swap_matrix(&seed)?;
    report
        .details
        .insert("seed".to_string(), json!(duality.seed));
    report
        .details
        .insert("dual_matrix".to_string(), json!(duality.dual.rows_vec()));
    report
        .details
        .insert("dual_swap_matrix".to_string(), json!(swap.rows_vec()));
    report.add_marked_group("Ext_s^1", &duality.ext_strong);
    report.add_marked_group("dual K0", &duality.k0);
    report.details.insert(
        "ranks".to_string(),
        json!({
            "Ext_s^0": duality.ext_strong_zero_rank,
            "dual K1": duality.k1_rank,
        }),
    );
    report.details.insert(
        "checks".to_string(),
        json!({
            "dual_is_ck": duality.dual_is_ck,
            "pairs_match": duality.pairs_match,
            "ranks_match": duality.ranks_match,
        }),
    );
    report.verdict = Some(duality.verdict());
    Ok(report)
}

pub fn double_dual_report(doc: &InputDocument) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("double-dual", doc.to_json());
    let ck = input.expect_valid_ck()?;
    let r = double_hat_check(&ck);
    report.details.insert(
        "double_dual_matrix".to_string(),
        json!(r.double_dual.rows_vec()),
    );
    report.details.insert(
        "checks".to_string(),
        json!({
            "pair_match": r.pair_match,
            "rank_match": r.rank_match,
            "determinant_identity": r.determinant_identity,
        }),
    );
    report.verdict = Some(r.all_pass());
    Ok(report)
}

pub fn ck_invariant_report(doc: &InputDocument) -> Result<Report, CommandError> {
    let input = doc.clone().into_input()?;
    let mut report = Report::new("ck-invariant", doc.to_json());
    let ck = input.expect_valid_ck()?;
    let inv = ck_complete_invariant(&ck);
    report.groups.insert("G1".to_string(), inv.g1.to_string());
    report.groups.insert("G2".to_string(), inv.g2.to_string());
    report.groups.insert("G3".to_string(), inv.g3.to_string());
    report
        .details
        .insert("direct_sum_ok".to_string(), json!(inv.direct_sum_ok));
    report.verdict = Some(inv.direct_sum_ok);
    Ok(report)
}

pub fn compare_report(doc1: &InputDocument, doc2: &InputDocument) -> Result<Report, CommandError> {
    let a = doc1.clone().into_input()?.expect_valid_ck()?;
    let b = doc2.clone().into_input()?.expect_valid_ck()?;
    let mut report = Report::new("compare", json!([doc1.to_json(), doc2.to_json()]));
    let ia = ck_complete_invariant(&a);
    let ib = ck_complete_invariant(&b);
    report
        .groups
        .insert("first G1".to_string(), ia.g1.to_string());
    report
        .groups
        .insert("first G2".to_string(), ia.g2.to_string());
    report
        .groups
        .insert("second G1".to_string(), ib.g1.to_string());
    report
        .groups
        .insert("second G2".to_string(), ib.g2.to_string());
    let isomorphic = ck_isomorphic(&a, &b);
    report.details.insert(
        "conclusion".to_string(),
        json!(if isomorphic {
            "isomorphic"
        } else {
            "not isomorphic"
        }),
    );
    report.verdict = Some(isomorphic);
    Ok(report)
}
