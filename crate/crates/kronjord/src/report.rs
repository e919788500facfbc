//! Verification reports over representations and witnesses.

use kronjord_core::exactmat::Field;
use kronjord_core::kronecker::is_constant_jordan_type;
use kronjord_core::pipeline::check_witness;
use kronjord_core::verify::{
    eip_sample_check, ekp_sample_check, end_is_local, indecomposable_over_prime_field, is_brick, restriction_check,
    CertifiedWitness,
};
use kronjord_core::{Error, KroneckerRep, Result};
use serde_json::json;

use crate::json::{CheckJson, ReportJson};

pub const CHECK_NAMES: &[&str] = &["ekp", "eip", "cjt", "indec", "brick", "restriction"];

fn check(name: &str, verdict: bool, detail: serde_json::Value) -> CheckJson {
    CheckJson {
        name: name.to_string(),
        verdict,
        detail,
    }
}

/// Runs the named checks on `m`. Sampled checks use `samples` parameters
/// drawn from `seed`.
pub fn verify_rep(m: &KroneckerRep, checks: &[String], samples: usize, seed: u64) -> Result<ReportJson> {
    let mut out = Vec::new();
    for name in checks {
        out.push(match name.as_str() {
            "ekp" | "eip" => {
                let v = if name == "ekp" {
                    ekp_sample_check(m, samples, seed)?
                } else {
                    eip_sample_check(m, samples, seed)?
                };
                let counterexample = v.counterexample.map(|a| a.iter().map(|x| x.to_string()).collect::<Vec<_>>());
                check(name, v.holds, json!({"ranks_seen": v.record.ranks_seen, "counterexample": counterexample, "exact": false}))
            }
            "cjt" => {
                let v = is_constant_jordan_type(m, samples.max(2), seed)?;
                let jordan = v.jordan.map(|j| json!({"c": j.c, "d": j.d}));
                check(name, v.constant, json!({"jordan": jordan, "ranks_seen": v.record.ranks_seen}))
            }
            "indec" => match m.field() {
                Field::Rational => {
                    let v = end_is_local(m)?;
                    check(name, v.local, json!({"end_dim": v.end_dim, "radical_dim": v.radical_dim, "method": "trace-form"}))
                }
                Field::Prime(_) => {
                    let v = indecomposable_over_prime_field(m)?;
                    check(name, v, json!({"method": "idempotent-enumeration"}))
                }
            },
            "brick" => check(name, is_brick(m)?, serde_json::Value::Null),
            "restriction" => {
                let v = restriction_check(m, samples, seed)?;
                check(
                    name,
                    v.holds,
                    json!({"c": v.generic.c, "d": v.generic.d, "form_value": v.form_value.to_string(), "c_bound_applies": v.c_bound_applies}),
                )
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown check {other:?}; expected one of {}",
                    CHECK_NAMES.join(",")
                )))
            }
        });
    }
    Ok(ReportJson {
        checks: out,
        seed,
        samples,
    })
}

/// Re-validates a witness's recorded certificate, then runs `checks` on its
/// representation.
pub fn verify_witness(w: &CertifiedWitness, checks: &[String], samples: usize, seed: u64) -> Result<ReportJson> {
    let own = check_witness(w, seed)?;
    let mut report = verify_rep(&w.rep, checks, samples, seed)?;
    let recorded = own
        .checks
        .into_iter()
        .map(|c| check(&format!("witness-{}", c.name), c.passed, json!(c.detail)));
    report.checks.splice(0..0, recorded);
    Ok(report)
}
