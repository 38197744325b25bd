//! JSON/CSV encodings of every boundary type.
//!
//! Exact rationals always cross the boundary as strings "p/q" (or "p" when
//! the denominator is 1), never as floats.  Approximate values (complex root
//! estimates from the inverse problem) are namespaced under "approx".

use num::One;
use serde_json::{json, Map, Value};

use crate::cases::CaseSpec;
use crate::decompose::FactorMultiset;
use crate::error::{Error, Result};
use crate::expform::ExpForm;
use crate::gauss::GaussRational;
use crate::poly::RatPoly;
use crate::rational::{rational_from_str, rational_to_string, Rational};
use crate::realize::{RealizationCertificate, RealizeSummary, SearchTrace};
use crate::signature::{Mode, NecessaryReport, SignVector8};
use crate::sturm::IsolatingInterval;

// ---------------------------------------------------------------------------
// Rationals and polynomials
// ---------------------------------------------------------------------------

pub fn rational_value(x: &Rational) -> Value {
    Value::String(rational_to_string(x))
}

pub fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational_from_str(s),
        Value::Number(n) => {
            // Accept bare JSON integers for convenience; floats are rejected.
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(Error::Parse(format!(
                    "expected exact rational, got non-integer number {n}"
                )))
            }
        }
        other => Err(Error::Parse(format!(
            "expected rational string, got {other}"
        ))),
    }
}

/// {"coeffs": ["c0", "c1", ...]} — ascending powers.
pub fn poly_to_json(p: &RatPoly) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rational_value).collect::<Vec<_>>() })
}

pub fn poly_from_json(v: &Value) -> Result<RatPoly> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("polynomial JSON must have a \"coeffs\" array".into()))?;
    let coeffs = coeffs
        .iter()
        .map(rational_from_value)
        .collect::<Result<Vec<_>>>()?;
    Ok(RatPoly::new(coeffs))
}

/// {"n": n, "coeffs": [...]} — a polynomial together with its composition order.
pub fn tagged_poly_to_json(p: &RatPoly, n: usize) -> Value {
    json!({ "n": n, "coeffs": p.coeffs().iter().map(rational_value).collect::<Vec<_>>() })
}

/// {"exp_times": {"coeffs": [...]}} — the R in e^x·R.
pub fn expform_to_json(f: &ExpForm) -> Value {
    json!({ "exp_times": poly_to_json(&f.y) })
}

pub fn expform_from_json(v: &Value) -> Result<ExpForm> {
    let inner = v
        .get("exp_times")
        .ok_or_else(|| Error::Parse("exponential form JSON must have \"exp_times\"".into()))?;
    Ok(ExpForm::new(poly_from_json(inner)?))
}

// ---------------------------------------------------------------------------
// Factor multisets
// ---------------------------------------------------------------------------

fn interval_to_json(iv: &IsolatingInterval) -> Value {
    json!({
        "lo": rational_value(&iv.lo),
        "hi": rational_value(&iv.hi),
        "poly": poly_to_json(&iv.defining_poly),
    })
}

fn interval_from_json(v: &Value) -> Result<IsolatingInterval> {
    let field = |k: &str| {
        v.get(k)
            .ok_or_else(|| Error::Parse(format!("algebraic factor missing \"{k}\"")))
    };
    Ok(IsolatingInterval {
        lo: rational_from_value(field("lo")?)?,
        hi: rational_from_value(field("hi")?)?,
        defining_poly: poly_from_json(field("poly")?)?,
    })
}

pub fn factors_to_json(fm: &FactorMultiset) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "rational".into(),
        Value::Array(fm.rational_factors.iter().map(rational_value).collect()),
    );
    obj.insert(
        "complex_pairs".into(),
        Value::Array(
            fm.complex_pairs
                .iter()
                .map(|z| json!([rational_value(&z.re), rational_value(&z.im)]))
                .collect(),
        ),
    );
    obj.insert(
        "algebraic".into(),
        Value::Array(fm.algebraic_factors.iter().map(interval_to_json).collect()),
    );
    obj.insert("zeros".into(), json!(fm.zeros));
    obj.insert("infinity".into(), json!(fm.infinity_count));
    obj.insert("scalar".into(), rational_value(&fm.scalar));
    if !fm.approx_complex_pairs.is_empty() {
        obj.insert(
            "approx".into(),
            json!({
                "complex_pairs": fm
                    .approx_complex_pairs
                    .iter()
                    .map(|(re, im)| json!([re, im]))
                    .collect::<Vec<_>>(),
            }),
        );
    }
    Value::Object(obj)
}

pub fn factors_from_json(v: &Value) -> Result<FactorMultiset> {
    let arr = |k: &str| -> Result<&Vec<Value>> {
        v.get(k)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("factor multiset missing array \"{k}\"")))
    };
    let rational_factors = arr("rational")?
        .iter()
        .map(rational_from_value)
        .collect::<Result<Vec<_>>>()?;
    let complex_pairs = arr("complex_pairs")?
        .iter()
        .map(|pair| {
            let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                Error::Parse("complex pair must be a two-element array [re, im]".into())
            })?;
            Ok(GaussRational::new(
                rational_from_value(&pair[0])?,
                rational_from_value(&pair[1])?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let algebraic_factors = match v.get("algebraic") {
        Some(Value::Array(items)) => items
            .iter()
            .map(interval_from_json)
            .collect::<Result<Vec<_>>>()?,
        Some(_) => return Err(Error::Parse("\"algebraic\" must be an array".into())),
        None => Vec::new(),
    };
    let usize_field = |k: &str, default: usize| -> Result<usize> {
        match v.get(k) {
            None => Ok(default),
            Some(x) => x
                .as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| Error::Parse(format!("\"{k}\" must be a nonnegative integer"))),
        }
    };
    let scalar = match v.get("scalar") {
        None => Rational::one(),
        Some(x) => rational_from_value(x)?,
    };
    let mut fm = FactorMultiset {
        rational_factors,
        complex_pairs,
        approx_complex_pairs: Vec::new(),
        algebraic_factors,
        zeros: usize_field("zeros", 0)?,
        infinity_count: usize_field("infinity", 0)?,
        scalar,
    };
    fm.normalize();
    Ok(fm)
}

/// Parse the `--factors` CLI argument: a JSON array whose entries are either
/// rational strings (real factors, "0" allowed) or two-element arrays
/// [re, im] for one conjugate-pair representative.  "inf" marks a degree
/// deficit slot.
pub fn factors_from_cli(v: &Value) -> Result<FactorMultiset> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("factor list must be a JSON array".into()))?;
    let mut fm = FactorMultiset {
        rational_factors: Vec::new(),
        complex_pairs: Vec::new(),
        approx_complex_pairs: Vec::new(),
        algebraic_factors: Vec::new(),
        zeros: 0,
        infinity_count: 0,
        scalar: Rational::one(),
    };
    for item in items {
        match item {
            Value::String(s) if s == "inf" => fm.infinity_count += 1,
            Value::String(_) | Value::Number(_) => {
                let x = rational_from_value(item)?;
                if x == Rational::from_integer(0.into()) {
                    fm.zeros += 1;
                } else {
                    fm.rational_factors.push(x);
                }
            }
            Value::Array(pair) if pair.len() == 2 => {
                fm.complex_pairs.push(GaussRational::new(
                    rational_from_value(&pair[0])?,
                    rational_from_value(&pair[1])?,
                ));
            }
            other => {
                return Err(Error::Parse(format!(
                    "factor entry must be a rational string, \"inf\", or [re, im]: got {other}"
                )))
            }
        }
    }
    fm.normalize();
    Ok(fm)
}

// ---------------------------------------------------------------------------
// Signatures, case specs, reports
// ---------------------------------------------------------------------------

pub fn signature_to_json(sig: &SignVector8) -> Value {
    let [rp, rz, rn, rc, ap, az, an, ac] = sig.as_tuple();
    json!({
        "roots": { "pos": rp, "zero": rz, "neg": rn, "complex_pairs": rc },
        "neg_a": { "pos": ap, "zero": az, "neg": an, "complex_pairs": ac },
    })
}

pub fn spec_to_json(spec: &CaseSpec) -> Value {
    json!({
        "case": spec.case_id,
        "n": spec.n,
        "q": spec.q,
        "q1": spec.q1,
        "q_c": spec.q_c,
        "k": spec.k,
        "k1": spec.k1,
        "k_c": spec.k_c,
        "m": spec.m,
        "r": spec.r,
        "s": spec.s,
        "delta": spec.delta,
        "construction_unsupported": spec.construction_unsupported,
    })
}

pub fn spec_from_json(v: &Value) -> Result<CaseSpec> {
    let field = |k: &str| -> Result<usize> {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|u| u as usize)
            .ok_or_else(|| Error::Parse(format!("case spec missing integer field \"{k}\"")))
    };
    let spec = CaseSpec {
        case_id: field("case")? as u8,
        n: field("n")?,
        q: field("q")?,
        q1: field("q1")?,
        q_c: field("q_c")?,
        k: field("k")?,
        k1: field("k1")?,
        k_c: field("k_c")?,
        m: field("m")?,
        r: field("r")?,
        s: field("s")?,
        delta: field("delta")?,
        construction_unsupported: v
            .get("construction_unsupported")
            .and_then(Value::as_bool)
            .unwrap_or(false),
    };
    if !spec.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "case spec fails structural invariants: {spec:?}"
        )));
    }
    Ok(spec)
}

pub fn report_to_json(report: &NecessaryReport) -> Value {
    json!({
        "passed": report.passed(),
        "clauses": report
            .clauses
            .iter()
            .map(|c| json!({ "clause": c.clause, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    })
}

pub fn mode_str(mode: Mode) -> &'static str {
    match mode {
        Mode::Polynomial => "polynomial",
        Mode::Exponential => "exponential",
    }
}

pub fn mode_from_str(s: &str) -> Result<Mode> {
    match s {
        "polynomial" | "pol" => Ok(Mode::Polynomial),
        "exponential" | "exp" => Ok(Mode::Exponential),
        other => Err(Error::Parse(format!(
            "mode must be \"polynomial\" or \"exponential\", got \"{other}\""
        ))),
    }
}

// ---------------------------------------------------------------------------
// Certificates and summaries
// ---------------------------------------------------------------------------

fn trace_to_json(trace: &SearchTrace) -> Value {
    json!({
        "rounds": trace.rounds,
        "candidates": trace.candidates,
        "newton_iterations": trace.newton_iterations,
        "final_magnitude": rational_value(&trace.final_magnitude),
    })
}

pub fn certificate_to_json(cert: &RealizationCertificate) -> Value {
    let object_key = match cert.mode {
        Mode::Polynomial => "polynomial",
        Mode::Exponential => "exp_times",
    };
    json!({
        "spec": spec_to_json(&cert.spec),
        "mode": mode_str(cert.mode),
        object_key: poly_to_json(&cert.object),
        "factors": factors_to_json(&cert.factors),
        "signature": signature_to_json(&cert.signature),
        "trace": trace_to_json(&cert.trace),
    })
}

/// Stable column order for the case table CSV.
pub const SPEC_CSV_HEADER: &str =
    "case,n,q,q1,q_c,k,k1,k_c,m,r,s,delta,construction_unsupported";

pub fn spec_csv_row(spec: &CaseSpec) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        spec.case_id,
        spec.n,
        spec.q,
        spec.q1,
        spec.q_c,
        spec.k,
        spec.k1,
        spec.k_c,
        spec.m,
        spec.r,
        spec.s,
        spec.delta,
        spec.construction_unsupported,
    )
}

pub fn specs_to_csv(specs: &[CaseSpec]) -> String {
    let mut out = String::from(SPEC_CSV_HEADER);
    out.push('\n');
    for spec in specs {
        out.push_str(&spec_csv_row(spec));
        out.push('\n');
    }
    out
}

/// Stable column order for the realization summary CSV.
pub const SUMMARY_CSV_HEADER: &str =
    "case,n,q,q1,q_c,k,k1,k_c,m,r,s,delta,construction_unsupported,status,rounds,candidates,newton_iterations";

pub fn summary_to_csv(summary: &RealizeSummary) -> String {
    let mut rows: Vec<(CaseSpec, String, String)> = Vec::new();
    for cert in &summary.certificates {
        rows.push((
            cert.spec.clone(),
            "realized".into(),
            format!(
                "{},{},{}",
                cert.trace.rounds, cert.trace.candidates, cert.trace.newton_iterations
            ),
        ));
    }
    for spec in &summary.unsupported {
        rows.push((spec.clone(), "unsupported".into(), "0,0,0".into()));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::from(SUMMARY_CSV_HEADER);
    out.push('\n');
    for (spec, status, counts) in rows {
        out.push_str(&format!("{},{},{}\n", spec_csv_row(&spec), status, counts));
    }
    out
}
