//! JSON encoding of results and certificates, and decoding for `check`.
//!
//! Rationals are strings (`"2/3"`), so documents round-trip exactly. Object
//! keys come out sorted, which keeps output byte-identical between runs.

use logfano_core::constraints::StrictInequality;
use logfano_core::feasibility::{FeasibilityCertificate, HomogeneousSystem, OriginReport};
use logfano_core::forms::{AngleLayout, LinearForm, QuadraticForm};
use logfano_core::lattice::{DivisorClass, SurfaceModel};
use logfano_core::rational::{format_rational, int, parse_rational, Rational};
use logfano_core::tailblowup::{LpMatrix, TailReport};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "aa-schema/1";

pub fn rat(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

/// `2Z + 4F - E1` in the surface's basis names.
pub fn class_text(surface: &SurfaceModel, class: &DivisorClass) -> String {
    let names = surface.basis_names();
    let form = LinearForm::from_parts(int(0), class.coords().iter().cloned().enumerate());
    form.render(|i| names[i].clone())
}

pub fn angle_names(layout: &AngleLayout) -> impl Fn(usize) -> String + '_ {
    move |i| layout.name(i)
}

pub fn system_json(sys: &HomogeneousSystem) -> Value {
    let cols: Vec<Value> = sys.columns().iter().map(|c| rats(c)).collect();
    json!({ "dim": sys.row_count(), "columns": cols })
}

pub fn certificate_json(cert: &FeasibilityCertificate) -> Value {
    match cert {
        FeasibilityCertificate::Feasible { point } => json!({ "feasible": true, "point": rats(point) }),
        FeasibilityCertificate::Infeasible { dual } => json!({ "feasible": false, "dual": rats(dual) }),
    }
}

/// The unit `check` re-verifies: a system and a certificate about it.
pub fn gordan_json(sys: &HomogeneousSystem, cert: &FeasibilityCertificate) -> Value {
    json!({ "system": system_json(sys), "certificate": certificate_json(cert) })
}

pub fn inequality_json(row: &StrictInequality, layout: &AngleLayout) -> Value {
    json!({
        "form": row.form.render(angle_names(layout)),
        "constant": rat(row.form.constant_term()),
        "coefficients": rats(&row.form.dense_coefficients(layout.len())),
        "provenance": row.provenance.describe(),
    })
}

pub fn quadratic_json(q: &QuadraticForm, layout: &AngleLayout) -> Value {
    json!({ "form": q.render(angle_names(layout)), "constant": rat(q.constant_term()) })
}

pub fn origin_json(report: &OriginReport, layout: &AngleLayout) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(report.verdict.as_str()));
    m.insert("contains".into(), json!(report.contains()));
    m.insert("note".into(), json!(report.note));
    m.insert("dropped_rows".into(), json!(report.dropped));
    m.insert(
        "kept_rows".into(),
        Value::Array(report.kept.iter().map(|r| inequality_json(r, layout)).collect()),
    );
    if let (Some(sys), Some(cert)) = (&report.system, &report.certificate) {
        m.insert("gordan".into(), gordan_json(sys, cert));
    }
    if let Some(row) = &report.blocking_row {
        m.insert("blocking_row".into(), inequality_json(row, layout));
    }
    if let Some(q) = report.quadratic {
        m.insert("quadratic".into(), json!(q.as_str()));
    }
    if let Some(r) = &report.ray {
        m.insert("ray".into(), rats(r));
    }
    if let Some(w) = &report.witness {
        m.insert("witness".into(), rats(w));
    }
    Value::Object(m)
}

pub fn matrix_json(m: &LpMatrix) -> Value {
    json!({
        "r": m.r,
        "h": m.h,
        "v": m.v,
        "c1_sq": m.c1_sq,
        "cr_sq": m.cr_sq,
        "coupled": m.coupled,
        "rows": m.rows(),
        "row_names": m.layout().names(),
    })
}

pub fn tail_json(report: &TailReport) -> Value {
    let mut m = Map::new();
    m.insert("h".into(), json!(report.right));
    m.insert("v".into(), json!(report.left));
    m.insert("budget".into(), rat(&report.budget));
    m.insert("remaining_budget".into(), report.remaining_budget.as_ref().map_or(Value::Null, rat));
    m.insert("verdict".into(), json!(report.verdict.as_str()));
    m.insert("quadratic".into(), report.quadratic.map_or(Value::Null, |q| json!(q.as_str())));
    m.insert("curve_list".into(), json!(report.curve_list));
    m.insert("note".into(), json!(report.note));
    if let Some(pair) = &report.pair {
        let layout = pair.layout();
        if let Some(o) = &report.origin {
            m.insert("origin".into(), origin_json(o, &layout));
        }
        if let Some(t) = &report.tilde {
            m.insert("tilde_origin".into(), origin_json(t, &layout));
        }
    }
    if let Some(matrix) = &report.matrix {
        let sys = matrix.to_system();
        let cert = logfano_core::feasibility::gordan_feasible(&sys);
        let mut mj = matrix_json(matrix);
        mj["gordan"] = gordan_json(&sys, &cert);
        m.insert("matrix".into(), mj);
    }
    Value::Object(m)
}

#[derive(Debug, thiserror::Error)]
#[error("malformed certificate: {0}")]
pub struct DecodeError(pub String);

fn decode_rats(v: &Value) -> Result<Vec<Rational>, DecodeError> {
    v.as_array()
        .ok_or_else(|| DecodeError("expected an array".into()))?
        .iter()
        .map(|x| match x {
            Value::String(s) => parse_rational(s).map_err(|e| DecodeError(e.to_string())),
            Value::Number(n) => parse_rational(&n.to_string()).map_err(|e| DecodeError(e.to_string())),
            _ => Err(DecodeError("expected a rational".into())),
        })
        .collect()
}

pub fn decode_gordan(v: &Value) -> Result<(HomogeneousSystem, FeasibilityCertificate), DecodeError> {
    let sys = &v["system"];
    let dim = sys["dim"].as_u64().ok_or_else(|| DecodeError("missing dim".into()))? as usize;
    let cols = sys["columns"]
        .as_array()
        .ok_or_else(|| DecodeError("missing columns".into()))?
        .iter()
        .map(decode_rats)
        .collect::<Result<Vec<_>, _>>()?;
    if cols.iter().any(|c| c.len() != dim) {
        return Err(DecodeError("column length differs from dim".into()));
    }
    let hs = HomogeneousSystem::from_columns(dim, &cols);
    let cert = &v["certificate"];
    let cert = match cert["feasible"].as_bool() {
        Some(true) => FeasibilityCertificate::Feasible { point: decode_rats(&cert["point"])? },
        Some(false) => FeasibilityCertificate::Infeasible { dual: decode_rats(&cert["dual"])? },
        None => return Err(DecodeError("missing feasible flag".into())),
    };
    Ok((hs, cert))
}

/// Every `{system, certificate}` object in the document, with its JSON path.
pub fn find_certificates(doc: &Value) -> Vec<(String, &Value)> {
    fn walk<'a>(v: &'a Value, path: String, out: &mut Vec<(String, &'a Value)>) {
        match v {
            Value::Object(m) => {
                if m.contains_key("system") && m.contains_key("certificate") {
                    out.push((path.clone(), v));
                }
                for (k, x) in m {
                    walk(x, format!("{path}/{k}"), out);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, format!("{path}/{i}"), out);
                }
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(doc, String::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use logfano_core::feasibility::gordan_feasible;
    use logfano_core::rational::ratio;

    #[test]
    fn certificates_round_trip() {
        let cols = vec![vec![int(1), ratio(-1, 2)], vec![int(0), int(1)]];
        let sys = HomogeneousSystem::from_columns(2, &cols);
        let cert = gordan_feasible(&sys);
        let doc = json!({ "outer": [gordan_json(&sys, &cert)] });
        let text = serde_json::to_string(&doc).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let found = find_certificates(&back);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, "/outer/0");
        let (s, c) = decode_gordan(found[0].1).unwrap();
        assert_eq!(s, sys);
        assert!(c.verify(&s));
    }

    #[test]
    fn malformed_documents() {
        assert!(decode_gordan(&json!({ "system": { "dim": 1, "columns": [["x"]] }, "certificate": {} })).is_err());
        assert!(decode_gordan(&json!({ "system": { "dim": 2, "columns": [["1"]] }, "certificate": {} })).is_err());
    }
}
