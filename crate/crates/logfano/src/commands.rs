//! The subcommands. Each returns a [`Document`]; the caller picks the
//! rendering and the exit code.

use std::fmt::Write as _;

use logfano_core::constraints::{nm_system, ConstraintSystem, LabeledCurve, SystemOptions};
use logfano_core::feasibility::{ample_angle_body, origin_in_closure, BodyOptions};
use logfano_core::lattice::SurfaceModel;
use logfano_core::logpair::{tail_sequence, BoundaryShape, LogPair};
use logfano_core::rational::format_rational;
use logfano_core::tailblowup::{
    budget, classify_tail, verify_tail_lp, TailOptions, TailReport, TailSequenceSpec,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::checks::run_checks;
use crate::config::JobConfig;
use crate::input::{self, InputError};
use crate::report::{self, class_text, rat, rats, SCHEMA};

/// Exit status contract: computed, verification failure, bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Computed = 0,
    VerificationFailed = 1,
    BadInput = 2,
}

#[derive(Debug, Clone)]
pub struct Document {
    pub command: &'static str,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub status: Status,
}

impl Document {
    fn new(command: &'static str, config: &JobConfig, body: Value, text: String, csv: Option<String>) -> Self {
        let mut json = json!({
            "schema": SCHEMA,
            "command": command,
            "input": serde_json::to_value(config).expect("config serializes"),
        });
        if let (Value::Object(doc), Value::Object(b)) = (&mut json, body) {
            doc.extend(b);
        }
        Self { command, json, text, csv, status: Status::Computed }
    }
}

fn surface_of(config: &JobConfig) -> Result<SurfaceModel, InputError> {
    let base = config.base.as_deref().ok_or_else(|| InputError::Invalid("--base is required".into()))?;
    let mut s = input::build_surface(base, &config.blowups)?;
    for item in &config.add {
        let (label, expr) = item
            .split_once('=')
            .ok_or_else(|| InputError::Invalid(format!("--add expects LABEL=CLASS, got {item:?}")))?;
        let class = input::parse_class(&s, expr)?;
        s.add_curve(label.trim(), class).map_err(|e| InputError::Invalid(e.to_string()))?;
    }
    Ok(s)
}

fn pair_of(config: &JobConfig, surface: SurfaceModel) -> Result<LogPair, InputError> {
    let chain = config.chain.as_deref().ok_or_else(|| InputError::Invalid("--chain is required".into()))?;
    let labels = input::parse_chain(chain);
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    LogPair::from_labels(surface, &labels).map_err(|e| InputError::Invalid(e.to_string()))
}

fn box_of(config: &JobConfig) -> Result<logfano_core::constraints::BoxBound, InputError> {
    config.box_bound.as_deref().map_or(Ok(logfano_core::constraints::BoxBound::Unit), input::parse_box)
}

fn curves_of(config: &JobConfig, surface: &SurfaceModel) -> Result<Vec<LabeledCurve>, InputError> {
    let Some(path) = &config.curves else {
        return Ok(Vec::new());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    input::parse_curves(surface, &text)
}

pub fn describe(config: &JobConfig) -> Result<Document, InputError> {
    let s = surface_of(config)?;
    let names = s.basis_names();
    let matrix = s.intersection_matrix();
    let k = s.canonical_class();
    let mut text = String::new();
    let _ = writeln!(text, "surface {} (rank {})", s.tag(), s.rank());
    let _ = writeln!(text, "basis {}", names.join(", "));
    for (name, row) in names.iter().zip(&matrix) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        let _ = writeln!(text, "  {name:>4} |{}", cells.join(""));
    }
    let _ = writeln!(text, "K = {}", class_text(&s, &k));
    let _ = writeln!(text, "-K = {}", class_text(&s, &-&k));
    let curves: Vec<Value> = s
        .curves()
        .iter()
        .map(|c| {
            let sq = s.self_intersection(&c.class).expect("tracked on s");
            let _ = writeln!(text, "curve {}: {} (square {})", c.label, class_text(&s, &c.class), format_rational(&sq));
            json!({ "label": c.label, "class": class_text(&s, &c.class), "coords": rats(c.class.coords()), "square": rat(&sq) })
        })
        .collect();
    let mut body = json!({
        "rank": s.rank(),
        "basis": names,
        "intersection_matrix": matrix,
        "canonical_class": class_text(&s, &k),
        "anticanonical_class": class_text(&s, &-&k),
        "curves": curves,
    });
    if config.chain.is_some() {
        let pair = pair_of(config, s.clone())?;
        let shape = pair.shape();
        let b = budget(&pair);
        let ledger = pair.adjunction_ledger();
        let note = match shape {
            BoundaryShape::Cycle => "no tails",
            _ if pair.is_chain() => "tail blow-ups possible at both ends",
            _ => "not a chain: no tail sequences",
        };
        let _ = writeln!(text, "boundary {} is a {}", config.chain.as_deref().unwrap_or(""), shape.as_str());
        let _ = writeln!(text, "(K_S + C)^2 = {}", format_rational(&b));
        let ledger_text: Vec<String> = ledger.iter().map(format_rational).collect();
        let _ = writeln!(text, "c_i . (K_S + C) = [{}]", ledger_text.join(", "));
        let _ = writeln!(text, "note: {note}");
        body["boundary"] = json!({
            "components": input::parse_chain(config.chain.as_deref().unwrap_or("")),
            "classification": shape.as_str(),
            "budget": rat(&b),
            "adjunction_ledger": rats(&ledger),
            "note": note,
        });
    }
    let mut csv = String::from("row");
    for n in &names {
        let _ = write!(csv, ",{n}");
    }
    csv.push('\n');
    for (name, row) in names.iter().zip(&matrix) {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        let _ = writeln!(csv, "{name},{}", cells.join(","));
    }
    Ok(Document::new("describe", config, body, text, Some(csv)))
}

fn aa_system(config: &JobConfig, pair: &LogPair) -> Result<ConstraintSystem, InputError> {
    let bound = box_of(config)?;
    if config.bare {
        return Ok(ConstraintSystem::new(pair.layout()).with_box(bound));
    }
    let bundle = config.bundle.as_deref().map(|b| input::parse_class(pair.surface(), b)).transpose()?;
    let options = SystemOptions {
        bundle,
        include_catalog: !config.no_catalog,
        include_quadratic: !config.no_quadratic,
        extra_curves: curves_of(config, pair.surface())?,
        box_bound: bound,
    };
    nm_system(pair, &options).map_err(|e| InputError::Invalid(e.to_string()))
}

pub fn aa(config: &JobConfig) -> Result<Document, InputError> {
    let pair = pair_of(config, surface_of(config)?)?;
    let sys = aa_system(config, &pair)?;
    let layout = pair.layout();
    let names = layout.names();
    let body = ample_angle_body(&sys, &BodyOptions::default());
    let origin = origin_in_closure(&sys);
    let mut text = String::new();
    let _ = writeln!(text, "angles {}", names.join(", "));
    for row in &body.constraints {
        let _ = writeln!(text, "  {} > 0   [{}]", row.form.render(|i| layout.name(i)), row.provenance.describe());
    }
    if let Some(q) = &body.quadratic {
        let _ = writeln!(text, "  {} > 0   [square]", q.render(|i| layout.name(i)));
    }
    let interval = body.closure_endpoints().filter(|_| body.nonempty).and_then(|e| {
        (e.len() == 2).then(|| format!("interval ({}, {})", format_rational(&e[0]), format_rational(&e[1])))
    });
    if !body.nonempty {
        let _ = writeln!(text, "body is empty");
    } else if let Some(i) = &interval {
        let _ = writeln!(text, "body {i}");
    } else if let Some(vs) = &body.vertices {
        let _ = writeln!(text, "closure has {} vertices and {} rays", vs.len(), body.rays.len());
    } else {
        let _ = writeln!(text, "{} sample points", body.samples.len());
    }
    let _ = writeln!(text, "origin in closure: {} ({})", origin.contains(), origin.note);
    if !sys.curve_list.is_empty() {
        let _ = writeln!(text, "curves: {}", sys.curve_list.join(", "));
    }

    let point_json = |p: &logfano_core::feasibility::AnnotatedPoint| {
        json!({ "point": rats(&p.point), "quadratic_sign": p.quadratic_sign })
    };
    let mut csv = format!("kind,{},quadratic_sign\n", names.join(","));
    let mut push_rows = |kind: &str, pts: Vec<(Vec<String>, String)>| {
        for (coords, sign) in pts {
            let _ = writeln!(csv, "{kind},{},{sign}", coords.join(","));
        }
    };
    let fmt_point = |p: &logfano_core::feasibility::AnnotatedPoint| {
        (
            p.point.iter().map(format_rational).collect::<Vec<_>>(),
            p.quadratic_sign.map_or_else(String::new, |s| s.to_string()),
        )
    };
    if let Some(vs) = &body.vertices {
        push_rows("vertex", vs.iter().map(fmt_point).collect());
    }
    push_rows(
        "ray",
        body.rays.iter().map(|r| (r.iter().map(format_rational).collect(), String::new())).collect(),
    );
    push_rows("sample", body.samples.iter().map(fmt_point).collect());

    let out = json!({
        "angles": names,
        "curve_list": sys.curve_list,
        "box": config.box_bound.clone().unwrap_or_else(|| "1".into()),
        "hrep": body.constraints.iter().map(|r| report::inequality_json(r, &layout)).collect::<Vec<_>>(),
        "quadratic": body.quadratic.as_ref().map(|q| report::quadratic_json(q, &layout)),
        "nonempty": body.nonempty,
        "open_body": report::gordan_json(&body.homogenized, &body.open_certificate),
        "vertices": body.vertices.as_ref().map(|vs| vs.iter().map(point_json).collect::<Vec<_>>()),
        "rays": body.rays.iter().map(|r| rats(r)).collect::<Vec<_>>(),
        "samples": body.samples.iter().map(point_json).collect::<Vec<_>>(),
        "interval": interval,
        "origin": report::origin_json(&origin, &layout),
    });
    Ok(Document::new("aa", config, out, text, Some(csv)))
}

fn tail_spec(config: &JobConfig) -> Result<TailSequenceSpec, InputError> {
    let pair = pair_of(config, surface_of(config)?)?;
    Ok(TailSequenceSpec::new(pair, config.h.unwrap_or(0), config.v.unwrap_or(0)))
}

fn tail_options(config: &JobConfig) -> Result<TailOptions, InputError> {
    Ok(TailOptions { curves_complete: config.curves_complete, box_bound: box_of(config)? })
}

fn tail_text(r: &TailReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "tail sequence h = {}, v = {}", r.right, r.left);
    let _ = writeln!(t, "verdict {}", r.verdict.as_str());
    let _ = writeln!(t, "budget (K_s + c)^2 = {}", format_rational(&r.budget));
    if let Some(rb) = &r.remaining_budget {
        let _ = writeln!(t, "after the sequence (K_S + C)^2 = {}", format_rational(rb));
    }
    if let Some(q) = r.quadratic {
        let _ = writeln!(t, "square near the origin: {}", q.as_str());
    }
    if let Some(o) = &r.tilde {
        let _ = writeln!(t, "boundary-only system: origin {}", o.verdict.as_str());
    }
    if !r.curve_list.is_empty() {
        let _ = writeln!(t, "curves: {}", r.curve_list.join(", "));
    }
    if !r.note.is_empty() {
        let _ = writeln!(t, "note: {}", r.note);
    }
    t
}

pub fn tail(config: &JobConfig) -> Result<Document, InputError> {
    let spec = tail_spec(config)?;
    let extra = match &config.curves {
        None => Vec::new(),
        Some(_) => {
            let pair = tail_sequence(&spec.base, spec.right, spec.left).map_err(|e| InputError::Invalid(e.to_string()))?;
            curves_of(config, pair.surface())?
        }
    };
    let report = classify_tail(&spec, &extra, &tail_options(config)?).map_err(|e| InputError::Invalid(e.to_string()))?;
    let csv = format!("{}\n{}\n", SWEEP_HEADER, sweep_row(&cell_of(None, &spec, &report)));
    let text = tail_text(&report);
    let body = json!({ "tail": report::tail_json(&report) });
    Ok(Document::new("tail", config, body, text, Some(csv)))
}

const SWEEP_HEADER: &str = "n,r,h,v,x,budget,remaining_budget,verdict,quadratic,tail_lp,tilde_origin";

#[derive(Debug, Clone)]
struct Cell {
    n: Option<u32>,
    r: usize,
    h: usize,
    v: usize,
    budget: String,
    remaining: String,
    verdict: &'static str,
    quadratic: &'static str,
    tail_lp: &'static str,
    tilde: &'static str,
}

fn cell_of(n: Option<u32>, spec: &TailSequenceSpec, report: &TailReport) -> Cell {
    let r = spec.base_len();
    let remaining = report.remaining_budget.clone().or_else(|| {
        spec.base
            .is_chain()
            .then(|| tail_sequence(&spec.base, spec.right, spec.left).ok())
            .flatten()
            .map(|p| budget(&p))
    });
    let tail_lp = if spec.total() == 0 || !spec.base.is_chain() {
        "n/a"
    } else {
        let (c1, cr) = spec.end_squares();
        match verify_tail_lp(r, spec.right, spec.left, c1, cr) {
            Ok(c) if c.verified => "feasible",
            Ok(_) => "infeasible",
            Err(_) => "n/a",
        }
    };
    Cell {
        n,
        r,
        h: spec.right,
        v: spec.left,
        budget: format_rational(&report.budget),
        remaining: remaining.as_ref().map_or_else(String::new, format_rational),
        verdict: report.verdict.as_str(),
        quadratic: report.quadratic.map_or("", |q| q.as_str()),
        tail_lp,
        tilde: report.tilde.as_ref().map_or("", |o| o.verdict.as_str()),
    }
}

fn sweep_row(c: &Cell) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        c.n.map_or_else(String::new, |n| n.to_string()),
        c.r,
        c.h,
        c.v,
        c.h + c.v,
        c.budget,
        c.remaining,
        c.verdict,
        c.quadratic,
        c.tail_lp,
        c.tilde
    )
}

fn cell_json(c: &Cell) -> Value {
    json!({
        "n": c.n, "r": c.r, "h": c.h, "v": c.v, "x": c.h + c.v,
        "budget": c.budget, "remaining_budget": c.remaining, "verdict": c.verdict,
        "quadratic": c.quadratic, "tail_lp": c.tail_lp, "tilde_origin": c.tilde,
    })
}

pub fn sweep(config: &JobConfig) -> Result<Document, InputError> {
    let (lo, hi) = input::parse_range(config.n_range.as_deref().unwrap_or("0..3"))?;
    let max_tails = config.max_tails.unwrap_or(6);
    let chain = config.chain.clone().unwrap_or_else(|| "Z+F".into());
    let options = tail_options(config)?;
    let mut jobs = Vec::new();
    for n in lo..=hi {
        let cfg = JobConfig { base: Some(format!("F{n}")), chain: Some(chain.clone()), ..config.clone() };
        let base = pair_of(&cfg, surface_of(&cfg)?)?;
        for t in 0..=max_tails {
            for v in 0..=t {
                jobs.push((n, TailSequenceSpec::new(base.clone(), t - v, v)));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
        .map_err(|e| InputError::Invalid(e.to_string()))?;
    let cells: Vec<Result<Cell, String>> = pool.install(|| {
        jobs.par_iter()
            .map(|(n, spec)| {
                classify_tail(spec, &[], &options)
                    .map(|r| cell_of(Some(*n), spec, &r))
                    .map_err(|e| format!("n = {n}, (h, v) = ({}, {}): {e}", spec.right, spec.left))
            })
            .collect()
    });
    let cells: Vec<Cell> = cells.into_iter().collect::<Result<_, _>>().map_err(InputError::Invalid)?;
    let mut csv = format!("{SWEEP_HEADER}\n");
    for c in &cells {
        let _ = writeln!(csv, "{}", sweep_row(c));
    }
    let lp_cells = cells.iter().filter(|c| c.tail_lp != "n/a").count();
    let lp_feasible = cells.iter().filter(|c| c.tail_lp == "feasible").count();
    let alf = cells.iter().filter(|c| c.verdict.starts_with("ALF")).count();
    let mut text = String::new();
    let _ = writeln!(text, "{} cells, n in {lo}..{hi}, h + v <= {max_tails}, chain {chain}", cells.len());
    let _ = writeln!(text, "tail LP feasible on {lp_feasible} of {lp_cells} cells with blow-ups");
    let _ = writeln!(text, "{alf} cells ALF modulo curves");
    let body = json!({
        "cells": cells.iter().map(cell_json).collect::<Vec<_>>(),
        "summary": { "cells": cells.len(), "tail_lp_cells": lp_cells, "tail_lp_feasible": lp_feasible, "alf": alf },
    });
    Ok(Document::new("sweep", config, body, text, Some(csv)))
}

pub fn verify(config: &JobConfig) -> Result<Document, InputError> {
    let results = run_checks(&config.only)
        .map_err(|unknown| InputError::Invalid(format!("unknown check(s): {}", unknown.join(", "))))?;
    let mut text = String::new();
    let mut csv = String::from("number,id,passed,seconds,detail\n");
    for r in &results {
        let _ = writeln!(text, "{}", r.line());
        let _ = writeln!(
            csv,
            "{},{},{},{:.3},\"{}\"",
            r.number.map_or_else(String::new, |n| n.to_string()),
            r.id,
            r.passed,
            r.elapsed.as_secs_f64(),
            r.detail.replace('"', "'")
        );
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let _ = writeln!(text, "{} of {} checks passed", results.len() - failed.len(), results.len());
    let body = json!({
        "checks": results.iter().map(|r| json!({
            "number": r.number, "id": r.id, "statement": r.statement, "passed": r.passed,
            "detail": r.detail, "seconds": r.elapsed.as_secs_f64(),
        })).collect::<Vec<_>>(),
        "failed": failed,
    });
    let mut doc = Document::new("verify", config, body, text, Some(csv));
    if !failed.is_empty() {
        doc.status = Status::VerificationFailed;
    }
    Ok(doc)
}

/// Re-verifies every certificate in a document produced by this tool.
pub fn check(doc_text: &str) -> Result<Document, InputError> {
    let doc: Value =
        serde_json::from_str(doc_text).map_err(|e| InputError::Invalid(format!("not a JSON document: {e}")))?;
    if doc["schema"] != SCHEMA {
        return Err(InputError::Invalid(format!("expected schema {SCHEMA}")));
    }
    let found = report::find_certificates(&doc);
    if found.is_empty() {
        return Err(InputError::Invalid("no certificates in the document".into()));
    }
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut bad = 0;
    for (path, v) in found {
        let (sys, cert) = report::decode_gordan(v).map_err(|e| InputError::Invalid(format!("{path}: {e}")))?;
        let ok = cert.verify(&sys);
        bad += usize::from(!ok);
        let kind = if cert.is_feasible() { "positive point" } else { "dual vector" };
        let _ = writeln!(text, "{} {path}: {kind}", if ok { "ok  " } else { "FAIL" });
        entries.push(json!({ "path": path, "verified": ok, "feasible": cert.is_feasible() }));
    }
    let _ = writeln!(text, "{} of {} certificates verify", entries.len() - bad, entries.len());
    let body = json!({ "certificates": entries, "source_command": doc["command"].clone() });
    let mut out = Document::new("check", &JobConfig::default(), body, text, None);
    if bad > 0 {
        out.status = Status::VerificationFailed;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(base: &str, chain: &str) -> JobConfig {
        JobConfig { base: Some(base.into()), chain: Some(chain.into()), ..JobConfig::default() }
    }

    #[test]
    fn describe_budget_and_anticanonical() {
        let d = describe(&cfg("F2", "Z+F")).unwrap();
        assert_eq!(d.json["boundary"]["budget"], "4");
        assert_eq!(d.json["anticanonical_class"], "2*Z + 4*F");
        assert_eq!(d.json["schema"], SCHEMA);
    }

    #[test]
    fn describe_cycle() {
        let mut c = cfg("F1", "Z+F+S+G");
        c.add = vec!["S=Z+F".into(), "G=F".into()];
        let d = describe(&c).unwrap();
        assert_eq!(d.json["boundary"]["classification"], "cycle");
        assert_eq!(d.json["boundary"]["note"], "no tails");
    }

    #[test]
    fn aa_intervals() {
        assert_eq!(aa(&cfg("F3", "Z")).unwrap().json["interval"], "interval (0, 2/3)");
        let mut p = cfg("P2", "E1");
        p.blowups = vec!["H".into()];
        p.bundle = Some("H".into());
        assert_eq!(aa(&p).unwrap().json["interval"], "interval (0, 1)");
        let mut bare = cfg("F3", "Z");
        bare.bare = true;
        let d = aa(&bare).unwrap();
        assert_eq!(d.json["interval"], "interval (0, 1)");
        assert_eq!(d.json["hrep"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn tail_verdicts() {
        let mut c = cfg("F1", "Z+F");
        c.h = Some(1);
        assert_eq!(tail(&c).unwrap().json["tail"]["verdict"], "ALF_ModuloCurves");
        c.h = Some(4);
        assert_eq!(tail(&c).unwrap().json["tail"]["verdict"], "NotALF_Budget");
        c.h = Some(0);
        let base = tail(&c).unwrap();
        assert_eq!(base.json["tail"]["h"], 0);
        assert!(base.json["tail"]["matrix"].is_null());
    }

    #[test]
    fn sweep_rows_and_empty_range() {
        let c = JobConfig { n_range: Some("0..1".into()), max_tails: Some(3), jobs: Some(2), ..JobConfig::default() };
        let d = sweep(&c).unwrap();
        let csv = d.csv.unwrap();
        assert_eq!(csv.lines().count(), 1 + 2 * 10);
        assert!(csv.lines().skip(1).all(|l| !l.contains(",infeasible,")));
        let empty = JobConfig { n_range: Some("3..2".into()), ..JobConfig::default() };
        assert_eq!(sweep(&empty).unwrap().csv.unwrap(), format!("{SWEEP_HEADER}\n"));
    }

    #[test]
    fn check_accepts_own_output_and_rejects_tampering() {
        let d = aa(&cfg("F2", "Z+F")).unwrap();
        let text = serde_json::to_string(&d.json).unwrap();
        assert_eq!(check(&text).unwrap().status, Status::Computed);
        let mut doc = d.json.clone();
        doc["open_body"]["certificate"]["point"][0] = json!("-7");
        let tampered = check(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(tampered.status, Status::VerificationFailed);
        assert!(check("{}").is_err());
    }

    #[test]
    fn bad_inputs() {
        assert!(describe(&JobConfig::default()).is_err());
        assert!(aa(&cfg("F2", "Q")).is_err());
        let mut c = cfg("F2", "Z");
        c.box_bound = Some("zero".into());
        assert!(aa(&c).is_err());
        let only = JobConfig { only: vec!["nonsense".into()], ..JobConfig::default() };
        assert!(verify(&only).is_err());
    }
}
