//! JSON documents. Every top-level document carries `"schema": 1`.

use serde_json::{json, Map, Value};

use gr33_core::replay::{BlockCheck, Erratum, ReplayStep};
use gr33_core::tables::TableCheck;
use gr33_core::translation::{FactorList, TranslationDirection};
use gr33_core::{
    alpha_to_dynkin, lift_status, Decomposition, PDomWeight, PaperVerification, Pattern, ReplayReport,
    TranslationCertificate, Weight6,
};

pub const SCHEMA: u64 = 1;

fn document(fields: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(rest) = fields {
        map.extend(rest);
    }
    Value::Object(map)
}

fn weight(w: &PDomWeight) -> Value {
    json!(w.compact())
}

pub fn classify(w: &Weight6) -> Value {
    let p = w.to_p_dominant().ok();
    let mut fields = json!({
        "weight": w.to_string(),
        "p_dominant": p.is_some(),
        "dynkin": alpha_to_dynkin(*w).0,
    });
    if let Some(p) = p {
        let ch = p.inf_char();
        fields["character"] = json!(ch.values());
        fields["singularity"] = json!(ch.singularity().as_str());
        fields["phi_doubled"] = json!(p.phi().doubled());
        fields["phi"] = json!(p.phi().to_string());
    }
    document(fields)
}

pub fn pattern(p: &Pattern) -> Value {
    let arrows: Vec<Value> = p
        .arrows
        .iter()
        .map(|a| {
            let lift = lift_status(a, &p.character).expect("pattern arrows belong to their pattern");
            json!({
                "src": weight(&a.src),
                "tgt": weight(&a.tgt),
                "kind": a.kind.as_str(),
                "order": a.order,
                "lift": lift.verdict().as_str(),
                "lift_reason": lift.reason().as_str(),
            })
        })
        .collect();
    document(json!({
        "char": p.character.values(),
        "singularity": p.character.singularity().as_str(),
        "nodes": p.nodes.iter().map(|n| weight(&n.weight)).collect::<Vec<_>>(),
        "arrows": arrows,
    }))
}

pub fn decomposition(d: &Decomposition) -> Value {
    let summands: Vec<Value> = d
        .summands
        .iter()
        .map(|s| {
            json!({
                "weight": weight(&s.weight),
                "piece": [s.piece.i, s.piece.j],
                "phi_doubled": s.phi.doubled(),
            })
        })
        .collect();
    document(json!({
        "base": weight(&d.base),
        "k": d.module.k(),
        "summands": summands,
    }))
}

fn factor_list(l: &FactorList) -> Value {
    json!({
        "label": l.label,
        "base": weight(&l.base),
        "k": l.module.k(),
        "factors": l.weights().iter().map(weight).collect::<Vec<_>>(),
    })
}

fn certificate_body(c: &TranslationCertificate) -> Value {
    let conditions: Vec<Value> = c
        .conditions
        .iter()
        .map(|x| {
            json!({
                "name": x.name,
                "passed": x.passed,
                "detail": x.detail,
            })
        })
        .collect();
    json!({
        "direction": match c.direction {
            TranslationDirection::Equisingular => "equisingular",
            TranslationDirection::OneWay => "one-way",
        },
        "k": c.module.k(),
        "valid": c.is_valid(),
        "conditions": conditions,
        "factor_lists": c.factor_lists().into_iter().map(factor_list).collect::<Vec<_>>(),
    })
}

pub fn certificate(c: &TranslationCertificate) -> Value {
    document(certificate_body(c))
}

fn block(b: &BlockCheck) -> Value {
    let sum = |ws: &[Weight6]| gr33_core::text::sum_string(ws.iter());
    let computed: Vec<Weight6> = b.computed.iter().map(|w| w.as_weight6()).collect();
    json!({
        "label": b.label,
        "printed": sum(&b.printed),
        "expected": sum(&b.expected),
        "computed": sum(&computed),
        "matches": b.matches,
    })
}

fn erratum(e: &Erratum) -> Value {
    json!({
        "location": e.location,
        "role": e.role,
        "printed": e.printed,
        "corrected": e.corrected,
    })
}

fn step(s: &ReplayStep) -> Value {
    let header: Map<String, Value> = s.header.iter().map(|(r, w)| ((*r).to_string(), weight(w))).collect();
    json!({
        "group": s.group,
        "label": s.label,
        "header": header,
        "blocks": s.blocks.iter().map(block).collect::<Vec<_>>(),
        "certificate": certificate_body(&s.certificate),
        "errata": s.flags.iter().map(erratum).collect::<Vec<_>>(),
        "problems": s.erratum_problems,
        "pass": s.pass(),
    })
}

fn report_body(r: &ReplayReport) -> Value {
    json!({
        "title": r.title,
        "steps": r.steps.iter().map(step).collect::<Vec<_>>(),
        "passed": r.passed(),
        "failed": r.failed(),
    })
}

pub fn report(r: &ReplayReport) -> Value {
    document(report_body(r))
}

fn table(t: &TableCheck) -> Value {
    json!({
        "table": t.table,
        "row": t.row,
        "status": t.status.to_string(),
        "printed": t.printed,
        "generated": t.generated,
    })
}

pub fn verification(v: &PaperVerification) -> Value {
    document(json!({
        "tables": v.tables.iter().map(table).collect::<Vec<_>>(),
        "replays": [report_body(&v.singular), report_body(&v.regular)],
        "errata": v.flags().iter().map(erratum).collect::<Vec<_>>(),
        "all_passed": v.all_passed(),
    }))
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
