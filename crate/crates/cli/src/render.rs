//! Text and JSON renderings of tables and reports.

use std::fmt::Write;
use std::sync::Arc;

use serde_json::{json, Value};

use gvz_core::analysis::{GcpReport, GvzReport, Status, TheoremReport, TwoDegreeReport};
use gvz_core::{CharacterTable, Error, Group, GroupSpec};

pub const SCHEMA_ID: &str = "report-v1";

/// Witness lines shown per check in text mode; JSON carries all of them.
const TEXT_WITNESS_LIMIT: usize = 4;

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn envelope(command: &str, group: Option<(&GroupSpec, &Arc<Group>)>, result: Value) -> Value {
    let group = group.map(|(spec, g)| {
        json!({
            "name": g.name(),
            "order": g.order(),
            "exponent": g.exponent(),
            "spec": serde_json::to_value(spec).expect("specs serialize"),
        })
    });
    json!({ "schema": SCHEMA_ID, "command": command, "group": group, "result": result })
}

pub fn error_json(e: &Error) -> Value {
    let class = match e {
        Error::Input(_) => "input",
        Error::Resource(_) => "resource",
        Error::HypothesisNotMet(_) | Error::NotApplicable(_) => "hypothesis",
        _ => "failure",
    };
    json!({ "kind": "error", "error": { "class": class, "message": e.to_string() } })
}

fn ordinal(e: u64) -> String {
    let suffix = match (e % 10, e % 100) {
        (1, 11) | (2, 12) | (3, 13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{e}{suffix}")
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::from(" ");
        for (c, cell) in r.iter().enumerate() {
            line.push(' ');
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 1));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn approx(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.4}")
    } else if re == 0.0 {
        format!("{im:.4}i")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

pub fn table_text(t: &CharacterTable, decimal: bool) -> String {
    let g = t.group();
    let classes = t.classes();
    let e = t.exponent();
    let mut out = String::new();
    writeln!(
        out,
        "{}: order {}, exponent {e}, {} classes, modular prime {}",
        g.name(),
        g.order(),
        classes.len(),
        t.field_prime()
    )
    .unwrap();
    writeln!(out, "values exact in Q(z); z = primitive {} root of unity, exp(2*pi*i/{e})", ordinal(e)).unwrap();
    out.push('\n');
    out.push_str("classes\n");
    let mut rows = vec![vec!["k".to_string(), "representative".into(), "size".into(), "order".into()]];
    for k in 0..classes.len() {
        let x = classes.representative(k);
        rows.push(vec![k.to_string(), g.label(x), classes.size(k).to_string(), g.element_order(x).to_string()]);
    }
    out.push_str(&pad_table(&rows));
    out.push('\n');
    out.push_str("characters\n");
    let mut rows =
        vec![std::iter::once("".to_string()).chain((0..classes.len()).map(|k| k.to_string())).collect::<Vec<_>>()];
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let mut row = vec![format!("chi{i}")];
        row.extend(chi.values().iter().map(|v| v.to_string()));
        rows.push(row);
    }
    out.push_str(&pad_table(&rows));
    if decimal {
        out.push('\n');
        out.push_str("approximate values (display only)\n");
        let mut rows = Vec::new();
        for (i, chi) in t.irreducibles().iter().enumerate() {
            let mut row = vec![format!("chi{i}")];
            row.extend(chi.values().iter().map(|v| {
                let (re, im) = v.to_complex_f64();
                approx(re, im)
            }));
            rows.push(row);
        }
        out.push_str(&pad_table(&rows));
    }
    out
}

pub fn table_json(t: &CharacterTable) -> Value {
    let g = t.group();
    let classes = t.classes();
    let class_list: Vec<Value> = (0..classes.len())
        .map(|k| {
            let x = classes.representative(k);
            json!({
                "index": k,
                "representative": g.label(x),
                "size": classes.size(k),
                "element_order": g.element_order(x),
                "centralizer_order": classes.centralizer_order(k),
            })
        })
        .collect();
    let characters: Vec<Value> = t
        .irreducibles()
        .iter()
        .enumerate()
        .map(|(i, chi)| {
            json!({
                "index": i,
                "degree": chi.degree(),
                "values": chi.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "kind": "table",
        "conductor": t.exponent(),
        "field_prime": t.field_prime(),
        "degree_set": t.degree_set(),
        "classes": class_list,
        "characters": characters,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

pub fn gvz_text(r: &GvzReport) -> String {
    let mut out = format!("{}: GVZ {}\n", r.group, verdict(r.is_gvz));
    let degrees: Vec<String> = r.degree_set.iter().map(u64::to_string).collect();
    writeln!(out, "cd(G) = {{{}}}", degrees.join(", ")).unwrap();
    let mut rows = vec![vec![
        "chi".to_string(),
        "degree".into(),
        "|Z(chi)|".into(),
        "|G:Z(chi)|".into(),
        "degree^2 = index".into(),
        "vanishes off Z(chi)".into(),
    ]];
    for c in &r.characters {
        rows.push(vec![
            format!("chi{}", c.character),
            c.degree.to_string(),
            c.centre_order.to_string(),
            c.centre_index.to_string(),
            c.degree_square_is_index.to_string(),
            c.vanishes_off_centre.to_string(),
        ]);
    }
    out.push_str(&pad_table(&rows));
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {w}").unwrap();
    }
    out
}

pub fn gcp_text(r: &GcpReport) -> String {
    let mut out = format!(
        "{}: (G, N) generalized Camina pair {} for N = {} of order {}\n",
        r.group,
        verdict(r.holds),
        r.normal,
        r.normal_order
    );
    writeln!(out, "nonlinear characters vanish outside N: {}", r.vanishing).unwrap();
    writeln!(out, "Cl(g) = gG' for every g outside N: {}", r.class_criterion).unwrap();
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {w}").unwrap();
    }
    out
}

pub fn two_degree_text(r: &TwoDegreeReport) -> String {
    let degrees: Vec<String> = r.degree_set.iter().map(u64::to_string).collect();
    format!("{}: two character degrees {}; cd(G) = {{{}}}\n", r.group, verdict(r.holds), degrees.join(", "))
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skip => "SKIP",
        Status::Note => "NOTE",
    }
}

pub fn verify_text(g: &Group, reports: &[(&str, &TheoremReport)], pass: bool) -> String {
    let mut out = format!("{}: order {}\n", g.name(), g.order());
    for (target, r) in reports {
        out.push('\n');
        if !r.hypothesis.met {
            writeln!(out, "[{target}] {}: hypothesis not met: {}", r.theorem, r.hypothesis.detail).unwrap();
            continue;
        }
        writeln!(out, "[{target}] {} (hypothesis: {})", r.theorem, r.hypothesis.detail).unwrap();
        for c in &r.checks {
            let mut line = format!("  {}  {}", status_tag(c.status), c.label);
            if c.status != Status::Skip {
                write!(line, ": {} vs {}", c.lhs, c.rhs).unwrap();
            }
            out.push_str(&line);
            out.push('\n');
            if let Some(n) = &c.note {
                writeln!(out, "        note: {n}").unwrap();
            }
            for w in c.witnesses.iter().take(TEXT_WITNESS_LIMIT) {
                writeln!(out, "        witness: {w}").unwrap();
            }
            if c.witnesses.len() > TEXT_WITNESS_LIMIT {
                writeln!(out, "        ({} more witnesses)", c.witnesses.len() - TEXT_WITNESS_LIMIT).unwrap();
            }
        }
        writeln!(
            out,
            "  {} passed, {} failed, {} skipped",
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::Skip)
        )
        .unwrap();
    }
    writeln!(out, "\noverall: {}", if pass { "PASS" } else { "FAIL" }).unwrap();
    out
}

pub fn verify_json(target: &str, reports: &[(&str, &TheoremReport)], pass: bool) -> Value {
    let list: Vec<Value> = reports
        .iter()
        .map(|(t, r)| json!({ "target": t, "report": serde_json::to_value(r).expect("reports serialize") }))
        .collect();
    json!({ "kind": "verify", "target": target, "pass": pass, "reports": list })
}
