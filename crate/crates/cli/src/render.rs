//! Markdown rendering of JSON reports.

use serde_json::{Map, Value};

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
    .replace('|', "\\|")
}

fn checks_table(checks: &[Value]) -> String {
    let mut s = String::from("| check | result | detail |\n|---|---|---|\n");
    for c in checks {
        let passed = c.get("passed").and_then(Value::as_bool).unwrap_or(false);
        let mut detail = c.get("detail").map(cell).unwrap_or_default();
        if let Some(cx) = c.get("counterexample") {
            detail.push_str(&format!(" (counterexample: {})", cell(cx)));
        }
        s.push_str(&format!(
            "| {} | {} | {} |\n",
            c.get("name").map(cell).unwrap_or_default(),
            if passed { "pass" } else { "FAIL" },
            detail
        ));
    }
    s
}

/// A field table for the top-level keys, with verification checks and
/// nested reports expanded.
pub fn markdown(body: &Map<String, Value>) -> String {
    let mut s = String::from("| field | value |\n|---|---|\n");
    let mut sections = Vec::new();
    for (k, v) in body {
        match (k.as_str(), v) {
            ("checks", Value::Array(checks)) => sections.push(checks_table(checks)),
            ("reports", Value::Array(reports)) => {
                for r in reports {
                    if let Value::Object(m) = r {
                        sections.push(format!(
                            "### seed {}\n\n{}",
                            m.get("seed").map(cell).unwrap_or_default(),
                            markdown(m)
                        ));
                    }
                }
            }
            _ => s.push_str(&format!("| {k} | {} |\n", cell(v))),
        }
    }
    for sec in sections {
        s.push('\n');
        s.push_str(&sec);
    }
    s
}
