//! Pretty JSON that keeps arrays of plain values on one line.

use serde_json::Value;

pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(is_leaf),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

/// Small objects of plain values, e.g. sparse entries, stay on one line.
fn short_object(v: &Value) -> Option<String> {
    let Value::Object(m) = v else { return None };
    if m.is_empty() || !m.values().all(flat) {
        return None;
    }
    let parts: Vec<String> = m
        .iter()
        .map(|(k, x)| {
            let mut s = Value::String(k.clone()).to_string();
            s.push_str(": ");
            write(x, 0, &mut s);
            s
        })
        .collect();
    let line = format!("{{{}}}", parts.join(", "));
    (line.len() <= 72).then_some(line)
}

fn write(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    if let Some(line) = short_object(v) {
        out.push_str(&line);
        return;
    }
    match v {
        Value::Array(a) if flat(v) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write(x, indent + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}
