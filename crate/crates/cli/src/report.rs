//! Reports: one data structure, rendered as JSON (`machine`) or as indented
//! text. The text form is produced from the same values, so every number
//! it shows is also in the JSON.

use lyalg::{Matrix, Scalar, Verdict};
use serde_json::{json, Map, Value};

use crate::manifest::rows_of;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Violation,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::InputError => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::InputError => "input-error",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub name: String,
    pub fields: Map<String, Value>,
}

impl Section {
    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    /// `verdict`, and on failure `rule`, `witness` and `residual`.
    pub fn verdict(&mut self, v: &Verdict) -> &mut Self {
        match v {
            Verdict::Pass => self.set("verdict", "pass"),
            Verdict::Fail(v) => self
                .set("verdict", "fail")
                .set("rule", v.rule.as_str())
                .set("witness", v.witness.clone())
                .set("residual", scalars(&v.residual)),
        }
    }
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    json!(rows_of(m))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, status: Status::Pass, sections: Vec::new() }
    }

    pub fn section(&mut self, name: &str) -> &mut Section {
        self.sections.push(Section { name: name.to_string(), fields: Map::new() });
        self.sections.last_mut().expect("just pushed")
    }

    /// Raises the status; never lowers it.
    pub fn mark(&mut self, s: Status) {
        if s.exit_code() > self.status.exit_code() {
            self.status = s;
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_value(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("name".into(), Value::String(s.name.clone()));
                m.insert("fields".into(), Value::Object(s.fields.clone()));
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("status".into(), json!(self.status.name()));
        m.insert("exit_code".into(), json!(self.exit_code()));
        m.insert("sections".into(), Value::Array(sections));
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => crate::json::pretty(&self.to_value()),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("$ {}\n", self.command.join(" "));
        for s in &self.sections {
            out.push_str(&format!("[{}]\n", s.name));
            for (k, v) in &s.fields {
                out.push_str(&format!("  {k}: {}\n", inline(v)));
            }
        }
        out.push_str(&format!("status: {} (exit {})\n", self.status.name(), self.exit_code()));
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter().map(|(k, v)| format!("{k}: {}", inline(v))).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_only_rises() {
        let mut r = Report::new(vec!["check".into()]);
        r.mark(Status::Violation);
        r.mark(Status::Pass);
        assert_eq!(r.exit_code(), 1);
        r.mark(Status::InputError);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn text_mentions_every_value() {
        let mut r = Report::new(vec!["cohomology".into()]);
        r.section("cohomology").set("h_dims", json!([2, 4])).set("rep", json!({"args": [0, 1]}));
        let t = r.render(Format::Text);
        assert!(t.contains("h_dims: [2, 4]"));
        assert!(t.contains("rep: {args: [0, 1]}"));
        let m: Value = serde_json::from_str(&r.render(Format::Machine)).unwrap();
        assert_eq!(m["sections"][0]["fields"]["h_dims"], json!([2, 4]));
    }
}
