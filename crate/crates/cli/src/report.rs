//! Command output, rendered as plain text or as `[section]` / `key = value`
//! documents.

use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Str(String),
    Int(i64),
    Bool(bool),
    List(Vec<String>),
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<Vec<String>> for Value {
    fn from(v: Vec<String>) -> Self {
        Value::List(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Section {
    pub name: String,
    pub fields: Vec<(String, Value)>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section { name: name.to_string(), fields: Vec::new() }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }
}

/// A headline (the text-mode answer) plus ordered sections.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub headline: Option<String>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(headline: impl Into<String>) -> Self {
        Report { headline: Some(headline.into()), sections: Vec::new() }
    }

    pub fn section(mut self, s: Section) -> Self {
        self.sections.push(s);
        self
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(h) = &self.headline {
            writeln!(out, "{}", h).unwrap();
        }
        for s in &self.sections {
            if self.sections.len() > 1 {
                writeln!(out, "{}:", s.name).unwrap();
            }
            for (k, v) in &s.fields {
                match v {
                    Value::List(items) => {
                        writeln!(out, "  {}: {}", k, items.len()).unwrap();
                        for it in items {
                            writeln!(out, "    {}", it).unwrap();
                        }
                    }
                    Value::Str(x) => writeln!(out, "  {}: {}", k, x).unwrap(),
                    Value::Int(x) => writeln!(out, "  {}: {}", k, x).unwrap(),
                    Value::Bool(x) => writeln!(out, "  {}: {}", k, x).unwrap(),
                }
            }
        }
        out
    }

    pub fn structured(&self) -> String {
        let mut out = String::new();
        for (idx, s) in self.sections.iter().enumerate() {
            if idx > 0 {
                out.push('\n');
            }
            writeln!(out, "[{}]", s.name).unwrap();
            for (k, v) in &s.fields {
                writeln!(out, "{} = {}", k, render(v)).unwrap();
            }
        }
        out
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn render(v: &Value) -> String {
    match v {
        Value::Str(s) => quote(s),
        Value::Int(x) => x.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::List(items) => {
            let parts: Vec<String> = items.iter().map(|s| quote(s)).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_forms() {
        let r = Report::new("equal")
            .section(Section::new("input").field("a", "v1\"x").field("n", 3usize))
            .section(Section::new("result").field("equal", true).field("pts", vec!["1,0".to_string()]));
        assert_eq!(r.text(), "equal\ninput:\n  a: v1\"x\n  n: 3\nresult:\n  equal: true\n  pts: 1\n    1,0\n");
        assert_eq!(r.structured(), "[input]\na = \"v1\\\"x\"\nn = 3\n\n[result]\nequal = true\npts = [\"1,0\"]\n");
    }
}
