use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(flatten)]
    pub payload: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl CommandReport {
    pub fn new(command: &str, status: Status) -> Self {
        CommandReport {
            command: command.into(),
            status,
            witness: None,
            payload: Map::new(),
            elapsed_ms: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.insert(key.into(), value.into());
        self
    }

    pub fn failing(command: &str, witness: WitnessReport) -> Self {
        let mut r = Self::new(command, Status::Fails);
        r.witness = Some(witness);
        r
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Holds | Status::Value => 0,
            Status::Fails => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Value => "value",
        };
        writeln!(out, "{}: {status}", self.command).unwrap();
        if let Some(w) = &self.witness {
            writeln!(out, "witness: ({})", w.labels.join(",")).unwrap();
            if let Some(r) = &w.residual {
                writeln!(out, "residual: {r}").unwrap();
            }
        }
        for (k, v) in &self.payload {
            writeln!(out, "{k}: {}", text_value(v)).unwrap();
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed_ms: {ms}").unwrap();
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(text_value).collect::<Vec<_>>().join(", ")
        }
        Value::Array(items) if items.iter().all(Value::is_array) => {
            let rows: Vec<String> = items
                .iter()
                .map(|r| format!("[{}]", text_value(r)))
                .collect();
            rows.join(" ")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn payload_is_flattened() {
        let r = CommandReport::new("series", Status::Value).with("coeffs", vec!["-1", "1/2"]);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["coeffs"][1], "1/2");
        assert_eq!(v["status"], "value");
        assert!(v.get("elapsed_ms").is_none());
        assert_eq!(r.to_text(), "series: value\ncoeffs: -1, 1/2\n");
    }

    #[test]
    fn failures_exit_one() {
        let w = WitnessReport {
            indices: vec![0],
            labels: vec!["e1".into()],
            residual: None,
        };
        assert_eq!(CommandReport::failing("check", w).exit_code(), 1);
        assert_eq!(CommandReport::new("x", Status::Holds).exit_code(), 0);
    }
}
