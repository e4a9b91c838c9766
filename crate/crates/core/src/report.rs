//! Machine-readable run reports (JSON or CSV).

use std::time::Instant;

use serde::Serialize;

use crate::specfun::C64;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ResultEntry {
    pub name: String,
    pub re: f64,
    pub im: f64,
    /// Error estimate, when one is available.
    pub err: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: Vec<ResultEntry>,
    pub flags: Vec<String>,
    pub elapsed_ms: f64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunReport {
    pub fn new(command: &str, inputs: serde_json::Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            flags: Vec::new(),
            elapsed_ms: 0.0,
            started: Some(Instant::now()),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, value: C64, err: Option<f64>) {
        self.results.push(ResultEntry {
            name: name.into(),
            re: value.re,
            im: value.im,
            err,
        });
    }

    pub fn flag(&mut self, f: impl Into<String>) {
        self.flags.push(f.into());
    }

    pub fn finish(&mut self) {
        if let Some(s) = self.started {
            self.elapsed_ms = s.elapsed().as_secs_f64() * 1e3;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,re,im,err\n");
        for r in &self.results {
            let err = r.err.map(|e| format!("{e:e}")).unwrap_or_default();
            out.push_str(&format!("{},{:e},{:e},{}\n", r.name, r.re, r.im, err));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = RunReport::new("an", serde_json::json!({"n": 2}));
        r.push("A", C64::new(1.0, -2.0), Some(1e-12));
        r.flag("center=0");
        r.finish();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["command"], "an");
        assert_eq!(v["results"][0]["im"], -2.0);
        assert_eq!(v["flags"][0], "center=0");
        assert!(r.to_csv().starts_with("name,re,im,err\nA,"));
    }
}
