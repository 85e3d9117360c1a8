//! Reports and their JSON and CSV renderings.

use serde::Serialize;
use serde_json::Value;

use crate::actions::GroupSpec;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Set on every failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        Check {
            name: name.into(),
            passed,
            witness: (!passed).then(|| detail.clone()),
            detail,
        }
    }

    pub fn with_witness(name: &str, passed: bool, detail: impl Into<String>, witness: Option<String>) -> Self {
        let mut c = Check::new(name, passed, detail);
        if !passed {
            if let Some(w) = witness {
                c.witness = Some(w);
            }
        }
        c
    }
}

/// A measured constant and the operation that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Constant {
    pub name: String,
    pub operation: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub index: usize,
    pub suite: String,
    pub instance: GroupSpec,
    pub radius: u32,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub constants: Vec<Constant>,
    pub artifacts: Vec<String>,
    /// Suite-specific structured output.
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub experiments: Vec<ExperimentReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn checks_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["experiment", "suite", "check", "passed", "detail", "witness"])
            .expect("in-memory write");
        for e in &self.experiments {
            for c in &e.checks {
                w.write_record([
                    &e.index.to_string(),
                    &e.suite,
                    &c.name,
                    &c.passed.to_string(),
                    &c.detail,
                    c.witness.as_deref().unwrap_or(""),
                ])
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn constants_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["experiment", "suite", "constant", "operation", "value"])
            .expect("in-memory write");
        for e in &self.experiments {
            for c in &e.constants {
                let v = match &c.value {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                w.write_record([&e.index.to_string(), &e.suite, &c.name, &c.operation, &v])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

/// Wall-clock times, kept out of the report so that it stays reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub total_ms: u128,
    pub experiments: Vec<ExperimentTiming>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentTiming {
    pub index: usize,
    pub suite: String,
    pub ms: u128,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_get_witnesses() {
        let c = Check::new("x", false, "broke at v3");
        assert_eq!(c.witness.as_deref(), Some("broke at v3"));
        let c = Check::with_witness("x", true, "fine", Some("unused".into()));
        assert!(c.witness.is_none());
    }

    #[test]
    fn csv_quotes_commas() {
        let r = Report {
            id: "t".into(),
            seed: None,
            passed: false,
            experiments: vec![ExperimentReport {
                index: 0,
                suite: "s".into(),
                instance: GroupSpec::Free {
                    rank: 2,
                    geometry: Default::default(),
                },
                radius: 1,
                passed: false,
                checks: vec![Check::new("c", false, "a, b")],
                constants: vec![],
                artifacts: vec![],
                details: Value::Null,
            }],
        };
        assert!(r.checks_csv().contains("\"a, b\""));
        assert_eq!(r.constants_csv().lines().count(), 1);
    }
}
