//! Experiment configuration files and their validation.

use serde::Serialize;
use serde_json::{Map, Value};

use super::suites::{find_suite, ParamKind, SuiteInfo};
use crate::actions::GroupSpec;
use crate::error::{LabError, Result};

/// Radii above this are refused before any ball is built.
pub const MAX_RADIUS: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// JSON pointer to the offending field, or `line:column` for syntax errors.
    pub pointer: String,
    pub message: String,
}

impl Diagnostic {
    fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.pointer, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSpec {
    pub suite: String,
    pub instance: GroupSpec,
    pub radius: u32,
    pub params: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub id: String,
    pub seed: Option<u64>,
    pub max_vertices: Option<usize>,
    pub experiments: Vec<ExperimentSpec>,
}

impl ExperimentConfig {
    /// Parses and validates; every problem found is reported, not just the first.
    pub fn parse(text: &str) -> std::result::Result<Self, Vec<Diagnostic>> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| vec![Diagnostic::new(format!("{}:{}", e.line(), e.column()), e.to_string())])?;
        let mut diags = Vec::new();
        let cfg = from_value(&value, &mut diags);
        match cfg {
            Some(c) if diags.is_empty() => Ok(c),
            _ => Err(diags),
        }
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|d| LabError::Config {
            pointer: d[0].pointer.clone(),
            message: d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
        })
    }

    /// Suites that draw random samples need a seed from the file or the command line.
    pub fn needs_seed(&self) -> Option<&str> {
        self.experiments
            .iter()
            .find(|e| find_suite(&e.suite).is_some_and(|s| s.sampling))
            .map(|e| e.suite.as_str())
    }
}

fn from_value(v: &Value, diags: &mut Vec<Diagnostic>) -> Option<ExperimentConfig> {
    let Some(obj) = v.as_object() else {
        diags.push(Diagnostic::new("", "expected an object"));
        return None;
    };
    for k in obj.keys() {
        if !matches!(k.as_str(), "id" | "seed" | "max_vertices" | "experiments") {
            diags.push(Diagnostic::new(format!("/{k}"), "unknown field"));
        }
    }
    let id = match obj.get("id") {
        Some(Value::String(s)) if !s.is_empty() => s.clone(),
        Some(_) => {
            diags.push(Diagnostic::new("/id", "must be a nonempty string"));
            String::new()
        }
        None => {
            diags.push(Diagnostic::new("/id", "required"));
            String::new()
        }
    };
    let seed = match obj.get("seed") {
        None | Some(Value::Null) => None,
        Some(x) => x.as_u64().or_else(|| {
            diags.push(Diagnostic::new("/seed", "must be a non-negative integer"));
            None
        }),
    };
    let max_vertices = match obj.get("max_vertices") {
        None | Some(Value::Null) => None,
        Some(x) => match x.as_u64() {
            Some(n) if n > 0 => Some(n as usize),
            _ => {
                diags.push(Diagnostic::new("/max_vertices", "must be a positive integer"));
                None
            }
        },
    };
    let mut experiments = Vec::new();
    match obj.get("experiments") {
        Some(Value::Array(xs)) => {
            for (i, x) in xs.iter().enumerate() {
                if let Some(e) = experiment(x, &format!("/experiments/{i}"), diags) {
                    experiments.push(e);
                }
            }
        }
        Some(_) => diags.push(Diagnostic::new("/experiments", "must be an array")),
        None => diags.push(Diagnostic::new("/experiments", "required")),
    }
    Some(ExperimentConfig {
        id,
        seed,
        max_vertices,
        experiments,
    })
}

fn experiment(v: &Value, at: &str, diags: &mut Vec<Diagnostic>) -> Option<ExperimentSpec> {
    let Some(obj) = v.as_object() else {
        diags.push(Diagnostic::new(at, "expected an object"));
        return None;
    };
    for k in obj.keys() {
        if !matches!(k.as_str(), "suite" | "instance" | "radius" | "params") {
            diags.push(Diagnostic::new(format!("{at}/{k}"), "unknown field"));
        }
    }
    let suite: &SuiteInfo = match obj.get("suite").and_then(Value::as_str) {
        Some(name) => match find_suite(name) {
            Some(s) => s,
            None => {
                diags.push(Diagnostic::new(format!("{at}/suite"), format!("unknown suite `{name}`")));
                return None;
            }
        },
        None => {
            diags.push(Diagnostic::new(format!("{at}/suite"), "required string"));
            return None;
        }
    };
    let instance = match obj.get("instance") {
        None => suite.default_instance(),
        Some(x) => match serde_json::from_value::<GroupSpec>(x.clone()) {
            Ok(s) => s,
            Err(e) => {
                diags.push(Diagnostic::new(format!("{at}/instance"), e.to_string()));
                return None;
            }
        },
    };
    let radius = match obj.get("radius") {
        None => suite.default_radius,
        Some(x) => match x.as_u64() {
            Some(r) if r <= MAX_RADIUS as u64 => r as u32,
            Some(_) => {
                diags.push(Diagnostic::new(format!("{at}/radius"), format!("must be at most {MAX_RADIUS}")));
                return None;
            }
            None => {
                diags.push(Diagnostic::new(format!("{at}/radius"), "must be a non-negative integer"));
                return None;
            }
        },
    };
    let params = match obj.get("params") {
        None => Map::new(),
        Some(Value::Object(m)) => m.clone(),
        Some(_) => {
            diags.push(Diagnostic::new(format!("{at}/params"), "must be an object"));
            return None;
        }
    };
    let before = diags.len();
    for (k, v) in &params {
        let p = format!("{at}/params/{k}");
        match suite.params.iter().find(|q| q.name == k) {
            None => diags.push(Diagnostic::new(p, format!("unknown parameter for suite `{}`", suite.name))),
            Some(q) => {
                if let Err(msg) = q.kind.check(v) {
                    diags.push(Diagnostic::new(p, msg));
                }
            }
        }
    }
    (diags.len() == before).then(|| ExperimentSpec {
        suite: suite.name.to_string(),
        instance,
        radius,
        params,
    })
}

impl ParamKind {
    pub(crate) fn check(self, v: &Value) -> std::result::Result<(), String> {
        let ok = match self {
            ParamKind::UInt => v.as_u64().is_some(),
            ParamKind::Word => v.is_string(),
            ParamKind::UIntList => v.as_array().is_some_and(|a| a.iter().all(|x| x.as_u64().is_some())),
            ParamKind::WordList => v.as_array().is_some_and(|a| a.iter().all(Value::is_string)),
        };
        if ok {
            Ok(())
        } else {
            Err(format!("expected {}", self.describe()))
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ParamKind::UInt => "a non-negative integer",
            ParamKind::Word => "a string",
            ParamKind::UIntList => "an array of non-negative integers",
            ParamKind::WordList => "an array of strings",
        }
    }
}

/// Typed access to an experiment's parameters, falling back to defaults.
pub(crate) struct Params<'a> {
    pub map: &'a Map<String, Value>,
}

impl Params<'_> {
    pub fn uint(&self, key: &str, default: u64) -> u64 {
        self.map.get(key).and_then(Value::as_u64).unwrap_or(default)
    }

    pub fn opt_uint(&self, key: &str) -> Option<u64> {
        self.map.get(key).and_then(Value::as_u64)
    }

    pub fn word(&self, key: &str, default: &str) -> String {
        self.map.get(key).and_then(Value::as_str).unwrap_or(default).to_string()
    }

    pub fn uints(&self, key: &str, default: &[u64]) -> Vec<u64> {
        match self.map.get(key).and_then(Value::as_array) {
            Some(a) => a.iter().filter_map(Value::as_u64).collect(),
            None => default.to_vec(),
        }
    }

    pub fn words(&self, key: &str, default: &[&str]) -> Vec<String> {
        match self.map.get(key).and_then(Value::as_array) {
            Some(a) => a.iter().filter_map(|x| x.as_str().map(String::from)).collect(),
            None => default.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_file() {
        let c = ExperimentConfig::parse(
            r#"{"id":"x","seed":3,"experiments":[{"suite":"tree-smoke","radius":4,"params":{"limit_patches":5}}]}"#,
        )
        .unwrap();
        assert_eq!(c.experiments[0].radius, 4);
        assert_eq!(c.needs_seed(), Some("tree-smoke"));
    }

    #[test]
    fn field_errors_carry_pointers() {
        let d = ExperimentConfig::parse(
            r#"{"id":"x","experiments":[{"suite":"bcp","radius":-1},{"suite":"nope"},{"suite":"towers","params":{"d":3,"zz":1}}]}"#,
        )
        .unwrap_err();
        let ptrs: Vec<&str> = d.iter().map(|x| x.pointer.as_str()).collect();
        assert_eq!(
            ptrs,
            ["/experiments/0/radius", "/experiments/1/suite", "/experiments/2/params/d", "/experiments/2/params/zz"]
        );
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let d = ExperimentConfig::parse("{\n  \"id\": \"x\",\n  oops\n}").unwrap_err();
        assert_eq!(d[0].pointer, "3:3");
    }

    #[test]
    fn empty_suite_list() {
        let c = ExperimentConfig::parse(r#"{"id":"empty","experiments":[]}"#).unwrap();
        assert!(c.experiments.is_empty() && c.needs_seed().is_none());
    }
}
