//! Report envelopes and serialization helpers shared by every command.
//!
//! Integers that may exceed 64 bits are written as decimal strings.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

pub const TOOL_NAME: &str = "monogen";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn dec<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// Any displayable value as a JSON string.
pub fn as_str<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn dec_opt<S: Serializer>(n: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}

pub fn dec_vec<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|n| n.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Flagged,
    Failed,
    Completed,
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Completed)
    }

    /// The worse of two verdicts.
    pub fn and(self, other: Verdict) -> Verdict {
        fn rank(v: Verdict) -> u8 {
            match v {
                Verdict::Completed => 0,
                Verdict::Pass => 1,
                Verdict::Flagged => 2,
                Verdict::Failed => 3,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Failed
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub parameters: Value,
    pub verdict: Verdict,
    pub result: Value,
}

impl Report {
    pub fn new(command: &str, parameters: impl Serialize, verdict: Verdict, result: impl Serialize) -> Result<Self> {
        Ok(Report {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            command: command.to_string(),
            parameters: to_value(parameters)?,
            verdict,
            result: to_value(result)?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialize(e.to_string()))
    }
}

fn to_value(v: impl Serialize) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Serialize(e.to_string()))
}

/// Writes rows as CSV, preceded by `#`-comment lines carrying the tool
/// version and the parameters.
pub fn to_csv<T: Serialize>(command: &str, parameters: impl Serialize, rows: &[T]) -> Result<String> {
    let mut out = format!(
        "# {TOOL_NAME} {TOOL_VERSION} {command}\n# parameters: {}\n",
        serde_json::to_string(&to_value(parameters)?).map_err(|e| Error::Serialize(e.to_string()))?
    );
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Serialize(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
    out.push_str(&String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))?);
    Ok(out)
}
