//! JSON output records. Counts are rendered as exact decimal strings,
//! never native JSON numbers: they outgrow 64 bits quickly.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryEcho {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub p: u64,
    pub m: u32,
    /// "zero" / "nonzero" for trace-class queries; a concrete element
    /// index for Z-set queries.
    pub alpha: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub query: QueryEcho,
    pub result: String,
    pub method: String,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let rec = OutputRecord {
            query: QueryEcho {
                n: 2,
                r: Some(1),
                k: Some(1),
                p: 2,
                m: 1,
                alpha: "zero".into(),
            },
            result: "5".into(),
            method: "closed_form".into(),
            elapsed_ms: 0,
        };
        let emitted = rec.to_json();
        let parsed: OutputRecord = serde_json::from_str(&emitted).unwrap();
        assert_eq!(parsed.to_json(), emitted);
    }
}
