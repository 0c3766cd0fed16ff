use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Assertion {
    pub fn eq(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Assertion { name: name.into(), pass: expected == actual, expected, actual }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    AssertionFailed,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub results: Value,
    pub assertions: Vec<Assertion>,
    pub status: Status,
    pub version: String,
    pub provenance: Provenance,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::AssertionFailed => 1,
            Status::BudgetExhausted => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report without its timing, for reproducibility checks.
    pub fn payload(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().unwrap().remove("provenance");
        serde_json::to_string(&v).unwrap()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} ({})\n", self.command, self.version);
        out.push_str(&serde_json::to_string_pretty(&self.results).unwrap());
        out.push('\n');
        for a in &self.assertions {
            let mark = if a.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{} {}: expected {}, got {}\n", mark, a.name, a.expected, a.actual));
        }
        out.push_str(&format!("status: {:?}, {} ms\n", self.status, self.provenance.elapsed_ms));
        out
    }
}
