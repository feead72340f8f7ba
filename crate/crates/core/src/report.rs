//! JSON run reports. Exact quantities are emitted as decimal strings.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1.0.0";

pub fn report_schema_version() -> &'static str {
    SCHEMA_VERSION
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub fn ser_opt_rational<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&rational_string(r)),
        None => s.serialize_none(),
    }
}

pub fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_u128<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_opt_u128<S: Serializer>(v: &Option<u128>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

pub fn ser_u128_vec<S: Serializer>(v: &[u128], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    /// Which result the check instruments, e.g. `construction.coverage`.
    pub anchor: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: String,
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    #[serde(default)]
    pub seed: Option<u64>,
    pub checks: Vec<CheckOutcome>,
    /// Subcommand-specific payload.
    pub values: Value,
    #[serde(default)]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(subcommand: impl Into<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            subcommand: subcommand.into(),
            parameters: BTreeMap::new(),
            seed: None,
            checks: Vec::new(),
            values: Value::Null,
            timing_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(
            key.to_string(),
            serde_json::to_value(value).unwrap_or(Value::Null),
        );
        self
    }

    pub fn check(&mut self, name: &str, anchor: &str, passed: bool, witness: Option<Value>) -> &mut Self {
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            anchor: anchor.to_string(),
            passed,
            witness,
        });
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
