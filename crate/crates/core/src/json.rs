//! JSON helpers for exact integers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::{Number, Value};

/// An arbitrary-precision integer as a JSON number with every digit preserved.
pub fn int_value(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    Number::from_str(&v.to_string())
        .expect("integer literal")
        .serialize(s)
}
