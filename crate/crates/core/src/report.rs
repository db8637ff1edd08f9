//! Serialization helpers shared by the report types.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Serializes a big integer as a JSON/CSV number when it fits in `i64`,
/// and as a decimal string otherwise.
pub struct BigNum<'a>(pub &'a BigInt);

impl Serialize for BigNum<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        big(self.0, serializer)
    }
}

/// `serialize_with` form of [`BigNum`].
pub fn big<S: Serializer>(v: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => serializer.serialize_i64(x),
        None => serializer.collect_str(v),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Consistency(format!("json serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Header plus one record per row, in the field order of `T`.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::Consistency(format!("csv serialization failed: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Consistency(format!("csv flush failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Consistency(e.to_string()))
}
