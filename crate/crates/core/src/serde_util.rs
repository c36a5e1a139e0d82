//! JSON helpers for big integers: plain numbers when they fit in `i64`,
//! decimal strings otherwise.

use num_bigint::BigInt;
use serde::Serializer;

pub fn bigint<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(value) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.collect_str(value),
    }
}

pub fn bigint_vec<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&Big(v))?;
    }
    seq.end()
}

pub fn opt_bigint_vec<S: Serializer>(values: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    match values {
        Some(v) => bigint_vec(v, s),
        None => s.serialize_none(),
    }
}

struct Big<'a>(&'a BigInt);

impl serde::Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        bigint(self.0, s)
    }
}
