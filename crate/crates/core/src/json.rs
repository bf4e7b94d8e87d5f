//! Serialization of big integers as plain JSON numbers.
//!
//! Values that fit in an `i64` are written as numbers, larger ones as
//! decimal strings, so output stays readable and byte-stable.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;

pub fn big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(n) => s.serialize_i64(n),
        None => s.collect_str(x),
    }
}

pub fn opt_big<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => big(x, s),
        None => s.serialize_none(),
    }
}
