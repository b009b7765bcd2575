//! Serialization helpers shared by report types.

use num_rational::BigRational;
use serde::Serializer;

use crate::algebra::interval::RationalInterval;
use crate::algebra::text::format_rational;

pub fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn ser_opt_rational<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

pub fn ser_interval<S: Serializer>(iv: &RationalInterval, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Interval", 4)?;
    st.serialize_field("lo", &format_rational(&iv.lo))?;
    st.serialize_field("hi", &format_rational(&iv.hi))?;
    st.serialize_field("lo_f64", &crate::algebra::interval::rat_to_f64(&iv.lo))?;
    st.serialize_field("hi_f64", &crate::algebra::interval::rat_to_f64(&iv.hi))?;
    st.end()
}
