//! One verification outcome: what was checked, with which parameters, and
//! how the two sides compared.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::BigRational;

/// A named parameter attached to a record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
}

impl ParamValue {
    fn total_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ParamValue::Int(a), ParamValue::Int(b)) => a.cmp(b),
            (a, b) => a.as_f64().total_cmp(&b.as_f64()),
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            ParamValue::Int(v) => v as f64,
            ParamValue::Real(v) => v,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

/// Either side of a comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Value::Float(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Float(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub check_id: String,
    pub params: Vec<(String, ParamValue)>,
    pub lhs: Value,
    pub rhs: Value,
    pub abs_err: f64,
    pub rel_err: f64,
    /// Relative tolerance for float records; zero for exact ones.
    pub tol: f64,
    pub exact: bool,
    pub pass: bool,
    pub note: Option<String>,
}

pub type Params = Vec<(String, ParamValue)>;

/// Build a parameter list from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, ParamValue); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn relative(abs_err: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        abs_err
    } else {
        abs_err / reference.abs()
    }
}

impl VerificationRecord {
    /// Exact comparison; passes iff both rationals are equal.
    pub fn exact(check_id: impl Into<String>, params: Params, lhs: BigRational, rhs: BigRational) -> Self {
        let diff = (&lhs - &rhs).abs();
        let abs_err = diff.to_f64().unwrap_or(f64::INFINITY);
        let rel_err = if rhs.is_zero() {
            abs_err
        } else {
            (diff / rhs.abs()).to_f64().unwrap_or(f64::INFINITY)
        };
        let pass = lhs == rhs;
        VerificationRecord {
            check_id: check_id.into(),
            params,
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
            abs_err,
            rel_err,
            tol: 0.0,
            exact: true,
            pass,
            note: None,
        }
    }

    /// Float comparison; passes iff `|lhs - rhs| / |rhs| <= tol`
    /// (absolute error when `rhs` is zero).
    pub fn float(check_id: impl Into<String>, params: Params, lhs: f64, rhs: f64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = relative(abs_err, rhs);
        VerificationRecord {
            check_id: check_id.into(),
            params,
            lhs: Value::Float(lhs),
            rhs: Value::Float(rhs),
            abs_err,
            rel_err,
            tol,
            exact: false,
            pass: rel_err <= tol,
            note: None,
        }
    }

    /// Float comparison whose relative error is `|lhs - rhs| / max(1, |rhs|)`,
    /// for quantities that pass through zero.
    pub fn float_scaled(check_id: impl Into<String>, params: Params, lhs: f64, rhs: f64, tol: f64) -> Self {
        let mut rec = VerificationRecord::float(check_id, params, lhs, rhs, tol);
        rec.rel_err = rec.abs_err / rhs.abs().max(1.0);
        rec.pass = rec.rel_err <= tol;
        rec
    }

    /// Float comparison of a computed value against an exact target.
    pub fn float_vs_exact(
        check_id: impl Into<String>,
        params: Params,
        lhs: f64,
        rhs: BigRational,
        tol: f64,
    ) -> Self {
        let target = rhs.to_f64().unwrap_or(f64::NAN);
        let mut rec = VerificationRecord::float(check_id, params, lhs, target, tol);
        rec.rhs = Value::Exact(rhs);
        rec
    }

    /// A check that could not be carried out.
    pub fn failed(check_id: impl Into<String>, params: Params, reason: impl Into<String>) -> Self {
        VerificationRecord {
            check_id: check_id.into(),
            params,
            lhs: Value::Float(f64::NAN),
            rhs: Value::Float(f64::NAN),
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            tol: 0.0,
            exact: false,
            pass: false,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Force a failure (keeping the measured values) with an explanation.
    pub fn fail_with(mut self, reason: impl Into<String>) -> Self {
        self.pass = false;
        self.note = Some(reason.into());
        self
    }

    pub fn param(&self, name: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    /// Ordering by `(check_id, params)` used to make reports deterministic.
    pub fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.check_id.cmp(&other.check_id).then_with(|| {
            for ((ka, va), (kb, vb)) in self.params.iter().zip(&other.params) {
                let o = ka.cmp(kb).then_with(|| va.total_cmp(vb));
                if o != Ordering::Equal {
                    return o;
                }
            }
            self.params.len().cmp(&other.params.len())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn exact_pass_iff_equal() {
        let one = BigRational::one();
        let rec = VerificationRecord::exact("x", params([("p", 1i64.into())]), one.clone(), one.clone());
        assert!(rec.pass && rec.exact && rec.abs_err == 0.0);
        let half = BigRational::new(1.into(), 2.into());
        let rec = VerificationRecord::exact("x", vec![], half, one);
        assert!(!rec.pass);
        assert_eq!(rec.rel_err, 0.5);
    }

    #[test]
    fn float_pass_iff_within_tolerance() {
        assert!(VerificationRecord::float("f", vec![], 1.0 + 1e-11, 1.0, 1e-10).pass);
        assert!(!VerificationRecord::float("f", vec![], 1.0 + 1e-9, 1.0, 1e-10).pass);
        assert!(!VerificationRecord::float("f", vec![], f64::NAN, 1.0, 1e-10).pass);
        let zero_ref = VerificationRecord::float("f", vec![], 1e-13, 0.0, 1e-12);
        assert!(zero_ref.pass);
    }

    #[test]
    fn sort_key_orders_numerically() {
        let a = VerificationRecord::float("c", params([("p", 2i64.into())]), 0.0, 0.0, 1.0);
        let b = VerificationRecord::float("c", params([("p", 10i64.into())]), 0.0, 0.0, 1.0);
        assert_eq!(a.sort_key_cmp(&b), Ordering::Less);
    }
}
