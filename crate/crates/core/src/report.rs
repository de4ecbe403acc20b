//! Report documents and their JSON/CSV serialisation.
//!
//! Exact values are written twice, as a `"num/den"` string and as a decimal
//! string; floats are written as decimal strings on the value side and as
//! JSON numbers for the error columns (`null` when not finite).

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Duration;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cli::SuiteConfig;
use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::record::{ParamValue, Value, VerificationRecord};

pub const TOOL_NAME: &str = "oddsqueeze";

pub const CSV_HEADER: [&str; 8] = ["check_id", "params", "lhs", "rhs", "abs_err", "rel_err", "exact", "pass"];

/// Fractional digits kept for non-terminating rational expansions.
const DECIMAL_DIGITS: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub config: SuiteConfig,
    pub records: Vec<VerificationRecord>,
    /// Check families that the selected mode did not run.
    pub skipped_checks: Vec<String>,
    pub duration: Duration,
}

impl ReportDocument {
    pub fn new(config: SuiteConfig) -> Self {
        ReportDocument {
            tool: TOOL_NAME.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            records: Vec::new(),
            skipped_checks: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    pub fn summary(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.pass).count();
        Summary {
            passed,
            failed: self.records.len() - passed,
            skipped: self.skipped_checks.len(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn to_serialized(&self) -> SerializedReport {
        SerializedReport {
            tool: self.tool.clone(),
            version: self.version.clone(),
            config: self.config.clone(),
            summary: self.summary(),
            skipped_checks: self.skipped_checks.clone(),
            duration_seconds: self.duration.as_secs_f64(),
            records: self.records.iter().map(RecordRow::from).collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_serialized())?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for rec in &self.records {
            let params = rec
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                rec.check_id.clone(),
                params,
                value_decimal(&rec.lhs),
                value_decimal(&rec.rhs),
                format_f64(rec.abs_err),
                format_f64(rec.rel_err),
                rec.exact.to_string(),
                rec.pass.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("fields are UTF-8"))
    }
}

/// The on-disk JSON shape of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SerializedReport {
    pub tool: String,
    pub version: String,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub skipped_checks: Vec<String>,
    pub duration_seconds: f64,
    pub records: Vec<RecordRow>,
}

impl SerializedReport {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Summary counts re-derived from the records.
    pub fn recount(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.pass).count();
        Summary {
            passed,
            failed: self.records.len() - passed,
            skipped: self.skipped_checks.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordRow {
    pub check_id: String,
    #[serde(serialize_with = "ser_params", deserialize_with = "de_params")]
    pub params: Vec<(String, ParamValue)>,
    pub lhs_decimal: String,
    pub lhs_rational: Option<String>,
    pub rhs_decimal: String,
    pub rhs_rational: Option<String>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    pub exact: bool,
    pub pass: bool,
    pub note: Option<String>,
}

impl From<&VerificationRecord> for RecordRow {
    fn from(rec: &VerificationRecord) -> Self {
        RecordRow {
            check_id: rec.check_id.clone(),
            params: rec.params.clone(),
            lhs_decimal: value_decimal(&rec.lhs),
            lhs_rational: rec.lhs.as_exact().map(rational_string),
            rhs_decimal: value_decimal(&rec.rhs),
            rhs_rational: rec.rhs.as_exact().map(rational_string),
            abs_err: rec.abs_err.is_finite().then_some(rec.abs_err),
            rel_err: rec.rel_err.is_finite().then_some(rec.rel_err),
            tol: rec.tol,
            exact: rec.exact,
            pass: rec.pass,
            note: rec.note.clone(),
        }
    }
}

fn ser_params<S: Serializer>(params: &[(String, ParamValue)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(params.len()))?;
    for (k, v) in params {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

fn de_params<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(String, ParamValue)>, D::Error> {
    struct OrderedParams;

    impl<'de> Visitor<'de> for OrderedParams {
        type Value = Vec<(String, ParamValue)>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map of parameter names to numbers")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
            let mut out = Vec::new();
            while let Some(entry) = access.next_entry()? {
                out.push(entry);
            }
            Ok(out)
        }
    }

    d.deserialize_map(OrderedParams)
}

/// `"num/den"`, always with an explicit denominator.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Decimal expansion of a rational: exact when it terminates, otherwise
/// rounded half away from zero to a fixed number of fractional digits.
pub fn rational_decimal(q: &BigRational) -> String {
    let denom = q.denom().clone();
    let mut rest = denom.clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0u32, 0u32);
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    let terminating = rest == BigInt::from(1);
    let digits = if terminating { twos.max(fives) } else { DECIMAL_DIGITS };

    let scale = BigInt::from(10).pow(digits);
    let numer = q.numer().abs() * &scale;
    let scaled = if terminating {
        numer / &denom
    } else {
        (numer * 2 + &denom) / (&denom * 2)
    };

    let body = scaled.to_string();
    let digits = digits as usize;
    let (int_part, frac_part) = if digits == 0 {
        (body, String::new())
    } else if body.len() > digits {
        let (a, b) = body.split_at(body.len() - digits);
        (a.to_string(), b.to_string())
    } else {
        ("0".to_string(), format!("{body:0>digits$}"))
    };
    let frac = frac_part.trim_end_matches('0');
    let negative = q.numer().sign() == Sign::Minus && !(int_part == "0" && frac.is_empty());
    let sign = if negative { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Shortest round-trip decimal, switching to exponent form for very large
/// or very small magnitudes.
pub fn format_f64(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let a = v.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn value_decimal(v: &Value) -> String {
    match v {
        Value::Exact(q) => rational_decimal(q),
        Value::Float(x) => format_f64(*x),
    }
}

/// Write the report to `path`, or to standard output when `path` is `None`.
pub fn emit_report(doc: &ReportDocument, format: ReportFormat, path: Option<&Path>) -> Result<()> {
    let text = match format {
        ReportFormat::Json => doc.to_json()?,
        ReportFormat::Csv => doc.to_csv()?,
    };
    match path {
        Some(p) => fs::write(p, text).map_err(Error::Io),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&BigRational::one()), "1/1");
        assert_eq!(rational_decimal(&BigRational::one()), "1");
        assert_eq!(rational_decimal(&q(-3, 8)), "-0.375");
        assert_eq!(rational_decimal(&q(945, 4)), "236.25");
        assert_eq!(rational_decimal(&q(1, 3)), "0.333333333333333333333333333333");
        assert_eq!(rational_decimal(&q(2, 3)), "0.666666666666666666666666666667");
        assert_eq!(rational_decimal(&q(0, 1)), "0");
        assert_eq!(rational_decimal(&q(-1, 1_000_000)), "-0.000001");
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(0.25), "0.25");
        assert_eq!(format_f64(1e-12), "1e-12");
        assert_eq!(format_f64(f64::NAN), "NaN");
    }
}
