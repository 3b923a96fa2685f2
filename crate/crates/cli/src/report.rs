//! Report files: one [`ReportEntry`] per verification record, as a JSON
//! array or as CSV with a fixed column order.

use std::io;

use serde::{Deserialize, Serialize};
use supercong_core::harness::{Achieved, Requirement, VerificationRecord};
use supercong_core::{Rational, Valuation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("malformed report field {field}: {value:?}")]
    Field { field: &'static str, value: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A record with every rational rendered exactly; field order is the CSV
/// column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub case: String,
    pub p: u64,
    pub param: i64,
    pub required: String,
    pub achieved: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub conjectural: bool,
}

impl From<&VerificationRecord> for ReportEntry {
    fn from(r: &VerificationRecord) -> Self {
        ReportEntry {
            case: r.case.clone(),
            p: r.p,
            param: r.param,
            required: r.required.to_string(),
            achieved: r.achieved.to_string(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            pass: r.pass,
            conjectural: r.conjectural,
        }
    }
}

fn bad(field: &'static str, value: &str) -> ReportError {
    ReportError::Field { field, value: value.to_string() }
}

fn parse_requirement(s: &str) -> Result<Requirement, ReportError> {
    let int = |t: &str| t.parse::<i64>().map_err(|_| bad("required", s));
    if s == "exact" {
        Ok(Requirement::Equal)
    } else if let Some(n) = s.strip_prefix("v>=") {
        Ok(Requirement::AtLeast(int(n)?))
    } else if let Some(n) = s.strip_prefix("v==") {
        Ok(Requirement::Exactly(int(n)?))
    } else {
        Err(bad("required", s))
    }
}

fn parse_achieved(s: &str) -> Achieved {
    match s {
        "equal" => Achieved::Equal,
        "unequal" => Achieved::Unequal,
        "inf" => Achieved::Valuation(Valuation::Infinite),
        _ => match s.parse::<i64>() {
            Ok(v) => Achieved::Valuation(Valuation::Finite(v)),
            Err(_) => Achieved::Failed(s.to_string()),
        },
    }
}

impl TryFrom<&ReportEntry> for VerificationRecord {
    type Error = ReportError;

    fn try_from(e: &ReportEntry) -> Result<Self, ReportError> {
        let rational = |field, s: &str| s.parse::<Rational>().map_err(|_| bad(field, s));
        Ok(VerificationRecord {
            case: e.case.clone(),
            p: e.p,
            param: e.param,
            required: parse_requirement(&e.required)?,
            achieved: parse_achieved(&e.achieved),
            lhs: rational("lhs", &e.lhs)?,
            rhs: rational("rhs", &e.rhs)?,
            pass: e.pass,
            conjectural: e.conjectural,
        })
    }
}

pub fn entries(records: &[VerificationRecord]) -> Vec<ReportEntry> {
    records.iter().map(ReportEntry::from).collect()
}

/// Pretty-printed JSON array with a trailing newline.
pub fn to_json(entries: &[ReportEntry]) -> Result<String, ReportError> {
    let mut out = serde_json::to_string_pretty(entries)?;
    out.push('\n');
    Ok(out)
}

pub fn from_json(text: &str) -> Result<Vec<ReportEntry>, ReportError> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_csv(entries: &[ReportEntry]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in entries {
        w.serialize(e)?;
    }
    if entries.is_empty() {
        w.write_record(["case", "p", "param", "required", "achieved", "lhs", "rhs", "pass", "conjectural"])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn from_csv(text: &str) -> Result<Vec<ReportEntry>, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

pub fn render(entries: &[ReportEntry], format: Format) -> Result<String, ReportError> {
    match format {
        Format::Json => to_json(entries),
        Format::Csv => to_csv(entries),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<VerificationRecord> {
        vec![
            VerificationRecord::congruence(
                "EQ0",
                5,
                0,
                Requirement::AtLeast(3),
                Rational::new(435, 512),
                Rational::from(5),
            )
            .unwrap(),
            VerificationRecord::exact("COMIDEN1", 5, 5, Rational::from(5), Rational::from(5)),
            VerificationRecord::congruence(
                "H2_HALF",
                5,
                0,
                Requirement::AtLeast(1),
                Rational::zero(),
                Rational::zero(),
            )
            .unwrap(),
            VerificationRecord::failed("CONJ1", 101, 2, Requirement::AtLeast(5), "budget, exceeded").conjectural(true),
        ]
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let text = to_json(&entries(&sample())).unwrap();
        assert!(!text.contains('.'), "no floats or decimal points expected");
        let again = to_json(&from_json(&text).unwrap()).unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn records_survive_the_report() {
        let recs = sample();
        for e in entries(&recs).iter().zip(&recs) {
            assert_eq!(&VerificationRecord::try_from(e.0).unwrap(), e.1);
        }
    }

    #[test]
    fn csv_columns_and_round_trip() {
        let es = entries(&sample());
        let text = to_csv(&es).unwrap();
        assert!(text.starts_with("case,p,param,required,achieved,lhs,rhs,pass,conjectural\n"));
        assert!(text.contains("EQ0,5,0,v>=3,3,435/512,5,true,false"));
        assert_eq!(from_csv(&text).unwrap(), es);
        assert_eq!(to_csv(&[]).unwrap(), "case,p,param,required,achieved,lhs,rhs,pass,conjectural\n");
    }

    #[test]
    fn malformed_fields_are_rejected() {
        let mut e = entries(&sample()).remove(0);
        e.required = "v>x".into();
        assert!(VerificationRecord::try_from(&e).is_err());
        e.required = "v>=3".into();
        e.lhs = "1/0".into();
        assert!(VerificationRecord::try_from(&e).is_err());
    }
}
