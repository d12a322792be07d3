//! Per-depth curve files: `t,x,y,tx,ty,speed,curvature`, one row per sample,
//! every float written with 17 significant digits.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::curve::{Sample, SampledCurve};

pub const CSV_HEADER: &str = "t,x,y,tx,ty,speed,curvature";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CsvError {
    #[error("missing or wrong header, expected `{CSV_HEADER}`")]
    Header,
    #[error("line {line}: expected 7 fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: cannot parse `{field}` as a finite number")]
    Number { line: usize, field: String },
    #[error("line {line}: parameter does not increase")]
    NotIncreasing { line: usize },
    #[error("no samples")]
    Empty,
}

pub fn write_curve_csv(c: &SampledCurve) -> String {
    let mut out = String::with_capacity(c.len() * 7 * 24 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in &c.samples {
        let row = [
            s.t,
            s.pos[0],
            s.pos[1],
            s.unit_tangent[0],
            s.unit_tangent[1],
            s.speed,
            s.curvature,
        ];
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            // 17 significant digits: reads back to the same bits
            let _ = write!(out, "{v:.16e}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_curve_csv(text: &str) -> Result<Vec<Sample>, CsvError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == CSV_HEADER => {}
        _ => return Err(CsvError::Header),
    }
    let mut samples: Vec<Sample> = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        let raw = raw.trim_end();
        if raw.is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 7 {
            return Err(CsvError::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let mut v = [0.0; 7];
        for (slot, field) in v.iter_mut().zip(&fields) {
            *slot = field
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CsvError::Number {
                    line,
                    field: field.to_string(),
                })?;
        }
        if samples.last().is_some_and(|p| !(v[0] > p.t)) {
            return Err(CsvError::NotIncreasing { line });
        }
        samples.push(Sample {
            t: v[0],
            pos: [v[1], v[2]],
            unit_tangent: [v[3], v[4]],
            speed: v[5],
            curvature: v[6],
        });
    }
    if samples.is_empty() {
        return Err(CsvError::Empty);
    }
    Ok(samples)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
