//! JSON, CSV and plain-text renderings of matrices, series and polynomials.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::rational::{parse_rational, to_fraction_string, Rational};
use crate::series::Series;

fn strings(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|q| Value::String(to_fraction_string(q))).collect())
}

/// `{"size": N+1, "rows": [["p/q", ...], ...]}` with row `n` holding `n + 1`
/// entries.
pub fn matrix_to_json(m: &TriMatrix<Rational>) -> Value {
    json!({
        "size": m.size(),
        "rows": m.rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
    })
}

fn parse_entry(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| Error::Malformed(e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(Error::Malformed(format!("matrix entry {other}"))),
    }
}

/// Reads the schema written by [`matrix_to_json`]. Integer JSON numbers are
/// accepted as entries too.
pub fn matrix_from_value(v: &Value) -> Result<TriMatrix<Rational>> {
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("missing \"rows\"".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for (n, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Malformed(format!("row {n} is not a list")))?;
        if row.len() != n + 1 {
            return Err(Error::Malformed(format!("row {n} has {} entries", row.len())));
        }
        out.push(row.iter().map(parse_entry).collect::<Result<Vec<_>>>()?);
    }
    if let Some(size) = v.get("size") {
        if size.as_u64() != Some(out.len() as u64) {
            return Err(Error::Malformed(format!("size {size} disagrees with {} rows", out.len())));
        }
    }
    Ok(TriMatrix::from_rows(out))
}

pub fn matrix_from_json(text: &str) -> Result<TriMatrix<Rational>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    matrix_from_value(&v)
}

fn full_rows(m: &TriMatrix<Rational>, cell: impl Fn(&Rational) -> String) -> Vec<Vec<String>> {
    let size = m.size();
    (0..size).map(|n| (0..size).map(|k| cell(&m.get(n, k))).collect()).collect()
}

/// One line per row, padded with zeros to the full width, entries `num/den`
/// separated by commas.
pub fn matrix_to_csv(m: &TriMatrix<Rational>) -> String {
    let mut out = String::new();
    for cells in full_rows(m, to_fraction_string) {
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Integers print bare, other entries as `p/q`.
pub fn display_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        to_fraction_string(q)
    }
}

/// Square display, zeros above the diagonal, every entry right-aligned to
/// the widest one.
pub fn matrix_to_text(m: &TriMatrix<Rational>) -> String {
    let cells = full_rows(m, display_rational);
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn series_to_json(s: &Series<Rational>) -> Value {
    strings(s.coeffs())
}

pub fn series_from_value(v: &Value) -> Result<Series<Rational>> {
    let items = v.as_array().ok_or_else(|| Error::Malformed("series is not a list".into()))?;
    if items.is_empty() {
        return Err(Error::Malformed("empty series".into()));
    }
    Ok(Series::new(items.iter().map(parse_entry).collect::<Result<Vec<_>>>()?))
}

pub fn series_to_csv(s: &Series<Rational>) -> String {
    let cells: Vec<String> = s.coeffs().iter().map(to_fraction_string).collect();
    cells.join(",") + "\n"
}

pub fn series_to_text(s: &Series<Rational>) -> String {
    let cells: Vec<String> = s.coeffs().iter().map(display_rational).collect();
    cells.join(" ") + "\n"
}

/// Coefficients from degree 0 upwards.
pub fn poly_to_json(p: &Poly<Rational>) -> Value {
    strings(p.coeffs())
}

pub fn poly_from_value(v: &Value) -> Result<Poly<Rational>> {
    let items = v.as_array().ok_or_else(|| Error::Malformed("polynomial is not a list".into()))?;
    Ok(Poly::new(items.iter().map(parse_entry).collect::<Result<Vec<_>>>()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn sample() -> TriMatrix<Rational> {
        TriMatrix::from_rows(vec![vec![int(1)], vec![ratio(-1, 2), int(1)], vec![int(12), int(0), ratio(3, 7)]])
    }

    #[test]
    fn json_round_trip() {
        let m = sample();
        let text = matrix_to_json(&m).to_string();
        assert!(text.contains("\"-1/2\""));
        assert_eq!(matrix_from_json(&text).unwrap(), m);
        assert!(matrix_from_json(r#"{"rows": [["1"], ["1"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"size": 1, "rows": [[1]]}"#).is_ok());
    }

    #[test]
    fn text_and_csv() {
        let m = sample();
        assert_eq!(matrix_to_csv(&m), "1/1,0/1,0/1\n-1/2,1/1,0/1\n12/1,0/1,3/7\n");
        assert_eq!(matrix_to_text(&m), "   1    0    0\n-1/2    1    0\n  12    0  3/7\n");
    }

    #[test]
    fn series_round_trip() {
        let s = Series::new(vec![int(1), ratio(2, 3), int(-4)]);
        assert_eq!(series_from_value(&series_to_json(&s)).unwrap(), s);
    }
}
