//! Point-set file formats.
//!
//! Text: one point per line, two whitespace-separated coordinates, each an
//! integer or a `p/q` rational. Lines starting with `#` and blank lines are
//! skipped. JSON: `{"points": [[x, y], ...]}` where coordinates are JSON
//! integers or `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use super::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub fn format_rational(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_text(input: &str) -> Result<Vec<Point>, ParseError> {
    let mut points = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| ParseError::Line { line: idx + 1, message };
        if fields.len() != 2 {
            return Err(err(format!("expected 2 coordinates, found {}", fields.len())));
        }
        let x = parse_rational(fields[0]).ok_or_else(|| err(format!("bad coordinate {:?}", fields[0])))?;
        let y = parse_rational(fields[1]).ok_or_else(|| err(format!("bad coordinate {:?}", fields[1])))?;
        points.push(Point::new(x, y));
    }
    Ok(points)
}

pub fn to_text(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format_rational(&p.x));
        out.push(' ');
        out.push_str(&format_rational(&p.y));
        out.push('\n');
    }
    out
}

fn coordinate_json(v: &BigRational) -> Value {
    match v.is_integer().then(|| v.numer().to_i64()).flatten() {
        Some(i) => json!(i),
        None => json!(format_rational(v)),
    }
}

fn coordinate_from_json(v: &Value) -> Option<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Some(BigRational::from_integer(BigInt::from(i)))
            } else {
                // large integers survive as their decimal text
                parse_rational(&n.to_string())
            }
        }
        Value::String(s) => parse_rational(s),
        _ => None,
    }
}

pub fn to_json(points: &[Point]) -> Value {
    let pts: Vec<Value> = points
        .iter()
        .map(|p| Value::Array(vec![coordinate_json(&p.x), coordinate_json(&p.y)]))
        .collect();
    json!({ "points": pts })
}

pub fn parse_json(input: &str) -> Result<Vec<Point>, ParseError> {
    let v: Value = serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let arr = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::Json("missing \"points\" array".into()))?;
    arr.iter()
        .enumerate()
        .map(|(i, p)| {
            let pair = p.as_array().filter(|a| a.len() == 2);
            let bad = || ParseError::Json(format!("point {i}: expected [x, y]"));
            let pair = pair.ok_or_else(bad)?;
            let x = coordinate_from_json(&pair[0]).ok_or_else(bad)?;
            let y = coordinate_from_json(&pair[1]).ok_or_else(bad)?;
            Ok(Point::new(x, y))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_with_comments_and_rationals() {
        let pts = parse_text("# header\n0 0\n\n  3/2   -7\n100000000000000000000000 1\n").unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(format_rational(&pts[1].x), "3/2");
        assert_eq!(to_text(&pts), "0 0\n3/2 -7\n100000000000000000000000 1\n");
    }

    #[test]
    fn malformed_line_names_line_number() {
        let err = parse_text("0 0\n1 2 3\n").unwrap_err();
        assert_eq!(err, ParseError::Line { line: 2, message: "expected 2 coordinates, found 3".into() });
        assert!(matches!(parse_text("0 0\n1 x\n"), Err(ParseError::Line { line: 2, .. })));
        assert!(matches!(parse_text("1/0 2\n"), Err(ParseError::Line { line: 1, .. })));
    }

    #[test]
    fn json_forms() {
        let pts = parse_json(r#"{"points": [[1, 2], ["3/4", -5], [12345678901234567890123, 0]]}"#).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(format_rational(&pts[1].x), "3/4");
        assert_eq!(format_rational(&pts[2].x), "12345678901234567890123");
        assert!(parse_json(r#"{"pts": []}"#).is_err());
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(c in proptest::collection::vec((any::<i64>(), 1i64..1000, any::<i32>()), 0..10)) {
            let pts: Vec<Point> = c.iter().map(|&(n, d, y)| {
                Point::new(BigRational::new(BigInt::from(n), BigInt::from(d)), BigRational::from_integer(BigInt::from(y)))
            }).collect();
            prop_assert_eq!(&parse_text(&to_text(&pts)).unwrap(), &pts);
            let js = serde_json::to_string(&to_json(&pts)).unwrap();
            prop_assert_eq!(&parse_json(&js).unwrap(), &pts);
        }
    }
}
