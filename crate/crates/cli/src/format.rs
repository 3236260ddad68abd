//! Number formatting for CSV output: 12 significant digits, shortest form.

use crate::error::Result;

const DIGITS: usize = 12;

/// Serializes `header` and `rows` as CSV text.
pub fn to_csv<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(AsRef::as_ref))?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// `%.12g`-style rendering with trailing zeros removed.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..DIGITS as i32).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{v:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_forms() {
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(fmt_num(-0.5), "-0.5");
        assert_eq!(fmt_num(1.0e-7), "1e-7");
        assert_eq!(fmt_num(123456789012345.0), "1.23456789012e14");
        assert_eq!(fmt_num(0.000123), "0.000123");
    }

    #[test]
    fn csv_layout() {
        let text = to_csv(&["n", "E"], &[vec!["0", "1.5"], vec!["1", "2"]]).unwrap();
        assert_eq!(text, "n,E\n0,1.5\n1,2\n");
    }

    #[test]
    fn round_trips_to_twelve_digits() {
        for v in [std::f64::consts::PI, 2.24052383e-3, 9.99999999999e5] {
            let back: f64 = fmt_num(v).parse().unwrap();
            assert!((back - v).abs() <= 1e-11 * v.abs());
        }
    }
}
