//! CSV text helpers. Floats use 12 significant digits in the style of C's
//! `%.12g`; lines end with LF.

use std::fmt::Write;

const SIGNIFICANT: usize = 12;

/// Formats `v` like `printf("%.12g", v)`.
pub fn fmt_float(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -4 || exp >= SIGNIFICANT as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (SIGNIFICANT as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Accumulates a CSV document: one `#` comment line, a header, then rows.
#[derive(Debug, Clone)]
pub struct CsvDocument {
    text: String,
    columns: usize,
    rows: usize,
}

impl CsvDocument {
    pub fn new(comment: &str, header: &[&str]) -> Self {
        let mut text = String::new();
        writeln!(text, "# {comment}").unwrap();
        writeln!(text, "{}", header.join(",")).unwrap();
        Self {
            text,
            columns: header.len(),
            rows: 0,
        }
    }

    pub fn push(&mut self, fields: &[String]) {
        assert_eq!(fields.len(), self.columns, "row width differs from header");
        writeln!(self.text, "{}", fields.join(",")).unwrap();
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (1.0, "1"),
            (0.5, "0.5"),
            (2.0 / 3.0, "0.666666666667"),
            (1999.985536575481, "1999.98553658"),
            (1e-5, "1e-05"),
            (1.2345e-7, "1.2345e-07"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (-0.25, "-0.25"),
            (0.0001, "0.0001"),
            (0.0, "0"),
        ];
        for (v, s) in cases {
            assert_eq!(fmt_float(v), s, "{v}");
        }
    }

    #[test]
    fn document_layout() {
        let mut doc = CsvDocument::new("cmd x", &["a", "b"]);
        doc.push(&["1".into(), "2".into()]);
        assert_eq!(doc.rows(), 1);
        assert_eq!(doc.into_string(), "# cmd x\na,b\n1,2\n");
    }
}
