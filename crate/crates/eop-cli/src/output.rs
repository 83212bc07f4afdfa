//! Output plumbing: `%.17g`-equivalent numeric formatting, CSV assembly for
//! sampled curves, and schema-validated canonical JSON reports.

use std::path::Path;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::Value;

use eop_core::report::{canonical_json, envelope, validate, DefaultsEcho};
use eop_core::{EopError, Result};

/// Shipped report schema; every JSON document is validated against it before
/// being written.
pub fn report_schema() -> &'static Value {
    static SCHEMA: OnceLock<Value> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        serde_json::from_str(include_str!("../schema/report.schema.json"))
            .expect("shipped schema parses")
    })
}

/// Format a float with 17 significant digits, trimming trailing zeros —
/// the behaviour of C's `%.17g` up to exponent spelling (`1e20`, not
/// `1e+20`).  17 significant digits round-trip every finite f64 exactly.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific form has an exponent");
    let exp: i32 = exp.parse().expect("exponent parses");
    if !(-4..17).contains(&exp) {
        format!("{}e{exp}", trim_trailing_zeros(mantissa))
    } else {
        let decimals = (16 - exp) as usize;
        trim_trailing_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// One sampled point of a curve.
pub struct CsvRow {
    pub x: f64,
    pub re: f64,
    pub im: f64,
}

/// Assemble the CSV document: header `x,value_re,value_im`, one row per
/// sample, LF line endings throughout.
pub fn csv_document(rows: &[CsvRow]) -> String {
    let mut out = String::with_capacity(32 * (rows.len() + 1));
    out.push_str("x,value_re,value_im\n");
    for row in rows {
        out.push_str(&g17(row.x));
        out.push(',');
        out.push_str(&g17(row.re));
        out.push(',');
        out.push_str(&g17(row.im));
        out.push('\n');
    }
    out
}

/// Render a payload into the canonical envelope, validating it against the
/// shipped schema first.
pub fn render_report<T: Serialize>(
    kind: &str,
    defaults: &DefaultsEcho,
    payload: &T,
) -> Result<String> {
    let env = envelope(kind, defaults, payload)?;
    validate(&env, report_schema())?;
    Ok(canonical_json(&env))
}

/// Write text to a file, or to stdout when no path is given.
pub fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| EopError::Io(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_formats_and_round_trips() {
        assert_eq!(g17(0.0), "0");
        assert_eq!(g17(-0.0), "0");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(-2.0), "-2");
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(1e20), "1e20");
        assert_eq!(g17(1.5e-5), "1.5e-5");
        assert_eq!(g17(1e16), "10000000000000000");
        assert_eq!(g17(1e17), "1e17");
        assert_eq!(g17(0.0001), "0.0001");
        assert_eq!(g17(1e-5), "1e-5");
        for &x in &[
            std::f64::consts::PI,
            -1.0 / 3.0,
            6.02214076e23,
            -8.573214099741124,
            5.1820137387374855e-5,
            f64::MIN_POSITIVE,
            f64::MAX,
        ] {
            let s = g17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s} does not round-trip");
        }
    }

    #[test]
    fn csv_layout_is_exact() {
        let doc = csv_document(&[
            CsvRow { x: 0.5, re: 1.0, im: 0.0 },
            CsvRow { x: 1.5, re: -0.25, im: 2.0 },
        ]);
        assert_eq!(doc, "x,value_re,value_im\n0.5,1,0\n1.5,-0.25,2\n");
        assert!(!doc.contains('\r'));
    }

    #[test]
    fn schema_loads_and_validates_a_report() {
        let defaults = DefaultsEcho {
            family: None,
            omega: 1.0,
            g: 4.0,
            f1: 2.0,
            m: 1,
            p: 1,
            nmax: 3,
            lmax: 2,
            grid_points: 2048,
            format: "json".into(),
            seed: 7,
        };
        #[derive(Serialize)]
        struct P {
            pass: bool,
        }
        let text = render_report("verify", &defaults, &P { pass: true }).unwrap();
        assert!(text.ends_with('\n'));
        // A payload without `pass` must be rejected by the shipped schema.
        assert!(render_report("verify", &defaults, &serde_json::json!({"x": 1})).is_err());
        // Unknown report kinds must be rejected.
        assert!(render_report("bogus", &defaults, &P { pass: true }).is_err());
    }
}
