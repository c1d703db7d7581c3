//! Table and report formatting. Numbers go out with 12 significant digits and
//! `.` as the decimal separator; optional values print as empty cells.

use nuspectra::batch::{SpectrumRow, SweepRow, WavefunctionTable};
use nuspectra::validate::{Report, Status};
use serde::Serialize;

/// `%.12g`: fixed notation for decimal exponents in [−4, 12), scientific
/// otherwise, trailing zeros trimmed.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = usize::try_from(11 - exp).unwrap_or(0);
        trim(&format!("{v:.decimals$}")).to_string()
    } else {
        format!("{}e{}{:02}", trim(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

const SPECTRUM_HEADER: [&str; 9] = [
    "n",
    "l",
    "l_eff",
    "D",
    "E_analytic",
    "E_numeric",
    "rel_diff",
    "bound_flags",
    "error",
];

fn spectrum_cells(r: &SpectrumRow) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.l.to_string(),
        num(r.l_eff),
        r.dim.to_string(),
        opt(r.e_analytic),
        opt(r.e_numeric),
        opt(r.rel_diff),
        r.bound_flags.clone(),
        r.error.clone().unwrap_or_default(),
    ]
}

pub fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    csv_text(&SPECTRUM_HEADER, rows.iter().map(spectrum_cells))
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut header = vec!["param", "value"];
    header.extend(SPECTRUM_HEADER);
    header.extend(["E_reference", "reference_error"]);
    csv_text(
        &header,
        rows.iter().map(|r| {
            let mut cells = vec![r.param.to_string(), num(r.value)];
            cells.extend(spectrum_cells(&r.row));
            cells.push(opt(r.reference));
            cells.push(opt(r.reference_error));
            cells
        }),
    )
}

/// A `#` line with the state's energy, Ω_n and Jacobi indices, then (r, g).
pub fn wavefunction_csv(t: &WavefunctionTable, l: u32, dim: u32) -> String {
    let s = &t.state;
    let meta = format!(
        "# n={},l={},D={},energy={},omega={},jacobi_a={},jacobi_b={}\n",
        s.n,
        l,
        dim,
        num(s.energy),
        num(s.omega),
        num(s.jacobi_a),
        num(s.jacobi_b)
    );
    meta + &csv_text(&["r", "g"], t.r.iter().zip(&t.g).map(|(r, g)| vec![num(*r), num(*g)]))
}

pub fn report_csv(report: &Report) -> String {
    csv_text(
        &["check", "status", "measured", "tolerance", "reference"],
        report.checks.iter().map(|c| {
            vec![
                c.check.clone(),
                match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Info => "info",
                }
                .to_string(),
                num(c.measured),
                num(c.tolerance),
                c.reference.clone(),
            ]
        }),
    )
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(11.849492048913), "11.8494920489");
        assert_eq!(num(-2.75), "-2.75");
        assert_eq!(num(1e-7), "1e-07");
        assert_eq!(num(1.23456789012345e15), "1.23456789012e+15");
        assert_eq!(num(0.000123), "0.000123");
        assert_eq!(num(1.09e-5), "1.09e-05");
        assert_eq!(num(100.0), "100");
        assert_eq!(num(f64::NAN), "nan");
    }
}
