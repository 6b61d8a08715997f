use std::io::Write;

use serde::Serialize;

use crate::measures::QuantityReport;

pub const SIGNIFICANT_DIGITS: i32 = 9;
pub const CSV_HEADER: [&str; 9] = ["r", "q_l", "P", "C", "N", "D", "P_closed", "C_closed", "N_closed"];

/// Plain decimal with nine significant digits, trailing zeros trimmed.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let mut decimals = (SIGNIFICANT_DIGITS - 1 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit (9.99… -> 10.0…)
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded.abs() >= 10f64.powi(magnitude + 1) && decimals > 0 {
        decimals -= 1;
        s = format!("{x:.decimals$}");
    }
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Value after the same rounding as [`format_sig`].
pub fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

/// One output row, keyed by the CSV column names.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Row {
    pub r: f64,
    pub q_l: f64,
    #[serde(rename = "P")]
    pub p: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "D")]
    pub d: Option<f64>,
    #[serde(rename = "P_closed")]
    pub p_closed: f64,
    #[serde(rename = "C_closed")]
    pub c_closed: f64,
    #[serde(rename = "N_closed")]
    pub n_closed: f64,
}

impl From<&QuantityReport> for Row {
    fn from(q: &QuantityReport) -> Self {
        Self {
            r: q.r,
            q_l: q.q_l,
            p: q.p_success,
            c: q.capacity_bits,
            n: q.negativity_bits,
            d: q.discord_bits(),
            p_closed: q.p_success_closed,
            c_closed: q.capacity_closed,
            n_closed: q.negativity_closed,
        }
    }
}

impl Row {
    fn cells(&self) -> [String; 9] {
        [
            format_sig(self.r),
            format_sig(self.q_l),
            format_sig(self.p),
            format_sig(self.c),
            format_sig(self.n),
            self.d.map(format_sig).unwrap_or_default(),
            format_sig(self.p_closed),
            format_sig(self.c_closed),
            format_sig(self.n_closed),
        ]
    }

    fn rounded(&self) -> Self {
        Self {
            r: round_sig(self.r),
            q_l: round_sig(self.q_l),
            p: round_sig(self.p),
            c: round_sig(self.c),
            n: round_sig(self.n),
            d: self.d.map(round_sig),
            p_closed: round_sig(self.p_closed),
            c_closed: round_sig(self.c_closed),
            n_closed: round_sig(self.n_closed),
        }
    }
}

pub fn write_csv<W: Write>(out: W, reports: &[QuantityReport]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for q in reports {
        w.write_record(Row::from(q).cells())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, reports: &[QuantityReport]) -> std::io::Result<()> {
    let rows: Vec<Row> = reports.iter().map(|q| Row::from(q).rounded()).collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)
}

/// Human-readable rendering of a single point.
pub fn write_report<W: Write>(mut out: W, q: &QuantityReport) -> std::io::Result<()> {
    let line = |label: &str, numeric: f64, closed: Option<f64>| match closed {
        Some(c) => format!("{label:<24}{:>16}   closed form {}\n", format_sig(numeric), format_sig(c)),
        None => format!("{label:<24}{:>16}\n", format_sig(numeric)),
    };
    let mut s = String::new();
    s += &line("r", q.r, None);
    s += &line("q_l", q.q_l, None);
    s += &line("P (success)", q.p_success, Some(q.p_success_closed));
    s += &line("C (capacity, bits)", q.capacity_bits, Some(q.capacity_closed));
    s += &line("N (log-negativity)", q.negativity_bits, Some(q.negativity_closed));
    s += &line("I (mutual info, bits)", q.mutual_info_bits, Some(q.mutual_info_closed));
    match q.discord {
        Some(d) => {
            s += &line("J (classical corr)", d.classical_corr_bits, None);
            s += &line("D (discord, bits)", d.discord_bits, None);
            s += &line("measurement theta", d.theta, None);
            s += &line("measurement phi", d.phi, None);
        }
        None => s += "D (discord, bits)       skipped\n",
    }
    out.write_all(s.as_bytes())
}
