use std::fs::{self, File};
use std::io::Write;
use std::path::Path;

use ministokes::analysis::{ErrorRatios, ErrorReport, Rates, RATE_COLUMNS};

use crate::CliError;

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub const RESULT_COLUMNS: [&str; 17] = [
    "problem", "h", "vertices", "triangles", "err_u_l2", "err_u_h1", "err_p_l2", "err_ihu_l2", "err_ihu_h1",
    "err_ul_l2", "err_ul_h1", "div_uh", "div_uhl", "iterations", "residual", "converged", "status",
];

pub struct LevelRow {
    pub problem: usize,
    pub h0: f64,
    pub outcome: Result<ErrorReport, String>,
}

impl LevelRow {
    pub fn failed(&self) -> bool {
        !matches!(&self.outcome, Ok(r) if r.converged)
    }

    fn record(&self) -> Vec<String> {
        match &self.outcome {
            Ok(r) => {
                let mut v = vec![r.problem.to_string(), num(r.h), r.vertices.to_string(), r.triangles.to_string()];
                v.extend(
                    [
                        r.err_u_l2, r.err_u_h1, r.err_p_l2, r.err_ihu_l2, r.err_ihu_h1, r.err_ul_l2, r.err_ul_h1,
                        r.div_uh, r.div_uhl,
                    ]
                    .map(num),
                );
                v.push(r.iterations.to_string());
                v.push(num(r.residual));
                v.push(r.converged.to_string());
                v.push(if r.converged { "ok" } else { "not converged" }.into());
                v
            }
            Err(msg) => {
                let mut v = vec![self.problem.to_string(), num(f64::NAN), "0".into(), "0".into()];
                v.extend(std::iter::repeat_n(num(f64::NAN), 9));
                v.extend(["0".into(), num(f64::NAN), "false".into(), format!("h0={}: {msg}", num(self.h0))]);
                v
            }
        }
    }
}

pub struct RateRow {
    pub problem: usize,
    pub levels: usize,
    pub outcome: Result<Rates, String>,
}

pub fn write_results<W: Write>(rows: &[LevelRow], w: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(RESULT_COLUMNS)?;
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush().map_err(|e| io_error("results", e))?;
    Ok(())
}

pub fn write_rates<W: Write>(rows: &[RateRow], w: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(w);
    let mut header = vec!["problem", "levels"];
    header.extend(RATE_COLUMNS);
    header.push("status");
    w.write_record(&header)?;
    for r in rows {
        let mut v = vec![r.problem.to_string(), r.levels.to_string()];
        match &r.outcome {
            Ok(rates) => {
                v.extend(rate_values(rates).map(num));
                v.push("ok".into());
            }
            Err(msg) => {
                v.extend(std::iter::repeat_n(num(f64::NAN), RATE_COLUMNS.len()));
                v.push(msg.clone());
            }
        }
        w.write_record(&v)?;
    }
    w.flush().map_err(|e| io_error("rates", e))?;
    Ok(())
}

pub fn write_ratios<W: Write>(rows: &[(usize, f64, ErrorRatios)], w: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(["problem", "h", "ratio_h1", "ratio_l2", "ratio_div"])?;
    for (p, h, r) in rows {
        w.write_record([p.to_string(), num(*h), num(r.h1), num(r.l2), num(r.div)])?;
    }
    w.flush().map_err(|e| io_error("ratios", e))?;
    Ok(())
}

pub fn rate_values(r: &Rates) -> [f64; 9] {
    [r.u_l2, r.u_h1, r.p_l2, r.ihu_l2, r.ihu_h1, r.ul_l2, r.ul_h1, r.div_uh, r.div_uhl]
}

pub fn io_error(path: impl AsRef<Path>, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.as_ref().display().to_string(),
        source,
    }
}

pub fn create(path: &Path) -> Result<File, CliError> {
    File::create(path).map_err(|e| io_error(path, e))
}

pub fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|e| io_error(path, e))
}

/// `key = value` lines of an error report.
pub fn report_text(r: &ErrorReport) -> String {
    let fields: [(&str, String); 20] = [
        ("problem", r.problem.to_string()),
        ("h", num(r.h)),
        ("vertices", r.vertices.to_string()),
        ("triangles", r.triangles.to_string()),
        ("err_u_l2", num(r.err_u_l2)),
        ("err_u_h1", num(r.err_u_h1)),
        ("err_u_h1_semi", num(r.err_u_h1_semi)),
        ("err_p_l2", num(r.err_p_l2)),
        ("err_ihu_l2", num(r.err_ihu_l2)),
        ("err_ihu_h1", num(r.err_ihu_h1)),
        ("err_ihu_h1_semi", num(r.err_ihu_h1_semi)),
        ("err_ul_l2", num(r.err_ul_l2)),
        ("err_ul_h1", num(r.err_ul_h1)),
        ("err_ul_h1_semi", num(r.err_ul_h1_semi)),
        ("div_uh", num(r.div_uh)),
        ("div_uhl", num(r.div_uhl)),
        ("iterations", r.iterations.to_string()),
        ("residual", num(r.residual)),
        ("converged", r.converged.to_string()),
        ("method", format!("{:?}", r.method)),
    ];
    fields.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.0f64.sqrt() * 1e-13, 6.02e23, f64::MIN_POSITIVE] {
            let s = num(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
            let mantissa = s.split('e').next().unwrap().replace(['.', '-'], "");
            assert_eq!(mantissa.len(), 17);
        }
    }

    #[test]
    fn failed_row_has_every_column() {
        let row = LevelRow {
            problem: 3,
            h0: 0.1,
            outcome: Err("boom".into()),
        };
        assert!(row.failed());
        assert_eq!(row.record().len(), RESULT_COLUMNS.len());
    }
}
