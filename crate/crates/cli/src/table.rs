//! Parameter sweeps of closed formulas, rendered as CSV or JSON.

use std::io::Write;
use std::ops::RangeInclusive;

use anyhow::{bail, Result};
use clap::ValueEnum;
use griffiths_core::formulas::structural::{alpha_nr, beta_closed};
use griffiths_core::formulas::{shift_coeffs, F_heights};
use griffiths_core::pool::pool;
use rayon::prelude::*;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    /// `F_+`, `F_-`, `F_stab` over the `(d, N)` grid.
    #[value(name = "F")]
    F,
    /// Critical-point coefficients `u^-`, `u^+`.
    U,
    /// Pencil coefficients `v^-`, `v^+`.
    V,
    /// Blow-up coefficients `alpha(N, r)`, `r = 1..=N`.
    Alpha,
    /// `beta(N)`.
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

/// Header plus rows of exact `p/q` cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Parses `a..b` (inclusive), `a..=b` or a single `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid bound `{t}` in range `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Rows are ordered `d`-major, then `N`, independent of scheduling.
pub fn build_table(formula: Formula, d: Option<RangeInclusive<u32>>, n: RangeInclusive<u32>) -> Result<Table> {
    if *n.start() < 1 {
        bail!("N must be at least 1");
    }
    let ns: Vec<u32> = n.collect();
    let rows: Vec<Vec<String>> = match formula {
        Formula::F => {
            let Some(d) = d else { bail!("--d is required for --formula F") };
            if *d.start() < 1 {
                bail!("d must be at least 1");
            }
            let grid: Vec<(u32, u32)> = d.flat_map(|d| ns.iter().map(move |&n| (d, n))).collect();
            pool().install(|| {
                grid.par_iter()
                    .map(|&(d, n)| {
                        let f = F_heights(d, n);
                        vec![d.to_string(), n.to_string(), f.f_plus.to_string(), f.f_minus.to_string(), f.f_stab.to_string()]
                    })
                    .collect()
            })
        }
        Formula::U | Formula::V => ns
            .iter()
            .map(|&n| {
                let s = shift_coeffs(n);
                let (lo, hi) = if formula == Formula::U { (s.u_minus, s.u_plus) } else { (s.v_minus, s.v_plus) };
                vec![n.to_string(), lo.to_string(), hi.to_string()]
            })
            .collect(),
        Formula::Alpha => pool().install(|| {
            ns.par_iter()
                .flat_map_iter(|&n| (1..=n).map(move |r| vec![n.to_string(), r.to_string(), alpha_nr(n, r).to_string()]))
                .collect()
        }),
        Formula::Beta => ns.iter().map(|&n| vec![n.to_string(), beta_closed(n).to_string()]).collect(),
    };
    let header = match formula {
        Formula::F => vec!["d", "N", "F_plus", "F_minus", "F_stab"],
        Formula::U => vec!["N", "u_minus", "u_plus"],
        Formula::V => vec!["N", "v_minus", "v_plus"],
        Formula::Alpha => vec!["N", "r", "alpha"],
        Formula::Beta => vec!["N", "beta"],
    };
    Ok(Table { header, rows })
}

pub fn write_table(t: &Table, format: TableFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&t.header)?;
            for row in &t.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        t.header.iter().zip(row).map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect();
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..10").unwrap(), 1..=10);
        assert_eq!(parse_range("2..=3").unwrap(), 2..=3);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn f_grid_shape_and_order() {
        let t = build_table(Formula::F, Some(1..=5), 1..=4).unwrap();
        assert_eq!(t.rows.len(), 20);
        assert_eq!(t.rows[0][..2], ["1", "1"]);
        assert_eq!(t.rows[19][..2], ["5", "4"]);
        // (d, N) = (2, 3)
        assert_eq!(t.rows[6], ["2", "3", "2", "-2", "0"]);
    }

    #[test]
    fn alpha_rows() {
        let t = build_table(Formula::Alpha, None, 1..=3).unwrap();
        assert_eq!(t.rows.len(), 6);
        assert!(build_table(Formula::F, None, 1..=3).is_err());
    }

    #[test]
    fn csv_and_json_render_exact_rationals() {
        let t = build_table(Formula::U, None, 1..=2).unwrap();
        let mut csv = Vec::new();
        write_table(&t, TableFormat::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "N,u_minus,u_plus\n1,1/12,1/12\n2,1/12,1/12\n");
        let mut json = Vec::new();
        write_table(&t, TableFormat::Json, &mut json).unwrap();
        let v: Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(v[0]["u_minus"], "1/12");
    }
}
