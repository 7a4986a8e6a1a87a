//! Data-table generation over a residue class, with optional per-row
//! parallelism.
//!
//! The coefficient recursion is inherently sequential in n, so a single
//! stream produces the rows; the per-row work (Jones assembly, rank table,
//! fit, deviations) fans out to workers. Results merge in n-order, so the
//! output is byte-identical for any thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use serde_json::json;

use weavekh::gaussfit::{analyze_line, sci6};
use weavekh::hecke::{rows, HeckeCoeffs};
use weavekh::jones::jones_from_row;
use weavekh::khovanov::table_for;

use crate::output::{sig6, CliError};

pub const CSV_HEADER: &str =
    "n,total_dimension,dim_H01,sigma,l2_comparison,l1_comparison,total_dimension_sci,dim_H01_sci";

/// Integers longer than this render an extra scientific-notation column.
const SCI_DIGIT_THRESHOLD: usize = 19;

pub struct TableRow {
    pub n: u32,
    pub total: BigUint,
    /// Knight-paired H^{0,1} value, the published-table convention.
    pub h01: BigUint,
    pub sigma: f64,
    pub l2: f64,
    pub l1: f64,
}

fn compute_row(coeffs: &HeckeCoeffs) -> Result<TableRow, CliError> {
    let jones = jones_from_row(coeffs);
    let table = table_for(&jones)?;
    table.check_support()?;
    table.check_euler(&jones.v)?;
    let (_, fit) = analyze_line(coeffs.n(), table.betti_line())?;
    Ok(TableRow {
        n: coeffs.n(),
        total: table.total_rank_line(),
        h01: table.h01_paired(),
        sigma: fit.sigma,
        l2: fit.l2,
        l1: fit.l1,
    })
}

pub fn compute_table(
    residue: u32,
    start: u32,
    end: u32,
    threads: usize,
) -> Result<Vec<TableRow>, CliError> {
    let selected: Vec<HeckeCoeffs> = rows()
        .take(end as usize)
        .filter(|r| r.n() >= start && r.n() % 3 == residue)
        .collect();

    let threads = if threads == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        threads
    };

    if threads <= 1 || selected.len() <= 1 {
        return selected.iter().map(compute_row).collect();
    }

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<TableRow, CliError>>>> =
        Mutex::new((0..selected.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.min(selected.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= selected.len() {
                    break;
                }
                let row = compute_row(&selected[idx]);
                results.lock().unwrap()[idx] = Some(row);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("worker filled every slot"))
        .collect()
}

fn sci_cell(x: &BigUint) -> String {
    let s = x.to_string();
    if s.len() > SCI_DIGIT_THRESHOLD {
        sci6(x)
    } else {
        String::new()
    }
}

pub fn csv_row(row: &TableRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        row.n,
        row.total,
        row.h01,
        sig6(row.sigma),
        sig6(row.l2),
        sig6(row.l1),
        sci_cell(&row.total),
        sci_cell(&row.h01),
    )
}

pub fn json_row(row: &TableRow) -> serde_json::Value {
    json!({
        "n": row.n,
        "total_dimension": row.total.to_string(),
        "dim_H01": row.h01.to_string(),
        "sigma": row.sigma,
        "l2_comparison": row.l2,
        "l1_comparison": row.l1,
    })
}
