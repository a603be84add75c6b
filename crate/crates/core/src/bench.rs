//! Timing harness for recognition on generated instances.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::generators::gen_class_g_with;
use crate::recognition::{is_cycle_number_unique, Order};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    /// Fastest of the repeats.
    pub time: Duration,
    pub unique: bool,
}

/// Generates one instance of the multiedge-merging family with `n` vertices
/// (multiedge half-sizes up to `density`) and times the full recognition,
/// keeping the fastest of `repeats` runs.
pub fn time_recognition(n: usize, density: usize, seed: u64, repeats: usize) -> Result<BenchRow> {
    let (g, _) = gen_class_g_with(n, density, seed)?;
    let mut best = Duration::MAX;
    let mut unique = false;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        unique = is_cycle_number_unique(&g, Order::Ascending)?.unique;
        best = best.min(start.elapsed());
    }
    Ok(BenchRow {
        n,
        m: g.m(),
        time: best,
        unique,
    })
}

/// Least-squares slope of `ln t` against `ln n`.
pub fn loglog_slope(rows: &[BenchRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.time.as_secs_f64().max(1e-9).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// `n,m,seconds,unique` lines with a header.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,m,seconds,unique\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.6},{}\n",
            r.n,
            r.m,
            r.time.as_secs_f64(),
            r.unique
        ));
    }
    out
}
