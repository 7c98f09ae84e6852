//! Count tables over families of skew shapes, written as CSV.

use std::io;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::shapes::{sst_count_hook, SkewShape};
use crate::tableaux::{count_svt, enumerate_sst, signed_excess_count};
use crate::verify::{skew_family, with_threads};

pub const CSV_HEADER: &str = "shape,n,svt_count,parity,signed_count,sst_count,wall_time_ms";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub shape: String,
    pub n: u32,
    pub svt_count: String,
    pub parity: String,
    pub signed_count: String,
    pub sst_count: String,
    pub wall_time_ms: String,
}

/// |SST(θ, n)|: the hook product for straight shapes, enumeration otherwise.
pub fn sst_count(shape: &SkewShape, n: u32) -> BigUint {
    if shape.is_straight() {
        sst_count_hook(shape.outer(), n).expect("hook product is integral")
    } else {
        let count = enumerate_sst(shape, n).map(|it| it.count()).unwrap_or(0);
        BigUint::from(count)
    }
}

pub fn sweep_row(shape: &SkewShape, n: u32) -> SweepRow {
    let start = Instant::now();
    let svt = count_svt(shape, n);
    let signed = signed_excess_count(shape, n).unwrap_or_else(|_| BigInt::from(0));
    let sst = sst_count(shape, n);
    let elapsed = start.elapsed();
    SweepRow {
        shape: shape.to_string(),
        n,
        parity: if svt.bit(0) { "odd" } else { "even" }.to_string(),
        svt_count: svt.to_string(),
        signed_count: signed.to_string(),
        sst_count: sst.to_string(),
        wall_time_ms: format!("{:.3}", elapsed.as_secs_f64() * 1e3),
    }
}

/// One row per feasible `(λ/μ, n)` with `|λ| ≤ max_cells`, `n ≤ max_n`,
/// sorted by `|λ|`, shape text, `n`.
pub fn sweep(max_cells: u32, max_n: u32, threads: Option<usize>) -> Vec<SweepRow> {
    let family: Vec<_> = skew_family(max_cells, max_n).into_iter().filter(|(s, n)| s.is_feasible(*n)).collect();
    with_threads(threads, || family.par_iter().map(|(s, n)| sweep_row(s, *n)).collect())
}

pub fn write_csv<W: io::Write>(rows: &[SweepRow], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(io::Error::other)?;
    }
    w.flush()
}

pub fn read_csv<R: io::Read>(input: R) -> io::Result<Vec<SweepRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<Vec<SweepRow>, _>>()
        .map_err(io::Error::other)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let rows = sweep(2, 2, None);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let second = lines.next().unwrap();
        assert!(second.starts_with("(),1,1,odd,1,1,"), "{second}");
        assert!(text.contains("\"1,1\",2,1,odd,1,1,"));
        assert!(!text.contains("\"1,1\",1,"));
        assert_eq!(read_csv(text.as_bytes()).unwrap(), rows);
    }

    #[test]
    fn skew_sst_counts() {
        let shape: SkewShape = "2,1/1".parse().unwrap();
        // Two disconnected cells: n² fillings.
        assert_eq!(sst_count(&shape, 3), BigUint::from(9u32));
    }
}
