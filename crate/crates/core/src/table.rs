//! Tabulated counts for every partition up to given bounds.

use serde::Serialize;

use crate::error::Result;
use crate::factorization::{count_by_cycle_type, FactorizationCount};
use crate::matching_seq::count_matching_seqs;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub lambda: String,
    pub raw_count: u64,
    pub hurwitz_num: u64,
    pub hurwitz_den: u64,
    pub matching_count: u64,
}

/// Rows ordered by `n`, then `m`, then partitions in reverse-lex order.
pub fn table_rows(n_max: usize, m_max: usize, workers: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for m in 0..=m_max {
            let counts = count_by_cycle_type(m, n, workers)?;
            for lambda in Partition::all(n) {
                let value = FactorizationCount::new(counts.get(&lambda), n)?;
                rows.push(TableRow {
                    n,
                    m,
                    lambda: lambda.to_string(),
                    raw_count: value.raw_count,
                    hurwitz_num: *value.value.numer(),
                    hurwitz_den: *value.value.denom(),
                    matching_count: count_matching_seqs(m, &lambda)?,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = table_rows(2, 1, 1).unwrap();
        let brief: Vec<(usize, usize, &str, u64, u64)> = rows
            .iter()
            .map(|r| (r.n, r.m, r.lambda.as_str(), r.raw_count, r.matching_count))
            .collect();
        assert_eq!(
            brief,
            vec![
                (1, 0, "1", 1, 1),
                (1, 1, "1", 0, 0),
                (2, 0, "2", 0, 0),
                (2, 0, "1,1", 1, 1),
                (2, 1, "2", 4, 2),
                (2, 1, "1,1", 0, 0),
            ]
        );
        assert_eq!((rows[4].hurwitz_num, rows[4].hurwitz_den), (2, 1));
    }
}
