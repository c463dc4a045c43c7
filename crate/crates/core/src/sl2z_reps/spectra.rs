//! `t`-spectra of the irreducible representations of degree 2, 3 and 4 whose
//! level is a prime power.

use serde::Serialize;

use super::Parity;
use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumRecord {
    pub degree: usize,
    pub parity: Parity,
    pub level: u64,
    /// Each spectrum lists its eigenvalues in table order.
    pub spectra: Vec<Vec<RootOfUnity>>,
}

use Parity::{Even, Odd};

/// Rows as (degree, parity, level, spectra), each eigenvalue `ζ_level^a`
/// written as its exponent `a`.
const TABLE: &[(usize, Parity, u64, &[&[u64]])] = &[
    (2, Even, 2, &[&[0, 1]]),
    (2, Odd, 3, &[&[0, 2], &[1, 1], &[2, 0]]),
    (2, Odd, 4, &[&[1, 3]]),
    (2, Odd, 5, &[&[1, 4], &[2, 3]]),
    (2, Even, 8, &[&[5, 7], &[1, 3]]),
    (2, Odd, 8, &[&[3, 5], &[7, 1]]),
    (3, Even, 3, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]),
    (3, Odd, 4, &[&[1, 2, 0], &[3, 0, 2]]),
    (3, Even, 4, &[&[2, 3, 1], &[0, 1, 3]]),
    (3, Even, 5, &[&[0, 1, 4], &[0, 2, 3]]),
    (3, Even, 7, &[&[2, 1, 4], &[5, 6, 3]]),
    (3, Odd, 8, &[&[4, 5, 1], &[0, 1, 5], &[4, 7, 3], &[0, 3, 7]]),
    (3, Even, 8, &[&[6, 7, 3], &[2, 3, 7], &[2, 5, 1], &[6, 1, 5]]),
    (
        3,
        Odd,
        16,
        &[
            &[10, 1, 9],
            &[2, 9, 1],
            &[2, 5, 13],
            &[10, 13, 5],
            &[14, 3, 11],
            &[6, 11, 3],
            &[6, 15, 7],
            &[14, 15, 7],
        ],
    ),
    (
        3,
        Even,
        16,
        &[
            &[14, 5, 13],
            &[6, 13, 5],
            &[6, 9, 1],
            &[14, 1, 9],
            &[10, 15, 7],
            &[2, 7, 15],
            &[10, 3, 11],
            &[2, 11, 3],
        ],
    ),
    (4, Odd, 5, &[&[1, 2, 3, 4]]),
    (4, Even, 5, &[&[1, 2, 3, 4]]),
    (4, Odd, 7, &[&[0, 1, 4, 2]]),
    (4, Odd, 7, &[&[0, 6, 3, 5]]),
    (4, Odd, 8, &[&[1, 3, 5, 7]]),
    (4, Even, 8, &[&[1, 3, 5, 7]]),
    (
        4,
        Odd,
        9,
        &[
            &[1, 4, 7, 3],
            &[4, 7, 1, 6],
            &[7, 1, 4, 0],
            &[8, 5, 2, 6],
            &[2, 8, 5, 0],
            &[5, 2, 8, 3],
        ],
    ),
    (
        4,
        Even,
        9,
        &[
            &[1, 4, 7, 3],
            &[4, 7, 1, 6],
            &[7, 1, 4, 0],
            &[8, 5, 2, 6],
            &[2, 8, 5, 0],
            &[5, 2, 8, 3],
        ],
    ),
];

fn record(row: &(usize, Parity, u64, &[&[u64]])) -> SpectrumRecord {
    let (degree, parity, level, spectra) = *row;
    SpectrumRecord {
        degree,
        parity,
        level,
        spectra: spectra
            .iter()
            .map(|s| s.iter().map(|&a| RootOfUnity::new(a as i64, level)).collect())
            .collect(),
    }
}

/// Every row of the table, in order.
pub fn spectra_table() -> Vec<SpectrumRecord> {
    TABLE.iter().map(record).collect()
}

/// Rows with the given degree, level and parity.
pub fn spectra_lookup(degree: usize, level: u64, parity: Parity) -> Result<Vec<SpectrumRecord>> {
    let rows: Vec<SpectrumRecord> = TABLE
        .iter()
        .filter(|(d, p, l, _)| *d == degree && *l == level && *p == parity)
        .map(record)
        .collect();
    if rows.is_empty() {
        return Err(Error::NotTabulated(format!(
            "degree {degree}, level {level}, {parity}"
        )));
    }
    Ok(rows)
}
