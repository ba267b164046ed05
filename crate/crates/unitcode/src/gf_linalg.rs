//! Exact linear algebra over GF(2) and GF(p), plus incidence-matrix
//! construction. GF(2) rows are bit-packed into u64 words so elimination
//! and the downstream codeword enumeration share word-wise XOR and
//! popcount as their primitives.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::is_prime;
use crate::unitgraph::UnitGraph;

/// Largest characteristic that fits the byte-entry representation.
const MAX_ODD_CHAR: u64 = 251;

/// Serializable dump shared by both matrix types: entries as plain
/// integers, row-major, with the field characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub data: Vec<Vec<u8>>,
}

/// 0/1 matrix over GF(2) with bit-packed rows (column c lives at bit
/// c % 64 of word c / 64; padding bits are zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    row_data: Vec<Vec<u64>>,
}

/// XOR `src` into `dst`, word-wise. Both slices must have equal length.
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Hamming weight of a packed row: sum of per-word popcounts.
pub(crate) fn weight_of(words: &[u64]) -> u64 {
    words.iter().map(|w| w.count_ones() as u64).sum()
}

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl BinMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_data: vec![vec![0; words_for(cols)]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.row_data[r][c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let (word, bit) = (c / 64, c % 64);
        if value {
            self.row_data[r][word] |= 1 << bit;
        } else {
            self.row_data[r][word] &= !(1 << bit);
        }
    }

    /// Packed words of one row.
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.row_data[r]
    }

    pub fn row_weight(&self, r: usize) -> u64 {
        weight_of(&self.row_data[r])
    }

    /// Rank over GF(2) by elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut work = self.row_data.clone();
        rref_binary(&mut work, self.cols)
    }

    /// Deterministic reduced row-echelon basis of the row space:
    /// pivots are chosen column-by-column in canonical column order,
    /// taking the first row with a nonzero entry. Returns rank rows.
    pub fn row_space_basis(&self) -> BinMatrix {
        let mut work = self.row_data.clone();
        let rank = rref_binary(&mut work, self.cols);
        work.truncate(rank);
        BinMatrix {
            rows: rank,
            cols: self.cols,
            row_data: work,
        }
    }

    /// Reinterpret the 0/1 entries over an odd prime field.
    pub fn lift_to_prime(&self, q: u64) -> Result<PrimeMatrix> {
        if q == 2 || !is_prime(q) || q > MAX_ODD_CHAR {
            return Err(Error::InvalidArgument(format!(
                "characteristic must be an odd prime at most {MAX_ODD_CHAR}, got {q}"
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries.push(u8::from(self.get(r, c)));
            }
        }
        Ok(PrimeMatrix {
            rows: self.rows,
            cols: self.cols,
            characteristic: q as u8,
            entries,
        })
    }

    /// One line of 0/1 characters per row.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            rows: self.rows,
            cols: self.cols,
            characteristic: 2,
            data: (0..self.rows)
                .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
                .collect(),
        }
    }
}

/// In-place reduced row echelon form of packed GF(2) rows; returns the
/// rank. After the call the first `rank` rows are the canonical basis.
fn rref_binary(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..cols {
        let (word, bit) = (col / 64, col % 64);
        let Some(found) =
            (pivot_row..rows.len()).find(|&r| rows[r][word] >> bit & 1 == 1)
        else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[word] >> bit & 1 == 1 {
                xor_into(row, &pivot);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// Matrix over an odd prime field GF(q), q ≤ 251, entries stored as
/// reduced byte residues in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeMatrix {
    rows: usize,
    cols: usize,
    characteristic: u8,
    entries: Vec<u8>,
}

impl PrimeMatrix {
    pub fn from_entries(
        rows: usize,
        cols: usize,
        characteristic: u64,
        entries: Vec<u8>,
    ) -> Result<Self> {
        if characteristic == 2 || !is_prime(characteristic) || characteristic > MAX_ODD_CHAR {
            return Err(Error::InvalidArgument(format!(
                "characteristic must be an odd prime at most {MAX_ODD_CHAR}, got {characteristic}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let q = characteristic as u8;
        if let Some(bad) = entries.iter().find(|&&e| e >= q) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} is not reduced mod {q}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            characteristic: q,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> u8 {
        self.characteristic
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    /// Row r as a slice of reduced residues.
    pub(crate) fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank over GF(q) by elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<u8>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        rref_prime(&mut work, self.cols, self.characteristic)
    }

    /// Deterministic reduced row-echelon basis, as for BinMatrix:
    /// canonical column order, first nonzero row as pivot, pivot
    /// normalized to 1. Returns rank rows.
    pub fn row_space_basis(&self) -> PrimeMatrix {
        let mut work: Vec<Vec<u8>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let rank = rref_prime(&mut work, self.cols, self.characteristic);
        work.truncate(rank);
        PrimeMatrix {
            rows: rank,
            cols: self.cols,
            characteristic: self.characteristic,
            entries: work.concat(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(u8::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            rows: self.rows,
            cols: self.cols,
            characteristic: self.characteristic as u64,
            data: (0..self.rows).map(|r| self.row(r).to_vec()).collect(),
        }
    }
}

/// a^(q−2) mod q: the multiplicative inverse for prime q and a ≠ 0.
fn inverse_mod(a: u8, q: u8) -> u8 {
    debug_assert!(a != 0 && a < q);
    let (mut base, mut exp, q32) = (a as u32, q as u32 - 2, q as u32);
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q32;
        }
        base = base * base % q32;
        exp >>= 1;
    }
    acc as u8
}

/// In-place reduced row echelon form over GF(q); returns the rank.
fn rref_prime(rows: &mut [Vec<u8>], cols: usize, q: u8) -> usize {
    let q32 = q as u32;
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        // Normalize the pivot entry to 1.
        let inv = inverse_mod(rows[pivot_row][col], q) as u32;
        for entry in rows[pivot_row].iter_mut() {
            *entry = (*entry as u32 * inv % q32) as u8;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col] as u32;
            if r == pivot_row || factor == 0 {
                continue;
            }
            // row −= factor · pivot
            for (entry, &p) in row.iter_mut().zip(&pivot) {
                *entry = ((*entry as u32 + (q32 - factor) * p as u32 % q32) % q32) as u8;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// The |V| × |E| vertex–edge incidence matrix of a unit graph: column j
/// (the j-th canonical edge (u, v)) has ones exactly at rows u and v.
pub fn incidence_matrix(g: &UnitGraph) -> BinMatrix {
    let mut m = BinMatrix::zero(g.vertex_count(), g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        m.set(u, j, true);
        m.set(v, j, true);
    }
    m
}
