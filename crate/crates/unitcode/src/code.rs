//! Linear codes spanned by incidence-matrix rows: exact dimension,
//! minimum distance, weight distribution, and MDS detection.
//!
//! Minimum distance and weight distribution are found by exhaustive
//! enumeration of all q^k codewords. Over GF(2) messages walk a
//! reflected Gray code, so each step updates the running codeword by a
//! single row XOR; over odd q a mixed-radix odometer adds one generator
//! row per processed digit. Enumeration may split into contiguous index
//! segments handled by worker threads; each segment is seeded by a
//! direct message–generator product and results reduce by minimum or
//! element-wise sum, so the answer is bit-identical to a sequential run.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf_linalg::{incidence_matrix, weight_of, words_for, xor_into, BinMatrix, PrimeMatrix};
use crate::unitgraph::UnitGraph;

/// Default cap on q^k codeword evaluations (covers G(Z_p) through
/// p = 29 and G(Z_2p) through p = 13 over GF(2)).
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// Hard size guard of the naive reference enumerator.
const NAIVE_GUARD: u64 = 1 << 20;

/// Generator matrix over the code's field.
#[derive(Debug, Clone)]
enum Generator {
    Binary(BinMatrix),
    Prime(PrimeMatrix),
}

/// A linear [n, k, d]_q code with its generator basis and lazily
/// computed, cached minimum distance and weight distribution.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Generator,
    length: usize,
    dimension: usize,
    min_distance: Option<u64>,
    weight_distribution: Option<Vec<u64>>,
}

/// Serializable code summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub d: u64,
    pub q: u64,
    pub mds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<Vec<u64>>,
}

/// Builds C_q(H): the code spanned by the rows of the incidence matrix
/// of `g` over GF(q). The generator is the deterministic row-space
/// basis, so length = |E| and dimension = rank.
pub fn code_from_incidence(g: &UnitGraph, q: u64) -> Result<LinearCode> {
    let incidence = incidence_matrix(g);
    let (generator, dimension) = if q == 2 {
        let basis = incidence.row_space_basis();
        let k = basis.rows();
        (Generator::Binary(basis), k)
    } else {
        // lift_to_prime validates that q is an odd prime in range.
        let basis = incidence.lift_to_prime(q)?.row_space_basis();
        let k = basis.rows();
        (Generator::Prime(basis), k)
    };
    Ok(LinearCode {
        generator,
        length: incidence.cols(),
        dimension,
        min_distance: None,
        weight_distribution: None,
    })
}

/// q^k, saturating far beyond any plausible budget.
fn enumeration_size(q: u64, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(q as u128);
    }
    acc
}

/// Worker count for parallel enumeration: the UNITCODE_THREADS
/// environment variable, with 0, absence, or garbage meaning auto.
fn thread_count_from_env() -> usize {
    match std::env::var("UNITCODE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        Some(t) if t > 0 => t,
        _ => std::thread::available_parallelism()
            .map(std::num::NonZeroUsize::get)
            .unwrap_or(1),
    }
}

/// Splits [0, total) into at most `threads` contiguous segments.
fn segment_bounds(total: u64, threads: usize) -> Vec<(u64, u64)> {
    let t = (threads.max(1) as u128).min(total as u128);
    (0..t)
        .map(|j| {
            let start = (total as u128 * j / t) as u64;
            let end = (total as u128 * (j + 1) / t) as u64;
            (start, end)
        })
        .filter(|(start, end)| start < end)
        .collect()
}

impl LinearCode {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn characteristic(&self) -> u64 {
        match &self.generator {
            Generator::Binary(_) => 2,
            Generator::Prime(m) => m.characteristic() as u64,
        }
    }

    /// Cached minimum distance, if it has been computed.
    pub fn cached_min_distance(&self) -> Option<u64> {
        self.min_distance
    }

    /// Exact minimum Hamming weight over all q^k − 1 nonzero codewords.
    /// Errors with the required enumeration size if q^k exceeds `budget`.
    pub fn minimum_distance(&mut self, budget: u64) -> Result<u64> {
        self.minimum_distance_with_threads(budget, thread_count_from_env())
    }

    pub(crate) fn minimum_distance_with_threads(
        &mut self,
        budget: u64,
        threads: usize,
    ) -> Result<u64> {
        if let Some(d) = self.min_distance {
            return Ok(d);
        }
        let total = self.check_budget(budget)? as u64;
        let bounds = segment_bounds(total, threads);
        let generator = &self.generator;
        let d = std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(start, end)| {
                    scope.spawn(move || {
                        let mut best = u64::MAX;
                        run_segment(generator, start, end, |index, weight| {
                            if index != 0 && weight < best {
                                best = weight;
                            }
                        });
                        best
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .fold(u64::MAX, u64::min)
        });
        debug_assert_ne!(d, u64::MAX);
        self.min_distance = Some(d);
        Ok(d)
    }

    /// Weight distribution A_0..A_n: A_i counts codewords of weight
    /// exactly i. Also caches the minimum distance (first positive
    /// index ≥ 1).
    pub fn weight_distribution(&mut self, budget: u64) -> Result<&[u64]> {
        self.weight_distribution_with_threads(budget, thread_count_from_env())
    }

    pub(crate) fn weight_distribution_with_threads(
        &mut self,
        budget: u64,
        threads: usize,
    ) -> Result<&[u64]> {
        if self.weight_distribution.is_none() {
            let total = self.check_budget(budget)? as u64;
            let bounds = segment_bounds(total, threads);
            let generator = &self.generator;
            let length = self.length;
            let counts = std::thread::scope(|scope| {
                let handles: Vec<_> = bounds
                    .iter()
                    .map(|&(start, end)| {
                        scope.spawn(move || {
                            let mut counts = vec![0u64; length + 1];
                            run_segment(generator, start, end, |_, weight| {
                                counts[weight as usize] += 1;
                            });
                            counts
                        })
                    })
                    .collect();
                handles.into_iter().fold(vec![0u64; length + 1], |mut acc, h| {
                    let part = h.join().expect("enumeration worker panicked");
                    for (a, p) in acc.iter_mut().zip(&part) {
                        *a += p;
                    }
                    acc
                })
            });
            let d = counts
                .iter()
                .skip(1)
                .position(|&c| c > 0)
                .map(|i| (i + 1) as u64)
                .expect("a nonzero codeword must exist");
            debug_assert!(self.min_distance.is_none_or(|cached| cached == d));
            self.min_distance = Some(d);
            self.weight_distribution = Some(counts);
        }
        Ok(self.weight_distribution.as_deref().unwrap())
    }

    /// Independent reference enumerator: recomputes every codeword from
    /// scratch as a full message–generator product, sharing none of the
    /// incremental machinery. Guarded to q^k ≤ 2^20.
    pub fn minimum_distance_naive(&self) -> Result<u64> {
        let required = enumeration_size(self.characteristic(), self.dimension);
        if required > NAIVE_GUARD as u128 {
            return Err(Error::BudgetExceeded {
                required,
                budget: NAIVE_GUARD,
            });
        }
        if self.dimension == 0 {
            return Err(Error::InvalidArgument(
                "a zero-dimensional code has no nonzero codeword".into(),
            ));
        }
        let total = required as u64;
        let mut best = u64::MAX;
        match &self.generator {
            Generator::Binary(basis) => {
                let words = words_for(basis.cols());
                for message in 1..total {
                    let mut codeword = vec![0u64; words];
                    for row in 0..basis.rows() {
                        if message >> row & 1 == 1 {
                            for (c, r) in codeword.iter_mut().zip(basis.row_words(row)) {
                                *c ^= r;
                            }
                        }
                    }
                    let weight: u64 = codeword.iter().map(|w| w.count_ones() as u64).sum();
                    best = best.min(weight);
                }
            }
            Generator::Prime(basis) => {
                let q = basis.characteristic() as u32;
                for message in 1..total {
                    let mut codeword = vec![0u32; basis.cols()];
                    let mut digits = message;
                    for row in 0..basis.rows() {
                        let digit = (digits % q as u64) as u32;
                        digits /= q as u64;
                        if digit != 0 {
                            for (col, c) in codeword.iter_mut().enumerate() {
                                *c = (*c + digit * basis.get(row, col) as u32) % q;
                            }
                        }
                    }
                    let weight = codeword.iter().filter(|&&x| x != 0).count() as u64;
                    best = best.min(weight);
                }
            }
        }
        Ok(best)
    }

    /// True iff d = n − k + 1 (the Singleton bound is met). Errors if
    /// the minimum distance has not been computed yet.
    pub fn is_mds(&self) -> Result<bool> {
        let d = self.min_distance.ok_or(Error::DistanceNotComputed)?;
        Ok(d == (self.length - self.dimension + 1) as u64)
    }

    /// Summary report; requires a computed minimum distance and includes
    /// the weight distribution when cached.
    pub fn to_report(&self) -> Result<CodeReport> {
        let d = self.min_distance.ok_or(Error::DistanceNotComputed)?;
        Ok(CodeReport {
            n: self.length,
            k: self.dimension,
            d,
            q: self.characteristic(),
            mds: self.is_mds()?,
            weight_distribution: self.weight_distribution.clone(),
        })
    }

    /// Validates q^k against the budget, returning the exact total.
    fn check_budget(&self, budget: u64) -> Result<u128> {
        if self.dimension == 0 {
            return Err(Error::InvalidArgument(
                "a zero-dimensional code has no nonzero codeword".into(),
            ));
        }
        let required = enumeration_size(self.characteristic(), self.dimension);
        if required > budget as u128 {
            return Err(Error::BudgetExceeded { required, budget });
        }
        Ok(required)
    }
}

/// Visits the codewords at enumeration indices [start, end), calling
/// `on_weight(index, weight)` for each. The codeword at `start` is
/// seeded by a direct message–generator product; subsequent indices use
/// one incremental row update each (Gray-code flip or odometer carry).
fn run_segment(generator: &Generator, start: u64, end: u64, on_weight: impl FnMut(u64, u64)) {
    match generator {
        Generator::Binary(basis) => run_binary_segment(basis, start, end, on_weight),
        Generator::Prime(basis) => run_prime_segment(basis, start, end, on_weight),
    }
}

/// Reflected-Gray-code walk: the message at index i is gray(i) =
/// i ^ (i >> 1), and stepping i−1 → i flips message bit
/// trailing_zeros(i), i.e. XORs exactly one generator row.
fn run_binary_segment(
    basis: &BinMatrix,
    start: u64,
    end: u64,
    mut on_weight: impl FnMut(u64, u64),
) {
    let mut codeword = vec![0u64; words_for(basis.cols())];
    let seed = start ^ (start >> 1);
    for row in 0..basis.rows() {
        if seed >> row & 1 == 1 {
            xor_into(&mut codeword, basis.row_words(row));
        }
    }
    on_weight(start, weight_of(&codeword));
    for index in (start + 1)..end {
        let flipped = index.trailing_zeros() as usize;
        xor_into(&mut codeword, basis.row_words(flipped));
        on_weight(index, weight_of(&codeword));
    }
}

/// Mixed-radix odometer walk for odd q: the message at index i has
/// base-q digits of i (little-endian). Incrementing the odometer adds
/// each processed digit's generator row once — a wrap q−1 → 0 is the
/// same as adding the row, since −(q−1) ≡ 1 (mod q). The running weight
/// is maintained incrementally over each row's support.
fn run_prime_segment(
    basis: &PrimeMatrix,
    start: u64,
    end: u64,
    mut on_weight: impl FnMut(u64, u64),
) {
    let q = basis.characteristic() as u32;
    let (k, n) = (basis.rows(), basis.cols());
    let supports: Vec<Vec<(usize, u32)>> = (0..k)
        .map(|r| {
            (0..n)
                .filter_map(|c| {
                    let v = basis.get(r, c);
                    (v != 0).then_some((c, v as u32))
                })
                .collect()
        })
        .collect();

    let mut digits = vec![0u32; k];
    let mut rem = start;
    for digit in digits.iter_mut() {
        *digit = (rem % q as u64) as u32;
        rem /= q as u64;
    }
    let mut codeword = vec![0u32; n];
    for row in 0..k {
        if digits[row] != 0 {
            for &(col, value) in &supports[row] {
                codeword[col] = (codeword[col] + digits[row] * value) % q;
            }
        }
    }
    let mut weight = codeword.iter().filter(|&&x| x != 0).count() as u64;
    on_weight(start, weight);

    for index in (start + 1)..end {
        let mut row = 0;
        loop {
            for &(col, value) in &supports[row] {
                let old = codeword[col];
                let new = (old + value) % q;
                codeword[col] = new;
                weight += u64::from(new != 0);
                weight -= u64::from(old != 0);
            }
            digits[row] += 1;
            if digits[row] < q {
                break;
            }
            digits[row] = 0;
            row += 1;
        }
        on_weight(index, weight);
    }
}
