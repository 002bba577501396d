//! Ring prediction of the most significant bits of embedded vertices.
//!
//! Each bit plane is predicted on its own: the predicted bit is 1 only when
//! strictly more ring words have a 1 in that plane than a 0 (ties predict 0).
//! For every embedded vertex the report stores `t`, the length of the longest
//! MSB prefix that the prediction reproduces on all three axes. Embedding
//! `n` bits into a vertex is reversible exactly when `t >= n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quantize::{low_mask, QuantizedMesh};

/// Majority vote of bit `plane` over `ring_words`.
pub fn predict_bit(plane: u32, ring_words: &[u64], l: u32) -> Result<bool> {
    if ring_words.is_empty() {
        return Err(Error::Invalid("cannot predict from an empty ring".into()));
    }
    if plane >= l {
        return Err(Error::Config(format!("bit plane {plane} outside word of {l} bits")));
    }
    let ones = ring_words.iter().filter(|&&w| (w >> plane) & 1 == 1).count();
    Ok(2 * ones > ring_words.len())
}

/// All `l` planes of the majority prediction packed into one word.
pub fn predict_word(ring_words: &[u64], l: u32) -> u64 {
    let half = ring_words.len();
    (0..l).fold(0u64, |acc, plane| {
        let ones = ring_words.iter().filter(|&&w| (w >> plane) & 1 == 1).count();
        if 2 * ones > half {
            acc | (1u64 << plane)
        } else {
            acc
        }
    })
}

/// Number of leading bits (from bit `l-1` down) on which `a` and `b` agree.
fn common_prefix(a: u64, b: u64, l: u32) -> u32 {
    let diff = (a ^ b) & low_mask(l);
    if diff == 0 {
        l
    } else {
        l - 1 - (63 - diff.leading_zeros())
    }
}

/// Longest MSB prefix of `target` that [`predict_bit`] reproduces from `ring_words`.
pub fn max_prefix_len(target: u64, ring_words: &[u64], l: u32) -> Result<u32> {
    if ring_words.is_empty() {
        return Err(Error::Invalid("cannot predict from an empty ring".into()));
    }
    Ok(common_prefix(target, predict_word(ring_words, l), l))
}

/// Auxiliary information computed from the plaintext magnitudes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionReport {
    pub m: u32,
    pub l: u32,
    pub vertex_count: usize,
    /// Embedded vertices, in partition order.
    pub embedded: Vec<u32>,
    /// Maximum embedding length per embedded vertex (min over the axes).
    pub t: Vec<u32>,
    /// `capacity_curve[n - 1]` is the payload capacity in bits at length `n`.
    pub capacity_curve: Vec<u64>,
}

impl PredictionReport {
    /// Per embedded vertex, whether it is skipped at embedding length `n`.
    pub fn excluded(&self, n: u32) -> Vec<bool> {
        self.t.iter().map(|&t| t < n).collect()
    }

    pub fn excluded_count(&self, n: u32) -> usize {
        self.t.iter().filter(|&&t| t < n).count()
    }

    /// `3 * n * (|C| - |excluded(n)|)`; zero outside `[1, l]`.
    pub fn capacity(&self, n: u32) -> u64 {
        if n == 0 || n > self.l {
            return 0;
        }
        3 * n as u64 * (self.t.len() - self.excluded_count(n)) as u64
    }

    pub fn max_t(&self) -> u32 {
        self.t.iter().copied().max().unwrap_or(0)
    }

    /// Embedding rate at length `n` in bits per vertex.
    pub fn bpv(&self, n: u32) -> f64 {
        if self.vertex_count == 0 {
            0.0
        } else {
            self.capacity(n) as f64 / self.vertex_count as f64
        }
    }
}

pub fn analyze(q: &QuantizedMesh, p: &Partition) -> Result<PredictionReport> {
    if q.vertex_count() != p.vertex_count() {
        return Err(Error::Invalid(format!(
            "partition covers {} vertices, mesh has {}",
            p.vertex_count(),
            q.vertex_count()
        )));
    }
    let l = q.l;
    let t: Vec<u32> = p
        .embedded
        .par_iter()
        .zip(&p.rings)
        .map(|(&v, ring)| {
            if ring.is_empty() {
                return 0;
            }
            (0..3)
                .map(|axis| {
                    let words: Vec<u64> = ring.iter().map(|&r| q.magnitudes[r as usize][axis]).collect();
                    common_prefix(q.magnitudes[v as usize][axis], predict_word(&words, l), l)
                })
                .min()
                .unwrap_or(0)
        })
        .collect();

    // Histogram of t turns the curve into one suffix sum.
    let mut at_least = vec![0u64; l as usize + 2];
    for &tv in &t {
        at_least[tv as usize] += 1;
    }
    for k in (0..=l as usize).rev() {
        at_least[k] += at_least[k + 1];
    }
    let capacity_curve = (1..=l).map(|n| 3 * n as u64 * at_least[n as usize]).collect();

    Ok(PredictionReport {
        m: q.m,
        l,
        vertex_count: q.vertex_count(),
        embedded: p.embedded.clone(),
        t,
        capacity_curve,
    })
}

/// The requested length, or the capacity-maximizing one (smallest on ties).
pub fn choose_n(report: &PredictionReport, requested: Option<u32>) -> Result<u32> {
    if let Some(n) = requested {
        if n == 0 || n > report.l {
            return Err(Error::Config(format!(
                "embedding length n={n} outside [1, {}]",
                report.l
            )));
        }
        return Ok(n);
    }
    let mut best = 1;
    let mut best_cap = 0;
    for (i, &cap) in report.capacity_curve.iter().enumerate() {
        if cap > best_cap {
            best_cap = cap;
            best = i as u32 + 1;
        }
    }
    Ok(best)
}
