//! Brute-force re-derivations used as oracles. Nothing here calls the
//! partition or predictor code paths under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rdh3d::synth;
use rdh3d::{Mesh, QuantizedMesh};

/// Greedy sweep over first appearances, using sets instead of CSR adjacency.
pub fn brute_partition(faces: &[[u32; 3]], n: usize) -> (Vec<u32>, Vec<Vec<u32>>) {
    let mut in_c = BTreeSet::new();
    let mut in_r = BTreeSet::new();
    let mut embedded = Vec::new();
    let mut rings = Vec::new();
    for face in faces {
        for &v in face {
            if in_c.contains(&v) || in_r.contains(&v) {
                continue;
            }
            in_c.insert(v);
            let mut ring = BTreeSet::new();
            for f in faces {
                if f.contains(&v) {
                    ring.extend(f.iter().copied().filter(|&w| w != v));
                }
            }
            in_r.extend(ring.iter().copied());
            embedded.push(v);
            rings.push(ring.into_iter().collect());
        }
    }
    assert!(embedded.iter().all(|&v| (v as usize) < n));
    (embedded, rings)
}

fn bit(word: u64, plane: u32) -> u64 {
    (word >> plane) & 1
}

/// Longest correctly predicted MSB prefix, one plane at a time.
pub fn brute_prefix(target: u64, ring: &[u64], l: u32) -> u32 {
    for k in 1..=l {
        let plane = l - k;
        let zeros = ring.iter().filter(|&&w| bit(w, plane) == 0).count();
        let ones = ring.len() - zeros;
        let predicted = if zeros >= ones { 0 } else { 1 };
        if predicted != bit(target, plane) {
            return k - 1;
        }
    }
    l
}

pub fn brute_t(q: &QuantizedMesh, embedded: &[u32], rings: &[Vec<u32>]) -> Vec<u32> {
    embedded
        .iter()
        .zip(rings)
        .map(|(&v, ring)| {
            if ring.is_empty() {
                return 0;
            }
            let mut best = q.l;
            for axis in 0..3 {
                let words: Vec<u64> = ring.iter().map(|&r| q.magnitudes[r as usize][axis]).collect();
                best = best.min(brute_prefix(q.magnitudes[v as usize][axis], &words, q.l));
            }
            best
        })
        .collect()
}

pub fn brute_curve(t: &[u32], l: u32) -> Vec<u64> {
    (1..=l)
        .map(|n| {
            let usable = t.iter().filter(|&&tv| tv >= n).count() as u64;
            3 * n as u64 * usable
        })
        .collect()
}

/// First index of the maximum, as a 1-based length.
pub fn brute_choose(curve: &[u64]) -> u32 {
    let max = curve.iter().copied().max().unwrap_or(0);
    curve.iter().position(|&c| c == max).map(|i| i as u32 + 1).unwrap_or(1)
}

/// A mix of mesh shapes with `n` vertices (give or take for the structured ones).
pub fn assorted_mesh<R: Rng>(kind: usize, n: usize, rng: &mut R) -> Mesh {
    let n = n.max(4);
    match kind % 3 {
        0 => synth::random_mesh(n, rng.random_range(1..=2 * n), rng),
        1 => {
            let nx = (n as f64).sqrt().ceil() as usize;
            let ny = n.div_ceil(nx).max(2);
            synth::terrain(nx.max(2), ny, rng)
        }
        _ => {
            let segments = ((n as f64).sqrt() as usize).max(3);
            let rings = (n / segments).max(2);
            synth::bumpy_sphere(rings, segments, rng)
        }
    }
}
