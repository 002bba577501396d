//! Decimal fixed-point mapping of coordinates and bit-plane helpers.
//!
//! A coordinate `v` with `|v| < 1` becomes a sign bit plus the magnitude
//! `floor(|v| * 10^m)`. Magnitudes are stored in `l`-bit words where `l`
//! depends on `m`; only the magnitude takes part in encryption and embedding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mesh_io::Mesh;

/// Smallest precision accepted by the pipeline.
pub const MIN_PRECISION: u32 = 2;
/// Largest precision accepted by the pipeline.
pub const MAX_PRECISION: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantizedMesh {
    /// Per vertex, per axis: `floor(|v| * 10^m)`.
    pub magnitudes: Vec<[u64; 3]>,
    /// Per vertex, per axis: `true` when the coordinate is negative.
    pub signs: Vec<[bool; 3]>,
    pub m: u32,
    pub l: u32,
    pub faces: Vec<[u32; 3]>,
}

impl QuantizedMesh {
    pub fn vertex_count(&self) -> usize {
        self.magnitudes.len()
    }

    /// Signed integer coordinates.
    pub fn signed(&self, vertex: usize) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (axis, slot) in out.iter_mut().enumerate() {
            let mag = self.magnitudes[vertex][axis] as i64;
            *slot = if self.signs[vertex][axis] { -mag } else { mag };
        }
        out
    }

    /// The integer coordinates as a mesh, for inspection in a viewer.
    pub fn to_integer_mesh(&self) -> Mesh {
        let vertices = (0..self.vertex_count())
            .map(|i| self.signed(i).map(|c| c as f64))
            .collect();
        Mesh {
            vertices,
            faces: self.faces.clone(),
        }
    }
}

/// Word width for precision `m`: 8, 16, 32 or 64 bits.
pub fn bit_length(m: u32) -> Result<u32> {
    match m {
        1..=2 => Ok(8),
        3..=4 => Ok(16),
        5..=9 => Ok(32),
        10..=33 => Ok(64),
        _ => Err(Error::Config(format!("precision m={m} outside [1, 33]"))),
    }
}

pub fn check_precision(m: u32) -> Result<()> {
    if (MIN_PRECISION..=MAX_PRECISION).contains(&m) {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "precision m={m} outside [{MIN_PRECISION}, {MAX_PRECISION}]"
        )))
    }
}

fn scale(m: u32) -> u64 {
    10u64.pow(m)
}

pub fn quantize(mesh: &Mesh, m: u32) -> Result<QuantizedMesh> {
    check_precision(m)?;
    let l = bit_length(m)?;
    let limit = scale(m);
    let factor = limit as f64;

    let mut magnitudes = Vec::with_capacity(mesh.vertices.len());
    let mut signs = Vec::with_capacity(mesh.vertices.len());
    for (i, v) in mesh.vertices.iter().enumerate() {
        let mut mag = [0u64; 3];
        let mut sign = [false; 3];
        for axis in 0..3 {
            let c = v[axis];
            if c.is_nan() || c.abs() >= 1.0 {
                return Err(Error::Domain { vertex: i, value: c });
            }
            // Product rounding can land exactly on 10^m for |c| just below 1.
            let w = ((c.abs() * factor).floor() as u64).min(limit - 1);
            mag[axis] = w;
            sign[axis] = c < 0.0 && w != 0;
        }
        magnitudes.push(mag);
        signs.push(sign);
    }
    Ok(QuantizedMesh {
        magnitudes,
        signs,
        m,
        l,
        faces: mesh.faces.clone(),
    })
}

pub fn dequantize(q: &QuantizedMesh) -> Mesh {
    let factor = scale(q.m) as f64;
    let vertices = q
        .magnitudes
        .iter()
        .zip(&q.signs)
        .map(|(mag, sign)| {
            let mut v = [0.0; 3];
            for axis in 0..3 {
                let c = mag[axis] as f64 / factor;
                v[axis] = if sign[axis] { -c } else { c };
            }
            v
        })
        .collect();
    Mesh {
        vertices,
        faces: q.faces.clone(),
    }
}

/// Mask of the low `bits` bits, valid for `bits` up to 64.
pub fn low_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Bits of `word`, index 0 is the least significant.
pub fn bits_of(word: u64, l: u32) -> Result<Vec<bool>> {
    if l == 0 || l > 64 {
        return Err(Error::Config(format!("bit length {l} outside [1, 64]")));
    }
    if word & !low_mask(l) != 0 {
        return Err(Error::Invalid(format!("word {word} does not fit in {l} bits")));
    }
    Ok((0..l).map(|u| (word >> u) & 1 == 1).collect())
}

/// Inverse of [`bits_of`]: `sum(bits[u] * 2^u)`.
pub fn word_of(bits: &[bool]) -> u64 {
    bits.iter()
        .enumerate()
        .fold(0u64, |acc, (u, &b)| acc | ((b as u64) << u))
}
