//! Payload embedding by MSB substitution, separable extraction, and lossless
//! recovery by ring prediction.
//!
//! Embedding writes the whitened payload MSB first into the top `n` bits of
//! each non-excluded embedded vertex, axis x then y then z, vertices in
//! partition order:
//!
//! ```text
//! new_word = s_1 * 2^(l-1) + ... + s_n * 2^(l-n) + (old_word mod 2^(l-n))
//! ```
//!
//! Slots past the end of a short payload carry bare `Kw` stream bits. The
//! true payload length travels in the container header.

mod container;

pub use container::{read_container, write_container, CONTAINER_VERSION, HEADER_LEN, MAGIC};

use crate::cipher::{self, keystream, KeyMaterial, Role};
use crate::error::{Error, Result};
use crate::partition::{partition_faces, Partition};
use crate::predictor::{predict_word, PredictionReport};
use crate::quantize::{low_mask, QuantizedMesh};

/// The marked (or merely encrypted) mesh plus its plaintext side information.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedContainer {
    pub m: u32,
    pub l: u32,
    /// Embedding length; 0 for a container that carries no payload yet.
    pub n: u32,
    pub payload_bits: u64,
    pub signs: Vec<[bool; 3]>,
    /// One flag per embedded vertex (partition order): skipped at this `n`.
    pub excluded: Vec<bool>,
    /// Encrypted magnitudes, payload in the top bits of embedded vertices.
    pub magnitudes: Vec<[u64; 3]>,
    pub faces: Vec<[u32; 3]>,
}

impl MarkedContainer {
    /// Wraps an encrypted mesh that carries no payload.
    pub fn unmarked(enc: &QuantizedMesh) -> Self {
        let embedded = partition_faces(&enc.faces, enc.vertex_count()).embedded.len();
        MarkedContainer {
            m: enc.m,
            l: enc.l,
            n: 0,
            payload_bits: 0,
            signs: enc.signs.clone(),
            excluded: vec![false; embedded],
            magnitudes: enc.magnitudes.clone(),
            faces: enc.faces.clone(),
        }
    }

    pub fn is_marked(&self) -> bool {
        self.n > 0
    }

    pub fn vertex_count(&self) -> usize {
        self.magnitudes.len()
    }

    /// Payload slots available at the container's `n`.
    pub fn capacity(&self) -> u64 {
        let usable = self.excluded.iter().filter(|&&e| !e).count() as u64;
        3 * self.n as u64 * usable
    }

    /// The stored words as a quantized mesh (still encrypted).
    pub fn to_quantized(&self) -> QuantizedMesh {
        QuantizedMesh {
            magnitudes: self.magnitudes.clone(),
            signs: self.signs.clone(),
            m: self.m,
            l: self.l,
            faces: self.faces.clone(),
        }
    }

    fn checked_partition(&self) -> Result<Partition> {
        let p = partition_faces(&self.faces, self.vertex_count());
        if p.embedded.len() != self.excluded.len() {
            return Err(Error::corrupt(format!(
                "excluded bitmap covers {} vertices, topology has {} embedded vertices",
                self.excluded.len(),
                p.embedded.len()
            )));
        }
        if self.n > self.l {
            return Err(Error::corrupt(format!("n={} exceeds word length {}", self.n, self.l)));
        }
        if self.payload_bits > self.capacity() {
            return Err(Error::corrupt(format!(
                "payload length {} exceeds capacity {}",
                self.payload_bits,
                self.capacity()
            )));
        }
        Ok(p)
    }
}

/// Embeds `payload` into an encrypted mesh at length `n`.
pub fn embed(
    enc: &QuantizedMesh,
    p: &Partition,
    rep: &PredictionReport,
    n: u32,
    payload: &[bool],
    kw: &KeyMaterial,
) -> Result<MarkedContainer> {
    kw.expect_role(Role::Hiding)?;
    let l = enc.l;
    if n == 0 || n > l {
        return Err(Error::Config(format!("embedding length n={n} outside [1, {l}]")));
    }
    if p.vertex_count() != enc.vertex_count() || rep.vertex_count != enc.vertex_count() {
        return Err(Error::Invalid(
            "mesh, partition and report describe different meshes".into(),
        ));
    }
    if rep.l != l || rep.embedded != p.embedded {
        return Err(Error::Invalid("prediction report does not match this partition".into()));
    }
    let capacity = rep.capacity(n);
    if payload.len() as u64 > capacity {
        return Err(Error::Capacity {
            requested: payload.len() as u64,
            capacity,
        });
    }

    let stream = keystream(kw, capacity as usize);
    let excluded = rep.excluded(n);
    let keep = low_mask(l - n);
    let mut magnitudes = enc.magnitudes.clone();
    let mut slot = 0usize;
    for (&v, _) in p.embedded.iter().zip(&excluded).filter(|(_, &ex)| !ex) {
        for word in magnitudes[v as usize].iter_mut() {
            let top = (0..n as usize).fold(0u64, |acc, k| {
                let s = payload.get(slot + k).copied().unwrap_or(false) ^ stream[slot + k];
                (acc << 1) | s as u64
            });
            slot += n as usize;
            *word = shl(top, l - n) | (*word & keep);
        }
    }
    debug_assert_eq!(slot as u64, capacity);

    Ok(MarkedContainer {
        m: enc.m,
        l,
        n,
        payload_bits: payload.len() as u64,
        signs: enc.signs.clone(),
        excluded,
        magnitudes,
        faces: enc.faces.clone(),
    })
}

fn shl(x: u64, by: u32) -> u64 {
    if by >= 64 {
        0
    } else {
        x << by
    }
}

fn shr(x: u64, by: u32) -> u64 {
    if by >= 64 {
        0
    } else {
        x >> by
    }
}

/// Reads the payload back with the hiding key alone; the mesh stays encrypted.
pub fn extract(c: &MarkedContainer, kw: &KeyMaterial) -> Result<Vec<bool>> {
    kw.expect_role(Role::Hiding)?;
    let p = c.checked_partition()?;
    let wanted = c.payload_bits as usize;
    let mut bits = Vec::with_capacity(wanted);
    'outer: for (&v, _) in p.embedded.iter().zip(&c.excluded).filter(|(_, &ex)| !ex) {
        for &word in &c.magnitudes[v as usize] {
            for k in 1..=c.n {
                if bits.len() == wanted {
                    break 'outer;
                }
                bits.push(shr(word, c.l - k) & 1 == 1);
            }
        }
    }
    if bits.len() != wanted {
        return Err(Error::corrupt("payload ends before its recorded length"));
    }
    cipher::crypt_payload(&bits, kw)
}

/// Decrypts and rebuilds the overwritten bits from each vertex's reference
/// ring. The result equals the quantized original exactly.
pub fn recover(c: &MarkedContainer, ke: &KeyMaterial) -> Result<QuantizedMesh> {
    ke.expect_role(Role::Encryption)?;
    let p = c.checked_partition()?;
    let mut q = cipher::decrypt_mesh(&c.to_quantized(), ke)?;
    if c.n == 0 {
        return Ok(q);
    }
    let l = c.l;
    let keep = low_mask(l - c.n);
    let mut ring_words = Vec::new();
    for ((&v, ring), _) in p.embedded.iter().zip(&p.rings).zip(&c.excluded).filter(|(_, &ex)| !ex) {
        if ring.is_empty() {
            return Err(Error::corrupt(format!("vertex {v} marked embeddable but has no ring")));
        }
        for axis in 0..3 {
            ring_words.clear();
            // Ring vertices are reference vertices and decrypt exactly.
            ring_words.extend(ring.iter().map(|&r| q.magnitudes[r as usize][axis]));
            let predicted = predict_word(&ring_words, l);
            let word = &mut q.magnitudes[v as usize][axis];
            *word = (predicted & !keep & low_mask(l)) | (*word & keep);
        }
    }
    Ok(q)
}
