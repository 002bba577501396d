//! `.rdh3d` byte layout, all integers little-endian:
//!
//! ```text
//! "RDH3" | u8 version=1 | u8 m | u8 l | u8 n | u32 N | u32 M | u64 payload_bits
//! sign bitmap      ceil(3N / 8) bytes   vertex-major, x y z
//! excluded bitmap  ceil(|C| / 8) bytes  embedded vertices in partition order
//! magnitudes       3N words of l bits, big-endian
//! faces            M x 3 u32, 1-based
//! ```
//!
//! Bitmaps are MSB first inside each byte and zero padded. `|C|` is not in the
//! header; it follows from the faces, which is why the excluded bitmap length
//! is checked only after the faces are decoded.

use super::MarkedContainer;
use crate::error::{Error, Result};
use crate::partition::partition_faces;
use crate::quantize::{bit_length, low_mask};

pub const MAGIC: &[u8; 4] = b"RDH3";
pub const CONTAINER_VERSION: u8 = 1;
pub const HEADER_LEN: usize = 24;

fn pack_bits(bits: impl ExactSizeIterator<Item = bool>, out: &mut Vec<u8>) {
    let mut byte = 0u8;
    let mut filled = 0;
    for b in bits {
        byte = (byte << 1) | b as u8;
        filled += 1;
        if filled == 8 {
            out.push(byte);
            byte = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
}

fn unpack_bits(bytes: &[u8], count: usize, what: &str) -> Result<Vec<bool>> {
    debug_assert_eq!(bytes.len(), count.div_ceil(8));
    let bits: Vec<bool> = (0..count).map(|i| (bytes[i / 8] >> (7 - i % 8)) & 1 == 1).collect();
    if !count.is_multiple_of(8) {
        let pad = bytes[bytes.len() - 1] & ((1u8 << (8 - count % 8)) - 1);
        if pad != 0 {
            return Err(Error::corrupt(format!("nonzero padding in {what} bitmap")));
        }
    }
    Ok(bits)
}

pub fn write_container(c: &MarkedContainer) -> Vec<u8> {
    let n_vertices = c.magnitudes.len();
    let width = c.l as usize / 8;
    let mut out = Vec::with_capacity(
        HEADER_LEN
            + (3 * n_vertices).div_ceil(8)
            + c.excluded.len().div_ceil(8)
            + 3 * n_vertices * width
            + 12 * c.faces.len(),
    );
    out.extend_from_slice(MAGIC);
    out.push(CONTAINER_VERSION);
    out.push(c.m as u8);
    out.push(c.l as u8);
    out.push(c.n as u8);
    out.extend_from_slice(&(n_vertices as u32).to_le_bytes());
    out.extend_from_slice(&(c.faces.len() as u32).to_le_bytes());
    out.extend_from_slice(&c.payload_bits.to_le_bytes());
    pack_bits(
        c.signs.iter().flatten().copied().collect::<Vec<_>>().into_iter(),
        &mut out,
    );
    pack_bits(c.excluded.iter().copied(), &mut out);
    for &w in c.magnitudes.iter().flatten() {
        out.extend_from_slice(&w.to_be_bytes()[8 - width..]);
    }
    for &i in c.faces.iter().flatten() {
        out.extend_from_slice(&(i + 1).to_le_bytes());
    }
    out
}

fn u32_at(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes(bytes[at..at + 4].try_into().expect("4 bytes"))
}

pub fn read_container(bytes: &[u8]) -> Result<MarkedContainer> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::corrupt(format!(
            "{} bytes is shorter than the header",
            bytes.len()
        )));
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::corrupt("bad magic"));
    }
    if bytes[4] != CONTAINER_VERSION {
        return Err(Error::corrupt(format!("unsupported version {}", bytes[4])));
    }
    let m = bytes[5] as u32;
    let l = bytes[6] as u32;
    let n = bytes[7] as u32;
    match bit_length(m) {
        Ok(expected) if expected == l => {}
        _ => return Err(Error::corrupt(format!("inconsistent precision m={m}, l={l}"))),
    }
    if n > l {
        return Err(Error::corrupt(format!("n={n} exceeds word length {l}")));
    }
    let n_vertices = u32_at(bytes, 8) as usize;
    let n_faces = u32_at(bytes, 12) as usize;
    let payload_bits = u64::from_le_bytes(bytes[16..24].try_into().expect("8 bytes"));
    if n == 0 && payload_bits != 0 {
        return Err(Error::corrupt("payload recorded without an embedding length"));
    }

    let width = l as u64 / 8;
    let signs_len = (3 * n_vertices as u64).div_ceil(8);
    let words_len = 3 * n_vertices as u64 * width;
    let faces_len = 12 * n_faces as u64;
    let fixed = HEADER_LEN as u64 + signs_len + words_len + faces_len;
    let total = bytes.len() as u64;
    if total < fixed {
        return Err(Error::corrupt(format!(
            "container truncated: {total} bytes, need at least {fixed}"
        )));
    }
    let excluded_len = (total - fixed) as usize;
    let signs_len = signs_len as usize;
    let words_len = words_len as usize;

    let faces_at = bytes.len() - faces_len as usize;
    let faces = bytes[faces_at..]
        .chunks_exact(12)
        .map(|chunk| {
            let mut face = [0u32; 3];
            for (k, slot) in face.iter_mut().enumerate() {
                let i = u32_at(chunk, 4 * k);
                if i == 0 || i as usize > n_vertices {
                    return Err(Error::corrupt(format!("face index {i} outside [1, {n_vertices}]")));
                }
                *slot = i - 1;
            }
            Ok(face)
        })
        .collect::<Result<Vec<_>>>()?;

    let embedded = partition_faces(&faces, n_vertices).embedded.len();
    if excluded_len != embedded.div_ceil(8) {
        return Err(Error::corrupt(format!(
            "length mismatch: excluded bitmap has {excluded_len} bytes, topology needs {}",
            embedded.div_ceil(8)
        )));
    }

    let mut at = HEADER_LEN;
    let sign_bits = unpack_bits(&bytes[at..at + signs_len], 3 * n_vertices, "sign")?;
    at += signs_len;
    let excluded = unpack_bits(&bytes[at..at + excluded_len], embedded, "excluded")?;
    at += excluded_len;
    if n == 0 && excluded.iter().any(|&e| e) {
        return Err(Error::corrupt("excluded vertices recorded without an embedding length"));
    }

    let width = width as usize;
    let limit = low_mask(l);
    let mut magnitudes = Vec::with_capacity(n_vertices);
    for vertex in bytes[at..at + words_len].chunks_exact(3 * width) {
        let mut words = [0u64; 3];
        for (slot, chunk) in words.iter_mut().zip(vertex.chunks_exact(width)) {
            *slot = chunk.iter().fold(0u64, |acc, &b| (acc << 8) | b as u64) & limit;
        }
        magnitudes.push(words);
    }
    let signs = sign_bits.chunks_exact(3).map(|s| [s[0], s[1], s[2]]).collect();

    let c = MarkedContainer {
        m,
        l,
        n,
        payload_bits,
        signs,
        excluded,
        magnitudes,
        faces,
    };
    if c.payload_bits > c.capacity() {
        return Err(Error::corrupt(format!(
            "payload length {} exceeds capacity {}",
            c.payload_bits,
            c.capacity()
        )));
    }
    Ok(c)
}
