//! ChaCha20 keystreams for coordinate encryption and payload whitening.
//!
//! A passphrase is hashed with SHA-256 into the 256-bit ChaCha20 key. The
//! 96-bit nonce is the first 12 bytes of SHA-256 of the role label (`"Ke"`
//! or `"Kw"`), so the two roles never share a stream. The block counter
//! starts at 0 and bits are taken from each keystream byte MSB first.
//!
//! For coordinates, stream bit `(3 * i + j) * l + k` masks bit `l - 1 - k`
//! of axis `j` of vertex `i`. Since `l` is a multiple of 8, the mask for one
//! coordinate word is simply the big-endian reading of its `l / 8` bytes.

use std::fmt;

use chacha20::cipher::{StreamCipher, StreamCipherSeek};
use chacha20::{ChaCha20, KeyIvInit};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::quantize::QuantizedMesh;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// `Ke`, protects the coordinates.
    Encryption,
    /// `Kw`, whitens the payload.
    Hiding,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::Encryption => "Ke",
            Role::Hiding => "Kw",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Encryption => f.write_str("encryption key (Ke)"),
            Role::Hiding => f.write_str("data hiding key (Kw)"),
        }
    }
}

#[derive(Clone)]
enum Source {
    ChaCha { key: [u8; 32], nonce: [u8; 12] },
    Null,
}

/// A role-tagged keystream.
#[derive(Clone)]
pub struct KeyMaterial {
    role: Role,
    source: Source,
}

impl fmt::Debug for KeyMaterial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.source {
            Source::ChaCha { .. } => "chacha20",
            Source::Null => "null",
        };
        f.debug_struct("KeyMaterial")
            .field("role", &self.role)
            .field("source", &kind)
            .finish()
    }
}

pub fn role_nonce(role: Role) -> [u8; 12] {
    let digest: [u8; 32] = Sha256::digest(role.label().as_bytes()).into();
    let mut nonce = [0u8; 12];
    nonce.copy_from_slice(&digest[..12]);
    nonce
}

impl KeyMaterial {
    pub fn from_passphrase(passphrase: &str, role: Role) -> Self {
        let key: [u8; 32] = Sha256::digest(passphrase.as_bytes()).into();
        KeyMaterial {
            role,
            source: Source::ChaCha {
                key,
                nonce: role_nonce(role),
            },
        }
    }

    /// An all-zero keystream. Encryption with it is the identity; only
    /// useful for tests and for inspecting the layout of a container.
    pub fn null(role: Role) -> Self {
        KeyMaterial {
            role,
            source: Source::Null,
        }
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn expect_role(&self, expected: Role) -> Result<()> {
        if self.role == expected {
            Ok(())
        } else {
            Err(Error::WrongRole {
                expected,
                actual: self.role,
            })
        }
    }

    /// Keystream bytes starting at `byte_offset`.
    pub fn fill(&self, byte_offset: u64, buf: &mut [u8]) {
        buf.fill(0);
        if let Source::ChaCha { key, nonce } = &self.source {
            let mut cipher = ChaCha20::new(key.into(), nonce.into());
            cipher.seek(byte_offset);
            cipher.apply_keystream(buf);
        }
    }

    /// Stream bit at `index`, addressed randomly.
    pub fn bit(&self, index: u64) -> bool {
        let mut b = [0u8];
        self.fill(index / 8, &mut b);
        (b[0] >> (7 - index % 8)) & 1 == 1
    }
}

/// The first `count` keystream bits.
pub fn keystream(key: &KeyMaterial, count: usize) -> Vec<bool> {
    let mut bytes = vec![0u8; count.div_ceil(8)];
    key.fill(0, &mut bytes);
    (0..count).map(|i| (bytes[i / 8] >> (7 - i % 8)) & 1 == 1).collect()
}

/// Per-coordinate masks for `vertex_count` vertices of `l`-bit words.
pub fn coordinate_masks(key: &KeyMaterial, vertex_count: usize, l: u32) -> Vec<[u64; 3]> {
    let width = l as usize / 8;
    let mut bytes = vec![0u8; vertex_count * 3 * width];
    key.fill(0, &mut bytes);
    bytes
        .chunks_exact(3 * width)
        .map(|chunk| {
            let mut masks = [0u64; 3];
            for (axis, word) in chunk.chunks_exact(width).enumerate() {
                masks[axis] = word.iter().fold(0u64, |acc, &b| (acc << 8) | b as u64);
            }
            masks
        })
        .collect()
}

fn xor_magnitudes(q: &QuantizedMesh, key: &KeyMaterial) -> QuantizedMesh {
    let masks = coordinate_masks(key, q.vertex_count(), q.l);
    let magnitudes = q
        .magnitudes
        .iter()
        .zip(&masks)
        .map(|(w, k)| [w[0] ^ k[0], w[1] ^ k[1], w[2] ^ k[2]])
        .collect();
    QuantizedMesh {
        magnitudes,
        ..q.clone()
    }
}

/// XOR every magnitude bit with the `Ke` stream. Signs and faces pass through.
pub fn encrypt_mesh(q: &QuantizedMesh, ke: &KeyMaterial) -> Result<QuantizedMesh> {
    ke.expect_role(Role::Encryption)?;
    Ok(xor_magnitudes(q, ke))
}

/// Inverse of [`encrypt_mesh`]. On a marked mesh the embedded vertices'
/// top bits come out scrambled until ring prediction restores them.
pub fn decrypt_mesh(q: &QuantizedMesh, ke: &KeyMaterial) -> Result<QuantizedMesh> {
    ke.expect_role(Role::Encryption)?;
    Ok(xor_magnitudes(q, ke))
}

/// XOR payload bits with the `Kw` stream; self-inverse.
pub fn crypt_payload(bits: &[bool], kw: &KeyMaterial) -> Result<Vec<bool>> {
    kw.expect_role(Role::Hiding)?;
    let stream = keystream(kw, bits.len());
    Ok(bits.iter().zip(stream).map(|(&b, k)| b ^ k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_mesh() -> QuantizedMesh {
        QuantizedMesh {
            magnitudes: vec![[2020, 740, 2888], [0, 9999, 1], [5000, 5000, 5000], [1, 2, 3]],
            signs: vec![[true, true, false], [false; 3], [false, true, false], [false; 3]],
            m: 4,
            l: 16,
            faces: vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        }
    }

    #[test]
    fn empty_and_deterministic() {
        let k = KeyMaterial::from_passphrase("k", Role::Encryption);
        assert!(keystream(&k, 0).is_empty());
        assert_eq!(keystream(&k, 300), keystream(&k, 300));
        let again = KeyMaterial::from_passphrase("k", Role::Encryption);
        assert_eq!(keystream(&k, 64), keystream(&again, 64));
    }

    #[test]
    fn roles_give_independent_streams() {
        let ke = KeyMaterial::from_passphrase("same", Role::Encryption);
        let kw = KeyMaterial::from_passphrase("same", Role::Hiding);
        let a = keystream(&ke, 256);
        let b = keystream(&kw, 256);
        let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count();
        assert!((64..=192).contains(&differing), "{differing}");
    }

    #[test]
    fn random_access_matches_streaming() {
        let k = KeyMaterial::from_passphrase("access", Role::Hiding);
        let s = keystream(&k, 2000);
        for i in [0usize, 1, 7, 8, 511, 512, 513, 1023, 1999] {
            assert_eq!(k.bit(i as u64), s[i], "bit {i}");
        }
        let mut tail = [0u8; 10];
        k.fill(123, &mut tail);
        let mut whole = [0u8; 133];
        k.fill(0, &mut whole);
        assert_eq!(&whole[123..], &tail);
    }

    #[test]
    fn null_stream_is_identity() {
        let q = sample_mesh();
        let enc = encrypt_mesh(&q, &KeyMaterial::null(Role::Encryption)).unwrap();
        assert_eq!(enc, q);
    }

    #[test]
    fn involution_preserves_signs_and_faces() {
        let q = sample_mesh();
        let ke = KeyMaterial::from_passphrase("k", Role::Encryption);
        let enc = encrypt_mesh(&q, &ke).unwrap();
        assert_ne!(enc.magnitudes, q.magnitudes);
        assert_eq!(enc.signs, q.signs);
        assert_eq!(enc.faces, q.faces);
        assert!(enc.magnitudes.iter().flatten().all(|&w| w < 1 << 16));
        assert_eq!(encrypt_mesh(&enc, &ke).unwrap(), q);
        assert_eq!(decrypt_mesh(&enc, &ke).unwrap(), q);
    }

    #[test]
    fn coordinate_masks_follow_bit_addressing() {
        let ke = KeyMaterial::from_passphrase("k", Role::Encryption);
        let l = 16u32;
        let masks = coordinate_masks(&ke, 4, l);
        let bits = keystream(&ke, 4 * 3 * l as usize);
        for i in 0..4 {
            for j in 0..3 {
                for k in 0..l {
                    let stream_bit = bits[(3 * i + j) * l as usize + k as usize];
                    let mask_bit = (masks[i][j] >> (l - 1 - k)) & 1 == 1;
                    assert_eq!(stream_bit, mask_bit);
                }
            }
        }
    }

    #[test]
    fn role_checks() {
        let q = sample_mesh();
        let kw = KeyMaterial::from_passphrase("k", Role::Hiding);
        assert!(matches!(encrypt_mesh(&q, &kw), Err(Error::WrongRole { .. })));
        assert!(matches!(decrypt_mesh(&q, &kw), Err(Error::WrongRole { .. })));
        let ke = KeyMaterial::from_passphrase("k", Role::Encryption);
        assert!(crypt_payload(&[true], &ke).is_err());
    }

    #[test]
    fn payload_whitening() {
        let kw = KeyMaterial::from_passphrase("k", Role::Hiding);
        assert!(crypt_payload(&[], &kw).unwrap().is_empty());
        let payload: Vec<bool> = (0..24).map(|i| i % 3 == 0).collect();
        let once = crypt_payload(&payload, &kw).unwrap();
        let expected: Vec<bool> = payload.iter().zip(keystream(&kw, 24)).map(|(&a, b)| a ^ b).collect();
        assert_eq!(once, expected);
        assert_eq!(crypt_payload(&once, &kw).unwrap(), payload);
    }

    #[test]
    fn debug_hides_key() {
        let k = KeyMaterial::from_passphrase("hunter2", Role::Encryption);
        let text = format!("{k:?}");
        assert!(!text.contains("hunter2"));
        assert!(text.contains("Encryption"));
    }
}
