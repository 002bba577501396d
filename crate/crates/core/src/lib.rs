//! Separable reversible data hiding for encrypted 3D triangle meshes.
//!
//! The pipeline maps vertex coordinates to fixed-width integers, splits the
//! vertices into an *embedded* set and a *reference* set, encrypts every
//! coordinate word with a ChaCha20 keystream, and then overwrites the top `n`
//! bits of each embeddable coordinate with (key-whitened) payload bits.
//!
//! A recipient holding only the hiding key can read the payload straight out
//! of the ciphertext. A recipient holding only the encryption key decrypts
//! and rebuilds the overwritten bits by a per-bit-plane majority vote over
//! each vertex's reference ring. The two capabilities are independent, and
//! recovery is exact at the integer level.
//!
//! ```
//! use rdh3d::{cipher, codec, partition, predictor, quantize, synth};
//! use rdh3d::cipher::{KeyMaterial, Role};
//!
//! let mesh = synth::sphere(12, 24, 0.5);
//! let q = quantize::quantize(&mesh, 4).unwrap();
//! let part = partition::partition(&mesh);
//! let report = predictor::analyze(&q, &part).unwrap();
//! let n = predictor::choose_n(&report, None).unwrap();
//!
//! let ke = KeyMaterial::from_passphrase("encryption secret", Role::Encryption);
//! let kw = KeyMaterial::from_passphrase("hiding secret", Role::Hiding);
//! let enc = cipher::encrypt_mesh(&q, &ke).unwrap();
//!
//! let payload = vec![true, false, true, true];
//! let marked = codec::embed(&enc, &part, &report, n, &payload, &kw).unwrap();
//!
//! assert_eq!(codec::extract(&marked, &kw).unwrap(), payload);
//! assert_eq!(codec::recover(&marked, &ke).unwrap(), q);
//! ```

pub mod bench;
pub mod cipher;
pub mod cli;
pub mod codec;
mod error;
pub mod mesh_io;
pub mod metrics;
pub mod partition;
pub mod predictor;
pub mod quantize;
pub mod synth;

pub use codec::MarkedContainer;
pub use error::{Error, ParseErrorKind, Result};
pub use mesh_io::{Mesh, MeshFormat};
pub use partition::Partition;
pub use predictor::PredictionReport;
pub use quantize::QuantizedMesh;
