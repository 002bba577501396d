//! Encrypt a mesh, hide a message in the ciphertext, then pull both back out.
//!
//!     cargo run --example quickstart

use rdh3d::cipher::{self, KeyMaterial, Role};
use rdh3d::cli::{bits_to_bytes, bytes_to_bits};
use rdh3d::codec;
use rdh3d::partition::partition;
use rdh3d::predictor::{analyze, choose_n};
use rdh3d::quantize::quantize;
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let mesh = synth::sphere(12, 16, 0.5);
    let ke = KeyMaterial::from_passphrase("owner secret", Role::Encryption);
    let kw = KeyMaterial::from_passphrase("hider secret", Role::Hiding);

    // Content owner: quantize, study prediction, encrypt.
    let q = quantize(&mesh, 5)?;
    let part = partition(&mesh);
    let report = analyze(&q, &part)?;
    let n = choose_n(&report, None)?;
    let encrypted = cipher::encrypt_mesh(&q, &ke)?;
    println!(
        "{} vertices, {} embeddable, n = {n}, capacity {} bits ({:.2} bpv)",
        mesh.vertex_count(),
        part.embedded.len(),
        report.capacity(n),
        report.bpv(n)
    );

    // Data hider: embed without ever seeing the plaintext.
    let message = b"meet at the usual place";
    let marked = codec::embed(&encrypted, &part, &report, n, &bytes_to_bits(message), &kw)?;

    // Receivers: each needs only their own key.
    let bits = codec::extract(&marked, &kw)?;
    println!("extracted: {:?}", String::from_utf8_lossy(&bits_to_bytes(&bits)));
    let recovered = codec::recover(&marked, &ke)?;
    println!("mesh recovered exactly: {}", recovered == q);
    Ok(())
}
