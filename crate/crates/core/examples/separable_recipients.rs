//! One container, two recipients: the key holder for each role gets exactly
//! their own result, and nothing useful with the other key.
//!
//!     cargo run --example separable_recipients

use rdh3d::cipher::{self, KeyMaterial, Role};
use rdh3d::cli::{bits_to_bytes, bytes_to_bits};
use rdh3d::codec::{self, read_container, write_container};
use rdh3d::partition::partition;
use rdh3d::predictor::{analyze, choose_n};
use rdh3d::quantize::quantize;
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let mesh = synth::sphere(16, 24, 0.8);
    let ke = KeyMaterial::from_passphrase("ke", Role::Encryption);
    let kw = KeyMaterial::from_passphrase("kw", Role::Hiding);
    let q = quantize(&mesh, 6)?;
    let part = partition(&mesh);
    let report = analyze(&q, &part)?;
    let n = choose_n(&report, None)?;
    let enc = cipher::encrypt_mesh(&q, &ke)?;
    let marked = codec::embed(&enc, &part, &report, n, &bytes_to_bits(b"label: 42"), &kw)?;
    let bytes = write_container(&marked);

    let hider_copy = read_container(&bytes)?;
    println!(
        "Kw only -> payload {:?}",
        String::from_utf8_lossy(&bits_to_bytes(&codec::extract(&hider_copy, &kw)?))
    );
    println!("Kw only -> recover: {}", codec::recover(&hider_copy, &kw).unwrap_err());

    let owner_copy = read_container(&bytes)?;
    println!("Ke only -> mesh exact: {}", codec::recover(&owner_copy, &ke)? == q);
    println!("Ke only -> extract: {}", codec::extract(&owner_copy, &ke).unwrap_err());

    let wrong = KeyMaterial::from_passphrase("guess", Role::Hiding);
    println!(
        "wrong Kw -> {:?}",
        String::from_utf8_lossy(&bits_to_bytes(&codec::extract(&owner_copy, &wrong)?))
    );
    Ok(())
}
