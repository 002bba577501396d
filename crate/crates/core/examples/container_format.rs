//! Dump the fields of a marked container.
//!
//!     cargo run --example container_format -- [file.rdh3d]

use rdh3d::cipher::{self, KeyMaterial, Role};
use rdh3d::codec::{self, read_container, write_container, HEADER_LEN};
use rdh3d::partition::partition;
use rdh3d::predictor::analyze;
use rdh3d::quantize::quantize;
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let bytes = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => {
            let mesh = synth::tetrahedron();
            let q = quantize(&mesh, 4)?;
            let part = partition(&mesh);
            let report = analyze(&q, &part)?;
            let enc = cipher::encrypt_mesh(&q, &KeyMaterial::from_passphrase("k", Role::Encryption))?;
            let kw = KeyMaterial::from_passphrase("k", Role::Hiding);
            write_container(&codec::embed(
                &enc,
                &part,
                &report,
                4,
                &[true, false, true, false],
                &kw,
            )?)
        }
    };
    let c = read_container(&bytes)?;
    println!("{} bytes, header {HEADER_LEN}", bytes.len());
    println!(
        "m={} l={} n={} vertices={} faces={} payload_bits={}",
        c.m,
        c.l,
        c.n,
        c.vertex_count(),
        c.faces.len(),
        c.payload_bits
    );
    println!(
        "excluded: {}/{} embedded vertices, capacity {} bits",
        c.excluded.iter().filter(|&&e| e).count(),
        c.excluded.len(),
        c.capacity()
    );
    let width = c.l as usize / 4;
    for (i, (w, s)) in c.magnitudes.iter().zip(&c.signs).enumerate().take(8) {
        let sign = |b: bool| if b { '-' } else { '+' };
        println!(
            "v{i}: {}{:0width$x} {}{:0width$x} {}{:0width$x}",
            sign(s[0]),
            w[0],
            sign(s[1]),
            w[1],
            sign(s[2]),
            w[2]
        );
    }
    for line in bytes[..HEADER_LEN].chunks(8) {
        println!(
            "{}",
            line.iter().map(|b| format!("{b:02x}")).collect::<Vec<_>>().join(" ")
        );
    }
    Ok(())
}
