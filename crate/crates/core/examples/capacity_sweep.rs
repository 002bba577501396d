//! Capacity curve over n for each precision m.
//!
//!     cargo run --release --example capacity_sweep -- [model.off]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rdh3d::mesh_io::read_mesh_file;
use rdh3d::partition::partition;
use rdh3d::predictor::{analyze, choose_n};
use rdh3d::quantize::quantize;
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let mesh = match std::env::args().nth(1) {
        Some(path) => read_mesh_file(path.as_ref(), None)?.scaled_into_unit_cube().0,
        None => synth::terrain(60, 60, &mut ChaCha8Rng::seed_from_u64(1)),
    };
    let part = partition(&mesh);
    println!(
        "{} vertices: {} embedded, {} reference, {} unassigned",
        mesh.vertex_count(),
        part.embedded.len(),
        part.reference.len(),
        part.unassigned.len()
    );
    for m in 2..=9 {
        let report = analyze(&quantize(&mesh, m)?, &part)?;
        let best = choose_n(&report, None)?;
        let curve: Vec<String> = (1..=report.max_t().max(1))
            .map(|n| format!("{:.1}", report.bpv(n)))
            .collect();
        println!(
            "m={m} l={:2} best n={best:2} ({:.2} bpv, {} excluded)  bpv by n: {}",
            report.l,
            report.bpv(best),
            report.excluded_count(best),
            curve.join(" ")
        );
    }
    Ok(())
}
