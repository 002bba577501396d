//! Full pipeline timing on a large mesh, with the kd-tree Hausdorff.
//!
//!     cargo run --release --example dense_mesh -- [grid side, default 400]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rdh3d::bench::{run_pipeline, write_csv, BenchConfig};
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let side: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(400);
    let mesh = synth::terrain(side, side, &mut ChaCha8Rng::seed_from_u64(7));
    let mut cfg = BenchConfig::new("ke", "kw");
    cfg.indexed_hausdorff = true;
    let run = run_pipeline("terrain", &mesh, 6, None, &cfg)?;
    println!(
        "integer-exact recovery: {}, integer Hausdorff {}",
        run.integer_exact, run.integer_hausdorff
    );
    write_csv(&[run.row], std::io::stdout())
}
