//! Hausdorff distance, SNR and embedding rate of the recovered mesh for m = 2..9.
//!
//!     cargo run --release --example fidelity_vs_precision -- [model.off]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rdh3d::bench::{run_pipeline, BenchConfig};
use rdh3d::mesh_io::read_mesh_file;
use rdh3d::metrics::SnrForm;
use rdh3d::synth;

fn main() -> rdh3d::Result<()> {
    let mesh = match std::env::args().nth(1) {
        Some(path) => read_mesh_file(path.as_ref(), None)?.scaled_into_unit_cube().0,
        None => synth::bumpy_sphere(40, 60, &mut ChaCha8Rng::seed_from_u64(2)),
    };
    let mut printed = BenchConfig::new("ke", "kw");
    printed.snr_form = SnrForm::AsPrinted;
    let conventional = BenchConfig::new("ke", "kw");
    println!(" m   n   bpv     H(e-3)      SNR dB   SNR dB (printed form)");
    for m in 2..=9 {
        let run = run_pipeline("mesh", &mesh, m, None, &conventional)?;
        let alt = run_pipeline("mesh", &mesh, m, None, &printed)?;
        let r = &run.row;
        println!(
            "{m:2} {:3} {:6.2} {:11.3e} {:9.2} {:9.2}",
            r.n, r.bpv, r.hausdorff_e3, r.snr_db, alt.row.snr_db
        );
    }
    Ok(())
}
