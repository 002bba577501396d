//! Capacity and fidelity sweeps over a mesh corpus, one CSV row per
//! (mesh, m, n) run.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cipher::{self, KeyMaterial, Role};
use crate::codec;
use crate::error::{Error, Result};
use crate::mesh_io::{read_mesh_file, Mesh, MeshFormat};
use crate::metrics::{self, serialize_db, SnrForm};
use crate::partition::partition;
use crate::predictor::{analyze, choose_n};
use crate::quantize::{dequantize, quantize};

/// One pipeline run. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub mesh: String,
    pub n_vertices: usize,
    pub n_faces: usize,
    pub m: u32,
    pub n: u32,
    pub embedded_bits: u64,
    pub bpv: f64,
    /// Hausdorff distance between original and recovered mesh, in units of 1e-3.
    pub hausdorff_e3: f64,
    #[serde(serialize_with = "serialize_db")]
    pub snr_db: f64,
    pub extract_error_percent: f64,
    pub analyze_ms: f64,
    pub encrypt_ms: f64,
    pub embed_ms: f64,
    pub extract_ms: f64,
    pub recover_ms: f64,
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub row: BenchRow,
    /// Recovered integer mesh equals the quantized original.
    pub integer_exact: bool,
    /// Hausdorff distance between quantized original and recovered integer coordinates.
    pub integer_hausdorff: f64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ke: KeyMaterial,
    pub kw: KeyMaterial,
    pub payload_seed: u64,
    /// Use the kd-tree Hausdorff path (exact, faster on dense meshes).
    pub indexed_hausdorff: bool,
    pub snr_form: SnrForm,
}

impl BenchConfig {
    pub fn new(ke_pass: &str, kw_pass: &str) -> Self {
        BenchConfig {
            ke: KeyMaterial::from_passphrase(ke_pass, Role::Encryption),
            kw: KeyMaterial::from_passphrase(kw_pass, Role::Hiding),
            payload_seed: 0,
            indexed_hausdorff: false,
            snr_form: SnrForm::Conventional,
        }
    }
}

/// Deterministic pseudo-random payload bits.
pub fn random_payload(bits: usize, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..bits).map(|_| rng.random::<bool>()).collect()
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs quantize, analyze, encrypt, embed, extract and recover on one mesh,
/// filling the payload to capacity. `n = None` picks the capacity-optimal length.
pub fn run_pipeline(id: &str, mesh: &Mesh, m: u32, n: Option<u32>, cfg: &BenchConfig) -> Result<PipelineRun> {
    let t0 = Instant::now();
    let q = quantize(mesh, m)?;
    let part = partition(mesh);
    let report = analyze(&q, &part)?;
    let n = choose_n(&report, n)?;
    let analyze_ms = ms(t0);

    let t0 = Instant::now();
    let enc = cipher::encrypt_mesh(&q, &cfg.ke)?;
    let encrypt_ms = ms(t0);

    let payload = random_payload(report.capacity(n) as usize, cfg.payload_seed);
    let t0 = Instant::now();
    let marked = codec::embed(&enc, &part, &report, n, &payload, &cfg.kw)?;
    let embed_ms = ms(t0);

    let t0 = Instant::now();
    let extracted = codec::extract(&marked, &cfg.kw)?;
    let extract_ms = ms(t0);

    let t0 = Instant::now();
    let recovered = codec::recover(&marked, &cfg.ke)?;
    let recover_ms = ms(t0);

    let mismatched =
        payload.iter().zip(&extracted).filter(|(a, b)| a != b).count() + payload.len().abs_diff(extracted.len());
    let extract_error_percent = if payload.is_empty() {
        0.0
    } else {
        100.0 * mismatched as f64 / payload.len() as f64
    };

    let restored = dequantize(&recovered);
    let hausdorff = |a: &[[f64; 3]], b: &[[f64; 3]]| {
        if cfg.indexed_hausdorff {
            metrics::hausdorff_indexed(a, b)
        } else {
            metrics::hausdorff(a, b)
        }
    };
    let (float_h, integer_h) = if mesh.vertices.is_empty() {
        (0.0, 0.0)
    } else {
        let ints = |qm: &crate::quantize::QuantizedMesh| {
            (0..qm.vertex_count())
                .map(|i| qm.signed(i).map(|c| c as f64))
                .collect::<Vec<_>>()
        };
        (
            hausdorff(&mesh.vertices, &restored.vertices)?,
            hausdorff(&ints(&q), &ints(&recovered))?,
        )
    };
    let snr_db = metrics::snr(mesh, &restored, cfg.snr_form).unwrap_or(f64::NAN);

    let embedded_bits = payload.len() as u64;
    let row = BenchRow {
        mesh: id.to_string(),
        n_vertices: mesh.vertex_count(),
        n_faces: mesh.face_count(),
        m,
        n,
        embedded_bits,
        bpv: if mesh.vertices.is_empty() {
            0.0
        } else {
            metrics::embedding_rate(embedded_bits, mesh.vertex_count())?
        },
        hausdorff_e3: float_h * 1e3,
        snr_db,
        extract_error_percent,
        analyze_ms,
        encrypt_ms,
        embed_ms,
        extract_ms,
        recover_ms,
    };
    Ok(PipelineRun {
        row,
        integer_exact: recovered == q,
        integer_hausdorff: integer_h,
    })
}

/// Mesh files under `dir` (recursively) with a known extension, sorted.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    if !dir.is_dir() {
        return Err(Error::Config(format!("corpus {} is not a directory", dir.display())));
    }
    let mut files: Vec<PathBuf> = walkdir::WalkDir::new(dir)
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file() && MeshFormat::from_path(e.path()).is_some())
        .map(|e| e.into_path())
        .collect();
    files.sort();
    Ok(files)
}

#[derive(Debug, Default)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    /// Meshes (or runs) that failed, with the reason. The sweep continues past them.
    pub failures: Vec<(String, String)>,
}

/// Sweeps every corpus mesh over `m_values` and `n_values` (capacity-optimal
/// `n` when `None`). Meshes outside the unit cube are scaled by a power of ten.
pub fn run_bench(dir: &Path, m_values: &[u32], n_values: Option<&[u32]>, cfg: &BenchConfig) -> Result<BenchOutcome> {
    let files = corpus_files(dir)?;
    let per_mesh: Vec<BenchOutcome> = files
        .par_iter()
        .map(|path| {
            let id = path.strip_prefix(dir).unwrap_or(path).display().to_string();
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            let mesh = match read_mesh_file(path, None) {
                Ok(mesh) => mesh.scaled_into_unit_cube().0,
                Err(e) => {
                    failures.push((id, e.to_string()));
                    return BenchOutcome { rows, failures };
                }
            };
            for &m in m_values {
                let l = crate::quantize::bit_length(m).unwrap_or(0);
                let ns: Vec<Option<u32>> = match n_values {
                    Some(ns) => ns.iter().filter(|&&n| n >= 1 && n <= l).map(|&n| Some(n)).collect(),
                    None => vec![None],
                };
                for n in ns {
                    match run_pipeline(&id, &mesh, m, n, cfg) {
                        Ok(run) => rows.push(run.row),
                        Err(e) => failures.push((format!("{id} m={m} n={n:?}"), e.to_string())),
                    }
                }
            }
            BenchOutcome { rows, failures }
        })
        .collect();

    let mut outcome = BenchOutcome::default();
    for part in per_mesh {
        outcome.rows.extend(part.rows);
        outcome.failures.extend(part.failures);
    }
    Ok(outcome)
}

/// Writes rows as CSV with a header line, even when there are no rows.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    writer.write_record(BENCH_COLUMNS)?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub const BENCH_COLUMNS: [&str; 15] = [
    "mesh",
    "n_vertices",
    "n_faces",
    "m",
    "n",
    "embedded_bits",
    "bpv",
    "hausdorff_e3",
    "snr_db",
    "extract_error_percent",
    "analyze_ms",
    "encrypt_ms",
    "embed_ms",
    "extract_ms",
    "recover_ms",
];

/// Mean embedding rate per `m`, ascending.
pub fn mean_bpv_by_m(rows: &[BenchRow]) -> Vec<(u32, f64)> {
    let mut ms: Vec<u32> = rows.iter().map(|r| r.m).collect();
    ms.sort_unstable();
    ms.dedup();
    ms.into_iter()
        .map(|m| {
            let sel: Vec<f64> = rows.iter().filter(|r| r.m == m).map(|r| r.bpv).collect();
            (m, sel.iter().sum::<f64>() / sel.len() as f64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;

    #[test]
    fn tetrahedron_run() {
        let cfg = BenchConfig::new("e", "w");
        let run = run_pipeline("tetra", &synth::tetrahedron(), 4, Some(1), &cfg).unwrap();
        assert!(run.integer_exact);
        assert_eq!(run.integer_hausdorff, 0.0);
        assert_eq!(run.row.extract_error_percent, 0.0);
        assert!(run.row.embedded_bits <= 3);
        assert_eq!(run.row.bpv, run.row.embedded_bits as f64 / 4.0);
    }

    #[test]
    fn empty_csv_has_header() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().trim_end(), BENCH_COLUMNS.join(","));
    }

    #[test]
    fn csv_columns_follow_row_fields() {
        let cfg = BenchConfig::new("e", "w");
        let run = run_pipeline("s", &synth::sphere(6, 8, 0.5), 4, None, &cfg).unwrap();
        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&run.row), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), BENCH_COLUMNS.join(","));
        let values: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(values.len(), BENCH_COLUMNS.len());
        assert_eq!(values[0], "s");
        assert_eq!(values[4], run.row.n.to_string());
    }

    #[test]
    fn payload_is_deterministic() {
        assert_eq!(random_payload(100, 3), random_payload(100, 3));
        assert_ne!(random_payload(100, 3), random_payload(100, 4));
    }
}
