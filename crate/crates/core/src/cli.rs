//! Command implementations behind the `rdh3d` binary. Each command works on
//! in-memory values; the binary only does argument parsing and file I/O.

use serde::{Deserialize, Serialize};

use crate::bench::random_payload;
use crate::cipher::{self, KeyMaterial};
use crate::codec::{self, MarkedContainer};
use crate::error::{Error, Result};
use crate::mesh_io::Mesh;
use crate::metrics::{self, FidelityReport, SnrForm};
use crate::partition::{partition, partition_faces};
use crate::predictor::{analyze, choose_n, PredictionReport};
use crate::quantize::{dequantize, quantize};

/// JSON document written by `analyze` and read by `embed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub vertex_count: usize,
    pub face_count: usize,
    pub m: u32,
    pub l: u32,
    /// Chosen embedding length.
    pub n: u32,
    pub capacity_bits: u64,
    pub max_t: u32,
    /// Embedded vertices (0-based), partition order.
    pub embedded: Vec<u32>,
    /// Maximum embedding length of each embedded vertex.
    pub t: Vec<u32>,
    /// Embedded vertices skipped at `n` (0-based).
    pub excluded: Vec<u32>,
    /// Capacity in bits for n = 1..=l.
    pub capacity_curve: Vec<u64>,
}

impl AnalysisDocument {
    pub fn new(report: &PredictionReport, face_count: usize, n: u32) -> Self {
        let excluded = report
            .embedded
            .iter()
            .zip(report.excluded(n))
            .filter(|(_, ex)| *ex)
            .map(|(&v, _)| v)
            .collect();
        AnalysisDocument {
            vertex_count: report.vertex_count,
            face_count,
            m: report.m,
            l: report.l,
            n,
            capacity_bits: report.capacity(n),
            max_t: report.max_t(),
            embedded: report.embedded.clone(),
            t: report.t.clone(),
            excluded,
            capacity_curve: report.capacity_curve.clone(),
        }
    }

    pub fn report(&self) -> PredictionReport {
        PredictionReport {
            m: self.m,
            l: self.l,
            vertex_count: self.vertex_count,
            embedded: self.embedded.clone(),
            t: self.t.clone(),
            capacity_curve: self.capacity_curve.clone(),
        }
    }
}

pub fn cmd_analyze(mesh: &Mesh, m: u32, n: Option<u32>) -> Result<AnalysisDocument> {
    let q = quantize(mesh, m)?;
    let report = analyze(&q, &partition(mesh))?;
    let n = choose_n(&report, n)?;
    Ok(AnalysisDocument::new(&report, mesh.face_count(), n))
}

pub fn cmd_encrypt(mesh: &Mesh, m: u32, ke: &KeyMaterial) -> Result<MarkedContainer> {
    let q = quantize(mesh, m)?;
    Ok(MarkedContainer::unmarked(&cipher::encrypt_mesh(&q, ke)?))
}

/// Embeds `payload` (or, when `None`, seeded random bits filling the
/// capacity) into an unmarked container.
pub fn cmd_embed(
    container: &MarkedContainer,
    doc: &AnalysisDocument,
    payload: Option<&[bool]>,
    n: Option<u32>,
    kw: &KeyMaterial,
    payload_seed: u64,
) -> Result<MarkedContainer> {
    if container.is_marked() {
        return Err(Error::Config("container already carries a payload".into()));
    }
    if doc.m != container.m || doc.l != container.l || doc.vertex_count != container.vertex_count() {
        return Err(Error::Config(
            "analysis report was made for a different mesh or precision".into(),
        ));
    }
    let part = partition_faces(&container.faces, container.vertex_count());
    if part.embedded != doc.embedded || doc.t.len() != doc.embedded.len() {
        return Err(Error::Config(
            "analysis report does not match the container topology".into(),
        ));
    }
    let report = doc.report();
    let n = choose_n(&report, n.or(Some(doc.n)))?;
    let generated;
    let payload = match payload {
        Some(p) => p,
        None => {
            generated = random_payload(report.capacity(n) as usize, payload_seed);
            &generated
        }
    };
    codec::embed(&container.to_quantized(), &part, &report, n, payload, kw)
}

pub fn cmd_extract(container: &MarkedContainer, kw: &KeyMaterial) -> Result<Vec<bool>> {
    codec::extract(container, kw)
}

/// Recovers and dequantizes the original mesh.
pub fn cmd_recover(container: &MarkedContainer, ke: &KeyMaterial) -> Result<Mesh> {
    Ok(dequantize(&codec::recover(container, ke)?))
}

pub fn cmd_metrics(
    original: &Mesh,
    modified: &Mesh,
    embedded_bits: u64,
    form: SnrForm,
    indexed: bool,
) -> Result<FidelityReport> {
    metrics::fidelity(original, modified, embedded_bits, form, indexed)
}

/// Bytes to bits, most significant bit of each byte first.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
        .collect()
}

/// Bits to bytes, MSB first; a partial last byte is zero padded.
pub fn bits_to_bytes(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)))
        })
        .collect()
}

/// Parses `"4"`, `"2-9"` or `"2,3,5"` into an ascending list.
pub fn parse_range(text: &str) -> Result<Vec<u32>> {
    let bad = || Error::Config(format!("cannot parse range {text:?}, expected N, A-B or A,B,C"));
    let mut values: Vec<u32> = if let Some((a, b)) = text.split_once('-') {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        text.split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cipher::Role;
    use crate::synth;

    #[test]
    fn bit_packing() {
        assert_eq!(
            bytes_to_bits(&[0b1010_0001]),
            vec![true, false, true, false, false, false, false, true]
        );
        assert_eq!(bits_to_bytes(&[true, true]), vec![0b1100_0000]);
        let bytes = b"payload".to_vec();
        assert_eq!(bits_to_bytes(&bytes_to_bits(&bytes)), bytes);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4").unwrap(), vec![4]);
        assert_eq!(parse_range("2-5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_range("9,2,2").unwrap(), vec![2, 9]);
        assert!(parse_range("5-2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn zero_face_mesh_analysis() {
        let mesh = Mesh {
            vertices: vec![[0.1, 0.2, 0.3]; 3],
            faces: vec![],
        };
        let doc = cmd_analyze(&mesh, 4, None).unwrap();
        assert!(doc.embedded.is_empty());
        assert!(doc.capacity_curve.iter().all(|&c| c == 0));
        assert_eq!(doc.capacity_bits, 0);
    }

    #[test]
    fn document_round_trips_through_json() {
        let doc = cmd_analyze(&synth::sphere(6, 9, 0.7), 5, None).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<AnalysisDocument>(&json).unwrap(), doc);
        assert_eq!(doc.capacity_bits, doc.capacity_curve[doc.n as usize - 1]);
    }

    #[test]
    fn embed_refuses_mismatches() {
        let mesh = synth::sphere(6, 9, 0.7);
        let ke = KeyMaterial::from_passphrase("e", Role::Encryption);
        let kw = KeyMaterial::from_passphrase("w", Role::Hiding);
        let c = cmd_encrypt(&mesh, 4, &ke).unwrap();
        let wrong_m = cmd_analyze(&mesh, 5, None).unwrap();
        assert!(matches!(
            cmd_embed(&c, &wrong_m, None, None, &kw, 0),
            Err(Error::Config(_))
        ));
        let doc = cmd_analyze(&mesh, 4, None).unwrap();
        let marked = cmd_embed(&c, &doc, None, None, &kw, 0).unwrap();
        assert!(matches!(
            cmd_embed(&marked, &doc, None, None, &kw, 0),
            Err(Error::Config(_))
        ));
        assert_eq!(marked.payload_bits, doc.capacity_bits);
    }
}
