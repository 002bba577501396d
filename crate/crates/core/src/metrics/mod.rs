//! Fidelity and capacity measures: Hausdorff distance, SNR, bits per vertex.

mod kdtree;

pub use kdtree::KdTree;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::mesh_io::Mesh;

type Point = [f64; 3];

fn dist2(a: &Point, b: &Point) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    dx * dx + dy * dy + dz * dz
}

/// `max_{a in A} min_{b in B} |a - b|` by exhaustive search.
pub fn directed_hausdorff(a: &[Point], b: &[Point]) -> f64 {
    a.par_iter()
        .map(|p| b.iter().map(|q| dist2(p, q)).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max)
        .sqrt()
}

/// Symmetric Hausdorff distance, exact `O(|A| |B|)` evaluation.
pub fn hausdorff(a: &[Point], b: &[Point]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Invalid("Hausdorff distance of an empty point set".into()));
    }
    Ok(directed_hausdorff(a, b).max(directed_hausdorff(b, a)))
}

/// Same value as [`hausdorff`], with nearest-neighbor queries answered by a
/// kd-tree. Meant for meshes with hundreds of thousands of vertices.
pub fn hausdorff_indexed(a: &[Point], b: &[Point]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Invalid("Hausdorff distance of an empty point set".into()));
    }
    let directed = |from: &[Point], to: &[Point]| {
        let tree = KdTree::new(to);
        from.par_iter()
            .map(|p| tree.nearest_dist2(p))
            .reduce(|| 0.0, f64::max)
            .sqrt()
    };
    Ok(directed(a, b).max(directed(b, a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SnrForm {
    /// `10 lg( sum |v - mean|^2 / sum |v - g|^2 )`: noise energy below.
    #[default]
    Conventional,
    /// `10 lg( sum |v - mean|^2 / sum |g - mean|^2 )`, the variant with the
    /// modified coordinates' spread around the original mean below.
    AsPrinted,
}

/// Signal-to-noise ratio in dB; `+inf` when the denominator vanishes.
pub fn snr(original: &Mesh, modified: &Mesh, form: SnrForm) -> Result<f64> {
    let (v, g) = (&original.vertices, &modified.vertices);
    if v.len() != g.len() {
        return Err(Error::Invalid(format!(
            "vertex counts differ: {} vs {}",
            v.len(),
            g.len()
        )));
    }
    if v.is_empty() {
        return Err(Error::Invalid("SNR of an empty mesh".into()));
    }
    let count = v.len() as f64;
    let mut mean = [0.0; 3];
    for p in v {
        for axis in 0..3 {
            mean[axis] += p[axis];
        }
    }
    mean.iter_mut().for_each(|c| *c /= count);

    let signal: f64 = v.iter().map(|p| dist2(p, &mean)).sum();
    if signal == 0.0 {
        return Err(Error::Invalid("original mesh has zero coordinate variance".into()));
    }
    let noise: f64 = match form {
        SnrForm::Conventional => v.iter().zip(g).map(|(p, q)| dist2(p, q)).sum(),
        SnrForm::AsPrinted => g.iter().map(|q| dist2(q, &mean)).sum(),
    };
    if noise == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (signal / noise).log10())
}

/// Embedded bits per vertex.
pub fn embedding_rate(embedded_bits: u64, n_vertices: usize) -> Result<f64> {
    if n_vertices == 0 {
        return Err(Error::Invalid("embedding rate of a mesh without vertices".into()));
    }
    Ok(embedded_bits as f64 / n_vertices as f64)
}

/// Writes `+inf` as the string `"inf"`, JSON has no infinity.
pub fn serialize_db<S: Serializer>(value: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if value.is_infinite() {
        s.serialize_str(if *value > 0.0 { "inf" } else { "-inf" })
    } else {
        s.serialize_f64(*value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FidelityReport {
    pub hausdorff: f64,
    #[serde(serialize_with = "serialize_db")]
    pub snr_db: f64,
    pub embedding_rate: f64,
    pub embedded_bits: u64,
}

pub fn fidelity(
    original: &Mesh,
    modified: &Mesh,
    embedded_bits: u64,
    form: SnrForm,
    indexed: bool,
) -> Result<FidelityReport> {
    let hausdorff = if indexed {
        hausdorff_indexed(&original.vertices, &modified.vertices)?
    } else {
        hausdorff(&original.vertices, &modified.vertices)?
    };
    Ok(FidelityReport {
        hausdorff,
        snr_db: snr(original, modified, form)?,
        embedding_rate: embedding_rate(embedded_bits, original.vertices.len())?,
        embedded_bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mesh(vertices: Vec<Point>) -> Mesh {
        Mesh {
            vertices,
            faces: vec![],
        }
    }

    proptest::proptest! {
        #[test]
        fn indexed_equals_exhaustive(
            a in proptest::collection::vec([-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0], 1..200),
            b in proptest::collection::vec([-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0], 1..200),
        ) {
            proptest::prop_assert_eq!(hausdorff_indexed(&a, &b).unwrap(), hausdorff(&a, &b).unwrap());
        }
    }

    #[test]
    fn hausdorff_examples() {
        let a = vec![[0.0, 0.0, 0.0], [1.0, 2.0, 3.0]];
        assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        assert_eq!(hausdorff(&[[0.0, 0.0, 0.0]], &[[3.0, 4.0, 0.0]]).unwrap(), 5.0);
        assert!(hausdorff(&[], &a).is_err());
        assert!(hausdorff_indexed(&a, &[]).is_err());
    }

    #[test]
    fn hausdorff_is_asymmetric_inside_symmetric_outside() {
        let a = vec![[0.0, 0.0, 0.0]];
        let b = vec![[0.0, 0.0, 0.0], [10.0, 0.0, 0.0]];
        assert_eq!(directed_hausdorff(&a, &b), 0.0);
        assert_eq!(directed_hausdorff(&b, &a), 10.0);
        assert_eq!(hausdorff(&a, &b).unwrap(), hausdorff(&b, &a).unwrap());
    }

    #[test]
    fn snr_by_hand() {
        // mean (0.5,0,0); signal = 0.25 + 0.25 = 0.5
        let v = mesh(vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]);
        let g = mesh(vec![[0.0, 0.1, 0.0], [1.0, 0.0, 0.0]]);
        // noise = 0.01 -> 10 lg 50
        let conventional = snr(&v, &g, SnrForm::Conventional).unwrap();
        assert!((conventional - 10.0 * 50f64.log10()).abs() < 1e-12);
        // spread of g about (0.5,0,0) = 0.26 + 0.25 -> 10 lg(0.5/0.51)
        let printed = snr(&v, &g, SnrForm::AsPrinted).unwrap();
        assert!((printed - 10.0 * (0.5f64 / 0.51).log10()).abs() < 1e-12);
    }

    #[test]
    fn snr_edges() {
        let v = mesh(vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]);
        assert_eq!(snr(&v, &v, SnrForm::Conventional).unwrap(), f64::INFINITY);
        let flat = mesh(vec![[0.2; 3], [0.2; 3]]);
        assert!(snr(&flat, &flat, SnrForm::Conventional).is_err());
        assert!(snr(&v, &mesh(vec![[0.0; 3]]), SnrForm::Conventional).is_err());
    }

    #[test]
    fn rates() {
        assert!((embedding_rate(16312, 988).unwrap() - 16.51).abs() < 0.005);
        assert_eq!(embedding_rate(0, 10).unwrap(), 0.0);
        assert_eq!(embedding_rate(3, 4).unwrap(), 0.75);
        assert!(embedding_rate(3, 0).is_err());
    }

    #[test]
    fn infinite_snr_serializes_as_string() {
        let r = FidelityReport {
            hausdorff: 0.0,
            snr_db: f64::INFINITY,
            embedding_rate: 1.5,
            embedded_bits: 6,
        };
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"snr_db\":\"inf\""), "{json}");
    }
}
