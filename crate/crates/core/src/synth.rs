//! Synthetic meshes: small fixtures, smooth surfaces, and random soups.

use std::f64::consts::PI;

use rand::Rng;

use crate::mesh_io::Mesh;

/// Regular tetrahedron inscribed in the cube `[-0.5, 0.5]^3`.
pub fn tetrahedron() -> Mesh {
    Mesh {
        vertices: vec![[0.5, 0.5, 0.5], [-0.5, -0.5, 0.5], [-0.5, 0.5, -0.5], [0.5, -0.5, -0.5]],
        faces: vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
    }
}

/// UV sphere with `rings` latitude bands and `segments` longitude slices.
/// Vertex count is `(rings - 1) * segments + 2`.
pub fn sphere(rings: usize, segments: usize, radius: f64) -> Mesh {
    assert!(rings >= 2 && segments >= 3, "sphere needs rings >= 2 and segments >= 3");
    let mut vertices = vec![[0.0, 0.0, radius]];
    for r in 1..rings {
        let theta = PI * r as f64 / rings as f64;
        for s in 0..segments {
            let phi = 2.0 * PI * s as f64 / segments as f64;
            vertices.push([
                radius * theta.sin() * phi.cos(),
                radius * theta.sin() * phi.sin(),
                radius * theta.cos(),
            ]);
        }
    }
    vertices.push([0.0, 0.0, -radius]);
    let south = (vertices.len() - 1) as u32;
    let ring_start = |r: usize| 1 + ((r - 1) * segments) as u32;
    let seg = segments as u32;

    let mut faces = Vec::new();
    for s in 0..seg {
        faces.push([0, ring_start(1) + s, ring_start(1) + (s + 1) % seg]);
    }
    for r in 1..rings - 1 {
        let (a, b) = (ring_start(r), ring_start(r + 1));
        for s in 0..seg {
            let s1 = (s + 1) % seg;
            faces.push([a + s, b + s, b + s1]);
            faces.push([a + s, b + s1, a + s1]);
        }
    }
    let last = ring_start(rings - 1);
    for s in 0..seg {
        faces.push([south, last + (s + 1) % seg, last + s]);
    }
    Mesh { vertices, faces }
}

/// Smooth height field over an `nx` by `ny` grid in `[-0.9, 0.9]^2`, with a
/// small random jitter so coordinates use the full `f64` precision.
pub fn terrain<R: Rng>(nx: usize, ny: usize, rng: &mut R) -> Mesh {
    assert!(nx >= 2 && ny >= 2, "terrain needs at least a 2x2 grid");
    let mut vertices = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let x = -0.9 + 1.8 * i as f64 / (nx - 1) as f64;
            let y = -0.9 + 1.8 * j as f64 / (ny - 1) as f64;
            let z = 0.25 * (3.0 * x).sin() * (2.0 * y).cos() + 0.1 * (5.0 * x * y).sin();
            let mut jitter = || rng.random_range(-1e-4..1e-4);
            vertices.push([x + jitter(), y + jitter(), z + jitter()]);
        }
    }
    let mut faces = Vec::with_capacity(2 * (nx - 1) * (ny - 1));
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let a = (j * nx + i) as u32;
            let b = a + 1;
            let c = a + nx as u32;
            let d = c + 1;
            faces.push([a, b, d]);
            faces.push([a, d, c]);
        }
    }
    Mesh { vertices, faces }
}

/// Random points in `(-1, 1)^3` joined by random non-degenerate triangles.
/// Not a manifold; exercises partition and codec on arbitrary topology.
pub fn random_mesh<R: Rng>(n_vertices: usize, n_faces: usize, rng: &mut R) -> Mesh {
    assert!(n_vertices >= 3 || n_faces == 0, "faces need at least 3 vertices");
    let vertices = (0..n_vertices)
        .map(|_| {
            [
                rng.random_range(-0.999..0.999),
                rng.random_range(-0.999..0.999),
                rng.random_range(-0.999..0.999),
            ]
        })
        .collect();
    let faces = (0..n_faces)
        .map(|_| {
            let a = rng.random_range(0..n_vertices as u32);
            let mut b = rng.random_range(0..n_vertices as u32);
            while b == a {
                b = rng.random_range(0..n_vertices as u32);
            }
            let mut c = rng.random_range(0..n_vertices as u32);
            while c == a || c == b {
                c = rng.random_range(0..n_vertices as u32);
            }
            [a, b, c]
        })
        .collect();
    Mesh { vertices, faces }
}

/// Random points on a noisy sphere, triangulated like [`sphere`]. Spatially
/// coherent like a scanned surface, so ring prediction works well on it.
pub fn bumpy_sphere<R: Rng>(rings: usize, segments: usize, rng: &mut R) -> Mesh {
    let mut mesh = sphere(rings, segments, 0.6);
    for v in &mut mesh.vertices {
        let bump = 1.0 + 0.05 * (4.0 * v[0]).sin() * (3.0 * v[1]).cos() + rng.random_range(-2e-3..2e-3);
        for c in v.iter_mut() {
            *c *= bump;
        }
    }
    mesh
}
