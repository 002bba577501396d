//! Greedy split of the vertices into an embedded set and a reference set.
//!
//! Vertices are visited in the order they first appear when scanning the
//! faces front to back (left to right inside a face). A visited vertex that is
//! not already a reference vertex joins the embedded set and pulls its whole
//! 1-ring into the reference set. The embedded set is therefore a maximal
//! independent set of the face-adjacency graph, restricted to vertices that
//! appear in some face.

use serde::{Deserialize, Serialize};

use crate::mesh_io::Mesh;

/// Face adjacency in compressed sparse row form. Neighbor lists are sorted
/// and free of duplicates and self references.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Adjacency {
    pub fn from_faces(faces: &[[u32; 3]], vertex_count: usize) -> Self {
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(faces.len() * 6);
        for &[a, b, c] in faces {
            for (s, d) in [(a, b), (b, a), (a, c), (c, a), (b, c), (c, b)] {
                if s != d {
                    pairs.push((s, d));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; vertex_count + 1];
        for &(s, _) in &pairs {
            offsets[s as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = pairs.into_iter().map(|(_, d)| d).collect();
        Adjacency { offsets, neighbors }
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexRole {
    Embedded,
    Reference,
    /// The vertex appears in no face and carries nothing.
    Unassigned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Embedded vertices in traversal order.
    pub embedded: Vec<u32>,
    /// Reference vertices, ascending.
    pub reference: Vec<u32>,
    /// 1-ring of each embedded vertex (same order as `embedded`), ascending.
    pub rings: Vec<Vec<u32>>,
    /// Vertices that appear in no face, ascending.
    pub unassigned: Vec<u32>,
    roles: Vec<VertexRole>,
}

impl Partition {
    pub fn role(&self, v: u32) -> VertexRole {
        self.roles[v as usize]
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }
}

pub fn partition(mesh: &Mesh) -> Partition {
    partition_faces(&mesh.faces, mesh.vertices.len())
}

/// Partition from topology alone; this is all an extracting recipient has.
pub fn partition_faces(faces: &[[u32; 3]], vertex_count: usize) -> Partition {
    let adjacency = Adjacency::from_faces(faces, vertex_count);
    let mut roles = vec![VertexRole::Unassigned; vertex_count];
    let mut embedded = Vec::new();
    let mut rings = Vec::new();

    for &v in faces.iter().flatten() {
        if roles[v as usize] != VertexRole::Unassigned {
            continue;
        }
        roles[v as usize] = VertexRole::Embedded;
        let ring = adjacency.neighbors(v);
        for &w in ring {
            // A neighbor can't already be embedded: it would have claimed v.
            debug_assert_ne!(roles[w as usize], VertexRole::Embedded);
            roles[w as usize] = VertexRole::Reference;
        }
        embedded.push(v);
        rings.push(ring.to_vec());
    }

    let collect = |role: VertexRole| {
        roles
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == role)
            .map(|(i, _)| i as u32)
            .collect::<Vec<_>>()
    };
    let reference = collect(VertexRole::Reference);
    let unassigned = collect(VertexRole::Unassigned);
    Partition {
        embedded,
        reference,
        rings,
        unassigned,
        roles,
    }
}
