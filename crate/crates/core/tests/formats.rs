//! Mesh text formats and the container byte layout.

use proptest::prelude::*;

use rdh3d::codec::{read_container, write_container, MarkedContainer};
use rdh3d::mesh_io::{parse_mesh, write_mesh};
use rdh3d::{Error, Mesh, MeshFormat};

fn mesh_strategy() -> impl Strategy<Value = Mesh> {
    (1usize..40).prop_flat_map(|n| {
        let coord = prop_oneof![any::<f64>().prop_filter("finite", |v| v.is_finite()), -1.0f64..1.0];
        (
            prop::collection::vec([coord.clone(), coord.clone(), coord], n),
            prop::collection::vec([0..n as u32, 0..n as u32, 0..n as u32], 0..60),
        )
            .prop_map(|(vertices, faces)| Mesh::new(vertices, faces).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn write_then_parse_is_identity(mesh in mesh_strategy()) {
        for format in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
            let bytes = write_mesh(&mesh, format);
            prop_assert_eq!(&parse_mesh(&bytes, format).unwrap(), &mesh);
            // Writing is a fixed point after one round trip.
            prop_assert_eq!(write_mesh(&parse_mesh(&bytes, format).unwrap(), format), bytes);
        }
    }

    #[test]
    fn parser_never_panics(text in ".{0,200}") {
        for format in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
            let _ = parse_mesh(text.as_bytes(), format);
        }
    }

    #[test]
    fn container_reader_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = read_container(&bytes);
    }
}

#[test]
fn tagged_vertex_order_survives() {
    let vertices: Vec<[f64; 3]> = (0..20)
        .map(|i| [i as f64, -(i as f64) / 7.0, 1e-9 * i as f64])
        .collect();
    let mesh = Mesh::new(vertices, vec![[19, 0, 7], [3, 3, 3]]).unwrap();
    for format in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
        let back = parse_mesh(&write_mesh(&mesh, format), format).unwrap();
        for (i, v) in back.vertices.iter().enumerate() {
            assert_eq!(v[0], i as f64);
        }
        assert_eq!(back.faces, mesh.faces);
    }
}

#[test]
fn unmarked_container_round_trips() {
    let c = MarkedContainer {
        m: 2,
        l: 8,
        n: 0,
        payload_bits: 0,
        signs: vec![[false, true, false], [true, true, true], [false; 3]],
        excluded: vec![false],
        magnitudes: vec![[1, 2, 3], [255, 0, 99], [7, 7, 7]],
        faces: vec![[0, 1, 2]],
    };
    let bytes = write_container(&c);
    assert_eq!(read_container(&bytes).unwrap(), c);
    assert_eq!(&bytes[..4], b"RDH3");
    for cut in 0..bytes.len() {
        assert!(matches!(read_container(&bytes[..cut]), Err(Error::Corrupt(_))));
    }
    let mut longer = bytes.clone();
    longer.push(0);
    assert!(matches!(read_container(&longer), Err(Error::Corrupt(_))));
}
