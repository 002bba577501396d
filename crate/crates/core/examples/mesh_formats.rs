//! Read a mesh in any supported format and write it in the others.
//!
//!     cargo run --example mesh_formats -- path/to/model.off [out_dir]

use std::path::PathBuf;

use rdh3d::mesh_io::{read_mesh_file, write_mesh_file};
use rdh3d::{synth, MeshFormat};

fn main() -> rdh3d::Result<()> {
    let mut args = std::env::args().skip(1);
    let mesh = match args.next() {
        Some(path) => read_mesh_file(&PathBuf::from(path), None)?,
        None => synth::tetrahedron(),
    };
    let out_dir = PathBuf::from(
        args.next()
            .unwrap_or_else(|| std::env::temp_dir().display().to_string()),
    );
    println!(
        "{} vertices, {} faces, max |coordinate| {}",
        mesh.vertex_count(),
        mesh.face_count(),
        mesh.max_abs_coordinate()
    );

    let (scaled, factor) = mesh.scaled_into_unit_cube();
    if factor != 1.0 {
        println!("divide by {factor} to bring coordinates into (-1, 1)");
    }
    for format in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
        let path = out_dir.join(format!("mesh_formats_example.{}", format.extension()));
        write_mesh_file(&path, &scaled, format)?;
        let back = read_mesh_file(&path, None)?;
        println!("{}: round trip identical = {}", path.display(), back == scaled);
    }
    Ok(())
}
