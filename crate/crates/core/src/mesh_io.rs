//! OFF, OBJ and ASCII PLY reading and writing for triangle meshes.
//!
//! Faces are stored 0-based in memory. OBJ indices are shifted on the way in
//! and out. Coordinates are written in shortest round-trip decimal form, so a
//! parse of written output reproduces every `f64` bit for bit.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, ParseErrorKind, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeshFormat {
    Off,
    Obj,
    Ply,
}

impl MeshFormat {
    /// Guess the format from a file extension (case-insensitive).
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "off" => Some(MeshFormat::Off),
            "obj" => Some(MeshFormat::Obj),
            "ply" => Some(MeshFormat::Ply),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            MeshFormat::Off => "off",
            MeshFormat::Obj => "obj",
            MeshFormat::Ply => "ply",
        }
    }
}

impl std::str::FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(MeshFormat::Off),
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            other => Err(Error::Config(format!("unknown mesh format {other:?}"))),
        }
    }
}

/// A triangle mesh: vertex coordinates and 0-based triangle indices, both in
/// file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[u32; 3]>,
}

impl Mesh {
    pub fn new(vertices: Vec<[f64; 3]>, faces: Vec<[u32; 3]>) -> Result<Self> {
        let mesh = Mesh { vertices, faces };
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Largest absolute coordinate, 0 for an empty mesh.
    pub fn max_abs_coordinate(&self) -> f64 {
        self.vertices.iter().flatten().fold(0.0, |acc, c| acc.max(c.abs()))
    }

    /// Divides every coordinate by the smallest power of ten that brings the
    /// mesh strictly inside `(-1, 1)`. Returns the mesh and the divisor used
    /// (1 when the mesh already fits).
    pub fn scaled_into_unit_cube(&self) -> (Mesh, f64) {
        let max = self.max_abs_coordinate();
        if max < 1.0 {
            return (self.clone(), 1.0);
        }
        let mut divisor = 10f64.powi(max.log10().floor() as i32 + 1);
        while max / divisor >= 1.0 {
            divisor *= 10.0;
        }
        let vertices = self.vertices.iter().map(|v| v.map(|c| c / divisor)).collect();
        (
            Mesh {
                vertices,
                faces: self.faces.clone(),
            },
            divisor,
        )
    }

    /// Checks that every face index addresses an existing vertex.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for (fi, face) in self.faces.iter().enumerate() {
            if let Some(&bad) = face.iter().find(|&&i| i as usize >= n) {
                return Err(Error::Invalid(format!(
                    "face {fi} references vertex {bad}, mesh has {n} vertices"
                )));
            }
        }
        Ok(())
    }
}

/// Non-blank lines with their 1-based line numbers. `#` starts a comment.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_coord(tok: &str, line: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::parse(line, ParseErrorKind::NonNumeric(tok.to_string()))),
    }
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, ParseErrorKind::NonNumeric(tok.to_string())))
}

fn parse_index(tok: &str, line: usize) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| Error::parse(line, ParseErrorKind::NonNumeric(tok.to_string())))
}

fn zero_based(index: i64, vertex_count: usize, line: usize) -> Result<u32> {
    if index < 0 || index as u64 >= vertex_count as u64 {
        return Err(Error::parse(
            line,
            ParseErrorKind::IndexOutOfRange { index, vertex_count },
        ));
    }
    Ok(index as u32)
}

fn parse_xyz(tokens: &[&str], line: usize) -> Result<[f64; 3]> {
    if tokens.len() != 3 {
        return Err(Error::parse(
            line,
            ParseErrorKind::MalformedLine(format!("expected 3 coordinates, found {}", tokens.len())),
        ));
    }
    Ok([
        parse_coord(tokens[0], line)?,
        parse_coord(tokens[1], line)?,
        parse_coord(tokens[2], line)?,
    ])
}

/// Parses a counted `k i j l` face row with 0-based indices (OFF and PLY).
fn parse_counted_face(tokens: &[&str], vertex_count: usize, line: usize) -> Result<[u32; 3]> {
    let k = parse_count(tokens[0], line)?;
    if k != 3 {
        return Err(Error::parse(line, ParseErrorKind::NonTriangle(k)));
    }
    if tokens.len() != 4 {
        return Err(Error::parse(
            line,
            ParseErrorKind::MalformedLine(format!("expected 3 indices, found {}", tokens.len() - 1)),
        ));
    }
    let mut face = [0u32; 3];
    for (slot, tok) in face.iter_mut().zip(&tokens[1..]) {
        *slot = zero_based(parse_index(tok, line)?, vertex_count, line)?;
    }
    Ok(face)
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

pub fn parse_mesh(bytes: &[u8], format: MeshFormat) -> Result<Mesh> {
    let text = String::from_utf8_lossy(bytes);
    match format {
        MeshFormat::Off => parse_off(&text),
        MeshFormat::Obj => parse_obj(&text),
        MeshFormat::Ply => parse_ply(&text),
    }
}

fn parse_off(text: &str) -> Result<Mesh> {
    let eof = || Error::parse(last_line(text), ParseErrorKind::UnexpectedEof);
    let mut lines = significant_lines(text);

    let (line, head) = lines.next().ok_or_else(eof)?;
    if head[0] != "OFF" {
        return Err(Error::parse(
            line,
            ParseErrorKind::MalformedHeader(format!("expected \"OFF\", found {:?}", head[0])),
        ));
    }
    // Counts may share the keyword line ("OFF 8 12 0").
    let (line, counts) = if head.len() > 1 {
        (line, head[1..].to_vec())
    } else {
        lines.next().ok_or_else(eof)?
    };
    if !(2..=3).contains(&counts.len()) {
        return Err(Error::parse(
            line,
            ParseErrorKind::MalformedHeader("expected \"N M [E]\" counts".into()),
        ));
    }
    let n = parse_count(counts[0], line)?;
    let m = parse_count(counts[1], line)?;
    if let Some(e) = counts.get(2) {
        parse_count(e, line)?;
    }

    let mut vertices = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, tokens) = lines.next().ok_or_else(eof)?;
        vertices.push(parse_xyz(&tokens, line)?);
    }
    let mut faces = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.next().ok_or_else(eof)?;
        faces.push(parse_counted_face(&tokens, n, line)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, ParseErrorKind::TrailingData));
    }
    Ok(Mesh { vertices, faces })
}

fn parse_obj(text: &str) -> Result<Mesh> {
    let mut vertices = Vec::new();
    // Faces are resolved after all vertices are known.
    let mut raw_faces: Vec<(usize, [i64; 3])> = Vec::new();

    for (line, tokens) in significant_lines(text) {
        match tokens[0] {
            "v" => vertices.push(parse_xyz(&tokens[1..], line)?),
            "f" => {
                let k = tokens.len() - 1;
                if k != 3 {
                    return Err(Error::parse(line, ParseErrorKind::NonTriangle(k)));
                }
                let mut face = [0i64; 3];
                for (slot, tok) in face.iter_mut().zip(&tokens[1..]) {
                    // "i", "i/t", "i//n" and "i/t/n" all start with the position index.
                    let pos = tok.split('/').next().unwrap_or("");
                    let idx = parse_index(pos, line)?;
                    *slot = match idx {
                        0 => {
                            return Err(Error::parse(
                                line,
                                ParseErrorKind::IndexOutOfRange {
                                    index: 0,
                                    vertex_count: vertices.len(),
                                },
                            ))
                        }
                        i if i < 0 => vertices.len() as i64 + i,
                        i => i - 1,
                    };
                }
                raw_faces.push((line, face));
            }
            _ => {}
        }
    }

    let n = vertices.len();
    let faces = raw_faces
        .into_iter()
        .map(|(line, f)| {
            Ok([
                zero_based(f[0], n, line)?,
                zero_based(f[1], n, line)?,
                zero_based(f[2], n, line)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mesh { vertices, faces })
}

fn parse_ply(text: &str) -> Result<Mesh> {
    let eof = || Error::parse(last_line(text), ParseErrorKind::UnexpectedEof);
    let header_err = |line: usize, msg: &str| Error::parse(line, ParseErrorKind::MalformedHeader(msg.to_string()));

    // PLY has no inline comment syntax, so lines are tokenized directly.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty());

    let (line, magic) = lines.next().ok_or_else(eof)?;
    if magic != ["ply"] {
        return Err(header_err(line, "expected \"ply\""));
    }

    #[derive(PartialEq)]
    enum Section {
        None,
        Vertex,
        Face,
    }
    let mut section = Section::None;
    let mut n = None;
    let mut m = None;
    let mut vertex_props: Vec<String> = Vec::new();
    let mut face_list = false;
    let mut saw_format = false;

    loop {
        let (line, tokens) = lines.next().ok_or_else(eof)?;
        match tokens[0] {
            "format" => {
                match tokens.get(1).copied() {
                    Some("ascii") if tokens.get(2) == Some(&"1.0") => {}
                    Some("binary_little_endian") | Some("binary_big_endian") => {
                        return Err(Error::parse(line, ParseErrorKind::BinaryPly))
                    }
                    _ => return Err(header_err(line, "expected \"format ascii 1.0\"")),
                }
                saw_format = true;
            }
            "comment" | "obj_info" => {}
            "element" => {
                if tokens.len() != 3 {
                    return Err(header_err(line, "expected \"element <name> <count>\""));
                }
                let count = parse_count(tokens[2], line)?;
                match tokens[1] {
                    "vertex" if n.is_none() => {
                        n = Some(count);
                        section = Section::Vertex;
                    }
                    "face" if m.is_none() && n.is_some() => {
                        m = Some(count);
                        section = Section::Face;
                    }
                    other => {
                        return Err(header_err(line, &format!("unsupported element {other:?}")));
                    }
                }
            }
            "property" => match section {
                Section::Vertex => {
                    if tokens.len() != 3 {
                        return Err(header_err(line, "vertex properties must be scalar"));
                    }
                    vertex_props.push(tokens[2].to_string());
                }
                Section::Face => {
                    let ok = tokens.len() == 5
                        && tokens[1] == "list"
                        && matches!(tokens[4], "vertex_indices" | "vertex_index")
                        && !face_list;
                    if !ok {
                        return Err(header_err(line, "face element must hold a single vertex index list"));
                    }
                    face_list = true;
                }
                Section::None => return Err(header_err(line, "property outside an element")),
            },
            "end_header" => break,
            _ => return Err(header_err(line, &format!("unexpected header keyword {:?}", tokens[0]))),
        }
    }

    if !saw_format {
        return Err(header_err(1, "missing format line"));
    }
    let n = n.ok_or_else(|| header_err(1, "missing vertex element"))?;
    let m = m.unwrap_or(0);
    if m > 0 && !face_list {
        return Err(header_err(1, "face element without vertex_indices"));
    }
    let axis = |name: &str| {
        vertex_props
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| header_err(1, &format!("vertex element lacks property {name:?}")))
    };
    let (ix, iy, iz) = (axis("x")?, axis("y")?, axis("z")?);

    let mut vertices = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, tokens) = lines.next().ok_or_else(eof)?;
        if tokens.len() != vertex_props.len() {
            return Err(Error::parse(
                line,
                ParseErrorKind::MalformedLine(format!(
                    "expected {} vertex values, found {}",
                    vertex_props.len(),
                    tokens.len()
                )),
            ));
        }
        let mut v = [0.0; 3];
        for (slot, &col) in v.iter_mut().zip(&[ix, iy, iz]) {
            *slot = parse_coord(tokens[col], line)?;
        }
        // Columns other than x, y, z are still required to be numbers.
        for tok in &tokens {
            parse_coord(tok, line)?;
        }
        vertices.push(v);
    }
    let mut faces = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.next().ok_or_else(eof)?;
        faces.push(parse_counted_face(&tokens, n, line)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, ParseErrorKind::TrailingData));
    }
    Ok(Mesh { vertices, faces })
}

pub fn write_mesh(mesh: &Mesh, format: MeshFormat) -> Vec<u8> {
    let mut out = String::with_capacity(32 * (mesh.vertices.len() + mesh.faces.len()) + 64);
    // Writing into a String cannot fail.
    match format {
        MeshFormat::Off => {
            let _ = writeln!(out, "OFF\n{} {} 0", mesh.vertices.len(), mesh.faces.len());
            for [x, y, z] in &mesh.vertices {
                let _ = writeln!(out, "{x} {y} {z}");
            }
            for [a, b, c] in &mesh.faces {
                let _ = writeln!(out, "3 {a} {b} {c}");
            }
        }
        MeshFormat::Obj => {
            for [x, y, z] in &mesh.vertices {
                let _ = writeln!(out, "v {x} {y} {z}");
            }
            for [a, b, c] in &mesh.faces {
                let _ = writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1);
            }
        }
        MeshFormat::Ply => {
            let _ = write!(
                out,
                "ply\nformat ascii 1.0\nelement vertex {}\nproperty double x\nproperty double y\n\
                 property double z\nelement face {}\nproperty list uchar int vertex_indices\nend_header\n",
                mesh.vertices.len(),
                mesh.faces.len()
            );
            for [x, y, z] in &mesh.vertices {
                let _ = writeln!(out, "{x} {y} {z}");
            }
            for [a, b, c] in &mesh.faces {
                let _ = writeln!(out, "3 {a} {b} {c}");
            }
        }
    }
    out.into_bytes()
}

/// Reads a mesh, taking the format from `format` or else the file extension.
pub fn read_mesh_file(path: &Path, format: Option<MeshFormat>) -> Result<Mesh> {
    let format = match format.or_else(|| MeshFormat::from_path(path)) {
        Some(f) => f,
        None => {
            return Err(Error::Config(format!(
                "cannot infer mesh format of {}, pass --format",
                path.display()
            )))
        }
    };
    parse_mesh(&std::fs::read(path)?, format)
}

pub fn write_mesh_file(path: &Path, mesh: &Mesh, format: MeshFormat) -> Result<()> {
    std::fs::write(path, write_mesh(mesh, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA_OFF: &str = "OFF\n4 4 0\n0.5 0.5 0.5\n-0.5 -0.5 0.5\n-0.5 0.5 -0.5\n0.5 -0.5 -0.5\n\
                             3 0 1 2\n3 0 3 1\n3 0 2 3\n3 1 3 2\n";

    fn tetra() -> Mesh {
        Mesh {
            vertices: vec![[0.5, 0.5, 0.5], [-0.5, -0.5, 0.5], [-0.5, 0.5, -0.5], [0.5, -0.5, -0.5]],
            faces: vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        }
    }

    #[test]
    fn parses_cow_rows() {
        let text = "OFF\n8 1 0\n0.180757 0.034214 0.193897\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n3 0 1 7\n";
        let mesh = parse_mesh(text.as_bytes(), MeshFormat::Off).unwrap();
        assert_eq!(mesh.vertices[0], [0.180757, 0.034214, 0.193897]);
        // 1-based (1, 2, 8)
        assert_eq!(mesh.faces[0], [0, 1, 7]);
    }

    #[test]
    fn minimal_off() {
        let mesh = parse_mesh(b"OFF\n1 0 0\n0 0 0\n", MeshFormat::Off).unwrap();
        assert_eq!(mesh.vertices, vec![[0.0, 0.0, 0.0]]);
        assert!(mesh.faces.is_empty());
        let text = String::from_utf8(write_mesh(&mesh, MeshFormat::Off)).unwrap();
        assert_eq!(text, "OFF\n1 0 0\n0 0 0\n");
    }

    #[test]
    fn tetrahedron_field_by_field() {
        let mesh = parse_mesh(TETRA_OFF.as_bytes(), MeshFormat::Off).unwrap();
        assert_eq!(mesh, tetra());
        for fmt in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
            assert_eq!(parse_mesh(&write_mesh(&mesh, fmt), fmt).unwrap(), mesh, "{fmt:?}");
        }
    }

    #[test]
    fn off_face_section_keeps_zero_based_rows() {
        let mut mesh = tetra();
        mesh.vertices.extend([[0.0; 3]; 4]);
        mesh.faces.insert(0, [0, 1, 7]);
        let text = String::from_utf8(write_mesh(&mesh, MeshFormat::Off)).unwrap();
        let first_face = text.lines().nth(2 + mesh.vertices.len()).unwrap();
        assert_eq!(first_face, "3 0 1 7");
    }

    #[test]
    fn off_counts_on_keyword_line_and_comments() {
        let text = "# exported\nOFF 3 1 0\n0 0 0 # origin\n1e-3 0 0\n0 0.25 0\n\n3 0 1 2\n";
        let mesh = parse_mesh(text.as_bytes(), MeshFormat::Off).unwrap();
        assert_eq!(mesh.vertices[1], [0.001, 0.0, 0.0]);
        assert_eq!(mesh.faces, vec![[0, 1, 2]]);
    }

    fn parse_err(text: &str, fmt: MeshFormat) -> (usize, ParseErrorKind) {
        match parse_mesh(text.as_bytes(), fmt) {
            Err(Error::Parse { line, kind }) => (line, kind),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn off_errors_name_the_line() {
        assert!(matches!(
            parse_err("COFF\n1 0 0\n0 0 0\n", MeshFormat::Off),
            (1, ParseErrorKind::MalformedHeader(_))
        ));
        assert_eq!(
            parse_err("OFF\n1 0 0\n0 x 0\n", MeshFormat::Off),
            (3, ParseErrorKind::NonNumeric("x".into()))
        );
        assert_eq!(
            parse_err("OFF\n3 1 0\n0 0 0\n0 0 0\n0 0 0\n3 0 1 3\n", MeshFormat::Off),
            (
                6,
                ParseErrorKind::IndexOutOfRange {
                    index: 3,
                    vertex_count: 3
                }
            )
        );
        assert_eq!(
            parse_err("OFF\n4 1 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n4 0 1 2 3\n", MeshFormat::Off),
            (7, ParseErrorKind::NonTriangle(4))
        );
        assert_eq!(
            parse_err("OFF\n2 0 0\n0 0 0\n", MeshFormat::Off).1,
            ParseErrorKind::UnexpectedEof
        );
        assert_eq!(
            parse_err("OFF\n1 0 0\n0 0 0\n1 1 1\n", MeshFormat::Off),
            (4, ParseErrorKind::TrailingData)
        );
        assert!(matches!(
            parse_err("OFF\n1 0 0\nnan 0 0\n", MeshFormat::Off),
            (3, ParseErrorKind::NonNumeric(_))
        ));
    }

    #[test]
    fn obj_slash_forms_and_negative_indices() {
        let text = "o thing\nv 0 0 0\nv 1 0 0\nvn 0 0 1\nv 0 1 0\nf 1/1/1 2//1 -1\n";
        let mesh = parse_mesh(text.as_bytes(), MeshFormat::Obj).unwrap();
        assert_eq!(mesh.faces, vec![[0, 1, 2]]);
    }

    #[test]
    fn obj_errors() {
        assert_eq!(
            parse_err("v 0 0 0\nv 0 0 0\nv 0 0 0\nv 0 0 0\nf 1 2 3 4\n", MeshFormat::Obj),
            (5, ParseErrorKind::NonTriangle(4))
        );
        assert_eq!(
            parse_err("v 0 0 0\nf 1 2 1\n", MeshFormat::Obj),
            (
                2,
                ParseErrorKind::IndexOutOfRange {
                    index: 1,
                    vertex_count: 1
                }
            )
        );
        assert_eq!(
            parse_err("v 0 zero 0\n", MeshFormat::Obj),
            (1, ParseErrorKind::NonNumeric("zero".into()))
        );
    }

    #[test]
    fn ply_with_extra_vertex_columns() {
        let text = "ply\nformat ascii 1.0\ncomment scanner\nelement vertex 3\nproperty float x\n\
                    property float y\nproperty float z\nproperty float confidence\n\
                    element face 1\nproperty list uchar int vertex_indices\nend_header\n\
                    0 0 0 1\n1 0 0 1\n0 1 0 0.5\n3 2 1 0\n";
        let mesh = parse_mesh(text.as_bytes(), MeshFormat::Ply).unwrap();
        assert_eq!(mesh.vertices[2], [0.0, 1.0, 0.0]);
        assert_eq!(mesh.faces, vec![[2, 1, 0]]);
    }

    #[test]
    fn ply_errors() {
        let mut bin = b"ply\nformat binary_little_endian 1.0\nelement vertex 1\n".to_vec();
        bin.extend_from_slice(&[0xff, 0x00, 0x13]);
        assert!(matches!(
            parse_mesh(&bin, MeshFormat::Ply),
            Err(Error::Parse {
                line: 2,
                kind: ParseErrorKind::BinaryPly
            })
        ));
        let edges = "ply\nformat ascii 1.0\nelement vertex 0\nproperty float x\nproperty float y\n\
                     property float z\nelement edge 0\nend_header\n";
        assert!(matches!(
            parse_err(edges, MeshFormat::Ply),
            (7, ParseErrorKind::MalformedHeader(_))
        ));
        let quad = "ply\nformat ascii 1.0\nelement vertex 4\nproperty float x\nproperty float y\n\
                    property float z\nelement face 1\nproperty list uchar int vertex_indices\nend_header\n\
                    0 0 0\n0 0 0\n0 0 0\n0 0 0\n4 0 1 2 3\n";
        assert_eq!(parse_err(quad, MeshFormat::Ply), (14, ParseErrorKind::NonTriangle(4)));
    }

    #[test]
    fn unit_cube_scaling() {
        let mesh = Mesh {
            vertices: vec![[12.5, -3.0, 0.0], [1.0, 99.9, 0.5]],
            faces: vec![],
        };
        let (scaled, divisor) = mesh.scaled_into_unit_cube();
        assert_eq!(divisor, 100.0);
        assert!(scaled.max_abs_coordinate() < 1.0);
        let (same, one) = tetra().scaled_into_unit_cube();
        assert_eq!((same, one), (tetra(), 1.0));
        let edge = Mesh {
            vertices: vec![[1.0, 0.0, 0.0]],
            faces: vec![],
        };
        assert_eq!(edge.scaled_into_unit_cube().1, 10.0);
    }

    #[test]
    fn isolated_vertices_and_duplicate_faces_survive() {
        let mesh = Mesh {
            vertices: vec![[0.1, 0.2, 0.3], [0.0; 3], [0.5; 3], [-0.9, 0.9, 1e-9]],
            faces: vec![[0, 1, 2], [0, 1, 2]],
        };
        for fmt in [MeshFormat::Off, MeshFormat::Obj, MeshFormat::Ply] {
            assert_eq!(parse_mesh(&write_mesh(&mesh, fmt), fmt).unwrap(), mesh);
        }
    }
}
