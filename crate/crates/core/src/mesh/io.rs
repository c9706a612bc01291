//! Plain-text mesh format.
//!
//! ```text
//! mesh2d 1
//! vertices N
//! <id> <x> <y> <boundary 0|1>      (N lines)
//! triangles M
//! <id> <v1> <v2> <v3>               (M lines, counterclockwise, 0-based)
//! ```
//!
//! Coordinates are written with 17 significant digits so a file reads back
//! to bitwise identical values. The domain is the bounding box of the
//! vertices.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{Mesh, Point2, Rect, Triangle};
use crate::{Error, Result};

pub fn write_mesh<W: Write>(mesh: &Mesh, mut w: W) -> Result<()> {
    writeln!(w, "mesh2d 1")?;
    writeln!(w, "vertices {}", mesh.num_vertices())?;
    for (i, (p, &b)) in mesh.vertices.iter().zip(&mesh.boundary_vertex).enumerate() {
        writeln!(w, "{i} {:.16e} {:.16e} {}", p.x, p.y, u8::from(b))?;
    }
    writeln!(w, "triangles {}", mesh.num_triangles())?;
    for (i, t) in mesh.triangles.iter().enumerate() {
        let [a, b, c] = t.0;
        writeln!(w, "{i} {a} {b} {c}")?;
    }
    Ok(())
}

pub fn save_mesh(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_mesh(mesh, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn load_mesh(path: impl AsRef<Path>) -> Result<Mesh> {
    read_mesh(BufReader::new(File::open(path)?))
}

pub fn read_mesh<R: BufRead>(r: R) -> Result<Mesh> {
    let mut lines = r
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|s| (i + 1, s)))
        .filter(|l| !matches!(l, Ok((_, s)) if s.trim().is_empty()));
    let mut next = |what: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some(l) => Ok(l?),
            None => Err(Error::Parse {
                line: 0,
                message: format!("unexpected end of file, expected {what}"),
            }),
        }
    };
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (ln, header) = next("header")?;
    if header.trim() != "mesh2d 1" {
        return Err(err(ln, format!("bad header {header:?}")));
    }
    let count = |ln: usize, line: &str, key: &str| -> Result<usize> {
        let mut it = line.split_whitespace();
        match (it.next(), it.next().map(str::parse::<usize>), it.next()) {
            (Some(k), Some(Ok(n)), None) if k == key => Ok(n),
            _ => Err(err(ln, format!("expected `{key} <count>`"))),
        }
    };

    let (ln, line) = next("vertex count")?;
    let nv = count(ln, &line, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    let mut flags = Vec::with_capacity(nv);
    for i in 0..nv {
        let (ln, line) = next("vertex")?;
        let f: Vec<&str> = line.split_whitespace().collect();
        let parsed = match f.as_slice() {
            [id, x, y, b] => (|| {
                let id: usize = id.parse().ok()?;
                let x: f64 = x.parse().ok()?;
                let y: f64 = y.parse().ok()?;
                let b = match *b {
                    "0" => false,
                    "1" => true,
                    _ => return None,
                };
                Some((id, x, y, b))
            })(),
            _ => None,
        };
        match parsed {
            Some((id, x, y, b)) if id == i => {
                vertices.push(Point2::new(x, y));
                flags.push(b);
            }
            _ => return Err(err(ln, format!("expected `{i} x y 0|1`"))),
        }
    }

    let (ln, line) = next("triangle count")?;
    let nt = count(ln, &line, "triangles")?;
    let mut triangles = Vec::with_capacity(nt);
    for i in 0..nt {
        let (ln, line) = next("triangle")?;
        let f: Result<Vec<usize>> = line
            .split_whitespace()
            .map(|s| s.parse::<usize>().map_err(|e| err(ln, e.to_string())))
            .collect();
        match f?.as_slice() {
            &[id, a, b, c] if id == i && a < nv && b < nv && c < nv => triangles.push(Triangle([a, b, c])),
            _ => return Err(err(ln, format!("expected `{i} v1 v2 v3` with vertex ids below {nv}"))),
        }
    }

    let domain = bounding_box(&vertices);
    Ok(Mesh {
        vertices,
        triangles,
        boundary_vertex: flags,
        domain,
    })
}

fn bounding_box(v: &[Point2]) -> Rect {
    let mut r = Rect::new(f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in v {
        r.ax = r.ax.min(p.x);
        r.bx = r.bx.max(p.x);
        r.ay = r.ay.min(p.y);
        r.by = r.by.max(p.y);
    }
    r
}
