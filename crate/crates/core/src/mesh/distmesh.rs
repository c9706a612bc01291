//! Force-equilibrium ("truss") mesh generation on rectangles.
//!
//! Points start on an equilateral lattice and are moved by repulsive bar
//! forces, re-triangulated (Delaunay) whenever they have moved far enough,
//! and pulled back onto the boundary along the signed-distance gradient.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spade::{DelaunayTriangulation, Triangulation};

use super::smooth::smooth_poor_vertices;
use super::{fix_corner_triangles, Mesh, Point2, Rect, Triangle};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct DistMeshParams {
    /// Bars are pushed apart towards `fscale` times the RMS bar length.
    pub fscale: f64,
    /// Pseudo-time step.
    pub deltat: f64,
    /// Re-triangulate once some point moved more than `ttol * h0`.
    pub ttol: f64,
    /// Stop once interior points move less than `dptol * h0` per step.
    pub dptol: f64,
    /// Boundary band half-width, in units of `h0`.
    pub geps: f64,
    pub max_iterations: usize,
    /// Optional random jitter of the initial lattice, at most `0.01 * h0`.
    pub seed: Option<u64>,
}

impl Default for DistMeshParams {
    fn default() -> Self {
        Self {
            fscale: 1.2,
            deltat: 0.2,
            ttol: 0.1,
            dptol: 1e-3,
            geps: 1e-3,
            max_iterations: 10_000,
            seed: None,
        }
    }
}

/// Uniform mesh of `domain` with target edge length `h0`, corner triangles
/// already removed and badly shaped interior stars relaxed.
pub fn generate_mesh(domain: Rect, h0: f64) -> Result<Mesh> {
    generate_mesh_with(domain, h0, &DistMeshParams::default())
}

pub fn generate_mesh_with(domain: Rect, h0: f64, params: &DistMeshParams) -> Result<Mesh> {
    let min_side = domain.width().min(domain.height());
    if !(h0 > 0.0 && h0.is_finite()) {
        return Err(Error::InvalidSpacing {
            h0,
            reason: "must be positive".into(),
        });
    }
    if h0 >= min_side {
        return Err(Error::InvalidSpacing {
            h0,
            reason: format!("must be smaller than the shortest side {min_side}"),
        });
    }

    let geps = params.geps * h0;
    let deps = f64::EPSILON.sqrt() * h0;
    let fd = |p: Point2| domain.signed_distance(p);

    let corners = domain.corners();
    let nfix = corners.len();
    let mut p: Vec<Point2> = corners.to_vec();
    p.extend(
        initial_lattice(domain, h0, geps)
            .into_iter()
            .filter(|q| corners.iter().all(|c| c.dist(*q) > geps)),
    );
    if let Some(seed) = params.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for q in &mut p[nfix..] {
            let r = 0.01 * h0 * rng.gen::<f64>();
            let theta = std::f64::consts::TAU * rng.gen::<f64>();
            q.x += r * theta.cos();
            q.y += r * theta.sin();
        }
        project_outside(&mut p[nfix..], fd, deps);
    }

    let n = p.len();
    let mut pold: Option<Vec<Point2>> = None;
    let mut bars: Vec<(usize, usize)> = Vec::new();
    let mut force = vec![[0.0f64; 2]; n];
    let mut last_move = f64::INFINITY;
    let mut converged = false;

    for _ in 0..params.max_iterations {
        let moved = pold.as_ref().map_or(f64::INFINITY, |old| {
            p.iter().zip(old).map(|(a, b)| a.dist(*b)).fold(0.0, f64::max) / h0
        });
        if moved > params.ttol {
            pold = Some(p.clone());
            bars = triangle_bars(&delaunay_inside(&p, fd, geps)?);
        }

        let lengths: Vec<f64> = bars.iter().map(|&(a, b)| p[a].dist(p[b])).collect();
        let rms = (lengths.iter().map(|l| l * l).sum::<f64>() / lengths.len() as f64).sqrt();
        let target = params.fscale * rms;

        force.iter_mut().for_each(|f| *f = [0.0; 2]);
        for (&(a, b), &len) in bars.iter().zip(&lengths) {
            let push = (target - len).max(0.0) / len;
            let fx = push * (p[a].x - p[b].x);
            let fy = push * (p[a].y - p[b].y);
            force[a][0] += fx;
            force[a][1] += fy;
            force[b][0] -= fx;
            force[b][1] -= fy;
        }
        for f in &mut force[..nfix] {
            *f = [0.0; 2];
        }
        for (q, f) in p.iter_mut().zip(&force) {
            q.x += params.deltat * f[0];
            q.y += params.deltat * f[1];
        }

        let interior_move = p
            .iter()
            .zip(&force)
            .filter(|(q, _)| fd(**q) < -geps)
            .map(|(_, f)| params.deltat * f[0].hypot(f[1]))
            .fold(0.0, f64::max)
            / h0;
        project_outside(&mut p, fd, deps);

        last_move = interior_move;
        if interior_move < params.dptol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::GenerationFailed {
            iterations: params.max_iterations,
            last_displacement: last_move,
        });
    }

    snap_to_boundary(&mut p[nfix..], domain, geps);
    let triangles = delaunay_inside(&p, fd, geps)?;
    let mesh = compact(p, triangles, domain);
    let mut mesh = fix_corner_triangles(mesh)?;
    smooth_poor_vertices(&mut mesh, 10);
    Ok(mesh)
}

/// Shifted equilateral lattice clipped to the rectangle.
fn initial_lattice(domain: Rect, h0: f64, geps: f64) -> Vec<Point2> {
    let dy = h0 * 3f64.sqrt() / 2.0;
    let nx = ((domain.width() / h0) + 1e-10).floor() as usize;
    let ny = ((domain.height() / dy) + 1e-10).floor() as usize;
    let mut out = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        let shift = if j % 2 == 1 { 0.5 * h0 } else { 0.0 };
        for i in 0..=nx {
            let q = Point2::new(domain.ax + i as f64 * h0 + shift, domain.ay + j as f64 * dy);
            if domain.signed_distance(q) < geps {
                out.push(q);
            }
        }
    }
    out
}

/// Moves points outside the domain back along the numerical gradient of the
/// signed distance.
fn project_outside(p: &mut [Point2], fd: impl Fn(Point2) -> f64, deps: f64) {
    for q in p.iter_mut() {
        let d = fd(*q);
        if d > 0.0 {
            let gx = (fd(Point2::new(q.x + deps, q.y)) - d) / deps;
            let gy = (fd(Point2::new(q.x, q.y + deps)) - d) / deps;
            q.x -= d * gx;
            q.y -= d * gy;
        }
    }
}

/// Places points within `geps` of the boundary exactly on the nearest side.
fn snap_to_boundary(p: &mut [Point2], domain: Rect, geps: f64) {
    for q in p.iter_mut() {
        if domain.signed_distance(*q) <= -geps {
            continue;
        }
        let sides = [
            (q.x - domain.ax).abs(),
            (domain.bx - q.x).abs(),
            (q.y - domain.ay).abs(),
            (domain.by - q.y).abs(),
        ];
        let nearest = (0..4)
            .min_by(|&a, &b| sides[a].total_cmp(&sides[b]))
            .expect("four sides");
        match nearest {
            0 => q.x = domain.ax,
            1 => q.x = domain.bx,
            2 => q.y = domain.ay,
            _ => q.y = domain.by,
        }
        q.x = q.x.clamp(domain.ax, domain.bx);
        q.y = q.y.clamp(domain.ay, domain.by);
    }
}

/// Delaunay triangles whose centroid is inside the domain, counterclockwise.
fn delaunay_inside(p: &[Point2], fd: impl Fn(Point2) -> f64, geps: f64) -> Result<Vec<[usize; 3]>> {
    let input: Vec<spade::Point2<f64>> = p.iter().map(|q| spade::Point2::new(q.x, q.y)).collect();
    let dt = DelaunayTriangulation::<spade::Point2<f64>>::bulk_load_stable(input).map_err(|e| Error::Triangulation(e.to_string()))?;
    let mut out = Vec::with_capacity(dt.num_inner_faces());
    for face in dt.inner_faces() {
        let [a, b, c] = face.vertices().map(|v| v.fix().index());
        let centroid = Point2::new((p[a].x + p[b].x + p[c].x) / 3.0, (p[a].y + p[b].y + p[c].y) / 3.0);
        if fd(centroid) >= -geps {
            continue;
        }
        let cross = (p[b].x - p[a].x) * (p[c].y - p[a].y) - (p[c].x - p[a].x) * (p[b].y - p[a].y);
        out.push(if cross > 0.0 { [a, b, c] } else { [a, c, b] });
    }
    Ok(out)
}

fn triangle_bars(triangles: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let mut bars: Vec<(usize, usize)> = triangles
        .iter()
        .flat_map(|&[a, b, c]| [(a, b), (b, c), (c, a)])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    bars.sort_unstable();
    bars.dedup();
    bars
}

/// Drops vertices not used by any triangle and renumbers the rest.
fn compact(p: Vec<Point2>, triangles: Vec<[usize; 3]>, domain: Rect) -> Mesh {
    let mut map = vec![usize::MAX; p.len()];
    let mut vertices = Vec::with_capacity(p.len());
    for &v in triangles.iter().flatten() {
        if map[v] == usize::MAX {
            map[v] = 0;
        }
    }
    for (old, slot) in map.iter_mut().enumerate() {
        if *slot != usize::MAX {
            *slot = vertices.len();
            vertices.push(p[old]);
        }
    }
    let triangles = triangles
        .into_iter()
        .map(|t| Triangle(t.map(|v| map[v])))
        .collect();
    Mesh::new(vertices, triangles, domain)
}
