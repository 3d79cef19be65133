//! Two-plane embeddings in R^3 with exactly 6n - 15 edges, grown one vertex
//! at a time from a 14-vertex seed.
//!
//! H is the (x, y) plane and M the (y, z) plane. The seed carries a
//! triangulation in each, sharing only three edges, with M's hull the
//! triangle on the lowest vertex, the highest vertex (both along y) and
//! the vertex of largest z. Each step puts a new vertex inside a face of H
//! that avoids those three, joins it to the face corners in H, lifts it
//! above the current top in M and joins it there to the three hull
//! vertices; it then becomes the new top.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::geometry::{orientation, rat, strict_hull, Orientation, Point2, Rational};
use crate::graph::edge;
use crate::ppe::read_ppe;
use crate::projection::{extension_is_planar, project, verify, PlanePair, PlaneProjection};

/// Repository path of the seed, relative to the `planeproj-core` crate.
pub const EXTREMAL_SEED_PATH: &str = "fixtures/g14.ppe";
const SEED: &str = include_str!("../../fixtures/g14.ppe");

pub const PLANE_H: PlanePair = PlanePair { i: 0, j: 1 };
pub const PLANE_M: PlanePair = PlanePair { i: 1, j: 2 };

const Y: usize = 1;
const Z: usize = 2;

/// Barycentric weights tried in order when the centroid's y is taken.
const WEIGHTS: [(i64, i64, i64); 10] =
    [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1), (1, 1, 3), (1, 3, 1), (3, 1, 1)];

pub fn extremal_seed() -> Result<PlaneProjection> {
    read_ppe(SEED)
}

struct State {
    pp: PlaneProjection,
    low: usize,
    high: usize,
    top: usize,
    faces: BTreeSet<[usize; 3]>,
    ys: HashSet<Rational>,
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut f = [a, b, c];
    f.sort_unstable();
    f
}

fn strictly_inside(p: &Point2, a: &Point2, b: &Point2, c: &Point2) -> bool {
    let o = [orientation(a, b, p), orientation(b, c, p), orientation(c, a, p)];
    o[0] != Orientation::Collinear && o[0] == o[1] && o[1] == o[2]
}

/// Bounded faces of a triangulated plane: mutually adjacent triples whose
/// triangle holds no other vertex.
fn triangular_faces(pts: &[Point2], pp: &PlaneProjection, plane: PlanePair) -> BTreeSet<[usize; 3]> {
    let edges: BTreeSet<(usize, usize)> = pp.edges_in_plane(plane).into_iter().collect();
    let adj = pp.graph().spanning_subgraph(edges.iter().copied()).expect("plane edges are graph edges").adjacency();
    let mut faces = BTreeSet::new();
    for &(a, b) in &edges {
        for &c in &adj[a] {
            if c > b && edges.contains(&edge(b, c)) {
                let empty = (0..pts.len())
                    .all(|q| q == a || q == b || q == c || !strictly_inside(&pts[q], &pts[a], &pts[b], &pts[c]));
                if empty {
                    faces.insert([a, b, c]);
                }
            }
        }
    }
    faces
}

fn extreme(pp: &PlaneProjection, axis: usize, max: bool) -> usize {
    let e = pp.embedding();
    let it = 0..pp.graph().n();
    if max {
        it.max_by(|&a, &b| e.coord(a, axis).cmp(e.coord(b, axis))).expect("non-empty")
    } else {
        it.min_by(|&a, &b| e.coord(a, axis).cmp(e.coord(b, axis))).expect("non-empty")
    }
}

impl State {
    fn new(pp: PlaneProjection) -> Result<State> {
        let broken = |msg: &str| Err(Error::ConstructionFailed(format!("seed invariant broken: {msg}")));
        if !verify(&pp).ok() {
            return broken("seed does not verify");
        }
        let (low, high, top) = (extreme(&pp, Y, false), extreme(&pp, Y, true), extreme(&pp, Z, true));
        let m = project(pp.embedding(), PLANE_M)?;
        let hull: BTreeSet<usize> = strict_hull(&m).into_iter().collect();
        if hull != BTreeSet::from([low, high, top]) {
            return broken("M hull is not the low/high/top triangle");
        }
        let h = project(pp.embedding(), PLANE_H)?;
        let faces = triangular_faces(&h, &pp, PLANE_H);
        let ys: HashSet<Rational> = (0..pp.graph().n()).map(|v| pp.embedding().coord(v, Y).clone()).collect();
        if ys.len() != pp.graph().n() {
            return broken("y-coordinates are not distinct");
        }
        Ok(State { pp, low, high, top, faces, ys })
    }

    fn admissible_face(&self) -> Option<[usize; 3]> {
        let banned = [self.low, self.high, self.top];
        self.faces.iter().copied().find(|f| f.iter().all(|v| !banned.contains(v)))
    }

    fn point(&self, v: usize, plane: PlanePair) -> Point2 {
        let e = self.pp.embedding();
        Point2::new(e.coord(v, plane.i).clone(), e.coord(v, plane.j).clone())
    }

    /// New point of H inside `face`, with a y not used yet.
    fn interior_point(&self, face: [usize; 3]) -> Option<(Rational, Rational)> {
        let c: Vec<Point2> = face.iter().map(|&v| self.point(v, PLANE_H)).collect();
        WEIGHTS.iter().find_map(|&(a, b, w)| {
            let total = rat(a + b + w);
            let x = (&c[0].x * rat(a) + &c[1].x * rat(b) + &c[2].x * rat(w)) / &total;
            let y = (&c[0].y * rat(a) + &c[1].y * rat(b) + &c[2].y * rat(w)) / &total;
            (!self.ys.contains(&y)).then_some((x, y))
        })
    }

    /// Smallest `z_top + 2^t` putting `(y, z)` strictly beyond the top in M,
    /// inside the cone bounded by the lines low-top and high-top.
    fn lifted_z(&self, y: &Rational) -> Result<Rational> {
        let (a, b, t) = (self.point(self.low, PLANE_M), self.point(self.high, PLANE_M), self.point(self.top, PLANE_M));
        let side_a = orientation(&a, &t, &b);
        let side_b = orientation(&b, &t, &a);
        let mut step = rat(1);
        for _ in 0..256 {
            let p = Point2::new(y.clone(), &t.y + &step);
            if orientation(&a, &t, &p) == side_a.reversed() && orientation(&b, &t, &p) == side_b.reversed() {
                return Ok(p.y);
            }
            step *= rat(2);
        }
        Err(Error::ConstructionFailed("no height places the new vertex above the top".into()))
    }

    fn fits(&self, p: usize, plane: PlanePair, to: &[usize]) -> bool {
        let pts = project(self.pp.embedding(), plane).expect("valid plane");
        extension_is_planar(&pts, &self.pp.edges_in_plane(plane), p, to)
    }

    fn step(&mut self) -> Result<()> {
        let face = self
            .admissible_face()
            .ok_or_else(|| Error::ConstructionFailed("no face of H avoids the hull vertices of M".into()))?;
        let (x, y) = self
            .interior_point(face)
            .ok_or_else(|| Error::ConstructionFailed(format!("every candidate point in face {face:?} has a used y")))?;
        let z = self.lifted_z(&y)?;
        let p = self.pp.push_vertex(vec![x, y.clone(), z])?;
        let m_nbrs = [self.low, self.high, self.top];
        if !self.fits(p, PLANE_H, &face) || !self.fits(p, PLANE_M, &m_nbrs) {
            return Err(Error::ConstructionFailed(format!("vertex {p} does not fit planarly")));
        }
        for &c in &face {
            self.pp.assign(p, c, PLANE_H)?;
        }
        for &c in &m_nbrs {
            self.pp.assign(p, c, PLANE_M)?;
        }
        let [a, b, c] = face;
        self.faces.remove(&face);
        self.faces.extend([sorted3(a, b, p), sorted3(a, c, p), sorted3(b, c, p)]);
        self.ys.insert(y);
        self.top = p;
        Ok(())
    }
}

/// Verified embedding in R^3 with `6n - 15` edges drawn in the planes
/// (0, 1) and (1, 2).
pub fn extremal_two_plane(n: usize) -> Result<PlaneProjection> {
    if n < 14 {
        return Err(Error::BadInput(format!("n must be at least 14, got {n}")));
    }
    let mut state = State::new(extremal_seed()?)?;
    while state.pp.graph().n() < n {
        state.step()?;
    }
    let pp = state.pp;
    if pp.graph().edge_count() != 6 * n - 15 {
        return Err(Error::ConstructionFailed(format!(
            "expected {} edges, built {}",
            6 * n - 15,
            pp.graph().edge_count()
        )));
    }
    match verify(&pp).failures.first() {
        None => Ok(pp),
        Some(f) => Err(Error::ConstructionFailed(format!("result does not verify: {f}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::{count_shared_extremal_edges, saturate_counting};

    #[test]
    fn seed_shape() {
        let pp = extremal_seed().unwrap();
        assert_eq!(pp.graph().n(), 14);
        assert_eq!(pp.graph().edge_count(), 69);
        assert_eq!(pp.used_planes(), BTreeSet::from([PLANE_H, PLANE_M]));
        assert_eq!(pp.edges_in_plane(PLANE_H).len(), 36);
        assert_eq!(pp.edges_in_plane(PLANE_M).len(), 36);
        let shared = count_shared_extremal_edges(&pp, Y).unwrap();
        assert_eq!(shared.len(), 2);
        let state = State::new(pp).unwrap();
        assert!(state.admissible_face().is_some());
        assert_eq!(state.faces.len(), 2 * 14 - 5);
    }

    #[test]
    fn small_sizes() {
        for n in [14, 15, 20] {
            let pp = extremal_two_plane(n).unwrap();
            assert_eq!(pp.graph().edge_count(), 6 * n - 15);
            assert!(verify(&pp).ok());
        }
        assert!(extremal_two_plane(13).is_err());
    }

    #[test]
    fn both_planes_already_maximal() {
        let pp = extremal_two_plane(16).unwrap();
        for plane in [PLANE_H, PLANE_M] {
            let (_, added) = saturate_counting(&pp, plane).unwrap();
            assert!(added.is_empty());
        }
    }
}
