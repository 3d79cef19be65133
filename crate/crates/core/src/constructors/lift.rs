//! Embeddings assembled plane by plane: forest decompositions, a planar
//! drawing plus extra paths, and layered (geometric thickness) drawings.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::ceil_sqrt;
use crate::constructors::caterpillar::component_x;
use crate::error::{Error, Result};
use crate::forests::ForestDecomposition;
use crate::geometry::{rat, Point2, Rational};
use crate::graph::{edge, is_caterpillar_forest, Edge, Graph};
use crate::projection::{verify, verify_drawing, Embedding, PlanePair, PlaneProjection};

pub const PAPER_PLANES_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    /// Dimension `k + 1`: one shared axis plus one axis per forest.
    Guaranteed,
    /// Dimension `k`: the last forest goes in plane (1, 2), whose axes are
    /// already fixed by the first two forests. Randomized, may fail.
    PaperPlanes,
}

fn gate(pp: PlaneProjection) -> Result<PlaneProjection> {
    match verify(&pp).failures.first() {
        None => Ok(pp),
        Some(f) => Err(Error::ConstructionFailed(format!("output does not verify: {f}"))),
    }
}

/// x-values for a caterpillar forest, components side by side in disjoint
/// vertical strips. Vertices without edges in the forest stay at 0.
fn forest_x(forest: &Graph) -> Result<Vec<Rational>> {
    let adj = forest.adjacency();
    let mut x = vec![rat(0); forest.n()];
    let mut offset = 0i64;
    for comp in forest.components() {
        if comp.len() < 2 {
            continue;
        }
        let placed = component_x(&adj, &comp, None, offset)?;
        let right = placed.iter().map(|&(_, xv)| xv).max().expect("non-empty component");
        for (v, xv) in placed {
            x[v] = rat(xv);
        }
        offset = right;
    }
    Ok(x)
}

fn checked_parts(g: &Graph, forests: &ForestDecomposition) -> Result<Vec<Graph>> {
    forests.validate(g).map_err(|e| Error::BadDecomposition(e.to_string()))?;
    let parts = forests.part_graphs(g)?;
    if let Some(i) = parts.iter().position(|p| !is_caterpillar_forest(p)) {
        return Err(Error::BadDecomposition(format!("part {i} is not a caterpillar forest")));
    }
    Ok(parts)
}

fn assemble(
    g: &Graph,
    dimension: usize,
    axis_values: Vec<(usize, Vec<Rational>)>,
    placements: &[(&Graph, PlanePair)],
) -> Result<PlaneProjection> {
    let mut coords = vec![vec![rat(0); dimension]; g.n()];
    for (axis, values) in axis_values {
        for (v, val) in values.into_iter().enumerate() {
            coords[v][axis] = val;
        }
    }
    let mut assignment: BTreeMap<Edge, BTreeSet<PlanePair>> = BTreeMap::new();
    for (part, plane) in placements {
        for e in part.edges() {
            assignment.entry(e).or_default().insert(*plane);
        }
    }
    PlaneProjection::new(g.clone(), Embedding::new(dimension, coords)?, assignment)
}

fn guaranteed(g: &Graph, parts: &[Graph]) -> Result<PlaneProjection> {
    let k = parts.len();
    let mut axes = vec![(0, (0..g.n()).map(|v| rat(v as i64)).collect())];
    let mut placements = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        axes.push((i + 1, forest_x(part)?));
        placements.push((part, PlanePair { i: 0, j: i + 1 }));
    }
    gate(assemble(g, k + 1, axes, &placements)?)
}

fn paper_planes(g: &Graph, parts: &[Graph], seed: u64) -> Result<PlaneProjection> {
    let k = parts.len();
    if k < 3 {
        return Err(Error::BadInput(format!("dimension-k placement needs k >= 3 forests, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PAPER_PLANES_ATTEMPTS {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let mut shared = vec![rat(0); g.n()];
        for (rank, &v) in order.iter().enumerate() {
            shared[v] = rat(rank as i64);
        }
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(&mut rng);

        let mut axes = vec![(0, shared)];
        let mut placements = Vec::new();
        for (i, &p) in perm[..k - 1].iter().enumerate() {
            axes.push((i + 1, forest_x(&parts[p])?));
            placements.push((&parts[p], PlanePair { i: 0, j: i + 1 }));
        }
        placements.push((&parts[perm[k - 1]], PlanePair { i: 1, j: 2 }));
        let pp = assemble(g, k, axes, &placements)?;
        if verify(&pp).ok() {
            return Ok(pp);
        }
    }
    Err(Error::FailedHeuristic { attempts: PAPER_PLANES_ATTEMPTS })
}

/// Draws forest `i` of a caterpillar (or linear) forest decomposition in
/// its own plane against one shared axis.
pub fn forests_to_embedding(
    g: &Graph,
    forests: &ForestDecomposition,
    mode: LiftMode,
    seed: u64,
) -> Result<PlaneProjection> {
    let parts = checked_parts(g, forests)?;
    if parts.is_empty() {
        return Err(Error::BadDecomposition("decomposition has no parts".into()));
    }
    match mode {
        LiftMode::Guaranteed => guaranteed(g, &parts),
        LiftMode::PaperPlanes => paper_planes(g, &parts, seed),
    }
}

/// Shear `x <- x + y / 2^t` for the least `t` making all x distinct.
fn shear_distinct(points: &[Point2]) -> Vec<Rational> {
    let distinct = |xs: &[Rational]| xs.iter().collect::<BTreeSet<_>>().len() == xs.len();
    let xs: Vec<Rational> = points.iter().map(|p| p.x.clone()).collect();
    if distinct(&xs) {
        return xs;
    }
    let mut eps = rat(1);
    loop {
        let sheared: Vec<Rational> = points.iter().map(|p| &p.x + &eps * &p.y).collect();
        if distinct(&sheared) {
            return sheared;
        }
        eps /= rat(2);
    }
}

/// A planar straight-line drawing in plane (0, 1) plus one plane (0, i + 1)
/// per extra path. Paths are vertex sequences.
pub fn planar_plus_paths(planar: &Graph, drawing: &[Point2], paths: &[Vec<usize>]) -> Result<PlaneProjection> {
    let n = planar.n();
    if drawing.len() != n {
        return Err(Error::BadPlanarInput);
    }
    let planar_edges: Vec<Edge> = planar.edges().collect();
    if !verify_drawing(drawing, &planar_edges).is_empty() {
        return Err(Error::BadPlanarInput);
    }
    let mut g = planar.clone();
    let mut path_graphs = Vec::with_capacity(paths.len());
    for (i, p) in paths.iter().enumerate() {
        if p.iter().collect::<BTreeSet<_>>().len() != p.len() || p.iter().any(|&v| v >= n) {
            return Err(Error::BadInput(format!("path {i} is not a simple path on the vertex set")));
        }
        let mut pg = Graph::new(n);
        for w in p.windows(2) {
            if !g.add_edge(w[0], w[1])? {
                return Err(Error::BadInput(format!("path {i} edge {{{}, {}}} is already used", w[0], w[1])));
            }
            pg.add_edge(w[0], w[1])?;
        }
        path_graphs.push(pg);
    }

    let d = paths.len();
    let x0 = shear_distinct(drawing);
    let mut coords: Vec<Vec<Rational>> = vec![vec![rat(0); d + 2]; n];
    for v in 0..n {
        coords[v][0] = x0[v].clone();
        coords[v][1] = drawing[v].y.clone();
    }
    let mut assignment: BTreeMap<Edge, BTreeSet<PlanePair>> = BTreeMap::new();
    let base = PlanePair { i: 0, j: 1 };
    for e in planar_edges {
        assignment.entry(e).or_default().insert(base);
    }
    for (i, (p, pg)) in paths.iter().zip(&path_graphs).enumerate() {
        let plane = PlanePair { i: 0, j: i + 2 };
        if p.len() >= 2 {
            let mut comp = p.clone();
            comp.sort_unstable();
            for (v, xv) in component_x(&pg.adjacency(), &comp, Some(p), 0)? {
                coords[v][i + 2] = rat(xv);
            }
        }
        for w in p.windows(2) {
            assignment.entry(edge(w[0], w[1])).or_default().insert(plane);
        }
    }
    gate(PlaneProjection::new(g, Embedding::new(d + 2, coords)?, assignment)?)
}

#[derive(Clone, Debug)]
pub struct GeomThicknessLayout {
    pub positions: Vec<Point2>,
    pub layers: Vec<Vec<Edge>>,
}

/// Plane used for layer `l` when there are `k * k >= s` slots.
pub fn layer_plane(layer: usize, k: usize) -> PlanePair {
    PlanePair { i: layer / k, j: k + layer % k }
}

/// Lifts a drawing with `s` planar layers to dimension `2 ceil(sqrt s)`:
/// `(a, b)` becomes `(a, .., a, b, .., b)` and layer `l` is drawn in plane
/// `(l / k, k + l % k)`, each of which sees the original drawing.
pub fn lift_geometric_thickness(layout: &GeomThicknessLayout) -> Result<PlaneProjection> {
    let s = layout.layers.len();
    if s == 0 {
        return Err(Error::BadInput("layout has no layers".into()));
    }
    let n = layout.positions.len();
    let mut g = Graph::new(n);
    for (l, layer) in layout.layers.iter().enumerate() {
        let mut edges = Vec::with_capacity(layer.len());
        for &(u, v) in layer {
            if u == v || u >= n || v >= n {
                return Err(Error::BadLayer(l));
            }
            edges.push(edge(u, v));
        }
        if !verify_drawing(&layout.positions, &edges).is_empty() {
            return Err(Error::BadLayer(l));
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
    }
    let k = ceil_sqrt(s as u64) as usize;
    let coords = layout
        .positions
        .iter()
        .map(|p| {
            let mut c = vec![p.x.clone(); k];
            c.extend(std::iter::repeat_n(p.y.clone(), k));
            c
        })
        .collect();
    let mut assignment: BTreeMap<Edge, BTreeSet<PlanePair>> = BTreeMap::new();
    for (l, layer) in layout.layers.iter().enumerate() {
        for &(u, v) in layer {
            assignment.entry(edge(u, v)).or_default().insert(layer_plane(l, k));
        }
    }
    gate(PlaneProjection::new(g, Embedding::new(2 * k, coords)?, assignment)?)
}
