//! Plane-projecting embeddings: vertices in `R^d`, edges assigned to
//! axis-parallel coordinate planes, and the exact verifier that checks each
//! plane's projection is a crossing-free straight-line drawing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::kernel::{self, Exact};
use crate::geometry::{Point2, Rational, SegmentIntersection};
use crate::graph::{edge, Edge, Graph};

/// A coordinate plane, named by the two axes it retains (`i < j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePair {
    pub i: usize,
    pub j: usize,
}

impl PlanePair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j {
            return Err(Error::BadInput(format!("plane axes must satisfy i < j, got ({i}, {j})")));
        }
        Ok(PlanePair { i, j })
    }

    pub fn is_valid_for(&self, dimension: usize) -> bool {
        self.i < self.j && self.j < dimension
    }

    pub fn contains_axis(&self, axis: usize) -> bool {
        self.i == axis || self.j == axis
    }

    /// All planes of `R^d` in lexicographic order.
    pub fn all(dimension: usize) -> Vec<PlanePair> {
        (0..dimension).flat_map(|i| (i + 1..dimension).map(move |j| PlanePair { i, j })).collect()
    }
}

impl fmt::Display for PlanePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Injective placement of vertices `0..n` in `R^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    dimension: usize,
    coords: Vec<Vec<Rational>>,
}

impl Embedding {
    pub fn new(dimension: usize, coords: Vec<Vec<Rational>>) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::BadInput(format!("dimension must be at least 2, got {dimension}")));
        }
        if let Some(v) = coords.iter().position(|c| c.len() != dimension) {
            return Err(Error::BadInput(format!(
                "vertex {v} has {} coordinates, expected {dimension}",
                coords[v].len()
            )));
        }
        let mut order: Vec<usize> = (0..coords.len()).collect();
        order.sort_by(|&a, &b| coords[a].cmp(&coords[b]));
        if let Some(w) = order.windows(2).find(|w| coords[w[0]] == coords[w[1]]) {
            return Err(Error::BadInput(format!(
                "vertices {} and {} share all coordinates",
                w[0].min(w[1]),
                w[0].max(w[1])
            )));
        }
        Ok(Embedding { dimension, coords })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Vec<Rational>] {
        &self.coords
    }

    pub fn coord(&self, v: usize, axis: usize) -> &Rational {
        &self.coords[v][axis]
    }

    pub fn push(&mut self, point: Vec<Rational>) -> Result<usize> {
        if point.len() != self.dimension {
            return Err(Error::BadInput("coordinate vector has wrong dimension".into()));
        }
        if self.coords.contains(&point) {
            return Err(Error::BadInput("new vertex duplicates an existing position".into()));
        }
        self.coords.push(point);
        Ok(self.coords.len() - 1)
    }

    /// Sub-embedding on the first `n` vertices.
    pub fn truncated(&self, n: usize) -> Embedding {
        Embedding { dimension: self.dimension, coords: self.coords[..n].to_vec() }
    }
}

pub fn project(e: &Embedding, plane: PlanePair) -> Result<Vec<Point2>> {
    if !plane.is_valid_for(e.dimension) {
        return Err(Error::BadPlane { plane, dimension: e.dimension });
    }
    Ok(e.coords.iter().map(|c| Point2::new(c[plane.i].clone(), c[plane.j].clone())).collect())
}

/// A graph, an embedding of its vertices, and for every covered edge the
/// non-empty set of planes it is drawn in. Edges absent from the
/// assignment are uncovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneProjection {
    graph: Graph,
    embedding: Embedding,
    assignment: BTreeMap<Edge, BTreeSet<PlanePair>>,
}

impl PlaneProjection {
    pub fn new(graph: Graph, embedding: Embedding, assignment: BTreeMap<Edge, BTreeSet<PlanePair>>) -> Result<Self> {
        if graph.n() != embedding.n() {
            return Err(Error::BadInput(format!(
                "graph has {} vertices but embedding places {}",
                graph.n(),
                embedding.n()
            )));
        }
        for (&(u, v), planes) in &assignment {
            if u >= v || !graph.has_edge(u, v) {
                return Err(Error::BadInput(format!("assigned pair {{{u}, {v}}} is not a graph edge")));
            }
            if planes.is_empty() {
                return Err(Error::BadInput(format!("edge {{{u}, {v}}} has an empty plane set")));
            }
            if let Some(&plane) = planes.iter().find(|p| !p.is_valid_for(embedding.dimension)) {
                return Err(Error::BadPlane { plane, dimension: embedding.dimension });
            }
        }
        Ok(PlaneProjection { graph, embedding, assignment })
    }

    /// Every edge of `graph` drawn in the single given plane.
    pub fn single_plane(graph: Graph, embedding: Embedding, plane: PlanePair) -> Result<Self> {
        let assignment = graph.edges().map(|e| (e, BTreeSet::from([plane]))).collect();
        PlaneProjection::new(graph, embedding, assignment)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn dimension(&self) -> usize {
        self.embedding.dimension
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, BTreeSet<PlanePair>> {
        &self.assignment
    }

    pub fn planes_of(&self, u: usize, v: usize) -> Option<&BTreeSet<PlanePair>> {
        self.assignment.get(&edge(u, v))
    }

    pub fn used_planes(&self) -> BTreeSet<PlanePair> {
        self.assignment.values().flatten().copied().collect()
    }

    /// Edges drawn in `plane`, sorted.
    pub fn edges_in_plane(&self, plane: PlanePair) -> Vec<Edge> {
        self.assignment.iter().filter(|(_, ps)| ps.contains(&plane)).map(|(&e, _)| e).collect()
    }

    /// Adds `{u, v}` to the graph if needed and draws it in `plane`.
    pub fn assign(&mut self, u: usize, v: usize, plane: PlanePair) -> Result<()> {
        if !plane.is_valid_for(self.dimension()) {
            return Err(Error::BadPlane { plane, dimension: self.dimension() });
        }
        self.graph.add_edge(u, v)?;
        self.assignment.entry(edge(u, v)).or_default().insert(plane);
        Ok(())
    }

    /// Restriction to the first `n` vertices (induced subgraph).
    pub fn truncated(&self, n: usize) -> PlaneProjection {
        let graph =
            Graph::from_edges(n, self.graph.edges().filter(|&(_, v)| v < n)).expect("subgraph of a simple graph");
        let assignment = self.assignment.iter().filter(|(&(_, v), _)| v < n).map(|(&e, ps)| (e, ps.clone())).collect();
        PlaneProjection { graph, embedding: self.embedding.truncated(n), assignment }
    }

    /// Appends a vertex at `point`, returning its id.
    pub fn push_vertex(&mut self, point: Vec<Rational>) -> Result<usize> {
        let id = self.embedding.push(point)?;
        let mut g = Graph::new(id + 1);
        for (u, v) in self.graph.edges() {
            g.add_edge(u, v)?;
        }
        self.graph = g;
        Ok(id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailureKind {
    CoincidentPoints,
    VertexOnEdge,
    EdgeCrossing,
    UncoveredEdge,
}

impl FailureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureKind::CoincidentPoints => "COINCIDENT_POINTS",
            FailureKind::VertexOnEdge => "VERTEX_ON_EDGE",
            FailureKind::EdgeCrossing => "EDGE_CROSSING",
            FailureKind::UncoveredEdge => "UNCOVERED_EDGE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    Vertices(usize, usize),
    VertexOnEdge { vertex: usize, edge: Edge },
    Edges(Edge, Edge),
    Edge(Edge),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertices(a, b) => write!(f, "vertices {a} and {b}"),
            Witness::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} on edge {{{}, {}}}", edge.0, edge.1)
            }
            Witness::Edges(a, b) => {
                write!(f, "edges {{{}, {}}} and {{{}, {}}}", a.0, a.1, b.0, b.1)
            }
            Witness::Edge(e) => write!(f, "edge {{{}, {}}}", e.0, e.1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// `None` only for uncovered edges.
    pub plane: Option<PlanePair>,
    pub kind: FailureKind,
    pub witness: Witness,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.plane {
            Some(p) => write!(f, "plane {p}: {} ({})", self.kind.as_str(), self.witness),
            None => write!(f, "{} ({})", self.kind.as_str(), self.witness),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first(&self, kind: FailureKind) -> Option<&Failure> {
        self.failures.iter().find(|f| f.kind == kind)
    }
}

/// Projected points with denominators cleared per axis. Scaling an axis by
/// a positive constant preserves every predicate, so checks on the frame
/// agree with checks on the rational points.
pub(crate) enum Frame {
    Small(Vec<(i128, i128)>),
    Big(Vec<(BigInt, BigInt)>),
}

const SMALL_LIMIT: i128 = 1 << 62;

impl Frame {
    pub(crate) fn new(points: &[Point2]) -> Frame {
        let lx = points.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.x.denom()));
        let ly = points.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.y.denom()));
        let scaled: Vec<(BigInt, BigInt)> =
            points.iter().map(|p| (p.x.numer() * (&lx / p.x.denom()), p.y.numer() * (&ly / p.y.denom()))).collect();
        let small: Option<Vec<(i128, i128)>> = scaled
            .iter()
            .map(|(x, y)| {
                let (x, y) = (x.to_i128()?, y.to_i128()?);
                (x.abs() < SMALL_LIMIT && y.abs() < SMALL_LIMIT).then_some((x, y))
            })
            .collect();
        match small {
            Some(s) => Frame::Small(s),
            None => Frame::Big(scaled),
        }
    }
}

/// Failures within one plane: first witness per kind.
fn check_plane<T: Exact>(pts: &[(T, T)], edges: &[Edge]) -> Vec<(FailureKind, Witness)> {
    let mut out = Vec::new();
    let p = |v: usize| (&pts[v].0, &pts[v].1);

    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]).then(a.cmp(&b)));
    let coincident = order.windows(2).filter(|w| pts[w[0]] == pts[w[1]]).map(|w| (w[0], w[1])).min();
    if let Some((a, b)) = coincident {
        out.push((FailureKind::CoincidentPoints, Witness::Vertices(a, b)));
    }

    'outer: for &(u, v) in edges {
        for w in 0..pts.len() {
            if w != u && w != v && kernel::on_open_segment(p(w), p(u), p(v)) {
                out.push((FailureKind::VertexOnEdge, Witness::VertexOnEdge { vertex: w, edge: (u, v) }));
                break 'outer;
            }
        }
    }

    'pairs: for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if !kernel::boxes_meet(p(a), p(b), p(c), p(d)) {
                continue;
            }
            if kernel::segments_cross(p(a), p(b), p(c), p(d)) == SegmentIntersection::Crossing {
                out.push((FailureKind::EdgeCrossing, Witness::Edges((a, b), (c, d))));
                break 'pairs;
            }
        }
    }
    out
}

/// Checks one plane's drawing of `edges` on `points` (indexed by vertex).
pub fn verify_drawing(points: &[Point2], edges: &[Edge]) -> Vec<(FailureKind, Witness)> {
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    match Frame::new(points) {
        Frame::Small(pts) => check_plane(&pts, &edges),
        Frame::Big(pts) => check_plane(&pts, &edges),
    }
}

/// Exact verification of every used plane plus edge coverage. Planes are
/// checked in parallel; the report is ordered by plane, then kind.
pub fn verify(pp: &PlaneProjection) -> VerificationReport {
    let planes: Vec<PlanePair> = pp.used_planes().into_iter().collect();
    let per_plane: Vec<Vec<Failure>> = planes
        .par_iter()
        .map(|&plane| {
            let points = project(&pp.embedding, plane).expect("assignment planes are valid");
            verify_drawing(&points, &pp.edges_in_plane(plane))
                .into_iter()
                .map(|(kind, witness)| Failure { plane: Some(plane), kind, witness })
                .collect()
        })
        .collect();
    let mut failures: Vec<Failure> = per_plane.into_iter().flatten().collect();
    if let Some(e) = pp.graph.edges().find(|e| !pp.assignment.contains_key(e)) {
        failures.push(Failure { plane: None, kind: FailureKind::UncoveredEdge, witness: Witness::Edge(e) });
    }
    VerificationReport { failures }
}

fn free_segment<T: Exact>(pts: &[(T, T)], drawn: &[Edge], u: usize, v: usize) -> bool {
    let p = |x: usize| (&pts[x].0, &pts[x].1);
    if pts[u] == pts[v] {
        return false;
    }
    if (0..pts.len()).any(|w| w != u && w != v && kernel::on_open_segment(p(w), p(u), p(v))) {
        return false;
    }
    drawn.iter().all(|&(a, b)| {
        !kernel::boxes_meet(p(u), p(v), p(a), p(b))
            || kernel::segments_cross(p(u), p(v), p(a), p(b)) != SegmentIntersection::Crossing
    })
}

fn extension_fits<T: Exact>(pts: &[(T, T)], drawn: &[Edge], p: usize, to: &[usize]) -> bool {
    let at = |x: usize| (&pts[x].0, &pts[x].1);
    if (0..pts.len()).any(|v| v != p && pts[v] == pts[p]) {
        return false;
    }
    if drawn.iter().any(|&(u, v)| u != p && v != p && kernel::on_open_segment(at(p), at(u), at(v))) {
        return false;
    }
    to.iter().all(|&c| c != p && free_segment(pts, drawn, p, c))
}

/// Whether vertex `p` (already placed in `points`) can be joined to each
/// of `to` without breaking the planar drawing of `drawn`, which must not
/// yet contain edges at `p`.
pub fn extension_is_planar(points: &[Point2], drawn: &[Edge], p: usize, to: &[usize]) -> bool {
    match Frame::new(points) {
        Frame::Small(pts) => extension_fits(&pts, drawn, p, to),
        Frame::Big(pts) => extension_fits(&pts, drawn, p, to),
    }
}

fn saturate_plane<T: Exact>(pts: &[(T, T)], drawn: &mut Vec<Edge>) -> Vec<Edge> {
    let present: BTreeSet<Edge> = drawn.iter().copied().collect();
    let mut added = Vec::new();
    // A pair rejected once stays rejected as edges are only ever added, so
    // a single lexicographic pass equals rescanning after every insertion.
    for u in 0..pts.len() {
        for v in u + 1..pts.len() {
            if !present.contains(&(u, v)) && free_segment(pts, drawn, u, v) {
                drawn.push((u, v));
                added.push((u, v));
            }
        }
    }
    added
}

/// Pairs that can be added to `plane` without breaking planarity there,
/// given the current drawing.
pub fn addable_pairs(pp: &PlaneProjection, plane: PlanePair) -> Result<Vec<Edge>> {
    let points = project(&pp.embedding, plane)?;
    let drawn = pp.edges_in_plane(plane);
    let present: BTreeSet<Edge> = drawn.iter().copied().collect();
    let frame = Frame::new(&points);
    let n = points.len();
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|e| !present.contains(e));
    Ok(match frame {
        Frame::Small(pts) => pairs.filter(|&(u, v)| free_segment(&pts, &drawn, u, v)).collect(),
        Frame::Big(pts) => pairs.filter(|&(u, v)| free_segment(&pts, &drawn, u, v)).collect(),
    })
}

/// Makes `plane`'s drawing maximal: adds every straight segment that
/// crosses nothing drawn there and passes through no vertex. New edges are
/// drawn only in `plane`; existing graph edges gain `plane` in their set.
pub fn saturate(pp: &PlaneProjection, plane: PlanePair) -> Result<PlaneProjection> {
    saturate_counting(pp, plane).map(|(out, _)| out)
}

/// [`saturate`], also returning the pairs added to `plane`.
pub fn saturate_counting(pp: &PlaneProjection, plane: PlanePair) -> Result<(PlaneProjection, Vec<Edge>)> {
    if !plane.is_valid_for(pp.dimension()) {
        return Err(Error::BadPlane { plane, dimension: pp.dimension() });
    }
    if !verify(pp).ok() {
        return Err(Error::NotVerified);
    }
    let points = project(&pp.embedding, plane)?;
    let mut drawn = pp.edges_in_plane(plane);
    if !verify_drawing(&points, &drawn).is_empty() {
        return Err(Error::NotVerified);
    }
    let added = match Frame::new(&points) {
        Frame::Small(pts) => saturate_plane(&pts, &mut drawn),
        Frame::Big(pts) => saturate_plane(&pts, &mut drawn),
    };
    let mut out = pp.clone();
    for &(u, v) in &added {
        out.assign(u, v, plane)?;
    }
    Ok((out, added))
}

/// For the two planes of `pp` that share `axis`, the extremal pairs along
/// that axis (lowest with second lowest, highest with second highest) that
/// are drawn in both planes.
pub fn count_shared_extremal_edges(pp: &PlaneProjection, axis: usize) -> Result<BTreeSet<Edge>> {
    let planes: Vec<PlanePair> = pp.used_planes().into_iter().collect();
    if planes.len() != 2 || !planes.iter().all(|p| p.contains_axis(axis)) {
        return Err(Error::BadInput(format!("expected exactly two used planes sharing axis {axis}, found {planes:?}")));
    }
    let n = pp.graph.n();
    if n < 2 {
        return Err(Error::BadInput("need at least two vertices".into()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pp.embedding.coord(a, axis).cmp(pp.embedding.coord(b, axis)));
    if let Some(w) = order.windows(2).find(|w| pp.embedding.coord(w[0], axis) == pp.embedding.coord(w[1], axis)) {
        return Err(Error::TiedCoordinates(format!(
            "vertices {} and {} share coordinate {} on axis {axis}",
            w[0],
            w[1],
            pp.embedding.coord(w[0], axis)
        )));
    }
    let (a, c) = (order[0], order[1]);
    let (b, d) = (order[n - 1], order[n - 2]);
    let in_both = |e: Edge| pp.assignment.get(&e).is_some_and(|ps| planes.iter().all(|p| ps.contains(p)));
    Ok([edge(a, c), edge(b, d)].into_iter().filter(|&e| in_both(e)).collect())
}
