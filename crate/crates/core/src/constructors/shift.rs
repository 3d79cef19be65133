//! Straight-line grid drawings of planar graphs from a rotation system:
//! augment to a triangulation, compute a canonical ordering, then place
//! vertices with the shift method on a (2n - 4) x (n - 2) grid.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{rat, Point2, Rational};
use crate::graph::{edge, Edge, Graph};
use crate::projection::verify_drawing;

/// Counterclockwise order of neighbours around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    let half = |v: &(Rational, Rational)| !(v.1 > Rational::zero() || (v.1.is_zero() && v.0 > Rational::zero()));
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        Rational::zero().cmp(&cross)
    })
}

impl RotationSystem {
    pub fn new(g: &Graph, rot: Vec<Vec<usize>>) -> Result<Self> {
        let adj = g.adjacency();
        if rot.len() != g.n() {
            return Err(Error::BadInput(format!("rotation lists {} vertices, graph has {}", rot.len(), g.n())));
        }
        for (v, r) in rot.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != adj[v] {
                return Err(Error::BadInput(format!("rotation at {v} is not a permutation of its neighbours")));
            }
        }
        Ok(RotationSystem { rot })
    }

    /// Rotation read off a straight-line drawing.
    pub fn from_drawing(g: &Graph, points: &[Point2]) -> Result<Self> {
        if points.len() != g.n() {
            return Err(Error::BadInput("one point per vertex required".into()));
        }
        let rot = g
            .adjacency()
            .into_iter()
            .enumerate()
            .map(|(v, mut nb)| {
                let dir = |w: &usize| (&points[*w].x - &points[v].x, &points[*w].y - &points[v].y);
                nb.sort_by(|a, b| angle_cmp(&dir(a), &dir(b)));
                nb
            })
            .collect();
        Ok(RotationSystem { rot })
    }

    /// Parses lines `v n1 n2 ...` listing each vertex's neighbours in
    /// counterclockwise order.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut rot = vec![None; g.n()];
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("{line:?}: {e}"))))
                .collect::<Result<_>>()?;
            let v = nums[0];
            if v >= g.n() || rot[v].is_some() {
                return Err(Error::Parse(format!("bad or repeated vertex {v} in rotation")));
            }
            rot[v] = Some(nums[1..].to_vec());
        }
        RotationSystem::new(g, rot.into_iter().map(Option::unwrap_or_default).collect())
    }

    /// Same rotation with every list starting at its smallest neighbour.
    pub fn normalized(&self) -> Self {
        let rot = self
            .rot
            .iter()
            .map(|r| {
                let mut r = r.clone();
                if let Some(i) = r.iter().enumerate().min_by_key(|&(_, w)| w).map(|(i, _)| i) {
                    r.rotate_left(i);
                }
                r
            })
            .collect();
        RotationSystem { rot }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    fn pos(&self, v: usize, w: usize) -> usize {
        self.rot[v].iter().position(|&x| x == w).expect("w is a neighbour of v")
    }

    fn pred(&self, v: usize, w: usize) -> usize {
        let r = &self.rot[v];
        r[(self.pos(v, w) + r.len() - 1) % r.len()]
    }

    /// Faces as vertex cycles; a dart u -> v is followed by v -> pred_v(u).
    fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for u in 0..self.rot.len() {
            for &v in &self.rot[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    face.push(a);
                    let c = self.pred(b, a);
                    (a, b) = (b, c);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Adds chord `u`-`w` across the corner at `v` where `u = pred_v(w)`.
    fn add_corner_chord(&mut self, u: usize, v: usize, w: usize) {
        let iu = self.pos(u, v);
        self.rot[u].insert(iu, w);
        let iw = self.pos(w, v);
        self.rot[w].insert(iw + 1, u);
    }

    fn add_free_edge(&mut self, u: usize, w: usize) {
        self.rot[u].push(w);
        self.rot[w].push(u);
    }
}

fn components(rot: &RotationSystem) -> Vec<usize> {
    let n = rot.rot.len();
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(v) = stack.pop() {
            for &w in &rot.rot[v] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    comp
}

fn check_euler(rot: &RotationSystem, edges: usize) -> Result<()> {
    let n = rot.rot.len() as i64;
    let c = components(rot).into_iter().collect::<BTreeSet<_>>().len() as i64;
    let isolated = rot.rot.iter().filter(|r| r.is_empty()).count() as i64;
    // every component traces its own outer face
    let f = rot.faces().len() as i64 + isolated;
    if n - edges as i64 + f != 2 * c {
        return Err(Error::NotPlanar(format!(
            "rotation system is not planar (V - E + F = {}, {c} components)",
            n - edges as i64 + f
        )));
    }
    Ok(())
}

/// Block id per dart, via Hopcroft-Tarjan on a connected graph.
fn blocks(rot: &RotationSystem) -> std::collections::BTreeMap<Edge, usize> {
    let n = rot.rot.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<Edge> = Vec::new();
    let mut out = std::collections::BTreeMap::new();
    let mut next_block = 0;
    // iterative DFS: (vertex, parent, next neighbour index)
    let mut dfs = vec![(0usize, usize::MAX, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    while let Some(&mut (v, parent, ref mut i)) = dfs.last_mut() {
        if *i < rot.rot[v].len() {
            let w = rot.rot[v][*i];
            *i += 1;
            if disc[w] == usize::MAX {
                stack.push(edge(v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                dfs.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                stack.push(edge(v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            dfs.pop();
            if let Some(&(p, _, _)) = dfs.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    while let Some(e) = stack.pop() {
                        out.insert(e, next_block);
                        if e == edge(p, v) {
                            break;
                        }
                    }
                    next_block += 1;
                }
            }
        }
    }
    out
}

fn make_connected(rot: &mut RotationSystem, g: &mut Graph) {
    let comp = components(rot);
    let mut reps: Vec<usize> = Vec::new();
    for (v, &c) in comp.iter().enumerate() {
        if c == reps.len() {
            reps.push(v);
        }
    }
    for w in reps.windows(2) {
        rot.add_free_edge(w[0], w[1]);
        g.add_edge(w[0], w[1]).expect("different components");
    }
}

fn make_biconnected(rot: &mut RotationSystem, g: &mut Graph) {
    'restart: loop {
        let block = blocks(rot);
        for v in 0..rot.rot.len() {
            let r = &rot.rot[v];
            if r.len() < 2 {
                continue;
            }
            for i in 0..r.len() {
                let (u, w) = (r[i], r[(i + 1) % r.len()]);
                if block[&edge(v, u)] != block[&edge(v, w)] {
                    rot.add_corner_chord(u, v, w);
                    g.add_edge(u, w).expect("vertices in different blocks are not adjacent");
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn triangulate(rot: &mut RotationSystem, g: &mut Graph) -> Result<()> {
    'restart: loop {
        for face in rot.faces() {
            let k = face.len();
            if k <= 3 {
                continue;
            }
            for i in 0..k {
                let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if a != c && !g.has_edge(a, c) {
                    // corner at b: c = pred_b(a)
                    rot.add_corner_chord(c, b, a);
                    g.add_edge(a, c)?;
                    continue 'restart;
                }
            }
            return Err(Error::NotPlanar("face without an addable chord".into()));
        }
        return Ok(());
    }
}

/// Canonical ordering `v1, v2, ..., vn` of a triangulation with outer face
/// `(v1, v2, vn)` counterclockwise.
fn canonical_order(rot: &RotationSystem, g: &Graph, v1: usize, v2: usize, vn: usize) -> Result<Vec<usize>> {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut contour = vec![v1, vn, v2];
    let mut rev = Vec::with_capacity(n);
    while contour.len() > 2 {
        let m = contour.len();
        let index_of = |x: usize, c: &[usize]| c.iter().position(|&y| y == x);
        let pick = (1..m - 1).find(|&i| {
            let v = contour[i];
            rot.rot[v].iter().all(|&w| match index_of(w, &contour) {
                Some(j) => j + 1 == i || j == i + 1,
                None => true,
            })
        });
        let i = pick.ok_or_else(|| Error::NotPlanar("no chord-free contour vertex".into()))?;
        let v = contour[i];
        let (l, r) = (contour[i - 1], contour[i + 1]);
        let rv = &rot.rot[v];
        let (pl, pr) = (rot.pos(v, l), rot.pos(v, r));
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut j = (from + 1) % rv.len();
            while j != to {
                out.push(rv[j]);
                j = (j + 1) % rv.len();
            }
            out
        };
        // going counterclockwise from l sweeps under v towards r, so this arc
        // lists the inner neighbours left to right
        let inner = arc(pl, pr);
        if inner.iter().any(|&w| removed[w]) {
            return Err(Error::NotPlanar("contour vertex has removed inner neighbours".into()));
        }
        removed[v] = true;
        rev.push(v);
        contour.splice(i..=i, inner);
    }
    if rev.len() + 2 != n {
        return Err(Error::NotPlanar("canonical ordering did not reach every vertex".into()));
    }
    let mut order = vec![v1, v2];
    order.extend(rev.into_iter().rev());
    Ok(order)
}

fn shift_method(g: &Graph, order: &[usize]) -> Result<Vec<(i64, i64)>> {
    let n = g.n();
    let mut pos = vec![(0i64, 0i64); n];
    let mut deps: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    pos[v1] = (0, 0);
    pos[v2] = (2, 0);
    pos[v3] = (1, 1);
    let mut contour = vec![v1, v3, v2];
    for &vk in &order[3..] {
        let on: Vec<usize> = (0..contour.len()).filter(|&i| g.has_edge(vk, contour[i])).collect();
        let (p, q) = (on[0], on[on.len() - 1]);
        if p == q || on.len() != q - p + 1 {
            return Err(Error::NotPlanar(format!("vertex {vk} does not see a contiguous contour path")));
        }
        for &w in &contour[p + 1..q] {
            for &u in &deps[w] {
                pos[u].0 += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &deps[w] {
                pos[u].0 += 2;
            }
        }
        let (wp, wq) = (pos[contour[p]], pos[contour[q]]);
        pos[vk] = ((wp.0 + wq.0 + wq.1 - wp.1) / 2, (wq.0 - wp.0 + wq.1 + wp.1) / 2);
        let mut mine = vec![vk];
        for &w in &contour[p + 1..q] {
            mine.extend(deps[w].iter().copied());
        }
        deps[vk] = mine;
        contour.splice(p + 1..q, [vk]);
    }
    Ok(pos)
}

/// Crossing-free straight-line drawing of `g` on an integer grid,
/// respecting the given rotation system.
pub fn straight_line_planar_drawing(g: &Graph, rotation: &RotationSystem) -> Result<Vec<Point2>> {
    let n = g.n();
    if rotation.rot.len() != n {
        return Err(Error::BadInput("rotation system does not match the graph".into()));
    }
    check_euler(rotation, g.edge_count())?;
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Point2::from_ints(0, 0)]),
        2 => return Ok(vec![Point2::from_ints(0, 0), Point2::from_ints(1, 0)]),
        _ => {}
    }
    let mut rot = rotation.clone();
    let mut host = g.clone();
    make_connected(&mut rot, &mut host);
    make_biconnected(&mut rot, &mut host);
    triangulate(&mut rot, &mut host)?;
    if host.edge_count() != 3 * n - 6 {
        return Err(Error::NotPlanar(format!("augmentation produced {} edges", host.edge_count())));
    }
    let outer = rot.faces().into_iter().next().expect("a triangulation has faces");
    // faces run counterclockwise inside, so the chosen outer face is
    // clockwise in the final drawing
    let (v1, vn, v2) = (outer[0], outer[1], outer[2]);
    let order = canonical_order(&rot, &host, v1, v2, vn)?;
    let pos = shift_method(&host, &order)?;
    let points: Vec<Point2> = pos.iter().map(|&(x, y)| Point2::new(rat(x), rat(y))).collect();
    let edges: Vec<Edge> = g.edges().collect();
    match verify_drawing(&points, &edges).first() {
        None => Ok(points),
        Some((kind, w)) => Err(Error::NotPlanar(format!("drawing check failed: {} ({w})", kind.as_str()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point2> {
        v.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()
    }

    fn draw(g: &Graph, layout: &[(i64, i64)]) -> Vec<Point2> {
        let rot = RotationSystem::from_drawing(g, &pts(layout)).unwrap();
        straight_line_planar_drawing(g, &rot).unwrap()
    }

    fn within_grid(p: &[Point2]) -> bool {
        let n = p.len() as i64;
        p.iter().all(|q| q.x >= rat(0) && q.x <= rat(2 * n - 4) && q.y >= rat(0) && q.y <= rat(n - 2))
    }

    #[test]
    fn rotation_from_drawing_is_ccw() {
        let g = Graph::complete(3);
        let rot = RotationSystem::from_drawing(&g, &pts(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!(rot.rotation(0), &[1, 2]);
        assert_eq!(rot.rotation(1), &[2, 0]);
        assert_eq!(rot.rotation(2), &[0, 1]);
        assert_eq!(rot.faces().len(), 2);
    }

    #[test]
    fn small_graphs() {
        let c4 = Graph::cycle(4);
        let p = draw(&c4, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(p.len(), 4);
        let k4 = Graph::complete(4);
        let p = draw(&k4, &[(0, 0), (4, 0), (0, 4), (1, 1)]);
        assert!(within_grid(&p));
        assert!(verify_drawing(&p, &k4.edges().collect::<Vec<_>>()).is_empty());
        draw(&Graph::path(5), &[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]);
        draw(&Graph::new(4), &[(0, 0), (1, 0), (2, 0), (3, 0)]);
        let forest = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5)]).unwrap();
        draw(&forest, &[(0, 0), (1, 0), (2, 1), (2, -1), (5, 0), (6, 0), (9, 9)]);
    }

    #[test]
    fn maximal_planar_ten_vertices() {
        // octahedron-style nested triangles plus an apex, all triangulated
        let layout = [(0, 0), (30, 0), (15, 30), (10, 5), (20, 5), (15, 15), (13, 8), (17, 8), (15, 11), (15, 9)];
        let points = pts(&layout);
        let base = crate::projection::PlaneProjection::new(
            Graph::new(10),
            crate::projection::Embedding::new(2, points.iter().map(|p| vec![p.x.clone(), p.y.clone()]).collect())
                .unwrap(),
            Default::default(),
        )
        .unwrap();
        let sat = crate::projection::saturate(&base, crate::projection::PlanePair { i: 0, j: 1 }).unwrap();
        let g = sat.graph().clone();
        assert_eq!(g.edge_count(), 3 * 10 - 6);
        let p = draw(&g, &layout);
        assert!(within_grid(&p));
        assert_eq!(
            RotationSystem::from_drawing(&g, &p).unwrap().normalized(),
            RotationSystem::from_drawing(&g, &points).unwrap().normalized()
        );
    }

    #[test]
    fn non_planar_rotation_rejected() {
        let k5 = Graph::complete(5);
        let rot = RotationSystem::from_drawing(&k5, &pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])).unwrap();
        assert!(matches!(straight_line_planar_drawing(&k5, &rot), Err(Error::NotPlanar(_))));
        let k4 = Graph::complete(4);
        let twisted =
            RotationSystem::new(&k4, vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]).unwrap();
        assert!(matches!(straight_line_planar_drawing(&k4, &twisted), Err(Error::NotPlanar(_))));
    }

    #[test]
    fn parse_rotation() {
        let g = Graph::complete(3);
        let rot = RotationSystem::parse(&g, "0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(rot.rotation(1), &[2, 0]);
        assert!(RotationSystem::parse(&g, "0 1\n").is_err());
    }
}
