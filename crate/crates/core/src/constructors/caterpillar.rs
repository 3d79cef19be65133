//! x-coordinates that make caterpillars and cycles planar for any given
//! distinct y-coordinates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{rat, Point2, Rational};
use crate::graph::{caterpillar_spine, edge, Edge, Graph};
use crate::projection::verify_drawing;

#[derive(Clone, Debug)]
pub struct CaterpillarLayoutRequest {
    /// A single caterpillar component on vertices `0..n`.
    pub caterpillar: Graph,
    /// Spine in order; computed when absent.
    pub spine: Option<Vec<usize>>,
    /// `y[v]` for every vertex, pairwise distinct.
    pub y: Vec<Rational>,
}

pub(crate) fn check_distinct(y: &[Rational]) -> Result<()> {
    let mut order: Vec<usize> = (0..y.len()).collect();
    order.sort_by(|&a, &b| y[a].cmp(&y[b]));
    match order.windows(2).find(|w| y[w[0]] == y[w[1]]) {
        Some(w) => Err(Error::TiedCoordinates(format!(
            "vertices {} and {} share y = {}",
            w[0].min(w[1]),
            w[0].max(w[1]),
            y[w[0]]
        ))),
        None => Ok(()),
    }
}

fn check_spine(adj: &[Vec<usize>], comp: &[usize], spine: &[usize]) -> Result<()> {
    let bad = |msg: String| Err(Error::NotACaterpillar(msg));
    let on_spine: BTreeSet<usize> = spine.iter().copied().collect();
    if on_spine.len() != spine.len() || spine.is_empty() {
        return bad("spine repeats a vertex or is empty".into());
    }
    if let Some(w) = spine.windows(2).find(|w| !adj[w[0]].contains(&w[1])) {
        return bad(format!("spine vertices {} and {} are not adjacent", w[0], w[1]));
    }
    for &v in comp {
        if !on_spine.contains(&v) && !adj[v].iter().any(|w| on_spine.contains(w)) {
            return bad(format!("vertex {v} is neither on nor next to the spine"));
        }
        if !on_spine.contains(&v) && adj[v].len() > 1 {
            return bad(format!("off-spine vertex {v} has degree {}", adj[v].len()));
        }
    }
    Ok(())
}

/// x-coordinates for one caterpillar component: spine vertex `w_i` gets
/// `offset + i` (1-based) and every leaf hanging off `w_i` gets
/// `offset + i + 1`.
pub(crate) fn component_x(
    adj: &[Vec<usize>],
    comp: &[usize],
    spine: Option<&[usize]>,
    offset: i64,
) -> Result<Vec<(usize, i64)>> {
    let spine = match spine {
        Some(s) => {
            check_spine(adj, comp, s)?;
            s.to_vec()
        }
        None => caterpillar_spine(adj, comp)?,
    };
    let mut out = Vec::with_capacity(comp.len());
    let mut placed = BTreeSet::new();
    for (i, &w) in spine.iter().enumerate() {
        out.push((w, offset + i as i64 + 1));
        placed.insert(w);
    }
    for (i, &w) in spine.iter().enumerate() {
        for &leaf in &adj[w] {
            if placed.insert(leaf) {
                out.push((leaf, offset + i as i64 + 2));
            }
        }
    }
    if out.len() != comp.len() {
        return Err(Error::NotACaterpillar("component is not within distance 1 of its spine".into()));
    }
    out.sort_unstable();
    Ok(out)
}

pub(crate) fn gate(x: &[Rational], y: &[Rational], edges: &[Edge]) -> Result<()> {
    let pts: Vec<Point2> = x.iter().zip(y).map(|(x, y)| Point2::new(x.clone(), y.clone())).collect();
    match verify_drawing(&pts, edges).first() {
        None => Ok(()),
        Some((kind, w)) => Err(Error::ConstructionFailed(format!("drawing fails: {} ({w})", kind.as_str()))),
    }
}

/// Layout: with `y` fixed, returns `x` such that the drawing
/// `(x[v], y[v])` of the caterpillar is planar.
pub fn caterpillar_x_coords(req: &CaterpillarLayoutRequest) -> Result<Vec<Rational>> {
    let g = &req.caterpillar;
    if req.y.len() != g.n() {
        return Err(Error::BadInput(format!("expected {} y-values, got {}", g.n(), req.y.len())));
    }
    let comps = g.components();
    if comps.len() != 1 {
        return Err(Error::NotACaterpillar(format!("expected one component, found {}", comps.len())));
    }
    if !g.is_forest() {
        return Err(Error::NotACaterpillar("graph has a cycle".into()));
    }
    check_distinct(&req.y)?;
    let adj = g.adjacency();
    let mut x = vec![rat(0); g.n()];
    for (v, xv) in component_x(&adj, &comps[0], req.spine.as_deref(), 0)? {
        x[v] = rat(xv);
    }
    let edges: Vec<Edge> = g.edges().collect();
    gate(&x, &req.y, &edges)?;
    Ok(x)
}

/// x-coordinates for a cycle visiting `order`, with `y[v]` given per vertex
/// id. The lowest vertex starts a path laid out at x = 1, 2, ...; the last
/// vertex is pushed right along a line from the first whose slope is below
/// every slope from the first vertex to the path.
pub fn cycle_x_coords(order: &[usize], y: &[Rational]) -> Result<Vec<Rational>> {
    let n = order.len();
    if n < 3 {
        return Err(Error::BadInput(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let ids: BTreeSet<usize> = order.iter().copied().collect();
    if ids.len() != n || ids.iter().next_back() != Some(&(n - 1)) || y.len() != n {
        return Err(Error::BadInput("cycle order must be a permutation of 0..n with one y per vertex".into()));
    }
    check_distinct(y)?;
    let start = (0..n).min_by(|&a, &b| y[order[a]].cmp(&y[order[b]])).expect("n >= 3");
    let v: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();

    let mut x = vec![rat(0); n];
    for (i, &w) in v.iter().enumerate().take(n - 1) {
        x[w] = rat(i as i64 + 1);
    }
    let y1 = &y[v[0]];
    let min_slope = (1..n - 1).map(|i| (&y[v[i]] - y1) / rat(i as i64)).min().expect("n >= 3");
    let rise = &y[v[n - 1]] - y1;
    let mut slope = min_slope / rat(2);
    loop {
        let xn = rat(1) + &rise / &slope;
        if xn > rat(n as i64 - 1) {
            x[v[n - 1]] = xn;
            break;
        }
        slope /= rat(2);
    }
    let edges: Vec<Edge> = (0..n).map(|i| edge(v[i], v[(i + 1) % n])).collect();
    gate(&x, y, &edges)?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    fn ys(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| rat(a)).collect()
    }

    fn req(g: Graph, y: &[i64]) -> CaterpillarLayoutRequest {
        CaterpillarLayoutRequest { caterpillar: g, spine: None, y: ys(y) }
    }

    #[test]
    fn caterpillar_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(caterpillar_x_coords(&req(star, &[0, 1, 2, 3])).unwrap(), ys(&[1, 2, 2, 2]));
        let p4 = Graph::path(4);
        assert_eq!(caterpillar_x_coords(&req(p4, &[3, 1, 4, 2])).unwrap(), ys(&[1, 2, 3, 4]));
        let e = Graph::path(2);
        assert_eq!(caterpillar_x_coords(&req(e, &[0, 1])).unwrap(), ys(&[1, 2]));
    }

    #[test]
    fn caterpillar_errors() {
        let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(matches!(caterpillar_x_coords(&req(spider, &[0, 1, 2, 3, 4, 5, 6])), Err(Error::NotACaterpillar(_))));
        assert!(matches!(caterpillar_x_coords(&req(Graph::path(3), &[0, 1, 0])), Err(Error::TiedCoordinates(_))));
        assert!(matches!(caterpillar_x_coords(&req(Graph::cycle(3), &[0, 1, 2])), Err(Error::NotACaterpillar(_))));
        let mut r = req(Graph::path(3), &[0, 1, 2]);
        r.spine = Some(vec![0, 2]);
        assert!(matches!(caterpillar_x_coords(&r), Err(Error::NotACaterpillar(_))));
    }

    #[test]
    fn explicit_spine_is_used() {
        let mut r = req(Graph::path(3), &[0, 5, 1]);
        r.spine = Some(vec![1]);
        assert_eq!(caterpillar_x_coords(&r).unwrap(), ys(&[2, 1, 2]));
    }

    #[test]
    fn cycle_examples() {
        let x = cycle_x_coords(&[0, 1, 2], &ys(&[0, 2, 1])).unwrap();
        assert_eq!(x, ys(&[1, 2, 3]));
        let x = cycle_x_coords(&[0, 1, 2, 3, 4], &ys(&[0, 3, 1, 4, 2])).unwrap();
        assert!((0..4).all(|v| x[4] > x[v]));
        cycle_x_coords(&[0, 1, 2, 3], &ys(&[0, 1, 2, 3])).unwrap();
        cycle_x_coords(&[2, 0, 3, 1], &[ratio(1, 2), ratio(-3, 7), rat(9), rat(0)]).unwrap();
        assert!(matches!(cycle_x_coords(&[0, 1, 2], &ys(&[0, 0, 1])), Err(Error::TiedCoordinates(_))));
    }
}
