//! Complete graphs: two concentric convex layers S (inner) and T (outer),
//! each decomposed into zigzag Hamiltonian paths, one path pair per plane.

use std::collections::{BTreeMap, BTreeSet};

use crate::bounds::pdim_upper_kn;
use crate::constructors::convex::Lift;
use crate::constructors::trig::unit;
use crate::error::{Error, Result};
use crate::forests::hamiltonian_path_decomposition;
use crate::geometry::{rat, ratio, Rational};
use crate::graph::{edge, Graph};
use crate::projection::{verify, Embedding, PlanePair, PlaneProjection};

const PRECISION_BITS: u64 = 64;
const MAX_DOUBLINGS: u32 = 48;

/// Smallest multiple of 4 that is at least `n`.
pub fn padded_order(n: usize) -> usize {
    n.div_ceil(4) * 4
}

/// Dimension used for `K_n`.
pub fn complete_graph_dimension(n: usize) -> Result<usize> {
    Ok(pdim_upper_kn(padded_order(n) as u64)? as usize)
}

/// Model layout in the plane. T sits on a circle of radius `scale` with
/// antipodal pairs exactly opposite; S is a unit circle inside one sector
/// cut out by the diameters, rotated by a quarter step so every zigzag path
/// on S is strictly monotone across the diameter its plane uses.
///
/// Path `r` uses the diameter through `T_{r + k/4}` when `k/2` is even but
/// through `T_{r + (k+2)/4}` when it is odd, half a step further round, so
/// the quarter step turns the other way in that case.
fn model(k: usize, scale: &Rational) -> Vec<(Rational, Rational)> {
    let k2 = 2 * k as i64;
    let quarter: i64 = if k.is_multiple_of(4) { -1 } else { 1 };
    let (ox, oy) = unit(&ratio(1, k as i64), PRECISION_BITS);
    let radius = rat(k as i64);
    let (ox, oy) = (&ox * &radius, &oy * &radius);
    let mut pts = Vec::with_capacity(2 * k);
    for i in 0..k {
        let (c, s) = unit(&ratio(4 * i as i64 + quarter, k2), PRECISION_BITS);
        pts.push((&ox + c, &oy + s));
    }
    let half: Vec<(Rational, Rational)> = (0..k / 2)
        .map(|i| {
            let (c, s) = unit(&ratio(2 * i as i64, k as i64), PRECISION_BITS);
            (c * scale, s * scale)
        })
        .collect();
    pts.extend(half.iter().cloned());
    pts.extend(half.iter().map(|(x, y)| (-x, -y)));
    pts
}

fn plane_edges(k: usize, path: &[usize]) -> Result<Vec<(usize, usize)>> {
    let m = k / 2;
    let mut edges = Vec::new();
    for w in path.windows(2) {
        edges.push(edge(w[0], w[1]));
        edges.push(edge(k + w[0], k + w[1]));
    }
    let (a, b) = path
        .windows(2)
        .map(|w| (w[0], w[1]))
        .find(|&(a, b)| (a + k - b) % k == m)
        .ok_or_else(|| Error::ConstructionFailed("zigzag path has no diametric step".into()))?;
    for s in 0..k {
        edges.push(edge(s, k + a));
        edges.push(edge(s, k + b));
    }
    Ok(edges)
}

/// Verified embedding of `K_n` in dimension `pdim_upper_kn(n')`, where `n'`
/// is `n` rounded up to a multiple of 4; the result is the sub-embedding
/// induced on the first `n` vertices.
pub fn complete_graph_embedding(n: usize) -> Result<PlaneProjection> {
    if n < 3 {
        return Err(Error::BadInput(format!("n must be at least 3, got {n}")));
    }
    let padded = padded_order(n);
    let k = padded / 2;
    let d = complete_graph_dimension(n)?;
    let planes: Vec<PlanePair> = PlanePair::all(d).into_iter().take(k / 2).collect();
    let paths = hamiltonian_path_decomposition(k / 2);
    if planes.len() < paths.len() {
        return Err(Error::ConstructionFailed(format!("dimension {d} offers too few planes")));
    }
    let mut assignment: BTreeMap<(usize, usize), BTreeSet<PlanePair>> = BTreeMap::new();
    for (path, &plane) in paths.iter().zip(&planes) {
        for e in plane_edges(k, path)? {
            assignment.entry(e).or_default().insert(plane);
        }
    }
    let graph = Graph::complete(padded);
    let lift = Lift::new(d, PRECISION_BITS);

    let mut scale = rat(k as i64);
    for _ in 0..MAX_DOUBLINGS {
        let coords = model(k, &scale).iter().map(|(x, y)| lift.apply(x, y)).collect();
        let pp = PlaneProjection::new(graph.clone(), Embedding::new(d, coords)?, assignment.clone())?;
        if verify(&pp).ok() {
            let out = pp.truncated(n);
            if verify(&out).ok() {
                return Ok(out);
            }
        }
        scale *= rat(2);
    }
    Err(Error::ConstructionFailed(format!(
        "no verified layout for K_{n} after {MAX_DOUBLINGS} doublings of the outer radius"
    )))
}
