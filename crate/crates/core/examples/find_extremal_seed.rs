//! Searches for the 14-vertex seed used by `extremal_two_plane`: points in
//! R^3 whose (x, y) and (y, z) projections carry triangulations (triangular
//! hulls, 36 edges each) sharing only the three edges every such pair must
//! share. Prints the result as a PPE document.
//!
//! cargo run --release -p planeproj-core --example find_extremal_seed -- [seed]

use std::collections::{BTreeMap, BTreeSet};

use planeproj::geometry::rat;
use planeproj::graph::{edge, Edge, Graph};
use planeproj::ppe::write_ppe;
use planeproj::projection::{verify, Embedding, PlanePair, PlaneProjection};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 14;
const WIDTH: i64 = 1 << 20;

type P = (i64, i64);
type Tri = BTreeSet<Edge>;

fn orient(a: P, b: P, c: P) -> i64 {
    ((b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128).signum() as i64
}

fn crosses(a: P, b: P, c: P, d: P) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

fn free(pts: &[P], edges: &Tri, (u, v): Edge) -> bool {
    edges.iter().all(|&(a, b)| a == u || a == v || b == u || b == v || !crosses(pts[u], pts[v], pts[a], pts[b]))
}

fn greedy(pts: &[P], order: &[Edge]) -> Tri {
    let mut edges = BTreeSet::new();
    for &e in order {
        if free(pts, &edges, e) {
            edges.insert(e);
        }
    }
    edges
}

/// Replaces `e` by the other diagonal of its quadrilateral, if convex.
fn flip(pts: &[P], edges: &mut Tri, (u, v): Edge) -> bool {
    let adj = |a: usize, b: usize| edges.contains(&edge(a, b));
    let empty = |w: usize| {
        (0..pts.len()).all(|q| {
            q == u || q == v || q == w || {
                let o =
                    [orient(pts[u], pts[v], pts[q]), orient(pts[v], pts[w], pts[q]), orient(pts[w], pts[u], pts[q])];
                !(o[0] == o[1] && o[1] == o[2])
            }
        })
    };
    let mut sides = [None, None];
    for w in 0..pts.len() {
        if w != u && w != v && adj(u, w) && adj(v, w) && empty(w) {
            sides[(orient(pts[u], pts[v], pts[w]) > 0) as usize] = Some(w);
        }
    }
    let (Some(a), Some(b)) = (sides[0], sides[1]) else {
        return false;
    };
    if orient(pts[a], pts[b], pts[u]) * orient(pts[a], pts[b], pts[v]) >= 0 {
        return false;
    }
    edges.remove(&(u, v));
    edges.insert(edge(a, b));
    true
}

fn general_position(pts: &[P]) -> bool {
    let n = pts.len();
    (0..n).all(|a| (a + 1..n).all(|b| (b + 1..n).all(|c| orient(pts[a], pts[b], pts[c]) != 0)))
}

#[derive(Clone)]
struct Layout {
    y: Vec<i64>,
    x: Vec<i64>,
    z: Vec<i64>,
    apex_h: usize,
    apex_m: usize,
}

impl Layout {
    fn h(&self) -> Vec<P> {
        (0..N).map(|v| (self.x[v], self.y[v])).collect()
    }

    fn m(&self) -> Vec<P> {
        (0..N).map(|v| (self.y[v], self.z[v])).collect()
    }

    /// Free coordinate strictly inside the hull triangle (lowest, highest,
    /// apex) at height `y[v]`.
    fn inside(&self, rng: &mut ChaCha8Rng, v: usize, apex: usize) -> i64 {
        if v == apex {
            return WIDTH;
        }
        let (ya, top) = (self.y[apex], self.y[N - 1]);
        let limit = if self.y[v] <= ya {
            WIDTH as i128 * self.y[v] as i128 / ya as i128
        } else {
            WIDTH as i128 * (top - self.y[v]) as i128 / (top - ya) as i128
        } as i64;
        rng.gen_range(1..limit.max(2))
    }

    fn random(rng: &mut ChaCha8Rng) -> Layout {
        let mut y: Vec<i64> = (0..N).map(|_| rng.gen_range(0..WIDTH)).collect();
        y.sort_unstable();
        y.dedup();
        while y.len() < N {
            y.push(y[y.len() - 1] + 1);
        }
        let y: Vec<i64> = y.iter().map(|v| v - y[0]).collect();
        let apex_h = rng.gen_range(1..N - 1);
        let mut apex_m = rng.gen_range(1..N - 1);
        while apex_m == apex_h {
            apex_m = rng.gen_range(1..N - 1);
        }
        let mut l = Layout { y, x: vec![0; N], z: vec![0; N], apex_h, apex_m };
        for v in 1..N - 1 {
            l.x[v] = l.inside(rng, v, apex_h);
            l.z[v] = l.inside(rng, v, apex_m);
        }
        l
    }
}

struct Search {
    rng: ChaCha8Rng,
    forced: Tri,
    all: Vec<Edge>,
}

impl Search {
    fn cost(&self, eh: &Tri, em: &Tri) -> usize {
        eh.intersection(em).filter(|e| !self.forced.contains(e)).count()
    }

    /// Greedy triangulation trying `keep` first and `avoid` last.
    fn seeded(&mut self, pts: &[P], keep: &Tri, avoid: &Tri) -> Tri {
        let mut rest: Vec<Edge> = self.all.iter().copied().filter(|e| !keep.contains(e)).collect();
        rest.shuffle(&mut self.rng);
        let (mut good, bad): (Vec<Edge>, Vec<Edge>) = rest.into_iter().partition(|e| !avoid.contains(e));
        let mut order: Vec<Edge> = keep.iter().copied().collect();
        order.shuffle(&mut self.rng);
        order.append(&mut good);
        order.extend(bad);
        greedy(pts, &order)
    }

    fn anneal(&mut self, l: &Layout, mut eh: Tri, mut em: Tri, steps: usize) -> (usize, Tri, Tri) {
        let (h, m) = (l.h(), l.m());
        let mut cost = self.cost(&eh, &em);
        let mut best = (cost, eh.clone(), em.clone());
        for step in 0..steps {
            if cost == 0 {
                break;
            }
            let temp = 1.0 * (1.0 - step as f64 / steps as f64) + 0.05;
            let in_h = self.rng.gen_bool(0.5);
            let (pts, set) = if in_h { (&h, &eh) } else { (&m, &em) };
            let pick: Vec<Edge> = set.iter().copied().collect();
            let e = *pick.choose(&mut self.rng).unwrap();
            let mut next = set.clone();
            if !flip(pts, &mut next, e) {
                continue;
            }
            let c = if in_h { self.cost(&next, &em) } else { self.cost(&eh, &next) };
            if c <= cost || self.rng.gen_bool((-((c - cost) as f64) / temp).exp()) {
                if in_h {
                    eh = next;
                } else {
                    em = next;
                }
                cost = c;
                if cost < best.0 {
                    best = (cost, eh.clone(), em.clone());
                }
            }
        }
        best
    }

    fn run(&mut self) -> (Layout, Tri, Tri) {
        for restart in 0.. {
            let mut l = Layout::random(&mut self.rng);
            if !general_position(&l.h()) || !general_position(&l.m()) {
                continue;
            }
            let em = self.seeded(&l.m(), &Tri::new(), &Tri::new());
            let eh = self.seeded(&l.h(), &Tri::new(), &em);
            let (mut cost, mut eh, mut em) = self.anneal(&l, eh, em, 20_000);
            for _ in 0..400 {
                if cost == 0 {
                    eprintln!("found on restart {restart}");
                    return (l, eh, em);
                }
                let mut cand = l.clone();
                let v = self.rng.gen_range(1..N - 1);
                if self.rng.gen_bool(0.5) {
                    cand.x[v] = cand.inside(&mut self.rng, v, cand.apex_h);
                } else {
                    cand.z[v] = cand.inside(&mut self.rng, v, cand.apex_m);
                }
                if !general_position(&cand.h()) || !general_position(&cand.m()) {
                    continue;
                }
                let nh = self.seeded(&cand.h(), &eh, &em);
                let nm = self.seeded(&cand.m(), &em, &nh);
                let (c, nh, nm) = self.anneal(&cand, nh, nm, 3_000);
                if c <= cost {
                    (cost, eh, em, l) = (c, nh, nm, cand);
                }
            }
            eprintln!("restart {restart}: stuck at {cost}");
        }
        unreachable!()
    }
}

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut search = Search {
        rng: ChaCha8Rng::seed_from_u64(seed),
        forced: [(0, N - 1), (0, 1), (N - 2, N - 1)].into(),
        all: (0..N).flat_map(|u| (u + 1..N).map(move |v| (u, v))).collect(),
    };
    let (l, eh, em) = search.run();
    let coords = (0..N).map(|v| vec![rat(l.x[v]), rat(l.y[v]), rat(l.z[v])]).collect();
    let (ph, pm) = (PlanePair { i: 0, j: 1 }, PlanePair { i: 1, j: 2 });
    let mut assignment: BTreeMap<Edge, BTreeSet<PlanePair>> = BTreeMap::new();
    for &e in &eh {
        assignment.entry(e).or_default().insert(ph);
    }
    for &e in &em {
        assignment.entry(e).or_default().insert(pm);
    }
    let g = Graph::from_edges(N, assignment.keys().copied()).unwrap();
    let pp = PlaneProjection::new(g, Embedding::new(3, coords).unwrap(), assignment).unwrap();
    assert!(verify(&pp).ok());
    eprintln!("{} edges", pp.graph().edge_count());
    print!("{}", write_ppe(&pp));
}
