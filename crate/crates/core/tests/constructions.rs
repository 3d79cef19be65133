use std::collections::{BTreeMap, BTreeSet};

use planeproj::bounds::{
    max_edges_three_planes, max_edges_two_planes, pdim_lower_from_thickness, pdim_lower_kn,
    pdim_upper_from_geom_thickness, pdim_upper_kn, thickness_kn,
};
use planeproj::constructors::{
    caterpillar_x_coords, complete_graph_dimension, complete_graph_embedding, cycle_x_coords, extremal_two_plane,
    forests_to_embedding, layer_plane, lift_geometric_thickness, planar_plus_paths, straight_line_planar_drawing,
    CaterpillarLayoutRequest, GeomThicknessLayout, LiftMode, RotationSystem,
};
use planeproj::forests::{decompose_forests, ForestKind, SearchMode};
use planeproj::geometry::{rat, ratio, Point2, Rational};
use planeproj::graph::{edge, is_caterpillar_forest, is_linear_forest, Edge, Graph};
use planeproj::projection::{saturate, verify, verify_drawing, Embedding, PlanePair, PlaneProjection};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_bounded_degree(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, tries: usize) -> Graph {
    let mut g = Graph::new(n);
    let mut deg = vec![0; n];
    for _ in 0..tries {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && deg[u] < max_deg && deg[v] < max_deg && g.add_edge(u, v).unwrap() {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    g
}

fn distinct_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert(ratio(rng.gen_range(-1000..1000), rng.gen_range(1..50)));
    }
    let mut ys: Vec<Rational> = seen.into_iter().collect();
    ys.shuffle(rng);
    ys
}

fn random_caterpillar(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let spine = rng.gen_range(1..=n.min(10));
    let mut edges: Vec<Edge> = (1..spine).map(|i| (i - 1, i)).collect();
    for leaf in spine..n {
        edges.push((rng.gen_range(0..spine), leaf));
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(a, b)| (label[a], label[b]))).unwrap()
}

fn plane_ok(xs: &[Rational], ys: &[Rational], g: &Graph) -> bool {
    let pts: Vec<Point2> = xs.iter().zip(ys).map(|(x, y)| Point2::new(x.clone(), y.clone())).collect();
    verify_drawing(&pts, &g.edges().collect::<Vec<_>>()).is_empty()
}

#[test]
fn small_bounded_degree_graphs_split_into_three_linear_forests() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..80 {
        let n = rng.gen_range(2..=8);
        let g = random_bounded_degree(&mut rng, n, 5, 40);
        let dec = decompose_forests(&g, 3, ForestKind::Linear, SearchMode::Exact).unwrap().expect("3 linear forests");
        dec.validate(&g).unwrap();
        for part in dec.part_graphs(&g).unwrap() {
            assert!(is_linear_forest(&part));
            assert!(is_caterpillar_forest(&part));
        }
    }
}

#[test]
fn bounds_invariants() {
    for n in 1..1000u64 {
        assert!(pdim_lower_kn(n).unwrap() <= pdim_upper_kn(n).unwrap(), "n = {n}");
        assert!(thickness_kn(n).unwrap() <= thickness_kn(n + 1).unwrap());
        assert!(pdim_upper_kn(n).unwrap() <= pdim_upper_kn(n + 1).unwrap());
        let d = pdim_lower_from_thickness(n).unwrap();
        assert!(d * (d - 1) / 2 >= n && (d - 1) * (d - 2) / 2 < n);
    }
    for n in [16u64, 36, 64, 100] {
        assert!(pdim_upper_kn(n).unwrap() <= (n as f64).sqrt().ceil() as u64);
    }
    for n in 3..200u64 {
        assert!(max_edges_two_planes(n).unwrap() <= max_edges_three_planes(n).unwrap());
    }
    // lifting s layers needs 2 ceil(sqrt s) axes, enough for s planes
    for s in 1..200u64 {
        let d = pdim_upper_from_geom_thickness(s).unwrap();
        assert!((d / 2) * (d / 2) >= s);
    }
}

#[test]
fn caterpillar_and_cycle_drawings() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..60 {
        let n = rng.gen_range(2..=30);
        let g = random_caterpillar(&mut rng, n);
        let y = distinct_rationals(&mut rng, n);
        let x = caterpillar_x_coords(&CaterpillarLayoutRequest { caterpillar: g.clone(), spine: None, y: y.clone() })
            .unwrap();
        assert!(plane_ok(&x, &y, &g));

        let m = rng.gen_range(3..=30);
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(&mut rng);
        let y = distinct_rationals(&mut rng, m);
        let x = cycle_x_coords(&order, &y).unwrap();
        let cycle = Graph::from_edges(m, (0..m).map(|i| (order[i], order[(i + 1) % m]))).unwrap();
        assert!(plane_ok(&x, &y, &cycle));
    }
}

#[test]
fn guaranteed_lift_of_random_forest_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let n = rng.gen_range(3..=12);
        let g = random_bounded_degree(&mut rng, n, 5, 25);
        let dec = decompose_forests(&g, 3, ForestKind::Linear, SearchMode::Exact).unwrap().unwrap();
        let pp = forests_to_embedding(&g, &dec, LiftMode::Guaranteed, 0).unwrap();
        assert_eq!(pp.dimension(), 4);
        assert!(verify(&pp).ok());
        assert_eq!(pp.graph(), &g);
        if let Ok(pp) = forests_to_embedding(&g, &dec, LiftMode::PaperPlanes, 1) {
            assert_eq!(pp.dimension(), 3);
            assert!(verify(&pp).ok());
        }
    }
}

/// Random points with greedily planar edge layers.
fn random_layout(rng: &mut ChaCha8Rng, n: usize, s: usize) -> GeomThicknessLayout {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((rng.gen_range(0..30i64), rng.gen_range(0..30i64)));
    }
    let positions: Vec<Point2> = seen.into_iter().map(|(x, y)| Point2::from_ints(x, y)).collect();
    let mut layers: Vec<Vec<Edge>> = vec![Vec::new(); s];
    let mut used = BTreeSet::new();
    for layer in layers.iter_mut() {
        for _ in 0..3 * n {
            let e = edge(rng.gen_range(0..n), rng.gen_range(0..n));
            if e.0 == e.1 || used.contains(&e) {
                continue;
            }
            layer.push(e);
            if verify_drawing(&positions, layer).is_empty() {
                used.insert(e);
            } else {
                layer.pop();
            }
        }
        if layer.is_empty() {
            layer.push(*used.iter().next().unwrap_or(&(0, 1)));
        }
    }
    GeomThicknessLayout { positions, layers }
}

#[test]
fn lifted_layers_use_one_plane_each() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for s in 1..=9 {
        let layout = random_layout(&mut rng, 10, s);
        let pp = lift_geometric_thickness(&layout).unwrap();
        let k = (1..).find(|k| k * k >= s).unwrap();
        assert_eq!(pp.dimension(), 2 * k);
        let expected: BTreeSet<PlanePair> = (0..s).map(|l| layer_plane(l, k)).collect();
        assert_eq!(pp.used_planes(), expected);
        assert!(verify(&pp).ok());
    }
}

#[test]
fn complete_graphs_up_to_forty() {
    for n in 3..=40 {
        let pp = complete_graph_embedding(n).unwrap();
        assert!(verify(&pp).ok(), "K_{n}");
        assert_eq!(pp.assignment().len(), n * (n - 1) / 2);
        assert_eq!(pp.dimension(), complete_graph_dimension(n).unwrap());
    }
}

#[test]
fn extremal_counts() {
    for n in [14, 17, 23, 31, 45, 60] {
        let pp = extremal_two_plane(n).unwrap();
        assert!(verify(&pp).ok());
        assert_eq!(pp.graph().edge_count(), 6 * n - 15);
        assert_eq!(pp.used_planes().len(), 2);
        assert_eq!(pp.dimension(), 3);
    }
}

/// Maximal planar graph on random points, via saturation of one plane.
fn random_triangulation(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Vec<Point2>) {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((rng.gen_range(0..40i64), rng.gen_range(0..40i64)));
    }
    let pts: Vec<Point2> = seen.into_iter().map(|(x, y)| Point2::from_ints(x, y)).collect();
    let emb = Embedding::new(2, pts.iter().map(|p| vec![p.x.clone(), p.y.clone()]).collect()).unwrap();
    let pp = PlaneProjection::new(Graph::new(n), emb, BTreeMap::new()).unwrap();
    let sat = saturate(&pp, PlanePair { i: 0, j: 1 }).unwrap();
    (sat.graph().clone(), pts)
}

#[test]
fn shift_drawings_of_random_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let n = rng.gen_range(3..=25);
        let (full, pts) = random_triangulation(&mut rng, n);
        let keep: Vec<Edge> = full.edges().filter(|_| rng.gen_bool(0.7)).collect();
        let g = Graph::from_edges(n, keep).unwrap();
        let rot = RotationSystem::from_drawing(&g, &pts).unwrap();
        let drawing = straight_line_planar_drawing(&g, &rot).unwrap();
        assert!(verify_drawing(&drawing, &g.edges().collect::<Vec<_>>()).is_empty());
        if n >= 3 {
            let (w, h) = (rat(2 * n as i64 - 4), rat(n as i64 - 2));
            assert!(drawing.iter().all(|p| p.x >= rat(0) && p.x <= w && p.y >= rat(0) && p.y <= h));
        }
    }
}

#[test]
fn planar_graph_plus_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..20 {
        let n = rng.gen_range(4..=14);
        let (g, pts) = random_triangulation(&mut rng, n);
        let drawing = straight_line_planar_drawing(&g, &RotationSystem::from_drawing(&g, &pts).unwrap()).unwrap();
        // Hamiltonian-ish paths over non-edges of the triangulation
        let mut paths = Vec::new();
        let mut used: BTreeSet<Edge> = g.edges().collect();
        for _ in 0..rng.gen_range(1..=3) {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut path = vec![order[0]];
            for &v in &order[1..] {
                let e = edge(*path.last().unwrap(), v);
                if used.contains(&e) {
                    break;
                }
                used.insert(e);
                path.push(v);
            }
            if path.len() >= 2 {
                paths.push(path);
            }
        }
        let pp = planar_plus_paths(&g, &drawing, &paths).unwrap();
        assert!(verify(&pp).ok());
        assert_eq!(pp.used_planes().len(), 1 + paths.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn cycles_with_arbitrary_y(ys in prop::collection::btree_set(-500i64..500, 3..20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut y: Vec<Rational> = ys.into_iter().map(|v| ratio(v, 7)).collect();
        y.shuffle(&mut rng);
        let order: Vec<usize> = (0..y.len()).collect();
        let x = cycle_x_coords(&order, &y).unwrap();
        let cycle = Graph::cycle(y.len());
        prop_assert!(plane_ok(&x, &y, &cycle));
    }
}
