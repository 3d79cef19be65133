//! Edge decompositions: linear / caterpillar forests and the zigzag
//! Hamiltonian path decomposition of even complete graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, is_caterpillar_forest, is_linear_forest, Edge, Graph};

/// Edge budget above which exact search is refused.
pub const DEFAULT_EXACT_EDGE_BUDGET: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForestKind {
    Linear,
    Caterpillar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDecomposition {
    pub parts: Vec<BTreeSet<Edge>>,
    pub kind: ForestKind,
}

impl ForestDecomposition {
    /// Checks disjointness, coverage of `g`, and the forest kind of each part.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (i, part) in self.parts.iter().enumerate() {
            for &(u, v) in part {
                if !g.has_edge(u, v) {
                    return Err(Error::BadDecomposition(format!("part {i} has foreign edge {{{u}, {v}}}")));
                }
                if !seen.insert((u, v)) {
                    return Err(Error::BadDecomposition(format!("edge {{{u}, {v}}} in two parts")));
                }
            }
            let sub = g.spanning_subgraph(part.iter().copied())?;
            let ok = match self.kind {
                ForestKind::Linear => is_linear_forest(&sub),
                ForestKind::Caterpillar => is_caterpillar_forest(&sub),
            };
            if !ok {
                return Err(Error::BadDecomposition(format!("part {i} is not a {:?} forest", self.kind)));
            }
        }
        if seen.len() != g.edge_count() {
            return Err(Error::BadDecomposition(format!("parts cover {} of {} edges", seen.len(), g.edge_count())));
        }
        Ok(())
    }

    pub fn part_graphs(&self, g: &Graph) -> Result<Vec<Graph>> {
        self.parts.iter().map(|p| g.spanning_subgraph(p.iter().copied())).collect()
    }
}

/// Decomposes `g` into at most `k` forests of `kind`, returned as exactly
/// `k` (possibly empty) parts.
///
/// `Exact` is complete: `None` means no decomposition exists. `Heuristic`
/// may return `None` for decomposable graphs.
pub fn decompose_forests(
    g: &Graph,
    k: usize,
    kind: ForestKind,
    mode: SearchMode,
) -> Result<Option<ForestDecomposition>> {
    decompose_forests_with_budget(g, k, kind, mode, DEFAULT_EXACT_EDGE_BUDGET)
}

pub fn decompose_forests_with_budget(
    g: &Graph,
    k: usize,
    kind: ForestKind,
    mode: SearchMode,
    exact_budget: usize,
) -> Result<Option<ForestDecomposition>> {
    if k == 0 {
        return Err(Error::BadInput("number of forests must be at least 1".into()));
    }
    let parts = match mode {
        SearchMode::Exact => {
            if g.edge_count() > exact_budget {
                return Err(Error::TooLargeForExact { edges: g.edge_count(), budget: exact_budget });
            }
            exact(g, k, kind)
        }
        SearchMode::Heuristic => heuristic(g, k, kind),
    };
    Ok(parts.map(|parts| ForestDecomposition { parts, kind }))
}

/// Per-part adjacency used while assigning edges.
#[derive(Clone)]
struct Parts {
    adj: Vec<Vec<Vec<usize>>>,
    sizes: Vec<usize>,
    kind: ForestKind,
}

impl Parts {
    fn new(n: usize, k: usize, kind: ForestKind) -> Self {
        Parts { adj: vec![vec![Vec::new(); n]; k], sizes: vec![0; k], kind }
    }

    fn connected(&self, p: usize, u: usize, v: usize) -> bool {
        let adj = &self.adj[p];
        let mut stack = vec![u];
        let mut seen = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &w in &adj[x] {
                if !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        false
    }

    fn caterpillar_ok_near(&self, p: usize, u: usize, v: usize) -> bool {
        let adj = &self.adj[p];
        let mut check: Vec<usize> = vec![u, v];
        check.extend(adj[u].iter().copied());
        check.extend(adj[v].iter().copied());
        check.iter().all(|&x| adj[x].len() <= 1 || adj[x].iter().filter(|&&w| adj[w].len() > 1).count() <= 2)
    }

    fn fits(&mut self, p: usize, u: usize, v: usize) -> bool {
        if self.kind == ForestKind::Linear && (self.adj[p][u].len() >= 2 || self.adj[p][v].len() >= 2) {
            return false;
        }
        if self.connected(p, u, v) {
            return false;
        }
        if self.kind == ForestKind::Caterpillar {
            self.push(p, u, v);
            let ok = self.caterpillar_ok_near(p, u, v);
            self.pop(p, u, v);
            return ok;
        }
        true
    }

    fn push(&mut self, p: usize, u: usize, v: usize) {
        self.adj[p][u].push(v);
        self.adj[p][v].push(u);
        self.sizes[p] += 1;
    }

    fn pop(&mut self, p: usize, u: usize, v: usize) {
        let a = &mut self.adj[p];
        let i = a[u].iter().rposition(|&w| w == v).expect("edge present");
        a[u].remove(i);
        let i = a[v].iter().rposition(|&w| w == u).expect("edge present");
        a[v].remove(i);
        self.sizes[p] -= 1;
    }

    /// Parts ordered by load, lightest first (ties by index).
    fn by_load(&self, limit: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..limit).collect();
        order.sort_by_key(|&p| (self.sizes[p], p));
        order
    }
}

/// Edges in depth-first discovery order, so that consecutive decisions
/// touch neighbouring edges.
fn dfs_edge_order(g: &Graph) -> Vec<Edge> {
    let adj = g.adjacency();
    let mut seen_v = vec![false; g.n()];
    let mut seen_e = BTreeSet::new();
    let mut order = Vec::with_capacity(g.edge_count());
    let mut starts: Vec<usize> = (0..g.n()).collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    for s in starts {
        if seen_v[s] {
            continue;
        }
        seen_v[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i == adj[u].len() {
                stack.pop();
                continue;
            }
            let w = adj[u][*i];
            *i += 1;
            if seen_e.insert(edge(u, w)) {
                order.push(edge(u, w));
                if !seen_v[w] {
                    seen_v[w] = true;
                    stack.push((w, 0));
                }
            }
        }
    }
    order
}

fn exact(g: &Graph, k: usize, kind: ForestKind) -> Option<Vec<BTreeSet<Edge>>> {
    let n = g.n();
    let cap = match kind {
        ForestKind::Linear => 2,
        ForestKind::Caterpillar => usize::MAX,
    };
    if kind == ForestKind::Linear && g.degrees().iter().any(|&d| d > 2 * k) {
        return None;
    }
    if g.edge_count() > k * n.saturating_sub(1) {
        return None;
    }
    let order = dfs_edge_order(g);
    let mut remaining = g.degrees();
    let mut parts = Parts::new(n, k, kind);
    let mut assign = vec![usize::MAX; order.len()];

    fn capacity_ok(parts: &Parts, remaining: &[usize], x: usize, cap: usize) -> bool {
        if cap == usize::MAX {
            return true;
        }
        let free: usize = parts.adj.iter().map(|a| cap.saturating_sub(a[x].len())).sum();
        remaining[x] <= free
    }

    fn go(
        i: usize,
        order: &[Edge],
        parts: &mut Parts,
        remaining: &mut [usize],
        assign: &mut [usize],
        used: usize,
        cap: usize,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let (u, v) = order[i];
        let k = parts.adj.len();
        // symmetry breaking: at most one fresh part is tried
        let limit = (used + 1).min(k);
        for p in parts.by_load(limit) {
            if !parts.fits(p, u, v) {
                continue;
            }
            parts.push(p, u, v);
            remaining[u] -= 1;
            remaining[v] -= 1;
            if capacity_ok(parts, remaining, u, cap) && capacity_ok(parts, remaining, v, cap) {
                assign[i] = p;
                let used_next = if p == used { used + 1 } else { used };
                if go(i + 1, order, parts, remaining, assign, used_next, cap) {
                    return true;
                }
            }
            remaining[u] += 1;
            remaining[v] += 1;
            parts.pop(p, u, v);
        }
        false
    }

    if !go(0, &order, &mut parts, &mut remaining, &mut assign, 0, cap) {
        return None;
    }
    let mut out = vec![BTreeSet::new(); k];
    for (e, &p) in order.iter().zip(&assign) {
        out[p].insert(*e);
    }
    Some(out)
}

const HEURISTIC_RESTARTS: u64 = 32;

fn heuristic(g: &Graph, k: usize, kind: ForestKind) -> Option<Vec<BTreeSet<Edge>>> {
    let deg = g.degrees();
    let mut base: Vec<Edge> = g.edges().collect();
    base.sort_by_key(|&(u, v)| (std::cmp::Reverse(deg[u].max(deg[v])), std::cmp::Reverse(deg[u].min(deg[v])), u, v));
    for attempt in 0..HEURISTIC_RESTARTS {
        let mut order = base.clone();
        if attempt > 0 {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(attempt));
        }
        if let Some(parts) = greedy_with_repair(g.n(), k, kind, &order) {
            return Some(parts);
        }
    }
    None
}

fn greedy_with_repair(n: usize, k: usize, kind: ForestKind, order: &[Edge]) -> Option<Vec<BTreeSet<Edge>>> {
    let mut parts = Parts::new(n, k, kind);
    let mut sets = vec![BTreeSet::<Edge>::new(); k];
    'edges: for &(u, v) in order {
        for p in parts.by_load(k) {
            if parts.fits(p, u, v) {
                parts.push(p, u, v);
                sets[p].insert((u, v));
                continue 'edges;
            }
        }
        // Repair: evict one edge near (u, v) from some part into another.
        for p in 0..k {
            let near: Vec<Edge> =
                sets[p].iter().copied().filter(|&(a, b)| a == u || a == v || b == u || b == v).collect();
            let candidates = near.into_iter().chain(sets[p].clone());
            for (a, b) in candidates {
                parts.pop(p, a, b);
                if parts.fits(p, u, v) {
                    parts.push(p, u, v);
                    if let Some(q) = (0..k).filter(|&q| q != p).find(|&q| parts.fits(q, a, b)) {
                        parts.push(q, a, b);
                        sets[p].remove(&(a, b));
                        sets[p].insert((u, v));
                        sets[q].insert((a, b));
                        continue 'edges;
                    }
                    parts.pop(p, u, v);
                }
                parts.push(p, a, b);
            }
        }
        return None;
    }
    Some(sets)
}

/// Zigzag decomposition of `K_{2m}` into `m` edge-disjoint Hamiltonian
/// paths: path `r` is `r, r+1, r-1, r+2, r-2, …` modulo `2m`.
pub fn hamiltonian_path_decomposition(m: usize) -> Vec<Vec<usize>> {
    let size = 2 * m;
    (0..m)
        .map(|r| {
            let mut path = Vec::with_capacity(size);
            path.push(r);
            for step in 1..size {
                let half = step.div_ceil(2);
                let offset = if step % 2 == 1 { half as isize } else { -(half as isize) };
                path.push((r as isize + offset).rem_euclid(size as isize) as usize);
            }
            path
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_has_decomposition(g: &Graph, k: usize, kind: ForestKind) -> bool {
        let edges: Vec<Edge> = g.edges().collect();
        let total = k.pow(edges.len() as u32);
        (0..total).any(|mut code| {
            let mut parts = vec![BTreeSet::new(); k];
            for &e in &edges {
                parts[code % k].insert(e);
                code /= k;
            }
            ForestDecomposition { parts, kind }.validate(g).is_ok()
        })
    }

    #[test]
    fn c4_two_matchings() {
        let g = Graph::cycle(4);
        let d = decompose_forests(&g, 2, ForestKind::Linear, SearchMode::Exact).unwrap().unwrap();
        d.validate(&g).unwrap();
        for part in &d.parts {
            assert_eq!(part.len(), 2);
            let sub = g.spanning_subgraph(part.iter().copied()).unwrap();
            assert_eq!(sub.max_degree(), 1);
        }
    }

    #[test]
    fn k4_linear_arboricity() {
        let g = Graph::complete(4);
        assert!(brute_force_has_decomposition(&g, 2, ForestKind::Linear));
        let d = decompose_forests(&g, 2, ForestKind::Linear, SearchMode::Exact).unwrap().unwrap();
        d.validate(&g).unwrap();
        assert!(decompose_forests(&g, 1, ForestKind::Linear, SearchMode::Exact).unwrap().is_none());
        assert!(!brute_force_has_decomposition(&g, 1, ForestKind::Linear));
    }

    #[test]
    fn exact_matches_brute_force_on_small_graphs() {
        // every graph on 5 vertices with at most 7 edges, sampled by bitmask
        let all: Vec<Edge> = Graph::complete(5).edges().collect();
        for mask in (0u32..1 << 10).step_by(7) {
            if mask.count_ones() > 7 {
                continue;
            }
            let g = Graph::from_edges(5, all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            for kind in [ForestKind::Linear, ForestKind::Caterpillar] {
                for k in 1..=2 {
                    let got = decompose_forests(&g, k, kind, SearchMode::Exact).unwrap();
                    assert_eq!(got.is_some(), brute_force_has_decomposition(&g, k, kind), "{g:?} k={k} {kind:?}");
                    if let Some(d) = got {
                        d.validate(&g).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn exact_budget_enforced() {
        let g = Graph::complete(10);
        let err = decompose_forests(&g, 5, ForestKind::Linear, SearchMode::Exact).unwrap_err();
        assert_eq!(err, Error::TooLargeForExact { edges: 45, budget: 40 });
        assert!(decompose_forests(&g, 0, ForestKind::Linear, SearchMode::Heuristic).is_err());
    }

    #[test]
    fn heuristic_output_is_valid() {
        let g = Graph::complete(10);
        let d = decompose_forests(&g, 5, ForestKind::Linear, SearchMode::Heuristic).unwrap();
        if let Some(d) = d {
            d.validate(&g).unwrap();
        }
        let g = Graph::cycle(30);
        let d = decompose_forests(&g, 2, ForestKind::Linear, SearchMode::Heuristic).unwrap().unwrap();
        d.validate(&g).unwrap();
    }

    fn check_hamiltonian(m: usize) {
        let paths = hamiltonian_path_decomposition(m);
        assert_eq!(paths.len(), m);
        let mut seen = BTreeSet::new();
        for p in &paths {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..2 * m).collect::<Vec<_>>());
            for w in p.windows(2) {
                assert!(seen.insert(edge(w[0], w[1])), "edge repeated");
            }
        }
        assert_eq!(seen.len(), m * (2 * m - 1));
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(hamiltonian_path_decomposition(1), vec![vec![0, 1]]);
        for m in 1..=12 {
            check_hamiltonian(m);
        }
    }
}
