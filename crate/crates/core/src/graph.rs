//! Simple undirected graphs over dense vertex ids, plus the forest-kind
//! predicates used by the decomposition code.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An undirected edge, stored with `0 <= u < v`.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::BadInput(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.edges.insert((v - 1, v));
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::BadInput(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::BadInput(format!("edge {{{u}, {v}}} out of range for {} vertices", self.n)));
        }
        Ok(self.edges.insert(edge(u, v)))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&edge(u, v))
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Same vertex set, only the given edges (which must belong to `self`).
    pub fn spanning_subgraph<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Result<Graph> {
        let mut g = Graph::new(self.n);
        for (u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::BadInput(format!("edge {{{u}, {v}}} not in host graph")));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Parses the edge-list text format: `n m` then `m` lines of `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut g = Graph::new(n);
        let mut count = 0;
        for line in lines {
            let (u, v) = parse_pair(line)?;
            if !g.add_edge(u, v).map_err(|e| Error::Parse(e.to_string()))? {
                return Err(Error::Parse(format!("duplicate edge {u} {v}")));
            }
            count += 1;
        }
        if count != m {
            return Err(Error::Parse(format!("header announces {m} edges, found {count}")));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("expected two integers in {line:?}")))?
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("{line:?}: {e}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in {line:?}")));
    }
    Ok(pair)
}

/// Every component is a path (acyclic, max degree 2).
pub fn is_linear_forest(g: &Graph) -> bool {
    g.is_forest() && g.max_degree() <= 2
}

/// Every component is a caterpillar: acyclic, and stripping the leaves of
/// the component leaves a path (or nothing).
pub fn is_caterpillar_forest(g: &Graph) -> bool {
    if !g.is_forest() {
        return false;
    }
    let adj = g.adjacency();
    (0..g.n()).all(|v| {
        if adj[v].len() <= 1 {
            return true;
        }
        // number of non-leaf neighbours of an inner vertex
        adj[v].iter().filter(|&&w| adj[w].len() > 1).count() <= 2
    })
}

/// Spine of a caterpillar component (`comp` is its sorted vertex list and
/// `adj` the host adjacency).
///
/// For a component that is itself a path the whole path is the spine;
/// otherwise the spine is what remains after stripping leaves once. The
/// spine is listed from its end with the smaller vertex id.
pub fn caterpillar_spine(adj: &[Vec<usize>], comp: &[usize]) -> Result<Vec<usize>> {
    if comp.len() == 1 {
        return Ok(comp.to_vec());
    }
    let is_path = comp.iter().all(|&v| adj[v].len() <= 2);
    let inner: Vec<usize> =
        if is_path { comp.to_vec() } else { comp.iter().copied().filter(|&v| adj[v].len() > 1).collect() };
    let in_spine = |v: usize| -> bool { inner.binary_search(&v).is_ok() };
    let spine_deg = |v: usize| adj[v].iter().filter(|&&w| in_spine(w)).count();
    if inner.iter().any(|&v| spine_deg(v) > 2) {
        return Err(Error::NotACaterpillar(format!("component containing vertex {} has a branching spine", comp[0])));
    }
    let ends: Vec<usize> = inner.iter().copied().filter(|&v| spine_deg(v) <= 1).collect();
    let start = *ends
        .iter()
        .min()
        .ok_or_else(|| Error::NotACaterpillar(format!("component containing {} is cyclic", comp[0])))?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().copied().find(|&w| w != prev && in_spine(w));
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                spine.push(w);
            }
            None => break,
        }
        if spine.len() > inner.len() {
            return Err(Error::NotACaterpillar("cycle along spine".into()));
        }
    }
    if spine.len() != inner.len() {
        return Err(Error::NotACaterpillar(format!("spine of component containing {} is disconnected", comp[0])));
    }
    Ok(spine)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    fn spider() -> Graph {
        // centre 0, legs 0-1-2, 0-3-4, 0-5-6
        Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn linear_forest_examples() {
        assert!(is_linear_forest(&Graph::path(4)));
        assert!(!is_linear_forest(&star(3)));
        assert!(!is_linear_forest(&Graph::cycle(3)));
        assert!(is_linear_forest(&Graph::new(5)));
    }

    #[test]
    fn caterpillar_examples() {
        assert!(is_caterpillar_forest(&star(3)));
        assert!(is_caterpillar_forest(&Graph::path(5)));
        assert!(!is_caterpillar_forest(&spider()));
        assert!(!is_caterpillar_forest(&Graph::cycle(4)));
    }

    #[test]
    fn spider_leaf_removal_leaves_a_claw() {
        let g = spider();
        let adj = g.adjacency();
        let inner: Vec<usize> = (0..7).filter(|&v| adj[v].len() > 1).collect();
        assert_eq!(inner, vec![0, 1, 3, 5]);
        let claw = Graph::from_edges(7, [(0, 1), (0, 3), (0, 5)]).unwrap();
        assert!(g.edges().filter(|&(u, v)| inner.contains(&u) && inner.contains(&v)).eq(claw.edges()));
    }

    #[test]
    fn spines() {
        let p4 = Graph::path(4);
        let adj = p4.adjacency();
        assert_eq!(caterpillar_spine(&adj, &[0, 1, 2, 3]).unwrap(), vec![0, 1, 2, 3]);

        let s = star(3);
        let adj = s.adjacency();
        assert_eq!(caterpillar_spine(&adj, &[0, 1, 2, 3]).unwrap(), vec![0]);

        // hairy path 4-0-1-2 with leaves 5,6 on 1
        let g = Graph::from_edges(7, [(4, 0), (0, 1), (1, 2), (1, 5), (1, 6), (2, 3)]).unwrap();
        let adj = g.adjacency();
        let comp = &g.components()[0];
        assert_eq!(caterpillar_spine(&adj, comp).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (3, 1), (2, 4)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "5 3\n0 1\n1 3\n2 4\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 0\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 5\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn components_sorted() {
        let g = Graph::from_edges(6, [(4, 5), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3], vec![4, 5]]);
    }
}
