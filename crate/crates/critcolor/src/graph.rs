//! Immutable simple-graph representation with exact clique computation and
//! connectivity/distance utilities.

use std::collections::BTreeSet;

use thiserror::Error;

/// A set of vertices of some [`Graph`], ordered for deterministic iteration.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("cycle graph needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("malformed graph6 encoding: {0}")]
    MalformedEncoding(String),
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; all analyses are pure functions of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![false; n * n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u * n + v] {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
                edge_count += 1;
            }
        }
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Ok(Graph {
            n,
            adj,
            neighbors,
            edge_count,
        })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).expect("complete graph edges are valid")
    }

    /// The cycle graph C_n, n >= 3.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Unordered edges (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].len())
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.neighbors
            .iter()
            .map(|ns| ns.len())
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.neighbors
            .iter()
            .map(|ns| ns.len())
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Subgraph induced on `s`, relabeled to `0..s.len()`, plus the
    /// old-to-new vertex map in ascending old-vertex order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let old: Vec<usize> = s.iter().copied().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in old.iter().enumerate() {
            for &v in &self.neighbors[u] {
                if new_of[v] != usize::MAX && new_of[v] > i {
                    edges.push((i, new_of[v]));
                }
            }
        }
        let g = Graph::from_edge_list(old.len(), &edges)?;
        Ok((g, old))
    }

    /// The graph with vertex `v` deleted (remaining vertices relabeled).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let s: VertexSet = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&s)?.0)
    }

    /// Connected component of `v` in the subgraph induced on `s`.
    pub fn component_of(&self, s: &VertexSet, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        for &u in s {
            self.check_vertex(u)?;
        }
        debug_assert!(s.contains(&v), "component_of: v must lie in s");
        let mut seen = VertexSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(v);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if s.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }

    /// Shortest-path length between `u` and `v` inside the subgraph induced
    /// on `s`, or `None` when they lie in different components of it.
    pub fn distance_within(
        &self,
        s: &VertexSet,
        u: usize,
        v: usize,
    ) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            for &x in &self.neighbors[w] {
                if s.contains(&x) && dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Ok(Some(dist[x]));
                    }
                    queue.push_back(x);
                }
            }
        }
        Ok(None)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(&self.all_vertices(), 0)
            .map(|c| c.len() == self.n)
            .unwrap_or(false)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph is a single cycle (connected and 2-regular).
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.neighbors.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.is_cycle() && self.n % 2 == 1
    }
}

/// Exact maximum clique size. `omega(empty graph) = 0`.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Exact maximum clique, found by branch and bound ordered by degeneracy
/// with a greedy-coloring upper bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let order = degeneracy_order(g);
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    // Candidates seeded in reverse degeneracy order so dense ends expand first.
    let candidates: Vec<usize> = order.iter().rev().copied().collect();
    expand_clique(g, &mut current, candidates, &mut best, usize::MAX);
    best.into_iter().collect()
}

/// Decides whether the graph contains a clique of size `k`; on success the
/// witness induces a complete subgraph of size exactly `k`.
pub fn contains_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::new());
    }
    let order = degeneracy_order(g);
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let candidates: Vec<usize> = order.iter().rev().copied().collect();
    expand_clique(g, &mut current, candidates, &mut best, k);
    if best.len() >= k {
        Some(best.into_iter().take(k).collect())
    } else {
        None
    }
}

/// Vertex order produced by repeatedly removing a minimum-degree vertex.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

fn expand_clique(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    best: &mut Vec<usize>,
    target: usize,
) {
    if best.len() >= target {
        return;
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring bound: candidates colored sequentially; a clique can use
    // at most one vertex per color class.
    let mut color_of = vec![0usize; candidates.len()];
    let mut num_colors = 0;
    for (i, &v) in candidates.iter().enumerate() {
        let mut used = vec![false; num_colors + 1];
        for (j, &u) in candidates.iter().enumerate().take(i) {
            if g.has_edge(u, v) {
                used[color_of[j]] = true;
            }
        }
        let c = (0..).find(|&c| c >= used.len() || !used[c]).unwrap();
        color_of[i] = c;
        num_colors = num_colors.max(c + 1);
    }
    // Branch on candidates in descending color so the bound tightens fastest.
    let mut idx: Vec<usize> = (0..candidates.len()).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(color_of[i]));
    for &i in &idx {
        if current.len() + color_of[i] < best.len() {
            return;
        }
        let v = candidates[i];
        current.push(v);
        let next: Vec<usize> = candidates
            .iter()
            .take(i)
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        expand_clique(g, current, next, best, target);
        current.pop();
        if best.len() >= target {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_extremes() {
        let k7 = Graph::complete(7);
        assert_eq!(k7.max_degree().unwrap(), 6);
        assert_eq!(k7.min_degree().unwrap(), 6);
        let empty = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(empty.max_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn induced_subgraph_of_complete() {
        let k5 = Graph::complete(5);
        let (g, map) = k5.induced_subgraph(&[0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (e, _) = k5.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.n(), 0);
    }

    #[test]
    fn induced_subgraph_preserves_adjacency() {
        let g = Graph::cycle(6).unwrap();
        let s: VertexSet = [0, 1, 2, 4].into_iter().collect();
        let (h, map) = g.induced_subgraph(&s).unwrap();
        for i in 0..h.n() {
            for j in 0..h.n() {
                assert_eq!(h.has_edge(i, j), g.has_edge(map[i], map[j]));
            }
        }
    }

    #[test]
    fn components_and_distances() {
        // two disjoint K4s
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
        }
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let c = g.component_of(&g.all_vertices(), 0).unwrap();
        assert_eq!(c, (0..4).collect::<VertexSet>());

        let g = Graph::cycle(6).unwrap();
        let s: VertexSet = [0, 1, 2, 4].into_iter().collect();
        assert_eq!(
            g.component_of(&s, 0).unwrap(),
            [0, 1, 2].into_iter().collect::<VertexSet>()
        );
        assert_eq!(
            g.component_of(&[3].into_iter().collect(), 3).unwrap(),
            [3].into_iter().collect::<VertexSet>()
        );

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.distance_within(&c5.all_vertices(), 0, 2).unwrap(), Some(2));
        assert_eq!(c5.distance_within(&c5.all_vertices(), 3, 3).unwrap(), Some(0));
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_edges.distance_within(&two_edges.all_vertices(), 0, 2).unwrap(),
            None
        );
    }

    #[test]
    fn fixture_graphs() {
        assert_eq!(Graph::complete(6).edge_count(), 15);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v).unwrap() == 2));
        assert_eq!(Graph::cycle(2), Err(GraphError::CycleTooSmall(2)));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(6)), 6);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::from_edge_list(0, &[]).unwrap()), 0);
    }

    #[test]
    fn clique_witness_is_complete() {
        let g = Graph::cycle(7).unwrap();
        let w = contains_clique(&g, 2).unwrap();
        assert_eq!(w.len(), 2);
        let v: Vec<usize> = w.into_iter().collect();
        assert!(g.has_edge(v[0], v[1]));
        assert!(contains_clique(&g, 3).is_none());
    }

    // Brute-force oracle: maximum clique by subset enumeration.
    fn brute_omega(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.len() <= best {
                continue;
            }
            if vs
                .iter()
                .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
            {
                best = vs.len();
            }
        }
        best
    }

    #[test]
    fn clique_number_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            assert_eq!(clique_number(&g), brute_omega(&g));
        }
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::cycle(9).unwrap();
        let sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }
}
