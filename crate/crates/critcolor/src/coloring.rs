//! Exact chromatic number, k-colorability with witness, criticality tests,
//! and a constructive Brooks' theorem subroutine.

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{clique_number, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("graph is complete; Brooks' theorem exception")]
    IsComplete,
    #[error("graph is an odd cycle; Brooks' theorem exception")]
    IsOddCycle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    BudgetExceeded(#[from] BudgetExceeded),
}

/// A total color assignment `vertex -> 0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn num_colors_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.assignment {
            seen[c] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.assignment.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            expected: g.n(),
            got: c.assignment.len(),
        });
    }
    Ok(g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v]))
}

/// Searches for a proper k-coloring by backtracking with saturation-degree
/// branching and clique-based pruning. Deterministic: branching ties are
/// broken by vertex index and colors are tried in ascending order, with new
/// colors introduced at most one at a time.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    k_colorable_within(g, k, &Budget::unlimited()).expect("unlimited budget")
}

pub fn k_colorable_within(
    g: &Graph,
    k: usize,
    budget: &Budget,
) -> Result<Option<Coloring>, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring {
            assignment: vec![],
            k,
        }));
    }
    if k == 0 {
        return Ok(None);
    }
    // Clique pruning: a greedy maximal clique must take pairwise distinct
    // colors, so pre-assign it (sound up to color permutation).
    let clique = greedy_clique(g);
    if clique.len() > k {
        return Ok(None);
    }
    let mut assignment = vec![usize::MAX; n];
    for (c, &v) in clique.iter().enumerate() {
        assignment[v] = c;
    }
    let mut max_used = clique.len().saturating_sub(1);
    if clique.is_empty() {
        // No edges at all: color everything 0.
        return Ok(Some(Coloring {
            assignment: vec![0; n],
            k,
        }));
    }
    let found = color_rec(g, k, &mut assignment, &mut max_used, budget)?;
    Ok(found.then_some(Coloring { assignment, k }))
}

fn color_rec(
    g: &Graph,
    k: usize,
    assignment: &mut Vec<usize>,
    max_used: &mut usize,
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    budget.check()?;
    // Saturation-degree branching, ties by vertex index.
    let mut pick: Option<(usize, usize)> = None; // (saturation, vertex)
    for v in 0..g.n() {
        if assignment[v] != usize::MAX {
            continue;
        }
        let mut seen = vec![false; k];
        let mut sat = 0;
        for &u in g.neighbors(v) {
            if assignment[u] != usize::MAX && !seen[assignment[u]] {
                seen[assignment[u]] = true;
                sat += 1;
            }
        }
        if pick.is_none_or(|(s, _)| sat > s) {
            pick = Some((sat, v));
        }
    }
    let Some((_, v)) = pick else {
        return Ok(true);
    };
    let limit = k.min(*max_used + 2);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&u| assignment[u] == c) {
            continue;
        }
        assignment[v] = c;
        let old_max = *max_used;
        *max_used = (*max_used).max(c);
        if color_rec(g, k, assignment, max_used, budget)? {
            return Ok(true);
        }
        assignment[v] = usize::MAX;
        *max_used = old_max;
    }
    Ok(false)
}

/// Greedy maximal clique grown from a maximum-degree vertex; deterministic.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 || g.edge_count() == 0 {
        return vec![];
    }
    let start = (0..n).max_by_key(|&v| (g.neighbors(v).len(), n - v)).unwrap();
    let mut clique = vec![start];
    loop {
        let next = (0..n)
            .filter(|&v| !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)))
            .max_by_key(|&v| (g.neighbors(v).len(), n - v));
        match next {
            Some(v) => clique.push(v),
            None => return clique,
        }
    }
}

/// Exact chromatic number with a witness coloring using exactly chi colors.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    chromatic_number_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn chromatic_number_within(
    g: &Graph,
    budget: &Budget,
) -> Result<(usize, Coloring), BudgetExceeded> {
    if g.n() == 0 {
        return Ok((0, Coloring { assignment: vec![], k: 0 }));
    }
    let lower = clique_number(g).max(1);
    for k in lower.. {
        budget.check()?;
        if let Some(mut c) = k_colorable_within(g, k, budget)? {
            c.k = k;
            debug_assert!(is_proper(g, &c).unwrap());
            return Ok((k, c));
        }
    }
    unreachable!("every graph is n-colorable")
}

/// The set `{v : chi(G - v) < chi(G)}`, each membership decided exactly.
pub fn critical_vertices(g: &Graph) -> VertexSet {
    critical_vertices_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn critical_vertices_within(
    g: &Graph,
    budget: &Budget,
) -> Result<VertexSet, BudgetExceeded> {
    let (chi, _) = chromatic_number_within(g, budget)?;
    let mut out = VertexSet::new();
    for v in 0..g.n() {
        let h = g.delete_vertex(v).expect("v in range");
        if chromatic_number_within(&h, budget)?.0 < chi {
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn is_critical_vertex(g: &Graph, v: usize) -> bool {
    let (chi, _) = chromatic_number(g);
    let h = g.delete_vertex(v).expect("v in range");
    chromatic_number(&h).0 < chi
}

/// True iff `g` is connected and every vertex is critical
/// (vertex-critical reading; see the harness report for the flag).
pub fn is_vertex_critical(g: &Graph) -> bool {
    is_vertex_critical_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn is_vertex_critical_within(g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
    if g.n() == 0 || !g.is_connected() {
        return Ok(false);
    }
    let (chi, _) = chromatic_number_within(g, budget)?;
    for v in 0..g.n() {
        let h = g.delete_vertex(v).expect("v in range");
        if chromatic_number_within(&h, budget)?.0 >= chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vertex-critical induced subgraph with the same chromatic number,
/// obtained by repeatedly deleting the lowest-index deletable vertex.
pub fn critical_subgraph(g: &Graph) -> Graph {
    let (chi, _) = chromatic_number(g);
    let mut cur = g.clone();
    'outer: loop {
        for v in 0..cur.n() {
            let h = cur.delete_vertex(v).expect("v in range");
            if chromatic_number(&h).0 == chi {
                cur = h;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Constructive Brooks coloring: a proper coloring with exactly
/// `max_degree(g)` colors for connected graphs that are neither complete
/// nor an odd cycle.
pub fn brooks_coloring(g: &Graph) -> Result<Coloring, ColoringError> {
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    if g.is_complete() {
        return Err(ColoringError::IsComplete);
    }
    if g.is_odd_cycle() {
        return Err(ColoringError::IsOddCycle);
    }
    let delta = g.max_degree().map_err(|_| ColoringError::IsComplete)?;
    // Connected with delta <= 1 is K1 or K2, both complete; here delta >= 2.
    let assignment = if delta == 2 {
        // Path or even cycle: 2-color by BFS parity.
        let mut colors = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        colors[0] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if colors[v] == usize::MAX {
                    colors[v] = 1 - colors[u];
                    queue.push_back(v);
                }
            }
        }
        colors
    } else {
        color_connected_with_delta(g, delta)
    };
    let c = Coloring { assignment, k: delta };
    debug_assert!(is_proper(g, &c).unwrap());
    debug_assert!(c.assignment.iter().all(|&x| x < delta));
    Ok(c)
}

/// Colors a connected non-complete graph with `delta = Delta(g) >= 3` colors.
fn color_connected_with_delta(g: &Graph, delta: usize) -> Vec<usize> {
    let n = g.n();
    // Non-regular case: greedy on reverse BFS order from a deficient vertex,
    // so every vertex except the low-degree root has an uncolored neighbor
    // when its turn comes.
    if let Some(root) = (0..n).find(|&v| g.neighbors(v).len() < delta) {
        let order = bfs_order(g, root, &g.all_vertices());
        return greedy_reverse(g, delta, &order);
    }
    // Delta-regular. A cut vertex splits the graph into pieces where it is
    // deficient; color each piece and rotate colors to agree on the cut.
    if let Some(cut) = (0..n).find(|&v| {
        let h = g.delete_vertex(v).expect("v in range");
        !h.is_connected()
    }) {
        let rest: VertexSet = (0..n).filter(|&u| u != cut).collect();
        let mut colors = vec![usize::MAX; n];
        let mut remaining = rest.clone();
        while let Some(&start) = remaining.iter().next() {
            let comp = g.component_of(&remaining, start).expect("start in range");
            for &v in &comp {
                remaining.remove(&v);
            }
            let mut piece: VertexSet = comp.clone();
            piece.insert(cut);
            let (sub, map) = g.induced_subgraph(&piece).expect("piece in range");
            let cut_local = map.iter().position(|&v| v == cut).unwrap();
            // cut is deficient inside the piece.
            let order = bfs_order(&sub, cut_local, &sub.all_vertices());
            let mut local = greedy_reverse(&sub, delta, &order);
            // Rotate so the cut vertex gets color 0 in every piece.
            let cv = local[cut_local];
            for c in local.iter_mut() {
                if *c == cv {
                    *c = 0;
                } else if *c == 0 {
                    *c = cv;
                }
            }
            for (i, &v) in map.iter().enumerate() {
                colors[v] = local[i];
            }
        }
        return colors;
    }
    // Delta-regular and 2-connected: find v with non-adjacent neighbors a, b
    // such that G - {a, b} stays connected; give a and b the same color and
    // finish greedily toward v.
    for v in 0..n {
        let ns = g.neighbors(v);
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let rest: VertexSet = (0..n).filter(|&u| u != a && u != b).collect();
                let comp = g.component_of(&rest, v).expect("v in range");
                if comp.len() != rest.len() {
                    continue;
                }
                let order = bfs_order(g, v, &rest);
                let mut full = vec![a, b];
                full.extend(order.iter().rev());
                let mut colors = vec![usize::MAX; n];
                colors[a] = 0;
                colors[b] = 0;
                for &u in full.iter().skip(2) {
                    let c = (0..delta)
                        .find(|&c| g.neighbors(u).iter().all(|&w| colors[w] != c))
                        .expect("Brooks ordering leaves a free color");
                    colors[u] = c;
                }
                return colors;
            }
        }
    }
    // Unreachable for 2-connected non-complete Delta-regular graphs with
    // Delta >= 3; fall back to the exact solver rather than panic.
    k_colorable(g, delta)
        .expect("Brooks' theorem guarantees a Delta-coloring")
        .assignment
}

fn bfs_order(g: &Graph, root: usize, within: &VertexSet) -> Vec<usize> {
    let mut order = vec![root];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if within.contains(&v) && !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    order
}

/// Greedy coloring in reverse `order` (root last).
fn greedy_reverse(g: &Graph, k: usize, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for &v in order.iter().rev() {
        let c = (0..k)
            .find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))
            .expect("greedy order leaves a free color");
        colors[v] = c;
    }
    colors
}
