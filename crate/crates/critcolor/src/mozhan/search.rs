//! Search for minimal partitioned colorings: exact enumeration for desk-size
//! graphs and a descent-based local search for anything larger.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::coloring::{chromatic_number_within, k_colorable_within};
use crate::graph::Graph;

use super::{
    internal_edges_unchecked, kempe_path_recolor, z_component, MozhanError, PartitionScheme,
    PartitionedColoring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Global minimizer over all form-colorings with the given singleton,
    /// by pruned backtracking enumeration. Intended for n <= ~12.
    Exact,
    /// Descent over single-vertex class reassignments plus seeded Kempe
    /// plateau kicks; the result is not certified minimal.
    LocalSearch { seed: u64 },
}

/// A minimal coloring of the form {x}, L_11, ..., L_ar_a for the fixed
/// singleton `x`. Requires chi(G) = 1 + sum r_i; a form-coloring with
/// singleton x exists iff x is a critical vertex.
pub fn find_minimal_partitioned_coloring(
    g: &Graph,
    scheme: &PartitionScheme,
    x: usize,
    mode: SearchMode,
) -> Result<PartitionedColoring, MozhanError> {
    find_minimal_partitioned_coloring_within(g, scheme, x, mode, &Budget::unlimited())
}

pub fn find_minimal_partitioned_coloring_within(
    g: &Graph,
    scheme: &PartitionScheme,
    x: usize,
    mode: SearchMode,
    budget: &Budget,
) -> Result<PartitionedColoring, MozhanError> {
    if x >= g.n() {
        return Err(MozhanError::PreconditionViolated(format!(
            "singleton {x} out of range"
        )));
    }
    check_scheme(g, scheme, budget)?;
    match mode {
        SearchMode::Exact => {
            let found = ExactSearch::new(g, scheme, x, budget).run(usize::MAX)?;
            let (_, assignment) = found.ok_or(MozhanError::NotColorableInForm)?;
            PartitionedColoring::from_assignment(g, scheme.clone(), x, assignment)
        }
        SearchMode::LocalSearch { seed } => local_search(g, scheme, x, seed, budget),
    }
}

/// Minimal coloring in the strong sense: exact minimum of the internal-edge
/// objective over all form-colorings, with the singleton free. Ties go to
/// the lowest singleton, then to backtracking order.
pub fn find_minimal_form_coloring(
    g: &Graph,
    scheme: &PartitionScheme,
) -> Result<PartitionedColoring, MozhanError> {
    find_minimal_form_coloring_within(g, scheme, &Budget::unlimited())
}

pub fn find_minimal_form_coloring_within(
    g: &Graph,
    scheme: &PartitionScheme,
    budget: &Budget,
) -> Result<PartitionedColoring, MozhanError> {
    check_scheme(g, scheme, budget)?;
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for x in 0..g.n() {
        let bound = best.as_ref().map_or(usize::MAX, |(obj, _, _)| *obj);
        if let Some((obj, assignment)) = ExactSearch::new(g, scheme, x, budget).run(bound)? {
            best = Some((obj, x, assignment));
        }
    }
    let (_, x, assignment) = best.ok_or(MozhanError::NotColorableInForm)?;
    PartitionedColoring::from_assignment(g, scheme.clone(), x, assignment)
}

fn check_scheme(g: &Graph, scheme: &PartitionScheme, budget: &Budget) -> Result<(), MozhanError> {
    let (chi, _) = chromatic_number_within(g, budget)?;
    if scheme.num_colors() != chi {
        return Err(MozhanError::SchemeMismatch {
            scheme_colors: scheme.num_colors(),
            chi,
        });
    }
    Ok(())
}

struct ExactSearch<'a> {
    g: &'a Graph,
    scheme: &'a PartitionScheme,
    order: Vec<usize>,
    group_of_color: Vec<Option<usize>>,
    assignment: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
    bound: usize,
    budget: &'a Budget,
}

impl<'a> ExactSearch<'a> {
    fn new(g: &'a Graph, scheme: &'a PartitionScheme, x: usize, budget: &'a Budget) -> Self {
        let mut assignment = vec![usize::MAX; g.n()];
        assignment[x] = 0;
        // Branch on high-degree vertices first; deterministic tie-break.
        let mut order: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
        let group_of_color = (0..scheme.num_colors())
            .map(|c| scheme.group_of_color(c))
            .collect();
        ExactSearch {
            g,
            scheme,
            order,
            group_of_color,
            assignment,
            best: None,
            bound: usize::MAX,
            budget,
        }
    }

    /// Best (objective, assignment) strictly below `bound`, if any.
    fn run(mut self, bound: usize) -> Result<Option<(usize, Vec<usize>)>, MozhanError> {
        self.bound = bound;
        self.recurse(0, 0)?;
        Ok(self.best)
    }

    fn recurse(&mut self, pos: usize, obj: usize) -> Result<(), MozhanError> {
        self.budget.check().map_err(|_| MozhanError::Timeout)?;
        if obj >= self.bound {
            return Ok(());
        }
        if pos == self.order.len() {
            self.bound = obj;
            self.best = Some((obj, self.assignment.clone()));
            return Ok(());
        }
        let v = self.order[pos];
        'colors: for c in 1..self.scheme.num_colors() {
            let grp = self.group_of_color[c].expect("non-singleton color");
            let mut added = 0;
            for &u in self.g.neighbors(v) {
                let cu = self.assignment[u];
                if cu == usize::MAX {
                    continue;
                }
                if cu == c {
                    continue 'colors;
                }
                if self.group_of_color[cu] == Some(grp) {
                    added += 1;
                }
            }
            self.assignment[v] = c;
            self.recurse(pos + 1, obj + added)?;
            self.assignment[v] = usize::MAX;
        }
        Ok(())
    }
}

fn local_search(
    g: &Graph,
    scheme: &PartitionScheme,
    x: usize,
    seed: u64,
    budget: &Budget,
) -> Result<PartitionedColoring, MozhanError> {
    let n = g.n();
    let k = scheme.num_colors();
    let h = g.delete_vertex(x).expect("x in range");
    let base = k_colorable_within(&h, k - 1, budget)?.ok_or(MozhanError::NotColorableInForm)?;
    let mut assignment = vec![0usize; n];
    for (v, slot) in assignment.iter_mut().enumerate() {
        if v != x {
            let local = if v < x { v } else { v - 1 };
            *slot = base.assignment[local] + 1;
        }
    }
    let mut pc = PartitionedColoring::from_assignment(g, scheme.clone(), x, assignment)?;
    descend(g, &mut pc, budget)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut obj = internal_edges_unchecked(g, &pc);
    for _ in 0..3 * n {
        budget.check().map_err(|_| MozhanError::Timeout)?;
        let Some(kicked) = random_kempe_kick(g, &pc, &mut rng) else {
            continue;
        };
        let mut trial = kicked;
        descend(g, &mut trial, budget)?;
        let trial_obj = internal_edges_unchecked(g, &trial);
        if trial_obj < obj {
            obj = trial_obj;
            pc = trial;
        }
    }
    Ok(pc)
}

/// First-improvement descent over single-vertex class reassignments.
fn descend(g: &Graph, pc: &mut PartitionedColoring, budget: &Budget) -> Result<(), MozhanError> {
    let scheme = pc.scheme().clone();
    let k = scheme.num_colors();
    let x = pc.singleton();
    'outer: loop {
        budget.check().map_err(|_| MozhanError::Timeout)?;
        for v in 0..g.n() {
            if v == x {
                continue;
            }
            let cur = pc.color(v);
            let cur_grp = scheme.group_of_color(cur).expect("non-singleton");
            let in_group = |grp: usize| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&u| scheme.group_of_color(pc.color(u)) == Some(grp))
                    .count()
            };
            let lost = in_group(cur_grp);
            for c in 1..k {
                if c == cur || g.neighbors(v).iter().any(|&u| pc.color(u) == c) {
                    continue;
                }
                let grp = scheme.group_of_color(c).expect("non-singleton");
                if grp == cur_grp {
                    continue;
                }
                if in_group(grp) < lost {
                    let mut assignment = pc.assignment().to_vec();
                    assignment[v] = c;
                    *pc = PartitionedColoring::from_assignment(g, scheme.clone(), x, assignment)
                        .expect("reassignment keeps the form");
                    continue 'outer;
                }
            }
        }
        return Ok(());
    }
}

/// One random objective-neutral Kempe 2-path shift inside a Z-component.
fn random_kempe_kick(
    g: &Graph,
    pc: &PartitionedColoring,
    rng: &mut ChaCha8Rng,
) -> Option<PartitionedColoring> {
    let x = pc.singleton();
    for _ in 0..10 {
        let i = rng.gen_range(0..pc.scheme().num_groups());
        let z = z_component(g, pc, x, i).expect("group index valid");
        let candidates: Vec<usize> = z.iter().copied().filter(|&v| v != x).collect();
        if candidates.is_empty() {
            continue;
        }
        let u = candidates[rng.gen_range(0..candidates.len())];
        let nexts: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != x && z.contains(&w))
            .collect();
        if nexts.is_empty() {
            continue;
        }
        let w = nexts[rng.gen_range(0..nexts.len())];
        if let Ok(out) = kempe_path_recolor(g, pc, &[u, w], i) {
            return Some(out);
        }
    }
    None
}
