//! The counter-driven walk of swaps alternating between the two groups.

use serde::Serialize;

use crate::budget::Budget;
use crate::coloring::chromatic_number_within;
use crate::graph::Graph;

use super::search::{find_minimal_partitioned_coloring_within, SearchMode};
use super::{swap, z_component, MozhanError, PartitionScheme};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WalkOutcome {
    /// First step index at which parity 2 held and some low vertex of the
    /// active Z-component had counter exactly 1.
    StopConditionMet { step: usize, witness: usize },
    StepCapExceeded,
    NoEligibleVertex { step: usize },
    /// A swap precondition failed; the walk does not attempt repairs.
    FormBroken { step: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkStep {
    pub index: usize,
    /// The parity counter p_i: 1 when the index is odd, 2 when even.
    pub parity: usize,
    pub singleton: usize,
    pub chosen: usize,
    pub q_of_chosen: usize,
    pub distance_in_component: usize,
    /// Index into `snapshots` of the coloring after this step's swap.
    pub snapshot: usize,
}

/// Full record of one walk run. Snapshot 0 is the initial minimal coloring;
/// every snapshot is a proper coloring of the same partitioned form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkTrace {
    pub scheme: PartitionScheme,
    pub mode: String,
    pub start: usize,
    pub max_steps: usize,
    /// True when Delta = 5, below the theorem's Delta >= 6 range.
    pub relaxed_range: bool,
    pub steps: Vec<WalkStep>,
    pub snapshots: Vec<Vec<usize>>,
    pub q_final: Vec<usize>,
    pub q_excursion: usize,
    pub outcome: WalkOutcome,
}

/// Runs the walk from low vertex `x` on a graph with chi = Delta >= 5:
/// repeatedly pick the low vertex of the active Z-component minimizing
/// (counter, component distance, index), swap it with the singleton, and
/// bump the old singleton's counter.
pub fn mozhan_walk(
    g: &Graph,
    x: usize,
    max_steps: usize,
    mode: SearchMode,
) -> Result<WalkTrace, MozhanError> {
    mozhan_walk_within(g, x, max_steps, mode, &Budget::unlimited())
}

pub fn mozhan_walk_within(
    g: &Graph,
    x: usize,
    max_steps: usize,
    mode: SearchMode,
    budget: &Budget,
) -> Result<WalkTrace, MozhanError> {
    if x >= g.n() {
        return Err(MozhanError::PreconditionViolated(format!(
            "start vertex {x} out of range"
        )));
    }
    let (chi, _) = chromatic_number_within(g, budget)?;
    let delta = g
        .max_degree()
        .map_err(|_| MozhanError::PreconditionViolated("empty graph".into()))?;
    if chi != delta {
        return Err(MozhanError::PreconditionViolated(format!(
            "walk requires chi = Delta, got chi = {chi}, Delta = {delta}"
        )));
    }
    if delta < 5 {
        return Err(MozhanError::PreconditionViolated(format!(
            "scheme groups must both have size >= 2, needs Delta >= 5, got {delta}"
        )));
    }
    let low_degree = chi - 1;
    if g.neighbors(x).len() != low_degree {
        return Err(MozhanError::PreconditionViolated(format!(
            "start vertex {x} is not low (degree {}, low means {low_degree})",
            g.neighbors(x).len()
        )));
    }
    let scheme = PartitionScheme::theorem_m(delta);
    let initial = find_minimal_partitioned_coloring_within(g, &scheme, x, mode, budget)
        .map_err(|e| MozhanError::InitialColoringNotFound(e.to_string()))?;

    let is_low: Vec<bool> = (0..g.n())
        .map(|v| g.neighbors(v).len() == low_degree)
        .collect();
    let mut q = vec![0usize; g.n()];
    let mut pc = initial;
    let mut current = x;
    let mut steps = Vec::new();
    let mut snapshots = vec![pc.assignment().to_vec()];
    let mut outcome = None;

    for i in 0..max_steps {
        budget.check().map_err(|_| MozhanError::Timeout)?;
        // p_i = 1 (group 0) when i is odd, p_i = 2 (group 1) when even.
        let (parity, group) = if i % 2 == 1 { (1, 0) } else { (2, 1) };
        let z = z_component(g, &pc, current, group)?;
        let candidates: Vec<usize> = z
            .iter()
            .copied()
            .filter(|&v| v != current && is_low[v])
            .collect();
        if parity == 2 {
            if let Some(&witness) = candidates.iter().find(|&&v| q[v] == 1) {
                outcome = Some(WalkOutcome::StopConditionMet { step: i, witness });
                break;
            }
        }
        if candidates.is_empty() {
            outcome = Some(WalkOutcome::NoEligibleVertex { step: i });
            break;
        }
        let chosen = candidates
            .iter()
            .copied()
            .min_by_key(|&v| {
                let d = g
                    .distance_within(&z, current, v)
                    .expect("vertices in range")
                    .expect("candidate lies in the component");
                (q[v], d, v)
            })
            .expect("candidates nonempty");
        let distance = g
            .distance_within(&z, current, chosen)
            .expect("vertices in range")
            .expect("chosen lies in the component");
        match swap(g, &pc, chosen) {
            Ok(next) => {
                q[current] = q[chosen] + 1;
                snapshots.push(next.assignment().to_vec());
                steps.push(WalkStep {
                    index: i,
                    parity,
                    singleton: current,
                    chosen,
                    q_of_chosen: q[chosen],
                    distance_in_component: distance,
                    snapshot: snapshots.len() - 1,
                });
                pc = next;
                current = chosen;
            }
            Err(e) => {
                outcome = Some(WalkOutcome::FormBroken {
                    step: i,
                    reason: e.to_string(),
                });
                break;
            }
        }
    }

    Ok(WalkTrace {
        scheme,
        mode: match mode {
            SearchMode::Exact => "exact".to_string(),
            SearchMode::LocalSearch { .. } => "local".to_string(),
        },
        start: x,
        max_steps,
        relaxed_range: delta == 5,
        steps,
        snapshots,
        q_excursion: q.iter().copied().max().unwrap_or(0),
        q_final: q,
        outcome: outcome.unwrap_or(WalkOutcome::StepCapExceeded),
    })
}
