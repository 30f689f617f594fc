//! Structural predicates: the high subgraph H(G), low/high degree classes,
//! Ore-degree, and hypothesis/conclusion checks for the verified statements.

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::coloring::{chromatic_number_within, is_vertex_critical_within};
use crate::graph::{clique_number, contains_clique, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph has no edges")]
    NoEdges,
    #[error(transparent)]
    BudgetExceeded(#[from] BudgetExceeded),
}

/// Per-vertex degree class relative to chi(G). `Low` means d(v) = chi - 1,
/// `High` means d(v) >= chi; `Deficient` (d < chi - 1) cannot occur in a
/// vertex-critical graph but does in arbitrary inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DegreeClass {
    Deficient,
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatementCheck {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl StatementCheck {
    pub fn violation(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

/// The subgraph induced on vertices of degree at least chi(G), together
/// with its vertex set in `g`.
pub fn high_subgraph(g: &Graph) -> (Graph, VertexSet) {
    high_subgraph_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn high_subgraph_within(
    g: &Graph,
    budget: &Budget,
) -> Result<(Graph, VertexSet), BudgetExceeded> {
    let (chi, _) = chromatic_number_within(g, budget)?;
    let high: VertexSet = (0..g.n())
        .filter(|&v| g.neighbors(v).len() >= chi)
        .collect();
    let (h, _) = g.induced_subgraph(&high).expect("high set in range");
    Ok((h, high))
}

pub fn classify(g: &Graph) -> Vec<DegreeClass> {
    let (chi, _) = crate::coloring::chromatic_number(g);
    (0..g.n())
        .map(|v| {
            let d = g.neighbors(v).len();
            if d >= chi {
                DegreeClass::High
            } else if d + 1 == chi {
                DegreeClass::Low
            } else {
                DegreeClass::Deficient
            }
        })
        .collect()
}

pub fn ore_degree_edge(g: &Graph, edge: (usize, usize)) -> usize {
    g.neighbors(edge.0).len() + g.neighbors(edge.1).len()
}

/// theta(G) = max over edges of the endpoint degree sum.
pub fn ore_degree(g: &Graph) -> Result<usize, StructureError> {
    g.edges()
        .map(|e| ore_degree_edge(g, e))
        .max()
        .ok_or(StructureError::NoEdges)
}

fn is_complete_on_chi(g: &Graph, chi: usize) -> bool {
    g.n() == chi && g.is_complete()
}

/// Theorem M: hypothesis = critical, chi >= Delta >= 6, and
/// omega(H(G)) <= floor(Delta/2) - 2; conclusion = G is K_chi.
pub fn theorem_m_check(g: &Graph) -> StatementCheck {
    theorem_m_check_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn theorem_m_check_within(
    g: &Graph,
    budget: &Budget,
) -> Result<StatementCheck, BudgetExceeded> {
    let (chi, _) = chromatic_number_within(g, budget)?;
    let conclusion = is_complete_on_chi(g, chi);
    let delta = g.max_degree().unwrap_or(0);
    // Cheap degree conditions first; criticality is the expensive clause.
    let hypothesis = chi >= delta
        && delta >= 6
        && {
            let (h, _) = high_subgraph_within(g, budget)?;
            clique_number(&h) + 2 <= delta / 2
        }
        && is_vertex_critical_within(g, budget)?;
    Ok(StatementCheck { hypothesis, conclusion })
}

/// Kierstead-Kostochka Theorem: as Theorem M but with Delta >= 7 and
/// H(G) independent.
pub fn kk_theorem_check(g: &Graph) -> StatementCheck {
    independent_high_check(g, 7, &Budget::unlimited()).expect("unlimited budget")
}

pub fn kk_theorem_check_within(
    g: &Graph,
    budget: &Budget,
) -> Result<StatementCheck, BudgetExceeded> {
    independent_high_check(g, 7, budget)
}

/// Corollary N: as the KK Theorem with Delta >= 6.
pub fn corollary_n_check(g: &Graph) -> StatementCheck {
    independent_high_check(g, 6, &Budget::unlimited()).expect("unlimited budget")
}

pub fn corollary_n_check_within(
    g: &Graph,
    budget: &Budget,
) -> Result<StatementCheck, BudgetExceeded> {
    independent_high_check(g, 6, budget)
}

fn independent_high_check(
    g: &Graph,
    min_delta: usize,
    budget: &Budget,
) -> Result<StatementCheck, BudgetExceeded> {
    let (chi, _) = chromatic_number_within(g, budget)?;
    let conclusion = is_complete_on_chi(g, chi);
    let delta = g.max_degree().unwrap_or(0);
    let hypothesis = chi >= delta
        && delta >= min_delta
        && {
            let (h, _) = high_subgraph_within(g, budget)?;
            h.edge_count() == 0
        }
        && is_vertex_critical_within(g, budget)?;
    Ok(StatementCheck { hypothesis, conclusion })
}

/// Corollary O: hypothesis = 6 <= chi = floor(theta/2) + 1;
/// conclusion = G contains K_chi.
pub fn corollary_o_check(g: &Graph) -> Result<StatementCheck, StructureError> {
    corollary_o_check_within(g, &Budget::unlimited())
}

pub fn corollary_o_check_within(
    g: &Graph,
    budget: &Budget,
) -> Result<StatementCheck, StructureError> {
    let theta = ore_degree(g)?;
    let (chi, _) = chromatic_number_within(g, budget)?;
    let hypothesis = chi >= 6 && chi == theta / 2 + 1;
    let conclusion = contains_clique(g, chi).is_some();
    Ok(StatementCheck { hypothesis, conclusion })
}
