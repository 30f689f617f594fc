//! Partitioned colorings with the internal-edge objective, Z-components,
//! generalized Kempe-chain recoloring, swaps, and structure verification.

mod search;
mod walk;

pub use search::{find_minimal_form_coloring, find_minimal_partitioned_coloring, SearchMode};
pub use walk::{mozhan_walk, mozhan_walk_within, WalkOutcome, WalkStep, WalkTrace};

use serde::Serialize;
use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::coloring::{is_proper, Coloring};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MozhanError {
    #[error("invalid partitioned coloring: {0}")]
    InvalidColoring(String),
    #[error("scheme wants {scheme_colors} colors but chi = {chi}")]
    SchemeMismatch { scheme_colors: usize, chi: usize },
    #[error("no proper coloring of the required form exists for this singleton")]
    NotColorableInForm,
    #[error("search budget exhausted")]
    Timeout,
    #[error("group index {index} out of range for {groups} groups")]
    BadGroupIndex { index: usize, groups: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("vertex {0} is not in the singleton's Z-component")]
    NotInComponent(usize),
    #[error("vertex {vertex} has Z-component degree {degree}, expected {expected}")]
    DegreeConditionFails {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("recoloring produced an improper coloring")]
    ImproperResult,
    #[error("initial minimal coloring not found: {0}")]
    InitialColoringNotFound(String),
}

impl From<BudgetExceeded> for MozhanError {
    fn from(_: BudgetExceeded) -> Self {
        MozhanError::Timeout
    }
}

/// Group sizes (r_1, ..., r_a) structuring the non-singleton color classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionScheme {
    group_sizes: Vec<usize>,
}

impl PartitionScheme {
    pub fn new(group_sizes: Vec<usize>) -> PartitionScheme {
        assert!(
            !group_sizes.is_empty() && group_sizes.iter().all(|&r| r >= 1),
            "group sizes must be positive"
        );
        PartitionScheme { group_sizes }
    }

    /// The two-group scheme (floor((Delta-1)/2), ceil((Delta-1)/2)).
    pub fn theorem_m(delta: usize) -> PartitionScheme {
        let r1 = (delta - 1) / 2;
        let r2 = delta - 1 - r1;
        PartitionScheme::new(vec![r1, r2])
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    pub fn num_groups(&self) -> usize {
        self.group_sizes.len()
    }

    pub fn group_size(&self, i: usize) -> usize {
        self.group_sizes[i]
    }

    /// Total colors including the singleton's (color 0).
    pub fn num_colors(&self) -> usize {
        1 + self.group_sizes.iter().sum::<usize>()
    }

    /// Half-open color range of group `i`; color 0 is the singleton's.
    pub fn colors_of_group(&self, i: usize) -> std::ops::Range<usize> {
        let lo = 1 + self.group_sizes[..i].iter().sum::<usize>();
        lo..lo + self.group_sizes[i]
    }

    /// Group owning color `c`, or `None` for the singleton color 0.
    pub fn group_of_color(&self, c: usize) -> Option<usize> {
        if c == 0 || c >= self.num_colors() {
            return None;
        }
        (0..self.num_groups()).find(|&i| self.colors_of_group(i).contains(&c))
    }
}

/// A proper coloring of the form {x}, L_11..L_1r1, L_21..L_2r2, ...
/// Color 0 is reserved for the singleton class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionedColoring {
    scheme: PartitionScheme,
    singleton: usize,
    assignment: Vec<usize>,
}

impl PartitionedColoring {
    /// Wraps a color assignment after validating properness and form.
    pub fn from_assignment(
        g: &Graph,
        scheme: PartitionScheme,
        singleton: usize,
        assignment: Vec<usize>,
    ) -> Result<PartitionedColoring, MozhanError> {
        let pc = PartitionedColoring {
            scheme,
            singleton,
            assignment,
        };
        pc.validate(g)?;
        Ok(pc)
    }

    /// Reinterprets a plain coloring in partitioned form: the singleton's
    /// color maps to 0 and the remaining colors keep their relative order.
    pub fn from_coloring(
        g: &Graph,
        scheme: PartitionScheme,
        singleton: usize,
        coloring: &Coloring,
    ) -> Result<PartitionedColoring, MozhanError> {
        if coloring.assignment.len() != g.n() {
            return Err(MozhanError::InvalidColoring("size mismatch".into()));
        }
        let sc = coloring.assignment[singleton];
        let remap = |c: usize| -> usize {
            if c == sc {
                0
            } else if c < sc {
                c + 1
            } else {
                c
            }
        };
        let assignment = coloring.assignment.iter().map(|&c| remap(c)).collect();
        PartitionedColoring::from_assignment(g, scheme, singleton, assignment)
    }

    fn validate(&self, g: &Graph) -> Result<(), MozhanError> {
        if self.assignment.len() != g.n() {
            return Err(MozhanError::InvalidColoring("size mismatch".into()));
        }
        let k = self.scheme.num_colors();
        if self.assignment.iter().any(|&c| c >= k) {
            return Err(MozhanError::InvalidColoring("color out of range".into()));
        }
        if self.assignment[self.singleton] != 0 {
            return Err(MozhanError::InvalidColoring(
                "singleton not colored 0".into(),
            ));
        }
        if self
            .assignment
            .iter()
            .enumerate()
            .any(|(v, &c)| c == 0 && v != self.singleton)
        {
            return Err(MozhanError::InvalidColoring(
                "singleton class not a singleton".into(),
            ));
        }
        if !is_proper(g, &self.to_coloring()).expect("sizes checked") {
            return Err(MozhanError::InvalidColoring("not proper".into()));
        }
        Ok(())
    }

    pub fn scheme(&self) -> &PartitionScheme {
        &self.scheme
    }

    pub fn singleton(&self) -> usize {
        self.singleton
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// U_i: the vertices colored by group `i`.
    pub fn group_vertices(&self, i: usize) -> VertexSet {
        let range = self.scheme.colors_of_group(i);
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, c)| range.contains(c))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn class_vertices(&self, color: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn to_coloring(&self) -> Coloring {
        Coloring {
            assignment: self.assignment.clone(),
            k: self.scheme.num_colors(),
        }
    }
}

/// The objective of Lemma 1: the number of edges inside the group unions,
/// `sum_i |E(G[U_i])|`.
pub fn internal_edges(g: &Graph, pc: &PartitionedColoring) -> Result<usize, MozhanError> {
    pc.validate(g)?;
    Ok(internal_edges_unchecked(g, pc))
}

pub(crate) fn internal_edges_unchecked(g: &Graph, pc: &PartitionedColoring) -> usize {
    let scheme = pc.scheme();
    g.edges()
        .filter(|&(u, v)| {
            let (cu, cv) = (pc.color(u), pc.color(v));
            match (scheme.group_of_color(cu), scheme.group_of_color(cv)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        })
        .count()
}

/// Z_i(v): the connected component of `v` in G[{v} union U_i].
/// `v` must not itself be colored by group `i`.
pub fn z_component(
    g: &Graph,
    pc: &PartitionedColoring,
    v: usize,
    i: usize,
) -> Result<VertexSet, MozhanError> {
    if i >= pc.scheme().num_groups() {
        return Err(MozhanError::BadGroupIndex {
            index: i,
            groups: pc.scheme().num_groups(),
        });
    }
    if pc.scheme().group_of_color(pc.color(v)) == Some(i) {
        return Err(MozhanError::PreconditionViolated(format!(
            "vertex {v} is colored inside group {i}"
        )));
    }
    let mut s = pc.group_vertices(i);
    s.insert(v);
    Ok(g.component_of(&s, v).expect("vertices in range"))
}

/// Cyclic color shift along a path inside the singleton's Z-component:
/// x_k takes the color of x_{k+1} and the last vertex takes the color of
/// the first. All changed colors stay within group `i`.
pub fn kempe_path_recolor(
    g: &Graph,
    pc: &PartitionedColoring,
    path: &[usize],
    i: usize,
) -> Result<PartitionedColoring, MozhanError> {
    if i >= pc.scheme().num_groups() {
        return Err(MozhanError::BadGroupIndex {
            index: i,
            groups: pc.scheme().num_groups(),
        });
    }
    if path.is_empty() {
        return Err(MozhanError::PreconditionViolated("empty path".into()));
    }
    let z = z_component(g, pc, pc.singleton(), i)?;
    let group_colors = pc.scheme().colors_of_group(i);
    for &v in path {
        if v == pc.singleton() || !z.contains(&v) || !group_colors.contains(&pc.color(v)) {
            return Err(MozhanError::PreconditionViolated(format!(
                "path vertex {v} does not lie in Z_{i} of the singleton"
            )));
        }
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(MozhanError::PreconditionViolated(format!(
                "path vertices {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    let mut seen = VertexSet::new();
    if !path.iter().all(|&v| seen.insert(v)) {
        return Err(MozhanError::PreconditionViolated(
            "path repeats a vertex".into(),
        ));
    }
    // Every shifted vertex must hit exactly one vertex of each class of
    // group i besides its own.
    let t = path.len();
    for &v in &path[..t - 1] {
        for c in group_colors.clone() {
            if c == pc.color(v) {
                continue;
            }
            let hits = g.neighbors(v).iter().filter(|&&u| pc.color(u) == c).count();
            if hits != 1 {
                return Err(MozhanError::PreconditionViolated(format!(
                    "vertex {v} hits {hits} vertices of color class {c}"
                )));
            }
        }
    }
    let mut assignment = pc.assignment().to_vec();
    let first_color = pc.color(path[0]);
    for k in 0..t - 1 {
        assignment[path[k]] = pc.color(path[k + 1]);
    }
    assignment[path[t - 1]] = first_color;
    PartitionedColoring::from_assignment(g, pc.scheme().clone(), pc.singleton(), assignment)
        .map_err(|_| MozhanError::ImproperResult)
}

/// Swaps the singleton x with `y` in Z_i(x): x takes y's color and y becomes
/// the singleton. Both degree conditions d_{Z_i(x)}(x) = d_{Z_i(x)}(y) = r_i
/// are enforced, which makes the internal-edge objective invariant.
pub fn swap(
    g: &Graph,
    pc: &PartitionedColoring,
    y: usize,
) -> Result<PartitionedColoring, MozhanError> {
    let x = pc.singleton();
    let i = pc
        .scheme()
        .group_of_color(pc.color(y))
        .ok_or(MozhanError::NotInComponent(y))?;
    let z = z_component(g, pc, x, i)?;
    if y == x || !z.contains(&y) {
        return Err(MozhanError::NotInComponent(y));
    }
    let r = pc.scheme().group_size(i);
    let dx = g.neighbors(x).iter().filter(|&&u| z.contains(&u)).count();
    if dx != r {
        return Err(MozhanError::DegreeConditionFails {
            vertex: x,
            degree: dx,
            expected: r,
        });
    }
    let dy = g.neighbors(y).iter().filter(|&&u| z.contains(&u)).count();
    if dy != r {
        return Err(MozhanError::DegreeConditionFails {
            vertex: y,
            degree: dy,
            expected: r,
        });
    }
    let mut assignment = pc.assignment().to_vec();
    assignment[x] = pc.color(y);
    assignment[y] = 0;
    let swapped =
        PartitionedColoring::from_assignment(g, pc.scheme().clone(), y, assignment)
            .map_err(|_| MozhanError::ImproperResult)?;
    debug_assert_eq!(
        internal_edges_unchecked(g, pc),
        internal_edges_unchecked(g, &swapped)
    );
    Ok(swapped)
}

/// How the coloring handed to [`verify_lemma1`] was obtained. Only the
/// global exact minimum certifies the lemma's hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Exact minimum over all form-colorings (singleton free).
    ExactGlobal,
    /// Exact minimum among form-colorings with a fixed singleton.
    ExactSingleton,
    LocalSearch,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1GroupOutcome {
    pub group: usize,
    pub r: usize,
    pub singleton_degree: usize,
    /// True when d_{Z_i(x)}(x) = r_i, i.e. the lemma's conclusion applies.
    pub applicable: bool,
    pub z_size: usize,
    pub expected_shape: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Report {
    pub groups: Vec<Lemma1GroupOutcome>,
    pub pass: bool,
    /// Set when the coloring's minimality is not globally certified.
    pub advisory: bool,
}

/// Checks Lemma 1's conclusion on each group where d_{Z_i(x)}(x) = r_i:
/// Z_i(x) must induce a complete graph (r_i != 2) or an odd cycle (r_i = 2).
pub fn verify_lemma1(
    g: &Graph,
    pc: &PartitionedColoring,
    x: usize,
    provenance: Provenance,
) -> Result<Lemma1Report, MozhanError> {
    if x != pc.singleton() {
        return Err(MozhanError::PreconditionViolated(format!(
            "x = {x} is not the singleton of the coloring"
        )));
    }
    pc.validate(g)?;
    let mut groups = Vec::new();
    for i in 0..pc.scheme().num_groups() {
        let r = pc.scheme().group_size(i);
        let z = z_component(g, pc, x, i)?;
        let d = g.neighbors(x).iter().filter(|&&u| z.contains(&u)).count();
        let applicable = d == r;
        let (expected_shape, ok) = if !applicable {
            (None, true)
        } else {
            let (zg, _) = g.induced_subgraph(&z).expect("z in range");
            if r == 2 {
                (Some("odd cycle".to_string()), zg.is_odd_cycle())
            } else {
                (Some("complete".to_string()), zg.is_complete())
            }
        };
        groups.push(Lemma1GroupOutcome {
            group: i,
            r,
            singleton_degree: d,
            applicable,
            z_size: z.len(),
            expected_shape,
            ok,
        });
    }
    let pass = groups.iter().all(|o| o.ok);
    Ok(Lemma1Report {
        groups,
        pass,
        advisory: provenance != Provenance::ExactGlobal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_color_layout() {
        let s = PartitionScheme::new(vec![2, 3]);
        assert_eq!(s.num_colors(), 6);
        assert_eq!(s.colors_of_group(0), 1..3);
        assert_eq!(s.colors_of_group(1), 3..6);
        assert_eq!(s.group_of_color(0), None);
        assert_eq!(s.group_of_color(2), Some(0));
        assert_eq!(s.group_of_color(5), Some(1));
        assert_eq!(s.group_of_color(6), None);
        assert_eq!(PartitionScheme::theorem_m(5).group_sizes(), &[2, 2]);
        assert_eq!(PartitionScheme::theorem_m(6).group_sizes(), &[2, 3]);
    }

    fn k4_partitioned() -> (Graph, PartitionedColoring) {
        let g = Graph::complete(4);
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![1, 2]),
            0,
            vec![0, 1, 2, 3],
        )
        .unwrap();
        (g, pc)
    }

    #[test]
    fn internal_edges_on_k4() {
        let (g, pc) = k4_partitioned();
        // U1 = {1} (0 edges), U2 = {2,3} joined (1 edge)
        assert_eq!(internal_edges(&g, &pc).unwrap(), 1);
    }

    #[test]
    fn internal_edges_zero_when_groups_independent() {
        // Star: the leaves form an independent U_1.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 1, 1, 2],
        )
        .unwrap();
        assert_eq!(internal_edges(&g, &pc).unwrap(), 0);
    }

    #[test]
    fn invalid_colorings_rejected() {
        let g = Graph::complete(3);
        // monochromatic edge
        assert!(PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 1, 1],
        )
        .is_err());
        // two vertices with the singleton color
        assert!(PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 0, 1],
        )
        .is_err());
    }

    #[test]
    fn z_component_on_complete_graph() {
        let g = Graph::complete(6);
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2, 3]),
            0,
            vec![0, 1, 2, 3, 4, 5],
        )
        .unwrap();
        let z = z_component(&g, &pc, 0, 1).unwrap();
        assert_eq!(z, [0, 3, 4, 5].into_iter().collect());
        assert!(matches!(
            z_component(&g, &pc, 0, 2),
            Err(MozhanError::BadGroupIndex { .. })
        ));
        // a vertex with no neighbor in the group is its own component
        let h = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        let pc = PartitionedColoring::from_assignment(
            &h,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 1, 2],
        )
        .unwrap();
        assert_eq!(
            z_component(&h, &pc, 0, 0).unwrap(),
            [0].into_iter().collect()
        );
    }

    #[test]
    fn kempe_identity_path() {
        let (g, pc) = k4_partitioned();
        let out = kempe_path_recolor(&g, &pc, &[2], 1).unwrap();
        assert_eq!(out.assignment(), pc.assignment());
    }

    #[test]
    fn kempe_two_path_shifts_colors() {
        let (g, pc) = k4_partitioned();
        let out = kempe_path_recolor(&g, &pc, &[2, 3], 1).unwrap();
        assert_eq!(out.color(2), 3);
        assert_eq!(out.color(3), 2);
        assert_eq!(internal_edges(&g, &out).unwrap(), 1);
    }

    #[test]
    fn kempe_rejects_double_hit() {
        // Vertex 1 hits three vertices (2, 3, 4) of the other class.
        let g = Graph::from_edge_list(5, &[(0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 1, 2, 2, 2],
        )
        .unwrap();
        assert!(matches!(
            kempe_path_recolor(&g, &pc, &[1, 4], 0),
            Err(MozhanError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn swap_on_k6_preserves_objective() {
        let g = Graph::complete(6);
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2, 3]),
            0,
            vec![0, 1, 2, 3, 4, 5],
        )
        .unwrap();
        let before = internal_edges(&g, &pc).unwrap();
        assert_eq!(before, 1 + 3);
        for y in [3, 4, 5] {
            let out = swap(&g, &pc, y).unwrap();
            assert_eq!(out.singleton(), y);
            assert_eq!(out.color(0), pc.color(y));
            assert_eq!(internal_edges(&g, &out).unwrap(), before);
        }
    }

    #[test]
    fn swap_rejects_disconnected_target() {
        // y's class vertex unreachable from x inside the group.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2]),
            0,
            vec![0, 1, 2, 1, 2],
        )
        .unwrap();
        assert!(matches!(swap(&g, &pc, 3), Err(MozhanError::NotInComponent(3))));
    }

    #[test]
    fn verify_lemma1_on_k6() {
        let g = Graph::complete(6);
        let pc = PartitionedColoring::from_assignment(
            &g,
            PartitionScheme::new(vec![2, 3]),
            0,
            vec![0, 1, 2, 3, 4, 5],
        )
        .unwrap();
        let report = verify_lemma1(&g, &pc, 0, Provenance::ExactGlobal).unwrap();
        assert!(report.pass);
        assert!(!report.advisory);
        assert!(report.groups[1].applicable);
        assert_eq!(report.groups[1].z_size, 4);
        assert_eq!(report.groups[1].expected_shape.as_deref(), Some("complete"));
    }
}
