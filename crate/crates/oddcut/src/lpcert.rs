//! Exact-rational verification of odd-path-cover LP certificates.
//!
//! The primal program puts a weight on every edge and demands total weight at
//! least one on every odd `s -> t` path; the dual packs flow on odd paths
//! subject to edge capacities. This module checks feasibility of both sides,
//! proves joint optimality via weak duality (equal objectives), and certifies
//! extreme points by an exact rank computation over the tight constraints.
//! No LP is ever solved from scratch.
//!
//! Edge bundles of multiplicity m contribute m distinct LP variables; the
//! variable order follows the edge list, copies consecutive.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::{Dag, Graph, NodeId, Path, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    NotOddPath { path: Path },
    PathNotTight { path: Path, total: Rational },
    InfeasibleCertificate,
    NegativeValue { index: usize },
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError::NotOddPath { path } => {
                write!(f, "not a simple odd s->t path: {}", path)
            }
            CertError::PathNotTight { path, total } => {
                write!(f, "path constraint not tight (total {}): {}", total, path)
            }
            CertError::InfeasibleCertificate => write!(f, "certificate is not feasible"),
            CertError::NegativeValue { index } => {
                write!(f, "negative value at variable {}", index)
            }
            CertError::LengthMismatch { expected, got } => {
                write!(f, "expected {} variables, got {}", expected, got)
            }
        }
    }
}

impl std::error::Error for CertError {}

/// Number of LP variables: edge bundles expanded by multiplicity.
pub fn expanded_edge_count(graph: &Graph) -> usize {
    match graph {
        Graph::Dag(d) => d.edges().iter().map(|e| e.multiplicity as usize).sum(),
        Graph::Undir(u) => u.edges().iter().map(|e| e.multiplicity as usize).sum(),
    }
}

/// Variable index range of one edge bundle.
pub fn bundle_var_range(graph: &Graph, bundle: usize) -> std::ops::Range<usize> {
    let mults: Vec<usize> = match graph {
        Graph::Dag(d) => d.edges().iter().map(|e| e.multiplicity as usize).collect(),
        Graph::Undir(u) => u.edges().iter().map(|e| e.multiplicity as usize).collect(),
    };
    let start: usize = mults[..bundle].iter().sum();
    start..start + mults[bundle]
}

/// Per-variable costs: bundle costs replicated per copy. Undirected edges
/// carry unit cost.
pub fn expanded_costs(graph: &Graph) -> Vec<Rational> {
    match graph {
        Graph::Dag(d) => d
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat(e.cost.clone()).take(e.multiplicity as usize))
            .collect(),
        Graph::Undir(u) => u
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat(Rational::one()).take(e.multiplicity as usize))
            .collect(),
    }
}

/// A nonnegative weight per LP variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalSolution {
    values: Vec<Rational>,
}

impl PrimalSolution {
    pub fn new(values: Vec<Rational>) -> Result<Self, CertError> {
        if let Some(index) = values.iter().position(|v| v < &Rational::zero()) {
            return Err(CertError::NegativeValue { index });
        }
        Ok(PrimalSolution { values })
    }

    pub fn zeros(len: usize) -> Self {
        PrimalSolution {
            values: vec![Rational::zero(); len],
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn objective(&self, costs: &[Rational]) -> Rational {
        self.values
            .iter()
            .zip(costs)
            .map(|(x, c)| x * c)
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

/// Flow amounts on odd paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualFlow {
    pub flows: Vec<(Path, Rational)>,
}

impl DualFlow {
    pub fn value(&self) -> Rational {
        self.flows
            .iter()
            .map(|(_, f)| f.clone())
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

/// Primal point, dual flow, and the list of path constraints claimed tight.
#[derive(Debug, Clone)]
pub struct CertificateBundle {
    pub primal: PrimalSolution,
    pub dual: DualFlow,
    pub tight_paths: Vec<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OptimalityCheck {
    OptimalCertified,
    GapRemains(Rational),
}

// Connections (ordered node pairs with at least one copy) and the variable
// indices serving each connection.
fn connection_vars(graph: &Graph) -> BTreeMap<(NodeId, NodeId), Vec<usize>> {
    let mut map: BTreeMap<(NodeId, NodeId), Vec<usize>> = BTreeMap::new();
    let mut var = 0usize;
    match graph {
        Graph::Dag(d) => {
            for e in d.edges() {
                for _ in 0..e.multiplicity {
                    map.entry((e.tail, e.head)).or_default().push(var);
                    var += 1;
                }
            }
        }
        Graph::Undir(u) => {
            for e in u.edges() {
                for _ in 0..e.multiplicity {
                    map.entry((e.u, e.v)).or_default().push(var);
                    map.entry((e.v, e.u)).or_default().push(var);
                    var += 1;
                }
            }
        }
    }
    map
}

fn min_weight_var(conn: &[usize], weights: &[Rational]) -> usize {
    let mut best = conn[0];
    for &v in conn {
        if weights[v] < weights[best] {
            best = v;
        }
    }
    best
}

/// Minimum total weight of a simple odd `s -> t` path, or `None` when no odd
/// path exists. A path crossing a multi-copy connection uses its cheapest
/// copy. On DAGs this is dynamic programming over the double cover in
/// topological order; on undirected graphs it enumerates paths.
pub fn shortest_odd_path_weight(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    weights: &[Rational],
) -> Result<Option<Rational>, CertError> {
    let expected = expanded_edge_count(graph);
    if weights.len() != expected {
        return Err(CertError::LengthMismatch {
            expected,
            got: weights.len(),
        });
    }
    let conns = connection_vars(graph);
    match graph {
        Graph::Dag(dag) => {
            // images: even side 2v, odd side 2v+1
            let n = dag.node_count();
            let mut dist: Vec<Option<Rational>> = vec![None; 2 * n];
            dist[2 * s.index()] = Some(Rational::zero());
            for &u in dag.topo_order() {
                for ((a, b), vars) in conns.range((u, NodeId(0))..=(u, NodeId(u32::MAX))) {
                    debug_assert_eq!(*a, u);
                    let w = weights[min_weight_var(vars, weights)].clone();
                    for flip in 0..2 {
                        let from = 2 * a.index() + flip;
                        let to = 2 * b.index() + (1 - flip);
                        if let Some(du) = dist[from].clone() {
                            let cand = du + w.clone();
                            let better = match &dist[to] {
                                None => true,
                                Some(cur) => cand < *cur,
                            };
                            if better {
                                dist[to] = Some(cand);
                            }
                        }
                    }
                }
            }
            Ok(dist[2 * t.index() + 1].clone())
        }
        Graph::Undir(_) => {
            let paths = crate::graph::enumerate_paths_between(
                graph,
                s,
                t,
                crate::graph::DEFAULT_PATH_CAP,
            )
            .map_err(|_| CertError::InfeasibleCertificate)?;
            let mut best: Option<Rational> = None;
            for p in paths.iter().filter(|p| p.is_odd()) {
                let w = path_weight(p, &conns, weights);
                if best.is_none() || w < *best.as_ref().unwrap() {
                    best = Some(w);
                }
            }
            Ok(best)
        }
    }
}

fn path_weight(
    path: &Path,
    conns: &BTreeMap<(NodeId, NodeId), Vec<usize>>,
    weights: &[Rational],
) -> Rational {
    path.nodes
        .windows(2)
        .map(|w| {
            let vars = &conns[&(w[0], w[1])];
            weights[min_weight_var(vars, weights)].clone()
        })
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// Every odd `s -> t` path carries weight at least one (the separation check
/// behind the covering LP).
pub fn verify_primal_feasible(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    primal: &PrimalSolution,
) -> Result<bool, CertError> {
    match shortest_odd_path_weight(graph, s, t, primal.values())? {
        None => Ok(true),
        Some(w) => Ok(w >= Rational::one()),
    }
}

fn validate_odd_path(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    path: &Path,
    conns: &BTreeMap<(NodeId, NodeId), Vec<usize>>,
) -> Result<(), CertError> {
    let nodes = &path.nodes;
    let bad = || CertError::NotOddPath { path: path.clone() };
    if nodes.len() < 2 || !path.is_odd() {
        return Err(bad());
    }
    let endpoints_ok = match graph {
        Graph::Dag(_) => nodes[0] == s && *nodes.last().unwrap() == t,
        Graph::Undir(_) => {
            (nodes[0] == s && *nodes.last().unwrap() == t)
                || (nodes[0] == t && *nodes.last().unwrap() == s)
        }
    };
    if !endpoints_ok {
        return Err(bad());
    }
    let mut seen = std::collections::BTreeSet::new();
    for v in nodes {
        if !seen.insert(*v) {
            return Err(bad());
        }
    }
    for w in nodes.windows(2) {
        if !conns.contains_key(&(w[0], w[1])) {
            return Err(bad());
        }
    }
    Ok(())
}

/// Per-edge load of the flow stays within capacity; carried paths must be
/// simple odd `s -> t` paths. Load and capacity are compared per connection
/// (copies pool their capacity).
pub fn verify_dual_feasible(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    dual: &DualFlow,
    costs: &[Rational],
) -> Result<bool, CertError> {
    let expected = expanded_edge_count(graph);
    if costs.len() != expected {
        return Err(CertError::LengthMismatch {
            expected,
            got: costs.len(),
        });
    }
    let conns = connection_vars(graph);
    let mut load: BTreeMap<(NodeId, NodeId), Rational> = BTreeMap::new();
    for (path, amount) in &dual.flows {
        validate_odd_path(graph, s, t, path, &conns)?;
        if amount <= &Rational::zero() {
            return Err(CertError::NotOddPath { path: path.clone() });
        }
        for w in path.nodes.windows(2) {
            let key = normalize_key(graph, w[0], w[1]);
            *load.entry(key).or_insert_with(Rational::zero) += amount.clone();
        }
    }
    for (key, used) in &load {
        let vars = &conns[key];
        let cap = vars
            .iter()
            .map(|&v| costs[v].clone())
            .fold(Rational::zero(), |acc, c| acc + c);
        if *used > cap {
            return Ok(false);
        }
    }
    Ok(true)
}

fn normalize_key(graph: &Graph, a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    match graph {
        Graph::Dag(_) => (a, b),
        Graph::Undir(_) => (a.min(b), a.max(b)),
    }
}

/// Equal primal and dual objectives certify joint optimality (weak duality);
/// otherwise report the remaining gap.
pub fn check_optimality(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    primal: &PrimalSolution,
    dual: &DualFlow,
    costs: &[Rational],
) -> Result<OptimalityCheck, CertError> {
    if !verify_primal_feasible(graph, s, t, primal)?
        || !verify_dual_feasible(graph, s, t, dual, costs)?
    {
        return Err(CertError::InfeasibleCertificate);
    }
    let objective = primal.objective(costs);
    let value = dual.value();
    if objective == value {
        Ok(OptimalityCheck::OptimalCertified)
    } else {
        Ok(OptimalityCheck::GapRemains(objective - value))
    }
}

/// Extreme-point certificate: one tight nonnegativity row per zero
/// coordinate plus one incidence row per listed tight path must reach full
/// column rank. Each listed path is first checked to be a genuinely tight
/// odd path.
pub fn verify_extreme_point(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    primal: &PrimalSolution,
    tight_paths: &[Path],
) -> Result<bool, CertError> {
    let m = expanded_edge_count(graph);
    if primal.len() != m {
        return Err(CertError::LengthMismatch {
            expected: m,
            got: primal.len(),
        });
    }
    let conns = connection_vars(graph);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, v) in primal.values().iter().enumerate() {
        if v.is_zero() {
            let mut row = vec![BigInt::zero(); m];
            row[i] = BigInt::one();
            rows.push(row);
        }
    }
    for path in tight_paths {
        validate_odd_path(graph, s, t, path, &conns)?;
        // incidence over the cheapest copy of each crossed connection
        let mut row = vec![BigInt::zero(); m];
        let mut total = Rational::zero();
        for w in path.nodes.windows(2) {
            let vars = &conns[&(w[0], w[1])];
            let var = min_weight_var(vars, primal.values());
            row[var] += BigInt::one();
            total += primal.values()[var].clone();
        }
        if total != Rational::one() {
            return Err(CertError::PathNotTight {
                path: path.clone(),
                total,
            });
        }
        rows.push(row);
    }
    Ok(integer_rank(rows) == m)
}

/// Every coordinate an integer multiple of one half?
pub fn is_half_integral(primal: &PrimalSolution) -> bool {
    let two: BigInt = 2.into();
    primal
        .values()
        .iter()
        .all(|v| v.denom() == &BigInt::one() || v.denom() == &two)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot_row = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let pivot_row = match pivot_row {
            None => {
                col += 1;
                continue;
            }
            Some(r) => r,
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            for c in (col + 1)..cols {
                let num = &pivot * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = num / &prev_pivot;
            }
            rows[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Solves a square rational system exactly; `None` when singular.
pub fn solve_square_system(
    matrix: &[Vec<Rational>],
    rhs: &[Rational],
) -> Option<Vec<Rational>> {
    let n = matrix.len();
    if n == 0 {
        return Some(Vec::new());
    }
    assert!(matrix.iter().all(|row| row.len() == n));
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut b: Vec<Rational> = rhs.to_vec();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for c in col..n {
            a[col][c] = &a[col][c] / &pivot;
        }
        b[col] = &b[col] / &pivot;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
                let delta = &factor * &b[col];
                b[r] = &b[r] - &delta;
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{rat, UndirGraph};

    fn path(ids: &[u32]) -> Path {
        Path {
            nodes: ids.iter().map(|&i| NodeId(i)).collect(),
        }
    }

    fn unit_dag(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::Dag(Dag::new(n, edges).unwrap())
    }

    #[test]
    fn single_edge_weight_is_its_cost() {
        let g = unit_dag(2, &[(0, 1)]);
        let w = shortest_odd_path_weight(&g, NodeId(0), NodeId(1), &[rat(7, 1)]).unwrap();
        assert_eq!(w, Some(rat(7, 1)));
    }

    #[test]
    fn even_only_graph_has_no_odd_path() {
        let g = unit_dag(3, &[(0, 1), (1, 2)]);
        let w =
            shortest_odd_path_weight(&g, NodeId(0), NodeId(2), &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(w, None);
    }

    #[test]
    fn shortest_odd_matches_enumeration_on_random_dags() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for _ in 0..150 {
            let n = rng.gen_range(2..=10);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.35) {
                        edges.push((i, j));
                    }
                }
            }
            let dag = Dag::new(n, &edges).unwrap();
            let g = Graph::Dag(dag.clone());
            let m = edges.len();
            let weights: Vec<Rational> =
                (0..m).map(|_| rat(rng.gen_range(0..9), rng.gen_range(1..4))).collect();
            let s = NodeId(0);
            let t = NodeId((n - 1) as u32);
            if s == t {
                continue;
            }
            let got = shortest_odd_path_weight(&g, s, t, &weights).unwrap();
            // enumeration oracle
            let conns = connection_vars(&g);
            let paths = crate::graph::enumerate_paths_between(&g, s, t, 1_000_000).unwrap();
            let want = paths
                .iter()
                .filter(|p| p.is_odd())
                .map(|p| path_weight(p, &conns, &weights))
                .min();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn all_ones_is_feasible() {
        let g = unit_dag(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let primal = PrimalSolution::new(vec![Rational::one(); 4]).unwrap();
        assert!(verify_primal_feasible(&g, NodeId(0), NodeId(3), &primal).unwrap());
    }

    #[test]
    fn all_zero_with_odd_path_is_infeasible() {
        let g = unit_dag(2, &[(0, 1)]);
        let primal = PrimalSolution::zeros(1);
        assert!(!verify_primal_feasible(&g, NodeId(0), NodeId(1), &primal).unwrap());
    }

    #[test]
    fn negative_primal_is_rejected() {
        let err = PrimalSolution::new(vec![rat(-1, 2)]).unwrap_err();
        assert_eq!(err, CertError::NegativeValue { index: 0 });
    }

    #[test]
    fn empty_flow_is_feasible() {
        let g = unit_dag(2, &[(0, 1)]);
        let dual = DualFlow { flows: vec![] };
        assert!(verify_dual_feasible(&g, NodeId(0), NodeId(1), &dual, &[rat(1, 1)]).unwrap());
    }

    #[test]
    fn unit_flow_on_unit_cost_path_is_tight_but_feasible() {
        let g = unit_dag(2, &[(0, 1)]);
        let dual = DualFlow {
            flows: vec![(path(&[0, 1]), Rational::one())],
        };
        assert!(verify_dual_feasible(&g, NodeId(0), NodeId(1), &dual, &[rat(1, 1)]).unwrap());
        let over = DualFlow {
            flows: vec![(path(&[0, 1]), rat(3, 2))],
        };
        assert!(!verify_dual_feasible(&g, NodeId(0), NodeId(1), &over, &[rat(1, 1)]).unwrap());
    }

    #[test]
    fn even_path_in_flow_is_rejected() {
        let g = unit_dag(3, &[(0, 1), (1, 2)]);
        let dual = DualFlow {
            flows: vec![(path(&[0, 1, 2]), Rational::one())],
        };
        let err = verify_dual_feasible(&g, NodeId(0), NodeId(2), &dual, &[rat(1, 1), rat(1, 1)])
            .unwrap_err();
        assert!(matches!(err, CertError::NotOddPath { .. }));
    }

    #[test]
    fn optimality_gap_arithmetic() {
        // two parallel odd routes, cost 1 each; primal 1 on one edge route
        let g = unit_dag(2, &[(0, 1)]);
        let primal = PrimalSolution::new(vec![Rational::one()]).unwrap();
        let dual = DualFlow {
            flows: vec![(path(&[0, 1]), Rational::one())],
        };
        let costs = expanded_costs(&g);
        assert_eq!(
            check_optimality(&g, NodeId(0), NodeId(1), &primal, &dual, &costs).unwrap(),
            OptimalityCheck::OptimalCertified
        );
        let weak_dual = DualFlow {
            flows: vec![(path(&[0, 1]), rat(1, 2))],
        };
        assert_eq!(
            check_optimality(&g, NodeId(0), NodeId(1), &primal, &weak_dual, &costs).unwrap(),
            OptimalityCheck::GapRemains(rat(1, 2))
        );
    }

    #[test]
    fn single_edge_extreme_point() {
        let g = unit_dag(2, &[(0, 1)]);
        let primal = PrimalSolution::new(vec![Rational::one()]).unwrap();
        assert!(verify_extreme_point(&g, NodeId(0), NodeId(1), &primal, &[path(&[0, 1])])
            .unwrap());
    }

    #[test]
    fn dropping_a_tight_path_loses_rank() {
        // two parallel unit bundles: x = (1, 1) is feasible and both
        // coordinates are positive, so a single tight row cannot reach rank 2
        let g = Graph::Dag(
            Dag::with_costs(
                2,
                &[(0, 1, Rational::one(), 1), (0, 1, Rational::one(), 1)],
            )
            .unwrap(),
        );
        let primal = PrimalSolution::new(vec![Rational::one(), Rational::one()]).unwrap();
        assert!(!verify_extreme_point(&g, NodeId(0), NodeId(1), &primal, &[path(&[0, 1])])
            .unwrap());
    }

    #[test]
    fn tightness_violation_names_the_path() {
        let g = unit_dag(2, &[(0, 1)]);
        let primal = PrimalSolution::new(vec![rat(3, 2)]).unwrap();
        let err = verify_extreme_point(&g, NodeId(0), NodeId(1), &primal, &[path(&[0, 1])])
            .unwrap_err();
        match err {
            CertError::PathNotTight { total, .. } => assert_eq!(total, rat(3, 2)),
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn half_integrality_detection() {
        let yes = PrimalSolution::new(vec![rat(1, 2), rat(1, 1), rat(0, 1)]).unwrap();
        assert!(is_half_integral(&yes));
        let no = PrimalSolution::new(vec![rat(1, 4)]).unwrap();
        assert!(!is_half_integral(&no));
    }

    #[test]
    fn rank_of_identity_blocks() {
        let one = BigInt::one();
        let zero = BigInt::zero();
        let rows = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![one.clone(), one.clone(), one.clone()],
        ];
        assert_eq!(integer_rank(rows), 3);
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(integer_rank(rows), 1);
    }

    #[test]
    fn square_solve_round_trip() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(72);
        for _ in 0..40 {
            let n = rng.gen_range(1..=5);
            let a: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..n).map(|_| rat(rng.gen_range(-4..5), 1)).collect())
                .collect();
            let x: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-4..5), rng.gen_range(1..4))).collect();
            let b: Vec<Rational> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| &a[r][c] * &x[c])
                        .fold(Rational::zero(), |acc, v| acc + v)
                })
                .collect();
            match solve_square_system(&a, &b) {
                Some(sol) => {
                    // any solution must reproduce b
                    for r in 0..n {
                        let got = (0..n)
                            .map(|c| &a[r][c] * &sol[c])
                            .fold(Rational::zero(), |acc, v| acc + v);
                        assert_eq!(got, b[r]);
                    }
                }
                None => {
                    // singular matrices happen; the planted solution just is
                    // not unique then. Entries here are integers already.
                    let rows: Vec<Vec<BigInt>> =
                        a.iter().map(|row| row.iter().map(|v| v.to_integer()).collect()).collect();
                    assert!(integer_rank(rows) < n);
                }
            }
        }
    }

    #[test]
    fn undirected_feasibility_via_enumeration() {
        // triangle with terminals 0, 1: odd paths 0-1 (len 1) and 0-2-1? even
        let g = Graph::Undir(UndirGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
        let primal = PrimalSolution::new(vec![Rational::one(), rat(0, 1), rat(0, 1)]).unwrap();
        assert!(verify_primal_feasible(&g, NodeId(0), NodeId(1), &primal).unwrap());
        let weak = PrimalSolution::new(vec![rat(1, 2), rat(0, 1), rat(0, 1)]).unwrap();
        assert!(!verify_primal_feasible(&g, NodeId(0), NodeId(1), &weak).unwrap());
    }
}
