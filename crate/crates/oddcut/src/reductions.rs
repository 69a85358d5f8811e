//! Reductions between edge and node deletion problems, and generators for
//! the hardness gadgets and special instances.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::graph::{
    rat, Dag, Graph, Instance, NodeId, Path, Rational, UndirGraph,
};
use crate::lpcert::{solve_square_system, DualFlow, PrimalSolution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    WrongKind,
    NotDirected,
    TooFewTerminals { got: usize },
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::WrongKind => write!(f, "instance has the wrong deletion kind"),
            ReductionError::NotDirected => write!(f, "reduction requires a directed instance"),
            ReductionError::TooFewTerminals { got } => {
                write!(f, "need at least two terminals, got {}", got)
            }
        }
    }
}

impl std::error::Error for ReductionError {}

/// Edge-deletion to node-deletion: every unprotected edge copy is subdivided
/// into a three-edge path through two fresh free nodes; all original nodes
/// become protected. Optima correspond one-to-one in size.
#[derive(Debug, Clone)]
pub struct EdgeToNode {
    pub instance: Instance,
    /// Per unprotected edge copy: (bundle index, x node, y node).
    pub copies: Vec<(usize, NodeId, NodeId)>,
    source_graph: Graph,
}

impl EdgeToNode {
    /// Node solutions lift to edge solutions: an edge bundle is deleted when
    /// every one of its copies lost a subdivision node. For multiplicity-one
    /// bundles this is the plain "x or y was deleted" rule.
    pub fn lift(&self, node_solution: &BTreeSet<NodeId>) -> BTreeSet<usize> {
        let mut hit: BTreeMap<usize, usize> = BTreeMap::new();
        for &(bundle, x, y) in &self.copies {
            if node_solution.contains(&x) || node_solution.contains(&y) {
                *hit.entry(bundle).or_insert(0) += 1;
            }
        }
        let mults = bundle_multiplicities(&self.source_graph);
        hit.into_iter()
            .filter(|&(bundle, count)| count == mults[bundle] as usize)
            .map(|(bundle, _)| bundle)
            .collect()
    }
}

fn bundle_multiplicities(graph: &Graph) -> Vec<u32> {
    match graph {
        Graph::Dag(d) => d.edges().iter().map(|e| e.multiplicity).collect(),
        Graph::Undir(u) => u.edges().iter().map(|e| e.multiplicity).collect(),
    }
}

pub fn edgecut_to_nodecut(inst: &Instance) -> Result<EdgeToNode, ReductionError> {
    if !matches!(inst.kind, crate::graph::CutKind::EdgeCut) {
        return Err(ReductionError::WrongKind);
    }
    let dag = match &inst.graph {
        Graph::Dag(d) => d,
        Graph::Undir(_) => return Err(ReductionError::NotDirected),
    };
    let n = dag.node_count();
    let mut edges: Vec<(usize, usize, Rational, u32)> = Vec::new();
    let mut copies = Vec::new();
    let mut next = n;
    for (i, e) in dag.edges().iter().enumerate() {
        if inst.protected_edges.contains(&i) {
            edges.push((e.tail.index(), e.head.index(), e.cost.clone(), e.multiplicity));
            continue;
        }
        for _ in 0..e.multiplicity {
            let x = next;
            let y = next + 1;
            next += 2;
            edges.push((e.tail.index(), x, e.cost.clone(), 1));
            edges.push((x, y, e.cost.clone(), 1));
            edges.push((y, e.head.index(), e.cost.clone(), 1));
            copies.push((i, NodeId(x as u32), NodeId(y as u32)));
        }
    }
    let new_dag = Dag::with_costs(next, &edges).expect("subdivision keeps the graph acyclic");
    // every original node is protected
    let protected: BTreeSet<NodeId> = (0..n as u32).map(NodeId).collect();
    let instance = Instance::node_cut(
        Graph::Dag(new_dag),
        inst.terminals.clone(),
        protected,
        inst.budget,
    )
    .expect("ids are in range");
    Ok(EdgeToNode {
        instance,
        copies,
        source_graph: inst.graph.clone(),
    })
}

/// Node-deletion to edge-deletion: every node becomes an in -> mid -> out
/// chain, original edges run out-to-in and are protected, and the chain
/// edges of protected nodes are protected too. Terminal images are the in
/// nodes.
#[derive(Debug, Clone)]
pub struct NodeToEdge {
    pub instance: Instance,
    /// Chain bundle indices per original node: (in->mid, mid->out).
    pub chain_edges: Vec<(usize, usize)>,
}

impl NodeToEdge {
    pub fn node_of_in_chain(&self, bundle: usize) -> Option<NodeId> {
        self.chain_edges
            .iter()
            .position(|&(a, b)| a == bundle || b == bundle)
            .map(|v| NodeId(v as u32))
    }

    /// Edge solutions lift to node solutions via the chain-edge rule.
    pub fn lift(&self, edge_solution: &BTreeSet<usize>) -> BTreeSet<NodeId> {
        edge_solution
            .iter()
            .filter_map(|&b| self.node_of_in_chain(b))
            .collect()
    }
}

pub fn in_node(v: NodeId) -> usize {
    3 * v.index()
}

pub fn mid_node(v: NodeId) -> usize {
    3 * v.index() + 1
}

pub fn out_node(v: NodeId) -> usize {
    3 * v.index() + 2
}

pub fn nodecut_to_edgecut(inst: &Instance) -> Result<NodeToEdge, ReductionError> {
    if !matches!(inst.kind, crate::graph::CutKind::NodeCut) {
        return Err(ReductionError::WrongKind);
    }
    let dag = match &inst.graph {
        Graph::Dag(d) => d,
        Graph::Undir(_) => return Err(ReductionError::NotDirected),
    };
    let n = dag.node_count();
    let mut edges: Vec<(usize, usize, Rational, u32)> = Vec::new();
    let mut protected_edges = BTreeSet::new();
    let mut chain_edges = Vec::with_capacity(n);
    for v in dag.nodes() {
        let first = edges.len();
        edges.push((in_node(v), mid_node(v), Rational::one(), 1));
        edges.push((mid_node(v), out_node(v), Rational::one(), 1));
        chain_edges.push((first, first + 1));
        if inst.protected_nodes.contains(&v) {
            protected_edges.insert(first);
            protected_edges.insert(first + 1);
        }
    }
    for e in dag.edges() {
        protected_edges.insert(edges.len());
        edges.push((out_node(e.tail), in_node(e.head), e.cost.clone(), e.multiplicity));
    }
    let new_dag = Dag::with_costs(3 * n, &edges).expect("chain layout keeps the graph acyclic");
    let terminals: BTreeSet<NodeId> = inst
        .terminals
        .iter()
        .map(|&t| NodeId(in_node(t) as u32))
        .collect();
    let instance = Instance::edge_cut(Graph::Dag(new_dag), terminals, protected_edges, inst.budget)
        .expect("ids are in range");
    Ok(NodeToEdge {
        instance,
        chain_edges,
    })
}

/// Vertex-cover gadget: orient the input by id order, then attach a source
/// feeding every node and a sink fed by every node. A node set blocks all
/// odd source-sink paths exactly when it is a vertex cover.
#[derive(Debug, Clone)]
pub struct VcGadget {
    pub instance: Instance,
    pub s: NodeId,
    pub t: NodeId,
}

pub fn gen_vc_gadget(graph: &UndirGraph, budget: u32) -> VcGadget {
    let n = graph.node_count();
    let s = n;
    let t = n + 1;
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (e.u.index(), e.v.index());
            (a.min(b), a.max(b))
        })
        .collect();
    for u in 0..n {
        edges.push((s, u));
        edges.push((u, t));
    }
    let dag = Dag::new(n + 2, &edges).expect("id-ordered orientation is acyclic");
    let terminals: BTreeSet<NodeId> = [NodeId(s as u32), NodeId(t as u32)].into_iter().collect();
    let instance = Instance::node_cut(Graph::Dag(dag), terminals, BTreeSet::new(), budget)
        .expect("ids are in range");
    VcGadget {
        instance,
        s: NodeId(s as u32),
        t: NodeId(t as u32),
    }
}

/// Multiway-cut gadget: add `s`, `t` and per terminal `v` a pendant pair
/// `x_v`, `x'_v` wired so that any surviving terminal-terminal connection
/// yields an odd `s - t` path of either parity. Gadget edges get `m + 1`
/// parallel copies, pricing them out of any solution of size at most `m`.
#[derive(Debug, Clone)]
pub struct MwcGadget {
    pub instance: Instance,
    pub s: NodeId,
    pub t: NodeId,
    /// Number of original edge copies, so gadget bundles have `m + 1` copies.
    pub original_copies: u32,
}

pub fn gen_mwc_gadget(
    graph: &UndirGraph,
    terminals: &BTreeSet<NodeId>,
    budget: u32,
) -> Result<MwcGadget, ReductionError> {
    if terminals.len() < 2 {
        return Err(ReductionError::TooFewTerminals {
            got: terminals.len(),
        });
    }
    let n = graph.node_count();
    let m: u32 = graph.edges().iter().map(|e| e.multiplicity).sum();
    let s = n;
    let t = n + 1;
    let mut edges: Vec<(usize, usize, u32)> = graph
        .edges()
        .iter()
        .map(|e| (e.u.index(), e.v.index(), e.multiplicity))
        .collect();
    let mut next = n + 2;
    for &v in terminals {
        let xv = next;
        let xpv = next + 1;
        next += 2;
        edges.push((xv, v.index(), m + 1));
        edges.push((xpv, v.index(), m + 1));
        edges.push((xv, xpv, m + 1));
        edges.push((s, xv, m + 1));
        edges.push((t, xv, m + 1));
    }
    let gadget = UndirGraph::with_multiplicities(next, &edges).expect("fresh ids avoid loops");
    let blocker_terminals: BTreeSet<NodeId> =
        [NodeId(s as u32), NodeId(t as u32)].into_iter().collect();
    let instance = Instance::edge_cut(Graph::Undir(gadget), blocker_terminals, BTreeSet::new(), budget)
        .expect("ids are in range");
    Ok(MwcGadget {
        instance,
        s: NodeId(s as u32),
        t: NodeId(t as u32),
        original_copies: m,
    })
}

/// Star integrality-gap family: a star with `k` leaves as terminals pushed
/// through the multiway-cut gadget. Half on every star edge is a fractional
/// blocker of value `k/2`, while the best integral blocker removes all but
/// one star edge.
#[derive(Debug, Clone)]
pub struct StarGap {
    pub gadget: MwcGadget,
    /// Fractional witness on the gadget's LP variables.
    pub witness: PrimalSolution,
    pub leaf_count: u32,
    pub fractional_value: Rational,
    pub integral_optimum: u32,
}

pub fn gen_star_gap(k: u32) -> Result<StarGap, ReductionError> {
    assert!(k >= 2, "the family starts at two leaves");
    // leaves 0..k-1, centre k
    let n = (k + 1) as usize;
    let edges: Vec<(usize, usize)> = (0..k as usize).map(|leaf| (leaf, k as usize)).collect();
    let star = UndirGraph::new(n, &edges).unwrap();
    let terminals: BTreeSet<NodeId> = (0..k).map(NodeId).collect();
    let gadget = gen_mwc_gadget(&star, &terminals, k.saturating_sub(1))?;
    let var_count = crate::lpcert::expanded_edge_count(&gadget.instance.graph);
    let mut values = vec![Rational::zero(); var_count];
    // original star edges come first, one copy each
    for value in values.iter_mut().take(k as usize) {
        *value = rat(1, 2);
    }
    let witness = PrimalSolution::new(values).expect("half is nonnegative");
    Ok(StarGap {
        gadget,
        witness,
        leaf_count: k,
        fractional_value: Rational::new((k as i64).into(), 2.into()),
        integral_optimum: k - 1,
    })
}

fn paper_path(labels: &[u32]) -> Path {
    Path {
        nodes: labels.iter().map(|&l| NodeId(l - 1)).collect(),
    }
}

/// The eight explicitly listed source-sink paths of the non-half-integral
/// example, in paper labels (1-based; source 29, sink 32).
pub fn escher_paths() -> Vec<Path> {
    vec![
        paper_path(&[29, 1, 2, 11, 12, 19, 20, 25, 26, 30, 31, 32]),
        paper_path(&[29, 11, 12, 3, 4, 13, 14, 21, 22, 27, 28, 32]),
        paper_path(&[29, 19, 20, 13, 14, 5, 6, 15, 16, 23, 24, 32]),
        paper_path(&[29, 25, 26, 21, 22, 15, 16, 7, 8, 17, 18, 32]),
        paper_path(&[29, 30, 31, 27, 28, 23, 24, 17, 18, 9, 10, 32]),
        paper_path(&[29, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 32]),
        paper_path(&[29, 1, 2, 3, 4, 5, 6, 15, 16, 23, 24, 32]),
        paper_path(&[29, 11, 12, 3, 4, 5, 6, 7, 8, 17, 18, 32]),
    ]
}

/// The wall instance rebuilt as the union of the eight listed paths, with
/// unit costs, plus its dual certificate (half a unit of flow on each of the
/// first six paths) and the derived optimal primal point.
#[derive(Debug, Clone)]
pub struct EscherWall {
    pub instance: Instance,
    pub s: NodeId,
    pub t: NodeId,
    pub primal: PrimalSolution,
    pub dual: DualFlow,
    pub tight_paths: Vec<Path>,
}

pub fn gen_escher_wall() -> EscherWall {
    let paths = escher_paths();
    let mut edge_set: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for p in &paths {
        for w in p.nodes.windows(2) {
            edge_set.insert((w[0], w[1]));
        }
    }
    let edges: Vec<(usize, usize)> = edge_set
        .iter()
        .map(|&(a, b)| (a.index(), b.index()))
        .collect();
    let dag = Dag::new(32, &edges).expect("the wall is acyclic");
    let s = NodeId(28);
    let t = NodeId(31);
    let terminals: BTreeSet<NodeId> = [s, t].into_iter().collect();
    let instance = Instance::edge_cut(Graph::Dag(dag), terminals, BTreeSet::new(), 3)
        .expect("ids are in range");

    let dual = DualFlow {
        flows: paths[..6]
            .iter()
            .map(|p| (p.clone(), rat(1, 2)))
            .collect(),
    };
    let primal = derive_escher_primal(
        instance.graph.as_dag().unwrap(),
        s,
        t,
        &edge_set,
        &paths,
        &dual,
    );
    EscherWall {
        instance,
        s,
        t,
        primal,
        dual,
        tight_paths: paths,
    }
}

/// Derives the optimal primal point. Complementary slackness narrows the
/// support to edges whose capacity the dual flow saturates; among those, an
/// eight-edge support is searched (smallest index combination first) whose
/// tight-path system has a unique positive solution that is feasible for the
/// whole program, has objective three, and carries a three-quarters
/// coordinate.
fn derive_escher_primal(
    dag: &Dag,
    s: NodeId,
    t: NodeId,
    edge_set: &BTreeSet<(NodeId, NodeId)>,
    paths: &[Path],
    dual: &DualFlow,
) -> PrimalSolution {
    let index_of: BTreeMap<(NodeId, NodeId), usize> = edge_set
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let m = edge_set.len();
    let mut load = vec![Rational::zero(); m];
    for (p, f) in &dual.flows {
        for w in p.nodes.windows(2) {
            load[index_of[&(w[0], w[1])]] += f.clone();
        }
    }
    let saturated: Vec<usize> = (0..m).filter(|&i| load[i] == Rational::one()).collect();
    let path_vars: Vec<BTreeSet<usize>> = paths
        .iter()
        .map(|p| {
            p.nodes
                .windows(2)
                .map(|w| index_of[&(w[0], w[1])])
                .collect()
        })
        .collect();
    // incidence of saturated edges per path, as bitmasks over the saturated list
    let path_masks: Vec<u32> = path_vars
        .iter()
        .map(|vars| {
            saturated
                .iter()
                .enumerate()
                .filter(|(_, v)| vars.contains(v))
                .map(|(b, _)| 1u32 << b)
                .sum()
        })
        .collect();
    let target = dual.value();
    let graph = Graph::Dag(dag.clone());
    let mut chosen: Vec<usize> = Vec::new();
    let result = search_support(
        &saturated,
        &path_masks,
        &path_vars,
        &graph,
        s,
        t,
        m,
        &target,
        0,
        &mut chosen,
    )
    .expect("an extreme primal point exists on the reconstructed wall");
    PrimalSolution::new(result).expect("search only returns nonnegative points")
}

#[allow(clippy::too_many_arguments)]
fn search_support(
    saturated: &[usize],
    path_masks: &[u32],
    path_vars: &[BTreeSet<usize>],
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    var_count: usize,
    target: &Rational,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<Rational>> {
    if chosen.len() == path_masks.len() {
        let mask: u32 = chosen.iter().map(|&b| 1u32 << b).sum();
        // every tight path must cross the support
        if path_masks.iter().any(|pm| pm & mask == 0) {
            return None;
        }
        let support: Vec<usize> = chosen.iter().map(|&b| saturated[b]).collect();
        let matrix: Vec<Vec<Rational>> = path_vars
            .iter()
            .map(|vars| {
                support
                    .iter()
                    .map(|v| {
                        if vars.contains(v) {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let rhs = vec![Rational::one(); path_masks.len()];
        let solution = solve_square_system(&matrix, &rhs)?;
        if solution.iter().any(|v| v <= &Rational::zero()) {
            return None;
        }
        let objective = solution.iter().fold(Rational::zero(), |acc, v| acc + v);
        if objective != *target {
            return None;
        }
        if !solution.iter().any(|v| *v == rat(3, 4)) {
            return None;
        }
        let mut values = vec![Rational::zero(); var_count];
        for (slot, value) in support.iter().zip(solution) {
            values[*slot] = value;
        }
        let primal = PrimalSolution::new(values.clone()).ok()?;
        if !crate::lpcert::verify_primal_feasible(graph, s, t, &primal).ok()? {
            return None;
        }
        return Some(values);
    }
    for b in start..saturated.len() {
        if saturated.len() - b < path_masks.len() - chosen.len() {
            break;
        }
        chosen.push(b);
        if let Some(found) = search_support(
            saturated, path_masks, path_vars, graph, s, t, var_count, target, b + 1, chosen,
        ) {
            chosen.pop();
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{has_odd_terminal_path, CutKind};
    use crate::lpcert::{expanded_costs, verify_dual_feasible, verify_primal_feasible};

    fn set(ids: &[u32]) -> BTreeSet<NodeId> {
        ids.iter().map(|&i| NodeId(i)).collect()
    }

    #[test]
    fn single_edge_subdivision_shape() {
        let dag = Dag::new(2, &[(0, 1)]).unwrap();
        let inst = Instance::edge_cut(
            Graph::Dag(dag),
            set(&[0, 1]),
            BTreeSet::new(),
            1,
        )
        .unwrap();
        let red = edgecut_to_nodecut(&inst).unwrap();
        let dag2 = red.instance.graph.as_dag().unwrap();
        assert_eq!(dag2.node_count(), 4);
        assert_eq!(dag2.edges().len(), 3);
        assert_eq!(red.copies.len(), 1);
        // all original nodes protected, the two fresh nodes free
        assert_eq!(red.instance.free_nodes().len(), 2);
    }

    #[test]
    fn protected_edge_stays_untouched() {
        let dag = Dag::new(2, &[(0, 1)]).unwrap();
        let inst = Instance::edge_cut(
            Graph::Dag(dag),
            set(&[0, 1]),
            [0usize].into_iter().collect(),
            1,
        )
        .unwrap();
        let red = edgecut_to_nodecut(&inst).unwrap();
        assert_eq!(red.instance.graph.as_dag().unwrap().node_count(), 2);
        assert!(red.copies.is_empty());
    }

    #[test]
    fn node_chain_shape() {
        let dag = Dag::new(2, &[(0, 1)]).unwrap();
        let inst = Instance::node_cut(Graph::Dag(dag), set(&[0, 1]), BTreeSet::new(), 1).unwrap();
        let red = nodecut_to_edgecut(&inst).unwrap();
        let dag2 = red.instance.graph.as_dag().unwrap();
        assert_eq!(dag2.node_count(), 6);
        // 2 chains of 2 edges plus the original edge
        assert_eq!(dag2.edges().len(), 5);
        // terminals protected: their chain edges plus the original edge
        assert_eq!(red.instance.protected_edges.len(), 5);
        assert_eq!(red.instance.free_edges().len(), 0);
    }

    #[test]
    fn free_node_has_two_deletable_chain_edges() {
        // t1 -> v -> t2 with free middle node
        let dag = Dag::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = Instance::node_cut(Graph::Dag(dag), set(&[0, 2]), BTreeSet::new(), 1).unwrap();
        let red = nodecut_to_edgecut(&inst).unwrap();
        assert_eq!(red.instance.free_edges().len(), 2);
        let (a, b) = red.chain_edges[1];
        let free = red.instance.free_edges();
        assert!(free.contains(&a) && free.contains(&b));
    }

    #[test]
    fn vc_gadget_of_triangle() {
        let g = UndirGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let gadget = gen_vc_gadget(&g, 2);
        let dag = gadget.instance.graph.as_dag().unwrap();
        assert_eq!(dag.node_count(), 5);
        assert_eq!(dag.edges().len(), 3 + 6);
        // every single node blocks... no: a vertex cover of a triangle needs 2
        for v in 0..3u32 {
            let removed: BTreeSet<NodeId> = [NodeId(v)].into_iter().collect();
            let pruned = dag.delete_nodes(&removed);
            assert!(
                has_odd_terminal_path(&pruned, &gadget.instance.terminals),
                "one node is not enough on a triangle"
            );
        }
        let removed = set(&[0, 1]);
        assert!(!has_odd_terminal_path(&dag.delete_nodes(&removed), &gadget.instance.terminals));
    }

    #[test]
    fn vc_gadget_of_edgeless_graph_needs_nothing() {
        let g = UndirGraph::new(3, &[]).unwrap();
        let gadget = gen_vc_gadget(&g, 0);
        let dag = gadget.instance.graph.as_dag().unwrap();
        assert!(!has_odd_terminal_path(dag, &gadget.instance.terminals));
    }

    // vertex cover brute force
    fn min_vertex_cover(g: &UndirGraph) -> usize {
        let n = g.node_count();
        for size in 0..=n {
            let mut found = false;
            for mask in 0..(1u32 << n) {
                if (mask.count_ones() as usize) != size {
                    continue;
                }
                let covered = g.edges().iter().all(|e| {
                    mask & (1 << e.u.0) != 0 || mask & (1 << e.v.0) != 0
                });
                if covered {
                    found = true;
                    break;
                }
            }
            if found {
                return size;
            }
        }
        n
    }

    // smallest node blocker on the gadget by subset enumeration
    fn min_node_blocker(inst: &Instance) -> usize {
        let dag = inst.graph.as_dag().unwrap();
        let free: Vec<NodeId> = inst.free_nodes().into_iter().collect();
        for size in 0..=free.len() {
            for mask in 0..(1u64 << free.len()) {
                if (mask.count_ones() as usize) != size {
                    continue;
                }
                let removed: BTreeSet<NodeId> = free
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << *i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                if !has_odd_terminal_path(&dag.delete_nodes(&removed), &inst.terminals) {
                    return size;
                }
            }
        }
        free.len()
    }

    #[test]
    fn vc_gadget_matches_vertex_cover_on_small_graphs() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(81);
        for _ in 0..60 {
            let n = rng.gen_range(1..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = UndirGraph::new(n, &edges).unwrap();
            let gadget = gen_vc_gadget(&g, n as u32);
            assert_eq!(min_node_blocker(&gadget.instance), min_vertex_cover(&g));
        }
    }

    #[test]
    fn star_center_is_its_cover() {
        // star with three leaves: the center covers everything
        let g = UndirGraph::new(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let gadget = gen_vc_gadget(&g, 1);
        assert_eq!(min_node_blocker(&gadget.instance), 1);
    }

    #[test]
    fn mwc_gadget_rejects_single_terminal() {
        let g = UndirGraph::new(2, &[(0, 1)]).unwrap();
        let err = gen_mwc_gadget(&g, &set(&[0]), 1).unwrap_err();
        assert_eq!(err, ReductionError::TooFewTerminals { got: 1 });
    }

    #[test]
    fn mwc_gadget_shape_for_two_terminals() {
        let g = UndirGraph::new(2, &[(0, 1)]).unwrap();
        let gadget = gen_mwc_gadget(&g, &set(&[0, 1]), 1).unwrap();
        let ug = gadget.instance.graph.as_undir().unwrap();
        // 2 original + s,t + 2 gadget nodes per terminal
        assert_eq!(ug.node_count(), 8);
        // 1 original bundle + 5 per terminal
        assert_eq!(ug.edges().len(), 11);
        assert_eq!(gadget.original_copies, 1);
        assert!(ug.edges().iter().skip(1).all(|e| e.multiplicity == 2));
    }

    #[test]
    fn star_gap_witness_is_feasible_with_value_half_k() {
        for k in 2..=6u32 {
            let star = gen_star_gap(k).unwrap();
            let g = &star.gadget.instance.graph;
            assert!(verify_primal_feasible(g, star.gadget.s, star.gadget.t, &star.witness)
                .unwrap());
            let costs = expanded_costs(g);
            assert_eq!(star.witness.objective(&costs), star.fractional_value);
            assert_eq!(star.integral_optimum, k - 1);
        }
    }

    #[test]
    fn escher_paths_have_eleven_edges_each() {
        for p in escher_paths() {
            assert_eq!(p.len_edges(), 11);
            assert!(p.is_odd());
        }
    }

    #[test]
    fn escher_dual_is_feasible_with_value_three() {
        let wall = gen_escher_wall();
        let costs = expanded_costs(&wall.instance.graph);
        assert!(verify_dual_feasible(&wall.instance.graph, wall.s, wall.t, &wall.dual, &costs)
            .unwrap());
        assert_eq!(wall.dual.value(), rat(3, 1));
    }

    #[test]
    fn escher_primal_has_objective_three_and_a_three_quarter() {
        let wall = gen_escher_wall();
        let costs = expanded_costs(&wall.instance.graph);
        assert_eq!(wall.primal.objective(&costs), rat(3, 1));
        assert!(wall.primal.values().iter().any(|v| *v == rat(3, 4)));
        assert!(!crate::lpcert::is_half_integral(&wall.primal));
    }

    #[test]
    fn escher_wall_has_edge_cut_kind_and_unit_costs() {
        let wall = gen_escher_wall();
        assert_eq!(wall.instance.kind, CutKind::EdgeCut);
        let dag = wall.instance.graph.as_dag().unwrap();
        assert!(dag.edges().iter().all(|e| e.cost == Rational::one() && e.multiplicity == 1));
        assert_eq!(dag.node_count(), 32);
    }
}
