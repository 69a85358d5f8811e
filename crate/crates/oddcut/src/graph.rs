//! Graph representations and parity reachability.
//!
//! Directed graphs here are always acyclic; construction rejects cycles.
//! Parity questions ("is there an odd path?") are answered on the bipartite
//! double cover, where every walk of a DAG is a simple path, so plain
//! reachability is exact.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

/// Exact rational scalar used for all costs, weights and certificate values.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

/// Index of a node inside its owning graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn node(id: usize) -> NodeId {
    NodeId(id as u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    CycleDetected,
    BadNodeId { id: usize, node_count: usize },
    SelfLoop { id: usize },
    SameNode,
    ExplosionCap { cap: usize },
    ZeroMultiplicity,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::CycleDetected => write!(f, "edge set contains a directed cycle"),
            GraphError::BadNodeId { id, node_count } => {
                write!(f, "node id {} out of range (node count {})", id, node_count)
            }
            GraphError::SelfLoop { id } => write!(f, "self-loop at node {}", id),
            GraphError::SameNode => write!(f, "source and target must differ"),
            GraphError::ExplosionCap { cap } => {
                write!(f, "path enumeration exceeded cap of {}", cap)
            }
            GraphError::ZeroMultiplicity => write!(f, "edge multiplicity must be positive"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A directed edge bundle: `multiplicity` parallel copies, each of cost `cost`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagEdge {
    pub tail: NodeId,
    pub head: NodeId,
    pub cost: Rational,
    pub multiplicity: u32,
}

/// A directed acyclic graph with a cached topological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    node_count: usize,
    edges: Vec<DagEdge>,
    topo_order: Vec<NodeId>,
}

impl Dag {
    /// Builds a DAG from `(tail, head)` pairs with unit cost and multiplicity one.
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let full: Vec<(usize, usize, Rational, u32)> = edges
            .iter()
            .map(|&(u, v)| (u, v, Rational::one(), 1))
            .collect();
        Self::with_costs(node_count, &full)
    }

    /// Builds a DAG from `(tail, head, cost, multiplicity)` tuples.
    ///
    /// Fails with `CycleDetected` if the edges admit no topological order and
    /// with `BadNodeId` on an out-of-range endpoint. The topological order is
    /// computed by Kahn's method with smallest-id-first tie-breaking, so it is
    /// reproducible.
    pub fn with_costs(
        node_count: usize,
        edges: &[(usize, usize, Rational, u32)],
    ) -> Result<Self, GraphError> {
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v, ref cost, mult) in edges {
            if u >= node_count {
                return Err(GraphError::BadNodeId { id: u, node_count });
            }
            if v >= node_count {
                return Err(GraphError::BadNodeId { id: v, node_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop { id: u });
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity);
            }
            list.push(DagEdge {
                tail: node(u),
                head: node(v),
                cost: cost.clone(),
                multiplicity: mult,
            });
        }
        let topo_order = topological_order(node_count, &list)?;
        Ok(Dag {
            node_count,
            edges: list,
            topo_order,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[DagEdge] {
        &self.edges
    }

    pub fn topo_order(&self) -> &[NodeId] {
        &self.topo_order
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count as u32).map(NodeId)
    }

    /// Out-neighbour lists indexed by node, each sorted by head id.
    pub fn out_neighbors(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.tail.index()].push(e.head);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// In-neighbour lists indexed by node, each sorted by tail id.
    pub fn in_neighbors(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.head.index()].push(e.tail);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edges.iter().any(|e| e.tail == u && e.head == v)
    }

    /// The graph with every edge orientation reversed.
    pub fn reversed(&self) -> Dag {
        let edges: Vec<DagEdge> = self
            .edges
            .iter()
            .map(|e| DagEdge {
                tail: e.head,
                head: e.tail,
                cost: e.cost.clone(),
                multiplicity: e.multiplicity,
            })
            .collect();
        let topo_order = topological_order(self.node_count, &edges)
            .expect("reversal of a DAG is a DAG");
        Dag {
            node_count: self.node_count,
            edges,
            topo_order,
        }
    }

    /// The subgraph induced by deleting `removed`, keeping node ids stable.
    /// Deleted nodes stay in the id space as isolated nodes.
    pub fn delete_nodes(&self, removed: &BTreeSet<NodeId>) -> Dag {
        let edges: Vec<DagEdge> = self
            .edges
            .iter()
            .filter(|e| !removed.contains(&e.tail) && !removed.contains(&e.head))
            .cloned()
            .collect();
        let topo_order = topological_order(self.node_count, &edges)
            .expect("subgraph of a DAG is a DAG");
        Dag {
            node_count: self.node_count,
            edges,
            topo_order,
        }
    }

    /// Removes the edge bundles at the given indices.
    pub fn delete_edge_bundles(&self, removed: &BTreeSet<usize>) -> Dag {
        let edges: Vec<DagEdge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        let topo_order = topological_order(self.node_count, &edges)
            .expect("subgraph of a DAG is a DAG");
        Dag {
            node_count: self.node_count,
            edges,
            topo_order,
        }
    }
}

fn topological_order(node_count: usize, edges: &[DagEdge]) -> Result<Vec<NodeId>, GraphError> {
    let mut indeg = vec![0usize; node_count];
    let mut adj = vec![Vec::new(); node_count];
    for e in edges {
        indeg[e.head.index()] += 1;
        adj[e.tail.index()].push(e.head);
    }
    // Kahn with a sorted frontier: smallest id first.
    let mut ready: BTreeSet<NodeId> = (0..node_count as u32)
        .map(NodeId)
        .filter(|v| indeg[v.index()] == 0)
        .collect();
    let mut order = Vec::with_capacity(node_count);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v);
        for &w in &adj[v.index()] {
            indeg[w.index()] -= 1;
            if indeg[w.index()] == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() != node_count {
        return Err(GraphError::CycleDetected);
    }
    Ok(order)
}

/// An undirected multigraph. Self-loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirGraph {
    node_count: usize,
    edges: Vec<UndirEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub multiplicity: u32,
}

impl UndirGraph {
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let full: Vec<(usize, usize, u32)> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::with_multiplicities(node_count, &full)
    }

    pub fn with_multiplicities(
        node_count: usize,
        edges: &[(usize, usize, u32)],
    ) -> Result<Self, GraphError> {
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v, mult) in edges {
            if u >= node_count {
                return Err(GraphError::BadNodeId { id: u, node_count });
            }
            if v >= node_count {
                return Err(GraphError::BadNodeId { id: v, node_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop { id: u });
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity);
            }
            list.push(UndirEdge {
                u: node(u),
                v: node(v),
                multiplicity: mult,
            });
        }
        Ok(UndirGraph {
            node_count,
            edges: list,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[UndirEdge] {
        &self.edges
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count as u32).map(NodeId)
    }

    /// Neighbour lists, sorted, parallel edges collapsed.
    pub fn neighbors(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.u.index()].push(e.v);
            adj[e.v.index()].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn delete_nodes(&self, removed: &BTreeSet<NodeId>) -> UndirGraph {
        UndirGraph {
            node_count: self.node_count,
            edges: self
                .edges
                .iter()
                .filter(|e| !removed.contains(&e.u) && !removed.contains(&e.v))
                .cloned()
                .collect(),
        }
    }

    pub fn delete_edge_bundles(&self, removed: &BTreeSet<usize>) -> UndirGraph {
        UndirGraph {
            node_count: self.node_count,
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !removed.contains(i))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// True iff the graph admits a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring if one exists; component roots are smallest-id and
    /// get color 0, so the result is canonical.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.neighbors();
        let mut color = vec![u8::MAX; self.node_count];
        for start in 0..self.node_count {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(node(start));
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v.index()] {
                    if color[w.index()] == u8::MAX {
                        color[w.index()] = 1 - color[v.index()];
                        queue.push_back(w);
                    } else if color[w.index()] == color[v.index()] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }
}

/// Either flavour of graph; instances carry one of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Dag(Dag),
    Undir(UndirGraph),
}

impl Graph {
    pub fn node_count(&self) -> usize {
        match self {
            Graph::Dag(d) => d.node_count(),
            Graph::Undir(u) => u.node_count(),
        }
    }

    pub fn as_dag(&self) -> Option<&Dag> {
        match self {
            Graph::Dag(d) => Some(d),
            Graph::Undir(_) => None,
        }
    }

    pub fn as_undir(&self) -> Option<&UndirGraph> {
        match self {
            Graph::Dag(_) => None,
            Graph::Undir(u) => Some(u),
        }
    }
}

/// The underlying undirected graph of a DAG: orientations dropped.
pub fn underlying_undirected(dag: &Dag) -> UndirGraph {
    let edges: Vec<(usize, usize, u32)> = dag
        .edges()
        .iter()
        .map(|e| (e.tail.index(), e.head.index(), e.multiplicity))
        .collect();
    UndirGraph::with_multiplicities(dag.node_count(), &edges).expect("dag edges are loop-free")
}

/// A simple path, stored as its node sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub nodes: Vec<NodeId>,
}

impl Path {
    pub fn len_edges(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn is_odd(&self) -> bool {
        self.len_edges() % 2 == 1
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.nodes.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", ids.join(" "))
    }
}

/// The bipartite double cover: node `v` becomes `v_L = 2v` and `v_R = 2v + 1`,
/// and each edge `u -> v` becomes `u_L -> v_R` and `u_R -> v_L` with the cost
/// copied to both images.
pub fn double_cover(dag: &Dag) -> Dag {
    let mut edges = Vec::with_capacity(dag.edges().len() * 2);
    for e in dag.edges() {
        let (u, v) = (e.tail.index(), e.head.index());
        edges.push((2 * u, 2 * v + 1, e.cost.clone(), e.multiplicity));
        edges.push((2 * u + 1, 2 * v, e.cost.clone(), e.multiplicity));
    }
    Dag::with_costs(2 * dag.node_count(), &edges).expect("double cover of a DAG is acyclic")
}

pub fn left_image(v: NodeId) -> NodeId {
    NodeId(2 * v.0)
}

pub fn right_image(v: NodeId) -> NodeId {
    NodeId(2 * v.0 + 1)
}

/// Parity reachability flags for one node.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParityReach {
    pub even: bool,
    pub odd: bool,
}

/// For each node, whether an even-length and an odd-length path from some
/// source reaches it. Length-0 paths count as even, so each source gets
/// `even = true`. Exact for DAGs because every walk is a path.
pub fn parity_reach(dag: &Dag, sources: &BTreeSet<NodeId>) -> Vec<ParityReach> {
    let mut reach = vec![ParityReach::default(); dag.node_count()];
    for &s in sources {
        reach[s.index()].even = true;
    }
    let adj = dag.out_neighbors();
    for &v in dag.topo_order() {
        let here = reach[v.index()];
        if !here.even && !here.odd {
            continue;
        }
        for &w in &adj[v.index()] {
            if here.even {
                reach[w.index()].odd = true;
            }
            if here.odd {
                reach[w.index()].even = true;
            }
        }
    }
    reach
}

/// Decides whether some odd-length simple `s -> t` path exists, via
/// reachability from `s_L` to `t_R` in the double cover.
pub fn has_odd_path(dag: &Dag, s: NodeId, t: NodeId) -> Result<bool, GraphError> {
    if s == t {
        return Err(GraphError::SameNode);
    }
    let mut sources = BTreeSet::new();
    sources.insert(s);
    Ok(parity_reach(dag, &sources)[t.index()].odd)
}

/// True iff some odd-length path joins two distinct terminals.
pub fn has_odd_terminal_path(dag: &Dag, terminals: &BTreeSet<NodeId>) -> bool {
    for &t in terminals {
        let reach = parity_reach(dag, &[t].into_iter().collect());
        for &u in terminals {
            if u != t && reach[u.index()].odd {
                return true;
            }
        }
    }
    false
}

/// `R_G(X)`: every node reachable from `X`, always including `X` itself.
pub fn reachable_from(graph: &Graph, from: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
    let adj = match graph {
        Graph::Dag(d) => d.out_neighbors(),
        Graph::Undir(u) => u.neighbors(),
    };
    let mut seen: BTreeSet<NodeId> = from.clone();
    let mut stack: Vec<NodeId> = from.iter().copied().collect();
    while let Some(v) = stack.pop() {
        for &w in &adj[v.index()] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

pub const DEFAULT_PATH_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    All,
    OddOnly,
    EvenOnly,
}

/// Enumerates every simple path with both endpoints in `terminals` (endpoints
/// distinct), in lexicographic order of the node sequence. Undirected paths
/// are reported once, oriented from their smaller endpoint. Aborts with
/// `ExplosionCap` when more than `cap` paths would be produced.
pub fn enumerate_t_paths(
    graph: &Graph,
    terminals: &BTreeSet<NodeId>,
    filter: ParityFilter,
    cap: usize,
) -> Result<Vec<Path>, GraphError> {
    let adj = match graph {
        Graph::Dag(d) => d.out_neighbors(),
        Graph::Undir(u) => u.neighbors(),
    };
    let undirected = matches!(graph, Graph::Undir(_));
    let n = graph.node_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for &start in terminals {
        let mut stack = vec![start];
        on_path[start.index()] = true;
        dfs_t_paths(
            &adj,
            terminals,
            undirected,
            filter,
            cap,
            &mut stack,
            &mut on_path,
            &mut out,
        )?;
        on_path[start.index()] = false;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_t_paths(
    adj: &[Vec<NodeId>],
    terminals: &BTreeSet<NodeId>,
    undirected: bool,
    filter: ParityFilter,
    cap: usize,
    stack: &mut Vec<NodeId>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
) -> Result<(), GraphError> {
    let here = *stack.last().unwrap();
    for &w in &adj[here.index()] {
        if on_path[w.index()] {
            continue;
        }
        stack.push(w);
        if terminals.contains(&w) {
            let start = stack[0];
            let keep_orientation = !undirected || start < w;
            let parity_ok = match filter {
                ParityFilter::All => true,
                ParityFilter::OddOnly => (stack.len() - 1) % 2 == 1,
                ParityFilter::EvenOnly => (stack.len() - 1) % 2 == 0,
            };
            if keep_orientation && parity_ok {
                if out.len() >= cap {
                    return Err(GraphError::ExplosionCap { cap });
                }
                out.push(Path {
                    nodes: stack.clone(),
                });
            }
        }
        on_path[w.index()] = true;
        dfs_t_paths(adj, terminals, undirected, filter, cap, stack, on_path, out)?;
        on_path[w.index()] = false;
        stack.pop();
    }
    Ok(())
}

/// Enumerates all simple `s -> t` paths (directed) or `s - t` paths
/// (undirected); used as a brute-force oracle by the tests.
pub fn enumerate_paths_between(
    graph: &Graph,
    s: NodeId,
    t: NodeId,
    cap: usize,
) -> Result<Vec<Path>, GraphError> {
    if s == t {
        return Err(GraphError::SameNode);
    }
    let adj = match graph {
        Graph::Dag(d) => d.out_neighbors(),
        Graph::Undir(u) => u.neighbors(),
    };
    let n = graph.node_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut stack = vec![s];
    on_path[s.index()] = true;
    dfs_pair_paths(&adj, t, cap, &mut stack, &mut on_path, &mut out)?;
    Ok(out)
}

fn dfs_pair_paths(
    adj: &[Vec<NodeId>],
    target: NodeId,
    cap: usize,
    stack: &mut Vec<NodeId>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
) -> Result<(), GraphError> {
    let here = *stack.last().unwrap();
    if here == target {
        if out.len() >= cap {
            return Err(GraphError::ExplosionCap { cap });
        }
        out.push(Path {
            nodes: stack.clone(),
        });
        return Ok(());
    }
    for &w in &adj[here.index()] {
        if on_path[w.index()] {
            continue;
        }
        stack.push(w);
        on_path[w.index()] = true;
        dfs_pair_paths(adj, target, cap, stack, on_path, out)?;
        on_path[w.index()] = false;
        stack.pop();
    }
    Ok(())
}

/// Node-cut or edge-cut flavour of an instance or solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    NodeCut,
    EdgeCut,
}

/// A deletion problem: a graph, terminals, a protected set and a budget.
///
/// For node-deletion instances the protected node set always contains the
/// terminals. For edge-deletion instances protection applies to edge bundles
/// (indices into the edge list) and no node protection is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub kind: CutKind,
    pub terminals: BTreeSet<NodeId>,
    pub protected_nodes: BTreeSet<NodeId>,
    pub protected_edges: BTreeSet<usize>,
    pub budget: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    Graph(GraphError),
    ProtectedEdgesOnNodeInstance,
    ProtectedNodesOnEdgeInstance,
    BadEdgeIndex { index: usize, edge_count: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::Graph(e) => write!(f, "{}", e),
            InstanceError::ProtectedEdgesOnNodeInstance => {
                write!(f, "protected edges are only valid on edge-deletion instances")
            }
            InstanceError::ProtectedNodesOnEdgeInstance => {
                write!(f, "protected nodes are only valid on node-deletion instances")
            }
            InstanceError::BadEdgeIndex { index, edge_count } => {
                write!(f, "edge index {} out of range (edge count {})", index, edge_count)
            }
        }
    }
}

impl std::error::Error for InstanceError {}

impl Instance {
    /// Node-deletion instance. Terminals are always protected; extra ids in
    /// `protected` are added to the protected set.
    pub fn node_cut(
        graph: Graph,
        terminals: BTreeSet<NodeId>,
        protected: BTreeSet<NodeId>,
        budget: u32,
    ) -> Result<Self, InstanceError> {
        let n = graph.node_count();
        for &v in terminals.iter().chain(protected.iter()) {
            if v.index() >= n {
                return Err(InstanceError::Graph(GraphError::BadNodeId {
                    id: v.index(),
                    node_count: n,
                }));
            }
        }
        let mut protected_nodes = protected;
        protected_nodes.extend(terminals.iter().copied());
        Ok(Instance {
            graph,
            kind: CutKind::NodeCut,
            terminals,
            protected_nodes,
            protected_edges: BTreeSet::new(),
            budget,
        })
    }

    /// Edge-deletion instance. `protected_edges` holds bundle indices.
    pub fn edge_cut(
        graph: Graph,
        terminals: BTreeSet<NodeId>,
        protected_edges: BTreeSet<usize>,
        budget: u32,
    ) -> Result<Self, InstanceError> {
        let n = graph.node_count();
        for &v in terminals.iter() {
            if v.index() >= n {
                return Err(InstanceError::Graph(GraphError::BadNodeId {
                    id: v.index(),
                    node_count: n,
                }));
            }
        }
        let edge_count = match &graph {
            Graph::Dag(d) => d.edges().len(),
            Graph::Undir(u) => u.edges().len(),
        };
        for &i in &protected_edges {
            if i >= edge_count {
                return Err(InstanceError::BadEdgeIndex {
                    index: i,
                    edge_count,
                });
            }
        }
        Ok(Instance {
            graph,
            kind: CutKind::EdgeCut,
            terminals,
            protected_nodes: BTreeSet::new(),
            protected_edges,
            budget,
        })
    }

    /// Node ids that a node-cut solution may use.
    pub fn free_nodes(&self) -> BTreeSet<NodeId> {
        (0..self.graph.node_count() as u32)
            .map(NodeId)
            .filter(|v| !self.protected_nodes.contains(v))
            .collect()
    }

    /// Edge bundle indices that an edge-cut solution may use.
    pub fn free_edges(&self) -> BTreeSet<usize> {
        let edge_count = match &self.graph {
            Graph::Dag(d) => d.edges().len(),
            Graph::Undir(u) => u.edges().len(),
        };
        (0..edge_count)
            .filter(|i| !self.protected_edges.contains(i))
            .collect()
    }

    pub fn with_budget(&self, budget: u32) -> Instance {
        let mut inst = self.clone();
        inst.budget = budget;
        inst
    }
}

/// Stable digest of an instance, recorded on solutions.
pub fn instance_digest(inst: &Instance) -> u64 {
    let mut h = Fnv::new();
    match &inst.graph {
        Graph::Dag(d) => {
            h.write(0xD1);
            h.write_usize(d.node_count());
            for e in d.edges() {
                h.write_usize(e.tail.index());
                h.write_usize(e.head.index());
                h.write_str(&e.cost.to_string());
                h.write_usize(e.multiplicity as usize);
            }
        }
        Graph::Undir(u) => {
            h.write(0xE2);
            h.write_usize(u.node_count());
            for e in u.edges() {
                h.write_usize(e.u.index());
                h.write_usize(e.v.index());
                h.write_usize(e.multiplicity as usize);
            }
        }
    }
    h.write(match inst.kind {
        CutKind::NodeCut => 1,
        CutKind::EdgeCut => 2,
    });
    for &t in &inst.terminals {
        h.write_usize(t.index());
    }
    h.write(0xFF);
    for &p in &inst.protected_nodes {
        h.write_usize(p.index());
    }
    h.write(0xFF);
    for &i in &inst.protected_edges {
        h.write_usize(i);
    }
    h.write_usize(inst.budget as usize);
    h.finish()
}

/// FNV-1a, kept local so digests are stable across platforms and runs.
struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf29ce484222325)
    }
    fn write(&mut self, byte: u8) {
        self.0 ^= byte as u64;
        self.0 = self.0.wrapping_mul(0x100000001b3);
    }
    fn write_usize(&mut self, v: usize) {
        for b in (v as u64).to_le_bytes() {
            self.write(b);
        }
    }
    fn write_str(&mut self, s: &str) {
        for b in s.bytes() {
            self.write(b);
        }
    }
    fn finish(&self) -> u64 {
        self.0
    }
}
