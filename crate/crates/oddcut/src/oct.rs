//! Odd cycle transversal with protected nodes, and the easy-instance solver.
//!
//! Protected nodes are handled by iteratively replacing each of them with
//! `budget + 1` copies sharing the original neighbourhood, after which a
//! plain iterative-compression OCT routine runs on the reduced graph. A
//! solution of size within budget can never afford all copies of a node, so
//! the copies are effectively undeletable; dropping copies from a returned
//! solution maps it back.

use std::collections::BTreeSet;

use num_traits::One;

use crate::flow::{max_flow_min_cut, FlowNetwork};
use crate::graph::{underlying_undirected, Dag, NodeId, Rational, UndirGraph};

/// An odd-cycle-transversal problem: make the graph bipartite by deleting at
/// most `budget` nodes outside `protected`.
#[derive(Debug, Clone)]
pub struct OctInstance {
    pub graph: UndirGraph,
    pub protected: BTreeSet<NodeId>,
    pub budget: u32,
}

/// Minimum odd cycle transversal within budget, or `None` if none exists.
/// Among all minimum transversals the lexicographically smallest node set is
/// returned, so output is reproducible.
pub fn oct_solve(inst: &OctInstance) -> Option<BTreeSet<NodeId>> {
    let n = inst.graph.node_count();
    let adj = simple_adjacency(&inst.graph);
    let protected: BTreeSet<usize> = inst.protected.iter().map(|v| v.index()).collect();

    // odd cycle fully inside the protected set: hopeless at any budget
    if !induced_bipartite(&adj, &protected) {
        return None;
    }

    // smallest feasible budget
    let mut best: Option<(u32, BTreeSet<usize>)> = None;
    for b in 0..=inst.budget {
        if let Some(sol) = solve_reduced(&adj, &protected, b) {
            best = Some((b, sol));
            break;
        }
    }
    let (optimum, _) = best?;

    // lexicographically smallest transversal of that size, by prefix forcing
    let mut forced_in: BTreeSet<usize> = BTreeSet::new();
    let mut forced_out: BTreeSet<usize> = BTreeSet::new();
    for v in 0..n {
        if forced_in.len() as u32 == optimum {
            break;
        }
        if protected.contains(&v) {
            continue;
        }
        let mut test_adj = adj.clone();
        for &u in forced_in.iter().chain(std::iter::once(&v)) {
            detach(&mut test_adj, u);
        }
        let mut test_protected = protected.clone();
        test_protected.extend(forced_out.iter().copied());
        let remaining = optimum - forced_in.len() as u32 - 1;
        if solve_reduced(&test_adj, &test_protected, remaining).is_some() {
            forced_in.insert(v);
        } else {
            forced_out.insert(v);
        }
    }
    debug_assert_eq!(forced_in.len() as u32, optimum);
    Some(forced_in.into_iter().map(|v| NodeId(v as u32)).collect())
}

/// Easy-instance solver: drop orientations, attach a fresh protected node to
/// every terminal so they land in one part, and hand the result to the OCT
/// routine.
pub fn solve_easy_instance(
    dag: &Dag,
    v_inf: &BTreeSet<NodeId>,
    terminals: &BTreeSet<NodeId>,
    budget: u32,
) -> Option<BTreeSet<NodeId>> {
    let n = dag.node_count();
    let g1 = underlying_undirected(dag);
    let mut edges: Vec<(usize, usize, u32)> = g1
        .edges()
        .iter()
        .map(|e| (e.u.index(), e.v.index(), e.multiplicity))
        .collect();
    let anchor = n;
    for &t in terminals {
        edges.push((anchor, t.index(), 1));
    }
    let g2 = UndirGraph::with_multiplicities(n + 1, &edges).expect("anchor edges are loop-free");
    let mut protected = v_inf.clone();
    protected.insert(NodeId(anchor as u32));
    oct_solve(&OctInstance {
        graph: g2,
        protected,
        budget,
    })
}

fn simple_adjacency(graph: &UndirGraph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); graph.node_count()];
    for e in graph.edges() {
        adj[e.u.index()].insert(e.v.index());
        adj[e.v.index()].insert(e.u.index());
    }
    adj
}

fn detach(adj: &mut [BTreeSet<usize>], v: usize) {
    let neigh = std::mem::take(&mut adj[v]);
    for u in neigh {
        adj[u].remove(&v);
    }
}

fn induced_bipartite(adj: &[BTreeSet<usize>], nodes: &BTreeSet<usize>) -> bool {
    let mut color = vec![u8::MAX; adj.len()];
    for &start in nodes {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !nodes.contains(&w) {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

fn whole_bipartite(adj: &[BTreeSet<usize>]) -> bool {
    let all: BTreeSet<usize> = (0..adj.len()).collect();
    induced_bipartite(adj, &all)
}

/// Applies the copy reduction for protected nodes and runs iterative
/// compression. Returns a transversal of the *original* free nodes.
fn solve_reduced(
    adj: &[BTreeSet<usize>],
    protected: &BTreeSet<usize>,
    budget: u32,
) -> Option<BTreeSet<usize>> {
    if !induced_bipartite(adj, protected) {
        return None;
    }
    let n = adj.len();
    let mut work: Vec<BTreeSet<usize>> = adj.to_vec();
    // iteratively replace each protected node with budget+1 copies wired to
    // the neighbourhood the node has at replacement time
    for &p in protected {
        let neigh = std::mem::take(&mut work[p]);
        for u in &neigh {
            work[*u].remove(&p);
        }
        for _ in 0..=budget {
            let id = work.len();
            work.push(neigh.clone());
            for &u in &neigh {
                work[u].insert(id);
            }
        }
    }
    let sol = ic_oct(&work, budget)?;
    Some(sol.into_iter().filter(|&v| v < n && !protected.contains(&v)).collect())
}

/// Plain iterative compression for OCT without protected nodes.
fn ic_oct(adj: &[BTreeSet<usize>], budget: u32) -> Option<BTreeSet<usize>> {
    if whole_bipartite(adj) {
        return Some(BTreeSet::new());
    }
    let n = adj.len();
    let mut solution: BTreeSet<usize> = BTreeSet::new();
    let mut present: BTreeSet<usize> = BTreeSet::new();
    for i in 0..n {
        present.insert(i);
        if induced_without(adj, &present, &solution) {
            continue;
        }
        solution.insert(i);
        if solution.len() as u32 <= budget {
            continue;
        }
        match compress(adj, &present, &solution, budget) {
            Some(smaller) => solution = smaller,
            None => return None,
        }
    }
    Some(solution)
}

fn induced_without(adj: &[BTreeSet<usize>], present: &BTreeSet<usize>, removed: &BTreeSet<usize>) -> bool {
    let nodes: BTreeSet<usize> = present.difference(removed).copied().collect();
    induced_bipartite(adj, &nodes)
}

/// Compression step: given an OCT `w` of the graph induced on `present` with
/// `|w| = budget + 1`, find one of size at most `budget` or prove none exists.
fn compress(
    adj: &[BTreeSet<usize>],
    present: &BTreeSet<usize>,
    w: &BTreeSet<usize>,
    budget: u32,
) -> Option<BTreeSet<usize>> {
    let w_nodes: Vec<usize> = w.iter().copied().collect();
    let rest: BTreeSet<usize> = present.difference(w).copied().collect();
    let coloring = canonical_coloring(adj, &rest);

    // each kept node of w is assigned to part A or B, or deleted
    let mut assignment = vec![0u8; w_nodes.len()]; // 0 = delete, 1 = A, 2 = B
    loop {
        if let Some(sol) = try_assignment(adj, &rest, &coloring, &w_nodes, &assignment, budget) {
            return Some(sol);
        }
        // next ternary assignment
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                return None;
            }
            assignment[pos] += 1;
            if assignment[pos] == 3 {
                assignment[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

fn canonical_coloring(adj: &[BTreeSet<usize>], nodes: &BTreeSet<usize>) -> Vec<u8> {
    let mut color = vec![u8::MAX; adj.len()];
    for &start in nodes {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if nodes.contains(&u) && color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                }
            }
        }
    }
    color
}

fn try_assignment(
    adj: &[BTreeSet<usize>],
    rest: &BTreeSet<usize>,
    coloring: &[u8],
    w_nodes: &[usize],
    assignment: &[u8],
    budget: u32,
) -> Option<BTreeSet<usize>> {
    let mut part_a = Vec::new();
    let mut part_b = Vec::new();
    let mut deleted = BTreeSet::new();
    for (i, &v) in w_nodes.iter().enumerate() {
        match assignment[i] {
            0 => {
                deleted.insert(v);
            }
            1 => part_a.push(v),
            _ => part_b.push(v),
        }
    }
    if deleted.len() as u32 > budget {
        return None;
    }
    // kept parts must be independent
    for (i, &u) in part_a.iter().enumerate() {
        for &v in part_a.iter().skip(i + 1) {
            if adj[u].contains(&v) {
                return None;
            }
        }
    }
    for (i, &u) in part_b.iter().enumerate() {
        for &v in part_b.iter().skip(i + 1) {
            if adj[u].contains(&v) {
                return None;
            }
        }
    }

    // Required side flag per constrained node: a neighbour of a kept A node
    // must sit in part B and vice versa. The flag compares the demanded part
    // against the canonical coloring; nodes demanded on both flags must go.
    let mut must_flag: Vec<Option<u8>> = vec![None; adj.len()];
    let mut conflicts = BTreeSet::new();
    let constrain = |v: usize, demanded_a: bool, must_flag: &mut Vec<Option<u8>>, conflicts: &mut BTreeSet<usize>| {
        let flag = if demanded_a {
            coloring[v]
        } else {
            1 - coloring[v]
        };
        match must_flag[v] {
            None => must_flag[v] = Some(flag),
            Some(f) if f == flag => {}
            Some(_) => {
                conflicts.insert(v);
            }
        }
    };
    for &u in &part_a {
        for &v in &adj[u] {
            if rest.contains(&v) {
                constrain(v, false, &mut must_flag, &mut conflicts);
            }
        }
    }
    for &u in &part_b {
        for &v in &adj[u] {
            if rest.contains(&v) {
                constrain(v, true, &mut must_flag, &mut conflicts);
            }
        }
    }
    let fixed = deleted.len() + conflicts.len();
    if fixed as u32 > budget {
        return None;
    }
    let flow_budget = budget - fixed as u32;

    // separate flag-0 from flag-1 nodes in rest minus conflicts by a minimum
    // vertex cut where the flagged nodes themselves may be cut
    let usable: BTreeSet<usize> = rest.difference(&conflicts).copied().collect();
    let mut index_of: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for (i, &v) in usable.iter().enumerate() {
        index_of.insert(v, i);
    }
    let m = usable.len();
    let mut net = FlowNetwork::new(2 * m + 2);
    let source = 2 * m;
    let sink = 2 * m + 1;
    let big = Rational::from_integer(((m + 2) as i64).into());
    let mut cap_arc = vec![usize::MAX; m];
    for (&v, &i) in &index_of {
        cap_arc[i] = net.add_arc(2 * i, 2 * i + 1, Rational::one());
        match must_flag[v] {
            Some(0) => {
                net.add_arc(source, 2 * i, big.clone());
            }
            Some(1) => {
                net.add_arc(2 * i + 1, sink, big.clone());
            }
            _ => {}
        }
    }
    for (&v, &i) in &index_of {
        for &u in &adj[v] {
            if let Some(&j) = index_of.get(&u) {
                net.add_arc(2 * i + 1, 2 * j, big.clone());
                net.add_arc(2 * j + 1, 2 * i, big.clone());
            }
        }
    }
    let res = max_flow_min_cut(&net, source, sink);
    if res.value > Rational::from_integer((flow_budget as i64).into()) {
        return None;
    }
    let mut cut_nodes: BTreeSet<usize> = res
        .cut_arcs
        .iter()
        .filter_map(|&a| cap_arc.iter().position(|&c| c == a))
        .map(|i| *usable.iter().nth(i).unwrap())
        .collect();
    cut_nodes.extend(deleted.iter().copied());
    cut_nodes.extend(conflicts.iter().copied());
    Some(cut_nodes)
}
