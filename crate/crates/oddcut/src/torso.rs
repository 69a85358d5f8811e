//! Shadows of candidate deletion sets and the parity-preserving torso.
//!
//! The torso of a DAG with respect to a node set `Z` removes `Z` and
//! reconnects the survivors: a direct edge for every pair joined by an odd
//! path running through `Z`, and a protected two-edge gadget node for every
//! pair joined by an even such path. Path parities between surviving nodes
//! are preserved exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::graph::{node, parity_reach, reachable_from, Dag, DagEdge, Graph, NodeId, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsoError {
    TerminalInZ { id: NodeId },
}

impl fmt::Display for TorsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsoError::TerminalInZ { id } => {
                write!(f, "torso set contains terminal {}", id)
            }
        }
    }
}

impl std::error::Error for TorsoError {}

/// `f_G(M) = V(G \ M) \ R_{G \ M}(T)`: nodes with no `T -> v` path avoiding `M`.
pub fn forward_shadow(dag: &Dag, terminals: &BTreeSet<NodeId>, m: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
    let removed = dag.delete_nodes(m);
    let reach = reachable_from(&Graph::Dag(removed), terminals);
    dag.nodes()
        .filter(|v| !m.contains(v) && !reach.contains(v))
        .collect()
}

/// `r_G(M)`: nodes from which no path to `T` avoids `M`. Equals the forward
/// shadow in the edge-reversed graph.
pub fn reverse_shadow(dag: &Dag, terminals: &BTreeSet<NodeId>, m: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
    forward_shadow(&dag.reversed(), terminals, m)
}

/// The full shadow `s_G(M)`: union of forward and reverse shadows.
pub fn shadow(dag: &Dag, terminals: &BTreeSet<NodeId>, m: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
    let mut s = forward_shadow(dag, terminals, m);
    s.extend(reverse_shadow(dag, terminals, m));
    s
}

/// A set is thin when no member lies in the reverse shadow of the others.
pub fn is_thin(dag: &Dag, terminals: &BTreeSet<NodeId>, m: &BTreeSet<NodeId>) -> bool {
    m.iter().all(|&v| {
        let mut rest = m.clone();
        rest.remove(&v);
        !reverse_shadow(dag, terminals, &rest).contains(&v)
    })
}

/// Result of the torso operation. New gadget nodes get fresh ids appended
/// after all original ids; removed nodes stay in the id space as isolated
/// nodes, so surviving ids are stable.
#[derive(Debug, Clone)]
pub struct TorsoResult {
    pub graph: Dag,
    /// `V'^inf`: protected survivors plus every new gadget node.
    pub protected: BTreeSet<NodeId>,
    /// Gadget node -> the surviving pair (u, v) it connects.
    pub new_node_origin: BTreeMap<NodeId, (NodeId, NodeId)>,
}

/// Parity-preserving torso of `dag` with respect to `z`.
///
/// For each ordered surviving pair `(u, v)`, parities of connections through
/// `z` are read off a parity-reachability pass restricted to the subgraph
/// induced by `z + {u, v}` with edges into `u` and out of `v` dropped. The
/// direct edge `u -> v`, when already present, is not duplicated by an odd
/// connection.
pub fn torso(
    dag: &Dag,
    v_inf: &BTreeSet<NodeId>,
    z: &BTreeSet<NodeId>,
    terminals: &BTreeSet<NodeId>,
) -> Result<TorsoResult, TorsoError> {
    if let Some(&t) = z.iter().find(|v| terminals.contains(v)) {
        return Err(TorsoError::TerminalInZ { id: t });
    }
    let n = dag.node_count();
    let survivors: Vec<NodeId> = dag.nodes().filter(|v| !z.contains(v)).collect();

    // Edges of the torso start as the surviving edges of the input.
    let mut edges: Vec<DagEdge> = dag
        .edges()
        .iter()
        .filter(|e| !z.contains(&e.tail) && !z.contains(&e.head))
        .cloned()
        .collect();
    let mut direct: BTreeSet<(NodeId, NodeId)> =
        edges.iter().map(|e| (e.tail, e.head)).collect();

    let mut new_node_origin = BTreeMap::new();
    let mut next_id = n;

    if !z.is_empty() {
        for &u in &survivors {
            // One parity pass per source u: keep edges leaving u into z and
            // edges inside z, plus edges from z to any surviving sink. Paths
            // from u in this subgraph have all internal nodes in z.
            let sub_edges: Vec<(usize, usize, Rational, u32)> = dag
                .edges()
                .iter()
                .filter(|e| (e.tail == u || z.contains(&e.tail)) && e.head != u)
                .filter(|e| z.contains(&e.tail) || z.contains(&e.head))
                .map(|e| (e.tail.index(), e.head.index(), e.cost.clone(), e.multiplicity))
                .collect();
            let sub = Dag::with_costs(n, &sub_edges).expect("subgraph of a DAG is a DAG");
            let reach = parity_reach(&sub, &[u].iter().copied().collect());
            for &v in &survivors {
                if v == u {
                    continue;
                }
                let flags = reach[v.index()];
                if flags.odd && !direct.contains(&(u, v)) {
                    edges.push(DagEdge {
                        tail: u,
                        head: v,
                        cost: Rational::one(),
                        multiplicity: 1,
                    });
                    direct.insert((u, v));
                }
                if flags.even {
                    // even connections have length >= 2 here since u != v
                    let x = node(next_id);
                    next_id += 1;
                    new_node_origin.insert(x, (u, v));
                    edges.push(DagEdge {
                        tail: u,
                        head: x,
                        cost: Rational::one(),
                        multiplicity: 1,
                    });
                    edges.push(DagEdge {
                        tail: x,
                        head: v,
                        cost: Rational::one(),
                        multiplicity: 1,
                    });
                }
            }
        }
    }

    let tuples: Vec<(usize, usize, Rational, u32)> = edges
        .iter()
        .map(|e| (e.tail.index(), e.head.index(), e.cost.clone(), e.multiplicity))
        .collect();
    let graph = Dag::with_costs(next_id, &tuples).expect("torso of a DAG is a DAG");

    let mut protected: BTreeSet<NodeId> =
        v_inf.iter().copied().filter(|v| !z.contains(v)).collect();
    protected.extend(new_node_origin.keys().copied());

    Ok(TorsoResult {
        graph,
        protected,
        new_node_origin,
    })
}
