//! Exact max-flow / min-cut on directed networks with rational capacities.
//!
//! Shortest-augmenting-path (Edmonds-Karp) with arcs scanned in insertion
//! order, so runs are deterministic. Instances here are desk-scale; exactness
//! matters more than speed.

use num_traits::Zero;

use crate::graph::Rational;

/// A flow network under construction. Arc ids are dense and stable.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    node_count: usize,
    // forward arc 2i, residual arc 2i+1
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: Rational,
}

impl FlowNetwork {
    pub fn new(node_count: usize) -> Self {
        FlowNetwork {
            node_count,
            arcs: Vec::new(),
            out: vec![Vec::new(); node_count],
        }
    }

    /// Adds a directed arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: Rational) -> usize {
        assert!(from < self.node_count && to < self.node_count);
        assert!(cap >= Rational::zero());
        let id = self.arcs.len() / 2;
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: Rational::zero(),
        });
        id
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }
}

/// Result of a max-flow computation.
#[derive(Debug, Clone)]
pub struct MaxFlowResult {
    pub value: Rational,
    /// Arc ids crossing from the source side to the sink side of the residual
    /// reachability partition; this is a minimum cut.
    pub cut_arcs: Vec<usize>,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

/// Runs Edmonds-Karp from `source` to `sink` and reports the minimum cut.
pub fn max_flow_min_cut(network: &FlowNetwork, source: usize, sink: usize) -> MaxFlowResult {
    assert_ne!(source, sink);
    let mut arcs = network.arcs.clone();
    let mut value = Rational::zero();
    loop {
        // BFS for a shortest augmenting path; neighbours in arc-id order.
        let mut pred: Vec<Option<usize>> = vec![None; network.node_count];
        let mut seen = vec![false; network.node_count];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        'bfs: while let Some(v) = queue.pop_front() {
            for &aid in &network.out[v] {
                let arc = &arcs[aid];
                if arc.cap.is_zero() || seen[arc.to] {
                    continue;
                }
                seen[arc.to] = true;
                pred[arc.to] = Some(aid);
                if arc.to == sink {
                    break 'bfs;
                }
                queue.push_back(arc.to);
            }
        }
        if !seen[sink] {
            // residual reachability gives the cut
            let cut_arcs = (0..arcs.len() / 2)
                .filter(|&i| {
                    let from = arcs[2 * i + 1].to;
                    let to = arcs[2 * i].to;
                    seen[from] && !seen[to] && !network.arcs[2 * i].cap.is_zero()
                })
                .collect();
            return MaxFlowResult {
                value,
                cut_arcs,
                source_side: seen,
            };
        }
        // bottleneck along the path
        let mut bottleneck: Option<Rational> = None;
        let mut v = sink;
        while v != source {
            let aid = pred[v].unwrap();
            let cap = arcs[aid].cap.clone();
            bottleneck = Some(match bottleneck {
                None => cap,
                Some(b) => {
                    if cap < b {
                        cap
                    } else {
                        b
                    }
                }
            });
            v = arcs[aid ^ 1].to;
        }
        let delta = bottleneck.unwrap();
        let mut v = sink;
        while v != source {
            let aid = pred[v].unwrap();
            arcs[aid].cap -= delta.clone();
            arcs[aid ^ 1].cap += delta.clone();
            v = arcs[aid ^ 1].to;
        }
        value += delta;
    }
}
