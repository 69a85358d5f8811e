//! Node separators, domination, and important-separator enumeration.
//!
//! An `X -> Y` separator is a node set disjoint from the protected nodes (and
//! from `X` and `Y`) whose removal kills every `X -> Y` path. A separator
//! `M'` dominates `M` when it is no larger and strictly extends the set of
//! nodes reachable from `X` after deletion. Important separators are the
//! minimal, undominated ones; at most `4^k` of size at most `k` exist.

use std::collections::BTreeSet;
use std::fmt;

use crate::flow::{max_flow_min_cut, FlowNetwork};
use crate::graph::{reachable_from, Dag, Graph, NodeId, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    ProtectedViolation { id: NodeId },
    NotASeparator,
}

impl fmt::Display for SeparatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparatorError::ProtectedViolation { id } => {
                write!(f, "candidate set contains protected node {}", id)
            }
            SeparatorError::NotASeparator => write!(f, "input set is not a separator"),
        }
    }
}

impl std::error::Error for SeparatorError {}

/// True iff `G \ M` has no path from `X` to `Y`. Errors when `M` touches the
/// protected set.
pub fn is_separator(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    m: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
) -> Result<bool, SeparatorError> {
    if let Some(&p) = m.iter().find(|v| v_inf.contains(v)) {
        return Err(SeparatorError::ProtectedViolation { id: p });
    }
    Ok(separates(dag, x, y, m))
}

fn separates(dag: &Dag, x: &BTreeSet<NodeId>, y: &BTreeSet<NodeId>, m: &BTreeSet<NodeId>) -> bool {
    if x.iter().any(|v| m.contains(v)) || y.iter().any(|v| m.contains(v)) {
        return false;
    }
    let pruned = dag.delete_nodes(m);
    let reach = reachable_from(&Graph::Dag(pruned), x);
    y.iter().all(|t| !reach.contains(t))
}

/// Outcome of a minimum-separator computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinSeparator {
    Separator(BTreeSet<NodeId>),
    /// Separation is impossible without deleting protected nodes (or X/Y).
    Infeasible,
}

/// Split network for node cuts: each node becomes an in/mid/out chain with
/// the node's capacity on the in->mid arc; protected nodes and `X`/`Y`
/// members get effectively infinite capacity there. When `reversed`, every
/// arc is flipped and the roles of `X` and `Y` swap, which makes the
/// source-side min cut of the result the cut *farthest* from `X`.
struct SplitNetwork {
    net: FlowNetwork,
    cap_arc_of_node: Vec<usize>,
    source: usize,
    sink: usize,
    big: Rational,
}

fn split_network(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
    reversed: bool,
) -> SplitNetwork {
    let n = dag.node_count();
    let big = Rational::from_integer(((n + 1) as i64).into());
    // ids: in = 3v, mid = 3v+1, out = 3v+2; source = 3n, sink = 3n+1
    let mut net = FlowNetwork::new(3 * n + 2);
    let source = 3 * n;
    let sink = 3 * n + 1;
    let mut cap_arc_of_node = vec![usize::MAX; n];
    for v in 0..n {
        let id = NodeId(v as u32);
        let protected = v_inf.contains(&id) || x.contains(&id) || y.contains(&id);
        let cap = if protected {
            big.clone()
        } else {
            Rational::from_integer(1.into())
        };
        if reversed {
            cap_arc_of_node[v] = net.add_arc(3 * v + 1, 3 * v, cap);
            net.add_arc(3 * v + 2, 3 * v + 1, big.clone());
        } else {
            cap_arc_of_node[v] = net.add_arc(3 * v, 3 * v + 1, cap);
            net.add_arc(3 * v + 1, 3 * v + 2, big.clone());
        }
    }
    for e in dag.edges() {
        if reversed {
            net.add_arc(3 * e.head.index(), 3 * e.tail.index() + 2, big.clone());
        } else {
            net.add_arc(3 * e.tail.index() + 2, 3 * e.head.index(), big.clone());
        }
    }
    for &s in x {
        if reversed {
            net.add_arc(3 * s.index(), sink, big.clone());
        } else {
            net.add_arc(source, 3 * s.index(), big.clone());
        }
    }
    for &t in y {
        if reversed {
            net.add_arc(source, 3 * t.index() + 2, big.clone());
        } else {
            net.add_arc(3 * t.index() + 2, sink, big.clone());
        }
    }
    SplitNetwork {
        net,
        cap_arc_of_node,
        source,
        sink,
        big,
    }
}

fn cut_to_nodes(cut_arcs: &[usize], cap_arc_of_node: &[usize]) -> BTreeSet<NodeId> {
    cut_arcs
        .iter()
        .filter_map(|&a| cap_arc_of_node.iter().position(|&m| m == a))
        .map(|v| NodeId(v as u32))
        .collect()
}

/// Minimum-cardinality `X -> Y` separator avoiding `v_inf`, via node
/// splitting and max-flow.
pub fn min_separator(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
) -> MinSeparator {
    let split = split_network(dag, x, y, v_inf, false);
    let res = max_flow_min_cut(&split.net, split.source, split.sink);
    if res.value >= split.big {
        return MinSeparator::Infeasible;
    }
    MinSeparator::Separator(cut_to_nodes(&res.cut_arcs, &split.cap_arc_of_node))
}

/// The minimum separator with maximal `R_{G \ S}(X)` among all minimum
/// separators (the unique min cut pushed toward `Y`). `None` when separation
/// is infeasible, `Some(empty)` when `X` cannot reach `Y` at all.
fn farthest_min_separator(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
) -> Option<BTreeSet<NodeId>> {
    let split = split_network(dag, x, y, v_inf, true);
    let res = max_flow_min_cut(&split.net, split.source, split.sink);
    if res.value >= split.big {
        return None;
    }
    Some(cut_to_nodes(&res.cut_arcs, &split.cap_arc_of_node))
}

/// `M'` dominates `M`: both are `X -> Y` separators, `|M'| <= |M|` and
/// `R_{G \ M}(X)` is a strict subset of `R_{G \ M'}(X)`.
pub fn dominates(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    m_prime: &BTreeSet<NodeId>,
    m: &BTreeSet<NodeId>,
) -> Result<bool, SeparatorError> {
    if !separates(dag, x, y, m_prime) || !separates(dag, x, y, m) {
        return Err(SeparatorError::NotASeparator);
    }
    if m_prime.len() > m.len() {
        return Ok(false);
    }
    let reach_m = reachable_from(&Graph::Dag(dag.delete_nodes(m)), x);
    let reach_mp = reachable_from(&Graph::Dag(dag.delete_nodes(m_prime)), x);
    Ok(reach_m.is_subset(&reach_mp) && reach_m != reach_mp)
}

/// All important `v -> T` separators of size at most `k`.
///
/// Candidates come from the standard include/push branching on the farthest
/// min cut; the final filter keeps exactly the minimal undominated sets.
pub fn enumerate_important_separators(
    dag: &Dag,
    v: NodeId,
    terminals: &BTreeSet<NodeId>,
    k: usize,
    v_inf: &BTreeSet<NodeId>,
) -> Vec<BTreeSet<NodeId>> {
    let x: BTreeSet<NodeId> = [v].into_iter().collect();
    let candidates = branch_candidates(dag, &x, terminals, k, v_inf);
    // keep minimal separators only
    let minimal: Vec<BTreeSet<NodeId>> = candidates
        .into_iter()
        .filter(|s| s.len() <= k)
        .filter(|s| separates(dag, &x, terminals, s))
        .filter(|s| is_minimal_separator(dag, &x, terminals, s))
        .collect();
    // drop every candidate dominated by another minimal candidate
    let mut important: Vec<BTreeSet<NodeId>> = minimal
        .iter()
        .filter(|s| {
            !minimal
                .iter()
                .any(|other| *other != **s && dominates(dag, &x, terminals, other, s).unwrap())
        })
        .cloned()
        .collect();
    important.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    important
}

fn is_minimal_separator(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    s: &BTreeSet<NodeId>,
) -> bool {
    s.iter().all(|&u| {
        let mut smaller = s.clone();
        smaller.remove(&u);
        !separates(dag, x, y, &smaller)
    })
}

/// Candidate separators for the include/push branching. Every important
/// `(X, Y)`-separator of size at most `k` appears among the results; extras
/// are possible and get filtered by the caller.
fn branch_candidates(
    dag: &Dag,
    x: &BTreeSet<NodeId>,
    y: &BTreeSet<NodeId>,
    k: usize,
    v_inf: &BTreeSet<NodeId>,
) -> BTreeSet<BTreeSet<NodeId>> {
    let mut out = BTreeSet::new();
    let cut = match farthest_min_separator(dag, x, y, v_inf) {
        None => return out,
        Some(c) => c,
    };
    if cut.is_empty() {
        // X no longer reaches Y: only the empty separator remains.
        out.insert(BTreeSet::new());
        return out;
    }
    if cut.len() > k {
        return out;
    }
    let u = *cut.iter().next().unwrap();
    // branch 1: u joins the separator
    if k >= 1 {
        let removed: BTreeSet<NodeId> = [u].into_iter().collect();
        let pruned = dag.delete_nodes(&removed);
        for s in branch_candidates(&pruned, x, y, k - 1, v_inf) {
            let mut full = s;
            full.insert(u);
            out.insert(full);
        }
    }
    // branch 2: u moves to the X side
    let mut x2 = x.clone();
    x2.insert(u);
    out.extend(branch_candidates(dag, &x2, y, k, v_inf));
    out
}

/// Lemma-style solution pushing: given a solution `M` and a node `v` in its
/// reverse shadow such that no important `v -> T` separator lies inside `M`,
/// produce `M' = (M \ M1) + M2` where `M1` is a minimal `v -> T` separator
/// inside `M` and `M2` is an important separator dominating `M1`.
#[derive(Debug, Clone)]
pub struct PushedSolution {
    pub m0: BTreeSet<NodeId>,
    pub m1: BTreeSet<NodeId>,
    pub m2: BTreeSet<NodeId>,
    pub m_prime: BTreeSet<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PushError {
    /// `v` is not in the reverse shadow of `M`.
    NotInReverseShadow,
    /// `M` already contains an important `v -> T` separator.
    HypothesisFails,
}

impl fmt::Display for PushError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PushError::NotInReverseShadow => write!(f, "node is not in the reverse shadow"),
            PushError::HypothesisFails => {
                write!(f, "solution already contains an important separator for this node")
            }
        }
    }
}

impl std::error::Error for PushError {}

pub fn push_solution(
    dag: &Dag,
    terminals: &BTreeSet<NodeId>,
    m: &BTreeSet<NodeId>,
    v: NodeId,
    v_inf: &BTreeSet<NodeId>,
) -> Result<PushedSolution, PushError> {
    let rev_shadow = crate::torso::reverse_shadow(dag, terminals, m);
    if !rev_shadow.contains(&v) {
        return Err(PushError::NotInReverseShadow);
    }
    let x: BTreeSet<NodeId> = [v].into_iter().collect();
    // M0: members of M with a v -> u path internally disjoint from M
    let m0: BTreeSet<NodeId> = m
        .iter()
        .copied()
        .filter(|&u| has_internally_disjoint_path(dag, v, u, m))
        .collect();
    debug_assert!(separates(dag, &x, terminals, &m0));
    // minimal sub-separator of M0, stripping smallest ids first
    let mut m1 = m0.clone();
    loop {
        let mut removed_any = false;
        for &u in m1.clone().iter() {
            let mut smaller = m1.clone();
            smaller.remove(&u);
            if separates(dag, &x, terminals, &smaller) {
                m1 = smaller;
                removed_any = true;
                break;
            }
        }
        if !removed_any {
            break;
        }
    }
    // important separator dominating M1
    let important = enumerate_important_separators(dag, v, terminals, m1.len(), v_inf);
    if important.contains(&m1) {
        return Err(PushError::HypothesisFails);
    }
    let m2 = important
        .into_iter()
        .find(|cand| dominates(dag, &x, terminals, cand, &m1).unwrap_or(false))
        .ok_or(PushError::HypothesisFails)?;
    let mut m_prime: BTreeSet<NodeId> = m.difference(&m1).copied().collect();
    m_prime.extend(m2.iter().copied());
    Ok(PushedSolution {
        m0,
        m1,
        m2,
        m_prime,
    })
}

/// Does `M` contain an important `v -> T` separator? Used by the shadow
/// container sampler and by tests of the pushing lemma.
pub fn has_important_separator_within(
    dag: &Dag,
    v: NodeId,
    terminals: &BTreeSet<NodeId>,
    m: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
) -> bool {
    enumerate_important_separators(dag, v, terminals, m.len(), v_inf)
        .iter()
        .any(|s| s.is_subset(m))
}

fn has_internally_disjoint_path(dag: &Dag, v: NodeId, u: NodeId, m: &BTreeSet<NodeId>) -> bool {
    // BFS from v through nodes outside M, allowed to end at u in M.
    let adj = dag.out_neighbors();
    let mut seen = vec![false; dag.node_count()];
    let mut stack = vec![v];
    seen[v.index()] = true;
    while let Some(w) = stack.pop() {
        for &next in &adj[w.index()] {
            if next == u {
                return true;
            }
            if !seen[next.index()] && !m.contains(&next) {
                seen[next.index()] = true;
                stack.push(next);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn set(ids: &[u32]) -> BTreeSet<NodeId> {
        ids.iter().map(|&i| NodeId(i)).collect()
    }

    #[test]
    fn separator_detects_blocked_paths() {
        // x -> a -> y and x -> b -> y
        let dag = Dag::new(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        assert!(is_separator(&dag, &set(&[0]), &set(&[3]), &set(&[1, 2]), &set(&[])).unwrap());
        assert!(!is_separator(&dag, &set(&[0]), &set(&[3]), &set(&[1]), &set(&[])).unwrap());
    }

    #[test]
    fn separator_rejects_protected_members() {
        let dag = Dag::new(3, &[(0, 1), (1, 2)]).unwrap();
        let err =
            is_separator(&dag, &set(&[0]), &set(&[2]), &set(&[1]), &set(&[1])).unwrap_err();
        assert_eq!(err, SeparatorError::ProtectedViolation { id: NodeId(1) });
    }

    #[test]
    fn empty_m_with_direct_edge_is_not_separator() {
        let dag = Dag::new(2, &[(0, 1)]).unwrap();
        assert!(!is_separator(&dag, &set(&[0]), &set(&[1]), &set(&[]), &set(&[])).unwrap());
    }

    #[test]
    fn min_separator_of_disconnected_pair_is_empty() {
        let dag = Dag::new(2, &[]).unwrap();
        assert_eq!(
            min_separator(&dag, &set(&[0]), &set(&[1]), &set(&[])),
            MinSeparator::Separator(BTreeSet::new())
        );
    }

    #[test]
    fn min_separator_menger_two_paths() {
        let dag = Dag::new(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        match min_separator(&dag, &set(&[0]), &set(&[3]), &set(&[])) {
            MinSeparator::Separator(s) => assert_eq!(s.len(), 2),
            MinSeparator::Infeasible => panic!("expected separator"),
        }
    }

    #[test]
    fn min_separator_infeasible_on_direct_edge() {
        let dag = Dag::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            min_separator(&dag, &set(&[0]), &set(&[1]), &set(&[])),
            MinSeparator::Infeasible
        );
    }

    #[test]
    fn domination_is_strict() {
        // chain x -> a -> b -> y: {b} dominates {a}, not vice versa, and no
        // set dominates itself.
        let dag = Dag::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let x = set(&[0]);
        let y = set(&[3]);
        assert!(dominates(&dag, &x, &y, &set(&[2]), &set(&[1])).unwrap());
        assert!(!dominates(&dag, &x, &y, &set(&[1]), &set(&[2])).unwrap());
        assert!(!dominates(&dag, &x, &y, &set(&[1]), &set(&[1])).unwrap());
    }

    #[test]
    fn domination_requires_separators() {
        let dag = Dag::new(3, &[(0, 1), (1, 2)]).unwrap();
        let err = dominates(&dag, &set(&[0]), &set(&[2]), &set(&[]), &set(&[1])).unwrap_err();
        assert_eq!(err, SeparatorError::NotASeparator);
    }

    #[test]
    fn chain_has_unique_important_separator() {
        // v -> a -> t, k = 1
        let dag = Dag::new(3, &[(0, 1), (1, 2)]).unwrap();
        let seps = enumerate_important_separators(&dag, NodeId(0), &set(&[2]), 1, &set(&[]));
        assert_eq!(seps, vec![set(&[1])]);
    }

    #[test]
    fn longer_chain_keeps_only_pushed_separator() {
        // v -> a -> b -> t, k = 1: {a} is dominated by {b}
        let dag = Dag::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let seps = enumerate_important_separators(&dag, NodeId(0), &set(&[3]), 1, &set(&[]));
        assert_eq!(seps, vec![set(&[2])]);
    }

    #[test]
    fn already_separated_yields_empty_separator() {
        let dag = Dag::new(3, &[(0, 1)]).unwrap();
        let seps = enumerate_important_separators(&dag, NodeId(0), &set(&[2]), 2, &set(&[]));
        assert_eq!(seps, vec![BTreeSet::new()]);
    }

    fn random_dag(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Dag {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((i, j));
                }
            }
        }
        Dag::new(n, &edges).unwrap()
    }

    // Brute-force oracle: all minimal v -> T separators of size <= k that are
    // not dominated by any other minimal separator of size <= k.
    fn important_separators_oracle(
        dag: &Dag,
        v: NodeId,
        terminals: &BTreeSet<NodeId>,
        k: usize,
        v_inf: &BTreeSet<NodeId>,
    ) -> Vec<BTreeSet<NodeId>> {
        let x: BTreeSet<NodeId> = [v].into_iter().collect();
        let free: Vec<NodeId> = dag
            .nodes()
            .filter(|u| !v_inf.contains(u) && *u != v && !terminals.contains(u))
            .collect();
        let mut minimal = Vec::new();
        for mask in 0..(1u32 << free.len()) {
            let s: BTreeSet<NodeId> = free
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &u)| u)
                .collect();
            if s.len() > k || !separates(dag, &x, terminals, &s) {
                continue;
            }
            if is_minimal_separator(dag, &x, terminals, &s) {
                minimal.push(s);
            }
        }
        let mut important: Vec<BTreeSet<NodeId>> = minimal
            .iter()
            .filter(|s| {
                !minimal
                    .iter()
                    .any(|o| *o != **s && dominates(dag, &x, terminals, o, s).unwrap())
            })
            .cloned()
            .collect();
        important.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        important
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..150 {
            let n = rng.gen_range(3..=8);
            let dag = random_dag(&mut rng, n, 0.35);
            let v = NodeId(rng.gen_range(0..n as u32));
            let mut terminals = BTreeSet::new();
            while terminals.len() < 2 {
                let t = NodeId(rng.gen_range(0..n as u32));
                if t != v {
                    terminals.insert(t);
                }
            }
            let k = rng.gen_range(0..=3);
            let got = enumerate_important_separators(&dag, v, &terminals, k, &terminals.clone());
            let want = important_separators_oracle(&dag, v, &terminals, k, &terminals.clone());
            assert_eq!(got, want, "n={} v={} T={:?} k={}", n, v, terminals, k);
            assert!(got.len() <= 4usize.pow(k as u32));
        }
    }

    #[test]
    fn important_separators_are_minimal_and_undominated() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..80 {
            let n = rng.gen_range(3..=8);
            let dag = random_dag(&mut rng, n, 0.4);
            let v = NodeId(0);
            let terminals = set(&[(n - 1) as u32]);
            if terminals.contains(&v) {
                continue;
            }
            let x: BTreeSet<NodeId> = [v].into_iter().collect();
            let seps = enumerate_important_separators(&dag, v, &terminals, 3, &terminals.clone());
            for s in &seps {
                assert!(separates(&dag, &x, &terminals, s));
                assert!(is_minimal_separator(&dag, &x, &terminals, s));
                for o in &seps {
                    if o != s {
                        assert!(!dominates(&dag, &x, &terminals, o, s).unwrap());
                    }
                }
            }
        }
    }
}
