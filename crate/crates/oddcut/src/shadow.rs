//! Candidate families of shadow-covering sets.
//!
//! The reverse-shadow container promises: for every thin set `S` of size at
//! most `k` whose covered nodes each have an important separator toward the
//! terminals inside `S`, some member `Z` of the family contains all covered
//! nodes and avoids `S`. The exhaustive strategy takes every subset of the
//! free nodes and satisfies this unconditionally at desk scale. The
//! randomized strategy guesses candidate solutions `W` and emits the set of
//! nodes having an important separator inside `W`; guessing `W = S` (or the
//! union of the relevant separators) produces a correct member, and the
//! repetition schedule makes a miss across all draws unlikely.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{has_odd_terminal_path, Dag, Graph, Instance, NodeId};
use crate::separators::enumerate_important_separators;
use crate::torso::{forward_shadow, reverse_shadow};

/// Free-node count bound for the exhaustive strategy.
pub const EXHAUSTIVE_FREE_CAP: usize = 16;

/// Scale constant `c` in the randomized repetition schedule
/// `r = c * 4^k * k * ceil(log2 n)`.
pub const DEFAULT_REPETITION_SCALE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Randomized,
    Exhaustive,
}

/// A family of candidate covering sets, every member disjoint from the
/// protected nodes.
#[derive(Debug, Clone)]
pub struct CoverFamily {
    pub sets: Vec<BTreeSet<NodeId>>,
    pub strategy: Strategy,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShadowError {
    ExhaustiveTooLarge { free: usize, cap: usize },
}

impl fmt::Display for ShadowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShadowError::ExhaustiveTooLarge { free, cap } => {
                write!(f, "{} free nodes exceed the exhaustive cap of {}", free, cap)
            }
        }
    }
}

impl std::error::Error for ShadowError {}

fn free_pool(dag: &Dag, v_inf: &BTreeSet<NodeId>) -> Vec<NodeId> {
    dag.nodes().filter(|v| !v_inf.contains(v)).collect()
}

fn repetitions(n: usize, k: usize) -> usize {
    let log = (usize::BITS - n.max(2).next_power_of_two().leading_zeros()) as usize;
    DEFAULT_REPETITION_SCALE * 4usize.pow(k as u32) * k * log
}

/// All subsets of `pool` as ordered sets, smallest first.
fn powerset(pool: &[NodeId]) -> Vec<BTreeSet<NodeId>> {
    assert!(pool.len() <= EXHAUSTIVE_FREE_CAP);
    let mut sets = Vec::with_capacity(1 << pool.len());
    for mask in 0..(1u32 << pool.len()) {
        sets.push(
            pool.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << *i) != 0)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    sort_family(&mut sets);
    sets
}

fn sort_family(sets: &mut Vec<BTreeSet<NodeId>>) {
    sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    sets.dedup();
}

/// Family covering reverse shadows toward the terminals.
pub fn reverse_shadow_container(
    dag: &Dag,
    terminals: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
    k: usize,
    strategy: Strategy,
    seed: u64,
) -> Result<CoverFamily, ShadowError> {
    let pool = free_pool(dag, v_inf);
    let sets = match strategy {
        Strategy::Exhaustive => {
            if pool.len() > EXHAUSTIVE_FREE_CAP {
                return Err(ShadowError::ExhaustiveTooLarge {
                    free: pool.len(),
                    cap: EXHAUSTIVE_FREE_CAP,
                });
            }
            powerset(&pool)
        }
        Strategy::Randomized => randomized_family(dag, terminals, v_inf, &pool, k, seed),
    };
    Ok(CoverFamily {
        sets,
        strategy,
        seed,
    })
}

fn randomized_family(
    dag: &Dag,
    terminals: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
    pool: &[NodeId],
    k: usize,
    seed: u64,
) -> Vec<BTreeSet<NodeId>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // solution guesses, deduplicated; the empty guess is always present
    let mut guesses: BTreeSet<BTreeSet<NodeId>> = BTreeSet::new();
    guesses.insert(BTreeSet::new());
    for _ in 0..repetitions(dag.node_count(), k) {
        let size = rng.gen_range(0..=k.min(pool.len()));
        let guess: BTreeSet<NodeId> = sample(&mut rng, pool.len(), size)
            .into_iter()
            .map(|i| pool[i])
            .collect();
        guesses.insert(guess);
    }
    // important separators per free node, shared across guesses
    let separators_of: Vec<Vec<BTreeSet<NodeId>>> = pool
        .iter()
        .map(|&v| enumerate_important_separators(dag, v, terminals, k, v_inf))
        .collect();
    let mut sets: Vec<BTreeSet<NodeId>> = guesses
        .into_iter()
        .map(|w| {
            pool.iter()
                .enumerate()
                .filter(|(i, _)| separators_of[*i].iter().any(|s| s.is_subset(&w)))
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    sort_family(&mut sets);
    sets
}

/// Two-stage container: forward shadows are reverse shadows of the reversed
/// graph, so run the reverse container once per direction and emit unions.
pub fn shadow_container(
    dag: &Dag,
    terminals: &BTreeSet<NodeId>,
    v_inf: &BTreeSet<NodeId>,
    k: usize,
    strategy: Strategy,
    seed: u64,
) -> Result<CoverFamily, ShadowError> {
    let sets = match strategy {
        Strategy::Exhaustive => {
            // both stages are powersets of complementary pools, so the union
            // family is exactly the powerset of the free nodes
            let pool = free_pool(dag, v_inf);
            if pool.len() > EXHAUSTIVE_FREE_CAP {
                return Err(ShadowError::ExhaustiveTooLarge {
                    free: pool.len(),
                    cap: EXHAUSTIVE_FREE_CAP,
                });
            }
            powerset(&pool)
        }
        Strategy::Randomized => {
            let stage1 = reverse_shadow_container(dag, terminals, v_inf, k, strategy, seed)?;
            let reversed = dag.reversed();
            let mut out: BTreeSet<BTreeSet<NodeId>> = BTreeSet::new();
            for (i, z1) in stage1.sets.iter().enumerate() {
                let mut blocked = v_inf.clone();
                blocked.extend(z1.iter().copied());
                let stage2 = reverse_shadow_container(
                    &reversed,
                    terminals,
                    &blocked,
                    k,
                    strategy,
                    seed.wrapping_add(i as u64 + 1),
                )?;
                for z2 in stage2.sets {
                    let mut union = z1.clone();
                    union.extend(z2.iter().copied());
                    out.insert(union);
                }
            }
            let mut sets: Vec<BTreeSet<NodeId>> = out.into_iter().collect();
            sort_family(&mut sets);
            sets
        }
    };
    Ok(CoverFamily {
        sets,
        strategy,
        seed,
    })
}

/// Brute-force canonical optimum: among all minimum odd multiway cuts, pick
/// the one maximizing `|reverse + forward shadow + M|`, then `|reverse
/// shadow|`, then the lexicographically smallest. Test support for the
/// solution-pushing chain.
pub fn canonical_optimum(inst: &Instance) -> Option<BTreeSet<NodeId>> {
    let dag = match &inst.graph {
        Graph::Dag(d) => d,
        Graph::Undir(_) => return None,
    };
    let free: Vec<NodeId> = inst.free_nodes().into_iter().collect();
    for size in 0..=free.len() {
        let mut best: Option<(usize, usize, BTreeSet<NodeId>)> = None;
        let mut acc = Vec::new();
        collect_feasible(
            dag,
            &inst.terminals,
            &free,
            size,
            0,
            &mut acc,
            &mut |candidate| {
                let r = reverse_shadow(dag, &inst.terminals, candidate);
                let f = forward_shadow(dag, &inst.terminals, candidate);
                let mut union = r.clone();
                union.extend(f.iter().copied());
                union.extend(candidate.iter().copied());
                let key = (union.len(), r.len(), candidate.clone());
                let better = match &best {
                    None => true,
                    Some((u, rr, s)) => {
                        (key.0, key.1) > (*u, *rr)
                            || ((key.0, key.1) == (*u, *rr) && key.2 < *s)
                    }
                };
                if better {
                    best = Some(key);
                }
            },
        );
        if let Some((_, _, sol)) = best {
            return Some(sol);
        }
    }
    None
}

fn collect_feasible(
    dag: &Dag,
    terminals: &BTreeSet<NodeId>,
    free: &[NodeId],
    size: usize,
    start: usize,
    acc: &mut Vec<NodeId>,
    found: &mut impl FnMut(&BTreeSet<NodeId>),
) {
    if acc.len() == size {
        let candidate: BTreeSet<NodeId> = acc.iter().copied().collect();
        if !has_odd_terminal_path(&dag.delete_nodes(&candidate), terminals) {
            found(&candidate);
        }
        return;
    }
    for i in start..free.len() {
        if free.len() - i < size - acc.len() {
            break;
        }
        acc.push(free[i]);
        collect_feasible(dag, terminals, free, size, i + 1, acc, found);
        acc.pop();
    }
}
