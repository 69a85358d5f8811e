use oddcut::reductions::escher_paths;
use std::collections::BTreeMap;

fn main() {
    let paths = escher_paths();
    let mut edges: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for p in &paths {
        for w in p.nodes.windows(2) {
            *edges.entry((w[0].0, w[1].0)).or_insert(0) += 0;
        }
    }
    // dual load counts over P1..P6 only
    for p in &paths[..6] {
        for w in p.nodes.windows(2) {
            *edges.entry((w[0].0, w[1].0)).or_insert(0) += 1;
        }
    }
    let m = edges.len();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, &c) in &edges {
        *hist.entry(c).or_insert(0) += 1;
    }
    println!("m = {}", m);
    println!("load histogram (count of P1..P6 using edge): {:?}", hist);
    let sat: Vec<((u32,u32), usize)> = edges.iter().filter(|(_, &c)| c == 2).map(|(&e, &c)| (e, c)).collect();
    println!("edges with load 2 (x1/2 = saturated): {:?}", sat.iter().map(|(e, _)| ((e.0+1), (e.1+1))).collect::<Vec<_>>());
}
