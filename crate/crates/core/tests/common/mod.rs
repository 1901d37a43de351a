#![allow(dead_code)]

use pg_core::constructors::{build_group_with_cap, parse_group_spec};
use pg_core::group::{Group, DEFAULT_CAP};
use pg_core::patterns::{catalog, Pattern};
use pg_core::power_graph::Graph;

pub fn group(spec: &str) -> Group {
    build_group_with_cap(&parse_group_spec(spec).unwrap(), DEFAULT_CAP).unwrap()
}

/// Bit index of the pair `s < t` in a labelled adjacency mask.
fn pair_bit(s: usize, t: usize) -> usize {
    t * (t - 1) / 2 + s
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for n in 1..=k {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Brute-force induced-subgraph oracle: enumerates every vertex subset of
/// size up to 5 and looks its labelled adjacency mask up in a table of all
/// relabellings of each pattern.
pub struct NaiveOracle {
    patterns: Vec<Pattern>,
    /// `tables[k][mask]` has bit `i` set when `mask` is a relabelling of
    /// pattern `i` (which has `k` vertices).
    tables: Vec<Vec<u16>>,
}

impl NaiveOracle {
    pub fn new(patterns: Vec<Pattern>) -> NaiveOracle {
        assert!(patterns.len() <= 16);
        let mut tables: Vec<Vec<u16>> = (0..=5).map(|k| vec![0u16; 1 << (k * (k.max(1) - 1) / 2)]).collect();
        for (i, p) in patterns.iter().enumerate() {
            let k = p.k();
            for pi in permutations(k) {
                let mut mask = 0usize;
                for (a, b) in p.edges() {
                    let (s, t) = (pi[a].min(pi[b]), pi[a].max(pi[b]));
                    mask |= 1 << pair_bit(s, t);
                }
                tables[k][mask] |= 1 << i;
            }
        }
        NaiveOracle { patterns, tables }
    }

    pub fn catalog() -> NaiveOracle {
        NaiveOracle::new(catalog())
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    /// Presence flag for every pattern, in order.
    pub fn presence(&self, g: &Graph) -> Vec<bool> {
        let mut found = 0u16;
        let mut chosen = Vec::with_capacity(5);
        self.walk(g, 0, 0, &mut chosen, &mut found);
        (0..self.patterns.len()).map(|i| found >> i & 1 == 1).collect()
    }

    fn walk(&self, g: &Graph, start: usize, mask: usize, chosen: &mut Vec<usize>, found: &mut u16) {
        let d = chosen.len();
        *found |= self.tables[d][mask];
        if d == 5 {
            return;
        }
        for v in start..g.n() {
            let mut m = mask;
            for (s, &u) in chosen.iter().enumerate() {
                if g.has_edge(u, v) {
                    m |= 1 << pair_bit(s, d);
                }
            }
            chosen.push(v);
            self.walk(g, v + 1, m, chosen, found);
            chosen.pop();
        }
    }
}

/// Every induced cycle of length at least 4, by subset enumeration.
/// Returns the set of hole lengths. Only for small graphs.
pub fn brute_hole_lengths(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 16);
    let mut lengths = Vec::new();
    for set in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
        if vs.len() < 4 {
            continue;
        }
        let induced = g.induced(&vs);
        let two_regular = (0..vs.len()).all(|v| induced.degree(v) == 2);
        if two_regular && is_connected(&induced) {
            lengths.push(vs.len());
        }
    }
    lengths.sort_unstable();
    lengths.dedup();
    lengths
}

fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).ones() {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Graph on `n` vertices from a bit vector over pairs `(s, t)`, `s < t`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for t in 1..n {
        for s in 0..t {
            if bits.get(i).copied().unwrap_or(false) {
                edges.push((s, t));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
