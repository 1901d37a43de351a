//! Power graphs, prime graphs, twin reduction and graph export.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::classifiers::factorize;
use crate::error::{Error, Result};
use crate::group::Group;

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Edgeless graph on `labels.len()` vertices.
    pub fn new(labels: Vec<String>) -> Graph {
        let n = labels.len();
        Graph { rows: vec![FixedBitSet::with_capacity(n); n], labels }
    }

    /// Graph on `0..n` labelled by index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new((0..n).map(|i| i.to_string()).collect());
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| self.rows[u].ones().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut rows = self.rows.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(v, false);
        }
        debug_assert!(rows.iter().all(|r| r.len() == n));
        Graph { rows, labels: self.labels.clone() }
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::new(labels);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.rows.iter().all(|r| r.count_ones(..) + 1 == n)
    }
}

/// `P(G)`, or `P*(G)` when `proper` (the identity vertex removed).
///
/// Vertex `i` is element `i`, shifted down by one in the proper graph.
pub fn build_power_graph(g: &Group, proper: bool) -> Graph {
    let n = g.order();
    let shift = usize::from(proper);
    let labels = (shift..n).map(|i| g.render(i)).collect();
    let mut graph = Graph::new(labels);
    for v in shift..n {
        for u in g.powers(v) {
            if u >= shift && u != v {
                graph.add_edge(u - shift, v - shift);
            }
        }
    }
    graph
}

/// Vertices are the primes dividing `|G|`; `p ~ q` iff some element order is
/// divisible by `pq`.
pub fn build_prime_graph(g: &Group) -> Graph {
    let primes: Vec<u64> = factorize(g.order() as u64).primes().collect();
    let orders = g.element_order_profile();
    let mut graph = Graph::new(primes.iter().map(u64::to_string).collect());
    for (i, &p) in primes.iter().enumerate() {
        for (j, &q) in primes.iter().enumerate().skip(i + 1) {
            if orders.orders().any(|o| (o as u64).is_multiple_of(p * q)) {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinKind {
    /// Equal closed neighborhoods; members are pairwise adjacent.
    Clique,
    /// Equal open neighborhoods; members are pairwise non-adjacent.
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

impl TwinClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_clique(&self) -> bool {
        self.kind == TwinKind::Clique
    }
}

/// Quotient of a graph by its twin classes.
///
/// Twins are interchangeable in any induced-subgraph question, so keeping
/// `min(size, cap)` members of each class preserves the presence of every
/// induced subgraph on at most `cap` vertices.
#[derive(Clone, Debug)]
pub struct TwinReducedGraph {
    pub quotient: Graph,
    pub classes: Vec<TwinClass>,
    pub cap: usize,
}

impl TwinReducedGraph {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Members retained for class `c`.
    pub fn retained(&self, c: usize) -> &[usize] {
        let m = &self.classes[c].members;
        &m[..m.len().min(self.cap)]
    }

    /// Graph on the retained members of every class, plus the original id of
    /// each vertex.
    pub fn expanded(&self, original: &Graph) -> (Graph, Vec<usize>) {
        self.expanded_with(original, self.cap, self.cap)
    }

    /// Like [`Self::expanded`] with separate caps for clique and independent
    /// classes.
    pub fn expanded_with(&self, original: &Graph, clique_cap: usize, independent_cap: usize) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = self
            .classes
            .iter()
            .flat_map(|c| {
                let cap = if c.is_clique() { clique_cap } else { independent_cap };
                c.members.iter().copied().take(cap)
            })
            .collect();
        (original.induced(&ids), ids)
    }
}

/// Partitions vertices into true-twin classes (equal closed neighborhoods),
/// then groups the remaining singletons into false-twin classes (equal open
/// neighborhoods). No vertex has both kinds of nontrivial twin, so the result
/// is a partition. Classes are ordered by their smallest member.
pub fn twin_reduce(graph: &Graph, cap: usize) -> Result<TwinReducedGraph> {
    if cap < 1 {
        return Err(Error::BadTwinCap);
    }
    let n = graph.n();
    let closed = |v: usize| {
        let mut r = graph.neighbors(v).clone();
        r.insert(v);
        r
    };
    let mut by_closed: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
    for v in 0..n {
        by_closed.entry(closed(v)).or_default().push(v);
    }
    let mut classes: Vec<TwinClass> = Vec::new();
    let mut by_open: HashMap<&FixedBitSet, Vec<usize>> = HashMap::new();
    for members in by_closed.into_values() {
        if members.len() > 1 {
            classes.push(TwinClass { members, kind: TwinKind::Clique });
        } else {
            by_open.entry(graph.neighbors(members[0])).or_default().push(members[0]);
        }
    }
    for members in by_open.into_values() {
        let kind = if members.len() > 1 { TwinKind::Independent } else { TwinKind::Clique };
        classes.push(TwinClass { members, kind });
    }
    for c in &mut classes {
        c.members.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c.members[0]);

    let reps: Vec<usize> = classes.iter().map(|c| c.members[0]).collect();
    let quotient = graph.induced(&reps);
    Ok(TwinReducedGraph { quotient, classes, cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    labels: &'a [String],
}

pub fn export_graph(graph: &Graph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => {
            let doc = JsonGraph {
                n: graph.n(),
                edges: graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                labels: graph.labels(),
            };
            let mut out = serde_json::to_vec(&doc).expect("graph serializes");
            out.push(b'\n');
            out
        }
        ExportFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for (v, label) in graph.labels().iter().enumerate() {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
            }
            for (u, v) in graph.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push_str("}\n");
            out.into_bytes()
        }
    }
}
