//! Induced-subgraph detection for small forbidden patterns, chordality and
//! hole search.
//!
//! Pattern search runs on the twin quotient of the input graph. A class may
//! be used as often as it has members, and two pattern vertices placed in the
//! same class are adjacent exactly when the class is a clique. Witnesses are
//! lifted back to original vertex ids.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::power_graph::{twin_reduce, Graph, TwinReducedGraph};

/// Largest pattern size, and the twin cap used for searches.
pub const MAX_PATTERN: usize = 5;

pub const PATTERN_NAMES: [&str; 11] =
    ["P4", "P5", "P5bar", "C3", "C4", "C5", "2K2", "diamond", "co-diamond", "P2uP3", "P2uP3bar"];

/// A small graph on vertices `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    k: usize,
    adj: [u8; MAX_PATTERN],
}

impl Pattern {
    pub fn new(name: impl Into<String>, k: usize, edges: &[(usize, usize)]) -> Pattern {
        assert!(k <= MAX_PATTERN, "patterns have at most {MAX_PATTERN} vertices");
        let mut adj = [0u8; MAX_PATTERN];
        for &(u, v) in edges {
            assert!(u != v && u < k && v < k, "bad pattern edge ({u}, {v})");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Pattern { name: name.into(), k, adj }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.k).flat_map(|u| (u + 1..self.k).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v))).collect()
    }

    /// Complement, named after its catalog entry when there is one.
    pub fn complement(&self) -> Pattern {
        let edges: Vec<_> = (0..self.k)
            .flat_map(|u| (u + 1..self.k).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
            .collect();
        let mut c = Pattern::new(format!("co-{}", self.name), self.k, &edges);
        if let Some(p) = catalog().into_iter().find(|p| p.k == c.k && is_isomorphic(p, &c)) {
            c.name = p.name;
        }
        c
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(self.k, &self.edges())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn is_isomorphic(a: &Pattern, b: &Pattern) -> bool {
    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, k - 1);
                out.push(q);
            }
        }
        out
    }
    a.k == b.k
        && permutations(a.k)
            .iter()
            .any(|pi| (0..a.k).all(|u| (0..a.k).all(|v| u == v || a.has_edge(u, v) == b.has_edge(pi[u], pi[v]))))
}

fn complement_edges(k: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let p = Pattern::new("", k, edges);
    (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).filter(|&(u, v)| !p.has_edge(u, v)).collect()
}

/// Looks up a catalog pattern by name.
pub fn pattern(name: &str) -> Result<Pattern> {
    const P5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4)];
    const P2UP3: &[(usize, usize)] = &[(0, 1), (2, 3), (3, 4)];
    let p = match name {
        "P4" => Pattern::new(name, 4, &[(0, 1), (1, 2), (2, 3)]),
        "P5" => Pattern::new(name, 5, P5),
        "P5bar" => Pattern::new(name, 5, &complement_edges(5, P5)),
        "C3" => Pattern::new(name, 3, &[(0, 1), (1, 2), (0, 2)]),
        "C4" => Pattern::new(name, 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        "C5" => Pattern::new(name, 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        "2K2" => Pattern::new(name, 4, &[(0, 1), (2, 3)]),
        "diamond" => Pattern::new(name, 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        "co-diamond" => Pattern::new(name, 4, &[(2, 3)]),
        "P2uP3" => Pattern::new(name, 5, P2UP3),
        "P2uP3bar" => Pattern::new(name, 5, &complement_edges(5, P2UP3)),
        other => return Err(Error::UnknownPattern(other.to_string())),
    };
    Ok(p)
}

pub fn catalog() -> Vec<Pattern> {
    PATTERN_NAMES.iter().map(|n| pattern(n).expect("catalog name")).collect()
}

/// Parses a comma-separated list of pattern names.
pub fn parse_pattern_list(list: &str) -> Result<Vec<Pattern>> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(pattern).collect()
}

/// Vertices of the input graph realizing a pattern or a hole.
///
/// For a pattern, `vertices[i]` is the image of pattern vertex `i`. For a
/// hole, the vertices are listed in cycle order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
}

impl Witness {
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Witness {
        let labels = vertices.iter().map(|&v| graph.label(v).to_string()).collect();
        Witness { vertices, labels }
    }
}

/// Checks that `w` induces `p` under the map `i -> w.vertices[i]`.
pub fn verify_witness(graph: &Graph, p: &Pattern, w: &Witness) -> bool {
    let vs = &w.vertices;
    if vs.len() != p.k() || vs.iter().any(|&v| v >= graph.n()) {
        return false;
    }
    (0..p.k()).all(|i| {
        (i + 1..p.k()).all(|j| vs[i] != vs[j] && graph.has_edge(vs[i], vs[j]) == p.has_edge(i, j))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    fn accepts(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Checks that `w` is an induced cycle of length at least 4 with the given parity.
pub fn verify_hole(graph: &Graph, w: &Witness, parity: Parity) -> bool {
    let vs = &w.vertices;
    let len = vs.len();
    if len < 4 || !parity.accepts(len) || vs.iter().any(|&v| v >= graph.n()) {
        return false;
    }
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            vs[i] != vs[j] && graph.has_edge(vs[i], vs[j]) == consecutive
        })
    })
}

/// Search state shared by all queries on one graph.
pub struct Detector<'g> {
    graph: &'g Graph,
    reduced: TwinReducedGraph,
    /// Classes a vertex may take when adjacent to a vertex of class `c`.
    adj_mask: Vec<FixedBitSet>,
    /// Classes a vertex may take when non-adjacent to a vertex of class `c`.
    non_mask: Vec<FixedBitSet>,
}

impl<'g> Detector<'g> {
    pub fn new(graph: &'g Graph) -> Detector<'g> {
        let reduced = twin_reduce(graph, MAX_PATTERN).expect("cap is positive");
        let m = reduced.num_classes();
        let mut adj_mask = Vec::with_capacity(m);
        let mut non_mask = Vec::with_capacity(m);
        for c in 0..m {
            let clique = reduced.classes[c].is_clique();
            let mut a = reduced.quotient.neighbors(c).clone();
            let mut na = a.clone();
            na.toggle_range(..);
            a.set(c, clique);
            na.set(c, !clique);
            adj_mask.push(a);
            non_mask.push(na);
        }
        Detector { graph, reduced, adj_mask, non_mask }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn reduced(&self) -> &TwinReducedGraph {
        &self.reduced
    }

    /// Smallest embedding in (search order, class id) lexicographic order.
    pub fn find(&self, p: &Pattern) -> Option<Witness> {
        let k = p.k();
        let m = self.reduced.num_classes();
        if k == 0 {
            return Some(Witness { vertices: vec![], labels: vec![] });
        }
        if m == 0 {
            return None;
        }
        let order = search_order(p);
        let mut assign = vec![0usize; k];
        let mut used = vec![0u8; m];
        let mut scratch = vec![FixedBitSet::with_capacity(m); k];
        if !self.extend(p, &order, 0, &mut assign, &mut used, &mut scratch) {
            return None;
        }
        let mut taken = vec![0usize; m];
        let mut vertices = vec![0usize; k];
        for &pv in &order {
            let c = assign[pv];
            vertices[pv] = self.reduced.classes[c].members[taken[c]];
            taken[c] += 1;
        }
        let w = Witness::new(self.graph, vertices);
        debug_assert!(verify_witness(self.graph, p, &w));
        Some(w)
    }

    fn extend(
        &self,
        p: &Pattern,
        order: &[usize],
        pos: usize,
        assign: &mut [usize],
        used: &mut [u8],
        scratch: &mut [FixedBitSet],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let cands = &mut scratch[pos];
        if pos == 0 {
            cands.insert_range(..);
        } else {
            cands.clone_from(self.mask(p, v, order[0], assign));
            for &u in &order[1..pos] {
                cands.intersect_with(self.mask(p, v, u, assign));
            }
        }
        let cands: Vec<usize> = cands.ones().collect();
        for c in cands {
            if used[c] as usize >= self.reduced.classes[c].size() {
                continue;
            }
            assign[v] = c;
            used[c] += 1;
            if self.extend(p, order, pos + 1, assign, used, scratch) {
                return true;
            }
            used[c] -= 1;
        }
        false
    }

    #[inline]
    fn mask(&self, p: &Pattern, v: usize, u: usize, assign: &[usize]) -> &FixedBitSet {
        if p.has_edge(v, u) {
            &self.adj_mask[assign[u]]
        } else {
            &self.non_mask[assign[u]]
        }
    }

    /// An induced cycle of length in `[min_len, max_len]` with the given parity.
    ///
    /// A hole contains at most one vertex of a clique class and at most two
    /// of an independent class, so the search runs on that expansion.
    pub fn find_hole(&self, query: HoleQuery) -> Option<Witness> {
        let (h, ids) = self.reduced.expanded_with(self.graph, 1, 2);
        let max_len = query.max_len.unwrap_or(h.n()).min(h.n());
        let min_len = query.min_len.max(4);
        if max_len < min_len {
            return None;
        }
        let mut search = HoleSearch { h: &h, parity: query.parity, min_len, max_len, path: Vec::new() };
        for s in 0..h.n() {
            if let Some(cycle) = search.search_from(s) {
                let w = Witness::new(self.graph, cycle.into_iter().map(|v| ids[v]).collect());
                debug_assert!(verify_hole(self.graph, &w, query.parity));
                return Some(w);
            }
        }
        None
    }
}

/// Pattern vertices ordered so that each one after the first is adjacent to
/// as many already placed vertices as possible; ties go to higher degree,
/// then lower index.
fn search_order(p: &Pattern) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::with_capacity(p.k());
    let mut placed = 0u8;
    while order.len() < p.k() {
        let next = (0..p.k())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((p.adj[v] & placed).count_ones(), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    order
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoleQuery {
    pub parity: Parity,
    pub min_len: usize,
    pub max_len: Option<usize>,
}

impl Default for HoleQuery {
    fn default() -> Self {
        HoleQuery { parity: Parity::Any, min_len: 4, max_len: None }
    }
}

struct HoleSearch<'a> {
    h: &'a Graph,
    parity: Parity,
    min_len: usize,
    max_len: usize,
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    /// Holes whose smallest vertex is `s`.
    fn search_from(&mut self, s: usize) -> Option<Vec<usize>> {
        self.path.clear();
        self.path.push(s);
        let blocked = FixedBitSet::with_capacity(self.h.n());
        self.dfs(s, &blocked)
    }

    /// `blocked` holds the neighbors of interior path vertices, which the
    /// next vertex must avoid.
    fn dfs(&mut self, s: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
        let last = *self.path.last().expect("non-empty path");
        let len = self.path.len();
        let mut next_blocked = blocked.clone();
        if len > 1 {
            next_blocked.union_with(self.h.neighbors(last));
        }
        let cands: Vec<usize> = self.h.neighbors(last).ones().filter(|&w| w > s && !blocked.contains(w)).collect();
        for w in cands {
            if self.path.contains(&w) {
                continue;
            }
            let closes = len > 1 && self.h.has_edge(w, s);
            if closes {
                let cycle_len = len + 1;
                // Orientation is fixed by requiring path[1] < w.
                if cycle_len >= self.min_len
                    && cycle_len <= self.max_len
                    && self.parity.accepts(cycle_len)
                    && self.path[1] < w
                {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Some(cycle);
                }
                continue;
            }
            if len + 2 > self.max_len {
                continue;
            }
            self.path.push(w);
            if let Some(c) = self.dfs(s, &next_blocked) {
                return Some(c);
            }
            self.path.pop();
        }
        None
    }
}

pub fn find_induced_pattern(graph: &Graph, p: &Pattern) -> Option<Witness> {
    Detector::new(graph).find(p)
}

pub fn find_hole(graph: &Graph, query: HoleQuery) -> Option<Witness> {
    Detector::new(graph).find_hole(query)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessEntry {
    pub pattern: String,
    pub free: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub free: bool,
    pub entries: Vec<FreenessEntry>,
}

impl FreenessReport {
    /// Witness for the first pattern that was found.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.entries.iter().find_map(|e| e.witness.as_ref())
    }
}

impl Detector<'_> {
    pub fn is_free(&self, patterns: &[Pattern]) -> FreenessReport {
        let entries: Vec<FreenessEntry> = patterns
            .iter()
            .map(|p| {
                let witness = self.find(p);
                FreenessEntry { pattern: p.name().to_string(), free: witness.is_none(), witness }
            })
            .collect();
        FreenessReport { free: entries.iter().all(|e| e.free), entries }
    }

    /// Free of C3, C5 and 2K2.
    pub fn is_chain_graph(&self) -> (bool, Option<Witness>) {
        let r = self.is_free(&named(&["C3", "C5", "2K2"]));
        (r.free, r.first_witness().cloned())
    }

    /// Free of P4.
    pub fn is_cograph(&self) -> (bool, Option<Witness>) {
        let w = self.find(&named(&["P4"])[0]);
        (w.is_none(), w)
    }
}

fn named(names: &[&str]) -> Vec<Pattern> {
    names.iter().map(|n| pattern(n).expect("catalog name")).collect()
}

pub fn is_free(graph: &Graph, patterns: &[Pattern]) -> FreenessReport {
    Detector::new(graph).is_free(patterns)
}

pub fn is_chain_graph(graph: &Graph) -> (bool, Option<Witness>) {
    Detector::new(graph).is_chain_graph()
}

pub fn is_cograph(graph: &Graph) -> (bool, Option<Witness>) {
    Detector::new(graph).is_cograph()
}

/// Maximum cardinality search order, first visited vertex first.
fn mcs_order(graph: &Graph) -> Vec<usize> {
    let n = graph.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("vertex");
        visited[v] = true;
        order.push(v);
        for u in graph.neighbors(v).ones() {
            weight[u] += 1;
        }
    }
    order
}

/// Chordality via maximum cardinality search and a perfect elimination
/// ordering check; a hole is returned when the graph is not chordal.
pub fn is_chordal(graph: &Graph) -> (bool, Option<Witness>) {
    let n = graph.n();
    let order = mcs_order(graph);
    // Eliminating in reverse visit order, the earlier-visited neighbors of v
    // must form a clique. It suffices to check them against the latest
    // visited one among them.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut failure = None;
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = graph.neighbors(v).ones().filter(|&u| pos[u] < pos[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) else {
            continue;
        };
        if let Some(&w) = earlier.iter().find(|&&w| w != parent && !graph.has_edge(parent, w)) {
            failure = Some((v, parent, w));
            break;
        }
    }
    let Some((v, x, y)) = failure else {
        return (true, None);
    };
    let cycle = hole_through(graph, v, x, y).or_else(|| {
        (0..n).find_map(|v| {
            let nb: Vec<usize> = graph.neighbors(v).ones().collect();
            nb.iter().enumerate().find_map(|(i, &x)| {
                nb[i + 1..].iter().find_map(|&y| if graph.has_edge(x, y) { None } else { hole_through(graph, v, x, y) })
            })
        })
    });
    let w = cycle.map(|c| Witness::new(graph, c));
    debug_assert!(w.as_ref().is_some_and(|w| verify_hole(graph, w, Parity::Any)));
    (false, w)
}

/// `v, x, ..., y` where the tail is a shortest `x`-`y` path avoiding the
/// rest of `N[v]`. With `x`, `y` non-adjacent neighbors of `v` this is a hole.
fn hole_through(graph: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = graph.n();
    let mut avoid = graph.neighbors(v).clone();
    avoid.insert(v);
    avoid.set(x, false);
    avoid.set(y, false);
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([x]);
    prev[x] = x;
    while let Some(u) = queue.pop_front() {
        if u == y {
            let mut path = vec![y];
            let mut cur = y;
            while cur != x {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for w in graph.neighbors(u).ones() {
            if prev[w] == usize::MAX && !avoid.contains(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_group_with_cap, parse_group_spec};
    use crate::group::{Group, DEFAULT_CAP};
    use crate::power_graph::build_power_graph;

    fn group(s: &str) -> Group {
        build_group_with_cap(&parse_group_spec(s).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn pg(s: &str) -> Graph {
        build_power_graph(&group(s), false)
    }

    #[test]
    fn catalog_shapes() {
        let sizes: Vec<(usize, usize)> = catalog().iter().map(|p| (p.k(), p.edges().len())).collect();
        assert_eq!(sizes, [(4, 3), (5, 4), (5, 6), (3, 3), (4, 4), (5, 5), (4, 2), (4, 5), (4, 1), (5, 3), (5, 7)]);
        assert_eq!(pattern("house"), Err(Error::UnknownPattern("house".into())));
    }

    #[test]
    fn catalog_complements() {
        let pairs = [
            ("P5", "P5bar"),
            ("diamond", "co-diamond"),
            ("P2uP3", "P2uP3bar"),
            ("C4", "2K2"),
            ("P4", "P4"),
            ("C5", "C5"),
        ];
        for (a, b) in pairs {
            assert_eq!(pattern(a).unwrap().complement().name(), b);
            assert_eq!(pattern(b).unwrap().complement().name(), a);
        }
        assert_eq!(pattern("C3").unwrap().complement().name(), "co-C3");
    }

    #[test]
    fn raw_graphs() {
        let c4 = Graph::cycle(4);
        let (chordal, hole) = is_chordal(&c4);
        assert!(!chordal);
        assert_eq!(hole.unwrap().vertices.len(), 4);
        let even = HoleQuery { parity: Parity::Even, ..HoleQuery::default() };
        let odd = HoleQuery { parity: Parity::Odd, ..HoleQuery::default() };
        assert_eq!(find_hole(&Graph::cycle(6), even).unwrap().vertices.len(), 6);
        assert!(find_hole(&Graph::cycle(5), even).is_none());
        assert_eq!(find_hole(&Graph::cycle(5), odd).unwrap().vertices.len(), 5);
        let six_only = HoleQuery { min_len: 6, ..even };
        assert!(find_hole(&c4, six_only).is_none());
        assert!(is_chordal(&Graph::complete(5)).0);
    }

    #[test]
    fn four_cycle_through_false_twins() {
        // Vertices 1 and 3 share the open neighborhood {0, 2}.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)]);
        let w = find_hole(&g, HoleQuery::default()).unwrap();
        assert!(verify_hole(&g, &w, Parity::Any));
        assert_eq!(w.vertices.len(), 4);
    }

    fn by_label(g: &Group, label: &str) -> usize {
        (0..g.order()).find(|&i| g.render(i) == label).unwrap()
    }

    fn orders_of(g: &Group, w: &Witness) -> Vec<u32> {
        w.vertices.iter().map(|&v| g.orders()[v]).collect()
    }

    #[test]
    fn s6_p5() {
        let g = group("S6");
        let p = build_power_graph(&g, false);
        let p5 = pattern("P5").unwrap();
        let w = find_induced_pattern(&p, &p5).unwrap();
        assert!(verify_witness(&p, &p5, &w));
        let path = ["(5 6)", "(1 2 3)(5 6)", "(1 2 3)", "(1 2 3)(4 5)", "(4 5)"];
        let injected = Witness::new(&p, path.iter().map(|l| by_label(&g, l)).collect());
        assert!(verify_witness(&p, &p5, &injected));
        assert_eq!(orders_of(&g, &injected), [2, 6, 3, 6, 2]);
    }

    #[test]
    fn c12_and_c36() {
        let p5 = pattern("P5").unwrap();
        assert!(find_induced_pattern(&pg("C12"), &p5).is_none());
        let g = group("C36");
        let p = build_power_graph(&g, false);
        let w = find_induced_pattern(&p, &p5).unwrap();
        assert!(verify_witness(&p, &p5, &w));
        let injected = Witness::new(&p, [9, 18, 6, 12, 4].iter().map(|&e| g.pow(1, e)).collect());
        assert!(verify_witness(&p, &p5, &injected));
        assert_eq!(orders_of(&g, &injected), [4, 2, 6, 3, 9]);
        assert!(is_chordal(&pg("C12")).0);
        let (chordal, hole) = is_chordal(&p);
        assert!(!chordal);
        assert!(verify_hole(&p, &hole.unwrap(), Parity::Any));
    }

    #[test]
    fn c6_diamond() {
        let g = group("C6");
        let p = build_power_graph(&g, false);
        let d = pattern("diamond").unwrap();
        let w = find_induced_pattern(&p, &d).unwrap();
        assert!(verify_witness(&p, &d, &w));
        let injected = Witness::new(&p, [1, 5, 2, 3].iter().map(|&e| g.pow(1, e)).collect());
        assert!(verify_witness(&p, &d, &injected));
    }

    #[test]
    fn cographs() {
        assert!(is_cograph(&pg("A5")).0);
        assert!(is_cograph(&pg("C6")).0);
        let (co, w) = is_cograph(&pg("C12"));
        assert!(!co);
        assert!(verify_witness(&pg("C12"), &pattern("P4").unwrap(), &w.unwrap()));
    }

    #[test]
    fn chain_graphs() {
        let proper = |s: &str| build_power_graph(&group(s), true);
        assert!(is_chain_graph(&proper("S3")).0);
        let (chain, w) = is_chain_graph(&proper("C9"));
        assert!(!chain);
        assert!(verify_witness(&proper("C9"), &pattern("C3").unwrap(), &w.unwrap()));
        let (chain, w) = is_chain_graph(&proper("C3xC3"));
        assert!(!chain);
        assert!(verify_witness(&proper("C3xC3"), &pattern("2K2").unwrap(), &w.unwrap()));
    }

    #[test]
    fn alternating_freeness() {
        let pats = [pattern("P5").unwrap(), pattern("P5bar").unwrap()];
        assert!(is_free(&pg("A6"), &pats).free);
        let r = is_free(&pg("A7"), &pats);
        assert!(!r.free);
        assert!(!r.entries[0].free);
    }

    #[test]
    fn complete_graph_is_free_of_non_edges() {
        let k = pg("C7");
        for p in catalog() {
            let has_non_edge = p.edges().len() < p.k() * (p.k() - 1) / 2;
            if has_non_edge {
                assert!(find_induced_pattern(&k, &p).is_none(), "{}", p.name());
            }
        }
    }

    #[test]
    fn degenerate_graphs() {
        let one = pg("C1");
        for p in catalog() {
            assert!(find_induced_pattern(&one, &p).is_none());
        }
        assert!(is_chordal(&one).0);
        let empty = Graph::new(vec![]);
        assert!(find_induced_pattern(&empty, &pattern("C3").unwrap()).is_none());
        assert!(is_chordal(&empty).0);
        assert!(find_hole(&empty, HoleQuery::default()).is_none());
    }

    #[test]
    fn pattern_list_parsing() {
        let ps = parse_pattern_list("P5, P5bar").unwrap();
        assert_eq!(ps.len(), 2);
        assert!(parse_pattern_list("P5,nope").is_err());
    }
}
