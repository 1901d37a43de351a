//! Concrete finite groups: an indexed element table closed under a composition law.
//!
//! Index 0 is always the identity. Element numbering is the BFS order of
//! [`Group::close_generators`], so every derived report is reproducible.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_field::IndexedField;

/// Default bound on group orders.
pub const DEFAULT_CAP: usize = 10080;

/// Groups up to this order get a dense multiplication table.
pub const TABLE_LIMIT: usize = 2048;

/// The order cap, overridable through `PG_GROUP_CAP`.
pub fn group_cap() -> usize {
    std::env::var("PG_GROUP_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// Canonical payload of a group element. Equality and hashing act on the
/// payload directly, so constructors must canonicalize before interning.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Image vector on points `0..d`.
    Perm(Box<[u16]>),
    /// Row-major square matrix of field element indices.
    Matrix(Box<[u16]>),
    /// Pair encoding used by metacyclic, dicyclic and direct-product laws.
    Pair(u32, u32),
}

/// How two payloads compose.
#[derive(Clone, Debug)]
pub enum Law {
    /// `(a*b)(x) = b(a(x))`: apply `a` first.
    Permutation { degree: usize },
    /// Matrix product; when `projective`, results are reduced modulo the
    /// scalar matrices of determinant one.
    Matrix { field: Arc<IndexedField>, dim: usize, projective: bool },
    /// `(i1,j1)(i2,j2) = (i1 + k^j1 * i2 mod n, j1 + j2 mod m)`.
    Metacyclic { n: u32, m: u32, k_powers: Vec<u32> },
    /// Generalized quaternion group on `(i mod half, j mod 2)`.
    Dicyclic { half: u32 },
    /// Componentwise composition of two groups' element indices.
    Product(Arc<Group>, Arc<Group>),
}

impl Law {
    pub fn metacyclic(n: u32, m: u32, k: u32) -> Law {
        let mut k_powers = Vec::with_capacity(m as usize);
        let mut x = 1 % n.max(1);
        for _ in 0..m {
            k_powers.push(x);
            x = (x as u64 * k as u64 % n.max(1) as u64) as u32;
        }
        Law::Metacyclic { n, m, k_powers }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Law::Permutation { degree } => GroupElement::Perm((0..*degree as u16).collect()),
            Law::Matrix { dim, .. } => {
                let mut m = vec![0u16; dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = 1;
                }
                GroupElement::Matrix(m.into())
            }
            Law::Metacyclic { .. } | Law::Dicyclic { .. } | Law::Product(..) => GroupElement::Pair(0, 0),
        }
    }

    /// Whether a payload is a well-formed element for this law.
    pub fn accepts(&self, e: &GroupElement) -> bool {
        match (self, e) {
            (Law::Permutation { degree }, GroupElement::Perm(p)) => {
                if p.len() != *degree {
                    return false;
                }
                let mut seen = vec![false; *degree];
                p.iter().all(|&x| (x as usize) < *degree && !std::mem::replace(&mut seen[x as usize], true))
            }
            (Law::Matrix { field, dim, .. }, GroupElement::Matrix(m)) => {
                m.len() == dim * dim
                    && m.iter().all(|&x| (x as u32) < field.order())
                    && determinant(field, *dim, m) != 0
            }
            (Law::Metacyclic { n, m, .. }, GroupElement::Pair(i, j)) => i < n && j < m,
            (Law::Dicyclic { half }, GroupElement::Pair(i, j)) => i < half && *j < 2,
            (Law::Product(g, h), GroupElement::Pair(i, j)) => (*i as usize) < g.order() && (*j as usize) < h.order(),
            _ => false,
        }
    }

    pub fn canonicalize(&self, e: GroupElement) -> GroupElement {
        match (self, e) {
            (Law::Matrix { field, dim, projective: true }, GroupElement::Matrix(m)) => {
                GroupElement::Matrix(projective_canonical(field, *dim, &m))
            }
            (_, e) => e,
        }
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (Law::Permutation { .. }, GroupElement::Perm(x), GroupElement::Perm(y)) => {
                GroupElement::Perm(x.iter().map(|&i| y[i as usize]).collect())
            }
            (Law::Matrix { field, dim, projective }, GroupElement::Matrix(x), GroupElement::Matrix(y)) => {
                let d = *dim;
                let mut out = vec![0u16; d * d];
                for r in 0..d {
                    for c in 0..d {
                        let mut acc = 0u16;
                        for t in 0..d {
                            acc = field.add(acc, field.mul(x[r * d + t], y[t * d + c]));
                        }
                        out[r * d + c] = acc;
                    }
                }
                if *projective {
                    GroupElement::Matrix(projective_canonical(field, d, &out))
                } else {
                    GroupElement::Matrix(out.into())
                }
            }
            (Law::Metacyclic { n, m, k_powers }, GroupElement::Pair(i1, j1), GroupElement::Pair(i2, j2)) => {
                let i = (*i1 as u64 + k_powers[*j1 as usize] as u64 * *i2 as u64) % *n as u64;
                GroupElement::Pair(i as u32, (j1 + j2) % m)
            }
            (Law::Dicyclic { half }, GroupElement::Pair(i1, j1), GroupElement::Pair(i2, j2)) => {
                let h = *half as i64;
                let twisted = if *j1 == 0 { *i2 as i64 } else { -(*i2 as i64) };
                let i = (*i1 as i64 + twisted + (*j1 * *j2) as i64 * (h / 2)).rem_euclid(h);
                GroupElement::Pair(i as u32, j1 ^ j2)
            }
            (Law::Product(g, h), GroupElement::Pair(i1, j1), GroupElement::Pair(i2, j2)) => GroupElement::Pair(
                g.compose(*i1 as usize, *i2 as usize) as u32,
                h.compose(*j1 as usize, *j2 as usize) as u32,
            ),
            _ => panic!("payload does not match composition law"),
        }
    }

    pub fn render(&self, e: &GroupElement) -> String {
        match (self, e) {
            (_, GroupElement::Perm(p)) => render_cycles(p),
            (Law::Matrix { dim, .. }, GroupElement::Matrix(m)) => {
                let rows: Vec<String> = m
                    .chunks(*dim)
                    .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                format!("[{}]", rows.join(","))
            }
            (Law::Product(g, h), GroupElement::Pair(i, j)) => {
                format!("({}, {})", g.render(*i as usize), h.render(*j as usize))
            }
            (_, GroupElement::Pair(i, j)) => format!("({i},{j})"),
            (_, GroupElement::Matrix(m)) => format!("{m:?}"),
        }
    }
}

fn determinant(field: &IndexedField, dim: usize, m: &[u16]) -> u16 {
    // Gaussian elimination over the field.
    let mut a = m.to_vec();
    let mut det = 1u16;
    for col in 0..dim {
        let Some(pivot) = (col..dim).find(|&r| a[r * dim + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for c in 0..dim {
                a.swap(pivot * dim + c, col * dim + c);
            }
            det = field.neg(det);
        }
        let pv = a[col * dim + col];
        det = field.mul(det, pv);
        let pinv = field.inv(pv);
        for r in col + 1..dim {
            let factor = field.mul(a[r * dim + col], pinv);
            if factor == 0 {
                continue;
            }
            for c in col..dim {
                let sub = field.mul(factor, a[col * dim + c]);
                a[r * dim + c] = field.add(a[r * dim + c], field.neg(sub));
            }
        }
    }
    det
}

/// Among the scalar multiples `lambda*M` with `lambda^dim = 1`, picks the one
/// whose first nonzero entry (row-major) has the smallest field index.
fn projective_canonical(field: &IndexedField, dim: usize, m: &[u16]) -> Box<[u16]> {
    let lead = m.iter().position(|&x| x != 0).expect("invertible matrix has a nonzero entry");
    let mut best: Option<Vec<u16>> = None;
    for lambda in 1..field.order() as u16 {
        let mut pw = 1u16;
        for _ in 0..dim {
            pw = field.mul(pw, lambda);
        }
        if pw != 1 {
            continue;
        }
        let cand: Vec<u16> = m.iter().map(|&x| field.mul(lambda, x)).collect();
        if best.as_ref().is_none_or(|b| cand[lead] < b[lead]) {
            best = Some(cand);
        }
    }
    best.expect("lambda = 1 always qualifies").into()
}

fn render_cycles(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{}", x + 1);
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Count of elements per element order.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ElementOrderProfile(pub BTreeMap<u32, usize>);

impl ElementOrderProfile {
    pub fn count(&self, order: u32) -> usize {
        self.0.get(&order).copied().unwrap_or(0)
    }

    pub fn orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.keys().copied()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

/// A finite group with an indexed element table. Immutable once built.
#[derive(Debug)]
pub struct Group {
    label: String,
    law: Law,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
}

impl Group {
    /// BFS closure of `gens`: identity first, then the generators in the
    /// given order, then right multiples by generators in queue order.
    pub fn close_generators(label: impl Into<String>, law: Law, gens: &[GroupElement], cap: usize) -> Result<Group> {
        if gens.is_empty() {
            return Err(Error::InvalidParameter("empty generator list".into()));
        }
        if !gens.iter().all(|g| law.accepts(g)) {
            return Err(Error::InconsistentGenerators);
        }
        let gens: Vec<GroupElement> = gens.iter().map(|g| law.canonicalize(g.clone())).collect();
        let identity = law.identity();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut queue = VecDeque::new();
        let mut push = |e: GroupElement, elements: &mut Vec<GroupElement>, queue: &mut VecDeque<u32>| -> Result<()> {
            if index.contains_key(&e) {
                return Ok(());
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            let id = elements.len() as u32;
            index.insert(e.clone(), id);
            elements.push(e);
            queue.push_back(id);
            Ok(())
        };
        for g in &gens {
            push(g.clone(), &mut elements, &mut queue)?;
        }
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = law.compose(&elements[x as usize], g);
                push(y, &mut elements, &mut queue)?;
            }
        }
        Ok(Group::finish(label.into(), law, elements, index))
    }

    /// Wraps an already closed element list whose first entry is the identity.
    pub(crate) fn from_closed(label: String, law: Law, elements: Vec<GroupElement>) -> Group {
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        Group::finish(label, law, elements, index)
    }

    fn finish(label: String, law: Law, elements: Vec<GroupElement>, index: HashMap<GroupElement, u32>) -> Group {
        let n = elements.len();
        let mut group = Group { label, law, elements, index, table: None, inverses: Vec::new(), orders: Vec::new() };
        if n <= TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[a * n + b] = group.compose_uncached(a, b);
                }
            }
            group.table = Some(table);
        }
        let mut orders = vec![1u32; n];
        let mut inverses = vec![0u32; n];
        for g in 1..n {
            let mut prev = 0usize;
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                prev = x;
                x = group.compose(x, g);
                k += 1;
            }
            orders[g] = k;
            inverses[g] = prev as u32;
        }
        group.orders = orders;
        group.inverses = inverses;
        group
    }

    fn compose_uncached(&self, a: usize, b: usize) -> u32 {
        let e = self.law.compose(&self.elements[a], &self.elements[b]);
        *self.index.get(&e).expect("element table is closed under composition")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn law(&self) -> &Law {
        &self.law
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.compose_uncached(a, b) as usize,
        }
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn render(&self, i: usize) -> String {
        self.law.render(&self.elements[i])
    }

    fn check_member(&self, g: usize) -> Result<()> {
        if g < self.order() {
            Ok(())
        } else {
            Err(Error::NotAMember)
        }
    }

    /// Least `n >= 1` with `g^n = e`.
    pub fn element_order(&self, g: usize) -> Result<u32> {
        self.check_member(g)?;
        Ok(self.orders[g])
    }

    /// Element orders indexed by element id.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// `g^0, g^1, ..., g^(o(g)-1)` in that order.
    pub fn cyclic_closure(&self, g: usize) -> Result<Vec<usize>> {
        self.check_member(g)?;
        Ok(self.powers(g))
    }

    pub(crate) fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[g] as usize);
        let mut x = 0;
        loop {
            out.push(x);
            x = self.compose(x, g);
            if x == 0 {
                break;
            }
        }
        out
    }

    /// `g^e` for any non-negative exponent.
    pub fn pow(&self, g: usize, e: u64) -> usize {
        let r = e % self.orders[g] as u64;
        (0..r).fold(0, |x, _| self.compose(x, g))
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    pub fn element_order_profile(&self) -> ElementOrderProfile {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        ElementOrderProfile(m)
    }

    /// Whether `subset` is closed under composition and inverses.
    pub fn is_closed_subset(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &s in subset {
            member[s] = true;
        }
        subset.iter().all(|&a| member[self.inverse(a)])
            && subset.iter().all(|&a| subset.iter().all(|&b| member[self.compose(a, b)]))
    }

    /// All elements whose order is a power of `p`, identity included.
    pub fn p_element_set(&self, p: u64) -> Vec<usize> {
        (0..self.order()).filter(|&g| is_power_of(self.orders[g] as u64, p)).collect()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `n = p^j` for some `j >= 0`.
pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
