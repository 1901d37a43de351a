//! Number-theoretic helpers, group structure flags and the right-hand side
//! predicates of each characterization.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{is_power_of, Group};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization, primes ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn num_primes(&self) -> usize {
        self.0.len()
    }

    pub fn multiplicity(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, a)| a)
    }

    /// The `p`-part of the factored number.
    pub fn part(&self, p: u64) -> u64 {
        p.pow(self.multiplicity(p))
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, a)| p.pow(a)).product()
    }
}

pub fn factorize(mut n: u64) -> Factorization {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut a = 0;
        while n.is_multiple_of(d) {
            n /= d;
            a += 1;
        }
        if a > 0 {
            out.push((d, a));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}

/// `Some((p, a))` when `n = p^a` with `a >= 1`; `None` otherwise, including `n < 2`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).0.as_slice() {
        &[(p, a)] => Some((p, a)),
        _ => None,
    }
}

/// True iff `n` is 1, a prime power, or `p^a * q` for distinct primes.
pub fn is_admissible_cyclic_order(n: u64) -> bool {
    let f = factorize(n);
    match f.0.as_slice() {
        [] | [_] => true,
        [(_, a), (_, b)] => *a == 1 || *b == 1,
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowInfo {
    pub order: u64,
    /// The set of `p`-elements is closed, so the Sylow subgroup is unique.
    pub normal: bool,
    pub cyclic: bool,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub order: u64,
    pub factorization: Factorization,
    pub is_p_group: bool,
    pub is_cyclic: bool,
    pub is_nilpotent: bool,
    pub is_eppo: bool,
    pub is_epo: bool,
    pub is_exponent2_2group: bool,
    pub exponent: u64,
    pub sylow: BTreeMap<u64, SylowInfo>,
    /// Distinct element orders, ascending.
    pub element_orders: Vec<u64>,
}

impl StructureFlags {
    pub fn normal_sylow(&self) -> BTreeMap<u64, bool> {
        self.sylow.iter().map(|(&p, s)| (p, s.normal)).collect()
    }

    pub fn num_primes(&self) -> usize {
        self.factorization.num_primes()
    }

    fn sylow_of(&self, p: u64) -> Option<&SylowInfo> {
        self.sylow.get(&p)
    }

    pub fn has_element_of_order(&self, o: u64) -> bool {
        self.element_orders.binary_search(&o).is_ok()
    }

    /// Cyclic of prime-power order; the trivial group counts.
    pub fn is_cyclic_prime_power(&self) -> bool {
        self.is_cyclic && self.num_primes() <= 1
    }
}

pub fn compute_structure_flags(g: &Group) -> StructureFlags {
    let order = g.order() as u64;
    let factorization = factorize(order);
    let orders = g.orders();
    let exponent = g.exponent();
    let non_identity = || orders.iter().copied().filter(|&o| o > 1);
    let is_eppo = non_identity().all(|o| is_prime_power(o as u64).is_some());
    let is_epo = non_identity().all(|o| is_prime(o as u64));
    let mut sylow = BTreeMap::new();
    for p in factorization.primes() {
        let max_p_order = orders.iter().map(|&o| o as u64).filter(|&o| is_power_of(o, p)).max().unwrap_or(1);
        let part = factorization.part(p);
        sylow.insert(
            p,
            SylowInfo {
                order: part,
                normal: g.is_closed_subset(&g.p_element_set(p)),
                cyclic: max_p_order == part,
                exponent: max_p_order,
            },
        );
    }
    StructureFlags {
        order,
        is_p_group: factorization.num_primes() <= 1,
        is_cyclic: orders.iter().any(|&o| o as u64 == order),
        is_nilpotent: sylow.values().all(|s| s.normal),
        is_eppo,
        is_epo,
        is_exponent2_2group: order > 1 && order.is_power_of_two() && exponent == 2,
        exponent,
        factorization,
        sylow,
        element_orders: g.element_order_profile().orders().map(u64::from).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Chain,
    P5Nilp,
    P5P5bNilp,
    P5P5bProduct,
    Sn,
    An,
    Psl2,
    Sz,
    P2P3Nilp,
    P2P3NonNilp,
    Diamond,
    EvenHoleDiamond,
    DiamondCoDiamond,
    CographNullPrime,
    ChordalNilp,
    CographNilp,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::Chain,
        TheoremId::P5Nilp,
        TheoremId::P5P5bNilp,
        TheoremId::P5P5bProduct,
        TheoremId::Sn,
        TheoremId::An,
        TheoremId::Psl2,
        TheoremId::Sz,
        TheoremId::P2P3Nilp,
        TheoremId::P2P3NonNilp,
        TheoremId::Diamond,
        TheoremId::EvenHoleDiamond,
        TheoremId::DiamondCoDiamond,
        TheoremId::CographNullPrime,
        TheoremId::ChordalNilp,
        TheoremId::CographNilp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Chain => "T-CHAIN",
            TheoremId::P5Nilp => "T-P5-NILP",
            TheoremId::P5P5bNilp => "T-P5P5B-NILP",
            TheoremId::P5P5bProduct => "T-P5P5B-PRODUCT",
            TheoremId::Sn => "T-SN",
            TheoremId::An => "T-AN",
            TheoremId::Psl2 => "T-PSL2",
            TheoremId::Sz => "T-SZ",
            TheoremId::P2P3Nilp => "T-P2P3-NILP",
            TheoremId::P2P3NonNilp => "T-P2P3-NONNILP",
            TheoremId::Diamond => "T-DIAMOND",
            TheoremId::EvenHoleDiamond => "T-EVENHOLE-DIAMOND",
            TheoremId::DiamondCoDiamond => "T-DIAMOND-CODIAMOND",
            TheoremId::CographNullPrime => "S-COGRAPH-NULLPRIME",
            TheoremId::ChordalNilp => "S-CHORDAL-NILP",
            TheoremId::CographNilp => "S-COGRAPH-NILP",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Inputs to [`rhs_predicate`]. Which variant a theorem accepts is fixed.
#[derive(Clone, Copy, Debug)]
pub enum RhsArgs<'a> {
    Group(&'a StructureFlags),
    Pair(&'a StructureFlags, &'a StructureFlags),
    /// Degree `n` of `S_n` or `A_n`.
    Degree(u32),
    /// Field order `q` of `PSL(2,q)` or `Sz(q)`.
    FieldOrder(u64),
}

pub fn rhs_predicate(id: TheoremId, args: RhsArgs<'_>) -> Result<bool> {
    let arity = |expected| Error::Arity { id: id.as_str().to_string(), expected };
    match id {
        TheoremId::P5P5bProduct => match args {
            RhsArgs::Pair(g, h) => Ok(product_rhs(g, h)),
            _ => Err(arity("two groups")),
        },
        TheoremId::Sn => match args {
            RhsArgs::Degree(n) => Ok(n <= 5),
            _ => Err(arity("a degree n")),
        },
        TheoremId::An => match args {
            RhsArgs::Degree(n) => Ok(n <= 6),
            _ => Err(arity("a degree n")),
        },
        TheoremId::Psl2 => match args {
            RhsArgs::FieldOrder(q) => psl2_rhs(q),
            _ => Err(arity("a field order q")),
        },
        TheoremId::Sz => match args {
            RhsArgs::FieldOrder(q) => sz_rhs(q),
            _ => Err(arity("a field order q")),
        },
        _ => match args {
            RhsArgs::Group(f) => Ok(group_rhs(id, f)),
            _ => Err(arity("one group")),
        },
    }
}

fn group_rhs(id: TheoremId, f: &StructureFlags) -> bool {
    let n = f.order;
    match id {
        TheoremId::Chain => n == 1 || n == 3 || f.is_exponent2_2group || chain_epo_case(f) || (n == 6 && !f.is_cyclic),
        TheoremId::P5Nilp | TheoremId::P5P5bNilp => {
            f.is_p_group || (f.is_cyclic && is_admissible_cyclic_order(n))
        }
        TheoremId::P2P3Nilp => {
            let p_times_cyclic = f.num_primes() == 2
                && f.sylow_of(2).is_some_and(|s| !s.cyclic && s.exponent == 2)
                && f.sylow.iter().any(|(&q, s)| q != 2 && s.cyclic);
            f.is_p_group || (f.is_cyclic && is_admissible_cyclic_order(n)) || p_times_cyclic
        }
        TheoremId::P2P3NonNilp => f.is_eppo || nonnilp_p2p3_special(f),
        TheoremId::Diamond | TheoremId::EvenHoleDiamond => f.is_p_group || f.is_eppo,
        TheoremId::DiamondCoDiamond => f.is_cyclic_prime_power() || f.is_exponent2_2group,
        TheoremId::CographNullPrime => true,
        TheoremId::ChordalNilp => {
            let sylows: Vec<&SylowInfo> = f.sylow.values().collect();
            let prime_exp = |s: &SylowInfo| is_prime(s.exponent);
            f.is_p_group
                || (sylows.len() == 2
                    && ((sylows[0].cyclic && prime_exp(sylows[1])) || (sylows[1].cyclic && prime_exp(sylows[0]))))
        }
        TheoremId::CographNilp => {
            f.is_p_group || (f.is_cyclic && f.num_primes() == 2 && f.factorization.0.iter().all(|&(_, a)| a == 1))
        }
        TheoremId::P5P5bProduct | TheoremId::Sn | TheoremId::An | TheoremId::Psl2 | TheoremId::Sz => {
            unreachable!("handled by rhs_predicate")
        }
    }
}

/// The EPO branch of the chain-graph case: `C3 ⋊ P` with `P` a non-cyclic
/// 2-group of exponent 2.
pub fn chain_epo_case(f: &StructureFlags) -> bool {
    f.is_epo
        && f.num_primes() == 2
        && f.factorization.multiplicity(3) == 1
        && f.sylow_of(3).is_some_and(|s| s.normal)
        && f.sylow_of(2).is_some_and(|s| s.exponent == 2 && !s.cyclic)
}

/// Non-EPPO branches of the non-nilpotent `{P2 ∪ P3, complement}` case.
fn nonnilp_p2p3_special(f: &StructureFlags) -> bool {
    let Some(s2) = f.sylow_of(2) else {
        return false;
    };
    if s2.exponent != 2 {
        return false;
    }
    let odd: Vec<(u64, &SylowInfo)> = f.sylow.iter().filter(|(&p, _)| p != 2).map(|(&p, s)| (p, s)).collect();
    match odd.as_slice() {
        [(_, q)] => q.cyclic && q.normal,
        [(_, q), (_, r)] => {
            let qr_cyclic = q.normal && r.normal && f.has_element_of_order(q.order * r.order);
            let one_prime = is_prime(q.order) || is_prime(r.order);
            let mixed_even = f.element_orders.iter().any(|&o| o % 2 == 0 && o >> o.trailing_zeros() > 1);
            qr_cyclic && one_prime && !mixed_even
        }
        _ => false,
    }
}

fn product_rhs(g: &StructureFlags, h: &StructureFlags) -> bool {
    let mut primes: Vec<u64> = g.factorization.primes().chain(h.factorization.primes()).collect();
    primes.sort_unstable();
    primes.dedup();
    match primes.len() {
        0 | 1 => return true,
        2 => {}
        _ => return false,
    }
    let fits = |x: &StructureFlags, y: &StructureFlags| {
        // x = C_{q^m}, y has a normal cyclic Sylow p-subgroup C_{p^r} and no
        // element of order divisible by pq.
        let Some((q, m)) = x.factorization.0.first().copied().filter(|_| x.is_cyclic && x.num_primes() == 1) else {
            return false;
        };
        let Some(&p) = primes.iter().find(|&&p| p != q) else {
            return false;
        };
        let Some(sp) = y.sylow_of(p) else {
            return false;
        };
        let r = y.factorization.multiplicity(p);
        sp.normal && sp.cyclic && (m == 1 || r == 1) && y.is_eppo
    };
    fits(g, h) || fits(h, g)
}

/// `(q±1)/2` for odd `q`, `q±1` for even `q`.
pub fn psl2_numbers(q: u64) -> Result<[u64; 2]> {
    if q < 2 || is_prime_power(q).is_none() {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    Ok(if q % 2 == 1 { [(q - 1) / 2, q.div_ceil(2)] } else { [q - 1, q + 1] })
}

/// `q-1`, `q-√(2q)+1`, `q+√(2q)+1` for `q = 2^(2e+1)`, `e >= 1`.
pub fn sz_numbers(q: u64) -> Result<[u64; 3]> {
    match is_prime_power(q) {
        Some((2, a)) if a % 2 == 1 && a >= 3 => {
            let r = 1u64 << a.div_ceil(2);
            Ok([q - 1, q - r + 1, q + r + 1])
        }
        _ => Err(Error::InvalidParameter(format!("Sz(q) needs q = 2^(2e+1) with e >= 1, got {q}"))),
    }
}

fn psl2_rhs(q: u64) -> Result<bool> {
    Ok(psl2_numbers(q)?.into_iter().all(is_admissible_cyclic_order))
}

fn sz_rhs(q: u64) -> Result<bool> {
    Ok(sz_numbers(q)?.into_iter().all(is_admissible_cyclic_order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_group_with_cap, parse_group_spec};
    use crate::group::DEFAULT_CAP;

    fn flags(s: &str) -> StructureFlags {
        compute_structure_flags(&build_group_with_cap(&parse_group_spec(s).unwrap(), DEFAULT_CAP).unwrap())
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(12).0, [(2, 2), (3, 1)]);
        assert_eq!(factorize(1).0, []);
        assert_eq!(factorize(29120).0, [(2, 6), (5, 1), (7, 1), (13, 1)]);
        assert_eq!(factorize(29120).value(), 29120);
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(343), Some((7, 3)));
        assert_eq!(is_prime_power(1), None);
    }

    #[test]
    fn admissible_orders() {
        assert!(is_admissible_cyclic_order(1));
        assert!(is_admissible_cyclic_order(6));
        assert!(is_admissible_cyclic_order(12));
        assert!(!is_admissible_cyclic_order(36));
        assert!(!is_admissible_cyclic_order(30));
        assert!(is_admissible_cyclic_order(64));
    }

    #[test]
    fn flag_examples() {
        let s3 = flags("S3");
        assert!(!s3.is_nilpotent && s3.is_eppo && s3.is_epo && !s3.is_cyclic);
        let c12 = flags("C12");
        assert!(c12.is_nilpotent && !c12.is_eppo && c12.is_cyclic);
        let a4 = flags("A4");
        assert!(!a4.is_nilpotent && a4.is_eppo && a4.is_epo);
        assert_eq!(a4.normal_sylow(), BTreeMap::from([(2, true), (3, false)]));
        let e = flags("E2^3");
        assert!(e.is_exponent2_2group && e.is_p_group);
        let c1 = flags("C1");
        assert!(c1.is_p_group && c1.is_cyclic && !c1.is_exponent2_2group);
        let q8 = flags("Q8");
        assert_eq!(q8.sylow[&2], SylowInfo { order: 8, normal: true, cyclic: false, exponent: 4 });
    }

    #[test]
    fn rhs_examples() {
        let one = |id, s: &str| rhs_predicate(id, RhsArgs::Group(&flags(s))).unwrap();
        assert!(!one(TheoremId::Diamond, "C6"));
        assert!(one(TheoremId::Chain, "S3"));
        assert!(one(TheoremId::Chain, "C3"));
        assert!(one(TheoremId::Chain, "E2^3"));
        assert!(!one(TheoremId::Chain, "A4"));
        assert!(!one(TheoremId::Chain, "C12"));
        assert!(rhs_predicate(TheoremId::Psl2, RhsArgs::FieldOrder(11)).unwrap());
        assert!(rhs_predicate(TheoremId::Sz, RhsArgs::FieldOrder(8)).unwrap());
        assert_eq!(sz_numbers(8).unwrap(), [7, 5, 13]);
        assert_eq!(psl2_numbers(11).unwrap(), [5, 6]);
        assert_eq!(psl2_numbers(8).unwrap(), [7, 9]);
        let (c4, c3) = (flags("C4"), flags("C3"));
        assert!(rhs_predicate(TheoremId::P5P5bProduct, RhsArgs::Pair(&c4, &c3)).unwrap());
        let c9 = flags("C9");
        assert!(!rhs_predicate(TheoremId::P5P5bProduct, RhsArgs::Pair(&c4, &c9)).unwrap());
        assert!(one(TheoremId::P2P3NonNilp, "SD(7,3,2)"));
        assert!(one(TheoremId::P2P3Nilp, "C12"));
        assert!(!one(TheoremId::P2P3Nilp, "C36"));
        assert!(one(TheoremId::DiamondCoDiamond, "C8"));
        assert!(!one(TheoremId::DiamondCoDiamond, "Q8"));
    }

    #[test]
    fn arity_and_ids() {
        let f = flags("C2");
        let err = rhs_predicate(TheoremId::P5P5bProduct, RhsArgs::Group(&f)).unwrap_err();
        assert!(matches!(err, Error::Arity { .. }));
        assert!(rhs_predicate(TheoremId::Chain, RhsArgs::Pair(&f, &f)).is_err());
        assert!(rhs_predicate(TheoremId::Sn, RhsArgs::Group(&f)).is_err());
        assert!(rhs_predicate(TheoremId::Psl2, RhsArgs::FieldOrder(6)).is_err());
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("T-X".parse::<TheoremId>(), Err(Error::UnknownTheorem("T-X".into())));
    }
}
