//! Group families and the textual group-spec grammar.
//!
//! ```text
//! spec := atom ( "x" spec )?
//! atom := "C"int | "D"int | "S"int | "A"int | "Q"int | "E"int"^"int
//!       | "SD(" int "," int "," int ")" | "PSL(2," int ")" | "SL(2," int ")"
//! ```
//!
//! `Dn` is the dihedral group of order 2n. `x` is a right-associative direct
//! product. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::classifiers::{is_prime, is_prime_power};
use crate::error::{Error, Result};
use crate::finite_field::{FieldSpec, IndexedField};
use crate::group::{gcd, group_cap, Group, GroupElement, Law};

/// Cyclic groups up to this order are realized as rotations; larger ones use
/// the pair encoding to keep payloads small.
const ROTATION_LIMIT: u32 = 512;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    /// Dihedral group of order `2n`.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    /// Generalized quaternion group of order `n`.
    Quaternion(u32),
    ElementaryAbelian { p: u32, k: u32 },
    SemidirectCyclic { n: u32, m: u32, k: u32 },
    Psl2(u32),
    Sl2(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Closed-form group order.
    pub fn order(&self) -> u128 {
        match *self {
            GroupSpec::Cyclic(n) => n as u128,
            GroupSpec::Dihedral(n) => 2 * n as u128,
            GroupSpec::Symmetric(n) => (1..=n as u128).product(),
            GroupSpec::Alternating(n) => ((1..=n as u128).product::<u128>() / 2).max(1),
            GroupSpec::Quaternion(n) => n as u128,
            GroupSpec::ElementaryAbelian { p, k } => (p as u128).pow(k),
            GroupSpec::SemidirectCyclic { n, m, .. } => n as u128 * m as u128,
            GroupSpec::Psl2(q) => {
                let q = q as u128;
                q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 }
            }
            GroupSpec::Sl2(q) => {
                let q = q as u128;
                q * (q * q - 1)
            }
            GroupSpec::DirectProduct(ref a, ref b) => a.order() * b.order(),
        }
    }

    /// Family name used for corpus tagging.
    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::Alternating(_) => "alternating",
            GroupSpec::Quaternion(_) => "quaternion",
            GroupSpec::ElementaryAbelian { .. } => "elementary-abelian",
            GroupSpec::SemidirectCyclic { .. } => "semidirect-cyclic",
            GroupSpec::Psl2(_) => "psl2",
            GroupSpec::Sl2(_) => "sl2",
            GroupSpec::DirectProduct(..) => "direct-product",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
            GroupSpec::SemidirectCyclic { n, m, k } => write!(f, "SD({n},{m},{k})"),
            GroupSpec::Psl2(q) => write!(f, "PSL(2,{q})"),
            GroupSpec::Sl2(q) => write!(f, "SL(2,{q})"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Parses a group spec; positions in errors are byte offsets into `text`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { chars, pos: 0, end: text.len() };
    let spec = parser.spec()?;
    if parser.pos < parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(spec)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.offset(), msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat_str(s) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{s}`")))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value * 10 + d as u64;
            if value > u32::MAX as u64 {
                return Err(self.error("integer too large"));
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(value as u32)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let left = self.atom()?;
        if self.eat_str("x") {
            let right = self.spec()?;
            return Ok(GroupSpec::DirectProduct(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        let start = self.offset();
        let range = |msg: String| Error::InvalidParameter(format!("{msg} (at position {start})"));
        if self.eat_str("PSL(2,") {
            let q = self.int()?;
            self.expect(")")?;
            check_field_order(q).map_err(|_| range(format!("PSL(2,q) needs a prime power q >= 2, got {q}")))?;
            return Ok(GroupSpec::Psl2(q));
        }
        if self.eat_str("SL(2,") {
            let q = self.int()?;
            self.expect(")")?;
            check_field_order(q).map_err(|_| range(format!("SL(2,q) needs a prime power q >= 2, got {q}")))?;
            return Ok(GroupSpec::Sl2(q));
        }
        if self.eat_str("SD(") {
            let n = self.int()?;
            self.expect(",")?;
            let m = self.int()?;
            self.expect(",")?;
            let k = self.int()?;
            self.expect(")")?;
            check_semidirect(n, m, k).map_err(|e| range(e.to_string()))?;
            return Ok(GroupSpec::SemidirectCyclic { n, m, k });
        }
        let Some(family) = self.peek() else {
            return Err(self.error("expected a group atom"));
        };
        if !family.is_ascii_alphabetic() {
            return Err(self.error("expected a group family letter"));
        }
        self.pos += 1;
        let spec = match family {
            'C' => {
                let n = self.int()?;
                if n < 1 {
                    return Err(range("C_n needs n >= 1".into()));
                }
                GroupSpec::Cyclic(n)
            }
            'D' => {
                let n = self.int()?;
                if n < 3 {
                    return Err(range(format!("D_n needs n >= 3, got {n}")));
                }
                GroupSpec::Dihedral(n)
            }
            'S' | 'A' => {
                let n = self.int()?;
                if !(1..=7).contains(&n) {
                    return Err(range(format!("{family}_n needs 1 <= n <= 7, got {n}")));
                }
                if family == 'S' {
                    GroupSpec::Symmetric(n)
                } else {
                    GroupSpec::Alternating(n)
                }
            }
            'Q' => {
                let n = self.int()?;
                if n < 8 || !n.is_power_of_two() {
                    return Err(range(format!("Q_n needs n = 2^k >= 8, got {n}")));
                }
                GroupSpec::Quaternion(n)
            }
            'E' => {
                let p = self.int()?;
                self.expect("^")?;
                let k = self.int()?;
                if !is_prime(p as u64) || k < 1 {
                    return Err(range(format!("E p^k needs p prime and k >= 1, got {p}^{k}")));
                }
                GroupSpec::ElementaryAbelian { p, k }
            }
            other => {
                let mut name = other.to_string();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
                    name.push(c);
                    self.pos += 1;
                }
                return Err(Error::UnknownFamily(name));
            }
        };
        Ok(spec)
    }
}

fn check_field_order(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    is_prime_power(q as u64)
        .map(|(p, k)| (p as u32, k))
        .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))
}

fn check_semidirect(n: u32, m: u32, k: u32) -> Result<()> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameter("SD(n,m,k) needs n, m >= 1".into()));
    }
    if gcd(k as u64, n as u64) != 1 && n > 1 {
        return Err(Error::InvalidParameter(format!("SD({n},{m},{k}): gcd(k, n) must be 1")));
    }
    let km = (0..m).fold(1 % n as u64, |acc, _| acc * k as u64 % n as u64);
    if km != 1 % n as u64 {
        return Err(Error::InvalidParameter(format!("SD({n},{m},{k}): k^m must be 1 mod n")));
    }
    Ok(())
}

/// Builds a group under the environment-configured cap.
pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    build_group_with_cap(spec, group_cap())
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<Group> {
    if spec.order() > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let label = spec.to_string();
    match *spec {
        GroupSpec::Cyclic(n) if n <= ROTATION_LIMIT => {
            let law = Law::Permutation { degree: n as usize };
            Group::close_generators(label, law, &[rotation(n as usize)], cap)
        }
        GroupSpec::Cyclic(n) => {
            Group::close_generators(label, Law::metacyclic(n, 1, 1), &[GroupElement::Pair(1 % n, 0)], cap)
        }
        GroupSpec::Dihedral(n) => {
            let n = n as usize;
            let reflection: Vec<u16> = (0..n).map(|i| ((n - i) % n) as u16).collect();
            let law = Law::Permutation { degree: n };
            Group::close_generators(label, law, &[rotation(n), GroupElement::Perm(reflection.into())], cap)
        }
        GroupSpec::Symmetric(n) => {
            let n = n as usize;
            let law = Law::Permutation { degree: n };
            let gens = match n {
                1 => vec![rotation(1)],
                2 => vec![cycle(2, &[0, 1])],
                _ => vec![cycle(n, &[0, 1]), rotation(n)],
            };
            Group::close_generators(label, law, &gens, cap)
        }
        GroupSpec::Alternating(n) => {
            let n = n as usize;
            let law = Law::Permutation { degree: n };
            let gens: Vec<_> = if n < 3 {
                vec![GroupElement::Perm((0..n as u16).collect())]
            } else {
                (2..n as u16).map(|i| cycle(n, &[0, 1, i])).collect()
            };
            Group::close_generators(label, law, &gens, cap)
        }
        GroupSpec::Quaternion(n) => {
            let law = Law::Dicyclic { half: n / 2 };
            Group::close_generators(label, law, &[GroupElement::Pair(1, 0), GroupElement::Pair(0, 1)], cap)
        }
        GroupSpec::ElementaryAbelian { p, k } => {
            let (p, k) = (p as usize, k as usize);
            let gens: Vec<_> = (0..k)
                .map(|b| {
                    let pts: Vec<u16> = (b * p..(b + 1) * p).map(|x| x as u16).collect();
                    cycle(p * k, &pts)
                })
                .collect();
            Group::close_generators(label, Law::Permutation { degree: p * k }, &gens, cap)
        }
        GroupSpec::SemidirectCyclic { n, m, k } => semidirect_cyclic(n, m, k, cap),
        GroupSpec::Psl2(q) => construct_psl2(q, cap),
        GroupSpec::Sl2(q) => construct_sl2(q, cap),
        GroupSpec::DirectProduct(ref a, ref b) => {
            let g = Arc::new(build_group_with_cap(a, cap)?);
            let h = Arc::new(build_group_with_cap(b, cap)?);
            direct_product(g, h, cap)
        }
    }
}

fn rotation(n: usize) -> GroupElement {
    GroupElement::Perm((0..n).map(|i| ((i + 1) % n) as u16).collect())
}

fn cycle(degree: usize, pts: &[u16]) -> GroupElement {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    for (i, &x) in pts.iter().enumerate() {
        p[x as usize] = pts[(i + 1) % pts.len()];
    }
    GroupElement::Perm(p.into())
}

/// Componentwise product, elements enumerated as `(g, h)` with `g` major.
pub fn direct_product(g: Arc<Group>, h: Arc<Group>, cap: usize) -> Result<Group> {
    let n = g.order().checked_mul(h.order()).filter(|&n| n <= cap).ok_or(Error::CapExceeded { cap })?;
    let label = format!("{}x{}", g.label(), h.label());
    let mut elements = Vec::with_capacity(n);
    for i in 0..g.order() as u32 {
        for j in 0..h.order() as u32 {
            elements.push(GroupElement::Pair(i, j));
        }
    }
    Ok(Group::from_closed(label, Law::Product(g, h), elements))
}

/// `C_n ⋊ C_m` with the generator of `C_m` acting as multiplication by `k`.
pub fn semidirect_cyclic(n: u32, m: u32, k: u32, cap: usize) -> Result<Group> {
    check_semidirect(n, m, k)?;
    if n as u64 * m as u64 > cap as u64 {
        return Err(Error::CapExceeded { cap });
    }
    let gens = [GroupElement::Pair(1 % n, 0), GroupElement::Pair(0, 1 % m)];
    Group::close_generators(format!("SD({n},{m},{k})"), Law::metacyclic(n, m, k), &gens, cap)
}

fn sl2_generators(field: &IndexedField, projective: bool) -> (Law, Vec<GroupElement>) {
    let spec = field.spec();
    let w = spec.index(&spec.primitive_element()) as u16;
    let winv = field.inv(w);
    let gens = vec![
        GroupElement::Matrix(vec![1, 1, 0, 1].into()),
        GroupElement::Matrix(vec![1, 0, 1, 1].into()),
        GroupElement::Matrix(vec![w, 0, 0, winv].into()),
    ];
    let law = Law::Matrix { field: Arc::new(field.clone()), dim: 2, projective };
    (law, gens)
}

/// PSL(2,q) realized as SL(2,q) modulo `±I`, each coset stored as its
/// canonical scalar multiple.
pub fn construct_psl2(q: u32, cap: usize) -> Result<Group> {
    let (p, k) = check_field_order(q)?;
    if GroupSpec::Psl2(q).order() > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let field = IndexedField::new(FieldSpec::new(p, k)?);
    let (law, gens) = sl2_generators(&field, true);
    Group::close_generators(format!("PSL(2,{q})"), law, &gens, cap)
}

pub fn construct_sl2(q: u32, cap: usize) -> Result<Group> {
    let (p, k) = check_field_order(q)?;
    if GroupSpec::Sl2(q).order() > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let field = IndexedField::new(FieldSpec::new(p, k)?);
    let (law, gens) = sl2_generators(&field, false);
    Group::close_generators(format!("SL(2,{q})"), law, &gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use std::collections::BTreeMap;

    fn build(s: &str) -> Group {
        build_group_with_cap(&parse_group_spec(s).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn profile(s: &str) -> BTreeMap<u32, usize> {
        build(s).element_order_profile().0
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_group_spec("C12").unwrap(), GroupSpec::Cyclic(12));
        assert_eq!(
            parse_group_spec("C3xC4").unwrap(),
            GroupSpec::DirectProduct(Box::new(GroupSpec::Cyclic(3)), Box::new(GroupSpec::Cyclic(4)))
        );
        assert_eq!(parse_group_spec("SD(7,3,2)").unwrap(), GroupSpec::SemidirectCyclic { n: 7, m: 3, k: 2 });
        assert_eq!(parse_group_spec(" PSL( 2 , 7 ) ").unwrap(), GroupSpec::Psl2(7));
        assert_eq!(parse_group_spec("E2^3xC9").unwrap().to_string(), "E2^3xC9");
    }

    #[test]
    fn product_is_right_associative() {
        let s = parse_group_spec("C2xC3xC5").unwrap();
        match s {
            GroupSpec::DirectProduct(a, b) => {
                assert_eq!(*a, GroupSpec::Cyclic(2));
                assert_eq!(b.to_string(), "C3xC5");
            }
            _ => panic!("expected product"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_group_spec("C"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_group_spec("C3x"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_group_spec("C3C4"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_group_spec("SD(7,3"), Err(Error::Syntax { .. })));
        assert_eq!(parse_group_spec("Z5"), Err(Error::UnknownFamily("Z".into())));
        assert_eq!(parse_group_spec("M11"), Err(Error::UnknownFamily("M".into())));
        assert!(matches!(parse_group_spec("D2"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("S8"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("Q12"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("E4^2"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("SD(7,3,3)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("PSL(2,6)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("C0"), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn labels_round_trip() {
        for s in ["C1", "D5", "S4", "A7", "Q16", "E3^2", "SD(15,2,14)", "PSL(2,9)", "SL(2,5)", "C3xS6"] {
            let spec = parse_group_spec(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn closed_form_orders() {
        for s in [
            "C1", "C6", "C100", "D3", "D8", "S1", "S2", "S5", "A1", "A3", "A5", "A6", "Q8", "Q16", "E2^4", "E3^2",
            "SD(5,4,2)", "PSL(2,2)", "PSL(2,3)", "PSL(2,4)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "SL(2,5)", "C3xC4",
        ] {
            let spec = parse_group_spec(s).unwrap();
            assert_eq!(build_group_with_cap(&spec, DEFAULT_CAP).unwrap().order() as u128, spec.order(), "{s}");
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(build("C6").exponent(), 6);
        assert_eq!(profile("A5"), BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)]));
        assert_eq!(profile("Q8"), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(profile("SD(3,2,2)"), profile("S3"));
        assert_eq!(profile("SD(7,3,2)"), BTreeMap::from([(1, 1), (3, 14), (7, 6)]));
        assert!(profile("SD(5,4,2)").contains_key(&4));
        assert_eq!(build("SD(5,4,2)").order(), 20);
    }

    #[test]
    fn direct_product_examples() {
        assert_eq!(profile("C3xC4"), profile("C12"));
        assert_eq!(build("C2xC2").exponent(), 2);
        assert_eq!(build("C3xS6").order(), 2160);
        let cap = build_group_with_cap(&parse_group_spec("S6xS6").unwrap(), DEFAULT_CAP);
        assert_eq!(cap.unwrap_err(), Error::CapExceeded { cap: DEFAULT_CAP });
    }

    #[test]
    fn psl2_matches_alternating_profiles() {
        assert_eq!(profile("PSL(2,4)"), profile("A5"));
        assert_eq!(profile("PSL(2,5)"), profile("A5"));
        assert_eq!(profile("PSL(2,9)"), profile("A6"));
        assert_eq!(build("PSL(2,7)").order(), 168);
        assert_eq!(profile("PSL(2,3)"), profile("A4"));
    }

    #[test]
    fn sl2_from_unipotents() {
        let law_gens = |q: u32| {
            let field = IndexedField::new(FieldSpec::new(q, 1).unwrap());
            let law = Law::Matrix { field: Arc::new(field), dim: 2, projective: false };
            let gens =
                [GroupElement::Matrix(vec![1, 1, 0, 1].into()), GroupElement::Matrix(vec![1, 0, 1, 1].into())];
            Group::close_generators("SL(2,5)", law, &gens, DEFAULT_CAP).unwrap()
        };
        let g = law_gens(5);
        assert_eq!(g.order(), 5 * (25 - 1));
        let e = g.index_of(&GroupElement::Matrix(vec![1, 1, 0, 1].into())).unwrap();
        assert_eq!(g.element_order(e).unwrap(), 5);
        assert_eq!(g.render(e), "[[1,1],[0,1]]");
    }

    #[test]
    fn semidirect_with_trivial_action_matches_product() {
        for (n, m) in [(3, 4), (5, 2), (4, 6)] {
            let sd = semidirect_cyclic(n, m, 1, DEFAULT_CAP).unwrap();
            assert_eq!(sd.element_order_profile().0, profile(&format!("C{n}xC{m}")));
        }
        assert!(semidirect_cyclic(7, 3, 3, DEFAULT_CAP).is_err());
    }

    #[test]
    fn cap_checked_before_building() {
        assert_eq!(construct_psl2(13, 1000).unwrap_err(), Error::CapExceeded { cap: 1000 });
        assert!(construct_psl2(6, DEFAULT_CAP).is_err());
    }
}
