//! Exact arithmetic in small finite fields GF(p^k).
//!
//! Elements are polynomials over GF(p) of degree < k, stored little-endian.
//! Every element also has an integer index `c0 + c1*p + c2*p^2 + ...`; this
//! base-p little-endian enumeration is the total order used wherever a
//! canonical choice between field elements is needed.
//!
//! Moduli for the non-prime fields that matter most are fixed:
//!
//! | field  | modulus        |
//! |--------|----------------|
//! | GF(4)  | x^2 + x + 1    |
//! | GF(8)  | x^3 + x + 1    |
//! | GF(9)  | x^2 + 1        |
//! | GF(16) | x^4 + x + 1    |
//!
//! Any other extension field uses the monic irreducible polynomial of degree k
//! whose lower coefficient vector has the smallest index.

use crate::classifiers::is_prime;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Fixed moduli as `(p, k, little-endian coefficients including the leading 1)`.
pub const MODULUS_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl FieldSpec {
    /// Builds GF(p^k) with its canonical modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 || (p as u64).checked_pow(k).is_none_or(|q| q > MAX_FIELD_ORDER) {
            return Err(Error::FieldTooLarge { p: p as u64, k });
        }
        let modulus = if k == 1 {
            // x; reduction never triggers for constants.
            vec![0, 1]
        } else if let Some(&(_, _, m)) = MODULUS_TABLE.iter().find(|(tp, tk, _)| *tp == p && *tk == k) {
            m.to_vec()
        } else {
            smallest_irreducible(p, k).ok_or(Error::NoIrreducible { p: p as u64, k })?
        };
        Ok(FieldSpec { p, k, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }

    /// Little-endian modulus coefficients, length k + 1, leading coefficient 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.k as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_index(1)
    }

    pub fn from_index(&self, mut idx: u32) -> FieldElement {
        let mut coeffs = vec![0; self.k as usize];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn index(&self, a: &FieldElement) -> u32 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Builds an element from coefficients, reducing each one mod p.
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize {
            return Err(self.shape_error());
        }
        Ok(FieldElement { coeffs: coeffs.iter().map(|c| c % self.p).collect() })
    }

    /// All elements in canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    fn shape_error(&self) -> Error {
        Error::FieldShape { p: self.p as u64, k: self.k }
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() == self.k as usize && a.coeffs.iter().all(|&c| c < self.p) {
            Ok(())
        } else {
            Err(self.shape_error())
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect();
        Ok(FieldElement { coeffs })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        Ok(FieldElement { coeffs })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p as u64;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top degree down.
        for deg in (k..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - lead) * m as u64) % p;
            }
            prod[deg] = 0;
        }
        Ok(FieldElement { coeffs: prod[..k].iter().map(|&c| c as u32).collect() })
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, a: &FieldElement, mut e: u64) -> Result<FieldElement> {
        self.check(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse via a^(q-2).
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.pow(a, self.order() as u64 - 2)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let one = self.one();
        let mut x = a.clone();
        let mut n = 1;
        while x != one {
            x = self.mul(&x, a)?;
            n += 1;
        }
        Ok(n)
    }

    /// The first element in enumeration order generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.order() - 1;
        (1..self.order())
            .map(|i| self.from_index(i))
            .find(|a| self.multiplicative_order(a).ok() == Some(target))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// True iff the monic polynomial `f` (little-endian, leading 1) has no monic
/// factor of degree 1..=deg/2 over GF(p).
pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                g.push(x % p);
                x /= p;
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for deg in (dg..r.len()).rev() {
        let lead = r[deg] % p;
        if lead == 0 {
            continue;
        }
        for (i, &c) in g.iter().enumerate() {
            let idx = deg - dg + i;
            r[idx] = (r[idx] + (p - lead) * c as u64) % p;
        }
    }
    r.truncate(dg);
    r.into_iter().map(|c| c as u32).collect()
}

fn smallest_irreducible(p: u32, k: u32) -> Option<Vec<u32>> {
    (0..p.pow(k)).find_map(|low| {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut x = low;
        for _ in 0..k {
            f.push(x % p);
            x /= p;
        }
        f.push(1);
        is_irreducible(p, &f).then_some(f)
    })
}

/// Index-based arithmetic over a [`FieldSpec`], table-driven for small fields.
#[derive(Clone, Debug)]
pub struct IndexedField {
    spec: FieldSpec,
    q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl IndexedField {
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.order();
        let elems: Vec<_> = spec.elements().collect();
        let mut add = vec![0u16; (q * q) as usize];
        let mut mul = vec![0u16; (q * q) as usize];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i) {
                let s = spec.index(&spec.add(a, b).expect("valid")) as u16;
                let m = spec.index(&spec.mul(a, b).expect("valid")) as u16;
                let (i, j, q) = (i as u32, j as u32, q);
                add[(i * q + j) as usize] = s;
                add[(j * q + i) as usize] = s;
                mul[(i * q + j) as usize] = m;
                mul[(j * q + i) as usize] = m;
            }
        }
        let neg = elems.iter().map(|a| spec.index(&spec.neg(a).expect("valid")) as u16).collect();
        let inv = elems
            .iter()
            .map(|a| spec.inv(a).map(|b| spec.index(&b) as u16).unwrap_or(0))
            .collect();
        IndexedField { spec, q, add, mul, neg, inv }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero index; 0 maps to 0.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }
}
