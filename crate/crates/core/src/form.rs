//! Storage, exact evaluation and the signed-permutation action for
//! 4th-order symmetric tensors of dimension 2 and 3.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sorted 4-tuple of axis labels, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    pub idx: [u8; 4],
}

impl MultiIndex {
    pub fn new(mut idx: [u8; 4], dim: usize) -> Result<Self> {
        if idx.iter().any(|&a| a == 0 || a as usize > dim) {
            return Err(Error::Input(format!("index {idx:?} out of range for dim {dim}")));
        }
        idx.sort_unstable();
        Ok(MultiIndex { idx })
    }

    pub fn parse(s: &str, dim: usize) -> Result<Self> {
        let b = s.as_bytes();
        if b.len() != 4 || !b.iter().all(|c| c.is_ascii_digit()) {
            return Err(Error::Input(format!("bad multi-index '{s}'")));
        }
        Self::new([b[0] - b'0', b[1] - b'0', b[2] - b'0', b[3] - b'0'], dim)
    }

    /// Occurrence counts per axis (always length 3; unused axes are 0).
    pub fn exponents(&self) -> [u8; 3] {
        let mut e = [0u8; 3];
        for &a in &self.idx {
            e[(a - 1) as usize] += 1;
        }
        e
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.idx {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// 4! / (c1! c2! c3!)
pub fn multiplicity(m: &MultiIndex) -> u32 {
    let fact = [1u32, 1, 2, 6, 24];
    let e = m.exponents();
    24 / (fact[e[0] as usize] * fact[e[1] as usize] * fact[e[2] as usize])
}

pub const SLOTS3: [[u8; 4]; 15] = [
    [1, 1, 1, 1],
    [1, 1, 1, 2],
    [1, 1, 1, 3],
    [1, 1, 2, 2],
    [1, 1, 2, 3],
    [1, 1, 3, 3],
    [1, 2, 2, 2],
    [1, 2, 2, 3],
    [1, 2, 3, 3],
    [1, 3, 3, 3],
    [2, 2, 2, 2],
    [2, 2, 2, 3],
    [2, 2, 3, 3],
    [2, 3, 3, 3],
    [3, 3, 3, 3],
];

pub const SLOTS2: [[u8; 4]; 5] = [
    [1, 1, 1, 1],
    [1, 1, 1, 2],
    [1, 1, 2, 2],
    [1, 2, 2, 2],
    [2, 2, 2, 2],
];

pub fn slots(dim: usize) -> &'static [[u8; 4]] {
    if dim == 2 {
        &SLOTS2
    } else {
        &SLOTS3
    }
}

/// Position of a (not necessarily sorted) index tuple in the canonical slot order.
pub fn slot_of(dim: usize, idx: [u8; 4]) -> usize {
    let mut s = idx;
    s.sort_unstable();
    slots(dim).iter().position(|x| *x == s).expect("valid index")
}

/// Symmetric tensor stored as its canonical independent components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymTensor4 {
    dim: usize,
    entries: Vec<Q>,
}

impl SymTensor4 {
    pub fn new(dim: usize, entries: Vec<Q>) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::Input(format!("unsupported dimension {dim}")));
        }
        if entries.len() != slots(dim).len() {
            return Err(Error::Input(format!(
                "dimension {dim} needs {} entries, got {}",
                slots(dim).len(),
                entries.len()
            )));
        }
        Ok(SymTensor4 { dim, entries })
    }

    pub fn from_ints(dim: usize, v: &[i64]) -> Result<Self> {
        Self::new(dim, v.iter().map(|&a| q(a)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        SymTensor4 { dim, entries: vec![Q::zero(); slots(dim).len()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn get(&self, idx: [u8; 4]) -> &Q {
        &self.entries[slot_of(self.dim, idx)]
    }

    pub fn set(&mut self, idx: [u8; 4], v: Q) {
        let s = slot_of(self.dim, idx);
        self.entries[s] = v;
    }

    pub fn is_ternary(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer() && e.numer().abs() <= BigInt::one())
    }

    /// Entries as small integers when the tensor is ternary.
    pub fn ternary_entries(&self) -> Result<Vec<i8>> {
        if !self.is_ternary() {
            return Err(Error::NotTernary);
        }
        Ok(self.entries.iter().map(|e| e.numer().to_i8().unwrap()).collect())
    }

    /// Parses whitespace-separated entries in canonical order; 5 entries give dim 2, 15 give dim 3.
    pub fn parse_text(s: &str) -> Result<Self> {
        let vals: Vec<Q> = s
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<_>>()?;
        match vals.len() {
            5 => Self::new(2, vals),
            15 => Self::new(3, vals),
            n => Err(Error::Input(format!("expected 5 or 15 entries, got {n}"))),
        }
    }

    /// JSON object keyed by multi-index strings; missing slots are zero.
    pub fn parse_json(s: &str, dim: usize) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| Error::Input("expected a JSON object".into()))?;
        let mut t = Self::zero(dim);
        for (k, val) in obj {
            let m = MultiIndex::parse(k, dim)?;
            let x = match val {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(q)
                    .ok_or_else(|| Error::Input(format!("non-integer value for {k}")))?,
                serde_json::Value::String(s) => parse_rational(s)?,
                _ => return Err(Error::Input(format!("bad value for {k}"))),
            };
            t.set(m.idx, x);
        }
        Ok(t)
    }

    pub fn to_text(&self) -> String {
        self.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (s, e) in slots(self.dim).iter().zip(&self.entries) {
            let key: String = s.iter().map(|a| char::from(b'0' + a)).collect();
            let v = if e.is_integer() {
                serde_json::Value::from(e.numer().to_i64().unwrap_or(0))
            } else {
                serde_json::Value::from(e.to_string())
            };
            map.insert(key, v);
        }
        serde_json::Value::Object(map)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: n });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[Q]) -> Result<Q> {
        self.check_len(x.len())?;
        let mut acc = Q::zero();
        for (s, t) in slots(self.dim).iter().zip(&self.entries) {
            if t.is_zero() {
                continue;
            }
            let m = MultiIndex { idx: *s };
            let mut term = t * q(multiplicity(&m) as i64);
            for &a in s {
                term *= &x[(a - 1) as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn evaluate_int(&self, x: &[i64]) -> Result<Q> {
        let xs: Vec<Q> = x.iter().map(|&a| q(a)).collect();
        self.evaluate(&xs)
    }

    pub fn gradient(&self, x: &[Q]) -> Result<Vec<Q>> {
        self.check_len(x.len())?;
        let p = self.expand();
        Ok((0..self.dim).map(|a| p.derivative(a).eval(x)).collect())
    }

    pub fn expand(&self) -> Poly {
        let mut p = Poly::zero();
        for (s, t) in slots(self.dim).iter().zip(&self.entries) {
            let m = MultiIndex { idx: *s };
            p.add_term(m.exponents(), t * q(multiplicity(&m) as i64));
        }
        p
    }

    pub fn apply(&self, g: &SignedPerm) -> Result<SymTensor4> {
        if g.dim() != self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: g.dim() });
        }
        let mut out = Self::zero(self.dim);
        for (s, t) in slots(self.dim).iter().zip(&self.entries) {
            let mut sign = 1i8;
            let mut img = [0u8; 4];
            for (k, &a) in s.iter().enumerate() {
                let a0 = (a - 1) as usize;
                sign *= g.signs[a0];
                img[k] = g.perm[a0] as u8 + 1;
            }
            out.set(img, if sign < 0 { -t.clone() } else { t.clone() });
        }
        Ok(out)
    }

    /// Restriction to the axes {i, j} (1-based), as a dim-2 tensor.
    pub fn principal_pair(&self, i: u8, j: u8) -> Result<SymTensor4> {
        if self.dim != 3 || i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
            return Err(Error::Input("principal_pair needs dim 3 and distinct axes".into()));
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let e = |k: [u8; 4]| self.get(k).clone();
        SymTensor4::new(
            2,
            vec![e([a, a, a, a]), e([a, a, a, b]), e([a, a, b, b]), e([a, b, b, b]), e([b, b, b, b])],
        )
    }
}

impl fmt::Display for SymTensor4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Input(format!("bad number '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = s.trim().parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

/// Signed permutation acting by (g·x)[perm[i]] = signs[i]·x[i] (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Input(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Input(format!("bad signs {signs:?}")));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// All 2^n·n! elements in a fixed order (identity first).
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<usize>> = vec![];
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        perms.sort();
        let mut out = vec![];
        for p in perms {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPerm { perm: p.clone(), signs });
            }
        }
        out
    }

    pub fn act<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        let mut y = x.to_vec();
        for i in 0..self.dim() {
            y[self.perm[i]] = if self.signs[i] < 0 { -x[i].clone() } else { x[i].clone() };
        }
        y
    }

    pub fn act_int(&self, x: &[i64]) -> Vec<i64> {
        self.act(x)
    }

    /// (self ∘ other)·x = self·(other·x)
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.dim())
            .map(|i| format!("x{}->{}x{}", i + 1, if self.signs[i] < 0 { "-" } else { "" }, self.perm[i] + 1))
            .collect();
        f.write_str(&parts.join(","))
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Polynomial in x1, x2, x3 with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<[u8; 3], Q>,
}

/// A quartic form is a homogeneous degree-4 `Poly`.
pub type QuarticPoly = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn monomial(e: [u8; 3], c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; 3];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    /// Sum of c·x_a·x_b terms; `a`, `b` are 0-based.
    pub fn from_terms(terms: &[(i64, &[usize])]) -> Self {
        let mut p = Poly::zero();
        for (c, vars) in terms {
            let mut e = [0u8; 3];
            for &v in vars.iter() {
                e[v] += 1;
            }
            p.add_term(e, q(*c));
        }
        p
    }

    pub fn add_term(&mut self, e: [u8; 3], c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: [u8; 3]) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut p = Poly::zero();
        for (e, a) in &self.terms {
            p.add_term(*e, a * c);
        }
        p
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        p
    }

    pub fn square(&self) -> Poly {
        self.mul(self)
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                for _ in 0..ek {
                    t *= &x[k];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                p.add_term(e2, c * q(e[i] as i64));
            }
        }
        p
    }

    /// Substitutes x ↦ g·x, returning the polynomial x ↦ self(g·x).
    pub fn compose_signed_perm(&self, g: &SignedPerm) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            // (g·x)[perm[i]] = s_i x_i, so variable y_a = s_i x_i with a = perm[i]
            let mut e2 = [0u8; 3];
            let mut sign = 1i32;
            for i in 0..g.dim() {
                let a = g.perm[i];
                e2[i] = e[a];
                if g.signs[i] < 0 && e[a] % 2 == 1 {
                    sign = -sign;
                }
            }
            p.add_term(e2, if sign < 0 { -c.clone() } else { c.clone() });
        }
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
