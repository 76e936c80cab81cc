//! Proof objects: sum-of-squares identities, negative-value witnesses and
//! zero witnesses, each checkable in exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::form::{q, Poly, SymTensor4, Q};
use crate::tern::{coeffs_i64, eval_coeffs_i64, Tern3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosCertificate {
    pub squares: Vec<(Q, Poly)>,
    pub remainder: Vec<(Q, [u8; 3])>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeWitness {
    pub x: Vec<i64>,
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWitness {
    pub x: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCitation {
    pub case: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Sos(SosCertificate),
    NegativeWitness(NegativeWitness),
    ZeroWitness(ZeroWitness),
    CaseCitation(CaseCitation),
    /// No exact certificate; the verdict came from the numerical oracle.
    Uncertified(String),
}

impl SosCertificate {
    pub fn new() -> Self {
        SosCertificate { squares: vec![], remainder: vec![] }
    }

    pub fn square(mut self, c: i64, p: Poly) -> Self {
        self.squares.push((q(c), p));
        self
    }

    pub fn fourth_power(mut self, c: i64, lin: Poly) -> Self {
        self.squares.push((q(c), lin.square()));
        self
    }

    pub fn rem(mut self, c: i64, e: [u8; 3]) -> Self {
        self.remainder.push((q(c), e));
        self
    }

    pub fn expand(&self) -> Poly {
        let mut p = Poly::zero();
        for (c, f) in &self.squares {
            p = p.add(&f.square().scale(c));
        }
        for (c, e) in &self.remainder {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn well_formed(&self) -> bool {
        self.squares.iter().all(|(c, _)| c.is_positive())
            && self
                .remainder
                .iter()
                .all(|(c, e)| c.is_positive() && e.iter().all(|k| k % 2 == 0))
    }

    /// Pulls a certificate for f back to x ↦ f(g·x).
    pub fn compose(&self, g: &crate::form::SignedPerm) -> SosCertificate {
        let squares = self.squares.iter().map(|(c, f)| (c.clone(), f.compose_signed_perm(g))).collect();
        let remainder = self
            .remainder
            .iter()
            .map(|(c, e)| {
                let m = Poly::monomial(*e, Q::one()).compose_signed_perm(g);
                let (e2, _) = m.terms.into_iter().next().unwrap();
                (c.clone(), e2)
            })
            .collect();
        SosCertificate { squares, remainder }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "sos",
            "squares": self.squares.iter().map(|(c, f)| json!({"coeff": c.to_string(), "form": f.to_string()})).collect::<Vec<_>>(),
            "remainder": self.remainder.iter().map(|(c, e)| json!({"coeff": c.to_string(), "monomial": e})).collect::<Vec<_>>(),
        })
    }
}

impl Default for SosCertificate {
    fn default() -> Self {
        Self::new()
    }
}

pub fn verify_sos(cert: &SosCertificate, t: &SymTensor4) -> bool {
    cert.well_formed() && cert.expand() == t.expand()
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Sos(_) => "sos",
            Certificate::NegativeWitness(_) => "negative_witness",
            Certificate::ZeroWitness(_) => "zero_witness",
            Certificate::CaseCitation(_) => "case_citation",
            Certificate::Uncertified(_) => "none",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Certificate::Sos(s) => s.to_json(),
            Certificate::NegativeWitness(w) => {
                json!({"kind": "negative_witness", "x": w.x, "value": witness_value_string(&w.value)})
            }
            Certificate::ZeroWitness(z) => zero_json(z),
            Certificate::CaseCitation(c) => json!({"kind": "case_citation", "case": c.case, "note": c.note}),
            Certificate::Uncertified(n) => json!({"kind": "none", "note": n}),
        }
    }

    /// Exact re-check of the certificate against `t`.
    pub fn verify(&self, t: &SymTensor4) -> bool {
        match self {
            Certificate::Sos(s) => verify_sos(s, t),
            Certificate::NegativeWitness(w) => {
                matches!(t.evaluate_int(&w.x), Ok(v) if v == w.value && v.is_negative())
            }
            Certificate::ZeroWitness(z) => is_zero_witness(t, &z.x),
            Certificate::CaseCitation(_) => true,
            Certificate::Uncertified(_) => false,
        }
    }
}

pub fn zero_json(z: &ZeroWitness) -> Value {
    json!({"kind": "zero_witness", "x": z.x.iter().map(|v| v.to_string()).collect::<Vec<_>>()})
}

pub fn is_zero_witness(t: &SymTensor4, x: &[Q]) -> bool {
    x.iter().any(|v| !v.is_zero()) && matches!(t.evaluate(x), Ok(v) if v.is_zero())
}

pub fn verify_negative_witness(t: &SymTensor4, x: &[i64]) -> Result<Q> {
    if x.iter().all(|&v| v == 0) {
        return Err(Error::ZeroVector);
    }
    t.evaluate_int(x)
}

/// Expanded form with denominators cleared by a positive factor, as
/// exponent/coefficient pairs fitting in i128.
fn integer_form(t: &SymTensor4) -> Option<Vec<([u8; 3], i128)>> {
    let p = t.expand();
    let l = p.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    p.terms
        .iter()
        .map(|(e, c)| {
            let v = (c * Q::from_integer(l.clone())).to_integer();
            v.to_i128().map(|v| (*e, v))
        })
        .collect()
}

fn eval_int_form(f: &[([u8; 3], i128)], x: &[i64; 3]) -> i128 {
    let mut acc = 0i128;
    for (e, c) in f {
        let mut t = *c;
        for k in 0..3 {
            for _ in 0..e[k] {
                t *= x[k] as i128;
            }
        }
        acc += t;
    }
    acc
}

/// Coordinate order used by the scans: 0, 1, −1, 2, −2, …
fn coord_order(r: i64) -> Vec<i64> {
    let mut v = vec![0];
    for k in 1..=r {
        v.push(k);
        v.push(-k);
    }
    v
}

/// Visits integer vectors of max-abs exactly r in lexicographic order (with
/// coordinates ordered 0, 1, −1, 2, …), one of each ±x pair: the one whose
/// first nonzero coordinate is positive.
fn shell(dim: usize, r: i64, mut f: impl FnMut(&[i64; 3]) -> bool) -> Option<[i64; 3]> {
    let ord = coord_order(r);
    let third: &[i64] = if dim == 2 { &[0] } else { &ord };
    for &a in &ord {
        if a < 0 {
            continue;
        }
        for &b in &ord {
            if a == 0 && b < 0 {
                continue;
            }
            for &c in third {
                if a == 0 && b == 0 && c <= 0 {
                    continue;
                }
                if a.abs().max(b.abs()).max(c.abs()) != r {
                    continue;
                }
                let x = [a, b, c];
                if f(&x) {
                    return Some(x);
                }
            }
        }
    }
    None
}

/// First integer vector (by max-abs, then in the scan order of `shell`) with a
/// negative value.
pub fn find_negative_witness(t: &SymTensor4, bound: i64) -> Option<NegativeWitness> {
    let dim = t.dim();
    let f = integer_form(t)?;
    for r in 1..=bound {
        if let Some(x) = shell(dim, r, |x| eval_int_form(&f, x) < 0) {
            let xv = x[..dim].to_vec();
            let value = t.evaluate_int(&xv).ok()?;
            return Some(NegativeWitness { x: xv, value });
        }
    }
    None
}

/// Same scan as `find_negative_witness` using the i64 fast path.
pub fn find_negative_witness_tern(t: &Tern3, bound: i64) -> Option<NegativeWitness> {
    let c = coeffs_i64(t);
    for r in 1..=bound {
        if let Some(x) = shell(3, r, |x| eval_coeffs_i64(&c, x) < 0) {
            let value = q(eval_coeffs_i64(&c, &x));
            return Some(NegativeWitness { x: x.to_vec(), value });
        }
    }
    None
}

/// Checks an optional structural hint first, then scans small integer vectors.
pub fn find_zero_witness(t: &SymTensor4, hint: Option<&[Q]>, bound: i64) -> Option<ZeroWitness> {
    if let Some(h) = hint {
        if is_zero_witness(t, h) {
            return Some(ZeroWitness { x: h.to_vec() });
        }
    }
    let dim = t.dim();
    let f = integer_form(t)?;
    for r in 1..=bound {
        if let Some(x) = shell(dim, r, |x| eval_int_form(&f, x) == 0) {
            return Some(ZeroWitness { x: x[..dim].iter().map(|&v| q(v)).collect() });
        }
    }
    None
}

pub fn witness_value_string(v: &Q) -> String {
    if v.is_integer() {
        format!("{}/1", v.numer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
