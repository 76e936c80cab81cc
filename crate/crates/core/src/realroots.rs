//! Distinct real root counting for integer polynomials: the inner-determinant
//! sign-variation count, with a Sturm sequence as oracle and fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::Q;

/// Integer polynomial, coefficients a_0..a_m (constant term first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(IntPoly { coeffs })
    }

    pub fn from_i64(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// Coefficients listed from the highest degree down.
    pub fn from_descending(c: &[i64]) -> Result<Self> {
        let mut v: Vec<i64> = c.to_vec();
        v.reverse();
        Self::from_i64(&v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn negate(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Result<IntPoly> {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        IntPoly { coeffs: mul(&self.coeffs, &o.coeffs) }
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Q::from_integer(c.clone());
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminationSeq {
    pub values: Vec<BigInt>,
}

/// The (2m−1)×(2m−1) matrix: m−1 shifted rows of p's coefficients, then m
/// rows of p′'s coefficients shifted right-to-left.
pub fn discriminant_matrix(p: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = p.degree();
    let n = 2 * m - 1;
    let desc: Vec<BigInt> = p.coeffs.iter().rev().cloned().collect();
    let dder: Vec<BigInt> = (0..m).map(|k| &desc[k] * BigInt::from((m - k) as u64)).collect();
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for r in 0..m - 1 {
        for (k, c) in desc.iter().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for s in 0..m {
        let start = m - 1 - s;
        for (k, c) in dder.iter().enumerate() {
            rows[m - 1 + s][start + k] = c.clone();
        }
    }
    rows
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Nested central minors of sizes 1, 3, …, 2m−1.
pub fn inner_determinants(p: &IntPoly) -> Result<DiscriminationSeq> {
    let m = p.degree();
    if m == 0 {
        return Err(Error::Input("degree must be at least 1".into()));
    }
    if !p.leading().is_positive() {
        return Err(Error::Input("leading coefficient must be positive".into()));
    }
    let full = discriminant_matrix(p);
    let n = 2 * m - 1;
    let c = m - 1;
    // Symmetric reordering turning central minors into leading principal minors.
    let mut order = vec![c];
    for d in 1..m {
        order.push(c - d);
        order.push(c + d);
    }
    let mut a: Vec<Vec<BigInt>> = order
        .iter()
        .map(|&r| order.iter().map(|&s| full[r][s].clone()).collect())
        .collect();
    let mut values = Vec::with_capacity(m);
    let mut prev = BigInt::one();
    for k in 0..n {
        if k % 2 == 0 {
            values.push(a[k][k].clone());
        }
        if k == n - 1 {
            break;
        }
        if a[k][k].is_zero() {
            // Leading minor of size k+1 vanished; finish the odd sizes directly.
            for size in (k + 2..=n).filter(|s| s % 2 == 1) {
                let lo = c + 1 - size.div_ceil(2);
                let sub: Vec<Vec<BigInt>> =
                    (lo..lo + size).map(|r| full[r][lo..lo + size].to_vec()).collect();
                values.push(bareiss_det(sub));
            }
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(DiscriminationSeq { values })
}

fn variations<'a>(signs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        let sg = if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && sg != last {
            v += 1;
        }
        last = sg;
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub count: usize,
    pub fallback: bool,
}

pub fn count_distinct_real_roots(p: &IntPoly) -> Result<usize> {
    Ok(count_distinct_real_roots_detail(p)?.count)
}

pub fn count_distinct_real_roots_detail(p: &IntPoly) -> Result<RootCount> {
    let p = if p.leading().is_negative() { p.negate() } else { p.clone() };
    if p.degree() == 0 {
        return Ok(RootCount { count: 0, fallback: false });
    }
    let d = inner_determinants(&p)?;
    if d.values.iter().any(|v| v.is_zero()) {
        return Ok(RootCount { count: sturm_count(&p, None), fallback: true });
    }
    let one = BigInt::one();
    let alt: Vec<BigInt> = d
        .values
        .iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { -v } else { v.clone() })
        .collect();
    let v1 = variations(std::iter::once(&one).chain(alt.iter()));
    let v2 = variations(std::iter::once(&one).chain(d.values.iter()));
    let count = v1.checked_sub(v2).expect("sign-variation count is non-negative");
    Ok(RootCount { count, fallback: false })
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn derivative(a: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = a.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    trim(&mut d);
    d
}

fn primitive(mut a: Vec<BigInt>) -> Vec<BigInt> {
    let g = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in a.iter_mut() {
            *c = &*c / &g;
        }
    }
    a
}

/// Remainder of a by b scaled by a positive constant, so its sign pattern
/// matches the true remainder.
fn prem_pos(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut steps = 0u32;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, c) in b.iter().enumerate() {
            r[dr - db + k] -= &lr * c;
        }
        r.pop();
        trim(&mut r);
        steps += 1;
    }
    if lb.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    primitive(r)
}

fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(prem_pos(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        a = a.into_iter().map(|c| -c).collect();
    }
    a
}

fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut qv = vec![BigInt::zero(); a.len() - db];
    for k in (0..qv.len()).rev() {
        let c = &r[k + db] / &b[db];
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        qv[k] = c;
    }
    qv
}

fn sign_at(p: &[BigInt], x: &Q) -> i8 {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + Q::from_integer(c.clone());
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn var_i8(s: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for x in s.filter(|&x| x != 0) {
        if last != 0 && x != last {
            v += 1;
        }
        last = x;
    }
    v
}

/// Distinct real roots in the open interval (lo, hi), or on the whole line.
pub fn sturm_count(p: &IntPoly, interval: Option<(Q, Q)>) -> usize {
    let a = p.coeffs.clone();
    if a.len() <= 1 {
        return 0;
    }
    let g = poly_gcd(&a, &derivative(&a));
    let sq = primitive(exact_div(&a, &g));
    if sq.len() <= 1 {
        return 0;
    }
    let mut seq = vec![sq.clone(), primitive(derivative(&sq))];
    loop {
        let n = seq.len();
        let r = prem_pos(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(primitive(r.into_iter().map(|c| -c).collect()));
    }
    match interval {
        None => {
            let at_pos = seq.iter().map(|s| if s.last().unwrap().is_positive() { 1 } else { -1 });
            let at_neg = seq.iter().map(|s| {
                let lc = if s.last().unwrap().is_positive() { 1 } else { -1 };
                if (s.len() - 1) % 2 == 1 {
                    -lc
                } else {
                    lc
                }
            });
            var_i8(at_neg) - var_i8(at_pos)
        }
        Some((lo, hi)) => {
            if lo >= hi {
                return 0;
            }
            let vlo = var_i8(seq.iter().map(|s| sign_at(s, &lo)));
            let vhi = var_i8(seq.iter().map(|s| sign_at(s, &hi)));
            let n = vlo - vhi;
            if sign_at(&sq, &hi) == 0 {
                n - 1
            } else {
                n
            }
        }
    }
}
