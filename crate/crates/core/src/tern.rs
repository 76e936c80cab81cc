//! Fixed-size ternary tensors of dimension 3 with integer fast paths.
//! Values at integer points are exact in `i64` for coordinates up to ~10^4.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::form::{q, SignedPerm, SymTensor4, SLOTS3};

pub type Tern3 = [i8; 15];

pub const S1111: usize = 0;
pub const S1112: usize = 1;
pub const S1113: usize = 2;
pub const S1122: usize = 3;
pub const S1123: usize = 4;
pub const S1133: usize = 5;
pub const S1222: usize = 6;
pub const S1223: usize = 7;
pub const S1233: usize = 8;
pub const S1333: usize = 9;
pub const S2222: usize = 10;
pub const S2223: usize = 11;
pub const S2233: usize = 12;
pub const S2333: usize = 13;
pub const S3333: usize = 14;

pub const MULT3: [i64; 15] = [1, 4, 4, 6, 12, 6, 4, 12, 12, 4, 1, 4, 6, 4, 1];

pub const EXP3: [[u8; 3]; 15] = [
    [4, 0, 0],
    [3, 1, 0],
    [3, 0, 1],
    [2, 2, 0],
    [2, 1, 1],
    [2, 0, 2],
    [1, 3, 0],
    [1, 2, 1],
    [1, 1, 2],
    [1, 0, 3],
    [0, 4, 0],
    [0, 3, 1],
    [0, 2, 2],
    [0, 1, 3],
    [0, 0, 4],
];

pub fn to_sym(t: &Tern3) -> SymTensor4 {
    SymTensor4::new(3, t.iter().map(|&a| q(a as i64)).collect()).expect("15 entries")
}

pub fn from_sym(t: &SymTensor4) -> Result<Tern3> {
    if t.dim() != 3 {
        return Err(Error::DimMismatch { expected: 3, got: t.dim() });
    }
    let v = t.ternary_entries()?;
    let mut out = [0i8; 15];
    out.copy_from_slice(&v);
    Ok(out)
}

/// Coefficients of the expanded quartic, multiplicities folded in.
pub fn coeffs_i64(t: &Tern3) -> [i64; 15] {
    let mut c = [0i64; 15];
    for s in 0..15 {
        c[s] = MULT3[s] * t[s] as i64;
    }
    c
}

pub fn coeffs_f64(t: &Tern3) -> [f64; 15] {
    let mut c = [0f64; 15];
    for s in 0..15 {
        c[s] = (MULT3[s] * t[s] as i64) as f64;
    }
    c
}

#[inline]
pub fn eval_coeffs_i64(c: &[i64; 15], x: &[i64; 3]) -> i64 {
    let [a, b, d] = *x;
    let (a2, b2, d2) = (a * a, b * b, d * d);
    c[0] * a2 * a2
        + c[1] * a2 * a * b
        + c[2] * a2 * a * d
        + c[3] * a2 * b2
        + c[4] * a2 * b * d
        + c[5] * a2 * d2
        + c[6] * a * b2 * b
        + c[7] * a * b2 * d
        + c[8] * a * b * d2
        + c[9] * a * d2 * d
        + c[10] * b2 * b2
        + c[11] * b2 * b * d
        + c[12] * b2 * d2
        + c[13] * b * d2 * d
        + c[14] * d2 * d2
}

pub fn eval_i64(t: &Tern3, x: &[i64; 3]) -> i64 {
    eval_coeffs_i64(&coeffs_i64(t), x)
}

#[inline]
pub fn eval_coeffs_f64(c: &[f64; 15], x: &[f64; 3]) -> f64 {
    let [a, b, d] = *x;
    let (a2, b2, d2) = (a * a, b * b, d * d);
    c[0] * a2 * a2
        + c[1] * a2 * a * b
        + c[2] * a2 * a * d
        + c[3] * a2 * b2
        + c[4] * a2 * b * d
        + c[5] * a2 * d2
        + c[6] * a * b2 * b
        + c[7] * a * b2 * d
        + c[8] * a * b * d2
        + c[9] * a * d2 * d
        + c[10] * b2 * b2
        + c[11] * b2 * b * d
        + c[12] * b2 * d2
        + c[13] * b * d2 * d
        + c[14] * d2 * d2
}

/// Value and gradient of the expanded quartic.
#[inline]
pub fn eval_grad_f64(c: &[f64; 15], x: &[f64; 3]) -> (f64, [f64; 3]) {
    let mut v = 0.0;
    let mut g = [0.0; 3];
    let pw = |b: f64, e: u8| -> f64 {
        match e {
            0 => 1.0,
            1 => b,
            2 => b * b,
            3 => b * b * b,
            _ => b * b * b * b,
        }
    };
    for s in 0..15 {
        if c[s] == 0.0 {
            continue;
        }
        let e = EXP3[s];
        let p = [pw(x[0], e[0]), pw(x[1], e[1]), pw(x[2], e[2])];
        v += c[s] * p[0] * p[1] * p[2];
        for k in 0..3 {
            if e[k] > 0 {
                let mut d = c[s] * e[k] as f64 * pw(x[k], e[k] - 1);
                for m in 0..3 {
                    if m != k {
                        d *= p[m];
                    }
                }
                g[k] += d;
            }
        }
    }
    (v, g)
}

pub struct GroupTable {
    pub elems: Vec<SignedPerm>,
    /// For element g and source slot s: (image slot, sign).
    pub map: Vec<[(u8, i8); 15]>,
    pub inverse: Vec<usize>,
}

pub fn group() -> &'static GroupTable {
    static G: OnceLock<GroupTable> = OnceLock::new();
    G.get_or_init(|| {
        let elems = SignedPerm::all(3);
        let map = elems
            .iter()
            .map(|g| {
                let mut m = [(0u8, 1i8); 15];
                for (s, idx) in SLOTS3.iter().enumerate() {
                    let mut sign = 1i8;
                    let mut img = [0u8; 4];
                    for (k, &a) in idx.iter().enumerate() {
                        let a0 = (a - 1) as usize;
                        sign *= g.signs[a0];
                        img[k] = g.perm[a0] as u8 + 1;
                    }
                    m[s] = (crate::form::slot_of(3, img) as u8, sign);
                }
                m
            })
            .collect();
        let inverse = elems
            .iter()
            .map(|g| {
                let inv = g.inverse();
                elems.iter().position(|h| *h == inv).unwrap()
            })
            .collect();
        GroupTable { elems, map, inverse }
    })
}

pub fn apply_idx(t: &Tern3, gi: usize) -> Tern3 {
    let m = &group().map[gi];
    let mut out = [0i8; 15];
    for s in 0..15 {
        let (d, sg) = m[s];
        out[d as usize] = sg * t[s];
    }
    out
}

pub fn act_idx(gi: usize, x: &[i64; 3]) -> [i64; 3] {
    let g = &group().elems[gi];
    let mut y = [0i64; 3];
    for i in 0..3 {
        y[g.perm[i]] = g.signs[i] as i64 * x[i];
    }
    y
}

/// Index `k` in 0..3^12 to the unit-diagonal tensor whose off-diagonal slots,
/// in canonical order, are the base-3 digits of k (most significant first)
/// mapped 0,1,2 → −1,0,1.
pub fn off_diagonal_slots() -> [usize; 12] {
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13]
}

pub fn tensor_from_index(diag: [i8; 3], k: u64) -> Tern3 {
    let mut t = [0i8; 15];
    t[S1111] = diag[0];
    t[S2222] = diag[1];
    t[S3333] = diag[2];
    let slots = off_diagonal_slots();
    let mut r = k;
    for pos in (0..12).rev() {
        t[slots[pos]] = (r % 3) as i8 - 1;
        r /= 3;
    }
    t
}
