//! Numerical oracle: minimization of the form on the unit sphere, with exact
//! integer refinement of any negative value found.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificates::{find_negative_witness, find_negative_witness_tern, NegativeWitness};
use crate::form::{q, SymTensor4};
use crate::tern::{coeffs_f64, coeffs_i64, eval_coeffs_f64, eval_coeffs_i64, eval_grad_f64, Tern3, EXP3};

pub const TOLERANCE: f64 = -1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleStatus {
    NegativeCertified,
    NonNegativeProbable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub approx_min: f64,
    pub argmin: Vec<f64>,
    pub exact_witness: Option<NegativeWitness>,
    pub status: OracleStatus,
}

fn normalize(x: [f64; 3]) -> [f64; 3] {
    let n = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    [x[0] / n, x[1] / n, x[2] / n]
}

/// Vertices of the icosahedron subdivided `level` times (10·4^level + 2 points).
pub fn icosphere(level: u32) -> Vec<[f64; 3]> {
    let p = (1.0 + 5f64.sqrt()) / 2.0;
    let mut verts: Vec<[f64; 3]> = [
        [-1.0, p, 0.0],
        [1.0, p, 0.0],
        [-1.0, -p, 0.0],
        [1.0, -p, 0.0],
        [0.0, -1.0, p],
        [0.0, 1.0, p],
        [0.0, -1.0, -p],
        [0.0, 1.0, -p],
        [p, 0.0, -1.0],
        [p, 0.0, 1.0],
        [-p, 0.0, -1.0],
        [-p, 0.0, 1.0],
    ]
    .iter()
    .map(|v| normalize(*v))
    .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    for _ in 0..level {
        let mut mid: HashMap<(usize, usize), usize> = HashMap::new();
        let mut next = Vec::with_capacity(faces.len() * 4);
        let mut midpoint = |a: usize, b: usize, verts: &mut Vec<[f64; 3]>| -> usize {
            let key = (a.min(b), a.max(b));
            *mid.entry(key).or_insert_with(|| {
                let (u, v) = (verts[a], verts[b]);
                verts.push(normalize([u[0] + v[0], u[1] + v[1], u[2] + v[2]]));
                verts.len() - 1
            })
        };
        for f in &faces {
            let a = midpoint(f[0], f[1], &mut verts);
            let b = midpoint(f[1], f[2], &mut verts);
            let c = midpoint(f[2], f[0], &mut verts);
            next.push([f[0], a, c]);
            next.push([f[1], b, a]);
            next.push([f[2], c, b]);
            next.push([a, b, c]);
        }
        faces = next;
    }
    verts
}

pub fn grid3() -> &'static [[f64; 3]] {
    static G: OnceLock<Vec<[f64; 3]>> = OnceLock::new();
    G.get_or_init(|| icosphere(3))
}

fn grid2() -> &'static [[f64; 3]] {
    static G: OnceLock<Vec<[f64; 3]>> = OnceLock::new();
    G.get_or_init(|| {
        (0..720)
            .map(|k| {
                let a = std::f64::consts::PI * k as f64 / 720.0;
                [a.cos(), a.sin(), 0.0]
            })
            .collect()
    })
}

/// Projected gradient descent with backtracking from `x`.
fn descend(c: &[f64; 15], dim: usize, mut x: [f64; 3], iters: usize) -> (f64, [f64; 3]) {
    let (mut f, _) = eval_grad_f64(c, &x);
    let mut step = 0.05;
    for _ in 0..iters {
        let (_, g) = eval_grad_f64(c, &x);
        let gx = g[0] * x[0] + g[1] * x[1] + g[2] * x[2];
        let mut pg = [g[0] - gx * x[0], g[1] - gx * x[1], g[2] - gx * x[2]];
        if dim == 2 {
            pg[2] = 0.0;
        }
        let pn = (pg[0] * pg[0] + pg[1] * pg[1] + pg[2] * pg[2]).sqrt();
        if pn < 1e-13 {
            break;
        }
        let mut improved = false;
        for _ in 0..40 {
            let y = normalize([x[0] - step * pg[0], x[1] - step * pg[1], x[2] - step * pg[2]]);
            let fy = eval_coeffs_f64(c, &y);
            if fy < f - 1e-4 * step * pn * pn {
                x = y;
                f = fy;
                step *= 1.5;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (f, x)
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> [f64; 3] {
    loop {
        let mut v = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        if dim == 2 {
            v[2] = 0.0;
        }
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if n2 > 1e-4 && n2 <= 1.0 {
            return normalize(v);
        }
    }
}

/// Best value over grid and seeded restarts; the 8 best grid points are
/// also polished by descent.
pub fn minimize(c: &[f64; 15], dim: usize, restarts: usize, iters: usize, seed: u64) -> (f64, [f64; 3]) {
    let grid = if dim == 2 { grid2() } else { grid3() };
    let mut scored: Vec<(f64, [f64; 3])> = grid.iter().map(|x| (eval_coeffs_f64(c, x), *x)).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = scored[0];
    for &(_, x) in scored.iter().take(8) {
        let r = descend(c, dim, x, iters);
        if r.0 < best.0 {
            best = r;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let x = random_unit(&mut rng, dim);
        let r = descend(c, dim, x, iters);
        if r.0 < best.0 {
            best = r;
        }
    }
    best
}

/// Rational rounding of `approx` through denominators 1..64.
fn round_candidates(approx: &[f64]) -> Vec<[i64; 3]> {
    let m = approx.iter().fold(0f64, |m, v| m.max(v.abs()));
    if m == 0.0 {
        return vec![];
    }
    let mut out = vec![];
    for d in 1..=64i64 {
        let mut x = [0i64; 3];
        for (k, v) in approx.iter().enumerate().take(3) {
            x[k] = (v / m * d as f64).round() as i64;
        }
        if x != [0, 0, 0] {
            out.push(x);
        }
    }
    out
}

pub fn refine_witness_tern(t: &Tern3, approx: &[f64]) -> Option<NegativeWitness> {
    let c = coeffs_i64(t);
    for x in round_candidates(approx) {
        let v = eval_coeffs_i64(&c, &x);
        if v < 0 {
            return Some(NegativeWitness { x: x.to_vec(), value: q(v) });
        }
    }
    find_negative_witness_tern(t, 32)
}

pub fn refine_witness(t: &SymTensor4, approx: &[f64]) -> Option<NegativeWitness> {
    let dim = t.dim();
    for x in round_candidates(approx) {
        let xv = x[..dim].to_vec();
        if xv.iter().all(|&v| v == 0) {
            continue;
        }
        if let Ok(v) = t.evaluate_int(&xv) {
            if v < q(0) {
                return Some(NegativeWitness { x: xv, value: v });
            }
        }
    }
    find_negative_witness(t, 32)
}

fn result(approx_min: f64, argmin: Vec<f64>, w: Option<NegativeWitness>) -> OracleResult {
    let status = if w.is_some() { OracleStatus::NegativeCertified } else { OracleStatus::NonNegativeProbable };
    OracleResult { approx_min, argmin, exact_witness: w, status }
}

pub fn sphere_min(t: &Tern3, restarts: usize, iters: usize, seed: u64) -> OracleResult {
    let c = coeffs_f64(t);
    let (v, x) = minimize(&c, 3, restarts.max(1), iters.max(1), seed);
    let w = if v < TOLERANCE { refine_witness_tern(t, &x) } else { None };
    result(v, x.to_vec(), w)
}

/// Same as `sphere_min` for any dim-2 or dim-3 tensor with rational entries.
pub fn sphere_min_sym(t: &SymTensor4, restarts: usize, iters: usize, seed: u64) -> OracleResult {
    let p = t.expand();
    let mut c = [0f64; 15];
    for (e, v) in &p.terms {
        let s = EXP3.iter().position(|x| x == e).expect("quartic monomial");
        c[s] = v.to_f64().unwrap_or(0.0);
    }
    let dim = t.dim();
    let (v, x) = minimize(&c, dim, restarts.max(1), iters.max(1), seed);
    let w = if v < TOLERANCE { refine_witness(t, &x[..dim]) } else { None };
    result(v, x[..dim].to_vec(), w)
}
