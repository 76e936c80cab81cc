//! Sum-of-squares identities from the constructive subcases, written in the
//! normalized frame (i, j, k) = (1, 2, 3).
//!
//! Each display lists its squares; whatever is left of the form after
//! subtracting them goes to the remainder, which must consist of
//! nonnegative even monomials for the certificate to verify.

use num_traits::{Signed, Zero};

use crate::certificates::{verify_sos, SosCertificate};
use crate::classifier::R;
use crate::form::{q, Poly, Q};
use crate::tern::{to_sym, Tern3};
use crate::verdict::{CaseId, Family};

const I: usize = 0;
const J: usize = 1;
const K: usize = 2;

/// Σ c·x_a·x_b.
fn qf(terms: &[(i32, usize, usize)]) -> Poly {
    let mut p = Poly::zero();
    for &(c, a, b) in terms {
        if c != 0 {
            p = p.add(&Poly::var(a).mul(&Poly::var(b)).scale(&q(c as i64)));
        }
    }
    p
}

fn sq(a: usize) -> Poly {
    qf(&[(1, a, a)])
}

fn lin(terms: &[(i32, usize)]) -> Poly {
    let mut p = Poly::zero();
    for &(c, a) in terms {
        if c != 0 {
            p = p.add(&Poly::var(a).scale(&q(c as i64)));
        }
    }
    p
}

/// Squares of a display, as (coefficient, base) pairs.
struct Display(Vec<(Q, Poly)>);

impl Display {
    fn new() -> Self {
        Display(vec![])
    }

    fn s(self, c: i64, p: Poly) -> Self {
        self.sr(c, 1, p)
    }

    /// Square with coefficient n/d.
    fn sr(mut self, n: i64, d: i64, p: Poly) -> Self {
        if n != 0 && !p.is_zero() {
            self.0.push((Q::new(n.into(), d.into()), p));
        }
        self
    }

    /// Fourth power of a linear form.
    fn f(mut self, c: i64, l: Poly) -> Self {
        self.0.push((q(c), l.square()));
        self
    }
}

fn close(t: &Tern3, d: Display) -> SosCertificate {
    let mut cert = SosCertificate::new();
    let mut rest = to_sym(t).expand();
    for (c, p) in d.0 {
        rest = rest.add(&p.square().scale(&-c.clone()));
        cert.squares.push((c, p));
    }
    for (e, c) in rest.terms {
        if !c.is_zero() {
            cert.remainder.push((c, e));
        }
    }
    cert
}

/// Which version of a display to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// As printed.
    Literal,
    /// With the printed typo repaired (only differs where `erratum` says so).
    Corrected,
}

/// Description of the repair applied by `Reading::Corrected`, if any.
pub fn erratum(case: CaseId) -> Option<&'static str> {
    let s = case.subcase.unwrap_or("");
    match (case.family, s) {
        (Family::T39, "a2") => Some("branch selector printed as t_iiik t_jkkk t_ijjk; t_iiik = 0 here, read t_iiij"),
        (Family::T39, "b1") => Some("first square printed with t_iiik x_i x_j; read t_iiij"),
        (Family::T39, "b2") => Some("second branch (t_iiij t_ijkk = -1) does not expand to the form; repaired by mirroring the first branch with x_k^2 -> -x_k^2"),
        (Family::T313, "a2") => Some("last term printed as 6(x_i x_j + t_iijk x_i x_k) without the square"),
        (Family::T313, "c") => Some("last square printed with 2 t_iijk; coefficient must be t_iijk"),
        (Family::T314, "a2") => Some("second square printed with linear x_j, x_k; must be x_j^2, x_k^2"),
        (Family::T314, "d") => Some("first square printed with 3 t_iiik x_i x_k; coefficient must be 2"),
        (Family::T310, "d") => Some("display leaves -4 x_i x_j^2 x_k type terms for t_iiij t_ijjk = 1; replaced by an explicit Gram decomposition"),
        (Family::T314, "e1") => Some("fourth square printed as (x_j x_k + t_ikkk x_i x_j)^2; sign must be flipped"),
        (Family::T314, "f1") => Some("last square printed as 2(x_i x_j - t_ijkk x_j x_k)^2; must be 2(x_i x_j + t_ikkk x_j x_k)^2"),
        (Family::T314, "f2") => Some("display does not expand to the form; replaced by an explicit Gram decomposition"),
        _ => None,
    }
}

/// The display of a constructive subcase, for a normalized tensor.
pub fn display_sos(case: CaseId, t: &Tern3, reading: Reading) -> Option<SosCertificate> {
    let r = R::new(t);
    let fixed = reading == Reading::Corrected;
    let sub = case.subcase?;
    let quartics = || Display::new().s(1, sq(I)).s(1, sq(J)).s(1, sq(K));
    let d = match (case.family, sub) {
        (Family::T31, "a" | "c") => {
            quartics().s(6, qf(&[(1, I, J), (r.iijk, I, K), (r.ijjk, J, K)]))
        }
        (Family::T31, "b") => quartics(),
        (Family::T31, "d") => quartics().s(6, qf(&[(1, I, J), (r.iijk, I, K)])),
        (Family::T33, _) => Display::new().f(1, lin(&[(1, I), (r.iiij, J), (r.iiik, K)])),
        (Family::T35, "a" | "b") => {
            let first = qf(&[(1, I, I), (-1, J, J), (1, K, K), (2 * r.iiik, I, K), (2 * r.jkkk, J, K), (2 * r.iiij, I, J)]);
            if sub == "a" {
                Display::new().s(1, first).s(4, qf(&[(1, I, J), (r.ijjk, J, K)]))
            } else {
                Display::new().s(1, first).s(2, qf(&[(1, I, J), (-r.iiik, J, K)]))
            }
        }
        (Family::T38, "a") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiik, I, K)]))
            .s(1, qf(&[(1, J, J), (2 * r.ijjj, I, J)]))
            .s(1, qf(&[(1, K, K), (2 * r.jkkk, J, K)])),
        (Family::T38, "b1") => Display::new()
            .s(1, sq(I))
            .s(1, qf(&[(1, J, J), (2 * r.ijjj, I, J)]))
            .s(1, qf(&[(1, K, K), (2 * r.jkkk, J, K), (2 * r.ikkk, I, K)]))
            .s(2, qf(&[(1, J, K), (r.ijkk, I, K)])),
        (Family::T39, "a1") => Display::new()
            .s(1, sq(J))
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)]))
            .s(1, qf(&[(1, K, K), (2 * r.jkkk, J, K)])),
        (Family::T39, "a2") => {
            let sel = if fixed { r.iiij } else { r.iiik } * r.jkkk * r.ijjk;
            match sel {
                1 => Display::new()
                    .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (1, K, K), (2 * r.jkkk, J, K)]))
                    .s(1, sq(J))
                    .s(1, qf(&[(r.iiij, J, K), (r.jkkk, I, J), (-2, I, K)]))
                    .s(1, qf(&[(1, J, K), (r.ijjk, I, J)])),
                -1 => Display::new()
                    .s(1, qf(&[(1, K, K), (2 * r.jkkk, J, K), (-1, I, I), (-2 * r.iiij, I, J)]))
                    .s(1, qf(&[(r.jkkk, I, J), (r.iiij, J, K), (2, I, K)]))
                    .s(1, qf(&[(r.jkkk, J, K), (-r.iiij, I, J)]))
                    .s(1, qf(&[(1, J, J), (2 * r.ijjk, I, K)])),
                _ => Display::new(),
            }
        }
        (Family::T39, "b1") => {
            let a = if fixed { r.iiij } else { r.iiik };
            Display::new()
                .s(1, qf(&[(1, I, I), (2 * a, I, J)]))
                .s(1, qf(&[(1, J, J), (2 * r.jjjk, J, K)]))
                .s(1, sq(K))
        }
        (Family::T39, "b2") => {
            let p = r.iiij * r.jjjk;
            if r.iiij * r.ijkk == 1 {
                Display::new()
                    .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (1, K, K)]))
                    .s(1, qf(&[(1, J, J), (2 * r.jjjk, J, K), (2 * p, I, K)]))
                    .s(2, qf(&[(1, J, K), (-p, I, J)]))
            } else if fixed {
                Display::new()
                    .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (-1, K, K)]))
                    .s(1, qf(&[(1, J, J), (2 * r.jjjk, J, K), (-2 * p, I, K)]))
                    .s(2, qf(&[(1, J, K), (p, I, J)]))
            } else {
                Display::new()
                    .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (-1, K, K)]))
                    .s(1, qf(&[(1, J, J), (2 * r.jjjk, J, K), (-p, I, K)]))
                    .s(1, qf(&[(1, J, K), (p, I, J)]))
                    .s(1, qf(&[(2 + r.ijkk, I, K)]))
            }
        }
        (Family::T39, "c1") => Display::new()
            .s(1, qf(&[(1, I, I), (-1, K, K)]))
            .s(1, qf(&[(1, J, J), (2 * r.ijjj, I, J), (2 * r.jjjk, J, K), (2 * r.ijjk, I, K)]))
            .s(2, qf(&[(1, I, J), (r.iijk, I, K)]))
            .s(2, qf(&[(1, I, K), (r.ijkk, J, K)])),
        (Family::T39, "c2") => Display::new()
            .s(1, sq(I))
            .s(1, sq(K))
            .s(1, qf(&[(1, J, J), (2 * r.ijjj, I, J), (2 * r.jjjk, J, K)]))
            .s(2, qf(&[(1, I, J), (r.ijjk, J, K)])),
        (Family::T310, "a") => Display::new().s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)])).s(1, sq(J)).s(1, sq(K)),
        (Family::T310, "c") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)]))
            .s(1, sq(J))
            .s(1, sq(K))
            .s(6, qf(&[(1, I, K), (r.ijkk, J, K)])),
        (Family::T310, "d") if fixed => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (-2 * r.ijjk, J, K)]))
            .s(1, qf(&[(1, J, J), (r.ijjk, I, K)]))
            .sr(1, 2, qf(&[(2, I, J), (2 * r.ijjk, I, K), (-1, J, K)]))
            .sr(1, 3, qf(&[(3, I, K), (r.ijjk, J, K)]))
            .sr(7, 6, qf(&[(1, J, K)])),
        (Family::T310, "d") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (2 * r.iiij * r.ijjk, J, K)]))
            .s(1, qf(&[(1, J, J), (2 * r.ijjk, I, K)]))
            .s(1, sq(K))
            .s(2, qf(&[(1, I, J), (-r.iiij * r.ijjk, J, K)])),
        (Family::T312, "a") => Display::new()
            .s(1, qf(&[(1, I, I), (1, J, J), (-1, K, K), (2 * r.iiik, I, K), (2 * r.jjjk, J, K)]))
            .s(1, qf(&[(2, I, J), (-r.iiik, J, K), (-r.jjjk, I, K)]))
            .s(1, qf(&[(1, I, K), (r.ijkk, J, K)])),
        (Family::T313, "a1") => Display::new().s(1, sq(I)).f(1, lin(&[(1, J), (r.jjjk, K)])),
        (Family::T313, "a2") => {
            let d = Display::new().s(1, sq(I)).f(1, lin(&[(1, J), (r.jjjk, K)]));
            if fixed {
                d.s(6, qf(&[(1, I, J), (r.iijk, I, K)]))
            } else {
                // Printed without the square: not a sum of squares as written.
                d
            }
        }
        (Family::T313, "a2w") => {
            let first = qf(&[(-1, I, I), (1, J, J), (1, K, K), (2 * r.jjjk, J, K)]);
            if r.iikk == 0 {
                Display::new().s(1, first).s(2, qf(&[(1, I, K), (2 * r.iijk, I, J)]))
            } else {
                Display::new().s(1, first).s(2, qf(&[(1, I, J), (2 * r.iijk, I, K)]))
            }
        }
        (Family::T313, "b") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)]))
            .f(1, lin(&[(1, J), (r.jjjk, K)])),
        (Family::T313, "c") => {
            let c = if fixed { r.iijk } else { 2 * r.iijk };
            Display::new()
                .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (2 * r.iiik, I, K)]))
                .f(1, lin(&[(1, J), (r.jjjk, K)]))
                .s(2, qf(&[(1, I, J), (c, I, K)]))
        }
        (Family::T313, "d") => Display::new()
            .s(1, sq(I))
            .s(1, qf(&[(1, J, J), (1, K, K), (2 * r.ijjj, I, J), (2 * r.ikkk, I, K), (2 * r.jjjk, J, K)]))
            .s(2, qf(&[(1, I, J), (r.iijk, I, K)])),
        (Family::T314, "a1") => Display::new()
            .s(1, sq(I))
            .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K)])),
        (Family::T314, "a2") => {
            let second = if fixed {
                qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K)])
            } else {
                // Printed with linear x_j, x_k: not homogeneous as written.
                lin(&[(r.jjjk, J), (r.jkkk, K)]).add(&qf(&[(2, J, K)]))
            };
            Display::new().s(1, sq(I)).s(1, second).s(6, qf(&[(1, I, J), (r.iijk, I, K)]))
        }
        (Family::T314, "b1") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)]))
            .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K)])),
        (Family::T314, "c1") => Display::new()
            .s(1, sq(I))
            .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K), (2 * r.ijjj * r.jjjk, I, J)]))
            .s(1, qf(&[(2, I, K), (r.ijjj, J, K)]))
            .s(2, qf(&[(1, I, J), (r.ijjk, J, K)])),
        (Family::T314, "d") => {
            let c = if fixed { 2 } else { 3 };
            Display::new()
                .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (c * r.iiik, I, K)]))
                .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K)]))
                .s(2, qf(&[(1, I, J), (r.iijk, I, K)]))
        }
        (Family::T314, "e1") => Display::new()
            .s(1, qf(&[(1, I, I), (-1, J, K)]))
            .s(1, qf(&[(1, J, J), (-1, K, K), (2, J, K), (2 * r.ijjj, I, J), (-2 * r.ikkk, I, K)]))
            .s(1, qf(&[(1, I, K), (r.ikkk, J, K), (-1, I, J)]))
            .s(1, qf(&[(1, J, K), (if fixed { -r.ikkk } else { r.ikkk }, I, J)]))
            .s(1, qf(&[(1, I, K), (-r.ikkk, J, K)])),
        (Family::T314, "e2") => Display::new()
            .s(1, qf(&[(1, I, I), (1, J, K)]))
            .s(1, qf(&[(1, J, J), (-1, K, K), (2, J, K), (2 * r.ijjj, I, J), (-2 * r.ikkk, I, K)]))
            .s(1, qf(&[(1, I, K), (r.ijjj, J, K), (1, I, J)]))
            .s(1, qf(&[(1, J, K), (r.ijjj, I, K)]))
            .s(1, qf(&[(1, I, J), (-r.ijjj, J, K)])),
        (Family::T314, "f1") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J)]))
            .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K), (2 * r.jkkk * r.ikkk, I, K)]))
            .s(2, qf(&[(1, I, K), (r.ijkk, J, K)]))
            .s(2, qf(&[(1, I, J), (if fixed { r.ikkk } else { -r.ijkk }, J, K)])),
        (Family::T314, "f2") if fixed => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (-r.ijjk, J, K)]))
            .s(1, qf(&[(1, J, J), (-1, K, K), (-2 * r.ikkk, I, K), (2 * r.jjjk, J, K)]))
            .sr(1, 2, qf(&[(2, I, J), (-r.ijkk, I, K), (2 * r.ijjk, J, K)]))
            .sr(1, 6, qf(&[(3, I, K), (-2 * r.ijjk, J, K)]))
            .sr(1, 3, qf(&[(1, J, K)])),
        (Family::T314, "f2") => Display::new()
            .s(1, qf(&[(1, I, I), (2 * r.iiij, I, J), (2 * r.iiij * r.ijjk, J, K)]))
            .s(1, qf(&[(r.jjjk, J, J), (r.jkkk, K, K), (2, J, K), (2 * r.jkkk * r.ikkk, I, K)]))
            .s(1, qf(&[(1, I, K), (r.ijkk, J, K), (-r.iiij * r.ijjk, I, J)]))
            .s(1, qf(&[(1, I, K), (r.ijkk, J, K)]))
            .s(1, qf(&[(1, I, J), (r.ijjk, J, K)])),
        _ => return None,
    };
    if d.0.is_empty() {
        return Some(close(t, Display::new()));
    }
    Some(close(t, d))
}

/// Certificate for a normalized tensor: the printed display when it
/// verifies, else the repaired one.
pub fn build_sos_normalized(case: CaseId, t: &Tern3) -> Option<SosCertificate> {
    let sym = to_sym(t);
    for reading in [Reading::Literal, Reading::Corrected] {
        if let Some(c) = display_sos(case, t, reading) {
            if verify_sos(&c, &sym) {
                return Some(c);
            }
        }
    }
    None
}

/// Certificate for a tensor with zero diagonal entries: the certificate of
/// its unit-diagonal lift, minus the added fourth powers. Works whenever the
/// lift's remainder already contains those fourth powers.
pub fn lift_sos(lift_cert: &SosCertificate, zero_axes: &[usize]) -> Option<SosCertificate> {
    let mut c = lift_cert.clone();
    for &a in zero_axes {
        let mut e = [0u8; 3];
        e[a] = 4;
        if let Some(pos) = c.remainder.iter().position(|(_, m)| *m == e) {
            c.remainder[pos].0 -= Q::from_integer(1.into());
            if c.remainder[pos].0.is_zero() {
                c.remainder.remove(pos);
            } else if c.remainder[pos].0.is_negative() {
                return None;
            }
        } else if let Some(pos) = c.squares.iter().position(|(k, p)| *k == q(1) && *p == Poly::monomial(quad(a), q(1))) {
            c.squares.remove(pos);
        } else {
            return None;
        }
    }
    Some(c)
}

fn quad(a: usize) -> [u8; 3] {
    let mut e = [0u8; 3];
    e[a] = 2;
    e
}

pub fn citation_note(case: CaseId) -> &'static str {
    let s = case.subcase.unwrap_or("");
    match (case.family, s) {
        (Family::T38, "b2")
        | (Family::T39, "a3")
        | (Family::T39, "b3")
        | (Family::T310, "b")
        | (Family::T312, "b1")
        | (Family::T312, "b2")
        | (Family::T314, "b2")
        | (Family::T314, "c2") => "positive definite by distinct-real-root counting of the inner determinants",
        (Family::T312, "a0") | (Family::T315, "a") => "nonnegative by critical-point analysis of the dehomogenized form",
        (Family::Cor4 | Family::Cor5, _) => "nonnegative as the zero-diagonal restriction of a unit-diagonal case",
        _ => "nonnegative by case analysis",
    }
}
