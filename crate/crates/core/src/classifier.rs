//! Decision procedure for ternary-entry 3-dimensional quartic tensors.
//!
//! Every family is written in a normalized frame where the roles (i, j, k)
//! are the axes (1, 2, 3). A tensor belongs to a family when some signed
//! permutation brings it into that frame; a subcase holds when its
//! conditions hold for at least one such normalizing element.

use num_traits::Signed;

use crate::certificates::{
    find_negative_witness, find_negative_witness_tern, find_zero_witness, CaseCitation, Certificate,
    verify_sos, NegativeWitness, SosCertificate, ZeroWitness,
};
use crate::error::{Error, Result};
use crate::form::{q, SymTensor4};
use crate::sos;
use crate::tern::*;
use crate::verdict::{CaseId, Family, Tri, Verdict};

/// Two readings of a clause in the T3.9 (a3) subcase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A3Reading {
    /// `[t_iijk t_jkkk = −1 and t_ijkk = 0] or [t_ijkk t_iiij = −1 and t_iijk = 0]`
    Split,
    /// `[t_iijk t_jkkk = −1 and t_ijkk = 0 or t_ijkk t_iiij = −1] and t_iijk = 0`
    Trailing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub a3_reading: A3Reading,
    /// Accept the weakened T3.13 (a2) clause when t_iijk t_jjjk = −1.
    pub t313_a2_weak: bool,
    /// Bound for the witness scan on NO verdicts.
    pub witness_bound: i64,
}

impl Default for Options {
    fn default() -> Self {
        Options { a3_reading: A3Reading::Split, t313_a2_weak: true, witness_bound: 32 }
    }
}

/// Entries of a tensor under the role names (i, j, k) = (1, 2, 3).
#[derive(Clone, Copy, Debug)]
pub(crate) struct R {
    pub(crate) iiij: i32,
    pub(crate) ijjj: i32,
    pub(crate) jjjk: i32,
    pub(crate) jkkk: i32,
    pub(crate) iiik: i32,
    pub(crate) ikkk: i32,
    pub(crate) iijj: i32,
    pub(crate) jjkk: i32,
    pub(crate) iikk: i32,
    pub(crate) iijk: i32,
    pub(crate) ijjk: i32,
    pub(crate) ijkk: i32,
}

impl R {
    pub(crate) fn new(t: &Tern3) -> R {
        let g = |s: usize| t[s] as i32;
        R {
            iiij: g(S1112),
            ijjj: g(S1222),
            jjjk: g(S2223),
            jkkk: g(S2333),
            iiik: g(S1113),
            ikkk: g(S1333),
            iijj: g(S1122),
            jjkk: g(S2233),
            iikk: g(S1133),
            iijk: g(S1123),
            ijjk: g(S1223),
            ijkk: g(S1233),
        }
    }

    fn mixed_zero(&self) -> bool {
        self.iijk == 0 && self.ijjk == 0 && self.ijkk == 0
    }

    fn pairs_one(&self) -> bool {
        self.iijj == 1 && self.jjkk == 1 && self.iikk == 1
    }

    fn mixed_two_neg_one_pos(&self) -> bool {
        let mut v = [self.iijk, self.ijjk, self.ijkk];
        v.sort_unstable();
        v == [-1, -1, 1]
    }
}

fn bin(v: i32) -> bool {
    v == 0 || v == 1
}

fn nz(v: i32) -> bool {
    v != 0
}

/// Pair products (p12, p23, p13).
pub fn pair_products(t: &Tern3) -> [i32; 3] {
    [
        t[S1112] as i32 * t[S1222] as i32,
        t[S2223] as i32 * t[S2333] as i32,
        t[S1113] as i32 * t[S1333] as i32,
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairPattern {
    BothZero,
    OneNonzero,
    ProductNonzero,
}

pub fn pair_patterns(t: &Tern3) -> [PairPattern; 3] {
    let pat = |a: i8, b: i8| match (a != 0, b != 0) {
        (false, false) => PairPattern::BothZero,
        (true, true) => PairPattern::ProductNonzero,
        _ => PairPattern::OneNonzero,
    };
    [pat(t[S1112], t[S1222]), pat(t[S2223], t[S2333]), pat(t[S1113], t[S1333])]
}

/// Family selected by the multiset of pair products and the zero pattern.
pub fn dispatch_family(t: &Tern3) -> Family {
    let mut p = pair_products(t);
    p.sort_unstable();
    match p {
        [1, 1, 1] => Family::T33,
        [-1, 1, 1] | [0, 1, 1] | [-1, -1, -1] => Family::R1,
        [-1, -1, 1] => Family::T35,
        [0, 0, 1] => Family::T313,
        [-1, 0, 0] => Family::T314,
        [-1, 0, 1] => Family::T315,
        [-1, -1, 0] => Family::T312,
        [0, 0, 0] => {
            let both_zero = pair_patterns(t).iter().filter(|p| **p == PairPattern::BothZero).count();
            match both_zero {
                3 => Family::T31,
                2 => Family::T310,
                1 => Family::T39,
                _ => Family::T38,
            }
        }
        _ => Family::NotCovered,
    }
}

/// Hypothesis of a family in the normalized frame.
fn hypothesis(f: Family, t: &Tern3) -> bool {
    let r = R::new(t);
    let one_nz = |a: i32, b: i32| a * b == 0 && a + b != 0;
    match f {
        Family::T31 => r.iiij == 0 && r.ijjj == 0 && r.jjjk == 0 && r.jkkk == 0 && r.iiik == 0 && r.ikkk == 0,
        Family::T33 => r.iiij * r.ijjj == 1 && r.jjjk * r.jkkk == 1 && r.iiik * r.ikkk == 1,
        Family::T35 => r.iiij * r.ijjj == -1 && r.jjjk * r.jkkk == -1 && r.iiik * r.ikkk == 1,
        Family::T38 => one_nz(r.iiij, r.ijjj) && one_nz(r.jjjk, r.jkkk) && one_nz(r.iiik, r.ikkk),
        Family::T39 => r.iiik == 0 && r.ikkk == 0 && one_nz(r.iiij, r.ijjj) && one_nz(r.jjjk, r.jkkk),
        Family::T310 => {
            r.iiij != 0 && r.ijjj == 0 && r.jjjk == 0 && r.jkkk == 0 && r.iiik == 0 && r.ikkk == 0
        }
        Family::T312 => r.iiij * r.ijjj == 0 && r.jjjk * r.jkkk == -1 && r.iiik * r.ikkk == -1,
        Family::T313 => r.iiij * r.ijjj == 0 && r.iiik * r.ikkk == 0 && r.jjjk * r.jkkk == 1,
        Family::T314 => r.iiij * r.ijjj == 0 && r.iiik * r.ikkk == 0 && r.jjjk * r.jkkk == -1,
        Family::T315 => r.iiij * r.ijjj == 0 && r.jjjk * r.jkkk == -1 && r.iiik * r.ikkk == 1,
        Family::R1 => true,
        Family::Cor1 => t[S1111] == 0 && t[S2222] == 0 && t[S3333] == 0,
        Family::Cor4 => t[S1111] == 0 && t[S2222] == 1 && t[S3333] == 1,
        Family::Cor5 => t[S1111] == 0 && t[S2222] == 0 && t[S3333] == 1,
        _ => false,
    }
}

fn th31(r: &R) -> Option<&'static str> {
    if [r.iijk, r.ijjk, r.ijkk] == [1, 1, 1] && r.pairs_one() {
        return Some("a");
    }
    if r.mixed_zero() && bin(r.iijj) && bin(r.jjkk) && bin(r.iikk) {
        return Some("b");
    }
    if r.mixed_two_neg_one_pos() && r.pairs_one() {
        return Some("c");
    }
    if nz(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.iijj == 1 && r.iikk == 1 && bin(r.jjkk) {
        return Some("d");
    }
    None
}

fn th33(t: &Tern3) -> Option<&'static str> {
    // Every role assignment must satisfy the product conditions.
    for gi in 0..48 {
        if group().elems[gi].signs.iter().any(|&s| s < 0) {
            continue;
        }
        let r = R::new(&apply_idx(t, gi));
        if r.iiij * r.jjjk * r.ikkk != 1 || r.iijk * r.iiij * r.iiik != 1 || r.iijj != 1 {
            return None;
        }
    }
    Some("a")
}

fn th35(r: &R) -> Option<&'static str> {
    let base = r.iijk * r.jkkk == 1 && r.ijkk * r.iiij == 1 && r.iiik * r.jkkk * r.iiij == 1 && r.pairs_one();
    if !base {
        return None;
    }
    match r.ijjk * r.iiik {
        1 => Some("a"),
        0 => Some("b"),
        _ => None,
    }
}

fn th38(r: &R) -> Option<&'static str> {
    if !r.pairs_one() {
        return None;
    }
    if r.mixed_zero() && r.iiij == 0 && r.jjjk == 0 && r.ikkk == 0 && nz(r.ijjj) && nz(r.jkkk) && nz(r.iiik) {
        return Some("a");
    }
    if r.iiij == 0 && r.jjjk == 0 && r.iiik == 0 {
        let p = r.ijjj * r.jkkk * r.ikkk;
        if r.iijk == 0 && r.ijjk == 0 && p != 0 && r.ijkk * r.ijjj == p {
            return Some("b1");
        }
        if p == 1 && r.iijk * r.jkkk == -1 && r.ijjk * r.ikkk == -1 && r.ijkk == 0 {
            return Some("b2");
        }
    }
    None
}

fn th39(r: &R, o: &Options) -> Option<&'static str> {
    if nz(r.iiij) && nz(r.jkkk) {
        if r.mixed_zero() && bin(r.iikk) && r.iijj == 1 && r.jjkk == 1 {
            return Some("a1");
        }
        if nz(r.ijjk) && r.iijk == 0 && r.ijkk == 0 && r.pairs_one() {
            return Some("a2");
        }
        if r.pairs_one() && -r.iiij * r.jkkk * r.ijjk == 1 {
            let first = r.iijk * r.jkkk == -1 && r.ijkk == 0;
            let second = r.ijkk * r.iiij == -1 && r.iijk == 0;
            let ok = match o.a3_reading {
                A3Reading::Split => first || second,
                A3Reading::Trailing => (first || r.ijkk * r.iiij == -1) && r.iijk == 0,
            };
            if ok {
                return Some("a3");
            }
        }
    }
    if nz(r.iiij) && nz(r.jjjk) {
        if r.mixed_zero() && bin(r.iikk) && r.iijj == 1 && r.jjkk == 1 {
            return Some("b1");
        }
        if nz(r.ijkk) && r.iijk == 0 && r.ijjk == 0 && r.pairs_one() {
            return Some("b2");
        }
        if r.pairs_one() && -r.iiij * r.jjjk * r.ijjk == 1 && -r.ijkk * r.iiij == 1 && r.iijk == 0 {
            return Some("b3");
        }
    }
    if nz(r.ijjj) && nz(r.jjjk) && r.ijjj * r.jjjk * r.ijjk == 1 {
        if r.ijjj * r.ijkk == 1 && r.jjjk * r.iijk == 1 && r.pairs_one() {
            return Some("c1");
        }
        if r.iijk == 0 && r.ijkk == 0 && bin(r.iikk) && r.iijj == 1 && r.jjkk == 1 {
            return Some("c2");
        }
    }
    None
}

fn th310(r: &R) -> Option<&'static str> {
    if r.mixed_zero() && r.iijj == 1 && bin(r.iikk) && bin(r.jjkk) {
        return Some("a");
    }
    if !r.pairs_one() {
        return None;
    }
    if r.ijkk == 0 && r.iijk * r.ijjk * r.iiij == 1 {
        return Some("b");
    }
    if nz(r.ijkk) && r.iijk == 0 && r.ijjk == 0 {
        return Some("c");
    }
    if r.iijk == 0 && r.ijkk == 0 && nz(r.ijjk) {
        return Some("d");
    }
    None
}

fn th312(r: &R) -> Option<&'static str> {
    if r.iiij == 0 && r.ijjj == 0 {
        if r.iijk == 0 && r.ijjk == 0 && r.jjjk * r.iiik * r.ijkk == 1 && r.jjkk == 1 && r.iikk == 1 {
            match r.iijj {
                1 => return Some("a"),
                0 => return Some("a0"),
                _ => {}
            }
        }
        return None;
    }
    if r.ijjj == 0 && r.iiij * r.jkkk * r.ikkk == 1 {
        let tail = (r.ijjk == 0 && r.ijkk == 0) || (r.iijk * r.ijjk * r.ijkk == 1 && r.iiij * r.ijkk == 1);
        if r.iijk * r.iiij * r.iiik == 1 && tail && r.pairs_one() {
            return Some(if r.ijjk == 0 { "b1" } else { "b2" });
        }
    }
    None
}

fn th313(r: &R, o: &Options) -> Option<&'static str> {
    if r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0 {
        if r.mixed_zero() && r.jjkk == 1 && bin(r.iijj) && bin(r.iikk) {
            return Some("a1");
        }
        if nz(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.pairs_one() {
            return Some("a2");
        }
        if o.t313_a2_weak
            && r.iijk * r.jjjk == -1
            && r.ijjk == 0
            && r.ijkk == 0
            && r.jjkk == 1
            && bin(r.iijj)
            && bin(r.iikk)
            && r.iijj + r.iikk >= 1
        {
            return Some("a2w");
        }
    }
    if r.mixed_zero() && r.ijjj == 0 && r.ikkk == 0 && r.iiik == 0 && nz(r.iiij) && r.iijj == 1 && r.jjkk == 1 && bin(r.iikk)
    {
        return Some("b");
    }
    if r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.iiij * r.iiik == 1 && r.pairs_one() {
        return Some("c");
    }
    if r.iiij == 0
        && r.iiik == 0
        && r.ijjj * r.ijkk == 1
        && r.ikkk * r.ijjk == 1
        && r.ijjj * r.ikkk * r.iijk == 1
        && r.ikkk * r.jjjk * r.ijkk == 1
        && r.ijjj * r.jjjk * r.ijjk == 1
        && r.pairs_one()
    {
        return Some("d");
    }
    None
}

fn th314(r: &R) -> Option<&'static str> {
    if r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0 {
        if r.mixed_zero() && r.jjkk == 1 && bin(r.iijj) && bin(r.iikk) {
            return Some("a1");
        }
        if nz(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.pairs_one() {
            return Some("a2");
        }
    }
    if nz(r.iiij) && r.ijjj == 0 && r.ikkk == 0 && r.iiik == 0 {
        if r.mixed_zero() && r.iijj == 1 && r.jjkk == 1 && bin(r.iikk) {
            return Some("b1");
        }
        if r.ijkk == 0 && r.iijk * r.jkkk == 1 && r.ijjk * r.iiij * r.jkkk == 1 && r.pairs_one() {
            return Some("b2");
        }
    }
    if nz(r.ijjj) && r.iiij == 0 && r.ikkk == 0 && r.iiik == 0 && r.pairs_one() {
        if r.iijk == 0 && r.ijkk == 0 && r.ijjj * r.jjjk * r.ijjk == 1 {
            return Some("c1");
        }
        if r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.jkkk == 1 {
            return Some("c2");
        }
    }
    if r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.iiij * r.iiik == 1 && r.pairs_one() {
        return Some("d");
    }
    if r.iiij == 0 && r.iiik == 0 && r.jjjk == 1 && r.pairs_one() {
        if r.ijjj * r.ikkk == 1 && r.iijk == -1 && r.ijkk * r.ijjj == -1 && r.ijjk == 0 {
            return Some("e1");
        }
        if r.ijjj * r.ikkk == -1 && r.iijk == 1 && r.ijjk * r.ijjj == 1 && r.ijkk == 0 {
            return Some("e2");
        }
    }
    if r.ijjj == 0 && r.iiik == 0 && r.iijk == 0 && r.ikkk * r.jkkk * r.ijkk == 1 && r.pairs_one() {
        if r.ijjk == 0 {
            return Some("f1");
        }
        if r.iiij * r.ikkk * r.jjjk == 1 && r.ijjk * r.ikkk == -1 && r.ijkk * r.iiij == -1 {
            return Some("f2");
        }
    }
    None
}

fn th315(r: &R) -> Option<&'static str> {
    if r.pairs_one()
        && r.iijk * r.iiij * r.iiik == 1
        && r.ijkk * r.ikkk * r.jkkk == 1
        && r.iiij * r.iiik * r.jkkk == 1
        && r.ijjk == 0
        && r.ijjj == 0
    {
        return Some("a");
    }
    None
}

/// Single nonzero mixed entry t_mmab with both pairs through m equal to 1
/// and the remaining pair in {0, 1}.
fn single_mixed(r: &R) -> bool {
    let nzc = [r.iijk, r.ijjk, r.ijkk].iter().filter(|v| **v != 0).count();
    if nzc != 1 {
        return false;
    }
    if nz(r.iijk) {
        r.iijj == 1 && r.iikk == 1 && bin(r.jjkk)
    } else if nz(r.ijjk) {
        r.iijj == 1 && r.jjkk == 1 && bin(r.iikk)
    } else {
        r.iikk == 1 && r.jjkk == 1 && bin(r.iijj)
    }
}

fn cor1(r: &R) -> Option<&'static str> {
    th31(r)
}

fn cor4(r: &R) -> Option<&'static str> {
    if r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.jkkk == 0 {
        if [r.iijk, r.ijjk, r.ijkk] == [1, 1, 1] && r.pairs_one() {
            return Some("a1");
        }
        if r.mixed_zero() && bin(r.iijj) && bin(r.jjkk) && bin(r.iikk) {
            return Some("a2");
        }
        if r.mixed_two_neg_one_pos() && r.pairs_one() {
            return Some("a3");
        }
        if single_mixed(r) {
            return Some("a4");
        }
    }
    if r.jjjk == 0 && r.pairs_one() && r.iijk == 0 && r.ijjk == 0 {
        let p = r.ijjj * r.jkkk * r.ikkk;
        if p != 0 && r.ijkk * r.ijjj == p {
            return Some("b");
        }
    }
    if nz(r.jkkk) && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 {
        if r.mixed_zero() && r.jjkk == 1 && bin(r.iikk) && bin(r.iijj) {
            return Some("c1");
        }
        if nz(r.iijk) && r.ijkk == 0 && r.ijjk == 0 && r.pairs_one() {
            return Some("c2");
        }
        if r.iijk == 0 && r.ijkk == 0 && nz(r.ijjk) && r.pairs_one() {
            return Some("c3");
        }
    }
    if r.ijjj == 0
        && r.jjjk == 0
        && nz(r.ikkk)
        && nz(r.jkkk)
        && r.ikkk * r.jkkk * r.ijkk == 1
        && r.iikk == 1
        && r.jjkk == 1
        && r.iijk == 0
        && r.ijjk == 0
        && bin(r.iijj)
    {
        return Some("d");
    }
    if nz(r.ijjj) && nz(r.ikkk) && r.jjjk == 0 && r.jkkk == 0 {
        if r.mixed_zero() && bin(r.jjkk) && r.iijj == 1 && r.iikk == 1 {
            return Some("e1");
        }
        if r.ijkk == 0 && r.ijjk == 0 && r.iijk * r.ijjj * r.ikkk == 1 && r.pairs_one() {
            return Some("e2");
        }
    }
    if nz(r.ijjj)
        && nz(r.jkkk)
        && r.ikkk == 0
        && r.jjjk == 0
        && r.mixed_zero()
        && bin(r.iikk)
        && r.iijj == 1
        && r.jjkk == 1
    {
        return Some("f");
    }
    if nz(r.jjjk) && r.jjjk == r.jkkk {
        if r.ijjj == 0 && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 && bin(r.iijj) && bin(r.iikk) {
            return Some("g1");
        }
        if nz(r.iijk) && r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.pairs_one() {
            return Some("g2");
        }
        if r.ijjj * r.ijkk == 1
            && r.ikkk * r.ijjk == 1
            && r.ijjj * r.ikkk * r.iijk == 1
            && r.ikkk * r.jjjk * r.ijkk == 1
            && r.ijjj * r.jjjk * r.ijjk == 1
            && r.pairs_one()
        {
            return Some("g3");
        }
    }
    if nz(r.jjjk) && r.jjjk == -r.jkkk {
        if r.ijjj == 0 && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 && bin(r.iijj) && bin(r.iikk) {
            return Some("h1");
        }
        if nz(r.iijk) && r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.pairs_one() {
            return Some("h2");
        }
        if nz(r.ijjj) && r.ikkk == 0 && r.iijk == 0 && r.ijkk == 0 && r.ijjj * r.jjjk * r.ijjk == 1 && r.pairs_one() {
            return Some("h3");
        }
    }
    None
}

fn cor5(r: &R) -> Option<&'static str> {
    if r.ikkk == 0 && r.jkkk == 0 {
        if [r.iijk, r.ijjk, r.ijkk] == [1, 1, 1] && r.pairs_one() {
            return Some("a1");
        }
        if r.mixed_zero() && bin(r.iijj) && bin(r.jjkk) && bin(r.iikk) {
            return Some("a2");
        }
        if r.mixed_two_neg_one_pos() && r.pairs_one() {
            return Some("a3");
        }
        if nz(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.iijj == 1 && r.iikk == 1 && bin(r.jjkk) {
            return Some("a4");
        }
    }
    if nz(r.jkkk) && r.ikkk == 0 {
        if r.mixed_zero() && r.jjkk == 1 && bin(r.iikk) && bin(r.iijj) {
            return Some("b1");
        }
        if nz(r.iijk) && r.ijkk == 0 && r.ijjk == 0 && r.pairs_one() {
            return Some("b2");
        }
    }
    if nz(r.ikkk)
        && nz(r.jkkk)
        && r.ikkk * r.jkkk * r.ijkk == 1
        && r.iikk == 1
        && r.jjkk == 1
        && r.iijk == 0
        && r.ijjk == 0
        && bin(r.iijj)
    {
        return Some("c");
    }
    None
}

fn conditions(f: Family, t: &Tern3, o: &Options) -> Option<&'static str> {
    let r = R::new(t);
    match f {
        Family::T31 => th31(&r),
        Family::T33 => th33(t),
        Family::T35 => th35(&r),
        Family::T38 => th38(&r),
        Family::T39 => th39(&r, o),
        Family::T310 => th310(&r),
        Family::T312 => th312(&r),
        Family::T313 => th313(&r, o),
        Family::T314 => th314(&r),
        Family::T315 => th315(&r),
        Family::Cor1 => cor1(&r),
        Family::Cor4 => cor4(&r),
        Family::Cor5 => cor5(&r),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PdMeta {
    Pd,
    NotPd,
}

fn pd_meta(f: Family, sub: &str) -> PdMeta {
    match f {
        Family::T31 | Family::T38 | Family::T39 | Family::T310 | Family::T314 => PdMeta::Pd,
        Family::T312 if sub != "a0" => PdMeta::Pd,
        _ => PdMeta::NotPd,
    }
}

/// Binary PSD check on each coordinate pair; returns a witness in the
/// offending plane.
pub fn necessary_pair_filter(t: &Tern3) -> Option<NegativeWitness> {
    for (a, b) in [(1u8, 2u8), (1, 3), (2, 3)] {
        let s = |idx: [u8; 4]| t[crate::form::slot_of(3, idx)];
        let aaab = s([a, a, a, b]);
        let aabb = s([a, a, b, b]);
        let abbb = s([a, b, b, b]);
        let ok = (aabb == 0 && aaab == 0 && abbb == 0) || aabb == 1;
        if !ok {
            let t2 = SymTensor4::from_ints(
                2,
                &[s([a, a, a, a]) as i64, aaab as i64, aabb as i64, abbb as i64, s([b, b, b, b]) as i64],
            )
            .expect("five entries");
            let w = find_negative_witness(&t2, 8)?;
            let mut x = vec![0i64; 3];
            x[(a - 1) as usize] = w.x[0];
            x[(b - 1) as usize] = w.x[1];
            return Some(NegativeWitness { x, value: w.value });
        }
    }
    None
}

fn zero_diagonal_ok(t: &Tern3) -> bool {
    for i in 1u8..=3 {
        let s = |idx: [u8; 4]| t[crate::form::slot_of(3, idx)];
        if s([i, i, i, i]) != 0 {
            continue;
        }
        for j in 1u8..=3 {
            if j != i && (s([i, i, i, j]) != 0 || s([i, i, j, j]) < 0) {
                return false;
            }
        }
    }
    true
}

/// Family for any ternary tensor (routing on the diagonal first).
pub fn family_of(t: &Tern3) -> Family {
    let d = [t[S1111], t[S2222], t[S3333]];
    if d.iter().any(|&v| v < 0) {
        return Family::DiagNegative;
    }
    match d.iter().filter(|&&v| v == 0).count() {
        0 => dispatch_family(t),
        1 => Family::Cor4,
        2 => Family::Cor5,
        _ => Family::Cor1,
    }
}

/// Qualifying group elements and the lexicographically smallest image.
pub fn dispatch(t: &Tern3) -> (CaseId, usize) {
    let f = family_of(t);
    if f == Family::DiagNegative {
        return (CaseId::new(f, None), 0);
    }
    match qualifying(f, t).into_iter().min_by_key(|(img, _)| *img) {
        Some((_, gi)) => (CaseId::new(f, None), gi),
        None => (CaseId::new(Family::NotCovered, None), 0),
    }
}

fn qualifying(f: Family, t: &Tern3) -> Vec<(Tern3, usize)> {
    (0..48)
        .filter_map(|gi| {
            let img = apply_idx(t, gi);
            if f == Family::R1 || hypothesis(f, &img) {
                Some((img, gi))
            } else {
                None
            }
        })
        .collect()
}

/// Zero of a PSD form: a product-one pair plane, a zero diagonal axis, or a
/// small integer point.
fn zero_witness_for(t: &Tern3, sym: &SymTensor4) -> Option<ZeroWitness> {
    let s = |idx: [u8; 4]| t[crate::form::slot_of(3, idx)] as i64;
    let mut hint: Option<Vec<i64>> = None;
    for i in 1u8..=3 {
        if s([i, i, i, i]) == 0 {
            let mut x = vec![0; 3];
            x[(i - 1) as usize] = 1;
            hint = Some(x);
            break;
        }
    }
    if hint.is_none() {
        for (a, b) in [(1u8, 2u8), (1, 3), (2, 3)] {
            let aaab = s([a, a, a, b]);
            if aaab * s([a, b, b, b]) == 1 {
                let mut x = vec![0; 3];
                x[(a - 1) as usize] = 1;
                x[(b - 1) as usize] = -aaab;
                hint = Some(x);
                break;
            }
        }
    }
    let hq = hint.map(|h| h.into_iter().map(q).collect::<Vec<_>>());
    find_zero_witness(sym, hq.as_deref(), 6)
}

pub fn classify(t: &SymTensor4) -> Result<Verdict> {
    classify_with(t, &Options::default())
}

pub fn classify_with(t: &SymTensor4, o: &Options) -> Result<Verdict> {
    if t.dim() != 3 {
        return Err(Error::DimMismatch { expected: 3, got: t.dim() });
    }
    let tt = from_sym(t)?;
    Ok(classify_tern(&tt, o))
}

fn no_verdict(t: &Tern3, case: CaseId, gi: usize, w: Option<NegativeWitness>, o: &Options) -> Verdict {
    let w = w.or_else(|| find_negative_witness_tern(t, o.witness_bound));
    let certificate = match w {
        Some(w) => Certificate::NegativeWitness(w),
        None => Certificate::Uncertified(format!("no negative integer point with max-abs <= {}", o.witness_bound)),
    };
    Verdict {
        is_psd: false,
        is_pd: Tri::False,
        case,
        normalizer: group().elems[gi].clone(),
        certificate,
        zero_witness: None,
    }
}

pub fn classify_tern(t: &Tern3, o: &Options) -> Verdict {
    let fam = family_of(t);
    if fam == Family::DiagNegative {
        let i = [S1111, S2222, S3333].iter().position(|&s| t[s] < 0).unwrap();
        let mut x = vec![0i64; 3];
        x[i] = 1;
        let w = NegativeWitness { x, value: q(-1) };
        return no_verdict(t, CaseId::new(fam, None), 0, Some(w), o);
    }
    if matches!(fam, Family::Cor1 | Family::Cor4 | Family::Cor5) && !zero_diagonal_ok(t) {
        let (case, gi) = dispatch(t);
        return no_verdict(t, CaseId::new(case.family, Some("zero-diag")), gi, None, o);
    }
    if !matches!(fam, Family::Cor1 | Family::Cor4 | Family::Cor5) {
        if let Some(w) = necessary_pair_filter(t) {
            let (case, gi) = dispatch(t);
            return no_verdict(t, CaseId::new(case.family, Some("pair")), gi, Some(w), o);
        }
    }
    let quals = qualifying(fam, t);
    if quals.is_empty() {
        return not_covered(t);
    }
    let mut best: Option<(Tern3, usize, &'static str)> = None;
    for (img, gi) in &quals {
        if let Some(sub) = conditions(fam, img, o) {
            if best.as_ref().is_none_or(|(b, _, _)| img < b) {
                best = Some((*img, *gi, sub));
            }
        }
    }
    let Some((img, gi, sub)) = best else {
        let (_, gi) = quals.iter().min_by_key(|(img, _)| *img).copied().unwrap();
        return no_verdict(t, CaseId::new(fam, None), gi, None, o);
    };
    let case = CaseId::new(fam, Some(sub));
    let g = group().elems[gi].clone();
    let sym = to_sym(t);
    let sos = if matches!(fam, Family::Cor1 | Family::Cor4 | Family::Cor5) {
        zero_diagonal_sos(t, o)
    } else {
        sos::build_sos_normalized(case, &img).map(|c| c.compose(&g))
    };
    let certificate = match sos {
        Some(c) => Certificate::Sos(c),
        None => Certificate::CaseCitation(CaseCitation {
            case: case.to_string(),
            note: sos::citation_note(case).to_string(),
        }),
    };
    let (is_pd, zero_witness) = match pd_meta(fam, sub) {
        PdMeta::Pd => (Tri::True, None),
        PdMeta::NotPd => match zero_witness_for(t, &sym) {
            Some(z) => (Tri::False, Some(z)),
            None => (Tri::Unknown, None),
        },
    };
    Verdict { is_psd: true, is_pd, case, normalizer: g, certificate, zero_witness }
}

/// Certificate of the unit-diagonal lift, with the added fourth powers removed.
fn zero_diagonal_sos(t: &Tern3, o: &Options) -> Option<SosCertificate> {
    let diag = [S1111, S2222, S3333];
    let zero: Vec<usize> = (0..3).filter(|&a| t[diag[a]] == 0).collect();
    let mut lift = *t;
    for &a in &zero {
        lift[diag[a]] = 1;
    }
    let v = classify_tern(&lift, o);
    let Certificate::Sos(c) = v.certificate else { return None };
    let c = sos::lift_sos(&c, &zero)?;
    verify_sos(&c, &to_sym(t)).then_some(c)
}

fn not_covered(t: &Tern3) -> Verdict {
    let r = crate::oracle::sphere_min(t, 20, 200, 0);
    let is_psd = r.exact_witness.is_none();
    let certificate = match r.exact_witness {
        Some(w) => Certificate::NegativeWitness(w),
        None => Certificate::Uncertified(format!("oracle minimum {:.3e}", r.approx_min)),
    };
    Verdict {
        is_psd,
        is_pd: if is_psd { Tri::Unknown } else { Tri::False },
        case: CaseId::new(Family::NotCovered, None),
        normalizer: group().elems[0].clone(),
        certificate,
        zero_witness: None,
    }
}

/// Checks that a NO verdict's witness is exactly negative.
pub fn witness_verifies(t: &Tern3, v: &Verdict) -> bool {
    match &v.certificate {
        Certificate::NegativeWitness(w) => {
            let x = [w.x[0], w.x[1], w.x[2]];
            let val = eval_i64(t, &x);
            val < 0 && q(val) == w.value && w.value.is_negative()
        }
        _ => false,
    }
}
