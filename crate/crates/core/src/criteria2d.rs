//! Positive (semi-)definiteness of 2-dimensional quartic forms with unit
//! diagonal: the general inequalities and the ternary-entry criteria.

use num_traits::{One, Signed, Zero};

use crate::certificates::{find_negative_witness, find_zero_witness, Certificate, CaseCitation};
use crate::error::{Error, Result};
use crate::form::{q, SignedPerm, SymTensor4, Q};
use crate::verdict::{CaseId, Family, Tri, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criteria2dInput {
    pub t1112: Q,
    pub t1122: Q,
    pub t1222: Q,
}

impl Criteria2dInput {
    pub fn new(t1112: Q, t1122: Q, t1222: Q) -> Result<Self> {
        let c = Criteria2dInput { t1112, t1122, t1222 };
        c.check()?;
        Ok(c)
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(q(a), q(b), q(c))
    }

    fn check(&self) -> Result<()> {
        if [&self.t1112, &self.t1122, &self.t1222].iter().any(|t| t.abs() > Q::one()) {
            return Err(Error::Input("entries must satisfy |t| <= 1".into()));
        }
        Ok(())
    }

    pub fn from_tensor(t: &SymTensor4) -> Result<Self> {
        if t.dim() != 2 {
            return Err(Error::DimMismatch { expected: 2, got: t.dim() });
        }
        let e = t.entries();
        if !e[0].is_one() || !e[4].is_one() {
            return Err(Error::NonUnitDiagonal);
        }
        Self::new(e[1].clone(), e[2].clone(), e[3].clone())
    }

    pub fn to_tensor(&self) -> SymTensor4 {
        SymTensor4::new(2, vec![q(1), self.t1112.clone(), self.t1122.clone(), self.t1222.clone(), q(1)])
            .expect("five entries")
    }

    fn is_ternary(&self) -> bool {
        [&self.t1112, &self.t1122, &self.t1222]
            .iter()
            .all(|t| t.is_zero() || t.abs().is_one())
    }
}

/// (lhs, rhs) of the cubic-discriminant inequality lhs ≤ rhs.
fn cubic_sides(c: &Criteria2dInput) -> (Q, Q) {
    let (a, b, d) = (&c.t1112, &c.t1122, &c.t1222);
    let inner = b + q(2) * a * b * d - b * b * b - d * d - a * a;
    let lhs = q(27) * &inner * &inner;
    let base = q(1) - q(4) * a * d + q(3) * b * b;
    let rhs = &base * &base * &base;
    (lhs, rhs)
}

fn square_ineq(c: &Criteria2dInput) -> bool {
    let d = &c.t1112 - &c.t1222;
    &d * &d <= q(6) * &c.t1122 + q(2)
}

pub fn psd_2d_general(c: &Criteria2dInput) -> Result<bool> {
    c.check()?;
    let third = Q::new(1.into(), 3.into());
    let (lhs, rhs) = cubic_sides(c);
    Ok(c.t1122 >= -third && c.t1122 <= Q::one() && square_ineq(c) && lhs <= rhs)
}

pub fn pd_2d_general(c: &Criteria2dInput) -> Result<bool> {
    c.check()?;
    let third = Q::new(1.into(), 3.into());
    let b = &c.t1122;
    let branch1 = *b >= third
        && *b < Q::one()
        && q(2) * &c.t1112 * &c.t1112 + q(1) == q(3) * b
        && c.t1112 == c.t1222;
    let (lhs, rhs) = cubic_sides(c);
    let branch2 = *b > -third && *b <= Q::one() && square_ineq(c) && lhs < rhs;
    Ok(branch1 || branch2)
}

pub fn psd_2d_ternary(t1112: i8, t1122: i8, t1222: i8) -> bool {
    (t1112 == 0 && t1122 == 0 && t1222 == 0) || t1122 == 1
}

pub fn pd_2d_ternary(t1112: i8, t1122: i8, t1222: i8) -> bool {
    (t1112 == 0 && t1122 == 0 && t1222 == 0) || (t1122 == 1 && matches!(t1112 * t1222, 0 | -1))
}

pub fn classify_2d_ternary(c: &Criteria2dInput) -> Result<Verdict> {
    c.check()?;
    if !c.is_ternary() {
        return Err(Error::NotTernary);
    }
    let as_i8 = |v: &Q| -> i8 {
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    };
    let (a, b, d) = (as_i8(&c.t1112), as_i8(&c.t1122), as_i8(&c.t1222));
    let t = c.to_tensor();
    let psd = psd_2d_ternary(a, b, d);
    let pd = pd_2d_ternary(a, b, d);
    let sub = if b == 1 {
        "ii"
    } else if a == 0 && b == 0 && d == 0 {
        "zero"
    } else {
        "fail"
    };
    let case = CaseId::new(Family::L23, Some(sub));
    let normalizer = SignedPerm::identity(2);
    if !psd {
        let w = find_negative_witness(&t, 8).ok_or_else(|| Error::Input("no witness within bound 8".into()))?;
        return Ok(Verdict {
            is_psd: false,
            is_pd: Tri::False,
            case,
            normalizer,
            certificate: Certificate::NegativeWitness(w),
            zero_witness: None,
        });
    }
    let zero_witness = if pd { None } else { find_zero_witness(&t, None, 8) };
    Ok(Verdict {
        is_psd: true,
        is_pd: Tri::from_bool(pd),
        case,
        normalizer,
        certificate: Certificate::CaseCitation(CaseCitation {
            case: case.to_string(),
            note: "ternary-entry 2-dimensional criterion".into(),
        }),
        zero_witness,
    })
}
