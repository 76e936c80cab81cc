//! Classification outcomes and their JSON form.

use std::fmt;

use serde_json::{json, Value};

use crate::certificates::{zero_json, Certificate, ZeroWitness};
use crate::form::SignedPerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        }
    }

    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L23,
    T31,
    T33,
    T35,
    T38,
    T39,
    T310,
    T312,
    T313,
    T314,
    T315,
    R1,
    Cor1,
    Cor4,
    Cor5,
    DiagNegative,
    NotCovered,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::L23 => "L2.3",
            Family::T31 => "T3.1",
            Family::T33 => "T3.3",
            Family::T35 => "T3.5",
            Family::T38 => "T3.8",
            Family::T39 => "T3.9",
            Family::T310 => "T3.10",
            Family::T312 => "T3.12",
            Family::T313 => "T3.13",
            Family::T314 => "T3.14",
            Family::T315 => "T3.15",
            Family::R1 => "R1",
            Family::Cor1 => "COR1",
            Family::Cor4 => "COR4",
            Family::Cor5 => "COR5",
            Family::DiagNegative => "DIAG-NEG",
            Family::NotCovered => "NOT-COVERED",
        }
    }
}

/// Matched family plus the satisfied subcase, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub family: Family,
    pub subcase: Option<&'static str>,
}

impl CaseId {
    pub fn new(family: Family, subcase: Option<&'static str>) -> Self {
        CaseId { family, subcase }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.subcase {
            Some(s) => write!(f, "{}.{}", self.family.as_str(), s),
            None => f.write_str(self.family.as_str()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub is_psd: bool,
    pub is_pd: Tri,
    pub case: CaseId,
    pub normalizer: SignedPerm,
    pub certificate: Certificate,
    /// Supplements a PSD-not-PD verdict.
    pub zero_witness: Option<ZeroWitness>,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "is_psd": self.is_psd,
            "is_pd": self.is_pd.as_str(),
            "case": self.case.to_string(),
            "subcase": self.case.subcase,
            "normalizer": {"perm": self.normalizer.perm.iter().map(|p| p + 1).collect::<Vec<_>>(), "signs": self.normalizer.signs},
            "certificate": self.certificate.to_json(),
        });
        if let Some(z) = &self.zero_witness {
            v["zero_witness"] = zero_json(z);
        }
        v
    }

    pub fn consistent(&self) -> bool {
        (self.is_pd != Tri::True || self.is_psd)
            && (self.is_psd || self.is_pd == Tri::False)
            && (self.is_psd || matches!(self.certificate, Certificate::NegativeWitness(_)))
    }
}
