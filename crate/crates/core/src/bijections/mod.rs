//! Executable forward and backward maps for the constructive bijections.
//!
//! Every map rejects inputs outside its domain. [`BijectionId`] wraps each
//! pair of maps behind a uniform interface on [`TaggedComposition`]s so the
//! oracle can audit them generically.

mod encode;
mod parity;
mod q_split;
mod rewrite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use encode::{ca_ge_to_pell, ca_le_to_q, pell_to_ca_ge, q_to_ca_le};
pub use parity::{
    ca_even_backward, ca_even_forward, ca_ge_even_backward, ca_ge_even_codomain, ca_ge_even_domain,
    ca_ge_even_forward, ca_ge_odd_backward, ca_ge_odd_forward, ca_odd_backward, ca_odd_forward,
};
pub use q_split::{
    q_last1_backward, q_last1_forward, q_last_even_backward, q_last_even_codomain,
    q_last_even_domain, q_last_even_forward,
};
pub use rewrite::{ca_to_no11, no11_to_ca};

use crate::composition::Composition;
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::tagged::{SetLabel, Subset, TaggedComposition};

pub(crate) fn require(label: &SetLabel, c: &Composition) -> Result<()> {
    if label.contains(c)? {
        Ok(())
    } else {
        Err(Error::NotMember {
            composition: c.list_form(),
            set: label.symbolic(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BijectionName {
    /// `CA^o(n) ≅ CA(n−1)`
    CaOddSplit,
    /// `CA^e(n) ≅ CA(n−2) ∪ CA(n−3)`
    CaEvenSplit,
    /// `CA(n) ≅ C_no11(n)`
    CaToNo11,
    /// `CA≥k^o(n) ≅ CA≥k(n−1)`
    CaGeOddSplit,
    /// `CA≥k^e(n) ∪ CA≥k(n−3) ≅ CA≥k(n−2) ∪ 2·CA≥k(n−k−2)`
    CaGeEvenSplit,
    /// `CA≥k(n) ≅ P≥k(n)`
    CaGeToPell,
    /// `CA≤k(n) ≅ Q≤k(n)`
    CaLeToQ,
    /// `Q^1≤k(n) ≅ Q≤k(n−1)`
    QLast1,
    /// `Q^e≤k(n) ∪ 2·Q≤k(n−k−3) ≅ 2·Q≤k(n−2)`
    QLastEven,
}

impl BijectionName {
    pub const ALL: [BijectionName; 9] = [
        BijectionName::CaOddSplit,
        BijectionName::CaEvenSplit,
        BijectionName::CaToNo11,
        BijectionName::CaGeOddSplit,
        BijectionName::CaGeEvenSplit,
        BijectionName::CaGeToPell,
        BijectionName::CaLeToQ,
        BijectionName::QLast1,
        BijectionName::QLastEven,
    ];

    pub fn takes_k(self) -> bool {
        !matches!(
            self,
            BijectionName::CaOddSplit | BijectionName::CaEvenSplit | BijectionName::CaToNo11
        )
    }

    /// Whether either side uses the marked alphabets.
    pub fn is_marked(self) -> bool {
        matches!(
            self,
            BijectionName::CaGeToPell
                | BijectionName::CaLeToQ
                | BijectionName::QLast1
                | BijectionName::QLastEven
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BijectionName::CaOddSplit => "ca-odd",
            BijectionName::CaEvenSplit => "ca-even",
            BijectionName::CaToNo11 => "ca-no11",
            BijectionName::CaGeOddSplit => "ca-ge-odd",
            BijectionName::CaGeEvenSplit => "ca-ge-even",
            BijectionName::CaGeToPell => "ca-ge-pell",
            BijectionName::CaLeToQ => "ca-le-q",
            BijectionName::QLast1 => "q-last1",
            BijectionName::QLastEven => "q-last-even",
        }
    }
}

impl FromStr for BijectionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<BijectionName> {
        BijectionName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown bijection {s:?}")))
    }
}

impl fmt::Display for BijectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bijection together with its parameter `k` where it has one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BijectionId {
    name: BijectionName,
    k: u32,
}

impl BijectionId {
    pub const CA_ODD_SPLIT: BijectionId = BijectionId {
        name: BijectionName::CaOddSplit,
        k: 1,
    };
    pub const CA_EVEN_SPLIT: BijectionId = BijectionId {
        name: BijectionName::CaEvenSplit,
        k: 1,
    };
    pub const CA_TO_NO11: BijectionId = BijectionId {
        name: BijectionName::CaToNo11,
        k: 1,
    };

    pub fn new(name: BijectionName, k: Option<u32>) -> Result<BijectionId> {
        match (name.takes_k(), k) {
            (false, None) => Ok(BijectionId { name, k: 1 }),
            (true, Some(k)) if k >= 1 => Ok(BijectionId { name, k }),
            (true, None) => Err(Error::InvalidInput(format!("bijection {name} requires k"))),
            (_, Some(k)) => Err(Error::InvalidParameter {
                family: name.as_str(),
                k,
            }),
        }
    }

    /// Shorthand for parameterised bijections; panics on `k = 0`.
    pub fn with_k(name: BijectionName, k: u32) -> BijectionId {
        BijectionId::new(name, Some(k)).expect("valid bijection parameter")
    }

    pub fn name(self) -> BijectionName {
        self.name
    }

    pub fn k(self) -> Option<u32> {
        self.name.takes_k().then_some(self.k)
    }

    /// Smallest union weight at which the correspondence is a bijection.
    pub fn min_n(self) -> u32 {
        match self.name {
            BijectionName::CaOddSplit | BijectionName::CaGeOddSplit | BijectionName::QLast1 => 1,
            BijectionName::CaEvenSplit
            | BijectionName::CaGeEvenSplit
            | BijectionName::QLastEven => 3,
            _ => 0,
        }
    }

    /// Summands of the left-hand side.
    pub fn domain_labels(self) -> Vec<SetLabel> {
        let k = self.k;
        match self.name {
            BijectionName::CaOddSplit => vec![SetLabel::new(Family::CA, Subset::OddLength, 0)],
            BijectionName::CaEvenSplit => vec![SetLabel::new(Family::CA, Subset::EvenLength, 0)],
            BijectionName::CaToNo11 => vec![SetLabel::whole(Family::CA, 0)],
            BijectionName::CaGeOddSplit => {
                vec![SetLabel::new(Family::ca_ge(k), Subset::OddLength, 0)]
            }
            BijectionName::CaGeEvenSplit => ca_ge_even_domain(k).to_vec(),
            BijectionName::CaGeToPell => vec![SetLabel::whole(Family::ca_ge(k), 0)],
            BijectionName::CaLeToQ => vec![SetLabel::whole(ca_le(k), 0)],
            BijectionName::QLast1 => vec![SetLabel::new(q_le(k), Subset::LastOne, 0)],
            BijectionName::QLastEven => q_last_even_domain(k).expect("k >= 1").to_vec(),
        }
    }

    /// Summands of the right-hand side.
    pub fn codomain_labels(self) -> Vec<SetLabel> {
        let k = self.k;
        match self.name {
            BijectionName::CaOddSplit => vec![SetLabel::whole(Family::CA, 1)],
            BijectionName::CaEvenSplit => {
                vec![
                    SetLabel::whole(Family::CA, 2),
                    SetLabel::whole(Family::CA, 3),
                ]
            }
            BijectionName::CaToNo11 => vec![SetLabel::whole(Family::NO_ADJACENT_ONES, 0)],
            BijectionName::CaGeOddSplit => vec![SetLabel::whole(Family::ca_ge(k), 1)],
            BijectionName::CaGeEvenSplit => ca_ge_even_codomain(k).to_vec(),
            BijectionName::CaGeToPell => vec![SetLabel::whole(pell_ge(k), 0)],
            BijectionName::CaLeToQ => vec![SetLabel::whole(q_le(k), 0)],
            BijectionName::QLast1 => vec![SetLabel::whole(q_le(k), 1)],
            BijectionName::QLastEven => vec![q_last_even_codomain(k).expect("k >= 1")],
        }
    }

    /// Every element of the left-hand union at weight `n`, copies included.
    pub fn domain(self, n: u32) -> Vec<TaggedComposition> {
        union_elements(&self.domain_labels(), n)
    }

    /// Every element of the right-hand union at weight `n`, copies included.
    pub fn codomain(self, n: u32) -> Vec<TaggedComposition> {
        union_elements(&self.codomain_labels(), n)
    }

    pub fn forward(self, x: &TaggedComposition) -> Result<TaggedComposition> {
        if !self.domain_labels().contains(&x.label) {
            return Err(Error::InvalidInput(format!(
                "{} is not a domain summand of {}",
                x.label.symbolic(),
                self
            )));
        }
        let k = self.k;
        let single = |c: Composition| TaggedComposition::new(c, self.codomain_labels()[0]);
        Ok(match self.name {
            BijectionName::CaOddSplit => single(ca_odd_forward(&x.comp)?),
            BijectionName::CaEvenSplit => ca_even_forward(&x.comp)?,
            BijectionName::CaToNo11 => single(ca_to_no11(&x.comp)?),
            BijectionName::CaGeOddSplit => single(ca_ge_odd_forward(k, &x.comp)?),
            BijectionName::CaGeEvenSplit => ca_ge_even_forward(k, x)?,
            BijectionName::CaGeToPell => single(ca_ge_to_pell(k, &x.comp)?),
            BijectionName::CaLeToQ => single(ca_le_to_q(k, &x.comp)?),
            BijectionName::QLast1 => single(q_last1_forward(k, &x.comp)?),
            BijectionName::QLastEven => q_last_even_forward(k, x)?,
        })
    }

    pub fn backward(self, y: &TaggedComposition) -> Result<TaggedComposition> {
        if !self.codomain_labels().contains(&y.label) {
            return Err(Error::InvalidInput(format!(
                "{} is not a codomain summand of {}",
                y.label.symbolic(),
                self
            )));
        }
        let k = self.k;
        let single = |c: Composition| TaggedComposition::new(c, self.domain_labels()[0]);
        Ok(match self.name {
            BijectionName::CaOddSplit => single(ca_odd_backward(&y.comp)?),
            BijectionName::CaEvenSplit => single(ca_even_backward(y)?),
            BijectionName::CaToNo11 => single(no11_to_ca(&y.comp)?),
            BijectionName::CaGeOddSplit => single(ca_ge_odd_backward(k, &y.comp)?),
            BijectionName::CaGeEvenSplit => ca_ge_even_backward(k, y)?,
            BijectionName::CaGeToPell => single(pell_to_ca_ge(k, &y.comp)?),
            BijectionName::CaLeToQ => single(q_to_ca_le(k, &y.comp)?),
            BijectionName::QLast1 => single(q_last1_backward(k, &y.comp)?),
            BijectionName::QLastEven => q_last_even_backward(k, y)?,
        })
    }
}

fn ca_le(k: u32) -> Family {
    Family::ca_le(k).expect("k >= 1")
}

fn pell_ge(k: u32) -> Family {
    Family::pell_ge(k).expect("k >= 1")
}

fn q_le(k: u32) -> Family {
    Family::q_le(k).expect("k >= 1")
}

fn union_elements(labels: &[SetLabel], n: u32) -> Vec<TaggedComposition> {
    let mut out = Vec::new();
    for label in labels {
        let Some(w) = n.checked_sub(label.offset) else {
            continue;
        };
        let members: Vec<Composition> = enumerate(label.family, w)
            .into_iter()
            .filter(|c| label.subset.contains(c))
            .collect();
        for copy in 1..=label.multiplicity {
            out.extend(
                members
                    .iter()
                    .map(|c| TaggedComposition::with_copy(c.clone(), *label, copy)),
            );
        }
    }
    out
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{} (k={k})", self.name),
            None => write!(f, "{}", self.name),
        }
    }
}
