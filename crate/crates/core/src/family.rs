//! Constraint families and their membership predicates.
//!
//! The predicates here check the defining conditions directly on a finished
//! composition. The constructive enumerator in [`crate::enumerate`] never
//! calls them, and the brute-force oracle filters with nothing else.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Part};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Every composition.
    All,
    /// Pairs `(c_{2i-1}, c_{2i})` unequal.
    Ca,
    /// Pairs differ by at least `k`.
    CaGeK,
    /// Pairs differ by at most `k`.
    CaLeK,
    /// No two adjacent parts equal to 1.
    NoAdjacentOnes,
    /// Parts from `{1, 1', 2}` with run conditions, runs of ones at least `k`.
    PellGeK,
    /// Parts from `{1, 1', 2, 4, 6, ...}` with runs of ones at most `k`.
    QLeK,
    /// Pairs strictly decreasing.
    ArndtStrict,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::All,
        FamilyKind::Ca,
        FamilyKind::CaGeK,
        FamilyKind::CaLeK,
        FamilyKind::NoAdjacentOnes,
        FamilyKind::PellGeK,
        FamilyKind::QLeK,
        FamilyKind::ArndtStrict,
    ];

    pub fn takes_k(self) -> bool {
        matches!(
            self,
            FamilyKind::CaGeK | FamilyKind::CaLeK | FamilyKind::PellGeK | FamilyKind::QLeK
        )
    }

    /// Families whose alphabet includes the marked part `1'`.
    pub fn is_marked(self) -> bool {
        matches!(self, FamilyKind::PellGeK | FamilyKind::QLeK)
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::All => "all",
            FamilyKind::Ca => "ca",
            FamilyKind::CaGeK => "ca-ge",
            FamilyKind::CaLeK => "ca-le",
            FamilyKind::NoAdjacentOnes => "no11",
            FamilyKind::PellGeK => "pell-ge",
            FamilyKind::QLeK => "q-le",
            FamilyKind::ArndtStrict => "arndt",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its parameter. Construction validates `k`, so
/// every `Family` value is well formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    kind: FamilyKind,
    k: u32,
}

impl Family {
    pub const ALL: Family = Family {
        kind: FamilyKind::All,
        k: 0,
    };
    pub const CA: Family = Family {
        kind: FamilyKind::Ca,
        k: 0,
    };
    pub const NO_ADJACENT_ONES: Family = Family {
        kind: FamilyKind::NoAdjacentOnes,
        k: 0,
    };
    pub const ARNDT_STRICT: Family = Family {
        kind: FamilyKind::ArndtStrict,
        k: 0,
    };

    /// `k = 0` is accepted here and coincides with [`Family::ALL`].
    pub fn ca_ge(k: u32) -> Family {
        Family {
            kind: FamilyKind::CaGeK,
            k,
        }
    }

    pub fn ca_le(k: u32) -> Result<Family> {
        Family::new(FamilyKind::CaLeK, Some(k))
    }

    pub fn pell_ge(k: u32) -> Result<Family> {
        Family::new(FamilyKind::PellGeK, Some(k))
    }

    pub fn q_le(k: u32) -> Result<Family> {
        Family::new(FamilyKind::QLeK, Some(k))
    }

    pub fn new(kind: FamilyKind, k: Option<u32>) -> Result<Family> {
        match (kind.takes_k(), k) {
            (false, None) => Ok(Family { kind, k: 0 }),
            (false, Some(k)) => Err(Error::InvalidParameter {
                family: kind.name(),
                k,
            }),
            (true, None) => Err(Error::InvalidInput(format!("family {kind} requires k"))),
            (true, Some(0)) if kind != FamilyKind::CaGeK => Err(Error::InvalidParameter {
                family: kind.name(),
                k: 0,
            }),
            (true, Some(k)) => Ok(Family { kind, k }),
        }
    }

    pub fn kind(self) -> FamilyKind {
        self.kind
    }

    pub fn k(self) -> Option<u32> {
        self.kind.takes_k().then_some(self.k)
    }

    pub(crate) fn k_or_zero(self) -> u32 {
        self.k
    }

    pub fn is_marked(self) -> bool {
        self.kind.is_marked()
    }

    /// The condition on an odd/even pair, for the pair-structured families.
    pub fn pair_condition(self) -> Option<fn(u32, u32, u32) -> bool> {
        Some(match self.kind {
            FamilyKind::All => |_, _, _| true,
            FamilyKind::Ca => |a, b, _| a != b,
            FamilyKind::CaGeK => |a, b, k| a.abs_diff(b) >= k,
            FamilyKind::CaLeK => |a, b, k| a.abs_diff(b) <= k,
            FamilyKind::ArndtStrict => |a, b, _| a > b,
            _ => return None,
        })
    }

    /// Does `c` satisfy every defining condition of the family?
    ///
    /// Marked parts are an error for the unmarked families. The empty
    /// composition belongs to every family.
    pub fn contains(self, c: &Composition) -> Result<bool> {
        self.accepts(c.parts())
    }

    pub fn accepts(self, parts: &[Part]) -> Result<bool> {
        if !self.is_marked() && parts.iter().any(|p| p.is_marked()) {
            return Err(Error::InvalidInput(format!(
                "marked parts supplied to unmarked family {self}"
            )));
        }
        let k = self.k;
        Ok(match self.kind {
            FamilyKind::NoAdjacentOnes => {
                !parts.windows(2).any(|w| w[0].is_unit() && w[1].is_unit())
            }
            FamilyKind::PellGeK => pell_conditions(parts, k),
            FamilyKind::QLeK => q_conditions(parts, k),
            _ => {
                let cond = self.pair_condition().expect("pair family");
                parts
                    .chunks_exact(2)
                    .all(|pair| cond(pair[0].value(), pair[1].value(), k))
            }
        })
    }
}

/// Maximal runs of equal parts as `(part, length, is_last_run)`.
fn runs(parts: &[Part]) -> impl Iterator<Item = (Part, usize, bool)> + '_ {
    let mut start = 0;
    std::iter::from_fn(move || {
        if start >= parts.len() {
            return None;
        }
        let p = parts[start];
        let len = parts[start..].iter().take_while(|&&q| q == p).count();
        start += len;
        Some((p, len, start == parts.len()))
    })
}

fn no_mixed_ones(parts: &[Part]) -> bool {
    !parts
        .windows(2)
        .any(|w| w[0].is_unit() && w[1].is_unit() && w[0].is_marked() != w[1].is_marked())
}

fn pell_conditions(parts: &[Part], k: u32) -> bool {
    let (Some(first), Some(last)) = (parts.first(), parts.last()) else {
        return true;
    };
    parts.iter().all(|p| p.value() <= 2)
        && first.is_unit()
        && *last != Part::MARKED_ONE
        && no_mixed_ones(parts)
        && runs(parts).all(|(p, len, at_end)| !p.is_unit() || at_end || len >= k as usize)
}

fn q_conditions(parts: &[Part], k: u32) -> bool {
    let Some(last) = parts.last() else {
        return true;
    };
    parts.iter().all(|p| p.is_unit() || p.value() % 2 == 0)
        && *last != Part::MARKED_ONE
        && no_mixed_ones(parts)
        && runs(parts).all(|(p, len, at_end)| !p.is_unit() || at_end || len <= k as usize)
}

/// Convenience wrapper for [`Family::contains`].
pub fn is_member(f: Family, c: &Composition) -> Result<bool> {
    f.contains(c)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::All => write!(f, "C"),
            FamilyKind::Ca => write!(f, "CA"),
            FamilyKind::CaGeK => write!(f, "CA≥{}", self.k),
            FamilyKind::CaLeK => write!(f, "CA≤{}", self.k),
            FamilyKind::NoAdjacentOnes => write!(f, "C_no11"),
            FamilyKind::PellGeK => write!(f, "P≥{}", self.k),
            FamilyKind::QLeK => write!(f, "Q≤{}", self.k),
            FamilyKind::ArndtStrict => write!(f, "Arndt"),
        }
    }
}
