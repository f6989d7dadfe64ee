//! Compositions tagged with the summand of a disjoint union they belong to.
//!
//! A [`SetLabel`] names one summand such as `2·CA≥k(n−k−2)`: a family, an
//! optional parity/last-part restriction, a weight offset relative to the
//! union's `n`, and the multiplicity of the summand. The union's `n` is never
//! stored; it is recovered as `weight + offset`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Part};
use crate::error::{Error, Result};
use crate::family::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subset {
    Whole,
    OddLength,
    EvenLength,
    /// Last part is an unmarked 1.
    LastOne,
    /// Last part is even.
    LastEven,
}

impl Subset {
    pub fn contains(self, c: &Composition) -> bool {
        match self {
            Subset::Whole => true,
            Subset::OddLength => c.len() % 2 == 1,
            Subset::EvenLength => c.len().is_multiple_of(2),
            Subset::LastOne => c.last() == Some(Part::ONE),
            Subset::LastEven => c.last().is_some_and(|p| p.value() % 2 == 0),
        }
    }

    fn superscript(self) -> &'static str {
        match self {
            Subset::Whole => "",
            Subset::OddLength => "^o",
            Subset::EvenLength => "^e",
            Subset::LastOne => "^1",
            Subset::LastEven => "^e",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetLabel {
    pub family: Family,
    pub subset: Subset,
    /// The summand is `family(n - offset)`.
    pub offset: u32,
    /// Number of copies of the summand in the union (1 or 2).
    pub multiplicity: u8,
}

impl SetLabel {
    pub const fn new(family: Family, subset: Subset, offset: u32) -> SetLabel {
        SetLabel {
            family,
            subset,
            offset,
            multiplicity: 1,
        }
    }

    pub const fn doubled(family: Family, subset: Subset, offset: u32) -> SetLabel {
        SetLabel {
            family,
            subset,
            offset,
            multiplicity: 2,
        }
    }

    pub fn whole(family: Family, offset: u32) -> SetLabel {
        SetLabel::new(family, Subset::Whole, offset)
    }

    pub fn contains(&self, c: &Composition) -> Result<bool> {
        Ok(self.subset.contains(c) && self.family.contains(c)?)
    }

    /// Concrete set name at union weight `n`, e.g. `CA≥3(5)`.
    pub fn at(&self, n: u32) -> String {
        let w = n as i64 - self.offset as i64;
        format!("{}{}({})", self.family, self.subset.superscript(), w)
    }

    /// Symbolic summand, e.g. `2·CA≥3(n−5)`.
    pub fn symbolic(&self) -> String {
        let mult = if self.multiplicity > 1 { "2·" } else { "" };
        let arg = if self.offset == 0 {
            "n".to_string()
        } else {
            format!("n−{}", self.offset)
        };
        format!("{mult}{}{}({arg})", self.family, self.subset.superscript())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TaggedComposition {
    pub comp: Composition,
    pub label: SetLabel,
    /// 1-based copy index, at most `label.multiplicity`.
    pub copy: u8,
}

impl TaggedComposition {
    pub fn new(comp: Composition, label: SetLabel) -> TaggedComposition {
        TaggedComposition {
            comp,
            label,
            copy: 1,
        }
    }

    pub fn with_copy(comp: Composition, label: SetLabel, copy: u8) -> TaggedComposition {
        TaggedComposition { comp, label, copy }
    }

    /// The weight of the union this element was drawn from.
    pub fn n(&self) -> u32 {
        self.comp.weight() + self.label.offset
    }

    /// Checks the copy index and that the composition lies in its summand.
    pub fn validate(&self) -> Result<()> {
        if self.copy == 0 || self.copy > self.label.multiplicity {
            return Err(Error::InvalidInput(format!(
                "copy {} of {}",
                self.copy,
                self.label.symbolic()
            )));
        }
        if !self.label.contains(&self.comp)? {
            return Err(Error::NotMember {
                composition: self.comp.list_form(),
                set: self.set_name(),
            });
        }
        Ok(())
    }

    pub fn set_name(&self) -> String {
        let base = self.label.at(self.n());
        if self.label.multiplicity > 1 {
            format!("{base} copy {}", self.copy)
        } else {
            base
        }
    }
}

impl fmt::Display for TaggedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∈ {}", self.comp, self.set_name())
    }
}
