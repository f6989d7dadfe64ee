//! Compositions whose parts are positive integers, optionally carrying a
//! prime mark on parts equal to one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single part. Only a part of value one may be marked (written `1'`).
///
/// Parts order by value first, then unmarked before marked, so `1 < 1' < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    value: u32,
    marked: bool,
}

impl Part {
    pub const ONE: Part = Part {
        value: 1,
        marked: false,
    };
    pub const MARKED_ONE: Part = Part {
        value: 1,
        marked: true,
    };

    /// Unmarked part. Panics on zero.
    pub fn plain(value: u32) -> Part {
        assert!(value >= 1, "parts must be positive");
        Part {
            value,
            marked: false,
        }
    }

    pub fn try_new(value: u32, marked: bool) -> Result<Part> {
        if value == 0 {
            return Err(Error::InvalidInput("parts must be positive".into()));
        }
        if marked && value != 1 {
            return Err(Error::InvalidInput(format!(
                "only the part 1 may be marked, got {value}'"
            )));
        }
        Ok(Part { value, marked })
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn is_marked(self) -> bool {
        self.marked
    }

    #[inline]
    pub fn is_unit(self) -> bool {
        self.value == 1
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "1'")
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Part> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value = digits
            .parse::<u32>()
            .map_err(|_| Error::InvalidInput(format!("bad part {s:?}")))?;
        Part::try_new(value, marked)
    }
}

/// An ordered sequence of parts. The weight is the sum of the part values;
/// a marked one contributes one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<Part>,
}

impl Composition {
    pub fn empty() -> Composition {
        Composition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<Part>) -> Composition {
        Composition { parts }
    }

    /// Unmarked composition from raw values; rejects zero parts.
    pub fn from_values(values: &[u32]) -> Result<Composition> {
        values
            .iter()
            .map(|&v| Part::try_new(v, false))
            .collect::<Result<Vec<_>>>()
            .map(Composition::new)
    }

    pub(crate) fn from_values_unchecked(values: impl IntoIterator<Item = u32>) -> Composition {
        Composition {
            parts: values.into_iter().map(Part::plain).collect(),
        }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn values(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.value).collect()
    }

    pub fn last(&self) -> Option<Part> {
        self.parts.last().copied()
    }

    pub fn has_marks(&self) -> bool {
        self.parts.iter().any(|p| p.marked)
    }

    /// Values of an unmarked composition, or a precondition error.
    pub(crate) fn plain_values(&self) -> Result<Vec<u32>> {
        if self.has_marks() {
            return Err(Error::InvalidInput(format!(
                "{} carries marked parts",
                self.list_form()
            )));
        }
        Ok(self.values())
    }

    /// Table shorthand: parts concatenated (`2112`), or the list form as
    /// soon as any part has two or more digits. The empty composition is `()`.
    pub fn shorthand(&self) -> String {
        if self.parts.is_empty() {
            return "()".to_string();
        }
        if self.parts.iter().any(|p| p.value >= 10) {
            return self.list_form();
        }
        self.parts.iter().map(Part::to_string).collect()
    }

    /// Comma separated parts, always unambiguous. The empty composition is `()`.
    pub fn list_form(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(Part::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shorthand())
    }
}

impl From<Vec<Part>> for Composition {
    fn from(parts: Vec<Part>) -> Self {
        Composition::new(parts)
    }
}

/// Accepts the list form `(2,1,1')`, bare `2,1,1'`, the digit shorthand
/// `211'`, and `()` or an empty string for the empty composition.
/// Parenthesised input is always a list, so `(12)` is the single part 12.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')'));
        let list = inner.is_some();
        let s = inner.unwrap_or(s).trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        if list || s.contains(',') || s.contains(' ') {
            return s
                .split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Part>>>()
                .map(Composition::new);
        }
        let mut parts = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            let value = ch
                .to_digit(10)
                .ok_or_else(|| Error::InvalidInput(format!("bad shorthand {s:?}")))?;
            let marked = chars.next_if_eq(&'\'').is_some();
            parts.push(Part::try_new(value, marked)?);
        }
        Ok(Composition::new(parts))
    }
}

/// Builds a composition from a literal list; `1'` is not expressible here,
/// use [`Part::MARKED_ONE`] or parsing for marked parts.
#[macro_export]
macro_rules! comp {
    () => { $crate::Composition::empty() };
    ($($v:expr),+ $(,)?) => {
        $crate::Composition::new(vec![$($crate::Part::plain($v)),+])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_switches_to_commas_for_large_parts() {
        assert_eq!(comp![2, 1, 1, 2].shorthand(), "2112");
        assert_eq!(comp![10, 1].shorthand(), "(10,1)");
        assert_eq!(comp![10].shorthand(), "(10)");
        assert_eq!(Composition::empty().shorthand(), "()");
    }

    #[test]
    fn parse_forms() {
        let c: Composition = "1'1'2".parse().unwrap();
        assert_eq!(
            c.parts(),
            &[Part::MARKED_ONE, Part::MARKED_ONE, Part::plain(2)]
        );
        assert_eq!(c.weight(), 4);
        assert_eq!(
            "(2,1,1,2)".parse::<Composition>().unwrap(),
            comp![2, 1, 1, 2]
        );
        assert_eq!("12,3".parse::<Composition>().unwrap(), comp![12, 3]);
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert!("2'".parse::<Composition>().is_err());
        assert!("0,1".parse::<Composition>().is_err());
        assert!("x".parse::<Composition>().is_err());
    }

    #[test]
    fn part_order() {
        assert!(Part::ONE < Part::MARKED_ONE);
        assert!(Part::MARKED_ONE < Part::plain(2));
    }
}
