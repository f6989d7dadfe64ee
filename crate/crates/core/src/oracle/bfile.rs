use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::enumerate::count_up_to;
use crate::error::{Error, Result};
use crate::family::Family;

use super::report::{Failure, VerificationReport};

/// An OEIS-style b-file: `index value` per line, `#` comments.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFile {
    entries: Vec<(u32, BigInt)>,
}

impl BFile {
    pub fn entries(&self) -> &[(u32, BigInt)] {
        &self.entries
    }

    pub fn read(path: impl AsRef<Path>) -> Result<BFile> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        text.parse()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.entries.last().map(|e| e.0)
    }
}

impl FromStr for BFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<BFile> {
        let mut entries: Vec<(u32, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let mut fields = body.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `index value`, got {body:?}")));
            };
            let index: u32 = a.parse().map_err(|_| err(format!("bad index {a:?}")))?;
            let value: BigInt = b.parse().map_err(|_| err(format!("bad value {b:?}")))?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(err(format!("index {index} does not follow {prev}")));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }
}

/// Compares the counts of `f` against every b-file entry with index at most
/// `limit` (default: all of them).
pub fn compare_bfile(f: Family, file: &BFile, limit: Option<u32>) -> VerificationReport {
    let mut r = VerificationReport::new(format!("b-file {f}"));
    let top = match (file.max_index(), limit) {
        (None, _) => return r,
        (Some(m), Some(l)) => m.min(l),
        (Some(m), None) => m,
    };
    let counts = count_up_to(f, top);
    for (n, expected) in file.entries().iter().take_while(|e| e.0 <= top) {
        let got = BigInt::from(counts[*n as usize].clone());
        r.check(&got == expected, || Failure {
            n: *n,
            k: f.k(),
            composition: None,
            message: format!("count {got}, b-file {expected}"),
        });
    }
    r.finish()
}
