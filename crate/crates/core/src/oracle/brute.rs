//! Generate-and-filter ground truth. Nothing here touches the constructive
//! enumerator: the universe is every composition of `n` (or every word over
//! the marked alphabet of weight `n`) and membership is [`Family::accepts`].

use crate::composition::{Composition, Part};
use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};

pub const DEFAULT_UNMARKED_BOUND: u32 = 24;
pub const DEFAULT_MARKED_BOUND: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Universe {
    Plain,
    /// Words over `{1, 1', 2}`.
    Pell,
    /// Words over `{1, 1', 2, 4, 6, …}`.
    Q,
}

fn universe(f: Family) -> Universe {
    match f.kind() {
        FamilyKind::PellGeK => Universe::Pell,
        FamilyKind::QLeK => Universe::Q,
        _ => Universe::Plain,
    }
}

/// Brute-force enumerator with explicit size bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub unmarked_bound: u32,
    pub marked_bound: u32,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            unmarked_bound: DEFAULT_UNMARKED_BOUND,
            marked_bound: DEFAULT_MARKED_BOUND,
        }
    }
}

impl BruteForce {
    pub fn with_bounds(unmarked_bound: u32, marked_bound: u32) -> BruteForce {
        BruteForce {
            unmarked_bound,
            marked_bound,
        }
    }

    fn check_bound(&self, u: Universe, n: u32) -> Result<()> {
        let bound = match u {
            Universe::Plain => self.unmarked_bound,
            _ => self.marked_bound,
        };
        if n > bound {
            Err(Error::BoundExceeded { n, bound })
        } else {
            Ok(())
        }
    }

    /// Members of `f` at weight `n`, sorted in descending order.
    pub fn enumerate(&self, f: Family, n: u32) -> Result<Vec<Composition>> {
        let u = universe(f);
        self.check_bound(u, n)?;
        let mut out = Vec::new();
        let mut err = None;
        for_each_in_universe(u, n, |parts| match f.accepts(parts) {
            Ok(true) => out.push(Composition::new(parts.to_vec())),
            Ok(false) => {}
            Err(e) => err = Some(e),
        });
        if let Some(e) = err {
            return Err(e);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    pub fn count(&self, f: Family, n: u32) -> Result<u64> {
        Ok(self.counts(&[f], n)?[0])
    }

    /// Counts for several families at weight `n` in a single sweep of each
    /// universe involved.
    pub fn counts(&self, families: &[Family], n: u32) -> Result<Vec<u64>> {
        let mut totals = vec![0u64; families.len()];
        for u in [Universe::Plain, Universe::Pell, Universe::Q] {
            let idx: Vec<usize> = (0..families.len())
                .filter(|&i| universe(families[i]) == u)
                .collect();
            if idx.is_empty() {
                continue;
            }
            self.check_bound(u, n)?;
            for_each_in_universe(u, n, |parts| {
                for &i in &idx {
                    if families[i].accepts(parts).unwrap_or(false) {
                        totals[i] += 1;
                    }
                }
            });
        }
        Ok(totals)
    }

    /// Size of the whole universe over `{1, 1', 2}` at weight `n`.
    pub fn pell_words(&self, n: u32) -> Result<u64> {
        self.check_bound(Universe::Pell, n)?;
        let mut total = 0;
        for_each_in_universe(Universe::Pell, n, |_| total += 1);
        Ok(total)
    }
}

/// Brute-force enumeration at the default bounds.
pub fn brute_force_enumerate(f: Family, n: u32) -> Result<Vec<Composition>> {
    BruteForce::default().enumerate(f, n)
}

fn for_each_in_universe(u: Universe, n: u32, mut visit: impl FnMut(&[Part])) {
    match u {
        Universe::Plain => for_each_composition(n, visit),
        Universe::Pell => {
            let alphabet = [Part::ONE, Part::MARKED_ONE, Part::plain(2)];
            words(n, &|_| alphabet.to_vec(), &mut Vec::new(), &mut visit);
        }
        Universe::Q => {
            let alphabet = |r: u32| {
                let mut a = vec![Part::ONE, Part::MARKED_ONE];
                a.extend((2..=r).step_by(2).map(Part::plain));
                a
            };
            words(n, &alphabet, &mut Vec::new(), &mut visit);
        }
    }
}

/// All `2^(n−1)` compositions of `n`: bit `i` of the mask cuts after unit `i+1`.
fn for_each_composition(n: u32, mut visit: impl FnMut(&[Part])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut buf = Vec::with_capacity(n as usize);
    for mask in 0u64..(1u64 << (n - 1)) {
        buf.clear();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                buf.push(Part::plain(run));
                run = 1;
            } else {
                run += 1;
            }
        }
        buf.push(Part::plain(run));
        visit(&buf);
    }
}

fn words(
    remaining: u32,
    alphabet: &dyn Fn(u32) -> Vec<Part>,
    prefix: &mut Vec<Part>,
    visit: &mut dyn FnMut(&[Part]),
) {
    if remaining == 0 {
        visit(prefix);
        return;
    }
    for p in alphabet(remaining) {
        if p.value() <= remaining {
            prefix.push(p);
            words(remaining - p.value(), alphabet, prefix, visit);
            prefix.pop();
        }
    }
}
