//! Pairwise run encodings: CA≥k(n) ≅ P≥k(n) and CA≤k(n) ≅ Q≤k(n).
//!
//! Each pair `(a, b)` becomes a run of ones (unmarked when the first part is
//! larger, marked when the second is) followed by the remaining weight as
//! twos (Pell side) or one even part (Q side). A trailing unpaired part `c`
//! becomes `c` unmarked ones.

use crate::composition::{Composition, Part};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::tagged::SetLabel;

use super::require;

fn ones(out: &mut Vec<Part>, count: u32, marked: bool) {
    let p = if marked { Part::MARKED_ONE } else { Part::ONE };
    out.extend(std::iter::repeat_n(p, count as usize));
}

/// `(a, b) → (1^{a−b}, 2^b)` or `((1')^{b−a}, 2^a)`.
pub fn ca_ge_to_pell(k: u32, c: &Composition) -> Result<Composition> {
    let target = Family::pell_ge(k)?;
    require(&SetLabel::whole(Family::ca_ge(k), 0), c)?;
    let v = c.plain_values()?;
    let mut out = Vec::with_capacity(c.weight() as usize);
    let mut pairs = v.chunks_exact(2);
    for pair in pairs.by_ref() {
        let (a, b) = (pair[0], pair[1]);
        ones(&mut out, a.abs_diff(b), b > a);
        out.extend(std::iter::repeat_n(Part::plain(2), a.min(b) as usize));
    }
    if let [last] = pairs.remainder() {
        ones(&mut out, *last, false);
    }
    let out = Composition::new(out);
    debug_assert!(target.contains(&out).unwrap_or(false));
    Ok(out)
}

/// `(1^g, 2^h) → (g+h, h)`, `((1')^g, 2^h) → (h, g+h)`, trailing `1^f → f`.
pub fn pell_to_ca_ge(k: u32, p: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(Family::pell_ge(k)?, 0), p)?;
    let parts = p.parts();
    let mut out = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let unit = parts[i];
        if !unit.is_unit() {
            return Err(malformed(p));
        }
        let g = run_len(&parts[i..], |q| q == unit);
        i += g;
        let h = run_len(&parts[i..], |q| q.value() == 2);
        i += h;
        let (g, h) = (g as u32, h as u32);
        match (h, unit.is_marked()) {
            (0, false) if i == parts.len() => out.push(g),
            (0, _) => return Err(malformed(p)),
            (_, false) => out.extend([g + h, h]),
            (_, true) => out.extend([h, g + h]),
        }
    }
    Ok(Composition::from_values_unchecked(out))
}

/// `(a, b) → (1^{a−b}, 2b)`, `((1')^{b−a}, 2a)`, or `(2a)` when `a = b`.
pub fn ca_le_to_q(k: u32, c: &Composition) -> Result<Composition> {
    let target = Family::q_le(k)?;
    require(&SetLabel::whole(Family::ca_le(k)?, 0), c)?;
    let v = c.plain_values()?;
    let mut out = Vec::with_capacity(c.weight() as usize);
    let mut pairs = v.chunks_exact(2);
    for pair in pairs.by_ref() {
        let (a, b) = (pair[0], pair[1]);
        ones(&mut out, a.abs_diff(b), b > a);
        out.push(Part::plain(2 * a.min(b)));
    }
    if let [last] = pairs.remainder() {
        ones(&mut out, *last, false);
    }
    let out = Composition::new(out);
    debug_assert!(target.contains(&out).unwrap_or(false));
    Ok(out)
}

/// `(1^g, 2h) → (g+h, h)`, `((1')^g, 2h) → (h, g+h)`, `(2h) → (h, h)`,
/// trailing `1^f → f`.
pub fn q_to_ca_le(k: u32, q: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(Family::q_le(k)?, 0), q)?;
    let parts = q.parts();
    let mut out = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let first = parts[i];
        if !first.is_unit() {
            let h = first.value() / 2;
            out.extend([h, h]);
            i += 1;
            continue;
        }
        let g = run_len(&parts[i..], |p| p == first) as u32;
        i += g as usize;
        match parts.get(i) {
            None if !first.is_marked() => out.push(g),
            Some(even) if !even.is_unit() => {
                let h = even.value() / 2;
                if first.is_marked() {
                    out.extend([h, g + h]);
                } else {
                    out.extend([g + h, h]);
                }
                i += 1;
            }
            _ => return Err(malformed(q)),
        }
    }
    Ok(Composition::from_values_unchecked(out))
}

fn run_len(parts: &[Part], pred: impl Fn(Part) -> bool) -> usize {
    parts.iter().take_while(|&&p| pred(p)).count()
}

fn malformed(c: &Composition) -> Error {
    Error::Precondition(format!("malformed block structure in {}", c.list_form()))
}
